//! The stratification of the discriminant by orthogonal sets of short
//! classes, and its relation to the nineteen cases.

use serde::Serialize;

use super::orbits::{
    canonical_set, from_signed, is_orthogonal_short_set, orthogonal_short_sets, orbits,
    reference_representatives, wd5_group,
};
use super::space::DIM;
use crate::binforms::CaseId;
use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Stratum {
    /// number of orthogonal classes, equal to the number of nodes
    pub k: usize,
    /// index among the strata of depth `k`, from 1
    pub r: usize,
    pub label: String,
    pub tuple: Vec<[i8; DIM]>,
}

pub fn strata() -> Vec<Stratum> {
    (1..=4)
        .flat_map(|k| {
            reference_representatives(k).into_iter().enumerate().map(move |(i, tuple)| Stratum {
                k,
                r: i + 1,
                label: format!("Δ{}^({})", k, i + 1),
                tuple,
            })
        })
        .collect()
}

/// `(k, r)` of the stratum containing the case; `None` for the smooth
/// cases 1-3 and for the cusp.
pub fn stratum_index(case: CaseId) -> Option<(usize, usize)> {
    use CaseId::*;
    Some(match case {
        C1 | C2 | C3 | Cusp => return None,
        C4 => (1, 1),
        C5 | C6 | C7 => (1, 2),
        C8 => (2, 1),
        C8Star => (2, 2),
        C9 | C11 => (2, 3),
        C10 | C12 => (2, 4),
        C13 => (3, 1),
        C13Star => (3, 2),
        C14 | C15 => (3, 3),
        C16 => (4, 1),
        C17 => (4, 2),
    })
}

pub fn stratum_of_case(case: CaseId) -> Option<Stratum> {
    let (k, r) = stratum_index(case)?;
    strata().into_iter().find(|s| s.k == k && s.r == r)
}

#[derive(Debug, Clone, Serialize)]
pub struct StrataReport {
    /// every tuple is an orthogonal set of short classes
    pub tuples_valid: bool,
    /// strata of each depth lie in distinct `W(D5)`-orbits that exhaust them
    pub one_stratum_per_orbit: bool,
    /// cases whose stratum depth differs from their number of nodes
    pub depth_mismatches: Vec<CaseId>,
    pub pass: bool,
}

pub fn strata_report() -> Result<StrataReport> {
    let all = strata();
    let tuples_valid = all.iter().all(|s| {
        let v: Vec<_> = s.tuple.iter().map(from_signed).collect();
        v.len() == s.k && is_orthogonal_short_set(&v)
    });
    let mut one_stratum_per_orbit = true;
    for k in 1..=4 {
        let orbs = orbits(wd5_group(), &orthogonal_short_sets(k))?;
        let mut hit = vec![0usize; orbs.len()];
        for s in all.iter().filter(|s| s.k == k) {
            let key = canonical_set(&s.tuple.iter().map(from_signed).collect::<Vec<_>>());
            match orbs.iter().position(|o| o.members.binary_search(&key).is_ok()) {
                Some(i) => hit[i] += 1,
                None => one_stratum_per_orbit = false,
            }
        }
        one_stratum_per_orbit &= hit.iter().all(|&h| h == 1);
    }
    let depth_mismatches: Vec<CaseId> = CaseId::STABLE
        .iter()
        .copied()
        .filter(|c| {
            let nodes = usize::from(c.row().expect("stable").nodes);
            stratum_index(*c).map_or(0, |(k, _)| k) != nodes
        })
        .collect();
    let pass = tuples_valid && one_stratum_per_orbit && depth_mismatches.is_empty();
    Ok(StrataReport { tuples_valid, one_stratum_per_orbit, depth_mismatches, pass })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strata_are_consistent() {
        let r = strata_report().unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!(strata().len(), 11);
    }

    #[test]
    fn case_lookup() {
        assert_eq!(stratum_of_case(CaseId::C8Star).unwrap().label, "Δ2^(2)");
        assert_eq!(stratum_of_case(CaseId::C17).unwrap().tuple.len(), 4);
        assert!(stratum_of_case(CaseId::C2).is_none());
    }
}
