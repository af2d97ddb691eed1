use serde::Serialize;

use super::form::BinaryForm;
use crate::error::Result;

/// All points of P^1 sharing the same pair of multiplicities `(m5, m2)`
/// within one pair of squarefree factors, recorded by the squarefree form
/// vanishing exactly there. `locus.degree()` points over the algebraic closure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PointClass {
    pub m5: usize,
    pub m2: usize,
    pub locus: BinaryForm,
}

impl PointClass {
    pub fn count(&self) -> usize {
        self.locus.degree()
    }

    /// Order of vanishing of `F5^2 * F2`, which is also the Hilbert-Mumford weight.
    pub fn weight(&self) -> usize {
        2 * self.m5 + self.m2
    }
}

/// Multiplicity structure of a pair `(F5, F2)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootProfile {
    /// `(multiplicity, degree of the squarefree factor)` for F5
    pub f5_parts: Vec<(usize, usize)>,
    pub f2_parts: Vec<(usize, usize)>,
    /// `(m5, m2, count)` over shared roots
    pub common: Vec<(usize, usize, usize)>,
    pub classes: Vec<PointClass>,
}

impl RootProfile {
    /// Sorted `(m5, m2, count)` key with classes of equal multiplicities merged.
    pub fn shape(&self) -> Vec<(usize, usize, usize)> {
        let mut acc: Vec<(usize, usize, usize)> = Vec::new();
        for c in &self.classes {
            match acc.iter_mut().find(|(a, b, _)| *a == c.m5 && *b == c.m2) {
                Some(e) => e.2 += c.count(),
                None => acc.push((c.m5, c.m2, c.count())),
            }
        }
        acc.sort_by(|x, y| y.cmp(x));
        acc
    }

    /// Descending multiset of `2*m5(p) + m2(p)` over the support of `F5*F2`.
    pub fn type_vector(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self
            .classes
            .iter()
            .flat_map(|c| std::iter::repeat(c.weight()).take(c.count()))
            .collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    pub fn max_weight(&self) -> Option<&PointClass> {
        self.classes.iter().max_by_key(|c| c.weight())
    }
}

/// Multiplicity structure read from squarefree decompositions and pairwise gcds.
/// Degrees are checked; the forms must be nonzero.
pub fn root_profile(f5: &BinaryForm, f2: &BinaryForm) -> Result<RootProfile> {
    f5.check_degree(5)?;
    f2.check_degree(2)?;
    profile_of(f5, f2)
}

pub(crate) fn profile_of(f: &BinaryForm, g: &BinaryForm) -> Result<RootProfile> {
    let sf = f.squarefree_decomposition()?;
    let sg = g.squarefree_decomposition()?;
    let mut classes = Vec::new();
    let mut common = Vec::new();
    let mut g_rest: Vec<BinaryForm> = sg.iter().map(|(_, q)| q.clone()).collect();
    for (m5, p) in &sf {
        let mut rest = p.clone();
        for ((m2, q), q_rest) in sg.iter().zip(g_rest.iter_mut()) {
            let shared = p.gcd(q);
            if shared.degree() > 0 {
                common.push((*m5, *m2, shared.degree()));
                rest = rest.exact_div(&shared);
                *q_rest = q_rest.exact_div(&shared);
                classes.push(PointClass { m5: *m5, m2: *m2, locus: shared });
            }
        }
        if rest.degree() > 0 {
            classes.push(PointClass { m5: *m5, m2: 0, locus: rest.canonical() });
        }
    }
    for ((m2, _), rest) in sg.iter().zip(g_rest) {
        if rest.degree() > 0 {
            classes.push(PointClass { m5: 0, m2: *m2, locus: rest.canonical() });
        }
    }
    classes.sort_by(|a, b| (b.weight(), b.m5, b.m2).cmp(&(a.weight(), a.m5, a.m2)));
    common.sort_by(|x, y| y.cmp(x));
    Ok(RootProfile {
        f5_parts: sf.iter().map(|(m, p)| (*m, p.degree())).collect(),
        f2_parts: sg.iter().map(|(m, p)| (*m, p.degree())).collect(),
        common,
        classes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn bf(c: &[i64]) -> BinaryForm {
        BinaryForm::from_ints(c)
    }

    #[test]
    fn generic_pair() {
        // t(t-1)(t+1)(t-2)(t+2) and (t-3)(t+3), dehomogenized at x1 = 1
        let f5 = bf(&[1, 0, -5, 0, 4, 0]);
        let f2 = bf(&[1, 0, -9]);
        let p = root_profile(&f5, &f2).unwrap();
        assert_eq!(p.f5_parts, vec![(1, 5)]);
        assert_eq!(p.f2_parts, vec![(1, 2)]);
        assert!(p.common.is_empty());
        assert_eq!(p.type_vector(), vec![2, 2, 2, 2, 2, 1, 1]);
    }

    #[test]
    fn double_common_root_at_infinity() {
        let f5 = bf(&[0, 0, 1, 0, 0, 0]); // x0^3 x1^2
        let f2 = bf(&[0, 0, 1]); // x1^2
        let p = root_profile(&f5, &f2).unwrap();
        assert_eq!(p.common, vec![(2, 2, 1)]);
        assert_eq!(p.shape(), vec![(3, 0, 1), (2, 2, 1)]);
    }

    #[test]
    fn double_root_against_simple_root() {
        // x0^2 * (x0^3 - 2 x1^3), F2 = x0 x1
        let cubic = bf(&[1, 0, 0, -2]);
        let f5 = BinaryForm::x0().pow(2).mul(&cubic);
        let f2 = bf(&[0, 1, 0]);
        let p = root_profile(&f5, &f2).unwrap();
        assert!(p.common.contains(&(2, 1, 1)));
        assert_eq!(p.shape(), vec![(2, 1, 1), (1, 0, 3), (0, 1, 1)]);
    }

    #[test]
    fn wrong_degree() {
        assert!(root_profile(&bf(&[1, 0]), &bf(&[1, 0, 1])).is_err());
    }

    #[test]
    fn scaling_leaves_profile_unchanged() {
        let f5 = bf(&[1, 2, 0, 0, 3, 1]);
        let f2 = bf(&[1, -1, 0]);
        let a = root_profile(&f5, &f2).unwrap();
        let b = root_profile(&f5.scale(&q(-7)), &f2.scale(&q(3))).unwrap();
        assert_eq!(a, b);
    }
}
