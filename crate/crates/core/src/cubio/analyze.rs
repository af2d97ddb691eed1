//! From an explicit cubic and two skew lines on it to the full report.

use serde::Serialize;

use super::cubic::{CubicForm, ProjLine};
use super::normalize::{bordered_determinant, extract_f5_f2, normalize, NormalizedCubic};
use crate::binforms::{classify_case, stability, BinaryForm, CaseId, PairCase, StabilityVerdict};
use crate::error::{Error, Result};
use crate::f3orbits::stratum_index;
use crate::kodaira::{fiber_configuration, FiberConfiguration};
use crate::lattices::{picard_row, shioda_tate_check, ShiodaTateReport};
use crate::rational::q;

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub f5: BinaryForm,
    pub f2: BinaryForm,
    pub normal_form: NormalizedCubic,
    /// `det [[A00, A01, B0], [A01, A11, B1], [B0, B1, 0]] = -F5`
    pub bordered_identity: bool,
    pub stability: StabilityVerdict,
    pub case: PairCase,
    /// `None` for the cusp
    pub fibers: Option<FiberConfiguration>,
    /// Lattices of a generic surface of this type; a special surface may
    /// have larger Picard rank.
    pub m_t: Option<String>,
    pub t_t: Option<String>,
    /// e.g. `Δ2^(2)`; `None` for smooth surfaces and for the cusp
    pub stratum: Option<String>,
    pub stratum_depth: usize,
    pub shioda: Option<ShiodaTateReport>,
}

pub fn stratum_label(case: CaseId) -> Option<String> {
    stratum_index(case).map(|(k, r)| format!("Δ{k}^({r})"))
}

/// Report for a pair `(F5, F2)` already extracted.
pub fn analyze_pair(n: NormalizedCubic, f5: BinaryForm, f2: BinaryForm) -> Result<AnalysisReport> {
    let bordered_identity = bordered_determinant(&n) == f5.scale(&q(-1));
    if !bordered_identity {
        return Err(Error::Internal("bordered determinant differs from -F5".into()));
    }
    let verdict = stability(&f5, &f2)?;
    let case = classify_case(&f5, &f2)?;
    let stratum = stratum_label(case.case_id);
    let stratum_depth = stratum_index(case.case_id).map_or(0, |(k, _)| k);
    if let Some(r) = case.nodes {
        if usize::from(r) != stratum_depth {
            return Err(Error::Internal(format!(
                "case {}: {r} nodes but stratum depth {stratum_depth}",
                case.case_id
            )));
        }
    }
    let (fibers, m_t, t_t, shioda) = match case.case_id.lattice_row() {
        None => (None, None, None, None),
        Some(row) => {
            let (m, t) = picard_row(row).expect("every row is tabulated");
            (
                Some(fiber_configuration(&f5, &f2)?),
                Some(m.to_string()),
                Some(t.to_string()),
                Some(shioda_tate_check(case.case_id)?),
            )
        }
    };
    Ok(AnalysisReport {
        f5,
        f2,
        normal_form: n,
        bordered_identity,
        stability: verdict,
        case,
        fibers,
        m_t,
        t_t,
        stratum,
        stratum_depth,
        shioda,
    })
}

pub fn analyze(f: &CubicForm, l: &ProjLine, m: &ProjLine) -> Result<AnalysisReport> {
    let n = normalize(f, l, m)?;
    let (f5, f2) = extract_f5_f2(&n)?;
    analyze_pair(n, f5, f2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bf(c: &[i64]) -> BinaryForm {
        BinaryForm::from_ints(c)
    }

    fn report(a00: &[i64], a01: &[i64], a11: &[i64], b0: &[i64], b1: &[i64]) -> AnalysisReport {
        let n = NormalizedCubic::new(bf(a00), bf(a01), bf(a11), bf(b0), bf(b1)).unwrap();
        let f = n.to_cubic().unwrap();
        let l = ProjLine::parse("1,0,0,0;0,1,0,0").unwrap();
        let m = ProjLine::parse("0,0,1,0;0,0,0,1").unwrap();
        analyze(&f, &l, &m).unwrap()
    }

    #[test]
    fn case_seventeen() {
        let r = report(&[1, 0], &[0, 0], &[0, 1], &[0, 1, 0], &[0, 1, 0]);
        assert_eq!(r.case.case_id, CaseId::C17);
        assert_eq!(r.stratum.as_deref(), Some("Δ4^(2)"));
        assert_eq!(r.stratum_depth, 4);
        assert_eq!(r.m_t.as_deref(), Some("U+E8^2+A2"));
    }

    #[test]
    fn case_eight_star() {
        let r = report(&[1, 0], &[0, 0], &[1, 0], &[0, 0, 1], &[1, 1, 0]);
        assert_eq!(r.case.case_id, CaseId::C8Star);
        assert_eq!(r.stratum.as_deref(), Some("Δ2^(2)"));
        assert_eq!(r.case.nodes, Some(2));
    }

    #[test]
    fn generic_is_smooth() {
        let r = report(&[1, 2], &[1, -1], &[3, 1], &[1, 0, 2], &[2, 1, -1]);
        assert_eq!(r.case.case_id, CaseId::C1);
        assert_eq!(r.stratum, None);
        assert_eq!(r.stratum_depth, 0);
        assert_eq!(r.shioda.unwrap().mw_order, 1);
    }
}
