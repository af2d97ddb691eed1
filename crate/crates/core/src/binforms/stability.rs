use serde::Serialize;

use super::form::BinaryForm;
use super::profile::{profile_of, PointClass};
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Stability {
    Stable,
    StrictlySemistable,
    Unstable,
}

/// The root achieving the largest weight `2*m5 + m2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub locus: BinaryForm,
    pub m5: usize,
    pub m2: usize,
    pub weight: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabilityVerdict {
    pub verdict: Stability,
    pub witness: Option<Witness>,
    /// Set when one of the forms vanishes, so the pair is not a point of
    /// `P(V(5)) x P(V(2))`; the verdict is then `Unstable` by convention.
    pub degenerate: bool,
}

impl StabilityVerdict {
    pub fn is_stable(&self) -> bool {
        self.verdict == Stability::Stable
    }
}

/// Thresholds of the Hilbert-Mumford weight for the linearization O(2) x O(1).
pub const STABLE_MAX_WEIGHT: usize = 5;
pub const SEMISTABLE_MAX_WEIGHT: usize = 6;

pub fn verdict_for_weight(w: usize) -> Stability {
    if w <= STABLE_MAX_WEIGHT {
        Stability::Stable
    } else if w <= SEMISTABLE_MAX_WEIGHT {
        Stability::StrictlySemistable
    } else {
        Stability::Unstable
    }
}

/// GIT stability of `(F5, F2)` under the diagonal SL(2) action: the pair is
/// stable iff every point has `2*m5 + m2 <= 5`, strictly semistable iff the
/// maximum is 6.
pub fn stability(f5: &BinaryForm, f2: &BinaryForm) -> Result<StabilityVerdict> {
    f5.check_degree(5)?;
    f2.check_degree(2)?;
    if f5.is_zero() || f2.is_zero() {
        return Ok(StabilityVerdict { verdict: Stability::Unstable, witness: None, degenerate: true });
    }
    let profile = profile_of(f5, f2)?;
    let worst: &PointClass = profile.max_weight().expect("nonzero forms of positive degree");
    Ok(StabilityVerdict {
        verdict: verdict_for_weight(worst.weight()),
        witness: Some(Witness {
            locus: worst.locus.clone(),
            m5: worst.m5,
            m2: worst.m2,
            weight: worst.weight(),
        }),
        degenerate: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bf(c: &[i64]) -> BinaryForm {
        BinaryForm::from_ints(c)
    }

    #[test]
    fn generic_is_stable() {
        let v = stability(&bf(&[1, 0, -5, 0, 4, 0]), &bf(&[1, 0, -9])).unwrap();
        assert_eq!(v.verdict, Stability::Stable);
        assert_eq!(v.witness.unwrap().weight, 2);
    }

    #[test]
    fn cusp_is_strictly_semistable() {
        let v = stability(&bf(&[0, 0, 1, 0, 0, 0]), &bf(&[0, 0, 1])).unwrap();
        assert_eq!(v.verdict, Stability::StrictlySemistable);
    }

    #[test]
    fn quadruple_root_is_unstable() {
        // x0^4 x1 with F2 = x1^2: the root x0 = 0 has weight 8
        let v = stability(&bf(&[0, 1, 0, 0, 0, 0]), &bf(&[0, 0, 1])).unwrap();
        assert_eq!(v.verdict, Stability::Unstable);
        let w = v.witness.unwrap();
        assert_eq!((w.m5, w.m2, w.weight), (4, 0, 8));
        assert_eq!(w.locus, BinaryForm::x0());
    }

    #[test]
    fn vanishing_form_is_flagged() {
        let v = stability(&bf(&[1, 0, 0, 0, 0, 1]), &BinaryForm::zero(2)).unwrap();
        assert_eq!(v.verdict, Stability::Unstable);
        assert!(v.degenerate);
    }
}
