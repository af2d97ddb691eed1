//! The nineteen stable configurations of `(F5, F2)` and the strictly
//! semistable cusp, with the conic-pencil data attached to each.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::form::BinaryForm;
use super::profile::{profile_of, RootProfile};
use super::stability::{stability, Stability};
use crate::error::{Error, Result};
use crate::kodaira::FiberType::{self, *};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseId {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    C7,
    C8,
    C8Star,
    C9,
    C10,
    C11,
    C12,
    C13,
    C13Star,
    C14,
    C15,
    C16,
    C17,
    Cusp,
}

impl CaseId {
    /// The nineteen stable cases in table order.
    pub const STABLE: [CaseId; 19] = [
        CaseId::C1,
        CaseId::C2,
        CaseId::C3,
        CaseId::C4,
        CaseId::C5,
        CaseId::C6,
        CaseId::C7,
        CaseId::C8,
        CaseId::C8Star,
        CaseId::C9,
        CaseId::C10,
        CaseId::C11,
        CaseId::C12,
        CaseId::C13,
        CaseId::C13Star,
        CaseId::C14,
        CaseId::C15,
        CaseId::C16,
        CaseId::C17,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            CaseId::C1 => "1",
            CaseId::C2 => "2",
            CaseId::C3 => "3",
            CaseId::C4 => "4",
            CaseId::C5 => "5",
            CaseId::C6 => "6",
            CaseId::C7 => "7",
            CaseId::C8 => "8",
            CaseId::C8Star => "8*",
            CaseId::C9 => "9",
            CaseId::C10 => "10",
            CaseId::C11 => "11",
            CaseId::C12 => "12",
            CaseId::C13 => "13",
            CaseId::C13Star => "13*",
            CaseId::C14 => "14",
            CaseId::C15 => "15",
            CaseId::C16 => "16",
            CaseId::C17 => "17",
            CaseId::Cusp => "CUSP",
        }
    }

    /// Row of the Picard-lattice table; the starred cases share the row of
    /// their unstarred twin.
    pub fn lattice_row(&self) -> Option<usize> {
        use CaseId::*;
        Some(match self {
            C1 => 1,
            C2 => 2,
            C3 => 3,
            C4 => 4,
            C5 => 5,
            C6 => 6,
            C7 => 7,
            C8 | C8Star => 8,
            C9 => 9,
            C10 => 10,
            C11 => 11,
            C12 => 12,
            C13 | C13Star => 13,
            C14 => 14,
            C15 => 15,
            C16 => 16,
            C17 => 17,
            Cusp => return None,
        })
    }

    pub fn row(&self) -> Option<&'static CaseRow> {
        TABLE.iter().find(|r| r.id == *self)
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for CaseId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        CaseId::STABLE
            .iter()
            .chain(std::iter::once(&CaseId::Cusp))
            .find(|c| c.label().eq_ignore_ascii_case(s))
            .copied()
            .ok_or_else(|| Error::Parse(format!("unknown case id `{s}`")))
    }
}

impl Serialize for CaseId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

/// One row of the conic-pencil table.
#[derive(Debug)]
pub struct CaseRow {
    pub id: CaseId,
    /// `(m5, m2, number of geometric points)`
    pub shape: &'static [(usize, usize, usize)],
    pub type_vector: &'static [usize],
    /// singular fibres of the conic bundle, as printed
    pub conic_fibres: &'static str,
    pub kodaira: &'static [(FiberType, usize)],
    pub nodes: u8,
    pub eckardt: u8,
}

macro_rules! row {
    ($id:ident, $shape:expr, $t:expr, $conic:expr, $kod:expr, $r:expr, $e:expr) => {
        CaseRow {
            id: CaseId::$id,
            shape: $shape,
            type_vector: $t,
            conic_fibres: $conic,
            kodaira: $kod,
            nodes: $r,
            eckardt: $e,
        }
    };
}

pub static TABLE: [CaseRow; 19] = [
    row!(C1, &[(1, 0, 5), (0, 1, 2)], &[2, 2, 2, 2, 2, 1, 1], "5 I", &[(IV, 5), (II, 2)], 0, 0),
    row!(C2, &[(1, 1, 1), (1, 0, 4), (0, 1, 1)], &[3, 2, 2, 2, 2, 1], "5 I", &[(I0Star, 1), (IV, 4), (II, 1)], 0, 1),
    row!(C3, &[(1, 1, 2), (1, 0, 3)], &[3, 3, 2, 2, 2], "5 I", &[(I0Star, 2), (IV, 3)], 0, 2),
    row!(C4, &[(1, 0, 5), (0, 2, 1)], &[2, 2, 2, 2, 2, 2], "5 I", &[(IV, 6)], 1, 0),
    row!(C5, &[(2, 0, 1), (1, 0, 3), (0, 1, 2)], &[4, 2, 2, 2, 1, 1], "II, 3 I", &[(IVStar, 1), (IV, 3), (II, 2)], 1, 0),
    row!(C6, &[(2, 0, 1), (1, 1, 1), (1, 0, 2), (0, 1, 1)], &[4, 3, 2, 2, 1], "II, 3 I", &[(IVStar, 1), (I0Star, 1), (IV, 2), (II, 1)], 1, 1),
    row!(C7, &[(2, 0, 1), (1, 1, 2), (1, 0, 1)], &[4, 3, 3, 2], "II, 3 I", &[(IVStar, 1), (I0Star, 2), (IV, 1)], 1, 2),
    row!(C8, &[(2, 0, 1), (1, 0, 3), (0, 2, 1)], &[4, 2, 2, 2, 2], "II, 3 I", &[(IVStar, 1), (IV, 4)], 2, 0),
    row!(C8Star, &[(1, 2, 1), (1, 0, 4)], &[4, 2, 2, 2, 2], "5 I", &[(IVStar, 1), (IV, 4)], 2, 0),
    row!(C9, &[(2, 0, 2), (1, 0, 1), (0, 1, 2)], &[4, 4, 2, 1, 1], "2 II, I", &[(IVStar, 2), (IV, 1), (II, 2)], 2, 0),
    row!(C10, &[(2, 1, 1), (1, 0, 3), (0, 1, 1)], &[5, 2, 2, 2, 1], "III, 3 I", &[(IIStar, 1), (IV, 3), (II, 1)], 2, 0),
    row!(C11, &[(2, 0, 2), (1, 1, 1), (0, 1, 1)], &[4, 4, 3, 1], "2 II, I", &[(IVStar, 2), (I0Star, 1), (II, 1)], 2, 1),
    row!(C12, &[(2, 1, 1), (1, 1, 1), (1, 0, 2)], &[5, 3, 2, 2], "III, 3 I", &[(IIStar, 1), (I0Star, 1), (IV, 2)], 2, 1),
    row!(C13, &[(2, 0, 1), (1, 2, 1), (1, 0, 2)], &[4, 4, 2, 2], "2 II, I", &[(IVStar, 2), (IV, 2)], 3, 0),
    row!(C13Star, &[(2, 0, 2), (1, 0, 1), (0, 2, 1)], &[4, 4, 2, 2], "II, 3 I", &[(IVStar, 2), (IV, 2)], 3, 0),
    row!(C14, &[(2, 1, 1), (2, 0, 1), (1, 0, 1), (0, 1, 1)], &[5, 4, 2, 1], "III, II, I", &[(IIStar, 1), (IVStar, 1), (IV, 1), (II, 1)], 3, 0),
    row!(C15, &[(2, 1, 1), (2, 0, 1), (1, 1, 1)], &[5, 4, 3], "III, II, I", &[(IIStar, 1), (IVStar, 1), (I0Star, 1)], 3, 1),
    row!(C16, &[(2, 0, 2), (1, 2, 1)], &[4, 4, 4], "2 II, I", &[(IVStar, 3)], 4, 0),
    row!(C17, &[(2, 1, 2), (1, 0, 1)], &[5, 5, 2], "2 III, I", &[(IIStar, 2), (IV, 1)], 4, 0),
];

/// Shape of the closed strictly semistable orbit `(L1^3 L2^2, L2^2)`.
pub const CUSP_SHAPE: &[(usize, usize, usize)] = &[(3, 0, 1), (2, 2, 1)];

fn sorted_shape(shape: &[(usize, usize, usize)]) -> Vec<(usize, usize, usize)> {
    let mut s = shape.to_vec();
    s.sort_by(|x, y| y.cmp(x));
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairCase {
    pub case_id: CaseId,
    pub type_vector: Vec<usize>,
    /// `None` for the cusp, which has no row in the table.
    pub nodes: Option<u8>,
    pub eckardt: Option<u8>,
}

/// Matches a root profile against the table. Returns `None` for shapes that
/// are not one of the nineteen stable cases.
pub fn match_profile(profile: &RootProfile) -> Option<&'static CaseRow> {
    let shape = profile.shape();
    TABLE.iter().find(|row| sorted_shape(row.shape) == shape)
}

pub fn is_cusp_profile(profile: &RootProfile) -> bool {
    profile.shape() == sorted_shape(CUSP_SHAPE)
        && profile.classes.iter().all(|c| c.locus.degree() == 1)
}

/// True iff `F5 = L1^3 L2^2` and `F2 = L2^2` for independent linear forms.
pub fn is_cusp_configuration(f5: &BinaryForm, f2: &BinaryForm) -> bool {
    if f5.degree() != 5 || f2.degree() != 2 || f5.is_zero() || f2.is_zero() {
        return false;
    }
    profile_of(f5, f2).map(|p| is_cusp_profile(&p)).unwrap_or(false)
}

/// Classifies a stable pair (or the cusp) into its case. The type vector is
/// recomputed from the multiplicities and must agree with the table row.
pub fn classify_case(f5: &BinaryForm, f2: &BinaryForm) -> Result<PairCase> {
    let verdict = stability(f5, f2)?;
    let profile = profile_of(f5, f2)?;
    let t = profile.type_vector();
    match verdict.verdict {
        Stability::Unstable => Err(Error::UnstablePair),
        Stability::StrictlySemistable if is_cusp_profile(&profile) => Ok(PairCase {
            case_id: CaseId::Cusp,
            type_vector: t,
            nodes: None,
            eckardt: None,
        }),
        Stability::StrictlySemistable => Err(Error::StrictlySemistableNoStratum),
        Stability::Stable => {
            let row = match_profile(&profile).ok_or_else(|| {
                Error::Internal(format!("stable profile {:?} matches no case", profile.shape()))
            })?;
            if t != row.type_vector {
                return Err(Error::Internal(format!(
                    "case {}: type vector {:?} disagrees with table value {:?}",
                    row.id, t, row.type_vector
                )));
            }
            Ok(PairCase {
                case_id: row.id,
                type_vector: t,
                nodes: Some(row.nodes),
                eckardt: Some(row.eckardt),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bf(c: &[i64]) -> BinaryForm {
        BinaryForm::from_ints(c)
    }

    fn lin(a: i64, b: i64) -> BinaryForm {
        bf(&[a, b])
    }

    #[test]
    fn table_is_self_consistent() {
        for row in &TABLE {
            let mut t: Vec<usize> = row
                .shape
                .iter()
                .flat_map(|&(m5, m2, n)| std::iter::repeat(2 * m5 + m2).take(n))
                .collect();
            t.sort_unstable_by(|a, b| b.cmp(a));
            assert_eq!(t, row.type_vector, "case {}", row.id);
            assert_eq!(row.type_vector.iter().sum::<usize>(), 12);
            let deg5: usize = row.shape.iter().map(|&(m5, _, n)| m5 * n).sum();
            let deg2: usize = row.shape.iter().map(|&(_, m2, n)| m2 * n).sum();
            assert_eq!((deg5, deg2), (5, 2), "case {}", row.id);
            assert!(row.shape.iter().all(|&(m5, m2, _)| 2 * m5 + m2 <= 5));
        }
        // all shapes distinct
        for (i, a) in TABLE.iter().enumerate() {
            for b in &TABLE[i + 1..] {
                assert_ne!(sorted_shape(a.shape), sorted_shape(b.shape));
            }
        }
    }

    #[test]
    fn generic_case_one() {
        let f5 = bf(&[1, 0, -5, 0, 4, 0]);
        let f2 = bf(&[1, 0, -9]);
        let c = classify_case(&f5, &f2).unwrap();
        assert_eq!(c.case_id, CaseId::C1);
        assert_eq!(c.type_vector, vec![2, 2, 2, 2, 2, 1, 1]);
        assert_eq!((c.nodes, c.eckardt), (Some(0), Some(0)));
    }

    #[test]
    fn one_common_root_is_case_two() {
        // F5 = x1 (x0 - x1)(x0 + x1)(x0 - 2x1)(x0 + 2x1), F2 = x1 (x0 - 3x1)
        let f5 = BinaryForm::x1().mul(&bf(&[1, 0, -1])).mul(&bf(&[1, 0, -4]));
        let f2 = BinaryForm::x1().mul(&lin(1, -3));
        let c = classify_case(&f5, &f2).unwrap();
        assert_eq!(c.case_id, CaseId::C2);
        assert_eq!(c.type_vector, vec![3, 2, 2, 2, 2, 1]);
        assert_eq!(c.eckardt, Some(1));
    }

    #[test]
    fn eight_star() {
        // F2 = x0^2 at a simple root of a squarefree F5
        let f5 = BinaryForm::x0().mul(&bf(&[1, 0, -1])).mul(&bf(&[1, 0, 2]));
        let f2 = BinaryForm::x0().pow(2);
        let c = classify_case(&f5, &f2).unwrap();
        assert_eq!(c.case_id, CaseId::C8Star);
        assert_eq!(c.type_vector, vec![4, 2, 2, 2, 2]);
        assert_eq!(c.nodes, Some(2));
    }

    #[test]
    fn eight_versus_eight_star() {
        // F5 with one double root, F2 double root elsewhere
        let f5 = lin(1, -1).pow(2).mul(&BinaryForm::x0()).mul(&bf(&[1, 0, -4]));
        let f2 = BinaryForm::x1().pow(2);
        assert_eq!(classify_case(&f5, &f2).unwrap().case_id, CaseId::C8);
    }

    #[test]
    fn irreducible_quadratic_shared_is_case_three() {
        let q = bf(&[1, 0, -2]);
        let f5 = q.mul(&BinaryForm::x0()).mul(&bf(&[1, 0, -1]));
        let c = classify_case(&f5, &q).unwrap();
        assert_eq!(c.case_id, CaseId::C3);
    }

    #[test]
    fn cusp_detection() {
        let f5 = bf(&[0, 0, 1, 0, 0, 0]);
        assert!(is_cusp_configuration(&f5, &bf(&[0, 0, 1])));
        assert!(!is_cusp_configuration(&f5, &bf(&[0, 1, 0])));
        assert!(!is_cusp_configuration(&bf(&[1, 0, -5, 0, 4, 0]), &bf(&[1, 0, -9])));
        let c = classify_case(&f5, &bf(&[0, 0, 1])).unwrap();
        assert_eq!(c.case_id, CaseId::Cusp);
        assert_eq!(c.type_vector, vec![6, 6]);
    }

    #[test]
    fn errors_for_non_stable_pairs() {
        let f5 = bf(&[0, 0, 0, 0, 1, 0]);
        assert_eq!(classify_case(&f5, &bf(&[0, 0, 1])), Err(Error::UnstablePair));
        // triple root of F5 without the shared double root: semistable, no stratum
        let f5 = BinaryForm::x0().pow(3).mul(&bf(&[1, 0, -1]));
        assert_eq!(
            classify_case(&f5, &bf(&[1, 0, -9])),
            Err(Error::StrictlySemistableNoStratum)
        );
    }

    #[test]
    fn parse_ids() {
        assert_eq!("8*".parse::<CaseId>().unwrap(), CaseId::C8Star);
        assert_eq!("cusp".parse::<CaseId>().unwrap(), CaseId::Cusp);
        assert!("18".parse::<CaseId>().is_err());
    }
}
