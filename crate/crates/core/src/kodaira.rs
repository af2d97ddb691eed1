//! Singular fibres of the elliptic fibration `y^2 = x^3 + F5^2 F2`.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::binforms::{classify_case, stability, BinaryForm, CaseId, Stability};
use crate::error::{Error, Result};
use crate::lattices::{named, IntegralLattice};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FiberType {
    Smooth,
    II,
    IV,
    I0Star,
    IVStar,
    IIStar,
}

impl FiberType {
    pub fn label(&self) -> &'static str {
        match self {
            FiberType::Smooth => "I0",
            FiberType::II => "II",
            FiberType::IV => "IV",
            FiberType::I0Star => "I0*",
            FiberType::IVStar => "IV*",
            FiberType::IIStar => "II*",
        }
    }

    pub fn euler_number(&self) -> u32 {
        match self {
            FiberType::Smooth => 0,
            FiberType::II => 2,
            FiberType::IV => 4,
            FiberType::I0Star => 6,
            FiberType::IVStar => 8,
            FiberType::IIStar => 10,
        }
    }

    /// Root lattice spanned by the components missing the zero section.
    pub fn root_lattice(&self) -> Option<&'static str> {
        match self {
            FiberType::Smooth | FiberType::II => None,
            FiberType::IV => Some("A2"),
            FiberType::I0Star => Some("D4"),
            FiberType::IVStar => Some("E6"),
            FiberType::IIStar => Some("E8"),
        }
    }

    /// `|det|` of that root lattice, 1 for irreducible fibres.
    pub fn discriminant(&self) -> u64 {
        match self {
            FiberType::Smooth | FiberType::II | FiberType::IIStar => 1,
            FiberType::IV | FiberType::IVStar => 3,
            FiberType::I0Star => 4,
        }
    }
}

impl fmt::Display for FiberType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl Serialize for FiberType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

/// Fibre over a zero of order `k` of the sextic `g` in `y^2 = x^3 + g`.
pub fn fiber_type_from_multiplicity(k: usize) -> Result<FiberType> {
    Ok(match k {
        0 => FiberType::Smooth,
        1 => FiberType::II,
        2 => FiberType::IV,
        3 => FiberType::I0Star,
        4 => FiberType::IVStar,
        5 => FiberType::IIStar,
        _ => return Err(Error::NonMinimal(k)),
    })
}

/// `g = F5^2 F2`, canonicalized.
pub fn weierstrass_sextic(f5: &BinaryForm, f2: &BinaryForm) -> Result<BinaryForm> {
    f5.check_degree(5)?;
    f2.check_degree(2)?;
    Ok(f5.pow(2).mul(f2).canonical())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fiber {
    #[serde(rename = "type")]
    pub fiber_type: FiberType,
    /// squarefree form vanishing at the fibres of this entry
    pub factor: BinaryForm,
    pub geometric_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiberConfiguration {
    pub fibers: Vec<Fiber>,
    pub euler_total: u32,
}

impl FiberConfiguration {
    /// `(type, geometric count)` merged over entries, most degenerate first.
    pub fn multiset(&self) -> Vec<(FiberType, usize)> {
        let mut acc: Vec<(FiberType, usize)> = Vec::new();
        for f in &self.fibers {
            match acc.iter_mut().find(|(t, _)| *t == f.fiber_type) {
                Some(e) => e.1 += f.geometric_count,
                None => acc.push((f.fiber_type, f.geometric_count)),
            }
        }
        acc.sort_by(|a, b| b.0.cmp(&a.0));
        acc
    }

    /// Product of the discriminants of the fibre root lattices.
    pub fn discriminant_product(&self) -> u64 {
        self.fibers
            .iter()
            .map(|f| f.fiber_type.discriminant().pow(f.geometric_count as u32))
            .product()
    }
}

/// Fibre types read from the multiplicities of `g`, checked against the
/// table row of the case and against the Euler number 24.
pub fn fiber_configuration(f5: &BinaryForm, f2: &BinaryForm) -> Result<FiberConfiguration> {
    let verdict = stability(f5, f2)?;
    match verdict.verdict {
        Stability::Unstable => return Err(Error::UnstablePair),
        Stability::StrictlySemistable => {
            return Err(Error::NonMinimal(verdict.witness.map_or(6, |w| w.weight)))
        }
        Stability::Stable => {}
    }
    let profile = crate::binforms::root_profile(f5, f2)?;
    let mut fibers = Vec::new();
    for class in &profile.classes {
        fibers.push(Fiber {
            fiber_type: fiber_type_from_multiplicity(class.weight())?,
            factor: class.locus.clone(),
            geometric_count: class.count(),
        });
    }
    let euler_total = fibers.iter().map(|f| f.fiber_type.euler_number() * f.geometric_count as u32).sum();
    let config = FiberConfiguration { fibers, euler_total };
    let case = classify_case(f5, f2)?;
    let row = case.case_id.row().expect("stable cases have rows");
    if config.multiset() != row.kodaira {
        return Err(Error::Internal(format!(
            "case {}: fibres {:?} disagree with table value {:?}",
            case.case_id,
            config.multiset(),
            row.kodaira
        )));
    }
    if config.euler_total != 24 {
        return Err(Error::Internal(format!("Euler number {} != 24", config.euler_total)));
    }
    Ok(config)
}

/// `U` plus the root lattice of every reducible fibre.
pub fn trivial_lattice(config: &FiberConfiguration) -> IntegralLattice {
    trivial_lattice_of(&config.multiset())
}

pub fn trivial_lattice_of(multiset: &[(FiberType, usize)]) -> IntegralLattice {
    let mut l = named::u();
    for (t, n) in multiset {
        if let Some(name) = t.root_lattice() {
            let r = named::named_lattice(name).expect("known root lattice");
            l = l.direct_sum(&r.power(*n));
        }
    }
    l
}

/// Fibre multiset of a case as listed in the table.
pub fn table_fibers(case: CaseId) -> Option<&'static [(FiberType, usize)]> {
    case.row().map(|r| r.kodaira)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binforms::construct::representative;
    use num_bigint::BigInt;

    #[test]
    fn multiplicity_table() {
        assert_eq!(fiber_type_from_multiplicity(2).unwrap(), FiberType::IV);
        assert_eq!(fiber_type_from_multiplicity(3).unwrap(), FiberType::I0Star);
        assert_eq!(fiber_type_from_multiplicity(5).unwrap(), FiberType::IIStar);
        assert_eq!(fiber_type_from_multiplicity(6), Err(Error::NonMinimal(6)));
    }

    #[test]
    fn sextic() {
        let g = weierstrass_sextic(&BinaryForm::x0().pow(5), &BinaryForm::x1().pow(2)).unwrap();
        assert_eq!(g, BinaryForm::x0().pow(10).mul(&BinaryForm::x1().pow(2)));
        let f5 = BinaryForm::from_ints(&[1, 0, 0, 0, 0, -1]);
        let f2 = BinaryForm::from_ints(&[0, 1, 0]);
        let g = weierstrass_sextic(&f5, &f2).unwrap();
        assert_eq!(g.degree(), 12);
        assert_eq!(g, f5.pow(2).mul(&f2).canonical());
    }

    #[test]
    fn every_case_matches_table_and_euler() {
        for case in CaseId::STABLE {
            let (f5, f2) = representative(case);
            let c = fiber_configuration(&f5, &f2).unwrap();
            assert_eq!(c.euler_total, 24);
            assert_eq!(c.multiset(), table_fibers(case).unwrap());
        }
    }

    #[test]
    fn trivial_lattices() {
        let (f5, f2) = representative(CaseId::C1);
        let t = trivial_lattice(&fiber_configuration(&f5, &f2).unwrap());
        assert_eq!(t.rank(), 12);
        assert_eq!(t.discriminant_order(), BigInt::from(243));
        let (f5, f2) = representative(CaseId::C2);
        let t = trivial_lattice(&fiber_configuration(&f5, &f2).unwrap());
        assert_eq!(t.discriminant_order(), BigInt::from(4 * 81));
    }

    #[test]
    fn type_two_fibres_sit_over_zeros_of_f2_only() {
        for case in CaseId::STABLE {
            let (f5, f2) = representative(case);
            let c = fiber_configuration(&f5, &f2).unwrap();
            for f in c.fibers.iter().filter(|f| f.fiber_type == FiberType::II) {
                assert!(f2.gcd(&f.factor).degree() == f.factor.degree());
                assert_eq!(f5.gcd(&f.factor).degree(), 0);
            }
        }
    }

    #[test]
    fn cusp_is_not_minimal() {
        let (f5, f2) = representative(CaseId::Cusp);
        assert!(matches!(fiber_configuration(&f5, &f2), Err(Error::NonMinimal(_))));
    }
}
