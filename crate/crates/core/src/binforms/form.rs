use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::Poly;
use crate::error::{Error, Result};
use crate::rational::{common_denominator, fmt_rational, parse_rational, Q};

/// Homogeneous form in `x0, x1`. `coeffs[i]` multiplies `x0^(d-i) * x1^i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryForm {
    coeffs: Vec<Q>,
}

impl BinaryForm {
    pub fn new(coeffs: Vec<Q>) -> Self {
        assert!(!coeffs.is_empty(), "a binary form needs degree + 1 coefficients");
        BinaryForm { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        BinaryForm::new(coeffs.iter().map(|&c| Q::from_integer(c.into())).collect())
    }

    pub fn zero(degree: usize) -> Self {
        BinaryForm::new(vec![Q::zero(); degree + 1])
    }

    pub fn constant(c: Q) -> Self {
        BinaryForm::new(vec![c])
    }

    /// `a*x0 + b*x1`
    pub fn linear(a: Q, b: Q) -> Self {
        BinaryForm::new(vec![a, b])
    }

    pub fn x0() -> Self {
        BinaryForm::from_ints(&[1, 0])
    }

    pub fn x1() -> Self {
        BinaryForm::from_ints(&[0, 1])
    }

    /// Linear form vanishing at the point `(a : b)` of P^1.
    pub fn vanishing_at(a: &Q, b: &Q) -> Self {
        BinaryForm::linear(b.clone(), -a.clone())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_constant(&self) -> bool {
        self.degree() == 0
    }

    pub fn check_degree(&self, expected: usize) -> Result<()> {
        if self.degree() != expected {
            return Err(Error::WrongDegree { expected, found: self.degree() });
        }
        Ok(())
    }

    /// Integer coefficients with content 1 and a positive first nonzero coefficient.
    pub fn canonical(&self) -> BinaryForm {
        if self.is_zero() {
            return self.clone();
        }
        let den = common_denominator(&self.coeffs);
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Q::from_integer(den.clone())).to_integer())
            .collect();
        let mut content = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        let first = ints.iter().find(|c| !c.is_zero()).unwrap();
        if first.is_negative() {
            content = -content;
        }
        BinaryForm::new(ints.into_iter().map(|c| Q::from_integer(c / &content)).collect())
    }

    pub fn is_canonical(&self) -> bool {
        *self == self.canonical()
    }

    pub fn mul(&self, other: &BinaryForm) -> BinaryForm {
        let mut out = vec![Q::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        BinaryForm::new(out)
    }

    pub fn pow(&self, e: usize) -> BinaryForm {
        (0..e).fold(BinaryForm::constant(Q::one()), |acc, _| acc.mul(self))
    }

    pub fn scale(&self, c: &Q) -> BinaryForm {
        BinaryForm::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Sum of two forms of equal degree.
    pub fn add(&self, other: &BinaryForm) -> BinaryForm {
        assert_eq!(self.degree(), other.degree(), "adding forms of different degree");
        BinaryForm::new(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &BinaryForm) -> BinaryForm {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn evaluate(&self, x0: &Q, x1: &Q) -> Q {
        let d = self.degree();
        let mut acc = Q::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc += c * pow_q(x0, d - i) * pow_q(x1, i);
        }
        acc
    }

    /// Power of `x1` dividing the form.
    pub fn x1_order(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// `f(t, 1)` as a polynomial in `t = x0/x1`.
    pub fn dehomogenize(&self) -> Poly {
        Poly::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// Inverse of [`dehomogenize`](Self::dehomogenize) in the given degree.
    pub fn homogenize(p: &Poly, degree: usize) -> BinaryForm {
        let pd = p.degree().unwrap_or(0);
        assert!(pd <= degree);
        let mut coeffs = vec![Q::zero(); degree + 1];
        for (j, c) in p.coeffs().iter().enumerate() {
            coeffs[degree - j] = c.clone();
        }
        BinaryForm::new(coeffs)
    }

    /// Squarefree decomposition `f = c * prod factor_i^mult_i`, descending
    /// multiplicity, factors canonical and pairwise coprime. The power of `x1`
    /// is split off before dehomogenizing and merged back as a linear factor.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(usize, BinaryForm)>> {
        if self.is_zero() {
            return Err(Error::ZeroForm);
        }
        let k = self.x1_order();
        let mut parts: Vec<(usize, BinaryForm)> = self
            .dehomogenize()
            .squarefree_decomposition()
            .into_iter()
            .map(|(m, p)| {
                let d = p.degree().unwrap();
                (m, BinaryForm::homogenize(&p, d))
            })
            .collect();
        if k > 0 {
            match parts.iter_mut().find(|(m, _)| *m == k) {
                Some((_, f)) => *f = f.mul(&BinaryForm::x1()),
                None => parts.push((k, BinaryForm::x1())),
            }
        }
        let mut parts: Vec<_> = parts.into_iter().map(|(m, f)| (m, f.canonical())).collect();
        parts.sort_by(|a, b| b.0.cmp(&a.0));
        Ok(parts)
    }

    /// Product of the distinct irreducible factors.
    pub fn radical(&self) -> Result<BinaryForm> {
        Ok(self
            .squarefree_decomposition()?
            .iter()
            .fold(BinaryForm::constant(Q::one()), |acc, (_, f)| acc.mul(f))
            .canonical())
    }

    /// Canonical gcd; both forms nonzero.
    pub fn gcd(&self, other: &BinaryForm) -> BinaryForm {
        let k = self.x1_order().min(other.x1_order());
        let g = self.dehomogenize().gcd(&other.dehomogenize());
        let d = g.degree().unwrap_or(0);
        let g = BinaryForm::homogenize(&g, d);
        g.mul(&BinaryForm::x1().pow(k)).canonical()
    }

    /// Exact quotient; panics when `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &BinaryForm) -> BinaryForm {
        assert!(divisor.degree() <= self.degree());
        // Division as polynomials in s = x1/x0 (ascending coefficient arrays).
        let (q, r) = Poly::new(self.coeffs.clone()).div_rem(&Poly::new(divisor.coeffs.clone()));
        assert!(r.is_zero(), "inexact form division");
        let mut coeffs = q.coeffs().to_vec();
        coeffs.resize(self.degree() - divisor.degree() + 1, Q::zero());
        BinaryForm::new(coeffs)
    }

    /// `f(a*x0 + b*x1, c*x0 + d*x1)`.
    pub fn substitute(&self, a: &Q, b: &Q, c: &Q, d: &Q) -> BinaryForm {
        let deg = self.degree();
        let l0 = BinaryForm::linear(a.clone(), b.clone());
        let l1 = BinaryForm::linear(c.clone(), d.clone());
        let mut acc = BinaryForm::zero(deg);
        for (i, coef) in self.coeffs.iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            let term = l0.pow(deg - i).mul(&l1.pow(i)).scale(coef);
            acc = acc.add(&term);
        }
        acc
    }

    pub fn parse(s: &str) -> Result<BinaryForm> {
        let coeffs = crate::rational::parse_rational_list(s)?;
        if coeffs.is_empty() {
            return Err(Error::Parse("empty coefficient list".into()));
        }
        Ok(BinaryForm::new(coeffs))
    }
}

fn pow_q(x: &Q, e: usize) -> Q {
    (0..e).fold(Q::one(), |acc, _| acc * x)
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = monomial(d - i, i);
            let neg = c.is_negative();
            let abs = c.abs();
            if wrote {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            } else if neg {
                write!(f, "-")?;
            }
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn monomial(e0: usize, e1: usize) -> String {
    let part = |v: &str, e: usize| match e {
        0 => String::new(),
        1 => v.to_string(),
        _ => format!("{v}^{e}"),
    };
    let (a, b) = (part("x0", e0), part("x1", e1));
    match (a.is_empty(), b.is_empty()) {
        (true, _) => b,
        (_, true) => a,
        _ => format!("{a}*{b}"),
    }
}

impl Serialize for BinaryForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.iter().map(fmt_rational).collect::<Vec<_>>().serialize(s)
    }
}

impl<'de> Deserialize<'de> for BinaryForm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        if v.is_empty() {
            return Err(serde::de::Error::custom("empty coefficient list"));
        }
        let coeffs = v
            .iter()
            .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(BinaryForm::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qf};

    fn bf(c: &[i64]) -> BinaryForm {
        BinaryForm::from_ints(c)
    }

    #[test]
    fn canonical_clears_denominators_and_sign() {
        let f = BinaryForm::new(vec![q(0), qf(-1, 2), qf(3, 4)]);
        assert_eq!(f.canonical(), bf(&[0, 2, -3]));
        assert!(bf(&[0, 2, -3]).is_canonical());
    }

    #[test]
    fn monomial_decomposition() {
        // x0^3 x1^2
        let f = bf(&[0, 0, 1, 0, 0, 0]);
        let dec = f.squarefree_decomposition().unwrap();
        assert_eq!(dec, vec![(3, BinaryForm::x0()), (2, BinaryForm::x1())]);
    }

    #[test]
    fn squarefree_quintic_is_one_part() {
        // x0^5 - x0 x1^4 = x0 (x0^2 - x1^2)(x0^2 + x1^2), checked by expansion.
        let f = bf(&[1, 0, 0, 0, -1, 0]);
        let expanded = BinaryForm::x0()
            .mul(&bf(&[1, 0, -1]))
            .mul(&bf(&[1, 0, 1]));
        assert_eq!(expanded, f);
        let dec = f.squarefree_decomposition().unwrap();
        assert_eq!(dec, vec![(1, f.clone())]);
    }

    #[test]
    fn constructed_square_times_linear() {
        let a = bf(&[1, -1]);
        let b = bf(&[1, 1]);
        let f = a.pow(2).mul(&b);
        let dec = f.squarefree_decomposition().unwrap();
        assert_eq!(dec, vec![(2, a), (1, b)]);
    }

    #[test]
    fn zero_form_is_rejected() {
        assert_eq!(BinaryForm::zero(3).squarefree_decomposition(), Err(Error::ZeroForm));
    }

    #[test]
    fn x1_power_merges_with_equal_multiplicity() {
        // x1 * (x0 - x1), both simple
        let f = bf(&[0, 1, -1]);
        let dec = f.squarefree_decomposition().unwrap();
        assert_eq!(dec.len(), 1);
        assert_eq!(dec[0].1, f.canonical());
    }

    #[test]
    fn gcd_and_division() {
        let a = bf(&[1, -1]);
        let f = a.mul(&BinaryForm::x1()).mul(&bf(&[1, 0, 1]));
        let g = a.mul(&BinaryForm::x1().pow(2));
        assert_eq!(f.gcd(&g), a.mul(&BinaryForm::x1()).canonical());
        assert_eq!(f.exact_div(&a), BinaryForm::x1().mul(&bf(&[1, 0, 1])));
        // divisor with an x0 factor
        let h = BinaryForm::x0().mul(&bf(&[2, 3]));
        assert_eq!(h.exact_div(&BinaryForm::x0()), bf(&[2, 3]));
    }

    #[test]
    fn substitution_matches_evaluation() {
        let f = bf(&[3, -1, 0, 2]);
        let g = f.substitute(&q(2), &q(1), &q(-1), &q(3));
        let (u, v) = (qf(1, 3), q(2));
        assert_eq!(
            g.evaluate(&u, &v),
            f.evaluate(&(q(2) * &u + &v), &(-&u + q(3) * &v))
        );
    }

    #[test]
    fn display() {
        assert_eq!(bf(&[1, 0, -2]).to_string(), "x0^2 - 2*x1^2");
        assert_eq!(bf(&[0, 0]).to_string(), "0");
    }

    #[test]
    fn json_shape() {
        let f = BinaryForm::new(vec![q(1), qf(-1, 2)]);
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"["1/1","-1/2"]"#);
        let back: BinaryForm = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
    }
}
