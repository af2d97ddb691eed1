use std::fmt;

use num_traits::Zero;
use serde::{Serialize, Serializer};

use super::linalg::{primitive, rank, rref, Matrix};
use super::mpoly::{monomials, MPoly};
use crate::binforms::BinaryForm;
use crate::error::{Error, Result};
use crate::rational::{fmt_rational, fmt_rational_short, parse_rational_list, Q};

/// A cubic form in `x0..x3`: 20 coefficients on the degree-3 monomials in
/// descending lexicographic order (`x0^3, x0^2 x1, x0^2 x2, ..., x3^3`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicForm {
    coeffs: Vec<Q>,
}

impl CubicForm {
    pub fn new(coeffs: Vec<Q>) -> Result<Self> {
        if coeffs.len() != 20 {
            return Err(Error::WrongDegree { expected: 20, found: coeffs.len() });
        }
        if coeffs.iter().all(|c| c.is_zero()) {
            return Err(Error::ZeroForm);
        }
        Ok(CubicForm { coeffs })
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::new(parse_rational_list(s)?)
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn to_poly(&self) -> MPoly {
        MPoly::from_coeffs(4, 3, &self.coeffs)
    }

    pub fn from_poly(p: &MPoly) -> Result<Self> {
        Self::new(p.coeffs(3))
    }

    pub fn eval(&self, x: &[Q]) -> Q {
        self.to_poly().eval(x)
    }

    /// `F(R x)` for a 4x4 matrix `R`.
    pub fn transform(&self, r: &Matrix) -> Result<Self> {
        let subs: Vec<MPoly> = r.iter().map(|row| MPoly::linear(row)).collect();
        Self::from_poly(&self.to_poly().compose(&subs))
    }

    /// The binary cubic `F(s p + t q)`.
    pub fn restrict(&self, line: &ProjLine) -> BinaryForm {
        let subs: Vec<MPoly> = (0..4)
            .map(|i| MPoly::linear(&[line.p[i].clone(), line.q[i].clone()]))
            .collect();
        let r = self.to_poly().compose(&subs);
        BinaryForm::new(r.coeffs(3))
    }
}

impl fmt::Display for CubicForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(fmt_rational_short).collect();
        f.write_str(&parts.join(","))
    }
}

impl Serialize for CubicForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coeffs.iter().map(fmt_rational).collect();
        v.serialize(s)
    }
}

/// Human-readable names of the monomials in coefficient order.
pub fn monomial_names() -> Vec<String> {
    monomials(4, 3)
        .iter()
        .map(|e| {
            let mut s = Vec::new();
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => s.push(format!("x{i}")),
                    _ => s.push(format!("x{i}^{k}")),
                }
            }
            s.join("*")
        })
        .collect()
}

/// A line of P^3 spanned by two points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjLine {
    pub p: [Q; 4],
    pub q: [Q; 4],
}

impl ProjLine {
    pub fn new(p: [Q; 4], q: [Q; 4]) -> Result<Self> {
        let m: Matrix = vec![p.to_vec(), q.to_vec()];
        if rank(&m) != 2 {
            return Err(Error::DegenerateConfiguration("line points are dependent".into()));
        }
        Ok(ProjLine { p, q })
    }

    pub fn from_vecs(p: &[Q], q: &[Q]) -> Result<Self> {
        let arr = |v: &[Q]| -> Result<[Q; 4]> {
            v.to_vec()
                .try_into()
                .map_err(|_| Error::Parse("a point of P^3 needs 4 coordinates".into()))
        };
        Self::new(arr(p)?, arr(q)?)
    }

    /// `"p0,p1,p2,p3;q0,q1,q2,q3"`
    pub fn parse(s: &str) -> Result<Self> {
        let (a, b) = s
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("line `{s}`: expected two points separated by `;`")))?;
        Self::from_vecs(&parse_rational_list(a)?, &parse_rational_list(b)?)
    }

    /// Reduced row echelon basis of the span; equal spans give equal output.
    pub fn canonical(&self) -> [[Q; 4]; 2] {
        let (r, _) = rref(&vec![self.p.to_vec(), self.q.to_vec()]);
        [
            r[0].clone().try_into().expect("4 columns"),
            r[1].clone().try_into().expect("4 columns"),
        ]
    }

    /// Same line, spanned by the echelon basis scaled to coprime integers.
    pub fn normalized(&self) -> ProjLine {
        let [a, b] = self.canonical();
        ProjLine::from_vecs(&primitive(&a), &primitive(&b)).expect("echelon rows are independent")
    }

    pub fn same_line(&self, other: &ProjLine) -> bool {
        self.canonical() == other.canonical()
    }

    /// The four spanning points of two lines are independent.
    pub fn is_skew_to(&self, other: &ProjLine) -> bool {
        let m: Matrix = [&self.p, &self.q, &other.p, &other.q].iter().map(|v| v.to_vec()).collect();
        rank(&m) == 4
    }

    pub fn apply(&self, m: &Matrix) -> Result<ProjLine> {
        let mv = |v: &[Q; 4]| -> Vec<Q> { super::linalg::mat_vec(m, v) };
        Self::from_vecs(&mv(&self.p), &mv(&self.q))
    }
}

impl ProjLine {
    fn render(&self, num: fn(&Q) -> String) -> String {
        let p: Vec<String> = self.p.iter().map(num).collect();
        let q: Vec<String> = self.q.iter().map(num).collect();
        format!("{};{}", p.join(","), q.join(","))
    }
}

impl fmt::Display for ProjLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(fmt_rational_short))
    }
}

impl Serialize for ProjLine {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.render(fmt_rational))
    }
}

/// True iff `F` vanishes identically on `L`.
pub fn contains_line(f: &CubicForm, l: &ProjLine) -> bool {
    f.restrict(l).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn pt(v: [i64; 4]) -> [Q; 4] {
        v.map(q)
    }

    fn fermat() -> CubicForm {
        let p = (0..4).fold(MPoly::zero(4), |acc, i| acc.add(&MPoly::var(4, i).pow(3)));
        CubicForm::from_poly(&p).unwrap()
    }

    #[test]
    fn fermat_contains_line() {
        let l = ProjLine::new(pt([1, -1, 0, 0]), pt([0, 0, 1, -1])).unwrap();
        assert!(contains_line(&fermat(), &l));
        let g = ProjLine::new(pt([1, 2, 0, 0]), pt([0, 0, 1, 5])).unwrap();
        assert!(!contains_line(&fermat(), &g));
    }

    #[test]
    fn monomial_names_in_order() {
        let n = monomial_names();
        assert_eq!(n[0], "x0^3");
        assert_eq!(n[5], "x0*x1*x2");
        assert_eq!(n[19], "x3^3");
    }

    #[test]
    fn lines() {
        let l = ProjLine::parse("1,0,0,0;0,1,0,0").unwrap();
        let l2 = ProjLine::parse("1,1,0,0;1,-1,0,0").unwrap();
        assert!(l.same_line(&l2));
        let m = ProjLine::parse("0,0,1,0;0,0,0,1").unwrap();
        assert!(l.is_skew_to(&m));
        assert!(!l.is_skew_to(&l2));
        assert!(ProjLine::parse("1,0,0,0;2,0,0,0").is_err());
        assert!(CubicForm::new(vec![Q::zero(); 20]).is_err());
    }
}
