//! Coordinates in which the two skew lines are `{x2 = x3 = 0}` and
//! `{x0 = x1 = 0}`, and the pair `(F5, F2)` read off from them.

use num_traits::{One, Zero};
use serde::Serialize;

use super::cubic::{contains_line, CubicForm, ProjLine};
use super::linalg::{det, primitive, transpose, Matrix};
use super::mpoly::MPoly;
use crate::binforms::BinaryForm;
use crate::error::{Error, Result};
use crate::rational::Q;

/// `Σ A_ij(t) x_i x_j + 2 Σ B_i(t) x_i` with `t = (x2, x3)`; `A_ij` linear,
/// `B_i` quadratic binary forms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NormalizedCubic {
    pub a00: BinaryForm,
    pub a01: BinaryForm,
    pub a11: BinaryForm,
    pub b0: BinaryForm,
    pub b1: BinaryForm,
    /// columns: spanning points of `l`, then of `m`
    #[serde(skip)]
    pub transform: Matrix,
}

impl NormalizedCubic {
    pub fn new(
        a00: BinaryForm,
        a01: BinaryForm,
        a11: BinaryForm,
        b0: BinaryForm,
        b1: BinaryForm,
    ) -> Result<Self> {
        for a in [&a00, &a01, &a11] {
            a.check_degree(1)?;
        }
        b0.check_degree(2)?;
        b1.check_degree(2)?;
        Ok(NormalizedCubic { a00, a01, a11, b0, b1, transform: identity4() })
    }

    /// The cubic in normalized coordinates.
    pub fn to_poly(&self) -> MPoly {
        let bin = |f: &BinaryForm, extra: [u32; 2], scale: Q| {
            let d = f.degree() as u32;
            let mut p = MPoly::zero(4);
            for (i, c) in f.coeffs().iter().enumerate() {
                p.add_term(vec![extra[0], extra[1], d - i as u32, i as u32], c * &scale);
            }
            p
        };
        let one = Q::one();
        let two = Q::from_integer(2.into());
        bin(&self.a00, [2, 0], one.clone())
            .add(&bin(&self.a01, [1, 1], two.clone()))
            .add(&bin(&self.a11, [0, 2], one))
            .add(&bin(&self.b0, [1, 0], two.clone()))
            .add(&bin(&self.b1, [0, 1], two))
    }

    pub fn to_cubic(&self) -> Result<CubicForm> {
        CubicForm::from_poly(&self.to_poly())
    }
}

fn identity4() -> Matrix {
    (0..4).map(|i| (0..4).map(|j| if i == j { Q::one() } else { Q::zero() }).collect()).collect()
}

/// Normal form of `F` relative to the skew lines `l`, `m` lying on it.
pub fn normalize(f: &CubicForm, l: &ProjLine, m: &ProjLine) -> Result<NormalizedCubic> {
    if !contains_line(f, l) {
        return Err(Error::LineNotOnSurface(l.to_string()));
    }
    if !contains_line(f, m) {
        return Err(Error::LineNotOnSurface(m.to_string()));
    }
    if !l.is_skew_to(m) {
        return Err(Error::NotSkew);
    }
    // echelon bases keep the coordinates small
    let cols: Matrix = [l.canonical(), m.canonical()]
        .into_iter()
        .flatten()
        .map(|v| primitive(&v))
        .collect();
    let p = transpose(&cols);
    if det(&p).is_zero() {
        return Err(Error::DegenerateConfiguration("singular coordinate change".into()));
    }
    let f = CubicForm::new(primitive(f.coeffs()))?;
    let g = f.transform(&p)?.to_poly();
    let half = Q::new(1.into(), 2.into());
    let lin = |e2: [u32; 4], e3: [u32; 4], s: &Q| {
        BinaryForm::new(vec![g.coeff(&e2) * s, g.coeff(&e3) * s])
    };
    let one = Q::one();
    let a00 = lin([2, 0, 1, 0], [2, 0, 0, 1], &one);
    let a11 = lin([0, 2, 1, 0], [0, 2, 0, 1], &one);
    let a01 = lin([1, 1, 1, 0], [1, 1, 0, 1], &half);
    let quad = |i: usize| {
        let mut e = [[0u32; 4]; 3];
        for (k, ek) in e.iter_mut().enumerate() {
            ek[i] = 1;
            ek[2] = 2 - k as u32;
            ek[3] = k as u32;
        }
        BinaryForm::new(e.iter().map(|ek| g.coeff(ek) * &half).collect())
    };
    let n = NormalizedCubic {
        a00,
        a01,
        a11,
        b0: quad(0),
        b1: quad(1),
        transform: p,
    };
    if n.to_poly() != g {
        return Err(Error::Internal("normal form does not reproduce the transformed cubic".into()));
    }
    Ok(n)
}

/// `F5 = B0^2 A11 + B1^2 A00 - 2 A01 B0 B1` and `F2 = A00 A11 - A01^2`.
pub fn extract_f5_f2(n: &NormalizedCubic) -> Result<(BinaryForm, BinaryForm)> {
    let two = Q::from_integer(2.into());
    let f5 = n
        .b0
        .pow(2)
        .mul(&n.a11)
        .add(&n.b1.pow(2).mul(&n.a00))
        .sub(&n.a01.mul(&n.b0).mul(&n.b1).scale(&two));
    let f2 = n.a00.mul(&n.a11).sub(&n.a01.pow(2));
    if f5.is_zero() {
        return Err(Error::DegenerateConfiguration("F5 vanishes identically".into()));
    }
    if f2.is_zero() {
        return Err(Error::DegenerateConfiguration("F2 vanishes identically".into()));
    }
    Ok((f5, f2))
}

/// Determinant of `[[A00, A01, B0], [A01, A11, B1], [B0, B1, 0]]` by the
/// permutation expansion.
pub fn bordered_determinant(n: &NormalizedCubic) -> BinaryForm {
    let z = BinaryForm::zero(0);
    let m: [[&BinaryForm; 3]; 3] =
        [[&n.a00, &n.a01, &n.b0], [&n.a01, &n.a11, &n.b1], [&n.b0, &n.b1, &z]];
    let perms: [([usize; 3], i64); 6] = [
        ([0, 1, 2], 1),
        ([1, 2, 0], 1),
        ([2, 0, 1], 1),
        ([0, 2, 1], -1),
        ([2, 1, 0], -1),
        ([1, 0, 2], -1),
    ];
    let mut acc = BinaryForm::zero(5);
    for (p, sign) in perms {
        if p[2] == 2 {
            continue; // uses the zero corner
        }
        let term = m[0][p[0]].mul(m[1][p[1]]).mul(m[2][p[2]]);
        acc = acc.add(&term.scale(&Q::from_integer(sign.into())));
    }
    acc
}
