//! The cubic surface obtained by blowing up six points of the plane,
//! embedded by the cubics through them.

use num_traits::Zero;
use rand::Rng;
use serde::Serialize;

use super::cubic::{contains_line, CubicForm, ProjLine};
use super::linalg::{det, nullspace, primitive, rank, Matrix};
use super::mpoly::{monomials, MPoly};
use crate::e6lines::{fmt_class, PicClass};
use crate::error::{Error, Result};
use crate::rational::Q;

pub type PlanePoint = [Q; 3];

#[derive(Debug, Clone, Serialize)]
pub struct LineImage {
    #[serde(serialize_with = "ser_class")]
    pub class: PicClass,
    pub line: ProjLine,
}

fn ser_class<S: serde::Serializer>(c: &PicClass, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_class(c))
}

#[derive(Debug, Clone, Serialize)]
pub struct BlowUp {
    pub cubic: CubicForm,
    /// the four plane cubics defining the map, as coefficient vectors
    #[serde(skip)]
    pub basis: Vec<MPoly>,
    /// images of the 15 lines `p_i p_j`, then of the 6 conics through five points
    pub lines: Vec<LineImage>,
}

impl BlowUp {
    /// Image of the line `p_i p_j` (indices from 1).
    pub fn chord(&self, i: usize, j: usize) -> Option<&ProjLine> {
        let (i, j) = (i.min(j), i.max(j));
        self.lines
            .iter()
            .find(|l| l.class[0] == 1 && l.class[i] == -1 && l.class[j] == -1)
            .map(|l| &l.line)
    }

    /// Images of `p_1 p_2` and `p_1 p_3`, disjoint on the surface.
    pub fn default_skew_pair(&self) -> (ProjLine, ProjLine) {
        (self.chord(1, 2).unwrap().clone(), self.chord(1, 3).unwrap().clone())
    }

    fn map(&self, x: &[Q]) -> Vec<Q> {
        self.basis.iter().map(|c| c.eval(x)).collect()
    }
}

/// Values of all degree-`degree` monomials at `x`.
fn eval_row(x: &[Q], degree: u32) -> Vec<Q> {
    monomials(3, degree)
        .iter()
        .map(|e| x.iter().zip(e).map(|(xi, &k)| num_traits::pow(xi.clone(), k as usize)).product())
        .collect()
}

/// Exact general-position test: distinct, no three collinear, not on a conic.
pub fn check_general_position(points: &[PlanePoint]) -> Result<()> {
    if points.len() != 6 {
        return Err(Error::DegeneratePosition(format!("need 6 points, got {}", points.len())));
    }
    for (i, p) in points.iter().enumerate() {
        if p.iter().all(Zero::is_zero) {
            return Err(Error::DegeneratePosition(format!("point {} is zero", i + 1)));
        }
    }
    for i in 0..6 {
        for j in i + 1..6 {
            if rank(&vec![points[i].to_vec(), points[j].to_vec()]) < 2 {
                return Err(Error::DegeneratePosition(format!(
                    "points {} and {} coincide",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    for i in 0..6 {
        for j in i + 1..6 {
            for k in j + 1..6 {
                let m: Matrix = vec![points[i].to_vec(), points[j].to_vec(), points[k].to_vec()];
                if det(&m).is_zero() {
                    return Err(Error::DegeneratePosition(format!(
                        "points {}, {}, {} are collinear",
                        i + 1,
                        j + 1,
                        k + 1
                    )));
                }
            }
        }
    }
    let conic: Matrix = points.iter().map(|p| eval_row(p, 2)).collect();
    if det(&conic).is_zero() {
        return Err(Error::DegeneratePosition("the six points lie on a conic".into()));
    }
    Ok(())
}

/// The cubic surface and 21 of its lines from six points in general position.
pub fn cubic_from_points(points: &[PlanePoint]) -> Result<BlowUp> {
    check_general_position(points)?;
    let eval: Matrix = points.iter().map(|p| eval_row(p, 3)).collect();
    let ns = nullspace(&eval, 10);
    if ns.len() != 4 {
        return Err(Error::NullspaceDimension { expected: 4, found: ns.len() });
    }
    let basis: Vec<MPoly> = ns.iter().map(|v| MPoly::from_coeffs(3, 3, &primitive(v))).collect();

    let cubic_monomials = monomials(4, 3);
    let columns: Vec<Vec<Q>> = cubic_monomials
        .iter()
        .map(|e| {
            e.iter()
                .zip(&basis)
                .fold(MPoly::constant(3, Q::from_integer(1.into())), |acc, (&k, c)| {
                    acc.mul(&c.pow(k))
                })
                .coeffs(9)
        })
        .collect();
    let rows = columns[0].len();
    let system: Matrix = (0..rows).map(|r| columns.iter().map(|c| c[r].clone()).collect()).collect();
    let rel = nullspace(&system, cubic_monomials.len());
    if rel.len() != 1 {
        return Err(Error::NullspaceDimension { expected: 1, found: rel.len() });
    }
    let cubic = CubicForm::new(primitive(&rel[0]))?;

    let mut out = BlowUp { cubic, basis, lines: Vec::with_capacity(21) };
    for i in 0..6 {
        for j in i + 1..6 {
            let on = |lambda: i64| -> Vec<Q> {
                let l = Q::from_integer(lambda.into());
                (0..3).map(|c| &points[i][c] + &l * &points[j][c]).collect()
            };
            let line = ProjLine::from_vecs(&out.map(&on(1)), &out.map(&on(2)))?.normalized();
            let mut class = [0; 7];
            class[0] = 1;
            class[i + 1] = -1;
            class[j + 1] = -1;
            out.lines.push(LineImage { class, line });
        }
    }
    for skip in 0..6 {
        let line = conic_image(&out, points, skip)?;
        let mut class = [-1; 7];
        class[0] = 2;
        class[skip + 1] = 0;
        out.lines.push(LineImage { class, line });
    }
    for l in &out.lines {
        if !contains_line(&out.cubic, &l.line) {
            return Err(Error::Internal(format!("image line {} not on the cubic", fmt_class(&l.class))));
        }
    }
    Ok(out)
}

/// Image of the conic through all points but `points[skip]`, via two of its
/// points found as second intersections with lines through a base point.
fn conic_image(b: &BlowUp, points: &[PlanePoint], skip: usize) -> Result<ProjLine> {
    let rest: Vec<&PlanePoint> = (0..6).filter(|&i| i != skip).map(|i| &points[i]).collect();
    let m: Matrix = rest.iter().map(|p| eval_row(*p, 2)).collect();
    let ns = nullspace(&m, 6);
    if ns.len() != 1 {
        return Err(Error::NullspaceDimension { expected: 1, found: ns.len() });
    }
    let c = MPoly::from_coeffs(3, 2, &ns[0]);
    let base = rest[0];
    let mut images: Vec<Vec<Q>> = Vec::new();
    for d in direction_candidates() {
        let cd = c.eval(&d);
        if cd.is_zero() {
            continue;
        }
        let sum: Vec<Q> = base.iter().zip(&d).map(|(a, b)| a + b).collect();
        // 2 B(base, d) = C(base + d) - C(base) - C(d), with C(base) = 0
        let twice_b = c.eval(&sum) - &cd;
        if twice_b.is_zero() {
            continue;
        }
        let s = -twice_b / cd;
        let x: Vec<Q> = base.iter().zip(&d).map(|(a, b)| a + &s * b).collect();
        debug_assert!(c.eval(&x).is_zero());
        let img = b.map(&x);
        if img.iter().all(Zero::is_zero) {
            continue;
        }
        let mut trial = images.clone();
        trial.push(img);
        if rank(&trial) == trial.len() {
            images = trial;
        }
        if images.len() == 2 {
            return Ok(ProjLine::from_vecs(&images[0], &images[1])?.normalized());
        }
    }
    Err(Error::Internal("no two distinct points found on the conic".into()))
}

fn direction_candidates() -> Vec<Vec<Q>> {
    let mut out = Vec::new();
    for a in -2i64..=2 {
        for b in -2i64..=2 {
            for c in 0i64..=2 {
                if (a, b, c) != (0, 0, 0) {
                    out.push(vec![a.into(), b.into(), c.into()].into_iter().map(Q::from_integer).collect());
                }
            }
        }
    }
    out
}

/// Six random integer points in general position, coordinates in `[-bound, bound]`.
pub fn random_general_points<R: Rng>(rng: &mut R, bound: i64) -> Vec<PlanePoint> {
    loop {
        let v: Vec<PlanePoint> = (0..6)
            .map(|_| std::array::from_fn(|_| Q::from_integer(rng.gen_range(-bound..=bound).into())))
            .collect();
        if check_general_position(&v).is_ok() {
            return v;
        }
    }
}
