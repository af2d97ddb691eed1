//! Explicit pairs `(F5, F2)` realizing each case, for tests and demos.

use num_traits::One;
use rand::seq::SliceRandom;
use rand::Rng;

use super::cases::{CaseId, CUSP_SHAPE};
use super::form::BinaryForm;
use crate::rational::{q, Q};

fn shape_of(case: CaseId) -> &'static [(usize, usize, usize)] {
    match case.row() {
        Some(r) => r.shape,
        None => CUSP_SHAPE,
    }
}

fn assemble(shape: &[(usize, usize, usize)], loci: &[BinaryForm]) -> (BinaryForm, BinaryForm) {
    let mut f5 = BinaryForm::constant(Q::one());
    let mut f2 = BinaryForm::constant(Q::one());
    for (&(m5, m2, _), l) in shape.iter().zip(loci) {
        f5 = f5.mul(&l.pow(m5));
        f2 = f2.mul(&l.pow(m2));
    }
    (f5, f2)
}

/// A fixed pair in the given case, built from the rational points
/// `0, oo, 1, -1, 2, -2, 3` in that order.
pub fn representative(case: CaseId) -> (BinaryForm, BinaryForm) {
    let points = [(0, 1), (1, 0), (1, 1), (-1, 1), (2, 1), (-2, 1), (3, 1)];
    let mut next = points.iter();
    let loci: Vec<BinaryForm> = shape_of(case)
        .iter()
        .map(|&(_, _, n)| {
            (0..n).fold(BinaryForm::constant(Q::one()), |acc, _| {
                let &(a, b) = next.next().expect("at most seven points");
                acc.mul(&BinaryForm::vanishing_at(&q(a), &q(b)))
            })
        })
        .collect();
    assemble(shape_of(case), &loci)
}

const SQUAREFREE: [i64; 8] = [2, 3, 5, 6, 7, 10, -1, -2];
const CUBEFREE: [i64; 5] = [2, 3, 5, 6, 7];

/// A random pair in the given case. Points of one class are grouped into
/// rational linear factors, irreducible quadratics `x0^2 - n x1^2` and
/// irreducible cubics `x0^3 - n x1^3`; the result is then moved by a random
/// invertible substitution and random scalars.
pub fn random_pair<R: Rng + ?Sized>(case: CaseId, rng: &mut R) -> (BinaryForm, BinaryForm) {
    random_pair_of_shape(shape_of(case), rng)
}

fn random_pair_of_shape<R: Rng + ?Sized>(
    shape: &[(usize, usize, usize)],
    rng: &mut R,
) -> (BinaryForm, BinaryForm) {
    let mut rational_pts: Vec<(i64, i64)> = Vec::new();
    let mut quad = SQUAREFREE.to_vec();
    quad.shuffle(rng);
    let mut cubic = CUBEFREE.to_vec();
    cubic.shuffle(rng);
    let mut fresh_point = |rng: &mut R| loop {
        let b: i64 = rng.gen_range(0..=3);
        let a: i64 = if b == 0 { 1 } else { rng.gen_range(-6..=6) };
        // compare as points of P^1
        if !rational_pts.iter().any(|&(c, d)| a * d == b * c) {
            rational_pts.push((a, b));
            return (a, b);
        }
    };
    let mut loci = Vec::new();
    for &(_, _, n) in shape {
        let mut left = n;
        let mut locus = BinaryForm::constant(Q::one());
        while left > 0 {
            let pick = rng.gen_range(0..3usize).min(left - 1);
            let factor = match pick {
                2 => BinaryForm::from_ints(&[1, 0, 0, -cubic.pop().unwrap()]),
                1 => BinaryForm::from_ints(&[1, 0, -quad.pop().unwrap()]),
                _ => {
                    let (a, b) = fresh_point(rng);
                    BinaryForm::vanishing_at(&q(a), &q(b))
                }
            };
            left -= pick + 1;
            locus = locus.mul(&factor);
        }
        loci.push(locus);
    }
    let (f5, f2) = assemble(shape, &loci);
    let (a, b, c, d) = loop {
        let m: [i64; 4] = std::array::from_fn(|_| rng.gen_range(-4..=4));
        if m[0] * m[3] - m[1] * m[2] != 0 {
            break (q(m[0]), q(m[1]), q(m[2]), q(m[3]));
        }
    };
    let s5 = Q::new(rng.gen_range(1..=7).into(), rng.gen_range(1..=5).into());
    let s2 = Q::new(rng.gen_range(-7..=-1).into(), rng.gen_range(1..=5).into());
    (
        f5.substitute(&a, &b, &c, &d).scale(&s5),
        f2.substitute(&a, &b, &c, &d).scale(&s2),
    )
}

/// `count` points, each a root of `F5` of order `m5` and of `F2` of order
/// `m2`. How they group into irreducible factors is chosen at random.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PointSpec {
    pub count: usize,
    pub m5: usize,
    pub m2: usize,
}

impl PointSpec {
    pub fn new(count: usize, m5: usize, m2: usize) -> Self {
        PointSpec { count, m5, m2 }
    }
}

/// A pair with the prescribed roots, moved by a random substitution.
/// The specs must account for degrees 5 and 2 exactly.
pub fn pair_from_specs<R: Rng + ?Sized>(specs: &[PointSpec], rng: &mut R) -> (BinaryForm, BinaryForm) {
    let shape: Vec<(usize, usize, usize)> = specs.iter().map(|s| (s.m5, s.m2, s.count)).collect();
    assert_eq!(shape.iter().map(|&(m5, _, d)| m5 * d).sum::<usize>(), 5);
    assert_eq!(shape.iter().map(|&(_, m2, d)| m2 * d).sum::<usize>(), 2);
    random_pair_of_shape(&shape, rng)
}

/// Random specs: a random multiplicity pattern for `F5` and one of the
/// patterns of `F2`, partly placed on roots of `F5`.
pub fn random_specs<R: Rng + ?Sized>(rng: &mut R) -> Vec<PointSpec> {
    let mut specs = Vec::new();
    let mut left = 5;
    while left > 0 {
        let d = rng.gen_range(1..=left.min(3));
        let m = rng.gen_range(1..=left / d);
        specs.push(PointSpec::new(d, m, 0));
        left -= d * m;
    }
    let f2_pattern: &[(usize, usize)] = match rng.gen_range(0..3) {
        0 => &[(1, 2)],
        1 => &[(1, 1), (1, 1)],
        _ => &[(2, 1)],
    };
    for &(d, m2) in f2_pattern {
        let free: Vec<usize> =
            (0..specs.len()).filter(|&i| specs[i].count == d && specs[i].m2 == 0 && specs[i].m5 > 0).collect();
        if !free.is_empty() && rng.gen_bool(0.6) {
            specs[*free.choose(rng).unwrap()].m2 = m2;
        } else {
            specs.push(PointSpec::new(d, 0, m2));
        }
    }
    specs
}
