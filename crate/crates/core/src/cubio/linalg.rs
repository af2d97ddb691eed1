//! Exact linear algebra over Q.

use num_traits::{One, Zero};
use rand::Rng;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::rational::{common_denominator, Q};

pub type Matrix = Vec<Vec<Q>>;

/// Reduced row echelon form and pivot columns.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut a = m.clone();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = Q::one() / &a[r][c];
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let pivot_row = a[r].clone();
                for (x, y) in a[i].iter_mut().zip(pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).1.len()
}

/// Basis of `{x : m x = 0}`.
pub fn nullspace(m: &Matrix, cols: usize) -> Vec<Vec<Q>> {
    let (r, pivots) = rref(m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); cols];
            v[f] = Q::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r[row][f].clone();
            }
            v
        })
        .collect()
}

pub fn det(m: &Matrix) -> Q {
    let n = m.len();
    let mut a = m.clone();
    let mut d = Q::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Q::zero();
        };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d *= &a[c][c];
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] / &a[c][c];
            let pr = a[c].clone();
            for (x, y) in a[i].iter_mut().zip(pr) {
                *x -= &f * y;
            }
        }
    }
    d
}

pub fn inverse(m: &Matrix) -> Option<Matrix> {
    let n = m.len();
    let aug: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            row
        })
        .collect();
    let (r, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(r.into_iter().map(|row| row[n..].to_vec()).collect())
}

pub fn mat_vec(m: &Matrix, v: &[Q]) -> Vec<Q> {
    m.iter().map(|r| r.iter().zip(v).fold(Q::zero(), |s, (a, b)| s + a * b)).collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|r| {
            (0..cols)
                .map(|j| r.iter().zip(b).fold(Q::zero(), |s, (x, row)| s + x * &row[j]))
                .collect()
        })
        .collect()
}

/// Columns as rows.
pub fn transpose(m: &Matrix) -> Matrix {
    let cols = m.first().map_or(0, |r| r.len());
    (0..cols).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
}

/// Rescale a nonzero vector to coprime integers with positive leading entry.
pub fn primitive(v: &[Q]) -> Vec<Q> {
    let den = Q::from_integer(common_denominator(v));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &den).to_integer()).collect();
    let mut g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return v.to_vec();
    }
    if ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x < &BigInt::zero()) {
        g = -g;
    }
    ints.into_iter().map(|x| Q::from_integer(x / &g)).collect()
}

/// A random invertible integer matrix with entries in `[-bound, bound]`.
pub fn random_invertible<R: Rng>(rng: &mut R, n: usize, bound: i64) -> Matrix {
    loop {
        let m: Matrix = (0..n)
            .map(|_| (0..n).map(|_| Q::from_integer(rng.gen_range(-bound..=bound).into())).collect())
            .collect();
        if !det(&m).is_zero() {
            return m;
        }
    }
}

/// Characteristic polynomial `det(tI - m)`, coefficients from the constant
/// term up (Faddeev-LeVerrier).
pub fn charpoly(m: &Matrix) -> Vec<Q> {
    let n = m.len();
    let mut c = vec![Q::zero(); n + 1];
    c[n] = Q::one();
    let mut mk: Matrix = vec![vec![Q::zero(); n]; n];
    for k in 1..=n {
        let am = mat_mul(m, &mk);
        mk = am;
        for (i, row) in mk.iter_mut().enumerate() {
            row[i] += &c[n - k + 1];
        }
        let amk = mat_mul(m, &mk);
        let tr: Q = (0..n).map(|i| amk[i][i].clone()).sum();
        c[n - k] = -tr / Q::from_integer((k as i64).into());
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn m(rows: &[&[i64]]) -> Matrix {
        rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
    }

    #[test]
    fn basics() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&a), 2);
        let ns = nullspace(&a, 3);
        assert_eq!(ns.len(), 1);
        assert!(mat_vec(&a, &ns[0]).iter().all(|x| x.is_zero()));
        assert_eq!(det(&a), q(0));
        let b = m(&[&[2, 1], &[1, 1]]);
        assert_eq!(det(&b), q(1));
        let bi = inverse(&b).unwrap();
        assert_eq!(mat_mul(&b, &bi), m(&[&[1, 0], &[0, 1]]));
        assert!(inverse(&a).is_none());
    }

    #[test]
    fn charpoly_small() {
        // t^2 - 3t + 1
        assert_eq!(charpoly(&m(&[&[2, 1], &[1, 1]])), vec![q(1), q(-3), q(1)]);
        // (t - 1)(t - 2)(t - 3) = t^3 - 6t^2 + 11t - 6
        let u = m(&[&[1, 5, -2], &[0, 2, 7], &[0, 0, 3]]);
        assert_eq!(charpoly(&u), vec![q(-6), q(11), q(-6), q(1)]);
    }

    #[test]
    fn primitive_vectors() {
        let v = vec![Q::new((-2).into(), 3.into()), q(0), Q::new(4.into(), 9.into())];
        assert_eq!(primitive(&v), vec![q(3), q(0), q(-2)]);
    }
}
