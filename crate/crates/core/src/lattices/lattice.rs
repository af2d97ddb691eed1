use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::intmat::{self, IntMat};
use crate::error::{Error, Result};
use crate::rational::Q;

/// A lattice given by its Gram matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct IntegralLattice {
    rank: usize,
    gram: Vec<Vec<i64>>,
}

impl IntegralLattice {
    pub fn new(gram: Vec<Vec<i64>>) -> Result<Self> {
        let n = gram.len();
        for (i, row) in gram.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Parse(format!("gram row {i} has length {}", row.len())));
            }
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::Parse(format!("gram not symmetric at ({i},{j})")));
                }
            }
        }
        Ok(IntegralLattice { rank: n, gram })
    }

    pub fn zero() -> Self {
        IntegralLattice { rank: 0, gram: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn gram_big(&self) -> IntMat {
        intmat::from_i64(&self.gram)
    }

    pub fn is_even(&self) -> bool {
        (0..self.rank).all(|i| self.gram[i][i] % 2 == 0)
    }

    /// `L(n)`: the form multiplied by `n`.
    pub fn scale(&self, n: i64) -> Self {
        assert!(n != 0, "scaling by zero");
        IntegralLattice {
            rank: self.rank,
            gram: self.gram.iter().map(|r| r.iter().map(|x| x * n).collect()).collect(),
        }
    }

    pub fn direct_sum(&self, other: &IntegralLattice) -> Self {
        let n = self.rank + other.rank;
        let mut gram = vec![vec![0; n]; n];
        for i in 0..self.rank {
            gram[i][..self.rank].copy_from_slice(&self.gram[i]);
        }
        for i in 0..other.rank {
            gram[self.rank + i][self.rank..].copy_from_slice(&other.gram[i]);
        }
        IntegralLattice { rank: n, gram }
    }

    pub fn power(&self, k: usize) -> Self {
        (0..k).fold(IntegralLattice::zero(), |acc, _| acc.direct_sum(self))
    }

    pub fn det(&self) -> BigInt {
        intmat::det(&self.gram_big())
    }

    /// `|det|`, the order of the discriminant group.
    pub fn discriminant_order(&self) -> BigInt {
        self.det().abs()
    }

    pub fn pairing(&self, x: &[Q], y: &[Q]) -> Q {
        let mut s = Q::zero();
        for i in 0..self.rank {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.rank {
                if self.gram[i][j] != 0 && !y[j].is_zero() {
                    s += &x[i] * &y[j] * Q::from_integer(self.gram[i][j].into());
                }
            }
        }
        s
    }

    pub fn pairing_int(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut s = 0;
        for i in 0..self.rank {
            if x[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                s += x[i] * self.gram[i][j] * y[j];
            }
        }
        s
    }

    /// Sylvester signature `(positive, negative)`; errors on degenerate forms.
    pub fn signature(&self) -> Result<(usize, usize)> {
        let (p, n, z) = inertia(&self.gram);
        if z > 0 {
            return Err(Error::DegenerateLattice { radical_rank: z });
        }
        Ok((p, n))
    }
}

/// `(positive, negative, zero)` counts of a symmetric integer matrix via
/// rational LDL^T with symmetric pivoting.
pub fn inertia(gram: &[Vec<i64>]) -> (usize, usize, usize) {
    let mut a: Vec<Vec<Q>> = gram
        .iter()
        .map(|r| r.iter().map(|&x| Q::from_integer(x.into())).collect())
        .collect();
    let (mut pos, mut neg) = (0, 0);
    let mut n = a.len();
    while n > 0 {
        let pivot = match (0..n).find(|&i| !a[i][i].is_zero()) {
            Some(i) => i,
            None => {
                let Some((i, j)) = (0..n)
                    .flat_map(|i| (0..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !a[i][j].is_zero())
                else {
                    return (pos, neg, n);
                };
                // replace e_i by e_i + e_j: the new diagonal entry is 2 a_ij
                for k in 0..n {
                    let t = a[j][k].clone();
                    a[i][k] += t;
                }
                for k in 0..n {
                    let t = a[k][j].clone();
                    a[k][i] += t;
                }
                i
            }
        };
        let p = a[pivot][pivot].clone();
        if p.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        // Schur complement after moving the pivot to the end
        a.swap(pivot, n - 1);
        for r in a.iter_mut() {
            r.swap(pivot, n - 1);
        }
        let last = a[n - 1].clone();
        for i in 0..n - 1 {
            if last[i].is_zero() {
                continue;
            }
            let f = &last[i] / &p;
            for j in 0..n - 1 {
                let t = &f * &last[j];
                a[i][j] -= t;
            }
        }
        a.pop();
        for r in a.iter_mut() {
            r.pop();
        }
        n -= 1;
    }
    (pos, neg, 0)
}

/// Exact `x^T G y` with `G` integral and rational vectors.
pub fn rational_pairing(gram: &IntMat, x: &[Q], y: &[Q]) -> Q {
    let mut s = Q::zero();
    for (i, row) in gram.iter().enumerate() {
        if x[i].is_zero() {
            continue;
        }
        for (j, g) in row.iter().enumerate() {
            if !g.is_zero() && !y[j].is_zero() {
                s += &x[i] * &y[j] * Q::from_integer(g.clone());
            }
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> IntegralLattice {
        IntegralLattice::new(vec![vec![-2, 1], vec![1, -2]]).unwrap()
    }

    #[test]
    fn signatures() {
        let u = IntegralLattice::new(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(u.signature().unwrap(), (1, 1));
        assert_eq!(a2().signature().unwrap(), (0, 2));
        assert_eq!(a2().scale(-1).signature().unwrap(), (2, 0));
        let t = a2().scale(-1).direct_sum(&a2().power(4));
        assert_eq!(t.signature().unwrap(), (2, 8));
        let m = u.direct_sum(&a2().power(5));
        assert_eq!(m.signature().unwrap(), (1, 11));
        assert_eq!(m.discriminant_order(), BigInt::from(243));
    }

    #[test]
    fn degenerate_is_flagged() {
        let l = IntegralLattice::new(vec![vec![2, 2], vec![2, 2]]).unwrap();
        assert_eq!(l.signature(), Err(Error::DegenerateLattice { radical_rank: 1 }));
        let z = IntegralLattice::new(vec![vec![0, 0], vec![0, 0]]).unwrap();
        assert_eq!(z.signature(), Err(Error::DegenerateLattice { radical_rank: 2 }));
    }

    #[test]
    fn rejects_asymmetric() {
        assert!(IntegralLattice::new(vec![vec![0, 1], vec![2, 0]]).is_err());
    }
}
