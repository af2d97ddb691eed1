//! Dense integer matrices over arbitrary-precision integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type IntMat = Vec<Vec<BigInt>>;

pub fn from_i64(m: &[Vec<i64>]) -> IntMat {
    m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

pub fn identity(n: usize) -> IntMat {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

pub fn mul(a: &IntMat, b: &IntMat) -> IntMat {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            assert_eq!(row.len(), inner, "dimension mismatch");
            (0..cols)
                .map(|j| {
                    let mut s = BigInt::zero();
                    for k in 0..inner {
                        if !row[k].is_zero() && !b[k][j].is_zero() {
                            s += &row[k] * &b[k][j];
                        }
                    }
                    s
                })
                .collect()
        })
        .collect()
}

pub fn transpose(a: &IntMat) -> IntMat {
    let cols = a.first().map_or(0, |r| r.len());
    (0..cols).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn det(a: &IntMat) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m = a.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Smith normal form `U * A * V = D` with unimodular `U`, `V` and
/// `D = diag(d_1, ..., d_r, 0, ...)`, `d_i > 0`, `d_i | d_{i+1}`.
#[derive(Debug, Clone)]
pub struct Smith {
    pub u: IntMat,
    pub d: IntMat,
    pub v: IntMat,
}

impl Smith {
    pub fn diagonal(&self) -> Vec<BigInt> {
        let n = self.d.len().min(self.d.first().map_or(0, |r| r.len()));
        (0..n).map(|i| self.d[i][i].clone()).collect()
    }

    /// `U * A * V == D` with `D` diagonal and the divisibility chain intact.
    pub fn verify(&self, a: &IntMat) -> bool {
        if mul(&mul(&self.u, a), &self.v) != self.d {
            return false;
        }
        let diag = self.diagonal();
        let off_diag_zero = self.d.iter().enumerate().all(|(i, r)| {
            r.iter().enumerate().all(|(j, x)| i == j || x.is_zero())
        });
        let chain = diag.windows(2).all(|w| {
            if w[1].is_zero() {
                true
            } else {
                !w[0].is_zero() && (&w[1] % &w[0]).is_zero()
            }
        });
        off_diag_zero
            && chain
            && diag.iter().all(|x| !x.is_negative())
            && det(&self.u).abs().is_one()
            && det(&self.v).abs().is_one()
    }
}

pub fn smith_normal_form(a: &IntMat) -> Smith {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut d = a.clone();
    let mut u = identity(rows);
    let mut v = identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !d[i][j].is_zero()
                        && best.map_or(true, |(bi, bj)| d[i][j].abs() < d[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return Smith { u, d, v };
            };
            d.swap(t, pi);
            u.swap(t, pi);
            for r in d.iter_mut() {
                r.swap(t, pj);
            }
            for r in v.iter_mut() {
                r.swap(t, pj);
            }

            let mut clean = true;
            for i in t + 1..rows {
                let f = d[i][t].div_floor(&d[t][t]);
                if !f.is_zero() {
                    row_axpy(&mut d, i, t, &f);
                    row_axpy(&mut u, i, t, &f);
                }
                if !d[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                let f = d[t][j].div_floor(&d[t][t]);
                if !f.is_zero() {
                    col_axpy(&mut d, j, t, &f);
                    col_axpy(&mut v, j, t, &f);
                }
                if !d[t][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // pivot must divide the whole trailing block
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !(&d[i][j] % &d[t][t]).is_zero());
            match bad {
                Some((i, _)) => {
                    let one = -BigInt::one();
                    row_axpy(&mut d, t, i, &one);
                    row_axpy(&mut u, t, i, &one);
                }
                None => break,
            }
        }
        if d[t][t].is_negative() {
            for x in d[t].iter_mut() {
                *x = -x.clone();
            }
            for x in u[t].iter_mut() {
                *x = -x.clone();
            }
        }
    }
    Smith { u, d, v }
}

/// `m[i] -= f * m[k]`
fn row_axpy(m: &mut IntMat, i: usize, k: usize, f: &BigInt) {
    let src = m[k].clone();
    for (x, s) in m[i].iter_mut().zip(src.iter()) {
        *x -= f * s;
    }
}

/// column `j -= f * column k`
fn col_axpy(m: &mut IntMat, j: usize, k: usize, f: &BigInt) {
    for r in m.iter_mut() {
        let s = r[k].clone();
        r[j] -= f * s;
    }
}

/// Integral basis of `{x : a x = 0}` as columns of the returned matrix.
pub fn integer_kernel(a: &IntMat) -> IntMat {
    let cols = a.first().map_or(0, |r| r.len());
    let s = smith_normal_form(a);
    let rank = s.diagonal().iter().take_while(|x| !x.is_zero()).count();
    (0..cols).map(|i| s.v[i][rank..].to_vec()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMat {
        from_i64(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    #[test]
    fn smith_of_a2_scaled() {
        let a = m(&[&[4, -2], &[-2, 4]]);
        let s = smith_normal_form(&a);
        assert!(s.verify(&a));
        assert_eq!(s.diagonal(), vec![BigInt::from(2), BigInt::from(6)]);
    }

    #[test]
    fn smith_rectangular_and_singular() {
        let a = m(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let s = smith_normal_form(&a);
        assert!(s.verify(&a));
        assert_eq!(s.diagonal(), vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
        let b = m(&[&[1, 2, 3], &[2, 4, 6]]);
        let s = smith_normal_form(&b);
        assert!(s.verify(&b));
        assert_eq!(s.diagonal(), vec![BigInt::from(1), BigInt::from(0)]);
    }

    #[test]
    fn determinant() {
        assert_eq!(det(&m(&[&[-2, 1], &[1, -2]])), BigInt::from(3));
        assert_eq!(det(&m(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(det(&m(&[&[0, 1, 2], &[0, 3, 4], &[5, 6, 7]])), BigInt::from(-10));
    }

    #[test]
    fn kernel() {
        let a = m(&[&[1, 1, 1]]);
        let k = integer_kernel(&a);
        assert_eq!(k.len(), 3);
        assert_eq!(k[0].len(), 2);
        let prod = mul(&a, &k);
        assert!(prod.iter().flatten().all(|x| x.is_zero()));
    }
}
