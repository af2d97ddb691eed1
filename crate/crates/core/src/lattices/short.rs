//! Exact enumeration of lattice vectors of a given norm.

use num_traits::{ToPrimitive, Zero};

use super::intmat::{self, IntMat};
use super::lattice::{inertia, IntegralLattice};
use crate::error::{Error, Result};
use crate::rational::Q;

/// All `x` with `x^T G x = norm` for a definite lattice, sorted.
pub fn short_vectors(l: &IntegralLattice, norm: i64) -> Result<Vec<Vec<i64>>> {
    let n = l.rank();
    let (p, m, z) = inertia(l.gram());
    if z > 0 || (p != n && m != n) {
        return Err(Error::Unsupported(
            "vector enumeration needs a definite lattice".into(),
        ));
    }
    if n > 10 {
        return Err(Error::Unsupported(format!("rank {n} exceeds enumeration limit 10")));
    }
    // work with the positive definite form
    let sign = if m == n { -1 } else { 1 };
    let target = norm * sign;
    if target < 0 {
        return Ok(Vec::new());
    }
    let a: Vec<Vec<Q>> = l
        .gram()
        .iter()
        .map(|r| r.iter().map(|&x| Q::from_integer((x * sign).into())).collect())
        .collect();
    let (d, r) = ldl(&a);
    let mut out = Vec::new();
    let mut x = vec![0i64; n];
    search(&d, &r, n, Q::from_integer(target.into()), &mut x, &mut out);
    let mut out: Vec<Vec<i64>> = out
        .into_iter()
        .filter(|v: &Vec<i64>| l.pairing_int(v, v) == norm)
        .collect();
    out.sort();
    Ok(out)
}

/// `A = R^T diag(d) R` with `R` unit upper triangular.
fn ldl(a: &[Vec<Q>]) -> (Vec<Q>, Vec<Vec<Q>>) {
    let n = a.len();
    let mut d = vec![Q::zero(); n];
    let mut r = vec![vec![Q::zero(); n]; n];
    for i in 0..n {
        let mut di = a[i][i].clone();
        for k in 0..i {
            di -= &d[k] * &r[k][i] * &r[k][i];
        }
        d[i] = di;
        r[i][i] = Q::from_integer(1.into());
        for j in i + 1..n {
            let mut s = a[i][j].clone();
            for k in 0..i {
                s -= &d[k] * &r[k][i] * &r[k][j];
            }
            r[i][j] = s / &d[i];
        }
    }
    (d, r)
}

/// Fixes coordinates from the last one down. `budget` is what remains of the
/// target after the coordinates `level..n` are fixed.
fn search(d: &[Q], r: &[Vec<Q>], level: usize, budget: Q, x: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if level == 0 {
        if budget.is_zero() {
            out.push(x.clone());
        }
        return;
    }
    let i = level - 1;
    let n = d.len();
    let mut center = Q::zero();
    for j in i + 1..n {
        if x[j] != 0 {
            center -= &r[i][j] * Q::from_integer(x[j].into());
        }
    }
    let radius = (budget.to_f64().unwrap() / d[i].to_f64().unwrap()).max(0.0).sqrt();
    let c = center.to_f64().unwrap();
    let lo = (c - radius).floor() as i64 - 1;
    let hi = (c + radius).ceil() as i64 + 1;
    for xi in lo..=hi {
        let diff = Q::from_integer(xi.into()) - &center;
        let used = &d[i] * &diff * &diff;
        if used > budget {
            continue;
        }
        x[i] = xi;
        search(d, r, i, &budget - used, x, out);
    }
    x[i] = 0;
}

/// Vectors of the given norm in the orthogonal complement of `v`, assumed
/// definite, returned in the coordinates of `l`.
pub fn short_vectors_orthogonal(l: &IntegralLattice, v: &[i64], norm: i64) -> Result<Vec<Vec<i64>>> {
    let row: IntMat = vec![(0..l.rank())
        .map(|j| (0..l.rank()).map(|i| v[i] * l.gram()[i][j]).sum::<i64>().into())
        .collect()];
    let basis = intmat::integer_kernel(&row);
    let k = basis.first().map_or(0, |r| r.len());
    let to_i = |x: &num_bigint::BigInt| x.to_i64().ok_or_else(|| Error::Internal("overflow".into()));
    let b: Vec<Vec<i64>> = basis
        .iter()
        .map(|r| r.iter().map(to_i).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let gram: Vec<Vec<i64>> = (0..k)
        .map(|s| {
            (0..k)
                .map(|t| {
                    let cs: Vec<i64> = b.iter().map(|r| r[s]).collect();
                    let ct: Vec<i64> = b.iter().map(|r| r[t]).collect();
                    l.pairing_int(&cs, &ct)
                })
                .collect()
        })
        .collect();
    let sub = IntegralLattice::new(gram)?;
    let mut out: Vec<Vec<i64>> = short_vectors(&sub, norm)?
        .into_iter()
        .map(|c| (0..l.rank()).map(|i| (0..k).map(|s| b[i][s] * c[s]).sum()).collect())
        .collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattices::named::parse_lattice;

    #[test]
    fn root_counts() {
        let count = |s: &str| short_vectors(&parse_lattice(s).unwrap(), -2).unwrap().len();
        assert_eq!(count("A2"), 6);
        assert_eq!(count("D4"), 24);
        assert_eq!(count("E6"), 72);
        assert_eq!(count("A2(-1)"), 0);
        assert_eq!(short_vectors(&parse_lattice("A2(-1)").unwrap(), 2).unwrap().len(), 6);
    }

    #[test]
    fn e8_roots() {
        assert_eq!(short_vectors(&parse_lattice("E8").unwrap(), -2).unwrap().len(), 240);
    }

    #[test]
    fn indefinite_is_unsupported() {
        assert!(short_vectors(&parse_lattice("U").unwrap(), 0).is_err());
    }

    #[test]
    fn canonical_class_complement() {
        let l = parse_lattice("I(1,6)").unwrap();
        let k = [-3, 1, 1, 1, 1, 1, 1];
        let roots = short_vectors_orthogonal(&l, &k, -2).unwrap();
        assert_eq!(roots.len(), 72);
        for r in &roots {
            assert_eq!(l.pairing_int(r, &k), 0);
            assert_eq!(l.pairing_int(r, r), -2);
        }
    }
}
