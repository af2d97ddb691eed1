//! Finite quadratic forms, in particular discriminant forms `L^*/L`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::intmat::{self, Smith};
use super::lattice::{rational_pairing, IntegralLattice};
use crate::error::{Error, Result};
use crate::rational::{fmt_rational, rem_euclid, Q};

/// A quadratic form `q: A -> Q/2Z` on `A = Z/d_1 + ... + Z/d_k`
/// (`1 < d_1 | d_2 | ...` not required, only `d_i > 1`), stored on generators:
/// `q[i] = q(g_i)` in `[0, 2)` and `b[i][j] = b(g_i, g_j)` in `[0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteQuadraticForm {
    divisors: Vec<u64>,
    q: Vec<Q>,
    b: Vec<Vec<Q>>,
}

fn two() -> Q {
    Q::from_integer(2.into())
}

fn mod2(x: &Q) -> Q {
    rem_euclid(x, &two())
}

fn mod1(x: &Q) -> Q {
    rem_euclid(x, &Q::one())
}

fn qi(n: u64) -> Q {
    Q::from_integer(n.into())
}

impl FiniteQuadraticForm {
    pub fn new(divisors: Vec<u64>, q: Vec<Q>, b: Vec<Vec<Q>>) -> Result<Self> {
        let k = divisors.len();
        if q.len() != k || b.len() != k || b.iter().any(|r| r.len() != k) {
            return Err(Error::Parse("finite quadratic form: size mismatch".into()));
        }
        if divisors.iter().any(|&d| d < 2) {
            return Err(Error::Parse("finite quadratic form: divisors must exceed 1".into()));
        }
        let q: Vec<Q> = q.iter().map(mod2).collect();
        let b: Vec<Vec<Q>> = b.iter().map(|r| r.iter().map(mod1).collect()).collect();
        for i in 0..k {
            if b[i][i] != mod1(&q[i]) {
                return Err(Error::Parse(format!("b(g{i},g{i}) inconsistent with q(g{i})")));
            }
            for j in 0..k {
                if b[i][j] != b[j][i] {
                    return Err(Error::Parse("finite quadratic form: b not symmetric".into()));
                }
            }
        }
        Ok(FiniteQuadraticForm { divisors, q, b })
    }

    pub fn trivial() -> Self {
        FiniteQuadraticForm { divisors: Vec::new(), q: Vec::new(), b: Vec::new() }
    }

    pub fn divisors(&self) -> &[u64] {
        &self.divisors
    }

    pub fn generator_values(&self) -> &[Q] {
        &self.q
    }

    pub fn bilinear_matrix(&self) -> &[Vec<Q>] {
        &self.b
    }

    pub fn order(&self) -> u64 {
        self.divisors.iter().product()
    }

    pub fn len(&self) -> usize {
        self.divisors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.divisors.is_empty()
    }

    /// `q(sum x_i g_i)` in `[0, 2)`.
    pub fn value(&self, x: &[i64]) -> Q {
        let mut s = Q::zero();
        for i in 0..self.len() {
            if x[i] == 0 {
                continue;
            }
            s += Q::from_integer((x[i] * x[i]).into()) * &self.q[i];
            for j in i + 1..self.len() {
                if x[j] != 0 {
                    s += Q::from_integer((2 * x[i] * x[j]).into()) * &self.b[i][j];
                }
            }
        }
        mod2(&s)
    }

    /// `b(x, y)` in `[0, 1)`.
    pub fn bilinear(&self, x: &[i64], y: &[i64]) -> Q {
        let mut s = Q::zero();
        for i in 0..self.len() {
            if x[i] == 0 {
                continue;
            }
            for j in 0..self.len() {
                if y[j] != 0 {
                    s += Q::from_integer((x[i] * y[j]).into()) * &self.b[i][j];
                }
            }
        }
        mod1(&s)
    }

    pub fn negate(&self) -> Self {
        FiniteQuadraticForm {
            divisors: self.divisors.clone(),
            q: self.q.iter().map(|x| mod2(&-x)).collect(),
            b: self.b.iter().map(|r| r.iter().map(|x| mod1(&-x)).collect()).collect(),
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let k = self.len() + other.len();
        let mut b = vec![vec![Q::zero(); k]; k];
        for i in 0..self.len() {
            b[i][..self.len()].clone_from_slice(&self.b[i]);
        }
        for i in 0..other.len() {
            b[self.len() + i][self.len()..].clone_from_slice(&other.b[i]);
        }
        FiniteQuadraticForm {
            divisors: self.divisors.iter().chain(&other.divisors).copied().collect(),
            q: self.q.iter().chain(&other.q).cloned().collect(),
            b,
        }
    }

    /// Primes dividing the group order, ascending.
    pub fn primes(&self) -> Vec<u64> {
        let mut ps = Vec::new();
        for &d in &self.divisors {
            let mut n = d;
            let mut p = 2;
            while n > 1 {
                if n % p == 0 {
                    if !ps.contains(&p) {
                        ps.push(p);
                    }
                    n /= p;
                } else {
                    p += 1;
                }
            }
        }
        ps.sort_unstable();
        ps
    }

    /// Restriction to the `p`-primary subgroup, generated by `(d_i / p^a) g_i`
    /// where `p^a` exactly divides `d_i`.
    pub fn p_part(&self, p: u64) -> Self {
        let mut idx = Vec::new();
        let mut divisors = Vec::new();
        let mut mult = Vec::new();
        for (i, &d) in self.divisors.iter().enumerate() {
            let mut pa = 1;
            while d % (pa * p) == 0 {
                pa *= p;
            }
            if pa > 1 {
                idx.push(i);
                divisors.push(pa);
                mult.push(d / pa);
            }
        }
        let q = idx.iter().zip(&mult).map(|(&i, &c)| mod2(&(qi(c * c) * &self.q[i]))).collect();
        let b = idx
            .iter()
            .zip(&mult)
            .map(|(&i, &ci)| {
                idx.iter()
                    .zip(&mult)
                    .map(|(&j, &cj)| mod1(&(qi(ci * cj) * &self.b[i][j])))
                    .collect()
            })
            .collect();
        FiniteQuadraticForm { divisors, q, b }
    }

    /// Primary decomposition of the group: sorted prime powers.
    pub fn abelian_invariants(&self) -> Vec<u64> {
        let mut out = Vec::new();
        for &d in &self.divisors {
            let mut n = d;
            let mut p = 2;
            while n > 1 {
                if n % p == 0 {
                    let mut pa = 1;
                    while n % p == 0 {
                        n /= p;
                        pa *= p;
                    }
                    out.push(pa);
                }
                p += 1;
            }
        }
        out.sort_unstable();
        out
    }

    /// All elements as coordinate vectors, in lexicographic order.
    pub fn elements(&self) -> Vec<Vec<i64>> {
        let mut out = vec![Vec::new()];
        for &d in &self.divisors {
            out = out
                .into_iter()
                .flat_map(|v| {
                    (0..d as i64).map(move |c| {
                        let mut w = v.clone();
                        w.push(c);
                        w
                    })
                })
                .collect();
        }
        out
    }

    pub fn reduce(&self, x: &[i64]) -> Vec<i64> {
        x.iter().zip(&self.divisors).map(|(&c, &d)| c.rem_euclid(d as i64)).collect()
    }

    /// Order of an element.
    pub fn element_order(&self, x: &[i64]) -> u64 {
        x.iter()
            .zip(&self.divisors)
            .map(|(&c, &d)| d / (c.rem_euclid(d as i64) as u64).gcd(&d))
            .fold(1, |acc, o| acc.lcm(&o))
    }
}

#[derive(Serialize)]
struct FqfJson {
    divisors: Vec<u64>,
    q_table: Vec<String>,
    b_table: Vec<Vec<String>>,
}

impl Serialize for FiniteQuadraticForm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FqfJson {
            divisors: self.divisors.clone(),
            q_table: self.q.iter().map(fmt_rational).collect(),
            b_table: self.b.iter().map(|r| r.iter().map(fmt_rational).collect()).collect(),
        }
        .serialize(s)
    }
}

/// The discriminant group of a lattice together with its generators in
/// `L^* ⊂ L ⊗ Q` (coordinates in the lattice basis).
#[derive(Debug, Clone)]
pub struct DiscriminantGroup {
    pub form: FiniteQuadraticForm,
    pub generators: Vec<Vec<Q>>,
    smith: Smith,
    /// positions in the Smith diagonal of the nontrivial factors
    positions: Vec<usize>,
}

impl DiscriminantGroup {
    /// Coordinates of `x ∈ L^*` with respect to the generators.
    pub fn coordinates(&self, gram: &IntegralLattice, x: &[Q]) -> Result<Vec<i64>> {
        let g = gram.gram_big();
        let mut gx = Vec::with_capacity(x.len());
        for row in &g {
            let mut s = Q::zero();
            for (gij, xj) in row.iter().zip(x) {
                s += Q::from_integer(gij.clone()) * xj;
            }
            if !s.is_integer() {
                return Err(Error::Internal("vector is not in the dual lattice".into()));
            }
            gx.push(s.to_integer());
        }
        let y: Vec<BigInt> = self
            .smith
            .u
            .iter()
            .map(|row| row.iter().zip(&gx).map(|(a, b)| a * b).sum())
            .collect();
        Ok(self
            .positions
            .iter()
            .zip(&self.form.divisors)
            .map(|(&i, &d)| y[i].mod_floor(&BigInt::from(d)).to_i64().unwrap())
            .collect())
    }
}

/// Discriminant form of an even nondegenerate lattice, computed from the
/// Smith normal form of the Gram matrix.
pub fn discriminant_group(l: &IntegralLattice) -> Result<DiscriminantGroup> {
    if !l.is_even() {
        return Err(Error::OddLattice);
    }
    let g = l.gram_big();
    let smith = intmat::smith_normal_form(&g);
    if !smith.verify(&g) {
        return Err(Error::Internal("Smith normal form failed verification".into()));
    }
    let diag = smith.diagonal();
    let zeros = diag.iter().filter(|d| d.is_zero()).count();
    if zeros > 0 {
        return Err(Error::DegenerateLattice { radical_rank: zeros });
    }
    let n = l.rank();
    let mut divisors = Vec::new();
    let mut generators = Vec::new();
    let mut positions = Vec::new();
    for (i, d) in diag.iter().enumerate() {
        if d.is_one() {
            continue;
        }
        let dd = d
            .to_u64()
            .ok_or_else(|| Error::Unsupported(format!("elementary divisor {d} too large")))?;
        divisors.push(dd);
        positions.push(i);
        generators.push(
            (0..n)
                .map(|r| Q::new(smith.v[r][i].clone(), d.clone()))
                .collect::<Vec<Q>>(),
        );
    }
    let k = generators.len();
    let q: Vec<Q> =
        generators.iter().map(|x| mod2(&rational_pairing(&g, x, x))).collect();
    let b: Vec<Vec<Q>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| mod1(&rational_pairing(&g, &generators[i], &generators[j])))
                .collect()
        })
        .collect();
    debug_assert!(diag.iter().all(|d| d.is_positive()));
    Ok(DiscriminantGroup {
        form: FiniteQuadraticForm { divisors, q, b },
        generators,
        smith,
        positions,
    })
}

pub fn discriminant_form(l: &IntegralLattice) -> Result<FiniteQuadraticForm> {
    Ok(discriminant_group(l)?.form)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattices::named::parse_lattice;
    use crate::rational::qf;

    fn disc(s: &str) -> FiniteQuadraticForm {
        discriminant_form(&parse_lattice(s).unwrap()).unwrap()
    }

    #[test]
    fn a2_and_u() {
        let f = disc("A2");
        assert_eq!(f.divisors(), &[3]);
        assert_eq!(f.generator_values(), &[qf(4, 3)]);
        assert!(disc("U").is_empty());
        assert!(disc("E8").is_empty());
        let m = disc("U+A2^5");
        assert_eq!(m.order(), 243);
        assert_eq!(m.abelian_invariants(), vec![3; 5]);
    }

    #[test]
    fn d4_values() {
        let f = disc("D4");
        assert_eq!(f.abelian_invariants(), vec![2, 2]);
        for x in f.elements().iter().filter(|x| x.iter().any(|&c| c != 0)) {
            assert_eq!(f.value(x), Q::one());
        }
    }

    #[test]
    fn odd_and_degenerate_rejected() {
        assert_eq!(discriminant_form(&parse_lattice("I(1,6)").unwrap()), Err(Error::OddLattice));
        let l = IntegralLattice::new(vec![vec![2, 2], vec![2, 2]]).unwrap();
        assert_eq!(discriminant_form(&l), Err(Error::DegenerateLattice { radical_rank: 1 }));
    }

    #[test]
    fn polarization_identity() {
        for s in ["A2(-2)+A2(2)", "D4+A2^2", "E6+A1", "A3(2)"] {
            let f = disc(s);
            let els = f.elements();
            for x in &els {
                for y in &els {
                    let sum: Vec<i64> = x.iter().zip(y).map(|(a, b)| a + b).collect();
                    let lhs = mod2(&(f.value(&sum) - f.value(x) - f.value(y)));
                    assert_eq!(lhs, mod2(&(two() * f.bilinear(x, y))), "{s}");
                }
                let x3: Vec<i64> = x.iter().map(|c| 3 * c).collect();
                assert_eq!(f.value(&x3), mod2(&(Q::from_integer(9.into()) * f.value(x))));
            }
        }
    }

    #[test]
    fn p_parts_multiply_to_whole() {
        let f = disc("A2(-2)+A2(2)");
        assert_eq!(f.primes(), vec![2, 3]);
        assert_eq!(f.p_part(2).order() * f.p_part(3).order(), f.order());
        assert_eq!(f.p_part(2).abelian_invariants(), vec![2; 4]);
    }

    #[test]
    fn coordinates_of_generators() {
        let l = parse_lattice("A2(2)+D4").unwrap();
        let dg = discriminant_group(&l).unwrap();
        for (i, g) in dg.generators.iter().enumerate() {
            let c = dg.coordinates(&l, g).unwrap();
            for (j, cj) in c.iter().enumerate() {
                assert_eq!(*cj, i64::from(i == j));
            }
        }
    }
}
