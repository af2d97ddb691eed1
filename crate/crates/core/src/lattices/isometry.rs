//! Deciding isometry of finite quadratic forms, one primary part at a time.

use std::collections::HashSet;

use num_traits::ToPrimitive;

use super::fqf::FiniteQuadraticForm;
use crate::error::{Error, Result};
use crate::rational::Q;

/// A procedure that can settle isometry for some class of `p`-primary forms.
/// Both arguments are `p`-parts of the same prime with the same abelian
/// invariants. Returns `None` when the decider does not apply.
pub trait IsometryDecider: Send + Sync {
    fn name(&self) -> &'static str;
    fn decide(&self, p: u64, a: &FiniteQuadraticForm, b: &FiniteQuadraticForm) -> Option<bool>;
}

/// Elementary abelian `p`-groups for odd `p`: the form is determined by the
/// `F_p`-valued symmetric matrix `p * b`, classified by rank, radical
/// dimension and the square class of the determinant of its nondegenerate part.
pub struct ElementaryOdd;

/// Exhaustive search for an isometry, generator by generator.
pub struct Enumeration {
    pub max_order: u64,
}

impl ElementaryOdd {
    /// `(dimension, radical dimension, determinant is a square)`.
    pub fn invariants(p: u64, f: &FiniteQuadraticForm) -> Option<(usize, usize, bool)> {
        if p == 2 || f.divisors().iter().any(|&d| d != p) {
            return None;
        }
        let n = f.len();
        let pq = Q::from_integer(p.into());
        let mut m: Vec<Vec<u64>> = f
            .bilinear_matrix()
            .iter()
            .map(|r| r.iter().map(|x| (x * &pq).to_integer().to_u64().unwrap() % p).collect())
            .collect();
        let diag = diagonalize_mod_p(&mut m, p);
        let nonzero: Vec<u64> = diag.into_iter().filter(|&d| d != 0).collect();
        let det = nonzero.iter().fold(1u64, |acc, &d| acc * d % p);
        Some((n, n - nonzero.len(), is_square_mod(det, p)))
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn is_square_mod(x: u64, p: u64) -> bool {
    x % p == 0 || pow_mod(x, (p - 1) / 2, p) == 1
}

fn inv_mod(x: u64, p: u64) -> u64 {
    pow_mod(x, p - 2, p)
}

/// Congruence-diagonalizes a symmetric matrix over `F_p`, `p` odd.
fn diagonalize_mod_p(m: &mut [Vec<u64>], p: u64) -> Vec<u64> {
    let n = m.len();
    let mut out = Vec::with_capacity(n);
    let mut alive: Vec<usize> = (0..n).collect();
    while !alive.is_empty() {
        let piv = alive.iter().copied().find(|&i| m[i][i] != 0);
        let piv = match piv {
            Some(i) => i,
            None => {
                let pair = alive
                    .iter()
                    .flat_map(|&i| alive.iter().map(move |&j| (i, j)))
                    .find(|&(i, j)| m[i][j] != 0);
                let Some((i, j)) = pair else {
                    out.extend(std::iter::repeat(0).take(alive.len()));
                    break;
                };
                // e_i <- e_i + e_j
                for k in 0..n {
                    m[i][k] = (m[i][k] + m[j][k]) % p;
                }
                for k in 0..n {
                    m[k][i] = (m[k][i] + m[k][j]) % p;
                }
                i
            }
        };
        let d = m[piv][piv];
        let dinv = inv_mod(d, p);
        alive.retain(|&i| i != piv);
        for &i in &alive {
            let f = m[i][piv] * dinv % p;
            if f == 0 {
                continue;
            }
            for &j in &alive {
                let sub = f * m[piv][j] % p;
                m[i][j] = (m[i][j] + p - sub) % p;
            }
        }
        for &i in &alive {
            m[i][piv] = 0;
            m[piv][i] = 0;
        }
        out.push(d);
    }
    out
}

impl IsometryDecider for ElementaryOdd {
    fn name(&self) -> &'static str {
        "elementary-odd"
    }

    fn decide(&self, p: u64, a: &FiniteQuadraticForm, b: &FiniteQuadraticForm) -> Option<bool> {
        Some(Self::invariants(p, a)? == Self::invariants(p, b)?)
    }
}

impl IsometryDecider for Enumeration {
    fn name(&self) -> &'static str {
        "enumeration"
    }

    fn decide(&self, _p: u64, a: &FiniteQuadraticForm, b: &FiniteQuadraticForm) -> Option<bool> {
        if a.order() != b.order() || a.order() > self.max_order {
            return None;
        }
        let targets = b.elements();
        let mut images: Vec<Vec<i64>> = Vec::with_capacity(a.len());
        Some(extend(a, b, &targets, &mut images))
    }
}

fn extend(
    a: &FiniteQuadraticForm,
    b: &FiniteQuadraticForm,
    targets: &[Vec<i64>],
    images: &mut Vec<Vec<i64>>,
) -> bool {
    let i = images.len();
    if i == a.len() {
        return generates(b, images, a.order());
    }
    let mut gi = vec![0i64; a.len()];
    gi[i] = 1;
    let want_q = a.value(&gi);
    let want_order = a.divisors()[i];
    for y in targets {
        if b.element_order(y) != want_order || b.value(y) != want_q {
            continue;
        }
        let consistent = images.iter().enumerate().all(|(j, yj)| {
            let mut gj = vec![0i64; a.len()];
            gj[j] = 1;
            b.bilinear(y, yj) == a.bilinear(&gi, &gj)
        });
        if !consistent {
            continue;
        }
        images.push(y.clone());
        if extend(a, b, targets, images) {
            return true;
        }
        images.pop();
    }
    false
}

fn generates(b: &FiniteQuadraticForm, images: &[Vec<i64>], order: u64) -> bool {
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    seen.insert(vec![0; b.len()]);
    let mut frontier: Vec<Vec<i64>> = vec![vec![0; b.len()]];
    while let Some(x) = frontier.pop() {
        for y in images {
            let z = b.reduce(&x.iter().zip(y).map(|(s, t)| s + t).collect::<Vec<_>>());
            if seen.insert(z.clone()) {
                frontier.push(z);
            }
        }
    }
    seen.len() as u64 == order
}

/// Named isometry deciders, consulted in registration order.
pub struct DeciderRegistry {
    deciders: Vec<Box<dyn IsometryDecider>>,
}

impl Default for DeciderRegistry {
    fn default() -> Self {
        let mut r = DeciderRegistry { deciders: Vec::new() };
        r.register(Box::new(ElementaryOdd));
        r.register(Box::new(Enumeration { max_order: 256 }));
        r
    }
}

impl DeciderRegistry {
    pub fn empty() -> Self {
        DeciderRegistry { deciders: Vec::new() }
    }

    pub fn register(&mut self, d: Box<dyn IsometryDecider>) {
        self.deciders.retain(|old| old.name() != d.name());
        self.deciders.push(d);
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.deciders.iter().map(|d| d.name()).collect()
    }

    pub fn get(&self, name: &str) -> Option<&dyn IsometryDecider> {
        self.deciders.iter().find(|d| d.name() == name).map(|d| d.as_ref())
    }

    /// Decides `a ≅ b`. Different groups are never isometric; otherwise every
    /// primary part must be settled by some decider, or the result is
    /// [`Error::Undecided`].
    pub fn isometric(&self, a: &FiniteQuadraticForm, b: &FiniteQuadraticForm) -> Result<bool> {
        if a.abelian_invariants() != b.abelian_invariants() {
            return Ok(false);
        }
        for p in a.primes() {
            let (pa, pb) = (a.p_part(p), b.p_part(p));
            let verdict = self.deciders.iter().find_map(|d| d.decide(p, &pa, &pb));
            match verdict {
                Some(true) => {}
                Some(false) => return Ok(false),
                None => {
                    return Err(Error::Undecided(format!(
                        "no decider for the {p}-part with invariants {:?}",
                        pa.abelian_invariants()
                    )))
                }
            }
        }
        Ok(true)
    }
}

/// Isometry test with the default deciders.
pub fn fqf_isometric(a: &FiniteQuadraticForm, b: &FiniteQuadraticForm) -> Result<bool> {
    DeciderRegistry::default().isometric(a, b)
}

/// A short human-readable invariant summary of each primary part, used in
/// failure reports.
pub fn canonical_data(f: &FiniteQuadraticForm) -> String {
    let mut parts = Vec::new();
    for p in f.primes() {
        let pp = f.p_part(p);
        match ElementaryOdd::invariants(p, &pp) {
            Some((n, rad, sq)) => parts.push(format!(
                "{p}: rank {n}, radical {rad}, det {}",
                if sq { "square" } else { "nonsquare" }
            )),
            None => {
                let mut census: Vec<(Q, usize)> = Vec::new();
                for x in pp.elements() {
                    let v = pp.value(&x);
                    match census.iter_mut().find(|(w, _)| *w == v) {
                        Some(e) => e.1 += 1,
                        None => census.push((v, 1)),
                    }
                }
                census.sort();
                let c: Vec<String> = census
                    .iter()
                    .map(|(v, n)| format!("{}x{}", crate::rational::fmt_rational_short(v), n))
                    .collect();
                parts.push(format!("{p}: {:?}, q census {}", pp.abelian_invariants(), c.join(" ")));
            }
        }
    }
    if parts.is_empty() {
        "trivial".into()
    } else {
        parts.join("; ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattices::fqf::discriminant_form;
    use crate::lattices::named::parse_lattice;

    fn disc(s: &str) -> FiniteQuadraticForm {
        discriminant_form(&parse_lattice(s).unwrap()).unwrap()
    }

    #[test]
    fn classical_identities() {
        assert!(fqf_isometric(&disc("E6"), &disc("A2").negate()).unwrap());
        assert!(fqf_isometric(&disc("A2^2"), &disc("A2(-1)^2")).unwrap());
        assert!(fqf_isometric(&disc("A2(-2)"), &disc("D4+A2")).unwrap());
        assert!(!fqf_isometric(&disc("A2"), &disc("A2(-1)")).unwrap());
        assert!(!fqf_isometric(&disc("A2"), &disc("D4")).unwrap());
        assert!(!fqf_isometric(&disc("D4"), &disc("A1^2")).unwrap());
    }

    #[test]
    fn equivalence_relation_spot_checks() {
        let forms = [disc("A2^2"), disc("A2(-1)^2"), disc("E6^2"), disc("A2+A2(-1)")];
        for a in &forms {
            assert!(fqf_isometric(a, a).unwrap());
            for b in &forms {
                assert_eq!(fqf_isometric(a, b).unwrap(), fqf_isometric(b, a).unwrap());
                for c in &forms {
                    if fqf_isometric(a, b).unwrap() && fqf_isometric(b, c).unwrap() {
                        assert!(fqf_isometric(a, c).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn deciders_agree_on_small_three_groups() {
        let en = Enumeration { max_order: 1000 };
        let pairs = [("A2^2", "A2(-1)^2"), ("A2", "A2(-1)"), ("E6+A2", "A2(-1)^2"), ("A2^3", "A2(-1)^3")];
        for (x, y) in pairs {
            let (a, b) = (disc(x).p_part(3), disc(y).p_part(3));
            assert_eq!(en.decide(3, &a, &b), ElementaryOdd.decide(3, &a, &b), "{x} vs {y}");
        }
    }

    #[test]
    fn undecided_is_loud() {
        let a = disc("A2(8)");
        let reg = DeciderRegistry::empty();
        assert!(matches!(reg.isometric(&a, &a), Err(Error::Undecided(_))));
        let mut reg = DeciderRegistry::empty();
        reg.register(Box::new(Enumeration { max_order: 2 }));
        assert!(matches!(reg.isometric(&disc("A2"), &disc("A2")), Err(Error::Undecided(_))));
        assert_eq!(DeciderRegistry::default().names(), vec!["elementary-odd", "enumeration"]);
        assert!(DeciderRegistry::default().get("enumeration").is_some());
    }
}
