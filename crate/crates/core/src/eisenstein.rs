//! The order-three isometry of `T = A2(-1) + A2^4`, the resulting
//! `Z[ζ]`-module structure, its Hermitian form, and the map `h` onto `D(T)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::Result;
use crate::lattices::{
    discriminant_group, fqf_isometric, parse_lattice, FiniteQuadraticForm, IntegralLattice,
};
use crate::rational::{rem_euclid, Q};

/// `a + b ζ` with `ζ^2 + ζ + 1 = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EisensteinInt {
    pub a: BigInt,
    pub b: BigInt,
}

impl EisensteinInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        EisensteinInt { a: a.into(), b: b.into() }
    }

    pub fn zero() -> Self {
        Self::new(0, 0)
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    pub fn zeta() -> Self {
        Self::new(0, 1)
    }

    /// `1 + 2ζ`, whose square is `-3`.
    pub fn sqrt_minus_three() -> Self {
        Self::new(1, 2)
    }

    pub fn conj(&self) -> Self {
        EisensteinInt { a: &self.a - &self.b, b: -&self.b }
    }

    /// `z * conj(z) = a^2 - ab + b^2`
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    /// Twice the real part, `2a - b`.
    pub fn twice_re(&self) -> BigInt {
        BigInt::from(2) * &self.a - &self.b
    }

    pub fn is_real(&self) -> bool {
        self.b.is_zero()
    }
}

impl Add for &EisensteinInt {
    type Output = EisensteinInt;
    fn add(self, o: &EisensteinInt) -> EisensteinInt {
        EisensteinInt { a: &self.a + &o.a, b: &self.b + &o.b }
    }
}

impl Sub for &EisensteinInt {
    type Output = EisensteinInt;
    fn sub(self, o: &EisensteinInt) -> EisensteinInt {
        EisensteinInt { a: &self.a - &o.a, b: &self.b - &o.b }
    }
}

impl Neg for &EisensteinInt {
    type Output = EisensteinInt;
    fn neg(self) -> EisensteinInt {
        EisensteinInt { a: -&self.a, b: -&self.b }
    }
}

impl Mul for &EisensteinInt {
    type Output = EisensteinInt;
    fn mul(self, o: &EisensteinInt) -> EisensteinInt {
        let bd = &self.b * &o.b;
        EisensteinInt {
            a: &self.a * &o.a - &bd,
            b: &self.a * &o.b + &self.b * &o.a - bd,
        }
    }
}

impl fmt::Display for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:+}ζ", self.a, self.b)
    }
}

/// `T` in the basis `r_1, r_1', ..., r_5, r_5'` (first block `A2(-1)`),
/// with `ρ(r) = r'` and `ρ(r') = -r - r'` on every block.
#[derive(Debug, Clone, Serialize)]
pub struct TModule {
    pub lattice: IntegralLattice,
    pub rho: Vec<Vec<i64>>,
}

pub const BLOCKS: usize = 5;
pub const RANK: usize = 2 * BLOCKS;

impl Default for TModule {
    fn default() -> Self {
        Self::standard()
    }
}

impl TModule {
    pub fn standard() -> Self {
        let lattice = parse_lattice("A2(-1)+A2^4").expect("valid expression");
        let mut rho = vec![vec![0i64; RANK]; RANK];
        for i in 0..BLOCKS {
            let (r, rp) = (2 * i, 2 * i + 1);
            // columns are images
            rho[rp][r] = 1;
            rho[r][rp] = -1;
            rho[rp][rp] = -1;
        }
        TModule { lattice, rho }
    }

    pub fn apply_rho(&self, x: &[i64]) -> Vec<i64> {
        self.rho.iter().map(|row| row.iter().zip(x).map(|(m, v)| m * v).sum()).collect()
    }

    fn apply_rho_q(&self, x: &[Q]) -> Vec<Q> {
        self.rho
            .iter()
            .map(|row| {
                row.iter()
                    .zip(x)
                    .fold(Q::zero(), |s, (m, v)| s + Q::from_integer((*m).into()) * v)
            })
            .collect()
    }

    /// `(a + bζ) x = a x + b ρ(x)`
    pub fn scalar_action(&self, z: &EisensteinInt, x: &[i64]) -> Vec<i64> {
        let a = z.a.to_i64().expect("small scalar");
        let b = z.b.to_i64().expect("small scalar");
        let rx = self.apply_rho(x);
        x.iter().zip(&rx).map(|(u, v)| a * u + b * v).collect()
    }

    pub fn pairing(&self, x: &[i64], y: &[i64]) -> i64 {
        self.lattice.pairing_int(x, y)
    }

    pub fn pairing_q(&self, x: &[Q], y: &[Q]) -> Q {
        self.lattice.pairing(x, y)
    }

    /// `h(x) = (x + 2ρ(x)) / 3`
    pub fn h_map(&self, x: &[i64]) -> Vec<Q> {
        let rx = self.apply_rho(x);
        x.iter().zip(&rx).map(|(u, v)| Q::new((u + 2 * v).into(), 3.into())).collect()
    }

    /// True if `G y` is integral, i.e. `y ∈ T^*`.
    pub fn in_dual(&self, y: &[Q]) -> bool {
        self.lattice.gram().iter().all(|row| {
            row.iter()
                .zip(y)
                .fold(Q::zero(), |s, (g, v)| s + Q::from_integer((*g).into()) * v)
                .is_integer()
        })
    }

    /// Coordinates over `Z[ζ]` in the basis `r_1, ..., r_5`.
    pub fn to_eisenstein(&self, x: &[i64]) -> Vec<EisensteinInt> {
        (0..BLOCKS).map(|i| EisensteinInt::new(x[2 * i], x[2 * i + 1])).collect()
    }

    pub fn from_eisenstein(&self, z: &[EisensteinInt]) -> Vec<i64> {
        z.iter()
            .flat_map(|c| [c.a.to_i64().expect("small"), c.b.to_i64().expect("small")])
            .collect()
    }

    /// Image in `V = Λ / √-3 Λ = F_3^5`.
    pub fn v_class(&self, x: &[i64]) -> [u8; BLOCKS] {
        std::array::from_fn(|i| (x[2 * i] + x[2 * i + 1]).rem_euclid(3) as u8)
    }

    /// `h(Σ c_i r_i)`, a representative of the class of `c` in `D(T)`.
    pub fn phi(&self, c: &[u8; BLOCKS]) -> Vec<Q> {
        let mut x = vec![0i64; RANK];
        for i in 0..BLOCKS {
            x[2 * i] = i64::from(c[i]);
        }
        self.h_map(&x)
    }
}

/// `H(z, w) = z_0 conj(w_0) - Σ_{i>0} z_i conj(w_i)`
pub fn hermitian(z: &[EisensteinInt], w: &[EisensteinInt]) -> EisensteinInt {
    let mut s = EisensteinInt::zero();
    for (i, (zi, wi)) in z.iter().zip(w).enumerate() {
        let t = zi * &wi.conj();
        s = if i == 0 { &s + &t } else { &s - &t };
    }
    s
}

/// `ν(x) = -H(x, x) = -(x, x)_T / 2`
pub fn hermitian_norm(z: &[EisensteinInt]) -> BigInt {
    let h = hermitian(z, z);
    debug_assert!(h.is_real());
    -h.a
}

/// `ν` on `V`: `-c_0^2 + Σ c_i^2 mod 3`.
pub fn v_norm(c: &[u8; BLOCKS]) -> u8 {
    let s: i64 = -i64::from(c[0]).pow(2) + c[1..].iter().map(|&x| i64::from(x).pow(2)).sum::<i64>();
    s.rem_euclid(3) as u8
}

fn mod2(x: &Q) -> Q {
    rem_euclid(x, &Q::from_integer(2.into()))
}

#[derive(Debug, Clone, Serialize)]
pub struct HermitianReport {
    pub mismatches: Vec<(usize, usize)>,
    pub conjugate_symmetric: bool,
    pub signature: (usize, usize),
    pub pass: bool,
}

/// Compares `(x, y)_T` with `2 Re H(x, y)` on all pairs of basis vectors and
/// reads the signature of `H` from that of `T`.
pub fn hermitian_check() -> Result<HermitianReport> {
    let t = TModule::standard();
    let basis: Vec<Vec<i64>> =
        (0..RANK).map(|i| (0..RANK).map(|j| i64::from(i == j)).collect()).collect();
    let mut mismatches = Vec::new();
    let mut conjugate_symmetric = true;
    for (i, x) in basis.iter().enumerate() {
        for (j, y) in basis.iter().enumerate() {
            let (zx, zy) = (t.to_eisenstein(x), t.to_eisenstein(y));
            let h = hermitian(&zx, &zy);
            if h.twice_re() != BigInt::from(t.pairing(x, y)) {
                mismatches.push((i, j));
            }
            if hermitian(&zy, &zx) != h.conj() {
                conjugate_symmetric = false;
            }
        }
    }
    // the real form 2 Re H has twice the complex signature
    let (p, n) = t.lattice.signature()?;
    let signature = (p / 2, n / 2);
    let pass = mismatches.is_empty() && conjugate_symmetric && signature == (1, 4);
    Ok(HermitianReport { mismatches, conjugate_symmetric, signature, pass })
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentificationReport {
    pub v_order: u64,
    pub discriminant_order: u64,
    pub rho_order_three: bool,
    pub rho_isometry: bool,
    pub rho_fixed_free: bool,
    /// `h(x) ∈ T^*` on a basis
    pub h_lands_in_dual: bool,
    /// `h(√-3 x) = -x` on a basis
    pub h_of_sqrt_minus_three: bool,
    /// `h(x) mod T` depends only on the class of `x` in `V`
    pub well_defined_on_v: bool,
    /// no nonzero class of `V` maps into `T`
    pub injective: bool,
    /// `q(φ(c)) = -(2/3) ν(c)` for all 243 classes
    pub quadratic_forms_agree: bool,
    pub rho_trivial_on_discriminant: bool,
    /// `D(T)` is isometric to `F_3^5` with `q(e_i) = -4/3`
    pub matches_f3_model: bool,
    pub pass: bool,
}

/// The `F_3^5` model form: every coordinate vector has `q = -4/3`.
pub fn f3_model_form() -> FiniteQuadraticForm {
    let m43 = Q::new(2.into(), 3.into()); // -4/3 mod 2
    let b = (0..BLOCKS)
        .map(|i| {
            (0..BLOCKS)
                .map(|j| if i == j { Q::new(2.into(), 3.into()) } else { Q::zero() })
                .collect()
        })
        .collect();
    FiniteQuadraticForm::new(vec![3; BLOCKS], vec![m43; BLOCKS], b).expect("valid model")
}

fn det_rho_minus_one(t: &TModule) -> BigInt {
    let m: Vec<Vec<i64>> = (0..RANK)
        .map(|i| (0..RANK).map(|j| t.rho[i][j] - i64::from(i == j)).collect())
        .collect();
    crate::lattices::intmat::det(&crate::lattices::intmat::from_i64(&m))
}

/// Verifies that `h` induces an isometry `(V, -(2/3)ν) ≅ D(T)` on which `ρ`
/// acts trivially.
pub fn discriminant_identification() -> Result<IdentificationReport> {
    let t = TModule::standard();
    let dg = discriminant_group(&t.lattice)?;
    let basis: Vec<Vec<i64>> =
        (0..RANK).map(|i| (0..RANK).map(|j| i64::from(i == j)).collect()).collect();

    let rho3 = basis.iter().all(|x| t.apply_rho(&t.apply_rho(&t.apply_rho(x))) == *x);
    let rho_isometry = basis.iter().all(|x| {
        basis.iter().all(|y| t.pairing(&t.apply_rho(x), &t.apply_rho(y)) == t.pairing(x, y))
    });
    let rho_fixed_free = !det_rho_minus_one(&t).is_zero();

    let h_lands_in_dual = basis.iter().all(|x| t.in_dual(&t.h_map(x)));
    let s3 = EisensteinInt::sqrt_minus_three();
    let h_of_sqrt_minus_three = basis.iter().all(|x| {
        let lhs = t.h_map(&t.scalar_action(&s3, x));
        lhs.iter().zip(x).all(|(u, v)| *u == Q::from_integer((-v).into()))
    });
    let is_lattice_vector = |y: &[Q]| y.iter().all(|c| c.is_integer());
    let well_defined_on_v = (0..BLOCKS).all(|i| {
        let r = &basis[2 * i];
        let rp = &basis[2 * i + 1];
        let d: Vec<Q> = t.h_map(rp).iter().zip(t.h_map(r)).map(|(u, v)| u - v).collect();
        is_lattice_vector(&d)
    });

    let mut injective = true;
    let mut quadratic_forms_agree = true;
    let mut images = std::collections::HashSet::new();
    for code in 0..3u32.pow(BLOCKS as u32) {
        let mut c = [0u8; BLOCKS];
        let mut k = code;
        for ci in c.iter_mut() {
            *ci = (k % 3) as u8;
            k /= 3;
        }
        let y = t.phi(&c);
        let coords = dg.coordinates(&t.lattice, &y)?;
        images.insert(coords.clone());
        if code != 0 && is_lattice_vector(&y) {
            injective = false;
        }
        let q = mod2(&t.pairing_q(&y, &y));
        let expected = mod2(&(Q::new((-2).into(), 3.into()) * Q::from_integer(v_norm(&c).into())));
        if q != expected {
            quadratic_forms_agree = false;
        }
    }
    injective &= images.len() == 243;

    let rho_trivial_on_discriminant = dg.generators.iter().all(|g| {
        let d: Vec<Q> = t.apply_rho_q(g).iter().zip(g).map(|(u, v)| u - v).collect();
        is_lattice_vector(&d)
    });
    let matches_f3_model = fqf_isometric(&dg.form, &f3_model_form())?;

    let v_order = 243;
    let discriminant_order = dg.form.order();
    let pass = v_order == discriminant_order
        && rho3
        && rho_isometry
        && rho_fixed_free
        && h_lands_in_dual
        && h_of_sqrt_minus_three
        && well_defined_on_v
        && injective
        && quadratic_forms_agree
        && rho_trivial_on_discriminant
        && matches_f3_model;
    Ok(IdentificationReport {
        v_order,
        discriminant_order,
        rho_order_three: rho3,
        rho_isometry,
        rho_fixed_free,
        h_lands_in_dual,
        h_of_sqrt_minus_three,
        well_defined_on_v,
        injective,
        quadratic_forms_agree,
        rho_trivial_on_discriminant,
        matches_f3_model,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn e(i: usize) -> Vec<i64> {
        (0..RANK).map(|j| i64::from(i == j)).collect()
    }

    fn random_vec(rng: &mut StdRng) -> Vec<i64> {
        (0..RANK).map(|_| rng.gen_range(-5..=5)).collect()
    }

    #[test]
    fn ring_identities() {
        let z = EisensteinInt::zeta();
        let zz = &z * &z;
        assert_eq!(&(&zz + &z) + &EisensteinInt::one(), EisensteinInt::zero());
        let s = EisensteinInt::sqrt_minus_three();
        assert_eq!(&s * &s, EisensteinInt::new(-3, 0));
        let w = EisensteinInt::new(3, -7);
        assert_eq!(w.conj(), EisensteinInt::new(10, 7));
        let n = &w * &w.conj();
        assert_eq!(n, EisensteinInt::new(w.norm(), 0));
    }

    #[test]
    fn zeta_moves_r_to_r_prime() {
        let t = TModule::standard();
        for i in 0..BLOCKS {
            assert_eq!(t.scalar_action(&EisensteinInt::zeta(), &e(2 * i)), e(2 * i + 1));
        }
        let x: Vec<i64> = (0..RANK as i64).collect();
        let s = EisensteinInt::sqrt_minus_three();
        let y = t.scalar_action(&s, &t.scalar_action(&s, &x));
        assert_eq!(y, x.iter().map(|v| -3 * v).collect::<Vec<_>>());
    }

    #[test]
    fn module_axioms() {
        let t = TModule::standard();
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..100 {
            let z1 = EisensteinInt::new(rng.gen_range(-4..=4), rng.gen_range(-4..=4));
            let z2 = EisensteinInt::new(rng.gen_range(-4..=4), rng.gen_range(-4..=4));
            let x = random_vec(&mut rng);
            let y = random_vec(&mut rng);
            assert_eq!(
                t.scalar_action(&z1, &t.scalar_action(&z2, &x)),
                t.scalar_action(&(&z1 * &z2), &x)
            );
            let sum: Vec<i64> = x.iter().zip(&y).map(|(a, b)| a + b).collect();
            let lhs = t.scalar_action(&z1, &sum);
            let rhs: Vec<i64> = t
                .scalar_action(&z1, &x)
                .iter()
                .zip(t.scalar_action(&z1, &y))
                .map(|(a, b)| a + b)
                .collect();
            assert_eq!(lhs, rhs);
            let zsum = &z1 + &z2;
            let lhs = t.scalar_action(&zsum, &x);
            let rhs: Vec<i64> = t
                .scalar_action(&z1, &x)
                .iter()
                .zip(t.scalar_action(&z2, &x))
                .map(|(a, b)| a + b)
                .collect();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn norm_is_minus_half_square_on_blocks() {
        let t = TModule::standard();
        let mut rng = StdRng::seed_from_u64(5);
        for _ in 0..30 {
            let i = rng.gen_range(1..BLOCKS);
            let z = EisensteinInt::new(rng.gen_range(-6..=6), rng.gen_range(-6..=6));
            let r = t.scalar_action(&z, &e(2 * i));
            assert_eq!(BigInt::from(-t.pairing(&r, &r) / 2), z.norm());
        }
    }

    #[test]
    fn h_values() {
        let t = TModule::standard();
        for i in 1..BLOCKS {
            let h = t.h_map(&e(2 * i));
            assert_eq!(t.pairing_q(&h, &h), Q::new((-2).into(), 3.into()));
            for j in 1..BLOCKS {
                if i != j {
                    assert!(t.pairing_q(&h, &t.h_map(&e(2 * j))).is_zero());
                }
            }
        }
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..50 {
            let x = random_vec(&mut rng);
            let h = t.h_map(&x);
            let nu = hermitian_norm(&t.to_eisenstein(&x));
            // h(x)^2 = (x, x)/3 = -(2/3) ν(x)
            assert_eq!(t.pairing_q(&h, &h), Q::new(t.pairing(&x, &x).into(), 3.into()));
            assert_eq!(t.pairing_q(&h, &h), Q::new(-2 * nu, 3.into()));
            assert!(t.in_dual(&h));
        }
    }

    #[test]
    fn hermitian_report_passes() {
        let r = hermitian_check().unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!(r.signature, (1, 4));
    }

    #[test]
    fn identification_report_passes() {
        let r = discriminant_identification().unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!(r.discriminant_order, 243);
    }
}
