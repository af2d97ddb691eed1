//! Isometry groups of `V` as explicit element lists.

use std::collections::HashSet;

use super::space::{dot, norm_class, F3Vec, NormClass, DIM};
use crate::error::{Error, Result};

/// Row-major 5x5 matrix over `F_3`, acting on column vectors.
pub type Mat = [u8; DIM * DIM];

pub const CLOSURE_BOUND: usize = 200_000;

pub fn identity() -> Mat {
    std::array::from_fn(|k| u8::from(k / DIM == k % DIM))
}

pub fn minus_identity() -> Mat {
    identity().map(|c| (3 - c) % 3)
}

pub fn mul(a: &Mat, b: &Mat) -> Mat {
    let mut out = [0u8; DIM * DIM];
    for i in 0..DIM {
        for j in 0..DIM {
            let mut s = 0u8;
            for k in 0..DIM {
                s += a[i * DIM + k] * b[k * DIM + j];
            }
            out[i * DIM + j] = s % 3;
        }
    }
    out
}

pub fn apply(m: &Mat, x: &F3Vec) -> F3Vec {
    std::array::from_fn(|i| {
        let mut s = 0u8;
        for j in 0..DIM {
            s += m[i * DIM + j] * x[j];
        }
        s % 3
    })
}

pub fn transpose(m: &Mat) -> Mat {
    std::array::from_fn(|k| m[(k % DIM) * DIM + k / DIM])
}

pub fn det(m: &Mat) -> u8 {
    let mut a: Vec<[i32; DIM]> =
        (0..DIM).map(|i| std::array::from_fn(|j| i32::from(m[i * DIM + j]))).collect();
    let mut d = 1i32;
    for c in 0..DIM {
        let Some(p) = (c..DIM).find(|&r| a[r][c] % 3 != 0) else {
            return 0;
        };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d = d * a[c][c] % 3;
        let inv = if a[c][c].rem_euclid(3) == 1 { 1 } else { 2 };
        for r in c + 1..DIM {
            let f = a[r][c] * inv % 3;
            for k in c..DIM {
                a[r][k] = (a[r][k] - f * a[c][k]).rem_euclid(3);
            }
        }
    }
    d.rem_euclid(3) as u8
}

/// Preserves the form `Σ x_i y_i`, i.e. `M^T M = I`.
pub fn is_isometry(m: &Mat) -> bool {
    mul(&transpose(m), m) == identity()
}

/// Two bits per entry.
pub fn pack(m: &Mat) -> u64 {
    m.iter().enumerate().fold(0u64, |acc, (k, &c)| acc | (u64::from(c) << (2 * k)))
}

pub fn unpack(p: u64) -> Mat {
    std::array::from_fn(|k| ((p >> (2 * k)) & 3) as u8)
}

/// Reflection in a non-isotropic vector: `x - 2 (x.v)/(v.v) v`.
pub fn reflection(v: &F3Vec) -> Mat {
    let vv = dot(v, v);
    assert!(vv != 0, "reflection in an isotropic vector");
    // 2 / (v.v) over F_3: v.v = 1 -> 2, v.v = 2 -> 1
    let c = if vv == 1 { 2u8 } else { 1u8 };
    std::array::from_fn(|k| {
        let (i, j) = (k / DIM, k % DIM);
        let delta = u8::from(i == j);
        (delta + 3 * 3 - (c * v[i] * v[j]) % 3) % 3
    })
}

/// A finite matrix group as a sorted element list.
#[derive(Debug, Clone)]
pub struct MatrixGroup {
    elements: Vec<Mat>,
    keys: Vec<u64>,
}

impl MatrixGroup {
    pub fn from_elements(mut elements: Vec<Mat>) -> Self {
        elements.sort_by_key(pack);
        elements.dedup();
        let keys = elements.iter().map(pack).collect();
        MatrixGroup { elements, keys }
    }

    /// Closure of `generators` under multiplication.
    pub fn generate(generators: &[Mat], bound: usize) -> Result<Self> {
        let mut seen: HashSet<u64> = HashSet::new();
        let mut elements = vec![identity()];
        seen.insert(pack(&identity()));
        let mut i = 0;
        while i < elements.len() {
            let g = elements[i];
            for s in generators {
                let h = mul(&g, s);
                if seen.insert(pack(&h)) {
                    elements.push(h);
                    if elements.len() > bound {
                        return Err(Error::ClosureBound(bound));
                    }
                }
            }
            i += 1;
        }
        Ok(Self::from_elements(elements))
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Mat] {
        &self.elements
    }

    pub fn contains(&self, m: &Mat) -> bool {
        self.keys.binary_search(&pack(m)).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &MatrixGroup) -> bool {
        self.elements.iter().all(|m| other.contains(m))
    }

    pub fn union(&self, other: &MatrixGroup) -> MatrixGroup {
        MatrixGroup::from_elements(self.elements.iter().chain(&other.elements).copied().collect())
    }

    pub fn translate(&self, g: &Mat) -> MatrixGroup {
        MatrixGroup::from_elements(self.elements.iter().map(|m| mul(g, m)).collect())
    }
}

/// Non-isotropic `±` classes, whose reflections generate `O(V)`.
fn anisotropic_classes() -> Vec<F3Vec> {
    let mut v = super::space::classes(NormClass::Short);
    v.extend(super::space::classes(NormClass::Long));
    v
}

/// `SO(V)`, generated by the products `s_{e_1} s_v`.
pub fn generate_so() -> Result<MatrixGroup> {
    let e1: F3Vec = [1, 0, 0, 0, 0];
    let s1 = reflection(&e1);
    let gens: Vec<Mat> = anisotropic_classes()
        .iter()
        .filter(|v| **v != e1)
        .map(|v| mul(&s1, &reflection(v)))
        .collect();
    MatrixGroup::generate(&gens, CLOSURE_BOUND)
}

/// `O(V) = SO(V) × {±I}`.
pub fn generate_o(so: &MatrixGroup) -> MatrixGroup {
    so.union(&so.translate(&minus_identity()))
}

/// Signed permutation matrices of determinant one; they stabilize the
/// coordinate basis up to sign and lie in `SO(V)`.
pub fn wd5_subgroup() -> MatrixGroup {
    let mut out = Vec::with_capacity(1920);
    for perm in permutations(DIM) {
        for signs in 0..(1u32 << DIM) {
            let mut m = [0u8; DIM * DIM];
            for (i, &p) in perm.iter().enumerate() {
                m[p * DIM + i] = if signs >> i & 1 == 1 { 2 } else { 1 };
            }
            if det(&m) == 1 {
                out.push(m);
            }
        }
    }
    MatrixGroup::from_elements(out)
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

pub fn preserves_norm_classes(m: &Mat) -> bool {
    super::space::all_vectors().all(|x| norm_class(&apply(m, &x)) == norm_class(&x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f3orbits::space::{all_vectors, classes};

    /// Orthonormal frames counted by backtracking, column by column.
    fn count_orthonormal_frames() -> usize {
        let units: Vec<F3Vec> = all_vectors().filter(|v| dot(v, v) == 1).collect();
        fn go(units: &[F3Vec], chosen: &mut Vec<F3Vec>) -> usize {
            if chosen.len() == DIM {
                return 1;
            }
            let mut n = 0;
            for u in units {
                if chosen.iter().all(|c| dot(c, u) == 0) {
                    chosen.push(*u);
                    n += go(units, chosen);
                    chosen.pop();
                }
            }
            n
        }
        go(&units, &mut Vec::new())
    }

    #[test]
    fn orders() {
        let so = generate_so().unwrap();
        assert_eq!(so.order(), 51840);
        assert!(!so.contains(&minus_identity()));
        let o = generate_o(&so);
        assert_eq!(o.order(), 103680);
        assert_eq!(o.order(), count_orthonormal_frames());
        assert!(so.elements().iter().all(|m| is_isometry(m) && det(m) == 1));
    }

    #[test]
    fn wd5() {
        let so = generate_so().unwrap();
        let w = wd5_subgroup();
        assert_eq!(w.order(), 1920);
        assert!(w.is_subgroup_of(&so));
        assert_eq!(so.order() / w.order(), 27);
    }

    #[test]
    fn reflections() {
        for v in classes(NormClass::Short).iter().chain(&classes(NormClass::Long)) {
            let s = reflection(v);
            assert!(is_isometry(&s));
            assert_eq!(det(&s), 2);
            assert_eq!(mul(&s, &s), identity());
            assert_eq!(apply(&s, v), super::super::space::neg(v));
            assert!(preserves_norm_classes(&s));
        }
    }

    #[test]
    fn packing_round_trip() {
        let m = reflection(&[1, 1, 0, 0, 0]);
        assert_eq!(unpack(pack(&m)), m);
        assert_eq!(det(&identity()), 1);
        assert_eq!(det(&minus_identity()), 2);
    }
}
