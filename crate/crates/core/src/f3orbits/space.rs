//! The quadratic space `V = F_3^5` with `q(e_i) = -4/3`.

use serde::Serialize;

use crate::rational::Q;

pub const DIM: usize = 5;

/// Coordinates in `{0, 1, 2}`.
pub type F3Vec = [u8; DIM];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NormClass {
    Zero,
    /// `q = 0`, nonzero
    Isotropic,
    /// `q = -2/3`
    Short,
    /// `q = -4/3`
    Long,
}

pub fn weight(x: &F3Vec) -> usize {
    x.iter().filter(|&&c| c != 0).count()
}

pub fn norm_class(x: &F3Vec) -> NormClass {
    match (weight(x), weight(x) % 3) {
        (0, _) => NormClass::Zero,
        (_, 0) => NormClass::Isotropic,
        (_, 2) => NormClass::Short,
        _ => NormClass::Long,
    }
}

/// `q(x) = -(4/3) * weight(x)` reduced into `[0, 2)`.
pub fn q_value(x: &F3Vec) -> Q {
    let w = weight(x) as i64;
    let num = (-4 * w).rem_euclid(6);
    Q::new(num.into(), 3.into())
}

/// `Σ x_i y_i mod 3`; `b(x, y) = (2/3) dot(x, y) mod 1`.
pub fn dot(x: &F3Vec, y: &F3Vec) -> u8 {
    (x.iter().zip(y).map(|(&a, &b)| u32::from(a) * u32::from(b)).sum::<u32>() % 3) as u8
}

pub fn bilinear(x: &F3Vec, y: &F3Vec) -> Q {
    Q::new(i64::from((2 * dot(x, y)) % 3).into(), 3.into())
}

pub fn neg(x: &F3Vec) -> F3Vec {
    x.map(|c| (3 - c) % 3)
}

pub fn add(x: &F3Vec, y: &F3Vec) -> F3Vec {
    std::array::from_fn(|i| (x[i] + y[i]) % 3)
}

/// Representative of `{x, -x}`: the lexicographically smaller one.
pub fn canonical_class(x: &F3Vec) -> F3Vec {
    let n = neg(x);
    if n < *x {
        n
    } else {
        *x
    }
}

pub fn all_vectors() -> impl Iterator<Item = F3Vec> {
    (0..3u32.pow(DIM as u32)).map(|mut k| {
        std::array::from_fn(|_| {
            let c = (k % 3) as u8;
            k /= 3;
            c
        })
    })
}

/// Canonical representatives of the `±` classes in a norm class, sorted.
pub fn classes(class: NormClass) -> Vec<F3Vec> {
    let mut out: Vec<F3Vec> = all_vectors()
        .filter(|x| norm_class(x) == class && canonical_class(x) == *x)
        .collect();
    out.sort();
    out
}

/// Parses `1,-1,0,0,0` or `(1,-1,0,0,0)`; `-1` and `2` are the same residue.
pub fn parse_vec(s: &str) -> crate::Result<F3Vec> {
    let t = s.trim().trim_start_matches('(').trim_end_matches(')');
    let parts: Vec<&str> = t.split(',').map(str::trim).collect();
    if parts.len() != DIM {
        return Err(crate::Error::Parse(format!("expected {DIM} coordinates in `{s}`")));
    }
    let mut out = [0u8; DIM];
    for (o, p) in out.iter_mut().zip(parts) {
        let v: i64 = p.parse().map_err(|_| crate::Error::Parse(format!("bad coordinate `{p}`")))?;
        *o = v.rem_euclid(3) as u8;
    }
    Ok(out)
}

/// Signed display with `2` shown as `-1`.
pub fn signed(x: &F3Vec) -> [i8; DIM] {
    x.map(|c| match c {
        0 => 0,
        1 => 1,
        _ => -1,
    })
}

pub fn fmt_vec(x: &F3Vec) -> String {
    let parts: Vec<String> = signed(x).iter().map(|c| c.to_string()).collect();
    format!("({})", parts.join(","))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NormCensus {
    pub isotropic: usize,
    pub short: usize,
    pub long: usize,
}

/// Counts of `±` classes of nonzero vectors by norm.
pub fn norm_census() -> NormCensus {
    NormCensus {
        isotropic: classes(NormClass::Isotropic).len(),
        short: classes(NormClass::Short).len(),
        long: classes(NormClass::Long).len(),
    }
}
