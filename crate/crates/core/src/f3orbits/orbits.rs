//! Orbits of `W(D5)` and `SO(V)` on orthogonal sets of short classes.

use std::collections::HashMap;
use std::sync::OnceLock;

use serde::Serialize;

use super::group::{apply, generate_so, wd5_subgroup, Mat, MatrixGroup};
use super::space::{canonical_class, classes, dot, signed, F3Vec, NormClass, DIM};
use crate::error::{Error, Result};

/// An unordered set of `±` classes, sorted canonical representatives.
pub type KSet = Vec<F3Vec>;

pub fn so_group() -> &'static MatrixGroup {
    static SO: OnceLock<MatrixGroup> = OnceLock::new();
    SO.get_or_init(|| generate_so().expect("SO(V) closure stays below its bound"))
}

pub fn wd5_group() -> &'static MatrixGroup {
    static W: OnceLock<MatrixGroup> = OnceLock::new();
    W.get_or_init(wd5_subgroup)
}

pub fn canonical_set(vs: &[F3Vec]) -> KSet {
    let mut s: KSet = vs.iter().map(canonical_class).collect();
    s.sort();
    s
}

pub fn act(m: &Mat, set: &KSet) -> KSet {
    let imgs: Vec<F3Vec> = set.iter().map(|v| apply(m, v)).collect();
    canonical_set(&imgs)
}

/// All unordered `k`-sets of mutually orthogonal short classes.
pub fn orthogonal_short_sets(k: usize) -> Vec<KSet> {
    let short = classes(NormClass::Short);
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(short: &[F3Vec], start: usize, k: usize, cur: &mut Vec<F3Vec>, out: &mut Vec<KSet>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..short.len() {
            if cur.iter().all(|c| dot(c, &short[i]) == 0) {
                cur.push(short[i]);
                go(short, i + 1, k, cur, out);
                cur.pop();
            }
        }
    }
    go(&short, 0, k, &mut cur, &mut out);
    out
}

pub fn is_orthogonal_short_set(set: &[F3Vec]) -> bool {
    set.iter().all(|v| super::space::norm_class(v) == NormClass::Short)
        && set.iter().enumerate().all(|(i, a)| set[i + 1..].iter().all(|b| dot(a, b) == 0))
        && canonical_set(set).windows(2).all(|w| w[0] != w[1])
}

#[derive(Debug, Clone)]
pub struct Orbit {
    pub members: Vec<KSet>,
    pub stabilizer_order: usize,
}

/// Orbits of `group` on `sets` (assumed invariant). Stabilizers are counted
/// directly, and orbit-stabilizer is checked for every orbit.
pub fn orbits(group: &MatrixGroup, sets: &[KSet]) -> Result<Vec<Orbit>> {
    let mut seen: HashMap<&KSet, usize> = HashMap::new();
    let mut out = Vec::new();
    for s in sets {
        if seen.contains_key(s) {
            continue;
        }
        let mut members: Vec<KSet> = Vec::new();
        let mut stab = 0;
        for g in group.elements() {
            let img = act(g, s);
            if img == *s {
                stab += 1;
            }
            members.push(img);
        }
        members.sort();
        members.dedup();
        if members.len() * stab != group.order() {
            return Err(Error::Internal(format!(
                "orbit-stabilizer fails: {} * {} != {}",
                members.len(),
                stab,
                group.order()
            )));
        }
        for m in &members {
            let Some(orig) = sets.iter().find(|x| *x == m) else {
                return Err(Error::Internal("set family is not invariant".into()));
            };
            seen.insert(orig, out.len());
        }
        out.push(Orbit { members, stabilizer_order: stab });
    }
    Ok(out)
}

/// Representatives of the `W(D5)`-orbits as they are usually listed,
/// written with entries in `{-1, 0, 1}`.
pub fn reference_representatives(k: usize) -> Vec<Vec<[i8; DIM]>> {
    let v = |a: [i8; DIM]| a;
    match k {
        1 => vec![vec![v([1, 1, 1, 1, 1])], vec![v([1, 1, 0, 0, 0])]],
        2 => vec![
            vec![v([1, 1, 1, 1, 1]), v([1, -1, 0, 0, 0])],
            vec![v([1, 1, 1, 1, 1]), v([-1, 1, 1, 1, 1])],
            vec![v([1, 1, 0, 0, 0]), v([0, 0, 1, 1, 0])],
            vec![v([1, 1, 0, 0, 0]), v([-1, 1, 0, 0, 0])],
        ],
        3 => vec![
            vec![v([1, 1, 1, 1, 1]), v([1, -1, 0, 0, 0]), v([0, 0, 1, -1, 0])],
            vec![v([1, 1, 1, 1, 1]), v([-1, 1, 1, 1, 1]), v([0, -1, 1, 0, 0])],
            vec![v([1, 1, 0, 0, 0]), v([-1, 1, 0, 0, 0]), v([0, 0, 1, 1, 0])],
        ],
        4 => vec![
            vec![v([1, 1, 1, 1, 1]), v([-1, 1, 1, 1, 1]), v([0, -1, 1, 0, 0]), v([0, 0, 0, -1, 1])],
            vec![v([1, 1, 0, 0, 0]), v([-1, 1, 0, 0, 0]), v([0, 0, 1, 1, 0]), v([0, 0, -1, 1, 0])],
        ],
        _ => Vec::new(),
    }
}

pub fn from_signed(v: &[i8; DIM]) -> F3Vec {
    v.map(|c| c.rem_euclid(3) as u8)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitReport {
    pub representative: Vec<[i8; DIM]>,
    /// the representative is one of the reference representatives
    pub reference: bool,
    pub orbit_size: usize,
    pub stabilizer_order: usize,
    pub stabilizer_index_in_gk: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabilizerReport {
    pub k: usize,
    pub sets: usize,
    pub orbit_size: usize,
    pub order: usize,
    pub transitive: bool,
}

/// Stabilizer `G_k` in `SO(V)` of an orthogonal `k`-set of short classes.
pub fn we6_stabilizer(k: usize) -> Result<StabilizerReport> {
    check_k(k)?;
    let so = so_group();
    let sets = orthogonal_short_sets(k);
    let orbit = orbits_of_one(so, &sets[0]);
    Ok(StabilizerReport {
        k,
        sets: sets.len(),
        orbit_size: orbit.0,
        order: orbit.1,
        transitive: orbit.0 == sets.len(),
    })
}

pub fn we6_stabilizer_orders(k: usize) -> Result<usize> {
    Ok(we6_stabilizer(k)?.order)
}

fn orbits_of_one(group: &MatrixGroup, s: &KSet) -> (usize, usize) {
    let mut members = Vec::with_capacity(group.order());
    let mut stab = 0;
    for g in group.elements() {
        let img = act(g, s);
        if img == *s {
            stab += 1;
        }
        members.push(img);
    }
    members.sort();
    members.dedup();
    (members.len(), stab)
}

fn check_k(k: usize) -> Result<()> {
    if (1..=4).contains(&k) {
        Ok(())
    } else {
        Err(Error::Parse(format!("k must be between 1 and 4, got {k}")))
    }
}

/// `W(D5)`-orbits on orthogonal `k`-sets of short classes, listed in the
/// order of the reference representatives.
pub fn wd5_orbits_on_short(k: usize) -> Result<Vec<OrbitReport>> {
    check_k(k)?;
    let w = wd5_group();
    let sets = orthogonal_short_sets(k);
    let gk = we6_stabilizer_orders(k)?;
    let mut orbs = orbits(w, &sets)?;
    let refs: Vec<KSet> = reference_representatives(k)
        .iter()
        .map(|r| canonical_set(&r.iter().map(from_signed).collect::<Vec<_>>()))
        .collect();
    let position = |o: &Orbit| refs.iter().position(|r| o.members.binary_search(r).is_ok());
    orbs.sort_by_key(|o| position(o).unwrap_or(usize::MAX));
    Ok(orbs
        .iter()
        .map(|o| {
            let (rep, reference) = match position(o) {
                Some(i) => (reference_representatives(k)[i].clone(), true),
                None => (o.members[0].iter().map(signed).collect(), false),
            };
            OrbitReport {
                representative: rep,
                reference,
                orbit_size: o.members.len(),
                stabilizer_order: o.stabilizer_order,
                stabilizer_index_in_gk: gk / o.stabilizer_order,
            }
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CuspReport {
    pub count: usize,
    pub all_weight_three: bool,
    pub so_transitive: bool,
    pub wd5_orbit_sizes: Vec<usize>,
}

/// Isotropic `±` classes, with the transitivity data of both groups.
pub fn cusp_report() -> Result<CuspReport> {
    let iso = classes(NormClass::Isotropic);
    let singletons: Vec<KSet> = iso.iter().map(|v| vec![*v]).collect();
    let so = orbits(so_group(), &singletons)?;
    let mut wd5: Vec<usize> =
        orbits(wd5_group(), &singletons)?.iter().map(|o| o.members.len()).collect();
    wd5.sort_unstable_by(|a, b| b.cmp(a));
    Ok(CuspReport {
        count: iso.len(),
        all_weight_three: iso.iter().all(|v| super::space::weight(v) == 3),
        so_transitive: so.len() == 1,
        wd5_orbit_sizes: wd5,
    })
}

pub fn cusp_count() -> usize {
    classes(NormClass::Isotropic).len()
}

/// `SO(V)` is transitive on each of the three norm classes.
pub fn so_transitive_on_norm_classes() -> Result<bool> {
    for c in [NormClass::Isotropic, NormClass::Short, NormClass::Long] {
        let singletons: Vec<KSet> = classes(c).iter().map(|v| vec![*v]).collect();
        if orbits(so_group(), &singletons)?.len() != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}
