//! Lines, roots and tritangent planes of the cubic surface in `I(1,6)`, and
//! the Weyl group `W(E6)` acting on them.

use std::collections::{HashMap, HashSet};
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};

/// Coefficients on `e_0, ..., e_6`.
pub type PicClass = [i64; 7];

/// `k = -3 e_0 + e_1 + ... + e_6`
pub const K: PicClass = [-3, 1, 1, 1, 1, 1, 1];

pub fn pairing(x: &PicClass, y: &PicClass) -> i64 {
    x[0] * y[0] - (1..7).map(|i| x[i] * y[i]).sum::<i64>()
}

fn e(i: usize) -> PicClass {
    let mut v = [0; 7];
    v[i] = 1;
    v
}

fn add(x: &PicClass, y: &PicClass) -> PicClass {
    std::array::from_fn(|i| x[i] + y[i])
}

fn sub(x: &PicClass, y: &PicClass) -> PicClass {
    std::array::from_fn(|i| x[i] - y[i])
}

fn neg(x: &PicClass) -> PicClass {
    x.map(|c| -c)
}

/// `2 e_0 - (e_1 + ... + e_6)`
pub fn alpha_conic() -> PicClass {
    [2, -1, -1, -1, -1, -1, -1]
}

/// `e_0 - e_i - e_j` (15), `e_i` (6), `2e_0 - Σe + e_i` (6).
pub fn lines27() -> Vec<PicClass> {
    let mut out = Vec::with_capacity(27);
    for i in 1..7 {
        for j in i + 1..7 {
            out.push(sub(&sub(&e(0), &e(i)), &e(j)));
        }
    }
    out.extend((1..7).map(e));
    out.extend((1..7).map(|i| add(&alpha_conic(), &e(i))));
    out
}

/// `e_i - e_j` (15), `e_0 - e_i - e_j - e_k` (20), `2 e_0 - Σ e` (1), one per sign pair.
pub fn roots36() -> Vec<PicClass> {
    let mut out = Vec::with_capacity(36);
    for i in 1..7 {
        for j in i + 1..7 {
            out.push(sub(&e(i), &e(j)));
        }
    }
    for i in 1..7 {
        for j in i + 1..7 {
            for k in j + 1..7 {
                out.push(sub(&sub(&sub(&e(0), &e(i)), &e(j)), &e(k)));
            }
        }
    }
    out.push(alpha_conic());
    out
}

pub fn incidence_matrix() -> Vec<Vec<i64>> {
    let ls = lines27();
    ls.iter().map(|a| ls.iter().map(|b| pairing(a, b)).collect()).collect()
}

/// Unordered triples of lines summing to `-k` with pairwise intersection 1,
/// as sorted index triples into [`lines27`].
pub fn tritangents() -> Vec<[usize; 3]> {
    let ls = lines27();
    let mk = neg(&K);
    let mut out = Vec::new();
    for a in 0..27 {
        for b in a + 1..27 {
            if pairing(&ls[a], &ls[b]) != 1 {
                continue;
            }
            for c in b + 1..27 {
                if pairing(&ls[a], &ls[c]) == 1
                    && pairing(&ls[b], &ls[c]) == 1
                    && add(&add(&ls[a], &ls[b]), &ls[c]) == mk
                {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// Reducible fibres of the conic pencil `|-k - l|`: pairs of lines `{a, b}`
/// with `a + b = -k - l` and `a . b = 1`.
pub fn conic_pencil_fibers(l: &PicClass) -> Result<Vec<(PicClass, PicClass)>> {
    let ls = lines27();
    if !ls.contains(l) {
        return Err(Error::Parse(format!("{l:?} is not a line class")));
    }
    let c = sub(&neg(&K), l);
    let mut out = Vec::new();
    for (i, a) in ls.iter().enumerate() {
        for b in &ls[i + 1..] {
            if add(a, b) == c && pairing(a, b) == 1 {
                out.push((*a, *b));
            }
        }
    }
    Ok(out)
}

/// 7x7 integer matrix acting on column vectors, row-major.
pub type WMat = [i8; 49];

pub fn reflection(alpha: &PicClass) -> WMat {
    // s(x) = x + (x . alpha) alpha
    let eta = |j: usize| if j == 0 { 1 } else { -1 };
    std::array::from_fn(|k| {
        let (i, j) = (k / 7, k % 7);
        (i64::from(i == j) + alpha[i] * eta(j) * alpha[j]) as i8
    })
}

pub fn apply(m: &WMat, x: &PicClass) -> PicClass {
    std::array::from_fn(|i| (0..7).map(|j| i64::from(m[i * 7 + j]) * x[j]).sum())
}

pub fn mat_mul(a: &WMat, b: &WMat) -> WMat {
    std::array::from_fn(|k| {
        let (i, j) = (k / 7, k % 7);
        (0..7).map(|t| i32::from(a[i * 7 + t]) * i32::from(b[t * 7 + j])).sum::<i32>() as i8
    })
}

pub fn identity() -> WMat {
    std::array::from_fn(|k| i8::from(k / 7 == k % 7))
}

pub const CLOSURE_BOUND: usize = 200_000;

/// Closure of the given generators.
pub fn generate(gens: &[WMat], bound: usize) -> Result<Vec<WMat>> {
    let mut seen: HashSet<WMat> = HashSet::new();
    let mut out = vec![identity()];
    seen.insert(identity());
    let mut i = 0;
    while i < out.len() {
        let g = out[i];
        for s in gens {
            let h = mat_mul(&g, s);
            if seen.insert(h) {
                out.push(h);
                if out.len() > bound {
                    return Err(Error::ClosureBound(bound));
                }
            }
        }
        i += 1;
    }
    out.sort_unstable();
    Ok(out)
}

/// `W(E6)`, generated by the 36 root reflections.
pub fn weyl_group() -> &'static [WMat] {
    static W: OnceLock<Vec<WMat>> = OnceLock::new();
    W.get_or_init(|| {
        let gens: Vec<WMat> = roots36().iter().map(reflection).collect();
        generate(&gens, CLOSURE_BOUND).expect("W(E6) closure stays below its bound")
    })
}

/// Number of orbits of `group` on `points` (which must be invariant).
fn orbit_sizes(group: &[WMat], points: &[Vec<PicClass>]) -> Vec<usize> {
    let key = |s: &[PicClass]| {
        let mut v = s.to_vec();
        v.sort();
        v
    };
    let index: HashMap<Vec<PicClass>, usize> =
        points.iter().enumerate().map(|(i, p)| (key(p), i)).collect();
    let mut seen = vec![false; points.len()];
    let mut sizes = Vec::new();
    for start in 0..points.len() {
        if seen[start] {
            continue;
        }
        let mut n = 0;
        for g in group {
            let img: Vec<PicClass> = points[start].iter().map(|x| apply(g, x)).collect();
            let i = index[&key(&img)];
            if !seen[i] {
                seen[i] = true;
                n += 1;
            }
        }
        sizes.push(n);
    }
    sizes
}

#[derive(Debug, Clone, Serialize)]
pub struct WeylReport {
    pub order: usize,
    pub fixes_k: bool,
    pub orbits_on_lines: Vec<usize>,
    /// on roots up to sign
    pub orbits_on_roots: Vec<usize>,
    pub orbits_on_tritangents: Vec<usize>,
    pub line_stabilizer: usize,
    pub line_stabilizer_index: usize,
}

pub fn weyl_report() -> WeylReport {
    let w = weyl_group();
    let ls = lines27();
    let singles: Vec<Vec<PicClass>> = ls.iter().map(|l| vec![*l]).collect();
    let roots: Vec<Vec<PicClass>> = roots36().iter().map(|r| vec![*r, neg(r)]).collect();
    let tri: Vec<Vec<PicClass>> =
        tritangents().iter().map(|t| t.iter().map(|&i| ls[i]).collect()).collect();
    let l0 = e(6);
    let stab = w.iter().filter(|g| apply(g, &l0) == l0).count();
    WeylReport {
        order: w.len(),
        fixes_k: w.iter().all(|g| apply(g, &K) == K),
        orbits_on_lines: orbit_sizes(w, &singles),
        orbits_on_roots: orbit_sizes(w, &roots),
        orbits_on_tritangents: orbit_sizes(w, &tri),
        line_stabilizer: stab,
        line_stabilizer_index: w.len() / stab,
    }
}

/// The standard pairwise orthogonal node roots
/// `2e_0 - Σe, e_1 - e_2, e_3 - e_4, e_5 - e_6`.
pub fn standard_node_roots() -> [PicClass; 4] {
    [alpha_conic(), sub(&e(1), &e(2)), sub(&e(3), &e(4)), sub(&e(5), &e(6))]
}

/// True iff the roots are the first `k` standard node roots up to sign,
/// in any order.
pub fn is_standard_configuration(node_roots: &[PicClass]) -> bool {
    let std = standard_node_roots();
    if node_roots.len() > std.len() {
        return false;
    }
    let prefix = &std[..node_roots.len()];
    let mut used = [false; 4];
    node_roots.iter().all(|r| {
        match prefix.iter().enumerate().find(|(i, a)| !used[*i] && (*a == r || neg(a) == *r)) {
            Some((i, _)) => {
                used[i] = true;
                true
            }
            None => false,
        }
    })
}

fn check_roots(roots: &[PicClass]) -> Result<()> {
    for (i, a) in roots.iter().enumerate() {
        if pairing(a, a) != -2 || pairing(a, &K) != 0 {
            return Err(Error::NotOrthogonal(format!("{a:?} is not a root")));
        }
        for b in &roots[i + 1..] {
            if pairing(a, b) != 0 {
                return Err(Error::NotOrthogonal(format!("{a:?} . {b:?} != 0")));
            }
        }
    }
    Ok(())
}

/// Orbits of the group generated by the node reflections on the 27 lines,
/// each orbit sorted, orbits in order of first appearance.
pub fn nodal_line_orbits(node_roots: &[PicClass]) -> Result<Vec<Vec<PicClass>>> {
    check_roots(node_roots)?;
    let gens: Vec<WMat> = node_roots.iter().map(reflection).collect();
    let group = generate(&gens, CLOSURE_BOUND)?;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for l in lines27() {
        if seen.contains(&l) {
            continue;
        }
        let mut orbit: Vec<PicClass> = group.iter().map(|g| apply(g, &l)).collect();
        orbit.sort();
        orbit.dedup();
        seen.extend(orbit.iter().copied());
        out.push(orbit);
    }
    Ok(out)
}

/// Number of lines on a cubic whose nodes correspond to the given roots.
pub fn nodal_line_count(node_roots: &[PicClass]) -> Result<usize> {
    Ok(nodal_line_orbits(node_roots)?.len())
}

/// All 72 roots, signs included.
pub fn all_roots() -> Vec<PicClass> {
    let mut v: Vec<PicClass> = roots36().iter().flat_map(|r| [*r, neg(r)]).collect();
    v.sort();
    v
}

/// Roots orthogonal to `alpha`, and the order of the group their
/// reflections generate.
pub fn orthogonal_root_subsystem(alpha: &PicClass) -> Result<(usize, usize)> {
    let roots: Vec<PicClass> =
        all_roots().into_iter().filter(|r| pairing(r, alpha) == 0).collect();
    let gens: Vec<WMat> = roots.iter().map(reflection).collect();
    Ok((roots.len(), generate(&gens, CLOSURE_BOUND)?.len()))
}

pub fn fmt_class(x: &PicClass) -> String {
    let mut s = String::new();
    for (i, &c) in x.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let sign = if c < 0 { "-" } else if s.is_empty() { "" } else { "+" };
        let mag = c.abs();
        if mag == 1 {
            s.push_str(&format!("{sign}e{i}"));
        } else {
            s.push_str(&format!("{sign}{mag}e{i}"));
        }
    }
    if s.is_empty() {
        "0".into()
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattices::{parse_lattice, short_vectors_orthogonal};

    #[test]
    fn lines_and_incidence() {
        let ls = lines27();
        assert_eq!(ls.len(), 27);
        let m = incidence_matrix();
        for (i, row) in m.iter().enumerate() {
            assert_eq!(row[i], -1);
            assert_eq!(pairing(&ls[i], &K), -1);
            assert!(row.iter().enumerate().all(|(j, &x)| j == i || x == 0 || x == 1));
            assert_eq!(row.iter().filter(|&&x| x == 1).count(), 10);
        }
        assert_eq!(pairing(&e(1), &[1, -1, -1, 0, 0, 0, 0]), 1);
    }

    #[test]
    fn roots_span_k_perp() {
        let rs = roots36();
        assert_eq!(rs.len(), 36);
        assert!(rs.iter().all(|r| pairing(r, r) == -2 && pairing(r, &K) == 0));
        let m: Vec<Vec<i64>> = rs.iter().map(|r| r.to_vec()).collect();
        let s = crate::lattices::intmat::smith_normal_form(&crate::lattices::intmat::from_i64(&m));
        let rank = s.diagonal().iter().filter(|d| !num_traits::Zero::is_zero(*d)).count();
        assert_eq!(rank, 6);
        // independent enumeration of the norm -2 vectors of k-perp
        let l = parse_lattice("I(1,6)").unwrap();
        let found = short_vectors_orthogonal(&l, &K, -2).unwrap();
        let found: Vec<PicClass> =
            found.iter().map(|v| std::array::from_fn(|i| v[i])).collect();
        assert_eq!(found, all_roots());
    }

    #[test]
    fn tritangent_planes() {
        let t = tritangents();
        assert_eq!(t.len(), 45);
        for i in 0..27 {
            assert_eq!(t.iter().filter(|x| x.contains(&i)).count(), 5);
        }
    }

    #[test]
    fn reflections_fix_k() {
        for r in roots36() {
            let s = reflection(&r);
            assert_eq!(mat_mul(&s, &s), identity());
            assert_eq!(apply(&s, &K), K);
            assert_eq!(apply(&s, &r), neg(&r));
        }
    }

    #[test]
    fn weyl_group_data() {
        let r = weyl_report();
        assert_eq!(r.order, 51840);
        assert!(r.fixes_k);
        assert_eq!(r.orbits_on_lines, vec![27]);
        assert_eq!(r.orbits_on_roots, vec![36]);
        assert_eq!(r.orbits_on_tritangents, vec![45]);
        assert_eq!((r.line_stabilizer, r.line_stabilizer_index), (1920, 27));
    }

    #[test]
    fn nodal_counts() {
        let a = standard_node_roots();
        let counts: Vec<usize> = (1..=4).map(|n| nodal_line_count(&a[..n]).unwrap()).collect();
        assert_eq!(counts, vec![21, 16, 12, 9]);
        assert!(nodal_line_count(&[a[0], [0, 1, 0, -1, 0, 0, 0], [0, 1, -1, 0, 0, 0, 0]]).is_err());
    }

    #[test]
    fn standard_configurations() {
        let a = standard_node_roots();
        assert!(is_standard_configuration(&[]));
        assert!(is_standard_configuration(&[a[1], a[0]]));
        assert!(is_standard_configuration(&[neg(&a[0]), a[2], a[1]]));
        assert!(!is_standard_configuration(&[a[1]]));
        assert!(!is_standard_configuration(&[a[0], a[0]]));
        assert!(!is_standard_configuration(&[a[0], [0, 1, 0, -1, 0, 0, 0]]));
    }

    #[test]
    fn two_node_orbit_of_e1() {
        let a = standard_node_roots();
        let orbits = nodal_line_orbits(&a[..2]).unwrap();
        let mut expected = vec![
            e(1),
            e(2),
            add(&e(1), &a[0]),
            add(&e(2), &a[0]),
        ];
        expected.sort();
        assert!(orbits.contains(&expected));
    }

    #[test]
    fn conic_pencils() {
        for l in lines27() {
            let c = sub(&neg(&K), &l);
            assert_eq!(pairing(&c, &c), 0);
            let f = conic_pencil_fibers(&l).unwrap();
            assert_eq!(f.len(), 5);
            let mut met: Vec<PicClass> = f.iter().flat_map(|(a, b)| [*a, *b]).collect();
            met.sort();
            let mut meeting: Vec<PicClass> =
                lines27().into_iter().filter(|x| pairing(x, &l) == 1).collect();
            meeting.sort();
            assert_eq!(met, meeting);
        }
    }

    #[test]
    fn one_node_symmetry() {
        assert_eq!(orthogonal_root_subsystem(&alpha_conic()).unwrap(), (30, 720));
    }
}
