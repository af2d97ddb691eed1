use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::{Check, Outcome};
use crate::binforms::construct::{pair_from_specs, random_pair, random_specs, representative, PointSpec};
use crate::binforms::{classify_case, stability, BinaryForm, CaseId, Stability};
use crate::cubio::linalg::{charpoly, inverse, random_invertible};
use crate::cubio::{analyze, cubic_from_points, random_general_points, NormalizedCubic, ProjLine};
use crate::e6lines::{
    conic_pencil_fibers, incidence_matrix, lines27, nodal_line_count, standard_node_roots,
    tritangents, weyl_group, weyl_report,
};
use crate::eisenstein::{
    discriminant_identification, hermitian_check, hermitian_norm, EisensteinInt, TModule, BLOCKS, RANK,
};
use crate::error::Result;
use crate::f3orbits::{
    cusp_count, norm_census, so_group, stratum_index, wd5_group, wd5_orbits_on_short, we6_stabilizer,
};
use crate::kodaira::{fiber_configuration, FiberType};
use crate::lattices::{discriminant_form, fqf_isometric, parse_lattice, shioda_tate_check, table2_verify};
use crate::rational::Q;

struct FnCheck {
    name: &'static str,
    criterion: u8,
    description: &'static str,
    run: fn() -> Outcome,
}

impl Check for FnCheck {
    fn name(&self) -> &'static str {
        self.name
    }
    fn criterion(&self) -> u8 {
        self.criterion
    }
    fn description(&self) -> &'static str {
        self.description
    }
    fn run(&self) -> Outcome {
        (self.run)()
    }
}

pub fn default_checks() -> Vec<Box<dyn Check>> {
    let table: [(&'static str, u8, &'static str, fn() -> Outcome); 11] = [
        ("table1", 1, "representatives reproduce case, type vector, fibres, r and e", table1),
        ("euler", 2, "fibre Euler numbers sum to 24", euler),
        ("stability", 3, "Hilbert-Mumford bound agrees with the stable-pair conditions", stability_criterion),
        ("table2", 4, "Picard table: ranks, signatures, q_T = -q_M, Shioda-Tate", table2),
        ("discriminant-forms", 5, "four discriminant form identities", discriminant_forms),
        ("norm-census", 6, "classes of F_3^5 by norm, up to sign", census),
        ("group-orders", 7, "|SO(V)| = |W(E6)|, |W(D5)|, index", group_orders),
        ("orbit-tables", 8, "W(D5)-orbits on orthogonal short k-sets", orbit_tables),
        ("lines", 9, "27 lines, tritangents, nodal lines, conic pencils, cusps", lines),
        ("eisenstein", 10, "Eisenstein structure on T and its discriminant", eisenstein),
        ("pipeline", 11, "six points to (F5, F2) and projective invariance", pipeline),
    ];
    table
        .into_iter()
        .map(|(name, criterion, description, run)| {
            Box::new(FnCheck { name, criterion, description, run }) as Box<dyn Check>
        })
        .collect()
}

fn summary(expected: &str, failures: &[String], total: usize) -> Outcome {
    let computed = if failures.is_empty() {
        format!("{total}/{total} ok")
    } else {
        format!("{}/{total} ok; failing: {}", total - failures.len(), failures.join("; "))
    };
    Outcome { expected: expected.into(), computed, pass: failures.is_empty() }
}

fn table1() -> Outcome {
    let mut bad = Vec::new();
    for case in CaseId::STABLE {
        let row = case.row().expect("stable case");
        let (f5, f2) = representative(case);
        let got = (|| -> Result<bool> {
            let pc = classify_case(&f5, &f2)?;
            let fc = fiber_configuration(&f5, &f2)?;
            let eckardt = fc
                .multiset()
                .iter()
                .filter(|(t, _)| *t == FiberType::I0Star)
                .map(|(_, n)| *n)
                .sum::<usize>();
            let nodes = stratum_index(pc.case_id).map_or(0, |(k, _)| k);
            Ok(pc.case_id == case
                && pc.type_vector == row.type_vector
                && fc.multiset() == row.kodaira
                && nodes == usize::from(row.nodes)
                && eckardt == usize::from(row.eckardt))
        })();
        match got {
            Ok(true) => {}
            Ok(false) => bad.push(case.label().to_string()),
            Err(e) => bad.push(format!("{}: {e}", case.label())),
        }
    }
    summary("19/19 cases match", &bad, 19)
}

fn euler() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x2424);
    let mut pairs: Vec<(String, BinaryForm, BinaryForm)> = CaseId::STABLE
        .iter()
        .map(|&c| {
            let (f5, f2) = representative(c);
            (format!("rep {c}"), f5, f2)
        })
        .collect();
    for i in 0..114 {
        let c = CaseId::STABLE[i % 19];
        let (f5, f2) = random_pair(c, &mut rng);
        pairs.push((format!("random {c}"), f5, f2));
    }
    let mut bad = Vec::new();
    for (label, f5, f2) in &pairs {
        match fiber_configuration(f5, f2) {
            Ok(fc) => {
                let e: u32 =
                    fc.fibers.iter().map(|f| f.fiber_type.euler_number() * f.geometric_count as u32).sum();
                if e != 24 {
                    bad.push(format!("{label}: {e}"));
                }
            }
            Err(e) => bad.push(format!("{label}: {e}")),
        }
    }
    summary(&format!("{n}/{n} pairs with Euler number 24", n = pairs.len()), &bad, pairs.len())
}

/// Stability read off the stable-pair conditions: `F2 != 0`, roots of `F5`
/// at most double, no root multiple for both forms. Strictly semistable
/// when the only failures are a triple root of `F5` off `F2`, or a double
/// root shared by both.
pub fn prose_verdict(specs: &[PointSpec]) -> Stability {
    let condition_fails = |s: &PointSpec| s.m5 > 2 || (s.m5 >= 2 && s.m2 >= 2);
    if !specs.iter().any(condition_fails) {
        return Stability::Stable;
    }
    let tolerated = |s: &PointSpec| (s.m5 == 3 && s.m2 == 0) || (s.m5 == 2 && s.m2 == 2);
    if specs.iter().filter(|s| condition_fails(s)).all(tolerated) {
        Stability::StrictlySemistable
    } else {
        Stability::Unstable
    }
}

/// Every placement of the roots of `F2` on single points of a partition of 5.
fn boundary_specs() -> Vec<Vec<PointSpec>> {
    let partitions: [&[usize]; 7] =
        [&[5], &[4, 1], &[3, 2], &[3, 1, 1], &[2, 2, 1], &[2, 1, 1, 1], &[1, 1, 1, 1, 1]];
    let mut out = Vec::new();
    for p in partitions {
        let base: Vec<PointSpec> = p.iter().map(|&m| PointSpec::new(1, m, 0)).collect();
        // one double root of F2
        for target in 0..=base.len() {
            let mut s = base.clone();
            match s.get_mut(target) {
                Some(x) => x.m2 = 2,
                None => s.push(PointSpec::new(1, 0, 2)),
            }
            out.push(s);
        }
        // two simple roots of F2; slot `n` stands for a new point
        let n = base.len();
        for a in 0..=n {
            for b in a..=n {
                if a == b && a < n {
                    continue;
                }
                let mut s = base.clone();
                for t in [a, b] {
                    if t < n {
                        s[t].m2 = 1;
                    } else {
                        s.push(PointSpec::new(1, 0, 1));
                    }
                }
                out.push(s);
            }
        }
    }
    out
}

fn stability_criterion() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5ab1e);
    let mut profiles = boundary_specs();
    let boundary = profiles.len();
    profiles.extend((0..10_000).map(|_| random_specs(&mut rng)));
    let mut bad = Vec::new();
    let mut counts = [0usize; 3];
    for specs in &profiles {
        let (f5, f2) = pair_from_specs(specs, &mut rng);
        let expected = prose_verdict(specs);
        counts[match expected {
            Stability::Stable => 0,
            Stability::StrictlySemistable => 1,
            Stability::Unstable => 2,
        }] += 1;
        match stability(&f5, &f2) {
            Ok(v) if v.verdict == expected => {}
            Ok(v) => bad.push(format!("{specs:?}: {:?} vs {expected:?}", v.verdict)),
            Err(e) => bad.push(format!("{specs:?}: {e}")),
        }
    }
    // vanishing forms are never stable
    let (f5, f2) = representative(CaseId::C1);
    for (a, b) in [(BinaryForm::zero(5), f2.clone()), (f5.clone(), BinaryForm::zero(2))] {
        match stability(&a, &b) {
            Ok(v) if v.verdict == Stability::Unstable => {}
            other => bad.push(format!("vanishing form: {other:?}")),
        }
    }
    let mut cusps = 0;
    for _ in 0..50 {
        let (f5, f2) = pair_from_specs(&[PointSpec::new(1, 3, 0), PointSpec::new(1, 2, 2)], &mut rng);
        let ok = matches!(classify_case(&f5, &f2), Ok(c) if c.case_id == CaseId::Cusp)
            && matches!(stability(&f5, &f2), Ok(v) if v.verdict == Stability::StrictlySemistable);
        if ok {
            cusps += 1;
        } else {
            bad.push(format!("cusp pair {f5} / {f2} not detected"));
        }
    }
    let total = profiles.len() + 2 + 50;
    let mut out = summary(
        &format!("{total}/{total} agree ({boundary} boundary shapes, 10000 random, 50 cusps)"),
        &bad.iter().take(5).cloned().collect::<Vec<_>>(),
        total,
    );
    if bad.is_empty() {
        out.computed = format!(
            "{total}/{total} ok; stable {}, strictly semistable {}, unstable {}; cusps {cusps}/50",
            counts[0], counts[1], counts[2]
        );
    }
    out.pass = bad.is_empty();
    out
}

fn table2() -> Outcome {
    let mut bad = Vec::new();
    match table2_verify() {
        Ok(rows) => {
            for r in rows.iter().filter(|r| !r.pass) {
                bad.push(format!("row {}", r.row));
            }
        }
        Err(e) => bad.push(e.to_string()),
    }
    let mut discs = Vec::new();
    for case in CaseId::STABLE {
        match shioda_tate_check(case) {
            Ok(s) => {
                if s.mw_order * s.mw_order * s.disc_m != s.fiber_discriminant_product {
                    bad.push(format!("Shioda-Tate fails for case {case}"));
                }
                if matches!(case, CaseId::C1 | CaseId::C2) {
                    discs.push(s.disc_m);
                }
            }
            Err(e) => bad.push(format!("case {case}: {e}")),
        }
    }
    if discs != [243, 324] {
        bad.push(format!("|D| for rows 1-2: {discs:?}"));
    }
    summary("17 rows pass, Shioda-Tate for 19 cases, |D| = 243, 324", &bad, 17 + 19 + 1)
}

fn discriminant_forms() -> Outcome {
    let identities: [(&str, &str, bool); 4] = [
        ("E6", "A2", true),
        ("A2(-1)", "A2", true),
        ("A2+A2", "A2(-1)+A2(-1)", false),
        ("A2(-2)", "D4+A2", false),
    ];
    let decide = |a: &str, b: &str, negate: bool| -> Result<bool> {
        let qa = discriminant_form(&parse_lattice(a)?)?;
        let qb = discriminant_form(&parse_lattice(b)?)?;
        fqf_isometric(&qa, &if negate { qb.negate() } else { qb })
    };
    let results: Vec<String> = identities
        .iter()
        .map(|&(a, b, neg)| match decide(a, b, neg) {
            Ok(v) => v.to_string(),
            Err(e) => format!("error: {e}"),
        })
        .collect();
    let pass = results.iter().all(|r| r == "true");
    Outcome {
        expected: "q(E6)=-q(A2), q(A2(-1))=-q(A2), q(A2)^2=q(A2(-1))^2, q(A2(-2))=q(D4)+q(A2): [true, true, true, true]"
            .into(),
        computed: format!("[{}]", results.join(", ")),
        pass,
    }
}

fn census() -> Outcome {
    let c = norm_census();
    let total = 2 * (c.isotropic + c.short + c.long);
    Outcome::compare((40, 36, 45, 242), (c.isotropic, c.short, c.long, total))
}

fn group_orders() -> Outcome {
    let so = so_group().order();
    let we6 = weyl_group().len();
    let wd5 = wd5_group().order();
    let stab = weyl_report().line_stabilizer;
    let index = if wd5 == 0 { 0 } else { so / wd5 };
    let mut out = Outcome::compare((51840, 51840, 1920, 1920, 27), (so, we6, wd5, stab, index));
    out.expected = format!("SO(V), W(E6), W(D5), line stabilizer, index = {}", out.expected);
    out
}

fn orbit_tables() -> Outcome {
    let computed = (|| -> Result<_> {
        let mut k1: Vec<usize> = wd5_orbits_on_short(1)?.iter().map(|o| o.orbit_size).collect();
        k1.sort_unstable();
        let mut idx = Vec::new();
        for k in 2..=4 {
            let mut v: Vec<usize> =
                wd5_orbits_on_short(k)?.iter().map(|o| o.stabilizer_index_in_gk).collect();
            v.sort_unstable_by(|a, b| b.cmp(a));
            idx.push(v);
        }
        let g1 = we6_stabilizer(1)?.order;
        Ok((k1, idx, g1))
    })();
    match computed {
        Ok(c) => Outcome::compare((vec![16, 20], vec![vec![16, 6, 4, 1], vec![12, 12, 3], vec![24, 3]], 1440), c),
        Err(e) => Outcome::failed("orbit tables", e),
    }
}

fn lines() -> Outcome {
    let computed = (|| -> Result<_> {
        let inc = incidence_matrix();
        let meeting: Vec<usize> = inc.iter().map(|r| r.iter().filter(|&&x| x == 1).count()).collect();
        let all_ten = meeting.iter().all(|&m| m == 10);
        let roots = standard_node_roots();
        let nodal: Vec<usize> =
            (1..=4).map(|k| nodal_line_count(&roots[..k])).collect::<Result<_>>()?;
        let mut pencils = Vec::new();
        for l in lines27() {
            pencils.push(conic_pencil_fibers(&l)?.len());
        }
        let pencils_five = pencils.iter().all(|&n| n == 5);
        Ok((lines27().len(), all_ten, tritangents().len(), nodal, pencils_five, cusp_count()))
    })();
    match computed {
        Ok(c) => {
            let mut out = Outcome::compare((27, true, 45, vec![21, 16, 12, 9], true, 40), c);
            out.expected =
                format!("lines, all meet 10, tritangents, nodal counts, 5 reducible fibres, cusps = {}", out.expected);
            out
        }
        Err(e) => Outcome::failed("line combinatorics", e),
    }
}

fn eisenstein() -> Outcome {
    let mut bad = Vec::new();
    let t = TModule::standard();
    match discriminant_identification() {
        Ok(r) => {
            for (ok, what) in [
                (r.rho_order_three, "rho^3 = 1"),
                (r.h_of_sqrt_minus_three, "h(sqrt(-3) x) = -x"),
                (r.rho_trivial_on_discriminant, "rho trivial on D(T)"),
                (r.pass, "identification of D(T) with F_3^5"),
            ] {
                if !ok {
                    bad.push(what.to_string());
                }
            }
        }
        Err(e) => bad.push(e.to_string()),
    }
    match hermitian_check() {
        Ok(r) if r.pass => {}
        Ok(r) => bad.push(format!("hermitian form: {r:?}")),
        Err(e) => bad.push(e.to_string()),
    }

    let rho: Vec<Vec<Q>> =
        t.rho.iter().map(|r| r.iter().map(|&x| Q::from_integer(x.into())).collect()).collect();
    let cp = charpoly(&rho);
    let expected_cp: Vec<Q> =
        [1, 5, 15, 30, 45, 51, 45, 30, 15, 5, 1].iter().map(|&c: &i64| Q::from_integer(c.into())).collect();
    if cp != expected_cp {
        bad.push("characteristic polynomial".into());
    }

    let mut rng = StdRng::seed_from_u64(0xe15e);
    let minus_two_thirds = Q::new((-2).into(), 3.into());
    for _ in 0..200 {
        let x: Vec<i64> = (0..RANK).map(|_| rng.gen_range(-6..=6)).collect();
        let h = t.h_map(&x);
        let nu = hermitian_norm(&t.to_eisenstein(&x));
        if t.pairing_q(&h, &h) != &minus_two_thirds * Q::from_integer(nu) {
            bad.push(format!("h(x)^2 at {x:?}"));
            break;
        }
    }
    for _ in 0..200 {
        let i = rng.gen_range(0..BLOCKS);
        let z = EisensteinInt::new(rng.gen_range(-9..=9), rng.gen_range(-9..=9));
        let mut e = vec![0i64; RANK];
        e[2 * i] = 1;
        let r = t.scalar_action(&z, &e);
        // the first block, A2(-1), has the opposite sign
        let sign = if i == 0 { -1 } else { 1 };
        if BigInt::from(-sign * t.pairing(&r, &r) / 2) != z.norm() {
            bad.push(format!("z zbar at {z:?} in block {i}"));
            break;
        }
    }
    summary("all identities exact", &bad, 9)
}

fn pipeline() -> Outcome {
    let mut bad = Vec::new();
    let mut rng = StdRng::seed_from_u64(0x6b0);
    let mut retries = 0;
    let mut smooth_reports = Vec::new();
    for trial in 0..3 {
        let mut done = false;
        for _ in 0..5 {
            let pts = random_general_points(&mut rng, 6);
            let r = cubic_from_points(&pts).and_then(|b| {
                let (l, m) = b.default_skew_pair();
                analyze(&b.cubic, &l, &m).map(|r| (b, l, m, r))
            });
            match r {
                Ok((b, l, m, r)) if r.case.case_id == CaseId::C1 && r.bordered_identity => {
                    smooth_reports.push((b.cubic, l, m, r.case));
                    done = true;
                    break;
                }
                Ok((_, _, _, r)) if matches!(r.case.case_id, CaseId::C2 | CaseId::C3) => retries += 1,
                Ok((_, _, _, r)) => {
                    bad.push(format!("trial {trial}: case {}", r.case.case_id));
                    break;
                }
                Err(e) => {
                    bad.push(format!("trial {trial}: {e}"));
                    break;
                }
            }
        }
        if !done && bad.is_empty() {
            bad.push(format!("trial {trial}: no generic point set in 5 draws"));
        }
    }

    let normal = |c: [&[i64]; 5]| {
        let f = BinaryForm::from_ints;
        NormalizedCubic::new(f(c[0]), f(c[1]), f(c[2]), f(c[3]), f(c[4])).and_then(|n| n.to_cubic())
    };
    let std_l = ProjLine::parse("1,0,0,0;0,1,0,0").expect("valid line");
    let std_m = ProjLine::parse("0,0,1,0;0,0,0,1").expect("valid line");
    let mut inputs = smooth_reports;
    for c in [
        [&[1, 0][..], &[0, 0], &[1, 0], &[0, 0, 1], &[1, 1, 0]],
        [&[1, 0][..], &[0, 0], &[0, 1], &[0, 1, 0], &[0, 1, 0]],
    ] {
        match normal(c).and_then(|f| analyze(&f, &std_l, &std_m).map(|r| (f, r))) {
            Ok((f, r)) => inputs.push((f, std_l.clone(), std_m.clone(), r.case)),
            Err(e) => bad.push(e.to_string()),
        }
    }
    let mut transforms = 0;
    for (f, l, m, case) in &inputs {
        for _ in 0..5 {
            let r = random_invertible(&mut rng, 4, 3);
            let rinv = inverse(&r).expect("invertible");
            let got = f.transform(&r).and_then(|g| analyze(&g, &l.apply(&rinv)?, &m.apply(&rinv)?));
            transforms += 1;
            match got {
                Ok(rep) if rep.case == *case && rep.bordered_identity => {}
                Ok(rep) => bad.push(format!("case {} became {}", case.case_id, rep.case.case_id)),
                Err(e) => bad.push(e.to_string()),
            }
        }
    }
    let mut out = summary(
        &format!("3 point sets give case 1; {transforms} transforms preserve the case"),
        &bad,
        3 + transforms,
    );
    if out.pass {
        out.computed = format!("{}; {retries} non-generic draws retried", out.computed);
    }
    out
}
