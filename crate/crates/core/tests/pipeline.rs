use cubek3::binforms::{BinaryForm, CaseId};
use cubek3::cubio::linalg::{inverse, random_invertible};
use cubek3::cubio::{
    analyze, bordered_determinant, contains_line, cubic_from_points, extract_f5_f2, normalize,
    random_general_points, NormalizedCubic, ProjLine,
};
use cubek3::rational::q;
use rand::rngs::StdRng;
use num_traits::Zero;
use rand::SeedableRng;

fn standard_lines() -> (ProjLine, ProjLine) {
    (
        ProjLine::parse("1,0,0,0;0,1,0,0").unwrap(),
        ProjLine::parse("0,0,1,0;0,0,0,1").unwrap(),
    )
}

#[test]
fn six_points_give_case_one() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..3 {
        let pts = random_general_points(&mut rng, 6);
        let b = cubic_from_points(&pts).unwrap();
        let (l, m) = b.default_skew_pair();
        let r = analyze(&b.cubic, &l, &m).unwrap();
        assert_eq!(r.case.case_id, CaseId::C1);
        assert!(r.bordered_identity);
    }
}

#[test]
fn swapping_the_lines_keeps_the_case() {
    let mut rng = StdRng::seed_from_u64(5);
    let pts = random_general_points(&mut rng, 5);
    let b = cubic_from_points(&pts).unwrap();
    let (l, m) = b.default_skew_pair();
    let a = analyze(&b.cubic, &l, &m).unwrap();
    let c = analyze(&b.cubic, &m, &l).unwrap();
    assert_eq!(a.case.case_id, c.case.case_id);
}

#[test]
fn other_skew_pairs_of_a_smooth_cubic() {
    let mut rng = StdRng::seed_from_u64(8);
    let b = cubic_from_points(&random_general_points(&mut rng, 5)).unwrap();
    let lines = &b.lines;
    let mut checked = 0;
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            if checked == 6 || !lines[i].line.is_skew_to(&lines[j].line) {
                continue;
            }
            let r = analyze(&b.cubic, &lines[i].line, &lines[j].line).unwrap();
            assert!(matches!(r.case.case_id, CaseId::C1 | CaseId::C2 | CaseId::C3));
            assert_eq!(r.case.nodes, Some(0));
            checked += 1;
        }
    }
    assert_eq!(checked, 6);
}

fn normal(a00: &[i64], a01: &[i64], a11: &[i64], b0: &[i64], b1: &[i64]) -> NormalizedCubic {
    let f = BinaryForm::from_ints;
    NormalizedCubic::new(f(a00), f(a01), f(a11), f(b0), f(b1)).unwrap()
}

#[test]
fn projective_transforms_preserve_the_case() {
    let mut rng = StdRng::seed_from_u64(3);
    let (l, m) = standard_lines();
    let inputs = [
        (CaseId::C8Star, normal(&[1, 0], &[0, 0], &[1, 0], &[0, 0, 1], &[1, 1, 0])),
        (CaseId::C17, normal(&[1, 0], &[0, 0], &[0, 1], &[0, 1, 0], &[0, 1, 0])),
    ];
    for (case, n) in inputs {
        let f = n.to_cubic().unwrap();
        let base = analyze(&f, &l, &m).unwrap();
        assert_eq!(base.case.case_id, case);
        for _ in 0..4 {
            let r = random_invertible(&mut rng, 4, 3);
            let g = f.transform(&r).unwrap();
            let rinv = inverse(&r).unwrap();
            let (l2, m2) = (l.apply(&rinv).unwrap(), m.apply(&rinv).unwrap());
            assert!(contains_line(&g, &l2) && contains_line(&g, &m2));
            let t = analyze(&g, &l2, &m2).unwrap();
            assert_eq!(t.case, base.case);
            assert_eq!(t.stability.verdict, base.stability.verdict);
        }
    }
}

#[test]
fn determinant_identity_on_random_normal_forms() {
    use rand::Rng;
    let mut rng = StdRng::seed_from_u64(1);
    let form = |d: usize, rng: &mut StdRng| {
        BinaryForm::from_ints(&(0..=d).map(|_| rng.gen_range(-4..=4)).collect::<Vec<_>>())
    };
    for _ in 0..100 {
        let n = NormalizedCubic::new(
            form(1, &mut rng),
            form(1, &mut rng),
            form(1, &mut rng),
            form(2, &mut rng),
            form(2, &mut rng),
        )
        .unwrap();
        let Ok((f5, f2)) = extract_f5_f2(&n) else { continue };
        assert_eq!(bordered_determinant(&n), f5.scale(&q(-1)));
        assert_eq!((f5.degree(), f2.degree()), (5, 2));
        let f = n.to_cubic().unwrap();
        let (l, m) = standard_lines();
        // Cubics are only defined up to a scalar, so normalize may rescale.
        let r = normalize(&f, &l, &m).unwrap();
        let lead = |x: &NormalizedCubic| {
            [&x.a00, &x.a01, &x.a11, &x.b0, &x.b1]
                .iter()
                .flat_map(|g| g.coeffs().to_vec())
                .find(|c| !c.is_zero())
                .unwrap()
        };
        let s = lead(&r) / lead(&n);
        for (a, b) in [(&r.a00, &n.a00), (&r.a01, &n.a01), (&r.a11, &n.a11), (&r.b0, &n.b0), (&r.b1, &n.b1)] {
            assert_eq!(*a, b.scale(&s));
        }
    }
}
