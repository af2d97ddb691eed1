use cubek3::binforms::{classify_case, root_profile, stability, BinaryForm};
use cubek3::cubio::{extract_f5_f2, NormalizedCubic};
use cubek3::rational::q;
use proptest::prelude::*;

fn form(coeffs: Vec<i64>) -> BinaryForm {
    BinaryForm::from_ints(&coeffs)
}

fn pair() -> impl Strategy<Value = (BinaryForm, BinaryForm)> {
    (
        prop::collection::vec(-3i64..=3, 6),
        prop::collection::vec(-3i64..=3, 3),
    )
        .prop_map(|(a, b)| (form(a), form(b)))
        .prop_filter("both forms nonzero", |(a, b)| !a.is_zero() && !b.is_zero())
}

fn substitution() -> impl Strategy<Value = [i64; 4]> {
    [-3i64..=3, -3i64..=3, -3i64..=3, -3i64..=3].prop_filter("invertible", |m| m[0] * m[3] != m[1] * m[2])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn stability_and_case_are_gl2_invariant((f5, f2) in pair(), m in substitution()) {
        let g5 = f5.substitute(&q(m[0]), &q(m[1]), &q(m[2]), &q(m[3]));
        let g2 = f2.substitute(&q(m[0]), &q(m[1]), &q(m[2]), &q(m[3]));
        prop_assert_eq!(stability(&f5, &f2).unwrap().verdict, stability(&g5, &g2).unwrap().verdict);
        prop_assert_eq!(
            root_profile(&f5, &f2).unwrap().type_vector(),
            root_profile(&g5, &g2).unwrap().type_vector()
        );
        let a = classify_case(&f5, &f2).map(|c| c.case_id).ok();
        let b = classify_case(&g5, &g2).map(|c| c.case_id).ok();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn stability_ignores_scaling((f5, f2) in pair(), s5 in 1i64..=9, s2 in -9i64..=-1) {
        let g5 = f5.scale(&q(s5));
        let g2 = f2.scale(&q(s2));
        prop_assert_eq!(stability(&f5, &f2).unwrap(), stability(&g5, &g2).unwrap());
        prop_assert_eq!(f5.canonical(), g5.canonical());
    }

    #[test]
    fn normal_form_scaling_scales_the_forms(
        c in prop::collection::vec(-3i64..=3, 12),
        s in 1i64..=5,
    ) {
        let lin = |a: i64, b: i64| BinaryForm::from_ints(&[a, b]);
        let quad = |a: i64, b: i64, c: i64| BinaryForm::from_ints(&[a, b, c]);
        let n = NormalizedCubic::new(
            lin(c[0], c[1]), lin(c[2], c[3]), lin(c[4], c[5]),
            quad(c[6], c[7], c[8]), quad(c[9], c[10], c[11]),
        ).unwrap();
        let scaled = NormalizedCubic::new(
            n.a00.scale(&q(s)), n.a01.scale(&q(s)), n.a11.scale(&q(s)),
            n.b0.scale(&q(s)), n.b1.scale(&q(s)),
        ).unwrap();
        if let (Ok((f5, f2)), Ok((g5, g2))) = (extract_f5_f2(&n), extract_f5_f2(&scaled)) {
            prop_assert_eq!(g5, f5.scale(&q(s * s * s)));
            prop_assert_eq!(g2, f2.scale(&q(s * s)));
        }
    }
}
