use proptest::prelude::*;
use spinmp_core::{
    apply_e, apply_f, epsilon, phi, CartanContext, CrystalGraph, Rational, ReducedCrystal,
    SpinRules, Variant, WeightContent,
};

fn rank_two() -> CartanContext {
    CartanContext::new(2, &[1, 2, 1]).unwrap()
}

proptest! {
    #[test]
    fn reflection_is_an_involution_preserving_defect(c in proptest::collection::vec(0i64..12, 3), i in 0usize..3) {
        let ctx = rank_two();
        let w = WeightContent(c);
        if let Ok(r) = ctx.reflect(&w, i) {
            prop_assert_eq!(ctx.defect(&r), ctx.defect(&w));
            prop_assert_eq!(ctx.hub(&r).theta(i), -ctx.hub(&w).theta(i));
            prop_assert_eq!(ctx.reflect(&r, i).unwrap(), w);
        }
    }

    #[test]
    fn null_root_shift_raises_defect_by_level(c in proptest::collection::vec(0i64..8, 3)) {
        let ctx = rank_two();
        let w = WeightContent(c);
        let shifted = WeightContent(w.0.iter().zip(ctx.null_root().0).map(|(a, b)| a + b).collect());
        prop_assert_eq!(ctx.hub(&shifted), ctx.hub(&w));
        prop_assert_eq!(ctx.defect(&shifted) - ctx.defect(&w), Rational::from_integer(ctx.level()));
    }
}

#[test]
fn operators_shift_content_and_invert_below_degree_nine() {
    let ctx = CartanContext::new(1, &[0, 1]).unwrap();
    let rules = SpinRules::new(3, Variant::Paper);
    let g = CrystalGraph::generate(&ctx, rules, 8);
    for (id, b) in g.elements().iter().enumerate() {
        for i in 0..ctx.rank() {
            let theta = ctx.theta(g.content(id), i);
            assert_eq!(
                phi(rules, b, i) as i64 - epsilon(rules, b, i) as i64,
                theta,
                "{b} i={i}"
            );
            if let Some(up) = apply_f(rules, b, i) {
                assert_eq!(up.content(&ctx), g.content(id).shifted(i, 1));
                if up.degree() <= 8 {
                    assert_eq!(apply_e(rules, &up, i).as_ref(), Some(b));
                }
            }
        }
    }
}

#[test]
fn generated_contents_lie_in_the_reduced_crystal() {
    let ctx = rank_two();
    let g = CrystalGraph::generate(&ctx, SpinRules::new(5, Variant::Paper), 6);
    let rc = ReducedCrystal::generate(&ctx, 6);
    for c in g.index().keys() {
        assert!(rc.contains(c), "{c}");
    }
}
