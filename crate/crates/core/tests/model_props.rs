use alexq_core::{AdjContext, FElement, FinAbGroup};
use proptest::prelude::*;

/// Random `(M, T)` with `M` of rank at most 2 and `T` invertible.
fn context() -> impl Strategy<Value = AdjContext> {
    (1i64..=9, 1i64..=9, prop::collection::vec(-20i64..20, 4)).prop_filter_map("T not an automorphism", |(a, b, m)| {
        let g = FinAbGroup::new(&[a, a * b]).ok()?;
        let t = g.endo(&[vec![m[0], m[1] * b], vec![m[2], m[3]]]).ok()?;
        AdjContext::new(g, t).ok()
    })
}

fn element(ctx: &AdjContext, k: i64, x: &[u64], a: &[u64]) -> FElement {
    let g = ctx.group();
    let s = ctx.s_group().quotient();
    let xs: Vec<u64> = g.orders().iter().zip(x).map(|(o, v)| v % o).collect();
    let al: Vec<u64> = s.orders().iter().zip(a).map(|(o, v)| v % o).collect();
    FElement::new(k, g.element_from_u64(&xs).unwrap(), s.element_from_u64(&al).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn group_and_action_laws(
        ctx in context(),
        ks in prop::array::uniform3(-12i64..12),
        xs in prop::array::uniform3(prop::array::uniform2(0u64..1000)),
        al in prop::array::uniform3(prop::array::uniform4(0u64..1000)),
        p in prop::array::uniform2(0u64..1000),
    ) {
        let [g, h, l] = [0, 1, 2].map(|i| element(&ctx, ks[i], &xs[i], &al[i]));
        prop_assert_eq!(ctx.f_mul(&ctx.f_mul(&g, &h), &l), ctx.f_mul(&g, &ctx.f_mul(&h, &l)));
        prop_assert_eq!(ctx.f_mul(&g, &ctx.f_inv(&g)), ctx.identity());
        prop_assert_eq!(ctx.f_mul(&g, &h).k, g.k + h.k);
        prop_assert_eq!(ctx.f_pow(&g, 3), ctx.f_mul(&g, &ctx.f_mul(&g, &g)));
        let pt = element(&ctx, 0, &p, &[0; 4]).x;
        prop_assert_eq!(ctx.act(&ctx.act(&pt, &g), &h), ctx.act(&pt, &ctx.f_mul(&g, &h)));
        let e = ctx.phi(&h.x);
        prop_assert_eq!(ctx.act(&pt, &e), ctx.quandle_op(&pt, &h.x));
    }

    #[test]
    fn round_trip_when_connected(ctx in context(), k in -12i64..12, x in prop::array::uniform2(0u64..1000), a in prop::array::uniform4(0u64..1000)) {
        prop_assume!(ctx.is_connected());
        let g = element(&ctx, k, &x, &a);
        let word = ctx.express_in_generators(&g).unwrap();
        prop_assert_eq!(ctx.eval_word(&word), g);
    }

    #[test]
    fn pi1_matches_s_when_connected(ctx in context()) {
        let pi1 = ctx.pi1().unwrap();
        if ctx.is_connected() {
            prop_assert_eq!(&pi1.invariant_factors[..], ctx.s_group().invariant_factors());
        }
        prop_assert_eq!(pi1.connected, ctx.is_connected());
    }
}
