use proptest::prelude::*;

use hypconj::list_solver::{solve_lists, ListOutcome};
use hypconj::power_conjugacy::{conj_by_power, test_conj_vs_sls};
use hypconj::single_conjugacy::{conj_candidates, Candidates};
use hypconj::straightness::{straighten_power, test_inf_order};
use hypconj::{GroupContext, Letter, Word};

fn backends() -> Vec<GroupContext> {
    let rws = GroupContext::from_file(concat!(env!("CARGO_MANIFEST_DIR"), "/groups/z2z3_rws.grp"))
        .unwrap();
    vec![
        GroupContext::free(2, 1).unwrap(),
        GroupContext::free_product(&[2, 3], &['x', 'y'], 1).unwrap(),
        rws,
    ]
}

fn raw(ctx: &GroupContext, codes: &[u8]) -> Word {
    let k = ctx.alphabet().len() as u8;
    Word(codes.iter().map(|c| Letter(c % k)).collect())
}

fn codes(max: usize) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(any::<u8>(), 0..=max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn reduction_is_idempotent_and_inverse_cancels(c in codes(30)) {
        for ctx in backends() {
            let w = raw(&ctx, &c);
            let r = ctx.reduce(&w);
            prop_assert_eq!(ctx.reduce(&r), r.clone());
            prop_assert!(r.len() <= w.len());
            prop_assert!(ctx.is_trivial(&w.then(&ctx.invert(&w))));
            prop_assert_eq!(ctx.parse(&ctx.format(&r)).unwrap(), r);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn round_trip_lists_are_solved(
        lists in prop::collection::vec(codes(12), 1..=5),
        g in codes(6),
    ) {
        for ctx in backends() {
            let a: Vec<Word> = lists.iter().map(|c| raw(&ctx, c)).collect();
            let g = raw(&ctx, &g);
            let b: Vec<Word> = a.iter().map(|w| ctx.conjugate(w, &g)).collect();
            match solve_lists(&ctx, &a, &b).unwrap() {
                ListOutcome::Conjugate(w) => prop_assert!(ctx.conjugates_list(&a, &b, &w)),
                ListOutcome::UnverifiedAtCap(_) => {}
                ListOutcome::NotConjugate => prop_assert!(false, "round trip reported not conjugate"),
            }
        }
    }

    #[test]
    fn family_members_conjugate(u in codes(14), g in codes(6), n in -4i64..=4) {
        for ctx in backends() {
            let u = raw(&ctx, &u);
            if !test_inf_order(&ctx, &u).unwrap().is_infinite() {
                continue;
            }
            let v = ctx.conjugate(&u, &raw(&ctx, &g));
            let Candidates::Family(f) = conj_candidates(&ctx, &u, &v).unwrap() else {
                return Err(TestCaseError::fail("conjugate pair rejected"));
            };
            prop_assert!(f.s.len() as u64 <= ctx.constants().v);
            let works = f.s.iter().any(|s| ctx.conjugate(&u, &f.member(&ctx, 0, s)) == v);
            prop_assert!(works);
            // every member p·yⁿ·s conjugates u to v exactly when yⁿ passes the power test
            for s in &f.s {
                let g = f.member(&ctx, n, s);
                let inner = ctx.conjugate(&u, &f.p);
                let target = ctx.conjugate(&v, &ctx.invert(s));
                let predicted = test_conj_vs_sls(&ctx, &inner, &target, &f.y).unwrap().contains(n);
                prop_assert_eq!(ctx.conjugate(&u, &g) == v, predicted);
            }
        }
    }

    #[test]
    fn straightened_powers_are_conjugate(u in codes(16)) {
        for ctx in backends() {
            let u = ctx.reduce(&raw(&ctx, &u));
            if !test_inf_order(&ctx, &u).unwrap().is_infinite() {
                continue;
            }
            let l = ctx.constants().l as i64;
            let u = ctx.power(&u, l + 1);
            let s = straighten_power(&ctx, &u).unwrap();
            let uk = ctx.power(&u, s.k as i64);
            prop_assert_eq!(ctx.conjugate(&uk, &s.a), s.z.clone());
            prop_assert_eq!(ctx.power(&s.z, 3).len(), 3 * s.z.len());
        }
    }

    #[test]
    fn power_conjugation_composes(u in codes(10), y in codes(5), i in -6i64..=6, j in -6i64..=6) {
        for ctx in backends() {
            let y = ctx.reduce(&raw(&ctx, &y));
            let u = raw(&ctx, &u);
            let once = conj_by_power(&ctx, &conj_by_power(&ctx, &u, &y, i), &y, j);
            prop_assert_eq!(once, conj_by_power(&ctx, &u, &y, i + j));
        }
    }
}

#[test]
fn balls_grow_monotonically() {
    for ctx in backends() {
        let mut prev = 0;
        for r in 0..=6 {
            let b = ctx.ball(r).unwrap();
            assert!(b.len() > prev || r > 0 && b.len() == prev);
            assert!(b
                .windows(2)
                .all(|w| (w[0].len(), &w[0].0) < (w[1].len(), &w[1].0)));
            assert!(b.iter().all(|w| ctx.reduce(w) == *w && w.len() <= r));
            prev = b.len();
        }
    }
}
