//! Randomized invariants across the algebraic layer.

use jackcalc::binomial::{binom_poly, binom_table, binom_w};
use jackcalc::operators::{apply_cherednik, apply_dunkl, apply_transposition, euler, is_zero_or_degree, Permutation};
use jackcalc::params::{
    compare_compositions, compositions, hook_products, node_stats, pochhammer_alpha, pochhammer_ratio, spectral_point,
    OrderRelation, ORDER_CONVENTION,
};
use jackcalc::poly::to_e_basis;
use jackcalc::rational::{frac, int, rising};
use jackcalc::special::{kernel_truncated, permute_block};
use jackcalc::{AlphaContext, Composition, JackFamily, Polynomial, RationalVector, Q};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn alpha_strategy() -> impl Strategy<Value = Q> {
    prop::sample::select(vec![frac(1, 2), int(1), int(2), frac(3, 2), frac(2, 3)])
}

fn rational() -> impl Strategy<Value = Q> {
    (-9i64..=9, 1i64..=5).prop_map(|(p, q)| frac(p, q))
}

fn composition(r: usize, max_weight: u32) -> impl Strategy<Value = Composition> {
    prop::collection::vec(0u32..=max_weight, r)
        .prop_filter("weight bound", move |v| v.iter().sum::<u32>() <= max_weight)
        .prop_map(Composition::new)
}

fn polynomial(r: usize, max_deg: u32) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0u32..=max_deg, r), rational()), 0..6).prop_map(move |terms| {
        let terms = terms.into_iter().filter(|(e, _)| e.iter().sum::<u32>() <= max_deg);
        Polynomial::from_terms(r, terms).unwrap()
    })
}

fn family(r: usize, alpha: &Q) -> JackFamily {
    JackFamily::new(AlphaContext::new(r, alpha.clone()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hook_d_is_shifted_d_prime(eta in composition(3, 5), alpha in alpha_strategy()) {
        let ctx = AlphaContext::new(3, alpha.clone()).unwrap();
        let h = hook_products(&eta, &ctx);
        let (mut d, mut dp) = (Q::one(), Q::one());
        for (i, &len) in eta.parts().iter().enumerate() {
            for j in 1..=len {
                let s = node_stats(&eta, i + 1, j).unwrap();
                let x = &alpha * int(s.arm as i64 + 1) + int(s.leg as i64);
                d *= &x + Q::one();
                dp *= x;
            }
        }
        prop_assert_eq!(h.d, d);
        prop_assert_eq!(h.d_prime, dp);
    }

    #[test]
    fn order_is_a_strict_partial_order(a in composition(3, 4), b in composition(3, 4), c in composition(3, 4)) {
        let lt = |x: &Composition, y: &Composition| ORDER_CONVENTION.less(x, y);
        prop_assert!(!lt(&a, &a));
        prop_assert!(!(lt(&a, &b) && lt(&b, &a)));
        if lt(&a, &b) && lt(&b, &c) {
            prop_assert!(lt(&a, &c));
        }
        if a.weight() == b.weight() {
            let rel = compare_compositions(&a, &b).unwrap();
            prop_assert_eq!(rel == OrderRelation::Less, lt(&a, &b));
        }
    }

    #[test]
    fn pochhammer_factorizes_on_partitions(m in 0u32..=5, idx in 0usize..8, nu in prop::collection::vec(rational(), 3), alpha in alpha_strategy()) {
        let parts = jackcalc::params::partitions(3, m);
        let kappa = &parts[idx % parts.len()];
        let ctx = AlphaContext::new(3, alpha.clone()).unwrap();
        let want = kappa.parts().iter().enumerate().fold(Q::one(), |acc, (j, &k)| {
            acc * rising(&(&nu[j] - int(j as i64) / &alpha), k)
        });
        prop_assert_eq!(pochhammer_alpha(&RationalVector::new(nu), kappa, &ctx), want);
    }

    #[test]
    fn pochhammer_ratio_divides(kappa in composition(2, 4), sigma in composition(2, 4), b in rational(), alpha in alpha_strategy()) {
        let ctx = AlphaContext::new(2, alpha).unwrap();
        let bv = RationalVector::constant(2, &b);
        let ps = pochhammer_alpha(&bv, &sigma, &ctx);
        if !ps.is_zero() {
            prop_assert_eq!(pochhammer_ratio(&b, &kappa, &sigma, &ctx).unwrap() * ps, pochhammer_alpha(&bv, &kappa, &ctx));
        }
    }

    #[test]
    fn ring_operations_commute_with_evaluation(p in polynomial(3, 3), q in polynomial(3, 3), x in prop::collection::vec(rational(), 3), c in rational()) {
        let px = p.eval(&x).unwrap();
        let qx = q.eval(&x).unwrap();
        prop_assert_eq!((&p * &q).eval(&x).unwrap(), &px * &qx);
        prop_assert_eq!((&p + &q).eval(&x).unwrap(), &px + &qx);
        let shifted: Vec<Q> = x.iter().map(|v| v + &c).collect();
        prop_assert_eq!(p.translate(&c).eval(&x).unwrap(), p.eval(&shifted).unwrap());
    }

    #[test]
    fn jack_basis_round_trip(p in polynomial(2, 4), alpha in alpha_strategy()) {
        let fam = family(2, &alpha);
        let table = to_e_basis(&p, &fam).unwrap();
        let mut back = Polynomial::zero(2);
        for (k, c) in table.entries() {
            back.add_scaled(&fam.e(k).unwrap(), c);
        }
        prop_assert_eq!(back, p);
    }

    #[test]
    fn dunkl_operators_commute_and_lower_degree(p in polynomial(3, 3), alpha in alpha_strategy(), m in 0u32..=3) {
        let ctx = AlphaContext::new(3, alpha).unwrap();
        let h = p.homogeneous_part(m);
        for i in 0..3 {
            let ti = apply_dunkl(&h, i, &ctx).unwrap();
            prop_assert!(is_zero_or_degree(&ti, m.saturating_sub(1)));
            for j in i + 1..3 {
                let a = apply_dunkl(&apply_dunkl(&p, j, &ctx).unwrap(), i, &ctx).unwrap();
                let b = apply_dunkl(&apply_dunkl(&p, i, &ctx).unwrap(), j, &ctx).unwrap();
                prop_assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn cherednik_operators_commute_and_sum_to_euler(p in polynomial(3, 3), alpha in alpha_strategy()) {
        let ctx = AlphaContext::new(3, alpha).unwrap();
        let u: Vec<Polynomial> = (0..3).map(|j| apply_cherednik(&p, j, &ctx).unwrap()).collect();
        let total = u.iter().fold(Polynomial::zero(3), |acc, x| &acc + x);
        prop_assert_eq!(total, euler(&p));
        for i in 0..3 {
            for j in i + 1..3 {
                prop_assert_eq!(apply_cherednik(&u[j], i, &ctx).unwrap(), apply_cherednik(&u[i], j, &ctx).unwrap());
            }
        }
    }

    #[test]
    fn jack_spectrum_matches_label(eta in composition(3, 4), alpha in alpha_strategy()) {
        let fam = family(3, &alpha);
        let j = fam.jack(&eta).unwrap();
        prop_assert_eq!(&j.spectral, &spectral_point(&eta.to_rational(), fam.ctx()));
    }

    #[test]
    fn binomial_polynomial_is_faithful_off_its_grid(nu in composition(2, 2), eta in composition(2, 5), alpha in alpha_strategy(), swap in any::<bool>()) {
        let fam = family(2, &alpha);
        let w = if swap { Permutation::longest(2) } else { Permutation::identity(2) };
        let bp = binom_poly(&fam, &nu, &w).unwrap();
        let sp = spectral_point(&eta.to_rational(), fam.ctx());
        prop_assert_eq!(bp.eval_spectral(&sp).unwrap(), binom_w(&fam, &eta, &nu, &w).unwrap());
    }

    #[test]
    fn binomial_diagonal_and_vanishing(eta in composition(3, 3), alpha in alpha_strategy()) {
        let fam = family(3, &alpha);
        let t = binom_table(&fam, &eta).unwrap();
        prop_assert_eq!(t.get(&eta), Q::one());
        prop_assert_eq!(t.get(&Composition::zero(3)), Q::one());
        // ν of the same weight but different label never appears
        for nu in compositions(3, eta.weight()) {
            if nu != eta {
                prop_assert!(t.get(&nu).is_zero());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn kernel_is_symmetric_between_blocks(alpha in alpha_strategy(), r in 1usize..=3) {
        let fam = family(r, &alpha);
        let k = kernel_truncated(&fam, 3).unwrap();
        let n = 2 * r;
        let swapped = k.poly().map_exponents(n, |e| e[r..].iter().chain(&e[..r]).copied().collect());
        prop_assert_eq!(&swapped, k.poly());
        let id = Permutation::identity(r);
        prop_assert_eq!(&permute_block(k.poly(), 0, &id), k.poly());
    }

    #[test]
    fn transposition_is_an_involution(p in polynomial(3, 3), i in 0usize..3, j in 0usize..3) {
        prop_assume!(i != j);
        let once = apply_transposition(&p, i, j).unwrap();
        prop_assert_eq!(apply_transposition(&once, i, j).unwrap(), p);
    }
}
