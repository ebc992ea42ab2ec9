//! Measure-level checks against closed-form Gamma integrals.

use jackcalc::numquad::{laguerre_gram, laplace_check_r1, QuadratureSpec};
use jackcalc::rational::{frac, int, to_f64};
use jackcalc::{AlphaContext, JackFamily};
use proptest::prelude::*;
use statrs::function::gamma::gamma;

#[test]
fn one_variable_norms_match_gamma() {
    let fam = JackFamily::new(AlphaContext::new(1, int(1)).unwrap());
    for b in [int(2), frac(5, 2), int(4)] {
        let g = laguerre_gram(&fam, 4, &b, &QuadratureSpec::default_for(1)).unwrap();
        assert!(g.pass, "b={b} off-diagonal {}", g.max_off_diagonal);
        let bf = to_f64(&b);
        for (i, kappa) in g.kappas.iter().enumerate() {
            let k = kappa.parts()[0] as f64;
            let want = 0.5 * gamma(k + 1.0) * gamma(k + bf);
            let got = g.raw[i][i];
            assert!(((got - want) / want).abs() < 1e-10, "b={b} k={k}: {got} vs {want}");
        }
    }
}

#[test]
fn two_variable_gram_is_diagonal_for_several_alphas() {
    for alpha in [int(1), int(2), frac(1, 2)] {
        let fam = JackFamily::new(AlphaContext::new(2, alpha.clone()).unwrap());
        let b = fam.ctx().q() + int(1);
        let g = laguerre_gram(&fam, 2, &b, &QuadratureSpec::default_for(2)).unwrap();
        assert!(g.pass, "α={alpha}: {}", g.max_off_diagonal);
    }
}

#[test]
fn quadrature_rejects_boundary_and_bad_specs() {
    let fam = JackFamily::new(AlphaContext::new(2, int(1)).unwrap());
    let b = fam.ctx().q() - jackcalc::Q::from_integer(1.into());
    assert!(laguerre_gram(&fam, 1, &b, &QuadratureSpec::default_for(2)).is_err());
    assert!(laguerre_gram(&fam, 1, &int(4), &QuadratureSpec::default_for(1)).is_err());
    assert!(laplace_check_r1(&int(-1), &[0], &[1.0], &QuadratureSpec::default_for(1)).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn laplace_constant_is_half_gamma(p in 1i64..=12, q in 1i64..=4) {
        let c = frac(p, q);
        let rep = laplace_check_r1(&c, &[0, 1, 2], &[0.5, 1.5, 4.0], &QuadratureSpec::default_for(1)).unwrap();
        prop_assert!(rep.pass);
        let want = gamma(rep.c) / 2.0;
        prop_assert!(((rep.n0 - want) / want).abs() < 1e-8);
    }
}
