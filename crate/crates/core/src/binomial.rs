//! Generalized binomial coefficients: expansion route, Dunkl-operator route,
//! and polynomial dependence on the top argument.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::interp::interpolate;
use crate::jack::JackFamily;
use crate::operators::{apply_dunkl_poly, compose_with_permutation, Permutation};
use crate::params::{compositions_up_to, hook_products, spectral_point, Composition, RationalVector};
use crate::poly::{to_e_basis, ExpansionTable, Polynomial};
use crate::rational::{pow, Q};

/// Ratio between the operator route and the ℰ-basis expansion, fitted once
/// over all |η| ≤ 4, r ≤ 3, α ∈ {1/2, 1, 2} and frozen (see tests).
pub const OPERATOR_ROUTE_CALIBRATION: i64 = 1;

/// Coefficients of ℰ_η(1 + w·t) in the basis ℰ_ν(t).
pub fn binom_table_twisted(fam: &JackFamily, eta: &Composition, w: &Permutation) -> Result<Arc<ExpansionTable>> {
    fam.ctx().check_rank(eta.len())?;
    fam.binom_tables.get_or_try_insert(&(eta.clone(), w.clone()), || {
        let e = fam.normalized(eta)?;
        let shifted = compose_with_permutation(&e, w)?.translate(&Q::one());
        let in_e = to_e_basis(&shifted, fam)?;
        // c·E_ν = c·E_ν(1)·ℰ_ν
        let mut out = ExpansionTable::new(fam.r(), eta.weight());
        for (nu, c) in in_e.entries() {
            out.accumulate(nu.clone(), c * &fam.jack(nu)?.value_at_ones)?;
        }
        Ok(out)
    })
}

/// binom(η, ν) for all ν: coefficients of ℰ_η(1+t) in the basis ℰ_ν(t).
pub fn binom_table(fam: &JackFamily, eta: &Composition) -> Result<Arc<ExpansionTable>> {
    binom_table_twisted(fam, eta, &Permutation::identity(fam.r()))
}

/// binom_table restricted to |ν| ≤ cap.
pub fn binom_table_capped(fam: &JackFamily, eta: &Composition, cap: u32) -> Result<ExpansionTable> {
    let full = binom_table(fam, eta)?;
    let mut out = ExpansionTable::new(fam.r(), cap.min(eta.weight()));
    for (nu, c) in full.entries().iter().filter(|(nu, _)| nu.weight() <= cap) {
        out.accumulate(nu.clone(), c.clone())?;
    }
    Ok(out)
}

/// α^{|ν|}/d′_ν · [E_ν(T) (ℰ_η∘w)](1^r), before calibration.
pub fn operator_route_raw(fam: &JackFamily, eta: &Composition, nu: &Composition, w: &Permutation) -> Result<Q> {
    let ctx = fam.ctx();
    ctx.check_rank(nu.len())?;
    if nu.weight() > eta.weight() {
        return Ok(Q::zero());
    }
    let target = compose_with_permutation(&*fam.normalized(eta)?, w)?;
    let img = apply_dunkl_poly(&*fam.e(nu)?, &target, ctx)?;
    let h = hook_products(nu, ctx);
    Ok(img.eval_ones() * pow(ctx.alpha(), nu.weight()) / h.d_prime)
}

/// w-twisted binomial coefficient through the Dunkl operators.
pub fn binom_w(fam: &JackFamily, eta: &Composition, nu: &Composition, w: &Permutation) -> Result<Q> {
    Ok(operator_route_raw(fam, eta, nu, w)? / Q::from_integer(OPERATOR_ROUTE_CALIBRATION.into()))
}

/// binom(·, ν)_w as a polynomial in the spectral vector of the top label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialPolynomial {
    pub nu: Composition,
    pub twist: Permutation,
    /// Polynomial in the r spectral coordinates.
    pub poly: Polynomial,
}

impl BinomialPolynomial {
    pub fn degree_bound(&self) -> u32 {
        self.nu.weight()
    }

    pub fn eval_spectral(&self, point: &RationalVector) -> Result<Q> {
        self.poly.eval(point.entries())
    }
}

fn interpolate_binomial(fam: &JackFamily, nu: &Composition, w: &Permutation, degree: u32) -> Result<Polynomial> {
    let labels = compositions_up_to(fam.r(), degree);
    let mut points = Vec::with_capacity(labels.len());
    let mut values = Vec::with_capacity(labels.len());
    for eta in &labels {
        points.push(fam.jack(eta)?.spectral.clone());
        values.push(binom_table_twisted(fam, eta, w)?.get(nu));
    }
    interpolate(&points, &values, degree)
}

/// Interpolates η ↦ binom(η, ν)_w over the spectral vectors of all labels
/// with |η| ≤ |ν|, and rejects the result unless the |ν|+1 node set gives
/// the same polynomial.
pub fn binom_poly(fam: &JackFamily, nu: &Composition, w: &Permutation) -> Result<Arc<BinomialPolynomial>> {
    fam.ctx().check_rank(nu.len())?;
    fam.binom_polys.get_or_try_insert(&(nu.clone(), w.clone()), || {
        let d = nu.weight();
        let low = interpolate_binomial(fam, nu, w, d)?;
        let high = interpolate_binomial(fam, nu, w, d + 1)?;
        if low != high {
            return Err(Error::DegreeCheckFailure { nu: nu.clone(), low: d as usize, high: d as usize + 1 });
        }
        Ok(BinomialPolynomial { nu: nu.clone(), twist: w.clone(), poly: low })
    })
}

/// binom(top, ν)_w at an arbitrary rational label, through its spectral point.
pub fn evaluate_binom(fam: &JackFamily, bp: &BinomialPolynomial, top: &RationalVector) -> Result<Q> {
    fam.ctx().check_rank(top.len())?;
    bp.eval_spectral(&spectral_point(top, fam.ctx()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::AlphaContext;
    use crate::rational::{binomial, frac, int};

    fn c(v: &[u32]) -> Composition {
        Composition::new(v.to_vec())
    }

    #[test]
    fn one_variable_is_classical() {
        let fam = JackFamily::new(AlphaContext::new(1, frac(2, 3)).unwrap());
        let id = Permutation::identity(1);
        for k in 0..6u32 {
            let t = binom_table(&fam, &c(&[k])).unwrap();
            for l in 0..=k {
                let want = binomial(&int(k as i64), l);
                assert_eq!(t.get(&c(&[l])), want);
                assert_eq!(binom_w(&fam, &c(&[k]), &c(&[l]), &id).unwrap(), want);
            }
        }
        // falling factorial in the top argument, evaluated at −b
        let bp = binom_poly(&fam, &c(&[3]), &id).unwrap();
        let b = int(4);
        let v = evaluate_binom(&fam, &bp, &RationalVector::new(vec![-b.clone()])).unwrap();
        assert_eq!(v, -binomial(&(&b + int(2)), 3));
    }

    #[test]
    fn zero_index_is_one() {
        let fam = JackFamily::new(AlphaContext::new(2, int(2)).unwrap());
        let w = Permutation::transposition(2, 0, 1).unwrap();
        for eta in compositions_up_to(2, 3) {
            assert_eq!(binom_table(&fam, &eta).unwrap().get(&Composition::zero(2)), Q::one());
            assert_eq!(binom_w(&fam, &eta, &Composition::zero(2), &w).unwrap(), Q::one());
        }
        let bp = binom_poly(&fam, &Composition::zero(2), &Permutation::identity(2)).unwrap();
        assert_eq!(bp.poly, Polynomial::one(2));
    }

    #[test]
    fn two_variable_regressions() {
        let fam = JackFamily::new(AlphaContext::new(2, int(1)).unwrap());
        let id = Permutation::identity(2);
        let sw = Permutation::transposition(2, 0, 1).unwrap();
        // ℰ_(0,1)(1+t) = 1 + t₂ and t₂ = E_(0,1) = ℰ_(0,1)
        let t = binom_table(&fam, &c(&[0, 1])).unwrap();
        assert_eq!(t.get(&c(&[1, 0])), Q::zero());
        assert_eq!(t.get(&c(&[0, 1])), Q::one());
        // swapped: ℰ_(0,1)(1 + (t₂, t₁)) = 1 + t₁ = 1 + (3/2)ℰ_(1,0) − (1/2)ℰ_(0,1)
        assert_eq!(binom_w(&fam, &c(&[0, 1]), &c(&[1, 0]), &sw).unwrap(), frac(3, 2));
        assert_eq!(binom_w(&fam, &c(&[0, 1]), &c(&[0, 1]), &sw).unwrap(), frac(-1, 2));
        let bp = binom_poly(&fam, &c(&[1, 0]), &id).unwrap();
        assert!(bp.poly.degree().unwrap() <= 1);
    }
}
