//! Exact sparse multivariate polynomials, total-degree truncated series and
//! triangular change of basis.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::params::Composition;
use crate::rational::{binomial, format_rational, int, pow, rising, factorial, Q};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiExponent(Vec<u32>);

impl MultiExponent {
    pub fn new(e: Vec<u32>) -> Self {
        Self(e)
    }

    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn to_composition(&self) -> Composition {
        Composition::new(self.0.clone())
    }

    fn add(&self, o: &Self) -> Self {
        Self(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl From<&Composition> for MultiExponent {
    fn from(c: &Composition) -> Self {
        Self(c.parts().to_vec())
    }
}

/// Polynomial with exact rational coefficients; zero coefficients are never
/// stored, so structural equality is mathematical equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<MultiExponent, Q>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Q::one())
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn monomial(exp: Vec<u32>, c: Q) -> Self {
        let mut p = Self::zero(exp.len());
        p.add_term(MultiExponent(exp), c);
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, Q::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<u32>, Q)>>(nvars: usize, it: I) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (e, c) in it {
            if e.len() != nvars {
                return Err(Error::RankMismatch { expected: nvars, got: e.len() });
            }
            p.add_term(MultiExponent(e), c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<MultiExponent, Q> {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: &[u32]) -> Q {
        self.terms.get(&MultiExponent(exp.to_vec())).cloned().unwrap_or_else(Q::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(MultiExponent::degree).max()
    }

    /// Terms in graded-lex order (total degree, then exponent vector).
    pub fn graded_terms(&self) -> Vec<(&MultiExponent, &Q)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| (a.0.degree(), a.0).cmp(&(b.0.degree(), b.0)));
        v
    }

    pub fn add_term(&mut self, exp: MultiExponent, c: Q) {
        debug_assert_eq!(exp.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// self += c · other
    pub fn add_scaled(&mut self, other: &Polynomial, c: &Q) {
        assert_eq!(self.nvars, other.nvars, "rank mismatch");
        if c.is_zero() {
            return;
        }
        for (e, v) in &other.terms {
            self.add_term(e.clone(), v * c);
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self> {
        self.same_rank(o)?;
        Ok(self + o)
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self> {
        self.same_rank(o)?;
        Ok(self * o)
    }

    fn same_rank(&self, o: &Self) -> Result<()> {
        if self.nvars != o.nvars {
            return Err(Error::RankMismatch { expected: self.nvars, got: o.nvars });
        }
        Ok(())
    }

    /// Product keeping only terms of total degree ≤ cap.
    pub fn mul_truncated(&self, o: &Self, cap: u32) -> Self {
        assert_eq!(self.nvars, o.nvars, "rank mismatch");
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            let d1 = e1.degree();
            if d1 > cap {
                continue;
            }
            for (e2, c2) in &o.terms {
                if d1 + e2.degree() <= cap {
                    out.add_term(e1.add(e2), c1 * c2);
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.nvars), |acc, _| &acc * self)
    }

    pub fn eval(&self, point: &[Q]) -> Result<Q> {
        if point.len() != self.nvars {
            return Err(Error::RankMismatch { expected: self.nvars, got: point.len() });
        }
        let mut acc = Q::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(&e.0) {
                if k > 0 {
                    t *= pow(x, k);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    pub fn eval_ones(&self) -> Q {
        self.terms.values().fold(Q::zero(), |acc, c| acc + c)
    }

    /// p(c·x)
    pub fn scale_vars(&self, c: &Q) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * pow(c, e.degree()));
        }
        out
    }

    /// p(−x)
    pub fn negate_vars(&self) -> Self {
        self.scale_vars(&-Q::one())
    }

    /// Relabels exponents: the monomial x^e becomes x^{f(e)}.
    pub fn map_exponents<F: Fn(&[u32]) -> Vec<u32>>(&self, nvars: usize, f: F) -> Self {
        let mut out = Self::zero(nvars);
        for (e, v) in &self.terms {
            out.add_term(MultiExponent(f(&e.0)), v.clone());
        }
        out
    }

    /// p(x + c·1), expanded exactly.
    pub fn translate(&self, c: &Q) -> Self {
        let n = self.nvars;
        let mut out = Self::zero(n);
        for (e, v) in &self.terms {
            // ∏_i Σ_k C(e_i, k) c^{e_i − k} x_i^k
            let mut partial: Vec<(Vec<u32>, Q)> = vec![(Vec::with_capacity(n), v.clone())];
            for &ei in &e.0 {
                let mut next = Vec::with_capacity(partial.len() * (ei as usize + 1));
                for (pe, pc) in &partial {
                    for k in 0..=ei {
                        let f = binomial(&int(ei as i64), k) * pow(c, ei - k);
                        if f.is_zero() {
                            continue;
                        }
                        let mut ne = pe.clone();
                        ne.push(k);
                        next.push((ne, pc * f));
                    }
                }
                partial = next;
            }
            for (pe, pc) in partial {
                out.add_term(MultiExponent(pe), pc);
            }
        }
        out
    }

    pub fn truncate(&self, cap: u32) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.degree() <= cap)
                .map(|(e, v)| (e.clone(), v.clone()))
                .collect(),
        }
    }

    pub fn homogeneous_part(&self, m: u32) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.degree() == m)
                .map(|(e, v)| (e.clone(), v.clone()))
                .collect(),
        }
    }

    /// Keeps terms whose degree in the variable block [offset, offset+len)
    /// is at most `cap`.
    pub fn truncate_block(&self, offset: usize, len: usize, cap: u32) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.0[offset..offset + len].iter().sum::<u32>() <= cap)
                .map(|(e, v)| (e.clone(), v.clone()))
                .collect(),
        }
    }

    /// Same polynomial viewed in `nvars` variables, its own occupying
    /// positions offset..offset+self.nvars.
    pub fn embed(&self, nvars: usize, offset: usize) -> Self {
        assert!(offset + self.nvars <= nvars);
        self.map_exponents(nvars, |e| {
            let mut v = vec![0; nvars];
            v[offset..offset + e.len()].copy_from_slice(e);
            v
        })
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, o: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_scaled(o, &Q::one());
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, o: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_scaled(o, &-Q::one());
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Q::one())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, o: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, o.nvars, "rank mismatch");
        let mut out = Polynomial::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                out.add_term(e1.add(e2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.graded_terms().into_iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", format_rational(c))?;
            for (i, &k) in e.0.iter().enumerate() {
                match k {
                    0 => {}
                    1 => write!(f, "*x{}", i + 1)?,
                    _ => write!(f, "*x{}^{}", i + 1, k)?,
                }
            }
        }
        Ok(())
    }
}

struct TermView<'a>(&'a MultiExponent, &'a Q);

impl Serialize for TermView<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Term", 2)?;
        st.serialize_field("coef", &format_rational(self.1))?;
        st.serialize_field("exp", &self.0 .0)?;
        st.end()
    }
}

/// `{"r": n, "terms": [{"coef": "p/q", "exp": [..]}]}`, graded-lex order.
impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermView> = self.graded_terms().into_iter().map(|(e, c)| TermView(e, c)).collect();
        let mut st = s.serialize_struct("Polynomial", 2)?;
        st.serialize_field("r", &self.nvars)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

/// Power series truncated at total degree `cap`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    cap: u32,
    poly: Polynomial,
}

impl TruncatedSeries {
    pub fn from_polynomial(p: &Polynomial, cap: u32) -> Self {
        Self { cap, poly: p.truncate(cap) }
    }

    pub fn one(nvars: usize, cap: u32) -> Self {
        Self { cap, poly: Polynomial::one(nvars) }
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    pub fn into_poly(self) -> Polynomial {
        self.poly
    }

    pub fn nvars(&self) -> usize {
        self.poly.nvars
    }

    pub fn restrict(&self, cap: u32) -> Self {
        let cap = cap.min(self.cap);
        Self { cap, poly: self.poly.truncate(cap) }
    }

    pub fn add(&self, o: &Self) -> Self {
        let cap = self.cap.min(o.cap);
        Self { cap, poly: (&self.poly + &o.poly).truncate(cap) }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let cap = self.cap.min(o.cap);
        Self { cap, poly: (&self.poly - &o.poly).truncate(cap) }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let cap = self.cap.min(o.cap);
        Self { cap, poly: self.poly.mul_truncated(&o.poly, cap) }
    }

    pub fn scale(&self, c: &Q) -> Self {
        Self { cap: self.cap, poly: self.poly.scale(c) }
    }

    /// ∏_j f(z_j) for a one-variable series f given by its coefficients.
    pub fn product_of_univariate(nvars: usize, f: &[Q], cap: u32) -> Self {
        let mut acc = Polynomial::one(nvars);
        for j in 0..nvars {
            acc = acc.mul_truncated(&univariate_in(nvars, j, f, cap), cap);
        }
        Self { cap, poly: acc }
    }

    /// p(g_1(z_1), ..., g_n(z_n)) for one-variable series g_j.
    pub fn compose(p: &Polynomial, g: &[Vec<Q>], cap: u32) -> Result<Self> {
        let n = p.nvars;
        if g.len() != n {
            return Err(Error::RankMismatch { expected: n, got: g.len() });
        }
        // powers[j][k] = g_j^k truncated
        let maxdeg: Vec<u32> = (0..n)
            .map(|j| p.terms.keys().map(|e| e.0[j]).max().unwrap_or(0))
            .collect();
        let mut powers: Vec<Vec<Vec<Q>>> = Vec::with_capacity(n);
        for j in 0..n {
            let mut pw = vec![univariate_one(cap)];
            for k in 1..=maxdeg[j] as usize {
                let next = univariate_mul(&pw[k - 1], &g[j], cap);
                pw.push(next);
            }
            powers.push(pw);
        }
        let mut out = Polynomial::zero(n);
        for (e, c) in &p.terms {
            let mut acc = Polynomial::constant(n, c.clone());
            for j in 0..n {
                if e.0[j] == 0 {
                    continue;
                }
                acc = acc.mul_truncated(&univariate_in(n, j, &powers[j][e.0[j] as usize], cap), cap);
            }
            out.add_scaled(&acc, &Q::one());
        }
        Ok(Self { cap, poly: out })
    }
}

fn univariate_one(cap: u32) -> Vec<Q> {
    let mut v = vec![Q::zero(); cap as usize + 1];
    v[0] = Q::one();
    v
}

fn univariate_mul(a: &[Q], b: &[Q], cap: u32) -> Vec<Q> {
    let mut out = vec![Q::zero(); cap as usize + 1];
    for (i, x) in a.iter().enumerate().take(cap as usize + 1) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(cap as usize + 1 - i) {
            out[i + j] += x * y;
        }
    }
    out
}

fn univariate_in(nvars: usize, j: usize, f: &[Q], cap: u32) -> Polynomial {
    let mut p = Polynomial::zero(nvars);
    for (k, c) in f.iter().enumerate().take(cap as usize + 1) {
        let mut e = vec![0; nvars];
        e[j] = k as u32;
        p.add_term(MultiExponent(e), c.clone());
    }
    p
}

/// Coefficients of (1−z)/(1+z) = 1 − 2z + 2z² − …
pub fn cayley_coefficients(cap: u32) -> Vec<Q> {
    (0..=cap)
        .map(|k| match k {
            0 => Q::one(),
            k if k % 2 == 1 => int(-2),
            _ => int(2),
        })
        .collect()
}

/// Coefficients of (1−z)^{−b} = Σ (b)_k/k! z^k.
pub fn inverse_power_coefficients(b: &Q, cap: u32) -> Vec<Q> {
    (0..=cap).map(|k| rising(b, k) / factorial(k)).collect()
}

/// Coefficients of z/(1−z).
pub fn shifted_geometric_coefficients(cap: u32) -> Vec<Q> {
    (0..=cap).map(|k| if k == 0 { Q::zero() } else { Q::one() }).collect()
}

/// (1−z)^{−b} · p((1−z₁)/(1+z₁), …) truncated at total degree `cap`, with
/// (1−z)^{−b} meaning ∏_j (1−z_j)^{−b}.
pub fn cayley_series(p: &Polynomial, b: &Q, cap: u32) -> TruncatedSeries {
    let n = p.nvars;
    let cay = cayley_coefficients(cap);
    let inner = TruncatedSeries::compose(p, &vec![cay; n], cap).expect("rank matches");
    if b.is_zero() {
        return inner;
    }
    let pref = TruncatedSeries::product_of_univariate(n, &inverse_power_coefficients(b, cap), cap);
    inner.mul(&pref)
}

/// Coefficient table indexed by compositions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionTable {
    r: usize,
    degree_bound: u32,
    entries: BTreeMap<Composition, Q>,
}

impl ExpansionTable {
    pub fn new(r: usize, degree_bound: u32) -> Self {
        Self { r, degree_bound, entries: BTreeMap::new() }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn degree_bound(&self) -> u32 {
        self.degree_bound
    }

    /// Adds `c` to the entry at κ.
    pub fn accumulate(&mut self, kappa: Composition, c: Q) -> Result<()> {
        if kappa.len() != self.r {
            return Err(Error::RankMismatch { expected: self.r, got: kappa.len() });
        }
        if kappa.weight() > self.degree_bound {
            return Err(Error::Input(format!(
                "key {kappa} exceeds degree bound {}",
                self.degree_bound
            )));
        }
        let slot = self.entries.entry(kappa.clone()).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.entries.remove(&kappa);
        }
        Ok(())
    }

    pub fn get(&self, kappa: &Composition) -> Q {
        self.entries.get(kappa).cloned().unwrap_or_else(Q::zero)
    }

    pub fn entries(&self) -> &BTreeMap<Composition, Q> {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries sorted by weight, then reverse lexicographically.
    pub fn graded_entries(&self) -> Vec<(&Composition, &Q)> {
        let mut v: Vec<_> = self.entries.iter().collect();
        v.sort_by(|a, b| a.0.weight().cmp(&b.0.weight()).then(b.0.cmp(a.0)));
        v
    }

    pub fn map_values<F: Fn(&Composition, &Q) -> Q>(&self, f: F) -> Self {
        let mut out = Self::new(self.r, self.degree_bound);
        for (k, v) in &self.entries {
            out.accumulate(k.clone(), f(k, v)).expect("same shape");
        }
        out
    }
}

impl Serialize for ExpansionTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let g = self.graded_entries();
        let mut m = s.serialize_map(Some(g.len()))?;
        for (k, v) in g {
            let key: Vec<String> = k.parts().iter().map(u32::to_string).collect();
            m.serialize_entry(&key.join(","), &format_rational(v))?;
        }
        m.end()
    }
}

/// A family of polynomials, one per composition, with monic leading
/// monomial x^κ and every other monomial strictly earlier in the slice order.
pub trait TriangularBasis {
    fn rank(&self) -> usize;
    fn element(&self, kappa: &Composition) -> Result<Arc<Polynomial>>;
    /// Index of κ in the chosen linear extension of its weight slice.
    fn position(&self, kappa: &Composition) -> usize;
}

/// Coefficients c_κ with p = Σ c_κ E_κ.
pub fn to_e_basis(p: &Polynomial, basis: &dyn TriangularBasis) -> Result<ExpansionTable> {
    let r = basis.rank();
    if p.nvars != r {
        return Err(Error::RankMismatch { expected: r, got: p.nvars });
    }
    let mut rest = p.clone();
    let mut table = ExpansionTable::new(r, p.degree().unwrap_or(0));
    while !rest.is_zero() {
        let lead = rest
            .terms
            .keys()
            .map(|e| {
                let c = e.to_composition();
                ((e.degree(), basis.position(&c)), c)
            })
            .max_by(|a, b| a.0.cmp(&b.0))
            .map(|(_, c)| c)
            .expect("nonzero");
        let e = basis.element(&lead)?;
        let c = rest.coeff(lead.parts());
        let lc = e.coeff(lead.parts());
        if lc != Q::one() {
            return Err(Error::Internal(format!("basis element {lead} is not monic")));
        }
        rest.add_scaled(&e, &-&c);
        if !rest.coeff(lead.parts()).is_zero() {
            return Err(Error::Internal(format!("back-substitution stalled at {lead}")));
        }
        table.accumulate(lead, c)?;
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn p2(terms: &[(&[u32], i64)]) -> Polynomial {
        Polynomial::from_terms(terms[0].0.len(), terms.iter().map(|(e, c)| (e.to_vec(), int(*c)))).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let a = p2(&[(&[1, 0], 1), (&[0, 1], 1)]);
        let b = p2(&[(&[0, 1], -1)]);
        assert_eq!(&a + &b, Polynomial::var(2, 0));
        let m = p2(&[(&[1, 2], 1)]);
        assert_eq!(m.eval(&[int(2), int(3)]).unwrap(), int(18));
        let z = Polynomial::var(2, 0).scale(&Q::zero());
        assert!(z.is_zero() && z.terms().is_empty());
        assert!(m.eval(&[int(1)]).is_err());
        assert!(Polynomial::var(1, 0).checked_add(&Polynomial::var(2, 0)).is_err());
    }

    #[test]
    fn translate_matches_evaluation() {
        let p = p2(&[(&[2, 1], 3), (&[0, 3], -1), (&[0, 0], 5)]);
        let t = p.translate(&frac(1, 2));
        for pt in [[int(0), int(1)], [frac(3, 2), int(-2)]] {
            let shifted: Vec<Q> = pt.iter().map(|x| x + frac(1, 2)).collect();
            assert_eq!(t.eval(&pt).unwrap(), p.eval(&shifted).unwrap());
        }
    }

    #[test]
    fn cayley_examples() {
        let s = cayley_series(&Polynomial::one(1), &int(2), 2);
        assert_eq!(s.poly(), &p2(&[(&[0], 1), (&[1], 2), (&[2], 3)]));
        let s = cayley_series(&Polynomial::var(1, 0), &Q::zero(), 3);
        assert_eq!(s.poly(), &p2(&[(&[0], 1), (&[1], -2), (&[2], 2), (&[3], -2)]));
    }

    #[test]
    fn cayley_two_variable_numeric() {
        // (1−z)^{−2} u₁u₂ at z = (1/10, 1/20) against exact rational evaluation
        let p = p2(&[(&[1, 1], 1)]);
        let z = [frac(1, 10), frac(1, 20)];
        let exact: Q = z
            .iter()
            .map(|zj| (Q::one() - zj) / (Q::one() + zj) / ((Q::one() - zj) * (Q::one() - zj)))
            .product();
        for cap in 2..=6u32 {
            let s = cayley_series(&p, &int(2), cap);
            let approx = s.poly().eval(&z).unwrap();
            let maxc = s.poly().terms().values().map(crate::rational::abs).max().unwrap();
            let bound = int(2) * maxc * pow(&frac(1, 10), cap + 1) * pow(&int(3), cap);
            assert!(crate::rational::abs(&(approx - &exact)) <= bound, "cap {cap}");
        }
    }

    #[test]
    fn cayley_truncation_coherence() {
        let p = p2(&[(&[2, 1], 3), (&[0, 1], -1), (&[0, 0], 2)]);
        let full = cayley_series(&p, &int(4), 5);
        for d in 0..5 {
            assert_eq!(full.restrict(d), cayley_series(&p, &int(4), d));
        }
    }
}
