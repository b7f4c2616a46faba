//! Sparse multivariate polynomials over arbitrary-precision integers, and
//! power series truncated in a single variable.
//!
//! Every generating function in this crate lives in the five variables
//! `p, q, t, u, v`. A [`Poly`] stores only nonzero coefficients, keyed by a
//! [`Monomial`] exponent vector; two polynomials are equal exactly when their
//! term maps are equal. Terms iterate in graded lexicographic order, lowest
//! first, which fixes the textual and JSON renderings.
//!
//! A [`Series`] is a polynomial together with a cap on the degree of one
//! designated "size" variable. Products of series discard everything above
//! the smaller of the two caps, so coefficients below the cap are exact.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One of the five indeterminates used across the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Var {
    P,
    Q,
    T,
    U,
    V,
}

impl Var {
    pub const ALL: [Var; 5] = [Var::P, Var::Q, Var::T, Var::U, Var::V];

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::P => "p",
            Var::Q => "q",
            Var::T => "t",
            Var::U => "u",
            Var::V => "v",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Var> {
        match s {
            "p" => Ok(Var::P),
            "q" => Ok(Var::Q),
            "t" => Ok(Var::T),
            "u" => Ok(Var::U),
            "v" => Ok(Var::V),
            other => Err(Error::Invalid {
                what: "variable",
                msg: format!("{other:?} is not one of p, q, t, u, v"),
            }),
        }
    }
}

/// Exponent vector over `(p, q, t, u, v)`. An absent variable has exponent 0.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial([u32; 5]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; 5]);

    pub fn new(exponents: [u32; 5]) -> Self {
        Monomial(exponents)
    }

    pub fn var(v: Var, exp: u32) -> Self {
        let mut e = [0; 5];
        e[v.index()] = exp;
        Monomial(e)
    }

    /// Builds a monomial from `(variable, exponent)` pairs; repeated
    /// variables accumulate.
    pub fn from_pairs(pairs: &[(Var, u32)]) -> Self {
        let mut e = [0; 5];
        for &(v, x) in pairs {
            e[v.index()] += x;
        }
        Monomial(e)
    }

    #[inline]
    pub fn exp(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    pub fn exponents(&self) -> [u32; 5] {
        self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; 5]
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a += b;
        }
        Monomial(e)
    }

    pub fn pow(&self, n: u32) -> Monomial {
        Monomial(self.0.map(|e| e * n))
    }

    /// Drops `v` from the monomial (substitution `v = 1`).
    pub fn without(&self, v: Var) -> Monomial {
        let mut e = self.0;
        e[v.index()] = 0;
        Monomial(e)
    }

    fn set(&mut self, v: Var, exp: u32) {
        self.0[v.index()] = exp;
    }

    /// Nonzero `(variable, exponent)` pairs in variable order.
    pub fn pairs(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        Var::ALL
            .iter()
            .copied()
            .filter(|v| self.exp(*v) > 0)
            .map(|v| (v, self.exp(v)))
    }
}

// graded lexicographic: total degree first, then exponent vectors with p
// most significant.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (v, e) in self.pairs() {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial in `p, q, t, u, v` with big-integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Poly::monomial(Monomial::ONE, c)
    }

    pub fn monomial(m: Monomial, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    /// `v^exp`
    pub fn var_pow(v: Var, exp: u32) -> Self {
        Poly::monomial(Monomial::var(v, exp), 1)
    }

    /// `v`
    pub fn var(v: Var) -> Self {
        Poly::var_pow(v, 1)
    }

    /// Univariate polynomial `Σ coeffs[i]·v^i`.
    pub fn univariate<C: Into<BigInt> + Clone>(v: Var, coeffs: &[C]) -> Self {
        Poly::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::var(v, i as u32), c.clone().into())),
        )
    }

    /// Sums the given terms, merging repeated monomials.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigInt)>,
    {
        let mut p = Poly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::ONE).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in graded lexicographic order, lowest first.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Highest exponent of `v` in any term; `None` for the zero polynomial.
    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|m| m.exp(v)).max()
    }

    /// Variables with a positive exponent somewhere in the polynomial.
    pub fn vars(&self) -> Vec<Var> {
        Var::ALL
            .iter()
            .copied()
            .filter(|v| self.terms.keys().any(|m| m.exp(*v) > 0))
            .collect()
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes `v = 1`.
    pub fn eval_at_one(&self, v: Var) -> Poly {
        Poly::from_terms(self.terms.iter().map(|(m, c)| (m.without(v), c.clone())))
    }

    /// Substitutes `v = 1` for every variable.
    pub fn eval_all_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Substitutes an integer value for `v`.
    pub fn specialize(&self, v: Var, value: i64) -> Poly {
        let value = BigInt::from(value);
        Poly::from_terms(self.terms.iter().map(|(m, c)| {
            (
                m.without(v),
                c * num_traits::pow(value.clone(), m.exp(v) as usize),
            )
        }))
    }

    /// Renames `from` to `to`. If `to` already occurs, exponents add up, so
    /// the map is the substitution `from -> to`.
    pub fn rename(&self, from: Var, to: Var) -> Poly {
        if from == to {
            return self.clone();
        }
        Poly::from_terms(self.terms.iter().map(|(m, c)| {
            let mut k = m.without(from);
            k.set(to, m.exp(to) + m.exp(from));
            (k, c.clone())
        }))
    }

    /// Drops every term whose `v`-exponent exceeds `cap`.
    pub fn truncate(&self, v: Var, cap: u32) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exp(v) <= cap)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Product with every term above `cap` in `v` discarded.
    pub fn mul_truncated(&self, other: &Poly, v: Var, cap: u32) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            let ea = ma.exp(v);
            if ea > cap {
                continue;
            }
            for (mb, cb) in &other.terms {
                if ea + mb.exp(v) <= cap {
                    out.add_term(ma.mul(mb), ca * cb);
                }
            }
        }
        out
    }

    /// Coefficient of `v^e`, as a polynomial in the remaining variables.
    pub fn coeff_of_power(&self, v: Var, e: u32) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exp(v) == e)
                .map(|(m, c)| (m.without(v), c.clone()))
                .collect(),
        }
    }

    /// Exact division, treating both sides as polynomials in `v` whose
    /// coefficients are polynomials in the other variables. The divisor
    /// must involve `v` only, and every step must divide over the integers.
    pub fn div_exact(&self, divisor: &Poly, v: Var) -> Result<Poly> {
        if divisor.is_zero() {
            return Err(Error::InexactDivision);
        }
        if divisor.terms.keys().any(|m| m.without(v) != Monomial::ONE) {
            return Err(Error::Invalid {
                what: "divisor",
                msg: format!("must be univariate in {v}"),
            });
        }
        let d_deg = divisor.degree_in(v).unwrap_or(0);
        let lead = divisor.coeff(&Monomial::var(v, d_deg));
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some(r_deg) = rem.degree_in(v) {
            if r_deg < d_deg {
                return Err(Error::InexactDivision);
            }
            let shift = r_deg - d_deg;
            let mut step = Poly::zero();
            for (m, c) in rem.terms.iter().filter(|(m, _)| m.exp(v) == r_deg) {
                if !(c % &lead).is_zero() {
                    return Err(Error::InexactDivision);
                }
                let mut k = *m;
                k.set(v, shift);
                step.add_term(k, c / &lead);
            }
            rem = &rem - &(&step * divisor);
            quot += &step;
        }
        Ok(quot)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.json_terms()).expect("plain data serializes")
    }

    /// Compact JSON text with keys in the order `exponents, coefficient`.
    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.json_terms()).expect("plain data serializes")
    }

    pub fn json_terms(&self) -> Vec<JsonTerm> {
        self.terms
            .iter()
            .map(|(m, c)| JsonTerm {
                exponents: m.pairs().collect(),
                coefficient: c.to_string(),
            })
            .collect()
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Poly> {
        let terms: Vec<JsonTerm> =
            serde_json::from_value(value.clone()).map_err(|e| Error::Invalid {
                what: "polynomial JSON",
                msg: e.to_string(),
            })?;
        let mut p = Poly::zero();
        for t in terms {
            let c: BigInt = t.coefficient.parse().map_err(|_| Error::Invalid {
                what: "polynomial JSON",
                msg: format!("bad coefficient {:?}", t.coefficient),
            })?;
            let pairs: Vec<(Var, u32)> = t.exponents.into_iter().collect();
            p.add_term(Monomial::from_pairs(&pairs), c);
        }
        Ok(p)
    }
}

/// JSON form of one term: `{"exponents": {"p": 1, "q": 2}, "coefficient": "3"}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct JsonTerm {
    pub exponents: BTreeMap<Var, u32>,
    pub coefficient: String,
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs} {m}")?;
            }
        }
        Ok(())
    }
}

impl From<i64> for Poly {
    fn from(c: i64) -> Poly {
        Poly::constant(c)
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<Poly> for &'a Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl AddAssign<Poly> for Poly {
    fn add_assign(&mut self, rhs: Poly) {
        if self.is_zero() {
            *self = rhs;
            return;
        }
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c);
        }
    }
}

impl std::iter::Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::zero(), |mut acc, p| {
            acc += p;
            acc
        })
    }
}

impl<'a> std::iter::Sum<&'a Poly> for Poly {
    fn sum<I: Iterator<Item = &'a Poly>>(iter: I) -> Poly {
        iter.fold(Poly::zero(), |mut acc, p| {
            acc += p;
            acc
        })
    }
}

/// A polynomial known exactly up to degree `cap` in `cap_var`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    body: Poly,
    cap_var: Var,
    cap: u32,
}

impl Series {
    /// Truncates `body` at `cap` in `cap_var`.
    pub fn new(body: Poly, cap_var: Var, cap: u32) -> Self {
        Series {
            body: body.truncate(cap_var, cap),
            cap_var,
            cap,
        }
    }

    pub fn one(cap_var: Var, cap: u32) -> Self {
        Series::new(Poly::one(), cap_var, cap)
    }

    pub fn zero(cap_var: Var, cap: u32) -> Self {
        Series::new(Poly::zero(), cap_var, cap)
    }

    pub fn body(&self) -> &Poly {
        &self.body
    }

    pub fn into_body(self) -> Poly {
        self.body
    }

    pub fn cap_var(&self) -> Var {
        self.cap_var
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.body.coeff(m)
    }

    fn check_var(&self, other: &Series) -> Result<()> {
        if self.cap_var != other.cap_var {
            return Err(Error::CapVarMismatch {
                left: self.cap_var,
                right: other.cap_var,
            });
        }
        Ok(())
    }

    pub fn mul(&self, other: &Series) -> Result<Series> {
        self.check_var(other)?;
        let cap = self.cap.min(other.cap);
        Ok(Series {
            body: self.body.mul_truncated(&other.body, self.cap_var, cap),
            cap_var: self.cap_var,
            cap,
        })
    }

    pub fn add(&self, other: &Series) -> Result<Series> {
        self.check_var(other)?;
        let cap = self.cap.min(other.cap);
        Ok(Series::new(&self.body + &other.body, self.cap_var, cap))
    }

    pub fn sub(&self, other: &Series) -> Result<Series> {
        self.check_var(other)?;
        let cap = self.cap.min(other.cap);
        Ok(Series::new(&self.body - &other.body, self.cap_var, cap))
    }

    /// Multiplies by an exact polynomial, keeping this series' cap.
    pub fn mul_poly(&self, p: &Poly) -> Series {
        Series {
            body: self.body.mul_truncated(p, self.cap_var, self.cap),
            cap_var: self.cap_var,
            cap: self.cap,
        }
    }

    /// Lowers the cap.
    pub fn truncate(&self, cap: u32) -> Series {
        Series::new(self.body.clone(), self.cap_var, cap.min(self.cap))
    }

    /// Applies a variable renaming to the body. Renaming the cap variable
    /// moves the cap with it.
    pub fn rename(&self, from: Var, to: Var) -> Series {
        let cap_var = if self.cap_var == from {
            to
        } else {
            self.cap_var
        };
        Series::new(self.body.rename(from, to), cap_var, self.cap)
    }

    pub fn eval_at_one(&self, v: Var) -> Series {
        assert_ne!(v, self.cap_var, "cannot specialize the truncation variable");
        Series {
            body: self.body.eval_at_one(v),
            cap_var: self.cap_var,
            cap: self.cap,
        }
    }

    /// `1/(1 - m) = Σ_{j≥0} m^j`, truncated at `cap` in `cap_var`.
    pub fn geom_inverse(m: &Monomial, cap_var: Var, cap: u32) -> Result<Series> {
        let step = m.exp(cap_var);
        if step == 0 {
            return Err(Error::NonConvergent(cap_var));
        }
        let terms = (0..=cap / step).map(|j| (m.pow(j), BigInt::one()));
        Ok(Series {
            body: Poly::from_terms(terms),
            cap_var,
            cap,
        })
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O({}^{})", self.body, self.cap_var, self.cap + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Var::*;

    fn m(pairs: &[(Var, u32)]) -> Monomial {
        Monomial::from_pairs(pairs)
    }

    fn pq(a: u32, b: u32) -> Monomial {
        m(&[(P, a), (Q, b)])
    }

    #[test]
    fn add_cancels() {
        let a = Poly::one() + Poly::monomial(pq(1, 1), 1);
        let b = Poly::constant(-1);
        assert_eq!(a + b, Poly::monomial(pq(1, 1), 1));
        let x = Poly::univariate(Q, &[3, 0, -2]);
        assert_eq!(Poly::zero() + &x, x);
    }

    #[test]
    fn add_coefficientwise() {
        let a = Poly::from_terms([(pq(1, 1), 1.into()), (pq(2, 1), 1.into())]);
        let sum = &a + &a;
        assert_eq!(sum.coeff(&pq(1, 1)), 2.into());
        assert_eq!(sum.coeff(&pq(2, 1)), 2.into());
        assert_eq!(sum.len(), 2);
    }

    #[test]
    fn mul_examples() {
        let a = Poly::univariate(Q, &[1, 1]);
        let b = Poly::univariate(Q, &[1, -1]);
        assert_eq!(&a * &b, Poly::univariate(Q, &[1, 0, -1]));
        assert_eq!(&a * &Poly::one(), a);
        let c = Poly::one() + Poly::monomial(pq(1, 1), 1);
        let sq = &c * &c;
        assert_eq!(
            sq,
            Poly::from_terms([
                (Monomial::ONE, 1.into()),
                (pq(1, 1), 2.into()),
                (pq(2, 2), 1.into())
            ])
        );
    }

    #[test]
    fn series_mul_truncates() {
        let a = Series::new(Poly::univariate(P, &[1, 1, 1]), P, 2);
        let b = Series::new(Poly::univariate(P, &[1, 1]), P, 2);
        let c = a.mul(&b).unwrap();
        assert_eq!(c.body(), &Poly::univariate(P, &[1, 2, 2]));
        assert_eq!(a.mul(&Series::one(P, 2)).unwrap(), a);
        let x = Series::new(Poly::var(P), P, 1);
        assert!(x.mul(&x).unwrap().body().is_zero());
    }

    #[test]
    fn series_cap_is_min() {
        let a = Series::new(Poly::univariate(P, &[1, 1, 1, 1]), P, 3);
        let b = Series::one(P, 1);
        let c = a.mul(&b).unwrap();
        assert_eq!(c.cap(), 1);
        assert_eq!(c.body(), &Poly::univariate(P, &[1, 1]));
    }

    #[test]
    fn series_var_mismatch() {
        let a = Series::one(P, 3);
        let b = Series::one(Q, 3);
        assert_eq!(a.mul(&b), Err(Error::CapVarMismatch { left: P, right: Q }));
    }

    #[test]
    fn geom_inverse_examples() {
        let s = Series::geom_inverse(&Monomial::var(P, 1), P, 3).unwrap();
        assert_eq!(s.body(), &Poly::univariate(P, &[1, 1, 1, 1]));
        let s = Series::geom_inverse(&Monomial::var(P, 2), P, 3).unwrap();
        assert_eq!(s.body(), &Poly::univariate(P, &[1, 0, 1]));

        // oracle: (1 + pq + p^2q^2 + ...) built by repeated multiplication
        let x = Series::new(Poly::monomial(pq(1, 1), 1), P, 2);
        let mut oracle = Series::one(P, 2);
        let mut power = Series::one(P, 2);
        for _ in 0..4 {
            power = power.mul(&x).unwrap();
            oracle = oracle.add(&power).unwrap();
        }
        let s = Series::geom_inverse(&pq(1, 1), P, 2).unwrap();
        assert_eq!(s, oracle);
        assert_eq!(
            Series::geom_inverse(&Monomial::var(Q, 1), P, 2),
            Err(Error::NonConvergent(P))
        );
    }

    #[test]
    fn coeff_and_eval() {
        let a = Poly::one() + Poly::monomial(pq(1, 1), 1);
        assert_eq!(a.coeff(&pq(1, 1)), 1.into());
        assert_eq!(a.coeff(&pq(1, 0)), 0.into());
        assert_eq!(a.eval_at_one(P), Poly::univariate(Q, &[1, 1]));
    }

    #[test]
    fn exact_division() {
        let n = Poly::univariate(Q, &[1, 0, 0, -1]);
        let d = Poly::univariate(Q, &[1, -1]);
        assert_eq!(n.div_exact(&d, Q).unwrap(), Poly::univariate(Q, &[1, 1, 1]));
        let bad = Poly::univariate(Q, &[1, 0, 1]);
        assert_eq!(bad.div_exact(&d, Q), Err(Error::InexactDivision));
        // coefficients may carry other variables
        let mixed = &Poly::univariate(T, &[0, 2, 1]) * &d;
        assert_eq!(
            mixed.div_exact(&d, Q).unwrap(),
            Poly::univariate(T, &[0, 2, 1])
        );
    }

    #[test]
    fn display_is_graded_lex() {
        let a = Poly::one() + Poly::monomial(pq(1, 1), 1);
        assert_eq!(a.to_string(), "1 + p q");
        let b = Poly::univariate(Q, &[1, 0, -1]);
        assert_eq!(b.to_string(), "1 - q^2");
        let c = Poly::from_terms([(pq(2, 1), 3.into()), (pq(1, 2), (-1).into())]);
        assert_eq!(c.to_string(), "-p q^2 + 3 p^2 q");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    #[test]
    fn json_shape() {
        let a = Poly::one() + Poly::monomial(pq(1, 1), 1);
        let j = a.to_json();
        assert_eq!(
            a.to_json_string(),
            r#"[{"exponents":{},"coefficient":"1"},{"exponents":{"p":1,"q":1},"coefficient":"1"}]"#
        );
        assert_eq!(Poly::from_json(&j).unwrap(), a);
    }

    #[test]
    fn rename_and_specialize() {
        let a = Poly::univariate(Q, &[1, 2, 3]);
        assert_eq!(a.rename(Q, P), Poly::univariate(P, &[1, 2, 3]));
        assert_eq!(a.specialize(Q, -1), Poly::constant(2));
    }
}
