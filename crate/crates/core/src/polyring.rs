//! Exact arithmetic on polynomials in `(t, u, v)` and on truncated power
//! series in `z` whose coefficients are such polynomials.
//!
//! `t` tracks cohomological degree, `u` and `v` the two Hodge weights. All
//! coefficients are arbitrary-precision integers; rational prefactors are
//! carried in [`RatScalar`] and only applied at the end of a sum, through
//! [`TriPoly::apply_rational`], which refuses to produce a fraction.

use std::collections::BTreeMap;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational prefactor, always kept in lowest terms with a positive
/// denominator.
pub type RatScalar = BigRational;

/// `t^k u^p v^q`. Ordered lexicographically on `(k, p, q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    pub k: u32,
    pub p: u32,
    pub q: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { k: 0, p: 0, q: 0 };

    pub const fn new(k: u32, p: u32, q: u32) -> Self {
        Monomial { k, p, q }
    }

    pub fn is_one(&self) -> bool {
        *self == Self::ONE
    }

    pub fn scaled(&self, j: u32) -> Self {
        Monomial::new(self.k * j, self.p * j, self.q * j)
    }
}

impl Mul for Monomial {
    type Output = Monomial;

    fn mul(self, rhs: Monomial) -> Monomial {
        Monomial::new(self.k + rhs.k, self.p + rhs.p, self.q + rhs.q)
    }
}

/// Sparse polynomial in `t, u, v` with integer coefficients. Zero
/// coefficients are never stored, so derived equality is exact equality.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct TriPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

/// Partial evaluation: `None` keeps the variable, `Some(x)` substitutes `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Specialization {
    pub t: Option<i64>,
    pub u: Option<i64>,
    pub v: Option<i64>,
}

impl Specialization {
    /// `u = v = 1`: the Poincaré polynomial.
    pub const POINCARE: Specialization = Specialization {
        t: None,
        u: Some(1),
        v: Some(1),
    };

    /// `t = -1`: the E-polynomial.
    pub const E_POLY: Specialization = Specialization {
        t: Some(-1),
        u: None,
        v: None,
    };
}

impl TriPoly {
    pub fn zero() -> Self {
        TriPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn term(m: Monomial, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        TriPoly { terms }
    }

    /// `1 + c·m`.
    pub fn one_plus(m: Monomial, c: impl Into<BigInt>) -> Self {
        Self::one() + Self::term(m, c)
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, C)>,
        C: Into<BigInt>,
    {
        let mut out = TriPoly::zero();
        for (m, c) in terms {
            out.add_term(m, c.into());
        }
        out
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
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
        self.terms.len() == 1 && self.coeff(&Monomial::ONE).is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending `(k, p, q)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(&Monomial::ONE)
    }

    pub fn t_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.k).max()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn pow(&self, e: u32) -> TriPoly {
        let mut result = TriPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn scale(&self, c: &BigInt) -> TriPoly {
        if c.is_zero() {
            return TriPoly::zero();
        }
        TriPoly {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    /// Multiplies every monomial by `m`.
    pub fn shift(&self, m: Monomial) -> TriPoly {
        TriPoly {
            terms: self.terms.iter().map(|(a, c)| (*a * m, c.clone())).collect(),
        }
    }

    /// Divides every coefficient by `d`, failing if any remainder is nonzero.
    pub fn div_exact(&self, d: &BigInt) -> Result<TriPoly> {
        if d.is_zero() {
            return Err(Error::InvalidArgument("division by zero".into()));
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let (quot, rem) = c.div_rem(d);
            if !rem.is_zero() {
                return Err(Error::NonIntegral {
                    context: format!("coefficient {c} of {} is not divisible by {d}", display_monomial(m)),
                });
            }
            terms.insert(*m, quot);
        }
        Ok(TriPoly { terms })
    }

    /// Multiplies by an exact rational, requiring an integral result.
    pub fn apply_rational(&self, r: &RatScalar) -> Result<TriPoly> {
        self.scale(r.numer()).div_exact(r.denom())
    }

    /// `t -> -(-t)^j, u -> u^j, v -> v^j`.
    ///
    /// The term `t^k u^p v^q` picks up the sign `(-1)^{(j+1)k}`.
    pub fn substitute_power(&self, j: u32) -> TriPoly {
        assert!(j >= 1, "substitution power must be positive");
        TriPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let negate = (j + 1) % 2 == 1 && m.k % 2 == 1;
                    (m.scaled(j), if negate { -c } else { c.clone() })
                })
                .collect(),
        }
    }

    pub fn specialize(&self, s: Specialization) -> TriPoly {
        fn eval(val: Option<i64>, e: u32, c: &mut BigInt) -> u32 {
            match val {
                None => e,
                Some(x) => {
                    *c *= num_traits::pow(BigInt::from(x), e as usize);
                    0
                }
            }
        }
        let mut out = TriPoly::zero();
        for (m, c) in &self.terms {
            let mut c = c.clone();
            let k = eval(s.t, m.k, &mut c);
            let p = eval(s.u, m.p, &mut c);
            let q = eval(s.v, m.q, &mut c);
            out.add_term(Monomial::new(k, p, q), c);
        }
        out
    }

    /// Unicode rendering, e.g. `1 + 2·t²·u·v`.
    pub fn pretty(&self) -> String {
        render(self, true)
    }
}

fn superscript(n: u32) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string()
        .chars()
        .map(|c| DIGITS[c.to_digit(10).unwrap() as usize])
        .collect()
}

fn monomial_factors(m: &Monomial, pretty: bool) -> Vec<String> {
    [("t", m.k), ("u", m.p), ("v", m.q)]
        .into_iter()
        .filter(|(_, e)| *e > 0)
        .map(|(x, e)| match (e, pretty) {
            (1, _) => x.to_string(),
            (_, true) => format!("{x}{}", superscript(e)),
            (_, false) => format!("{x}^{e}"),
        })
        .collect()
}

fn display_monomial(m: &Monomial) -> String {
    if m.is_one() {
        "1".into()
    } else {
        monomial_factors(m, false).join("*")
    }
}

fn render(poly: &TriPoly, pretty: bool) -> String {
    if poly.is_zero() {
        return "0".into();
    }
    let sep = if pretty { "·" } else { "*" };
    let mut out = String::new();
    for (i, (m, c)) in poly.terms.iter().enumerate() {
        let neg = c.is_negative();
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let abs = c.abs();
        let mut factors = monomial_factors(m, pretty);
        if factors.is_empty() || !abs.is_one() {
            factors.insert(0, abs.to_string());
        }
        out.push_str(&factors.join(sep));
    }
    out
}

/// Canonical text form: `c*t^k*u^p*v^q` terms in ascending `(k, p, q)`.
impl fmt::Display for TriPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self, false))
    }
}

impl Add<&TriPoly> for &TriPoly {
    type Output = TriPoly;

    fn add(self, rhs: &TriPoly) -> TriPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for TriPoly {
    type Output = TriPoly;

    fn add(mut self, rhs: TriPoly) -> TriPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&TriPoly> for TriPoly {
    fn add_assign(&mut self, rhs: &TriPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl Neg for &TriPoly {
    type Output = TriPoly;

    fn neg(self) -> TriPoly {
        TriPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for TriPoly {
    type Output = TriPoly;

    fn neg(self) -> TriPoly {
        -&self
    }
}

impl Sub<&TriPoly> for &TriPoly {
    type Output = TriPoly;

    fn sub(self, rhs: &TriPoly) -> TriPoly {
        self + &(-rhs)
    }
}

impl Sub for TriPoly {
    type Output = TriPoly;

    fn sub(self, rhs: TriPoly) -> TriPoly {
        &self - &rhs
    }
}

impl Mul<&TriPoly> for &TriPoly {
    type Output = TriPoly;

    fn mul(self, rhs: &TriPoly) -> TriPoly {
        let mut out = TriPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(*ma * *mb, ca * cb);
            }
        }
        out
    }
}

impl Mul for TriPoly {
    type Output = TriPoly;

    fn mul(self, rhs: TriPoly) -> TriPoly {
        &self * &rhs
    }
}

impl Sum for TriPoly {
    fn sum<I: Iterator<Item = TriPoly>>(iter: I) -> TriPoly {
        iter.fold(TriPoly::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a TriPoly> for TriPoly {
    fn sum<I: Iterator<Item = &'a TriPoly>>(iter: I) -> TriPoly {
        iter.fold(TriPoly::zero(), |mut acc, x| {
            acc += x;
            acc
        })
    }
}

impl From<i64> for TriPoly {
    fn from(c: i64) -> Self {
        TriPoly::constant(c)
    }
}

#[derive(Serialize, Deserialize)]
struct TermRecord {
    k: u32,
    p: u32,
    q: u32,
    c: String,
}

impl Serialize for TriPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let records: Vec<TermRecord> = self
            .terms
            .iter()
            .map(|(m, c)| TermRecord {
                k: m.k,
                p: m.p,
                q: m.q,
                c: c.to_string(),
            })
            .collect();
        records.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TriPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let records = Vec::<TermRecord>::deserialize(deserializer)?;
        let mut out = TriPoly::zero();
        for r in records {
            let c: BigInt = r
                .c
                .parse()
                .map_err(|_| serde::de::Error::custom(format!("bad coefficient {:?}", r.c)))?;
            out.add_term(Monomial::new(r.k, r.p, r.q), c);
        }
        Ok(out)
    }
}

/// Power series in `z` truncated modulo `z^{order+1}`, with [`TriPoly`]
/// coefficients. The order is fixed at construction; combining series of
/// different orders is an error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZSeries {
    coeffs: Vec<TriPoly>,
}

impl ZSeries {
    pub fn zero(order: usize) -> Self {
        ZSeries {
            coeffs: vec![TriPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = TriPoly::one();
        s
    }

    /// Builds a series from its leading coefficients, padding with zeros and
    /// dropping anything past `order`.
    pub fn from_coeffs(order: usize, coeffs: impl IntoIterator<Item = TriPoly>) -> Self {
        let mut s = Self::zero(order);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c;
        }
        s
    }

    /// `1 + a·z`.
    pub fn linear(order: usize, a: TriPoly) -> Self {
        Self::from_coeffs(order, [TriPoly::one(), a])
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[TriPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Result<&TriPoly> {
        self.coeffs.get(n).ok_or(Error::IndexOutOfRange {
            index: n,
            order: self.order(),
        })
    }

    fn check_order(&self, other: &ZSeries) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &ZSeries) -> Result<ZSeries> {
        self.check_order(other)?;
        Ok(ZSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &ZSeries) -> Result<ZSeries> {
        self.check_order(other)?;
        Ok(ZSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    /// Cauchy product, truncated.
    pub fn mul(&self, other: &ZSeries) -> Result<ZSeries> {
        self.check_order(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &ZSeries) -> ZSeries {
        let order = self.order();
        let mut out = ZSeries::zero(order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += &(a * b);
                }
            }
        }
        out
    }

    /// Inverse in the truncated ring. Only series with constant coefficient
    /// exactly `1` are accepted.
    pub fn inverse(&self) -> Result<ZSeries> {
        if !self.coeffs[0].is_one() {
            return Err(Error::NonUnitConstant(self.coeffs[0].to_string()));
        }
        let order = self.order();
        let mut inv = ZSeries::zero(order);
        inv.coeffs[0] = TriPoly::one();
        for n in 1..=order {
            let mut acc = TriPoly::zero();
            for i in 1..=n {
                if !self.coeffs[i].is_zero() && !inv.coeffs[n - i].is_zero() {
                    acc += &(&self.coeffs[i] * &inv.coeffs[n - i]);
                }
            }
            inv.coeffs[n] = -acc;
        }
        Ok(inv)
    }

    /// `self^e` modulo `z^{order+1}`. Negative exponents go through
    /// [`ZSeries::inverse`] and therefore need a unit constant term.
    pub fn int_pow(&self, e: i64) -> Result<ZSeries> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut result = ZSeries::one(self.order());
        let mut base = base;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        Ok(result)
    }

    pub fn specialize(&self, s: Specialization) -> ZSeries {
        ZSeries {
            coeffs: self.coeffs.iter().map(|c| c.specialize(s)).collect(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(TriPoly::is_zero)
    }
}

impl fmt::Display for ZSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, c) in self.coeffs.iter().enumerate() {
            if n > 0 {
                writeln!(f)?;
            }
            write!(f, "z^{n}: {c}")?;
        }
        Ok(())
    }
}
