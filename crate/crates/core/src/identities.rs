//! Truncation-level checks of generating-function identities for symmetric
//! products of linear algebraic groups.
//!
//! Each checker assembles the left-hand side from determinant averages over
//! `S_n` (one `z^n` coefficient at a time) and the right-hand side as a finite
//! product of binomial series, then compares coefficientwise.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hodgecore::{hodge_table, Preset};
use crate::polyring::{Monomial, Specialization, TriPoly, ZSeries};
use crate::symgroup::Sign;
use crate::symprod::{det_average, sym_mhp_det, sym_poincare};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub lhs: ZSeries,
    pub rhs: ZSeries,
    pub equal: bool,
    /// Lowest power of `z` where the sides differ, and `lhs - rhs` there.
    pub first_discrepancy: Option<(usize, TriPoly)>,
}

impl IdentityReport {
    pub fn compare(lhs: ZSeries, rhs: ZSeries) -> Result<Self> {
        let diff = lhs.sub(&rhs)?;
        let first_discrepancy = diff
            .coeffs()
            .iter()
            .enumerate()
            .find(|(_, c)| !c.is_zero())
            .map(|(n, c)| (n, c.clone()));
        Ok(IdentityReport {
            equal: first_discrepancy.is_none(),
            lhs,
            rhs,
            first_discrepancy,
        })
    }

    /// `PASS` or `FAIL at z^n: lhs - rhs = …`.
    pub fn summary(&self) -> String {
        match &self.first_discrepancy {
            None => "PASS".into(),
            Some((n, d)) => format!("FAIL at z^{n}: lhs - rhs = {d}"),
        }
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Discrepancy<'a> {
            n: usize,
            difference: &'a TriPoly,
        }
        #[derive(Serialize)]
        struct Doc<'a> {
            equal: bool,
            order: usize,
            lhs: &'a [TriPoly],
            rhs: &'a [TriPoly],
            first_discrepancy: Option<Discrepancy<'a>>,
        }
        let doc = Doc {
            equal: self.equal,
            order: self.lhs.order(),
            lhs: self.lhs.coeffs(),
            rhs: self.rhs.coeffs(),
            first_discrepancy: self
                .first_discrepancy
                .as_ref()
                .map(|(n, d)| Discrepancy { n: *n, difference: d }),
        };
        serde_json::to_string(&doc).expect("report serializes")
    }
}

/// Coefficients of `∏ (1 + t^d)` over the multiset `degrees`, up to the total.
fn odd_subset_counts(degrees: &[u32]) -> Vec<u64> {
    let total: u32 = degrees.iter().sum();
    let mut counts = vec![0u64; total as usize + 1];
    counts[0] = 1;
    let mut reach = 0usize;
    for &d in degrees {
        let d = d as usize;
        for k in (d..=reach + d).rev() {
            counts[k] += counts[k - d];
        }
        reach += d;
    }
    counts
}

/// Number of partitions of `k` into distinct odd parts, each at most
/// `2m - 1`; equivalently the `t^k` coefficient of `∏_{i≤m} (1 + t^{2i-1})`.
pub fn p_odd(m: u32, k: u32) -> u64 {
    let degrees: Vec<u32> = (1..=m).map(|i| 2 * i - 1).collect();
    odd_subset_counts(&degrees).get(k as usize).copied().unwrap_or(0)
}

/// Number of sub-multisets (by position) of `degrees` summing to `k`.
pub fn subset_count(degrees: &[u32], k: u32) -> Result<u64> {
    if let Some(&d) = degrees.iter().find(|&&d| d % 2 == 0) {
        return Err(Error::EvenDegree(d));
    }
    Ok(odd_subset_counts(degrees).get(k as usize).copied().unwrap_or(0))
}

/// The multiset with `r_i` copies of `2i - 1`.
fn lag_degrees(r: &[u32]) -> Vec<u32> {
    r.iter()
        .enumerate()
        .flat_map(|(i, &ri)| std::iter::repeat_n(2 * i as u32 + 1, ri as usize))
        .collect()
}

/// `∏_k (1 - c_k t^k z)^{e_k}` for `(k, c_k, e_k)` triples.
pub fn binomial_product(order: usize, factors: &[(Monomial, i64, i64)]) -> Result<ZSeries> {
    let mut acc = ZSeries::one(order);
    for &(m, c, e) in factors {
        if e == 0 {
            continue;
        }
        let base = ZSeries::linear(order, TriPoly::term(m, -c));
        acc = acc.mul(&base.int_pow(e)?)?;
    }
    Ok(acc)
}

/// Right-hand side factors `(1 - (-1)^k t^k z)^{(-1)^{k+1} b_k}` of the Betti
/// identity, from Betti numbers `b_0, b_1, …`.
pub fn betti_factors(betti: &[u64]) -> Vec<(Monomial, i64, i64)> {
    betti
        .iter()
        .enumerate()
        .map(|(k, &b)| {
            let odd = k % 2 == 1;
            let sign = if odd { -1 } else { 1 };
            (Monomial::new(k as u32, 0, 0), sign, -sign * b as i64)
        })
        .collect()
}

/// Right-hand side factors `(1 - t^k z)^{(-1)^{k+1} p_odd(m, k)}`.
pub fn combgl_factors(m: u32) -> Vec<(Monomial, i64, i64)> {
    (0..=m * m)
        .map(|k| {
            let e = p_odd(m, k) as i64;
            (Monomial::new(k, 0, 0), 1, if k % 2 == 1 { e } else { -e })
        })
        .collect()
}

fn lhs_series(order: usize, coeff: impl Fn(usize) -> Result<TriPoly>) -> Result<ZSeries> {
    let coeffs = (0..=order).map(coeff).collect::<Result<Vec<_>>>()?;
    Ok(ZSeries::from_coeffs(order, coeffs))
}

/// `Σ_n z^n/n! Σ_σ ∏_i det(I + t^{2i-1} M_σ)^{r_i} = ∏_k (1 - (-1)^k t^k z)^{(-1)^{k+1} b_k}`.
pub fn check_betti_identity(r: &[u32], order: usize) -> Result<IdentityReport> {
    let pres = Preset::Lag { r: r.to_vec() }.presentation()?;
    let lhs = lhs_series(order, |n| sym_poincare(&pres, n))?;
    let degrees = lag_degrees(r);
    let top: u32 = degrees.iter().sum();
    let betti = (0..=top).map(|k| subset_count(&degrees, k)).collect::<Result<Vec<_>>>()?;
    let rhs = binomial_product(order, &betti_factors(&betti))?;
    IdentityReport::compare(lhs, rhs)
}

/// `Σ_n z^n/n! Σ_σ ∏_{i≤m} det(I - t^{2i-1} M_σ) = ∏_k (1 - t^k z)^{(-1)^{k+1} p_odd(m,k)}`.
pub fn check_combgl(m: u32, order: usize) -> Result<IdentityReport> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be positive".into()));
    }
    let factors: Vec<(Monomial, u32)> = (1..=m).map(|i| (Monomial::new(2 * i - 1, 0, 0), 1)).collect();
    let lhs = lhs_series(order, |n| det_average(&factors, Sign::Minus, n, &format!("combgl z^{n}")))?;
    let rhs = binomial_product(order, &combgl_factors(m))?;
    IdentityReport::compare(lhs, rhs)
}

/// The two-variable identity in `(t, x)` for weights `(i, i)`. The variable
/// `x` is carried by `u`, with `v = 1`.
pub fn check_cheahfls(r: &[u32], order: usize) -> Result<IdentityReport> {
    let pres = Preset::Lag { r: r.to_vec() }.presentation()?;
    let to_x = Specialization {
        t: None,
        u: None,
        v: Some(1),
    };
    let lhs = lhs_series(order, |n| Ok(sym_mhp_det(&pres, n)?.poly.specialize(to_x)))?;
    let factors = hodge_table(&pres)
        .entries()
        .map(|(m, h)| {
            if m.p != m.q {
                return Err(Error::InvalidArgument(format!("weights ({}, {}) are not diagonal", m.p, m.q)));
            }
            let odd = m.k % 2 == 1;
            let sign = if odd { -1 } else { 1 };
            Ok((Monomial::new(m.k, m.p, 0), sign, -sign * h as i64))
        })
        .collect::<Result<Vec<_>>>()?;
    let rhs = binomial_product(order, &factors)?;
    IdentityReport::compare(lhs, rhs)
}
