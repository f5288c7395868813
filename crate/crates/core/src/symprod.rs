//! Mixed Hodge polynomials of symmetric products `Sym^n X`.
//!
//! Three evaluators compute the same polynomial along independent routes:
//!
//! * [`sym_mhp_det`] averages `∏_i det(I + t^{d_i} u^{p_i} v^{q_i} M_σ)^{r_i}`
//!   over `S_n`, one generator family at a time. It never expands `μ_X`.
//! * [`sym_mhp_partition`] expands `μ_X` once and sums
//!   `∏_j μ_X(-(-t)^j, u^j, v^j)^{a_j} / (a_j! j^{a_j})` over partitions of `n`.
//!   It never evaluates a determinant.
//! * [`sym_mhp_cheah`] reads off the `z^n` coefficient of the product
//!   `∏ (1 - (-1)^k u^p v^q t^k z)^{(-1)^{k+1} h^{k;p,q}}` built from the
//!   Hodge table. It never enumerates partitions.
//!
//! The equivariant side is kept at the level of characters: the `S_n`-module
//! `H^*(X^n)` is recorded by its [`ClassFunction`], whose inner products with
//! irreducible characters give isotypic multiplicities. In terms of the
//! standard representation `St`, the coefficient of `w` in the class function
//! of a single generator `w` is `Σ_k [Λ^k St] (w^k + w^{k+1})`, which is how
//! `det(I + w M_σ)` splits along `Λ^k(perm) = Λ^k St ⊕ Λ^{k-1} St`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hodgecore::{hodge_table, mhp, ExteriorPresentation, HodgeTable, Support};
use crate::polyring::{Monomial, RatScalar, TriPoly, ZSeries};
use crate::symgroup::{
    class_size, det_eval, factorial, mn_character, partitions_of, CycleType, Partition, PermutationWord, Sign,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Det,
    Partition,
    Cheah,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Det, Method::Partition, Method::Cheah];

    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Det => "det",
            Method::Partition => "partition",
            Method::Cheah => "cheah",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "det" => Ok(Method::Det),
            "partition" => Ok(Method::Partition),
            "cheah" => Ok(Method::Cheah),
            _ => Err(Error::Parse(format!("unknown method {s:?}"))),
        }
    }
}

/// `μ_{Sym^n X}` together with the route that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymResult {
    pub n: usize,
    pub method: Method,
    pub poly: TriPoly,
}

impl SymResult {
    fn new(n: usize, method: Method, poly: TriPoly) -> Result<Self> {
        if !poly.is_nonnegative() {
            return Err(Error::NegativeCoefficient {
                context: format!("Sym^{n} via {method}"),
                poly: poly.to_string(),
            });
        }
        Ok(SymResult { n, method, poly })
    }

    /// `{"n":…, "method":…, "poly":[…]}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("result serializes")
    }
}

/// `Σ weight·poly / divisor`, asserting that the division is exact.
pub fn weighted_class_sum(
    terms: impl IntoIterator<Item = (BigInt, TriPoly)>,
    divisor: &BigInt,
    context: &str,
) -> Result<TriPoly> {
    let mut total = TriPoly::zero();
    for (w, p) in terms {
        total += &p.scale(&w);
    }
    total.div_exact(divisor).map_err(|e| match e {
        Error::NonIntegral { context: detail } => Error::NonIntegral {
            context: format!("{context}: {detail}"),
        },
        other => other,
    })
}

fn family_factors(pres: &ExteriorPresentation) -> Vec<(Monomial, u32)> {
    pres.families().iter().map(|f| (f.monomial(), f.r)).collect()
}

/// `∏_i det(I + sign·w_i·M_σ)^{r_i}` at the class `c`.
fn det_product(c: &CycleType, factors: &[(Monomial, u32)], sign: Sign) -> TriPoly {
    factors
        .iter()
        .map(|&(w, r)| det_eval(c, w, sign).pow(r))
        .fold(TriPoly::one(), |acc, x| &acc * &x)
}

/// `(1/n!) Σ_c |c| ∏_i det(I + sign·w_i·M_c)^{r_i}`, classes evaluated in
/// parallel.
pub(crate) fn det_average(factors: &[(Monomial, u32)], sign: Sign, n: usize, context: &str) -> Result<TriPoly> {
    let classes = partitions_of(n);
    let terms: Vec<(BigInt, TriPoly)> = classes
        .par_iter()
        .map(|p| {
            let c = p.cycle_type();
            (class_size(&c), det_product(&c, factors, sign))
        })
        .collect();
    weighted_class_sum(terms, &factorial(n), context)
}

/// Character of `S_n` acting on a triply graded module, one value per class.
/// Classes are stored in the order of [`partitions_of`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFunction {
    n: usize,
    values: Vec<(CycleType, TriPoly)>,
}

impl ClassFunction {
    /// Builds a class function by evaluating `f` on every class of `S_n`.
    pub fn from_fn(n: usize, f: impl Fn(&CycleType) -> TriPoly + Sync) -> Self {
        let values = partitions_of(n)
            .par_iter()
            .map(|p| {
                let c = p.cycle_type();
                let v = f(&c);
                (c, v)
            })
            .collect();
        ClassFunction { n, values }
    }

    /// Accepts explicit values; every class of `S_n` must appear exactly once.
    pub fn from_values(n: usize, values: impl IntoIterator<Item = (CycleType, TriPoly)>) -> Result<Self> {
        let mut given: BTreeMap<CycleType, TriPoly> = BTreeMap::new();
        for (c, v) in values {
            if c.n() != n {
                return Err(Error::SizeMismatch { expected: n, found: c.n() });
            }
            if given.insert(c.clone(), v).is_some() {
                return Err(Error::InvalidArgument(format!("class {c} given twice")));
            }
        }
        let mut ordered = Vec::with_capacity(given.len());
        for p in partitions_of(n) {
            let c = p.cycle_type();
            let v = given
                .remove(&c)
                .ok_or_else(|| Error::InvalidArgument(format!("missing value for class {c}")))?;
            ordered.push((c, v));
        }
        Ok(ClassFunction { n, values: ordered })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, c: &CycleType) -> Option<&TriPoly> {
        self.values.iter().find(|(k, _)| k == c).map(|(_, v)| v)
    }

    pub fn at_identity(&self) -> &TriPoly {
        &self.values.last().expect("S_n has at least one class").1
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CycleType, &TriPoly)> {
        self.values.iter().map(|(c, v)| (c, v))
    }
}

impl fmt::Display for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (c, v)) in self.values.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{}: {v}", c.to_partition())?;
        }
        Ok(())
    }
}

impl Serialize for ClassFunction {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            class: String,
            value: &'a TriPoly,
        }
        #[derive(Serialize)]
        struct Doc<'a> {
            n: usize,
            classes: Vec<Entry<'a>>,
        }
        Doc {
            n: self.n,
            classes: self
                .values
                .iter()
                .map(|(c, v)| Entry {
                    class: c.to_partition().to_string(),
                    value: v,
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

/// The character of `S_n` on `H^{*;*,*}(X^n)`: at class `c`,
/// `∏_i det(I + t^{d_i} u^{p_i} v^{q_i} M_c)^{r_i}`.
pub fn equivariant_class_function(pres: &ExteriorPresentation, n: usize) -> Result<ClassFunction> {
    if n == 0 {
        return Err(Error::InvalidArgument("equivariant class function needs n >= 1".into()));
    }
    let factors = family_factors(pres);
    Ok(ClassFunction::from_fn(n, |c| det_product(c, &factors, Sign::Plus)))
}

/// The value at the identity, checked against the Künneth formula
/// `μ_X^n`.
pub fn dimension_check(cf: &ClassFunction, pres: &ExteriorPresentation) -> Result<TriPoly> {
    let at_id = cf.at_identity().clone();
    let expected = mhp(pres).pow(cf.n() as u32);
    if at_id != expected {
        return Err(Error::Inconsistent(format!(
            "value at identity {at_id} differs from mhp^{} = {expected}",
            cf.n()
        )));
    }
    Ok(at_id)
}

pub fn sym_mhp_det(pres: &ExteriorPresentation, n: usize) -> Result<SymResult> {
    let poly = det_average(&family_factors(pres), Sign::Plus, n, &format!("Sym^{n} determinant average"))?;
    SymResult::new(n, Method::Det, poly)
}

/// `1 / ∏_j (a_j! j^{a_j})`.
fn partition_weight(p: &Partition) -> RatScalar {
    let mut denom = BigInt::one();
    for (j, a) in p.cycle_type().multiplicities() {
        denom *= factorial(a as usize) * num_traits::pow(BigInt::from(j), a as usize);
    }
    RatScalar::new(BigInt::one(), denom)
}

pub fn sym_mhp_partition(pres: &ExteriorPresentation, n: usize) -> Result<SymResult> {
    let mu = mhp(pres);
    let n_fact = factorial(n);
    let terms = partitions_of(n)
        .par_iter()
        .map(|p| {
            let scaled = partition_weight(p) * RatScalar::from_integer(n_fact.clone());
            if !scaled.is_integer() {
                return Err(Error::NonIntegral {
                    context: format!("weight of partition {p} times {n}!"),
                });
            }
            let term = p
                .cycle_type()
                .multiplicities()
                .map(|(j, a)| mu.substitute_power(j).pow(a))
                .fold(TriPoly::one(), |acc, x| &acc * &x);
            Ok((scaled.to_integer(), term))
        })
        .collect::<Result<Vec<_>>>()?;
    let poly = weighted_class_sum(terms, &n_fact, &format!("Sym^{n} partition sum"))?;
    SymResult::new(n, Method::Partition, poly)
}

/// `∏_{(k,p,q)} (1 - (-1)^k u^p v^q t^k z)^{(-1)^{k+1} h}` modulo `z^{order+1}`.
///
/// `variant` names the cohomology the table describes; a compactly supported
/// table (see [`crate::hodgecore::compact_duality`]) yields the generating
/// series of the compactly supported polynomials of `Sym^n X`. The variant
/// must match `table.support`.
pub fn cheah_series(table: &HodgeTable, order: usize, variant: Support) -> Result<ZSeries> {
    if table.support != variant {
        return Err(Error::InvalidArgument(format!(
            "table holds {:?} Hodge numbers but {:?} series was requested",
            table.support, variant
        )));
    }
    let mut acc = ZSeries::one(order);
    for (m, h) in table.entries() {
        let even = m.k % 2 == 0;
        let linear = TriPoly::term(m, if even { -1 } else { 1 });
        let h = i64::try_from(h).map_err(|_| Error::InvalidArgument(format!("Hodge number {h} too large")))?;
        let exponent = if even { -h } else { h };
        acc = acc.mul(&ZSeries::linear(order, linear).int_pow(exponent)?)?;
    }
    Ok(acc)
}

pub fn sym_mhp_cheah(pres: &ExteriorPresentation, n: usize) -> Result<SymResult> {
    let series = cheah_series(&hodge_table(pres), n, Support::Ordinary)?;
    SymResult::new(n, Method::Cheah, series.coeff(n)?.clone())
}

pub fn sym_mhp(pres: &ExteriorPresentation, n: usize, method: Method) -> Result<SymResult> {
    match method {
        Method::Det => sym_mhp_det(pres, n),
        Method::Partition => sym_mhp_partition(pres, n),
        Method::Cheah => sym_mhp_cheah(pres, n),
    }
}

/// Multiplicity of the trivial representation: `⟨cf, 1⟩`.
pub fn trivial_multiplicity(cf: &ClassFunction) -> Result<TriPoly> {
    weighted_class_sum(
        cf.iter().map(|(c, v)| (class_size(c), v.clone())),
        &factorial(cf.n()),
        "trivial multiplicity",
    )
}

/// `⟨cf, χ_λ⟩`, the graded multiplicity of the irreducible `λ`.
pub fn isotypic_multiplicity(cf: &ClassFunction, lambda: &Partition) -> Result<TriPoly> {
    if lambda.n() != cf.n() {
        return Err(Error::SizeMismatch {
            expected: cf.n(),
            found: lambda.n(),
        });
    }
    let terms = cf
        .iter()
        .map(|(c, v)| Ok((class_size(c) * mn_character(lambda, c)?, v.clone())))
        .collect::<Result<Vec<_>>>()?;
    let poly = weighted_class_sum(terms, &factorial(cf.n()), &format!("multiplicity of {lambda}"))?;
    if !poly.is_nonnegative() {
        return Err(Error::NegativeCoefficient {
            context: format!("multiplicity of {lambda}"),
            poly: poly.to_string(),
        });
    }
    Ok(poly)
}

/// Checks that `elements` is a subgroup of `S_n`: nonempty, no repeats, every
/// word of length `n`, contains the identity and is closed under composition.
pub fn validate_subgroup(n: usize, elements: &[PermutationWord]) -> Result<()> {
    if elements.is_empty() {
        return Err(Error::NotASubgroup("empty element list".into()));
    }
    let mut set = BTreeSet::new();
    for h in elements {
        if h.len() != n {
            return Err(Error::NotASubgroup(format!("{h} does not act on {n} points")));
        }
        if !set.insert(h) {
            return Err(Error::NotASubgroup(format!("{h} listed twice")));
        }
    }
    if !set.contains(&PermutationWord::identity(n)) {
        return Err(Error::NotASubgroup("identity missing".into()));
    }
    for a in elements {
        for b in elements {
            let ab = a.compose(b);
            if !set.contains(&ab) {
                return Err(Error::NotASubgroup(format!("{a}∘{b} = {ab} missing")));
            }
        }
    }
    Ok(())
}

/// One permutation per line in bracket notation. Blank lines and lines
/// starting with `#` are skipped.
pub fn parse_subgroup(text: &str) -> Result<Vec<PermutationWord>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(str::parse)
        .collect()
}

/// `μ(X^n / H) = (1/|H|) Σ_{h∈H} ∏_i det(I + w_i M_h)^{r_i}`.
pub fn quotient_by_subgroup(pres: &ExteriorPresentation, n: usize, subgroup: &[PermutationWord]) -> Result<TriPoly> {
    validate_subgroup(n, subgroup)?;
    let mut by_type: BTreeMap<CycleType, u64> = BTreeMap::new();
    for h in subgroup {
        *by_type.entry(h.cycle_type()).or_insert(0) += 1;
    }
    let factors = family_factors(pres);
    let terms: Vec<(BigInt, TriPoly)> = by_type
        .into_par_iter()
        .map(|(c, count)| (BigInt::from(count), det_product(&c, &factors, Sign::Plus)))
        .collect();
    let poly = weighted_class_sum(terms, &BigInt::from(subgroup.len()), "subgroup average")?;
    if !poly.is_nonnegative() {
        return Err(Error::NegativeCoefficient {
            context: "subgroup quotient".into(),
            poly: poly.to_string(),
        });
    }
    Ok(poly)
}

/// Poincaré polynomial of `Sym^n X`, by the determinant average with the
/// weights dropped: `det(I + t^{d_i} M_σ)`.
pub fn sym_poincare(pres: &ExteriorPresentation, n: usize) -> Result<TriPoly> {
    let factors: Vec<(Monomial, u32)> = pres
        .families()
        .iter()
        .map(|f| (Monomial::new(f.d, 0, 0), f.r))
        .collect();
    det_average(&factors, Sign::Plus, n, &format!("Sym^{n} Poincaré average"))
}

/// E-polynomial of `Sym^n X`. With `t = -1` and every `d_i` odd, each factor
/// becomes `det(I - u^{p_i} v^{q_i} M_σ)`.
pub fn sym_epoly(pres: &ExteriorPresentation, n: usize) -> Result<TriPoly> {
    let factors: Vec<(Monomial, u32)> = pres
        .families()
        .iter()
        .map(|f| (Monomial::new(0, f.p, f.q), f.r))
        .collect();
    det_average(&factors, Sign::Minus, n, &format!("Sym^{n} E-polynomial average"))
}

impl ClassFunction {
    /// Constant class function `c` (the character of `c` copies of the
    /// trivial module).
    pub fn constant(n: usize, c: TriPoly) -> Self {
        ClassFunction::from_fn(n, |_| c.clone())
    }

    /// Character of the regular representation scaled by `c`.
    pub fn regular(n: usize, c: TriPoly) -> Self {
        let order = factorial(n);
        ClassFunction::from_fn(n, |cls| {
            if cls.is_identity() {
                c.scale(&order)
            } else {
                TriPoly::zero()
            }
        })
    }
}
