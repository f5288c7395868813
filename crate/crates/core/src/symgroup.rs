//! Partitions, conjugacy classes of `S_n`, determinants `det(I ± w·M_σ)`
//! evaluated from the cycle type alone, and character values.
//!
//! Every aggregate over `S_n` in this crate is taken over cycle types weighted
//! by [`class_size`]: `p(n)` terms instead of `n!`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polyring::{Monomial, TriPoly};

/// Integer partition with parts in weakly decreasing order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Sorts the parts; rejects zero parts.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn cycle_type(&self) -> CycleType {
        CycleType::from(self)
    }
}

/// `"3,1,1"`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|x| x.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad partition {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n` in reverse lexicographic order: `(n)` first,
/// `(1^n)` last. `n = 0` yields the single empty partition.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for part in (1..=max.min(remaining)).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n as u32, n as u32, &mut Vec::new(), &mut out);
    out
}

/// Cycle multiplicities: `j -> a_j`, the number of `j`-cycles.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct CycleType {
    mult: BTreeMap<u32, u32>,
}

impl CycleType {
    pub fn identity(n: usize) -> Self {
        let mut mult = BTreeMap::new();
        if n > 0 {
            mult.insert(1, n as u32);
        }
        CycleType { mult }
    }

    pub fn from_multiplicities(pairs: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut mult = BTreeMap::new();
        for (j, a) in pairs {
            if j == 0 {
                return Err(Error::Parse("cycle length must be positive".into()));
            }
            if a > 0 {
                *mult.entry(j).or_insert(0) += a;
            }
        }
        Ok(CycleType { mult })
    }

    pub fn n(&self) -> usize {
        self.mult.iter().map(|(&j, &a)| (j * a) as usize).sum()
    }

    /// `(j, a_j)` pairs with `a_j >= 1`, ascending in `j`.
    pub fn multiplicities(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.mult.iter().map(|(&j, &a)| (j, a))
    }

    pub fn multiplicity(&self, j: u32) -> u32 {
        self.mult.get(&j).copied().unwrap_or(0)
    }

    pub fn fixed_points(&self) -> u32 {
        self.multiplicity(1)
    }

    pub fn is_identity(&self) -> bool {
        self.mult.keys().all(|&j| j == 1)
    }

    pub fn to_partition(&self) -> Partition {
        let mut parts = Vec::new();
        for (&j, &a) in self.mult.iter().rev() {
            parts.extend(std::iter::repeat_n(j, a as usize));
        }
        Partition { parts }
    }
}

impl From<&Partition> for CycleType {
    fn from(p: &Partition) -> Self {
        let mut mult = BTreeMap::new();
        for &j in &p.parts {
            *mult.entry(j).or_insert(0) += 1;
        }
        CycleType { mult }
    }
}

/// `"2^1 1^1"`, largest cycle length first.
impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.mult.iter().rev().map(|(j, a)| format!("{j}^{a}")).collect();
        f.write_str(&s.join(" "))
    }
}

impl FromStr for CycleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad cycle type {s:?}"));
        let pairs = s
            .split_whitespace()
            .map(|tok| {
                let (j, a) = tok.split_once('^').ok_or_else(bad)?;
                Ok((j.parse().map_err(|_| bad())?, a.parse().map_err(|_| bad())?))
            })
            .collect::<Result<Vec<(u32, u32)>>>()?;
        CycleType::from_multiplicities(pairs)
    }
}

/// A permutation of `{1..n}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PermutationWord {
    images: Vec<usize>,
}

impl PermutationWord {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen[x - 1] = true;
        }
        Ok(PermutationWord { images })
    }

    pub fn identity(n: usize) -> Self {
        PermutationWord {
            images: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of `i` (1-based).
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &PermutationWord) -> PermutationWord {
        assert_eq!(self.len(), other.len());
        PermutationWord {
            images: other.images.iter().map(|&i| self.images[i - 1]).collect(),
        }
    }

    pub fn cycle_type(&self) -> CycleType {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut mult = BTreeMap::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i] - 1;
                len += 1;
            }
            *mult.entry(len).or_insert(0) += 1;
        }
        CycleType { mult }
    }
}

/// `"[2,3,1]"`.
impl fmt::Display for PermutationWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.images.iter().map(usize::to_string).collect();
        write!(f, "[{}]", s.join(","))
    }
}

impl FromStr for PermutationWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("permutation must be bracketed: {s:?}")))?;
        let images = if inner.trim().is_empty() {
            Vec::new()
        } else {
            inner
                .split(',')
                .map(|x| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad permutation {s:?}"))))
                .collect::<Result<Vec<_>>>()?
        };
        PermutationWord::new(images)
    }
}

/// Convenience alias matching the operation name.
pub fn perm_to_cycle_type(w: &PermutationWord) -> CycleType {
    w.cycle_type()
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `n! / ∏_j (j^{a_j} a_j!)`.
pub fn class_size(c: &CycleType) -> BigInt {
    factorial(c.n()) / centralizer_order(c)
}

/// `∏_j j^{a_j} a_j!`, the order of the centralizer of any element of type `c`.
pub fn centralizer_order(c: &CycleType) -> BigInt {
    let mut z = BigInt::one();
    for (j, a) in c.multiplicities() {
        z *= num_traits::pow(BigInt::from(j), a as usize) * factorial(a as usize);
    }
    z
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// `det(I + sign·w·M_σ)` for any `σ` of cycle type `c`:
/// `∏_j (1 - (-sign·w)^j)^{a_j}`.
pub fn det_eval(c: &CycleType, w: Monomial, sign: Sign) -> TriPoly {
    c.multiplicities()
        .map(|(j, a)| {
            // (-sign)^j: for sign = +1 this is (-1)^j, for sign = -1 it is 1.
            let neg_sign_pow_odd = sign == Sign::Plus && j % 2 == 1;
            let coeff = if neg_sign_pow_odd { 1 } else { -1 };
            TriPoly::one_plus(w.scaled(j), coeff).pow(a)
        })
        .fold(TriPoly::one(), |acc, f| &acc * &f)
}

/// Coefficients `e_0..e_n` of `det(I + x·M_σ)`, i.e. the characters of the
/// exterior powers of the permutation representation at `c`.
pub fn elementary_symmetric_profile(c: &CycleType) -> Vec<BigInt> {
    let n = c.n();
    let det = det_eval(c, Monomial::new(1, 0, 0), Sign::Plus);
    (0..=n)
        .map(|k| det.coeff(&Monomial::new(k as u32, 0, 0)))
        .collect()
}

/// Character of `Λ^k St` at `c`, from `Λ^k(perm) = Λ^k St ⊕ Λ^{k-1} St`.
pub fn exterior_std_character(k: usize, c: &CycleType) -> Result<BigInt> {
    let n = c.n();
    if k >= n {
        return Err(Error::ExteriorIndex { k, n });
    }
    let e = elementary_symmetric_profile(c);
    Ok((0..=k)
        .map(|i| if (k - i).is_multiple_of(2) { e[i].clone() } else { -e[i].clone() })
        .sum())
}

type MnKey = (Vec<u32>, Vec<u32>);

fn mn_memo() -> &'static RwLock<HashMap<MnKey, BigInt>> {
    static MEMO: OnceLock<RwLock<HashMap<MnKey, BigInt>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// Irreducible character `χ_λ` at class `c` by the Murnaghan–Nakayama rule.
///
/// Border strips are removed on the beta-set (abacus) of `λ`: removing a
/// `j`-strip moves a bead from `b` to `b - j`, with sign `(-1)^height` where
/// the height is the number of beads strictly between.
pub fn mn_character(lambda: &Partition, c: &CycleType) -> Result<BigInt> {
    if lambda.n() != c.n() {
        return Err(Error::SizeMismatch {
            expected: lambda.n(),
            found: c.n(),
        });
    }
    Ok(mn_rec(lambda.parts().to_vec(), c.to_partition().parts))
}

fn mn_rec(shape: Vec<u32>, cycles: Vec<u32>) -> BigInt {
    let Some((&j, rest)) = cycles.split_first() else {
        return if shape.is_empty() { BigInt::one() } else { BigInt::zero() };
    };
    let key = (shape, cycles.clone());
    if let Some(v) = mn_memo().read().unwrap().get(&key) {
        return v.clone();
    }
    let shape = &key.0;
    let len = shape.len();
    let beads: Vec<u32> = shape
        .iter()
        .enumerate()
        .map(|(i, &part)| part + (len - 1 - i) as u32)
        .collect();
    let mut total = BigInt::zero();
    for &b in &beads {
        if b < j || beads.contains(&(b - j)) {
            continue;
        }
        let height = beads.iter().filter(|&&x| x > b - j && x < b).count();
        let mut moved: Vec<u32> = beads.iter().map(|&x| if x == b { b - j } else { x }).collect();
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let l = moved.len();
        let sub: Vec<u32> = moved
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (l - 1 - i) as u32)
            .filter(|&p| p > 0)
            .collect();
        let value = mn_rec(sub, rest.to_vec());
        if height % 2 == 0 {
            total += value;
        } else {
            total -= value;
        }
    }
    mn_memo().write().unwrap().insert(key, total.clone());
    total
}
