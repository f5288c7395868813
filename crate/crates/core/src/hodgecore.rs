//! Varieties whose cohomology is an exterior algebra on odd-degree
//! generators, described by generator families `(d; p, q) × r`.
//!
//! The mixed Hodge polynomial of such a presentation is
//! `∏ (1 + t^d u^p v^q)^r`; its coefficients are the Hodge numbers
//! `h^{k;p,q}`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyring::{Monomial, Specialization, TriPoly};

/// `r` generators of cohomological degree `d` (odd) and Hodge weights `(p, q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GeneratorFamily {
    pub d: u32,
    pub p: u32,
    pub q: u32,
    pub r: u32,
}

impl GeneratorFamily {
    pub fn new(d: u32, p: u32, q: u32, r: u32) -> Result<Self> {
        if d.is_multiple_of(2) {
            return Err(Error::EvenDegree(d));
        }
        if r == 0 {
            return Err(Error::NonPositiveMultiplicity);
        }
        Ok(GeneratorFamily { d, p, q, r })
    }

    pub fn monomial(&self) -> Monomial {
        Monomial::new(self.d, self.p, self.q)
    }

    fn signature(&self) -> (u32, u32, u32) {
        (self.d, self.p, self.q)
    }
}

/// Canonical presentation: families sorted by `(d, p, q)` with distinct
/// signatures. Construct through [`ExteriorPresentation::new`], which merges
/// repeated signatures.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPresentation", into = "RawPresentation")]
pub struct ExteriorPresentation {
    label: Option<String>,
    families: Vec<GeneratorFamily>,
}

#[derive(Serialize, Deserialize)]
struct RawPresentation {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<String>,
    generators: Vec<GeneratorFamily>,
}

impl TryFrom<RawPresentation> for ExteriorPresentation {
    type Error = Error;

    fn try_from(raw: RawPresentation) -> Result<Self> {
        ExteriorPresentation::new(raw.label, raw.generators)
    }
}

impl From<ExteriorPresentation> for RawPresentation {
    fn from(p: ExteriorPresentation) -> Self {
        RawPresentation {
            label: p.label,
            generators: p.families,
        }
    }
}

impl ExteriorPresentation {
    pub fn new(label: Option<String>, families: impl IntoIterator<Item = GeneratorFamily>) -> Result<Self> {
        let mut merged: BTreeMap<(u32, u32, u32), u32> = BTreeMap::new();
        for f in families {
            let f = GeneratorFamily::new(f.d, f.p, f.q, f.r)?;
            *merged.entry(f.signature()).or_insert(0) += f.r;
        }
        let families = merged
            .into_iter()
            .map(|((d, p, q), r)| GeneratorFamily { d, p, q, r })
            .collect();
        Ok(ExteriorPresentation { label, families })
    }

    /// The point: no generators.
    pub fn empty() -> Self {
        ExteriorPresentation {
            label: None,
            families: Vec::new(),
        }
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn families(&self) -> &[GeneratorFamily] {
        &self.families
    }

    pub fn generator_count(&self) -> u32 {
        self.families.iter().map(|f| f.r).sum()
    }

    /// `Σ r·d`, the top cohomological degree.
    pub fn top_degree(&self) -> u32 {
        self.families.iter().map(|f| f.r * f.d).sum()
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("presentation serializes")
    }
}

/// `∏ (1 + t^d u^p v^q)^r`.
pub fn mhp(pres: &ExteriorPresentation) -> TriPoly {
    pres.families
        .iter()
        .map(|f| TriPoly::one_plus(f.monomial(), 1).pow(f.r))
        .fold(TriPoly::one(), |acc, x| &acc * &x)
}

pub fn poincare(pres: &ExteriorPresentation) -> TriPoly {
    mhp(pres).specialize(Specialization::POINCARE)
}

pub fn e_poly(pres: &ExteriorPresentation) -> TriPoly {
    mhp(pres).specialize(Specialization::E_POLY)
}

/// Whether a table holds ordinary or compactly supported Hodge numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Support {
    Ordinary,
    Compact,
}

/// Hodge numbers `h^{k;p,q}`, keyed by the monomial `t^k u^p v^q`. Only
/// positive entries are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HodgeTable {
    pub dim: Option<u32>,
    pub support: Support,
    numbers: BTreeMap<Monomial, u64>,
}

impl HodgeTable {
    pub fn new(dim: Option<u32>, support: Support, entries: impl IntoIterator<Item = (Monomial, u64)>) -> Self {
        let mut numbers = BTreeMap::new();
        for (m, h) in entries {
            if h > 0 {
                *numbers.entry(m).or_insert(0) += h;
            }
        }
        HodgeTable { dim, support, numbers }
    }

    /// Table of a point.
    pub fn point() -> Self {
        Self::new(Some(0), Support::Ordinary, [(Monomial::ONE, 1)])
    }

    pub fn get(&self, k: u32, p: u32, q: u32) -> u64 {
        self.numbers.get(&Monomial::new(k, p, q)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (Monomial, u64)> + '_ {
        self.numbers.iter().map(|(m, h)| (*m, *h))
    }

    pub fn len(&self) -> usize {
        self.numbers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.numbers.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.numbers.values().sum()
    }

    pub fn to_poly(&self) -> TriPoly {
        TriPoly::from_terms(self.numbers.iter().map(|(m, h)| (*m, *h)))
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Entry {
            k: u32,
            p: u32,
            q: u32,
            h: u64,
        }
        #[derive(Serialize)]
        struct Doc {
            #[serde(skip_serializing_if = "Option::is_none")]
            dim: Option<u32>,
            support: Support,
            numbers: Vec<Entry>,
        }
        let doc = Doc {
            dim: self.dim,
            support: self.support,
            numbers: self
                .numbers
                .iter()
                .map(|(m, &h)| Entry { k: m.k, p: m.p, q: m.q, h })
                .collect(),
        };
        serde_json::to_string(&doc).expect("table serializes")
    }
}

impl fmt::Display for HodgeTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.support {
            Support::Ordinary => "h",
            Support::Compact => "h_c",
        };
        for (i, (m, h)) in self.numbers.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{name}^{{{};{},{}}} = {h}", m.k, m.p, m.q)?;
        }
        Ok(())
    }
}

/// Expands [`mhp`] into its table of Hodge numbers.
pub fn hodge_table(pres: &ExteriorPresentation) -> HodgeTable {
    let poly = mhp(pres);
    HodgeTable::new(
        None,
        Support::Ordinary,
        poly.terms().map(|(m, c)| {
            let h = c.to_u64().expect("Hodge numbers of an exterior algebra are nonnegative and fit in u64");
            (*m, h)
        }),
    )
}

/// Poincaré duality on Hodge numbers: `h^{k;p,q}` becomes the entry at
/// `(2d - k; d - p, d - q)` of the dual table. The map is an involution, so
/// it converts in both directions and flips [`HodgeTable::support`].
pub fn compact_duality(table: &HodgeTable, d: u32) -> Result<HodgeTable> {
    let mut out = Vec::with_capacity(table.len());
    for (m, h) in table.entries() {
        if m.k > 2 * d || m.p > d || m.q > d {
            return Err(Error::NegativeIndex(format!(
                "entry ({};{},{}) does not fit complex dimension {d}",
                m.k, m.p, m.q
            )));
        }
        out.push((Monomial::new(2 * d - m.k, d - m.p, d - m.q), h));
    }
    let support = match table.support {
        Support::Ordinary => Support::Compact,
        Support::Compact => Support::Ordinary,
    };
    Ok(HodgeTable::new(Some(d), support, out))
}

/// Named presentations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Preset {
    /// Complex torus of dimension `d`: `(1;1,0)×d` and `(1;0,1)×d`.
    Torus { d: u32 },
    /// `(ℂ*)^r`: `(1;1,1)×r`.
    Cstar { r: u32 },
    /// `GL(m, ℂ)`: `(2i-1; i, i)` for `i = 1..m`.
    Gl { m: u32 },
    /// Linear algebraic group with `r_i` generators `(2i-1; i, i)`.
    Lag { r: Vec<u32> },
    /// Topological Lie group: families `(d; 0, 0)×r`. Only the Poincaré
    /// polynomial is meaningful; `u, v` outputs are formal.
    Lie { gens: Vec<(u32, u32)> },
}

impl Preset {
    pub fn name(&self) -> &'static str {
        match self {
            Preset::Torus { .. } => "torus",
            Preset::Cstar { .. } => "cstar",
            Preset::Gl { .. } => "gl",
            Preset::Lag { .. } => "lag",
            Preset::Lie { .. } => "lie",
        }
    }

    /// Complex dimension, where the preset determines it.
    pub fn complex_dim(&self) -> Option<u32> {
        match self {
            Preset::Torus { d } => Some(*d),
            Preset::Cstar { r } => Some(*r),
            Preset::Gl { m } => Some(m * m),
            Preset::Lag { .. } | Preset::Lie { .. } => None,
        }
    }

    fn label(&self) -> String {
        let join = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        match self {
            Preset::Torus { d } => format!("torus({d})"),
            Preset::Cstar { r } => format!("cstar({r})"),
            Preset::Gl { m } => format!("gl({m})"),
            Preset::Lag { r } => format!("lag({})", join(r)),
            Preset::Lie { gens } => {
                let g: Vec<String> = gens.iter().map(|(d, r)| format!("{d}:{r}")).collect();
                format!("lie({})", g.join(","))
            }
        }
    }

    pub fn presentation(&self) -> Result<ExteriorPresentation> {
        let positive = |x: u32| if x == 0 { Err(Error::NonPositiveMultiplicity) } else { Ok(x) };
        let families: Vec<GeneratorFamily> = match self {
            Preset::Torus { d } => {
                let d = positive(*d)?;
                vec![GeneratorFamily::new(1, 1, 0, d)?, GeneratorFamily::new(1, 0, 1, d)?]
            }
            Preset::Cstar { r } => vec![GeneratorFamily::new(1, 1, 1, positive(*r)?)?],
            Preset::Gl { m } => (1..=positive(*m)?)
                .map(|i| GeneratorFamily::new(2 * i - 1, i, i, 1))
                .collect::<Result<_>>()?,
            Preset::Lag { r } => {
                if r.is_empty() {
                    return Err(Error::InvalidArgument("lag needs at least one multiplicity".into()));
                }
                r.iter()
                    .enumerate()
                    .map(|(i, &ri)| {
                        let i = i as u32 + 1;
                        GeneratorFamily::new(2 * i - 1, i, i, ri)
                    })
                    .collect::<Result<_>>()?
            }
            Preset::Lie { gens } => {
                if gens.is_empty() {
                    return Err(Error::InvalidArgument("lie needs at least one generator family".into()));
                }
                gens.iter()
                    .map(|&(d, r)| GeneratorFamily::new(d, 0, 0, r))
                    .collect::<Result<_>>()?
            }
        };
        ExteriorPresentation::new(Some(self.label()), families)
    }
}

pub fn preset(p: &Preset) -> Result<ExteriorPresentation> {
    p.presentation()
}
