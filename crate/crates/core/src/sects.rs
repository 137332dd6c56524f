//! Schubert cells of the Grassmannian and the sect decomposition of `C(p,q)`.
//!
//! A `p`-subset `I` of `{1..n}` names a Schubert cell, its base clan `γ_I`
//! (`+` on `I`, `-` elsewhere), and a lattice path (E on `I`, N elsewhere).
//! The sect of `I` is the set of clans whose base clan is `γ_I`.

use crate::bruhat::build_poset;
use crate::clan::{base_clan, binomial, enumerate_clans_bounded, Clan, ClanSymbol, Sign, DEFAULT_MAX_N};
use crate::error::{Error, Result};
use crate::poset::Poset;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// A strictly increasing subset of `{1..n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisSubset {
    indices: Vec<usize>,
    n: usize,
}

impl BasisSubset {
    pub fn new(mut indices: Vec<usize>, n: usize) -> Result<Self> {
        indices.sort_unstable();
        let distinct = indices.windows(2).all(|w| w[0] < w[1]);
        if !distinct || indices.iter().any(|&i| i == 0 || i > n) {
            return Err(Error::InvalidSubset { indices, n });
        }
        Ok(BasisSubset { indices, n })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> usize {
        self.indices.len()
    }

    /// Position of this subset among all `p`-subsets of `{1..n}` in
    /// colexicographic order, starting at 0.
    pub fn colex_rank(&self) -> usize {
        self.indices
            .iter()
            .enumerate()
            .map(|(k, &i)| binomial(i - 1, k + 1) as usize)
            .sum()
    }

    /// All `p`-subsets of `{1..n}` in lexicographic order.
    pub fn all(n: usize, p: usize) -> Vec<BasisSubset> {
        fn go(start: usize, n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<BasisSubset>) {
            if left == 0 {
                out.push(BasisSubset {
                    indices: cur.clone(),
                    n,
                });
                return;
            }
            for i in start..=n + 1 - left {
                cur.push(i);
                go(i + 1, n, left - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(1, n, p, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for BasisSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl Serialize for BasisSubset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.indices.serialize(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    N,
    E,
}

/// A word in `N` and `E` from the origin to `(p, q)`: `p` east steps and `q`
/// north steps.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePath {
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(steps: Vec<Step>) -> Self {
        LatticePath { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Number of east steps.
    pub fn p(&self) -> usize {
        self.steps.iter().filter(|s| **s == Step::E).count()
    }

    /// Number of north steps.
    pub fn q(&self) -> usize {
        self.len() - self.p()
    }

    /// 1-based positions of the east steps.
    pub fn east_positions(&self) -> Vec<usize> {
        self.steps
            .iter()
            .enumerate()
            .filter(|(_, s)| **s == Step::E)
            .map(|(i, _)| i + 1)
            .collect()
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::N => "N",
                Step::E => "E",
            })?;
        }
        Ok(())
    }
}

impl FromStr for LatticePath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                'N' | 'n' => Ok(Step::N),
                'E' | 'e' => Ok(Step::E),
                other => Err(Error::BadToken(other.to_string())),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LatticePath { steps })
    }
}

impl Serialize for LatticePath {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `+` at the positions in `I`, `-` elsewhere.
pub fn base_clan_of_subset(subset: &BasisSubset) -> Clan {
    let signs: Vec<Sign> = (1..=subset.n())
        .map(|i| {
            if subset.indices.binary_search(&i).is_ok() {
                Sign::Plus
            } else {
                Sign::Minus
            }
        })
        .collect();
    Clan::from_signs(&signs)
}

/// Positions of the `+` symbols of a base clan.
pub fn subset_of_base_clan(base: &Clan) -> Result<BasisSubset> {
    if !base.is_base() {
        return Err(Error::NotABaseClan(base.to_string()));
    }
    let indices = base
        .symbols()
        .iter()
        .enumerate()
        .filter(|(_, s)| **s == ClanSymbol::Plus)
        .map(|(i, _)| i + 1)
        .collect();
    BasisSubset::new(indices, base.len())
}

/// Step `i` is `E` iff `i ∈ I`.
pub fn lattice_path(subset: &BasisSubset) -> LatticePath {
    LatticePath::new(
        (1..=subset.n())
            .map(|i| {
                if subset.indices.binary_search(&i).is_ok() {
                    Step::E
                } else {
                    Step::N
                }
            })
            .collect(),
    )
}

/// `a <= b` iff the k-th east step of `a` comes no later than the k-th east
/// step of `b`, for every `k`.
pub fn path_leq(a: &LatticePath, b: &LatticePath) -> Result<bool> {
    if (a.p(), a.q()) != (b.p(), b.q()) {
        return Err(Error::ShapeMismatch {
            left: (a.p(), a.q()),
            right: (b.p(), b.q()),
        });
    }
    Ok(a
        .east_positions()
        .iter()
        .zip(b.east_positions())
        .all(|(x, y)| *x <= y))
}

/// Boxes of the `p × q` grid beneath the path: each east step contributes the
/// number of north steps taken before it.
pub fn cell_dimension(path: &LatticePath) -> usize {
    let mut norths = 0;
    let mut boxes = 0;
    for s in path.steps() {
        match s {
            Step::N => norths += 1,
            Step::E => boxes += norths,
        }
    }
    boxes
}

/// Clans sharing one base clan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sect {
    subset: BasisSubset,
    base: Clan,
    members: Vec<Clan>,
}

impl Sect {
    pub fn subset(&self) -> &BasisSubset {
        &self.subset
    }

    pub fn base(&self) -> &Clan {
        &self.base
    }

    /// Members in enumeration order.
    pub fn members(&self) -> &[Clan] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, clan: &Clan) -> bool {
        self.members.binary_search(clan).is_ok()
    }

    /// The sect as a poset under the Bruhat order.
    pub fn poset(&self) -> Poset<Clan> {
        build_poset(self.members.clone()).expect("sect members share a shape")
    }

    pub fn to_json(&self) -> SectJson {
        SectJson {
            subset: self.subset.indices.clone(),
            base: self.base.to_string(),
            members: self.members.iter().map(|c| c.to_string()).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SectJson {
    #[serde(rename = "I")]
    pub subset: Vec<usize>,
    pub base: String,
    pub members: Vec<String>,
}

/// The Schubert cell a clan projects to.
pub fn sect_of_clan(clan: &Clan) -> BasisSubset {
    subset_of_base_clan(&base_clan(clan)).expect("base clans have no pairs")
}

/// Groups `C(p,q)` by base clan. Every one of the `C(n,p)` subsets appears.
pub fn sect_partition(p: usize, q: usize) -> Result<BTreeMap<BasisSubset, Sect>> {
    sect_partition_bounded(p, q, DEFAULT_MAX_N)
}

pub fn sect_partition_bounded(p: usize, q: usize, max_n: usize) -> Result<BTreeMap<BasisSubset, Sect>> {
    let clans = enumerate_clans_bounded(p, q, max_n)?;
    let mut map: BTreeMap<BasisSubset, Sect> = BasisSubset::all(p + q, p)
        .into_iter()
        .map(|subset| {
            let base = base_clan_of_subset(&subset);
            let sect = Sect {
                subset: subset.clone(),
                base,
                members: Vec::new(),
            };
            (subset, sect)
        })
        .collect();
    for clan in clans {
        let key = sect_of_clan(&clan);
        map.get_mut(&key)
            .expect("every base clan has p plus signs")
            .members
            .push(clan);
    }
    Ok(map)
}

/// The big sect with its distinguished minimum and maximum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseSect {
    pub sect: Sect,
    pub min: Clan,
    pub max: Clan,
}

/// `(1 2 .. r + .. + r .. 2 1)` with `p - q` central pluses, where
/// `r = (n - (p - q)) / 2 = q`.
pub fn gamma_max(p: usize, q: usize) -> Result<Clan> {
    if p < q {
        return Err(Error::RequiresPGeQ { p, q });
    }
    let r = (p + q - (p - q)) / 2;
    let mut symbols: Vec<ClanSymbol> = (1..=r).map(ClanSymbol::Pair).collect();
    symbols.extend(std::iter::repeat_n(ClanSymbol::Plus, p - q));
    symbols.extend((1..=r).rev().map(ClanSymbol::Pair));
    Clan::new(symbols)
}

/// `q` minus signs followed by `p` plus signs.
pub fn dense_base_clan(p: usize, q: usize) -> Clan {
    let mut signs = vec![Sign::Minus; q];
    signs.extend(std::iter::repeat_n(Sign::Plus, p));
    Clan::from_signs(&signs)
}

pub fn dense_sect(p: usize, q: usize) -> Result<DenseSect> {
    dense_sect_bounded(p, q, DEFAULT_MAX_N)
}

pub fn dense_sect_bounded(p: usize, q: usize, max_n: usize) -> Result<DenseSect> {
    if p < q {
        return Err(Error::RequiresPGeQ { p, q });
    }
    let min = dense_base_clan(p, q);
    let key = subset_of_base_clan(&min)?;
    let sect = sect_partition_bounded(p, q, max_n)?
        .remove(&key)
        .expect("partition has every subset");
    Ok(DenseSect {
        sect,
        min,
        max: gamma_max(p, q)?,
    })
}

/// Whether `set` is closed upwards in `poset`.
pub fn is_upper_order_ideal(set: &[Clan], poset: &Poset<Clan>) -> Result<bool> {
    poset.is_upper_order_ideal(set)
}
