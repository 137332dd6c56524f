//! Clans and the constructions attached to a single clan.
//!
//! A `(p,q)`-clan is a word of length `n = p + q` in `+`, `-` and matched pairs
//! of labels, taken up to relabelling of the pairs. [`Clan`] always holds the
//! canonical representative: pair labels are `1, 2, 3, ...` in order of first
//! occurrence.

use crate::error::{Error, Result};
use crate::matrix::IntegerMatrix;
use crate::perm::Involution;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

/// Largest `n = p + q` enumerated unless the caller raises the bound.
pub const DEFAULT_MAX_N: usize = 12;

/// One position of a clan. The derived ordering `- < + < 1 < 2 < ...` is the
/// enumeration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClanSymbol {
    Minus,
    Plus,
    Pair(usize),
}

impl ClanSymbol {
    pub fn is_pair(self) -> bool {
        matches!(self, ClanSymbol::Pair(_))
    }
}

/// Signature attached to a pair member, or the sign of a `±` symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn opposite(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Clan {
    symbols: Vec<ClanSymbol>,
    p: usize,
    q: usize,
}

impl Clan {
    /// Canonicalizes a raw symbol sequence; see [`canonicalize`].
    pub fn new(symbols: Vec<ClanSymbol>) -> Result<Self> {
        canonicalize(&symbols)
    }

    /// Clan of only `+` and `-` symbols.
    pub fn from_signs(signs: &[Sign]) -> Self {
        let symbols = signs
            .iter()
            .map(|s| match s {
                Sign::Plus => ClanSymbol::Plus,
                Sign::Minus => ClanSymbol::Minus,
            })
            .collect();
        Self::from_canonical(symbols)
    }

    // Caller guarantees the symbols are canonical.
    fn from_canonical(symbols: Vec<ClanSymbol>) -> Self {
        let plus = symbols.iter().filter(|s| **s == ClanSymbol::Plus).count();
        let minus = symbols.iter().filter(|s| **s == ClanSymbol::Minus).count();
        let pairs = (symbols.len() - plus - minus) / 2;
        Clan {
            symbols,
            p: plus + pairs,
            q: minus + pairs,
        }
    }

    pub fn symbols(&self) -> &[ClanSymbol] {
        &self.symbols
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.p, self.q)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Number of matched pairs.
    pub fn pair_count(&self) -> usize {
        self.symbols.iter().filter(|s| s.is_pair()).count() / 2
    }

    /// True for clans made of `+` and `-` only.
    pub fn is_base(&self) -> bool {
        self.symbols.iter().all(|s| !s.is_pair())
    }

    /// 1-based positions `(i, j)`, `i < j`, of each pair, ordered by `i`.
    pub fn pair_positions(&self) -> Vec<(usize, usize)> {
        let mut first: HashMap<usize, usize> = HashMap::new();
        let mut out = Vec::new();
        for (idx, s) in self.symbols.iter().enumerate() {
            if let ClanSymbol::Pair(label) = *s {
                match first.remove(&label) {
                    Some(i) => out.push((i, idx + 1)),
                    None => {
                        first.insert(label, idx + 1);
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    fn render_symbol(&self, s: ClanSymbol) -> String {
        match s {
            ClanSymbol::Plus => "+".into(),
            ClanSymbol::Minus => "-".into(),
            ClanSymbol::Pair(k) if self.len() < 10 => k.to_string(),
            ClanSymbol::Pair(k) => format!("[{k}]"),
        }
    }

    /// Symbols as JSON strings: `"+"`, `"-"` or the decimal label.
    pub fn symbol_strings(&self) -> Vec<String> {
        self.symbols
            .iter()
            .map(|s| match s {
                ClanSymbol::Plus => "+".to_string(),
                ClanSymbol::Minus => "-".to_string(),
                ClanSymbol::Pair(k) => k.to_string(),
            })
            .collect()
    }
}

/// Unparenthesized rendering: `+1212-`. Labels print as bare digits when the
/// clan has fewer than 10 symbols and as `[k]` otherwise.
impl fmt::Display for Clan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.symbols {
            f.write_str(&self.render_symbol(s))?;
        }
        Ok(())
    }
}

impl FromStr for Clan {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_clan(s)
    }
}

#[derive(Serialize, Deserialize)]
struct ClanRepr {
    symbols: Vec<String>,
    p: usize,
    q: usize,
}

impl Serialize for Clan {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ClanRepr {
            symbols: self.symbol_strings(),
            p: self.p,
            q: self.q,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Clan {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = ClanRepr::deserialize(deserializer)?;
        let symbols = repr
            .symbols
            .iter()
            .map(|s| parse_symbol_token(s))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        let clan = canonicalize(&symbols).map_err(D::Error::custom)?;
        if clan.shape() != (repr.p, repr.q) {
            return Err(D::Error::custom(format!(
                "declared shape ({}, {}) does not match symbols {}",
                repr.p, repr.q, clan
            )));
        }
        Ok(clan)
    }
}

fn parse_symbol_token(tok: &str) -> Result<ClanSymbol> {
    match tok {
        "+" => Ok(ClanSymbol::Plus),
        "-" | "\u{2212}" => Ok(ClanSymbol::Minus),
        _ => {
            let digits = tok
                .strip_prefix('[')
                .and_then(|t| t.strip_suffix(']'))
                .unwrap_or(tok);
            match digits.parse::<usize>() {
                Ok(k) if k > 0 && digits.bytes().all(|b| b.is_ascii_digit()) => {
                    Ok(ClanSymbol::Pair(k))
                }
                _ => Err(Error::InvalidSymbol(tok.to_string())),
            }
        }
    }
}

// Adjacency form: each character is a symbol, except `[k]` for multi-digit labels.
fn parse_adjacent(chunk: &str, out: &mut Vec<ClanSymbol>) -> Result<()> {
    let mut chars = chunk.chars();
    while let Some(c) = chars.next() {
        match c {
            '+' => out.push(ClanSymbol::Plus),
            '-' | '\u{2212}' => out.push(ClanSymbol::Minus),
            '[' => {
                let mut tok = String::from("[");
                for d in chars.by_ref() {
                    tok.push(d);
                    if d == ']' {
                        break;
                    }
                }
                out.push(parse_symbol_token(&tok)?);
            }
            d if d.is_ascii_digit() => out.push(parse_symbol_token(&d.to_string())?),
            other => return Err(Error::InvalidSymbol(other.to_string())),
        }
    }
    Ok(())
}

/// Parses clan text such as `(+1212-)`, `+ 1 2 1 2 -` or `+[10]-[10]`.
///
/// Without whitespace every digit is its own label. When the text contains
/// whitespace, an all-digit token is read as one (possibly multi-digit) label
/// and any other token is read in adjacency form. The Unicode minus `−` is
/// accepted for `-`.
pub fn parse_clan(text: &str) -> Result<Clan> {
    let trimmed = text.trim();
    let inner = trimmed
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(trimmed);
    let mut symbols = Vec::new();
    if inner.chars().any(char::is_whitespace) {
        for tok in inner.split_whitespace() {
            if tok.bytes().all(|b| b.is_ascii_digit()) {
                symbols.push(parse_symbol_token(tok)?);
            } else {
                parse_adjacent(tok, &mut symbols)?;
            }
        }
    } else {
        parse_adjacent(inner, &mut symbols)?;
    }
    if symbols.is_empty() {
        return Err(Error::EmptyInput);
    }
    canonicalize(&symbols)
}

/// Relabels pairs `1, 2, ...` by first occurrence. Every label must occur
/// exactly twice.
pub fn canonicalize(symbols: &[ClanSymbol]) -> Result<Clan> {
    let mut counts: HashMap<usize, usize> = HashMap::new();
    for s in symbols {
        if let ClanSymbol::Pair(k) = *s {
            if k == 0 {
                return Err(Error::InvalidSymbol("0".into()));
            }
            *counts.entry(k).or_default() += 1;
        }
    }
    if let Some((&label, &count)) = counts
        .iter()
        .filter(|(_, &c)| c != 2)
        .min_by_key(|(&l, _)| l)
    {
        return Err(Error::UnmatchedPair { label, count });
    }
    let mut relabel: HashMap<usize, usize> = HashMap::new();
    let canonical = symbols
        .iter()
        .map(|s| match *s {
            ClanSymbol::Pair(k) => {
                let next = relabel.len() + 1;
                ClanSymbol::Pair(*relabel.entry(k).or_insert(next))
            }
            other => other,
        })
        .collect();
    Ok(Clan::from_canonical(canonical))
}

/// Closed-form `|C(p,q)| = Σ_k C(n,2k) (2k-1)!! C(n-2k, p-k)`.
pub fn clan_count(p: usize, q: usize) -> u128 {
    let n = p + q;
    (0..=p.min(q))
        .map(|k| {
            let double_fact: u128 = (1..=k as u128).map(|i| 2 * i - 1).product();
            binomial(n, 2 * k) * double_fact * binomial(n - 2 * k, p - k)
        })
        .sum()
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// All canonical `(p,q)`-clans in enumeration order, with `p + q` bounded by
/// [`DEFAULT_MAX_N`].
pub fn enumerate_clans(p: usize, q: usize) -> Result<Vec<Clan>> {
    enumerate_clans_bounded(p, q, DEFAULT_MAX_N)
}

pub fn enumerate_clans_bounded(p: usize, q: usize, max_n: usize) -> Result<Vec<Clan>> {
    if p == 0 || q == 0 {
        return Err(Error::InvalidShape { p, q });
    }
    let n = p + q;
    if n > max_n {
        return Err(Error::LimitExceeded { n, limit: max_n });
    }
    let mut out = Vec::with_capacity(clan_count(p, q) as usize);
    let mut word = Vec::with_capacity(n);
    let mut open = Vec::new();
    extend_clans(p, q, n, &mut word, &mut open, 0, 0, 0, &mut out);
    out.sort_unstable();
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn extend_clans(
    p: usize,
    q: usize,
    n: usize,
    word: &mut Vec<ClanSymbol>,
    open: &mut Vec<usize>,
    plus: usize,
    minus: usize,
    pairs: usize,
    out: &mut Vec<Clan>,
) {
    let remaining = n - word.len();
    if remaining == 0 {
        if open.is_empty() && plus + pairs == p && minus + pairs == q {
            out.push(Clan::from_canonical(word.clone()));
        }
        return;
    }
    if open.len() > remaining {
        return;
    }
    if plus + pairs < p {
        word.push(ClanSymbol::Plus);
        extend_clans(p, q, n, word, open, plus + 1, minus, pairs, out);
        word.pop();
    }
    if minus + pairs < q {
        word.push(ClanSymbol::Minus);
        extend_clans(p, q, n, word, open, plus, minus + 1, pairs, out);
        word.pop();
    }
    if plus + pairs < p && minus + pairs < q {
        let label = pairs + 1;
        word.push(ClanSymbol::Pair(label));
        open.push(label);
        extend_clans(p, q, n, word, open, plus, minus, pairs + 1, out);
        open.pop();
        word.pop();
    }
    for idx in 0..open.len() {
        let label = open.remove(idx);
        word.push(ClanSymbol::Pair(label));
        extend_clans(p, q, n, word, open, plus, minus, pairs, out);
        word.pop();
        open.insert(idx, label);
    }
}

/// A clan with a signature on each pair member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedClan {
    clan: Clan,
    signatures: Vec<Option<Sign>>,
}

impl SignedClan {
    /// Checks that signatures sit exactly on pair positions and that the two
    /// members of each pair carry opposite signs.
    pub fn new(clan: Clan, signatures: Vec<Option<Sign>>) -> Result<Self> {
        let bad = |msg: &str| Error::InvalidSymbol(format!("{clan}: {msg}"));
        if signatures.len() != clan.len() {
            return Err(bad("signature length"));
        }
        for (s, sig) in clan.symbols().iter().zip(&signatures) {
            if s.is_pair() != sig.is_some() {
                return Err(bad("signature outside pair positions"));
            }
        }
        for (i, j) in clan.pair_positions() {
            if signatures[i - 1] == signatures[j - 1] {
                return Err(bad("pair members share a signature"));
            }
        }
        Ok(SignedClan { clan, signatures })
    }

    pub fn clan(&self) -> &Clan {
        &self.clan
    }

    /// Signature at 1-based position `i`; `None` on `±` symbols.
    pub fn signature(&self, i: usize) -> Option<Sign> {
        self.signatures[i - 1]
    }

    pub fn signatures(&self) -> &[Option<Sign>] {
        &self.signatures
    }

    /// Sign of position `i` once every pair member is replaced by its signature.
    pub fn effective_sign(&self, i: usize) -> Sign {
        match (self.clan.symbols[i - 1], self.signatures[i - 1]) {
            (ClanSymbol::Plus, _) => Sign::Plus,
            (ClanSymbol::Minus, _) => Sign::Minus,
            (ClanSymbol::Pair(_), Some(s)) => s,
            (ClanSymbol::Pair(_), None) => unreachable!("validated in SignedClan::new"),
        }
    }
}

impl fmt::Display for SignedClan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (s, sig) in self.clan.symbols.iter().zip(&self.signatures) {
            write!(f, "{}", self.clan.render_symbol(*s))?;
            match sig {
                Some(Sign::Plus) => write!(f, "\u{208A}")?,
                Some(Sign::Minus) => write!(f, "\u{208B}")?,
                None => {}
            }
        }
        write!(f, ")")
    }
}

/// First member of each pair signed `-`, second member `+`.
pub fn default_signed_clan(clan: &Clan) -> SignedClan {
    let mut signatures = vec![None; clan.len()];
    for (i, j) in clan.pair_positions() {
        signatures[i - 1] = Some(Sign::Minus);
        signatures[j - 1] = Some(Sign::Plus);
    }
    SignedClan {
        clan: clan.clone(),
        signatures,
    }
}

/// Replaces each pair member by its default signature.
pub fn base_clan(clan: &Clan) -> Clan {
    let signed = default_signed_clan(clan);
    let signs: Vec<Sign> = (1..=clan.len()).map(|i| signed.effective_sign(i)).collect();
    Clan::from_signs(&signs)
}

/// Counting statistics of a clan, all indexed from 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClanStatistics {
    plus_counts: Vec<usize>,
    minus_counts: Vec<usize>,
    // pair_counts[i-1][j-1] for i < j, zero elsewhere
    pair_counts: Vec<Vec<usize>>,
}

impl ClanStatistics {
    /// `γ(i;+)`.
    pub fn plus(&self, i: usize) -> usize {
        self.plus_counts[i - 1]
    }

    /// `γ(i;-)`.
    pub fn minus(&self, i: usize) -> usize {
        self.minus_counts[i - 1]
    }

    /// `γ(i,j)` for `i < j`.
    pub fn pair(&self, i: usize, j: usize) -> usize {
        self.pair_counts[i - 1][j - 1]
    }

    pub fn plus_counts(&self) -> &[usize] {
        &self.plus_counts
    }

    pub fn minus_counts(&self) -> &[usize] {
        &self.minus_counts
    }

    pub fn len(&self) -> usize {
        self.plus_counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.plus_counts.is_empty()
    }
}

/// `γ(i;±)` counts the `±` symbols among `c_1..c_i` plus the pairs with both
/// members in that prefix. `γ(i,j)` counts pairs `c_s = c_t` with `s <= i < j < t`.
pub fn clan_statistics(clan: &Clan) -> ClanStatistics {
    let n = clan.len();
    let pairs = clan.pair_positions();
    let mut plus_counts = Vec::with_capacity(n);
    let mut minus_counts = Vec::with_capacity(n);
    let (mut plus, mut minus) = (0, 0);
    let mut closes_at = vec![false; n + 1];
    for &(_, t) in &pairs {
        closes_at[t] = true;
    }
    for (idx, s) in clan.symbols().iter().enumerate() {
        match s {
            ClanSymbol::Plus => plus += 1,
            ClanSymbol::Minus => minus += 1,
            ClanSymbol::Pair(_) if closes_at[idx + 1] => {
                plus += 1;
                minus += 1;
            }
            ClanSymbol::Pair(_) => {}
        }
        plus_counts.push(plus);
        minus_counts.push(minus);
    }
    let mut pair_counts = vec![vec![0; n]; n];
    for &(s, t) in &pairs {
        for i in s..t {
            for j in i + 1..t {
                pair_counts[i - 1][j - 1] += 1;
            }
        }
    }
    ClanStatistics {
        plus_counts,
        minus_counts,
        pair_counts,
    }
}

/// The default permutation `σ_γ`.
///
/// `S` holds the positions `<= p` whose default signature (the symbol of the
/// base clan) is `-`, `T` the positions `> p` whose default signature is `+`,
/// both increasing; `σ` swaps the l-th element of `S` with the l-th of `T`.
pub fn default_permutation(clan: &Clan) -> Result<Involution> {
    let base = base_clan(clan);
    let p = clan.p();
    let s: Vec<usize> = (1..=p)
        .filter(|&i| base.symbols[i - 1] == ClanSymbol::Minus)
        .collect();
    let t: Vec<usize> = (p + 1..=clan.len())
        .filter(|&i| base.symbols[i - 1] == ClanSymbol::Plus)
        .collect();
    if s.len() != t.len() {
        return Err(Error::InternalMismatch {
            s: s.len(),
            t: t.len(),
        });
    }
    let swaps: Vec<(usize, usize)> = s.into_iter().zip(t).collect();
    Involution::from_transpositions(clan.len(), &swaps)
}

/// Unnormalized default matrix: column `i` is the vector `v_i` of the default
/// flag built from the default signed clan and the default permutation.
pub fn default_flag_matrix(clan: &Clan) -> Result<IntegerMatrix> {
    let n = clan.len();
    let sigma = default_permutation(clan)?;
    let signed = default_signed_clan(clan);
    let mut partner = vec![0usize; n + 1];
    for (i, j) in clan.pair_positions() {
        partner[i] = j;
        partner[j] = i;
    }
    let columns: Vec<Vec<i64>> = (1..=n)
        .map(|i| {
            let mut v = vec![0i64; n];
            match signed.signature(i) {
                None => v[sigma.apply(i) - 1] = 1,
                Some(sign) => {
                    let j = partner[i];
                    v[sigma.apply(i) - 1] = if sign == Sign::Plus { 1 } else { -1 };
                    v[sigma.apply(j) - 1] += 1;
                }
            }
            v
        })
        .collect();
    Ok(IntegerMatrix::from_columns(&columns))
}

/// Involution whose 2-cycles are the pair positions of the clan.
pub fn underlying_involution(clan: &Clan) -> Involution {
    Involution::from_transpositions(clan.len(), &clan.pair_positions())
        .expect("pair positions are disjoint")
}
