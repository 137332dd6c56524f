//! Bruhat order on `(p,q)`-clans.

use crate::clan::{clan_statistics, underlying_involution, Clan, ClanStatistics, ClanSymbol};
use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::rook::involution_leq;

fn check_shapes(a: &Clan, b: &Clan) -> Result<()> {
    if a.shape() != b.shape() {
        return Err(Error::ShapeMismatch {
            left: a.shape(),
            right: b.shape(),
        });
    }
    Ok(())
}

fn sign_counts_dominate(a: &ClanStatistics, b: &ClanStatistics) -> bool {
    a.plus_counts().iter().zip(b.plus_counts()).all(|(x, y)| x >= y)
        && a.minus_counts().iter().zip(b.minus_counts()).all(|(x, y)| x >= y)
}

fn stats_leq(a: &ClanStatistics, b: &ClanStatistics) -> bool {
    let n = a.len();
    sign_counts_dominate(a, b)
        && (1..=n).all(|i| (i + 1..=n).all(|j| a.pair(i, j) <= b.pair(i, j)))
}

/// `γ <= τ` iff `γ(i;+) >= τ(i;+)`, `γ(i;-) >= τ(i;-)` for all `i` and
/// `γ(i,j) <= τ(i,j)` for all `i < j`.
pub fn wyser_leq(gamma: &Clan, tau: &Clan) -> Result<bool> {
    check_shapes(gamma, tau)?;
    Ok(stats_leq(&clan_statistics(gamma), &clan_statistics(tau)))
}

/// Same order, with the pair-window condition replaced by comparing the
/// underlying involutions in the Bruhat order on involutions.
pub fn leq_via_involution(gamma: &Clan, tau: &Clan) -> Result<bool> {
    check_shapes(gamma, tau)?;
    let (a, b) = (clan_statistics(gamma), clan_statistics(tau));
    if !sign_counts_dominate(&a, &b) {
        return Ok(false);
    }
    involution_leq(&underlying_involution(gamma), &underlying_involution(tau))
}

/// Poset of the given clans under [`wyser_leq`]; element order is preserved.
pub fn build_poset(elements: Vec<Clan>) -> Result<Poset<Clan>> {
    if let Some(first) = elements.first() {
        for c in &elements[1..] {
            check_shapes(first, c)?;
        }
    }
    let stats: Vec<ClanStatistics> = elements.iter().map(clan_statistics).collect();
    Ok(Poset::from_fn(elements, |a, b| stats_leq(&stats[a], &stats[b])))
}

/// Minimal and maximal elements, each in poset order.
pub fn extremal_elements<T: Clone>(poset: &Poset<T>) -> (Vec<T>, Vec<T>) {
    let (mins, maxs) = poset.extremal_indices();
    let pick = |ix: Vec<usize>| ix.into_iter().map(|i| poset.elements()[i].clone()).collect();
    (pick(mins), pick(maxs))
}

/// `(c_1..c_n) -> (+ .. + c_1..c_n - .. -)` with `p2 - p` leading pluses and
/// `q2 - q` trailing minuses.
pub fn embed_clan(gamma: &Clan, p2: usize, q2: usize) -> Result<Clan> {
    let (p, q) = gamma.shape();
    if p2 < p || q2 < q {
        return Err(Error::ShrinkNotAllowed { p, q, p2, q2 });
    }
    let mut symbols = vec![ClanSymbol::Plus; p2 - p];
    symbols.extend_from_slice(gamma.symbols());
    symbols.extend(std::iter::repeat_n(ClanSymbol::Minus, q2 - q));
    Clan::new(symbols)
}
