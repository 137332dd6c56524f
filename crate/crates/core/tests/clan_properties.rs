mod common;

use common::naive_base;
use proptest::prelude::*;
use sects_core::*;

fn shapes(max_n: usize) -> impl Iterator<Item = (usize, usize)> {
    (2..=max_n).flat_map(|n| (1..n).map(move |p| (p, n - p)))
}

fn all_clans(max_n: usize) -> impl Iterator<Item = Clan> {
    shapes(max_n).flat_map(|(p, q)| enumerate_clans(p, q).unwrap())
}

#[test]
fn base_clan_by_independent_rederivation() {
    for g in all_clans(7) {
        let b = base_clan(&g);
        assert_eq!(b.to_string(), naive_base(&g.to_string()), "{g}");
        assert_eq!(b.shape(), g.shape());
        assert_eq!(b.pair_count(), 0);
        assert_eq!(base_clan(&b), b);
    }
    assert_eq!(naive_base("-1212+"), "---+++");
}

#[test]
fn render_parse_round_trip() {
    for g in all_clans(8) {
        let text = g.to_string();
        assert_eq!(parse_clan(&text).unwrap(), g);
        assert_eq!(parse_clan(&format!("({text})")).unwrap(), g);
        assert_eq!(canonicalize(g.symbols()).unwrap(), g);
    }
}

#[test]
fn permutations_are_involutions() {
    for g in all_clans(8) {
        for sigma in [default_permutation(&g).unwrap(), underlying_involution(&g)] {
            for i in 1..=g.len() {
                assert_eq!(sigma.apply(sigma.apply(i)), i, "{g}: {sigma}");
            }
        }
    }
}

// The default permutation sends +-signed positions into 1..p and --signed ones
// into p+1..n, as required for the flag to represent the orbit of the clan.
#[test]
fn default_permutation_respects_signatures() {
    for g in all_clans(8) {
        let sigma = default_permutation(&g).unwrap();
        let signed = default_signed_clan(&g);
        for i in 1..=g.len() {
            let low = sigma.apply(i) <= g.p();
            assert_eq!(low, signed.effective_sign(i) == Sign::Plus, "{g} at {i}");
        }
    }
}

#[test]
fn base_clan_matrices_are_signed_involution_matrices() {
    for g in all_clans(7).filter(Clan::is_base) {
        let m = default_flag_matrix(&g).unwrap();
        assert!(m.is_signed_permutation(), "{g}");
        let n = g.len();
        let abs: Vec<Vec<i64>> = m.entries().iter().map(|r| r.iter().map(|v| v.abs()).collect()).collect();
        for i in 0..n {
            for j in 0..n {
                assert_eq!(abs[i][j], abs[j][i], "{g} not symmetric");
            }
        }
        assert_eq!(m.det_meta().abs(), 1);
    }
}

#[test]
fn flag_matrices_are_invertible() {
    for g in all_clans(7) {
        let m = default_flag_matrix(&g).unwrap();
        assert_eq!(m.det_meta().unsigned_abs(), 1u64 << g.pair_count(), "{g}");
    }
}

#[test]
fn statistics_invariants() {
    for g in all_clans(8) {
        let st = clan_statistics(&g);
        let n = g.len();
        assert!(st.plus_counts().windows(2).all(|w| w[0] <= w[1]));
        assert!(st.minus_counts().windows(2).all(|w| w[0] <= w[1]));
        assert_eq!(st.plus(n), g.p());
        assert_eq!(st.minus(n), g.q());
        for i in 1..=n {
            for j in i + 1..=n {
                assert!(st.pair(i, j) <= i.min(n - j), "{g}: ({i},{j})");
            }
        }
    }
}

#[test]
fn closed_form_count_beyond_naive_range() {
    for (p, q) in shapes(9) {
        assert_eq!(enumerate_clans(p, q).unwrap().len() as u128, clan_count(p, q));
    }
}

#[test]
fn enumeration_is_sorted_and_unique() {
    let all = enumerate_clans(3, 3).unwrap();
    assert!(all.windows(2).all(|w| w[0] < w[1]));
}

prop_compose! {
    fn raw_clan()(pairs in 0usize..4, signs in proptest::collection::vec(any::<bool>(), 0..5), seed in any::<u64>())
        -> Vec<ClanSymbol> {
        let mut syms: Vec<ClanSymbol> = signs
            .into_iter()
            .map(|b| if b { ClanSymbol::Plus } else { ClanSymbol::Minus })
            .collect();
        for k in 0..pairs {
            let label = 10 + 7 * k;
            syms.push(ClanSymbol::Pair(label));
            syms.push(ClanSymbol::Pair(label));
        }
        // deterministic shuffle from the seed
        let mut s = seed;
        for i in (1..syms.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            syms.swap(i, (s >> 33) as usize % (i + 1));
        }
        syms
    }
}

proptest! {
    #[test]
    fn canonicalize_is_idempotent(raw in raw_clan()) {
        prop_assume!(!raw.is_empty());
        let once = canonicalize(&raw).unwrap();
        prop_assert_eq!(canonicalize(once.symbols()).unwrap(), once.clone());
        prop_assert_eq!(parse_clan(&once.to_string()).unwrap(), once);
    }
}
