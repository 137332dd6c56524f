use proptest::prelude::*;
use sects_core::*;

// Builds steps whose diagonal weights are admissible when processed in order.
fn admissible(choices: Vec<(u8, u16)>) -> Vec<DelannoyStep> {
    let mut len = 0usize;
    choices
        .into_iter()
        .map(|(kind, w)| {
            let step = match kind % 3 {
                0 => DelannoyStep::N,
                1 => DelannoyStep::E,
                _ => DelannoyStep::D(1 + w as usize % (len + 1)),
            };
            len += if matches!(step, DelannoyStep::D(_)) { 2 } else { 1 };
            step
        })
        .collect()
}

proptest! {
    #[test]
    fn output_is_a_lattice_path(choices in proptest::collection::vec((any::<u8>(), any::<u16>()), 0..20)) {
        let w = WeightedDelannoyPath::new(admissible(choices)).unwrap();
        let out = delannoy_to_lattice(&w).unwrap();
        prop_assert_eq!((out.p(), out.q()), (w.p(), w.q()));
        prop_assert_eq!(out.len(), w.p() + w.q());
    }

    #[test]
    fn render_parse_round_trip(choices in proptest::collection::vec((any::<u8>(), any::<u16>()), 1..20)) {
        let w = WeightedDelannoyPath::new(admissible(choices)).unwrap();
        prop_assert_eq!(parse_delannoy(&w.to_string()).unwrap(), w);
    }
}

#[test]
fn base_clan_paths_round_trip() {
    for n in 2..=8 {
        for p in 1..n {
            for subset in BasisSubset::all(n, p) {
                let path = lattice_path(&subset);
                let tokens: Vec<String> = path.to_string().chars().map(String::from).collect();
                let w = parse_delannoy(&tokens.join(" ")).unwrap();
                assert_eq!(delannoy_to_lattice(&w).unwrap(), path);
                assert_eq!(base_clan_of_subset(&subset).to_string().replace('+', "E").replace('-', "N"), path.to_string());
            }
        }
    }
}

#[test]
fn inadmissible_weight_is_reported() {
    let w = parse_delannoy("D:2").unwrap();
    assert!(matches!(
        delannoy_to_lattice(&w),
        Err(Error::WeightOutOfRange { step: 1, weight: 2, max: 1 })
    ));
}
