//! Combinatorics of `(p,q)`-clans: Bruhat order, the sect decomposition over
//! Schubert cells of the Grassmannian, and the isomorphism between the big
//! sect of `C(p,p)` and the rook monoid `R_p`.
//!
//! ```
//! use sects_core::{build_poset, enumerate_clans, extremal_elements};
//!
//! let poset = build_poset(enumerate_clans(2, 2).unwrap()).unwrap();
//! assert_eq!(poset.covers().len(), 38);
//! let (_, top) = extremal_elements(&poset);
//! assert_eq!(top[0].to_string(), "1221");
//! ```

pub mod bruhat;
pub mod clan;
pub mod delannoy;
pub mod error;
pub mod matrix;
pub mod perm;
pub mod poset;
pub mod rook;
pub mod sects;

pub use bruhat::{build_poset, embed_clan, extremal_elements, leq_via_involution, wyser_leq};
pub use clan::{
    base_clan, canonicalize, clan_count, clan_statistics, default_flag_matrix,
    default_permutation, default_signed_clan, enumerate_clans, enumerate_clans_bounded,
    parse_clan, underlying_involution, Clan, ClanStatistics, ClanSymbol, Sign, SignedClan,
    DEFAULT_MAX_N,
};
pub use delannoy::{delannoy_to_lattice, parse_delannoy, DelannoyStep, WeightedDelannoyPath};
pub use error::{Error, Result};
pub use matrix::IntegerMatrix;
pub use perm::Involution;
pub use poset::{Poset, PosetJson};
pub use rook::{
    clan_to_rook, enumerate_rooks, enumerate_rooks_bounded, involution_leq, rank_control,
    rook_count, rook_leq, rook_to_involution, verify_dense_iso, verify_dense_iso_bounded, Corner,
    IsoReport, RankControlMatrix, RookMatrix,
};
pub use sects::{
    base_clan_of_subset, cell_dimension, dense_sect, dense_sect_bounded, gamma_max,
    is_upper_order_ideal, lattice_path, path_leq, sect_of_clan, sect_partition,
    sect_partition_bounded, subset_of_base_clan, BasisSubset, DenseSect, LatticePath, Sect,
    SectJson, Step,
};
