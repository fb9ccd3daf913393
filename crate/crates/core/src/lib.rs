//! Pancake and star interconnection networks, constructive embeddings of
//! rings, lines, grids and hypercubes into them, and exhaustive
//! breadth-first verification of the dilation and congestion bounds at
//! desk scale.
//!
//! The host networks are Cayley graphs of the symmetric group: the
//! pancake network under prefix reversals and the star network under
//! position-1 transpositions. Guests are embedded through explicit
//! vertex maps (Hamiltonian generator sequences, cyclic-shift row
//! constructions, and two mixed-radix permutation codings), each with a
//! declared dilation bound and, where a constructive proof chain exists,
//! per-edge host routes. The `verify` module measures the truth.

pub mod embedding;
pub mod error;
pub mod io;
pub mod perm;
pub mod representation;
pub mod routing;
pub mod suite;
pub mod topology;
pub mod verify;

pub use embedding::{
    embed_ghc_pancake, embed_ghc_star, embed_grid_family, embed_grid_nfact,
    embed_hypercube_via_mixed_grid, embed_line, embed_mixed_grid_pancake, embed_mixed_grid_star,
    embed_qd_via_ghc, embed_ring, hamiltonian_cycle, pancake_sequence, Construction, Embedding,
};
pub use error::{Error, Result};
pub use perm::{apply_gen_seq, factorial, CyclicShift, GenSeq, Permutation};
pub use representation::{
    diff3_decompose, left_count_decode, left_count_encode, rule_r_decode, rule_r_encode, Diff3,
    MixedRadixLabel,
};
pub use routing::{
    bfs_shortest_path, route_ghc_pancake, route_ghc_star, route_grid_family_step,
    route_mixed_grid_pancake, route_mixed_grid_star, route_sigma, validate_path, CheckOutcome,
    HostPath, Move,
};
pub use topology::{pancake_neighbors, star_neighbors, subpancake_of, GraphKind, Vertex};
pub use verify::{
    bfs_distance_between, bfs_from_identity, bfs_from_identity_with_cap, cayley_distance,
    check_generator_identity, check_hamiltonian, check_no_4cycle, measure, verify_cycle_order,
    CongestionSource, DistanceTable, EmbedReport, DEFAULT_DIMENSION_CAP,
};
