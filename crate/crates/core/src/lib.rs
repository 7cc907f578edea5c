//! Tournaments, intervals and critical vertices.
//!
//! A tournament on `0..n` (`n <= 64`) is stored as one out-neighbour bit mask
//! per vertex. Vertex sets are `u64` masks as well.

pub mod canon;
pub mod decomposition;
pub mod error;
pub mod generators;
pub mod graph;
pub mod record;
pub mod tournament;
pub mod verification;
pub mod vertex_set;
pub mod w5;

pub use canon::{canonical_code, canonical_form, is_isomorphic, isomorphism, CanonicalCode};
pub use decomposition::{
    check_sayar, critical_vertices, interval_closure, is_indecomposable, is_indecomposable_on,
    is_interval, is_partially_critical, nontrivial_intervals, outside_graph, outside_partition,
    support, ComponentReport, OutsidePartition, QBlock, SayarReport,
};
pub use error::{Error, Result};
pub use generators::{
    assemble_family, assemble_family_detailed, c3, gen_b6, gen_critical, gen_g2n, gen_h_figure3,
    gen_paley7, total_order, Assembly, CriticalKind, Family, FamilySpec,
};
pub use graph::UndirectedGraph;
pub use record::{parse_record, parse_records, to_record};
pub use tournament::{Tournament, MAX_VERTICES};
pub use verification::{
    enumerate_codes, enumerate_tournaments, verify_hik, verify_latka, verify_lemma_suite,
    verify_main, verify_sayar, Census, CensusEntry, EnumOptions, VerdictReport,
};
pub use vertex_set::VertexSet;
pub use w5::{
    c_invariant, embeds, find_embedding, is_family_t_member, is_minimal_for_pair, minimal_pairs,
    w5_set, w5_vertex_set, W5Report,
};
