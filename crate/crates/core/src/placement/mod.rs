//! Center-outward sequential deployment of the remaining PAs.

mod candidates;
mod order;
mod result;
mod sequential;
mod span;

pub use candidates::{aligned_candidates, candidate_positions, linearized_slope, Candidate, CandidateSet};
pub use order::{center_index, deployment_order, DeploymentOrder, Side};
pub use result::{PlacementResult, Scheme, StepRecord};
pub use sequential::{
    benchmark_place, oracle_greedy_place, place_all, place_all_from_center, place_next, PlacementState,
    DEFAULT_CANDIDATES_PER_ANTENNA, ORACLE_SEARCH_WAVELENGTHS,
};
pub use span::{min_span, min_span_select, SpanSelection};
