//! Majority edge-colorings of graphs.
//!
//! A `k`-edge-coloring is a *majority* coloring when, at every vertex, no
//! color appears on more than half of the incident edges. This crate builds
//! such colorings constructively and checks them:
//!
//! * [`euler`]: 2-colorings with at most `ceil(d/2)` edges per color, from
//!   Euler tours;
//! * [`proper`]: majority 4-colorings for minimum degree 2 and `1/k`-majority
//!   `(k+2)`-colorings, by vertex splitting and Misra–Gries;
//! * [`majority3`]: majority 3-colorings for minimum degree 4, via the
//!   Gallai–Edmonds decomposition ([`matching`]) and a max-flow edge
//!   selection ([`flow`]);
//! * [`randomized`]: `1/k`-majority `(k+1)`-colorings by random resampling;
//! * [`verify`] and [`oracle`]: exact checkers and an exhaustive search for
//!   small graphs.

pub mod coloring;
pub mod error;
pub mod euler;
pub mod flow;
pub mod generate;
pub mod graph;
pub mod io;
pub mod majority3;
pub mod matching;
pub mod oracle;
pub mod proper;
pub mod randomized;
pub mod report;
pub mod verify;

pub use coloring::{Color, EdgeColoring};
pub use error::{Error, Result};
pub use euler::{balanced_2coloring, balanced_2coloring_pinned, euler_tour, EulerTour};
pub use flow::{max_flow, select_edges, FlowNetwork, IntegralFlow};
pub use graph::{
    connected_components, induced_subgraph, split_vertex, Adjacency, EdgeId, EdgeOrigin, Graph,
    Multigraph, SplitMap, Vertex,
};
pub use majority3::{majority3, EOnePartition};
pub use matching::{gallai_edmonds, max_matching, GeDecomposition, Matching};
pub use oracle::brute_min_colors;
pub use proper::{alpha_majority_k2, kk_parts, majority4, mod3_parts, proper_edge_coloring};
pub use randomized::{random_coloring, resample_until_valid, ResampleConfig};
pub use report::{ColoringReport, Criterion, Params};
pub use verify::{verify_alpha, verify_majority, Alpha, Violation};
