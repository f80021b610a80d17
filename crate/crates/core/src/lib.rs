//! Optimal vertex rankings and good edges for four graph families: paths
//! `P_{2^k - 1}`, cycles `C_{2^k}`, complete multipartite graphs and two
//! cliques joined by an edge.
//!
//! A *ranking* labels vertices with positive integers so that every path
//! between two equally labeled vertices passes through a larger label; the
//! *rank number* `χ_r` is the fewest labels that suffice. A non-edge is
//! *good* if adding it keeps `χ_r`, and `μ(G)` is the size of the largest set
//! of non-edges that can be added together without raising `χ_r`.
//!
//! * [`graph`]: bitset graphs on vertices `1..=n`.
//! * [`ranking`]: the validity check and the closed-form optimal rankings.
//! * [`family`]: family parameters and their concrete graphs.
//! * [`constructive`]: explicit good-edge sets and the `μ` formulas.
//! * [`oracle`]: exact search for rank numbers, good edges, `μ` and optimal
//!   rankings, used to check everything above.
//! * [`verify`], [`export`], [`cli`]: claim reports, JSON/DOT output and the
//!   command-line front end.
//!
//! ```
//! use edge_ranking::{constructive, family::FamilySpec, oracle};
//!
//! let spec: FamilySpec = "path:4".parse().unwrap();
//! let g = edge_ranking::family::build_family(&spec).unwrap();
//! let good = constructive::good_edges(&spec, constructive::Reading::Corrected).unwrap();
//! assert_eq!(good.len(), 20);
//! let best = oracle::max_good_set(&g, &oracle::OracleConfig::default()).unwrap();
//! assert_eq!(best.mu(), 20);
//! ```

pub mod cli;
pub mod constructive;
pub mod error;
pub mod export;
pub mod family;
pub mod graph;
pub mod oracle;
pub mod ranking;
pub mod verify;

pub use error::{Error, Result};
pub use family::FamilySpec;
pub use graph::{Edge, Graph, VertexSet};
pub use ranking::Ranking;
