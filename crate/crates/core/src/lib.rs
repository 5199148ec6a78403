//! A workbench for multicolour size-Ramsey numbers of paths.
//!
//! The crate builds the random host `G(7rn, 22 ln(r) / n)`, runs the phased
//! depth-first search that either extracts a monochromatic `P_n` from any
//! `r`-colouring of it or points at a phase that breaks the host's pair
//! density property, and checks everything it can against exhaustive
//! oracles at small sizes.
//!
//! ```
//! use sizeramsey::{adversary_colour, build_host, find_monochromatic_path, verify_path};
//! use sizeramsey::{DfsOutcome, RamseyParams, Strategy, DEFAULT_RETRY_LIMIT};
//!
//! let params = RamseyParams::new(40, 2)?;
//! let (host, report) = build_host(&params, 7, DEFAULT_RETRY_LIMIT)?;
//! assert!(report.satisfies_ii);
//!
//! let colouring = adversary_colour(&host, 40, 2, Strategy::UniformRandom, 1)?;
//! let cert = find_monochromatic_path(&host, &colouring, 40, false)?;
//! assert_eq!(cert.outcome, DfsOutcome::PathFound);
//! assert!(verify_path(&host, &colouring, cert.path.as_ref().unwrap(), 40, cert.colour));
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod adversary;
pub mod bounds;
pub mod dfs;
pub mod expansion;
pub mod format;
pub mod graph;
pub mod model;
pub mod oracle;
mod reals;

pub use adversary::{adversary_colour, Strategy};
pub use bounds::{
    bound_table, chernoff_failure_bound, expected_host_edges, expected_pair_edges,
    union_bound_coefficient, union_bound_failure, BoundEntry, BoundVariant, ChernoffBound,
};
pub use dfs::{
    check_contradiction_chain, dfs_grow, find_monochromatic_path, phase_run, ChainReport,
    DfsCertificate, DfsOutcome, DfsState, PhaseRecord, StartPolicy, Transition,
};
pub use expansion::{
    check_expansion_exact, check_expansion_monte_carlo, validate_witness, ExactOutcome,
    ExpansionWitness, MonteCarloOutcome,
};
pub use graph::{
    induced_edge_count, monochromatic_subgraph, verify_path, Colour, Colouring, Graph,
    GraphError, Path, Vertex, VertexSet,
};
pub use model::{
    build_host, derive_seed, sample_gnp, RamseyParams, SampleReport, DEFAULT_RETRY_LIMIT,
};
pub use oracle::{arrows_decide, longest_path_exact, min_size_ramsey, ArrowVerdict, Enumeration};

// Code blocks in the guide under `book/` run as doc-tests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/host.md")]
    mod host {}
    #[doc = include_str!("../../../book/src/expansion.md")]
    mod expansion {}
    #[doc = include_str!("../../../book/src/phases.md")]
    mod phases {}
    #[doc = include_str!("../../../book/src/oracles.md")]
    mod oracles {}
}
