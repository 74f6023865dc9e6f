//! Upper domination: binary programming models, an exact branch-and-bound
//! solver, exhaustive oracles, and generators for the standard graph
//! families with known upper domination numbers.
//!
//! ```
//! use updom::{solve, Formulation, InstanceSpec};
//!
//! let g = "gen_petersen:5,2".parse::<InstanceSpec>()?.generate()?;
//! let model = Formulation::F1.build(&g);
//! let result = solve(&model, 60.0)?;
//! assert_eq!(result.objective, Some(5));
//! # Ok::<(), updom::Error>(())
//! ```

pub mod bounds;
pub mod corpus;
pub mod error;
pub mod graph;
pub mod instance;
pub mod lp;
pub mod model;
pub mod oracle;
pub mod solver;

pub use bounds::{bazgan_bounds, rosenfeld_bound, BoundsReport};
pub use error::{Error, Result};
pub use graph::{Graph, Vertex, VertexSet};
pub use instance::{Family, InstanceSpec};
pub use lp::export_lp;
pub use model::{
    build_domination, build_f1, build_f2, encode_f1, encode_f2, Assignment, Feasibility,
    Formulation, GammaCertificate, LinearModel, Provenance, Relation, Sense, VarKind,
};
pub use oracle::{
    alpha_oracle, enumerate_minimal_dominating, gamma_oracle, greedy_minimal_dominating,
    Enumeration, ORACLE_MAX_VERTICES,
};
pub use solver::{solve, solve_with, SolveOptions, SolveResult, Status};

/// Starting incumbent for `formulation` on `g`, built from
/// [`greedy_minimal_dominating`].
pub fn warm_start(g: &Graph, formulation: Formulation) -> Assignment {
    formulation
        .encode(g, &greedy_minimal_dominating(g))
        .expect("greedy sets are minimal dominating")
}
