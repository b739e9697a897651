//! Hamiltonicity of generalized lexicographic products `P_m[H_1, .., H_m]`:
//! the product of a path `u_1 .. u_m` in which `u_i` is replaced by a graph
//! `H_i` (all of order `n`) and consecutive layers are completely joined.
//!
//! Verdicts depend only on `pi(H_i)`, the edge count of a maximum spanning
//! linear forest of each layer ([`forest::pi`]). Positive verdicts come with
//! witnesses ([`witness::construct`]) that [`verify`] checks independently;
//! [`oracle`] provides brute-force ground truth for small instances.
//!
//! ```
//! use lexham::{construct, decide_spec, Goal, ProductSpec, Property, SimpleGraph};
//!
//! let h = lexham::graph::disjoint_union(&SimpleGraph::path(3), &SimpleGraph::empty(3));
//! let spec = ProductSpec::uniform(5, h).unwrap();
//! assert!(decide_spec(&spec, Property::Hamiltonian).unwrap().verdict);
//! let built = construct(&spec, Goal::Cycle).unwrap();
//! let walk = &built.witness().unwrap().walk;
//! assert!(lexham::verify::verify_walk(&spec, walk, None).is_ok());
//! ```

pub mod decide;
pub mod dot;
pub mod error;
pub mod forest;
pub mod graph;
pub mod multiple;
pub mod oracle;
pub mod product;
pub mod verify;
pub mod witness;

pub use decide::{decide, decide_spec, decide_uniform, Condition, Decision, Property};
pub use error::{Error, Result};
pub use forest::{max_linear_forest, pi};
pub use graph::{LinearForest, PathMultigraph, ProductVertex, ProductWalk, SimpleGraph};
pub use product::{build_product, ProductSpec};
pub use witness::{construct, Construction, Goal, Witness};
