//! Exact p-domination numbers of complete multipartite graphs.
//!
//! A vertex set `D` of a graph is *p-dominating* when every vertex outside
//! `D` has at least `p` neighbours inside it. For the complete t-partite
//! graph `K(n_0, .., n_{t-1})` the minimum size of such a set has a closed
//! form,
//!
//! ```text
//! gamma_p = min { s1, p + s2 }
//! ```
//!
//! where `s1` is the smallest total size of a collection of whole parts
//! reaching `p`, and `s2` is the smallest per-part demand over the family of
//! admissible part collections (see [`subset_opt`]).
//!
//! The crate is organised as follows:
//!
//! * [`parts`] holds the multipartite description ([`PartSizes`]) and part
//!   index subsets ([`PartSet`]).
//! * [`subset_opt`] computes `s1` and `s2` with canonical witnesses.
//! * [`gamma`] combines them into a [`GammaBreakdown`].
//! * [`witness`] builds an explicit minimum p-dominating set.
//! * [`oracle`] provides explicit graphs, a verifier and two brute-force
//!   solvers that know nothing about the formula.
//! * [`io`] covers the text formats used by the `pdom` binary.
//!
//! ```
//! use pdom::{compute_gamma, Case, PartSizes};
//!
//! let parts = PartSizes::new(vec![2, 2, 10, 17]).unwrap();
//! let b = compute_gamma(&parts, 6).unwrap();
//! assert_eq!(b.gamma, 8);
//! assert_eq!(b.case, Case::Balanced);
//! ```

pub mod error;
pub mod gamma;
pub mod io;
pub mod oracle;
pub mod parts;
mod reach;
pub mod subset_opt;
pub mod witness;

pub use error::{Error, Result};
pub use gamma::{compute_gamma, Case, GammaBreakdown};
pub use oracle::{
    count_vector_gamma, exact_gamma_generic, expand_graph, is_p_dominating, GenericMode, Graph,
    Limits, VertexSet,
};
pub use parts::{subset_weight, PartSet, PartSizes};
pub use subset_opt::{
    demand, is_admissible, min_demand, min_demand_fast, min_sum_at_least, DemandValue,
};
pub use witness::{balanced_fill, build_witness, realize, BalancedFillParams, WitnessCounts};
