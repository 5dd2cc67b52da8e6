//! Exact weight-module theory for generalized Weyl algebras of translation type.
//!
//! The algebras covered are `A = R(sigma, t)` with `R = k[T_1, ..., T_n]`,
//! `sigma_i(T_j) = T_j - delta_ij b_i` and nonconstant `t_i in k[T_i]`, over the
//! working field `k = Q(i)`. The crate computes weight spaces and submodules of
//! the cyclic modules `M(m) = A / A m`, supports of their simple tops `L(m)`,
//! Zariski closures of those supports, the annihilators `Ann_A L(m)`, the full
//! finite list of primitive ideals, and a refinement replacing any simple weight
//! module by a highest weight module with the same annihilator.

pub mod cli;
pub mod error;
pub mod exactnum;
pub mod gwa;
pub mod primitive;
pub mod verma;
pub mod weight;

pub use error::{Error, Result};
pub use exactnum::{GaussianRational, Rational, RingElement, UnivariateFactored};
pub use gwa::{multiply, verify_relations, Generator, GwaElement, GwaSpec};
pub use weight::{ClosedCoord, ClosedSet, Interval, SupportRect, WeightPoint};
