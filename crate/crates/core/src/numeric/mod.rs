//! Small numerical building blocks: quadrature and dense linear solves.

pub mod linalg;
pub mod quadrature;

pub use linalg::{invert, solve};
pub use quadrature::{adaptive_simpson, GaussLegendre};
