//! Exact computer-algebra kernel for codimension-two Cohen-Macaulay
//! ideals: Hilbert-Burch matrices, Groebner bases, free resolutions,
//! Buchsbaum-Rim complexes, Rees algebras and plane point configurations.

// index loops over parallel row/shift arrays read better than iterator chains
#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod field;
pub mod groebner;
pub mod ideal;
pub mod matrix;
pub mod modgb;
pub mod points;
pub mod poly;
pub mod rees;
pub mod resolution;
pub mod ring;
pub mod verify;

pub use error::{AlgebraError, Result};
pub use field::{Coeff, CoeffField};
pub use groebner::{divide_track, eliminate, groebner_basis, Budget, GroebnerBasis};
pub use ideal::{echelon_span, HilbertData, Ideal};
pub use points::{position_report, PointSet, PositionReport};
pub use poly::{parse, Multidegree, Polynomial};
pub use ring::{MonomialOrder, PolyRing};
