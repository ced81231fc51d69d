//! Exact computations with SL(2) characters of free groups and trace
//! functions on punctured spheres and tori.
//!
//! Scalars live in a growing tower of quadratic extensions ([`qfield`]);
//! everything above is generic over [`scalar::Field`].

pub mod error;
pub mod farey;
pub mod fricke;
pub mod planar;
pub mod poly;
pub mod qfield;
pub mod scalar;

pub use error::{Error, Result};
pub use qfield::{Base, Elem, Tower};
pub use scalar::{Field, QuadClosed};
pub mod random;
pub mod sl2;
pub mod surfchar;
pub mod word;

pub use sl2::{Line, Mat2, Rep};
pub use word::Word;

/// Matrices over the default tower.
pub type Matrix = Mat2<Elem>;
/// Representations over the default tower.
pub type Representation = Rep<Elem>;
