//! Ext-algebras of simple and standard modules over bound quiver algebras and their
//! dual extensions, transferred A∞-structures, and the regular exact Borel
//! subalgebra computed from them.
//!
//! All arithmetic is exact. The core is generic over [`Scalar`]; [`Rational`] is the
//! default field and `Fp<P>` gives prime fields.

pub mod boxes;
pub mod error;
pub mod ext;
pub mod family;
pub mod linalg;
pub mod module;
pub mod presentation;
pub mod algebra;
pub mod resolution;
pub mod scalar;
pub mod transfer;

pub use error::{Error, Result};
pub use scalar::{Fp, Scalar};

/// Exact rationals, the default ground field.
pub type Rational = num_rational::BigRational;

pub type F2 = Fp<2>;
pub type F3 = Fp<3>;
pub type F5 = Fp<5>;
pub type F7 = Fp<7>;

pub type Matrix = linalg::Matrix<Rational>;
pub type Presentation = presentation::Presentation<Rational>;
pub type Algebra = algebra::Algebra<Rational>;
pub type Module = module::Module<Rational>;
pub type Resolution = resolution::Resolution<Rational>;
pub type ExtTable = ext::ExtTable<Rational>;
pub type Transfer = transfer::Transfer<Rational>;
