//! Generalized co-letterplace ideals: explicit minimal free resolutions,
//! Betti numbers, homological shift ideals, powers, and the associated
//! simplicial spheres and balls.

pub mod betti;
pub mod error;
pub mod guards;
pub mod hom;
pub mod homology;
pub mod ideal;
pub mod instance;
pub mod letterplace;
pub mod linalg;
pub mod monomial;
pub mod oracle;
pub mod poly;
pub mod poset;
pub mod powers;
pub mod random;
pub mod resolution;
pub mod ring;
pub mod shift;
pub mod simplicial;
pub mod sweep;

pub use error::{Error, Result};
pub use guards::Guards;
pub use hom::{AlphabetMap, HomSpace, IsotoneMap, PosetIdeal};
pub use ideal::MonomialIdeal;
pub use monomial::Monomial;
pub use poly::Poly;
pub use poset::Poset;
pub use ring::Ring;
