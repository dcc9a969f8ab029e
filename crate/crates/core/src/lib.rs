//! Exact symbolic computation in the Hopf algebra U_{g,h}, a two-parameter
//! extension of U_q(sl₂) by central group-like elements `g` and `h`.
//!
//! Everything is computed over the field ℚ(q) of rational functions, so
//! results are exact and `q` is never a root of unity.
//!
//! ```
//! use ugh_core::frontend::parse_element;
//!
//! let c = parse_element("E F - F E").unwrap();
//! assert_eq!(c.to_string(), "(1/(q - q^-1)) K - (1/(q - q^-1)) K^-1 g^2");
//! ```

pub mod center;
pub mod equitable;
pub mod error;
pub mod field;
pub mod frontend;
pub mod hopf;
pub mod linalg;
pub mod pbw;
pub mod rep;
pub mod verma;

pub use error::{Error, ParseError};
pub use field::{qfact, qint, RatFunc, Rational};
pub use pbw::{AlgebraElement, Generator, PbwMonomial};

/// Chapters of the guide in `book/`, compiled here so their snippets run as
/// doctests.
#[doc(hidden)]
pub mod guide {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/field.md")]
    pub mod field {}
    #[doc = include_str!("../../../book/src/pbw.md")]
    pub mod pbw {}
    #[doc = include_str!("../../../book/src/hopf.md")]
    pub mod hopf {}
    #[doc = include_str!("../../../book/src/center.md")]
    pub mod center {}
    #[doc = include_str!("../../../book/src/modules.md")]
    pub mod modules {}
    #[doc = include_str!("../../../book/src/verma.md")]
    pub mod verma {}
    #[doc = include_str!("../../../book/src/equitable.md")]
    pub mod equitable {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
}
