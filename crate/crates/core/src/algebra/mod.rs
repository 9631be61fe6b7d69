//! Exact arithmetic: rationals, polynomials, rational functions with
//! linear-form denominators, and products of `t^N - 1`.

pub mod bivariate;
pub mod linform;
pub mod mpoly;
pub mod rat;
pub mod ratfunc;
pub mod roots;
pub mod series;
pub mod unity;
pub mod upoly;

pub use linform::LinForm;
pub use mpoly::MPoly;
pub use rat::Rat;
pub use ratfunc::{RatFunc1, RatFuncMulti};
pub use roots::{rational_roots, upoly_rational_roots};
pub use series::series_expand;
pub use unity::UnityRat;
pub use upoly::UPoly;
