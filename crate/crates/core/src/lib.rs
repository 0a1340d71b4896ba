pub mod cli;
pub mod divalg;
pub mod error;
pub mod ext;
pub mod laurent;
pub mod normalize;
pub mod quatcentral;
pub mod quotient;
pub mod random;
pub mod skewpoly;
pub mod subst;

pub use error::{Error, Result};
