//! Clifford algebra engine for arbitrary signatures G(p,q,r), with a layer
//! that builds the stabilizer algebra of a lightlike direction and renders
//! relative-view figures of the result.

pub mod algebra;
pub mod cli;
pub mod little;
pub mod report;
pub mod suite;
pub mod view;

pub use algebra::{
    exp_bivector, parse_multivector, Algebra, Blade, Error, Multivector, ParseError, Rotor,
    Signature,
};
pub use little::{LittleAlgebra, LittleError};
pub use report::Report;
pub use view::{Scene, SplitResult, ViewError};
