pub mod cli;
pub mod error;
pub mod expr;
pub mod independence;
pub mod parse;
pub mod linalg;
pub mod natural;
mod ops;
pub mod poly;
pub mod racah;
pub mod random;
pub mod render;
pub mod rep;
pub mod report;
pub mod scalar;
pub mod tensor;
pub mod usl2;

pub use error::Error;
pub use report::VerificationReport;
pub use scalar::Scalar;
pub use usl2::{PbwMonomial, USl2Element};
pub use natural::{embed, embed_nf};
pub use racah::{normalize, RacahExpr, RacahGen, RacahMonomial, RacahNF};
pub use tensor::TensorElement;
