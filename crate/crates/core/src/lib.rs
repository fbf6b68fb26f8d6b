//! Skew partitions, their rank and zrank, the value `y(λ/μ)` computed by
//! several independent formulas, and restricted Cauchy matrices.

pub mod bounds;
pub mod cauchy;
pub mod code;
pub mod error;
pub mod formulas;
pub mod linalg;
pub mod poly;
pub mod shape;
pub mod snake;
pub mod specialization;
pub mod strip;
pub mod verify;

pub use code::{reduced_code, ReducedCode};
pub use error::{Error, Result};
pub use poly::{RatPoly, Rational};
pub use shape::{enumerate_shapes, enumerate_shapes_in_box, parse_shape, Cell, Partition, SkewShape};
pub use snake::{snake_sequence, IntervalSet, SnakeSequence, SnakeSymbol};
