//! Crystallographic Coxeter systems and exact element arithmetic.

mod element;
mod group;
mod matrix;
pub mod presets;
mod star;
mod word;

pub use element::Element;
pub use group::{Group, GroupSpec};
pub use star::{Star, StarKind};
pub use word::{GeneratorId, Word};
