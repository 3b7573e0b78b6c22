//! One-dimensional machinery applied to every metastring.

pub mod index;
pub mod runs;
pub mod text;

pub use index::{Progression, SeqIndex};
pub use runs::{compute_runs, Run};
pub use text::{lce, lcs, Axis, MetaText, PlainText, Text};
