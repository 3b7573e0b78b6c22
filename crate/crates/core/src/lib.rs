//! Enumeration of the distinct quartics (`W^{2,2}` sub-arrays) of a 2D
//! string in `O(n^2 log n)` time.

pub mod assembly;
pub mod blocks;
pub mod canonical;
pub mod error;
pub mod grid;
pub mod hash;
pub mod meta;
pub mod oracle;
pub mod pipeline;
pub mod seq;
pub mod thick;
pub mod thin;

pub use canonical::CanonicalPair;
pub use error::{Error, Result};
pub use hash::QuarticKey;
pub use grid::{load_grid, transpose, Grid, GridFormat};
pub use meta::{build_metastrings, GridIndex, MetaString, View};
pub use pipeline::{count_quartics, enumerate, Inventory, Options, Timings};
pub use seq::{Axis, Run};
pub use thick::Mode;
