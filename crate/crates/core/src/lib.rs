//! Exact enumeration of plane-partition symmetry classes, the bijections
//! and involutions relating them, and the determinant and product formulas
//! that count them.

pub mod closedform;
pub mod cspp;
pub mod domino;
pub mod enumerate;
pub mod error;
pub mod exact;
pub mod partition;
pub mod tspp;
pub mod verify;

pub use cspp::{Cspp, CsppInvolution};
pub use domino::{DominoClass, DominoTableau, PairKind, PairedPP, Tile, TileKind};
pub use enumerate::{EnumOptions, DEFAULT_LIMIT};
pub use error::{Error, Result};
pub use partition::Partition;
pub use tspp::{Tspp, TsppInvolution};
