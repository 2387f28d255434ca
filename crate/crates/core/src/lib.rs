//! Ordered construction of primitive Pythagorean triples from the partitions
//! of a generating square's side, together with their inversion, gnomon
//! decomposition and scaling.
//!
//! ```
//! use gnomonic::{construct, invert, Partition};
//!
//! let p = Partition::new(40, 41).unwrap();
//! let t = construct(&p).unwrap();
//! assert_eq!(t.as_tuple(), (4961, 6480, 8161));
//! assert_eq!(invert(4961, 6480, 8161).unwrap(), p);
//! ```

mod arith;
pub mod diagram;
pub mod enumerate;
mod error;
pub mod gnomon;
pub mod oracle;
pub mod partition;
pub mod triple;

pub use arith::exact_sqrt;
pub use enumerate::{index_of, render_table, stream, OrderIndex, TableFormat, TableRow};
pub use error::{Error, Result};
pub use gnomon::{gnomon_pair, overlap_terms, scaled_gnomon_pair, GnomonPair, GnomonProgression};
pub use partition::{enumerate_partitions, factor_side, partition_count, Partition, Side};
pub use triple::{construct, decompose_general, invert, scale, GeneralTriple, PrimitiveTriple};
