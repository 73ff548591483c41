//! Synchronous (Mealy) transducers over `{0, …, n-1}`: products,
//! minimization, cores, synchronization, and the growth of
//! `|min Core(A^m)|` with `m`.
//!
//! ```
//! use synchro::{catalog, growth};
//!
//! let shift = catalog::builtin("shift2").unwrap().machine;
//! let series = growth::growth_series(&shift, 4).unwrap();
//! let sizes: Vec<_> = series.records.iter().map(|r| r.min_core_size).collect();
//! assert_eq!(sizes, [2, 4, 8, 16]);
//! ```

pub mod algebra;
pub mod catalog;
pub mod error;
pub mod growth;
pub mod oracle;
pub mod sync;
pub mod transducer;
pub mod verify;
pub mod word;

pub use algebra::{
    act_periodic, conjugate, fixed_letter_state, level_transformation, min_core, minimize,
    monoid_product, omega_equivalent, power, product, FixedLoop, LevelTransformation, NormalForm,
};
pub use error::{Error, ParseError, Result};
pub use growth::{growth_series, GrowthRecord, GrowthSeries};
pub use sync::{bisync_level, core, core_dist, is_core, sync_level, sync_map, SyncMap, SyncProfile};
pub use transducer::Transducer;
pub use word::{Letter, PeriodicWord, Word};
