//! Stabilizer codes for the amplitude-damping channel built by concatenation,
//! with exact verification of effective distance and AD-error detection.
//!
//! Errors are handled in the phaseless Pauli group. Under the effective weight,
//! `X` and `Y` factors count 1 and `Z` factors count 2; a code with effective
//! distance `2t + 1` detects every product of `t` single-AD Pauli errors.
//!
//! ```
//! use adcodes::{builtin, concatenate, make_qr, min_distance, ConcatSpec, Metric, SearchConfig, Variant};
//!
//! let outer = builtin("five_one_three").unwrap().into_block_code().unwrap();
//! let spec = ConcatSpec::new(make_qr(2).unwrap(), outer, Variant::FirstTrivial).unwrap();
//! let code = concatenate(&spec).unwrap();
//! assert_eq!((code.n(), code.k()), (9, 1));
//! let d = min_distance(&code, &Metric::Effective, None, &SearchConfig::default()).unwrap();
//! assert_eq!(d.value(), Some(5));
//! ```

pub mod ad_errors;
pub mod bits;
pub mod catalog;
pub mod cli;
pub mod concat;
pub mod distance;
pub mod error;
pub mod format;
pub mod gf2;
pub mod params;
pub mod pauli;
pub mod stabilizer;

pub use ad_errors::{certify_t_code, gen_a1, gen_at, Certification, CertifyMode, ErrorSet};
pub use bits::BitVec;
pub use catalog::{builtin, qmds_params, table_rows, Builtin, OuterParams, QmdsFamily, TableSource};
pub use concat::{concatenate, expected_params, inner_image, make_qr, BlockCode, ConcatSpec, RawParams, Variant};
pub use distance::{
    min_distance, min_distance_with, BlockLayout, DistanceOutcome, DistanceReport, Metric, Restriction,
    SearchConfig, Strategy,
};
pub use error::{Error, Result};
pub use gf2::Gf2Matrix;
pub use params::{CodeParams, Provenance};
pub use pauli::{commutes, multiply, parse_pauli, render_pauli, PauliString};
pub use stabilizer::{Detection, Logicals, StabilizerCode};
