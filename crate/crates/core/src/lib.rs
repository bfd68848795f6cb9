//! Exact dimension counts for linear systems of hypersurfaces in `P^n`
//! vanishing along general codimension-2 linear subspaces ("flats"),
//! possibly with multiplicity.
//!
//! The crate is organised bottom-up:
//!
//! * [`exactmath`]: big integers and binomials with polynomial semantics.
//! * [`hilbert`]: the closed-form count for multiplicity-1 schemes and the
//!   memoized hyperplane-peeling recursion for the virtual dimension of
//!   arbitrary fat-flat schemes.
//! * [`bounds`]: upper and lower bounds for the actual dimension of
//!   multiplicity-1 schemes, and the exact value on the Veneroni family.
//! * [`veneroni`]: the formal pullback of linear systems under the
//!   Veneroni map.
//! * [`oracle`]: a brute-force rank computation over a prime field that
//!   estimates actual dimensions at desk scale.
//! * [`classify`]: unexpected / missing-expected classification of the
//!   Veneroni family and parameter scans.
//! * [`verify`]: the headless property and golden-value runner.

pub mod bounds;
pub mod classify;
pub mod error;
pub mod exactmath;
pub mod hilbert;
pub mod oracle;
pub mod veneroni;
pub mod verify;

pub use bounds::{
    adim_family, adim_upper_mult1, family_conditions_check, lower_certificate, report_mult1,
    DimensionReport, DimensionStatus,
};
pub use classify::{classify_family, scan, scan_parallel, ClassificationRecord, Verdict};
pub use error::{Error, Result};
pub use exactmath::{polybinom, ExactInt};
pub use hilbert::{
    cap_index, conditions_fat_flat, hilbert_poly_value, s_formula, vdim_recursive, FatFlatScheme,
    VdimMemo,
};
pub use oracle::{adim_rank_oracle, OracleConfig};
pub use veneroni::{family_source, veneroni_pullback, LinearSystem};
