//! Construction and certification of LCD and quasi-cyclic complementary dual
//! (QCCD) codes over finite fields.
//!
//! Every criterion implemented here is paired with a brute-force oracle
//! (hull dimension of the expanded code, exhaustive enumeration) so that
//! verdicts can be cross-checked on demand.

pub mod cli;
pub mod construct;
pub mod cyclic;
pub mod error;
pub mod field;
mod linalg;
pub mod lincode;
pub mod poly;
pub mod qc;
mod util;
mod weights;

pub use cyclic::CyclicCode;
pub use error::{Error, Result};
pub use field::{make_field, FieldElement, FieldRef, FiniteField};
pub use lincode::{Form, LinearCode};
pub use poly::{factor_xm_minus_1, FactorProfile, Poly, Slot};
pub use qc::{ConstituentSet, QcCode};
