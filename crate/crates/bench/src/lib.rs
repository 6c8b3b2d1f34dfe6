//! Shared inputs for the criterion benchmarks: mid-sized contexts that are
//! representative of interactive use.

use hitchin_core::divisor::Divisor;
use hitchin_core::redfibre::StrataContext;
use hitchin_core::spectral::{BaseData, SectionData};

/// A three-point square-root divisor of degree 6.
pub fn medium_sqrt_divisor() -> Divisor {
    "3p+2q+r".parse().expect("valid divisor")
}

/// A strata context with a few hundred strata.
pub fn medium_context() -> StrataContext {
    StrataContext::new(4, 5, medium_sqrt_divisor()).expect("valid context")
}

/// A singular irreducible input with mixed node and cusp multiplicities.
pub fn mixed_section() -> (BaseData, SectionData) {
    let base = BaseData::new(3, 6, 1).expect("valid base");
    let d_s: Divisor = "4p+3q+3r+2s".parse().expect("valid divisor");
    let sec = SectionData::new(d_s, false).expect("effective");
    (base, sec)
}
