//! Exact, desk-scale computation of the structure of fibres of the rank-2
//! Hitchin map.
//!
//! Given a genus, a twisting degree and the divisor of the determinant
//! section, the crate classifies the spectral curve, reports every genus,
//! kernel, Prym and fibre dimension attached to it, computes parabolic
//! modules of A-type plane-curve singularities at the jet level, enumerates
//! the strata of the fibre when the spectral curve splits into two
//! components, and builds the corresponding Higgs pairs chart by chart.
//!
//! All arithmetic is exact: coefficients are arbitrary-precision rationals,
//! or Gaussian rationals where a square root of -1 is needed. No floating
//! point is used anywhere.
//!
//! ```
//! use hitchin_core::{spectral::fibre_report, BaseData, SectionData};
//!
//! // genus 2, twisting degree 2, determinant section vanishing to order 4
//! let base = BaseData::new(2, 2, 0)?;
//! let section = SectionData::new("4p".parse()?, false)?;
//! let report = fibre_report(&base, &section)?;
//! assert_eq!(report.fibre_dim, 3);
//! assert!(report.connected);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

#![forbid(unsafe_code)]

pub mod divisor;
pub mod higgschart;
pub mod linalg;
pub mod localring;
pub mod parmod;
pub mod redfibre;
pub mod scalar;
pub mod spectral;
pub mod sweep;

pub use divisor::{Divisor, Point};
pub use higgschart::{ChartHiggsPair, LaurentJet, LocalChartData, Stability};
pub use localring::{Jet, JetElement, LocalAlgebra, Poly2, SingularityKind};
pub use parmod::{JetSubspace, Lambda, ParabolicSubspace};
pub use redfibre::{Injectivity, StrataContext, Stratum, StratumInfo};
pub use scalar::{Gauss, Rat};
pub use spectral::{BaseData, Branch, FibreReport, SectionData, SingularityProfile};
