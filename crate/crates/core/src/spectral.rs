//! Classification of the spectral curve attached to a section divisor and
//! the genus, kernel, Prym and fibre dimensions that come with it.
//!
//! The curve cut out by a section `s` of the square of a degree-`d_L` line
//! bundle is a double cover of the base curve; a zero of `s` of multiplicity
//! `m >= 2` produces a plane-curve singularity of type A_{m-1} (a node for
//! even `m`, a cusp for odd `m >= 3`). Everything downstream is exact
//! integer bookkeeping driven by the multiplicities.

use crate::divisor::Divisor;
use crate::redfibre::StrataContext;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpectralError {
    #[error("genus must be at least 2, got {0}")]
    GenusTooSmall(i64),
    #[error("twisting degree must be positive, got {0}")]
    DegreeNotPositive(i64),
    #[error("section divisor must be effective")]
    SectionNotEffective,
    #[error("section divisor has degree {actual}, expected {expected}")]
    DegreeMismatch { expected: i64, actual: i64 },
    #[error("odd number of odd-multiplicity points: inconsistent input")]
    OddCuspCount,
    #[error("reducibility flag requires the section divisor to be twice a divisor")]
    FlagWithoutSquare,
    #[error("dimension cross-check failed: {0}")]
    InvariantViolation(String),
}

/// Global numerical data: genus of the base curve, degree of the twisting
/// line bundle, degree of the fixed determinant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseData {
    pub g: i64,
    pub d_l: i64,
    pub d: i64,
}

impl BaseData {
    pub fn new(g: i64, d_l: i64, d: i64) -> Result<Self, SpectralError> {
        if g < 2 {
            return Err(SpectralError::GenusTooSmall(g));
        }
        if d_l < 1 {
            return Err(SpectralError::DegreeNotPositive(d_l));
        }
        Ok(BaseData { g, d_l, d })
    }
}

/// The divisor of the determinant section, plus the one bit of data not
/// computable from multiplicities alone: whether, when the divisor is twice
/// another divisor `E`, the twisting bundle actually is `O(E)` (making the
/// spectral curve reducible) rather than `O(E)` twisted by a nontrivial
/// 2-torsion bundle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectionData {
    pub d_s: Divisor,
    pub l_is_square_root: bool,
}

impl SectionData {
    pub fn new(d_s: Divisor, l_is_square_root: bool) -> Result<Self, SpectralError> {
        if !d_s.is_effective() {
            return Err(SpectralError::SectionNotEffective);
        }
        if l_is_square_root && d_s.half().is_err() {
            return Err(SpectralError::FlagWithoutSquare);
        }
        Ok(SectionData {
            d_s,
            l_is_square_root,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SingularityKind {
    Node,
    Cusp,
}

/// One singular point of the spectral curve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularEntry {
    pub point: crate::divisor::Point,
    pub multiplicity: i64,
    pub kind: SingularityKind,
}

/// The singularity data extracted from a section divisor.
///
/// `entries` lists the singular points only (multiplicity >= 2). `r1` is the
/// number of nodes. `r2` counts every odd-multiplicity point of the divisor,
/// simple zeros included: these are exactly the branch points of the
/// normalized double cover, which is what the genus and Prym formulas
/// consume. `r2` is even whenever the divisor degree is.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularityProfile {
    pub entries: Vec<SingularEntry>,
    pub r1: usize,
    pub r2: usize,
}

impl SingularityProfile {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Which of the three regimes the spectral curve falls in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    Smooth,
    IrreducibleSingular,
    Reducible,
}

/// Everything the analysis reports about one fibre.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FibreReport {
    pub input: ReportInput,
    pub branch: Branch,
    pub spectral_genus: i64,
    pub normalization_genus: i64,
    pub torus_rank: i64,
    pub affine_dim: i64,
    pub prym_dim: i64,
    pub prym_components: u8,
    pub fibre_dim: i64,
    pub connected: bool,
}

/// Echo of the analyzed input, embedded in the report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportInput {
    pub g: i64,
    pub d_l: i64,
    pub d: i64,
    pub d_s: Divisor,
    pub l_is_square_root: bool,
}

/// Extract the singularity profile of the spectral curve.
pub fn classify(base: &BaseData, sec: &SectionData) -> Result<SingularityProfile, SpectralError> {
    let actual = sec.d_s.degree();
    if actual != 2 * base.d_l {
        return Err(SpectralError::DegreeMismatch {
            expected: 2 * base.d_l,
            actual,
        });
    }
    let mut entries = Vec::new();
    let mut r1 = 0;
    let mut r2 = 0;
    for (p, m) in sec.d_s.iter() {
        if m % 2 == 0 {
            r1 += 1;
            entries.push(SingularEntry {
                point: p.clone(),
                multiplicity: m,
                kind: SingularityKind::Node,
            });
        } else {
            r2 += 1;
            if m >= 3 {
                entries.push(SingularEntry {
                    point: p.clone(),
                    multiplicity: m,
                    kind: SingularityKind::Cusp,
                });
            }
        }
    }
    if r2 % 2 != 0 {
        return Err(SpectralError::OddCuspCount);
    }
    Ok(SingularityProfile { entries, r1, r2 })
}

/// Decide the regime: smooth (all zeros simple), reducible (the divisor is
/// twice another and the twisting bundle is that square root), or
/// irreducible singular.
pub fn branch_of(sec: &SectionData) -> Branch {
    if sec.d_s.iter().all(|(_, m)| m == 1) {
        return Branch::Smooth;
    }
    if sec.l_is_square_root && sec.d_s.half().is_ok() {
        return Branch::Reducible;
    }
    Branch::IrreducibleSingular
}

/// Arithmetic genus of the spectral curve: `2g - 1 + d_L`.
pub fn spectral_genus(base: &BaseData) -> i64 {
    2 * base.g - 1 + base.d_l
}

/// Genus of the normalization: `2g - 1 + r2/2`, where `r2` counts the
/// branch points of the normalized cover.
pub fn normalization_genus(base: &BaseData, profile: &SingularityProfile) -> i64 {
    2 * base.g - 1 + (profile.r2 as i64) / 2
}

/// The kernel of the pullback from line bundles on the spectral curve to
/// line bundles on its normalization: a torus of rank `r1` times an affine
/// space. Returns `(torus_rank, affine_dim)`.
pub fn jacobian_kernel_shape(profile: &SingularityProfile) -> (i64, i64) {
    let torus = profile.r1 as i64;
    let affine = profile
        .entries
        .iter()
        .map(|e| match e.kind {
            SingularityKind::Node => (e.multiplicity - 2) / 2,
            SingularityKind::Cusp => (e.multiplicity - 1) / 2,
        })
        .sum();
    (torus, affine)
}

/// Dimension and component count of the Prym of the normalized cover.
/// The Prym is connected exactly when the cover is ramified, i.e. when the
/// divisor has an odd-multiplicity point.
pub fn prym_data(base: &BaseData, profile: &SingularityProfile) -> (i64, u8) {
    let dim = base.g - 1 + (profile.r2 as i64) / 2;
    let components = if profile.r2 > 0 { 1 } else { 2 };
    (dim, components)
}

/// Degree of the line bundle defining the normalized cover:
/// `d_L - deg(delta)`.
pub fn twisted_degree(base: &BaseData, d_s: &Divisor) -> Result<i64, SpectralError> {
    let delta = d_s
        .delta_divisor()
        .map_err(|_| SpectralError::SectionNotEffective)?;
    Ok(base.d_l - delta.degree())
}

/// Assemble the full report. The fibre dimension is computed along the
/// route the regime dictates (Prym plus kernel in the irreducible regimes,
/// maximal stratum dimension in the reducible one) and cross-checked
/// against `d_L + g - 1` and against the other route where applicable.
pub fn fibre_report(base: &BaseData, sec: &SectionData) -> Result<FibreReport, SpectralError> {
    let profile = classify(base, sec)?;
    let branch = branch_of(sec);
    let (torus_rank, affine_dim) = jacobian_kernel_shape(&profile);
    let (prym_dim, prym_components) = prym_data(base, &profile);
    let expected = base.d_l + base.g - 1;

    let prym_route = prym_dim + torus_rank + affine_dim;
    let fibre_dim = match branch {
        Branch::Smooth | Branch::IrreducibleSingular => prym_route,
        Branch::Reducible => {
            let sqrt_divisor = sec
                .d_s
                .half()
                .map_err(|_| SpectralError::FlagWithoutSquare)?;
            let ctx = StrataContext::new(base.g, base.d, sqrt_divisor)
                .map_err(|e| SpectralError::InvariantViolation(e.to_string()))?;
            let max_dim = ctx
                .enumerate_strata()
                .into_iter()
                .map(|(_, info)| info.dim)
                .max()
                .ok_or_else(|| SpectralError::InvariantViolation("no strata".into()))?;
            if prym_route != expected {
                return Err(SpectralError::InvariantViolation(format!(
                    "prym route gives {prym_route}, expected {expected}"
                )));
            }
            max_dim
        }
    };
    if fibre_dim != expected {
        return Err(SpectralError::InvariantViolation(format!(
            "fibre dimension {fibre_dim} differs from {expected}"
        )));
    }

    Ok(FibreReport {
        input: ReportInput {
            g: base.g,
            d_l: base.d_l,
            d: base.d,
            d_s: sec.d_s.clone(),
            l_is_square_root: sec.l_is_square_root,
        },
        branch,
        spectral_genus: spectral_genus(base),
        normalization_genus: normalization_genus(base, &profile),
        torus_rank,
        affine_dim,
        prym_dim,
        prym_components,
        fibre_dim,
        connected: true,
    })
}
