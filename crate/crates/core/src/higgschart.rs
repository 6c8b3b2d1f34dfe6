//! Chart-level construction of Higgs pairs from a line bundle degree and a
//! coefficient datum, when the determinant section is a square.
//!
//! Work happens on a formal disk at each point of the square root's divisor,
//! glued to a generic chart. The rank-2 bundle is glued by a unipotent
//! transition matrix whose corner solves `i*s'*x = y2 - y1`; the Higgs field
//! is upper triangular with `±i*s'` on the diagonal. All series are
//! truncated Laurent expansions over the Gaussian rationals, with window
//! bookkeeping so every verified identity really is verified on a window
//! that covers its content.

use crate::scalar::{Gauss, Rat};
use num_traits::{One, Zero};
use serde::Serialize;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HiggsChartError {
    #[error("series has no invertible leading coefficient at order {0}")]
    DivisionByNonUnit(i64),
    #[error("coefficient datum must be supported in degrees below {0}")]
    BadCoefficientSupport(i64),
    #[error("gluing identity failed to close")]
    GluingFailure,
    #[error("transition/Higgs compatibility failed")]
    CompatibilityFailure,
    #[error("scalar conjugation identities failed")]
    ConjugationFailure,
    #[error("scalar must be nonzero")]
    ZeroScalar,
}

/// A truncated Laurent series over the Gaussian rationals.
///
/// `coeffs[k]` multiplies `t^(lo+k)`. The element has no terms below `lo`;
/// it is known modulo `t^hi` when `hi` is `Some`, and exactly (all higher
/// coefficients zero) when `hi` is `None`.
#[derive(Clone, PartialEq)]
pub struct LaurentJet {
    lo: i64,
    coeffs: Vec<Gauss>,
    hi: Option<i64>,
}

impl LaurentJet {
    /// An exact polynomial-like element: finitely many terms from `lo` up.
    pub fn exact(lo: i64, coeffs: Vec<Gauss>) -> Self {
        LaurentJet {
            lo,
            coeffs,
            hi: None,
        }
    }

    /// A series known modulo `t^(lo + coeffs.len())`.
    pub fn series(lo: i64, coeffs: Vec<Gauss>) -> Self {
        let hi = lo + coeffs.len() as i64;
        LaurentJet {
            lo,
            coeffs,
            hi: Some(hi),
        }
    }

    pub fn zero() -> Self {
        LaurentJet::exact(0, Vec::new())
    }

    pub fn one() -> Self {
        LaurentJet::exact(0, vec![Gauss::one()])
    }

    pub fn constant(c: Gauss) -> Self {
        LaurentJet::exact(0, vec![c])
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// Known-modulo exponent; `None` means exact.
    pub fn hi(&self) -> Option<i64> {
        self.hi
    }

    pub fn is_exactly_zero(&self) -> bool {
        self.hi.is_none() && self.coeffs.iter().all(Zero::is_zero)
    }

    /// Order of vanishing: the lowest nonzero exponent. `None` when no
    /// nonzero coefficient is stored (for an exact element that means the
    /// element is zero).
    pub fn ord(&self) -> Option<i64> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .map(|k| self.lo + k as i64)
    }

    /// Coefficient of `t^e`. Panics when `e` is beyond the known window.
    pub fn coeff(&self, e: i64) -> Gauss {
        if e < self.lo {
            return Gauss::zero();
        }
        let idx = (e - self.lo) as usize;
        if idx < self.coeffs.len() {
            return self.coeffs[idx].clone();
        }
        match self.hi {
            None => Gauss::zero(),
            Some(h) => {
                assert!(e < h, "coefficient t^{e} is beyond the known window");
                Gauss::zero()
            }
        }
    }

    pub fn neg(&self) -> LaurentJet {
        LaurentJet {
            lo: self.lo,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
            hi: self.hi,
        }
    }

    pub fn scale(&self, c: &Gauss) -> LaurentJet {
        LaurentJet {
            lo: self.lo,
            coeffs: self.coeffs.iter().map(|x| x.clone() * c.clone()).collect(),
            hi: self.hi,
        }
    }

    pub fn add(&self, other: &LaurentJet) -> LaurentJet {
        if self.is_exactly_zero() {
            return other.clone();
        }
        if other.is_exactly_zero() {
            return self.clone();
        }
        let lo = self.lo.min(other.lo);
        let hi = match (self.hi, other.hi) {
            (None, None) => None,
            (a, b) => Some(a.unwrap_or(i64::MAX).min(b.unwrap_or(i64::MAX))),
        };
        let extent = hi.unwrap_or_else(|| {
            (self.lo + self.coeffs.len() as i64).max(other.lo + other.coeffs.len() as i64)
        });
        let coeffs = (lo..extent)
            .map(|e| self.coeff(e) + other.coeff(e))
            .collect();
        LaurentJet { lo, coeffs, hi }
    }

    pub fn sub(&self, other: &LaurentJet) -> LaurentJet {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &LaurentJet) -> LaurentJet {
        if self.is_exactly_zero() || other.is_exactly_zero() {
            return LaurentJet::zero();
        }
        let lo = self.lo + other.lo;
        let mut hi = None;
        if let Some(h) = self.hi {
            hi = Some(h + other.lo);
        }
        if let Some(h) = other.hi {
            let cand = h + self.lo;
            hi = Some(hi.map_or(cand, |x: i64| x.min(cand)));
        }
        let extent = hi.unwrap_or(lo + (self.coeffs.len() + other.coeffs.len()) as i64 - 1);
        let mut coeffs = vec![Gauss::zero(); (extent - lo).max(0) as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let e = self.lo + i as i64 + other.lo + j as i64;
                if e >= extent {
                    break;
                }
                let slot = (e - lo) as usize;
                coeffs[slot] = coeffs[slot].clone() + a.clone() * b.clone();
            }
        }
        LaurentJet { lo, coeffs, hi }
    }

    /// Division by a series whose order is visible in its window. The
    /// divisor must be truncated (not exact) unless the dividend is zero.
    pub fn div(&self, other: &LaurentJet) -> Result<LaurentJet, HiggsChartError> {
        if self.is_exactly_zero() {
            return Ok(LaurentJet::zero());
        }
        let ord = other
            .ord()
            .ok_or(HiggsChartError::DivisionByNonUnit(other.lo))?;
        // precision of the unit-part inverse
        let precision = match (other.hi, self.hi) {
            (Some(h), _) => (h - ord) as usize,
            (None, Some(h)) => (h - self.lo).max(1) as usize,
            (None, None) => panic!("division of exact by exact series is unbounded"),
        };
        let unit0 = other.coeff(ord);
        let mut inv = vec![Gauss::zero(); precision];
        inv[0] = Gauss::one() / unit0.clone();
        for k in 1..precision {
            let mut acc = Gauss::zero();
            for j in 1..=k {
                let u_j = other.coeff(ord + j as i64);
                if u_j.is_zero() {
                    continue;
                }
                acc += u_j * inv[k - j].clone();
            }
            inv[k] = -(acc / unit0.clone());
        }
        let recip = LaurentJet {
            lo: -ord,
            coeffs: inv,
            hi: Some(-ord + precision as i64),
        };
        Ok(self.mul(&recip))
    }

    /// Exact polynomial made of the coefficients in `[from, to)`.
    /// Panics if the window does not cover the range.
    pub fn restrict(&self, from: i64, to: i64) -> LaurentJet {
        if let Some(h) = self.hi {
            assert!(to <= h, "restriction beyond the known window");
        }
        LaurentJet::exact(from, (from..to).map(|e| self.coeff(e)).collect())
    }

    /// Equality of all coefficients on the common known window, which must
    /// extend at least to `required_hi`.
    pub fn eq_mod(&self, other: &LaurentJet, required_hi: i64) -> bool {
        let common = match (self.hi, other.hi) {
            (None, None) => None,
            (a, b) => Some(a.unwrap_or(i64::MAX).min(b.unwrap_or(i64::MAX))),
        };
        if let Some(c) = common {
            assert!(
                c >= required_hi,
                "windows too short: know up to t^{c}, need t^{required_hi}"
            );
        }
        let lo = self.lo.min(other.lo);
        let extent = common.unwrap_or_else(|| {
            (self.lo + self.coeffs.len() as i64).max(other.lo + other.coeffs.len() as i64)
        });
        (lo..extent).all(|e| self.coeff(e) == other.coeff(e))
    }

    pub fn is_zero_mod(&self, required_hi: i64) -> bool {
        self.eq_mod(&LaurentJet::zero(), required_hi)
    }
}

impl fmt::Debug for LaurentJet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})t^{}", c, self.lo + k as i64)?;
        }
        if first {
            write!(f, "0")?;
        }
        match self.hi {
            Some(h) => write!(f, " + O(t^{h})"),
            None => Ok(()),
        }
    }
}

/// Serialization shape for a Laurent jet: lowest exponent plus coefficient
/// pairs (real and imaginary parts as `num/den` strings).
#[derive(Clone, Debug, Serialize)]
pub struct LaurentWire {
    pub lo: i64,
    pub coeffs: Vec<(String, String)>,
    pub known_mod: Option<i64>,
}

impl From<&LaurentJet> for LaurentWire {
    fn from(j: &LaurentJet) -> Self {
        LaurentWire {
            lo: j.lo,
            coeffs: j
                .coeffs
                .iter()
                .map(|c| {
                    (
                        crate::scalar::rat_string(&c.re),
                        crate::scalar::rat_string(&c.im),
                    )
                })
                .collect(),
            known_mod: j.hi,
        }
    }
}

/// A 2x2 matrix of Laurent jets, row-major.
#[derive(Clone, Debug)]
pub struct Mat2 {
    pub a: LaurentJet,
    pub b: LaurentJet,
    pub c: LaurentJet,
    pub d: LaurentJet,
}

impl Mat2 {
    pub fn mul(&self, o: &Mat2) -> Mat2 {
        Mat2 {
            a: self.a.mul(&o.a).add(&self.b.mul(&o.c)),
            b: self.a.mul(&o.b).add(&self.b.mul(&o.d)),
            c: self.c.mul(&o.a).add(&self.d.mul(&o.c)),
            d: self.c.mul(&o.b).add(&self.d.mul(&o.d)),
        }
    }

    pub fn eq_mod(&self, o: &Mat2, required_hi: i64) -> bool {
        self.a.eq_mod(&o.a, required_hi)
            && self.b.eq_mod(&o.b, required_hi)
            && self.c.eq_mod(&o.c, required_hi)
            && self.d.eq_mod(&o.d, required_hi)
    }

    pub fn trace(&self) -> LaurentJet {
        self.a.add(&self.d)
    }

    pub fn det(&self) -> LaurentJet {
        self.a.mul(&self.d).sub(&self.b.mul(&self.c))
    }
}

fn i_unit() -> Gauss {
    crate::scalar::sqrt_minus_one()
}

/// Per-point chart data: the square-root section, the coefficient datum,
/// and the solved gluing representative.
#[derive(Clone, Debug)]
pub struct LocalChartData {
    /// Multiplicity of the square-root divisor at the point.
    pub n: i64,
    pub s_prime: LaurentJet,
    pub q_local: LaurentJet,
    pub x12: LaurentJet,
    pub y1: LaurentJet,
    pub y2: LaurentJet,
}

/// Solve the gluing equation at one point: with `y1` the coefficient datum
/// and `y2 = 0`, the transition corner is `x12 = -y1 / (i*s')`. The
/// square-root section must vanish to order exactly `n`.
pub fn solve_gluing(
    q_local: &LaurentJet,
    s_prime: &LaurentJet,
    n: i64,
) -> Result<LocalChartData, HiggsChartError> {
    if s_prime.ord() != Some(n) {
        return Err(HiggsChartError::DivisionByNonUnit(n));
    }
    let supported_below_n = q_local.hi.is_none()
        && q_local.lo >= 0
        && q_local
            .coeffs
            .iter()
            .enumerate()
            .all(|(k, c)| c.is_zero() || q_local.lo + (k as i64) < n);
    if !supported_below_n {
        return Err(HiggsChartError::BadCoefficientSupport(n));
    }
    let y1 = q_local.clone();
    let y2 = LaurentJet::zero();
    let is = s_prime.scale(&i_unit());
    let x12 = y1.neg().div(&is)?;
    let data = LocalChartData {
        n,
        s_prime: s_prime.clone(),
        q_local: q_local.clone(),
        x12,
        y1,
        y2,
    };
    if !gluing_holds(&data) {
        return Err(HiggsChartError::GluingFailure);
    }
    Ok(data)
}

/// `i*s'*x12 = y2 - y1`, on a window covering the datum.
pub fn gluing_holds(data: &LocalChartData) -> bool {
    let lhs = data.s_prime.scale(&i_unit()).mul(&data.x12);
    let rhs = data.y2.sub(&data.y1);
    lhs.eq_mod(&rhs, data.n + 1)
}

/// A Higgs pair presented on the two charts around one point.
#[derive(Clone, Debug)]
pub struct ChartHiggsPair {
    /// Degree of the distinguished eigenbundle (symbolic).
    pub m: i64,
    /// Degree of the determinant bundle (symbolic).
    pub d: i64,
    pub data: LocalChartData,
    pub f12: Mat2,
    pub phi1: Mat2,
    pub phi2: Mat2,
}

/// Build the transition matrix and the two local Higgs matrices, verifying
/// the compatibility `f12 * phi2 = phi1 * f12`, zero trace, and
/// `det = s'^2` exactly on the required windows.
pub fn build_pair(
    data: &LocalChartData,
    m: i64,
    d: i64,
) -> Result<ChartHiggsPair, HiggsChartError> {
    let is = data.s_prime.scale(&i_unit());
    let half = Gauss::new(Rat::new(1.into(), 2.into()), Rat::zero());
    let f12 = Mat2 {
        a: LaurentJet::one(),
        b: data.x12.scale(&half),
        c: LaurentJet::zero(),
        d: LaurentJet::one(),
    };
    let phi = |y: &LaurentJet| Mat2 {
        a: is.clone(),
        b: y.clone(),
        c: LaurentJet::zero(),
        d: is.neg(),
    };
    let phi1 = phi(&data.y1);
    let phi2 = phi(&data.y2);

    let n = data.n;
    if !f12.mul(&phi2).eq_mod(&phi1.mul(&f12), n + 1) {
        return Err(HiggsChartError::CompatibilityFailure);
    }
    let s_sq = data.s_prime.mul(&data.s_prime);
    for p in [&phi1, &phi2] {
        if !p.trace().is_zero_mod(2 * n + 1) || !p.det().eq_mod(&s_sq, 2 * n + 1) {
            return Err(HiggsChartError::CompatibilityFailure);
        }
    }
    Ok(ChartHiggsPair {
        m,
        d,
        data: data.clone(),
        f12,
        phi1,
        phi2,
    })
}

/// Semistability verdict for the two eigenbundle degrees.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Stability {
    Stable,
    StrictlySemistable,
    Unstable,
}

/// Only the two eigenbundles can destabilize: compare `m` and
/// `d - deg(D) - m` against `d/2`.
pub fn semistability(m: i64, deg_d: i64, d: i64) -> Stability {
    let other = d - deg_d - m;
    if 2 * m > d || 2 * other > d {
        Stability::Unstable
    } else if 2 * m == d || 2 * other == d {
        Stability::StrictlySemistable
    } else {
        Stability::Stable
    }
}

/// Vanishing orders of the local form and the resulting meeting
/// multiplicity of the two eigenbundles at the point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenData {
    /// Order of the square-root section.
    pub k1: i64,
    /// Order of the coefficient datum; `None` when it vanishes identically.
    pub k2: Option<i64>,
    /// Meeting multiplicity of the eigenbundles at the point.
    pub d_at_p: i64,
}

/// Case analysis of the two vanishing orders: the eigenbundles meet to
/// order `k1 - k2` when the section vanishes deeper than the datum.
pub fn eigen_divisor(s_prime: &LaurentJet, q: &LaurentJet) -> EigenData {
    let k1 = s_prime.ord().expect("square-root section is nonzero");
    let k2 = q.ord();
    let d_at_p = match k2 {
        Some(k2) if k1 > k2 => k1 - k2,
        _ => 0,
    };
    EigenData { k1, k2, d_at_p }
}

/// Read the coefficient datum back from the chart-1 Higgs matrix: the
/// upper-right entry restricted to degrees below `n`.
pub fn extract_q(pair: &ChartHiggsPair) -> LaurentJet {
    pair.phi1.b.restrict(0, pair.data.n)
}

/// The same extraction from chart 2, transported to chart 1 by conjugating
/// with the transition matrix.
pub fn extract_q_via_chart2(pair: &ChartHiggsPair) -> LaurentJet {
    let f_inv = Mat2 {
        a: LaurentJet::one(),
        b: pair.f12.b.neg(),
        c: LaurentJet::zero(),
        d: LaurentJet::one(),
    };
    let transported = pair.f12.mul(&pair.phi2).mul(&f_inv);
    transported.b.restrict(0, pair.data.n)
}

/// Rebuild the pair from `beta * q` and verify the explicit conjugation
/// by `diag(sqrt(beta), 1/sqrt(beta))` carrying one pair to the other:
/// `g * f12(q) = f12(beta*q) * g` and `g * phi(q) * g^(-1) = phi(beta*q)`.
pub fn scalar_action(
    pair: &ChartHiggsPair,
    sqrt_beta: &Gauss,
) -> Result<ChartHiggsPair, HiggsChartError> {
    if sqrt_beta.is_zero() {
        return Err(HiggsChartError::ZeroScalar);
    }
    let beta = sqrt_beta.clone() * sqrt_beta.clone();
    let scaled_q = pair.data.q_local.scale(&beta);
    let data = solve_gluing(&scaled_q, &pair.data.s_prime, pair.data.n)?;
    let new_pair = build_pair(&data, pair.m, pair.d)?;

    let n = pair.data.n;
    let g = Mat2 {
        a: LaurentJet::constant(sqrt_beta.clone()),
        b: LaurentJet::zero(),
        c: LaurentJet::zero(),
        d: LaurentJet::constant(Gauss::one() / sqrt_beta.clone()),
    };
    let g_inv = Mat2 {
        a: LaurentJet::constant(Gauss::one() / sqrt_beta.clone()),
        b: LaurentJet::zero(),
        c: LaurentJet::zero(),
        d: LaurentJet::constant(sqrt_beta.clone()),
    };
    if !g.mul(&pair.f12).eq_mod(&new_pair.f12.mul(&g), n + 1) {
        return Err(HiggsChartError::ConjugationFailure);
    }
    for (old, new) in [(&pair.phi1, &new_pair.phi1), (&pair.phi2, &new_pair.phi2)] {
        if !g.mul(old).mul(&g_inv).eq_mod(new, n + 1) {
            return Err(HiggsChartError::ConjugationFailure);
        }
    }
    Ok(new_pair)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::gauss;

    fn g(re: i64) -> Gauss {
        gauss(re, 0)
    }

    /// s' = t^n with generous window.
    fn s_prime_tn(n: i64) -> LaurentJet {
        let len = (2 * n + 2) as usize;
        let mut coeffs = vec![Gauss::zero(); len];
        coeffs[0] = Gauss::one();
        LaurentJet::series(n, coeffs)
    }

    #[test]
    fn laurent_division_example() {
        // -1 / (i t) = i t^{-1}
        let one = LaurentJet::exact(0, vec![g(1)]);
        let it = s_prime_tn(1).scale(&gauss(0, 1));
        let x = one.neg().div(&it).unwrap();
        assert_eq!(x.ord(), Some(-1));
        assert_eq!(x.coeff(-1), gauss(0, 1));
    }

    #[test]
    fn gluing_solved_exactly() {
        // n = 2, s' = t^2, q = t: x12 = i t^{-1}
        let data =
            solve_gluing(&LaurentJet::exact(0, vec![g(0), g(1)]), &s_prime_tn(2), 2).unwrap();
        assert_eq!(data.x12.ord(), Some(-1));
        assert_eq!(data.x12.coeff(-1), gauss(0, 1));
        assert!(gluing_holds(&data));

        // zero datum splits
        let data = solve_gluing(&LaurentJet::zero(), &s_prime_tn(1), 1).unwrap();
        assert!(data.x12.is_exactly_zero());
        assert!(data.y1.is_exactly_zero() && data.y2.is_exactly_zero());
    }

    #[test]
    fn gluing_rejects_wrong_order() {
        // s' vanishing to order 1 is not a local equation of order 2
        assert!(matches!(
            solve_gluing(&LaurentJet::zero(), &s_prime_tn(1), 2),
            Err(HiggsChartError::DivisionByNonUnit(2))
        ));
        // datum must live below degree n
        assert!(matches!(
            solve_gluing(&LaurentJet::exact(0, vec![g(0), g(1)]), &s_prime_tn(1), 1),
            Err(HiggsChartError::BadCoefficientSupport(1))
        ));
    }

    #[test]
    fn pair_identities() {
        let q = LaurentJet::exact(0, vec![g(0), g(1)]);
        let data = solve_gluing(&q, &s_prime_tn(2), 2).unwrap();
        let pair = build_pair(&data, 1, 2).unwrap();
        let s_sq = data.s_prime.mul(&data.s_prime);
        assert!(pair.phi1.trace().is_zero_mod(5));
        assert!(pair.phi1.det().eq_mod(&s_sq, 5));
        assert!(pair.phi2.det().eq_mod(&s_sq, 5));
    }

    #[test]
    fn split_case_is_diagonal() {
        let data = solve_gluing(&LaurentJet::zero(), &s_prime_tn(2), 2).unwrap();
        let pair = build_pair(&data, 1, 2).unwrap();
        assert!(pair.f12.b.is_exactly_zero());
        assert!(pair.phi1.b.is_exactly_zero());
        assert_eq!(pair.phi1.a.coeff(2), gauss(0, 1));
        assert_eq!(pair.phi1.d.coeff(2), gauss(0, -1));
    }

    #[test]
    fn semistability_examples() {
        assert_eq!(semistability(1, 2, 2), Stability::StrictlySemistable);
        assert_eq!(semistability(0, 2, 2), Stability::Stable);
        assert_eq!(semistability(2, 0, 2), Stability::Unstable);
    }

    #[test]
    fn eigen_divisor_examples() {
        let q_t = LaurentJet::exact(0, vec![g(0), g(1)]);
        let e = eigen_divisor(&s_prime_tn(2), &q_t);
        assert_eq!((e.k1, e.k2, e.d_at_p), (2, Some(1), 1));

        let q_1 = LaurentJet::exact(0, vec![g(1)]);
        let e = eigen_divisor(&s_prime_tn(1), &q_1);
        assert_eq!((e.k1, e.k2, e.d_at_p), (1, Some(0), 1));

        let e = eigen_divisor(&s_prime_tn(3), &LaurentJet::zero());
        assert_eq!((e.k1, e.k2, e.d_at_p), (3, None, 0));
    }

    #[test]
    fn extraction_round_trips() {
        let q = LaurentJet::exact(0, vec![g(3), g(-2)]);
        let data = solve_gluing(&q, &s_prime_tn(2), 2).unwrap();
        let pair = build_pair(&data, 0, 1).unwrap();
        assert!(extract_q(&pair).eq_mod(&q, 2));
        assert!(extract_q_via_chart2(&pair).eq_mod(&q, 2));
    }

    #[test]
    fn scalar_action_examples() {
        let q = LaurentJet::exact(0, vec![g(1), g(2)]);
        let data = solve_gluing(&q, &s_prime_tn(2), 2).unwrap();
        let pair = build_pair(&data, 1, 2).unwrap();

        // beta = 1: identity conjugation
        let same = scalar_action(&pair, &g(1)).unwrap();
        assert!(extract_q(&same).eq_mod(&q, 2));

        // beta = 4 via sqrt 2
        let scaled = scalar_action(&pair, &g(2)).unwrap();
        assert!(extract_q(&scaled).eq_mod(&q.scale(&g(4)), 2));

        // beta = -1 via sqrt i
        let scaled = scalar_action(&pair, &gauss(0, 1)).unwrap();
        assert!(extract_q(&scaled).eq_mod(&q.scale(&g(-1)), 2));

        assert!(matches!(
            scalar_action(&pair, &g(0)),
            Err(HiggsChartError::ZeroScalar)
        ));
    }
}
