//! Stratification of the fibre when the spectral curve is reducible.
//!
//! Fixing a square root `s'` of the section with divisor `D'`, the fibre is
//! covered by pieces indexed by an effective divisor `D <= D'` (where the
//! two eigen-line-subbundles of the Higgs field meet) and the degree `m` of
//! one eigenbundle. Each piece carries a coefficient space whose slots are
//! an explicit exponent window per point; everything here is finite
//! combinatorics over those windows.

use crate::divisor::{Divisor, Point};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RedFibreError {
    #[error("square-root divisor must be effective and nonzero")]
    BadSquareRootDivisor,
    #[error("stratum divisor must satisfy 0 <= D <= D'")]
    DivisorOutOfRange,
    #[error("stratum degree {m} outside the admissible window for deg(D) = {deg_d}")]
    DegreeOutOfRange { m: i64, deg_d: i64 },
    #[error("target divisor is not strictly larger than the current one")]
    NotLarger,
}

/// Context for the reducible-case analysis: genus, determinant degree and
/// the divisor of the chosen square root (whose degree is the twisting
/// degree).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrataContext {
    pub g: i64,
    pub d: i64,
    pub sqrt_divisor: Divisor,
}

/// One piece of the fibre: the meeting divisor `D` of the two eigenbundles
/// and the degree `m` of the distinguished one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Stratum {
    pub d: Divisor,
    pub m: i64,
}

/// Whether the parametrization of a stratum is injective or generically
/// two-to-one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Injectivity {
    Iso,
    TwoToOne,
}

/// Derived data of a stratum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StratumInfo {
    pub dim: i64,
    pub partner_m: i64,
    pub injectivity: Injectivity,
    pub ramification_condition: String,
}

impl StrataContext {
    pub fn new(g: i64, d: i64, sqrt_divisor: Divisor) -> Result<Self, RedFibreError> {
        if !sqrt_divisor.is_effective() || sqrt_divisor.is_zero() {
            return Err(RedFibreError::BadSquareRootDivisor);
        }
        Ok(StrataContext { g, d, sqrt_divisor })
    }

    /// Degree of the twisting line bundle.
    pub fn d_l(&self) -> i64 {
        self.sqrt_divisor.degree()
    }

    /// Validate a stratum against this context: `0 <= D <= D'` and
    /// `d/2 - deg(D) <= m <= d/2` (rational bounds, integer `m`).
    pub fn validate(&self, s: &Stratum) -> Result<(), RedFibreError> {
        if !s.d.is_effective() {
            return Err(RedFibreError::DivisorOutOfRange);
        }
        if !s.d.leq(&self.sqrt_divisor) {
            return Err(RedFibreError::DivisorOutOfRange);
        }
        let deg_d = s.d.degree();
        if 2 * s.m > self.d || 2 * s.m < self.d - 2 * deg_d {
            return Err(RedFibreError::DegreeOutOfRange { m: s.m, deg_d });
        }
        Ok(())
    }

    /// The exponent window per point of `Supp(D')`: at `p` the slots run
    /// from `D'(p) - D(p)` to `D'(p) - 1` (empty when `D(p) = 0`). The total
    /// number of slots is `deg(D)`.
    pub fn index_set(&self, d: &Divisor) -> BTreeMap<Point, BTreeSet<i64>> {
        assert!(
            d.is_effective() && d.leq(&self.sqrt_divisor),
            "divisor must satisfy 0 <= D <= D'"
        );
        self.sqrt_divisor
            .iter()
            .map(|(p, np)| {
                let dp = d.mult(p);
                (p.clone(), ((np - dp)..np).collect())
            })
            .collect()
    }

    /// Do the exponent windows turn pointwise min/max of divisors into
    /// intersection/union of slot sets?
    pub fn lattice_check(&self, d1: &Divisor, d2: &Divisor) -> bool {
        let s1 = self.index_set(d1);
        let s2 = self.index_set(d2);
        let smin = self.index_set(&d1.min(d2));
        let smax = self.index_set(&d1.max(d2));
        self.sqrt_divisor.iter().all(|(p, _)| {
            let a = &s1[p];
            let b = &s2[p];
            let inter: BTreeSet<i64> = a.intersection(b).copied().collect();
            let union: BTreeSet<i64> = a.union(b).copied().collect();
            smin[p] == inter && smax[p] == union
        })
    }

    /// Dimension of the stratum: `g` for the `D = 0` stratum (a Jacobian),
    /// `deg(D) + g - 1` otherwise (the coefficient space loses one to the
    /// fibrewise scalar action).
    pub fn stratum_dim(&self, s: &Stratum) -> i64 {
        if s.d.is_zero() {
            self.g
        } else {
            s.d.degree() + self.g - 1
        }
    }

    /// Dimension of the total coefficient bundle over the Jacobian,
    /// before any scalar quotient: `g + deg(D)`.
    pub fn coefficient_bundle_dim(&self, s: &Stratum) -> i64 {
        self.g + s.d.degree()
    }

    /// The other eigenbundle degree describing the same points of the
    /// fibre.
    pub fn partner_m(&self, s: &Stratum) -> i64 {
        self.d - s.d.degree() - s.m
    }

    /// Generically two-to-one exactly when the stratum is its own partner.
    pub fn injectivity_kind(&self, s: &Stratum) -> Injectivity {
        if 2 * s.m == self.d - s.d.degree() {
            Injectivity::TwoToOne
        } else {
            Injectivity::Iso
        }
    }

    pub fn stratum_info(&self, s: &Stratum) -> StratumInfo {
        StratumInfo {
            dim: self.stratum_dim(s),
            partner_m: self.partner_m(s),
            injectivity: self.injectivity_kind(s),
            ramification_condition: format!("M^2 = Lambda(-({}))", s.d.compact()),
        }
    }

    /// All effective divisors `D <= D'`, in deterministic order.
    pub fn divisors_below(&self) -> Vec<Divisor> {
        let points: Vec<(Point, i64)> = self
            .sqrt_divisor
            .iter()
            .map(|(p, m)| (p.clone(), m))
            .collect();
        let mut out = vec![Divisor::zero()];
        for (p, np) in &points {
            let mut next = Vec::new();
            for d in &out {
                for k in 0..=*np {
                    if k == 0 {
                        next.push(d.clone());
                    } else {
                        next.push(d + &Divisor::point(p.clone(), k));
                    }
                }
            }
            out = next;
        }
        out.sort_by_key(|d| {
            (
                d.degree(),
                d.iter()
                    .map(|(p, m)| (p.label().to_string(), m))
                    .collect::<Vec<_>>(),
            )
        });
        out
    }

    /// Every stratum, one representative per identified pair: each
    /// effective `D <= D'` paired with the integers
    /// `ceil((d - deg D)/2) <= m <= floor(d/2)`.
    pub fn enumerate_strata(&self) -> Vec<(Stratum, StratumInfo)> {
        let mut out = Vec::new();
        for d in self.divisors_below() {
            let deg = d.degree();
            let lo = div_ceil(self.d - deg, 2);
            let hi = div_floor(self.d, 2);
            for m in lo..=hi {
                let s = Stratum { d: d.clone(), m };
                let info = self.stratum_info(&s);
                out.push((s, info));
            }
        }
        out
    }

    /// All strata in the full (redundant) window
    /// `d/2 - deg(D) <= m <= d/2`.
    pub fn enumerate_strata_full(&self) -> Vec<Stratum> {
        let mut out = Vec::new();
        for d in self.divisors_below() {
            let deg = d.degree();
            let lo = div_ceil(self.d - 2 * deg, 2);
            let hi = div_floor(self.d, 2);
            for m in lo..=hi {
                out.push(Stratum { d: d.clone(), m });
            }
        }
        out
    }

    /// The connectivity graph over eigenbundle degrees: one node per `m`
    /// with `ceil(d/2 - d_L) <= m <= floor(d/2)`, and for each node the
    /// edge to `floor(d/2)` realized by a meeting divisor of degree
    /// `ceil(d/2 - m)`.
    pub fn connectivity_graph(&self) -> ConnectivityGraph {
        let lo = div_ceil(self.d - 2 * self.d_l(), 2);
        let hi = div_floor(self.d, 2);
        let nodes: Vec<i64> = (lo..=hi).collect();
        let edges: Vec<(i64, i64)> = nodes.iter().map(|&m| (m, hi)).collect();
        let connected = is_connected(&nodes, &edges);
        ConnectivityGraph {
            nodes,
            edges,
            connected,
        }
    }

    /// Transport a stratum into the analysis for a larger square-root
    /// divisor: `(D, m)` maps to `(D~ - D' + D, m)`.
    pub fn embed_into_larger(
        &self,
        s: &Stratum,
        d_tilde: &Divisor,
    ) -> Result<(StrataContext, Stratum), RedFibreError> {
        if !self.sqrt_divisor.leq(d_tilde) || d_tilde == &self.sqrt_divisor {
            return Err(RedFibreError::NotLarger);
        }
        self.validate(s)?;
        let shift = d_tilde - &self.sqrt_divisor;
        let bigger = StrataContext::new(self.g, self.d, d_tilde.clone())?;
        let image = Stratum {
            d: &shift + &s.d,
            m: s.m,
        };
        bigger.validate(&image)?;
        Ok((bigger, image))
    }
}

/// Nodes, edges and connectivity verdict for the stratum graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConnectivityGraph {
    pub nodes: Vec<i64>,
    pub edges: Vec<(i64, i64)>,
    pub connected: bool,
}

fn is_connected(nodes: &[i64], edges: &[(i64, i64)]) -> bool {
    let Some(&start) = nodes.first() else {
        return true;
    };
    let mut adj: BTreeMap<i64, Vec<i64>> = nodes.iter().map(|&n| (n, Vec::new())).collect();
    for &(a, b) in edges {
        adj.get_mut(&a).expect("edge endpoint").push(b);
        adj.get_mut(&b).expect("edge endpoint").push(a);
    }
    let mut seen: BTreeSet<i64> = BTreeSet::new();
    let mut queue = VecDeque::from([start]);
    while let Some(n) = queue.pop_front() {
        if !seen.insert(n) {
            continue;
        }
        queue.extend(adj[&n].iter().copied());
    }
    seen.len() == nodes.len()
}

fn div_floor(a: i64, b: i64) -> i64 {
    let q = a / b;
    if a % b != 0 && (a < 0) != (b < 0) {
        q - 1
    } else {
        q
    }
}

fn div_ceil(a: i64, b: i64) -> i64 {
    -div_floor(-a, b)
}
