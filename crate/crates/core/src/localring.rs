//! Truncated power series ("jets") with exact coefficients, and the local
//! rings of A-type plane-curve singularities modeled on them.
//!
//! The curve `x^2 = z^m` has two smooth branches when `m` is even and one
//! when `m` is odd. Functions on it pull back to the normalization as pairs
//! of jets (even case) subject to matching low-order coefficients, or as
//! single jets with vanishing low odd coefficients (odd case). A jet stores
//! coefficients in order, so derivative constraints at the origin are plain
//! coefficient equalities.

use crate::linalg::Subspace;
use crate::scalar::Field;
use num_traits::Zero;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LocalRingError {
    #[error("truncation order {n} is too short for multiplicity {m}")]
    TruncationTooShort { n: usize, m: i64 },
    #[error("branch count {found} does not match the algebra (expected {expected})")]
    BranchMismatch { expected: usize, found: usize },
}

/// Node (even multiplicity, two branches) or cusp (odd, one branch).
pub use crate::spectral::SingularityKind;

/// A truncated power series: coefficient `k` multiplies `t^k`, for
/// `k < order()`. Arithmetic is exact and truncating.
#[derive(Clone, PartialEq, Eq)]
pub struct Jet<F: Field> {
    coeffs: Vec<F>,
}

impl<F: Field> Jet<F> {
    pub fn zero(order: usize) -> Self {
        Jet {
            coeffs: vec![F::zero(); order],
        }
    }

    pub fn one(order: usize) -> Self {
        Jet::monomial(0, F::one(), order)
    }

    /// `c * t^k`, truncated at `order`.
    pub fn monomial(k: usize, c: F, order: usize) -> Self {
        let mut coeffs = vec![F::zero(); order];
        if k < order {
            coeffs[k] = c;
        }
        Jet { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<F>) -> Self {
        Jet { coeffs }
    }

    /// Truncation order (number of stored coefficients).
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Index of the lowest nonzero coefficient, if any.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Re-truncate to a (smaller or larger) order; new high coefficients
    /// are zero.
    pub fn truncate(&self, order: usize) -> Jet<F> {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order, F::zero());
        Jet { coeffs }
    }

    pub fn scale(&self, c: &F) -> Jet<F> {
        Jet {
            coeffs: self.coeffs.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }

    fn mul_trunc(&self, other: &Jet<F>) -> Jet<F> {
        let order = self.order().min(other.order());
        let mut coeffs = vec![F::zero(); order];
        for (i, a) in self.coeffs.iter().enumerate().take(order) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= order {
                    break;
                }
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Jet { coeffs }
    }
}

impl<F: Field> Add for &Jet<F> {
    type Output = Jet<F>;
    fn add(self, rhs: &Jet<F>) -> Jet<F> {
        let order = self.order().min(rhs.order());
        Jet {
            coeffs: (0..order).map(|k| self.coeff(k) + rhs.coeff(k)).collect(),
        }
    }
}

impl<F: Field> Sub for &Jet<F> {
    type Output = Jet<F>;
    fn sub(self, rhs: &Jet<F>) -> Jet<F> {
        let order = self.order().min(rhs.order());
        Jet {
            coeffs: (0..order).map(|k| self.coeff(k) - rhs.coeff(k)).collect(),
        }
    }
}

impl<F: Field> Mul for &Jet<F> {
    type Output = Jet<F>;
    fn mul(self, rhs: &Jet<F>) -> Jet<F> {
        self.mul_trunc(rhs)
    }
}

impl<F: Field> fmt::Debug for Jet<F> {
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
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})t")?,
                _ => write!(f, "({c})t^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.order())
    }
}

/// An element of the jet model of a local ring: one jet per branch of the
/// normalization, all with the same truncation order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum JetElement<F: Field> {
    Single(Jet<F>),
    Pair(Jet<F>, Jet<F>),
}

impl<F: Field> JetElement<F> {
    pub fn branch_count(&self) -> usize {
        match self {
            JetElement::Single(_) => 1,
            JetElement::Pair(_, _) => 2,
        }
    }

    pub fn order(&self) -> usize {
        match self {
            JetElement::Single(a) => a.order(),
            JetElement::Pair(a, b) => {
                debug_assert_eq!(a.order(), b.order());
                a.order()
            }
        }
    }

    pub fn zero_like(&self) -> JetElement<F> {
        match self {
            JetElement::Single(a) => JetElement::Single(Jet::zero(a.order())),
            JetElement::Pair(a, _) => JetElement::Pair(Jet::zero(a.order()), Jet::zero(a.order())),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            JetElement::Single(a) => a.is_zero(),
            JetElement::Pair(a, b) => a.is_zero() && b.is_zero(),
        }
    }

    /// Flatten into a coordinate vector (branch jets concatenated).
    pub fn to_vec(&self) -> Vec<F> {
        match self {
            JetElement::Single(a) => a.coeffs().to_vec(),
            JetElement::Pair(a, b) => {
                let mut v = a.coeffs().to_vec();
                v.extend_from_slice(b.coeffs());
                v
            }
        }
    }

    /// Inverse of [`to_vec`](Self::to_vec) for the given shape.
    pub fn from_vec(branches: usize, order: usize, v: &[F]) -> JetElement<F> {
        assert_eq!(v.len(), branches * order, "coordinate vector length");
        match branches {
            1 => JetElement::Single(Jet::from_coeffs(v.to_vec())),
            2 => JetElement::Pair(
                Jet::from_coeffs(v[..order].to_vec()),
                Jet::from_coeffs(v[order..].to_vec()),
            ),
            _ => panic!("unsupported branch count {branches}"),
        }
    }

    pub fn truncate(&self, order: usize) -> JetElement<F> {
        match self {
            JetElement::Single(a) => JetElement::Single(a.truncate(order)),
            JetElement::Pair(a, b) => JetElement::Pair(a.truncate(order), b.truncate(order)),
        }
    }
}

/// Branchwise truncated product. Both operands must have the same shape.
pub fn multiply<F: Field>(a: &JetElement<F>, b: &JetElement<F>) -> JetElement<F> {
    match (a, b) {
        (JetElement::Single(x), JetElement::Single(y)) => JetElement::Single(x * y),
        (JetElement::Pair(x1, x2), JetElement::Pair(y1, y2)) => JetElement::Pair(x1 * y1, x2 * y2),
        _ => panic!("branch count mismatch in jet multiplication"),
    }
}

/// Branchwise sum.
pub fn add<F: Field>(a: &JetElement<F>, b: &JetElement<F>) -> JetElement<F> {
    match (a, b) {
        (JetElement::Single(x), JetElement::Single(y)) => JetElement::Single(x + y),
        (JetElement::Pair(x1, x2), JetElement::Pair(y1, y2)) => JetElement::Pair(x1 + y1, x2 + y2),
        _ => panic!("branch count mismatch in jet addition"),
    }
}

/// A polynomial in two variables `x`, `z` with exact coefficients, used as
/// input to the coordinate-ring maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly2<F: Field> {
    terms: BTreeMap<(u32, u32), F>,
}

impl<F: Field> Poly2<F> {
    pub fn zero() -> Self {
        Poly2 {
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = ((u32, u32), F)>,
    {
        let mut p = Poly2::zero();
        for ((i, j), c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    /// Add `c * x^i * z^j`.
    pub fn add_term(&mut self, i: u32, j: u32, c: F) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert_with(F::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn constant(c: F) -> Self {
        Poly2::from_terms([((0, 0), c)])
    }

    pub fn x() -> Self {
        Poly2::from_terms([((1, 0), F::one())])
    }

    pub fn z() -> Self {
        Poly2::from_terms([((0, 1), F::one())])
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &F)> {
        self.terms.iter()
    }
}

impl<F: Field> Mul for &Poly2<F> {
    type Output = Poly2<F>;
    fn mul(self, rhs: &Poly2<F>) -> Poly2<F> {
        let mut out = Poly2::zero();
        for ((i1, j1), c1) in self.terms() {
            for ((i2, j2), c2) in rhs.terms() {
                out.add_term(i1 + i2, j1 + j2, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<F: Field> Add for &Poly2<F> {
    type Output = Poly2<F>;
    fn add(self, rhs: &Poly2<F>) -> Poly2<F> {
        let mut out = self.clone();
        for ((i, j), c) in rhs.terms() {
            out.add_term(*i, *j, c.clone());
        }
        out
    }
}

/// Pull a polynomial back along the normalization of `x^2 = z^m`, `m` even:
/// branch 1 substitutes `(t^{m/2}, t)`, branch 2 `(-t^{m/2}, t)`. Truncated
/// at `order`.
pub fn pullback_even<F: Field>(g: &Poly2<F>, m: i64, order: usize) -> JetElement<F> {
    assert!(m >= 2 && m % 2 == 0, "even multiplicity required");
    let half = (m / 2) as usize;
    let mut b1 = Jet::zero(order);
    let mut b2 = Jet::zero(order);
    for ((i, j), c) in g.terms() {
        let e = half * (*i as usize) + *j as usize;
        if e >= order {
            continue;
        }
        let signed = if i % 2 == 0 {
            c.clone()
        } else {
            F::zero() - c.clone()
        };
        b1 = &b1 + &Jet::monomial(e, c.clone(), order);
        b2 = &b2 + &Jet::monomial(e, signed, order);
    }
    JetElement::Pair(b1, b2)
}

/// Pull a polynomial back along the normalization of `x^2 = z^m`, `m` odd:
/// substitutes `(t^m, t^2)`. Truncated at `order`.
pub fn pullback_odd<F: Field>(g: &Poly2<F>, m: i64, order: usize) -> JetElement<F> {
    assert!(m >= 3 && m % 2 == 1, "odd multiplicity >= 3 required");
    let mut b = Jet::zero(order);
    for ((i, j), c) in g.terms() {
        let e = (m as usize) * (*i as usize) + 2 * (*j as usize);
        if e >= order {
            continue;
        }
        b = &b + &Jet::monomial(e, c.clone(), order);
    }
    JetElement::Single(b)
}

/// The jet model of the local ring of an A_{m-1} singularity.
///
/// Node (`m` even): pairs of jets agreeing up to coefficient `(m-2)/2`.
/// Cusp (`m` odd): jets whose odd coefficients below `m` vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalAlgebra {
    pub m: i64,
    pub kind: SingularityKind,
    pub trunc: usize,
}

impl LocalAlgebra {
    /// Algebra for multiplicity `m` at the default truncation `order = m`.
    pub fn new(m: i64) -> Self {
        Self::with_truncation(m, m as usize)
    }

    pub fn with_truncation(m: i64, trunc: usize) -> Self {
        assert!(m >= 2, "multiplicity must be at least 2");
        let kind = if m % 2 == 0 {
            SingularityKind::Node
        } else {
            SingularityKind::Cusp
        };
        LocalAlgebra { m, kind, trunc }
    }

    pub fn branch_count(&self) -> usize {
        match self.kind {
            SingularityKind::Node => 2,
            SingularityKind::Cusp => 1,
        }
    }

    /// Ambient dimension of the flattened jet space at this truncation.
    pub fn ambient_dim(&self) -> usize {
        self.branch_count() * self.trunc
    }

    /// Does the element satisfy the derivative constraints of the algebra?
    pub fn contains<F: Field>(&self, e: &JetElement<F>) -> Result<bool, LocalRingError> {
        if e.branch_count() != self.branch_count() {
            return Err(LocalRingError::BranchMismatch {
                expected: self.branch_count(),
                found: e.branch_count(),
            });
        }
        if (e.order() as i64) < self.m {
            return Err(LocalRingError::TruncationTooShort {
                n: e.order(),
                m: self.m,
            });
        }
        Ok(match e {
            JetElement::Pair(a, b) => {
                let upto = ((self.m - 2) / 2) as usize;
                (0..=upto).all(|k| a.coeff(k) == b.coeff(k))
            }
            JetElement::Single(a) => (1..((self.m - 1) as usize))
                .step_by(2)
                .all(|k| a.coeff(k).is_zero()),
        })
    }

    /// Monomial vector-space basis of the algebra inside the truncated jet
    /// space.
    pub fn vector_space_basis<F: Field>(&self) -> Vec<JetElement<F>> {
        let n = self.trunc;
        let mut out = Vec::new();
        match self.kind {
            SingularityKind::Node => {
                let shared = ((self.m / 2) as usize).min(n);
                for k in 0..shared {
                    out.push(JetElement::Pair(
                        Jet::monomial(k, F::one(), n),
                        Jet::monomial(k, F::one(), n),
                    ));
                }
                for k in shared..n {
                    out.push(JetElement::Pair(
                        Jet::monomial(k, F::one(), n),
                        Jet::zero(n),
                    ));
                    out.push(JetElement::Pair(
                        Jet::zero(n),
                        Jet::monomial(k, F::one(), n),
                    ));
                }
            }
            SingularityKind::Cusp => {
                for k in 0..n {
                    if k % 2 == 0 || (k as i64) >= self.m {
                        out.push(JetElement::Single(Jet::monomial(k, F::one(), n)));
                    }
                }
            }
        }
        out
    }

    /// Same basis with the unit removed: spans the maximal ideal.
    pub fn maximal_ideal_basis<F: Field>(&self) -> Vec<JetElement<F>> {
        self.vector_space_basis::<F>()
            .into_iter()
            .filter(|e: &JetElement<F>| match e {
                JetElement::Single(a) => a.coeff(0).is_zero(),
                JetElement::Pair(a, _) => a.coeff(0).is_zero(),
            })
            .collect()
    }

    /// Dimension of the algebra as a subspace of the truncated jet space.
    pub fn subspace_dim(&self) -> usize {
        self.vector_space_basis::<crate::scalar::Rat>().len()
    }
}

/// Smallest coefficient subspace containing `generators` and closed under
/// multiplication by the algebra. Products are truncated at the generators'
/// common order, which must match the algebra's truncation.
pub fn module_span<F: Field>(generators: &[JetElement<F>], alg: &LocalAlgebra) -> Subspace<F> {
    let ambient = alg.ambient_dim();
    let mut space = Subspace::span(ambient, generators.iter().map(JetElement::to_vec).collect());
    let action: Vec<JetElement<F>> = alg.vector_space_basis();
    loop {
        let mut grew = false;
        let rows: Vec<Vec<F>> = space.basis().to_vec();
        for row in &rows {
            let e = JetElement::from_vec(alg.branch_count(), alg.trunc, row);
            for a in &action {
                let prod = multiply(a, &e).to_vec();
                if !space.contains(&prod) {
                    let mut gens: Vec<Vec<F>> = space.basis().to_vec();
                    gens.push(prod);
                    space = Subspace::span(ambient, gens);
                    grew = true;
                }
            }
        }
        if !grew {
            return space;
        }
    }
}

/// Is the subspace closed under the algebra action?
pub fn is_module<F: Field>(space: &Subspace<F>, alg: &LocalAlgebra) -> bool {
    assert_eq!(space.ambient(), alg.ambient_dim(), "ambient mismatch");
    let action: Vec<JetElement<F>> = alg.vector_space_basis();
    space.basis().iter().all(|row| {
        let e = JetElement::from_vec(alg.branch_count(), alg.trunc, row);
        action
            .iter()
            .all(|a| space.contains(&multiply(a, &e).to_vec()))
    })
}

/// Minimal number of generators of the module `space` over the algebra:
/// the codimension of (maximal ideal) * space inside space.
pub fn minimal_generator_count<F: Field>(space: &Subspace<F>, alg: &LocalAlgebra) -> usize {
    debug_assert!(is_module(space, alg));
    let ideal: Vec<JetElement<F>> = alg.maximal_ideal_basis();
    let mut products: Vec<Vec<F>> = Vec::new();
    for row in space.basis() {
        let e = JetElement::from_vec(alg.branch_count(), alg.trunc, row);
        for a in &ideal {
            products.push(multiply(a, &e).to_vec());
        }
    }
    let msub = Subspace::span(alg.ambient_dim(), products);
    space.dim() - msub.dim()
}

/// A module is free of rank one over the algebra exactly when it has a
/// single generator and its dimension matches the algebra's.
pub fn is_free_rank_one<F: Field>(space: &Subspace<F>, alg: &LocalAlgebra) -> bool {
    minimal_generator_count(space, alg) == 1 && space.dim() == alg.subspace_dim()
}

/// Serialization shape for a jet element: one array of `num/den` strings
/// per branch.
#[derive(Serialize)]
pub struct JetElementWire {
    pub branches: Vec<Vec<String>>,
}

impl From<&JetElement<crate::scalar::Rat>> for JetElementWire {
    fn from(e: &JetElement<crate::scalar::Rat>) -> Self {
        let branch = |j: &Jet<crate::scalar::Rat>| {
            j.coeffs().iter().map(crate::scalar::rat_string).collect()
        };
        JetElementWire {
            branches: match e {
                JetElement::Single(a) => vec![branch(a)],
                JetElement::Pair(a, b) => vec![branch(a), branch(b)],
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Rat};

    fn pair(a: &[i64], b: &[i64]) -> JetElement<Rat> {
        JetElement::Pair(
            Jet::from_coeffs(a.iter().map(|&x| rat(x)).collect()),
            Jet::from_coeffs(b.iter().map(|&x| rat(x)).collect()),
        )
    }

    fn single(a: &[i64]) -> JetElement<Rat> {
        JetElement::Single(Jet::from_coeffs(a.iter().map(|&x| rat(x)).collect()))
    }

    #[test]
    fn pullback_even_examples() {
        // x at m = 4: branches (t^2, -t^2)
        let e = pullback_even(&Poly2::<Rat>::x(), 4, 4);
        assert_eq!(e, pair(&[0, 0, 1, 0], &[0, 0, -1, 0]));
        // constants
        let e = pullback_even(&Poly2::constant(rat(1)), 6, 6);
        assert_eq!(e, pair(&[1, 0, 0, 0, 0, 0], &[1, 0, 0, 0, 0, 0]));
        // z at m = 2: both branches t
        let e = pullback_even(&Poly2::<Rat>::z(), 2, 2);
        assert_eq!(e, pair(&[0, 1], &[0, 1]));
    }

    #[test]
    fn pullback_odd_examples() {
        // z at m = 3: t^2
        let e = pullback_odd(&Poly2::<Rat>::z(), 3, 3);
        assert_eq!(e, single(&[0, 0, 1]));
        // x at m = 5: t^5, needs room past the default window
        let e = pullback_odd(&Poly2::<Rat>::x(), 5, 7);
        assert_eq!(e, single(&[0, 0, 0, 0, 0, 1, 0]));
        let e = pullback_odd(&Poly2::constant(rat(1)), 3, 3);
        assert_eq!(e, single(&[1, 0, 0]));
    }

    #[test]
    fn membership_examples() {
        let node2 = LocalAlgebra::new(2);
        assert!(node2.contains(&pair(&[1, 1], &[1, -1])).unwrap());

        let node4 = LocalAlgebra::new(4);
        assert!(!node4
            .contains(&pair(&[0, 1, 0, 0], &[0, -1, 0, 0]))
            .unwrap());

        let cusp3 = LocalAlgebra::new(3);
        assert!(cusp3.contains(&single(&[0, 0, 0, 1]).truncate(4)).unwrap());
        assert!(!cusp3.contains(&single(&[0, 1, 0])).unwrap());
    }

    #[test]
    fn membership_requires_enough_coefficients() {
        let node4 = LocalAlgebra::new(4);
        assert!(matches!(
            node4.contains(&pair(&[1, 1], &[1, 1])),
            Err(LocalRingError::TruncationTooShort { n: 2, m: 4 })
        ));
        assert!(matches!(
            node4.contains(&single(&[1, 0, 0, 0])),
            Err(LocalRingError::BranchMismatch {
                expected: 2,
                found: 1
            })
        ));
    }

    #[test]
    fn multiplication_examples() {
        let one = pair(&[1, 0], &[1, 0]);
        let t = pair(&[0, 1], &[0, 1]);
        assert_eq!(multiply(&one, &t), t);
    }

    #[test]
    fn module_span_single_branch_one_generator() {
        let alg = LocalAlgebra::with_truncation(2, 1);
        let space = module_span(&[pair(&[1], &[0])], &alg);
        assert_eq!(space.dim(), 1);
        assert!(space.contains(&[rat(5), rat(0)]));
        assert!(!space.contains(&[rat(0), rat(1)]));
    }

    #[test]
    fn non_module_detected() {
        let alg = LocalAlgebra::new(4);
        let space = Subspace::span(
            8,
            vec![
                pair(&[1, 0, 0, 0], &[1, 0, 0, 0]).to_vec(),
                pair(&[0, 1, 0, 0], &[0, -1, 0, 0]).to_vec(),
            ],
        );
        assert!(!is_module(&space, &alg));
        // multiplying (t, -t) by the diagonal t lands on (t^2, -t^2),
        // so the closure is strictly bigger
        let closure = module_span(
            &[
                pair(&[1, 0, 0, 0], &[1, 0, 0, 0]),
                pair(&[0, 1, 0, 0], &[0, -1, 0, 0]),
            ],
            &alg,
        );
        assert!(closure.dim() > space.dim());
        assert!(closure.contains(&pair(&[0, 0, 1, 0], &[0, 0, -1, 0]).to_vec()));
    }

    #[test]
    fn module_span_is_the_closure_fixed_point() {
        // a subspace is a module exactly when spanning changes nothing,
        // and spanning is idempotent
        let seeds = [
            vec![pair(&[1, 0, 0, 0], &[0, 0, 0, 0])],
            vec![pair(&[0, 1, 0, 0], &[0, -1, 0, 0])],
            vec![
                pair(&[1, 1, 0, 0], &[1, 0, 0, 0]),
                pair(&[0, 0, 1, 0], &[0, 0, 0, 1]),
            ],
        ];
        for m in [2i64, 4, 6] {
            let alg = LocalAlgebra::with_truncation(m, 4);
            for gens in &seeds {
                let span = module_span(gens, &alg);
                assert!(is_module(&span, &alg));
                let rows: Vec<JetElement<Rat>> = span
                    .basis()
                    .iter()
                    .map(|r| JetElement::from_vec(2, 4, r))
                    .collect();
                assert_eq!(module_span(&rows, &alg), span);
                for g in gens {
                    assert!(span.contains(&g.to_vec()));
                }
                let start = Subspace::span(8, gens.iter().map(JetElement::to_vec).collect());
                assert_eq!(is_module(&start, &alg), start == span);
            }
        }
    }

    #[test]
    fn jet_wire_uses_rational_strings() {
        let e = JetElement::Pair(
            Jet::from_coeffs(vec![rat(1), Rat::new(1.into(), 2.into())]),
            Jet::from_coeffs(vec![rat(0), rat(-3)]),
        );
        let wire: JetElementWire = (&e).into();
        let json = serde_json::to_string(&wire).unwrap();
        assert_eq!(json, r#"{"branches":[["1/1","1/2"],["0/1","-3/1"]]}"#);
    }

    #[test]
    fn node_algebra_codimension() {
        for m in [2i64, 4, 6, 8] {
            let alg = LocalAlgebra::new(m);
            let expected_codim = ((m - 2) / 2 + 1) as usize;
            assert_eq!(alg.ambient_dim() - alg.subspace_dim(), expected_codim);
        }
    }

    #[test]
    fn homomorphism_on_small_cases() {
        // phi(g*h) = phi(g)*phi(h) and lands in the algebra
        let g = &(&Poly2::<Rat>::x() + &Poly2::z()) + &Poly2::constant(rat(2));
        let h = &Poly2::<Rat>::x() * &Poly2::z();
        let gh = &g * &h;
        for m in [2i64, 4, 6] {
            let alg = LocalAlgebra::new(m);
            let lhs = pullback_even(&gh, m, m as usize);
            let rhs = multiply(
                &pullback_even(&g, m, m as usize),
                &pullback_even(&h, m, m as usize),
            );
            assert_eq!(lhs, rhs);
            assert!(alg.contains(&lhs).unwrap());
        }
        for m in [3i64, 5, 7] {
            let alg = LocalAlgebra::new(m);
            let lhs = pullback_odd(&gh, m, m as usize);
            let rhs = multiply(
                &pullback_odd(&g, m, m as usize),
                &pullback_odd(&h, m, m as usize),
            );
            assert_eq!(lhs, rhs);
            assert!(alg.contains(&lhs).unwrap());
        }
    }
}
