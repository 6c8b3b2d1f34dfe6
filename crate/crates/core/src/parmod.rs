//! Parabolic modules of A-type singularities at the jet level.
//!
//! At a node of multiplicity `m` the data is an `m/2`-dimensional subspace
//! of the pairs of `(m/2)`-jets (one jet per branch of the normalization),
//! closed under multiplication by the local ring; at a cusp it is an
//! `(m-1)/2`-dimensional subspace of single `(m-1)`-jets. Attaching to such
//! a subspace the local sections whose leading jets fall inside it produces
//! a rank-1 sheaf on the singular curve; this module verifies, by exact
//! subspace computations, which distinct parabolic data produce the same
//! sheaf.

use crate::linalg::Subspace;
use crate::localring::{is_module, LocalAlgebra, SingularityKind};
use crate::scalar::{Field, Rat};
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParmodError {
    #[error("shift by {shift} exceeds the truncation window {window}")]
    ShiftOutOfWindow { shift: i64, window: usize },
    #[error("shift by {0} requires the shrinking branch to vanish to order {0}")]
    ShiftHitsPole(i64),
    #[error("twisting is only defined for two-branch (node) subspaces")]
    TwistNeedsTwoBranches,
}

/// A gluing parameter: a scalar, or the point at infinity of its
/// projective line.
#[derive(Clone, Debug, PartialEq)]
pub enum Lambda {
    Finite(Rat),
    Infinity,
}

/// A subspace of the space of branch-tuples of jets at a fixed truncation
/// window. Coordinates are the branch-1 coefficients followed by the
/// branch-2 coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct JetSubspace<F: Field> {
    pub branches: usize,
    pub window: usize,
    pub space: Subspace<F>,
}

impl<F: Field> JetSubspace<F> {
    pub fn new(branches: usize, window: usize, space: Subspace<F>) -> Self {
        assert_eq!(space.ambient(), branches * window, "ambient mismatch");
        JetSubspace {
            branches,
            window,
            space,
        }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn codim(&self) -> usize {
        self.space.codim()
    }

    /// Image under coefficient truncation to a smaller window.
    pub fn truncate(&self, window: usize) -> JetSubspace<F> {
        assert!(window <= self.window);
        let p = coefficient_projection::<F>(self.branches, self.window, window);
        JetSubspace::new(self.branches, window, self.space.image(&p))
    }

    /// Tensor locally by the divisor `k p1 - k p2`: divide branch-1 jets by
    /// t^k and multiply branch-2 jets by t^k, re-truncating to the common
    /// surviving window. Fails if the subspace contains an element whose
    /// shrinking branch is not divisible by t^k.
    pub fn twist(&self, k: i64) -> Result<JetSubspace<F>, ParmodError> {
        if self.branches != 2 {
            return Err(ParmodError::TwistNeedsTwoBranches);
        }
        if k == 0 {
            return Ok(self.clone());
        }
        let shift = k.unsigned_abs() as usize;
        if shift >= self.window {
            return Err(ParmodError::ShiftOutOfWindow {
                shift: k,
                window: self.window,
            });
        }
        // the branch divided by t^k must vanish to order k
        let (down, up) = if k > 0 { (0usize, 1usize) } else { (1, 0) };
        for row in self.space.basis() {
            for j in 0..shift {
                if !row[down * self.window + j].is_zero() {
                    return Err(ParmodError::ShiftHitsPole(k.abs()));
                }
            }
        }
        let w2 = self.window - shift;
        let mut p = vec![vec![F::zero(); 2 * self.window]; 2 * w2];
        for j in 0..w2 {
            p[down * w2 + j][down * self.window + j + shift] = F::one();
            if j >= shift {
                p[up * w2 + j][up * self.window + j - shift] = F::one();
            }
        }
        Ok(JetSubspace::new(2, w2, self.space.image(&p)))
    }
}

/// Matrix of the map keeping the first `out` coefficients of each branch.
fn coefficient_projection<F: Field>(branches: usize, from: usize, out: usize) -> Vec<Vec<F>> {
    let mut p = vec![vec![F::zero(); branches * from]; branches * out];
    for b in 0..branches {
        for j in 0..out {
            p[b * out + j][b * from + j] = F::one();
        }
    }
    p
}

/// Parabolic datum at one singularity: a subspace of the jet-vector space
/// with the module property over the local ring.
#[derive(Clone, Debug, PartialEq)]
pub struct ParabolicSubspace {
    pub m: i64,
    pub kind: SingularityKind,
    pub space: Subspace<Rat>,
}

impl ParabolicSubspace {
    /// The jet-vector window: `m/2` coefficients per branch at a node,
    /// `m - 1` at a cusp.
    pub fn window(m: i64, kind: SingularityKind) -> usize {
        match kind {
            SingularityKind::Node => (m / 2) as usize,
            SingularityKind::Cusp => (m - 1) as usize,
        }
    }

    pub fn branches(&self) -> usize {
        match self.kind {
            SingularityKind::Node => 2,
            SingularityKind::Cusp => 1,
        }
    }

    /// Dimension required of a parabolic subspace: `m/2` or `(m-1)/2`.
    pub fn required_dim(&self) -> usize {
        match self.kind {
            SingularityKind::Node => (self.m / 2) as usize,
            SingularityKind::Cusp => ((self.m - 1) / 2) as usize,
        }
    }

    /// The local algebra acting on the jet-vector window.
    pub fn algebra(&self) -> LocalAlgebra {
        LocalAlgebra::with_truncation(self.m, Self::window(self.m, self.kind))
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_module(&self) -> bool {
        is_module(&self.space, &self.algebra())
    }

    /// Dimension and module condition together.
    pub fn is_valid(&self) -> bool {
        self.dim() == self.required_dim() && self.is_module()
    }
}

fn node_subspace(m: i64, rows: Vec<Vec<Rat>>) -> ParabolicSubspace {
    assert!(m >= 2 && m % 2 == 0, "node multiplicity must be even");
    let w = (m / 2) as usize;
    ParabolicSubspace {
        m,
        kind: SingularityKind::Node,
        space: Subspace::span(2 * w, rows),
    }
}

fn unit(ambient: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); ambient];
    v[i] = Rat::one();
    v
}

/// The gluing-line subspace at an ordinary node: the span of `(1, lambda)`
/// in the pair of branch fibres, or of `(0, 1)` at infinity.
pub fn u_lambda(lambda: &Lambda) -> ParabolicSubspace {
    let row = match lambda {
        Lambda::Finite(l) => vec![Rat::one(), l.clone()],
        Lambda::Infinity => vec![Rat::zero(), Rat::one()],
    };
    node_subspace(2, vec![row])
}

/// The subspace with all branch-2 components zero. Its quotient is the
/// branch-2 coordinate space.
pub fn u_zero(m: i64) -> ParabolicSubspace {
    let w = (m / 2) as usize;
    node_subspace(m, (0..w).map(|k| unit(2 * w, k)).collect())
}

/// The subspace with all branch-1 components zero.
pub fn u_infinity(m: i64) -> ParabolicSubspace {
    let w = (m / 2) as usize;
    node_subspace(m, (0..w).map(|k| unit(2 * w, w + k)).collect())
}

/// The mixed-vanishing subspace used when `m` is divisible by 4: branch-1
/// jets vanishing at the point, branch-2 jets vanishing to order
/// `m/2 - 1`.
pub fn u_mixed(m: i64) -> ParabolicSubspace {
    assert!(m >= 4 && m % 4 == 0, "multiplicity must be divisible by 4");
    let w = (m / 2) as usize;
    let mut rows: Vec<Vec<Rat>> = (1..w).map(|k| unit(2 * w, k)).collect();
    rows.push(unit(2 * w, 2 * w - 1));
    node_subspace(m, rows)
}

/// Local sections of the sheaf attached to a parabolic subspace: the jets
/// (at truncation `n`, in the untwisted frame) whose leading jet-vector
/// lies in `u`, then shifted by the twist `k p1 - k p2`.
pub fn restriction_kernel(
    k: i64,
    u: &ParabolicSubspace,
    n: usize,
) -> Result<JetSubspace<Rat>, ParmodError> {
    let w = ParabolicSubspace::window(u.m, u.kind);
    assert!(n >= w, "truncation must cover the jet-vector window");
    let branches = u.branches();
    let p = coefficient_projection::<Rat>(branches, n, w);
    let raw = JetSubspace::new(branches, n, u.space.preimage(&p, branches * n));
    if k == 0 {
        Ok(raw)
    } else {
        raw.twist(k)
    }
}

/// Jet-level verification that two different parabolic data produce the
/// same sheaf: the sections through the branch-2-vanishing subspace on the
/// trivial bundle coincide with the sections through the
/// branch-1-vanishing subspace on the bundle twisted by
/// `(m/2)(p1 - p2)`, even though the two underlying bundles differ.
pub fn verify_nonfibration(m: i64) -> bool {
    assert!(m >= 2 && m % 2 == 0, "even multiplicity required");
    let n = 2 * m as usize;
    let shift = (m / 2) as usize;
    let plain = match restriction_kernel(0, &u_zero(m), n) {
        Ok(s) => s.truncate(n - shift),
        Err(_) => return false,
    };
    let twisted = match restriction_kernel(0, &u_infinity(m), n).and_then(|s| s.twist(m / 2)) {
        Ok(s) => s,
        Err(_) => return false,
    };
    plain == twisted
}

/// The analogue for `m` divisible by 4, with the mixed-vanishing subspace
/// on the bundle twisted by `p1 - p2`: checks dimension, the module
/// property, and that its sections coincide with those of the
/// branch-2-vanishing subspace on the trivial bundle.
pub fn verify_mixed_overlap(m: i64) -> bool {
    assert!(m >= 4 && m % 4 == 0, "multiplicity must be divisible by 4");
    let n = 2 * m as usize;
    let mixed = u_mixed(m);
    if !mixed.is_valid() {
        return false;
    }
    let plain = match restriction_kernel(0, &u_zero(m), n) {
        Ok(s) => s.truncate(n - 1),
        Err(_) => return false,
    };
    let twisted = match restriction_kernel(0, &mixed, n).and_then(|s| s.twist(1)) {
        Ok(s) => s,
        Err(_) => return false,
    };
    plain == twisted
}

/// Serialization shape for subspaces: basis matrix of `num/den` strings.
#[derive(Serialize)]
pub struct SubspaceWire {
    pub ambient: usize,
    pub dim: usize,
    pub basis: Vec<Vec<String>>,
}

impl From<&Subspace<Rat>> for SubspaceWire {
    fn from(s: &Subspace<Rat>) -> Self {
        SubspaceWire {
            ambient: s.ambient(),
            dim: s.dim(),
            basis: s
                .basis()
                .iter()
                .map(|row| row.iter().map(crate::scalar::rat_string).collect())
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::localring::{is_free_rank_one, minimal_generator_count, module_span, JetElement};
    use crate::scalar::rat;

    fn v(xs: &[i64]) -> Vec<Rat> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn lambda_examples() {
        let diag = u_lambda(&Lambda::Finite(rat(1)));
        assert!(diag.space.contains(&v(&[1, 1])));
        assert_eq!(diag.dim(), 1);

        let zero = u_lambda(&Lambda::Finite(rat(0)));
        assert_eq!(zero, u_zero(2));

        let inf = u_lambda(&Lambda::Infinity);
        assert_eq!(inf, u_infinity(2));
        assert!(inf.space.contains(&v(&[0, 1])));
    }

    #[test]
    fn u_zero_structure() {
        let u = u_zero(4);
        assert_eq!(u.dim(), 2);
        assert!(u.space.contains(&v(&[1, 0, 0, 0])));
        assert!(u.space.contains(&v(&[0, 1, 0, 0])));
        assert!(!u.space.contains(&v(&[0, 0, 1, 0])));
        // quotient is the branch-2 coordinate space
        let u6 = u_zero(6);
        let branch2 = Subspace::span(6, (3..6).map(|k| unit(6, k)).collect());
        assert_eq!(u6.space.intersection_dim(&branch2), 0);
        assert_eq!(u6.space.sum(&branch2).dim(), 6);
    }

    #[test]
    fn built_subspaces_are_valid_modules() {
        for m in [2i64, 4, 6, 8, 10] {
            assert!(u_zero(m).is_valid(), "u_zero({m})");
            assert!(u_infinity(m).is_valid(), "u_infinity({m})");
        }
        for m in [4i64, 8] {
            let u = u_mixed(m);
            assert!(u.is_valid(), "u_mixed({m})");
            assert_eq!(u.dim() as i64, m / 2);
        }
        for l in [
            Lambda::Finite(rat(0)),
            Lambda::Finite(rat(3)),
            Lambda::Infinity,
        ] {
            assert!(u_lambda(&l).is_valid());
        }
    }

    #[test]
    fn mixed_subspace_shape() {
        // m = 4: branch-1 jets vanish at 0, branch-2 jets live in the top
        // coefficient only
        let u = u_mixed(4);
        assert!(u.space.contains(&v(&[0, 1, 0, 0])));
        assert!(u.space.contains(&v(&[0, 0, 0, 1])));
        assert!(!u.space.contains(&v(&[1, 0, 0, 0])));
        assert!(!u.space.contains(&v(&[0, 0, 1, 0])));
    }

    #[test]
    fn kernel_matches_vanishing_description() {
        // branch-2-vanishing data: sections with s2 = 0 up to order m/2
        let m = 4i64;
        let n = 6usize;
        let ker = restriction_kernel(0, &u_zero(m), n).unwrap();
        assert_eq!(ker.codim(), 2);
        let mut yes = v(&[1, 1, 0, 0, 0, 0]);
        yes.extend(v(&[0, 0, 1, 0, 0, 0]));
        assert!(ker.space.contains(&yes));
        let mut no = v(&[1, 0, 0, 0, 0, 0]);
        no.extend(v(&[0, 1, 0, 0, 0, 0]));
        assert!(!ker.space.contains(&no));

        // branch-1-vanishing data: sections with s1 = 0 up to order m/2
        let ker = restriction_kernel(0, &u_infinity(m), n).unwrap();
        let mut yes = v(&[0, 0, 1, 0, 0, 0]);
        yes.extend(v(&[1, 1, 0, 0, 0, 0]));
        assert!(ker.space.contains(&yes));
        let mut no = v(&[0, 1, 0, 0, 0, 0]);
        no.extend(v(&[1, 0, 0, 0, 0, 0]));
        assert!(!ker.space.contains(&no));

        // gluing-line data at an ordinary node: s2(0) = lambda * s1(0)
        let ker = restriction_kernel(0, &u_lambda(&Lambda::Finite(rat(2))), 3).unwrap();
        let mut yes = v(&[1, 5, 0]);
        yes.extend(v(&[2, 7, 0]));
        assert!(ker.space.contains(&yes));
        let mut no = v(&[1, 0, 0]);
        no.extend(v(&[1, 0, 0]));
        assert!(!ker.space.contains(&no));
    }

    #[test]
    fn kernel_codimension_is_subspace_codimension() {
        for m in [2i64, 4, 6, 8, 10] {
            let n = (2 * m) as usize;
            for u in [u_zero(m), u_infinity(m)] {
                let ker = restriction_kernel(0, &u, n).unwrap();
                assert_eq!(ker.codim() as i64, m / 2);
            }
        }
        // cusp data: only the dimension/module conditions apply
        let m = 5i64;
        let w = ParabolicSubspace::window(m, SingularityKind::Cusp);
        let u = ParabolicSubspace {
            m,
            kind: SingularityKind::Cusp,
            space: Subspace::span(w, vec![unit(w, 2), unit(w, 3)]),
        };
        assert!(u.is_valid());
        let ker = restriction_kernel(0, &u, 8).unwrap();
        assert_eq!(ker.codim(), w - u.dim());
    }

    #[test]
    fn twist_identities() {
        let m = 4i64;
        let n = 8usize;
        let ker = restriction_kernel(0, &u_zero(m), n).unwrap();
        assert_eq!(ker.twist(0).unwrap(), ker);

        // shifting branch-1-vanishing sections by m/2 gives the
        // branch-2-vanishing sections
        let shifted = restriction_kernel(0, &u_infinity(m), n)
            .unwrap()
            .twist(m / 2)
            .unwrap();
        let plain = restriction_kernel(0, &u_zero(m), n)
            .unwrap()
            .truncate(n - 2);
        assert_eq!(shifted, plain);

        // down then up recovers the original on the surviving window
        let s = restriction_kernel(0, &u_infinity(m), n).unwrap();
        let back = s.twist(2).unwrap().twist(-2).unwrap();
        assert_eq!(back, s.truncate(n - 4));
    }

    #[test]
    fn twist_detects_poles() {
        let m = 4i64;
        let ker = restriction_kernel(0, &u_zero(m), 8).unwrap();
        // branch-1 jets are unconstrained here, so dividing by t hits a pole
        assert!(matches!(ker.twist(1), Err(ParmodError::ShiftHitsPole(1))));
        assert!(matches!(
            ker.twist(100),
            Err(ParmodError::ShiftOutOfWindow { .. })
        ));
    }

    #[test]
    fn nonfibration_examples() {
        for m in [2i64, 4, 6] {
            assert!(verify_nonfibration(m), "m = {m}");
        }
    }

    #[test]
    fn mixed_overlap_examples() {
        assert!(verify_mixed_overlap(4));
        assert!(verify_mixed_overlap(8));
    }

    #[test]
    fn freeness_dichotomy_at_ordinary_node() {
        let n = 4usize;
        let alg = LocalAlgebra::with_truncation(2, n);
        for l in [rat(1), rat(2), rat(-3)] {
            let lc = l.clone();
            let ker = restriction_kernel(0, &u_lambda(&Lambda::Finite(l)), n).unwrap();
            assert!(is_free_rank_one(&ker.space, &alg));
            // direct certificate: the element with leading jets (1, lambda)
            // generates the whole kernel by itself
            let mut gen = v(&[1, 0, 0, 0]);
            gen.extend([lc, Rat::zero(), Rat::zero(), Rat::zero()]);
            assert!(ker.space.contains(&gen));
            let single = module_span(&[JetElement::from_vec(2, n, &gen)], &alg);
            assert_eq!(single, ker.space);
        }
        for l in [Lambda::Finite(rat(0)), Lambda::Infinity] {
            let ker = restriction_kernel(0, &u_lambda(&l), n).unwrap();
            assert_eq!(minimal_generator_count(&ker.space, &alg), 2);
            assert!(!is_free_rank_one(&ker.space, &alg));
            // no single basis element comes close either
            for row in ker.space.basis() {
                let single = module_span(&[JetElement::from_vec(2, n, row)], &alg);
                assert!(single.dim() < ker.space.dim());
            }
        }
    }

    #[test]
    fn cusp_top_jets_form_modules() {
        // at a cusp the top half of the jet window is closed under the
        // even-monomial action and has the required dimension
        for m in [3i64, 5, 7, 9] {
            let w = ParabolicSubspace::window(m, SingularityKind::Cusp);
            let half = ((m - 1) / 2) as usize;
            let u = ParabolicSubspace {
                m,
                kind: SingularityKind::Cusp,
                space: Subspace::span(w, (w - half..w).map(|k| unit(w, k)).collect()),
            };
            assert!(u.is_valid(), "m = {m}");
            // dropping the top jet breaks the dimension requirement
            let thin = ParabolicSubspace {
                m,
                kind: SingularityKind::Cusp,
                space: Subspace::span(w, (w - half + 1..w).map(|k| unit(w, k)).collect()),
            };
            assert!(!thin.is_valid());
        }
    }

    #[test]
    fn kernel_codimension_for_every_builder() {
        for (u, expect) in [
            (u_lambda(&Lambda::Finite(rat(5))), 1usize),
            (u_lambda(&Lambda::Infinity), 1),
            (u_zero(8), 4),
            (u_infinity(6), 3),
            (u_mixed(8), 4),
        ] {
            let n = 2 * ParabolicSubspace::window(u.m, u.kind);
            let ker = restriction_kernel(0, &u, n).unwrap();
            assert_eq!(ker.codim(), expect);
        }
    }
}
