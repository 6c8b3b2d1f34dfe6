//! Exact dense linear algebra over a field: reduced row echelon form, null
//! spaces, and canonical subspaces of a finite-dimensional coordinate space.
//!
//! Everything here is deterministic and exact; subspace equality is equality
//! of reduced row echelon bases.

use crate::scalar::Field;
use num_traits::Zero;

/// Bring `rows` into reduced row echelon form in place. Returns the pivot
/// column of each nonzero row, in order. Zero rows sink to the bottom.
pub fn rref<F: Field>(rows: &mut Vec<Vec<F>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(src) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, src);
        let inv = rows[r][c].inv();
        for x in rows[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let factor = row[c].clone();
                for (x, p) in row.iter_mut().zip(pivot_row.iter()) {
                    *x = x.clone() - factor.clone() * p.clone();
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Basis of the right null space `{ v : M v = 0 }` of the matrix with the
/// given rows, inside a coordinate space of dimension `ncols`.
pub fn null_space<F: Field>(rows: &[Vec<F>], ncols: usize) -> Vec<Vec<F>> {
    let mut m: Vec<Vec<F>> = rows.to_vec();
    let pivots = rref(&mut m);
    let mut basis = Vec::new();
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; ncols];
        for &p in &pivots {
            v[p] = true;
        }
        v
    };
    for free in 0..ncols {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![F::zero(); ncols];
        v[free] = F::one();
        for (row, &p) in m.iter().zip(pivots.iter()) {
            v[p] = F::zero() - row[free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Matrix-vector product.
pub fn mat_vec<F: Field>(rows: &[Vec<F>], v: &[F]) -> Vec<F> {
    rows.iter()
        .map(|row| {
            row.iter()
                .zip(v.iter())
                .fold(F::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
        })
        .collect()
}

/// Matrix product `a * b`.
pub fn mat_mul<F: Field>(a: &[Vec<F>], b: &[Vec<F>]) -> Vec<Vec<F>> {
    let bn = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            let mut out = vec![F::zero(); bn];
            for (k, x) in row.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for j in 0..bn {
                    out[j] = out[j].clone() + x.clone() * b[k][j].clone();
                }
            }
            out
        })
        .collect()
}

/// A linear subspace of `F^ambient` in canonical (reduced row echelon) form.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace<F: Field> {
    ambient: usize,
    basis: Vec<Vec<F>>,
}

impl<F: Field> Subspace<F> {
    /// Span of the given generators.
    pub fn span(ambient: usize, generators: Vec<Vec<F>>) -> Self {
        for g in &generators {
            assert_eq!(g.len(), ambient, "generator length mismatch");
        }
        let mut basis = generators;
        rref(&mut basis);
        Subspace { ambient, basis }
    }

    /// The zero subspace.
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    /// The whole coordinate space.
    pub fn full(ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| {
                let mut v = vec![F::zero(); ambient];
                v[i] = F::one();
                v
            })
            .collect();
        Subspace { ambient, basis }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn codim(&self) -> usize {
        self.ambient - self.basis.len()
    }

    /// Canonical basis rows.
    pub fn basis(&self) -> &[Vec<F>] {
        &self.basis
    }

    pub fn contains(&self, v: &[F]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let mut v = v.to_vec();
        for row in &self.basis {
            let lead = row
                .iter()
                .position(|x| !x.is_zero())
                .expect("basis rows are nonzero");
            if !v[lead].is_zero() {
                let factor = v[lead].clone();
                for j in 0..self.ambient {
                    let delta = factor.clone() * row[j].clone();
                    v[j] = v[j].clone() - delta;
                }
            }
        }
        v.iter().all(Zero::is_zero)
    }

    pub fn is_subspace_of(&self, other: &Subspace<F>) -> bool {
        self.basis.iter().all(|row| other.contains(row))
    }

    /// Smallest subspace containing both operands.
    pub fn sum(&self, other: &Subspace<F>) -> Subspace<F> {
        assert_eq!(self.ambient, other.ambient);
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient, rows)
    }

    /// Dimension of the intersection, via the rank identity.
    pub fn intersection_dim(&self, other: &Subspace<F>) -> usize {
        self.dim() + other.dim() - self.sum(other).dim()
    }

    /// Preimage `{ v : P v ∈ self }` under the linear map with matrix `p`
    /// (rows of `p` have length `domain`, there are `ambient` of them).
    pub fn preimage(&self, p: &[Vec<F>], domain: usize) -> Subspace<F> {
        assert_eq!(p.len(), self.ambient, "map must land in our ambient space");
        // Functionals cutting out `self`, i.e. the null space of its basis.
        let cuts = null_space(&self.basis, self.ambient);
        // v is in the preimage iff every functional kills P v.
        let basis = null_space(&mat_mul(&cuts, p), domain);
        Subspace::span(domain, basis)
    }

    /// Image of the subspace under the linear map with matrix `p`
    /// (`p` has one row per output coordinate).
    pub fn image(&self, p: &[Vec<F>]) -> Subspace<F> {
        let rows: Vec<Vec<F>> = self.basis.iter().map(|v| mat_vec(p, v)).collect();
        Subspace::span(p.len(), rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Rat};

    fn v(xs: &[i64]) -> Vec<Rat> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn rref_canonicalizes() {
        let a = Subspace::span(3, vec![v(&[1, 1, 0]), v(&[0, 1, 1])]);
        let b = Subspace::span(3, vec![v(&[1, 0, -1]), v(&[2, 3, 1])]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn null_space_of_projection() {
        let p = vec![v(&[1, 0, 0]), v(&[0, 1, 0])];
        let ns = null_space(&p, 3);
        assert_eq!(ns.len(), 1);
        assert_eq!(ns[0], v(&[0, 0, 1]));
    }

    #[test]
    fn preimage_of_line_under_coordinate_projection() {
        // P : F^4 -> F^2 keeps the first two coordinates.
        let p = vec![v(&[1, 0, 0, 0]), v(&[0, 1, 0, 0])];
        let target = Subspace::span(2, vec![v(&[1, 2])]);
        let pre = target.preimage(&p, 4);
        assert_eq!(pre.dim(), 3);
        assert!(pre.contains(&v(&[1, 2, 0, 0])));
        assert!(pre.contains(&v(&[0, 0, 1, 0])));
        assert!(!pre.contains(&v(&[1, 0, 0, 0])));
    }

    #[test]
    fn sum_and_intersection_dims() {
        let a = Subspace::span(3, vec![v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let b = Subspace::span(3, vec![v(&[0, 1, 0]), v(&[0, 0, 1])]);
        assert_eq!(a.sum(&b).dim(), 3);
        assert_eq!(a.intersection_dim(&b), 1);
    }
}
