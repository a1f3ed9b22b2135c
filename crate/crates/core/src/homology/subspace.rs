use super::matrix::{axpy, reduce, RationalMatrix, SparseVector};
use crate::puiseux::Rational;

/// A linear subspace of `Q^ambient`, stored as an independent spanning set.
#[derive(Clone, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<SparseVector>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    /// Span of the listed coordinate vectors.
    pub fn coordinate(ambient: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        Self::span(
            ambient,
            indices.into_iter().map(|i| {
                let mut v = SparseVector::new();
                v.insert(i, Rational::from_integer(1.into()));
                v
            }),
        )
    }

    pub fn span(ambient: usize, vectors: impl IntoIterator<Item = SparseVector>) -> Self {
        let vectors: Vec<SparseVector> = vectors.into_iter().collect();
        debug_assert!(vectors
            .iter()
            .all(|v| v.keys().next_back().is_none_or(|&i| i < ambient)));
        Subspace {
            ambient,
            basis: reduce(&vectors, false).basis,
        }
    }

    /// Column space of `m`.
    pub fn column_space(m: &RationalMatrix) -> Self {
        Self::span(m.nrows(), m.columns().iter().cloned())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SparseVector] {
        &self.basis
    }

    /// Basis vectors as matrix columns.
    pub fn to_matrix(&self) -> RationalMatrix {
        RationalMatrix::from_columns(self.ambient, self.basis.clone())
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        Self::span(
            self.ambient,
            self.basis.iter().chain(other.basis.iter()).cloned(),
        )
    }

    pub fn contains_vector(&self, v: &SparseVector) -> bool {
        let mut cols = self.basis.clone();
        cols.push(v.clone());
        reduce(&cols, false).rank() == self.dim()
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        self.sum(other).dim() == self.dim()
    }

    pub fn same_as(&self, other: &Subspace) -> bool {
        self.dim() == other.dim() && self.contains(other)
    }

    /// `Σ a_k basis_k`.
    fn combine(&self, coeffs: &SparseVector) -> SparseVector {
        let mut out = SparseVector::new();
        for (&k, a) in coeffs {
            axpy(&mut out, a, &self.basis[k]);
        }
        out
    }

    /// `{x in self : m x in target}`.
    pub fn preimage_within(&self, m: &RationalMatrix, target: &Subspace) -> Subspace {
        assert_eq!(m.ncols(), self.ambient, "map domain mismatch");
        assert_eq!(m.nrows(), target.ambient, "map codomain mismatch");
        let n = self.dim();
        let mut cols: Vec<SparseVector> = self.basis.iter().map(|b| m.mul_vector(b)).collect();
        cols.extend(target.basis.iter().cloned());
        let joint = RationalMatrix::from_columns(m.nrows(), cols);
        let vectors = joint.kernel().into_iter().map(|k| {
            let head: SparseVector = k.into_iter().filter(|(i, _)| *i < n).collect();
            self.combine(&head)
        });
        Self::span(self.ambient, vectors)
    }

    /// `{x in self : m x = 0}`.
    pub fn kernel_within(&self, m: &RationalMatrix) -> Subspace {
        self.preimage_within(m, &Subspace::zero(m.nrows()))
    }

    /// `m(self)`.
    pub fn image(&self, m: &RationalMatrix) -> Subspace {
        assert_eq!(m.ncols(), self.ambient, "map domain mismatch");
        Self::span(m.nrows(), self.basis.iter().map(|b| m.mul_vector(b)))
    }

    /// `self ∩ other`, computed from the null space of `[self | other]`.
    pub fn intersection(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        let identity = RationalMatrix::from_columns(
            self.ambient,
            (0..self.ambient)
                .map(|i| {
                    let mut v = SparseVector::new();
                    v.insert(i, Rational::from_integer(1.into()));
                    v
                })
                .collect(),
        );
        self.preimage_within(&identity, other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vec_of(xs: &[i64]) -> SparseVector {
        xs.iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(i, &x)| (i, Rational::from_integer(x.into())))
            .collect()
    }

    #[test]
    fn intersection_of_planes_is_a_line() {
        let u = Subspace::span(3, [vec_of(&[1, 0, 0]), vec_of(&[0, 1, 0])]);
        let w = Subspace::span(3, [vec_of(&[0, 1, 0]), vec_of(&[0, 0, 1])]);
        let i = u.intersection(&w);
        assert_eq!(i.dim(), 1);
        assert!(i.contains_vector(&vec_of(&[0, 5, 0])));
        assert_eq!(u.sum(&w).dim(), 3);
        // dim(U ∩ W) = dim U + dim W - dim(U + W)
        assert_eq!(i.dim(), u.dim() + w.dim() - u.sum(&w).dim());
    }

    #[test]
    fn span_drops_dependent_vectors() {
        let s = Subspace::span(
            3,
            [vec_of(&[1, 2, 3]), vec_of(&[2, 4, 6]), vec_of(&[0, 0, 0])],
        );
        assert_eq!(s.dim(), 1);
        assert!(s.same_as(&Subspace::span(3, [vec_of(&[-1, -2, -3])])));
    }

    #[test]
    fn preimage_and_kernel() {
        // m: Q^3 -> Q^2, (x,y,z) -> (x+y, z)
        let m = RationalMatrix::from_rows(&[vec![1, 1, 0], vec![0, 0, 1]]);
        let all = Subspace::coordinate(3, 0..3);
        let k = all.kernel_within(&m);
        assert_eq!(k.dim(), 1);
        assert!(k.contains_vector(&vec_of(&[1, -1, 0])));
        let target = Subspace::coordinate(2, [0]);
        let pre = all.preimage_within(&m, &target);
        assert_eq!(pre.dim(), 2);
        assert!(pre.contains_vector(&vec_of(&[1, 0, 0])));
        assert!(!pre.contains_vector(&vec_of(&[0, 0, 1])));
        assert_eq!(all.image(&m).dim(), 2);
    }
}
