use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::puiseux::Rational;

/// Sparse vector: index → nonzero entry.
pub type SparseVector = BTreeMap<usize, Rational>;

/// `y += factor * x`, dropping entries that cancel.
pub(crate) fn axpy(y: &mut SparseVector, factor: &Rational, x: &SparseVector) {
    for (&i, v) in x {
        let delta = factor * v;
        match y.get_mut(&i) {
            Some(cur) => {
                *cur += delta;
                if cur.is_zero() {
                    y.remove(&i);
                }
            }
            None => {
                if !delta.is_zero() {
                    y.insert(i, delta);
                }
            }
        }
    }
}

/// Column-sparse exact rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    nrows: usize,
    columns: Vec<SparseVector>,
}

impl RationalMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        RationalMatrix {
            nrows,
            columns: vec![SparseVector::new(); ncols],
        }
    }

    /// Builds from columns; explicit zeros are removed.
    ///
    /// # Panics
    /// If an entry's row index is out of range.
    pub fn from_columns(nrows: usize, columns: Vec<SparseVector>) -> Self {
        let columns = columns
            .into_iter()
            .map(|mut c| {
                c.retain(|_, v| !v.is_zero());
                if let Some((&r, _)) = c.iter().next_back() {
                    assert!(r < nrows, "row {r} out of range {nrows}");
                }
                c
            })
            .collect();
        RationalMatrix { nrows, columns }
    }

    /// Dense integer rows, mostly for tests.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut m = RationalMatrix::zeros(nrows, ncols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), ncols, "ragged rows");
            for (c, &x) in row.iter().enumerate() {
                if x != 0 {
                    m.columns[c].insert(r, Rational::from_integer(x.into()));
                }
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, c: usize) -> &SparseVector {
        &self.columns[c]
    }

    pub fn columns(&self) -> &[SparseVector] {
        &self.columns
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.columns[c]
            .get(&r)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(BTreeMap::len).sum()
    }

    pub fn transpose(&self) -> Self {
        let mut cols = vec![SparseVector::new(); self.nrows];
        for (c, col) in self.columns.iter().enumerate() {
            for (&r, v) in col {
                cols[r].insert(c, v.clone());
            }
        }
        RationalMatrix {
            nrows: self.ncols(),
            columns: cols,
        }
    }

    pub fn mul_vector(&self, x: &SparseVector) -> SparseVector {
        let mut y = SparseVector::new();
        for (&c, v) in x {
            axpy(&mut y, v, &self.columns[c]);
        }
        y
    }

    pub fn mul(&self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.ncols(), rhs.nrows, "shape mismatch");
        RationalMatrix {
            nrows: self.nrows,
            columns: rhs.columns.iter().map(|c| self.mul_vector(c)).collect(),
        }
    }

    /// `[self | rhs]`.
    pub fn hcat(&self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.nrows, rhs.nrows, "row count mismatch");
        let mut columns = self.columns.clone();
        columns.extend(rhs.columns.iter().cloned());
        RationalMatrix {
            nrows: self.nrows,
            columns,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(BTreeMap::is_empty)
    }

    pub fn rank(&self) -> usize {
        reduce(&self.columns, false).rank()
    }

    /// Basis of the null space, as coefficient vectors over the columns.
    pub fn kernel(&self) -> Vec<SparseVector> {
        reduce(&self.columns, true).kernel
    }
}

/// Result of left-to-right column reduction.
pub(crate) struct Reduction {
    /// Nonzero reduced columns; their lowest nonzero rows are distinct, so they
    /// form a basis of the column space.
    pub basis: Vec<SparseVector>,
    /// Column combinations that reduce to zero (only when requested).
    pub kernel: Vec<SparseVector>,
}

impl Reduction {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }
}

/// Gaussian column elimination keyed on the lowest nonzero row of each column.
pub(crate) fn reduce(columns: &[SparseVector], track_kernel: bool) -> Reduction {
    let mut pivot_of_row: HashMap<usize, usize> = HashMap::new();
    let mut basis: Vec<SparseVector> = Vec::new();
    let mut basis_ops: Vec<SparseVector> = Vec::new();
    let mut kernel = Vec::new();
    for (j, col) in columns.iter().enumerate() {
        let mut c = col.clone();
        let mut ops = SparseVector::new();
        if track_kernel {
            ops.insert(j, Rational::one());
        }
        loop {
            let Some((&low, val)) = c.iter().next_back() else {
                if track_kernel {
                    kernel.push(ops);
                }
                break;
            };
            match pivot_of_row.get(&low) {
                Some(&k) => {
                    let factor = -(val / &basis[k][&low]);
                    axpy(&mut c, &factor, &basis[k]);
                    if track_kernel {
                        axpy(&mut ops, &factor, &basis_ops[k]);
                    }
                }
                None => {
                    pivot_of_row.insert(low, basis.len());
                    basis.push(c);
                    basis_ops.push(ops);
                    break;
                }
            }
        }
    }
    Reduction { basis, kernel }
}
