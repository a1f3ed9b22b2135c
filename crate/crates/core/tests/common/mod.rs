//! Dense exact linear algebra used as an independent oracle in tests.

#![allow(dead_code)]

use num_traits::{One, Zero};
use vanhom_core::complex::{CellComplex, CellId, CellSet};
use vanhom_core::puiseux::Rational;

pub type Vector = Vec<Rational>;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Row echelon form in place; returns pivot columns.
fn echelon(rows: &mut [Vector]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Rational::one() / &rows[r][c];
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for k in 0..ncols {
                    let delta = &f * &rows[r][k];
                    rows[i][k] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank of a set of vectors of length `n`.
pub fn rank(vectors: &[Vector]) -> usize {
    let mut rows = vectors.to_vec();
    echelon(&mut rows).len()
}

/// Null space of the map `x ↦ Σ x_k vectors[k]` (vectors as columns).
pub fn kernel(vectors: &[Vector], n: usize) -> Vec<Vector> {
    let m = vectors.len();
    // rows of the matrix whose columns are `vectors`
    let mut rows: Vec<Vector> = (0..n)
        .map(|i| vectors.iter().map(|v| v[i].clone()).collect())
        .collect();
    if rows.is_empty() {
        rows.push(vec![Rational::zero(); m]);
    }
    let pivots = echelon(&mut rows);
    let free: Vec<usize> = (0..m).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Rational::zero(); m];
            x[f] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                x[p] = -rows[r][f].clone();
            }
            x
        })
        .collect()
}

pub fn combine(vectors: &[Vector], coeffs: &[Rational], n: usize) -> Vector {
    let mut out = vec![Rational::zero(); n];
    for (v, a) in vectors.iter().zip(coeffs) {
        for i in 0..n {
            out[i] += a * &v[i];
        }
    }
    out
}

/// Dense cellular chains of a complex, cells of each dimension in id order.
pub struct DenseChains {
    pub cells: Vec<Vec<CellId>>,
}

impl DenseChains {
    pub fn new(c: &CellComplex) -> Self {
        let mut cells = vec![Vec::new(); c.dim() + 3];
        for cell in c.cells() {
            cells[cell.dim].push(cell.id);
        }
        DenseChains { cells }
    }

    pub fn len(&self, j: usize) -> usize {
        self.cells.get(j).map_or(0, Vec::len)
    }

    pub fn unit(&self, j: usize, id: CellId) -> Vector {
        let mut v = vec![Rational::zero(); self.len(j)];
        v[self.cells[j].iter().position(|&x| x == id).unwrap()] = Rational::one();
        v
    }

    /// `∂_j` applied to a dense `j`-chain.
    pub fn boundary(&self, c: &CellComplex, j: usize, x: &Vector) -> Vector {
        let mut out = vec![Rational::zero(); if j == 0 { 0 } else { self.len(j - 1) }];
        for (k, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for &(coef, face) in &c.cell(self.cells[j][k]).unwrap().boundary {
                let r = self.cells[j - 1].iter().position(|&x| x == face).unwrap();
                out[r] += a * int(coef);
            }
        }
        out
    }

    pub fn boundaries(&self, c: &CellComplex, j: usize, xs: &[Vector]) -> Vec<Vector> {
        xs.iter().map(|x| self.boundary(c, j, x)).collect()
    }
}

/// `dim H_j` of the subspace complex spanned degreewise by `spans`.
pub fn subspace_homology(
    dc: &DenseChains,
    c: &CellComplex,
    spans: &[Vec<Vector>],
    j: usize,
) -> usize {
    let v = rank(&spans[j]);
    let image = rank(&dc.boundaries(c, j, &spans[j]));
    let next = rank(&dc.boundaries(c, j + 1, &spans[j + 1]));
    v - image - next
}

/// Thin-cell spans `Δ_j`, `Δ'_j`, `Δ_j(X/A)`, and `Δ_j(δ_X A)` straight from
/// their definitions.
pub struct DenseDeltas {
    pub delta_prime: Vec<Vec<Vector>>,
    pub boundary_of_pair: Vec<Vec<Vector>>,
}

pub fn dense_deltas(c: &CellComplex, dc: &DenseChains, thin: &CellSet, a: &CellSet) -> DenseDeltas {
    let top = dc.cells.len() - 1;
    let delta: Vec<Vec<Vector>> = (0..=top)
        .map(|j| {
            dc.cells[j]
                .iter()
                .filter(|&&id| thin.contains(id))
                .map(|&id| dc.unit(j, id))
                .collect()
        })
        .collect();
    let delta_prime: Vec<Vec<Vector>> = (0..=top)
        .map(|j| {
            let mut s = delta[j].clone();
            if j < top {
                s.extend(dc.boundaries(c, j + 1, &delta[j + 1]));
            }
            s
        })
        .collect();
    // Δ_j(X/A): thin chains whose boundary vanishes on thick cells outside A
    let quotient: Vec<Vec<Vector>> = (0..=top)
        .map(|j| {
            if j == 0 || delta[j].is_empty() {
                return delta[j].clone();
            }
            let outside: Vec<Vector> = dc
                .boundaries(c, j, &delta[j])
                .into_iter()
                .map(|b| {
                    b.into_iter()
                        .enumerate()
                        .map(|(r, x)| {
                            let id = dc.cells[j - 1][r];
                            if !thin.contains(id) && !a.contains(id) {
                                x
                            } else {
                                Rational::zero()
                            }
                        })
                        .collect()
                })
                .collect();
            kernel(&outside, dc.len(j - 1))
                .iter()
                .map(|k| combine(&delta[j], k, dc.len(j)))
                .collect()
        })
        .collect();
    let boundary_of_pair: Vec<Vec<Vector>> = (0..=top)
        .map(|j| {
            let mut s: Vec<Vector> = dc.cells[j]
                .iter()
                .filter(|&&id| thin.contains(id) && a.contains(id))
                .map(|&id| dc.unit(j, id))
                .collect();
            if j < top {
                for b in dc.boundaries(c, j + 1, &quotient[j + 1]) {
                    s.push(
                        b.into_iter()
                            .enumerate()
                            .map(|(r, x)| {
                                if a.contains(dc.cells[j][r]) {
                                    x
                                } else {
                                    Rational::zero()
                                }
                            })
                            .collect(),
                    );
                }
            }
            s
        })
        .collect();
    DenseDeltas {
        delta_prime,
        boundary_of_pair,
    }
}

/// `dim H_j(W/V)` via rank formulas:
/// `dim Z^rel = rank W − rank[∂W | V_{j−1}] + rank V_{j−1}`,
/// `dim B^rel = rank[∂W_{j+1} | V_j]`.
pub fn quotient_homology(
    dc: &DenseChains,
    c: &CellComplex,
    w: &[Vec<Vector>],
    v: &[Vec<Vector>],
    j: usize,
) -> usize {
    let z = if j == 0 {
        rank(&w[0])
    } else {
        let mut joint = dc.boundaries(c, j, &w[j]);
        joint.extend(v[j - 1].iter().cloned());
        if joint.is_empty() {
            rank(&w[j])
        } else {
            rank(&w[j]) + rank(&v[j - 1]) - rank(&joint)
        }
    };
    let mut b = dc.boundaries(c, j + 1, &w[j + 1]);
    b.extend(v[j].iter().cloned());
    z - rank(&b)
}
