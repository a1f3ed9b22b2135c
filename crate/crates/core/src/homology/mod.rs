//! Exact rational homology of cell complexes and of inclusions between them.

mod matrix;
mod subspace;

use std::collections::HashMap;

use crate::complex::{CellComplex, CellId, CellSet};
use crate::error::{Error, Result};
use crate::puiseux::Rational;

pub use matrix::{RationalMatrix, SparseVector};
pub use subspace::Subspace;

/// What to do with faces of a domain cell that are missing from the codomain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FaceMode {
    /// Every face must lie in the codomain.
    Strict,
    /// Faces outside the codomain are dropped (`∂_A`: boundary, then project).
    Project,
}

fn cells_of_dim(c: &CellComplex, s: &CellSet, dim: usize) -> Result<Vec<CellId>> {
    let mut out = Vec::new();
    for id in s.iter() {
        if c.try_cell(id)?.dim == dim {
            out.push(id);
        }
    }
    Ok(out)
}

/// Matrix of `∂_j` from the `j`-cells of `domain` to the `(j-1)`-cells of
/// `codomain`. Rows and columns follow ascending cell id.
pub fn boundary_matrix(
    c: &CellComplex,
    j: usize,
    domain: &CellSet,
    codomain: &CellSet,
    mode: FaceMode,
) -> Result<RationalMatrix> {
    let cols = cells_of_dim(c, domain, j)?;
    let rows = if j == 0 {
        Vec::new()
    } else {
        cells_of_dim(c, codomain, j - 1)?
    };
    let row_of: HashMap<CellId, usize> = rows.iter().enumerate().map(|(i, &id)| (id, i)).collect();
    let mut columns = Vec::with_capacity(cols.len());
    for id in cols {
        let mut col = SparseVector::new();
        for &(k, face) in &c.try_cell(id)?.boundary {
            match row_of.get(&face) {
                Some(&r) => {
                    *col.entry(r)
                        .or_insert_with(|| Rational::from_integer(0.into())) +=
                        Rational::from_integer(k.into())
                }
                None if mode == FaceMode::Project => {}
                None => return Err(Error::FaceOutsideCodomain { cell: id, face }),
            }
        }
        columns.push(col);
    }
    Ok(RationalMatrix::from_columns(rows.len(), columns))
}

pub fn rank(m: &RationalMatrix) -> usize {
    m.rank()
}

/// Ordinary rational Betti number `dim H_j(s)` of a face-closed set of cells.
pub fn betti(c: &CellComplex, s: &CellSet, j: usize) -> Result<usize> {
    c.check_face_closed(s)?;
    let d_j = boundary_matrix(c, j, s, s, FaceMode::Strict)?;
    let d_next = boundary_matrix(c, j + 1, s, s, FaceMode::Strict)?;
    Ok(d_j.ncols() - d_j.rank() - d_next.rank())
}

/// `dim Im(H_j(small) → H_j(big))` for face-closed `small ⊆ big`.
///
/// Computed as `dim Z_j(small) − dim(Z_j(small) ∩ B_j(big))` inside the
/// `j`-chains of `big`, with the intersection dimension taken from
/// `dim U + dim W − rank [U | W]`.
pub fn image_betti(c: &CellComplex, small: &CellSet, big: &CellSet, j: usize) -> Result<usize> {
    c.check_face_closed(small)?;
    c.check_face_closed(big)?;
    if let Some(id) = small.iter().find(|&id| !big.contains(id)) {
        return Err(Error::NotNested(id));
    }
    let big_j = cells_of_dim(c, big, j)?;
    let pos: HashMap<CellId, usize> = big_j.iter().enumerate().map(|(i, &id)| (id, i)).collect();
    let small_j = cells_of_dim(c, small, j)?;

    let d_small = boundary_matrix(c, j, small, small, FaceMode::Strict)?;
    let cycles: Vec<SparseVector> = d_small
        .kernel()
        .into_iter()
        .map(|k| k.into_iter().map(|(i, v)| (pos[&small_j[i]], v)).collect())
        .collect();
    let cycles = RationalMatrix::from_columns(big_j.len(), cycles);
    let boundaries = boundary_matrix(c, j + 1, big, big, FaceMode::Strict)?;

    let dim_z = cycles.rank();
    let dim_b = boundaries.rank();
    let joint = cycles.hcat(&boundaries).rank();
    let dim_cap = dim_z + dim_b - joint;
    Ok(dim_z - dim_cap)
}

/// Cellular chain groups of a whole complex with their boundary maps, indexed
/// by ascending cell id within each dimension.
#[derive(Clone, Debug)]
pub struct CellularChains {
    cells: Vec<Vec<CellId>>,
    position: HashMap<CellId, usize>,
    boundaries: Vec<RationalMatrix>,
}

impl CellularChains {
    pub fn new(c: &CellComplex) -> Result<Self> {
        let top = c.dim() + 2;
        let mut cells: Vec<Vec<CellId>> = vec![Vec::new(); top + 1];
        for cell in c.cells() {
            cells[cell.dim].push(cell.id);
        }
        let position = cells
            .iter()
            .flat_map(|ids| ids.iter().enumerate().map(|(i, &id)| (id, i)))
            .collect();
        let all = c.all_cells();
        let boundaries = (0..=top)
            .map(|j| {
                if cells[j].is_empty() {
                    let rows = if j == 0 { 0 } else { cells[j - 1].len() };
                    Ok(RationalMatrix::zeros(rows, 0))
                } else {
                    boundary_matrix(c, j, &all, &all, FaceMode::Strict)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CellularChains {
            cells,
            position,
            boundaries,
        })
    }

    /// Highest degree with stored data (top dimension + 2; chain groups above
    /// the top dimension are zero).
    pub fn max_degree(&self) -> usize {
        self.cells.len() - 1
    }

    pub fn rank_of(&self, j: usize) -> usize {
        self.cells.get(j).map_or(0, Vec::len)
    }

    pub fn cells(&self, j: usize) -> &[CellId] {
        self.cells.get(j).map_or(&[], Vec::as_slice)
    }

    pub fn position(&self, id: CellId) -> Option<usize> {
        self.position.get(&id).copied()
    }

    /// `∂_j : C_j → C_{j-1}`.
    pub fn boundary(&self, j: usize) -> &RationalMatrix {
        &self.boundaries[j]
    }

    /// Span in `C_j` of the `j`-cells satisfying `keep`.
    pub fn cell_span(&self, j: usize, mut keep: impl FnMut(CellId) -> bool) -> Subspace {
        let idx: Vec<usize> = self
            .cells(j)
            .iter()
            .enumerate()
            .filter(|(_, &id)| keep(id))
            .map(|(i, _)| i)
            .collect();
        Subspace::coordinate(self.rank_of(j), idx)
    }

    /// Cycles of `C_j`.
    pub fn cycles(&self, j: usize) -> Subspace {
        Subspace::coordinate(self.rank_of(j), 0..self.rank_of(j)).kernel_within(self.boundary(j))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{build_circle, build_pinched_spheres, build_torus};
    use crate::puiseux::ExtRational;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn circle_boundary_matrix() {
        let (c, _) = build_circle(3, ExtRational::integer(2)).unwrap();
        let all = c.all_cells();
        let d = boundary_matrix(&c, 1, &all, &all, FaceMode::Strict).unwrap();
        assert_eq!((d.nrows(), d.ncols()), (3, 3));
        for col in d.columns() {
            assert_eq!(col.len(), 2);
            assert!(col.values().all(|v| *v == q(1) || *v == q(-1)));
        }
        assert_eq!(rank(&d), 2);
    }

    #[test]
    fn torus_boundary_matrix() {
        let (c, _) = build_torus(q(0), q(2), 3).unwrap();
        let all = c.all_cells();
        let d = boundary_matrix(&c, 2, &all, &all, FaceMode::Strict).unwrap();
        assert_eq!((d.nrows(), d.ncols()), (27, 18));
        assert!(d.columns().iter().all(|col| col.len() == 3));
        let d1 = boundary_matrix(&c, 1, &all, &all, FaceMode::Strict).unwrap();
        assert!(d1.mul(&d).is_zero());
    }

    #[test]
    fn projected_sliver_boundary_keeps_its_equator_edge() {
        let ps = build_pinched_spheres(q(2), 3).unwrap();
        let c = &ps.complex;
        let slivers: CellSet = c
            .cells_of_dim(2)
            .filter(|t| ps.rates[&t.id] == ExtRational::integer(2))
            .map(|t| t.id)
            .collect();
        let d = boundary_matrix(c, 2, &slivers, &ps.equator, FaceMode::Project).unwrap();
        assert_eq!((d.nrows(), d.ncols()), (3, 6));
        for (k, col) in d.columns().iter().enumerate() {
            assert_eq!(col.len(), 1, "sliver {k}");
        }
        assert!(boundary_matrix(c, 2, &slivers, &ps.equator, FaceMode::Strict).is_err());
    }

    #[test]
    fn classical_betti_numbers() {
        let (c, _) = build_circle(3, ExtRational::integer(2)).unwrap();
        let all = c.all_cells();
        assert_eq!(
            (betti(&c, &all, 0).unwrap(), betti(&c, &all, 1).unwrap()),
            (1, 1)
        );

        let (t, _) = build_torus(q(0), q(2), 3).unwrap();
        let all = t.all_cells();
        let b: Vec<usize> = (0..3).map(|j| betti(&t, &all, j).unwrap()).collect();
        assert_eq!(b, vec![1, 2, 1]);

        let ps = build_pinched_spheres(q(2), 3).unwrap();
        let all = ps.complex.all_cells();
        let b: Vec<usize> = (0..3)
            .map(|j| betti(&ps.complex, &all, j).unwrap())
            .collect();
        assert_eq!(b, vec![1, 0, 1]);
    }

    #[test]
    fn image_betti_edge_cases() {
        let (t, _) = build_torus(q(0), q(2), 3).unwrap();
        let all = t.all_cells();
        for j in 0..3 {
            assert_eq!(
                image_betti(&t, &all, &all, j).unwrap(),
                betti(&t, &all, j).unwrap()
            );
        }
        let verts: CellSet = t.cells_of_dim(0).map(|c| c.id).collect();
        assert_eq!(image_betti(&t, &verts, &all, 1).unwrap(), 0);
        assert_eq!(image_betti(&t, &verts, &all, 0).unwrap(), 1);
        assert!(matches!(
            image_betti(&t, &all, &verts, 0),
            Err(Error::NotNested(_))
        ));
    }

    #[test]
    fn meridian_circles_map_to_one_class() {
        let (t, rates) = build_torus(q(0), q(2), 3).unwrap();
        let small: CellSet = t
            .cells()
            .filter(|c| c.dim == 0 || (c.dim == 1 && rates[&c.id] == ExtRational::integer(2)))
            .map(|c| c.id)
            .collect();
        assert_eq!(betti(&t, &small, 1).unwrap(), 3);
        assert_eq!(betti(&t, &small, 0).unwrap(), 3);
        assert_eq!(image_betti(&t, &small, &t.all_cells(), 1).unwrap(), 1);
    }
}
