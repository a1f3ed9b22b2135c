//! Finite cell complexes with integer incidences and per-cell collapse rates.

mod builders;
mod geometric;
pub mod random;
mod simplicial;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::puiseux::ExtRational;

pub use builders::{
    build_circle, build_pinched_spheres, build_torus, geometric_torus, PinchedSpheres,
};
pub use geometric::GeometricComplex;
pub use simplicial::SimplicialBuilder;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CellId(pub usize);

impl fmt::Display for CellId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub id: CellId,
    pub dim: usize,
    /// `(coefficient, face)` pairs; coefficients are nonzero.
    pub boundary: Vec<(i64, CellId)>,
    pub label: Option<String>,
}

/// A finite cell complex given by incidence data.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CellComplex {
    cells: BTreeMap<CellId, Cell>,
}

/// Collapse rate per cell: the cell shrinks like `T^rate`.
pub type RateAnnotation = BTreeMap<CellId, ExtRational>;

/// A set of cells of one complex, ordered by id.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CellSet(BTreeSet<CellId>);

impl CellSet {
    pub fn new() -> Self {
        CellSet::default()
    }

    pub fn contains(&self, id: CellId) -> bool {
        self.0.contains(&id)
    }

    pub fn insert(&mut self, id: CellId) -> bool {
        self.0.insert(id)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = CellId> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset(&self, other: &CellSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn union(&self, other: &CellSet) -> CellSet {
        CellSet(self.0.union(&other.0).copied().collect())
    }

    pub fn difference(&self, other: &CellSet) -> CellSet {
        CellSet(self.0.difference(&other.0).copied().collect())
    }
}

impl FromIterator<CellId> for CellSet {
    fn from_iter<I: IntoIterator<Item = CellId>>(iter: I) -> Self {
        CellSet(iter.into_iter().collect())
    }
}

impl Extend<CellId> for CellSet {
    fn extend<I: IntoIterator<Item = CellId>>(&mut self, iter: I) {
        self.0.extend(iter)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    MissingFace {
        cell: CellId,
        face: CellId,
    },
    WrongFaceDimension {
        cell: CellId,
        face: CellId,
        face_dim: usize,
    },
    ZeroCoefficient {
        cell: CellId,
        face: CellId,
    },
    VertexWithBoundary {
        cell: CellId,
    },
    /// `∂∂cell` has a nonzero coefficient at `face`.
    BoundaryOfBoundary {
        cell: CellId,
        face: CellId,
        coefficient: i64,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MissingFace { cell, face } => {
                write!(f, "cell {cell} references missing face {face}")
            }
            Violation::WrongFaceDimension {
                cell,
                face,
                face_dim,
            } => write!(
                f,
                "cell {cell} has face {face} of wrong dimension {face_dim}"
            ),
            Violation::ZeroCoefficient { cell, face } => {
                write!(f, "cell {cell} lists face {face} with coefficient 0")
            }
            Violation::VertexWithBoundary { cell } => {
                write!(f, "0-cell {cell} has a nonempty boundary")
            }
            Violation::BoundaryOfBoundary {
                cell,
                face,
                coefficient,
            } => write!(
                f,
                "boundary of boundary of {cell} is nonzero ({coefficient} at {face})"
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub violation: Option<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violation.is_none()
    }

    pub fn into_result(self) -> Result<()> {
        match self.violation {
            None => Ok(()),
            Some(v) => Err(Error::InvalidComplex(v.to_string())),
        }
    }
}

impl CellComplex {
    pub fn new() -> Self {
        CellComplex::default()
    }

    /// Adds a cell; fails on a duplicate id. Faces are not checked here, see
    /// [`CellComplex::validate`].
    pub fn insert(&mut self, cell: Cell) -> Result<()> {
        if self.cells.contains_key(&cell.id) {
            return Err(Error::InvalidComplex(format!(
                "duplicate cell id {}",
                cell.id
            )));
        }
        self.cells.insert(cell.id, cell);
        Ok(())
    }

    pub fn from_cells(cells: impl IntoIterator<Item = Cell>) -> Result<Self> {
        let mut c = CellComplex::new();
        for cell in cells {
            c.insert(cell)?;
        }
        Ok(c)
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cell(&self, id: CellId) -> Option<&Cell> {
        self.cells.get(&id)
    }

    pub fn try_cell(&self, id: CellId) -> Result<&Cell> {
        self.cells.get(&id).ok_or(Error::UnknownCell(id))
    }

    pub fn cells(&self) -> impl Iterator<Item = &Cell> {
        self.cells.values()
    }

    pub fn ids(&self) -> impl Iterator<Item = CellId> + '_ {
        self.cells.keys().copied()
    }

    pub fn all_cells(&self) -> CellSet {
        self.ids().collect()
    }

    /// Top dimension; 0 for the empty complex.
    pub fn dim(&self) -> usize {
        self.cells.values().map(|c| c.dim).max().unwrap_or(0)
    }

    pub fn cells_of_dim(&self, dim: usize) -> impl Iterator<Item = &Cell> {
        self.cells.values().filter(move |c| c.dim == dim)
    }

    /// Number of cells per dimension, `f[0..=dim]`.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0; self.dim() + 1];
        if self.is_empty() {
            return vec![];
        }
        for c in self.cells.values() {
            f[c.dim] += 1;
        }
        f
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.cells
            .values()
            .map(|c| if c.dim % 2 == 0 { 1 } else { -1 })
            .sum()
    }

    /// Checks face existence, face dimensions, and `∂∂ = 0`; reports the first
    /// violation in id order.
    pub fn validate(&self) -> ValidationReport {
        let first = self.find_violation();
        ValidationReport { violation: first }
    }

    fn find_violation(&self) -> Option<Violation> {
        for cell in self.cells.values() {
            if cell.dim == 0 && !cell.boundary.is_empty() {
                return Some(Violation::VertexWithBoundary { cell: cell.id });
            }
            for &(k, face) in &cell.boundary {
                let Some(f) = self.cells.get(&face) else {
                    return Some(Violation::MissingFace {
                        cell: cell.id,
                        face,
                    });
                };
                if f.dim + 1 != cell.dim {
                    return Some(Violation::WrongFaceDimension {
                        cell: cell.id,
                        face,
                        face_dim: f.dim,
                    });
                }
                if k == 0 {
                    return Some(Violation::ZeroCoefficient {
                        cell: cell.id,
                        face,
                    });
                }
            }
        }
        for cell in self.cells.values() {
            let mut acc: BTreeMap<CellId, i64> = BTreeMap::new();
            for &(k, face) in &cell.boundary {
                for &(k2, ff) in &self.cells[&face].boundary {
                    *acc.entry(ff).or_insert(0) += k * k2;
                }
            }
            if let Some((&face, &coefficient)) = acc.iter().find(|(_, &v)| v != 0) {
                return Some(Violation::BoundaryOfBoundary {
                    cell: cell.id,
                    face,
                    coefficient,
                });
            }
        }
        None
    }

    /// Returns the first cell of `s` with a face outside `s`.
    fn face_closure_violation(&self, s: &CellSet) -> Result<Option<(CellId, CellId)>> {
        for id in s.iter() {
            let cell = self.try_cell(id)?;
            if let Some(&(_, face)) = cell.boundary.iter().find(|(_, f)| !s.contains(*f)) {
                return Ok(Some((id, face)));
            }
        }
        Ok(None)
    }

    /// Fails with [`Error::NotFaceClosed`] unless every face of a cell of `s` is in `s`.
    pub fn check_face_closed(&self, s: &CellSet) -> Result<()> {
        match self.face_closure_violation(s)? {
            None => Ok(()),
            Some((cell, face)) => Err(Error::NotFaceClosed { cell, face }),
        }
    }

    pub fn is_face_closed(&self, s: &CellSet) -> bool {
        matches!(self.face_closure_violation(s), Ok(None))
    }

    /// Smallest face-closed set containing `s`.
    pub fn closure(&self, s: &CellSet) -> Result<CellSet> {
        let mut out = CellSet::new();
        let mut stack: Vec<CellId> = s.iter().collect();
        while let Some(id) = stack.pop() {
            if out.insert(id) {
                stack.extend(self.try_cell(id)?.boundary.iter().map(|&(_, f)| f));
            }
        }
        Ok(out)
    }

    /// Cells having `id` as a direct face.
    pub fn cofaces(&self, id: CellId) -> impl Iterator<Item = CellId> + '_ {
        self.cells
            .values()
            .filter(move |c| c.boundary.iter().any(|&(_, f)| f == id))
            .map(|c| c.id)
    }

    /// Fails unless every cell having a face in `s` is itself in `s`.
    pub fn check_coface_closed(&self, s: &CellSet) -> Result<()> {
        for cell in self.cells.values() {
            if !s.contains(cell.id) {
                if let Some(&(_, f)) = cell.boundary.iter().find(|(_, f)| s.contains(*f)) {
                    return Err(Error::InvalidExcision(format!(
                        "{} has face {} in the excised set but is not excised itself",
                        cell.id, f
                    )));
                }
            }
        }
        Ok(())
    }

    /// Restriction to a face-closed subset; cell ids are kept.
    pub fn subcomplex(&self, s: &CellSet) -> Result<CellComplex> {
        self.check_face_closed(s)?;
        Ok(CellComplex {
            cells: s.iter().map(|id| (id, self.cells[&id].clone())).collect(),
        })
    }

    /// Vertices in the closure of a cell, ascending.
    pub fn vertices_of(&self, id: CellId) -> Result<Vec<CellId>> {
        let closure = self.closure(&std::iter::once(id).collect())?;
        Ok(closure
            .iter()
            .filter(|&c| self.cells[&c].dim == 0)
            .collect())
    }
}

/// Disjoint union; cells of `b` are shifted past the largest id of `a`.
///
/// Returns the merged complex, merged annotation, and the id offset applied to `b`.
pub fn disjoint_union(
    a: (&CellComplex, &RateAnnotation),
    b: (&CellComplex, &RateAnnotation),
) -> (CellComplex, RateAnnotation, usize) {
    let offset = a.0.ids().last().map_or(0, |id| id.0 + 1);
    let shift = |id: CellId| CellId(id.0 + offset);
    let mut cells = a.0.cells.clone();
    for cell in b.0.cells() {
        let moved = Cell {
            id: shift(cell.id),
            dim: cell.dim,
            boundary: cell.boundary.iter().map(|&(k, f)| (k, shift(f))).collect(),
            label: cell.label.clone(),
        };
        cells.insert(moved.id, moved);
    }
    let mut rates = a.1.clone();
    rates.extend(b.1.iter().map(|(&id, r)| (shift(id), r.clone())));
    (CellComplex { cells }, rates, offset)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cell(id: usize, dim: usize, boundary: &[(i64, usize)]) -> Cell {
        Cell {
            id: CellId(id),
            dim,
            boundary: boundary.iter().map(|&(k, f)| (k, CellId(f))).collect(),
            label: None,
        }
    }

    fn segment() -> Vec<Cell> {
        vec![
            cell(0, 0, &[]),
            cell(1, 0, &[]),
            cell(2, 1, &[(-1, 0), (1, 1)]),
        ]
    }

    #[test]
    fn single_edge_disc_violates_boundary_squared() {
        let mut cells = segment();
        cells.push(cell(3, 2, &[(1, 2)]));
        let c = CellComplex::from_cells(cells).unwrap();
        assert!(matches!(
            c.validate().violation,
            Some(Violation::BoundaryOfBoundary {
                cell: CellId(3),
                ..
            })
        ));
    }

    #[test]
    fn face_two_dimensions_down_is_rejected() {
        let mut cells = segment();
        cells.push(cell(3, 2, &[(1, 0)]));
        let c = CellComplex::from_cells(cells).unwrap();
        assert!(matches!(
            c.validate().violation,
            Some(Violation::WrongFaceDimension { face_dim: 0, .. })
        ));
    }

    #[test]
    fn missing_face_is_reported() {
        let c =
            CellComplex::from_cells(vec![cell(0, 0, &[]), cell(2, 1, &[(1, 0), (-1, 7)])]).unwrap();
        assert_eq!(
            c.validate().violation,
            Some(Violation::MissingFace {
                cell: CellId(2),
                face: CellId(7)
            })
        );
    }

    #[test]
    fn duplicate_ids_are_rejected() {
        assert!(CellComplex::from_cells(vec![cell(0, 0, &[]), cell(0, 0, &[])]).is_err());
    }

    #[test]
    fn subcomplex_requires_faces() {
        let c = CellComplex::from_cells(segment()).unwrap();
        let edge_only: CellSet = [CellId(2)].into_iter().collect();
        assert!(matches!(
            c.subcomplex(&edge_only),
            Err(Error::NotFaceClosed { .. })
        ));
        assert_eq!(c.subcomplex(&c.all_cells()).unwrap(), c);
        assert_eq!(c.closure(&edge_only).unwrap(), c.all_cells());
    }

    #[test]
    fn union_with_empty_is_identity() {
        let c = CellComplex::from_cells(segment()).unwrap();
        let rates: RateAnnotation = [(CellId(2), ExtRational::integer(1))].into_iter().collect();
        let (u, r, _) = disjoint_union((&c, &rates), (&CellComplex::new(), &RateAnnotation::new()));
        assert_eq!(u, c);
        assert_eq!(r, rates);
    }
}
