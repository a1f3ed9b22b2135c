use std::collections::HashMap;

use super::{Cell, CellComplex, CellId};
use crate::error::{Error, Result};

/// Assembles a simplicial complex as a [`CellComplex`].
///
/// Vertices keep the ids they are given; higher simplices receive fresh ids in
/// insertion order, starting past the largest vertex id. A simplex is an
/// ordered vertex tuple, its boundary carries alternating signs over that
/// order, and faces may be stored in any vertex order (the sign is corrected
/// by the permutation parity).
#[derive(Debug, Default)]
pub struct SimplicialBuilder {
    complex: CellComplex,
    index: HashMap<Vec<CellId>, (CellId, Vec<CellId>)>,
    next_id: usize,
}

fn sorted(verts: &[CellId]) -> Vec<CellId> {
    let mut k = verts.to_vec();
    k.sort();
    k
}

/// Parity of the permutation taking `from` to `to` (same elements).
fn permutation_sign(from: &[CellId], to: &[CellId]) -> i64 {
    let pos: Vec<usize> = to
        .iter()
        .map(|v| from.iter().position(|w| w == v).expect("same vertex set"))
        .collect();
    let mut inversions = 0;
    for i in 0..pos.len() {
        for j in i + 1..pos.len() {
            if pos[i] > pos[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

impl SimplicialBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, id: CellId) -> Result<()> {
        self.complex.insert(Cell {
            id,
            dim: 0,
            boundary: Vec::new(),
            label: None,
        })?;
        self.index.insert(vec![id], (id, vec![id]));
        self.next_id = self.next_id.max(id.0 + 1);
        Ok(())
    }

    /// Adds a simplex of dimension `verts.len() - 1 >= 1`; all of its facets
    /// must already be present.
    pub fn add_simplex(&mut self, verts: &[CellId]) -> Result<CellId> {
        if verts.len() < 2 {
            return Err(Error::InvalidComplex(
                "use add_vertex for 0-simplices".into(),
            ));
        }
        let key = sorted(verts);
        if key.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidComplex(format!(
                "simplex {verts:?} repeats a vertex"
            )));
        }
        if self.index.contains_key(&key) {
            return Err(Error::InvalidComplex(format!(
                "simplex {verts:?} added twice"
            )));
        }
        let mut boundary = Vec::with_capacity(verts.len());
        for i in 0..verts.len() {
            let face: Vec<CellId> = verts
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i)
                .map(|(_, &v)| v)
                .collect();
            let (fid, stored) = self.index.get(&sorted(&face)).ok_or_else(|| {
                Error::InvalidComplex(format!("face {face:?} of {verts:?} is missing"))
            })?;
            let alternating = if i % 2 == 0 { 1 } else { -1 };
            boundary.push((alternating * permutation_sign(stored, &face), *fid));
        }
        let id = CellId(self.next_id);
        self.next_id += 1;
        self.complex.insert(Cell {
            id,
            dim: verts.len() - 1,
            boundary,
            label: None,
        })?;
        self.index.insert(key, (id, verts.to_vec()));
        Ok(id)
    }

    /// Id of the simplex with the given vertex set, in any order.
    pub fn id_of(&self, verts: &[CellId]) -> Option<CellId> {
        self.index.get(&sorted(verts)).map(|(id, _)| *id)
    }

    pub fn finish(self) -> CellComplex {
        self.complex
    }
}
