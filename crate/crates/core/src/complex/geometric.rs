use std::collections::{BTreeMap, BTreeSet};

use super::CellId;
use crate::error::{Error, Result};
use crate::puiseux::PuiseuxSeries;

/// A simplicial complex with vertices embedded in `R^n`, `R` the Puiseux field.
///
/// Simplices are ordered vertex tuples (the order fixes the orientation);
/// 0-simplices may be listed or left implicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeometricComplex {
    pub ambient_dim: usize,
    pub vertices: BTreeMap<CellId, Vec<PuiseuxSeries>>,
    pub simplices: Vec<Vec<CellId>>,
}

impl GeometricComplex {
    /// Checks coordinate lengths, vertex references, repeated vertices, and
    /// closure under faces.
    pub fn validate(&self) -> Result<()> {
        for (id, x) in &self.vertices {
            if x.len() != self.ambient_dim {
                return Err(Error::InvalidComplex(format!(
                    "vertex {id} has {} coordinates, expected {}",
                    x.len(),
                    self.ambient_dim
                )));
            }
        }
        let mut present: BTreeSet<Vec<CellId>> = self.vertices.keys().map(|&v| vec![v]).collect();
        for s in &self.simplices {
            let mut key = s.clone();
            key.sort();
            if key.is_empty() || key.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidComplex(format!(
                    "simplex {s:?} is empty or repeats a vertex"
                )));
            }
            if let Some(v) = s.iter().find(|v| !self.vertices.contains_key(v)) {
                return Err(Error::InvalidComplex(format!(
                    "simplex {s:?} uses unknown vertex {v}"
                )));
            }
            present.insert(key);
        }
        for key in &present {
            if key.len() < 2 {
                continue;
            }
            for i in 0..key.len() {
                let mut face = key.clone();
                face.remove(i);
                if !present.contains(&face) {
                    return Err(Error::InvalidComplex(format!(
                        "face {face:?} of simplex {key:?} is missing"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Simplices of dimension >= 1 in a face-before-coface order (stable by
    /// dimension), omitting listed 0-simplices.
    pub fn positive_simplices(&self) -> Vec<&[CellId]> {
        let mut out: Vec<&[CellId]> = self
            .simplices
            .iter()
            .filter(|s| s.len() >= 2)
            .map(|s| s.as_slice())
            .collect();
        out.sort_by_key(|s| s.len());
        out
    }
}
