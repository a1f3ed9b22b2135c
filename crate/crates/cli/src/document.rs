//! The `vanhom-complex/1` JSON document.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use vanhom_core::complex::{Cell, CellComplex, CellId, CellSet, GeometricComplex, RateAnnotation};
use vanhom_core::puiseux::{parse_series, ExtRational, PuiseuxSeries};
use vanhom_core::thinness::rates_from_coordinates;

use crate::CliError;

pub const FORMAT_TAG: &str = "vanhom-complex/1";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDocument {
    pub format: String,
    pub name: String,
    pub cells: Vec<CellRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub geometry: Option<GeometryRecord>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub subcomplexes: BTreeMap<String, Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CellRecord {
    pub id: usize,
    pub dim: usize,
    /// `[coefficient, face id]` pairs.
    pub boundary: Vec<(i64, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rate: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeometryRecord {
    pub ambient_dim: usize,
    /// Vertex id → coordinates as series strings.
    pub vertices: BTreeMap<usize, Vec<String>>,
}

/// A document turned into engine types.
#[derive(Clone, Debug)]
pub struct LoadedComplex {
    pub name: String,
    pub complex: CellComplex,
    pub rates: RateAnnotation,
    /// Which cells took their rate from coordinates.
    pub from_geometry: CellSet,
    pub subcomplexes: BTreeMap<String, CellSet>,
    pub warnings: Vec<String>,
}

impl LoadedComplex {
    pub fn subcomplex(&self, name: &str) -> Result<&CellSet, CliError> {
        self.subcomplexes.get(name).ok_or_else(|| {
            CliError::Input(format!("no subcomplex named {name:?} in {}", self.name))
        })
    }
}

impl ComplexDocument {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let doc: ComplexDocument = serde_json::from_str(text)
            .map_err(|e| CliError::Input(format!("malformed document: {e}")))?;
        if doc.format != FORMAT_TAG {
            return Err(CliError::Input(format!(
                "unsupported format {:?}, expected {FORMAT_TAG:?}",
                doc.format
            )));
        }
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    /// Builds a document from an annotated complex; every rate is written out.
    pub fn from_complex(name: &str, c: &CellComplex, rates: &RateAnnotation) -> Self {
        let cells = c
            .cells()
            .map(|cell| CellRecord {
                id: cell.id.0,
                dim: cell.dim,
                boundary: cell.boundary.iter().map(|&(k, f)| (k, f.0)).collect(),
                rate: rates.get(&cell.id).map(ToString::to_string),
                label: cell.label.clone(),
            })
            .collect();
        ComplexDocument {
            format: FORMAT_TAG.to_string(),
            name: name.to_string(),
            cells,
            geometry: None,
            subcomplexes: BTreeMap::new(),
        }
    }

    pub fn with_subcomplex(mut self, name: &str, s: &CellSet) -> Self {
        self.subcomplexes
            .insert(name.to_string(), s.iter().map(|id| id.0).collect());
        self
    }

    /// Replaces stored rates of positive-dimensional cells by the coordinates of `g`.
    pub fn with_geometry(mut self, g: &GeometricComplex) -> Self {
        for cell in &mut self.cells {
            if cell.dim > 0 {
                cell.rate = None;
            }
        }
        self.geometry = Some(GeometryRecord {
            ambient_dim: g.ambient_dim,
            vertices: g
                .vertices
                .iter()
                .map(|(id, p)| (id.0, p.iter().map(ToString::to_string).collect()))
                .collect(),
        });
        self
    }

    /// Converts to engine types. Explicit rates override geometry.
    /// `precision` truncates every coordinate before rates are computed.
    pub fn load(&self, precision: Option<&ExtRational>) -> Result<LoadedComplex, CliError> {
        let complex = CellComplex::from_cells(self.cells.iter().map(|r| Cell {
            id: CellId(r.id),
            dim: r.dim,
            boundary: r.boundary.iter().map(|&(k, f)| (k, CellId(f))).collect(),
            label: r.label.clone(),
        }))?;
        complex.validate().into_result()?;

        let mut rates = RateAnnotation::new();
        for r in &self.cells {
            if let Some(text) = &r.rate {
                let rate: ExtRational = text.parse().map_err(|e| {
                    CliError::Input(format!("cell {}: bad rate {text:?}: {e}", r.id))
                })?;
                rates.insert(CellId(r.id), rate);
            }
        }

        let mut warnings = Vec::new();
        let mut from_geometry = CellSet::new();
        if let Some(geo) = &self.geometry {
            let mut vertices = BTreeMap::new();
            for (&id, coords) in &geo.vertices {
                if coords.len() != geo.ambient_dim {
                    return Err(CliError::Input(format!(
                        "vertex {id} has {} coordinates, expected {}",
                        coords.len(),
                        geo.ambient_dim
                    )));
                }
                let point = coords
                    .iter()
                    .map(|s| {
                        let x: PuiseuxSeries = parse_series(s)
                            .map_err(|e| CliError::Input(format!("vertex {id}: {s:?}: {e}")))?;
                        Ok(match precision {
                            Some(p) => x.truncate(p),
                            None => x,
                        })
                    })
                    .collect::<Result<Vec<_>, CliError>>()?;
                vertices.insert(CellId(id), point);
            }
            // only cells without an explicit rate need the geometry
            let needed: CellSet = complex
                .cells()
                .filter(|c| c.dim > 0 && !rates.contains_key(&c.id))
                .map(|c| c.id)
                .collect();
            let overridden = complex
                .cells()
                .filter(|c| c.dim > 0 && rates.contains_key(&c.id))
                .count();
            if overridden > 0 {
                warnings.push(format!(
                    "explicit rates override geometry for {overridden} cell(s)"
                ));
            }
            if !needed.is_empty() {
                let restricted = complex.subcomplex(&complex.closure(&needed)?)?;
                let computed = rates_from_coordinates(&restricted, &vertices)?;
                for id in needed.iter() {
                    rates.insert(id, computed[&id].clone());
                    from_geometry.insert(id);
                }
            }
        }
        if let Some(cell) = complex
            .cells()
            .find(|c| c.dim > 0 && !rates.contains_key(&c.id))
        {
            return Err(vanhom_core::Error::MissingRate(cell.id).into());
        }

        let mut subcomplexes = BTreeMap::new();
        for (name, ids) in &self.subcomplexes {
            let mut set = CellSet::new();
            for &id in ids {
                complex.try_cell(CellId(id))?;
                set.insert(CellId(id));
            }
            subcomplexes.insert(name.clone(), set);
        }

        Ok(LoadedComplex {
            name: self.name.clone(),
            complex,
            rates,
            from_geometry,
            subcomplexes,
            warnings,
        })
    }
}
