//! Collapse rates of embedded simplices, per-cell thinness for a velocity, and
//! the filtration `X_0 ⊆ X_1 ⊆ … ⊆ X_{d+1}` by thin cells.

use std::collections::{BTreeMap, BTreeSet};

use crate::complex::{
    CellComplex, CellId, CellSet, GeometricComplex, RateAnnotation, SimplicialBuilder,
};
use crate::error::{Error, Result};
use crate::puiseux::{ExtRational, PuiseuxSeries, Rational, Velocity};

/// Determinant by cofactor expansion along the first listed row. Exact in the
/// Puiseux arithmetic, so cancellations are seen.
fn determinant(m: &[Vec<PuiseuxSeries>], rows: &[usize], cols: &[usize]) -> PuiseuxSeries {
    match rows {
        [] => PuiseuxSeries::one(),
        [r] => m[*r][cols[0]].clone(),
        [r, rest @ ..] => {
            let mut acc = PuiseuxSeries::zero();
            for (k, &c) in cols.iter().enumerate() {
                let entry = &m[*r][c];
                if entry.is_zero() {
                    continue;
                }
                let minor_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let term = entry * &determinant(m, rest, &minor_cols);
                acc = if k % 2 == 0 {
                    &acc + &term
                } else {
                    &acc - &term
                };
            }
            acc
        }
    }
}

/// All `k`-element subsets of `0..n`, lexicographic.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Valuations `ν_1 ≤ … ≤ ν_j` of the invariant factors of a `j × n` matrix
/// over the Puiseux field.
///
/// With `δ_i` the least valuation of an `i × i` minor (`δ_0 = 0`), returns
/// `ν_i = δ_i − δ_{i−1}`; once a `δ_i` is `+∞` every later `ν` is `+∞`.
/// A minor whose leading term is lost to truncation is harmless as long as
/// some other minor of the same size is known to have smaller valuation.
pub fn invariant_factor_valuations(m: &[Vec<PuiseuxSeries>]) -> Result<Vec<ExtRational>> {
    let j = m.len();
    let n = m.first().map_or(0, Vec::len);
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidArgument("ragged matrix".into()));
    }
    if j > n {
        return Err(Error::InvalidArgument(format!(
            "need rows <= columns, got {j} x {n}"
        )));
    }
    let mut deltas = vec![ExtRational::integer(0)];
    for i in 1..=j {
        let mut best = ExtRational::Infinity;
        // an unresolved minor only has a lower bound on its valuation
        let mut unresolved: Option<ExtRational> = None;
        for rows in subsets(j, i) {
            for cols in subsets(n, i) {
                let det = determinant(m, &rows, &cols);
                match det.valuation() {
                    Ok(v) => best = best.min(v),
                    Err(Error::IndeterminateAtPrecision { .. }) => {
                        let p = det.precision().clone();
                        unresolved = Some(unresolved.map_or(p.clone(), |u| u.min(p)));
                    }
                    Err(e) => return Err(e),
                }
            }
        }
        if let Some(bound) = unresolved {
            if best > bound {
                return Err(Error::IndeterminateAtPrecision {
                    precision: bound.to_string(),
                });
            }
        }
        deltas.push(best);
    }
    Ok(deltas
        .windows(2)
        .map(|w| w[1].saturating_sub(&w[0]))
        .collect())
}

/// Collapse rate of the simplex spanned by `points`: the largest invariant
/// factor valuation of the edge matrix with rows `p_i − p_0`.
fn rate_of_points(points: &[&[PuiseuxSeries]]) -> Result<Option<Rational>> {
    let (base, rest) = points
        .split_first()
        .ok_or_else(|| Error::InvalidArgument("empty simplex".into()))?;
    let rows: Vec<Vec<PuiseuxSeries>> = rest
        .iter()
        .map(|p| p.iter().zip(base.iter()).map(|(x, y)| x - y).collect())
        .collect();
    if rows.is_empty() {
        return Err(Error::InvalidArgument(
            "a vertex has no collapse rate".into(),
        ));
    }
    let nu = invariant_factor_valuations(&rows)?;
    Ok(nu.last().and_then(ExtRational::finite).cloned())
}

fn coordinates<'a>(
    vertices: &'a BTreeMap<CellId, Vec<PuiseuxSeries>>,
    simplex: &[CellId],
) -> Result<Vec<&'a [PuiseuxSeries]>> {
    simplex
        .iter()
        .map(|v| {
            vertices
                .get(v)
                .map(Vec::as_slice)
                .ok_or(Error::UnknownCell(*v))
        })
        .collect()
}

/// Rate `ν_j` of a `j`-simplex (`j >= 1`) of a geometric complex.
pub fn simplex_rate(g: &GeometricComplex, simplex: &[CellId]) -> Result<Rational> {
    if simplex.len() < 2 {
        return Err(Error::InvalidArgument(
            "simplex must have dimension >= 1".into(),
        ));
    }
    let pts = coordinates(&g.vertices, simplex)?;
    if pts.iter().any(|p| p.len() != g.ambient_dim) {
        return Err(Error::InvalidComplex("coordinate length mismatch".into()));
    }
    rate_of_points(&pts)?.ok_or_else(|| Error::DegenerateSimplex(simplex.to_vec()))
}

/// Turns a geometric complex into an annotated cell complex. Vertex ids are
/// kept, higher simplices are numbered in face-before-coface order.
pub fn annotate_geometric(g: &GeometricComplex) -> Result<(CellComplex, RateAnnotation)> {
    g.validate()?;
    let mut b = SimplicialBuilder::new();
    for &v in g.vertices.keys() {
        b.add_vertex(v)?;
    }
    let mut rates = RateAnnotation::new();
    for s in g.positive_simplices() {
        let rate = simplex_rate(g, s)?;
        let id = b.add_simplex(s)?;
        rates.insert(id, ExtRational::Finite(rate));
    }
    Ok((b.finish(), rates))
}

/// Rates for the cells of an abstract complex whose vertices carry
/// coordinates. Every cell of dimension `j >= 1` must have exactly `j + 1`
/// vertices in its closure.
pub fn rates_from_coordinates(
    c: &CellComplex,
    vertices: &BTreeMap<CellId, Vec<PuiseuxSeries>>,
) -> Result<RateAnnotation> {
    let mut rates = RateAnnotation::new();
    for cell in c.cells().filter(|cell| cell.dim >= 1) {
        let verts = c.vertices_of(cell.id)?;
        if verts.len() != cell.dim + 1 {
            return Err(Error::InvalidComplex(format!(
                "cell {} of dimension {} has {} vertices; only simplices get rates from coordinates",
                cell.id,
                cell.dim,
                verts.len()
            )));
        }
        let pts = coordinates(vertices, &verts)?;
        let rate = rate_of_points(&pts)?.ok_or(Error::DegenerateSimplex(verts))?;
        rates.insert(cell.id, ExtRational::Finite(rate));
    }
    Ok(rates)
}

/// Whether a cell is thin for `v`. Vertices never are.
pub fn is_thin(c: &CellComplex, a: &RateAnnotation, id: CellId, v: &Velocity) -> Result<bool> {
    let cell = c.try_cell(id)?;
    if cell.dim == 0 {
        return Ok(false);
    }
    let rate = a.get(&id).ok_or(Error::MissingRate(id))?;
    Ok(v.contains_valuation(rate))
}

/// The nested sets `X_0 ⊆ … ⊆ X_{d+1}` for a velocity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filtration {
    pub velocity: Velocity,
    /// `levels[j] = X_j`.
    pub levels: Vec<CellSet>,
}

impl Filtration {
    pub fn level(&self, j: usize) -> &CellSet {
        &self.levels[j]
    }

    /// Top dimension `d`.
    pub fn dim(&self) -> usize {
        self.levels.len() - 2
    }
}

/// `X_j` = all cells of dimension `< j` plus the thin cells of dimension `j`,
/// for `j = 0..=d+1`.
pub fn filtration(c: &CellComplex, a: &RateAnnotation, v: &Velocity) -> Result<Filtration> {
    let d = c.dim();
    let mut levels = vec![CellSet::new(); d + 2];
    for cell in c.cells() {
        let thin = is_thin(c, a, cell.id, v)?;
        for (j, level) in levels.iter_mut().enumerate() {
            if cell.dim < j || (cell.dim == j && thin) {
                level.insert(cell.id);
            }
        }
    }
    Ok(Filtration {
        velocity: v.clone(),
        levels,
    })
}

/// Distinct finite rates, ascending.
pub fn critical_rates(a: &RateAnnotation) -> Vec<Rational> {
    a.values()
        .filter_map(ExtRational::finite)
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}
