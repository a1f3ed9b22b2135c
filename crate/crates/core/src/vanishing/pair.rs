//! Vanishing homology of a pair `(X, A)`.
//!
//! With `Δ_j` the span of thin `j`-cells:
//!
//! * `Δ_j(X/A) = {c ∈ Δ_j : (∂c)_τ = 0 for every thick (j−1)-cell τ ∉ A}`
//! * `Δ_j(δ_X A) = span(thin j-cells of A) + ∂_A Δ_{j+1}(X/A)`, `∂_A` being the
//!   boundary followed by projection onto the chains of `A`
//! * `H_j^v(X;A)` is the homology of `Δ'(X) / Δ(δ_X A)`.
//!
//! The short exact sequence `0 → Δ(δ_X A) → Δ'(X) → Δ'(X)/Δ(δ_X A) → 0` gives
//! the long exact sequence checked by [`les_check`].

use std::collections::BTreeMap;
use std::fmt;

use super::{delta_prime, thin_cells, ChainSubspaceComplex};
use crate::complex::{CellComplex, CellSet, RateAnnotation};
use crate::error::{Error, Result};
use crate::homology::{CellularChains, RationalMatrix, SparseVector, Subspace};
use crate::puiseux::Velocity;

/// Keeps the rows selected by `keep`, zeroing the others (shape unchanged).
fn mask_rows(m: &RationalMatrix, keep: impl Fn(usize) -> bool) -> RationalMatrix {
    let cols = m
        .columns()
        .iter()
        .map(|c| {
            c.iter()
                .filter(|(r, _)| keep(**r))
                .map(|(r, x)| (*r, x.clone()))
                .collect::<SparseVector>()
        })
        .collect();
    RationalMatrix::from_columns(m.nrows(), cols)
}

/// Chain-level data shared by the pair computations.
struct PairComplexes {
    chains: CellularChains,
    /// `Δ'(X)`
    whole: ChainSubspaceComplex,
    /// `Δ(δ_X A)`
    sub: ChainSubspaceComplex,
    top: usize,
}

impl PairComplexes {
    fn build(c: &CellComplex, a: &RateAnnotation, sub: &CellSet, v: &Velocity) -> Result<Self> {
        c.validate().into_result()?;
        c.check_face_closed(sub)?;
        let chains = CellularChains::new(c)?;
        let thin = thin_cells(c, a, v)?;
        let whole = delta_prime(&chains, &thin)?;
        let max = chains.max_degree();

        // Δ_j(X/A) for j = 0..=max
        let quotient_thin: Vec<Subspace> = (0..=max)
            .map(|j| {
                let delta = chains.cell_span(j, |id| thin.contains(id));
                if j == 0 {
                    return delta;
                }
                let faces = chains.cells(j - 1);
                let outside = mask_rows(chains.boundary(j), |r| {
                    let id = faces[r];
                    !thin.contains(id) && !sub.contains(id)
                });
                delta.kernel_within(&outside)
            })
            .collect();

        let spaces = (0..=max)
            .map(|j| {
                let in_a = chains.cell_span(j, |id| thin.contains(id) && sub.contains(id));
                if j == max {
                    return in_a;
                }
                let faces = chains.cells(j);
                let project = mask_rows(chains.boundary(j + 1), |r| sub.contains(faces[r]));
                in_a.sum(&quotient_thin[j + 1].image(&project))
            })
            .collect();
        let sub = ChainSubspaceComplex::new(&chains, spaces)?;
        for j in 0..=max {
            if !whole.space(j).contains(sub.space(j)) {
                return Err(Error::InvalidComplex(format!(
                    "Δ(δ_X A) is not contained in Δ'(X) in degree {j}"
                )));
            }
        }
        Ok(PairComplexes {
            chains,
            whole,
            sub,
            top: c.dim(),
        })
    }

    fn boundary(&self, j: usize) -> &RationalMatrix {
        self.chains.boundary(j)
    }

    fn cycles(&self, j: usize) -> Subspace {
        self.chains.cycles(j)
    }

    /// `∂W_{j+1}`
    fn whole_boundaries(&self, j: usize) -> Subspace {
        self.whole.space(j + 1).image(self.boundary(j + 1))
    }

    /// `∂V_{j+1}`
    fn sub_boundaries(&self, j: usize) -> Subspace {
        self.sub.space(j + 1).image(self.boundary(j + 1))
    }

    /// Relative cycles `{c ∈ W_j : ∂c ∈ V_{j−1}}`.
    fn relative_cycles(&self, j: usize) -> Subspace {
        let target = if j == 0 {
            Subspace::zero(0)
        } else {
            self.sub.space(j - 1).clone()
        };
        self.whole
            .space(j)
            .preimage_within(self.boundary(j), &target)
    }

    /// Relative boundaries `∂W_{j+1} + V_j`.
    fn relative_boundaries(&self, j: usize) -> Subspace {
        self.whole_boundaries(j).sum(self.sub.space(j))
    }

    fn relative_dim(&self, j: usize) -> Result<usize> {
        let z = self.relative_cycles(j);
        let b = self.relative_boundaries(j);
        let cap = b.intersection(&z);
        if cap.dim() != b.dim() {
            return Err(Error::InvalidComplex(format!(
                "relative boundaries are not relative cycles in degree {j}"
            )));
        }
        Ok(z.dim() - cap.dim())
    }

    fn relative_dims(&self) -> Result<BTreeMap<usize, usize>> {
        (0..=self.top)
            .map(|j| Ok((j, self.relative_dim(j)?)))
            .collect()
    }

    fn dims_of(&self, h: Vec<usize>) -> BTreeMap<usize, usize> {
        (0..=self.top).map(|j| (j, h[j])).collect()
    }
}

/// Degreewise dimensions for a pair, plus whether the long exact sequence is exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairReport {
    pub velocity: Velocity,
    /// `dim H_j^v(X)`
    pub absolute: BTreeMap<usize, usize>,
    /// `dim H_j^v(X;A)`
    pub relative: BTreeMap<usize, usize>,
    /// `dim H_j^v(δ_X A)`
    pub boundary: BTreeMap<usize, usize>,
    pub exact: bool,
}

/// `H^v(X)`, `H^v(X;A)`, and `H^v(δ_X A)` for a face-closed `A`.
pub fn relative_vanishing(
    c: &CellComplex,
    a: &RateAnnotation,
    sub: &CellSet,
    v: &Velocity,
) -> Result<PairReport> {
    let pc = PairComplexes::build(c, a, sub, v)?;
    let exact = exactness(&pc)?.exact;
    Ok(PairReport {
        velocity: v.clone(),
        absolute: pc.dims_of(pc.whole.homology(&pc.chains)),
        relative: pc.relative_dims()?,
        boundary: pc.dims_of(pc.sub.homology(&pc.chains)),
        exact,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeKind {
    /// `H_j^v(δ_X A)`
    Boundary,
    /// `H_j^v(X)`
    Absolute,
    /// `H_j^v(X;A)`
    Relative,
}

/// One group of the long exact sequence with the ranks of the maps into and
/// out of it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactnessNode {
    pub kind: NodeKind,
    pub degree: usize,
    pub dim: usize,
    pub incoming_rank: usize,
    pub outgoing_rank: usize,
    /// Image of the incoming map equals the kernel of the outgoing one.
    pub exact: bool,
}

impl fmt::Display for ExactnessNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            NodeKind::Boundary => format!("H_{}(dA)", self.degree),
            NodeKind::Absolute => format!("H_{}(X)", self.degree),
            NodeKind::Relative => format!("H_{}(X;A)", self.degree),
        };
        write!(
            f,
            "{name}\tdim {}\tin {}\tout {}\t{}",
            self.dim,
            self.incoming_rank,
            self.outgoing_rank,
            if self.exact { "exact" } else { "NOT EXACT" }
        )
    }
}

/// The sequence from the top degree down to `H_0(X;A) → 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactnessReport {
    pub nodes: Vec<ExactnessNode>,
    pub exact: bool,
}

fn exactness(pc: &PairComplexes) -> Result<ExactnessReport> {
    let mut nodes = Vec::new();
    for j in (0..=pc.top).rev() {
        let z = pc.cycles(j);
        let v_cycles = pc.sub.space(j).intersection(&z);
        let w_cycles = pc.whole.space(j).intersection(&z);
        let bw = pc.whole_boundaries(j);
        let bv = pc.sub_boundaries(j);
        let zrel = pc.relative_cycles(j);
        let brel = pc.relative_boundaries(j);
        // connecting map out of degree j+1 lands on ∂Z^rel_{j+1}
        let connecting_in = pc.relative_cycles(j + 1).image(pc.boundary(j + 1));
        let connecting_out = zrel.image(pc.boundary(j));
        let bv_below = if j == 0 {
            Subspace::zero(0)
        } else {
            pc.sub_boundaries(j - 1)
        };

        let rank_conn_in = connecting_in.sum(&bv).dim() - bv.dim();
        let rank_incl = v_cycles.sum(&bw).dim() - bw.dim();
        let rank_quot = w_cycles.sum(&brel).dim() - brel.dim();
        let rank_conn_out = connecting_out.sum(&bv_below).dim() - bv_below.dim();

        // H_j(δ_X A): im ∂_* = ker i_*
        let image = connecting_in.sum(&bv);
        let kernel = pc.sub.space(j).intersection(&bw).sum(&bv);
        nodes.push(ExactnessNode {
            kind: NodeKind::Boundary,
            degree: j,
            dim: v_cycles.dim() - bv.dim(),
            incoming_rank: rank_conn_in,
            outgoing_rank: rank_incl,
            exact: image.same_as(&kernel),
        });

        // H_j(X): im i_* = ker q_*
        let image = v_cycles.sum(&bw);
        let kernel = z.intersection(&brel);
        nodes.push(ExactnessNode {
            kind: NodeKind::Absolute,
            degree: j,
            dim: w_cycles.dim() - bw.dim(),
            incoming_rank: rank_incl,
            outgoing_rank: rank_quot,
            exact: image.same_as(&kernel),
        });

        // H_j(X;A): im q_* = ker ∂_*
        let image = w_cycles.sum(&brel);
        let kernel = zrel.preimage_within(pc.boundary(j), &bv_below);
        nodes.push(ExactnessNode {
            kind: NodeKind::Relative,
            degree: j,
            dim: pc.relative_dim(j)?,
            incoming_rank: rank_quot,
            outgoing_rank: rank_conn_out,
            exact: image.same_as(&kernel),
        });
    }
    let exact = nodes.iter().all(|n| n.exact);
    Ok(ExactnessReport { nodes, exact })
}

/// Builds the maps of the long exact sequence of `(X, A)` and checks
/// `image = kernel` at every group.
pub fn les_check(
    c: &CellComplex,
    a: &RateAnnotation,
    sub: &CellSet,
    v: &Velocity,
) -> Result<ExactnessReport> {
    exactness(&PairComplexes::build(c, a, sub, v)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExcisionReport {
    /// `dim H_j^v(X;A)`
    pub full: BTreeMap<usize, usize>,
    /// `dim H_j^v(X∖W; A∖W)`
    pub excised: BTreeMap<usize, usize>,
    pub equal: bool,
}

/// Compares `H^v(X;A)` with `H^v(X∖W; A∖W)`. `W` must lie in `A` and contain
/// every cell having a face in `W`.
pub fn excision_check(
    c: &CellComplex,
    a: &RateAnnotation,
    sub: &CellSet,
    excised: &CellSet,
    v: &Velocity,
) -> Result<ExcisionReport> {
    c.check_face_closed(sub)?;
    if let Some(id) = excised.iter().find(|&id| !sub.contains(id)) {
        return Err(Error::InvalidExcision(format!(
            "{id} is excised but not in the subcomplex"
        )));
    }
    c.check_coface_closed(excised)?;

    let remaining = c.all_cells().difference(excised);
    let smaller = c.subcomplex(&remaining)?;
    let smaller_rates: RateAnnotation = a
        .iter()
        .filter(|(id, _)| remaining.contains(**id))
        .map(|(id, r)| (*id, r.clone()))
        .collect();
    let smaller_sub = sub.difference(excised);

    let full = PairComplexes::build(c, a, sub, v)?.relative_dims()?;
    let cut = PairComplexes::build(&smaller, &smaller_rates, &smaller_sub, v)?.relative_dims()?;
    let degrees = full.keys().chain(cut.keys()).copied().max().unwrap_or(0);
    let equal = (0..=degrees).all(|j| full.get(&j).unwrap_or(&0) == cut.get(&j).unwrap_or(&0));
    Ok(ExcisionReport {
        full,
        excised: cut,
        equal,
    })
}
