//! Vanishing homology `H_j^v` of an annotated complex.
//!
//! Two independent routes compute the same numbers:
//!
//! * [`vanishing_betti`]: the image of `H_j(X_j) → H_j(X_{j+1})` over the
//!   thin-cell filtration;
//! * [`vanishing_betti_oracle`]: homology of the chain complex
//!   `Δ'_j = Δ_j + ∂Δ_{j+1}`, where `Δ_j` is spanned by the thin `j`-cells.
//!
//! The pair theory (relative groups, the long exact sequence, excision) lives
//! in [`pair`](self::pair).

mod pair;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;

use crate::complex::{CellComplex, CellSet, RateAnnotation};
use crate::error::{Error, Result};
use crate::homology::{image_betti, CellularChains, Subspace};
use crate::puiseux::{format_rational, Rational, Velocity};
use crate::thinness::{critical_rates, filtration, is_thin};

pub use pair::{
    excision_check, les_check, relative_vanishing, ExactnessNode, ExactnessReport, ExcisionReport,
    NodeKind, PairReport,
};

/// `dim H_j^v` per degree `0..=d`, with `χ_v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VanishingBettiTable {
    pub velocity: Velocity,
    pub dims: BTreeMap<usize, usize>,
    pub euler: i64,
}

impl VanishingBettiTable {
    fn new(velocity: Velocity, dims: BTreeMap<usize, usize>) -> Self {
        let euler = euler_of(&dims);
        VanishingBettiTable {
            velocity,
            dims,
            euler,
        }
    }

    /// Dimension in degree `j`; zero above the top dimension.
    pub fn dim(&self, j: usize) -> usize {
        self.dims.get(&j).copied().unwrap_or(0)
    }

    pub fn as_vec(&self) -> Vec<usize> {
        self.dims.values().copied().collect()
    }
}

fn euler_of(dims: &BTreeMap<usize, usize>) -> i64 {
    dims.iter()
        .filter(|(&j, _)| j >= 1)
        .map(|(&j, &d)| if j % 2 == 0 { d as i64 } else { -(d as i64) })
        .sum()
}

/// `χ_v = Σ_{i≥1} (−1)^i dim H_i^v`.
pub fn vanishing_euler(t: &VanishingBettiTable) -> i64 {
    euler_of(&t.dims)
}

/// `dim H_j^v = dim Im(H_j(X_j) → H_j(X_{j+1}))` for every degree.
pub fn vanishing_betti(
    c: &CellComplex,
    a: &RateAnnotation,
    v: &Velocity,
) -> Result<VanishingBettiTable> {
    c.validate().into_result()?;
    let f = filtration(c, a, v)?;
    let mut dims = BTreeMap::new();
    for j in 0..=f.dim() {
        dims.insert(j, image_betti(c, f.level(j), f.level(j + 1), j)?);
    }
    Ok(VanishingBettiTable::new(v.clone(), dims))
}

/// A family of subspaces `V_j ⊆ C_j` closed under the boundary map.
#[derive(Clone, Debug)]
pub struct ChainSubspaceComplex {
    spaces: Vec<Subspace>,
}

impl ChainSubspaceComplex {
    /// Checks `∂V_j ⊆ V_{j−1}` in every degree.
    pub fn new(chains: &CellularChains, spaces: Vec<Subspace>) -> Result<Self> {
        for j in 1..spaces.len() {
            let image = spaces[j].image(chains.boundary(j));
            if !spaces[j - 1].contains(&image) {
                return Err(Error::InvalidComplex(format!(
                    "chain subspaces not closed under the boundary in degree {j}"
                )));
            }
        }
        Ok(ChainSubspaceComplex { spaces })
    }

    pub fn space(&self, j: usize) -> &Subspace {
        &self.spaces[j]
    }

    pub fn len(&self) -> usize {
        self.spaces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.spaces.is_empty()
    }

    /// `dim(ker ∂ ∩ V_j) − dim ∂V_{j+1}` for `j` in `0..len-1`.
    pub fn homology(&self, chains: &CellularChains) -> Vec<usize> {
        (0..self.spaces.len() - 1)
            .map(|j| {
                let cycles = self.spaces[j].kernel_within(chains.boundary(j)).dim();
                let boundaries = self.spaces[j + 1].image(chains.boundary(j + 1)).dim();
                cycles - boundaries
            })
            .collect()
    }
}

pub(crate) fn thin_cells(c: &CellComplex, a: &RateAnnotation, v: &Velocity) -> Result<CellSet> {
    let mut out = CellSet::new();
    for id in c.ids() {
        if is_thin(c, a, id, v)? {
            out.insert(id);
        }
    }
    Ok(out)
}

/// `Δ'_j = Δ_j + ∂Δ_{j+1}` for `j = 0..=max_degree`.
pub(crate) fn delta_prime(chains: &CellularChains, thin: &CellSet) -> Result<ChainSubspaceComplex> {
    let top = chains.max_degree();
    let delta: Vec<Subspace> = (0..=top)
        .map(|j| chains.cell_span(j, |id| thin.contains(id)))
        .collect();
    let spaces = (0..=top)
        .map(|j| {
            if j < top {
                delta[j].sum(&delta[j + 1].image(chains.boundary(j + 1)))
            } else {
                delta[j].clone()
            }
        })
        .collect();
    ChainSubspaceComplex::new(chains, spaces)
}

/// `dim H_j^v` as the homology of the `Δ'` chain complex.
pub fn vanishing_betti_oracle(
    c: &CellComplex,
    a: &RateAnnotation,
    v: &Velocity,
) -> Result<VanishingBettiTable> {
    c.validate().into_result()?;
    let chains = CellularChains::new(c)?;
    let thin = thin_cells(c, a, v)?;
    let h = delta_prime(&chains, &thin)?.homology(&chains);
    let dims = (0..=c.dim()).map(|j| (j, h[j])).collect();
    Ok(VanishingBettiTable::new(v.clone(), dims))
}

/// Half-open interval `(lower, upper]` of non-strict thresholds; `None` is `∓∞`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepInterval {
    pub lower: Option<Rational>,
    pub upper: Option<Rational>,
    pub dim: usize,
}

impl fmt::Display for SweepInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lo = self
            .lower
            .as_ref()
            .map_or("-inf".to_string(), format_rational);
        match &self.upper {
            Some(hi) => write!(f, "({lo}, {}]: {}", format_rational(hi), self.dim),
            None => write!(f, "({lo}, inf): {}", self.dim),
        }
    }
}

/// Dimension of `H_j^{T^q}` as a function of the threshold `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepTable {
    pub breakpoints: Vec<Rational>,
    pub degrees: BTreeMap<usize, Vec<SweepInterval>>,
}

/// Evaluates `H^{T^q}` at each critical rate, at a point inside every open
/// gap, and beyond both ends; adjacent intervals with equal dimension are merged.
pub fn sweep(
    c: &CellComplex,
    a: &RateAnnotation,
    degrees: impl IntoIterator<Item = usize>,
) -> Result<SweepTable> {
    let rates = critical_rates(a);
    let eval = |q: Rational| vanishing_betti(c, a, &Velocity::non_strict(q));
    let two = Rational::from_integer(2.into());

    // (lower, upper, samples) for each elementary interval
    let mut raw: Vec<(Option<Rational>, Option<Rational>, Vec<Rational>)> = Vec::new();
    match (rates.first(), rates.last()) {
        (Some(first), Some(last)) => {
            raw.push((
                None,
                Some(first.clone()),
                vec![first.clone(), first - Rational::one()],
            ));
            for w in rates.windows(2) {
                let mid = (&w[0] + &w[1]) / &two;
                raw.push((
                    Some(w[0].clone()),
                    Some(w[1].clone()),
                    vec![w[1].clone(), mid],
                ));
            }
            raw.push((
                Some(last.clone()),
                None,
                vec![last + Rational::one(), last + &two],
            ));
        }
        _ => raw.push((None, None, vec![Rational::from_integer(0.into())])),
    }

    let mut tables = Vec::with_capacity(raw.len());
    for (lo, hi, samples) in &raw {
        let evaluated = samples
            .iter()
            .map(|q| eval(q.clone()))
            .collect::<Result<Vec<_>>>()?;
        if evaluated.windows(2).any(|w| w[0].dims != w[1].dims) {
            return Err(Error::InvalidComplex(format!(
                "vanishing dimensions not constant on ({lo:?}, {hi:?}]"
            )));
        }
        tables.push(evaluated.into_iter().next().expect("at least one sample"));
    }

    let mut out = BTreeMap::new();
    for j in degrees {
        let mut intervals: Vec<SweepInterval> = Vec::new();
        for ((lo, hi, _), t) in raw.iter().zip(&tables) {
            let dim = t.dim(j);
            match intervals.last_mut() {
                Some(prev) if prev.dim == dim => prev.upper = hi.clone(),
                _ => intervals.push(SweepInterval {
                    lower: lo.clone(),
                    upper: hi.clone(),
                    dim,
                }),
            }
        }
        out.insert(j, intervals);
    }
    Ok(SweepTable {
        breakpoints: rates,
        degrees: out,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{build_circle, build_pinched_spheres, build_torus};
    use crate::puiseux::ExtRational;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn v(text: &str) -> Velocity {
        text.parse().unwrap()
    }

    #[test]
    fn torus_values() {
        let (t, rates) = build_torus(q(0), q(2), 3).unwrap();
        let table = vanishing_betti(&t, &rates, &v("T^2")).unwrap();
        assert_eq!(table.as_vec(), vec![0, 1, 1]);
        assert_eq!(table.euler, 0);
        assert_eq!(vanishing_euler(&table), 0);
        let strict = vanishing_betti(&t, &rates, &v(">T^2")).unwrap();
        assert_eq!(strict.as_vec(), vec![0, 0, 0]);
    }

    #[test]
    fn pinched_values() {
        let ps = build_pinched_spheres(q(2), 3).unwrap();
        let table = vanishing_betti(&ps.complex, &ps.rates, &v("T^2")).unwrap();
        assert_eq!(table.as_vec(), vec![0, 1, 0]);
        assert_eq!(table.euler, -1);
    }

    #[test]
    fn oracle_agrees_on_fixtures() {
        let (t, tr) = build_torus(q(0), q(2), 3).unwrap();
        let ps = build_pinched_spheres(q(2), 3).unwrap();
        let (c, cr) = build_circle(3, ExtRational::integer(2)).unwrap();
        for (cx, r) in [(&t, &tr), (&ps.complex, &ps.rates), (&c, &cr)] {
            for text in ["T^0", "T^1", "T^2", ">T^2", "T^3", ">T^0", "T^(-1)"] {
                assert_eq!(
                    vanishing_betti(cx, r, &v(text)).unwrap(),
                    vanishing_betti_oracle(cx, r, &v(text)).unwrap(),
                    "{text}"
                );
            }
        }
    }

    #[test]
    fn thin_circle_keeps_its_cycle() {
        let (c, r) = build_circle(3, ExtRational::integer(2)).unwrap();
        assert_eq!(vanishing_betti_oracle(&c, &r, &v("T^2")).unwrap().dim(1), 1);
        assert_eq!(
            vanishing_betti_oracle(&c, &r, &v(">T^2")).unwrap().dim(1),
            0
        );
    }

    #[test]
    fn euler_above_every_rate_is_zero() {
        let ps = build_pinched_spheres(q(2), 4).unwrap();
        let table = vanishing_betti(&ps.complex, &ps.rates, &v("T^5")).unwrap();
        assert_eq!(vanishing_euler(&table), 0);
        assert!(table.dims.values().all(|&d| d == 0));
    }

    #[test]
    fn torus_sweep() {
        let (t, rates) = build_torus(q(0), q(2), 3).unwrap();
        let s = sweep(&t, &rates, 0..=2).unwrap();
        let show =
            |j: usize| -> Vec<String> { s.degrees[&j].iter().map(ToString::to_string).collect() };
        assert_eq!(show(0), vec!["(-inf, inf): 0"]);
        assert_eq!(show(1), vec!["(-inf, 0]: 2", "(0, 2]: 1", "(2, inf): 0"]);
        assert_eq!(show(2), vec!["(-inf, 2]: 1", "(2, inf): 0"]);
    }

    #[test]
    fn sweep_without_rates() {
        let c = CellComplex::from_cells([crate::complex::Cell {
            id: crate::complex::CellId(0),
            dim: 0,
            boundary: vec![],
            label: None,
        }])
        .unwrap();
        let s = sweep(&c, &RateAnnotation::new(), [0]).unwrap();
        assert_eq!(s.degrees[&0].len(), 1);
        assert_eq!(s.degrees[&0][0].dim, 0);
    }

    #[test]
    fn subspace_complex_rejects_open_families() {
        let (c, _) = build_circle(3, ExtRational::integer(0)).unwrap();
        let chains = CellularChains::new(&c).unwrap();
        // one edge without its endpoints
        let spaces = vec![
            Subspace::zero(3),
            Subspace::coordinate(3, [0]),
            Subspace::zero(0),
        ];
        assert!(ChainSubspaceComplex::new(&chains, spaces).is_err());
    }
}
