//! The example families: circles, the Birbrair–Goldshtein tori, and two
//! spheres pinched along a shrinking circle.

use num_traits::{One, Zero};

use super::{CellComplex, CellId, CellSet, GeometricComplex, RateAnnotation, SimplicialBuilder};
use crate::error::{Error, Result};
use crate::puiseux::{ExtRational, PuiseuxSeries, Rational};

fn require_n(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "need at least 3 subdivisions, got {n}"
        )));
    }
    Ok(())
}

fn vertex_builder(count: usize) -> SimplicialBuilder {
    let mut b = SimplicialBuilder::new();
    for v in 0..count {
        b.add_vertex(CellId(v)).expect("fresh vertex ids");
    }
    b
}

/// An `n`-gon: vertices `0..n`, then edges `(i, i+1 mod n)`, all at `rate`.
pub fn build_circle(n: usize, rate: ExtRational) -> Result<(CellComplex, RateAnnotation)> {
    require_n(n)?;
    let mut b = vertex_builder(n);
    let mut rates = RateAnnotation::new();
    for i in 0..n {
        let e = b.add_simplex(&[CellId(i), CellId((i + 1) % n)])?;
        rates.insert(e, rate.clone());
    }
    Ok((b.finish(), rates))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum TorusCell {
    Circumferential,
    Meridian,
    Diagonal,
    Triangle,
}

/// Simplex list of the `n × n` product triangulation; vertex `(i, j)` is `i*n + j`,
/// `i` running along the first circle and `j` along the second.
fn torus_simplices(n: usize) -> Vec<(Vec<CellId>, TorusCell)> {
    let v = |i: usize, j: usize| CellId((i % n) * n + (j % n));
    let mut out = Vec::with_capacity(5 * n * n);
    for i in 0..n {
        for j in 0..n {
            out.push((vec![v(i, j), v(i + 1, j)], TorusCell::Circumferential));
            out.push((vec![v(i, j), v(i, j + 1)], TorusCell::Meridian));
            out.push((vec![v(i, j), v(i + 1, j + 1)], TorusCell::Diagonal));
        }
    }
    for i in 0..n {
        for j in 0..n {
            out.push((
                vec![v(i, j), v(i + 1, j), v(i + 1, j + 1)],
                TorusCell::Triangle,
            ));
            out.push((
                vec![v(i, j), v(i, j + 1), v(i + 1, j + 1)],
                TorusCell::Triangle,
            ));
        }
    }
    out
}

/// Torus `{|x| = T^p} × {|y| = T^q}` triangulated as an `n × n` product.
///
/// Rates: first-circle edges `p`, second-circle (meridian) edges `q`,
/// diagonals `min(p, q)`, triangles `max(p, q)`. Arguments are swapped when `p > q`.
pub fn build_torus(p: Rational, q: Rational, n: usize) -> Result<(CellComplex, RateAnnotation)> {
    require_n(n)?;
    let (p, q) = if p <= q { (p, q) } else { (q, p) };
    let mut b = vertex_builder(n * n);
    let mut rates = RateAnnotation::new();
    for (verts, kind) in torus_simplices(n) {
        let id = b.add_simplex(&verts)?;
        let r = match kind {
            TorusCell::Circumferential | TorusCell::Diagonal => p.clone(),
            TorusCell::Meridian | TorusCell::Triangle => q.clone(),
        };
        rates.insert(id, ExtRational::Finite(r));
    }
    Ok((b.finish(), rates))
}

/// `k`-th rational point `((1-t²)/(1+t²), 2t/(1+t²))`, `t = k`, on the unit circle.
fn circle_point(k: usize) -> (Rational, Rational) {
    let t = Rational::from_integer(k.into());
    let d = Rational::one() + &t * &t;
    ((Rational::one() - &t * &t) / &d, (&t + &t) / d)
}

/// The same torus embedded in `R^4`: vertex `(i, j)` sits at
/// `(T^p a_i, T^q b_j)` with `a_i`, `b_j` distinct rational points of the unit
/// circle. Simplex order matches [`build_torus`].
pub fn geometric_torus(p: Rational, q: Rational, n: usize) -> Result<GeometricComplex> {
    require_n(n)?;
    let (p, q) = if p <= q { (p, q) } else { (q, p) };
    let mut vertices = std::collections::BTreeMap::new();
    for i in 0..n {
        let (ax, ay) = circle_point(i);
        for j in 0..n {
            let (bx, by) = circle_point(j);
            let coords = vec![
                PuiseuxSeries::monomial(ax.clone(), p.clone()),
                PuiseuxSeries::monomial(ay.clone(), p.clone()),
                PuiseuxSeries::monomial(bx, q.clone()),
                PuiseuxSeries::monomial(by, q.clone()),
            ];
            vertices.insert(CellId(i * n + j), coords);
        }
    }
    Ok(GeometricComplex {
        ambient_dim: 4,
        vertices,
        simplices: torus_simplices(n).into_iter().map(|(s, _)| s).collect(),
    })
}

/// Output of [`build_pinched_spheres`].
#[derive(Clone, Debug)]
pub struct PinchedSpheres {
    pub complex: CellComplex,
    pub rates: RateAnnotation,
    /// The shared circle `A` (vertices and edges).
    pub equator: CellSet,
}

/// Two sphere caps glued along a circle `A` of size `~T^r`.
///
/// Each cap is a fan (apex plus an `n`-vertex ring) joined to the equator by a
/// collar of `2n` triangles. Equator edges and the `n` collar slivers per side
/// (two equator vertices, one ring vertex) have rate `r`; every other cell has
/// rate 0. Vertex ids: apexes `0, 1`, upper ring `2..2+n`, lower ring
/// `2+n..2+2n`, equator `2+2n..2+3n`.
pub fn build_pinched_spheres(r: Rational, n: usize) -> Result<PinchedSpheres> {
    require_n(n)?;
    let apex = |side: usize| CellId(side);
    let ring = |side: usize, i: usize| CellId(2 + side * n + i % n);
    let eq = |i: usize| CellId(2 + 2 * n + i % n);
    let mut b = vertex_builder(2 + 3 * n);
    let mut rates = RateAnnotation::new();
    let thin = ExtRational::Finite(r);
    let thick = ExtRational::Finite(Rational::zero());
    let mut equator: CellSet = (0..n).map(eq).collect();

    for i in 0..n {
        let e = b.add_simplex(&[eq(i), eq(i + 1)])?;
        rates.insert(e, thin.clone());
        equator.insert(e);
    }
    for side in 0..2 {
        for i in 0..n {
            for edge in [
                [apex(side), ring(side, i)],
                [ring(side, i), ring(side, i + 1)],
                [eq(i), ring(side, i)],
                [eq(i + 1), ring(side, i)],
            ] {
                let e = b.add_simplex(&edge)?;
                rates.insert(e, thick.clone());
            }
        }
        for i in 0..n {
            let fan = b.add_simplex(&[apex(side), ring(side, i), ring(side, i + 1)])?;
            rates.insert(fan, thick.clone());
            let sliver = b.add_simplex(&[eq(i), eq(i + 1), ring(side, i)])?;
            rates.insert(sliver, thin.clone());
            let collar = b.add_simplex(&[ring(side, i), ring(side, i + 1), eq(i + 1)])?;
            rates.insert(collar, thick.clone());
        }
    }
    Ok(PinchedSpheres {
        complex: b.finish(),
        rates,
        equator,
    })
}
