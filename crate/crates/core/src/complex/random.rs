//! Random small simplicial complexes for property and acceptance testing.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;

use super::{CellComplex, CellId, CellSet, RateAnnotation, SimplicialBuilder};
use crate::puiseux::ExtRational;

/// A random simplicial complex with at most `max_cells` cells and dimension at
/// most `max_dim`, rates drawn uniformly from `rates` for every cell of dim >= 1.
/// Simplices get random vertex orders, so incidence signs vary.
pub fn random_complex<R: Rng>(
    rng: &mut R,
    max_cells: usize,
    max_dim: usize,
    rates: &[i64],
) -> (CellComplex, RateAnnotation) {
    let n_vertices = rng.gen_range(1..=6.min(max_cells.max(1)));
    let mut simplices: BTreeSet<Vec<usize>> = (0..n_vertices).map(|v| vec![v]).collect();
    for _ in 0..40 {
        let dim = rng.gen_range(1..=max_dim.max(1));
        if dim + 1 > n_vertices {
            continue;
        }
        let mut verts: Vec<usize> = (0..n_vertices).collect();
        verts.shuffle(rng);
        verts.truncate(dim + 1);
        verts.sort();
        let mut closure = Vec::new();
        for mask in 1u32..(1 << verts.len()) {
            let face: Vec<usize> = (0..verts.len())
                .filter(|&i| mask & (1 << i) != 0)
                .map(|i| verts[i])
                .collect();
            if !simplices.contains(&face) {
                closure.push(face);
            }
        }
        if simplices.len() + closure.len() <= max_cells {
            simplices.extend(closure);
        }
    }
    let mut ordered: Vec<Vec<usize>> = simplices.into_iter().collect();
    ordered.sort_by_key(|s| s.len());
    let mut b = SimplicialBuilder::new();
    let mut annotation = RateAnnotation::new();
    for mut s in ordered {
        if s.len() == 1 {
            b.add_vertex(CellId(s[0])).expect("fresh vertex");
            continue;
        }
        s.shuffle(rng);
        let verts: Vec<CellId> = s.into_iter().map(CellId).collect();
        let id = b.add_simplex(&verts).expect("faces added first");
        let r = rates[rng.gen_range(0..rates.len())];
        annotation.insert(id, ExtRational::integer(r));
    }
    (b.finish(), annotation)
}

/// Closure of a random selection of cells (each picked with probability `density`).
pub fn random_subcomplex<R: Rng>(rng: &mut R, c: &CellComplex, density: f64) -> CellSet {
    let picked: CellSet = c.ids().filter(|_| rng.gen_bool(density)).collect();
    c.closure(&picked).expect("ids come from the complex")
}

/// A random coface-closed subset of `a`: the union of open stars of randomly
/// chosen cells whose open star lies inside `a`.
pub fn random_excision<R: Rng>(rng: &mut R, c: &CellComplex, a: &CellSet) -> CellSet {
    let mut w = CellSet::new();
    for id in a.iter() {
        if !rng.gen_bool(0.4) {
            continue;
        }
        let star = open_star(c, id);
        if star.is_subset(a) {
            w = w.union(&star);
        }
    }
    w
}

/// All cells having `id` in their closure.
pub fn open_star(c: &CellComplex, id: CellId) -> CellSet {
    let mut star = CellSet::new();
    let mut stack = vec![id];
    while let Some(x) = stack.pop() {
        if star.insert(x) {
            stack.extend(c.cofaces(x));
        }
    }
    star
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn random_complexes_are_valid_and_bounded() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..200 {
            let (c, rates) = random_complex(&mut rng, 30, 3, &[0, 1, 2, 3]);
            assert!(c.validate().is_ok());
            assert!(c.len() <= 30);
            assert!(c.dim() <= 3);
            assert!(c
                .cells()
                .filter(|x| x.dim > 0)
                .all(|x| rates.contains_key(&x.id)));
            let a = random_subcomplex(&mut rng, &c, 0.3);
            assert!(c.is_face_closed(&a));
            let w = random_excision(&mut rng, &c, &a);
            assert!(w.is_subset(&a));
            c.check_coface_closed(&w).unwrap();
            assert!(c.is_face_closed(&c.all_cells().difference(&w)));
        }
    }
}
