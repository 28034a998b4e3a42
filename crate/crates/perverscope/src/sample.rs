//! Deterministic random generators for property testing: modules as random
//! quotients of projective sums (every finite-dimensional module arises this
//! way, and relations hold automatically), random small simplicial complexes,
//! and random linear extensions of the face order.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::algebra::module::{Module, RealizedProjective};
use crate::algebra::Algebra;
use crate::field::Scalar;
use crate::simplicial::SimplicialComplex;

/// A random nonzero module: a sum of up to three indecomposable projectives
/// modulo a randomly generated submodule. Falls back to a simple module if
/// every draw collapses.
pub fn random_module<K: Scalar, R: Rng>(alg: &Algebra<K>, rng: &mut R) -> Module<K> {
    let n = alg.n_vertices();
    for _ in 0..8 {
        let count = rng.gen_range(1..=3usize);
        let summands: Vec<usize> = (0..count).map(|_| rng.gen_range(0..n)).collect();
        let rp = RealizedProjective::new(alg, summands);
        let mut gens = Vec::new();
        for _ in 0..rng.gen_range(0..=3usize) {
            let w = rng.gen_range(0..n);
            let d = rp.module.dim_at(w);
            if d == 0 {
                continue;
            }
            let v: Vec<K> = (0..d)
                .map(|_| K::from_int(rng.gen_range(-2..=2i64), alg.field()))
                .collect();
            gens.push((w, v));
        }
        let sub = rp.module.generated_submodule(alg, &gens);
        let (q, _) = rp.module.quotient(alg, &sub);
        if !q.is_zero() {
            return q;
        }
    }
    Module::simple(alg, 0)
}

/// A random nonempty complex with at most `max_simplices` simplices and
/// facets of at most four vertices.
pub fn random_complex<R: Rng>(rng: &mut R, max_simplices: usize) -> SimplicialComplex {
    let n_verts = rng.gen_range(3..=8usize);
    let mut verts: Vec<usize> = (0..n_verts).collect();
    let mut facets: Vec<Vec<usize>> = Vec::new();
    let attempts = rng.gen_range(1..=6usize);
    for _ in 0..attempts {
        let size = rng.gen_range(1..=4usize.min(n_verts));
        verts.shuffle(rng);
        let mut candidate: Vec<usize> = verts[..size].to_vec();
        candidate.sort_unstable();
        let mut trial = facets.clone();
        trial.push(candidate);
        let complex =
            SimplicialComplex::from_facets(n_verts, &trial).expect("random facets are valid");
        if complex.n_simplices() <= max_simplices {
            facets = trial;
        }
    }
    if facets.is_empty() {
        facets.push(vec![0]);
    }
    SimplicialComplex::from_facets(n_verts, &facets).expect("random facets are valid")
}

/// A uniform-ish random linear extension of the face order: repeatedly picks
/// one of the simplices whose proper faces are all already placed.
pub fn random_face_order_refinement<R: Rng>(
    complex: &SimplicialComplex,
    rng: &mut R,
) -> Vec<usize> {
    let n = complex.n_simplices();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let ready: Vec<usize> = (0..n)
            .filter(|&id| !placed[id])
            .filter(|&id| complex.faces_codim1(id).iter().all(|&f| placed[f]))
            .collect();
        let &pick = ready.choose(rng).expect("face order is acyclic");
        placed[pick] = true;
        order.push(pick);
    }
    order
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::algebra::testkit::cp2_algebra;

    #[test]
    fn random_modules_are_valid_and_nonzero() {
        let a = cp2_algebra();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let m = random_module(&a, &mut rng);
            assert!(!m.is_zero());
            // arrow shapes are consistent by construction; act along a relation
            for rel in a.relations() {
                let mut acc =
                    crate::matrix::Matrix::zero(m.dim_at(rel.to), m.dim_at(rel.from));
                for term in &rel.terms {
                    let act = m.act_arrows(&a, &term.path, rel.from);
                    acc = acc.add(&act.scale(&term.coeff));
                }
                assert!(acc.is_zero_matrix());
            }
        }
    }

    #[test]
    fn random_complexes_stay_small() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let c = random_complex(&mut rng, 30);
            assert!(!c.is_empty());
            assert!(c.n_simplices() <= 30);
        }
    }

    #[test]
    fn refinements_respect_faces() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let c = random_complex(&mut rng, 30);
        for _ in 0..5 {
            let order = random_face_order_refinement(&c, &mut rng);
            let mut pos = vec![0; order.len()];
            for (p, &id) in order.iter().enumerate() {
                pos[id] = p;
            }
            for id in 0..c.n_simplices() {
                for f in c.faces_codim1(id) {
                    assert!(pos[f] < pos[id], "face placed after coface");
                }
            }
        }
    }
}
