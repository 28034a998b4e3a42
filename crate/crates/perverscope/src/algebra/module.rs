//! Finite-dimensional right modules over a bound quiver algebra.
//!
//! A module assigns a fiber to each vertex and a matrix to each arrow, mapping
//! the fiber at the arrow's source into the fiber at its target. A path acts
//! by applying its arrows in travel order, so the composite matrix multiplies
//! in reverse: the path `a` then `b` acts as `M(b) * M(a)`. Construction
//! checks every algebra relation against the given matrices.

use std::collections::BTreeMap;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::matrix::Matrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Module<K: Scalar> {
    dims: Vec<usize>,
    maps: Vec<Matrix<K>>,
}

/// A morphism of modules: one matrix per vertex, source fiber to target fiber.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleHom<K: Scalar> {
    pub mats: Vec<Matrix<K>>,
}

/// Per-vertex subspaces of a module's fibers, rows in reduced echelon form.
#[derive(Debug, Clone)]
pub struct Subspaces<K: Scalar> {
    pub rows: Vec<Matrix<K>>,
    pub pivots: Vec<Vec<usize>>,
}

impl<K: Scalar> Module<K> {
    pub fn new(alg: &Algebra<K>, dims: Vec<usize>, maps: Vec<Matrix<K>>) -> Result<Module<K>> {
        let q = alg.quiver();
        if dims.len() != q.n_vertices() {
            return Err(Error::input(format!(
                "module declares {} fibers for {} vertices",
                dims.len(),
                q.n_vertices()
            )));
        }
        if maps.len() != q.arrows.len() {
            return Err(Error::input(format!(
                "module declares {} arrow maps for {} arrows",
                maps.len(),
                q.arrows.len()
            )));
        }
        for (a, m) in maps.iter().enumerate() {
            let arrow = &q.arrows[a];
            if m.rows() != dims[arrow.to] || m.cols() != dims[arrow.from] {
                return Err(Error::input(format!(
                    "map for arrow '{}' is {}x{}, expected {}x{}",
                    arrow.name,
                    m.rows(),
                    m.cols(),
                    dims[arrow.to],
                    dims[arrow.from]
                )));
            }
        }
        let module = Module { dims, maps };
        for (ri, rel) in alg.relations().iter().enumerate() {
            let mut acc = Matrix::zero(module.dims[rel.to], module.dims[rel.from]);
            for term in &rel.terms {
                let act = module.act_arrows(alg, &term.path, rel.from);
                acc = acc.add(&act.scale(&term.coeff));
            }
            if !acc.is_zero_matrix() {
                return Err(Error::input(format!(
                    "arrow maps violate relation {ri}"
                )));
            }
        }
        Ok(module)
    }

    /// Skips relation validation; for modules built from verified constructions.
    fn new_unchecked(dims: Vec<usize>, maps: Vec<Matrix<K>>) -> Module<K> {
        Module { dims, maps }
    }

    pub fn zero(alg: &Algebra<K>) -> Module<K> {
        let q = alg.quiver();
        Module {
            dims: vec![0; q.n_vertices()],
            maps: q.arrows.iter().map(|_| Matrix::zero(0, 0)).collect(),
        }
    }

    pub fn simple(alg: &Algebra<K>, v: usize) -> Module<K> {
        let q = alg.quiver();
        let mut dims = vec![0; q.n_vertices()];
        dims[v] = 1;
        let maps = q
            .arrows
            .iter()
            .map(|a| Matrix::zero(dims[a.to], dims[a.from]))
            .collect();
        Module { dims, maps }
    }

    /// The indecomposable projective at `v`: fibers are spanned by the basis
    /// path classes out of `v`, arrows act by right multiplication.
    pub fn projective(alg: &Algebra<K>, v: usize) -> Module<K> {
        let q = alg.quiver();
        let fibers: Vec<Vec<usize>> =
            (0..q.n_vertices()).map(|w| alg.paths_between(v, w)).collect();
        let pos: Vec<BTreeMap<usize, usize>> = fibers
            .iter()
            .map(|f| f.iter().enumerate().map(|(i, &p)| (p, i)).collect())
            .collect();
        let dims: Vec<usize> = fibers.iter().map(|f| f.len()).collect();
        let maps = q
            .arrows
            .iter()
            .enumerate()
            .map(|(aid, a)| {
                let mut m = Matrix::zero(dims[a.to], dims[a.from]);
                for (col, &p) in fibers[a.from].iter().enumerate() {
                    for (cls, coeff) in alg.class_times_arrow(p, aid) {
                        m.set(pos[a.to][&cls], col, coeff);
                    }
                }
                m
            })
            .collect();
        Module { dims, maps }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_at(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    pub fn arrow_map(&self, a: usize) -> &Matrix<K> {
        &self.maps[a]
    }

    /// Action of an arrow sequence starting at `start` (identity when empty).
    pub fn act_arrows(&self, alg: &Algebra<K>, arrows: &[usize], start: usize) -> Matrix<K> {
        let mut acc = Matrix::identity(self.dims[start]);
        let mut at = start;
        for &a in arrows {
            debug_assert_eq!(alg.quiver().arrows[a].from, at);
            at = alg.quiver().arrows[a].to;
            acc = self.maps[a].mul(&acc);
        }
        acc
    }

    /// Action of a basis path class, fiber at its source to fiber at its target.
    pub fn act_class(&self, alg: &Algebra<K>, class: usize) -> Matrix<K> {
        let bp = alg.basis_path(class);
        self.act_arrows(alg, &bp.repr, bp.from)
    }

    /// Basis of the intertwiner space `Hom(self, other)`, in a deterministic
    /// order (free columns of the constraint kernel, ascending).
    pub fn hom_space(&self, alg: &Algebra<K>, other: &Module<K>) -> Vec<ModuleHom<K>> {
        let n = self.dims.len();
        let mut offset = vec![0usize; n + 1];
        for v in 0..n {
            offset[v + 1] = offset[v] + other.dims[v] * self.dims[v];
        }
        let nvars = offset[n];
        if nvars == 0 {
            return Vec::new();
        }
        let mut rows: Vec<Vec<K>> = Vec::new();
        for (aid, a) in alg.quiver().arrows.iter().enumerate() {
            let (u, t) = (a.from, a.to);
            let ma = &self.maps[aid];
            let na = &other.maps[aid];
            // f_t * M_a = N_a * f_u, one equation per target row and source column
            for r in 0..other.dims[t] {
                for c in 0..self.dims[u] {
                    let mut row = vec![K::zero(); nvars];
                    for k in 0..self.dims[t] {
                        let coeff = ma.at(k, c).clone();
                        if !coeff.is_zero() {
                            let idx = offset[t] + r * self.dims[t] + k;
                            row[idx] = row[idx].clone() + coeff;
                        }
                    }
                    for k in 0..other.dims[u] {
                        let coeff = na.at(r, k).clone();
                        if !coeff.is_zero() {
                            let idx = offset[u] + k * self.dims[u] + c;
                            row[idx] = row[idx].clone() - coeff;
                        }
                    }
                    if row.iter().any(|x| !x.is_zero()) {
                        rows.push(row);
                    }
                }
            }
        }
        let constraint = if rows.is_empty() {
            Matrix::zero(0, nvars)
        } else {
            Matrix::from_rows(rows).expect("uniform constraint rows")
        };
        constraint
            .kernel_basis()
            .into_iter()
            .map(|sol| {
                let mats = (0..n)
                    .map(|v| {
                        Matrix::from_fn(other.dims[v], self.dims[v], |r, c| {
                            sol[offset[v] + r * self.dims[v] + c].clone()
                        })
                    })
                    .collect();
                ModuleHom { mats }
            })
            .collect()
    }

    pub fn hom_dim(&self, alg: &Algebra<K>, other: &Module<K>) -> usize {
        self.hom_space(alg, other).len()
    }

    /// Smallest submodule containing the given fiber vectors.
    pub fn generated_submodule(
        &self,
        alg: &Algebra<K>,
        gens: &[(usize, Vec<K>)],
    ) -> Subspaces<K> {
        let n = self.dims.len();
        let mut raw: Vec<Vec<Vec<K>>> = vec![Vec::new(); n];
        let mut work: Vec<(usize, Vec<K>)> = gens.to_vec();
        while let Some((v, x)) = work.pop() {
            assert_eq!(x.len(), self.dims[v], "generator has wrong fiber dimension");
            if x.iter().all(|c| c.is_zero()) {
                continue;
            }
            let span = rows_matrix(&raw[v], self.dims[v]);
            if span.rows() > 0 && span.row_space_contains(&x) {
                continue;
            }
            raw[v].push(x.clone());
            for (aid, a) in alg.quiver().arrows.iter().enumerate() {
                if a.from == v {
                    work.push((a.to, self.maps[aid].mul_vec(&x)));
                }
            }
        }
        Subspaces::from_raw(&self.dims, raw)
    }

    /// The radical: the sum of the images of all arrow maps.
    pub fn radical(&self, alg: &Algebra<K>) -> Subspaces<K> {
        let n = self.dims.len();
        let mut raw: Vec<Vec<Vec<K>>> = vec![Vec::new(); n];
        for (aid, a) in alg.quiver().arrows.iter().enumerate() {
            for j in 0..self.dims[a.from] {
                raw[a.to].push(self.maps[aid].col(j));
            }
        }
        Subspaces::from_raw(&self.dims, raw)
    }

    /// Dimension vector of the top (module modulo radical).
    pub fn top_dims(&self, alg: &Algebra<K>) -> Vec<usize> {
        let rad = self.radical(alg);
        (0..self.dims.len())
            .map(|v| self.dims[v] - rad.rows[v].rows())
            .collect()
    }

    /// Trace of the projectives at `verts`: the submodule generated by the
    /// fibers over those vertices.
    pub fn trace_of_projectives(&self, alg: &Algebra<K>, verts: &[usize]) -> Subspaces<K> {
        let mut gens = Vec::new();
        for &w in verts {
            for j in 0..self.dims[w] {
                let mut e = vec![K::zero(); self.dims[w]];
                e[j] = K::one();
                gens.push((w, e));
            }
        }
        self.generated_submodule(alg, &gens)
    }

    /// Realizes a subspace family as a module plus its inclusion.
    pub fn submodule(&self, alg: &Algebra<K>, sub: &Subspaces<K>) -> (Module<K>, ModuleHom<K>) {
        let n = self.dims.len();
        let dims: Vec<usize> = (0..n).map(|v| sub.rows[v].rows()).collect();
        // inclusion: columns are the subspace basis rows
        let incl: Vec<Matrix<K>> = (0..n).map(|v| sub.rows[v].transpose()).collect();
        let maps = alg
            .quiver()
            .arrows
            .iter()
            .enumerate()
            .map(|(aid, a)| {
                let image = self.maps[aid].mul(&incl[a.from]);
                incl[a.to]
                    .solve_matrix(&image)
                    .expect("subspaces are not arrow-stable")
            })
            .collect();
        (Module::new_unchecked(dims, maps), ModuleHom { mats: incl })
    }

    /// Quotient by a subspace family, with the projection map.
    pub fn quotient(&self, alg: &Algebra<K>, sub: &Subspaces<K>) -> (Module<K>, ModuleHom<K>) {
        let n = self.dims.len();
        let mut proj = Vec::with_capacity(n);
        let mut lift = Vec::with_capacity(n);
        for v in 0..n {
            let (p, l) = quotient_maps(&sub.rows[v], &sub.pivots[v], self.dims[v]);
            proj.push(p);
            lift.push(l);
        }
        let dims: Vec<usize> = proj.iter().map(|p| p.rows()).collect();
        let maps = alg
            .quiver()
            .arrows
            .iter()
            .enumerate()
            .map(|(aid, a)| proj[a.to].mul(&self.maps[aid]).mul(&lift[a.from]))
            .collect();
        (Module::new_unchecked(dims, maps), ModuleHom { mats: proj })
    }

    /// Kernel of a morphism out of this module, with its inclusion.
    pub fn kernel_of(
        &self,
        alg: &Algebra<K>,
        f: &ModuleHom<K>,
    ) -> (Module<K>, ModuleHom<K>) {
        let n = self.dims.len();
        let mut incl = Vec::with_capacity(n);
        for v in 0..n {
            let kb = f.mats[v].kernel_basis();
            let cols = kb.len();
            let m = Matrix::from_fn(self.dims[v], cols, |i, j| kb[j][i].clone());
            incl.push(m);
        }
        let dims: Vec<usize> = incl.iter().map(|m| m.cols()).collect();
        let maps = alg
            .quiver()
            .arrows
            .iter()
            .enumerate()
            .map(|(aid, a)| {
                let image = self.maps[aid].mul(&incl[a.from]);
                incl[a.to]
                    .solve_matrix(&image)
                    .expect("kernel fibers are not arrow-stable")
            })
            .collect();
        (Module::new_unchecked(dims, maps), ModuleHom { mats: incl })
    }

    /// Checks the intertwiner condition for `f: self -> other`.
    pub fn is_hom(&self, alg: &Algebra<K>, other: &Module<K>, f: &ModuleHom<K>) -> bool {
        alg.quiver().arrows.iter().enumerate().all(|(aid, a)| {
            f.mats[a.to].mul(&self.maps[aid]) == other.maps[aid].mul(&f.mats[a.from])
        })
    }
}

impl<K: Scalar> ModuleHom<K> {
    pub fn zero_to(m: &Module<K>, n: &Module<K>) -> ModuleHom<K> {
        ModuleHom {
            mats: (0..m.dims.len())
                .map(|v| Matrix::zero(n.dims[v], m.dims[v]))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.mats.iter().all(|m| m.is_zero_matrix())
    }

    /// `self` followed by `g`.
    pub fn then(&self, g: &ModuleHom<K>) -> ModuleHom<K> {
        ModuleHom {
            mats: self
                .mats
                .iter()
                .zip(&g.mats)
                .map(|(f, g)| g.mul(f))
                .collect(),
        }
    }

    pub fn add(&self, other: &ModuleHom<K>) -> ModuleHom<K> {
        ModuleHom {
            mats: self
                .mats
                .iter()
                .zip(&other.mats)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &K) -> ModuleHom<K> {
        ModuleHom {
            mats: self.mats.iter().map(|m| m.scale(c)).collect(),
        }
    }

    /// True when every vertex matrix is invertible.
    pub fn is_isomorphism(&self) -> bool {
        self.mats
            .iter()
            .all(|m| m.rows() == m.cols() && m.rank() == m.rows())
    }
}

impl<K: Scalar> Subspaces<K> {
    pub fn from_raw(dims: &[usize], raw: Vec<Vec<Vec<K>>>) -> Subspaces<K> {
        let mut rows = Vec::with_capacity(dims.len());
        let mut pivots = Vec::with_capacity(dims.len());
        for (v, vecs) in raw.into_iter().enumerate() {
            let mut m = rows_matrix(&vecs, dims[v]);
            let p = m.rref();
            let r = p.len();
            let reduced = Matrix::from_fn(r, dims[v], |i, j| m.at(i, j).clone());
            rows.push(reduced);
            pivots.push(p);
        }
        Subspaces { rows, pivots }
    }

    pub fn empty(dims: &[usize]) -> Subspaces<K> {
        Subspaces {
            rows: dims.iter().map(|&d| Matrix::zero(0, d)).collect(),
            pivots: dims.iter().map(|_| Vec::new()).collect(),
        }
    }

    pub fn dim_at(&self, v: usize) -> usize {
        self.rows[v].rows()
    }

    pub fn total_dim(&self) -> usize {
        self.rows.iter().map(|m| m.rows()).sum()
    }
}

fn rows_matrix<K: Scalar>(vecs: &[Vec<K>], width: usize) -> Matrix<K> {
    if vecs.is_empty() {
        Matrix::zero(0, width)
    } else {
        Matrix::from_rows(vecs.to_vec()).expect("uniform fiber vectors")
    }
}

/// Projection and lift matrices for the quotient by a row space in RREF.
/// The quotient coordinates are the free (non-pivot) columns.
fn quotient_maps<K: Scalar>(
    rows: &Matrix<K>,
    pivots: &[usize],
    dim: usize,
) -> (Matrix<K>, Matrix<K>) {
    let mut is_pivot = vec![false; dim];
    for &p in pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..dim).filter(|&j| !is_pivot[j]).collect();
    let qdim = free.len();
    let mut proj = Matrix::zero(qdim, dim);
    for (q, &f) in free.iter().enumerate() {
        proj.set(q, f, K::one());
        // a pivot column j reduces to minus its row's free part
        for (r, &p) in pivots.iter().enumerate() {
            let v = -rows.at(r, f).clone();
            proj.set(q, p, v);
        }
    }
    let mut lift = Matrix::zero(dim, qdim);
    for (q, &f) in free.iter().enumerate() {
        lift.set(f, q, K::one());
    }
    (proj, lift)
}

/// An explicit finite direct sum of indecomposable projectives, with named
/// coordinates: the fiber at a vertex `w` is indexed by pairs (summand,
/// basis path class from that summand's vertex to `w`), ordered by summand
/// then class id.
#[derive(Debug, Clone)]
pub struct RealizedProjective<K: Scalar> {
    pub summands: Vec<usize>,
    pub module: Module<K>,
    pub coords: Vec<Vec<(usize, usize)>>,
    index: BTreeMap<(usize, usize, usize), usize>,
}

impl<K: Scalar> RealizedProjective<K> {
    pub fn new(alg: &Algebra<K>, summands: Vec<usize>) -> RealizedProjective<K> {
        let q = alg.quiver();
        let n = q.n_vertices();
        let mut coords: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        let mut index = BTreeMap::new();
        for w in 0..n {
            for (i, &v) in summands.iter().enumerate() {
                for p in alg.paths_between(v, w) {
                    index.insert((w, i, p), coords[w].len());
                    coords[w].push((i, p));
                }
            }
        }
        let dims: Vec<usize> = coords.iter().map(|c| c.len()).collect();
        let maps: Vec<Matrix<K>> = q
            .arrows
            .iter()
            .enumerate()
            .map(|(aid, a)| {
                let mut m = Matrix::zero(dims[a.to], dims[a.from]);
                for (col, &(i, p)) in coords[a.from].iter().enumerate() {
                    for (cls, coeff) in alg.class_times_arrow(p, aid) {
                        m.set(index[&(a.to, i, cls)], col, coeff);
                    }
                }
                m
            })
            .collect();
        RealizedProjective {
            summands,
            module: Module::new_unchecked(dims, maps),
            coords,
            index,
        }
    }

    pub fn n_summands(&self) -> usize {
        self.summands.len()
    }

    /// Fiber coordinate of the generator of summand `i`.
    pub fn generator(&self, alg: &Algebra<K>, i: usize) -> (usize, usize) {
        let v = self.summands[i];
        let pos = self.index[&(v, i, alg.trivial_path(v))];
        (v, pos)
    }

    /// Counts summands per vertex.
    pub fn multiplicities(&self, n_vertices: usize) -> Vec<usize> {
        let mut mult = vec![0; n_vertices];
        for &v in &self.summands {
            mult[v] += 1;
        }
        mult
    }

    /// The morphism to `target` sending the generator of summand `i` to the
    /// fiber vector `assignments[i]` over that summand's vertex.
    pub fn hom_from_assignments(
        &self,
        alg: &Algebra<K>,
        target: &Module<K>,
        assignments: &[Vec<K>],
    ) -> ModuleHom<K> {
        assert_eq!(assignments.len(), self.summands.len());
        let n = alg.n_vertices();
        let act: BTreeMap<usize, Matrix<K>> = self
            .coords
            .iter()
            .flatten()
            .map(|&(_, p)| p)
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .map(|p| (p, target.act_class(alg, p)))
            .collect();
        let mats = (0..n)
            .map(|w| {
                let mut m = Matrix::zero(target.dim_at(w), self.module.dim_at(w));
                for (col, &(i, p)) in self.coords[w].iter().enumerate() {
                    let img = act[&p].mul_vec(&assignments[i]);
                    for (r, val) in img.into_iter().enumerate() {
                        m.set(r, col, val);
                    }
                }
                m
            })
            .collect();
        ModuleHom { mats }
    }
}

#[cfg(test)]
mod tests {
    use num_traits::{One, Zero};

    use super::*;
    use crate::algebra::testkit::{a2_algebra, cp2_algebra, two_strata_algebra};
    use crate::field::Rat;

    #[test]
    fn projective_dimension_vectors() {
        let a = cp2_algebra();
        let p0 = Module::projective(&a, 0);
        let p1 = Module::projective(&a, 1);
        let p2 = Module::projective(&a, 2);
        assert_eq!(p0.dims(), &[2, 1, 0]);
        assert_eq!(p1.dims(), &[1, 2, 1]);
        assert_eq!(p2.dims(), &[0, 1, 1]);
    }

    #[test]
    fn hom_from_projective_counts_fiber() {
        let a = cp2_algebra();
        for v in 0..3 {
            let pv = Module::projective(&a, v);
            for w in 0..3 {
                let pw = Module::projective(&a, w);
                assert_eq!(
                    pv.hom_dim(&a, &pw),
                    pw.dim_at(v),
                    "Hom(P{v}, P{w}) should match fiber of P{w} at {v}"
                );
            }
        }
        // endomorphisms: P2 admits only scalars, P1 a 2-dimensional space
        let p1 = Module::projective(&a, 1);
        let p2 = Module::projective(&a, 2);
        assert_eq!(p2.hom_dim(&a, &p2), 1);
        assert_eq!(p1.hom_dim(&a, &p1), 2);
    }

    #[test]
    fn radical_and_top_of_projectives() {
        let a = cp2_algebra();
        let p1 = Module::projective(&a, 1);
        let rad = p1.radical(&a);
        assert_eq!(
            (0..3).map(|v| rad.dim_at(v)).collect::<Vec<_>>(),
            vec![1, 1, 1]
        );
        assert_eq!(p1.top_dims(&a), vec![0, 1, 0]);
    }

    #[test]
    fn quotient_by_radical_is_simple() {
        let a = cp2_algebra();
        let p0 = Module::projective(&a, 0);
        let rad = p0.radical(&a);
        let (top, proj) = p0.quotient(&a, &rad);
        assert_eq!(top.dims(), &[1, 0, 0]);
        assert!(p0.is_hom(&a, &top, &proj));
    }

    #[test]
    fn submodule_inclusion_is_a_hom() {
        let a = cp2_algebra();
        let p1 = Module::projective(&a, 1);
        let rad = p1.radical(&a);
        let (sub, incl) = p1.submodule(&a, &rad);
        assert_eq!(sub.total_dim(), 3);
        assert!(sub.is_hom(&a, &p1, &incl));
    }

    #[test]
    fn kernel_of_cover_of_simple() {
        let a = two_strata_algebra();
        // P1 covers S1 with kernel S2 (the radical)
        let p1 = Module::projective(&a, 0);
        let s1 = Module::simple(&a, 0);
        let homs = p1.hom_space(&a, &s1);
        assert_eq!(homs.len(), 1);
        let (ker, incl) = p1.kernel_of(&a, &homs[0]);
        assert_eq!(ker.dims(), &[0, 1]);
        assert!(ker.is_hom(&a, &p1, &incl));
    }

    #[test]
    fn realized_projective_matches_singles() {
        let a = cp2_algebra();
        let rp = RealizedProjective::new(&a, vec![0, 2]);
        assert_eq!(rp.module.dims(), &[2, 2, 1]);
        let (v0, _) = rp.generator(&a, 0);
        let (v1, _) = rp.generator(&a, 1);
        assert_eq!((v0, v1), (0, 2));
        assert_eq!(rp.multiplicities(3), vec![1, 0, 1]);
    }

    #[test]
    fn assignment_homs_are_homs() {
        let a = cp2_algebra();
        let rp = RealizedProjective::new(&a, vec![1]);
        let s1 = Module::simple(&a, 1);
        let one = vec![Rat::one()];
        let f = rp.hom_from_assignments(&a, &s1, std::slice::from_ref(&one));
        assert!(rp.module.is_hom(&a, &s1, &f));
        assert!(!f.is_zero());
        // the hom space Hom(P1, S1) is one-dimensional
        assert_eq!(rp.module.hom_dim(&a, &s1), 1);
    }

    #[test]
    fn relation_violation_is_rejected() {
        let a = two_strata_algebra();
        // both arrows act as 1 on a one-dimensional fiber pair: ab != 0
        let dims = vec![1, 1];
        let maps = vec![
            Matrix::from_int_rows(&[vec![1]], a.field()),
            Matrix::from_int_rows(&[vec![1]], a.field()),
        ];
        let err = Module::<Rat>::new(&a, dims, maps).unwrap_err();
        assert!(err.to_string().contains("violate relation"));
    }

    #[test]
    fn trace_of_projectives_spans_reachable_part() {
        let a = a2_algebra();
        let p0 = Module::projective(&a, 0);
        // fiber over vertex 1 generates only the socle
        let tr = p0.trace_of_projectives(&a, &[1]);
        assert_eq!(tr.dim_at(0), 0);
        assert_eq!(tr.dim_at(1), 1);
        let zero_check = tr.rows[1].at(0, 0).clone();
        assert!(!zero_check.is_zero());
    }
}
