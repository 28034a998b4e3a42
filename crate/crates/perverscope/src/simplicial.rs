//! Finite abstract simplicial complexes and their stratifications.
//!
//! Simplices are sorted vertex lists, identified by an id assigned in
//! (dimension, lexicographic) order; every id-based API in the crate relies on
//! that order being deterministic. Cohomology is computed over an arbitrary
//! exact field, absolutely, relative to a closed subset, or with compact
//! supports on a locally closed subset.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::graded::GradedDims;
use crate::matrix::Matrix;

/// Hard cap on facet size: faces are enumerated by subset masks.
const MAX_FACET_VERTICES: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_bound: usize,
    simplices: Vec<Vec<usize>>,
    ids: BTreeMap<Vec<usize>, usize>,
    cofaces: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// Builds the closure of the given facets. Vertices are `0..vertex_bound`;
    /// unused labels are allowed and do not contribute cells.
    pub fn from_facets(vertex_bound: usize, facets: &[Vec<usize>]) -> Result<SimplicialComplex> {
        let mut family: BTreeSet<Vec<usize>> = BTreeSet::new();
        for facet in facets {
            let simplex = normalize_simplex(facet, vertex_bound)?;
            for face in proper_and_improper_faces(&simplex) {
                family.insert(face);
            }
        }
        SimplicialComplex::from_family(vertex_bound, family)
    }

    /// Builds from an explicit face-closed family, rejecting missing faces.
    pub fn from_simplices(
        vertex_bound: usize,
        simplices: &[Vec<usize>],
    ) -> Result<SimplicialComplex> {
        let mut family: BTreeSet<Vec<usize>> = BTreeSet::new();
        for s in simplices {
            family.insert(normalize_simplex(s, vertex_bound)?);
        }
        for s in &family {
            for face in proper_and_improper_faces(s) {
                if !family.contains(&face) {
                    return Err(Error::input(format!(
                        "family is not face-closed: {} lacks face {}",
                        render_simplex(s),
                        render_simplex(&face)
                    )));
                }
            }
        }
        SimplicialComplex::from_family(vertex_bound, family)
    }

    fn from_family(
        vertex_bound: usize,
        family: BTreeSet<Vec<usize>>,
    ) -> Result<SimplicialComplex> {
        let mut simplices: Vec<Vec<usize>> = family.into_iter().collect();
        simplices.sort_by(|a, b| (a.len(), a.as_slice()).cmp(&(b.len(), b.as_slice())));
        let ids: BTreeMap<Vec<usize>, usize> =
            simplices.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        let mut cofaces = vec![Vec::new(); simplices.len()];
        for (id, s) in simplices.iter().enumerate() {
            if s.len() < 2 {
                continue;
            }
            for k in 0..s.len() {
                let mut face = s.clone();
                face.remove(k);
                let fid = ids[&face];
                cofaces[fid].push(id);
            }
        }
        Ok(SimplicialComplex { vertex_bound, simplices, ids, cofaces })
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn n_simplices(&self) -> usize {
        self.simplices.len()
    }

    pub fn vertex_bound(&self) -> usize {
        self.vertex_bound
    }

    /// Top dimension. Empty complexes have no dimension.
    pub fn dim(&self) -> usize {
        assert!(!self.is_empty(), "dimension of the empty complex");
        self.simplices.last().unwrap().len() - 1
    }

    pub fn simplex(&self, id: usize) -> &[usize] {
        &self.simplices[id]
    }

    pub fn simplices(&self) -> impl Iterator<Item = (usize, &[usize])> {
        self.simplices.iter().enumerate().map(|(i, s)| (i, s.as_slice()))
    }

    pub fn id_of(&self, simplex: &[usize]) -> Option<usize> {
        let mut s = simplex.to_vec();
        s.sort_unstable();
        self.ids.get(&s).copied()
    }

    pub fn dim_of(&self, id: usize) -> usize {
        self.simplices[id].len() - 1
    }

    pub fn render(&self, id: usize) -> String {
        render_simplex(&self.simplices[id])
    }

    /// Ids of codimension-one faces, ascending.
    pub fn faces_codim1(&self, id: usize) -> Vec<usize> {
        let s = &self.simplices[id];
        if s.len() < 2 {
            return Vec::new();
        }
        let mut out: Vec<usize> = (0..s.len())
            .map(|k| {
                let mut face = s.clone();
                face.remove(k);
                self.ids[&face]
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Ids of codimension-one cofaces, ascending.
    pub fn cofaces_codim1(&self, id: usize) -> &[usize] {
        &self.cofaces[id]
    }

    /// Whether `a` is a face of `b` (inclusive).
    pub fn is_face(&self, a: usize, b: usize) -> bool {
        is_subset(&self.simplices[a], &self.simplices[b])
    }

    /// Sign of the codimension-one incidence `[face : coface]`: `(-1)^k` where
    /// `k` is the position of the added vertex in the coface.
    pub fn incidence_sign(&self, face: usize, coface: usize) -> i64 {
        let f = &self.simplices[face];
        let c = &self.simplices[coface];
        debug_assert_eq!(f.len() + 1, c.len());
        for (k, v) in c.iter().enumerate() {
            if !f.contains(v) {
                return if k % 2 == 0 { 1 } else { -1 };
            }
        }
        unreachable!("coface does not extend face");
    }

    /// Ids of all faces of `id`, the simplex itself included.
    pub fn face_ids(&self, id: usize) -> Vec<usize> {
        proper_and_improper_faces(&self.simplices[id])
            .into_iter()
            .map(|f| self.ids[&f])
            .collect()
    }

    pub fn closure(&self, set: &BTreeSet<usize>) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for &id in set {
            out.extend(self.face_ids(id));
        }
        out
    }

    pub fn is_face_closed(&self, set: &BTreeSet<usize>) -> bool {
        set.iter().all(|&id| self.face_ids(id).iter().all(|f| set.contains(f)))
    }

    /// Upward-closed: with a simplex, the set holds every coface of it.
    pub fn is_open(&self, set: &BTreeSet<usize>) -> bool {
        let complement: BTreeSet<usize> =
            (0..self.n_simplices()).filter(|id| !set.contains(id)).collect();
        self.is_face_closed(&complement)
    }

    pub fn is_locally_closed(&self, set: &BTreeSet<usize>) -> bool {
        let boundary: BTreeSet<usize> =
            self.closure(set).difference(set).copied().collect();
        self.is_face_closed(&boundary)
    }

    /// Connected components of a simplex set under the face relation;
    /// cells touch when one is a face of the other.
    pub fn component_count(&self, set: &BTreeSet<usize>) -> usize {
        let ids: Vec<usize> = set.iter().copied().collect();
        let mut parent: Vec<usize> = (0..ids.len()).collect();
        fn find(parent: &mut Vec<usize>, i: usize) -> usize {
            if parent[i] != i {
                let r = find(parent, parent[i]);
                parent[i] = r;
            }
            parent[i]
        }
        for i in 0..ids.len() {
            for j in i + 1..ids.len() {
                if self.is_face(ids[i], ids[j]) || self.is_face(ids[j], ids[i]) {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        (0..ids.len()).map(|i| find(&mut parent, i)).collect::<BTreeSet<_>>().len()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.simplices
            .iter()
            .map(|s| if (s.len() - 1) % 2 == 0 { 1 } else { -1 })
            .sum()
    }

    /// Simplicial cohomology with field coefficients, unreduced.
    pub fn cohomology<K: Scalar>(&self, field: &FieldSpec) -> GradedDims {
        let all: BTreeSet<usize> = (0..self.n_simplices()).collect();
        self.spanned_cohomology::<K>(&all, field)
    }

    /// Cohomology of the pair `(self, a)` for a face-closed `a`.
    pub fn cohomology_rel<K: Scalar>(
        &self,
        a: &BTreeSet<usize>,
        field: &FieldSpec,
    ) -> Result<GradedDims> {
        if !self.is_face_closed(a) {
            return Err(Error::input("relative cohomology requires a closed subset"));
        }
        let rest: BTreeSet<usize> =
            (0..self.n_simplices()).filter(|id| !a.contains(id)).collect();
        Ok(self.spanned_cohomology::<K>(&rest, field))
    }

    /// Cohomology of the cochain complex spanned by the given cells with the
    /// restricted incidence differential. For a locally closed `set` this is
    /// the compactly supported cohomology of the open part of its closure.
    pub fn spanned_cohomology<K: Scalar>(
        &self,
        set: &BTreeSet<usize>,
        field: &FieldSpec,
    ) -> GradedDims {
        if set.is_empty() {
            return GradedDims::zero();
        }
        debug_assert!(self.is_locally_closed(set), "spanned complex needs d^2 = 0");
        let top = set.iter().map(|&id| self.dim_of(id)).max().unwrap();
        let by_dim: Vec<Vec<usize>> = (0..=top)
            .map(|d| set.iter().copied().filter(|&id| self.dim_of(id) == d).collect())
            .collect();
        let mut ranks = vec![0usize; top + 1];
        for d in 0..top {
            let rows = &by_dim[d + 1];
            let cols = &by_dim[d];
            if rows.is_empty() || cols.is_empty() {
                continue;
            }
            let row_pos: BTreeMap<usize, usize> =
                rows.iter().enumerate().map(|(i, &id)| (id, i)).collect();
            let mut m: Matrix<K> = Matrix::zero(rows.len(), cols.len());
            for (j, &cid) in cols.iter().enumerate() {
                for &co in self.cofaces_codim1(cid) {
                    if let Some(&i) = row_pos.get(&co) {
                        m.set(i, j, K::from_int(self.incidence_sign(cid, co), field));
                    }
                }
            }
            ranks[d] = m.rank();
        }
        let mut map = BTreeMap::new();
        for d in 0..=top {
            let below = if d == 0 { 0 } else { ranks[d - 1] };
            map.insert(d as i64, by_dim[d].len() - ranks[d] - below);
        }
        GradedDims::from_map(&map)
    }

    /// Compactly supported cohomology of a locally closed set.
    pub fn compact_cohomology<K: Scalar>(
        &self,
        set: &BTreeSet<usize>,
        field: &FieldSpec,
    ) -> Result<GradedDims> {
        if !self.is_locally_closed(set) {
            return Err(Error::input("compactly supported cohomology requires a locally closed subset"));
        }
        Ok(self.spanned_cohomology::<K>(set, field))
    }

    /// Ordinary (sheaf) cohomology of a locally closed set: the open part of
    /// its closure deformation retracts onto the full subcomplex of the
    /// barycentric subdivision spanned by barycenters inside the set.
    pub fn open_cohomology<K: Scalar>(
        &self,
        set: &BTreeSet<usize>,
        field: &FieldSpec,
    ) -> Result<GradedDims> {
        if !self.is_locally_closed(set) {
            return Err(Error::input("cohomology of a subset requires a locally closed subset"));
        }
        if set.is_empty() {
            return Ok(GradedDims::zero());
        }
        let closure = self.closure(set);
        let family: Vec<Vec<usize>> =
            closure.iter().map(|&id| self.simplices[id].clone()).collect();
        let sub = SimplicialComplex::from_simplices(self.vertex_bound, &family)?;
        let keep: BTreeSet<usize> =
            set.iter().map(|&id| sub.id_of(&self.simplices[id]).unwrap()).collect();
        let sd = sub.barycentric_subdivision();
        let retract = sd.full_subcomplex(&keep);
        Ok(retract.cohomology::<K>(field))
    }

    /// Cells of the subdivision are strict chains in the face poset, named by
    /// the ids of their members; ids grow along any chain.
    pub fn barycentric_subdivision(&self) -> SimplicialComplex {
        let mut chains: Vec<Vec<usize>> = Vec::new();
        // chains ending at id extend chains ending at a proper face of id
        let mut ending_at: Vec<Vec<Vec<usize>>> = Vec::with_capacity(self.n_simplices());
        for id in 0..self.n_simplices() {
            let mut here: Vec<Vec<usize>> = vec![vec![id]];
            for fid in self.face_ids(id) {
                if fid == id {
                    continue;
                }
                for c in &ending_at[fid] {
                    let mut ext = c.clone();
                    ext.push(id);
                    here.push(ext);
                }
            }
            chains.extend(here.iter().cloned());
            ending_at.push(here);
        }
        SimplicialComplex::from_simplices(self.n_simplices(), &chains)
            .expect("chain family is face-closed")
    }

    /// Full subcomplex on a vertex set.
    pub fn full_subcomplex(&self, keep: &BTreeSet<usize>) -> SimplicialComplex {
        let family: Vec<Vec<usize>> = self
            .simplices
            .iter()
            .filter(|s| s.iter().all(|v| keep.contains(v)))
            .cloned()
            .collect();
        SimplicialComplex::from_simplices(self.vertex_bound, &family)
            .expect("full subcomplex is face-closed")
    }

    /// The link of a simplex, with translation maps back to this complex.
    pub fn link(&self, simplex: &[usize]) -> Result<Link> {
        let s = normalize_simplex(simplex, self.vertex_bound)?;
        let sid = self
            .ids
            .get(&s)
            .copied()
            .ok_or_else(|| Error::input(format!("{} is not a simplex", render_simplex(&s))))?;
        let mut members: Vec<Vec<usize>> = Vec::new();
        for (_, rho) in self.simplices() {
            if rho.iter().any(|v| s.contains(v)) {
                continue;
            }
            let mut join: Vec<usize> = rho.iter().chain(s.iter()).copied().collect();
            join.sort_unstable();
            if self.ids.contains_key(&join) {
                members.push(rho.to_vec());
            }
        }
        let mut vertex_map: Vec<usize> = members
            .iter()
            .flat_map(|r| r.iter().copied())
            .collect::<BTreeSet<usize>>()
            .into_iter()
            .collect();
        vertex_map.sort_unstable();
        let renumber: BTreeMap<usize, usize> =
            vertex_map.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let family: Vec<Vec<usize>> = members
            .iter()
            .map(|r| r.iter().map(|v| renumber[v]).collect())
            .collect();
        let complex = SimplicialComplex::from_simplices(vertex_map.len(), &family)?;
        let mut join_of = vec![0usize; complex.n_simplices()];
        for (lid, rho) in complex.simplices() {
            let mut join: Vec<usize> =
                rho.iter().map(|&v| vertex_map[v]).chain(s.iter().copied()).collect();
            join.sort_unstable();
            join_of[lid] = self.ids[&join];
        }
        Ok(Link { complex, vertex_map, join_of, base: sid })
    }
}

/// A link together with the dictionary back into the ambient complex.
#[derive(Debug, Clone)]
pub struct Link {
    /// The link as a complex in its own right (vertices renumbered).
    pub complex: SimplicialComplex,
    /// Link vertex index to ambient vertex index.
    pub vertex_map: Vec<usize>,
    /// Link simplex id to the ambient id of its join with the base simplex.
    pub join_of: Vec<usize>,
    /// Ambient id of the base simplex.
    pub base: usize,
}

fn normalize_simplex(raw: &[usize], vertex_bound: usize) -> Result<Vec<usize>> {
    if raw.is_empty() {
        return Err(Error::input("empty vertex list is not a simplex"));
    }
    if raw.len() > MAX_FACET_VERTICES {
        return Err(Error::input(format!(
            "simplex with {} vertices exceeds the supported maximum of {}",
            raw.len(),
            MAX_FACET_VERTICES
        )));
    }
    let mut s = raw.to_vec();
    s.sort_unstable();
    s.dedup();
    if s.len() != raw.len() {
        return Err(Error::input(format!(
            "repeated vertex in simplex {}",
            render_simplex(raw)
        )));
    }
    if let Some(&v) = s.last() {
        if v >= vertex_bound {
            return Err(Error::input(format!(
                "vertex {v} out of range: the complex declares {vertex_bound} vertices"
            )));
        }
    }
    Ok(s)
}

/// All nonempty subsets, by bitmask.
fn proper_and_improper_faces(s: &[usize]) -> Vec<Vec<usize>> {
    let n = s.len();
    let mut out = Vec::with_capacity((1usize << n) - 1);
    for mask in 1u32..(1u32 << n) {
        let face: Vec<usize> =
            (0..n).filter(|k| mask & (1 << k) != 0).map(|k| s[k]).collect();
        out.push(face);
    }
    out
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|v| b.binary_search(v).is_ok())
}

pub fn render_simplex(s: &[usize]) -> String {
    let body: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    format!("[{}]", body.join(","))
}

pub fn parse_simplex(text: &str) -> Result<Vec<usize>> {
    serde_json::from_str::<Vec<usize>>(text)
        .map_err(|_| Error::input(format!("cannot parse simplex '{text}'; expected e.g. [0,1,2]")))
}

/// A partition of the cells into connected, locally closed strata, partially
/// ordered by closure containment.
#[derive(Debug, Clone)]
pub struct Stratification {
    strata: Vec<Stratum>,
    stratum_of: Vec<usize>,
    leq: Vec<Vec<bool>>,
}

#[derive(Debug, Clone)]
pub struct Stratum {
    pub name: String,
    pub ids: BTreeSet<usize>,
}

impl Stratification {
    pub fn new(
        complex: &SimplicialComplex,
        strata: Vec<(String, BTreeSet<usize>)>,
    ) -> Result<Stratification> {
        let n = complex.n_simplices();
        let mut stratum_of = vec![usize::MAX; n];
        let mut names = BTreeSet::new();
        for (idx, (name, ids)) in strata.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::input("stratum with empty name"));
            }
            if !names.insert(name.clone()) {
                return Err(Error::input(format!("duplicate stratum name '{name}'")));
            }
            if ids.is_empty() {
                return Err(Error::input(format!("stratum '{name}' is empty")));
            }
            for &id in ids {
                if id >= n {
                    return Err(Error::internal(format!(
                        "stratum '{name}' references simplex id {id} out of range"
                    )));
                }
                if stratum_of[id] != usize::MAX {
                    return Err(Error::input(format!(
                        "simplex {} lies in two strata",
                        complex.render(id)
                    )));
                }
                stratum_of[id] = idx;
            }
        }
        for id in 0..n {
            if stratum_of[id] == usize::MAX {
                return Err(Error::input(format!(
                    "simplex {} is not covered by any stratum",
                    complex.render(id)
                )));
            }
        }
        for (name, ids) in &strata {
            if !complex.is_locally_closed(ids) {
                return Err(Error::input(format!(
                    "stratum '{name}' is not locally closed"
                )));
            }
            if complex.component_count(ids) != 1 {
                return Err(Error::input(format!("stratum '{name}' is not connected")));
            }
        }
        let m = strata.len();
        let closures: Vec<BTreeSet<usize>> =
            strata.iter().map(|(_, ids)| complex.closure(ids)).collect();
        let mut leq = vec![vec![false; m]; m];
        for i in 0..m {
            for j in 0..m {
                leq[i][j] = strata[i].1.iter().all(|id| closures[j].contains(id));
            }
        }
        for i in 0..m {
            for j in 0..m {
                if i != j && leq[i][j] && leq[j][i] {
                    return Err(Error::input(format!(
                        "strata '{}' and '{}' lie in each other's closure",
                        strata[i].0, strata[j].0
                    )));
                }
            }
        }
        let strata = strata
            .into_iter()
            .map(|(name, ids)| Stratum { name, ids })
            .collect();
        Ok(Stratification { strata, stratum_of, leq })
    }

    /// One stratum per cell, named by its vertex list.
    pub fn faces(complex: &SimplicialComplex) -> Stratification {
        let strata: Vec<(String, BTreeSet<usize>)> = complex
            .simplices()
            .map(|(id, _)| (complex.render(id), BTreeSet::from([id])))
            .collect();
        Stratification::new(complex, strata).expect("face strata are locally closed")
    }

    pub fn strata(&self) -> &[Stratum] {
        &self.strata
    }

    pub fn stratum_of(&self, id: usize) -> usize {
        self.stratum_of[id]
    }

    pub fn by_name(&self, name: &str) -> Option<usize> {
        self.strata.iter().position(|s| s.name == name)
    }

    /// Closure order: `i <= j` when stratum `i` lies in the closure of `j`.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq[i][j]
    }

    /// Length (edge count) of the longest strict chain in the closure order.
    pub fn depth(&self) -> usize {
        let m = self.strata.len();
        let mut best = vec![0usize; m];
        // relation is acyclic by the antisymmetry check; iterate to fixpoint
        let mut changed = true;
        while changed {
            changed = false;
            for i in 0..m {
                for j in 0..m {
                    if self.lt(i, j) && best[i] + 1 > best[j] {
                        best[j] = best[i] + 1;
                        changed = true;
                    }
                }
            }
        }
        best.into_iter().max().unwrap_or(0)
    }
}
