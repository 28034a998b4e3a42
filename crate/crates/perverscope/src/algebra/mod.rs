//! Finite-dimensional bound quiver algebras over an exact field.
//!
//! Paths compose left to right: in the product `p·q` the path `p` is traveled
//! first, so `p: u -> v` and `q: v -> w` compose to `p·q: u -> w`. Relations
//! are linear combinations of parallel paths of a common length at least two.
//! The algebra's basis is computed level by level: length-`l` path classes are
//! products (basis class of length `l-1`) · (arrow), reduced against the
//! degree-`l` slice of the relation ideal. The computation terminates exactly
//! when the algebra is finite-dimensional over the path-length grading.

pub mod hw;
pub mod module;
pub mod resolution;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::Matrix;

/// Default bound on basis path length before giving up on termination.
pub const DEFAULT_LENGTH_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub from: usize,
    pub to: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    pub vertex_names: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertex_names: Vec<String>, arrows: Vec<Arrow>) -> Result<Quiver> {
        let n = vertex_names.len();
        let mut seen = BTreeMap::new();
        for (i, name) in vertex_names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::input("empty vertex name"));
            }
            if seen.insert(name.clone(), i).is_some() {
                return Err(Error::input(format!("duplicate vertex name '{name}'")));
            }
        }
        let mut arrow_names = BTreeMap::new();
        for (i, a) in arrows.iter().enumerate() {
            if a.name.is_empty() {
                return Err(Error::input("empty arrow name"));
            }
            if arrow_names.insert(a.name.clone(), i).is_some() {
                return Err(Error::input(format!("duplicate arrow name '{}'", a.name)));
            }
            if a.from >= n || a.to >= n {
                return Err(Error::input(format!(
                    "arrow '{}' references a vertex out of range",
                    a.name
                )));
            }
        }
        Ok(Quiver { vertex_names, arrows })
    }

    pub fn n_vertices(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn vertex_id(&self, name: &str) -> Option<usize> {
        self.vertex_names.iter().position(|v| v == name)
    }

    pub fn arrow_id(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }
}

/// One summand of a relation: a scalar times a composable arrow sequence.
#[derive(Debug, Clone)]
pub struct RelationTerm<K> {
    pub coeff: K,
    pub path: Vec<usize>,
}

/// A linear combination of parallel paths declared to vanish.
#[derive(Debug, Clone)]
pub struct Relation<K> {
    pub from: usize,
    pub to: usize,
    pub length: usize,
    pub terms: Vec<RelationTerm<K>>,
}

/// A basis path class: the lexicographically surviving representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisPath {
    pub from: usize,
    pub to: usize,
    pub repr: Vec<usize>,
}

impl BasisPath {
    pub fn length(&self) -> usize {
        self.repr.len()
    }
}

/// A bound quiver algebra with a computed path-class basis.
#[derive(Debug, Clone)]
pub struct Algebra<K: Scalar> {
    quiver: Quiver,
    relations: Vec<Relation<K>>,
    field: FieldSpec,
    basis: Vec<BasisPath>,
    trivial: Vec<usize>,
    by_level: Vec<Vec<usize>>,
    reduce: BTreeMap<(usize, usize), Vec<(usize, K)>>,
}

impl<K: Scalar> Algebra<K> {
    /// Builds the algebra, computing the path-class basis level by level.
    pub fn new(
        quiver: Quiver,
        raw_relations: Vec<Vec<(K, Vec<usize>)>>,
        field: &FieldSpec,
    ) -> Result<Algebra<K>> {
        Algebra::with_cap(quiver, raw_relations, field, DEFAULT_LENGTH_CAP)
    }

    pub fn with_cap(
        quiver: Quiver,
        raw_relations: Vec<Vec<(K, Vec<usize>)>>,
        field: &FieldSpec,
        cap: usize,
    ) -> Result<Algebra<K>> {
        let relations = validate_relations(&quiver, raw_relations)?;
        let mut alg = Algebra {
            quiver,
            relations,
            field: field.clone(),
            basis: Vec::new(),
            trivial: Vec::new(),
            by_level: Vec::new(),
            reduce: BTreeMap::new(),
        };
        alg.compute_basis(cap)?;
        Ok(alg)
    }

    fn compute_basis(&mut self, cap: usize) -> Result<()> {
        let n = self.quiver.n_vertices();
        for v in 0..n {
            self.trivial.push(self.basis.len());
            self.basis.push(BasisPath { from: v, to: v, repr: Vec::new() });
        }
        self.by_level.push((0..n).collect());

        for level in 1.. {
            if level > cap {
                return Err(Error::input(format!(
                    "algebra not verified finite-dimensional: path classes survive past length {cap}"
                )));
            }
            // candidates: (basis class of length level-1) · arrow
            let prev = self.by_level[level - 1].clone();
            let mut candidates: Vec<(usize, usize)> = Vec::new();
            for &b in &prev {
                let at = self.basis[b].to;
                for (aid, arrow) in self.quiver.arrows.iter().enumerate() {
                    if arrow.from == at {
                        candidates.push((b, aid));
                    }
                }
            }
            if candidates.is_empty() {
                break;
            }
            let cand_pos: BTreeMap<(usize, usize), usize> =
                candidates.iter().enumerate().map(|(i, &c)| (c, i)).collect();

            // the level slice of the relation ideal, spanned by b·r over basis b
            let mut blocks: BTreeMap<(usize, usize), Vec<Vec<K>>> = BTreeMap::new();
            for r in &self.relations {
                if r.length > level {
                    continue;
                }
                let shift = level - r.length;
                for &b in &self.by_level[shift] {
                    if self.basis[b].to != r.from {
                        continue;
                    }
                    let mut row = vec![K::zero(); candidates.len()];
                    let mut nonzero = false;
                    for term in &r.terms {
                        let mut path = self.basis[b].repr.clone();
                        path.extend_from_slice(&term.path);
                        let last = *path.last().unwrap();
                        let combo = self.reduce_arrows_checked(&path[..path.len() - 1]);
                        for (pb, c) in combo {
                            let idx = cand_pos[&(pb, last)];
                            let add = c * term.coeff.clone();
                            row[idx] = row[idx].clone() + add;
                            nonzero = true;
                        }
                    }
                    if nonzero {
                        let key = (self.basis[b].from, r.to);
                        blocks.entry(key).or_default().push(row);
                    }
                }
            }

            // reduce each (source, target) block independently
            let mut is_basis = vec![true; candidates.len()];
            let mut reductions: BTreeMap<usize, Vec<(usize, K)>> = BTreeMap::new();
            for ((from, to), rows) in blocks {
                let cols: Vec<usize> = candidates
                    .iter()
                    .enumerate()
                    .filter(|(_, &(b, a))| {
                        self.basis[b].from == from && self.quiver.arrows[a].to == to
                    })
                    .map(|(i, _)| i)
                    .collect();
                let data: Vec<Vec<K>> = rows
                    .iter()
                    .map(|row| cols.iter().map(|&i| row[i].clone()).collect())
                    .collect();
                let mut m = Matrix::from_rows(data)?;
                let pivots = m.rref();
                for (r, &pc) in pivots.iter().enumerate() {
                    let cand = cols[pc];
                    is_basis[cand] = false;
                    // pivot candidate = -(sum of non-pivot entries)
                    let mut combo: Vec<(usize, K)> = Vec::new();
                    for (j, &cj) in cols.iter().enumerate() {
                        if j == pc {
                            continue;
                        }
                        let entry = m.at(r, j).clone();
                        if !entry.is_zero() {
                            combo.push((cj, -entry));
                        }
                    }
                    reductions.insert(cand, combo);
                }
            }

            // assign basis ids to surviving candidates, in candidate order
            let mut level_ids = Vec::new();
            let mut id_of_candidate: BTreeMap<usize, usize> = BTreeMap::new();
            for (i, &(b, a)) in candidates.iter().enumerate() {
                if is_basis[i] {
                    let mut repr = self.basis[b].repr.clone();
                    repr.push(a);
                    let id = self.basis.len();
                    self.basis.push(BasisPath {
                        from: self.basis[b].from,
                        to: self.quiver.arrows[a].to,
                        repr,
                    });
                    level_ids.push(id);
                    id_of_candidate.insert(i, id);
                }
            }
            // store the reduction table in terms of basis ids
            for (i, &(b, a)) in candidates.iter().enumerate() {
                let combo = if is_basis[i] {
                    vec![(id_of_candidate[&i], K::one())]
                } else {
                    let mut out: Vec<(usize, K)> = reductions[&i]
                        .iter()
                        .map(|(cand, c)| (id_of_candidate[cand], c.clone()))
                        .collect();
                    out.sort_by_key(|&(id, _)| id);
                    out
                };
                self.reduce.insert((b, a), combo);
            }
            if level_ids.is_empty() {
                break;
            }
            self.by_level.push(level_ids);
        }
        Ok(())
    }

    fn reduce_arrows_checked(&self, arrows: &[usize]) -> Vec<(usize, K)> {
        // internal variant: arrows are known composable
        let from = if arrows.is_empty() {
            unreachable!("prefix of a length-1 candidate is the trivial path")
        } else {
            self.quiver.arrows[arrows[0]].from
        };
        let mut combo: Vec<(usize, K)> = vec![(self.trivial[from], K::one())];
        for &a in arrows {
            combo = self.step(combo, a);
        }
        combo
    }

    fn step(&self, combo: Vec<(usize, K)>, arrow: usize) -> Vec<(usize, K)> {
        let mut acc: BTreeMap<usize, K> = BTreeMap::new();
        for (b, c) in combo {
            if let Some(expansion) = self.reduce.get(&(b, arrow)) {
                for (id, coeff) in expansion {
                    let add = coeff.clone() * c.clone();
                    let slot = acc.entry(*id).or_insert_with(K::zero);
                    *slot = slot.clone() + add;
                }
            }
            // absent table entry means the product lies beyond the last
            // nonzero level, hence is zero
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    /// Expresses a composable arrow sequence in the path-class basis.
    pub fn reduce_path(&self, arrows: &[usize], start: usize) -> Result<Vec<(usize, K)>> {
        let mut at = start;
        for &a in arrows {
            let arrow = self
                .quiver
                .arrows
                .get(a)
                .ok_or_else(|| Error::input(format!("arrow id {a} out of range")))?;
            if arrow.from != at {
                return Err(Error::input(format!(
                    "path is not composable at arrow '{}'",
                    arrow.name
                )));
            }
            at = arrow.to;
        }
        let mut combo: Vec<(usize, K)> = vec![(self.trivial[start], K::one())];
        for &a in arrows {
            combo = self.step(combo, a);
        }
        Ok(combo)
    }

    /// Right multiplication of a basis class by an arrow, in the basis.
    /// Empty when the product is zero or not composable.
    pub fn class_times_arrow(&self, class: usize, arrow: usize) -> Vec<(usize, K)> {
        if self.basis[class].to != self.quiver.arrows[arrow].from {
            return Vec::new();
        }
        self.reduce.get(&(class, arrow)).cloned().unwrap_or_default()
    }

    /// Product of two basis classes, `x` traveled first; zero if not composable.
    pub fn multiply(&self, x: usize, y: usize) -> Vec<(usize, K)> {
        if self.basis[x].to != self.basis[y].from {
            return Vec::new();
        }
        let mut combo = vec![(x, K::one())];
        for &a in &self.basis[y].repr.clone() {
            combo = self.step(combo, a);
        }
        combo
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation<K>] {
        &self.relations
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn n_vertices(&self) -> usize {
        self.quiver.n_vertices()
    }

    pub fn basis(&self) -> &[BasisPath] {
        &self.basis
    }

    pub fn basis_path(&self, id: usize) -> &BasisPath {
        &self.basis[id]
    }

    pub fn trivial_path(&self, v: usize) -> usize {
        self.trivial[v]
    }

    /// Basis ids of classes from `u` to `v`, ascending.
    pub fn paths_between(&self, u: usize, v: usize) -> Vec<usize> {
        (0..self.basis.len())
            .filter(|&id| self.basis[id].from == u && self.basis[id].to == v)
            .collect()
    }

    /// The algebra with all arrows reversed; relation paths reverse too.
    pub fn opposite(&self) -> Result<Algebra<K>> {
        let arrows = self
            .quiver
            .arrows
            .iter()
            .map(|a| Arrow { name: a.name.clone(), from: a.to, to: a.from })
            .collect();
        let quiver = Quiver::new(self.quiver.vertex_names.clone(), arrows)?;
        let relations = self
            .relations
            .iter()
            .map(|r| {
                r.terms
                    .iter()
                    .map(|t| {
                        let mut path = t.path.clone();
                        path.reverse();
                        (t.coeff.clone(), path)
                    })
                    .collect()
            })
            .collect();
        Algebra::new(quiver, relations, &self.field)
    }
}

fn validate_relations<K: Scalar>(
    quiver: &Quiver,
    raw: Vec<Vec<(K, Vec<usize>)>>,
) -> Result<Vec<Relation<K>>> {
    let mut out = Vec::new();
    for (ri, terms) in raw.into_iter().enumerate() {
        let mut norm: Vec<RelationTerm<K>> = Vec::new();
        let mut signature: Option<(usize, usize, usize)> = None;
        for (coeff, path) in terms {
            if coeff.is_zero() {
                continue;
            }
            if path.len() < 2 {
                return Err(Error::input(format!(
                    "relation {ri}: paths must have length at least 2"
                )));
            }
            let mut at: Option<usize> = None;
            for &a in &path {
                let arrow = quiver
                    .arrows
                    .get(a)
                    .ok_or_else(|| Error::input(format!("relation {ri}: bad arrow id {a}")))?;
                if let Some(v) = at {
                    if arrow.from != v {
                        return Err(Error::input(format!(
                            "relation {ri}: path not composable at arrow '{}'",
                            arrow.name
                        )));
                    }
                }
                at = Some(arrow.to);
            }
            let from = quiver.arrows[path[0]].from;
            let to = at.unwrap();
            let sig = (from, to, path.len());
            match signature {
                None => signature = Some(sig),
                Some(s) if s == sig => {}
                Some((sf, st, sl)) => {
                    if (sf, st) != (from, to) {
                        return Err(Error::input(format!(
                            "relation {ri}: paths do not share source and target"
                        )));
                    }
                    if sl != path.len() {
                        return Err(Error::input(format!(
                            "relation {ri}: paths of different lengths; \
                             the basis computation requires length-homogeneous relations"
                        )));
                    }
                }
            }
            norm.push(RelationTerm { coeff, path });
        }
        if norm.is_empty() {
            continue;
        }
        let (from, to, length) = signature.unwrap();
        out.push(Relation { from, to, length, terms: norm });
    }
    Ok(out)
}

#[cfg(test)]
pub(crate) mod testkit {
    use super::*;
    use crate::field::Rat;

    fn rat(n: i64) -> Rat {
        Rat::from_int(n, &FieldSpec::Rationals)
    }

    pub(crate) fn a2_algebra() -> Algebra<Rat> {
        let q = Quiver::new(
            vec!["0".into(), "1".into()],
            vec![Arrow { name: "a".into(), from: 0, to: 1 }],
        )
        .unwrap();
        Algebra::new(q, vec![], &FieldSpec::Rationals).unwrap()
    }

    pub(crate) fn two_strata_algebra() -> Algebra<Rat> {
        let q = Quiver::new(
            vec!["1".into(), "2".into()],
            vec![
                Arrow { name: "a".into(), from: 0, to: 1 },
                Arrow { name: "b".into(), from: 1, to: 0 },
            ],
        )
        .unwrap();
        let rels = vec![
            vec![(rat(1), vec![0, 1])], // ab
            vec![(rat(1), vec![1, 0])], // ba
        ];
        Algebra::new(q, rels, &FieldSpec::Rationals).unwrap()
    }

    pub(crate) fn cp2_algebra() -> Algebra<Rat> {
        // 0 <-> 1 <-> 2 with alpha, beta, gamma, delta
        let q = Quiver::new(
            vec!["0".into(), "1".into(), "2".into()],
            vec![
                Arrow { name: "alpha".into(), from: 0, to: 1 },
                Arrow { name: "beta".into(), from: 1, to: 0 },
                Arrow { name: "gamma".into(), from: 1, to: 2 },
                Arrow { name: "delta".into(), from: 2, to: 1 },
            ],
        )
        .unwrap();
        let rels = vec![
            vec![(rat(1), vec![0, 2])],                      // alpha gamma
            vec![(rat(1), vec![3, 1])],                      // delta beta
            vec![(rat(1), vec![3, 2])],                      // delta gamma
            vec![(rat(1), vec![1, 0]), (rat(-1), vec![2, 3])], // beta alpha - gamma delta
        ];
        Algebra::new(q, rels, &FieldSpec::Rationals).unwrap()
    }

    /// Oriented cycle 0' <- 1' <- 2' <- 0' with a length-4 relation out of 1'
    /// and a length-3 loop relation at 2'. Hom-spaces here travel arrows in
    /// the written order, so this orientation is the one whose module
    /// category carries the expected Ext pattern between the simples.
    pub(crate) fn tilted_algebra() -> Algebra<Rat> {
        let q = Quiver::new(
            vec!["0'".into(), "1'".into(), "2'".into()],
            vec![
                Arrow { name: "alpha'".into(), from: 1, to: 0 },
                Arrow { name: "beta'".into(), from: 2, to: 1 },
                Arrow { name: "gamma'".into(), from: 0, to: 2 },
            ],
        )
        .unwrap();
        let rels = vec![
            vec![(rat(1), vec![0, 2, 1, 0])], // alpha' gamma' beta' alpha'
            vec![(rat(1), vec![1, 0, 2])],    // beta' alpha' gamma'
        ];
        Algebra::new(q, rels, &FieldSpec::Rationals).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use num_traits::Zero;

    use super::testkit::*;
    use super::*;
    use crate::field::Rat;

    fn rat(n: i64) -> Rat {
        Rat::from_int(n, &FieldSpec::Rationals)
    }

    #[test]
    fn a2_dimension_three() {
        let a = a2_algebra();
        assert_eq!(a.dim(), 3);
        assert_eq!(a.paths_between(0, 1).len(), 1);
        assert_eq!(a.paths_between(1, 0).len(), 0);
    }

    #[test]
    fn two_strata_dimension_four() {
        let a = two_strata_algebra();
        assert_eq!(a.dim(), 4);
        // ab and ba both vanish
        assert!(a.reduce_path(&[0, 1], 0).unwrap().is_empty());
        assert!(a.reduce_path(&[1, 0], 1).unwrap().is_empty());
    }

    #[test]
    fn cp2_basis_matches_path_enumeration() {
        let a = cp2_algebra();
        assert_eq!(a.dim(), 9);
        // loops at 0: e0 and alpha·beta
        assert_eq!(a.paths_between(0, 0).len(), 2);
        // loops at 1: e1 and beta·alpha (= gamma·delta)
        assert_eq!(a.paths_between(1, 1).len(), 2);
        // loops at 2: e2 only, since delta·gamma = 0
        assert_eq!(a.paths_between(2, 2).len(), 1);
        // beta·alpha and gamma·delta reduce to the same class
        let ba = a.reduce_path(&[1, 0], 1).unwrap();
        let gd = a.reduce_path(&[2, 3], 1).unwrap();
        assert_eq!(ba, gd);
        assert_eq!(ba.len(), 1);
        // alpha·gamma is dead
        assert!(a.reduce_path(&[0, 2], 0).unwrap().is_empty());
        // alpha·beta·alpha = alpha·gamma·delta = 0
        assert!(a.reduce_path(&[0, 1, 0], 0).unwrap().is_empty());
    }

    #[test]
    fn multiplication_is_associative_on_cp2() {
        let a = cp2_algebra();
        for x in 0..a.dim() {
            for y in 0..a.dim() {
                for z in 0..a.dim() {
                    // (xy)z = x(yz) in the basis
                    let mut lhs: BTreeMap<usize, Rat> = BTreeMap::new();
                    for (p, c) in a.multiply(x, y) {
                        for (q, d) in a.multiply(p, z) {
                            let slot = lhs.entry(q).or_insert_with(Rat::zero);
                            *slot = slot.clone() + c.clone() * d;
                        }
                    }
                    let mut rhs: BTreeMap<usize, Rat> = BTreeMap::new();
                    for (p, c) in a.multiply(y, z) {
                        for (q, d) in a.multiply(x, p) {
                            let slot = rhs.entry(q).or_insert_with(Rat::zero);
                            *slot = slot.clone() + c.clone() * d;
                        }
                    }
                    lhs.retain(|_, c| !c.is_zero());
                    rhs.retain(|_, c| !c.is_zero());
                    assert_eq!(lhs, rhs, "associativity fails at ({x},{y},{z})");
                }
            }
        }
    }

    #[test]
    fn tilted_algebra_dimension_eleven() {
        let a = tilted_algebra();
        assert_eq!(a.dim(), 11);
        // loops at 0': the trivial path and the full cycle gamma'beta'alpha'
        assert_eq!(a.paths_between(0, 0).len(), 2);
        // only gamma'beta' survives from 0' to 1'; the loop relation at 2'
        // kills every longer path
        assert_eq!(a.paths_between(0, 1).len(), 1);
        // the length-4 relation truncates the loops at 1'
        assert_eq!(a.paths_between(1, 1).len(), 2);
        assert_eq!(a.paths_between(2, 2).len(), 1);
    }

    #[test]
    fn infinite_dimensional_algebra_is_rejected() {
        // a loop with no relations grows forever
        let q = Quiver::new(
            vec!["0".into()],
            vec![Arrow { name: "x".into(), from: 0, to: 0 }],
        )
        .unwrap();
        let err = Algebra::<Rat>::with_cap(q, vec![], &FieldSpec::Rationals, 8).unwrap_err();
        assert!(err.to_string().contains("not verified finite-dimensional"));
    }

    #[test]
    fn opposite_algebra_has_equal_dimension() {
        let a = cp2_algebra();
        let op = a.opposite().unwrap();
        assert_eq!(op.dim(), a.dim());
        assert_eq!(op.paths_between(0, 0).len(), 2);
        assert_eq!(op.paths_between(2, 2).len(), 1);
    }

    #[test]
    fn relation_validation_rejects_bad_input() {
        let q = Quiver::new(
            vec!["0".into(), "1".into()],
            vec![Arrow { name: "a".into(), from: 0, to: 1 }],
        )
        .unwrap();
        // length-1 relation
        let err = Algebra::new(
            q.clone(),
            vec![vec![(rat(1), vec![0])]],
            &FieldSpec::Rationals,
        )
        .unwrap_err();
        assert!(err.to_string().contains("length at least 2"));
        // non-composable path
        let err =
            Algebra::new(q, vec![vec![(rat(1), vec![0, 0])]], &FieldSpec::Rationals).unwrap_err();
        assert!(err.to_string().contains("not composable"));
    }
}
