//! Bound quiver algebras `kQ/I` with the ideal given by relations and a
//! nilpotency bound `N`. The algebra computed is `kQ/(I + R^N)`, and it is
//! only built when every path of length `N` already lies in `I + R^{N+1}`,
//! `R` being the arrow ideal.
//!
//! Products follow path concatenation: `x · y` is "first `x`, then `y`".
//! Relation paths are written in traversal order, so for arrows
//! `a: 1 → 2` and `b: 2 → 3` the composite path is `["a", "b"]`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, Scalar};

/// Paths considered while building an algebra before giving up.
pub const MAX_PATHS: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    /// Arrows are `(name, source label, target label)`.
    pub fn new<S: AsRef<str>>(vertices: &[S], arrows: &[(S, S, S)]) -> Result<Self> {
        let vertices: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in vertices.iter().enumerate() {
            if v.is_empty() {
                return Err(Error::invalid("empty vertex label"));
            }
            if vertices[..i].contains(v) {
                return Err(Error::invalid(format!("duplicate vertex label {v}")));
            }
        }
        let lookup = |label: &str| {
            vertices
                .iter()
                .position(|v| v == label)
                .ok_or_else(|| Error::invalid(format!("unknown vertex {label}")))
        };
        let mut out = Vec::with_capacity(arrows.len());
        for (name, s, t) in arrows {
            let name = name.as_ref().to_string();
            if name.is_empty() {
                return Err(Error::invalid("empty arrow name"));
            }
            if out.iter().any(|a: &Arrow| a.name == name) {
                return Err(Error::invalid(format!("duplicate arrow name {name}")));
            }
            out.push(Arrow { name, source: lookup(s.as_ref())?, target: lookup(t.as_ref())? });
        }
        Ok(Quiver { vertices, arrows: out })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Same vertices, every arrow reversed under the same name.
    pub fn opposite(&self) -> Quiver {
        let arrows = self
            .arrows
            .iter()
            .map(|a| Arrow { name: a.name.clone(), source: a.target, target: a.source })
            .collect();
        Quiver { vertices: self.vertices.clone(), arrows }
    }
}

/// A path given by its start vertex and arrow indices in traversal order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path { source: v, target: v, arrows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    fn extend(&self, arrow: usize, q: &Quiver) -> Option<Path> {
        let a = &q.arrows[arrow];
        (a.source == self.target).then(|| {
            let mut arrows = self.arrows.clone();
            arrows.push(arrow);
            Path { source: self.source, target: a.target, arrows }
        })
    }

    fn concat(&self, other: &Path) -> Option<Path> {
        (self.target == other.source).then(|| {
            let mut arrows = self.arrows.clone();
            arrows.extend_from_slice(&other.arrows);
            Path { source: self.source, target: other.target, arrows }
        })
    }

    fn reversed(&self) -> Path {
        Path { source: self.target, target: self.source, arrows: self.arrows.iter().rev().copied().collect() }
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e{}", q.vertices[self.source])
        } else {
            self.arrows.iter().map(|&a| q.arrows[a].name.as_str()).collect::<Vec<_>>().join("*")
        }
    }

    /// Length-lexicographic order by arrow names; trivial paths by vertex index.
    pub fn cmp_in(&self, other: &Path, q: &Quiver) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            if self.is_trivial() {
                self.source.cmp(&other.source)
            } else {
                let names = |p: &Path| p.arrows.iter().map(|&a| q.arrows[a].name.clone()).collect::<Vec<_>>();
                names(self).cmp(&names(other))
            }
        })
    }
}

/// A linear combination of parallel paths of length at least two.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RelationElement {
    pub terms: Vec<(i64, Vec<String>)>,
}

impl RelationElement {
    pub fn new(terms: Vec<(i64, Vec<String>)>) -> Self {
        RelationElement { terms }
    }

    /// A single path relation such as `["a", "b"]`.
    pub fn monomial<S: AsRef<str>>(path: &[S]) -> Self {
        RelationElement { terms: vec![(1, path.iter().map(|s| s.as_ref().to_string()).collect())] }
    }

    fn resolve(&self, field: Field, q: &Quiver) -> Result<Vec<(Scalar, Path)>> {
        if self.terms.is_empty() {
            return Err(Error::invalid("relation without terms"));
        }
        let mut out = Vec::new();
        for (c, names) in &self.terms {
            if names.len() < 2 {
                return Err(Error::invalid(format!("relation path {names:?} has length below 2")));
            }
            let mut idx = Vec::with_capacity(names.len());
            for n in names {
                idx.push(q.arrow_index(n).ok_or_else(|| Error::invalid(format!("unknown arrow {n}")))?);
            }
            let mut path = Path::trivial(q.arrows[idx[0]].source);
            for &a in &idx {
                path = path
                    .extend(a, q)
                    .ok_or_else(|| Error::invalid(format!("relation path {names:?} is not composable")))?;
            }
            out.push((field.reduce(*c), path));
        }
        let (s, t) = (out[0].1.source, out[0].1.target);
        if out.iter().any(|(_, p)| p.source != s || p.target != t) {
            return Err(Error::invalid("relation paths are not parallel"));
        }
        Ok(out)
    }
}

/// One side (the algebra or its opposite) of a bound quiver algebra.
#[derive(Debug)]
struct AlgebraData {
    field: Field,
    quiver: Quiver,
    relations: Vec<RelationElement>,
    nilpotency_bound: usize,
    basis: Vec<Path>,
    basis_index: HashMap<Path, usize>,
    /// Normal forms of every path of length below the bound.
    reduction: HashMap<Path, Vec<Scalar>>,
    /// `products[i * n + j]` = coordinates of `b_i · b_j`.
    products: Vec<Vec<Scalar>>,
}

#[derive(Debug)]
struct AlgebraPair {
    sides: [AlgebraData; 2],
}

/// Budgets for the exhaustive searches run on behalf of an algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of candidates scanned by any single exhaustive search.
    pub search_cap: u64,
    /// Maximum length of a projective resolution before giving up.
    pub resolution_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { search_cap: 1 << 20, resolution_cap: 32 }
    }
}

/// A finite-dimensional algebra `kQ/I` over `F_p`.
///
/// Cheap to clone. The opposite algebra shares storage, so
/// `a.opposite().opposite() == a`. Equality ignores [`Limits`].
#[derive(Clone)]
pub struct BoundQuiverAlgebra {
    inner: Arc<AlgebraPair>,
    side: usize,
    limits: Limits,
}

impl fmt::Debug for BoundQuiverAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.data();
        f.debug_struct("BoundQuiverAlgebra")
            .field("p", &d.field.p())
            .field("vertices", &d.quiver.vertices)
            .field("arrows", &d.quiver.arrows.len())
            .field("dim", &d.basis.len())
            .field("opposite", &(self.side == 1))
            .finish()
    }
}

impl PartialEq for BoundQuiverAlgebra {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.inner, &other.inner) {
            return self.side == other.side;
        }
        let (a, b) = (self.data(), other.data());
        a.field == b.field
            && a.quiver == b.quiver
            && a.nilpotency_bound == b.nilpotency_bound
            && a.basis == b.basis
            && a.reduction == b.reduction
    }
}

impl Eq for BoundQuiverAlgebra {}

impl BoundQuiverAlgebra {
    pub fn new(field: Field, quiver: Quiver, relations: Vec<RelationElement>, nilpotency_bound: usize) -> Result<Self> {
        if nilpotency_bound == 0 {
            return Err(Error::invalid("nilpotency bound must be at least 1"));
        }
        let fwd = AlgebraData::build(field, quiver.clone(), relations.clone(), nilpotency_bound)?;
        let op_rels = relations
            .iter()
            .map(|r| RelationElement {
                terms: r.terms.iter().map(|(c, p)| (*c, p.iter().rev().cloned().collect())).collect(),
            })
            .collect();
        let op = AlgebraData::build(field, quiver.opposite(), op_rels, nilpotency_bound)?;
        Ok(BoundQuiverAlgebra { inner: Arc::new(AlgebraPair { sides: [fwd, op] }), side: 0, limits: Limits::default() })
    }

    pub fn with_limits(&self, limits: Limits) -> BoundQuiverAlgebra {
        BoundQuiverAlgebra { limits, ..self.clone() }
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    fn data(&self) -> &AlgebraData {
        &self.inner.sides[self.side]
    }

    pub fn opposite(&self) -> BoundQuiverAlgebra {
        BoundQuiverAlgebra { inner: self.inner.clone(), side: 1 - self.side, limits: self.limits }
    }

    pub fn is_opposite_side(&self) -> bool {
        self.side == 1
    }

    pub fn field(&self) -> Field {
        self.data().field
    }

    pub fn quiver(&self) -> &Quiver {
        &self.data().quiver
    }

    pub fn relations(&self) -> &[RelationElement] {
        &self.data().relations
    }

    pub fn nilpotency_bound(&self) -> usize {
        self.data().nilpotency_bound
    }

    pub fn num_vertices(&self) -> usize {
        self.data().quiver.num_vertices()
    }

    pub fn dim(&self) -> usize {
        self.data().basis.len()
    }

    pub fn path_basis(&self) -> &[Path] {
        &self.data().basis
    }

    pub fn basis_labels(&self) -> Vec<String> {
        self.data().basis.iter().map(|p| p.display(&self.data().quiver)).collect()
    }

    pub fn basis_index(&self, p: &Path) -> Option<usize> {
        self.data().basis_index.get(p).copied()
    }

    /// Basis indices of residue paths from `v` to `w`, in basis order.
    pub fn paths_between(&self, v: usize, w: usize) -> Vec<usize> {
        let d = self.data();
        (0..d.basis.len()).filter(|&i| d.basis[i].source == v && d.basis[i].target == w).collect()
    }

    /// Basis indices of residue paths starting at `v`.
    pub fn paths_from(&self, v: usize) -> Vec<usize> {
        let d = self.data();
        (0..d.basis.len()).filter(|&i| d.basis[i].source == v).collect()
    }

    /// Coordinates of an arbitrary path (zero when the path lies in the ideal).
    pub fn path_coords(&self, p: &Path) -> Vec<Scalar> {
        let d = self.data();
        if p.len() >= d.nilpotency_bound {
            return vec![0; d.basis.len()];
        }
        d.reduction[p].clone()
    }

    pub fn unit(&self) -> Vec<Scalar> {
        let mut u = vec![0; self.dim()];
        for v in 0..self.num_vertices() {
            u[self.data().basis_index[&Path::trivial(v)]] = 1;
        }
        u
    }

    pub fn idempotent(&self, v: usize) -> Vec<Scalar> {
        let mut u = vec![0; self.dim()];
        u[self.data().basis_index[&Path::trivial(v)]] = 1;
        u
    }

    /// Coordinates of `b_i · b_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        &self.data().products[i * self.dim() + j]
    }

    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        let n = self.dim();
        if x.len() != n || y.len() != n {
            return Err(Error::DimensionMismatch(format!("algebra elements must have {n} coordinates")));
        }
        let f = self.field();
        let mut out = vec![0; n];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let c = f.mul(xi, yj);
                for (o, &t) in out.iter_mut().zip(self.basis_product(i, j)) {
                    *o = f.add(*o, f.mul(c, t));
                }
            }
        }
        Ok(out)
    }

    /// Matrix of right multiplication by a path, restricted to `e_v Λ e_{s(p)} → e_v Λ e_{t(p)}`.
    pub fn right_action(&self, v: usize, path: &Path) -> Matrix {
        let from = self.paths_between(v, path.source);
        let to = self.paths_between(v, path.target);
        let f = self.field();
        let pi = self.path_coords(path);
        let mut m = Matrix::zeros(f, to.len(), from.len());
        for (c, &i) in from.iter().enumerate() {
            let prod = self.multiply(&unit_vec(self.dim(), i), &pi).expect("coordinates have algebra dimension");
            for (r, &t) in to.iter().enumerate() {
                m.set(r, c, prod[t]);
            }
        }
        m
    }

    /// The path of the opposite algebra corresponding to `p`.
    pub fn opposite_path(&self, p: &Path) -> Path {
        p.reversed()
    }

    /// Resolved relations: coefficients in the field and index paths.
    pub fn relation_paths(&self) -> Vec<Vec<(Scalar, Path)>> {
        let d = self.data();
        d.relations.iter().map(|r| r.resolve(d.field, &d.quiver).expect("validated at build time")).collect()
    }

    pub fn arrow_path(&self, a: usize) -> Path {
        let arrow = &self.quiver().arrows[a];
        Path { source: arrow.source, target: arrow.target, arrows: vec![a] }
    }
}

pub(crate) fn unit_vec(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

impl AlgebraData {
    fn build(field: Field, quiver: Quiver, relations: Vec<RelationElement>, bound: usize) -> Result<Self> {
        let rels: Vec<Vec<(Scalar, Path)>> =
            relations.iter().map(|r| r.resolve(field, &quiver)).collect::<Result<_>>()?;

        // All paths of length <= bound, grouped by length.
        let mut by_len: Vec<Vec<Path>> = vec![(0..quiver.num_vertices()).map(Path::trivial).collect()];
        let mut total = by_len[0].len();
        for _ in 0..bound {
            let mut next = Vec::new();
            for p in by_len.last().expect("non-empty") {
                for a in 0..quiver.arrows.len() {
                    if let Some(q) = p.extend(a, &quiver) {
                        next.push(q);
                    }
                }
            }
            total += next.len();
            if total > MAX_PATHS {
                return Err(Error::cap(format!("more than {MAX_PATHS} paths of length at most {bound}")));
            }
            by_len.push(next);
        }
        let mut all: Vec<Path> = by_len.into_iter().flatten().collect();
        all.sort_by(|a, b| b.cmp_in(a, &quiver));
        let col: HashMap<Path, usize> = all.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();

        // Spanning set u·r·w of the ideal modulo paths longer than the bound.
        let mut gens: Vec<Vec<Scalar>> = Vec::new();
        for r in &rels {
            let min_len = r.iter().map(|(_, p)| p.len()).min().expect("non-empty");
            if min_len > bound {
                continue;
            }
            let (s, t) = (r[0].1.source, r[0].1.target);
            let slack = bound - min_len;
            let lefts: Vec<&Path> = all.iter().filter(|u| u.target == s && u.len() <= slack).collect();
            let rights: Vec<&Path> = all.iter().filter(|w| w.source == t && w.len() <= slack).collect();
            for u in &lefts {
                for w in &rights {
                    if u.len() + w.len() > slack {
                        continue;
                    }
                    let mut row = vec![0; all.len()];
                    for (c, p) in r {
                        let full = u.concat(p).and_then(|x| x.concat(w)).expect("composable");
                        if full.len() <= bound {
                            let j = col[&full];
                            row[j] = field.add(row[j], *c);
                        }
                    }
                    if row.iter().any(|&x| x != 0) {
                        gens.push(row);
                    }
                }
            }
        }
        let ideal = Matrix::from_vec(field, gens.len(), all.len(), gens.concat());
        let rref = ideal.rref();
        let pivot_row: HashMap<usize, usize> = rref.pivots.iter().enumerate().map(|(i, &c)| (c, i)).collect();

        // Admissibility: each path of length `bound` must itself lie in the ideal.
        let mut witnesses: Vec<&Path> = all
            .iter()
            .filter(|p| p.len() == bound)
            .filter(|p| {
                let j = col[*p];
                match pivot_row.get(&j) {
                    None => true,
                    Some(&i) => rref.reduced.row(i).iter().enumerate().any(|(k, &x)| x != 0 && k != j),
                }
            })
            .collect();
        witnesses.sort_by(|a, b| a.cmp_in(b, &quiver));
        if let Some(w) = witnesses.first() {
            return Err(Error::NotAdmissible { witness: w.display(&quiver) });
        }

        let mut basis: Vec<Path> =
            all.iter().filter(|p| p.len() < bound && !pivot_row.contains_key(&col[*p])).cloned().collect();
        basis.sort_by(|a, b| a.cmp_in(b, &quiver));
        let basis_index: HashMap<Path, usize> = basis.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        if (0..quiver.num_vertices()).any(|v| !basis_index.contains_key(&Path::trivial(v))) {
            return Err(Error::invalid("an idempotent lies in the ideal"));
        }

        let mut reduction = HashMap::new();
        for p in all.iter().filter(|p| p.len() < bound) {
            let mut nf = vec![0; basis.len()];
            match pivot_row.get(&col[p]) {
                None => nf[basis_index[p]] = 1,
                Some(&i) => {
                    for (bi, b) in basis.iter().enumerate() {
                        nf[bi] = field.neg(rref.reduced.get(i, col[b]));
                    }
                }
            }
            reduction.insert(p.clone(), nf);
        }

        let n = basis.len();
        let mut products = Vec::with_capacity(n * n);
        for x in &basis {
            for y in &basis {
                let prod = match x.concat(y) {
                    Some(p) if p.len() < bound => reduction[&p].clone(),
                    _ => vec![0; n],
                };
                products.push(prod);
            }
        }

        Ok(AlgebraData { field, quiver, relations, nilpotency_bound: bound, basis, basis_index, reduction, products })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Field {
        Field::new(2).unwrap()
    }

    fn ka2() -> BoundQuiverAlgebra {
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2")]).unwrap();
        BoundQuiverAlgebra::new(f2(), q, vec![], 2).unwrap()
    }

    fn ka3_rad2() -> BoundQuiverAlgebra {
        let q = Quiver::new(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]).unwrap();
        BoundQuiverAlgebra::new(f2(), q, vec![RelationElement::monomial(&["a", "b"])], 2).unwrap()
    }

    #[test]
    fn ka2_basis() {
        let a = ka2();
        assert_eq!(a.dim(), 3);
        assert_eq!(a.basis_labels(), vec!["e1", "e2", "a"]);
    }

    #[test]
    fn ka3_rad2_basis() {
        let a = ka3_rad2();
        assert_eq!(a.dim(), 5);
        assert_eq!(a.basis_labels(), vec!["e1", "e2", "e3", "a", "b"]);
    }

    #[test]
    fn arrowless_is_semisimple() {
        let q = Quiver::new::<&str>(&["x", "y", "z"], &[]).unwrap();
        let a = BoundQuiverAlgebra::new(f2(), q, vec![], 1).unwrap();
        assert_eq!(a.dim(), 3);
        assert_eq!(a.opposite().dim(), 3);
    }

    #[test]
    fn products() {
        let a = ka3_rad2();
        let e1 = a.idempotent(0);
        let e2 = a.idempotent(1);
        assert_eq!(a.multiply(&e1, &e1).unwrap(), e1);
        assert!(a.multiply(&e1, &e2).unwrap().iter().all(|&x| x == 0));
        let arrow_a = unit_vec(5, 3);
        let arrow_b = unit_vec(5, 4);
        assert!(a.multiply(&arrow_a, &arrow_b).unwrap().iter().all(|&x| x == 0));
        assert_eq!(a.multiply(&e1, &arrow_a).unwrap(), arrow_a);
        assert_eq!(a.multiply(&arrow_a, &e2).unwrap(), arrow_a);
    }

    #[test]
    fn unit_is_two_sided() {
        for alg in [ka2(), ka3_rad2()] {
            let one = alg.unit();
            for i in 0..alg.dim() {
                let b = unit_vec(alg.dim(), i);
                assert_eq!(alg.multiply(&one, &b).unwrap(), b);
                assert_eq!(alg.multiply(&b, &one).unwrap(), b);
            }
        }
    }

    #[test]
    fn loop_without_relations_is_rejected() {
        let q = Quiver::new(&["1"], &[("x", "1", "1")]).unwrap();
        let err = BoundQuiverAlgebra::new(f2(), q, vec![], 2).unwrap_err();
        assert_eq!(err, Error::NotAdmissible { witness: "x*x".into() });
    }

    #[test]
    fn missing_relation_is_rejected() {
        let q = Quiver::new(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]).unwrap();
        let err = BoundQuiverAlgebra::new(f2(), q, vec![], 2).unwrap_err();
        assert_eq!(err.code(), "not_admissible");
    }

    #[test]
    fn commutative_square() {
        // 1 -> 2 -> 4 and 1 -> 3 -> 4 with the two composites identified.
        let q = Quiver::new(&["1", "2", "3", "4"], &[("a", "1", "2"), ("b", "2", "4"), ("c", "1", "3"), ("d", "3", "4")])
            .unwrap();
        let rel = RelationElement::new(vec![(1, vec!["a".into(), "b".into()]), (-1, vec!["c".into(), "d".into()])]);
        let alg = BoundQuiverAlgebra::new(Field::new(3).unwrap(), q, vec![rel], 3).unwrap();
        assert_eq!(alg.dim(), 4 + 4 + 1);
        let ab = alg.path_coords(&Path { source: 0, target: 3, arrows: vec![0, 1] });
        let cd = alg.path_coords(&Path { source: 0, target: 3, arrows: vec![2, 3] });
        assert_eq!(ab, cd);
    }

    #[test]
    fn malformed_relations_are_rejected() {
        let q = Quiver::new(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]).unwrap();
        assert!(BoundQuiverAlgebra::new(f2(), q.clone(), vec![RelationElement::monomial(&["b", "a"])], 2).is_err());
        assert!(BoundQuiverAlgebra::new(f2(), q.clone(), vec![RelationElement::monomial(&["a"])], 2).is_err());
        assert!(BoundQuiverAlgebra::new(f2(), q, vec![RelationElement::monomial(&["a", "z"])], 2).is_err());
        assert!(Quiver::new(&["1", "1"], &[]).is_err());
        assert!(Quiver::new(&["1"], &[("a", "1", "2")]).is_err());
    }

    #[test]
    fn opposite_reverses_arrows() {
        let a = ka2();
        let op = a.opposite();
        assert_eq!(op.dim(), 3);
        let arrow = &op.quiver().arrows()[0];
        assert_eq!((arrow.source, arrow.target), (1, 0));
        assert_eq!(op.opposite(), a);
        assert_ne!(op, a);
    }
}
