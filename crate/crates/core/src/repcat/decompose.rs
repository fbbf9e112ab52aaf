//! Krull–Schmidt bookkeeping through the endomorphism ring.
//!
//! A module splits as soon as some endomorphism is neither nilpotent nor
//! invertible (Fitting's lemma). A module is certified indecomposable when
//! `End(X) = k·1 ⊕ J` with `J` a nilpotent subspace, or, failing that, by an
//! exhaustive scan of `End(X)` up to scalars within the search budget.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactlin::{self, Field, Matrix, Scalar};

use super::hom::HomSpace;
use super::{Module, Morphism};

/// An indecomposable direct summand with maps realising the splitting.
#[derive(Clone, Debug)]
pub struct Summand {
    pub module: Module,
    pub inclusion: Morphism,
    pub projection: Morphism,
}

/// Random endomorphisms tried before falling back to exhaustive search.
const RANDOM_TRIES: usize = 64;
/// Fields up to this size have their eigenvalue candidates scanned directly.
const SMALL_FIELD: u32 = 64;

fn is_invertible_endo(f: &Morphism) -> bool {
    f.components().iter().all(Matrix::is_invertible)
}

fn is_splitter(f: &Morphism) -> bool {
    !f.is_nilpotent() && !is_invertible_endo(f)
}

/// Scalars `c` for which `f - c` might be non-invertible.
fn eigenvalue_candidates(f: &Morphism) -> Vec<Scalar> {
    let field = f.domain().field();
    if field.p() <= SMALL_FIELD {
        return (1..field.p()).collect();
    }
    let mut out = Vec::new();
    for m in f.components() {
        let n = m.rows() as u64;
        if n == 0 || n % field.p() as u64 == 0 {
            continue;
        }
        let tr = (0..m.rows()).fold(0, |acc, i| field.add(acc, m.get(i, i)));
        let c = field.mul(tr, field.inv(field.reduce(n as i64)));
        if c != 0 && !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

fn shifted(f: &Morphism, c: Scalar) -> Morphism {
    f.sub(&Morphism::scalar(f.domain(), c))
}

/// Some `c` with `f - c` nilpotent, if one is found.
fn residue_of(f: &Morphism) -> Option<Scalar> {
    if f.is_nilpotent() {
        return Some(0);
    }
    eigenvalue_candidates(f).into_iter().find(|&c| shifted(f, c).is_nilpotent())
}

fn splitter_among(f: &Morphism) -> Option<Morphism> {
    if is_splitter(f) {
        return Some(f.clone());
    }
    eigenvalue_candidates(f).into_iter().map(|c| shifted(f, c)).find(is_splitter)
}

/// Basis (as coordinates) of `J` when `End = k·1 ⊕ J` with `J` nilpotent.
fn local_certificate(end: &HomSpace) -> Option<Matrix> {
    let field = end.domain().field();
    let chi: Vec<Scalar> = end.basis().iter().map(residue_of).collect::<Option<_>>()?;
    let one = end.coords(&Morphism::identity(end.domain()));
    let chi_one = one.iter().zip(&chi).fold(0, |acc, (&a, &c)| field.add(acc, field.mul(a, c)));
    if chi_one != 1 {
        return None;
    }
    let functional = Matrix::from_vec(field, 1, chi.len(), chi);
    let j = functional.kernel_basis();
    let j_maps = end.elements(&j);
    // Products of `k` elements of J must vanish for some k <= dim X.
    let mut power: Vec<Morphism> = j_maps.clone();
    for _ in 0..=end.domain().dim() {
        if power.is_empty() {
            return Some(j);
        }
        let prods: Vec<Morphism> = power.iter().flat_map(|a| j_maps.iter().map(move |b| a.compose(b))).collect();
        let flat = super::hom::flat_columns(&prods, Morphism::flat_len(end.domain(), end.domain()), field);
        let basis = flat.image_basis();
        power = (0..basis.cols()).map(|c| Morphism::from_flat(end.domain(), end.domain(), &basis.column(c))).collect();
    }
    power.is_empty().then_some(j)
}

enum Structure {
    Splits(Morphism),
    Local(Matrix),
}

fn analyse(x: &Module, end: &HomSpace) -> Result<Structure> {
    let field = x.field();
    if end.dim() <= 1 {
        return Ok(Structure::Local(Matrix::zeros(field, end.dim(), 0)));
    }
    for b in end.basis() {
        if let Some(s) = splitter_among(b) {
            return Ok(Structure::Splits(s));
        }
    }
    if let Some(j) = local_certificate(end) {
        return Ok(Structure::Local(j));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..RANDOM_TRIES {
        let coeffs: Vec<Scalar> = (0..end.dim()).map(|_| rng.gen_range(0..field.p())).collect();
        if let Some(s) = splitter_among(&end.element(&coeffs)) {
            return Ok(Structure::Splits(s));
        }
    }
    exhaustive_analysis(x, end)
}

fn check_budget(x: &Module, field: Field, n: usize) -> Result<()> {
    let cap = x.algebra().limits().search_cap as u128;
    let size = exactlin::field_power(field, n);
    if size > cap {
        return Err(Error::cap(format!(
            "endomorphism ring of dimension {n} over F_{} exceeds the search budget of {cap}",
            field.p()
        )));
    }
    Ok(())
}

/// Scans `End(X)` up to scalars; local iff every element is nilpotent or invertible.
fn exhaustive_analysis(x: &Module, end: &HomSpace) -> Result<Structure> {
    let field = x.field();
    check_budget(x, field, end.dim())?;
    let mut nilpotents = Vec::new();
    for c in exactlin::projective_points(field, end.dim()) {
        let f = end.element(&c);
        if f.is_nilpotent() {
            nilpotents.push(c);
        } else if !is_invertible_endo(&f) {
            return Ok(Structure::Splits(f));
        }
    }
    let cols = Matrix::from_columns(field, end.dim(), &nilpotents);
    Ok(Structure::Local(cols.image_basis()))
}

/// `X = im φⁿ ⊕ ker φⁿ` for an endomorphism `φ`.
fn fitting_split(x: &Module, phi: &Morphism) -> (Summand, Summand) {
    let f = x.field();
    let psi = phi.pow(x.dims().iter().copied().max().unwrap_or(0).max(1));
    let ims: Vec<Matrix> = psi.components().iter().map(Matrix::image_basis).collect();
    let kers: Vec<Matrix> = psi.components().iter().map(Matrix::kernel_basis).collect();
    let (a, ia) = x.submodule(ims.clone()).expect("images of endomorphisms are submodules");
    let (b, ib) = x.submodule(kers.clone()).expect("kernels are submodules");
    let mut pa = Vec::new();
    let mut pb = Vec::new();
    for v in 0..x.dims().len() {
        let t = Matrix::hstack(f, x.dim_at(v), &[ia.component(v), ib.component(v)]);
        let inv = t.inverse().expect("Fitting decomposition spans the space");
        let ka = a.dim_at(v);
        pa.push(inv.select_rows(&(0..ka).collect::<Vec<_>>()));
        pb.push(inv.select_rows(&(ka..x.dim_at(v)).collect::<Vec<_>>()));
    }
    let pa = Morphism::from_parts(x, &a, pa);
    let pb = Morphism::from_parts(x, &b, pb);
    (Summand { module: a, inclusion: ia, projection: pa }, Summand { module: b, inclusion: ib, projection: pb })
}

/// Splits `X` into indecomposable summands.
pub fn split(x: &Module) -> Result<Vec<Summand>> {
    if x.is_zero() {
        return Ok(Vec::new());
    }
    let end = HomSpace::new(x, x);
    match analyse(x, &end)? {
        Structure::Local(_) => {
            let id = Morphism::identity(x);
            Ok(vec![Summand { module: x.clone(), inclusion: id.clone(), projection: id }])
        }
        Structure::Splits(phi) => {
            let (a, b) = fitting_split(x, &phi);
            let mut out = Vec::new();
            for part in [a, b] {
                for s in split(&part.module)? {
                    out.push(Summand {
                        inclusion: part.inclusion.compose(&s.inclusion),
                        projection: s.projection.compose(&part.projection),
                        module: s.module,
                    });
                }
            }
            Ok(out)
        }
    }
}

pub fn is_indecomposable(x: &Module) -> Result<bool> {
    if x.is_zero() {
        return Ok(false);
    }
    let end = HomSpace::new(x, x);
    Ok(matches!(analyse(x, &end)?, Structure::Local(_)))
}

/// Basis of `rad End(X)` for indecomposable `X`.
pub fn radical_of_end(x: &Module) -> Result<Vec<Morphism>> {
    let end = HomSpace::new(x, x);
    match analyse(x, &end)? {
        Structure::Local(j) => Ok(end.elements(&j)),
        Structure::Splits(_) => Err(Error::precondition("radical of End requested for a decomposable module")),
    }
}

/// Basis of the radical morphisms `rad(X, Y)` between indecomposables.
pub fn radical_hom_basis(x: &Module, y: &Module) -> Result<Vec<Morphism>> {
    let field = x.field();
    let end = HomSpace::new(x, x);
    let j = match analyse(x, &end)? {
        Structure::Local(j) => j,
        Structure::Splits(_) => return Err(Error::precondition("radical morphisms need an indecomposable domain")),
    };
    let hom = HomSpace::new(x, y);
    if hom.dim() == 0 {
        return Ok(Vec::new());
    }
    let back = HomSpace::new(y, x);
    // Condition: g ∘ ψ ∈ J for every g: Y → X.
    let q = exactlin::quotient(&Matrix::identity(field, end.dim()), &j)?;
    let mut rows: Vec<Matrix> = Vec::new();
    for g in back.basis() {
        let cols: Vec<Vec<Scalar>> = hom.basis().iter().map(|psi| q.projection.mul_vec(&end.coords(&g.compose(psi)))).collect();
        rows.push(Matrix::from_columns(field, q.dim(), &cols));
    }
    let refs: Vec<&Matrix> = rows.iter().collect();
    let system = Matrix::vstack(field, hom.dim(), &refs);
    Ok(hom.elements(&system.kernel_basis()))
}

/// Indecomposable summands grouped by isomorphism class, with multiplicities.
pub fn decompose(x: &Module) -> Result<Vec<(Module, usize)>> {
    let mut groups: Vec<(Module, usize)> = Vec::new();
    for s in split(x)? {
        let mut found = false;
        for (m, k) in groups.iter_mut() {
            if indecomposables_isomorphic(m, &s.module) {
                *k += 1;
                found = true;
                break;
            }
        }
        if !found {
            groups.push((s.module, 1));
        }
    }
    Ok(groups)
}

/// For indecomposable `A`, `A ≅ B` iff some `g ∘ f` is invertible over hom bases.
pub(crate) fn indecomposables_isomorphic(a: &Module, b: &Module) -> bool {
    if a.dims() != b.dims() {
        return false;
    }
    let fs = HomSpace::new(a, b);
    if fs.dim() == 0 {
        return false;
    }
    let gs = HomSpace::new(b, a);
    fs.basis().iter().any(|f| gs.basis().iter().any(|g| is_invertible_endo(&g.compose(f))))
}

pub fn are_isomorphic(x: &Module, y: &Module) -> Result<bool> {
    if x.algebra() != y.algebra() || x.dims() != y.dims() {
        return Ok(false);
    }
    if x == y || x.is_zero() {
        return Ok(true);
    }
    let e = super::hom_dim(x, x);
    if super::hom_dim(y, y) != e || super::hom_dim(x, y) != e || super::hom_dim(y, x) != e {
        return Ok(false);
    }
    let xs = split(x)?;
    let mut ys: Vec<Option<Summand>> = split(y)?.into_iter().map(Some).collect();
    if xs.len() != ys.len() {
        return Ok(false);
    }
    for s in &xs {
        let hit = ys.iter_mut().find(|t| t.as_ref().is_some_and(|t| indecomposables_isomorphic(&s.module, &t.module)));
        match hit {
            Some(slot) => *slot = None,
            None => return Ok(false),
        }
    }
    Ok(true)
}

/// Whether no component between indecomposable summands is an isomorphism.
pub fn is_radical_morphism(f: &Morphism) -> Result<bool> {
    let xs = split(f.domain())?;
    let ys = split(f.codomain())?;
    for xi in &xs {
        for yj in &ys {
            let c = yj.projection.compose(f).compose(&xi.inclusion);
            if c.is_zero() || xi.module.dims() != yj.module.dims() {
                continue;
            }
            let back = HomSpace::new(&yj.module, &xi.module);
            if back.basis().iter().any(|g| is_invertible_endo(&g.compose(&c))) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::{direct_sum, hom_basis};
    use super::*;
    use crate::algebra::{BoundQuiverAlgebra, Quiver};

    #[test]
    fn simple_squared() {
        let alg = ka2();
        let s1 = Module::simple(&alg, 0);
        let d = decompose(&direct_sum(&[s1.clone(), s1.clone()]).module).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].1, 2);
        assert!(are_isomorphic(&d[0].0, &s1).unwrap());
    }

    #[test]
    fn regular_module_splits_into_projectives() {
        let alg = ka3_rad2();
        let d = decompose(&Module::regular(&alg).module).unwrap();
        assert_eq!(d.len(), 3);
        for v in 0..3 {
            let pv = Module::projective(&alg, v);
            assert_eq!(d.iter().filter(|(m, k)| *k == 1 && are_isomorphic(m, &pv).unwrap()).count(), 1);
        }
    }

    #[test]
    fn projective_is_indecomposable() {
        let alg = ka3();
        assert!(is_indecomposable(&Module::projective(&alg, 0)).unwrap());
        assert!(!is_indecomposable(&Module::zero(&alg)).unwrap());
    }

    #[test]
    fn iso_examples() {
        let alg = ka2();
        let s1 = Module::simple(&alg, 0);
        let s2 = Module::simple(&alg, 1);
        assert!(are_isomorphic(&s1, &s1).unwrap());
        assert!(!are_isomorphic(&s1, &s2).unwrap());
        let f3 = Field::new(3).unwrap();
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2")]).unwrap();
        let alg3 = BoundQuiverAlgebra::new(f3, q, vec![], 2).unwrap();
        let a = Module::new(&alg3, vec![1, 1], vec![Matrix::from_rows(f3, &[vec![1]]).unwrap()]).unwrap();
        let b = Module::new(&alg3, vec![1, 1], vec![Matrix::from_rows(f3, &[vec![2]]).unwrap()]).unwrap();
        assert!(are_isomorphic(&a, &b).unwrap());
    }

    #[test]
    fn radical_morphisms() {
        let alg = ka2();
        let p1 = Module::projective(&alg, 0);
        let s2 = Module::simple(&alg, 1);
        assert!(is_radical_morphism(&Morphism::zero(&p1, &p1)).unwrap());
        assert!(!is_radical_morphism(&Morphism::identity(&p1)).unwrap());
        assert!(is_radical_morphism(&hom_basis(&s2, &p1)[0]).unwrap());
        let sum = direct_sum(&[p1.clone(), s2.clone()]);
        assert!(!is_radical_morphism(&sum.inclusions[0].compose(&sum.projections[0])).unwrap());
    }

    #[test]
    fn split_recovers_identity() {
        let alg = ka3();
        let parts = [Module::projective(&alg, 0), Module::simple(&alg, 1), Module::projective(&alg, 1)];
        let x = direct_sum(&parts).module;
        let summands = split(&x).unwrap();
        assert_eq!(summands.len(), 3);
        let mut total = Morphism::zero(&x, &x);
        for s in &summands {
            assert!(s.projection.compose(&s.inclusion) == Morphism::identity(&s.module));
            total = total.add(&s.inclusion.compose(&s.projection));
        }
        assert_eq!(total, Morphism::identity(&x));
    }

    #[test]
    fn radical_of_local_end() {
        let alg = ka3();
        let p1 = Module::projective(&alg, 0);
        assert!(radical_of_end(&p1).unwrap().is_empty());
        // Loop algebra k[x]/x^3: End(P) = P has a two-dimensional radical.
        let q = Quiver::new(&["1"], &[("x", "1", "1")]).unwrap();
        let rel = crate::algebra::RelationElement::monomial(&["x", "x", "x"]);
        let alg = BoundQuiverAlgebra::new(f2(), q, vec![rel], 3).unwrap();
        let p = Module::projective(&alg, 0);
        assert_eq!(radical_of_end(&p).unwrap().len(), 2);
        let s = Module::simple(&alg, 0);
        assert_eq!(radical_hom_basis(&p, &s).unwrap().len(), 1);
        assert_eq!(radical_hom_basis(&s, &p).unwrap().len(), 1);
    }
}
