//! Subcategories `add M` given by finitely many indecomposable generators:
//! approximations, minimal versions and radical maps into a generator.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::BoundQuiverAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{self, Matrix, Scalar};
use crate::repcat::{self, DirectSum, HomSpace, Module, Morphism};

/// `add(M₁ ⊕ … ⊕ M_r)` for pairwise non-isomorphic indecomposables `Mᵢ`.
#[derive(Clone, Debug)]
pub struct AddCategory {
    algebra: BoundQuiverAlgebra,
    generators: Vec<Module>,
}

impl AddCategory {
    pub fn new(algebra: &BoundQuiverAlgebra, generators: Vec<Module>) -> Result<AddCategory> {
        for (i, g) in generators.iter().enumerate() {
            if g.algebra() != algebra {
                return Err(Error::invalid(format!("generator {i} lives over another algebra")));
            }
            if !repcat::is_indecomposable(g)? {
                return Err(Error::invalid(format!("generator {i} is not indecomposable")));
            }
            for (j, h) in generators[..i].iter().enumerate() {
                if repcat::are_isomorphic(g, h)? {
                    return Err(Error::invalid(format!("generators {j} and {i} are isomorphic")));
                }
            }
        }
        Ok(AddCategory { algebra: algebra.clone(), generators })
    }

    /// The additive closure of the indecomposable summands of `m`.
    pub fn from_module(m: &Module) -> Result<AddCategory> {
        let gens = repcat::decompose(m)?.into_iter().map(|(g, _)| g).collect();
        AddCategory::new(m.algebra(), gens)
    }

    pub fn algebra(&self) -> &BoundQuiverAlgebra {
        &self.algebra
    }

    pub fn generators(&self) -> &[Module] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Index of the generator isomorphic to the indecomposable `x`.
    pub fn index_of(&self, x: &Module) -> Result<Option<usize>> {
        for (i, g) in self.generators.iter().enumerate() {
            if repcat::are_isomorphic(g, x)? {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    /// Multiplicity of each generator in `x`, or `None` when `x ∉ add M`.
    pub fn multiplicities(&self, x: &Module) -> Result<Option<Vec<usize>>> {
        let mut mult = vec![0; self.len()];
        for (s, k) in repcat::decompose(x)? {
            match self.index_of(&s)? {
                Some(i) => mult[i] += k,
                None => return Ok(None),
            }
        }
        Ok(Some(mult))
    }

    pub fn contains(&self, x: &Module) -> Result<bool> {
        Ok(self.multiplicities(x)?.is_some())
    }

    /// Contains every indecomposable projective.
    pub fn is_generating(&self) -> Result<bool> {
        for v in 0..self.algebra.num_vertices() {
            if self.index_of(&Module::projective(&self.algebra, v))?.is_none() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Contains every indecomposable injective.
    pub fn is_cogenerating(&self) -> Result<bool> {
        for v in 0..self.algebra.num_vertices() {
            if self.index_of(&Module::injective(&self.algebra, v))?.is_none() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The same generators viewed through the duality, as a category over the opposite algebra.
    pub fn dual(&self) -> AddCategory {
        AddCategory { algebra: self.algebra.opposite(), generators: self.generators.iter().map(Module::dual).collect() }
    }

    /// `⊕_i G_i^{dim Hom(G_i, X)} → X`, summands ordered by (generator, hom basis index).
    pub fn right_approximation(&self, x: &Module) -> Approximation {
        let mut maps = Vec::new();
        let mut sources = Vec::new();
        for (i, g) in self.generators.iter().enumerate() {
            for b in repcat::hom_basis(g, x) {
                maps.push(b);
                sources.push(i);
            }
        }
        let (sum, map) = if maps.is_empty() {
            let sum = DirectSum::of(&self.algebra, &[]);
            let map = Morphism::zero(&sum.module, x);
            (sum, map)
        } else {
            Morphism::row(x, &maps)
        };
        Approximation { map, sum, sources }
    }

    /// `X → ⊕_i G_i^{dim Hom(X, G_i)}`, summands ordered by (generator, hom basis index).
    pub fn left_approximation(&self, x: &Module) -> Approximation {
        let mut maps = Vec::new();
        let mut sources = Vec::new();
        for (i, g) in self.generators.iter().enumerate() {
            for b in repcat::hom_basis(x, g) {
                maps.push(b);
                sources.push(i);
            }
        }
        let (sum, map) = if maps.is_empty() {
            let sum = DirectSum::of(&self.algebra, &[]);
            let map = Morphism::zero(x, &sum.module);
            (sum, map)
        } else {
            Morphism::column(x, &maps)
        };
        Approximation { map, sum, sources }
    }

    pub fn minimal_right_approximation(&self, x: &Module) -> Result<Morphism> {
        Ok(right_minimalize(&self.right_approximation(x).map)?.map)
    }

    pub fn minimal_left_approximation(&self, x: &Module) -> Result<Morphism> {
        Ok(left_minimalize(&self.left_approximation(x).map)?.map)
    }

    /// Whether `Hom(G, f)` is onto for every generator `G`.
    pub fn is_right_approximation(&self, f: &Morphism) -> bool {
        self.generators.iter().all(|g| postcompose_image(g, f).cols() == repcat::hom_dim(g, f.codomain()))
    }

    /// Whether `Hom(f, G)` is onto for every generator `G`.
    pub fn is_left_approximation(&self, f: &Morphism) -> bool {
        self.generators.iter().all(|g| precompose_image(f, g).cols() == repcat::hom_dim(f.domain(), g))
    }

    /// A right minimal map `E → N` with `Im Hom(G, −) = rad(G, N)` for every generator `G`.
    pub fn radical_generators(&self, n: &Module) -> Result<Morphism> {
        if !repcat::is_indecomposable(n)? {
            return Err(Error::precondition("radical maps are only assembled into an indecomposable"));
        }
        let mut maps = Vec::new();
        for g in &self.generators {
            maps.extend(repcat::radical_hom_basis(g, n)?);
        }
        if maps.is_empty() {
            return Ok(Morphism::zero(&Module::zero(&self.algebra), n));
        }
        let (_, g) = Morphism::row(n, &maps);
        Ok(right_minimalize(&g)?.map)
    }
}

/// An approximation together with the generator index of each domain (or codomain) summand.
#[derive(Clone, Debug)]
pub struct Approximation {
    pub map: Morphism,
    pub sum: DirectSum,
    pub sources: Vec<usize>,
}

/// Basis (flattened columns) of `Im Hom(G, f) ⊆ Hom(G, cod f)`.
pub fn postcompose_image(g: &Module, f: &Morphism) -> Matrix {
    let hom = HomSpace::new(g, f.domain());
    let cols: Vec<Vec<Scalar>> = hom.basis().iter().map(|b| f.compose(b).flatten()).collect();
    Matrix::from_columns(g.field(), Morphism::flat_len(g, f.codomain()), &cols).image_basis()
}

/// Basis (flattened columns) of `Im Hom(f, G) ⊆ Hom(dom f, G)`.
pub fn precompose_image(f: &Morphism, g: &Module) -> Matrix {
    let hom = HomSpace::new(f.codomain(), g);
    let cols: Vec<Vec<Scalar>> = hom.basis().iter().map(|b| b.compose(f).flatten()).collect();
    Matrix::from_columns(g.field(), Morphism::flat_len(f.domain(), g), &cols).image_basis()
}

/// A right minimal version `f' = f ∘ section` of `f`, with `f = f' ∘ retraction`.
#[derive(Clone, Debug)]
pub struct RightMinimal {
    pub map: Morphism,
    pub section: Morphism,
    pub retraction: Morphism,
}

/// A left minimal version `f' = retraction ∘ f` of `f`, with `f = section ∘ f'`.
#[derive(Clone, Debug)]
pub struct LeftMinimal {
    pub map: Morphism,
    pub section: Morphism,
    pub retraction: Morphism,
}

/// Random elements tried before exhaustive search when hunting a non-nilpotent map.
const RANDOM_TRIES: usize = 64;

/// A non-nilpotent element of the algebra spanned by `basis` (closed under composition), if any.
fn non_nilpotent_in(x: &Module, basis: &[Morphism]) -> Result<Option<Morphism>> {
    if let Some(b) = basis.iter().find(|b| !b.is_nilpotent()) {
        return Ok(Some(b.clone()));
    }
    // All products of `dim X` elements vanish iff every element is nilpotent.
    let field = x.field();
    let flat_len = Morphism::flat_len(x, x);
    let mut power: Vec<Morphism> = basis.to_vec();
    for _ in 0..x.dim() {
        if power.is_empty() {
            return Ok(None);
        }
        if let Some(b) = power.iter().find(|b| !b.is_nilpotent()) {
            return Ok(Some(b.clone()));
        }
        let prods: Vec<Morphism> = power.iter().flat_map(|a| basis.iter().map(move |b| a.compose(b))).collect();
        let cols: Vec<Vec<Scalar>> = prods.iter().map(Morphism::flatten).collect();
        let span = Matrix::from_columns(field, flat_len, &cols).image_basis();
        power = (0..span.cols()).map(|c| Morphism::from_flat(x, x, &span.column(c))).collect();
    }
    if power.is_empty() {
        return Ok(None);
    }
    let combine = |coeffs: &[Scalar]| {
        basis.iter().zip(coeffs).fold(Morphism::zero(x, x), |acc, (b, &c)| acc.add(&b.scale(c)))
    };
    let mut rng = ChaCha8Rng::seed_from_u64(0xa99);
    for _ in 0..RANDOM_TRIES {
        let coeffs: Vec<Scalar> = (0..basis.len()).map(|_| rng.gen_range(0..field.p())).collect();
        let m = combine(&coeffs);
        if !m.is_nilpotent() {
            return Ok(Some(m));
        }
    }
    let cap = x.algebra().limits().search_cap as u128;
    if exactlin::field_power(field, basis.len()) > cap {
        return Err(Error::cap("search for a non-nilpotent endomorphism exceeds the budget"));
    }
    for c in exactlin::projective_points(field, basis.len()) {
        let m = combine(&c);
        if !m.is_nilpotent() {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

/// Basis of `{ψ ∈ End(dom f) : f ∘ ψ = 0}`.
fn right_annihilator(f: &Morphism) -> Vec<Morphism> {
    let x = f.domain();
    let end = HomSpace::new(x, x);
    let cols: Vec<Vec<Scalar>> = end.basis().iter().map(|b| f.compose(b).flatten()).collect();
    let m = Matrix::from_columns(x.field(), Morphism::flat_len(x, f.codomain()), &cols);
    end.elements(&m.kernel_basis())
}

/// Discards direct summands of the domain on which `f` vanishes.
///
/// The maps `ψ` with `f ∘ ψ = 0` form a right ideal of `End(X)`; `f` is right
/// minimal exactly when that ideal is nil. Otherwise a non-nilpotent `ψ`
/// splits off `im ψⁿ ⊆ ker f` by Fitting's lemma.
pub fn right_minimalize(f: &Morphism) -> Result<RightMinimal> {
    let fl = f.domain().field();
    let mut map = f.clone();
    let mut section = Morphism::identity(f.domain());
    let mut retraction = Morphism::identity(f.domain());
    loop {
        let x = map.domain().clone();
        if x.is_zero() {
            break;
        }
        let ideal = right_annihilator(&map);
        let Some(psi) = non_nilpotent_in(&x, &ideal)? else { break };
        let power = psi.pow(x.dims().iter().copied().max().unwrap_or(1).max(1));
        let kers: Vec<Matrix> = power.components().iter().map(Matrix::kernel_basis).collect();
        let ims: Vec<Matrix> = power.components().iter().map(Matrix::image_basis).collect();
        let (k, incl) = x.submodule(kers).expect("kernels are submodules");
        let mut proj = Vec::new();
        for v in 0..x.dims().len() {
            let t = Matrix::hstack(fl, x.dim_at(v), &[incl.component(v), &ims[v]]);
            let inv = t.inverse().expect("Fitting decomposition spans the space");
            proj.push(inv.select_rows(&(0..k.dim_at(v)).collect::<Vec<_>>()));
        }
        let proj = Morphism::new(&x, &k, proj).expect("projection along a summand is a module map");
        map = map.compose(&incl);
        section = section.compose(&incl);
        retraction = proj.compose(&retraction);
    }
    Ok(RightMinimal { map, section, retraction })
}

pub fn left_minimalize(f: &Morphism) -> Result<LeftMinimal> {
    let r = right_minimalize(&f.dual())?;
    Ok(LeftMinimal { map: r.map.dual(), section: r.retraction.dual(), retraction: r.section.dual() })
}

pub fn is_right_minimal(f: &Morphism) -> Result<bool> {
    let ideal = right_annihilator(f);
    Ok(non_nilpotent_in(f.domain(), &ideal)?.is_none())
}

pub fn is_left_minimal(f: &Morphism) -> Result<bool> {
    is_right_minimal(&f.dual())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repcat::fixtures::*;
    use crate::repcat::{are_isomorphic, direct_sum};

    fn flagship() -> AddCategory {
        let alg = ka3_rad2();
        let gens = vec![
            Module::projective(&alg, 0),
            Module::projective(&alg, 1),
            Module::simple(&alg, 2),
            Module::simple(&alg, 0),
        ];
        AddCategory::new(&alg, gens).unwrap()
    }

    #[test]
    fn validation() {
        let alg = ka2();
        let p1 = Module::projective(&alg, 0);
        assert!(AddCategory::new(&alg, vec![p1.clone(), p1.clone()]).is_err());
        let sum = direct_sum(&[p1.clone(), p1]).module;
        assert!(AddCategory::new(&alg, vec![sum]).is_err());
    }

    #[test]
    fn approximations_of_s2() {
        let c = flagship();
        let alg = c.algebra().clone();
        let s2 = Module::simple(&alg, 1);
        let raw = c.right_approximation(&s2);
        assert!(c.is_right_approximation(&raw.map));
        let min = c.minimal_right_approximation(&s2).unwrap();
        assert!(are_isomorphic(min.domain(), &Module::projective(&alg, 1)).unwrap());
        let left = c.minimal_left_approximation(&s2).unwrap();
        assert!(are_isomorphic(left.codomain(), &Module::projective(&alg, 0)).unwrap());
        assert!(c.is_left_approximation(&left));
    }

    #[test]
    fn approximation_of_member_splits() {
        let c = flagship();
        let p2 = c.generators()[1].clone();
        let a = c.right_approximation(&p2);
        assert!(repcat::factor_through(&Morphism::identity(&p2), &a.map).is_some());
        let l = c.left_approximation(&p2);
        assert!(repcat::factor_through_left(&Morphism::identity(&p2), &l.map).is_some());
    }

    #[test]
    fn minimalization_strips_zero_summands() {
        let alg = ka2();
        let p1 = Module::projective(&alg, 0);
        let s1 = Module::simple(&alg, 0);
        let pi = repcat::hom_basis(&p1, &s1)[0].clone();
        let (_, f) = Morphism::row(&s1, &[pi.clone(), Morphism::zero(&p1, &s1), pi.clone()]);
        assert!(!is_right_minimal(&f).unwrap());
        let m = right_minimalize(&f).unwrap();
        assert!(are_isomorphic(m.map.domain(), &p1).unwrap());
        assert!(is_right_minimal(&m.map).unwrap());
        assert_eq!(m.map.compose(&m.retraction), f);
        assert!(is_right_minimal(&pi).unwrap());
        let l = left_minimalize(&Morphism::column(&p1, &[Morphism::identity(&p1), Morphism::zero(&p1, &s1)]).1).unwrap();
        assert!(are_isomorphic(l.map.codomain(), &p1).unwrap());
        assert!(is_left_minimal(&l.map).unwrap());
    }

    #[test]
    fn radical_generators_examples() {
        let c = flagship();
        let alg = c.algebra().clone();
        let g = c.radical_generators(&Module::simple(&alg, 0)).unwrap();
        assert!(are_isomorphic(g.domain(), &Module::projective(&alg, 0)).unwrap());
        let g = c.radical_generators(&Module::simple(&alg, 2)).unwrap();
        assert!(g.domain().is_zero());
        let ka2 = ka2();
        let all = AddCategory::new(
            &ka2,
            vec![Module::projective(&ka2, 0), Module::simple(&ka2, 0), Module::simple(&ka2, 1)],
        )
        .unwrap();
        let g = all.radical_generators(&Module::simple(&ka2, 0)).unwrap();
        assert!(are_isomorphic(g.domain(), &Module::projective(&ka2, 0)).unwrap());
    }

    #[test]
    fn generating_and_cogenerating() {
        let c = flagship();
        assert!(c.is_generating().unwrap());
        assert!(c.is_cogenerating().unwrap());
        let alg = c.algebra().clone();
        let partial = AddCategory::new(&alg, vec![Module::projective(&alg, 0)]).unwrap();
        assert!(!partial.is_generating().unwrap());
    }
}
