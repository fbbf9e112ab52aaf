//! The category `mod Λ` of finite-dimensional right modules, realised as
//! quiver representations.
//!
//! A right module `X` assigns a vector space `X e_v` to each vertex and to
//! each arrow `a: v → w` the linear map `x ↦ x·a`, stored as a matrix from
//! the space at `v` to the space at `w`. A path `a₁…a_k` therefore acts by
//! the product `X_{a_k} ⋯ X_{a₁}`.

mod abelian;
mod decompose;
mod duality;
mod hom;
mod standard;

use std::fmt;
use std::sync::Arc;

use crate::algebra::{BoundQuiverAlgebra, Path};
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, Scalar};

pub use abelian::{block_morphism, direct_sum, DirectSum, Image, Pullback, Pushout};
pub use decompose::{
    are_isomorphic, decompose, is_indecomposable, is_radical_morphism, radical_hom_basis, radical_of_end, split,
    Summand,
};
pub use hom::{factor_through, factor_through_left, hom_basis, hom_dim, HomSpace};
pub(crate) use hom::flat_columns;
pub use standard::{Cover, Envelope};

/// A finite-dimensional right module over a bound quiver algebra.
///
/// Cheap to clone; equality is structural.
#[derive(Clone, PartialEq, Eq)]
pub struct Module(Arc<ModuleData>);

#[derive(PartialEq, Eq)]
struct ModuleData {
    algebra: BoundQuiverAlgebra,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Module{:?}", self.0.dims)?;
        f.debug_list().entries(self.0.maps.iter()).finish()
    }
}

impl Module {
    /// Builds a representation, checking shapes and that every relation acts as zero.
    pub fn new(algebra: &BoundQuiverAlgebra, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Module> {
        let q = algebra.quiver();
        if dims.len() != q.num_vertices() {
            return Err(Error::DimensionMismatch(format!(
                "dimension vector has {} entries for {} vertices",
                dims.len(),
                q.num_vertices()
            )));
        }
        if maps.len() != q.arrows().len() {
            return Err(Error::DimensionMismatch(format!(
                "{} arrow matrices for {} arrows",
                maps.len(),
                q.arrows().len()
            )));
        }
        for (a, m) in q.arrows().iter().zip(&maps) {
            if m.field() != algebra.field() {
                return Err(Error::invalid(format!("matrix for arrow {} is over another field", a.name)));
            }
            if m.rows() != dims[a.target] || m.cols() != dims[a.source] {
                return Err(Error::DimensionMismatch(format!(
                    "arrow {} needs a {}x{} matrix, got {}x{}",
                    a.name,
                    dims[a.target],
                    dims[a.source],
                    m.rows(),
                    m.cols()
                )));
            }
        }
        let module = Module::from_parts(algebra.clone(), dims, maps);
        for rel in algebra.relation_paths() {
            let (s, t) = (rel[0].1.source, rel[0].1.target);
            let mut acc = Matrix::zeros(algebra.field(), module.dim_at(t), module.dim_at(s));
            for (c, p) in &rel {
                acc = acc.add(&module.path_action(p).scale(*c));
            }
            if !acc.is_zero() {
                return Err(Error::invalid("module does not satisfy the relations"));
            }
        }
        // Paths longer than the bound lie in the ideal and must act as zero too.
        for p in paths_of_length(algebra, algebra.nilpotency_bound()) {
            if !module.path_action(&p).is_zero() {
                return Err(Error::invalid("module does not satisfy the relations"));
            }
        }
        Ok(module)
    }

    pub(crate) fn from_parts(algebra: BoundQuiverAlgebra, dims: Vec<usize>, maps: Vec<Matrix>) -> Module {
        Module(Arc::new(ModuleData { algebra, dims, maps }))
    }

    pub fn zero(algebra: &BoundQuiverAlgebra) -> Module {
        let f = algebra.field();
        let maps = algebra.quiver().arrows().iter().map(|_| Matrix::zeros(f, 0, 0)).collect();
        Module::from_parts(algebra.clone(), vec![0; algebra.num_vertices()], maps)
    }

    pub fn algebra(&self) -> &BoundQuiverAlgebra {
        &self.0.algebra
    }

    pub fn field(&self) -> Field {
        self.0.algebra.field()
    }

    pub fn dims(&self) -> &[usize] {
        &self.0.dims
    }

    pub fn dim_at(&self, v: usize) -> usize {
        self.0.dims[v]
    }

    pub fn dim(&self) -> usize {
        self.0.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn arrow_map(&self, a: usize) -> &Matrix {
        &self.0.maps[a]
    }

    pub fn arrow_maps(&self) -> &[Matrix] {
        &self.0.maps
    }

    /// Matrix of the action of a path, from the space at its source to the space at its target.
    pub fn path_action(&self, p: &Path) -> Matrix {
        let mut m = Matrix::identity(self.field(), self.dim_at(p.source));
        for &a in &p.arrows {
            m = self.arrow_map(a).mul(&m);
        }
        m
    }

    /// Offset of the space at `v` in the concatenation of all vertex spaces.
    pub fn offset(&self, v: usize) -> usize {
        self.0.dims[..v].iter().sum()
    }
}

fn paths_of_length(algebra: &BoundQuiverAlgebra, len: usize) -> Vec<Path> {
    let q = algebra.quiver();
    let mut layer: Vec<Path> = (0..q.num_vertices()).map(Path::trivial).collect();
    for _ in 0..len {
        let mut next = Vec::new();
        for p in &layer {
            for (i, a) in q.arrows().iter().enumerate() {
                if a.source == p.target {
                    let mut arrows = p.arrows.clone();
                    arrows.push(i);
                    next.push(Path { source: p.source, target: a.target, arrows });
                }
            }
        }
        layer = next;
    }
    layer
}

/// A module homomorphism given by one matrix per vertex.
#[derive(Clone, PartialEq, Eq)]
pub struct Morphism {
    domain: Module,
    codomain: Module,
    components: Vec<Matrix>,
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Morphism{:?}->{:?}", self.domain.dims(), self.codomain.dims())?;
        f.debug_list().entries(self.components.iter()).finish()
    }
}

impl Morphism {
    /// Builds a morphism, checking shapes and the intertwining condition.
    pub fn new(domain: &Module, codomain: &Module, components: Vec<Matrix>) -> Result<Morphism> {
        if domain.algebra() != codomain.algebra() {
            return Err(Error::invalid("morphism between modules over different algebras"));
        }
        if components.len() != domain.dims().len() {
            return Err(Error::DimensionMismatch("one component per vertex is required".into()));
        }
        for (v, c) in components.iter().enumerate() {
            if c.rows() != codomain.dim_at(v) || c.cols() != domain.dim_at(v) {
                return Err(Error::DimensionMismatch(format!(
                    "component at vertex {v} must be {}x{}",
                    codomain.dim_at(v),
                    domain.dim_at(v)
                )));
            }
        }
        let f = Morphism { domain: domain.clone(), codomain: codomain.clone(), components };
        if !f.intertwines() {
            return Err(Error::invalid("components do not commute with the arrow maps"));
        }
        Ok(f)
    }

    pub(crate) fn from_parts(domain: &Module, codomain: &Module, components: Vec<Matrix>) -> Morphism {
        let f = Morphism { domain: domain.clone(), codomain: codomain.clone(), components };
        debug_assert!(f.intertwines(), "constructed components are not a module map");
        f
    }

    fn intertwines(&self) -> bool {
        self.domain.algebra().quiver().arrows().iter().enumerate().all(|(i, a)| {
            self.components[a.target].mul(self.domain.arrow_map(i))
                == self.codomain.arrow_map(i).mul(&self.components[a.source])
        })
    }

    pub fn zero(domain: &Module, codomain: &Module) -> Morphism {
        let f = domain.field();
        let comps = (0..domain.dims().len()).map(|v| Matrix::zeros(f, codomain.dim_at(v), domain.dim_at(v))).collect();
        Morphism::from_parts(domain, codomain, comps)
    }

    pub fn identity(x: &Module) -> Morphism {
        Morphism::scalar(x, 1)
    }

    pub fn scalar(x: &Module, c: Scalar) -> Morphism {
        let f = x.field();
        let comps = x.dims().iter().map(|&d| Matrix::scalar(f, d, c)).collect();
        Morphism::from_parts(x, x, comps)
    }

    pub fn domain(&self) -> &Module {
        &self.domain
    }

    pub fn codomain(&self) -> &Module {
        &self.codomain
    }

    pub fn components(&self) -> &[Matrix] {
        &self.components
    }

    pub fn component(&self, v: usize) -> &Matrix {
        &self.components[v]
    }

    /// `self ∘ g`, where `g` is applied first.
    pub fn compose(&self, g: &Morphism) -> Morphism {
        assert!(g.codomain == self.domain, "composition of non-composable morphisms");
        let comps = self.components.iter().zip(&g.components).map(|(a, b)| a.mul(b)).collect();
        Morphism { domain: g.domain.clone(), codomain: self.codomain.clone(), components: comps }
    }

    pub fn add(&self, other: &Morphism) -> Morphism {
        assert!(self.domain == other.domain && self.codomain == other.codomain, "sum of non-parallel morphisms");
        let comps = self.components.iter().zip(&other.components).map(|(a, b)| a.add(b)).collect();
        Morphism { components: comps, ..self.clone() }
    }

    pub fn sub(&self, other: &Morphism) -> Morphism {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: Scalar) -> Morphism {
        let comps = self.components.iter().map(|a| a.scale(c)).collect();
        Morphism { components: comps, ..self.clone() }
    }

    pub fn neg(&self) -> Morphism {
        let comps = self.components.iter().map(Matrix::neg).collect();
        Morphism { components: comps, ..self.clone() }
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Matrix::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(Matrix::rank).sum()
    }

    pub fn is_mono(&self) -> bool {
        self.rank() == self.domain.dim()
    }

    pub fn is_epi(&self) -> bool {
        self.rank() == self.codomain.dim()
    }

    pub fn is_iso(&self) -> bool {
        self.domain.dims() == self.codomain.dims() && self.is_mono()
    }

    /// Whether some power vanishes (only for endomorphisms).
    pub fn is_nilpotent(&self) -> bool {
        self.components.iter().all(Matrix::is_nilpotent)
    }

    pub fn inverse(&self) -> Option<Morphism> {
        let comps: Option<Vec<Matrix>> = self.components.iter().map(Matrix::inverse).collect();
        comps.map(|c| Morphism { domain: self.codomain.clone(), codomain: self.domain.clone(), components: c })
    }

    pub fn pow(&self, e: usize) -> Morphism {
        let comps = self.components.iter().map(|a| a.pow(e)).collect();
        Morphism { components: comps, ..self.clone() }
    }

    /// All component entries concatenated row-major, vertex by vertex.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.components.iter().flat_map(|c| c.data().iter().copied()).collect()
    }

    pub(crate) fn from_flat(domain: &Module, codomain: &Module, flat: &[Scalar]) -> Morphism {
        let f = domain.field();
        let mut off = 0;
        let mut comps = Vec::with_capacity(domain.dims().len());
        for v in 0..domain.dims().len() {
            let (r, c) = (codomain.dim_at(v), domain.dim_at(v));
            comps.push(Matrix::from_vec(f, r, c, flat[off..off + r * c].to_vec()));
            off += r * c;
        }
        Morphism::from_parts(domain, codomain, comps)
    }

    /// Length of [`Morphism::flatten`] for maps between these modules.
    pub fn flat_len(domain: &Module, codomain: &Module) -> usize {
        domain.dims().iter().zip(codomain.dims()).map(|(a, b)| a * b).sum()
    }

    /// The same linear data viewed between other (structurally equal) modules.
    pub fn with_ends(&self, domain: &Module, codomain: &Module) -> Morphism {
        assert_eq!(domain.dims(), self.domain.dims());
        assert_eq!(codomain.dims(), self.codomain.dims());
        Morphism::from_parts(domain, codomain, self.components.clone())
    }

    /// Applies the map to a vector of the space at vertex `v`.
    pub fn apply_at(&self, v: usize, x: &[Scalar]) -> Vec<Scalar> {
        self.components[v].mul_vec(x)
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use crate::algebra::{BoundQuiverAlgebra, Quiver, RelationElement};
    use crate::exactlin::Field;

    pub fn f2() -> Field {
        Field::new(2).unwrap()
    }

    pub fn ka2() -> BoundQuiverAlgebra {
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2")]).unwrap();
        BoundQuiverAlgebra::new(f2(), q, vec![], 2).unwrap()
    }

    pub fn ka3_rad2() -> BoundQuiverAlgebra {
        let q = Quiver::new(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]).unwrap();
        BoundQuiverAlgebra::new(f2(), q, vec![RelationElement::monomial(&["a", "b"])], 2).unwrap()
    }

    pub fn ka3() -> BoundQuiverAlgebra {
        let q = Quiver::new(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]).unwrap();
        BoundQuiverAlgebra::new(f2(), q, vec![], 3).unwrap()
    }

    pub fn semisimple(n: usize) -> BoundQuiverAlgebra {
        let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let q = Quiver::new::<String>(&labels, &[]).unwrap();
        BoundQuiverAlgebra::new(f2(), q, vec![], 1).unwrap()
    }
}
