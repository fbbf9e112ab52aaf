//! Minimal projective resolutions and the functors built from them:
//! syzygies, Ext, Tor and tensor products, the transpose `Tr`, its higher
//! version `Tr_d = Tr Ω^{d-1}`, the translates `τ_d = D Tr_d` and
//! `τ_d⁻ = Tr_d D`, stable hom spaces, and projective/global dimension.
//!
//! `Tr X` is the cokernel of `Hom(P₀, Λ) → Hom(P₁, Λ)` for a minimal
//! presentation `P₁ → P₀ → X`. The identification `Hom(e_vΛ, Λ) ≅ Λe_v`,
//! `ψ ↦ ψ(e_v)`, turns `Hom(P_v, Λ)` into the projective `e_vΛ^op` of the
//! opposite algebra, and a component `e_w ↦ λ` of the presentation into left
//! multiplication by the reversed element `λ^op`.

use crate::algebra::{unit_vec, BoundQuiverAlgebra, Path};
use crate::error::{Error, Result};
use crate::exactlin::{self, Matrix, Scalar};
use crate::repcat::{DirectSum, HomSpace, Module, Morphism};

/// A minimal projective resolution `⋯ → P₁ → P₀ → X → 0`, possibly truncated.
#[derive(Clone, Debug)]
pub struct ProjResolution {
    pub target: Module,
    /// `terms[i] = P_i` as a direct sum of indecomposable projectives.
    pub terms: Vec<DirectSum>,
    /// Vertices of the indecomposable projectives making up each term.
    pub vertices: Vec<Vec<usize>>,
    pub augmentation: Morphism,
    /// `differentials[i]: P_{i+1} → P_i`.
    pub differentials: Vec<Morphism>,
    /// `syzygies[i] = Ω^{i+1} X` with its inclusion into `P_i`.
    pub syzygies: Vec<(Module, Morphism)>,
}

impl ProjResolution {
    /// Whether the resolution reaches a zero kernel.
    pub fn is_complete(&self) -> bool {
        self.syzygies.last().map_or(true, |(k, _)| k.is_zero())
    }

    /// `P_i`, or the zero module past the computed range.
    pub fn term(&self, i: usize) -> Module {
        match self.terms.get(i) {
            Some(t) => t.module.clone(),
            None => Module::zero(self.target.algebra()),
        }
    }

    /// `d_i: P_i → P_{i-1}` for `i ≥ 1`, zero past the computed range.
    pub fn differential(&self, i: usize) -> Morphism {
        assert!(i >= 1);
        match self.differentials.get(i - 1) {
            Some(d) => d.clone(),
            None => Morphism::zero(&self.term(i), &self.term(i - 1)),
        }
    }

    /// Length of the resolution when complete.
    pub fn length(&self) -> Option<usize> {
        self.is_complete().then(|| self.terms.iter().rposition(|t| !t.module.is_zero()).unwrap_or(0))
    }
}

/// Minimal projective resolution with terms `P₀, …, P_n` (fewer if it terminates).
pub fn min_proj_resolution(x: &Module, n: usize) -> ProjResolution {
    let cover = x.projective_cover();
    let mut terms = vec![cover.sum.clone()];
    let mut vertices = vec![cover.vertices.clone()];
    let mut differentials = Vec::new();
    let mut syzygies = Vec::new();
    let mut current = cover.epi.clone();
    loop {
        let (k, incl) = current.kernel();
        syzygies.push((k.clone(), incl.clone()));
        if k.is_zero() || terms.len() > n {
            break;
        }
        let c = k.projective_cover();
        differentials.push(incl.compose(&c.epi));
        terms.push(c.sum);
        vertices.push(c.vertices);
        current = c.epi;
    }
    ProjResolution { target: x.clone(), terms, vertices, augmentation: cover.epi, differentials, syzygies }
}

/// `Ω^k X`.
pub fn syzygy(x: &Module, k: usize) -> Module {
    let mut m = x.clone();
    for _ in 0..k {
        if m.is_zero() {
            break;
        }
        m = m.projective_cover().epi.kernel().0;
    }
    m
}

/// Rank of `Hom(d, Y)`: precomposition with `d: A → B`, from `Hom(B, Y)` to `Hom(A, Y)`.
fn precompose_rank(d: &Morphism, y: &Module) -> usize {
    let hom = HomSpace::new(d.codomain(), y);
    if hom.dim() == 0 {
        return 0;
    }
    let cols: Vec<Vec<Scalar>> = hom.basis().iter().map(|b| b.compose(d).flatten()).collect();
    Matrix::from_columns(y.field(), Morphism::flat_len(d.domain(), y), &cols).rank()
}

pub fn ext_dim(i: usize, x: &Module, y: &Module) -> usize {
    if i == 0 {
        return crate::repcat::hom_dim(x, y);
    }
    let res = min_proj_resolution(x, i + 1);
    let pi = res.term(i);
    let hom_dim = crate::repcat::hom_dim(&pi, y);
    if hom_dim == 0 {
        return 0;
    }
    hom_dim - precompose_rank(&res.differential(i + 1), y) - precompose_rank(&res.differential(i), y)
}

/// `λ ↦ μ·λ` as a map `P_v → P_w` for `μ ∈ e_w Λ e_v`.
pub fn left_multiplication(alg: &BoundQuiverAlgebra, mu: &[Scalar], v: usize, w: usize) -> Morphism {
    let f = alg.field();
    let pv = Module::projective(alg, v);
    let pw = Module::projective(alg, w);
    let comps = (0..alg.num_vertices())
        .map(|u| {
            let from = alg.paths_between(v, u);
            let to = alg.paths_between(w, u);
            let mut m = Matrix::zeros(f, to.len(), from.len());
            for (c, &b) in from.iter().enumerate() {
                let prod = alg.multiply(mu, &unit_vec(alg.dim(), b)).expect("coordinates have algebra dimension");
                for (r, &t) in to.iter().enumerate() {
                    m.set(r, c, prod[t]);
                }
            }
            m
        })
        .collect();
    Morphism::new(&pv, &pw, comps).expect("left multiplication is a module map")
}

/// Coordinates over the opposite algebra of the reversal of `λ`.
fn opposite_element(alg: &BoundQuiverAlgebra, lambda: &[Scalar]) -> Vec<Scalar> {
    let op = alg.opposite();
    let f = alg.field();
    let mut out = vec![0; op.dim()];
    for (i, &c) in lambda.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let rev = alg.opposite_path(&alg.path_basis()[i]);
        for (o, t) in out.iter_mut().zip(op.path_coords(&rev)) {
            *o = f.add(*o, f.mul(c, t));
        }
    }
    out
}

/// Element `d(e_w) ∈ e_v Λ e_w` for a map `d: P_w → P_v`, as algebra coordinates.
fn generator_image(alg: &BoundQuiverAlgebra, d: &Morphism, v: usize, w: usize) -> Vec<Scalar> {
    let trivial = alg.basis_index(&Path::trivial(w)).expect("idempotents are basis elements");
    let col = alg.paths_between(w, w).iter().position(|&b| b == trivial).expect("e_w lies in P_w");
    let image = d.component(w).column(col);
    let mut out = vec![0; alg.dim()];
    for (k, &b) in alg.paths_between(v, w).iter().enumerate() {
        out[b] = image[k];
    }
    out
}

/// The map `Hom(P₀, Λ) → Hom(P₁, Λ)` realised between projectives of the opposite algebra.
pub fn dual_presentation_map(res: &ProjResolution) -> Morphism {
    let alg = res.target.algebra();
    let op = alg.opposite();
    let p0 = &res.vertices[0];
    let p1: &[usize] = res.vertices.get(1).map_or(&[], |v| v.as_slice());
    let dom = DirectSum::of(&op, &p0.iter().map(|&v| Module::projective(&op, v)).collect::<Vec<_>>());
    let cod = DirectSum::of(&op, &p1.iter().map(|&w| Module::projective(&op, w)).collect::<Vec<_>>());
    let d1 = res.differential(1);
    let t0 = &res.terms[0];
    let t1 = res.terms.get(1);
    crate::repcat::block_morphism(&dom, &cod, |j, k| {
        let t1 = t1.expect("a codomain entry exists only when P₁ does");
        let piece = t0.projections[k].compose(&d1).compose(&t1.inclusions[j]);
        let lambda = generator_image(alg, &piece, p0[k], p1[j]);
        Some(left_multiplication(&op, &opposite_element(alg, &lambda), p0[k], p1[j]))
    })
}

/// The Auslander–Bridger transpose, a module over the opposite algebra.
pub fn transpose(x: &Module) -> Module {
    if x.is_zero() {
        return Module::zero(&x.algebra().opposite());
    }
    let res = min_proj_resolution(x, 1);
    dual_presentation_map(&res).cokernel().0
}

/// `Tr_d X = Tr Ω^{d-1} X`.
pub fn tr_d(x: &Module, d: usize) -> Module {
    assert!(d >= 1, "d must be at least 1");
    transpose(&syzygy(x, d - 1))
}

/// `τ_d X = D Tr_d X`.
pub fn tau_d(x: &Module, d: usize) -> Module {
    tr_d(x, d).dual()
}

/// `τ_d⁻ X = Tr_d D X`.
pub fn tau_d_minus(x: &Module, d: usize) -> Module {
    tr_d(&x.dual(), d)
}

/// `X ⊗_Λ Y` for a right module `X` and a right module `Y` over the opposite algebra.
#[derive(Clone, Debug)]
pub struct Tensor {
    left: Module,
    right: Module,
    /// Offsets of the blocks `X e_v ⊗ e_v Y` in the ambient space.
    offsets: Vec<usize>,
    quotient: exactlin::Quotient,
}

impl Tensor {
    pub fn new(x: &Module, y: &Module) -> Result<Tensor> {
        if y.algebra() != &x.algebra().opposite() {
            return Err(Error::invalid("tensor product needs a module over the opposite algebra on the right"));
        }
        let f = x.field();
        let nv = x.dims().len();
        let mut offsets = vec![0; nv + 1];
        for v in 0..nv {
            offsets[v + 1] = offsets[v] + x.dim_at(v) * y.dim_at(v);
        }
        let ambient = offsets[nv];
        // x·a ⊗ y - x ⊗ a·y for x at s(a) and y at t(a).
        let mut rels: Vec<Vec<Scalar>> = Vec::new();
        for (ai, a) in x.algebra().quiver().arrows().iter().enumerate() {
            let (s, t) = (a.source, a.target);
            let xa = x.arrow_map(ai);
            let ya = y.arrow_map(ai);
            for i in 0..x.dim_at(s) {
                for j in 0..y.dim_at(t) {
                    let mut r = vec![0; ambient];
                    for k in 0..x.dim_at(t) {
                        let idx = offsets[t] + k * y.dim_at(t) + j;
                        r[idx] = f.add(r[idx], xa.get(k, i));
                    }
                    for k in 0..y.dim_at(s) {
                        let idx = offsets[s] + i * y.dim_at(s) + k;
                        r[idx] = f.sub(r[idx], ya.get(k, j));
                    }
                    rels.push(r);
                }
            }
        }
        let span = Matrix::from_columns(f, ambient, &rels);
        let quotient = exactlin::quotient(&Matrix::identity(f, ambient), &span)?;
        Ok(Tensor { left: x.clone(), right: y.clone(), offsets, quotient })
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    /// Matrix of `f ⊗ Y` from `self` (with left factor `dom f`) to `target`.
    pub fn map_to(&self, f: &Morphism, target: &Tensor) -> Matrix {
        assert!(f.domain() == &self.left && f.codomain() == &target.left && self.right == target.right);
        let field = f.domain().field();
        let nv = self.offsets.len() - 1;
        let mut ambient = Matrix::zeros(field, target.offsets[nv], self.offsets[nv]);
        for v in 0..nv {
            let dy = self.right.dim_at(v);
            let fv = f.component(v);
            for r in 0..fv.rows() {
                for c in 0..fv.cols() {
                    let x = fv.get(r, c);
                    if x == 0 {
                        continue;
                    }
                    for j in 0..dy {
                        ambient.set(target.offsets[v] + r * dy + j, self.offsets[v] + c * dy + j, x);
                    }
                }
            }
        }
        target.quotient.projection.mul(&ambient).mul(&self.quotient.complement)
    }
}

pub fn tensor_dim(x: &Module, y: &Module) -> Result<usize> {
    Ok(Tensor::new(x, y)?.dim())
}

pub fn tor_dim(i: usize, x: &Module, y: &Module) -> Result<usize> {
    let res = min_proj_resolution(x, i + 1);
    let ti = Tensor::new(&res.term(i), y)?;
    if ti.dim() == 0 {
        return Ok(0);
    }
    let out_rank = if i == 0 {
        0
    } else {
        let prev = Tensor::new(&res.term(i - 1), y)?;
        ti.map_to(&res.differential(i), &prev).rank()
    };
    let next = Tensor::new(&res.term(i + 1), y)?;
    let in_rank = next.map_to(&res.differential(i + 1), &ti).rank();
    Ok(ti.dim() - out_rank - in_rank)
}

/// A hom space modulo an ideal of morphisms factoring through projectives or injectives.
#[derive(Clone, Debug)]
pub struct StableHomSpace {
    pub ambient: HomSpace,
    /// Coordinates (columns) of a basis of the ideal.
    pub ideal: Matrix,
}

impl StableHomSpace {
    pub fn dim(&self) -> usize {
        self.ambient.dim() - self.ideal.cols()
    }

    pub fn ideal_dim(&self) -> usize {
        self.ideal.cols()
    }

    pub fn contains(&self, f: &Morphism) -> bool {
        let c = self.ambient.coords(f);
        exactlin::contains(&self.ideal, &c).expect("coordinates match")
    }
}

/// `Hom(X, Y)` modulo maps factoring through a projective.
///
/// Any map `X → Q → Y` with `Q` projective lifts through the projective cover of `Y`,
/// so the ideal is the image of `Hom(X, P_Y)`.
pub fn stable_hom(x: &Module, y: &Module) -> StableHomSpace {
    let ambient = HomSpace::new(x, y);
    let cover = y.projective_cover();
    let through = HomSpace::new(x, &cover.module);
    let cols: Vec<Vec<Scalar>> = through.basis().iter().map(|h| ambient.coords(&cover.epi.compose(h))).collect();
    let ideal = Matrix::from_columns(x.field(), ambient.dim(), &cols).image_basis();
    StableHomSpace { ambient, ideal }
}

/// `Hom(X, Y)` modulo maps factoring through an injective.
pub fn costable_hom(x: &Module, y: &Module) -> StableHomSpace {
    let ambient = HomSpace::new(x, y);
    let env = x.injective_envelope();
    let through = HomSpace::new(&env.module, y);
    let cols: Vec<Vec<Scalar>> = through.basis().iter().map(|h| ambient.coords(&h.compose(&env.mono))).collect();
    let ideal = Matrix::from_columns(x.field(), ambient.dim(), &cols).image_basis();
    StableHomSpace { ambient, ideal }
}

/// Projective dimension, or `CapExceeded` when no resolution of length up to the cap terminates.
pub fn pd(x: &Module) -> Result<usize> {
    let cap = x.algebra().limits().resolution_cap;
    let mut m = x.clone();
    for k in 0..=cap {
        let c = m.projective_cover();
        let (next, _) = c.epi.kernel();
        if next.is_zero() {
            return Ok(k);
        }
        m = next;
    }
    Err(Error::cap(format!("projective resolution longer than {cap}")))
}

pub fn gldim(alg: &BoundQuiverAlgebra) -> Result<usize> {
    let mut best = 0;
    for v in 0..alg.num_vertices() {
        best = best.max(pd(&Module::simple(alg, v))?);
    }
    Ok(best)
}
