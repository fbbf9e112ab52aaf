use crate::algebra::BoundQuiverAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{self, Matrix, Scalar};

use super::{Module, Morphism};

/// A direct sum with its structure maps.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub module: Module,
    pub parts: Vec<Module>,
    pub inclusions: Vec<Morphism>,
    pub projections: Vec<Morphism>,
}

/// `⊕ parts`, with summands laid out in order at every vertex.
pub fn direct_sum(parts: &[Module]) -> DirectSum {
    let alg = parts.first().expect("direct sum of an empty list needs an algebra").algebra().clone();
    DirectSum::of(&alg, parts)
}

impl DirectSum {
    pub fn of(algebra: &BoundQuiverAlgebra, parts: &[Module]) -> DirectSum {
        let f = algebra.field();
        let nv = algebra.num_vertices();
        let dims: Vec<usize> = (0..nv).map(|v| parts.iter().map(|p| p.dim_at(v)).sum()).collect();
        let maps = (0..algebra.quiver().arrows().len())
            .map(|a| {
                let blocks: Vec<&Matrix> = parts.iter().map(|p| p.arrow_map(a)).collect();
                Matrix::block_diag(f, &blocks)
            })
            .collect();
        let module = Module::from_parts(algebra.clone(), dims.clone(), maps);
        let mut inclusions = Vec::new();
        let mut projections = Vec::new();
        let mut offs = vec![0usize; nv];
        for p in parts {
            let mut inc = Vec::with_capacity(nv);
            let mut proj = Vec::with_capacity(nv);
            for v in 0..nv {
                let mut i = Matrix::zeros(f, dims[v], p.dim_at(v));
                let mut q = Matrix::zeros(f, p.dim_at(v), dims[v]);
                for k in 0..p.dim_at(v) {
                    i.set(offs[v] + k, k, 1);
                    q.set(k, offs[v] + k, 1);
                }
                offs[v] += p.dim_at(v);
                inc.push(i);
                proj.push(q);
            }
            inclusions.push(Morphism::from_parts(p, &module, inc));
            projections.push(Morphism::from_parts(&module, p, proj));
        }
        DirectSum { module, parts: parts.to_vec(), inclusions, projections }
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

/// The morphism `⊕_j dom_j → ⊕_i cod_i` with `(i, j)` entry `entry(i, j)` (zero when `None`).
pub fn block_morphism(
    dom: &DirectSum,
    cod: &DirectSum,
    mut entry: impl FnMut(usize, usize) -> Option<Morphism>,
) -> Morphism {
    let f = dom.module.field();
    let nv = dom.module.dims().len();
    let mut comps: Vec<Matrix> =
        (0..nv).map(|v| Matrix::zeros(f, cod.module.dim_at(v), dom.module.dim_at(v))).collect();
    let mut row_off = vec![0usize; nv];
    for (i, ci) in cod.parts.iter().enumerate() {
        let mut col_off = vec![0usize; nv];
        for (j, dj) in dom.parts.iter().enumerate() {
            if let Some(m) = entry(i, j) {
                assert!(m.domain() == dj && m.codomain() == ci, "block entry ({i}, {j}) has wrong ends");
                for v in 0..nv {
                    comps[v].put_block(row_off[v], col_off[v], m.component(v));
                }
            }
            for v in 0..nv {
                col_off[v] += dj.dim_at(v);
            }
        }
        for v in 0..nv {
            row_off[v] += ci.dim_at(v);
        }
    }
    Morphism::from_parts(&dom.module, &cod.module, comps)
}

impl Morphism {
    /// `[f₁ … f_n]: ⊕ dom fᵢ → Y`.
    pub fn row(codomain: &Module, fs: &[Morphism]) -> (DirectSum, Morphism) {
        let dom = DirectSum::of(codomain.algebra(), &fs.iter().map(|f| f.domain().clone()).collect::<Vec<_>>());
        let cod = DirectSum::of(codomain.algebra(), std::slice::from_ref(codomain));
        let m = block_morphism(&dom, &cod, |_, j| Some(fs[j].clone()));
        let m = Morphism::from_parts(&dom.module, codomain, m.components().to_vec());
        (dom, m)
    }

    /// `[f₁; …; f_n]: X → ⊕ cod fᵢ`.
    pub fn column(domain: &Module, fs: &[Morphism]) -> (DirectSum, Morphism) {
        let cod = DirectSum::of(domain.algebra(), &fs.iter().map(|f| f.codomain().clone()).collect::<Vec<_>>());
        let dom = DirectSum::of(domain.algebra(), std::slice::from_ref(domain));
        let m = block_morphism(&dom, &cod, |i, _| Some(fs[i].clone()));
        let m = Morphism::from_parts(domain, &cod.module, m.components().to_vec());
        (cod, m)
    }

    /// `f ⊕ g ⊕ …` between the direct sums of domains and codomains.
    pub fn diagonal(algebra: &BoundQuiverAlgebra, fs: &[Morphism]) -> (DirectSum, DirectSum, Morphism) {
        let dom = DirectSum::of(algebra, &fs.iter().map(|f| f.domain().clone()).collect::<Vec<_>>());
        let cod = DirectSum::of(algebra, &fs.iter().map(|f| f.codomain().clone()).collect::<Vec<_>>());
        let m = block_morphism(&dom, &cod, |i, j| (i == j).then(|| fs[i].clone()));
        (dom, cod, m)
    }

    /// Kernel object with its inclusion.
    pub fn kernel(&self) -> (Module, Morphism) {
        let x = self.domain();
        let subspaces: Vec<Matrix> = self.components().iter().map(Matrix::kernel_basis).collect();
        x.submodule(subspaces).expect("kernels are submodules")
    }

    /// Cokernel object with its projection.
    pub fn cokernel(&self) -> (Module, Morphism) {
        let y = self.codomain();
        let subspaces: Vec<Matrix> = self.components().iter().map(Matrix::image_basis).collect();
        y.quotient(subspaces).expect("images are submodules")
    }

    /// Image object together with the factorisation `self = inclusion ∘ epi`.
    pub fn image(&self) -> Image {
        let y = self.codomain();
        let subspaces: Vec<Matrix> = self.components().iter().map(Matrix::image_basis).collect();
        let (module, inclusion) = y.submodule(subspaces).expect("images are submodules");
        let epi = corestrict(self, &inclusion);
        Image { module, inclusion, epi }
    }
}

/// The image of a morphism and the two halves of its factorisation.
#[derive(Clone, Debug)]
pub struct Image {
    pub module: Module,
    pub inclusion: Morphism,
    pub epi: Morphism,
}

/// `φ` with `mono ∘ φ = f`, for `f` whose image lies in the image of `mono`.
pub(crate) fn corestrict(f: &Morphism, mono: &Morphism) -> Morphism {
    let comps = (0..f.components().len())
        .map(|v| mono.component(v).solve_many(f.component(v)).expect("image lies in the submodule"))
        .collect();
    Morphism::from_parts(f.domain(), mono.domain(), comps)
}

impl Module {
    /// Submodule spanned at each vertex by the given columns, with its inclusion.
    pub fn submodule(&self, subspaces: Vec<Matrix>) -> Result<(Module, Morphism)> {
        if subspaces.len() != self.dims().len() {
            return Err(Error::InvalidSubmodule("one subspace per vertex is required".into()));
        }
        let mut bases = Vec::with_capacity(subspaces.len());
        for (v, u) in subspaces.iter().enumerate() {
            if u.rows() != self.dim_at(v) {
                return Err(Error::InvalidSubmodule(format!("subspace at vertex {v} has the wrong ambient dimension")));
            }
            bases.push(u.image_basis());
        }
        let q = self.algebra().quiver();
        let mut maps = Vec::with_capacity(q.arrows().len());
        for (i, a) in q.arrows().iter().enumerate() {
            let moved = self.arrow_map(i).mul(&bases[a.source]);
            let m = bases[a.target].solve_many(&moved).ok_or_else(|| {
                Error::InvalidSubmodule(format!("subspaces are not closed under arrow {}", a.name))
            })?;
            maps.push(m);
        }
        let dims = bases.iter().map(Matrix::cols).collect();
        let sub = Module::from_parts(self.algebra().clone(), dims, maps);
        let incl = Morphism::from_parts(&sub, self, bases);
        Ok((sub, incl))
    }

    /// Quotient by the submodule spanned by the given columns, with the projection.
    pub fn quotient(&self, subspaces: Vec<Matrix>) -> Result<(Module, Morphism)> {
        let f = self.field();
        let (_, incl) = self.submodule(subspaces)?;
        let mut comps = Vec::new();
        let mut reps = Vec::new();
        for v in 0..self.dims().len() {
            let q = exactlin::quotient(&Matrix::identity(f, self.dim_at(v)), incl.component(v))?;
            comps.push(q.projection);
            reps.push(q.complement);
        }
        let qv = self.algebra().quiver();
        let maps = qv
            .arrows()
            .iter()
            .enumerate()
            .map(|(i, a)| comps[a.target].mul(self.arrow_map(i)).mul(&reps[a.source]))
            .collect();
        let dims = comps.iter().map(Matrix::rows).collect();
        let quot = Module::from_parts(self.algebra().clone(), dims, maps);
        let proj = Morphism::from_parts(self, &quot, comps);
        Ok((quot, proj))
    }

    /// Smallest submodule containing the given vectors (vertex, coordinates).
    pub fn generated_submodule(&self, gens: &[(usize, Vec<Scalar>)]) -> Result<(Module, Morphism)> {
        let f = self.field();
        let nv = self.dims().len();
        let mut spaces: Vec<Matrix> = (0..nv).map(|v| Matrix::zeros(f, self.dim_at(v), 0)).collect();
        let mut queue: Vec<(usize, Vec<Scalar>)> = Vec::new();
        for (v, x) in gens {
            if *v >= nv || x.len() != self.dim_at(*v) {
                return Err(Error::DimensionMismatch("generator outside the module".into()));
            }
            queue.push((*v, x.clone()));
        }
        let arrows = self.algebra().quiver().arrows().to_vec();
        while let Some((v, x)) = queue.pop() {
            if x.iter().all(|&c| c == 0) || exactlin::contains(&spaces[v], &x)? {
                continue;
            }
            let col = Matrix::column_vector(f, &x);
            spaces[v] = Matrix::hstack(f, self.dim_at(v), &[&spaces[v], &col]);
            for (i, a) in arrows.iter().enumerate() {
                if a.source == v {
                    queue.push((a.target, self.arrow_map(i).mul_vec(&x)));
                }
            }
        }
        self.submodule(spaces)
    }
}

/// `P` with maps to both ends of a cospan `A → C ← B`.
#[derive(Clone, Debug)]
pub struct Pullback {
    pub module: Module,
    pub to_left: Morphism,
    pub to_right: Morphism,
}

impl Pullback {
    /// Pullback of `f: A → C` along `g: B → C`.
    pub fn new(f: &Morphism, g: &Morphism) -> Pullback {
        assert!(f.codomain() == g.codomain(), "pullback needs a common codomain");
        let (sum, fg) = Morphism::row(f.codomain(), &[f.clone(), g.neg()]);
        let (module, incl) = fg.kernel();
        Pullback {
            to_left: sum.projections[0].compose(&incl),
            to_right: sum.projections[1].compose(&incl),
            module,
        }
    }
}

/// `Q` with maps from both ends of a span `B ← A → C`.
#[derive(Clone, Debug)]
pub struct Pushout {
    pub module: Module,
    pub from_left: Morphism,
    pub from_right: Morphism,
}

impl Pushout {
    /// Pushout of `f: A → B` and `g: A → C`.
    pub fn new(f: &Morphism, g: &Morphism) -> Pushout {
        assert!(f.domain() == g.domain(), "pushout needs a common domain");
        let (sum, fg) = Morphism::column(f.domain(), &[f.clone(), g.neg()]);
        let (module, proj) = fg.cokernel();
        Pushout {
            from_left: proj.compose(&sum.inclusions[0]),
            from_right: proj.compose(&sum.inclusions[1]),
            module,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;
    use crate::repcat::{are_isomorphic, hom_basis};

    #[test]
    fn kernel_of_identity_is_zero() {
        let alg = ka3_rad2();
        let p1 = Module::projective(&alg, 0);
        let (k, _) = Morphism::identity(&p1).kernel();
        assert!(k.is_zero());
        let im = Morphism::zero(&p1, &p1).image();
        assert!(im.module.is_zero());
    }

    #[test]
    fn cokernel_of_socle_inclusion() {
        let alg = ka2();
        let p1 = Module::projective(&alg, 0);
        let s2 = Module::simple(&alg, 1);
        let incl = hom_basis(&s2, &p1)[0].clone();
        let (c, proj) = incl.cokernel();
        assert!(are_isomorphic(&c, &Module::simple(&alg, 0)).unwrap());
        assert!(proj.compose(&incl).is_zero());
    }

    #[test]
    fn exactness_bookkeeping() {
        let alg = ka3();
        let p1 = Module::projective(&alg, 0);
        let p2 = Module::projective(&alg, 1);
        for f in hom_basis(&p2, &p1) {
            let (k, _) = f.kernel();
            let im = f.image();
            for v in 0..3 {
                assert_eq!(p2.dim_at(v), k.dim_at(v) + im.module.dim_at(v));
            }
            assert_eq!(im.inclusion.compose(&im.epi), f);
        }
    }

    #[test]
    fn invalid_submodule_is_reported() {
        let alg = ka2();
        let p1 = Module::projective(&alg, 0);
        let f = alg.field();
        let err = p1.submodule(vec![Matrix::identity(f, 1), Matrix::zeros(f, 1, 0)]).unwrap_err();
        assert_eq!(err.code(), "invalid_submodule");
    }

    #[test]
    fn generated_submodule_of_projective_top() {
        let alg = ka3();
        let p1 = Module::projective(&alg, 0);
        let (sub, _) = p1.generated_submodule(&[(0, vec![1])]).unwrap();
        assert_eq!(sub.dims(), p1.dims());
    }

    #[test]
    fn pullback_and_pushout_dims() {
        let alg = ka2();
        let p1 = Module::projective(&alg, 0);
        let s1 = Module::simple(&alg, 0);
        let pi = hom_basis(&p1, &s1)[0].clone();
        let pb = Pullback::new(&pi, &pi);
        assert_eq!(pb.module.dims(), &[1, 2]);
        assert_eq!(pi.compose(&pb.to_left), pi.compose(&pb.to_right));
        let s2 = Module::simple(&alg, 1);
        let incl = hom_basis(&s2, &p1)[0].clone();
        let po = Pushout::new(&incl, &incl);
        assert_eq!(po.module.dims(), &[2, 1]);
        assert_eq!(po.from_left.compose(&incl), po.from_right.compose(&incl));
    }

    #[test]
    fn row_and_column() {
        let alg = ka2();
        let p1 = Module::projective(&alg, 0);
        let id = Morphism::identity(&p1);
        let (sum, r) = Morphism::row(&p1, &[id.clone(), id.clone()]);
        assert_eq!(r.compose(&sum.inclusions[1]), id);
        let (sum, c) = Morphism::column(&p1, &[id.clone(), id.scale(0)]);
        assert_eq!(sum.projections[0].compose(&c), id);
        assert!(sum.projections[1].compose(&c).is_zero());
    }
}
