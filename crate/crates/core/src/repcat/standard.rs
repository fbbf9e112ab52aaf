use crate::algebra::BoundQuiverAlgebra;
use crate::exactlin::{self, Matrix};

use super::abelian::DirectSum;
use super::{Module, Morphism};

/// A projective cover `P ↠ X` with `P = ⊕ P_v` over the listed vertices.
#[derive(Clone, Debug)]
pub struct Cover {
    pub module: Module,
    pub epi: Morphism,
    pub vertices: Vec<usize>,
    pub sum: DirectSum,
}

/// An injective envelope `X ↪ I` with `I = ⊕ I_v` over the listed vertices.
#[derive(Clone, Debug)]
pub struct Envelope {
    pub module: Module,
    pub mono: Morphism,
    pub vertices: Vec<usize>,
}

impl Module {
    /// `P_v = e_v Λ`, with basis the residue paths starting at `v`.
    pub fn projective(algebra: &BoundQuiverAlgebra, v: usize) -> Module {
        let nv = algebra.num_vertices();
        let dims = (0..nv).map(|w| algebra.paths_between(v, w).len()).collect();
        let maps = (0..algebra.quiver().arrows().len())
            .map(|a| algebra.right_action(v, &algebra.arrow_path(a)))
            .collect();
        Module::from_parts(algebra.clone(), dims, maps)
    }

    /// `I_v = D(e_v Λ^op)`.
    pub fn injective(algebra: &BoundQuiverAlgebra, v: usize) -> Module {
        Module::projective(&algebra.opposite(), v).dual()
    }

    pub fn simple(algebra: &BoundQuiverAlgebra, v: usize) -> Module {
        let f = algebra.field();
        let nv = algebra.num_vertices();
        let dims: Vec<usize> = (0..nv).map(|w| usize::from(w == v)).collect();
        let maps = algebra
            .quiver()
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(f, dims[a.target], dims[a.source]))
            .collect();
        Module::from_parts(algebra.clone(), dims, maps)
    }

    /// `Λ_Λ = ⊕_v P_v`.
    pub fn regular(algebra: &BoundQuiverAlgebra) -> DirectSum {
        let parts: Vec<Module> = (0..algebra.num_vertices()).map(|v| Module::projective(algebra, v)).collect();
        DirectSum::of(algebra, &parts)
    }

    /// `D(Λ^op) = ⊕_v I_v`.
    pub fn coregular(algebra: &BoundQuiverAlgebra) -> DirectSum {
        let parts: Vec<Module> = (0..algebra.num_vertices()).map(|v| Module::injective(algebra, v)).collect();
        DirectSum::of(algebra, &parts)
    }

    /// Per-vertex bases of `X · rad Λ`, the sum of the images of all arrows.
    fn radical_spaces(&self) -> Vec<Matrix> {
        let f = self.field();
        let q = self.algebra().quiver();
        (0..self.dims().len())
            .map(|v| {
                let images: Vec<&Matrix> =
                    q.arrows().iter().enumerate().filter(|(_, a)| a.target == v).map(|(i, _)| self.arrow_map(i)).collect();
                Matrix::hstack(f, self.dim_at(v), &images).image_basis()
            })
            .collect()
    }

    pub fn radical(&self) -> (Module, Morphism) {
        self.submodule(self.radical_spaces()).expect("the radical is a submodule")
    }

    pub fn top(&self) -> (Module, Morphism) {
        self.quotient(self.radical_spaces()).expect("the radical is a submodule")
    }

    /// Elements killed by every arrow.
    pub fn socle(&self) -> (Module, Morphism) {
        let f = self.field();
        let q = self.algebra().quiver();
        let spaces = (0..self.dims().len())
            .map(|v| {
                let outgoing: Vec<&Matrix> =
                    q.arrows().iter().enumerate().filter(|(_, a)| a.source == v).map(|(i, _)| self.arrow_map(i)).collect();
                Matrix::vstack(f, self.dim_at(v), &outgoing).kernel_basis()
            })
            .collect();
        self.submodule(spaces).expect("the socle is a submodule")
    }

    /// Multiplicity of each simple in the top.
    pub fn top_dims(&self) -> Vec<usize> {
        self.radical_spaces().iter().enumerate().map(|(v, r)| self.dim_at(v) - r.cols()).collect()
    }

    pub fn is_semisimple(&self) -> bool {
        self.radical_spaces().iter().all(|r| r.cols() == 0)
    }

    pub fn is_projective(&self) -> bool {
        let cover = self.projective_cover();
        cover.module.dim() == self.dim()
    }

    pub fn is_injective(&self) -> bool {
        self.dual().is_projective()
    }

    /// The map `P_v → X` sending `e_v` to `x ∈ X e_v`.
    pub fn map_from_projective(&self, v: usize, x: &[exactlin::Scalar]) -> Morphism {
        let alg = self.algebra();
        let f = self.field();
        let pv = Module::projective(alg, v);
        let comps = (0..self.dims().len())
            .map(|w| {
                let cols: Vec<Vec<exactlin::Scalar>> = alg
                    .paths_between(v, w)
                    .iter()
                    .map(|&b| self.path_action(&alg.path_basis()[b]).mul_vec(x))
                    .collect();
                Matrix::from_columns(f, self.dim_at(w), &cols)
            })
            .collect();
        Morphism::from_parts(&pv, self, comps)
    }

    pub fn projective_cover(&self) -> Cover {
        let f = self.field();
        let alg = self.algebra();
        let rad = self.radical_spaces();
        let mut vertices = Vec::new();
        let mut maps = Vec::new();
        for (v, r) in rad.iter().enumerate() {
            let q = exactlin::quotient(&Matrix::identity(f, self.dim_at(v)), r).expect("same ambient space");
            for x in q.complement.columns() {
                vertices.push(v);
                maps.push(self.map_from_projective(v, &x));
            }
        }
        let (sum, epi) = if maps.is_empty() {
            let sum = DirectSum::of(alg, &[]);
            let epi = Morphism::zero(&sum.module, self);
            (sum, epi)
        } else {
            Morphism::row(self, &maps)
        };
        debug_assert!(epi.is_epi());
        Cover { module: sum.module.clone(), epi, vertices, sum }
    }

    pub fn injective_envelope(&self) -> Envelope {
        let cover = self.dual().projective_cover();
        Envelope { module: cover.module.dual(), mono: cover.epi.dual(), vertices: cover.vertices }
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;
    use crate::repcat::are_isomorphic;

    #[test]
    fn projectives_of_ka3_rad2() {
        let alg = ka3_rad2();
        assert_eq!(Module::projective(&alg, 2), Module::simple(&alg, 2));
        assert_eq!(Module::projective(&alg, 1).dims(), &[0, 1, 1]);
        assert!(are_isomorphic(&Module::injective(&alg, 0), &Module::simple(&alg, 0)).unwrap());
        assert_eq!(Module::regular(&alg).module.dim(), alg.dim());
    }

    #[test]
    fn radical_top_socle() {
        let alg = ka2();
        let (r, _) = Module::projective(&alg, 0).radical();
        assert_eq!(r.dims(), &[0, 1]);
        assert!(Module::radical(&Module::simple(&alg, 0)).0.is_zero());
        let (t, _) = Module::projective(&alg, 0).top();
        assert_eq!(t.dims(), &[1, 0]);
        let alg = ka3_rad2();
        let (s, _) = Module::projective(&alg, 1).socle();
        assert!(are_isomorphic(&s, &Module::simple(&alg, 2)).unwrap());
    }

    #[test]
    fn socle_matches_dual_top() {
        let alg = ka3();
        for v in 0..3 {
            let x = Module::injective(&alg, v);
            let soc = x.socle().0;
            let top_dual = x.dual().top().0.dual();
            assert_eq!(soc.dims(), top_dual.dims());
        }
    }

    #[test]
    fn covers_and_envelopes() {
        let alg = ka2();
        let p1 = Module::projective(&alg, 0);
        let c = p1.projective_cover();
        assert_eq!(c.vertices, vec![0]);
        assert!(c.epi.is_iso());
        let c = Module::simple(&alg, 0).projective_cover();
        assert!(are_isomorphic(&c.module, &p1).unwrap());
        let alg = ka3_rad2();
        let e = Module::simple(&alg, 2).injective_envelope();
        assert!(are_isomorphic(&e.module, &Module::projective(&alg, 1)).unwrap());
        assert!(e.mono.is_mono());
    }

    #[test]
    fn projectivity_tests() {
        let alg = ka3_rad2();
        assert!(Module::projective(&alg, 1).is_projective());
        assert!(!Module::simple(&alg, 1).is_projective());
        assert!(Module::projective(&alg, 1).is_injective());
        assert!(!Module::projective(&alg, 2).is_injective());
    }
}
