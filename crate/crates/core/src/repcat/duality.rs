use super::{Module, Morphism};

impl Module {
    /// The vector-space dual `DX = Hom_k(X, k)`, a right module over the opposite algebra.
    ///
    /// Dual bases are used throughout, so arrow maps are transposed and
    /// `D(D(X)) == X` holds on the nose.
    pub fn dual(&self) -> Module {
        let maps = self.arrow_maps().iter().map(|m| m.transpose()).collect();
        Module::from_parts(self.algebra().opposite(), self.dims().to_vec(), maps)
    }
}

impl Morphism {
    /// `D(f): DY → DX` for `f: X → Y`.
    pub fn dual(&self) -> Morphism {
        let comps = self.components().iter().map(|m| m.transpose()).collect();
        Morphism::from_parts(&self.codomain().dual(), &self.domain().dual(), comps)
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;
    use crate::repcat::{are_isomorphic, hom_dim};

    #[test]
    fn dual_of_simple_is_simple() {
        let alg = ka3_rad2();
        for v in 0..3 {
            let ds = Module::simple(&alg, v).dual();
            assert_eq!(ds, Module::simple(&alg.opposite(), v));
        }
    }

    #[test]
    fn dual_of_projective_is_injective_over_opposite() {
        let alg = ka2();
        let dp = Module::projective(&alg, 0).dual();
        assert_eq!(dp.dims(), &[1, 1]);
        assert!(are_isomorphic(&dp, &Module::injective(&alg.opposite(), 0)).unwrap());
    }

    #[test]
    fn duality_preserves_hom_dims() {
        let alg = ka2();
        let mods = [Module::projective(&alg, 0), Module::simple(&alg, 0), Module::simple(&alg, 1)];
        for x in &mods {
            for y in &mods {
                assert_eq!(hom_dim(x, y), hom_dim(&y.dual(), &x.dual()));
            }
            assert_eq!(&x.dual().dual(), x);
        }
    }
}
