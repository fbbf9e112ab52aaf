use crate::exactlin::{Coordinates, Matrix, Scalar};

use super::{Module, Morphism};

/// Matrix of the intertwining system whose null space is `Hom(X, Y)`,
/// with unknowns laid out as in [`Morphism::flatten`].
fn intertwining_system(x: &Module, y: &Module) -> Matrix {
    let f = x.field();
    let q = x.algebra().quiver();
    let nv = x.dims().len();
    let mut off = vec![0; nv + 1];
    for v in 0..nv {
        off[v + 1] = off[v] + y.dim_at(v) * x.dim_at(v);
    }
    let nvars = off[nv];
    let neqs: usize = q.arrows().iter().map(|a| y.dim_at(a.target) * x.dim_at(a.source)).sum();
    let mut sys = Matrix::zeros(f, neqs, nvars);
    let mut row = 0;
    for (ai, a) in q.arrows().iter().enumerate() {
        let (s, t) = (a.source, a.target);
        let xa = x.arrow_map(ai);
        let ya = y.arrow_map(ai);
        let (dxs, dxt, dys) = (x.dim_at(s), x.dim_at(t), y.dim_at(s));
        for i in 0..y.dim_at(t) {
            for j in 0..dxs {
                // (φ_t X_a)[i, j] - (Y_a φ_s)[i, j]
                for k in 0..dxt {
                    let c = xa.get(k, j);
                    if c != 0 {
                        let var = off[t] + i * dxt + k;
                        sys.set(row, var, f.add(sys.get(row, var), c));
                    }
                }
                for k in 0..dys {
                    let c = ya.get(i, k);
                    if c != 0 {
                        let var = off[s] + k * dxs + j;
                        sys.set(row, var, f.sub(sys.get(row, var), c));
                    }
                }
                row += 1;
            }
        }
    }
    sys
}

/// A basis of `Hom(X, Y)` in a deterministic order.
pub fn hom_basis(x: &Module, y: &Module) -> Vec<Morphism> {
    HomSpace::new(x, y).basis
}

pub fn hom_dim(x: &Module, y: &Module) -> usize {
    if Morphism::flat_len(x, y) == 0 {
        return 0;
    }
    let sys = intertwining_system(x, y);
    sys.cols() - sys.rank()
}

/// `Hom(X, Y)` with a fixed basis and coordinates with respect to it.
#[derive(Clone, Debug)]
pub struct HomSpace {
    domain: Module,
    codomain: Module,
    basis: Vec<Morphism>,
    coords: Coordinates,
}

impl HomSpace {
    pub fn new(x: &Module, y: &Module) -> HomSpace {
        assert!(x.algebra() == y.algebra(), "hom space between modules over different algebras");
        let kernel = intertwining_system(x, y).kernel_basis();
        let basis = (0..kernel.cols()).map(|j| Morphism::from_flat(x, y, &kernel.column(j))).collect();
        HomSpace { domain: x.clone(), codomain: y.clone(), basis, coords: Coordinates::new(kernel) }
    }

    pub fn domain(&self) -> &Module {
        &self.domain
    }

    pub fn codomain(&self) -> &Module {
        &self.codomain
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Morphism] {
        &self.basis
    }

    /// Basis morphisms as flattened columns.
    pub fn matrix(&self) -> &Matrix {
        self.coords.basis()
    }

    pub fn element(&self, coeffs: &[Scalar]) -> Morphism {
        assert_eq!(coeffs.len(), self.dim());
        let flat = self.matrix().mul_vec(coeffs);
        Morphism::from_flat(&self.domain, &self.codomain, &flat)
    }

    pub fn coords(&self, f: &Morphism) -> Vec<Scalar> {
        self.coords.coords(&f.flatten())
    }

    /// Coordinates of a matrix tuple, or `None` when it is not a module map.
    pub fn coords_of_flat(&self, flat: &[Scalar]) -> Option<Vec<Scalar>> {
        self.coords.coords_checked(flat)
    }

    /// Elements given by the columns of a coordinate matrix.
    pub fn elements(&self, coords: &Matrix) -> Vec<Morphism> {
        (0..coords.cols()).map(|j| self.element(&coords.column(j))).collect()
    }
}

/// Flattened columns `g ∘ b` for a list of morphisms `b`.
pub(crate) fn flat_columns(ms: &[Morphism], nrows: usize, field: crate::exactlin::Field) -> Matrix {
    let cols: Vec<Vec<Scalar>> = ms.iter().map(Morphism::flatten).collect();
    Matrix::from_columns(field, nrows, &cols)
}

/// Some `φ: X → Y` with `g ∘ φ = h`, where `h: X → Z` and `g: Y → Z`.
pub fn factor_through(h: &Morphism, g: &Morphism) -> Option<Morphism> {
    assert!(h.codomain() == g.codomain(), "factorization through a map with another codomain");
    let x = h.domain();
    let y = g.domain();
    let hom = HomSpace::new(x, y);
    let images: Vec<Morphism> = hom.basis().iter().map(|b| g.compose(b)).collect();
    let m = flat_columns(&images, Morphism::flat_len(x, h.codomain()), x.field());
    let c = m.solve(&h.flatten()).expect("shapes agree")?;
    Some(hom.element(&c))
}

/// Some `ψ: Y → Z` with `ψ ∘ f = h`, where `h: X → Z` and `f: X → Y`.
pub fn factor_through_left(h: &Morphism, f: &Morphism) -> Option<Morphism> {
    assert!(h.domain() == f.domain(), "factorization through a map with another domain");
    let y = f.codomain();
    let z = h.codomain();
    let hom = HomSpace::new(y, z);
    let images: Vec<Morphism> = hom.basis().iter().map(|b| b.compose(f)).collect();
    let m = flat_columns(&images, Morphism::flat_len(f.domain(), z), z.field());
    let c = m.solve(&h.flatten()).expect("shapes agree")?;
    Some(hom.element(&c))
}
