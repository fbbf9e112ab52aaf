//! d-rigidity, cluster-tilting certification and the numerical faces of the
//! higher Auslander–Reiten theorems.

mod determined;

pub use determined::{
    d_almost_split, determined_morphism, enumerate_end_submodules, factorization_check, is_right_determined,
    maximal_valid_submodule, right_almost_split, right_determined_failure, right_determiner_check, DeterminedWitness,
    DeterminerReport, EndSubmodule, FactorizationReport,
};

use crate::algebra::BoundQuiverAlgebra;
use crate::approx::AddCategory;
use crate::dexact::{defect_contravariant, defect_covariant, DSequence};
use crate::error::{Error, Result};
use crate::exactlin::{self, Matrix};
use crate::homological::{costable_hom, ext_dim, pd, stable_hom, tau_d, tau_d_minus, tor_dim, tr_d, Tensor};
use crate::repcat::{self, Module};

/// Every indecomposable of total dimension at most `bound`, one per isomorphism class.
///
/// Ordered by total dimension, then by dimension vector (descending
/// lexicographically), then by discovery order.
pub fn enumerate_indecomposables(alg: &BoundQuiverAlgebra, bound: usize) -> Result<Vec<Module>> {
    let field = alg.field();
    let n = alg.num_vertices();
    let cap = alg.limits().search_cap as u128;
    let mut spent: u128 = 0;
    let mut found: Vec<Module> = Vec::new();
    for total in 1..=bound {
        let mut vectors = Vec::new();
        compositions(total, n, &mut Vec::new(), &mut vectors);
        vectors.sort_by(|a, b| b.cmp(a));
        for dims in vectors {
            let shapes: Vec<(usize, usize)> =
                alg.quiver().arrows().iter().map(|a| (dims[a.target], dims[a.source])).collect();
            let entries: usize = shapes.iter().map(|(r, c)| r * c).sum();
            spent += exactlin::field_power(field, entries);
            if spent > cap {
                return Err(Error::cap(format!("enumerating modules of dimension {total} exceeds the budget")));
            }
            let start = found.len();
            for values in exactlin::all_vectors(field, entries) {
                let mut at = 0;
                let maps: Vec<Matrix> = shapes
                    .iter()
                    .map(|&(r, c)| {
                        let m = Matrix::from_vec(field, r, c, values[at..at + r * c].to_vec());
                        at += r * c;
                        m
                    })
                    .collect();
                let Ok(m) = Module::new(alg, dims.clone(), maps) else { continue };
                if !repcat::is_indecomposable(&m)? {
                    continue;
                }
                let mut seen = false;
                for other in &found[start..] {
                    if repcat::are_isomorphic(other, &m)? {
                        seen = true;
                        break;
                    }
                }
                if !seen {
                    found.push(m);
                }
            }
        }
    }
    Ok(found)
}

fn compositions(total: usize, parts: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if prefix.len() + 1 == parts {
        prefix.push(total);
        out.push(prefix.clone());
        prefix.pop();
        return;
    }
    for k in 0..=total {
        prefix.push(k);
        compositions(total - k, parts, prefix, out);
        prefix.pop();
    }
}

/// `ext[i − 1][a][b] = dim Ext^i(G_a, G_b)` for `1 ≤ i ≤ d − 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RigidityReport {
    pub d: usize,
    pub ext: Vec<Vec<Vec<usize>>>,
    /// First `(i, a, b)` with `Ext^i(G_a, G_b) ≠ 0`.
    pub witness: Option<(usize, usize, usize)>,
}

impl RigidityReport {
    pub fn is_rigid(&self) -> bool {
        self.witness.is_none()
    }
}

pub fn d_rigidity(c: &AddCategory, d: usize) -> RigidityReport {
    let gens = c.generators();
    let mut ext = Vec::new();
    let mut witness = None;
    for i in 1..d {
        let table: Vec<Vec<usize>> =
            gens.iter().map(|a| gens.iter().map(|b| ext_dim(i, a, b)).collect()).collect();
        if witness.is_none() {
            'find: for (a, row) in table.iter().enumerate() {
                for (b, &e) in row.iter().enumerate() {
                    if e != 0 {
                        witness = Some((i, a, b));
                        break 'find;
                    }
                }
            }
        }
        ext.push(table);
    }
    RigidityReport { d, ext, witness }
}

pub fn is_d_rigid(c: &AddCategory, d: usize) -> bool {
    d_rigidity(c, d).is_rigid()
}

/// Why a universe object lies outside one of the orthogonal categories:
/// `(generator, degree)` of a nonvanishing `Ext^i(X, G)` (left) or `Ext^i(G, X)` (right).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthogonalityWitness {
    pub object: usize,
    pub left: Option<(usize, usize)>,
    pub right: Option<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClusterTiltingReport {
    pub d: usize,
    pub universe_size: usize,
    /// Generator isomorphic to each universe object, if any.
    pub membership: Vec<Option<usize>>,
    /// Generators with no isomorphic copy in the universe.
    pub unmatched_generators: Vec<usize>,
    pub rigidity: RigidityReport,
    pub generating: bool,
    pub cogenerating: bool,
    pub witnesses: Vec<OrthogonalityWitness>,
    /// Universe objects where membership and left orthogonality disagree.
    pub left_mismatches: Vec<usize>,
    /// Universe objects where membership and right orthogonality disagree.
    pub right_mismatches: Vec<usize>,
    pub verdict: bool,
}

/// Compares `add M` with `{X : Ext^i(X, M) = 0}` and `{X : Ext^i(M, X) = 0}` (`0 < i < d`) over `universe`.
pub fn cluster_tilting_report(c: &AddCategory, d: usize, universe: &[Module]) -> Result<ClusterTiltingReport> {
    let gens = c.generators();
    let mut membership = Vec::with_capacity(universe.len());
    for x in universe {
        membership.push(c.index_of(x)?);
    }
    let unmatched_generators: Vec<usize> =
        (0..gens.len()).filter(|g| !membership.contains(&Some(*g))).collect();
    let mut witnesses = Vec::new();
    let mut left_mismatches = Vec::new();
    let mut right_mismatches = Vec::new();
    for (xi, x) in universe.iter().enumerate() {
        let first_nonzero = |f: &dyn Fn(usize, &Module) -> usize| {
            (1..d).find_map(|i| gens.iter().position(|g| f(i, g) != 0).map(|gi| (gi, i)))
        };
        let left = first_nonzero(&|i, g| ext_dim(i, x, g));
        let right = first_nonzero(&|i, g| ext_dim(i, g, x));
        let member = membership[xi].is_some();
        if member == left.is_some() {
            left_mismatches.push(xi);
        }
        if member == right.is_some() {
            right_mismatches.push(xi);
        }
        if left.is_some() || right.is_some() {
            witnesses.push(OrthogonalityWitness { object: xi, left, right });
        }
    }
    let rigidity = d_rigidity(c, d);
    let generating = c.is_generating()?;
    let cogenerating = c.is_cogenerating()?;
    let verdict = unmatched_generators.is_empty()
        && left_mismatches.is_empty()
        && right_mismatches.is_empty()
        && generating
        && cogenerating;
    Ok(ClusterTiltingReport {
        d,
        universe_size: universe.len(),
        membership,
        unmatched_generators,
        rigidity,
        generating,
        cogenerating,
        witnesses,
        left_mismatches,
        right_mismatches,
        verdict,
    })
}

pub fn is_d_cluster_tilting(c: &AddCategory, d: usize, universe: &[Module]) -> Result<bool> {
    Ok(cluster_tilting_report(c, d, universe)?.verdict)
}

/// Where a translate lands among the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TranslateImage {
    pub source: usize,
    pub image: Option<usize>,
    /// The image is non-injective (forward) or non-projective (backward).
    pub on_the_other_side: bool,
    /// Translating back recovers the source.
    pub round_trip: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauEquivalenceReport {
    pub forward: Vec<TranslateImage>,
    pub backward: Vec<TranslateImage>,
    pub bijective: bool,
    /// `(a, b, dim sHom(G_a, G_b), dim iHom(τ_d G_a, τ_d G_b))` over non-projective pairs.
    pub stable_dims: Vec<(usize, usize, usize, usize)>,
    pub holds: bool,
}

pub fn verify_tau_d_equivalence(c: &AddCategory, d: usize) -> Result<TauEquivalenceReport> {
    let gens = c.generators();
    let non_projective: Vec<usize> = (0..gens.len()).filter(|&i| !gens[i].is_projective()).collect();
    let non_injective: Vec<usize> = (0..gens.len()).filter(|&i| !gens[i].is_injective()).collect();
    let mut forward = Vec::new();
    let mut taus = Vec::new();
    for &a in &non_projective {
        let t = tau_d(&gens[a], d);
        let image = c.index_of(&t)?;
        let round_trip = repcat::are_isomorphic(&tau_d_minus(&t, d), &gens[a])?;
        forward.push(TranslateImage {
            source: a,
            image,
            on_the_other_side: image.is_some_and(|j| !gens[j].is_injective()),
            round_trip,
        });
        taus.push(t);
    }
    let mut backward = Vec::new();
    for &a in &non_injective {
        let t = tau_d_minus(&gens[a], d);
        let image = c.index_of(&t)?;
        let round_trip = repcat::are_isomorphic(&tau_d(&t, d), &gens[a])?;
        backward.push(TranslateImage {
            source: a,
            image,
            on_the_other_side: image.is_some_and(|j| !gens[j].is_projective()),
            round_trip,
        });
    }
    let mut images: Vec<usize> = forward.iter().filter_map(|t| t.image).collect();
    images.sort_unstable();
    images.dedup();
    let bijective = images.len() == forward.len() && images == non_injective;
    let mut stable_dims = Vec::new();
    for (i, &a) in non_projective.iter().enumerate() {
        for (j, &b) in non_projective.iter().enumerate() {
            let lhs = stable_hom(&gens[a], &gens[b]).dim();
            let rhs = costable_hom(&taus[i], &taus[j]).dim();
            stable_dims.push((a, b, lhs, rhs));
        }
    }
    let holds = bijective
        && forward.iter().chain(&backward).all(|t| t.image.is_some() && t.on_the_other_side && t.round_trip)
        && stable_dims.iter().all(|&(_, _, l, r)| l == r);
    Ok(TauEquivalenceReport { forward, backward, bijective, stable_dims, holds })
}

/// `(generator, dim δ*(X), dim δ_*(τ_d X))` for each non-projective generator `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefectFormulaReport {
    pub rows: Vec<(usize, usize, usize)>,
    pub holds: bool,
}

pub fn verify_defect_formula(s: &DSequence, c: &AddCategory, d: usize) -> DefectFormulaReport {
    let rows: Vec<(usize, usize, usize)> = c
        .generators()
        .iter()
        .enumerate()
        .filter(|(_, x)| !x.is_projective())
        .map(|(i, x)| (i, defect_contravariant(s, x).dim(), defect_covariant(s, &tau_d(x, d)).dim()))
        .collect();
    let holds = rows.iter().all(|&(_, a, b)| a == b);
    DefectFormulaReport { rows, holds }
}

/// `(a, b, dim sHom(G_a, G_b), dim Ext^d(G_b, τ_d G_a))` over all generator pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArDualityReport {
    pub rows: Vec<(usize, usize, usize, usize)>,
    pub holds: bool,
}

pub fn verify_ar_duality(c: &AddCategory, d: usize) -> ArDualityReport {
    let gens = c.generators();
    let taus: Vec<Module> = gens.iter().map(|x| tau_d(x, d)).collect();
    let mut rows = Vec::new();
    for (a, x) in gens.iter().enumerate() {
        for (b, y) in gens.iter().enumerate() {
            rows.push((a, b, stable_hom(x, y).dim(), ext_dim(d, y, &taus[a])));
        }
    }
    let holds = rows.iter().all(|&(_, _, l, r)| l == r);
    ArDualityReport { rows, holds }
}

/// `(i, generator, module, dim Tor_{d−i}(M, Tr_d X), dim Ext^i(X, M))` for `1 ≤ i ≤ d − 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorExtReport {
    pub rows: Vec<(usize, usize, usize, usize, usize)>,
    pub holds: bool,
}

pub fn verify_tor_ext(c: &AddCategory, d: usize, modules: &[Module]) -> Result<TorExtReport> {
    let mut rows = Vec::new();
    for (gi, x) in c.generators().iter().enumerate() {
        let t = tr_d(x, d);
        for (mi, m) in modules.iter().enumerate() {
            for i in 1..d {
                rows.push((i, gi, mi, tor_dim(d - i, m, &t)?, ext_dim(i, x, m)));
            }
        }
    }
    let holds = rows.iter().all(|r| r.3 == r.4);
    Ok(TorExtReport { rows, holds })
}

/// Whether `L ⊗ Tr_d X → M¹ ⊗ Tr_d X → … → N ⊗ Tr_d X → 0` is exact.
pub fn tensor_right_exact(s: &DSequence, x: &Module, d: usize) -> Result<bool> {
    let t = tr_d(x, d);
    let tensors: Vec<Tensor> = s.terms().iter().map(|m| Tensor::new(m, &t)).collect::<Result<_>>()?;
    let ranks: Vec<usize> =
        s.maps().iter().enumerate().map(|(i, f)| tensors[i].map_to(f, &tensors[i + 1]).rank()).collect();
    let last = tensors.len() - 1;
    Ok(ranks[last - 1] == tensors[last].dim() && (1..last).all(|i| tensors[i].dim() - ranks[i] == ranks[i - 1]))
}

/// Global dimension of `End(M)`, read off the towers of kernels and minimal
/// right approximations that resolve the simple functors.
pub fn gldim_end(c: &AddCategory) -> Result<usize> {
    let cap = c.algebra().limits().resolution_cap;
    let mut best = 0;
    for n in c.generators() {
        let g = c.radical_generators(n)?;
        if g.domain().is_zero() {
            continue;
        }
        let mut length = 1;
        let (mut k, _) = g.kernel();
        while !k.is_zero() {
            if length > cap {
                return Err(Error::cap(format!("functor resolution longer than {cap}")));
            }
            let a = c.minimal_right_approximation(&k)?;
            (k, _) = a.kernel();
            length += 1;
        }
        best = best.max(length);
    }
    Ok(best)
}

/// Dominant dimension of `End(M)` for a generator-cogenerator `M`, by the external
/// criterion `min{i ≥ 1 : Ext^i(M, M) ≠ 0} + 1`. `None` when all such Ext vanish.
pub fn domdim_end(c: &AddCategory) -> Result<Option<usize>> {
    if !(c.is_generating()? && c.is_cogenerating()?) {
        return Err(Error::precondition("dominant dimension needs a generator-cogenerator"));
    }
    let gens = c.generators();
    let mut top = 0;
    for g in gens {
        top = top.max(pd(g).unwrap_or(c.algebra().limits().resolution_cap));
    }
    for i in 1..=top {
        if gens.iter().any(|a| gens.iter().any(|b| ext_dim(i, a, b) != 0)) {
            return Ok(Some(i + 1));
        }
    }
    Ok(None)
}
