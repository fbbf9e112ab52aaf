//! Complexes `L → M¹ → … → M^d → N` and their exactness relative to `add M`.

use crate::approx::{self, AddCategory};
use crate::error::{Error, Result};
use crate::exactlin::{self, Matrix, Scalar};
use crate::repcat::{self, HomSpace, Module, Morphism, Pullback};

/// A finite complex `T₀ → T₁ → … → T_{d+1}` with at least one map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DSequence {
    maps: Vec<Morphism>,
}

impl DSequence {
    pub fn new(maps: Vec<Morphism>) -> Result<DSequence> {
        if maps.is_empty() {
            return Err(Error::invalid("a sequence needs at least one map"));
        }
        for (i, w) in maps.windows(2).enumerate() {
            if w[0].codomain() != w[1].domain() {
                return Err(Error::DimensionMismatch(format!("maps {i} and {} are not composable", i + 1)));
            }
            if !w[1].compose(&w[0]).is_zero() {
                return Err(Error::invalid(format!("maps {i} and {} compose to a nonzero map", i + 1)));
            }
        }
        Ok(DSequence { maps })
    }

    /// `X → X` padded with zeros to `d + 2` terms.
    pub fn trivial(x: &Module, d: usize) -> DSequence {
        let zero = Module::zero(x.algebra());
        let mut maps: Vec<Morphism> = (0..d.saturating_sub(1)).map(|_| Morphism::zero(&zero, &zero)).collect();
        if d == 0 {
            return DSequence { maps: vec![Morphism::identity(x)] };
        }
        maps.push(Morphism::zero(&zero, x));
        maps.push(Morphism::identity(x));
        DSequence { maps }
    }

    /// The number of middle terms.
    pub fn d(&self) -> usize {
        self.maps.len() - 1
    }

    pub fn len(&self) -> usize {
        self.maps.len() + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn maps(&self) -> &[Morphism] {
        &self.maps
    }

    pub fn map(&self, i: usize) -> &Morphism {
        &self.maps[i]
    }

    pub fn term(&self, i: usize) -> &Module {
        if i == 0 {
            self.maps[0].domain()
        } else {
            self.maps[i - 1].codomain()
        }
    }

    pub fn terms(&self) -> Vec<Module> {
        (0..self.len()).map(|i| self.term(i).clone()).collect()
    }

    pub fn first(&self) -> &Morphism {
        &self.maps[0]
    }

    pub fn last(&self) -> &Morphism {
        self.maps.last().expect("nonempty")
    }

    /// The sequence of duals, read backwards; a complex over the opposite algebra.
    pub fn dual(&self) -> DSequence {
        DSequence { maps: self.maps.iter().rev().map(Morphism::dual).collect() }
    }

    /// Termwise direct sum of two sequences of the same length.
    pub fn direct_sum(&self, other: &DSequence) -> Result<DSequence> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch("sequences of different lengths".into()));
        }
        let alg = self.term(0).algebra().clone();
        let terms: Vec<_> =
            (0..self.len()).map(|i| repcat::DirectSum::of(&alg, &[self.term(i).clone(), other.term(i).clone()])).collect();
        let maps = (0..self.maps.len())
            .map(|i| {
                repcat::block_morphism(&terms[i], &terms[i + 1], |r, c| match (r, c) {
                    (0, 0) => Some(self.maps[i].clone()),
                    (1, 1) => Some(other.maps[i].clone()),
                    _ => None,
                })
            })
            .collect();
        Ok(DSequence { maps })
    }

    /// Whether the complex of modules is exact at every inner term, and at
    /// the ends when `left_zero`/`right_zero` ask for `0 → T₀` and `T_{d+1} → 0`.
    pub fn is_exact_complex(&self, left_zero: bool, right_zero: bool) -> bool {
        let n = self.term(0).dims().len();
        (0..n).all(|v| {
            let ranks: Vec<usize> = self.maps.iter().map(|f| f.component(v).rank()).collect();
            let dims: Vec<usize> = (0..self.len()).map(|i| self.term(i).dim_at(v)).collect();
            (!left_zero || ranks[0] == dims[0])
                && (!right_zero || *ranks.last().unwrap() == *dims.last().unwrap())
                && (1..self.maps.len()).all(|i| dims[i] - ranks[i] == ranks[i - 1])
        })
    }
}

/// Where a hom sequence fails to be exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExactnessFailure {
    /// Index of the generator in the category.
    pub generator: usize,
    /// Index of the term of the sequence at which exactness fails.
    pub position: usize,
}

/// First failing position of `0 → H₀ → H₁ → … → H_n`, given dimensions and map ranks.
fn first_failure(dims: &[usize], ranks: &[usize]) -> Option<usize> {
    if ranks[0] != dims[0] {
        return Some(0);
    }
    (1..ranks.len()).find(|&i| dims[i] - ranks[i] != ranks[i - 1])
}

fn postcompose_rank(g: &Module, f: &Morphism) -> usize {
    approx::postcompose_image(g, f).cols()
}

fn precompose_rank(f: &Morphism, g: &Module) -> usize {
    approx::precompose_image(f, g).cols()
}

/// `0 → (G, T₀) → … → (G, T_{d+1})` exact for every generator `G`; `Err` carries the first failure.
pub fn left_d_exactness(s: &DSequence, c: &AddCategory) -> std::result::Result<(), ExactnessFailure> {
    for (gi, g) in c.generators().iter().enumerate() {
        let dims: Vec<usize> = (0..s.len()).map(|i| repcat::hom_dim(g, s.term(i))).collect();
        let ranks: Vec<usize> = s.maps().iter().map(|f| postcompose_rank(g, f)).collect();
        if let Some(position) = first_failure(&dims, &ranks) {
            return Err(ExactnessFailure { generator: gi, position });
        }
    }
    Ok(())
}

/// `0 → (T_{d+1}, G) → … → (T₀, G)` exact for every generator `G`.
pub fn right_d_exactness(s: &DSequence, c: &AddCategory) -> std::result::Result<(), ExactnessFailure> {
    let last = s.len() - 1;
    for (gi, g) in c.generators().iter().enumerate() {
        let dims: Vec<usize> = (0..s.len()).rev().map(|i| repcat::hom_dim(s.term(i), g)).collect();
        let ranks: Vec<usize> = s.maps().iter().rev().map(|f| precompose_rank(f, g)).collect();
        if let Some(p) = first_failure(&dims, &ranks) {
            return Err(ExactnessFailure { generator: gi, position: last - p });
        }
    }
    Ok(())
}

pub fn is_left_d_exact(s: &DSequence, c: &AddCategory) -> bool {
    left_d_exactness(s, c).is_ok()
}

pub fn is_right_d_exact(s: &DSequence, c: &AddCategory) -> bool {
    right_d_exactness(s, c).is_ok()
}

/// Both-sided test. For a generating-cogenerating category a d-exact sequence
/// must also be a short-type exact sequence of modules; a violation is reported
/// as `VerificationFailed`.
pub fn is_d_exact(s: &DSequence, c: &AddCategory) -> Result<bool> {
    if !(is_left_d_exact(s, c) && is_right_d_exact(s, c)) {
        return Ok(false);
    }
    if c.is_generating()? && c.is_cogenerating()? && !s.is_exact_complex(true, true) {
        return Err(Error::verification("d-exact sequence is not exact as a complex of modules"));
    }
    Ok(true)
}

/// Extends `g: M^d → N` to the left by kernels and minimal right approximations.
pub fn build_left_d_exact(c: &AddCategory, g: &Morphism, d: usize) -> Result<DSequence> {
    if d == 0 {
        return Err(Error::invalid("d must be positive"));
    }
    let mut maps = vec![g.clone()];
    let (mut k, mut incl) = g.kernel();
    for _ in 1..d {
        let a = c.minimal_right_approximation(&k)?;
        maps.push(incl.compose(&a));
        (k, incl) = a.kernel();
    }
    maps.push(incl);
    maps.reverse();
    DSequence::new(maps)
}

/// A degreewise morphism between sequences of the same length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    pub source: DSequence,
    pub target: DSequence,
    pub components: Vec<Morphism>,
}

impl ChainMap {
    pub fn new(source: &DSequence, target: &DSequence, components: Vec<Morphism>) -> Result<ChainMap> {
        if source.len() != target.len() || components.len() != source.len() {
            return Err(Error::DimensionMismatch("chain map shape".into()));
        }
        for (i, phi) in components.iter().enumerate() {
            if phi.domain() != source.term(i) || phi.codomain() != target.term(i) {
                return Err(Error::DimensionMismatch(format!("component {i} has wrong ends")));
            }
        }
        for i in 0..source.maps().len() {
            if target.map(i).compose(&components[i]) != components[i + 1].compose(source.map(i)) {
                return Err(Error::invalid(format!("square {i} does not commute")));
            }
        }
        Ok(ChainMap { source: source.clone(), target: target.clone(), components })
    }

    pub fn identity(s: &DSequence) -> ChainMap {
        let components = (0..s.len()).map(|i| Morphism::identity(s.term(i))).collect();
        ChainMap { source: s.clone(), target: s.clone(), components }
    }

    pub fn zero(source: &DSequence, target: &DSequence) -> Result<ChainMap> {
        let components = (0..source.len()).map(|i| Morphism::zero(source.term(i), target.term(i))).collect();
        ChainMap::new(source, target, components)
    }

    /// `D(φ): D(target) → D(source)`.
    pub fn dual(&self) -> ChainMap {
        ChainMap {
            source: self.target.dual(),
            target: self.source.dual(),
            components: self.components.iter().rev().map(Morphism::dual).collect(),
        }
    }

    /// `T₀ → T₁ ⊕ S₀ → … → T_{n} ⊕ S_{n−1} → S_n` for `φ` from the top row `T` to the bottom row `S`.
    pub fn mapping_cone(&self) -> DSequence {
        let top = &self.source;
        let bot = &self.target;
        let n = top.len() - 1;
        let alg = top.term(0).algebra().clone();
        let mids: Vec<repcat::DirectSum> = (1..=n)
            .map(|i| repcat::DirectSum::of(&alg, &[top.term(i).clone(), bot.term(i - 1).clone()]))
            .collect();
        let mut maps = Vec::new();
        maps.push(
            Morphism::column(top.term(0), &[top.map(0).neg(), self.components[0].clone()])
                .1
                .with_ends(top.term(0), &mids[0].module),
        );
        for i in 1..n {
            maps.push(repcat::block_morphism(&mids[i - 1], &mids[i], |r, c| match (r, c) {
                (0, 0) => Some(top.map(i).neg()),
                (1, 0) => Some(self.components[i].clone()),
                (1, 1) => Some(bot.map(i - 1).clone()),
                _ => None,
            }));
        }
        maps.push(
            Morphism::row(bot.term(n), &[self.components[n].clone(), bot.map(n - 1).clone()])
                .1
                .with_ends(&mids[n - 1].module, bot.term(n)),
        );
        DSequence { maps }
    }
}

/// Components `h_i: S_i → T_{i−1}` (for `i = 1..=d+1`) with `φ = d h + h d`.
pub fn null_homotopy(phi: &ChainMap) -> Option<Vec<Morphism>> {
    let n = phi.source.len();
    // The component out of the last term is held at zero first when the map vanishes there.
    if phi.components[n - 1].is_zero() {
        if let Some(h) = solve_homotopy(phi, true) {
            return Some(h);
        }
    }
    solve_homotopy(phi, false)
}

fn solve_homotopy(phi: &ChainMap, pin_last: bool) -> Option<Vec<Morphism>> {
    let s = &phi.source;
    let t = &phi.target;
    let n = s.len();
    let field = s.term(0).field();
    let spaces: Vec<HomSpace> = (1..n).map(|i| HomSpace::new(s.term(i), t.term(i - 1))).collect();
    let row_len: Vec<usize> = (0..n).map(|i| Morphism::flat_len(s.term(i), t.term(i))).collect();
    let row_off: Vec<usize> = row_len.iter().scan(0, |acc, &l| { let o = *acc; *acc += l; Some(o) }).collect();
    let total_rows: usize = row_len.iter().sum();
    let mut cols: Vec<Vec<Scalar>> = Vec::new();
    for (k, space) in spaces.iter().enumerate() {
        let i = k + 1;
        if pin_last && i == n - 1 {
            for _ in space.basis() {
                cols.push(vec![0; total_rows]);
            }
            continue;
        }
        for b in space.basis() {
            let mut col = vec![0; total_rows];
            // b: S_i → T_{i−1} contributes t.d_{i−1} ∘ b in degree i and b ∘ s.d_{i−1} in degree i − 1.
            let up = t.map(i - 1).compose(b).flatten();
            col[row_off[i]..row_off[i] + row_len[i]].copy_from_slice(&up);
            let down = b.compose(s.map(i - 1)).flatten();
            for (j, x) in down.into_iter().enumerate() {
                let e = &mut col[row_off[i - 1] + j];
                *e = field.add(*e, x);
            }
            cols.push(col);
        }
    }
    let rhs: Vec<Scalar> = phi.components.iter().flat_map(Morphism::flatten).collect();
    let m = Matrix::from_columns(field, total_rows, &cols);
    let sol = m.solve(&rhs).expect("shapes agree")?;
    let mut out = Vec::new();
    let mut at = 0;
    for space in &spaces {
        out.push(space.element(&sol[at..at + space.dim()]));
        at += space.dim();
    }
    Some(out)
}

/// Whether `g` is split epi; for d-exact sequences this is contractibility.
pub fn is_contractible(s: &DSequence) -> bool {
    let g = s.last();
    repcat::factor_through(&Morphism::identity(g.codomain()), g).is_some()
}

pub fn is_split_mono(f: &Morphism) -> bool {
    repcat::factor_through_left(&Morphism::identity(f.domain()), f).is_some()
}

pub fn is_split_epi(g: &Morphism) -> bool {
    repcat::factor_through(&Morphism::identity(g.codomain()), g).is_some()
}

/// Whether the approximations inside `d_pullback` are made minimal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ApproxMode {
    #[default]
    Minimal,
    Full,
}

fn approximate(c: &AddCategory, x: &Module, mode: ApproxMode) -> Result<Morphism> {
    match mode {
        ApproxMode::Minimal => c.minimal_right_approximation(x),
        ApproxMode::Full => Ok(c.right_approximation(x).map),
    }
}

/// The unique map into a pullback restricting to `(left, right)`.
fn into_pullback(pb: &Pullback, left: &Morphism, right: &Morphism) -> Morphism {
    let (_, emb) = Morphism::column(&pb.module, &[pb.to_left.clone(), pb.to_right.clone()]);
    let (_, h) = Morphism::column(left.domain(), &[left.clone(), right.clone()]);
    let h = h.with_ends(left.domain(), emb.codomain());
    repcat::factor_through(&h, &emb).expect("the pair lies over the cospan")
}

/// A d-pullback of the complex `M¹ → … → M^d → M` along `f: N → M`.
///
/// Returns the chain map from the new top row `N¹ → … → N^d → N` to `bottom`.
pub fn d_pullback(c: &AddCategory, bottom: &DSequence, f: &Morphism, mode: ApproxMode) -> Result<ChainMap> {
    let d = bottom.maps().len();
    if f.codomain() != bottom.term(d) {
        return Err(Error::DimensionMismatch("pullback map must land in the last term".into()));
    }
    let mut cur_bottom = bottom.map(d - 1).clone();
    let mut cur_right = f.clone();
    let mut top_maps = Vec::new();
    let mut verticals = vec![f.clone()];
    for k in (1..=d).rev() {
        let pb = Pullback::new(&cur_bottom, &cur_right);
        if k > 1 {
            let a = approximate(c, &pb.module, mode)?;
            top_maps.push(pb.to_right.compose(&a));
            verticals.push(pb.to_left.compose(&a));
            let m_prev = bottom.map(k - 2);
            let zero = Morphism::zero(m_prev.domain(), pb.to_right.codomain());
            cur_bottom = into_pullback(&pb, m_prev, &zero);
            cur_right = a;
        } else {
            top_maps.push(pb.to_right.clone());
            verticals.push(pb.to_left.clone());
        }
    }
    top_maps.reverse();
    verticals.reverse();
    let top = DSequence::new(top_maps)?;
    ChainMap::new(&top, bottom, verticals)
}

/// Completes a d-pullback of the full sequence `L → M¹ → … → N` along `f: V → N`
/// to a chain map whose top row starts with `L` and whose first component is the identity.
pub fn d_pullback_complete(c: &AddCategory, seq: &DSequence, f: &Morphism, mode: ApproxMode) -> Result<ChainMap> {
    let tail = DSequence::new(seq.maps()[1..].to_vec())?;
    let square = d_pullback(c, &tail, f, mode)?;
    let top = &square.source;
    let l = seq.term(0);
    let (_, emb) = Morphism::column(top.term(0), &[square.components[0].clone(), top.map(0).clone()]);
    let zero = Morphism::zero(l, top.term(1));
    let (_, h) = Morphism::column(l, &[seq.first().clone(), zero]);
    let h = h.with_ends(l, emb.codomain());
    let lift = repcat::factor_through(&h, &emb)
        .ok_or_else(|| Error::precondition("the sequence is not left d-exact against the pullback"))?;
    let mut maps = vec![lift];
    maps.extend(top.maps().iter().cloned());
    let full_top = DSequence::new(maps)?;
    let mut comps = vec![Morphism::identity(l)];
    comps.extend(square.components.iter().cloned());
    ChainMap::new(&full_top, seq, comps)
}

/// A d-pushout of the complex `L → M¹ → … → M^d` along `g: L → V`; the chain map runs
/// from `head` to the new bottom row `V → N¹ → … → N^d`.
pub fn d_pushout(c: &AddCategory, head: &DSequence, g: &Morphism, mode: ApproxMode) -> Result<ChainMap> {
    Ok(d_pullback(&c.dual(), &head.dual(), &g.dual(), mode)?.dual())
}

/// The dual of `d_pullback_complete`: a chain map from `seq` into a sequence ending in `N`.
pub fn d_pushout_complete(c: &AddCategory, seq: &DSequence, g: &Morphism, mode: ApproxMode) -> Result<ChainMap> {
    Ok(d_pullback_complete(&c.dual(), &seq.dual(), &g.dual(), mode)?.dual())
}

/// A cokernel of a hom map, with representatives of a quotient basis.
#[derive(Clone, Debug)]
pub struct DefectSpace {
    pub ambient: HomSpace,
    /// Flattened basis of the image inside the ambient hom space.
    pub image: Matrix,
    /// Morphisms whose classes form a basis of the quotient.
    pub representatives: Vec<Morphism>,
}

impl DefectSpace {
    fn new(ambient: HomSpace, image: Matrix) -> DefectSpace {
        let x = ambient.domain().clone();
        let y = ambient.codomain().clone();
        let field = x.field();
        let flat = repcat::flat_columns(ambient.basis(), Morphism::flat_len(&x, &y), field);
        let q = exactlin::quotient(&flat, &image).expect("same ambient");
        let representatives = q.complement.columns().iter().map(|c| Morphism::from_flat(&x, &y, c)).collect();
        DefectSpace { ambient, image, representatives }
    }

    pub fn dim(&self) -> usize {
        self.ambient.dim() - self.image.cols()
    }
}

/// `δ*(X) = coker Hom(X, g)`.
pub fn defect_contravariant(s: &DSequence, x: &Module) -> DefectSpace {
    let g = s.last();
    DefectSpace::new(HomSpace::new(x, g.codomain()), approx::postcompose_image(x, g))
}

/// `δ_*(Y) = coker Hom(f, Y)`.
pub fn defect_covariant(s: &DSequence, y: &Module) -> DefectSpace {
    let f = s.first();
    DefectSpace::new(HomSpace::new(f.domain(), y), approx::precompose_image(f, y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homological::ext_dim;
    use crate::repcat::fixtures::*;
    use crate::repcat::{are_isomorphic, hom_basis};

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

    fn p1_to_s1(c: &AddCategory) -> Morphism {
        let alg = c.algebra();
        hom_basis(&Module::projective(alg, 0), &Module::simple(alg, 0))[0].clone()
    }

    fn ass(c: &AddCategory) -> DSequence {
        build_left_d_exact(c, &p1_to_s1(c), 2).unwrap()
    }

    fn mod_ka2() -> AddCategory {
        let alg = ka2();
        AddCategory::new(&alg, vec![Module::projective(&alg, 0), Module::simple(&alg, 0), Module::simple(&alg, 1)])
            .unwrap()
    }

    #[test]
    fn builds_the_two_almost_split_sequence() {
        let c = flagship();
        let alg = c.algebra().clone();
        let s = ass(&c);
        assert_eq!(s.len(), 4);
        assert!(are_isomorphic(s.term(0), &Module::simple(&alg, 2)).unwrap());
        assert!(are_isomorphic(s.term(1), &Module::projective(&alg, 1)).unwrap());
        assert!(is_left_d_exact(&s, &c));
        assert!(is_d_exact(&s, &c).unwrap());
        assert!(s.is_exact_complex(true, true));
        assert!(!is_contractible(&s));
        for i in 0..2 {
            assert!(repcat::is_radical_morphism(s.map(i)).unwrap());
        }
    }

    #[test]
    fn zero_middle_map_fails_at_p2() {
        let c = flagship();
        let s = ass(&c);
        let mut maps = s.maps().to_vec();
        maps[1] = Morphism::zero(maps[1].domain(), maps[1].codomain());
        let broken = DSequence::new(maps).unwrap();
        assert_eq!(left_d_exactness(&broken, &c), Err(ExactnessFailure { generator: 1, position: 1 }));
    }

    #[test]
    fn classical_almost_split_sequence() {
        let c = mod_ka2();
        let s = build_left_d_exact(&c, &hom_basis(&c.generators()[0], &c.generators()[1])[0], 1).unwrap();
        assert!(are_isomorphic(s.term(0), &Module::simple(c.algebra(), 1)).unwrap());
        assert!(is_d_exact(&s, &c).unwrap());
        assert!(!is_contractible(&s));
        assert!(null_homotopy(&ChainMap::identity(&s)).is_none());
    }

    #[test]
    fn trivial_sequences() {
        let c = flagship();
        let x = c.generators()[0].clone();
        for d in 1..=3 {
            let s = DSequence::trivial(&x, d);
            assert_eq!(s.d(), d);
            assert!(is_d_exact(&s, &c).unwrap());
            assert!(is_contractible(&s));
            let h = null_homotopy(&ChainMap::identity(&s)).unwrap();
            assert_eq!(h.len(), d + 1);
            let id = Morphism::identity(&x);
            assert_eq!(build_left_d_exact(&c, &id, d).unwrap().term(d), &x);
        }
        let s = ass(&c);
        let z = ChainMap::zero(&s, &s).unwrap();
        assert!(null_homotopy(&z).unwrap().iter().all(Morphism::is_zero));
        assert!(null_homotopy(&ChainMap::identity(&s)).is_none());
    }

    #[test]
    fn split_short_sequence() {
        let c = mod_ka2();
        let x = c.generators()[0].clone();
        let y = c.generators()[2].clone();
        let sum = repcat::direct_sum(&[x.clone(), y.clone()]);
        let s = DSequence::new(vec![sum.inclusions[0].clone(), sum.projections[1].clone()]).unwrap();
        assert!(is_d_exact(&s, &c).unwrap());
        assert!(is_contractible(&s));
        assert!(is_split_mono(s.first()));
        assert_eq!(defect_contravariant(&s, &x).dim(), 0);
    }

    #[test]
    fn defects_of_the_flagship_sequence() {
        let c = flagship();
        let alg = c.algebra().clone();
        let s = ass(&c);
        assert_eq!(defect_contravariant(&s, &Module::simple(&alg, 0)).dim(), 1);
        assert_eq!(defect_covariant(&s, &Module::simple(&alg, 2)).dim(), 1);
        for v in 0..3 {
            assert_eq!(defect_contravariant(&s, &Module::projective(&alg, v)).dim(), 0);
            assert_eq!(defect_covariant(&s, &Module::injective(&alg, v)).dim(), 0);
        }
        let rep = &defect_contravariant(&s, &Module::simple(&alg, 0)).representatives;
        assert_eq!(rep.len(), 1);
        assert!(rep[0].is_iso());
    }

    #[test]
    fn long_exact_extension() {
        let c = flagship();
        let s = ass(&c);
        for x in c.generators() {
            // The defect embeds into Ext²(X, L).
            assert!(defect_contravariant(&s, x).dim() <= ext_dim(2, x, s.term(0)));
        }
    }

    #[test]
    fn pullbacks_and_pushouts() {
        let c = flagship();
        let alg = c.algebra().clone();
        let s = ass(&c);
        let tail = DSequence::new(s.maps()[1..].to_vec()).unwrap();
        let s1 = s.term(3).clone();
        for f in [Morphism::identity(&s1), Morphism::zero(&s1, &s1)] {
            let sq = d_pullback(&c, &tail, &f, ApproxMode::Minimal).unwrap();
            assert!(is_left_d_exact(&sq.mapping_cone(), &c));
            let sq = d_pullback(&c, &tail, &f, ApproxMode::Full).unwrap();
            assert!(is_left_d_exact(&sq.mapping_cone(), &c));
        }
        let id = d_pullback(&c, &tail, &Morphism::identity(&s1), ApproxMode::Minimal).unwrap();
        for i in 0..3 {
            assert!(are_isomorphic(id.source.term(i), tail.term(i)).unwrap());
        }
        let full = d_pullback_complete(&c, &s, &Morphism::identity(&s1), ApproxMode::Minimal).unwrap();
        assert!(is_left_d_exact(&full.source, &c));

        let head = DSequence::new(s.maps()[..2].to_vec()).unwrap();
        let s3 = s.term(0).clone();
        for g in [Morphism::identity(&s3), Morphism::zero(&s3, &s3)] {
            let sq = d_pushout(&c, &head, &g, ApproxMode::Minimal).unwrap();
            assert_eq!(sq.source, head);
            assert!(is_right_d_exact(&sq.mapping_cone(), &c));
        }
        let full = d_pushout_complete(&c, &s, &Morphism::identity(&s3), ApproxMode::Minimal).unwrap();
        assert!(is_right_d_exact(&full.target, &c));
        assert!(are_isomorphic(full.target.term(3), &Module::simple(&alg, 0)).unwrap());
    }
}
