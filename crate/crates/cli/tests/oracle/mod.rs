//! Brute-force reference computations over small prime fields.
//!
//! Everything here reads raw matrix entries and enumerates maps exhaustively,
//! so none of it goes through the library's row reduction or hom solver.
#![allow(dead_code)]

use std::collections::HashSet;

use dct_core::exactlin::Matrix;
use dct_core::repcat::{Module, Morphism};

/// Hard limit on enumerated entries, to keep every search well under a second.
const MAX_ENTRIES: usize = 18;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Raw {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u32>,
}

impl Raw {
    pub fn of(m: &Matrix) -> Raw {
        Raw { rows: m.rows(), cols: m.cols(), data: m.data().to_vec() }
    }

    fn zeros(rows: usize, cols: usize) -> Raw {
        Raw { rows, cols, data: vec![0; rows * cols] }
    }

    fn identity(n: usize) -> Raw {
        let mut r = Raw::zeros(n, n);
        for i in 0..n {
            r.data[i * n + i] = 1;
        }
        r
    }

    fn mul(&self, other: &Raw, p: u32) -> Raw {
        assert_eq!(self.cols, other.rows);
        let mut out = Raw::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let e = &mut out.data[i * other.cols + j];
                    *e = ((*e as u64 + a * other.data[k * other.cols + j] as u64) % p as u64) as u32;
                }
            }
        }
        out
    }

    fn sub(&self, other: &Raw, p: u32) -> Raw {
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| (a + p - b) % p).collect();
        Raw { rows: self.rows, cols: self.cols, data }
    }

    fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Rank by plain Gaussian elimination mod `p`.
    fn rank(&self, p: u32) -> usize {
        let mut m = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        for c in 0..cols {
            let Some(r) = (rank..rows).find(|&r| m[r * cols + c] != 0) else { continue };
            for j in 0..cols {
                m.swap(r * cols + j, rank * cols + j);
            }
            let inv = pow(m[rank * cols + c], p - 2, p);
            for j in 0..cols {
                m[rank * cols + j] = ((m[rank * cols + j] as u64 * inv as u64) % p as u64) as u32;
            }
            for r2 in 0..rows {
                let f = m[r2 * cols + c];
                if r2 != rank && f != 0 {
                    for j in 0..cols {
                        let sub = (f as u64 * m[rank * cols + j] as u64 % p as u64) as u32;
                        m[r2 * cols + j] = (m[r2 * cols + j] + p - sub) % p;
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}

fn pow(a: u32, mut e: u32, p: u32) -> u32 {
    let mut acc = 1u64;
    let mut base = a as u64 % p as u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}

/// A module map as one raw matrix per vertex.
pub type Map = Vec<Raw>;

pub fn map_of(f: &Morphism) -> Map {
    f.components().iter().map(Raw::of).collect()
}

pub fn identity(x: &Module) -> Map {
    x.dims().iter().map(|&n| Raw::identity(n)).collect()
}

pub fn compose(g: &Map, f: &Map, p: u32) -> Map {
    g.iter().zip(f).map(|(a, b)| a.mul(b, p)).collect()
}

pub fn is_zero(f: &Map) -> bool {
    f.iter().all(Raw::is_zero)
}

pub fn flat(f: &Map) -> Vec<u32> {
    f.iter().flat_map(|m| m.data.iter().copied()).collect()
}

fn prime(x: &Module) -> u32 {
    x.field().p()
}

/// Every module map `X → Y`, found by trying all matrices.
pub fn homs(x: &Module, y: &Module) -> Vec<Map> {
    let p = prime(x);
    let shapes: Vec<(usize, usize)> = x.dims().iter().zip(y.dims()).map(|(&c, &r)| (r, c)).collect();
    let entries: usize = shapes.iter().map(|(r, c)| r * c).sum();
    assert!(entries <= MAX_ENTRIES, "brute hom search over {entries} entries is too large");
    let arrows = x.algebra().quiver().arrows().to_vec();
    let xa: Vec<Raw> = (0..arrows.len()).map(|a| Raw::of(x.arrow_map(a))).collect();
    let ya: Vec<Raw> = (0..arrows.len()).map(|a| Raw::of(y.arrow_map(a))).collect();
    let mut out = Vec::new();
    let mut values = vec![0u32; entries];
    loop {
        let mut at = 0;
        let comps: Map = shapes
            .iter()
            .map(|&(r, c)| {
                let m = Raw { rows: r, cols: c, data: values[at..at + r * c].to_vec() };
                at += r * c;
                m
            })
            .collect();
        let commutes = arrows
            .iter()
            .enumerate()
            .all(|(i, a)| comps[a.target].mul(&xa[i], p) == ya[i].mul(&comps[a.source], p));
        if commutes {
            out.push(comps);
        }
        // Odometer increment over F_p^entries.
        let mut k = 0;
        loop {
            if k == entries {
                return out;
            }
            values[k] += 1;
            if values[k] < p {
                break;
            }
            values[k] = 0;
            k += 1;
        }
    }
}

/// `log_p` of the size of a subspace.
pub fn dim_of(size: usize, p: u32) -> usize {
    let mut n = 0;
    let mut s = 1usize;
    while s < size {
        s *= p as usize;
        n += 1;
    }
    assert_eq!(s, size, "{size} is not a power of {p}");
    n
}

pub fn hom_dim(x: &Module, y: &Module) -> usize {
    dim_of(homs(x, y).len(), prime(x))
}

/// `{ g ∘ φ : φ ∈ Hom(X, dom g) }`.
pub fn postcompose_set(x: &Module, g: &Morphism) -> HashSet<Vec<u32>> {
    let gm = map_of(g);
    homs(x, g.domain()).iter().map(|phi| flat(&compose(&gm, phi, prime(x)))).collect()
}

/// `{ ψ ∘ f : ψ ∈ Hom(cod f, Y) }`.
pub fn precompose_set(f: &Morphism, y: &Module) -> HashSet<Vec<u32>> {
    let fm = map_of(f);
    homs(f.codomain(), y).iter().map(|psi| flat(&compose(psi, &fm, prime(y)))).collect()
}

/// `dim coker Hom(X, g)` for `g` the last map.
pub fn contravariant_defect(last: &Morphism, x: &Module) -> usize {
    let p = prime(x);
    hom_dim(x, last.codomain()) - dim_of(postcompose_set(x, last).len(), p)
}

/// `dim coker Hom(f, Y)` for `f` the first map.
pub fn covariant_defect(first: &Morphism, y: &Module) -> usize {
    let p = prime(y);
    hom_dim(first.domain(), y) - dim_of(precompose_set(first, y).len(), p)
}

/// `dim Ext^1(W, Z) = hom(ΩW, Z) − hom(P_W, Z) + hom(W, Z)`, from `0 → ΩW → P_W → W → 0`.
pub fn ext1(w: &Module, z: &Module) -> usize {
    let cover = w.projective_cover();
    let (omega, _) = cover.epi.kernel();
    hom_dim(&omega, z) + hom_dim(w, z) - hom_dim(&cover.module, z)
}

/// `Ext^i(W, Z)` for `i ≥ 1` by dimension shifting.
pub fn ext(i: usize, w: &Module, z: &Module) -> usize {
    assert!(i >= 1);
    let mut w = w.clone();
    for _ in 1..i {
        w = w.projective_cover().epi.kernel().0;
    }
    ext1(&w, z)
}

/// Hom modulo maps factoring through the projective cover of the target.
pub fn stable_dim(x: &Module, y: &Module) -> usize {
    let cover = y.projective_cover();
    let through = postcompose_set(x, &cover.epi);
    hom_dim(x, y) - dim_of(through.len(), prime(x))
}

/// Hom modulo maps factoring through the injective envelope of the source.
pub fn costable_dim(x: &Module, y: &Module) -> usize {
    let env = x.injective_envelope();
    let through = precompose_set(&env.mono, y);
    hom_dim(x, y) - dim_of(through.len(), prime(x))
}

pub fn is_split_mono(f: &Morphism) -> bool {
    let p = prime(f.domain());
    let (fm, id) = (map_of(f), identity(f.domain()));
    homs(f.codomain(), f.domain()).iter().any(|r| compose(r, &fm, p) == id)
}

pub fn is_split_epi(g: &Morphism) -> bool {
    let p = prime(g.domain());
    let (gm, id) = (map_of(g), identity(g.codomain()));
    homs(g.codomain(), g.domain()).iter().any(|s| compose(&gm, s, p) == id)
}

fn is_invertible(f: &Map, p: u32) -> bool {
    f.iter().all(|m| m.rows == m.cols && m.rank(p) == m.rows)
}

/// `f ∈ rad(X, Y)` iff `1 − g f` is invertible for every `g: Y → X`.
pub fn is_radical(f: &Morphism) -> bool {
    let x = f.domain();
    let p = prime(x);
    let (fm, id) = (map_of(f), identity(x));
    homs(f.codomain(), x).iter().all(|g| {
        let gf = compose(g, &fm, p);
        let diff: Map = id.iter().zip(&gf).map(|(a, b)| a.sub(b, p)).collect();
        is_invertible(&diff, p)
    })
}

/// `h` factors as `g ∘ ψ`.
pub fn factors_through(h: &Morphism, g: &Morphism) -> bool {
    let target = flat(&map_of(h));
    postcompose_set(h.domain(), g).contains(&target)
}

/// `h` factors as `ψ ∘ f`.
pub fn factors_through_left(h: &Morphism, f: &Morphism) -> bool {
    let target = flat(&map_of(h));
    precompose_set(f, h.codomain()).contains(&target)
}

/// Raw maps back as library morphisms, for handing to factorization checks.
pub fn morphism(x: &Module, y: &Module, f: &Map) -> Morphism {
    let field = x.field();
    let comps = f.iter().map(|m| Matrix::from_vec(field, m.rows, m.cols, m.data.clone())).collect();
    Morphism::new(x, y, comps).expect("brute maps intertwine")
}

/// Exactness of `0 → Hom(G, T₀) → … → Hom(G, T_n)` at every term but the last.
pub fn hom_left_exact(g: &Module, terms: &[Module], maps: &[Morphism]) -> bool {
    let p = prime(g);
    let spaces: Vec<Vec<Map>> = terms.iter().map(|t| homs(g, t)).collect();
    let raw: Vec<Map> = maps.iter().map(map_of).collect();
    for i in 0..maps.len() {
        let kernel = spaces[i].iter().filter(|phi| is_zero(&compose(&raw[i], phi, p))).count();
        let image: usize = if i == 0 {
            1
        } else {
            spaces[i - 1].iter().map(|phi| flat(&compose(&raw[i - 1], phi, p))).collect::<HashSet<_>>().len()
        };
        if kernel != image {
            return false;
        }
    }
    true
}

/// Exactness of `0 → Hom(T_n, G) → … → Hom(T₀, G)` at every term but `T₀`.
pub fn hom_right_exact(g: &Module, terms: &[Module], maps: &[Morphism]) -> bool {
    let p = prime(g);
    let n = maps.len();
    let spaces: Vec<Vec<Map>> = terms.iter().map(|t| homs(t, g)).collect();
    let raw: Vec<Map> = maps.iter().map(map_of).collect();
    for i in (1..=n).rev() {
        // Kernel of precomposition with maps[i-1]: Hom(T_i, G) → Hom(T_{i-1}, G).
        let kernel = spaces[i].iter().filter(|psi| is_zero(&compose(psi, &raw[i - 1], p))).count();
        let image: usize = if i == n {
            1
        } else {
            spaces[i + 1].iter().map(|psi| flat(&compose(psi, &raw[i], p))).collect::<HashSet<_>>().len()
        };
        if kernel != image {
            return false;
        }
    }
    true
}
