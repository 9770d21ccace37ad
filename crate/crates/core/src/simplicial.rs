//! Simplicial complexes on at most 64 vertices, the Stanley–Reisner
//! correspondence, links, nerves and reduced simplicial homology.
//!
//! A complex is stored by its facets as vertex bitmasks. The void complex has
//! no faces at all; the empty complex `{∅}` has the single facet `∅`.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::VertexSet;
use crate::linalg::{Field, SparseMatrix};
use crate::monomial::{Monomial, MonomialIdeal};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<u64>,
}

/// Inclusion-maximal members of `sets`, sorted and deduplicated.
pub(crate) fn maximal_sets(mut sets: Vec<u64>) -> Vec<u64> {
    sets.sort_unstable_by_key(|s| std::cmp::Reverse(s.count_ones()));
    sets.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|&k| s & !k == 0) {
            kept.push(s);
        }
    }
    kept.sort_unstable_by_key(|&s| VertexSet(s));
    kept
}

fn check_ground(n: usize) -> Result<()> {
    if n > 64 {
        return Err(Error::SizeCap { what: "simplicial complexes", n, cap: 64 });
    }
    Ok(())
}

impl SimplicialComplex {
    /// The complex generated by `facets`; non-maximal inputs are dropped.
    pub fn from_facets(n: usize, facets: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        check_ground(n)?;
        let full = VertexSet::full(n);
        let mut sets = Vec::new();
        for f in facets {
            if !f.is_subset(full) {
                let v = f.difference(full).first().unwrap_or(0);
                return Err(Error::InvalidVertex { vertex: v + 1, n });
            }
            sets.push(f.0);
        }
        Ok(SimplicialComplex { n, facets: maximal_sets(sets) })
    }

    pub(crate) fn from_masks(n: usize, facets: Vec<u64>) -> Self {
        SimplicialComplex { n, facets: maximal_sets(facets) }
    }

    pub fn void(n: usize) -> Self {
        SimplicialComplex { n, facets: Vec::new() }
    }

    /// `{∅}`.
    pub fn empty_complex(n: usize) -> Self {
        SimplicialComplex { n, facets: vec![0] }
    }

    /// Full simplex on the ground set.
    pub fn simplex(n: usize) -> Result<Self> {
        check_ground(n)?;
        Ok(SimplicialComplex { n, facets: vec![VertexSet::full(n).0] })
    }

    /// Boundary of the full simplex on the ground set.
    pub fn sphere(n: usize) -> Result<Self> {
        check_ground(n)?;
        let full = VertexSet::full(n).0;
        Self::from_facets(n, (0..n).map(|v| VertexSet(full & !(1 << v))))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> Vec<VertexSet> {
        self.facets.iter().map(|&f| VertexSet(f)).collect()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// `None` for the void complex, `-1` for `{∅}`.
    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.count_ones() as isize - 1).max()
    }

    pub fn is_face(&self, f: VertexSet) -> bool {
        self.facets.iter().any(|&g| f.0 & !g == 0)
    }

    /// Every face, sorted by size and then lexicographically.
    pub fn faces(&self) -> Vec<VertexSet> {
        let mut out: Vec<u64> = all_faces(&self.facets).into_iter().collect();
        out.sort_unstable_by_key(|&f| (f.count_ones(), VertexSet(f)));
        out.into_iter().map(VertexSet).collect()
    }

    /// `f_{-1}, f_0, ..., f_dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        let Some(d) = self.dim() else { return Vec::new() };
        let mut f = vec![0; (d + 2) as usize];
        for face in all_faces(&self.facets) {
            f[face.count_ones() as usize] += 1;
        }
        f
    }

    /// `lk F = {G ∈ Δ : F ∪ G ∈ Δ, F ∩ G = ∅}`.
    pub fn link(&self, f: VertexSet) -> Result<SimplicialComplex> {
        if !self.is_face(f) {
            return Err(Error::NotAFace(f.labels()));
        }
        let sets = self.facets.iter().filter(|&&g| f.0 & !g == 0).map(|&g| g & !f.0).collect();
        Ok(SimplicialComplex { n: self.n, facets: maximal_sets(sets) })
    }

    /// Nerve of the facet cover, on facet indices in canonical facet order.
    pub fn nerve(&self) -> Result<SimplicialComplex> {
        if self.is_void() {
            return Err(Error::VoidComplex);
        }
        let r = self.facets.len();
        check_ground(r)?;
        let mut sets = Vec::new();
        for v in 0..self.n {
            let mut s = 0u64;
            for (j, &f) in self.facets.iter().enumerate() {
                if f >> v & 1 == 1 {
                    s |= 1 << j;
                }
            }
            if s != 0 {
                sets.push(s);
            }
        }
        if sets.is_empty() {
            return Ok(SimplicialComplex::empty_complex(r));
        }
        Ok(SimplicialComplex { n: r, facets: maximal_sets(sets) })
    }

    /// `Δ(I) = {F : x_F ∉ I}` for a squarefree, non-unit ideal.
    pub fn stanley_reisner_complex(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
        let n = ideal.n();
        check_ground(n)?;
        if ideal.is_unit() {
            return Err(Error::UnitIdeal);
        }
        if !ideal.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        let gens: Vec<u64> = ideal
            .generators()
            .iter()
            .map(|g| g.support().into_iter().fold(0u64, |acc, i| acc | 1 << i))
            .collect();
        let mut facets = Vec::new();
        maximal_independent(&gens, n, 0, 0, &mut facets);
        Ok(SimplicialComplex { n, facets: maximal_sets(facets) })
    }

    /// `I_Δ`, generated by the minimal non-faces.
    pub fn stanley_reisner_ideal(&self) -> MonomialIdeal {
        let n = self.n;
        if self.is_void() {
            return MonomialIdeal::unit(n);
        }
        let faces = all_faces(&self.facets);
        let mut gens = Vec::new();
        for &f in &faces {
            for v in 0..n {
                if f >> v & 1 == 1 {
                    continue;
                }
                let cand = f | 1 << v;
                if faces.contains(&cand) {
                    continue;
                }
                let minimal = VertexSet(cand).iter().all(|u| faces.contains(&(cand & !(1 << u))));
                if minimal {
                    gens.push(Monomial::squarefree(n, VertexSet(cand).iter()));
                }
            }
        }
        MonomialIdeal::minimalize(n, gens).expect("same ring")
    }

    /// Boundary map `∂_q : C_q → C_{q-1}` of the augmented chain complex, with
    /// faces indexed in [`SimplicialComplex::faces`] order within each dimension.
    pub fn boundary_matrix(&self, q: isize) -> SparseMatrix {
        let chains = ChainBases::new(&self.facets);
        chains.boundary(q)
    }

    /// `dim H̃_q(Δ; k)` for `q = -1..=dim Δ`, returned with index `q + 1`.
    /// The void complex yields `[0]`.
    pub fn reduced_homology(&self, field: Field) -> ReducedHomology {
        reduced_homology_of(&self.facets, field)
    }

    /// Depth of the Stanley–Reisner ring: `min { |F| + i : H̃_{i-1}(lk F) ≠ 0 }`.
    pub fn hochster_depth(&self, field: Field) -> Result<usize> {
        if self.is_void() {
            return Err(Error::VoidComplex);
        }
        let mut faces: Vec<u64> = all_faces(&self.facets).into_iter().collect();
        faces.sort_unstable_by_key(|f| f.count_ones());
        let mut best = usize::MAX;
        for f in faces {
            let size = f.count_ones() as usize;
            if size >= best {
                break;
            }
            let link: Vec<u64> =
                self.facets.iter().filter(|&&g| f & !g == 0).map(|&g| g & !f).collect();
            let h = reduced_homology_of(&maximal_sets(link), field);
            if let Some(q) = h.lowest_nonzero() {
                best = best.min(size + (q + 1) as usize);
            }
        }
        Ok(best)
    }

    /// Compares `H̃_*(Δ)` with `H̃_*(N(Δ))` in every degree.
    pub fn nerve_theorem_check(&self, field: Field) -> Result<bool> {
        let nerve = self.nerve()?;
        Ok(self.reduced_homology(field).same_as(&nerve.reduced_homology(field)))
    }
}

/// Backtracking over vertices for maximal sets containing no generator.
fn maximal_independent(gens: &[u64], n: usize, v: usize, face: u64, out: &mut Vec<u64>) {
    if v == n {
        let maximal = (0..n)
            .filter(|&u| face >> u & 1 == 0)
            .all(|u| gens.iter().any(|&g| g >> u & 1 == 1 && g & !(face | 1 << u) == 0));
        if maximal {
            out.push(face);
        }
        return;
    }
    let with = face | 1 << v;
    let blocked = gens.iter().any(|&g| g >> v & 1 == 1 && g & !with == 0);
    if !blocked {
        maximal_independent(gens, n, v + 1, with, out);
    }
    // leaving v out only pays off if some generator through v can still be completed
    let later = if v + 1 >= 64 { 0 } else { u64::MAX << (v + 1) };
    let completable = gens.iter().any(|&g| g >> v & 1 == 1 && g & !(face | 1 << v | later) == 0);
    if blocked || completable {
        maximal_independent(gens, n, v + 1, face, out);
    }
}

pub(crate) fn all_faces(facets: &[u64]) -> HashSet<u64> {
    let mut faces = HashSet::new();
    for &f in facets {
        let mut sub = f;
        loop {
            faces.insert(sub);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & f;
        }
    }
    faces
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedHomology {
    dims: Vec<usize>,
}

impl ReducedHomology {
    pub fn get(&self, q: isize) -> usize {
        if q < -1 {
            return 0;
        }
        self.dims.get((q + 1) as usize).copied().unwrap_or(0)
    }

    /// Dimensions for `q = -1, 0, 1, ...`.
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    pub fn lowest_nonzero(&self) -> Option<isize> {
        self.dims.iter().position(|&d| d != 0).map(|i| i as isize - 1)
    }

    pub fn same_as(&self, other: &ReducedHomology) -> bool {
        let len = self.dims.len().max(other.dims.len());
        (0..len).all(|i| self.get(i as isize - 1) == other.get(i as isize - 1))
    }

    /// `Σ (-1)^q dim H̃_q`.
    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(i, &d)| if (i as isize - 1) % 2 == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }
}

impl fmt::Display for ReducedHomology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.dims.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "H{}={}", i as isize - 1, d)?;
        }
        Ok(())
    }
}

struct ChainBases {
    // faces of each size 0..=max, sorted
    by_size: Vec<Vec<u64>>,
    index: Vec<HashMap<u64, usize>>,
}

impl ChainBases {
    fn new(facets: &[u64]) -> Self {
        let faces = all_faces(facets);
        let top = facets.iter().map(|f| f.count_ones() as usize).max().unwrap_or(0);
        let mut by_size = vec![Vec::new(); top + 1];
        for f in faces {
            by_size[f.count_ones() as usize].push(f);
        }
        for level in &mut by_size {
            level.sort_unstable_by_key(|&f| VertexSet(f));
        }
        let index = by_size
            .iter()
            .map(|level| level.iter().enumerate().map(|(i, &f)| (f, i)).collect())
            .collect();
        ChainBases { by_size, index }
    }

    fn count(&self, q: isize) -> usize {
        let s = q + 1;
        if s < 0 {
            return 0;
        }
        self.by_size.get(s as usize).map_or(0, Vec::len)
    }

    fn boundary(&self, q: isize) -> SparseMatrix {
        let size = q + 1;
        if size < 1 || size as usize >= self.by_size.len() {
            return SparseMatrix::new(self.count(q - 1));
        }
        let size = size as usize;
        let mut m = SparseMatrix::new(self.by_size[size - 1].len());
        for &f in &self.by_size[size] {
            let col = VertexSet(f)
                .iter()
                .enumerate()
                .map(|(pos, v)| {
                    let sign = if pos % 2 == 0 { 1 } else { -1 };
                    (self.index[size - 1][&(f & !(1 << v))], sign)
                })
                .collect();
            m.push_col(col);
        }
        m
    }
}

pub(crate) fn reduced_homology_of(facets: &[u64], field: Field) -> ReducedHomology {
    if facets.is_empty() {
        return ReducedHomology { dims: vec![0] };
    }
    let top = facets.iter().map(|f| f.count_ones() as usize).max().unwrap_or(0);
    // a cone over a common vertex is acyclic
    let common = facets.iter().fold(u64::MAX, |acc, &f| acc & f);
    if common != 0 {
        return ReducedHomology { dims: vec![0; top + 1] };
    }
    let chains = ChainBases::new(facets);
    // ranks[s] = rank of the boundary from size-s faces to size-(s-1) faces
    let ranks: Vec<usize> = (0..=top + 1)
        .map(|s| if s == 0 || s > top { 0 } else { chains.boundary(s as isize - 1).rank(field) })
        .collect();
    let dims = (0..=top)
        .map(|s| chains.by_size[s].len() - ranks[s] - ranks[s + 1])
        .collect();
    ReducedHomology { dims }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let facets: Vec<Vec<usize>> = self.facets.iter().map(|&g| VertexSet(g).labels()).collect();
        f.debug_struct("SimplicialComplex").field("n", &self.n).field("facets", &facets).finish()
    }
}
