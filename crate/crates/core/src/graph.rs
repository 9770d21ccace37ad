//! Simple graphs on at most 64 vertices, the standard families (paths, cycles,
//! complete graphs, whisker graphs) and the bridges from graphs to ideals.
//!
//! Vertices are 0-based in the API; vertex `i` corresponds to the variable
//! `x_{i+1}`. File formats and the CLI use 1-based labels.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};

pub const MAX_VERTICES: usize = 64;

/// Exhaustive subset searches (covers, bipartite witnesses) refuse larger graphs.
pub const ENUMERATION_CAP: usize = 24;

/// A set of vertices stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// 1-based labels, for display and file formats.
    pub fn labels(self) -> Vec<usize> {
        self.iter().map(|v| v + 1).collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for VertexSet {
    /// Lexicographic on the sorted vertex lists.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.labels()).finish()
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

/// Leaf counts of a whisker graph `W_a`: `a[i]` pendant vertices glued to vertex
/// `i` of the complete graph on `a.len()` vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WhiskerSpec {
    pub a: Vec<usize>,
}

impl WhiskerSpec {
    pub fn new(a: Vec<usize>) -> Result<Self> {
        if a.len() < 2 {
            return Err(Error::InvalidParameter(format!(
                "whisker graph needs a clique of size >= 2, got {}",
                a.len()
            )));
        }
        Ok(WhiskerSpec { a })
    }

    /// `W_n = W(K_n)`, one whisker per clique vertex.
    pub fn uniform(n: usize) -> Result<Self> {
        Self::new(vec![1; n])
    }

    pub fn base(&self) -> usize {
        self.a.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.a.len() + self.a.iter().sum::<usize>()
    }

    /// 0-based vertex of the leaf `y_{i,l}` (both indices 0-based).
    pub fn leaf(&self, i: usize, l: usize) -> usize {
        debug_assert!(l < self.a[i]);
        self.base() + self.a[..i].iter().sum::<usize>() + l
    }

    pub fn leaves_of(&self, i: usize) -> Vec<usize> {
        (0..self.a[i]).map(|l| self.leaf(i, l)).collect()
    }
}

impl Graph {
    /// Graph on `n` vertices without edges.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::SizeCap { what: "graphs", n, cap: MAX_VERTICES });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from 0-based edges. Loops are rejected; duplicates are merged.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::InvalidVertex { vertex: w + 1, n: self.n });
            }
        }
        if u == v {
            return Err(Error::InvalidParameter(format!("loop at vertex {}", u + 1)));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn path(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidParameter("path needs n >= 1".into()));
        }
        Self::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter("cycle needs n >= 3".into()));
        }
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn complete(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter("complete graph needs n >= 2".into()));
        }
        Self::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
    }

    /// `W_a`: clique vertices first, then the leaves `y_{1,1}, ..., y_{n,a_n}` in row order.
    pub fn whisker(spec: &WhiskerSpec) -> Result<Self> {
        let mut g = Self::empty(spec.vertex_count())?;
        let base = spec.base();
        for i in 0..base {
            for j in i + 1..base {
                g.add_edge(i, j)?;
            }
            for y in spec.leaves_of(i) {
                g.add_edge(i, y)?;
            }
        }
        Ok(g)
    }

    /// The 9-vertex graph obtained by gluing two whiskers at every vertex of a triangle.
    pub fn example_w() -> Self {
        Self::whisker(&WhiskerSpec { a: vec![2, 2, 2] }).expect("fixed size")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in VertexSet(self.adj[u] & above(u)).iter() {
                out.push((u, v));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.degree(v) == 1
    }

    pub fn is_leaf_edge(&self, u: usize, v: usize) -> bool {
        self.has_edge(u, v) && (self.is_leaf(u) || self.is_leaf(v))
    }

    pub fn leaf_edges(&self) -> Vec<(usize, usize)> {
        self.edges().into_iter().filter(|&(u, v)| self.is_leaf_edge(u, v)).collect()
    }

    fn check_set(&self, s: VertexSet) -> Result<()> {
        if !s.is_subset(self.vertices()) {
            let bad = s.difference(self.vertices()).first().unwrap_or(0);
            return Err(Error::InvalidVertex { vertex: bad + 1, n: self.n });
        }
        Ok(())
    }

    /// Induced subgraph on `s`, relabelled `0..|s|` preserving vertex order.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph> {
        self.check_set(s)?;
        let verts = s.to_vec();
        let mut g = Graph::empty(verts.len())?;
        for (a, &u) in verts.iter().enumerate() {
            for (b, &v) in verts.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(a, b)?;
                }
            }
        }
        Ok(g)
    }

    /// Same vertex set, keeping only edges inside `s`.
    pub fn restrict_to(&self, s: VertexSet) -> Result<Graph> {
        self.check_set(s)?;
        let adj = (0..self.n)
            .map(|v| if s.contains(v) { self.adj[v] & s.0 } else { 0 })
            .collect();
        Ok(Graph { n: self.n, adj })
    }

    /// Components of the subgraph induced on `s`, ordered by smallest vertex.
    pub fn components_within(&self, s: VertexSet) -> Vec<VertexSet> {
        let mut rest = s;
        let mut out = Vec::new();
        while let Some(start) = rest.first() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = 0u64;
                for v in frontier.iter() {
                    next |= self.adj[v];
                }
                let fresh = VertexSet(next & s.0 & !comp.0);
                comp = comp.union(fresh);
                frontier = fresh;
            }
            rest = rest.difference(comp);
            out.push(comp);
        }
        out
    }

    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// 2-colouring of the subgraph induced on `s`; the smallest vertex of every
    /// component goes to the first part.
    pub fn bipartition_within(&self, s: VertexSet) -> Option<(VertexSet, VertexSet)> {
        let mut x = VertexSet::EMPTY;
        let mut y = VertexSet::EMPTY;
        let mut rest = s;
        let mut queue = VecDeque::new();
        while let Some(start) = rest.first() {
            x.insert(start);
            rest.remove(start);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                let u_in_x = x.contains(u);
                for v in VertexSet(self.adj[u] & s.0).iter() {
                    let same = if u_in_x { x } else { y };
                    if same.contains(v) {
                        return None;
                    }
                    if rest.contains(v) {
                        rest.remove(v);
                        if u_in_x {
                            y.insert(v)
                        } else {
                            x.insert(v)
                        }
                        queue.push_back(v);
                    }
                }
            }
        }
        Some((x, y))
    }

    pub fn bipartite_partition(&self) -> Option<(VertexSet, VertexSet)> {
        self.bipartition_within(self.vertices())
    }

    pub fn is_bipartite_within(&self, s: VertexSet) -> bool {
        self.bipartition_within(s).is_some()
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartite_partition().is_some()
    }

    /// `d(H)`: for each vertex, the number of incident edges that are not leaf edges.
    pub fn nonleaf_degree_vector(&self) -> Vec<u32> {
        let mut d = vec![0u32; self.n];
        for (u, v) in self.edges() {
            if !self.is_leaf_edge(u, v) {
                d[u] += 1;
                d[v] += 1;
            }
        }
        d
    }

    /// Replaces every component with at least one edge by the complete bipartite
    /// graph on its two colour classes.
    pub fn bipartite_completion(&self) -> Result<Graph> {
        let (x, y) = self.bipartite_partition().ok_or(Error::NotBipartite)?;
        let mut g = Graph::empty(self.n)?;
        for comp in self.connected_components() {
            if comp.len() < 2 {
                continue;
            }
            for u in comp.intersection(x).iter() {
                for v in comp.intersection(y).iter() {
                    g.add_edge(u, v)?;
                }
            }
        }
        Ok(g)
    }

    /// `I(G) = (x_i x_j : {i,j} ∈ E(G))`.
    pub fn edge_ideal(&self) -> MonomialIdeal {
        let gens = self.edges().into_iter().map(|(u, v)| Monomial::squarefree(self.n, [u, v]));
        MonomialIdeal::minimalize(self.n, gens).expect("same ring")
    }

    /// Product of the edge monomials of all edges of the graph.
    pub fn edge_product(&self) -> Monomial {
        let mut exps = vec![0u32; self.n];
        for (u, v) in self.edges() {
            exps[u] += 1;
            exps[v] += 1;
        }
        Monomial::new(exps).expect("bounded by 64")
    }

    /// All inclusion-minimal vertex covers, as complements of the maximal
    /// independent sets (Bron–Kerbosch with pivoting on the complement graph).
    pub fn minimal_vertex_covers(&self) -> Result<Vec<VertexSet>> {
        if self.n > ENUMERATION_CAP {
            return Err(Error::SizeCap {
                what: "vertex cover enumeration",
                n: self.n,
                cap: ENUMERATION_CAP,
            });
        }
        let full = self.vertices();
        // non-neighbours in the complement sense
        let comp: Vec<u64> = (0..self.n).map(|v| !self.adj[v] & full.0 & !(1 << v)).collect();
        let mut independents = Vec::new();
        bron_kerbosch(&comp, 0, full.0, 0, &mut independents);
        let mut covers: Vec<VertexSet> =
            independents.into_iter().map(|s| full.difference(VertexSet(s))).collect();
        covers.sort();
        Ok(covers)
    }

    /// Perfect elimination ordering test via maximum cardinality search.
    pub fn is_chordal(&self) -> bool {
        let n = self.n;
        let mut weight = vec![0usize; n];
        let mut numbered = VertexSet::EMPTY;
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| !numbered.contains(v))
                .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
                .expect("unnumbered vertex remains");
            numbered.insert(v);
            order.push(v);
            for u in self.neighbors(v).difference(numbered).iter() {
                weight[u] += 1;
            }
        }
        // reverse of the MCS order is a PEO iff the graph is chordal
        let mut pos = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        for &v in &order {
            let earlier: Vec<usize> =
                self.neighbors(v).iter().filter(|&u| pos[u] < pos[v]).collect();
            if let Some(&parent) = earlier.iter().max_by_key(|&&u| pos[u]) {
                for &u in &earlier {
                    if u != parent && !self.has_edge(u, parent) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// All cliques with at least two vertices, in lexicographic order.
    pub fn cliques(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        for v in 0..self.n {
            let later = VertexSet(self.adj[v] & above(v));
            self.extend_cliques(VertexSet::singleton(v), later, &mut out);
        }
        out.sort();
        out
    }

    fn extend_cliques(&self, clique: VertexSet, cands: VertexSet, out: &mut Vec<VertexSet>) {
        for u in cands.iter() {
            let next = clique.union(VertexSet::singleton(u));
            out.push(next);
            let later = VertexSet(cands.0 & self.adj[u] & above(u));
            self.extend_cliques(next, later, out);
        }
    }
}

/// Bits strictly above `v`.
fn above(v: usize) -> u64 {
    u64::MAX.checked_shl(v as u32 + 1).unwrap_or(0)
}

fn bron_kerbosch(adj: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    let pivot = VertexSet(p | x)
        .iter()
        .max_by_key(|&u| (adj[u] & p).count_ones())
        .expect("p is non-empty");
    for v in VertexSet(p & !adj[pivot]).iter() {
        bron_kerbosch(adj, r | 1 << v, p & adj[v], x & adj[v], out);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<(usize, usize)> = self.edges().iter().map(|&(u, v)| (u + 1, v + 1)).collect();
        f.debug_struct("Graph").field("n", &self.n).field("edges", &edges).finish()
    }
}
