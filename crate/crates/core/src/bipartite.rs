//! Maximal induced bipartite subgraphs and the connectivity invariants
//! `bc(G) = min c(H)` and `bc'(G) = min c'(H)` over them.
//!
//! For a maximal induced bipartite `H = H_1 ∪ ⋯ ∪ H_c ∪ {p_1, …, p_t}` (the `H_i`
//! connected with at least one edge, the `p_j` isolated), `c(H) = c + t` and
//! `c'(H) = c + bou_G(H)`, where `bou_G(H)` is the least number of outside
//! vertices whose neighbourhoods cover the isolated points.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, ENUMERATION_CAP};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteWitness {
    pub vertices: VertexSet,
    pub components_with_edge: usize,
    pub isolated: Vec<usize>,
    pub c_h: usize,
    pub bouquet_count: Option<usize>,
    pub c_prime: Option<usize>,
}

impl BipartiteWitness {
    fn new(g: &Graph, vertices: VertexSet) -> Self {
        let comps = g.components_within(vertices);
        let isolated: Vec<usize> = comps.iter().filter(|c| c.len() == 1).filter_map(|c| c.first()).collect();
        let components_with_edge = comps.len() - isolated.len();
        BipartiteWitness {
            vertices,
            components_with_edge,
            c_h: components_with_edge + isolated.len(),
            isolated,
            bouquet_count: None,
            c_prime: None,
        }
    }

    /// Re-checks the defining properties against `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        g.is_bipartite_within(self.vertices)
            && g.edges().iter().any(|&(u, v)| self.vertices.contains(u) && self.vertices.contains(v))
            && g.vertices().difference(self.vertices).iter().all(|v| {
                let mut bigger = self.vertices;
                bigger.insert(v);
                !g.is_bipartite_within(bigger)
            })
    }
}

fn check_input(g: &Graph) -> Result<()> {
    if g.n() > ENUMERATION_CAP {
        return Err(Error::SizeCap { what: "bipartite subgraph enumeration", n: g.n(), cap: ENUMERATION_CAP });
    }
    if g.edge_count() == 0 {
        return Err(Error::Edgeless);
    }
    Ok(())
}

/// All vertex sets inducing a bipartite subgraph to which no single outside
/// vertex can be added. Largest first, then lexicographic.
pub fn maximal_induced_bipartite(g: &Graph) -> Result<Vec<BipartiteWitness>> {
    check_input(g)?;
    let mut found = Vec::new();
    search(g, 0, VertexSet::EMPTY, &mut found);
    found.sort_by(|a: &VertexSet, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    Ok(found.into_iter().map(|s| BipartiteWitness::new(g, s)).collect())
}

fn search(g: &Graph, v: usize, chosen: VertexSet, out: &mut Vec<VertexSet>) {
    let n = g.n();
    if v == n {
        let maximal = g.vertices().difference(chosen).iter().all(|u| {
            let mut bigger = chosen;
            bigger.insert(u);
            !g.is_bipartite_within(bigger)
        });
        if maximal {
            out.push(chosen);
        }
        return;
    }
    let mut with = chosen;
    with.insert(v);
    if g.is_bipartite_within(with) {
        search(g, v + 1, with, out);
    }
    // leaving v out only pays off if the remaining choices can still block it
    let rest = VertexSet(g.vertices().0 & !((1u64 << v << 1) - 1));
    if !g.is_bipartite_within(with.union(rest)) {
        search(g, v + 1, chosen, out);
    }
}

/// `bc(G)` with a minimizing witness.
pub fn bc(g: &Graph) -> Result<(usize, BipartiteWitness)> {
    let all = maximal_induced_bipartite(g)?;
    let best = all.into_iter().min_by_key(|w| w.c_h).expect("a graph with an edge has a witness");
    Ok((best.c_h, best))
}

/// `bou_G(H)`: exact minimum cover of the isolated points of `H` by
/// neighbourhoods of vertices outside `H`.
pub fn bouquet_number(g: &Graph, h: &BipartiteWitness) -> Result<usize> {
    if h.isolated.is_empty() {
        return Ok(0);
    }
    let points: VertexSet = h.isolated.iter().copied().collect();
    let outside = g.vertices().difference(h.vertices);
    let mut sets: Vec<u64> = outside.iter().map(|v| g.neighbors(v).intersection(points).0).filter(|&s| s != 0).collect();
    if let Some(&p) = h.isolated.iter().find(|&&p| sets.iter().all(|s| s >> p & 1 == 0)) {
        return Err(Error::UncoverableVertex(p));
    }
    sets.sort_unstable();
    sets.dedup();
    let undominated: Vec<u64> =
        sets.iter().copied().filter(|&s| !sets.iter().any(|&o| o != s && s & !o == 0)).collect();
    let mut best = greedy_cover(points.0, &undominated);
    exact_cover(points.0, &undominated, 0, &mut best);
    Ok(best)
}

fn greedy_cover(mut left: u64, sets: &[u64]) -> usize {
    let mut used = 0;
    while left != 0 {
        let s = sets.iter().max_by_key(|&&s| (s & left).count_ones()).copied().unwrap_or(0);
        left &= !s;
        used += 1;
    }
    used
}

fn exact_cover(left: u64, sets: &[u64], used: usize, best: &mut usize) {
    if left == 0 {
        *best = (*best).min(used);
        return;
    }
    let widest = sets.iter().map(|s| (s & left).count_ones()).max().unwrap_or(1).max(1);
    if used + (left.count_ones()).div_ceil(widest) as usize >= *best {
        return;
    }
    // branch on the point with the fewest covering sets
    let p = (0..64)
        .filter(|&p| left >> p & 1 == 1)
        .min_by_key(|&p| sets.iter().filter(|&&s| s >> p & 1 == 1).count())
        .expect("nonempty");
    for &s in sets.iter().filter(|&&s| s >> p & 1 == 1) {
        exact_cover(left & !s, sets, used + 1, best);
    }
}

/// Fills in `bouquet_count` and `c_prime`.
pub fn with_bouquets(g: &Graph, mut h: BipartiteWitness) -> Result<BipartiteWitness> {
    let b = bouquet_number(g, &h)?;
    h.bouquet_count = Some(b);
    h.c_prime = Some(h.components_with_edge + b);
    Ok(h)
}

/// `bc'(G)` with a minimizing witness (bouquet data filled in).
pub fn bc_prime(g: &Graph) -> Result<(usize, BipartiteWitness)> {
    let mut best: Option<BipartiteWitness> = None;
    for w in maximal_induced_bipartite(g)? {
        let w = with_bouquets(g, w)?;
        if best.as_ref().is_none_or(|b| w.c_prime < b.c_prime) {
            best = Some(w);
        }
    }
    let best = best.expect("a graph with an edge has a witness");
    Ok((best.c_prime.expect("filled"), best))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::WhiskerSpec;

    fn brute_force(g: &Graph) -> Vec<VertexSet> {
        let n = g.n();
        let mut out: Vec<VertexSet> = (0..1u64 << n)
            .map(VertexSet)
            .filter(|&s| g.is_bipartite_within(s))
            .filter(|&s| (0..n).filter(|&v| !s.contains(v)).all(|v| !g.is_bipartite_within(s.union(VertexSet::singleton(v)))))
            .collect();
        out.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        out
    }

    fn vertex_sets(ws: &[BipartiteWitness]) -> Vec<VertexSet> {
        ws.iter().map(|w| w.vertices).collect()
    }

    #[test]
    fn cycle_five_witnesses() {
        let g = Graph::cycle(5).unwrap();
        let ws = maximal_induced_bipartite(&g).unwrap();
        assert_eq!(ws.len(), 5);
        assert!(ws.iter().all(|w| w.vertices.len() == 4 && w.c_h == 1 && w.is_valid_for(&g)));
        assert_eq!(vertex_sets(&ws), brute_force(&g));
        assert_eq!(bc(&g).unwrap().0, 1);
        assert_eq!(bc_prime(&g).unwrap().0, 1);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        let graphs = [
            Graph::example_w(),
            Graph::complete(5).unwrap(),
            Graph::whisker(&WhiskerSpec::new(vec![2, 1, 1]).unwrap()).unwrap(),
            Graph::from_edges(7, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3), (5, 6)]).unwrap(),
        ];
        for g in graphs {
            assert_eq!(vertex_sets(&maximal_induced_bipartite(&g).unwrap()), brute_force(&g));
        }
    }

    #[test]
    fn bipartite_graph_is_its_own_witness() {
        let g = Graph::path(6).unwrap();
        let ws = maximal_induced_bipartite(&g).unwrap();
        assert_eq!(vertex_sets(&ws), vec![g.vertices()]);
        assert_eq!(bc(&g).unwrap().0, 1);
        assert_eq!(bc_prime(&g).unwrap().0, 1);
    }

    #[test]
    fn whisker_triangle() {
        let g = Graph::whisker(&WhiskerSpec::uniform(3).unwrap()).unwrap();
        let ws = maximal_induced_bipartite(&g).unwrap();
        assert_eq!(ws.len(), 3);
        for w in &ws {
            assert_eq!(w.vertices.intersection(VertexSet(0b111)).len(), 2);
            assert!(w.vertices.is_subset(w.vertices.union(VertexSet(0b111))));
            assert!(VertexSet(0b111000).is_subset(w.vertices));
        }
        assert_eq!(bc(&g).unwrap().0, 2);
        assert_eq!(bc_prime(&g).unwrap().0, 2);
    }

    #[test]
    fn bouquets() {
        let spec = WhiskerSpec::new(vec![2, 2, 2]).unwrap();
        let g = Graph::whisker(&spec).unwrap();
        let mut s: VertexSet = (3..9).collect();
        s.insert(0);
        s.insert(1);
        let w = maximal_induced_bipartite(&g).unwrap().into_iter().find(|w| w.vertices == s).unwrap();
        assert_eq!(w.isolated, spec.leaves_of(2));
        assert_eq!(bouquet_number(&g, &w).unwrap(), 1);
        assert_eq!(with_bouquets(&g, w).unwrap().c_prime, Some(2));
    }

    #[test]
    fn example_w_invariants() {
        let g = Graph::example_w();
        assert_eq!(bc(&g).unwrap().0, 3);
        assert_eq!(bc_prime(&g).unwrap().0, 2);
    }

    #[test]
    fn uncoverable_point() {
        // triangle plus a disjoint isolated vertex
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let w = maximal_induced_bipartite(&g).unwrap().remove(0);
        assert_eq!(w.isolated, vec![3]);
        assert_eq!(bouquet_number(&g, &w), Err(Error::UncoverableVertex(3)));
        assert!(bc_prime(&g).is_err());
    }

    #[test]
    fn errors() {
        assert_eq!(bc(&Graph::empty(3).unwrap()).unwrap_err(), Error::Edgeless);
        assert!(matches!(bc(&Graph::path(25).unwrap()), Err(Error::SizeCap { .. })));
    }
}
