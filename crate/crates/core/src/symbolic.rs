//! Symbolic powers `I(G)^(s) = ∩_C P_C^s` of edge ideals, where `C` runs over
//! the minimal vertex covers and `P_C = (x_i : i ∈ C)`.
//!
//! Besides the intersection construction there are two closed forms used as
//! independent cross-checks: the expansion for odd cycles by powers of
//! `f = x_1⋯x_n`, and the clique-product description for chordal graphs.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::monomial::{Monomial, MonomialIdeal};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SymbolicMethod {
    Intersection,
    GhosOddCycle,
    SullivantChordal,
}

impl fmt::Display for SymbolicMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SymbolicMethod::Intersection => "intersection",
            SymbolicMethod::GhosOddCycle => "ghos",
            SymbolicMethod::SullivantChordal => "sullivant",
        })
    }
}

impl FromStr for SymbolicMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "intersection" => Ok(SymbolicMethod::Intersection),
            "ghos" | "ghos-odd-cycle" => Ok(SymbolicMethod::GhosOddCycle),
            "sullivant" | "sullivant-chordal" => Ok(SymbolicMethod::SullivantChordal),
            other => Err(Error::Parse(format!("unknown symbolic power method `{other}`"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SymbolicPowerRequest {
    pub graph: Graph,
    pub s: u32,
    pub method: SymbolicMethod,
}

impl SymbolicPowerRequest {
    pub fn new(graph: Graph, s: u32) -> Self {
        SymbolicPowerRequest { graph, s, method: SymbolicMethod::Intersection }
    }

    pub fn with_method(mut self, method: SymbolicMethod) -> Self {
        self.method = method;
        self
    }
}

pub fn symbolic_power(req: &SymbolicPowerRequest) -> Result<MonomialIdeal> {
    symbolic_power_within(req, &Budget::UNLIMITED)
}

pub fn symbolic_power_within(req: &SymbolicPowerRequest, budget: &Budget) -> Result<MonomialIdeal> {
    if req.s == 0 {
        return Err(Error::InvalidParameter("symbolic powers need s >= 1".into()));
    }
    match req.method {
        SymbolicMethod::Intersection => by_intersection(&req.graph, req.s, budget),
        SymbolicMethod::GhosOddCycle => {
            let n = req.graph.n();
            if n < 3 || n.is_multiple_of(2) || req.graph != Graph::cycle(n)? {
                return Err(Error::MethodMismatch {
                    method: "ghos",
                    reason: "the graph is not an odd cycle 1-2-...-n-1".into(),
                });
            }
            ghos_odd_cycle_expansion(n, req.s)
        }
        SymbolicMethod::SullivantChordal => sullivant_chordal(&req.graph, req.s),
    }
}

/// `P_C^s`: every monomial of degree `s` supported on `cover`.
pub fn prime_power(n: usize, cover: VertexSet, s: u32) -> MonomialIdeal {
    let vars = cover.to_vec();
    if vars.is_empty() {
        return MonomialIdeal::zero(n);
    }
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    fill_degree(&vars, 0, s, &mut exps, &mut out);
    MonomialIdeal::minimalize(n, out).expect("same ring")
}

fn fill_degree(vars: &[usize], k: usize, left: u32, exps: &mut [u32], out: &mut Vec<Monomial>) {
    if k + 1 == vars.len() {
        exps[vars[k]] = left;
        out.push(Monomial::new(exps.iter().copied()).expect("bounded"));
        exps[vars[k]] = 0;
        return;
    }
    for e in (0..=left).rev() {
        exps[vars[k]] = e;
        fill_degree(vars, k + 1, left - e, exps, out);
    }
    exps[vars[k]] = 0;
}

fn by_intersection(g: &Graph, s: u32, budget: &Budget) -> Result<MonomialIdeal> {
    let covers = g.minimal_vertex_covers()?;
    let n = g.n();
    let mut acc: Option<MonomialIdeal> = None;
    for c in covers {
        budget.check()?;
        let p = prime_power(n, c, s);
        acc = Some(match acc {
            None => p,
            Some(i) => i.intersect(&p)?,
        });
    }
    Ok(acc.unwrap_or_else(|| MonomialIdeal::zero(n)))
}

/// `m ∈ I(G)^(s)` iff every minimal vertex cover carries degree at least `s` of `m`.
pub fn symbolic_membership(g: &Graph, s: u32, m: &Monomial) -> Result<bool> {
    if m.n() != g.n() {
        return Err(Error::DimensionMismatch { expected: g.n(), found: m.n() });
    }
    let covers = g.minimal_vertex_covers()?;
    Ok(covers.iter().all(|c| m.degree_in(c.iter()) >= u64::from(s)))
}

/// `I(C_n)^(s) = Σ_{j=0}^{a} I(C_n)^{s-j(k+1)} f^j` for `n = 2k+1`, `s = a(k+1) + b`.
pub fn ghos_odd_cycle_expansion(n: usize, s: u32) -> Result<MonomialIdeal> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("odd cycle length >= 3 required, got {n}")));
    }
    if s == 0 {
        return Err(Error::InvalidParameter("symbolic powers need s >= 1".into()));
    }
    let k = ((n - 1) / 2) as u32;
    let a = s / (k + 1);
    let edge = Graph::cycle(n)?.edge_ideal();
    let f = Monomial::new(vec![1; n])?;
    let mut total = MonomialIdeal::zero(n);
    for j in 0..=a {
        let term = edge.power(s - j * (k + 1))?.scale(&f.pow(j)?)?;
        total = total.sum(&term)?;
    }
    Ok(total)
}

/// Products `m_{C_1}⋯m_{C_t}` over multisets of cliques with `Σ(|C_i| - 1) = s`.
pub fn sullivant_chordal(g: &Graph, s: u32) -> Result<MonomialIdeal> {
    if s == 0 {
        return Err(Error::InvalidParameter("symbolic powers need s >= 1".into()));
    }
    if !g.is_chordal() {
        return Err(Error::NotChordal);
    }
    let n = g.n();
    let cliques: Vec<(u32, Vec<usize>)> =
        g.cliques().into_iter().map(|c| (c.len() as u32 - 1, c.to_vec())).collect();
    let mut found = HashSet::new();
    let mut exps = vec![0u32; n];
    clique_products(&cliques, 0, s, &mut exps, &mut found);
    MonomialIdeal::minimalize(n, found)
}

fn clique_products(
    cliques: &[(u32, Vec<usize>)],
    start: usize,
    left: u32,
    exps: &mut [u32],
    out: &mut HashSet<Monomial>,
) {
    if left == 0 {
        out.insert(Monomial::new(exps.iter().copied()).expect("bounded"));
        return;
    }
    for (i, (w, verts)) in cliques.iter().enumerate().skip(start) {
        if *w > left {
            continue;
        }
        for &v in verts {
            exps[v] += 1;
        }
        clique_products(cliques, i, left - w, exps, out);
        for &v in verts {
            exps[v] -= 1;
        }
    }
}

/// Checks `I(G)^(s) : e = I(G)^(s-1)` for the first leaf edge `e` of `G`.
pub fn check_leaf_colon(g: &Graph, s: u32) -> Result<bool> {
    let &(u, v) = g.leaf_edges().first().ok_or(Error::NoLeafEdge)?;
    check_leaf_colon_at(g, s, (u, v))
}

pub fn check_leaf_colon_at(g: &Graph, s: u32, edge: (usize, usize)) -> Result<bool> {
    if s < 2 {
        return Err(Error::InvalidParameter("leaf colon needs s >= 2".into()));
    }
    if !g.is_leaf_edge(edge.0, edge.1) {
        return Err(Error::NoLeafEdge);
    }
    let e = Monomial::squarefree(g.n(), [edge.0, edge.1]);
    let lhs = symbolic_power(&SymbolicPowerRequest::new(g.clone(), s))?.colon(&e)?;
    let rhs = symbolic_power(&SymbolicPowerRequest::new(g.clone(), s - 1))?;
    lhs.equals(&rhs)
}
