//! JSON file formats and graph shorthands.
//!
//! Vertices and variables are 1-based in every file; the in-memory types are 0-based.
//!
//! ```text
//! ideal:   {"vars": n, "generators": [[e1, ..., en], ...]}
//! graph:   {"vertices": n, "edges": [[i, j], ...]}
//! complex: {"vertices": n, "facets": [[i, ...], ...]}
//! ```
//!
//! Graph shorthands: `cycle:5`, `path:4`, `complete:4`, `whisker:1,1,1`, `example:w`.
//! Whisker graphs number the clique first (`1..n`), then the leaves of vertex 1,
//! vertex 2, and so on.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, WhiskerSpec};
use crate::monomial::MonomialIdeal;
use crate::simplicial::SimplicialComplex;

#[derive(Serialize, Deserialize)]
struct IdealFile {
    vars: usize,
    generators: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct GraphFile {
    vertices: usize,
    edges: Vec<[usize; 2]>,
}

#[derive(Serialize, Deserialize)]
struct ComplexFile {
    vertices: usize,
    facets: Vec<Vec<usize>>,
}

fn parse_err(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

fn zero_based(label: usize, n: usize) -> Result<usize> {
    if label == 0 || label > n {
        return Err(Error::Parse(format!("vertex label {label} outside 1..={n}")));
    }
    Ok(label - 1)
}

pub fn ideal_from_json(text: &str) -> Result<MonomialIdeal> {
    let f: IdealFile = serde_json::from_str(text).map_err(parse_err)?;
    MonomialIdeal::from_exponents(f.vars, f.generators)
}

pub fn ideal_to_json(ideal: &MonomialIdeal) -> String {
    let f = IdealFile {
        vars: ideal.n(),
        generators: ideal.generators().iter().map(|g| g.exponents().to_vec()).collect(),
    };
    serde_json::to_string(&f).expect("plain data")
}

pub fn graph_from_json(text: &str) -> Result<Graph> {
    let f: GraphFile = serde_json::from_str(text).map_err(parse_err)?;
    let edges = f
        .edges
        .iter()
        .map(|&[u, v]| Ok((zero_based(u, f.vertices)?, zero_based(v, f.vertices)?)))
        .collect::<Result<Vec<_>>>()?;
    Graph::from_edges(f.vertices, edges)
}

pub fn graph_to_json(g: &Graph) -> String {
    let f = GraphFile { vertices: g.n(), edges: g.edges().into_iter().map(|(u, v)| [u + 1, v + 1]).collect() };
    serde_json::to_string(&f).expect("plain data")
}

pub fn complex_from_json(text: &str) -> Result<SimplicialComplex> {
    let f: ComplexFile = serde_json::from_str(text).map_err(parse_err)?;
    let facets = f
        .facets
        .iter()
        .map(|face| face.iter().map(|&v| zero_based(v, f.vertices)).collect::<Result<VertexSet>>())
        .collect::<Result<Vec<_>>>()?;
    SimplicialComplex::from_facets(f.vertices, facets)
}

pub fn complex_to_json(c: &SimplicialComplex) -> String {
    let f = ComplexFile { vertices: c.n(), facets: c.facets().into_iter().map(VertexSet::labels).collect() };
    serde_json::to_string(&f).expect("plain data")
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad integer `{t}`"))))
        .collect()
}

/// Parses a graph shorthand such as `cycle:5` or `whisker:2,1,1`.
pub fn parse_graph_shorthand(s: &str) -> Result<Graph> {
    let s = s.trim();
    let (kind, arg) = s.split_once(':').ok_or_else(|| Error::Parse(format!("not a graph shorthand: `{s}`")))?;
    let single = || -> Result<usize> {
        arg.trim().parse().map_err(|_| Error::Parse(format!("bad size in `{s}`")))
    };
    match kind.trim().to_ascii_lowercase().as_str() {
        "cycle" => Graph::cycle(single()?),
        "path" => Graph::path(single()?),
        "complete" => Graph::complete(single()?),
        "whisker" => Graph::whisker(&WhiskerSpec::new(parse_list(arg)?)?),
        "example" if arg.trim().eq_ignore_ascii_case("w") => Ok(Graph::example_w()),
        _ => Err(Error::Parse(format!("unknown graph shorthand `{s}`"))),
    }
}

/// A shorthand, or else a path to a graph JSON file.
pub fn load_graph(spec: &str) -> Result<Graph> {
    if Path::new(spec).is_file() {
        let text = std::fs::read_to_string(spec).map_err(|e| Error::Parse(format!("{spec}: {e}")))?;
        return graph_from_json(&text);
    }
    parse_graph_shorthand(spec)
}

pub fn load_ideal(path: &str) -> Result<MonomialIdeal> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
    ideal_from_json(&text)
}

pub fn load_complex(path: &str) -> Result<SimplicialComplex> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
    complex_from_json(&text)
}
