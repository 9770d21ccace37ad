//! Multigraded Betti numbers of `S/I` for monomial ideals, and with them
//! projective dimension and depth (`depth S/I = n - pd S/I`).
//!
//! `β_{i,b}(I) = dim H̃_{i-1}(K^b(I))` where `K^b(I)` is the upper Koszul
//! simplicial complex `{a ⊆ supp b squarefree : x^{b-a} ∈ I}`. Only multidegrees
//! in the lcm lattice can carry nonzero Betti numbers, so the engine walks the
//! lattice directly: coordinates are fixed one at a time, the generators
//! dividing the partial multidegree are filtered along the way, and a branch is
//! cut as soon as a fixed coordinate exceeds the maximum of the surviving
//! generators (such `b` are not joins of their divisors).

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::time::Instant;

use rayon::prelude::*;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::Field;
use crate::monomial::{Monomial, MonomialIdeal};
use crate::simplicial::{maximal_sets, reduced_homology_of, ReducedHomology, SimplicialComplex};
use crate::symbolic::{symbolic_power_within, SymbolicPowerRequest};

pub const DEFAULT_LATTICE_CAP: usize = 500_000;

/// Variables beyond this many do not fit the bitmask faces of the Koszul complexes.
pub const MAX_BETTI_VARS: usize = 64;

const PAR_LEVELS: usize = 3;

#[derive(Clone, Copy, Debug)]
pub struct BettiOptions {
    pub field: Field,
    pub lattice_cap: usize,
    pub budget: Budget,
}

impl Default for BettiOptions {
    fn default() -> Self {
        BettiOptions { field: Field::DEFAULT, lattice_cap: DEFAULT_LATTICE_CAP, budget: Budget::UNLIMITED }
    }
}

impl BettiOptions {
    pub fn over(field: Field) -> Self {
        BettiOptions { field, ..Default::default() }
    }
}

/// Join-closure of the minimal generators (bottom element excluded).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LcmLattice {
    n: usize,
    elements: Vec<Monomial>,
}

impl LcmLattice {
    pub fn elements(&self) -> &[Monomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.elements.binary_search(m).is_ok()
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

fn check_nontrivial(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    if ideal.n() > MAX_BETTI_VARS {
        return Err(Error::SizeCap { what: "Betti computations", n: ideal.n(), cap: MAX_BETTI_VARS });
    }
    Ok(())
}

pub fn lcm_lattice(ideal: &MonomialIdeal) -> Result<LcmLattice> {
    lcm_lattice_capped(ideal, DEFAULT_LATTICE_CAP)
}

pub fn lcm_lattice_capped(ideal: &MonomialIdeal, cap: usize) -> Result<LcmLattice> {
    check_nontrivial(ideal)?;
    let walker = LatticeWalk::new(ideal, cap, Budget::UNLIMITED);
    let mut elements: Vec<Monomial> = walker
        .run(&|_: &[u32], _: &[usize]| Some(()))?
        .into_iter()
        .map(|(b, ())| Monomial::new(b).expect("bounded by generators"))
        .collect();
    elements.sort_unstable();
    Ok(LcmLattice { n: ideal.n(), elements })
}

struct LatticeWalk<'a> {
    n: usize,
    gens: Vec<&'a [u32]>,
    cap: usize,
    budget: Budget,
    seen: AtomicUsize,
    failed: AtomicBool,
}

type Leaf<'f, R> = dyn Fn(&[u32], &[usize]) -> Option<R> + Sync + 'f;

impl<'a> LatticeWalk<'a> {
    fn new(ideal: &'a MonomialIdeal, cap: usize, budget: Budget) -> Self {
        LatticeWalk {
            n: ideal.n(),
            gens: ideal.generators().iter().map(Monomial::exponents).collect(),
            cap,
            budget,
            seen: AtomicUsize::new(0),
            failed: AtomicBool::new(false),
        }
    }

    /// Visits every lattice element `b` with the generators dividing `x^b`.
    fn run<R: Send>(&self, leaf: &Leaf<'_, R>) -> Result<Vec<(Vec<u32>, R)>> {
        let all: Vec<usize> = (0..self.gens.len()).collect();
        let mut prefix = Vec::with_capacity(self.n);
        self.descend(0, &mut prefix, &all, leaf)
    }

    fn descend<R: Send>(
        &self,
        j: usize,
        prefix: &mut Vec<u32>,
        filtered: &[usize],
        leaf: &Leaf<'_, R>,
    ) -> Result<Vec<(Vec<u32>, R)>> {
        if self.failed.load(Ordering::Relaxed) {
            return Err(Error::Timeout);
        }
        if j == self.n {
            let count = self.seen.fetch_add(1, Ordering::Relaxed) + 1;
            if count > self.cap {
                self.failed.store(true, Ordering::Relaxed);
                return Err(Error::LatticeCap { cap: self.cap });
            }
            if count.is_multiple_of(1024) {
                if let Err(e) = self.budget.check() {
                    self.failed.store(true, Ordering::Relaxed);
                    return Err(e);
                }
            }
            return Ok(leaf(prefix, filtered).map(|r| vec![(prefix.clone(), r)]).unwrap_or_default());
        }
        let mut values: Vec<u32> = filtered.iter().map(|&g| self.gens[g][j]).collect();
        values.sort_unstable();
        values.dedup();

        let branch = |v: u32, prefix: &mut Vec<u32>| -> Result<Vec<(Vec<u32>, R)>> {
            let next: Vec<usize> = filtered.iter().copied().filter(|&g| self.gens[g][j] <= v).collect();
            // every fixed coordinate must be attained by a surviving generator
            for (i, &bi) in prefix.iter().chain(std::iter::once(&v)).enumerate() {
                if bi > 0 && !next.iter().any(|&g| self.gens[g][i] == bi) {
                    return Ok(Vec::new());
                }
            }
            if next.is_empty() {
                return Ok(Vec::new());
            }
            prefix.push(v);
            let out = self.descend(j + 1, prefix, &next, leaf);
            prefix.pop();
            out
        };

        if j < PAR_LEVELS && filtered.len() > 64 {
            let parts: Result<Vec<Vec<_>>> = values
                .par_iter()
                .map(|&v| {
                    let mut local = prefix.clone();
                    branch(v, &mut local)
                })
                .collect();
            Ok(parts?.into_iter().flatten().collect())
        } else {
            let mut out = Vec::new();
            for v in values {
                out.extend(branch(v, prefix)?);
            }
            Ok(out)
        }
    }
}

/// Facets of `K^b(I)` given the generators dividing `x^b`: the slack sets
/// `{j : g_j < b_j}`.
fn koszul_facets(b: &[u32], divisors: impl Iterator<Item = impl AsRef<[u32]>>) -> Vec<u64> {
    let sets = divisors
        .map(|g| {
            g.as_ref()
                .iter()
                .zip(b)
                .enumerate()
                .filter(|(_, (gi, bi))| gi < bi)
                .fold(0u64, |acc, (j, _)| acc | 1 << j)
        })
        .collect();
    maximal_sets(sets)
}

/// Upper Koszul simplicial complex `K^b(I)` on the variables.
pub fn koszul_upper_complex(ideal: &MonomialIdeal, b: &Monomial) -> Result<SimplicialComplex> {
    if ideal.n() != b.n() {
        return Err(Error::DimensionMismatch { expected: ideal.n(), found: b.n() });
    }
    if ideal.n() > MAX_BETTI_VARS {
        return Err(Error::SizeCap { what: "Koszul complexes", n: ideal.n(), cap: MAX_BETTI_VARS });
    }
    let divisors = ideal.generators().iter().filter(|g| g.divides(b)).map(Monomial::exponents);
    Ok(SimplicialComplex::from_masks(ideal.n(), koszul_facets(b.exponents(), divisors)))
}

/// Homology of the complex generated by `facets`, replacing it by its nerve
/// while the nerve has fewer vertices.
fn homology_reduced(mut facets: Vec<u64>, field: Field) -> ReducedHomology {
    loop {
        if facets.len() <= 1 || facets.iter().fold(u64::MAX, |a, &f| a & f) != 0 {
            return reduced_homology_of(&facets, field);
        }
        let support = facets.iter().fold(0u64, |a, &f| a | f);
        if facets.len() >= support.count_ones() as usize || facets.len() > 64 {
            return reduced_homology_of(&facets, field);
        }
        let mut sets = Vec::new();
        let mut rest = support;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            let s = facets
                .iter()
                .enumerate()
                .filter(|(_, &f)| f >> v & 1 == 1)
                .fold(0u64, |a, (k, _)| a | 1 << k);
            sets.push(s);
        }
        facets = maximal_sets(sets);
    }
}

/// Multigraded Betti numbers `β_{i,b}(S/I)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    n: usize,
    field: Field,
    entries: BTreeMap<(usize, Vec<u32>), usize>,
}

impl BettiTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, i: usize, b: &Monomial) -> usize {
        self.entries.get(&(i, b.exponents().to_vec())).copied().unwrap_or(0)
    }

    /// Nonzero entries as `(i, b, β_{i,b})`, ordered by `i` then multidegree.
    pub fn entries(&self) -> impl Iterator<Item = (usize, Monomial, usize)> + '_ {
        self.entries
            .iter()
            .map(|((i, b), &v)| (*i, Monomial::new(b.iter().copied()).expect("bounded"), v))
    }

    /// Total Betti number `β_i(S/I)`.
    pub fn total(&self, i: usize) -> usize {
        self.entries.iter().filter(|((k, _), _)| *k == i).map(|(_, &v)| v).sum()
    }

    pub fn totals(&self) -> Vec<usize> {
        (0..=self.pd()).map(|i| self.total(i)).collect()
    }

    pub fn pd(&self) -> usize {
        self.entries.keys().map(|(i, _)| *i).max().unwrap_or(0)
    }

    pub fn depth(&self) -> usize {
        self.n - self.pd()
    }
}

pub fn betti_table(ideal: &MonomialIdeal, field: Field) -> Result<BettiTable> {
    betti_table_with(ideal, &BettiOptions::over(field))
}

pub fn betti_table_with(ideal: &MonomialIdeal, opts: &BettiOptions) -> Result<BettiTable> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let n = ideal.n();
    let mut entries = BTreeMap::new();
    entries.insert((0, vec![0; n]), 1);
    if ideal.is_zero() {
        return Ok(BettiTable { n, field: opts.field, entries });
    }
    check_nontrivial(ideal)?;
    let walker = LatticeWalk::new(ideal, opts.lattice_cap, opts.budget);
    let gens = &walker.gens;
    let field = opts.field;
    let found = walker.run(&|b: &[u32], divisors: &[usize]| {
        let facets = koszul_facets(b, divisors.iter().map(|&g| gens[g]));
        let h = homology_reduced(facets, field);
        (!h.is_zero()).then_some(h)
    })?;
    for (b, h) in found {
        for (k, &d) in h.dims().iter().enumerate() {
            if d > 0 {
                // H̃_{k-1}(K^b) gives β_{k,b}(I) = β_{k+1,b}(S/I)
                entries.insert((k + 1, b.clone()), d);
            }
        }
    }
    Ok(BettiTable { n, field: opts.field, entries })
}

pub fn pd(ideal: &MonomialIdeal, field: Field) -> Result<usize> {
    Ok(betti_table(ideal, field)?.pd())
}

pub fn depth(ideal: &MonomialIdeal, field: Field) -> Result<usize> {
    Ok(betti_table(ideal, field)?.depth())
}

pub fn depth_with(ideal: &MonomialIdeal, opts: &BettiOptions) -> Result<usize> {
    Ok(betti_table_with(ideal, opts)?.depth())
}

/// Standard polarization: `x_i^e ↦ x_{i,1}⋯x_{i,e}`, variables of `x_i` laid out
/// in consecutive blocks of size `max(1, max exponent of x_i)`.
/// Returns the squarefree ideal and the number of variables added.
pub fn polarize(ideal: &MonomialIdeal) -> Result<(MonomialIdeal, usize)> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let top = ideal.max_exponents();
    let widths: Vec<usize> = top.iter().map(|&e| (e as usize).max(1)).collect();
    let offsets: Vec<usize> = widths
        .iter()
        .scan(0usize, |acc, &w| {
            let start = *acc;
            *acc += w;
            Some(start)
        })
        .collect();
    let total: usize = widths.iter().sum();
    let offsets = &offsets;
    let gens = ideal.generators().iter().map(|g| {
        let support = g
            .exponents()
            .iter()
            .enumerate()
            .flat_map(|(i, &e)| (0..e as usize).map(move |k| offsets[i] + k));
        Monomial::squarefree(total, support)
    });
    let pol = MonomialIdeal::minimalize(total, gens)?;
    Ok((pol, total - ideal.n()))
}

/// Independent depth route: Hochster's formula on the Stanley–Reisner complex
/// of the polarization, minus the number of added variables.
pub fn depth_via_polarization(ideal: &MonomialIdeal, field: Field) -> Result<usize> {
    let (pol, added) = polarize(ideal)?;
    let delta = SimplicialComplex::stanley_reisner_complex(&pol)?;
    Ok(delta.hochster_depth(field)? - added)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PowerKind {
    Ordinary,
    Symbolic,
}

impl std::fmt::Display for PowerKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            PowerKind::Ordinary => "ordinary",
            PowerKind::Symbolic => "symbolic",
        })
    }
}

impl std::str::FromStr for PowerKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "ordinary" => Ok(PowerKind::Ordinary),
            "symbolic" => Ok(PowerKind::Symbolic),
            other => Err(Error::Parse(format!("unknown power kind `{other}`"))),
        }
    }
}

/// `I(G)^s` or `I(G)^(s)`.
pub fn graph_power(g: &Graph, kind: PowerKind, s: u32, budget: &Budget) -> Result<MonomialIdeal> {
    match kind {
        PowerKind::Ordinary => g.edge_ideal().power(s),
        PowerKind::Symbolic => symbolic_power_within(&SymbolicPowerRequest::new(g.clone(), s), budget),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DepthRow {
    pub s: u32,
    pub depth: usize,
    pub pd: usize,
    pub generators: usize,
    pub seconds: f64,
}

/// Depth and projective dimension of `S/I(G)^s` (or the symbolic power) for `s = 1..=s_max`.
pub fn depth_rows(g: &Graph, kind: PowerKind, s_max: u32, opts: &BettiOptions) -> Result<Vec<DepthRow>> {
    if s_max == 0 {
        return Err(Error::InvalidParameter("s_max must be at least 1".into()));
    }
    (1..=s_max).map(|s| depth_row(g, kind, s, opts)).collect()
}

pub fn depth_row(g: &Graph, kind: PowerKind, s: u32, opts: &BettiOptions) -> Result<DepthRow> {
    let start = Instant::now();
    let ideal = graph_power(g, kind, s, &opts.budget)?;
    let table = betti_table_with(&ideal, opts)?;
    Ok(DepthRow {
        s,
        depth: table.depth(),
        pd: table.pd(),
        generators: ideal.len(),
        seconds: start.elapsed().as_secs_f64(),
    })
}

pub fn depth_sequence(g: &Graph, kind: PowerKind, s_max: u32, field: Field) -> Result<Vec<usize>> {
    Ok(depth_rows(g, kind, s_max, &BettiOptions::over(field))?.into_iter().map(|r| r.depth).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Stabilization {
    /// First exponent (1-based) from which the computed sequence is constant.
    pub index: usize,
    pub value: usize,
    /// Set unless the sequence reaches `proven_from`, the exponent from which
    /// the limit is known to have been attained.
    pub tentative: bool,
}

pub fn stabilization_index(seq: &[usize], proven_from: Option<usize>) -> Option<Stabilization> {
    let &value = seq.last()?;
    let tail = seq.iter().rev().take_while(|&&d| d == value).count();
    let index = seq.len() - tail + 1;
    let tentative = proven_from.is_none_or(|w| seq.len() < w);
    Some(Stabilization { index, value, tentative })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::WhiskerSpec;

    fn ideal(n: usize, rows: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, rows.iter().map(|r| r.to_vec())).unwrap()
    }

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.iter().copied()).unwrap()
    }

    #[test]
    fn lattices() {
        let l = lcm_lattice(&ideal(2, &[&[1, 0], &[0, 1]])).unwrap();
        assert_eq!(l.elements(), &[mono(&[1, 1]), mono(&[1, 0]), mono(&[0, 1])]);
        let t = lcm_lattice(&Graph::cycle(3).unwrap().edge_ideal()).unwrap();
        assert_eq!(t.len(), 4);
        assert!(t.contains(&mono(&[1, 1, 1])));
        assert_eq!(lcm_lattice(&ideal(3, &[&[2, 1, 0]])).unwrap().len(), 1);
        assert_eq!(lcm_lattice(&MonomialIdeal::zero(2)), Err(Error::ZeroIdeal));
    }

    #[test]
    fn lattice_cap_is_enforced() {
        let i = Graph::cycle(5).unwrap().edge_ideal().power(3).unwrap();
        assert_eq!(lcm_lattice_capped(&i, 10), Err(Error::LatticeCap { cap: 10 }));
    }

    #[test]
    fn koszul_complexes() {
        let x1 = ideal(1, &[&[1]]);
        let k = koszul_upper_complex(&x1, &mono(&[1])).unwrap();
        assert_eq!(k, SimplicialComplex::empty_complex(1));
        let max = ideal(2, &[&[1, 0], &[0, 1]]);
        let k = koszul_upper_complex(&max, &mono(&[1, 1])).unwrap();
        assert_eq!(k.reduced_homology(Field::DEFAULT).dims(), &[0, 1]);
        let t = betti_table(&max, Field::DEFAULT).unwrap();
        assert_eq!(t.get(2, &mono(&[1, 1])), 1);
    }

    #[test]
    fn koszul_complex_betti_numbers() {
        for n in 1..=5 {
            let m = MonomialIdeal::prime(n, 0..n);
            let t = betti_table(&m, Field::DEFAULT).unwrap();
            let binom: Vec<usize> = (0..=n)
                .map(|i| (0..i).fold(1usize, |acc, k| acc * (n - k) / (k + 1)))
                .collect();
            assert_eq!(t.totals(), binom);
        }
    }

    #[test]
    fn depth_examples() {
        let i = ideal(2, &[&[1, 1]]);
        assert_eq!(pd(&i, Field::DEFAULT).unwrap(), 1);
        assert_eq!(depth(&i, Field::DEFAULT).unwrap(), 1);
        let c5 = Graph::cycle(5).unwrap().edge_ideal();
        assert_eq!(pd(&c5, Field::DEFAULT).unwrap(), 3);
        let w = Graph::whisker(&WhiskerSpec::uniform(3).unwrap()).unwrap();
        assert_eq!(depth(&w.edge_ideal(), Field::DEFAULT).unwrap(), 3);
        assert_eq!(depth(&MonomialIdeal::zero(4), Field::DEFAULT).unwrap(), 4);
        assert_eq!(depth(&MonomialIdeal::unit(4), Field::DEFAULT), Err(Error::UnitIdeal));
    }

    #[test]
    fn polarization_examples() {
        let (p, added) = polarize(&ideal(1, &[&[2]])).unwrap();
        assert_eq!((p, added), (ideal(2, &[&[1, 1]]), 1));
        let c3 = Graph::cycle(3).unwrap().edge_ideal();
        assert_eq!(polarize(&c3).unwrap(), (c3.clone(), 0));
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        let (p, added) = polarize(&i).unwrap();
        assert_eq!((p, added), (ideal(3, &[&[1, 1, 0], &[1, 0, 1]]), 1));
        assert_eq!(depth(&i, Field::DEFAULT).unwrap(), 0);
        assert_eq!(depth_via_polarization(&i, Field::DEFAULT).unwrap(), 0);
    }

    #[test]
    fn stabilization() {
        let s = stabilization_index(&[2, 2, 1, 1, 1], Some(3)).unwrap();
        assert_eq!(s, Stabilization { index: 3, value: 1, tentative: false });
        let s = stabilization_index(&[2, 2], Some(3)).unwrap();
        assert_eq!(s, Stabilization { index: 1, value: 2, tentative: true });
        assert!(stabilization_index(&[3, 2, 2], None).unwrap().tentative);
        assert_eq!(stabilization_index(&[], None), None);
    }
}
