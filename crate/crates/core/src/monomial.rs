//! Monomials and monomial ideals over a polynomial ring in `n` indexed variables.
//!
//! Every [`MonomialIdeal`] stores its minimal generators in canonical order
//! (descending lexicographic on exponent vectors), so structural equality is
//! ideal equality.

use std::cmp::Ordering;
use std::fmt;

use rayon::prelude::*;
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Largest admissible exponent.
pub const MAX_EXPONENT: u32 = (1 << 31) - 1;

const PAR_THRESHOLD: usize = 1 << 14;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: SmallVec<[u32; 16]>,
}

impl Monomial {
    pub fn new(exps: impl IntoIterator<Item = u32>) -> Result<Self> {
        let exps: SmallVec<[u32; 16]> = exps.into_iter().collect();
        if exps.iter().any(|&e| e > MAX_EXPONENT) {
            return Err(Error::ExponentOverflow);
        }
        Ok(Monomial { exps })
    }

    pub fn one(n: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, n) }
    }

    /// The variable `x_{i+1}` (0-based index `i`).
    pub fn var(n: usize, i: usize) -> Self {
        let mut m = Self::one(n);
        m.exps[i] = 1;
        m
    }

    /// Squarefree monomial `x_F` for a set of 0-based variable indices.
    pub fn squarefree(n: usize, support: impl IntoIterator<Item = usize>) -> Self {
        let mut m = Self::one(n);
        for i in support {
            m.exps[i] = 1;
        }
        m
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// `self | other`. Both must live in the same ring.
    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.n(), other.n());
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        check_dims(self.n(), other.n())?;
        let mut exps = SmallVec::with_capacity(self.n());
        for (a, b) in self.exps.iter().zip(other.exps.iter()) {
            let e = a.checked_add(*b).filter(|&e| e <= MAX_EXPONENT);
            exps.push(e.ok_or(Error::ExponentOverflow)?);
        }
        Ok(Monomial { exps })
    }

    pub fn pow(&self, t: u32) -> Result<Monomial> {
        let mut exps = SmallVec::with_capacity(self.n());
        for a in self.exps.iter() {
            let e = a.checked_mul(t).filter(|&e| e <= MAX_EXPONENT);
            exps.push(e.ok_or(Error::ExponentOverflow)?);
        }
        Ok(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.n(), other.n());
        Monomial {
            exps: self.exps.iter().zip(other.exps.iter()).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.n(), other.n());
        Monomial {
            exps: self.exps.iter().zip(other.exps.iter()).map(|(a, b)| *a.min(b)).collect(),
        }
    }

    /// `self / gcd(self, m)`, the generator of `(self) : m`.
    pub fn colon(&self, m: &Monomial) -> Monomial {
        debug_assert_eq!(self.n(), m.n());
        Monomial {
            exps: self.exps.iter().zip(m.exps.iter()).map(|(a, b)| a.saturating_sub(*b)).collect(),
        }
    }

    /// Exponents capped at one.
    pub fn radical(&self) -> Monomial {
        Monomial { exps: self.exps.iter().map(|&e| e.min(1)).collect() }
    }

    /// Total degree in the variables selected by `vars`.
    pub fn degree_in(&self, vars: impl IntoIterator<Item = usize>) -> u64 {
        vars.into_iter().map(|i| u64::from(self.exps[i])).sum()
    }
}

impl Ord for Monomial {
    /// Canonical generator order: descending lexicographic, so `x1^2 < x1x2 < x2^2`.
    fn cmp(&self, other: &Self) -> Ordering {
        other.exps.cmp(&self.exps)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

pub(crate) fn check_dims(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// Trie over exponent vectors answering "does some stored monomial divide `m`?".
#[derive(Default)]
struct DivisorTrie {
    // children of each node, sorted by exponent
    nodes: Vec<Vec<(u32, u32)>>,
}

impl DivisorTrie {
    fn new() -> Self {
        DivisorTrie { nodes: vec![Vec::new()] }
    }

    fn insert(&mut self, m: &Monomial) {
        let mut node = 0usize;
        for &e in m.exponents() {
            let children = &self.nodes[node];
            match children.binary_search_by_key(&e, |c| c.0) {
                Ok(pos) => node = children[pos].1 as usize,
                Err(pos) => {
                    let id = self.nodes.len() as u32;
                    self.nodes[node].insert(pos, (e, id));
                    self.nodes.push(Vec::new());
                    node = id as usize;
                }
            }
        }
    }

    fn has_divisor(&self, m: &Monomial) -> bool {
        self.search(0, 0, m.exponents())
    }

    fn search(&self, node: usize, depth: usize, m: &[u32]) -> bool {
        if depth == m.len() {
            return true;
        }
        for &(e, child) in &self.nodes[node] {
            if e > m[depth] {
                break;
            }
            if self.search(child as usize, depth + 1, m) {
                return true;
            }
        }
        false
    }
}

/// Divisibility-minimal subset of `cands`, deduplicated, in canonical order.
fn minimal_subset(mut cands: Vec<Monomial>) -> Vec<Monomial> {
    let key = |m: &Monomial| m.degree();
    if cands.len() > PAR_THRESHOLD {
        cands.par_sort_unstable_by(|a, b| key(a).cmp(&key(b)).then_with(|| a.cmp(b)));
    } else {
        cands.sort_unstable_by(|a, b| key(a).cmp(&key(b)).then_with(|| a.cmp(b)));
    }
    cands.dedup();
    let mut trie = DivisorTrie::new();
    let mut kept = Vec::new();
    for m in cands {
        // a lower-degree divisor is already in the trie; equal degree never divides
        if !trie.has_divisor(&m) {
            trie.insert(&m);
            kept.push(m);
        }
    }
    kept.sort_unstable();
    kept
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal { n, gens: vec![Monomial::one(n)] }
    }

    /// Builds the ideal generated by `gens`, keeping only minimal generators.
    pub fn minimalize(n: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let gens: Vec<Monomial> = gens.into_iter().collect();
        for g in &gens {
            check_dims(n, g.n())?;
        }
        Ok(MonomialIdeal { n, gens: minimal_subset(gens) })
    }

    pub fn from_exponents(n: usize, rows: impl IntoIterator<Item = Vec<u32>>) -> Result<Self> {
        let gens = rows.into_iter().map(Monomial::new).collect::<Result<Vec<_>>>()?;
        Self::minimalize(n, gens)
    }

    /// The prime `(x_i : i ∈ vars)`.
    pub fn prime(n: usize, vars: impl IntoIterator<Item = usize>) -> Self {
        let gens = vars.into_iter().map(|i| Monomial::var(n, i)).collect();
        MonomialIdeal { n, gens: minimal_subset(gens) }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Componentwise maximum of the generators (the top of the lcm lattice).
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut top = vec![0; self.n];
        for g in &self.gens {
            for (t, &e) in top.iter_mut().zip(g.exponents()) {
                *t = (*t).max(e);
            }
        }
        top
    }

    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        check_dims(self.n, m.n())?;
        Ok(self.gens.iter().any(|g| g.divides(m)))
    }

    pub fn is_subset_of(&self, other: &MonomialIdeal) -> Result<bool> {
        check_dims(self.n, other.n)?;
        Ok(self.gens.iter().all(|g| other.gens.iter().any(|h| h.divides(g))))
    }

    pub fn equals(&self, other: &MonomialIdeal) -> Result<bool> {
        check_dims(self.n, other.n)?;
        Ok(self.gens == other.gens)
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dims(self.n, other.n)?;
        let gens = self.gens.iter().chain(other.gens.iter()).cloned().collect();
        Ok(MonomialIdeal { n: self.n, gens: minimal_subset(gens) })
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dims(self.n, other.n)?;
        let gens = pairwise(&self.gens, &other.gens, |a, b| Ok(a.lcm(b)))?;
        Ok(MonomialIdeal { n: self.n, gens: minimal_subset(gens) })
    }

    pub fn multiply(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dims(self.n, other.n)?;
        let gens = pairwise(&self.gens, &other.gens, |a, b| a.mul(b))?;
        Ok(MonomialIdeal { n: self.n, gens: minimal_subset(gens) })
    }

    /// `self^t` by repeated squaring; `t = 0` gives the unit ideal.
    pub fn power(&self, t: u32) -> Result<MonomialIdeal> {
        let mut result = MonomialIdeal::unit(self.n);
        let mut base = self.clone();
        let mut t = t;
        while t > 0 {
            if t & 1 == 1 {
                result = result.multiply(&base)?;
            }
            t >>= 1;
            if t > 0 {
                base = base.multiply(&base)?;
            }
        }
        Ok(result)
    }

    /// Scales every generator by `m`.
    pub fn scale(&self, m: &Monomial) -> Result<MonomialIdeal> {
        check_dims(self.n, m.n())?;
        let gens = self.gens.iter().map(|g| g.mul(m)).collect::<Result<Vec<_>>>()?;
        Ok(MonomialIdeal { n: self.n, gens: minimal_subset(gens) })
    }

    pub fn colon(&self, m: &Monomial) -> Result<MonomialIdeal> {
        check_dims(self.n, m.n())?;
        let gens = self.gens.iter().map(|g| g.colon(m)).collect();
        Ok(MonomialIdeal { n: self.n, gens: minimal_subset(gens) })
    }

    pub fn radical(&self) -> MonomialIdeal {
        let gens = self.gens.iter().map(Monomial::radical).collect();
        MonomialIdeal { n: self.n, gens: minimal_subset(gens) }
    }
}

fn pairwise(
    a: &[Monomial],
    b: &[Monomial],
    op: impl Fn(&Monomial, &Monomial) -> Result<Monomial> + Sync,
) -> Result<Vec<Monomial>> {
    if a.len() * b.len() > PAR_THRESHOLD {
        a.par_iter()
            .flat_map_iter(|x| b.iter().map(|y| op(x, y)).collect::<Vec<_>>())
            .collect()
    } else {
        a.iter().flat_map(|x| b.iter().map(|y| op(x, y))).collect()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.iter().copied()).unwrap()
    }

    fn ideal(n: usize, rows: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, rows.iter().map(|r| r.to_vec())).unwrap()
    }

    fn triangle() -> MonomialIdeal {
        ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]])
    }

    #[test]
    fn minimalize_examples() {
        assert_eq!(ideal(2, &[&[1, 0], &[1, 1]]).generators(), &[m(&[1, 0])]);
        assert!(MonomialIdeal::minimalize(2, vec![]).unwrap().is_zero());
        let i = ideal(2, &[&[2, 0], &[1, 1], &[0, 2], &[2, 1]]);
        assert_eq!(i.generators(), &[m(&[2, 0]), m(&[1, 1]), m(&[0, 2])]);
    }

    #[test]
    fn minimalize_rejects_mixed_dimensions() {
        let err = MonomialIdeal::minimalize(2, vec![m(&[1, 0]), m(&[1, 0, 0])]).unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { expected: 2, found: 3 });
    }

    #[test]
    fn contains_examples() {
        assert!(ideal(3, &[&[1, 1, 0]]).contains(&m(&[1, 1, 1])).unwrap());
        assert!(!MonomialIdeal::zero(3).contains(&m(&[5, 5, 5])).unwrap());
        let sq = triangle().power(2).unwrap();
        assert!(!sq.contains(&m(&[1, 1, 1])).unwrap());
        assert!(triangle().contains(&m(&[1])).is_err());
    }

    #[test]
    fn intersect_examples() {
        let x1 = ideal(2, &[&[1, 0]]);
        let x2 = ideal(2, &[&[0, 1]]);
        assert_eq!(x1.intersect(&x2).unwrap(), ideal(2, &[&[1, 1]]));
        let a = ideal(2, &[&[2, 0], &[0, 1]]);
        assert_eq!(a.intersect(&x1).unwrap(), ideal(2, &[&[2, 0], &[1, 1]]));
        let t = triangle();
        assert_eq!(t.intersect(&MonomialIdeal::unit(3)).unwrap(), t);
    }

    #[test]
    fn power_examples() {
        let max = ideal(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(max.power(2).unwrap(), ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]));
        // brute force: all pairwise products of the three edges
        let t = triangle();
        let mut brute = Vec::new();
        for a in t.generators() {
            for b in t.generators() {
                brute.push(a.mul(b).unwrap());
            }
        }
        let expected = MonomialIdeal::minimalize(3, brute).unwrap();
        let sq = t.power(2).unwrap();
        assert_eq!(sq, expected);
        assert_eq!(sq.len(), 6);
        assert!(sq.generators().iter().all(|g| g.degree() == 4));
        assert_eq!(t.power(1).unwrap(), t);
        assert!(t.power(0).unwrap().is_unit());
    }

    #[test]
    fn colon_examples() {
        let i = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        assert_eq!(i.colon(&m(&[0, 1, 0])).unwrap(), ideal(3, &[&[1, 0, 0], &[0, 0, 1]]));
        assert_eq!(i.colon(&Monomial::one(3)).unwrap(), i);
    }

    #[test]
    fn radical_examples() {
        assert_eq!(ideal(2, &[&[2, 1]]).radical(), ideal(2, &[&[1, 1]]));
        assert_eq!(triangle().radical(), triangle());
        assert_eq!(ideal(2, &[&[3, 0], &[1, 2]]).radical(), ideal(2, &[&[1, 0]]));
    }

    #[test]
    fn equals_examples() {
        assert!(ideal(2, &[&[1, 0], &[1, 1]]).equals(&ideal(2, &[&[1, 0]])).unwrap());
        assert!(!ideal(2, &[&[1, 0]]).equals(&ideal(2, &[&[0, 1]])).unwrap());
        assert!(ideal(2, &[&[1, 0]]).equals(&ideal(3, &[&[1, 0, 0]])).is_err());
    }

    #[test]
    fn overflow_is_reported() {
        let big = m(&[MAX_EXPONENT]);
        assert_eq!(big.mul(&m(&[1])).unwrap_err(), Error::ExponentOverflow);
        assert_eq!(Monomial::new([1u32 << 31]).unwrap_err(), Error::ExponentOverflow);
    }

    #[test]
    fn display() {
        assert_eq!(m(&[2, 1, 0]).to_string(), "x1^2*x2");
        assert_eq!(Monomial::one(2).to_string(), "1");
        assert_eq!(MonomialIdeal::zero(2).to_string(), "(0)");
        assert_eq!(triangle().to_string(), "(x1*x2, x1*x3, x2*x3)");
    }
}
