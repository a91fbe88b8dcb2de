//! Chains over F₂ in the boolean complex of a graph.
//!
//! Cells are injective words modulo commutation of non-adjacent letters.
//! Each class is represented by its lexicographically least word, and a
//! chain is the set of cells with coefficient 1.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{OrderedGraph, VertexId};

/// The lexicographically least word of a commutation class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalWord(Vec<VertexId>);

impl NormalWord {
    pub fn letters(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for NormalWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().join(" "))
    }
}

/// `Δ(G)`: the graph together with a bitmask adjacency table used for
/// normal forms.
#[derive(Debug)]
pub struct BooleanComplex {
    graph: OrderedGraph,
    letters: Vec<VertexId>,
    adjacency: Vec<u64>,
}

impl BooleanComplex {
    pub fn new(graph: OrderedGraph) -> Result<Arc<Self>> {
        if graph.len() > 64 {
            return Err(Error::domain("at most 64 vertices are supported"));
        }
        let letters: Vec<VertexId> = graph.keys().collect();
        let mut adjacency = vec![0u64; letters.len()];
        for e in graph.edges() {
            let a = graph.index_of(e.s()).unwrap();
            let b = graph.index_of(e.t()).unwrap();
            adjacency[a] |= 1 << b;
            adjacency[b] |= 1 << a;
        }
        Ok(Arc::new(BooleanComplex {
            graph,
            letters,
            adjacency,
        }))
    }

    pub fn graph(&self) -> &OrderedGraph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.letters.len()
    }

    pub fn top_degree(&self) -> usize {
        self.letters.len().saturating_sub(1)
    }

    fn index(&self, v: VertexId) -> Result<usize> {
        self.letters
            .binary_search(&v)
            .map_err(|_| Error::domain(format!("{v} is not a vertex")))
    }

    /// Least representative of the class of `word`: repeatedly emit the
    /// smallest letter that commutes past everything still ahead of it.
    pub fn normal_form(&self, word: &[VertexId]) -> Result<NormalWord> {
        let mut idx = Vec::with_capacity(word.len());
        let mut used = 0u64;
        for &v in word {
            let i = self.index(v)?;
            if used >> i & 1 == 1 {
                return Err(Error::domain(format!("letter {v} repeats in {word:?}")));
            }
            used |= 1 << i;
            idx.push(i);
        }
        Ok(NormalWord(self.normalize_indices(idx)))
    }

    fn normalize_indices(&self, mut rest: Vec<usize>) -> Vec<VertexId> {
        let mut out = Vec::with_capacity(rest.len());
        while !rest.is_empty() {
            let mut ahead = 0u64;
            let mut best: Option<usize> = None;
            for (pos, &i) in rest.iter().enumerate() {
                if self.adjacency[i] & ahead == 0 && best.is_none_or(|b| i < rest[b]) {
                    best = Some(pos);
                }
                ahead |= 1 << i;
            }
            // Letters are ordered like their indices, so the least index wins.
            let pos = best.expect("the first letter is always movable");
            out.push(self.letters[rest.remove(pos)]);
        }
        out
    }

    fn renormalize(&self, letters: &[VertexId]) -> NormalWord {
        let idx = letters.iter().map(|&v| self.index(v).unwrap()).collect();
        NormalWord(self.normalize_indices(idx))
    }

    /// All cells of rank `k` (words of length `k + 1`), sorted. Rank `-1`
    /// is the single empty cell.
    pub fn cells_of_rank(&self, k: isize) -> Result<Vec<NormalWord>> {
        let n = self.letters.len() as isize;
        if k < -1 || k > n - 1 {
            return Err(Error::domain(format!("rank {k} outside -1..={}", n - 1)));
        }
        let len = (k + 1) as usize;
        let cells: BTreeSet<NormalWord> = (0..self.letters.len())
            .permutations(len)
            .map(|idx| NormalWord(self.normalize_indices(idx)))
            .collect();
        Ok(cells.into_iter().collect())
    }

    pub fn top_cells(&self) -> Vec<NormalWord> {
        self.cells_of_rank(self.top_degree() as isize).unwrap()
    }

    fn same_as(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other) || self.graph == other.graph
    }
}

/// A homogeneous chain with F₂ coefficients.
#[derive(Clone, Debug)]
pub struct ChainF2 {
    complex: Arc<BooleanComplex>,
    degree: usize,
    terms: BTreeSet<NormalWord>,
}

impl PartialEq for ChainF2 {
    fn eq(&self, other: &Self) -> bool {
        self.complex.same_as(&other.complex) && self.degree == other.degree && self.terms == other.terms
    }
}

impl Eq for ChainF2 {}

impl ChainF2 {
    pub fn zero(complex: &Arc<BooleanComplex>, degree: usize) -> Self {
        ChainF2 {
            complex: Arc::clone(complex),
            degree,
            terms: BTreeSet::new(),
        }
    }

    /// Sum of the given words; repeated classes cancel.
    pub fn from_words<W: AsRef<[VertexId]>>(
        complex: &Arc<BooleanComplex>,
        degree: usize,
        words: impl IntoIterator<Item = W>,
    ) -> Result<Self> {
        let mut chain = Self::zero(complex, degree);
        for w in words {
            chain.add_word(w.as_ref())?;
        }
        Ok(chain)
    }

    /// A single-vertex chain.
    pub fn vertex(complex: &Arc<BooleanComplex>, v: VertexId) -> Result<Self> {
        Self::from_words(complex, 0, [[v]])
    }

    pub fn add_word(&mut self, word: &[VertexId]) -> Result<()> {
        if word.len() != self.degree + 1 {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: word.len().saturating_sub(1),
            });
        }
        let nw = self.complex.normal_form(word)?;
        self.toggle(nw);
        Ok(())
    }

    fn toggle(&mut self, w: NormalWord) {
        if !self.terms.remove(&w) {
            self.terms.insert(w);
        }
    }

    pub fn complex(&self) -> &Arc<BooleanComplex> {
        &self.complex
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = &NormalWord> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn contains(&self, w: &NormalWord) -> bool {
        self.terms.contains(w)
    }

    fn check_ambient(&self, other: &ChainF2) -> Result<()> {
        if self.complex.same_as(&other.complex) {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    pub fn add(&self, other: &ChainF2) -> Result<ChainF2> {
        self.check_ambient(other)?;
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        let terms = self.terms.symmetric_difference(&other.terms).cloned().collect();
        Ok(ChainF2 {
            complex: Arc::clone(&self.complex),
            degree: self.degree,
            terms,
        })
    }

    /// Concatenation product: `στ` is the class of the joined word when the
    /// letters are disjoint and zero otherwise.
    pub fn product(&self, other: &ChainF2) -> Result<ChainF2> {
        self.check_ambient(other)?;
        let mut out = Self::zero(&self.complex, self.degree + other.degree + 1);
        let mut joined = Vec::with_capacity(self.degree + other.degree + 2);
        for a in &self.terms {
            for b in &other.terms {
                if a.0.iter().any(|v| b.0.contains(v)) {
                    continue;
                }
                joined.clear();
                joined.extend_from_slice(&a.0);
                joined.extend_from_slice(&b.0);
                out.toggle(self.complex.renormalize(&joined));
            }
        }
        Ok(out)
    }

    /// `⟨a, b⟩ = ab + ba`.
    pub fn bracket(&self, other: &ChainF2) -> Result<ChainF2> {
        self.product(other)?.add(&other.product(self)?)
    }

    /// `∂_v`: delete `v` from every term. Terms without `v` vanish.
    pub fn partial(&self, v: VertexId) -> Result<ChainF2> {
        self.complex.index(v)?;
        if self.degree == 0 {
            return Err(Error::domain("no differential out of degree 0"));
        }
        let mut out = Self::zero(&self.complex, self.degree - 1);
        let mut shorter = Vec::with_capacity(self.degree);
        for w in &self.terms {
            if !w.0.contains(&v) {
                continue;
            }
            shorter.clear();
            shorter.extend(w.0.iter().copied().filter(|&x| x != v));
            out.toggle(self.complex.renormalize(&shorter));
        }
        Ok(out)
    }

    /// `∂ = Σ_v ∂_v`.
    pub fn differential(&self) -> Result<ChainF2> {
        if self.degree == 0 {
            return Err(Error::domain("no differential out of degree 0"));
        }
        let mut out = Self::zero(&self.complex, self.degree - 1);
        let mut shorter = Vec::with_capacity(self.degree);
        for w in &self.terms {
            for skip in 0..w.0.len() {
                shorter.clear();
                shorter.extend(
                    w.0.iter()
                        .enumerate()
                        .filter(|&(i, _)| i != skip)
                        .map(|(_, &x)| x),
                );
                out.toggle(self.complex.renormalize(&shorter));
            }
        }
        Ok(out)
    }

    /// Pushes the chain forward to a spanning subgraph: every term is
    /// re-read under the coarser commutation relation.
    pub fn collapse(&self, target: &Arc<BooleanComplex>) -> Result<ChainF2> {
        if !target.graph.is_spanning_subgraph_of(&self.complex.graph) {
            return Err(Error::domain(
                "collapse target must be a spanning subgraph of the source graph",
            ));
        }
        let mut out = Self::zero(target, self.degree);
        for w in &self.terms {
            out.toggle(target.renormalize(&w.0));
        }
        Ok(out)
    }

    /// Inverse of [`Display`](fmt::Display): `"1 2 + 2 1"`, or `"0"`.
    pub fn parse(complex: &Arc<BooleanComplex>, degree: usize, text: &str) -> Result<ChainF2> {
        let mut chain = Self::zero(complex, degree);
        let text = text.trim();
        if text == "0" || text.is_empty() {
            return Ok(chain);
        }
        for term in text.split('+') {
            let word = term
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<VertexId>()
                        .map_err(|_| Error::parse(1, format!("bad letter {tok:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            chain.add_word(&word)?;
        }
        Ok(chain)
    }

    /// Terms as arrays of letters, in sorted order.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::from(
            self.terms
                .iter()
                .map(|w| w.0.clone())
                .collect::<Vec<_>>(),
        )
    }

    pub fn from_json(
        complex: &Arc<BooleanComplex>,
        degree: usize,
        value: &serde_json::Value,
    ) -> Result<ChainF2> {
        let words: Vec<Vec<VertexId>> = serde_json::from_value(value.clone())
            .map_err(|e| Error::parse(1, e.to_string()))?;
        Self::from_words(complex, degree, words)
    }
}

impl fmt::Display for ChainF2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        write!(f, "{}", self.terms.iter().join(" + "))
    }
}
