//! From derangements to top-degree homology cycles, and the rank checks
//! that certify the derangement basis.
//!
//! Each cycle of a derangement is fully bracketed by repeatedly merging
//! the pair whose right-hand quantity starts with the largest letter; the
//! brackets `⟨a, b⟩ = ab + ba` are expanded in the complete graph's complex
//! and then collapsed to the graph at hand.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::chain::{BooleanComplex, ChainF2, NormalWord};
use crate::derangement::{derangements_by_criterion, derangements_recursive, CyclePermutation};
use crate::error::{Error, Result};
use crate::gf2::Gf2Matrix;
use crate::graph::{beta, OrderedGraph, VertexId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BracketTree {
    Leaf(VertexId),
    Node(Box<BracketTree>, Box<BracketTree>),
}

impl BracketTree {
    fn node(left: BracketTree, right: BracketTree) -> Self {
        BracketTree::Node(Box::new(left), Box::new(right))
    }

    /// Leaves left to right.
    pub fn leaves(&self) -> Vec<VertexId> {
        match self {
            BracketTree::Leaf(v) => vec![*v],
            BracketTree::Node(l, r) => {
                let mut out = l.leaves();
                out.extend(r.leaves());
                out
            }
        }
    }

    pub fn first_letter(&self) -> VertexId {
        match self {
            BracketTree::Leaf(v) => *v,
            BracketTree::Node(l, _) => l.first_letter(),
        }
    }

    pub fn max_letter(&self) -> VertexId {
        match self {
            BracketTree::Leaf(v) => *v,
            BracketTree::Node(l, r) => l.max_letter().max(r.max_letter()),
        }
    }

    pub fn internal_nodes(&self) -> usize {
        match self {
            BracketTree::Leaf(_) => 0,
            BracketTree::Node(l, r) => 1 + l.internal_nodes() + r.internal_nodes(),
        }
    }

    fn expand(&self, complex: &Arc<BooleanComplex>) -> Result<ChainF2> {
        match self {
            BracketTree::Leaf(v) => ChainF2::vertex(complex, *v),
            BracketTree::Node(l, r) => l.expand(complex)?.bracket(&r.expand(complex)?),
        }
    }
}

impl fmt::Display for BracketTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BracketTree::Leaf(v) => write!(f, "{v}"),
            BracketTree::Node(l, r) => write!(f, "⟨{l},{r}⟩"),
        }
    }
}

/// One bracket tree per cycle, in cycle order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketForest(pub Vec<BracketTree>);

impl fmt::Display for BracketForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.0 {
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl BracketForest {
    pub fn internal_nodes(&self) -> usize {
        self.0.iter().map(BracketTree::internal_nodes).sum()
    }
}

/// Runs the star-merging loop on `w`: a star sits between consecutive
/// letters of each cycle, and the star whose right-hand neighbor is the
/// largest letter is replaced by a bracket first. The right-hand neighbor
/// of a star is the letter immediately after it, which for a bracketed
/// quantity is its first letter.
pub fn build_bracket_tree(w: &CyclePermutation) -> Result<BracketForest> {
    if !w.is_derangement() {
        return Err(Error::domain(format!("{w} has a fixed point")));
    }
    let mut cycles: Vec<Vec<BracketTree>> = w
        .cycles()
        .iter()
        .map(|c| c.iter().map(|&v| BracketTree::Leaf(v)).collect())
        .collect();
    loop {
        // (cycle, position of right-hand quantity), keyed by its first letter.
        let star = cycles
            .iter()
            .enumerate()
            .flat_map(|(ci, items)| (1..items.len()).map(move |pos| (ci, pos)))
            .max_by_key(|&(ci, pos)| cycles[ci][pos].first_letter());
        let Some((ci, pos)) = star else { break };
        let right = cycles[ci].remove(pos);
        let left = cycles[ci].remove(pos - 1);
        cycles[ci].insert(pos - 1, BracketTree::node(left, right));
    }
    Ok(BracketForest(
        cycles.into_iter().map(|mut c| c.pop().unwrap()).collect(),
    ))
}

/// `φ(w)` in the complex of the complete graph on `support(w)`.
pub fn phi_complete(w: &CyclePermutation) -> Result<ChainF2> {
    let forest = build_bracket_tree(w)?;
    let support: Vec<VertexId> = w.support().into_iter().collect();
    let complex = BooleanComplex::new(OrderedGraph::complete_on(&support)?)?;
    expand_forest(&forest, &complex)
}

fn expand_forest(forest: &BracketForest, complex: &Arc<BooleanComplex>) -> Result<ChainF2> {
    let mut trees = forest.0.iter();
    let first = trees
        .next()
        .ok_or_else(|| Error::domain("empty permutation has no image"))?
        .expand(complex)?;
    trees.try_fold(first, |acc, t| acc.product(&t.expand(complex)?))
}

/// `φ_G(w)`: the complete-graph expansion collapsed to `G`.
pub fn phi_graph(w: &CyclePermutation, complex: &Arc<BooleanComplex>) -> Result<ChainF2> {
    if !w.support().into_iter().eq(complex.graph().keys()) {
        return Err(Error::domain(format!("support of {w} differs from the vertex set")));
    }
    phi_complete(w)?.collapse(complex)
}

/// Matrix whose rows are the given chains over the sorted column basis.
pub fn chain_matrix<'a>(
    columns: &[NormalWord],
    chains: impl IntoIterator<Item = &'a ChainF2>,
) -> Gf2Matrix {
    let mut m = Gf2Matrix::new(columns.len());
    for c in chains {
        m.push_row(
            c.terms()
                .map(|w| columns.binary_search(w).expect("term is a cell of the basis")),
        );
    }
    m
}

/// The top differential as a matrix: rows are top cells, columns the cells
/// one rank down. For a single vertex the target is the empty cell.
pub fn boundary_matrix(complex: &Arc<BooleanComplex>) -> Gf2Matrix {
    let top = complex.top_cells();
    let below = complex
        .cells_of_rank(complex.top_degree() as isize - 1)
        .expect("rank in range");
    let mut m = Gf2Matrix::new(below.len());
    for cell in &top {
        if complex.top_degree() == 0 {
            m.push_row([0]);
            continue;
        }
        let boundary = ChainF2::from_words(complex, complex.top_degree(), [cell.letters()])
            .and_then(|c| c.differential())
            .expect("top cell");
        m.push_row(boundary.terms().map(|w| below.binary_search(w).unwrap()));
    }
    m
}

/// `dim H_{|G|-1}(Δ(G); F₂)` as the nullity of the top differential.
pub fn kernel_dimension_top(g: &OrderedGraph) -> Result<usize> {
    if g.is_empty() {
        return Err(Error::domain("empty graph"));
    }
    let complex = BooleanComplex::new(g.clone())?;
    Ok(boundary_matrix(&complex).row_nullity())
}

#[derive(Clone, Debug)]
pub struct BasisVector {
    pub derangement: CyclePermutation,
    pub cycle: ChainF2,
}

/// `{φ_G(w) : w ∈ D(G)}` ordered by the text of `w`.
pub fn derangement_basis(g: &OrderedGraph) -> Result<Vec<BasisVector>> {
    let complex = BooleanComplex::new(g.clone())?;
    derangements_recursive(g)?
        .into_iter()
        .map(|w| {
            let cycle = phi_graph(&w, &complex)?;
            Ok(BasisVector {
                derangement: w,
                cycle,
            })
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphSummary {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<[VertexId; 2]>,
}

impl From<&OrderedGraph> for GraphSummary {
    fn from(g: &OrderedGraph) -> Self {
        GraphSummary {
            vertices: g.keys().collect(),
            edges: g.edges().map(|e| [e.s(), e.t()]).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub graph: GraphSummary,
    pub beta: u64,
    pub d_count_recursive: usize,
    pub d_count_criterion: usize,
    pub kernel_dim: usize,
    pub basis_rank: usize,
    pub cycles_closed: bool,
    pub verdict: Verdict,
}

/// Cross-checks β, both derangement constructions, the kernel of the top
/// differential, and the rank and closure of the derangement basis. The
/// kernel is computed from the boundary matrix alone, independent of the
/// basis.
pub fn verify_basis(g: &OrderedGraph) -> Result<VerificationReport> {
    if g.is_empty() {
        return Err(Error::domain("empty graph"));
    }
    let complex = BooleanComplex::new(g.clone())?;
    let beta = beta(g)?;
    let recursive = derangements_recursive(g)?;
    let criterion = derangements_by_criterion(g)?;
    let kernel_dim = boundary_matrix(&complex).row_nullity();

    let basis: Vec<ChainF2> = recursive
        .iter()
        .map(|w| phi_graph(w, &complex))
        .collect::<Result<_>>()?;
    let cycles_closed = complex.top_degree() == 0
        || basis
            .iter()
            .all(|c| c.differential().is_ok_and(|d| d.is_zero()));
    let basis_rank = chain_matrix(&complex.top_cells(), &basis).rank();

    let n = recursive.len();
    let pass = recursive == criterion
        && beta as usize == n
        && kernel_dim == n
        && basis_rank == n
        && cycles_closed;
    Ok(VerificationReport {
        graph: g.into(),
        beta,
        d_count_recursive: n,
        d_count_criterion: criterion.len(),
        kernel_dim,
        basis_rank,
        cycles_closed,
        verdict: if pass { Verdict::Pass } else { Verdict::Fail },
    })
}

/// Verifies every labeled graph on `1..=n`, in parallel. Reports come back
/// in enumeration order.
pub fn verify_all_labeled(n: u32) -> Result<Vec<VerificationReport>> {
    let graphs: Vec<OrderedGraph> = OrderedGraph::all_labeled(n).collect();
    graphs.par_iter().map(verify_basis).collect()
}
