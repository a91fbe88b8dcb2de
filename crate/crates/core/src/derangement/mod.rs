//! Derangement sets of ordered graphs.
//!
//! `D(G)` is built two ways: by the deletion / contraction / extraction
//! recursion on the maximal edge ([`derangements_recursive`]), and by
//! filtering all derangements of `V(G)` through the `λ/ρ` adjacency test
//! ([`derangements_by_criterion`]). The two must agree on every graph.

mod closed_form;
mod permutation;

pub use closed_form::{alternating_excedance_set, coxeter_derangement_set, valid_parsings};
pub use permutation::{Canopy, CyclePermutation};

use std::collections::{BTreeMap, BTreeSet, HashMap};

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{CanonicalKey, OrderedGraph, VertexId};

pub type DerangementSet = BTreeSet<CyclePermutation>;

/// Every fixed-point-free permutation of `support`.
pub fn all_derangements(support: &[VertexId]) -> DerangementSet {
    let n = support.len();
    support
        .iter()
        .copied()
        .permutations(n)
        .filter(|img| img.iter().zip(support).all(|(a, b)| a != b))
        .map(|img| {
            let m: BTreeMap<_, _> = support.iter().copied().zip(img).collect();
            CyclePermutation::from_mapping(&m).expect("permutation")
        })
        .collect()
}

/// `w` is G-valid iff for every vertex `t`, `λ_w(t)` is adjacent to some
/// member of `ρ_w(t)`. Fixed points are never valid.
pub fn is_graph_valid(g: &OrderedGraph, w: &CyclePermutation) -> Result<bool> {
    if !w.support().into_iter().eq(g.keys()) {
        return Err(Error::domain(format!("support of {w} differs from the vertex set")));
    }
    for t in g.keys() {
        let canopy = w.canopy(t)?;
        if !canopy.rho.iter().any(|&r| g.adjacent(canopy.lambda, r)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `D(G)` as the G-valid derangements of `V(G)`, flattened to original ids.
pub fn derangements_by_criterion(g: &OrderedGraph) -> Result<DerangementSet> {
    let keys: Vec<VertexId> = g.keys().collect();
    all_derangements(&keys)
        .into_iter()
        .filter_map(|w| match is_graph_valid(g, &w) {
            Ok(true) => Some(flatten(&w, g)),
            Ok(false) => None,
            Err(e) => Some(Err(e)),
        })
        .collect()
}

/// `w_st`: insert `t` right after `s`, where `s` is the key of the
/// contracted vertex of `G / e`.
pub fn lift_contraction(w: &CyclePermutation, s: VertexId, t: VertexId) -> Result<CyclePermutation> {
    if !w.contains(s) {
        return Err(Error::domain(format!("contracted vertex {s} is not in {w}")));
    }
    if w.contains(t) {
        return Err(Error::domain(format!("{t} already appears in {w}")));
    }
    w.expand_letters(|v| if v == s { vec![s, t] } else { vec![v] })
}

/// `w ⊔ (s t)`.
pub fn lift_extraction(w: &CyclePermutation, s: VertexId, t: VertexId) -> Result<CyclePermutation> {
    let st = CyclePermutation::from_cycles(vec![vec![s, t]])?;
    w.disjoint_union(&st)
}

/// Replaces every vertex key by the full id sequence of its token.
pub fn flatten(w: &CyclePermutation, g: &OrderedGraph) -> Result<CyclePermutation> {
    w.expand_letters(|v| match g.token(v) {
        Some(tok) => tok.ids().to_vec(),
        None => vec![v],
    })
}

/// `D(G)` by the edge-operation recursion, flattened to original ids.
pub fn derangements_recursive(g: &OrderedGraph) -> Result<DerangementSet> {
    if g.is_empty() {
        return Err(Error::domain("derangement set of the empty graph is undefined"));
    }
    let mut memo = HashMap::new();
    let by_key = recurse(g, &mut memo);
    by_key.iter().map(|w| flatten(w, g)).collect()
}

/// Results cached by vertex position so isomorphically-labeled subgraphs
/// share work regardless of their keys.
type PositionMemo = HashMap<CanonicalKey, Vec<Vec<Vec<usize>>>>;

fn recurse(g: &OrderedGraph, memo: &mut PositionMemo) -> Vec<CyclePermutation> {
    let t = g.max_key().expect("nonempty");
    if g.is_isolated(t) || g.has_isolated_vertex() {
        return Vec::new();
    }
    let keys: Vec<VertexId> = g.keys().collect();
    if g.len() == 2 {
        return vec![CyclePermutation::from_cycles(vec![keys]).unwrap()];
    }
    let canonical = g.canonical_key();
    if let Some(cached) = memo.get(&canonical) {
        return cached
            .iter()
            .map(|cycles| {
                let cycles = cycles.iter().map(|c| c.iter().map(|&i| keys[i]).collect()).collect();
                CyclePermutation::from_cycles(cycles).unwrap()
            })
            .collect();
    }

    let e = g.maximal_edge().expect("t is not isolated");
    let (s, t) = (e.s(), e.t());
    let mut out: BTreeSet<CyclePermutation> = recurse(&g.delete_edge(&e).unwrap(), memo)
        .into_iter()
        .collect();
    let deleted = out.len();
    for w in recurse(&g.contract_edge(&e).unwrap(), memo) {
        out.insert(lift_contraction(&w, s, t).unwrap());
    }
    let contracted = out.len() - deleted;
    let extracted = recurse(&g.extract_edge(&e).unwrap(), memo);
    let n_extracted = extracted.len();
    for w in extracted {
        out.insert(lift_extraction(&w, s, t).unwrap());
    }
    assert_eq!(
        out.len() - deleted - contracted,
        n_extracted,
        "recursion branches overlap on {g}"
    );

    let out: Vec<CyclePermutation> = out.into_iter().collect();
    let positions = out
        .iter()
        .map(|w| {
            w.cycles()
                .iter()
                .map(|c| c.iter().map(|&v| g.index_of(v).unwrap()).collect())
                .collect()
        })
        .collect();
    memo.insert(canonical, positions);
    out
}

/// `k ↦ |{w : w has exactly k cycles}|`.
pub fn cycle_count_histogram<'a>(
    set: impl IntoIterator<Item = &'a CyclePermutation>,
) -> BTreeMap<usize, usize> {
    let mut hist = BTreeMap::new();
    for w in set {
        *hist.entry(w.cycle_count()).or_insert(0) += 1;
    }
    hist
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, Edge, Family};

    fn perm(s: &str) -> CyclePermutation {
        s.parse().unwrap()
    }

    fn set(items: &[&str]) -> DerangementSet {
        items.iter().map(|s| perm(s)).collect()
    }

    fn worked_example() -> OrderedGraph {
        OrderedGraph::from_edges(4, [(1, 3), (1, 4), (2, 3), (2, 4)]).unwrap()
    }

    /// Bottom path 1-2-3-4, rung 3-5, top path 5-6-7.
    fn criterion_example() -> OrderedGraph {
        OrderedGraph::from_edges(7, [(1, 2), (2, 3), (3, 4), (3, 5), (5, 6), (6, 7)]).unwrap()
    }

    #[test]
    fn small_derangement_tables() {
        assert!(all_derangements(&[1]).is_empty());
        assert_eq!(all_derangements(&[1, 2, 3]), set(&["(1 2 3)", "(1 3 2)"]));
        let d4 = all_derangements(&[1, 2, 3, 4]);
        let listed = set(&[
            "(1 2 3 4)", "(1 2 4 3)", "(1 3 2 4)", "(1 3 4 2)", "(1 4 2 3)", "(1 4 3 2)",
            "(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)",
        ]);
        assert_eq!(d4, listed);
        // Sorted order matches the table's listing order.
        let rendered: Vec<String> = d4.iter().map(ToString::to_string).collect();
        assert_eq!(rendered[0], "(1 2 3 4)");
        assert_eq!(rendered[8], "(1 4)(2 3)");
    }

    #[test]
    fn criterion_examples() {
        let g = criterion_example();
        assert!(is_graph_valid(&g, &perm("(1 2 3 4)(5 6 7)")).unwrap());
        assert!(!is_graph_valid(&g, &perm("(1 2 3 4 5 6 7)")).unwrap());
        assert!(!is_graph_valid(&g, &perm("(1 3 4 7 2)(5 6)")).unwrap());
        assert!(is_graph_valid(&g, &perm("(1 2)")).is_err());
        // Fixed points fail rather than error.
        let k2 = OrderedGraph::complete_on(&[1, 2]).unwrap();
        assert!(!is_graph_valid(&k2, &perm("(1)(2)")).unwrap());
    }

    #[test]
    fn criterion_sets() {
        let k2 = OrderedGraph::complete_on(&[1, 2]).unwrap();
        assert_eq!(derangements_by_criterion(&k2).unwrap(), set(&["(1 2)"]));
        assert!(derangements_by_criterion(&OrderedGraph::edgeless(3)).unwrap().is_empty());
        let expected = set(&["(1 4)(2 3)", "(1 4 2 3)", "(1 3 2 4)", "(1 2 4 3)", "(1 3)(2 4)"]);
        assert_eq!(derangements_by_criterion(&worked_example()).unwrap(), expected);
    }

    #[test]
    fn lifts() {
        // x = [2, 4] is keyed by 2 in G / e.
        assert_eq!(lift_contraction(&perm("(1 2 3)"), 2, 4).unwrap(), perm("(1 2 4 3)"));
        assert_eq!(lift_contraction(&perm("(2 3)"), 2, 4).unwrap(), perm("(2 4 3)"));
        assert!(lift_contraction(&perm("(1 3)"), 2, 4).is_err());

        // A nested token [2, 4, 3] expands in place.
        let g = OrderedGraph::complete_on(&[1, 2, 3, 4]).unwrap();
        let g = g.contract_edge(&Edge::new(2, 4).unwrap()).unwrap();
        let g = g.contract_edge(&Edge::new(2, 3).unwrap()).unwrap();
        assert_eq!(flatten(&perm("(1 2)"), &g).unwrap(), perm("(1 2 4 3)"));

        assert_eq!(lift_extraction(&perm("(1 3)"), 2, 4).unwrap(), perm("(1 3)(2 4)"));
        assert_eq!(lift_extraction(&CyclePermutation::empty(), 1, 2).unwrap(), perm("(1 2)"));
        assert_eq!(
            lift_extraction(&perm("(1 2)(3 4)"), 5, 6).unwrap(),
            perm("(1 2)(3 4)(5 6)")
        );
        assert!(lift_extraction(&perm("(1 2)"), 2, 3).is_err());
    }

    #[test]
    fn recursion_examples() {
        let expected = set(&["(1 4)(2 3)", "(1 4 2 3)", "(1 3 2 4)", "(1 2 4 3)", "(1 3)(2 4)"]);
        assert_eq!(derangements_recursive(&worked_example()).unwrap(), expected);
        // The chord {1,2} admits (1 4 3 2) as well.
        let chorded = OrderedGraph::from_edges(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]).unwrap();
        let mut with_chord = expected.clone();
        with_chord.insert(perm("(1 4 3 2)"));
        assert_eq!(derangements_recursive(&chorded).unwrap(), with_chord);
        let k2 = OrderedGraph::complete_on(&[1, 2]).unwrap();
        assert_eq!(derangements_recursive(&k2).unwrap(), set(&["(1 2)"]));
        let g = OrderedGraph::from_edges(4, [(1, 2), (2, 3)]).unwrap();
        assert!(derangements_recursive(&g).unwrap().is_empty());
        assert!(derangements_recursive(&OrderedGraph::edgeless(0)).is_err());
    }

    #[test]
    fn recursion_matches_criterion_exhaustively() {
        for n in 1..=5 {
            for g in OrderedGraph::all_labeled(n) {
                let rec = derangements_recursive(&g).unwrap();
                assert_eq!(rec, derangements_by_criterion(&g).unwrap(), "{g}");
                let t = g.max_key().unwrap();
                for w in &rec {
                    assert!(w.is_derangement());
                    assert!(g.adjacent(t, w.preimage(t).unwrap()), "{g}: {w}");
                }
            }
        }
    }

    #[test]
    fn histograms() {
        let k2 = OrderedGraph::complete_on(&[1, 2]).unwrap();
        let h = cycle_count_histogram(&derangements_recursive(&k2).unwrap());
        assert_eq!(h, BTreeMap::from([(1, 1)]));
        for m in 3..=5 {
            let c = make_family(Family::Cycle, m).unwrap();
            let h = cycle_count_histogram(&derangements_recursive(&c).unwrap());
            assert_eq!(h.get(&1).copied(), Some(m as usize - 1));
        }
        let star = make_family(Family::D, 4).unwrap();
        let h = cycle_count_histogram(&derangements_recursive(&star).unwrap());
        assert_eq!(h.get(&1).copied(), Some(1));
    }
}
