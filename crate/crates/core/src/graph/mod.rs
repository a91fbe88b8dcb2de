//! Ordered simple graphs and the three edge operations.
//!
//! Vertices are [`VertexToken`]s: nonempty sequences of original vertex ids.
//! A fresh graph has singleton tokens; contraction concatenates the id
//! sequences of the two endpoints, so the history of every merge stays
//! recoverable. The linear order on vertices is the order of the tokens'
//! first ids (their *keys*), and edges are stored as pairs of keys.

mod beta;
mod family;
mod io;

pub use beta::{beta, BetaMemo};
pub use family::{make_family, Family};
pub use io::{parse_graph, write_graph};

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub type VertexId = u32;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct VertexToken {
    ids: Vec<VertexId>,
}

impl VertexToken {
    pub fn new(ids: Vec<VertexId>) -> Result<Self> {
        if ids.is_empty() {
            return Err(Error::domain("vertex token must be nonempty"));
        }
        let distinct: HashSet<_> = ids.iter().collect();
        if distinct.len() != ids.len() {
            return Err(Error::domain(format!("vertex token {ids:?} repeats an id")));
        }
        Ok(VertexToken { ids })
    }

    pub fn single(id: VertexId) -> Self {
        VertexToken { ids: vec![id] }
    }

    /// The first id; determines the token's position in the vertex order.
    pub fn key(&self) -> VertexId {
        self.ids[0]
    }

    pub fn ids(&self) -> &[VertexId] {
        &self.ids
    }

    pub fn is_singleton(&self) -> bool {
        self.ids.len() == 1
    }

    fn merged(&self, other: &VertexToken) -> VertexToken {
        let mut ids = self.ids.clone();
        ids.extend_from_slice(&other.ids);
        VertexToken { ids }
    }
}

impl fmt::Display for VertexToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_singleton() {
            write!(f, "{}", self.ids[0])
        } else {
            write!(f, "[")?;
            for (i, id) in self.ids.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{id}")?;
            }
            write!(f, "]")
        }
    }
}

/// An unordered edge, stored by the keys of its endpoints with `s < t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Edge {
    s: VertexId,
    t: VertexId,
}

impl Edge {
    pub fn new(a: VertexId, b: VertexId) -> Result<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge { s: a, t: b }),
            std::cmp::Ordering::Greater => Ok(Edge { s: b, t: a }),
            std::cmp::Ordering::Equal => Err(Error::domain(format!("loop at vertex {a}"))),
        }
    }

    /// The smaller endpoint key.
    pub fn s(&self) -> VertexId {
        self.s
    }

    /// The larger endpoint key.
    pub fn t(&self) -> VertexId {
        self.t
    }

    pub fn touches(&self, v: VertexId) -> bool {
        self.s == v || self.t == v
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.s, self.t)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderedGraph {
    /// Sorted by key.
    tokens: Vec<VertexToken>,
    edges: BTreeSet<Edge>,
}

/// Labeled structure of a graph with its vertices relabeled `0..n` by order.
pub type CanonicalKey = (usize, Vec<(u8, u8)>);

impl OrderedGraph {
    pub fn new(
        tokens: impl IntoIterator<Item = VertexToken>,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self> {
        let mut tokens: Vec<VertexToken> = tokens.into_iter().collect();
        tokens.sort_by_key(VertexToken::key);
        let mut seen = HashSet::new();
        for tok in &tokens {
            for &id in tok.ids() {
                if !seen.insert(id) {
                    return Err(Error::domain(format!("vertex id {id} appears in two tokens")));
                }
            }
        }
        let mut g = OrderedGraph {
            tokens,
            edges: BTreeSet::new(),
        };
        for (a, b) in edges {
            let e = Edge::new(a, b)?;
            if !g.has_vertex(e.s) || !g.has_vertex(e.t) {
                return Err(Error::domain(format!("edge {e} has an endpoint outside the graph")));
            }
            if !g.edges.insert(e) {
                return Err(Error::domain(format!("duplicate edge {e}")));
            }
        }
        Ok(g)
    }

    /// Graph on `1..=n` with the given edges.
    pub fn from_edges(
        n: u32,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self> {
        Self::new((1..=n).map(VertexToken::single), edges)
    }

    /// The edgeless graph on `1..=n`.
    pub fn edgeless(n: u32) -> Self {
        OrderedGraph {
            tokens: (1..=n).map(VertexToken::single).collect(),
            edges: BTreeSet::new(),
        }
    }

    /// Complete graph on the given ids.
    pub fn complete_on(ids: &[VertexId]) -> Result<Self> {
        let edges: Vec<_> = ids
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| ids[i + 1..].iter().map(move |&b| (a, b)))
            .collect();
        Self::new(ids.iter().copied().map(VertexToken::single), edges)
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn tokens(&self) -> &[VertexToken] {
        &self.tokens
    }

    pub fn token(&self, key: VertexId) -> Option<&VertexToken> {
        self.index_of(key).map(|i| &self.tokens[i])
    }

    /// Vertex keys in increasing order.
    pub fn keys(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.tokens.iter().map(VertexToken::key)
    }

    pub fn index_of(&self, key: VertexId) -> Option<usize> {
        self.tokens.binary_search_by_key(&key, VertexToken::key).ok()
    }

    pub fn has_vertex(&self, key: VertexId) -> bool {
        self.index_of(key).is_some()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_edge(&self, e: &Edge) -> bool {
        self.edges.contains(e)
    }

    pub fn adjacent(&self, a: VertexId, b: VertexId) -> bool {
        Edge::new(a, b).is_ok_and(|e| self.edges.contains(&e))
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.edges.iter().filter_map(move |e| {
            if e.s == v {
                Some(e.t)
            } else if e.t == v {
                Some(e.s)
            } else {
                None
            }
        })
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.neighbors(v).count()
    }

    pub fn is_isolated(&self, v: VertexId) -> bool {
        !self.edges.iter().any(|e| e.touches(v))
    }

    pub fn has_isolated_vertex(&self) -> bool {
        let covered: HashSet<VertexId> = self.edges.iter().flat_map(|e| [e.s, e.t]).collect();
        covered.len() < self.tokens.len()
    }

    pub fn max_key(&self) -> Option<VertexId> {
        self.tokens.last().map(VertexToken::key)
    }

    /// `{s, t}` where `t` is the largest non-isolated vertex and `s` its
    /// largest neighbor.
    pub fn maximal_edge(&self) -> Option<Edge> {
        // Edges are ordered by (s, t); the maximal edge maximizes t, then s.
        self.edges.iter().copied().max_by_key(|e| (e.t, e.s))
    }

    fn require_edge(&self, e: &Edge) -> Result<()> {
        if self.edges.contains(e) {
            Ok(())
        } else {
            Err(Error::domain(format!("edge {e} is not in the graph")))
        }
    }

    /// `G - e`: same vertices and order, one edge fewer.
    pub fn delete_edge(&self, e: &Edge) -> Result<Self> {
        self.require_edge(e)?;
        let mut g = self.clone();
        g.edges.remove(e);
        Ok(g)
    }

    /// `G / e`: merge `t` into `s`. The merged token is `s.ids ++ t.ids` and
    /// takes the place of `s` in the order; loops and parallel edges vanish.
    pub fn contract_edge(&self, e: &Edge) -> Result<Self> {
        self.require_edge(e)?;
        let si = self.index_of(e.s).expect("edge endpoint");
        let ti = self.index_of(e.t).expect("edge endpoint");
        let merged = self.tokens[si].merged(&self.tokens[ti]);
        let mut tokens = self.tokens.clone();
        tokens[si] = merged;
        tokens.remove(ti);
        let relabel = |v: VertexId| if v == e.t { e.s } else { v };
        let edges = self
            .edges
            .iter()
            .filter_map(|f| Edge::new(relabel(f.s), relabel(f.t)).ok())
            .collect();
        Ok(OrderedGraph { tokens, edges })
    }

    /// `G - [e]`: remove both endpoints of `e` and every incident edge.
    pub fn extract_edge(&self, e: &Edge) -> Result<Self> {
        self.require_edge(e)?;
        let tokens = self
            .tokens
            .iter()
            .filter(|tok| !e.touches(tok.key()))
            .cloned()
            .collect();
        let edges = self
            .edges
            .iter()
            .filter(|f| !f.touches(e.s) && !f.touches(e.t))
            .copied()
            .collect();
        Ok(OrderedGraph { tokens, edges })
    }

    pub fn disjoint_union(&self, other: &OrderedGraph) -> Result<Self> {
        let tokens = self.tokens.iter().chain(&other.tokens).cloned();
        let edges = self
            .edges
            .iter()
            .chain(&other.edges)
            .map(|e| (e.s, e.t))
            .collect::<Vec<_>>();
        Self::new(tokens, edges).map_err(|err| match err {
            Error::Domain(msg) => Error::domain(format!("disjoint union: {msg}")),
            other => other,
        })
    }

    /// Same vertex keys and `edges(self) ⊆ edges(other)`.
    pub fn is_spanning_subgraph_of(&self, other: &OrderedGraph) -> bool {
        self.keys().eq(other.keys()) && self.edges.is_subset(&other.edges)
    }

    /// True if every token is a single original id.
    pub fn has_singleton_tokens(&self) -> bool {
        self.tokens.iter().all(VertexToken::is_singleton)
    }

    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let n = self.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for e in &self.edges {
            let a = find(&mut parent, self.index_of(e.s).unwrap());
            let b = find(&mut parent, self.index_of(e.t).unwrap());
            parent[a] = b;
        }
        let mut groups: Vec<Vec<VertexId>> = Vec::new();
        let mut root_slot = vec![usize::MAX; n];
        for i in 0..n {
            let r = find(&mut parent, i);
            if root_slot[r] == usize::MAX {
                root_slot[r] = groups.len();
                groups.push(Vec::new());
            }
            groups[root_slot[r]].push(self.tokens[i].key());
        }
        groups
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_tree(&self) -> bool {
        !self.is_empty() && self.is_connected() && self.edges.len() + 1 == self.len()
    }

    /// Vertices relabeled `0..n` by order, edges listed in sorted order.
    pub fn canonical_key(&self) -> CanonicalKey {
        let edges = self
            .edges
            .iter()
            .map(|e| {
                (
                    self.index_of(e.s).unwrap() as u8,
                    self.index_of(e.t).unwrap() as u8,
                )
            })
            .collect();
        (self.len(), edges)
    }

    /// Every labeled graph on `1..=n`, in order of the edge bitmask over
    /// the lexicographically sorted vertex pairs.
    pub fn all_labeled(n: u32) -> impl Iterator<Item = OrderedGraph> {
        let pairs: Vec<(u32, u32)> = (1..=n)
            .flat_map(|a| (a + 1..=n).map(move |b| (a, b)))
            .collect();
        assert!(pairs.len() < 64, "too many vertex pairs to enumerate");
        (0u64..1 << pairs.len()).map(move |mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p);
            OrderedGraph::from_edges(n, edges).expect("valid by construction")
        })
    }
}

impl fmt::Display for OrderedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V=")?;
        for (i, tok) in self.tokens.iter().enumerate() {
            write!(f, "{}{tok}", if i == 0 { "" } else { "," })?;
        }
        write!(f, " E=")?;
        for (i, e) in self.edges.iter().enumerate() {
            write!(f, "{}{e}", if i == 0 { "" } else { "," })?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge(a: u32, b: u32) -> Edge {
        Edge::new(a, b).unwrap()
    }

    fn edge_list(g: &OrderedGraph) -> Vec<(u32, u32)> {
        g.edges().map(|e| (e.s(), e.t())).collect()
    }

    /// The 4-cycle 1-3-2-4-1 whose derangement set has five elements.
    fn worked_example() -> OrderedGraph {
        OrderedGraph::from_edges(4, [(1, 3), (1, 4), (2, 3), (2, 4)]).unwrap()
    }

    /// The same drawing with the extra chord {1,2}.
    fn pictured_example() -> OrderedGraph {
        OrderedGraph::from_edges(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]).unwrap()
    }

    #[test]
    fn token_invariants() {
        assert!(VertexToken::new(vec![]).is_err());
        assert!(VertexToken::new(vec![2, 2]).is_err());
        let t = VertexToken::new(vec![2, 4, 3]).unwrap();
        assert_eq!(t.key(), 2);
        assert_eq!(t.to_string(), "[2 4 3]");
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert!(OrderedGraph::from_edges(3, [(1, 1)]).is_err());
        assert!(OrderedGraph::from_edges(3, [(1, 2), (2, 1)]).is_err());
        assert!(OrderedGraph::from_edges(3, [(1, 4)]).is_err());
        let overlapping = [VertexToken::new(vec![1, 2]).unwrap(), VertexToken::single(2)];
        assert!(OrderedGraph::new(overlapping, []).is_err());
    }

    #[test]
    fn maximal_edge_examples() {
        let k3 = OrderedGraph::complete_on(&[1, 2, 3]).unwrap();
        assert_eq!(k3.maximal_edge(), Some(edge(2, 3)));
        let g = OrderedGraph::from_edges(3, [(1, 2)]).unwrap();
        assert_eq!(g.maximal_edge(), Some(edge(1, 2)));
        assert_eq!(OrderedGraph::edgeless(4).maximal_edge(), None);
        assert_eq!(worked_example().maximal_edge(), Some(edge(2, 4)));
        assert_eq!(pictured_example().maximal_edge(), Some(edge(2, 4)));
    }

    #[test]
    fn delete_examples() {
        let k3 = OrderedGraph::complete_on(&[1, 2, 3]).unwrap();
        assert_eq!(edge_list(&k3.delete_edge(&edge(2, 3)).unwrap()), [(1, 2), (1, 3)]);
        let k2 = OrderedGraph::complete_on(&[1, 2]).unwrap();
        assert_eq!(k2.delete_edge(&edge(1, 2)).unwrap(), OrderedGraph::edgeless(2));
        let g = pictured_example().delete_edge(&edge(2, 4)).unwrap();
        assert_eq!(edge_list(&g), [(1, 2), (1, 3), (1, 4), (2, 3)]);
        let g = worked_example().delete_edge(&edge(2, 4)).unwrap();
        assert_eq!(edge_list(&g), [(1, 3), (1, 4), (2, 3)]);
        assert!(k2.delete_edge(&edge(1, 3)).is_err());
    }

    #[test]
    fn contract_examples() {
        assert_eq!(
            pictured_example().contract_edge(&edge(2, 4)).unwrap(),
            worked_example().contract_edge(&edge(2, 4)).unwrap()
        );
        let g = worked_example().contract_edge(&edge(2, 4)).unwrap();
        assert_eq!(g.len(), 3);
        assert_eq!(g.token(2).unwrap().ids(), &[2, 4]);
        assert_eq!(edge_list(&g), [(1, 2), (1, 3), (2, 3)]);

        let k2 = OrderedGraph::complete_on(&[1, 2]).unwrap();
        let c = k2.contract_edge(&edge(1, 2)).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c.tokens()[0].ids(), &[1, 2]);
        assert_eq!(c.edge_count(), 0);

        let k3 = OrderedGraph::complete_on(&[1, 2, 3]).unwrap();
        let c = k3.contract_edge(&edge(1, 2)).unwrap();
        assert_eq!(edge_list(&c), [(1, 3)]);
        assert_eq!(c.token(1).unwrap().ids(), &[1, 2]);

        // Second contraction in the worked example produces the token "243".
        let cc = g.contract_edge(&edge(2, 3)).unwrap();
        assert_eq!(cc.token(2).unwrap().ids(), &[2, 4, 3]);
        assert_eq!(edge_list(&cc), [(1, 2)]);
    }

    #[test]
    fn extract_examples() {
        let g = worked_example().extract_edge(&edge(2, 4)).unwrap();
        assert_eq!(g.keys().collect::<Vec<_>>(), [1, 3]);
        assert_eq!(edge_list(&g), [(1, 3)]);
        let k2 = OrderedGraph::complete_on(&[1, 2]).unwrap();
        assert!(k2.extract_edge(&edge(1, 2)).unwrap().is_empty());
        let p = OrderedGraph::from_edges(3, [(1, 2), (2, 3)]).unwrap();
        assert_eq!(p.extract_edge(&edge(2, 3)).unwrap(), OrderedGraph::edgeless(1));
    }

    #[test]
    fn disjoint_union_examples() {
        let a = OrderedGraph::complete_on(&[1, 2]).unwrap();
        let b = OrderedGraph::complete_on(&[3, 4]).unwrap();
        let u = a.disjoint_union(&b).unwrap();
        assert_eq!(u.len(), 4);
        assert_eq!(edge_list(&u), [(1, 2), (3, 4)]);
        let iso = OrderedGraph::new([VertexToken::single(9)], []).unwrap();
        let u = a.disjoint_union(&iso).unwrap();
        assert_eq!(u.keys().collect::<Vec<_>>(), [1, 2, 9]);
        assert!(a.disjoint_union(&a).is_err());
    }

    #[test]
    fn vertex_counts_under_edge_operations() {
        for g in OrderedGraph::all_labeled(5) {
            for e in g.edges() {
                assert_eq!(g.delete_edge(&e).unwrap().len(), g.len());
                assert_eq!(g.contract_edge(&e).unwrap().len(), g.len() - 1);
                assert_eq!(g.extract_edge(&e).unwrap().len(), g.len() - 2);
            }
        }
    }

    #[test]
    fn connectivity() {
        assert!(worked_example().is_connected());
        assert!(!OrderedGraph::edgeless(2).is_connected());
        assert!(OrderedGraph::from_edges(3, [(1, 2), (2, 3)]).unwrap().is_tree());
        assert!(!OrderedGraph::complete_on(&[1, 2, 3]).unwrap().is_tree());
        assert_eq!(OrderedGraph::all_labeled(4).count(), 64);
    }
}
