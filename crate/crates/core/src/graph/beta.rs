use std::collections::HashMap;

use super::{CanonicalKey, Edge, OrderedGraph};
use crate::error::{Error, Result};

/// Memo table for the deletion/contraction/extraction recursion.
///
/// Keys are the labeled structure of a graph relabeled by order; no
/// isomorphism reduction is attempted. One table belongs to one caller.
#[derive(Debug, Default)]
pub struct BetaMemo {
    table: HashMap<CanonicalKey, u64>,
}

impl BetaMemo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn beta(&mut self, g: &OrderedGraph) -> Result<u64> {
        if g.is_empty() {
            return Err(Error::domain("boolean number of the empty graph is undefined"));
        }
        Ok(self.eval(g))
    }

    /// One recursion step on an arbitrary edge `e`, then the usual recursion
    /// below it. Requires `|G| >= 3` so that `G - [e]` is nonempty.
    pub fn beta_via_edge(&mut self, g: &OrderedGraph, e: &Edge) -> Result<u64> {
        if g.len() < 3 {
            return Err(Error::domain("pivoting on an edge needs at least three vertices"));
        }
        Ok(self.eval(&g.delete_edge(e)?)
            + self.eval(&g.contract_edge(e)?)
            + self.eval(&g.extract_edge(e)?))
    }

    fn eval(&mut self, g: &OrderedGraph) -> u64 {
        // An isolated vertex forces beta = 0; this also covers |G| = 1.
        if g.has_isolated_vertex() {
            return 0;
        }
        if g.len() == 2 {
            return 1;
        }
        let key = g.canonical_key();
        if let Some(&b) = self.table.get(&key) {
            return b;
        }
        let e = g.maximal_edge().expect("no isolated vertex, so some edge exists");
        let b = self.eval(&g.delete_edge(&e).unwrap())
            + self.eval(&g.contract_edge(&e).unwrap())
            + self.eval(&g.extract_edge(&e).unwrap());
        self.table.insert(key, b);
        b
    }
}

/// The boolean number of a nonempty graph.
pub fn beta(g: &OrderedGraph) -> Result<u64> {
    BetaMemo::new().beta(g)
}
