use std::fmt;
use std::str::FromStr;

use super::OrderedGraph;
use crate::error::{Error, Result};

/// Graph families with fixed vertex labelings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// Complete graph `K_n`.
    Complete,
    /// Ferrers graph of the staircase shape of height `r`: odd vertices are
    /// rows, even vertices columns, and `{o, e}` is an edge iff `o < e`.
    Ferrers,
    /// Path `1 - 2 - ... - n`.
    A,
    /// Path `1 - ... - (n-1)` with leaf `n` hanging off vertex 2.
    D,
    /// Path `1 - ... - (n-1)` with leaf `n` hanging off vertex 3.
    E,
    /// Cycle on `m` vertices, `i` adjacent to `i ± 1 (mod m)`.
    Cycle,
    /// Affine type A. Parameter `n` gives the cycle on `n` vertices.
    AffineA,
}

impl Family {
    pub fn min_param(self) -> u32 {
        match self {
            Family::Complete | Family::Ferrers | Family::A => 1,
            Family::D => 4,
            Family::E => 5,
            Family::Cycle | Family::AffineA => 3,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Family::Complete => "K",
            Family::Ferrers => "F",
            Family::A => "A",
            Family::D => "D",
            Family::E => "E",
            Family::Cycle => "C",
            Family::AffineA => "AA",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "K" | "k" | "complete" => Family::Complete,
            "F" | "f" | "ferrers" => Family::Ferrers,
            "A" => Family::A,
            "D" => Family::D,
            "E" => Family::E,
            "C" | "cycle" => Family::Cycle,
            "AA" | "Ã" | "affine-A" | "A~" => Family::AffineA,
            other => return Err(Error::domain(format!("unknown graph family {other:?}"))),
        })
    }
}

fn path_edges(n: u32) -> impl Iterator<Item = (u32, u32)> {
    (1..n).map(|i| (i, i + 1))
}

pub fn make_family(family: Family, param: u32) -> Result<OrderedGraph> {
    if param < family.min_param() {
        return Err(Error::domain(format!(
            "family {family} needs parameter >= {}, got {param}",
            family.min_param()
        )));
    }
    match family {
        Family::Complete => OrderedGraph::complete_on(&(1..=param).collect::<Vec<_>>()),
        Family::Ferrers => {
            let n = 2 * param;
            let edges = (1..=n)
                .step_by(2)
                .flat_map(|o| (o + 1..=n).step_by(2).map(move |e| (o, e)));
            OrderedGraph::from_edges(n, edges)
        }
        Family::A => OrderedGraph::from_edges(param, path_edges(param)),
        Family::D => {
            OrderedGraph::from_edges(param, path_edges(param - 1).chain([(2, param)]))
        }
        Family::E => {
            OrderedGraph::from_edges(param, path_edges(param - 1).chain([(3, param)]))
        }
        Family::Cycle | Family::AffineA => {
            OrderedGraph::from_edges(param, path_edges(param).chain([(1, param)]))
        }
    }
}
