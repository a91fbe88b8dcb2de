//! Boolean numbers of small graphs, and one step of the recursion by hand.

use boolean_complex::graph::{beta, make_family, Family, OrderedGraph};

fn main() -> boolean_complex::Result<()> {
    for n in 1..=7 {
        println!("beta(K_{n}) = {}", beta(&make_family(Family::Complete, n)?)?);
    }

    let g = OrderedGraph::from_edges(4, [(1, 3), (1, 4), (2, 3), (2, 4)])?;
    let e = g.maximal_edge().expect("graph has edges");
    println!("\nG = {g}, maximal edge {e}");
    let deleted = g.delete_edge(&e)?;
    let contracted = g.contract_edge(&e)?;
    let extracted = g.extract_edge(&e)?;
    for (name, h) in [("G - e", &deleted), ("G / e", &contracted), ("G - [e]", &extracted)] {
        println!("  {name:8} {h}  beta = {}", beta(h)?);
    }
    println!("  beta(G) = {}", beta(&g)?);
    Ok(())
}
