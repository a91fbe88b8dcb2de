//! D(G) by the recursion and by the adjacency criterion, with the canopy of
//! a rejected permutation.

use boolean_complex::derangement::{
    cycle_count_histogram, derangements_by_criterion, derangements_recursive, is_graph_valid,
    CyclePermutation,
};
use boolean_complex::graph::OrderedGraph;

fn main() -> boolean_complex::Result<()> {
    let g = OrderedGraph::from_edges(7, [(1, 2), (2, 3), (3, 4), (3, 5), (5, 6), (6, 7)])?;
    let rec = derangements_recursive(&g)?;
    let crit = derangements_by_criterion(&g)?;
    println!("{g}\n|D(G)| = {}, constructions agree: {}", rec.len(), rec == crit);
    for (k, count) in cycle_count_histogram(&rec) {
        println!("  {count} with {k} cycle(s)");
    }

    let w: CyclePermutation = "(1 3 4 7 2)(5 6)".parse()?;
    println!("\n{w} valid: {}", is_graph_valid(&g, &w)?);
    println!("t  lambda  rho");
    for t in g.keys() {
        let c = w.canopy(t)?;
        let adjacent = c.rho.iter().any(|&r| g.adjacent(c.lambda, r));
        println!("{t}  {:6}  {:?}{}", c.lambda, c.rho, if adjacent { "" } else { "  <- fails" });
    }
    Ok(())
}
