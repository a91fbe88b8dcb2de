//! Cells, normal forms, products and boundaries in a boolean complex.

use boolean_complex::chain::{BooleanComplex, ChainF2};
use boolean_complex::graph::OrderedGraph;
use boolean_complex::homology::kernel_dimension_top;

fn main() -> boolean_complex::Result<()> {
    let g = OrderedGraph::from_edges(4, [(1, 2), (2, 3), (3, 4)])?;
    let cx = BooleanComplex::new(g.clone())?;
    println!("{g}");
    for k in -1..cx.vertex_count() as isize {
        println!("  rank {k:2}: {} cells", cx.cells_of_rank(k)?.len());
    }
    println!("normal form of 3 1 4 2: {:?}", cx.normal_form(&[3, 1, 4, 2])?.letters());

    let v = |x| ChainF2::vertex(&cx, x);
    let c = v(1)?.bracket(&v(2)?)?.product(&v(3)?.bracket(&v(4)?)?)?;
    println!("<1,2><3,4> = {c}");
    println!("boundary   = {}", c.differential()?);
    println!("top kernel dimension = {}", kernel_dimension_top(&g)?);
    Ok(())
}
