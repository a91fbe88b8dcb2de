//! Reading and writing the plain-text graph format.

use boolean_complex::graph::{beta, make_family, parse_graph, write_graph, Family};

fn main() -> boolean_complex::Result<()> {
    let text = "# a 4-cycle\n4\n1 3\n1 4\n2 3\n2 4\n";
    let g = parse_graph(text)?;
    println!("parsed {g}, beta = {}", beta(&g)?);

    let ferrers = make_family(Family::Ferrers, 3)?;
    print!("{}", write_graph(&ferrers));

    match parse_graph("3\n1 2\n2 5\n") {
        Ok(_) => unreachable!(),
        Err(e) => println!("error: {e}"),
    }
    Ok(())
}
