//! Bracket trees and their expansions, in the complete graph and collapsed
//! to a sparser one.

use boolean_complex::chain::BooleanComplex;
use boolean_complex::derangement::CyclePermutation;
use boolean_complex::graph::{make_family, Family};
use boolean_complex::homology::{build_bracket_tree, phi_complete, phi_graph};

fn main() -> boolean_complex::Result<()> {
    let w: CyclePermutation = "(1 3 4)(2 6)(5 8 7)".parse()?;
    let chain = phi_complete(&w)?;
    println!("{w} -> {}", build_bracket_tree(&w)?);
    println!("{} terms, first {}", chain.len(), chain.terms().next().unwrap());

    let path = make_family(Family::A, 4)?;
    let cx = BooleanComplex::new(path)?;
    let w: CyclePermutation = "(1 2 3 4)".parse()?;
    let full = phi_complete(&w)?;
    let collapsed = phi_graph(&w, &cx)?;
    println!("\n{w} -> {}", build_bracket_tree(&w)?);
    println!("in K_4:  {full}");
    println!("in A_4:  {collapsed}");
    println!("boundary is zero: {}", collapsed.differential()?.is_zero());
    Ok(())
}
