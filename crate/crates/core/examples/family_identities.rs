//! Closed forms for the derangement sets of Ferrers graphs and Coxeter
//! graphs, checked against the recursion.

use boolean_complex::derangement::{
    alternating_excedance_set, coxeter_derangement_set, derangements_recursive,
};
use boolean_complex::graph::{make_family, Family};

fn main() -> boolean_complex::Result<()> {
    for r in 1..=4 {
        let d = derangements_recursive(&make_family(Family::Ferrers, r)?)?;
        let ae = alternating_excedance_set(r);
        println!("F_{r}: |D| = {:3}  equals AE_{}: {}", d.len(), 2 * r, d == ae);
    }
    for family in [Family::A, Family::D, Family::E, Family::AffineA] {
        for n in family.min_param().max(3)..=7 {
            let d = derangements_recursive(&make_family(family, n)?)?;
            let closed = coxeter_derangement_set(family, n)?;
            println!("{family}_{n}: |D| = {:2}  closed form agrees: {}", d.len(), d == closed);
        }
    }
    let affine = derangements_recursive(&make_family(Family::AffineA, 5)?)?;
    println!("\naffine A_5:");
    for w in &affine {
        println!("  {w}");
    }
    Ok(())
}
