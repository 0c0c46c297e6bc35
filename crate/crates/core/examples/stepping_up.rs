//! Steps an all-blue 5-uniform base on [5] up to a 6-uniform coloring of
//! {0,1}^5 and checks it, then does the same for the strong rule at k = 7.

use hyperramsey::coloring::BaseTwoColoring;
use hyperramsey::verifier::{check_stepping_conclusion, SteppingMode};
use hyperramsey::Color;

fn main() -> hyperramsey::Result<()> {
    let k = 6;
    let phi = BaseTwoColoring::constant(5, k - 1, Color::Blue)?;
    // n = 6: an all-blue base on five vertices has no blue 6-clique.
    let report = check_stepping_conclusion(&phi, k, 4, 6, SteppingMode::Standard)?;
    println!("standard rule, k = {k}, N = 5: {}", report.verdict);
    println!("most red edges in a 7-set: {:?}", report.max_red);
    println!("blue side: {:?}", report.blue);

    let phi = BaseTwoColoring::constant(5, 6, Color::Blue)?;
    let report = check_stepping_conclusion(&phi, 7, 4, 6, SteppingMode::Strong)?;
    println!("strong rule, k = 7, N = 5: {} (max red {:?})", report.verdict, report.max_red);
    Ok(())
}
