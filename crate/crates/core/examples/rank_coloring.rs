//! Builds the rank coloring from a seeded base and reports the most red
//! edges found in any 4-set, together with the red density.

use hyperramsey::coloring::{random_base, RankColoring};
use hyperramsey::hypergraph::{enumerate_k_subsets, find_red_configuration, red_count};
use hyperramsey::verifier::properties::red_density;

fn main() -> hyperramsey::Result<()> {
    let (n, k, seed) = (12, 3, 42);
    let phi = random_base(n, k, seed)?;
    let oracle = RankColoring::new(phi.clone())?;

    let worst = enumerate_k_subsets(n, k + 1)
        .map(|s| red_count(&oracle, &s).unwrap())
        .max()
        .unwrap_or(0);
    println!("N = {n}, k = {k}, seed {seed}: at most {worst} red edges in a {}-set", k + 1);
    let found = find_red_configuration(&oracle, 3, &oracle.vertices())?;
    println!("a 4-set with 3 red edges: {}", if found.is_some() { "found" } else { "none" });

    let report = red_density(&random_base(30, k, seed)?)?;
    println!(
        "N = 30: {} of {} edges red ({:.4}, expected {:.4})",
        report.red, report.edges, report.fraction, report.expected
    );
    Ok(())
}
