//! Small exact values by exhaustive search with unit propagation.

use hyperramsey::verifier::{exact_ramsey, RamseyQuery};

fn main() -> hyperramsey::Result<()> {
    for (k, t, n) in [(3, 2, 3), (3, 4, 3), (3, 2, 4), (4, 3, 4), (3, 3, 4)] {
        let r = exact_ramsey(RamseyQuery { k, t, n, n_max: 7 })?;
        println!("k={k} t={t} n={n}: {} ({} search nodes)", r.value, r.nodes);
        if let Some(c) = r.good_coloring {
            let red = c.colors().iter().filter(|c| c.is_red()).count();
            println!("    good coloring on {} vertices, {red} red edges", c.vertex_count());
        }
    }
    Ok(())
}
