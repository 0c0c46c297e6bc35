//! Delta sequences of a few edges of {0,1}^6 and their classes, plus the
//! exhaustive property checks at N = 4.

use hyperramsey::delta::{BitVertex, DeltaProfile};
use hyperramsey::verifier::properties::{property_a_exhaustive, property_b_exhaustive};

fn main() -> hyperramsey::Result<()> {
    let edges: [&[u64]; 4] = [
        &[0b000000, 0b000001, 0b000011, 0b000111, 0b001111, 0b011111],
        &[0b000000, 0b100000, 0b110000, 0b111000, 0b111100],
        &[0b000000, 0b001000, 0b010000, 0b010100, 0b011000],
        &[0b000001, 0b000100, 0b010000, 0b010001, 0b100000],
    ];
    for e in edges {
        let set: Vec<BitVertex> = e.iter().map(|&v| BitVertex::new(6, v).unwrap()).collect();
        let p = DeltaProfile::of(&set)?;
        let shown: Vec<String> = set.iter().map(ToString::to_string).collect();
        println!("{:<45} deltas {:?} {:?}", shown.join(" "), p.deltas, p.class);
    }
    let a = property_a_exhaustive(4)?;
    let b = property_b_exhaustive(4, 6)?;
    println!("N = 4: property A on {} triples, {} violations", a.checked, a.violations);
    println!("N = 4: property B on {} tuples, {} violations", b.checked, b.violations);
    Ok(())
}
