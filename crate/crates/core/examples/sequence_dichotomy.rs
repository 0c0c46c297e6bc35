//! A monotone run or a row of local extrema in delta sequences, and the
//! zigzag edge the extrema give.

use hyperramsey::delta::{delta_sequence, BitVertex, DeltaProfile};
use hyperramsey::verifier::dichotomy::zigzag_edge;
use hyperramsey::verifier::{check_sequence_dichotomy, Dichotomy};

fn main() -> hyperramsey::Result<()> {
    println!("{:?}", check_sequence_dichotomy(&[1, 2, 3, 4, 2], 4, 2)?);
    println!("{:?}", check_sequence_dichotomy(&[2, 5, 1, 4, 3, 6, 1], 4, 3)?);

    let set: Vec<BitVertex> = [3u64, 9, 12, 20, 33, 40, 41, 50, 57, 62]
        .iter()
        .map(|&v| BitVertex::new(6, v).unwrap())
        .collect();
    let d = delta_sequence(&set)?;
    println!("deltas {d:?}");
    let k = 4;
    match check_sequence_dichotomy(&d, d.len() + 1, k)? {
        Dichotomy::AlternatingExtrema { positions } => {
            let edge = zigzag_edge(&set, &positions, k)?;
            let p = DeltaProfile::of(&edge)?;
            println!("extrema at {positions:?}, edge deltas {:?} ({:?})", p.deltas, p.class);
        }
        other => println!("{other:?}"),
    }
    Ok(())
}
