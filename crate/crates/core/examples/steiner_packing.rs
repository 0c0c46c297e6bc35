use hyperramsey::coloring::{greedy_partial_steiner, SteinerFamily};

fn main() -> hyperramsey::Result<()> {
    let f = greedy_partial_steiner(7, 3)?;
    for b in &f.blocks {
        println!("{b:?}");
    }
    for n in [10, 20, 30] {
        let f = greedy_partial_steiner(n, 3)?;
        println!(
            "n = {n}: {} blocks, counting bound {:.1}, maximal {}",
            f.blocks.len(),
            SteinerFamily::counting_bound(n, 3),
            f.is_maximal()
        );
    }
    Ok(())
}
