//! Plays the builder strategy against a few painters and prints one
//! transcript.

use hyperramsey::game::{
    explore_game_tree, run_game, ConstantPainter, MinimaxPainter, RandomPainter, ResourceBounds,
};
use hyperramsey::Color;

fn main() -> hyperramsey::Result<()> {
    let (k, n) = (3, 4);
    let bounds = ResourceBounds::for_game(k, n);
    println!("k = {k}, n = {n}, bounds {bounds:?}");
    for (name, rec) in [
        ("all red", run_game(k, n, &mut ConstantPainter(Color::Red), None)?),
        ("all blue", run_game(k, n, &mut ConstantPainter(Color::Blue), None)?),
        ("random 3", run_game(k, n, &mut RandomPainter::new(3), None)?),
        ("minimax 5", run_game(k, n, &mut MinimaxPainter { depth: 5 }, None)?),
    ] {
        let o = &rec.outcome;
        println!("{name:>9}: {:?} on {:?}, {:?}", o.kind, o.witness.vertices, o.stats);
    }

    print!("{}", run_game(3, 2, &mut ConstantPainter(Color::Red), None)?.transcript);

    let tree = explore_game_tree(k, n, 1_000_000)?;
    println!(
        "every painter: {} decisions, {} games ({} red F, {} blue cliques), worst {:?}",
        tree.nodes, tree.leaves, tree.red_f, tree.blue_clique, tree.worst
    );
    Ok(())
}
