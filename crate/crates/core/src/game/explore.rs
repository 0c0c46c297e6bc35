use super::{Game, GameStats, ResourceBounds, Step};
use crate::error::{Error, Result};
use crate::hypergraph::Color;

/// Result of playing builder's strategy against every possible painter.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TreeSummary {
    /// Painter decisions visited.
    pub nodes: u64,
    pub leaves: u64,
    pub red_f: u64,
    pub blue_clique: u64,
    /// Componentwise maximum over all finished games.
    pub worst: GameStats,
    /// Observation, witness, budget or resource-bound failures.
    pub violations: Vec<String>,
}

/// Walks the full game tree (both answers at every edge). Fails with a
/// capacity error once more than `node_cap` decisions have been visited.
pub fn explore_game_tree(k: usize, n: usize, node_cap: u64) -> Result<TreeSummary> {
    let bounds = ResourceBounds::for_game(k, n);
    let mut summary = TreeSummary::default();
    let root = Game::new(k, n, None)?;
    if let Some(outcome) = root.outcome() {
        // Decided before any edge is drawn.
        summary.leaves = 1;
        summary.blue_clique = u64::from(outcome.kind == super::OutcomeKind::BlueClique);
        summary.red_f = 1 - summary.blue_clique;
        summary.worst = outcome.stats;
        return Ok(summary);
    }
    let mut stack = vec![root];
    while let Some(game) = stack.pop() {
        summary.nodes += 1;
        if summary.nodes > node_cap {
            return Err(Error::Capacity(format!(
                "game tree for k = {k}, n = {n} exceeds {node_cap} nodes"
            )));
        }
        // Push red first so blue is explored first.
        for c in [Color::Red, Color::Blue] {
            let mut g = game.clone();
            match g.answer(c) {
                Err(e) => summary.violations.push(e.to_string()),
                Ok(Step::Continue) => stack.push(g),
                Ok(Step::StageEnded) => {
                    if let Err(e) = g.state().check_observations() {
                        summary.violations.push(e);
                    }
                    stack.push(g);
                }
                Ok(Step::Over(outcome)) => {
                    summary.leaves += 1;
                    match outcome.kind {
                        super::OutcomeKind::RedF => summary.red_f += 1,
                        super::OutcomeKind::BlueClique => summary.blue_clique += 1,
                    }
                    let s = outcome.stats;
                    summary.worst.vertices = summary.worst.vertices.max(s.vertices);
                    summary.worst.red = summary.worst.red.max(s.red);
                    summary.worst.edges = summary.worst.edges.max(s.edges);
                    if !g.witness_holds(&outcome) {
                        summary.violations.push(format!("bad witness {:?}", outcome.witness));
                    }
                    if !bounds.admits(&s) {
                        summary.violations.push(format!("resource bound exceeded: {s:?}"));
                    }
                }
            }
        }
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k3_n2_tree() {
        // Blue at once ends the game; red then forces a second stage whose
        // answer decides: red gives F, blue gives T = {1, 3}.
        let s = explore_game_tree(3, 2, 1000).unwrap();
        assert_eq!(s.nodes, 2);
        assert_eq!(s.leaves, 3);
        assert_eq!((s.red_f, s.blue_clique), (1, 2));
        assert!(s.violations.is_empty());
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(explore_game_tree(3, 6, 10), Err(Error::Capacity(_))));
    }
}
