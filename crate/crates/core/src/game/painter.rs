use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::Game;
use crate::coloring::seeded_rng;
use crate::hypergraph::Color;

/// Painter answers each proposed edge immediately. It sees the whole game:
/// every drawn edge, the labels, and `T`.
pub trait Painter {
    fn respond(&mut self, game: &Game, edge: &[u32]) -> Color;
}

impl<F: FnMut(&Game, &[u32]) -> Color> Painter for F {
    fn respond(&mut self, game: &Game, edge: &[u32]) -> Color {
        self(game, edge)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct ConstantPainter(pub Color);

impl Painter for ConstantPainter {
    fn respond(&mut self, _: &Game, _: &[u32]) -> Color {
        self.0
    }
}

/// Fair coin from the crate's seeded generator.
#[derive(Debug, Clone)]
pub struct RandomPainter {
    rng: ChaCha8Rng,
}

impl RandomPainter {
    pub fn new(seed: u64) -> Self {
        RandomPainter {
            rng: seeded_rng(seed),
        }
    }
}

impl Painter for RandomPainter {
    fn respond(&mut self, _: &Game, _: &[u32]) -> Color {
        if self.rng.gen::<bool>() {
            Color::Red
        } else {
            Color::Blue
        }
    }
}

/// Plays back a fixed list of answers, then blue.
#[derive(Debug, Clone)]
pub struct ScriptedPainter {
    colors: Vec<Color>,
    next: usize,
}

impl ScriptedPainter {
    pub fn new(colors: Vec<Color>) -> Self {
        ScriptedPainter { colors, next: 0 }
    }

    /// True once the script has run out.
    pub fn exhausted(&self) -> bool {
        self.next > self.colors.len()
    }
}

impl Painter for ScriptedPainter {
    fn respond(&mut self, _: &Game, _: &[u32]) -> Color {
        let c = self.colors.get(self.next).copied().unwrap_or(Color::Blue);
        self.next += 1;
        c
    }
}

/// Adversary that looks `depth` answers ahead and picks the color that
/// keeps the game going longest (most vertices, then most edges). Ties go
/// to blue.
#[derive(Debug, Clone, Copy)]
pub struct MinimaxPainter {
    pub depth: usize,
}

impl MinimaxPainter {
    fn value(game: &Game, depth: usize) -> (usize, usize) {
        if let Some(o) = game.outcome() {
            return (o.stats.vertices, o.stats.edges);
        }
        let s = game.state().stats();
        if depth == 0 {
            return (s.vertices, s.edges);
        }
        [Color::Blue, Color::Red]
            .iter()
            .map(|&c| {
                let mut g = game.clone();
                match g.answer(c) {
                    Ok(_) => Self::value(&g, depth - 1),
                    // Running the builder out of budget is the best a painter can do.
                    Err(_) => (usize::MAX, usize::MAX),
                }
            })
            .max()
            .unwrap()
    }
}

impl Painter for MinimaxPainter {
    fn respond(&mut self, game: &Game, _: &[u32]) -> Color {
        let mut best = (Color::Blue, (0, 0));
        for c in [Color::Blue, Color::Red] {
            let mut g = game.clone();
            let v = match g.answer(c) {
                Ok(_) => Self::value(&g, self.depth.saturating_sub(1)),
                Err(_) => (usize::MAX, usize::MAX),
            };
            if v > best.1 {
                best = (c, v);
            }
        }
        best.0
    }
}
