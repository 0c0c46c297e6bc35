//! The vertex on-line ordered Ramsey game on `(k-1)`-uniform edges.
//!
//! Builder exposes `k - 2` seed vertices, which form the initial set `T`.
//! Each later stage exposes a vertex `v` and draws `S + v` for the
//! `(k-2)`-subsets `S` of `T` in colex order. The first red answer ends the
//! stage; a stage answered all blue adds `v` to `T`. Every vertex carries the
//! string of answers it received. Two red answers at the same label position
//! give a red ordered `F`; once `T` holds `n` vertices it spans a blue
//! clique.

mod explore;
mod painter;
mod transcript;

use std::collections::BTreeMap;

pub use explore::{explore_game_tree, TreeSummary};
pub use painter::{ConstantPainter, MinimaxPainter, Painter, RandomPainter, ScriptedPainter};
pub use transcript::{replay, GameEvent, Transcript};

use crate::error::{Error, Result};
use crate::hypergraph::{
    binomial, find_blue_clique, subsets_of, Color, ConfigurationKind, ConfigurationWitness,
    FnColoring,
};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GameStats {
    /// Vertices exposed.
    pub vertices: usize,
    /// Red edges drawn.
    pub red: usize,
    /// Edges drawn.
    pub edges: usize,
}

/// The proven resource limits for builder's strategy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResourceBounds {
    pub vertices: usize,
    pub red: usize,
    /// Per exposed vertex; the edge bound is `vertices_used * edges_per_vertex`.
    pub edges_per_vertex: usize,
}

impl ResourceBounds {
    pub fn for_game(k: usize, n: usize) -> Self {
        let slots = binomial(n as u64, k as u64 - 2) as usize + 1;
        ResourceBounds {
            vertices: 2 * slots + (k - 2),
            red: slots,
            edges_per_vertex: slots,
        }
    }

    pub fn admits(&self, stats: &GameStats) -> bool {
        stats.vertices <= self.vertices
            && stats.red <= self.red
            && stats.edges <= stats.vertices * self.edges_per_vertex
    }
}

/// Budget used when the caller does not give one: twice the proven vertex
/// bound, plus slack.
pub fn default_budget(k: usize, n: usize) -> usize {
    4 * (binomial(n as u64, k as u64 - 2) as usize + 1) + k
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OutcomeKind {
    RedF,
    BlueClique,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameOutcome {
    pub kind: OutcomeKind,
    pub witness: ConfigurationWitness<u32>,
    pub stats: GameStats,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameState {
    k: usize,
    n: usize,
    /// Labels indexed by vertex - 1. Seeds have empty labels.
    labels: Vec<Vec<Color>>,
    /// Membership of `T`, indexed by vertex - 1.
    in_t: Vec<bool>,
    t: Vec<u32>,
    drawn: BTreeMap<Vec<u32>, Color>,
    stats: GameStats,
    /// Vertex whose stage is in progress.
    open: Option<u32>,
}

impl GameState {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn stats(&self) -> GameStats {
        self.stats
    }

    /// Exposed vertices, in order.
    pub fn exposed(&self) -> Vec<u32> {
        (1..=self.labels.len() as u32).collect()
    }

    pub fn t(&self) -> &[u32] {
        &self.t
    }

    pub fn drawn(&self) -> &BTreeMap<Vec<u32>, Color> {
        &self.drawn
    }

    pub fn label(&self, v: u32) -> Option<&[Color]> {
        self.labels.get((v as usize).checked_sub(1)?).map(Vec::as_slice)
    }

    fn seeds(&self) -> usize {
        self.k - 2
    }

    /// Vertex whose stage is currently open, if any.
    pub fn open_vertex(&self) -> Option<u32> {
        self.open
    }

    /// Checks the invariants that hold between stages: the label/T
    /// correspondence, distinct red positions and labels, the label length
    /// cap, blue edges inside `T`, stable label positions, and the counters.
    /// The vertex of an open stage is skipped.
    pub fn check_observations(&self) -> Result<(), String> {
        let cap = binomial(self.n as u64, self.k as u64 - 2) as usize;
        let mut red_at: BTreeMap<usize, u32> = BTreeMap::new();
        let mut seen: BTreeMap<&[Color], u32> = BTreeMap::new();
        for (i, label) in self.labels.iter().enumerate() {
            let v = i as u32 + 1;
            if self.open == Some(v) {
                continue;
            }
            let reds: Vec<usize> = label
                .iter()
                .enumerate()
                .filter(|(_, c)| c.is_red())
                .map(|(p, _)| p)
                .collect();
            if reds.is_empty() != self.in_t[i] {
                return Err(format!("vertex {v}: label without R must mean membership in T"));
            }
            if i < self.seeds() {
                if !label.is_empty() {
                    return Err(format!("seed {v} has a non-empty label"));
                }
                continue;
            }
            if !self.in_t[i] && reds != [label.len() - 1] {
                return Err(format!("vertex {v}: label outside T must be B..BR"));
            }
            if let Some(&p) = reds.first() {
                if let Some(u) = red_at.insert(p, v) {
                    return Err(format!("vertices {u} and {v} both have R at position {p}"));
                }
            }
            if let Some(u) = seen.insert(label, v) {
                return Err(format!("vertices {u} and {v} share a label"));
            }
            let blues = label.iter().filter(|c| !c.is_red()).count();
            if blues > cap {
                return Err(format!("vertex {v} has {blues} B's, more than {cap}"));
            }
            // Position p of v's label is the edge S_p + v, S_p the p-th
            // (k-2)-subset of T in colex order.
            let earlier: Vec<u32> = self.t.iter().copied().filter(|&u| u < v).collect();
            for (p, s) in subsets_of(&earlier, self.k - 2).take(label.len()).enumerate() {
                let mut e = s;
                e.push(v);
                if self.drawn.get(&e) != Some(&label[p]) {
                    return Err(format!("label position {p} of vertex {v} does not match edge {e:?}"));
                }
            }
        }
        for e in subsets_of(&self.t, self.k - 1) {
            if self.drawn.get(&e) != Some(&Color::Blue) {
                return Err(format!("edge {e:?} inside T is not drawn blue"));
            }
        }
        let red = self.drawn.values().filter(|c| c.is_red()).count();
        if self.stats.edges != self.drawn.len() || self.stats.red != red {
            return Err("edge counters out of sync with drawn edges".into());
        }
        if self.stats.vertices != self.labels.len() {
            return Err("vertex counter out of sync".into());
        }
        Ok(())
    }
}

/// `(vertex, label)` rows, labels rendered as strings of `R`/`B`.
pub fn label_table(state: &GameState) -> Vec<(u32, String)> {
    state
        .labels
        .iter()
        .enumerate()
        .map(|(i, l)| (i as u32 + 1, l.iter().map(|c| c.letter()).collect()))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Phase {
    Stage {
        vertex: u32,
        subsets: Vec<Vec<u32>>,
        pos: usize,
    },
    Over(GameOutcome),
}

/// What happened after an answer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Step {
    /// The stage continues with another edge.
    Continue,
    /// The stage ended and a new vertex was exposed.
    StageEnded,
    Over(GameOutcome),
}

/// A game in progress, driven one painter answer at a time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Game {
    state: GameState,
    phase: Phase,
    budget: usize,
    events: Vec<GameEvent>,
}

impl Game {
    pub fn new(k: usize, n: usize, budget: Option<usize>) -> Result<Self> {
        if k < 3 {
            return Err(Error::domain(format!("the game needs k >= 3, got {k}")));
        }
        if n == 0 {
            return Err(Error::domain("the clique target n must be positive"));
        }
        let budget = budget.unwrap_or_else(|| default_budget(k, n));
        let needed = ResourceBounds::for_game(k, n).vertices;
        if budget < needed {
            return Err(Error::domain(format!("budget {budget} below the proven need {needed}")));
        }
        let mut game = Game {
            state: GameState {
                k,
                n,
                labels: Vec::new(),
                in_t: Vec::new(),
                t: Vec::new(),
                drawn: BTreeMap::new(),
                stats: GameStats::default(),
                open: None,
            },
            phase: Phase::Over(GameOutcome {
                kind: OutcomeKind::BlueClique,
                witness: ConfigurationWitness {
                    kind: ConfigurationKind::BlueClique,
                    vertices: Vec::new(),
                    red_edges: Vec::new(),
                },
                stats: GameStats::default(),
            }),
            budget,
            events: Vec::new(),
        };
        for _ in 0..k - 2 {
            let v = game.expose();
            game.state.in_t[v as usize - 1] = true;
            game.state.t.push(v);
        }
        if n + 2 <= k {
            // Fewer than k - 1 vertices span no edges: the seeds already
            // hold a blue clique.
            let witness = ConfigurationWitness {
                kind: ConfigurationKind::BlueClique,
                vertices: game.state.t[..n].to_vec(),
                red_edges: Vec::new(),
            };
            game.finish(OutcomeKind::BlueClique, witness);
        } else {
            game.start_stage()?;
        }
        Ok(game)
    }

    pub fn state(&self) -> &GameState {
        &self.state
    }

    pub fn events(&self) -> &[GameEvent] {
        &self.events
    }

    pub fn outcome(&self) -> Option<&GameOutcome> {
        match &self.phase {
            Phase::Over(o) => Some(o),
            Phase::Stage { .. } => None,
        }
    }

    /// The edge builder is waiting on, if the game is still running.
    pub fn pending(&self) -> Option<Vec<u32>> {
        match &self.phase {
            Phase::Stage {
                vertex,
                subsets,
                pos,
            } => {
                let mut e = subsets[*pos].clone();
                e.push(*vertex);
                Some(e)
            }
            Phase::Over(_) => None,
        }
    }

    fn expose(&mut self) -> u32 {
        self.state.labels.push(Vec::new());
        self.state.in_t.push(false);
        self.state.stats.vertices += 1;
        let v = self.state.labels.len() as u32;
        self.events.push(GameEvent::Expose(v));
        v
    }

    fn start_stage(&mut self) -> Result<()> {
        if self.state.stats.vertices >= self.budget {
            return Err(Error::Contract(format!(
                "vertex budget {} exhausted without an outcome",
                self.budget
            )));
        }
        let vertex = self.expose();
        self.state.open = Some(vertex);
        let subsets: Vec<Vec<u32>> = subsets_of(&self.state.t, self.state.k - 2).collect();
        self.phase = Phase::Stage {
            vertex,
            subsets,
            pos: 0,
        };
        Ok(())
    }

    fn finish(&mut self, kind: OutcomeKind, witness: ConfigurationWitness<u32>) -> Step {
        self.state.open = None;
        let outcome = GameOutcome {
            kind,
            witness,
            stats: self.state.stats,
        };
        self.events.push(GameEvent::Win(kind, outcome.witness.vertices.clone()));
        self.phase = Phase::Over(outcome.clone());
        Step::Over(outcome)
    }

    /// Applies painter's color to the pending edge.
    pub fn answer(&mut self, color: Color) -> Result<Step> {
        let Phase::Stage {
            vertex,
            subsets,
            pos,
        } = &mut self.phase
        else {
            return Err(Error::Usage("the game is already over".into()));
        };
        let (v, p) = (*vertex, *pos);
        let mut edge = subsets[p].clone();
        edge.push(v);
        let st = &mut self.state;
        st.drawn.insert(edge.clone(), color);
        st.stats.edges += 1;
        st.labels[v as usize - 1].push(color);
        self.events.push(GameEvent::Draw(edge, color));

        if color.is_red() {
            st.stats.red += 1;
            let earlier = st.labels[..v as usize - 1]
                .iter()
                .position(|l| l.get(p) == Some(&Color::Red));
            if let Some(x) = earlier {
                let x = x as u32 + 1;
                let base = subsets[p].clone();
                let mut first = base.clone();
                first.push(x);
                let mut second = base.clone();
                second.push(v);
                let mut vertices = base;
                vertices.extend([x, v]);
                let witness = ConfigurationWitness {
                    kind: ConfigurationKind::RedF,
                    vertices,
                    red_edges: vec![first, second],
                };
                return Ok(self.finish(OutcomeKind::RedF, witness));
            }
            self.start_stage()?;
            return Ok(Step::StageEnded);
        }

        *pos += 1;
        if *pos < subsets.len() {
            return Ok(Step::Continue);
        }
        st.in_t[v as usize - 1] = true;
        st.t.push(v);
        self.events.push(GameEvent::JoinT(v));
        if st.t.len() >= st.n {
            let drawn = &st.drawn;
            let oracle = FnColoring::new(st.k - 1, |e: &[u32]| {
                if drawn.get(e) == Some(&Color::Blue) {
                    Color::Blue
                } else {
                    Color::Red
                }
            });
            let witness = find_blue_clique(&oracle, st.n, &st.t)?.ok_or_else(|| {
                Error::Contract(format!("T has {} vertices but no blue clique", st.t.len()))
            })?;
            return Ok(self.finish(OutcomeKind::BlueClique, witness));
        }
        self.start_stage()?;
        Ok(Step::StageEnded)
    }

    /// Re-checks an outcome's witness against the drawn edges.
    pub fn witness_holds(&self, outcome: &GameOutcome) -> bool {
        let drawn = &self.state.drawn;
        outcome
            .witness
            .check(self.state.k - 1, 0, |e| drawn.get(e).copied())
    }
}

/// A finished game and its event log.
#[derive(Debug, Clone)]
pub struct GameRecord {
    pub outcome: GameOutcome,
    pub transcript: Transcript,
    pub final_state: GameState,
}

/// Plays builder's strategy against `painter` until an outcome. The
/// observations are re-checked after every stage; a failure there, an
/// invalid witness, or running out of budget is a contract violation.
pub fn run_game(
    k: usize,
    n: usize,
    painter: &mut dyn Painter,
    budget: Option<usize>,
) -> Result<GameRecord> {
    let mut game = Game::new(k, n, budget)?;
    if let Some(outcome) = game.outcome().cloned() {
        return Ok(GameRecord {
            outcome,
            transcript: Transcript::new(k, n, game.events.clone()),
            final_state: game.state,
        });
    }
    loop {
        let edge = game.pending().expect("running game has a pending edge");
        let color = painter.respond(&game, &edge);
        match game.answer(color)? {
            Step::Continue => {}
            Step::StageEnded => game
                .state
                .check_observations()
                .map_err(Error::Contract)?,
            Step::Over(outcome) => {
                if !game.witness_holds(&outcome) {
                    return Err(Error::Contract(format!(
                        "outcome witness {:?} does not hold",
                        outcome.witness
                    )));
                }
                return Ok(GameRecord {
                    outcome,
                    transcript: Transcript::new(k, n, game.events.clone()),
                    final_state: game.state,
                });
            }
        }
    }
}
