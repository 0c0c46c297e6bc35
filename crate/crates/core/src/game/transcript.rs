//! Line-oriented game transcripts.
//!
//! ```text
//! GAME 3 2
//! EXPOSE 1
//! EXPOSE 2
//! DRAW 1 2 -> B
//! T+ 2
//! WIN Blue 1 2
//! ```
//!
//! Replaying the `DRAW` answers through builder's strategy must reproduce the
//! transcript exactly.

use std::fmt;

use super::{run_game, GameRecord, OutcomeKind, ScriptedPainter};
use crate::error::{Error, Result};
use crate::hypergraph::Color;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GameEvent {
    Expose(u32),
    Draw(Vec<u32>, Color),
    JoinT(u32),
    Win(OutcomeKind, Vec<u32>),
}

fn join(vs: &[u32]) -> String {
    vs.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

impl fmt::Display for GameEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GameEvent::Expose(v) => write!(f, "EXPOSE {v}"),
            GameEvent::Draw(e, c) => write!(f, "DRAW {} -> {c}", join(e)),
            GameEvent::JoinT(v) => write!(f, "T+ {v}"),
            GameEvent::Win(OutcomeKind::RedF, vs) => write!(f, "WIN RedF {}", join(vs)),
            GameEvent::Win(OutcomeKind::BlueClique, vs) => write!(f, "WIN Blue {}", join(vs)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transcript {
    pub k: usize,
    pub n: usize,
    pub events: Vec<GameEvent>,
}

impl Transcript {
    pub fn new(k: usize, n: usize, events: Vec<GameEvent>) -> Self {
        Transcript { k, n, events }
    }

    /// Painter's answers in order.
    pub fn answers(&self) -> Vec<Color> {
        self.events
            .iter()
            .filter_map(|e| match e {
                GameEvent::Draw(_, c) => Some(*c),
                _ => None,
            })
            .collect()
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, head) = lines.next().ok_or_else(|| Error::parse(1, "empty transcript"))?;
        let head: Vec<&str> = head.split_whitespace().collect();
        let (k, n) = match head.as_slice() {
            ["GAME", k, n] => (
                k.parse().map_err(|_| Error::parse(1, "bad k"))?,
                n.parse().map_err(|_| Error::parse(1, "bad n"))?,
            ),
            _ => return Err(Error::parse(1, "expected `GAME k n`")),
        };
        let mut events = Vec::new();
        for (i, line) in lines {
            let lineno = i + 1;
            let nums = |toks: &[&str]| -> Result<Vec<u32>> {
                toks.iter()
                    .map(|t| t.parse().map_err(|_| Error::parse(lineno, format!("bad vertex {t:?}"))))
                    .collect()
            };
            let toks: Vec<&str> = line.split_whitespace().collect();
            let ev = match toks.as_slice() {
                ["EXPOSE", v] => GameEvent::Expose(nums(&[v])?[0]),
                ["T+", v] => GameEvent::JoinT(nums(&[v])?[0]),
                ["DRAW", rest @ .., "->", c] => {
                    let c = Color::from_letter(c)
                        .ok_or_else(|| Error::parse(lineno, format!("bad color {c:?}")))?;
                    GameEvent::Draw(nums(rest)?, c)
                }
                ["WIN", "RedF", rest @ ..] => GameEvent::Win(OutcomeKind::RedF, nums(rest)?),
                ["WIN", "Blue", rest @ ..] => GameEvent::Win(OutcomeKind::BlueClique, nums(rest)?),
                _ => return Err(Error::parse(lineno, format!("unrecognised event {line:?}"))),
            };
            events.push(ev);
        }
        Ok(Transcript { k, n, events })
    }
}

impl fmt::Display for Transcript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "GAME {} {}", self.k, self.n)?;
        for e in &self.events {
            writeln!(f, "{e}")?;
        }
        Ok(())
    }
}

/// Re-runs builder's strategy on the transcript's answers and checks that
/// the same transcript comes out.
pub fn replay(transcript: &Transcript) -> Result<GameRecord> {
    let mut painter = ScriptedPainter::new(transcript.answers());
    let rec = run_game(transcript.k, transcript.n, &mut painter, None)?;
    if painter.exhausted() || rec.transcript != *transcript {
        return Err(Error::domain("transcript does not replay to the same game"));
    }
    Ok(rec)
}

#[cfg(test)]
mod tests {
    use super::super::{ConstantPainter, RandomPainter};
    use super::*;

    #[test]
    fn blue_k3_n2_text() {
        let rec = run_game(3, 2, &mut ConstantPainter(Color::Blue), None).unwrap();
        assert_eq!(
            rec.transcript.to_string(),
            "GAME 3 2\nEXPOSE 1\nEXPOSE 2\nDRAW 1 2 -> B\nT+ 2\nWIN Blue 1 2\n"
        );
    }

    #[test]
    fn red_k3_n2_text() {
        let rec = run_game(3, 2, &mut ConstantPainter(Color::Red), None).unwrap();
        assert_eq!(
            rec.transcript.to_string(),
            "GAME 3 2\nEXPOSE 1\nEXPOSE 2\nDRAW 1 2 -> R\nEXPOSE 3\nDRAW 1 3 -> R\nWIN RedF 1 2 3\n"
        );
    }

    #[test]
    fn parse_and_replay() {
        for seed in 0..20 {
            let rec = run_game(4, 4, &mut RandomPainter::new(seed), None).unwrap();
            let text = rec.transcript.to_string();
            let parsed = Transcript::parse(&text).unwrap();
            assert_eq!(parsed, rec.transcript);
            let again = replay(&parsed).unwrap();
            assert_eq!(again.outcome, rec.outcome);
        }
    }

    #[test]
    fn tampered_transcript_is_rejected() {
        let rec = run_game(3, 4, &mut RandomPainter::new(3), None).unwrap();
        let text = rec.transcript.to_string().replacen("-> B", "-> R", 1);
        let parsed = Transcript::parse(&text).unwrap();
        assert!(replay(&parsed).is_err());
        assert!(Transcript::parse("GAME 3\n").is_err());
        assert!(matches!(
            Transcript::parse("GAME 3 2\nDRAW 1 2 -> X\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }
}
