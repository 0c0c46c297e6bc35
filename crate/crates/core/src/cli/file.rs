//! The coloring file format.
//!
//! ```text
//! hyperramsey-coloring v1
//! mode rank
//! k 3
//! N 6
//! seed 1
//! ---
//! 1 2 3
//! ...
//! ```
//!
//! Header lines are `key value`; `seed` is optional and `#` starts a
//! comment line. The body depends on the mode:
//!
//! * `explicit`: one line `v1 .. vk R|B` per `k`-subset of `[N]`.
//! * `rank`: one line `s1 .. s_{k-1} c` per `(k-1)`-subset, `c` in `1..=k`.
//! * `stepup`, `stepup-strong`: one line `s1 .. s_{k-1} R|B` per
//!   `(k-1)`-subset; the `k`-edges live on `{0,1}^N` and are recomputed.
//!
//! Every set must appear exactly once. Files are written in colex order.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::coloring::{BaseTwoColoring, KaryBaseColoring};
use crate::error::{Error, Result};
use crate::hypergraph::{binomial, colex_rank, enumerate_k_subsets, Color, ColoringOracle, TableColoring};

pub const MAGIC: &str = "hyperramsey-coloring";
pub const VERSION: &str = "v1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FileMode {
    Explicit,
    Rank,
    StepUp,
    StepUpStrong,
}

impl FileMode {
    pub fn name(self) -> &'static str {
        match self {
            FileMode::Explicit => "explicit",
            FileMode::Rank => "rank",
            FileMode::StepUp => "stepup",
            FileMode::StepUpStrong => "stepup-strong",
        }
    }

    /// Size of the sets listed in the body.
    fn body_set_size(self, k: usize) -> usize {
        match self {
            FileMode::Explicit => k,
            _ => k - 1,
        }
    }
}

impl fmt::Display for FileMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FileMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s {
            "explicit" => FileMode::Explicit,
            "rank" => FileMode::Rank,
            "stepup" => FileMode::StepUp,
            "stepup-strong" => FileMode::StepUpStrong,
            other => {
                return Err(format!(
                    "unknown mode {other:?} (expected explicit, rank, stepup or stepup-strong)"
                ))
            }
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Body {
    Explicit(TableColoring),
    Rank(KaryBaseColoring),
    /// Base coloring of a stepping-up file, either rule.
    StepUp(BaseTwoColoring),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringFile {
    pub mode: FileMode,
    pub k: usize,
    pub n_vertices: usize,
    pub seed: Option<u64>,
    pub body: Body,
}

impl ColoringFile {
    pub fn explicit(table: TableColoring, k: usize, seed: Option<u64>) -> Self {
        ColoringFile {
            mode: FileMode::Explicit,
            k,
            n_vertices: table.vertex_count(),
            seed,
            body: Body::Explicit(table),
        }
    }

    pub fn rank(phi: KaryBaseColoring, seed: Option<u64>) -> Self {
        ColoringFile {
            mode: FileMode::Rank,
            k: phi.k(),
            n_vertices: phi.vertex_count(),
            seed,
            body: Body::Rank(phi),
        }
    }

    pub fn stepup(phi: BaseTwoColoring, strong: bool, seed: Option<u64>) -> Self {
        ColoringFile {
            mode: if strong { FileMode::StepUpStrong } else { FileMode::StepUp },
            k: phi.uniformity() + 1,
            n_vertices: phi.vertex_count(),
            seed,
            body: Body::StepUp(phi),
        }
    }

    pub fn render(&self) -> String {
        let mut out = format!(
            "{MAGIC} {VERSION}\nmode {}\nk {}\nN {}\n",
            self.mode, self.k, self.n_vertices
        );
        if let Some(s) = self.seed {
            let _ = writeln!(out, "seed {s}");
        }
        out.push_str("---\n");
        let size = self.mode.body_set_size(self.k);
        let sets = enumerate_k_subsets(self.n_vertices, size);
        let mut line = |set: &[u32], value: &dyn fmt::Display| {
            for v in set {
                let _ = write!(out, "{v} ");
            }
            let _ = writeln!(out, "{value}");
        };
        match &self.body {
            Body::Explicit(t) => sets.zip(t.colors()).for_each(|(s, c)| line(&s, c)),
            Body::Rank(phi) => sets.zip(phi.values()).for_each(|(s, v)| line(&s, v)),
            Body::StepUp(phi) => sets
                .zip(phi.table().colors())
                .for_each(|(s, c)| line(&s, c)),
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (ln, first) = lines.next().ok_or_else(|| Error::parse(1, "empty file"))?;
        let expected = format!("{MAGIC} {VERSION}");
        if first != expected {
            return Err(Error::parse(ln, format!("expected header {expected:?}, got {first:?}")));
        }

        let (mut mode, mut k, mut nv, mut seed) = (None, None, None, None);
        let mut separator = None;
        for (ln, l) in lines.by_ref() {
            if l == "---" {
                separator = Some(ln);
                break;
            }
            let (key, value) = l
                .split_once(char::is_whitespace)
                .map(|(a, b)| (a, b.trim()))
                .ok_or_else(|| Error::parse(ln, format!("expected `key value`, got {l:?}")))?;
            let num = |v: &str| {
                v.parse::<u64>()
                    .map_err(|_| Error::parse(ln, format!("{key}: {v:?} is not a number")))
            };
            let slot_taken = |taken: bool| {
                if taken {
                    Err(Error::parse(ln, format!("duplicate header key {key}")))
                } else {
                    Ok(())
                }
            };
            match key {
                "mode" => {
                    slot_taken(mode.is_some())?;
                    mode = Some(value.parse::<FileMode>().map_err(|m| Error::parse(ln, m))?);
                }
                "k" => {
                    slot_taken(k.is_some())?;
                    k = Some(num(value)? as usize);
                }
                "N" => {
                    slot_taken(nv.is_some())?;
                    nv = Some(num(value)? as usize);
                }
                "seed" => {
                    slot_taken(seed.is_some())?;
                    seed = Some(num(value)?);
                }
                other => return Err(Error::parse(ln, format!("unknown header key {other:?}"))),
            }
        }
        let sep = separator.ok_or_else(|| Error::parse(text.lines().count().max(1), "missing `---` separator"))?;
        let missing = |what: &str| Error::parse(sep, format!("header lacks `{what}`"));
        let mode = mode.ok_or_else(|| missing("mode"))?;
        let k = k.ok_or_else(|| missing("k"))?;
        let nv = nv.ok_or_else(|| missing("N"))?;
        let min_k = if mode == FileMode::Explicit { 1 } else { 3 };
        if k < min_k {
            return Err(Error::parse(sep, format!("k = {k} too small for mode {mode}")));
        }
        if mode == FileMode::Rank && k > 32 {
            return Err(Error::parse(sep, format!("k = {k} too large for mode rank")));
        }
        let size = mode.body_set_size(k);
        if nv < size {
            return Err(Error::parse(sep, format!("N = {nv} smaller than the set size {size}")));
        }
        let total = binomial(nv as u64, size as u64);
        if total > 1 << 26 {
            return Err(Error::parse(sep, format!("{total} body lines is beyond what the format supports")));
        }

        let mut values: Vec<Option<u8>> = vec![None; total as usize];
        let mut idx = Vec::with_capacity(size);
        for (ln, l) in lines {
            let toks: Vec<&str> = l.split_whitespace().collect();
            if toks.len() != size + 1 {
                return Err(Error::parse(
                    ln,
                    format!("expected {size} vertices and a value, got {} fields", toks.len()),
                ));
            }
            idx.clear();
            for t in &toks[..size] {
                let v: usize = t
                    .parse()
                    .map_err(|_| Error::parse(ln, format!("bad vertex {t:?}")))?;
                if v == 0 || v > nv {
                    return Err(Error::parse(ln, format!("vertex {v} outside 1..={nv}")));
                }
                idx.push(v - 1);
            }
            if idx.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::parse(ln, "vertices must be strictly increasing"));
            }
            let raw = toks[size];
            let value = match mode {
                FileMode::Rank => match raw.parse::<u8>() {
                    Ok(c) if (1..=k).contains(&(c as usize)) => c,
                    _ => return Err(Error::parse(ln, format!("value {raw:?} outside 1..={k}"))),
                },
                _ => match Color::from_letter(raw) {
                    Some(Color::Red) => 1,
                    Some(Color::Blue) => 0,
                    None => return Err(Error::parse(ln, format!("color {raw:?} is not R or B"))),
                },
            };
            let slot = &mut values[colex_rank(&idx) as usize];
            if slot.is_some() {
                return Err(Error::parse(ln, "set listed twice"));
            }
            *slot = Some(value);
        }
        if let Some(missing) = values.iter().position(Option::is_none) {
            let set = enumerate_k_subsets(nv, size).nth(missing).unwrap();
            return Err(Error::parse(
                text.lines().count(),
                format!("{} of {total} sets missing, first {set:?}", values.iter().filter(|v| v.is_none()).count()),
            ));
        }
        let values: Vec<u8> = values.into_iter().map(Option::unwrap).collect();
        let to_color = |v: &u8| if *v == 1 { Color::Red } else { Color::Blue };
        let body = match mode {
            FileMode::Explicit => Body::Explicit(TableColoring::from_colors(nv, k, values.iter().map(to_color).collect())?),
            FileMode::Rank => Body::Rank(KaryBaseColoring::from_values(nv, k, values)?),
            FileMode::StepUp | FileMode::StepUpStrong => Body::StepUp(BaseTwoColoring::from_table(
                TableColoring::from_colors(nv, k - 1, values.iter().map(to_color).collect())?,
            )),
        };
        Ok(ColoringFile {
            mode,
            k,
            n_vertices: nv,
            seed,
            body,
        })
    }
}
