//! Exact values of `r_k(k+1, t; n)` for tiny parameters.
//!
//! A coloring of the `k`-subsets of `[N]` is *good* when it has no blue
//! `n`-clique and no `(k+1)`-set with `t` or more red edges. The search
//! assigns edge colors in colex order and propagates both constraint kinds:
//! a `(k+1)`-set holding `t - 1` red edges forces its other edges blue, and
//! an `n`-set with a single open edge and no red forces that edge red.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::hypergraph::{
    binomial, colex_rank, find_blue_clique, find_red_configuration, Color, ColexSubsets,
    TableColoring,
};

/// Largest `C(N, k)` the search will take on by default.
pub const EDGE_GUARD: u64 = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RamseyQuery {
    pub k: usize,
    pub t: usize,
    pub n: usize,
    /// Largest `N` to try.
    pub n_max: usize,
}

impl RamseyQuery {
    fn validate(&self) -> Result<()> {
        if self.k < 2 {
            return Err(Error::domain(format!("k = {} must be at least 2", self.k)));
        }
        if !(2..=self.k + 1).contains(&self.t) {
            return Err(Error::domain(format!("t = {} outside 2..={}", self.t, self.k + 1)));
        }
        if self.n < self.k {
            return Err(Error::domain(format!("n = {} below k = {}", self.n, self.k)));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RamseyValue {
    Exact(usize),
    /// Every `N` up to the bound had a good coloring.
    Exceeded(usize),
}

impl fmt::Display for RamseyValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RamseyValue::Exact(v) => write!(f, "{v}"),
            RamseyValue::Exceeded(m) => write!(f, ">{m}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ExactResult {
    pub value: RamseyValue,
    /// A good coloring on the largest `N` that has one (`V - 1` when the
    /// value is exact).
    pub good_coloring: Option<TableColoring>,
    /// Search nodes over all `N` tried.
    pub nodes: u64,
}

/// Knobs for the search; the answer must not depend on them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub propagate: bool,
    /// Fix the first edge red when `N >= n` (some edge must be red, and a
    /// vertex permutation moves it to `{1..k}`).
    pub symmetry: bool,
    pub edge_guard: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            propagate: true,
            symmetry: true,
            edge_guard: EDGE_GUARD,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Rule {
    AtMostRed(usize),
    SomeRed,
}

#[derive(Debug, Clone)]
struct Constraint {
    rule: Rule,
    edges: Vec<usize>,
    red: usize,
    blue: usize,
}

impl Constraint {
    fn violated(&self) -> bool {
        match self.rule {
            Rule::AtMostRed(limit) => self.red > limit,
            Rule::SomeRed => self.blue == self.edges.len(),
        }
    }
}

struct Solver {
    cons: Vec<Constraint>,
    edge_cons: Vec<Vec<usize>>,
    assign: Vec<Option<Color>>,
    trail: Vec<usize>,
    propagate: bool,
    nodes: u64,
}

impl Solver {
    fn new(n_vertices: usize, k: usize, t: usize, n: usize) -> Self {
        let edge_count = binomial(n_vertices as u64, k as u64) as usize;
        let mut cons = Vec::new();
        let mut sub = Vec::with_capacity(k);
        let mut edges_of = |set: &[usize], size: usize| -> Vec<usize> {
            ColexSubsets::new(set.len(), size)
                .map(|ix| {
                    sub.clear();
                    sub.extend(ix.iter().map(|&i| set[i]));
                    colex_rank(&sub) as usize
                })
                .collect()
        };
        for set in ColexSubsets::new(n_vertices, k + 1) {
            cons.push(Constraint {
                rule: Rule::AtMostRed(t - 1),
                edges: edges_of(&set, k),
                red: 0,
                blue: 0,
            });
        }
        for set in ColexSubsets::new(n_vertices, n) {
            cons.push(Constraint {
                rule: Rule::SomeRed,
                edges: edges_of(&set, k),
                red: 0,
                blue: 0,
            });
        }
        let mut edge_cons = vec![Vec::new(); edge_count];
        for (ci, c) in cons.iter().enumerate() {
            for &e in &c.edges {
                edge_cons[e].push(ci);
            }
        }
        Solver {
            cons,
            edge_cons,
            assign: vec![None; edge_count],
            trail: Vec::new(),
            propagate: true,
            nodes: 0,
        }
    }

    fn set(&mut self, e: usize, c: Color) -> bool {
        self.assign[e] = Some(c);
        self.trail.push(e);
        let mut ok = true;
        for &ci in &self.edge_cons[e] {
            let con = &mut self.cons[ci];
            match c {
                Color::Red => con.red += 1,
                Color::Blue => con.blue += 1,
            }
            ok &= !con.violated();
        }
        ok
    }

    fn undo_to(&mut self, len: usize) {
        while self.trail.len() > len {
            let e = self.trail.pop().unwrap();
            let c = self.assign[e].take().unwrap();
            for &ci in &self.edge_cons[e] {
                match c {
                    Color::Red => self.cons[ci].red -= 1,
                    Color::Blue => self.cons[ci].blue -= 1,
                }
            }
        }
    }

    /// Assigns `e` and everything it forces. False on conflict.
    fn assign_and_propagate(&mut self, e: usize, c: Color) -> bool {
        let mut queue = vec![(e, c)];
        while let Some((e, c)) = queue.pop() {
            match self.assign[e] {
                Some(prev) if prev == c => continue,
                Some(_) => return false,
                None => {}
            }
            if !self.set(e, c) {
                return false;
            }
            if !self.propagate {
                continue;
            }
            for &ci in &self.edge_cons[e] {
                let con = &self.cons[ci];
                let open = con.edges.len() - con.red - con.blue;
                if open == 0 {
                    continue;
                }
                let forced = match con.rule {
                    Rule::AtMostRed(limit) if con.red == limit => Some(Color::Blue),
                    Rule::SomeRed if con.red == 0 && open == 1 => Some(Color::Red),
                    _ => None,
                };
                if let Some(f) = forced {
                    queue.extend(
                        con.edges
                            .iter()
                            .filter(|&&x| self.assign[x].is_none())
                            .map(|&x| (x, f)),
                    );
                }
            }
        }
        true
    }

    fn solve(&mut self) -> bool {
        self.nodes += 1;
        let Some(e) = self.assign.iter().position(Option::is_none) else {
            return true;
        };
        for c in [Color::Blue, Color::Red] {
            let mark = self.trail.len();
            if self.assign_and_propagate(e, c) && self.solve() {
                return true;
            }
            self.undo_to(mark);
        }
        false
    }
}

/// A good coloring of the `k`-subsets of `[n_vertices]`, if one exists.
pub fn find_good_coloring(
    n_vertices: usize,
    k: usize,
    t: usize,
    n: usize,
    opts: SearchOptions,
) -> Result<(Option<TableColoring>, u64)> {
    let edges = binomial(n_vertices as u64, k as u64);
    if edges > opts.edge_guard {
        return Err(Error::Capacity(format!(
            "C({n_vertices},{k}) = {edges} edges exceeds the search guard {}",
            opts.edge_guard
        )));
    }
    let mut solver = Solver::new(n_vertices, k, t, n);
    solver.propagate = opts.propagate;
    if solver.cons.iter().any(Constraint::violated) {
        return Ok((None, 0));
    }
    if opts.symmetry && n_vertices >= n && edges > 0 && !solver.assign_and_propagate(0, Color::Red) {
        return Ok((None, 1));
    }
    let found = solver.solve();
    let nodes = solver.nodes;
    if !found {
        return Ok((None, nodes));
    }
    let colors = solver.assign.into_iter().map(Option::unwrap).collect();
    Ok((Some(TableColoring::from_colors(n_vertices, k, colors)?), nodes))
}

/// Whether a coloring is good, checked through the configuration finders.
pub fn is_good(coloring: &TableColoring, t: usize, n: usize) -> Result<bool> {
    let vs = coloring.vertices();
    Ok(find_red_configuration(coloring, t, &vs)?.is_none()
        && find_blue_clique(coloring, n, &vs)?.is_none())
}

/// Least `N <= n_max` with no good coloring.
pub fn exact_ramsey(q: RamseyQuery) -> Result<ExactResult> {
    exact_ramsey_with(q, SearchOptions::default())
}

pub fn exact_ramsey_with(q: RamseyQuery, opts: SearchOptions) -> Result<ExactResult> {
    q.validate()?;
    let mut good = None;
    let mut nodes = 0;
    // Below k there are no edges and the empty coloring is good.
    for nv in q.k..=q.n_max {
        let (found, used) = find_good_coloring(nv, q.k, q.t, q.n, opts)?;
        nodes += used;
        match found {
            Some(c) => good = Some(c),
            None => {
                return Ok(ExactResult {
                    value: RamseyValue::Exact(nv),
                    good_coloring: good,
                    nodes,
                })
            }
        }
    }
    Ok(ExactResult {
        value: RamseyValue::Exceeded(q.n_max),
        good_coloring: good,
        nodes,
    })
}

/// Largest `N` whose edge count fits under `guard`.
pub fn max_searchable(k: usize, guard: u64) -> usize {
    let mut nv = k;
    while binomial(nv as u64 + 1, k as u64) <= guard {
        nv += 1;
    }
    nv
}

/// One line of the fixture table: `k t n value searched_up_to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FixtureRow {
    pub k: usize,
    pub t: usize,
    pub n: usize,
    pub value: RamseyValue,
    pub searched_up_to: usize,
}

impl fmt::Display for FixtureRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} {} {}", self.k, self.t, self.n, self.value, self.searched_up_to)
    }
}

impl FromStr for FixtureRow {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let toks: Vec<&str> = s.split_whitespace().collect();
        let [k, t, n, v, up] = toks.as_slice() else {
            return Err(format!("expected 5 fields in {s:?}"));
        };
        let num = |x: &str| x.parse::<usize>().map_err(|_| format!("bad number {x:?}"));
        let value = match v.strip_prefix('>') {
            Some(m) => RamseyValue::Exceeded(num(m)?),
            None => RamseyValue::Exact(num(v)?),
        };
        Ok(FixtureRow {
            k: num(k)?,
            t: num(t)?,
            n: num(n)?,
            value,
            searched_up_to: num(up)?,
        })
    }
}

pub const FIXTURE_HEADER: &str = "# exact r_k(k+1,t;n) table v1, generated by `hyperramsey exact --fixtures`; do not edit\n# k t n value searched_up_to\n";

/// The parameter grid of the fixture table.
pub fn fixture_grid() -> Vec<(usize, usize, usize)> {
    let mut grid = Vec::new();
    for (k, ns) in [(3, 3..=5), (4, 4..=5)] {
        for n in ns {
            for t in 2..=k + 1 {
                grid.push((k, t, n));
            }
        }
    }
    grid
}

/// Recomputes every row of the fixture table within the default guard.
pub fn generate_fixtures() -> Result<Vec<FixtureRow>> {
    fixture_grid()
        .into_iter()
        .map(|(k, t, n)| {
            let n_max = max_searchable(k, EDGE_GUARD);
            let r = exact_ramsey(RamseyQuery { k, t, n, n_max })?;
            let searched_up_to = match r.value {
                RamseyValue::Exact(v) => v,
                RamseyValue::Exceeded(m) => m,
            };
            Ok(FixtureRow {
                k,
                t,
                n,
                value: r.value,
                searched_up_to,
            })
        })
        .collect()
}

pub fn render_fixtures(rows: &[FixtureRow]) -> String {
    let mut out = String::from(FIXTURE_HEADER);
    for r in rows {
        out.push_str(&format!("{r}\n"));
    }
    out
}

pub fn parse_fixtures(text: &str) -> Result<Vec<FixtureRow>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|(i, l)| l.parse().map_err(|m: String| Error::parse(i + 1, m)))
        .collect()
}
