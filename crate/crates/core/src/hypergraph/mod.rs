//! Vertices, edges and red/blue colorings of `k`-subsets.
//!
//! Vertices are opaque ordered tokens (see [`Vertex`]); an edge is a strictly
//! increasing slice of `k` of them. Everything that colors edges implements
//! [`ColoringOracle`], whether it is backed by a table or computed on demand.

mod search;
mod subsets;

use std::fmt;

pub use search::{
    find_blue_clique, find_red_configuration, find_red_ordered_f, find_red_ordered_ft, red_count,
    ConfigurationKind, ConfigurationWitness,
};
pub use subsets::{
    advance_colex, binomial, colex_rank, enumerate_k_subsets, par_find_first_subset,
    par_fold_subsets, subsets_of, ColexSubsets,
};
pub(crate) use subsets::for_each_subset;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn is_red(self) -> bool {
        self == Color::Red
    }

    pub fn letter(self) -> char {
        match self {
            Color::Red => 'R',
            Color::Blue => 'B',
        }
    }

    pub fn from_letter(c: &str) -> Option<Color> {
        match c {
            "R" => Some(Color::Red),
            "B" => Some(Color::Blue),
            _ => None,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// An ordered vertex token. Integers `1..=N` and binary vectors both qualify.
pub trait Vertex: Copy + Ord + std::hash::Hash + fmt::Debug + fmt::Display + Send + Sync {}

impl Vertex for u32 {}

/// A red/blue coloring of the `k`-subsets of some vertex universe.
///
/// `color` receives a strictly increasing edge of length `uniformity()` and
/// must be deterministic. Implementations are shared across scan threads.
pub trait ColoringOracle<V: Vertex>: Sync {
    fn uniformity(&self) -> usize;

    fn color(&self, edge: &[V]) -> Color;
}

impl<V: Vertex, O: ColoringOracle<V> + ?Sized> ColoringOracle<V> for &O {
    fn uniformity(&self) -> usize {
        (**self).uniformity()
    }

    fn color(&self, edge: &[V]) -> Color {
        (**self).color(edge)
    }
}

/// Every edge gets the same color.
#[derive(Debug, Clone, Copy)]
pub struct Monochrome {
    pub k: usize,
    pub color: Color,
}

impl<V: Vertex> ColoringOracle<V> for Monochrome {
    fn uniformity(&self) -> usize {
        self.k
    }

    fn color(&self, _edge: &[V]) -> Color {
        self.color
    }
}

/// Wraps a closure as an oracle.
pub struct FnColoring<F> {
    k: usize,
    f: F,
}

impl<F> FnColoring<F> {
    pub fn new(k: usize, f: F) -> Self {
        FnColoring { k, f }
    }
}

impl<V: Vertex, F: Fn(&[V]) -> Color + Sync> ColoringOracle<V> for FnColoring<F> {
    fn uniformity(&self) -> usize {
        self.k
    }

    fn color(&self, edge: &[V]) -> Color {
        (self.f)(edge)
    }
}

/// Explicit coloring of all `k`-subsets of `{1..n}`, stored in colex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableColoring {
    n: usize,
    k: usize,
    colors: Vec<Color>,
}

impl TableColoring {
    /// Table sized for `C(n, k)` edges, all initially `fill`.
    pub fn filled(n: usize, k: usize, fill: Color) -> Result<Self> {
        let len = binomial(n as u64, k as u64);
        if len > 1 << 28 {
            return Err(Error::Capacity(format!(
                "explicit table of C({n},{k}) = {len} edges"
            )));
        }
        Ok(TableColoring {
            n,
            k,
            colors: vec![fill; len as usize],
        })
    }

    /// Evaluates `f` on every edge of `{1..n}`.
    pub fn from_fn(n: usize, k: usize, mut f: impl FnMut(&[u32]) -> Color) -> Result<Self> {
        let mut table = TableColoring::filled(n, k, Color::Blue)?;
        for (slot, edge) in table.colors.iter_mut().zip(enumerate_k_subsets(n, k)) {
            *slot = f(&edge);
        }
        Ok(table)
    }

    /// Colors listed in colex order of the edges.
    pub fn from_colors(n: usize, k: usize, colors: Vec<Color>) -> Result<Self> {
        let want = binomial(n as u64, k as u64);
        if colors.len() as u64 != want {
            return Err(Error::domain(format!(
                "expected {want} colors for C({n},{k}), got {}",
                colors.len()
            )));
        }
        Ok(TableColoring { n, k, colors })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    /// Rank of an edge of `{1..n}`, checking that it is a valid edge.
    pub fn index_of(&self, edge: &[u32]) -> Result<usize> {
        check_edge(edge, self.k)?;
        if edge.first() == Some(&0) || edge.last().is_some_and(|&v| v as usize > self.n) {
            return Err(Error::domain(format!(
                "edge {edge:?} outside vertex range 1..={}",
                self.n
            )));
        }
        Ok(Self::rank(edge))
    }

    pub fn set(&mut self, edge: &[u32], color: Color) -> Result<()> {
        let i = self.index_of(edge)?;
        self.colors[i] = color;
        Ok(())
    }

    pub fn get(&self, edge: &[u32]) -> Result<Color> {
        Ok(self.colors[self.index_of(edge)?])
    }

    /// All vertices `1..=n`.
    pub fn vertices(&self) -> Vec<u32> {
        (1..=self.n as u32).collect()
    }

    fn rank(edge: &[u32]) -> usize {
        edge.iter()
            .enumerate()
            .map(|(i, &v)| binomial(u64::from(v - 1), i as u64 + 1))
            .sum::<u64>() as usize
    }
}

impl ColoringOracle<u32> for TableColoring {
    fn uniformity(&self) -> usize {
        self.k
    }

    /// Panics on an edge outside `{1..n}`; use [`TableColoring::get`] for a
    /// checked lookup.
    fn color(&self, edge: &[u32]) -> Color {
        self.colors[Self::rank(edge)]
    }
}

/// Checks that `edge` has length `k` and is strictly increasing.
pub fn check_edge<V: Vertex>(edge: &[V], k: usize) -> Result<()> {
    if edge.len() != k {
        return Err(Error::domain(format!(
            "edge {edge:?} has {} vertices, expected {k}",
            edge.len()
        )));
    }
    check_sorted(edge)
}

pub(crate) fn check_sorted<V: Vertex>(set: &[V]) -> Result<()> {
    if set.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::domain(format!(
            "vertices {set:?} are not strictly increasing"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_roundtrip() {
        let t = TableColoring::from_fn(6, 3, |e| {
            if e[0] + e[2] == 7 {
                Color::Red
            } else {
                Color::Blue
            }
        })
        .unwrap();
        for e in enumerate_k_subsets(6, 3) {
            let want = if e[0] + e[2] == 7 { Color::Red } else { Color::Blue };
            assert_eq!(t.get(&e).unwrap(), want);
            assert_eq!(t.color(&e), want);
        }
    }

    #[test]
    fn table_rejects_bad_edges() {
        let mut t = TableColoring::filled(5, 3, Color::Blue).unwrap();
        assert!(t.get(&[1, 2, 6]).is_err());
        assert!(t.get(&[0, 1, 2]).is_err());
        assert!(t.get(&[2, 1, 3]).is_err());
        assert!(t.set(&[1, 2], Color::Red).is_err());
        t.set(&[1, 2, 5], Color::Red).unwrap();
        assert_eq!(t.get(&[1, 2, 5]).unwrap(), Color::Red);
    }

    #[test]
    fn from_colors_checks_length() {
        assert!(TableColoring::from_colors(4, 2, vec![Color::Red; 5]).is_err());
        assert!(TableColoring::from_colors(4, 2, vec![Color::Red; 6]).is_ok());
    }
}
