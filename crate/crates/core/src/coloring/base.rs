use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hypergraph::{binomial, check_edge, enumerate_k_subsets, Color, ColoringOracle, TableColoring};

/// The generator behind every seeded construction: ChaCha8 keyed through
/// `SeedableRng::seed_from_u64`. Draws are consumed in colex order of the
/// sets being colored, so a seed pins the output bit for bit.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Assignment of a value in `1..=k` to every `(k-1)`-subset of `{1..N}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KaryBaseColoring {
    n: usize,
    k: usize,
    values: Vec<u8>,
}

impl KaryBaseColoring {
    /// Values listed in colex order of the `(k-1)`-subsets.
    pub fn from_values(n: usize, k: usize, values: Vec<u8>) -> Result<Self> {
        if !(2..=255).contains(&k) {
            return Err(Error::domain(format!("k = {k} outside 2..=255")));
        }
        let want = binomial(n as u64, k as u64 - 1);
        if values.len() as u64 != want {
            return Err(Error::domain(format!(
                "expected {want} values for the {}-subsets of [{n}], got {}",
                k - 1,
                values.len()
            )));
        }
        if let Some(bad) = values.iter().find(|&&v| v == 0 || v as usize > k) {
            return Err(Error::domain(format!("value {bad} outside 1..={k}")));
        }
        Ok(KaryBaseColoring { n, k, values })
    }

    pub fn from_fn(n: usize, k: usize, mut f: impl FnMut(&[u32]) -> u8) -> Result<Self> {
        if k < 2 {
            return Err(Error::domain(format!("k = {k} must be at least 2")));
        }
        let values = enumerate_k_subsets(n, k - 1).map(|s| f(&s)).collect();
        KaryBaseColoring::from_values(n, k, values)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// The uniformity of the colorings built on top, one more than the
    /// size of the colored sets.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn get(&self, set: &[u32]) -> Result<u8> {
        Ok(self.values[self.index_of(set)?])
    }

    pub fn set(&mut self, set: &[u32], value: u8) -> Result<()> {
        if value == 0 || value as usize > self.k {
            return Err(Error::domain(format!("value {value} outside 1..={}", self.k)));
        }
        let i = self.index_of(set)?;
        self.values[i] = value;
        Ok(())
    }

    fn index_of(&self, set: &[u32]) -> Result<usize> {
        check_edge(set, self.k - 1)?;
        if set.first() == Some(&0) || set.last().is_some_and(|&v| v as usize > self.n) {
            return Err(Error::domain(format!("set {set:?} outside [{}]", self.n)));
        }
        Ok(rank_1based(set))
    }
}

#[inline]
pub(crate) fn rank_1based(set: &[u32]) -> usize {
    set.iter()
        .enumerate()
        .map(|(i, &v)| binomial(u64::from(v - 1), i as u64 + 1))
        .sum::<u64>() as usize
}

/// Uniform random `k`-ary coloring of the `(k-1)`-subsets of `[n]`.
pub fn random_base(n: usize, k: usize, seed: u64) -> Result<KaryBaseColoring> {
    if k < 2 {
        return Err(Error::domain(format!("k = {k} must be at least 2")));
    }
    if n + 1 < k {
        return Err(Error::domain(format!("need N >= k - 1, got N = {n}, k = {k}")));
    }
    let mut rng = seeded_rng(seed);
    KaryBaseColoring::from_fn(n, k, |_| rng.gen_range(1..=k as u8))
}

/// Red/blue coloring of the `(k-1)`-subsets of `[N]`; the input of the
/// stepping-up colorings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseTwoColoring {
    table: TableColoring,
}

impl BaseTwoColoring {
    pub fn constant(n: usize, uniformity: usize, color: Color) -> Result<Self> {
        Ok(BaseTwoColoring {
            table: TableColoring::filled(n, uniformity, color)?,
        })
    }

    /// Fair coin per set, colex order, from [`seeded_rng`].
    pub fn random(n: usize, uniformity: usize, seed: u64) -> Result<Self> {
        let mut rng = seeded_rng(seed);
        BaseTwoColoring::from_fn(n, uniformity, |_| {
            if rng.gen::<bool>() {
                Color::Red
            } else {
                Color::Blue
            }
        })
    }

    pub fn from_fn(n: usize, uniformity: usize, f: impl FnMut(&[u32]) -> Color) -> Result<Self> {
        Ok(BaseTwoColoring {
            table: TableColoring::from_fn(n, uniformity, f)?,
        })
    }

    pub fn from_table(table: TableColoring) -> Self {
        BaseTwoColoring { table }
    }

    pub fn vertex_count(&self) -> usize {
        self.table.vertex_count()
    }

    pub fn table(&self) -> &TableColoring {
        &self.table
    }

    pub fn get(&self, set: &[u32]) -> Result<Color> {
        self.table.get(set)
    }

    pub fn set(&mut self, set: &[u32], color: Color) -> Result<()> {
        self.table.set(set, color)
    }
}

impl ColoringOracle<u32> for BaseTwoColoring {
    fn uniformity(&self) -> usize {
        self.table.uniformity()
    }

    fn color(&self, edge: &[u32]) -> Color {
        self.table.color(edge)
    }
}
