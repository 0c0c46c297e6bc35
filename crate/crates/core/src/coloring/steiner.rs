use crate::error::{Error, Result};
use crate::hypergraph::{binomial, colex_rank, enumerate_k_subsets, for_each_subset};

/// A family of `k`-subsets of `[n]` pairwise meeting in at most `k - 2`
/// points (a partial Steiner system `Sp(k-1, k, n)`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SteinerFamily {
    pub n: usize,
    pub k: usize,
    pub blocks: Vec<Vec<u32>>,
}

/// Colex-greedy maximal packing: walk the `k`-sets of `[n]` in colex order
/// and keep each one that shares no `(k-1)`-subset with a kept block.
pub fn greedy_partial_steiner(n: usize, k: usize) -> Result<SteinerFamily> {
    if k < 2 {
        return Err(Error::domain(format!("block size {k} must be at least 2")));
    }
    if n < k {
        return Err(Error::domain(format!("ground set {n} smaller than block size {k}")));
    }
    let shadows = binomial(n as u64, k as u64 - 1);
    if shadows > 1 << 30 {
        return Err(Error::Capacity(format!("C({n},{}) shadow sets", k - 1)));
    }
    let mut covered = vec![false; shadows as usize];
    let mut blocks = Vec::new();
    let mut idx = Vec::with_capacity(k);
    for block in enumerate_k_subsets(n, k) {
        let mut ranks = Vec::with_capacity(k);
        for_each_subset(&block, k - 1, |sub| {
            idx.clear();
            idx.extend(sub.iter().map(|&v| v as usize - 1));
            ranks.push(colex_rank(&idx) as usize);
        });
        if ranks.iter().all(|&r| !covered[r]) {
            for r in ranks {
                covered[r] = true;
            }
            blocks.push(block);
        }
    }
    Ok(SteinerFamily { n, k, blocks })
}

fn meet(a: &[u32], b: &[u32]) -> usize {
    let (mut i, mut j, mut m) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                m += 1;
                i += 1;
                j += 1;
            }
        }
    }
    m
}

impl SteinerFamily {
    /// Lower bound on any maximal packing: `C(n,k) / (1 + k(n-k))`.
    pub fn counting_bound(n: usize, k: usize) -> f64 {
        binomial(n as u64, k as u64) as f64 / (1 + k * (n - k)) as f64
    }

    /// Largest intersection between two distinct blocks (0 for fewer than
    /// two blocks).
    pub fn max_pairwise_intersection(&self) -> usize {
        let mut worst = 0;
        for (i, a) in self.blocks.iter().enumerate() {
            for b in &self.blocks[i + 1..] {
                worst = worst.max(meet(a, b));
            }
        }
        worst
    }

    pub fn is_packing(&self) -> bool {
        self.blocks.len() < 2 || self.max_pairwise_intersection() + 2 <= self.k
    }

    /// No `k`-set outside the family could be added. Exhaustive over all
    /// `C(n, k)` sets.
    pub fn is_maximal(&self) -> bool {
        enumerate_k_subsets(self.n, self.k).all(|s| {
            self.blocks.iter().any(|b| meet(b, &s) + 1 >= self.k)
        })
    }
}
