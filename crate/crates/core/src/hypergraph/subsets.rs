//! Colex-ordered subset enumeration.
//!
//! Subsets are compared by their largest differing element, so every subset of
//! `{1..m}` comes before any subset containing `m + 1`. The parallel helpers
//! split the stream by the top elements of each subset, which keeps the
//! blocks contiguous in colex order and lets the reductions stay
//! deterministic.

use rayon::prelude::*;

/// Binomial coefficient, saturating at `u64::MAX`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
        if acc > u128::from(u64::MAX) {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Position of a sorted 0-based index set in the colex order of all subsets of
/// the same size.
pub fn colex_rank(indices: &[usize]) -> u64 {
    indices
        .iter()
        .enumerate()
        .map(|(i, &c)| binomial(c as u64, i as u64 + 1))
        .sum()
}

/// Step `indices` (strictly increasing, all `< n`) to its colex successor.
/// Returns `false` once the last subset has been passed.
pub fn advance_colex(indices: &mut [usize], n: usize) -> bool {
    let k = indices.len();
    for j in 0..k {
        let limit = if j + 1 < k { indices[j + 1] } else { n };
        if indices[j] + 1 < limit {
            indices[j] += 1;
            for (i, slot) in indices.iter_mut().enumerate().take(j) {
                *slot = i;
            }
            return true;
        }
    }
    false
}

/// Streaming iterator over the `k`-subsets of `0..n` as index vectors, in
/// colex order.
#[derive(Debug, Clone)]
pub struct ColexSubsets {
    n: usize,
    current: Option<Vec<usize>>,
}

impl ColexSubsets {
    pub fn new(n: usize, k: usize) -> Self {
        let current = (k <= n).then(|| (0..k).collect());
        ColexSubsets { n, current }
    }
}

impl Iterator for ColexSubsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let mut succ = out.clone();
        if advance_colex(&mut succ, self.n) {
            self.current = Some(succ);
        }
        Some(out)
    }
}

/// Every `k`-subset of `{1..domain_size}` exactly once, in colex order.
pub fn enumerate_k_subsets(domain_size: usize, k: usize) -> impl Iterator<Item = Vec<u32>> {
    ColexSubsets::new(domain_size, k).map(|ix| ix.into_iter().map(|i| i as u32 + 1).collect())
}

/// Every `k`-subset of a sorted vertex list, in colex order.
pub fn subsets_of<V: Copy>(domain: &[V], k: usize) -> impl Iterator<Item = Vec<V>> + '_ {
    ColexSubsets::new(domain.len(), k).map(move |ix| ix.into_iter().map(|i| domain[i]).collect())
}

/// Calls `f` on each `k`-subset of `set` (sorted), reusing one buffer.
pub(crate) fn for_each_subset<V: Copy>(set: &[V], k: usize, mut f: impl FnMut(&[V])) {
    let n = set.len();
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    let mut buf: Vec<V> = idx.iter().map(|&i| set[i]).collect();
    loop {
        f(&buf);
        if !advance_colex(&mut idx, n) {
            break;
        }
        for (slot, &i) in buf.iter_mut().zip(&idx) {
            *slot = set[i];
        }
    }
}

// Work units for the parallel scans: the top `depth` indices of a subset.
fn tails(n: usize, size: usize) -> (usize, Vec<Vec<usize>>) {
    let depth = size.min(2);
    (depth, ColexSubsets::new(n, depth).collect())
}

fn scan_block<V: Copy>(
    domain: &[V],
    size: usize,
    depth: usize,
    tail: &[usize],
    mut f: impl FnMut(&[V]) -> bool,
) {
    let head = size - depth;
    let below = tail.first().copied().unwrap_or(domain.len());
    if head > below {
        return;
    }
    let mut idx: Vec<usize> = (0..head).collect();
    let mut buf: Vec<V> = idx
        .iter()
        .chain(tail)
        .map(|&i| domain[i])
        .collect();
    loop {
        if !f(&buf) {
            return;
        }
        if !advance_colex(&mut idx, below) {
            return;
        }
        for (slot, &i) in buf.iter_mut().zip(&idx) {
            *slot = domain[i];
        }
    }
}

/// The colex-first `size`-subset of `domain` for which `f` returns `Some`,
/// computed in parallel. Identical to the serial scan.
pub fn par_find_first_subset<V, R, F>(domain: &[V], size: usize, f: F) -> Option<R>
where
    V: Copy + Send + Sync,
    R: Send,
    F: Fn(&[V]) -> Option<R> + Sync,
{
    if size > domain.len() {
        return None;
    }
    let (depth, tails) = tails(domain.len(), size);
    tails.par_iter().find_map_first(|tail| {
        let mut found = None;
        scan_block(domain, size, depth, tail, |s| {
            found = f(s);
            found.is_none()
        });
        found
    })
}

/// Parallel fold over all `size`-subsets of `domain`. Blocks are combined in
/// colex order, so an associative `reduce` gives the serial answer.
pub fn par_fold_subsets<V, A, I, F, R>(domain: &[V], size: usize, identity: I, fold: F, reduce: R) -> A
where
    V: Copy + Send + Sync,
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(A, &[V]) -> A + Sync + Send,
    R: Fn(A, A) -> A + Sync + Send,
{
    if size > domain.len() {
        return identity();
    }
    let (depth, tails) = tails(domain.len(), size);
    tails
        .par_iter()
        .map(|tail| {
            let mut acc = Some(identity());
            scan_block(domain, size, depth, tail, |s| {
                acc = Some(fold(acc.take().unwrap(), s));
                true
            });
            acc.unwrap()
        })
        .reduce(&identity, &reduce)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_choose_three() {
        let got: Vec<Vec<u32>> = enumerate_k_subsets(4, 3).collect();
        assert_eq!(got, vec![vec![1, 2, 3], vec![1, 2, 4], vec![1, 3, 4], vec![2, 3, 4]]);
    }

    #[test]
    fn single_and_empty() {
        assert_eq!(enumerate_k_subsets(3, 3).collect::<Vec<_>>(), vec![vec![1, 2, 3]]);
        assert_eq!(enumerate_k_subsets(2, 3).count(), 0);
        assert_eq!(enumerate_k_subsets(3, 0).collect::<Vec<_>>(), vec![Vec::<u32>::new()]);
        assert_eq!(enumerate_k_subsets(0, 0).count(), 1);
    }

    #[test]
    fn counts_and_ranks_line_up() {
        for n in 0..9 {
            for k in 0..=n {
                let all: Vec<Vec<usize>> = ColexSubsets::new(n, k).collect();
                assert_eq!(all.len() as u64, binomial(n as u64, k as u64));
                for (r, s) in all.iter().enumerate() {
                    assert_eq!(colex_rank(s), r as u64);
                }
            }
        }
    }

    #[test]
    fn colex_means_largest_element_first() {
        let all: Vec<Vec<usize>> = ColexSubsets::new(7, 3).collect();
        for w in all.windows(2) {
            let a: Vec<_> = w[0].iter().rev().collect();
            let b: Vec<_> = w[1].iter().rev().collect();
            assert!(a < b);
        }
    }

    #[test]
    fn parallel_scans_match_serial() {
        let domain: Vec<u32> = (10..22).collect();
        for size in 0..=5 {
            let serial: Vec<Vec<u32>> = subsets_of(&domain, size).collect();
            let count = par_fold_subsets(&domain, size, || 0usize, |a, _| a + 1, |a, b| a + b);
            assert_eq!(count, serial.len());
            let order = par_fold_subsets(
                &domain,
                size,
                Vec::new,
                |mut a, s| {
                    a.push(s.to_vec());
                    a
                },
                |mut a, mut b| {
                    a.append(&mut b);
                    a
                },
            );
            assert_eq!(order, serial);
            let pick = |s: &[u32]| (s.iter().sum::<u32>() % 7 == 3).then(|| s.to_vec());
            assert_eq!(
                par_find_first_subset(&domain, size, pick),
                serial.iter().find_map(|s| pick(s))
            );
        }
    }

    #[test]
    fn binomial_saturates() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(2, 3), 0);
        assert_eq!(binomial(200, 100), u64::MAX);
    }
}
