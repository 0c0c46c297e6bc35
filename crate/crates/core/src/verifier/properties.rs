//! Structural scans: the delta identities on `{0,1}^N`, the monotone versus
//! zigzag separation, the behaviour of increasing delta sequences under
//! vertex deletion, the at-most-two-red-edges property of the rank
//! coloring, and its red density.

use rand::seq::index::sample;
use rayon::prelude::*;

use crate::coloring::{greedy_partial_steiner, red_probability, seeded_rng, KaryBaseColoring, RankColoring};
use crate::delta::{classify_unchecked, universe, BitVertex, DeltaClass};
use crate::error::{Error, Result};
use crate::hypergraph::{
    binomial, for_each_subset, par_fold_subsets, red_count, Color, ColoringOracle,
};

/// Number of cases checked and failed by a scan, with the first failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tally<V> {
    pub checked: u64,
    pub violations: u64,
    pub example: Option<Vec<V>>,
}

impl<V> Default for Tally<V> {
    fn default() -> Self {
        Tally {
            checked: 0,
            violations: 0,
            example: None,
        }
    }
}

impl<V: Clone> Tally<V> {
    pub fn record(&mut self, ok: bool, case: &[V]) {
        self.checked += 1;
        if !ok {
            self.violations += 1;
            if self.example.is_none() {
                self.example = Some(case.to_vec());
            }
        }
    }

    /// Combines two tallies, keeping the left example.
    pub fn merge(mut self, other: Self) -> Self {
        self.checked += other.checked;
        self.violations += other.violations;
        self.example = self.example.or(other.example);
        self
    }

    pub fn is_clean(&self) -> bool {
        self.violations == 0
    }
}

fn deltas(set: &[BitVertex]) -> Vec<u32> {
    set.windows(2).map(|w| w[0].delta_unchecked(w[1])).collect()
}

fn property_a(set: &[BitVertex]) -> bool {
    let (a, b, c) = (set[0], set[1], set[2]);
    a.delta_unchecked(b) != b.delta_unchecked(c)
}

fn property_b(set: &[BitVertex]) -> bool {
    let min = deltas(set).into_iter().min().unwrap();
    set[0].delta_unchecked(set[set.len() - 1]) == min
}

/// `d_i != d_{i+2}` whenever `d_{i+1} > d_i`.
fn fact(set: &[BitVertex]) -> bool {
    deltas(set)
        .windows(3)
        .all(|w| !(w[1] > w[0]) || w[0] != w[2])
}

/// Checks every sorted triple of `{0,1}^N` for distinct consecutive deltas.
pub fn property_a_exhaustive(bits: usize) -> Result<Tally<BitVertex>> {
    let cube = universe(bits)?;
    Ok(par_fold_subsets(
        &cube,
        3,
        Tally::default,
        |mut t, s| {
            t.record(property_a(s), s);
            t
        },
        Tally::merge,
    ))
}

/// Checks the min identity on every sorted `r`-tuple, `2 <= r <= max_r`.
pub fn property_b_exhaustive(bits: usize, max_r: usize) -> Result<Tally<BitVertex>> {
    let cube = universe(bits)?;
    Ok((2..=max_r.min(cube.len())).fold(Tally::default(), |acc, r| {
        acc.merge(par_fold_subsets(
            &cube,
            r,
            Tally::default,
            |mut t, s| {
                t.record(property_b(s), s);
                t
            },
            Tally::merge,
        ))
    }))
}

/// Checks `d_i != d_{i+2}` after a rise on every sorted `r`-tuple, `4 <= r <= max_r`.
pub fn fact_exhaustive(bits: usize, max_r: usize) -> Result<Tally<BitVertex>> {
    let cube = universe(bits)?;
    Ok((4..=max_r.min(cube.len())).fold(Tally::default(), |acc, r| {
        acc.merge(par_fold_subsets(
            &cube,
            r,
            Tally::default,
            |mut t, s| {
                t.record(fact(s), s);
                t
            },
            Tally::merge,
        ))
    }))
}

/// Tallies from random sorted tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampledDeltaChecks {
    pub property_a: Tally<BitVertex>,
    pub property_b: Tally<BitVertex>,
    pub fact: Tally<BitVertex>,
}

/// Draws `samples` sorted tuples of size `3..=max_r` from `{0,1}^N`
/// (`N <= 63`). Every triple of a tuple is checked against Property A and
/// every contiguous stretch of length at least two against Property B.
pub fn sampled_delta_checks(bits: usize, samples: usize, max_r: usize, seed: u64) -> Result<SampledDeltaChecks> {
    use rand::Rng;
    if max_r < 3 {
        return Err(Error::domain("tuples need at least three vertices"));
    }
    // Validates the length.
    BitVertex::new(bits, 0)?;
    let mut rng = seeded_rng(seed);
    let mut out = SampledDeltaChecks {
        property_a: Tally::default(),
        property_b: Tally::default(),
        fact: Tally::default(),
    };
    let mask = if bits == 64 { u64::MAX } else { (1u64 << bits) - 1 };
    let mut tuple = Vec::with_capacity(max_r);
    for _ in 0..samples {
        let r = rng.gen_range(3..=max_r);
        tuple.clear();
        while tuple.len() < r {
            let v = rng.gen::<u64>() & mask;
            if !tuple.contains(&v) {
                tuple.push(v);
            }
        }
        tuple.sort_unstable();
        let set: Vec<BitVertex> = tuple.iter().map(|&v| BitVertex::new(bits, v).unwrap()).collect();
        for_each_subset(&set, 3, |tri| out.property_a.record(property_a(tri), tri));
        for i in 0..r {
            for j in i + 2..=r {
                out.property_b.record(property_b(&set[i..j]), &set[i..j]);
            }
        }
        out.fact.record(fact(&set), &set);
    }
    Ok(out)
}

fn scan_guard(bits: usize, size: usize) -> Result<Vec<BitVertex>> {
    let cube = universe(bits)?;
    let sets = binomial(cube.len() as u64, size as u64);
    if sets > 100_000_000 {
        return Err(Error::Capacity(format!("C(2^{bits}, {size}) = {sets} sets")));
    }
    Ok(cube)
}

/// Two `k`-sets meeting in `k - 1` vertices span a `(k+1)`-set, so scanning
/// every `(k+1)`-set covers every such pair. A violation is a `(k+1)`-set
/// containing one `k`-edge with monotone deltas and another with zigzag
/// deltas.
pub fn monotone_zigzag_separation(k: usize, bits: usize) -> Result<Tally<BitVertex>> {
    if k < 4 {
        return Err(Error::domain(format!("k = {k} below 4")));
    }
    let cube = scan_guard(bits, k + 1)?;
    Ok(par_fold_subsets(
        &cube,
        k + 1,
        Tally::default,
        |mut t, set| {
            let d = deltas(set);
            let (mut mono, mut zig) = (false, false);
            let mut sub = Vec::with_capacity(k - 1);
            for skip in 0..=k {
                sub.clear();
                // Dropping a_i merges d_{i-1} and d_i into their minimum.
                for (i, &x) in d.iter().enumerate() {
                    if i + 1 == skip {
                        continue;
                    }
                    if i == skip && skip > 0 {
                        sub.push(d[i - 1].min(x));
                    } else if i != skip {
                        sub.push(x);
                    }
                }
                match classify_unchecked(&sub, k) {
                    c if c.is_monotone() => mono = true,
                    DeltaClass::Zigzag => zig = true,
                    _ => {}
                }
            }
            t.record(!(mono && zig), set);
            t
        },
        Tally::merge,
    ))
}

/// Calls `visit` on every sorted `size`-subset of `{0,1}^N` whose delta
/// sequence is strictly increasing (or decreasing). Each next vertex is
/// built from the previous one: same first `d - 1` bits, a 1 where the
/// previous has a 0 at `d`, anything after.
pub fn for_each_monotone_delta_set(
    size: usize,
    bits: usize,
    increasing: bool,
    mut visit: impl FnMut(&[BitVertex]),
) -> Result<()> {
    if size < 2 {
        return Err(Error::domain("a delta sequence needs at least two vertices"));
    }
    let cube = universe(bits)?;
    let mut cur = Vec::with_capacity(size);
    for &a in &cube {
        cur.push(a);
        extend_monotone(&mut cur, if increasing { 0 } else { bits as u32 + 1 }, size, bits, increasing, &mut visit);
        cur.pop();
    }
    Ok(())
}

fn extend_monotone(
    cur: &mut Vec<BitVertex>,
    last: u32,
    size: usize,
    bits: usize,
    increasing: bool,
    visit: &mut impl FnMut(&[BitVertex]),
) {
    if cur.len() == size {
        visit(cur);
        return;
    }
    let a = cur[cur.len() - 1];
    let range: Vec<u32> = if increasing {
        (last + 1..=bits as u32).collect()
    } else {
        (1..last).collect()
    };
    for d in range {
        if a.bit(d as usize) == 1 {
            continue;
        }
        let low = bits as u32 - d;
        let head = (a.value() >> (low + 1) << (low + 1)) | 1 << low;
        for tail in 0..1u64 << low {
            cur.push(BitVertex::new(bits, head | tail).unwrap());
            extend_monotone(cur, d, size, bits, increasing, visit);
            cur.pop();
        }
    }
}

/// For every `(k+1)`-set with increasing deltas: deleting `a_i` (`i <= k`)
/// deletes `d_i` from the sequence, and deleting `a_k` or `a_{k+1}` gives
/// the same sequence. Decreasing sequences are checked against the mirror
/// statement: deleting `a_i` (`i >= 2`) deletes `d_{i-1}`, and deleting
/// `a_1` or `a_2` agree.
pub fn deletion_identity(k: usize, bits: usize) -> Result<(Tally<BitVertex>, Tally<BitVertex>)> {
    let without = |set: &[BitVertex], i: usize| -> Vec<u32> {
        let rest: Vec<BitVertex> = set
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &v)| v)
            .collect();
        deltas(&rest)
    };
    let drop_entry = |d: &[u32], i: usize| -> Vec<u32> {
        let mut v = d.to_vec();
        v.remove(i);
        v
    };
    let mut inc = Tally::default();
    for_each_monotone_delta_set(k + 1, bits, true, |set| {
        let d = deltas(set);
        let ok = (0..k).all(|i| without(set, i) == drop_entry(&d, i))
            && without(set, k - 1) == without(set, k);
        inc.record(ok, set);
    })?;
    let mut dec = Tally::default();
    for_each_monotone_delta_set(k + 1, bits, false, |set| {
        let d = deltas(set);
        let ok = (1..=k).all(|i| without(set, i) == drop_entry(&d, i - 1))
            && without(set, 0) == without(set, 1);
        dec.record(ok, set);
    })?;
    Ok((inc, dec))
}

/// `(k+1)`-sets of `[N]` with more than two red edges under the rank
/// coloring of `phi`.
pub fn rank_lemma_scan(phi: &KaryBaseColoring) -> Result<Tally<u32>> {
    let oracle = RankColoring::new(phi.clone())?;
    let k = phi.k();
    let vs = oracle.vertices();
    Ok(par_fold_subsets(
        &vs,
        k + 1,
        Tally::default,
        |mut t, s| {
            t.record(red_count(&oracle, s).unwrap() <= 2, s);
            t
        },
        Tally::merge,
    ))
}

/// Runs [`rank_lemma_scan`] over every `k`-ary base coloring on `[n]`.
/// Returns the number of base colorings and the combined tally.
pub fn rank_lemma_exhaustive(n: usize, k: usize) -> Result<(u64, Tally<u32>)> {
    let slots = binomial(n as u64, k as u64 - 1);
    let total = (k as u64).checked_pow(slots as u32).filter(|&t| t <= 50_000_000).ok_or_else(|| {
        Error::Capacity(format!("{k}^{slots} base colorings"))
    })?;
    let tally = (0..total)
        .into_par_iter()
        .map(|mut code| {
            let values: Vec<u8> = (0..slots)
                .map(|_| {
                    let v = (code % k as u64) as u8 + 1;
                    code /= k as u64;
                    v
                })
                .collect();
            let phi = KaryBaseColoring::from_values(n, k, values).unwrap();
            rank_lemma_scan(&phi).unwrap()
        })
        .reduce(Tally::default, Tally::merge);
    Ok((total, tally))
}

#[derive(Debug, Clone, PartialEq)]
pub struct DensityReport {
    pub red: u64,
    pub edges: u64,
    pub fraction: f64,
    pub expected: f64,
    /// Red blocks in the greedy partial Steiner family on `[N]`, whose
    /// blocks share no `(k-1)`-subset and so are colored independently.
    pub steiner_red: u64,
    pub steiner_blocks: u64,
    /// Binomial standard deviation of the red fraction over the family.
    pub steiner_sigma: f64,
}

impl DensityReport {
    pub fn steiner_fraction(&self) -> f64 {
        self.steiner_red as f64 / self.steiner_blocks as f64
    }

    /// Distance of both fractions from the expected density, in units of
    /// the family's standard deviation.
    pub fn deviations(&self) -> (f64, f64) {
        (
            (self.fraction - self.expected).abs() / self.steiner_sigma,
            (self.steiner_fraction() - self.expected).abs() / self.steiner_sigma,
        )
    }
}

pub fn red_density(phi: &KaryBaseColoring) -> Result<DensityReport> {
    let oracle = RankColoring::new(phi.clone())?;
    let k = phi.k();
    let n = phi.vertex_count();
    let vs = oracle.vertices();
    let (red, edges) = par_fold_subsets(
        &vs,
        k,
        || (0u64, 0u64),
        |(r, e), s| (r + u64::from(oracle.color(s) == Color::Red), e + 1),
        |(a, b), (c, d)| (a + c, b + d),
    );
    let family = greedy_partial_steiner(n, k)?;
    let steiner_red = family
        .blocks
        .iter()
        .filter(|b| oracle.color(b) == Color::Red)
        .count() as u64;
    let p = red_probability(k);
    let blocks = family.blocks.len() as u64;
    Ok(DensityReport {
        red,
        edges,
        fraction: red as f64 / edges as f64,
        expected: p,
        steiner_red,
        steiner_blocks: blocks,
        steiner_sigma: (p * (1.0 - p) / blocks as f64).sqrt(),
    })
}

/// A uniformly random sorted `r`-subset of `{0,1}^N`, for sampling scans
/// at sizes too large to enumerate.
pub fn random_sorted_subset(bits: usize, r: usize, rng: &mut impl rand::Rng) -> Result<Vec<BitVertex>> {
    let size = 1usize
        .checked_shl(bits as u32)
        .filter(|_| bits <= 30)
        .ok_or_else(|| Error::Capacity(format!("2^{bits} vertices")))?;
    if r > size {
        return Err(Error::domain(format!("cannot draw {r} of {size} vertices")));
    }
    let mut idx = sample(rng, size, r).into_vec();
    idx.sort_unstable();
    idx.into_iter().map(|v| BitVertex::new(bits, v as u64)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cube_subsets(bits: usize, r: usize) -> Result<Vec<Vec<BitVertex>>> {
        Ok(subsets_of(&universe(bits)?, r).collect())
    }
    use crate::coloring::random_base;
    use crate::delta::{classify, delta_sequence};
    use crate::hypergraph::subsets_of;

    #[test]
    fn delta_identities_small_cubes() {
        for bits in 1..=4 {
            assert!(property_a_exhaustive(bits).unwrap().is_clean());
            assert!(property_b_exhaustive(bits, 5).unwrap().is_clean());
            assert!(fact_exhaustive(bits, 6).unwrap().is_clean());
        }
        assert_eq!(property_a_exhaustive(3).unwrap().checked, 56);
        let s = sampled_delta_checks(16, 2000, 6, 1).unwrap();
        assert!(s.property_a.is_clean() && s.property_b.is_clean() && s.fact.is_clean());
        assert!(s.property_a.checked >= 2000);
    }

    #[test]
    fn tally_keeps_first_example() {
        let mut t = Tally::default();
        t.record(true, &[1u32]);
        t.record(false, &[2]);
        t.record(false, &[3]);
        assert_eq!((t.checked, t.violations, t.example.clone()), (3, 2, Some(vec![2])));
        let m = Tally::default().merge(t);
        assert_eq!(m.example, Some(vec![2]));
    }

    #[test]
    fn merged_deletion_deltas_match_direct_computation() {
        // Oracle for the delta shortcut in `monotone_zigzag_separation`.
        for set in cube_subsets(4, 5).unwrap().into_iter().step_by(7) {
            let d = delta_sequence(&set).unwrap();
            for skip in 0..5 {
                let rest: Vec<_> = set.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
                let want = delta_sequence(&rest).unwrap();
                let got: Vec<u32> = match skip {
                    0 => d[1..].to_vec(),
                    4 => d[..3].to_vec(),
                    s => {
                        let mut v = d.clone();
                        v[s - 1] = v[s - 1].min(v[s]);
                        v.remove(s);
                        v
                    }
                };
                assert_eq!(got, want);
            }
        }
    }

    #[test]
    fn separation_small_k() {
        // Cheap instance of the scan; the k = 6 run lives in the acceptance suite.
        let t = monotone_zigzag_separation(4, 4).unwrap();
        assert_eq!(t.checked, binomial(16, 5));
        // Brute-force the same question pair by pair.
        let mut bad = 0;
        for set in cube_subsets(4, 5).unwrap() {
            let classes: Vec<DeltaClass> = subsets_of(&set, 4)
                .map(|e| classify(&delta_sequence(&e).unwrap(), 4).unwrap())
                .collect();
            if classes.iter().any(|c| c.is_monotone()) && classes.contains(&DeltaClass::Zigzag) {
                bad += 1;
            }
        }
        assert_eq!(t.violations, bad);
    }

    #[test]
    fn monotone_generator_is_complete() {
        for (size, bits) in [(3, 3), (4, 4), (5, 4), (4, 5), (6, 5)] {
            for increasing in [true, false] {
                let mut got = Vec::new();
                for_each_monotone_delta_set(size, bits, increasing, |s| got.push(s.to_vec())).unwrap();
                let want: Vec<Vec<BitVertex>> = cube_subsets(bits, size)
                    .unwrap()
                    .into_iter()
                    .filter(|s| {
                        let d = delta_sequence(s).unwrap();
                        d.windows(2).all(|w| if increasing { w[0] < w[1] } else { w[0] > w[1] })
                    })
                    .collect();
                got.sort();
                let mut want = want;
                want.sort();
                assert_eq!(got, want, "size {size}, N = {bits}, increasing {increasing}");
            }
        }
    }

    #[test]
    fn deletion_identity_small() {
        let (inc, dec) = deletion_identity(4, 5).unwrap();
        assert!(inc.is_clean() && dec.is_clean());
        assert!(inc.checked > 0 && dec.checked > 0);
        // Six increasing deltas cannot fit in {1..5}.
        let (inc, dec) = deletion_identity(6, 5).unwrap();
        assert_eq!((inc.checked, dec.checked), (0, 0));
    }

    #[test]
    fn rank_lemma_small() {
        let (count, t) = rank_lemma_exhaustive(4, 3).unwrap();
        assert_eq!(count, 729);
        assert!(t.is_clean());
        assert_eq!(t.checked, 729);
        for seed in 0..5 {
            assert!(rank_lemma_scan(&random_base(9, 4, seed).unwrap()).unwrap().is_clean());
        }
    }

    #[test]
    fn density_counts() {
        let phi = random_base(12, 3, 5).unwrap();
        let r = red_density(&phi).unwrap();
        let oracle = RankColoring::new(phi).unwrap();
        let direct = crate::hypergraph::enumerate_k_subsets(12, 3)
            .filter(|e| oracle.color(e) == Color::Red)
            .count() as u64;
        assert_eq!((r.red, r.edges), (direct, 220));
        assert!((r.expected - 1.0 / 27.0).abs() < 1e-15);
    }

    #[test]
    fn random_subsets_are_sorted() {
        let mut rng = seeded_rng(3);
        let s = random_sorted_subset(5, 7, &mut rng).unwrap();
        assert_eq!(s.len(), 7);
        assert!(s.windows(2).all(|w| w[0] < w[1]));
    }
}
