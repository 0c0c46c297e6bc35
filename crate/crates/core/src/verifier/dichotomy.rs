//! Sequences with no two equal neighbours contain either a long strictly
//! monotone run of consecutive entries, or many consecutive local extrema.
//! Applied to the delta sequence of a sorted vertex set, the extrema give
//! edges with zigzag delta patterns.

use crate::delta::{delta_sequence, local_extrema, BitVertex, Extremum};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Dichotomy {
    /// Entries `start..start + n` (1-based) are strictly monotone.
    MonotoneRun { start: usize },
    /// `k` consecutive local extrema, 1-based, the first a local maximum.
    AlternatingExtrema { positions: Vec<usize> },
    NotGuaranteed,
}

/// Looks for a strictly monotone run of `n` consecutive entries, then for
/// `k` consecutive local extrema starting at a maximum. Length
/// `2kn - 1` always suffices.
pub fn check_sequence_dichotomy(seq: &[u32], n: usize, k: usize) -> Result<Dichotomy> {
    if let Some(i) = seq.windows(2).position(|w| w[0] == w[1]) {
        return Err(Error::domain(format!(
            "entries {} and {} are equal",
            i + 1,
            i + 2
        )));
    }
    if n == 0 || k == 0 {
        return Err(Error::domain("run length and extremum count must be positive"));
    }
    if let Some(start) = monotone_run(seq, n) {
        return Ok(Dichotomy::MonotoneRun { start });
    }
    let ext = local_extrema(seq);
    let first_max = ext.iter().position(|&(_, e)| e == Extremum::Max);
    match first_max {
        Some(f) if ext.len() - f >= k => Ok(Dichotomy::AlternatingExtrema {
            positions: ext[f..f + k].iter().map(|&(p, _)| p).collect(),
        }),
        _ => Ok(Dichotomy::NotGuaranteed),
    }
}

fn monotone_run(seq: &[u32], n: usize) -> Option<usize> {
    if seq.len() < n {
        return None;
    }
    if n <= 2 {
        return Some(1);
    }
    // Length of the run of equal-direction steps ending at each step.
    let mut run = 0usize;
    let mut prev_up = None;
    for (i, w) in seq.windows(2).enumerate() {
        let up = w[0] < w[1];
        run = if prev_up == Some(up) { run + 1 } else { 1 };
        prev_up = Some(up);
        if run + 1 >= n {
            return Some(i + 2 - run);
        }
    }
    None
}

/// The edge built from `k` alternating extrema of `delta_sequence(set)`:
/// the pairs `(a_p, a_{p+1})` at every other extremum, completed by
/// `a_{p+2}` for odd `k`. Its delta sequence is zigzag shaped.
pub fn zigzag_edge(set: &[BitVertex], positions: &[usize], k: usize) -> Result<Vec<BitVertex>> {
    if k < 2 || positions.len() < k {
        return Err(Error::domain(format!(
            "need k >= 2 and k extrema (k = {k}, {} given)",
            positions.len()
        )));
    }
    let at = |i: usize| {
        set.get(i - 1)
            .copied()
            .ok_or_else(|| Error::domain(format!("position {i} outside the set")))
    };
    let mut edge = Vec::with_capacity(k);
    for &p in positions[..k].iter().step_by(2).take(k / 2) {
        edge.push(at(p)?);
        edge.push(at(p + 1)?);
    }
    if k % 2 == 1 {
        edge.push(at(positions[k - 3] + 2)?);
    }
    Ok(edge)
}

/// For `2m` alternating extrema whose minima strictly increase, the set
/// `{a_p : p a minimum} + {a_{q+1}}` with `q` the last minimum. Its delta
/// sequence is the list of minima, hence increasing.
pub fn minima_chain(set: &[BitVertex], positions: &[usize]) -> Option<Vec<BitVertex>> {
    if positions.len() < 2 || positions.len() % 2 == 1 {
        return None;
    }
    let deltas = delta_sequence(set).ok()?;
    let minima: Vec<usize> = positions.iter().skip(1).step_by(2).copied().collect();
    let increasing = minima.windows(2).all(|w| deltas[w[0] - 1] < deltas[w[1] - 1]);
    if !increasing {
        return None;
    }
    let mut out: Vec<BitVertex> = minima.iter().map(|&p| set[p - 1]).collect();
    out.push(*set.get(*minima.last()?)?);
    Some(out)
}

/// For `2m` alternating extrema, an odd-`k` edge whose last delta is the
/// final minimum and whose third-from-last is the minimum before it:
/// pairs at the last `(k-1)/2` maxima, then `a_{q+1}` with `q` the last
/// minimum.
pub fn tail_zigzag_edge(set: &[BitVertex], positions: &[usize], k: usize) -> Result<Vec<BitVertex>> {
    let len = positions.len();
    if k.is_multiple_of(2) || k < 3 || len % 2 == 1 || len < k - 1 {
        return Err(Error::domain(format!(
            "odd k >= 3 and an even number of at least k-1 extrema required (k={k}, {len} given)"
        )));
    }
    let at = |i: usize| {
        set.get(i - 1)
            .copied()
            .ok_or_else(|| Error::domain(format!("position {i} outside the set")))
    };
    let mut edge = Vec::with_capacity(k);
    for j in (len - (k - 2)..len).step_by(2) {
        let p = positions[j - 1];
        edge.push(at(p)?);
        edge.push(at(p + 1)?);
    }
    edge.push(at(positions[len - 1] + 1)?);
    Ok(edge)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::delta::{classify, DeltaClass};
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    #[test]
    fn small_cases() {
        assert_eq!(
            check_sequence_dichotomy(&[1, 2, 3, 1], 3, 2).unwrap(),
            Dichotomy::MonotoneRun { start: 1 }
        );
        assert_eq!(
            check_sequence_dichotomy(&[3, 1, 2, 4, 5], 4, 2).unwrap(),
            Dichotomy::MonotoneRun { start: 2 }
        );
        assert_eq!(
            check_sequence_dichotomy(&[1, 3, 2, 4, 1], 3, 3).unwrap(),
            Dichotomy::AlternatingExtrema { positions: vec![2, 3, 4] }
        );
        assert_eq!(
            check_sequence_dichotomy(&[1, 3, 2], 3, 3).unwrap(),
            Dichotomy::NotGuaranteed
        );
        assert!(check_sequence_dichotomy(&[1, 1], 2, 2).is_err());
    }

    fn zigzag_pattern(d: &[u32]) -> bool {
        d.windows(2)
            .enumerate()
            .all(|(i, w)| if i % 2 == 0 { w[0] > w[1] } else { w[0] < w[1] })
    }

    fn no_equal_neighbours() -> impl Strategy<Value = Vec<u32>> {
        prop::collection::vec(0u32..6, 1..60).prop_map(|mut v| {
            for i in 1..v.len() {
                if v[i] == v[i - 1] {
                    v[i] += 1;
                }
            }
            v
        })
    }

    fn random_set(n_bits: usize) -> impl Strategy<Value = Vec<BitVertex>> {
        prop::collection::btree_set(0u64..1 << n_bits, 3..40).prop_map(move |s: BTreeSet<u64>| {
            s.into_iter().map(|v| BitVertex::new(n_bits, v).unwrap()).collect()
        })
    }

    proptest! {
        #[test]
        fn long_sequences_are_never_undecided(
            seq in no_equal_neighbours(), n in 1usize..5, k in 1usize..5
        ) {
            let d = check_sequence_dichotomy(&seq, n, k).unwrap();
            if seq.len() >= 2 * k * n - 1 {
                prop_assert_ne!(&d, &Dichotomy::NotGuaranteed);
            }
            match d {
                Dichotomy::MonotoneRun { start } => {
                    let run = &seq[start - 1..start - 1 + n];
                    prop_assert!(
                        run.windows(2).all(|w| w[0] < w[1]) || run.windows(2).all(|w| w[0] > w[1])
                    );
                }
                Dichotomy::AlternatingExtrema { positions } => {
                    let ext = local_extrema(&seq);
                    let i = ext.iter().position(|&(p, _)| p == positions[0]).unwrap();
                    prop_assert_eq!(ext[i].1, Extremum::Max);
                    let want: Vec<usize> = ext[i..i + k].iter().map(|&(p, _)| p).collect();
                    prop_assert_eq!(positions, want);
                }
                Dichotomy::NotGuaranteed => {}
            }
        }

        #[test]
        fn extrema_edges_are_zigzag(set in random_set(10), k in 3usize..8) {
            let deltas = delta_sequence(&set).unwrap();
            let ok = deltas.windows(2).all(|w| w[0] != w[1]);
            prop_assume!(ok);
            if let Dichotomy::AlternatingExtrema { positions } =
                check_sequence_dichotomy(&deltas, deltas.len() + 1, k).unwrap()
            {
                let edge = zigzag_edge(&set, &positions, k).unwrap();
                prop_assert_eq!(edge.len(), k);
                prop_assert!(edge.windows(2).all(|w| w[0] < w[1]));
                let d = delta_sequence(&edge).unwrap();
                prop_assert!(zigzag_pattern(&d), "{:?}", d);
            }
        }

        #[test]
        fn minima_chains_and_tail_edges(set in random_set(12), half in 2usize..6, k in (1usize..4).prop_map(|j| 2 * j + 1)) {
            let deltas = delta_sequence(&set).unwrap();
            let len = 2 * half;
            if let Dichotomy::AlternatingExtrema { positions } =
                check_sequence_dichotomy(&deltas, deltas.len() + 1, len).unwrap()
            {
                if let Some(chain) = minima_chain(&set, &positions) {
                    let d = delta_sequence(&chain).unwrap();
                    let want: Vec<u32> =
                        positions.iter().skip(1).step_by(2).map(|&p| deltas[p - 1]).collect();
                    prop_assert_eq!(d, want);
                }
                if len >= k - 1 {
                    let edge = tail_zigzag_edge(&set, &positions, k).unwrap();
                    let d = delta_sequence(&edge).unwrap();
                    prop_assert_eq!(d[k - 2], deltas[positions[len - 1] - 1]);
                    let strong = deltas[positions[len - 1] - 1] < deltas[positions[len - 3] - 1];
                    let class = classify(&d, k).unwrap();
                    if k >= 5 {
                        prop_assert_eq!(class == DeltaClass::StrongZigzag, strong);
                    }
                    prop_assert!(zigzag_pattern(&d));
                }
            }
        }
    }
}
