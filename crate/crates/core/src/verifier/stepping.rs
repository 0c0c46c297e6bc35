//! Exhaustive checks of the stepping-up colorings on small cubes.
//!
//! The base coloring must first avoid a red `(k-1)`-uniform configuration
//! with `t - 1` red edges and a blue `n`-clique. Then the stepped-up
//! coloring on `{0,1}^N` is scanned for `(k+1)`-sets with `t` red edges and
//! for blue cliques of the target size, the latter only when the target
//! fits inside `2^N` vertices.

use std::fmt;

use crate::coloring::{BaseTwoColoring, Regime, StepUpColoring};
use crate::delta::{universe, BitVertex};
use crate::error::{Error, Result};
use crate::hypergraph::{
    binomial, find_blue_clique, find_red_configuration, par_fold_subsets, Color, ColoringOracle,
    ConfigurationKind, ConfigurationWitness,
};

/// Largest number of `(k+1)`-subsets of `{0,1}^N` the red-side scan visits.
pub const SCAN_GUARD: u64 = 50_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SteppingMode {
    Standard,
    Strong,
}

impl SteppingMode {
    /// Size of the blue clique the stepped-up coloring must avoid.
    pub fn blue_target(self, k: usize, n: usize) -> usize {
        match self {
            SteppingMode::Standard => 2 * k * n,
            SteppingMode::Strong => 4 * n * n,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BlueSide {
    Checked {
        target: usize,
        witness: Option<ConfigurationWitness<BitVertex>>,
    },
    /// The target exceeds the `2^N` available vertices.
    Vacuous { target: usize, universe: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    CounterWitness,
    VacuousPrecondition,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::CounterWitness => "counter-witness",
            Verdict::VacuousPrecondition => "vacuous-precondition",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SteppingReport {
    pub verdict: Verdict,
    /// Why the precondition failed, when it did.
    pub precondition_failure: Option<String>,
    /// Most red edges in any `(k+1)`-set; `None` when not scanned.
    pub max_red: Option<usize>,
    pub red_witness: Option<ConfigurationWitness<BitVertex>>,
    pub blue: Option<BlueSide>,
}

/// Most red edges over all `(k+1)`-subsets of `domain`, with the
/// colex-first subset reaching `threshold` red edges.
pub fn red_scan<O: ColoringOracle<BitVertex>>(
    oracle: &O,
    domain: &[BitVertex],
    threshold: usize,
) -> (usize, Option<Vec<BitVertex>>) {
    let k = oracle.uniformity();
    par_fold_subsets(
        domain,
        k + 1,
        || (0usize, None::<Vec<BitVertex>>),
        |(best, first), set| {
            let mut edge = [set[0]; 64];
            let mut red = 0;
            for skip in 0..=k {
                let mut j = 0;
                for (i, &v) in set.iter().enumerate() {
                    if i != skip {
                        edge[j] = v;
                        j += 1;
                    }
                }
                if oracle.color(&edge[..k]) == Color::Red {
                    red += 1;
                }
            }
            let first = first.or_else(|| (red >= threshold).then(|| set.to_vec()));
            (best.max(red), first)
        },
        |(a, fa), (b, fb)| (a.max(b), fa.or(fb)),
    )
}

fn red_edges_of<O: ColoringOracle<BitVertex>>(oracle: &O, set: &[BitVertex]) -> Vec<Vec<BitVertex>> {
    let k = oracle.uniformity();
    let mut out: Vec<Vec<BitVertex>> = (0..=k)
        .rev()
        .map(|skip| {
            set.iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, &v)| v)
                .collect::<Vec<_>>()
        })
        .filter(|e| oracle.color(e) == Color::Red)
        .collect();
    out.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
    out
}

/// Builds the stepped-up coloring for `mode` without the parameter-range
/// gate, except that the standard rule still refuses `t = 4` with odd `k`.
pub fn stepped_coloring(
    phi: &BaseTwoColoring,
    k: usize,
    t: usize,
    mode: SteppingMode,
) -> Result<StepUpColoring> {
    match mode {
        SteppingMode::Standard => StepUpColoring::standard(phi.clone(), k, t, Regime::Unverified),
        SteppingMode::Strong => StepUpColoring::strong(phi.clone(), k, Regime::Unverified),
    }
}

/// Checks that the stepped-up coloring of `phi` has no `(k+1)`-set with `t`
/// red edges and no blue clique of the mode's target size.
pub fn check_stepping_conclusion(
    phi: &BaseTwoColoring,
    k: usize,
    t: usize,
    n: usize,
    mode: SteppingMode,
) -> Result<SteppingReport> {
    if !(3..=k + 1).contains(&t) {
        return Err(Error::domain(format!("t = {t} outside 3..={}", k + 1)));
    }
    if n + 1 < k {
        return Err(Error::domain(format!("n = {n} below k - 1 = {}", k - 1)));
    }
    let oracle = stepped_coloring(phi, k, t, mode)?;

    let base_vertices = phi.table().vertices();
    let failure = if let Some(w) = find_red_configuration(phi, t - 1, &base_vertices)? {
        Some(format!("base coloring has {} red edges on {:?}", w.red_edges.len(), w.vertices))
    } else {
        find_blue_clique(phi, n, &base_vertices)?
            .map(|w| format!("base coloring has a blue {n}-clique on {:?}", w.vertices))
    };
    if failure.is_some() {
        return Ok(SteppingReport {
            verdict: Verdict::VacuousPrecondition,
            precondition_failure: failure,
            max_red: None,
            red_witness: None,
            blue: None,
        });
    }

    let bits = phi.vertex_count();
    let size = 1usize << bits;
    let sets = binomial(size as u64, k as u64 + 1);
    if sets > SCAN_GUARD {
        return Err(Error::Capacity(format!(
            "C(2^{bits}, {}) = {sets} sets exceeds the scan guard {SCAN_GUARD}",
            k + 1
        )));
    }
    let domain = universe(bits)?;
    let (max_red, first) = red_scan(&oracle, &domain, t);
    let red_witness = first.map(|vertices| ConfigurationWitness {
        kind: ConfigurationKind::RedHt,
        red_edges: red_edges_of(&oracle, &vertices),
        vertices,
    });

    let target = mode.blue_target(k, n);
    let blue = if target > size {
        BlueSide::Vacuous {
            target,
            universe: size,
        }
    } else {
        BlueSide::Checked {
            target,
            witness: find_blue_clique(&oracle, target, &domain)?,
        }
    };
    let blue_found = matches!(blue, BlueSide::Checked { witness: Some(_), .. });
    Ok(SteppingReport {
        verdict: if red_witness.is_some() || blue_found {
            Verdict::CounterWitness
        } else {
            Verdict::Pass
        },
        precondition_failure: None,
        max_red: Some(max_red),
        red_witness,
        blue: Some(blue),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::red_count;

    fn blue_base(n: usize, k: usize) -> BaseTwoColoring {
        BaseTwoColoring::constant(n, k - 1, Color::Blue).unwrap()
    }

    #[test]
    fn red_scan_matches_serial_counts() {
        let phi = BaseTwoColoring::random(4, 3, 9).unwrap();
        let oracle = stepped_coloring(&phi, 4, 3, SteppingMode::Standard).unwrap();
        let domain = universe(4).unwrap();
        let (max, first) = red_scan(&oracle, &domain, 3);
        let mut serial_max = 0;
        let mut serial_first = None;
        for set in crate::hypergraph::subsets_of(&domain, 5) {
            let r = red_count(&oracle, &set).unwrap();
            serial_max = serial_max.max(r);
            if r >= 3 && serial_first.is_none() {
                serial_first = Some(set);
            }
        }
        assert_eq!(max, serial_max);
        assert_eq!(first, serial_first);
    }

    #[test]
    fn all_red_base_is_vacuous() {
        // On [6] the single 6-set carries six red 5-edges; the precondition
        // fails before the (too large) cube is ever scanned.
        let phi = BaseTwoColoring::constant(6, 5, Color::Red).unwrap();
        let r = check_stepping_conclusion(&phi, 6, 4, 6, SteppingMode::Standard).unwrap();
        assert_eq!(r.verdict, Verdict::VacuousPrecondition);
        assert!(r.max_red.is_none());
    }

    #[test]
    fn blue_base_with_small_n_is_vacuous() {
        // A blue 5-clique exists in an all-blue 5-uniform coloring on [5].
        let r = check_stepping_conclusion(&blue_base(5, 6), 6, 4, 5, SteppingMode::Standard).unwrap();
        assert_eq!(r.verdict, Verdict::VacuousPrecondition);
    }

    #[test]
    fn counter_witness_is_reported_and_verifiable() {
        // k = 4 is outside the proven range; the standard rule with t = 3
        // does produce sets with three red edges.
        let phi = BaseTwoColoring::constant(4, 3, Color::Red).unwrap();
        let oracle = stepped_coloring(&phi, 4, 3, SteppingMode::Standard).unwrap();
        let (max, first) = red_scan(&oracle, &universe(4).unwrap(), 3);
        assert!(max >= 3);
        let set = first.unwrap();
        let w = ConfigurationWitness {
            kind: ConfigurationKind::RedHt,
            red_edges: red_edges_of(&oracle, &set),
            vertices: set,
        };
        assert!(w.verify(&oracle, 3));
    }

    #[test]
    fn standard_rule_refused_for_t4_odd_k() {
        assert!(matches!(
            check_stepping_conclusion(&blue_base(4, 5), 5, 4, 6, SteppingMode::Standard),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn guard() {
        assert!(matches!(
            check_stepping_conclusion(&blue_base(6, 6), 6, 4, 7, SteppingMode::Standard),
            Err(Error::Capacity(_))
        ));
    }
}
