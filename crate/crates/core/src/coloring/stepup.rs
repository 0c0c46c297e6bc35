//! Stepping-up colorings on `{0,1}^N`.
//!
//! An edge `a_1 < .. < a_k` is red when its delta sequence is monotone and
//! the base coloring is red on the set of deltas, or when the sequence has
//! the zigzag shape (standard rule) or the strong-zigzag shape (strong
//! rule). Everything else is blue. The colorings are evaluated on demand;
//! tabulating them is only allowed for tiny `N`.

use super::BaseTwoColoring;
use crate::delta::{classify_unchecked, BitVertex, DeltaClass, MAX_BITS};
use crate::error::{Error, Result};
use crate::hypergraph::{check_edge, Color, ColoringOracle, TableColoring};

/// Largest `N` for which [`StepUpColoring::to_table`] will materialise the
/// coloring.
pub const MAX_TABLE_BITS: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StepUpRule {
    /// Zigzag edges are red.
    Standard,
    /// Only strong-zigzag edges are red.
    Strong,
}

/// Whether a construction must sit inside the parameter range where the
/// stepping-up guarantees are proven.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    /// Standard rule needs `k >= 6`; strong rule needs odd `k > 6`.
    Guaranteed,
    /// Any `k >= 3`; no guarantee about the resulting coloring.
    Unverified,
}

fn rule_color(phi: &BaseTwoColoring, deltas: &[u32], rule: StepUpRule) -> Color {
    let k = deltas.len() + 1;
    match classify_unchecked(deltas, k) {
        DeltaClass::Increasing => phi.color(deltas),
        DeltaClass::Decreasing => {
            let mut set = [0u32; MAX_BITS + 1];
            for (slot, &d) in set.iter_mut().zip(deltas.iter().rev()) {
                *slot = d;
            }
            phi.color(&set[..deltas.len()])
        }
        DeltaClass::StrongZigzag => Color::Red,
        DeltaClass::Zigzag => match rule {
            StepUpRule::Standard => Color::Red,
            StepUpRule::Strong => Color::Blue,
        },
        DeltaClass::Other => Color::Blue,
    }
}

fn checked(phi: &BaseTwoColoring, edge: &[BitVertex], k: usize, rule: StepUpRule) -> Result<Color> {
    if k < 3 {
        return Err(Error::domain(format!("stepping up needs k >= 3, got {k}")));
    }
    if phi.uniformity() + 1 != k {
        return Err(Error::domain(format!(
            "base coloring has uniformity {}, expected {}",
            phi.uniformity(),
            k - 1
        )));
    }
    check_edge(edge, k)?;
    let n = phi.vertex_count();
    if let Some(v) = edge.iter().find(|v| v.len() != n) {
        return Err(Error::domain(format!("vertex {v} has length {}, expected {n}", v.len())));
    }
    let deltas: Vec<u32> = edge.windows(2).map(|w| w[0].delta_unchecked(w[1])).collect();
    Ok(rule_color(phi, &deltas, rule))
}

/// Standard stepping-up color of a `k`-edge of `{0,1}^N`.
pub fn step_up_color(phi: &BaseTwoColoring, edge: &[BitVertex], k: usize) -> Result<Color> {
    checked(phi, edge, k, StepUpRule::Standard)
}

/// Strong-zigzag stepping-up color of a `k`-edge of `{0,1}^N`.
pub fn step_up_color_strong(phi: &BaseTwoColoring, edge: &[BitVertex], k: usize) -> Result<Color> {
    checked(phi, edge, k, StepUpRule::Strong)
}

/// Lazy stepping-up oracle over `{0,1}^N`, `N` being the base vertex count.
#[derive(Debug, Clone)]
pub struct StepUpColoring {
    phi: BaseTwoColoring,
    k: usize,
    rule: StepUpRule,
}

impl StepUpColoring {
    pub fn new(phi: BaseTwoColoring, k: usize, rule: StepUpRule, regime: Regime) -> Result<Self> {
        if k < 3 {
            return Err(Error::domain(format!("stepping up needs k >= 3, got {k}")));
        }
        if phi.uniformity() + 1 != k {
            return Err(Error::domain(format!(
                "base coloring has uniformity {}, expected {}",
                phi.uniformity(),
                k - 1
            )));
        }
        let n = phi.vertex_count();
        if n == 0 || n > MAX_BITS {
            return Err(Error::domain(format!("base vertex count {n} outside 1..={MAX_BITS}")));
        }
        if regime == Regime::Guaranteed {
            match rule {
                StepUpRule::Standard if k < 6 => {
                    return Err(Error::Usage(format!(
                        "the standard stepping-up guarantee needs k >= 6 (got {k}); \
                         pass Regime::Unverified to build it anyway"
                    )))
                }
                StepUpRule::Strong if k <= 6 || k.is_multiple_of(2) => {
                    return Err(Error::Usage(format!(
                        "the strong stepping-up guarantee needs odd k > 6 (got {k}); \
                         pass Regime::Unverified to build it anyway"
                    )))
                }
                _ => {}
            }
        }
        Ok(StepUpColoring { phi, k, rule })
    }

    /// The standard rule aimed at forbidding `t` red edges in a `(k+1)`-set.
    /// Refused for `t = 4` with odd `k`, where the strong rule is the one
    /// that works.
    pub fn standard(phi: BaseTwoColoring, k: usize, t: usize, regime: Regime) -> Result<Self> {
        if t == 4 && k % 2 == 1 {
            return Err(Error::Usage(format!(
                "standard stepping up does not handle t = 4 with odd k = {k}; \
                 use the strong rule (StepUpColoring::strong)"
            )));
        }
        if regime == Regime::Guaranteed && t < 4 {
            return Err(Error::Usage(format!(
                "the stepping-up guarantee needs t >= 4, got {t}"
            )));
        }
        StepUpColoring::new(phi, k, StepUpRule::Standard, regime)
    }

    pub fn strong(phi: BaseTwoColoring, k: usize, regime: Regime) -> Result<Self> {
        StepUpColoring::new(phi, k, StepUpRule::Strong, regime)
    }

    pub fn base(&self) -> &BaseTwoColoring {
        &self.phi
    }

    pub fn rule(&self) -> StepUpRule {
        self.rule
    }

    /// Length `N` of the vertex bit strings.
    pub fn bit_length(&self) -> usize {
        self.phi.vertex_count()
    }

    pub fn color_checked(&self, edge: &[BitVertex]) -> Result<Color> {
        checked(&self.phi, edge, self.k, self.rule)
    }

    /// Explicit table over `{1..2^N}`, vertex `v` standing for the bit
    /// string of value `v - 1`. Refused for `N > MAX_TABLE_BITS`.
    pub fn to_table(&self) -> Result<TableColoring> {
        let n = self.bit_length();
        if n > MAX_TABLE_BITS {
            return Err(Error::Capacity(format!(
                "stepping-up tables are limited to N <= {MAX_TABLE_BITS}, got N = {n}"
            )));
        }
        let mut buf = Vec::with_capacity(self.k);
        TableColoring::from_fn(1 << n, self.k, |e| {
            buf.clear();
            buf.extend(e.iter().map(|&v| BitVertex::new(n, u64::from(v - 1)).unwrap()));
            self.color(&buf)
        })
    }
}

impl ColoringOracle<BitVertex> for StepUpColoring {
    fn uniformity(&self) -> usize {
        self.k
    }

    fn color(&self, edge: &[BitVertex]) -> Color {
        let mut deltas = [0u32; MAX_BITS + 1];
        let len = edge.len() - 1;
        for (slot, w) in deltas.iter_mut().zip(edge.windows(2)) {
            *slot = w[0].delta_unchecked(w[1]);
        }
        rule_color(&self.phi, &deltas[..len], self.rule)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::delta::{delta_sequence, universe};
    use crate::hypergraph::subsets_of;

    fn bv(s: &str) -> BitVertex {
        s.parse().unwrap()
    }

    /// A sorted edge whose delta sequence is exactly `deltas`, built by
    /// flipping the indicated coordinate upward at each step. Panics if a
    /// step needs a coordinate that is already 1.
    fn edge_with_deltas(n: usize, deltas: &[u32]) -> Vec<BitVertex> {
        // Walk: to go from a to the next vertex with delta d, keep bits
        // 1..d-1, set bit d to 1 (it must be 0), and clear everything after.
        let mut cur = 0u64;
        let mut out = vec![BitVertex::new(n, 0).unwrap()];
        for &d in deltas {
            let shift = n - d as usize;
            assert_eq!((cur >> shift) & 1, 0, "bit {d} already set");
            let keep = cur >> (shift + 1) << (shift + 1);
            cur = keep | (1 << shift);
            out.push(BitVertex::new(n, cur).unwrap());
        }
        out
    }

    #[test]
    fn k3_decreasing_uses_phi() {
        let e = [bv("00"), bv("01"), bv("10")];
        let red = BaseTwoColoring::constant(2, 2, Color::Red).unwrap();
        let blue = BaseTwoColoring::constant(2, 2, Color::Blue).unwrap();
        assert_eq!(step_up_color(&red, &e, 3).unwrap(), Color::Red);
        assert_eq!(step_up_color(&blue, &e, 3).unwrap(), Color::Blue);
    }

    #[test]
    fn zigzag_red_other_blue_regardless_of_phi() {
        let n = 5;
        let blue = BaseTwoColoring::constant(n, 5, Color::Blue).unwrap();
        let red = BaseTwoColoring::constant(n, 5, Color::Red).unwrap();
        let all = universe(n).unwrap();
        let mut seen_zig = 0;
        let mut seen_other = 0;
        for e in subsets_of(&all, 6).step_by(97) {
            let d = delta_sequence(&e).unwrap();
            let class = crate::delta::classify(&d, 6).unwrap();
            let (b, r) = (
                step_up_color(&blue, &e, 6).unwrap(),
                step_up_color(&red, &e, 6).unwrap(),
            );
            match class {
                DeltaClass::Zigzag => {
                    seen_zig += 1;
                    assert_eq!((b, r), (Color::Red, Color::Red));
                }
                DeltaClass::Other => {
                    seen_other += 1;
                    assert_eq!((b, r), (Color::Blue, Color::Blue));
                }
                _ => assert_eq!((b, r), (Color::Blue, Color::Red)),
            }
        }
        assert!(seen_zig > 0 && seen_other > 0);
    }

    #[test]
    fn strong_rule_examples() {
        let n = 7;
        let blue = BaseTwoColoring::constant(n, 6, Color::Blue).unwrap();
        let red = BaseTwoColoring::constant(n, 6, Color::Red).unwrap();
        let strong = edge_with_deltas(n, &[7, 1, 6, 3, 5, 2]);
        let weak = edge_with_deltas(n, &[7, 1, 6, 2, 5, 3]);
        let mono = edge_with_deltas(n, &[1, 2, 3, 4, 5, 6]);
        assert_eq!(delta_sequence(&strong).unwrap(), vec![7, 1, 6, 3, 5, 2]);
        assert_eq!(delta_sequence(&weak).unwrap(), vec![7, 1, 6, 2, 5, 3]);
        assert_eq!(step_up_color_strong(&blue, &strong, 7).unwrap(), Color::Red);
        assert_eq!(step_up_color_strong(&blue, &weak, 7).unwrap(), Color::Blue);
        assert_eq!(step_up_color(&blue, &weak, 7).unwrap(), Color::Red);
        assert_eq!(step_up_color_strong(&red, &mono, 7).unwrap(), Color::Red);
        assert_eq!(step_up_color_strong(&blue, &mono, 7).unwrap(), Color::Blue);
    }

    #[test]
    fn monotone_feeds_phi_the_delta_set() {
        let n = 6;
        // Red only on {2,3,5,6}.
        let phi = BaseTwoColoring::from_fn(n, 4, |s| {
            if s == [2, 3, 5, 6] {
                Color::Red
            } else {
                Color::Blue
            }
        })
        .unwrap();
        let inc = edge_with_deltas(n, &[2, 3, 5, 6]);
        assert_eq!(step_up_color(&phi, &inc, 5).unwrap(), Color::Red);
        let other = edge_with_deltas(n, &[2, 3, 4, 6]);
        assert_eq!(step_up_color(&phi, &other, 5).unwrap(), Color::Blue);
    }

    #[test]
    fn errors() {
        let phi = BaseTwoColoring::constant(5, 5, Color::Blue).unwrap();
        let e: Vec<BitVertex> = universe(5).unwrap()[..6].to_vec();
        let mut rev = e.clone();
        rev.reverse();
        assert!(step_up_color(&phi, &rev, 6).is_err());
        assert!(step_up_color(&phi, &e[..5], 6).is_err());
        assert!(step_up_color(&phi, &e[..5], 5).is_err());
        let short: Vec<BitVertex> = universe(4).unwrap()[..6].to_vec();
        assert!(step_up_color(&phi, &short, 6).is_err());
    }

    #[test]
    fn regime_and_threshold_gates() {
        let phi6 = BaseTwoColoring::constant(5, 5, Color::Blue).unwrap();
        let phi7 = BaseTwoColoring::constant(5, 6, Color::Blue).unwrap();
        let phi4 = BaseTwoColoring::constant(5, 3, Color::Blue).unwrap();
        assert!(StepUpColoring::standard(phi6.clone(), 6, 4, Regime::Guaranteed).is_ok());
        assert!(matches!(
            StepUpColoring::standard(phi7.clone(), 7, 4, Regime::Guaranteed),
            Err(Error::Usage(_))
        ));
        assert!(StepUpColoring::standard(phi7.clone(), 7, 5, Regime::Guaranteed).is_ok());
        assert!(StepUpColoring::strong(phi7, 7, Regime::Guaranteed).is_ok());
        assert!(StepUpColoring::strong(phi6.clone(), 6, Regime::Guaranteed).is_err());
        assert!(matches!(
            StepUpColoring::standard(phi4.clone(), 4, 5, Regime::Guaranteed),
            Err(Error::Usage(_))
        ));
        assert!(StepUpColoring::standard(phi4, 4, 5, Regime::Unverified).is_ok());
        assert!(StepUpColoring::new(phi6, 5, StepUpRule::Standard, Regime::Unverified).is_err());
    }

    #[test]
    fn table_matches_oracle_and_is_capped() {
        let phi = BaseTwoColoring::random(4, 3, 11).unwrap();
        let c = StepUpColoring::new(phi, 4, StepUpRule::Standard, Regime::Unverified).unwrap();
        let table = c.to_table().unwrap();
        let all = universe(4).unwrap();
        for e in subsets_of(&all, 4) {
            let ids: Vec<u32> = e.iter().map(|v| v.value() as u32 + 1).collect();
            assert_eq!(table.get(&ids).unwrap(), c.color(&e));
            assert_eq!(c.color_checked(&e).unwrap(), c.color(&e));
        }
        let big = BaseTwoColoring::constant(7, 5, Color::Blue).unwrap();
        let c = StepUpColoring::standard(big, 6, 6, Regime::Guaranteed).unwrap();
        assert!(matches!(c.to_table(), Err(Error::Capacity(_))));
    }
}
