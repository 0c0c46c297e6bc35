use super::base::rank_1based;
use super::KaryBaseColoring;
use crate::error::{Error, Result};
use crate::hypergraph::{check_edge, Color, ColoringOracle};

/// Probability that a `k`-set is red under a uniform random base: `k^-k`.
pub fn red_probability(k: usize) -> f64 {
    (k as f64).powi(-(k as i32))
}

/// A `k`-set `a_1 < .. < a_k` is red iff `phi(e - a_i) = i` for every `i`.
pub fn rank_color(phi: &KaryBaseColoring, edge: &[u32]) -> Result<Color> {
    check_edge(edge, phi.k())?;
    if edge.first() == Some(&0) || edge.last().is_some_and(|&v| v as usize > phi.vertex_count()) {
        return Err(Error::domain(format!(
            "edge {edge:?} outside [{}]",
            phi.vertex_count()
        )));
    }
    Ok(rank_color_unchecked(phi, edge))
}

fn rank_color_unchecked(phi: &KaryBaseColoring, edge: &[u32]) -> Color {
    let k = edge.len();
    let mut sub = [0u32; 32];
    let all_match = (0..k).all(|skip| {
        let mut len = 0;
        for (i, &v) in edge.iter().enumerate() {
            if i != skip {
                sub[len] = v;
                len += 1;
            }
        }
        phi.values()[rank_1based(&sub[..len])] as usize == skip + 1
    });
    if all_match {
        Color::Red
    } else {
        Color::Blue
    }
}

/// The rank coloring as an oracle over `[N]`.
#[derive(Debug, Clone)]
pub struct RankColoring {
    phi: KaryBaseColoring,
}

impl RankColoring {
    pub fn new(phi: KaryBaseColoring) -> Result<Self> {
        if phi.k() > 32 {
            return Err(Error::domain(format!("rank coloring supports k <= 32, got {}", phi.k())));
        }
        Ok(RankColoring { phi })
    }

    pub fn base(&self) -> &KaryBaseColoring {
        &self.phi
    }

    pub fn vertices(&self) -> Vec<u32> {
        (1..=self.phi.vertex_count() as u32).collect()
    }
}

impl ColoringOracle<u32> for RankColoring {
    fn uniformity(&self) -> usize {
        self.phi.k()
    }

    fn color(&self, edge: &[u32]) -> Color {
        rank_color_unchecked(&self.phi, edge)
    }
}

#[cfg(test)]
mod tests {
    use super::super::random_base;
    use super::*;
    use crate::hypergraph::{enumerate_k_subsets, red_count};

    fn base_from(n: usize, k: usize, f: impl Fn(&[u32]) -> u8) -> KaryBaseColoring {
        KaryBaseColoring::from_fn(n, k, |s| f(s)).unwrap()
    }

    #[test]
    fn forced_red() {
        // phi({2,3}) = 1, phi({1,3}) = 2, phi({1,2}) = 3
        let phi = base_from(3, 3, |s| match s {
            [2, 3] => 1,
            [1, 3] => 2,
            _ => 3,
        });
        assert_eq!(rank_color(&phi, &[1, 2, 3]).unwrap(), Color::Red);
    }

    #[test]
    fn one_mismatch_is_blue() {
        for other in 1..=3u8 {
            let phi = base_from(3, 3, |s| if s == [2, 3] { 2 } else { other });
            assert_eq!(rank_color(&phi, &[1, 2, 3]).unwrap(), Color::Blue);
        }
    }

    #[test]
    fn rejects_bad_edges() {
        let phi = random_base(5, 3, 1).unwrap();
        assert!(rank_color(&phi, &[1, 2]).is_err());
        assert!(rank_color(&phi, &[1, 2, 6]).is_err());
        assert!(rank_color(&phi, &[2, 1, 3]).is_err());
    }

    #[test]
    fn never_three_red_in_a_four_set_small_n() {
        for seed in 0..50 {
            let oracle = RankColoring::new(random_base(8, 3, seed).unwrap()).unwrap();
            for s in enumerate_k_subsets(8, 4) {
                assert!(red_count(&oracle, &s).unwrap() <= 2);
            }
        }
    }

    #[test]
    fn oracle_matches_checked_function() {
        let phi = random_base(7, 4, 9).unwrap();
        let oracle = RankColoring::new(phi.clone()).unwrap();
        for e in enumerate_k_subsets(7, 4) {
            assert_eq!(oracle.color(&e), rank_color(&phi, &e).unwrap());
        }
    }

    #[test]
    fn probability() {
        assert!((red_probability(3) - 1.0 / 27.0).abs() < 1e-15);
        assert!((red_probability(4) - 1.0 / 256.0).abs() < 1e-15);
    }
}
