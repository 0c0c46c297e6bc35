//! Finders for the target configurations: blue cliques, `(k+1)`-sets with
//! many red edges, and the ordered configurations `F` and `F_t`.
//!
//! All finders report the colex-first witness, so serial and parallel runs
//! agree.

use rayon::prelude::*;

use super::{check_sorted, for_each_subset, par_find_first_subset, Color, ColoringOracle, Vertex};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConfigurationKind {
    /// `n` vertices whose `k`-subsets are all blue.
    BlueClique,
    /// `k + 1` vertices spanning at least `t` red edges.
    RedHt,
    /// Ordered `a_1 < .. < a_{k+1}` with red `(a_1..a_k)` and `(a_1..a_{k-1}, a_{k+1})`.
    RedF,
    /// Ordered `k + 1` vertices with at least `t` red edges including `(a_1..a_k)`.
    RedFt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigurationWitness<V> {
    pub kind: ConfigurationKind,
    pub vertices: Vec<V>,
    /// Red edges inside `vertices`, colex order. Empty for a blue clique.
    pub red_edges: Vec<Vec<V>>,
}

impl<V: Vertex> ConfigurationWitness<V> {
    /// Re-checks the witness against an oracle. `t` is ignored for
    /// `BlueClique` and `RedF`.
    pub fn verify<O: ColoringOracle<V>>(&self, oracle: &O, t: usize) -> bool {
        self.check(oracle.uniformity(), t, |e| Some(oracle.color(e)))
    }

    /// Re-checks the witness against a possibly partial coloring of
    /// `k`-edges; `None` from `lookup` counts as a failure.
    pub fn check(&self, k: usize, t: usize, lookup: impl Fn(&[V]) -> Option<Color>) -> bool {
        if check_sorted(&self.vertices).is_err() {
            return false;
        }
        let is_red = |e: &[V]| lookup(e) == Some(Color::Red);
        let edges_ok = |edges: &[Vec<V>]| {
            let mut seen: Vec<&Vec<V>> = edges.iter().collect();
            seen.sort();
            seen.dedup();
            seen.len() == edges.len()
                && edges.iter().all(|e| {
                    e.len() == k
                        && check_sorted(e).is_ok()
                        && e.iter().all(|v| self.vertices.binary_search(v).is_ok())
                        && is_red(e)
                })
        };
        let v = &self.vertices;
        match self.kind {
            ConfigurationKind::BlueClique => {
                // Fewer than k vertices form a blue clique vacuously.
                let mut ok = !v.is_empty() && self.red_edges.is_empty();
                for_each_subset(v, k, |e| ok &= lookup(e) == Some(Color::Blue));
                ok
            }
            ConfigurationKind::RedHt => {
                v.len() == k + 1 && self.red_edges.len() >= t && edges_ok(&self.red_edges)
            }
            ConfigurationKind::RedFt => {
                v.len() == k + 1
                    && self.red_edges.len() >= t
                    && self.red_edges.iter().any(|e| e[..] == v[..k])
                    && edges_ok(&self.red_edges)
            }
            ConfigurationKind::RedF => {
                if v.len() != k + 1 || k == 0 || self.red_edges.len() != 2 {
                    return false;
                }
                let first = v[..k].to_vec();
                let mut second = v[..k - 1].to_vec();
                second.push(v[k]);
                self.red_edges[0] == first && self.red_edges[1] == second && edges_ok(&self.red_edges)
            }
        }
    }
}

/// Red edges of a sorted set, in colex order (drop the largest vertex first).
fn red_edges_of<V: Vertex, O: ColoringOracle<V>>(oracle: &O, set: &[V]) -> Vec<Vec<V>> {
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(set.len());
    for skip in (0..set.len()).rev() {
        buf.clear();
        buf.extend(set.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v));
        if oracle.color(&buf).is_red() {
            out.push(buf.clone());
        }
    }
    out
}

fn count_red_unchecked<V: Vertex, O: ColoringOracle<V>>(oracle: &O, set: &[V]) -> usize {
    let mut buf = Vec::with_capacity(set.len());
    (0..set.len())
        .filter(|&skip| {
            buf.clear();
            buf.extend(set.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v));
            oracle.color(&buf).is_red()
        })
        .count()
}

/// Number of red `k`-subsets of a `(k+1)`-set.
pub fn red_count<V: Vertex, O: ColoringOracle<V>>(oracle: &O, set: &[V]) -> Result<usize> {
    let k = oracle.uniformity();
    if set.len() != k + 1 {
        return Err(Error::domain(format!(
            "red_count needs {} vertices, got {}",
            k + 1,
            set.len()
        )));
    }
    check_sorted(set)?;
    Ok(count_red_unchecked(oracle, set))
}

/// Colex-first `n`-subset of `domain` with all `k`-subsets blue.
///
/// Backtracks from the largest vertex down, which visits candidate sets in
/// colex order while pruning any partial set that already spans a red edge.
pub fn find_blue_clique<V: Vertex, O: ColoringOracle<V>>(
    oracle: &O,
    n: usize,
    domain: &[V],
) -> Result<Option<ConfigurationWitness<V>>> {
    let k = oracle.uniformity();
    if n < k {
        return Err(Error::domain(format!("clique size {n} is below uniformity {k}")));
    }
    check_sorted(domain)?;
    if n > domain.len() {
        return Ok(None);
    }
    if n == 0 {
        return Ok(Some(ConfigurationWitness {
            kind: ConfigurationKind::BlueClique,
            vertices: Vec::new(),
            red_edges: Vec::new(),
        }));
    }

    struct Dfs<'a, V, O> {
        oracle: &'a O,
        domain: &'a [V],
        k: usize,
        // Chosen vertices in increasing order; new ones go in front.
        chosen: Vec<V>,
        edge: Vec<V>,
    }

    impl<V: Vertex, O: ColoringOracle<V>> Dfs<'_, V, O> {
        fn fits(&mut self, x: V) -> bool {
            if self.chosen.len() + 1 < self.k {
                return true;
            }
            let mut ok = true;
            let (oracle, edge) = (self.oracle, &mut self.edge);
            for_each_subset(&self.chosen, self.k - 1, |sub| {
                if !ok {
                    return;
                }
                edge.clear();
                edge.push(x);
                edge.extend_from_slice(sub);
                ok = oracle.color(edge) == Color::Blue;
            });
            ok
        }

        fn extend(&mut self, below: usize, remaining: usize) -> bool {
            if remaining == 0 {
                return true;
            }
            for x in (remaining - 1)..below {
                let v = self.domain[x];
                if self.fits(v) {
                    self.chosen.insert(0, v);
                    if self.extend(x, remaining - 1) {
                        return true;
                    }
                    self.chosen.remove(0);
                }
            }
            false
        }
    }

    let found = (n - 1..domain.len()).into_par_iter().find_map_first(|top| {
        let mut dfs = Dfs {
            oracle,
            domain,
            k,
            chosen: vec![domain[top]],
            edge: Vec::with_capacity(k),
        };
        if k == 1 && oracle.color(&[domain[top]]) == Color::Red {
            return None;
        }
        dfs.extend(top, n - 1).then_some(dfs.chosen)
    });
    Ok(found.map(|vertices| ConfigurationWitness {
        kind: ConfigurationKind::BlueClique,
        vertices,
        red_edges: Vec::new(),
    }))
}

/// Colex-first `(k+1)`-subset of `domain` spanning at least `t` red edges.
pub fn find_red_configuration<V: Vertex, O: ColoringOracle<V>>(
    oracle: &O,
    t: usize,
    domain: &[V],
) -> Result<Option<ConfigurationWitness<V>>> {
    let k = oracle.uniformity();
    if !(2..=k + 1).contains(&t) {
        return Err(Error::domain(format!("threshold t = {t} outside 2..={}", k + 1)));
    }
    check_sorted(domain)?;
    Ok(par_find_first_subset(domain, k + 1, |set| {
        (count_red_unchecked(oracle, set) >= t).then(|| ConfigurationWitness {
            kind: ConfigurationKind::RedHt,
            vertices: set.to_vec(),
            red_edges: red_edges_of(oracle, set),
        })
    }))
}

/// Colex-first ordered `(k+1)`-set whose initial edge `(a_1..a_k)` is red
/// and which spans at least `t` red edges.
pub fn find_red_ordered_ft<V: Vertex, O: ColoringOracle<V>>(
    oracle: &O,
    t: usize,
    domain: &[V],
) -> Result<Option<ConfigurationWitness<V>>> {
    let k = oracle.uniformity();
    if t < 2 {
        return Err(Error::domain(format!("threshold t = {t} must be at least 2")));
    }
    check_sorted(domain)?;
    Ok(par_find_first_subset(domain, k + 1, |set| {
        if !oracle.color(&set[..k]).is_red() || count_red_unchecked(oracle, set) < t {
            return None;
        }
        Some(ConfigurationWitness {
            kind: ConfigurationKind::RedFt,
            vertices: set.to_vec(),
            red_edges: red_edges_of(oracle, set),
        })
    }))
}

/// Colex-first ordered `F`: vertices `a_1 < .. < a_{k+1}` with both
/// `(a_1..a_k)` and `(a_1..a_{k-1}, a_{k+1})` red.
pub fn find_red_ordered_f<V: Vertex, O: ColoringOracle<V>>(
    oracle: &O,
    domain: &[V],
) -> Result<Option<ConfigurationWitness<V>>> {
    let k = oracle.uniformity();
    if k == 0 {
        return Err(Error::domain("ordered F needs uniformity at least 1"));
    }
    check_sorted(domain)?;
    Ok(par_find_first_subset(domain, k + 1, |set| {
        let first = set[..k].to_vec();
        let mut second = set[..k - 1].to_vec();
        second.push(set[k]);
        (oracle.color(&first).is_red() && oracle.color(&second).is_red()).then(|| {
            ConfigurationWitness {
                kind: ConfigurationKind::RedF,
                vertices: set.to_vec(),
                red_edges: vec![first, second],
            }
        })
    }))
}

#[cfg(test)]
mod tests {
    use super::super::{subsets_of, FnColoring, Monochrome, TableColoring};
    use super::*;

    const RED: Monochrome = Monochrome { k: 3, color: Color::Red };
    const BLUE: Monochrome = Monochrome { k: 3, color: Color::Blue };

    fn domain(n: u32) -> Vec<u32> {
        (1..=n).collect()
    }

    #[test]
    fn red_count_monochrome() {
        assert_eq!(red_count(&RED, &[1u32, 4, 5, 9]).unwrap(), 4);
        assert_eq!(red_count(&BLUE, &[1u32, 4, 5, 9]).unwrap(), 0);
        assert!(matches!(red_count(&RED, &[1u32, 2, 3]), Err(Error::Domain(_))));
        assert!(red_count(&RED, &[1u32, 3, 2, 4]).is_err());
    }

    #[test]
    fn blue_clique_basics() {
        let w = find_blue_clique(&BLUE, 3, &domain(6)).unwrap().unwrap();
        assert_eq!(w.vertices, vec![1, 2, 3]);
        assert!(w.verify(&BLUE, 0));
        assert!(find_blue_clique(&RED, 4, &domain(6)).unwrap().is_none());
        assert!(find_blue_clique(&BLUE, 2, &domain(6)).is_err());
        assert!(find_blue_clique(&BLUE, 7, &domain(6)).unwrap().is_none());
    }

    #[test]
    fn red_configuration_basics() {
        let w = find_red_configuration(&RED, 2, &domain(4)).unwrap().unwrap();
        assert_eq!(w.vertices, vec![1, 2, 3, 4]);
        assert_eq!(w.red_edges.len(), 4);
        assert_eq!(w.red_edges[0], vec![1, 2, 3]);
        assert!(w.verify(&RED, 4));
        assert!(find_red_configuration(&BLUE, 2, &domain(7)).unwrap().is_none());
        assert!(find_red_configuration(&RED, 1, &domain(4)).is_err());
        assert!(find_red_configuration(&RED, 5, &domain(4)).is_err());
    }

    #[test]
    fn ordered_ft_basics() {
        let w = find_red_ordered_ft(&RED, 3, &domain(4)).unwrap().unwrap();
        assert_eq!(w.red_edges[0], vec![1, 2, 3]);
        assert!(w.verify(&RED, 3));
        let only_initial = FnColoring::new(3, |e: &[u32]| {
            if e == [1, 2, 3] {
                Color::Red
            } else {
                Color::Blue
            }
        });
        assert!(find_red_ordered_ft(&only_initial, 2, &domain(4)).unwrap().is_none());
        assert!(find_red_ordered_ft(&RED, 1, &domain(4)).is_err());
    }

    #[test]
    fn ordered_f_basics() {
        let two = Monochrome { k: 2, color: Color::Red };
        let w = find_red_ordered_f(&two, &domain(3)).unwrap().unwrap();
        assert_eq!(w.red_edges, vec![vec![1, 2], vec![1, 3]]);
        assert!(w.verify(&two, 0));
        let blue = Monochrome { k: 2, color: Color::Blue };
        assert!(find_red_ordered_f(&blue, &domain(5)).unwrap().is_none());
    }

    #[test]
    fn tampered_witnesses_fail() {
        let w = find_red_configuration(&RED, 2, &domain(4)).unwrap().unwrap();
        assert!(!w.verify(&BLUE, 2));
        let mut dup = w.clone();
        dup.red_edges[1] = dup.red_edges[0].clone();
        assert!(!dup.verify(&RED, 2));
        let mut outside = w.clone();
        outside.red_edges[0] = vec![1, 2, 5];
        assert!(!outside.verify(&RED, 2));
    }

    #[test]
    fn blue_clique_agrees_with_plain_scan() {
        // A small structured coloring with both colors present.
        let table = TableColoring::from_fn(9, 3, |e| {
            if (e[0] * 7 + e[1] * 3 + e[2]) % 5 == 0 {
                Color::Red
            } else {
                Color::Blue
            }
        })
        .unwrap();
        let dom = domain(9);
        for n in 3..=7 {
            let plain = subsets_of(&dom, n).find(|s| {
                subsets_of(s, 3).all(|e| table.get(&e).unwrap() == Color::Blue)
            });
            let got = find_blue_clique(&table, n, &dom).unwrap().map(|w| w.vertices);
            assert_eq!(got, plain, "n = {n}");
        }
    }
}
