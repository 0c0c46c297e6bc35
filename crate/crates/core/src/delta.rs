//! Binary-vector vertices and delta sequences.
//!
//! A [`BitVertex`] is a vector in `{0,1}^N` ordered by the integer it spells
//! with index 1 as the most significant bit. `delta(a, b)` is the least index
//! at which `a` and `b` differ. Indices are 1-based everywhere in this module.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::hypergraph::Vertex;

pub const MAX_BITS: usize = 63;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVertex {
    len: u8,
    bits: u64,
}

impl Vertex for BitVertex {}

impl BitVertex {
    /// Vertex of length `len` whose binary value is `value`.
    pub fn new(len: usize, value: u64) -> Result<Self> {
        if len == 0 || len > MAX_BITS {
            return Err(Error::domain(format!("bit length {len} outside 1..={MAX_BITS}")));
        }
        if value >> len != 0 {
            return Err(Error::domain(format!("value {value} does not fit in {len} bits")));
        }
        Ok(BitVertex {
            len: len as u8,
            bits: value,
        })
    }

    /// From explicit bits, index 1 first.
    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        let mut value = 0u64;
        for &b in bits {
            if b > 1 {
                return Err(Error::domain(format!("bit value {b} is not 0 or 1")));
            }
            value = (value << 1) | u64::from(b);
        }
        BitVertex::new(bits.len(), value)
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn value(&self) -> u64 {
        self.bits
    }

    /// Coordinate `i`, 1-based.
    pub fn bit(&self, i: usize) -> u8 {
        assert!((1..=self.len()).contains(&i), "bit index {i} out of range");
        ((self.bits >> (self.len() - i)) & 1) as u8
    }

    /// `delta` without the length and equality checks.
    #[inline]
    pub(crate) fn delta_unchecked(self, other: BitVertex) -> u32 {
        let x = self.bits ^ other.bits;
        debug_assert!(x != 0);
        self.len as u32 - (63 - x.leading_zeros())
    }
}

impl fmt::Display for BitVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.len() {
            write!(f, "{}", self.bit(i))?;
        }
        Ok(())
    }
}

impl FromStr for BitVertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Error::domain(format!("bad bit character {c:?} in {s:?}"))),
            })
            .collect::<Result<Vec<u8>>>()?;
        BitVertex::from_bits(&bits)
    }
}

/// All `2^n` vertices of `{0,1}^n`, increasing.
pub fn universe(n: usize) -> Result<Vec<BitVertex>> {
    if n > 24 {
        return Err(Error::Capacity(format!("universe {{0,1}}^{n} is too large to list")));
    }
    (0..1u64 << n).map(|v| BitVertex::new(n, v)).collect()
}

fn same_length(a: BitVertex, b: BitVertex) -> Result<()> {
    if a.len != b.len {
        return Err(Error::domain(format!(
            "bit vectors of different lengths {} and {}",
            a.len, b.len
        )));
    }
    Ok(())
}

pub fn bit_compare(a: BitVertex, b: BitVertex) -> Result<Ordering> {
    same_length(a, b)?;
    Ok(a.bits.cmp(&b.bits))
}

/// Least index at which `a` and `b` differ.
pub fn delta(a: BitVertex, b: BitVertex) -> Result<u32> {
    same_length(a, b)?;
    if a == b {
        return Err(Error::domain(format!("delta({a}, {a}) is undefined")));
    }
    Ok(a.delta_unchecked(b))
}

/// `delta(a_i, a_{i+1})` for consecutive members of a strictly increasing set.
pub fn delta_sequence(set: &[BitVertex]) -> Result<Vec<u32>> {
    if set.len() < 2 {
        return Err(Error::domain("a delta sequence needs at least two vertices"));
    }
    set.windows(2)
        .map(|w| {
            if bit_compare(w[0], w[1])? != Ordering::Less {
                return Err(Error::domain(format!(
                    "vertices {} and {} are not strictly increasing",
                    w[0], w[1]
                )));
            }
            Ok(w[0].delta_unchecked(w[1]))
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DeltaClass {
    Increasing,
    Decreasing,
    /// `d_1 > d_2 < d_3 > d_4 < ...`
    Zigzag,
    /// Zigzag with `d_{k-1} < d_{k-3}`; only assigned for odd `k >= 5`.
    StrongZigzag,
    Other,
}

impl DeltaClass {
    pub fn is_monotone(self) -> bool {
        matches!(self, DeltaClass::Increasing | DeltaClass::Decreasing)
    }

    /// True for both zigzag classes.
    pub fn is_zigzag_shaped(self) -> bool {
        matches!(self, DeltaClass::Zigzag | DeltaClass::StrongZigzag)
    }
}

/// Classifies the `k - 1` deltas of a `k`-edge.
///
/// Monotonicity is tested first, so for `k = 3` a pair `d_1 > d_2` is
/// `Decreasing` even though it also has the zigzag shape.
pub fn classify(deltas: &[u32], k: usize) -> Result<DeltaClass> {
    if k < 3 {
        return Err(Error::domain(format!("classification needs k >= 3, got {k}")));
    }
    if deltas.len() != k - 1 {
        return Err(Error::domain(format!(
            "expected {} deltas for k = {k}, got {}",
            k - 1,
            deltas.len()
        )));
    }
    if let Some(i) = deltas.windows(2).position(|w| w[0] == w[1]) {
        return Err(Error::domain(format!(
            "adjacent deltas {} and {} are equal ({})",
            i + 1,
            i + 2,
            deltas[i]
        )));
    }
    Ok(classify_unchecked(deltas, k))
}

#[inline]
pub(crate) fn classify_unchecked(d: &[u32], k: usize) -> DeltaClass {
    if d.windows(2).all(|w| w[0] < w[1]) {
        return DeltaClass::Increasing;
    }
    if d.windows(2).all(|w| w[0] > w[1]) {
        return DeltaClass::Decreasing;
    }
    let zigzag = d
        .windows(2)
        .enumerate()
        .all(|(i, w)| if i % 2 == 0 { w[0] > w[1] } else { w[0] < w[1] });
    if !zigzag {
        return DeltaClass::Other;
    }
    if k % 2 == 1 && k >= 5 && d[k - 2] < d[k - 4] {
        DeltaClass::StrongZigzag
    } else {
        DeltaClass::Zigzag
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaProfile {
    pub deltas: Vec<u32>,
    pub class: DeltaClass,
}

impl DeltaProfile {
    /// Profile of a sorted edge of BitVertex values.
    pub fn of(edge: &[BitVertex]) -> Result<Self> {
        let deltas = delta_sequence(edge)?;
        let class = classify(&deltas, edge.len())?;
        Ok(DeltaProfile { deltas, class })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extremum {
    Min,
    Max,
}

/// Kind of extremum at 1-based position `i`, if `d_i` is one.
pub fn extremum_at(d: &[u32], i: usize) -> Option<Extremum> {
    if i < 2 || i >= d.len() {
        return None;
    }
    let (prev, cur, next) = (d[i - 2], d[i - 1], d[i]);
    if prev > cur && cur < next {
        Some(Extremum::Min)
    } else if prev < cur && cur > next {
        Some(Extremum::Max)
    } else {
        None
    }
}

/// All local extrema with their 1-based positions.
pub fn local_extrema(d: &[u32]) -> Vec<(usize, Extremum)> {
    (2..d.len())
        .filter_map(|i| extremum_at(d, i).map(|e| (i, e)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bv(s: &str) -> BitVertex {
        s.parse().unwrap()
    }

    #[test]
    fn footnote_pair() {
        let a = bv("10110");
        let b = bv("10011");
        assert_eq!(bit_compare(a, b).unwrap(), Ordering::Greater);
        assert_eq!(delta(a, b).unwrap(), 3);
        assert_eq!(delta(b, a).unwrap(), 3);
    }

    #[test]
    fn compare_and_delta_edges() {
        assert_eq!(bit_compare(bv("0110"), bv("0110")).unwrap(), Ordering::Equal);
        assert_eq!(bit_compare(bv("01"), bv("10")).unwrap(), Ordering::Less);
        assert_eq!(delta(bv("0111"), bv("1000")).unwrap(), 1);
        assert!(delta(bv("0111"), bv("0111")).is_err());
        assert!(bit_compare(bv("01"), bv("010")).is_err());
        assert!(delta(bv("01"), bv("010")).is_err());
    }

    #[test]
    fn display_and_parse() {
        let v = BitVertex::from_bits(&[1, 0, 1, 1, 0]).unwrap();
        assert_eq!(v.to_string(), "10110");
        assert_eq!(v.value(), 22);
        assert_eq!(v.bit(1), 1);
        assert_eq!(v.bit(5), 0);
        assert!("10a".parse::<BitVertex>().is_err());
        assert!(BitVertex::new(3, 8).is_err());
    }

    #[test]
    fn sequences() {
        let s = [bv("00"), bv("01"), bv("10")];
        assert_eq!(delta_sequence(&s).unwrap(), vec![2, 1]);
        assert_eq!(delta_sequence(&s[..2]).unwrap(), vec![2]);
        assert!(delta_sequence(&[bv("01"), bv("00")]).is_err());
        assert!(delta_sequence(&[bv("01"), bv("01")]).is_err());
        assert!(delta_sequence(&[bv("01")]).is_err());
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&[5, 2, 4, 1, 3], 6).unwrap(), DeltaClass::Zigzag);
        assert_eq!(classify(&[7, 1, 6, 3, 5, 2], 7).unwrap(), DeltaClass::StrongZigzag);
        assert_eq!(classify(&[7, 1, 6, 2, 5, 3], 7).unwrap(), DeltaClass::Zigzag);
        assert_eq!(classify(&[1, 2, 3, 4, 5], 6).unwrap(), DeltaClass::Increasing);
        assert_eq!(classify(&[5, 4, 3, 2, 1], 6).unwrap(), DeltaClass::Decreasing);
        // Opposite alternation is not zigzag.
        assert_eq!(classify(&[1, 5, 2, 4, 3], 6).unwrap(), DeltaClass::Other);
        assert_eq!(classify(&[2, 1], 3).unwrap(), DeltaClass::Decreasing);
        assert_eq!(classify(&[3, 1, 2], 4).unwrap(), DeltaClass::Zigzag);
        assert!(classify(&[1, 1, 2], 4).is_err());
        assert!(classify(&[1, 2], 4).is_err());
        assert!(classify(&[1], 2).is_err());
    }

    #[test]
    fn extrema() {
        let d = [9, 1, 8, 2, 7, 3];
        assert_eq!(
            local_extrema(&d),
            vec![
                (2, Extremum::Min),
                (3, Extremum::Max),
                (4, Extremum::Min),
                (5, Extremum::Max)
            ]
        );
        assert_eq!(extremum_at(&d, 1), None);
        assert_eq!(extremum_at(&d, 6), None);
    }

    #[test]
    fn universe_is_sorted() {
        let u = universe(4).unwrap();
        assert_eq!(u.len(), 16);
        assert!(u.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(u[5].to_string(), "0101");
    }
}
