//! The tower function and the closed-form bounds on `r_k(k+1, t; n)`.
//!
//! Constants are always supplied by the caller. `log n` is the natural
//! logarithm. A bound `twr_h(x)` is kept symbolically as a height and an
//! argument; [`tower`] evaluates it exactly when the result is small enough.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Default limit on the decimal digits [`tower`] will produce.
pub const TOWER_DIGIT_CAP: u64 = 100_000;

const LOG10_2: f64 = std::f64::consts::LOG10_2;

/// `twr_h(x)` with the default digit cap.
pub fn tower(height: u32, x: &BigUint) -> Result<BigUint> {
    tower_with_cap(height, x, TOWER_DIGIT_CAP)
}

/// `twr_1(x) = x`, `twr_{h+1}(x) = 2^{twr_h(x)}`, refusing results with more
/// than `digit_cap` decimal digits.
pub fn tower_with_cap(height: u32, x: &BigUint, digit_cap: u64) -> Result<BigUint> {
    if height == 0 {
        return Err(Error::domain("tower height must be at least 1"));
    }
    let mut v = x.clone();
    for level in 2..=height {
        // 2^v has floor(v log10 2) + 1 digits.
        let too_big = v.to_f64().is_none_or(|f| f * LOG10_2 + 1.0 > digit_cap as f64);
        if too_big {
            let est = TowerExpr::new(height, x.to_f64().unwrap_or(f64::INFINITY)).digits_hint();
            return Err(Error::Capacity(format!(
                "twr_{height}({x}) exceeds {digit_cap} digits at level {level}: {est}"
            )));
        }
        let shift = v.to_usize().expect("checked against the cap");
        v = BigUint::one() << shift;
    }
    Ok(v)
}

/// `twr_height(arg)`, held symbolically.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TowerExpr {
    pub height: u32,
    pub arg: f64,
}

impl TowerExpr {
    pub fn new(height: u32, arg: f64) -> Self {
        TowerExpr { height, arg }
    }

    /// `twr_h(arg)` as an `f64`, infinite on overflow.
    pub fn value(&self) -> f64 {
        (1..self.height).fold(self.arg, |v, _| v.exp2())
    }

    /// Orders two towers by magnitude, for arguments of at least 1.
    pub fn cmp_magnitude(&self, other: &TowerExpr) -> Option<Ordering> {
        // twr_a(x) = twr_b(twr_{a-b+1}(x)) and twr_b is increasing.
        let (hi, lo, flip) = if self.height >= other.height {
            (self, other, false)
        } else {
            (other, self, true)
        };
        let lifted = TowerExpr::new(hi.height - lo.height + 1, hi.arg).value();
        let ord = lifted.partial_cmp(&lo.arg)?;
        if lifted.is_infinite() && lo.arg.is_infinite() {
            return None;
        }
        Some(if flip { ord.reverse() } else { ord })
    }

    /// Rough size of the decimal expansion.
    pub fn digits_hint(&self) -> String {
        if self.height == 1 {
            return format!("{} digits", self.arg.abs().max(1.0).log10().floor() + 1.0);
        }
        // digits(twr_h(x)) ~ twr_{h-1}(x) log10 2
        let below = TowerExpr::new(self.height - 1, self.arg).value();
        if below.is_finite() {
            let digits = below * LOG10_2;
            if digits < 1e15 {
                return format!("{} digits", digits.floor() + 1.0);
            }
            return format!("about {digits:.3e} digits");
        }
        if self.height >= 3 {
            let two_below = TowerExpr::new(self.height - 2, self.arg).value();
            if two_below.is_finite() {
                return format!(
                    "about 10^{:.3e} digits",
                    two_below * LOG10_2 + LOG10_2.log10()
                );
            }
        }
        format!("digit count itself a tower of height {}", self.height - 2)
    }
}

fn fmt_num(x: f64) -> String {
    if x.fract() == 0.0 && x.abs() < 1e15 {
        format!("{}", x as i64)
    } else if x.abs() >= 1e6 || x.abs() < 1e-3 {
        format!("{x:.4e}")
    } else {
        let s = format!("{x:.4}");
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    }
}

impl fmt::Display for TowerExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.height {
            1 => f.write_str(&fmt_num(self.arg)),
            2 => write!(f, "2^{}", fmt_num(self.arg)),
            h => write!(f, "twr_{h}({})", fmt_num(self.arg)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundRegime {
    /// `t = 2`: polynomial upper bound.
    Polynomial,
    /// `t = 3`: exponential in a power of `n`.
    Exponential,
    /// `4 <= t <= k - 2`: tower of height `t - 1`, lower exponent by parity
    /// of `k - t`.
    Tower(Parity),
    /// `t` in `{k - 1, k}` with `t >= 4`.
    NearComplete,
    /// `t = k + 1 >= 4`: upper bound only.
    Complete,
}

/// One bound: its shape with symbols, and its value for the given inputs.
#[derive(Debug, Clone, PartialEq)]
pub struct Bound {
    pub formula: String,
    pub value: TowerExpr,
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {} ({})", self.formula, self.value, self.value.digits_hint())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub k: usize,
    pub t: usize,
    pub n: u64,
    pub regime: BoundRegime,
    pub lower: Option<Bound>,
    pub upper: Option<Bound>,
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "k={} t={} n={} regime={:?}", self.k, self.t, self.n, self.regime)?;
        match &self.lower {
            Some(b) => writeln!(f, "lower: {b}")?,
            None => writeln!(f, "lower: none stated")?,
        }
        match &self.upper {
            Some(b) => write!(f, "upper: {b}"),
            None => write!(f, "upper: none stated"),
        }
    }
}

fn bound(height: u32, coef_name: &str, coef: f64, n: f64, exp_text: &str, exp: f64, with_log: bool) -> Bound {
    let mut inner = format!("{coef_name}*n^{exp_text}");
    let mut arg = coef * n.powf(exp);
    if with_log {
        inner.push_str("*log n");
        arg *= n.ln();
    }
    let formula = match height {
        1 => inner,
        2 => format!("2^({inner})"),
        h => format!("twr_{h}({inner})"),
    };
    Bound {
        formula,
        value: TowerExpr::new(height, arg),
    }
}

/// Lower and upper bounds on `r_k(k+1, t; n)` with constants `c` (lower)
/// and `c_prime` (upper).
pub fn bound_report(k: usize, t: usize, n: u64, c: f64, c_prime: f64) -> Result<BoundReport> {
    if k < 3 {
        return Err(Error::domain(format!("no bound is stated for k = {k} < 3")));
    }
    if !(2..=k + 1).contains(&t) {
        return Err(Error::domain(format!("no bound is stated for t = {t} outside 2..={}", k + 1)));
    }
    if n < 1 || !(c > 0.0 && c_prime > 0.0) {
        return Err(Error::domain("n and the constants must be positive"));
    }
    let nf = n as f64;
    let h = t as u32 - 1;
    let general_upper = || {
        bound(h, "c'", c_prime, nf, &format!("{}", k + 1 - t), (k + 1 - t) as f64, true)
    };
    let (regime, lower, upper) = match t {
        2 => (
            BoundRegime::Polynomial,
            None,
            Some(bound(1, "c'", c_prime, nf, &format!("{}", k - 1), (k - 1) as f64, false)),
        ),
        3 => (
            BoundRegime::Exponential,
            Some(bound(2, "c", c, nf, &format!("{}", k - 2), (k - 2) as f64, false)),
            Some(bound(2, "c'", c_prime, nf, &format!("{}", k - 2), (k - 2) as f64, true)),
        ),
        _ if t <= k - 2 => {
            let (parity, exp_text, exp) = if (k - t).is_multiple_of(2) {
                (Parity::Even, format!("{}", k + 1 - t), (k + 1 - t) as f64)
            } else {
                (Parity::Odd, format!("({}/2)", k + 1 - t), (k + 1 - t) as f64 / 2.0)
            };
            (
                BoundRegime::Tower(parity),
                Some(bound(h, "c", c, nf, &exp_text, exp, false)),
                Some(general_upper()),
            )
        }
        _ if t <= k => {
            let upper = if t == k {
                bound(k as u32 - 1, "c'", c_prime, nf, "1", 1.0, false)
            } else {
                bound(k as u32 - 2, "c'", c_prime, nf, "2", 2.0, false)
            };
            (
                BoundRegime::NearComplete,
                Some(bound(k as u32 - 3, "c", c, nf, "3", 3.0, false)),
                Some(upper),
            )
        }
        _ => (BoundRegime::Complete, None, Some(general_upper())),
    };
    Ok(BoundReport {
        k,
        t,
        n,
        regime,
        lower,
        upper,
    })
}

/// Exponent of one pigeonhole step: `r_k(k+1, t; n) < 2^{C(inner, k-1)}`
/// where `inner` bounds `r_{k-1}(k, t-1; n-1)`.
pub fn pigeonhole_exponent(inner: &BigUint, k: usize) -> Result<BigUint> {
    if k < 2 {
        return Err(Error::domain(format!("k = {k} below 2")));
    }
    let r = k as u64 - 1;
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..r {
        if inner < &BigUint::from(i + 1) {
            return Ok(BigUint::zero());
        }
        num *= inner - BigUint::from(i);
        den *= BigUint::from(i + 1);
    }
    Ok(num / den)
}

pub fn pigeonhole_step(inner: &BigUint, k: usize) -> Result<TowerExpr> {
    let e = pigeonhole_exponent(inner, k)?;
    Ok(TowerExpr::new(2, e.to_f64().unwrap_or(f64::INFINITY)))
}

/// `log2` of `s * alpha^{-r} * (1 - alpha)^{r - m}`, the on-line game
/// bound up to its constant factor.
pub fn game_bound_log2(s: u64, r: u64, m: u64, alpha: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha < 0.5) {
        return Err(Error::domain(format!("alpha = {alpha} outside (0, 1/2)")));
    }
    if s == 0 {
        return Err(Error::domain("vertex count must be positive"));
    }
    Ok((s as f64).log2() - r as f64 * alpha.log2() + (r as f64 - m as f64) * (1.0 - alpha).log2())
}

/// The choice `alpha = n^{4 - 2k}`.
pub fn game_alpha(n: u64, k: usize) -> f64 {
    (n as f64).powf(4.0 - 2.0 * k as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    /// Repeated exponentiation with u128 checks, independent of shifts.
    fn repeated_pow(h: u32, x: u64) -> Option<u128> {
        let mut v = x as u128;
        for _ in 1..h {
            if v >= 127 {
                return None;
            }
            v = 2u128.pow(v as u32);
        }
        Some(v)
    }

    #[test]
    fn small_towers() {
        assert_eq!(tower(1, &big(5)).unwrap(), big(5));
        assert_eq!(tower(3, &big(2)).unwrap(), big(16));
        assert_eq!(tower(4, &big(2)).unwrap(), big(65536));
        assert_eq!(tower(2, &big(0)).unwrap(), big(1));
        assert!(tower(0, &big(2)).is_err());
        let e = tower(5, &big(2)).unwrap();
        assert_eq!(e.bits(), 65537);
        assert!(matches!(tower(6, &big(2)), Err(Error::Capacity(m)) if m.contains("digits")));
    }

    proptest! {
        #[test]
        fn tower_matches_repeated_pow(h in 1u32..5, x in 0u64..8) {
            if let Some(want) = repeated_pow(h, x) {
                prop_assert_eq!(tower(h, &big(x)).unwrap(), BigUint::from(want));
            }
        }
    }

    #[test]
    fn display_forms() {
        let r = bound_report(6, 4, 10, 1.0, 1.0).unwrap();
        assert_eq!(r.regime, BoundRegime::Tower(Parity::Even));
        assert_eq!(r.lower.as_ref().unwrap().value.to_string(), "twr_3(1000)");
        let r = bound_report(7, 4, 10, 1.0, 1.0).unwrap();
        assert_eq!(r.regime, BoundRegime::Tower(Parity::Odd));
        assert_eq!(r.lower.as_ref().unwrap().value.to_string(), "twr_3(100)");
        let r = bound_report(4, 3, 5, 1.0, 1.0).unwrap();
        assert_eq!(r.lower.as_ref().unwrap().value.to_string(), "2^25");
        assert_eq!(TowerExpr::new(1, 2.5).to_string(), "2.5");
    }

    #[test]
    fn regimes_cover_every_t() {
        for k in 3..=12 {
            for t in 2..=k + 1 {
                let r = bound_report(k, t, 20, 1.0, 1.0).unwrap();
                assert!(r.upper.is_some());
                if let (Some(lo), Some(hi)) = (&r.lower, &r.upper) {
                    assert_ne!(
                        lo.value.cmp_magnitude(&hi.value),
                        Some(Ordering::Greater),
                        "k={k} t={t}"
                    );
                }
            }
        }
        assert!(bound_report(2, 2, 5, 1.0, 1.0).is_err());
        assert!(bound_report(5, 7, 5, 1.0, 1.0).is_err());
        assert!(bound_report(5, 1, 5, 1.0, 1.0).is_err());
    }

    #[test]
    fn magnitude_comparison() {
        let a = TowerExpr::new(3, 3.0); // 256
        let b = TowerExpr::new(2, 8.0); // 256
        let c = TowerExpr::new(2, 9.0);
        assert_eq!(a.cmp_magnitude(&b), Some(Ordering::Equal));
        assert_eq!(a.cmp_magnitude(&c), Some(Ordering::Less));
        assert_eq!(c.cmp_magnitude(&a), Some(Ordering::Greater));
        assert_eq!(TowerExpr::new(3, 3.0).value(), 256.0);
    }

    #[test]
    fn pigeonhole() {
        assert_eq!(pigeonhole_exponent(&big(10), 3).unwrap(), big(45));
        assert_eq!(pigeonhole_exponent(&big(2), 4).unwrap(), big(0));
        assert_eq!(pigeonhole_step(&big(10), 3).unwrap().to_string(), "2^45");
    }

    #[test]
    fn game_bound() {
        // s * alpha^-r * (1-alpha)^(r-m) at alpha = 1/4, s = 8, r = 2, m = 3.
        let want = (8.0f64 * 16.0 * (0.75f64).powi(-1)).log2();
        assert!((game_bound_log2(8, 2, 3, 0.25).unwrap() - want).abs() < 1e-12);
        assert!(game_bound_log2(8, 2, 3, 0.5).is_err());
        assert_eq!(game_alpha(3, 3), 1.0 / 9.0);
    }

    #[test]
    fn digit_hints() {
        assert_eq!(TowerExpr::new(1, 12345.0).digits_hint(), "5 digits");
        assert_eq!(TowerExpr::new(3, 1000.0).digits_hint(), "about 3.226e300 digits");
        assert!(TowerExpr::new(4, 1000.0).digits_hint().starts_with("about 10^"));
        // 2^25 = 33554432
        assert_eq!(TowerExpr::new(2, 25.0).digits_hint(), "8 digits");
        assert_eq!(TowerExpr::new(3, 4.0).digits_hint(), "5 digits");
    }
}
