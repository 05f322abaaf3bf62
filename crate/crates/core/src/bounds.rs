//! Closed-form palette bounds and the parameter-regime dispatch used both to
//! pick a coloring strategy and to judge achieved palette sizes.
//!
//! All regime predicates are evaluated in integer arithmetic:
//! `delta >= sqrt(n-1) - 1` is `(delta+1)^2 >= n-1` and
//! `delta <= sqrt(n-1) - 2` is `(delta+2)^2 <= n-1`.

use crate::error::Error;
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegimeTag {
    /// `delta == n-1`: the graph is complete and needs no colors.
    Complete,
    /// `(delta+1)^2 >= n-1` and `n >= 290`: bound `3n/(delta+1) + 5`.
    High,
    /// `16 <= delta` and `(delta+2)^2 <= n-1`: bound `4n/(delta+1) + 5`.
    Mid,
    /// `6 <= delta <= 15` and `(delta+2)^2 <= n-1`: bound
    /// `4n/(delta+1) + C(delta)`.
    Low,
    /// `3 <= delta <= 5`: spanning-tree leaf bounds.
    Tree,
    /// `delta <= 2` and all parameter gaps: only the generic `n - 2` holds.
    Fallback,
}

impl RegimeTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            RegimeTag::Complete => "complete",
            RegimeTag::High => "high",
            RegimeTag::Mid => "mid",
            RegimeTag::Low => "low",
            RegimeTag::Tree => "tree",
            RegimeTag::Fallback => "fallback",
        }
    }
}

impl std::fmt::Display for RegimeTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Regime {
    pub tag: RegimeTag,
    /// False on `Fallback`: no parameterized bound applies, only `n - 2`.
    pub theorem_applies: bool,
    pub bound_value: f64,
}

/// `C(delta) = exp((3·ln(δ³+2δ²+3) − 3(ln 3 − 1)) / (δ−3)) − 2`, the palette
/// constant of the low regime. Natural logarithm throughout; the closed form
/// is exactly the solution of the continuous local-lemma equation, see
/// [`lll_margin`]. Defined for `delta >= 4`; the singular `delta <= 3` is
/// rejected.
pub fn c_delta(delta: usize) -> Result<f64> {
    if delta <= 3 {
        return Err(Error::invalid(format!(
            "C(delta) is undefined for delta <= 3, got {delta}"
        )));
    }
    let d = delta as f64;
    let poly = d * d * d + 2.0 * d * d + 3.0;
    let exponent = (3.0 * poly.ln() - 3.0 * (3f64.ln() - 1.0)) / (d - 3.0);
    Ok(exponent.exp() - 2.0)
}

/// Local-lemma margin `e · p^(−⌈δ/3⌉+1) · (((δ+1)²−1)·⌈δ/3⌉ + 1)` for a
/// monochromatic-witness event under a palette of size `p`. The caller
/// compares against 1: below it, resampling terminates in expected linear
/// time.
pub fn lll_margin(delta: usize, palette: usize) -> f64 {
    debug_assert!(palette >= 2);
    debug_assert!(delta >= 1);
    let k = delta.div_ceil(3) as f64;
    let d = delta as f64;
    let p = palette as f64;
    let dependencies = ((d + 1.0) * (d + 1.0) - 1.0) * k + 1.0;
    std::f64::consts::E * p.powf(1.0 - k) * dependencies
}

/// Fringe palette size used by the split strategy: `ceil(C(delta)) + 2` for
/// `6 <= delta <= 15` and the constant `5 + 2` from `delta >= 16` on.
pub fn split_fringe_palette(delta: usize) -> Result<usize> {
    if delta < 6 {
        return Err(Error::invalid(format!(
            "split palette needs delta >= 6, got {delta}"
        )));
    }
    if delta >= 16 {
        return Ok(7);
    }
    Ok(c_delta(delta)?.ceil() as usize + 2)
}

/// Dispatches `(n, delta)` to its regime and evaluates the matching palette
/// bound. Exactly one regime matches any pair with `n >= 2` and
/// `1 <= delta < n`.
pub fn theorem_bound(n: usize, delta: usize) -> Regime {
    debug_assert!(n >= 2);
    debug_assert!(delta >= 1 && delta < n);
    let nf = n as f64;
    let df = delta as f64;
    if delta == n - 1 {
        return Regime {
            tag: RegimeTag::Complete,
            theorem_applies: true,
            bound_value: 0.0,
        };
    }
    if (delta + 1) * (delta + 1) >= n - 1 && n >= 290 {
        return Regime {
            tag: RegimeTag::High,
            theorem_applies: true,
            bound_value: 3.0 * nf / (df + 1.0) + 5.0,
        };
    }
    if delta >= 16 && (delta + 2) * (delta + 2) <= n - 1 {
        return Regime {
            tag: RegimeTag::Mid,
            theorem_applies: true,
            bound_value: 4.0 * nf / (df + 1.0) + 5.0,
        };
    }
    if (6..=15).contains(&delta) && (delta + 2) * (delta + 2) <= n - 1 {
        return Regime {
            tag: RegimeTag::Low,
            theorem_applies: true,
            bound_value: 4.0 * nf / (df + 1.0) + c_delta(delta).expect("delta >= 6"),
        };
    }
    if (3..=5).contains(&delta) {
        let bound_value = match delta {
            3 => 3.0 * nf / 4.0 - 2.0,
            4 => 3.0 * nf / 5.0 - 8.0 / 5.0,
            _ => nf / 2.0 - 2.0,
        };
        return Regime {
            tag: RegimeTag::Tree,
            theorem_applies: true,
            bound_value,
        };
    }
    Regime {
        tag: RegimeTag::Fallback,
        theorem_applies: false,
        bound_value: nf - 2.0,
    }
}

/// Best palette lower bound witnessed by the clique-chain family:
/// `(3n−6)/(δ+1) − 2`, which coincides with `diameter − 1` for every
/// realizable `(n, delta)`. Requires `n = (m+2)(delta+1) + 2` for some
/// `m >= 0`.
pub fn h_family_lower_bound(n: usize, delta: usize) -> Result<f64> {
    if delta < 3 {
        return Err(Error::invalid(format!(
            "chain family needs delta >= 3, got {delta}"
        )));
    }
    let span = n as isize - 2;
    let block = delta as isize + 1;
    if span <= 0 || span % block != 0 || span / block < 2 {
        return Err(Error::invalid(format!(
            "no chain instance has n = {n} with delta = {delta}"
        )));
    }
    Ok((3.0 * n as f64 - 6.0) / (delta as f64 + 1.0) - 2.0)
}

/// Reference curve `b·ln(δ)·n/δ` for large minimum degree; no construction
/// is attached to it. Requires `b > 2.5`.
pub fn large_delta_bound(n: usize, delta: usize, b: f64) -> Result<f64> {
    if b <= 2.5 {
        return Err(Error::invalid(format!("constant b must exceed 2.5, got {b}")));
    }
    if delta < 2 {
        return Err(Error::invalid("large-delta curve needs delta >= 2"));
    }
    Ok(b * (delta as f64).ln() * n as f64 / delta as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::E;

    #[test]
    fn c_delta_matches_simplified_forms() {
        // At delta = 6 the exponent collapses to ln(291/3) + 1, so the value
        // is exactly 97e − 2.
        assert!((c_delta(6).unwrap() - (97.0 * E - 2.0)).abs() < 1e-9);
        // At delta = 15 it collapses to (ln 1276 + 1)/4.
        let expected15 = ((1276f64.ln() + 1.0) / 4.0).exp() - 2.0;
        assert!((c_delta(15).unwrap() - expected15).abs() < 1e-9);
        assert!((c_delta(15).unwrap() - 5.675).abs() < 0.01);
        // The formula keeps decreasing past the switch to the constant 5.
        let c16 = c_delta(16).unwrap();
        assert!((c16 - 4.85).abs() < 0.01);
        assert!(c16 <= 5.0);
    }

    #[test]
    fn c_delta_rejects_singularity() {
        for d in 0..=3 {
            assert!(c_delta(d).is_err());
        }
    }

    #[test]
    fn c_delta_solves_the_continuous_margin_equation() {
        for delta in 6..=15 {
            let c = c_delta(delta).unwrap();
            let d = delta as f64;
            let value = E * (c + 2.0).powf(1.0 - d / 3.0) * (d * d * d + 2.0 * d * d + 3.0) / 3.0;
            assert!(
                (value - 1.0).abs() < 1e-9,
                "delta={delta} continuous margin {value}"
            );
        }
    }

    #[test]
    fn lll_margin_values() {
        let m = lll_margin(16, 7);
        assert!((m - E * 1729.0 / 16807.0).abs() < 1e-12);
        assert!((m - 0.280).abs() < 0.001);

        let loose = lll_margin(6, 7);
        assert!((loose - E * 97.0 / 7.0).abs() < 1e-12);
        assert!(loose > 1.0);
    }

    #[test]
    fn split_palettes_put_margin_below_one() {
        for delta in 6..=15 {
            let palette = split_fringe_palette(delta).unwrap();
            let margin = lll_margin(delta, palette);
            assert!(margin < 1.0, "delta={delta} palette={palette} margin={margin}");
        }
        assert_eq!(split_fringe_palette(16).unwrap(), 7);
        assert_eq!(split_fringe_palette(100).unwrap(), 7);
        assert_eq!(split_fringe_palette(6).unwrap(), 264);
        assert!(split_fringe_palette(5).is_err());
    }

    #[test]
    fn regime_dispatch_examples() {
        let r = theorem_bound(290, 17);
        assert_eq!(r.tag, RegimeTag::High);
        assert!((r.bound_value - (3.0 * 290.0 / 18.0 + 5.0)).abs() < 1e-9);

        let r = theorem_bound(1000, 20);
        assert_eq!(r.tag, RegimeTag::Mid);
        assert!((r.bound_value - (4.0 * 1000.0 / 21.0 + 5.0)).abs() < 1e-9);

        let r = theorem_bound(100, 3);
        assert_eq!(r.tag, RegimeTag::Tree);
        assert!((r.bound_value - 73.0).abs() < 1e-9);

        let r = theorem_bound(100, 9);
        assert_eq!(r.tag, RegimeTag::Fallback); // 11^2 = 121 > 99: gap
        assert!(!r.theorem_applies);

        let r = theorem_bound(200, 12);
        assert_eq!(r.tag, RegimeTag::Low); // 14^2 = 196 <= 199

        let r = theorem_bound(6, 5);
        assert_eq!(r.tag, RegimeTag::Complete);
        assert_eq!(r.bound_value, 0.0);
    }

    #[test]
    fn regime_dispatch_is_a_partition() {
        // The raw predicates, checked pairwise disjoint and jointly
        // exhaustive over a parameter sweep.
        for n in 2..400 {
            for delta in 1..n {
                let complete = delta == n - 1;
                let high = !complete && (delta + 1) * (delta + 1) >= n - 1 && n >= 290;
                let mid = !complete && delta >= 16 && (delta + 2) * (delta + 2) <= n - 1;
                let low =
                    !complete && (6..=15).contains(&delta) && (delta + 2) * (delta + 2) <= n - 1;
                let tree = !complete && !high && (3..=5).contains(&delta);
                let holes = [complete, high, mid, low, tree];
                let matched = holes.iter().filter(|&&b| b).count();
                assert!(matched <= 1, "n={n} delta={delta} predicates overlap");
                let expect = match theorem_bound(n, delta).tag {
                    RegimeTag::Complete => complete,
                    RegimeTag::High => high,
                    RegimeTag::Mid => mid,
                    RegimeTag::Low => low,
                    RegimeTag::Tree => tree,
                    RegimeTag::Fallback => matched == 0,
                };
                assert!(expect, "n={n} delta={delta} dispatched inconsistently");
            }
        }
    }

    #[test]
    fn chain_lower_bound_values() {
        // delta=3, m=1: n=14.
        let lb = h_family_lower_bound(14, 3).unwrap();
        assert!((lb - 7.0).abs() < 1e-9);
        // delta=4, m=2: n=22.
        let lb = h_family_lower_bound(22, 4).unwrap();
        assert!((lb - 10.0).abs() < 1e-9);
        // delta=3, m=0: n=10; coincides with diameter - 1 = 4.
        let lb = h_family_lower_bound(10, 3).unwrap();
        assert!((lb - 4.0).abs() < 1e-9);
        assert!(h_family_lower_bound(15, 3).is_err());
        assert!(h_family_lower_bound(6, 3).is_err());
    }

    #[test]
    fn chain_lower_bound_equals_diameter_minus_one() {
        use crate::generate::CaroChainSpec;
        for delta in 3..=8 {
            for m in 0..=5 {
                let spec = CaroChainSpec::new(delta, m).unwrap();
                let lb = h_family_lower_bound(spec.n(), delta).unwrap();
                let diam_minus_one = spec.expected_diameter() as f64 - 1.0;
                assert!(
                    (lb - diam_minus_one).abs() < 1e-9,
                    "delta={delta} m={m}: {lb} vs {diam_minus_one}"
                );
            }
        }
    }

    #[test]
    fn chain_lower_bound_stays_below_upper_bounds() {
        use crate::generate::CaroChainSpec;
        for delta in 3..=20 {
            for m in 0..=30 {
                let spec = match CaroChainSpec::new(delta, m) {
                    Ok(s) => s,
                    Err(_) => continue,
                };
                let n = spec.n();
                let regime = theorem_bound(n, delta);
                if !regime.theorem_applies {
                    continue;
                }
                let lb = h_family_lower_bound(n, delta).unwrap();
                assert!(
                    lb <= regime.bound_value + 1e-9,
                    "delta={delta} m={m}: lower bound {lb} above upper {}",
                    regime.bound_value
                );
            }
        }
    }

    #[test]
    fn large_delta_curve() {
        let v = large_delta_bound(1000, 100, 2.6).unwrap();
        assert!((v - 2.6 * 100f64.ln() * 10.0).abs() < 1e-9);
        assert!((v - 119.7).abs() < 0.1);
        let v = large_delta_bound(100, 100, 2.6).unwrap();
        assert!((v - 11.97).abs() < 0.01);
        assert!(large_delta_bound(100, 10, 2.5).is_err());
    }
}
