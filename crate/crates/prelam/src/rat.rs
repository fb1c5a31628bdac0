//! Exact rational scalars and small numeric helpers.
//!
//! Every coordinate in this crate is an exact rational; no predicate ever
//! touches floating point. `Ratio<i128>` gives plenty of headroom for the
//! constructions used here (midpoint subdivision, ternary grids, dyadic
//! slot labels) while keeping `Copy` semantics.

use num::rational::Ratio;
use num::{One, Signed, Zero};
use std::str::FromStr;

/// Exact rational scalar used throughout the crate.
pub type Rat = Ratio<i128>;

/// Builds a rational from a numerator and denominator.
///
/// # Panics
/// Panics if `den` is zero.
pub fn rat(num: i128, den: i128) -> Rat {
    Ratio::new(num, den)
}

/// Parses a rational written as `p/q` or as a plain integer `p`.
pub fn parse_rat(s: &str) -> Result<Rat, RatParseError> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n = i128::from_str(num.trim()).map_err(|_| RatParseError(s.to_string()))?;
        let d = i128::from_str(den.trim()).map_err(|_| RatParseError(s.to_string()))?;
        if d == 0 {
            return Err(RatParseError(s.to_string()));
        }
        Ok(Ratio::new(n, d))
    } else {
        let n = i128::from_str(s).map_err(|_| RatParseError(s.to_string()))?;
        Ok(Ratio::from_integer(n))
    }
}

/// Formats a rational as `p/q`, or `p` when the denominator is one.
pub fn format_rat(r: Rat) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Error produced when a string is not a valid rational literal.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal: {0:?}")]
pub struct RatParseError(pub String);

/// Reduces `x` modulo one into the half-open interval `[0, 1)`.
pub fn mod_one(x: Rat) -> Rat {
    let f = x.floor();
    x - f
}

/// True when `x` is a dyadic rational (denominator a power of two).
pub fn is_dyadic(x: Rat) -> bool {
    let mut d = *x.denom();
    while d % 2 == 0 {
        d /= 2;
    }
    d == 1
}

/// Midpoint of two rationals.
pub fn midpoint(a: Rat, b: Rat) -> Rat {
    (a + b) / Rat::from_integer(2)
}

/// Position of a dyadic in `(0, 1)` within the infinite binary tree:
/// the root is `1/2` and each level halves the step. Returns the
/// left/right path from the root (empty path is the root itself),
/// or `None` if `x` is not a dyadic in `(0, 1)`.
pub fn dyadic_path(x: Rat) -> Option<Vec<bool>> {
    if !is_dyadic(x) || x <= Rat::zero() || x >= Rat::one() {
        return None;
    }
    let mut lo = Rat::zero();
    let mut hi = Rat::one();
    let mut path = Vec::new();
    loop {
        let mid = midpoint(lo, hi);
        if x == mid {
            return Some(path);
        }
        if x < mid {
            path.push(false);
            hi = mid;
        } else {
            path.push(true);
            lo = mid;
        }
    }
}

/// Increasing bijection from the dyadics in `(0, 1)` onto all rationals.
///
/// The binary-tree position of the dyadic is replayed in the Stern-Brocot
/// tree over every rational (whose in-order traversal is numeric order):
/// the root `1/2` maps to `0`, and left/right steps take mediants toward
/// `-infinity` / `+infinity`. Order is preserved by construction.
pub fn dyadic_to_rational(x: Rat) -> Option<Rat> {
    let path = dyadic_path(x)?;
    if path.is_empty() {
        return Some(Rat::zero());
    }
    let rest = &path[1..];
    if path[0] {
        Some(stern_brocot_positive(rest.iter().copied()))
    } else {
        // Negative branch: mirror the path inside the reflected tree.
        Some(-stern_brocot_positive(rest.iter().map(|b| !b)))
    }
}

/// Walks the positive Stern-Brocot tree (endpoints `0/1` and `1/0`,
/// root `1/1`) along `path` and returns the node reached.
fn stern_brocot_positive(path: impl Iterator<Item = bool>) -> Rat {
    let (mut ln, mut ld) = (0i128, 1i128);
    let (mut rn, mut rd) = (1i128, 0i128);
    let (mut mn, mut md) = (ln + rn, ld + rd);
    for step in path {
        if step {
            ln = mn;
            ld = md;
        } else {
            rn = mn;
            rd = md;
        }
        mn = ln + rn;
        md = ld + rd;
    }
    Ratio::new(mn, md)
}

/// Absolute value helper; re-exported for call sites that already have
/// the crate's scalar in scope.
pub fn rat_abs(x: Rat) -> Rat {
    x.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["1/3", "-7/5", "4", "0"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(parse_rat(&format_rat(r)).unwrap(), r);
        }
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn mod_one_lands_in_unit_interval() {
        assert_eq!(mod_one(rat(7, 3)), rat(1, 3));
        assert_eq!(mod_one(rat(-1, 4)), rat(3, 4));
        assert_eq!(mod_one(rat(2, 1)), rat(0, 1));
    }

    #[test]
    fn stern_brocot_relabeling_is_increasing_and_hits_simple_values() {
        assert_eq!(dyadic_to_rational(rat(1, 2)), Some(rat(0, 1)));
        assert_eq!(dyadic_to_rational(rat(3, 4)), Some(rat(1, 1)));
        assert_eq!(dyadic_to_rational(rat(1, 4)), Some(rat(-1, 1)));
        // Increasing on a dyadic grid.
        let mut prev: Option<Rat> = None;
        for k in 1..64 {
            let x = rat(k, 64);
            if let Some(v) = dyadic_to_rational(x) {
                if let Some(p) = prev {
                    assert!(p < v);
                }
                prev = Some(v);
            }
        }
        assert_eq!(dyadic_to_rational(rat(1, 3)), None);
    }
}
