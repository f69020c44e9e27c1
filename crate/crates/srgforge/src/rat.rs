//! Exact rational arithmetic helpers shared across the crate.
//!
//! Every quantity that the theory compares is compared exactly; nothing in
//! this crate touches floating point.

use num_rational::Ratio;

/// Exact rational number. Inputs are capped at 2^32 elsewhere, so every
/// intermediate value in the parameter calculus fits comfortably in i128.
pub type Rat = Ratio<i128>;

/// Builds a rational from an integer.
pub fn rat(n: i128) -> Rat {
    Rat::from_integer(n)
}

/// Builds the rational `n / d`. Panics if `d == 0`.
pub fn frac(n: i128, d: i128) -> Rat {
    Rat::new(n, d)
}

/// Renders a rational the way all srgforge output formats expect it:
/// `p` when integral, `p/q` otherwise, always in lowest terms.
pub fn rat_string(r: &Rat) -> String {
    r.to_string()
}

/// Exact integer square root: returns `Some(s)` iff `n == s*s` with `s >= 0`.
pub fn perfect_sqrt(n: i128) -> Option<i128> {
    if n < 0 {
        return None;
    }
    if n < 2 {
        return Some(n);
    }
    // Newton iteration on integers, then verify exactly.
    let mut x = (n as f64).sqrt() as i128;
    // One correction pass is enough for the f64 seed at i128 scale.
    while x > 0 && x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    if x * x == n {
        Some(x)
    } else {
        None
    }
}

/// `floor` of a rational as an integer.
pub fn rat_floor(r: &Rat) -> i128 {
    r.floor().to_integer()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perfect_squares_recognized() {
        for s in 0..2000i128 {
            assert_eq!(perfect_sqrt(s * s), Some(s));
        }
        for n in [2i128, 3, 5, six_sq_minus_one(), 1_000_003] {
            assert_eq!(perfect_sqrt(n), None, "{n} is not a square");
        }
        assert_eq!(perfect_sqrt(-4), None);
    }

    fn six_sq_minus_one() -> i128 {
        35
    }

    #[test]
    fn rat_strings() {
        assert_eq!(rat_string(&frac(10, 4)), "5/2");
        assert_eq!(rat_string(&frac(-1, 3)), "-1/3");
        assert_eq!(rat_string(&rat(42)), "42");
        assert_eq!(rat_string(&frac(4, 2)), "2");
    }

    #[test]
    fn floor_behaviour() {
        assert_eq!(rat_floor(&frac(7, 2)), 3);
        assert_eq!(rat_floor(&frac(-7, 2)), -4);
        assert_eq!(rat_floor(&rat(5)), 5);
    }
}
