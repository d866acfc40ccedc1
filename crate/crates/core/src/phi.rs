//! The numerical functions `phi_t` and `phi_{t,d}` feeding every Betti
//! formula.
//!
//! `phi_t` is a symmetric staircase supported on `0..=2t-2`, rising by one
//! every other step up to `ceil(t/2)` and back down. It is defined by the
//! recursion
//!
//! ```text
//! phi_1(n) = 1 iff n = 0
//! phi_t(n) = phi_{t-1}(n)      for 0 <= n < t-1
//!            phi_{t-1}(n) + 1  for t-1 <= n < 2t-1
//!            0                 otherwise
//! ```
//!
//! with the conventions `phi_t = 0` for `t <= 0` and `phi_t(n) = 0` for
//! `n < 0`. [`phi`] implements the recursion verbatim and serves as the test
//! oracle; [`phi_closed`] is the O(1) closed form used on production paths.

use crate::error::Error;

/// `phi_t(n)` by the defining recursion, unrolled bottom-up.
pub fn phi(t: i64, n: i64) -> i64 {
    if t <= 0 || n < 0 {
        return 0;
    }
    let mut value = 0;
    for step in 1..=t {
        if step == 1 {
            value = i64::from(n == 0);
        } else if n < step - 1 {
            // carried unchanged from phi_{step-1}
        } else if n < 2 * step - 1 {
            value += 1;
        } else {
            value = 0;
        }
    }
    value
}

/// Closed form `phi_t(n) = (floor(min(n, 2t-2-n) / 2) + 1)+`.
///
/// Floor division rounds toward negative infinity, so negative arguments
/// land on zero as the recursion's conventions require.
pub fn phi_closed(t: i64, n: i64) -> i64 {
    if t <= 0 {
        return 0;
    }
    let m = n.min(2 * t - 2 - n);
    (m.div_euclid(2) + 1).max(0)
}

/// `phi_{t,d}(n) = phi_t(n+d) - phi_d(n+d)`, defined for `t >= d`.
pub fn phi_td(t: i64, d: i64, n: i64) -> Result<i64, Error> {
    if t < d {
        return Err(Error::PhiOrder { t, d });
    }
    Ok(phi_td_raw(t, d, n))
}

/// The defining difference without the order check; used by the Betti
/// formulas where `t >= d` holds structurally.
pub(crate) fn phi_td_raw(t: i64, d: i64, n: i64) -> i64 {
    phi_closed(t, n + d) - phi_closed(d, n + d)
}
