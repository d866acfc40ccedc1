//! Hilbert functions and first differences, by three independent routes:
//! alternating sums over a Betti table, the closed-form case split, and
//! direct monomial counting.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::resolution::{d_sets, DClass, DSetClassification};
use crate::types::{normalize, BettiTable, Bidegree, DeltaMatrix, FatPointConfig};

/// Hilbert function value from a Betti table:
/// `H(a,b) = (a+1)(b+1) - sum_{(i,j) <= (a,b)} (a-i+1)(b-j+1)(b0 - b1 + b2)`.
pub fn hilbert_from_betti(table: &BettiTable, a: i64, b: i64) -> i64 {
    if a < 0 || b < 0 {
        return 0;
    }
    let mut correction = 0;
    for (u, deg, mult) in table.iter() {
        if deg.a <= a && deg.b <= b {
            let sign = if u == 1 { -1 } else { 1 };
            correction += sign * (mult as i64) * (a - deg.a + 1) * (b - deg.b + 1);
        }
    }
    (a + 1) * (b + 1) - correction
}

/// Hilbert function by counting monomials outside the ideal.
///
/// With support ideals `(x0,x2)`, `(x0,x3)`, `(x1,x2)`, the monomial
/// `x0^i x1^(a-i) x2^j x3^(b-j)` lies in the fat point ideal exactly when
/// `i + j >= m11`, `i + (b-j) >= m12` and `(a-i) + j >= m21`. No
/// normalization is involved.
pub fn hilbert_direct(config: FatPointConfig, a: i64, b: i64) -> i64 {
    if a < 0 || b < 0 {
        return 0;
    }
    let (m11, m12, m21) = (config.m11 as i64, config.m12 as i64, config.m21 as i64);
    let mut inside = 0;
    for i in 0..=a {
        for j in 0..=b {
            if i + j >= m11 && i + (b - j) >= m12 && (a - i) + j >= m21 {
                inside += 1;
            }
        }
    }
    (a + 1) * (b + 1) - inside
}

/// First difference `ΔH(a,b) = H(a,b) + H(a-1,b-1) - H(a-1,b) - H(a,b-1)`
/// of an arbitrary Hilbert backend; `h` is treated as zero at negative
/// arguments by the backends themselves.
pub fn delta_of<H: Fn(i64, i64) -> i64>(h: H, a: i64, b: i64) -> i64 {
    h(a, b) + h(a - 1, b - 1) - h(a - 1, b) - h(a, b - 1)
}

/// Finite difference of [`hilbert_direct`].
pub fn delta_direct(config: FatPointConfig, a: i64, b: i64) -> i64 {
    delta_of(|x, y| hilbert_direct(config, x, y), a, b)
}

/// Finite difference of [`hilbert_from_betti`].
pub fn delta_from_betti(table: &BettiTable, a: i64, b: i64) -> i64 {
    delta_of(|x, y| hilbert_from_betti(table, x, y), a, b)
}

/// Closed form of `ΔH` for a normalized configuration.
///
/// Case `m11 <= m21`: 1 below the antidiagonal `a + b = m12 + m21`,
/// `1 - beta_0(a,b)` on it, 0 above. Case `m11 > m21`: `1 - beta_0(a,b)` on
/// the union of the D-sets, 1 at bidegrees componentwise dominated by some
/// D-set member (the D-set points themselves excepted), 0 otherwise.
pub fn delta_closed(config: FatPointConfig, a: i64, b: i64) -> Result<i64, Error> {
    if !config.is_normalized() {
        return Err(Error::NotNormalized);
    }
    if a < 0 || b < 0 {
        return Ok(0);
    }
    if config.m11 <= config.m21 {
        Ok(delta_closed_case_one(config, a, b))
    } else {
        let sets = d_sets(config)?;
        Ok(delta_closed_case_two(config, &sets, a, b))
    }
}

fn delta_closed_case_one(config: FatPointConfig, a: i64, b: i64) -> i64 {
    let diag = config.m12 as i64 + config.m21 as i64;
    match (a + b).cmp(&diag) {
        core::cmp::Ordering::Less => 1,
        core::cmp::Ordering::Equal => {
            let (m11, m12, m21) = (config.m11 as i64, config.m12 as i64, config.m21 as i64);
            let corner = (a.min(b - m11).min(m21 - m11) + 1).max(0);
            1 - corner - crate::phi::phi_td_raw(m12, m12 - m11, b)
        }
        core::cmp::Ordering::Greater => 0,
    }
}

fn delta_closed_case_two(config: FatPointConfig, sets: &DSetClassification, a: i64, b: i64) -> i64 {
    let deg = Bidegree::new(a, b);
    if let Some(class) = sets.classify(deg) {
        let beta0 = match class {
            DClass::D1 | DClass::D4 => 1,
            DClass::D2 => crate::phi::phi_td_raw(config.m21 as i64 + config.b_z(), config.b_z(), b),
            DClass::D3 => {
                1 + crate::phi::phi_td_raw(config.m21 as i64 + config.b_z(), config.b_z(), b)
            }
        };
        return 1 - beta0;
    }
    if sets.union().any(|p| a <= p.a && b <= p.b) {
        1
    } else {
        0
    }
}

/// `ΔH` for an arbitrary configuration through the closed form, with
/// normalization and transposition handled internally.
pub fn delta_value(config: FatPointConfig, a: i64, b: i64) -> i64 {
    let (cfg, transposed) = normalize(config);
    let (a, b) = if transposed { (b, a) } else { (a, b) };
    delta_closed(cfg, a, b).expect("normalized by construction")
}

/// Rectangular table of `ΔH` over `[0, amax] x [0, bmax]`, computed by the
/// closed form. With the default bounds `amax = bmax = m11 + m12 + m21` the
/// last row and column are zero, so the result is a valid [`DeltaMatrix`].
pub fn delta_table(config: FatPointConfig, amax: i64, bmax: i64) -> Result<DeltaMatrix, Error> {
    let rows = (0..=amax.max(0))
        .map(|a| {
            (0..=bmax.max(0))
                .map(|b| delta_value(config, a, b))
                .collect()
        })
        .collect();
    DeltaMatrix::new(rows)
}

/// A Hilbert function table over `[0, amax] x [0, bmax]` together with the
/// stabilized value (the degree of the subscheme).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertTable {
    pub rows: Vec<Vec<i64>>,
    pub gamma: i64,
}

/// Hilbert function values by direct counting over a rectangle.
pub fn hilbert_table(config: FatPointConfig, amax: i64, bmax: i64) -> HilbertTable {
    let rows = (0..=amax.max(0))
        .map(|a| {
            (0..=bmax.max(0))
                .map(|b| hilbert_direct(config, a, b))
                .collect()
        })
        .collect();
    HilbertTable {
        rows,
        gamma: config.degree(),
    }
}

/// Forward `ΔH` of the normalized form of `config`, as a zero-padded matrix
/// of at least the requested dimensions. Used by the interpolation solver,
/// which works in the normalized orientation.
pub(crate) fn delta_rows_normalized(config: FatPointConfig, rows: i64, cols: i64) -> Vec<Vec<i64>> {
    let (cfg, _) = normalize(config);
    let n_rows = rows.max(cfg.stabilization_bound() + 1).max(1);
    let n_cols = cols.max(cfg.stabilization_bound() + 1).max(1);
    let mut out = vec![vec![0i64; n_cols as usize]; n_rows as usize];
    for (a, row) in out.iter_mut().enumerate() {
        for (b, entry) in row.iter_mut().enumerate() {
            *entry = delta_closed(cfg, a as i64, b as i64).expect("normalized");
        }
    }
    out
}
