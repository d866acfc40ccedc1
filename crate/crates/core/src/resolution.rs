//! Minimal bigraded free resolutions and closed-form Betti numbers.
//!
//! Resolutions are built two ways: [`res_recursive`] peels one multiplicity
//! off P11 and P21 at a time down to a two-point base case and reassembles
//! the twists level by level, while [`betti_closed`] evaluates the closed
//! formulas directly. The two paths agree entrywise; that equality is one of
//! the main verification suites of the crate.

use alloc::vec::Vec;

use crate::error::Error;
use crate::phi::phi_td_raw;
use crate::types::{normalize, BettiTable, Bidegree, FatPointConfig, FreeResolution};

/// Resolution of two collinear fat points `m11 P11 + m12 P12` (both on the
/// horizontal ruling).
///
/// With `M = max(m11, m12)` the ideal has one generator at
/// `(t, (m11-t)+ + (m12-t)+)` for `t = 0..=M` and one syzygy at
/// `(t, (m11-t+1)+ + (m12-t+1)+)` for `t = 1..=M`; there are no second
/// syzygies.
pub fn res_two_collinear(m11: u32, m12: u32) -> Result<FreeResolution, Error> {
    if m11 == 0 && m12 == 0 {
        return Err(Error::EmptyConfiguration);
    }
    let (m11, m12) = (m11 as i64, m12 as i64);
    let pos = |v: i64| v.max(0);
    let big = m11.max(m12);
    let generators = (0..=big)
        .map(|t| Bidegree::new(t, pos(m11 - t) + pos(m12 - t)))
        .collect();
    let syzygies = (1..=big)
        .map(|t| Bidegree::new(t, pos(m11 - t + 1) + pos(m12 - t + 1)))
        .collect();
    Ok(FreeResolution::new([generators, syzygies, Vec::new()]))
}

/// Resolution of two non-collinear fat points `m12 P12 + m21 P21`.
///
/// Levels come from tuple sets: a tuple `(a, b, c, d)` with
/// `0 <= a,d <= m12`, `0 <= b,c <= m21` contributes the shift
/// `(a+b, c+d)`. Level 0 takes `a+d = m12, b+c = m21`; level 1 raises one of
/// the two sums by one; level 2 raises both.
pub fn res_two_noncollinear(m12: u32, m21: u32) -> Result<FreeResolution, Error> {
    if m12 == 0 && m21 == 0 {
        return Err(Error::EmptyConfiguration);
    }
    let (m12, m21) = (m12 as i64, m21 as i64);
    // Enumerates (a, b) with a + d = asum, b + c = bsum inside the box.
    let tuples = |asum: i64, bsum: i64| -> Vec<Bidegree> {
        let mut shifts = Vec::new();
        for a in (asum - m12).max(0)..=asum.min(m12) {
            for b in (bsum - m21).max(0)..=bsum.min(m21) {
                let d = asum - a;
                let c = bsum - b;
                shifts.push(Bidegree::new(a + b, c + d));
            }
        }
        shifts
    };
    let mut level0 = tuples(m12, m21);
    let mut level1 = tuples(m12 + 1, m21);
    level1.extend(tuples(m12, m21 + 1));
    let level2 = tuples(m12 + 1, m21 + 1);
    level0.sort_unstable();
    level1.sort_unstable();
    Ok(FreeResolution::new([level0, level1, level2]))
}

/// Resolution of a normalized configuration by the multiplicity recursion.
///
/// Base cases: `m11 = 0` is two non-collinear points, `m21 = 0` two
/// collinear ones, the zero configuration resolves the unit ideal (empty
/// levels). Otherwise the resolution of
/// `Z1 = (m11-1, m12, m21-1)` is reshaped: writing `B+ = (m12-m11)+` and
/// `P = m11 + m21 + B+`,
///
/// * level 0 gains the antidiagonal `A0 = {a+b = P, 0 <= b <= B+}` and
///   carries level 0 of `Z1` shifted by `(0, 1)`;
/// * level 1 gains `A1 = {a+b = P+1, 1 <= b <= B+}` twice, one extra twist
///   at `(m11+m21, B+ + 1)`, and the shifted level 1;
/// * level 2 gains `A2 = {a+b = P+2, 2 <= b <= B+ + 1}` and the shifted
///   level 2.
pub fn res_recursive(config: FatPointConfig) -> Result<FreeResolution, Error> {
    if !config.is_normalized() {
        return Err(Error::NotNormalized);
    }
    if config.is_zero() {
        return Ok(FreeResolution::default());
    }

    // Peel min(m11, m21) layers off, remembering the configs top-down, then
    // reassemble bottom-up. Iterative so the multiplicity cap cannot
    // overflow the stack.
    let mut stack = Vec::new();
    let mut current = config;
    while current.m11 > 0 && current.m21 > 0 {
        stack.push(current);
        current = FatPointConfig {
            m11: current.m11 - 1,
            m12: current.m12,
            m21: current.m21 - 1,
        };
    }

    let mut resolution = if current.is_zero() {
        FreeResolution::default()
    } else if current.m11 == 0 {
        res_two_noncollinear(current.m12, current.m21)?
    } else {
        res_two_collinear(current.m11, current.m12)?
    };

    while let Some(cfg) = stack.pop() {
        resolution = assemble_step(cfg, &resolution);
    }
    Ok(resolution)
}

/// One recursion step: the resolution of `cfg` from the resolution of its
/// reduction `Z1`.
fn assemble_step(cfg: FatPointConfig, inner: &FreeResolution) -> FreeResolution {
    let (m11, m21) = (cfg.m11 as i64, cfg.m21 as i64);
    let b_plus = cfg.b_z().max(0);
    let total = m11 + m21 + b_plus;

    let shifted = |level: &[Bidegree]| -> Vec<Bidegree> {
        level.iter().map(|s| Bidegree::new(s.a, s.b + 1)).collect()
    };

    let mut level0 = shifted(&inner.levels[0]);
    for b in 0..=b_plus {
        level0.push(Bidegree::new(total - b, b));
    }

    let mut level1 = shifted(&inner.levels[1]);
    for b in 1..=b_plus {
        let shift = Bidegree::new(total + 1 - b, b);
        level1.push(shift);
        level1.push(shift);
    }
    level1.push(Bidegree::new(m11 + m21, b_plus + 1));

    let mut level2 = shifted(&inner.levels[2]);
    for b in 2..=b_plus + 1 {
        level2.push(Bidegree::new(total + 2 - b, b));
    }

    FreeResolution::new([level0, level1, level2])
}

/// Which of the four D-sets a bidegree belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DClass {
    D1,
    D2,
    D3,
    D4,
}

/// The four bidegree sets underlying the closed Betti formulas in the case
/// `m11 > m21`.
///
/// All sets are enumerated by ascending `b` with `a` solved from the line
/// equation; lattice points with negative or non-integral `a` are excluded.
/// No two members of the union share a first or second coordinate, and each
/// bidegree belongs to exactly one set.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DSetClassification {
    pub d1: Vec<Bidegree>,
    pub d2: Vec<Bidegree>,
    pub d3: Vec<Bidegree>,
    pub d4: Vec<Bidegree>,
}

impl DSetClassification {
    pub fn classify(&self, deg: Bidegree) -> Option<DClass> {
        if self.d1.contains(&deg) {
            Some(DClass::D1)
        } else if self.d2.contains(&deg) {
            Some(DClass::D2)
        } else if self.d3.contains(&deg) {
            Some(DClass::D3)
        } else if self.d4.contains(&deg) {
            Some(DClass::D4)
        } else {
            None
        }
    }

    pub fn union(&self) -> impl Iterator<Item = Bidegree> + '_ {
        self.d1
            .iter()
            .chain(&self.d2)
            .chain(&self.d3)
            .chain(&self.d4)
            .copied()
    }
}

/// D-sets of a normalized configuration with `m11 > m21`.
///
/// With `B = m12 - m11` and `low = (-B)+ - (-B - m21)+`:
///
/// * `D1`: `0 <= b < low` on the line `a + 2b = m11 + m21`;
/// * `D2`: `low <= b < m21` on `a + b = max(m11, m12 + m21)`;
/// * `D3`: `m21 <= b <= m21 + |B + m21|` on the same line;
/// * `D4`: `b > m21 + |B + m21|` on `2a + b = m11 + m12`.
pub fn d_sets(config: FatPointConfig) -> Result<DSetClassification, Error> {
    if !config.is_normalized() {
        return Err(Error::NotNormalized);
    }
    if config.m11 <= config.m21 {
        return Err(Error::NotCaseTwo);
    }
    let (m11, m12, m21) = (config.m11 as i64, config.m12 as i64, config.m21 as i64);
    let b_z = config.b_z();
    let pos = |v: i64| v.max(0);

    let low = pos(-b_z) - pos(-b_z - m21);
    let diag = m11.max(m12 + m21);
    let d3_top = m21 + (b_z + m21).abs();

    let mut sets = DSetClassification::default();
    for b in 0..low {
        let a = m11 + m21 - 2 * b;
        if a >= 0 {
            sets.d1.push(Bidegree::new(a, b));
        }
    }
    for b in low..m21 {
        let a = diag - b;
        if a >= 0 {
            sets.d2.push(Bidegree::new(a, b));
        }
    }
    for b in m21..=d3_top {
        let a = diag - b;
        if a >= 0 {
            sets.d3.push(Bidegree::new(a, b));
        }
    }
    for b in (d3_top + 1)..=(m11 + m12) {
        let rest = m11 + m12 - b;
        if rest % 2 == 0 {
            sets.d4.push(Bidegree::new(rest / 2, b));
        }
    }
    Ok(sets)
}

/// `beta_0` at a point of the given D-set.
fn case_two_beta0(config: FatPointConfig, class: DClass, deg: Bidegree) -> i64 {
    let b_z = config.b_z();
    let staircase = || phi_td_raw(config.m21 as i64 + b_z, b_z, deg.b);
    match class {
        DClass::D1 | DClass::D4 => 1,
        DClass::D2 => staircase(),
        DClass::D3 => 1 + staircase(),
    }
}

/// `beta_0` on the antidiagonal `a + b = m21 + m12` in the case
/// `m11 <= m21`:
/// `(min(a, b - m11, m21 - m11) + 1)+ + phi_{m12, m12-m11}(b)`.
fn case_one_beta0(config: FatPointConfig, b: i64) -> i64 {
    let (m11, m12, m21) = (config.m11 as i64, config.m12 as i64, config.m21 as i64);
    let a = m21 + m12 - b;
    let corner = (a.min(b - m11).min(m21 - m11) + 1).max(0);
    corner + phi_td_raw(m12, m12 - m11, b)
}

/// Bigraded Betti numbers of the fat point ideal by the closed formulas.
///
/// Accepts any triple; normalizes internally and transposes the result
/// back. The zero configuration yields the empty table.
pub fn betti_closed(config: FatPointConfig) -> BettiTable {
    let (cfg, transposed) = normalize(config);
    if cfg.is_zero() {
        return BettiTable::new();
    }
    let table = if cfg.m11 <= cfg.m21 {
        betti_closed_case_one(cfg)
    } else {
        betti_closed_case_two(cfg)
    };
    if transposed {
        table.transposed()
    } else {
        table
    }
}

fn betti_closed_case_one(cfg: FatPointConfig) -> BettiTable {
    let diag = cfg.m21 as i64 + cfg.m12 as i64;
    let mut table = BettiTable::new();
    for b in 0..=diag {
        let v = case_one_beta0(cfg, b);
        debug_assert!(v >= 0);
        if v > 0 {
            table.add(0, Bidegree::new(diag - b, b), v as u64);
        }
    }
    // beta_1 = (beta_0(a, b-1) + beta_0(a-1, b) - 1)+ vanishes off the
    // antidiagonal a + b = diag + 1, beta_2 = (beta_0(a-1, b-1) - 1)+ off
    // diag + 2, since both lookups are zero there.
    for b in 0..=diag + 1 {
        let a = diag + 1 - b;
        let v = table.get(0, a, b - 1) + table.get(0, a - 1, b) - 1;
        if v > 0 {
            table.add(1, Bidegree::new(a, b), v as u64);
        }
    }
    for b in 0..=diag + 2 {
        let a = diag + 2 - b;
        let v = table.get(0, a - 1, b - 1) - 1;
        if v > 0 {
            table.add(2, Bidegree::new(a, b), v as u64);
        }
    }
    table
}

fn betti_closed_case_two(cfg: FatPointConfig) -> BettiTable {
    let sets = d_sets(cfg).expect("case split checked by caller");
    let mut table = BettiTable::new();
    let with_class = |list: &[Bidegree], class: DClass| -> Vec<(Bidegree, DClass)> {
        list.iter().map(|&d| (d, class)).collect()
    };
    let mut classified = with_class(&sets.d1, DClass::D1);
    classified.extend(with_class(&sets.d2, DClass::D2));
    classified.extend(with_class(&sets.d3, DClass::D3));
    classified.extend(with_class(&sets.d4, DClass::D4));

    for &(deg, class) in &classified {
        let v = case_two_beta0(cfg, class, deg);
        debug_assert!(v >= 0);
        if v > 0 {
            table.add(0, deg, v as u64);
        }
    }

    // The three beta_1 rules are mutually exclusive: a bidegree (a, b) can
    // satisfy at most one of (a,b-1) in D1, (a,b-1) in D2 u D3,
    // (a-1,b) in D4. Asserted while inserting.
    let mut beta1_sources: Vec<(Bidegree, i64)> = Vec::new();
    let mut push_beta1 = |at: Bidegree, value: i64| {
        assert!(
            !beta1_sources.iter().any(|&(d, _)| d == at),
            "beta_1 case rules overlap at {at}"
        );
        beta1_sources.push((at, value));
    };
    for &p in &sets.d1 {
        push_beta1(Bidegree::new(p.a, p.b + 1), 1);
    }
    for p in sets.d2.iter().chain(&sets.d3) {
        let at = Bidegree::new(p.a, p.b + 1);
        let v = table.get(0, p.a, p.b) + table.get(0, p.a - 1, p.b + 1) - 1;
        debug_assert!(v >= 0);
        push_beta1(at, v);
    }
    for &p in &sets.d4 {
        push_beta1(Bidegree::new(p.a + 1, p.b), 1);
    }
    for (deg, v) in beta1_sources {
        if v > 0 {
            table.add(1, deg, v as u64);
        }
    }

    for p in sets.d2.iter().chain(&sets.d3) {
        let v = table.get(0, p.a, p.b) - 1;
        debug_assert!(v >= 0);
        if v > 0 {
            table.add(2, Bidegree::new(p.a + 1, p.b + 1), v as u64);
        }
    }
    table
}

/// Betti numbers through the resolution recursion; the cross-check partner
/// of [`betti_closed`]. Accepts any triple.
pub fn betti_recursive(config: FatPointConfig) -> Result<BettiTable, Error> {
    let (cfg, transposed) = normalize(config);
    let table = res_recursive(cfg)?.to_betti_table();
    Ok(if transposed {
        table.transposed()
    } else {
        table
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::FatPointConfig;

    fn cfg(m11: u32, m12: u32, m21: u32) -> FatPointConfig {
        FatPointConfig::new(m11, m12, m21).unwrap()
    }

    fn counts(level: &[Bidegree]) -> Vec<(Bidegree, usize)> {
        let mut out: Vec<(Bidegree, usize)> = Vec::new();
        for &d in level {
            match out.iter_mut().find(|(deg, _)| *deg == d) {
                Some((_, n)) => *n += 1,
                None => out.push((d, 1)),
            }
        }
        out
    }

    #[test]
    fn collinear_single_point_is_koszul() {
        let res = res_two_collinear(0, 1).unwrap();
        assert_eq!(
            res.levels[0],
            vec![Bidegree::new(0, 1), Bidegree::new(1, 0)]
        );
        assert_eq!(res.levels[1], vec![Bidegree::new(1, 1)]);
        assert!(res.levels[2].is_empty());
    }

    #[test]
    fn collinear_one_one() {
        // (x0,x2) n (x0,x3) = (x0, x2 x3): generators at (1,0) and (0,2).
        let res = res_two_collinear(1, 1).unwrap();
        assert_eq!(
            res.levels[0],
            vec![Bidegree::new(0, 2), Bidegree::new(1, 0)]
        );
        assert_eq!(res.levels[1], vec![Bidegree::new(1, 2)]);
    }

    #[test]
    fn collinear_two_one() {
        let res = res_two_collinear(2, 1).unwrap();
        assert_eq!(
            res.levels[0],
            vec![
                Bidegree::new(0, 3),
                Bidegree::new(1, 1),
                Bidegree::new(2, 0)
            ]
        );
    }

    #[test]
    fn collinear_empty_rejected() {
        assert_eq!(res_two_collinear(0, 0), Err(Error::EmptyConfiguration));
        assert_eq!(res_two_noncollinear(0, 0), Err(Error::EmptyConfiguration));
    }

    #[test]
    fn noncollinear_five_two_level_counts() {
        let res = res_two_noncollinear(5, 2).unwrap();
        let level0: Vec<(Bidegree, usize)> = counts(&res.levels[0]);
        let expected0 = [
            ((7, 0), 1),
            ((6, 1), 2),
            ((5, 2), 3),
            ((4, 3), 3),
            ((3, 4), 3),
            ((2, 5), 3),
            ((1, 6), 2),
            ((0, 7), 1),
        ];
        for ((a, b), n) in expected0 {
            assert!(
                level0.contains(&(Bidegree::new(a, b), n)),
                "level 0 at ({a},{b})"
            );
        }
        assert_eq!(res.levels[0].len(), 18);

        let level2 = counts(&res.levels[2]);
        let expected2 = [
            ((7, 2), 1),
            ((6, 3), 2),
            ((5, 4), 2),
            ((4, 5), 2),
            ((3, 6), 2),
            ((2, 7), 1),
        ];
        for ((a, b), n) in expected2 {
            assert!(
                level2.contains(&(Bidegree::new(a, b), n)),
                "level 2 at ({a},{b})"
            );
        }
    }

    #[test]
    fn noncollinear_one_one_by_hand() {
        let res = res_two_noncollinear(1, 1).unwrap();
        assert_eq!(
            counts(&res.levels[0]),
            vec![
                (Bidegree::new(0, 2), 1),
                (Bidegree::new(1, 1), 2),
                (Bidegree::new(2, 0), 1)
            ]
        );
        assert_eq!(
            counts(&res.levels[1]),
            vec![(Bidegree::new(1, 2), 2), (Bidegree::new(2, 1), 2)]
        );
        assert_eq!(counts(&res.levels[2]), vec![(Bidegree::new(2, 2), 1)]);
    }

    #[test]
    fn recursive_one_one_one() {
        let res = res_recursive(cfg(1, 1, 1)).unwrap();
        assert_eq!(
            res.levels[0],
            vec![
                Bidegree::new(0, 2),
                Bidegree::new(1, 1),
                Bidegree::new(2, 0)
            ]
        );
        assert_eq!(
            res.levels[1],
            vec![Bidegree::new(1, 2), Bidegree::new(2, 1)]
        );
        assert!(res.levels[2].is_empty());
    }

    #[test]
    fn recursive_rejects_non_normalized() {
        assert_eq!(res_recursive(cfg(3, 2, 4)), Err(Error::NotNormalized));
    }

    #[test]
    fn recursive_zero_config_is_empty() {
        assert!(res_recursive(cfg(0, 0, 0)).unwrap().is_empty());
        assert!(betti_closed(cfg(0, 0, 0)).is_empty());
    }

    #[test]
    fn d_sets_examples() {
        let sets = d_sets(cfg(3, 4, 2)).unwrap();
        assert!(sets.d1.is_empty());
        assert_eq!(sets.d2, vec![Bidegree::new(6, 0), Bidegree::new(5, 1)]);
        assert_eq!(
            sets.d3,
            vec![
                Bidegree::new(4, 2),
                Bidegree::new(3, 3),
                Bidegree::new(2, 4),
                Bidegree::new(1, 5)
            ]
        );
        assert_eq!(sets.d4, vec![Bidegree::new(0, 7)]);

        let sets = d_sets(cfg(5, 2, 1)).unwrap();
        assert_eq!(sets.d1, vec![Bidegree::new(6, 0)]);
        assert!(sets.d2.is_empty());
    }

    #[test]
    fn d_sets_rejects_case_one() {
        assert_eq!(d_sets(cfg(1, 2, 1)), Err(Error::NotCaseTwo));
        assert_eq!(d_sets(cfg(3, 2, 4)), Err(Error::NotNormalized));
    }

    #[test]
    fn d_sets_emptiness_criteria() {
        // As enumerated from the defining inequalities: D1 is empty iff
        // B >= 0 or m21 = 0, and D2 is empty iff B + m21 <= 0 or m21 = 0.
        for m11 in 0..=6u32 {
            for m12 in 0..=6u32 {
                for m21 in 0..=6u32 {
                    let c = FatPointConfig { m11, m12, m21 };
                    if !c.is_normalized() || m11 <= m21 {
                        continue;
                    }
                    let sets = d_sets(c).unwrap();
                    assert_eq!(sets.d1.is_empty(), c.b_z() >= 0 || m21 == 0, "{c:?}");
                    assert_eq!(
                        sets.d2.is_empty(),
                        c.b_z() + m21 as i64 <= 0 || m21 == 0,
                        "{c:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn d_sets_disjoint_coordinates() {
        for m11 in 0..=6u32 {
            for m12 in 0..=6u32 {
                for m21 in 0..=6u32 {
                    let c = FatPointConfig { m11, m12, m21 };
                    if !c.is_normalized() || m11 <= m21 {
                        continue;
                    }
                    let sets = d_sets(c).unwrap();
                    let all: Vec<Bidegree> = sets.union().collect();
                    for (i, p) in all.iter().enumerate() {
                        for q in &all[i + 1..] {
                            assert_ne!(p.a, q.a, "{c:?}: {p} {q}");
                            assert_ne!(p.b, q.b, "{c:?}: {p} {q}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn d_sets_stable_under_reduction() {
        // A member (a, b-1) of D_i(Z1) lifts to (a, b) in D_i(Z).
        for m11 in 0..=6u32 {
            for m12 in 0..=6u32 {
                for m21 in 1..=6u32 {
                    let c = FatPointConfig { m11, m12, m21 };
                    if !c.is_normalized() || m11 <= m21 {
                        continue;
                    }
                    let z1 = FatPointConfig {
                        m11: m11 - 1,
                        m12,
                        m21: m21 - 1,
                    };
                    if z1.m11 <= z1.m21 {
                        continue;
                    }
                    let outer = d_sets(c).unwrap();
                    let inner = d_sets(z1).unwrap();
                    let pairs = [
                        (&inner.d1, &outer.d1),
                        (&inner.d2, &outer.d2),
                        (&inner.d3, &outer.d3),
                        (&inner.d4, &outer.d4),
                    ];
                    for (small, large) in pairs {
                        for p in small {
                            assert!(
                                large.contains(&Bidegree::new(p.a, p.b + 1)),
                                "{c:?}: {p} does not lift"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn betti_closed_homogeneous_matches_phi() {
        use crate::phi::phi_closed;
        for m in 1..=6u32 {
            let table = betti_closed(cfg(m, m, m));
            let diag = 2 * m as i64;
            for b in 0..=diag {
                assert_eq!(
                    table.get(0, diag - b, b),
                    phi_closed(m as i64 + 1, b),
                    "m={m} b={b}"
                );
            }
            assert_eq!(
                table.total(0),
                (0..=diag).map(|b| phi_closed(m as i64 + 1, b)).sum::<i64>()
            );
        }
    }

    #[test]
    fn betti_closed_one_one_one() {
        let table = betti_closed(cfg(1, 1, 1));
        assert_eq!(table.get(0, 2, 0), 1);
        assert_eq!(table.get(0, 1, 1), 1);
        assert_eq!(table.get(0, 0, 2), 1);
        assert_eq!(table.get(1, 2, 1), 1);
        assert_eq!(table.get(1, 1, 2), 1);
        assert_eq!(table.total(2), 0);
        assert_eq!(table.len(), 5);
    }

    #[test]
    fn betti_closed_case_two_spot_values() {
        use crate::phi::phi_td;
        let table = betti_closed(cfg(3, 4, 2));
        assert_eq!(table.get(0, 6, 0), phi_td(3, 1, 0).unwrap());
        assert_eq!(table.get(0, 4, 2), 1 + phi_td(3, 1, 2).unwrap());
        assert_eq!(table.get(0, 0, 7), 1);
    }

    #[test]
    fn cross_path_equality_small() {
        for m11 in 0..=4u32 {
            for m12 in 0..=4u32 {
                for m21 in 0..=4u32 {
                    let c = FatPointConfig { m11, m12, m21 };
                    assert_eq!(
                        betti_recursive(c).unwrap(),
                        betti_closed(c),
                        "cross-path mismatch at {c:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn euler_characteristic_is_one() {
        for m11 in 0..=5u32 {
            for m12 in 0..=5u32 {
                for m21 in 0..=5u32 {
                    let c = FatPointConfig { m11, m12, m21 };
                    if c.is_zero() {
                        continue;
                    }
                    let t = betti_closed(c);
                    assert_eq!(t.total(0) - t.total(1) + t.total(2), 1, "{c:?}");
                }
            }
        }
    }

    #[test]
    fn case_one_support_is_antidiagonal() {
        for m11 in 0..=5u32 {
            for m21 in m11..=5u32 {
                for m12 in m21..=5u32 {
                    let c = FatPointConfig { m11, m12, m21 };
                    if c.is_zero() {
                        continue;
                    }
                    let diag = m12 as i64 + m21 as i64;
                    for (u, deg, _) in betti_closed(c).iter() {
                        assert_eq!(deg.a + deg.b, diag + u as i64, "{c:?} {u} {deg}");
                    }
                }
            }
        }
    }
}
