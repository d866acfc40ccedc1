//! The cross-verification driver: runs every equivalence suite over all
//! configurations up to a multiplicity bound and reports per-check
//! pass/fail/skip counts with the first counterexample.

use fatpoints_core::hilbert::{
    delta_direct, delta_from_betti, delta_table, delta_value, hilbert_direct, hilbert_from_betti,
};
use fatpoints_core::interp::{interpolate, Verdict};
use fatpoints_core::oracle::{fat_point_ideal, taylor_betti};
use fatpoints_core::resolution::{betti_closed, betti_recursive};
use fatpoints_core::types::{BettiTable, FatPointConfig};

/// Ideals with more minimal generators than this are skipped by the oracle
/// check; strand enumeration beyond it is no longer quick enough for a
/// routine verification pass.
const ORACLE_CHECK_CAP: i64 = 14;

pub struct CheckOutcome {
    pub name: &'static str,
    pub pass: u64,
    pub fail: u64,
    pub skip: u64,
    pub first_failure: Option<String>,
}

impl CheckOutcome {
    fn new(name: &'static str) -> Self {
        CheckOutcome {
            name,
            pass: 0,
            fail: 0,
            skip: 0,
            first_failure: None,
        }
    }

    fn record(&mut self, ok: bool, counterexample: impl FnOnce() -> String) {
        if ok {
            self.pass += 1;
        } else {
            self.fail += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(counterexample());
            }
        }
    }
}

pub struct VerifySummary {
    pub mmax: u32,
    pub oracle: bool,
    pub checks: Vec<CheckOutcome>,
}

impl VerifySummary {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.fail == 0)
    }
}

fn nonzero_configs(mmax: u32) -> Vec<FatPointConfig> {
    let mut out = Vec::new();
    for m11 in 0..=mmax {
        for m12 in 0..=mmax {
            for m21 in 0..=mmax {
                let c = FatPointConfig { m11, m12, m21 };
                if !c.is_zero() {
                    out.push(c);
                }
            }
        }
    }
    out
}

pub fn run(mmax: u32, oracle: bool) -> VerifySummary {
    let configs = nonzero_configs(mmax);
    let mut checks = vec![
        cross_path(&configs),
        hilbert_agreement(&configs),
        degree_identity(&configs),
        round_trip(&configs),
    ];
    if oracle {
        checks.insert(1, taylor_oracle(&configs));
        checks.insert(2, generator_census(&configs));
    }
    VerifySummary {
        mmax,
        oracle,
        checks,
    }
}

fn cross_path(configs: &[FatPointConfig]) -> CheckOutcome {
    let mut outcome = CheckOutcome::new("betti: closed form vs recursion");
    for &c in configs {
        let closed = betti_closed(c);
        let recursive = betti_recursive(c).expect("any triple is accepted");
        outcome.record(closed == recursive, || format!("{c:?}"));
    }
    outcome
}

fn taylor_oracle(configs: &[FatPointConfig]) -> CheckOutcome {
    let mut outcome = CheckOutcome::new("betti: closed form vs taylor oracle");
    for &c in configs {
        let closed = betti_closed(c);
        if closed.total(0) > ORACLE_CHECK_CAP {
            outcome.skip += 1;
            continue;
        }
        match taylor_betti(&fat_point_ideal(c)) {
            Ok(table) => outcome.record(table == closed, || format!("{c:?}")),
            Err(err) => outcome.record(false, || format!("{c:?}: {err}")),
        }
    }
    outcome
}

fn generator_census(configs: &[FatPointConfig]) -> CheckOutcome {
    let mut outcome = CheckOutcome::new("betti: generator census vs level zero");
    for &c in configs {
        let closed = betti_closed(c);
        let mut census = BettiTable::new();
        for g in fat_point_ideal(c).generators() {
            census.add(0, g.bidegree(), 1);
        }
        let level0: BettiTable = closed.iter().filter(|(u, _, _)| *u == 0).collect();
        outcome.record(census == level0, || format!("{c:?}"));
    }
    outcome
}

fn hilbert_agreement(configs: &[FatPointConfig]) -> CheckOutcome {
    let mut outcome = CheckOutcome::new("hilbert: direct vs betti vs closed delta");
    for &c in configs {
        let closed = betti_closed(c);
        let bound = c.stabilization_bound() + 2;
        let mut witness = None;
        'scan: for a in 0..=bound {
            for b in 0..=bound {
                let direct = hilbert_direct(c, a, b);
                if direct != hilbert_from_betti(&closed, a, b)
                    || delta_direct(c, a, b) != delta_from_betti(&closed, a, b)
                    || delta_direct(c, a, b) != delta_value(c, a, b)
                {
                    witness = Some((a, b));
                    break 'scan;
                }
            }
        }
        outcome.record(witness.is_none(), || format!("{c:?} at {witness:?}"));
    }
    outcome
}

fn degree_identity(configs: &[FatPointConfig]) -> CheckOutcome {
    let mut outcome = CheckOutcome::new("hilbert: total first difference equals degree");
    for &c in configs {
        let s = c.stabilization_bound();
        let total: i64 = (0..=s)
            .map(|a| (0..=s).map(|b| delta_value(c, a, b)).sum::<i64>())
            .sum();
        outcome.record(total == c.degree(), || format!("{c:?}: {total}"));
    }
    outcome
}

fn round_trip(configs: &[FatPointConfig]) -> CheckOutcome {
    let mut outcome = CheckOutcome::new("interp: forward tables round-trip");
    for &c in configs {
        let s = c.stabilization_bound();
        let input = delta_table(c, s, s).expect("forward tables have a zero border");
        let verdict = interpolate(&input).verdict;
        let ok = match verdict {
            Verdict::IsHilbertFunction(found) => {
                let fs = found.stabilization_bound().max(s);
                let echo = delta_table(found, fs, fs).expect("zero border");
                (0..=fs).all(|a| (0..=fs).all(|b| echo.get(a, b) == input.get(a, b)))
            }
            _ => false,
        };
        outcome.record(ok, || format!("{c:?}: {verdict:?}"));
    }
    outcome
}
