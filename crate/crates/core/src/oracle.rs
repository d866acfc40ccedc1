//! Brute-force verification path: explicit monomial ideal arithmetic and
//! Taylor complex strand homology. Nothing here relies on the closed
//! formulas; agreement between this module and [`crate::resolution`] is the
//! strongest check the crate runs.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::types::{BettiTable, Bidegree, FatPointConfig};

/// Monomial in `x0, x1, x2, x3`, of bidegree `(e0 + e1, e2 + e3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial4 {
    pub exps: [u32; 4],
}

impl Monomial4 {
    pub const fn new(e0: u32, e1: u32, e2: u32, e3: u32) -> Self {
        Monomial4 {
            exps: [e0, e1, e2, e3],
        }
    }

    pub const fn one() -> Self {
        Monomial4 { exps: [0; 4] }
    }

    pub fn bidegree(&self) -> Bidegree {
        Bidegree::new(
            (self.exps[0] + self.exps[1]) as i64,
            (self.exps[2] + self.exps[3]) as i64,
        )
    }

    pub fn divides(&self, other: &Monomial4) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial4) -> Monomial4 {
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(&other.exps) {
            *e = (*e).max(*o);
        }
        Monomial4 { exps }
    }
}

/// A monomial ideal held by its minimal generating set, sorted and pairwise
/// indivisible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    gens: Vec<Monomial4>,
}

impl MonomialIdeal {
    /// Minimalizes: drops duplicates and generators divisible by another.
    pub fn new(mut gens: Vec<Monomial4>) -> Self {
        gens.sort_unstable();
        gens.dedup();
        let minimal: Vec<Monomial4> = gens
            .iter()
            .filter(|g| !gens.iter().any(|h| h != *g && h.divides(g)))
            .copied()
            .collect();
        MonomialIdeal { gens: minimal }
    }

    pub fn unit() -> Self {
        MonomialIdeal {
            gens: vec![Monomial4::one()],
        }
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0] == Monomial4::one()
    }

    pub fn generators(&self) -> &[Monomial4] {
        &self.gens
    }

    pub fn contains(&self, m: &Monomial4) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Intersection via pairwise least common multiples, then
    /// minimalization.
    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut lcms = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                lcms.push(g.lcm(h));
            }
        }
        MonomialIdeal::new(lcms)
    }

    /// `(x_u, x_v)^m`, generated by `x_u^s x_v^(m-s)`.
    pub fn power_of_point_ideal(u: usize, v: usize, m: u32) -> MonomialIdeal {
        if m == 0 {
            return MonomialIdeal::unit();
        }
        let gens = (0..=m)
            .map(|s| {
                let mut exps = [0u32; 4];
                exps[u] = s;
                exps[v] = m - s;
                Monomial4 { exps }
            })
            .collect();
        MonomialIdeal::new(gens)
    }
}

/// `(x0,x2)^m11 ∩ (x0,x3)^m12 ∩ (x1,x2)^m21`. The zero configuration gives
/// the unit ideal.
pub fn fat_point_ideal(config: FatPointConfig) -> MonomialIdeal {
    let p11 = MonomialIdeal::power_of_point_ideal(0, 2, config.m11);
    let p12 = MonomialIdeal::power_of_point_ideal(0, 3, config.m12);
    let p21 = MonomialIdeal::power_of_point_ideal(1, 2, config.m21);
    p11.intersect(&p12).intersect(&p21)
}

/// Number of monomials of bidegree `(a, b)` lying in the ideal. The Hilbert
/// function of the quotient is `(a+1)(b+1)` minus this.
pub fn dim_bidegree(ideal: &MonomialIdeal, a: i64, b: i64) -> i64 {
    if a < 0 || b < 0 {
        return 0;
    }
    let mut count = 0;
    for i in 0..=a {
        for j in 0..=b {
            let m = Monomial4::new(i as u32, (a - i) as u32, j as u32, (b - j) as u32);
            if ideal.contains(&m) {
                count += 1;
            }
        }
    }
    count
}

/// Rank over the rationals by fraction-free (Bareiss) elimination.
///
/// Pivots are chosen by least magnitude to keep intermediate minors small;
/// every division is exact. Arithmetic is checked `i128`; overflow would
/// need minors beyond 2^127, far past anything the strand matrices produce,
/// and panics rather than wrapping.
pub fn rank_exact(mut rows: Vec<Vec<i128>>) -> usize {
    let n_rows = rows.len();
    if n_rows == 0 {
        return 0;
    }
    let n_cols = rows[0].len();
    let mut rank = 0;
    let mut prev_pivot: i128 = 1;
    for col in 0..n_cols {
        if rank == n_rows {
            break;
        }
        let pivot_row = (rank..n_rows)
            .filter(|&r| rows[r][col] != 0)
            .min_by_key(|&r| rows[r][col].unsigned_abs());
        let Some(pivot_row) = pivot_row else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let pivot = rows[rank][col];
        for r in rank + 1..n_rows {
            let lead = rows[r][col];
            for c in col..n_cols {
                let a = pivot.checked_mul(rows[r][c]).expect("rank_exact overflow");
                let b = lead
                    .checked_mul(rows[rank][c])
                    .expect("rank_exact overflow");
                let num = a.checked_sub(b).expect("rank_exact overflow");
                debug_assert_eq!(num % prev_pivot, 0, "Bareiss division must be exact");
                rows[r][c] = num / prev_pivot;
            }
        }
        prev_pivot = pivot;
        rank += 1;
    }
    rank
}

/// Refuse ideals with more minimal generators than this; size-4 subset
/// enumeration beyond it stops being desk scale.
pub const ORACLE_GENERATOR_CAP: usize = 27;

/// Up to this many generators the strand computation also enumerates
/// size-5 subsets and verifies that homology vanishes above level 3.
const TRUNCATION_CHECK_CAP: usize = 14;

/// Subsets of the generators sharing one least common multiple, grouped by
/// cardinality. Index `p` holds the bitmasks of the `p`-element subsets.
struct Strand {
    by_size: [Vec<u32>; 6],
}

impl Strand {
    fn new() -> Self {
        Strand {
            by_size: Default::default(),
        }
    }
}

/// Bigraded Betti numbers of the ideal by Taylor complex strand homology.
///
/// For each multidegree `α` arising as an lcm of at most four generators,
/// the strand of the Taylor complex tensored with the residue field has
/// basis in homological position `p` the `p`-subsets with lcm exactly `α`,
/// and differential entries `±1` where dropping a generator keeps the lcm.
/// `β_{u,(a,b)}` of the ideal is the sum over `α` of bidegree `(a, b)` of
/// `dim H_{u+1}`, with ranks computed exactly. Everything the three levels
/// need lives in subsets of size at most four.
pub fn taylor_betti(ideal: &MonomialIdeal) -> Result<BettiTable, Error> {
    let gens = ideal.generators();
    let g = gens.len();
    if g > ORACLE_GENERATOR_CAP {
        return Err(Error::OracleScaleExceeded { generators: g });
    }
    let max_size = if g <= TRUNCATION_CHECK_CAP { 5 } else { 4 };
    let check_truncation = g <= TRUNCATION_CHECK_CAP;

    let mut strands: BTreeMap<Monomial4, Strand> = BTreeMap::new();
    let mut record = |mask: u32, size: usize, lcm: Monomial4| {
        strands.entry(lcm).or_insert_with(Strand::new).by_size[size].push(mask);
    };

    record(0, 0, Monomial4::one());
    for i in 0..g {
        let lcm_i = gens[i];
        record(1 << i, 1, lcm_i);
        for j in i + 1..g {
            let lcm_ij = lcm_i.lcm(&gens[j]);
            record(1 << i | 1 << j, 2, lcm_ij);
            for k in j + 1..g {
                let lcm_ijk = lcm_ij.lcm(&gens[k]);
                record(1 << i | 1 << j | 1 << k, 3, lcm_ijk);
                for l in k + 1..g {
                    let lcm_ijkl = lcm_ijk.lcm(&gens[l]);
                    let mask = 1 << i | 1 << j | 1 << k | 1 << l;
                    record(mask, 4, lcm_ijkl);
                    if max_size < 5 {
                        continue;
                    }
                    for r in l + 1..g {
                        record(mask | 1 << r, 5, lcm_ijkl.lcm(&gens[r]));
                    }
                }
            }
        }
    }

    // binary_search in rank_boundary needs the bases sorted
    for strand in strands.values_mut() {
        for masks in &mut strand.by_size {
            masks.sort_unstable();
        }
    }

    let mut table = BettiTable::new();
    for (alpha, strand) in &strands {
        // rank of the differential from size p to size p-1 within the strand
        let rank_boundary = |p: usize| -> usize {
            let sources = &strand.by_size[p];
            let targets = &strand.by_size[p - 1];
            if sources.is_empty() || targets.is_empty() {
                return 0;
            }
            let mut matrix = vec![vec![0i128; targets.len()]; sources.len()];
            for (row, &mask) in sources.iter().enumerate() {
                let mut sign = 1i128;
                for s in 0..g as u32 {
                    if mask & (1 << s) == 0 {
                        continue;
                    }
                    let smaller = mask & !(1 << s);
                    // target basis holds exactly the subsets with lcm alpha
                    if let Ok(col) = targets.binary_search(&smaller) {
                        matrix[row][col] = sign;
                    }
                    sign = -sign;
                }
            }
            rank_exact(matrix)
        };

        let dims: Vec<usize> = (0..=max_size).map(|p| strand.by_size[p].len()).collect();
        let ranks: Vec<usize> = (0..=max_size)
            .map(|p| if p == 0 { 0 } else { rank_boundary(p) })
            .collect();
        let homology = |p: usize| -> i64 {
            let above = if p < max_size { ranks[p + 1] } else { 0 };
            dims[p] as i64 - ranks[p] as i64 - above as i64
        };

        let deg = alpha.bidegree();
        for u in 0..3 {
            let h = homology(u + 1);
            debug_assert!(h >= 0, "negative homology dimension");
            if h > 0 {
                table.add(u, deg, h as u64);
            }
        }
        if check_truncation && homology(4) != 0 {
            return Err(Error::HomologyTruncation { a: deg.a, b: deg.b });
        }
    }
    Ok(table)
}
