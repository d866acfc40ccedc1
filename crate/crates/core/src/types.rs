//! Domain types shared by all modules, and normalization of configurations.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::Error;

/// Multiplicities are capped here at the API boundary. The formulas are
/// linear or quadratic in the multiplicities, so 64-bit arithmetic holds
/// far beyond this with room to spare.
pub const MAX_MULTIPLICITY: u32 = 1_000_000;

/// A bidegree `(a, b)` of the ring `k[P¹×P¹]`.
///
/// When a bidegree indexes a Hilbert-function argument or a Betti-table
/// entry both coordinates are nonnegative; twists `R(-a,-b)` inside a
/// resolution are recorded as the nonnegative pair `(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bidegree {
    pub a: i64,
    pub b: i64,
}

impl Bidegree {
    pub const fn new(a: i64, b: i64) -> Self {
        Bidegree { a, b }
    }

    /// The image of this bidegree under exchange of the two P¹ factors.
    pub const fn transposed(self) -> Self {
        Bidegree {
            a: self.b,
            b: self.a,
        }
    }
}

impl core::fmt::Display for Bidegree {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// Multiplicities `(m11, m12, m21)` of the three points P11, P12, P21.
///
/// P11 and P12 share the horizontal ruling, P11 and P21 the vertical one,
/// so P11 is the intersection point of the support.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FatPointConfig {
    pub m11: u32,
    pub m12: u32,
    pub m21: u32,
}

impl FatPointConfig {
    /// Validates the multiplicity cap. All multiplicities zero is accepted;
    /// it denotes the empty subscheme (unit ideal).
    pub fn new(m11: u32, m12: u32, m21: u32) -> Result<Self, Error> {
        for m in [m11, m12, m21] {
            if m > MAX_MULTIPLICITY {
                return Err(Error::MultiplicityTooLarge(m));
            }
        }
        Ok(FatPointConfig { m11, m12, m21 })
    }

    pub const fn is_zero(&self) -> bool {
        self.m11 == 0 && self.m12 == 0 && self.m21 == 0
    }

    /// `B_Z = m12 - m11`, the defect driving the case split of the closed
    /// formulas.
    pub const fn b_z(&self) -> i64 {
        self.m12 as i64 - self.m11 as i64
    }

    /// Whether the standing convention `m12 >= m21` holds.
    pub const fn is_normalized(&self) -> bool {
        self.m12 >= self.m21
    }

    /// Sum of the multiplicities; a safe stabilization bound for Hilbert
    /// function tables in both coordinates.
    pub const fn stabilization_bound(&self) -> i64 {
        self.m11 as i64 + self.m12 as i64 + self.m21 as i64
    }

    /// The configuration with the two P¹ factors exchanged. P11 is fixed,
    /// P12 and P21 trade places.
    pub const fn transposed(&self) -> Self {
        FatPointConfig {
            m11: self.m11,
            m12: self.m21,
            m21: self.m12,
        }
    }

    /// Degree of the subscheme: the sum of `C(m+1, 2)` over the three
    /// multiplicities. The Hilbert function stabilizes at this value.
    pub fn degree(&self) -> i64 {
        fn triangular(m: u32) -> i64 {
            (m as i64) * (m as i64 + 1) / 2
        }
        triangular(self.m11) + triangular(self.m12) + triangular(self.m21)
    }
}

/// Brings a configuration to the convention `m12 >= m21`.
///
/// Returns the normalized configuration and whether the two factors were
/// exchanged. When `transposed` is true every output bidegree `(a, b)`
/// computed for the normalized configuration must be read as `(b, a)` for
/// the original one.
pub fn normalize(config: FatPointConfig) -> (FatPointConfig, bool) {
    if config.is_normalized() {
        (config, false)
    } else {
        (config.transposed(), true)
    }
}

/// Bigraded Betti numbers `beta_{u,(a,b)}` of the fat point ideal,
/// `u` in `{0, 1, 2}`. Only strictly positive entries are stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, Bidegree), u64>,
}

impl BettiTable {
    pub fn new() -> Self {
        BettiTable::default()
    }

    /// Adds `mult` to the entry at `(u, deg)`. Zero increments are ignored.
    pub fn add(&mut self, u: usize, deg: Bidegree, mult: u64) {
        debug_assert!(u <= 2, "homological index out of range");
        debug_assert!(deg.a >= 0 && deg.b >= 0, "negative table bidegree");
        if mult > 0 {
            *self.entries.entry((u, deg)).or_insert(0) += mult;
        }
    }

    /// The multiplicity at `(u, (a, b))`, zero when absent or out of range.
    pub fn get(&self, u: usize, a: i64, b: i64) -> i64 {
        if a < 0 || b < 0 {
            return 0;
        }
        self.entries
            .get(&(u, Bidegree::new(a, b)))
            .map_or(0, |&m| m as i64)
    }

    /// Entries sorted by `(u, a, b)`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, Bidegree, u64)> + '_ {
        self.entries.iter().map(|(&(u, d), &m)| (u, d, m))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Sum of multiplicities at homological index `u`.
    pub fn total(&self, u: usize) -> i64 {
        self.entries
            .iter()
            .filter(|((v, _), _)| *v == u)
            .map(|(_, &m)| m as i64)
            .sum()
    }

    /// The table with every bidegree transposed.
    pub fn transposed(&self) -> Self {
        let entries = self
            .entries
            .iter()
            .map(|(&(u, d), &m)| ((u, d.transposed()), m))
            .collect();
        BettiTable { entries }
    }
}

impl FromIterator<(usize, Bidegree, u64)> for BettiTable {
    fn from_iter<I: IntoIterator<Item = (usize, Bidegree, u64)>>(iter: I) -> Self {
        let mut table = BettiTable::new();
        for (u, d, m) in iter {
            table.add(u, d, m);
        }
        table
    }
}

/// Twists of the three free modules of a minimal resolution of the ideal,
/// stored as sorted multisets of bidegree shifts: generators, first
/// syzygies, second syzygies.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FreeResolution {
    pub levels: [Vec<Bidegree>; 3],
}

impl FreeResolution {
    pub fn new(mut levels: [Vec<Bidegree>; 3]) -> Self {
        for level in &mut levels {
            level.sort_unstable();
        }
        FreeResolution { levels }
    }

    pub fn is_empty(&self) -> bool {
        self.levels.iter().all(Vec::is_empty)
    }

    /// Counts shifts per bidegree.
    pub fn to_betti_table(&self) -> BettiTable {
        let mut table = BettiTable::new();
        for (u, level) in self.levels.iter().enumerate() {
            for &shift in level {
                table.add(u, shift, 1);
            }
        }
        table
    }

    /// The resolution with every shift transposed, re-sorted.
    pub fn transposed(&self) -> Self {
        FreeResolution::new([
            self.levels[0].iter().map(|d| d.transposed()).collect(),
            self.levels[1].iter().map(|d| d.transposed()).collect(),
            self.levels[2].iter().map(|d| d.transposed()).collect(),
        ])
    }
}

/// A finite rectangular table of first differences `ΔH(i, j)`, conceptually
/// extended by zero outside the stored rectangle.
///
/// The last stored row and the last stored column must be entirely zero, so
/// that the zero extension is faithful.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaMatrix {
    rows: Vec<Vec<i64>>,
}

impl DeltaMatrix {
    /// Entries of genuine tables are bounded by the degree, which the
    /// multiplicity cap keeps far below this; the bound also keeps every
    /// partial sum the solver forms inside `i64`.
    pub const MAX_ENTRY: i64 = 1 << 40;

    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self, Error> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(Error::MalformedMatrix("matrix is empty"));
        }
        let width = rows[0].len();
        if rows.iter().any(|r| r.len() != width) {
            return Err(Error::MalformedMatrix("ragged rows"));
        }
        if rows.iter().flatten().any(|v| v.abs() > Self::MAX_ENTRY) {
            return Err(Error::MalformedMatrix("entry magnitude out of range"));
        }
        if rows[rows.len() - 1].iter().any(|&v| v != 0) {
            return Err(Error::MalformedMatrix("last row is not zero"));
        }
        if rows.iter().any(|r| r[width - 1] != 0) {
            return Err(Error::MalformedMatrix("last column is not zero"));
        }
        Ok(DeltaMatrix { rows })
    }

    pub fn n_rows(&self) -> i64 {
        self.rows.len() as i64
    }

    pub fn n_cols(&self) -> i64 {
        self.rows[0].len() as i64
    }

    /// Entry at `(i, j)`, zero outside the stored rectangle.
    pub fn get(&self, i: i64, j: i64) -> i64 {
        if i < 0 || j < 0 || i >= self.n_rows() || j >= self.n_cols() {
            return 0;
        }
        self.rows[i as usize][j as usize]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// Sum of all entries; for a genuine first-difference table this is the
    /// degree of the subscheme. Saturates rather than wrapping on inputs
    /// that are nowhere near a genuine table.
    pub fn total(&self) -> i64 {
        let total: i128 = self.rows.iter().flatten().map(|&v| v as i128).sum();
        total.clamp(i64::MIN as i128, i64::MAX as i128) as i64
    }
}
