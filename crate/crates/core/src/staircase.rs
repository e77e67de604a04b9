//! Staircase complexes, recorded by the bifiltration levels of their grading-0
//! generators.
//!
//! Only the grading-0 cycles matter for the correction-term computation: they
//! are all homologous, and `delta_m` depends on nothing but their `(alpha, beta)`
//! levels. Differentials, gradings and acyclic summands are not modelled.

use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::StaircaseError;

/// Bifiltration level `(alpha, beta)` of a generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "(u32, u32)", into = "(u32, u32)")]
pub struct BifiltGen {
    pub alpha: u32,
    pub beta: u32,
}

impl BifiltGen {
    pub const fn new(alpha: u32, beta: u32) -> Self {
        Self { alpha, beta }
    }

    pub const fn swapped(self) -> Self {
        Self::new(self.beta, self.alpha)
    }

    /// `self` lies weakly below and to the left of `other` and differs from it.
    pub fn dominates(self, other: Self) -> bool {
        self != other && self.alpha <= other.alpha && self.beta <= other.beta
    }

    fn checked_add(self, other: Self) -> Option<Self> {
        Some(Self::new(self.alpha.checked_add(other.alpha)?, self.beta.checked_add(other.beta)?))
    }
}

impl From<(u32, u32)> for BifiltGen {
    fn from((alpha, beta): (u32, u32)) -> Self {
        Self::new(alpha, beta)
    }
}

impl From<BifiltGen> for (u32, u32) {
    fn from(g: BifiltGen) -> Self {
        (g.alpha, g.beta)
    }
}

impl fmt::Display for BifiltGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.alpha, self.beta)
    }
}

/// A swap-symmetric staircase: sorted by `alpha` ascending, `beta` strictly
/// descends.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Staircase {
    gens: Vec<BifiltGen>,
}

impl Staircase {
    /// Validates and sorts an explicit list of corners.
    pub fn new(mut gens: Vec<BifiltGen>) -> Result<Self, StaircaseError> {
        if gens.is_empty() {
            return Err(StaircaseError::Empty);
        }
        gens.sort_unstable();
        for w in gens.windows(2) {
            let (a, b) = (w[0], w[1]);
            if a == b {
                return Err(StaircaseError::Duplicate(a.alpha, a.beta));
            }
            if a.alpha == b.alpha || b.beta >= a.beta {
                return Err(StaircaseError::NotMonotone(a.alpha, a.beta, b.alpha, b.beta));
            }
        }
        for g in &gens {
            if gens.binary_search(&g.swapped()).is_err() {
                return Err(StaircaseError::Asymmetric(g.alpha, g.beta));
            }
        }
        Ok(Self { gens })
    }

    /// The staircase `{(a_i, a_{r-i})}` determined by a strictly increasing
    /// sequence `a_0 < a_1 < ... < a_r`. Every symmetric staircase has this form.
    pub fn from_corner_sequence(levels: &[u32]) -> Result<Self, StaircaseError> {
        Self::new(levels.iter().zip(levels.iter().rev()).map(|(&a, &b)| BifiltGen::new(a, b)).collect())
    }

    /// The symmetric staircase spanned by one representative of each
    /// mirror pair (self-mirrored generators listed once).
    pub fn from_half(half: &[(u32, u32)]) -> Result<Self, StaircaseError> {
        let mut gens: BTreeSet<BifiltGen> = BTreeSet::new();
        for &(a, b) in half {
            gens.insert(BifiltGen::new(a, b));
            gens.insert(BifiltGen::new(b, a));
        }
        Self::new(gens.into_iter().collect())
    }

    pub fn generators(&self) -> &[BifiltGen] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// JSON array of `[alpha, beta]` pairs, sorted by `alpha`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.gens).expect("staircase serialization is infallible")
    }

    pub fn from_json(s: &str) -> Result<Self, StaircaseError> {
        let gens: Vec<BifiltGen> =
            serde_json::from_str(s).map_err(|e| StaircaseError::Parse(e.to_string()))?;
        Self::new(gens)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, StaircaseError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| StaircaseError::Io { path: path.display().to_string(), message: e.to_string() })?;
        Self::from_json(&text)
    }
}

const TORUS_14_15_HALF: [(u32, u32); 8] =
    [(0, 105), (1, 91), (3, 78), (6, 66), (10, 55), (15, 45), (21, 36), (28, 28)];

/// The 15 grading-0 generators of the staircase `C_1` of `T(14, 15)`.
pub fn torus_14_15() -> Staircase {
    Staircase::from_half(&TORUS_14_15_HALF).expect("tabulated staircase is valid")
}

/// The 23 generators `{(j, 22 - j)}` of `C_2` for the sum of 22 Whitehead
/// doubles.
pub fn whitehead_sum_22() -> Staircase {
    let half: Vec<(u32, u32)> = (0..=11).map(|j| (j, 22 - j)).collect();
    Staircase::from_half(&half).expect("tabulated staircase is valid")
}

fn triangular(k: u32) -> u32 {
    k * (k + 1) / 2
}

/// `{(T_k, T_{n-1-k}) : 0 <= k < n}` with triangular numbers `T_k`.
///
/// Agrees with [`torus_14_15`] at `n = 15`. The pattern is not valid for small
/// torus knots (it overcounts for `T(2,3)`), so `n < 15` is rejected.
pub fn consecutive_torus_staircase(n: u32) -> Result<Staircase, StaircaseError> {
    // T_{n-1} must fit in u32.
    if n < 15 || n % 2 == 0 || n > 92_681 {
        return Err(StaircaseError::UnvalidatedTorusParameter(n));
    }
    let levels: Vec<u32> = (0..n).map(triangular).collect();
    Staircase::from_corner_sequence(&levels)
}

/// `{(j, k - j) : 0 <= j <= k}`.
pub fn unit_staircase(k: u32) -> Staircase {
    let levels: Vec<u32> = (0..=k).collect();
    Staircase::from_corner_sequence(&levels).expect("consecutive levels form a staircase")
}

/// Bifiltration levels of a tensor product of staircases: all coordinate-wise
/// sums, with duplicates collapsed. `pair_count` keeps the number of
/// generator pairs before collapsing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    levels: BTreeSet<BifiltGen>,
    pair_count: u64,
}

impl GeneratorSet {
    pub fn from_levels(levels: impl IntoIterator<Item = BifiltGen>) -> Self {
        let levels: BTreeSet<BifiltGen> = levels.into_iter().collect();
        let pair_count = levels.len() as u64;
        Self { levels, pair_count }
    }

    pub fn levels(&self) -> &BTreeSet<BifiltGen> {
        &self.levels
    }

    pub fn iter(&self) -> impl Iterator<Item = &BifiltGen> + '_ {
        self.levels.iter()
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn pair_count(&self) -> u64 {
        self.pair_count
    }

    pub fn contains(&self, g: BifiltGen) -> bool {
        self.levels.contains(&g)
    }

    pub fn is_swap_symmetric(&self) -> bool {
        self.levels.iter().all(|g| self.levels.contains(&g.swapped()))
    }

    pub fn tensor(&self, other: &GeneratorSet) -> Result<GeneratorSet, StaircaseError> {
        let mut levels = BTreeSet::new();
        for &a in &self.levels {
            for &b in &other.levels {
                levels.insert(a.checked_add(b).ok_or(StaircaseError::Overflow)?);
            }
        }
        Ok(Self { levels, pair_count: self.pair_count * other.pair_count })
    }
}

impl From<&Staircase> for GeneratorSet {
    fn from(s: &Staircase) -> Self {
        Self::from_levels(s.gens.iter().copied())
    }
}

impl<'a> IntoIterator for &'a GeneratorSet {
    type Item = &'a BifiltGen;
    type IntoIter = std::collections::btree_set::Iter<'a, BifiltGen>;
    fn into_iter(self) -> Self::IntoIter {
        self.levels.iter()
    }
}

/// Bifiltration levels of `s1 ⊗ s2`.
pub fn tensor(s1: &Staircase, s2: &Staircase) -> Result<GeneratorSet, StaircaseError> {
    GeneratorSet::from(s1).tensor(&GeneratorSet::from(s2))
}

/// Tensor product of any number of staircases; the unit is `{(0, 0)}`.
pub fn tensor_all<'a>(
    factors: impl IntoIterator<Item = &'a Staircase>,
) -> Result<GeneratorSet, StaircaseError> {
    factors
        .into_iter()
        .try_fold(GeneratorSet::from(&unit_staircase(0)), |acc, s| acc.tensor(&GeneratorSet::from(s)))
}

/// Levels not dominated by any other level.
///
/// `Psi` is nondecreasing in both coordinates, so every `delta_m` is attained
/// on this subset.
pub fn pareto_min<'a>(levels: impl IntoIterator<Item = &'a BifiltGen>) -> Vec<BifiltGen> {
    let mut sorted: Vec<BifiltGen> = levels.into_iter().copied().collect();
    sorted.sort_unstable();
    sorted.dedup();
    let mut out = Vec::new();
    let mut best_beta = u32::MAX;
    for g in sorted {
        // Sorted by (alpha, beta): a point survives iff its beta beats every
        // point with alpha <= its own.
        if out.is_empty() || g.beta < best_beta {
            best_beta = g.beta;
            out.push(g);
        }
    }
    out
}
