//! Core growth of powers, plus the two-letter "dummy" machine used to bound
//! the growth of the H₃ example from below.
//!
//! The dummy machine has states `B` and `σ_i^j` (`i, j ∈ {0, 1}`) with
//! `π(x, σ_i^j) = σ_{i+1}^{x+ij}` and `λ(x, σ_i^j) = x + j`, everything mod 2.
//! Running its `k`-th power from `(σ_1^1)^k` on `x_1 … x_r`, the `j`-th
//! component ends in a state whose exponent is a mod-2 combination of the
//! `x`'s with coefficients `Σ(t-1, ·)`; see
//! [`dummy_active_state_closed_form`].

use std::collections::{HashMap, VecDeque};
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::algebra::{self, NormalForm};
use crate::error::{Error, Result};
use crate::sync::{self, sync_level};
use crate::transducer::Transducer;
use crate::word::Letter;

/// One power in a growth series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrowthRecord {
    pub m: usize,
    /// `|Core(A^m)|` from the raw power, when that power is within the cap.
    pub core_size: Option<usize>,
    /// `|min Core(A^m)|`.
    pub min_core_size: usize,
    /// Minimal synchronizing level of `min Core(A^m)`.
    pub sync_level: usize,
    /// CoreDist of the unreduced product `min Core(A^(m-1)) ∗ min Core(A)`
    /// (of `A` itself for `m = 1`).
    pub core_dist: usize,
}

impl GrowthRecord {
    /// `|min Core(A^m)| ≥ m`.
    pub fn conjecture_ok(&self) -> bool {
        self.min_core_size >= self.m
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GrowthClass {
    Exponential,
    AtLeastPolynomial,
    Bounded,
    Inconclusive,
}

impl fmt::Display for GrowthClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GrowthClass::Exponential => "exponential",
            GrowthClass::AtLeastPolynomial => "at-least-polynomial",
            GrowthClass::Bounded => "bounded",
            GrowthClass::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ClassifyOptions {
    pub min_slope: f64,
    pub max_residual: f64,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            min_slope: 0.05,
            max_residual: 0.1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Classification {
    pub class: GrowthClass,
    /// Least-squares slope of `ln |min Core(A^m)|` against `m` over the second
    /// half of the series.
    pub log_slope: f64,
    /// Euclidean norm of that fit's residuals.
    pub residual: f64,
}

/// Empirical label for a series of at least four records.
///
/// Exponential when the log-size slope over the last half exceeds
/// `min_slope` with residual norm below `max_residual`; bounded when the
/// last three sizes agree; at-least-polynomial when sizes strictly increase;
/// inconclusive otherwise.
pub fn classify_growth(records: &[GrowthRecord], opts: ClassifyOptions) -> Result<Classification> {
    if records.len() < 4 {
        return Err(Error::TooFewRecords {
            needed: 4,
            got: records.len(),
        });
    }
    let tail = &records[records.len() / 2..];
    let xs: Vec<f64> = tail.iter().map(|r| r.m as f64).collect();
    let ys: Vec<f64> = tail.iter().map(|r| (r.min_core_size as f64).ln()).collect();
    let n = xs.len() as f64;
    let mean_x = xs.iter().sum::<f64>() / n;
    let mean_y = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mean_x).powi(2)).sum();
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mean_x) * (y - mean_y)).sum();
    let slope = if sxx > 0.0 { sxy / sxx } else { 0.0 };
    let intercept = mean_y - slope * mean_x;
    let residual = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (y - intercept - slope * x).powi(2))
        .sum::<f64>()
        .sqrt();

    let sizes: Vec<usize> = records.iter().map(|r| r.min_core_size).collect();
    let last3 = &sizes[sizes.len() - 3..];
    let class = if slope > opts.min_slope && residual < opts.max_residual {
        GrowthClass::Exponential
    } else if last3.iter().all(|&s| s == last3[0]) {
        GrowthClass::Bounded
    } else if sizes.windows(2).all(|w| w[0] < w[1]) {
        GrowthClass::AtLeastPolynomial
    } else {
        GrowthClass::Inconclusive
    };
    Ok(Classification {
        class,
        log_slope: slope,
        residual,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GrowthOptions {
    /// Raw powers above this many states are skipped for `core_size`.
    pub raw_cap: usize,
}

impl Default for GrowthOptions {
    fn default() -> Self {
        GrowthOptions { raw_cap: 1 << 16 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GrowthSeries {
    pub base_states: usize,
    pub alphabet: usize,
    pub records: Vec<GrowthRecord>,
    /// Present when there are at least four records.
    pub classification: Option<Classification>,
    /// `|min Core(A^m)| ≥ m` for every record.
    pub conjecture_ok: bool,
}

/// `|min Core(A^m)|` and friends for `m = 1..=max_m`, via repeated monoid
/// products.
pub fn growth_series(a: &Transducer, max_m: usize) -> Result<GrowthSeries> {
    growth_series_with(a, max_m, GrowthOptions::default(), ClassifyOptions::default())
}

pub fn growth_series_with(
    a: &Transducer,
    max_m: usize,
    opts: GrowthOptions,
    classify: ClassifyOptions,
) -> Result<GrowthSeries> {
    if max_m == 0 {
        return Err(Error::Invalid("max power must be at least 1".into()));
    }
    sync_level(a).ok_or(Error::NotSynchronizing)?;
    let base = NormalForm::of(a)?;
    let mut records = Vec::with_capacity(max_m);
    let mut previous: Option<NormalForm> = None;
    for m in 1..=max_m {
        let (current, core_dist) = match &previous {
            None => (base.clone(), sync::core_dist(a)?),
            Some(prev) => {
                let unreduced = algebra::product(prev.machine(), base.machine())?;
                let dist = sync::core_dist(&unreduced)?;
                (NormalForm::of(&unreduced)?, dist)
            }
        };
        let core_size = algebra::power_capped(a, m, opts.raw_cap)
            .ok()
            .map(|raw| sync::core_states(&raw).map(|c| c.len()))
            .transpose()?;
        records.push(GrowthRecord {
            m,
            core_size,
            min_core_size: current.size(),
            sync_level: current.level(),
            core_dist,
        });
        previous = Some(current);
    }
    let classification = if records.len() >= 4 {
        Some(classify_growth(&records, classify)?)
    } else {
        None
    };
    Ok(GrowthSeries {
        base_states: a.num_states(),
        alphabet: a.alphabet_size(),
        conjecture_ok: records.iter().all(GrowthRecord::conjecture_ok),
        records,
        classification,
    })
}

impl GrowthSeries {
    pub fn to_csv(&self) -> String {
        let mut s = String::from("m,core_size,min_core_size,sync_level,core_dist,conjecture_ok\n");
        for r in &self.records {
            s.push_str(&format!(
                "{},{},{},{},{},{}\n",
                r.m,
                r.core_size.map(|c| c.to_string()).unwrap_or_default(),
                r.min_core_size,
                r.sync_level,
                r.core_dist,
                r.conjecture_ok()
            ));
        }
        s
    }
}

/// Memoized `Σ(i, j)`: `Σ(0, j) = j`, `Σ(i, j) = 0` for `j ≤ 0`, and
/// `Σ(i, j) = Σ_{k=1..j} Σ(i-1, k)`, evaluated through
/// `Σ(i, j) = Σ(i, j-1) + Σ(i-1, j)`.
#[derive(Clone, Debug, Default)]
pub struct SigmaTable {
    memo: HashMap<(u32, i64), BigUint>,
}

impl SigmaTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, i: u32, j: i64) -> BigUint {
        if j <= 0 {
            return BigUint::zero();
        }
        if i == 0 {
            return BigUint::from(j as u64);
        }
        if let Some(v) = self.memo.get(&(i, j)) {
            return v.clone();
        }
        // Fill the row for i up to j iteratively to avoid deep recursion.
        let mut acc = BigUint::zero();
        for k in 1..=j {
            if let Some(v) = self.memo.get(&(i, k)) {
                acc = v.clone();
                continue;
            }
            acc += self.get(i - 1, k);
            self.memo.insert((i, k), acc.clone());
        }
        acc
    }

    /// `Σ(i, j) mod 2`.
    pub fn parity(&mut self, i: u32, j: i64) -> u8 {
        u8::from(self.get(i, j).bit(0))
    }
}

/// `Σ(i, j)` as an exact integer.
pub fn sigma(i: u32, j: i64) -> BigUint {
    SigmaTable::new().get(i, j)
}

/// A state of the dummy machine. `Root` is `B`; `Sigma { sub, exp }` is
/// `σ_sub^exp`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DummyState {
    Root,
    Sigma { sub: u8, exp: u8 },
}

impl DummyState {
    pub const fn sigma(sub: u8, exp: u8) -> Self {
        DummyState::Sigma { sub, exp }
    }

    fn index(self) -> usize {
        match self {
            DummyState::Root => 0,
            DummyState::Sigma { sub: 0, exp: 1 } => 1,
            DummyState::Sigma { sub: 1, exp: 1 } => 2,
            DummyState::Sigma { sub: 0, exp: 0 } => 3,
            DummyState::Sigma { sub: 1, exp: 0 } => 4,
            DummyState::Sigma { .. } => unreachable!("sub and exp are bits"),
        }
    }

    fn from_index(i: usize) -> Self {
        [
            DummyState::Root,
            DummyState::sigma(0, 1),
            DummyState::sigma(1, 1),
            DummyState::sigma(0, 0),
            DummyState::sigma(1, 0),
        ][i]
    }

    pub fn label(self) -> &'static str {
        ["B", "s0_1", "s1_1", "s0_0", "s1_0"][self.index()]
    }
}

impl fmt::Display for DummyState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DummyState::Root => f.write_str("B"),
            DummyState::Sigma { sub, exp } => write!(f, "σ_{sub}^{exp}"),
        }
    }
}

/// The five-state dummy machine over `{0, 1}`, states in the order
/// `B, σ_0^1, σ_1^1, σ_0^0, σ_1^0` (labels `B s0_1 s1_1 s0_0 s1_0`).
pub fn dummy_transducer() -> Transducer {
    let labels = (0..5).map(|i| DummyState::from_index(i).label().to_string()).collect();
    Transducer::from_fn(2, labels, |q, x| match DummyState::from_index(q) {
        // B --0|0--> σ_1^1, B --1|1--> σ_0^1
        DummyState::Root => (
            if x == 0 { DummyState::sigma(1, 1) } else { DummyState::sigma(0, 1) }.index(),
            x,
        ),
        DummyState::Sigma { sub, exp } => {
            let x = x as u8;
            let next = DummyState::sigma((sub + 1) % 2, (x + sub * exp) % 2);
            (next.index(), ((x + exp) % 2) as Letter)
        }
    })
    .expect("dummy machine is well formed")
}

/// Componentwise run of the `k`-th power of the dummy machine from
/// `(σ_1^1)^k` on the bits `x`: each letter passes through the components
/// in order, each component consuming the previous one's output.
pub fn dummy_active_state(x: &[u8], k: usize) -> Vec<DummyState> {
    let machine = dummy_transducer();
    let mut states = vec![DummyState::sigma(1, 1).index(); k];
    for &bit in x {
        let mut letter = bit as Letter;
        for s in states.iter_mut() {
            let out = machine.output(*s, letter);
            *s = machine.next(*s, letter);
            letter = out;
        }
    }
    states.into_iter().map(DummyState::from_index).collect()
}

/// Coefficient of `x_{r-t}` in the exponent of the `j`-th component after
/// reading `r` letters: `Σ(t-1, j - ⌊t/2⌋)` for odd `r`, `Σ(t-1, j - ⌈t/2⌉)`
/// for even `r`, and 1 for `t = 0`.
fn exponent_coefficient(table: &mut SigmaTable, r: usize, t: usize, j: usize) -> u8 {
    if t == 0 {
        return 1;
    }
    let shift = if r % 2 == 1 { t / 2 } else { t.div_ceil(2) };
    table.parity(t as u32 - 1, j as i64 - shift as i64)
}

/// The same active state as [`dummy_active_state`], from the closed-form
/// exponents. `x_0 = 1` and `x_l = 0` for `l < 0`; after an odd number of
/// letters every subscript is 0, after an even number it is 1.
pub fn dummy_active_state_closed_form(x: &[u8], k: usize) -> Vec<DummyState> {
    let mut table = SigmaTable::new();
    dummy_closed_form_with(&mut table, x, k)
}

/// [`dummy_active_state_closed_form`] reusing a caller's Σ memo.
pub fn dummy_closed_form_with(
    table: &mut SigmaTable,
    x: &[u8],
    k: usize,
) -> Vec<DummyState> {
    let r = x.len();
    let bit = |l: usize| if l == 0 { 1 } else { x[l - 1] };
    let sub = if r % 2 == 1 { 0 } else { 1 };
    (1..=k)
        .map(|j| {
            let exp = (0..=r)
                .map(|t| exponent_coefficient(table, r, t, j) & bit(r - t))
                .fold(0u8, |a, b| a ^ b);
            DummyState::sigma(sub, exp)
        })
        .collect()
}

/// Bits `x_1 … x_{2j-1}` such that, after reading them, the first `j`
/// components of the dummy power's active state are `σ_0^{y_1} … σ_0^{y_j}`.
///
/// Component `l` depends only on `x_{2j-1}` down to `x_{2j-2l}` (plus the
/// constant `x_0 = 1` when `l = j`), and the two newest of those appear with
/// coefficient 1, so the system is triangular over ℤ₂: for each `l` the
/// older free bit is set to 0 and the newest is solved for.
pub fn solve_exponent_prefix(y: &[u8]) -> Result<Vec<u8>> {
    let j = y.len();
    if j == 0 {
        return Err(Error::Invalid("prefix must be nonempty".into()));
    }
    if y.iter().any(|&b| b > 1) {
        return Err(Error::Invalid("prefix must consist of bits".into()));
    }
    let r = 2 * j - 1;
    let mut table = SigmaTable::new();
    // x[l] for l in 1..=r; x[0] = 1.
    let mut x = vec![0u8; r + 1];
    x[0] = 1;
    for l in 1..=j {
        // Unknowns introduced by component l sit at t = 2l-2 and t = 2l-1.
        let t_solve = 2 * l - 1;
        let target_pos = r - (2 * l - 2);
        let solve_pos = r as isize - t_solve as isize;
        let (free_pos, unknown_pos) = if solve_pos >= 1 {
            (Some(target_pos), solve_pos as usize)
        } else {
            (None, target_pos)
        };
        if let Some(p) = free_pos {
            x[p] = 0;
        }
        // Sum every term except the unknown.
        let mut acc = 0u8;
        for t in 0..=r {
            let pos = r - t;
            if pos == unknown_pos {
                continue;
            }
            acc ^= exponent_coefficient(&mut table, r, t, l) & x[pos];
        }
        let coeff = exponent_coefficient(&mut table, r, r - unknown_pos, l);
        debug_assert_eq!(coeff, 1);
        x[unknown_pos] = (y[l - 1] ^ acc) & 1;
    }
    let solution = x[1..].to_vec();
    let realized = dummy_active_state(&solution, j);
    let expected: Vec<DummyState> = y.iter().map(|&b| DummyState::sigma(0, b)).collect();
    assert_eq!(realized, expected, "triangular solve must realize the prefix");
    Ok(solution)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LowerBoundRow {
    pub m: usize,
    pub min_core_size: usize,
    /// States of `min Core(A^m)` reachable from the class of `q^m`.
    pub reachable: usize,
    /// `2^⌊m/2⌋`.
    pub bound: u128,
    pub holds: bool,
    /// `reachable - (m + 1)`: size gap against an `(m+1)`-state machine
    /// bi-synchronizing at the same level.
    pub gap: i128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LowerBoundReport {
    pub loop_letter: Letter,
    pub rows: Vec<LowerBoundRow>,
}

impl LowerBoundReport {
    pub fn all_hold(&self) -> bool {
        self.rows.iter().all(|r| r.holds)
    }
}

/// For a state `q` carrying a loop `x|x`: counts the states of
/// `min Core(A^m)` reachable from the class of `q^m` (the unique state with
/// loop `x|x`) and compares with `2^⌊m/2⌋`.
pub fn verify_lower_bound(a: &Transducer, q: usize, max_m: usize) -> Result<LowerBoundReport> {
    if q >= a.num_states() {
        return Err(Error::UnknownState(q.to_string()));
    }
    let x = (0..a.alphabet_size() as Letter)
        .find(|&x| a.next(q, x) == q && a.output(q, x) == x)
        .ok_or_else(|| Error::NoFixedLoop(a.label(q).to_string()))?;
    let base = NormalForm::of(a)?;
    let mut rows = Vec::with_capacity(max_m);
    for (i, nf) in base.powers(max_m).enumerate() {
        let nf = nf?;
        let m = i + 1;
        let machine = nf.machine();
        let start = (0..=nf.level()).fold(0, |s, _| machine.next(s, x));
        debug_assert_eq!(machine.next(start, x), start);
        let reachable = reachable_count(machine, start);
        let bound = 1u128 << (m / 2);
        rows.push(LowerBoundRow {
            m,
            min_core_size: nf.size(),
            reachable,
            bound,
            holds: reachable as u128 >= bound,
            gap: reachable as i128 - (m as i128 + 1),
        });
    }
    Ok(LowerBoundReport {
        loop_letter: x,
        rows,
    })
}

fn reachable_count(t: &Transducer, start: usize) -> usize {
    let mut seen = vec![false; t.num_states()];
    let mut queue = VecDeque::from([start]);
    seen[start] = true;
    let mut count = 1;
    while let Some(q) = queue.pop_front() {
        for x in 0..t.alphabet_size() as Letter {
            let p = t.next(q, x);
            if !seen[p] {
                seen[p] = true;
                count += 1;
                queue.push_back(p);
            }
        }
    }
    count
}

/// `Σ(i, j)` as `u128`, when it fits.
pub fn sigma_u128(i: u32, j: i64) -> Option<u128> {
    sigma(i, j).to_u128()
}

/// Convenience for callers that only need to know `Σ(i, j)` is one.
pub fn sigma_is_one(i: u32, j: i64) -> bool {
    sigma(i, j).is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn record(m: usize, size: usize) -> GrowthRecord {
        GrowthRecord {
            m,
            core_size: None,
            min_core_size: size,
            sync_level: 1,
            core_dist: 0,
        }
    }

    #[test]
    fn sigma_values() {
        assert_eq!(sigma(1, 3), BigUint::from(6u32));
        assert_eq!(sigma(2, 2), BigUint::from(4u32));
        assert_eq!(sigma(5, 0), BigUint::zero());
        assert_eq!(sigma(3, -4), BigUint::zero());
        assert!(sigma_is_one(7, 1));
        assert_eq!(sigma_u128(0, 9), Some(9));
    }

    #[test]
    fn dummy_edges() {
        let d = dummy_transducer();
        let idx = |s: DummyState| d.state(s.label()).unwrap();
        let (s01, s11, root) = (
            idx(DummyState::sigma(0, 1)),
            idx(DummyState::sigma(1, 1)),
            idx(DummyState::Root),
        );
        assert_eq!((d.next(s01, 1), d.output(s01, 1)), (s11, 0));
        assert_eq!((d.next(s11, 0), d.output(s11, 0)), (s01, 1));
        assert_eq!((d.next(root, 0), d.output(root, 0)), (s11, 0));
        assert_eq!((d.next(root, 1), d.output(root, 1)), (s01, 1));
    }

    #[test]
    fn dummy_base_cases() {
        for x1 in 0..2u8 {
            let got = dummy_active_state(&[x1], 3);
            let want: Vec<_> = (1..=3).map(|j| DummyState::sigma(0, (x1 + j) % 2)).collect();
            assert_eq!(got, want);
        }
        // x2 + Σ(0,1) x1 + Σ(1,1) x0 = 0 + 0 + 1
        assert_eq!(dummy_active_state(&[0, 0], 2)[1], DummyState::sigma(1, 1));
        assert_eq!(dummy_active_state(&[], 4), vec![DummyState::sigma(1, 1); 4]);
        assert_eq!(dummy_active_state_closed_form(&[], 4), vec![DummyState::sigma(1, 1); 4]);
    }

    #[test]
    fn closed_form_first_term_is_last_bit() {
        for x in [[0u8, 1, 1, 0], [1, 1, 0, 1]] {
            assert_eq!(
                dummy_active_state_closed_form(&x, 1)[0],
                DummyState::sigma(1, x[3])
            );
        }
    }

    #[test]
    fn prefix_solutions() {
        assert_eq!(solve_exponent_prefix(&[0]).unwrap(), vec![1]);
        let x = solve_exponent_prefix(&[1, 0]).unwrap();
        assert_eq!(x.len(), 3);
        assert!(solve_exponent_prefix(&[]).is_err());
        assert!(solve_exponent_prefix(&[2]).is_err());
    }

    #[test]
    fn classification() {
        let shiftlike: Vec<_> = (1..=8).map(|m| record(m, 1 << m)).collect();
        let c = classify_growth(&shiftlike, ClassifyOptions::default()).unwrap();
        assert_eq!(c.class, GrowthClass::Exponential);
        assert!((c.log_slope - 2f64.ln()).abs() < 1e-9);
        let flat: Vec<_> = (1..=10).map(|m| record(m, 1)).collect();
        assert_eq!(
            classify_growth(&flat, ClassifyOptions::default()).unwrap().class,
            GrowthClass::Bounded
        );
        // ln(m+1) has slope ~1/m, below 0.05 only once m passes ~20.
        let linear: Vec<_> = (1..=40).map(|m| record(m, m + 1)).collect();
        assert_eq!(
            classify_growth(&linear, ClassifyOptions::default()).unwrap().class,
            GrowthClass::AtLeastPolynomial
        );
        let wobbly: Vec<_> = [3, 1, 4, 1, 5, 9, 2, 6].iter().enumerate().map(|(i, &s)| record(i + 1, s)).collect();
        assert_eq!(
            classify_growth(&wobbly, ClassifyOptions::default()).unwrap().class,
            GrowthClass::Inconclusive
        );
        assert!(matches!(
            classify_growth(&flat[..3], ClassifyOptions::default()),
            Err(Error::TooFewRecords { needed: 4, got: 3 })
        ));
    }

    #[test]
    fn identity_growth_is_bounded() {
        let s = growth_series(&Transducer::identity(2), 10).unwrap();
        assert!(s.records.iter().all(|r| r.min_core_size == 1));
        assert_eq!(s.classification.unwrap().class, GrowthClass::Bounded);
        assert!(!s.conjecture_ok);
    }

    #[test]
    fn shift_growth() {
        let s = growth_series(&catalog::builtin("shift2").unwrap().machine, 6).unwrap();
        for r in &s.records {
            assert_eq!(r.min_core_size, 1 << r.m);
            assert_eq!(r.core_size, Some(1 << r.m));
        }
        assert!(s.to_csv().starts_with("m,core_size,min_core_size,sync_level,core_dist,conjecture_ok\n1,2,2,1,0,true\n"));
        assert!(matches!(
            growth_series(&catalog::builtin("dummy").unwrap().machine, 3),
            Err(Error::NotSynchronizing)
        ));
    }

    #[test]
    fn lower_bound_small_powers() {
        let g = catalog::builtin("g_h3").unwrap().machine;
        let report = verify_lower_bound(&g, g.state("b").unwrap(), 4).unwrap();
        assert_eq!(report.loop_letter, 0);
        assert_eq!(report.rows.iter().map(|r| r.bound).collect::<Vec<_>>(), vec![1, 2, 2, 4]);
        assert!(report.all_hold());
        assert!(matches!(
            verify_lower_bound(&g, g.state("a").unwrap(), 2),
            Err(Error::NoFixedLoop(_))
        ));
    }
}
