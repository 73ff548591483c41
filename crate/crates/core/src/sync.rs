//! Strong synchronization: levels, the synchronizing map, cores and core
//! distance.
//!
//! The minimal level is found by collapsing the output-free automaton: at
//! each iterate, states whose transition rows agree (in terms of the current
//! classes) are merged. After `i` iterates two states share a class iff every
//! word of length `i` leads them to the same state, so the machine is
//! synchronizing exactly when the iteration reaches one class, and the number
//! of iterates is the minimal level. If an iterate merges nothing the
//! partition is stable and the machine is not synchronizing.

use std::collections::HashMap;

use serde_json::json;

use crate::error::{Error, Result};
use crate::transducer::Transducer;
use crate::word::{word_count, Letter, Word};

/// Upper bound on the number of words enumerated by level-`k` tables.
pub const MAX_WORD_TABLE: usize = 1 << 24;

/// Minimal synchronizing level, or `None` when the machine is not strongly
/// synchronizing. A one-state machine is synchronizing at level 0.
pub fn sync_level(t: &Transducer) -> Option<usize> {
    let n = t.alphabet_size();
    let mut class: Vec<u32> = (0..t.num_states() as u32).collect();
    let mut count = t.num_states();
    let mut level = 0;
    let mut ids: HashMap<Vec<u32>, u32> = HashMap::new();
    let mut row = Vec::with_capacity(n);
    while count > 1 {
        ids.clear();
        let mut refined = Vec::with_capacity(class.len());
        for q in 0..t.num_states() {
            row.clear();
            row.extend((0..n as Letter).map(|x| class[t.next(q, x)]));
            let fresh = ids.len() as u32;
            refined.push(*ids.entry(row.clone()).or_insert(fresh));
        }
        if ids.len() == count {
            return None;
        }
        count = ids.len();
        class = refined;
        level += 1;
    }
    Some(level)
}

/// `S(set) = { π(x, q) : q ∈ set, x ∈ X_n }` on membership vectors.
pub(crate) fn step_image(t: &Transducer, set: &[bool]) -> Vec<bool> {
    let mut image = vec![false; set.len()];
    for q in (0..set.len()).filter(|&q| set[q]) {
        for x in 0..t.alphabet_size() as Letter {
            image[t.next(q, x)] = true;
        }
    }
    image
}

fn members(set: &[bool]) -> Vec<usize> {
    (0..set.len()).filter(|&q| set[q]).collect()
}

/// The map `𝔰` from length-`k` words to the state they force, stored as a
/// table indexed by word code (first letter most significant).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyncMap {
    level: usize,
    alphabet: usize,
    table: Vec<u32>,
}

impl SyncMap {
    pub fn level(&self) -> usize {
        self.level
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet
    }

    /// State forced by `word`, which must have length `level()`.
    pub fn get(&self, word: &[Letter]) -> usize {
        assert_eq!(word.len(), self.level, "word length must equal the level");
        self.table[crate::word::word_code(word, self.alphabet)] as usize
    }

    pub fn get_code(&self, code: usize) -> usize {
        self.table[code] as usize
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    /// All `(word, state)` pairs in lexicographic word order.
    pub fn iter(&self) -> impl Iterator<Item = (Word, usize)> + '_ {
        self.table.iter().enumerate().map(move |(code, &q)| {
            (Word::from_code(code, self.alphabet, self.level), q as usize)
        })
    }

    /// Distinct states in the image, ascending.
    pub fn image(&self) -> Vec<usize> {
        let mut image: Vec<usize> = self.table.iter().map(|&q| q as usize).collect();
        image.sort_unstable();
        image.dedup();
        image
    }
}

fn table_size(n: usize, k: usize) -> Result<usize> {
    match word_count(n, k) {
        Some(c) if c <= MAX_WORD_TABLE => Ok(c),
        _ => Err(Error::CapExceeded {
            states: (n as u128).saturating_pow(k.min(u32::MAX as usize) as u32),
            cap: MAX_WORD_TABLE,
        }),
    }
}

/// The synchronizing map at level `k` (any `k` at or above the minimal level).
pub fn sync_map(t: &Transducer, k: usize) -> Result<SyncMap> {
    let minimal = sync_level(t);
    match minimal {
        Some(level) if level <= k => {}
        _ => {
            return Err(Error::NotSynchronizingAtLevel {
                requested: k,
                minimal,
            })
        }
    }
    let n = t.alphabet_size();
    table_size(n, k)?;
    // Reading from a fixed state; after k letters the start does not matter.
    let mut table = vec![0u32];
    for _ in 0..k {
        table = table
            .iter()
            .flat_map(|&q| (0..n as Letter).map(move |x| t.next(q as usize, x) as u32))
            .collect();
    }
    Ok(SyncMap {
        level: k,
        alphabet: n,
        table,
    })
}

/// States of the core (the states forced by some word of the minimal
/// level), ascending.
pub fn core_states(t: &Transducer) -> Result<Vec<usize>> {
    let level = sync_level(t).ok_or(Error::NotSynchronizing)?;
    Ok(core_states_at(t, level))
}

fn core_states_at(t: &Transducer, level: usize) -> Vec<usize> {
    let mut set = vec![true; t.num_states()];
    for _ in 0..level {
        set = step_image(t, &set);
    }
    members(&set)
}

/// The restriction of `t` to its core.
pub fn core(t: &Transducer) -> Result<Transducer> {
    Ok(t.restrict(&core_states(t)?))
}

pub fn is_core(t: &Transducer) -> Result<bool> {
    Ok(core_states(t)?.len() == t.num_states())
}

/// `max(level(t), level(t⁻¹))` when `t` is invertible and both directions
/// synchronize.
pub fn bisync_level(t: &Transducer) -> Option<usize> {
    let inverse = t.invert().ok()?;
    Some(sync_level(t)?.max(sync_level(&inverse)?))
}

/// Least `d` such that every length-`d` word leads every state into the core.
pub fn core_dist(t: &Transducer) -> Result<usize> {
    let level = sync_level(t).ok_or(Error::NotSynchronizing)?;
    let core = core_states_at(t, level);
    let mut in_core = vec![false; t.num_states()];
    core.iter().for_each(|&q| in_core[q] = true);
    let mut set = vec![true; t.num_states()];
    let mut dist = 0;
    while set.iter().zip(&in_core).any(|(&s, &c)| s && !c) {
        set = step_image(t, &set);
        dist += 1;
        assert!(dist <= t.num_states(), "image sets failed to reach the core");
    }
    Ok(dist)
}

/// For a core machine synchronizing at minimal level `k`: true iff for every
/// `Γ` of length `k` the map `p ↦ 𝔰(λ(Γ, p))` hits every state. Under this
/// condition every power of the machine is its own core.
pub fn check_core_power_condition(t: &Transducer) -> Result<bool> {
    let level = sync_level(t).ok_or(Error::NotSynchronizing)?;
    if core_states_at(t, level).len() != t.num_states() {
        return Err(Error::NotCore);
    }
    let n = t.alphabet_size();
    let words = table_size(n, level)?;
    let forced = sync_map(t, level)?;
    let mut hit = vec![false; t.num_states()];
    for code in 0..words {
        let gamma = Word::from_code(code, n, level);
        hit.iter_mut().for_each(|h| *h = false);
        for p in 0..t.num_states() {
            let (_, out) = t.read_word(p, gamma.letters())?;
            hit[forced.get(out.letters())] = true;
        }
        if hit.iter().any(|h| !h) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Everything the synchronization analysis knows about one machine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyncProfile {
    pub is_synchronizing: bool,
    pub level: Option<usize>,
    /// Present when synchronizing and the level-`k` table is small enough
    /// to tabulate.
    pub sync_map: Option<SyncMap>,
    pub core_states: Vec<usize>,
    pub core_dist: Option<usize>,
    pub bisync_level: Option<usize>,
    /// Synchronizing, but not bi-synchronizing.
    pub one_way: bool,
}

impl SyncProfile {
    pub fn of(t: &Transducer) -> SyncProfile {
        let level = sync_level(t);
        let bisync_level = bisync_level(t);
        match level {
            Some(k) => SyncProfile {
                is_synchronizing: true,
                level,
                sync_map: sync_map(t, k).ok(),
                core_states: core_states_at(t, k),
                core_dist: core_dist(t).ok(),
                bisync_level,
                one_way: bisync_level.is_none(),
            },
            None => SyncProfile {
                is_synchronizing: false,
                level: None,
                sync_map: None,
                core_states: Vec::new(),
                core_dist: None,
                bisync_level: None,
                one_way: false,
            },
        }
    }

    /// JSON object with keys `synchronizing`, `level`, `core_states`
    /// (labels), `core_dist`, `bisync_level`, `one_way`.
    pub fn to_json(&self, t: &Transducer) -> serde_json::Value {
        let labels: Vec<&str> = self.core_states.iter().map(|&q| t.label(q)).collect();
        json!({
            "synchronizing": self.is_synchronizing,
            "level": self.level,
            "core_states": labels,
            "core_dist": self.core_dist,
            "bisync_level": self.bisync_level,
            "one_way": self.one_way,
        })
    }
}
