//! Named example machines, the bi-synchronizing family, and seeded random
//! machines.
//!
//! Every entry carries the properties it is expected to have; they are
//! recomputed whenever an entry is built and a disagreement is an error.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::growth;
use crate::sync;
use crate::transducer::Transducer;
use crate::word::Letter;

/// Where a machine sits among the synchronizing core monoids.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Membership {
    /// Not synchronizing, or not core.
    None,
    /// Synchronizing and core.
    P,
    /// Also invertible.
    SH,
    /// Also the inverse is synchronizing and core.
    H,
}

impl fmt::Display for Membership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Membership::None => "none",
            Membership::P => "P",
            Membership::SH => "SH",
            Membership::H => "H",
        })
    }
}

/// Declared properties of a catalog machine.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExpectedFlags {
    pub invertible: bool,
    pub sync_level: Option<usize>,
    /// Only meaningful for synchronizing machines.
    pub core: Option<bool>,
    pub bisync_level: Option<usize>,
    /// Only meaningful for synchronizing core machines.
    pub core_power: Option<bool>,
    pub membership: Membership,
}

impl ExpectedFlags {
    /// Recomputes every flag from the machine itself.
    pub fn compute(t: &Transducer) -> Result<ExpectedFlags> {
        let invertible = t.is_invertible();
        let sync_level = sync::sync_level(t);
        let core = match sync_level {
            Some(_) => Some(sync::is_core(t)?),
            None => None,
        };
        let core_power = match core {
            Some(true) => Some(sync::check_core_power_condition(t)?),
            _ => None,
        };
        let membership = match (core, invertible) {
            (Some(true), false) => Membership::P,
            (Some(true), true) => {
                let inv = t.invert()?;
                if sync::sync_level(&inv).is_some() && sync::is_core(&inv)? {
                    Membership::H
                } else {
                    Membership::SH
                }
            }
            _ => Membership::None,
        };
        Ok(ExpectedFlags {
            invertible,
            sync_level,
            core,
            bisync_level: sync::bisync_level(t),
            core_power,
            membership,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub machine: Transducer,
    pub expected: ExpectedFlags,
}

impl CatalogEntry {
    fn checked(name: &str, machine: Transducer, expected: ExpectedFlags) -> Result<CatalogEntry> {
        let actual = ExpectedFlags::compute(&machine)?;
        if actual != expected {
            return Err(Error::CatalogMismatch {
                name: name.to_string(),
                detail: format!("declared {expected:?}, computed {actual:?}"),
            });
        }
        Ok(CatalogEntry {
            name: name.to_string(),
            machine,
            expected,
        })
    }
}

const SHIFT2: &str = "\
alphabet 2
states a1 a2
a1 0 0 a1
a1 1 0 a2
a2 0 1 a1
a2 1 1 a2
";

const ONEWAY2: &str = "\
alphabet 2
states a1 a2
a1 0 1 a1
a1 1 0 a2
a2 0 0 a1
a2 1 1 a2
";

/// `a` prints `0|1` and `2|0`. With `a` printing `0|0` and `2|1` instead
/// (`G_H3_DRAWN`) both states have the same output row and the machine is
/// ω-equivalent to a single state, so its powers do not grow at all.
const G_H3: &str = "\
alphabet 3
states b a
b 0 0 b
b 1 2 a
b 2 1 b
a 0 1 b
a 1 2 a
a 2 0 b
";

const G_H3_DRAWN: &str = "\
alphabet 3
states b a
b 0 0 b
b 1 2 a
b 2 1 b
a 0 0 b
a 1 2 a
a 2 1 b
";

const NAMES: [&str; 6] = ["shift2", "oneway2", "h4exp", "g_h3", "g_h3_drawn", "dummy"];

pub fn names() -> &'static [&'static str] {
    &NAMES
}

/// Builds a named machine: `shift2`, `oneway2`, `h4exp`, `g_h3`,
/// `g_h3_drawn`, `dummy`.
pub fn builtin(name: &str) -> Result<CatalogEntry> {
    let parse = |text: &str| Transducer::parse(text).expect("builtin text is valid");
    let core_sync = |invertible, core_power, membership, bisync| ExpectedFlags {
        invertible,
        sync_level: Some(1),
        core: Some(true),
        bisync_level: bisync,
        core_power: Some(core_power),
        membership,
    };
    match name {
        "shift2" => CatalogEntry::checked(name, parse(SHIFT2), core_sync(false, true, Membership::P, None)),
        "oneway2" => CatalogEntry::checked(name, parse(ONEWAY2), core_sync(true, true, Membership::SH, None)),
        "h4exp" => h4exp_n(4).map(|e| CatalogEntry { name: name.into(), ..e }),
        "g_h3" => CatalogEntry::checked(name, parse(G_H3), core_sync(true, false, Membership::H, Some(1))),
        "g_h3_drawn" => CatalogEntry::checked(
            name,
            parse(G_H3_DRAWN),
            core_sync(true, false, Membership::H, Some(1)),
        ),
        "dummy" => CatalogEntry::checked(
            name,
            growth::dummy_transducer(),
            ExpectedFlags {
                invertible: true,
                sync_level: None,
                core: None,
                bisync_level: None,
                core_power: None,
                membership: Membership::None,
            },
        ),
        _ => Err(Error::UnknownName(name.to_string())),
    }
}

/// All builtin entries, in [`names`] order.
pub fn all() -> Vec<CatalogEntry> {
    NAMES
        .iter()
        .map(|n| builtin(n).expect("builtin entries verify"))
        .collect()
}

/// Two states over `n ≥ 4` letters. On `0..4`, `a1` has `0|1, 1|2` loops and
/// `2|0, 3|3` edges to `a2`; `a2` has `2|3, 3|0` loops and `0|2, 1|1` edges
/// to `a1`. Every further letter `x` is `x|x` into `a1` from both states.
pub fn h4exp_n(n: usize) -> Result<CatalogEntry> {
    if n < 4 {
        return Err(Error::Invalid(format!("h4exp needs at least 4 letters, got {n}")));
    }
    let labels = vec!["a1".to_string(), "a2".to_string()];
    let machine = Transducer::from_fn(n, labels, |q, x| match (q, x) {
        (0, 0) => (0, 1),
        (0, 1) => (0, 2),
        (0, 2) => (1, 0),
        (0, 3) => (1, 3),
        (1, 0) => (0, 2),
        (1, 1) => (0, 1),
        (1, 2) => (1, 3),
        (1, 3) => (1, 0),
        (_, x) => (0, x),
    })?;
    let expected = ExpectedFlags {
        invertible: true,
        sync_level: Some(1),
        core: Some(true),
        bisync_level: Some(1),
        // Extra letters x give λ(x, p) = x for both p, which only ever forces a1.
        core_power: Some(n == 4),
        membership: Membership::H,
    };
    CatalogEntry::checked(&format!("h4exp_{n}"), machine, expected)
}

/// States `a0 … ai` over three letters: `a0` loops on `0|0, 1|1`; each
/// `aj` with `j < i` goes to `a0` on `0|0, 1|1`; `2|2` climbs to `a(j+1)`;
/// `ai` goes to `a0` on `0|1, 1|0` and loops on `2|2`. Bi-synchronizing at
/// level exactly `i`.
pub fn bisync_family(i: usize) -> Result<CatalogEntry> {
    if i == 0 {
        return Err(Error::Invalid("family parameter must be at least 1".into()));
    }
    let labels = (0..=i).map(|j| format!("a{j}")).collect();
    let machine = Transducer::from_fn(3, labels, |j, x| match x {
        2 => ((j + 1).min(i), 2),
        _ if j == i => (0, 1 - x),
        _ => (0, x),
    })?;
    let expected = ExpectedFlags {
        invertible: true,
        sync_level: Some(i),
        core: Some(true),
        bisync_level: Some(i),
        // Reading 2^i prints 2^i from every state, so only ai is ever forced.
        core_power: Some(false),
        membership: Membership::H,
    };
    CatalogEntry::checked(&format!("family_{i}"), machine, expected)
}

/// Properties a random machine must have.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Requirements {
    pub invertible: bool,
    pub synchronizing: bool,
    /// Implies synchronizing.
    pub core: bool,
}

pub const RANDOM_RETRIES: usize = 10_000;

/// Uniformly random tables from a ChaCha8 stream seeded with `seed`,
/// redrawn until `require` holds. Invertible machines are drawn directly as
/// per-state permutations.
pub fn random_transducer(
    n: usize,
    states: usize,
    seed: u64,
    require: Requirements,
) -> Result<Transducer> {
    if n < 2 || states == 0 {
        return Err(Error::Invalid(format!(
            "random machines need n >= 2 and at least one state (got n={n}, states={states})"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let labels: Vec<String> = (0..states).map(|q| format!("q{q}")).collect();
    for _ in 0..RANDOM_RETRIES {
        let next: Vec<u32> = (0..states * n).map(|_| rng.gen_range(0..states as u32)).collect();
        let out: Vec<Letter> = if require.invertible {
            let mut out = Vec::with_capacity(states * n);
            for _ in 0..states {
                let mut row: Vec<Letter> = (0..n as Letter).collect();
                row.shuffle(&mut rng);
                out.extend(row);
            }
            out
        } else {
            (0..states * n).map(|_| rng.gen_range(0..n as Letter)).collect()
        };
        let t = Transducer::from_tables(n, labels.clone(), next, out)?;
        if (require.synchronizing || require.core) && sync::sync_level(&t).is_none() {
            continue;
        }
        if require.core && !sync::is_core(&t)? {
            continue;
        }
        return Ok(t);
    }
    Err(Error::RequirementUnsatisfiable(format!(
        "no machine with {require:?} among {RANDOM_RETRIES} draws (n={n}, states={states}, seed={seed})"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_builtin_verifies() {
        for name in names() {
            let e = builtin(name).unwrap();
            assert_eq!(e.name, *name);
        }
        assert!(matches!(builtin("nope"), Err(Error::UnknownName(_))));
    }

    #[test]
    fn declared_examples() {
        assert_eq!(builtin("g_h3").unwrap().expected.bisync_level, Some(1));
        assert!(!builtin("shift2").unwrap().expected.invertible);
        assert_eq!(builtin("h4exp").unwrap().expected.core_power, Some(true));
        assert_eq!(builtin("oneway2").unwrap().expected.membership, Membership::SH);
    }

    #[test]
    fn wider_h4() {
        let e = h4exp_n(6).unwrap();
        assert_eq!(e.machine.alphabet_size(), 6);
        assert!(h4exp_n(3).is_err());
    }

    #[test]
    fn family_shapes() {
        for i in 1..=6 {
            let e = bisync_family(i).unwrap();
            assert_eq!(e.machine.num_states(), i + 1);
            assert_eq!(e.expected.bisync_level, Some(i));
        }
        assert!(bisync_family(0).is_err());
    }

    #[test]
    fn random_requirements() {
        let t = random_transducer(2, 1, 7, Requirements::default()).unwrap();
        assert_eq!(t.num_states(), 1);
        let t = random_transducer(2, 3, 7, Requirements { invertible: true, ..Default::default() }).unwrap();
        assert!(t.is_invertible());
        let t = random_transducer(2, 2, 7, Requirements { synchronizing: true, ..Default::default() }).unwrap();
        assert!(sync::sync_level(&t).is_some());
        assert_eq!(
            random_transducer(3, 4, 99, Requirements::default()).unwrap(),
            random_transducer(3, 4, 99, Requirements::default()).unwrap()
        );
        assert!(random_transducer(1, 2, 0, Requirements::default()).is_err());
    }
}
