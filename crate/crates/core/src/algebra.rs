//! Products, powers, ω-minimization and the `min ∘ Core` normal form.
//!
//! `product(a, b)` runs `a` first and feeds its output into `b`:
//! `λ(x, (p, q)) = λ_b(λ_a(x, p), q)`. Every composition law in this module
//! and its tests uses that order.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::sync::{self, sync_level};
use crate::transducer::Transducer;
use crate::word::{word_count, Letter, PeriodicWord, Word};

/// Largest raw power `power` will build unless told otherwise.
pub const DEFAULT_MAX_STATES: usize = 1 << 22;

fn pair_labels(a: &Transducer, b: &Transducer) -> Vec<String> {
    let mut labels = Vec::with_capacity(a.num_states() * b.num_states());
    for p in a.labels() {
        for q in b.labels() {
            labels.push(format!("{p}.{q}"));
        }
    }
    let distinct: HashSet<&String> = labels.iter().collect();
    if distinct.len() == labels.len() {
        labels
    } else {
        // Dotted labels on both sides can collide ("a.b"+"c" vs "a"+"b.c").
        (0..a.num_states())
            .flat_map(|p| (0..b.num_states()).map(move |q| format!("({p},{q})")))
            .collect()
    }
}

/// The product `a ∗ b` on `Q_a × Q_b`. State `(p, q)` has index
/// `p * |Q_b| + q` and label `"p.q"`.
pub fn product(a: &Transducer, b: &Transducer) -> Result<Transducer> {
    if a.alphabet_size() != b.alphabet_size() {
        return Err(Error::AlphabetMismatch {
            left: a.alphabet_size(),
            right: b.alphabet_size(),
        });
    }
    let nb = b.num_states();
    Transducer::from_fn(a.alphabet_size(), pair_labels(a, b), |s, x| {
        let (p, q) = (s / nb, s % nb);
        let y = a.output(p, x);
        (a.next(p, x) * nb + b.next(q, y), b.output(q, y))
    })
}

/// `a^m = a ∗ a ∗ … ∗ a` (left-associated), refusing results above
/// [`DEFAULT_MAX_STATES`] states.
pub fn power(a: &Transducer, m: usize) -> Result<Transducer> {
    power_capped(a, m, DEFAULT_MAX_STATES)
}

pub fn power_capped(a: &Transducer, m: usize, cap: usize) -> Result<Transducer> {
    if m == 0 {
        return Err(Error::Invalid("powers start at 1".into()));
    }
    let states = (a.num_states() as u128).saturating_pow(m.min(u32::MAX as usize) as u32);
    if states > cap as u128 {
        return Err(Error::CapExceeded { states, cap });
    }
    let mut result = a.clone();
    for _ in 1..m {
        result = product(&result, a)?;
    }
    Ok(result)
}

/// ω-equivalence classes: `class[p] == class[q]` iff `p` and `q` produce the
/// same output on every input word. Moore refinement starting from the
/// single-letter output rows. Class ids are numbered by first appearance.
pub fn omega_classes(t: &Transducer) -> Vec<u32> {
    let n = t.alphabet_size();
    let number = |sigs: &mut dyn Iterator<Item = Vec<u32>>| -> (Vec<u32>, usize) {
        let mut ids: HashMap<Vec<u32>, u32> = HashMap::new();
        let class: Vec<u32> = sigs
            .map(|sig| {
                let fresh = ids.len() as u32;
                *ids.entry(sig).or_insert(fresh)
            })
            .collect();
        (class, ids.len())
    };
    let (mut class, mut count) = number(
        &mut (0..t.num_states()).map(|q| (0..n as Letter).map(|x| t.output(q, x)).collect()),
    );
    loop {
        let (refined, refined_count) = number(&mut (0..t.num_states()).map(|q| {
            std::iter::once(class[q])
                .chain((0..n as Letter).map(|x| class[t.next(q, x)]))
                .collect()
        }));
        if refined_count == count {
            return refined;
        }
        class = refined;
        count = refined_count;
    }
}

/// Quotient by ω-equivalence. Each class is represented by (and labelled
/// after) its first state.
pub fn minimize(t: &Transducer) -> Transducer {
    let class = omega_classes(t);
    let mut reps: Vec<usize> = Vec::new();
    for (q, &c) in class.iter().enumerate() {
        if c as usize == reps.len() {
            reps.push(q);
        }
    }
    let labels = reps.iter().map(|&q| t.label(q).to_string()).collect();
    Transducer::from_fn(t.alphabet_size(), labels, |c, x| {
        let q = reps[c];
        (class[t.next(q, x)] as usize, t.output(q, x))
    })
    .expect("quotient of a valid transducer is valid")
}

fn disjoint_union(a: &Transducer, b: &Transducer) -> Result<Transducer> {
    if a.alphabet_size() != b.alphabet_size() {
        return Err(Error::AlphabetMismatch {
            left: a.alphabet_size(),
            right: b.alphabet_size(),
        });
    }
    let na = a.num_states();
    let labels = (0..na + b.num_states()).map(|i| format!("u{i}")).collect();
    Transducer::from_fn(a.alphabet_size(), labels, |s, x| {
        if s < na {
            (a.next(s, x), a.output(s, x))
        } else {
            (b.next(s - na, x) + na, b.output(s - na, x))
        }
    })
}

/// Whether `q1` of `t1` and `q2` of `t2` induce the same map on sequences.
pub fn omega_equivalent(t1: &Transducer, q1: usize, t2: &Transducer, q2: usize) -> Result<bool> {
    if q1 >= t1.num_states() {
        return Err(Error::UnknownState(q1.to_string()));
    }
    if q2 >= t2.num_states() {
        return Err(Error::UnknownState(q2.to_string()));
    }
    let union = disjoint_union(t1, t2)?;
    let class = omega_classes(&union);
    Ok(class[q1] == class[t1.num_states() + q2])
}

/// A minimal core machine with canonical labels, so that two elements of the
/// monoid are equal exactly when the values are `==` (and serialize
/// identically).
///
/// Each state is labelled by the lexicographically least word of the
/// machine's minimal synchronizing level that forces it (`ε` for the
/// one-state machine), and states are sorted by that word.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NormalForm {
    machine: Transducer,
    level: usize,
    words: Vec<Word>,
}

const EMPTY_LABEL: &str = "ε";

impl NormalForm {
    /// `min Core(t)`.
    pub fn of(t: &Transducer) -> Result<NormalForm> {
        let reduced = minimize(&sync::core(t)?);
        Ok(canonicalize(&reduced))
    }

    pub fn identity(alphabet: usize) -> NormalForm {
        NormalForm::of(&Transducer::identity(alphabet)).expect("identity is core")
    }

    pub fn machine(&self) -> &Transducer {
        &self.machine
    }

    pub fn into_machine(self) -> Transducer {
        self.machine
    }

    pub fn size(&self) -> usize {
        self.machine.num_states()
    }

    /// Minimal synchronizing level of the normal form.
    pub fn level(&self) -> usize {
        self.level
    }

    /// The least forcing word of each state, in state order.
    pub fn forcing_words(&self) -> &[Word] {
        &self.words
    }

    /// The monoid product `min Core(self ∗ other)`.
    pub fn mul(&self, other: &NormalForm) -> Result<NormalForm> {
        monoid_product(self, other)
    }

    /// `min Core(A^m)` by repeated monoid products, so intermediate products
    /// have `|min Core(A^(m-1))| · |min Core(A)|` states.
    pub fn power(&self, m: usize) -> Result<NormalForm> {
        self.powers(m).last().unwrap_or(Err(Error::Invalid("powers start at 1".into())))
    }

    /// `min Core(A^1), …, min Core(A^m)`, each built from the previous one.
    pub fn powers(&self, m: usize) -> impl Iterator<Item = Result<NormalForm>> + '_ {
        let mut current: Option<NormalForm> = None;
        (0..m).map(move |_| {
            let next = match &current {
                None => self.clone(),
                Some(prev) => monoid_product(prev, self)?,
            };
            current = Some(next.clone());
            Ok(next)
        })
    }
}

fn canonicalize(t: &Transducer) -> NormalForm {
    let level = sync_level(t).expect("minimized core is synchronizing");
    let words = least_forcing_words(t, level);
    let mut order: Vec<usize> = (0..t.num_states()).collect();
    order.sort_by(|&p, &q| words[p].cmp(&words[q]));
    let mut position = vec![0usize; t.num_states()];
    for (i, &q) in order.iter().enumerate() {
        position[q] = i;
    }
    let sorted_words: Vec<Word> = order.iter().map(|&q| words[q].clone()).collect();
    let labels = sorted_words
        .iter()
        .map(|w| {
            if w.is_empty() {
                EMPTY_LABEL.to_string()
            } else {
                w.to_string()
            }
        })
        .collect();
    let machine = Transducer::from_fn(t.alphabet_size(), labels, |i, x| {
        let q = order[i];
        (position[t.next(q, x)], t.output(q, x))
    })
    .expect("permuted machine is valid");
    NormalForm {
        machine,
        level,
        words: sorted_words,
    }
}

/// For a core machine synchronizing at `level`: the least word of that
/// length forcing each state. Depth-first search in lexicographic order from
/// an arbitrary start; a `(depth, state)` pair already visited cannot lead to
/// an unseen target through a smaller word, so it is pruned.
fn least_forcing_words(t: &Transducer, level: usize) -> Vec<Word> {
    let states = t.num_states();
    let mut found: Vec<Option<Word>> = vec![None; states];
    let mut visited = vec![false; (level + 1) * states];
    let mut path: Vec<Letter> = Vec::with_capacity(level);
    // Explicit stack of (state, next letter to try).
    let mut stack: Vec<(usize, Letter)> = vec![(0, 0)];
    visited[0] = true;
    while let Some(&mut (q, ref mut x)) = stack.last_mut() {
        let depth = path.len();
        if depth == level {
            if found[q].is_none() {
                found[q] = Some(Word(path.clone()));
            }
            stack.pop();
            path.pop();
            continue;
        }
        if *x as usize == t.alphabet_size() {
            stack.pop();
            path.pop();
            continue;
        }
        let letter = *x;
        *x += 1;
        let p = t.next(q, letter);
        let slot = (depth + 1) * states + p;
        if !visited[slot] {
            visited[slot] = true;
            path.push(letter);
            stack.push((p, 0));
        }
    }
    found
        .into_iter()
        .map(|w| w.expect("every core state is forced by some word"))
        .collect()
}

/// `min Core(t)` as a [`NormalForm`].
pub fn min_core(t: &Transducer) -> Result<NormalForm> {
    NormalForm::of(t)
}

/// `(A, B) ↦ min Core(A ∗ B)`.
pub fn monoid_product(a: &NormalForm, b: &NormalForm) -> Result<NormalForm> {
    NormalForm::of(&product(&a.machine, &b.machine)?)
}

/// The induced self-map `x ↦ λ(x, 𝔰(x))` of the words of length `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelTransformation {
    k: usize,
    alphabet: usize,
    mapping: Vec<u32>,
}

impl LevelTransformation {
    pub fn level(&self) -> usize {
        self.k
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet
    }

    /// Image codes indexed by word code.
    pub fn codes(&self) -> &[u32] {
        &self.mapping
    }

    pub fn apply(&self, word: &Word) -> Word {
        assert_eq!(word.len(), self.k);
        Word::from_code(self.mapping[word.code(self.alphabet)] as usize, self.alphabet, self.k)
    }

    /// `self` first, then `then`.
    pub fn then(&self, then: &LevelTransformation) -> LevelTransformation {
        assert_eq!((self.k, self.alphabet), (then.k, then.alphabet));
        LevelTransformation {
            k: self.k,
            alphabet: self.alphabet,
            mapping: self.mapping.iter().map(|&y| then.mapping[y as usize]).collect(),
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (Word, Word)> + '_ {
        self.mapping.iter().enumerate().map(move |(c, &y)| {
            (
                Word::from_code(c, self.alphabet, self.k),
                Word::from_code(y as usize, self.alphabet, self.k),
            )
        })
    }

    /// Codes `w` with `self(w) == w`.
    pub fn fixed_points(&self) -> impl Iterator<Item = usize> + '_ {
        self.mapping
            .iter()
            .enumerate()
            .filter(|&(c, &y)| c == y as usize)
            .map(|(c, _)| c)
    }
}

/// `Ā_k` for a machine synchronizing at a level at most `k`.
pub fn level_transformation(t: &Transducer, k: usize) -> Result<LevelTransformation> {
    let forced = sync::sync_map(t, k)?;
    let n = t.alphabet_size();
    let mapping = (0..forced.len())
        .map(|code| {
            let word = Word::from_code(code, n, k);
            let (_, out) = t
                .read_word(forced.get_code(code), word.letters())
                .expect("letters in range");
            out.code(n) as u32
        })
        .collect();
    Ok(LevelTransformation {
        k,
        alphabet: n,
        mapping,
    })
}

/// A state of `min Core(A^i)` carrying a loop `w|w`.
#[derive(Clone, Debug)]
pub struct FixedLoop {
    /// The exponent `i`.
    pub power: usize,
    /// The loop label: a single letter for machines synchronizing at level
    /// at most 1, otherwise a word of the minimal level.
    pub word: Word,
    /// `min Core(A^i)`.
    pub normal_form: NormalForm,
    /// Index of the looping state in `normal_form`.
    pub state: usize,
}

impl FixedLoop {
    pub fn letter(&self) -> Option<Letter> {
        match self.word.letters() {
            [x] => Some(*x),
            _ => None,
        }
    }

    pub fn state_label(&self) -> &str {
        self.normal_form.machine().label(self.state)
    }

    /// Whether `(q₀, …, q₀)` (`k` copies) lies in the core of the raw `k`-th
    /// power of `min Core(A^i)`, and is there the only state with loop `w|w`.
    pub fn power_state_in_core(&self, k: usize) -> Result<bool> {
        let base = self.normal_form.machine();
        let raw = power(base, k)?;
        let s = base.num_states();
        let tuple = (0..k).fold(0usize, |acc, _| acc * s + self.state);
        let core = sync::core_states(&raw)?;
        let loops: Vec<usize> = (0..raw.num_states())
            .filter(|&q| {
                let (end, out) = raw.read_word(q, self.word.letters()).expect("in range");
                end == q && out == self.word
            })
            .collect();
        Ok(core.binary_search(&tuple).is_ok() && loops == [tuple])
    }
}

/// Smallest `i ≥ 1` and least word `w` fixed by the `i`-th iterate of the
/// level transformation, with the unique state `q₀` of `min Core(t^i)`
/// carrying the loop `w|w`.
///
/// The transformation is taken at level `max(1, level(t))`, so for
/// machines synchronizing at level 1 `w` is a single letter.
pub fn fixed_letter_state(t: &Transducer) -> Result<FixedLoop> {
    let level = sync_level(t).ok_or(Error::NotSynchronizing)?;
    if !sync::is_core(t)? {
        return Err(Error::NotCore);
    }
    let k = level.max(1);
    let base = level_transformation(t, k)?;
    let words = base.codes().len();
    let mut iterate = base.clone();
    let mut i = 1;
    let code = loop {
        if let Some(c) = iterate.fixed_points().next() {
            break c;
        }
        assert!(i <= words, "a self-map of a finite set has a periodic point");
        iterate = iterate.then(&base);
        i += 1;
    };
    let word = Word::from_code(code, t.alphabet_size(), k);
    let normal_form = NormalForm::of(t)?.power(i)?;
    let m = normal_form.machine();
    let reps = normal_form.level() / k + 1;
    let state = (0..reps).fold(0, |q, _| m.run(q, word.letters()));
    let (end, out) = m.read_word(state, word.letters())?;
    assert!(
        end == state && out == word,
        "forced state of w^r must carry the loop w|w"
    );
    Ok(FixedLoop {
        power: i,
        word,
        normal_form,
        state,
    })
}

/// `min Core(C⁻¹ ∗ A ∗ C)`.
pub fn conjugate(a: &NormalForm, c: &Transducer) -> Result<NormalForm> {
    let inverse = c.invert()?;
    if sync_level(c).is_none() || sync_level(&inverse).is_none() {
        return Err(Error::NotSynchronizing);
    }
    NormalForm::of(&product(&product(&inverse, a.machine())?, c)?)
}

/// The induced shift-commuting map on a periodic point: position `i` of the
/// result is `λ(x_i, 𝔰(x_{i-k} … x_{i-1}))`, indices taken cyclically.
///
/// The result has the same period as the input, aligned position by
/// position, which makes rotation-commutation a literal identity.
pub fn act_periodic(t: &Transducer, w: &PeriodicWord) -> Result<PeriodicWord> {
    let k = sync_level(t).ok_or(Error::NotSynchronizing)?;
    w.check_alphabet(t.alphabet_size())?;
    let p = w.period() as isize;
    let mut window: Vec<Letter> = Vec::with_capacity(k);
    let out = (0..p)
        .map(|i| {
            window.clear();
            window.extend((i - k as isize..i).map(|j| w.at(j)));
            let state = t.run(0, &window);
            t.output(state, w.at(i))
        })
        .collect();
    PeriodicWord::new(out)
}

/// Number of words of length `k`, or an error if that table would be too big.
pub fn words_at_level(n: usize, k: usize) -> Result<usize> {
    word_count(n, k)
        .filter(|&c| c <= sync::MAX_WORD_TABLE)
        .ok_or(Error::CapExceeded {
            states: (n as u128).saturating_pow(k as u32),
            cap: sync::MAX_WORD_TABLE,
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn shift() -> Transducer {
        catalog::builtin("shift2").unwrap().machine
    }

    fn g() -> Transducer {
        catalog::builtin("g_h3").unwrap().machine
    }

    #[test]
    fn shift_squared_by_hand() {
        let p = product(&shift(), &shift()).unwrap();
        assert_eq!(p.num_states(), 4);
        // state (a_i, a_j) = index (i-1)*2 + (j-1); on x it outputs j-1 and
        // moves to (a_{x+1}, a_i)
        for i in 0..2 {
            for j in 0..2 {
                for x in 0..2u32 {
                    let s = i * 2 + j;
                    assert_eq!(p.output(s, x), j as u32);
                    assert_eq!(p.next(s, x), x as usize * 2 + i);
                }
            }
        }
        assert_eq!(p.label(1), "a1.a2");
        assert_eq!(sync_level(&p), Some(2));
    }

    #[test]
    fn identity_is_a_unit() {
        let id = Transducer::identity(3);
        assert!(product(&id, &g()).unwrap().same_tables(&g()));
        assert!(product(&g(), &id).unwrap().same_tables(&g()));
        assert!(matches!(
            product(&shift(), &g()),
            Err(Error::AlphabetMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn powers() {
        assert_eq!(power(&shift(), 3).unwrap().num_states(), 8);
        let g2 = power(&g(), 2).unwrap();
        let bb = g2.state("b.b").unwrap();
        assert_eq!(g2.read_word(bb, &[0]).unwrap(), (bb, Word(vec![0])));
        let s2 = power(&shift(), 2).unwrap();
        let word = [1, 0, 1];
        let (_, once) = shift().read_word(0, &word).unwrap();
        let (_, twice) = shift().read_word(0, once.letters()).unwrap();
        assert_eq!(s2.read_word(0, &word).unwrap().1, twice);
        assert!(matches!(
            power_capped(&shift(), 5, 16),
            Err(Error::CapExceeded { states: 32, cap: 16 })
        ));
        assert!(power(&shift(), 0).is_err());
    }

    #[test]
    fn minimization() {
        assert_eq!(minimize(&shift()), shift());
        let cloned = Transducer::parse(
            "alphabet 2\nstates a1 a2 c1\n\
             a1 0 0 a1\na1 1 0 a2\na2 0 1 c1\na2 1 1 a2\nc1 0 0 c1\nc1 1 0 a2\n",
        )
        .unwrap();
        let m = minimize(&cloned);
        assert_eq!(m.num_states(), 2);
        assert!(m.same_tables(&shift()));
        assert!(omega_equivalent(&cloned, 0, &cloned, 2).unwrap());
        assert!(omega_equivalent(&shift(), 0, &shift(), 0).unwrap());
        assert!(!omega_equivalent(&shift(), 0, &shift(), 1).unwrap());
        assert!(omega_equivalent(&shift(), 0, &cloned, 2).unwrap());
        assert!(omega_equivalent(&shift(), 0, &g(), 0).is_err());
    }

    #[test]
    fn normal_forms() {
        let dangling = Transducer::parse(
            "alphabet 2\nstates a1 a2 d\n\
             a1 0 0 a1\na1 1 0 a2\na2 0 1 a1\na2 1 1 a2\nd 0 1 a1\nd 1 1 a2\n",
        )
        .unwrap();
        let nf = min_core(&dangling).unwrap();
        assert_eq!(nf, min_core(&shift()).unwrap());
        assert_eq!(nf.machine().labels(), &["0", "1"]);
        assert_eq!(nf.level(), 1);
        let g2 = min_core(&power(&g(), 2).unwrap()).unwrap();
        let g_nf = min_core(&g()).unwrap();
        // b = class forced by 0
        let bb = g2.machine().run(0, &[0, 0]);
        assert_eq!(g2.machine().read_word(bb, &[0]).unwrap(), (bb, Word(vec![0])));
        let incremental = monoid_product(&g_nf, &g_nf).unwrap();
        assert_eq!(incremental, g2);
        assert_eq!(
            min_core(&product(g_nf.machine(), &g()).unwrap()).unwrap(),
            g2
        );
        let id = NormalForm::identity(2);
        assert_eq!(id.size(), 1);
        assert_eq!(id.machine().labels(), &[EMPTY_LABEL]);
        assert_eq!(monoid_product(&id, &nf).unwrap(), nf);
        assert!(min_core(&catalog::builtin("dummy").unwrap().machine).is_err());
    }

    #[test]
    fn level_transformations() {
        let a = level_transformation(&shift(), 1).unwrap();
        assert_eq!(a.codes(), &[0, 1]);
        let a = level_transformation(&g(), 1).unwrap();
        assert_eq!(a.codes(), &[0, 2, 1]);
        let lt = level_transformation(&g(), 2).unwrap();
        assert_eq!(lt.apply(&Word(vec![1, 2])).len(), 2);
        assert!(matches!(
            level_transformation(&catalog::bisync_family(2).unwrap().machine, 1),
            Err(Error::NotSynchronizingAtLevel { .. })
        ));
    }

    #[test]
    fn fixed_loops() {
        let f = fixed_letter_state(&shift()).unwrap();
        assert_eq!((f.power, f.letter()), (1, Some(0)));
        assert_eq!(f.normal_form.machine().read_word(f.state, &[0]).unwrap().1, Word(vec![0]));
        let f = fixed_letter_state(&g()).unwrap();
        assert_eq!((f.power, f.letter()), (1, Some(0)));
        assert!(f.power_state_in_core(3).unwrap());
        let dangling = Transducer::parse(
            "alphabet 2\nstates a1 a2 d\n\
             a1 0 0 a1\na1 1 0 a2\na2 0 1 a1\na2 1 1 a2\nd 0 1 a1\nd 1 1 a2\n",
        )
        .unwrap();
        assert!(matches!(fixed_letter_state(&dangling), Err(Error::NotCore)));
    }

    #[test]
    fn periodic_action() {
        let out = act_periodic(&shift(), &"01".parse().unwrap()).unwrap();
        assert_eq!(out.letters(), &[1, 0]);
        let id = Transducer::identity(3);
        let w: PeriodicWord = "0212".parse().unwrap();
        assert_eq!(act_periodic(&id, &w).unwrap().letters(), w.letters());
        assert!(act_periodic(&shift(), &"02".parse().unwrap()).is_err());
        // period shorter than the level
        let fam = catalog::bisync_family(3).unwrap().machine;
        let w: PeriodicWord = "2".parse().unwrap();
        assert_eq!(act_periodic(&fam, &w).unwrap().letters(), &[2]);
    }

    #[test]
    fn conjugation() {
        let g_nf = min_core(&g()).unwrap();
        assert_eq!(conjugate(&g_nf, &Transducer::identity(3)).unwrap(), g_nf);
        let c = catalog::bisync_family(1).unwrap().machine;
        let b = conjugate(&g_nf, &c).unwrap();
        assert!(b.size() <= c.num_states() * g_nf.size() * c.num_states());
        let back = conjugate(&b, &c.invert().unwrap()).unwrap();
        assert_eq!(back, g_nf);
        assert!(matches!(
            conjugate(&g_nf, &catalog::builtin("oneway2").unwrap().machine),
            Err(Error::AlphabetMismatch { .. }) | Err(Error::NotSynchronizing)
        ));
        assert!(matches!(
            conjugate(&min_core(&shift()).unwrap(), &catalog::builtin("oneway2").unwrap().machine),
            Err(Error::NotSynchronizing)
        ));
    }
}
