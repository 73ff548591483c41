//! Slow reference implementations, straight from the definitions, used to
//! cross-check the real algorithms.

use std::collections::{HashSet, VecDeque};

use num_bigint::BigUint;

use crate::transducer::Transducer;
use crate::word::{Letter, Word};

/// Every word of length `k` over `n` letters, in lexicographic order.
pub fn all_words(n: usize, k: usize) -> impl Iterator<Item = Word> {
    let count = n.pow(k as u32);
    (0..count).map(move |c| Word::from_code(c, n, k))
}

/// The state every start state reaches on `word`, if they agree.
pub fn forced_state(t: &Transducer, word: &[Letter]) -> Option<usize> {
    let first = t.run(0, word);
    (1..t.num_states())
        .all(|q| t.run(q, word) == first)
        .then_some(first)
}

/// Least `k ≤ max_depth` such that every length-`k` word forces a state.
pub fn sync_level(t: &Transducer, max_depth: usize) -> Option<usize> {
    (0..=max_depth).find(|&k| {
        all_words(t.alphabet_size(), k).all(|w| forced_state(t, w.letters()).is_some())
    })
}

/// States forced by some word of length `k` (which must synchronize).
pub fn core_states(t: &Transducer, k: usize) -> Vec<usize> {
    let mut states: Vec<usize> = all_words(t.alphabet_size(), k)
        .map(|w| forced_state(t, w.letters()).expect("level synchronizes"))
        .collect();
    states.sort_unstable();
    states.dedup();
    states
}

/// Least `t` such that every state, after every word of length `t`, is in
/// `core`. Gives up past `max_depth`.
pub fn core_dist(t: &Transducer, core: &[usize], max_depth: usize) -> Option<usize> {
    (0..=max_depth).find(|&d| {
        all_words(t.alphabet_size(), d)
            .all(|w| (0..t.num_states()).all(|q| core.contains(&t.run(q, w.letters()))))
    })
}

/// Whether `q1` and `q2` print the same output on every word of length at
/// most `depth`, by breadth-first search over reachable pairs.
pub fn same_behavior(t1: &Transducer, q1: usize, t2: &Transducer, q2: usize, depth: usize) -> bool {
    assert_eq!(t1.alphabet_size(), t2.alphabet_size());
    let mut seen = HashSet::from([(q1, q2)]);
    let mut queue = VecDeque::from([(q1, q2, 0usize)]);
    while let Some((p, q, d)) = queue.pop_front() {
        if d == depth {
            continue;
        }
        for x in 0..t1.alphabet_size() as Letter {
            if t1.output(p, x) != t2.output(q, x) {
                return false;
            }
            let pair = (t1.next(p, x), t2.next(q, x));
            if seen.insert(pair) {
                queue.push_back((pair.0, pair.1, d + 1));
            }
        }
    }
    true
}

/// Output of `q` on `word` composed by reading through `a`, then `b`.
pub fn compose_outputs(a: &Transducer, p: usize, b: &Transducer, q: usize, word: &[Letter]) -> Word {
    let (_, mid) = a.read_word(p, word).expect("letters in range");
    b.read_word(q, mid.letters()).expect("letters in range").1
}

/// `x ↦ λ(x, q_x)` with `q_x` the state every start reaches on `x`.
pub fn level_map(t: &Transducer, k: usize) -> Vec<Word> {
    all_words(t.alphabet_size(), k)
        .map(|w| {
            let q = forced_state(t, w.letters()).expect("level synchronizes");
            // The forced state is the one returned to after reading x from itself.
            assert_eq!(t.run(q, w.letters()), q);
            t.read_word(q, w.letters()).expect("letters in range").1
        })
        .collect()
}

/// Image of the periodic point `…www…` under the sliding map, by reading a
/// long stretch of the bi-infinite word and keeping one period from the end.
pub fn act_periodic(t: &Transducer, cycle: &[Letter], k: usize) -> Vec<Letter> {
    let p = cycle.len();
    let reps = k.div_ceil(p) + 1;
    let long: Vec<Letter> = cycle.iter().copied().cycle().take(reps * p + p).collect();
    let (_, out) = t.read_word(0, &long).expect("letters in range");
    // The last p outputs are past the first k letters, so they no longer
    // depend on the start state; they sit at positions aligned with `cycle`.
    out.letters()[out.len() - p..].to_vec()
}

/// `Σ(i, j)` by the nested-sum definition.
pub fn sigma_nested(i: u32, j: i64) -> u128 {
    if j <= 0 {
        return 0;
    }
    if i == 0 {
        return j as u128;
    }
    (1..=j).map(|k| sigma_nested(i - 1, k)).sum()
}

/// `C(j + i, i + 1)`, or 0 for `j ≤ 0`.
pub fn sigma_binomial(i: u32, j: i64) -> BigUint {
    if j <= 0 {
        return BigUint::from(0u32);
    }
    let (top, k) = (j as u64 + i as u64, i as u64 + 1);
    let mut acc = BigUint::from(1u32);
    for r in 0..k {
        acc = acc * (top - r) / (r + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nested_and_binomial_agree() {
        for i in 0..6 {
            for j in -2..8 {
                assert_eq!(BigUint::from(sigma_nested(i, j)), sigma_binomial(i, j), "({i},{j})");
            }
        }
    }

    #[test]
    fn words_enumerate_in_order() {
        let ws: Vec<String> = all_words(2, 2).map(|w| w.to_string()).collect();
        assert_eq!(ws, ["00", "01", "10", "11"]);
        assert_eq!(all_words(3, 0).count(), 1);
    }
}
