//! The synchronous transducer value type and its `.tdx` text form.
//!
//! A [`Transducer`] is complete and deterministic: every state has exactly one
//! transition and one output letter for every input letter. States are dense
//! indices `0..num_states()` carrying human-readable labels; letters are the
//! integers `0..alphabet_size()`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, ParseError, Result};
use crate::word::{check_letters, Letter, Word};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Transducer {
    alphabet: usize,
    labels: Vec<String>,
    // Row-major by state: entry `q * alphabet + x`.
    next: Vec<u32>,
    out: Vec<Letter>,
}

fn check_label(label: &str) -> Result<()> {
    if label.is_empty() || label.chars().any(|c| c.is_whitespace() || c == '#') {
        return Err(Error::Invalid(format!(
            "state label `{label}` must be nonempty, without whitespace or `#`"
        )));
    }
    Ok(())
}

impl Transducer {
    /// Builds a machine from row-major tables (`next[q * n + x]`,
    /// `out[q * n + x]`), validating completeness and ranges.
    ///
    /// Alphabets of size 1 are accepted so that duals of one-state machines
    /// are representable.
    pub fn from_tables(
        alphabet: usize,
        labels: Vec<String>,
        next: Vec<u32>,
        out: Vec<Letter>,
    ) -> Result<Self> {
        if alphabet == 0 {
            return Err(Error::Invalid("alphabet must have at least one letter".into()));
        }
        if labels.is_empty() {
            return Err(Error::Invalid("a transducer needs at least one state".into()));
        }
        let cells = labels.len() * alphabet;
        if next.len() != cells || out.len() != cells {
            return Err(Error::Invalid(format!(
                "tables must have {cells} entries, got {} and {}",
                next.len(),
                out.len()
            )));
        }
        let mut seen = HashMap::with_capacity(labels.len());
        for label in &labels {
            check_label(label)?;
            if seen.insert(label.as_str(), ()).is_some() {
                return Err(Error::Invalid(format!("duplicate state label `{label}`")));
            }
        }
        if let Some(&q) = next.iter().find(|&&q| q as usize >= labels.len()) {
            return Err(Error::UnknownState(q.to_string()));
        }
        check_letters(&out, alphabet)?;
        Ok(Transducer {
            alphabet,
            labels,
            next,
            out,
        })
    }

    /// Builds a machine from a function `(state, letter) -> (next, output)`.
    pub fn from_fn<F>(alphabet: usize, labels: Vec<String>, mut f: F) -> Result<Self>
    where
        F: FnMut(usize, Letter) -> (usize, Letter),
    {
        let mut next = Vec::with_capacity(labels.len() * alphabet);
        let mut out = Vec::with_capacity(labels.len() * alphabet);
        for q in 0..labels.len() {
            for x in 0..alphabet as Letter {
                let (p, y) = f(q, x);
                next.push(u32::try_from(p).map_err(|_| Error::UnknownState(p.to_string()))?);
                out.push(y);
            }
        }
        Transducer::from_tables(alphabet, labels, next, out)
    }

    /// One state, `x|x` for every letter.
    pub fn identity(alphabet: usize) -> Self {
        Transducer::from_fn(alphabet, vec!["id".to_string()], |_, x| (0, x))
            .expect("identity is well formed")
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, q: usize) -> &str {
        &self.labels[q]
    }

    pub fn state_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn state(&self, label: &str) -> Result<usize> {
        self.state_index(label)
            .ok_or_else(|| Error::UnknownState(label.to_string()))
    }

    /// `π(x, q)`. Panics if `q` or `x` is out of range.
    #[inline]
    pub fn next(&self, q: usize, x: Letter) -> usize {
        debug_assert!((x as usize) < self.alphabet);
        self.next[q * self.alphabet + x as usize] as usize
    }

    /// `λ(x, q)`. Panics if `q` or `x` is out of range.
    #[inline]
    pub fn output(&self, q: usize, x: Letter) -> Letter {
        debug_assert!((x as usize) < self.alphabet);
        self.out[q * self.alphabet + x as usize]
    }

    /// `π(Γ, q)` without building the output.
    pub fn run(&self, q: usize, word: &[Letter]) -> usize {
        word.iter().fold(q, |p, &x| self.next(p, x))
    }

    /// Reads `word` from `q`, returning the final state and the output word.
    /// The empty word leaves the state unchanged and outputs nothing.
    pub fn read_word(&self, q: usize, word: &[Letter]) -> Result<(usize, Word)> {
        if q >= self.num_states() {
            return Err(Error::UnknownState(q.to_string()));
        }
        check_letters(word, self.alphabet)?;
        let mut state = q;
        let mut output = Vec::with_capacity(word.len());
        for &x in word {
            output.push(self.output(state, x));
            state = self.next(state, x);
        }
        Ok((state, Word(output)))
    }

    /// Same as [`read_word`](Self::read_word) with the start state given by label.
    pub fn read_word_from(&self, label: &str, word: &[Letter]) -> Result<(usize, Word)> {
        self.read_word(self.state(label)?, word)
    }

    fn row(&self, q: usize) -> std::ops::Range<usize> {
        q * self.alphabet..(q + 1) * self.alphabet
    }

    fn non_bijective_state(&self) -> Option<usize> {
        let mut seen = vec![false; self.alphabet];
        (0..self.num_states()).find(|&q| {
            seen.iter_mut().for_each(|s| *s = false);
            self.out[self.row(q)].iter().any(|&y| {
                let hit = seen[y as usize];
                seen[y as usize] = true;
                hit
            })
        })
    }

    /// True iff every state's single-letter output map permutes the alphabet.
    pub fn is_invertible(&self) -> bool {
        self.non_bijective_state().is_none()
    }

    /// The automaton-theoretic inverse: every edge `q --y|x--> p` becomes
    /// `q' --x|y--> p'`. Labels gain a trailing `'` (or lose one they already
    /// carry), so inverting twice restores the original labels.
    pub fn invert(&self) -> Result<Transducer> {
        if let Some(q) = self.non_bijective_state() {
            return Err(Error::NotInvertible {
                state: self.labels[q].clone(),
            });
        }
        let n = self.alphabet;
        let mut next = vec![0; self.next.len()];
        let mut out = vec![0; self.out.len()];
        for q in 0..self.num_states() {
            for y in 0..n as Letter {
                let x = self.output(q, y) as usize;
                next[q * n + x] = self.next(q, y) as u32;
                out[q * n + x] = y;
            }
        }
        let labels = self
            .labels
            .iter()
            .map(|l| match l.strip_suffix('\'') {
                Some(base) if !base.is_empty() => base.to_string(),
                _ => format!("{l}'"),
            })
            .collect();
        Transducer::from_tables(n, labels, next, out)
    }

    /// The dual automaton: states are the letters of `self` (labelled
    /// `"0"`, `"1"`, …) and letters are the state indices of `self`, with
    /// `π∂(q, x) = λ(x, q)` and `λ∂(q, x) = π(x, q)`.
    pub fn dual(&self) -> Transducer {
        let labels = (0..self.alphabet).map(|x| x.to_string()).collect();
        Transducer::from_fn(self.num_states(), labels, |x, q| {
            let q = q as usize;
            (self.output(q, x as Letter) as usize, self.next(q, x as Letter) as Letter)
        })
        .expect("dual of a valid transducer is valid")
    }

    /// Restriction to a set of states closed under transitions. States keep
    /// their relative order.
    pub(crate) fn restrict(&self, keep: &[usize]) -> Transducer {
        let mut index = vec![u32::MAX; self.num_states()];
        for (i, &q) in keep.iter().enumerate() {
            index[q] = i as u32;
        }
        let labels = keep.iter().map(|&q| self.labels[q].clone()).collect();
        let mut next = Vec::with_capacity(keep.len() * self.alphabet);
        let mut out = Vec::with_capacity(keep.len() * self.alphabet);
        for &q in keep {
            for x in 0..self.alphabet as Letter {
                let p = index[self.next(q, x)];
                assert!(p != u32::MAX, "restriction to a set not closed under transitions");
                next.push(p);
                out.push(self.output(q, x));
            }
        }
        Transducer {
            alphabet: self.alphabet,
            labels,
            next,
            out,
        }
    }

    /// Same tables with new labels.
    pub fn relabel(&self, labels: Vec<String>) -> Result<Transducer> {
        Transducer::from_tables(self.alphabet, labels, self.next.clone(), self.out.clone())
    }

    /// Equality of transition and output tables, ignoring labels.
    pub fn same_tables(&self, other: &Transducer) -> bool {
        self.alphabet == other.alphabet && self.next == other.next && self.out == other.out
    }

    /// Canonical `.tdx` text.
    pub fn to_tdx(&self) -> String {
        self.to_string()
    }

    pub fn parse(text: &str) -> Result<Transducer> {
        parse_tdx(text).map_err(Error::from)
    }
}

impl fmt::Display for Transducer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "alphabet {}", self.alphabet)?;
        writeln!(f, "states {}", self.labels.join(" "))?;
        for q in 0..self.num_states() {
            for x in 0..self.alphabet as Letter {
                writeln!(
                    f,
                    "{} {} {} {}",
                    self.labels[q],
                    x,
                    self.output(q, x),
                    self.labels[self.next(q, x)]
                )?;
            }
        }
        Ok(())
    }
}

impl FromStr for Transducer {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Transducer::parse(s)
    }
}

fn parse_tdx(text: &str) -> std::result::Result<Transducer, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let syntax = |line, message: &str| ParseError::Syntax {
        line,
        message: message.to_string(),
    };

    let (line, header) = lines.next().ok_or_else(|| syntax(1, "empty input"))?;
    let alphabet = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["alphabet", n] => n
            .parse::<usize>()
            .ok()
            .filter(|&n| n >= 1)
            .ok_or_else(|| syntax(line, "alphabet size must be a positive integer"))?,
        _ => return Err(syntax(line, "expected `alphabet <n>`")),
    };

    let (states_line, header) = lines
        .next()
        .ok_or_else(|| syntax(line + 1, "expected `states <label>...`"))?;
    let mut tokens = header.split_whitespace();
    if tokens.next() != Some("states") {
        return Err(syntax(states_line, "expected `states <label>...`"));
    }
    let labels: Vec<String> = tokens.map(str::to_string).collect();
    if labels.is_empty() {
        return Err(syntax(states_line, "at least one state is required"));
    }
    let mut index = HashMap::new();
    for (i, label) in labels.iter().enumerate() {
        if index.insert(label.clone(), i).is_some() {
            return Err(ParseError::DuplicateState {
                line: states_line,
                label: label.clone(),
            });
        }
    }

    let cells = labels.len() * alphabet;
    let mut next = vec![u32::MAX; cells];
    let mut out = vec![0; cells];
    for (line, row) in lines {
        let fields: Vec<&str> = row.split_whitespace().collect();
        let [state, input, output, target] = fields[..] else {
            return Err(syntax(
                line,
                "expected `<state> <in-letter> <out-letter> <next-state>`",
            ));
        };
        let letter = |tok: &str| -> std::result::Result<Letter, ParseError> {
            let x: Letter = tok
                .parse()
                .map_err(|_| syntax(line, &format!("`{tok}` is not a letter")))?;
            if x as usize >= alphabet {
                return Err(ParseError::LetterOutOfRange {
                    line,
                    letter: x,
                    alphabet,
                });
            }
            Ok(x)
        };
        let state_of = |tok: &str| {
            index.get(tok).copied().ok_or_else(|| ParseError::UnknownState {
                line,
                label: tok.to_string(),
            })
        };
        let q = state_of(state)?;
        let x = letter(input)?;
        let y = letter(output)?;
        let p = state_of(target)?;
        let cell = q * alphabet + x as usize;
        if next[cell] != u32::MAX {
            return Err(ParseError::DuplicateTransition {
                line,
                state: state.to_string(),
                letter: x,
            });
        }
        next[cell] = p as u32;
        out[cell] = y;
    }
    if let Some(cell) = next.iter().position(|&p| p == u32::MAX) {
        return Err(ParseError::MissingTransition {
            line: states_line,
            state: labels[cell / alphabet].clone(),
            letter: (cell % alphabet) as Letter,
        });
    }
    Transducer::from_tables(alphabet, labels, next, out).map_err(|e| ParseError::Syntax {
        line: states_line,
        message: e.to_string(),
    })
}
