//! Finite words and periodic (cyclic) words over `{0, …, n-1}`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub type Letter = u32;

/// A finite word. The empty word is `Word::default()`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// The word of length `len` whose base-`n` reading (first letter most
    /// significant) is `code`. Lexicographic order on words of a fixed length
    /// matches numeric order on codes.
    pub fn from_code(mut code: usize, n: usize, len: usize) -> Self {
        let mut letters = vec![0; len];
        for slot in letters.iter_mut().rev() {
            *slot = (code % n) as Letter;
            code /= n;
        }
        Word(letters)
    }

    pub fn code(&self, n: usize) -> usize {
        word_code(&self.0, n)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn check_alphabet(&self, n: usize) -> Result<()> {
        check_letters(&self.0, n)
    }
}

pub(crate) fn word_code(letters: &[Letter], n: usize) -> usize {
    letters.iter().fold(0, |acc, &x| acc * n + x as usize)
}

pub(crate) fn check_letters(letters: &[Letter], n: usize) -> Result<()> {
    match letters.iter().find(|&&x| x as usize >= n) {
        Some(&letter) => Err(Error::LetterOutOfRange { letter, alphabet: n }),
        None => Ok(()),
    }
}

/// Number of words of length `k` over `n` letters, if it fits in `usize`.
pub fn word_count(n: usize, k: usize) -> Option<usize> {
    n.checked_pow(u32::try_from(k).ok()?)
}

pub(crate) fn fmt_letters(letters: &[Letter], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if letters.iter().all(|&x| x < 10) {
        for x in letters {
            write!(f, "{x}")?;
        }
    } else {
        for (i, x) in letters.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{x}")?;
        }
    }
    Ok(())
}

fn parse_letters(s: &str) -> Result<Vec<Letter>> {
    let s = s.trim();
    let bad = |_| Error::Invalid(format!("cannot read `{s}` as a word"));
    if s.contains('.') || s.contains(',') {
        s.split(['.', ','])
            .map(|t| t.trim().parse::<Letter>().map_err(bad))
            .collect()
    } else {
        s.chars()
            .map(|c| {
                c.to_digit(10)
                    .ok_or_else(|| Error::Invalid(format!("cannot read `{s}` as a word")))
            })
            .collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_letters(&self.0, f)
    }
}

/// Digits (`0110`) for alphabets up to 10 letters, otherwise dot or comma
/// separated (`3.11.0`). The empty string is the empty word.
impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_letters(s).map(Word)
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

/// A cyclic word standing for the bi-infinite repetition of its letters.
///
/// Equality is equality of the bi-infinite sequences up to shift: two
/// representatives are equal iff one is a rotation of a repetition of the
/// other. Use [`PeriodicWord::letters`] for position-by-position comparison.
#[derive(Clone, Debug)]
pub struct PeriodicWord {
    letters: Vec<Letter>,
}

impl PeriodicWord {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::EmptyCycle);
        }
        Ok(PeriodicWord { letters })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn period(&self) -> usize {
        self.letters.len()
    }

    /// Letter at position `i`, read cyclically (negative indices allowed).
    pub fn at(&self, i: isize) -> Letter {
        let p = self.letters.len() as isize;
        self.letters[i.rem_euclid(p) as usize]
    }

    /// Shift left by `by` positions: position `i` of the result holds
    /// position `i + by` of `self`.
    pub fn rotate(&self, by: usize) -> PeriodicWord {
        let mut letters = self.letters.clone();
        let p = letters.len();
        letters.rotate_left(by % p);
        PeriodicWord { letters }
    }

    /// Shortest prefix whose repetition gives the same cycle.
    pub fn primitive(&self) -> PeriodicWord {
        let p = self.letters.len();
        let period = (1..=p)
            .filter(|d| p.is_multiple_of(*d))
            .find(|&d| (d..p).all(|i| self.letters[i] == self.letters[i - d]))
            .unwrap_or(p);
        PeriodicWord {
            letters: self.letters[..period].to_vec(),
        }
    }

    /// Primitive root in its lexicographically least rotation.
    pub fn canonical(&self) -> PeriodicWord {
        let root = self.primitive();
        (0..root.period())
            .map(|r| root.rotate(r))
            .min_by(|a, b| a.letters.cmp(&b.letters))
            .expect("nonempty cycle")
    }

    pub fn check_alphabet(&self, n: usize) -> Result<()> {
        check_letters(&self.letters, n)
    }
}

impl PartialEq for PeriodicWord {
    fn eq(&self, other: &Self) -> bool {
        self.canonical().letters == other.canonical().letters
    }
}

impl Eq for PeriodicWord {}

impl fmt::Display for PeriodicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        fmt_letters(&self.letters, f)?;
        f.write_str(")")
    }
}

impl FromStr for PeriodicWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        PeriodicWord::new(parse_letters(s)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn codes_follow_lexicographic_order() {
        let words: Vec<Word> = (0..9).map(|c| Word::from_code(c, 3, 2)).collect();
        let mut sorted = words.clone();
        sorted.sort();
        assert_eq!(words, sorted);
        assert_eq!(Word::from_code(5, 3, 2), Word(vec![1, 2]));
        assert_eq!(Word(vec![1, 2]).code(3), 5);
    }

    #[test]
    fn word_text_forms() {
        assert_eq!("0110".parse::<Word>().unwrap(), Word(vec![0, 1, 1, 0]));
        assert_eq!("3.11.0".parse::<Word>().unwrap(), Word(vec![3, 11, 0]));
        assert_eq!("".parse::<Word>().unwrap(), Word::empty());
        assert_eq!(Word(vec![3, 11, 0]).to_string(), "3.11.0");
        assert!("01x".parse::<Word>().is_err());
    }

    #[test]
    fn periodic_equality_is_rotation_of_repetition() {
        let a: PeriodicWord = "011".parse().unwrap();
        let b: PeriodicWord = "101101".parse().unwrap();
        let c: PeriodicWord = "001".parse().unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert_eq!(b.primitive().letters(), &[1, 0, 1]);
        assert_eq!(b.canonical().letters(), &[0, 1, 1]);
        assert!(PeriodicWord::new(vec![]).is_err());
    }

    #[test]
    fn rotation_and_cyclic_indexing() {
        let w: PeriodicWord = "0123".parse().unwrap();
        assert_eq!(w.rotate(1).letters(), &[1, 2, 3, 0]);
        assert_eq!(w.at(-1), 3);
        assert_eq!(w.at(5), 1);
    }
}
