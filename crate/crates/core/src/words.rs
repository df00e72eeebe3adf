//! Words over a finite alphabet and the overlap adjacency that defines
//! alphabet overlap graphs.
//!
//! Letters are stored as 0-based indices. Text rendering maps 0 -> 'a',
//! 1 -> 'b', ... when the alphabet fits in 26 letters, and falls back to
//! comma-separated integers otherwise; parsing accepts both forms.

use crate::error::{AoError, SizeGuard};
use serde::{Deserialize, Serialize};

/// Largest supported alphabet; letters are stored in a byte each.
pub const MAX_ALPHABET: usize = 256;

/// A fixed-length word: the vertex type of every graph in this crate.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<u8>);

impl std::fmt::Debug for Word {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Word({})", self.render(MAX_ALPHABET))
    }
}

impl Word {
    /// Builds a word, checking every letter against the alphabet size.
    pub fn new(letters: Vec<u8>, d: usize) -> Result<Self, AoError> {
        if d < 1 || d > MAX_ALPHABET {
            return Err(AoError::InvalidParams(format!(
                "alphabet size {d} out of range 1..={MAX_ALPHABET}"
            )));
        }
        if let Some(&bad) = letters.iter().find(|&&c| c as usize >= d) {
            return Err(AoError::InvalidWord(format!(
                "letter index {bad} not below alphabet size {d}"
            )));
        }
        Ok(Word(letters))
    }

    pub(crate) fn from_raw(letters: Vec<u8>) -> Self {
        Word(letters)
    }

    pub fn zeros(len: usize) -> Self {
        Word(vec![0; len])
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sub-word copy; panics on out-of-range like slice indexing does.
    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Lexicographic rank of the word among all d^len words of its length.
    pub fn rank(&self, d: usize) -> u128 {
        self.0
            .iter()
            .fold(0u128, |acc, &c| acc * d as u128 + c as u128)
    }

    /// Inverse of [`Word::rank`].
    pub fn unrank(mut rank: u128, len: usize, d: usize) -> Word {
        let mut letters = vec![0u8; len];
        for slot in letters.iter_mut().rev() {
            *slot = (rank % d as u128) as u8;
            rank /= d as u128;
        }
        Word(letters)
    }

    /// Canonical text form: letters for d <= 26, comma-joined indices after.
    pub fn render(&self, d: usize) -> String {
        if d <= 26 {
            self.0.iter().map(|&c| (b'a' + c) as char).collect()
        } else {
            self.0
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }

    /// Accepts both rendered forms: `aab` or `0,0,1`.
    pub fn parse(text: &str, d: usize) -> Result<Word, AoError> {
        let numeric = text.contains(',')
            || (d > 26 && !text.is_empty() && text.chars().all(|c| c.is_ascii_digit()));
        let letters: Vec<u8> = if numeric {
            text.split(',')
                .map(|p| {
                    p.trim()
                        .parse::<u8>()
                        .map_err(|e| AoError::Parse(format!("bad letter index {p:?}: {e}")))
                })
                .collect::<Result<_, _>>()?
        } else {
            text.chars()
                .map(|c| {
                    if c.is_ascii_lowercase() {
                        Ok(c as u8 - b'a')
                    } else {
                        Err(AoError::Parse(format!("bad letter {c:?} in word {text:?}")))
                    }
                })
                .collect::<Result<_, _>>()?
        };
        Word::new(letters, d)
    }
}

/// The parameter triple (k, d, s) of an alphabet overlap graph, with the
/// derived tag length t = k - s.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawParams", into = "RawParams")]
pub struct AOParams {
    k: usize,
    d: usize,
    s: usize,
}

#[derive(Serialize, Deserialize)]
struct RawParams {
    k: usize,
    d: usize,
    s: usize,
}

impl TryFrom<RawParams> for AOParams {
    type Error = AoError;
    fn try_from(r: RawParams) -> Result<Self, AoError> {
        AOParams::new(r.k, r.d, r.s)
    }
}

impl From<AOParams> for RawParams {
    fn from(p: AOParams) -> Self {
        RawParams {
            k: p.k,
            d: p.d,
            s: p.s,
        }
    }
}

impl AOParams {
    pub fn new(k: usize, d: usize, s: usize) -> Result<Self, AoError> {
        if k < 2 {
            return Err(AoError::InvalidParams(format!("word length k={k} must be >= 2")));
        }
        if d < 1 || d > MAX_ALPHABET {
            return Err(AoError::InvalidParams(format!(
                "alphabet size d={d} out of range 1..={MAX_ALPHABET}"
            )));
        }
        if s < 1 || s > k - 1 {
            return Err(AoError::InvalidParams(format!(
                "shift s={s} out of range 1..={}",
                k - 1
            )));
        }
        Ok(AOParams { k, d, s })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn s(&self) -> usize {
        self.s
    }

    /// Tag length t = k - s.
    pub fn t(&self) -> usize {
        self.k - self.s
    }

    /// Whether t <= k/2, the regime with exact chromatic and domination results.
    pub fn short_tags(&self) -> bool {
        2 * self.t() <= self.k
    }

    pub fn vertex_count(&self) -> u128 {
        (self.d as u128).pow(self.k as u32)
    }

    pub fn tag_count(&self) -> u128 {
        (self.d as u128).pow(self.t() as u32)
    }

    pub fn check_word(&self, w: &Word) -> Result<(), AoError> {
        if w.len() != self.k {
            return Err(AoError::InvalidWord(format!(
                "word length {} does not match k={}",
                w.len(),
                self.k
            )));
        }
        if let Some(&bad) = w.letters().iter().find(|&&c| c as usize >= self.d) {
            return Err(AoError::InvalidWord(format!(
                "letter index {bad} not below alphabet size {}",
                self.d
            )));
        }
        Ok(())
    }
}

/// Cyclic left rotation by `r` positions (mod word length).
pub fn rotate_left(w: &Word, r: usize) -> Word {
    if w.is_empty() {
        return w.clone();
    }
    let n = w.len();
    let r = r % n;
    let mut letters = Vec::with_capacity(n);
    letters.extend_from_slice(&w.letters()[r..]);
    letters.extend_from_slice(&w.letters()[..r]);
    Word::from_raw(letters)
}

/// First t letters of a k-word.
pub fn prefix_tag(w: &Word, p: &AOParams) -> Word {
    w.slice(0, p.t())
}

/// Last t letters of a k-word.
pub fn suffix_tag(w: &Word, p: &AOParams) -> Word {
    w.slice(w.len() - p.t(), w.len())
}

/// The edge relation of G(k,d,s): distinct words whose length-t suffix and
/// prefix overlap in either direction.
pub fn overlap_adjacent(v: &Word, w: &Word, p: &AOParams) -> Result<bool, AoError> {
    p.check_word(v)?;
    p.check_word(w)?;
    if v == w {
        return Ok(false);
    }
    let t = p.t();
    let s = p.s();
    Ok(v.letters()[s..] == w.letters()[..t] || w.letters()[s..] == v.letters()[..t])
}

/// Streams all d^len words of a given length in lexicographic order.
pub struct WordIter {
    next: Option<Word>,
    d: usize,
}

impl Iterator for WordIter {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let current = self.next.take()?;
        // compute successor in lex order
        let mut letters = current.letters().to_vec();
        let mut i = letters.len();
        loop {
            if i == 0 {
                self.next = None;
                break;
            }
            i -= 1;
            if (letters[i] as usize) + 1 < self.d {
                letters[i] += 1;
                for slot in letters.iter_mut().skip(i + 1) {
                    *slot = 0;
                }
                self.next = Some(Word::from_raw(letters));
                break;
            }
        }
        Some(current)
    }
}

/// All d^length words in strict lexicographic order, exactly once.
pub fn enumerate_words(length: usize, d: usize, guard: &SizeGuard) -> Result<WordIter, AoError> {
    if d < 1 || d > MAX_ALPHABET {
        return Err(AoError::InvalidParams(format!(
            "alphabet size d={d} out of range 1..={MAX_ALPHABET}"
        )));
    }
    guard.check((d as u128).pow(length as u32))?;
    Ok(WordIter {
        next: Some(Word::zeros(length)),
        d,
    })
}
