//! Alphabets and words.
//!
//! Surface syntax: a lowercase ASCII letter is a generator, the matching
//! uppercase letter its inverse. Self-inverse generators (order two) are
//! written lowercase only. Letters are stored as indices into the
//! [`Alphabet`], and the index order is the order used by shortlex.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A letter of an [`Alphabet`], stored as its position in the ordering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub u8);

impl Letter {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

const NO_LETTER: u8 = u8::MAX;

/// An ordered, inverse-closed set of letters.
#[derive(Clone, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<char>,
    inv: Vec<Letter>,
    lookup: [u8; 128],
    gen_count: usize,
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Alphabet")
            .field("symbols", &self.symbols.iter().collect::<String>())
            .field("gen_count", &self.gen_count)
            .finish()
    }
}

impl Alphabet {
    /// Builds an alphabet from symbols in shortlex order; `inverses[i]` is
    /// the index of the inverse of symbol `i`.
    pub fn new(symbols: Vec<char>, inverses: Vec<usize>) -> Result<Self> {
        if symbols.len() != inverses.len() {
            return Err(Error::Config("every letter needs an inverse".into()));
        }
        if symbols.is_empty() || symbols.len() >= NO_LETTER as usize {
            return Err(Error::Config(format!(
                "alphabet must have between 1 and {} letters",
                NO_LETTER - 1
            )));
        }
        let mut lookup = [NO_LETTER; 128];
        for (i, &c) in symbols.iter().enumerate() {
            if !c.is_ascii_alphabetic() {
                return Err(Error::Config(format!(
                    "letter {c:?} is not an ASCII letter"
                )));
            }
            if lookup[c as usize] != NO_LETTER {
                return Err(Error::Config(format!("letter {c:?} declared twice")));
            }
            lookup[c as usize] = i as u8;
        }
        let mut gen_count = 0;
        for (i, &j) in inverses.iter().enumerate() {
            if j >= symbols.len() || inverses[j] != i {
                return Err(Error::Config(format!(
                    "inverse map is not an involution at letter {:?}",
                    symbols[i]
                )));
            }
            if j >= i {
                gen_count += 1;
            }
        }
        Ok(Self {
            symbols,
            inv: inverses.into_iter().map(|j| Letter(j as u8)).collect(),
            lookup,
            gen_count,
        })
    }

    /// The free-group alphabet `a A b B c C ...` of the given rank.
    pub fn free(rank: usize) -> Result<Self> {
        if rank == 0 || rank > 26 {
            return Err(Error::Config(format!("free rank {rank} must be in 1..=26")));
        }
        let mut symbols = Vec::with_capacity(2 * rank);
        let mut inverses = Vec::with_capacity(2 * rank);
        for g in 0..rank {
            let c = (b'a' + g as u8) as char;
            symbols.push(c);
            symbols.push(c.to_ascii_uppercase());
            inverses.push(2 * g + 1);
            inverses.push(2 * g);
        }
        Self::new(symbols, inverses)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Number of generators before inverse closure (orbits of the inverse map).
    pub fn gen_count(&self) -> usize {
        self.gen_count
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.symbols.len()).map(|i| Letter(i as u8))
    }

    pub fn symbol(&self, l: Letter) -> char {
        self.symbols[l.index()]
    }

    pub fn inverse(&self, l: Letter) -> Letter {
        self.inv[l.index()]
    }

    pub fn letter(&self, c: char) -> Option<Letter> {
        if !c.is_ascii() {
            return None;
        }
        match self.lookup[c as usize] {
            NO_LETTER => None,
            i => Some(Letter(i)),
        }
    }

    pub fn parse(&self, text: &str) -> Result<Word> {
        text.chars()
            .enumerate()
            .map(|(i, c)| {
                self.letter(c).ok_or(Error::Parse {
                    position: i + 1,
                    symbol: c,
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub fn format(&self, w: &Word) -> String {
        w.0.iter().map(|&l| self.symbol(l)).collect()
    }

    /// Formal inverse: reversed, each letter inverted.
    pub fn invert(&self, w: &Word) -> Word {
        Word(w.0.iter().rev().map(|&l| self.inverse(l)).collect())
    }

    /// `w^n` as a raw concatenation; negative `n` uses the inverse word.
    pub fn power(&self, w: &Word, n: i64) -> Word {
        if n >= 0 {
            w.repeat(n as usize)
        } else {
            self.invert(w).repeat(n.unsigned_abs() as usize)
        }
    }

    /// The unreduced conjugate `g⁻¹·w·g`.
    pub fn conjugate(&self, w: &Word, g: &Word) -> Word {
        Word::concat(&[&self.invert(g), w, g])
    }
}

/// Free function form of [`Alphabet::parse`].
pub fn parse_word(text: &str, alphabet: &Alphabet) -> Result<Word> {
    alphabet.parse(text)
}

/// A finite sequence of letters. The empty word is the identity.
///
/// `Ord` is shortlex: shorter words first, then lexicographic by letter
/// index.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<Letter>);

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl Word {
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

    /// `w(a)`: the first `a` letters.
    pub fn prefix(&self, a: usize) -> Word {
        Word(self.0[..a].to_vec())
    }

    /// `w(a:b)`: letters `a+1 ..= b` (1-based), so `w(b) = w(a)·w(a:b)`.
    pub fn segment(&self, a: usize, b: usize) -> Word {
        Word(self.0[a..b].to_vec())
    }

    pub fn concat(parts: &[&Word]) -> Word {
        let mut v = Vec::with_capacity(parts.iter().map(|w| w.len()).sum());
        for p in parts {
            v.extend_from_slice(&p.0);
        }
        Word(v)
    }

    pub fn then(&self, other: &Word) -> Word {
        Word::concat(&[self, other])
    }

    pub fn repeat(&self, n: usize) -> Word {
        Word(self.0.repeat(n))
    }

    /// Split at `l = ⌊|w|/2⌋` into `(w_L, w_R)`.
    pub fn halves(&self) -> (Word, Word) {
        let l = self.len() / 2;
        (self.prefix(l), self.segment(l, self.len()))
    }

    /// The half-cyclic conjugate `w_C = w_R·w_L`.
    pub fn half_cyclic(&self) -> Word {
        let l = self.len() / 2;
        let mut v = Vec::with_capacity(self.len());
        v.extend_from_slice(&self.0[l..]);
        v.extend_from_slice(&self.0[..l]);
        Word(v)
    }

    /// `w_L`, the first `⌊|w|/2⌋` letters.
    pub fn left_half(&self) -> Word {
        self.prefix(self.len() / 2)
    }
}

pub fn invert(w: &Word, alphabet: &Alphabet) -> Word {
    alphabet.invert(w)
}

pub fn half_cyclic(w: &Word) -> Word {
    w.half_cyclic()
}

/// Reads a word list: one word per line, `#` starts a comment, blank lines
/// are skipped and a lone `1` denotes the empty word.
pub fn parse_word_list(text: &str, alphabet: &Alphabet) -> Result<Vec<Word>> {
    let mut out = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if line == "1" {
            out.push(Word::empty());
            continue;
        }
        let w = alphabet.parse(line).map_err(|e| match e {
            Error::Parse { position, symbol } => Error::File {
                line: n + 1,
                message: format!("unknown symbol {symbol:?} at column {position}"),
            },
            other => other,
        })?;
        out.push(w);
    }
    Ok(out)
}
