//! Knuth–Morris–Pratt matching over letter sequences, primitive roots and
//! cyclic rotation matching. No group reduction happens here.

use crate::error::{arg, Result};
use crate::words::{Letter, Word};

/// A compiled KMP pattern.
#[derive(Clone, Debug)]
pub struct Kmp<'p> {
    pattern: &'p [Letter],
    /// `fail[i]`: length of the longest proper border of `pattern[..=i]`.
    fail: Vec<usize>,
}

impl<'p> Kmp<'p> {
    pub fn new(pattern: &'p [Letter]) -> Result<Self> {
        if pattern.is_empty() {
            return arg("KMP pattern must be nonempty");
        }
        let mut fail = vec![0; pattern.len()];
        let mut k = 0;
        for i in 1..pattern.len() {
            while k > 0 && pattern[k] != pattern[i] {
                k = fail[k - 1];
            }
            if pattern[k] == pattern[i] {
                k += 1;
            }
            fail[i] = k;
        }
        Ok(Self { pattern, fail })
    }

    /// Calls `on_match(offset)` for each occurrence in ascending order until
    /// it returns `false`. Returns the number of letter comparisons made.
    pub fn scan(&self, text: &[Letter], mut on_match: impl FnMut(usize) -> bool) -> usize {
        let p = self.pattern;
        let mut k = 0;
        let mut comparisons = 0;
        for (i, &c) in text.iter().enumerate() {
            loop {
                comparisons += 1;
                if p[k] == c {
                    k += 1;
                    break;
                }
                if k == 0 {
                    break;
                }
                k = self.fail[k - 1];
            }
            if k == p.len() {
                if !on_match(i + 1 - p.len()) {
                    return comparisons;
                }
                k = self.fail[k - 1];
            }
        }
        comparisons
    }

    pub fn find_all(&self, text: &[Letter]) -> Vec<usize> {
        let mut out = Vec::new();
        self.scan(text, |o| {
            out.push(o);
            true
        });
        out
    }

    pub fn find_first(&self, text: &[Letter]) -> Option<usize> {
        let mut out = None;
        self.scan(text, |o| {
            out = Some(o);
            false
        });
        out
    }
}

/// All start offsets of `pattern` in `text`, ascending.
pub fn kmp_find_all(pattern: &Word, text: &Word) -> Result<Vec<usize>> {
    Ok(Kmp::new(pattern.letters())?.find_all(text.letters()))
}

/// Same as [`kmp_find_all`], also returning the comparison count.
pub fn kmp_find_all_counted(pattern: &Word, text: &Word) -> Result<(Vec<usize>, usize)> {
    let kmp = Kmp::new(pattern.letters())?;
    let mut out = Vec::new();
    let count = kmp.scan(text.letters(), |o| {
        out.push(o);
        true
    });
    Ok((out, count))
}

/// Returns `(y, l)` with `z = y^l` and `l` maximal: `|y|` is the smallest
/// positive offset of `z` in `z·z`.
pub fn primitive_root(z: &Word) -> Result<(Word, usize)> {
    if z.is_empty() {
        return arg("primitive root of the empty word");
    }
    let zz = z.repeat(2);
    let kmp = Kmp::new(z.letters())?;
    let mut j = z.len();
    kmp.scan(&zz.letters()[1..], |o| {
        j = o + 1;
        false
    });
    Ok((z.prefix(j), z.len() / j))
}

/// Smallest `k` with `u = z(k:|z|)·z(k)`, i.e. `u` is the rotation of `z`
/// starting at offset `k`. `None` if the lengths differ or no rotation
/// matches.
pub fn cyclic_match(u: &Word, z: &Word) -> Option<usize> {
    if u.len() != z.len() {
        return None;
    }
    if z.is_empty() {
        return Some(0);
    }
    let mut text = Vec::with_capacity(2 * z.len() - 1);
    text.extend_from_slice(z.letters());
    text.extend_from_slice(&z.letters()[..z.len() - 1]);
    Kmp::new(u.letters()).expect("nonempty").find_first(&text)
}
