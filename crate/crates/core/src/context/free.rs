use crate::words::{Alphabet, Letter, Word};

/// Free reduction: cancel adjacent inverse pairs with a stack.
pub(crate) fn reduce(alphabet: &Alphabet, w: &[Letter]) -> Word {
    let mut out: Vec<Letter> = Vec::with_capacity(w.len());
    for &l in w {
        match out.last() {
            Some(&top) if alphabet.inverse(top) == l => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    Word(out)
}

/// Strips matching inverse letters from both ends of a freely reduced word.
pub(crate) fn cyclically_reduce(alphabet: &Alphabet, w: &Word) -> Word {
    let s = w.letters();
    let (mut i, mut j) = (0, s.len());
    while j >= i + 2 && alphabet.inverse(s[i]) == s[j - 1] {
        i += 1;
        j -= 1;
    }
    w.segment(i, j)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_cancellation() {
        let a = Alphabet::free(2).unwrap();
        let r = |s: &str| a.format(&reduce(&a, a.parse(s).unwrap().letters()));
        assert_eq!(r("abB"), "a");
        assert_eq!(r("aA"), "");
        assert_eq!(r("abBAb"), "b");
        assert_eq!(r("ab"), "ab");
    }

    #[test]
    fn cyclic_reduction() {
        let a = Alphabet::free(2).unwrap();
        let c = |s: &str| a.format(&cyclically_reduce(&a, &a.parse(s).unwrap()));
        assert_eq!(c("abA"), "b");
        assert_eq!(c("aba"), "aba");
        assert_eq!(c(""), "");
    }
}
