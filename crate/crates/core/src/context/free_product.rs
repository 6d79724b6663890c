//! Shortlex normal forms in free products of finite cyclic groups.
//!
//! Each factor `Z_n` contributes one generator letter; for `n > 2` its
//! inverse is a second letter, for `n = 2` the generator is self-inverse.
//! Normal form: merge adjacent syllables from the same factor, then write
//! each syllable `g^e` (`0 < e < n`) with the shorter of `g^e` and
//! `(g⁻¹)^(n-e)`, breaking ties by the alphabet order.

use crate::error::{Error, Result};
use crate::words::{Alphabet, Letter, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeProduct {
    orders: Vec<u32>,
    /// factor index and exponent (+1 or -1) of each letter
    letter_info: Vec<(usize, i64)>,
    /// (generator, inverse) letters of each factor; equal for order two
    factor_letters: Vec<(Letter, Letter)>,
}

impl FreeProduct {
    /// Builds the alphabet and reducer. `names` gives the generator symbol
    /// of each factor; inverses are the uppercase symbols.
    pub fn new(orders: &[u32], names: &[char]) -> Result<(Alphabet, Self)> {
        if orders.is_empty() {
            return Err(Error::Config(
                "free product needs at least one factor".into(),
            ));
        }
        if names.len() != orders.len() {
            return Err(Error::Config(format!(
                "{} factor names given for {} factors",
                names.len(),
                orders.len()
            )));
        }
        let mut symbols = Vec::new();
        let mut inverses = Vec::new();
        let mut letter_info = Vec::new();
        let mut factor_letters = Vec::new();
        for (f, (&n, &name)) in orders.iter().zip(names).enumerate() {
            if n < 2 {
                return Err(Error::Config(format!(
                    "factor order {n} must be at least 2"
                )));
            }
            if !name.is_ascii_lowercase() {
                return Err(Error::Config(format!(
                    "factor name {name:?} must be a lowercase letter"
                )));
            }
            let g = symbols.len();
            if n == 2 {
                symbols.push(name);
                inverses.push(g);
                letter_info.push((f, 1));
                factor_letters.push((Letter(g as u8), Letter(g as u8)));
            } else {
                symbols.push(name);
                symbols.push(name.to_ascii_uppercase());
                inverses.push(g + 1);
                inverses.push(g);
                letter_info.push((f, 1));
                letter_info.push((f, -1));
                factor_letters.push((Letter(g as u8), Letter(g as u8 + 1)));
            }
        }
        let alphabet = Alphabet::new(symbols, inverses)?;
        Ok((
            alphabet,
            Self {
                orders: orders.to_vec(),
                letter_info,
                factor_letters,
            },
        ))
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub(crate) fn reduce(&self, w: &[Letter]) -> Word {
        // syllables: (factor, exponent in 1..n)
        let mut syl: Vec<(usize, i64)> = Vec::with_capacity(w.len());
        for &l in w {
            let (f, e) = self.letter_info[l.index()];
            let n = self.orders[f] as i64;
            match syl.last_mut() {
                Some((tf, te)) if *tf == f => {
                    *te = (*te + e).rem_euclid(n);
                    if *te == 0 {
                        syl.pop();
                    }
                }
                _ => syl.push((f, e.rem_euclid(n))),
            }
        }
        let mut out = Vec::with_capacity(w.len());
        for (f, e) in syl {
            let n = self.orders[f] as i64;
            let (g, ginv) = self.factor_letters[f];
            let back = n - e;
            let (letter, count) = if e < back || (e == back && g <= ginv) {
                (g, e)
            } else {
                (ginv, back)
            };
            out.extend(std::iter::repeat_n(letter, count as usize));
        }
        Word(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z2_z3_reduction() {
        let (a, fp) = FreeProduct::new(&[2, 3], &['x', 'y']).unwrap();
        assert_eq!(a.format(&Word(a.letters().collect())), "xyY");
        let r = |s: &str| a.format(&fp.reduce(a.parse(s).unwrap().letters()));
        assert_eq!(r("yy"), "Y");
        assert_eq!(r("xx"), "");
        assert_eq!(r("yyy"), "");
        assert_eq!(r("xyYx"), "");
        assert_eq!(r("YY"), "y");
        assert_eq!(r("xyyx"), "xYx");
    }

    #[test]
    fn even_order_tie_breaks_on_alphabet_order() {
        let (a, fp) = FreeProduct::new(&[4], &['t']).unwrap();
        let r = |s: &str| a.format(&fp.reduce(a.parse(s).unwrap().letters()));
        assert_eq!(r("TT"), "tt");
        assert_eq!(r("ttt"), "T");
        assert_eq!(r("tttt"), "");
    }

    #[test]
    fn rejects_bad_factors() {
        assert!(FreeProduct::new(&[1], &['x']).is_err());
        assert!(FreeProduct::new(&[2, 3], &['x']).is_err());
        assert!(FreeProduct::new(&[2], &['X']).is_err());
    }
}
