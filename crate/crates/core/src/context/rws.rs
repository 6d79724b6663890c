//! Shortlex-reducing string rewriting systems.
//!
//! Rules are applied to exhaustion by a single left-to-right pass with an
//! output stack: the stack never contains a left-hand side, so after each
//! pushed letter only suffixes of the stack need checking. The rule set is
//! trusted to be confluent; every rule must be shortlex-decreasing, which
//! guarantees termination.

use crate::error::{Error, Result};
use crate::words::{Alphabet, Letter, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: Word,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewritingSystem {
    rules: Vec<Rule>,
    /// rule indices keyed by the last letter of their left-hand side
    by_last: Vec<Vec<usize>>,
    step_budget: u64,
}

impl RewritingSystem {
    /// Inverse-cancellation rules `x·x⁻¹ → ε` are added for every letter
    /// unless already present.
    pub fn new(alphabet: &Alphabet, mut rules: Vec<Rule>) -> Result<Self> {
        for x in alphabet.letters() {
            let lhs = Word(vec![x, alphabet.inverse(x)]);
            if !rules.iter().any(|r| r.lhs == lhs) {
                rules.push(Rule {
                    lhs,
                    rhs: Word::empty(),
                });
            }
        }
        let mut by_last = vec![Vec::new(); alphabet.len()];
        for (i, r) in rules.iter().enumerate() {
            if r.lhs.is_empty() {
                return Err(Error::Config("rule with empty left-hand side".into()));
            }
            if r.rhs >= r.lhs {
                return Err(Error::Config(format!(
                    "rule {} -> {} is not shortlex-reducing",
                    alphabet.format(&r.lhs),
                    alphabet.format(&r.rhs)
                )));
            }
            by_last[r.lhs.letters().last().unwrap().index()].push(i);
        }
        Ok(Self {
            rules,
            by_last,
            step_budget: 1 << 40,
        })
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub(crate) fn reduce(&self, w: &[Letter]) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(w.len());
        let mut pending: Vec<Letter> = w.iter().rev().copied().collect();
        let mut steps = 0u64;
        while let Some(l) = pending.pop() {
            out.push(l);
            let hit = self.by_last[l.index()].iter().find(|&&i| {
                let lhs = self.rules[i].lhs.letters();
                out.len() >= lhs.len() && &out[out.len() - lhs.len()..] == lhs
            });
            if let Some(&i) = hit {
                let rule = &self.rules[i];
                out.truncate(out.len() - rule.lhs.len());
                pending.extend(rule.rhs.letters().iter().rev());
                steps += 1;
                // shortlex-decreasing rules terminate; the budget only guards
                // against a corrupted rule table
                assert!(steps < self.step_budget, "rewriting step budget exhausted");
            }
        }
        Word(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2z3() -> (Alphabet, RewritingSystem) {
        let a = Alphabet::new(vec!['x', 'y', 'Y'], vec![0, 2, 1]).unwrap();
        let rule = |l: &str, r: &str| Rule {
            lhs: a.parse(l).unwrap(),
            rhs: a.parse(r).unwrap(),
        };
        let rules = vec![rule("yy", "Y"), rule("YY", "y")];
        let rws = RewritingSystem::new(&a, rules).unwrap();
        (a, rws)
    }

    #[test]
    fn reduces_with_added_cancellation() {
        let (a, rws) = z2z3();
        // yy -> Y, YY -> y, plus xx, yY, Yy cancellation
        assert_eq!(rws.rules().len(), 5);
        let r = |s: &str| a.format(&rws.reduce(a.parse(s).unwrap().letters()));
        assert_eq!(r("yy"), "Y");
        assert_eq!(r("yyy"), "");
        assert_eq!(r("xyyx"), "xYx");
        assert_eq!(r("xyYx"), "");
    }

    #[test]
    fn rejects_increasing_rule() {
        let a = Alphabet::free(1).unwrap();
        let rules = vec![Rule {
            lhs: a.parse("a").unwrap(),
            rhs: a.parse("AA").unwrap(),
        }];
        assert!(matches!(
            RewritingSystem::new(&a, rules),
            Err(Error::Config(_))
        ));
    }
}
