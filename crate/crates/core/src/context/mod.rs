//! Group backends, shortlex reduction and the derived constants.
//!
//! A [`GroupContext`] bundles an [`Alphabet`], a reducer computing the
//! shortlex normal form, the hyperbolicity constant δ and the constants
//! derived from them. It is immutable after construction apart from an
//! internal cache of enumerated balls, and cheap to clone.

mod constants;
mod file;
mod free;
mod free_product;
mod rws;

use std::collections::{BTreeMap, HashSet};
use std::sync::{Arc, Mutex};

pub use constants::{Caps, Constants, Profile, PAPER_RADIUS_BUDGET};
pub use file::parse_group;
pub use free_product::FreeProduct;
pub use rws::{RewritingSystem, Rule};

pub(crate) use free::cyclically_reduce as free_cyclically_reduce;

use crate::error::{Error, Result};
use crate::words::{Alphabet, Letter, Word};

/// Default limit on the number of elements a ball enumeration may visit.
pub const DEFAULT_NODE_BUDGET: usize = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Backend {
    FreeGroup { rank: usize },
    FreeProduct(FreeProduct),
    RewritingSystem(RewritingSystem),
}

struct Inner {
    alphabet: Alphabet,
    backend: Backend,
    delta: u32,
    constants: Constants,
    node_budget: usize,
    balls: Mutex<BTreeMap<usize, Arc<Vec<Word>>>>,
}

#[derive(Clone)]
pub struct GroupContext {
    inner: Arc<Inner>,
    profile: Profile,
    caps: Caps,
}

impl std::fmt::Debug for GroupContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GroupContext")
            .field("alphabet", &self.inner.alphabet)
            .field("backend", &self.backend_name())
            .field("delta", &self.inner.delta)
            .field("profile", &self.profile)
            .finish()
    }
}

impl GroupContext {
    pub fn new(alphabet: Alphabet, backend: Backend, delta: u32) -> Result<Self> {
        Self::with_node_budget(alphabet, backend, delta, DEFAULT_NODE_BUDGET)
    }

    pub fn with_node_budget(
        alphabet: Alphabet,
        backend: Backend,
        delta: u32,
        node_budget: usize,
    ) -> Result<Self> {
        if delta < 1 {
            return Err(Error::Config("delta must be at least 1".into()));
        }
        let mut ctx = GroupContext {
            inner: Arc::new(Inner {
                alphabet,
                backend,
                delta,
                constants: Constants::placeholder(delta),
                node_budget,
                balls: Mutex::new(BTreeMap::new()),
            }),
            profile: Profile::Practical,
            caps: Caps::default(),
        };
        // constants need ball enumeration, which needs the reducer
        let constants = derive_constants(&ctx)?;
        ctx.caps = constants.practical;
        Arc::get_mut(&mut ctx.inner)
            .expect("context not yet shared")
            .constants = constants;
        Ok(ctx)
    }

    pub fn free(rank: usize, delta: u32) -> Result<Self> {
        Self::new(Alphabet::free(rank)?, Backend::FreeGroup { rank }, delta)
    }

    /// Free product of cyclic groups of the given orders; factor `i` is
    /// named `names[i]`.
    pub fn free_product(orders: &[u32], names: &[char], delta: u32) -> Result<Self> {
        let (alphabet, fp) = FreeProduct::new(orders, names)?;
        Self::new(alphabet, Backend::FreeProduct(fp), delta)
    }

    pub fn rewriting_system(alphabet: Alphabet, rules: Vec<Rule>, delta: u32) -> Result<Self> {
        let rws = RewritingSystem::new(&alphabet, rules)?;
        Self::new(alphabet, Backend::RewritingSystem(rws), delta)
    }

    pub fn from_file(path: impl AsRef<std::path::Path>) -> Result<Self> {
        let text = std::fs::read_to_string(path.as_ref())
            .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.as_ref().display())))?;
        parse_group(&text)
    }

    pub fn with_profile(&self, profile: Profile) -> Self {
        let caps = match profile {
            Profile::Practical => self.inner.constants.practical,
            Profile::Paper => self.inner.constants.paper_caps(),
        };
        Self {
            inner: Arc::clone(&self.inner),
            profile,
            caps,
        }
    }

    pub fn with_caps(&self, caps: Caps) -> Self {
        Self {
            inner: Arc::clone(&self.inner),
            profile: self.profile,
            caps,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.inner.alphabet
    }

    pub fn backend(&self) -> &Backend {
        &self.inner.backend
    }

    pub fn backend_name(&self) -> &'static str {
        match self.inner.backend {
            Backend::FreeGroup { .. } => "free",
            Backend::FreeProduct(_) => "free_product",
            Backend::RewritingSystem(_) => "rws",
        }
    }

    pub fn is_free(&self) -> bool {
        matches!(self.inner.backend, Backend::FreeGroup { .. })
    }

    pub fn delta(&self) -> u32 {
        self.inner.delta
    }

    pub fn constants(&self) -> &Constants {
        &self.inner.constants
    }

    pub fn profile(&self) -> Profile {
        self.profile
    }

    pub fn caps(&self) -> &Caps {
        &self.caps
    }

    pub fn node_budget(&self) -> usize {
        self.inner.node_budget
    }

    pub fn parse(&self, text: &str) -> Result<Word> {
        self.inner.alphabet.parse(text)
    }

    pub fn format(&self, w: &Word) -> String {
        self.inner.alphabet.format(w)
    }

    pub fn invert(&self, w: &Word) -> Word {
        self.inner.alphabet.invert(w)
    }

    /// Shortlex normal form π(w).
    pub fn reduce(&self, w: &Word) -> Word {
        self.reduce_letters(w.letters())
    }

    pub fn reduce_letters(&self, w: &[Letter]) -> Word {
        match &self.inner.backend {
            Backend::FreeGroup { .. } => free::reduce(&self.inner.alphabet, w),
            Backend::FreeProduct(fp) => fp.reduce(w),
            Backend::RewritingSystem(rws) => rws.reduce(w),
        }
    }

    /// π of a concatenation.
    pub fn reduce_concat(&self, parts: &[&Word]) -> Word {
        self.reduce(&Word::concat(parts))
    }

    /// `|w|_G`.
    pub fn geodesic_length(&self, w: &Word) -> usize {
        self.reduce(w).len()
    }

    pub fn is_trivial(&self, w: &Word) -> bool {
        self.reduce(w).is_empty()
    }

    pub fn equal(&self, u: &Word, v: &Word) -> bool {
        self.reduce(u) == self.reduce(v)
    }

    /// π(g⁻¹·w·g).
    pub fn conjugate(&self, w: &Word, g: &Word) -> Word {
        self.reduce(&self.inner.alphabet.conjugate(w, g))
    }

    /// π(wⁿ); negative exponents use the inverse.
    pub fn power(&self, w: &Word, n: i64) -> Word {
        self.reduce(&self.inner.alphabet.power(w, n))
    }

    /// Whether `g` conjugates every `a_i` to `b_i`, comparing against
    /// already reduced targets.
    pub fn conjugates_list(&self, a: &[Word], b_reduced: &[Word], g: &Word) -> bool {
        a.len() == b_reduced.len()
            && a.iter()
                .zip(b_reduced)
                .all(|(x, y)| &self.conjugate(x, g) == y)
    }

    /// All normal forms of length at most `radius`, in shortlex order.
    pub fn ball(&self, radius: usize) -> Result<Arc<Vec<Word>>> {
        if let Some(b) = self.inner.balls.lock().unwrap().get(&radius) {
            return Ok(Arc::clone(b));
        }
        let ball = Arc::new(self.enumerate_ball(radius)?);
        self.inner
            .balls
            .lock()
            .unwrap()
            .insert(radius, Arc::clone(&ball));
        Ok(ball)
    }

    fn enumerate_ball(&self, radius: usize) -> Result<Vec<Word>> {
        let mut out = vec![Word::empty()];
        let mut seen: HashSet<Word> = HashSet::new();
        seen.insert(Word::empty());
        let mut frontier = vec![Word::empty()];
        for r in 0..radius {
            let mut next = Vec::new();
            for w in &frontier {
                for x in self.inner.alphabet.letters() {
                    let mut v = w.0.clone();
                    v.push(x);
                    let n = self.reduce_letters(&v);
                    if n.len() == r + 1 && seen.insert(n.clone()) {
                        next.push(n);
                    }
                }
            }
            if seen.len() > self.inner.node_budget {
                return Err(Error::Resource(format!(
                    "ball of radius {radius} exceeds the node budget of {}",
                    self.inner.node_budget
                )));
            }
            next.sort();
            out.extend(next.iter().cloned());
            frontier = next;
        }
        Ok(out)
    }
}

/// Computes [`Constants`] for a context: `V` and the torsion order bound by
/// ball enumeration, the rest by formula.
pub fn derive_constants(ctx: &GroupContext) -> Result<Constants> {
    let delta = ctx.delta() as usize;
    let v = ctx.ball(2 * delta)?.len() as u64;
    let torsion = ctx.ball(4 * delta + 2)?.len() as u64;
    Constants::from_parts(ctx.delta(), ctx.alphabet().gen_count() as u64, v, torsion)
}

pub fn reduce(ctx: &GroupContext, w: &Word) -> Word {
    ctx.reduce(w)
}

pub fn geodesic_length(ctx: &GroupContext, w: &Word) -> usize {
    ctx.geodesic_length(w)
}
