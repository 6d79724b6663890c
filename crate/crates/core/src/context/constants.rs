use serde::Serialize;

use crate::error::{Error, Result};

/// Which set of caps the algorithms consult.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    /// Desk-scale caps; verdicts short of the theoretical bounds are
    /// reported as unverified.
    #[default]
    Practical,
    /// Theoretical bounds; operations whose bound exceeds
    /// [`PAPER_RADIUS_BUDGET`] are refused.
    Paper,
}

/// Largest search radius the paper profile will attempt.
pub const PAPER_RADIUS_BUDGET: u128 = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Caps {
    /// Powers checked by the bounded shortlex-straightness test.
    pub straight_check_power: usize,
    /// Radius of the exhaustive conjugator search for short torsion lists.
    pub conjugator_radius: u128,
    /// Radius of the exhaustive centraliser search.
    pub centraliser_radius: u128,
    /// Largest exponent tried by the long-power doubling schedule.
    pub power_cap: u128,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            straight_check_power: 4,
            conjugator_radius: 8,
            centraliser_radius: 6,
            power_cap: 64 * 36,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Constants {
    pub delta: u32,
    /// `34δ + 2`
    pub l: u64,
    /// Size of the closed 2δ-ball.
    pub v: u64,
    /// `20δ²V³L²`
    pub m: u128,
    /// Number of generators before inverse closure.
    pub k: u64,
    /// `(2k + 5)^(4δ + 2)`
    pub exp_search_bound: u128,
    /// Size of the closed (4δ + 2)-ball, which bounds the order of any
    /// torsion element.
    pub torsion_order_bound: u64,
    pub practical: Caps,
}

impl Constants {
    pub(crate) fn placeholder(delta: u32) -> Self {
        Self {
            delta,
            l: 34 * delta as u64 + 2,
            v: 1,
            m: 0,
            k: 0,
            exp_search_bound: 0,
            torsion_order_bound: 1,
            practical: Caps::default(),
        }
    }

    pub(crate) fn from_parts(delta: u32, k: u64, v: u64, torsion_order_bound: u64) -> Result<Self> {
        let l = 34 * delta as u64 + 2;
        let d = delta as u128;
        let m = 20 * d * d * (v as u128).pow(3) * (l as u128).pow(2);
        let exp_search_bound = (2 * k as u128 + 5)
            .checked_pow(4 * delta + 2)
            .ok_or_else(|| Error::Overflow("(2k+5)^(4δ+2) exceeds 128 bits".into()))?;
        let practical = Caps {
            power_cap: 64 * l as u128,
            ..Caps::default()
        };
        Ok(Self {
            delta,
            l,
            v,
            m,
            k,
            exp_search_bound,
            torsion_order_bound,
            practical,
        })
    }

    /// `n = min(V⁴ + 1, m)`.
    pub fn distinct_prefix_count(&self, m: usize) -> usize {
        let bound = (self.v as u128).pow(4) + 1;
        if (m as u128) < bound {
            m
        } else {
            bound as usize
        }
    }

    /// `V⁴`, saturating.
    pub fn v4(&self) -> u128 {
        (self.v as u128).saturating_pow(4)
    }

    /// Caps at the theoretical values. The exhaustive-search radii depend
    /// on the input and are computed at the call site; here they saturate.
    pub(crate) fn paper_caps(&self) -> Caps {
        Caps {
            straight_check_power: self.practical.straight_check_power,
            conjugator_radius: u128::MAX,
            centraliser_radius: u128::MAX,
            power_cap: self.m,
        }
    }

    /// Radius bound `R(μ + 2δ)` for the centraliser of a long torsion list.
    pub fn centraliser_search_bound(&self, mu: usize) -> u128 {
        self.exp_search_bound
            .saturating_mul(mu as u128 + 2 * self.delta as u128)
    }

    /// Radius bound `R(μ + 2δ) + V^(4V⁴)` for a conjugator between torsion
    /// lists, saturating at `u128::MAX`.
    pub fn conjugator_search_bound(&self, mu: usize) -> u128 {
        let tail = u32::try_from(4 * self.v4())
            .ok()
            .and_then(|e| (self.v as u128).checked_pow(e))
            .unwrap_or(u128::MAX);
        self.centraliser_search_bound(mu).saturating_add(tail)
    }
}
