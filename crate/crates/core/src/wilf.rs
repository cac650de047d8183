//! The Wilf function `W_Γ(k) = kδ(Γ) - c(Γ)` and the interval bookkeeping
//! behind it.
//!
//! The interval `[0, c + m]` is cut into blocks `I_α = [αm, (α+1)m - 1]`.
//! With `c = Lm + ρ` (`2 <= ρ <= m`), the counts `n_α` of semigroup elements
//! below `F` in each block add up to `δ(Γ)`, and the block occupancy
//! histogram `η_j` can be read off the sorted Apéry set of the multiplicity.

use serde::{Deserialize, Serialize};

use crate::error::{inconsistent, Error, Result};
use crate::semigroup::NumericalSemigroup;

/// Block statistics of a semigroup `Γ ≠ ℕ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalStats {
    /// `L = ⌊(c - 1)/m⌋`.
    pub l: u64,
    /// `ρ = c - Lm`, always in `[2, m]`.
    pub rho: u64,
    /// `n_0, …, n_L`.
    pub n: Vec<u64>,
    /// `η_1, …, η_{m-1}` (index `j - 1`).
    pub eta: Vec<u64>,
    /// `ε_1, …, ε_{m-1}`: like `η` but only over blocks `0..L`.
    pub eps: Vec<u64>,
}

impl IntervalStats {
    pub fn eta_j(&self, j: usize) -> u64 {
        self.eta[j - 1]
    }

    pub fn eps_j(&self, j: usize) -> u64 {
        self.eps[j - 1]
    }
}

fn sorted_apery(ns: &NumericalSemigroup) -> Vec<u64> {
    let mut w = ns.apery_by_residue().to_vec();
    w.sort_unstable();
    w
}

/// `η` from the sorted Apéry set: `η_j = ⌊w_j/m⌋ - ⌊w_{j-1}/m⌋`.
pub fn eta_from_apery(ns: &NumericalSemigroup) -> Vec<u64> {
    let m = ns.multiplicity();
    let w = sorted_apery(ns);
    w.windows(2).map(|p| p[1] / m - p[0] / m).collect()
}

pub fn interval_stats(ns: &NumericalSemigroup) -> Result<IntervalStats> {
    if ns.is_naturals() {
        return Err(Error::NaturalsUnsupported);
    }
    let c = ns.conductor();
    let m = ns.multiplicity();
    let f = ns.frobenius() as u64;
    let l = (c - 1) / m;
    let rho = c - l * m;

    let block = |alpha: u64| alpha * m..(alpha + 1) * m;
    let occupancy: Vec<u64> = (0..=l)
        .map(|a| block(a).filter(|&s| ns.contains(s as i64)).count() as u64)
        .collect();
    let n: Vec<u64> = (0..=l)
        .map(|a| block(a).filter(|&s| s < f && ns.contains(s as i64)).count() as u64)
        .collect();

    // Blocks past L lie entirely above the conductor and hold m elements.
    let histogram = |upto: u64| -> Vec<u64> {
        (1..m)
            .map(|j| occupancy[..upto as usize].iter().filter(|&&o| o == j).count() as u64)
            .collect()
    };
    let eta = histogram(l + 1);
    let eps = histogram(l);

    let stats = IntervalStats { l, rho, n, eta, eps };
    stats.verify(ns, &occupancy)?;
    Ok(stats)
}

impl IntervalStats {
    fn verify(&self, ns: &NumericalSemigroup, occupancy: &[u64]) -> Result<()> {
        let m = ns.multiplicity();
        let l = self.l as usize;
        if !(2..=m).contains(&self.rho) {
            return Err(inconsistent(format!("{ns}: ρ = {} outside [2, m]", self.rho)));
        }
        let total: u64 = self.n.iter().sum();
        if total != ns.delta() {
            return Err(inconsistent(format!("{ns}: Σ n_α = {total} but δ = {}", ns.delta())));
        }
        if self.n.iter().any(|&x| x == 0 || x >= m) {
            return Err(inconsistent(format!("{ns}: some n_α outside [1, m-1]: {:?}", self.n)));
        }
        if self.n[..l].windows(2).any(|p| p[0] > p[1]) {
            return Err(inconsistent(format!("{ns}: n_α not monotone below L: {:?}", self.n)));
        }
        if self.n[..l] != occupancy[..l] {
            return Err(inconsistent(format!("{ns}: n_α ≠ |Γ ∩ I_α| below L")));
        }
        let from_apery = eta_from_apery(ns);
        if from_apery != self.eta {
            return Err(inconsistent(format!(
                "{ns}: η by counting {:?} ≠ η from Apéry set {from_apery:?}",
                self.eta
            )));
        }
        let weighted: u64 = self.eta.iter().enumerate().map(|(i, &e)| (i as u64 + 1) * e).sum();
        if weighted + self.rho != ns.delta() + m {
            return Err(inconsistent(format!("{ns}: δ ≠ Σ j·η_j + ρ - m")));
        }
        Ok(())
    }
}

/// `W_Γ(k) = kδ(Γ) - c(Γ)`.
pub fn wilf_value(ns: &NumericalSemigroup, k: u64) -> Result<i64> {
    wilf_linear(k as i64, ns.delta(), ns.conductor())
}

/// `kδ - c` with overflow detection; shared with semimodules.
pub(crate) fn wilf_linear(k: i64, delta: u64, conductor: u64) -> Result<i64> {
    let delta = i64::try_from(delta).map_err(|_| Error::Overflow("Wilf function"))?;
    let conductor = i64::try_from(conductor).map_err(|_| Error::Overflow("Wilf function"))?;
    k.checked_mul(delta)
        .and_then(|x| x.checked_sub(conductor))
        .ok_or(Error::Overflow("Wilf function"))
}

/// Least `k` with `W_Γ(k) >= 0`, i.e. `⌈c/δ⌉`. By convention `mu(ℕ) = 1`.
pub fn mu(ns: &NumericalSemigroup) -> u64 {
    if ns.is_naturals() {
        1
    } else {
        ns.conductor().div_ceil(ns.delta())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MuReport {
    pub mu: u64,
    pub wilf_at_mu: i64,
    pub embedding_dimension: usize,
    pub wilf_at_e: i64,
    pub gap_e_minus_mu: i64,
}

pub fn mu_report(ns: &NumericalSemigroup) -> Result<MuReport> {
    let mu = mu(ns);
    let e = ns.embedding_dimension();
    Ok(MuReport {
        mu,
        wilf_at_mu: wilf_value(ns, mu)?,
        embedding_dimension: e,
        wilf_at_e: wilf_value(ns, e as u64)?,
        gap_e_minus_mu: e as i64 - mu as i64,
    })
}

/// `Σ_{j=0}^{L} (k n_j - m) + m - ρ`, the block form of `kδ - c`.
pub fn wilf_type_interval_form(stats: &IntervalStats, m: u64, k: i64) -> i128 {
    let m = m as i128;
    let k = k as i128;
    stats.n.iter().map(|&nj| k * nj as i128 - m).sum::<i128>() + m - stats.rho as i128
}

/// Whether `c <= kδ`, evaluated directly and through the block form; the two
/// must agree. For `k = m` the rewritten form `m Σ(n_j - 1) + m - ρ` is
/// checked as well.
pub fn check_wilf_type(ns: &NumericalSemigroup, k: i64) -> Result<bool> {
    let stats = interval_stats(ns)?;
    check_wilf_type_with(ns, &stats, k)
}

pub fn check_wilf_type_with(ns: &NumericalSemigroup, stats: &IntervalStats, k: i64) -> Result<bool> {
    let m = ns.multiplicity();
    let direct_value = k as i128 * ns.delta() as i128 - ns.conductor() as i128;
    let direct = ns.conductor() as i128 <= k as i128 * ns.delta() as i128;
    let interval = wilf_type_interval_form(stats, m, k);
    if (interval >= 0) != direct || interval != direct_value {
        return Err(inconsistent(format!(
            "{ns}, k = {k}: direct kδ - c = {direct_value} but block form gives {interval}"
        )));
    }
    if k == m as i64 {
        let mi = m as i128;
        let rewritten = mi * stats.n.iter().map(|&x| x as i128 - 1).sum::<i128>() + mi - stats.rho as i128;
        if (rewritten >= 0) != direct {
            return Err(inconsistent(format!("{ns}: rewritten form at k = m disagrees")));
        }
    }
    Ok(direct)
}

/// Where the Wilf function sits among the extreme cases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Extreme {
    Naturals,
    /// `⟨m, qm+1, …, qm+m-1⟩` with `m >= 3`; `W_Γ(k) <= 0` on `1..=m`.
    MaxFamily { m: u64, q: u64 },
    /// `⟨a, b⟩`; symmetric, so `W_Γ(2) = 0`.
    TwoGenSymmetric { a: u64, b: u64 },
    Other,
}

/// `Some((m, q))` iff Γ is exactly `⟨m, qm+1, …, qm+(m-1)⟩` with `m >= 2`, `q >= 1`.
///
/// For `m = 2` this includes every `⟨2, 2q+1⟩`.
pub fn max_family_params(ns: &NumericalSemigroup) -> Option<(u64, u64)> {
    if ns.is_naturals() {
        return None;
    }
    let gens = ns.minimal_generators();
    let m = ns.multiplicity();
    if gens.len() as u64 != m {
        return None;
    }
    let q = (gens[1] - 1) / m;
    if q == 0 || gens[1] != q * m + 1 {
        return None;
    }
    gens[1..]
        .iter()
        .enumerate()
        .all(|(i, &g)| g == q * m + i as u64 + 1)
        .then_some((m, q))
}

/// Classifies Γ. Two-generated semigroups are reported as
/// [`Extreme::TwoGenSymmetric`] even when they also belong to the `m = 2`
/// branch of the maximal family.
pub fn classify_extreme(ns: &NumericalSemigroup) -> Result<Extreme> {
    if ns.is_naturals() {
        return Ok(Extreme::Naturals);
    }
    let gens = ns.minimal_generators();
    if gens.len() == 2 {
        return Ok(Extreme::TwoGenSymmetric { a: gens[0], b: gens[1] });
    }
    match max_family_params(ns) {
        Some((m, q)) => {
            let w_m = wilf_value(ns, m)?;
            let t = ns.type_of()?;
            if w_m != 0 || t as u64 != m - 1 {
                return Err(inconsistent(format!(
                    "{ns} has the maximal-family shape but W(m) = {w_m}, t = {t}"
                )));
            }
            Ok(Extreme::MaxFamily { m, q })
        }
        None => Ok(Extreme::Other),
    }
}

/// `B = (m-1)⌊w_{m-1}/m⌋ - Σ_j ⌊w_j/m⌋` over the sorted Apéry set of `m`.
/// Non-negative, and zero exactly on the maximal family.
pub fn remark_b(ns: &NumericalSemigroup) -> Result<u64> {
    if ns.is_naturals() {
        return Err(Error::NaturalsUnsupported);
    }
    let m = ns.multiplicity();
    let w = sorted_apery(ns);
    let top = (m - 1) as i64 * (w[w.len() - 1] / m) as i64;
    let sum: i64 = w.iter().map(|&x| (x / m) as i64).sum();
    let b = top - sum;
    if b < 0 {
        return Err(inconsistent(format!("{ns}: B = {b} < 0")));
    }
    if (b == 0) != max_family_params(ns).is_some() {
        return Err(inconsistent(format!("{ns}: B = {b} disagrees with the maximal-family test")));
    }
    Ok(b as u64)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrogoReport {
    /// `c = e·δ`.
    pub equality: bool,
    pub two_generated: bool,
    pub max_family: Option<(u64, u64)>,
    /// `equality ⇔ (two_generated ∨ max_family)`. False means a counterexample.
    pub conjecture_consistent: bool,
}

pub fn frogo_equality_check(ns: &NumericalSemigroup) -> Result<FrogoReport> {
    if ns.is_naturals() {
        return Err(Error::NaturalsUnsupported);
    }
    let equality = wilf_value(ns, ns.embedding_dimension() as u64)? == 0;
    let two_generated = ns.embedding_dimension() == 2;
    let max_family = max_family_params(ns);
    Ok(FrogoReport {
        equality,
        two_generated,
        max_family,
        conjecture_consistent: equality == (two_generated || max_family.is_some()),
    })
}

// Theorem checks. Each returns `InternalInconsistency` when the statement
// fails, since a failure can only come from a bug here.

/// `W_Γ(2) <= 0`, with equality iff Γ is symmetric.
pub fn check_prop_3_1(ns: &NumericalSemigroup) -> Result<()> {
    let w2 = wilf_value(ns, 2)?;
    if w2 > 0 || (w2 == 0) != ns.is_symmetric() {
        return Err(inconsistent(format!("{ns}: W(2) = {w2}, symmetric = {}", ns.is_symmetric())));
    }
    Ok(())
}

/// `W_Γ(m) >= 0` with equality iff Γ is in the maximal family; also the
/// extreme-behaviour reading (`W_Γ(k) <= 0` on `1..=m` iff maximal family),
/// the type corollary, and the bound `k <= m` for any zero of `W_Γ`.
pub fn check_thm_3_2(ns: &NumericalSemigroup) -> Result<()> {
    if ns.is_naturals() {
        return Ok(());
    }
    let m = ns.multiplicity();
    let w_m = wilf_value(ns, m)?;
    let family = max_family_params(ns);
    if w_m < 0 || (w_m == 0) != family.is_some() {
        return Err(inconsistent(format!("{ns}: W(m) = {w_m}, family = {family:?}")));
    }
    let all_nonpositive = (1..=m).map(|k| wilf_value(ns, k)).collect::<Result<Vec<_>>>()?.iter().all(|&w| w <= 0);
    if all_nonpositive != family.is_some() {
        return Err(inconsistent(format!("{ns}: extreme behaviour disagrees with family test")));
    }
    if w_m == 0 && ns.type_of()? as u64 != m - 1 {
        return Err(inconsistent(format!("{ns}: W(m) = 0 but t ≠ m - 1")));
    }
    check_prop_3_9(ns)
}

/// If `W_Γ(k) = 0` for some `k >= 1` then `kδ <= (L+1)m` and `k <= m`.
pub fn check_prop_3_9(ns: &NumericalSemigroup) -> Result<()> {
    if ns.is_naturals() || !ns.conductor().is_multiple_of(ns.delta()) {
        return Ok(());
    }
    let k = ns.conductor() / ns.delta();
    let m = ns.multiplicity();
    let l = (ns.conductor() - 1) / m;
    if k * ns.delta() > (l + 1) * m || k > m {
        return Err(inconsistent(format!("{ns}: W({k}) = 0 with k > m")));
    }
    Ok(())
}

/// `c <= δ(t + 1)`, i.e. `μ_Γ <= t(Γ) + 1`, plus `2 <= μ_Γ <= m`.
pub fn check_prop_3_7(ns: &NumericalSemigroup) -> Result<()> {
    if ns.is_naturals() {
        return Ok(());
    }
    let t = ns.type_of()? as u64;
    let mu = mu(ns);
    if mu > t + 1 || mu < 2 || mu > ns.multiplicity() {
        return Err(inconsistent(format!("{ns}: μ = {mu}, t = {t}, m = {}", ns.multiplicity())));
    }
    Ok(())
}
