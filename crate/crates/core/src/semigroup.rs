//! Numerical semigroups: construction from generators and the classical
//! invariants (gaps, Frobenius number, conductor, delta, multiplicity,
//! minimal generators, Apéry sets, type, symmetry).

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::BitTable;
use crate::error::{Error, Result};

/// Largest conductor we are willing to materialise a membership window for.
pub const MAX_CONDUCTOR: u64 = 1 << 28;

/// A cofinite additive submonoid of ℕ.
///
/// Membership is stored as a bit table over `[0, c + 2m)`; every integer at
/// or beyond the conductor is a member, so the table only matters below `c`.
/// Instances are immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    minimal_generators: Vec<u64>,
    multiplicity: u64,
    frobenius: i64,
    conductor: u64,
    delta: u64,
    gaps: Vec<u64>,
    membership: BitTable,
    // Ap(Γ, m) indexed by residue mod m.
    apery_by_residue: Vec<u64>,
}

/// `Ap(Γ, s)`: the least element of Γ in each residue class mod `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AperySet {
    pub modulus: u64,
    /// Sorted ascending; `elements[0] == 0`.
    pub elements: Vec<u64>,
    by_residue: Vec<u64>,
}

impl AperySet {
    /// The same elements indexed by residue: `by_residue()[i] ≡ i (mod s)`.
    pub fn by_residue(&self) -> &[u64] {
        &self.by_residue
    }

    pub fn max(&self) -> u64 {
        *self.elements.last().expect("Apéry sets are nonempty")
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn gcd_all(values: &[u64]) -> u64 {
    values.iter().fold(0, |g, &v| gcd(g, v))
}

/// Shortest-path computation of `Ap(⟨gens⟩, a)` where `a = min(gens)`.
fn apery_by_dijkstra(gens: &[u64]) -> Result<Vec<u64>> {
    let a = gens[0];
    let n = a as usize;
    let mut dist = vec![u64::MAX; n];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0u64, 0usize)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &g in &gens[1..] {
            let nd = d.checked_add(g).ok_or(Error::Overflow("Apéry set"))?;
            let nr = (r + (g % a) as usize) % n;
            if nd < dist[nr] {
                dist[nr] = nd;
                heap.push(Reverse((nd, nr)));
            }
        }
    }
    Ok(dist)
}

impl NumericalSemigroup {
    /// The semigroup ℕ itself.
    pub fn naturals() -> Self {
        NumericalSemigroup {
            minimal_generators: vec![1],
            multiplicity: 1,
            frobenius: -1,
            conductor: 0,
            delta: 0,
            gaps: Vec::new(),
            membership: {
                let mut t = BitTable::new(2);
                t.set(0, true);
                t.set(1, true);
                t
            },
            apery_by_residue: vec![0],
        }
    }

    /// Smallest submonoid of ℕ containing `gens`.
    ///
    /// Input need not be minimal or sorted; duplicates are ignored.
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyInput);
        }
        if gens.contains(&0) {
            return Err(Error::NonPositiveGenerator(0));
        }
        let g = gcd_all(gens);
        if g != 1 {
            return Err(Error::NotCofinite(g));
        }
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted[0] == 1 {
            return Ok(Self::naturals());
        }
        let a = sorted[0];
        let apery = apery_by_dijkstra(&sorted)?;
        let max_w = *apery.iter().max().expect("a >= 2");
        let conductor = max_w + 1 - a;
        if conductor > MAX_CONDUCTOR {
            return Err(Error::TooLarge(conductor));
        }
        Ok(Self::finalize(conductor, |n| n >= apery[(n % a) as usize]))
    }

    /// `⟨gens⟩_r`: the smallest submonoid containing `gens` and every integer `>= r`.
    pub fn from_generators_with_threshold(gens: &[u64], r: u64) -> Result<Self> {
        if gens.contains(&0) {
            return Err(Error::NonPositiveGenerator(0));
        }
        if r > MAX_CONDUCTOR {
            return Err(Error::TooLarge(r));
        }
        let r = r as usize;
        let mut small: Vec<usize> = gens.iter().filter(|&&g| (g as usize) < r).map(|&g| g as usize).collect();
        small.sort_unstable();
        small.dedup();
        let mut member = vec![false; r.max(1)];
        member[0] = true;
        for n in 1..r {
            member[n] = small.iter().take_while(|&&g| g <= n).any(|&g| member[n - g]);
        }
        let conductor = (0..r).rev().find(|&n| !member[n]).map_or(0, |f| f + 1);
        Ok(Self::finalize(conductor as u64, |n| {
            n as usize >= conductor || member[n as usize]
        }))
    }

    /// Builds all cached invariants from a membership predicate that is
    /// correct on `[0, conductor)` and true beyond it.
    pub(crate) fn finalize(conductor: u64, is_member: impl Fn(u64) -> bool) -> Self {
        if conductor == 0 {
            return Self::naturals();
        }
        let m = (1..=conductor).find(|&n| is_member(n)).expect("conductor is a member");
        let len = (conductor + 2 * m) as usize;
        let mut membership = BitTable::new(len);
        let mut gaps = Vec::new();
        for n in 0..len {
            let inside = n as u64 >= conductor || is_member(n as u64);
            membership.set(n, inside);
            if !inside {
                gaps.push(n as u64);
            }
        }
        let apery_by_residue: Vec<u64> = (0..m)
            .map(|r| {
                (r..)
                    .step_by(m as usize)
                    .find(|&n| membership.get(n as usize))
                    .expect("every residue class meets Γ below c + m")
            })
            .collect();
        let mut minimal_generators = vec![m];
        let mut sorted: Vec<u64> = apery_by_residue[1..].to_vec();
        sorted.sort_unstable();
        for (i, &w) in sorted.iter().enumerate() {
            let reducible = sorted[..i]
                .iter()
                .any(|&v| membership.get((w - v) as usize));
            if !reducible {
                minimal_generators.push(w);
            }
        }
        let delta = conductor - gaps.len() as u64;
        NumericalSemigroup {
            minimal_generators,
            multiplicity: m,
            frobenius: conductor as i64 - 1,
            conductor,
            delta,
            gaps,
            membership,
            apery_by_residue,
        }
    }

    pub fn is_naturals(&self) -> bool {
        self.conductor == 0
    }

    /// True iff `n ∈ Γ`; false for negative `n`.
    #[inline]
    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            false
        } else if n as u64 >= self.conductor {
            true
        } else {
            self.membership.get(n as usize)
        }
    }

    #[inline]
    pub(crate) fn contains_u(&self, n: u64) -> bool {
        n >= self.conductor || self.membership.get(n as usize)
    }

    pub fn minimal_generators(&self) -> &[u64] {
        &self.minimal_generators
    }

    pub fn multiplicity(&self) -> u64 {
        self.multiplicity
    }

    pub fn embedding_dimension(&self) -> usize {
        self.minimal_generators.len()
    }

    /// `F(Γ)`, which is `-1` for ℕ.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn genus(&self) -> u64 {
        self.gaps.len() as u64
    }

    /// `δ(Γ) = |{x ∈ Γ : x < c}|`.
    pub fn delta(&self) -> u64 {
        self.delta
    }

    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    pub fn is_gap(&self, n: i64) -> bool {
        n > 0 && !self.contains(n)
    }

    pub fn membership(&self) -> &BitTable {
        &self.membership
    }

    /// Elements of Γ below the conductor, ascending.
    pub fn small_elements(&self) -> Vec<u64> {
        (0..self.conductor).filter(|&n| self.contains_u(n)).collect()
    }

    /// `Ap(Γ, m)` indexed by residue mod the multiplicity.
    pub fn apery_by_residue(&self) -> &[u64] {
        &self.apery_by_residue
    }

    pub fn apery_set(&self, s: u64) -> Result<AperySet> {
        if s == 0 || !self.contains_u(s) {
            return Err(Error::NotAMember(s as i64));
        }
        let by_residue: Vec<u64> = if s == self.multiplicity {
            self.apery_by_residue.clone()
        } else {
            (0..s)
                .map(|r| (r..).step_by(s as usize).find(|&n| self.contains_u(n)).unwrap())
                .collect()
        };
        let mut elements = by_residue.clone();
        elements.sort_unstable();
        Ok(AperySet { modulus: s, elements, by_residue })
    }

    /// `s ⪯ t` in Γ, i.e. `t - s ∈ Γ`.
    pub fn divides(&self, s: i64, t: i64) -> Result<bool> {
        for x in [s, t] {
            if !self.contains(x) {
                return Err(Error::NotAMember(x));
            }
        }
        Ok(self.contains(t - s))
    }

    fn apery_extremes(&self, maximal: bool) -> Vec<u64> {
        let nonzero: Vec<u64> = {
            let mut v = self.apery_by_residue[1..].to_vec();
            v.sort_unstable();
            v
        };
        nonzero
            .iter()
            .copied()
            .filter(|&w| {
                !nonzero.iter().any(|&v| {
                    v != w && if maximal { v > w && self.contains_u(v - w) } else { v < w && self.contains_u(w - v) }
                })
            })
            .collect()
    }

    /// `max Ap(Γ, m)`: nonzero Apéry elements maximal under `⪯`.
    pub fn maximal_apery(&self) -> Result<Vec<u64>> {
        if self.is_naturals() {
            return Err(Error::NaturalsHasNoType);
        }
        Ok(self.apery_extremes(true))
    }

    /// `min Ap(Γ, m)`: nonzero Apéry elements minimal under `⪯`.
    pub fn minimal_apery(&self) -> Result<Vec<u64>> {
        if self.is_naturals() {
            return Err(Error::NaturalsHasNoType);
        }
        Ok(self.apery_extremes(false))
    }

    /// `t(Γ) = |max Ap(Γ, m)|`.
    pub fn type_of(&self) -> Result<usize> {
        self.maximal_apery().map(|v| v.len())
    }

    /// Symmetry, evaluated both as `z ∈ Γ ⇔ F - z ∉ Γ` and as `c = 2δ`.
    pub fn is_symmetric(&self) -> bool {
        let f = self.frobenius;
        let pointwise = (0..=f).all(|z| self.contains(z) != self.contains(f - z));
        let counting = self.conductor == 2 * self.delta;
        assert_eq!(
            pointwise, counting,
            "symmetry characterisations disagree for {self:?}"
        );
        counting
    }

    pub fn record(&self) -> SemigroupRecord {
        SemigroupRecord {
            generators: self.minimal_generators.clone(),
            multiplicity: self.multiplicity,
            frobenius: self.frobenius,
            conductor: self.conductor,
            genus: self.genus(),
            delta: self.delta,
            embedding_dimension: self.embedding_dimension(),
            type_: self.type_of().ok(),
            symmetric: self.is_symmetric(),
        }
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for (i, g) in self.minimal_generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "⟩")
    }
}

/// Canonical serialisation of a semigroup's invariants.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupRecord {
    pub generators: Vec<u64>,
    pub multiplicity: u64,
    pub frobenius: i64,
    pub conductor: u64,
    pub genus: u64,
    pub delta: u64,
    pub embedding_dimension: usize,
    #[serde(rename = "type", skip_serializing_if = "Option::is_none", default)]
    pub type_: Option<usize>,
    pub symmetric: bool,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ns(g: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(g).unwrap()
    }

    // Independent membership oracle: dynamic programming over the generators.
    fn dp_members(gens: &[u64], len: usize) -> Vec<bool> {
        let mut m = vec![false; len];
        m[0] = true;
        for n in 1..len {
            m[n] = gens.iter().any(|&g| g as usize <= n && m[n - g as usize]);
        }
        m
    }

    #[test]
    fn naturals_from_one() {
        let s = ns(&[1]);
        assert!(s.is_naturals());
        assert!(s.gaps().is_empty());
        assert_eq!((s.frobenius(), s.conductor(), s.delta()), (-1, 0, 0));
        assert_eq!((s.multiplicity(), s.embedding_dimension()), (1, 1));
        assert_eq!(s.type_of(), Err(Error::NaturalsHasNoType));
        assert!(s.is_symmetric());
    }

    #[test]
    fn two_three() {
        let s = ns(&[2, 3]);
        assert_eq!(s.gaps(), &[1]);
        assert_eq!((s.frobenius(), s.conductor(), s.delta()), (1, 2, 1));
        assert_eq!(s.embedding_dimension(), 2);
        assert_eq!(s.type_of(), Ok(1));
        assert!(s.is_symmetric());
    }

    #[test]
    fn six_eight_thirty_five_gaps() {
        let s = ns(&[6, 8, 35]);
        assert_eq!(s.frobenius(), 45);
        assert_eq!(
            s.gaps(),
            &[1, 2, 3, 4, 5, 7, 9, 10, 11, 13, 15, 17, 19, 21, 23, 25, 27, 29, 31, 33, 37, 39, 45]
        );
        assert!(s.contains(35));
        assert!(!s.contains(45));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(NumericalSemigroup::from_generators(&[4, 6]), Err(Error::NotCofinite(2)));
        assert_eq!(NumericalSemigroup::from_generators(&[]), Err(Error::EmptyInput));
        assert_eq!(NumericalSemigroup::from_generators(&[0, 3]), Err(Error::NonPositiveGenerator(0)));
    }

    #[test]
    fn non_minimal_input_is_reduced() {
        let s = ns(&[9, 3, 5, 3, 10, 8]);
        assert_eq!(s.minimal_generators(), &[3, 5]);
    }

    #[test]
    fn threshold_construction() {
        let s = NumericalSemigroup::from_generators_with_threshold(&[162, 1114, 1115], 9879).unwrap();
        assert_eq!((s.conductor(), s.delta(), s.embedding_dimension()), (9879, 1109, 110));
        let s = NumericalSemigroup::from_generators_with_threshold(&[88, 100, 102], 566).unwrap();
        assert_eq!((s.conductor(), s.delta(), s.embedding_dimension()), (566, 63, 63));
        assert!(NumericalSemigroup::from_generators_with_threshold(&[], 1).unwrap().is_naturals());
        let s = NumericalSemigroup::from_generators_with_threshold(&[], 4).unwrap();
        assert_eq!(s.minimal_generators(), &[4, 5, 6, 7]);
    }

    #[test]
    fn contains_negative() {
        assert!(!ns(&[2, 3]).contains(-1));
    }

    #[test]
    fn apery_examples() {
        let s = ns(&[3, 5]);
        let ap = s.apery_set(3).unwrap();
        assert_eq!(ap.elements, vec![0, 5, 10]);
        assert_eq!(ap.by_residue(), &[0, 10, 5]);
        assert_eq!(ns(&[1]).apery_set(1).unwrap().elements, vec![0]);
        let ap = ns(&[6, 8, 35]).apery_set(6).unwrap();
        assert_eq!(ap.elements.len(), 6);
        assert_eq!(ap.max(), 51);
        assert_eq!(s.apery_set(4), Err(Error::NotAMember(4)));
        assert_eq!(s.apery_set(0), Err(Error::NotAMember(0)));
        // brute-force membership scan over [0, c + s)
        let ap = s.apery_set(5).unwrap();
        let brute: Vec<u64> =
            (0..s.conductor() + 5).filter(|&w| s.contains(w as i64) && !s.contains(w as i64 - 5)).collect();
        assert_eq!(ap.elements, brute);
    }

    #[test]
    fn divides_examples() {
        let s = ns(&[3, 5]);
        assert_eq!(s.divides(3, 8), Ok(true));
        assert_eq!(s.divides(5, 6), Ok(false));
        assert_eq!(s.divides(0, 9), Ok(true));
        assert_eq!(s.divides(4, 9), Err(Error::NotAMember(4)));
    }

    #[test]
    fn type_remark_example() {
        let s = ns(&[213, 216, 226, 227]);
        assert_eq!(s.embedding_dimension(), 4);
        assert_eq!(s.type_of(), Ok(14));
    }

    #[test]
    fn symmetric_examples() {
        assert!(ns(&[3, 5]).is_symmetric());
        assert!(!ns(&[3, 4, 5]).is_symmetric());
        assert!(ns(&[2, 3]).is_symmetric());
    }

    #[test]
    fn membership_matches_dp() {
        for gens in [&[3u64, 5][..], &[6, 8, 35], &[5, 7, 9, 11], &[213, 216, 226, 227]] {
            let s = ns(gens);
            let len = (s.conductor() + 2 * s.multiplicity()) as usize;
            let dp = dp_members(gens, len);
            for (n, &want) in dp.iter().enumerate() {
                assert_eq!(s.contains(n as i64), want, "{gens:?} at {n}");
            }
        }
    }

    #[test]
    fn record_json() {
        let rec = ns(&[6, 8, 35]).record();
        let json = serde_json::to_string(&rec).unwrap();
        assert!(json.contains("\"type\":"));
        let back: SemigroupRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(back, rec);
        let nat = serde_json::to_string(&ns(&[1]).record()).unwrap();
        assert!(!nat.contains("type"));
    }
}
