//! Γ-semimodules `Δ ⊆ ℤ` with `Δ + Γ ⊆ Δ`, always stored shifted so that
//! `min Δ = 0`, and the Wilf number of a gap.
//!
//! `gen_count` counts every minimal generator including 0, so the semimodule
//! Wilf number is `gen_count·δ(Δ) - c(Δ)` and the Wilf number of a gap `g` is
//! `W(g) = 2δ(Δ_[0,g]) - c(Δ_[0,g])`. This is *not* the semigroup Wilf
//! number: Γ viewed as a semimodule has `gen_count = 1`.

use serde::{Deserialize, Serialize};

use crate::bits::BitTable;
use crate::error::{inconsistent, Error, Result};
use crate::semigroup::NumericalSemigroup;
use crate::wilf::{wilf_linear, wilf_value};

#[derive(Clone, PartialEq, Eq)]
pub struct GammaSemimodule<'a> {
    base: &'a NumericalSemigroup,
    minimal_generators: Vec<u64>,
    // [0, c(Δ) + m)
    membership: BitTable,
    conductor: u64,
    delta: u64,
    shift: i64,
}

impl std::fmt::Debug for GammaSemimodule<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GammaSemimodule")
            .field("base", &self.base)
            .field("minimal_generators", &self.minimal_generators)
            .field("conductor", &self.conductor)
            .field("delta", &self.delta)
            .field("shift", &self.shift)
            .finish()
    }
}

/// Semimodule generated by `gens` over `ns`, normalised so that 0 is its least element.
pub fn semimodule_from_generators<'a>(ns: &'a NumericalSemigroup, gens: &[i64]) -> Result<GammaSemimodule<'a>> {
    let shift = *gens.iter().min().ok_or(Error::EmptyInput)?;
    let mut normalized: Vec<u64> = gens
        .iter()
        .map(|&g| g.checked_sub(shift).map(|d| d as u64).ok_or(Error::Overflow("semimodule shift")))
        .collect::<Result<_>>()?;
    normalized.sort_unstable();
    normalized.dedup();

    // x is redundant iff x ∈ y + Γ for another generator y.
    let minimal_generators: Vec<u64> = normalized
        .iter()
        .copied()
        .filter(|&x| !normalized.iter().any(|&y| y < x && ns.contains_u(x - y)))
        .collect();

    let top = *minimal_generators.last().unwrap();
    let bound = top
        .checked_add(ns.conductor() + ns.multiplicity())
        .ok_or(Error::Overflow("semimodule window"))?;
    let member = |n: u64| minimal_generators.iter().take_while(|&&x| x <= n).any(|&x| ns.contains_u(n - x));
    let conductor = (0..bound).rev().find(|&n| !member(n)).map_or(0, |f| f + 1);
    let len = (conductor + ns.multiplicity()) as usize;
    let mut membership = BitTable::new(len);
    for n in 0..len {
        membership.set(n, member(n as u64));
    }
    let delta = membership.count_ones_below(conductor as usize) as u64;
    let d = GammaSemimodule { base: ns, minimal_generators, membership, conductor, delta, shift };
    Ok(d)
}

/// `Δ_[0,g] = Γ ∪ (g + Γ)` for a gap `g`.
pub fn gap_semimodule(ns: &NumericalSemigroup, g: i64) -> Result<GammaSemimodule<'_>> {
    if !ns.is_gap(g) {
        return Err(Error::NotAGap(g));
    }
    let d = semimodule_from_generators(ns, &[0, g])?;
    if d.minimal_generators != [0, g as u64] {
        return Err(inconsistent(format!("Δ_[0,{g}] over {ns} has generators {:?}", d.minimal_generators)));
    }
    Ok(d)
}

impl<'a> GammaSemimodule<'a> {
    pub fn base(&self) -> &'a NumericalSemigroup {
        self.base
    }

    pub fn minimal_generators(&self) -> &[u64] {
        &self.minimal_generators
    }

    /// Number of minimal generators, 0 included.
    pub fn gen_count(&self) -> usize {
        self.minimal_generators.len()
    }

    /// Number of nonzero minimal generators.
    pub fn nonzero_gen_count(&self) -> usize {
        self.gen_count() - 1
    }

    /// Amount subtracted from the input generators during normalisation.
    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            false
        } else if n as u64 >= self.conductor {
            true
        } else {
            self.membership.get(n as usize)
        }
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn frobenius(&self) -> i64 {
        self.conductor as i64 - 1
    }

    pub fn delta(&self) -> u64 {
        self.delta
    }

    pub fn genus(&self) -> u64 {
        self.conductor - self.delta
    }

    pub fn gaps(&self) -> Vec<u64> {
        (0..self.conductor).filter(|&n| !self.membership.get(n as usize)).collect()
    }

    /// `W_Δ(k) = kδ(Δ) - c(Δ)`.
    pub fn wilf_function(&self, k: u64) -> Result<i64> {
        wilf_linear(k as i64, self.delta, self.conductor)
    }

    /// `W(Δ) = gen_count·δ(Δ) - c(Δ)`.
    pub fn wilf_number(&self) -> Result<i64> {
        self.wilf_function(self.gen_count() as u64)
    }

    /// Least `k` with `W_Δ(k) >= 0`; 1 when `Δ = ℕ`.
    pub fn mu_threshold(&self) -> u64 {
        if self.conductor == 0 {
            1
        } else {
            self.conductor.div_ceil(self.delta)
        }
    }

    /// Closure under Γ on the stored window, the gap-difference property of
    /// the minimal generators, the generator bound, and minimality.
    pub fn check_invariants(&self) -> Result<()> {
        let ns = self.base;
        let window = self.membership.len() as u64;
        for x in (0..window).filter(|&x| self.membership.get(x as usize)) {
            for s in ns.small_elements().into_iter().chain([ns.conductor()]) {
                if !self.contains((x + s) as i64) {
                    return Err(inconsistent(format!("{x} + {s} ∉ Δ")));
                }
            }
        }
        for (i, &a) in self.minimal_generators.iter().enumerate() {
            for &b in &self.minimal_generators[i + 1..] {
                if !ns.is_gap((b - a) as i64) {
                    return Err(inconsistent(format!("generator difference {} is not a gap", b - a)));
                }
            }
        }
        if self.minimal_generators[0] != 0 || self.gen_count() as u64 > ns.multiplicity() {
            return Err(inconsistent(format!("bad generator list {:?}", self.minimal_generators)));
        }
        for n in 0..window {
            let generated = self.minimal_generators.iter().any(|&x| x <= n && ns.contains_u(n - x));
            if generated != self.membership.get(n as usize) {
                return Err(inconsistent(format!("membership of {n} not generated by {:?}", self.minimal_generators)));
            }
        }
        Ok(())
    }

    pub fn record(&self, k: Option<u64>) -> Result<SemimoduleRecord> {
        Ok(SemimoduleRecord {
            generators: self.minimal_generators.clone(),
            shift: self.shift,
            conductor: self.conductor,
            frobenius: self.frobenius(),
            delta: self.delta,
            genus: self.genus(),
            gen_count: self.gen_count(),
            wilf_number: self.wilf_number()?,
            k,
            wilf_at_k: k.map(|k| self.wilf_function(k)).transpose()?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemimoduleRecord {
    pub generators: Vec<u64>,
    pub shift: i64,
    pub conductor: u64,
    pub frobenius: i64,
    pub delta: u64,
    pub genus: u64,
    pub gen_count: usize,
    pub wilf_number: i64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub wilf_at_k: Option<i64>,
}

/// `W(g)` from the bit-table union sieve of `Δ_[0,g]`.
pub fn wilf_gap(ns: &NumericalSemigroup, g: i64) -> Result<i64> {
    let d = gap_semimodule(ns, g)?;
    d.wilf_function(2)
}

/// Invariants of `Δ_[0,g]` and of `Γ ∩ (g + Γ)`, read off residue classes
/// modulo the multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapProfile {
    pub gap: u64,
    pub conductor: u64,
    pub delta: u64,
    /// `min(Γ ∩ (g + Γ))`.
    pub min_intersection: u64,
}

impl GapProfile {
    pub fn wilf(&self) -> i64 {
        2 * self.delta as i64 - self.conductor as i64
    }

    pub fn wilf_at(&self, k: i64) -> i64 {
        k * self.delta as i64 - self.conductor as i64
    }
}

/// In residue class `r`, `Δ_[0,g]` starts at `min(w_r, g + w_{r-g})` and
/// `Γ ∩ (g + Γ)` at the max of the same pair.
pub fn gap_profile(ns: &NumericalSemigroup, g: u64) -> GapProfile {
    let w = ns.apery_by_residue();
    let m = w.len();
    let s = (g % m as u64) as usize;
    let mut sum = 0u64;
    let mut top = 0u64;
    let mut meet = u64::MAX;
    let (low, high) = w.split_at(m - s);
    // i in [0, m - s) pairs with residue i + s; i in [m - s, m) with i + s - m.
    for (&shifted, &own) in low.iter().zip(&w[s..]).chain(high.iter().zip(&w[..s])) {
        let moved = g + shifted;
        let d = own.min(moved);
        sum += d;
        top = top.max(d);
        meet = meet.min(own.max(moved));
    }
    let m = m as u64;
    let conductor = top + 1 - m;
    let genus = (sum - m * (m - 1) / 2) / m;
    GapProfile { gap: g, conductor, delta: conductor - genus, min_intersection: meet }
}

pub fn gap_profiles(ns: &NumericalSemigroup) -> Vec<GapProfile> {
    ns.gaps().iter().map(|&g| gap_profile(ns, g)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapExtremes {
    pub min: i64,
    pub max: i64,
    pub argmin_gaps: Vec<u64>,
    pub argmax_gaps: Vec<u64>,
}

pub fn extremes_of(profiles: &[GapProfile]) -> Option<GapExtremes> {
    let min = profiles.iter().map(GapProfile::wilf).min()?;
    let max = profiles.iter().map(GapProfile::wilf).max()?;
    let at = |v: i64| profiles.iter().filter(|p| p.wilf() == v).map(|p| p.gap).collect();
    Some(GapExtremes { min, max, argmin_gaps: at(min), argmax_gaps: at(max) })
}

/// Extremes of `W(g)` over every gap of Γ.
pub fn wilf_gap_extremes(ns: &NumericalSemigroup) -> Result<GapExtremes> {
    if ns.is_naturals() {
        return Err(Error::NaturalsUnsupported);
    }
    Ok(extremes_of(&gap_profiles(ns)).expect("Γ ≠ ℕ has gaps"))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub holds: bool,
    pub min_wg: i64,
    pub minus_wilf_e: i64,
}

/// `min W(g) >= -W_Γ(e)`. A `false` verdict is a counterexample, not an error.
pub fn check_bound_conjecture(ns: &NumericalSemigroup) -> Result<BoundCheck> {
    let ext = wilf_gap_extremes(ns)?;
    check_bound_conjecture_with(ns, &ext)
}

pub fn check_bound_conjecture_with(ns: &NumericalSemigroup, ext: &GapExtremes) -> Result<BoundCheck> {
    let minus_wilf_e = -wilf_value(ns, ns.embedding_dimension() as u64)?;
    Ok(BoundCheck { holds: ext.min >= minus_wilf_e, min_wg: ext.min, minus_wilf_e })
}

/// `max W(g) <= W_Γ(4)`; with `e >= 4`, a nonnegative `W(g)` forces `W_Γ(4) >= 0`.
pub fn check_thm_4_2(ns: &NumericalSemigroup) -> Result<bool> {
    let ext = wilf_gap_extremes(ns)?;
    check_thm_4_2_with(ns, &ext)
}

pub fn check_thm_4_2_with(ns: &NumericalSemigroup, ext: &GapExtremes) -> Result<bool> {
    let w4 = wilf_value(ns, 4)?;
    if ext.max > w4 {
        return Err(inconsistent(format!("{ns}: max W(g) = {} > W(4) = {w4}", ext.max)));
    }
    if ns.embedding_dimension() >= 4 && ext.max >= 0 && w4 < 0 {
        return Err(inconsistent(format!("{ns}: nonnegative W(g) but W(4) = {w4}")));
    }
    Ok(true)
}

/// `max W(g) - min W(g) < 2δ(Γ)` (and `< c(Γ)` when Γ is symmetric). Also
/// checks the consequence that `W(g) >= -W_Γ(k)` for some `k <= e - 2`
/// forces `min W(g) >= -W_Γ(e)`.
pub fn check_prop_4_3(ns: &NumericalSemigroup) -> Result<bool> {
    let ext = wilf_gap_extremes(ns)?;
    check_prop_4_3_with(ns, &ext)
}

pub fn check_prop_4_3_with(ns: &NumericalSemigroup, ext: &GapExtremes) -> Result<bool> {
    let range = ext.max - ext.min;
    let two_delta = 2 * ns.delta() as i64;
    if range >= two_delta {
        return Err(inconsistent(format!("{ns}: range {range} >= 2δ = {two_delta}")));
    }
    if ns.is_symmetric() && range >= ns.conductor() as i64 {
        return Err(inconsistent(format!("{ns}: symmetric but range {range} >= c")));
    }
    let e = ns.embedding_dimension() as u64;
    if e >= 2 && ext.max >= -wilf_value(ns, e - 2)? && ext.min < -wilf_value(ns, e)? {
        return Err(inconsistent(format!("{ns}: bound hypothesis at k = e - 2 holds but min W(g) < -W(e)")));
    }
    Ok(true)
}

/// The sharper `max W(g) - min W(g) <= 2δ(Γ) - 2`. This is recorded, not
/// enforced: it already fails for `⟨3,4,5⟩`.
pub fn prop_4_3_sharp_holds(ns: &NumericalSemigroup, ext: &GapExtremes) -> bool {
    ext.max - ext.min <= 2 * ns.delta() as i64 - 2
}

/// Every semimodule containing 0 as least element, one per minimal
/// generating set `{0} ∪ C` where `C` is a set of gaps with pairwise gap
/// differences. Sets are produced in lexicographic order, `[0]` first.
pub fn enumerate_semimodules(ns: &NumericalSemigroup) -> Result<SemimoduleIter<'_>> {
    if ns.is_naturals() {
        return Err(Error::NaturalsUnsupported);
    }
    Ok(SemimoduleIter { ns, gaps: ns.gaps().to_vec(), clique: Vec::new(), cursor: 0, started: false })
}

pub struct SemimoduleIter<'a> {
    ns: &'a NumericalSemigroup,
    gaps: Vec<u64>,
    clique: Vec<usize>,
    cursor: usize,
    started: bool,
}

impl SemimoduleIter<'_> {
    fn compatible(&self, i: usize) -> bool {
        let g = self.gaps[i];
        self.clique.iter().all(|&j| self.ns.is_gap(g.abs_diff(self.gaps[j]) as i64))
    }
}

impl<'a> Iterator for SemimoduleIter<'a> {
    type Item = GammaSemimodule<'a>;

    fn next(&mut self) -> Option<Self::Item> {
        if !self.started {
            self.started = true;
        } else {
            loop {
                match (self.cursor..self.gaps.len()).find(|&i| self.compatible(i)) {
                    Some(i) => {
                        self.clique.push(i);
                        self.cursor = i + 1;
                        break;
                    }
                    None => {
                        let last = self.clique.pop()?;
                        self.cursor = last + 1;
                    }
                }
            }
        }
        let gens: Vec<i64> = std::iter::once(0).chain(self.clique.iter().map(|&i| self.gaps[i] as i64)).collect();
        let d = semimodule_from_generators(self.ns, &gens).expect("nonempty generator list");
        debug_assert_eq!(d.gen_count(), gens.len());
        Some(d)
    }
}

/// Largest per-semimodule threshold over every Γ-semimodule: the least `k`
/// with `W_Δ(k) >= 0` for all of them.
pub fn mu_gamma_delta(ns: &NumericalSemigroup) -> Result<u64> {
    Ok(enumerate_semimodules(ns)?.map(|d| d.mu_threshold()).max().expect("[0] is always present"))
}

/// As [`mu_gamma_delta`], restricted to semimodules with `r` minimal generators (0 included).
pub fn mu_delta_r(ns: &NumericalSemigroup, r: usize) -> Result<u64> {
    if r == 0 || r as u64 > ns.multiplicity() {
        return Err(Error::NoSuchSemimodule(r));
    }
    enumerate_semimodules(ns)?
        .filter(|d| d.gen_count() == r)
        .map(|d| d.mu_threshold())
        .max()
        .ok_or(Error::NoSuchSemimodule(r))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ns(g: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(g).unwrap()
    }

    #[test]
    fn gamma_as_semimodule() {
        let g = ns(&[6, 8, 35]);
        let d = semimodule_from_generators(&g, &[0]).unwrap();
        assert_eq!(d.minimal_generators(), &[0]);
        assert_eq!(d.gen_count(), 1);
        assert_eq!((d.conductor(), d.delta()), (g.conductor(), g.delta()));
        for k in 0..8 {
            assert_eq!(d.wilf_function(k), wilf_value(&g, k));
        }
        assert_eq!(semimodule_from_generators(&g, &[]), Err(Error::EmptyInput));
    }

    #[test]
    fn three_five_zero_seven() {
        let g = ns(&[3, 5]);
        let d = semimodule_from_generators(&g, &[0, 7]).unwrap();
        assert_eq!(d.minimal_generators(), &[0, 7]);
        assert_eq!((d.conductor(), d.delta()), (5, 2));
        assert_eq!(d.gaps(), vec![1, 2, 4]);
        d.check_invariants().unwrap();
        let moved = semimodule_from_generators(&g, &[5, 12]).unwrap();
        assert_eq!(moved.shift(), 5);
        assert_eq!(moved.minimal_generators(), d.minimal_generators());
        assert_eq!(moved.membership, d.membership);
    }

    #[test]
    fn redundant_generators_dropped() {
        let g = ns(&[3, 5]);
        let d = semimodule_from_generators(&g, &[0, 7, 10, 3, 4]).unwrap();
        assert_eq!(d.minimal_generators(), &[0, 4]);
    }

    #[test]
    fn gap_semimodules() {
        let g = ns(&[3, 5]);
        let d = gap_semimodule(&g, 7).unwrap();
        assert_eq!((d.conductor(), d.delta()), (5, 2));
        assert_eq!(gap_semimodule(&g, 6), Err(Error::NotAGap(6)));
        assert_eq!(gap_semimodule(&g, 0), Err(Error::NotAGap(0)));
        assert_eq!(gap_semimodule(&g, -1), Err(Error::NotAGap(-1)));
        assert_eq!(wilf_gap(&ns(&[6, 8, 35]), 1), Ok(0));
    }

    #[test]
    fn six_eight_thirty_five_gap_values() {
        let g = ns(&[6, 8, 35]);
        let d = gap_semimodule(&g, 2).unwrap();
        assert_eq!(d.wilf_function(2), Ok(2));
        assert_eq!(gap_semimodule(&g, 25).unwrap().wilf_function(2), Ok(-4));
        assert_eq!(wilf_gap(&g, 10), Ok(-2));
        assert_eq!(wilf_gap(&g, 31), Ok(-4));
    }

    #[test]
    fn two_seven_all_zero() {
        let g = ns(&[2, 7]);
        for &gap in g.gaps() {
            assert_eq!(wilf_gap(&g, gap as i64), Ok(0));
        }
        let e = wilf_gap_extremes(&g).unwrap();
        assert_eq!((e.min, e.max), (0, 0));
    }

    #[test]
    fn profiles_match_sieve() {
        for gens in [&[2u64, 3][..], &[3, 5], &[6, 8, 35], &[5, 7, 9], &[4, 9, 10, 11], &[7, 11, 13, 17]] {
            let g = ns(gens);
            for &gap in g.gaps() {
                let p = gap_profile(&g, gap);
                let d = gap_semimodule(&g, gap as i64).unwrap();
                assert_eq!((p.conductor, p.delta), (d.conductor(), d.delta()), "{g} gap {gap}");
                let brute = (gap..).find(|&n| g.contains(n as i64) && g.contains((n - gap) as i64)).unwrap();
                assert_eq!(p.min_intersection, brute);
            }
        }
    }

    #[test]
    fn extremes_six_eight_thirty_five() {
        let e = wilf_gap_extremes(&ns(&[6, 8, 35])).unwrap();
        assert_eq!((e.min, e.max), (-4, 2));
        assert_eq!(e.argmax_gaps, vec![2]);
        assert_eq!(e.argmin_gaps, vec![25, 31, 39, 45]);
        let e = wilf_gap_extremes(&ns(&[3, 5])).unwrap();
        assert_eq!(e.max, -e.min);
        assert_eq!(wilf_gap_extremes(&ns(&[1])), Err(Error::NaturalsUnsupported));
    }

    #[test]
    fn bound_and_theorems() {
        let g = ns(&[6, 8, 35]);
        let b = check_bound_conjecture(&g).unwrap();
        assert!(b.holds);
        assert_eq!((b.min_wg, b.minus_wilf_e), (-4, -23));
        assert!(check_bound_conjecture(&ns(&[2, 3])).unwrap().holds);
        assert_eq!(check_thm_4_2(&g), Ok(true));
        assert_eq!(check_prop_4_3(&g), Ok(true));
        // W(7) = -1 over ⟨3,5⟩ while W_Γ(2) = 0.
        let b = check_bound_conjecture(&ns(&[3, 5])).unwrap();
        assert_eq!((b.holds, b.min_wg, b.minus_wilf_e), (false, -1, 0));
    }

    #[test]
    fn sharp_range_fails_on_three_four_five() {
        let g = ns(&[3, 4, 5]);
        let e = wilf_gap_extremes(&g).unwrap();
        assert_eq!((e.min, e.max), (0, 1));
        assert!(!prop_4_3_sharp_holds(&g, &e));
        assert_eq!(check_prop_4_3(&g), Ok(true));
    }

    #[test]
    fn theorem_violation_is_an_error() {
        let g = ns(&[6, 8, 35]);
        let fake = GapExtremes { min: -4, max: 1000, argmin_gaps: vec![], argmax_gaps: vec![] };
        assert!(matches!(check_thm_4_2_with(&g, &fake), Err(Error::InternalInconsistency(_))));
        assert!(matches!(check_prop_4_3_with(&g, &fake), Err(Error::InternalInconsistency(_))));
    }

    #[test]
    fn enumerate_two_three() {
        let g = ns(&[2, 3]);
        let all: Vec<Vec<u64>> = enumerate_semimodules(&g).unwrap().map(|d| d.minimal_generators().to_vec()).collect();
        assert_eq!(all, vec![vec![0], vec![0, 1]]);
    }

    #[test]
    fn enumerate_three_five_sets() {
        let g = ns(&[3, 5]);
        let all: Vec<Vec<u64>> = enumerate_semimodules(&g).unwrap().map(|d| d.minimal_generators().to_vec()).collect();
        assert_eq!(all[0], vec![0]);
        for single in [[0, 1], [0, 2], [0, 4], [0, 7]] {
            assert!(all.contains(&single.to_vec()));
        }
        assert!(all.iter().all(|s| s.len() as u64 <= g.multiplicity()));
        assert!(enumerate_semimodules(&ns(&[1])).is_err());
    }

    #[test]
    fn mu_probes() {
        assert_eq!(mu_delta_r(&ns(&[2, 7]), 2), Ok(2));
        assert_eq!(mu_delta_r(&ns(&[6, 8, 35]), 1), Ok(crate::wilf::mu(&ns(&[6, 8, 35]))));
        for (a, b) in [(3, 5), (3, 7), (4, 5), (5, 7)] {
            assert!(mu_delta_r(&ns(&[a, b]), 2).unwrap() <= 3);
        }
        assert_eq!(mu_delta_r(&ns(&[2, 3]), 3), Err(Error::NoSuchSemimodule(3)));
        assert_eq!(mu_delta_r(&ns(&[3, 5]), 0), Err(Error::NoSuchSemimodule(0)));
        assert!(mu_gamma_delta(&ns(&[3, 5])).unwrap() >= 2);
    }
}
