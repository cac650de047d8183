//! Two-generator semigroups `⟨α,β⟩`: every gap is `αβ - aα - bβ` for a
//! unique point `(a,b)` with `1 <= a < β`, `1 <= b < α`, and the Wilf number
//! of a gap, together with `c` and `δ` of `Δ_[0,g]`, have closed forms in
//! `(a,b)`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{inconsistent, Error, Result};
use crate::semigroup::{gcd_all, NumericalSemigroup};
use crate::semimodule::{gap_profile, GapProfile};

/// `⟨α,β⟩` with `2 <= α < β` coprime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoGenerator {
    alpha: u64,
    beta: u64,
    ns: NumericalSemigroup,
}

impl TwoGenerator {
    /// Generators may be given in either order.
    pub fn new(alpha: u64, beta: u64) -> Result<Self> {
        let (alpha, beta) = (alpha.min(beta), alpha.max(beta));
        if alpha == 0 {
            return Err(Error::NonPositiveGenerator(0));
        }
        if alpha == beta || gcd_all(&[alpha, beta]) != 1 {
            return Err(Error::NotCoprime(alpha, beta));
        }
        if alpha == 1 {
            return Err(Error::NaturalsUnsupported);
        }
        let ns = NumericalSemigroup::from_generators(&[alpha, beta])?;
        let c = (alpha - 1) * (beta - 1);
        if ns.conductor() != c || ns.frobenius() != (alpha * beta) as i64 - (alpha + beta) as i64 || 2 * ns.delta() != c
        {
            return Err(inconsistent(format!("{ns}: c = {}, δ = {}", ns.conductor(), ns.delta())));
        }
        Ok(TwoGenerator { alpha, beta, ns })
    }

    pub fn from_semigroup(ns: &NumericalSemigroup) -> Result<Self> {
        match *ns.minimal_generators() {
            [a, b] => Self::new(a, b),
            _ if ns.is_naturals() => Err(Error::NaturalsUnsupported),
            _ => Err(Error::Parse {
                input: ns.to_string(),
                reason: "expected exactly two minimal generators".into(),
            }),
        }
    }

    pub fn alpha(&self) -> u64 {
        self.alpha
    }

    pub fn beta(&self) -> u64 {
        self.beta
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.ns
    }

    /// `(α-1)(β-1)`.
    pub fn conductor(&self) -> u64 {
        (self.alpha - 1) * (self.beta - 1)
    }

    /// `(α-1)(β-1)/2`.
    pub fn delta(&self) -> u64 {
        self.conductor() / 2
    }

    fn product(&self) -> u64 {
        self.alpha * self.beta
    }

    /// `(a,b)` in range with `aα + bβ < αβ`.
    pub fn is_lattice_point(&self, a: u64, b: u64) -> bool {
        (1..self.beta).contains(&a) && (1..self.alpha).contains(&b) && a * self.alpha + b * self.beta < self.product()
    }

    pub fn point(&self, a: u64, b: u64) -> Result<LatticeGap> {
        if !self.is_lattice_point(a, b) {
            let g = self.product() as i64 - (a * self.alpha) as i64 - (b * self.beta) as i64;
            return Err(Error::NotAGap(g));
        }
        Ok(LatticeGap { alpha: self.alpha, beta: self.beta, a, b, gap: self.product() - a * self.alpha - b * self.beta })
    }

    pub fn gap_coords(&self, g: i64) -> Result<LatticeGap> {
        if !self.ns.is_gap(g) {
            return Err(Error::NotAGap(g));
        }
        let g = g as u64;
        let (alpha, beta) = (self.alpha, self.beta);
        (1..alpha)
            .filter_map(|b| (self.product() - b * beta).checked_sub(g))
            .zip(1..alpha)
            .find(|&(rest, _)| rest > 0 && rest % alpha == 0)
            .map(|(rest, b)| LatticeGap { alpha, beta, a: rest / alpha, b, gap: g })
            .ok_or_else(|| inconsistent(format!("gap {g} of {} has no lattice coordinates", self.ns)))
    }

    /// Every gap in increasing order.
    pub fn points(&self) -> impl Iterator<Item = LatticeGap> + '_ {
        self.ns.gaps().iter().map(|&g| self.gap_coords(g as i64).expect("gaps have coordinates"))
    }

    /// Boundary convention: strict on the diagonal, inclusive on `b = ⌊α/2⌋`.
    pub fn in_upper_triangle(&self, lg: &LatticeGap) -> bool {
        self.is_lattice_point(lg.a, lg.b) && lg.b >= self.alpha / 2
    }

    /// Boundary convention: strict on the diagonal, inclusive on `a = ⌊β/2⌋`.
    pub fn in_right_triangle(&self, lg: &LatticeGap) -> bool {
        self.is_lattice_point(lg.a, lg.b) && lg.a >= self.beta / 2
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LatticeGap {
    pub alpha: u64,
    pub beta: u64,
    pub a: u64,
    pub b: u64,
    pub gap: u64,
}

pub fn gap_coords(alpha: u64, beta: u64, g: i64) -> Result<LatticeGap> {
    TwoGenerator::new(alpha, beta)?.gap_coords(g)
}

pub fn coords_to_gap(lg: &LatticeGap) -> i64 {
    (lg.alpha * lg.beta) as i64 - (lg.a * lg.alpha) as i64 - (lg.b * lg.beta) as i64
}

/// Which candidate `min(Γ ∩ (g + Γ))` turned out to be.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    /// `αβ - bβ`: `-W = aα - 2ab`, `c(Δ) = c(Γ) - aα`.
    MinusBeta,
    /// `αβ - aα`: `-W = bβ - 2ab`, `c(Δ) = c(Γ) - bβ`.
    MinusAlpha,
}

fn branch_of(lg: &LatticeGap, min: u64) -> Result<Branch> {
    let ab = lg.alpha * lg.beta;
    if min == ab - lg.b * lg.beta {
        Ok(Branch::MinusBeta)
    } else if min == ab - lg.a * lg.alpha {
        Ok(Branch::MinusAlpha)
    } else {
        Err(inconsistent(format!("min(Γ ∩ (Γ + {})) = {min} is neither candidate for {lg:?}", lg.gap)))
    }
}

pub fn min_gamma_intersection(tg: &TwoGenerator, g: i64) -> Result<u64> {
    let lg = tg.gap_coords(g)?;
    let min = gap_profile(&tg.ns, lg.gap).min_intersection;
    branch_of(&lg, min)?;
    Ok(min)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedForms {
    pub branch: Branch,
    pub conductor: u64,
    pub delta: u64,
    pub wilf: i64,
}

fn closed_forms_for(tg: &TwoGenerator, lg: &LatticeGap, min: u64) -> Result<ClosedForms> {
    let branch = branch_of(lg, min)?;
    let (a, b) = (lg.a as i64, lg.b as i64);
    let (minus_w, cut) = match branch {
        Branch::MinusBeta => (a * tg.alpha as i64 - 2 * a * b, lg.a * tg.alpha),
        Branch::MinusAlpha => (b * tg.beta as i64 - 2 * a * b, lg.b * tg.beta),
    };
    let conductor = tg.conductor() - cut;
    let delta = conductor + lg.a * lg.b - tg.delta();
    Ok(ClosedForms { branch, conductor, delta, wilf: -minus_w })
}

fn agree(lg: &LatticeGap, cf: &ClosedForms, p: &GapProfile) -> Result<()> {
    if cf.conductor != p.conductor || cf.delta != p.delta || cf.wilf != p.wilf() {
        return Err(inconsistent(format!("closed forms {cf:?} disagree with {p:?} at {lg:?}")));
    }
    Ok(())
}

/// `c(Δ_[0,g])` and `δ(Δ_[0,g])` from `(a,b)`, checked against the residue computation.
pub fn semimodule_closed_forms(tg: &TwoGenerator, lg: &LatticeGap) -> Result<ClosedForms> {
    let p = gap_profile(&tg.ns, lg.gap);
    let cf = closed_forms_for(tg, lg, p.min_intersection)?;
    agree(lg, &cf, &p)?;
    Ok(cf)
}

/// `W(g)` from `(a,b)`; errors if it disagrees with the residue computation.
pub fn wilf_gap_closed_form(tg: &TwoGenerator, lg: &LatticeGap) -> Result<i64> {
    Ok(semimodule_closed_forms(tg, lg)?.wilf)
}

/// One row of the lattice dump.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeRow {
    pub a: u64,
    pub b: u64,
    pub gap: u64,
    pub wilf: i64,
}

/// Closed forms for every gap, each checked against the residue computation.
pub fn lattice_rows(tg: &TwoGenerator) -> Result<Vec<LatticeRow>> {
    tg.points()
        .map(|lg| {
            let cf = semimodule_closed_forms(tg, &lg)?;
            Ok(LatticeRow { a: lg.a, b: lg.b, gap: lg.gap, wilf: cf.wilf })
        })
        .collect()
}

struct Grid {
    rows: usize,
    values: Vec<Option<i64>>,
}

impl Grid {
    fn new(tg: &TwoGenerator, rows: &[LatticeRow]) -> Self {
        let width = tg.alpha as usize - 1;
        let mut values = vec![None; (tg.beta as usize - 1) * width];
        for r in rows {
            values[(r.a as usize - 1) * width + r.b as usize - 1] = Some(r.wilf);
        }
        Grid { rows: width, values }
    }

    fn get(&self, a: u64, b: u64) -> Option<i64> {
        self.values[(a as usize - 1) * self.rows + b as usize - 1]
    }
}

/// `W(a,b) = -W(a, α-b)` and `W(a,b) = -W(β-a, b)` whenever the mirrored
/// point is itself a gap.
pub fn check_symmetry(tg: &TwoGenerator) -> Result<bool> {
    check_symmetry_rows(tg, &lattice_rows(tg)?)
}

pub fn check_symmetry_rows(tg: &TwoGenerator, rows: &[LatticeRow]) -> Result<bool> {
    let grid = Grid::new(tg, rows);
    for r in rows {
        let mirrors = [(r.a, tg.alpha - r.b), (tg.beta - r.a, r.b)];
        for (a, b) in mirrors {
            if !tg.is_lattice_point(a, b) {
                continue;
            }
            let other = grid.get(a, b).ok_or_else(|| inconsistent(format!("({a},{b}) missing from the lattice")))?;
            if other != -r.wilf {
                return Err(inconsistent(format!(
                    "{}: W({},{}) = {} but W({a},{b}) = {other}",
                    tg.ns, r.a, r.b, r.wilf
                )));
            }
        }
    }
    Ok(true)
}

/// `3δ(Δ_[0,g]) >= c(Δ_[0,g])` for every gap, `αβ - 2(α+β) + 2 >= 0` when
/// `α >= 3`, and `max W(g) = -min W(g) < δ(Γ)`.
pub fn check_thm_4_15(tg: &TwoGenerator) -> Result<bool> {
    let mut summary = PairSummary::empty(tg);
    for lg in tg.points() {
        let p = gap_profile(&tg.ns, lg.gap);
        summary.absorb(&p)?;
    }
    summary.finish(tg)?;
    Ok(true)
}

/// Aggregate of a full verification pass over one pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairSummary {
    pub alpha: u64,
    pub beta: u64,
    pub gaps: u64,
    pub min_wilf: i64,
    pub max_wilf: i64,
}

impl PairSummary {
    fn empty(tg: &TwoGenerator) -> Self {
        PairSummary { alpha: tg.alpha, beta: tg.beta, gaps: 0, min_wilf: i64::MAX, max_wilf: i64::MIN }
    }

    fn absorb(&mut self, p: &GapProfile) -> Result<()> {
        if p.wilf_at(3) < 0 {
            return Err(inconsistent(format!("⟨{},{}⟩: W_Δ(3) < 0 at gap {}", self.alpha, self.beta, p.gap)));
        }
        self.gaps += 1;
        self.min_wilf = self.min_wilf.min(p.wilf());
        self.max_wilf = self.max_wilf.max(p.wilf());
        Ok(())
    }

    fn finish(&self, tg: &TwoGenerator) -> Result<()> {
        let (alpha, beta) = (tg.alpha as i64, tg.beta as i64);
        if alpha >= 3 && alpha * beta - 2 * (alpha + beta) + 2 < 0 {
            return Err(inconsistent(format!("αβ - 2(α+β) + 2 < 0 for ({alpha},{beta})")));
        }
        if self.max_wilf != -self.min_wilf || self.max_wilf >= tg.delta() as i64 {
            return Err(inconsistent(format!(
                "{}: max W(g) = {}, min W(g) = {}, δ = {}",
                tg.ns,
                self.max_wilf,
                self.min_wilf,
                tg.delta()
            )));
        }
        if alpha == 2 && self.max_wilf != 0 {
            return Err(inconsistent(format!("{}: nonzero W(g) with α = 2", tg.ns)));
        }
        Ok(())
    }
}

/// Everything checkable about one pair in a single pass: closed forms
/// against the residue computation, both mirror identities, the
/// `W_Δ(3) >= 0` bound and `max W(g) = -min W(g) < δ`.
pub fn verify_pair(alpha: u64, beta: u64) -> Result<PairSummary> {
    let tg = TwoGenerator::new(alpha, beta)?;
    let mut summary = PairSummary::empty(&tg);
    let mut rows = Vec::with_capacity(tg.ns.genus() as usize);
    for lg in tg.points() {
        let p = gap_profile(&tg.ns, lg.gap);
        let cf = closed_forms_for(&tg, &lg, p.min_intersection)?;
        agree(&lg, &cf, &p)?;
        summary.absorb(&p)?;
        rows.push(LatticeRow { a: lg.a, b: lg.b, gap: lg.gap, wilf: cf.wilf });
    }
    check_symmetry_rows(&tg, &rows)?;
    summary.finish(&tg)?;
    Ok(summary)
}

pub fn lattice_csv(rows: &[LatticeRow]) -> String {
    let mut out = String::from("a,b,gap,wilf\n");
    for r in rows {
        writeln!(out, "{},{},{},{}", r.a, r.b, r.gap, r.wilf).unwrap();
    }
    out
}

const CELL: u64 = 16;
const MARGIN: u64 = 24;

/// Heatmap of `W(a,b)`: `a` grows rightward, `b` upward; positive cells red,
/// negative blue, zero grey.
pub fn lattice_svg(tg: &TwoGenerator, rows: &[LatticeRow]) -> String {
    let width = tg.beta * CELL + 2 * MARGIN;
    let height = tg.alpha * CELL + 2 * MARGIN;
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    writeln!(out, r#"<title>W(a,b) for {}</title>"#, tg.ns).unwrap();
    writeln!(out, r##"<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>"##).unwrap();
    for r in rows {
        let fill = match r.wilf.signum() {
            1 => "#d6604d",
            -1 => "#4393c3",
            _ => "#bababa",
        };
        let x = MARGIN + r.a * CELL;
        let y = height - MARGIN - (r.b + 1) * CELL;
        writeln!(
            out,
            r##"<rect x="{x}" y="{y}" width="{CELL}" height="{CELL}" fill="{fill}" stroke="#ffffff"><title>g={} W={}</title></rect>"##,
            r.gap, r.wilf
        )
        .unwrap();
    }
    let (x0, y0) = (MARGIN, height - MARGIN);
    writeln!(
        out,
        r##"<line x1="{x0}" y1="{y0}" x2="{}" y2="{}" stroke="#000000"/>"##,
        x0 + tg.beta * CELL,
        y0 - tg.alpha * CELL
    )
    .unwrap();
    out.push_str("</svg>\n");
    out
}
