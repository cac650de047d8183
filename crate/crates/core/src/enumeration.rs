//! Exhaustive enumeration by genus and the survey harness.
//!
//! The tree rooted at ℕ gives each semigroup `Γ` the children `Γ ∖ {x}` for
//! the minimal generators `x > F(Γ)`; every semigroup of genus `g` appears
//! exactly once at depth `g`. Children are visited in increasing `x`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::verify_pair;
use crate::semigroup::NumericalSemigroup;
use crate::semimodule::{
    check_bound_conjecture_with, check_prop_4_3_with, check_thm_4_2_with, extremes_of, gap_profiles,
    prop_4_3_sharp_holds, GapExtremes,
};
use crate::wilf::{
    check_prop_3_1, check_prop_3_7, check_thm_3_2, check_wilf_type_with, frogo_equality_check, interval_stats, mu,
    remark_b, wilf_value,
};

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// `Γ ∖ {x}` for a minimal generator `x > F(Γ)`.
pub fn remove_generator(ns: &NumericalSemigroup, x: u64) -> Result<NumericalSemigroup> {
    if x < ns.conductor() || !ns.minimal_generators().contains(&x) {
        return Err(Error::NotAMember(x as i64));
    }
    Ok(NumericalSemigroup::finalize(x + 1, |n| n != x && ns.contains_u(n)))
}

pub fn children(ns: &NumericalSemigroup) -> impl Iterator<Item = NumericalSemigroup> + '_ {
    let c = ns.conductor();
    ns.minimal_generators()
        .iter()
        .filter(move |&&x| x >= c)
        .map(move |&x| remove_generator(ns, x).expect("generator above the Frobenius number"))
}

/// Depth-first walk of the semigroup tree down to `max_genus`.
///
/// Yields one `Err(ResourceLimit)` and stops once more than `budget` nodes
/// would be visited. The visit counter can be shared between walkers.
pub struct GenusTree {
    stack: Vec<NumericalSemigroup>,
    max_genus: u64,
    budget: u64,
    visited: Arc<AtomicU64>,
    per_genus: Vec<u64>,
    stopped: bool,
}

impl GenusTree {
    pub fn from_root(root: NumericalSemigroup, max_genus: u64, budget: u64, visited: Arc<AtomicU64>) -> Self {
        let stack = if root.genus() <= max_genus { vec![root] } else { Vec::new() };
        GenusTree { stack, max_genus, budget, visited, per_genus: vec![0; max_genus as usize + 1], stopped: false }
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    /// Nodes seen so far by this walker, by genus.
    pub fn per_genus(&self) -> &[u64] {
        &self.per_genus
    }
}

impl Iterator for GenusTree {
    type Item = Result<NumericalSemigroup>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.stopped {
            return None;
        }
        let node = self.stack.pop()?;
        let seen = self.visited.fetch_add(1, Ordering::Relaxed);
        if seen >= self.budget {
            self.stopped = true;
            return Some(Err(Error::ResourceLimit {
                budget: self.budget,
                visited: seen,
                per_genus: self.per_genus.clone(),
            }));
        }
        let genus = node.genus();
        self.per_genus[genus as usize] += 1;
        if genus < self.max_genus {
            let mut kids: Vec<_> = children(&node).collect();
            kids.reverse();
            self.stack.extend(kids);
        }
        Some(Ok(node))
    }
}

/// Every semigroup of genus at most `max_genus`, ℕ first.
pub fn enumerate_genus(max_genus: u64) -> GenusTree {
    GenusTree::from_root(NumericalSemigroup::naturals(), max_genus, DEFAULT_NODE_BUDGET, Arc::default())
}

/// Per-genus counts, or the partial counts inside `ResourceLimit`.
pub fn count_by_genus(max_genus: u64, budget: u64) -> Result<Vec<u64>> {
    let mut tree = enumerate_genus(max_genus).with_budget(budget);
    for node in tree.by_ref() {
        node?;
    }
    Ok(tree.per_genus)
}

pub const ORACLE_MAX_GENUS: u64 = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub per_genus: Vec<u64>,
    /// Sorted gap sets, sorted lexicographically within each genus.
    pub gap_sets: Vec<Vec<Vec<u64>>>,
}

/// Independent check of the tree: every gap set lies in `[1, 2g - 1]`, so
/// scan subsets of `[1, 2·max_genus]` whose complement is additively closed.
pub fn oracle_enumerate(max_genus: u64) -> Result<OracleResult> {
    if max_genus > ORACLE_MAX_GENUS {
        return Err(Error::ResourceLimit { budget: ORACLE_MAX_GENUS, visited: max_genus, per_genus: Vec::new() });
    }
    let width = 2 * max_genus as u32;
    let mut gap_sets = vec![Vec::new(); max_genus as usize + 1];
    for mask in 0u32..(1 << width) {
        let genus = mask.count_ones() as u64;
        if genus > max_genus {
            continue;
        }
        let is_gap = |n: u32| n >= 1 && n <= width && mask >> (n - 1) & 1 == 1;
        let closed = (1..=width).filter(|&s| is_gap(s)).all(|s| (1..=s / 2).all(|a| is_gap(a) || is_gap(s - a)));
        if closed {
            gap_sets[genus as usize].push((1..=width).filter(|&n| is_gap(n)).map(u64::from).collect::<Vec<_>>());
        }
    }
    for sets in &mut gap_sets {
        sets.sort();
    }
    Ok(OracleResult { per_genus: gap_sets.iter().map(|s| s.len() as u64).collect(), gap_sets })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Predicate {
    Wilf,
    Bound,
    Frogo,
    Thm32,
    Thm42,
    Prop43,
    MuHist,
    #[serde(rename = "thm415_twogen")]
    Thm415TwoGen,
    Prop27,
    Prop31,
    Prop37,
    Interval,
    RemarkB,
    #[serde(rename = "prop43_sharp")]
    Prop43Sharp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PredicateKind {
    /// Proven; a violation is a bug and aborts the survey.
    Theorem,
    /// Open; violations are collected as counterexamples.
    Conjecture,
    /// Asserted without being relied on; violations are collected.
    Claim,
    /// Aggregated only.
    Statistic,
}

impl Predicate {
    pub const ALL: [Predicate; 14] = [
        Predicate::Wilf,
        Predicate::Bound,
        Predicate::Frogo,
        Predicate::Thm32,
        Predicate::Thm42,
        Predicate::Prop43,
        Predicate::MuHist,
        Predicate::Thm415TwoGen,
        Predicate::Prop27,
        Predicate::Prop31,
        Predicate::Prop37,
        Predicate::Interval,
        Predicate::RemarkB,
        Predicate::Prop43Sharp,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Predicate::Wilf => "wilf",
            Predicate::Bound => "bound",
            Predicate::Frogo => "frogo",
            Predicate::Thm32 => "thm32",
            Predicate::Thm42 => "thm42",
            Predicate::Prop43 => "prop43",
            Predicate::MuHist => "mu_hist",
            Predicate::Thm415TwoGen => "thm415_twogen",
            Predicate::Prop27 => "prop27",
            Predicate::Prop31 => "prop31",
            Predicate::Prop37 => "prop37",
            Predicate::Interval => "interval",
            Predicate::RemarkB => "remark_b",
            Predicate::Prop43Sharp => "prop43_sharp",
        }
    }

    pub fn kind(self) -> PredicateKind {
        match self {
            Predicate::Wilf | Predicate::Bound | Predicate::Frogo => PredicateKind::Conjecture,
            Predicate::Prop43Sharp => PredicateKind::Claim,
            Predicate::MuHist => PredicateKind::Statistic,
            _ => PredicateKind::Theorem,
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Predicate::ALL.into_iter().find(|p| p.name() == s.trim()).ok_or_else(|| Error::Parse {
            input: s.to_string(),
            reason: "unknown predicate".into(),
        })
    }
}

/// Comma-separated predicate names; `all` selects every predicate.
pub fn parse_predicates(s: &str) -> Result<Vec<Predicate>> {
    if s.trim() == "all" {
        return Ok(Predicate::ALL.to_vec());
    }
    let mut out: Vec<Predicate> = s.split(',').map(str::parse).collect::<Result<_>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

/// One JSONL line of a survey.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyRecord {
    pub generators: Vec<u64>,
    pub genus: u64,
    pub conductor: u64,
    pub delta: u64,
    pub e: usize,
    pub m: u64,
    #[serde(rename = "type")]
    pub type_: usize,
    pub mu: u64,
    pub wilf_at_e: i64,
    pub min_wg: i64,
    pub max_wg: i64,
    pub verdicts: BTreeMap<Predicate, bool>,
}

/// Applies `predicates` to `ns`. Theorem failures come back as errors; ℕ gives `None`.
pub fn evaluate(ns: &NumericalSemigroup, predicates: &[Predicate]) -> Result<Option<SurveyRecord>> {
    if ns.is_naturals() {
        return Ok(None);
    }
    let ext: GapExtremes = extremes_of(&gap_profiles(ns)).expect("Γ ≠ ℕ has gaps");
    let e = ns.embedding_dimension();
    let mut verdicts = BTreeMap::new();
    for &p in predicates {
        let verdict = match p {
            Predicate::Wilf => wilf_value(ns, e as u64)? >= 0,
            Predicate::Bound => check_bound_conjecture_with(ns, &ext)?.holds,
            Predicate::Frogo => frogo_equality_check(ns)?.conjecture_consistent,
            Predicate::Thm32 => check_thm_3_2(ns).map(|()| true)?,
            Predicate::Thm42 => check_thm_4_2_with(ns, &ext)?,
            Predicate::Prop43 => check_prop_4_3_with(ns, &ext)?,
            Predicate::MuHist => continue,
            Predicate::Thm415TwoGen => match *ns.minimal_generators() {
                [a, b] => verify_pair(a, b).map(|_| true)?,
                _ => continue,
            },
            Predicate::Prop27 => {
                let stats = interval_stats(ns)?;
                for k in 2..=ns.multiplicity() as i64 {
                    check_wilf_type_with(ns, &stats, k)?;
                }
                true
            }
            Predicate::Prop31 => check_prop_3_1(ns).map(|()| true)?,
            Predicate::Prop37 => check_prop_3_7(ns).map(|()| true)?,
            Predicate::Interval => interval_stats(ns).map(|_| true)?,
            Predicate::RemarkB => remark_b(ns).map(|_| true)?,
            Predicate::Prop43Sharp => prop_4_3_sharp_holds(ns, &ext),
        };
        verdicts.insert(p, verdict);
    }
    Ok(Some(SurveyRecord {
        generators: ns.minimal_generators().to_vec(),
        genus: ns.genus(),
        conductor: ns.conductor(),
        delta: ns.delta(),
        e,
        m: ns.multiplicity(),
        type_: ns.type_of()?,
        mu: mu(ns),
        wilf_at_e: wilf_value(ns, e as u64)?,
        min_wg: ext.min,
        max_wg: ext.max,
        verdicts,
    }))
}

pub const WITNESS_CAP: usize = 8;
pub const COUNTEREXAMPLE_CAP: usize = 256;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub checked: u64,
    pub satisfied: u64,
    pub violated: u64,
    /// First few violating generator sets.
    pub witnesses: Vec<Vec<u64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub predicate: Predicate,
    pub generators: Vec<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MuHistEntry {
    pub mu: u64,
    pub e: usize,
    pub t_plus_one: usize,
    pub count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyReport {
    pub max_genus: u64,
    pub predicates: Vec<Predicate>,
    pub per_genus: Vec<u64>,
    pub tallies: BTreeMap<Predicate, Tally>,
    /// Conjecture and claim violations, in enumeration order, capped.
    pub counterexamples: Vec<Counterexample>,
    pub counterexamples_total: u64,
    pub mu_hist: Vec<MuHistEntry>,
}

impl SurveyReport {
    pub fn new(max_genus: u64, predicates: &[Predicate]) -> Self {
        SurveyReport {
            max_genus,
            predicates: predicates.to_vec(),
            per_genus: vec![0; max_genus as usize + 1],
            tallies: predicates
                .iter()
                .filter(|p| p.kind() != PredicateKind::Statistic)
                .map(|&p| (p, Tally::default()))
                .collect(),
            counterexamples: Vec::new(),
            counterexamples_total: 0,
            mu_hist: Vec::new(),
        }
    }

    /// Counts one record. Callers feed records in enumeration order.
    pub fn absorb(&mut self, record: &SurveyRecord) {
        for (&p, &ok) in &record.verdicts {
            let tally = self.tallies.entry(p).or_default();
            tally.checked += 1;
            if ok {
                tally.satisfied += 1;
                continue;
            }
            tally.violated += 1;
            if tally.witnesses.len() < WITNESS_CAP {
                tally.witnesses.push(record.generators.clone());
            }
            self.counterexamples_total += 1;
            if self.counterexamples.len() < COUNTEREXAMPLE_CAP {
                self.counterexamples.push(Counterexample { predicate: p, generators: record.generators.clone() });
            }
        }
        if self.predicates.contains(&Predicate::MuHist) {
            let key = (record.mu, record.e, record.type_ + 1);
            match self.mu_hist.binary_search_by_key(&key, |h| (h.mu, h.e, h.t_plus_one)) {
                Ok(i) => self.mu_hist[i].count += 1,
                Err(i) => {
                    self.mu_hist.insert(i, MuHistEntry { mu: key.0, e: key.1, t_plus_one: key.2, count: 1 })
                }
            }
        }
    }

    pub fn violations(&self, p: Predicate) -> u64 {
        self.tallies.get(&p).map_or(0, |t| t.violated)
    }

    pub fn total(&self) -> u64 {
        self.per_genus.iter().sum()
    }
}

pub fn mu_hist_csv(report: &SurveyReport) -> String {
    let mut out = String::from("mu,e,t_plus_one,count\n");
    for h in &report.mu_hist {
        out.push_str(&format!("{},{},{},{}\n", h.mu, h.e, h.t_plus_one, h.count));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurveyConfig {
    pub max_genus: u64,
    pub predicates: Vec<Predicate>,
    /// 1 runs on the calling thread.
    pub jobs: usize,
    /// Genus at which subtrees are handed to workers.
    pub split_depth: u64,
    pub node_budget: u64,
}

impl SurveyConfig {
    pub fn new(max_genus: u64, predicates: &[Predicate]) -> Self {
        SurveyConfig {
            max_genus,
            predicates: predicates.to_vec(),
            jobs: 1,
            split_depth: 4,
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

enum Work {
    Node(NumericalSemigroup),
    Subtree(NumericalSemigroup),
}

struct Chunk {
    per_genus: Vec<u64>,
    records: Vec<SurveyRecord>,
}

fn run_work(work: Work, config: &SurveyConfig, visited: &Arc<AtomicU64>) -> Result<Chunk> {
    let mut per_genus = vec![0; config.max_genus as usize + 1];
    let mut records = Vec::new();
    let mut visit = |ns: &NumericalSemigroup| -> Result<()> {
        per_genus[ns.genus() as usize] += 1;
        records.extend(evaluate(ns, &config.predicates)?);
        Ok(())
    };
    match work {
        Work::Node(ns) => visit(&ns)?,
        Work::Subtree(root) => {
            for node in GenusTree::from_root(root, config.max_genus, config.node_budget, Arc::clone(visited)) {
                visit(&node?)?;
            }
        }
    }
    Ok(Chunk { per_genus, records })
}

/// Nodes above the split depth (each on its own) and the subtree roots at
/// the split depth, in depth-first order. Walking the list in order
/// reproduces the sequential visit order.
fn frontier(config: &SurveyConfig, visited: &Arc<AtomicU64>) -> Result<Vec<Work>> {
    let mut out = Vec::new();
    let mut stack = vec![NumericalSemigroup::naturals()];
    while let Some(node) = stack.pop() {
        let genus = node.genus();
        if genus == config.split_depth.min(config.max_genus) {
            out.push(Work::Subtree(node));
            continue;
        }
        let seen = visited.fetch_add(1, Ordering::Relaxed);
        if seen >= config.node_budget {
            return Err(Error::ResourceLimit { budget: config.node_budget, visited: seen, per_genus: Vec::new() });
        }
        let mut kids: Vec<_> = children(&node).collect();
        kids.reverse();
        stack.extend(kids);
        out.push(Work::Node(node));
    }
    Ok(out)
}

/// Runs the survey, handing each record to `sink` in depth-first order
/// regardless of `jobs`.
pub fn survey_streaming(config: &SurveyConfig, mut sink: impl FnMut(&SurveyRecord)) -> Result<SurveyReport> {
    let visited = Arc::new(AtomicU64::new(0));
    let mut report = SurveyReport::new(config.max_genus, &config.predicates);
    let work = frontier(config, &visited)?;
    let chunks: Vec<Result<Chunk>> = if config.jobs <= 1 {
        work.into_iter().map(|w| run_work(w, config, &visited)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.jobs)
            .build()
            .map_err(|e| crate::error::inconsistent(format!("thread pool: {e}")))?;
        pool.install(|| work.into_par_iter().map(|w| run_work(w, config, &visited)).collect())
    };
    let mut first_error = None;
    for chunk in chunks {
        match chunk {
            Ok(chunk) => {
                for (total, n) in report.per_genus.iter_mut().zip(&chunk.per_genus) {
                    *total += n;
                }
                for r in &chunk.records {
                    report.absorb(r);
                    sink(r);
                }
            }
            Err(e) => {
                first_error.get_or_insert(e);
            }
        }
    }
    match first_error {
        Some(Error::ResourceLimit { budget, visited, .. }) => {
            Err(Error::ResourceLimit { budget, visited, per_genus: report.per_genus })
        }
        Some(e) => Err(e),
        None => Ok(report),
    }
}

pub fn survey(config: &SurveyConfig) -> Result<SurveyReport> {
    survey_streaming(config, |_| {})
}

#[derive(Serialize)]
struct SummaryLine<'a> {
    summary: &'a SurveyReport,
}

pub fn record_json(record: &SurveyRecord) -> String {
    serde_json::to_string(record).expect("records serialise")
}

pub fn summary_json(report: &SurveyReport) -> String {
    serde_json::to_string(&SummaryLine { summary: report }).expect("reports serialise")
}

/// Runs the survey and returns the full JSONL text: one line per semigroup
/// and a final `{"summary": …}` line.
pub fn survey_jsonl(config: &SurveyConfig) -> Result<(String, SurveyReport)> {
    let mut out = String::new();
    let report = survey_streaming(config, |r| {
        out.push_str(&record_json(r));
        out.push('\n');
    })?;
    out.push_str(&summary_json(&report));
    out.push('\n');
    Ok((out, report))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens(ns: &NumericalSemigroup) -> Vec<u64> {
        ns.minimal_generators().to_vec()
    }

    #[test]
    fn genus_zero_and_two() {
        let all: Vec<_> = enumerate_genus(0).map(Result::unwrap).collect();
        assert_eq!(all.len(), 1);
        assert!(all[0].is_naturals());
        let all: Vec<_> = enumerate_genus(2).map(Result::unwrap).collect();
        assert_eq!(all.iter().map(gens).collect::<Vec<_>>(), vec![vec![1], vec![2, 3], vec![3, 4, 5], vec![2, 5]]);
        assert_eq!(count_by_genus(2, DEFAULT_NODE_BUDGET), Ok(vec![1, 1, 2]));
    }

    #[test]
    fn known_counts() {
        assert_eq!(count_by_genus(10, DEFAULT_NODE_BUDGET).unwrap(), vec![1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204]);
    }

    #[test]
    fn budget_exhaustion_reports_progress() {
        match count_by_genus(6, 10) {
            Err(Error::ResourceLimit { budget: 10, visited: 10, per_genus }) => {
                assert_eq!(per_genus.iter().sum::<u64>(), 10);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn oracle_small() {
        let o = oracle_enumerate(3).unwrap();
        assert_eq!(o.per_genus, vec![1, 1, 2, 4]);
        assert_eq!(o.gap_sets[1], vec![vec![1]]);
        assert!(oracle_enumerate(11).is_err());
    }

    #[test]
    fn tree_matches_oracle_gap_sets() {
        let o = oracle_enumerate(6).unwrap();
        let mut tree = vec![Vec::new(); 7];
        for ns in enumerate_genus(6) {
            let ns = ns.unwrap();
            tree[ns.genus() as usize].push(ns.gaps().to_vec());
        }
        for sets in &mut tree {
            sets.sort();
        }
        assert_eq!(tree, o.gap_sets);
    }

    #[test]
    fn remove_generator_guards() {
        let ns = NumericalSemigroup::from_generators(&[3, 4, 5]).unwrap();
        assert_eq!(remove_generator(&ns, 4).unwrap().minimal_generators(), &[3, 5, 7]);
        assert_eq!(remove_generator(&ns, 6), Err(Error::NotAMember(6)));
        assert_eq!(remove_generator(&ns, 2), Err(Error::NotAMember(2)));
    }

    #[test]
    fn predicate_names_round_trip() {
        for p in Predicate::ALL {
            assert_eq!(p.name().parse::<Predicate>(), Ok(p));
            assert_eq!(serde_json::to_string(&p).unwrap(), format!("\"{}\"", p.name()));
        }
        assert_eq!(parse_predicates("bound,wilf,wilf").unwrap(), vec![Predicate::Wilf, Predicate::Bound]);
        assert!(parse_predicates("wilf,nope").is_err());
        assert_eq!(parse_predicates("all").unwrap().len(), 14);
    }

    #[test]
    fn small_survey() {
        let report = survey(&SurveyConfig::new(8, &[Predicate::Wilf, Predicate::Frogo, Predicate::MuHist])).unwrap();
        assert_eq!(report.per_genus, vec![1, 1, 2, 4, 7, 12, 23, 39, 67]);
        let t = &report.tallies[&Predicate::Wilf];
        assert_eq!((t.checked, t.violated), (report.total() - 1, 0));
        assert_eq!(report.violations(Predicate::Frogo), 0);
        assert_eq!(report.mu_hist.iter().map(|h| h.count).sum::<u64>(), report.total() - 1);
        assert!(mu_hist_csv(&report).starts_with("mu,e,t_plus_one,count\n"));
    }

    #[test]
    fn parallel_output_is_identical() {
        let preds = parse_predicates("wilf,bound,frogo,thm42,prop43,mu_hist").unwrap();
        let mut config = SurveyConfig::new(9, &preds);
        let (seq, seq_report) = survey_jsonl(&config).unwrap();
        config.jobs = 3;
        config.split_depth = 3;
        let (par, par_report) = survey_jsonl(&config).unwrap();
        assert_eq!(seq, par);
        assert_eq!(seq_report, par_report);
        assert_eq!(seq, survey_jsonl(&SurveyConfig::new(9, &preds)).unwrap().0);
    }

    #[test]
    fn injected_violation_is_recorded() {
        let ns = NumericalSemigroup::from_generators(&[6, 8, 35]).unwrap();
        let mut rec = evaluate(&ns, &[Predicate::Wilf]).unwrap().unwrap();
        let mut report = SurveyReport::new(30, &[Predicate::Wilf]);
        report.absorb(&rec);
        assert_eq!(report.violations(Predicate::Wilf), 0);
        rec.verdicts.insert(Predicate::Wilf, false);
        report.absorb(&rec);
        assert_eq!(report.violations(Predicate::Wilf), 1);
        assert_eq!(report.counterexamples, vec![Counterexample { predicate: Predicate::Wilf, generators: vec![6, 8, 35] }]);
    }

    #[test]
    fn naturals_is_skipped() {
        assert_eq!(evaluate(&NumericalSemigroup::naturals(), &Predicate::ALL), Ok(None));
    }
}
