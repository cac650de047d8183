//! Named reference semigroups and the two summary tables built from them.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;
use crate::semimodule::gap_profiles;
use crate::spec_string::parse_semigroup;
use crate::wilf::{mu, wilf_value};

/// Five semigroups with a large gap between `e` and `μ`, as spec strings.
pub const WIDE_GAP_FAMILY: [(&str, &str); 5] = [
    ("S1", "162,1114,1115@9879"),
    ("S2", "222,1532,1533@16647"),
    ("S3", "172,327,328@3437"),
    ("S4", "88,100,102@566"),
    ("S5", "88,100,343,345,346,351,361,679,680,681,687,693@700"),
];

pub const GAP_TABLE_SEMIGROUP: &str = "6,8,35";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WilfRow {
    pub label: String,
    pub delta: u64,
    pub conductor: u64,
    pub e: usize,
    pub mu: u64,
    pub e_minus_mu: i64,
    pub wilf_at_e: i64,
    pub wilf_at_mu: i64,
}

pub fn wilf_row(label: &str, ns: &NumericalSemigroup) -> Result<WilfRow> {
    let e = ns.embedding_dimension();
    let mu = mu(ns);
    Ok(WilfRow {
        label: label.to_string(),
        delta: ns.delta(),
        conductor: ns.conductor(),
        e,
        mu,
        e_minus_mu: e as i64 - mu as i64,
        wilf_at_e: wilf_value(ns, e as u64)?,
        wilf_at_mu: wilf_value(ns, mu)?,
    })
}

pub fn wide_gap_rows() -> Result<Vec<WilfRow>> {
    WIDE_GAP_FAMILY.iter().map(|(label, spec)| wilf_row(label, &parse_semigroup(spec)?)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapRow {
    pub gap: u64,
    pub wilf: i64,
}

/// `W(g)` for every gap, in increasing order of `g`.
pub fn gap_rows(ns: &NumericalSemigroup) -> Result<Vec<GapRow>> {
    if ns.is_naturals() {
        return Err(Error::NaturalsUnsupported);
    }
    Ok(gap_profiles(ns).iter().map(|p| GapRow { gap: p.gap, wilf: p.wilf() }).collect())
}

pub fn wide_gap_table_text(rows: &[WilfRow]) -> String {
    let mut out = String::from("i\tdelta\tc\te\tmu\te-mu\tW(e)\tW(mu)\n");
    for r in rows {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            r.label, r.delta, r.conductor, r.e, r.mu, r.e_minus_mu, r.wilf_at_e, r.wilf_at_mu
        ));
    }
    out
}

pub fn gap_table_text(rows: &[GapRow]) -> String {
    let mut out = String::from("g\tW(g)\n");
    for r in rows {
        out.push_str(&format!("{}\t{}\n", r.gap, r.wilf));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wide_gap_rows_computed() {
        let rows = wide_gap_rows().unwrap();
        let got: Vec<_> =
            rows.iter().map(|r| (r.delta, r.conductor, r.e, r.mu, r.e_minus_mu, r.wilf_at_e, r.wilf_at_mu)).collect();
        assert_eq!(
            got,
            vec![
                (1109, 9879, 110, 9, 101, 112111, 102),
                (1935, 16647, 147, 9, 138, 267798, 768),
                (505, 3437, 97, 7, 90, 45548, 98),
                (63, 566, 63, 9, 54, 3403, 1),
                (100, 700, 51, 7, 44, 4400, 0),
            ]
        );
    }

    #[test]
    fn gap_rows_six_eight_thirty_five() {
        let ns = parse_semigroup(GAP_TABLE_SEMIGROUP).unwrap();
        let rows = gap_rows(&ns).unwrap();
        assert_eq!(rows.len(), 23);
        assert_eq!(rows[1], GapRow { gap: 2, wilf: 2 });
        assert!(gap_table_text(&rows).starts_with("g\tW(g)\n1\t0\n2\t2\n"));
        assert!(gap_rows(&NumericalSemigroup::naturals()).is_err());
    }
}
