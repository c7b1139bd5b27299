//! Corpus sweeps comparing the brute-force and structural deciders.

use std::fmt::Write as _;
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::constructors::{build_with_caps, GroupSpec};
use crate::error::{Error, Result};
use crate::genset::{GenSearch, GenSetSearchConfig, RankProperty};
use crate::group::{Caps, Group};
use crate::structure::{
    decide_independence_structural, decide_rank_independence_structural, StructuralVerdict,
};

pub const TSV_HEADER: &str =
    "spec\torder\td\tm\tbrute_ind\tstruct_ind\tbrute_rank\tstruct_rank\tagree\tms";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EvalOptions {
    /// `m(G)` is only computed for groups up to this order.
    pub m_cap: usize,
    pub search: GenSetSearchConfig,
    /// Record wall-clock time per row; off keeps reports byte-identical
    /// across runs.
    pub timings: bool,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions {
            m_cap: 128,
            search: GenSetSearchConfig::default(),
            timings: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Agreement {
    Agree,
    Disagree,
    /// No disagreement, but a structural verdict was undecided.
    Undecided,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub spec: String,
    pub order: usize,
    pub d: usize,
    pub m: Option<usize>,
    pub brute_ind: bool,
    pub struct_ind: StructuralVerdict,
    pub brute_rank: RankProperty,
    pub struct_rank: StructuralVerdict,
    pub agreement: Agreement,
    pub ms: Option<u128>,
}

fn compare(brute: bool, structural: StructuralVerdict) -> Agreement {
    match structural.as_bool() {
        None => Agreement::Undecided,
        Some(s) if s == brute => Agreement::Agree,
        Some(_) => Agreement::Disagree,
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "Y"
    } else {
        "N"
    }
}

fn verdict_cell(v: StructuralVerdict) -> String {
    match v {
        StructuralVerdict::True => "Y".into(),
        StructuralVerdict::False(_) => "N".into(),
        StructuralVerdict::VacuousCyclic => "V".into(),
        StructuralVerdict::Undecided(r) => format!("U:{r}"),
    }
}

impl ReportRow {
    pub fn to_tsv_line(&self) -> String {
        let brute_rank = match self.brute_rank {
            RankProperty::Holds => "Y",
            RankProperty::Fails => "N",
            RankProperty::VacuousCyclic => "V",
        };
        let agree = match self.agreement {
            Agreement::Agree => "Y",
            Agreement::Disagree => "N",
            Agreement::Undecided => "U",
        };
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.spec,
            self.order,
            self.d,
            self.m.map_or("-".into(), |m| m.to_string()),
            yes_no(self.brute_ind),
            verdict_cell(self.struct_ind),
            brute_rank,
            verdict_cell(self.struct_rank),
            agree,
            self.ms.map_or("-".into(), |t| t.to_string()),
        )
    }
}

/// Runs both deciders for both properties on one group.
pub fn evaluate(spec: &str, g: &Group, opts: &EvalOptions) -> Result<ReportRow> {
    let start = Instant::now();
    let search = GenSearch::with_config(g, opts.search)?;
    let d = search.d()?;
    let m = if g.order() <= opts.m_cap {
        Some(search.m()?)
    } else {
        None
    };
    let brute_ind = search.has_independence_property()?;
    let brute_rank = search.has_rank_independence_property()?;
    let struct_ind = decide_independence_structural(g)?;
    let struct_rank = decide_rank_independence_structural(g)?;
    let agreement = match (
        compare(brute_ind, struct_ind),
        compare(brute_rank.as_bool(), struct_rank),
    ) {
        (Agreement::Disagree, _) | (_, Agreement::Disagree) => Agreement::Disagree,
        (Agreement::Undecided, _) | (_, Agreement::Undecided) => Agreement::Undecided,
        _ => Agreement::Agree,
    };
    Ok(ReportRow {
        spec: spec.to_string(),
        order: g.order(),
        d,
        m,
        brute_ind,
        struct_ind,
        brute_rank,
        struct_rank,
        agreement,
        ms: opts.timings.then(|| start.elapsed().as_millis()),
    })
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub agreements: usize,
    pub disagreements: usize,
    pub undecided: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub rows: Vec<ReportRow>,
}

impl RunReport {
    pub fn summary(&self) -> Summary {
        let mut s = Summary::default();
        for r in &self.rows {
            match r.agreement {
                Agreement::Agree => s.agreements += 1,
                Agreement::Disagree => s.disagreements += 1,
                Agreement::Undecided => s.undecided += 1,
            }
        }
        s
    }

    pub fn passed(&self) -> bool {
        self.summary().disagreements == 0
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from(TSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            let _ = writeln!(out, "{}", r.to_tsv_line());
        }
        out
    }
}

/// Evaluates every spec, keeping corpus order; `jobs` bounds the number of
/// groups evaluated at once.
pub fn run_corpus(
    specs: &[GroupSpec],
    caps: Caps,
    opts: &EvalOptions,
    jobs: Option<usize>,
) -> Result<RunReport> {
    let work = || -> Result<Vec<ReportRow>> {
        specs
            .par_iter()
            .map(|s| {
                let g = build_with_caps(s, caps)?;
                evaluate(&s.to_string(), &g, opts)
            })
            .collect()
    };
    let rows = match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| Error::InvalidSpec(format!("thread pool: {e}")))?
            .install(work)?,
        None => work()?,
    };
    Ok(RunReport { rows })
}

pub fn emit_report(report: &RunReport, path: &Path) -> Result<()> {
    std::fs::write(path, report.to_tsv()).map_err(|e| Error::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_is_header_only() {
        let r = RunReport::default();
        assert_eq!(r.to_tsv(), format!("{TSV_HEADER}\n"));
        assert!(r.passed());
    }

    #[test]
    fn c12_row() {
        let specs = vec!["C12".parse().unwrap(), "Q8".parse().unwrap()];
        let r = run_corpus(&specs, Caps::default(), &EvalOptions::default(), Some(1)).unwrap();
        assert_eq!(r.rows[0].to_tsv_line(), "C12\t12\t1\t2\tN\tN\tV\tV\tY\t-");
        assert_eq!(r.rows[1].to_tsv_line(), "Q8\t8\t2\t2\tY\tY\tY\tY\tY\t-");
        assert_eq!(r.summary().agreements, 2);
    }

    #[test]
    fn timings_are_optional() {
        let g = crate::build_str("Sym3").unwrap();
        let opts = EvalOptions {
            timings: true,
            ..EvalOptions::default()
        };
        assert!(evaluate("Sym3", &g, &opts).unwrap().ms.is_some());
    }
}
