//! Report writers for corpus audits.
//!
//! CSV: one row per graph with the fixed header
//! `graph_id,n,m,delta,Delta,delta_star,leaves,supports,gamma_s,gamma,rho`,
//! then `<bound>,<bound>_gap` for every bound (the raw value as an exact
//! rational, and the gap to the tightened value) and one status column per
//! invariant check. Inapplicable entries are `NA`.
//!
//! JSON: `{"reports":[...],"summary":{...}}`, one object per graph in index
//! order, with the summary last.

use std::io::Write;

use super::{BoundReport, CheckName, CorpusSummary};
use crate::bounds::BoundName;
use crate::error::Result;

const NA: &str = "NA";

pub struct CsvReportWriter<W: Write> {
    inner: csv::Writer<W>,
}

impl<W: Write> CsvReportWriter<W> {
    pub fn new(out: W) -> Result<Self> {
        let mut inner = csv::Writer::from_writer(out);
        inner.write_record(Self::header())?;
        Ok(CsvReportWriter { inner })
    }

    pub fn header() -> Vec<String> {
        let mut cols: Vec<String> = [
            "graph_id", "n", "m", "delta", "Delta", "delta_star", "leaves", "supports", "gamma_s",
            "gamma", "rho",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect();
        for name in BoundName::ALL {
            cols.push(name.as_str().to_string());
            cols.push(format!("{}_gap", name.as_str()));
        }
        cols.extend(CheckName::ALL.iter().map(|c| c.as_str().to_string()));
        cols
    }

    pub fn write(&mut self, report: &BoundReport) -> Result<()> {
        let p = &report.profile;
        let mut row = vec![
            report.graph_id.clone(),
            report.n.to_string(),
            report.m.to_string(),
            p.delta.to_string(),
            p.max_degree.to_string(),
            p.delta_star.map_or(NA.into(), |d| d.to_string()),
            p.leaves.to_string(),
            p.supports.to_string(),
            report.exact.gamma_s.to_string(),
            report.exact.gamma.to_string(),
            report.exact.rho.to_string(),
        ];
        for name in BoundName::ALL {
            let outcome = report.bound(name).filter(|b| b.bound.applicable);
            row.push(
                outcome
                    .and_then(|b| b.bound.raw)
                    .map_or(NA.into(), |r| r.to_string()),
            );
            row.push(outcome.and_then(|b| b.gap).map_or(NA.into(), |g| g.to_string()));
        }
        for name in CheckName::ALL {
            row.push(report.check(name).map_or(NA, |c| c.status.as_str()).to_string());
        }
        self.inner.write_record(&row)?;
        Ok(())
    }

    pub fn finish(self) -> Result<W> {
        self.inner
            .into_inner()
            .map_err(|e| crate::Error::Io(e.into_error()))
    }
}

pub struct JsonReportWriter<W: Write> {
    out: W,
    first: bool,
}

impl<W: Write> JsonReportWriter<W> {
    pub fn new(mut out: W) -> Result<Self> {
        out.write_all(b"{\"reports\":[")?;
        Ok(JsonReportWriter { out, first: true })
    }

    pub fn write(&mut self, report: &BoundReport) -> Result<()> {
        if !self.first {
            self.out.write_all(b",")?;
        }
        self.first = false;
        self.out.write_all(b"\n")?;
        serde_json::to_writer(&mut self.out, report)?;
        Ok(())
    }

    pub fn finish(mut self, summary: &CorpusSummary) -> Result<W> {
        self.out.write_all(b"\n],\"summary\":")?;
        serde_json::to_writer(&mut self.out, summary)?;
        self.out.write_all(b"}\n")?;
        self.out.flush()?;
        Ok(self.out)
    }
}
