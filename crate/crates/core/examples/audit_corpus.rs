// Auditing a mixed corpus and writing CSV and JSON reports.

use sigdom::audit::{audit_corpus, CorpusKind, CorpusSpec, CsvReportWriter, JsonReportWriter};

pub fn run() -> sigdom::Result<()> {
    let spec = CorpusSpec::new(
        vec![
            CorpusKind::Cycles { n_min: 3, n_max: 8 },
            CorpusKind::RandomTrees { n_min: 6, n_max: 10, count: 20 },
            CorpusKind::RandomConnected { n_min: 6, n_max: 10, p: 0.5, count: 20 },
        ],
        2024,
    );
    let mut csv = CsvReportWriter::new(Vec::new())?;
    let mut json = JsonReportWriter::new(Vec::new())?;
    let summary = audit_corpus(&spec, |report| {
        csv.write(report)?;
        json.write(report)
    })?;
    let csv = csv.finish()?;
    let json = json.finish(&summary)?;

    print!("{summary}");
    println!("csv: {} rows, json: {} bytes", csv.split(|&b| b == b'\n').count() - 2, json.len());
    assert_eq!(summary.violations, 0);
    Ok(())
}

#[allow(dead_code)]
fn main() -> sigdom::Result<()> {
    run()
}
