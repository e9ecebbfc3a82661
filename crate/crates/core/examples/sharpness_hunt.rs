// Listing the graphs of a corpus on which a bound is attained.

use sigdom::audit::{hunt, CorpusKind, CorpusSpec};
use sigdom::BoundName;

pub fn run() -> sigdom::Result<()> {
    let trees = CorpusSpec::new(vec![CorpusKind::TreesExhaustive { n_min: 4, n_max: 6 }], 0);
    for target in [BoundName::TreeCoreLower, BoundName::TreeSupportLower, BoundName::TreeOrderLower] {
        let found = hunt(&trees, target)?;
        println!("{target}: {} distinct trees, first {:?}", found.len(), found.first());
    }

    let dense = CorpusSpec::new(vec![CorpusKind::RandomConnected { n_min: 6, n_max: 9, p: 0.8, count: 30 }], 9);
    let found = hunt(&dense, BoundName::PackingUpper)?;
    println!("packing_upper on dense graphs: {found:?}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> sigdom::Result<()> {
    run()
}
