// Degree statistics, leaves, supports and the forced-positive core.

use sigdom::{generate, GraphKind, StructuralProfile};

pub fn run() -> sigdom::Result<()> {
    let spider = generate(&GraphKind::Spider { legs: 3, leg_len: 2 }, 0)?;
    let p = StructuralProfile::of(&spider);
    println!("spider S(3,2): n={} delta={} Delta={}", p.n, spider.min_degree(), spider.max_degree());
    println!("  leaves   {:?}", p.leaves);
    println!("  supports {:?}", p.supports);
    println!("  core     {:?}", p.core);
    assert_eq!(p.leaves, vec![2, 4, 6]);
    assert_eq!(p.supports, vec![1, 3, 5]);
    assert_eq!(p.core, vec![0]);

    // every vertex of a star is a leaf or a support
    let star = StructuralProfile::of(&generate(&GraphKind::Star { n: 6 }, 0)?);
    assert!(star.core.is_empty());
    assert_eq!(star.forced_positive().len(), 6);
    println!("star K1,5: all {} vertices forced to +1", star.forced_positive().len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> sigdom::Result<()> {
    run()
}
