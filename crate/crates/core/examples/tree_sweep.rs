// Sweeping every labeled tree of a given order and tallying how often each
// tree bound is attained.

use sigdom::bounds::tree_lower_bounds;
use sigdom::{enumerate_labeled_trees, signed_domination, Mode, StructuralProfile};

pub fn run() -> sigdom::Result<()> {
    for n in 2..=7 {
        let mut sharp = [0usize; 3];
        let mut total = 0;
        for tree in enumerate_labeled_trees(n)? {
            let (gamma_s, _) = signed_domination(&tree, Mode::BranchAndBound)?;
            let bounds = tree_lower_bounds(&StructuralProfile::of(&tree))?;
            for (i, b) in bounds.iter().enumerate() {
                assert_eq!(b.admits(gamma_s), Some(true));
                sharp[i] += usize::from(b.tightened == Some(gamma_s));
            }
            total += 1;
        }
        println!("n={n}: {total:>6} trees, sharp core/support/order = {sharp:?}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> sigdom::Result<()> {
    run()
}
