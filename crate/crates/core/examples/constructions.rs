// Building signed dominating functions from limited packings, and moving
// along the packing and tuple-domination chains.

use sigdom::construct::{
    augment_packing, greedy_limited_packing, sdf_from_limited_packing, shrink_tuple_dominating,
};
use sigdom::{
    generate, limited_packing_number, packing_number, signed_domination, tuple_domination_number,
    verify_sdf, GraphKind, Mode,
};

pub fn run() -> sigdom::Result<()> {
    let mode = Mode::BranchAndBound;
    let g = generate(&GraphKind::RandomConnected { n: 16, p: 0.45 }, 2)?;
    let half = g.min_degree() / 2;
    println!("G(16, 0.45): delta = {}, packing level {half}", g.min_degree());

    let (l, packing) = limited_packing_number(&g, half, mode)?;
    let f = sdf_from_limited_packing(&g, &packing)?;
    assert!(verify_sdf(&g, &f)?.is_empty());
    let (gamma_s, _) = signed_domination(&g, mode)?;
    println!("  maximum packing {packing} gives weight {} (gamma_s = {gamma_s})", f.weight());
    assert_eq!(f.weight(), 16 - 2 * l as i64);

    let greedy = greedy_limited_packing(&g, half)?;
    println!("  greedy packing has {} members, weight {}", greedy.len(), sdf_from_limited_packing(&g, &greedy)?.weight());

    // climb from a maximum packing to level ⌊δ/2⌋
    let (rho, mut b) = packing_number(&g, mode)?;
    for k in 1..half {
        b = augment_packing(&g, &b, k)?;
    }
    println!("  rho = {rho}, augmented to {} members at level {half}", b.len());
    assert!(l >= b.len());

    let k = g.min_degree() + 1;
    let (_, mut d) = tuple_domination_number(&g, k, mode)?;
    for level in (2..=k).rev() {
        d = shrink_tuple_dominating(&g, &d, level)?;
    }
    println!("  shrinking a {k}-tuple dominating set down to level 1 leaves {d}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> sigdom::Result<()> {
    run()
}
