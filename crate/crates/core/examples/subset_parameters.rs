// Domination, k-tuple domination, k-limited packing and packing numbers.

use sigdom::{
    domination_number, generate, limited_packing_number, packing_number, tuple_domination_number,
    GraphKind, Mode,
};

pub fn run() -> sigdom::Result<()> {
    let mode = Mode::BranchAndBound;
    let p7 = generate(&GraphKind::Path { n: 7 }, 0)?;
    let (gamma, d) = domination_number(&p7, mode)?;
    println!("P7: gamma = {gamma} via {d}");
    assert_eq!(gamma, 3);

    let c6 = generate(&GraphKind::Cycle { n: 6 }, 0)?;
    let (rho, b) = packing_number(&c6, mode)?;
    let (l2, b2) = limited_packing_number(&c6, 2, mode)?;
    let (t2, d2) = tuple_domination_number(&c6, 2, mode)?;
    println!("C6: rho = {rho} via {b}, L2 = {l2} via {b2}, gamma_x2 = {t2} via {d2}");
    assert_eq!((rho, l2, t2), (2, 4, 4));

    // L_k grows and gamma_xk grows with k
    let g = generate(&GraphKind::RandomConnected { n: 14, p: 0.5 }, 11)?;
    let levels: Vec<usize> = (1..=g.max_degree() + 1)
        .map(|k| limited_packing_number(&g, k, mode).map(|(v, _)| v))
        .collect::<sigdom::Result<_>>()?;
    let tuples: Vec<usize> = (1..=g.min_degree() + 1)
        .map(|k| tuple_domination_number(&g, k, mode).map(|(v, _)| v))
        .collect::<sigdom::Result<_>>()?;
    println!("G(14, 0.5): L_k = {levels:?}");
    println!("            gamma_xk = {tuples:?}");
    assert!(tuples.windows(2).all(|w| w[0] < w[1]));

    assert!(tuple_domination_number(&g, g.min_degree() + 2, mode).is_err());
    Ok(())
}

#[allow(dead_code)]
fn main() -> sigdom::Result<()> {
    run()
}
