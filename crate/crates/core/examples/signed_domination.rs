// Exact signed domination with both solver modes and certificate checks.

use sigdom::{generate, partition_stats, verify_sdf, GraphKind, Mode, SignedFunction, Solver};

pub fn run() -> sigdom::Result<()> {
    let cases = [
        ("P7", GraphKind::Path { n: 7 }, 5),
        ("C6", GraphKind::Cycle { n: 6 }, 2),
        ("K1,4", GraphKind::Star { n: 5 }, 5),
        ("K5", GraphKind::Complete { n: 5 }, 1),
    ];
    for (name, kind, expected) in cases {
        let g = generate(&kind, 0)?;
        let (bnb, f) = Solver::new(Mode::BranchAndBound).signed_domination(&g)?;
        let (oracle, f2) = Solver::new(Mode::Oracle).signed_domination(&g)?;
        assert_eq!((bnb, oracle), (expected, expected));
        // both modes return the same lex-least optimum
        assert_eq!(f, f2);
        assert!(verify_sdf(&g, &f)?.is_empty());
        println!("{name:5} gamma_s = {bnb:2}  witness {f}");
    }

    let c6 = generate(&GraphKind::Cycle { n: 6 }, 0)?;
    let bad = SignedFunction::from_negative_set(6, [0, 1]);
    println!("C6 with -1 on {{0, 1}} fails at {:?}", verify_sdf(&c6, &bad)?);

    let g = generate(&GraphKind::RandomConnected { n: 30, p: 0.25 }, 3)?;
    let (w, f) = sigdom::signed_domination(&g, Mode::BranchAndBound)?;
    let stats = partition_stats(&g, &f)?;
    println!(
        "G(30, 0.25): gamma_s = {w}, |V-| = {}, edges +/-/cut = {}/{}/{}",
        f.negative().len(),
        stats.positive_edges,
        stats.negative_edges,
        stats.cut_edges
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> sigdom::Result<()> {
    run()
}
