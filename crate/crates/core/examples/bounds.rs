// Evaluating the closed-form bounds on a few graphs and comparing them with
// the exact value.

use sigdom::bounds::evaluate_all;
use sigdom::{
    domination_number, generate, packing_number, signed_domination, GraphKind, Mode,
    StructuralProfile,
};

pub fn run() -> sigdom::Result<()> {
    let mode = Mode::BranchAndBound;
    for (name, kind) in [
        ("P7", GraphKind::Path { n: 7 }),
        ("K6", GraphKind::Complete { n: 6 }),
        ("spider", GraphKind::Spider { legs: 4, leg_len: 3 }),
        ("G(12, 0.4)", GraphKind::RandomConnected { n: 12, p: 0.4 }),
    ] {
        let g = generate(&kind, 5)?;
        let profile = StructuralProfile::of(&g);
        let (gamma_s, _) = signed_domination(&g, mode)?;
        let (rho, _) = packing_number(&g, mode)?;
        let (gamma, _) = domination_number(&g, mode)?;
        println!("{name}: gamma_s = {gamma_s}");
        for b in evaluate_all(&profile, rho, gamma).iter().filter(|b| b.applicable) {
            let (raw, t) = (b.raw.unwrap(), b.tightened.unwrap());
            let mark = if t == gamma_s { "  sharp" } else { "" };
            println!("  {:<20} {:?} raw {raw:>6} tightened {t:>3}{mark}", b.name.as_str(), b.kind);
            assert_eq!(b.admits(gamma_s), Some(true));
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> sigdom::Result<()> {
    run()
}
