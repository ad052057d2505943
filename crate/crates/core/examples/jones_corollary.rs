//! Jones polynomials and the coefficient test for fibered checkerboard
//! surfaces.

use statesurf::diagram::LinkDiagram;
use statesurf::jones;

const KNOTS: &[(&str, &str)] = &[
    ("trefoil", "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"),
    (
        "figure-eight",
        "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)",
    ),
    (
        "5_2",
        "X(1,4,2,5) X(3,8,4,9) X(5,10,6,1) X(9,6,10,7) X(7,2,8,3)",
    ),
    (
        "6_3",
        "X(4,2,5,1) X(8,4,9,3) X(12,9,1,10) X(10,5,11,6) X(6,11,7,12) X(2,8,3,7)",
    ),
];

pub fn run_example() -> statesurf::Result<()> {
    for (name, pd) in KNOTS {
        let d: LinkDiagram = pd.parse()?;
        let report = jones::check_corollary(&d, statesurf::DEFAULT_CAP)?;
        println!("{name}: J = {}", report.jones.polynomial);
        for side in report.a_side.iter().chain(&report.b_side) {
            println!(
                "  {:?} side: coefficient {}, chi(G') {}, fiber {}, consistent {}",
                side.state,
                side.coefficient,
                side.reduced_chi,
                side.fiber,
                side.consistent()
            );
        }
    }
    Ok(())
}

fn main() -> statesurf::Result<()> {
    run_example()
}
