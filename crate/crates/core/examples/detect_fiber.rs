//! Fiber verdicts for a few diagrams and states, with their witnesses.

use statesurf::diagram::LinkDiagram;
use statesurf::fiber;
use statesurf::report::verdict_text;
use statesurf::state::KauffmanState;

const CASES: &[(&str, &str, &str)] = &[
    ("trefoil", "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)", "all-a"),
    ("trefoil", "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)", "all-b"),
    (
        "figure-eight",
        "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)",
        "all-a",
    ),
    (
        "figure-eight",
        "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)",
        "seifert",
    ),
    ("unlink", "O O", "all-a"),
    (
        "kinked trefoil",
        "X(1,6,2,7) X(5,8,6,1) X(7,4,8,5) X(2,3,3,4)",
        "AAAB",
    ),
    ("unknot", "O", "all-a"),
];

pub fn run_example() -> statesurf::Result<()> {
    for (name, pd, selector) in CASES {
        let d: LinkDiagram = pd.parse()?;
        let sigma = KauffmanState::select(&d, selector)?;
        let v = fiber::detect_fiber(&d, &sigma)?;
        println!("{name} [{selector}]: {}", verdict_text(&v));
    }
    Ok(())
}

fn main() -> statesurf::Result<()> {
    run_example()
}
