//! Splits the Seifert-state graphs of the granny and square knots into
//! blocks and judges each summand.

use statesurf::diagram::LinkDiagram;
use statesurf::fiber;
use statesurf::state::KauffmanState;

const KNOTS: &[(&str, &str)] = &[
    (
        "granny",
        "X(12,3,1,4) X(10,1,11,2) X(2,11,3,12) X(7,4,8,5) X(9,6,10,7) X(5,8,6,9)",
    ),
    (
        "square",
        "X(12,3,1,4) X(10,1,11,2) X(2,11,3,12) X(4,8,5,7) X(6,10,7,9) X(8,6,9,5)",
    ),
];

pub fn run_example() -> statesurf::Result<()> {
    for (name, pd) in KNOTS {
        let d: LinkDiagram = pd.parse()?;
        let sigma = KauffmanState::seifert(&d)?;
        let dec = fiber::murasugi_decompose(&d, &sigma)?;
        println!("{name}, state {sigma}: cut vertices {:?}", dec.cut_vertices);
        for (i, b) in dec.blocks.iter().enumerate() {
            println!(
                "  block {i}: crossings {:?}, labels {:?}, tree {}",
                b.crossings,
                b.labels,
                b.is_tree()
            );
        }
        let composed = fiber::compose_verdicts(&dec);
        let direct = fiber::detect_fiber(&d, &sigma)?;
        println!(
            "  composed {:?}, direct {:?}",
            composed.kind(),
            direct.kind()
        );
        assert_eq!(composed.kind(), direct.kind());
    }
    Ok(())
}

fn main() -> statesurf::Result<()> {
    run_example()
}
