//! Writes the all-A state graph of the (2,5) torus knot as DOT and JSON.

use statesurf::diagram::LinkDiagram;
use statesurf::export;
use statesurf::state::{self, KauffmanState};

pub fn run_example() -> statesurf::Result<()> {
    let d: LinkDiagram = "X(5,10,6,1) X(1,6,2,7) X(7,2,8,3) X(3,8,4,9) X(9,4,10,5)".parse()?;
    let g = state::state_graph(&d, &KauffmanState::all_a(&d))?;
    let reduced = g.reduce();
    print!("{}", export::state_graph_dot(&g, "G_A"));
    print!("{}", export::reduced_graph_dot(&reduced, "G_A_reduced"));
    println!("{}", export::graphs_json(&g, &reduced));
    Ok(())
}

fn main() -> statesurf::Result<()> {
    run_example()
}
