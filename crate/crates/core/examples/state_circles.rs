//! Resolves every state of the trefoil and reports circles and regions.

use statesurf::diagram::LinkDiagram;
use statesurf::state::{self, KauffmanState};

pub fn run_example() -> statesurf::Result<()> {
    let d: LinkDiagram = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)".parse()?;
    for sigma in state::enumerate_states(&d, statesurf::DEFAULT_CAP)? {
        let circles = state::resolve(&d, &sigma)?;
        let regions = state::regions(&d, &sigma)?;
        println!(
            "{sigma}: {} circles, {} regions, homogeneous {}, adequate {}, chi(S) {}",
            circles.count,
            regions.region_count,
            state::is_homogeneous(&d, &sigma)?,
            state::is_adequate(&d, &sigma)?,
            state::euler_characteristic_of_surface(&d, &sigma)?,
        );
    }
    let seifert = KauffmanState::seifert(&d)?;
    println!("Seifert state: {seifert}");
    Ok(())
}

fn main() -> statesurf::Result<()> {
    run_example()
}
