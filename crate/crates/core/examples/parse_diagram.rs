//! Parses PD codes and prints the basic invariants of each diagram.

use statesurf::diagram::{LinkDiagram, Sign};

const DIAGRAMS: &[(&str, &str)] = &[
    ("trefoil", "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"),
    (
        "figure-eight",
        "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)",
    ),
    ("hopf", "X(4,2,3,1) X(1,3,2,4)"),
    ("trefoil + unknot", "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3) O"),
];

pub fn run_example() -> statesurf::Result<()> {
    for (name, pd) in DIAGRAMS {
        let d: LinkDiagram = pd.parse()?;
        println!(
            "{name}: {} crossings, {} components, {} faces, writhe {}, alternating {}, connected {}",
            d.crossing_count(),
            d.link_components(),
            d.faces().len(),
            d.writhe()?,
            d.is_alternating(),
            d.is_connected(),
        );
        if d.is_connected() {
            println!("  prime: {}", d.is_prime()?);
        }
    }

    let trefoil: LinkDiagram = DIAGRAMS[0].1.parse()?;
    let mirror = trefoil.mirror();
    println!("mirror: {mirror} (writhe {})", mirror.writhe()?);
    let kinked = trefoil.add_r1_kink(2, Sign::Positive)?;
    println!("with a kink: {kinked} (writhe {})", kinked.writhe()?);
    println!("as JSON: {}", trefoil.to_json());
    assert_eq!(LinkDiagram::parse_any(&trefoil.to_json())?, trefoil);
    Ok(())
}

fn main() -> statesurf::Result<()> {
    run_example()
}
