//! Rechecks the bundled fixture corpus.

use statesurf::corpus;

pub fn run_example() -> statesurf::Result<()> {
    let fixtures = corpus::load_corpus()?;
    let report = corpus::run_sweep(&fixtures, statesurf::DEFAULT_CAP);
    for f in &fixtures {
        println!(
            "{:<16} {:>2} crossings, fiber(all-A) = {}",
            f.name,
            f.diagram.crossing_count(),
            f.expected("fiber_a").unwrap_or("?")
        );
    }
    println!(
        "{} values checked, {} mismatches",
        report.checked,
        report.mismatches.len()
    );
    assert!(report.passed());
    Ok(())
}

fn main() -> statesurf::Result<()> {
    run_example()
}
