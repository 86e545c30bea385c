//! Rewrites the bundled corpus files.

use std::path::Path;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let files = quandle_core::corpus::generate()?;
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus");
    std::fs::write(dir.join("diagrams.json"), files.diagrams)?;
    std::fs::write(dir.join("move_pairs.json"), files.move_pairs)?;
    std::fs::write(dir.join("theta_dihedral3.json"), files.theta)?;
    for (name, text) in &files.diagram_files {
        std::fs::write(dir.join(format!("{name}.json")), text)?;
    }
    println!("wrote {}", dir.display());
    Ok(())
}
