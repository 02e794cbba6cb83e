//! Writes Graphviz files for Γ of B2 and of the two-edge path digraph.

use zdg::report::{analyze_digraph, analyze_semigroup};

fn main() -> zdg::Result<()> {
    let dir = std::env::temp_dir();
    let b2 = analyze_semigroup(&zdg::generators::b2(), "b2")?;
    let g3 = analyze_digraph(&zdg::generators::example_digraph("g3")?, 4, "g3")?;
    for (name, a) in [("b2", b2), ("g3", g3)] {
        let dot = a.gamma.expect("graph built").to_dot(name);
        let path = dir.join(format!("{name}.dot"));
        std::fs::write(&path, &dot).map_err(|e| zdg::Error::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        println!("{}:\n{dot}", path.display());
    }
    Ok(())
}
