//! Zero-divisor graphs of graph inverse semigroups for a few small digraphs.

use zdg::graph_inverse::{build_gamma_ig, classify_ig, parse_graph, DEFAULT_MAX_LEN};

fn main() -> zdg::Result<()> {
    for which in ["g1", "g2", "g3"] {
        let g = zdg::generators::example_digraph(which)?;
        let ig = build_gamma_ig(&g, DEFAULT_MAX_LEN)?;
        let (d, girth) = classify_ig(&g)?;
        println!(
            "{which}: {} elements, Γ {} vertices / {} edges, diameter {} girth {} (expected {d}, {girth})",
            ig.universe.len(),
            ig.gamma.vertex_count(),
            ig.gamma.edge_count(),
            ig.gamma.diameter,
            ig.gamma.girth,
        );
    }

    // A loop generates an infinite semigroup; only paths up to the bound are kept.
    let g = parse_graph("vertices: v\nedges:\nl: v -> v\n")?;
    let ig = build_gamma_ig(&g, 3)?;
    println!(
        "loop: exact={} Γ {} vertices, diameter {} girth {}",
        ig.exact,
        ig.gamma.vertex_count(),
        ig.gamma.diameter,
        ig.gamma.girth
    );
    Ok(())
}
