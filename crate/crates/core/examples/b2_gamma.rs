//! Zero-divisor graph of the five-element Brandt semigroup.

use zdg::semigroup::{natural_order, verify_inverse};
use zdg::zdg::{build_gamma, classify_diameter, classify_girth};

fn main() -> zdg::Result<()> {
    let s = zdg::generators::b2();
    let ord = natural_order(&s, &verify_inverse(&s))?;
    let gamma = build_gamma(&s, &ord)?;
    println!("{} vertices, {} edges", gamma.vertex_count(), gamma.edge_count());
    for (a, b) in gamma.edge_labels() {
        println!("  {a} -- {b}");
    }
    let d = classify_diameter(&s, &ord, &gamma)?;
    let g = classify_girth(&gamma)?;
    println!("diameter {} (case {}), girth {} ({})", d.computed, d.case.label(), g.computed, g.case.label());
    Ok(())
}
