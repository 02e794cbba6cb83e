//! Minimum group congruence of zero-free inverse semigroups and the
//! complete multipartite graph it induces after adjoining a zero.

use zdg::semigroup::verify_inverse;
use zdg::sigma::{predict_diameter_sigma, predict_girth_sigma, sigma, verify_structure_theorem};

fn main() -> zdg::Result<()> {
    let cases = [
        ("Z3", zdg::generators::cyclic_group(3)),
        ("Z2 x chain2", zdg::generators::z2_times_chain2()),
        ("clifford [1,2]", zdg::generators::clifford_c1()),
        ("S3", zdg::generators::symmetric_group_s3()),
    ];
    for (name, s) in cases {
        let sp = sigma(&s, &verify_inverse(&s))?;
        let blocks = verify_structure_theorem(&s, &sp)?;
        println!(
            "{name}: classes {:?}, Γ(S⁰) {} edges, diameter {} girth {}",
            sp.class_sizes(),
            blocks.gamma.edge_count(),
            predict_diameter_sigma(&s, &sp),
            predict_girth_sigma(&sp)
        );
    }
    Ok(())
}
