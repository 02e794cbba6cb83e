//! Natural partial order and meet sets in the symmetric inverse monoid on two points.

use zdg::semigroup::{natural_order, verify_inverse};

fn main() -> zdg::Result<()> {
    let s = zdg::generators::symmetric_inverse_monoid(2)?;
    let ord = natural_order(&s, &verify_inverse(&s))?;
    for a in 0..s.order() {
        let below: Vec<&str> = ord.down_set(a).iter().map(|&x| s.name(x)).collect();
        println!("{:>12} >= {}", s.name(a), below.join(" "));
    }
    let x = s.index_of("[1>1]").unwrap();
    let y = s.index_of("[2>2]").unwrap();
    let meet: Vec<&str> = ord.meet_set(x, y).iter().map(|&m| s.name(m)).collect();
    println!("meet of [1>1] and [2>2]: {{{}}}", meet.join(", "));
    println!("least element: {}", ord.least_element().map_or("none", |z| s.name(z)));
    Ok(())
}
