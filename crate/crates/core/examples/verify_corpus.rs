//! Runs the structural checks over a seeded random corpus.
//!
//! cargo run --release --example verify_corpus -- i3-closures 50 7

use zdg::corpus::{CorpusSpec, Family};
use zdg::verify::run_corpus;

fn main() -> zdg::Result<()> {
    let mut args = std::env::args().skip(1);
    let family: Family = args.next().as_deref().unwrap_or("i2-closures").parse()?;
    let count = args.next().and_then(|c| c.parse().ok()).unwrap_or(50);
    let seed = args.next().and_then(|c| c.parse().ok()).unwrap_or(1);
    let (_, summary) = run_corpus(&CorpusSpec::new(family, seed, count))?;
    print!("{}", summary.render());
    Ok(())
}
