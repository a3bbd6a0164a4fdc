//! Members of a random pencil with three aligned eigenpoints.

use eigenpoints::numsolve::{self, SolveOptions};
use eigenpoints::{sample, verify};

fn main() -> eigenpoints::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let (f, g) = verify::random_pencil(&mut sample::sampler(seed));
    println!("f = {}\ng = {}", f.form(), g.form());
    let r = numsolve::pencil_alignment_parameters(&f, &g, &SolveOptions { seed, ..Default::default() })?;
    println!("{} parameters from {} starts ({} converged)", r.t_values.len(), r.restarts, r.converged);
    for t in &r.t_values {
        println!("  {:+.10} {:+.10}i", t.re, t.im);
    }
    Ok(())
}
