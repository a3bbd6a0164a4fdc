//! Eigenpoints of x^3 + y^3 + z^3, numerically and exactly.

use eigenpoints::configurations as conf;
use eigenpoints::eigenscheme::{self, Cubic};
use eigenpoints::numsolve::{self, SolveOptions};

fn main() -> eigenpoints::Result<()> {
    let f = Cubic::fermat();
    for (k, g) in eigenscheme::eig_generators(&f).iter().enumerate() {
        println!("g{} = {g}", k + 1);
    }
    let e = numsolve::eigenpoints_numeric(&f, &SolveOptions::default())?;
    for (p, r) in e.points.iter().zip(&e.residuals) {
        let c = p.coords();
        println!("{:>8.5} {:>8.5} {:>8.5}   residual {r:.1e}", c[0].re, c[1].re, c[2].re);
    }
    let exact = numsolve::lift_exact(&f, &e.points, 10).expect("rational eigenpoints");
    let report = conf::classify(&exact)?;
    println!("{} with lines {:?}", report.label, report.lines);
    Ok(())
}
