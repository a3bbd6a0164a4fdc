//! Cubics whose eigenscheme contains a line or a conic.

use eigenpoints::algebra::Scalar;
use eigenpoints::eigenscheme::{self, ConicFamily, Cubic};
use eigenpoints::geometry::Line;

fn describe(name: &str, f: &Cubic) -> eigenpoints::Result<()> {
    let d = eigenscheme::positive_dim_analysis(f)?;
    let comp = d.component.as_ref().map(|c| c.to_string()).unwrap_or_default();
    let pts: Vec<String> = d.exact_residuals().iter().map(|p| p.to_string()).collect();
    println!("{name:<14} {:?} {comp}; residual degree {} {}", d.kind, d.residual_degree, pts.join(" "));
    Ok(())
}

fn main() -> eigenpoints::Result<()> {
    let s = Scalar::from_int;
    describe("x^2 (y - z)", &Cubic::from_ints([0, 1, 0, 0, -1, 0, 0, 0, 0, 0]))?;
    let t = Line::new([s(1), s(2), s(-1)])?;
    let ell = Line::new([s(0), s(1), s(3)])?;
    describe("t^2 l", &eigenscheme::build_eigenline_family(&t, &ell, None)?)?;
    let r = Line::new([s(1), s(-1), s(2)])?;
    let (f, gamma) = eigenscheme::build_eigenconic_family(&ConicFamily::Bitangent { lambda: s(2), mu: s(1), r })?;
    println!("conic: {gamma}");
    describe("bitangent", &f)?;
    describe("f(r)", &eigenscheme::build_f_of_r(&Line::new([s(0), s(0), s(1)])?)?)?;
    Ok(())
}
