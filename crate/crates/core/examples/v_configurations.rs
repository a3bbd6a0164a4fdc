//! Rank of five points on two lines through a common point, and the
//! invariants that lower it.

use eigenpoints::algebra::Scalar;
use eigenpoints::configurations::{self as conf, VConfig};
use eigenpoints::geometry::{combine, ProjPoint};

fn show(name: &str, v: &VConfig) -> eigenpoints::Result<()> {
    let r = conf::rank_v(v)?;
    println!(
        "{name:<22} rank {:>2}  delta1 = 0: {:<5}  delta2 = 0: {:<5}  theorem holds: {}",
        r.rank,
        r.delta1.is_zero(),
        r.delta2.is_zero(),
        r.theorem_holds
    );
    Ok(())
}

fn main() -> eigenpoints::Result<()> {
    let s = Scalar::from_int;
    let (p1, p2, p4) = (ProjPoint::from_ints(1, 2, 3), ProjPoint::from_ints(2, -1, 1), ProjPoint::from_ints(0, 1, 5));
    let generic = VConfig::new([
        p1.clone(),
        p2.clone(),
        combine(&s(2), &p1, &s(3), &p2)?,
        p4.clone(),
        combine(&s(-1), &p1, &s(4), &p4)?,
    ])?;
    show("generic", &generic)?;
    show("delta1 = 0", &conf::c2_points(&p1, &p2, &(s(1), s(2)), &(s(1), s(3)), &(s(2), s(-1)))?)?;
    show("delta2 = 0", &conf::c3_points(&p1, &p2, &p4, &(s(1), s(2)))?)?;
    show("singular shared point", &conf::rank8_case1_points(&p1, &p2, &(s(1), s(2)))?)?;
    show("tangent lines", &conf::rank8_case2_points(&p1, &(s(2), s(3)), &(s(-1), s(5)))?)?;
    Ok(())
}
