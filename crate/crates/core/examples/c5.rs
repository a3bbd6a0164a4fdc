//! Seven eigenpoints on four lines, and the special cases that become six.

use eigenpoints::algebra::Scalar;
use eigenpoints::configurations as conf;
use eigenpoints::geometry::ProjPoint;

fn main() -> eigenpoints::Result<()> {
    let s = Scalar::from_int;
    let cases = [
        ("generic", ProjPoint::from_ints(1, 2, 3), ProjPoint::from_ints(2, -1, 1), (s(1), s(2)), (s(3), s(-1))),
        ("Fermat", ProjPoint::from_ints(1, 0, 0), ProjPoint::from_ints(0, 1, 0), (s(1), s(1)), (s(1), s(1))),
        ("tangent", ProjPoint::parse(["0", "i", "1"])?, ProjPoint::parse(["0", "-i", "1"])?, (s(2), s(3)), (s(-1), s(5))),
    ];
    for (name, p2, p4, t3, t5) in cases {
        let c = conf::build_c5(&p2, &p4, &t3, &t5)?;
        let r = conf::classify_incidence(&c.points)?;
        println!("{name:<8} rank {}  {} {:?}", c.rank, r.label, r.lines);
    }
    Ok(())
}
