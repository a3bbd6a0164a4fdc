//! Two alignments through P1 with delta2 = 0 force a third one.

use eigenpoints::algebra::Scalar;
use eigenpoints::configurations as conf;
use eigenpoints::geometry::ProjPoint;

fn main() -> eigenpoints::Result<()> {
    let s = Scalar::from_int;
    let c = conf::build_c3(
        &ProjPoint::from_ints(1, 2, 3),
        &ProjPoint::from_ints(2, -1, 1),
        &ProjPoint::from_ints(0, 1, 5),
        &(s(1), s(2)),
    )?;
    println!("cubic: {}", c.member.as_ref().expect("unique cubic").form());
    println!("third line: {}", c.lines[0]);
    for (name, ok) in &c.certificates {
        println!("  {name}: {ok}");
    }
    for (k, p) in c.points.iter().enumerate() {
        println!("  P{} = {p}", k + 1);
    }
    Ok(())
}
