//! The two families of five points imposing only eight conditions.

use eigenpoints::algebra::Scalar;
use eigenpoints::configurations::{self as conf, Subfamily};
use eigenpoints::eigenscheme;
use eigenpoints::geometry::ProjPoint;

fn main() -> eigenpoints::Result<()> {
    let s = Scalar::from_int;
    let c = conf::build_rank8_case1(&ProjPoint::from_ints(1, 2, 3), &ProjPoint::from_ints(2, -1, 1), &(s(1), s(2)))?;
    let singular = c.cubics.iter().all(|f| eigenscheme::is_singular_at(f, &c.points[0]));
    println!("singular shared point: rank {}, pencil singular at P1: {singular}", c.rank);

    let p1 = ProjPoint::from_ints(1, 0, 0);
    let (t3, t5) = ((s(2), s(3)), (s(-1), s(5)));
    let c = conf::build_rank8_case2(&p1, &t3, &t5, None)?;
    println!("tangent lines: rank {}", c.rank);
    for f in &c.cubics {
        println!("  {}", f.form());
    }
    for sub in [Subfamily::A, Subfamily::B] {
        let c = conf::build_rank8_case2(&p1, &t3, &t5, Some(sub))?;
        let r = conf::classify_incidence(&c.points)?;
        println!("  subfamily {sub:?}: {} {:?}", r.label, r.lines);
    }
    Ok(())
}
