//! Six alignments from three points and their orthocenter-like fourth.

use eigenpoints::configurations as conf;
use eigenpoints::geometry::ProjPoint;
use eigenpoints::sample;

fn main() -> eigenpoints::Result<()> {
    let c = conf::build_c8(&ProjPoint::from_ints(1, 1, 1), &ProjPoint::from_ints(1, 0, 0), &ProjPoint::from_ints(0, 1, 0))?;
    println!("P7 = {}, cubic {}", c.points[6], c.member.as_ref().expect("cubic").form());

    let mut rng = sample::sampler(5);
    let mut shown = 0;
    while shown < 3 {
        let (a, b, d) = (sample::point(&mut rng, 5), sample::point(&mut rng, 5), sample::point(&mut rng, 5));
        let Ok(c) = conf::build_c8(&a, &b, &d) else { continue };
        let r = conf::classify_incidence(&c.points)?;
        let pts: Vec<String> = c.points.iter().map(|p| p.to_string()).collect();
        println!("{}: {}", r.label, pts.join(" "));
        shown += 1;
    }
    Ok(())
}
