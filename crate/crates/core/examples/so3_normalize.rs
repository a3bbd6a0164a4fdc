//! Moving points to a normal form with an exact rotation.

use eigenpoints::geometry::{so3_normalize, ProjPoint};

fn main() -> eigenpoints::Result<()> {
    let points = [
        ProjPoint::from_ints(1, 2, 2),
        ProjPoint::from_ints(1, 1, 0),
        ProjPoint::parse(["3", "4i", "5"])?,
        ProjPoint::parse(["1", "i", "0"])?,
    ];
    for p in &points {
        let (m, rep) = so3_normalize(p)?;
        assert_eq!(m.apply_point(&rep), *p);
        println!("{p} = M {rep}");
    }
    Ok(())
}
