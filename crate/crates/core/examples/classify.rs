//! Classifying seven points read from the command line as JSON.

use eigenpoints::configurations as conf;
use eigenpoints::geometry::ProjPoint;

const DEFAULT: &str = r#"[["1","0","0"],["0","1","0"],["1","1","0"],["0","0","1"],["1","0","1"],["0","1","1"],["1","1","1"]]"#;

fn main() -> eigenpoints::Result<()> {
    let text = std::env::args().nth(1).unwrap_or_else(|| DEFAULT.to_string());
    let points: Vec<ProjPoint> = serde_json::from_str(&text)?;
    let r = conf::classify(&points)?;
    println!("{}", serde_json::to_string_pretty(&r)?);
    Ok(())
}
