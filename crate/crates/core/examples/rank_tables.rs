//! Ranks of the eigenpoint conditions of small point sets.

use eigenpoints::verify;

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(42);
    for c in verify::rank_tables(seed, 50) {
        println!("{:<45} {}/{}", c.name, c.passed, c.total);
    }
}
