//! Checks every applicable groupoid relation on the chain scene and on
//! seeded random scenes.
//!
//! ```text
//! cargo run --release --example relation_suite -- 100 7
//! ```

use ptolemy::surface::{chain_torus, random_scenes, relation_suite, RelationReport};

fn main() {
    let mut args = std::env::args().skip(1);
    let count = args.next().map_or(100, |s| s.parse().expect("scene count"));
    let seed = args.next().map_or(7, |s| s.parse().expect("seed"));

    let chain = relation_suite(&chain_torus());
    println!("chain scene\n{chain}");

    let mut rep = RelationReport::default();
    for t in random_scenes(count, seed) {
        rep.merge(relation_suite(&t));
    }
    println!("{count} random scenes, seed {seed}\n{rep}");
    if !(chain.passed() && rep.passed()) {
        std::process::exit(1);
    }
}
