//! Replays a rewrite script and prints each step.
//!
//! ```text
//! cargo run --example replay_script -- data/scripts/twist_a.script
//! ```

use ptolemy::rewrite::{check_script, Script};

fn main() {
    let path = std::env::args().nth(1).unwrap_or_else(|| "data/scripts/twist_a.script".into());
    let src = std::fs::read_to_string(&path).unwrap_or_else(|e| {
        eprintln!("{path}: {e}");
        std::process::exit(2);
    });
    let script = Script::parse(&src).unwrap_or_else(|e| {
        eprintln!("{path}: {e}");
        std::process::exit(2);
    });
    let (Some(start), Some(expected)) = (&script.start, &script.expected) else {
        eprintln!("{path}: needs `start:` and `expect:` lines");
        std::process::exit(2);
    };
    println!("start: {start}");
    let rep = check_script(start, &script, expected);
    for r in &rep.records {
        println!("{:>4} line {:>4}  ζ^{:<3} {}", r.index, r.line, r.zeta, r.step);
    }
    if let Some(f) = &rep.failure {
        println!("step {} (line {}) failed: {}", f.step_index, f.line, f.message);
    }
    println!("final: {}", rep.final_word);
    println!(
        "{} checkpoints, {} forward and {} backward inversions",
        rep.assertions_checked, rep.forward_inversions, rep.backward_inversions
    );
    std::process::exit(if rep.passed() { 0 } else { 1 });
}
