//! Builds a replayable script from a checkpoint file by searching between
//! consecutive checkpoints.
//!
//! ```text
//! cargo run --release --example synthesize -- data/waypoints/lantern.wp data/scripts/lantern.script
//! ```
//!
//! A checkpoint that cannot be reached from the previous one is reported
//! and skipped; the search then aims for the next one.

use std::time::Instant;

use ptolemy::rewrite::synth::synthesize_with;
use ptolemy::rewrite::{parse_waypoints, ConnectOptions, DEFAULT_BUDGET};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (Some(input), Some(output)) = (args.first(), args.get(1)) else {
        eprintln!("usage: synthesize <checkpoints.wp> <out.script> [slack] [budget]");
        std::process::exit(2);
    };
    let slack = args.get(2).map_or(1, |s| s.parse().expect("slack is a number"));
    let budget = args.get(3).map_or(DEFAULT_BUDGET, |s| s.parse().expect("budget is a number"));
    let src = std::fs::read_to_string(input).expect("readable checkpoint file");
    let wps = parse_waypoints(&src).unwrap_or_else(|e| {
        eprintln!("{input}: {e}");
        std::process::exit(2);
    });
    println!("{} checkpoints", wps.len());
    let t = Instant::now();
    let opts = ConnectOptions { budget, slack, ignore_scalar: false };
    let mut leg = Instant::now();
    let report = |from: usize, to: usize, found: bool| {
        let (a, b) = (wps[from].line, wps[to].line);
        println!("  line {a} -> line {b}: {} ({:.2?})", if found { "ok" } else { "no path" }, leg.elapsed());
        leg = Instant::now();
    };
    let Some((mut script, skipped)) = synthesize_with(&wps, opts, report) else {
        eprintln!("could not reach the last checkpoint");
        std::process::exit(1);
    };
    for i in &skipped {
        println!("skipped checkpoint on line {}: {}", wps[*i].line, wps[*i].word);
    }
    println!("{} steps in {:.2?}", script.step_count(), t.elapsed());
    let header = format!("# generated from {input}\n");
    script.expected = wps.last().map(|w| w.word.clone());
    std::fs::write(output, header + &script.to_text()).expect("writable output");
}
