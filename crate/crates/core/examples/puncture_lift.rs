//! The puncture relation: its lift from the bundled script, and the lift
//! again found by search on a relabeled copy.

use ptolemy::opalgebra::parse_perm;
use ptolemy::quantize::{lift_exponent, LiftMethod, RelationInstance, TwistWord};

fn main() {
    let rel = RelationInstance::load("data/relations/puncture.rel".as_ref()).expect("run from crates/core");
    let script = rel.read_script().unwrap().unwrap();
    let l = lift_exponent(&rel, LiftMethod::Script(&script), TwistWord::DEFAULT_NORMALIZATION).unwrap();
    println!("a12 a23 a31 = a2 a3 a1: {l}");

    let pi = parse_perm("P[(1 6v 3)(2 5^ 4v)(7 7v)]", 7).unwrap();
    let a12 = rel.twist("a12").unwrap();
    println!("a12 = {a12}");
    println!("pi(a12) = a23: {}", a12.relabel(&pi).unwrap() == *rel.twist("a23").unwrap());

    // the three small twists by search
    let small = RelationInstance::parse(
        "kind braid0\nlabels 7\ntwist a1 = T[3v,4v]\ntwist a3 = T[5v,6]\nlhs a1 a3\nrhs a3 a1\n",
    )
    .unwrap();
    let l = lift_exponent(&small, LiftMethod::Search { budget: 10_000 }, TwistWord::DEFAULT_NORMALIZATION).unwrap();
    println!("a1 and a3 commute: {l}");
}
