//! The lift of the lantern relation, from its bundled script.

use ptolemy::quantize::{lift_exponent, LiftMethod, RelationInstance, TwistWord};

fn main() {
    let rel = RelationInstance::load("data/relations/lantern.rel".as_ref()).expect("run from crates/core");
    for (name, w) in &rel.twists {
        println!("{name:>4} = {w}");
    }
    let script = rel.read_script().unwrap().expect("the relation names a script");
    println!("{} = {}", rel.lhs.join(" "), rel.rhs.join(" "));
    let l = lift_exponent(&rel, LiftMethod::Script(&script), TwistWord::DEFAULT_NORMALIZATION).unwrap();
    println!("{} steps: {l}", script.step_count());
}
