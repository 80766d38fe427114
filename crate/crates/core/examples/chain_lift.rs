//! The chain relation end to end: twist flip sequences on the chain scene,
//! their operator words, and the replay of the bundled script.

use ptolemy::quantize::{chain_twists, lift_exponent, LiftMethod, RelationInstance, TwistWord};
use ptolemy::surface::chain_torus;

fn main() {
    let tri = chain_torus();
    let twists = chain_twists(&tri).unwrap();
    for t in &twists {
        println!("D_{}: {} moves", t.name, t.groupoid_word.len());
        println!("  W_{} = {}", t.name, t.operator_word);
    }

    let rel = RelationInstance::load("data/relations/chain.rel".as_ref()).expect("run from crates/core");
    for t in &twists {
        assert_eq!(Some(&t.operator_word), rel.twist(&t.name));
    }
    let script = rel.read_script().unwrap().unwrap();
    let l = lift_exponent(&rel, LiftMethod::Script(&script), TwistWord::DEFAULT_NORMALIZATION).unwrap();
    println!("(c b a)^4 = f e after {} steps: {l}", script.step_count());
}
