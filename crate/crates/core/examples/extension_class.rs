//! Extension classes from lift exponents, and what happens to them under
//! changes of coefficients.

use ptolemy::cohomology::{
    change_coefficients, class_from_lifts, class_from_lifts_in, scalar_group_order, CoefficientMap, Coefficients,
    LiftData,
};

fn main() {
    let lifts = LiftData::new(12, vec![1, 1, 1, 1]);
    for g in [2, 3, 4] {
        let c = class_from_lifts(&lifts, g, 4).unwrap();
        let d = change_coefficients(&c, CoefficientMap::Divisible).unwrap();
        println!("g = {g}: {c}; in a divisible group: {d}");
    }
    for m in [6, 12, 7] {
        let a = Coefficients { order: scalar_group_order(Some(m)) };
        let c = class_from_lifts_in(&lifts, 3, 4, a).unwrap();
        println!("ζ of order {m}: {c}");
    }
    let c = class_from_lifts(&lifts, 3, 4).unwrap();
    println!("mod 2: {}", change_coefficients(&c, CoefficientMap::Reduce(2)).unwrap());
}
