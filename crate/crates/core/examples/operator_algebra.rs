//! Operator words: letters, permutation tails, conjugation, relabeling and
//! the two defining reductions.

use ptolemy::opalgebra::{parse_perm, parse_word, OperatorWord};
use ptolemy::rewrite::{apply_step, canonical_word, normalize_bounded, Rule, Step, DEFAULT_BUDGET};

fn main() {
    let p = parse_perm("P[(1 2 1^)]", 2).unwrap();
    println!("P = {p}, P^2 = {}, P^3 = {}", p.pow(2), p.pow(3));

    // the permutation is pushed through to the right
    let x = parse_word("P[(1 2)] T[1,3]", 3).unwrap();
    println!("P[(1 2)] T[1,3] = {x}");

    let ad = parse_word("Ad(T[2v,3])(T[1,3^])", 3).unwrap();
    println!("Ad(T[2v,3])(T[1,3^]) = {ad}");
    println!("inverse: {}", ad.inverse());

    let pi = parse_perm("P[(1 2v 3)]", 3).unwrap();
    println!("relabeled by {pi}: {}", ad.relabel(&pi).unwrap());

    let sym = parse_word("T[3v,1^] T[1,2]", 3).unwrap();
    println!("canonical form of {sym}: {}", canonical_word(&sym));

    let pent = parse_word("T[1,2] T[1,3] T[2,3]", 3).unwrap();
    println!("pentagon: {pent} -> {}", apply_step(&pent, &Step::fwd(Rule::Pentagon, 1)).unwrap());

    let inv = parse_word("T[1,2] T[2,1^]", 2).unwrap();
    let (k, tail) = normalize_bounded(&inv, DEFAULT_BUDGET).unwrap();
    println!("inversion: {inv} = {}", OperatorWord::from_perm(tail).with_zeta(k));
}
