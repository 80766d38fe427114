//! Flips, rotations and relabelings on the bundled chain scene.

use ptolemy::surface::{apply_move, apply_word, chain_torus, inverse_word, isomorphism, Move};

fn main() {
    let tri = chain_torus();
    println!(
        "chain scene: {} triangles, genus {}, {} punctures, {} edges",
        tri.triangle_count(),
        tri.genus(),
        tri.punctures(),
        tri.edges().len()
    );
    println!("{tri}");

    let word = vec![Move::RhoInv(2), Move::Omega(2, 3), Move::Rho(2)];
    let chart = apply_word(&tri, &word).expect("the flip applies");
    println!("after {word:?}:");
    println!("{chart}");
    println!("side 1.2 was glued to {:?}, now to {:?}", tri.partner((1, 2)), chart.partner((1, 2)));

    let back = apply_word(&chart, &inverse_word(&word)).unwrap();
    assert_eq!(back, tri);
    println!("the inverse word restores the scene");

    let sigma = vec![4, 5, 6, 1, 2, 3, 8, 7];
    let swapped = apply_move(&tri, &Move::Perm(sigma)).unwrap();
    println!("swapping (1 2 3) with (4 5 6): same scene = {}", swapped == tri);

    let shuffled = apply_move(&tri, &Move::Perm(vec![2, 3, 1, 4, 5, 6, 7, 8])).unwrap();
    println!("isomorphism back from a relabeled copy: {:?}", isomorphism(&tri, &shuffled));

    match apply_move(&tri, &Move::Omega(7, 7)) {
        Ok(_) => println!("unexpected"),
        Err(e) => println!("Omega(7, 7): {e}"),
    }
}
