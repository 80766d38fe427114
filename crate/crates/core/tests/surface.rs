mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use ptolemy::surface::{
    apply_move, apply_word, chain_torus, inverse_word, isomorphism, parse_triangulation, random_scenes,
    random_triangulation, relation_suite, DecoratedTriangulation, Move, Side, SurfaceError,
};

// Walks around each vertex: from corner c of t, cross the side that starts
// at c and land on the corner of the neighbour where that side ends.
fn corner_orbits(tri: &DecoratedTriangulation) -> usize {
    let n = tri.triangle_count();
    let table = tri.table();
    let mut seen = vec![[false; 3]; n];
    let mut orbits = 0;
    for t in 0..n {
        for c in 0..3usize {
            if seen[t][c] {
                continue;
            }
            orbits += 1;
            let (mut u, mut d) = (t, c);
            while !seen[u][d] {
                seen[u][d] = true;
                let (v, k) = table[u][(d + 2) % 3];
                u = v as usize - 1;
                d = (k as usize + 2) % 3;
            }
        }
    }
    orbits
}

fn edges_of(tri: &DecoratedTriangulation) -> usize {
    tri.edges().len()
}

// All label bijections, tried one by one.
fn brute_isomorphisms(a: &DecoratedTriangulation, b: &DecoratedTriangulation) -> Vec<Vec<u32>> {
    fn rec(a: &DecoratedTriangulation, b: &DecoratedTriangulation, phi: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let n = a.triangle_count();
        if phi.len() == n {
            let ok = (1..=n as u32).all(|t| {
                (0..3u8).all(|k| {
                    let (u, m) = a.partner((t, k));
                    b.partner((phi[t as usize - 1], k)) == (phi[u as usize - 1], m)
                })
            });
            if ok {
                out.push(phi.clone());
            }
            return;
        }
        for v in 1..=n as u32 {
            if !phi.contains(&v) {
                phi.push(v);
                rec(a, b, phi, out);
                phi.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(a, b, &mut Vec::new(), &mut out);
    out
}

fn relabeled_table(tri: &DecoratedTriangulation, phi: &[u32]) -> Vec<[Side; 3]> {
    let old = tri.table();
    let mut new = vec![[(0, 0); 3]; old.len()];
    for (t, row) in old.iter().enumerate() {
        for k in 0..3 {
            let (u, m) = row[k];
            new[phi[t] as usize - 1][k] = (phi[u as usize - 1], m);
        }
    }
    new
}

// The six rectangle triangles with the two hole sides glued to each other.
const SIX: &str = "1 : 3.2 6.0 2.1\n2 : 5.0 1.2 3.1\n3 : 4.1 2.2 1.0\n4 : 6.2 3.0 5.1\n5 : 2.0 4.2 6.1\n6 : 1.1 5.2 4.0\n";

#[test]
fn chain_scene_shape() {
    let tri = chain_torus();
    assert_eq!(tri.triangle_count(), 8);
    assert_eq!(tri.genus(), 1);
    assert_eq!(tri.punctures(), 4);
    assert_eq!(corner_orbits(&tri), 4);
    // V - E + F = 2 - 2g
    assert_eq!(4 - edges_of(&tri) as i64 + 8, 0);
}

#[test]
fn six_triangle_rectangle() {
    let tri = parse_triangulation(SIX).unwrap();
    assert_eq!(tri.triangle_count(), 6);
    assert_eq!(tri.genus(), 2);
    assert_eq!(tri.punctures(), 1);
    assert!(relation_suite(&tri).passed());
}

#[test]
fn build_errors() {
    let fixed = "1 : 1.0 2.1 2.2\n2 : 2.0 1.1 1.2\n";
    assert!(matches!(parse_triangulation(fixed), Err(SurfaceError::FixedSide((1, 0)))));
    let not_inv = "1 : 2.0 2.1 2.2\n2 : 1.1 1.0 1.2\n";
    assert!(matches!(parse_triangulation(not_inv), Err(SurfaceError::NotInvolution { .. })));
    let gap = "1 : 3.0 2.1 2.2\n2 : 1.0 1.1 1.2\n";
    assert!(matches!(parse_triangulation(gap), Err(SurfaceError::LabelGap { side: (1, 0), .. })));
    let odd = "1 : 1.1 1.0 1.2\n";
    assert!(matches!(parse_triangulation(odd), Err(SurfaceError::OddCount(1)) | Err(SurfaceError::FixedSide(_))));
    assert!(matches!(parse_triangulation("1 : 2.0 2.1"), Err(SurfaceError::Parse { line: 1, .. })));
    assert!(matches!(parse_triangulation("garbage"), Err(SurfaceError::Parse { .. })));
}

#[test]
fn disconnected_is_rejected() {
    let two_spheres = "1 : 2.0 2.2 2.1\n2 : 1.0 1.2 1.1\n3 : 4.0 4.2 4.1\n4 : 3.0 3.2 3.1\n";
    assert!(matches!(parse_triangulation(two_spheres), Err(SurfaceError::NonSurface(_))));
}

#[test]
fn rho_cubed_and_inverse_pairs() {
    let tri = chain_torus();
    for i in 1..=8 {
        let r = [Move::Rho(i), Move::Rho(i), Move::Rho(i)];
        assert_eq!(apply_word(&tri, &r).unwrap(), tri);
    }
    assert_eq!(apply_word(&tri, &[]).unwrap(), tri);
    let mut flips = 0;
    for i in 1..=8 {
        for j in 1..=8 {
            let w = [Move::Omega(i, j), Move::OmegaInv(i, j)];
            if let Ok(end) = apply_word(&tri, &w) {
                assert_eq!(end, tri);
                flips += 1;
            }
        }
    }
    assert!(flips > 0);
}

#[test]
fn omega_needs_the_right_sides() {
    let tri = chain_torus();
    // side 0 of 1 is glued to 3.2, not to side 1 of 3
    assert!(matches!(apply_move(&tri, &Move::Omega(1, 3)), Err(SurfaceError::OmegaNotApplicable { i: 1, j: 3 })));
    assert!(matches!(apply_move(&tri, &Move::Rho(9)), Err(SurfaceError::BadLabel { label: 9, .. })));
    let w = [Move::Rho(1), Move::Omega(1, 3)];
    assert!(matches!(apply_word(&tri, &w), Err(SurfaceError::MoveFailed { index: 1, .. })));
}

#[test]
fn pentagon_pointwise_on_random_scenes() {
    let mut checked = 0;
    for tri in random_scenes(60, 3) {
        let n = tri.triangle_count() as u32;
        for i in 1..=n {
            for j in 1..=n {
                for k in 1..=n {
                    if i == j || j == k || i == k {
                        continue;
                    }
                    let Ok(a) = apply_move(&tri, &Move::Omega(i, j)) else { continue };
                    let Ok(b) = apply_move(&a, &Move::Omega(i, k)) else { continue };
                    let Ok(lhs) = apply_move(&b, &Move::Omega(j, k)) else { continue };
                    let c = apply_move(&tri, &Move::Omega(j, k)).unwrap();
                    let rhs = apply_move(&c, &Move::Omega(i, j)).unwrap();
                    assert_eq!(lhs, rhs);
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn inversion_relation_pointwise() {
    let mut checked = 0;
    for tri in random_scenes(40, 11) {
        let n = tri.triangle_count();
        for i in 1..=n as u32 {
            for j in 1..=n as u32 {
                let lhs = [Move::Omega(i, j), Move::Rho(i), Move::Omega(j, i)];
                let Ok(l) = apply_word(&tri, &lhs) else { continue };
                let rhs = [Move::transposition(n, i, j), Move::Rho(j), Move::Rho(i)];
                assert_eq!(apply_word(&tri, &rhs).unwrap(), l);
                checked += 1;
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn isomorphism_examples() {
    let tri = chain_torus();
    let id: Vec<u32> = (1..=8).collect();
    assert_eq!(isomorphism(&tri, &tri), Some(id));
    let sigma = vec![3, 1, 2, 5, 4, 8, 6, 7];
    let moved = apply_move(&tri, &Move::Perm(sigma.clone())).unwrap();
    let phi = isomorphism(&tri, &moved).unwrap();
    for (j, &s) in sigma.iter().enumerate() {
        assert_eq!(phi[s as usize - 1], j as u32 + 1);
    }
    let rotated = apply_move(&tri, &Move::Rho(2)).unwrap();
    assert_eq!(isomorphism(&tri, &rotated), None);
}

#[test]
fn isomorphism_recovers_relabeling() {
    let tri = parse_triangulation(SIX).unwrap();
    let phi = vec![4, 6, 1, 3, 2, 5];
    let copy = DecoratedTriangulation::build(&relabeled_table(&tri, &phi)).unwrap();
    let all = brute_isomorphisms(&tri, &copy);
    assert!(all.contains(&phi));
    let found = isomorphism(&tri, &copy).unwrap();
    assert!(all.contains(&found));
}

#[test]
fn relation_suite_on_scenes() {
    let mut rep = relation_suite(&chain_torus());
    assert!(rep.passed(), "{rep}");
    assert_eq!(rep.total(), 1156);
    for tri in random_scenes(100, 7) {
        let r = relation_suite(&tri);
        assert!(r.passed(), "{r}");
        rep.merge(r);
    }
    for name in [
        "relabel",
        "rho-cubed",
        "inverse",
        "pentagon",
        "inversion",
        "comm-rho-perm",
        "comm-omega-perm",
        "comm-rho-rho",
        "comm-rho-omega",
        "comm-omega-omega",
    ] {
        assert!(rep.counts.iter().any(|(n, c)| *n == name && *c > 0), "{name} not exercised");
    }
}

#[test]
fn random_scenes_are_seeded() {
    assert_eq!(random_scenes(10, 5), random_scenes(10, 5));
    assert_ne!(random_scenes(10, 5), random_scenes(10, 6));
}

#[test]
fn da_chart_flip() {
    // the move T[2v,3] of the chain scene, as rotations around a flip
    let tri = chain_torus();
    let w = [Move::RhoInv(2), Move::Omega(2, 3), Move::Rho(2)];
    let chart = apply_word(&tri, &w).unwrap();
    assert_eq!(chart.genus(), 1);
    // triangles 2 and 3 trade places: 3 now meets triangle 1 where 2 did
    assert_eq!(tri.partner((1, 2)), (2, 1));
    assert_eq!(chart.partner((1, 2)), (3, 1));
    assert_eq!(apply_word(&chart, &inverse_word(&w)).unwrap(), tri);
}

#[test]
fn de_chart_sequence_applies() {
    let tri = chain_torus();
    let w = [
        Move::Omega(3, 4),
        Move::Omega(1, 4),
        Move::OmegaInv(6, 3),
        Move::RhoInv(4),
        Move::Omega(4, 5),
        Move::Rho(4),
        Move::RhoInv(5),
        Move::Omega(5, 6),
        Move::Rho(5),
    ];
    let end = apply_word(&tri, &w).unwrap();
    assert_eq!((end.genus(), end.punctures()), (1, 4));
    assert_eq!(apply_word(&end, &inverse_word(&w)).unwrap(), tri);
}

fn random_move(tri: &DecoratedTriangulation, pick: usize) -> Option<Move> {
    let n = tri.triangle_count() as u32;
    let mut cands = Vec::new();
    for i in 1..=n {
        cands.push(Move::Rho(i));
        cands.push(Move::RhoInv(i));
        for j in 1..=n {
            for m in [Move::Omega(i, j), Move::OmegaInv(i, j)] {
                if apply_move(tri, &m).is_ok() {
                    cands.push(m);
                }
            }
        }
    }
    let sigma: Vec<u32> = (1..=n).map(|t| t % n + 1).collect();
    cands.push(Move::Perm(sigma));
    cands.get(pick % cands.len()).cloned()
}

proptest! {
    #![proptest_config(common::config(1000))]

    #[test]
    fn punctures_match_corner_orbits(seed in any::<u64>(), half in 1..=4usize) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let tri = random_triangulation(2 * half, &mut rng);
        prop_assert_eq!(tri.punctures() as usize, corner_orbits(&tri));
        let chi = tri.triangle_count() as i64 - edges_of(&tri) as i64 + corner_orbits(&tri) as i64;
        prop_assert_eq!(chi, 2 - 2 * tri.genus() as i64);
    }

    #[test]
    fn moves_invert_and_keep_topology(seed in any::<u64>(), picks in prop::collection::vec(any::<usize>(), 1..8)) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let tri = random_triangulation(6, &mut rng);
        let mut cur = tri.clone();
        let mut word = Vec::new();
        for p in picks {
            let m = random_move(&cur, p).unwrap();
            let next = apply_move(&cur, &m).unwrap();
            prop_assert_eq!(apply_move(&next, &m.inverse()).unwrap(), cur.clone());
            prop_assert_eq!((next.genus(), next.punctures()), (tri.genus(), tri.punctures()));
            word.push(m);
            cur = next;
        }
        prop_assert_eq!(apply_word(&cur, &inverse_word(&word)).unwrap(), tri);
    }

    #[test]
    fn text_round_trip(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let tri = random_triangulation(8, &mut rng);
        prop_assert_eq!(parse_triangulation(&tri.to_string()).unwrap(), tri);
    }
}
