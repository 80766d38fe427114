use std::fmt;

use super::{apply_word, DecoratedTriangulation, Move};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationFailure {
    pub relation: &'static str,
    pub instance: String,
    pub detail: String,
}

/// Outcome of [`relation_suite`]: instance counts per relation and every
/// failing instance.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RelationReport {
    pub counts: Vec<(&'static str, usize)>,
    pub failures: Vec<RelationFailure>,
}

impl RelationReport {
    pub fn total(&self) -> usize {
        self.counts.iter().map(|c| c.1).sum()
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn merge(&mut self, other: RelationReport) {
        for (name, c) in other.counts {
            match self.counts.iter_mut().find(|e| e.0 == name) {
                Some(e) => e.1 += c,
                None => self.counts.push((name, c)),
            }
        }
        self.failures.extend(other.failures);
    }

    fn record(&mut self, name: &'static str) {
        match self.counts.iter_mut().find(|e| e.0 == name) {
            Some(e) => e.1 += 1,
            None => self.counts.push((name, 1)),
        }
    }

    /// Checks that `lhs` and `rhs` are both applicable at `tri` and end at
    /// the same triangulation. When `lhs` is not applicable the instance is
    /// skipped.
    fn check(&mut self, tri: &DecoratedTriangulation, name: &'static str, lhs: &[Move], rhs: &[Move]) {
        let Ok(l) = apply_word(tri, lhs) else { return };
        self.record(name);
        let instance = format!("[{}] = [{}]", join(lhs), join(rhs));
        match apply_word(tri, rhs) {
            Ok(r) if r == l => {}
            Ok(_) => self.failures.push(RelationFailure { relation: name, instance, detail: "endpoints differ".into() }),
            Err(e) => self.failures.push(RelationFailure { relation: name, instance, detail: e.to_string() }),
        }
    }
}

fn join(w: &[Move]) -> String {
    w.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(", ")
}

impl fmt::Display for RelationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, c) in &self.counts {
            writeln!(f, "{name:<14} {c:>6} instances")?;
        }
        for fl in &self.failures {
            writeln!(f, "FAIL {}: {} ({})", fl.relation, fl.instance, fl.detail)?;
        }
        write!(f, "{} instances, {} failures", self.total(), self.failures.len())
    }
}

fn transpositions(n: usize) -> Vec<(u32, u32, Move)> {
    let mut out = Vec::new();
    for a in 1..=n as u32 {
        for b in a + 1..=n as u32 {
            out.push((a, b, Move::transposition(n, a, b)));
        }
    }
    out
}

/// Checks every applicable instance of the groupoid relations at `tri`:
/// relabeling composition, `ρ³ = 1`, the pentagon, the inversion relation,
/// the five commutation relations, and move inverses.
pub fn relation_suite(tri: &DecoratedTriangulation) -> RelationReport {
    let n = tri.triangle_count();
    let labels: Vec<u32> = (1..=n as u32).collect();
    let mut rep = RelationReport::default();
    let swaps = transpositions(n);
    let id = Move::Perm(labels.clone());

    for (_, _, a) in &swaps {
        for (_, _, b) in &swaps {
            let (Move::Perm(sa), Move::Perm(sb)) = (a, b) else { unreachable!() };
            let ab: Vec<u32> = (0..n).map(|j| sa[sb[j] as usize - 1]).collect();
            rep.check(tri, "relabel", &[a.clone(), b.clone()], &[Move::Perm(ab)]);
        }
    }
    for &i in &labels {
        rep.check(tri, "rho-cubed", &[Move::Rho(i), Move::Rho(i), Move::Rho(i)], &[id.clone()]);
        rep.check(tri, "inverse", &[Move::Rho(i), Move::RhoInv(i)], &[]);
    }
    for &i in &labels {
        for &j in &labels {
            if i == j {
                continue;
            }
            rep.check(tri, "inverse", &[Move::Omega(i, j), Move::OmegaInv(i, j)], &[]);
            rep.check(tri, "inverse", &[Move::OmegaInv(i, j), Move::Omega(i, j)], &[]);
            let swap = Move::transposition(n, i, j);
            rep.check(
                tri,
                "inversion",
                &[Move::Omega(i, j), Move::Rho(i), Move::Omega(j, i)],
                &[swap, Move::Rho(j), Move::Rho(i)],
            );
            for &k in &labels {
                if k == i || k == j {
                    continue;
                }
                rep.check(
                    tri,
                    "pentagon",
                    &[Move::Omega(i, j), Move::Omega(i, k), Move::Omega(j, k)],
                    &[Move::Omega(j, k), Move::Omega(i, j)],
                );
            }
        }
    }
    // commutation relations
    for &i in &labels {
        for (_, _, s) in &swaps {
            let Move::Perm(sig) = s else { unreachable!() };
            let pre = |x: u32| sig.iter().position(|&t| t == x).unwrap() as u32 + 1;
            rep.check(tri, "comm-rho-perm", &[Move::Rho(i), s.clone()], &[s.clone(), Move::Rho(pre(i))]);
            for &j in &labels {
                if i != j {
                    rep.check(
                        tri,
                        "comm-omega-perm",
                        &[Move::Omega(i, j), s.clone()],
                        &[s.clone(), Move::Omega(pre(i), pre(j))],
                    );
                }
            }
        }
        for &j in &labels {
            if i == j {
                continue;
            }
            rep.check(tri, "comm-rho-rho", &[Move::Rho(j), Move::Rho(i)], &[Move::Rho(i), Move::Rho(j)]);
            for &k in &labels {
                if k == i || k == j {
                    continue;
                }
                rep.check(tri, "comm-rho-omega", &[Move::Rho(i), Move::Omega(j, k)], &[Move::Omega(j, k), Move::Rho(i)]);
            }
        }
    }
    for &i in &labels {
        for &j in &labels {
            for &k in &labels {
                for &l in &labels {
                    if i == j || k == l || [k, l].contains(&i) || [k, l].contains(&j) {
                        continue;
                    }
                    rep.check(
                        tri,
                        "comm-omega-omega",
                        &[Move::Omega(i, j), Move::Omega(k, l)],
                        &[Move::Omega(k, l), Move::Omega(i, j)],
                    );
                }
            }
        }
    }
    rep
}
