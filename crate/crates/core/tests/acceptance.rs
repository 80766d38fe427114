//! One pass/fail line per acceptance criterion, with timings.
//!
//! Run with `cargo test --test acceptance`. Exits nonzero when any line fails.

mod common;

use std::path::PathBuf;
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::TestRunner;
use ptolemy::opalgebra::{parse_perm, parse_word, DecoratedIndex, DecoratedPermutation, Letter, OperatorWord};
use ptolemy::quantize::{chain_twists, functor, lift_exponent, LiftMethod, RelationInstance, RelationKind, TwistWord};
use ptolemy::rewrite::{
    apply_step, canonical_word, check_script, normalize_bounded, Direction, Rule, Script, Step, DEFAULT_BUDGET,
};
use ptolemy::surface::{chain_torus, random_scenes, relation_suite};

type Outcome = Result<String, String>;

fn data(p: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(p)
}

fn w(s: &str, n: usize) -> OperatorWord {
    parse_word(s, n).unwrap()
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn load(name: &str) -> Result<(RelationInstance, Script), String> {
    let rel = RelationInstance::load(&data(&format!("relations/{name}.rel"))).map_err(|e| e.to_string())?;
    let script = rel.read_script().map_err(|e| e.to_string())?.ok_or("no script")?;
    Ok((rel, script))
}

fn groupoid_suite() -> Outcome {
    let mut rep = relation_suite(&chain_torus());
    let chain = rep.total();
    for t in random_scenes(100, 7) {
        rep.merge(relation_suite(&t));
    }
    ensure(rep.passed(), format!("{} failures, first: {:?}", rep.failures.len(), rep.failures.first()))?;
    ensure(chain > 0, "no instances on the chain scene")?;
    Ok(format!("{} instances ({} on the chain scene, 100 random scenes)", rep.total(), chain))
}

fn algebra_consistency() -> Outcome {
    let lhs = w("T[1,2] T[1,3] T[2,3]", 3);
    let rhs = w("T[2,3] T[1,2]", 3);
    let q = lhs.multiply(&rhs.inverse()).map_err(|e| e.to_string())?;
    let pent = normalize_bounded(&q, DEFAULT_BUDGET);
    ensure(pent == Some((0, DecoratedPermutation::identity(3))), format!("pentagon pair gives {pent:?}"))?;
    let inv = normalize_bounded(&w("T[1,2] T[2,1^]", 2), DEFAULT_BUDGET);
    let want = (1, parse_perm("P[(1 2 1^)]", 2).unwrap());
    ensure(inv.as_ref() == Some(&want), format!("inversion gives {inv:?}"))?;
    Ok("pentagon ζ^0, inversion ζ^1 P[(1 2 1^)]".into())
}

fn lantern_lift() -> Outcome {
    let (rel, script) = load("lantern")?;
    ensure(script.start.as_ref() == Some(&rel.lhs_word().unwrap()), "script does not start at the product")?;
    let l = lift_exponent(&rel, LiftMethod::Script(&script), TwistWord::DEFAULT_NORMALIZATION).map_err(|e| e.to_string())?;
    ensure(l.raw == 6, format!("exponent {}", l.raw))?;
    Ok(format!("ζ^{} over {} steps", l.raw, script.step_count()))
}

fn chain_lift() -> Outcome {
    let tri = chain_torus();
    let (rel, script) = load("chain")?;
    let twists = chain_twists(&tri).map_err(|e| e.to_string())?;
    let word = |name: &str| twists.iter().find(|t| t.name == name).unwrap().operator_word.clone();
    for t in &twists {
        let img = functor(8, &t.groupoid_word).map_err(|e| e.to_string())?;
        ensure(Some(&img) == rel.twist(&t.name), format!("twist {} differs from the relation file", t.name))?;
    }
    let cba = word("c").multiply(&word("b")).unwrap().multiply(&word("a")).unwrap();
    let start = cba.pow(4);
    ensure(script.start.as_ref() == Some(&start), "script does not start at (W_c W_b W_a)^4")?;

    // the forms displayed along the derivation
    let x = w("z T[4,6^] T[4,5^] T[6,1] T[3,4] T[6,4] T[3^,2^] P[(3 1 3^)]", 8);
    let y = w("z^5 T[6^,5^] T[4,6^] T[5v,1] T[2v,3] T[2v,4] T[3^,1^] T[6v,2^] P[(1 6v 3 4^ 1v)]", 8);
    let penultimate = w(
        "z^12 T[5v,6] T[5v,1] T[2v,3] T[2v,4] T[2v,6^] T[5v,3^] T[5v,1^] T[2v,4^] T[5v,6v] T[5v,4v] T[2v,3v] T[1,2^]",
        8,
    );
    let fe = word("f").multiply(&word("e")).unwrap();
    let last = fe.clone().with_zeta(fe.zeta + 12);
    let mut milestones = vec![("product", x.pow(4)), ("square", y.pow(2)), ("penultimate", penultimate), ("final", last.clone())];

    let mut cur = start.clone();
    let mut hit = Vec::new();
    for s in script.steps() {
        cur = apply_step(&cur, s).map_err(|e| e.to_string())?;
        if let Some(i) = milestones.iter().position(|(_, m)| *m == cur) {
            hit.push(milestones.remove(i).0);
        }
    }
    ensure(milestones.is_empty(), format!("never reached: {:?}", milestones.iter().map(|m| m.0).collect::<Vec<_>>()))?;
    ensure(hit == ["product", "square", "penultimate", "final"], format!("order {hit:?}"))?;
    ensure(cur == last, "does not end at ζ^12 W_f W_e")?;

    // ζ^-72 (F̄_c F̄_b F̄_a)^4 = F̄_f F̄_e
    let fbar = |n: &str| {
        let t = twists.iter().find(|t| t.name == n).unwrap().clone();
        t.fbar()
    };
    let lhs = fbar("c").multiply(&fbar("b")).unwrap().multiply(&fbar("a")).unwrap().pow(4);
    ensure(lhs.zeta - 72 + (cur.zeta - start.zeta) == fbar("f").multiply(&fbar("e")).unwrap().zeta, "F̄ bookkeeping")?;
    let rep = check_script(&start, &script, &last);
    ensure(rep.passed(), format!("{:?}", rep.failure))?;
    let l = lift_exponent(&rel, LiftMethod::Script(&script), TwistWord::DEFAULT_NORMALIZATION).map_err(|e| e.to_string())?;
    ensure((l.raw, l.fbar, l.z) == (12, 72, Some(12)), format!("{l}"))?;
    Ok(format!("checkpoints ζ^4 (ζ each), ζ^10 (ζ^5 each), ζ^12; {l}"))
}

fn puncture_lift() -> Outcome {
    let (rel, script) = load("puncture")?;
    let l = lift_exponent(&rel, LiftMethod::Script(&script), TwistWord::DEFAULT_NORMALIZATION).map_err(|e| e.to_string())?;
    ensure(l.raw == 6, format!("exponent {}", l.raw))?;
    let pi = parse_perm("P[(1 6v 3)(2 5^ 4v)(7 7v)]", 7).unwrap();
    let a12 = w("T[7v,4] T[7v,3^] T[7v,4^] T[7v,2^] T[7v,1^] T[7v,2v]", 7);
    let a23 = w("T[7^,2^] T[7^,1^] T[7^,2v] T[7^,5v] T[7^,6] T[7^,5]", 7);
    let a31 = w("T[7,5v] T[7,6] T[7,5] T[7,4] T[7,3^] T[7,4^]", 7);
    let r1 = a12.relabel(&pi).unwrap();
    let r2 = r1.relabel(&pi).unwrap();
    ensure(canonical_word(&r1) == canonical_word(&a23), format!("π(a12) = {r1}"))?;
    ensure(canonical_word(&r2) == canonical_word(&a31), format!("π²(a12) = {r2}"))?;
    let full = rel.twist("a12").unwrap();
    ensure(&full.relabel(&pi).unwrap() == rel.twist("a23").unwrap(), "a23 is not π(a12)")?;
    Ok(format!("ζ^{}, z^{}; π carries a12 to a23 to a31", l.raw, l.z.unwrap_or(0)))
}

fn class_computation() -> Outcome {
    use ptolemy::cohomology::{change_coefficients, class_from_lifts, CoefficientMap, LiftData};
    for (g, s) in [(3, 4), (4, 1), (7, 3)] {
        let c = class_from_lifts(&LiftData::new(12, vec![1; s]), g, s).map_err(|e| e.to_string())?;
        ensure(c.chi_coeff == 12 && c.euler_coeffs == vec![1; s], format!("g={g}: {c}"))?;
    }
    let c = class_from_lifts(&LiftData::new(12, vec![1, 1]), 2, 2).map_err(|e| e.to_string())?;
    ensure(c.chi_coeff == 2 && c.chi_order() == Some(10), format!("g=2: {c}"))?;
    let d = change_coefficients(&c, CoefficientMap::Divisible).map_err(|e| e.to_string())?;
    ensure(d.chi_coeff == 0 && d.euler_coeffs == vec![1, 1], format!("g=2 divisible: {d}"))?;
    let main = class_from_lifts(&LiftData::new(12, vec![1; 4]), 3, 4).unwrap();
    Ok(format!("{main}; g=2: {c}, divisible: {d}"))
}

// Every step that applies to `x`, with insertions drawn from `extra`.
fn applicable_steps(x: &OperatorWord, extra: &[Letter]) -> Vec<Step> {
    let mut out = Vec::new();
    for p in 1..=x.letters.len() + 1 {
        for rule in [Rule::Pentagon, Rule::Inversion, Rule::Symmetry, Rule::Commute, Rule::Cancel] {
            for dir in [Direction::Forward, Direction::Backward] {
                out.push(Step::new(rule, dir, p));
            }
        }
        for &l in extra {
            out.push(Step::bwd(Rule::Cancel, p).with_binding(vec![l, l.inverse()]));
            out.push(Step::bwd(Rule::Inversion, p).with_binding(vec![Letter::t(l.a, l.b), Letter::t(l.b, l.a.shift(1))]));
        }
    }
    out.retain(|s| apply_step(x, s).is_ok());
    out
}

const CASES: u32 = 1000;

fn property_suites() -> Outcome {
    let mut names = Vec::new();
    let mut run = |name: &'static str, f: &dyn Fn(&mut TestRunner) -> Result<(), String>| -> Result<(), String> {
        let mut runner = TestRunner::new(common::config(CASES));
        f(&mut runner).map_err(|e| format!("{name}: {e}"))?;
        names.push(name);
        Ok(())
    };
    let steps = (common::word(4, 6), prop::collection::vec(common::letter(4), 1..3), any::<usize>());
    run("step reversibility", &|r| {
        r.run(&steps, |(x, extra, k)| {
            let all = applicable_steps(&x, &extra);
            let s = &all[k % all.len()];
            let y = apply_step(&x, s).unwrap();
            prop_assert_eq!(apply_step(&y, &s.inverse(&x)).unwrap(), x);
            Ok(())
        })
        .map_err(|e| e.to_string())
    })?;
    run("scalar ledger", &|r| {
        r.run(&steps, |(x, extra, k)| {
            let all = applicable_steps(&x, &extra);
            let s = &all[k % all.len()];
            let d = apply_step(&x, s).unwrap().zeta - x.zeta;
            let want = match (s.rule, s.direction) {
                (Rule::Inversion, Direction::Forward) => 1,
                (Rule::Inversion, Direction::Backward) => -1,
                _ => 0,
            };
            prop_assert_eq!(d, want);
            Ok(())
        })
        .map_err(|e| e.to_string())
    })?;
    run("decoration mod 3", &|r| {
        r.run(&(1u32..9, -20i64..20, -20i64..20), |(l, d, e)| {
            let a = DecoratedIndex::new(l, d).shift(e);
            prop_assert_eq!(a, DecoratedIndex::new(l, (d + e).rem_euclid(3)));
            prop_assert_eq!(a.shift(3), a);
            Ok(())
        })
        .map_err(|e| e.to_string())
    })?;
    run("normal-form canonicity", &|r| {
        r.run(&(common::word(5, 6), prop::collection::vec((any::<bool>(), any::<usize>()), 0..8)), |(x, picks)| {
            let mut y = x.clone();
            for (sym, k) in picks {
                let n = y.letters.len();
                if n == 0 {
                    break;
                }
                let s = if sym || n < 2 { Step::fwd(Rule::Symmetry, k % n + 1) } else { Step::fwd(Rule::Commute, k % (n - 1) + 1) };
                if let Ok(z) = apply_step(&y, &s) {
                    y = z;
                }
            }
            prop_assert_eq!(canonical_word(&x), canonical_word(&y));
            Ok(())
        })
        .map_err(|e| e.to_string())
    })?;
    // T_12 T_2 1^ = ζ P_(1 2 1^), padded to the shape of a puncture relation
    let id = OperatorWord::identity(3);
    let inversion = RelationInstance::new(
        RelationKind::Puncture(1),
        3,
        vec![
            ("x".into(), w("T[1,2]", 3)),
            ("y".into(), w("T[2,1^]", 3)),
            ("o".into(), id.clone()),
            ("p".into(), w("P[(1 2 1^)]", 3)),
            ("q".into(), id.clone()),
            ("r".into(), id),
        ],
        &["x", "y", "o"],
        &["p", "q", "r"],
    )
    .map_err(|e| e.to_string())?;
    let search = |rel: &RelationInstance| {
        lift_exponent(rel, LiftMethod::Search { budget: 50_000 }, -6).map(|l| l.raw).map_err(|e| e.to_string())
    };
    let base = search(&inversion)?;
    run("lift conjugation invariance", &|r| {
        r.run(&common::word(3, 2), |u| {
            prop_assert_eq!(search(&inversion.conjugated(&u).unwrap()), Ok(base));
            Ok(())
        })
        .map_err(|e| e.to_string())
    })?;
    run("lift relabeling invariance", &|r| {
        r.run(&common::dperm(3), |p| {
            prop_assert_eq!(search(&inversion.relabeled(&p).unwrap()), Ok(base));
            Ok(())
        })
        .map_err(|e| e.to_string())
    })?;
    Ok(format!("{} suites x {CASES} cases: {}", names.len(), names.join(", ")))
}

fn independent_search() -> Outcome {
    let inv = normalize_bounded(&w("T[1,2] T[2,1^]", 2), DEFAULT_BUDGET);
    ensure(inv.as_ref().map(|r| r.0) == Some(1), format!("inversion: {inv:?}"))?;
    let mut found = Vec::new();
    for name in ["braid0", "braid1"] {
        let rel = RelationInstance::load(&data(&format!("relations/{name}.rel"))).map_err(|e| e.to_string())?;
        let l = lift_exponent(&rel, LiftMethod::Search { budget: DEFAULT_BUDGET }, -6).map_err(|e| format!("{name}: {e}"))?;
        ensure(l.raw == 0, format!("{name}: ζ^{}", l.raw))?;
        found.push(format!("{name} ζ^0"));
    }
    Ok(format!("inversion ζ^1, {}", found.join(", ")))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, Duration); 8] = [
        ("groupoid presentation suite", groupoid_suite, Duration::from_secs(10)),
        ("functor/algebra consistency", algebra_consistency, Duration::from_secs(1)),
        ("lantern lift", lantern_lift, Duration::from_secs(1)),
        ("chain lift", chain_lift, Duration::from_secs(5)),
        ("puncture lift", puncture_lift, Duration::from_secs(1)),
        ("class computation", class_computation, Duration::from_secs(1)),
        ("property suites", property_suites, Duration::from_secs(600)),
        ("independent search", independent_search, Duration::from_secs(60)),
    ];
    let mut failed = 0;
    for (i, (name, f, limit)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let r = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let el = t.elapsed();
        let r = r.and_then(|m| if el > *limit { Err(format!("{m}; took longer than {limit:?}")) } else { Ok(m) });
        match r {
            Ok(m) => println!("criterion {}: pass  {name} ({:.2}s) {m}", i + 1, el.as_secs_f64()),
            Err(m) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({:.2}s) {m}", i + 1, el.as_secs_f64());
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
