//! Acceptance suite: one PASS/FAIL line per criterion.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::handle::words_equal;
use common::{random_braid, random_letters, random_rewrite, random_valid_factorization, random_valid_rep};
use monodromy_core::induction::ChainOptions;
use monodromy_core::lattice;
use monodromy_core::search::{self, Budget};
use monodromy_core::van_kampen::{abelianization, presentation_from_factorization};
use monodromy_core::{
    build_cover, validate_chain, BraidFactorization, BraidWord, Direction, Factor, FreeWord, LinearSystemData,
    Mode, MonodromyRep, ValidationReport,
};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn within(limit: Duration, start: Instant, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    if t > limit {
        return Err(format!("{what} took {t:.2?}, limit {limit:.0?}"));
    }
    Ok(())
}

fn word_problem() -> Outcome {
    let mut worst = Duration::ZERO;
    for d in 2..=6 {
        let start = Instant::now();
        let twist = BraidWord::full_twist(d).unwrap();
        let row: Vec<i32> = (1..d as i32).collect();
        let power = BraidWord::new(d, row.repeat(d)).unwrap();
        ensure!(twist.canonical_form() == power.canonical_form(), "d = {d}: canonical forms differ");
        within(Duration::from_secs(1), start, &format!("d = {d}"))?;
        worst = worst.max(start.elapsed());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1001);
    let mut equal = 0;
    for k in 0..500 {
        let d = rng.gen_range(2..=5);
        let la = rng.gen_range(0..=24);
        let a = random_letters(&mut rng, d, la);
        let b = if k % 2 == 0 {
            let mut b = a.clone();
            for _ in 0..rng.gen_range(1..6) {
                random_rewrite(&mut rng, d, &mut b);
            }
            if b.len() > 30 {
                a.clone()
            } else {
                b
            }
        } else {
            let lb = rng.gen_range(0..=30);
            random_letters(&mut rng, d, lb)
        };
        let ours = BraidWord::new(d, a.clone()).unwrap().group_eq(&BraidWord::new(d, b.clone()).unwrap());
        let oracle = words_equal(&a, &b);
        ensure!(ours == oracle, "disagreement on {a:?} vs {b:?}: ours {ours}, oracle {oracle}");
        equal += usize::from(oracle);
    }
    Ok(format!("d = 2..6 twist forms agree (slowest {worst:.2?}); 500 pairs, {equal} equal, 0 disagreements"))
}

fn exponent_sum_law() -> Outcome {
    for d in 2..=8usize {
        let e = BraidWord::full_twist(d).unwrap().exponent_sum();
        ensure!(e == (d * (d - 1)) as i64, "d = {d}: exponent sum {e}");
    }
    Ok("d = 2..8 exact".into())
}

fn random_free_word(rng: &mut ChaCha8Rng, rank: usize, max_len: usize) -> FreeWord {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..=rank as i32);
            if rng.gen_bool(0.5) { g } else { -g }
        })
        .collect();
    FreeWord::new(rank, letters).unwrap()
}

fn artin_invariance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1003);
    for _ in 0..1000 {
        let d = rng.gen_range(2..=6);
        let q = random_braid(&mut rng, d, 20);
        let b = FreeWord::boundary(d);
        ensure!(b.artin_act(&q).unwrap().free_reduce() == b, "boundary moved by {q}");
    }
    for _ in 0..200 {
        let d = rng.gen_range(2..=6);
        let q = random_braid(&mut rng, d, 8);
        let r = random_braid(&mut rng, d, 8);
        let w = random_free_word(&mut rng, d, 8);
        let lhs = w.artin_act(&q.compose(&r).unwrap()).unwrap().free_reduce();
        let rhs = w.artin_act(&q).unwrap().artin_act(&r).unwrap().free_reduce();
        ensure!(lhs == rhs, "functoriality fails for w = {w}, Q = {q}, R = {r}");
        let back = w.artin_act(&q).unwrap().artin_act(&q.invert()).unwrap().free_reduce();
        ensure!(back == w.free_reduce(), "Q⁻¹ does not undo Q = {q} on {w}");
    }
    Ok("1000 boundary checks, 200 functoriality and inverse checks".into())
}

fn same_factors(a: &BraidFactorization, b: &BraidFactorization) -> bool {
    a.len() == b.len()
        && a.factors().iter().zip(b.factors()).all(|(x, y)| {
            x.degree == y.degree && x.underlying_braid().unwrap().group_eq(&y.underlying_braid().unwrap())
        })
}

fn move_soundness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1004);
    let (mut moves, mut creates_tried, mut admissible) = (0, 0, 0);
    for _ in 0..200 {
        let f = random_valid_factorization(&mut rng);
        ensure!(f.is_valid() && f.len() <= 12, "generator produced a bad sample");
        let d = f.strands();
        let i = rng.gen_range(0..f.len() - 1);
        for dir in [Direction::Forward, Direction::Backward] {
            let g = f.hurwitz_move(i, dir).unwrap();
            ensure!(g.is_valid(), "Hurwitz {i} {dir:?} broke validity");
            let undo = if dir == Direction::Forward { Direction::Backward } else { Direction::Forward };
            ensure!(same_factors(&g.hurwitz_move(i, undo).unwrap(), &f), "Hurwitz {i} not undone");
            moves += 1;
        }
        let q = random_braid(&mut rng, d, 6);
        ensure!(f.global_conjugate(&q).unwrap().is_valid(), "conjugation by {q} broke validity");
        // a node pair to cancel
        let mut factors = f.factors().to_vec();
        let at = rng.gen_range(0..=factors.len());
        factors.insert(at, Factor::new(q.clone(), 2));
        factors.insert(at, Factor::new(q.clone(), -2));
        let with_pair = f.with_factors(factors).unwrap();
        ensure!(with_pair.is_valid(), "inserted node pair broke validity");
        let cancelled = with_pair.cancel_pair(at).unwrap();
        ensure!(cancelled.is_valid() && same_factors(&cancelled, &f), "cancel at {at} wrong");
        moves += 2;
        if d % 2 == 0 {
            let theta = random_valid_rep(&mut rng, 2, d);
            creates_tried += 1;
            if let Ok(g) = f.create_pair(rng.gen_range(0..=f.len()), &q, &theta) {
                ensure!(g.is_valid(), "admissible creation broke validity");
                admissible += 1;
            }
        }
    }
    Ok(format!(
        "200 factorizations, {moves} moves valid; {creates_tried} creation attempts, {admissible} admissible"
    ))
}

fn h1_of_smooth_curves() -> Outcome {
    let mut parts = Vec::new();
    for d in 2..=4usize {
        let f = BraidFactorization::smooth_curve(d).unwrap();
        let proj = abelianization(&presentation_from_factorization(&f, Mode::Projective).unwrap());
        ensure!(proj.free_rank == 0 && proj.torsion == vec![BigInt::from(d)], "d = {d}: projective {proj}");
        let aff = abelianization(&presentation_from_factorization(&f, Mode::Affine).unwrap());
        ensure!(aff.free_rank == 1 && aff.torsion.is_empty(), "d = {d}: affine {aff}");
        parts.push(format!("{proj}"));
    }
    Ok(format!("projective {}, affine Z", parts.join(", ")))
}

fn full_check(theta: &MonodromyRep, f: &BraidFactorization) -> ValidationReport {
    let mut r = theta.check_compatibility(f).unwrap();
    r.absorb("factorization", f.validate());
    r
}

fn compatibility_checker() -> Outcome {
    let data = [
        (MonodromyRep::hyperelliptic(2), BraidFactorization::smooth_curve(2).unwrap()),
        (MonodromyRep::hyperelliptic(4), BraidFactorization::smooth_curve(4).unwrap()),
    ];
    for (theta, f) in &data {
        let r = full_check(theta, f);
        ensure!(r.pass, "rejects clean data on {} strands:\n{r}", f.strands());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1006);
    let mut kinds = [0usize; 3];
    for k in 0..50 {
        let kind = k % 3;
        // B_2 is abelian, so conjugator changes cannot break the conic's product
        let (theta, f) = &data[if kind == 2 { 1 } else { rng.gen_range(0..2) }];
        let d = f.strands();
        kinds[kind] += 1;
        match kind {
            0 => {
                let j = rng.gen_range(0..f.len());
                let mut factors = f.factors().to_vec();
                factors[j].degree = if rng.gen_bool(0.5) { 2 } else { 3 };
                let r = full_check(theta, &f.with_factors(factors).unwrap());
                let bad: Vec<&str> = r.failures().map(|c| c.name.as_str()).filter(|n| n.starts_with("factor[")).collect();
                ensure!(bad == [format!("factor[{j}]")], "degree flip at {j} reported as {bad:?}");
            }
            1 => {
                let i = rng.gen_range(0..d);
                let mut pairs = theta.pairs();
                pairs[i] = (1, 1);
                let mutated = MonodromyRep::from_pairs(2, &pairs).unwrap();
                let r = full_check(&mutated, f);
                let c = r.check("rep.transpositions").unwrap();
                ensure!(!c.pass && c.detail.contains(&format!("γ{}", i + 1)), "image {i} change reported as {c:?}");
                ensure!(r.check("factorization.product_is_full_twist").unwrap().pass, "image change blamed on F");
            }
            _ => {
                let (j, factors) = loop {
                    let j = rng.gen_range(0..f.len());
                    let mut factors = f.factors().to_vec();
                    let extra = BraidWord::generator(d, rng.gen_range(1..d as i32)).unwrap();
                    factors[j].conj = factors[j].conj.compose(&extra).unwrap();
                    let old = f.factors()[j].underlying_braid().unwrap();
                    if !factors[j].underlying_braid().unwrap().group_eq(&old) {
                        break (j, factors);
                    }
                };
                let r = full_check(theta, &f.with_factors(factors).unwrap());
                ensure!(!r.check("factorization.product_is_full_twist").unwrap().pass, "product break at {j} missed");
                ensure!(r.check("rep.product_identity").unwrap().pass, "product break blamed on θ");
            }
        }
    }
    Ok(format!(
        "conic and quartic accepted; 50 mutations rejected and localized ({} degree, {} image, {} product)",
        kinds[0], kinds[1], kinds[2]
    ))
}

fn riemann_hurwitz() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1007);
    for _ in 0..100 {
        let n = rng.gen_range(2..=4usize);
        let d = 2 * rng.gen_range(n - 1..=6);
        let theta = random_valid_rep(&mut rng, n, d);
        let c = build_cover(&theta).unwrap();
        let chi = c.vertex_count() as i64 - c.edge_count() as i64;
        let twice_g = 2 - chi - c.boundary_count() as i64;
        let expected = 2 * (1 - n as i64) + d as i64;
        ensure!(twice_g == expected && c.genus() as i64 * 2 == expected, "n = {n}, d = {d}: 2g = {twice_g}");
    }
    Ok("100 random covers, n ≤ 4, d ≤ 12".into())
}

fn liftable_power(theta: &MonodromyRep, q: &BraidWord) -> Option<BraidWord> {
    let mut current = theta.transported(q).unwrap();
    let mut power = q.clone();
    for _ in 0..40 {
        if current == *theta {
            return Some(power);
        }
        current = current.transported(q).unwrap();
        power = power.compose(q).unwrap();
    }
    None
}

fn symplectic_lifts() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1008);
    let mut pairs = 0;
    while pairs < 200 {
        let n = rng.gen_range(2..=4usize);
        let d = 2 * rng.gen_range(n - 1..=4);
        let c = build_cover(&random_valid_rep(&mut rng, n, d)).unwrap();
        let sample = |rng: &mut ChaCha8Rng| loop {
            if let Some(p) = liftable_power(c.theta(), &random_braid(rng, d, 4)) {
                return p;
            }
        };
        let (q, r) = (sample(&mut rng), sample(&mut rng));
        let (mq, mr) = (c.lift_action(&q).unwrap(), c.lift_action(&r).unwrap());
        let j = c.intersection_form();
        let mt_j_m = lattice::mul(&lattice::mul(&lattice::transpose(&mq.matrix), j).unwrap(), &mq.matrix).unwrap();
        ensure!(&mt_j_m == j, "MᵀJM ≠ J for {q}");
        ensure!(c.lift_action(&q.compose(&r).unwrap()).unwrap() == mq.compose(&mr).unwrap(), "not functorial");
        pairs += 1;
    }
    // quartic double cover against the reduced Burau matrices at t = -1
    let c = build_cover(&MonodromyRep::hyperelliptic(4)).unwrap();
    let arcs: Vec<Vec<i64>> = (1..=3)
        .map(|j| c.project(&c.lift_chain(&FreeWord::new(4, vec![j, j + 1]).unwrap(), c.theta(), 0).unwrap().0).unwrap())
        .collect();
    let mut burau = lattice::identity(3);
    burau[1][0] = 1;
    let m = c.lift_action(&BraidWord::generator(4, 1).unwrap()).unwrap();
    ensure!(
        lattice::mul(&arcs, &m.matrix).unwrap() == lattice::mul(&burau, &arcs).unwrap(),
        "σ1 disagrees with Burau at -1"
    );
    ensure!(c.lift_action(&BraidWord::full_twist(4).unwrap()).unwrap().is_identity(), "Δ² lifts nontrivially");
    Ok("200 liftable pairs symplectic and functorial; quartic σ1 = Burau(-1); Δ² ↦ I".into())
}

fn pencil_shadow() -> Outcome {
    let start = Instant::now();
    let c = build_cover(&MonodromyRep::hyperelliptic(4)).unwrap();
    let f = BraidFactorization::smooth_curve(4).unwrap();
    let r = c.pencil_monodromy_check(&f);
    ensure!(r.pass, "quartic rejected:\n{r}");
    let mut factors = f.factors().to_vec();
    factors[1].conj = factors[1].conj.invert();
    let r = c.pencil_monodromy_check(&f.with_factors(factors).unwrap());
    ensure!(!r.check("product").unwrap().pass, "mutated product accepted");
    within(Duration::from_secs(5), start, "pencil check")?;
    Ok(format!("12 transvections multiply to the lift of Δ²; mutation caught ({:.2?})", start.elapsed()))
}

fn equivalence_search() -> Outcome {
    let conic = BraidFactorization::smooth_curve(2).unwrap();
    let conj = conic.global_conjugate(&BraidWord::generator(2, 1).unwrap()).unwrap();
    let shallow = Budget { max_depth: 2, ..Budget::default() };
    let script = match search::equivalence_search(&conic, &conj, None, shallow).unwrap() {
        search::SearchOutcome::Equivalent(s) => s,
        other => return Err(format!("conic: {other:?}")),
    };
    let end = search::replay(&conic, None, &script).unwrap();
    ensure!(search::factor_key(&end).unwrap() == search::factor_key(&conj).unwrap(), "conic script does not replay");

    let mut rng = ChaCha8Rng::seed_from_u64(1010);
    let cubic = BraidFactorization::smooth_curve(3).unwrap();
    let mut shuffled = cubic.clone();
    for _ in 0..3 {
        shuffled = shuffled.hurwitz_move(rng.gen_range(0..5), Direction::Forward).unwrap();
    }
    let script = match search::equivalence_search(&cubic, &shuffled, None, Budget::default()).unwrap() {
        search::SearchOutcome::Equivalent(s) => s,
        other => return Err(format!("cubic: {other:?}")),
    };
    let end = search::replay(&cubic, None, &script).unwrap();
    ensure!(search::factor_key(&end).unwrap() == search::factor_key(&shuffled).unwrap(), "cubic script does not replay");
    Ok(format!("conic within depth 2; cubic shuffle found with a {}-move script; both replay", script.len()))
}

fn induction() -> Outcome {
    let start = Instant::now();
    let quartic = BraidFactorization::smooth_curve(4).unwrap();
    let good = LinearSystemData { half_dimension: 2, theta1: MonodromyRep::hyperelliptic(4), rhos: vec![quartic.clone()] };
    let v = validate_chain(&good, ChainOptions::default());
    ensure!(v.pass() && !v.structural_only(), "quartic chain rejected:\n{}", v.report);

    let fails = |data: &LinearSystemData, name: &str| -> Result<(), String> {
        let v = validate_chain(data, ChainOptions::default());
        match v.report.check(name) {
            Some(c) if !c.pass => Ok(()),
            _ => Err(format!("expected {name} to fail:\n{}", v.report)),
        }
    };
    let mut lift = good.clone();
    lift.theta1 = MonodromyRep::from_pairs(3, &[(1, 2), (1, 2), (2, 3), (2, 3)]).unwrap();
    fails(&lift, "level1.liftable")?;
    let mut chain = good.clone();
    chain.half_dimension = 3;
    chain.rhos.push(BraidFactorization::smooth_curve(3).unwrap());
    fails(&chain, "chain.rho3")?;
    let mut valid = good.clone();
    let mut factors = quartic.factors().to_vec();
    factors[0].degree = 2;
    valid.rhos[0] = quartic.with_factors(factors).unwrap();
    fails(&valid, "rho2.product_is_full_twist")?;
    within(Duration::from_secs(10), start, "induction")?;
    Ok(format!("quartic chain passes; liftability, index-chain and validity breaks caught ({:.2?})", start.elapsed()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("word problem", word_problem),
        ("exponent-sum law", exponent_sum_law),
        ("Artin-action invariance", artin_invariance),
        ("move soundness", move_soundness),
        ("van Kampen abelianization", h1_of_smooth_curves),
        ("compatibility checker", compatibility_checker),
        ("Riemann-Hurwitz", riemann_hurwitz),
        ("homological lifts", symplectic_lifts),
        ("pencil shadow", pencil_shadow),
        ("m-equivalence search", equivalence_search),
        ("induction validator", induction),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let t = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} [{t:.2?}]", k + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {:>2} FAIL  {name}: {why} [{t:.2?}]", k + 1);
            }
        }
    }
    if failures > 0 {
        println!("{failures} criteria failed");
        std::process::exit(1);
    }
}
