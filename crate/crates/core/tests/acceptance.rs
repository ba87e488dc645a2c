//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use dmoea::harness::{run_experiment, write_raw_csv, ExperimentConfig, RunRecord};
use dmoea::metrics::{hvd, hypervolume, igd, wilcoxon_ranksum};
use dmoea::optimizer::{random_population, step, VariationConfig};
use dmoea::pareto::{dominates_objectives, fast_nondominated_sort, nondominated_set};
use dmoea::strategies::{
    boundary_repair, plan_sizes, respond_to_change, StrategyKind, StrategyParams, StrategyState,
};
use dmoea::{Individual, ProblemSpec, RngStream};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn grid(problems: &[&str], strategies: &[&str], tau_t: u64, n_t: u64, runs: u64) -> ExperimentConfig {
    ExperimentConfig {
        problems: problems.iter().map(|s| s.to_string()).collect(),
        strategies: strategies.iter().map(|s| s.to_string()).collect(),
        tau_t,
        n_t,
        npop: 100,
        nmem: 10,
        d: 0.1,
        n_changes: 100,
        runs,
        base_seed: 1,
        dimension: 20,
        ..ExperimentConfig::default()
    }
}

fn run_grid(cfg: &ExperimentConfig) -> Vec<RunRecord> {
    let result = run_experiment(cfg).expect("valid grid");
    assert!(result.failures.is_empty(), "cell failures: {:?}", result.failures);
    result.records
}

fn migds(records: &[RunRecord], problem: &str, strategy: &str) -> Vec<f64> {
    records
        .iter()
        .filter(|r| r.problem == problem && r.strategy == strategy)
        .map(|r| r.migd)
        .collect()
}

fn mean(v: &[f64]) -> f64 {
    v.iter().sum::<f64>() / v.len() as f64
}

// ---- criterion 1 ----

fn brute_force_p(a: &[f64], b: &[f64]) -> f64 {
    let pooled: Vec<f64> = a.iter().chain(b).copied().collect();
    let n = pooled.len();
    let ranks: Vec<f64> = pooled
        .iter()
        .map(|v| {
            let below = pooled.iter().filter(|w| *w < v).count() as f64;
            let equal = pooled.iter().filter(|w| *w == v).count() as f64;
            below + (equal + 1.0) / 2.0
        })
        .collect();
    let centre = a.len() as f64 * (n as f64 + 1.0) / 2.0;
    let observed = (ranks[..a.len()].iter().sum::<f64>() - centre).abs();
    let (mut hit, mut total) = (0u64, 0u64);
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != a.len() {
            continue;
        }
        total += 1;
        let s: f64 = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| ranks[i]).sum();
        if (s - centre).abs() >= observed - 1e-9 {
            hit += 1;
        }
    }
    hit as f64 / total as f64
}

fn random_front(m: usize, size: usize, rng: &mut RngStream) -> Vec<Vec<f64>> {
    let pts: Vec<Individual> = (0..size)
        .map(|_| Individual::from_objectives((0..m).map(|_| rng.uniform()).collect()))
        .collect();
    nondominated_set(&pts).unwrap().into_iter().map(|i| i.f).collect()
}

fn monte_carlo_hv(front: &[Vec<f64>], reference: &[f64], samples: usize, rng: &mut RngStream) -> (f64, f64) {
    let m = reference.len();
    let low: Vec<f64> = (0..m)
        .map(|k| front.iter().map(|p| p[k]).fold(f64::INFINITY, f64::min))
        .collect();
    let volume: f64 = (0..m).map(|k| reference[k] - low[k]).product();
    let mut hits = 0usize;
    let mut z = vec![0.0; m];
    for _ in 0..samples {
        for k in 0..m {
            z[k] = rng.uniform_in(low[k], reference[k]);
        }
        if front.iter().any(|p| p.iter().zip(&z).all(|(a, b)| a <= b)) {
            hits += 1;
        }
    }
    let p = hits as f64 / samples as f64;
    (volume * p, volume * (p * (1.0 - p) / samples as f64).sqrt())
}

fn criterion_1() -> Outcome {
    let mut notes = Vec::new();
    let g = igd(&[vec![0.0, 1.0], vec![1.0, 0.0]], &[vec![0.5, 0.5]]).unwrap();
    if (g - std::f64::consts::FRAC_1_SQRT_2).abs() > 1e-15 {
        return Err(format!("igd example gave {g}"));
    }
    let hv1 = hypervolume(&[vec![0.0, 0.0]], &[1.0, 1.0]).unwrap();
    let hv2 = hypervolume(&[vec![0.0, 1.0], vec![1.0, 0.0]], &[1.5, 1.5]).unwrap();
    let d = hvd(&[vec![0.0, 1.0], vec![1.0, 0.0]], &[vec![0.0, 1.0]], &[1.5, 1.5]).unwrap();
    if (hv1 - 1.0).abs() > 1e-15 || (hv2 - 1.25).abs() > 1e-15 || (d - 0.5).abs() > 1e-15 {
        return Err(format!("hv/hvd examples gave {hv1}, {hv2}, {d}"));
    }
    let w = wilcoxon_ranksum(&[1.0, 2.0, 3.0], &[4.0, 5.0, 6.0], 0.05).unwrap();
    if (w.p_value - 0.1).abs() > 1e-12 {
        return Err(format!("rank-sum example gave p = {}", w.p_value));
    }
    let mut rng = RngStream::new(101);
    for trial in 0..200 {
        let n1 = 3 + rng.index(4);
        let n2 = 3 + rng.index(12 - n1 - 2);
        let a: Vec<f64> = (0..n1).map(|_| rng.index(6) as f64).collect();
        let b: Vec<f64> = (0..n2).map(|_| rng.index(6) as f64).collect();
        let got = wilcoxon_ranksum(&a, &b, 0.05).unwrap().p_value;
        let all_equal = a.iter().chain(&b).all(|v| *v == a[0]);
        let want = if all_equal { 1.0 } else { brute_force_p(&a, &b) };
        if (got - want).abs() > 1e-12 {
            return Err(format!("rank-sum trial {trial}: {got} vs enumeration {want}"));
        }
    }
    notes.push("examples exact, 200 rank-sum enumerations".to_string());

    let mut worst: f64 = 0.0;
    for i in 0..50 {
        let m = 2 + i % 2;
        let front = random_front(m, 5 + rng.index(25), &mut rng);
        let reference = vec![1.1; m];
        let exact = hypervolume(&front, &reference).unwrap();
        let (estimate, se) = monte_carlo_hv(&front, &reference, 1_000_000, &mut rng);
        let z = (exact - estimate).abs() / se;
        worst = worst.max(z);
        if z > 3.0 {
            return Err(format!("front {i} (m={m}): exact {exact} vs MC {estimate}, {z:.2} SE"));
        }
    }
    notes.push(format!("50 HV fronts within {worst:.2} SE of 1e6-sample MC"));
    Ok(notes.join("; "))
}

// ---- criterion 2 ----

fn brute_force_fronts(objs: &[Vec<f64>]) -> Vec<Vec<usize>> {
    let mut left: Vec<usize> = (0..objs.len()).collect();
    let mut fronts = Vec::new();
    while !left.is_empty() {
        let front: Vec<usize> = left
            .iter()
            .copied()
            .filter(|&i| !left.iter().any(|&j| dominates_objectives(&objs[j], &objs[i])))
            .collect();
        left.retain(|i| !front.contains(i));
        fronts.push(front);
    }
    fronts
}

fn criterion_2() -> Outcome {
    let mut rng = RngStream::new(202);
    for trial in 0..200 {
        let m = 2 + trial % 2;
        let n = 1 + rng.index(50);
        let objs: Vec<Vec<f64>> = (0..n)
            .map(|_| (0..m).map(|_| rng.index(8) as f64 / 4.0).collect())
            .collect();
        let pop: Vec<Individual> = objs.iter().map(|f| Individual::from_objectives(f.clone())).collect();
        if fast_nondominated_sort(&pop).unwrap() != brute_force_fronts(&objs) {
            return Err(format!("sort mismatch on population {trial}"));
        }
    }

    for _ in 0..1000 {
        let npop = 1 + rng.index(300);
        let nmem = rng.index(npop);
        let nd = rng.index(400);
        let s = plan_sizes(nd, nmem, npop).unwrap();
        if s.nnd + s.nmem + s.ndiv != npop {
            return Err(format!("size identity broken for {nd}/{nmem}/{npop}"));
        }
    }

    let mut responses = 0;
    for name in ["FDA1", "dMOP2", "FDA4", "F8", "F10"] {
        let problem = ProblemSpec::by_name(name).unwrap().with_severity(10);
        for _ in 0..4 {
            let npop = 20 + rng.index(81);
            let nmem = rng.index(npop / 2);
            let params = StrategyParams::new(npop, nmem, 0.1);
            let mut state = StrategyState::new();
            let mut pop = random_population(&problem, npop, 0.0, &mut rng).unwrap();
            for env in 1..=3 {
                state.record_change(&pop).unwrap();
                pop = random_population(&problem, npop, env as f64 / 10.0, &mut rng).unwrap();
            }
            state.record_change(&pop).unwrap();
            for kind in StrategyKind::ALL {
                let out = respond_to_change(kind, &state, &pop, &problem, 0.4, &params, &mut rng).unwrap();
                responses += 1;
                if out.len() != npop || out.iter().any(|i| !problem.bounds.contains(&i.x) || i.eval_time != 0.4) {
                    return Err(format!("{kind} on {name} broke the response contract"));
                }
            }
        }
    }

    let bounds = dmoea::Bounds::uniform(6, -1.0, 2.0).unwrap();
    for _ in 0..1000 {
        let orig: Vec<f64> = (0..6).map(|_| rng.uniform_in(-1.0, 2.0)).collect();
        let pred: Vec<f64> = (0..6).map(|_| rng.uniform_in(-20.0, 20.0)).collect();
        let once = boundary_repair(&orig, &pred, &bounds);
        if boundary_repair(&orig, &once, &bounds) != once || !bounds.contains(&once) {
            return Err("boundary repair not idempotent".into());
        }
    }
    Ok(format!(
        "200 sorts match brute force; 1000 size identities; {responses} responses sized and in bounds; repair idempotent"
    ))
}

// ---- criteria 3-5 ----

fn criterion_3() -> Outcome {
    let records = run_grid(&grid(&["FDA1"], &["FGERS-CPS", "RIS"], 25, 10, 5));
    let fgers = mean(&migds(&records, "FDA1", "FGERS-CPS"));
    let ris = mean(&migds(&records, "FDA1", "RIS"));
    let ratio = ris / fgers;
    check(
        fgers < 0.1 && ris > 0.5 && ratio > 10.0,
        format!(
            "MIGD FGERS-CPS {fgers:.4} (< 0.1: {}), RIS {ris:.4} (> 0.5: {}), ratio {ratio:.1} (> 10: {})",
            fgers < 0.1,
            ris > 0.5,
            ratio > 10.0
        ),
    )
}

fn criterion_4() -> Outcome {
    let mut cfg = grid(&["FDA1", "dMOP2", "F10"], &["CPS", "CPS-GRS"], 10, 10, 5);
    let records = run_grid(&cfg);
    let mut parts = Vec::new();
    let mut ok = true;
    for problem in ["FDA1", "dMOP2", "F10"] {
        let cps = mean(&migds(&records, problem, "CPS"));
        let grs = mean(&migds(&records, problem, "CPS-GRS"));
        ok &= grs < cps;
        parts.push(format!("{problem} CPS {cps:.4} vs CPS-GRS {grs:.4}"));
    }
    cfg.problems = vec!["F10".into()];
    cfg.runs = 10;
    let f10 = run_grid(&cfg);
    let test = wilcoxon_ranksum(&migds(&f10, "F10", "CPS-GRS"), &migds(&f10, "F10", "CPS"), 0.05).unwrap();
    let better = mean(&migds(&f10, "F10", "CPS-GRS")) < mean(&migds(&f10, "F10", "CPS"));
    ok &= test.p_value < 0.05 && better;
    parts.push(format!("F10 10 runs p = {:.2e}", test.p_value));
    check(ok, parts.join("; "))
}

fn criterion_5() -> Outcome {
    let records = run_grid(&grid(&["FDA1"], &["FPS", "FPS-GRS"], 25, 10, 5));
    let fps = mean(&migds(&records, "FDA1", "FPS"));
    let grs = mean(&migds(&records, "FDA1", "FPS-GRS"));
    check(grs < fps, format!("MIGD FPS {fps:.4} vs FPS-GRS {grs:.4}"))
}

// ---- criteria 6-8 ----

fn criterion_6() -> Outcome {
    let problem = ProblemSpec::by_name("FDA1").unwrap();
    let mut rng = RngStream::new(606);
    let cfg = VariationConfig::for_dimension(problem.n);
    let mut pop = random_population(&problem, 100, 0.0, &mut rng).unwrap();
    for _ in 0..200 {
        pop = step(&pop, &problem, 0.0, &cfg, &mut rng).unwrap();
    }
    let front: Vec<Vec<f64>> = nondominated_set(&pop.members).unwrap().into_iter().map(|i| i.f).collect();
    let pf = problem.true_pf(0.0, 1000).unwrap();
    let value = igd(&pf.points, &front).unwrap();
    check(value < 0.05, format!("IGD after 200 static generations {value:.4}"))
}

fn criterion_7() -> Outcome {
    let mut cfg = grid(&["dMOP2"], &["FGERS-CPS", "PPS"], 10, 10, 2);
    cfg.n_changes = 20;
    let csv_bytes = |cfg: &ExperimentConfig| {
        let mut buf = Vec::new();
        write_raw_csv(&mut buf, &run_grid(cfg)).unwrap();
        buf
    };
    let a = csv_bytes(&cfg);
    let b = csv_bytes(&cfg);
    check(
        a == b && !a.is_empty(),
        format!("{} bytes, identical: {}", a.len(), a == b),
    )
}

fn criterion_8() -> Outcome {
    let cfg = grid(&["FDA1"], &["FGERS-CPS"], 25, 10, 1);
    let record = &run_grid(&cfg)[0];
    let expected: Vec<u64> = (1..=cfg.n_changes).map(|k| k * cfg.tau_t).collect();
    check(
        record.change_generations == expected,
        format!(
            "{} changes detected, expected {} at multiples of {}",
            record.change_generations.len(),
            cfg.n_changes,
            cfg.tau_t
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("indicator oracles", criterion_1),
        ("structural invariants", criterion_2),
        ("FGERS-CPS vs RIS on FDA1", criterion_3),
        ("generational response ablation (CPS)", criterion_4),
        ("generational response ablation (FPS)", criterion_5),
        ("static convergence", criterion_6),
        ("reproducibility", criterion_7),
        ("change detection", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail})", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({detail})", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
