//! Evaluates every benchmark on its Pareto set and prints the true-front
//! sample of FDA1 over a few environments as CSV.
//!
//! cargo run --example benchmark_fronts > fda1_fronts.csv

use dmoea::problems::write_pf_csv;
use dmoea::{list_problems, time_of, ProblemSpec};

fn main() -> dmoea::Result<()> {
    let t = time_of(30, 10, 10)?;
    eprintln!("t = {t}");
    for problem in list_problems() {
        let position = vec![0.3; problem.m - 1];
        let x = problem.pareto_set_point(&position, t);
        let f = problem.evaluate(&x, t)?;
        eprintln!(
            "{:<6} m={} {:?}  distance to front {:.1e}",
            problem.name(),
            problem.m,
            f,
            problem.pf_residual(&f, t)
        );
    }

    let fda1 = ProblemSpec::by_name("FDA1")?;
    let samples = (0..4)
        .map(|k| fda1.true_pf(k as f64 / 10.0, 11))
        .collect::<dmoea::Result<Vec<_>>>()?;
    write_pf_csv(std::io::stdout().lock(), &samples).expect("stdout");
    Ok(())
}
