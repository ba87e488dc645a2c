//! The inner optimizer alone on FDA1 frozen at t = 0.

use dmoea::{igd, nondominated_set, random_population, step, ProblemSpec, RngStream, VariationConfig};

fn main() -> dmoea::Result<()> {
    let problem = ProblemSpec::by_name("FDA1")?;
    let pf = problem.true_pf(0.0, 1000)?;
    let cfg = VariationConfig::for_dimension(problem.n);
    let mut rng = RngStream::new(42);
    let mut pop = random_population(&problem, 100, 0.0, &mut rng)?;
    for generation in 1..=200 {
        pop = step(&pop, &problem, 0.0, &cfg, &mut rng)?;
        if generation % 25 == 0 {
            let front: Vec<Vec<f64>> = nondominated_set(&pop.members)?.into_iter().map(|i| i.f).collect();
            println!(
                "generation {generation:>3}: {:>3} non-dominated, IGD {:.4}",
                front.len(),
                igd(&pf.points, &front)?
            );
        }
    }
    Ok(())
}
