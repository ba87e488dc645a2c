//! IGD, hypervolume, HVD and the rank-sum test on small inputs.

use dmoea::metrics::{hvd, hypervolume, igd, reference_point, wilcoxon_ranksum};
use dmoea::ProblemSpec;

fn main() -> dmoea::Result<()> {
    let pf = vec![vec![0.0, 1.0], vec![1.0, 0.0]];
    let approx = vec![vec![0.5, 0.5]];
    println!("IGD {:.6}", igd(&pf, &approx)?);

    let reference = reference_point(&[1.0, 1.0]);
    println!("HV(pf) {}", hypervolume(&pf, &reference)?);
    println!("HVD(pf, {{(0,1)}}) {}", hvd(&pf, &[vec![0.0, 1.0]], &reference)?);

    let fda4 = ProblemSpec::by_name("FDA4")?;
    let front = fda4.true_pf(0.0, 400)?;
    let reference = reference_point(&front.z);
    println!("FDA4 sampled front HV {:.6} with reference {:?}", hypervolume(&front.points, &reference)?, reference.as_slice());

    let a = [0.011, 0.012, 0.010, 0.013, 0.011];
    let b = [1.31, 1.28, 1.35, 1.30, 1.33];
    let test = wilcoxon_ranksum(&a, &b, 0.05)?;
    println!(
        "rank-sum p {:.4} significant {} direction {:?}",
        test.p_value, test.significant, test.direction
    );
    Ok(())
}
