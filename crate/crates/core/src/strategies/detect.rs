use crate::error::{Error, Result};
use crate::problems::ProblemSpec;
use crate::rng::RngStream;
use crate::types::Population;

const CHANGE_TOLERANCE: f64 = 1e-12;

/// Re-evaluates `ceil(fraction * |pop|)` random sentinels at `t` and reports
/// whether any objective vector moved.
pub fn detect_change(
    pop: &Population,
    problem: &ProblemSpec,
    t: f64,
    fraction: f64,
    rng: &mut RngStream,
) -> Result<bool> {
    if !(fraction > 0.0 && fraction <= 1.0) {
        return Err(Error::Parameter(format!("detection fraction {fraction} outside (0, 1]")));
    }
    if pop.is_empty() {
        return Ok(false);
    }
    // the small offset keeps e.g. 0.05 * 100 from rounding up to 6
    let count = ((fraction * pop.len() as f64) - 1e-9).ceil().max(1.0) as usize;
    for i in rng.sample_indices(pop.len(), count.min(pop.len())) {
        let ind = &pop.members[i];
        let fresh = problem.evaluate(&ind.x, t)?;
        if fresh
            .iter()
            .zip(&ind.f)
            .any(|(a, b)| (a - b).abs() > CHANGE_TOLERANCE)
        {
            return Ok(true);
        }
    }
    Ok(false)
}
