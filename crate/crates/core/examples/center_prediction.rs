//! Predicting the next non-dominated set from two center points, with and
//! without boundary repair kicking in.

use dmoea::strategies::{boundary_repair, center_point, predict_ndset};
use dmoea::{Bounds, Individual, RngStream};

fn main() -> dmoea::Result<()> {
    let bounds = Bounds::uniform(2, 0.0, 1.0)?;
    let before = vec![
        Individual::new(vec![0.1, 0.2], vec![0.0, 1.0], 0.0),
        Individual::new(vec![0.3, 0.2], vec![1.0, 0.0], 0.0),
    ];
    let now = vec![
        Individual::new(vec![0.4, 0.5], vec![0.0, 1.0], 0.1),
        Individual::new(vec![0.6, 0.5], vec![1.0, 0.0], 0.1),
        Individual::new(vec![0.9, 0.9], vec![0.5, 0.5], 0.1),
    ];
    let c_prev = center_point(&before)?;
    let c_now = center_point(&now)?;
    println!("centers {c_prev:?} -> {c_now:?}");

    let mut rng = RngStream::new(1);
    for (variance, label) in [(0.0, "noise-free"), (0.01, "variance 0.01")] {
        let predicted = predict_ndset(&now, &c_now, &c_prev, variance, &bounds, &mut rng)?;
        println!("{label}:");
        for (src, p) in now.iter().zip(&predicted) {
            println!("  {:?} -> {:?}", src.x, p);
        }
    }

    println!("repair of 1.3 from 0.5: {:?}", boundary_repair(&[0.5], &[1.3], &Bounds::uniform(1, 0.0, 1.0)?));
    Ok(())
}
