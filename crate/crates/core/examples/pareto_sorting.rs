//! Non-dominated sorting, crowding distance and elitist truncation on a
//! handful of hand-written objective vectors.

use dmoea::pareto::selection_order;
use dmoea::{crowding_distance, environmental_select, fast_nondominated_sort, Individual};

fn main() -> dmoea::Result<()> {
    let pool: Vec<Individual> = [
        [0.0, 4.0],
        [1.0, 2.0],
        [2.0, 1.0],
        [4.0, 0.0],
        [2.0, 3.0],
        [3.0, 3.0],
        [4.0, 4.0],
    ]
    .iter()
    .map(|f| Individual::from_objectives(f.to_vec()))
    .collect();

    let fronts = fast_nondominated_sort(&pool)?;
    for (rank, front) in fronts.iter().enumerate() {
        let members: Vec<Individual> = front.iter().map(|&i| pool[i].clone()).collect();
        let crowding = crowding_distance(&members);
        println!("front {rank}:");
        for (i, cd) in front.iter().zip(crowding) {
            println!("  {:?}  crowding {cd}", pool[*i].f);
        }
    }

    println!("selection order: {:?}", selection_order(&pool)?);
    let kept = environmental_select(pool, 5)?;
    println!("kept after truncation to 5:");
    for ind in &kept {
        println!("  {:?}", ind.f);
    }
    Ok(())
}
