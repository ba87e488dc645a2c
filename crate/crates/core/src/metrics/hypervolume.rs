use crate::error::{Error, Result};

/// Exact hypervolume dominated by `front` and bounded by `reference`, for two
/// or three objectives. Points that are not strictly better than the
/// reference in every objective contribute nothing.
pub fn hypervolume(front: &[Vec<f64>], reference: &[f64]) -> Result<f64> {
    let m = reference.len();
    if let Some(bad) = front.iter().find(|p| p.len() != m) {
        return Err(Error::Dimension {
            expected: m,
            actual: bad.len(),
        });
    }
    let inside: Vec<&[f64]> = front
        .iter()
        .filter(|p| p.iter().zip(reference).all(|(v, r)| v < r))
        .map(Vec::as_slice)
        .collect();
    match m {
        2 => {
            let mut pts: Vec<(f64, f64)> = inside.iter().map(|p| (p[0], p[1])).collect();
            Ok(area_2d(&mut pts, reference[0], reference[1]))
        }
        3 => Ok(volume_3d(inside, reference)),
        _ => Err(Error::UnsupportedDimension(m)),
    }
}

fn area_2d(pts: &mut [(f64, f64)], r0: f64, r1: f64) -> f64 {
    pts.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
    let mut area = 0.0;
    let mut ceiling = r1;
    for &(x, y) in pts.iter() {
        if y < ceiling {
            area += (r0 - x) * (ceiling - y);
            ceiling = y;
        }
    }
    area
}

/// Sweeps along the third objective, keeping the 2-D non-dominated staircase
/// of everything below the current slice.
fn volume_3d(mut pts: Vec<&[f64]>, reference: &[f64]) -> f64 {
    pts.sort_by(|a, b| a[2].total_cmp(&b[2]));
    // sorted by f1 ascending, f2 strictly descending
    let mut stair: Vec<(f64, f64)> = Vec::new();
    let mut area = 0.0;
    let mut volume = 0.0;
    for (i, p) in pts.iter().enumerate() {
        let (a, b) = (p[0], p[1]);
        // entries with f1 <= a form a prefix; the last of them has the lowest f2
        let pos = stair.partition_point(|q| q.0 <= a);
        let covered = pos > 0 && stair[pos - 1].1 <= b;
        if !covered {
            let start = stair[..pos].partition_point(|q| q.0 < a);
            let end = pos + stair[pos..].partition_point(|q| q.1 >= b);
            stair.splice(start..end, std::iter::once((a, b)));
            area = staircase_area(&stair, reference[0], reference[1]);
        }
        let next_z = pts.get(i + 1).map_or(reference[2], |q| q[2]);
        volume += area * (next_z - p[2]);
    }
    volume
}

fn staircase_area(stair: &[(f64, f64)], r0: f64, r1: f64) -> f64 {
    let mut area = 0.0;
    let mut ceiling = r1;
    for &(x, y) in stair {
        area += (r0 - x) * (ceiling - y);
        ceiling = y;
    }
    area
}
