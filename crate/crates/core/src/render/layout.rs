use alloc::collections::BTreeMap;

use super::Point;
use crate::graph::VertexId;

/// Places vertices clockwise on a circle, rank `k` of `n` at
/// `90° - 360°·k/n` (screen y grows downward, so rank 0 sits at the top).
pub fn layout_circular(
    vertices: &[VertexId],
    radius: f64,
    center: Point,
) -> BTreeMap<VertexId, Point> {
    let n = vertices.len() as f64;
    vertices
        .iter()
        .enumerate()
        .map(|(k, &v)| {
            let angle = core::f64::consts::FRAC_PI_2 - core::f64::consts::TAU * k as f64 / n;
            let p = Point::new(
                center.x + radius * libm::cos(angle),
                center.y - radius * libm::sin(angle),
            );
            (v, p)
        })
        .collect()
}
