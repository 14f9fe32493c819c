use alloc::collections::BTreeMap;
use alloc::format;

use super::layout::layout_circular;
use super::{Color, Element, ModePalette, Point, Scene, Shape, Tag};
use crate::graph::NetworkGraph;

pub const CANVAS: f64 = 640.0;
pub const LAYOUT_RADIUS: f64 = 240.0;
pub const VERTEX_RADIUS: f64 = 18.0;
pub const LABEL_SIZE: f64 = 14.0;
pub const MAX_STROKE: f64 = 6.0;
pub const MIN_STROKE: f64 = 0.5;
pub const PARALLEL_GAP: f64 = 14.0;
pub const NEGATIVE_DASH: [f64; 2] = [6.0, 4.0];

/// Stroke width for `weight` relative to the largest magnitude in the graph.
pub fn stroke_width(weight: f64, max_magnitude: f64, base: f64) -> f64 {
    if max_magnitude <= 0.0 {
        return MIN_STROKE;
    }
    (base * libm::fabs(weight) / max_magnitude).clamp(MIN_STROKE, MAX_STROKE)
}

pub(crate) fn split_cubic(p: [Point; 4], t: f64) -> ([Point; 4], [Point; 4]) {
    let ab = p[0].lerp(p[1], t);
    let bc = p[1].lerp(p[2], t);
    let cd = p[2].lerp(p[3], t);
    let abc = ab.lerp(bc, t);
    let bcd = bc.lerp(cd, t);
    let mid = abc.lerp(bcd, t);
    ([p[0], ab, abc, mid], [mid, bcd, cd, p[3]])
}

fn cubic(p: [Point; 4]) -> Shape {
    Shape::Cubic {
        from: p[0],
        c1: p[1],
        c2: p[2],
        to: p[3],
    }
}

/// Circular plot of the multigraph with mode-colored, weight-scaled edges.
pub fn render_native_graph(g: &NetworkGraph, palette: &ModePalette) -> Scene {
    let mut scene = Scene::new(CANVAS, CANVAS);
    let center = Point::new(CANVAS / 2.0, CANVAS / 2.0);
    let pos = layout_circular(g.vertices(), LAYOUT_RADIUS, center);
    let max_w = g
        .edges()
        .iter()
        .map(|e| libm::fabs(e.weight))
        .fold(0.0, f64::max);

    let mut bundles: BTreeMap<(u32, u32), usize> = BTreeMap::new();
    for e in g.edges() {
        *bundles.entry(e.pair()).or_default() += 1;
    }
    let mut seen: BTreeMap<(u32, u32), usize> = BTreeMap::new();

    for (i, e) in g.edges().iter().enumerate() {
        let a = pos[&e.v1];
        let b = pos[&e.v2];
        let k = bundles[&e.pair()];
        let j = seen.entry(e.pair()).or_default();
        let offset = (*j as f64 - (k as f64 - 1.0) / 2.0) * PARALLEL_GAP;
        *j += 1;

        let len = a.distance(b).max(f64::EPSILON);
        let (nx, ny) = (-(b.y - a.y) / len, (b.x - a.x) / len);
        // Both controls shifted by d move the curve midpoint by 0.75·d.
        let d = offset / 0.75;
        let c1 = a.lerp(b, 1.0 / 3.0);
        let c2 = a.lerp(b, 2.0 / 3.0);
        let ctrl = [
            a,
            Point::new(c1.x + nx * d, c1.y + ny * d),
            Point::new(c2.x + nx * d, c2.y + ny * d),
            b,
        ];

        let width = stroke_width(e.weight, max_w, MAX_STROKE);
        let dash = (e.weight < 0.0).then_some(NEGATIVE_DASH);
        if e.is_mixed() {
            let (first, second) = split_cubic(ctrl, 0.5);
            for (half, mode) in [(first, e.mode1), (second, e.mode2)] {
                scene.push(
                    Element::stroked(cubic(half), palette.color(mode), width, Tag::Edge(i))
                        .dashed(dash),
                );
            }
        } else {
            scene.push(
                Element::stroked(cubic(ctrl), palette.color(e.mode1), width, Tag::Edge(i))
                    .dashed(dash),
            );
        }
    }

    for &v in g.vertices() {
        let p = pos[&v];
        scene.push(Element::filled(
            Shape::Circle {
                center: p,
                radius: VERTEX_RADIUS,
            },
            Color::LightGray,
            Tag::Vertex(v),
        ));
        scene.push(Element::text(
            Point::new(p.x, p.y + LABEL_SIZE * 0.35),
            format!("{v}"),
            LABEL_SIZE,
            Tag::Label(v),
        ));
    }
    scene.finish()
}
