use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::native::{stroke_width, NEGATIVE_DASH};
use super::{Color, Element, ModePalette, Point, Scene, Shape, Tag};
use crate::graph::{Edge, NetworkGraph, VertexId};
use crate::roles::RoleAssignment;
use crate::strategy::{Strategy, StrategyPlan};

pub const SOURCE_HALF: f64 = 14.0;
pub const DETECTOR_RADIUS: f64 = 14.0;
pub const SPLITTER_SIDE: f64 = 22.0;
pub const CRYSTAL_WIDTH: f64 = 18.0;
pub const CRYSTAL_HEIGHT: f64 = 12.0;
pub const CRYSTAL_PITCH: f64 = 26.0;
pub const PUMP_WIDTH: f64 = 90.0;
pub const PUMP_HEIGHT: f64 = 36.0;
pub const GLYPH_PITCH: f64 = 70.0;
pub const ROW_GAP: f64 = 160.0;
pub const MARGIN: f64 = 90.0;
pub const ROUTE_WIDTH: f64 = 3.0;
pub const REGION_PAD: f64 = 30.0;
pub const REGION_DASH: [f64; 2] = [8.0, 4.0];
pub const TEXT_SIZE: f64 = 11.0;
pub const SOURCE_WAVELENGTH: &str = "810nm";
pub const PUMP_WAVELENGTH: &str = "405nm";
pub const CRYSTAL_LABEL: &str = "BBO";

#[derive(Clone, Copy, PartialEq)]
enum Flow {
    Down,
    Right,
}

struct Board<'a> {
    scene: Scene,
    palette: &'a ModePalette,
    max_weight: f64,
    sources: BTreeMap<VertexId, Point>,
    splitters: BTreeMap<VertexId, Point>,
    detectors: BTreeMap<VertexId, Point>,
}

impl<'a> Board<'a> {
    fn new(g: &NetworkGraph, palette: &'a ModePalette) -> Self {
        Board {
            scene: Scene::new(0.0, 0.0),
            palette,
            max_weight: g
                .edges()
                .iter()
                .map(|e| libm::fabs(e.weight))
                .fold(0.0, f64::max),
            sources: BTreeMap::new(),
            splitters: BTreeMap::new(),
            detectors: BTreeMap::new(),
        }
    }

    fn source(&mut self, v: VertexId, at: Point, wavelength: bool) {
        self.sources.insert(v, at);
        self.scene.push(
            Element::filled(
                Shape::Diamond {
                    center: at,
                    half: SOURCE_HALF,
                },
                Color::Khaki,
                Tag::Source(v),
            )
            .with_stroke(Color::Black, 1.0),
        );
        self.scene.push(Element::text(
            Point::new(at.x, at.y - SOURCE_HALF - 6.0),
            format!("S{v}"),
            TEXT_SIZE,
            Tag::Label(v),
        ));
        if wavelength {
            self.scene.push(Element::text(
                Point::new(at.x, at.y + SOURCE_HALF + 14.0),
                SOURCE_WAVELENGTH,
                TEXT_SIZE,
                Tag::Label(v),
            ));
        }
    }

    fn splitter(&mut self, v: VertexId, at: Point) {
        self.splitters.insert(v, at);
        let h = SPLITTER_SIDE / 2.0;
        self.scene.push(
            Element::filled(
                Shape::Rect {
                    origin: Point::new(at.x - h, at.y - h),
                    width: SPLITTER_SIDE,
                    height: SPLITTER_SIDE,
                },
                Color::LightSteelBlue,
                Tag::BeamSplitter(v),
            )
            .with_stroke(Color::Black, 1.0),
        );
        self.scene.push(Element::text(
            Point::new(at.x, at.y - h - 6.0),
            format!("BS{v}"),
            TEXT_SIZE,
            Tag::Label(v),
        ));
    }

    fn detector(&mut self, v: VertexId, at: Point) {
        self.detectors.insert(v, at);
        self.scene.push(Element::filled(
            Shape::Semicircle {
                center: at,
                radius: DETECTOR_RADIUS,
            },
            Color::DimGray,
            Tag::Detector(v),
        ));
        self.scene.push(Element::text(
            Point::new(at.x, at.y + DETECTOR_RADIUS + 14.0),
            format!("D{v}"),
            TEXT_SIZE,
            Tag::Label(v),
        ));
    }

    /// Glyphs a photon reaching `v` passes through, ending at a detector
    /// whenever `v` has one.
    fn sink_chain(&self, v: VertexId) -> Vec<Point> {
        let mut chain: Vec<Point> = self.splitters.get(&v).copied().into_iter().collect();
        if let Some(&d) = self.detectors.get(&v) {
            chain.push(d);
        }
        if chain.is_empty() {
            chain.extend(self.sources.get(&v).copied());
        }
        chain
    }

    fn entry(&self, v: VertexId) -> Option<Point> {
        self.sources
            .get(&v)
            .or_else(|| self.splitters.get(&v))
            .or_else(|| self.detectors.get(&v))
            .copied()
    }

    fn route(&mut self, i: usize, e: &Edge, points: Vec<Point>, from_mode: u32, to_mode: u32) {
        let width = stroke_width(e.weight, self.max_weight, ROUTE_WIDTH);
        let dash = (e.weight < 0.0).then_some(NEGATIVE_DASH);
        if from_mode == to_mode {
            let color = self.palette.color(from_mode);
            self.scene.push(
                Element::stroked(Shape::Polyline { points }, color, width, Tag::Route(i))
                    .dashed(dash),
            );
        } else {
            let (a, b) = split_polyline(&points);
            for (pts, mode) in [(a, from_mode), (b, to_mode)] {
                let color = self.palette.color(mode);
                self.scene.push(
                    Element::stroked(Shape::Polyline { points: pts }, color, width, Tag::Route(i))
                        .dashed(dash),
                );
            }
        }
    }

    /// Direct source-to-detector routing used by the single-photon and
    /// adaptive layouts.
    fn direct_routes(
        &mut self,
        g: &NetworkGraph,
        flow: Flow,
        lanes: (f64, f64),
        splitter_lanes: (f64, f64),
    ) {
        let n = g.edge_count() as f64;
        for (i, e) in g.edges().iter().enumerate() {
            let (from, to) =
                if !self.sources.contains_key(&e.v1) && self.sources.contains_key(&e.v2) {
                    (e.v2, e.v1)
                } else {
                    (e.v1, e.v2)
                };
            let Some(start) = self.entry(from) else {
                continue;
            };
            let chain = self.sink_chain(to);
            let t = (i as f64 + 1.0) / (n + 1.0);
            let mut points = vec![start];
            let mut prev = start;
            for (k, &p) in chain.iter().enumerate() {
                let (lo, hi) = if k == 0 && chain.len() > 1 {
                    splitter_lanes
                } else {
                    lanes
                };
                let lane = lo + (hi - lo) * t;
                match flow {
                    Flow::Down => points.extend([Point::new(prev.x, lane), Point::new(p.x, lane)]),
                    Flow::Right => points.extend([Point::new(lane, prev.y), Point::new(lane, p.y)]),
                }
                points.push(p);
                prev = p;
            }
            let (fm, tm) = if from == e.v1 {
                (e.mode1, e.mode2)
            } else {
                (e.mode2, e.mode1)
            };
            self.route(i, e, points, fm, tm);
        }
    }

    fn herald_region(&mut self, members: &BTreeSet<VertexId>) {
        let pts: Vec<Point> = members
            .iter()
            .flat_map(|v| [self.detectors.get(v), self.splitters.get(v)])
            .flatten()
            .copied()
            .collect();
        if pts.is_empty() {
            return;
        }
        let x0 = pts.iter().map(|p| p.x).fold(f64::INFINITY, f64::min) - REGION_PAD;
        let x1 = pts.iter().map(|p| p.x).fold(f64::NEG_INFINITY, f64::max) + REGION_PAD;
        let y0 = pts.iter().map(|p| p.y).fold(f64::INFINITY, f64::min) - REGION_PAD;
        let y1 = pts.iter().map(|p| p.y).fold(f64::NEG_INFINITY, f64::max) + REGION_PAD;
        self.scene.push(
            Element::filled(
                Shape::Rect {
                    origin: Point::new(x0, y0),
                    width: x1 - x0,
                    height: y1 - y0,
                },
                Color::Ivory,
                Tag::Region,
            )
            .with_stroke(Color::SlateGray, 1.5)
            .dashed(Some(REGION_DASH)),
        );
        self.scene.push(Element::text(
            Point::new((x0 + x1) / 2.0, y0 - 6.0),
            "heralding",
            TEXT_SIZE,
            Tag::Caption,
        ));
    }

    fn finish(mut self, width: f64, height: f64, caption: &str) -> Scene {
        self.scene.push(Element::text(
            Point::new(width / 2.0, 24.0),
            caption,
            14.0,
            Tag::Caption,
        ));
        self.scene.width = width;
        self.scene.height = height;
        self.scene.finish()
    }
}

fn split_polyline(points: &[Point]) -> (Vec<Point>, Vec<Point>) {
    let total: f64 = points.windows(2).map(|w| w[0].distance(w[1])).sum();
    let half = total / 2.0;
    let mut walked = 0.0;
    for (k, w) in points.windows(2).enumerate() {
        let seg = w[0].distance(w[1]);
        if walked + seg >= half && seg > 0.0 {
            let mid = w[0].lerp(w[1], (half - walked) / seg);
            let mut a = points[..=k].to_vec();
            a.push(mid);
            let mut b = vec![mid];
            b.extend_from_slice(&points[k + 1..]);
            return (a, b);
        }
        walked += seg;
    }
    let last = *points.last().unwrap_or(&Point::default());
    (points.to_vec(), vec![last, last])
}

/// Detectors with parties first and ancillas last, so the ancillas cluster
/// together at the end of their row or column.
fn detector_order(r: &RoleAssignment) -> Vec<VertexId> {
    let mut v: Vec<VertexId> = r
        .detectors
        .iter()
        .filter(|d| !r.ancillas.contains(d))
        .copied()
        .collect();
    v.extend(r.detectors.iter().filter(|d| r.ancillas.contains(d)));
    v
}

fn spread(count: usize, start: f64) -> impl Iterator<Item = f64> {
    (0..count).map(move |k| start + GLYPH_PITCH * k as f64)
}

fn centered(count: usize, width: f64) -> f64 {
    (width - GLYPH_PITCH * (count.max(1) - 1) as f64) / 2.0
}

fn single_photon(g: &NetworkGraph, r: &RoleAssignment, palette: &ModePalette) -> Scene {
    let mut b = Board::new(g, palette);
    let widest = r
        .sources
        .len()
        .max(r.detectors.len())
        .max(r.beam_splitters.len())
        .max(1);
    let width = (2.0 * MARGIN + GLYPH_PITCH * (widest - 1) as f64).max(640.0);
    let has_splitters = !r.beam_splitters.is_empty();
    let source_y = 90.0;
    let splitter_y = source_y + ROW_GAP;
    let detector_y = if has_splitters {
        splitter_y + ROW_GAP
    } else {
        splitter_y
    };

    for (v, x) in r
        .sources
        .iter()
        .zip(spread(r.sources.len(), centered(r.sources.len(), width)))
    {
        b.source(*v, Point::new(x, source_y), true);
    }
    let bs = &r.beam_splitters;
    for (v, x) in bs.iter().zip(spread(bs.len(), centered(bs.len(), width))) {
        b.splitter(*v, Point::new(x, splitter_y));
    }
    let dets = detector_order(r);
    for (v, x) in dets
        .iter()
        .zip(spread(dets.len(), centered(dets.len(), width)))
    {
        b.detector(*v, Point::new(x, detector_y));
    }
    let lanes = (detector_y - ROW_GAP + 30.0, detector_y - 30.0);
    let splitter_lanes = (source_y + 30.0, splitter_y - 30.0);
    b.direct_routes(g, Flow::Down, lanes, splitter_lanes);
    b.herald_region(&r.ancillas);
    b.finish(width, detector_y + 90.0, "single-photon sources")
}

fn adaptive(g: &NetworkGraph, r: &RoleAssignment, palette: &ModePalette) -> Scene {
    let mut b = Board::new(g, palette);
    let width = 760.0;
    let (left, mid, right) = (MARGIN, width / 2.0, width - MARGIN);
    let top = 90.0;
    let tallest = r
        .sources
        .len()
        .max(r.detectors.len())
        .max(r.beam_splitters.len())
        .max(1);
    let height = top + GLYPH_PITCH * (tallest - 1) as f64 + 90.0;

    for (v, y) in r.sources.iter().zip(spread(r.sources.len(), top)) {
        b.source(*v, Point::new(left, y), false);
    }
    for (v, y) in r
        .beam_splitters
        .iter()
        .zip(spread(r.beam_splitters.len(), top))
    {
        b.splitter(*v, Point::new(mid, y));
    }
    let dets = detector_order(r);
    for (v, y) in dets.iter().zip(spread(dets.len(), top)) {
        b.detector(*v, Point::new(right, y));
    }
    let lanes = if r.beam_splitters.is_empty() {
        (left + 40.0, right - 40.0)
    } else {
        (mid + 40.0, right - 40.0)
    };
    b.direct_routes(g, Flow::Right, lanes, (left + 40.0, mid - 40.0));
    b.herald_region(&r.ancillas);
    b.finish(width, height, "adaptive layout")
}

fn spdc(g: &NetworkGraph, r: &RoleAssignment, palette: &ModePalette) -> Scene {
    let mut b = Board::new(g, palette);
    let top = 90.0;
    let n = g.edge_count();
    let crystal_x = 200.0;
    let bus_x = 170.0;
    let (lane_lo, lane_hi) = (250.0, 400.0);
    let splitter_x = 440.0;
    let ancilla_x = 540.0;
    let port_x = 680.0;
    let party_x = 740.0;
    let width = 820.0;

    let parties: Vec<VertexId> = r
        .detectors
        .iter()
        .filter(|d| !r.ancillas.contains(d))
        .copied()
        .collect();
    let mut y = top;
    for &v in &parties {
        if r.sources.contains(&v) {
            b.source(v, Point::new(port_x, y), false);
        }
        b.detector(v, Point::new(party_x, y));
        y += GLYPH_PITCH;
    }
    // Sources that are not parties get their own ports.
    for &v in r.sources.iter().filter(|v| !parties.contains(v)) {
        b.source(v, Point::new(port_x, y), false);
        y += GLYPH_PITCH;
    }
    y += GLYPH_PITCH;
    let mut heralded: BTreeSet<VertexId> = r.ancillas.clone();
    for &v in &r.ancillas {
        if r.beam_splitters.contains(&v) {
            b.splitter(v, Point::new(splitter_x, y));
        }
        b.detector(v, Point::new(ancilla_x, y));
        y += GLYPH_PITCH;
    }
    for &v in r.beam_splitters.iter().filter(|v| !r.ancillas.contains(v)) {
        b.splitter(v, Point::new(splitter_x, y));
        heralded.insert(v);
        y += GLYPH_PITCH;
    }
    let glyph_bottom = y;

    let crystal_ys: Vec<f64> = (0..n).map(|i| top + CRYSTAL_PITCH * i as f64).collect();
    let crystal_bottom = crystal_ys.last().copied().unwrap_or(top);
    let height = glyph_bottom.max(crystal_bottom + 60.0) + 40.0;
    let pump_y = (top + crystal_bottom) / 2.0;

    b.scene.push(
        Element::filled(
            Shape::Rect {
                origin: Point::new(30.0, pump_y - PUMP_HEIGHT / 2.0),
                width: PUMP_WIDTH,
                height: PUMP_HEIGHT,
            },
            Color::Violet,
            Tag::Pump,
        )
        .with_stroke(Color::Black, 1.0),
    );
    b.scene.push(Element::text(
        Point::new(30.0 + PUMP_WIDTH / 2.0, pump_y + 4.0),
        PUMP_WAVELENGTH,
        TEXT_SIZE,
        Tag::Pump,
    ));
    b.scene.push(Element::stroked(
        Shape::Polyline {
            points: vec![
                Point::new(30.0 + PUMP_WIDTH, pump_y),
                Point::new(bus_x, pump_y),
            ],
        },
        Color::Violet,
        2.0,
        Tag::PumpBeam,
    ));
    if n > 0 {
        b.scene.push(Element::stroked(
            Shape::Polyline {
                points: vec![Point::new(bus_x, top), Point::new(bus_x, crystal_bottom)],
            },
            Color::Violet,
            2.0,
            Tag::PumpBeam,
        ));
    }

    let arm_count = (2 * n).max(1) as f64;
    for (i, e) in g.edges().iter().enumerate() {
        let cy = crystal_ys[i];
        b.scene.push(Element::stroked(
            Shape::Polyline {
                points: vec![Point::new(bus_x, cy), Point::new(crystal_x, cy)],
            },
            Color::Violet,
            1.0,
            Tag::PumpBeam,
        ));
        b.scene.push(
            Element::filled(
                Shape::Rect {
                    origin: Point::new(crystal_x, cy - CRYSTAL_HEIGHT / 2.0),
                    width: CRYSTAL_WIDTH,
                    height: CRYSTAL_HEIGHT,
                },
                Color::Plum,
                Tag::Crystal(i),
            )
            .with_stroke(Color::Black, 0.5),
        );
        b.scene.push(Element::text(
            Point::new(crystal_x + CRYSTAL_WIDTH + 14.0, cy - 4.0),
            CRYSTAL_LABEL,
            7.0,
            Tag::Crystal(i),
        ));

        // Signal and idler arms, one per endpoint, colored by that endpoint's mode.
        let port = Point::new(crystal_x + CRYSTAL_WIDTH, cy);
        let width = stroke_width(e.weight, b.max_weight, ROUTE_WIDTH);
        let dash = (e.weight < 0.0).then_some(NEGATIVE_DASH);
        for (k, (v, mode)) in [(e.v1, e.mode1), (e.v2, e.mode2)].into_iter().enumerate() {
            let chain = b.sink_chain(v);
            let Some(&first) = chain.first() else {
                continue;
            };
            let lane = lane_lo + (lane_hi - lane_lo) * (2 * i + k) as f64 / arm_count;
            let mut points = vec![port, Point::new(lane, port.y), Point::new(lane, first.y)];
            points.extend(chain);
            let color = b.palette.color(mode);
            b.scene.push(
                Element::stroked(Shape::Polyline { points }, color, width, Tag::Route(i))
                    .dashed(dash),
            );
        }
    }
    b.herald_region(&heralded);
    b.finish(width, height, "SPDC with heralding")
}

/// Schematic optical table for the chosen implementation strategy.
///
/// Glyphs mirror the role sets exactly: one diamond per source, one
/// semicircle per detector and one square per beam splitter.
pub fn render_optical_table(
    g: &NetworkGraph,
    r: &RoleAssignment,
    plan: &StrategyPlan,
    palette: &ModePalette,
) -> Scene {
    match plan.strategy {
        Strategy::SinglePhoton => single_photon(g, r, palette),
        Strategy::SpdcHeralded => spdc(g, r, palette),
        Strategy::Adaptive => adaptive(g, r, palette),
    }
}
