use alloc::string::String;
use alloc::vec::Vec;

use crate::graph::{Mode, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn lerp(self, other: Point, t: f64) -> Point {
        Point::new(
            self.x + (other.x - self.x) * t,
            self.y + (other.y - self.y) * t,
        )
    }

    pub fn distance(self, other: Point) -> f64 {
        libm::hypot(other.x - self.x, other.y - self.y)
    }
}

/// Named colors. Every color a scene can reference is listed here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    DodgerBlue,
    Firebrick,
    LimeGreen,
    ForestGreen,
    DarkOrange,
    MediumPurple,
    Goldenrod,
    Teal,
    Orchid,
    SaddleBrown,
    SlateGray,
    Black,
    White,
    LightGray,
    DimGray,
    Khaki,
    LightSteelBlue,
    Violet,
    Plum,
    Ivory,
}

impl Color {
    pub fn name(self) -> &'static str {
        match self {
            Color::DodgerBlue => "dodgerblue",
            Color::Firebrick => "firebrick",
            Color::LimeGreen => "limegreen",
            Color::ForestGreen => "forestgreen",
            Color::DarkOrange => "darkorange",
            Color::MediumPurple => "mediumpurple",
            Color::Goldenrod => "goldenrod",
            Color::Teal => "teal",
            Color::Orchid => "orchid",
            Color::SaddleBrown => "saddlebrown",
            Color::SlateGray => "slategray",
            Color::Black => "black",
            Color::White => "white",
            Color::LightGray => "lightgray",
            Color::DimGray => "dimgray",
            Color::Khaki => "khaki",
            Color::LightSteelBlue => "lightsteelblue",
            Color::Violet => "violet",
            Color::Plum => "plum",
            Color::Ivory => "ivory",
        }
    }
}

const FALLBACK_CYCLE: [Color; 6] = [
    Color::MediumPurple,
    Color::Goldenrod,
    Color::Teal,
    Color::Orchid,
    Color::SaddleBrown,
    Color::SlateGray,
];

/// Mode index to color.
///
/// Modes 0, 1 and 3 are dodgerblue, firebrick and darkorange everywhere.
/// Mode 2 is limegreen in native graph plots and forestgreen on optical
/// tables. Modes from 4 up cycle through a fixed fallback list.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModePalette {
    mode2: Color,
}

impl ModePalette {
    pub const fn native() -> Self {
        ModePalette {
            mode2: Color::LimeGreen,
        }
    }

    pub const fn optical_table() -> Self {
        ModePalette {
            mode2: Color::ForestGreen,
        }
    }

    pub fn color(&self, mode: Mode) -> Color {
        match mode {
            0 => Color::DodgerBlue,
            1 => Color::Firebrick,
            2 => self.mode2,
            3 => Color::DarkOrange,
            m => FALLBACK_CYCLE[(m as usize - 4) % FALLBACK_CYCLE.len()],
        }
    }
}

impl Default for ModePalette {
    fn default() -> Self {
        ModePalette::native()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Anchor {
    Start,
    Middle,
    End,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Shape {
    Circle {
        center: Point,
        radius: f64,
    },
    /// Square rotated by 45 degrees; `half` is the half-diagonal.
    Diamond {
        center: Point,
        half: f64,
    },
    /// `origin` is the top-left corner.
    Rect {
        origin: Point,
        width: f64,
        height: f64,
    },
    /// Bowl below a flat top edge centred on `center`.
    Semicircle {
        center: Point,
        radius: f64,
    },
    Polyline {
        points: Vec<Point>,
    },
    Cubic {
        from: Point,
        c1: Point,
        c2: Point,
        to: Point,
    },
    Text {
        at: Point,
        text: String,
        size: f64,
        anchor: Anchor,
    },
}

/// What an element depicts. Used for element ordering, SVG classes, and for
/// checking a drawing against the analysis it came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tag {
    Region,
    Edge(usize),
    Route(usize),
    PumpBeam,
    Vertex(VertexId),
    Source(VertexId),
    Detector(VertexId),
    BeamSplitter(VertexId),
    Pump,
    Crystal(usize),
    Label(VertexId),
    Caption,
}

impl Tag {
    pub fn class(&self) -> &'static str {
        match self {
            Tag::Region => "region",
            Tag::Edge(_) => "edge",
            Tag::Route(_) => "route",
            Tag::PumpBeam => "pump-beam",
            Tag::Vertex(_) => "vertex",
            Tag::Source(_) => "source",
            Tag::Detector(_) => "detector",
            Tag::BeamSplitter(_) => "beam-splitter",
            Tag::Pump => "pump",
            Tag::Crystal(_) => "crystal",
            Tag::Label(_) => "label",
            Tag::Caption => "caption",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Element {
    pub shape: Shape,
    pub fill: Option<Color>,
    pub stroke: Option<Color>,
    pub stroke_width: f64,
    pub dash: Option<[f64; 2]>,
    pub tag: Tag,
}

impl Element {
    pub fn stroked(shape: Shape, color: Color, width: f64, tag: Tag) -> Self {
        Element {
            shape,
            fill: None,
            stroke: Some(color),
            stroke_width: width,
            dash: None,
            tag,
        }
    }

    pub fn filled(shape: Shape, color: Color, tag: Tag) -> Self {
        Element {
            shape,
            fill: Some(color),
            stroke: None,
            stroke_width: 0.0,
            dash: None,
            tag,
        }
    }

    pub fn text(at: Point, text: impl Into<String>, size: f64, tag: Tag) -> Self {
        Element::filled(
            Shape::Text {
                at,
                text: text.into(),
                size,
                anchor: Anchor::Middle,
            },
            Color::Black,
            tag,
        )
    }

    pub fn with_stroke(mut self, color: Color, width: f64) -> Self {
        self.stroke = Some(color);
        self.stroke_width = width;
        self
    }

    pub fn dashed(mut self, dash: Option<[f64; 2]>) -> Self {
        self.dash = dash;
        self
    }

    /// Paint layer: regions, then strokes, then glyphs, then text.
    pub fn layer(&self) -> u8 {
        match (&self.shape, self.tag) {
            (_, Tag::Region) => 0,
            (Shape::Polyline { .. } | Shape::Cubic { .. }, _) => 1,
            (Shape::Text { .. }, _) => 3,
            _ => 2,
        }
    }

    pub fn is_stroke_primitive(&self) -> bool {
        matches!(self.shape, Shape::Polyline { .. } | Shape::Cubic { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Scene {
    pub width: f64,
    pub height: f64,
    pub elements: Vec<Element>,
}

impl Scene {
    pub fn new(width: f64, height: f64) -> Self {
        Scene {
            width,
            height,
            elements: Vec::new(),
        }
    }

    pub fn push(&mut self, e: Element) {
        self.elements.push(e);
    }

    /// Stable-sorts elements into paint layers; insertion order is kept
    /// within a layer.
    pub fn finish(mut self) -> Self {
        self.elements.sort_by_key(Element::layer);
        self
    }

    pub fn tagged(&self, pred: impl Fn(&Tag) -> bool) -> impl Iterator<Item = &Element> {
        self.elements.iter().filter(move |e| pred(&e.tag))
    }
}
