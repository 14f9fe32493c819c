//! Resolution-independent drawings and their SVG serialization.
//!
//! Two scene families are produced from one analysis: the native graph plot
//! ([`render_native_graph`]) and the strategy-specific optical-table
//! schematic ([`render_optical_table`]).

mod layout;
mod native;
mod optical;
mod scene;
mod svg;

pub use layout::layout_circular;
pub use native::{render_native_graph, stroke_width};
pub use optical::render_optical_table;
pub use scene::{Anchor, Color, Element, ModePalette, Point, Scene, Shape, Tag};
pub use svg::serialize_svg;
