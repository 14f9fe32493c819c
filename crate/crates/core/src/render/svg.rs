use alloc::string::String;
use core::fmt::Write;

use super::{Anchor, Element, Point, Scene, Shape};

fn num(x: f64) -> String {
    let s = alloc::format!("{x:.2}");
    if s == "-0.00" {
        String::from("0.00")
    } else {
        s
    }
}

fn points(pts: &[Point]) -> String {
    let mut out = String::new();
    for (i, p) in pts.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{},{}", num(p.x), num(p.y));
    }
    out
}

fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

fn paint(out: &mut String, e: &Element) {
    let fill = e.fill.map_or("none", |c| c.name());
    let _ = write!(out, " fill=\"{fill}\"");
    if let Some(c) = e.stroke {
        let _ = write!(
            out,
            " stroke=\"{}\" stroke-width=\"{}\"",
            c.name(),
            num(e.stroke_width)
        );
    }
    if let Some([on, off]) = e.dash {
        let _ = write!(out, " stroke-dasharray=\"{},{}\"", num(on), num(off));
    }
    let _ = write!(out, " class=\"{}\"", e.tag.class());
}

fn element(out: &mut String, e: &Element) {
    out.push_str("  ");
    match &e.shape {
        Shape::Circle { center, radius } => {
            let _ = write!(
                out,
                "<circle cx=\"{}\" cy=\"{}\" r=\"{}\"",
                num(center.x),
                num(center.y),
                num(*radius)
            );
        }
        Shape::Diamond { center, half } => {
            let (x, y, h) = (center.x, center.y, *half);
            let pts = [
                Point::new(x, y - h),
                Point::new(x + h, y),
                Point::new(x, y + h),
                Point::new(x - h, y),
            ];
            let _ = write!(out, "<polygon points=\"{}\"", points(&pts));
        }
        Shape::Rect {
            origin,
            width,
            height,
        } => {
            let _ = write!(
                out,
                "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\"",
                num(origin.x),
                num(origin.y),
                num(*width),
                num(*height)
            );
        }
        Shape::Semicircle { center, radius } => {
            let r = num(*radius);
            let _ = write!(
                out,
                "<path d=\"M {},{} A {r},{r} 0 0 0 {},{} Z\"",
                num(center.x - radius),
                num(center.y),
                num(center.x + radius),
                num(center.y)
            );
        }
        Shape::Polyline { points: pts } => {
            let _ = write!(out, "<polyline points=\"{}\"", points(pts));
        }
        Shape::Cubic { from, c1, c2, to } => {
            let _ = write!(
                out,
                "<path d=\"M {},{} C {},{} {},{} {},{}\"",
                num(from.x),
                num(from.y),
                num(c1.x),
                num(c1.y),
                num(c2.x),
                num(c2.y),
                num(to.x),
                num(to.y)
            );
        }
        Shape::Text {
            at,
            text,
            size,
            anchor,
        } => {
            let anchor = match anchor {
                Anchor::Start => "start",
                Anchor::Middle => "middle",
                Anchor::End => "end",
            };
            let _ = write!(
                out,
                "<text x=\"{}\" y=\"{}\" font-size=\"{}\" text-anchor=\"{anchor}\"",
                num(at.x),
                num(at.y),
                num(*size)
            );
            paint(out, e);
            let _ = writeln!(out, ">{}</text>", escape(text));
            return;
        }
    }
    paint(out, e);
    out.push_str("/>\n");
}

/// Serializes a scene as an SVG 1.1 document. Numbers carry two decimals
/// and attributes a fixed order, so equal scenes give identical bytes.
pub fn serialize_svg(scene: &Scene) -> String {
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let (w, h) = (num(scene.width), num(scene.height));
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">"
    );
    for e in &scene.elements {
        element(&mut out, e);
    }
    out.push_str("</svg>\n");
    out
}
