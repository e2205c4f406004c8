//! SVG and CSV output for partial-sum spirals.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::format::format_sig;
use crate::specialfn::ComplexValue;
use crate::zetaeval::SpiralPath;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SvgStyle {
    pub width: u32,
    pub height: u32,
    pub primary_color: String,
    pub secondary_color: String,
    pub stroke_width: f64,
    pub title: Option<String>,
}

impl Default for SvgStyle {
    fn default() -> Self {
        SvgStyle {
            width: 800,
            height: 800,
            primary_color: "#1f4e8c".into(),
            secondary_color: "#c0392b".into(),
            stroke_width: 1.0,
            title: None,
        }
    }
}

fn polyline_points(pts: &[ComplexValue]) -> String {
    let mut s = String::new();
    for (i, p) in pts.iter().enumerate() {
        if i > 0 {
            s.push(' ');
        }
        // y is flipped so the imaginary axis points up
        let _ = write!(s, "{},{}", format_sig(p.re, 10), format_sig(-p.im, 10));
    }
    s
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Renders the spiral as a standalone SVG 1.1 document.
pub fn spiral_svg(path: &SpiralPath, style: &SvgStyle) -> Result<String> {
    if path.points.len() < 2 {
        return Err(Error::Domain(format!(
            "a spiral needs at least 2 points, got {}",
            path.points.len()
        )));
    }
    if let Some(p) = path.points.iter().chain(&path.midpoints).find(|p| !p.re.is_finite() || !p.im.is_finite()) {
        return Err(Error::NonFinite { what: "spiral point", re: p.re, im: p.im });
    }
    let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for p in path.points.iter().chain(&path.midpoints) {
        x0 = x0.min(p.re);
        x1 = x1.max(p.re);
        y0 = y0.min(-p.im);
        y1 = y1.max(-p.im);
    }
    let mut w = x1 - x0;
    let mut h = y1 - y0;
    let extent = w.max(h);
    let floor = if extent > 0.0 { extent * 1e-3 } else { x0.abs().max(y0.abs()).max(1.0) * 1e-3 };
    if w < floor {
        x0 -= floor / 2.0;
        w = floor;
    }
    if h < floor {
        y0 -= floor / 2.0;
        h = floor;
    }
    let (mx, my) = (0.05 * w, 0.05 * h);
    let stroke = style.stroke_width * w.max(h) * 1.1 / style.width.max(style.height) as f64;

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"{} {} {} {}\">",
        style.width,
        style.height,
        format_sig(x0 - mx, 10),
        format_sig(y0 - my, 10),
        format_sig(w + 2.0 * mx, 10),
        format_sig(h + 2.0 * my, 10),
    );
    if let Some(title) = &style.title {
        let _ = writeln!(out, "  <title>{}</title>", escape(title));
    }
    let _ = writeln!(
        out,
        "  <polyline class=\"primary\" fill=\"none\" stroke=\"{}\" stroke-width=\"{}\" points=\"{}\"/>",
        escape(&style.primary_color),
        format_sig(stroke, 6),
        polyline_points(&path.points)
    );
    let _ = writeln!(
        out,
        "  <polyline class=\"secondary\" fill=\"none\" stroke=\"{}\" stroke-width=\"{}\" stroke-dasharray=\"{} {}\" points=\"{}\"/>",
        escape(&style.secondary_color),
        format_sig(stroke, 6),
        format_sig(3.0 * stroke, 6),
        format_sig(2.0 * stroke, 6),
        polyline_points(&path.midpoints)
    );
    out.push_str("</svg>\n");
    Ok(out)
}

pub fn emit_spiral_svg(path: &SpiralPath, out: &Path, style: &SvgStyle) -> Result<()> {
    let svg = spiral_svg(path, style)?;
    fs::write(out, svg).map_err(|source| Error::Io { path: out.to_path_buf(), source })
}

/// `n,re,im` rows, one per partial sum, 15 significant digits.
pub fn spiral_csv(path: &SpiralPath) -> String {
    let mut s = String::from("n,re,im\n");
    for (i, p) in path.points.iter().enumerate() {
        let _ = writeln!(s, "{},{},{}", i + 1, format_sig(p.re, 15), format_sig(p.im, 15));
    }
    s
}

pub fn write_spiral_csv(path: &SpiralPath, out: &Path) -> Result<()> {
    fs::write(out, spiral_csv(path)).map_err(|source| Error::Io { path: out.to_path_buf(), source })
}
