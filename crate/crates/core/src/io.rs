//! Text documents for colorings, templates and extension sets, and figure
//! export (Graphviz DOT and SVG).
//!
//! Documents are pretty-printed JSON with a `format` tag and a `version`.
//! Colors are one character per edge in edge-ordinal order: `B`, `R`, `Y`,
//! and `?` for an open edge in a template. Output is byte-stable: fields are
//! written in declaration order and `meta` is a sorted map.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::color::Color;
use crate::coloring::{edge_count, edges, EdgeColoring};
use crate::error::{Error, Result};
use crate::synthesis::VertexExtension;
use crate::template::{ColoringTemplate, Domain};

pub const FORMAT_VERSION: u32 = 1;
pub const COLORING_FORMAT: &str = "tricolor/coloring";
pub const TEMPLATE_FORMAT: &str = "tricolor/template";
pub const EXTENSIONS_FORMAT: &str = "tricolor/extensions";

pub type Meta = BTreeMap<String, Value>;

/// Process exit codes of the command-line tool. Stable across releases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExitStatus {
    Success = 0,
    VerificationFailed = 1,
    InvalidInput = 2,
    CapacityExceeded = 3,
}

impl ExitStatus {
    pub fn code(self) -> u8 {
        self as u8
    }
}

impl From<&Error> for ExitStatus {
    fn from(e: &Error) -> ExitStatus {
        match e {
            Error::Capacity { .. } | Error::OverBudget { .. } => ExitStatus::CapacityExceeded,
            _ => ExitStatus::InvalidInput,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ColoringDocument {
    pub format: String,
    pub version: u32,
    pub n: usize,
    pub k: usize,
    pub colors: String,
    #[serde(default)]
    pub meta: Meta,
}

impl ColoringDocument {
    pub fn from_coloring(c: &EdgeColoring, meta: Meta) -> ColoringDocument {
        ColoringDocument {
            format: COLORING_FORMAT.into(),
            version: FORMAT_VERSION,
            n: c.n(),
            k: c.colors_used(),
            colors: c.to_color_string(),
            meta,
        }
    }

    pub fn from_text(text: &str) -> Result<ColoringDocument> {
        let doc: ColoringDocument =
            serde_json::from_str(text).map_err(|e| Error::Format(format!("not a coloring document: {e}")))?;
        if doc.version != FORMAT_VERSION {
            return Err(Error::Format(format!("unsupported document version {}", doc.version)));
        }
        Ok(doc)
    }

    pub fn to_text(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("document is plain data");
        text.push('\n');
        text
    }

    fn check_shape(&self, expected_format: &str) -> Result<()> {
        if self.format != expected_format {
            return Err(Error::Format(format!("expected format {expected_format:?}, found {:?}", self.format)));
        }
        if self.n == 0 {
            return Err(Error::Format("n must be at least 1".into()));
        }
        if !(2..=3).contains(&self.k) {
            return Err(Error::Format(format!("k must be 2 or 3, found {}", self.k)));
        }
        let len = self.colors.chars().count();
        if len != edge_count(self.n) {
            return Err(Error::Format(format!("n = {} needs {} colors, found {len}", self.n, edge_count(self.n))));
        }
        Ok(())
    }

    fn color_of(&self, ch: char) -> Result<Color> {
        let c = Color::from_char(ch)?;
        if c.index() >= self.k {
            return Err(Error::Format(format!("color {ch} not allowed with k = {}", self.k)));
        }
        Ok(c)
    }

    pub fn to_coloring(&self) -> Result<EdgeColoring> {
        self.check_shape(COLORING_FORMAT)?;
        let colors = self.colors.chars().map(|ch| self.color_of(ch)).collect::<Result<Vec<_>>>()?;
        EdgeColoring::new(self.n, colors)
    }

    pub fn to_template(&self) -> Result<ColoringTemplate> {
        self.check_shape(TEMPLATE_FORMAT)?;
        let domains = self
            .colors
            .chars()
            .map(|ch| if ch == '?' { Ok(Domain::FULL) } else { self.color_of(ch).map(Domain::single) })
            .collect::<Result<Vec<_>>>()?;
        ColoringTemplate::from_domains(self.n, domains)
    }
}

/// Canonical coloring document text.
pub fn serialize(c: &EdgeColoring, meta: Meta) -> String {
    ColoringDocument::from_coloring(c, meta).to_text()
}

/// Parses a coloring document; unknown `meta` keys are kept in the returned map.
pub fn parse(text: &str) -> Result<(EdgeColoring, Meta)> {
    let doc = ColoringDocument::from_text(text)?;
    let c = doc.to_coloring()?;
    Ok((c, doc.meta))
}

/// Template document text. Only singleton and full domains are
/// representable, and couplings are not.
pub fn serialize_template(t: &ColoringTemplate, meta: Meta) -> Result<String> {
    if !t.couplings().is_empty() {
        return Err(Error::Format("coupled templates have no document form".into()));
    }
    let mut colors = String::with_capacity(t.domains().len());
    let mut k = 2;
    for d in t.domains() {
        match d.singleton() {
            Some(c) => {
                k = k.max(c.index() + 1);
                colors.push(c.as_char());
            }
            None if *d == Domain::FULL => {
                k = 3;
                colors.push('?');
            }
            None => return Err(Error::Format("partial domains have no document form".into())),
        }
    }
    let doc = ColoringDocument {
        format: TEMPLATE_FORMAT.into(),
        version: FORMAT_VERSION,
        n: t.n(),
        k,
        colors,
        meta,
    };
    Ok(doc.to_text())
}

pub fn parse_template(text: &str) -> Result<(ColoringTemplate, Meta)> {
    let doc = ColoringDocument::from_text(text)?;
    let t = doc.to_template()?;
    Ok((t, doc.meta))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExtensionsDocument {
    pub format: String,
    pub version: u32,
    /// Host vertex count; every entry has this many spokes.
    pub m: usize,
    pub extensions: Vec<String>,
    #[serde(default)]
    pub meta: Meta,
}

pub fn serialize_extensions(m: usize, exts: &[VertexExtension], meta: Meta) -> String {
    let doc = ExtensionsDocument {
        format: EXTENSIONS_FORMAT.into(),
        version: FORMAT_VERSION,
        m,
        extensions: exts.iter().map(|e| e.to_color_string()).collect(),
        meta,
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("document is plain data");
    text.push('\n');
    text
}

pub fn parse_extensions(text: &str) -> Result<Vec<VertexExtension>> {
    let doc: ExtensionsDocument =
        serde_json::from_str(text).map_err(|e| Error::Format(format!("not an extensions document: {e}")))?;
    if doc.format != EXTENSIONS_FORMAT || doc.version != FORMAT_VERSION {
        return Err(Error::Format(format!("unsupported extensions document {:?} v{}", doc.format, doc.version)));
    }
    doc.extensions
        .iter()
        .map(|s| {
            if s.chars().count() != doc.m {
                return Err(Error::Format(format!("extension {s:?} does not have {} spokes", doc.m)));
            }
            s.chars().map(Color::from_char).collect::<Result<Vec<_>>>().map(VertexExtension::new)
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureFormat {
    Dot,
    Svg,
}

impl std::str::FromStr for FigureFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<FigureFormat> {
        match s {
            "dot" => Ok(FigureFormat::Dot),
            "svg" => Ok(FigureFormat::Svg),
            _ => Err(Error::Format(format!("unknown figure format {s:?}"))),
        }
    }
}

/// Edges lying on some monochromatic triangle.
fn mono_edges(c: &EdgeColoring) -> Vec<bool> {
    let mut on = vec![false; c.colors().len()];
    for t in c.census().mono_list {
        let [a, b, d] = t.vertices;
        for (u, v) in [(a, b), (a, d), (b, d)] {
            on[crate::coloring::ordinal(u, v, c.n())] = true;
        }
    }
    on
}

pub fn export_figure(c: &EdgeColoring, format: FigureFormat, highlight: bool) -> String {
    match format {
        FigureFormat::Dot => export_dot(c, highlight),
        FigureFormat::Svg => export_svg(c, highlight),
    }
}

/// One `u -- v [color=...]` line per edge; with `highlight`, edges of
/// monochromatic triangles get `penwidth=3`.
pub fn export_dot(c: &EdgeColoring, highlight: bool) -> String {
    let hot = if highlight { mono_edges(c) } else { vec![false; c.colors().len()] };
    let mut out = format!("graph K{} {{\n  layout=circo;\n  node [shape=circle];\n", c.n());
    for (e, i, j) in edges(c.n()) {
        let color = c.color_at(e).name();
        if hot[e] {
            let _ = writeln!(out, "  {i} -- {j} [color={color}, penwidth=3];");
        } else {
            let _ = writeln!(out, "  {i} -- {j} [color={color}];");
        }
    }
    out.push_str("}\n");
    out
}

const SVG_SIZE: f64 = 640.0;
const SVG_RADIUS: f64 = 280.0;

/// Position of vertex `v` on the regular `n`-gon: vertex 0 at the top, then clockwise.
pub fn polygon_position(v: usize, n: usize) -> (f64, f64) {
    let centre = SVG_SIZE / 2.0;
    let angle = -std::f64::consts::FRAC_PI_2 + std::f64::consts::TAU * v as f64 / n as f64;
    (centre + SVG_RADIUS * angle.cos(), centre + SVG_RADIUS * angle.sin())
}

/// Every edge as a chord of the regular `n`-gon. With `highlight`, each
/// monochromatic triangle is drawn as a `mono-triangle` polygon and its
/// chords are stroked thicker.
pub fn export_svg(c: &EdgeColoring, highlight: bool) -> String {
    let n = c.n();
    let pos: Vec<(f64, f64)> = (0..n).map(|v| polygon_position(v, n)).collect();
    let hot = if highlight { mono_edges(c) } else { vec![false; c.colors().len()] };
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{s}" height="{s}" viewBox="0 0 {s} {s}">"#,
        s = SVG_SIZE
    );
    let _ = writeln!(out, r##"<rect width="100%" height="100%" fill="#202020"/>"##);
    if highlight {
        for t in c.census().mono_list {
            let pts: Vec<String> = t.vertices.iter().map(|&v| format!("{:.3},{:.3}", pos[v].0, pos[v].1)).collect();
            let _ = writeln!(
                out,
                r#"<polygon class="mono-triangle" points="{}" fill="{}" fill-opacity="0.25"/>"#,
                pts.join(" "),
                t.color.name()
            );
        }
    }
    for (e, i, j) in edges(n) {
        let (width, class) = if hot[e] { (4, "chord mono") } else { (1, "chord") };
        let _ = writeln!(
            out,
            r#"<line class="{class}" x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="{}" stroke-width="{width}"/>"#,
            pos[i].0,
            pos[i].1,
            pos[j].0,
            pos[j].1,
            c.color_at(e).name()
        );
    }
    for (v, (x, y)) in pos.iter().enumerate() {
        let _ = writeln!(out, r##"<circle class="vertex" cx="{x:.3}" cy="{y:.3}" r="9" fill="#f0f0f0"/>"##);
        let _ = writeln!(
            out,
            r#"<text x="{x:.3}" y="{:.3}" font-size="10" text-anchor="middle">{v}</text>"#,
            y + 3.5
        );
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use Color::*;

    #[test]
    fn all_blue_k3_document() {
        let c = EdgeColoring::uniform(3, Blue).unwrap();
        let text = serialize(&c, Meta::new());
        let doc = ColoringDocument::from_text(&text).unwrap();
        assert_eq!(doc.colors, "BBB");
        assert_eq!(doc.k, 2);
        assert_eq!(parse(&text).unwrap().0, c);
    }

    #[test]
    fn parse_rejects_bad_documents() {
        let good = serialize(&EdgeColoring::uniform(3, Red).unwrap(), Meta::new());
        let short = good.replace("\"RRR\"", "\"RR\"");
        assert!(matches!(parse(&short), Err(Error::Format(_))));
        let bad_char = good.replace("\"RRR\"", "\"RRG\"");
        assert!(matches!(parse(&bad_char), Err(Error::Format(_))));
        let k_mismatch = good.replace("\"RRR\"", "\"RRY\"");
        assert!(matches!(parse(&k_mismatch), Err(Error::Format(_))));
        assert!(parse("not json").is_err());
        let template = good.replace(COLORING_FORMAT, TEMPLATE_FORMAT);
        assert!(parse(&template).is_err());
        let future = good.replace("\"version\": 1", "\"version\": 9");
        assert!(parse(&future).is_err());
    }

    #[test]
    fn unknown_meta_survives() {
        let text = r#"{"format":"tricolor/coloring","version":1,"n":3,"k":3,"colors":"BRY",
            "meta":{"method":"hand","anything":[1,2]},"extra":true}"#;
        let (c, meta) = parse(text).unwrap();
        assert_eq!(c.to_color_string(), "BRY");
        assert_eq!(meta["anything"], serde_json::json!([1, 2]));
    }

    #[test]
    fn template_round_trip() {
        let mut t = ColoringTemplate::from_coloring(&EdgeColoring::uniform(4, Red).unwrap());
        t.set_domain(2, 3, Domain::FULL).unwrap();
        let text = serialize_template(&t, Meta::new()).unwrap();
        assert!(text.contains("\"RRRRR?\""));
        assert_eq!(parse_template(&text).unwrap().0, t);
        t.set_domain(0, 1, Domain::of(&[Red, Blue]).unwrap()).unwrap();
        assert!(serialize_template(&t, Meta::new()).is_err());
    }

    #[test]
    fn extensions_round_trip() {
        let exts = vec![VertexExtension::new(vec![Blue, Red]), VertexExtension::new(vec![Yellow, Yellow])];
        let text = serialize_extensions(2, &exts, Meta::new());
        assert_eq!(parse_extensions(&text).unwrap(), exts);
        assert!(parse_extensions(&text.replace("\"BR\"", "\"BRB\"")).is_err());
    }

    #[test]
    fn dot_export_k3() {
        let dot = export_dot(&EdgeColoring::uniform(3, Blue).unwrap(), false);
        let lines: Vec<&str> = dot.lines().filter(|l| l.contains("--")).collect();
        assert_eq!(lines.len(), 3);
        assert!(lines.iter().all(|l| l.contains("color=blue") && !l.contains("penwidth")));
        let hot = export_dot(&EdgeColoring::uniform(3, Blue).unwrap(), true);
        assert_eq!(hot.matches("penwidth=3").count(), 3);
    }

    #[test]
    fn svg_layout_starts_at_top_and_runs_clockwise() {
        let (x0, y0) = polygon_position(0, 4);
        let (x1, y1) = polygon_position(1, 4);
        assert!((x0 - 320.0).abs() < 1e-9 && (y0 - 40.0).abs() < 1e-9);
        // clockwise on screen: the next vertex is to the right
        assert!((x1 - 600.0).abs() < 1e-9 && (y1 - 320.0).abs() < 1e-9);
        for n in [1, 2, 5, 17] {
            let svg = export_svg(&EdgeColoring::uniform(n, Red).unwrap(), false);
            assert_eq!(svg.matches("class=\"chord").count(), edge_count(n));
        }
    }
}
