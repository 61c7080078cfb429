//! Deterministic text and SVG drawings of tree nodes.
//!
//! Chord drawings put point `k` of a `2n`-point pattern at angle
//! `2πk/2n`, counterclockwise from the positive x axis. Arc drawings use the
//! cut-and-unfolded layout for `RenderSpec::gap`.

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::link_pattern::LinkPattern;
use crate::tree::{DyckPath, Perm123, Step, TreeNode};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RenderFormat {
    AsciiArc,
    SvgChord,
    SvgArc,
}

impl RenderFormat {
    pub fn name(self) -> &'static str {
        match self {
            RenderFormat::AsciiArc => "ascii-arc",
            RenderFormat::SvgChord => "svg-chord",
            RenderFormat::SvgArc => "svg-arc",
        }
    }
}

impl FromStr for RenderFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ascii-arc" | "ascii" => Ok(RenderFormat::AsciiArc),
            "svg-chord" => Ok(RenderFormat::SvgChord),
            "svg-arc" => Ok(RenderFormat::SvgArc),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RenderSpec {
    pub format: RenderFormat,
    /// Width of SVG output in user units.
    pub size: u32,
    /// Cut position for arc layouts of link patterns.
    pub gap: usize,
}

impl RenderSpec {
    pub fn new(format: RenderFormat) -> Self {
        RenderSpec {
            format,
            size: 200,
            gap: 0,
        }
    }
}

pub fn render(node: &TreeNode, spec: &RenderSpec) -> Result<String> {
    let unsupported = || Error::Unsupported {
        what: format!("format {}", spec.format.name()),
        family: node.family(),
    };
    match (node, spec.format) {
        (TreeNode::Lp(p), RenderFormat::AsciiArc) => Ok(ascii_arcs(p, check_gap(p, spec.gap)?)),
        (TreeNode::Lp(p), RenderFormat::SvgChord) => Ok(svg_chords(p, spec.size)),
        (TreeNode::Lp(p), RenderFormat::SvgArc) => {
            Ok(svg_arcs(p, check_gap(p, spec.gap)?, spec.size))
        }
        (TreeNode::Dyck(d), RenderFormat::AsciiArc) => Ok(ascii_mountain(d)),
        (TreeNode::Dyck(d), RenderFormat::SvgArc) => Ok(svg_mountain(d, spec.size)),
        (TreeNode::Perm(p), RenderFormat::AsciiArc) => Ok(ascii_grid(p)),
        _ => Err(unsupported()),
    }
}

fn check_gap(p: &LinkPattern, gap: usize) -> Result<usize> {
    if gap >= p.points() {
        return Err(Error::IndexOutOfRange {
            index: gap,
            bound: p.points(),
        });
    }
    Ok(gap)
}

fn push_row(out: &mut String, row: &[u8]) {
    let s = std::str::from_utf8(row).expect("ascii row");
    out.push_str(s.trim_end());
    out.push('\n');
}

fn ascii_arcs(p: &LinkPattern, gap: usize) -> String {
    let diagram = p.linearize(gap);
    let heights = diagram.heights();
    let label_width = (p.points() - 1).to_string().len();
    let step = label_width + 1;
    let width = (p.points() - 1) * step + label_width;
    let top = heights.iter().copied().max().unwrap_or(0);

    let mut out = String::new();
    for row in (1..=top).rev() {
        let mut line = vec![b' '; width];
        for (&(l, r), &h) in diagram.arcs().iter().zip(&heights) {
            let (cl, cr) = (l * step, r * step);
            if h == row {
                line[cl] = b'+';
                line[cl + 1..cr].fill(b'-');
                line[cr] = b'+';
            } else if h > row {
                line[cl] = b'|';
                line[cr] = b'|';
            }
        }
        push_row(&mut out, &line);
    }
    let mut labels = vec![b' '; width];
    for (pos, label) in diagram.order().iter().enumerate() {
        let text = label.to_string();
        labels[pos * step..pos * step + text.len()].copy_from_slice(text.as_bytes());
    }
    push_row(&mut out, &labels);
    out
}

fn ascii_mountain(d: &DyckPath) -> String {
    let heights = d.heights();
    let top = heights.iter().copied().max().unwrap_or(0);
    let mut out = String::new();
    for row in (1..=top).rev() {
        let line: Vec<u8> = d
            .steps()
            .iter()
            .enumerate()
            .map(|(k, s)| match s {
                Step::Up if heights[k + 1] == row => b'/',
                Step::Down if heights[k] == row => b'\\',
                _ => b' ',
            })
            .collect();
        push_row(&mut out, &line);
    }
    out
}

fn ascii_grid(p: &Perm123) -> String {
    let n = p.len();
    let mut out = String::new();
    for value in (1..=n).rev() {
        let row: Vec<&str> = p
            .values()
            .iter()
            .map(|&v| if v == value { "*" } else { "." })
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Fixed three-decimal formatting with negative zero folded to zero.
fn num(x: f64) -> String {
    let s = format!("{x:.3}");
    if s == "-0.000" {
        "0.000".to_string()
    } else {
        s
    }
}

fn svg_open(out: &mut String, width: f64, height: f64) {
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = num(width),
        h = num(height)
    )
    .unwrap();
}

fn svg_chords(p: &LinkPattern, size: u32) -> String {
    let size = f64::from(size);
    let c = size / 2.0;
    let radius = 0.4 * size;
    let points = p.points();
    let at = |k: usize| -> (f64, f64) {
        let theta = 2.0 * PI * k as f64 / points as f64;
        (c + radius * theta.cos(), c - radius * theta.sin())
    };

    let mut out = String::new();
    svg_open(&mut out, size, size);
    writeln!(
        out,
        r#"<circle cx="{c}" cy="{c}" r="{r}" fill="none" stroke="black"/>"#,
        c = num(c),
        r = num(radius)
    )
    .unwrap();
    for (a, b) in p.pairs() {
        let (xa, ya) = at(a);
        let (xb, yb) = at(b);
        // pull the control point halfway from the chord midpoint to the centre
        let qx = c + ((xa + xb) / 2.0 - c) * 0.5;
        let qy = c + ((ya + yb) / 2.0 - c) * 0.5;
        writeln!(
            out,
            r#"<path d="M {} {} Q {} {} {} {}" fill="none" stroke="black" stroke-width="2"/>"#,
            num(xa),
            num(ya),
            num(qx),
            num(qy),
            num(xb),
            num(yb)
        )
        .unwrap();
    }
    for k in 0..points {
        let (x, y) = at(k);
        writeln!(
            out,
            r#"<circle cx="{}" cy="{}" r="2.5" fill="black"/>"#,
            num(x),
            num(y)
        )
        .unwrap();
        let theta = 2.0 * PI * k as f64 / points as f64;
        let (lx, ly) = (
            c + 1.15 * radius * theta.cos(),
            c - 1.15 * radius * theta.sin(),
        );
        writeln!(
            out,
            r#"<text x="{}" y="{}" font-size="10" text-anchor="middle" dominant-baseline="middle">{k}</text>"#,
            num(lx),
            num(ly)
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

fn svg_arcs(p: &LinkPattern, gap: usize, size: u32) -> String {
    let width = f64::from(size);
    let diagram = p.linearize(gap);
    let dx = width / p.points() as f64;
    let x = |pos: usize| dx / 2.0 + pos as f64 * dx;
    let margin = 20.0;
    let baseline = width / 2.0 + margin;
    let height = baseline + margin;

    let mut out = String::new();
    svg_open(&mut out, width, height);
    writeln!(
        out,
        r#"<line x1="0" y1="{y}" x2="{w}" y2="{y}" stroke="gray"/>"#,
        y = num(baseline),
        w = num(width)
    )
    .unwrap();
    for (&(l, r), &depth) in diagram.arcs().iter().zip(diagram.depths()) {
        let rx = (x(r) - x(l)) / 2.0;
        let colour = if depth == 0 { "red" } else { "black" };
        writeln!(
            out,
            r#"<path d="M {} {y} A {rx} {rx} 0 0 1 {} {y}" fill="none" stroke="{colour}" stroke-width="2"/>"#,
            num(x(l)),
            num(x(r)),
            y = num(baseline),
            rx = num(rx)
        )
        .unwrap();
    }
    for (pos, label) in diagram.order().iter().enumerate() {
        writeln!(
            out,
            r#"<text x="{}" y="{}" font-size="10" text-anchor="middle">{label}</text>"#,
            num(x(pos)),
            num(baseline + 14.0)
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

fn svg_mountain(d: &DyckPath, size: u32) -> String {
    let width = f64::from(size);
    let dx = width / (d.steps().len() as f64 + 2.0);
    let heights = d.heights();
    let top = heights.iter().copied().max().unwrap_or(0) as f64;
    let height = (top + 2.0) * dx;
    let points: Vec<String> = heights
        .iter()
        .enumerate()
        .map(|(k, &h)| {
            format!(
                "{},{}",
                num(dx * (k as f64 + 1.0)),
                num(height - dx * (h as f64 + 1.0))
            )
        })
        .collect();

    let mut out = String::new();
    svg_open(&mut out, width, height);
    writeln!(
        out,
        r#"<polyline points="{}" fill="none" stroke="black" stroke-width="2"/>"#,
        points.join(" ")
    )
    .unwrap();
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::codec::parse_record;
    use crate::tree::Family;

    fn node(line: &str, family: Family) -> TreeNode {
        parse_record(line, family).unwrap()
    }

    #[test]
    fn ascii_single_arc() {
        let spec = RenderSpec::new(RenderFormat::AsciiArc);
        assert_eq!(
            render(&node("n=1;0-1", Family::Lp), &spec).unwrap(),
            "+-+\n1 0\n"
        );
    }

    #[test]
    fn ascii_nested_arcs() {
        let spec = RenderSpec::new(RenderFormat::AsciiArc);
        let out = render(&node("n=3;0-1,2-5,3-4", Family::Lp), &spec).unwrap();
        assert_eq!(
            out,
            "+---------+\n\
             | +-----+ |\n\
             | | +-+ | |\n\
             1 2 3 4 5 0\n"
        );
    }

    #[test]
    fn ascii_mountain_shape() {
        let spec = RenderSpec::new(RenderFormat::AsciiArc);
        assert_eq!(
            render(&node("UUDD", Family::Dyck), &spec).unwrap(),
            " /\\\n/  \\\n"
        );
        assert_eq!(
            render(&node("2 3 1", Family::Perm), &spec).unwrap(),
            ". * .\n* . .\n. . *\n"
        );
    }

    #[test]
    fn chord_layout() {
        let spec = RenderSpec::new(RenderFormat::SvgChord);
        let svg = render(&node("n=4;0-1,2-3,4-5,6-7", Family::Lp), &spec).unwrap();
        assert!(svg.starts_with("<svg xmlns=\"http://www.w3.org/2000/svg\""));
        assert!(svg.ends_with("</svg>\n"));
        assert_eq!(svg.matches("<path").count(), 4);
        // radius 80 around (100, 100); point 0 at 0 degrees, point 1 at 45
        assert!(svg.contains("<path d=\"M 180.000 100.000 Q "));
        let s = 80.0 * (PI / 4.0).sin();
        assert!(svg.contains(&format!(" {} {}\" fill", num(100.0 + s), num(100.0 - s))));
        assert!(svg.contains(&format!("<circle cx=\"100.000\" cy=\"{}\"", num(180.0))));
    }

    #[test]
    fn deterministic_and_errors() {
        let n = node("n=3;0-5,1-2,3-4", Family::Lp);
        for format in [
            RenderFormat::AsciiArc,
            RenderFormat::SvgChord,
            RenderFormat::SvgArc,
        ] {
            let spec = RenderSpec::new(format);
            assert_eq!(render(&n, &spec).unwrap(), render(&n, &spec).unwrap());
        }
        assert_eq!(
            "png".parse::<RenderFormat>(),
            Err(Error::UnknownFormat("png".into()))
        );
        assert!(matches!(
            render(
                &node("UD", Family::Dyck),
                &RenderSpec::new(RenderFormat::SvgChord)
            ),
            Err(Error::Unsupported { .. })
        ));
        let mut spec = RenderSpec::new(RenderFormat::SvgArc);
        spec.gap = 6;
        assert!(render(&n, &spec).is_err());
        let svg = render(
            &node("UUDD", Family::Dyck),
            &RenderSpec::new(RenderFormat::SvgArc),
        )
        .unwrap();
        assert!(svg.contains("<polyline"));
    }
}
