use std::fmt::Write;

use super::BrickDiagram;

const COLUMN_WIDTH: usize = 40;
const ROW_HEIGHT: usize = 20;
const MARGIN: usize = 20;

/// Renders the brick diagram as an SVG 1.1 document: columns left to right,
/// word positions top to bottom. With `overlay_pattern` a dot is drawn at
/// each brick centre and a segment for each linking-pattern edge.
pub fn render_svg(diagram: &BrickDiagram, overlay_pattern: bool) -> String {
    let word = diagram.word();
    let width = 2 * MARGIN + COLUMN_WIDTH * word.generator_count();
    let height = 2 * MARGIN + ROW_HEIGHT * (word.len() + 1);
    let x_of = |column: usize| MARGIN + COLUMN_WIDTH * (column - 1);
    let y_of = |pos: usize| MARGIN + ROW_HEIGHT * pos;

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(out, r#"<g class="bricks" fill="none" stroke="black" stroke-width="1">"#);
    for b in diagram.bricks() {
        let _ = writeln!(
            out,
            r#"<rect x="{}" y="{}" width="{COLUMN_WIDTH}" height="{}" data-brick="{}"/>"#,
            x_of(b.column),
            y_of(b.top),
            ROW_HEIGHT * (b.bottom - b.top),
            b.id
        );
    }
    let _ = writeln!(out, "</g>");

    if overlay_pattern {
        let pattern = diagram.linking_pattern();
        let centre = |k: usize| {
            let b = &pattern.bricks()[k];
            // doubled coordinates keep everything integral
            (2 * x_of(b.column) + COLUMN_WIDTH, y_of(b.top) + y_of(b.bottom))
        };
        let _ = writeln!(out, r#"<g class="pattern" stroke="red" fill="red" stroke-width="1.5">"#);
        for (u, v) in pattern.graph().edges() {
            let (x1, y1) = centre(u);
            let (x2, y2) = centre(v);
            let _ = writeln!(
                out,
                r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                half(x1),
                half(y1),
                half(x2),
                half(y2)
            );
        }
        for k in 0..pattern.vertex_count() {
            let (x, y) = centre(k);
            let _ = writeln!(out, r#"<circle cx="{}" cy="{}" r="3"/>"#, half(x), half(y));
        }
        let _ = writeln!(out, "</g>");
    }
    out.push_str("</svg>\n");
    out
}

fn half(doubled: usize) -> String {
    if doubled % 2 == 0 {
        (doubled / 2).to_string()
    } else {
        format!("{}.5", doubled / 2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;

    fn render(text: &str, strands: Option<usize>, overlay: bool) -> String {
        let w = BraidWord::parse(text, strands).unwrap();
        render_svg(&BrickDiagram::new(&w), overlay)
    }

    #[test]
    fn one_brick() {
        let svg = render("s1^2", None, false);
        assert_eq!(svg.matches("<rect").count(), 1);
        assert!(svg.contains(r#"<rect x="20" y="40" width="40" height="20" data-brick="0"/>"#));
    }

    #[test]
    fn xtilde_with_overlay() {
        let svg = render("s1^2 s2^2 s1 s3 s2^2 s3", None, true);
        assert_eq!(svg.matches("<rect").count(), 6);
        assert_eq!(svg.matches("<line").count(), 5);
        assert_eq!(svg.matches("<circle").count(), 6);
        assert_eq!(svg, render("s1^2 s2^2 s1 s3 s2^2 s3", None, true));
    }

    #[test]
    fn empty_canvas() {
        let svg = render("", Some(1), true);
        assert!(svg.starts_with("<?xml"));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert_eq!(svg.matches("<rect").count(), 0);
    }
}
