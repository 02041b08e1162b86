//! Static SVG scatter plot with one regression line.

use std::fmt::Write as _;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 480.0;
const MARGIN_LEFT: f64 = 80.0;
const MARGIN_RIGHT: f64 = 24.0;
const MARGIN_TOP: f64 = 48.0;
const MARGIN_BOTTOM: f64 = 56.0;
const TICKS: usize = 5;

pub struct ScatterPlot<'a> {
    pub title: &'a str,
    pub x_label: &'a str,
    pub y_label: &'a str,
    pub points: &'a [(f64, f64)],
    pub slope: f64,
    pub intercept: f64,
    pub caption: &'a str,
}

#[derive(Clone, Copy)]
struct Range {
    lo: f64,
    hi: f64,
}

impl Range {
    fn covering(values: impl Iterator<Item = f64>) -> Self {
        let (lo, hi) = values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
            (lo.min(v), hi.max(v))
        });
        let (lo, hi) = if lo.is_finite() { (lo, hi) } else { (0.0, 1.0) };
        let pad = if hi > lo {
            0.05 * (hi - lo)
        } else {
            lo.abs().max(1.0) * 0.5
        };
        Range {
            lo: lo - pad,
            hi: hi + pad,
        }
    }

    fn fraction(self, v: f64) -> f64 {
        (v - self.lo) / (self.hi - self.lo)
    }

    fn tick(self, i: usize) -> f64 {
        self.lo + (self.hi - self.lo) * i as f64 / (TICKS - 1) as f64
    }
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

fn tick_label(v: f64) -> String {
    let magnitude = v.abs();
    if magnitude != 0.0 && !(1e-3..1e5).contains(&magnitude) {
        format!("{v:.2e}")
    } else if magnitude >= 100.0 {
        format!("{v:.0}")
    } else {
        format!("{v:.3}")
    }
}

impl ScatterPlot<'_> {
    pub fn to_svg(&self) -> String {
        let xr = Range::covering(self.points.iter().map(|p| p.0));
        let line_y = [xr.lo, xr.hi].map(|x| self.slope * x + self.intercept);
        let yr = Range::covering(self.points.iter().map(|p| p.1).chain(line_y));

        let plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
        let plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
        let sx = |x: f64| MARGIN_LEFT + plot_w * xr.fraction(x);
        let sy = |y: f64| MARGIN_TOP + plot_h * (1.0 - yr.fraction(y));

        let mut svg = String::new();
        let _ = writeln!(
            svg,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
        );
        let _ = writeln!(
            svg,
            r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
        );
        let _ = writeln!(
            svg,
            r#"<text x="{}" y="24" text-anchor="middle" font-size="16">{}</text>"#,
            WIDTH / 2.0,
            escape(self.title)
        );

        let (x0, x1, y0, y1) = (
            MARGIN_LEFT,
            WIDTH - MARGIN_RIGHT,
            MARGIN_TOP,
            HEIGHT - MARGIN_BOTTOM,
        );
        let _ = writeln!(
            svg,
            r#"<path class="axes" d="M{x0:.2},{y0:.2} L{x0:.2},{y1:.2} L{x1:.2},{y1:.2}" fill="none" stroke="black"/>"#
        );
        for i in 0..TICKS {
            let (xv, yv) = (xr.tick(i), yr.tick(i));
            let _ = writeln!(
                svg,
                r#"<text class="tick" x="{:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
                sx(xv),
                y1 + 18.0,
                tick_label(xv)
            );
            let _ = writeln!(
                svg,
                r#"<text class="tick" x="{:.2}" y="{:.2}" text-anchor="end">{}</text>"#,
                x0 - 6.0,
                sy(yv) + 4.0,
                tick_label(yv)
            );
        }
        let _ = writeln!(
            svg,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
            (x0 + x1) / 2.0,
            HEIGHT - 12.0,
            escape(self.x_label)
        );
        let _ = writeln!(
            svg,
            r#"<text x="16" y="{:.2}" text-anchor="middle" transform="rotate(-90 16 {:.2})">{}</text>"#,
            (y0 + y1) / 2.0,
            (y0 + y1) / 2.0,
            escape(self.y_label)
        );

        let _ = writeln!(
            svg,
            r#"<line class="regression" x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="crimson" stroke-width="2"/>"#,
            sx(xr.lo),
            sy(line_y[0]),
            sx(xr.hi),
            sy(line_y[1])
        );
        for &(x, y) in self.points {
            let _ = writeln!(
                svg,
                r#"<circle class="point" cx="{:.2}" cy="{:.2}" r="4" fill="steelblue"/>"#,
                sx(x),
                sy(y)
            );
        }
        let _ = writeln!(
            svg,
            r#"<text x="{:.2}" y="{:.2}">{}</text>"#,
            x0 + 10.0,
            y0 + 16.0,
            escape(self.caption)
        );
        svg.push_str("</svg>\n");
        svg
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_circle_per_point_and_one_line() {
        let pts = [(1.0, 2.0), (2.0, 4.5), (3.0, 6.0)];
        let svg = ScatterPlot {
            title: "a < b & c",
            x_label: "x",
            y_label: "y",
            points: &pts,
            slope: 2.0,
            intercept: 0.0,
            caption: "y = 2x",
        }
        .to_svg();
        assert_eq!(svg.matches("<circle").count(), 3);
        assert_eq!(svg.matches("class=\"regression\"").count(), 1);
        assert!(svg.contains("a &lt; b &amp; c"));
        assert!(svg.ends_with("</svg>\n"));
    }

    #[test]
    fn degenerate_ranges_stay_finite() {
        let pts = [(5.0, 1.0), (5.0, 1.0)];
        let svg = ScatterPlot {
            title: "",
            x_label: "",
            y_label: "",
            points: &pts,
            slope: 0.0,
            intercept: 1.0,
            caption: "",
        }
        .to_svg();
        assert!(!svg.contains("NaN") && !svg.contains("inf"));
    }
}
