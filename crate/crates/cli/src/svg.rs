//! Self-contained SVG line charts.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use ddqpc_core::{Scenario, ScenarioResult};

use crate::CliError;

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 600.0;
const LEFT: f64 = 90.0;
const RIGHT: f64 = 770.0;
const TOP: f64 = 50.0;
const BOTTOM: f64 = 520.0;
const MARGIN: f64 = 0.05;
const PALETTE: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];

#[derive(Debug, Clone, PartialEq)]
pub struct PlotOptions {
    pub series: Vec<String>,
    pub title: String,
    pub x_label: String,
    pub y_label: String,
}

impl PlotOptions {
    /// The series each scenario plots by default.
    pub fn for_result(result: &ScenarioResult) -> Self {
        let series: &[&str] = match result.scenario {
            Scenario::SingleDd => &["S", "R"],
            Scenario::OptimalCoupling => &["tau_E"],
            Scenario::SingletPair => &["EoF", "S_pair"],
            Scenario::MeasureCompare => &["D"],
            Scenario::TomographyDump => &["min_eigenvalue", "tp_deviation", "kraus_deviation"],
        };
        Self {
            series: series.iter().map(|s| s.to_string()).collect(),
            title: result.scenario.to_string(),
            x_label: result.abscissa.clone(),
            y_label: series.join(", "),
        }
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// Widens a degenerate range, then pads it by the plot margin.
fn padded(lo: f64, hi: f64) -> (f64, f64) {
    let (lo, hi) = if hi > lo {
        (lo, hi)
    } else {
        let half = if lo == 0.0 { 1.0 } else { 0.05 * lo.abs() };
        (lo - half, hi + half)
    };
    let pad = MARGIN * (hi - lo);
    (lo - pad, hi + pad)
}

/// Between 5 and 10 round tick positions inside `[lo, hi]`, with labels.
pub fn ticks(lo: f64, hi: f64) -> Vec<(f64, String)> {
    let span = hi - lo;
    let e = span.log10().floor() as i32;
    for k in (e - 2)..=(e + 1) {
        for m in [1.0, 2.0, 2.5, 5.0] {
            let step = m * 10f64.powi(k);
            let (first, last) = ((lo / step).ceil() as i64, (hi / step).floor() as i64);
            let count = last - first + 1;
            if (5..=10).contains(&count) {
                let extra = usize::from(m == 2.5);
                return (first..=last)
                    .map(|i| {
                        let v = i as f64 * step;
                        (v, tick_label(v, step, extra))
                    })
                    .collect();
            }
        }
    }
    (0..6)
        .map(|i| {
            let v = lo + span * i as f64 / 5.0;
            (v, format!("{v:.3e}"))
        })
        .collect()
}

fn tick_label(v: f64, step: f64, extra: usize) -> String {
    let step_exp = step.log10().floor() as i32;
    if v == 0.0 {
        return "0".into();
    }
    if (-3..6).contains(&step_exp) && v.abs() < 1e6 {
        let decimals = (extra as i32 - step_exp).max(0) as usize;
        format!("{v:.decimals$}")
    } else {
        let digits = (v.abs().log10().floor() as i32 - step_exp).max(0) as usize + extra;
        format!("{v:.digits$e}")
    }
}

pub fn render_svg(result: &ScenarioResult, opts: &PlotOptions) -> Result<String, CliError> {
    if opts.series.is_empty() {
        return Err(CliError::Usage("no series selected for plotting".into()));
    }
    let mut lines = Vec::new();
    for name in &opts.series {
        let values = result
            .column(name)
            .ok_or_else(|| CliError::Usage(format!("no series named '{name}' to plot")))?;
        let points: Vec<(f64, f64)> = result
            .grid
            .iter()
            .zip(values)
            .map(|(&x, &y)| (x, y))
            .filter(|(x, y)| x.is_finite() && y.is_finite())
            .collect();
        lines.push((name.as_str(), points));
    }
    let all: Vec<(f64, f64)> = lines.iter().flat_map(|(_, p)| p.iter().copied()).collect();
    if all.is_empty() {
        return Err(CliError::Usage(format!(
            "series {} have no finite points to plot",
            opts.series.join(", ")
        )));
    }
    let bounds = |f: fn(&(f64, f64)) -> f64| {
        all.iter()
            .map(f)
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)))
    };
    let (xb, yb) = (bounds(|p| p.0), bounds(|p| p.1));
    let (x0, x1) = padded(xb.0, xb.1);
    let (y0, y1) = padded(yb.0, yb.1);
    let px = |x: f64| LEFT + (x - x0) / (x1 - x0) * (RIGHT - LEFT);
    let py = |y: f64| BOTTOM - (y - y0) / (y1 - y0) * (BOTTOM - TOP);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {WIDTH} {HEIGHT}" width="{WIDTH}" height="{HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(s, r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<text x="{}" y="28" text-anchor="middle" font-size="16">{}</text>"#,
        (LEFT + RIGHT) / 2.0,
        escape(&opts.title)
    );
    let _ = writeln!(
        s,
        r#"<rect x="{LEFT}" y="{TOP}" width="{}" height="{}" fill="none" stroke="black"/>"#,
        RIGHT - LEFT,
        BOTTOM - TOP
    );

    for (x, label) in ticks(x0, x1) {
        let x = px(x);
        let _ = writeln!(
            s,
            r##"<line x1="{x:.2}" y1="{BOTTOM}" x2="{x:.2}" y2="{}" stroke="black"/><line x1="{x:.2}" y1="{TOP}" x2="{x:.2}" y2="{BOTTOM}" stroke="#dddddd"/><text x="{x:.2}" y="{}" text-anchor="middle">{}</text>"##,
            BOTTOM + 6.0,
            BOTTOM + 20.0,
            escape(&label)
        );
    }
    for (y, label) in ticks(y0, y1) {
        let y = py(y);
        let _ = writeln!(
            s,
            r##"<line x1="{}" y1="{y:.2}" x2="{LEFT}" y2="{y:.2}" stroke="black"/><line x1="{LEFT}" y1="{y:.2}" x2="{RIGHT}" y2="{y:.2}" stroke="#dddddd"/><text x="{}" y="{:.2}" text-anchor="end">{}</text>"##,
            LEFT - 6.0,
            LEFT - 9.0,
            y + 4.0,
            escape(&label)
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}" text-anchor="middle">{}</text>"#,
        (LEFT + RIGHT) / 2.0,
        HEIGHT - 30.0,
        escape(&opts.x_label)
    );
    let _ = writeln!(
        s,
        r#"<text x="20" y="{0}" text-anchor="middle" transform="rotate(-90 20 {0})">{1}</text>"#,
        (TOP + BOTTOM) / 2.0,
        escape(&opts.y_label)
    );

    for (i, (name, points)) in lines.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let coords: Vec<String> =
            points.iter().map(|&(x, y)| format!("{:.2},{:.2}", px(x), py(y))).collect();
        let _ = writeln!(
            s,
            r#"<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{}"><title>{}</title></polyline>"#,
            coords.join(" "),
            escape(name)
        );
        let ly = TOP + 18.0 + 18.0 * i as f64;
        let _ = writeln!(
            s,
            r#"<line x1="{}" y1="{ly}" x2="{}" y2="{ly}" stroke="{color}" stroke-width="2"/><text x="{}" y="{}">{}</text>"#,
            RIGHT - 150.0,
            RIGHT - 125.0,
            RIGHT - 118.0,
            ly + 4.0,
            escape(name)
        );
    }
    s.push_str("</svg>\n");
    Ok(s)
}

pub fn write_svg_plot(
    result: &ScenarioResult,
    sink: &Path,
    opts: &PlotOptions,
) -> Result<(), CliError> {
    let svg = render_svg(result, opts)?;
    fs::write(sink, svg).map_err(|e| CliError::io(sink, e))
}
