//! CSV, SVG and plain-text renderings of an [`OutageCurve`].

use std::fmt::Write as _;
use std::path::Path;

use super::sweep::{CurveRow, OutageCurve};
use crate::error::{Error, Result};

pub const CSV_HEADER: &str = "rho_s_dB,user_index,analytic,sim_mean,sim_stderr,asymptote,oma_analytic";

fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|e| Error::io(path, e))
}

fn num(v: f64) -> String {
    format!("{v:.16e}")
}

fn opt(v: Option<f64>) -> String {
    v.map(num).unwrap_or_default()
}

/// Metadata as `# ` comment lines, then the header and one row per
/// `(ρ_s, user)`. Values carry 17 significant digits; absent simulation
/// columns are empty.
pub fn csv_string(curve: &OutageCurve) -> String {
    let mut out = String::new();
    for line in &curve.metadata {
        writeln!(out, "# {line}").unwrap();
    }
    writeln!(out, "{CSV_HEADER}").unwrap();
    for r in &curve.rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            num(r.rho_s_db),
            r.user,
            num(r.analytic),
            opt(r.sim_mean),
            opt(r.sim_stderr),
            num(r.asymptote),
            num(r.oma_analytic)
        )
        .unwrap();
    }
    out
}

pub fn emit_csv(curve: &OutageCurve, path: impl AsRef<Path>) -> Result<()> {
    write_file(path.as_ref(), &csv_string(curve))
}

fn csv_error(line: usize, key: &str, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        key: key.into(),
        message: message.into(),
    }
}

/// Inverse of [`csv_string`].
pub fn parse_csv(text: &str) -> Result<OutageCurve> {
    let mut curve = OutageCurve::default();
    let mut header_seen = false;
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        if let Some(meta) = line.strip_prefix("# ") {
            curve.metadata.push(meta.to_string());
            continue;
        }
        if line == "#" {
            curve.metadata.push(String::new());
            continue;
        }
        if !header_seen {
            if line != CSV_HEADER {
                return Err(csv_error(lineno, "header", format!("expected `{CSV_HEADER}`")));
            }
            header_seen = true;
            continue;
        }
        if line.is_empty() {
            continue;
        }
        let cols: Vec<&str> = line.split(',').collect();
        if cols.len() != 7 {
            return Err(csv_error(lineno, "row", format!("expected 7 columns, found {}", cols.len())));
        }
        let names = CSV_HEADER.split(',').collect::<Vec<_>>();
        let float = |j: usize| -> Result<f64> {
            cols[j]
                .parse()
                .map_err(|_| csv_error(lineno, names[j], format!("not a number: {:?}", cols[j])))
        };
        let optional = |j: usize| -> Result<Option<f64>> {
            if cols[j].is_empty() {
                Ok(None)
            } else {
                float(j).map(Some)
            }
        };
        let user: usize = cols[1]
            .parse()
            .map_err(|_| csv_error(lineno, names[1], format!("not a user index: {:?}", cols[1])))?;
        curve.users = curve.users.max(user);
        curve.rows.push(CurveRow {
            rho_s_db: float(0)?,
            user,
            analytic: float(2)?,
            sim_mean: optional(3)?,
            sim_stderr: optional(4)?,
            asymptote: float(5)?,
            oma_analytic: float(6)?,
        });
    }
    if !header_seen {
        return Err(csv_error(1, "header", "missing CSV header"));
    }
    Ok(curve)
}

pub fn read_csv(path: impl AsRef<Path>) -> Result<OutageCurve> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_csv(&text)
}

/// Curve families drawn for every user.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Analytic,
    Simulation,
    Asymptote,
    Oma,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Analytic => "analytic",
            Method::Simulation => "simulation",
            Method::Asymptote => "asymptote",
            Method::Oma => "oma",
        }
    }

    fn value(self, r: &CurveRow) -> Option<f64> {
        match self {
            Method::Analytic => Some(r.analytic),
            Method::Simulation => r.sim_mean,
            Method::Asymptote => Some(r.asymptote),
            Method::Oma => Some(r.oma_analytic),
        }
    }

    fn dash(self) -> &'static str {
        match self {
            Method::Analytic => "",
            Method::Simulation => " stroke-dasharray=\"2 3\"",
            Method::Asymptote => " stroke-dasharray=\"8 4\"",
            Method::Oma => " stroke-dasharray=\"4 2 1 2\"",
        }
    }
}

/// Methods present in `curve`.
pub fn methods(curve: &OutageCurve) -> Vec<Method> {
    let mut out = vec![Method::Analytic];
    if curve.has_simulation() {
        out.push(Method::Simulation);
    }
    out.extend([Method::Asymptote, Method::Oma]);
    out
}

const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf",
];

fn escape_comment(s: &str) -> String {
    s.replace("--", "- -")
}

/// Self-contained log-y line chart with one polyline per (user, method).
pub fn svg_string(curve: &OutageCurve) -> String {
    let (w, h) = (800.0, 520.0);
    let (left, right, top, bottom) = (80.0, 170.0, 30.0, 60.0);
    let plot_w = w - left - right;
    let plot_h = h - top - bottom;
    let methods = methods(curve);

    let points = curve.points();
    let (x_lo, x_hi) = match (points.first(), points.last()) {
        (Some(&a), Some(&b)) if b > a => (a, b),
        (Some(&a), _) => (a - 1.0, a + 1.0),
        _ => (0.0, 1.0),
    };
    let positive: Vec<f64> = curve
        .rows
        .iter()
        .flat_map(|r| methods.iter().filter_map(move |m| m.value(r)))
        .filter(|v| *v > 0.0)
        .collect();
    let min_v = positive.iter().copied().fold(f64::INFINITY, f64::min);
    let max_v = positive.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let (mut d_lo, d_hi) = if positive.is_empty() {
        (-6.0, 0.0)
    } else {
        (min_v.log10().floor(), max_v.log10().ceil())
    };
    if d_hi <= d_lo {
        d_lo -= 1.0;
    }
    let sx = |x: f64| left + (x - x_lo) / (x_hi - x_lo) * plot_w;
    let sy = |v: f64| top + (d_hi - v.log10()) / (d_hi - d_lo) * plot_h;

    let mut out = String::new();
    writeln!(out, "<?xml version=\"1.0\" encoding=\"UTF-8\"?>").unwrap();
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\" font-family=\"sans-serif\" font-size=\"12\">"
    )
    .unwrap();
    if !curve.metadata.is_empty() {
        writeln!(out, "<!--").unwrap();
        for line in &curve.metadata {
            writeln!(out, "{}", escape_comment(line)).unwrap();
        }
        writeln!(out, "-->").unwrap();
    }
    writeln!(out, "<rect x=\"0\" y=\"0\" width=\"{w}\" height=\"{h}\" fill=\"white\"/>").unwrap();
    writeln!(
        out,
        "<rect x=\"{left}\" y=\"{top}\" width=\"{plot_w}\" height=\"{plot_h}\" fill=\"none\" stroke=\"black\"/>"
    )
    .unwrap();

    let mut d = d_lo;
    while d <= d_hi + 1e-9 {
        let y = top + (d_hi - d) / (d_hi - d_lo) * plot_h;
        writeln!(
            out,
            "<line x1=\"{left}\" y1=\"{y:.2}\" x2=\"{:.2}\" y2=\"{y:.2}\" stroke=\"#dddddd\"/>",
            left + plot_w
        )
        .unwrap();
        writeln!(
            out,
            "<text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"end\">1e{}</text>",
            left - 6.0,
            y + 4.0,
            d as i64
        )
        .unwrap();
        d += 1.0;
    }
    for &x in &points {
        writeln!(
            out,
            "<text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"middle\">{x}</text>",
            sx(x),
            top + plot_h + 18.0
        )
        .unwrap();
    }
    writeln!(
        out,
        "<text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"middle\">ρ_s (dB)</text>",
        left + plot_w / 2.0,
        h - 15.0
    )
    .unwrap();
    writeln!(
        out,
        "<text x=\"20\" y=\"{:.2}\" text-anchor=\"middle\" transform=\"rotate(-90 20 {:.2})\">outage probability</text>",
        top + plot_h / 2.0,
        top + plot_h / 2.0
    )
    .unwrap();

    let mut legend_y = top + 10.0;
    for m in 1..=curve.users {
        let color = PALETTE[(m - 1) % PALETTE.len()];
        for method in &methods {
            let pts: Vec<String> = curve
                .user_rows(m)
                .filter_map(|r| method.value(r).filter(|v| *v > 0.0).map(|v| (r.rho_s_db, v)))
                .map(|(x, v)| format!("{:.2},{:.2}", sx(x), sy(v)))
                .collect();
            writeln!(
                out,
                "<polyline class=\"series\" data-user=\"{m}\" data-method=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\"{} points=\"{}\"/>",
                method.name(),
                method.dash(),
                pts.join(" ")
            )
            .unwrap();
            let lx = left + plot_w + 12.0;
            writeln!(
                out,
                "<line x1=\"{lx:.2}\" y1=\"{legend_y:.2}\" x2=\"{:.2}\" y2=\"{legend_y:.2}\" stroke=\"{color}\" stroke-width=\"1.5\"{}/>",
                lx + 24.0,
                method.dash()
            )
            .unwrap();
            writeln!(
                out,
                "<text x=\"{:.2}\" y=\"{:.2}\">m={m} {}</text>",
                lx + 30.0,
                legend_y + 4.0,
                method.name()
            )
            .unwrap();
            legend_y += 16.0;
        }
    }
    writeln!(out, "</svg>").unwrap();
    out
}

pub fn emit_svg(curve: &OutageCurve, path: impl AsRef<Path>) -> Result<()> {
    write_file(path.as_ref(), &svg_string(curve))
}

/// Fixed-width table of the curve.
pub fn table_string(curve: &OutageCurve) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "{:>8} {:>4} {:>12} {:>12} {:>12} {:>12} {:>12}",
        "rho_s_dB", "user", "analytic", "sim_mean", "sim_stderr", "asymptote", "oma"
    )
    .unwrap();
    let cell = |v: Option<f64>| v.map_or_else(|| "-".to_string(), |v| format!("{v:.4e}"));
    for r in &curve.rows {
        writeln!(
            out,
            "{:>8} {:>4} {:>12} {:>12} {:>12} {:>12} {:>12}",
            r.rho_s_db,
            r.user,
            cell(Some(r.analytic)),
            cell(r.sim_mean),
            cell(r.sim_stderr),
            cell(Some(r.asymptote)),
            cell(Some(r.oma_analytic))
        )
        .unwrap();
    }
    out
}

pub fn emit_table(curve: &OutageCurve, path: impl AsRef<Path>) -> Result<()> {
    let mut text = String::new();
    for line in &curve.metadata {
        writeln!(text, "# {line}").unwrap();
    }
    text.push_str(&table_string(curve));
    write_file(path.as_ref(), &text)
}
