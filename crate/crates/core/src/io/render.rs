use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::arith::Rational;
use crate::bipoly::{BiPoly, MonomialKey};
use crate::engine::TheoremReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RenderFormat {
    Plain,
    Latex,
    Json,
}

impl RenderFormat {
    pub const ALL: [RenderFormat; 3] =
        [RenderFormat::Plain, RenderFormat::Latex, RenderFormat::Json];

    pub fn name(self) -> &'static str {
        match self {
            RenderFormat::Plain => "plain",
            RenderFormat::Latex => "latex",
            RenderFormat::Json => "json",
        }
    }
}

impl fmt::Display for RenderFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown render format `{0}` (expected plain, latex or json)")]
pub struct UnknownFormat(pub String);

impl FromStr for RenderFormat {
    type Err = UnknownFormat;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RenderFormat::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| UnknownFormat(s.to_string()))
    }
}

pub fn render(p: &BiPoly, fmt: RenderFormat) -> String {
    match fmt {
        RenderFormat::Plain => render_infix(p, &Plain),
        RenderFormat::Latex => render_infix(p, &Latex),
        RenderFormat::Json => render_json(p),
    }
}

trait Style {
    fn coeff(&self, c: &Rational) -> String;
    fn power(&self, var: char, e: u32) -> String;
}

struct Plain;
struct Latex;

impl Style for Plain {
    fn coeff(&self, c: &Rational) -> String {
        c.to_string()
    }

    fn power(&self, var: char, e: u32) -> String {
        if e == 1 {
            var.to_string()
        } else {
            format!("{var}^{e}")
        }
    }
}

impl Style for Latex {
    fn coeff(&self, c: &Rational) -> String {
        if c.is_integer() {
            c.to_string()
        } else {
            format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
        }
    }

    fn power(&self, var: char, e: u32) -> String {
        if e == 1 {
            var.to_string()
        } else {
            format!("{var}^{{{e}}}")
        }
    }
}

fn render_infix(p: &BiPoly, style: &impl Style) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (key, c)) in p.terms().enumerate() {
        match (i, c.is_negative()) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&monomial(key, &c.abs(), style));
    }
    out
}

/// One unsigned term; `magnitude` is positive.
fn monomial(key: &MonomialKey, magnitude: &Rational, style: &impl Style) -> String {
    let mut parts = Vec::with_capacity(3);
    if *key == MonomialKey::ONE || !magnitude.is_one() {
        parts.push(style.coeff(magnitude));
    }
    if key.dx > 0 {
        parts.push(style.power('x', key.dx));
    }
    if key.dz > 0 {
        parts.push(style.power('z', key.dz));
    }
    parts.join(" ")
}

#[derive(Serialize)]
struct JsonTerm {
    dx: u32,
    dz: u32,
    c: String,
}

#[derive(Serialize)]
struct JsonPoly {
    terms: Vec<JsonTerm>,
}

fn json_poly(p: &BiPoly) -> JsonPoly {
    JsonPoly {
        terms: p
            .terms()
            .map(|(k, c)| JsonTerm {
                dx: k.dx,
                dz: k.dz,
                c: c.to_fraction_string(),
            })
            .collect(),
    }
}

/// `{"terms":[{"dx":i,"dz":j,"c":"<num>/<den>"},...]}` in canonical order.
fn render_json(p: &BiPoly) -> String {
    serde_json::to_string(&json_poly(p)).expect("plain struct serializes")
}

#[derive(Serialize)]
struct JsonReport<'a> {
    y: u32,
    holds: bool,
    f: &'a str,
    partial_x: &'a str,
    partial_z: &'a str,
    partial_sum: &'a str,
    diagonal_of_sum: &'a str,
    expected_derivative: &'a str,
    residual: &'a str,
}

/// One JSON object per report; polynomials are embedded in plain form.
pub fn report_json(report: &TheoremReport) -> String {
    let plain = |p: &BiPoly| render(p, RenderFormat::Plain);
    let (f, px, pz, ps, d, e, r) = (
        plain(&report.f_poly),
        plain(&report.partial_x),
        plain(&report.partial_z),
        plain(&report.partial_sum),
        plain(&report.diagonal_of_sum),
        plain(&report.expected_derivative),
        plain(&report.residual),
    );
    serde_json::to_string(&JsonReport {
        y: report.y,
        holds: report.holds,
        f: &f,
        partial_x: &px,
        partial_z: &pz,
        partial_sum: &ps,
        diagonal_of_sum: &d,
        expected_derivative: &e,
        residual: &r,
    })
    .expect("plain struct serializes")
}
