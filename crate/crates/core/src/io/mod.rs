//! Text formats: the expression parser, renderers and fixture files.

mod fixture;
mod parse;
mod render;

pub use fixture::{Fixture, FixtureError, FixtureSet, PAPER_FIXTURES};
pub use parse::{parse_poly, ParseError};
pub use render::{render, report_json, RenderFormat, UnknownFormat};
