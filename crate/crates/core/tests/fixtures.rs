use oddpower_core::engine::partials;
use oddpower_core::{
    build_f, check_theorem, derivative_combination, parse_poly, render, BiPoly, FixtureSet,
    RenderFormat,
};

fn fixture(set: &FixtureSet, name: &str) -> BiPoly {
    set.get(name)
        .unwrap_or_else(|| panic!("missing fixture {name}"))
        .poly
        .clone()
}

#[test]
fn expansions_match_fixtures() {
    let set = FixtureSet::builtin();
    for y in 1..=3 {
        assert_eq!(build_f(y), fixture(&set, &format!("f_{y}")), "f_{y}");
    }
}

#[test]
fn partials_and_sums_match_fixtures() {
    let set = FixtureSet::builtin();
    for y in 1..=3 {
        let (dx, dz) = partials(y);
        assert_eq!(dx, fixture(&set, &format!("df{y}_dx")), "df{y}_dx");
        assert_eq!(dz, fixture(&set, &format!("df{y}_dz")), "df{y}_dz");
        assert_eq!(
            derivative_combination(y),
            fixture(&set, &format!("sum_{y}")),
            "sum_{y}"
        );
        assert_eq!(
            check_theorem(y).diagonal_of_sum,
            fixture(&set, &format!("diag_sum_{y}"))
        );
    }
}

#[test]
fn every_fixture_has_a_computed_counterpart() {
    let set = FixtureSet::builtin();
    for f in &set {
        let (kind, y) = f.name.rsplit_once('_').unwrap();
        let computed = match (kind, y) {
            ("f", y) => build_f(y.parse().unwrap()),
            ("sum", y) => derivative_combination(y.parse().unwrap()),
            ("diag_sum", y) => check_theorem(y.parse().unwrap()).diagonal_of_sum,
            (df, "dx") => partials(df[2..].parse().unwrap()).0,
            (df, "dz") => partials(df[2..].parse().unwrap()).1,
            _ => panic!("unrecognised fixture {}", f.name),
        };
        assert_eq!(computed, f.poly, "{} ({})", f.name, f.source_ref);
    }
}

/// Rendering reproduces the transcribed text as written, not just the polynomial.
#[test]
fn plain_rendering_is_verbatim() {
    for line in oddpower_core::io::PAPER_FIXTURES.lines() {
        if line.trim_start().starts_with('#') {
            continue;
        }
        let Some((_, expr)) = line.split_once(":=") else {
            continue;
        };
        let expr = expr.trim();
        assert_eq!(
            render(&parse_poly(expr).unwrap(), RenderFormat::Plain),
            expr
        );
    }
}
