use std::path::Path;

use jones_twist::colored::colored_jones;
use jones_twist::families::{
    pretzel_bracket, pretzel_jones, pretzel_writhe, torus_jones, twist_knot_jones, PretzelParams,
};
use jones_twist::mahler::{
    mahler_boyd_lawton, mahler_quadrature, mahler_univariate, BoydLawtonConfig, QuadratureConfig,
};
use jones_twist::roots::{find_roots, unit_circle_stats};
use jones_twist::skein::{a_to_t, t_coefficients, writhe_normalize};
use jones_twist::twist::{
    detect_blocks, limit_mahler, recover_limit_polynomial, twist_series, Parity, TwistFamily,
    TwistRegion,
};
use jones_twist::{bracket, parse_braid, BivariatePolynomial, BraidWord, LaurentPolynomial};
use serde_json::{json, Value};

use crate::output::{six, CliError, Measure, Method};
use crate::{Cli, Command, FamilyArgs};

type Result<T> = std::result::Result<T, CliError>;

/// The argument itself, or the contents of the file it names after `@`.
fn read_text(arg: &str) -> Result<String> {
    match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| CliError::io(format!("cannot read {path}: {e}"))),
        None => Ok(arg.to_string()),
    }
}

fn braid(arg: &str) -> Result<BraidWord> {
    Ok(parse_braid(&read_text(arg)?)?)
}

/// `a..b` (inclusive) or a single value.
fn parse_range(s: &str) -> Result<Vec<u32>> {
    let bad = || CliError::usage(format!("expected a twist range like 0..5, got {s:?}"));
    let parse = |t: &str| t.trim().parse::<u32>().map_err(|_| bad());
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (parse(a)?, parse(b.trim_start_matches('='))?);
            if a > b {
                return Err(bad());
            }
            Ok((a..=b).collect())
        }
        None => Ok(vec![parse(s)?]),
    }
}

fn family(args: &FamilyArgs) -> Result<TwistFamily> {
    let region: TwistRegion = args.region.parse()?;
    Ok(TwistFamily::new(
        braid(&args.braid.braid)?,
        region,
        args.insert,
    )?)
}

fn tolerance(cli: &Cli) -> Result<Option<f64>> {
    match cli.tolerance {
        Some(t) if !(t.is_finite() && t > 0.0) => Err(CliError::usage(format!(
            "--tolerance must be positive, got {t}"
        ))),
        t => Ok(t),
    }
}

fn boyd_lawton_config(cli: &Cli) -> Result<BoydLawtonConfig> {
    let mut c = BoydLawtonConfig::default();
    if let Some(t) = tolerance(cli)? {
        c.tolerance = t;
    }
    Ok(c)
}

fn quadrature_config(cli: &Cli) -> Result<QuadratureConfig> {
    let mut c = QuadratureConfig::default();
    if let Some(t) = tolerance(cli)? {
        c.tolerance = t;
    }
    Ok(c)
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serialisation to a JSON value cannot fail")
}

fn strings(v: &[num_bigint::BigInt]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

/// Measure of a polynomial in `A`, taken in `t` when the exponents allow it.
fn measure(p: &LaurentPolynomial) -> Result<Measure> {
    let in_t = a_to_t(p).unwrap_or_else(|_| p.clone());
    Ok(mahler_univariate(&in_t)?.into())
}

/// JSON report of a Jones polynomial given in `A`.
fn jones_report(jones: &LaurentPolynomial) -> Result<Value> {
    Ok(json!({
        "jones_a": to_value(jones),
        "jones_t": a_to_t(jones).ok().map(|p| to_value(&p)),
        "coeffs": t_coefficients(jones).ok().map(|c| strings(&c)),
        "mahler": to_value(&measure(jones)?),
    }))
}

enum Poly {
    Uni(LaurentPolynomial),
    Bi(BivariatePolynomial),
}

fn parse_poly(arg: &str) -> Result<Poly> {
    let text = read_text(arg)?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| CliError::from(jones_twist::Error::Json(e.to_string())))?;
    if value.get("vars").is_some() {
        Ok(Poly::Bi(BivariatePolynomial::from_json(&text)?))
    } else {
        Ok(Poly::Uni(LaurentPolynomial::from_json(&text)?))
    }
}

fn write_csv(path: &Path, records: &[jones_twist::twist::SeriesRecord]) -> Result<()> {
    let io = |e: csv::Error| CliError::io(format!("cannot write {}: {e}", path.display()));
    let mut w = csv::Writer::from_path(path).map_err(io)?;
    w.write_record(["m", "span", "L1_norm", "mahler", "coeffs"])
        .map_err(io)?;
    for r in records {
        w.write_record([
            r.m.to_string(),
            r.span.to_string(),
            r.l1_norm.to_string(),
            six(r.mahler),
            strings(&r.coeffs).join(";"),
        ])
        .map_err(io)?;
    }
    w.flush()
        .map_err(|e| CliError::io(format!("cannot write {}: {e}", path.display())))
}

pub fn run(cli: &Cli) -> Result<Value> {
    match &cli.command {
        Command::Bracket(b) => Ok(to_value(&bracket(&braid(&b.braid)?)?)),
        Command::Jones(b) => {
            let word = braid(&b.braid)?;
            let br = bracket(&word)?;
            let mut report = jones_report(&writhe_normalize(&br, word.writhe()))?;
            report["braid"] = json!(word.to_string());
            report["components"] = json!(word.components());
            report["writhe"] = json!(word.writhe());
            report["bracket"] = to_value(&br);
            Ok(report)
        }
        Command::Mahler {
            poly,
            braid: b,
            method,
        } => {
            let measure = match (poly, b) {
                (Some(poly), _) => match parse_poly(poly)? {
                    Poly::Uni(p) => mahler_univariate(&p)?.into(),
                    Poly::Bi(p) => match method {
                        Method::BoydLawton => mahler_boyd_lawton(&p, &boyd_lawton_config(cli)?)?,
                        Method::Quadrature => mahler_quadrature(&p, &quadrature_config(cli)?)?,
                    }
                    .into(),
                },
                (None, Some(b)) => measure(&jones_twist::jones(&braid(b)?)?)?,
                (None, None) => return Err(CliError::usage("give --poly or --braid")),
            };
            Ok(json!({ "mahler": to_value(&measure) }))
        }
        Command::Twist { family: f, m, csv } => {
            let fam = family(f)?;
            let records = twist_series(&fam, &parse_range(m)?)?;
            if let Some(path) = csv {
                write_csv(path, &records)?;
            }
            let rows: Vec<Value> = records
                .iter()
                .map(|r| {
                    json!({
                        "m": r.m,
                        "span": r.span,
                        "L1_norm": r.l1_norm.to_string(),
                        "mahler": six(r.mahler),
                        "mahler_full": r.mahler,
                        "mahler_error": r.mahler_error,
                        "coeffs": strings(&r.coeffs),
                        "writhe": fam.writhe(r.m),
                        "bracket": to_value(&r.bracket),
                    })
                })
                .collect();
            Ok(json!({
                "braid": fam.base.to_string(),
                "region": format!("{}:{}", fam.region.first, fam.region.width),
                "series": rows,
            }))
        }
        Command::Ptx { family: f } => {
            let fam = family(f)?;
            let limit = recover_limit_polynomial(&fam)?;
            let config = boyd_lawton_config(cli)?;
            let p = limit.p_tx().ok();
            let result = match &p {
                Some(_) => limit_mahler(&limit, &config)?,
                None => mahler_boyd_lawton(&limit.q, &config)?,
            };
            // M(V) of the link with an unknot around the region, for comparison
            let augmented = fam
                .augmented()
                .and_then(|w| jones_twist::jones(&w))
                .ok()
                .map(|j| measure(&j))
                .transpose()?;
            Ok(json!({
                "exponents": limit.exponents.k,
                "framing": limit.framing,
                "held_out": limit.held_out,
                "q": to_value(&limit.q),
                "p": p.map(|p| to_value(&p)),
                "limit_mahler": to_value(&Measure::from(result)),
                "augmented_mahler": augmented.map(|m| to_value(&m)),
            }))
        }
        Command::Blocks {
            family: f,
            m,
            min_separator,
        } => {
            let fam = family(f)?;
            let parity = Parity::of_width(fam.width());
            let records = twist_series(&fam, &parse_range(m)?)?;
            let decomps: Vec<_> = records
                .iter()
                .map(|r| detect_blocks(&r.coeffs, parity, *min_separator))
                .collect();
            let stable = decomps.len() >= 2
                && decomps[decomps.len() - 2].same_blocks(&decomps[decomps.len() - 1]);
            let rows: Vec<Value> = records
                .iter()
                .zip(&decomps)
                .map(|(r, d)| json!({ "m": r.m, "decomposition": to_value(d) }))
                .collect();
            Ok(json!({ "parity": to_value(&parity), "stable": stable, "series": rows }))
        }
        Command::Torus { m, n } => {
            let mut report = jones_report(&torus_jones(*m, *n)?)?;
            report["torus"] = json!([m, n]);
            Ok(report)
        }
        Command::Twistknot { n } => {
            let v = twist_knot_jones(*n)?;
            Ok(json!({
                "twist_knot": n,
                "jones_t": to_value(&v),
                "coeffs": strings(&v.coefficient_vector()),
                "mahler": to_value(&Measure::from(mahler_univariate(&v)?)),
            }))
        }
        Command::Pretzel { params } => {
            let p: PretzelParams = params.parse()?;
            let mut report = jones_report(&pretzel_jones(&p))?;
            report["pretzel"] = json!(p.a);
            report["writhe"] = json!(pretzel_writhe(&p));
            report["bracket"] = to_value(&pretzel_bracket(&p));
            Ok(report)
        }
        Command::Colored { braid: b, n } => {
            let word = braid(&b.braid)?;
            let j = colored_jones(&word, *n)?;
            let mut report = jones_report(&j)?;
            report["braid"] = json!(word.to_string());
            report["N"] = json!(n);
            Ok(report)
        }
        Command::Roots {
            braid: b,
            poly,
            epsilon,
        } => {
            if !(epsilon.is_finite() && *epsilon > 0.0) {
                return Err(CliError::usage(format!(
                    "--epsilon must be positive, got {epsilon}"
                )));
            }
            let f = match (b, poly) {
                (Some(b), _) => {
                    let jones = jones_twist::jones(&braid(b)?)?;
                    // links carry a t^{1/2} monomial, which has no roots
                    match t_coefficients(&jones) {
                        Ok(c) => LaurentPolynomial::from_coeffs(jones_twist::Var::T, 0, c),
                        Err(_) => jones,
                    }
                }
                (None, Some(p)) => match parse_poly(p)? {
                    Poly::Uni(p) => p,
                    Poly::Bi(_) => {
                        return Err(CliError::usage("roots needs a univariate polynomial"))
                    }
                },
                (None, None) => return Err(CliError::usage("give --braid or --poly")),
            };
            let rs = find_roots(&f)?;
            let stats = unit_circle_stats(&rs, *epsilon);
            let jensen = rs.jensen_product();
            Ok(json!({
                "var": to_value(&rs.var),
                "degree": rs.degree,
                "certified": rs.certified,
                "max_residual": rs.max_residual(),
                "epsilon": epsilon,
                "outside": stats.outside,
                "inside": stats.inside,
                "distinct": stats.distinct,
                "outside_product": stats.outside_product,
                "jensen": six(jensen),
                "jensen_full": jensen,
                "roots": to_value(&rs.roots),
            }))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("0..5").unwrap(), vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(parse_range("0..=2").unwrap(), vec![0, 1, 2]);
        assert_eq!(parse_range("7").unwrap(), vec![7]);
        assert!(parse_range("5..1").is_err());
        assert!(parse_range("a..b").is_err());
    }
}
