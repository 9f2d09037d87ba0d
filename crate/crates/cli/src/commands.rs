use std::io::Write;
use std::str::FromStr;
use std::sync::Arc;

use ratell_core::catalog::{
    build_entry, catalog, classify_dim7, classify_dim8, classify_dim9, CheckGroup, EntryData, Label, FAMILIES,
};
use ratell_core::parse::{expression_names, parse_model, parse_poly, render_model};
use ratell_core::{
    buchberger, check_constraints, check_sac, enumerate_exponents, exponents_of_model, formal_dimension_from_exponents,
    is_regular_sequence, CubicForm, ExponentPair, Poly, PolyRing, Rational, RationalModel,
};
use serde::Serialize;
use serde_json::json;

use crate::error::CliError;
use crate::{CatalogAction, Cli, Command, CubicAction, EXIT_CHECK_FAILED, EXIT_OK};

type Out<'a> = &'a mut dyn Write;

pub fn dispatch(cli: &Cli, out: Out) -> Result<u8, CliError> {
    let json = cli.json;
    match &cli.command {
        Command::Exponents { n } => exponents(*n, json, out),
        Command::CheckSac { a, b } => sac(a, b, json, out),
        Command::Cohomology { file, max_degree } => cohomology(file, *max_degree, json, out),
        Command::Regseq { polys, vars } => regseq(polys, vars.as_deref(), json, out),
        Command::Groebner { polys, vars } => groebner(polys, vars.as_deref(), json, out),
        Command::Cubic { action, expr, b2, vars } => cubic(*action, expr, *b2, vars.as_deref(), json, out),
        Command::Catalog { action } => match action {
            CatalogAction::List => catalog_list(json, out),
            CatalogAction::Build { name, params } => catalog_build(name, params, json, out),
        },
        Command::Classify7 { file } => classify(file, 7, json, out),
        Command::Classify8 { file } => classify(file, 8, json, out),
        Command::Classify9 { file } => classify(file, 9, json, out),
        Command::VerifyPaper { section } => {
            let groups = match section {
                Some(s) => vec![CheckGroup::from_number(*s).expect("range checked by the parser")],
                None => CheckGroup::ALL.to_vec(),
            };
            let records = crate::run_verification(&groups);
            let failed = records.iter().filter(|r| !r.passed()).count();
            if json {
                emit_json(out, &records)?;
            } else {
                for r in &records {
                    let tag = match r.status {
                        ratell_core::catalog::Status::Pass => "PASS",
                        ratell_core::catalog::Status::Fail => "FAIL",
                        ratell_core::catalog::Status::Skip => "SKIP",
                    };
                    if r.passed() {
                        writeln!(out, "{tag} {}", r.name)?;
                    } else {
                        writeln!(out, "{tag} {}: expected {}, got {} [{}]", r.name, r.expected, r.actual, r.cite)?;
                    }
                }
                writeln!(out, "{} checks, {} passed, {} failed", records.len(), records.len() - failed, failed)?;
            }
            Ok(if failed == 0 { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
    }
}

fn emit_json<T: Serialize>(out: Out, v: &T) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, v)?;
    writeln!(out)?;
    Ok(())
}

fn exponents(n: u32, json: bool, out: Out) -> Result<u8, CliError> {
    let list = enumerate_exponents(n).map_err(CliError::core(format!("exponents {n}: ")))?;
    if json {
        emit_json(out, &list)?;
    } else {
        for e in &list {
            writeln!(out, "{e}")?;
        }
    }
    Ok(EXIT_OK)
}

fn sac(a: &[u32], b: &[u32], json: bool, out: Out) -> Result<u8, CliError> {
    let e = ExponentPair::new(a.to_vec(), b.to_vec())?;
    let sac = check_sac(&e);
    let n = formal_dimension_from_exponents(&e);
    let constraints = u32::try_from(n).is_ok_and(|n| check_constraints(&e, n));
    if json {
        emit_json(out, &json!({ "exponents": e, "sac": sac, "formal_dimension": n, "constraints": constraints }))?;
    } else {
        writeln!(out, "{e}")?;
        writeln!(out, "strong arithmetic condition: {}", if sac { "satisfied" } else { "violated" })?;
        writeln!(out, "formal dimension: {n}")?;
        writeln!(out, "dimension constraints: {}", if constraints { "satisfied" } else { "violated" })?;
    }
    Ok(EXIT_OK)
}

fn read_model(file: &str) -> Result<RationalModel, CliError> {
    let text = std::fs::read_to_string(file).map_err(|source| CliError::Io { path: file.into(), source })?;
    parse_model(&text).map_err(CliError::core(format!("{file}:")))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cohomology(file: &str, max_degree: Option<u32>, json: bool, out: Out) -> Result<u8, CliError> {
    let m = read_model(file)?;
    let n = formal_dimension_from_exponents(&exponents_of_model(&m));
    let max = max_degree.unwrap_or_else(|| u32::try_from(n).map_or(20, |n| n + 7));
    let report = m.cohomology_betti(max);
    let elliptic = if m.is_pure() { Some(m.pure_is_elliptic()?) } else { None };
    if json {
        emit_json(
            out,
            &json!({
                "betti": report.betti,
                "max_degree": report.max_degree_computed,
                "formal_dimension": report.formal_dimension_claim,
                "poincare_duality": report.poincare_symmetric,
                "euler_characteristic": report.euler_characteristic(),
                "pure": m.is_pure(),
                "elliptic_pure_criterion": elliptic,
            }),
        )?;
    } else {
        for (k, b) in report.betti_pairs() {
            writeln!(out, "b{k} = {b}")?;
        }
        match report.formal_dimension_claim {
            Some(n) => writeln!(out, "formal dimension from exponents: {n}")?,
            None => writeln!(out, "formal dimension from exponents: negative")?,
        }
        writeln!(out, "poincare duality: {}", yes(report.poincare_symmetric))?;
        match elliptic {
            Some(e) => writeln!(out, "elliptic (pure criterion): {}", yes(e))?,
            None => writeln!(out, "elliptic: not decided for non-pure models")?,
        }
    }
    Ok(EXIT_OK)
}

/// The polynomial ring on `vars`, or on the sorted names in `polys`.
fn ring_for(polys: &[String], vars: Option<&[String]>) -> Result<Arc<PolyRing>, CliError> {
    let names = match vars {
        Some(v) => v.to_vec(),
        None => {
            let mut all = Vec::new();
            for p in polys {
                all.extend(expression_names(p).map_err(CliError::core(format!("`{p}`: ")))?);
            }
            all.sort();
            all.dedup();
            all
        }
    };
    if names.is_empty() {
        return Err(CliError::Usage("no variables; pass --vars".into()));
    }
    Ok(PolyRing::new(names)?)
}

fn parse_all(polys: &[String], ring: &Arc<PolyRing>) -> Result<Vec<Poly<Rational>>, CliError> {
    polys.iter().map(|p| parse_poly(p, ring).map_err(CliError::core(format!("`{p}`: ")))).collect()
}

fn regseq(polys: &[String], vars: Option<&[String]>, json: bool, out: Out) -> Result<u8, CliError> {
    let ring = ring_for(polys, vars)?;
    let ps = parse_all(polys, &ring)?;
    let regular = is_regular_sequence(&ps, &ring)?;
    if json {
        emit_json(out, &json!({ "vars": ring.names(), "regular": regular }))?;
    } else {
        writeln!(out, "{}", if regular { "regular" } else { "not regular" })?;
    }
    Ok(EXIT_OK)
}

fn groebner(polys: &[String], vars: Option<&[String]>, json: bool, out: Out) -> Result<u8, CliError> {
    let ring = ring_for(polys, vars)?;
    let ps = parse_all(polys, &ring)?;
    let gb = buchberger(&ring, &ps)?;
    let basis: Vec<String> = gb.generators().iter().map(ToString::to_string).collect();
    if json {
        emit_json(out, &json!({ "vars": ring.names(), "basis": basis }))?;
    } else {
        for g in &basis {
            writeln!(out, "{g}")?;
        }
    }
    Ok(EXIT_OK)
}

fn cubic(action: CubicAction, expr: &str, b2: Option<usize>, vars: Option<&[String]>, json: bool, out: Out) -> Result<u8, CliError> {
    let ring = ring_for(&[expr.to_string()], vars)?;
    let dim = ring.nvars();
    if let Some(b) = b2 {
        if b != dim {
            return Err(CliError::Usage(format!(
                "--b2 {b} but the form has {dim} variables ({}); pass --vars",
                ring.names().join(",")
            )));
        }
    }
    if !(2..=3).contains(&dim) {
        return Err(CliError::Usage(format!("cubic forms need 2 or 3 variables, found {dim}")));
    }
    let p = parse_poly(expr, &ring).map_err(CliError::core(format!("`{expr}`: ")))?;
    let f = CubicForm::form_of_polynomial(&p)?;
    let vars = ring.names();
    match action {
        CubicAction::Classify => {
            let class = if dim == 2 {
                let c = f.binary_classify()?;
                format!("{}: {}", c.description(), c.normal_form())
            } else if f.is_zero() {
                "zero".to_string()
            } else if f.is_singular_ternary()? {
                "singular".to_string()
            } else {
                "nonsingular".to_string()
            };
            if json {
                emit_json(out, &json!({ "vars": vars, "dim": dim, "class": class }))?;
            } else {
                writeln!(out, "{class}")?;
            }
        }
        CubicAction::Elliptic => {
            let v = f.is_elliptic_form(dim)?;
            if json {
                emit_json(out, &json!({ "vars": vars, "elliptic": v.elliptic, "reason": v.reason }))?;
            } else {
                writeln!(out, "{}", if v.elliptic { "elliptic" } else { "not elliptic" })?;
            }
        }
        CubicAction::Associated => {
            if dim != 3 {
                return Err(CliError::Usage("the associated subspace needs a ternary form".into()));
            }
            let w = f.associated_subspace()?;
            let basis: Vec<String> = w.basis().iter().map(ToString::to_string).collect();
            if json {
                emit_json(out, &json!({ "vars": vars, "dim": w.dim(), "basis": basis, "regular": w.is_regular()? }))?;
            } else {
                writeln!(out, "{w}")?;
            }
        }
        CubicAction::Sigma => {
            if dim != 3 {
                return Err(CliError::Usage("hesse parameters need a ternary form".into()));
            }
            let cands = f.hesse_sigma_candidates(1e-9)?;
            if json {
                let list: Vec<_> = cands
                    .iter()
                    .map(|r| json!({ "lo": r.lo.to_string(), "hi": r.hi.to_string(), "exact": r.exact, "approx": r.approx() }))
                    .collect();
                emit_json(out, &list)?;
            } else {
                for r in &cands {
                    if r.exact {
                        writeln!(out, "{}", r.lo)?;
                    } else {
                        writeln!(out, "{:.9} in [{}, {}]", r.approx(), r.lo, r.hi)?;
                    }
                }
            }
        }
    }
    Ok(EXIT_OK)
}

fn catalog_list(json: bool, out: Out) -> Result<u8, CliError> {
    let entries = catalog()?;
    let group = |g: CheckGroup| match g {
        CheckGroup::Six => 3,
        CheckGroup::Seven => 4,
        CheckGroup::EightNine => 5,
    };
    if json {
        let e: Vec<_> = entries.iter().map(|e| json!({ "name": e.name, "section": group(e.group), "cite": e.cite })).collect();
        let f: Vec<_> = FAMILIES.iter().map(|(n, p)| json!({ "name": n, "params": p })).collect();
        emit_json(out, &json!({ "entries": e, "families": f }))?;
    } else {
        writeln!(out, "entries:")?;
        for e in &entries {
            writeln!(out, "  {} [section {}]", e.name, group(e.group))?;
        }
        writeln!(out, "families:")?;
        for (n, p) in FAMILIES {
            writeln!(out, "  {n} {p}")?;
        }
    }
    Ok(EXIT_OK)
}

fn catalog_build(name: &str, params: &[String], json: bool, out: Out) -> Result<u8, CliError> {
    let values = params
        .iter()
        .map(|p| Rational::from_str(p).map_err(|_| CliError::Usage(format!("`{p}` is not a rational number"))))
        .collect::<Result<Vec<_>, _>>()?;
    let data = build_entry(name, &values).map_err(CliError::core(format!("{name}: ")))?;
    match data {
        EntryData::Model(m) => {
            let text = render_model(&m);
            if json {
                emit_json(out, &json!({ "kind": "model", "model": text }))?;
            } else {
                write!(out, "{text}")?;
            }
        }
        EntryData::Quadrics(w) => {
            let basis: Vec<String> = w.basis().iter().map(ToString::to_string).collect();
            if json {
                emit_json(out, &json!({ "kind": "quadrics", "vars": w.ring().names(), "basis": basis }))?;
            } else {
                writeln!(out, "{w}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn classify(file: &str, n: u32, json: bool, out: Out) -> Result<u8, CliError> {
    let m = read_model(file)?;
    let label: Label = match n {
        7 => classify_dim7(&m),
        8 => classify_dim8(&m),
        _ => classify_dim9(&m),
    }
    .map_err(CliError::core(format!("{file}: ")))?;
    if json {
        emit_json(out, &json!({ "label": label.to_string(), "detail": label }))?;
    } else {
        writeln!(out, "{label}")?;
    }
    Ok(EXIT_OK)
}
