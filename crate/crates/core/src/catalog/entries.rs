//! Catalog entries with their expected properties, and the verifier.

use num_traits::ToPrimitive;

use crate::cubic::{cubic_form_of_quadric_ideal, form_ring, CubicForm, QuadricSubspace};
use crate::error::{Error, Result};
use crate::exponents::{enumerate_exponents, exponents_of_model, formal_dimension_from_exponents, ExponentPair};
use crate::parse::parse_poly;
use crate::{Rational, RationalModel};

use super::biquotient::{biquotient_ring, BiquotientKind, SPORADIC_FORM, SPORADIC_SIGMA};
use super::checks::{CheckGroup, CheckRecord};
use super::classify::{classify_dim7, classify_dim8, classify_dim9};
use super::models::*;

#[derive(Debug, Clone)]
pub enum EntryData {
    Model(RationalModel),
    /// Three quadrics in three variables presenting a ring with H^2 in
    /// degree 2.
    Quadrics(QuadricSubspace<Rational>),
}

/// Expected properties; `None` fields are not checked.
#[derive(Debug, Clone, Default)]
pub struct Expected {
    pub exponents: Option<ExponentPair>,
    pub betti: Option<Vec<usize>>,
    pub elliptic: Option<bool>,
    /// Classifier label, for models of formal dimension 7, 8 or 9.
    pub label: Option<String>,
    /// Cubic form in x, y, z, up to a nonzero scalar.
    pub form: Option<String>,
    /// A Hesse parameter within 1e-3 of this value.
    pub sigma_near: Option<f64>,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub group: CheckGroup,
    pub cite: String,
    pub data: EntryData,
    pub expected: Expected,
}

fn ep(a: &[u32], b: &[u32]) -> ExponentPair {
    ExponentPair::new(a.to_vec(), b.to_vec()).expect("fixed exponents")
}

fn q(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// Constructor families accepted by `build_entry`, with parameter names.
pub const FAMILIES: &[(&str, &str)] = &[
    ("sphere", "n"),
    ("cp", "n"),
    ("hp", "n"),
    ("vtilde", "f2 g1 g2 g3 g4"),
    ("dlambda", "lambda"),
    ("m-sigma", "sigma"),
    ("x-sigma", "sigma"),
    ("n7", ""),
    ("x-sigma-s4", "sigma"),
    ("quaternionic-pair", "epsilon"),
    ("n9", ""),
    ("b1", "c1 c2"),
    ("b2", "a3 b3"),
    ("b3", "b1 c1 c2"),
    ("bsp", ""),
];

fn small_int(v: &Rational) -> Result<u32> {
    if !v.is_integer() {
        return Err(Error::Precondition(format!("expected an integer, found {v}")));
    }
    v.to_integer().to_u32().ok_or_else(|| Error::OutOfRange(format!("parameter {v}")))
}

/// Builds a family member by name.
pub fn build_entry(name: &str, params: &[Rational]) -> Result<EntryData> {
    let want = |n: usize| {
        if params.len() == n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: n, found: params.len() })
        }
    };
    let model = match name {
        "sphere" | "cp" | "hp" => {
            want(1)?;
            let n = small_int(&params[0])?;
            match name {
                "sphere" => sphere_model(n)?,
                "cp" => cp_model(n)?,
                _ => hp_model(n)?,
            }
        }
        "vtilde" => {
            want(5)?;
            vtilde_model(&params[0], &[params[1].clone(), params[2].clone(), params[3].clone(), params[4].clone()])?
        }
        "dlambda" => {
            want(1)?;
            dlambda_model(&params[0])?
        }
        "m-sigma" => {
            want(1)?;
            m_sigma_model(&params[0])?
        }
        "x-sigma" => {
            want(1)?;
            x_sigma_model(&params[0])?
        }
        "n7" => {
            want(0)?;
            n7_model()?
        }
        "x-sigma-s4" => {
            want(1)?;
            x_sigma_s4_model(&params[0])?
        }
        "quaternionic-pair" => {
            want(1)?;
            quaternionic_pair_model(&params[0])?
        }
        "n9" => {
            want(0)?;
            n9_model()?
        }
        "b1" | "b2" | "b3" | "bsp" => return Ok(EntryData::Quadrics(biquotient_ring(&BiquotientKind::parse(name, params)?)?)),
        _ => return Err(Error::Precondition(format!("unknown catalog family `{name}`"))),
    };
    Ok(EntryData::Model(model))
}

struct Draft {
    name: &'static str,
    group: CheckGroup,
    cite: &'static str,
    data: Result<EntryData>,
    expected: Expected,
}

fn model(m: Result<RationalModel>) -> Result<EntryData> {
    m.map(EntryData::Model)
}

/// The fixed catalog with expected properties.
pub fn catalog() -> Result<Vec<CatalogEntry>> {
    use CheckGroup::*;
    let ex = |a: &[u32], b: &[u32], betti: &[usize], label: Option<&str>| Expected {
        exponents: Some(ep(a, b)),
        betti: Some(betti.to_vec()),
        elliptic: Some(true),
        label: label.map(String::from),
        ..Default::default()
    };
    let s = |n| sphere_model(n);
    let specs = vec![
        Draft {
            name: "S^7",
            group: Seven,
            cite: "dimension 7 finite cases",
            data: model(s(7)),
            expected: ex(&[], &[4], &[1, 0, 0, 0, 0, 0, 0, 1], Some("S^7")),
        },
        Draft {
            name: "S^2 x S^5",
            group: Seven,
            cite: "dimension 7 finite cases",
            data: model(product(&s(2)?, &s(5)?)),
            expected: ex(&[1], &[2, 3], &[1, 0, 1, 0, 0, 1, 0, 1], Some("S^2 x S^5")),
        },
        Draft {
            name: "CP^2 x S^3",
            group: Seven,
            cite: "dimension 7 finite cases",
            data: model(product(&cp_model(2)?, &s(3)?)),
            expected: ex(&[1], &[2, 3], &[1, 0, 1, 1, 1, 1, 0, 1], Some("CP^2 x S^3")),
        },
        Draft {
            name: "S^3 x S^4",
            group: Seven,
            cite: "dimension 7 finite cases",
            data: model(product(&s(3)?, &s(4)?)),
            expected: ex(&[2], &[2, 4], &[1, 0, 0, 1, 1, 0, 0, 1], Some("S^3 x S^4")),
        },
        Draft {
            name: "N^7",
            group: Seven,
            cite: "dimension 7, rank 3 differential",
            data: model(n7_model()),
            expected: ex(&[1, 1], &[2, 2, 2], &[1, 0, 2, 0, 0, 2, 0, 1], Some("N^7")),
        },
        Draft {
            name: "M_sigma(1)",
            group: Seven,
            cite: "dimension 7, rank 2 differential",
            data: model(m_sigma_model(&q(1))),
            expected: ex(&[1, 1], &[2, 2, 2], &[1, 0, 2, 1, 1, 2, 0, 1], Some("M_sigma[1]")),
        },
        Draft {
            name: "M_sigma(8)",
            group: Seven,
            cite: "dimension 7, square class of sigma",
            data: model(m_sigma_model(&q(8))),
            expected: ex(&[1, 1], &[2, 2, 2], &[1, 0, 2, 1, 1, 2, 0, 1], Some("M_sigma[2]")),
        },
        Draft {
            name: "X_sigma(2)",
            group: Seven,
            cite: "formal dimension 4 family",
            data: model(x_sigma_model(&q(2))),
            expected: ex(&[1, 1], &[2, 2], &[1, 0, 2, 0, 1], None),
        },
        Draft {
            name: "vtilde(1;0,0,0,1)",
            group: Six,
            cite: "b2 = 2 models in dimension 6",
            data: model(vtilde_model(&q(1), &[q(0), q(0), q(0), q(1)])),
            expected: Expected {
                form: Some("-x^3 + 3*x*y^2".into()),
                ..ex(&[1, 1], &[2, 3], &[1, 0, 2, 0, 2, 0, 1], None)
            },
        },
        Draft {
            name: "d_lambda(0)",
            group: Six,
            cite: "d_lambda family",
            data: model(dlambda_model(&q(0))),
            expected: Expected {
                form: Some("x*y*z".into()),
                ..ex(&[1, 1, 1], &[2, 2, 2], &[1, 0, 3, 0, 3, 0, 1], None)
            },
        },
        Draft {
            name: "d_lambda(2)",
            group: Six,
            cite: "d_lambda family",
            data: model(dlambda_model(&q(2))),
            expected: Expected {
                form: Some("x^3 + y^3 + z^3 + 3*x*y*z".into()),
                ..ex(&[1, 1, 1], &[2, 2, 2], &[1, 0, 3, 0, 3, 0, 1], None)
            },
        },
        Draft {
            name: "d_lambda(1)",
            group: Six,
            cite: "d_lambda family, excluded parameter",
            data: model(dlambda_model(&q(1))),
            expected: Expected { elliptic: Some(false), ..Default::default() },
        },
        Draft {
            name: "B1(7,6)",
            group: Six,
            cite: "biquotient B1",
            data: build_entry("b1", &[q(7), q(6)]),
            expected: Expected { elliptic: Some(true), ..Default::default() },
        },
        Draft {
            name: "B2(0,4)",
            group: Six,
            cite: "biquotient B2",
            data: build_entry("b2", &[q(0), q(4)]),
            expected: Expected { elliptic: Some(true), ..Default::default() },
        },
        Draft {
            name: "B3(2,3,5)",
            group: Six,
            cite: "biquotient B3",
            data: build_entry("b3", &[q(2), q(3), q(5)]),
            expected: Expected { elliptic: Some(true), ..Default::default() },
        },
        Draft {
            name: "Bsp",
            group: Six,
            cite: "sporadic biquotient",
            data: build_entry("bsp", &[]),
            expected: Expected {
                elliptic: Some(true),
                form: Some(SPORADIC_FORM.into()),
                sigma_near: Some(SPORADIC_SIGMA),
                ..Default::default()
            },
        },
        Draft {
            name: "HP^2 # HP^2",
            group: EightNine,
            cite: "dimension 8, middle pairing",
            data: model(quaternionic_pair_model(&q(1))),
            expected: ex(&[2, 2], &[4, 4], &[1, 0, 0, 0, 2, 0, 0, 0, 1], Some("HP^2 # HP^2")),
        },
        Draft {
            name: "S^4 x S^4",
            group: EightNine,
            cite: "dimension 8, middle pairing",
            data: model(quaternionic_pair_model(&q(-1))),
            expected: ex(&[2, 2], &[4, 4], &[1, 0, 0, 0, 2, 0, 0, 0, 1], Some("S^4 x S^4")),
        },
        Draft {
            name: "X_sigma(3) x S^4",
            group: EightNine,
            cite: "dimension 8, X_sigma x S^4 family",
            data: model(x_sigma_s4_model(&q(3))),
            expected: ex(&[1, 1, 2], &[2, 2, 4], &[1, 0, 2, 0, 2, 0, 2, 0, 1], Some("X_sigma x S^4[3]")),
        },
        Draft {
            name: "N^9",
            group: EightNine,
            cite: "dimension 9, vanishing pairing",
            data: model(n9_model()),
            expected: ex(&[1, 1], &[2, 2, 3], &[1, 0, 2, 0, 1, 1, 0, 2, 0, 1], Some("N^9")),
        },
        Draft {
            name: "X_sigma(2) x S^5",
            group: EightNine,
            cite: "dimension 9, nondegenerate pairing",
            data: model(product(&x_sigma_model(&q(2))?, &s(5)?)),
            expected: ex(&[1, 1], &[2, 2, 3], &[1, 0, 2, 0, 1, 1, 0, 2, 0, 1], Some("X_sigma x S^5[2]")),
        },
        Draft {
            name: "M_sigma(2) x S^2",
            group: EightNine,
            cite: "dimension 9, products with S^2",
            data: model(product(&m_sigma_model(&q(2))?, &s(2)?)),
            expected: Expected {
                label: Some("square-zero locus in H^2 of dimension 1 and degree 3".into()),
                ..ex(&[1, 1, 1], &[2, 2, 2, 2], &[1, 0, 3, 1, 3, 3, 1, 3, 0, 1], None)
            },
        },
    ];
    specs
        .into_iter()
        .map(|s| {
            Ok(CatalogEntry {
                name: s.name.into(),
                group: s.group,
                cite: s.cite.into(),
                data: s.data?,
                expected: s.expected,
            })
        })
        .collect()
}

fn record(entry: &CatalogEntry, what: &str, ok: bool, expected: String, actual: String) -> CheckRecord {
    CheckRecord::new(format!("catalog {}: {what}", entry.name), ok, expected, actual, &entry.cite)
}

fn fmt_list<T: std::fmt::Display>(v: &[T]) -> String {
    format!("({})", v.iter().map(T::to_string).collect::<Vec<_>>().join(","))
}

fn form_of(text: &str, dim: usize) -> Result<CubicForm<Rational>> {
    CubicForm::form_of_polynomial(&parse_poly(text, &form_ring(dim))?)
}

fn check_form(entry: &CatalogEntry, got: Result<CubicForm<Rational>>, want: &str, out: &mut Vec<CheckRecord>) {
    let actual = match &got {
        Ok(f) => f.canonical().to_string(),
        Err(e) => format!("error: {e}"),
    };
    let ok = match got {
        Ok(f) => form_of(want, f.dim()).is_ok_and(|w| f.is_proportional(&w)),
        _ => false,
    };
    out.push(record(entry, "cubic form up to scale", ok, want.into(), actual));
}

/// Recomputes every expected property of `entry`.
pub fn verify_entry(entry: &CatalogEntry) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    let exp = &entry.expected;
    match &entry.data {
        EntryData::Model(m) => {
            let valid = m.validate();
            out.push(record(entry, "valid minimal model", valid.is_ok(), "valid".into(), match &valid {
                Ok(()) => "valid".into(),
                Err(e) => e.to_string(),
            }));
            let e = exponents_of_model(m);
            if let Some(want) = &exp.exponents {
                out.push(record(entry, "exponents", &e == want, want.to_string(), e.to_string()));
            }
            let n = formal_dimension_from_exponents(&e);
            if let Some(want) = exp.elliptic {
                let got = if m.is_pure() { m.pure_is_elliptic().ok() } else { None };
                out.push(record(
                    entry,
                    "elliptic",
                    got == Some(want),
                    want.to_string(),
                    got.map_or("undetermined".into(), |g| g.to_string()),
                ));
                if want && (1..=12).contains(&n) {
                    let listed = enumerate_exponents(n as u32).map(|l| l.contains(&e)).unwrap_or(false);
                    out.push(record(entry, "exponents realizable", listed, "listed".into(), listed.to_string()));
                }
            }
            if let Some(want) = &exp.betti {
                let report = m.cohomology_betti(want.len() as u32 + 1);
                let mut padded = want.clone();
                padded.extend([0, 0]);
                out.push(record(entry, "betti numbers", report.betti == padded, fmt_list(&padded), fmt_list(&report.betti)));
                if exp.elliptic == Some(true) {
                    out.push(record(
                        entry,
                        "poincare duality",
                        report.poincare_symmetric,
                        "true".into(),
                        report.poincare_symmetric.to_string(),
                    ));
                }
            }
            if let Some(want) = &exp.label {
                let got = match n {
                    7 => classify_dim7(m),
                    8 => classify_dim8(m),
                    9 => classify_dim9(m),
                    _ => Err(Error::Precondition(format!("no classifier in dimension {n}"))),
                };
                let actual = got.map_or_else(|e| format!("error: {e}"), |l| l.to_string());
                out.push(record(entry, "classification", &actual == want, want.clone(), actual));
            }
            if let Some(want) = &exp.form {
                check_form(entry, m.cup_product_cubic_form(), want, &mut out);
            }
        }
        EntryData::Quadrics(w) => {
            let form = cubic_form_of_quadric_ideal(w);
            if let Some(want) = exp.elliptic {
                let got = form.as_ref().ok().and_then(|f| f.is_elliptic_form(3).ok()).map(|v| v.elliptic);
                out.push(record(
                    entry,
                    "elliptic",
                    got == Some(want),
                    want.to_string(),
                    got.map_or("undetermined".into(), |g| g.to_string()),
                ));
            }
            if let Some(want) = &exp.form {
                check_form(entry, form.clone(), want, &mut out);
            }
            if let Some(target) = exp.sigma_near {
                let cands = form.and_then(|f| {
                    let singular = f.is_singular_ternary()?;
                    Ok((singular, f.hesse_sigma_candidates(1e-6)?))
                });
                let (ok, actual) = match cands {
                    Ok((singular, roots)) => (
                        !singular && roots.iter().any(|r| (r.approx() - target).abs() < 1e-3),
                        format!(
                            "nonsingular={} candidates={}",
                            !singular,
                            fmt_list(&roots.iter().map(|r| format!("{:.5}", r.approx())).collect::<Vec<_>>())
                        ),
                    ),
                    Err(e) => (false, format!("error: {e}")),
                };
                out.push(record(entry, "hesse parameter", ok, format!("nonsingular, sigma within 1e-3 of {target}"), actual));
            }
        }
    }
    out
}
