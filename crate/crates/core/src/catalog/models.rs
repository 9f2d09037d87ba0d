//! Constructors for the named minimal models.

use num_traits::{One, Zero};

use crate::algebra::GeneratorTable;
use crate::cubic::CubicForm;
use crate::error::{Error, Result};
use crate::parse::parse_element;
use crate::sullivan::SullivanModel;
use crate::{Rational, RationalModel};

/// Model from generator degrees and differential expressions; validated.
pub fn model_from_text(gens: &[(&str, u32)], diffs: &[(&str, String)]) -> Result<RationalModel> {
    let table = GeneratorTable::new(gens.iter().copied())?;
    let images = diffs
        .iter()
        .map(|(name, text)| Ok((*name, parse_element(text, &table)?)))
        .collect::<Result<Vec<_>>>()?;
    let m = SullivanModel::from_named(&table, images)?;
    m.validate()?;
    Ok(m)
}

/// Parenthesized rational for splicing into expressions.
fn p(v: &Rational) -> String {
    format!("({v})")
}

fn nonzero(v: &Rational, what: &str) -> Result<()> {
    if v.is_zero() {
        return Err(Error::Constraint(format!("{what} must be nonzero")));
    }
    Ok(())
}

pub fn sphere_model(n: u32) -> Result<RationalModel> {
    if n < 2 {
        return Err(Error::Constraint(format!("sphere dimension {n} must be at least 2")));
    }
    if n % 2 == 1 {
        model_from_text(&[("y", n)], &[])
    } else {
        model_from_text(&[("x", n), ("y", 2 * n - 1)], &[("y", "x^2".into())])
    }
}

/// CP^n: one generator of degree 2 truncated at height n + 1.
pub fn cp_model(n: u32) -> Result<RationalModel> {
    if n < 1 {
        return Err(Error::Constraint("complex projective dimension must be at least 1".into()));
    }
    model_from_text(&[("x", 2), ("y", 2 * n + 1)], &[("y", format!("x^{}", n + 1))])
}

/// HP^n: one generator of degree 4 truncated at height n + 1.
pub fn hp_model(n: u32) -> Result<RationalModel> {
    if n < 1 {
        return Err(Error::Constraint("quaternionic projective dimension must be at least 1".into()));
    }
    model_from_text(&[("x", 4), ("y", 4 * n + 3)], &[("y", format!("x^{}", n + 1))])
}

/// Tensor product. Generator names of `m2` that clash with `m1` get `'`
/// appended until unique.
pub fn product(m1: &RationalModel, m2: &RationalModel) -> Result<RationalModel> {
    let (t1, t2) = (m1.table(), m2.table());
    let mut names: Vec<(String, u32)> = t1.iter().map(|(n, d)| (n.to_string(), d)).collect();
    let mut map2 = Vec::new();
    for (name, d) in t2.iter() {
        let mut n = name.to_string();
        while names.iter().any(|(m, _)| *m == n) {
            n.push('\'');
        }
        map2.push(names.len());
        names.push((n, d));
    }
    let table = GeneratorTable::new(names)?;
    let map1: Vec<usize> = (0..t1.len()).collect();
    let images = m1
        .differentials()
        .iter()
        .map(|e| e.reindex(&table, &map1))
        .chain(m2.differentials().iter().map(|e| e.reindex(&table, &map2)))
        .collect();
    SullivanModel::new(&table, images)
}

/// Two generators of degree 2, dy1 = x1^2 + f2 x2^2 in degree 3 and a
/// binary cubic dy2 in degree 5.
pub fn vtilde_model(f2: &Rational, g: &[Rational; 4]) -> Result<RationalModel> {
    model_from_text(
        &[("x1", 2), ("x2", 2), ("y1", 3), ("y2", 5)],
        &[
            ("y1", format!("x1^2 + {}*x2^2", p(f2))),
            (
                "y2",
                format!(
                    "{}*x1^3 + {}*x1^2*x2 + {}*x1*x2^2 + {}*x2^3",
                    p(&g[0]),
                    p(&g[1]),
                    p(&g[2]),
                    p(&g[3])
                ),
            ),
        ],
    )
}

/// Resultant-type polynomial whose nonvanishing makes `vtilde_model`
/// elliptic.
pub fn vtilde_determinant(f2: &Rational, g: &[Rational; 4]) -> Rational {
    let [g1, g2, g3, g4] = g;
    let two = Rational::from_integer(2.into());
    f2 * f2 * f2 * g1 * g1 + f2 * f2 * g2 * g2 - &two * f2 * f2 * g1 * g3 + f2 * g3 * g3 - &two * f2 * g2 * g4
        + g4 * g4
}

pub fn satisfies_star(f2: &Rational, g: &[Rational; 4]) -> bool {
    !vtilde_determinant(f2, g).is_zero()
}

/// Binary cup form of `vtilde_model` in closed form.
pub fn cubic_from_vtilde(f2: &Rational, g: &[Rational; 4]) -> Result<CubicForm<Rational>> {
    if !satisfies_star(f2, g) {
        return Err(Error::Constraint("determinant vanishes".into()));
    }
    let a1 = f2 * &g[0] - &g[2];
    let a2 = f2 * &g[1] - &g[3];
    CubicForm::from_coefficients(
        2,
        [(0, 0, 0, f2 * &a2), (0, 0, 1, -(f2 * &a1)), (0, 1, 1, -a2.clone()), (1, 1, 1, a1)],
    )
}

/// dy_j = x_j^2 − λ x_k x_l with {j, k, l} = {1, 2, 3}.
pub fn dlambda_model(lambda: &Rational) -> Result<RationalModel> {
    let l = p(lambda);
    model_from_text(
        &[("x1", 2), ("x2", 2), ("x3", 2), ("y1", 3), ("y2", 3), ("y3", 3)],
        &[
            ("y1", format!("x1^2 - {l}*x2*x3")),
            ("y2", format!("x2^2 - {l}*x1*x3")),
            ("y3", format!("x3^2 - {l}*x1*x2")),
        ],
    )
}

fn sigma_diffs(sigma: &Rational) -> Vec<(&'static str, String)> {
    vec![("y1", "x1*x2".into()), ("y2", format!("x1^2 - {}*x2^2", p(sigma)))]
}

/// Formal dimension 4 family: dy1 = x1 x2, dy2 = x1^2 − σ x2^2.
pub fn x_sigma_model(sigma: &Rational) -> Result<RationalModel> {
    nonzero(sigma, "sigma")?;
    model_from_text(&[("x1", 2), ("x2", 2), ("y1", 3), ("y2", 3)], &sigma_diffs(sigma))
}

/// `x_sigma_model` with an extra closed generator of degree 3.
pub fn m_sigma_model(sigma: &Rational) -> Result<RationalModel> {
    nonzero(sigma, "sigma")?;
    model_from_text(&[("x1", 2), ("x2", 2), ("y1", 3), ("y2", 3), ("y3", 3)], &sigma_diffs(sigma))
}

pub fn n7_model() -> Result<RationalModel> {
    model_from_text(
        &[("x1", 2), ("x2", 2), ("y1", 3), ("y2", 3), ("y3", 3)],
        &[("y1", "x1^2".into()), ("y2", "x2^2".into()), ("y3", "(x1 + x2)^2".into())],
    )
}

/// Degree-2 part dy1 = x1^2 − σ x2^2, dy2 = x1 x2, plus a of degree 4 with
/// dz = a^2. Zero σ is allowed here; see `x_sigma_s4_model`.
pub fn x_sigma_s4_variant(sigma: &Rational) -> Result<RationalModel> {
    model_from_text(
        &[("x1", 2), ("x2", 2), ("y1", 3), ("y2", 3), ("a", 4), ("z", 7)],
        &[("y1", format!("x1^2 - {}*x2^2", p(sigma))), ("y2", "x1*x2".into()), ("z", "a^2".into())],
    )
}

pub fn x_sigma_s4_model(sigma: &Rational) -> Result<RationalModel> {
    nonzero(sigma, "sigma")?;
    x_sigma_s4_variant(sigma)
}

/// Two generators of degree 4 with dy1 = x1 x2, dy2 = x1^2 − ε x2^2.
pub fn quaternionic_pair_model(eps: &Rational) -> Result<RationalModel> {
    nonzero(eps, "epsilon")?;
    model_from_text(
        &[("x1", 4), ("x2", 4), ("y1", 7), ("y2", 7)],
        &[("y1", "x1*x2".into()), ("y2", format!("x1^2 - {}*x2^2", p(eps)))],
    )
}

/// dy1 = x1 x2, dy2 = x1^2, dz = x2^3.
pub fn n9_model() -> Result<RationalModel> {
    model_from_text(
        &[("x1", 2), ("x2", 2), ("y1", 3), ("y2", 3), ("z", 5)],
        &[("y1", "x1*x2".into()), ("y2", "x1^2".into()), ("z", "x2^3".into())],
    )
}

/// Representatives of the seven dimension-7 homotopy types, with labels as
/// returned by `classify_dim7`.
pub fn dim7_representatives() -> Result<Vec<(String, RationalModel)>> {
    let one = Rational::one();
    Ok(vec![
        ("S^7".into(), sphere_model(7)?),
        ("S^2 x S^5".into(), product(&sphere_model(2)?, &sphere_model(5)?)?),
        ("CP^2 x S^3".into(), product(&cp_model(2)?, &sphere_model(3)?)?),
        ("S^3 x S^4".into(), product(&sphere_model(3)?, &sphere_model(4)?)?),
        ("N^7".into(), n7_model()?),
        ("M_sigma[1]".into(), m_sigma_model(&one)?),
        ("M_sigma[-1]".into(), m_sigma_model(&-one)?),
    ])
}
