//! Classification of minimal models by exponents in dimensions 7, 8 and 9.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exponents::{exponents_of_model, ExponentPair};
use crate::RationalModel;

use super::rings::{model_quadric_relations, square_zero_profile};

/// Result of a classifier.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub enum Label {
    /// A single rational homotopy type.
    Named(String),
    /// Member of a family indexed by a square class, e.g. `M_sigma[2]`.
    Family {
        family: String,
        #[serde(serialize_with = "as_string")]
        class: BigInt,
    },
    /// Middle pairing class outside the manifold cases.
    PairingClass(#[serde(serialize_with = "as_string")] BigInt),
    NotElliptic,
    /// No complete classification; a description of what was computed.
    Open(String),
}

fn as_string<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

impl Label {
    fn named(s: &str) -> Self {
        Label::Named(s.into())
    }

    fn family(family: &str, class: BigInt) -> Self {
        Label::Family { family: family.into(), class }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Named(s) => write!(f, "{s}"),
            Label::Family { family, class } => write!(f, "{family}[{class}]"),
            Label::PairingClass(c) => write!(f, "pairing class [{c}]"),
            Label::NotElliptic => write!(f, "not elliptic"),
            Label::Open(s) => write!(f, "{s}"),
        }
    }
}

fn exps(a: &[u32], b: &[u32]) -> ExponentPair {
    ExponentPair::new(a.to_vec(), b.to_vec()).expect("fixed exponents")
}

/// Pure models with infinite cohomology are not elliptic; others pass.
fn elliptic_or_unknown(m: &RationalModel) -> Result<bool> {
    if m.is_pure() {
        m.pure_is_elliptic()
    } else {
        Ok(true)
    }
}

fn check_exponents(m: &RationalModel, want: &ExponentPair) -> Result<()> {
    let e = exponents_of_model(m);
    if &e != want {
        return Err(Error::Precondition(format!("exponents {e} differ from {want}")));
    }
    Ok(())
}

/// Square class of the pairing on the two degree-`k` generators, or `None`
/// when it is degenerate.
fn pairing_class(m: &RationalModel, k: u32, products_only: bool) -> Result<Option<BigInt>> {
    let det = if products_only { m.product_pairing_determinant(k)? } else { m.pairing_determinant(k)? };
    if det.is_zero() {
        return Ok(None);
    }
    Ok(Some(crate::cubic::squarefree_part(&det)?))
}

pub fn classify_dim7(m: &RationalModel) -> Result<Label> {
    m.validate()?;
    let e = exponents_of_model(m);
    if !elliptic_or_unknown(m)? {
        return Ok(Label::NotElliptic);
    }
    if e == exps(&[], &[4]) {
        return Ok(Label::named("S^7"));
    }
    if e == exps(&[1], &[2, 3]) {
        // b4 separates the two types; b2 is 1 for both
        let b4 = m.cohomology_group(4).dimension();
        return Ok(Label::named(if b4 == 0 { "S^2 x S^5" } else { "CP^2 x S^3" }));
    }
    if e == exps(&[2], &[2, 4]) {
        return Ok(Label::named("S^3 x S^4"));
    }
    if e == exps(&[1, 1], &[2, 2, 2]) {
        return Ok(match m.generator_rank(3) {
            0 | 1 => Label::NotElliptic,
            3 => Label::named("N^7"),
            _ => match pairing_class(m, 2, false)? {
                Some(c) => Label::family("M_sigma", c),
                None => Label::NotElliptic,
            },
        });
    }
    Err(Error::Precondition(format!("exponents {e} are not among the dimension-7 exponents")))
}

/// Exponents a=(2,2), b=(4,4): the square class of the pairing on H^4
/// separates S^4 x S^4 ([-1]) from HP^2 # HP^2 ([1]).
pub fn classify_dim8_middle_pairing(m: &RationalModel) -> Result<Label> {
    m.validate()?;
    check_exponents(m, &exps(&[2, 2], &[4, 4]))?;
    if m.generator_rank(7) < 2 || !elliptic_or_unknown(m)? {
        return Ok(Label::NotElliptic);
    }
    Ok(match pairing_class(m, 4, false)? {
        None => Label::NotElliptic,
        Some(c) if c.is_one() => Label::named("HP^2 # HP^2"),
        Some(c) if c == -BigInt::one() => Label::named("S^4 x S^4"),
        Some(c) => Label::PairingClass(c),
    })
}

/// Exponents a=(1,1,2), b=(2,2,4): the family X_sigma x S^4.
pub fn classify_x_sigma_s4(m: &RationalModel) -> Result<Label> {
    m.validate()?;
    check_exponents(m, &exps(&[1, 1, 2], &[2, 2, 4]))?;
    if m.generator_rank(3) < 2 || !elliptic_or_unknown(m)? {
        return Ok(Label::NotElliptic);
    }
    Ok(match pairing_class(m, 2, true)? {
        Some(c) => Label::family("X_sigma x S^4", c),
        None => Label::NotElliptic,
    })
}

/// Exponents a=(1,1), b=(2,2,3).
pub fn classify_dim9_two_even(m: &RationalModel) -> Result<Label> {
    m.validate()?;
    check_exponents(m, &exps(&[1, 1], &[2, 2, 3]))?;
    if !elliptic_or_unknown(m)? {
        return Ok(Label::NotElliptic);
    }
    if m.generator_rank(3) < 2 {
        return Ok(Label::named("M^6 x S^3"));
    }
    Ok(match pairing_class(m, 2, false)? {
        Some(c) => Label::family("X_sigma x S^5", c),
        None => Label::named("N^9"),
    })
}

/// Dispatch on the exponents of a dimension-8 model.
pub fn classify_dim8(m: &RationalModel) -> Result<Label> {
    m.validate()?;
    let e = exponents_of_model(m);
    if e == exps(&[2, 2], &[4, 4]) {
        return classify_dim8_middle_pairing(m);
    }
    if e == exps(&[1, 1, 2], &[2, 2, 4]) {
        return classify_x_sigma_s4(m);
    }
    if !elliptic_or_unknown(m)? {
        return Ok(Label::NotElliptic);
    }
    let fixed: [(&[u32], &[u32], &str); 7] = [
        (&[], &[2, 3], "S^3 x S^5"),
        (&[1], &[5], "CP^4"),
        (&[2], &[6], "HP^2"),
        (&[4], &[8], "S^8"),
        (&[1], &[2, 2, 2], "S^2 x S^3 x S^3"),
        (&[1, 2], &[3, 4], "CP^2 x S^4"),
        (&[1, 3], &[2, 6], "S^2 x S^6"),
    ];
    for (a, b, name) in fixed {
        if e == exps(a, b) {
            return Ok(Label::named(name));
        }
    }
    let open: [(&[u32], &[u32]); 4] = [(&[1, 1], &[2, 4]), (&[1, 1], &[3, 3]), (&[1, 1, 1], &[2, 2, 3]), (&[1, 1, 1, 1], &[2, 2, 2, 2])];
    if open.iter().any(|(a, b)| e == exps(a, b)) {
        return Ok(Label::Open(format!("exponents {e}: no finite list of types")));
    }
    Err(Error::Precondition(format!("exponents {e} are not among the dimension-8 exponents")))
}

/// Dispatch on the exponents of a dimension-9 model.
pub fn classify_dim9(m: &RationalModel) -> Result<Label> {
    m.validate()?;
    let e = exponents_of_model(m);
    if e == exps(&[1, 1], &[2, 2, 3]) {
        return classify_dim9_two_even(m);
    }
    if !elliptic_or_unknown(m)? {
        return Ok(Label::NotElliptic);
    }
    if e == exps(&[1], &[2, 4]) {
        let b4 = m.cohomology_group(4).dimension();
        return Ok(Label::named(if b4 == 0 { "S^2 x S^7" } else { "S^3 x CP^3" }));
    }
    let fixed: [(&[u32], &[u32], &str); 6] = [
        (&[], &[5], "S^9"),
        (&[], &[2, 2, 2], "S^3 x S^3 x S^3"),
        (&[1], &[3, 3], "S^5 x CP^2"),
        (&[2], &[3, 4], "S^4 x S^5"),
        (&[3], &[2, 6], "S^3 x S^6"),
        (&[1, 2], &[2, 2, 4], "S^2 x S^3 x S^4"),
    ];
    for (a, b, name) in fixed {
        if e == exps(a, b) {
            return Ok(Label::named(name));
        }
    }
    if e == exps(&[1, 1, 1], &[2, 2, 2, 2]) {
        let rel = model_quadric_relations(m)?;
        let (dim, deg) = square_zero_profile(&rel)?;
        return Ok(Label::Open(format!("square-zero locus in H^2 of dimension {dim} and degree {deg}")));
    }
    Err(Error::Precondition(format!("exponents {e} are not among the dimension-9 exponents")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::models::*;
    use crate::scalar::{q, qf};

    #[test]
    fn dimension_seven_labels() {
        for (label, m) in dim7_representatives().unwrap() {
            assert_eq!(classify_dim7(&m).unwrap().to_string(), label);
        }
        assert_eq!(classify_dim7(&m_sigma_model(&q(8)).unwrap()).unwrap().to_string(), "M_sigma[2]");
        assert_eq!(classify_dim7(&m_sigma_model(&qf(1, 2)).unwrap()).unwrap().to_string(), "M_sigma[2]");
        let rank_one = model_from_text(
            &[("x1", 2), ("x2", 2), ("y1", 3), ("y2", 3), ("y3", 3)],
            &[("y1", "x1^2".into())],
        )
        .unwrap();
        assert_eq!(classify_dim7(&rank_one).unwrap(), Label::NotElliptic);
        assert!(classify_dim7(&sphere_model(5).unwrap()).is_err());
    }

    #[test]
    fn middle_pairing() {
        let lab = |e: i64| classify_dim8_middle_pairing(&quaternionic_pair_model(&q(e)).unwrap()).unwrap().to_string();
        assert_eq!(lab(1), "HP^2 # HP^2");
        assert_eq!(lab(-1), "S^4 x S^4");
        assert_eq!(lab(2), "pairing class [2]");
        assert_eq!(lab(4), "HP^2 # HP^2");
    }

    #[test]
    fn x_sigma_times_s4() {
        let m = x_sigma_s4_model(&q(12)).unwrap();
        assert_eq!(classify_x_sigma_s4(&m).unwrap(), Label::family("X_sigma x S^4", BigInt::from(3)));
        assert_eq!(classify_x_sigma_s4(&x_sigma_s4_variant(&q(0)).unwrap()).unwrap(), Label::NotElliptic);
        assert_eq!(classify_dim8(&m).unwrap().to_string(), "X_sigma x S^4[3]");
    }

    #[test]
    fn dimension_nine_two_even() {
        assert_eq!(classify_dim9(&n9_model().unwrap()).unwrap().to_string(), "N^9");
        let xs5 = product(&x_sigma_model(&q(-2)).unwrap(), &sphere_model(5).unwrap()).unwrap();
        assert_eq!(classify_dim9(&xs5).unwrap().to_string(), "X_sigma x S^5[-2]");
        let m6 = product(&product(&cp_model(2).unwrap(), &sphere_model(2).unwrap()).unwrap(), &sphere_model(3).unwrap())
            .unwrap();
        assert_eq!(classify_dim9(&m6).unwrap().to_string(), "M^6 x S^3");
    }
}
