use std::sync::Arc;

use proptest::prelude::*;
use ratell_core::catalog::{catalog, product, table_one, EntryData};
use ratell_core::cubic::{form_ring, quadric_ring};
use ratell_core::parse::{parse_model, parse_poly, render_model};
use ratell_core::{
    buchberger, enumerate_exponents, is_regular_sequence, monomial_basis, normal_form, AlgebraElement, CubicForm,
    ExponentPair, GeneratorTable, Matrix, Poly, PolyRing, Rational,
};

fn q(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

fn rationals(len: usize, range: i64) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-range..=range, 1i64..=3), len).prop_map(|v| v.into_iter().map(|(n, d)| Rational::new(n.into(), d.into())).collect())
}

fn invertible(n: usize) -> impl Strategy<Value = Matrix<Rational>> {
    rationals(n * n, 4)
        .prop_map(move |v| Matrix::from_rows(v.chunks(n).map(<[_]>::to_vec).collect()).unwrap())
        .prop_filter("invertible", |m| m.rank() == m.rows())
}

fn homogeneous(ring: &Arc<PolyRing>, d: u32, coeffs: &[Rational]) -> Poly<Rational> {
    let basis = ring.monomials_of_degree(d);
    Poly::from_coordinates(ring, &basis, &coeffs[..basis.len()])
}

fn quadric_triple() -> impl Strategy<Value = Vec<Poly<Rational>>> {
    rationals(18, 3).prop_map(|c| {
        let ring = quadric_ring(3);
        c.chunks(6).map(|ch| homogeneous(&ring, 2, ch)).collect()
    })
}

fn table() -> Arc<GeneratorTable> {
    GeneratorTable::new([("x", 2), ("u", 2), ("y", 3), ("z", 3), ("w", 5)]).unwrap()
}

fn element(t: &Arc<GeneratorTable>, k: u32, coeffs: &[Rational]) -> AlgebraElement<Rational> {
    let basis = monomial_basis(t, k);
    AlgebraElement::from_terms(t, basis.into_iter().zip(coeffs.iter().cloned()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn multiplication_graded_commutative_and_associative(
        (i, j, k) in (2u32..7, 2u32..7, 2u32..6),
        c in rationals(90, 5),
    ) {
        let t = table();
        let a = element(&t, i, &c[..30]);
        let b = element(&t, j, &c[30..60]);
        let e = element(&t, k, &c[60..]);
        let ab = a.multiply(&b).unwrap();
        let ba = b.multiply(&a).unwrap();
        let expected = if (i * j) % 2 == 1 { -ba } else { ba };
        prop_assert_eq!(&ab, &expected);
        prop_assert_eq!(ab.multiply(&e).unwrap(), a.multiply(&b.multiply(&e).unwrap()).unwrap());
        let sum = b.try_add(&e).unwrap_or_else(|_| b.clone());
        if j == k {
            prop_assert_eq!(a.multiply(&sum).unwrap(), ab.try_add(&a.multiply(&e).unwrap()).unwrap());
        }
        prop_assert_eq!(a.multiply(&AlgebraElement::one(&t)).unwrap(), a.clone());
    }

    #[test]
    fn rank_nullity_and_kernel(v in rationals(20, 3), perm in Just((0..5).collect::<Vec<usize>>()).prop_shuffle()) {
        let rows: Vec<Vec<Rational>> = v.chunks(5).map(<[_]>::to_vec).collect();
        let m = Matrix::from_rows(rows.clone()).unwrap();
        let ker = m.kernel_basis();
        prop_assert_eq!(m.rank() + ker.len(), 5);
        for k in &ker {
            prop_assert!(m.mul_vec(k).unwrap().iter().all(|x| *x == q(0)));
        }
        let permuted: Vec<Vec<Rational>> = rows.iter().rev().map(|r| perm.iter().map(|&j| r[j].clone()).collect()).collect();
        prop_assert_eq!(Matrix::from_rows(permuted).unwrap().rank(), m.rank());
    }

    #[test]
    fn groebner_basis_independent_of_input_order(polys in quadric_triple()) {
        let ring = quadric_ring(3);
        let a = buchberger(&ring, &polys).unwrap();
        let rev: Vec<_> = polys.iter().rev().cloned().collect();
        let rot = vec![polys[1].clone(), polys[2].clone(), polys[0].clone()];
        prop_assert_eq!(&buchberger(&ring, &rev).unwrap(), &a);
        prop_assert_eq!(&buchberger(&ring, &rot).unwrap(), &a);
        for p in &polys {
            prop_assert!(normal_form(p, &a).is_zero());
        }
    }

    #[test]
    fn normal_form_idempotent_and_linear(polys in quadric_triple(), c in rationals(20, 4)) {
        let ring = quadric_ring(3);
        let gb = buchberger(&ring, &polys).unwrap();
        let f = homogeneous(&ring, 3, &c[..10]);
        let g = homogeneous(&ring, 3, &c[10..]);
        let nf = normal_form(&f, &gb);
        prop_assert_eq!(normal_form(&nf, &gb), nf.clone());
        let lhs = normal_form(&(&f + &g.scale(&q(3))), &gb);
        let rhs = &nf + &normal_form(&g, &gb).scale(&q(3));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn regular_sequence_matches_finiteness(polys in quadric_triple()) {
        let ring = quadric_ring(3);
        let regular = is_regular_sequence(&polys, &ring).unwrap();
        prop_assert_eq!(regular, buchberger(&ring, &polys).unwrap().is_finite_dimensional());
        let rev: Vec<_> = polys.iter().rev().cloned().collect();
        prop_assert_eq!(is_regular_sequence(&rev, &ring).unwrap(), regular);
    }

    #[test]
    fn regularity_invariant_under_span_change(row in 0usize..14, m in invertible(3)) {
        let rows = table_one();
        let w = rows[row].listed_span().unwrap();
        if w.dim() == 3 {
            let ring = w.ring().clone();
            let b = w.basis();
            let mixed: Vec<Poly<Rational>> = (0..3)
                .map(|i| (0..3).fold(Poly::zero(&ring), |acc, j| &acc + &b[j].scale(m.get(i, j))))
                .collect();
            prop_assert_eq!(is_regular_sequence(&mixed, &ring).unwrap(), is_regular_sequence(b, &ring).unwrap());
            prop_assert_eq!(is_regular_sequence(&mixed, &ring).unwrap(), rows[row].regular);
        }
    }

    #[test]
    fn associated_subspace_equivariant(c in rationals(10, 4), m in invertible(3)) {
        let ring = form_ring(3);
        let f = CubicForm::form_of_polynomial(&homogeneous(&ring, 3, &c)).unwrap();
        let g = f.substitute(&m).unwrap();
        let inv_t = m.inverse().unwrap().transpose();
        prop_assert_eq!(g.associated_subspace().unwrap(), f.associated_subspace().unwrap().substitute(&inv_t).unwrap());
    }

    #[test]
    fn elliptic_verdict_invariant(c in rationals(10, 3), m in invertible(3), s in 1i64..5) {
        let ring = form_ring(3);
        let f = CubicForm::form_of_polynomial(&homogeneous(&ring, 3, &c)).unwrap();
        let v = f.is_elliptic_form(3).unwrap().elliptic;
        prop_assert_eq!(f.substitute(&m).unwrap().is_elliptic_form(3).unwrap().elliptic, v);
        prop_assert_eq!(f.scale(&q(-s)).is_elliptic_form(3).unwrap().elliptic, v);
    }

    #[test]
    fn binary_class_invariant(c in rationals(4, 4), m in invertible(2), s in 1i64..5) {
        let ring = form_ring(2);
        let f = CubicForm::form_of_polynomial(&homogeneous(&ring, 3, &c)).unwrap();
        let class = f.binary_classify().unwrap();
        prop_assert_eq!(f.substitute(&m).unwrap().binary_classify().unwrap(), class);
        prop_assert_eq!(f.scale(&q(-s)).binary_classify().unwrap(), class);
    }

    #[test]
    fn hesse_parameter_recovered(n in -20i64..20, d in 1i64..7) {
        let s = Rational::new(n.into(), d.into());
        prop_assume!(s != Rational::new((-1).into(), 2.into()) && s != q(1));
        let f = CubicForm::hesse(s.clone());
        prop_assume!(!f.is_singular_ternary().unwrap());
        let cands = f.hesse_sigma_candidates(1e-9).unwrap();
        prop_assert!(cands.iter().any(|r| r.contains(&s)), "{} not in {:?}", s, cands);
    }

    #[test]
    fn exponent_permutations_preserve_sac(n in 2u32..10, pick in 0usize..13) {
        let all = enumerate_exponents(n).unwrap();
        prop_assume!(!all.is_empty());
        let e = &all[pick % all.len()];
        let mut a = e.a().to_vec();
        let mut b = e.b().to_vec();
        a.reverse();
        b.reverse();
        let permuted = ExponentPair::new(a, b).unwrap();
        prop_assert_eq!(ratell_core::check_sac(&permuted), true);
        prop_assert!(e.q() <= e.r());
        prop_assert_eq!(ratell_core::formal_dimension_from_exponents(e), n as i64);
    }

    #[test]
    fn polynomial_print_parse_round_trip(c in rationals(10, 9)) {
        let ring = form_ring(3);
        let p = homogeneous(&ring, 3, &c);
        prop_assert_eq!(parse_poly(&p.to_string(), &ring).unwrap(), p);
    }
}

#[test]
fn exponent_products_closed() {
    let lists: Vec<Vec<ExponentPair>> = (0..=9).map(|n| if n == 0 { vec![] } else { enumerate_exponents(n).unwrap() }).collect();
    for n1 in 2..=7 {
        for n2 in 2..=(9 - n1) {
            for e1 in &lists[n1] {
                for e2 in &lists[n2] {
                    assert!(lists[n1 + n2].contains(&e1.concat(e2)), "{e1} + {e2}");
                }
            }
        }
    }
}

#[test]
fn catalog_models_round_trip_through_files() {
    for e in catalog().unwrap() {
        if let EntryData::Model(m) = &e.data {
            let text = render_model(m);
            let back = parse_model(&text).unwrap();
            assert_eq!(&back, m, "{}", e.name);
            assert_eq!(render_model(&back), text);
        }
    }
}

fn models() -> Vec<(String, ratell_core::RationalModel)> {
    catalog()
        .unwrap()
        .into_iter()
        .filter_map(|e| match e.data {
            EntryData::Model(m) if e.expected.elliptic != Some(false) => Some((e.name, m)),
            _ => None,
        })
        .collect()
}

#[test]
fn catalog_models_satisfy_duality_window() {
    for (name, m) in models() {
        let n = ratell_core::formal_dimension_from_exponents(&ratell_core::exponents_of_model(&m)) as u32;
        let r = m.cohomology_betti(n + 7);
        assert!(r.poincare_symmetric, "{name}: {:?}", r.betti);
        assert!(r.betti[n as usize + 1..].iter().all(|&b| b == 0), "{name}");
        let e = ratell_core::exponents_of_model(&m);
        let chi = r.euler_characteristic();
        assert!(chi >= 0, "{name}");
        assert_eq!(chi > 0, e.q() == e.r(), "{name}");
    }
}

#[test]
fn kunneth_on_catalog_products() {
    let ms = models();
    let small: Vec<_> = ms.iter().filter(|(_, m)| m.table().len() <= 4).collect();
    let mut count = 0;
    for (i, (n1, m1)) in small.iter().enumerate() {
        for (n2, m2) in small.iter().skip(i).step_by(3) {
            if count == 10 {
                return;
            }
            let d1 = ratell_core::formal_dimension_from_exponents(&ratell_core::exponents_of_model(m1)) as u32;
            let d2 = ratell_core::formal_dimension_from_exponents(&ratell_core::exponents_of_model(m2)) as u32;
            if d1 + d2 > 14 {
                continue;
            }
            let top = d1 + d2 + 1;
            let p = product(m1, m2).unwrap().cohomology_betti(top).betti;
            let b1 = m1.cohomology_betti(top).betti;
            let b2 = m2.cohomology_betti(top).betti;
            let conv: Vec<usize> = (0..=top as usize).map(|k| (0..=k).map(|j| b1[j] * b2[k - j]).sum()).collect();
            assert_eq!(p, conv, "{n1} x {n2}");
            count += 1;
        }
    }
    assert_eq!(count, 10);
}

#[test]
fn pure_ellipticity_matches_regular_sequences() {
    for (name, m) in models() {
        let e = ratell_core::exponents_of_model(&m);
        if m.is_pure() && e.q() == e.r() {
            let (ring, images) = m.odd_images().unwrap();
            assert_eq!(m.pure_is_elliptic().unwrap(), is_regular_sequence(&images, &ring).unwrap(), "{name}");
        }
    }
}
