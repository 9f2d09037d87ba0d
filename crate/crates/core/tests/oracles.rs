//! Independent reference implementations checked against the library.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ratell_core::catalog::{catalog, listed_exponents, EntryData};
use ratell_core::cubic::quadric_ring;
use ratell_core::{
    buchberger, enumerate_exponents, is_regular_sequence, monomial_basis, ExponentPair, Matrix, Poly, PolyRing, Rational,
};

/// All nonnegative integer vectors `g` with Σ g_i p_i = target.
fn combinations(parts: &[u32], target: u32) -> Vec<Vec<u32>> {
    if parts.is_empty() {
        return if target == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for k in 0..=target / parts[0] {
        for mut rest in combinations(&parts[1..], target - k * parts[0]) {
            rest.insert(0, k);
            out.push(rest);
        }
    }
    out
}

fn brute_sac(a: &[u32], b: &[u32]) -> bool {
    let q = a.len();
    (1u32..1 << q).all(|mask| {
        let parts: Vec<u32> = (0..q).filter(|i| mask & (1 << i) != 0).map(|i| a[i]).collect();
        let hits = b.iter().filter(|&&bj| combinations(&parts, bj).iter().any(|g| g.iter().sum::<u32>() >= 2)).count();
        hits >= parts.len()
    })
}

fn nondecreasing(len: usize, lo: u32, hi: u32) -> Vec<Vec<u32>> {
    if len == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in lo..=hi {
        for mut rest in nondecreasing(len - 1, first, hi) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Scans every (a, b) with 2Σa ≤ n and Σ(2b − 1) < 2n directly; each
/// odd exponent contributes at least 3 to the latter sum.
fn brute_exponents(n: u32) -> Vec<ExponentPair> {
    let mut out = Vec::new();
    for q in 0..=(n / 2) as usize {
        for a in nondecreasing(q, 1, n / 2) {
            if 2 * a.iter().sum::<u32>() > n {
                continue;
            }
            for r in q..=((2 * n - 1) / 3) as usize {
                for b in nondecreasing(r, 2, n) {
                    let odd: u32 = b.iter().map(|v| 2 * v - 1).sum();
                    if odd >= 2 * n {
                        continue;
                    }
                    let dim = 2 * (b.iter().sum::<u32>() as i64 - a.iter().sum::<u32>() as i64) - (r as i64 - q as i64);
                    if dim == n as i64 && brute_sac(&a, &b) {
                        out.push(ExponentPair::new(a.clone(), b).unwrap());
                    }
                }
            }
        }
    }
    out.sort();
    out
}

#[test]
fn exponents_match_brute_force() {
    let counts: Vec<usize> = (2..=5).map(|n| brute_exponents(n).len()).collect();
    assert_eq!(counts, vec![1, 1, 3, 2]);
    for n in 2..=9 {
        assert_eq!(enumerate_exponents(n).unwrap(), brute_exponents(n), "dimension {n}");
    }
    for n in 6..=9 {
        assert_eq!(brute_exponents(n), listed_exponents(n));
    }
}

/// Coefficients of Π_even 1/(1 − t^d) · Π_odd (1 + t^d) through `max`.
fn free_algebra_series(degrees: &[u32], max: usize) -> Vec<usize> {
    let mut s = vec![0usize; max + 1];
    s[0] = 1;
    for &d in degrees {
        let d = d as usize;
        if d.is_multiple_of(2) {
            for k in d..=max {
                s[k] += s[k - d];
            }
        } else {
            for k in (d..=max).rev() {
                s[k] += s[k - d];
            }
        }
    }
    s
}

#[test]
fn monomial_bases_follow_hilbert_series() {
    for e in catalog().unwrap() {
        if let EntryData::Model(m) = &e.data {
            let t = m.table();
            let degrees: Vec<u32> = t.iter().map(|(_, d)| d).collect();
            let series = free_algebra_series(&degrees, 20);
            for (k, &want) in series.iter().enumerate() {
                assert_eq!(monomial_basis(t, k as u32).len(), want, "{} degree {k}", e.name);
            }
        }
    }
}

/// Coefficients of Π(1 − t^{d_i}) / (1 − t)^n through `max`.
fn complete_intersection_series(n: usize, degrees: &[u32], max: usize) -> Vec<i64> {
    let mut s = vec![0i64; max + 1];
    s[0] = 1;
    for &d in degrees {
        for k in (d as usize..=max).rev() {
            s[k] -= s[k - d as usize];
        }
    }
    for _ in 0..n {
        for k in 1..=max {
            s[k] += s[k - 1];
        }
    }
    s
}

fn coords(p: &Poly<Rational>, basis: &[ratell_core::Mono]) -> Vec<Rational> {
    p.coordinates(basis).expect("homogeneous of the basis degree")
}

fn span_rank(vectors: &[Vec<Rational>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    Matrix::from_rows(vectors.to_vec()).unwrap().rank()
}

/// Degree-d part of the ideal generated by `gens`, as coordinate vectors.
fn ideal_part(ring: &Arc<PolyRing>, gens: &[Poly<Rational>], d: u32) -> Vec<Vec<Rational>> {
    let basis = ring.monomials_of_degree(d);
    let mut out = Vec::new();
    for g in gens {
        let e = g.homogeneous_degree().unwrap();
        if e > d {
            continue;
        }
        for m in ring.monomials_of_degree(d - e) {
            let p = &Poly::monomial(ring, m.exponents().to_vec(), Rational::from_integer(1.into())) * g;
            out.push(coords(&p, &basis));
        }
    }
    out
}

/// Each f_i is a nonzerodivisor modulo (f_1..f_{i−1}) in all degrees ≤ `max`.
fn colon_oracle(ring: &Arc<PolyRing>, seq: &[Poly<Rational>], max: u32) -> bool {
    for i in 0..seq.len() {
        let prev = &seq[..i];
        let f = &seq[i];
        let e = f.homogeneous_degree().unwrap();
        for d in e..=max {
            let basis_d = ring.monomials_of_degree(d);
            let lower = ring.monomials_of_degree(d - e);
            let id = ideal_part(ring, prev, d);
            let id_lower = span_rank(&ideal_part(ring, prev, d - e));
            let r_id = span_rank(&id);
            let mut with = id.clone();
            for m in &lower {
                let p = &Poly::monomial(ring, m.exponents().to_vec(), Rational::from_integer(1.into())) * f;
                with.push(coords(&p, &basis_d));
            }
            let image = span_rank(&with) - r_id;
            // dim {g : g f ∈ I} must equal dim I in degree d − e
            if lower.len() - image != id_lower {
                return false;
            }
        }
    }
    true
}

fn random_form(ring: &Arc<PolyRing>, d: u32, r: &mut ChaCha8Rng, sparse: bool) -> Poly<Rational> {
    let basis = ring.monomials_of_degree(d);
    let c: Vec<Rational> = basis
        .iter()
        .map(|_| if sparse && r.gen_bool(0.6) { 0 } else { r.gen_range(-3..=3) })
        .map(|v: i64| Rational::from_integer(v.into()))
        .collect();
    Poly::from_coordinates(ring, &basis, &c)
}

#[test]
fn regular_sequences_match_colon_oracle() {
    let mut r = ChaCha8Rng::seed_from_u64(21);
    let ring = PolyRing::new(["a", "b", "c", "d"]).unwrap();
    let mut seen = [0, 0];
    for _ in 0..40 {
        let k = r.gen_range(1..=3);
        let seq: Vec<Poly<Rational>> = (0..k).map(|_| random_form(&ring, r.gen_range(1..=2), &mut r, true)).collect();
        if seq.iter().any(|p| p.is_zero()) {
            continue;
        }
        let got = is_regular_sequence(&seq, &ring).unwrap();
        assert_eq!(got, colon_oracle(&ring, &seq, 5), "{seq:?}");
        seen[got as usize] += 1;
    }
    assert!(seen[0] > 0 && seen[1] > 0, "{seen:?}");
}

#[test]
fn regular_sequence_hilbert_functions() {
    let mut r = ChaCha8Rng::seed_from_u64(8);
    let ring = quadric_ring(3);
    let mut checked = 0;
    while checked < 10 {
        let degrees = [r.gen_range(1..=3), r.gen_range(1..=3), r.gen_range(1..=3)];
        let seq: Vec<Poly<Rational>> = degrees.iter().map(|&d| random_form(&ring, d, &mut r, false)).collect();
        if !is_regular_sequence(&seq, &ring).unwrap() {
            continue;
        }
        let hf = buchberger(&ring, &seq).unwrap().hilbert_function(12);
        let want = complete_intersection_series(3, &degrees, 12);
        assert_eq!(hf.iter().map(|&v| v as i64).collect::<Vec<_>>(), want, "{degrees:?}");
        checked += 1;
    }
}

#[test]
fn table_rows_regular_iff_finite_quotient() {
    for row in ratell_core::catalog::table_one() {
        let w = row.listed_span().unwrap();
        let gb = buchberger(w.ring(), w.basis()).unwrap();
        assert_eq!(is_regular_sequence(w.basis(), w.ring()).unwrap(), row.regular, "{}", row.name);
        if w.dim() == 3 {
            assert_eq!(gb.is_finite_dimensional(), row.regular, "{}", row.name);
        }
    }
}
