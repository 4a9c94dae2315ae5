//! Randomized property suites. These run independently of the expected-value
//! fixture and of any particular arrangement.

use proptest::prelude::*;

use eightplanes::ideal::{buchberger, normal_form, Ideal};
use eightplanes::lie::{
    decompose_character, sym2_character, tensor_character, wedge2_character, weight_system,
    AlgebraType, Series,
};
use eightplanes::plethysm::{hodge_vector_factorizations, HodgeVector};
use eightplanes::poly::{Exponent, MonomialOrder, Polynomial};
use eightplanes::rational::{rat_int, Rational};

fn exponent(nvars: usize, max: u32) -> impl Strategy<Value = Exponent> {
    prop::collection::vec(0..=max, nvars).prop_map(Exponent::new)
}

fn polynomial(nvars: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((exponent(nvars, 3), -5i64..=5), 1..6).prop_map(move |terms| {
        let mut p = Polynomial::zero(nvars);
        for (e, c) in terms {
            p.add_term(e, rat_int(c));
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // ------------------------------------------------------------------
    // Monomial order axioms

    #[test]
    fn order_is_total_and_antisymmetric(a in exponent(4, 6), b in exponent(4, 6)) {
        let ord = MonomialOrder::graded_lex(4);
        let ab = ord.cmp_unchecked(&a, &b);
        let ba = ord.cmp_unchecked(&b, &a);
        prop_assert_eq!(ab, ba.reverse());
        prop_assert_eq!(ab == std::cmp::Ordering::Equal, a == b);
    }

    #[test]
    fn order_is_multiplicative(
        a in exponent(4, 6),
        b in exponent(4, 6),
        c in exponent(4, 6),
    ) {
        let ord = MonomialOrder::graded_lex(4);
        prop_assert_eq!(ord.cmp_unchecked(&a, &b), ord.cmp_unchecked(&a.mul(&c), &b.mul(&c)));
    }

    #[test]
    fn order_refines_total_degree(a in exponent(4, 6), b in exponent(4, 6)) {
        let ord = MonomialOrder::graded_lex(4);
        if a.total_degree() < b.total_degree() {
            prop_assert_eq!(ord.cmp_unchecked(&a, &b), std::cmp::Ordering::Less);
        }
    }

    // ------------------------------------------------------------------
    // Normal form: idempotence and linearity

    #[test]
    fn normal_form_idempotent_and_linear(
        f in polynomial(3),
        g in polynomial(3),
        s in -4i64..=4,
    ) {
        let gens = vec![
            eightplanes::poly::parse_polynomial("v1^2 + v2^2", 3).unwrap(),
            eightplanes::poly::parse_polynomial("v1*v2 + v3^2", 3).unwrap(),
        ];
        let ideal = Ideal::new(3, gens).unwrap();
        let gb = buchberger(&ideal, &MonomialOrder::graded_lex(3)).unwrap();

        let nf_f = normal_form(&f, &gb);
        prop_assert_eq!(&normal_form(&nf_f, &gb), &nf_f);

        let nf_g = normal_form(&g, &gb);
        let combo = f.add(&g.scale(&rat_int(s)));
        let lhs = normal_form(&combo, &gb);
        let rhs = nf_f.add(&nf_g.scale(&rat_int(s)));
        prop_assert_eq!(lhs, rhs);
    }

    // ------------------------------------------------------------------
    // Character-level conservation laws

    #[test]
    fn character_mass_equals_dimension(a in 0i64..4, b in 0i64..4) {
        let alg = AlgebraType::simple(Series::C, 2).unwrap();
        let dim = alg.weyl_dim(&[a, b]).unwrap();
        prop_assume!(dim <= eightplanes::lie::DIM_CAP);
        let ch = weight_system(&alg, &[a, b]).unwrap();
        prop_assert_eq!(u128::from(ch.mass()), dim);
        prop_assert!(ch.is_weyl_invariant());

        let n = u64::from(ch.mass());
        prop_assert_eq!(u64::from(sym2_character(&ch).mass()), n * (n + 1) / 2);
        prop_assert_eq!(u64::from(wedge2_character(&ch).mass()), n * (n - 1) / 2);
    }

    #[test]
    fn tensor_mass_is_multiplicative(a in 0i64..3, b in 0i64..3, c in 0i64..3) {
        let alg = AlgebraType::simple(Series::A, 2).unwrap();
        let d1 = alg.weyl_dim(&[a, b]).unwrap();
        let d2 = alg.weyl_dim(&[b, c]).unwrap();
        prop_assume!(d1 * d2 <= eightplanes::lie::DIM_CAP);
        let c1 = weight_system(&alg, &[a, b]).unwrap();
        let c2 = weight_system(&alg, &[b, c]).unwrap();
        let t = tensor_character(&c1, &c2).unwrap();
        prop_assert_eq!(u128::from(t.mass()), d1 * d2);
    }

    // ------------------------------------------------------------------
    // Decomposition round-trip: rebuilding from components gives back the
    // original character, weight for weight.

    #[test]
    fn decomposition_round_trip(a in 0i64..3, b in 0i64..3, c in 0i64..3) {
        let alg = AlgebraType::simple(Series::A, 2).unwrap();
        let d1 = alg.weyl_dim(&[a, b]).unwrap();
        let d2 = alg.weyl_dim(&[b, c]).unwrap();
        prop_assume!(d1 * d2 <= eightplanes::lie::DIM_CAP);
        let t = tensor_character(
            &weight_system(&alg, &[a, b]).unwrap(),
            &weight_system(&alg, &[b, c]).unwrap(),
        ).unwrap();
        let comps = decompose_character(&t).unwrap();
        let mut rebuilt = std::collections::BTreeMap::new();
        for comp in &comps {
            let ch = weight_system(&alg, &comp.highest_weight).unwrap();
            for (w, m) in &ch.weights {
                *rebuilt.entry(w.clone()).or_insert(0u64) += m * comp.multiplicity;
            }
        }
        prop_assert_eq!(rebuilt, t.weights.clone());
    }

    // ------------------------------------------------------------------
    // Hodge-vector factorization: soundness (every returned pair multiplies
    // back) and completeness on constructed products.

    #[test]
    fn factorizations_multiply_back(v in prop::collection::vec(1u64..5, 1..4)) {
        let mut h = vec![1u64];
        h.extend(v);
        let hv = HodgeVector(h.clone());
        for (a, b) in hodge_vector_factorizations(&hv).unwrap() {
            let mut prod = vec![0u64; a.0.len() + b.0.len() - 1];
            for (i, x) in a.0.iter().enumerate() {
                for (j, y) in b.0.iter().enumerate() {
                    prod[i + j] += x * y;
                }
            }
            prop_assert_eq!(&prod, &h);
        }
    }

    #[test]
    fn constructed_products_are_found(
        a in prop::collection::vec(1u64..4, 1..3),
        b in prop::collection::vec(1u64..4, 1..3),
    ) {
        let mut fa = vec![1u64];
        fa.extend(a);
        let mut fb = vec![1u64];
        fb.extend(b);
        let mut prod = vec![0u64; fa.len() + fb.len() - 1];
        for (i, x) in fa.iter().enumerate() {
            for (j, y) in fb.iter().enumerate() {
                prod[i + j] += x * y;
            }
        }
        let found = hodge_vector_factorizations(&HodgeVector(prod)).unwrap();
        prop_assert!(found.iter().any(|(p, q)|
            (p.0 == fa && q.0 == fb) || (p.0 == fb && q.0 == fa)));
    }
}

// ----------------------------------------------------------------------
// Deterministic cross-checks that belong with the property suites

#[test]
fn rational_matrix_rank_bounds() {
    use eightplanes::matrix::RationalMatrix;
    let m = RationalMatrix::from_i64(&[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]).unwrap();
    assert_eq!(m.rank(), 2);
    let zero: Vec<Rational> = vec![rat_int(0); 3];
    let _ = zero;
    assert_eq!(m.transpose().rank(), 2);
}
