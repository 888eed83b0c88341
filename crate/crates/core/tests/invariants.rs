use esd_core::edgewise::{esd_complex, esd_simplex};
use esd_core::smirnov::{
    enumerate_words, hop_class, local_h_via_operator, local_h_via_transfer_matrix,
    local_h_via_words, xi_coefficients, XiMethod,
};
use esd_core::triangulation::TriangulationJson;
use esd_core::{Face, IntPolynomial, SimplicialComplex, SmirnovWord};
use proptest::prelude::*;

fn random_word(n: usize, r: u32, seed: &[u32]) -> Option<SmirnovWord> {
    let mut w = vec![0u32];
    for i in 1..n {
        let prev = w[i - 1];
        let choices: Vec<u32> = (0..r)
            .filter(|&a| a != prev && (i + 1 < n || a != 0))
            .collect();
        if choices.is_empty() {
            return None;
        }
        w.push(choices[seed[i] as usize % choices.len()]);
    }
    w.push(0);
    SmirnovWord::new(w, r).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn four_routes_to_local_h(n in 1usize..=5, r in 1usize..=5) {
        let definitional = esd_simplex(n, r).unwrap().local_h();
        prop_assert_eq!(&definitional, &local_h_via_operator(n, r).unwrap());
        prop_assert_eq!(&definitional, &local_h_via_words(n, r).unwrap());
        prop_assert_eq!(&definitional, &local_h_via_transfer_matrix(n, r).unwrap());
        prop_assert_eq!(&definitional, &xi_coefficients(n, r, XiMethod::Words).unwrap().expand());
    }

    #[test]
    fn local_h_is_symmetric_nonnegative_and_low_degree(n in 1usize..=6, r in 1usize..=4) {
        let ell = esd_simplex(n, r).unwrap().local_h();
        prop_assert!(ell.is_palindromic(n));
        prop_assert!(ell.coeffs().iter().all(|c| c >= &0.into()));
        prop_assert!(ell.degree().is_none_or(|d| d < n));
    }

    #[test]
    fn cones_have_zero_local_h(n in 1usize..=4, r in 1usize..=4) {
        let t = esd_simplex(n, r).unwrap();
        prop_assert!(t.cone(n).unwrap().local_h().is_zero());
    }

    #[test]
    fn hopping_involution(n in 2usize..=10, r in 2u32..=5, seed in prop::collection::vec(any::<u32>(), 10)) {
        let Some(w) = random_word(n, r, &seed) else { return Ok(()); };
        for k in 1..n {
            if w.is_double_descent(k) {
                if let Some(v) = w.left_match(k).unwrap() {
                    let back = (1..n).any(|j| v.is_double_ascent(j) && v.right_match(j).unwrap().as_ref() == Some(&w));
                    prop_assert!(back, "{} -> {}", w, v);
                }
            }
            if w.is_double_ascent(k) {
                if let Some(v) = w.right_match(k).unwrap() {
                    let back = (1..n).any(|j| v.is_double_descent(j) && v.left_match(j).unwrap().as_ref() == Some(&w));
                    prop_assert!(back, "{} -> {}", w, v);
                }
            }
        }
        let class = hop_class(&w).unwrap();
        prop_assert_eq!(class.len(), 1 << class.m);
        prop_assert_eq!(class.polynomial(), class.closed_form());
        prop_assert!(class.members.contains(&w));
    }

    #[test]
    fn lifted_interior_vertices(n in 1usize..=3, r in 1usize..=4, pick in any::<usize>()) {
        let t = esd_simplex(n, r).unwrap();
        let interior: Vec<_> = t.interior_vertices().into_iter().collect();
        if interior.is_empty() {
            return Ok(());
        }
        let p = interior[pick % interior.len()];
        let lifted = t.lift_interior_vertex(p).unwrap();
        prop_assert_eq!(lifted.local_h(), t.lifted_link_h(p).unwrap());
        prop_assert!(lifted.complex().is_flag());
        prop_assert_eq!(lifted.n(), n + 1);
    }

    #[test]
    fn triangulation_json_round_trip(n in 1usize..=4, r in 1usize..=3) {
        let t = esd_simplex(n, r).unwrap();
        let text = serde_json::to_string(&TriangulationJson::from_triangulation(&t)).unwrap();
        let back = serde_json::from_str::<TriangulationJson>(&text).unwrap().to_triangulation().unwrap();
        prop_assert_eq!(back.local_h(), t.local_h());
        prop_assert_eq!(back.complex().f_vector().unwrap(), t.complex().f_vector().unwrap());
    }
}

/// The h-polynomial of `esd_r` of a 4-cycle follows the coefficient-extraction
/// formula.
#[test]
fn general_complex_h_formula_on_a_square() {
    let square = SimplicialComplex::from_facets([[0, 1], [1, 2], [2, 3], [0, 3]]);
    for r in 1..=5 {
        let h = esd_complex(&square, r).unwrap().h_polynomial().unwrap();
        let expected = (&IntPolynomial::ones_range(0, r - 1).pow(2)
            * &square.h_polynomial().unwrap())
            .e_operator(r);
        assert_eq!(h, expected, "r={r}");
    }
}

#[test]
fn word_counts_by_three_means() {
    for n in 1..=8 {
        for r in 1..=4 {
            let listed = enumerate_words(n, r).unwrap().len();
            let summed = local_h_via_words(n, r).unwrap().coeff_sum();
            let transfer = local_h_via_transfer_matrix(n, r).unwrap().coeff_sum();
            assert_eq!(summed, listed.into());
            assert_eq!(transfer, listed.into());
        }
    }
}

#[test]
fn restricting_to_a_facet_of_the_base_gives_a_smaller_esd() {
    let t = esd_simplex(4, 3).unwrap();
    let sub = t.restrict(&Face::new([0, 1, 3])).unwrap();
    let direct = esd_simplex(3, 3).unwrap();
    assert_eq!(
        sub.complex().f_vector().unwrap(),
        direct.complex().f_vector().unwrap()
    );
    assert_eq!(sub.local_h(), direct.local_h());
}
