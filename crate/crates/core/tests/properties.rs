use num_bigint::BigInt;
use num_rational::BigRational;
use parhopf::algebra::bialgebra;
use parhopf::morphisms::pair_mh;
use parhopf::parqsym::{self, ParQSymM};
use parhopf::parsym::{self, ParSymH};
use parhopf::{Composition, Diagram, LinComb, QParam};
use proptest::prelude::*;

/// Diagrams of order `0..=max` from restricted growth strings over `1, 1', 2, 2', …`.
fn diagram(max: usize) -> impl Strategy<Value = Diagram> {
    (0..=max)
        .prop_flat_map(|k| proptest::collection::vec(any::<u8>(), 2 * k))
        .prop_map(|choices| {
            let mut blocks: Vec<Vec<i64>> = Vec::new();
            for (i, c) in choices.iter().enumerate() {
                let col = (i / 2 + 1) as i64;
                let node = if i % 2 == 0 { col } else { -col };
                let b = *c as usize % (blocks.len() + 1);
                if b == blocks.len() {
                    blocks.push(vec![node]);
                } else {
                    blocks[b].push(node);
                }
            }
            Diagram::from_signed_blocks(&blocks).unwrap()
        })
}

fn qparam() -> impl Strategy<Value = QParam> {
    (-6i64..=6, 1i64..=4)
        .prop_filter("q = -1 is singular", |(n, d)| n != &(-d))
        .prop_map(|(n, d)| QParam::new(BigRational::new(BigInt::from(n), BigInt::from(d))).unwrap())
}

fn composition() -> impl Strategy<Value = Composition> {
    proptest::collection::vec(1usize..4, 0..5).prop_map(|p| Composition::new(p).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn text_and_json_round_trip(d in diagram(4)) {
        prop_assert_eq!(d.to_string().parse::<Diagram>().unwrap(), d.clone());
        prop_assert_eq!(Diagram::from_json_value(&d.to_json_value()).unwrap(), d);
    }

    #[test]
    fn factorizations_reassemble(d in diagram(4)) {
        let factors = d.tensor_factors();
        let rebuilt = factors.iter().fold(Diagram::empty(), |acc, f| acc.tensor(f));
        prop_assert_eq!(&rebuilt, &d);
        prop_assert!(factors.iter().all(Diagram::is_tensor_irreducible));
        prop_assert_eq!(d.atoms().assemble().unwrap(), d.clone());
        prop_assert_eq!(d.length(), factors.len());
        if !d.is_empty() {
            prop_assert_eq!(d.length(), 1 + d.s_set().len());
        }
    }

    #[test]
    fn refinement_is_consistent(d in diagram(4)) {
        let coarse = d.coarsenings();
        prop_assert!(coarse.iter().all(|c| d.refines(c) && c.similar(&d)));
        prop_assert!(d.refinements().iter().all(|r| r.refines(&d)));
        prop_assert_eq!(d.similar_class().len(), 1usize << d.atom_count().saturating_sub(1));
    }

    #[test]
    fn coassociativity_and_counit(d in diagram(4)) {
        prop_assert!(bialgebra::check_coassociativity(&ParQSymM, &d).is_ok());
        prop_assert!(bialgebra::check_coassociativity(&ParSymH, &d).is_ok());
        prop_assert!(bialgebra::check_counit(&ParQSymM, &d).is_ok());
        prop_assert!(bialgebra::check_counit(&ParSymH, &d).is_ok());
    }

    #[test]
    fn compatibility(a in diagram(2), b in diagram(2)) {
        prop_assert!(bialgebra::check_compatibility(&ParQSymM, &a, &b).is_ok());
        prop_assert!(bialgebra::check_compatibility(&ParSymH, &a, &b).is_ok());
    }

    #[test]
    fn conversions_invert(d in diagram(3), q in qparam()) {
        let id = LinComb::basis(d.clone());
        prop_assert_eq!(parsym::h_to_kappa(&d, &q).map_linear(|x| parsym::kappa_to_h(x, &q)), id.clone());
        prop_assert_eq!(parsym::kappa_to_r(&d, &q).map_linear(|x| parsym::r_to_kappa(x, &q)), id.clone());
        prop_assert_eq!(parqsym::m_to_eta_q(&d, &q).map_linear(|x| parqsym::eta_q_to_m(x, &q)), id.clone());
        prop_assert_eq!(parqsym::eta_q_to_l(&d, &q).map_linear(|x| parqsym::l_to_eta_q(x, &q)), id);
    }

    #[test]
    fn eta_kappa_duality(a in diagram(3), b in diagram(3), q in qparam()) {
        let v = pair_mh(&parqsym::eta_q_to_m(&a, &q), &parsym::kappa_to_h(&b, &q));
        let want = if a == b { 1 } else { 0 };
        prop_assert_eq!(v, BigRational::from_integer(want.into()));
    }

    #[test]
    fn explicit_antipode_is_takeuchi(d in diagram(3)) {
        let t = bialgebra::takeuchi_antipode(&ParQSymM, &LinComb::basis(d.clone())).unwrap();
        prop_assert_eq!(parqsym::antipode_m_explicit(&d), t);
    }

    #[test]
    fn compositions_split_and_concat(a in composition(), b in composition()) {
        let ab = a.concat(&b);
        prop_assert_eq!(ab.size(), a.size() + b.size());
        for beta in ab.coarsenings() {
            let pieces = ab.split_along(&beta).unwrap();
            let rebuilt = pieces.iter().fold(Composition::empty(), |acc, p| acc.concat(p));
            prop_assert_eq!(&rebuilt, &ab);
            prop_assert_eq!(pieces.iter().map(Composition::size).collect::<Vec<_>>(), beta.parts().to_vec());
        }
    }

    #[test]
    fn alpha_and_pi_of_composition(a in composition()) {
        prop_assert_eq!(Diagram::pi_of_composition(&a).alpha_of(), a);
    }
}
