use proptest::prelude::*;
use quandle_core::algebra::FiniteQuandle;
use quandle_core::chains::{alpha_embed, gamma_truncate, ChainVector, ComplexSpec, Limits, Theory};
use quandle_core::coloring::enumerate_colorings;
use quandle_core::corpus;
use quandle_core::diagram::{MoveKind, OrientedDiagram, R1Side};
use quandle_core::homology::{cocycle_basis, Cochain};
use quandle_core::invariants::{state_chain, states, ChainMode};
use quandle_core::ring::{Integers, IntegersMod, LaurentIntegers, LaurentQuotient, Ring};

fn chain<R: Ring>(ring: R, order: usize, degree: usize, terms: &[(Vec<usize>, i64)]) -> ChainVector<R> {
    let mut c = ChainVector::zero(ring.clone(), order, degree);
    for (t, k) in terms {
        let t: Vec<usize> = t.iter().map(|x| x % order).collect();
        c.add_term(&t, &ring.from_i64(*k));
    }
    c
}

fn terms(degree: usize) -> impl Strategy<Value = Vec<(Vec<usize>, i64)>> {
    prop::collection::vec((prop::collection::vec(0usize..16, degree), -3i64..=3), 1..8)
}

fn theory() -> impl Strategy<Value = Theory> {
    prop_oneof![Just(Theory::R), Just(Theory::D), Just(Theory::Q)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn boundary_squares_to_zero((k, n) in (3usize..=7, 2usize..=5), th in theory(), raw in terms(5)) {
        let q = FiniteQuandle::dihedral(k).unwrap();
        let raw: Vec<_> = raw.into_iter().map(|(t, c)| (t[..n].to_vec(), c)).collect();
        let mut c = chain(Integers, k, n, &raw);
        if th == Theory::D {
            c = c.map_tuples(n, |t| { let mut t = t.to_vec(); t[1] = t[0]; Some((t, 1)) });
        }
        let spec = ComplexSpec::untwisted(&q, th, Integers).unwrap();
        prop_assert!(spec.boundary(&spec.boundary(&c).unwrap()).unwrap().is_zero());
        let tw = ComplexSpec::new(&q, Theory::R, true, LaurentIntegers).unwrap();
        let c = chain(LaurentIntegers, k, n, &raw);
        prop_assert!(tw.boundary(&tw.boundary(&c).unwrap()).unwrap().is_zero());
        let tws = ComplexSpec::twisted_shadow(&q, Theory::Q, LaurentQuotient::z3_cyclotomic()).unwrap();
        let c = chain(LaurentQuotient::z3_cyclotomic(), k, n, &raw);
        prop_assert!(tws.boundary(&tws.boundary(&c).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn alpha_is_a_chain_map(k in 3usize..=5, raw in terms(3)) {
        let q = FiniteQuandle::dihedral(k).unwrap();
        let z = chain(Integers, k, 3, &raw).project_quandle();
        let r = ComplexSpec::untwisted(&q, Theory::R, Integers).unwrap();
        let qs = ComplexSpec::untwisted(&q, Theory::Q, Integers).unwrap();
        prop_assert_eq!(r.boundary(&alpha_embed(&z)).unwrap(), alpha_embed(&qs.boundary(&z).unwrap()));
        prop_assert_eq!(alpha_embed(&z).project_quandle(), z);
    }

    #[test]
    fn gamma_anticommutes_with_boundary(k in 3usize..=6, n in 3usize..=5, raw in terms(5)) {
        let q = FiniteQuandle::dihedral(k).unwrap();
        let raw: Vec<_> = raw.into_iter().map(|(t, c)| (t[..n].to_vec(), c)).collect();
        let c = chain(Integers, k, n, &raw);
        let spec = ComplexSpec::untwisted(&q, Theory::R, Integers).unwrap();
        let lhs = gamma_truncate(&spec.boundary(&c).unwrap()).unwrap();
        let rhs = spec.boundary(&gamma_truncate(&c).unwrap()).unwrap();
        prop_assert!(lhs.try_add(&rhs).unwrap().is_zero());
    }

    #[test]
    fn cocycles_kill_boundaries(raw in terms(4), idx in 0usize..8) {
        let q = FiniteQuandle::dihedral(3).unwrap();
        let basis = cocycle_basis(&q, Theory::Q, 3, 3, &Limits::default()).unwrap().cocycles;
        let f = &basis[idx % basis.len()];
        let ring = IntegersMod::new(3).unwrap();
        let spec = ComplexSpec::untwisted(&q, Theory::Q, ring.clone()).unwrap();
        let w = chain(ring.clone(), 3, 4, &raw).project_quandle();
        let dw = spec.boundary(&w).unwrap();
        prop_assert!(ring.is_zero(&f.evaluate(&dw).unwrap()));
        let trefoil = corpus::diagram("trefoil").unwrap();
        for s in states(&trefoil, &q, true).unwrap() {
            let z = state_chain(&trefoil, &q, &ring, &s, ChainMode::SHADOW).unwrap();
            prop_assert_eq!(f.evaluate(&z.try_add(&dw).unwrap()).unwrap(), f.evaluate(&z).unwrap());
        }
    }

    #[test]
    fn random_moves_keep_coloring_counts(steps in prop::collection::vec((0usize..4, 0usize..64, 0usize..64, any::<bool>()), 1..4)) {
        let q3 = FiniteQuandle::dihedral(3).unwrap();
        let q5 = FiniteQuandle::dihedral(5).unwrap();
        let mut d = corpus::diagram("trefoil").unwrap();
        for (kind, a, b, flag) in steps {
            if let Some(next) = random_move(&d, kind, a, b, flag) {
                d = next;
            }
            prop_assert_eq!(enumerate_colorings(&d, &q3).unwrap().len(), 9);
            prop_assert_eq!(enumerate_colorings(&d, &q5).unwrap().len(), 5);
        }
    }
}

fn random_move(d: &OrientedDiagram, kind: usize, a: usize, b: usize, flag: bool) -> Option<OrientedDiagram> {
    let pick = |v: Vec<usize>, i: usize| (!v.is_empty()).then(|| v[i % v.len()]);
    let mv = match kind {
        0 => MoveKind::R1 {
            edge: a % d.edge_count(),
            side: if flag { R1Side::Left } else { R1Side::Right },
            sign: if b % 2 == 0 { 1 } else { -1 },
        },
        1 => {
            let faces = d.faces();
            let f = a % faces.len();
            let darts = &faces[f];
            MoveKind::R2 { over: darts[b % darts.len()].0, under: darts[(b / 7) % darts.len()].0, face: f }
        }
        2 => MoveKind::R3 { face: pick(d.r3_faces(), a)? },
        _ if flag => MoveKind::R2Inverse { face: pick(d.r2_bigons(), a)? },
        _ => MoveKind::R1Inverse { crossing: pick(d.r1_curls(), a)? },
    };
    d.apply(&mv).ok().map(|m| m.diagram)
}

#[test]
fn theta_is_a_nontrivial_cocycle() {
    let q = FiniteQuandle::dihedral(3).unwrap();
    let theta = corpus::theta().unwrap();
    let spec = ComplexSpec::untwisted(&q, Theory::Q, theta.ring.clone()).unwrap();
    assert!(quandle_core::homology::is_cocycle(&spec, &theta).unwrap());
    assert!(!quandle_core::homology::is_coboundary(&spec, &theta, &Limits::default()).unwrap());
    assert!(Cochain::<IntegersMod>::sum(&[theta.clone(), theta.clone(), theta.clone()]).unwrap().is_zero());
}
