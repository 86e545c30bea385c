//! Every corpus move pair preserves colorings, cycle classes and state sums.

use quandle_core::algebra::{from_spec, FiniteQuandle};
use quandle_core::chains::{ComplexSpec, Limits, Theory};
use quandle_core::corpus;
use quandle_core::homology::{cocycle_basis, twisted_cocycle_basis, Cochain};
use quandle_core::invariants::{verify_move_invariance, MoveCheckInputs};
use quandle_core::ring::{IntegersMod, LaurentQuotient};

fn inputs(q: &FiniteQuandle, p: u64) -> MoveCheckInputs<IntegersMod, LaurentQuotient> {
    let limits = Limits::default();
    let ring = LaurentQuotient::z3_cyclotomic();
    let plain = cocycle_basis(q, Theory::Q, 2, p, &limits).unwrap().cocycles;
    let shadow = cocycle_basis(q, Theory::Q, 3, p, &limits).unwrap().cocycles;
    let tw = ComplexSpec::new(q, Theory::Q, true, ring.clone()).unwrap();
    let tws = ComplexSpec::twisted_shadow(q, Theory::Q, ring).unwrap();
    MoveCheckInputs {
        plain: Cochain::sum(&plain),
        shadow: Cochain::sum(&shadow),
        twisted: Cochain::sum(&twisted_cocycle_basis(&tw, 2, &limits).unwrap()),
        twisted_shadow: Cochain::sum(&twisted_cocycle_basis(&tws, 3, &limits).unwrap()),
    }
}

fn check_all(spec: &str, p: u64) {
    let q = from_spec(spec).unwrap();
    let inputs = inputs(&q, p);
    assert!(inputs.shadow.is_some() && inputs.twisted.is_some());
    for pair in corpus::move_pairs().unwrap() {
        let report = verify_move_invariance(&pair.before, &pair.result, &q, &inputs, &Limits::default()).unwrap();
        assert!(report.passed(), "{} over {spec}:\n{report}", pair.name);
    }
}

#[test]
fn dihedral3() {
    check_all("dihedral:3", 3);
}

#[test]
fn dihedral5() {
    check_all("dihedral:5", 5);
}

#[test]
fn alexander_4_3() {
    check_all("alexander:4:3", 2);
}

#[test]
fn trivial2() {
    check_all("trivial:2", 2);
}

#[test]
fn theta_shadow_sums_survive_moves() {
    let q = FiniteQuandle::dihedral(3).unwrap();
    let inputs = MoveCheckInputs::<IntegersMod, LaurentQuotient> { shadow: Some(corpus::theta().unwrap()), ..Default::default() };
    for pair in corpus::move_pairs().unwrap() {
        let report = verify_move_invariance(&pair.before, &pair.result, &q, &inputs, &Limits::default()).unwrap();
        assert!(report.passed(), "{}:\n{report}", pair.name);
    }
}
