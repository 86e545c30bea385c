//! Frozen values from the brute-force oracle in `oracles/`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use quandle_core::algebra::{from_spec, FiniteQuandle};
use quandle_core::chains::{ComplexSpec, Limits, Theory};
use quandle_core::coloring::{coloring_orbits, enumerate_colorings};
use quandle_core::corpus;
use quandle_core::diagram::OrientedDiagram;
use quandle_core::homology::{cohomology_dimension, homology};
use quandle_core::invariants::{state_sum, state_values, StateSumOptions};
use quandle_core::ring::{Integers, Ring};
use serde_json::Value;

fn oracle() -> Value {
    serde_json::from_str(include_str!("../oracles/oracle_values.json")).unwrap()
}

fn named(name: &str) -> OrientedDiagram {
    corpus::diagram(name).unwrap()
}

#[test]
fn homology_matches_oracle() {
    let o = oracle();
    let limits = Limits::default();
    for (key, want) in o["homology"].as_object().unwrap() {
        let parts: Vec<&str> = key.split(' ').collect();
        let q = from_spec(parts[0]).unwrap();
        let theory: Theory = parts[1].parse().unwrap();
        let n: usize = parts[2].parse().unwrap();
        let spec = ComplexSpec::untwisted(&q, theory, Integers).unwrap();
        let h = homology(&spec, n, &limits).unwrap();
        let torsion: Vec<BigInt> = want["torsion"].as_array().unwrap().iter().map(|v| BigInt::from(v.as_i64().unwrap())).collect();
        assert_eq!(h.free_rank as u64, want["free_rank"].as_u64().unwrap(), "{key}");
        assert_eq!(h.torsion, torsion, "{key}");
    }
}

#[test]
fn cohomology_matches_oracle() {
    for (key, want) in oracle()["cohomology_z3"].as_object().unwrap() {
        let parts: Vec<&str> = key.split(' ').collect();
        let q = from_spec(parts[0]).unwrap();
        let dim = cohomology_dimension(&q, parts[1].parse().unwrap(), parts[2].parse().unwrap(), 3, &Limits::default()).unwrap();
        assert_eq!(dim as u64, want.as_u64().unwrap(), "{key}");
    }
}

#[test]
fn diagram_traces_match_oracle() {
    let o = oracle();
    for (key, want) in o["trace"].as_object().unwrap() {
        let d = match key.as_str() {
            "not_a_knot" => {
                assert!(OrientedDiagram::parse_pd("X(1,4,2,3);X(3,6,4,5);X(5,2,6,1)").is_err());
                continue;
            }
            name => named(name),
        };
        assert_eq!(d.face_count() as u64, want["faces"].as_u64().unwrap(), "{key}");
        let signs: Vec<i32> = want["signs"].as_array().unwrap().iter().map(|v| v.as_i64().unwrap() as i32).collect();
        let mut got = d.signs();
        let mut signs_sorted = signs.clone();
        got.sort();
        signs_sorted.sort();
        assert_eq!(got, signs_sorted, "{key}");
    }
}

#[test]
fn coloring_counts_and_orbits_match_oracle() {
    let o = oracle();
    for (key, want) in o["coloring_counts"].as_object().unwrap() {
        let (name, spec) = key.split_once(' ').unwrap();
        let cols = enumerate_colorings(&named(name), &from_spec(spec).unwrap()).unwrap();
        assert_eq!(cols.len() as u64, want.as_u64().unwrap(), "{key}");
    }
    for (key, want) in o["coloring_orbit_sizes"].as_object().unwrap() {
        let (name, spec) = key.split_once(' ').unwrap();
        let q = from_spec(spec).unwrap();
        let cols = enumerate_colorings(&named(name), &q).unwrap();
        let mut sizes: Vec<u64> = coloring_orbits(&cols, &q).unwrap().iter().map(|o| o.len() as u64).collect();
        sizes.sort();
        let want: Vec<u64> = want.as_array().unwrap().iter().map(|v| v.as_u64().unwrap()).collect();
        assert_eq!(sizes, want, "{key}");
    }
}

#[test]
fn theta_matches_oracle() {
    let theta = corpus::theta().unwrap();
    let want: Vec<u64> = oracle()["theta_values"].as_array().unwrap().iter().map(|v| v.as_u64().unwrap()).collect();
    assert_eq!(theta.values, want);
}

fn histogram(values: impl IntoIterator<Item = u64>) -> BTreeMap<u64, usize> {
    let mut h = BTreeMap::new();
    for v in values {
        *h.entry(v).or_insert(0) += 1;
    }
    h
}

fn oracle_histogram(key: &str) -> BTreeMap<u64, usize> {
    histogram(oracle()[key].as_array().unwrap().iter().map(|v| v.as_u64().unwrap()))
}

#[test]
fn shadow_state_sums_match_oracle() {
    let q = FiniteQuandle::dihedral(3).unwrap();
    let theta = corpus::theta().unwrap();
    let opts = StateSumOptions { shadow: true, ..Default::default() };
    for (name, key) in [("trefoil", "trefoil_shadow_state_sum"), ("figure_eight", "figure_eight_shadow_state_sum")] {
        let v = state_sum(&named(name), &q, &theta, &opts).unwrap();
        assert_eq!(v.entries.into_iter().collect::<BTreeMap<_, _>>(), oracle_histogram(key), "{name}");
        assert!(v.warnings.is_empty());
    }
    let reduced = state_sum(&named("trefoil"), &q, &theta, &StateSumOptions { reduced: true, ..opts }).unwrap();
    assert_eq!(reduced.entries, oracle_histogram("trefoil_reduced_shadow_state_sum"));
    let per_state = state_values(&named("trefoil"), &q, &theta, &opts).unwrap();
    assert_eq!(per_state.len(), 27);
    assert_eq!(
        histogram(per_state.iter().map(|(_, v)| theta.ring.clone().format(v).parse().unwrap())),
        oracle_histogram("trefoil_shadow_state_sum")
    );
}
