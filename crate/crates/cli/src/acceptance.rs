//! The acceptance suite behind `quandle selftest`: one pass/fail line per criterion.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use quandle_core::algebra::{catalog, from_spec, FiniteQuandle};
use quandle_core::chains::{check_simplicial_identities, gamma_truncate, ComplexSpec, Limits, Theory};
use quandle_core::coloring::{enumerate_colorings, enumerate_shadow_colorings};
use quandle_core::corpus::{self, MovePair};
use quandle_core::diagram::OrientedDiagram;
use quandle_core::homology::{cocycle_basis, cohomology_dimension, homology, twisted_cocycle_basis, Cochain};
use quandle_core::invariants::{state_chain, state_sum, states, verify_move_invariance, ChainMode, MoveCheckInputs, StateSumOptions};
use quandle_core::ring::{Integers, IntegersMod, LaurentIntegers, LaurentQuotient, Ring};

pub const ORACLE_JSON: &str = include_str!("../../core/oracles/oracle_values.json");

pub const TITLES: [&str; 10] = [
    "chain-complex axioms",
    "weak-simplicial identities",
    "splitting audit",
    "trivial-quandle baselines",
    "coloring counts",
    "shadow count law",
    "cycle property",
    "move invariance",
    "twisted suite",
    "oracle-pinned homology and state sums",
];

#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: usize,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{tag}] {:>2}. {}: {} ({:.1}s)", self.id, self.title, self.detail, self.elapsed.as_secs_f64())
    }
}

impl Outcome {
    pub fn to_json(&self) -> Value {
        serde_json::json!({
            "criterion": self.id,
            "title": self.title,
            "passed": self.passed,
            "detail": self.detail,
            "seconds": self.elapsed.as_secs_f64(),
        })
    }
}

type Check = std::result::Result<String, String>;

fn fail<E: fmt::Display>(e: E) -> String {
    e.to_string()
}

/// Runs one criterion (1 to 10).
pub fn run_criterion(id: usize, seed: u64) -> Outcome {
    let start = Instant::now();
    let result = match id {
        1 => chain_axioms(),
        2 => simplicial(),
        3 => splitting(),
        4 => trivial_baselines(),
        5 => coloring_counts(),
        6 => shadow_law(),
        7 => cycle_property(),
        8 => move_invariance(seed),
        9 => twisted_suite(seed),
        10 => oracle_pinned(),
        _ => Err(format!("no criterion {id}")),
    };
    let (passed, detail) = match result {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Outcome { id, title: TITLES.get(id.wrapping_sub(1)).copied().unwrap_or("unknown"), passed, detail, elapsed: start.elapsed() }
}

pub fn run_all(seed: u64) -> Vec<Outcome> {
    (1..=10).map(|id| run_criterion(id, seed)).collect()
}

fn oracle() -> Value {
    serde_json::from_str(ORACLE_JSON).expect("oracle file is valid JSON")
}

fn corpus_diagrams() -> std::result::Result<Vec<(String, OrientedDiagram)>, String> {
    Ok(corpus::diagrams().map_err(fail)?.into_iter().map(|d| (d.name, d.diagram)).collect())
}

fn chain_axioms() -> Check {
    let mut checked = 0usize;
    for q in catalog() {
        for n in 2..=5 {
            for theory in [Theory::R, Theory::D, Theory::Q] {
                let plain = ComplexSpec::untwisted(&q, theory, Integers).map_err(fail)?;
                let twisted = ComplexSpec::new(&q, theory, true, LaurentIntegers).map_err(fail)?;
                let shadow = ComplexSpec::twisted_shadow(&q, theory, LaurentIntegers).map_err(fail)?;
                for (label, result) in [
                    ("untwisted", plain.boundary_squared_vanishes(n)),
                    ("twisted", twisted.boundary_squared_vanishes(n)),
                    ("twisted shadow", shadow.boundary_squared_vanishes(n)),
                ] {
                    if let Err(x) = result {
                        return Err(format!("{label} ∂∂ ≠ 0 on {x:?} over {} ({theory})", q.name()));
                    }
                }
                checked += 1;
            }
        }
    }
    Ok(format!("∂∂ = 0 on every basis tuple, {} quandles, degrees 2..5, R/D/Q, {checked} complexes × 3", catalog().len()))
}

fn simplicial() -> Check {
    let quandles = catalog();
    for q in &quandles {
        for n in 1..=4 {
            check_simplicial_identities(q, n).map_err(|e| format!("{}: {e}", q.name()))?;
        }
    }
    Ok(format!("identities hold per tuple for d^*0 and d^*, {} quandles, degrees ≤ 4", quandles.len()))
}

/// Prime-power decomposition of a list of invariant factors.
fn elementary_divisors(torsion: &[BigInt]) -> Vec<BigInt> {
    let mut out = Vec::new();
    for d in torsion {
        let mut d = d.clone();
        let mut p = BigInt::from(2);
        while d > BigInt::one() {
            let mut pk = BigInt::one();
            while d.is_multiple_of(&p) {
                d /= &p;
                pk *= &p;
            }
            if pk > BigInt::one() {
                out.push(pk);
            }
            p += 1;
        }
    }
    out.sort();
    out
}

fn splitting() -> Check {
    let limits = Limits::default();
    let mut groups = 0;
    for q in catalog() {
        for n in 1..=3 {
            let h = |theory| -> std::result::Result<_, String> {
                homology(&ComplexSpec::untwisted(&q, theory, Integers).map_err(fail)?, n, &limits).map_err(fail)
            };
            let (r, d, qq) = (h(Theory::R)?, h(Theory::D)?, h(Theory::Q)?);
            let mut sum = elementary_divisors(&d.torsion);
            sum.extend(elementary_divisors(&qq.torsion));
            sum.sort();
            if r.free_rank != d.free_rank + qq.free_rank || elementary_divisors(&r.torsion) != sum {
                return Err(format!("{}: {r} but {d} and {qq}", q.name()));
            }
            groups += 3;
        }
    }
    Ok(format!("H^R = H^D ⊕ H^Q for {} quandles, n ≤ 3 ({groups} groups)", catalog().len()))
}

fn trivial_baselines() -> Check {
    let limits = Limits::default();
    let t1 = FiniteQuandle::trivial(1).map_err(fail)?;
    let t2 = FiniteQuandle::trivial(2).map_err(fail)?;
    let mut lines = Vec::new();
    for n in 1..=5 {
        let h = homology(&ComplexSpec::untwisted(&t1, Theory::R, Integers).map_err(fail)?, n, &limits).map_err(fail)?;
        if h.free_rank != 1 || !h.torsion.is_empty() {
            return Err(format!("trivial(1): {h}"));
        }
    }
    lines.push("H_n^R(trivial:1) = Z for n = 1..5".to_string());
    let h = homology(&ComplexSpec::untwisted(&t2, Theory::R, Integers).map_err(fail)?, 1, &limits).map_err(fail)?;
    if h.free_rank != 2 || !h.torsion.is_empty() {
        return Err(format!("trivial(2): {h}"));
    }
    lines.push(format!("{h} for trivial:2"));
    Ok(lines.join("; "))
}

fn coloring_counts() -> Check {
    let o = oracle();
    let mut lines = Vec::new();
    for (key, want) in o["coloring_counts"].as_object().ok_or("oracle lacks coloring counts")? {
        let (name, spec) = key.split_once(' ').ok_or("bad oracle key")?;
        let d = corpus::diagram(name).map_err(fail)?;
        let got = enumerate_colorings(&d, &from_spec(spec).map_err(fail)?).map_err(fail)?.len();
        if Some(got as u64) != want.as_u64() {
            return Err(format!("{key}: {got} colorings, oracle {want}"));
        }
        lines.push(format!("{key} = {got}"));
    }
    let diagrams = corpus_diagrams()?;
    for k in 1..=6 {
        let q = FiniteQuandle::trivial(k).map_err(fail)?;
        for (name, d) in &diagrams {
            let got = enumerate_colorings(d, &q).map_err(fail)?.len();
            if got != k.pow(d.component_count() as u32) {
                return Err(format!("{name}/trivial:{k}: {got} colorings"));
            }
        }
    }
    lines.push(format!("trivial:k = k^components on {} diagrams, k ≤ 6", diagrams.len()));
    Ok(lines.join(", "))
}

fn shadow_law() -> Check {
    let diagrams = corpus_diagrams()?;
    let mut pairs = 0;
    for q in catalog().iter().filter(|q| q.classification().rack) {
        for (name, d) in &diagrams {
            let cols = enumerate_colorings(d, q).map_err(fail)?.len();
            let shadows = enumerate_shadow_colorings(d, q, None).map_err(fail)?.len();
            if shadows != q.order() * cols {
                return Err(format!("{name}/{}: {shadows} shadow colorings, {cols} colorings", q.name()));
            }
            pairs += 1;
        }
    }
    Ok(format!("|shadow| = |X|·|colorings| on {pairs} diagram × rack pairs"))
}

fn cycle_property() -> Check {
    let diagrams = corpus_diagrams()?;
    let mut count = 0;
    for q in catalog() {
        let spec = ComplexSpec::untwisted(&q, Theory::Q, Integers).map_err(fail)?;
        for (name, d) in &diagrams {
            for s in states(d, &q, true).map_err(fail)? {
                let c3 = state_chain(d, &q, &Integers, &s, ChainMode::SHADOW).map_err(fail)?;
                let plain = quandle_core::coloring::ShadowColoring { coloring: s.coloring.clone(), faces: Vec::new() };
                let c2 = state_chain(d, &q, &Integers, &plain, ChainMode::PLAIN).map_err(fail)?;
                if !spec.boundary(&c3).map_err(fail)?.is_zero() || !spec.boundary(&c2).map_err(fail)?.is_zero() {
                    return Err(format!("{name}/{}: state {s} is not a cycle", q.name()));
                }
                if gamma_truncate(&c3).map_err(fail)? != c2 {
                    return Err(format!("{name}/{}: γ(c₃) ≠ c₂ for {s}", q.name()));
                }
                count += 1;
            }
        }
    }
    Ok(format!("∂c₂ = ∂c₃ = 0 and γ(c₃) = c₂ for {count} shadow colorings"))
}

/// A random nonzero combination of a cocycle basis, with nonzero scalar coefficients drawn from `0..p`.
fn combination<R: Ring>(basis: &[Cochain<R>], p: u64, rng: &mut ChaCha8Rng) -> Option<Cochain<R>> {
    let first = basis.first()?;
    for _ in 0..16 {
        let mut out = Cochain::zero(first.ring.clone(), first.order, first.degree);
        for f in basis {
            let c = first.ring.from_i64(rng.gen_range(0..p) as i64);
            for (a, b) in out.values.iter_mut().zip(&f.values) {
                *a = out.ring.add(a, &out.ring.mul(&c, b));
            }
        }
        if !out.is_zero() {
            return Some(out);
        }
    }
    Cochain::sum(basis)
}

const MOVE_QUANDLES: [(&str, u64); 4] = [("dihedral:3", 3), ("dihedral:5", 5), ("alexander:4:3", 2), ("trivial:2", 2)];

fn twisted_inputs(q: &FiniteQuandle, rng: &mut ChaCha8Rng) -> std::result::Result<(Option<Cochain<LaurentQuotient>>, Option<Cochain<LaurentQuotient>>), String> {
    let limits = Limits::default();
    let ring = LaurentQuotient::z3_cyclotomic();
    let tw = ComplexSpec::new(q, Theory::Q, true, ring.clone()).map_err(fail)?;
    let tws = ComplexSpec::twisted_shadow(q, Theory::Q, ring).map_err(fail)?;
    Ok((
        combination(&twisted_cocycle_basis(&tw, 2, &limits).map_err(fail)?, 3, rng),
        combination(&twisted_cocycle_basis(&tws, 3, &limits).map_err(fail)?, 3, rng),
    ))
}

fn verify_pairs(pairs: &[MovePair], q: &FiniteQuandle, inputs: &MoveCheckInputs<IntegersMod, LaurentQuotient>) -> std::result::Result<usize, String> {
    let mut checks = 0;
    for pair in pairs {
        let report = verify_move_invariance(&pair.before, &pair.result, q, inputs, &Limits::default()).map_err(fail)?;
        if let Some(bad) = report.checks.iter().find(|c| !c.passed) {
            return Err(format!("{} over {}: {} failed: {}", pair.name, q.name(), bad.name, bad.detail));
        }
        checks += report.checks.len();
    }
    Ok(checks)
}

fn move_invariance(seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs = corpus::move_pairs().map_err(fail)?;
    let limits = Limits::default();
    let mut checks = 0;
    for (spec, p) in MOVE_QUANDLES {
        let q = from_spec(spec).map_err(fail)?;
        let plain = cocycle_basis(&q, Theory::Q, 2, p, &limits).map_err(fail)?.cocycles;
        let shadow = cocycle_basis(&q, Theory::Q, 3, p, &limits).map_err(fail)?.cocycles;
        let inputs = MoveCheckInputs {
            plain: combination(&plain, p, &mut rng),
            shadow: combination(&shadow, p, &mut rng),
            twisted: None,
            twisted_shadow: None,
        };
        checks += verify_pairs(&pairs, &q, &inputs)?;
    }
    let q = FiniteQuandle::dihedral(3).map_err(fail)?;
    let theta = MoveCheckInputs { shadow: Some(corpus::theta().map_err(fail)?), ..Default::default() };
    checks += verify_pairs(&pairs, &q, &theta)?;
    let families: BTreeMap<&str, usize> = pairs.iter().fold(BTreeMap::new(), |mut m, p| {
        *m.entry(p.result.kind.family()).or_insert(0) += 1;
        m
    });
    let fam: Vec<String> = families.iter().map(|(k, v)| format!("{v} {k}")).collect();
    Ok(format!(
        "{} pairs ({}) over {} quandles, plus θ on dihedral:3: {checks} checks passed",
        pairs.len(),
        fam.join(", "),
        MOVE_QUANDLES.len()
    ))
}

fn twisted_suite(seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let ring = LaurentQuotient::z3_cyclotomic();
    let diagrams = corpus_diagrams()?;
    let pairs = corpus::move_pairs().map_err(fail)?;
    let mut cycles = 0;
    let mut checks = 0;
    for spec in ["dihedral:3", "dihedral:5", "alexander:4:3"] {
        let q = from_spec(spec).map_err(fail)?;
        let plain = ComplexSpec::new(&q, Theory::Q, true, ring.clone()).map_err(fail)?;
        let shadow = ComplexSpec::twisted_shadow(&q, Theory::Q, ring.clone()).map_err(fail)?;
        for (name, d) in &diagrams {
            for s in states(d, &q, true).map_err(fail)? {
                let c = state_chain(d, &q, &ring, &s, ChainMode::TWISTED_SHADOW).map_err(fail)?;
                let bare = quandle_core::coloring::ShadowColoring { coloring: s.coloring.clone(), faces: Vec::new() };
                let c2 = state_chain(d, &q, &ring, &bare, ChainMode::TWISTED).map_err(fail)?;
                if !shadow.boundary(&c).map_err(fail)?.is_zero() || !plain.boundary(&c2).map_err(fail)?.is_zero() {
                    return Err(format!("{name}/{spec}: twisted chain of {s} is not a ∂^T-cycle"));
                }
                cycles += 1;
            }
        }
        let (twisted, twisted_shadow) = twisted_inputs(&q, &mut rng)?;
        if twisted.is_none() || twisted_shadow.is_none() {
            return Err(format!("{spec}: no twisted cocycles over {}", ring.tag()));
        }
        let inputs = MoveCheckInputs::<IntegersMod, LaurentQuotient> { plain: None, shadow: None, twisted, twisted_shadow };
        checks += verify_pairs(&pairs, &q, &inputs)?;
    }
    let broken = r1_failure()?;
    Ok(format!("{cycles} twisted shadow/plain ∂^T-cycles; {checks} twisted move checks over {}; {broken}", ring.tag()))
}

/// A twisted rack cocycle that is nonzero on degenerate tuples changes under some R1 move, with a warning.
fn r1_failure() -> Check {
    let q = FiniteQuandle::dihedral(3).map_err(fail)?;
    let ring = LaurentQuotient::z3_cyclotomic();
    let rack = ComplexSpec::new(&q, Theory::R, true, ring.clone()).map_err(fail)?;
    let basis = twisted_cocycle_basis(&rack, 2, &Limits::default()).map_err(fail)?;
    let f = basis.into_iter().find(|f| !f.vanishes_on_degenerate()).ok_or("every twisted rack 2-cocycle vanishes on degenerate tuples")?;
    let opts = StateSumOptions { twisted: true, ..Default::default() };
    let r1 = corpus::move_pairs_of("R1").map_err(fail)?;
    let mut changed = Vec::new();
    for pair in &r1 {
        let before = state_sum(&pair.before, &q, &f, &opts).map_err(fail)?;
        let after = state_sum(pair.after(), &q, &f, &opts).map_err(fail)?;
        if before.warnings.is_empty() {
            return Err("no warning for a cocycle that is nonzero on degenerate tuples".into());
        }
        if before != after {
            changed.push(pair.name.clone());
        }
    }
    // the same failure over Z: f ≡ 1 is a rack 2-cocycle
    let z3 = IntegersMod::new(3).map_err(fail)?;
    let one = Cochain::from_fn(z3.clone(), 3, 2, |_| z3.one());
    let mut untwisted = 0;
    for pair in &r1 {
        let b = state_sum(&pair.before, &q, &one, &StateSumOptions::default()).map_err(fail)?;
        let a = state_sum(pair.after(), &q, &one, &StateSumOptions::default()).map_err(fail)?;
        untwisted += usize::from(a != b);
    }
    if changed.is_empty() || untwisted == 0 {
        return Err(format!("R1 invariance did not fail ({} twisted, {untwisted} untwisted changes)", changed.len()));
    }
    Ok(format!("R1 breaks for a cocycle nonzero on degenerate tuples on {}/{} pairs (twisted), {untwisted} (f ≡ 1)", changed.len(), r1.len()))
}

fn oracle_pinned() -> Check {
    let o = oracle();
    let limits = Limits::default();
    let q = FiniteQuandle::dihedral(3).map_err(fail)?;
    let spec = ComplexSpec::untwisted(&q, Theory::Q, Integers).map_err(fail)?;
    let mut lines = Vec::new();
    for n in [2usize, 3] {
        let h = homology(&spec, n, &limits).map_err(fail)?;
        let want = &o["homology"][format!("dihedral:3 Q {n}")];
        let torsion: Vec<u64> = h.torsion.iter().filter_map(ToPrimitive::to_u64).collect();
        let want_torsion: Vec<u64> = want["torsion"].as_array().ok_or("oracle lacks torsion")?.iter().filter_map(Value::as_u64).collect();
        if Some(h.free_rank as u64) != want["free_rank"].as_u64() || torsion != want_torsion {
            return Err(format!("{h}, oracle {want}"));
        }
        lines.push(h.to_string());
    }
    let dim = cohomology_dimension(&q, Theory::Q, 2, 3, &limits).map_err(fail)?;
    if Some(dim as u64) != o["cohomology_z3"]["dihedral:3 Q 2"].as_u64() {
        return Err(format!("dim H²_Q(dihedral:3; Z_3) = {dim} disagrees with the oracle"));
    }
    lines.push(format!("dim H²_Q(R_3; Z_3) = {dim}"));
    let theta = corpus::theta().map_err(fail)?;
    let opts = StateSumOptions { shadow: true, ..Default::default() };
    let unknot = state_sum(&OrientedDiagram::unknot(), &q, &theta, &opts).map_err(fail)?;
    let trefoil = state_sum(&corpus::diagram("trefoil").map_err(fail)?, &q, &theta, &opts).map_err(fail)?;
    let mut want = BTreeMap::new();
    for v in o["trefoil_shadow_state_sum"].as_array().ok_or("oracle lacks the trefoil state sum")? {
        *want.entry(v.as_u64().ok_or("bad oracle value")?).or_insert(0usize) += 1;
    }
    if trefoil.entries != want {
        return Err(format!("trefoil θ state sum {trefoil} disagrees with the oracle"));
    }
    if unknot.entries != BTreeMap::from([(0u64, 9usize)]) || unknot == trefoil {
        return Err(format!("unknot value {unknot} does not separate it from the trefoil"));
    }
    lines.push(format!("θ shadow sums: unknot {unknot}, trefoil {trefoil} ({} nonzero entries)", trefoil.nonzero()));
    Ok(lines.join("; "))
}
