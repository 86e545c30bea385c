//! Cycle and cocycle invariants of colored diagrams.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::FiniteQuandle;
use crate::chains::{ChainVector, ComplexSpec, Limits, Theory};
use crate::coloring::{self, enumerate_colorings, enumerate_shadow_colorings, Coloring, ShadowColoring};
use crate::diagram::{MoveResult, OrientedDiagram};
use crate::error::{Error, Result};
use crate::homology::{homology, is_cocycle, Cochain, HomologyClass, HomologyGroup};
use crate::ring::{Integers, Ring};

/// What one crossing contributes: `sign · (q₀?, q₁, …, q_{n+1})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingDatum {
    pub sign: i32,
    /// Colors listed bottom to top at the source region.
    pub colors: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shadow: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alexander: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub component: Option<usize>,
}

/// Which chain to build from crossing data.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct ChainMode {
    pub shadow: bool,
    pub twisted: bool,
    /// Keep only crossings whose bottom strand lies on this component.
    pub component: Option<usize>,
}

impl ChainMode {
    pub const PLAIN: ChainMode = ChainMode { shadow: false, twisted: false, component: None };
    pub const SHADOW: ChainMode = ChainMode { shadow: true, twisted: false, component: None };
    pub const TWISTED: ChainMode = ChainMode { shadow: false, twisted: true, component: None };
    pub const TWISTED_SHADOW: ChainMode = ChainMode { shadow: true, twisted: true, component: None };

    pub fn per_component(i: usize) -> Self {
        ChainMode { component: Some(i), ..ChainMode::PLAIN }
    }

    /// `plain`, `shadow`, `twisted`, `twisted_shadow`, `per_component:i`, `shadow_per_component:i`.
    pub fn parse(s: &str) -> Result<Self> {
        let (name, comp) = match s.split_once(':') {
            Some((n, i)) => {
                let i = i.parse().map_err(|_| Error::parameter(format!("bad component index in mode {s:?}")))?;
                (n, Some(i))
            }
            None => (s, None),
        };
        let mut m = match name {
            "plain" | "per_component" => ChainMode::PLAIN,
            "shadow" | "shadow_per_component" => ChainMode::SHADOW,
            "twisted" => ChainMode::TWISTED,
            "twisted_shadow" => ChainMode::TWISTED_SHADOW,
            _ => return Err(Error::parameter(format!("unknown chain mode {s:?}"))),
        };
        if name.ends_with("per_component") != comp.is_some() {
            return Err(Error::parameter(format!("mode {s:?}: per_component takes an index, other modes do not")));
        }
        m.component = comp;
        Ok(m)
    }
}

impl fmt::Display for ChainMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = match (self.twisted, self.shadow) {
            (false, false) => "plain",
            (false, true) => "shadow",
            (true, false) => "twisted",
            (true, true) => "twisted_shadow",
        };
        match self.component {
            Some(i) => write!(f, "{base} (component {i})"),
            None => write!(f, "{base}"),
        }
    }
}

/// Crossing data of a (shadow) coloring. A coloring with no face colors
/// yields data without shadow colors.
pub fn extract_crossing_data(d: &OrientedDiagram, state: &ShadowColoring) -> Vec<CrossingDatum> {
    let phi = &state.coloring;
    (0..d.crossing_count())
        .map(|c| {
            let sign = d.sign(c);
            let under = if sign > 0 { d.under_in(c) } else { d.under_out(c) };
            let source = d.source_face(c);
            CrossingDatum {
                sign,
                colors: vec![phi.edge(d, under), phi.edge(d, d.over_in(c))],
                shadow: (!state.faces.is_empty()).then(|| state.faces[source]),
                alexander: Some(d.alexander_numbering()[source]),
                component: Some(d.edge_component(d.under_in(c))),
            }
        })
        .collect()
}

/// `Σ sign · (t^{−k})? · tuple` over the data, in coefficient ring `ring`.
pub fn build_chain<R: Ring>(ring: &R, order: usize, data: &[CrossingDatum], mode: ChainMode, degree: usize) -> Result<ChainVector<R>> {
    let mut out = ChainVector::zero(ring.clone(), order, degree);
    for (i, datum) in data.iter().enumerate() {
        let len = datum.colors.len() + usize::from(mode.shadow);
        if len != degree {
            return Err(Error::parameter(format!("crossing datum {i} gives a tuple of length {len}, expected {degree}")));
        }
        if datum.sign != 1 && datum.sign != -1 {
            return Err(Error::parameter(format!("crossing datum {i} has sign {}", datum.sign)));
        }
        if let Some(comp) = mode.component {
            let own = datum.component.ok_or_else(|| Error::parameter(format!("crossing datum {i} has no component")))?;
            if own != comp {
                continue;
            }
        }
        let mut tuple = Vec::with_capacity(degree);
        if mode.shadow {
            tuple.push(datum.shadow.ok_or_else(|| Error::parameter(format!("crossing datum {i} has no shadow color")))?);
        }
        tuple.extend(&datum.colors);
        if let Some(&bad) = tuple.iter().find(|&&x| x >= order) {
            return Err(Error::OutOfRange(format!("color {bad} in crossing datum {i} (quandle of order {order})")));
        }
        let mut coeff = ring.from_i64(datum.sign as i64);
        if mode.twisted {
            let k = datum.alexander.ok_or_else(|| Error::parameter(format!("crossing datum {i} has no Alexander index")))?;
            let w = ring.t_pow(-k).ok_or_else(|| Error::RingMismatch(format!("twisted chains need a Laurent ring, got {}", ring.tag())))?;
            coeff = ring.mul(&coeff, &w);
        }
        out.add_term(&tuple, &coeff);
    }
    Ok(out)
}

/// Untwisted integral chain `c₂` or `c₃` (or its per-component part).
pub fn build_cycle(data: &[CrossingDatum], order: usize, mode: ChainMode) -> Result<ChainVector<Integers>> {
    if mode.twisted {
        return Err(Error::RingMismatch("twisted chains need a Laurent ring; use build_chain".into()));
    }
    let degree = data.first().map_or(2, |d| d.colors.len()) + usize::from(mode.shadow);
    build_chain(&Integers, order, data, mode, degree)
}

/// The state (coloring, optionally with face colors) → its chain.
pub fn state_chain<R: Ring>(
    d: &OrientedDiagram,
    q: &FiniteQuandle,
    ring: &R,
    state: &ShadowColoring,
    mode: ChainMode,
) -> Result<ChainVector<R>> {
    if mode.shadow && state.faces.is_empty() {
        return Err(Error::parameter("shadow mode needs a shadow coloring"));
    }
    let data = extract_crossing_data(d, state);
    build_chain(ring, q.order(), &data, mode, 2 + usize::from(mode.shadow))
}

/// Plain colorings (no face colors) or all shadow colorings, as states.
pub fn states(d: &OrientedDiagram, q: &FiniteQuandle, shadow: bool) -> Result<Vec<ShadowColoring>> {
    if shadow {
        enumerate_shadow_colorings(d, q, None)
    } else {
        Ok(enumerate_colorings(d, q)?.into_iter().map(|c| ShadowColoring { coloring: c, faces: Vec::new() }).collect())
    }
}

/// `H^Q_2` or `H^Q_3` with classification data, computed once.
pub struct CycleClassifier {
    pub group: HomologyGroup,
    order: usize,
    shadow: bool,
}

impl CycleClassifier {
    pub fn new(q: &FiniteQuandle, shadow: bool, limits: &Limits) -> Result<Self> {
        let spec = ComplexSpec::untwisted(q, Theory::Q, Integers)?;
        let group = homology(&spec, 2 + usize::from(shadow), limits)?;
        Ok(CycleClassifier { group, order: q.order(), shadow })
    }

    pub fn classify(&self, d: &OrientedDiagram, state: &ShadowColoring) -> Result<HomologyClass> {
        let data = extract_crossing_data(d, state);
        let mode = if self.shadow { ChainMode::SHADOW } else { ChainMode::PLAIN };
        let z = build_chain(&Integers, self.order, &data, mode, 2 + usize::from(self.shadow))?;
        self.group.classify_cycle(&z)
    }
}

/// Homology class of the fundamental cycle of one state.
pub fn cycle_class(
    d: &OrientedDiagram,
    q: &FiniteQuandle,
    state: &ShadowColoring,
    mode: ChainMode,
    limits: &Limits,
) -> Result<HomologyClass> {
    if mode.component.is_some() {
        return Err(Error::Unsupported("per-component chains are not cycles and have no homology class".into()));
    }
    if mode.twisted {
        return Err(Error::Unsupported("twisted cycle classes (use twisted_is_boundary over a field quotient)".into()));
    }
    CycleClassifier::new(q, mode.shadow, limits)?.classify(d, state)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StateSumOptions {
    pub shadow: bool,
    pub reduced: bool,
    pub component: Option<usize>,
    pub twisted: bool,
    pub set_valued: bool,
}

impl StateSumOptions {
    pub fn mode(&self) -> ChainMode {
        ChainMode { shadow: self.shadow, twisted: self.twisted, component: self.component }
    }
}

/// A multiset of values; printed as a formal sum or as a set with multiplicities.
#[derive(Clone, Debug)]
pub struct InvariantValue<R: Ring> {
    pub ring: R,
    pub set_valued: bool,
    pub reduced: bool,
    pub entries: BTreeMap<R::Elem, usize>,
    pub warnings: Vec<String>,
}

impl<R: Ring> PartialEq for InvariantValue<R> {
    fn eq(&self, other: &Self) -> bool {
        self.entries == other.entries
    }
}

impl<R: Ring> InvariantValue<R> {
    pub fn total(&self) -> usize {
        self.entries.values().sum()
    }

    pub fn multiplicity(&self, v: &R::Elem) -> usize {
        self.entries.get(v).copied().unwrap_or(0)
    }

    /// Number of entries with a nonzero value.
    pub fn nonzero(&self) -> usize {
        self.entries.iter().filter(|(v, _)| !self.ring.is_zero(v)).map(|(_, n)| n).sum()
    }

    pub fn variant(&self) -> &'static str {
        if self.set_valued {
            "set_with_multiplicity"
        } else {
            "state_sum"
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<_> =
            self.entries.iter().map(|(v, n)| serde_json::json!({"value": self.ring.format(v), "multiplicity": n})).collect();
        serde_json::json!({
            "variant": self.variant(),
            "ring": self.ring.tag(),
            "reduced": self.reduced,
            "entries": entries,
            "warnings": self.warnings,
        })
    }
}

impl<R: Ring> fmt::Display for InvariantValue<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = if self.set_valued {
            self.entries.iter().map(|(v, n)| format!("{} (x{n})", self.ring.format(v))).collect()
        } else {
            self.entries.iter().map(|(v, n)| format!("{n}*[{}]", self.ring.format(v))).collect()
        };
        if self.set_valued {
            write!(f, "{{{}}}", parts.join(", "))
        } else if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// The complex a chain of the given mode lives in; twisted shadow chains
/// need the boundary that keeps the region coordinate.
pub fn complex_for<R: Ring>(q: &FiniteQuandle, theory: Theory, shadow: bool, twisted: bool, ring: R) -> Result<ComplexSpec<'_, R>> {
    if twisted && shadow {
        ComplexSpec::twisted_shadow(q, theory, ring)
    } else {
        ComplexSpec::new(q, theory, twisted, ring)
    }
}

fn expected_degree(opts: &StateSumOptions) -> usize {
    2 + usize::from(opts.shadow)
}

/// Checks the cochain against the options and collects warnings.
fn check_state_cochain<R: Ring>(q: &FiniteQuandle, f: &Cochain<R>, opts: &StateSumOptions) -> Result<Vec<String>> {
    let deg = expected_degree(opts);
    if f.degree != deg {
        return Err(Error::parameter(format!("{} state sums need a {deg}-cocycle, got degree {}", opts.mode(), f.degree)));
    }
    if f.order != q.order() {
        return Err(Error::parameter(format!("cocycle is over {} elements, quandle has {}", f.order, q.order())));
    }
    if opts.twisted && f.ring.t().is_none() {
        return Err(Error::RingMismatch(format!("twisted state sums need values in a Laurent ring, got {}", f.ring.tag())));
    }
    let mut warnings = Vec::new();
    if !f.vanishes_outside(&complex_for(q, Theory::Q, opts.shadow, opts.twisted, f.ring.clone())?) {
        warnings.push(
            "the cocycle does not vanish on degenerate tuples: the result is a rack-theory value and is not invariant under R1".into(),
        );
    }
    let spec = complex_for(q, Theory::R, opts.shadow, opts.twisted, f.ring.clone())?;
    if !is_cocycle(&spec, f)? {
        warnings.push("the function is not a cocycle: move invariance is not guaranteed".into());
    }
    Ok(warnings)
}

/// Value of `f` on the chain of each state, in canonical state order.
pub fn state_values<R: Ring>(
    d: &OrientedDiagram,
    q: &FiniteQuandle,
    f: &Cochain<R>,
    opts: &StateSumOptions,
) -> Result<Vec<(ShadowColoring, R::Elem)>> {
    let mut out = Vec::new();
    for s in states(d, q, opts.shadow)? {
        let chain = state_chain(d, q, &f.ring, &s, opts.mode())?;
        let v = f.evaluate(&chain)?;
        out.push((s, v));
    }
    Ok(out)
}

/// Least element of `{tᵏ v}`; the reduced twisted value of an orbit.
pub fn normalize_twisted<R: Ring>(ring: &R, v: &R::Elem) -> R::Elem {
    let t = ring.t().expect("Laurent ring");
    let mut best = v.clone();
    let mut cur = ring.mul(v, &t);
    let mut seen = BTreeSet::from([v.clone()]);
    while seen.insert(cur.clone()) {
        if cur < best {
            best = cur.clone();
        }
        cur = ring.mul(&cur, &t);
    }
    best
}

pub fn state_sum<R: Ring>(d: &OrientedDiagram, q: &FiniteQuandle, f: &Cochain<R>, opts: &StateSumOptions) -> Result<InvariantValue<R>> {
    let warnings = check_state_cochain(q, f, opts)?;
    let values = state_values(d, q, f, opts)?;
    let mut entries = BTreeMap::new();
    if opts.reduced {
        let items: Vec<ShadowColoring> = values.iter().map(|(s, _)| s.clone()).collect();
        let orbits = if opts.shadow {
            coloring::shadow_orbits(&items, q, None)?
        } else {
            let plain: Vec<Coloring> = items.iter().map(|s| s.coloring.clone()).collect();
            coloring::coloring_orbits(&plain, q)?
        };
        for orbit in orbits {
            let v = &values[orbit[0]].1;
            let v = if opts.twisted { normalize_twisted(&f.ring, v) } else { v.clone() };
            *entries.entry(v).or_insert(0) += 1;
        }
    } else {
        for (_, v) in values {
            *entries.entry(v).or_insert(0) += 1;
        }
    }
    Ok(InvariantValue { ring: f.ring.clone(), set_valued: opts.set_valued, reduced: opts.reduced, entries, warnings })
}

/// Chain built from user-supplied crossing data, with its quandle boundary.
#[derive(Clone, Debug)]
pub struct GenericChainReport {
    pub chain: ChainVector<Integers>,
    pub boundary: ChainVector<Integers>,
    pub is_cycle: bool,
}

pub fn build_generic_chain(n: usize, q: &FiniteQuandle, data: &[CrossingDatum], mode: ChainMode) -> Result<GenericChainReport> {
    if n == 0 {
        return Err(Error::OutOfRange("n must be at least 1".into()));
    }
    if mode.twisted {
        return Err(Error::Unsupported("twisted generic chains".into()));
    }
    let degree = n + 1 + usize::from(mode.shadow);
    let chain = build_chain(&Integers, q.order(), data, mode, degree)?;
    let spec = ComplexSpec::untwisted(q, Theory::Q, Integers)?;
    let boundary = spec.boundary(&chain)?;
    let is_cycle = boundary.is_zero();
    Ok(GenericChainReport { chain, boundary, is_cycle })
}

/// One line of a move report.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct MoveReport {
    pub family: String,
    pub quandle: String,
    pub colorings: usize,
    pub checks: Vec<Check>,
}

impl MoveReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed, detail: detail.into() });
    }
}

impl fmt::Display for MoveReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} move, {} ({} colorings)", self.family, self.quandle, self.colorings)?;
        for c in &self.checks {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            if c.detail.is_empty() {
                writeln!(f, "  {mark} {}", c.name)?;
            } else {
                writeln!(f, "  {mark} {}: {}", c.name, c.detail)?;
            }
        }
        Ok(())
    }
}

/// Cocycles used by [`verify_move_invariance`].
#[derive(Clone, Debug)]
pub struct MoveCheckInputs<R: Ring, T: Ring> {
    /// A 2-cocycle for plain state sums.
    pub plain: Option<Cochain<R>>,
    /// A 3-cocycle for shadow state sums.
    pub shadow: Option<Cochain<R>>,
    /// A twisted 2-cocycle.
    pub twisted: Option<Cochain<T>>,
    /// A twisted 3-cocycle.
    pub twisted_shadow: Option<Cochain<T>>,
}

impl<R: Ring, T: Ring> Default for MoveCheckInputs<R, T> {
    fn default() -> Self {
        MoveCheckInputs { plain: None, shadow: None, twisted: None, twisted_shadow: None }
    }
}

/// Matches states of `before` and `after` via the coloring bijection; face
/// colors are matched by the color of the unbounded face.
fn match_states(
    before: &OrientedDiagram,
    mv: &MoveResult,
    q: &FiniteQuandle,
    shadow: bool,
) -> Result<Vec<(ShadowColoring, ShadowColoring)>> {
    let pairs = coloring::move_bijection(before, &mv.diagram, &mv.preserved, q)?;
    let mut out = Vec::new();
    for (a, b) in pairs {
        if shadow {
            for base in 0..q.order() {
                let sa = coloring::extend_to_shadow(before, q, &a, base, None)?;
                let sb = coloring::extend_to_shadow(&mv.diagram, q, &b, base, None)?;
                out.push((sa, sb));
            }
        } else {
            out.push((ShadowColoring { coloring: a, faces: Vec::new() }, ShadowColoring { coloring: b, faces: Vec::new() }));
        }
    }
    Ok(out)
}

/// Component correspondence across a move, from the preserved edges.
fn component_map(before: &OrientedDiagram, mv: &MoveResult) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; before.component_count()];
    for &(a, b) in &mv.preserved {
        map[before.edge_component(a)] = mv.diagram.edge_component(b);
    }
    map.iter().all(|&m| m != usize::MAX).then_some(map)
}

/// Search `X⁴` (or `X³`) for `x` and a sign with `diff = ±∂x` in the rack complex.
fn find_pass_tuple(q: &FiniteQuandle, diff: &ChainVector<Integers>) -> Result<Option<(i64, Vec<usize>)>> {
    let spec = ComplexSpec::untwisted(q, Theory::R, Integers)?;
    let n = diff.degree() + 1;
    let k = q.order();
    let total = k.pow(n as u32);
    for idx in 0..total {
        let x = crate::chains::unpack(k, n, idx as u64);
        let bx = spec.boundary(&ChainVector::basis(Integers, k, &x))?;
        for sign in [1i64, -1] {
            if bx.scale(&sign) == *diff {
                return Ok(Some((sign, x)));
            }
        }
    }
    Ok(None)
}

/// Checks every invariance statement for one move pair and quandle.
pub fn verify_move_invariance<R: Ring, T: Ring>(
    before: &OrientedDiagram,
    mv: &MoveResult,
    q: &FiniteQuandle,
    inputs: &MoveCheckInputs<R, T>,
    limits: &Limits,
) -> Result<MoveReport> {
    let after = &mv.diagram;
    let family = mv.kind.family();
    let mut report = MoveReport { family: family.into(), quandle: q.name().into(), colorings: 0, checks: Vec::new() };
    let plain = match match_states(before, mv, q, false) {
        Ok(p) => p,
        Err(e) => {
            report.push("coloring bijection", false, e.to_string());
            return Ok(report);
        }
    };
    report.colorings = plain.len();
    report.push("coloring bijection", true, format!("{} colorings matched", plain.len()));
    let shadow = match_states(before, mv, q, true)?;
    report.push("shadow counts", shadow.len() == q.order() * plain.len(), format!("{} shadow colorings", shadow.len()));
    let quandle_spec = ComplexSpec::untwisted(q, Theory::Q, Integers)?;

    for (shadow_mode, list) in [(false, &plain), (true, &shadow)] {
        let mode = if shadow_mode { ChainMode::SHADOW } else { ChainMode::PLAIN };
        let label = if shadow_mode { "shadow" } else { "plain" };
        let classifier = CycleClassifier::new(q, shadow_mode, limits)?;
        let mut class_ok = true;
        let mut diff_ok = true;
        let mut diff_detail = String::new();
        let mut found_tuples = BTreeSet::new();
        for (a, b) in list.iter() {
            let ca = state_chain(before, q, &Integers, a, mode)?;
            let cb = state_chain(after, q, &Integers, b, mode)?;
            let cycles = quandle_spec.boundary(&ca)?.is_zero() && quandle_spec.boundary(&cb)?.is_zero();
            if !cycles || classifier.classify(before, a)? != classifier.classify(after, b)? {
                class_ok = false;
            }
            let diff = ca.try_sub(&cb)?;
            match family {
                "R1" => {
                    if !diff.is_degenerate_supported() || diff.len() > 1 {
                        diff_ok = false;
                        diff_detail = format!("difference {diff} for {}", a.coloring);
                    }
                }
                "R2" => {
                    if !diff.is_zero() {
                        diff_ok = false;
                        diff_detail = format!("difference {diff} for {}", a.coloring);
                    }
                }
                _ => match find_pass_tuple(q, &diff)? {
                    Some((s, x)) => {
                        found_tuples.insert((s, x));
                    }
                    None => {
                        diff_ok = false;
                        diff_detail = format!("difference {diff} is not ±∂ of a basis tuple");
                    }
                },
            }
        }
        report.push(&format!("{label} cycles and classes"), class_ok, String::new());
        let name = match family {
            "R1" => format!("{label} R1 difference degenerate"),
            "R2" => format!("{label} R2 difference zero"),
            _ => format!("{label} R3 difference is ±∂ of one tuple"),
        };
        if diff_ok && family == "R3" {
            diff_detail = format!("{} distinct tuples", found_tuples.len());
        }
        report.push(&name, diff_ok, diff_detail);

        // per-component differences are boundaries
        match component_map(before, mv) {
            Some(cmap) => {
                let mut ok = true;
                for (i, &j) in cmap.iter().enumerate() {
                    let mi = ChainMode { component: Some(i), ..mode };
                    let mj = ChainMode { component: Some(j), ..mode };
                    for (a, b) in list.iter() {
                        let diff = state_chain(before, q, &Integers, a, mi)?.try_sub(&state_chain(after, q, &Integers, b, mj)?)?;
                        if !classifier.group.is_boundary(&diff)? {
                            ok = false;
                        }
                    }
                }
                report.push(&format!("{label} per-component differences are boundaries"), ok, String::new());
            }
            None => report.push(
                &format!("{label} per-component differences are boundaries"),
                true,
                "skipped: no preserved edge on some component",
            ),
        }
    }

    let cmap = component_map(before, mv);
    let mut sums = |name: &str, ok: bool, detail: String| report.push(name, ok, detail);
    if let Some(f) = &inputs.plain {
        let (ok, detail) = compare_sums(before, after, q, f, &plain, false, false, cmap.as_deref())?;
        sums("plain state sums", ok, detail);
    }
    if let Some(f) = &inputs.shadow {
        let (ok, detail) = compare_sums(before, after, q, f, &shadow, true, false, cmap.as_deref())?;
        sums("shadow state sums", ok, detail);
    }
    if let Some(f) = &inputs.twisted {
        let (ok, detail) = compare_sums(before, after, q, f, &plain, false, true, cmap.as_deref())?;
        sums("twisted state sums", ok, detail);
        let ok = twisted_cycles(before, q, f, &plain, false, true)? && twisted_cycles(after, q, f, &plain, false, false)?;
        sums("twisted cycles", ok, String::new());
    }
    if let Some(f) = &inputs.twisted_shadow {
        let (ok, detail) = compare_sums(before, after, q, f, &shadow, true, true, cmap.as_deref())?;
        sums("twisted shadow state sums", ok, detail);
        let ok = twisted_cycles(before, q, f, &shadow, true, true)? && twisted_cycles(after, q, f, &shadow, true, false)?;
        sums("twisted shadow cycles", ok, String::new());
    }
    Ok(report)
}

fn twisted_cycles<T: Ring>(
    d: &OrientedDiagram,
    q: &FiniteQuandle,
    f: &Cochain<T>,
    pairs: &[(ShadowColoring, ShadowColoring)],
    shadow: bool,
    first: bool,
) -> Result<bool> {
    let spec = complex_for(q, Theory::Q, shadow, true, f.ring.clone())?;
    let mode = ChainMode { shadow, twisted: true, component: None };
    for (a, b) in pairs {
        let s = if first { a } else { b };
        if !spec.boundary(&state_chain(d, q, &f.ring, s, mode)?)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Per-state equality of values, then equality of every state-sum variant.
#[allow(clippy::too_many_arguments)]
fn compare_sums<R: Ring>(
    before: &OrientedDiagram,
    after: &OrientedDiagram,
    q: &FiniteQuandle,
    f: &Cochain<R>,
    pairs: &[(ShadowColoring, ShadowColoring)],
    shadow: bool,
    twisted: bool,
    cmap: Option<&[usize]>,
) -> Result<(bool, String)> {
    let mode = ChainMode { shadow, twisted, component: None };
    for (a, b) in pairs {
        let va = f.evaluate(&state_chain(before, q, &f.ring, a, mode)?)?;
        let vb = f.evaluate(&state_chain(after, q, &f.ring, b, mode)?)?;
        if va != vb {
            return Ok((false, format!("state {a}: {} vs {}", f.ring.format(&va), f.ring.format(&vb))));
        }
    }
    let mut variants = vec![
        StateSumOptions { shadow, twisted, ..Default::default() },
        StateSumOptions { shadow, twisted, reduced: true, ..Default::default() },
        StateSumOptions { shadow, twisted, set_valued: true, ..Default::default() },
    ];
    let mut comp_pairs = Vec::new();
    if let Some(cmap) = cmap {
        for (i, &j) in cmap.iter().enumerate() {
            comp_pairs.push((variants.len(), j));
            variants.push(StateSumOptions { shadow, twisted, component: Some(i), ..Default::default() });
        }
    }
    for (idx, opts) in variants.iter().enumerate() {
        let other = match comp_pairs.iter().find(|(v, _)| *v == idx) {
            Some(&(_, j)) => StateSumOptions { component: Some(j), ..opts.clone() },
            None => opts.clone(),
        };
        let x = state_sum(before, q, f, opts)?;
        let y = state_sum(after, q, f, &other)?;
        if x != y {
            return Ok((false, format!("{:?}: {x} vs {y}", opts)));
        }
    }
    Ok((true, format!("{} variants", variants.len())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chains::gamma_truncate;
    use crate::ring::IntegersMod;

    fn trefoil() -> OrientedDiagram {
        OrientedDiagram::parse_pd("X(4,2,5,1);X(6,4,1,3);X(2,6,3,5)").unwrap()
    }

    #[test]
    fn constant_data_are_degenerate() {
        let d = trefoil();
        let s = ShadowColoring { coloring: Coloring::new(vec![1; 3]), faces: Vec::new() };
        let data = extract_crossing_data(&d, &s);
        assert!(data.iter().all(|x| x.sign == 1 && x.colors == vec![1, 1]));
        let c = build_cycle(&data, 3, ChainMode::PLAIN).unwrap();
        assert_eq!(c.coefficient(&[1, 1]), 3);
        assert!(c.project_quandle().is_zero());
    }

    #[test]
    fn trefoil_cycles() {
        let d = trefoil();
        let q = FiniteQuandle::dihedral(3).unwrap();
        let spec = ComplexSpec::untwisted(&q, Theory::Q, Integers).unwrap();
        for s in states(&d, &q, true).unwrap() {
            let c3 = state_chain(&d, &q, &Integers, &s, ChainMode::SHADOW).unwrap();
            let c2 = state_chain(&d, &q, &Integers, &s, ChainMode::PLAIN).unwrap();
            assert!(spec.boundary(&c3).unwrap().is_zero());
            assert!(spec.boundary(&c2).unwrap().is_zero());
            assert_eq!(gamma_truncate(&c3).unwrap(), c2);
        }
    }

    #[test]
    fn zero_cocycle_sum() {
        let d = trefoil();
        let q = FiniteQuandle::dihedral(3).unwrap();
        let f = Cochain::zero(IntegersMod::new(3).unwrap(), 3, 2);
        let v = state_sum(&d, &q, &f, &StateSumOptions::default()).unwrap();
        assert_eq!(v.total(), 9);
        assert_eq!(v.nonzero(), 0);
        assert!(v.warnings.is_empty());
    }

    #[test]
    fn unknot_class_is_zero() {
        let q = FiniteQuandle::dihedral(3).unwrap();
        let u = OrientedDiagram::unknot();
        for s in states(&u, &q, false).unwrap() {
            assert!(cycle_class(&u, &q, &s, ChainMode::PLAIN, &Limits::default()).unwrap().is_zero());
        }
        let s = &states(&u, &q, false).unwrap()[0];
        assert!(cycle_class(&u, &q, s, ChainMode::per_component(0), &Limits::default()).is_err());
    }

    #[test]
    fn mode_names() {
        assert_eq!(ChainMode::parse("per_component:1").unwrap(), ChainMode::per_component(1));
        assert_eq!(ChainMode::parse("twisted_shadow").unwrap(), ChainMode::TWISTED_SHADOW);
        assert!(ChainMode::parse("per_component").is_err());
        assert!(ChainMode::parse("shadow:2").is_err());
    }
}
