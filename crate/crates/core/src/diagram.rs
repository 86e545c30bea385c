//! Oriented classical link diagrams given by PD codes.
//!
//! Each crossing lists its four incident edges counterclockwise starting at
//! the incoming under-edge, so slots are 0 = under-in, 2 = under-out and the
//! over strand occupies slots 1 and 3. Drawn with the under strand pointing
//! north, slot 0 is south, 1 east, 2 north and 3 west. A crossing is positive
//! when the over strand enters at slot 3.
//!
//! Co-orientation normals are strand directions rotated +90°, i.e. they point
//! from the face on the right of an edge to the face on its left.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

mod moves;

pub use moves::{MoveKind, MoveResult, R1Side};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Port {
    pub crossing: usize,
    pub slot: usize,
}

impl Port {
    fn new(crossing: usize, slot: usize) -> Self {
        Port { crossing, slot }
    }

    fn index(&self) -> usize {
        self.crossing * 4 + self.slot
    }

    fn turn(&self, k: usize) -> Port {
        Port::new(self.crossing, (self.slot + k) % 4)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub tail: Port,
    pub head: Port,
}

/// Which side of an oriented edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    Right,
    Left,
}

/// How the unbounded face is specified when assembling a diagram.
#[derive(Clone, Debug)]
enum Outer {
    /// The face on the given side of an edge.
    Dart(usize, Side),
    /// The face whose boundary edges are exactly these (optionally with sides).
    Edges(Vec<usize>, Option<Vec<Side>>),
    /// Largest face, lowest index on ties.
    Largest,
}

/// An oriented link diagram with its derived combinatorics.
#[derive(Clone, Debug)]
pub struct OrientedDiagram {
    /// `slots[c][s]` = edge at slot `s` of crossing `c`.
    slots: Vec<[usize; 4]>,
    edges: Vec<Edge>,
    positive: Vec<bool>,
    components: Vec<Vec<usize>>,
    edge_component: Vec<usize>,
    arcs: Vec<Vec<usize>>,
    edge_arc: Vec<usize>,
    /// Face of the dart leaving each port (the face on its right).
    port_face: Vec<usize>,
    faces: Vec<Vec<Port>>,
    unbounded: usize,
    alexander: Vec<i64>,
}

impl PartialEq for OrientedDiagram {
    fn eq(&self, other: &Self) -> bool {
        self.pd() == other.pd() && self.unbounded_signature() == other.unbounded_signature()
    }
}

impl Eq for OrientedDiagram {}

impl OrientedDiagram {
    /// The crossingless unknot, oriented counterclockwise.
    pub fn unknot() -> Self {
        OrientedDiagram {
            slots: vec![],
            edges: vec![],
            positive: vec![],
            components: vec![vec![0]],
            edge_component: vec![0],
            arcs: vec![vec![0]],
            edge_arc: vec![0],
            port_face: vec![],
            faces: vec![vec![], vec![]],
            unbounded: 0,
            alexander: vec![0, 1],
        }
    }

    pub fn is_crossingless(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn crossing_count(&self) -> usize {
        self.slots.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_component.len()
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn edge_component(&self, e: usize) -> usize {
        self.edge_component[e]
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[Vec<usize>] {
        &self.arcs
    }

    pub fn edge_arc(&self, e: usize) -> usize {
        self.edge_arc[e]
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn unbounded_face(&self) -> usize {
        self.unbounded
    }

    pub fn sign(&self, c: usize) -> i32 {
        if self.positive[c] {
            1
        } else {
            -1
        }
    }

    pub fn signs(&self) -> Vec<i32> {
        (0..self.crossing_count()).map(|c| self.sign(c)).collect()
    }

    pub fn writhe(&self) -> i32 {
        self.signs().iter().sum()
    }

    pub fn slot_edge(&self, c: usize, s: usize) -> usize {
        self.slots[c][s]
    }

    pub fn under_in(&self, c: usize) -> usize {
        self.slots[c][0]
    }

    pub fn under_out(&self, c: usize) -> usize {
        self.slots[c][2]
    }

    /// Incoming over edge.
    pub fn over_in(&self, c: usize) -> usize {
        self.slots[c][if self.positive[c] { 3 } else { 1 }]
    }

    pub fn over_out(&self, c: usize) -> usize {
        self.slots[c][if self.positive[c] { 1 } else { 3 }]
    }

    pub fn over_arc(&self, c: usize) -> usize {
        self.edge_arc[self.over_in(c)]
    }

    pub fn edge(&self, e: usize) -> Option<Edge> {
        self.edges.get(e).copied()
    }

    /// Face on the right of edge `e` (the normal points away from it).
    pub fn right_face(&self, e: usize) -> usize {
        if self.is_crossingless() {
            return 0;
        }
        self.port_face[self.edges[e].tail.index()]
    }

    /// Face on the left of edge `e` (the normal points into it).
    pub fn left_face(&self, e: usize) -> usize {
        if self.is_crossingless() {
            return 1;
        }
        self.port_face[self.edges[e].head.index()]
    }

    pub fn face_on(&self, e: usize, side: Side) -> usize {
        match side {
            Side::Right => self.right_face(e),
            Side::Left => self.left_face(e),
        }
    }

    /// Face containing the corner between slots `s` and `s+1` of crossing `c`.
    pub fn corner_face(&self, c: usize, s: usize) -> usize {
        self.port_face[Port::new(c, (s + 1) % 4).index()]
    }

    /// Corner from which both co-orientation normals point away, as the lower slot.
    pub fn source_corner(&self, c: usize) -> usize {
        if self.positive[c] {
            0
        } else {
            1
        }
    }

    pub fn source_face(&self, c: usize) -> usize {
        self.corner_face(c, self.source_corner(c))
    }

    /// Edges bounding each face, one entry per dart (`(edge, side)`).
    pub fn faces(&self) -> Vec<Vec<(usize, Side)>> {
        if self.is_crossingless() {
            return vec![vec![(0, Side::Right)], vec![(0, Side::Left)]];
        }
        self.faces.iter().map(|darts| darts.iter().map(|p| self.dart_edge(*p)).collect()).collect()
    }

    fn dart_edge(&self, p: Port) -> (usize, Side) {
        let e = self.slots[p.crossing][p.slot];
        if self.edges[e].tail == p {
            (e, Side::Right)
        } else {
            (e, Side::Left)
        }
    }

    pub fn alexander_numbering(&self) -> &[i64] {
        &self.alexander
    }

    /// PD code with 1-based labels.
    pub fn pd(&self) -> Vec<[usize; 4]> {
        self.slots.iter().map(|s| [s[0] + 1, s[1] + 1, s[2] + 1, s[3] + 1]).collect()
    }

    pub fn pd_string(&self) -> String {
        if self.is_crossingless() {
            return "U".into();
        }
        self.pd().iter().map(|x| format!("X({},{},{},{})", x[0], x[1], x[2], x[3])).collect::<Vec<_>>().join(";")
    }

    fn unbounded_signature(&self) -> Vec<(usize, Side)> {
        let mut v = self.faces().swap_remove(self.unbounded);
        v.sort_by_key(|&(e, s)| (e, s == Side::Left));
        v
    }

    /// Reverse the orientation of one component.
    pub fn reverse_component(&self, i: usize) -> Result<OrientedDiagram> {
        if i >= self.component_count() {
            return Err(Error::OutOfRange(format!("component {i} of {}", self.component_count())));
        }
        if self.is_crossingless() {
            return Err(Error::Unsupported("reversing the crossingless unknot (use the counterclockwise representative)".into()));
        }
        // Reversal swaps in/out at every passage of the component, so each
        // crossing must be rotated to keep slot 0 the incoming under-edge.
        let on: BTreeSet<usize> = self.components[i].iter().copied().collect();
        let mut edges: Vec<Edge> = self
            .edges
            .iter()
            .enumerate()
            .map(|(e, ed)| if on.contains(&e) { Edge { tail: ed.head, head: ed.tail } } else { *ed })
            .collect();
        let rotation: Vec<usize> = (0..self.crossing_count()).map(|c| if on.contains(&self.slots[c][0]) { 2 } else { 0 }).collect();
        for ed in edges.iter_mut() {
            ed.tail = ed.tail.turn(4 - rotation[ed.tail.crossing]);
            ed.head = ed.head.turn(4 - rotation[ed.head.crossing]);
        }
        let outer = Outer::Dart(self.faces()[self.unbounded][0].0, {
            let (e, s) = self.faces()[self.unbounded][0];
            let flip = on.contains(&e);
            match (s, flip) {
                (Side::Right, false) | (Side::Left, true) => Side::Right,
                _ => Side::Left,
            }
        });
        let raw = assemble(self.crossing_count(), edges, outer)?;
        Ok(raw.canonical().0)
    }

    /// Parse `"U"` or `"X(a,b,c,d);X(...)"` (also accepts `"[[a,b,c,d],...]"`).
    pub fn parse_pd(text: &str) -> Result<OrientedDiagram> {
        Self::parse_pd_with_outer(text, None)
    }

    pub fn parse_pd_with_outer(text: &str, unbounded: Option<&[i64]>) -> Result<OrientedDiagram> {
        let t = text.trim();
        if t.eq_ignore_ascii_case("U") {
            return Ok(Self::unknot());
        }
        if t.is_empty() {
            return Err(Error::format("no crossings (write \"U\" for the crossingless unknot)"));
        }
        let tuples = parse_pd_tuples(t)?;
        Self::from_pd(&tuples, unbounded, None)
    }

    /// Build from PD tuples with arbitrary positive labels.
    pub fn from_pd(tuples: &[[i64; 4]], unbounded: Option<&[i64]>, unbounded_sides: Option<&[Side]>) -> Result<OrientedDiagram> {
        if tuples.is_empty() {
            return Err(Error::format("no crossings (write \"U\" for the crossingless unknot)"));
        }
        let mut occurrences: BTreeMap<i64, Vec<Port>> = BTreeMap::new();
        for (c, x) in tuples.iter().enumerate() {
            for (s, &label) in x.iter().enumerate() {
                occurrences.entry(label).or_default().push(Port::new(c, s));
            }
        }
        for (label, occ) in &occurrences {
            if occ.len() != 2 {
                return Err(Error::format(format!("edge label {label} appears {} time(s), expected 2", occ.len())));
            }
        }
        let labels: Vec<i64> = occurrences.keys().copied().collect();
        let index: BTreeMap<i64, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let ends: Vec<[Port; 2]> = occurrences.values().map(|o| [o[0], o[1]]).collect();
        let slot_label = |p: Port| index[&tuples[p.crossing][p.slot]];
        // strand walk: from an end of edge e at port p, the strand continues through p+2
        let mut oriented: Vec<Option<Edge>> = vec![None; labels.len()];
        for start in 0..labels.len() {
            if oriented[start].is_some() {
                continue;
            }
            // collect the component as (edge, from, to) in one walking direction
            let mut walk = Vec::new();
            let mut e = start;
            let mut to = ends[e][1];
            loop {
                let from = if ends[e][0] == to { ends[e][1] } else { ends[e][0] };
                walk.push((e, from, to));
                let next_port = to.turn(2);
                e = slot_label(next_port);
                to = if ends[e][0] == next_port { ends[e][1] } else { ends[e][0] };
                if e == start && walk.len() > 0 && walk[0].1 == next_port {
                    break;
                }
                if walk.len() > labels.len() {
                    return Err(Error::format("strand walk did not close"));
                }
            }
            let mut forward: Option<bool> = None;
            for &(_, from, to) in &walk {
                for (p, fwd_if) in [(to, 0usize), (from, 2usize)] {
                    if p.slot == 0 || p.slot == 2 {
                        let f = p.slot == fwd_if;
                        match forward {
                            None => forward = Some(f),
                            Some(prev) if prev != f => {
                                return Err(Error::format(format!(
                                    "orientation inconsistency along the strand through label {}",
                                    labels[start]
                                )))
                            }
                            _ => {}
                        }
                    }
                }
            }
            let forward = forward.unwrap_or_else(|| {
                // no under passage: labels increase along the component
                let ls: Vec<i64> = walk.iter().map(|w| labels[w.0]).collect();
                let m = ls.iter().enumerate().min_by_key(|x| x.1).unwrap().0;
                let next = ls[(m + 1) % ls.len()];
                let prev = ls[(m + ls.len() - 1) % ls.len()];
                next <= prev
            });
            for &(e, from, to) in &walk {
                oriented[e] = Some(if forward { Edge { tail: from, head: to } } else { Edge { tail: to, head: from } });
            }
        }
        let edges: Vec<Edge> = oriented.into_iter().map(|e| e.unwrap()).collect();
        let outer = match unbounded {
            Some(ids) => {
                let mut v = Vec::new();
                for id in ids {
                    v.push(*index.get(id).ok_or_else(|| Error::format(format!("unbounded face names unknown edge {id}")))?);
                }
                Outer::Edges(v, unbounded_sides.map(|s| s.to_vec()))
            }
            None => Outer::Largest,
        };
        let raw = assemble(tuples.len(), edges, outer)?;
        Ok(raw.canonical().0)
    }

    /// Relabel into canonical form; returns the diagram and the old → new edge map.
    fn canonical(&self) -> (OrientedDiagram, Vec<usize>) {
        if self.is_crossingless() {
            return (self.clone(), vec![0]);
        }
        let lens: Vec<usize> = self.components.iter().map(Vec::len).collect();
        let total: usize = lens.iter().product();
        let label_for = |starts: &[usize]| -> Vec<usize> {
            let mut label = vec![0; self.edge_count()];
            let mut next = 0;
            for (ci, comp) in self.components.iter().enumerate() {
                for k in 0..comp.len() {
                    label[comp[(starts[ci] + k) % comp.len()]] = next;
                    next += 1;
                }
            }
            label
        };
        let outer_darts = self.faces().swap_remove(self.unbounded);
        let pd_for = |label: &[usize]| -> (Vec<[usize; 4]>, Vec<(usize, bool)>) {
            let mut v: Vec<[usize; 4]> = self.slots.iter().map(|s| [label[s[0]], label[s[1]], label[s[2]], label[s[3]]]).collect();
            v.sort();
            let mut o: Vec<(usize, bool)> = outer_darts.iter().map(|&(e, s)| (label[e], s == Side::Left)).collect();
            o.sort();
            (v, o)
        };
        let mut best_starts = vec![0; lens.len()];
        if total <= 4096 {
            let mut best = None;
            let mut starts = vec![0; lens.len()];
            for _ in 0..total {
                let pd = pd_for(&label_for(&starts));
                if best.as_ref().map_or(true, |b| pd < *b) {
                    best = Some(pd);
                    best_starts = starts.clone();
                }
                for (i, s) in starts.iter_mut().enumerate() {
                    *s += 1;
                    if *s < lens[i] {
                        break;
                    }
                    *s = 0;
                }
            }
        } else {
            for i in 0..lens.len() {
                let mut best = None;
                let mut starts = best_starts.clone();
                for s in 0..lens[i] {
                    starts[i] = s;
                    let pd = pd_for(&label_for(&starts));
                    if best.as_ref().map_or(true, |b| pd < *b) {
                        best = Some(pd);
                        best_starts[i] = s;
                    }
                }
            }
        }
        let label = label_for(&best_starts);
        // crossings in sorted PD order
        let mut order: Vec<usize> = (0..self.crossing_count()).collect();
        order.sort_by_key(|&c| {
            let s = self.slots[c];
            [label[s[0]], label[s[1]], label[s[2]], label[s[3]]]
        });
        let mut new_of_crossing = vec![0; order.len()];
        for (new, &old) in order.iter().enumerate() {
            new_of_crossing[old] = new;
        }
        let remap = |p: Port| Port::new(new_of_crossing[p.crossing], p.slot);
        let mut edges = vec![Edge { tail: Port::new(0, 0), head: Port::new(0, 0) }; self.edge_count()];
        for (e, ed) in self.edges.iter().enumerate() {
            edges[label[e]] = Edge { tail: remap(ed.tail), head: remap(ed.head) };
        }
        let (e0, side) = self.faces()[self.unbounded][0];
        let d = assemble(self.crossing_count(), edges, Outer::Dart(label[e0], side)).expect("relabeling preserves validity");
        (d, label)
    }

    pub fn to_json(&self) -> serde_json::Value {
        if self.is_crossingless() {
            return serde_json::json!({"pd": "U"});
        }
        let outer = self.faces().swap_remove(self.unbounded);
        let ids: Vec<usize> = outer.iter().map(|(e, _)| e + 1).collect();
        let sides: Vec<&str> = outer.iter().map(|(_, s)| if *s == Side::Right { "R" } else { "L" }).collect();
        serde_json::json!({"pd": self.pd(), "unbounded_face": ids, "unbounded_sides": sides})
    }

    pub fn from_json_str(text: &str) -> Result<OrientedDiagram> {
        let v: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::format(format!("diagram JSON: {e}")))?;
        Self::from_json(&v)
    }

    pub fn from_json(v: &serde_json::Value) -> Result<OrientedDiagram> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Pd {
            Literal(String),
            Tuples(Vec<[i64; 4]>),
        }
        #[derive(Deserialize)]
        struct Doc {
            pd: Pd,
            #[serde(default)]
            unbounded_face: Option<Vec<i64>>,
            #[serde(default)]
            unbounded_sides: Option<Vec<String>>,
        }
        let doc: Doc = serde_json::from_value(v.clone()).map_err(|e| Error::format(format!("diagram JSON: {e}")))?;
        match doc.pd {
            Pd::Literal(s) => Self::parse_pd(&s),
            Pd::Tuples(t) => {
                let sides = match doc.unbounded_sides {
                    Some(v) => Some(
                        v.iter()
                            .map(|s| match s.as_str() {
                                "R" => Ok(Side::Right),
                                "L" => Ok(Side::Left),
                                other => Err(Error::format(format!("unbounded side `{other}` (expected R or L)"))),
                            })
                            .collect::<Result<Vec<_>>>()?,
                    ),
                    None => None,
                };
                Self::from_pd(&t, doc.unbounded_face.as_deref(), sides.as_deref())
            }
        }
    }

    pub fn summary(&self) -> DiagramSummary {
        DiagramSummary {
            pd: self.pd_string(),
            crossings: self.crossing_count(),
            edges: self.edge_count(),
            arcs: self.arc_count(),
            faces: self.face_count(),
            components: self.component_count(),
            signs: self.signs(),
            writhe: self.writhe(),
            unbounded_face: self.unbounded,
            alexander: self.alexander.clone(),
        }
    }

    // ----- internal access for moves -----
}

#[derive(Clone, Debug, Serialize)]
pub struct DiagramSummary {
    pub pd: String,
    pub crossings: usize,
    pub edges: usize,
    pub arcs: usize,
    pub faces: usize,
    pub components: usize,
    pub signs: Vec<i32>,
    pub writhe: i32,
    pub unbounded_face: usize,
    pub alexander: Vec<i64>,
}

impl fmt::Display for DiagramSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "pd: {}", self.pd)?;
        writeln!(f, "crossings: {}", self.crossings)?;
        writeln!(f, "components: {}", self.components)?;
        writeln!(f, "arcs: {}", self.arcs)?;
        writeln!(f, "faces: {}", self.faces)?;
        let signs: Vec<String> = self.signs.iter().map(|s| if *s > 0 { "+1".into() } else { "-1".into() }).collect();
        writeln!(f, "signs: [{}]", signs.join(", "))?;
        writeln!(f, "writhe: {}", self.writhe)?;
        writeln!(f, "unbounded face: {}", self.unbounded_face)?;
        write!(f, "alexander numbering: {:?}", self.alexander)
    }
}

fn parse_pd_tuples(t: &str) -> Result<Vec<[i64; 4]>> {
    if t.starts_with('[') {
        return serde_json::from_str::<Vec<[i64; 4]>>(t).map_err(|e| Error::format(format!("PD array: {e}")));
    }
    let mut out = Vec::new();
    for part in t.split(';').map(str::trim).filter(|p| !p.is_empty()) {
        let inner = part
            .strip_prefix('X')
            .or_else(|| part.strip_prefix('x'))
            .map(str::trim)
            .and_then(|p| p.strip_prefix('(').or_else(|| p.strip_prefix('[')))
            .and_then(|p| p.strip_suffix(')').or_else(|| p.strip_suffix(']')))
            .ok_or_else(|| Error::format(format!("malformed crossing `{part}` (expected X(a,b,c,d))")))?;
        let nums: Vec<i64> = inner
            .split(',')
            .map(|s| s.trim().parse::<i64>().map_err(|_| Error::format(format!("bad edge label in `{part}`"))))
            .collect::<Result<_>>()?;
        if nums.len() != 4 {
            return Err(Error::format(format!("crossing `{part}` has {} labels, expected 4", nums.len())));
        }
        out.push([nums[0], nums[1], nums[2], nums[3]]);
    }
    if out.is_empty() {
        return Err(Error::format("no crossings (write \"U\" for the crossingless unknot)"));
    }
    Ok(out)
}

/// Build a diagram from oriented edges between crossing ports and derive everything.
fn assemble(ncross: usize, edges: Vec<Edge>, outer: Outer) -> Result<OrientedDiagram> {
    if ncross == 0 {
        return Err(Error::format("no crossings"));
    }
    let mut slots = vec![[usize::MAX; 4]; ncross];
    for (e, ed) in edges.iter().enumerate() {
        for p in [ed.tail, ed.head] {
            if p.crossing >= ncross || p.slot >= 4 {
                return Err(Error::Invariant(format!("port {p:?} out of range")));
            }
            if slots[p.crossing][p.slot] != usize::MAX {
                return Err(Error::format(format!("port ({}, {}) used twice", p.crossing, p.slot)));
            }
            slots[p.crossing][p.slot] = e;
        }
    }
    if let Some((c, _)) = slots.iter().enumerate().find(|(_, s)| s.contains(&usize::MAX)) {
        return Err(Error::format(format!("crossing {c} has an unused slot")));
    }
    let is_head: Vec<bool> = {
        let mut v = vec![false; ncross * 4];
        for ed in &edges {
            v[ed.head.index()] = true;
        }
        v
    };
    let mut positive = Vec::with_capacity(ncross);
    for c in 0..ncross {
        let h = |s: usize| is_head[Port::new(c, s).index()];
        if !h(0) || h(2) {
            return Err(Error::format(format!("orientation inconsistency at crossing {c}: slot 0 must be the incoming under-edge")));
        }
        if h(1) == h(3) {
            return Err(Error::format(format!("orientation inconsistency at crossing {c}: over strand")));
        }
        positive.push(h(3));
    }
    let tail_at = |p: Port| -> usize { slots[p.crossing][p.slot] };

    // components: head port p continues from the tail at p+2
    let mut edge_component = vec![usize::MAX; edges.len()];
    let mut components = Vec::new();
    for start in 0..edges.len() {
        if edge_component[start] != usize::MAX {
            continue;
        }
        let ci = components.len();
        let mut comp = Vec::new();
        let mut e = start;
        loop {
            edge_component[e] = ci;
            comp.push(e);
            e = tail_at(edges[e].head.turn(2));
            if e == start {
                break;
            }
        }
        components.push(comp);
    }

    // arcs break at under passages (edges whose tail is an under-out slot)
    let mut edge_arc = vec![usize::MAX; edges.len()];
    let mut arcs: Vec<Vec<usize>> = Vec::new();
    for comp in &components {
        let starts: Vec<usize> = (0..comp.len()).filter(|&i| edges[comp[i]].tail.slot == 2).collect();
        let first = starts.first().copied().unwrap_or(0);
        let mut current: Option<usize> = None;
        for k in 0..comp.len() {
            let e = comp[(first + k) % comp.len()];
            if current.is_none() || edges[e].tail.slot == 2 {
                current = Some(arcs.len());
                arcs.push(Vec::new());
            }
            let a = current.unwrap();
            arcs[a].push(e);
            edge_arc[e] = a;
        }
    }
    // order arcs by least edge
    let mut order: Vec<usize> = (0..arcs.len()).collect();
    order.sort_by_key(|&a| arcs[a].iter().min().copied());
    let mut rank = vec![0; arcs.len()];
    for (r, &a) in order.iter().enumerate() {
        rank[a] = r;
    }
    let arcs: Vec<Vec<usize>> = order.iter().map(|&a| arcs[a].clone()).collect();
    for a in edge_arc.iter_mut() {
        *a = rank[*a];
    }

    // faces: the dart leaving p runs along its edge to the other end q, then leaves q+1
    let other_end = |p: Port| -> Port {
        let ed = edges[slots[p.crossing][p.slot]];
        if ed.tail == p {
            ed.head
        } else {
            ed.tail
        }
    };
    let mut port_face = vec![usize::MAX; ncross * 4];
    let mut faces: Vec<Vec<Port>> = Vec::new();
    for c in 0..ncross {
        for s in 0..4 {
            let start = Port::new(c, s);
            if port_face[start.index()] != usize::MAX {
                continue;
            }
            let f = faces.len();
            let mut darts = Vec::new();
            let mut d = start;
            while port_face[d.index()] == usize::MAX {
                port_face[d.index()] = f;
                darts.push(d);
                d = other_end(d).turn(1);
            }
            faces.push(darts);
        }
    }

    // connectivity
    let mut parent: Vec<usize> = (0..ncross).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for ed in &edges {
        let a = find(&mut parent, ed.tail.crossing);
        let b = find(&mut parent, ed.head.crossing);
        parent[a] = b;
    }
    let roots: BTreeSet<usize> = (0..ncross).map(|c| find(&mut parent, c)).collect();
    if roots.len() > 1 {
        return Err(Error::Unsupported("split (disconnected) diagrams".into()));
    }
    let euler = ncross as i64 - 2 * ncross as i64 + faces.len() as i64;
    if euler != 2 {
        return Err(Error::format(format!("not planar: V - E + F = {} - {} + {} = {euler}, expected 2", ncross, 2 * ncross, faces.len())));
    }

    let mut d = OrientedDiagram {
        slots,
        edges,
        positive,
        components,
        edge_component,
        arcs,
        edge_arc,
        port_face,
        faces,
        unbounded: 0,
        alexander: vec![],
    };
    d.unbounded = match outer {
        Outer::Dart(e, side) => d.face_on(e, side),
        Outer::Largest => {
            let sizes: Vec<usize> = d.faces.iter().map(Vec::len).collect();
            let max = *sizes.iter().max().unwrap();
            sizes.iter().position(|&s| s == max).unwrap()
        }
        Outer::Edges(ids, sides) => {
            let mut want: Vec<(usize, Option<Side>)> = match &sides {
                Some(s) if s.len() == ids.len() => ids.iter().copied().zip(s.iter().copied().map(Some)).collect(),
                Some(_) => return Err(Error::format("unbounded_sides must match unbounded_face in length")),
                None => ids.iter().map(|&e| (e, None)).collect(),
            };
            want.sort_by_key(|&(e, s)| (e, s.map(|s| s == Side::Left)));
            let faces = d.faces();
            let matches: Vec<usize> = (0..faces.len())
                .filter(|&f| {
                    let mut have: Vec<(usize, Option<Side>)> = faces[f].iter().map(|&(e, s)| (e, sides.as_ref().map(|_| s))).collect();
                    have.sort_by_key(|&(e, s)| (e, s.map(|s| s == Side::Left)));
                    have == want
                })
                .collect();
            match matches.as_slice() {
                [f] => *f,
                [] => return Err(Error::format("unbounded_face does not match any face")),
                _ => return Err(Error::format("unbounded_face edge set matches several faces; add unbounded_sides")),
            }
        }
    };
    d.alexander = alexander_numbers(&d)?;
    Ok(d)
}

/// Unbounded face 0; crossing an edge from its right face to its left face adds 1.
fn alexander_numbers(d: &OrientedDiagram) -> Result<Vec<i64>> {
    let nf = d.face_count();
    let mut adj: Vec<Vec<(usize, i64)>> = vec![Vec::new(); nf];
    for e in 0..d.edge_count() {
        let (r, l) = (d.right_face(e), d.left_face(e));
        adj[r].push((l, 1));
        adj[l].push((r, -1));
    }
    let mut num: Vec<Option<i64>> = vec![None; nf];
    num[d.unbounded] = Some(0);
    let mut queue = VecDeque::from([d.unbounded]);
    while let Some(f) = queue.pop_front() {
        let v = num[f].unwrap();
        for &(g, step) in &adj[f] {
            match num[g] {
                None => {
                    num[g] = Some(v + step);
                    queue.push_back(g);
                }
                Some(w) if w != v + step => {
                    return Err(Error::Invariant(format!("Alexander numbering inconsistent between faces {f} and {g}")))
                }
                _ => {}
            }
        }
    }
    num.into_iter().map(|n| n.ok_or_else(|| Error::Invariant("face unreachable in the dual graph".into()))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = "X(4,2,5,1);X(6,4,1,3);X(2,6,3,5)";

    #[test]
    fn trefoil_basics() {
        let d = OrientedDiagram::parse_pd(TREFOIL).unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.arc_count(), 3);
        assert_eq!(d.face_count(), 5);
        assert_eq!(d.signs(), vec![1, 1, 1]);
        assert_eq!(d.component_count(), 1);
    }

    #[test]
    fn torus_code_rejected() {
        let err = OrientedDiagram::parse_pd("X(1,4,2,3);X(3,6,4,5);X(5,2,6,1)").unwrap_err();
        assert!(matches!(err, Error::Format(_)), "{err}");
    }

    #[test]
    fn parse_errors() {
        assert!(OrientedDiagram::parse_pd("").is_err());
        assert!(matches!(OrientedDiagram::parse_pd("X(1,2,3,3)"), Err(Error::Format(_))));
        assert!(OrientedDiagram::parse_pd("X(1,4,2,5);X(3,6,4,1)").is_err());
        assert!(OrientedDiagram::parse_pd("U").unwrap().is_crossingless());
    }

    #[test]
    fn kinks() {
        let p = OrientedDiagram::parse_pd("X(1,1,2,2)").unwrap();
        assert_eq!((p.face_count(), p.writhe()), (3, 1));
        let n = OrientedDiagram::parse_pd("X(1,2,2,1)").unwrap();
        assert_eq!((n.face_count(), n.writhe()), (3, -1));
    }

    #[test]
    fn alexander_steps() {
        for text in [TREFOIL, "X(4,2,5,1);X(8,6,1,5);X(6,3,7,4);X(2,7,3,8)", "X(1,3,2,4);X(3,1,4,2)"] {
            let d = OrientedDiagram::parse_pd(text).unwrap();
            let a = d.alexander_numbering();
            assert_eq!(a[d.unbounded_face()], 0);
            for e in 0..d.edge_count() {
                assert_eq!(a[d.left_face(e)] - a[d.right_face(e)], 1);
            }
        }
    }

    #[test]
    fn source_corner_is_unique() {
        let d = OrientedDiagram::parse_pd("X(4,2,5,1);X(8,6,1,5);X(6,3,7,4);X(2,7,3,8)").unwrap();
        for c in 0..d.crossing_count() {
            // the source face is on the right of both outgoing edges' predecessors
            let f = d.source_face(c);
            let under_right = d.right_face(d.under_in(c)) == f || d.right_face(d.under_out(c)) == f;
            let over_right = d.right_face(d.over_in(c)) == f || d.right_face(d.over_out(c)) == f;
            assert!(under_right && over_right);
        }
    }

    #[test]
    fn canonical_round_trip() {
        let d = OrientedDiagram::parse_pd("X(2,6,3,5);X(4,2,5,1);X(6,4,1,3)").unwrap();
        let again = OrientedDiagram::from_json(&d.to_json()).unwrap();
        assert_eq!(d, again);
        assert_eq!(d.pd_string(), again.pd_string());
    }
}
