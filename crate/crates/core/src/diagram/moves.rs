//! Reidemeister moves as surgery on the port graph.
//!
//! Every move returns the new diagram in canonical form together with the
//! pairs of (old, new) edges that lie outside the move site, which is what
//! the coloring bijection is required to respect.

use std::collections::BTreeSet;

use super::{assemble, Edge, OrientedDiagram, Outer, Port, Side};
use crate::error::{Error, Result};

/// Side of the strand on which an R1 curl is added.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum R1Side {
    Left,
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MoveKind {
    R1 { edge: usize, side: R1Side, sign: i32 },
    R1Inverse { crossing: usize },
    R2 { over: usize, under: usize, face: usize },
    R2Inverse { face: usize },
    R3 { face: usize },
}

impl MoveKind {
    pub fn to_json(&self) -> serde_json::Value {
        use serde_json::json;
        match *self {
            MoveKind::R1 { edge, side, sign } => {
                let side = if side == R1Side::Left { "left" } else { "right" };
                json!({"kind": "R1", "edge": edge, "side": side, "sign": sign})
            }
            MoveKind::R1Inverse { crossing } => json!({"kind": "R1-", "crossing": crossing}),
            MoveKind::R2 { over, under, face } => json!({"kind": "R2", "over": over, "under": under, "face": face}),
            MoveKind::R2Inverse { face } => json!({"kind": "R2-", "face": face}),
            MoveKind::R3 { face } => json!({"kind": "R3", "face": face}),
        }
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let field = |name: &str| -> Result<usize> {
            v.get(name)
                .and_then(|x| x.as_u64())
                .map(|x| x as usize)
                .ok_or_else(|| Error::format(format!("move needs a non-negative integer {name:?}")))
        };
        let kind = v.get("kind").and_then(|k| k.as_str()).ok_or_else(|| Error::format("move needs a \"kind\""))?;
        Ok(match kind {
            "R1" => {
                let side = match v.get("side").and_then(|s| s.as_str()) {
                    Some("left") => R1Side::Left,
                    Some("right") => R1Side::Right,
                    _ => return Err(Error::format("R1 side must be \"left\" or \"right\"")),
                };
                let sign = v.get("sign").and_then(|s| s.as_i64()).ok_or_else(|| Error::format("R1 needs a sign"))?;
                MoveKind::R1 { edge: field("edge")?, side, sign: sign as i32 }
            }
            "R1-" => MoveKind::R1Inverse { crossing: field("crossing")? },
            "R2" => MoveKind::R2 { over: field("over")?, under: field("under")?, face: field("face")? },
            "R2-" => MoveKind::R2Inverse { face: field("face")? },
            "R3" => MoveKind::R3 { face: field("face")? },
            other => return Err(Error::format(format!("unknown move kind {other:?}"))),
        })
    }

    pub fn family(&self) -> &'static str {
        match self {
            MoveKind::R1 { .. } | MoveKind::R1Inverse { .. } => "R1",
            MoveKind::R2 { .. } | MoveKind::R2Inverse { .. } => "R2",
            MoveKind::R3 { .. } => "R3",
        }
    }
}

#[derive(Clone, Debug)]
pub struct MoveResult {
    pub kind: MoveKind,
    pub diagram: OrientedDiagram,
    /// `(old edge, new edge)` pairs away from the move site.
    pub preserved: Vec<(usize, usize)>,
    /// Edges of the input diagram touching the site.
    pub site_edges: Vec<usize>,
    /// Faces of the input diagram touching the site.
    pub site_faces: Vec<usize>,
}

/// An edge end during surgery: a real port, or one of the loose ends of the
/// crossingless unknot's single edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum End {
    At(Port),
    Loose(u8),
}

struct Surgery {
    ncross: usize,
    removed: BTreeSet<usize>,
    /// Edge slots; `None` marks a deleted edge. Index = pre-canonical id.
    edges: Vec<Option<(End, End)>>,
}

impl Surgery {
    fn new(d: &OrientedDiagram) -> Self {
        Surgery {
            ncross: d.crossing_count(),
            removed: BTreeSet::new(),
            edges: d.edges.iter().map(|e| Some((End::At(e.tail), End::At(e.head)))).collect(),
        }
    }

    fn empty() -> Self {
        Surgery { ncross: 0, removed: BTreeSet::new(), edges: Vec::new() }
    }

    fn add_crossing(&mut self) -> usize {
        self.ncross += 1;
        self.ncross - 1
    }

    fn add_edge(&mut self, tail: End, head: End) -> usize {
        self.edges.push(Some((tail, head)));
        self.edges.len() - 1
    }

    fn set(&mut self, e: usize, tail: End, head: End) {
        if e >= self.edges.len() {
            self.edges.resize(e + 1, None);
        }
        self.edges[e] = Some((tail, head));
    }

    /// Join loose ends: the edge ending at `Loose(h)` continues as the edge starting at `Loose(t)`.
    fn glue(&mut self, h: u8, t: u8) {
        let a = self.edges.iter().position(|e| matches!(e, Some((_, End::Loose(x))) if *x == h));
        let b = self.edges.iter().position(|e| matches!(e, Some((End::Loose(x), _)) if *x == t));
        let (Some(a), Some(b)) = (a, b) else { return };
        let (ta, _) = self.edges[a].unwrap();
        let (_, hb) = self.edges[b].unwrap();
        if a == b {
            self.edges[a] = None;
            return;
        }
        // keep the lower index
        let (keep, drop) = if a < b { (a, b) } else { (b, a) };
        self.edges[keep] = Some((ta, hb));
        self.edges[drop] = None;
    }

    /// Finish: renumber, assemble and canonicalize. `outer` names the new
    /// unbounded face by a surgery edge id and side. Returns the diagram and
    /// the map from surgery edge ids to final edge ids.
    fn finish(self, outer: (usize, Side)) -> Result<(OrientedDiagram, Vec<Option<usize>>)> {
        let alive: Vec<usize> = (0..self.ncross).filter(|c| !self.removed.contains(c)).collect();
        let mut cmap = vec![usize::MAX; self.ncross];
        for (i, &c) in alive.iter().enumerate() {
            cmap[c] = i;
        }
        let mut emap = vec![None; self.edges.len()];
        let mut edges = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if let Some((t, h)) = e {
                let port = |x: &End| match x {
                    End::At(p) => Ok(Port::new(cmap[p.crossing], p.slot)),
                    End::Loose(_) => Err(Error::Invariant("unresolved loose edge end".into())),
                };
                emap[i] = Some(edges.len());
                edges.push(Edge { tail: port(t)?, head: port(h)? });
            }
        }
        let outer_edge = emap[outer.0].ok_or_else(|| Error::Invariant("unbounded face lost during surgery".into()))?;
        let raw = assemble(alive.len(), edges, Outer::Dart(outer_edge, outer.1))?;
        let (d, label) = raw.canonical();
        Ok((d, emap.into_iter().map(|m| m.map(|i| label[i])).collect()))
    }
}

fn other(side: Side) -> Side {
    match side {
        Side::Left => Side::Right,
        Side::Right => Side::Left,
    }
}

fn end_at(crossing: usize, slot: usize) -> End {
    End::At(Port::new(crossing, slot))
}

impl OrientedDiagram {
    fn side_facing(&self, e: usize, f: usize) -> Option<Side> {
        if self.right_face(e) == f {
            Some(Side::Right)
        } else if self.left_face(e) == f {
            Some(Side::Left)
        } else {
            None
        }
    }

    /// First dart on the unbounded face whose edge is not excluded.
    fn outer_dart(&self, excluded: &[usize]) -> Option<(usize, Side)> {
        self.faces()[self.unbounded].iter().copied().find(|(e, _)| !excluded.contains(e))
    }

    fn check_edge(&self, e: usize) -> Result<()> {
        if e >= self.edge_count() {
            return Err(Error::OutOfRange(format!("edge {e} (diagram has {} edges)", self.edge_count())));
        }
        Ok(())
    }

    fn check_face(&self, f: usize) -> Result<()> {
        if f >= self.face_count() {
            return Err(Error::OutOfRange(format!("face {f} (diagram has {} faces)", self.face_count())));
        }
        Ok(())
    }

    /// Add a curl on `edge`, on the given side of its direction, with crossing sign `sign`.
    pub fn apply_r1(&self, edge: usize, side: R1Side, sign: i32) -> Result<MoveResult> {
        self.check_edge(edge)?;
        if sign != 1 && sign != -1 {
            return Err(Error::parameter(format!("crossing sign must be +1 or -1, got {sign}")));
        }
        // slot contents counterclockwise from slot 0: 0 = e_in head, 1 = e_out tail,
        // 2 = loop tail, 3 = loop head
        let under_first = matches!((side, sign), (R1Side::Left, 1) | (R1Side::Right, -1));
        let layout: [usize; 4] = match (side, under_first) {
            (R1Side::Left, true) => [0, 1, 2, 3],
            (R1Side::Left, false) => [3, 0, 1, 2],
            (R1Side::Right, true) => [0, 3, 2, 1],
            (R1Side::Right, false) => [3, 2, 1, 0],
        };
        let slot_of = |role: usize| layout.iter().position(|&r| r == role).unwrap();
        let (mut s, tail, head) = if self.is_crossingless() {
            let mut s = Surgery::empty();
            s.edges.push(None);
            (s, End::Loose(0), End::Loose(1))
        } else {
            let ed = self.edges[edge];
            (Surgery::new(self), End::At(ed.tail), End::At(ed.head))
        };
        let x = s.add_crossing();
        s.set(edge, tail, end_at(x, slot_of(0)));
        s.add_edge(end_at(x, slot_of(2)), end_at(x, slot_of(3)));
        s.add_edge(end_at(x, slot_of(1)), head);
        if self.is_crossingless() {
            s.glue(1, 0);
        }
        let outer = if self.is_crossingless() { (edge, Side::Right) } else { self.outer_dart(&[]).unwrap() };
        let (d, map) = s.finish(outer)?;
        let preserved = (0..self.edge_count()).filter_map(|e| map[e].map(|n| (e, n))).collect();
        let site_faces = if self.is_crossingless() { vec![0, 1] } else { vec![self.right_face(edge), self.left_face(edge)] };
        Ok(MoveResult { kind: MoveKind::R1 { edge, side, sign }, diagram: d, preserved, site_edges: vec![edge], site_faces })
    }

    /// Remove a curl at `crossing`.
    pub fn apply_r1_inverse(&self, crossing: usize) -> Result<MoveResult> {
        if crossing >= self.crossing_count() {
            return Err(Error::OutOfRange(format!("crossing {crossing}")));
        }
        let faces = self.faces();
        let loops: Vec<usize> = (0..self.edge_count())
            .filter(|&e| {
                let ed = self.edges[e];
                ed.tail.crossing == crossing
                    && ed.head.crossing == crossing
                    && (ed.tail.slot + 4 - ed.head.slot) % 2 == 1
                    && [Side::Right, Side::Left].iter().any(|&s| faces[self.face_on(e, s)].len() == 1)
            })
            .collect();
        let lp = loops
            .iter()
            .copied()
            .find(|&e| {
                let interior = [Side::Right, Side::Left].into_iter().find(|&s| faces[self.face_on(e, s)].len() == 1).unwrap();
                self.face_on(e, interior) != self.unbounded
            })
            .ok_or_else(|| Error::MoveInapplicable(format!("crossing {crossing} is not a removable curl")))?;
        let site: Vec<usize> = (0..4).map(|s| self.slots[crossing][s]).collect();
        let site_faces: Vec<usize> = (0..4).map(|s| self.corner_face(crossing, s)).collect();
        let (d, map) = self.remove_crossings(&[crossing], &[lp])?;
        let preserved: Vec<(usize, usize)> = (0..self.edge_count())
            .filter(|&e| e != lp && !(site.contains(&e) && self.edges[e].tail.crossing == crossing))
            .filter_map(|e| map[e].map(|n| (e, n)))
            .collect();
        Ok(MoveResult { kind: MoveKind::R1Inverse { crossing }, diagram: d, preserved, site_edges: site, site_faces })
    }

    /// Smooth the given crossings straight through (each strand continues
    /// from slot `s` to `s+2`). `internal` edges are not used to locate the
    /// unbounded face afterwards. The map sends every old edge to the new edge
    /// containing it.
    fn remove_crossings(&self, gone: &[usize], internal: &[usize]) -> Result<(OrientedDiagram, Vec<Option<usize>>)> {
        let gone_set: BTreeSet<usize> = gone.iter().copied().collect();
        let n = self.edge_count();
        let mut chain_of = vec![usize::MAX; n];
        let mut chains: Vec<(usize, Vec<usize>)> = Vec::new();
        for e in 0..n {
            if chain_of[e] != usize::MAX || gone_set.contains(&self.edges[e].tail.crossing) {
                continue;
            }
            let mut path = vec![e];
            let mut cur = e;
            while gone_set.contains(&self.edges[cur].head.crossing) {
                cur = self.slots[self.edges[cur].head.crossing][(self.edges[cur].head.slot + 2) % 4];
                path.push(cur);
            }
            for &p in &path {
                chain_of[p] = chains.len();
            }
            chains.push((e, path));
        }
        let loose = (0..n).filter(|&e| chain_of[e] == usize::MAX).count();
        if gone.len() == self.crossing_count() {
            // everything smoothed: the remaining closed strands carry no crossings
            let strands = if chains.is_empty() { self.count_closed(&gone_set) } else { usize::MAX };
            if strands == 1 {
                return Ok((OrientedDiagram::unknot(), vec![Some(0); n]));
            }
            return Err(Error::Unsupported("the move would produce a crossingless link with several components".into()));
        }
        if loose > 0 {
            return Err(Error::Unsupported("the move would split off a crossingless component".into()));
        }
        let mut s = Surgery::new(self);
        for e in 0..n {
            s.edges[e] = None;
        }
        for (first, path) in &chains {
            let last = *path.last().unwrap();
            s.set(*first, End::At(self.edges[*first].tail), End::At(self.edges[last].head));
        }
        s.removed = gone_set;
        let (e, side) =
            self.outer_dart(internal).ok_or_else(|| Error::MoveInapplicable("the unbounded face lies inside the move site".into()))?;
        let (d, map) = s.finish((chains[chain_of[e]].0, side))?;
        let out = (0..n).map(|e| map[chains[chain_of[e]].0]).collect();
        Ok((d, out))
    }

    fn count_closed(&self, gone: &BTreeSet<usize>) -> usize {
        let n = self.edge_count();
        let mut seen = vec![false; n];
        let mut count = 0;
        for e in 0..n {
            if seen[e] {
                continue;
            }
            count += 1;
            let mut cur = e;
            while !seen[cur] {
                seen[cur] = true;
                let h = self.edges[cur].head;
                debug_assert!(gone.contains(&h.crossing));
                cur = self.slots[h.crossing][(h.slot + 2) % 4];
            }
        }
        count
    }

    /// Push `over` across the common face `face` and over `under`, creating a bigon.
    pub fn apply_r2(&self, over: usize, under: usize, face: usize) -> Result<MoveResult> {
        self.check_edge(over)?;
        self.check_edge(under)?;
        self.check_face(face)?;
        let trivial = self.is_crossingless();
        if !trivial && over == under {
            return Err(Error::MoveInapplicable("R2 needs two distinct edges".into()));
        }
        let s1 = self.side_facing(over, face).ok_or_else(|| Error::MoveInapplicable(format!("edge {over} does not border face {face}")))?;
        let s2 = if trivial {
            s1
        } else {
            self.side_facing(under, face).ok_or_else(|| Error::MoveInapplicable(format!("edge {under} does not border face {face}")))?
        };
        // Picture: `over` drawn above the face, `under` below it.
        let over_east = s1 == Side::Right;
        let under_east = s2 == Side::Left;
        let (mut s, t1, h1, t2, h2) = if trivial {
            let mut s = Surgery::empty();
            s.edges.push(None);
            (s, End::Loose(0), End::Loose(1), End::Loose(2), End::Loose(3))
        } else {
            let (a, b) = (self.edges[over], self.edges[under]);
            (Surgery::new(self), End::At(a.tail), End::At(a.head), End::At(b.tail), End::At(b.head))
        };
        let x = s.add_crossing();
        let y = s.add_crossing();
        // geometric slots S=0, E=1, N=2, W=3; rotate so the incoming under end is slot 0
        let r = if under_east { 3 } else { 1 };
        let at = |c: usize, g: usize| end_at(c, (g + 4 - r) % 4);
        let (south, east, north, west) = (0, 1, 2, 3);
        let over_tail_piece;
        if over_east {
            s.set(over, t1, at(x, north));
            s.add_edge(at(x, south), at(y, south));
            s.add_edge(at(y, north), h1);
            over_tail_piece = over;
        } else {
            s.set(over, t1, at(y, north));
            s.add_edge(at(y, south), at(x, south));
            s.add_edge(at(x, north), h1);
            over_tail_piece = over;
        }
        let under_piece = if trivial { s.edges.len() } else { under };
        if under_east {
            s.set(under_piece, t2, at(x, west));
            s.add_edge(at(x, east), at(y, west));
            s.add_edge(at(y, east), h2);
        } else {
            s.set(under_piece, t2, at(y, east));
            s.add_edge(at(y, west), at(x, east));
            s.add_edge(at(x, west), h2);
        }
        if trivial {
            // one circle: the under part runs into the over part and back
            s.glue(3, 0);
            s.glue(1, 2);
        }
        let outer = if trivial {
            if face == self.unbounded {
                (over_tail_piece, s1)
            } else {
                (over_tail_piece, other(s1))
            }
        } else if face == self.unbounded {
            (over_tail_piece, s1)
        } else {
            self.outer_dart(&[]).unwrap()
        };
        let (d, map) = s.finish(outer)?;
        let preserved = (0..self.edge_count()).filter_map(|e| map[e].map(|n| (e, n))).collect();
        let site_faces = if trivial {
            vec![0, 1]
        } else {
            let mut v = vec![face, self.face_on(over, other(s1)), self.face_on(under, other(s2))];
            v.dedup();
            v
        };
        Ok(MoveResult {
            kind: MoveKind::R2 { over, under, face },
            diagram: d,
            preserved,
            site_edges: if trivial { vec![0] } else { vec![over, under] },
            site_faces,
        })
    }

    /// Remove the bigon `face`, one of whose sides is over at both corners.
    pub fn apply_r2_inverse(&self, face: usize) -> Result<MoveResult> {
        self.check_face(face)?;
        let darts = self.faces()[face].clone();
        if darts.len() != 2 {
            return Err(Error::MoveInapplicable(format!("face {face} is not a bigon")));
        }
        if face == self.unbounded {
            return Err(Error::MoveInapplicable("the bigon is the unbounded face".into()));
        }
        let (m1, m2) = (darts[0].0, darts[1].0);
        let over_both = |e: usize| self.edges[e].tail.slot % 2 == 1 && self.edges[e].head.slot % 2 == 1;
        let under_both = |e: usize| self.edges[e].tail.slot % 2 == 0 && self.edges[e].head.slot % 2 == 0;
        let ok = (over_both(m1) && under_both(m2)) || (over_both(m2) && under_both(m1));
        let (cx, cy) = (self.edges[m1].tail.crossing, self.edges[m1].head.crossing);
        if !ok || cx == cy {
            return Err(Error::MoveInapplicable(format!("bigon {face} is not an R2 bigon (over/under pattern)")));
        }
        let site: Vec<usize> = {
            let mut v: Vec<usize> = [cx, cy].iter().flat_map(|&c| self.slots[c]).collect();
            v.sort();
            v.dedup();
            v
        };
        let site_faces: Vec<usize> = {
            let mut v: Vec<usize> =
                [cx, cy].iter().flat_map(|&c| (0..4).map(move |s| (c, s))).map(|(c, s)| self.corner_face(c, s)).collect();
            v.sort();
            v.dedup();
            v
        };
        let (d, map) = self.remove_crossings(&[cx, cy], &[m1, m2])?;
        let preserved = (0..self.edge_count())
            .filter(|&e| {
                let ed = self.edges[e];
                // edges leaving the site change identity with the merge
                !(e == m1 || e == m2 || [cx, cy].contains(&ed.tail.crossing))
            })
            .filter_map(|e| map[e].map(|n| (e, n)))
            .collect();
        Ok(MoveResult { kind: MoveKind::R2Inverse { face }, diagram: d, preserved, site_edges: site, site_faces })
    }

    /// Third Reidemeister move across the triangular face `face`.
    pub fn apply_r3(&self, face: usize) -> Result<MoveResult> {
        self.check_face(face)?;
        let darts = self.faces()[face].clone();
        if darts.len() != 3 {
            return Err(Error::MoveInapplicable(format!("face {face} is not a triangle")));
        }
        if face == self.unbounded {
            return Err(Error::MoveInapplicable("the triangle is the unbounded face".into()));
        }
        let sides: Vec<usize> = darts.iter().map(|d| d.0).collect();
        let crossings: BTreeSet<usize> = sides.iter().flat_map(|&e| [self.edges[e].tail.crossing, self.edges[e].head.crossing]).collect();
        if crossings.len() != 3 || sides.iter().collect::<BTreeSet<_>>().len() != 3 {
            return Err(Error::MoveInapplicable("triangle corners are not three distinct crossings".into()));
        }
        // each side lies on one strand passing P = tail crossing, then Q = head crossing
        let overs: Vec<usize> = sides.iter().map(|&e| (self.edges[e].tail.slot % 2) + (self.edges[e].head.slot % 2)).collect();
        let mut pattern = overs.clone();
        pattern.sort();
        if pattern != vec![0, 1, 2] {
            return Err(Error::MoveInapplicable(format!(
                "triangle {face} has a cyclic over/under pattern; no strand lies over both others"
            )));
        }
        let mut s = Surgery::new(self);
        let mut current: Vec<(Port, Port)> = self.edges.iter().map(|e| (e.tail, e.head)).collect();
        let mut touched = BTreeSet::new();
        for &e in &sides {
            let out_p = self.edges[e].tail;
            let in_p = out_p.turn(2);
            let in_q = self.edges[e].head;
            let out_q = in_q.turn(2);
            let enter = self.slots[in_p.crossing][in_p.slot];
            let exit = self.slots[out_q.crossing][out_q.slot];
            if sides.contains(&enter) || sides.contains(&exit) {
                return Err(Error::MoveInapplicable("triangle sides are adjacent along a strand".into()));
            }
            current[enter].1 = in_q;
            current[exit].0 = out_p;
            current[e] = (out_q, in_p);
            touched.insert(enter);
            touched.insert(exit);
        }
        for (i, (t, h)) in current.iter().enumerate() {
            s.set(i, End::At(*t), End::At(*h));
        }
        let outer = self.outer_dart(&sides).ok_or_else(|| Error::Invariant("unbounded face touches only the triangle".into()))?;
        let (d, map) = s.finish(outer)?;
        let preserved = (0..self.edge_count()).filter(|e| !sides.contains(e)).filter_map(|e| map[e].map(|n| (e, n))).collect();
        let mut site_edges: Vec<usize> = sides.iter().copied().chain(touched).collect();
        site_edges.sort();
        site_edges.dedup();
        let mut site_faces: Vec<usize> =
            crossings.iter().flat_map(|&c| (0..4).map(move |k| (c, k))).map(|(c, k)| self.corner_face(c, k)).collect();
        site_faces.sort();
        site_faces.dedup();
        Ok(MoveResult { kind: MoveKind::R3 { face }, diagram: d, preserved, site_edges, site_faces })
    }

    /// Faces where R3 applies.
    pub fn r3_faces(&self) -> Vec<usize> {
        (0..self.face_count()).filter(|&f| self.apply_r3(f).is_ok()).collect()
    }

    /// Bigon faces where the inverse of R2 applies.
    pub fn r2_bigons(&self) -> Vec<usize> {
        (0..self.face_count()).filter(|&f| self.apply_r2_inverse(f).is_ok()).collect()
    }

    /// Crossings that are removable curls.
    pub fn r1_curls(&self) -> Vec<usize> {
        (0..self.crossing_count()).filter(|&c| self.apply_r1_inverse(c).is_ok()).collect()
    }

    pub fn apply(&self, kind: &MoveKind) -> Result<MoveResult> {
        match *kind {
            MoveKind::R1 { edge, side, sign } => self.apply_r1(edge, side, sign),
            MoveKind::R1Inverse { crossing } => self.apply_r1_inverse(crossing),
            MoveKind::R2 { over, under, face } => self.apply_r2(over, under, face),
            MoveKind::R2Inverse { face } => self.apply_r2_inverse(face),
            MoveKind::R3 { face } => self.apply_r3(face),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = "X(4,2,5,1);X(6,4,1,3);X(2,6,3,5)";

    #[test]
    fn r1_on_unknot_matches_kinks() {
        let u = OrientedDiagram::unknot();
        let p = u.apply_r1(0, R1Side::Left, 1).unwrap().diagram;
        assert_eq!((p.crossing_count(), p.writhe(), p.face_count()), (1, 1, 3));
        let n = u.apply_r1(0, R1Side::Right, -1).unwrap().diagram;
        assert_eq!(n.writhe(), -1);
        for d in [&p, &n] {
            let back = d.apply_r1_inverse(0).unwrap().diagram;
            assert!(back.is_crossingless());
        }
    }

    #[test]
    fn r1_roundtrip_on_trefoil() {
        let t = OrientedDiagram::parse_pd(TREFOIL).unwrap();
        for e in 0..t.edge_count() {
            for side in [R1Side::Left, R1Side::Right] {
                for sign in [1, -1] {
                    let m = t.apply_r1(e, side, sign).unwrap();
                    assert_eq!(m.diagram.writhe(), t.writhe() + sign);
                    assert_eq!(m.diagram.face_count(), 6);
                    let curls = m.diagram.r1_curls();
                    assert!(!curls.is_empty());
                    let back = curls.iter().map(|&c| m.diagram.apply_r1_inverse(c).unwrap().diagram).any(|b| b == t);
                    assert!(back, "edge {e} {side:?} {sign}");
                }
            }
        }
    }

    #[test]
    fn r2_on_unknot() {
        let u = OrientedDiagram::unknot();
        for f in 0..2 {
            let m = u.apply_r2(0, 0, f).unwrap();
            let d = &m.diagram;
            assert_eq!((d.crossing_count(), d.writhe(), d.component_count()), (2, 0, 1));
            let bigons = d.r2_bigons();
            assert!(!bigons.is_empty());
            assert!(d.apply_r2_inverse(bigons[0]).unwrap().diagram.is_crossingless());
        }
    }

    #[test]
    fn r2_roundtrip_on_figure_eight() {
        let d = OrientedDiagram::parse_pd("X(4,2,5,1);X(8,6,1,5);X(6,3,7,4);X(2,7,3,8)").unwrap();
        let mut tried = 0;
        for (f, darts) in d.faces().iter().enumerate() {
            for &(a, _) in darts {
                for &(b, _) in darts {
                    if a == b {
                        continue;
                    }
                    let m = d.apply_r2(a, b, f).unwrap();
                    assert_eq!(m.diagram.crossing_count(), 6);
                    assert_eq!(m.diagram.writhe(), 0);
                    let back =
                        m.diagram.r2_bigons().iter().any(|&g| m.diagram.apply_r2_inverse(g).map(|r| r.diagram == d).unwrap_or(false));
                    assert!(back);
                    tried += 1;
                }
            }
        }
        assert!(tried > 0);
    }

    #[test]
    fn r3_from_r2_on_trefoil() {
        let t = OrientedDiagram::parse_pd(TREFOIL).unwrap();
        let mut found = 0;
        for (f, darts) in t.faces().iter().enumerate() {
            for &(a, _) in darts {
                for &(b, _) in darts {
                    if a == b {
                        continue;
                    }
                    let d = t.apply_r2(a, b, f).unwrap().diagram;
                    for g in d.r3_faces() {
                        let m = d.apply_r3(g).unwrap();
                        assert_eq!(m.diagram.writhe(), d.writhe());
                        assert_eq!(m.diagram.face_count(), d.face_count());
                        // R3 is an involution on the new triangle
                        let back = m.diagram.r3_faces().iter().any(|&h| m.diagram.apply_r3(h).unwrap().diagram == d);
                        assert!(back);
                        found += 1;
                    }
                }
            }
        }
        assert!(found > 0);
    }

    #[test]
    fn cyclic_triangle_rejected() {
        let t = OrientedDiagram::parse_pd(TREFOIL).unwrap();
        for f in 0..t.face_count() {
            assert!(t.apply_r3(f).is_err());
        }
    }
}
