//! Quandle colorings and shadow colorings of oriented diagrams.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use serde::Serialize;

use crate::algebra::{right_orbits, FiniteQuandle, RightAction, XSet};
use crate::diagram::OrientedDiagram;
use crate::error::{Error, Result};

/// Brute-force enumeration refuses search spaces larger than this.
pub const BRUTE_FORCE_LIMIT: u64 = 1_000_000;

/// Arc colors, indexed by arc id. Ordered by the tuple of arc colors.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Coloring {
    arcs: Vec<usize>,
}

impl Coloring {
    pub fn new(arcs: Vec<usize>) -> Self {
        Coloring { arcs }
    }

    pub fn arcs(&self) -> &[usize] {
        &self.arcs
    }

    pub fn arc(&self, a: usize) -> usize {
        self.arcs[a]
    }

    /// Color of the arc containing edge `e`.
    pub fn edge(&self, d: &OrientedDiagram, e: usize) -> usize {
        self.arcs[d.edge_arc(e)]
    }

    pub fn is_constant(&self) -> bool {
        self.arcs.windows(2).all(|w| w[0] == w[1])
    }

    /// Checks every crossing relation.
    pub fn is_valid(&self, d: &OrientedDiagram, q: &FiniteQuandle) -> bool {
        self.arcs.len() == d.arc_count()
            && self.arcs.iter().all(|&c| c < q.order())
            && fundamental_presentation(d).relations.iter().all(|&(a, b, c)| q.op(self.arcs[a], self.arcs[b]) == self.arcs[c])
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.arcs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A coloring together with face colors in `X` or in an `X`-set.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ShadowColoring {
    pub coloring: Coloring,
    pub faces: Vec<usize>,
}

impl ShadowColoring {
    pub fn face(&self, f: usize) -> usize {
        self.faces[f]
    }

    /// Checks `color(R) * color(e) = color(L)` across every edge.
    pub fn is_valid<A: RightAction + ?Sized>(&self, d: &OrientedDiagram, carrier: &A) -> bool {
        self.faces.len() == d.face_count()
            && (0..d.edge_count()).all(|e| carrier.act(self.faces[d.right_face(e)], self.coloring.edge(d, e)) == self.faces[d.left_face(e)])
    }
}

impl fmt::Display for ShadowColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} faces {:?}", self.coloring, self.faces)
    }
}

/// Generators are arcs; each relation `(a, b, c)` means `a * b = c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuandlePresentation {
    pub generators: usize,
    pub relations: Vec<(usize, usize, usize)>,
    /// The extra free generator of the shadow presentation.
    pub shadow_generator: Option<usize>,
}

impl fmt::Display for QuandlePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for g in 0..self.generators {
            if g > 0 {
                write!(f, ",")?;
            }
            if Some(g) == self.shadow_generator {
                write!(f, "w")?;
            } else {
                write!(f, "x{g}")?;
            }
        }
        write!(f, " |")?;
        for (i, (a, b, c)) in self.relations.iter().enumerate() {
            write!(f, "{} x{a}*x{b}=x{c}", if i == 0 { "" } else { "," })?;
        }
        write!(f, " >")
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ColoringOptions {
    /// Ignore co-orientation at crossings. Only meaningful for kei.
    pub unoriented: bool,
}

/// Relation of crossing `c` as `(a, b, c)` arcs with `a * b = c`.
pub fn crossing_relation(d: &OrientedDiagram, c: usize, unoriented: bool) -> (usize, usize, usize) {
    let a = d.edge_arc(d.under_in(c));
    let b = d.over_arc(c);
    let out = d.edge_arc(d.under_out(c));
    if d.sign(c) > 0 || unoriented {
        (a, b, out)
    } else {
        (out, b, a)
    }
}

pub fn fundamental_presentation(d: &OrientedDiagram) -> QuandlePresentation {
    QuandlePresentation {
        generators: d.arc_count(),
        relations: (0..d.crossing_count()).map(|c| crossing_relation(d, c, false)).collect(),
        shadow_generator: None,
    }
}

pub fn shadow_presentation(d: &OrientedDiagram) -> QuandlePresentation {
    let mut p = fundamental_presentation(d);
    p.shadow_generator = Some(p.generators);
    p.generators += 1;
    p
}

/// All colorings in canonical order.
pub fn enumerate_colorings(d: &OrientedDiagram, q: &FiniteQuandle) -> Result<Vec<Coloring>> {
    enumerate_colorings_with(d, q, ColoringOptions::default())
}

pub fn enumerate_colorings_with(d: &OrientedDiagram, q: &FiniteQuandle, opts: ColoringOptions) -> Result<Vec<Coloring>> {
    q.require_rack()?;
    if opts.unoriented {
        q.require_kei()?;
    }
    let relations: Vec<_> = (0..d.crossing_count()).map(|c| crossing_relation(d, c, opts.unoriented)).collect();
    // seed order: arcs in the order a traversal of each component meets them
    let mut order = Vec::with_capacity(d.arc_count());
    let mut placed = vec![false; d.arc_count()];
    for comp in d.components() {
        for &e in comp {
            let a = d.edge_arc(e);
            if !std::mem::replace(&mut placed[a], true) {
                order.push(a);
            }
        }
    }
    let mut out = Vec::new();
    let mut assign = vec![None; d.arc_count()];
    solve(q, &relations, &order, &mut assign, &mut out);
    out.sort();
    Ok(out)
}

fn propagate(q: &FiniteQuandle, relations: &[(usize, usize, usize)], assign: &mut [Option<usize>]) -> bool {
    loop {
        let mut changed = false;
        for &(a, b, c) in relations {
            match (assign[a], assign[b], assign[c]) {
                (Some(x), Some(y), Some(z)) => {
                    if q.op(x, y) != z {
                        return false;
                    }
                }
                (Some(x), Some(y), None) => {
                    assign[c] = Some(q.op(x, y));
                    changed = true;
                }
                (None, Some(y), Some(z)) => {
                    assign[a] = Some(q.op_inv(z, y));
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed {
            return true;
        }
    }
}

fn solve(
    q: &FiniteQuandle,
    relations: &[(usize, usize, usize)],
    order: &[usize],
    assign: &mut Vec<Option<usize>>,
    out: &mut Vec<Coloring>,
) {
    if !propagate(q, relations, assign) {
        return;
    }
    match order.iter().find(|&&a| assign[a].is_none()) {
        None => out.push(Coloring::new(assign.iter().map(|c| c.unwrap()).collect())),
        Some(&a) => {
            for x in 0..q.order() {
                let mut next = assign.clone();
                next[a] = Some(x);
                solve(q, relations, order, &mut next, out);
            }
        }
    }
}

/// Every assignment of colors to arcs, filtered by the crossing relations.
pub fn enumerate_colorings_brute(d: &OrientedDiagram, q: &FiniteQuandle) -> Result<Vec<Coloring>> {
    let p = fundamental_presentation(d);
    let k = q.order();
    let total = (k as u64)
        .checked_pow(p.generators as u32)
        .filter(|&n| n <= BRUTE_FORCE_LIMIT)
        .ok_or_else(|| Error::Resource(format!("{k}^{} assignments exceed the brute-force limit {BRUTE_FORCE_LIMIT}", p.generators)))?;
    let mut out = Vec::new();
    let mut arcs = vec![0; p.generators];
    for mut n in 0..total {
        for slot in arcs.iter_mut().rev() {
            *slot = (n % k as u64) as usize;
            n /= k as u64;
        }
        if p.relations.iter().all(|&(a, b, c)| q.op(arcs[a], arcs[b]) == arcs[c]) {
            out.push(Coloring::new(arcs.clone()));
        }
    }
    Ok(out)
}

/// Number of homomorphisms from the presented quandle into `q`, by plain
/// backtracking over generators.
pub fn count_homomorphisms(p: &QuandlePresentation, q: &FiniteQuandle) -> u64 {
    fn go(p: &QuandlePresentation, q: &FiniteQuandle, assign: &mut Vec<usize>) -> u64 {
        let g = assign.len();
        let ok = p.relations.iter().all(|&(a, b, c)| if a < g && b < g && c < g { q.op(assign[a], assign[b]) == assign[c] } else { true });
        if !ok {
            return 0;
        }
        if g == p.generators {
            return 1;
        }
        let mut total = 0;
        for x in 0..q.order() {
            assign.push(x);
            total += go(p, q, assign);
            assign.pop();
        }
        total
    }
    go(p, q, &mut Vec::new())
}

/// The unique shadow coloring with `base` on the unbounded face.
pub fn extend_to_shadow(
    d: &OrientedDiagram,
    q: &FiniteQuandle,
    phi: &Coloring,
    base: usize,
    carrier: Option<&XSet>,
) -> Result<ShadowColoring> {
    match carrier {
        Some(e) => {
            if e.base_order() != q.order() {
                return Err(Error::parameter("X-set is over a different quandle"));
            }
            extend_with(d, phi, base, e)
        }
        None => extend_with(d, phi, base, q),
    }
}

fn extend_with<A: RightAction + ?Sized>(d: &OrientedDiagram, phi: &Coloring, base: usize, carrier: &A) -> Result<ShadowColoring> {
    if base >= carrier.carrier_size() {
        return Err(Error::OutOfRange(format!("base color {base} (carrier has {} elements)", carrier.carrier_size())));
    }
    let nf = d.face_count();
    let mut faces = vec![usize::MAX; nf];
    faces[d.unbounded_face()] = base;
    let mut queue = vec![d.unbounded_face()];
    let mut adjacent: Vec<Vec<usize>> = vec![Vec::new(); nf];
    for e in 0..d.edge_count() {
        adjacent[d.right_face(e)].push(e);
        adjacent[d.left_face(e)].push(e);
    }
    while let Some(f) = queue.pop() {
        for &e in &adjacent[f] {
            let (r, l) = (d.right_face(e), d.left_face(e));
            let x = phi.edge(d, e);
            if r == f && faces[l] == usize::MAX {
                faces[l] = carrier.act(faces[r], x);
                queue.push(l);
            } else if l == f && faces[r] == usize::MAX {
                faces[r] = carrier
                    .act_inv(faces[l], x)
                    .ok_or_else(|| Error::parameter("shadow extension needs a rack action (right translations must be bijective)"))?;
                queue.push(r);
            }
        }
    }
    let s = ShadowColoring { coloring: phi.clone(), faces };
    if !s.is_valid(d, carrier) {
        return Err(Error::Invariant("shadow coloring is not coherent around some face".into()));
    }
    Ok(s)
}

/// All shadow colorings: every coloring extended from every base color.
pub fn enumerate_shadow_colorings(d: &OrientedDiagram, q: &FiniteQuandle, carrier: Option<&XSet>) -> Result<Vec<ShadowColoring>> {
    let size = carrier.map_or(q.order(), |e| e.carrier_size());
    let mut out = Vec::new();
    for phi in enumerate_colorings(d, q)? {
        for base in 0..size {
            out.push(extend_to_shadow(d, q, &phi, base, carrier)?);
        }
    }
    out.sort();
    Ok(out)
}

/// `(φ * x)(arc) = φ(arc) * x`.
pub fn act_on_coloring(phi: &Coloring, q: &FiniteQuandle, x: usize) -> Coloring {
    Coloring::new(phi.arcs.iter().map(|&a| q.op(a, x)).collect())
}

/// The action on arcs, and on faces through `carrier` (or `X` itself).
pub fn act_on_shadow(s: &ShadowColoring, q: &FiniteQuandle, carrier: Option<&XSet>, x: usize) -> ShadowColoring {
    let faces = match carrier {
        Some(e) => s.faces.iter().map(|&f| e.act(f, x)).collect(),
        None => s.faces.iter().map(|&f| q.op(f, x)).collect(),
    };
    ShadowColoring { coloring: act_on_coloring(&s.coloring, q, x), faces }
}

struct ListAction<'a, T, F> {
    items: &'a [T],
    index: HashMap<&'a T, usize>,
    act: F,
}

impl<T: Hash + Eq, F: Fn(&T, usize) -> T> RightAction for ListAction<'_, T, F> {
    fn carrier_size(&self) -> usize {
        self.items.len()
    }

    fn act(&self, e: usize, x: usize) -> usize {
        let image = (self.act)(&self.items[e], x);
        *self.index.get(&image).expect("the action preserves the coloring set")
    }

    fn act_inv(&self, _: usize, _: usize) -> Option<usize> {
        None
    }
}

/// Orbits of a finite list under a right action of `X`, as index blocks.
pub fn orbits_of<T: Hash + Eq>(items: &[T], base_order: usize, act: impl Fn(&T, usize) -> T) -> Vec<Vec<usize>> {
    let index = items.iter().enumerate().map(|(i, t)| (t, i)).collect();
    right_orbits(&ListAction { items, index, act }, base_order)
}

pub fn coloring_orbits(colorings: &[Coloring], q: &FiniteQuandle) -> Result<Vec<Vec<usize>>> {
    q.require_shelf()?;
    Ok(orbits_of(colorings, q.order(), |phi, x| act_on_coloring(phi, q, x)))
}

pub fn shadow_orbits(colorings: &[ShadowColoring], q: &FiniteQuandle, carrier: Option<&XSet>) -> Result<Vec<Vec<usize>>> {
    q.require_shelf()?;
    Ok(orbits_of(colorings, q.order(), |s, x| act_on_shadow(s, q, carrier, x)))
}

/// Transports colorings across a move using the preserved edges.
///
/// Every coloring of `before` must extend uniquely to a coloring of `after`
/// agreeing on the preserved edges; the map is checked to be a bijection.
pub fn move_bijection(
    before: &OrientedDiagram,
    after: &OrientedDiagram,
    preserved: &[(usize, usize)],
    q: &FiniteQuandle,
) -> Result<Vec<(Coloring, Coloring)>> {
    let src = enumerate_colorings(before, q)?;
    let dst = enumerate_colorings(after, q)?;
    if src.len() != dst.len() {
        return Err(Error::Invariant(format!("coloring counts differ across the move: {} vs {}", src.len(), dst.len())));
    }
    let key = |d: &OrientedDiagram, phi: &Coloring, side: usize| -> Vec<usize> {
        preserved.iter().map(|p| phi.edge(d, if side == 0 { p.0 } else { p.1 })).collect()
    };
    let mut by_key: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    for (i, phi) in dst.iter().enumerate() {
        by_key.entry(key(after, phi, 1)).or_default().push(i);
    }
    let mut used = vec![false; dst.len()];
    let mut out = Vec::with_capacity(src.len());
    for phi in &src {
        let hit = by_key.get(&key(before, phi, 0)).map(|v| v.as_slice()).unwrap_or(&[]);
        if hit.len() != 1 {
            return Err(Error::Invariant(format!("coloring {phi} has {} images across the move", hit.len())));
        }
        if std::mem::replace(&mut used[hit[0]], true) {
            return Err(Error::Invariant("move correspondence is not injective".into()));
        }
        out.push((phi.clone(), dst[hit[0]].clone()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil() -> OrientedDiagram {
        OrientedDiagram::parse_pd("X(4,2,5,1);X(6,4,1,3);X(2,6,3,5)").unwrap()
    }

    #[test]
    fn trefoil_counts() {
        let d = trefoil();
        let q = FiniteQuandle::dihedral(3).unwrap();
        let cols = enumerate_colorings(&d, &q).unwrap();
        assert_eq!(cols.len(), 9);
        assert_eq!(cols.iter().filter(|c| c.is_constant()).count(), 3);
        assert_eq!(cols, enumerate_colorings_brute(&d, &q).unwrap());
        let orbits = coloring_orbits(&cols, &q).unwrap();
        assert_eq!(orbits.iter().map(|o| o.len()).collect::<Vec<_>>(), vec![3, 6]);
    }

    #[test]
    fn unknot_presentation() {
        let p = fundamental_presentation(&OrientedDiagram::unknot());
        assert_eq!((p.generators, p.relations.len()), (1, 0));
        let s = shadow_presentation(&trefoil());
        assert_eq!((s.generators, s.relations.len()), (4, 3));
    }

    #[test]
    fn shadow_extension() {
        let d = trefoil();
        let q = FiniteQuandle::dihedral(3).unwrap();
        assert_eq!(enumerate_shadow_colorings(&d, &q, None).unwrap().len(), 27);
        let swap = XSet::new(&q, &[vec![1, 1, 1], vec![0, 0, 0]]).unwrap();
        let phi = &enumerate_colorings(&d, &q).unwrap()[4];
        for base in 0..2 {
            let s = extend_to_shadow(&d, &q, phi, base, Some(&swap)).unwrap();
            assert!(s.is_valid(&d, &swap));
        }
    }

    #[test]
    fn kei_flag_agrees() {
        let d = trefoil();
        let q = FiniteQuandle::dihedral(5).unwrap();
        let a = enumerate_colorings(&d, &q).unwrap();
        let b = enumerate_colorings_with(&d, &q, ColoringOptions { unoriented: true }).unwrap();
        assert_eq!(a, b);
        let nk = FiniteQuandle::alexander(5, 2).unwrap();
        assert!(enumerate_colorings_with(&d, &nk, ColoringOptions { unoriented: true }).is_err());
    }
}
