//! Finite shelves, racks and quandles given by Cayley tables.
//!
//! Elements are the indices `0..k`; `table[a * k + b]` holds `a * b`.
//! The axiom classification is computed once at construction.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which of the cumulative magma axioms a table satisfies.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Classification {
    pub shelf: bool,
    pub spindle: bool,
    pub rack: bool,
    pub quandle: bool,
    pub kei: bool,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "shelf={} spindle={} rack={} quandle={} kei={}", self.shelf, self.spindle, self.rack, self.quandle, self.kei)
    }
}

/// Exhaustively classify a square table.
pub fn classify(table: &[Vec<usize>]) -> Result<Classification> {
    let k = table.len();
    let flat = flatten(table)?;
    Ok(classify_flat(k, &flat))
}

fn flatten(table: &[Vec<usize>]) -> Result<Vec<usize>> {
    let k = table.len();
    let mut flat = Vec::with_capacity(k * k);
    for (a, row) in table.iter().enumerate() {
        if row.len() != k {
            return Err(Error::format(format!("table is not square: row {a} has {} entries, expected {k}", row.len())));
        }
        for (b, &v) in row.iter().enumerate() {
            if v >= k {
                return Err(Error::format(format!("entry {a}*{b} = {v} is not an element of 0..{k}")));
            }
            flat.push(v);
        }
    }
    Ok(flat)
}

fn classify_flat(k: usize, t: &[usize]) -> Classification {
    let op = |a: usize, b: usize| t[a * k + b];
    let shelf = (0..k).all(|a| (0..k).all(|b| (0..k).all(|c| op(op(a, b), c) == op(op(a, c), op(b, c)))));
    let idempotent = (0..k).all(|a| op(a, a) == a);
    let bijective = (0..k).all(|b| {
        let mut seen = vec![false; k];
        (0..k).all(|a| !std::mem::replace(&mut seen[op(a, b)], true))
    });
    let involutive = (0..k).all(|a| (0..k).all(|b| op(op(a, b), b) == a));
    let spindle = shelf && idempotent;
    let rack = shelf && bijective;
    let quandle = rack && idempotent;
    Classification { shelf, spindle, rack, quandle, kei: quandle && involutive }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteQuandle {
    name: String,
    labels: Vec<String>,
    order: usize,
    table: Vec<usize>,
    inverse: Option<Vec<usize>>,
    class: Classification,
}

impl FiniteQuandle {
    /// Build from a `k × k` table; the table need not satisfy any axiom.
    pub fn from_table(name: impl Into<String>, table: &[Vec<usize>]) -> Result<Self> {
        let k = table.len();
        if k == 0 {
            return Err(Error::format("empty table"));
        }
        let flat = flatten(table)?;
        Ok(Self::from_flat(name.into(), k, flat))
    }

    fn from_flat(name: String, k: usize, table: Vec<usize>) -> Self {
        let class = classify_flat(k, &table);
        let inverse = class.rack.then(|| {
            let mut inv = vec![0; k * k];
            for a in 0..k {
                for b in 0..k {
                    inv[table[a * k + b] * k + b] = a;
                }
            }
            inv
        });
        FiniteQuandle { name, labels: (0..k).map(|i| i.to_string()).collect(), order: k, table, inverse, class }
    }

    /// `a *₀ b = a`.
    pub fn trivial(k: usize) -> Result<Self> {
        check_order(k)?;
        let table = (0..k).flat_map(|a| std::iter::repeat(a).take(k)).collect();
        Ok(Self::from_flat(format!("trivial:{k}"), k, table))
    }

    /// Dihedral quandle `a * b = 2b - a mod k`.
    pub fn dihedral(k: usize) -> Result<Self> {
        let mut q = Self::takasaki(k)?;
        q.name = format!("dihedral:{k}");
        Ok(q)
    }

    /// Takasaki kei of the cyclic group `Z_k`.
    pub fn takasaki(k: usize) -> Result<Self> {
        check_order(k)?;
        let table = (0..k).flat_map(|a| (0..k).map(move |b| (2 * b + k - a) % k)).collect();
        Ok(Self::from_flat(format!("takasaki:{k}"), k, table))
    }

    /// Alexander quandle on `Z_m`: `a * b = t·a + (1 - t)·b mod m`.
    pub fn alexander(m: usize, t: usize) -> Result<Self> {
        check_order(m)?;
        let t = t % m;
        if num_integer::gcd(t, m) != 1 {
            return Err(Error::parameter(format!("t = {t} is not invertible mod {m}")));
        }
        let one_minus_t = (1 + m - t) % m;
        let table = (0..m).flat_map(|a| (0..m).map(move |b| (t * a + one_minus_t * b) % m)).collect();
        Ok(Self::from_flat(format!("alexander:{m}:{t}"), m, table))
    }

    /// Conjugation quandle `a * b = b⁻¹ a b` of a finite group given by its multiplication table.
    pub fn conjugation(name: impl Into<String>, group: &[Vec<usize>]) -> Result<Self> {
        let k = group.len();
        let g = flatten(group)?;
        let mul = |a: usize, b: usize| g[a * k + b];
        let e = (0..k)
            .find(|&e| (0..k).all(|x| mul(e, x) == x && mul(x, e) == x))
            .ok_or_else(|| Error::parameter("group table has no identity"))?;
        let mut inv = vec![0; k];
        for (a, slot) in inv.iter_mut().enumerate() {
            *slot = (0..k).find(|&b| mul(a, b) == e).ok_or_else(|| Error::parameter(format!("element {a} has no inverse")))?;
        }
        let assoc = (0..k).all(|a| (0..k).all(|b| (0..k).all(|c| mul(mul(a, b), c) == mul(a, mul(b, c)))));
        if !assoc {
            return Err(Error::parameter("group table is not associative"));
        }
        let table = (0..k).flat_map(|a| (0..k).map(move |b| (a, b))).map(|(a, b)| mul(mul(inv[b], a), b)).collect();
        Ok(Self::from_flat(name.into(), k, table))
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order {
            return Err(Error::format(format!("{} labels given for a quandle of order {}", labels.len(), self.order)));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn classification(&self) -> Classification {
        self.class
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    /// `a ̄* b`, the unique `x` with `x * b = a`. Only defined for racks.
    #[inline]
    pub fn op_inv(&self, a: usize, b: usize) -> usize {
        self.inverse.as_ref().expect("op_inv called on a non-rack")[a * self.order + b]
    }

    pub fn has_inverse(&self) -> bool {
        self.inverse.is_some()
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    pub fn require_shelf(&self) -> Result<()> {
        if self.class.shelf {
            return Ok(());
        }
        let k = self.order;
        for a in 0..k {
            for b in 0..k {
                for c in 0..k {
                    if self.op(self.op(a, b), c) != self.op(self.op(a, c), self.op(b, c)) {
                        return Err(Error::Structure(format!("not a shelf: self-distributivity fails at (a,b,c)=({a},{b},{c})")));
                    }
                }
            }
        }
        unreachable!()
    }

    pub fn require_spindle(&self) -> Result<()> {
        self.require_shelf()?;
        match (0..self.order).find(|&a| self.op(a, a) != a) {
            Some(a) => Err(Error::Structure(format!("not a spindle: idempotency fails at a={a}"))),
            None => Ok(()),
        }
    }

    pub fn require_rack(&self) -> Result<()> {
        self.require_shelf()?;
        if self.class.rack {
            Ok(())
        } else {
            let k = self.order;
            let b = (0..k)
                .find(|&b| {
                    let mut img: Vec<_> = (0..k).map(|a| self.op(a, b)).collect();
                    img.sort_unstable();
                    img.dedup();
                    img.len() != k
                })
                .unwrap_or(0);
            Err(Error::Structure(format!("not a rack: right translation by b={b} is not a bijection")))
        }
    }

    pub fn require_quandle(&self) -> Result<()> {
        self.require_rack()?;
        self.require_spindle()
    }

    pub fn require_kei(&self) -> Result<()> {
        self.require_quandle()?;
        if self.class.kei {
            Ok(())
        } else {
            Err(Error::Structure("not a kei: (a*b)*b = a fails".into()))
        }
    }

    /// Parse the JSON quandle file `{"name": .., "order": k, "table": [[..]]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: QuandleFile = serde_json::from_str(text).map_err(|e| Error::format(format!("quandle file: {e}")))?;
        if file.table.len() != file.order {
            return Err(Error::format(format!("order {} does not match table with {} rows", file.order, file.table.len())));
        }
        let q = Self::from_table(file.name, &file.table)?;
        match file.labels {
            Some(labels) => q.with_labels(labels),
            None => Ok(q),
        }
    }

    pub fn to_json(&self) -> String {
        let file = QuandleFile { name: self.name.clone(), order: self.order, table: self.table(), labels: None };
        serde_json::to_string(&file).expect("serializable")
    }
}

fn check_order(k: usize) -> Result<()> {
    if k == 0 {
        Err(Error::parameter("order must be at least 1"))
    } else {
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct QuandleFile {
    name: String,
    order: usize,
    table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

/// A set with a right action, used for orbits and shadow colorings.
pub trait RightAction {
    fn carrier_size(&self) -> usize;
    fn act(&self, e: usize, x: usize) -> usize;
    /// Inverse of `e ↦ e * x`, when it is a bijection.
    fn act_inv(&self, e: usize, x: usize) -> Option<usize>;
}

impl RightAction for FiniteQuandle {
    fn carrier_size(&self) -> usize {
        self.order
    }

    fn act(&self, e: usize, x: usize) -> usize {
        self.op(e, x)
    }

    fn act_inv(&self, e: usize, x: usize) -> Option<usize> {
        self.inverse.as_ref().map(|inv| inv[e * self.order + x])
    }
}

/// A right `X`-set: `action[e][x] = e * x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XSet {
    base_order: usize,
    size: usize,
    action: Vec<usize>,
    inverse: Option<Vec<usize>>,
}

impl XSet {
    /// Validates the shelf-set law `(e*x₁)*x₂ = (e*x₂)*(x₁*x₂)`.
    pub fn new(base: &FiniteQuandle, action: &[Vec<usize>]) -> Result<Self> {
        let k = base.order();
        let m = action.len();
        let mut flat = Vec::with_capacity(m * k);
        for (e, row) in action.iter().enumerate() {
            if row.len() != k {
                return Err(Error::format(format!("action row {e} has {} entries, expected {k}", row.len())));
            }
            for &v in row {
                if v >= m {
                    return Err(Error::format(format!("action value {v} outside carrier of size {m}")));
                }
                flat.push(v);
            }
        }
        let act = |e: usize, x: usize| flat[e * k + x];
        for e in 0..m {
            for x1 in 0..k {
                for x2 in 0..k {
                    if act(act(e, x1), x2) != act(act(e, x2), base.op(x1, x2)) {
                        return Err(Error::parameter(format!("shelf-set law fails at (e,x1,x2)=({e},{x1},{x2})")));
                    }
                }
            }
        }
        let bijective = (0..k).all(|x| {
            let mut seen = vec![false; m];
            (0..m).all(|e| !std::mem::replace(&mut seen[act(e, x)], true))
        });
        let inverse = bijective.then(|| {
            let mut inv = vec![0; m * k];
            for e in 0..m {
                for x in 0..k {
                    inv[act(e, x) * k + x] = e;
                }
            }
            inv
        });
        Ok(XSet { base_order: k, size: m, action: flat, inverse })
    }

    /// `X` acting on itself by right multiplication.
    pub fn regular(base: &FiniteQuandle) -> Self {
        XSet::new(base, &base.table()).expect("a shelf is a shelf-set over itself")
    }

    pub fn is_rack_set(&self) -> bool {
        self.inverse.is_some()
    }

    pub fn base_order(&self) -> usize {
        self.base_order
    }

    pub fn action_table(&self) -> Vec<Vec<usize>> {
        self.action.chunks(self.base_order).map(|r| r.to_vec()).collect()
    }
}

impl RightAction for XSet {
    fn carrier_size(&self) -> usize {
        self.size
    }

    fn act(&self, e: usize, x: usize) -> usize {
        self.action[e * self.base_order + x]
    }

    fn act_inv(&self, e: usize, x: usize) -> Option<usize> {
        self.inverse.as_ref().map(|inv| inv[e * self.base_order + x])
    }
}

/// Orbits of the group generated by all right translations `e ↦ e * x`.
///
/// Blocks are sorted; each block's representative is its least element and
/// blocks are ordered by representative.
pub fn right_orbits<A: RightAction + ?Sized>(action: &A, base_order: usize) -> Vec<Vec<usize>> {
    let m = action.carrier_size();
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for e in 0..m {
        for x in 0..base_order {
            let f = action.act(e, x);
            let (a, b) = (find(&mut parent, e), find(&mut parent, f));
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi] = lo;
            }
        }
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut index = vec![usize::MAX; m];
    for e in 0..m {
        let r = find(&mut parent, e);
        if index[r] == usize::MAX {
            index[r] = blocks.len();
            blocks.push(Vec::new());
        }
        blocks[index[r]].push(e);
    }
    blocks
}

/// The quandle on `X ⊔ E` with `a * e = a` for every `e ∈ E`.
/// Elements of `E` are numbered `k..k+m`.
pub fn union_with_xset(q: &FiniteQuandle, e: &XSet) -> Result<FiniteQuandle> {
    if e.base_order() != q.order() {
        return Err(Error::parameter("X-set is over a quandle of different order"));
    }
    let k = q.order();
    let n = k + e.carrier_size();
    let mut table = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            table[a * n + b] = match (a < k, b < k) {
                (true, true) => q.op(a, b),
                (false, true) => k + e.act(a - k, b),
                (_, false) => a,
            };
        }
    }
    Ok(FiniteQuandle::from_flat(format!("{}+E{}", q.name(), e.carrier_size()), n, table))
}

/// Multiplication table of the symmetric group S₃, elements ordered
/// `e, (12), (13), (23), (123), (132)` and composed right-to-left.
pub fn s3_table() -> Vec<Vec<usize>> {
    let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]];
    let idx = |p: [usize; 3]| perms.iter().position(|&q| q == p).unwrap();
    perms.iter().map(|a| perms.iter().map(|b| idx([a[b[0]], a[b[1]], a[b[2]]])).collect()).collect()
}

pub fn cyclic_group_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
}

/// Parse a quandle spec such as `dihedral:3`, `alexander:5:2`, `trivial:4`,
/// `conjugation:S3`, `conjugation:Z4` or `takasaki:6`.
pub fn from_spec(spec: &str) -> Result<FiniteQuandle> {
    let parts: Vec<&str> = spec.split(':').collect();
    let int = |i: usize| -> Result<usize> {
        parts
            .get(i)
            .ok_or_else(|| Error::parameter(format!("quandle spec `{spec}` is missing parameter {i}")))?
            .parse()
            .map_err(|_| Error::parameter(format!("quandle spec `{spec}`: parameter {i} is not an integer")))
    };
    let arity = |n: usize| -> Result<()> {
        if parts.len() == n + 1 {
            Ok(())
        } else {
            Err(Error::parameter(format!("quandle spec `{spec}` expects {n} parameter(s)")))
        }
    };
    match parts[0] {
        "trivial" => {
            arity(1)?;
            FiniteQuandle::trivial(int(1)?)
        }
        "dihedral" => {
            arity(1)?;
            FiniteQuandle::dihedral(int(1)?)
        }
        "takasaki" => {
            arity(1)?;
            FiniteQuandle::takasaki(int(1)?)
        }
        "alexander" => {
            arity(2)?;
            FiniteQuandle::alexander(int(1)?, int(2)?)
        }
        "conjugation" => {
            arity(1)?;
            match parts[1] {
                "S3" => FiniteQuandle::conjugation("conjugation:S3", &s3_table()),
                p if p.starts_with('Z') => {
                    let n: usize = p[1..].parse().map_err(|_| Error::parameter(format!("bad cyclic group `{p}`")))?;
                    check_order(n)?;
                    FiniteQuandle::conjugation(format!("conjugation:{p}"), &cyclic_group_table(n))
                }
                p => Err(Error::parameter(format!("unknown group `{p}`"))),
            }
        }
        other => Err(Error::parameter(format!("unknown quandle family `{other}`"))),
    }
}

/// The shipped catalog: trivial(1..=6), dihedral(3..=9), every Alexander
/// quandle on `Z_m` for `2 ≤ m ≤ 8` and unit `t`, and the conjugation
/// quandles of S₃ and Z₄.
pub fn catalog() -> Vec<FiniteQuandle> {
    let mut out = Vec::new();
    for k in 1..=6 {
        out.push(FiniteQuandle::trivial(k).unwrap());
    }
    for k in 3..=9 {
        out.push(FiniteQuandle::dihedral(k).unwrap());
    }
    for m in 2..=8usize {
        for t in 1..m {
            if num_integer::gcd(t, m) == 1 {
                out.push(FiniteQuandle::alexander(m, t).unwrap());
            }
        }
    }
    out.push(FiniteQuandle::conjugation("conjugation:S3", &s3_table()).unwrap());
    out.push(FiniteQuandle::conjugation("conjugation:Z4", &cyclic_group_table(4)).unwrap());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_flags() -> Classification {
        Classification { shelf: true, spindle: true, rack: true, quandle: true, kei: true }
    }

    #[test]
    fn dihedral_three_is_kei() {
        let t: Vec<Vec<usize>> = (0..3).map(|a| (0..3).map(|b| (2 * b + 3 - a) % 3).collect()).collect();
        assert_eq!(classify(&t).unwrap(), all_flags());
    }

    #[test]
    fn trivial_is_kei() {
        for k in 1..=6 {
            let q = FiniteQuandle::trivial(k).unwrap();
            assert!(q.classification().quandle && q.classification().kei);
        }
    }

    #[test]
    fn spindle_that_is_not_rack() {
        let t = vec![vec![0, 1], vec![0, 1]];
        let c = classify(&t).unwrap();
        assert!(c.shelf && c.spindle);
        assert!(!c.rack && !c.quandle && !c.kei);
        let q = FiniteQuandle::from_table("x", &t).unwrap();
        let err = q.require_rack().unwrap_err();
        assert!(err.to_string().contains("b=0"), "{err}");
    }

    #[test]
    fn malformed_tables() {
        assert!(matches!(classify(&[vec![0, 1], vec![0]]), Err(Error::Format(_))));
        assert!(matches!(classify(&[vec![0, 2], vec![0, 1]]), Err(Error::Format(_))));
    }

    #[test]
    fn takasaki_equals_dihedral() {
        assert_eq!(FiniteQuandle::takasaki(3).unwrap().table(), FiniteQuandle::dihedral(3).unwrap().table());
    }

    #[test]
    fn alexander_formula() {
        let q = FiniteQuandle::alexander(5, 2).unwrap();
        assert_eq!(q.op(0, 1), 4);
        assert!(q.classification().quandle);
        assert!(matches!(FiniteQuandle::alexander(6, 2), Err(Error::Parameter(_))));
    }

    #[test]
    fn conjugation_s3() {
        let q = from_spec("conjugation:S3").unwrap();
        assert_eq!(q.order(), 6);
        let c = q.classification();
        assert!(c.quandle);
        assert!(!c.kei);
        // Z4 is abelian so conjugation is trivial
        let z4 = from_spec("conjugation:Z4").unwrap();
        assert_eq!(z4.table(), FiniteQuandle::trivial(4).unwrap().table());
    }

    #[test]
    fn catalog_flags_reproduce() {
        for q in catalog() {
            assert_eq!(classify(&q.table()).unwrap(), q.classification(), "{}", q.name());
            assert!(q.classification().quandle, "{}", q.name());
        }
    }

    #[test]
    fn dihedral_kei_up_to_twelve() {
        for k in 1..=12 {
            assert!(FiniteQuandle::dihedral(k).unwrap().classification().kei, "k={k}");
        }
    }

    #[test]
    fn inverse_table_law() {
        for q in catalog() {
            for a in 0..q.order() {
                for b in 0..q.order() {
                    assert_eq!(q.op_inv(q.op(a, b), b), a);
                    assert_eq!(q.op(q.op_inv(a, b), b), a);
                }
            }
        }
    }

    #[test]
    fn orbits() {
        let d3 = FiniteQuandle::dihedral(3).unwrap();
        assert_eq!(right_orbits(&d3, 3), vec![vec![0, 1, 2]]);
        let t4 = FiniteQuandle::trivial(4).unwrap();
        assert_eq!(right_orbits(&t4, 4), vec![vec![0], vec![1], vec![2], vec![3]]);
        // dihedral(4): {0,2} and {1,3}
        let d4 = FiniteQuandle::dihedral(4).unwrap();
        assert_eq!(right_orbits(&d4, 4), vec![vec![0, 2], vec![1, 3]]);
    }

    #[test]
    fn orbits_partition_and_closed() {
        for q in catalog() {
            let blocks = right_orbits(&q, q.order());
            let mut seen = vec![0; q.order()];
            for b in &blocks {
                for &e in b {
                    seen[e] += 1;
                    for x in 0..q.order() {
                        assert!(b.contains(&q.op(e, x)));
                    }
                }
            }
            assert!(seen.iter().all(|&c| c == 1));
        }
    }

    #[test]
    fn union_trivial_point() {
        let t1 = FiniteQuandle::trivial(1).unwrap();
        let e = XSet::new(&t1, &[vec![0]]).unwrap();
        let u = union_with_xset(&t1, &e).unwrap();
        assert_eq!(u.table(), FiniteQuandle::trivial(2).unwrap().table());
    }

    #[test]
    fn union_regular_dihedral() {
        let d3 = FiniteQuandle::dihedral(3).unwrap();
        let u = union_with_xset(&d3, &XSet::regular(&d3)).unwrap();
        assert_eq!(u.order(), 6);
        assert!(u.classification().quandle);
        for a in 0..6 {
            for e in 3..6 {
                assert_eq!(u.op(a, e), a);
            }
        }
    }

    #[test]
    fn union_with_non_bijective_action_is_not_rack() {
        let t2 = FiniteQuandle::trivial(2).unwrap();
        // constant action is a shelf-set but not a rack-set
        let e = XSet::new(&t2, &[vec![0, 0], vec![0, 0]]).unwrap();
        assert!(!e.is_rack_set());
        let u = union_with_xset(&t2, &e).unwrap();
        assert!(!u.classification().rack);
    }

    #[test]
    fn shelf_set_law_violation() {
        let d3 = FiniteQuandle::dihedral(3).unwrap();
        let bad = XSet::new(&d3, &[vec![1, 0, 0], vec![0, 1, 1]]);
        assert!(matches!(bad, Err(Error::Parameter(_))));
    }

    #[test]
    fn json_round_trip() {
        let q = FiniteQuandle::dihedral(5).unwrap();
        let back = FiniteQuandle::from_json(&q.to_json()).unwrap();
        assert_eq!(back.table(), q.table());
        assert!(FiniteQuandle::from_json(r#"{"name":"x","order":2,"table":[[0,1]]}"#).is_err());
    }
}
