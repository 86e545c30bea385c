//! Rack, degenerate and quandle chain complexes over a finite quandle,
//! untwisted and twisted.
//!
//! Face maps are numbered `1..=n` (shifted by one from the 0-based
//! simplicial convention). The untwisted boundary sums from `i = 2`
//! because `d₁^{*₀} = d₁^{*}`; the twisted one sums from `i = 1`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::FiniteQuandle;
use crate::error::{Error, Result};
use crate::linalg::SparseMatrix;
use crate::ring::Ring;

/// Tuples are packed as base-`k` integers (first coordinate most significant),
/// so key order is lexicographic tuple order.
pub type TupleKey = u64;

pub fn pack(order: usize, tuple: &[usize]) -> TupleKey {
    tuple.iter().fold(0u64, |acc, &x| acc * order as u64 + x as u64)
}

pub fn unpack(order: usize, degree: usize, mut key: TupleKey) -> Vec<usize> {
    let mut out = vec![0; degree];
    for slot in out.iter_mut().rev() {
        *slot = (key % order as u64) as usize;
        key /= order as u64;
    }
    out
}

pub fn is_degenerate(tuple: &[usize]) -> bool {
    tuple.windows(2).any(|w| w[0] == w[1])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Theory {
    /// Rack complex `C^R`.
    R,
    /// Degenerate subcomplex `C^D`.
    D,
    /// Quandle quotient `C^Q = C^R / C^D`.
    Q,
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theory::R => "R",
            Theory::D => "D",
            Theory::Q => "Q",
        })
    }
}

impl std::str::FromStr for Theory {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "R" | "r" => Ok(Theory::R),
            "D" | "d" => Ok(Theory::D),
            "Q" | "q" => Ok(Theory::Q),
            _ => Err(Error::parameter(format!("unknown theory `{s}` (expected R, D or Q)"))),
        }
    }
}

impl Theory {
    pub fn contains(&self, tuple: &[usize]) -> bool {
        match self {
            Theory::R => true,
            Theory::D => is_degenerate(tuple),
            Theory::Q => !is_degenerate(tuple),
        }
    }
}

/// Degree and basis-size guards.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_degree: usize,
    pub max_basis: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_degree: 6, max_basis: 10_000_000 }
    }
}

impl Limits {
    /// Defaults, with `QUANDLE_MAX_BASIS` overriding the basis-size guard.
    pub fn from_env() -> Self {
        let mut l = Limits::default();
        if let Some(v) = std::env::var("QUANDLE_MAX_BASIS").ok().and_then(|s| s.parse().ok()) {
            l.max_basis = v;
        }
        l
    }

    pub fn check(&self, order: usize, degree: usize) -> Result<()> {
        if degree > self.max_degree {
            return Err(Error::Resource(format!("degree {degree} exceeds the degree cap {}", self.max_degree)));
        }
        let size = (order as u64).checked_pow(degree as u32);
        match size {
            Some(s) if s <= self.max_basis => Ok(()),
            _ => Err(Error::Resource(format!("basis of degree {degree} over {order} elements exceeds {} tuples", self.max_basis))),
        }
    }
}

/// A sparse formal combination of `degree`-tuples over `0..order`.
#[derive(Clone, PartialEq, Eq)]
pub struct ChainVector<R: Ring> {
    ring: R,
    order: usize,
    degree: usize,
    terms: BTreeMap<TupleKey, R::Elem>,
}

impl<R: Ring> fmt::Debug for ChainVector<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl<R: Ring> fmt::Display for ChainVector<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (t, c)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let tuple: Vec<String> = t.iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]({})", self.ring.format(c), tuple.join(","))?;
        }
        Ok(())
    }
}

impl<R: Ring> ChainVector<R> {
    pub fn zero(ring: R, order: usize, degree: usize) -> Self {
        ChainVector { ring, order, degree, terms: BTreeMap::new() }
    }

    pub fn basis(ring: R, order: usize, tuple: &[usize]) -> Self {
        let mut c = Self::zero(ring.clone(), order, tuple.len());
        let one = ring.one();
        c.add_term(tuple, &one);
        c
    }

    pub fn from_terms<'a, I>(ring: R, order: usize, degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a [usize], R::Elem)>,
    {
        let mut c = Self::zero(ring, order, degree);
        for (t, coeff) in terms {
            c.check_tuple(t)?;
            c.add_term(t, &coeff);
        }
        Ok(c)
    }

    fn check_tuple(&self, t: &[usize]) -> Result<()> {
        if t.len() != self.degree {
            return Err(Error::format(format!("tuple of length {} in a degree-{} chain", t.len(), self.degree)));
        }
        if let Some(&x) = t.iter().find(|&&x| x >= self.order) {
            return Err(Error::OutOfRange(format!("element {x} not below {}", self.order)));
        }
        Ok(())
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, tuple: &[usize], coeff: &R::Elem) {
        debug_assert_eq!(tuple.len(), self.degree);
        self.add_key(pack(self.order, tuple), coeff);
    }

    pub fn add_key(&mut self, key: TupleKey, coeff: &R::Elem) {
        if self.ring.is_zero(coeff) {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = self.ring.add(o.get(), coeff);
                if self.ring.is_zero(&s) {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn coefficient(&self, tuple: &[usize]) -> R::Elem {
        self.terms.get(&pack(self.order, tuple)).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vec<usize>, &R::Elem)> + '_ {
        self.terms.iter().map(move |(&k, c)| (unpack(self.order, self.degree, k), c))
    }

    pub fn keys(&self) -> impl Iterator<Item = (TupleKey, &R::Elem)> + '_ {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(format!("{} vs {}", self.ring.tag(), other.ring.tag())));
        }
        if self.order != other.order || self.degree != other.degree {
            return Err(Error::parameter(format!(
                "chains of degree {}/{} over {}/{} elements cannot be combined",
                self.degree, other.degree, self.order, other.order
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (&k, c) in &other.terms {
            out.add_key(k, c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|r, c| r.neg(c))
    }

    pub fn scale(&self, s: &R::Elem) -> Self {
        self.map_coeffs(|r, c| r.mul(c, s))
    }

    fn map_coeffs(&self, f: impl Fn(&R, &R::Elem) -> R::Elem) -> Self {
        let mut out = Self::zero(self.ring.clone(), self.order, self.degree);
        for (&k, c) in &self.terms {
            out.add_key(k, &f(&self.ring, c));
        }
        out
    }

    /// Linear extension of a map sending each basis tuple to a signed tuple.
    pub fn map_tuples(&self, new_degree: usize, f: impl Fn(&[usize]) -> Option<(Vec<usize>, i64)>) -> Self {
        let mut out = Self::zero(self.ring.clone(), self.order, new_degree);
        for (t, c) in self.iter() {
            if let Some((image, sign)) = f(&t) {
                out.add_term(&image, &self.ring.scale_i64(c, sign));
            }
        }
        out
    }

    /// Drop terms on degenerate tuples (projection onto the quandle quotient basis).
    pub fn project_quandle(&self) -> Self {
        self.retain(|t| !is_degenerate(t))
    }

    pub fn retain(&self, keep: impl Fn(&[usize]) -> bool) -> Self {
        let mut out = self.clone();
        out.terms.retain(|&k, _| keep(&unpack(self.order, self.degree, k)));
        out
    }

    pub fn is_degenerate_supported(&self) -> bool {
        self.iter().all(|(t, _)| is_degenerate(&t))
    }

    /// Change coefficients into another ring.
    pub fn convert<S: Ring>(&self, ring: S, f: impl Fn(&R::Elem) -> S::Elem) -> ChainVector<S> {
        let mut out = ChainVector::zero(ring, self.order, self.degree);
        for (&k, c) in &self.terms {
            let v = f(c);
            out.add_key(k, &v);
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> =
            self.iter().map(|(t, c)| serde_json::json!({"tuple": t, "coeff": self.ring.format(c)})).collect();
        serde_json::json!({"degree": self.degree, "ring": self.ring.tag(), "terms": terms})
    }

    pub fn from_json(ring: R, order: usize, value: &serde_json::Value) -> Result<Self> {
        #[derive(Deserialize)]
        struct Term {
            tuple: Vec<usize>,
            coeff: serde_json::Value,
        }
        #[derive(Deserialize)]
        struct Doc {
            degree: usize,
            ring: String,
            terms: Vec<Term>,
        }
        let doc: Doc = serde_json::from_value(value.clone()).map_err(|e| Error::format(format!("chain: {e}")))?;
        if doc.ring != ring.tag() {
            return Err(Error::RingMismatch(format!("chain is over {} but {} was requested", doc.ring, ring.tag())));
        }
        let mut c = Self::zero(ring, order, doc.degree);
        for t in doc.terms {
            c.check_tuple(&t.tuple)?;
            let s = match &t.coeff {
                serde_json::Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            let coeff = c.ring.parse(&s)?;
            c.add_term(&t.tuple, &coeff);
        }
        Ok(c)
    }
}

/// `d_i^{(*₀)}`: delete coordinate `i` (1-based).
pub fn face0_tuple(i: usize, x: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(x.len() - 1);
    out.extend_from_slice(&x[..i - 1]);
    out.extend_from_slice(&x[i..]);
    out
}

/// `d_i^{(*)}(x) = (x₁*xᵢ, …, x_{i-1}*xᵢ, x_{i+1}, …, x_n)`.
pub fn face_tuple(q: &FiniteQuandle, i: usize, x: &[usize]) -> Vec<usize> {
    let xi = x[i - 1];
    let mut out = Vec::with_capacity(x.len() - 1);
    out.extend(x[..i - 1].iter().map(|&y| q.op(y, xi)));
    out.extend_from_slice(&x[i..]);
    out
}

fn check_face_index<R: Ring>(i: usize, c: &ChainVector<R>) -> Result<()> {
    if i == 0 || i > c.degree() {
        return Err(Error::OutOfRange(format!("face index {i} outside 1..={}", c.degree())));
    }
    Ok(())
}

pub fn face_star0<R: Ring>(i: usize, c: &ChainVector<R>) -> Result<ChainVector<R>> {
    check_face_index(i, c)?;
    Ok(c.map_tuples(c.degree() - 1, |t| Some((face0_tuple(i, t), 1))))
}

pub fn face_star<R: Ring>(q: &FiniteQuandle, i: usize, c: &ChainVector<R>) -> Result<ChainVector<R>> {
    check_face_index(i, c)?;
    Ok(c.map_tuples(c.degree() - 1, |t| Some((face_tuple(q, i, t), 1))))
}

/// `s_i`: duplicate coordinate `i`.
pub fn degeneracy<R: Ring>(i: usize, c: &ChainVector<R>) -> Result<ChainVector<R>> {
    check_face_index(i, c)?;
    Ok(c.map_tuples(c.degree() + 1, |t| {
        let mut out = t.to_vec();
        out.insert(i, t[i - 1]);
        Some((out, 1))
    }))
}

fn degenerate_tuple(i: usize, x: &[usize]) -> Vec<usize> {
    let mut out = x.to_vec();
    out.insert(i, x[i - 1]);
    out
}

/// Checks, on every tuple of `Xⁿ`, the identities `d_i d_j = d_{j−1} d_i` (i < j),
/// `s_i s_j = s_{j+1} s_i` (i ≤ j), `d_i s_j = s_{j−1} d_i` (i < j),
/// `d_i s_j = s_j d_{i−1}` (i > j + 1) and `d_i s_i = d_{i+1} s_i`, for both
/// face families. Returns the first failure.
pub fn check_simplicial_identities(q: &FiniteQuandle, n: usize) -> std::result::Result<(), String> {
    let k = q.order();
    let families: [(&str, &dyn Fn(usize, &[usize]) -> Vec<usize>); 2] =
        [("d^*0", &|i, x| face0_tuple(i, x)), ("d^*", &|i, x| face_tuple(q, i, x))];
    let total = (k as u64).pow(n as u32);
    for key in 0..total {
        let x = unpack(k, n, key);
        for (name, d) in &families {
            for j in 1..=n {
                for i in 1..j {
                    if d(i, &d(j, &x)) != d(j - 1, &d(i, &x)) {
                        return Err(format!("{name}: d_{i} d_{j} != d_{} d_{i} on {x:?}", j - 1));
                    }
                }
            }
            for j in 1..=n {
                let sj = degenerate_tuple(j, &x);
                for i in 1..=n + 1 {
                    let lhs = d(i, &sj);
                    let rhs = if i < j {
                        Some(degenerate_tuple(j - 1, &d(i, &x)))
                    } else if i > j + 1 {
                        Some(degenerate_tuple(j, &d(i - 1, &x)))
                    } else {
                        None
                    };
                    if rhs.is_some_and(|r| r != lhs) {
                        return Err(format!("{name}: d_{i} s_{j} on {x:?}"));
                    }
                }
                if d(j, &sj) != d(j + 1, &sj) {
                    return Err(format!("{name}: d_{j} s_{j} != d_{} s_{j} on {x:?}", j + 1));
                }
            }
        }
        for j in 1..=n {
            for i in 1..=j {
                if degenerate_tuple(i, &degenerate_tuple(j, &x)) != degenerate_tuple(j + 1, &degenerate_tuple(i, &x)) {
                    return Err(format!("s_{i} s_{j} != s_{} s_{i} on {x:?}", j + 1));
                }
            }
        }
    }
    Ok(())
}

/// `γ(x₁, …, x_n) = (x₂, …, x_n)`.
pub fn gamma_truncate<R: Ring>(c: &ChainVector<R>) -> Result<ChainVector<R>> {
    if c.degree() == 0 {
        return Err(Error::OutOfRange("cannot truncate a degree-0 chain".into()));
    }
    Ok(c.map_tuples(c.degree() - 1, |t| Some((t[1..].to_vec(), 1))))
}

/// Diagonal right action `(x₁*x, …, x_n*x)`.
pub fn act_on_chain<R: Ring>(q: &FiniteQuandle, c: &ChainVector<R>, x: usize) -> ChainVector<R> {
    c.map_tuples(c.degree(), |t| Some((t.iter().map(|&y| q.op(y, x)).collect(), 1)))
}

/// `h_x(x₁, …, x_n) = (x₁, …, x_n, x)`, the homotopy between the identity and `act_on_chain`.
pub fn append_element<R: Ring>(c: &ChainVector<R>, x: usize) -> ChainVector<R> {
    c.map_tuples(c.degree() + 1, |t| {
        let mut out = t.to_vec();
        out.push(x);
        Some((out, 1))
    })
}

/// Expansion of `x₁ ⊗ (x₂ − x₁) ⊗ … ⊗ (x_n − x_{n−1})`, the splitting `C^Q → C^R`.
pub fn alpha_embed<R: Ring>(c: &ChainVector<R>) -> ChainVector<R> {
    let n = c.degree();
    let ring = c.ring().clone();
    let mut out = ChainVector::zero(ring.clone(), c.order(), n);
    for (t, coeff) in c.iter() {
        if n == 0 {
            out.add_term(&t, coeff);
            continue;
        }
        for mask in 0u32..(1 << (n - 1)) {
            let mut tuple = Vec::with_capacity(n);
            tuple.push(t[0]);
            let mut sign = 1i64;
            for j in 1..n {
                if mask & (1 << (j - 1)) != 0 {
                    tuple.push(t[j - 1]);
                    sign = -sign;
                } else {
                    tuple.push(t[j]);
                }
            }
            out.add_term(&tuple, &ring.scale_i64(coeff, sign));
        }
    }
    out
}

/// A chain complex specification: quandle, theory, twisting and coefficient ring.
#[derive(Clone, Debug)]
pub struct ComplexSpec<'a, R: Ring> {
    pub quandle: &'a FiniteQuandle,
    pub theory: Theory,
    pub twisted: bool,
    /// Twisted only: treat the first coordinate as a region color that the
    /// boundary never deletes, so faces run from `i = 2`.
    pub shadow: bool,
    pub ring: R,
}

impl<'a, R: Ring> ComplexSpec<'a, R> {
    pub fn new(quandle: &'a FiniteQuandle, theory: Theory, twisted: bool, ring: R) -> Result<Self> {
        match theory {
            Theory::R => quandle.require_shelf()?,
            Theory::D | Theory::Q => quandle.require_spindle()?,
        }
        if twisted && ring.t().is_none() {
            return Err(Error::RingMismatch(format!("twisted complex needs a Laurent ring, got {}", ring.tag())));
        }
        Ok(ComplexSpec { quandle, theory, twisted, shadow: false, ring })
    }

    /// The twisted complex for shadow chains.
    pub fn twisted_shadow(quandle: &'a FiniteQuandle, theory: Theory, ring: R) -> Result<Self> {
        Ok(ComplexSpec { shadow: true, ..Self::new(quandle, theory, true, ring)? })
    }

    pub fn untwisted(quandle: &'a FiniteQuandle, theory: Theory, ring: R) -> Result<Self> {
        Self::new(quandle, theory, false, ring)
    }

    /// Basis of the degree-`n` chain group in lexicographic order.
    pub fn basis(&self, n: usize) -> Vec<TupleKey> {
        if !self.shadow {
            return basis_keys(self.quandle.order(), n, self.theory);
        }
        let order = self.quandle.order();
        let total = (order as u64).pow(n as u32);
        (0..total).filter(|&key| self.contains(&unpack(order, n, key))).collect()
    }

    /// Whether the tuple is a basis tuple; shadow complexes ignore the region coordinate.
    pub fn contains(&self, tuple: &[usize]) -> bool {
        if self.shadow {
            self.theory.contains(tuple.get(1..).unwrap_or(&[]))
        } else {
            self.theory.contains(tuple)
        }
    }

    /// Boundary of one basis tuple, accumulated as `(key, integer multiple of 1 or t)` pieces.
    pub fn boundary_tuple(&self, x: &[usize], mut emit: impl FnMut(TupleKey, i64, bool)) {
        let n = x.len();
        let k = self.quandle.order();
        let start = if self.twisted && !self.shadow { 1 } else { 2 };
        for i in start..=n {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            let f0 = face0_tuple(i, x);
            let f1 = face_tuple(self.quandle, i, x);
            if self.contains(&f0) || self.theory != Theory::Q {
                emit(pack(k, &f0), sign, self.twisted);
            }
            if self.contains(&f1) || self.theory != Theory::Q {
                emit(pack(k, &f1), -sign, false);
            }
        }
    }

    /// `∂` (or `∂^T = t∂^{*₀} − ∂^{*}` when twisted). In theory Q degenerate
    /// tuples are dropped from input and output; in theory D the input must
    /// be supported on degenerate tuples.
    pub fn boundary(&self, c: &ChainVector<R>) -> Result<ChainVector<R>> {
        if c.ring() != &self.ring {
            return Err(Error::RingMismatch(format!("chain over {} in a complex over {}", c.ring().tag(), self.ring.tag())));
        }
        if c.order() != self.quandle.order() {
            return Err(Error::parameter("chain and quandle have different orders"));
        }
        if c.degree() == 0 {
            return Err(Error::OutOfRange("boundary of a degree-0 chain".into()));
        }
        let ring = &self.ring;
        let t = ring.t();
        let mut out = ChainVector::zero(ring.clone(), c.order(), c.degree() - 1);
        for (x, coeff) in c.iter() {
            if !self.contains(&x) {
                match self.theory {
                    Theory::Q => continue,
                    _ => return Err(Error::parameter(format!("tuple {x:?} is not in the {} basis", self.theory))),
                }
            }
            self.boundary_tuple(&x, |key, sign, times_t| {
                let mut v = ring.scale_i64(coeff, sign);
                if times_t {
                    v = ring.mul(&v, t.as_ref().unwrap());
                }
                out.add_key(key, &v);
            });
        }
        Ok(out)
    }

    /// `∂∂ = 0` on every basis tuple of degree `n`, tracking coefficients as
    /// integers per power of `t`. Returns the first tuple where it fails.
    pub fn boundary_squared_vanishes(&self, n: usize) -> std::result::Result<(), Vec<usize>> {
        let k = self.quandle.order();
        let mut acc: HashMap<(TupleKey, u8), i64> = HashMap::new();
        for key in self.basis(n) {
            let x = unpack(k, n, key);
            acc.clear();
            self.boundary_tuple(&x, |y, s1, t1| {
                self.boundary_tuple(&unpack(k, n - 1, y), |z, s2, t2| {
                    *acc.entry((z, u8::from(t1) + u8::from(t2))).or_insert(0) += s1 * s2;
                });
            });
            if acc.values().any(|&v| v != 0) {
                return Err(x);
            }
        }
        Ok(())
    }

    /// Matrix of `∂_n` from the degree-`n` basis (columns) to the degree-`n−1` basis (rows).
    pub fn boundary_matrix(&self, n: usize, limits: &Limits) -> Result<SparseMatrix<R::Elem>> {
        if n == 0 {
            return Err(Error::OutOfRange("boundary matrix needs n ≥ 1".into()));
        }
        let k = self.quandle.order();
        limits.check(k, n)?;
        let cols = self.basis(n);
        let rows = self.basis(n - 1);
        let index = key_index(k, n - 1, &rows);
        let ring = &self.ring;
        let t = ring.t();
        let mut m = SparseMatrix::new(rows.len(), cols.len());
        let mut acc: BTreeMap<TupleKey, R::Elem> = BTreeMap::new();
        for (j, &key) in cols.iter().enumerate() {
            let x = unpack(k, n, key);
            acc.clear();
            self.boundary_tuple(&x, |key, sign, times_t| {
                let mut v = ring.from_i64(sign);
                if times_t {
                    v = ring.mul(&v, t.as_ref().unwrap());
                }
                let e = acc.entry(key).or_insert_with(|| ring.zero());
                *e = ring.add(e, &v);
            });
            for (&key, v) in &acc {
                if ring.is_zero(v) {
                    continue;
                }
                let row = index[key as usize];
                debug_assert!(row != u32::MAX, "boundary left the basis");
                m.push(row as usize, j, v.clone());
            }
        }
        Ok(m)
    }
}

pub fn basis_keys(order: usize, n: usize, theory: Theory) -> Vec<TupleKey> {
    let total = (order as u64).pow(n as u32);
    (0..total).filter(|&key| theory.contains(&unpack(order, n, key))).collect()
}

/// Dense lookup `key → position in basis` (`u32::MAX` when absent).
pub fn key_index(order: usize, n: usize, basis: &[TupleKey]) -> Vec<u32> {
    let total = (order as u64).pow(n as u32) as usize;
    let mut index = vec![u32::MAX; total];
    for (i, &key) in basis.iter().enumerate() {
        index[key as usize] = i as u32;
    }
    index
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Integers, LaurentQuotient};

    fn d3() -> FiniteQuandle {
        FiniteQuandle::dihedral(3).unwrap()
    }

    #[test]
    fn simplicial_identities_dihedral() {
        for k in 3..=5 {
            let q = FiniteQuandle::dihedral(k).unwrap();
            for n in 1..=3 {
                check_simplicial_identities(&q, n).unwrap();
            }
        }
    }

    #[test]
    fn pack_is_lexicographic() {
        let a = pack(3, &[0, 2, 1]);
        let b = pack(3, &[1, 0, 0]);
        assert!(a < b);
        assert_eq!(unpack(3, 3, a), vec![0, 2, 1]);
        assert_eq!(pack(5, &[]), 0);
    }

    #[test]
    fn face_example() {
        let q = d3();
        let c = ChainVector::basis(Integers, 3, &[0, 1, 2]);
        let f = face_star(&q, 2, &c).unwrap();
        assert_eq!(f, ChainVector::basis(Integers, 3, &[2, 2]));
        assert!(face_star0(4, &c).is_err());
        assert!(face_star0(0, &c).is_err());
    }

    #[test]
    fn boundary_degree_two() {
        let q = d3();
        let spec = ComplexSpec::untwisted(&q, Theory::R, Integers).unwrap();
        let c = ChainVector::basis(Integers, 3, &[0, 1]);
        let b = spec.boundary(&c).unwrap();
        // (0) - (0*1) = (0) - (2)
        let expect = ChainVector::from_terms(Integers, 3, 1, [(&[0][..], 1), (&[2][..], -1)]).unwrap();
        assert_eq!(b, expect);
    }

    #[test]
    fn trivial_one_has_zero_boundary() {
        let q = FiniteQuandle::trivial(1).unwrap();
        let spec = ComplexSpec::untwisted(&q, Theory::R, Integers).unwrap();
        for n in 1..=5 {
            let c = ChainVector::basis(Integers, 1, &vec![0; n]);
            assert!(spec.boundary(&c).unwrap().is_zero());
        }
    }

    #[test]
    fn degenerate_basis_is_closed() {
        let q = FiniteQuandle::alexander(5, 2).unwrap();
        let spec = ComplexSpec::untwisted(&q, Theory::D, Integers).unwrap();
        for key in spec.basis(3) {
            let c = ChainVector::basis(Integers, 5, &unpack(5, 3, key));
            let b = spec.boundary(&c).unwrap();
            assert!(b.is_degenerate_supported(), "{c} -> {b}");
        }
        let bad = ChainVector::basis(Integers, 5, &[0, 1, 2]);
        assert!(spec.boundary(&bad).is_err());
    }

    #[test]
    fn degeneracy_and_gamma() {
        let c = ChainVector::basis(Integers, 3, &[0, 1]);
        assert_eq!(degeneracy(1, &c).unwrap(), ChainVector::basis(Integers, 3, &[0, 0, 1]));
        let c = ChainVector::basis(Integers, 3, &[0, 1, 2]);
        assert_eq!(gamma_truncate(&c).unwrap(), ChainVector::basis(Integers, 3, &[1, 2]));
        let c0 = ChainVector::<Integers>::zero(Integers, 3, 0);
        assert!(gamma_truncate(&c0).is_err());
    }

    #[test]
    fn alpha_small_degrees() {
        let a = ChainVector::basis(Integers, 3, &[1]);
        assert_eq!(alpha_embed(&a), a);
        let ab = ChainVector::basis(Integers, 3, &[0, 1]);
        let expect = ChainVector::from_terms(Integers, 3, 2, [(&[0, 1][..], 1), (&[0, 0][..], -1)]).unwrap();
        assert_eq!(alpha_embed(&ab), expect);
    }

    #[test]
    fn trivial_action_is_identity() {
        let q = FiniteQuandle::trivial(3).unwrap();
        let c = ChainVector::from_terms(Integers, 3, 2, [(&[0, 1][..], 2), (&[2, 2][..], -1)]).unwrap();
        for x in 0..3 {
            assert_eq!(act_on_chain(&q, &c, x), c);
        }
    }

    #[test]
    fn boundary_matrix_examples() {
        let q = d3();
        let spec = ComplexSpec::untwisted(&q, Theory::R, Integers).unwrap();
        let m = spec.boundary_matrix(1, &Limits::default()).unwrap();
        assert_eq!((m.rows(), m.cols()), (1, 3));
        assert_eq!(m.nnz(), 0);
        let t2 = FiniteQuandle::trivial(2).unwrap();
        let spec = ComplexSpec::untwisted(&t2, Theory::R, Integers).unwrap();
        let m = spec.boundary_matrix(2, &Limits::default()).unwrap();
        assert_eq!((m.rows(), m.cols()), (2, 4));
        assert_eq!(m.nnz(), 0);
        let limits = Limits { max_degree: 3, max_basis: 100 };
        assert!(matches!(spec.boundary_matrix(4, &limits), Err(Error::Resource(_))));
        let q9 = FiniteQuandle::dihedral(9).unwrap();
        let spec = ComplexSpec::untwisted(&q9, Theory::R, Integers).unwrap();
        assert!(matches!(spec.boundary_matrix(3, &limits), Err(Error::Resource(_))));
    }

    #[test]
    fn twisted_needs_laurent_ring() {
        let q = d3();
        assert!(ComplexSpec::new(&q, Theory::R, true, Integers).is_err());
        let ring = LaurentQuotient::z3_cyclotomic();
        let spec = ComplexSpec::new(&q, Theory::Q, true, ring.clone()).unwrap();
        let c = ChainVector::basis(ring.clone(), 3, &[0, 1, 2]);
        let bb = spec.boundary(&spec.boundary(&c).unwrap()).unwrap();
        assert!(bb.is_zero());
        let other = LaurentQuotient::new(5, &[1, 1]).unwrap();
        assert!(spec.boundary(&ChainVector::basis(other, 3, &[0, 1])).is_err());
    }

    #[test]
    fn json_round_trip() {
        let ring = LaurentQuotient::z3_cyclotomic();
        let mut c = ChainVector::basis(ring.clone(), 3, &[0, 1]);
        c.add_term(&[2, 1], &ring.t_inv().unwrap());
        let v = c.to_json();
        let back = ChainVector::from_json(ring, 3, &v).unwrap();
        assert_eq!(back, c);
        assert!(ChainVector::from_json(Integers, 3, &v).is_err());
    }
}
