//! Integral homology via Smith normal form, cohomology over Z/m, and
//! classification of cycles into homology coordinates.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::algebra::FiniteQuandle;
use crate::chains::{key_index, pack, unpack, ChainVector, ComplexSpec, Limits, Theory, TupleKey};
use crate::error::{Error, Result};
use crate::linalg::{
    invariant_factors, rank_mod_p, rref_mod_p, smith_normal_form, smith_normal_form_big, solvable_mod, DenseMatrix, RowTracking,
    SparseMatrix,
};
use crate::ring::{is_prime, Integers, IntegersMod, LaurentQuotient, Ring};

/// `H_n ≅ Z^free_rank ⊕ ⊕ Z/d_i`.
#[derive(Clone, Debug)]
pub struct HomologyGroup {
    pub degree: usize,
    pub theory: Theory,
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
    /// Ranks of `∂_n` and `∂_{n+1}` and `dim C_n`.
    pub chain_rank: usize,
    pub rank_in: usize,
    pub rank_out: usize,
    coords: Option<Box<Coordinates>>,
}

/// Data needed to map a cycle to its homology coordinates.
#[derive(Clone, Debug)]
struct Coordinates {
    order: usize,
    basis: Vec<TupleKey>,
    index: Vec<u32>,
    rows_basis: Vec<TupleKey>,
    boundary: SparseMatrix<i64>,
    /// Rows `r..N` of `V⁻¹`, where the last `N−r` columns of `V` span `ker ∂_n`.
    kernel_coords: DenseMatrix<BigInt>,
    /// Row transform of the SNF of `∂_{n+1}` written in kernel coordinates.
    p: DenseMatrix<BigInt>,
    diagonal: Vec<BigInt>,
}

/// Homology coordinates of a cycle: free part in `Z^r` and torsion parts in `Z/d_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HomologyClass {
    pub free: Vec<BigInt>,
    pub torsion: Vec<BigInt>,
}

impl HomologyClass {
    pub fn is_zero(&self) -> bool {
        self.free.iter().all(Zero::is_zero) && self.torsion.iter().all(Zero::is_zero)
    }
}

impl fmt::Display for HomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.free.iter().chain(&self.torsion).map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z_{d}")));
        if parts.is_empty() {
            parts.push("0".into());
        }
        write!(f, "H_{}^{} = {}", self.degree, self.theory, parts.join(" + "))
    }
}

impl HomologyGroup {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let torsion: Vec<serde_json::Value> = self
            .torsion
            .iter()
            .map(|d| d.to_u64().map(serde_json::Value::from).unwrap_or_else(|| serde_json::Value::from(d.to_string())))
            .collect();
        serde_json::json!({"degree": self.degree, "theory": self.theory.to_string(), "free_rank": self.free_rank, "torsion": torsion})
    }

    fn coordinates(&self) -> Result<&Coordinates> {
        self.coords.as_deref().ok_or_else(|| Error::Unsupported("group was computed without classification data".into()))
    }

    /// Vector of `z` in the theory basis of degree `n`.
    fn vectorize(&self, c: &Coordinates, z: &ChainVector<Integers>) -> Result<Vec<i64>> {
        if z.degree() != self.degree || z.order() != c.order {
            return Err(Error::parameter(format!(
                "chain of degree {} over {} elements; expected degree {} over {}",
                z.degree(),
                z.order(),
                self.degree,
                c.order
            )));
        }
        let mut v = vec![0i64; c.basis.len()];
        for (key, coeff) in z.keys() {
            let pos = c.index[key as usize];
            if pos == u32::MAX {
                match self.theory {
                    Theory::Q => continue, // zero in the quotient
                    _ => {
                        return Err(Error::parameter(format!(
                            "tuple {:?} is not in the {} basis",
                            unpack(c.order, self.degree, key),
                            self.theory
                        )))
                    }
                }
            }
            v[pos as usize] = *coeff;
        }
        Ok(v)
    }

    /// Homology coordinates of the cycle `z`.
    pub fn classify_cycle(&self, z: &ChainVector<Integers>) -> Result<HomologyClass> {
        let c = self.coordinates()?;
        let v = self.vectorize(c, z)?;
        let bz = c.boundary.mul_vec(&v);
        if bz.iter().any(|&x| x != 0) {
            let mut chain = ChainVector::zero(Integers, c.order, self.degree - 1);
            for (i, &x) in bz.iter().enumerate() {
                chain.add_key(c.rows_basis[i], &x);
            }
            return Err(Error::NotACycle(chain.to_string()));
        }
        let w: Vec<BigInt> = (0..c.kernel_coords.rows())
            .map(|i| c.kernel_coords.row(i).iter().zip(&v).filter(|(_, &x)| x != 0).map(|(a, &x)| a * BigInt::from(x)).sum())
            .collect();
        let y: Vec<BigInt> = (0..c.p.rows()).map(|i| c.p.row(i).iter().zip(&w).map(|(a, b)| a * b).sum()).collect();
        let mut torsion = Vec::new();
        for (i, d) in c.diagonal.iter().enumerate() {
            if !d.is_one() {
                torsion.push(y[i].mod_floor(d));
            }
        }
        let free = y[c.diagonal.len()..].to_vec();
        Ok(HomologyClass { free, torsion })
    }

    /// Whether the chain is a boundary; non-cycles are never boundaries.
    pub fn is_boundary(&self, z: &ChainVector<Integers>) -> Result<bool> {
        match self.classify_cycle(z) {
            Ok(class) => Ok(class.is_zero()),
            Err(Error::NotACycle(_)) => Ok(false),
            Err(e) => Err(e),
        }
    }
}

fn check_degree(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::OutOfRange("homology degree must be at least 1".into()));
    }
    Ok(())
}

/// Free rank and torsion of `H_n` (sparse elimination, no classification data).
pub fn homology_ranks(spec: &ComplexSpec<Integers>, n: usize, limits: &Limits) -> Result<HomologyGroup> {
    check_degree(n)?;
    if spec.twisted {
        return Err(Error::Unsupported("integral homology of the twisted complex (use a field quotient)".into()));
    }
    limits.check(spec.quandle.order(), n + 1)?;
    let a = spec.boundary_matrix(n, limits)?;
    let b = spec.boundary_matrix(n + 1, limits)?;
    let rank_in = invariant_factors(&a).len();
    let fb = invariant_factors(&b);
    let rank_out = fb.len();
    let chain_rank = a.cols();
    Ok(HomologyGroup {
        degree: n,
        theory: spec.theory,
        free_rank: chain_rank - rank_in - rank_out,
        torsion: fb.into_iter().filter(|d| !d.is_one()).collect(),
        chain_rank,
        rank_in,
        rank_out,
        coords: None,
    })
}

/// `H_n` together with the transforms needed by [`HomologyGroup::classify_cycle`].
pub fn homology(spec: &ComplexSpec<Integers>, n: usize, limits: &Limits) -> Result<HomologyGroup> {
    check_degree(n)?;
    if spec.twisted {
        return Err(Error::Unsupported("integral homology of the twisted complex (use a field quotient)".into()));
    }
    limits.check(spec.quandle.order(), n + 1)?;
    let k = spec.quandle.order();
    let a = spec.boundary_matrix(n, limits)?;
    let b = spec.boundary_matrix(n + 1, limits)?;
    let big_n = a.cols();

    // Rows of U (with U·Aᵀ·W = D) beyond the rank span ker A; V = Uᵀ.
    let snf_a = smith_normal_form(&a.transpose().to_dense(), RowTracking::Both);
    let r = snf_a.rank();
    let u_inv = snf_a.u_inv.expect("tracked");
    // V⁻¹ = (U⁻¹)ᵀ, so row i of V⁻¹ is column i of U⁻¹.
    let kernel_coords = DenseMatrix::from_fn(big_n - r, big_n, |i, j| u_inv.get(j, r + i).clone());

    // B' = rows r.. of V⁻¹·B
    let bp = DenseMatrix::from_fn(big_n - r, b.cols(), |i, j| {
        b.column(j).iter().map(|&(row, v)| kernel_coords.get(i, row) * BigInt::from(v)).sum::<BigInt>()
    });
    let snf_b = match (0..bp.rows()).all(|i| bp.row(i).iter().all(|v| v.to_i64().is_some())) {
        true => smith_normal_form(&bp.map(|v| v.to_i64().unwrap()), RowTracking::Forward),
        false => smith_normal_form_big(&bp, RowTracking::Forward),
    };
    let diagonal = snf_b.diagonal.clone();
    let rank_out = diagonal.len();
    let rows_basis = spec.basis(n - 1);
    let basis = spec.basis(n);
    let index = key_index(k, n, &basis);
    Ok(HomologyGroup {
        degree: n,
        theory: spec.theory,
        free_rank: big_n - r - rank_out,
        torsion: diagonal.iter().filter(|d| !d.is_one()).cloned().collect(),
        chain_rank: big_n,
        rank_in: r,
        rank_out,
        coords: Some(Box::new(Coordinates {
            order: k,
            basis,
            index,
            rows_basis,
            boundary: a,
            kernel_coords,
            p: snf_b.u.expect("tracked"),
            diagonal,
        })),
    })
}

/// A cochain `Xⁿ → A`, stored densely over all `kⁿ` tuples in lexicographic order.
#[derive(Clone, Debug, PartialEq)]
pub struct Cochain<R: Ring> {
    pub ring: R,
    pub order: usize,
    pub degree: usize,
    pub values: Vec<R::Elem>,
}

impl<R: Ring> Cochain<R> {
    pub fn zero(ring: R, order: usize, degree: usize) -> Self {
        let z = ring.zero();
        Cochain { values: vec![z; order.pow(degree as u32)], ring, order, degree }
    }

    pub fn from_fn(ring: R, order: usize, degree: usize, f: impl Fn(&[usize]) -> R::Elem) -> Self {
        let values = (0..order.pow(degree as u32) as u64).map(|key| f(&unpack(order, degree, key))).collect();
        Cochain { ring, order, degree, values }
    }

    pub fn value(&self, tuple: &[usize]) -> &R::Elem {
        &self.values[pack(self.order, tuple) as usize]
    }

    pub fn set(&mut self, tuple: &[usize], v: R::Elem) {
        let i = pack(self.order, tuple) as usize;
        self.values[i] = v;
    }

    pub fn vanishes_on_degenerate(&self) -> bool {
        (0..self.values.len() as u64).all(|key| {
            !crate::chains::is_degenerate(&unpack(self.order, self.degree, key)) || self.ring.is_zero(&self.values[key as usize])
        })
    }

    /// Zero on every tuple that is not a basis tuple of `spec`.
    pub fn vanishes_outside(&self, spec: &ComplexSpec<R>) -> bool {
        (0..self.values.len() as u64)
            .all(|key| spec.contains(&unpack(self.order, self.degree, key)) || self.ring.is_zero(&self.values[key as usize]))
    }

    /// Sum of the cochains, or `None` for an empty list.
    pub fn sum(cochains: &[Cochain<R>]) -> Option<Cochain<R>> {
        let (first, rest) = cochains.split_first()?;
        let mut out = first.clone();
        for f in rest {
            for (a, b) in out.values.iter_mut().zip(&f.values) {
                *a = out.ring.add(a, b);
            }
        }
        Some(out)
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| self.ring.is_zero(v))
    }

    /// `Φ(c)` for a chain with coefficients in the same ring.
    pub fn evaluate(&self, c: &ChainVector<R>) -> Result<R::Elem> {
        if c.degree() != self.degree || c.order() != self.order {
            return Err(Error::parameter(format!(
                "cochain of degree {} cannot be evaluated on a degree-{} chain",
                self.degree,
                c.degree()
            )));
        }
        if c.ring() != &self.ring {
            return Err(Error::RingMismatch(format!("{} vs {}", c.ring().tag(), self.ring.tag())));
        }
        let mut acc = self.ring.zero();
        for (key, coeff) in c.keys() {
            acc = self.ring.add(&acc, &self.ring.mul(coeff, &self.values[key as usize]));
        }
        Ok(acc)
    }

    /// `Φ(c)` for an integer chain.
    pub fn evaluate_integral(&self, c: &ChainVector<Integers>) -> Result<R::Elem> {
        self.evaluate(&c.convert(self.ring.clone(), |v| self.ring.from_i64(*v)))
    }
}

fn check_cochain<R: Ring>(spec: &ComplexSpec<R>, f: &Cochain<R>) -> Result<()> {
    if f.ring != spec.ring {
        return Err(Error::RingMismatch(format!("cochain over {} in a complex over {}", f.ring.tag(), spec.ring.tag())));
    }
    if f.order != spec.quandle.order() {
        return Err(Error::parameter("cochain and quandle have different orders"));
    }
    if spec.theory == Theory::Q && !f.vanishes_outside(spec) {
        return Err(Error::parameter("a quandle cochain must vanish on degenerate tuples"));
    }
    Ok(())
}

/// `f ∘ ∂_{n+1} = 0` on every basis tuple (twisted boundary when the spec is twisted).
pub fn is_cocycle<R: Ring>(spec: &ComplexSpec<R>, f: &Cochain<R>) -> Result<bool> {
    check_cochain(spec, f)?;
    let ring = &spec.ring;
    let t = ring.t();
    let k = spec.quandle.order();
    for key in spec.basis(f.degree + 1) {
        let x = unpack(k, f.degree + 1, key);
        let mut acc = ring.zero();
        spec.boundary_tuple(&x, |y, sign, times_t| {
            let mut v = ring.scale_i64(&f.values[y as usize], sign);
            if times_t {
                v = ring.mul(&v, t.as_ref().unwrap());
            }
            acc = ring.add(&acc, &v);
        });
        if !ring.is_zero(&acc) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `f = g ∘ ∂_n` for some `g` over Z/m (untwisted only).
pub fn is_coboundary(spec: &ComplexSpec<IntegersMod>, f: &Cochain<IntegersMod>, limits: &Limits) -> Result<bool> {
    check_cochain(spec, f)?;
    if spec.twisted {
        return Err(Error::Unsupported("coboundary test for twisted cochains".into()));
    }
    let n = f.degree;
    check_degree(n)?;
    let zspec = ComplexSpec::untwisted(spec.quandle, spec.theory, Integers)?;
    let a = zspec.boundary_matrix(n, limits)?;
    let basis = zspec.basis(n);
    let m = spec.ring.modulus();
    let rhs: Vec<i64> = basis.iter().map(|&key| f.values[key as usize] as i64).collect();
    if rhs.iter().all(|&v| v % m as i64 == 0) {
        return Ok(true);
    }
    // Aᵀ·g ≡ f
    Ok(solvable_mod(&a.transpose().to_dense(), &rhs, m))
}

/// Basis of quandle (or rack) `n`-cocycles with values in Z/p.
#[derive(Clone, Debug)]
pub struct CocycleBasis {
    pub degree: usize,
    pub modulus: u64,
    pub theory: Theory,
    pub cocycles: Vec<Cochain<IntegersMod>>,
    /// `rank δ^{n−1} = rank_p ∂_n`.
    pub coboundary_rank: usize,
}

impl CocycleBasis {
    /// `dim Hⁿ = dim ker δⁿ − rank δ^{n−1}`.
    pub fn cohomology_dimension(&self) -> usize {
        self.cocycles.len() - self.coboundary_rank
    }
}

pub fn cocycle_basis(q: &FiniteQuandle, theory: Theory, n: usize, p: u64, limits: &Limits) -> Result<CocycleBasis> {
    check_degree(n)?;
    if !is_prime(p) {
        return Err(Error::parameter(format!("cocycle basis needs a prime modulus, got {p}")));
    }
    let spec = ComplexSpec::untwisted(q, theory, Integers)?;
    limits.check(q.order(), n + 1)?;
    let b = spec.boundary_matrix(n + 1, limits)?;
    let basis = spec.basis(n);
    let rows: Vec<Vec<u64>> = (0..b.cols())
        .map(|j| {
            let mut v = vec![0u64; b.rows()];
            for &(i, x) in b.column(j) {
                v[i] = (v[i] + x.rem_euclid(p as i64) as u64) % p;
            }
            v
        })
        .collect();
    let ech = rref_mod_p(rows, b.rows(), p);
    let ring = IntegersMod::new(p)?;
    let cocycles = ech
        .nullspace()
        .into_iter()
        .map(|v| {
            let mut f = Cochain::zero(ring.clone(), q.order(), n);
            for (pos, &key) in basis.iter().enumerate() {
                f.values[key as usize] = v[pos];
            }
            f
        })
        .collect();
    let a = spec.boundary_matrix(n, limits)?;
    Ok(CocycleBasis { degree: n, modulus: p, theory, cocycles, coboundary_rank: rank_mod_p(&a, p) })
}

/// `dim Hⁿ(X; Z/p) = dim C_n − rank_p ∂_{n+1} − rank_p ∂_n`.
pub fn cohomology_dimension(q: &FiniteQuandle, theory: Theory, n: usize, p: u64, limits: &Limits) -> Result<usize> {
    check_degree(n)?;
    if !is_prime(p) {
        return Err(Error::parameter(format!("cohomology dimension needs a prime modulus, got {p}")));
    }
    let spec = ComplexSpec::untwisted(q, theory, Integers)?;
    limits.check(q.order(), n + 1)?;
    let a = spec.boundary_matrix(n, limits)?;
    let b = spec.boundary_matrix(n + 1, limits)?;
    Ok(a.cols() - rank_mod_p(&a, p) - rank_mod_p(&b, p))
}

/// Field structure on a finite quotient `Z_p[t]/(f)`: all elements, with inverses.
pub struct FiniteField {
    ring: LaurentQuotient,
    size: u64,
}

impl FiniteField {
    /// Checks that the quotient is a field (prime `p`, every nonzero element invertible).
    pub fn new(ring: &LaurentQuotient) -> Result<Self> {
        if !ring.prime_modulus() {
            return Err(Error::Unsupported(format!("{} is not a field: modulus is not prime", ring.tag())));
        }
        let size = ring
            .modulus()
            .checked_pow(ring.degree() as u32)
            .filter(|&s| s <= 1 << 16)
            .ok_or_else(|| Error::Resource(format!("{} is too large to check", ring.tag())))?;
        let field = FiniteField { ring: ring.clone(), size };
        for e in field.elements().skip(1) {
            let inv = field.inverse(&e);
            if ring.mul(&e, &inv) != ring.one() {
                return Err(Error::Unsupported(format!("{} is not a field: relation is reducible", ring.tag())));
            }
        }
        Ok(field)
    }

    fn elements(&self) -> impl Iterator<Item = <LaurentQuotient as Ring>::Elem> + '_ {
        let p = self.ring.modulus();
        let d = self.ring.degree();
        (0..self.size).map(move |mut idx| {
            let mut coeffs = Vec::with_capacity(d);
            for _ in 0..d {
                coeffs.push((idx % p) as i64);
                idx /= p;
            }
            self.ring.from_coeffs(&coeffs)
        })
    }

    /// `a^(q−2)`.
    pub fn inverse(&self, a: &<LaurentQuotient as Ring>::Elem) -> <LaurentQuotient as Ring>::Elem {
        let r = &self.ring;
        let mut e = self.size - 2;
        let mut base = a.clone();
        let mut acc = r.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = r.mul(&acc, &base);
            }
            base = r.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Rank of a sparse matrix with entries in the field.
    pub fn rank(&self, m: &SparseMatrix<<LaurentQuotient as Ring>::Elem>) -> usize {
        let r = &self.ring;
        let mut rows: Vec<Vec<_>> = (0..m.cols())
            .map(|j| {
                let mut v = vec![r.zero(); m.rows()];
                for (i, x) in m.column(j) {
                    v[*i] = x.clone();
                }
                v
            })
            .collect();
        let width = m.rows();
        let mut rank = 0;
        for c in 0..width {
            let Some(k) = (rank..rows.len()).find(|&k| !r.is_zero(&rows[k][c])) else { continue };
            rows.swap(rank, k);
            let inv = self.inverse(&rows[rank][c]);
            let pivot: Vec<_> = rows[rank].iter().map(|x| r.mul(x, &inv)).collect();
            for row in rows.iter_mut().skip(rank + 1) {
                if !r.is_zero(&row[c]) {
                    let f = row[c].clone();
                    for (x, y) in row.iter_mut().zip(&pivot) {
                        *x = r.sub(x, &r.mul(&f, y));
                    }
                }
            }
            rows[rank] = pivot;
            rank += 1;
        }
        rank
    }
}

/// Dimension of twisted homology `H^T_n` over a field quotient `Z_p[t]/(f)`.
pub fn twisted_homology_dimension(spec: &ComplexSpec<LaurentQuotient>, n: usize, limits: &Limits) -> Result<usize> {
    check_degree(n)?;
    if !spec.twisted {
        return Err(Error::parameter("spec is not twisted"));
    }
    let field = FiniteField::new(&spec.ring)?;
    limits.check(spec.quandle.order(), n + 1)?;
    let a = spec.boundary_matrix(n, limits)?;
    let b = spec.boundary_matrix(n + 1, limits)?;
    Ok(a.cols() - field.rank(&a) - field.rank(&b))
}

/// Whether a twisted chain is a twisted boundary, over a field quotient.
pub fn twisted_is_boundary(spec: &ComplexSpec<LaurentQuotient>, z: &ChainVector<LaurentQuotient>, limits: &Limits) -> Result<bool> {
    if !spec.twisted {
        return Err(Error::parameter("spec is not twisted"));
    }
    let field = FiniteField::new(&spec.ring)?;
    let n = z.degree();
    let b = spec.boundary_matrix(n + 1, limits)?;
    let basis = spec.basis(n);
    let index = key_index(spec.quandle.order(), n, &basis);
    let mut aug = SparseMatrix::new(b.rows(), b.cols() + 1);
    for j in 0..b.cols() {
        for (i, v) in b.column(j) {
            aug.push(*i, j, v.clone());
        }
    }
    for (key, v) in z.keys() {
        let pos = index[key as usize];
        if pos == u32::MAX {
            if spec.theory == Theory::Q {
                continue;
            }
            return Err(Error::parameter("chain leaves the theory basis"));
        }
        aug.push(pos as usize, b.cols(), v.clone());
    }
    Ok(field.rank(&b) == field.rank(&aug))
}

/// Basis of twisted `n`-cocycles `f` with `f ∘ ∂^T = 0`, valued in a
/// quotient `Z_p[t]/(f)` with `p` prime (a `Z_p`-vector space, not
/// necessarily a field).
pub fn twisted_cocycle_basis(spec: &ComplexSpec<LaurentQuotient>, n: usize, limits: &Limits) -> Result<Vec<Cochain<LaurentQuotient>>> {
    check_degree(n)?;
    if !spec.twisted {
        return Err(Error::parameter("spec is not twisted"));
    }
    let ring = &spec.ring;
    if !ring.prime_modulus() {
        return Err(Error::parameter(format!("twisted cocycles need a prime modulus, got {}", ring.modulus())));
    }
    let p = ring.modulus();
    let d = ring.degree();
    limits.check(spec.quandle.order(), n + 1)?;
    let b = spec.boundary_matrix(n + 1, limits)?;
    let basis = spec.basis(n);
    let powers: Vec<_> = (0..d).map(|a| ring.t_pow(a as i64).unwrap()).collect();
    // unknown (i, a) is the t^a coordinate of f on basis tuple i
    let mut rows = Vec::with_capacity(b.cols() * d);
    for j in 0..b.cols() {
        let mut eq = vec![vec![0u64; b.rows() * d]; d];
        for (i, c) in b.column(j) {
            for (a, tp) in powers.iter().enumerate() {
                let prod = ring.mul(c, tp);
                for (coord, &v) in prod.iter().enumerate() {
                    eq[coord][i * d + a] = (eq[coord][i * d + a] + v as u64) % p;
                }
            }
        }
        rows.extend(eq);
    }
    let ech = rref_mod_p(rows, b.rows() * d, p);
    Ok(ech
        .nullspace()
        .into_iter()
        .map(|v| {
            let mut f = Cochain::zero(ring.clone(), spec.quandle.order(), n);
            for (pos, &key) in basis.iter().enumerate() {
                let coeffs: Vec<i64> = (0..d).map(|a| v[pos * d + a] as i64).collect();
                f.values[key as usize] = ring.from_coeffs(&coeffs);
            }
            f
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn trivial_one() {
        let q = FiniteQuandle::trivial(1).unwrap();
        let spec = ComplexSpec::untwisted(&q, Theory::R, Integers).unwrap();
        for n in 1..=5 {
            let h = homology_ranks(&spec, n, &lim()).unwrap();
            assert_eq!(h.to_string(), format!("H_{n}^R = Z"));
        }
    }

    #[test]
    fn trivial_two_degree_one() {
        let q = FiniteQuandle::trivial(2).unwrap();
        let spec = ComplexSpec::untwisted(&q, Theory::R, Integers).unwrap();
        let h = homology(&spec, 1, &lim()).unwrap();
        assert_eq!((h.free_rank, h.torsion.len()), (2, 0));
    }

    #[test]
    fn classify_boundaries_are_zero() {
        let q = FiniteQuandle::dihedral(3).unwrap();
        let spec = ComplexSpec::untwisted(&q, Theory::Q, Integers).unwrap();
        let h = homology(&spec, 3, &lim()).unwrap();
        let w = ChainVector::basis(Integers, 3, &[0, 1, 2, 0]);
        let z = spec.boundary(&w).unwrap();
        assert!(h.classify_cycle(&z).unwrap().is_zero());
        let not_cycle = ChainVector::basis(Integers, 3, &[0, 1, 2]);
        assert!(matches!(h.classify_cycle(&not_cycle), Err(Error::NotACycle(_))));
        assert!(!h.is_boundary(&not_cycle).unwrap());
    }

    #[test]
    fn zero_cochain() {
        let q = FiniteQuandle::dihedral(3).unwrap();
        let ring = IntegersMod::new(3).unwrap();
        let spec = ComplexSpec::untwisted(&q, Theory::Q, ring.clone()).unwrap();
        let f = Cochain::zero(ring, 3, 2);
        assert!(is_cocycle(&spec, &f).unwrap());
        assert!(is_coboundary(&spec, &f, &lim()).unwrap());
    }

    #[test]
    fn field_detection() {
        assert!(FiniteField::new(&LaurentQuotient::z3_cyclotomic()).is_err()); // (t−1)² ≡ t²+t+1 mod 3
        assert!(FiniteField::new(&LaurentQuotient::new(2, &[1, 1, 1]).unwrap()).is_ok());
        assert!(FiniteField::new(&LaurentQuotient::new(4, &[1, 1]).unwrap()).is_err());
    }

    #[test]
    fn twisted_cocycles_are_cocycles() {
        let q = FiniteQuandle::dihedral(3).unwrap();
        let spec = ComplexSpec::new(&q, Theory::Q, true, LaurentQuotient::z3_cyclotomic()).unwrap();
        let basis = twisted_cocycle_basis(&spec, 2, &lim()).unwrap();
        assert!(!basis.is_empty());
        for f in &basis {
            assert!(!f.is_zero());
            assert!(is_cocycle(&spec, f).unwrap());
        }
    }
}
