//! Exact linear algebra: sparse matrices, Smith normal form over Z with
//! optional row-transform tracking, and Gaussian elimination over Z/p.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Column-major sparse matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, E)>>,
}

impl<E: Clone> SparseMatrix<E> {
    pub fn new(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, data: vec![Vec::new(); cols] }
    }

    /// Append an entry. Entries within a column must be pushed with distinct rows.
    pub fn push(&mut self, row: usize, col: usize, v: E) {
        assert!(row < self.rows && col < self.cols);
        self.data[col].push((row, v));
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn column(&self, j: usize) -> &[(usize, E)] {
        &self.data[j]
    }

    pub fn transpose(&self) -> Self {
        let mut t = SparseMatrix::new(self.cols, self.rows);
        for (j, col) in self.data.iter().enumerate() {
            for (i, v) in col {
                t.data[*i].push((j, v.clone()));
            }
        }
        t
    }

    pub fn map<F: Clone>(&self, f: impl Fn(&E) -> F) -> SparseMatrix<F> {
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|c| c.iter().map(|(i, v)| (*i, f(v))).collect()).collect(),
        }
    }
}

impl SparseMatrix<i64> {
    pub fn to_dense(&self) -> DenseMatrix<i64> {
        let mut d = DenseMatrix::zeros(self.rows, self.cols);
        for (j, col) in self.data.iter().enumerate() {
            for &(i, v) in col {
                *d.get_mut(i, j) += v;
            }
        }
        d
    }

    /// `A·B` for integer matrices (used in tests of the chain axiom).
    pub fn mul(&self, other: &SparseMatrix<i64>) -> SparseMatrix<i64> {
        assert_eq!(self.cols, other.rows);
        let mut out = SparseMatrix::new(self.rows, other.cols);
        for (j, col) in other.data.iter().enumerate() {
            let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
            for &(k, b) in col {
                for &(i, a) in &self.data[k] {
                    *acc.entry(i).or_insert(0) += a * b;
                }
            }
            for (i, v) in acc {
                if v != 0 {
                    out.push(i, j, v);
                }
            }
        }
        out
    }

    /// `M·x` for a dense integer vector.
    pub fn mul_vec(&self, x: &[i64]) -> Vec<i64> {
        let mut y = vec![0i64; self.rows];
        for (j, col) in self.data.iter().enumerate() {
            if x[j] != 0 {
                for &(i, v) in col {
                    y[i] += v * x[j];
                }
            }
        }
        y
    }
}

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> DenseMatrix<T> {
    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        DenseMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut T {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        DenseMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> DenseMatrix<U> {
        DenseMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }
}

impl<T: Clone + Zero> DenseMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }
}

impl<T: Clone + Zero + One> DenseMatrix<T> {
    pub fn identity(n: usize) -> Self {
        DenseMatrix::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }
}

/// Integer arithmetic with overflow detection; `i64` reports overflow, `BigInt` never does.
pub trait Int: Clone + Debug + PartialEq + Zero + One {
    fn checked_add_(&self, b: &Self) -> Option<Self>;
    fn checked_mul_(&self, b: &Self) -> Option<Self>;
    fn neg_(&self) -> Self;
    fn abs_(&self) -> Self;
    fn is_neg(&self) -> bool;
    fn lt(&self, b: &Self) -> bool;
    /// Truncated quotient.
    fn quot(&self, b: &Self) -> Self;
    fn is_multiple_of(&self, b: &Self) -> bool;
    fn to_big(&self) -> BigInt;
}

impl Int for i64 {
    fn checked_add_(&self, b: &Self) -> Option<Self> {
        self.checked_add(*b)
    }
    fn checked_mul_(&self, b: &Self) -> Option<Self> {
        self.checked_mul(*b)
    }
    fn neg_(&self) -> Self {
        -self
    }
    fn abs_(&self) -> Self {
        self.abs()
    }
    fn is_neg(&self) -> bool {
        *self < 0
    }
    fn lt(&self, b: &Self) -> bool {
        self < b
    }
    fn quot(&self, b: &Self) -> Self {
        self / b
    }
    fn is_multiple_of(&self, b: &Self) -> bool {
        self % b == 0
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Int for BigInt {
    fn checked_add_(&self, b: &Self) -> Option<Self> {
        Some(self + b)
    }
    fn checked_mul_(&self, b: &Self) -> Option<Self> {
        Some(self * b)
    }
    fn neg_(&self) -> Self {
        -self
    }
    fn abs_(&self) -> Self {
        self.abs()
    }
    fn is_neg(&self) -> bool {
        self.is_negative()
    }
    fn lt(&self, b: &Self) -> bool {
        self < b
    }
    fn quot(&self, b: &Self) -> Self {
        self / b
    }
    fn is_multiple_of(&self, b: &Self) -> bool {
        Integer::is_multiple_of(self, b)
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowTracking {
    None,
    /// Track `U` with `U·M·V = S`.
    Forward,
    /// Track both `U` and `U⁻¹`.
    Both,
}

/// Result of a Smith normal form computation: `U·M·V = diag(d₁,…,d_r,0,…)`
/// with `d_i > 0` and `d_i | d_{i+1}`. Column transforms are not recorded.
#[derive(Clone, Debug)]
pub struct Snf<T> {
    pub diagonal: Vec<T>,
    pub u: Option<DenseMatrix<T>>,
    pub u_inv: Option<DenseMatrix<T>>,
}

impl<T> Snf<T> {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }
}

struct Overflow;

struct SnfState<T: Int> {
    m: DenseMatrix<T>,
    u: Option<DenseMatrix<T>>,
    u_inv: Option<DenseMatrix<T>>,
}

fn ck<T>(v: Option<T>) -> Result<T, Overflow> {
    v.ok_or(Overflow)
}

impl<T: Int> SnfState<T> {
    /// row_i += c·row_j
    fn row_add(&mut self, i: usize, j: usize, c: &T) -> Result<(), Overflow> {
        add_row_multiple(&mut self.m, i, j, c)?;
        if let Some(u) = self.u.as_mut() {
            add_row_multiple(u, i, j, c)?;
        }
        if let Some(ui) = self.u_inv.as_mut() {
            // right-multiply by the inverse elementary matrix: col_j -= c·col_i
            let nc = c.neg_();
            for r in 0..ui.rows {
                let v = ui.get(r, i).clone();
                if !v.is_zero() {
                    let w = ck(ui.get(r, j).checked_add_(&ck(v.checked_mul_(&nc))?))?;
                    *ui.get_mut(r, j) = w;
                }
            }
        }
        Ok(())
    }

    fn row_swap(&mut self, i: usize, j: usize) {
        self.m.swap_rows(i, j);
        if let Some(u) = self.u.as_mut() {
            u.swap_rows(i, j);
        }
        if let Some(ui) = self.u_inv.as_mut() {
            ui.swap_cols(i, j);
        }
    }

    /// col_j += c·col_i (untracked)
    fn col_add(&mut self, j: usize, i: usize, c: &T) -> Result<(), Overflow> {
        for r in 0..self.m.rows {
            let v = self.m.get(r, i).clone();
            if !v.is_zero() {
                let w = ck(self.m.get(r, j).checked_add_(&ck(v.checked_mul_(c))?))?;
                *self.m.get_mut(r, j) = w;
            }
        }
        Ok(())
    }
}

fn add_row_multiple<T: Int>(m: &mut DenseMatrix<T>, i: usize, j: usize, c: &T) -> Result<(), Overflow> {
    if c.is_zero() {
        return Ok(());
    }
    let cols = m.cols;
    for k in 0..cols {
        let v = m.data[j * cols + k].clone();
        if !v.is_zero() {
            let w = ck(m.data[i * cols + k].checked_add_(&ck(v.checked_mul_(c))?))?;
            m.data[i * cols + k] = w;
        }
    }
    Ok(())
}

fn snf_inner<T: Int>(m: DenseMatrix<T>, tracking: RowTracking) -> Result<Snf<T>, Overflow> {
    let rows = m.rows;
    let cols = m.cols;
    let mut st = SnfState {
        u: (tracking != RowTracking::None).then(|| DenseMatrix::identity(rows)),
        u_inv: (tracking == RowTracking::Both).then(|| DenseMatrix::identity(rows)),
        m,
    };
    let mut diagonal = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // minimal nonzero |entry| in the trailing block
        let mut best: Option<(usize, usize, T)> = None;
        for i in t..rows {
            for j in t..cols {
                let v = st.m.get(i, j);
                if !v.is_zero() {
                    let a = v.abs_();
                    if best.as_ref().map_or(true, |(_, _, b)| a.lt(b)) {
                        let unit = a.is_one();
                        best = Some((i, j, a));
                        if unit {
                            break;
                        }
                    }
                }
            }
            if best.as_ref().map_or(false, |b| b.2.is_one()) {
                break;
            }
        }
        let Some((pi, pj, _)) = best else { break };
        st.row_swap(t, pi);
        st.m.swap_cols(t, pj);
        loop {
            let mut dirty = false;
            // clear column t below the pivot
            for i in t + 1..rows {
                if st.m.get(i, t).is_zero() {
                    continue;
                }
                let q = st.m.get(i, t).quot(st.m.get(t, t));
                st.row_add(i, t, &q.neg_())?;
                if !st.m.get(i, t).is_zero() {
                    dirty = true;
                }
            }
            // clear row t right of the pivot
            for j in t + 1..cols {
                if st.m.get(t, j).is_zero() {
                    continue;
                }
                let q = st.m.get(t, j).quot(st.m.get(t, t));
                st.col_add(j, t, &q.neg_())?;
                if !st.m.get(t, j).is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                // move the smallest remaining entry of row/column t into the pivot
                let mut bi = (t, t);
                let mut ba = st.m.get(t, t).abs_();
                for i in t + 1..rows {
                    let v = st.m.get(i, t);
                    if !v.is_zero() && v.abs_().lt(&ba) {
                        ba = v.abs_();
                        bi = (i, t);
                    }
                }
                for j in t + 1..cols {
                    let v = st.m.get(t, j);
                    if !v.is_zero() && v.abs_().lt(&ba) {
                        ba = v.abs_();
                        bi = (t, j);
                    }
                }
                st.row_swap(t, bi.0);
                st.m.swap_cols(t, bi.1);
                continue;
            }
            // divisibility of the trailing block
            let p = st.m.get(t, t).clone();
            let mut offender = None;
            'outer: for i in t + 1..rows {
                for j in t + 1..cols {
                    if !st.m.get(i, j).is_multiple_of(&p) {
                        offender = Some(i);
                        break 'outer;
                    }
                }
            }
            match offender {
                Some(i) => st.row_add(t, i, &T::one())?,
                None => break,
            }
        }
        if st.m.get(t, t).is_neg() {
            for r in 0..rows {
                let v = st.m.get(r, t).neg_();
                *st.m.get_mut(r, t) = v;
            }
        }
        diagonal.push(st.m.get(t, t).clone());
        t += 1;
    }
    Ok(Snf { diagonal, u: st.u, u_inv: st.u_inv })
}

/// Smith normal form in `i64`, falling back to arbitrary precision on overflow.
pub fn smith_normal_form(m: &DenseMatrix<i64>, tracking: RowTracking) -> Snf<BigInt> {
    match snf_inner(m.clone(), tracking) {
        Ok(s) => Snf {
            diagonal: s.diagonal.iter().map(|v| BigInt::from(*v)).collect(),
            u: s.u.map(|u| u.map(|v| BigInt::from(*v))),
            u_inv: s.u_inv.map(|u| u.map(|v| BigInt::from(*v))),
        },
        Err(Overflow) => snf_big(m, tracking),
    }
}

fn snf_big(m: &DenseMatrix<i64>, tracking: RowTracking) -> Snf<BigInt> {
    match snf_inner(m.map(|v| BigInt::from(*v)), tracking) {
        Ok(s) => s,
        Err(Overflow) => unreachable!("BigInt arithmetic does not overflow"),
    }
}

pub fn smith_normal_form_big(m: &DenseMatrix<BigInt>, tracking: RowTracking) -> Snf<BigInt> {
    match snf_inner(m.clone(), tracking) {
        Ok(s) => s,
        Err(Overflow) => unreachable!("BigInt arithmetic does not overflow"),
    }
}

/// Like [`smith_normal_form`] but keeps `i64` transforms when no overflow occurred.
pub fn smith_normal_form_small(m: &DenseMatrix<i64>, tracking: RowTracking) -> Result<Snf<i64>, Snf<BigInt>> {
    match snf_inner(m.clone(), tracking) {
        Ok(s) => Ok(s),
        Err(Overflow) => Err(snf_big(m, tracking)),
    }
}

/// Invariant factors (the nonzero diagonal of the SNF) of a sparse integer matrix.
///
/// Unit pivots are eliminated sparsely first; whatever remains goes through
/// the dense algorithm.
pub fn invariant_factors(m: &SparseMatrix<i64>) -> Vec<BigInt> {
    match sparse_unit_reduce(m) {
        Some((units, rest)) => {
            let mut d: Vec<BigInt> = vec![BigInt::one(); units];
            d.extend(smith_normal_form(&rest, RowTracking::None).diagonal);
            d
        }
        None => smith_normal_form(&m.to_dense(), RowTracking::None).diagonal,
    }
}

pub fn integer_rank(m: &SparseMatrix<i64>) -> usize {
    invariant_factors(m).len()
}

/// Eliminate ±1 pivots. Returns the number of pivots and the dense remainder,
/// or `None` on overflow.
fn sparse_unit_reduce(m: &SparseMatrix<i64>) -> Option<(usize, DenseMatrix<i64>)> {
    let mut cols: Vec<BTreeMap<usize, i64>> = Vec::with_capacity(m.cols);
    let mut row_index: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); m.rows];
    for j in 0..m.cols {
        let mut c = BTreeMap::new();
        for &(i, v) in m.column(j) {
            if v != 0 {
                *c.entry(i).or_insert(0) += v;
            }
        }
        c.retain(|_, v| *v != 0);
        for &i in c.keys() {
            row_index[i].insert(j);
        }
        cols.push(c);
    }
    let mut alive_cols: BTreeSet<usize> = (0..m.cols).filter(|&j| !cols[j].is_empty()).collect();
    let mut dead_rows = vec![false; m.rows];
    let mut units = 0;
    loop {
        // cheapest unit pivot: shortest column, then shortest row
        let mut best: Option<(usize, usize, usize)> = None;
        for &j in &alive_cols {
            let c = &cols[j];
            for (&i, &v) in c {
                if v == 1 || v == -1 {
                    let cost = (c.len() - 1) * (row_index[i].len() - 1);
                    if best.map_or(true, |b| cost < b.2) {
                        best = Some((i, j, cost));
                    }
                }
            }
            if best.map_or(false, |b| b.2 == 0) {
                break;
            }
        }
        let Some((pi, pj, _)) = best else { break };
        let pivot_col = cols[pj].clone();
        let pv = pivot_col[&pi];
        let targets: Vec<usize> = row_index[pi].iter().copied().filter(|&j| j != pj).collect();
        for j in targets {
            let f = cols[j][&pi] * pv; // pv = ±1 so a/pv = a·pv
            for (&i, &v) in &pivot_col {
                let cur = cols[j].get(&i).copied().unwrap_or(0);
                let nv = cur.checked_sub(f.checked_mul(v)?)?;
                if nv == 0 {
                    if cur != 0 {
                        cols[j].remove(&i);
                        row_index[i].remove(&j);
                    }
                } else {
                    if cur == 0 {
                        row_index[i].insert(j);
                    }
                    cols[j].insert(i, nv);
                }
            }
            if cols[j].is_empty() {
                alive_cols.remove(&j);
            }
        }
        // drop pivot row and column
        for &i in pivot_col.keys() {
            row_index[i].remove(&pj);
        }
        cols[pj].clear();
        alive_cols.remove(&pj);
        dead_rows[pi] = true;
        units += 1;
    }
    let live_rows: Vec<usize> = (0..m.rows).filter(|&i| !dead_rows[i] && !row_index[i].is_empty()).collect();
    let live_cols: Vec<usize> = alive_cols.into_iter().collect();
    let mut pos = vec![usize::MAX; m.rows];
    for (k, &i) in live_rows.iter().enumerate() {
        pos[i] = k;
    }
    let mut d = DenseMatrix::zeros(live_rows.len(), live_cols.len());
    for (k, &j) in live_cols.iter().enumerate() {
        for (&i, &v) in &cols[j] {
            *d.get_mut(pos[i], k) = v;
        }
    }
    Some((units, d))
}

/// Row-reduced echelon data over Z/p.
#[derive(Clone, Debug)]
pub struct ModPEchelon {
    pub p: u64,
    /// Reduced rows (dense, length = cols).
    pub rows: Vec<Vec<u64>>,
    pub pivots: Vec<usize>,
    pub cols: usize,
}

fn inv_mod(a: u64, p: u64) -> u64 {
    crate::ring::mod_inverse(a, p).expect("nonzero element of a prime field")
}

/// RREF of the row vectors over Z/p (`p` prime).
pub fn rref_mod_p(rows_in: Vec<Vec<u64>>, cols: usize, p: u64) -> ModPEchelon {
    let mut rows: Vec<Vec<u64>> = rows_in.into_iter().map(|r| r.into_iter().map(|v| v % p).collect()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(k) = (r..rows.len()).find(|&k| rows[k][c] != 0) else { continue };
        rows.swap(r, k);
        let inv = inv_mod(rows[r][c], p);
        for v in rows[r].iter_mut() {
            *v = *v * inv % p;
        }
        let pivot_row = rows[r].clone();
        for (k, row) in rows.iter_mut().enumerate() {
            if k != r && row[c] != 0 {
                let f = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + (p - f) * y) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    ModPEchelon { p, rows, pivots, cols }
}

impl ModPEchelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Basis of `{x : R·x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<u64>> {
        let p = self.p;
        let pivot_set: BTreeSet<usize> = self.pivots.iter().copied().collect();
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|c| !pivot_set.contains(c)) {
            let mut v = vec![0u64; self.cols];
            v[free] = 1;
            for (row, &pc) in self.rows.iter().zip(&self.pivots) {
                v[pc] = (p - row[free]) % p;
            }
            out.push(v);
        }
        out
    }
}

/// Rank of a sparse matrix over Z/p.
pub fn rank_mod_p(m: &SparseMatrix<i64>, p: u64) -> usize {
    // rows of the transpose are the columns; rank is the same
    let rows: Vec<Vec<u64>> = (0..m.cols())
        .map(|j| {
            let mut v = vec![0u64; m.rows()];
            for &(i, x) in m.column(j) {
                v[i] = (v[i] + x.rem_euclid(p as i64) as u64) % p;
            }
            v
        })
        .collect();
    rref_mod_p(rows, m.rows(), p).rank()
}

/// Solve `A·x ≡ b (mod m)` for integer `A` using its Smith normal form.
pub fn solvable_mod(a: &DenseMatrix<i64>, b: &[i64], modulus: u64) -> bool {
    let snf = smith_normal_form(a, RowTracking::Forward);
    let u = snf.u.expect("tracked");
    let m = BigInt::from(modulus);
    for i in 0..a.rows() {
        let mut y = BigInt::zero();
        for (k, bk) in b.iter().enumerate() {
            if *bk != 0 {
                y += u.get(i, k) * BigInt::from(*bk);
            }
        }
        let y = y.mod_floor(&m);
        let ok = match snf.diagonal.get(i) {
            Some(d) => Integer::is_multiple_of(&y, &d.gcd(&m)),
            None => y.is_zero(),
        };
        if !ok {
            return false;
        }
    }
    true
}

pub fn big_to_i64(v: &BigInt) -> Option<i64> {
    v.to_i64()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense(rows: &[&[i64]]) -> DenseMatrix<i64> {
        DenseMatrix::from_fn(rows.len(), rows[0].len(), |i, j| rows[i][j])
    }

    #[test]
    fn diag_2_3() {
        let s = smith_normal_form(&dense(&[&[2, 0], &[0, 3]]), RowTracking::None);
        assert_eq!(s.diagonal, vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn zero_matrix() {
        let s = smith_normal_form(&DenseMatrix::zeros(3, 2), RowTracking::Both);
        assert!(s.diagonal.is_empty());
        assert_eq!(s.u.unwrap(), DenseMatrix::identity(3));
    }

    #[test]
    fn inverse_tracks() {
        let m = dense(&[&[4, 6, 2], &[2, 8, 10], &[6, 14, 3]]);
        let s = smith_normal_form(&m, RowTracking::Both);
        let u = s.u.unwrap();
        let ui = s.u_inv.unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let v: BigInt = (0..3).map(|k| u.get(i, k) * ui.get(k, j)).sum();
                assert_eq!(v, BigInt::from((i == j) as i64));
            }
        }
    }

    #[test]
    fn sparse_matches_dense() {
        let rows: &[&[i64]] = &[&[1, 2, 0, 3], &[0, 2, 4, 0], &[1, 4, 4, 3], &[0, 0, 0, 6]];
        let d = dense(rows);
        let mut s = SparseMatrix::new(4, 4);
        for i in 0..4 {
            for j in 0..4 {
                if rows[i][j] != 0 {
                    s.push(i, j, rows[i][j]);
                }
            }
        }
        assert_eq!(invariant_factors(&s), smith_normal_form(&d, RowTracking::None).diagonal);
    }

    #[test]
    fn overflow_falls_back() {
        let big = i64::MAX / 3;
        let m = dense(&[&[big, 7], &[big - 1, 5]]);
        let s = smith_normal_form(&m, RowTracking::Forward);
        assert_eq!(s.rank(), 2);
        assert_eq!(s.diagonal[0], BigInt::one());
    }

    #[test]
    fn mod_p_nullspace() {
        let e = rref_mod_p(vec![vec![1, 1, 0], vec![0, 1, 1]], 3, 2);
        assert_eq!(e.rank(), 2);
        let ns = e.nullspace();
        assert_eq!(ns, vec![vec![1, 1, 1]]);
    }

    #[test]
    fn solve_mod() {
        let a = dense(&[&[2, 0], &[0, 3]]);
        assert!(solvable_mod(&a, &[4, 3], 6));
        assert!(!solvable_mod(&a, &[1, 0], 6));
        assert!(solvable_mod(&a, &[1, 0], 3));
    }
}
