//! Coefficient rings for chains: `Z`, `Z_m`, `Z[t, t⁻¹]` and the finite
//! quotients `Z_m[t]/(f)` with `f` monic and `f(0)` a unit.

use std::collections::BTreeMap;
use std::fmt::Debug;
use std::hash::Hash;
use std::sync::Arc;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// A commutative ring with a context value (modulus, relation polynomial).
pub trait Ring: Clone + Debug + PartialEq {
    type Elem: Clone + Debug + PartialEq + Eq + Ord + Hash;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// The twisting unit `t`, if the ring has one.
    fn t(&self) -> Option<Self::Elem> {
        None
    }

    fn t_inv(&self) -> Option<Self::Elem> {
        None
    }

    /// Short tag used in serialized chains, e.g. `Z`, `Z/5`, `Z/3[t]/(t^2+t+1)`.
    fn tag(&self) -> String;
    fn format(&self, a: &Self::Elem) -> String;
    fn parse(&self, s: &str) -> Result<Self::Elem>;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn scale_i64(&self, a: &Self::Elem, k: i64) -> Self::Elem {
        self.mul(a, &self.from_i64(k))
    }

    /// `t^e` for any integer `e`.
    fn t_pow(&self, e: i64) -> Option<Self::Elem> {
        let base = if e >= 0 { self.t()? } else { self.t_inv()? };
        let mut acc = self.one();
        for _ in 0..e.unsigned_abs() {
            acc = self.mul(&acc, &base);
        }
        Some(acc)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Integers;

impl Ring for Integers {
    type Elem = i64;

    fn zero(&self) -> i64 {
        0
    }
    fn one(&self) -> i64 {
        1
    }
    fn from_i64(&self, v: i64) -> i64 {
        v
    }
    fn add(&self, a: &i64, b: &i64) -> i64 {
        a.checked_add(*b).expect("integer chain coefficient overflow")
    }
    fn neg(&self, a: &i64) -> i64 {
        -a
    }
    fn mul(&self, a: &i64, b: &i64) -> i64 {
        a.checked_mul(*b).expect("integer chain coefficient overflow")
    }
    fn is_zero(&self, a: &i64) -> bool {
        *a == 0
    }
    fn tag(&self) -> String {
        "Z".into()
    }
    fn format(&self, a: &i64) -> String {
        a.to_string()
    }
    fn parse(&self, s: &str) -> Result<i64> {
        s.trim().parse().map_err(|_| Error::format(format!("`{s}` is not an integer")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntegersMod {
    m: u64,
}

impl IntegersMod {
    pub fn new(m: u64) -> Result<Self> {
        if m < 2 {
            return Err(Error::parameter(format!("modulus must be at least 2, got {m}")));
        }
        Ok(IntegersMod { m })
    }

    pub fn modulus(&self) -> u64 {
        self.m
    }

    pub fn reduce(&self, v: i64) -> u64 {
        v.rem_euclid(self.m as i64) as u64
    }
}

impl Ring for IntegersMod {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_i64(&self, v: i64) -> u64 {
        self.reduce(v)
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.m
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.m - a) % self.m
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        (a * b) % self.m
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn tag(&self) -> String {
        format!("Z/{}", self.m)
    }
    fn format(&self, a: &u64) -> String {
        a.to_string()
    }
    fn parse(&self, s: &str) -> Result<u64> {
        let v: i64 = s.trim().parse().map_err(|_| Error::format(format!("`{s}` is not an integer")))?;
        Ok(self.reduce(v))
    }
}

/// An integer Laurent polynomial, exponent ↦ nonzero coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LaurentPoly(pub BTreeMap<i64, i64>);

impl LaurentPoly {
    pub fn monomial(coeff: i64, exp: i64) -> Self {
        let mut m = BTreeMap::new();
        if coeff != 0 {
            m.insert(exp, coeff);
        }
        LaurentPoly(m)
    }

    fn add_term(&mut self, exp: i64, coeff: i64) {
        let e = self.0.entry(exp).or_insert(0);
        *e += coeff;
        if *e == 0 {
            self.0.remove(&exp);
        }
    }

    /// Parse e.g. `2t^-1+1`, `-t^3+t-4`, `0`.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::format(format!("`{s}` is not a Laurent polynomial in t"));
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if chars.is_empty() {
            return Err(bad());
        }
        let mut out = LaurentPoly::default();
        let mut i = 0;
        let digits = |i: &mut usize| -> Option<i64> {
            let start = *i;
            while *i < chars.len() && chars[*i].is_ascii_digit() {
                *i += 1;
            }
            (*i > start).then(|| chars[start..*i].iter().collect::<String>().parse().ok()).flatten()
        };
        while i < chars.len() {
            let mut sign = 1;
            if chars[i] == '+' || chars[i] == '-' {
                if chars[i] == '-' {
                    sign = -1;
                }
                i += 1;
            } else if i != 0 {
                return Err(bad());
            }
            let coeff = digits(&mut i);
            if i < chars.len() && chars[i] == '*' {
                i += 1;
            }
            let exp = if i < chars.len() && chars[i] == 't' {
                i += 1;
                if i < chars.len() && chars[i] == '^' {
                    i += 1;
                    let mut esign = 1;
                    if i < chars.len() && chars[i] == '-' {
                        esign = -1;
                        i += 1;
                    }
                    esign * digits(&mut i).ok_or_else(bad)?
                } else {
                    1
                }
            } else {
                if coeff.is_none() {
                    return Err(bad());
                }
                0
            };
            out.add_term(exp, sign * coeff.unwrap_or(1));
        }
        Ok(out)
    }

    pub fn format(&self) -> String {
        if self.0.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (&e, &c)) in self.0.iter().enumerate() {
            if c < 0 {
                s.push('-');
            } else if i > 0 {
                s.push('+');
            }
            let a = c.unsigned_abs();
            if e == 0 || a != 1 {
                s.push_str(&a.to_string());
            }
            match e {
                0 => {}
                1 => s.push('t'),
                _ => s.push_str(&format!("t^{e}")),
            }
        }
        s
    }
}

/// The Laurent polynomial ring `Z[t, t⁻¹]` (evaluation only; not a PID).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct LaurentIntegers;

impl Ring for LaurentIntegers {
    type Elem = LaurentPoly;

    fn zero(&self) -> LaurentPoly {
        LaurentPoly::default()
    }
    fn one(&self) -> LaurentPoly {
        LaurentPoly::monomial(1, 0)
    }
    fn from_i64(&self, v: i64) -> LaurentPoly {
        LaurentPoly::monomial(v, 0)
    }
    fn add(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        let mut out = a.clone();
        for (&e, &c) in &b.0 {
            out.add_term(e, c);
        }
        out
    }
    fn neg(&self, a: &LaurentPoly) -> LaurentPoly {
        LaurentPoly(a.0.iter().map(|(&e, &c)| (e, -c)).collect())
    }
    fn mul(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::default();
        for (&e1, &c1) in &a.0 {
            for (&e2, &c2) in &b.0 {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
    fn is_zero(&self, a: &LaurentPoly) -> bool {
        a.0.is_empty()
    }
    fn t(&self) -> Option<LaurentPoly> {
        Some(LaurentPoly::monomial(1, 1))
    }
    fn t_inv(&self) -> Option<LaurentPoly> {
        Some(LaurentPoly::monomial(1, -1))
    }
    fn t_pow(&self, e: i64) -> Option<LaurentPoly> {
        Some(LaurentPoly::monomial(1, e))
    }
    fn tag(&self) -> String {
        "Z[t,t^-1]".into()
    }
    fn format(&self, a: &LaurentPoly) -> String {
        a.format()
    }
    fn parse(&self, s: &str) -> Result<LaurentPoly> {
        LaurentPoly::parse(s)
    }
}

pub type QuotientElem = SmallVec<[u32; 4]>;

/// `Z_m[t]/(f(t))` with `f` monic of degree `d ≥ 1` and `f(0)` a unit mod `m`.
/// Elements are coefficient vectors of length `d`, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentQuotient {
    m: u64,
    /// `f` lowest degree first, without the leading 1.
    relation: Arc<Vec<u64>>,
}

impl LaurentQuotient {
    /// `relation` lists the coefficients of `f` from the constant term up to and including the leading 1.
    pub fn new(m: u64, relation: &[i64]) -> Result<Self> {
        if m < 2 {
            return Err(Error::parameter(format!("modulus must be at least 2, got {m}")));
        }
        if relation.len() < 2 {
            return Err(Error::parameter("relation polynomial must have degree at least 1"));
        }
        let red: Vec<u64> = relation.iter().map(|&c| c.rem_euclid(m as i64) as u64).collect();
        if *red.last().unwrap() != 1 {
            return Err(Error::parameter("relation polynomial must be monic"));
        }
        if num_integer::gcd(red[0], m) != 1 {
            return Err(Error::parameter(format!(
                "constant term {} of the relation is not a unit mod {m}, so t is not invertible",
                red[0]
            )));
        }
        Ok(LaurentQuotient { m, relation: Arc::new(red[..red.len() - 1].to_vec()) })
    }

    /// `Z_3[t]/(t^2+t+1)`.
    pub fn z3_cyclotomic() -> Self {
        LaurentQuotient::new(3, &[1, 1, 1]).unwrap()
    }

    pub fn modulus(&self) -> u64 {
        self.m
    }

    pub fn degree(&self) -> usize {
        self.relation.len()
    }

    /// The relation polynomial with the leading coefficient, lowest degree first.
    pub fn relation(&self) -> Vec<u64> {
        let mut v = self.relation.to_vec();
        v.push(1);
        v
    }

    pub fn from_coeffs(&self, coeffs: &[i64]) -> QuotientElem {
        // reduce an arbitrary-degree polynomial mod f
        let mut work: Vec<u64> = coeffs.iter().map(|&c| c.rem_euclid(self.m as i64) as u64).collect();
        let d = self.degree();
        while work.len() > d {
            let lead = work.pop().unwrap();
            if lead != 0 {
                let shift = work.len() - d;
                for (i, &fc) in self.relation.iter().enumerate() {
                    let j = shift + i;
                    work[j] = (work[j] + (self.m - lead) * fc % self.m) % self.m;
                }
            }
        }
        work.resize(d, 0);
        work.into_iter().map(|c| c as u32).collect()
    }

    pub fn from_laurent(&self, p: &LaurentPoly) -> QuotientElem {
        let mut acc = self.zero();
        for (&e, &c) in &p.0 {
            let term = self.scale_i64(&self.t_pow(e).unwrap(), c);
            acc = self.add(&acc, &term);
        }
        acc
    }

    /// Is `m` prime (so the ring is a `Z_m`-vector space)?
    pub fn prime_modulus(&self) -> bool {
        is_prime(self.m)
    }
}

pub fn is_prime(m: u64) -> bool {
    m >= 2 && (2..).take_while(|d| d * d <= m).all(|d| m % d != 0)
}

impl Ring for LaurentQuotient {
    type Elem = QuotientElem;

    fn zero(&self) -> QuotientElem {
        smallvec::smallvec![0; self.degree()]
    }
    fn one(&self) -> QuotientElem {
        self.from_coeffs(&[1])
    }
    fn from_i64(&self, v: i64) -> QuotientElem {
        self.from_coeffs(&[v])
    }
    fn add(&self, a: &QuotientElem, b: &QuotientElem) -> QuotientElem {
        a.iter().zip(b).map(|(&x, &y)| ((x as u64 + y as u64) % self.m) as u32).collect()
    }
    fn neg(&self, a: &QuotientElem) -> QuotientElem {
        a.iter().map(|&x| ((self.m - x as u64) % self.m) as u32).collect()
    }
    fn mul(&self, a: &QuotientElem, b: &QuotientElem) -> QuotientElem {
        let d = self.degree();
        let mut prod = vec![0i64; 2 * d - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as i64 * y as i64) % self.m as i64;
            }
        }
        self.from_coeffs(&prod)
    }
    fn is_zero(&self, a: &QuotientElem) -> bool {
        a.iter().all(|&x| x == 0)
    }
    fn t(&self) -> Option<QuotientElem> {
        Some(self.from_coeffs(&[0, 1]))
    }
    fn t_inv(&self) -> Option<QuotientElem> {
        // t (t^{d-1} + f_{d-1} t^{d-2} + ... + f_1) = -f_0
        let f0 = self.relation[0];
        let inv = mod_inverse(f0, self.m)?;
        let mut c: Vec<i64> = self.relation[1..].iter().map(|&x| x as i64).collect();
        c.push(1);
        let q = self.from_coeffs(&c);
        Some(self.mul(&q, &self.from_i64(-(inv as i64))))
    }
    fn tag(&self) -> String {
        let f: Vec<i64> = self.relation().iter().map(|&c| c as i64).collect();
        let poly = LaurentPoly(f.iter().enumerate().filter(|(_, &c)| c != 0).map(|(e, &c)| (e as i64, c)).collect());
        format!("Z/{}[t]/({})", self.m, poly.format())
    }
    fn format(&self, a: &QuotientElem) -> String {
        LaurentPoly(a.iter().enumerate().filter(|(_, &c)| c != 0).map(|(e, &c)| (e as i64, c as i64)).collect()).format()
    }
    fn parse(&self, s: &str) -> Result<QuotientElem> {
        Ok(self.from_laurent(&LaurentPoly::parse(s)?))
    }
}

pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    (old_r == 1).then(|| old_s.rem_euclid(m as i128) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laurent_format_parse() {
        let p = LaurentPoly::parse("2t^-1+1").unwrap();
        assert_eq!(p.0.get(&-1), Some(&2));
        assert_eq!(p.0.get(&0), Some(&1));
        assert_eq!(p.format(), "2t^-1+1");
        for s in ["0", "-t^3+t-4", "t", "-1", "3t^2"] {
            let p = LaurentPoly::parse(s).unwrap();
            assert_eq!(LaurentPoly::parse(&p.format()).unwrap(), p, "{s}");
        }
        assert!(LaurentPoly::parse("t^").is_err());
        assert!(LaurentPoly::parse("x").is_err());
    }

    #[test]
    fn quotient_t_is_unit() {
        for (m, f) in [(3u64, vec![1i64, 1, 1]), (5, vec![2, 0, 1]), (7, vec![3, 1]), (2, vec![1, 1, 0, 1])] {
            let r = LaurentQuotient::new(m, &f).unwrap();
            let t = r.t().unwrap();
            let ti = r.t_inv().unwrap();
            assert_eq!(r.mul(&t, &ti), r.one(), "m={m}");
        }
        assert!(LaurentQuotient::new(3, &[0, 1, 1]).is_err());
        assert!(LaurentQuotient::new(3, &[1, 1, 2]).is_err());
    }

    #[test]
    fn quotient_relation_holds() {
        let r = LaurentQuotient::z3_cyclotomic();
        let t = r.t().unwrap();
        let t2 = r.mul(&t, &t);
        let f = r.add(&r.add(&t2, &t), &r.one());
        assert!(r.is_zero(&f));
        assert_eq!(r.t_pow(3), Some(r.one()));
        assert_eq!(r.tag(), "Z/3[t]/(1+t+t^2)");
        assert_eq!(r.parse("t^-1").unwrap(), r.t_inv().unwrap());
    }

    #[test]
    fn modular() {
        let z = IntegersMod::new(6).unwrap();
        assert_eq!(z.from_i64(-1), 5);
        assert_eq!(z.mul(&4, &5), 2);
        assert_eq!(mod_inverse(3, 7), Some(5));
        assert_eq!(mod_inverse(2, 4), None);
    }
}
