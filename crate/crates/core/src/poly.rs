//! Sparse multivariate polynomials over the integers.
//!
//! A [`SparsePoly`] carries a fixed, declared list of variable names and a map
//! from exponent vectors to non-zero [`BigInt`] coefficients. Terms are kept in
//! graded-lexicographic order so that printing and serialization are
//! deterministic: highest total degree first, ties broken lexicographically in
//! declaration order of the variables.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// An exponent vector. Ordered graded-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in a declared set of variables with big-integer coefficients.
///
/// No stored coefficient is ever zero. Two polynomials compare equal only when
/// they have the same variable list and the same terms.
#[derive(Clone, PartialEq, Eq)]
pub struct SparsePoly {
    vars: Arc<[String]>,
    terms: BTreeMap<Monomial, BigInt>,
}

impl SparsePoly {
    pub fn zero(vars: &[&str]) -> Self {
        SparsePoly {
            vars: vars.iter().map(|v| v.to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &[&str]) -> Self {
        Self::constant(vars, 1)
    }

    pub fn constant(vars: &[&str], c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(vars);
        let zero = Monomial(vec![0; p.vars.len()]);
        p.insert(zero, c.into());
        p
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn var(vars: &[&str], name: &str) -> Result<Self> {
        let mut p = Self::zero(vars);
        let idx = p.var_index(name)?;
        let mut exps = vec![0; p.vars.len()];
        exps[idx] = 1;
        p.insert(Monomial(exps), BigInt::one());
        Ok(p)
    }

    /// Build from `(exponents, coefficient)` pairs, merging repeated exponents.
    ///
    /// Panics if an exponent vector has the wrong length.
    pub fn from_terms<I, C>(vars: &[&str], terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(vars);
        for (exps, c) in terms {
            assert_eq!(exps.len(), p.vars.len(), "exponent vector length");
            p.insert(Monomial(exps), c.into());
        }
        p
    }

    fn with_vars_of(&self) -> Self {
        SparsePoly {
            vars: Arc::clone(&self.vars),
            terms: BTreeMap::new(),
        }
    }

    fn insert(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of non-zero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (descending graded-lex) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, exps: &[u32]) -> BigInt {
        if exps.len() != self.vars.len() {
            return BigInt::zero();
        }
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_default()
    }

    /// Highest exponent of `var` appearing in any term (0 for the zero polynomial).
    pub fn degree_in(&self, var: &str) -> Result<u32> {
        let i = self.var_index(var)?;
        Ok(self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0))
    }

    /// Lowest exponent of `var` over all terms; `None` for the zero polynomial.
    pub fn min_degree_in(&self, var: &str) -> Result<Option<u32>> {
        let i = self.var_index(var)?;
        Ok(self.terms.keys().map(|m| m.0[i]).min())
    }

    fn check_vars(&self, other: &SparsePoly) -> Result<()> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::VariableMismatch {
                left: self.vars.to_vec(),
                right: other.vars.to_vec(),
            })
        }
    }

    pub fn try_add(&self, other: &SparsePoly) -> Result<SparsePoly> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &SparsePoly) -> Result<SparsePoly> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &SparsePoly) -> Result<SparsePoly> {
        self.check_vars(other)?;
        let mut out = self.with_vars_of();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.insert(m1.times(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, k: &BigInt) -> SparsePoly {
        let mut out = self.with_vars_of();
        if k.is_zero() {
            return out;
        }
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), c * k);
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> SparsePoly {
        let mut base = self.clone();
        let mut acc = self.with_vars_of();
        acc.insert(Monomial(vec![0; self.vars.len()]), BigInt::one());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Evaluate at an integer point. Every variable must be assigned.
    pub fn eval_int(&self, assignment: &BTreeMap<String, BigInt>) -> Result<BigInt> {
        let values = self
            .vars
            .iter()
            .map(|v| {
                assignment
                    .get(v)
                    .cloned()
                    .ok_or_else(|| Error::MissingAssignment(v.clone()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(self.eval_slice(&values))
    }

    /// Evaluate with values given in variable-declaration order.
    pub fn eval_slice(&self, values: &[BigInt]) -> BigInt {
        assert_eq!(values.len(), self.vars.len());
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in values.iter().zip(&m.0) {
                if e > 0 {
                    t *= num_traits::pow(v.clone(), e as usize);
                }
            }
            total += t;
        }
        total
    }

    /// Convenience wrapper over [`eval_int`](Self::eval_int) for small literals.
    pub fn eval_at(&self, assignment: &[(&str, i64)]) -> Result<BigInt> {
        let map = assignment
            .iter()
            .map(|(v, x)| (v.to_string(), BigInt::from(*x)))
            .collect();
        self.eval_int(&map)
    }

    /// Ring homomorphism: replace the i-th variable by `images[i]`.
    ///
    /// All images must share one variable set, which becomes the variable set
    /// of the result.
    pub fn compose(&self, images: &[SparsePoly]) -> Result<SparsePoly> {
        if images.len() != self.vars.len() {
            return Err(Error::Precondition(format!(
                "compose needs {} images, got {}",
                self.vars.len(),
                images.len()
            )));
        }
        let Some(first) = images.first() else {
            // no variables: only a constant term can exist
            return Ok(self.clone());
        };
        for img in &images[1..] {
            first.check_vars(img)?;
        }
        let mut out = first.with_vars_of();
        let mut power_cache: Vec<BTreeMap<u32, SparsePoly>> = vec![BTreeMap::new(); images.len()];
        for (m, c) in &self.terms {
            let mut t = first.with_vars_of();
            t.insert(Monomial(vec![0; first.vars.len()]), c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = power_cache[i]
                    .entry(e)
                    .or_insert_with(|| images[i].pow(e))
                    .clone();
                t = &t * &p;
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Substitute a constant for `var`, dropping it from the variable set.
    pub fn specialize(&self, var: &str, value: impl Into<BigInt>) -> Result<SparsePoly> {
        let idx = self.var_index(var)?;
        let value = value.into();
        let rest: Vec<&str> = self
            .vars
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != idx)
            .map(|(_, v)| v.as_str())
            .collect();
        let mut out = SparsePoly::zero(&rest);
        for (m, c) in &self.terms {
            let mut exps = m.0.clone();
            let e = exps.remove(idx);
            out.insert(Monomial(exps), c * num_traits::pow(value.clone(), e as usize));
        }
        Ok(out)
    }

    /// Rename variables without touching the terms.
    pub fn with_var_names(&self, vars: &[&str]) -> Result<SparsePoly> {
        if vars.len() != self.vars.len() {
            return Err(Error::Precondition("renaming must keep the variable count".into()));
        }
        Ok(SparsePoly {
            vars: vars.iter().map(|v| v.to_string()).collect(),
            terms: self.terms.clone(),
        })
    }

    /// Exact division by a single variable.
    pub fn div_by_var(&self, var: &str) -> Result<SparsePoly> {
        let idx = self.var_index(var)?;
        let mut out = self.with_vars_of();
        for (m, c) in &self.terms {
            if m.0[idx] == 0 {
                return Err(Error::InexactDivision(var.to_string()));
            }
            let mut exps = m.0.clone();
            exps[idx] -= 1;
            out.terms.insert(Monomial(exps), c.clone());
        }
        Ok(out)
    }

    /// Unique polynomial in `var` of degree `< points.len()` through `points`.
    ///
    /// Fails on repeated abscissae, and when any coefficient of the
    /// interpolant is not an integer.
    pub fn interpolate_univariate(var: &str, points: &[(BigInt, BigRational)]) -> Result<SparsePoly> {
        let coeffs = interpolate_rational(points)?;
        let mut out = SparsePoly::zero(&[var]);
        for (i, c) in coeffs.into_iter().enumerate() {
            if !c.is_integer() {
                return Err(Error::NonIntegerCoefficient(c.to_string()));
            }
            out.insert(Monomial(vec![i as u32]), c.to_integer());
        }
        Ok(out)
    }

    fn fmt_monomial(&self, m: &Monomial) -> String {
        m.0.iter()
            .zip(self.vars.iter())
            .filter(|(&e, _)| e > 0)
            .map(|(&e, v)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// Newton divided differences, expanded to monomial coefficients (ascending).
fn interpolate_rational(points: &[(BigInt, BigRational)]) -> Result<Vec<BigRational>> {
    let n = points.len();
    for i in 0..n {
        for j in 0..i {
            if points[i].0 == points[j].0 {
                return Err(Error::DuplicateAbscissa(points[i].0.clone()));
            }
        }
    }
    let xs: Vec<BigRational> = points.iter().map(|(x, _)| BigRational::from_integer(x.clone())).collect();
    let mut dd: Vec<BigRational> = points.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    // Horner on the Newton form: p = dd[n-1]; p = p*(x - x_k) + dd[k].
    let mut coeffs: Vec<BigRational> = Vec::with_capacity(n);
    for k in (0..n).rev() {
        // multiply by (x - xs[k])
        let mut next = vec![BigRational::zero(); coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * &xs[k];
        }
        next[0] += &dd[k];
        coeffs = next;
    }
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
    Ok(coeffs)
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let mono = self.fmt_monomial(m);
            let abs = c.abs();
            let sign = c.is_negative();
            match (i, sign) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparsePoly[{}]({})", self.vars.join(","), self)
    }
}

struct Exps<'a>(&'a [String], &'a Monomial);

impl Serialize for Exps<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (v, e) in self.0.iter().zip(&self.1 .0) {
            map.serialize_entry(v, e)?;
        }
        map.end()
    }
}

#[derive(Serialize)]
struct TermJson<'a> {
    exps: Exps<'a>,
    coeff: String,
}

/// JSON form: a list of `{"exps": {var: int}, "coeff": "<decimal>"}` in
/// canonical term order.
impl Serialize for SparsePoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (m, c) in self.terms() {
            seq.serialize_element(&TermJson {
                exps: Exps(&self.vars, m),
                coeff: c.to_string(),
            })?;
        }
        seq.end()
    }
}

// Operator forms panic on a variable-set mismatch; use the `try_*` methods
// when the operands come from different sources.

impl Add for &SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        self.try_add(rhs).expect("polynomial variable sets differ")
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        self.try_sub(rhs).expect("polynomial variable sets differ")
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        self.try_mul(rhs).expect("polynomial variable sets differ")
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        self.scale(&BigInt::from(-1))
    }
}

impl Add for SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: SparsePoly) -> SparsePoly {
        &self + &rhs
    }
}

impl Sub for SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: SparsePoly) -> SparsePoly {
        &self - &rhs
    }
}

impl Mul for SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: SparsePoly) -> SparsePoly {
        &self * &rhs
    }
}
