use std::collections::HashMap;
use std::fmt;
use std::hash::{BuildHasherDefault, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use super::monomial::{Context, Monomial};
use super::rational::{self, Rational};
use crate::error::{Error, Result};

/// Work size (term pairs) above which products are split across threads.
const PAR_THRESHOLD: usize = 1 << 16;

#[derive(Default)]
struct MonomialHasher(u64);

impl Hasher for MonomialHasher {
    fn finish(&self) -> u64 {
        self.0
    }
    fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.0 = (self.0.rotate_left(5) ^ b as u64).wrapping_mul(0x51_7c_c1_b7_27_22_0a_95);
        }
    }
    fn write_u64(&mut self, n: u64) {
        self.0 = (self.0.rotate_left(5) ^ n).wrapping_mul(0x51_7c_c1_b7_27_22_0a_95);
    }
}

type MonoMap<V> = HashMap<Monomial, V, BuildHasherDefault<MonomialHasher>>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Sparse polynomial with exact rational coefficients.
///
/// Terms are kept sorted ascending in graded-lex order with no zero
/// coefficients, so structural equality is mathematical equality.
#[derive(Clone)]
pub struct Poly {
    ctx: Arc<Context>,
    terms: Vec<(Monomial, Rational)>,
}

impl Poly {
    pub fn zero(ctx: &Arc<Context>) -> Poly {
        Poly {
            ctx: ctx.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ctx: &Arc<Context>, c: Rational) -> Poly {
        Poly::from_terms(ctx, vec![(Monomial::ONE, c)])
    }

    pub fn var(ctx: &Arc<Context>, index: usize) -> Poly {
        assert!(index < ctx.len(), "variable index out of range");
        Poly::from_terms(ctx, vec![(Monomial::var(index, 1), rational::one())])
    }

    pub fn monomial(ctx: &Arc<Context>, m: Monomial, c: Rational) -> Poly {
        Poly::from_terms(ctx, vec![(m, c)])
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates.
    pub fn from_terms(ctx: &Arc<Context>, terms: Vec<(Monomial, Rational)>) -> Poly {
        let mut map: MonoMap<Rational> = MonoMap::default();
        for (m, c) in terms {
            *map.entry(m).or_insert_with(Rational::zero) += c;
        }
        Poly::from_map(ctx, map)
    }

    fn from_map(ctx: &Arc<Context>, map: MonoMap<Rational>) -> Poly {
        let mut terms: Vec<_> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by_key(|t| t.0);
        Poly {
            ctx: ctx.clone(),
            terms,
        }
    }

    /// Trusts the caller that `terms` is sorted, merged and zero-free.
    fn from_sorted(ctx: &Arc<Context>, terms: Vec<(Monomial, Rational)>) -> Poly {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Poly {
            ctx: ctx.clone(),
            terms,
        }
    }

    pub fn ctx(&self) -> &Arc<Context> {
        &self.ctx
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: Monomial) -> Rational {
        match self.terms.binary_search_by(|t| t.0.cmp(&m)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn same_context(&self, other: &Poly) -> bool {
        Arc::ptr_eq(&self.ctx, &other.ctx) || *self.ctx == *other.ctx
    }

    fn check_context(&self, other: &Poly) -> Result<()> {
        if self.same_context(other) {
            Ok(())
        } else {
            Err(Error::Context(
                "operands belong to different variable contexts".into(),
            ))
        }
    }

    /// Lowest grading degree of a nonzero term.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.first().map(|t| t.0.grading_degree())
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.last().map(|t| t.0.grading_degree())
    }

    /// The homogeneous part of grading degree `d`.
    pub fn homogeneous(&self, d: u32) -> Poly {
        let lo = self.terms.partition_point(|t| t.0.grading_degree() < d);
        let hi = self.terms.partition_point(|t| t.0.grading_degree() <= d);
        Poly::from_sorted(&self.ctx, self.terms[lo..hi].to_vec())
    }

    /// Terms of grading degree `<= max`.
    pub fn truncate(&self, max: u32) -> Poly {
        let hi = self.terms.partition_point(|t| t.0.grading_degree() <= max);
        Poly::from_sorted(&self.ctx, self.terms[..hi].to_vec())
    }

    pub fn truncate_below(&self, max: i64) -> Poly {
        if max < 0 {
            Poly::zero(&self.ctx)
        } else {
            self.truncate(max as u32)
        }
    }

    /// Sub-polynomial with no parameter (λ) dependence.
    pub fn parameter_free_part(&self) -> Poly {
        Poly::from_sorted(
            &self.ctx,
            self.terms
                .iter()
                .filter(|t| t.0.is_parameter_free())
                .cloned()
                .collect(),
        )
    }

    pub fn checked(&self, other: &Poly, op: ArithOp) -> Result<Poly> {
        self.check_context(other)?;
        Ok(match op {
            ArithOp::Add => self.add_impl(other, false),
            ArithOp::Sub => self.add_impl(other, true),
            ArithOp::Mul => self.mul_truncated(other, None),
        })
    }

    fn add_impl(&self, other: &Poly, subtract: bool) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let flip = |c: &Rational| if subtract { -c.clone() } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((b[j].0, flip(&b[j].1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if subtract {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (*m, flip(c))));
        Poly::from_sorted(&self.ctx, out)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ctx);
        }
        Poly::from_sorted(
            &self.ctx,
            self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        )
    }

    /// Product keeping only terms of grading degree `<= cap`.
    ///
    /// Coefficients are accumulated as integers over the product of the
    /// operands' common denominators and reduced once per output term.
    pub fn mul_truncated(&self, other: &Poly, cap: Option<u32>) -> Poly {
        assert!(self.same_context(other), "variable context mismatch");
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.ctx);
        }
        let (a_num, a_den) = integer_form(&self.terms);
        let (b_num, b_den) = integer_form(&other.terms);
        let cap = cap.unwrap_or(u32::MAX);
        let b_degree_end = degree_offsets(&other.terms);

        let accumulate = |chunk: &[(Monomial, BigInt)]| -> MonoMap<BigInt> {
            let mut map: MonoMap<BigInt> = MonoMap::default();
            for (ma, ca) in chunk {
                let da = ma.grading_degree();
                if da > cap {
                    break;
                }
                let end = b_degree_end(cap - da);
                for (mb, cb) in &b_num[..end] {
                    let m = ma.mul(*mb);
                    let prod = ca * cb;
                    match map.get_mut(&m) {
                        Some(acc) => *acc += prod,
                        None => {
                            map.insert(m, prod);
                        }
                    }
                }
            }
            map
        };

        let work = a_num.len() * b_num.len();
        let map = if work > PAR_THRESHOLD && a_num.len() > 1 {
            let chunk = (a_num.len() / rayon::current_num_threads().max(1) / 2).max(1);
            a_num
                .par_chunks(chunk)
                .map(accumulate)
                .reduce(MonoMap::default, |mut x, y| {
                    if x.len() < y.len() {
                        return merge_into(y, x);
                    }
                    for (m, c) in y {
                        *x.entry(m).or_insert_with(BigInt::zero) += c;
                    }
                    x
                })
        } else {
            accumulate(&a_num)
        };

        let den = &a_den * &b_den;
        let mut terms: Vec<(Monomial, Rational)> = map
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (m, BigRational::new(c, den.clone())))
            .collect();
        terms.sort_unstable_by_key(|t| t.0);
        Poly::from_sorted(&self.ctx, terms)
    }

    pub fn pow_truncated(&self, k: u32, cap: Option<u32>) -> Poly {
        let mut acc = Poly::constant(&self.ctx, rational::one());
        for _ in 0..k {
            acc = acc.mul_truncated(self, cap);
        }
        acc
    }

    /// Formal partial derivative with respect to variable `index`.
    pub fn diff(&self, index: usize) -> Poly {
        assert!(index < self.ctx.len(), "variable index out of range");
        let mut terms: Vec<_> = self
            .terms
            .iter()
            .filter_map(|(m, c)| m.lower(index).map(|(e, lm)| (lm, c * rational::int(e as i64))))
            .collect();
        terms.sort_unstable_by_key(|t| t.0);
        Poly::from_sorted(&self.ctx, terms)
    }

    pub fn diff_named(&self, name: &str) -> Result<Poly> {
        let i = self
            .ctx
            .index_of(name)
            .ok_or_else(|| Error::Context(format!("unknown variable `{name}`")))?;
        Ok(self.diff(i))
    }

    /// Full evaluation; every variable occurring in `self` must be assigned.
    pub fn eval(&self, assignment: &[(&str, Rational)]) -> Result<Rational> {
        let mut values: Vec<Option<Rational>> = vec![None; self.ctx.len()];
        for (name, val) in assignment {
            let i = self
                .ctx
                .index_of(name)
                .ok_or_else(|| Error::Context(format!("unknown variable `{name}`")))?;
            values[i] = Some(val.clone());
        }
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate().take(self.ctx.len()) {
                if e == 0 {
                    continue;
                }
                let x = values[i].as_ref().ok_or_else(|| {
                    Error::Context(format!("no value for variable `{}`", self.ctx.name(i)))
                })?;
                t *= num_traits::pow(x.clone(), e as usize);
            }
            total += t;
        }
        Ok(total)
    }

    /// Substitutes values for the given variable slots, keeping the rest symbolic.
    pub fn substitute(&self, values: &[(usize, Rational)]) -> Poly {
        let mut map: MonoMap<Rational> = MonoMap::default();
        for (m, c) in &self.terms {
            let mut exps = m.exponents();
            let mut t = c.clone();
            for (i, x) in values {
                let e = exps[*i];
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                    exps[*i] = 0;
                }
            }
            if !t.is_zero() {
                *map.entry(Monomial::from_exponents(&exps))
                    .or_insert_with(Rational::zero) += t;
            }
        }
        Poly::from_map(&self.ctx, map)
    }

    /// Re-expresses `self` in another context with the same variable layout.
    pub fn with_context(&self, ctx: &Arc<Context>) -> Poly {
        Poly::from_sorted(ctx, self.terms.clone())
    }

    /// True if the polynomial is unchanged under `slot -> -slot` for the
    /// given sign pattern, scaled by `parity` (+1 even, -1 odd).
    pub fn has_parity(&self, slots: &[usize], odd: bool) -> bool {
        self.terms.iter().all(|(m, _)| {
            let deg: u32 = slots.iter().map(|&i| m.exponent(i) as u32).sum();
            (deg % 2 == 1) == odd
        })
    }

    /// Canonical text: terms in ascending graded-lex order, coefficients as `p/q`.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = m.fmt_in(&self.ctx);
            if mono == "1" {
                out.push_str(&rational::to_text(&mag));
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&rational::to_text(&mag));
                out.push('*');
                out.push_str(&mono);
            }
        }
        out
    }

    /// Exact division of `self` by `d` in the full polynomial ring.
    ///
    /// Returns `None` when `d` does not divide `self`.
    pub fn divide_exact(&self, d: &Poly) -> Option<Poly> {
        assert!(self.same_context(d), "variable context mismatch");
        let (lead_m, lead_c) = d.terms.last()?.clone();
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.terms.last().cloned() {
            let qm = m.div(lead_m)?;
            let qc = &c / &lead_c;
            let step = Poly::monomial(&self.ctx, qm, qc.clone());
            rem = &rem - &step.mul_truncated(d, None);
            quot.push((qm, qc));
        }
        Some(Poly::from_terms(&self.ctx, quot))
    }
}

fn merge_into(mut big: MonoMap<BigInt>, small: MonoMap<BigInt>) -> MonoMap<BigInt> {
    for (m, c) in small {
        *big.entry(m).or_insert_with(BigInt::zero) += c;
    }
    big
}

/// Integer numerators over a common denominator.
fn integer_form(terms: &[(Monomial, Rational)]) -> (Vec<(Monomial, BigInt)>, BigInt) {
    let den = terms
        .iter()
        .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let nums = terms
        .iter()
        .map(|(m, c)| (*m, c.numer() * (&den / c.denom())))
        .collect();
    (nums, den)
}

/// For sorted terms, a lookup `max_degree -> number of leading terms with
/// grading degree <= max_degree`.
fn degree_offsets(terms: &[(Monomial, Rational)]) -> impl Fn(u32) -> usize {
    let max = terms.last().map(|t| t.0.grading_degree()).unwrap_or(0) as usize;
    let mut ends = vec![0usize; max + 1];
    for (d, end) in ends.iter_mut().enumerate() {
        *end = terms.partition_point(|t| (t.0.grading_degree() as usize) <= d);
    }
    move |d: u32| {
        if d as usize >= ends.len() {
            *ends.last().unwrap()
        } else {
            ends[d as usize]
        }
    }
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.same_context(other) && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.to_text())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert!(self.same_context(rhs), "variable context mismatch");
        self.add_impl(rhs, false)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        assert!(self.same_context(rhs), "variable context mismatch");
        self.add_impl(rhs, true)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.mul_truncated(rhs, None)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::from_sorted(
            &self.ctx,
            self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        )
    }
}

/// Shorthand used by the sigma and inversion builders: `c * var^e * ...`.
pub fn term(ctx: &Arc<Context>, c: Rational, exps: &[u8]) -> Poly {
    Poly::monomial(ctx, Monomial::from_exponents(exps), c)
}
