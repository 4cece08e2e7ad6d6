//! Sparse multivariate polynomials with Gaussian rational coefficients.
//!
//! A [`MultiPoly`] lives over an ordered [`VariableSet`]. Terms are kept in a
//! `BTreeMap` keyed by exponent vectors, so iteration follows the
//! lexicographic order induced by the variable order and zero coefficients
//! are never stored.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ring::Ring;
use crate::scalar::GaussianRational;

/// An ordered list of distinct variable names.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VariableSet(Arc<[String]>);

impl VariableSet {
    /// Builds a variable set; panics on duplicate names.
    pub fn new(names: &[&str]) -> Self {
        for (k, a) in names.iter().enumerate() {
            assert!(!names[..k].contains(a), "duplicate variable `{a}`");
        }
        VariableSet(names.iter().map(|s| s.to_string()).collect())
    }

    /// Number of variables.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// True for the empty variable set.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Variable names in order.
    pub fn names(&self) -> &[String] {
        &self.0
    }

    /// Position of a variable.
    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.0
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }
}

/// Exponent vector of a monomial, one entry per variable.
pub type Exponents = Vec<u32>;

/// A polynomial in Q(i)[x_1, ..., x_n].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    vars: VariableSet,
    terms: BTreeMap<Exponents, GaussianRational>,
}

impl MultiPoly {
    /// The zero polynomial.
    pub fn zero(vars: &VariableSet) -> Self {
        MultiPoly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    /// A constant polynomial.
    pub fn constant(vars: &VariableSet, c: GaussianRational) -> Self {
        Self::monomial(vars, vec![0; vars.len()], c)
    }

    /// The constant one.
    pub fn one(vars: &VariableSet) -> Self {
        Self::constant(vars, GaussianRational::one())
    }

    /// A single term `c * x^exps`.
    pub fn monomial(vars: &VariableSet, exps: Exponents, c: GaussianRational) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        MultiPoly { vars: vars.clone(), terms }
    }

    /// The variable `name` as a polynomial.
    pub fn var(vars: &VariableSet, name: &str) -> Result<Self> {
        let k = vars.index_of(name)?;
        Ok(Self::var_idx(vars, k))
    }

    /// The `k`-th variable as a polynomial.
    pub fn var_idx(vars: &VariableSet, k: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[k] = 1;
        Self::monomial(vars, e, GaussianRational::one())
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, merging repeats.
    pub fn from_terms<I: IntoIterator<Item = (Exponents, GaussianRational)>>(vars: &VariableSet, it: I) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in it {
            p.add_term(e, &c);
        }
        p
    }

    /// The variable set.
    pub fn vars(&self) -> &VariableSet {
        &self.vars
    }

    /// Terms in ascending lexicographic order of exponents.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &GaussianRational)> {
        self.terms.iter()
    }

    /// Number of nonzero terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of the monomial with the given exponents.
    pub fn coeff(&self, exps: &[u32]) -> GaussianRational {
        self.terms.get(exps).cloned().unwrap_or_else(GaussianRational::zero)
    }

    /// Adds `c * x^exps` in place.
    pub fn add_term(&mut self, exps: Exponents, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        assert_eq!(exps.len(), self.vars.len(), "exponent vector length");
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// The constant term if the polynomial is constant.
    pub fn as_constant(&self) -> Option<GaussianRational> {
        match self.terms.len() {
            0 => Some(GaussianRational::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&k| k == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Leading term for the lexicographic order.
    pub fn leading_term(&self) -> Option<(&Exponents, &GaussianRational)> {
        self.terms.iter().next_back()
    }

    /// Largest total degree of a term; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// If every term has the same degree in the variables `idx`, returns it.
    /// The zero polynomial yields `None`.
    pub fn homogeneous_degree_in(&self, idx: &[usize]) -> Option<u32> {
        let mut degs = self.terms.keys().map(|e| idx.iter().map(|&k| e[k]).sum::<u32>());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// True when every term has degree `d` in the variables `idx`.
    pub fn is_homogeneous_in(&self, idx: &[usize], d: u32) -> bool {
        self.terms.keys().all(|e| idx.iter().map(|&k| e[k]).sum::<u32>() == d)
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        MultiPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect() }
    }

    /// Applies `f` to each coefficient, dropping zeros.
    pub fn map_coeffs<F: Fn(&GaussianRational) -> GaussianRational>(&self, f: F) -> Self {
        Self::from_terms(&self.vars, self.terms.iter().map(|(e, c)| (e.clone(), f(c))))
    }

    /// Nonnegative power.
    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.vars);
        let mut base = self.clone();
        let mut k = e;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `order`-th partial derivative with respect to `var`.
    pub fn partial_derivative(&self, var: &str, order: u32) -> Result<Self> {
        let k = self.vars.index_of(var)?;
        Ok(self.derivative_idx(k, order))
    }

    /// `order`-th partial derivative with respect to the `k`-th variable.
    pub fn derivative_idx(&self, k: usize, order: u32) -> Self {
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            if e[k] < order {
                continue;
            }
            let falling: i64 = (0..order).map(|j| (e[k] - j) as i64).product();
            let mut ne = e.clone();
            ne[k] -= order;
            out.add_term(ne, &c.scale(&GaussianRational::from_int(falling)));
        }
        out
    }

    /// Evaluates the polynomial with `images[k]` substituted for the `k`-th
    /// variable, in any ring containing Q(i).
    pub fn eval_in<R: Ring>(&self, images: &[R]) -> R {
        assert_eq!(images.len(), self.vars.len(), "one image per variable");
        let mut cache: Vec<Vec<R>> = images.iter().map(|x| vec![R::one(), x.clone()]).collect();
        let mut acc = R::zero();
        for (e, c) in &self.terms {
            let mut t = R::from_scalar(c);
            for (k, &p) in e.iter().enumerate() {
                if p == 0 {
                    continue;
                }
                while cache[k].len() <= p as usize {
                    let next = cache[k].last().unwrap().clone() * images[k].clone();
                    cache[k].push(next);
                }
                t = t * cache[k][p as usize].clone();
            }
            acc = acc + t;
        }
        acc
    }

    /// Evaluates at scalar values.
    pub fn evaluate(&self, values: &[GaussianRational]) -> GaussianRational {
        self.eval_in(values)
    }

    /// Substitutes polynomials for named variables. Every variable of `self`
    /// that is not bound must also exist in `target`, where it maps to itself.
    pub fn substitute(&self, bindings: &[(&str, MultiPoly)], target: &VariableSet) -> Result<MultiPoly> {
        for (name, img) in bindings {
            self.vars.index_of(name)?;
            if img.vars() != target {
                return Err(Error::VariableMismatch(format!("image of `{name}` is not over the target set")));
            }
        }
        let mut images = Vec::with_capacity(self.vars.len());
        for name in self.vars.names() {
            match bindings.iter().find(|(n, _)| n == name) {
                Some((_, img)) => images.push(img.clone()),
                None => images.push(MultiPoly::var(target, name)?),
            }
        }
        let r = self.eval_in(&images);
        Ok(if r.vars().is_empty() { MultiPoly::constant(target, r.coeff(&[])) } else { r })
    }

    /// Re-expresses the polynomial over another variable set containing all of
    /// its variables that actually occur.
    pub fn embed(&self, target: &VariableSet) -> Result<MultiPoly> {
        let mut map = Vec::with_capacity(self.vars.len());
        for (k, name) in self.vars.names().iter().enumerate() {
            let used = self.terms.keys().any(|e| e[k] > 0);
            map.push(match target.index_of(name) {
                Ok(j) => Some(j),
                Err(err) if used => return Err(err),
                Err(_) => None,
            });
        }
        let mut out = MultiPoly::zero(target);
        for (e, c) in &self.terms {
            let mut ne = vec![0; target.len()];
            for (k, &p) in e.iter().enumerate() {
                if let Some(j) = map[k] {
                    ne[j] += p;
                }
            }
            out.add_term(ne, c);
        }
        Ok(out)
    }

    /// Splits `self` as a sum of `m(outer) * p_m(inner)`: the key is the
    /// exponent vector of the `outer` variables, the value a polynomial over
    /// `inner`. Each variable of `self` must belong to exactly one of the two.
    pub fn split(&self, outer: &VariableSet, inner: &VariableSet) -> Result<BTreeMap<Exponents, MultiPoly>> {
        let mut route = Vec::with_capacity(self.vars.len());
        for name in self.vars.names() {
            route.push(match (outer.index_of(name), inner.index_of(name)) {
                (Ok(j), Err(_)) => (true, j),
                (Err(_), Ok(j)) => (false, j),
                _ => return Err(Error::VariableMismatch(format!("`{name}` must lie in exactly one block"))),
            });
        }
        let mut out: BTreeMap<Exponents, MultiPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut eo = vec![0; outer.len()];
            let mut ei = vec![0; inner.len()];
            for (k, &p) in e.iter().enumerate() {
                let (is_outer, j) = route[k];
                if is_outer {
                    eo[j] = p;
                } else {
                    ei[j] = p;
                }
            }
            out.entry(eo).or_insert_with(|| MultiPoly::zero(inner)).add_term(ei, c);
        }
        out.retain(|_, p| !p.is_zero());
        Ok(out)
    }

    /// Parses the canonical text form over the given variables.
    pub fn parse(s: &str, vars: &VariableSet) -> Result<MultiPoly> {
        parse_poly(s, vars)
    }

    fn check_same(&self, other: &MultiPoly) {
        assert!(self.vars == other.vars, "polynomials over different variable sets");
    }
}

impl Zero for MultiPoly {
    /// Zero over the empty variable set; prefer [`MultiPoly::zero`].
    fn zero() -> Self {
        MultiPoly { vars: VariableSet::new(&[]), terms: BTreeMap::new() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for MultiPoly {
    /// One over the empty variable set; prefer [`MultiPoly::one`].
    fn one() -> Self {
        MultiPoly::one(&VariableSet::new(&[]))
    }
}

fn add_polys(a: &MultiPoly, b: &MultiPoly, sign: i64) -> MultiPoly {
    if a.vars.is_empty() && a.terms.is_empty() {
        return if sign > 0 { b.clone() } else { -b };
    }
    if b.vars.is_empty() && b.terms.is_empty() {
        return a.clone();
    }
    let (a, b) = promote(a, b);
    a.check_same(&b);
    let mut out = a.clone();
    let s = GaussianRational::from_int(sign);
    for (e, c) in &b.terms {
        out.add_term(e.clone(), &(c * &s));
    }
    out
}

/// Constants built through `Zero`/`One` live over the empty variable set;
/// they are moved to the other operand's variables before combining.
fn promote(a: &MultiPoly, b: &MultiPoly) -> (MultiPoly, MultiPoly) {
    if a.vars == b.vars {
        return (a.clone(), b.clone());
    }
    if a.vars.is_empty() {
        return (MultiPoly::constant(&b.vars, a.coeff(&[])), b.clone());
    }
    if b.vars.is_empty() {
        return (a.clone(), MultiPoly::constant(&a.vars, b.coeff(&[])));
    }
    (a.clone(), b.clone())
}

fn mul_polys(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    let (a, b) = promote(a, b);
    a.check_same(&b);
    let mut out = MultiPoly::zero(&a.vars);
    for (ea, ca) in &a.terms {
        for (eb, cb) in &b.terms {
            let e: Exponents = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            out.add_term(e, &(ca * cb));
        }
    }
    out
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        add_polys(self, rhs, 1)
    }
}
impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        add_polys(self, rhs, -1)
    }
}
impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        mul_polys(self, rhs)
    }
}
impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: MultiPoly) -> MultiPoly {
        &self + &rhs
    }
}
impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        &self - &rhs
    }
}
impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}
impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}
impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl Ring for MultiPoly {
    fn from_scalar(c: &GaussianRational) -> Self {
        MultiPoly::constant(&VariableSet::new(&[]), c.clone())
    }
    fn scale(&self, c: &GaussianRational) -> Self {
        MultiPoly::scale(self, c)
    }
}

fn fmt_monomial(vars: &VariableSet, e: &[u32]) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &p)| p > 0)
        .map(|(k, &p)| if p == 1 { vars.names()[k].clone() } else { format!("{}^{}", vars.names()[k], p) })
        .collect();
    parts.join("*")
}

impl fmt::Display for MultiPoly {
    /// Canonical form: terms in descending lexicographic order, e.g.
    /// `X^2*Y - 1/2*i*Z + (1 + i)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = (c.im().is_zero() && c.re().is_negative()) || (c.re().is_zero() && c.im().is_negative());
            let abs = if negative { -c } else { c.clone() };
            let mono = fmt_monomial(&self.vars, e);
            let coeff = if !abs.re().is_zero() && !abs.im().is_zero() { format!("({abs})") } else { abs.to_string() };
            let body = match (mono.is_empty(), abs.is_one()) {
                (true, _) => coeff,
                (false, true) => mono,
                (false, false) => format!("{coeff}*{mono}"),
            };
            match (n, negative) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

fn split_top_level(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    let mut prev = ' ';
    for ch in s.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if depth == 0 && (ch == '+' || ch == '-') && !cur.trim().is_empty() && prev != '^' && prev != '*' && prev != '/' {
            out.push(cur.clone());
            cur.clear();
        }
        cur.push(ch);
        if !ch.is_whitespace() {
            prev = ch;
        }
    }
    if !cur.trim().is_empty() {
        out.push(cur);
    }
    out
}

fn parse_poly(s: &str, vars: &VariableSet) -> Result<MultiPoly> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut acc = MultiPoly::zero(vars);
    for term in split_top_level(&compact) {
        let (neg, body) = match term.strip_prefix('-') {
            Some(b) => (true, b.to_string()),
            None => (false, term.strip_prefix('+').unwrap_or(&term).to_string()),
        };
        let mut coeff = GaussianRational::one();
        let mut exps = vec![0u32; vars.len()];
        let mut rest = body.as_str();
        while !rest.is_empty() {
            let (factor, tail) = if rest.starts_with('(') {
                let close = rest.find(')').ok_or_else(|| Error::Parse(format!("unbalanced `{rest}`")))?;
                (&rest[..=close], &rest[close + 1..])
            } else {
                match rest.find('*') {
                    Some(k) => (&rest[..k], &rest[k..]),
                    None => (rest, ""),
                }
            };
            rest = tail.strip_prefix('*').unwrap_or(tail);
            if let Some(inner) = factor.strip_prefix('(').and_then(|f| f.strip_suffix(')')) {
                coeff *= &inner.parse::<GaussianRational>()?;
            } else if factor == "i" && vars.index_of("i").is_err() {
                coeff *= &GaussianRational::i();
            } else if factor.chars().next().is_some_and(|c| c.is_ascii_digit()) {
                coeff *= &factor.parse::<GaussianRational>()?;
            } else {
                let (name, pow) = match factor.split_once('^') {
                    Some((n, p)) => (n, p.parse::<u32>().map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?),
                    None => (factor, 1),
                };
                exps[vars.index_of(name)?] += pow;
            }
        }
        if neg {
            coeff = -coeff;
        }
        acc.add_term(exps, &coeff);
    }
    Ok(acc)
}

/// Binomial-style expansion helper: `base^e`, exposed for tests and oracles.
pub fn expand_power(base: &MultiPoly, e: u32) -> MultiPoly {
    base.pow(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xyz() -> VariableSet {
        VariableSet::new(&["X", "Y", "Z", "A", "B", "C"])
    }

    fn p(s: &str) -> MultiPoly {
        MultiPoly::parse(s, &xyz()).unwrap()
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p("X^2*Y").partial_derivative("X", 1).unwrap(), p("2*X*Y"));
        let zc = p("Z*C");
        assert_eq!(zc.partial_derivative("Z", 1).unwrap().partial_derivative("C", 1).unwrap(), p("1"));
        assert_eq!(p("X").partial_derivative("W", 1), Err(Error::UnknownVariable("W".into())));
    }

    #[test]
    fn expansion_coefficients() {
        let sq = expand_power(&p("X + Y + Z"), 2);
        assert_eq!(sq.coeff(&[1, 1, 0, 0, 0, 0]), GaussianRational::from_int(2));
        let cube = expand_power(&p("X + Y"), 3);
        assert_eq!(cube.coeff(&[2, 1, 0, 0, 0, 0]), GaussianRational::from_int(3));
    }

    #[test]
    fn canonical_text_round_trip() {
        for s in ["X^2*Y - 1/2*i*Z + 3", "-X*A + (1 + i)*Y*B", "i*Z^3", "0", "-1/3"] {
            let q = p(s);
            assert_eq!(q.to_string(), s);
            assert_eq!(p(&q.to_string()), q);
        }
    }

    #[test]
    fn substitution_into_linear_forms() {
        let q = p("X*B - Y*A");
        let t = VariableSet::new(&["X", "Y"]);
        let x = MultiPoly::var(&t, "X").unwrap();
        let y = MultiPoly::var(&t, "Y").unwrap();
        let r = q
            .substitute(
                &[("Z", MultiPoly::zero(&t)), ("A", -&y), ("B", x.clone()), ("C", MultiPoly::zero(&t))],
                &t,
            )
            .unwrap();
        assert_eq!(r, &(&x * &x) + &(&y * &y));
    }

    #[test]
    fn split_by_blocks() {
        let all = VariableSet::new(&["X", "z"]);
        let q = MultiPoly::parse("X*z^2 + 3*X + z", &all).unwrap();
        let parts = q.split(&VariableSet::new(&["X"]), &VariableSet::new(&["z"])).unwrap();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[&vec![1]].to_string(), "z^2 + 3");
    }
}
