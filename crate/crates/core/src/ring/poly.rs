use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rustc_hash::FxHashMap;

use super::coeff::Coefficient;
use super::monomial::Monomial;
use super::var::Var;
use crate::error::{abbreviate, Error, Result};

/// Sparse multivariate polynomial with exact coefficients.
///
/// Terms are kept sorted in strictly decreasing monomial order with no zero
/// coefficients, so structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<C: Coefficient> {
    terms: Vec<(Monomial, C)>,
}

impl<C: Coefficient> Default for Polynomial<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> Polynomial<C> {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(Monomial::one(), c)
    }

    pub fn from_i64(n: i64) -> Self {
        Self::constant(C::from_i64(n))
    }

    pub fn monomial(m: Monomial, c: C) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Polynomial { terms: vec![(m, c)] }
        }
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(Monomial::var(v, 1), C::one())
    }

    /// Shorthand for the polynomial `name`.
    pub fn named(name: &str) -> Self {
        Self::var(Var::new(name))
    }

    /// Collects arbitrary terms, merging repeated monomials and dropping zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut acc: FxHashMap<Monomial, C> = FxHashMap::default();
        for (m, c) in terms {
            match acc.get_mut(&m) {
                Some(slot) => *slot += &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Self::from_map(acc)
    }

    fn from_map(acc: FxHashMap<Monomial, C>) -> Self {
        let mut terms: Vec<(Monomial, C)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Polynomial { terms }
    }

    pub fn terms(&self) -> &[(Monomial, C)] {
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

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// The value of a constant polynomial, `None` otherwise.
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.as_slice() {
            [] => Some(C::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn leading_term(&self) -> Option<&(Monomial, C)> {
        self.terms.first()
    }

    /// Indeterminates occurring in the polynomial, sorted by name.
    pub fn variables(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self.terms.iter().flat_map(|(m, _)| m.pairs().iter().map(|p| p.0)).collect();
        vs.sort();
        vs.dedup();
        vs.sort_by(|a, b| a.cmp_by_name(*b));
        vs
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree_in(v)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.total_degree()).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| {
                    let mut a = a.clone();
                    a *= c;
                    (m.clone(), a)
                })
                .collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| {
                    let mut a = a.clone();
                    a *= c;
                    (m.mul(mono), a)
                })
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
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

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -b[j].1.clone() } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let mut c = a[i].1.clone();
                    if negate {
                        c -= &b[j].1;
                    } else {
                        c += &b[j].1;
                    }
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = if negate { -t.1.clone() } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        Polynomial { terms: out }
    }

    fn product(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if let Some(c) = other.as_constant() {
            return self.scale(&c);
        }
        if let Some(c) = self.as_constant() {
            return other.scale(&c);
        }
        let mut acc: FxHashMap<Monomial, C> =
            FxHashMap::with_capacity_and_hasher(self.len() * other.len(), Default::default());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let mut c = ca.clone();
                c *= cb;
                let m = ma.mul(mb);
                match acc.get_mut(&m) {
                    Some(slot) => *slot += &c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Self::from_map(acc)
    }

    /// The unique `q` with `q * divisor == self`, or an error if there is none.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        self.try_exact_div(divisor).ok_or_else(|| {
            if divisor.is_zero() {
                Error::DivisionByZero
            } else {
                Error::InexactDivision {
                    dividend: abbreviate(self.to_string()),
                    divisor: abbreviate(divisor.to_string()),
                }
            }
        })
    }

    pub fn try_exact_div(&self, divisor: &Self) -> Option<Self> {
        let (lead_m, lead_c) = divisor.leading_term()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        if divisor.len() == 1 {
            let mut terms = Vec::with_capacity(self.len());
            for (m, c) in &self.terms {
                terms.push((m.div(lead_m)?, c.div_exact(lead_c)?));
            }
            return Some(Polynomial { terms });
        }
        // Leading-term division. The remainder must vanish; any leading term
        // that the divisor's leading term fails to divide proves inexactness.
        let mut rem: BTreeMap<Monomial, C> = self.terms.iter().cloned().collect();
        let mut quotient = Vec::new();
        let tail = &divisor.terms[1..];
        while let Some((m, c)) = rem.pop_last() {
            let qm = m.div(lead_m)?;
            let qc = c.div_exact(lead_c)?;
            for (dm, dc) in tail {
                let mut prod = qc.clone();
                prod *= dc;
                let key = qm.mul(dm);
                match rem.get_mut(&key) {
                    Some(slot) => {
                        *slot -= &prod;
                        if slot.is_zero() {
                            rem.remove(&key);
                        }
                    }
                    None => {
                        rem.insert(key, -prod);
                    }
                }
            }
            quotient.push((qm, qc));
        }
        Some(Polynomial { terms: quotient })
    }

    /// Simultaneous substitution of polynomials for indeterminates.
    pub fn substitute(&self, bindings: &HashMap<Var, Polynomial<C>>) -> Self {
        if bindings.is_empty() {
            return self.clone();
        }
        let mut cache: HashMap<(Var, u32), Polynomial<C>> = HashMap::new();
        let mut acc: FxHashMap<Monomial, C> = FxHashMap::default();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut factor = Polynomial::constant(c.clone());
            for &(v, e) in m.pairs() {
                match bindings.get(&v) {
                    Some(val) => {
                        let p = cache.entry((v, e)).or_insert_with(|| val.pow(e));
                        factor = &factor * &*p;
                    }
                    None => kept.push((v, e)),
                }
            }
            let rest = Monomial::from_pairs(kept);
            for (fm, fc) in factor.terms {
                let key = fm.mul(&rest);
                match acc.get_mut(&key) {
                    Some(slot) => *slot += &fc,
                    None => {
                        acc.insert(key, fc);
                    }
                }
            }
        }
        Self::from_map(acc)
    }

    /// Substitutes a single indeterminate.
    pub fn subs(&self, v: Var, value: &Polynomial<C>) -> Self {
        let mut b = HashMap::new();
        b.insert(v, value.clone());
        self.substitute(&b)
    }

    /// Exact rational value with every indeterminate bound.
    pub fn eval_rational(&self, bindings: &HashMap<Var, BigRational>) -> Result<BigRational> {
        let mut cache: HashMap<(Var, u32), BigRational> = HashMap::new();
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut term = c.to_rational();
            for &(v, e) in m.pairs() {
                let value = bindings.get(&v).ok_or_else(|| Error::UnboundVariable(v.name().to_string()))?;
                let p = cache.entry((v, e)).or_insert_with(|| num_traits::pow(value.clone(), e as usize));
                term *= &*p;
            }
            total += term;
        }
        Ok(total)
    }

    /// Coefficient of `v^k`, as a polynomial in the remaining indeterminates.
    pub fn coefficient_of(&self, v: Var, k: u32) -> Self {
        Self::from_terms(self.terms.iter().filter_map(|(m, c)| {
            let (rest, e) = m.split_off(v);
            (e == k).then(|| (rest, c.clone()))
        }))
    }

    /// Coefficients in `v`, indexed by exponent.
    pub fn coefficients_in(&self, v: Var) -> Vec<Self> {
        let deg = self.degree_in(v) as usize;
        let mut buckets: Vec<Vec<(Monomial, C)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let (rest, e) = m.split_off(v);
            buckets[e as usize].push((rest, c.clone()));
        }
        buckets.into_iter().map(Self::from_terms).collect()
    }

    pub fn map_coefficients<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> Polynomial<D> {
        Polynomial::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Same polynomial over the rationals.
    pub fn to_rational(&self) -> Polynomial<BigRational> {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), c.to_rational())).collect() }
    }

    /// Converts from rational coefficients, failing if any has no image in `C`.
    pub fn from_rational_poly(p: &Polynomial<BigRational>) -> Result<Self> {
        let mut terms = Vec::with_capacity(p.len());
        for (m, c) in &p.terms {
            let c = C::from_rational(c).ok_or_else(|| Error::NonIntegral(abbreviate(p.to_string())))?;
            terms.push((m.clone(), c));
        }
        Ok(Polynomial { terms })
    }

    /// Terms in the public (name-lexicographic, descending) order.
    pub fn sorted_terms(&self) -> Vec<&(Monomial, C)> {
        let mut ts: Vec<&(Monomial, C)> = self.terms.iter().collect();
        ts.sort_by(|a, b| b.0.cmp_by_names(&a.0));
        ts
    }
}

impl Polynomial<BigInt> {
    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Self::constant(n.into())
    }
}

impl<C: Coefficient> From<i64> for Polynomial<C> {
    fn from(n: i64) -> Self {
        Self::from_i64(n)
    }
}

impl<C: Coefficient> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            match (idx, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let mut vars: Vec<(Var, u32)> = m.pairs().to_vec();
            vars.sort_by(|a, b| a.0.cmp_by_name(b.0));
            let mut parts: Vec<String> = Vec::with_capacity(vars.len() + 1);
            if !abs.is_one() || vars.is_empty() {
                parts.push(abs.to_string());
            }
            for (v, e) in vars {
                if e == 1 {
                    parts.push(v.name().to_string());
                } else {
                    parts.push(format!("{}^{}", v.name(), e));
                }
            }
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Debug for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'a, C: Coefficient> Add<&'a Polynomial<C>> for &'a Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        self.merge(rhs, false)
    }
}

impl<'a, C: Coefficient> Sub<&'a Polynomial<C>> for &'a Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        self.merge(rhs, true)
    }
}

impl<'a, C: Coefficient> Mul<&'a Polynomial<C>> for &'a Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        self.product(rhs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<C: Coefficient> $tr<Polynomial<C>> for Polynomial<C> {
            type Output = Polynomial<C>;
            fn $m(self, rhs: Polynomial<C>) -> Polynomial<C> {
                (&self).$m(&rhs)
            }
        }
        impl<'a, C: Coefficient> $tr<&'a Polynomial<C>> for Polynomial<C> {
            type Output = Polynomial<C>;
            fn $m(self, rhs: &Polynomial<C>) -> Polynomial<C> {
                (&self).$m(rhs)
            }
        }
        impl<'a, C: Coefficient> $tr<Polynomial<C>> for &'a Polynomial<C> {
            type Output = Polynomial<C>;
            fn $m(self, rhs: Polynomial<C>) -> Polynomial<C> {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

macro_rules! assign_op {
    ($tr:ident, $m:ident, $op:ident) => {
        impl<'a, C: Coefficient> $tr<&'a Polynomial<C>> for Polynomial<C> {
            fn $m(&mut self, rhs: &Polynomial<C>) {
                *self = (&*self).$op(rhs);
            }
        }
        impl<C: Coefficient> $tr<Polynomial<C>> for Polynomial<C> {
            fn $m(&mut self, rhs: Polynomial<C>) {
                *self = (&*self).$op(&rhs);
            }
        }
    };
}
assign_op!(AddAssign, add_assign, add);
assign_op!(SubAssign, sub_assign, sub);
assign_op!(MulAssign, mul_assign, mul);

impl<C: Coefficient> Neg for Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(mut self) -> Polynomial<C> {
        for t in &mut self.terms {
            t.1 = -t.1.clone();
        }
        self
    }
}

impl<C: Coefficient> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        -self.clone()
    }
}

impl<C: Coefficient> Zero for Polynomial<C> {
    fn zero() -> Self {
        Polynomial::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Coefficient> One for Polynomial<C> {
    fn one() -> Self {
        Polynomial::one()
    }
}

impl<C: Coefficient> std::iter::Sum for Polynomial<C> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| a + b)
    }
}

impl<C: Coefficient> std::iter::Product for Polynomial<C> {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |a, b| a * b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Poly;

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn addition_cancels() {
        assert_eq!(p("alpha + 1") + p("-alpha"), Poly::one());
        assert_eq!(Poly::zero() + p("x*y"), p("x*y"));
        assert_eq!(p("alpha + s0") + p("alpha + s1"), p("2*alpha + s0 + s1"));
    }

    #[test]
    fn multiplication() {
        assert_eq!(p("alpha + 1") * p("alpha - 1"), p("alpha^2 - 1"));
        assert_eq!(p("(alpha + s0)*(alpha + s1) - t0"), p("alpha^2 + alpha*s0 + alpha*s1 + s0*s1 - t0"));
        assert!((p("x + 3") * Poly::zero()).is_zero());
    }

    #[test]
    fn exact_division() {
        assert_eq!(p("alpha^2 - beta^2").exact_div(&p("alpha - beta")).unwrap(), p("alpha + beta"));
        assert_eq!(p("x*y + 2").exact_div(&Poly::one()).unwrap(), p("x*y + 2"));
        assert!(matches!(p("x^2 + 1").exact_div(&p("x - 1")), Err(Error::InexactDivision { .. })));
        assert!(matches!(p("x").exact_div(&Poly::zero()), Err(Error::DivisionByZero)));
        assert!(p("2*x + 1").exact_div(&p("2")).is_err());
    }

    #[test]
    fn substitution() {
        let f2 = p("(alpha + s0)*(alpha + s1) - t0");
        let mut b = HashMap::new();
        b.insert(Var::new("s0"), p("1"));
        b.insert(Var::new("s1"), p("2"));
        b.insert(Var::new("t0"), p("1"));
        assert_eq!(f2.substitute(&b), p("alpha^2 + 3*alpha + 1"));
        assert_eq!(p("alpha^2 - 1").subs(Var::new("alpha"), &Poly::one()), Poly::zero());
        assert_eq!(f2.substitute(&HashMap::new()), f2);
        // simultaneous, not sequential
        let swapped = p("x - y").substitute(&HashMap::from([(Var::new("x"), p("y")), (Var::new("y"), p("x"))]));
        assert_eq!(swapped, p("y - x"));
    }

    #[test]
    fn evaluation() {
        let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        let b = HashMap::from([(Var::new("alpha"), r(1, 2))]);
        assert_eq!(p("alpha + 1").eval_rational(&b).unwrap(), r(3, 2));
        assert_eq!(Poly::zero().eval_rational(&HashMap::new()).unwrap(), r(0, 1));
        assert!(matches!(p("beta").eval_rational(&b), Err(Error::UnboundVariable(_))));
        let f2 = p("(alpha + s0)*(alpha + s1) - t0");
        let b = HashMap::from([
            (Var::new("alpha"), r(1, 1)),
            (Var::new("s0"), r(1, 1)),
            (Var::new("s1"), r(2, 1)),
            (Var::new("t0"), r(1, 1)),
        ]);
        assert_eq!(f2.eval_rational(&b).unwrap(), r(5, 1));
    }

    #[test]
    fn coefficients() {
        let beta = Var::new("beta");
        assert_eq!(p("alpha*beta + beta^2").coefficient_of(beta, 1), p("alpha"));
        assert_eq!(p("alpha + 3").coefficient_of(beta, 2), Poly::zero());
        assert_eq!(p("alpha + 3").coefficient_of(beta, 0), p("alpha + 3"));
        assert_eq!(p("x^2*beta + x").degree_in(Var::new("x")), 2);
    }

    #[test]
    fn display_is_name_ordered() {
        assert_eq!(p("1 + b + a").to_string(), "a + b + 1");
        assert_eq!(p("-x^2*y + 3").to_string(), "-x^2*y + 3");
        assert_eq!(p("2*x - 1").to_string(), "2*x - 1");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    #[test]
    fn power() {
        assert_eq!(p("x + 1").pow(3), p("x^3 + 3*x^2 + 3*x + 1"));
        assert_eq!(p("x").pow(0), Poly::one());
    }
}
