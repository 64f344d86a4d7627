use std::cmp::Ordering;

use smallvec::SmallVec;

use super::var::Var;

/// A power product `x1^e1 * x2^e2 * ...` with positive exponents, stored
/// sorted by variable id.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(SmallVec<[(Var, u32); 4]>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(SmallVec::new())
    }

    pub fn var(v: Var, exp: u32) -> Monomial {
        if exp == 0 {
            Monomial::one()
        } else {
            Monomial(smallvec::smallvec![(v, exp)])
        }
    }

    /// Builds a monomial from arbitrary `(var, exp)` pairs, merging repeats.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, u32)>) -> Monomial {
        let mut v: SmallVec<[(Var, u32); 4]> = pairs.into_iter().filter(|p| p.1 > 0).collect();
        v.sort_by_key(|p| p.0);
        let mut out: SmallVec<[(Var, u32); 4]> = SmallVec::with_capacity(v.len());
        for (var, e) in v {
            match out.last_mut() {
                Some(last) if last.0 == var => last.1 += e,
                _ => out.push((var, e)),
            }
        }
        Monomial(out)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn pairs(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.0.iter().find(|p| p.0 == v).map_or(0, |p| p.1)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|p| p.1).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = SmallVec::with_capacity(self.0.len());
        let mut j = 0;
        for &(v, e) in &self.0 {
            if j < other.0.len() && other.0[j].0 < v {
                return None;
            }
            if j < other.0.len() && other.0[j].0 == v {
                let d = other.0[j].1;
                j += 1;
                match e.cmp(&d) {
                    Ordering::Less => return None,
                    Ordering::Equal => {}
                    Ordering::Greater => out.push((v, e - d)),
                }
            } else {
                out.push((v, e));
            }
        }
        if j < other.0.len() {
            return None;
        }
        Some(Monomial(out))
    }

    /// Removes `v` from the monomial, returning its former exponent.
    pub fn split_off(&self, v: Var) -> (Monomial, u32) {
        let mut rest = self.0.clone();
        match rest.iter().position(|p| p.0 == v) {
            Some(pos) => {
                let e = rest.remove(pos).1;
                (Monomial(rest), e)
            }
            None => (Monomial(rest), 0),
        }
    }

    /// Lexicographic comparison where the variable ordered first by `key`
    /// is the most significant.
    fn cmp_lex_by<K: Fn(Var, Var) -> Ordering>(a: &[(Var, u32)], b: &[(Var, u32)], key: K) -> Ordering {
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => match key(va, vb) {
                    // `a` carries a more significant variable that `b` lacks.
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }

    /// Name-based lexicographic order used for printing.
    pub fn cmp_by_names(&self, other: &Monomial) -> Ordering {
        let mut a: SmallVec<[(Var, u32); 4]> = self.0.clone();
        let mut b: SmallVec<[(Var, u32); 4]> = other.0.clone();
        a.sort_by(|x, y| x.0.cmp_by_name(y.0));
        b.sort_by(|x, y| x.0.cmp_by_name(y.0));
        Self::cmp_lex_by(&a, &b, |x, y| x.cmp_by_name(y))
    }
}

/// Internal term order: lexicographic with lower variable ids more significant.
/// It is a monomial order, which is all exact division needs.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        Self::cmp_lex_by(&self.0, &other.0, |x, y| x.cmp(&y))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mul_and_div_invert() {
        let x = Var::new("x");
        let y = Var::new("y");
        let a = Monomial::from_pairs([(x, 2), (y, 1)]);
        let b = Monomial::from_pairs([(y, 3)]);
        let p = a.mul(&b);
        assert_eq!(p.degree_in(y), 4);
        assert_eq!(p.div(&b), Some(a.clone()));
        assert_eq!(b.div(&a), None);
    }

    #[test]
    fn order_is_multiplicative() {
        let x = Var::new("x");
        let y = Var::new("y");
        let a = Monomial::from_pairs([(x, 1)]);
        let b = Monomial::from_pairs([(y, 5)]);
        let c = Monomial::from_pairs([(x, 1), (y, 2)]);
        let ord = a.cmp(&b);
        assert_eq!(a.mul(&c).cmp(&b.mul(&c)), ord);
        assert!(c > Monomial::one());
    }
}
