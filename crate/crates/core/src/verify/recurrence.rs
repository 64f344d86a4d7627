//! Linear recurrences with constant coefficients, found by Berlekamp–Massey
//! over the rationals and then checked on every window.

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// `sum_i coeffs[i] a_{n+i} = 0` for all `n`, with `coeffs[order] = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Recurrence {
    pub order: usize,
    #[serde(serialize_with = "as_strings")]
    pub coeffs: Vec<BigRational>,
}

fn as_strings<S: serde::Serializer>(v: &[BigRational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|c| c.to_string()))
}

impl Recurrence {
    /// Whether every window of `seq` satisfies the relation.
    pub fn fits(&self, seq: &[BigRational]) -> bool {
        seq.windows(self.order + 1).all(|w| w.iter().zip(&self.coeffs).map(|(a, c)| a * c).sum::<BigRational>().is_zero())
    }

    /// The term following `seq`.
    pub fn predict(&self, seq: &[BigRational]) -> Option<BigRational> {
        if seq.len() < self.order {
            return None;
        }
        let tail = &seq[seq.len() - self.order..];
        Some(-tail.iter().zip(&self.coeffs).map(|(a, c)| a * c).sum::<BigRational>())
    }

    /// `k` further terms, each fed back into the next prediction.
    pub fn extend(&self, seq: &[BigRational], k: usize) -> Vec<BigRational> {
        let mut all = seq.to_vec();
        for _ in 0..k {
            let next = self.predict(&all).expect("sequence shorter than the order");
            all.push(next);
        }
        all.split_off(seq.len())
    }
}

impl std::fmt::Display for Recurrence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let term = if i == 0 { "a(n)".to_string() } else { format!("a(n+{i})") };
            let neg = c < &BigRational::zero();
            let mag = if neg { -c } else { c.clone() };
            let sep = match (first, neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            if mag.is_one() {
                write!(f, "{sep}{term}")?;
            } else {
                write!(f, "{sep}{mag}*{term}")?;
            }
            first = false;
        }
        write!(f, " = 0")
    }
}

/// Shortest recurrence of order at most `max_order` that holds on all of `seq`.
pub fn detect_recurrence(seq: &[BigRational], max_order: usize) -> Result<Option<Recurrence>> {
    let need = 2 * max_order + 2;
    if seq.len() < need {
        return Err(Error::SequenceTooShort { need, have: seq.len() });
    }
    // Connection polynomial c with sum_{i=0}^{l} c_i a_{k-i} = 0 for k >= l.
    let mut c = vec![BigRational::one()];
    let mut b = vec![BigRational::one()];
    let mut l = 0usize;
    let mut shift = 1usize;
    let mut last = BigRational::one();
    for k in 0..seq.len() {
        let d: BigRational = (0..=l).map(|i| &c[i] * &seq[k - i]).sum();
        if d.is_zero() {
            shift += 1;
            continue;
        }
        let factor = &d / &last;
        let prev = c.clone();
        if c.len() < b.len() + shift {
            c.resize(b.len() + shift, BigRational::zero());
        }
        for (i, bi) in b.iter().enumerate() {
            c[i + shift] -= &factor * bi;
        }
        if 2 * l <= k {
            l = k + 1 - l;
            b = prev;
            last = d;
            shift = 1;
        } else {
            shift += 1;
        }
    }
    if l > max_order {
        return Ok(None);
    }
    c.resize(l + 1, BigRational::zero());
    let rec = Recurrence { order: l, coeffs: c.into_iter().rev().collect() };
    Ok(if rec.fits(seq) { Some(rec) } else { None })
}
