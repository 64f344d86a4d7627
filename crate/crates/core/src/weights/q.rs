//! q-shifted factorials, Gaussian binomials and Rogers–Szegő polynomials,
//! as polynomials in the indeterminates `q` and `t`.

use crate::error::{Error, Result};
use crate::Poly;

fn q() -> Poly {
    Poly::named("q")
}

/// `(a; q)_n = (1 - a)(1 - aq)...(1 - aq^{n-1})`, with `(a; q)_0 = 1`.
pub fn q_pochhammer(a: &Poly, n: i64) -> Result<Poly> {
    if n < 0 {
        return Err(Error::Domain(format!("q-Pochhammer symbol of negative length {n}")));
    }
    let q = q();
    let mut acc = Poly::one();
    let mut aq = a.clone();
    for _ in 0..n {
        acc = &acc * &(Poly::one() - &aq);
        aq = &aq * &q;
    }
    Ok(acc)
}

/// Gaussian binomial coefficient; zero outside `0 <= k <= n`.
pub fn q_binomial(n: i64, k: i64) -> Result<Poly> {
    if n < 0 {
        return Err(Error::Domain(format!("q-binomial with negative n = {n}")));
    }
    if k < 0 || k > n {
        return Ok(Poly::zero());
    }
    let q = q();
    // Pascal rule [n, k] = [n-1, k-1] + q^k [n-1, k], one row at a time.
    let mut row = vec![Poly::one()];
    for m in 1..=n as usize {
        let mut next = Vec::with_capacity(m + 1);
        for j in 0..=m {
            let left = if j > 0 { row[j - 1].clone() } else { Poly::zero() };
            let right = if j < m { &q.pow(j as u32) * &row[j] } else { Poly::zero() };
            next.push(left + right);
        }
        row = next;
    }
    Ok(row.swap_remove(k as usize))
}

/// `r_n(t) = sum_k [n, k]_q t^k`.
pub fn rogers_szego(n: i64) -> Result<Poly> {
    if n < 0 {
        return Err(Error::Domain(format!("Rogers-Szego polynomial of negative index {n}")));
    }
    let t = Poly::named("t");
    let mut acc = Poly::zero();
    for k in 0..=n {
        acc += q_binomial(n, k)? * t.pow(k as u32);
    }
    Ok(acc)
}
