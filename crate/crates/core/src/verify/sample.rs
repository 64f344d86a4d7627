//! Seeded random rational specialisations for Schwartz–Zippel checks.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ring::{Polynomial, Var};
use crate::weights::WeightTable;
use crate::QPoly;

pub(crate) fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A nonzero rational `p/q` with `|p|, q <= 1000`.
pub fn random_rational(rng: &mut impl Rng) -> BigRational {
    let mut p = 0i64;
    while p == 0 {
        p = rng.gen_range(-1000..=1000);
    }
    BigRational::new(BigInt::from(p), BigInt::from(rng.gen_range(1..=1000i64)))
}

/// Replaces every indeterminate outside `keep` by an independent random
/// rational, redrawing until no down weight vanishes.
pub(crate) fn specialize(w: &WeightTable<BigRational>, keep: &[Var], rng: &mut impl Rng) -> WeightTable<BigRational> {
    let vars: BTreeSet<Var> = w
        .level
        .iter()
        .chain(&w.down)
        .flat_map(|p| p.variables())
        .filter(|v| !keep.contains(v))
        .collect();
    loop {
        let values: HashMap<Var, QPoly> =
            vars.iter().map(|&v| (v, Polynomial::constant(random_rational(rng)))).collect();
        let out = w.map(|p| p.substitute(&values));
        if out.down.iter().all(|d| !d.is_zero()) {
            return out;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::{Mode, WeightSystem};

    #[test]
    fn specialisation_is_seeded() {
        let w = WeightSystem::symbolic(Mode::Motzkin).table::<BigInt>(4).map(|p| p.to_rational());
        let a = specialize(&w, &[], &mut rng(7));
        let b = specialize(&w, &[], &mut rng(7));
        assert_eq!(a, b);
        assert!(a.level.iter().chain(&a.down).all(|p| p.is_constant()));
        let keep = specialize(&w, &[Var::new("s_1")], &mut rng(7));
        assert_eq!(keep.level[1], QPoly::named("s_1"));
    }
}
