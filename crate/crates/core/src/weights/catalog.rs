use std::fmt;
use std::str::FromStr;

use serde_json::json;

use super::{Family, Mode, WeightSystem};
use crate::error::{Error, Result};
use crate::Poly;

/// Named weight systems whose moments are classical sequences.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CatalogId {
    /// Motzkin numbers.
    I,
    /// Catalan numbers.
    Ii,
    /// Shifted Catalan numbers `C_{n+1}`.
    Iii,
    /// Central binomial coefficients.
    Iv,
    /// Central trinomial coefficients.
    V,
    /// Central Delannoy numbers.
    Vi,
    /// Large Schröder numbers.
    Vii,
    /// Little Schröder numbers.
    Viii,
    /// Fine numbers.
    Ix,
    /// Riordan numbers.
    X,
    /// Restricted hexagonal polyominoes.
    Xi,
    /// Bell numbers.
    Xii,
    /// Factorials.
    Xiii,
    /// `binom(2n+2, n+1) / 2`.
    Xiv,
    /// `binom(n, floor(n/2))`.
    Xv,
    /// Catalan numbers interleaved with zeroes.
    Xvi,
    /// Central binomial coefficients interleaved with zeroes.
    Xvii,
    /// Fine numbers interleaved with zeroes.
    Xviii,
    /// Rogers–Szegő polynomials `r_n(t)`.
    RogersSzego,
    /// `q^binom(n,2)`.
    QPowers,
    /// Dyck weights with `c(2n, 0) = (q;q)_n`.
    QDyck,
}

const NAMES: [(CatalogId, &str); 21] = [
    (CatalogId::I, "i"),
    (CatalogId::Ii, "ii"),
    (CatalogId::Iii, "iii"),
    (CatalogId::Iv, "iv"),
    (CatalogId::V, "v"),
    (CatalogId::Vi, "vi"),
    (CatalogId::Vii, "vii"),
    (CatalogId::Viii, "viii"),
    (CatalogId::Ix, "ix"),
    (CatalogId::X, "x"),
    (CatalogId::Xi, "xi"),
    (CatalogId::Xii, "xii"),
    (CatalogId::Xiii, "xiii"),
    (CatalogId::Xiv, "xiv"),
    (CatalogId::Xv, "xv"),
    (CatalogId::Xvi, "xvi"),
    (CatalogId::Xvii, "xvii"),
    (CatalogId::Xviii, "xviii"),
    (CatalogId::RogersSzego, "rogers-szego"),
    (CatalogId::QPowers, "q-powers"),
    (CatalogId::QDyck, "q-dyck"),
];

impl CatalogId {
    pub fn all() -> impl Iterator<Item = CatalogId> {
        NAMES.iter().map(|p| p.0)
    }

    pub fn name(self) -> &'static str {
        NAMES.iter().find(|p| p.0 == self).unwrap().1
    }
}

impl fmt::Display for CatalogId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CatalogId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase();
        NAMES.iter().find(|p| p.1 == key).map(|p| p.0).ok_or_else(|| Error::UnknownCatalog(s.to_string()))
    }
}

fn motzkin(s0: i64, s: i64, t0: i64, t: i64) -> WeightSystem {
    WeightSystem::constant_tail(Poly::from(s0), Poly::from(s), Poly::from(t0), Poly::from(t))
}

pub fn catalog(id: CatalogId) -> WeightSystem {
    use CatalogId::*;
    let ws = match id {
        I => motzkin(1, 1, 1, 1),
        Ii => motzkin(1, 2, 1, 1),
        Iii => motzkin(2, 2, 1, 1),
        Iv => motzkin(2, 2, 2, 1),
        V => motzkin(1, 1, 2, 1),
        Vi => motzkin(3, 3, 4, 2),
        Vii => motzkin(2, 3, 2, 2),
        Viii => motzkin(1, 3, 2, 2),
        Ix => motzkin(0, 2, 1, 1),
        X => motzkin(0, 1, 1, 1),
        Xi => motzkin(3, 3, 1, 1),
        Xii => WeightSystem::generator(Family::Bell, vec![], json!(null)),
        Xiii => WeightSystem::generator(Family::Factorial, vec![], json!(null)),
        Xiv => motzkin(3, 2, 1, 1),
        Xv => motzkin(1, 0, 1, 1),
        Xvi => motzkin(0, 0, 1, 1),
        Xvii => motzkin(0, 0, 2, 1),
        Xviii => motzkin(0, 0, 1, -1),
        RogersSzego => WeightSystem::generator(Family::RogersSzego, vec![], json!(null)),
        QPowers => WeightSystem::generator(Family::QPowers, vec![], json!(null)),
        QDyck => WeightSystem::generator(Family::QDyck, vec![], json!(null)),
    };
    debug_assert!(ws.mode() == if id == QDyck { Mode::Dyck } else { Mode::Motzkin });
    ws.with_descriptor(json!({"kind": "catalog", "id": id.name()}))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::Weight;

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn catalan_weights() {
        let ws = catalog(CatalogId::Ii);
        assert_eq!(ws.weight_at(0), Weight::Motzkin { s: p("1"), t: p("1") });
        assert_eq!(ws.weight_at(3), Weight::Motzkin { s: p("2"), t: p("1") });
    }

    #[test]
    fn listed_values() {
        let ws = catalog(CatalogId::Xvi);
        for i in 0..5 {
            assert_eq!(ws.weight_at(i), Weight::Motzkin { s: p("0"), t: p("1") });
        }
        let ws = catalog(CatalogId::Xviii);
        assert_eq!(ws.t(0), p("1"));
        assert_eq!(ws.t(4), p("-1"));
        assert_eq!(ws.s(4), p("0"));
        let ws = catalog(CatalogId::Xiii);
        assert_eq!((ws.s(3), ws.t(3)), (p("7"), p("16")));
    }

    #[test]
    fn rogers_szego_weights() {
        let ws = catalog(CatalogId::RogersSzego);
        assert_eq!(ws.s(2), p("q^2*(t + 1)"));
        assert_eq!(ws.t(2), p("q^2*t*(q^3 - 1)"));
        let ws = catalog(CatalogId::QPowers);
        assert_eq!(ws.s(0), p("1"));
        assert_eq!(ws.s(2), p("q*(q^3 + q^2 - 1)"));
        let ws = catalog(CatalogId::QDyck);
        assert_eq!(ws.big_t(0), p("1 - q"));
        assert_eq!(ws.big_t(1), p("q*(1 - q)"));
        assert_eq!(ws.big_t(2), p("q*(1 - q^2)"));
    }

    #[test]
    fn down_weights_never_vanish() {
        for id in CatalogId::all() {
            let ws = catalog(id);
            for i in 0..=50 {
                assert!(!ws.down(i).is_zero(), "{id} has a zero down weight at {i}");
            }
        }
    }

    #[test]
    fn names_round_trip() {
        for id in CatalogId::all() {
            assert_eq!(id.name().parse::<CatalogId>().unwrap(), id);
        }
        assert!(matches!("xix".parse::<CatalogId>(), Err(Error::UnknownCatalog(_))));
    }
}
