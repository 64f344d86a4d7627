//! Signed sums over vertex-disjoint lattice path families.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::weights::{Mode, WeightSystem, WeightTable};
use crate::{Error, Poly, Result};

/// Largest order accepted by the exhaustive enumerator.
pub const MAX_ORDER: usize = 4;

/// Path graphs whose family sums reproduce root-combination Hankel determinants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LgvModel {
    /// Motzkin steps, one root band on each side of the origin.
    TwoRoot,
    /// Dyck steps, bands of width two, starts at even abscissas.
    DyckEven,
    /// Dyck steps, bands of width two, starts at odd abscissas.
    DyckOdd,
    /// Motzkin steps with three consecutive root bands.
    ThreeRoot,
}

impl LgvModel {
    pub const ALL: [LgvModel; 4] = [LgvModel::TwoRoot, LgvModel::DyckEven, LgvModel::DyckOdd, LgvModel::ThreeRoot];

    pub fn name(self) -> &'static str {
        match self {
            LgvModel::TwoRoot => "two-root",
            LgvModel::DyckEven => "dyck-even",
            LgvModel::DyckOdd => "dyck-odd",
            LgvModel::ThreeRoot => "three-root",
        }
    }

    pub fn mode(self) -> Mode {
        match self {
            LgvModel::DyckEven | LgvModel::DyckOdd => Mode::Dyck,
            _ => Mode::Motzkin,
        }
    }

    pub fn root_count(self) -> usize {
        if self == LgvModel::ThreeRoot {
            3
        } else {
            2
        }
    }

    fn geometry(self, n: usize) -> Geometry {
        let n = n as i64;
        match self {
            LgvModel::TwoRoot => Geometry {
                starts: (0..n).map(|i| -i - 1).collect(),
                ends: (0..n).map(|j| j + 1).collect(),
                bands: vec![-1, 0],
                width: 1,
            },
            LgvModel::ThreeRoot => Geometry {
                starts: (0..n).map(|i| -i - 1).collect(),
                ends: (0..n).map(|j| j + 2).collect(),
                bands: vec![-1, 0, 1],
                width: 1,
            },
            LgvModel::DyckEven => Geometry {
                starts: (0..n).map(|i| -2 * i - 2).collect(),
                ends: (0..n).map(|j| 2 * j + 2).collect(),
                bands: vec![-2, 0],
                width: 2,
            },
            LgvModel::DyckOdd => Geometry {
                starts: (0..n).map(|i| -2 * i - 3).collect(),
                ends: (0..n).map(|j| 2 * j + 3).collect(),
                bands: vec![-2, 0],
                width: 2,
            },
        }
    }
}

impl fmt::Display for LgvModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LgvModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "two-root" | "thm1" => Ok(LgvModel::TwoRoot),
            "dyck-even" | "cor2_even" => Ok(LgvModel::DyckEven),
            "dyck-odd" | "cor2_odd" => Ok(LgvModel::DyckOdd),
            "three-root" | "thm5" => Ok(LgvModel::ThreeRoot),
            _ => Err(Error::Descriptor(format!("unknown path model `{s}`"))),
        }
    }
}

/// Start/end abscissas on the axis plus the left edges of the root bands.
struct Geometry {
    starts: Vec<i64>,
    ends: Vec<i64>,
    bands: Vec<i64>,
    width: i64,
}

/// Fixed-size vertex set; the boxes used here never exceed 256 lattice points.
#[derive(Clone, Copy, Default, PartialEq, Eq)]
struct VertexSet([u64; 4]);

impl VertexSet {
    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn disjoint(&self, other: &VertexSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & b == 0)
    }

    fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
        out
    }
}

struct Path {
    end: usize,
    weight: Poly,
    vertices: VertexSet,
}

struct Enumerator<'a> {
    geo: &'a Geometry,
    w: &'a WeightTable<BigInt>,
    roots: &'a [Poly],
    dyck: bool,
    x_min: i64,
    height: usize,
    out: Vec<Path>,
}

impl Enumerator<'_> {
    fn index(&self, x: i64, y: usize) -> usize {
        (x - self.x_min) as usize * (self.height + 1) + y
    }

    fn walk(&mut self, x: i64, y: usize, weight: Poly, mut seen: VertexSet) {
        seen.insert(self.index(x, y));
        if y == 0 {
            if let Some(j) = self.geo.ends.iter().position(|&e| e == x) {
                self.out.push(Path { end: j, weight: weight.clone(), vertices: seen });
            }
        }
        let x_end = *self.geo.ends.last().unwrap();
        // Every remaining unit of abscissa can lower the height by at most one.
        if x >= x_end || y as i64 > x_end - x {
            return;
        }
        if y < self.height {
            self.walk(x + 1, y + 1, weight.clone(), seen);
        }
        if y > 0 {
            self.walk(x + 1, y - 1, &weight * &self.w.down[y - 1], seen);
        }
        if !self.dyck && !self.w.level[y].is_zero() {
            self.walk(x + 1, y, &weight * &self.w.level[y], seen);
        }
        if let Some(b) = self.geo.bands.iter().position(|&b| b == x) {
            if y as i64 <= x_end - x - self.geo.width {
                self.walk(x + self.geo.width, y, &weight * &self.roots[b], seen);
            }
        }
    }
}

/// Family sum with the roots named `alpha`, `beta` (and `gamma`).
pub fn lgv_expand(ws: &WeightSystem, n: usize, model: LgvModel) -> Result<Poly> {
    let roots: Vec<Poly> = ["alpha", "beta", "gamma"][..model.root_count()].iter().map(|s| Poly::named(s)).collect();
    lgv_expand_with(ws, n, model, &roots)
}

/// Sum over vertex-disjoint families `(P_0, ..., P_{n-1})`, `P_i` running from
/// the `i`-th start to the `σ(i)`-th end, of `sgn(σ) ∏ w(P_i)`.
pub fn lgv_expand_with(ws: &WeightSystem, n: usize, model: LgvModel, roots: &[Poly]) -> Result<Poly> {
    if n > MAX_ORDER {
        return Err(Error::EnumerationBound(format!(
            "path families of order {n} are too many to enumerate; the limit is {MAX_ORDER}"
        )));
    }
    if ws.mode() != model.mode() {
        return Err(Error::ModeMismatch { expected: model.mode(), found: ws.mode() });
    }
    if roots.len() != model.root_count() {
        return Err(Error::Precondition(format!(
            "model {model} takes {} roots, got {}",
            model.root_count(),
            roots.len()
        )));
    }
    if n == 0 {
        return Ok(Poly::one());
    }
    let geo = model.geometry(n);
    let x_min = *geo.starts.last().unwrap();
    let x_max = *geo.ends.last().unwrap();
    let height = ((x_max - x_min) / 2) as usize;
    assert!(((x_max - x_min + 1) as usize) * (height + 1) <= 256);
    let w = ws.table::<BigInt>(height + 1);
    let mut paths: Vec<Vec<Path>> = Vec::with_capacity(n);
    for &a in &geo.starts {
        let mut e = Enumerator { geo: &geo, w: &w, roots, dyck: ws.mode() == Mode::Dyck, x_min, height, out: Vec::new() };
        e.walk(a, 0, Poly::one(), VertexSet::default());
        paths.push(e.out);
    }
    let mut total = Poly::zero();
    let mut sigma = Vec::with_capacity(n);
    families(&paths, 0, &mut sigma, VertexSet::default(), Poly::one(), &mut total);
    Ok(total)
}

fn families(paths: &[Vec<Path>], i: usize, sigma: &mut Vec<usize>, used: VertexSet, weight: Poly, total: &mut Poly) {
    if i == paths.len() {
        let inversions = (0..sigma.len())
            .flat_map(|a| (a + 1..sigma.len()).map(move |b| (a, b)))
            .filter(|&(a, b)| sigma[a] > sigma[b])
            .count();
        if inversions % 2 == 0 {
            *total += weight;
        } else {
            *total -= weight;
        }
        return;
    }
    for p in &paths[i] {
        if sigma.contains(&p.end) || !p.vertices.disjoint(&used) {
            continue;
        }
        sigma.push(p.end);
        families(paths, i + 1, sigma, used.union(&p.vertices), &weight * &p.weight, total);
        sigma.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hankel::{hankel_det, HankelSpec};
    use crate::moments::moments;
    use crate::weights::{catalog, CatalogId};

    fn det_for(ws: &WeightSystem, n: usize, model: LgvModel) -> Poly {
        let names = ["alpha", "beta", "gamma"];
        let roots: Vec<Poly> = names[..model.root_count()].iter().map(|s| Poly::named(s)).collect();
        let shift = usize::from(model == LgvModel::DyckOdd);
        let spec = HankelSpec::new(shift, roots);
        let seq = moments(ws, spec.required_len(n) - 1);
        hankel_det(&seq, &spec, n).unwrap()
    }

    #[test]
    fn single_path_entry() {
        let sym = WeightSystem::symbolic(Mode::Motzkin);
        let m = moments(&sym, 2);
        let expect: Poly = "alpha*beta".parse::<Poly>().unwrap() * &m[0]
            + "alpha + beta".parse::<Poly>().unwrap() * &m[1]
            + &m[2];
        assert_eq!(lgv_expand(&sym, 1, LgvModel::TwoRoot).unwrap(), expect);
    }

    #[test]
    fn matches_determinants() {
        let motzkin = [catalog(CatalogId::I), catalog(CatalogId::Ii), WeightSystem::symbolic(Mode::Motzkin)];
        for ws in &motzkin {
            for model in [LgvModel::TwoRoot, LgvModel::ThreeRoot] {
                for n in 1..=2 {
                    assert_eq!(lgv_expand(ws, n, model).unwrap(), det_for(ws, n, model), "{model} n={n}");
                }
            }
        }
        let dyck = WeightSystem::constant_dyck(Poly::one());
        for model in [LgvModel::DyckEven, LgvModel::DyckOdd] {
            for n in 1..=3 {
                assert_eq!(lgv_expand(&dyck, n, model).unwrap(), det_for(&dyck, n, model), "{model} n={n}");
            }
        }
    }

    #[test]
    fn transposition_sign_at_order_two() {
        // All weights one, roots zero: det [[m2, m3], [m3, m4]] of Motzkin numbers.
        let ws = catalog(CatalogId::I);
        let zero = [Poly::zero(), Poly::zero()];
        assert_eq!(lgv_expand_with(&ws, 2, LgvModel::TwoRoot, &zero).unwrap(), Poly::from(2 * 9 - 4 * 4));
    }

    #[test]
    fn refuses_large_orders() {
        let ws = catalog(CatalogId::I);
        assert!(matches!(lgv_expand(&ws, 5, LgvModel::TwoRoot), Err(Error::EnumerationBound(_))));
        let dyck = WeightSystem::constant_dyck(Poly::one());
        assert!(matches!(lgv_expand(&dyck, 1, LgvModel::TwoRoot), Err(Error::ModeMismatch { .. })));
    }
}
