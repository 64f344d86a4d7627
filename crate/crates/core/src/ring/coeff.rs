use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{AddAssign, MulAssign, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Coefficient domains for [`Polynomial`](super::Polynomial): the integers and
/// the rationals. Both are exact.
pub trait Coefficient:
    Clone
    + Eq
    + Hash
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Signed
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
    fn from_bigint(n: BigInt) -> Self;
    fn to_rational(&self) -> BigRational;
    /// `None` when the rational has no representative in this domain.
    fn from_rational(r: &BigRational) -> Option<Self>;
    /// `Some(a / b)` when the quotient exists in this domain.
    fn div_exact(&self, b: &Self) -> Option<Self>;

    fn from_i64(n: i64) -> Self {
        Self::from_bigint(BigInt::from(n))
    }
}

impl Coefficient for BigInt {
    fn from_bigint(n: BigInt) -> Self {
        n
    }

    fn to_rational(&self) -> BigRational {
        BigRational::from_integer(self.clone())
    }

    fn from_rational(r: &BigRational) -> Option<Self> {
        r.is_integer().then(|| r.numer().clone())
    }

    fn div_exact(&self, b: &Self) -> Option<Self> {
        if b.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(b);
        r.is_zero().then_some(q)
    }
}

impl Coefficient for BigRational {
    fn from_bigint(n: BigInt) -> Self {
        BigRational::from_integer(n)
    }

    fn to_rational(&self) -> BigRational {
        self.clone()
    }

    fn from_rational(r: &BigRational) -> Option<Self> {
        Some(r.clone())
    }

    fn div_exact(&self, b: &Self) -> Option<Self> {
        (!b.is_zero()).then(|| self / b)
    }
}
