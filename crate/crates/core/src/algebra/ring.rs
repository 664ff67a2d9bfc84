use std::fmt::Debug;

use num_traits::{One, Zero};

use super::poly::Poly;
use super::rational::Rational;

/// Coefficient ring for truncated series: a commutative Q-algebra.
///
/// Implemented for [`Rational`] and for [`Poly`] over `V` formal variables.
pub trait Coeff: Clone + PartialEq + Debug + Send + Sync + Zero + One {
    fn from_rational(q: Rational) -> Self;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn scale(&self, q: &Rational) -> Self;
    /// Multiplicative inverse if it exists in the ring.
    fn try_inverse(&self) -> Option<Self>;
}

impl Coeff for Rational {
    fn from_rational(q: Rational) -> Self {
        q
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn scale(&self, q: &Rational) -> Self {
        self * q
    }
    fn try_inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl<const V: usize> Coeff for Poly<V> {
    fn from_rational(q: Rational) -> Self {
        Poly::constant(q)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn scale(&self, q: &Rational) -> Self {
        Poly::scale(self, q)
    }
    /// Only nonzero constants are units.
    fn try_inverse(&self) -> Option<Self> {
        let c = self.as_constant()?;
        Coeff::try_inverse(&c).map(Poly::constant)
    }
}
