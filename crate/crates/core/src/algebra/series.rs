//! Truncated formal power series over a [`Coeff`] ring.
//!
//! A series of order `N` stores the plain coefficients of `t^0..=t^N` (not
//! divided by `k!`); use [`TruncatedSeries::from_egf`] and
//! [`TruncatedSeries::egf_values`] to move between that and the exponential
//! convention `sum a_k t^k / k!`.

use super::rational::{factorial, int, Rational};
use super::ring::Coeff;
use crate::error::SeriesError;

#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<R> {
    order: usize,
    coeffs: Vec<R>,
}

/// Smallest `k` with a nonzero `t^k` coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesOrder {
    Finite(usize),
    /// Every retained coefficient is zero.
    Infinite,
}

impl SeriesOrder {
    pub fn is_invertible(self) -> bool {
        self == SeriesOrder::Finite(0)
    }

    pub fn is_delta(self) -> bool {
        self == SeriesOrder::Finite(1)
    }
}

/// `k!` as a rational.
pub fn factorial_rational(k: usize) -> Rational {
    Rational::from_integer(factorial(k))
}

impl<R: Coeff> TruncatedSeries<R> {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries { order, coeffs: vec![R::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(R::one(), order)
    }

    pub fn constant(c: R, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The formal variable `t`.
    pub fn t(order: usize) -> Self {
        Self::one(order).mul_t_pow(1)
    }

    /// Missing coefficients are zero; extra ones are dropped.
    pub fn from_coeffs(mut coeffs: Vec<R>, order: usize) -> Self {
        coeffs.resize(order + 1, R::zero());
        TruncatedSeries { order, coeffs }
    }

    /// Builds `sum values[k] t^k / k!` truncated at `values.len() - 1`.
    pub fn from_egf(values: Vec<R>) -> Self {
        assert!(!values.is_empty(), "from_egf needs at least one value");
        let order = values.len() - 1;
        let coeffs = values
            .into_iter()
            .enumerate()
            .map(|(k, v)| v.scale(&factorial_rational(k).recip()))
            .collect();
        TruncatedSeries { order, coeffs }
    }

    /// `e^{c t}`.
    pub fn exp_scaled(c: &R, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut power = R::one();
        for k in 0..=order {
            coeffs.push(power.scale(&factorial_rational(k).recip()));
            power = power.mul_ref(c);
        }
        TruncatedSeries { order, coeffs }
    }

    /// `e^t`.
    pub fn exp_t(order: usize) -> Self {
        Self::exp_scaled(&R::one(), order)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn coefficient_of(&self, k: usize) -> Result<&R, SeriesError> {
        self.coeffs
            .get(k)
            .ok_or(SeriesError::OutOfRange { index: k, order: self.order })
    }

    /// `k! [t^k]` for every retained `k`.
    pub fn egf_values(&self) -> Vec<R> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c.scale(&factorial_rational(k)))
            .collect()
    }

    pub fn order_info(&self) -> SeriesOrder {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .map_or(SeriesOrder::Infinite, SeriesOrder::Finite)
    }

    /// Drops coefficients above `t^n`. Never extends the series.
    pub fn truncate(&self, n: usize) -> Self {
        let order = n.min(self.order);
        TruncatedSeries { order, coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn map<S: Coeff>(&self, f: impl Fn(&R) -> S) -> TruncatedSeries<S> {
        TruncatedSeries { order: self.order, coeffs: self.coeffs.iter().map(f).collect() }
    }

    fn require_same_order(&self, other: &Self) -> Result<(), SeriesError> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(SeriesError::OrderMismatch { left: self.order, right: other.order })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.require_same_order(other)?;
        Ok(self.zip_with(other, R::add_ref))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.require_same_order(other)?;
        Ok(self.zip_with(other, R::sub_ref))
    }

    /// Cauchy product; both series must be truncated at the same order.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.require_same_order(other)?;
        Ok(self.cauchy(other))
    }

    /// Sum truncated at the smaller of the two orders.
    pub fn add_truncating(&self, other: &Self) -> Self {
        let n = self.order.min(other.order);
        self.truncate(n).zip_with(&other.truncate(n), R::add_ref)
    }

    /// Product truncated at the smaller of the two orders.
    pub fn mul_truncating(&self, other: &Self) -> Self {
        let n = self.order.min(other.order);
        self.truncate(n).cauchy(&other.truncate(n))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&R, &R) -> R) -> Self {
        TruncatedSeries {
            order: self.order,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(a, b)).collect(),
        }
    }

    fn cauchy(&self, other: &Self) -> Self {
        let n = self.order;
        let mut coeffs = vec![R::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].add_ref(&a.mul_ref(b));
                }
            }
        }
        TruncatedSeries { order: n, coeffs }
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|a| a.mul_ref(c))
    }

    pub fn scale_rational(&self, q: &Rational) -> Self {
        self.map(|a| a.scale(q))
    }

    pub fn neg(&self) -> Self {
        self.map(R::neg_ref)
    }

    /// Multiplication by `t^k`, keeping the truncation order.
    pub fn mul_t_pow(&self, k: usize) -> Self {
        let mut coeffs = vec![R::zero(); self.order + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if i + k <= self.order {
                coeffs[i + k] = c.clone();
            }
        }
        TruncatedSeries { order: self.order, coeffs }
    }

    /// Exact division by `t^k`; the result is truncated at `order - k`.
    pub fn div_t_pow(&self, k: usize) -> Result<Self, SeriesError> {
        if k > self.order || self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(SeriesError::NotDivisible(k));
        }
        Ok(TruncatedSeries { order: self.order - k, coeffs: self.coeffs[k..].to_vec() })
    }

    /// `sum f^k / k!`, via `k g_k = sum_{j=1..k} j f_j g_{k-j}`.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        let n = self.order;
        let mut g: Vec<R> = Vec::with_capacity(n + 1);
        g.push(R::one());
        for k in 1..=n {
            let mut acc = R::zero();
            for j in 1..=k {
                let f = &self.coeffs[j];
                if !f.is_zero() {
                    acc = acc.add_ref(&f.mul_ref(&g[k - j]).scale(&int(j as i64)));
                }
            }
            g.push(acc.scale(&int(k as i64).recip()));
        }
        Ok(TruncatedSeries { order: n, coeffs: g })
    }

    /// Inverse of [`exp`](Self::exp) on series with constant term one.
    pub fn log(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::ConstantTermNotOne);
        }
        let n = self.order;
        let mut f: Vec<R> = vec![R::zero(); n + 1];
        for k in 1..=n {
            let mut acc = R::zero();
            for (j, fj) in f.iter().enumerate().take(k).skip(1) {
                if !fj.is_zero() {
                    acc = acc.add_ref(&fj.mul_ref(&self.coeffs[k - j]).scale(&int(j as i64)));
                }
            }
            f[k] = self.coeffs[k].sub_ref(&acc.scale(&int(k as i64).recip()));
        }
        Ok(TruncatedSeries { order: n, coeffs: f })
    }

    /// Multiplicative inverse; the constant term must be a unit of `R`.
    pub fn inv(&self) -> Result<Self, SeriesError> {
        let b0 = self.coeffs[0].try_inverse().ok_or(SeriesError::NotInvertible)?;
        let n = self.order;
        let mut b: Vec<R> = Vec::with_capacity(n + 1);
        b.push(b0.clone());
        for k in 1..=n {
            let mut acc = R::zero();
            for j in 1..=k {
                let a = &self.coeffs[j];
                if !a.is_zero() {
                    acc = acc.add_ref(&a.mul_ref(&b[k - j]));
                }
            }
            b.push(acc.mul_ref(&b0).neg_ref());
        }
        Ok(TruncatedSeries { order: n, coeffs: b })
    }

    /// Integer power by repeated squaring; negative exponents go through
    /// [`inv`](Self::inv).
    pub fn pow_int(&self, exp: i64) -> Result<Self, SeriesError> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Self::one(self.order);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.cauchy(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.cauchy(&sq);
            }
        }
        Ok(acc)
    }

    /// `exp(a log f)`; needs constant term one.
    pub fn pow_rational(&self, a: &Rational) -> Result<Self, SeriesError> {
        let log = self.log()?;
        log.scale_rational(a).exp()
    }

    /// Integer exponents use [`pow_int`](Self::pow_int) and work for any unit
    /// constant term; other rationals need constant term one.
    pub fn pow(&self, a: &Rational) -> Result<Self, SeriesError> {
        if a.is_integer() {
            if let Ok(e) = i64::try_from(a.numer().clone()) {
                return self.pow_int(e);
            }
        }
        self.pow_rational(a)
    }

    /// `self(inner(t))`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        self.require_same_order(inner)?;
        if !inner.coeffs[0].is_zero() {
            return Err(SeriesError::NotDelta);
        }
        let n = self.order;
        let mut acc = Self::constant(self.coeffs[n].clone(), n);
        for k in (0..n).rev() {
            acc = acc.cauchy(inner);
            acc.coeffs[0] = acc.coeffs[0].add_ref(&self.coeffs[k]);
        }
        Ok(acc)
    }
}

impl TruncatedSeries<Rational> {
    /// Lifts a rational series into another coefficient ring.
    pub fn lift<S: Coeff>(&self) -> TruncatedSeries<S> {
        self.map(|q| S::from_rational(q.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::frac;

    type S = TruncatedSeries<Rational>;

    fn series(c: &[i64], order: usize) -> S {
        S::from_coeffs(c.iter().map(|&v| int(v)).collect(), order)
    }

    #[test]
    fn difference_of_squares() {
        let a = series(&[1, 1], 2);
        let b = series(&[1, -1], 2);
        assert_eq!(a.checked_mul(&b).unwrap(), series(&[1, 0, -1], 2));
    }

    #[test]
    fn one_is_multiplicative_identity() {
        let a = series(&[3, -2, 7, 5], 3);
        assert_eq!(a.checked_mul(&S::one(3)).unwrap(), a);
    }

    #[test]
    fn square_of_exp_is_exp_2t() {
        let e = S::exp_t(4);
        let sq = e.checked_mul(&e).unwrap();
        assert_eq!(sq.coefficient_of(3).unwrap(), &frac(4, 3));
        assert_eq!(sq, S::exp_scaled(&int(2), 4));
    }

    #[test]
    fn order_mismatch_is_an_error() {
        let err = S::one(2).checked_mul(&S::one(3)).unwrap_err();
        assert_eq!(err, SeriesError::OrderMismatch { left: 2, right: 3 });
        assert_eq!(S::one(2).mul_truncating(&S::exp_t(3)), S::exp_t(2));
    }

    #[test]
    fn coefficient_past_truncation_is_an_error() {
        assert!(matches!(
            S::exp_t(3).coefficient_of(4),
            Err(SeriesError::OutOfRange { index: 4, order: 3 })
        ));
    }

    #[test]
    fn exp_basics() {
        assert_eq!(S::zero(5).exp().unwrap(), S::one(5));
        let e = S::t(6).exp().unwrap();
        for k in 0..=6 {
            assert_eq!(e.coefficient_of(k).unwrap(), &factorial_rational(k).recip());
        }
        assert_eq!(S::one(3).exp(), Err(SeriesError::NonzeroConstantTerm));
    }

    #[test]
    fn exp_of_exp_minus_one_gives_bell_numbers() {
        let inner = S::exp_t(4).checked_sub(&S::one(4)).unwrap();
        let bell: Vec<Rational> = inner.exp().unwrap().egf_values();
        assert_eq!(bell, [1, 1, 2, 5, 15].map(int).to_vec());
        let composed = S::exp_t(4).compose(&inner).unwrap();
        assert_eq!(composed.egf_values(), bell);
    }

    #[test]
    fn log_basics() {
        assert_eq!(S::one(4).log().unwrap(), S::zero(4));
        assert_eq!(S::exp_t(7).log().unwrap(), S::t(7));
        let l = series(&[1, 1], 5).log().unwrap();
        assert_eq!(l.coefficient_of(3).unwrap(), &frac(1, 3));
        assert_eq!(S::zero(2).log(), Err(SeriesError::ConstantTermNotOne));
    }

    #[test]
    fn inverse_basics() {
        assert_eq!(S::one(3).inv().unwrap(), S::one(3));
        let g = series(&[1, 1], 6).inv().unwrap();
        assert_eq!(g, series(&[1, -1, 1, -1, 1, -1, 1], 6));
        assert_eq!(S::t(3).inv(), Err(SeriesError::NotInvertible));
    }

    #[test]
    fn powers() {
        let f = S::exp_t(10).checked_add(&S::one(10)).unwrap().scale_rational(&frac(1, 2));
        assert_eq!(f.pow_int(0).unwrap(), S::one(10));
        assert_eq!(f.pow_int(1).unwrap(), f);
        let inv = f.inv().unwrap();
        assert_eq!(f.pow_int(-2).unwrap(), inv.checked_mul(&inv).unwrap());
        assert_eq!(f.pow(&int(-2)).unwrap(), f.pow_rational(&int(-2)).unwrap());
        let half = f.pow(&frac(1, 2)).unwrap();
        assert_eq!(half.checked_mul(&half).unwrap(), f);
        // a unit constant term other than one still works for integer powers
        let g = series(&[2, 1], 4);
        assert_eq!(g.pow_int(-1).unwrap(), g.inv().unwrap());
        assert!(g.pow(&frac(1, 2)).is_err());
    }

    #[test]
    fn composition_identities() {
        let f = series(&[2, -1, 3, 4], 3);
        let t = S::t(3);
        assert_eq!(f.compose(&t).unwrap(), f);
        let g = series(&[0, 1, 5, -2], 3);
        assert_eq!(t.compose(&g).unwrap(), g);
        assert_eq!(f.compose(&S::one(3)), Err(SeriesError::NotDelta));
    }

    #[test]
    fn division_by_t() {
        let e = S::exp_t(5).checked_sub(&S::one(5)).unwrap();
        let q = e.div_t_pow(1).unwrap();
        assert_eq!(q.order(), 4);
        assert_eq!(q.coefficient_of(0).unwrap(), &int(1));
        assert!(S::exp_t(3).div_t_pow(1).is_err());
    }

    #[test]
    fn series_order() {
        assert!(S::exp_t(3).order_info().is_invertible());
        assert!(S::t(3).order_info().is_delta());
        assert_eq!(S::zero(3).order_info(), SeriesOrder::Infinite);
        assert_eq!(S::t(3).mul_t_pow(1).order_info(), SeriesOrder::Finite(2));
    }
}
