//! Bell, Euler, Stirling and Bell-based Euler families.
//!
//! Every generator expands its exponential generating function with the
//! series engine and reads off `n! [t^n]`. The [`recurrence`] submodule
//! computes the same families by explicit recurrences and finite sums, with
//! no series arithmetic, so the two can be checked against each other.
//!
//! The order `alpha` is an exact rational. Integer orders (any sign) go
//! through integer powers of `(e^t + 1)/2`; other rationals go through
//! `exp(alpha log((e^t + 1)/2))`, which is exact because that series has
//! constant term one.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{
    binomial, factorial, int, BivariatePoly, Coeff, Rational, TruncatedSeries, X, Y,
};
use crate::error::{ParseError, SequenceError, SeriesError};

type Series = TruncatedSeries<Rational>;
type PolySeries = TruncatedSeries<BivariatePoly>;

/// `e^t - 1` truncated at `order`.
fn exp_minus_one<R: Coeff>(order: usize) -> TruncatedSeries<R> {
    let mut coeffs = TruncatedSeries::<R>::exp_t(order).into_coeffs();
    coeffs[0] = R::zero();
    TruncatedSeries::from_coeffs(coeffs, order)
}

/// `(2 / (e^t + 1))^alpha`.
pub fn euler_prefactor(alpha: &Rational, order: usize) -> Result<Series, SeriesError> {
    let half_sum = Series::exp_t(order)
        .checked_add(&Series::one(order))?
        .scale_rational(&Rational::new(BigInt::one(), BigInt::from(2)));
    half_sum.pow(&-alpha)
}

/// `e^{x t + y (e^t - 1)}` over the bivariate polynomial ring.
pub fn bivariate_bell_series(order: usize) -> Result<PolySeries, SeriesError> {
    let xt = PolySeries::t(order).scale(&BivariatePoly::x());
    let y_part = exp_minus_one::<BivariatePoly>(order).scale(&BivariatePoly::y());
    xt.checked_add(&y_part)?.exp()
}

/// `(2/(e^t+1))^alpha e^{x t + y (e^t - 1)}`.
pub fn bell_euler_series(alpha: &Rational, order: usize) -> Result<PolySeries, SeriesError> {
    euler_prefactor(alpha, order)?
        .lift::<BivariatePoly>()
        .checked_mul(&bivariate_bell_series(order)?)
}

pub fn bivariate_bell_table(n_max: usize) -> Result<Vec<BivariatePoly>, SeriesError> {
    Ok(bivariate_bell_series(n_max)?.egf_values())
}

/// `B_n(x; y)`.
pub fn bivariate_bell(n: usize) -> Result<BivariatePoly, SeriesError> {
    Ok(last(bivariate_bell_table(n)?))
}

pub fn bell_poly_table(n_max: usize) -> Result<Vec<BivariatePoly>, SeriesError> {
    let y_part = exp_minus_one::<BivariatePoly>(n_max).scale(&BivariatePoly::y());
    Ok(y_part.exp()?.egf_values())
}

/// Classical Bell polynomial `B_n(y)`.
pub fn bell_poly(n: usize) -> Result<BivariatePoly, SeriesError> {
    Ok(last(bell_poly_table(n)?))
}

pub fn bell_number_table(n_max: usize) -> Result<Vec<Rational>, SeriesError> {
    Ok(exp_minus_one::<Rational>(n_max).exp()?.egf_values())
}

pub fn bell_number(n: usize) -> Result<Rational, SeriesError> {
    Ok(last(bell_number_table(n)?))
}

/// `E_0^{(alpha)}(x), ..., E_{n_max}^{(alpha)}(x)`.
pub fn euler_poly_table(n_max: usize, alpha: &Rational) -> Result<Vec<BivariatePoly>, SeriesError> {
    let ext = PolySeries::exp_scaled(&BivariatePoly::x(), n_max);
    Ok(euler_prefactor(alpha, n_max)?
        .lift::<BivariatePoly>()
        .checked_mul(&ext)?
        .egf_values())
}

/// Euler polynomial of order `alpha`, univariate in `x`.
pub fn euler_poly_order(n: usize, alpha: &Rational) -> Result<BivariatePoly, SeriesError> {
    Ok(last(euler_poly_table(n, alpha)?))
}

pub fn euler_number_table(n_max: usize, alpha: &Rational) -> Result<Vec<Rational>, SeriesError> {
    Ok(euler_prefactor(alpha, n_max)?.egf_values())
}

/// `E_n^{(alpha)} = E_n^{(alpha)}(0)`.
pub fn euler_number_order(n: usize, alpha: &Rational) -> Result<Rational, SeriesError> {
    Ok(last(euler_number_table(n, alpha)?))
}

/// `S_2(n, k; x)`: `n! [t^n] ((e^t - 1)^k / k!) e^{x t}`.
pub fn stirling2_poly(n: usize, k: usize) -> Result<BivariatePoly, SeriesError> {
    let blocks = exp_minus_one::<Rational>(n)
        .pow_int(k as i64)?
        .scale_rational(&Rational::from_integer(factorial(k)).recip());
    let ext = PolySeries::exp_scaled(&BivariatePoly::x(), n);
    Ok(last(blocks.lift::<BivariatePoly>().checked_mul(&ext)?.egf_values()))
}

pub fn stirling2_number(n: usize, k: usize) -> Result<Rational, SeriesError> {
    let blocks = exp_minus_one::<Rational>(n)
        .pow_int(k as i64)?
        .scale_rational(&Rational::from_integer(factorial(k)).recip());
    Ok(last(blocks.egf_values()))
}

pub fn bell_euler_table(n_max: usize, alpha: &Rational) -> Result<Vec<BivariatePoly>, SeriesError> {
    Ok(bell_euler_series(alpha, n_max)?.egf_values())
}

/// Bell-based Euler polynomial of order `alpha` in `x` and `y`.
pub fn bell_euler_poly(n: usize, alpha: &Rational) -> Result<BivariatePoly, SeriesError> {
    Ok(last(bell_euler_table(n, alpha)?))
}

/// The `x = 0` family: `(2/(e^t+1))^alpha e^{y (e^t - 1)}`.
pub fn bell_euler_y_table(n_max: usize, alpha: &Rational) -> Result<Vec<BivariatePoly>, SeriesError> {
    let y_part = exp_minus_one::<BivariatePoly>(n_max).scale(&BivariatePoly::y()).exp()?;
    Ok(euler_prefactor(alpha, n_max)?
        .lift::<BivariatePoly>()
        .checked_mul(&y_part)?
        .egf_values())
}

pub fn bell_euler_y(n: usize, alpha: &Rational) -> Result<BivariatePoly, SeriesError> {
    Ok(last(bell_euler_y_table(n, alpha)?))
}

pub fn bell_euler_number_table(n_max: usize, alpha: &Rational) -> Result<Vec<Rational>, SeriesError> {
    Ok(euler_prefactor(alpha, n_max)?
        .checked_mul(&exp_minus_one::<Rational>(n_max).exp()?)?
        .egf_values())
}

/// `x = 0, y = 1` value of the Bell-based Euler polynomial.
pub fn bell_euler_number(n: usize, alpha: &Rational) -> Result<Rational, SeriesError> {
    Ok(last(bell_euler_number_table(n, alpha)?))
}

/// `(x)_k = x (x - 1) ... (x - k + 1)`.
pub fn falling_factorial(k: usize) -> BivariatePoly {
    (0..k).fold(BivariatePoly::one(), |acc, i| {
        acc * (BivariatePoly::x() - BivariatePoly::constant(int(i as i64)))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecialCase {
    /// `x = 0`: the Bell-based Euler polynomial in `y` alone.
    XZero,
    /// `y = 0`: the Euler polynomial of order alpha.
    YZero,
    /// `y = 0`, `alpha = 1`: the classical Euler polynomial.
    YZeroAlphaOne,
}

/// Specialises the Bell-based Euler polynomial by substitution.
pub fn special_case(n: usize, alpha: &Rational, which: SpecialCase) -> Result<BivariatePoly, SeriesError> {
    let zero = Rational::zero();
    Ok(match which {
        SpecialCase::XZero => bell_euler_poly(n, alpha)?.eval(X, &zero),
        SpecialCase::YZero => bell_euler_poly(n, alpha)?.eval(Y, &zero),
        SpecialCase::YZeroAlphaOne => bell_euler_poly(n, &Rational::one())?.eval(Y, &zero),
    })
}

fn last<T>(mut v: Vec<T>) -> T {
    v.pop().expect("tables are never empty")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    BellNumber,
    BellPoly,
    BivariateBell,
    EulerNumber,
    EulerPoly,
    Stirling2Number,
    Stirling2Poly,
    BellEulerPoly,
    BellEulerNumber,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::BellNumber,
        Family::BellPoly,
        Family::BivariateBell,
        Family::EulerNumber,
        Family::EulerPoly,
        Family::Stirling2Number,
        Family::Stirling2Poly,
        Family::BellEulerPoly,
        Family::BellEulerNumber,
    ];

    /// Command-line name.
    pub fn name(self) -> &'static str {
        match self {
            Family::BellNumber => "bell-number",
            Family::BellPoly => "bell-poly",
            Family::BivariateBell => "bivariate-bell",
            Family::EulerNumber => "euler-number",
            Family::EulerPoly => "euler",
            Family::Stirling2Number => "stirling2",
            Family::Stirling2Poly => "stirling2-poly",
            Family::BellEulerPoly => "bell-euler",
            Family::BellEulerNumber => "bell-euler-number",
        }
    }

    pub fn takes_alpha(self) -> bool {
        matches!(
            self,
            Family::EulerNumber | Family::EulerPoly | Family::BellEulerPoly | Family::BellEulerNumber
        )
    }

    pub fn takes_k(self) -> bool {
        matches!(self, Family::Stirling2Number | Family::Stirling2Poly)
    }

    /// Families whose values are plain numbers.
    pub fn is_number(self) -> bool {
        matches!(
            self,
            Family::BellNumber | Family::EulerNumber | Family::Stirling2Number | Family::BellEulerNumber
        )
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.trim().to_ascii_lowercase().replace('_', "-");
        let alias = match norm.as_str() {
            "euler-poly" | "euler-poly-order" => "euler",
            "euler-number-order" => "euler-number",
            "stirling2-number" => "stirling2",
            "bell-euler-poly" => "bell-euler",
            other => other,
        };
        Family::ALL
            .into_iter()
            .find(|f| f.name() == alias)
            .ok_or_else(|| ParseError::Family(s.to_string()))
    }
}

/// A fully specified member of one family.
#[derive(Clone, Debug, PartialEq)]
pub struct FamilySpec {
    family: Family,
    alpha: Option<Rational>,
    k: Option<usize>,
    n: usize,
}

impl FamilySpec {
    pub fn new(family: Family, n: usize, alpha: Option<Rational>, k: Option<usize>) -> Result<Self, SequenceError> {
        match (family.takes_alpha(), &alpha) {
            (true, None) => return Err(SequenceError::MissingAlpha(family.name())),
            (false, Some(_)) => return Err(SequenceError::UnexpectedAlpha(family.name())),
            _ => {}
        }
        if family.takes_k() && k.is_none() {
            return Err(SequenceError::MissingK(family.name()));
        }
        Ok(FamilySpec { family, alpha, k, n })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> Option<&Rational> {
        self.alpha.as_ref()
    }

    pub fn k(&self) -> Option<usize> {
        self.k
    }
}

/// A family member; number families are constant polynomials.
#[derive(Clone, Debug, PartialEq)]
pub struct SequenceValue {
    pub value: BivariatePoly,
}

impl SequenceValue {
    pub fn as_number(&self) -> Option<Rational> {
        self.value.as_constant()
    }
}

impl From<BivariatePoly> for SequenceValue {
    fn from(value: BivariatePoly) -> Self {
        SequenceValue { value }
    }
}

impl From<Rational> for SequenceValue {
    fn from(q: Rational) -> Self {
        SequenceValue { value: BivariatePoly::constant(q) }
    }
}

pub fn compute(spec: &FamilySpec) -> Result<SequenceValue, SequenceError> {
    let n = spec.n;
    let alpha = || spec.alpha.clone().expect("validated in FamilySpec::new");
    let k = || spec.k.expect("validated in FamilySpec::new");
    Ok(match spec.family {
        Family::BellNumber => bell_number(n)?.into(),
        Family::BellPoly => bell_poly(n)?.into(),
        Family::BivariateBell => bivariate_bell(n)?.into(),
        Family::EulerNumber => euler_number_order(n, &alpha())?.into(),
        Family::EulerPoly => euler_poly_order(n, &alpha())?.into(),
        Family::Stirling2Number => stirling2_number(n, k())?.into(),
        Family::Stirling2Poly => stirling2_poly(n, k())?.into(),
        Family::BellEulerPoly => bell_euler_poly(n, &alpha())?.into(),
        Family::BellEulerNumber => bell_euler_number(n, &alpha())?.into(),
    })
}

/// Rows `n = 0..=n_max` of one family, computed from a single expansion
/// where the family allows it.
pub fn compute_table(
    family: Family,
    n_max: usize,
    alpha: Option<Rational>,
    k: Option<usize>,
) -> Result<Vec<SequenceValue>, SequenceError> {
    let spec = FamilySpec::new(family, n_max, alpha, k)?;
    let alpha = || spec.alpha.clone().expect("validated");
    let polys = |v: Vec<BivariatePoly>| v.into_iter().map(SequenceValue::from).collect();
    let nums = |v: Vec<Rational>| v.into_iter().map(SequenceValue::from).collect();
    Ok(match family {
        Family::BellNumber => nums(bell_number_table(n_max)?),
        Family::BellPoly => polys(bell_poly_table(n_max)?),
        Family::BivariateBell => polys(bivariate_bell_table(n_max)?),
        Family::EulerNumber => nums(euler_number_table(n_max, &alpha())?),
        Family::EulerPoly => polys(euler_poly_table(n_max, &alpha())?),
        Family::BellEulerPoly => polys(bell_euler_table(n_max, &alpha())?),
        Family::BellEulerNumber => nums(bell_euler_number_table(n_max, &alpha())?),
        Family::Stirling2Number | Family::Stirling2Poly => (0..=n_max)
            .map(|n| compute(&FamilySpec::new(family, n, None, spec.k)?))
            .collect::<Result<_, _>>()?,
    })
}

/// Row `S_2(n, 0), ..., S_2(n, width)`.
pub fn stirling2_row(n: usize, width: usize) -> Result<Vec<Rational>, SeriesError> {
    (0..=width).map(|k| stirling2_number(n, k)).collect()
}

/// The same families computed by recurrences and finite sums only.
pub mod recurrence {
    use super::*;

    fn big(q: &BigInt) -> Rational {
        Rational::from_integer(q.clone())
    }

    fn binom(n: usize, k: usize) -> Rational {
        Rational::from_integer(binomial(n, k))
    }

    /// Bell numbers `B_0..=B_{n_max}` from the Bell triangle: each row starts
    /// with the last entry of the previous row, and each entry adds its left
    /// neighbour to the entry above that neighbour.
    pub fn bell_triangle(n_max: usize) -> Vec<BigInt> {
        let mut out = vec![BigInt::one()];
        let mut row = vec![BigInt::one()];
        for _ in 0..n_max {
            let mut next = vec![row.last().expect("nonempty").clone()];
            for v in &row {
                let left = next.last().expect("nonempty").clone();
                next.push(left + v);
            }
            out.push(next[0].clone());
            row = next;
        }
        out
    }

    /// `S_2(n, k)` for `0 <= k <= n <= n_max` using
    /// `S_2(n+1, k) = k S_2(n, k) + S_2(n, k-1)`.
    pub fn stirling2_triangle(n_max: usize) -> Vec<Vec<BigInt>> {
        let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
        for n in 0..n_max {
            let prev = &rows[n];
            let next = (0..=n + 1)
                .map(|k| {
                    let stay = if k <= n { prev[k].clone() * BigInt::from(k) } else { BigInt::zero() };
                    let new_block = if k >= 1 { prev[k - 1].clone() } else { BigInt::zero() };
                    stay + new_block
                })
                .collect();
            rows.push(next);
        }
        rows
    }

    /// `B_n(y) = sum_k S_2(n, k) y^k`.
    pub fn bell_poly_table(n_max: usize) -> Vec<BivariatePoly> {
        stirling2_triangle(n_max)
            .iter()
            .map(|row| {
                BivariatePoly::from_terms(
                    row.iter().enumerate().map(|(k, s)| ([0, k as u32], big(s))),
                )
            })
            .collect()
    }

    /// `B_n(x; y) = sum_k C(n, k) x^k B_{n-k}(y)`.
    pub fn bivariate_bell_table(n_max: usize) -> Vec<BivariatePoly> {
        let bell = bell_poly_table(n_max);
        (0..=n_max)
            .map(|n| {
                (0..=n)
                    .map(|k| {
                        (&bell[n - k] * &BivariatePoly::x().pow(k as u32)).scale(&binom(n, k))
                    })
                    .sum()
            })
            .collect()
    }

    /// Classical Euler polynomials from `E_n(x+1) + E_n(x) = 2 x^n`, i.e.
    /// `E_n(x) = x^n - (1/2) sum_{k<n} C(n, k) E_k(x)`.
    pub fn euler_order_one(n_max: usize) -> Vec<BivariatePoly> {
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        let mut out: Vec<BivariatePoly> = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            let lower: BivariatePoly = (0..n).map(|k| out[k].scale(&binom(n, k))).sum();
            out.push(BivariatePoly::x().pow(n as u32) - lower.scale(&half));
        }
        out
    }

    /// Euler polynomials of integer order.
    ///
    /// Positive orders convolve with order-one Euler numbers
    /// (`E^{(a)}_n(x) = sum_k C(n,k) E^{(a-1)}_k(x) E_{n-k}`), negative
    /// orders expand `((e^t + 1)/2)^m e^{x t}` as
    /// `2^{-m} sum_j C(m, j) (x + j)^n`.
    pub fn euler_integer_order(n_max: usize, alpha: i64) -> Vec<BivariatePoly> {
        let monomials: Vec<BivariatePoly> =
            (0..=n_max).map(|n| BivariatePoly::x().pow(n as u32)).collect();
        if alpha < 0 {
            let m = alpha.unsigned_abs() as usize;
            let scale = Rational::new(BigInt::one(), BigInt::from(2).pow(m as u32));
            return (0..=n_max)
                .map(|n| {
                    (0..=m)
                        .map(|j| {
                            (BivariatePoly::x() + BivariatePoly::constant(int(j as i64)))
                                .pow(n as u32)
                                .scale(&binom(m, j))
                        })
                        .sum::<BivariatePoly>()
                        .scale(&scale)
                })
                .collect();
        }
        let numbers: Vec<Rational> = euler_order_one(n_max)
            .iter()
            .map(|p| p.constant_term())
            .collect();
        let mut current = monomials;
        for _ in 0..alpha {
            current = (0..=n_max)
                .map(|n| {
                    (0..=n)
                        .map(|k| current[k].scale(&(binom(n, k) * &numbers[n - k])))
                        .sum()
                })
                .collect();
        }
        current
    }

    /// `sum_k C(n,k) E_k^{(alpha)}(x) B_{n-k}(y)` from the recurrences above.
    pub fn bell_euler_by_convolution(n_max: usize, alpha: i64) -> Vec<BivariatePoly> {
        let euler = euler_integer_order(n_max, alpha);
        let bell = bell_poly_table(n_max);
        (0..=n_max)
            .map(|n| {
                (0..=n)
                    .map(|k| (&euler[k] * &bell[n - k]).scale(&binom(n, k)))
                    .sum()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{frac, XY};

    fn p(s: &str) -> BivariatePoly {
        BivariatePoly::parse(s, &XY).unwrap()
    }

    #[test]
    fn bivariate_bell_low_orders() {
        assert_eq!(bivariate_bell(0).unwrap(), p("1"));
        assert_eq!(bivariate_bell(1).unwrap(), p("x + y"));
        assert_eq!(bivariate_bell(2).unwrap(), p("x^2 + 2*x*y + y^2 + y"));
    }

    #[test]
    fn bell_numbers_and_polynomials() {
        assert_eq!(bell_number(0).unwrap(), int(1));
        assert_eq!(bell_number(5).unwrap(), int(52));
        assert_eq!(bell_poly(3).unwrap(), p("y^3 + 3*y^2 + y"));
    }

    #[test]
    fn euler_polynomials() {
        for a in [-2, 0, 1, 3] {
            assert_eq!(euler_poly_order(0, &int(a)).unwrap(), p("1"));
        }
        assert_eq!(euler_poly_order(1, &int(1)).unwrap(), p("x - 1/2"));
        assert_eq!(euler_poly_order(2, &int(1)).unwrap(), p("x^2 - x"));
        assert_eq!(euler_number_order(0, &int(2)).unwrap(), int(1));
        for n in 1..6 {
            assert_eq!(euler_number_order(n, &int(0)).unwrap(), int(0));
        }
        assert_eq!(euler_number_order(2, &int(1)).unwrap(), int(0));
    }

    #[test]
    fn stirling_numbers() {
        for n in 0..8 {
            assert_eq!(stirling2_number(n, n).unwrap(), int(1));
        }
        assert_eq!(stirling2_number(3, 2).unwrap(), int(3));
        assert_eq!(stirling2_number(4, 2).unwrap(), int(7));
        assert_eq!(stirling2_number(2, 5).unwrap(), int(0));
        assert_eq!(stirling2_poly(3, 2).unwrap().eval(X, &int(0)).as_constant(), Some(int(3)));
    }

    #[test]
    fn bell_euler_low_orders() {
        assert_eq!(bell_euler_poly(1, &int(1)).unwrap(), p("x + y - 1/2"));
        assert_eq!(bell_euler_poly(2, &int(1)).unwrap(), p("x^2 + 2*x*y + y^2 - x"));
        for n in 0..6 {
            assert_eq!(bell_euler_poly(n, &int(0)).unwrap(), bivariate_bell(n).unwrap());
        }
    }

    #[test]
    fn falling_factorials() {
        assert_eq!(falling_factorial(0), p("1"));
        assert_eq!(falling_factorial(2), p("x^2 - x"));
        assert_eq!(falling_factorial(2).eval(X, &int(3)).as_constant(), Some(int(6)));
    }

    #[test]
    fn special_cases() {
        assert_eq!(special_case(2, &int(1), SpecialCase::YZero).unwrap(), p("x^2 - x"));
        assert_eq!(special_case(2, &int(0), SpecialCase::XZero).unwrap(), p("y^2 + y"));
        assert_eq!(special_case(0, &int(5), SpecialCase::YZeroAlphaOne).unwrap(), p("1"));
        for n in 0..7 {
            for a in [-1, 0, 2] {
                let a = int(a);
                assert_eq!(special_case(n, &a, SpecialCase::XZero).unwrap(), bell_euler_y(n, &a).unwrap());
                assert_eq!(special_case(n, &a, SpecialCase::YZero).unwrap(), euler_poly_order(n, &a).unwrap());
            }
            assert_eq!(
                special_case(n, &int(7), SpecialCase::YZeroAlphaOne).unwrap(),
                euler_poly_order(n, &int(1)).unwrap()
            );
        }
    }

    #[test]
    fn rational_order_halves_compose() {
        // E^{(1/2)} convolved with itself is E^{(1)}
        let half = euler_number_table(8, &frac(1, 2)).unwrap();
        let one = euler_number_table(8, &int(1)).unwrap();
        for n in 0..=8 {
            let conv: Rational = (0..=n)
                .map(|k| Rational::from_integer(binomial(n, k)) * &half[k] * &half[n - k])
                .sum();
            assert_eq!(conv, one[n]);
        }
    }

    #[test]
    fn family_spec_validation() {
        assert_eq!(
            FamilySpec::new(Family::BellEulerPoly, 2, None, None),
            Err(SequenceError::MissingAlpha("bell-euler"))
        );
        assert!(FamilySpec::new(Family::BellNumber, 2, Some(int(1)), None).is_err());
        assert!(FamilySpec::new(Family::Stirling2Number, 2, None, None).is_err());
        assert_eq!("bell_euler".parse::<Family>().unwrap(), Family::BellEulerPoly);
        assert!("bernoulli".parse::<Family>().is_err());
        let v = compute(&FamilySpec::new(Family::BellNumber, 5, None, None).unwrap()).unwrap();
        assert_eq!(v.as_number(), Some(int(52)));
    }

    #[test]
    fn recurrence_paths_agree_with_series() {
        assert_eq!(
            recurrence::bell_triangle(6),
            [1, 1, 2, 5, 15, 52, 203].map(BigInt::from).to_vec()
        );
        assert_eq!(recurrence::bivariate_bell_table(8), bivariate_bell_table(8).unwrap());
        assert_eq!(recurrence::euler_order_one(8), euler_poly_table(8, &int(1)).unwrap());
        for a in -3..=4 {
            assert_eq!(
                recurrence::euler_integer_order(7, a),
                euler_poly_table(7, &int(a)).unwrap(),
                "alpha = {a}"
            );
        }
    }
}
