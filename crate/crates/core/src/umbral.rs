//! Umbral calculus for the Bell-based Euler family.
//!
//! A formal power series `g(t) = sum c_k t^k / k!` acts on polynomials in two
//! ways: as a linear functional, `<g | x^n> = c_n`, and as an operator, with
//! `t^k` acting as the k-th derivative in `x`. The Bell-based Euler
//! polynomials of order `mu` form the Appell sequence for
//!
//! ```text
//! h(t) = ((e^t + 1)/2)^mu e^{-y (e^t - 1)}
//! ```
//!
//! so they equal `(1/h(t)) x^n` and satisfy `<h(t) t^k | BE_n> = n! delta_{n,k}`.
//!
//! Functionals and operators carry `y` as a formal parameter: their series
//! have coefficients in `Q[y]`, stored as [`BivariatePoly`] values free of `x`.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::algebra::series::factorial_rational;
use crate::algebra::{frac, int, multinomial, BivariatePoly, Rational, TruncatedSeries, X, XY, Y};
use crate::error::{SeriesError, UmbralError};
use crate::identities::{compare_xy, failed_setup, run_grid, Grid, IdentityId, IdentityReport};
use crate::sequences as seq;

pub type PolySeries = TruncatedSeries<BivariatePoly>;

fn require_x_free(s: &PolySeries) -> Result<(), UmbralError> {
    if s.coeffs().iter().any(|c| c.degree_in(X) > 0) {
        Err(UmbralError::NotXFree)
    } else {
        Ok(())
    }
}

/// An element of the dual of `Q[y][x]`, represented by its series.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearFunctional {
    repr: PolySeries,
}

impl LinearFunctional {
    /// The series coefficients may involve `y` but not `x`.
    pub fn new(repr: PolySeries) -> Result<Self, UmbralError> {
        require_x_free(&repr)?;
        Ok(LinearFunctional { repr })
    }

    pub fn from_rational(series: &TruncatedSeries<Rational>) -> Self {
        LinearFunctional { repr: series.lift() }
    }

    pub fn series(&self) -> &PolySeries {
        &self.repr
    }

    /// `<self | q>`, treating `q` as a polynomial in `x` over `Q[y]`.
    pub fn pair(&self, q: &BivariatePoly) -> Result<BivariatePoly, UmbralError> {
        pair(self, q)
    }
}

/// `sum_n q_n(y) n! [t^n] f` where `q = sum_n q_n(y) x^n`.
pub fn pair(f: &LinearFunctional, q: &BivariatePoly) -> Result<BivariatePoly, UmbralError> {
    let degree = q.degree_in(X) as usize;
    let order = f.repr.order();
    if !q.is_zero() && degree > order {
        return Err(UmbralError::TruncationTooSmall { degree, order });
    }
    Ok(q.coefficients_in(X)
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(n, c)| (c * &f.repr.coeffs()[n]).scale(&factorial_rational(n)))
        .sum())
}

/// `g(t) q(x) = sum_k g_k d^k q / dx^k`.
pub fn apply_operator(g: &PolySeries, q: &BivariatePoly) -> Result<BivariatePoly, UmbralError> {
    require_x_free(g)?;
    let degree = q.degree_in(X) as usize;
    let order = g.order();
    if !q.is_zero() && degree > order {
        return Err(UmbralError::TruncationTooSmall { degree, order });
    }
    let mut derivative = q.clone();
    let mut out = BivariatePoly::zero();
    for coeff in g.coeffs().iter().take(degree + 1) {
        if !coeff.is_zero() {
            out = out + coeff * &derivative;
        }
        derivative = derivative.derivative(X);
    }
    Ok(out)
}

/// The parameter `y`: carried formally, or fixed to a rational value.
#[derive(Clone, Debug, PartialEq, Default)]
pub enum YParam {
    #[default]
    Formal,
    Value(Rational),
}

impl YParam {
    fn poly(&self) -> BivariatePoly {
        match self {
            YParam::Formal => BivariatePoly::y(),
            YParam::Value(v) => BivariatePoly::constant(v.clone()),
        }
    }

    /// Applies the parameter to a polynomial in `x` and `y`.
    pub fn specialise(&self, p: BivariatePoly) -> BivariatePoly {
        match self {
            YParam::Formal => p,
            YParam::Value(v) => p.eval(Y, v),
        }
    }
}

fn exp_minus_one(order: usize) -> TruncatedSeries<Rational> {
    let mut c = TruncatedSeries::<Rational>::exp_t(order).into_coeffs();
    c[0] = Rational::zero();
    TruncatedSeries::from_coeffs(c, order)
}

/// `((e^t + 1)/2)^mu`.
fn half_sum_power(mu: i64, order: usize) -> Result<TruncatedSeries<Rational>, SeriesError> {
    TruncatedSeries::<Rational>::exp_t(order)
        .checked_add(&TruncatedSeries::one(order))?
        .scale_rational(&frac(1, 2))
        .pow_int(mu)
}

/// The invertible series of the Appell pair, and its inverse.
#[derive(Clone, Debug, PartialEq)]
pub struct AppellContext {
    mu: i64,
    y: YParam,
    h: PolySeries,
    h_inverse: PolySeries,
}

impl AppellContext {
    pub fn new(mu: i64, y: YParam, order: usize) -> Result<Self, UmbralError> {
        let y_exp = exp_minus_one(order).lift::<BivariatePoly>().scale(&y.poly());
        let h = half_sum_power(mu, order)?
            .lift::<BivariatePoly>()
            .checked_mul(&y_exp.neg().exp()?)?;
        let h_inverse = half_sum_power(-mu, order)?
            .lift::<BivariatePoly>()
            .checked_mul(&y_exp.exp()?)?;
        Ok(AppellContext { mu, y, h, h_inverse })
    }

    /// Context sized for polynomials of degree `<= degree`.
    pub fn for_degree(mu: i64, y: YParam, degree: usize) -> Result<Self, UmbralError> {
        Self::new(mu, y, degree + 1)
    }

    pub fn mu(&self) -> i64 {
        self.mu
    }

    pub fn y(&self) -> &YParam {
        &self.y
    }

    pub fn order(&self) -> usize {
        self.h.order()
    }

    pub fn h(&self) -> &PolySeries {
        &self.h
    }

    pub fn h_inverse(&self) -> &PolySeries {
        &self.h_inverse
    }

    /// `<h(t) t^k | .>`.
    pub fn dual_functional(&self, k: usize) -> LinearFunctional {
        LinearFunctional { repr: self.h.mul_t_pow(k) }
    }

    /// `BE_0^{(mu)}..=BE_{n_max}^{(mu)}` from the generating function, with
    /// `y` specialised.
    pub fn family(&self, n_max: usize) -> Result<Vec<BivariatePoly>, UmbralError> {
        Ok(seq::bell_euler_table(n_max, &int(self.mu))?
            .into_iter()
            .map(|p| self.y.specialise(p))
            .collect())
    }

    fn require_order(&self, degree: usize) -> Result<(), UmbralError> {
        if degree > self.order() {
            Err(UmbralError::TruncationTooSmall { degree, order: self.order() })
        } else {
            Ok(())
        }
    }
}

/// `(1/h(t)) x^n`.
pub fn appell_inverse_apply(ctx: &AppellContext, n: usize) -> Result<BivariatePoly, UmbralError> {
    ctx.require_order(n)?;
    apply_operator(&ctx.h_inverse, &BivariatePoly::x().pow(n as u32))
}

/// Checks `<h(t) t^k | BE_n^{(mu)}> = n! delta_{n,k}` for all `n, k <= n_max`.
pub fn sheffer_orthogonality_check(ctx: &AppellContext, n_max: usize) -> IdentityReport {
    let family = match ctx.require_order(n_max).and_then(|_| ctx.family(n_max)) {
        Ok(f) => f,
        Err(e) => return failed_setup(IdentityId::Orthogonality, e),
    };
    let points: Vec<(usize, usize)> = (0..=n_max).flat_map(|n| (0..=n_max).map(move |k| (n, k))).collect();
    run_grid(IdentityId::Orthogonality, points, false, |&(n, k)| {
        let lhs = pair(&ctx.dual_functional(k), &family[n])?;
        let rhs = if n == k {
            BivariatePoly::constant(factorial_rational(n))
        } else {
            BivariatePoly::zero()
        };
        Ok(compare_xy(
            &[("mu", ctx.mu.to_string()), ("n", n.to_string()), ("k", k.to_string())],
            &lhs,
            &rhs,
        ))
    })
}

/// Coefficients `b_k` with `q = sum_k b_k BE_k^{(mu)}(x; y)`.
#[derive(Clone, Debug, PartialEq)]
pub struct AppellExpansion {
    pub mu: i64,
    /// `b_0, b_1, ...`: polynomials in `y` (constants when `y` is fixed).
    pub coeffs: Vec<BivariatePoly>,
}

impl AppellExpansion {
    /// `sum_k b_k BE_k^{(mu)}(x; y)` with the same `y` as `ctx`.
    pub fn reconstruct(&self, ctx: &AppellContext) -> Result<BivariatePoly, UmbralError> {
        if self.coeffs.is_empty() {
            return Ok(BivariatePoly::zero());
        }
        let family = ctx.family(self.coeffs.len() - 1)?;
        Ok(self.coeffs.iter().zip(&family).map(|(b, p)| b * p).sum())
    }

    /// Each coefficient as `"p/q"` or a polynomial in `y`, constant term first.
    pub fn coefficient_strings(&self) -> Vec<String> {
        self.coeffs
            .iter()
            .map(|c| match c.as_constant() {
                Some(q) => q.to_string(),
                None => c.to_pretty_ascending(&XY),
            })
            .collect()
    }
}

impl Serialize for AppellExpansion {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("AppellExpansion", 2)?;
        st.serialize_field("mu", &self.mu)?;
        st.serialize_field("coeffs", &self.coefficient_strings())?;
        st.end()
    }
}

/// `b_k = (1/k!) <h(t) t^k | q(x)>` for `k = 0..=deg_x q`.
pub fn expand_in_appell(q: &BivariatePoly, ctx: &AppellContext) -> Result<AppellExpansion, UmbralError> {
    let degree = q.degree_in(X) as usize;
    ctx.require_order(degree)?;
    let coeffs = (0..=degree)
        .map(|k| Ok(pair(&ctx.dual_functional(k), q)?.scale(&factorial_rational(k).recip())))
        .collect::<Result<_, UmbralError>>()?;
    Ok(AppellExpansion { mu: ctx.mu, coeffs })
}

/// The same coefficients through `(1 / (2^mu k!)) <(e^t + 1)^mu e^{-y(e^t - 1)} t^k | q>`.
/// Only defined for `mu >= 0`.
pub fn expand_in_appell_unnormalised(q: &BivariatePoly, ctx: &AppellContext) -> Result<AppellExpansion, UmbralError> {
    if ctx.mu < 0 {
        return Err(UmbralError::OrderOutOfRange { mu: ctx.mu, min: 0 });
    }
    let degree = q.degree_in(X) as usize;
    ctx.require_order(degree)?;
    let order = ctx.order();
    let sum_power = TruncatedSeries::<Rational>::exp_t(order)
        .checked_add(&TruncatedSeries::one(order))?
        .pow_int(ctx.mu)?;
    let y_exp = exp_minus_one(order).lift::<BivariatePoly>().scale(&ctx.y.poly()).neg().exp()?;
    let base = sum_power.lift::<BivariatePoly>().checked_mul(&y_exp)?;
    let two_mu = Rational::from_integer(num_bigint::BigInt::from(2).pow(ctx.mu as u32));
    let coeffs = (0..=degree)
        .map(|k| {
            let f = LinearFunctional { repr: base.mul_t_pow(k) };
            Ok(pair(&f, q)?.scale(&(factorial_rational(k) * &two_mu).recip()))
        })
        .collect::<Result<_, UmbralError>>()?;
    Ok(AppellExpansion { mu: ctx.mu, coeffs })
}

/// `(e^{z t} - 1)/t`, truncated at `order`.
pub fn integral_operator(z: &Rational, order: usize) -> PolySeries {
    let mut c = TruncatedSeries::<Rational>::exp_scaled(z, order + 1).into_coeffs();
    c[0] = Rational::zero();
    TruncatedSeries::from_coeffs(c, order + 1)
        .div_t_pow(1)
        .expect("zero constant term")
        .lift()
}

/// Both sides of `int_x^{x+z} BE_n^{(mu)}(v; y) dv = ((e^{zt} - 1)/t) BE_n^{(mu)}(x; y)`.
pub fn integral_via_operator(
    n: usize,
    z: &Rational,
    mu: i64,
    y: &YParam,
) -> Result<(BivariatePoly, BivariatePoly), UmbralError> {
    let p = y.specialise(seq::bell_euler_poly(n, &int(mu))?);
    let anti = p.antiderivative(X);
    let lhs = &anti.shift_x(z) - &anti;
    let rhs = apply_operator(&integral_operator(z, n), &p)?;
    Ok((lhs, rhs))
}

/// Both sides of `int_0^z BE_n^{(mu)}(v; y) dv = <(e^{zt} - 1)/t | BE_n^{(mu)}(x; y)>`.
pub fn integral_from_zero(
    n: usize,
    z: &Rational,
    mu: i64,
    y: &YParam,
) -> Result<(BivariatePoly, BivariatePoly), UmbralError> {
    let p = y.specialise(seq::bell_euler_poly(n, &int(mu))?);
    let lhs = p.antiderivative(X).eval(X, z);
    let functional = LinearFunctional { repr: integral_operator(z, n) };
    Ok((lhs, pair(&functional, &p)?))
}

/// All `(i_1, ..., i_parts)` of non-negative integers summing to `n`.
pub fn compositions(n: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if n == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=n {
        for mut rest in compositions(n - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Right side of the multinomial decomposition:
/// `sum multinomial(n; i) BE_{i_mu}^{(1)}(y) prod_{j < mu} E_{i_j}`.
fn multinomial_rhs(
    n: usize,
    mu: usize,
    order_one_y: &[BivariatePoly],
    euler_numbers: &[Rational],
) -> BivariatePoly {
    compositions(n, mu)
        .into_iter()
        .map(|parts| {
            let (last, head) = parts.split_last().expect("mu >= 1");
            let weight = head
                .iter()
                .fold(Rational::from_integer(multinomial(&parts)), |acc, &i| acc * &euler_numbers[i]);
            order_one_y[*last].scale(&weight)
        })
        .sum()
}

/// Checks the decomposition of `BE_n^{(mu)}(y)` for `n <= n_max`.
pub fn multinomial_decomposition_check(n_max: usize, mu: i64) -> IdentityReport {
    let id = IdentityId::Multinomial;
    let setup = || -> Result<_, UmbralError> {
        if mu < 1 {
            return Err(UmbralError::OrderOutOfRange { mu, min: 1 });
        }
        Ok((
            seq::bell_euler_y_table(n_max, &int(mu))?,
            seq::bell_euler_y_table(n_max, &int(1))?,
            seq::euler_number_table(n_max, &int(1))?,
        ))
    };
    let (lhs, order_one_y, euler) = match setup() {
        Ok(v) => v,
        Err(e) => return failed_setup(id, e),
    };
    run_grid(id, (0..=n_max).collect(), false, |&n| {
        let rhs = multinomial_rhs(n, mu as usize, &order_one_y, &euler);
        Ok(compare_xy(&[("mu", mu.to_string()), ("n", n.to_string())], &lhs[n], &rhs))
    })
}

/// Random polynomial in `x` of degree exactly `degree`, with rational
/// coefficients `p/q`, `|p| <= 1000`, `1 <= q <= 1000`.
pub fn random_polynomial(rng: &mut impl Rng, degree: usize) -> BivariatePoly {
    let mut terms: Vec<([u32; 2], Rational)> = (0..=degree)
        .map(|k| ([k as u32, 0], frac(rng.gen_range(-1000..=1000), rng.gen_range(1..=1000))))
        .collect();
    if terms[degree].1.is_zero() {
        terms[degree].1 = Rational::one();
    }
    BivariatePoly::from_terms(terms)
}

/// Random rational series with small coefficients.
pub fn random_series(rng: &mut impl Rng, order: usize) -> TruncatedSeries<Rational> {
    TruncatedSeries::from_coeffs(
        (0..=order).map(|_| frac(rng.gen_range(-50..=50), rng.gen_range(1..=20))).collect(),
        order,
    )
}

fn mu_param(mu: i64) -> (&'static str, String) {
    ("mu", mu.to_string())
}

pub(crate) fn check_orthogonality(grid: &Grid) -> IdentityReport {
    let id = IdentityId::Orthogonality;
    let mus = grid.integer_alphas();
    let n_max = grid.n_max;
    let contexts: Result<Vec<_>, _> =
        mus.iter().map(|&mu| AppellContext::for_degree(mu, YParam::Formal, n_max)).collect();
    let contexts = match contexts {
        Ok(c) => c,
        Err(e) => return failed_setup(id, e),
    };
    let reports: Vec<IdentityReport> =
        contexts.iter().map(|ctx| sheffer_orthogonality_check(ctx, n_max)).collect();
    merge(id, reports)
}

/// Concatenates sub-reports in order, keeping the first counterexample.
fn merge(id: IdentityId, reports: Vec<IdentityReport>) -> IdentityReport {
    let checked = reports.iter().map(|r| r.checked).sum();
    let elapsed = reports.iter().map(|r| r.elapsed).sum();
    let counterexample = reports.into_iter().find_map(|r| r.counterexample);
    IdentityReport { id, pass: counterexample.is_none(), checked, counterexample, elapsed }
}

pub(crate) fn check_appell_inverse(grid: &Grid) -> IdentityReport {
    let id = IdentityId::AppellInverse;
    let n_max = grid.n_max;
    let points: Vec<(usize, i64)> = (0..=n_max)
        .flat_map(|n| grid.integer_alphas().into_iter().map(move |mu| (n, mu)))
        .collect();
    run_grid(id, points, grid.parallel, |&(n, mu)| {
        let ctx = AppellContext::for_degree(mu, YParam::Formal, n)?;
        let umbral = appell_inverse_apply(&ctx, n)?;
        let series = seq::bell_euler_poly(n, &int(mu))?;
        let convolution = seq::recurrence::bell_euler_by_convolution(n, mu).pop().expect("nonempty");
        let params = [mu_param(mu), ("n", n.to_string())];
        Ok(compare_xy(&params, &series, &umbral).or_else(|| compare_xy(&params, &series, &convolution)))
    })
}

pub(crate) fn check_appell_derivative(grid: &Grid) -> IdentityReport {
    let id = IdentityId::AppellDerivative;
    let n_max = grid.n_max;
    let mus = grid.integer_alphas();
    let tables: Result<Vec<_>, _> = mus.iter().map(|&mu| seq::bell_euler_table(n_max, &int(mu))).collect();
    let tables = match tables {
        Ok(t) => t,
        Err(e) => return failed_setup(id, e),
    };
    let points: Vec<(usize, usize)> = (0..=n_max).flat_map(|n| (0..mus.len()).map(move |m| (n, m))).collect();
    let t = TruncatedSeries::<BivariatePoly>::t(n_max);
    run_grid(id, points, grid.parallel, |&(n, m)| {
        let lhs = apply_operator(&t, &tables[m][n])?;
        let rhs = match n {
            0 => BivariatePoly::zero(),
            _ => tables[m][n - 1].scale(&int(n as i64)),
        };
        Ok(compare_xy(&[mu_param(mus[m]), ("n", n.to_string())], &lhs, &rhs))
    })
}

pub(crate) fn check_pairing_product(grid: &Grid) -> IdentityReport {
    let id = IdentityId::PairingProduct;
    let order = grid.n_max;
    let mut rng = ChaCha8Rng::seed_from_u64(grid.seed);
    let cases: Vec<_> = (0..grid.samples)
        .map(|_| {
            let degree = rng.gen_range(0..=order);
            (random_series(&mut rng, order), random_series(&mut rng, order), random_polynomial(&mut rng, degree))
        })
        .collect();
    let indexed: Vec<usize> = (0..cases.len()).collect();
    run_grid(id, indexed, grid.parallel, |&i| {
        let (g, h, q) = &cases[i];
        let gh = LinearFunctional::from_rational(&g.checked_mul(h)?);
        let lhs = pair(&gh, q)?;
        let hq = apply_operator(&h.lift(), q)?;
        let gq = apply_operator(&g.lift(), q)?;
        let via_h = pair(&LinearFunctional::from_rational(g), &hq)?;
        let via_g = pair(&LinearFunctional::from_rational(h), &gq)?;
        let params = [("sample", i.to_string())];
        Ok(compare_xy(&params, &lhs, &via_h).or_else(|| compare_xy(&params, &lhs, &via_g)))
    })
}

pub(crate) fn check_round_trip(grid: &Grid) -> IdentityReport {
    let id = IdentityId::RoundTrip;
    let max_degree = grid.n_max;
    let mut rng = ChaCha8Rng::seed_from_u64(grid.seed);
    let polys: Vec<BivariatePoly> = (0..grid.samples)
        .map(|_| {
            let d = rng.gen_range(0..=max_degree);
            random_polynomial(&mut rng, d)
        })
        .collect();
    let mus = grid.integer_alphas();
    let contexts: Result<Vec<_>, _> =
        mus.iter().map(|&mu| AppellContext::for_degree(mu, YParam::Formal, max_degree)).collect();
    let contexts = match contexts {
        Ok(c) => c,
        Err(e) => return failed_setup(id, e),
    };
    let points: Vec<(usize, usize)> =
        (0..polys.len()).flat_map(|i| (0..contexts.len()).map(move |m| (i, m))).collect();
    run_grid(id, points, grid.parallel, |&(i, m)| {
        let ctx = &contexts[m];
        let q = &polys[i];
        let expansion = expand_in_appell(q, ctx)?;
        let back = expansion.reconstruct(ctx)?;
        let params = [mu_param(ctx.mu), ("sample", i.to_string())];
        if let Some(c) = compare_xy(&params, q, &back) {
            return Ok(Some(c));
        }
        if ctx.mu >= 0 {
            let alt = expand_in_appell_unnormalised(q, ctx)?;
            for (a, b) in expansion.coeffs.iter().zip(&alt.coeffs) {
                if let Some(c) = compare_xy(&params, a, b) {
                    return Ok(Some(c));
                }
            }
        }
        Ok(None)
    })
}

pub(crate) fn check_integral(grid: &Grid) -> IdentityReport {
    let id = IdentityId::Integral;
    let mus = grid.integer_alphas();
    let points: Vec<(usize, usize, i64, bool)> = (0..=grid.n_max)
        .flat_map(|n| {
            let mus = mus.clone();
            (0..grid.zs.len()).flat_map(move |z| {
                mus.clone().into_iter().flat_map(move |mu| [(n, z, mu, false), (n, z, mu, true)])
            })
        })
        .collect();
    run_grid(id, points, grid.parallel, |&(n, z, mu, from_zero)| {
        let z = &grid.zs[z];
        let (lhs, rhs) = if from_zero {
            integral_from_zero(n, z, mu, &YParam::Formal)
        } else {
            integral_via_operator(n, z, mu, &YParam::Formal)
        }
        ?;
        let form = if from_zero { "from 0" } else { "from x" };
        Ok(compare_xy(
            &[mu_param(mu), ("n", n.to_string()), ("z", z.to_string()), ("form", form.into())],
            &lhs,
            &rhs,
        ))
    })
}

pub(crate) fn check_multinomial(grid: &Grid) -> IdentityReport {
    let reports = grid
        .integer_alphas()
        .into_iter()
        .filter(|&mu| mu >= 1)
        .map(|mu| multinomial_decomposition_check(grid.n_max, mu))
        .collect();
    merge(IdentityId::Multinomial, reports)
}
