//! Executable identity checks over parameter grids.
//!
//! Each check evaluates both sides of an identity as exact polynomials at
//! every grid point and compares canonical forms. A failing check carries
//! the first counterexample in grid order together with both sides
//! serialized, so reports are identical whether or not the grid is evaluated
//! in parallel.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};
use serde_json::Value;

use crate::algebra::{binomial, frac, int, BivariatePoly, Poly, Rational, X, XY, Y};
use crate::error::{ParseError, SeriesError, UmbralError};
use crate::sequences as seq;
use crate::umbral;

#[allow(non_camel_case_types)]
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdentityId {
    /// Bell-based Euler as a convolution of Euler polynomials and Bell polynomials.
    T3_3,
    /// Convolution of Euler numbers with bivariate Bell polynomials.
    T3_4,
    /// Convolution of the `x = 0` family with powers of `x`.
    T3_5,
    /// Addition theorem in both the order and the variables.
    T4_1,
    /// Unit shift in `x`.
    R4_2,
    /// Forward difference in `x`.
    T4_2,
    /// Bivariate Bell polynomials as the average of a unit shift at order one.
    T4_3,
    /// Falling-factorial and Stirling expansion.
    T4_4_corrected,
    /// A false variant of the same expansion, kept as a negative control;
    /// fails from `n = 1`.
    T4_4_literal,
    /// `d/dx` lowers the index.
    T5_1,
    /// `d/dy` as a difference in the order.
    T5_2,
    /// Sheffer orthogonality of the Bell-based Euler family.
    Orthogonality,
    /// Appell construction `(1/h(t)) x^n` against the generating function.
    AppellInverse,
    /// `t` acting as `d/dx` on the family.
    AppellDerivative,
    /// `<g h | q> = <g | h q>`.
    PairingProduct,
    /// Expansion of random polynomials in the family and reconstruction.
    RoundTrip,
    /// Integral over `[x, x + z]` as the operator `(e^{zt} - 1)/t`.
    Integral,
    /// Multinomial decomposition of order-`mu` values into order-one factors.
    Multinomial,
}

impl IdentityId {
    pub const ALL: [IdentityId; 18] = [
        IdentityId::T3_3,
        IdentityId::T3_4,
        IdentityId::T3_5,
        IdentityId::T4_1,
        IdentityId::R4_2,
        IdentityId::T4_2,
        IdentityId::T4_3,
        IdentityId::T4_4_corrected,
        IdentityId::T4_4_literal,
        IdentityId::T5_1,
        IdentityId::T5_2,
        IdentityId::Orthogonality,
        IdentityId::AppellInverse,
        IdentityId::AppellDerivative,
        IdentityId::PairingProduct,
        IdentityId::RoundTrip,
        IdentityId::Integral,
        IdentityId::Multinomial,
    ];

    /// Every identity that is expected to hold: all of them except the
    /// literal negative control.
    pub fn all_true() -> impl Iterator<Item = IdentityId> {
        Self::ALL.into_iter().filter(|id| *id != IdentityId::T4_4_literal)
    }

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::T3_3 => "T3_3",
            IdentityId::T3_4 => "T3_4",
            IdentityId::T3_5 => "T3_5",
            IdentityId::T4_1 => "T4_1",
            IdentityId::R4_2 => "R4_2",
            IdentityId::T4_2 => "T4_2",
            IdentityId::T4_3 => "T4_3",
            IdentityId::T4_4_corrected => "T4_4_corrected",
            IdentityId::T4_4_literal => "T4_4_literal",
            IdentityId::T5_1 => "T5_1",
            IdentityId::T5_2 => "T5_2",
            IdentityId::Orthogonality => "orthogonality",
            IdentityId::AppellInverse => "appell_inverse",
            IdentityId::AppellDerivative => "appell_derivative",
            IdentityId::PairingProduct => "pairing_product",
            IdentityId::RoundTrip => "round_trip",
            IdentityId::Integral => "integral",
            IdentityId::Multinomial => "multinomial",
        }
    }

    /// Default largest index for this identity's grid.
    pub fn default_n_max(self) -> usize {
        match self {
            IdentityId::T4_1 | IdentityId::Orthogonality => 6,
            IdentityId::T5_1 | IdentityId::AppellInverse | IdentityId::AppellDerivative => 10,
            _ => 8,
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.trim().replace('-', "_");
        Self::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(&norm))
            .ok_or_else(|| ParseError::Identity(s.to_string()))
    }
}

impl Serialize for IdentityId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// How the four-variable addition theorem is checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum AdditionMode {
    /// Expand both sides in `Q[x1, x2, y1, y2]`.
    #[default]
    Symbolic,
    /// Compare values on a tensor grid of `n + 2` rationals per variable;
    /// `n + 1` already determine a polynomial of degree `<= n` in each variable.
    Sampling,
}

/// Parameter grid shared by all checks; each check reads the fields it needs.
#[derive(Clone, Debug, PartialEq)]
pub struct Grid {
    pub n_max: usize,
    pub alphas: Vec<Rational>,
    /// `(alpha1, alpha2)` pairs for the addition theorem.
    pub alpha_pairs: Vec<(Rational, Rational)>,
    /// Interval lengths for the integral identities.
    pub zs: Vec<Rational>,
    /// Random instances for the randomized checks.
    pub samples: usize,
    pub seed: u64,
    pub addition_mode: AdditionMode,
    pub parallel: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GridError {
    #[error("n_max must be at least 1")]
    NMaxTooSmall,
    #[error("the order list must not be empty")]
    NoAlphas,
}

impl Grid {
    pub fn new(n_max: usize, alphas: Vec<Rational>) -> Self {
        let alpha_pairs = alphas
            .iter()
            .flat_map(|a| alphas.iter().map(move |b| (a.clone(), b.clone())))
            .collect();
        Grid {
            n_max,
            alphas,
            alpha_pairs,
            zs: vec![int(1), frac(1, 2), frac(-2, 3)],
            samples: 100,
            seed: 0x5EED_B311,
            addition_mode: AdditionMode::Symbolic,
            parallel: false,
        }
    }

    /// `n <= id.default_n_max()`, `alpha in {0, 1, 2, 3}`.
    pub fn default_for(id: IdentityId) -> Self {
        Grid::new(id.default_n_max(), (0..=3).map(int).collect())
    }

    pub fn validate(&self) -> Result<(), GridError> {
        if self.n_max < 1 {
            return Err(GridError::NMaxTooSmall);
        }
        if self.alphas.is_empty() {
            return Err(GridError::NoAlphas);
        }
        Ok(())
    }

    /// The integer orders in `alphas`, for checks defined only there.
    pub fn integer_alphas(&self) -> Vec<i64> {
        self.alphas
            .iter()
            .filter_map(crate::algebra::rational::as_small_integer)
            .collect()
    }
}

/// One failing grid point.
#[derive(Clone, Debug, PartialEq)]
pub struct Counterexample {
    pub params: Vec<(String, String)>,
    pub lhs: Value,
    pub rhs: Value,
}

impl Counterexample {
    pub fn param(&self, name: &str) -> Option<&str> {
        self.params.iter().find(|(k, _)| k == name).map(|(_, v)| v.as_str())
    }
}

struct Params<'a>(&'a [(String, String)]);

impl Serialize for Params<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl Serialize for Counterexample {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Counterexample", 3)?;
        st.serialize_field("params", &Params(&self.params))?;
        st.serialize_field("lhs", &self.lhs)?;
        st.serialize_field("rhs", &self.rhs)?;
        st.end()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdentityReport {
    pub id: IdentityId,
    pub pass: bool,
    pub checked: usize,
    pub counterexample: Option<Counterexample>,
    pub elapsed: Duration,
}

impl IdentityReport {
    /// JSON with `elapsed_ms` forced to zero, for reproducible output.
    pub fn without_timing(mut self) -> Self {
        self.elapsed = Duration::ZERO;
        self
    }
}

impl Serialize for IdentityReport {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let fields = if self.counterexample.is_some() { 5 } else { 4 };
        let mut st = s.serialize_struct("IdentityReport", fields)?;
        st.serialize_field("id", &self.id)?;
        st.serialize_field("pass", &self.pass)?;
        st.serialize_field("checked", &self.checked)?;
        if let Some(c) = &self.counterexample {
            st.serialize_field("counterexample", c)?;
        }
        st.serialize_field("elapsed_ms", &(self.elapsed.as_millis() as u64))?;
        st.end()
    }
}

/// Outcome of one grid point: `None` when the identity holds there.
pub type PointResult = Result<Option<Counterexample>, UmbralError>;

/// Builds a counterexample unless `lhs == rhs`.
pub fn compare<const V: usize, S: AsRef<str>>(
    params: &[(&str, String)],
    lhs: &Poly<V>,
    rhs: &Poly<V>,
    names: &[S],
) -> Option<Counterexample> {
    (lhs != rhs).then(|| Counterexample {
        params: params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
        lhs: lhs.to_json(names),
        rhs: rhs.to_json(names),
    })
}

pub(crate) fn compare_xy(params: &[(&str, String)], lhs: &BivariatePoly, rhs: &BivariatePoly) -> Option<Counterexample> {
    compare(params, lhs, rhs, &XY)
}

/// Evaluates every point (optionally in parallel) and keeps the first
/// failure in grid order.
pub fn run_grid<P, F>(id: IdentityId, points: Vec<P>, parallel: bool, check: F) -> IdentityReport
where
    P: Sync,
    F: Fn(&P) -> PointResult + Sync,
{
    let start = Instant::now();
    let results: Vec<PointResult> = if parallel {
        points.par_iter().map(&check).collect()
    } else {
        points.iter().map(&check).collect()
    };
    let counterexample = results.into_iter().find_map(|r| match r {
        Ok(None) => None,
        Ok(Some(c)) => Some(c),
        Err(e) => Some(Counterexample {
            params: vec![("error".to_string(), e.to_string())],
            lhs: Value::Null,
            rhs: Value::Null,
        }),
    });
    IdentityReport {
        id,
        pass: counterexample.is_none(),
        checked: points.len(),
        counterexample,
        elapsed: start.elapsed(),
    }
}

fn binom(n: usize, k: usize) -> Rational {
    Rational::from_integer(binomial(n, k))
}

fn x_pow(k: usize) -> BivariatePoly {
    BivariatePoly::x().pow(k as u32)
}

/// Grid points `(n, alpha index)` in `n`-major order.
fn n_alpha_points(grid: &Grid) -> Vec<(usize, usize)> {
    (0..=grid.n_max)
        .flat_map(|n| (0..grid.alphas.len()).map(move |a| (n, a)))
        .collect()
}

fn params_na(n: usize, alpha: &Rational) -> Vec<(&'static str, String)> {
    vec![("n", n.to_string()), ("alpha", alpha.to_string())]
}

/// `BE_0..=BE_{n_max}` for every grid order.
fn bell_euler_tables(grid: &Grid, n_max: usize) -> Result<Vec<Vec<BivariatePoly>>, SeriesError> {
    grid.alphas.iter().map(|a| seq::bell_euler_table(n_max, a)).collect()
}

pub(crate) fn failed_setup(id: IdentityId, e: impl Into<UmbralError>) -> IdentityReport {
    let e = e.into();
    run_grid(id, vec![()], false, |_| Err(e.clone()))
}

macro_rules! try_setup {
    ($id:expr, $e:expr) => {
        match $e {
            Ok(v) => v,
            Err(err) => return failed_setup($id, err),
        }
    };
}

pub fn check_t3_3(grid: &Grid) -> IdentityReport {
    let id = IdentityId::T3_3;
    let n = grid.n_max;
    let be = try_setup!(id, bell_euler_tables(grid, n));
    let euler: Vec<_> = try_setup!(id, grid.alphas.iter().map(|a| seq::euler_poly_table(n, a)).collect());
    let bell = try_setup!(id, seq::bell_poly_table(n));
    run_grid(id, n_alpha_points(grid), grid.parallel, |&(n, a)| {
        let rhs: BivariatePoly = (0..=n)
            .map(|k| (&euler[a][k] * &bell[n - k]).scale(&binom(n, k)))
            .sum();
        Ok(compare_xy(&params_na(n, &grid.alphas[a]), &be[a][n], &rhs))
    })
}

pub fn check_t3_4(grid: &Grid) -> IdentityReport {
    let id = IdentityId::T3_4;
    let n = grid.n_max;
    let be = try_setup!(id, bell_euler_tables(grid, n));
    let numbers: Vec<_> = try_setup!(id, grid.alphas.iter().map(|a| seq::euler_number_table(n, a)).collect());
    let bivariate = try_setup!(id, seq::bivariate_bell_table(n));
    run_grid(id, n_alpha_points(grid), grid.parallel, |&(n, a)| {
        let rhs: BivariatePoly = (0..=n)
            .map(|k| bivariate[n - k].scale(&(binom(n, k) * &numbers[a][k])))
            .sum();
        Ok(compare_xy(&params_na(n, &grid.alphas[a]), &be[a][n], &rhs))
    })
}

pub fn check_t3_5(grid: &Grid) -> IdentityReport {
    let id = IdentityId::T3_5;
    let n = grid.n_max;
    let be = try_setup!(id, bell_euler_tables(grid, n));
    let y_family: Vec<_> = try_setup!(id, grid.alphas.iter().map(|a| seq::bell_euler_y_table(n, a)).collect());
    run_grid(id, n_alpha_points(grid), grid.parallel, |&(n, a)| {
        let rhs: BivariatePoly = (0..=n)
            .map(|k| (&y_family[a][k] * &x_pow(n - k)).scale(&binom(n, k)))
            .sum();
        Ok(compare_xy(&params_na(n, &grid.alphas[a]), &be[a][n], &rhs))
    })
}

/// Variable order of the four-variable ring.
pub const ADDITION_VARS: [&str; 4] = ["x1", "x2", "y1", "y2"];

pub fn check_t4_1(grid: &Grid) -> IdentityReport {
    let id = IdentityId::T4_1;
    let v = |i| Poly::<4>::var(i);
    let (x1, x2, y1, y2) = (v(0), v(1), v(2), v(3));
    let sum_images = [&x1 + &x2, &y1 + &y2];
    let first = [x1.clone(), y1.clone()];
    let second = [x2.clone(), y2.clone()];

    let points: Vec<(usize, usize)> = (0..=grid.n_max)
        .flat_map(|n| (0..grid.alpha_pairs.len()).map(move |p| (n, p)))
        .collect();
    run_grid(id, points, grid.parallel, |&(n, p)| {
        let (a1, a2) = &grid.alpha_pairs[p];
        let lhs_xy = seq::bell_euler_poly(n, &(a1 + a2))?;
        let t1 = seq::bell_euler_table(n, a1)?;
        let t2 = seq::bell_euler_table(n, a2)?;
        let params = vec![
            ("n", n.to_string()),
            ("alpha1", a1.to_string()),
            ("alpha2", a2.to_string()),
        ];
        match grid.addition_mode {
            AdditionMode::Symbolic => {
                let lhs = lhs_xy.substitute(&sum_images);
                let rhs: Poly<4> = (0..=n)
                    .map(|k| {
                        (&t1[k].substitute(&first) * &t2[n - k].substitute(&second)).scale(&binom(n, k))
                    })
                    .sum();
                Ok(compare(&params, &lhs, &rhs, &ADDITION_VARS))
            }
            AdditionMode::Sampling => {
                let nodes: Vec<Rational> = (0..=n + 1).map(|j| frac(2 * j as i64 - n as i64 - 1, 3)).collect();
                for p1 in &nodes {
                    for p2 in &nodes {
                        for q1 in &nodes {
                            for q2 in &nodes {
                                let lhs = lhs_xy.eval_all(&[p1 + p2, q1 + q2]);
                                let rhs: Rational = (0..=n)
                                    .map(|k| {
                                        binom(n, k)
                                            * t1[k].eval_all(&[p1.clone(), q1.clone()])
                                            * t2[n - k].eval_all(&[p2.clone(), q2.clone()])
                                    })
                                    .sum();
                                if lhs != rhs {
                                    let mut params = params.clone();
                                    params.push(("point", format!("({p1}, {p2}, {q1}, {q2})")));
                                    return Ok(compare_xy(
                                        &params,
                                        &BivariatePoly::constant(lhs),
                                        &BivariatePoly::constant(rhs),
                                    ));
                                }
                            }
                        }
                    }
                }
                Ok(None)
            }
        }
    })
}

/// Point of the unit-shift check: either a grid order, or the classical
/// `y = 0, alpha = 1` reduction.
#[derive(Clone, Copy)]
enum ShiftPoint {
    Order(usize, usize),
    Classical(usize),
}

pub fn check_r4_2(grid: &Grid) -> IdentityReport {
    let id = IdentityId::R4_2;
    let n_max = grid.n_max;
    let be = try_setup!(id, bell_euler_tables(grid, n_max));
    let euler = try_setup!(id, seq::euler_poly_table(n_max, &int(1)));
    let mut points: Vec<ShiftPoint> =
        n_alpha_points(grid).into_iter().map(|(n, a)| ShiftPoint::Order(n, a)).collect();
    points.extend((0..=n_max).map(ShiftPoint::Classical));
    let shift_sum = |table: &[BivariatePoly], n: usize| -> BivariatePoly {
        (0..=n).map(|k| table[k].scale(&binom(n, k))).sum()
    };
    run_grid(id, points, grid.parallel, |&pt| {
        Ok(match pt {
            ShiftPoint::Order(n, a) => compare_xy(
                &params_na(n, &grid.alphas[a]),
                &be[a][n].shift_x(&int(1)),
                &shift_sum(&be[a], n),
            ),
            ShiftPoint::Classical(n) => compare_xy(
                &[("n", n.to_string()), ("reduction", "y=0, alpha=1".into())],
                &euler[n].shift_x(&int(1)),
                &shift_sum(&euler, n),
            ),
        })
    })
}

pub fn check_t4_2(grid: &Grid) -> IdentityReport {
    let id = IdentityId::T4_2;
    let be = try_setup!(id, bell_euler_tables(grid, grid.n_max + 1));
    run_grid(id, n_alpha_points(grid), grid.parallel, |&(n, a)| {
        let next = &be[a][n + 1];
        let lhs = &next.shift_x(&int(1)) - next;
        let rhs: BivariatePoly = (0..=n).map(|k| be[a][k].scale(&binom(n + 1, k))).sum();
        Ok(compare_xy(&params_na(n, &grid.alphas[a]), &lhs, &rhs))
    })
}

pub fn check_t4_3(grid: &Grid) -> IdentityReport {
    let id = IdentityId::T4_3;
    let n_max = grid.n_max;
    let one = int(1);
    let half = frac(1, 2);
    let be = try_setup!(id, seq::bell_euler_table(n_max, &one));
    let bivariate = try_setup!(id, seq::bivariate_bell_table(n_max));
    let euler = try_setup!(id, seq::euler_poly_table(n_max, &one));
    let points: Vec<(usize, bool)> = (0..=n_max).flat_map(|n| [(n, false), (n, true)]).collect();
    run_grid(id, points, grid.parallel, |&(n, classical)| {
        Ok(if classical {
            let avg = (&euler[n].shift_x(&one) + &euler[n]).scale(&half);
            compare_xy(&[("n", n.to_string()), ("reduction", "y=0".into())], &x_pow(n), &avg)
        } else {
            let avg = (&be[n].shift_x(&one) + &be[n]).scale(&half);
            compare_xy(&[("n", n.to_string())], &bivariate[n], &avg)
        })
    })
}

/// `sum_k (x)_k S_2(j, k)` for `k = 0..=j`.
fn falling_stirling_sum(j: usize) -> Result<BivariatePoly, SeriesError> {
    (0..=j)
        .map(|k| Ok(seq::falling_factorial(k).scale(&seq::stirling2_number(j, k)?)))
        .sum()
}

pub fn check_t4_4_corrected(grid: &Grid) -> IdentityReport {
    let id = IdentityId::T4_4_corrected;
    let n_max = grid.n_max;
    let be = try_setup!(id, bell_euler_tables(grid, n_max));
    let y_family: Vec<_> = try_setup!(id, grid.alphas.iter().map(|a| seq::bell_euler_y_table(n_max, a)).collect());
    let inner: Vec<_> = try_setup!(id, (0..=n_max).map(falling_stirling_sum).collect());
    run_grid(id, n_alpha_points(grid), grid.parallel, |&(n, a)| {
        let rhs: BivariatePoly = (0..=n)
            .map(|j| (&inner[j] * &y_family[a][n - j]).scale(&binom(n, j)))
            .sum();
        Ok(compare_xy(&params_na(n, &grid.alphas[a]), &be[a][n], &rhs))
    })
}

/// Negative control: every summand carries the same index-`n` factor.
/// The inner sum stops at `k = j`, where `S_2(j, k)` vanishes.
pub fn check_t4_4_literal(grid: &Grid) -> IdentityReport {
    let id = IdentityId::T4_4_literal;
    let n_max = grid.n_max;
    let be = try_setup!(id, bell_euler_tables(grid, n_max));
    let y_family: Vec<_> = try_setup!(id, grid.alphas.iter().map(|a| seq::bell_euler_y_table(n_max, a)).collect());
    let inner: Vec<_> = try_setup!(id, (0..=n_max).map(falling_stirling_sum).collect());
    run_grid(id, n_alpha_points(grid), grid.parallel, |&(n, a)| {
        let rhs: BivariatePoly = (0..=n)
            .map(|j| (&inner[j] * &y_family[a][n]).scale(&binom(n, j)))
            .sum();
        Ok(compare_xy(&params_na(n, &grid.alphas[a]), &be[a][n], &rhs))
    })
}

pub fn check_t5_1(grid: &Grid) -> IdentityReport {
    let id = IdentityId::T5_1;
    let be = try_setup!(id, bell_euler_tables(grid, grid.n_max));
    run_grid(id, n_alpha_points(grid), grid.parallel, |&(n, a)| {
        let lhs = be[a][n].derivative(X);
        let rhs = match n {
            0 => BivariatePoly::zero(),
            _ => be[a][n - 1].scale(&int(n as i64)),
        };
        Ok(compare_xy(&params_na(n, &grid.alphas[a]), &lhs, &rhs))
    })
}

pub fn check_t5_2(grid: &Grid) -> IdentityReport {
    let id = IdentityId::T5_2;
    let be = try_setup!(id, bell_euler_tables(grid, grid.n_max));
    let lowered: Vec<_> = try_setup!(
        id,
        grid.alphas
            .iter()
            .map(|a| seq::bell_euler_table(grid.n_max, &(a - Rational::one())))
            .collect()
    );
    run_grid(id, n_alpha_points(grid), grid.parallel, |&(n, a)| {
        let lhs = be[a][n].derivative(Y);
        let rhs = (&be[a][n] - &lowered[a][n]).scale(&int(-2));
        Ok(compare_xy(&params_na(n, &grid.alphas[a]), &lhs, &rhs))
    })
}

/// Runs one registry entry.
pub fn run(id: IdentityId, grid: &Grid) -> IdentityReport {
    match id {
        IdentityId::T3_3 => check_t3_3(grid),
        IdentityId::T3_4 => check_t3_4(grid),
        IdentityId::T3_5 => check_t3_5(grid),
        IdentityId::T4_1 => check_t4_1(grid),
        IdentityId::R4_2 => check_r4_2(grid),
        IdentityId::T4_2 => check_t4_2(grid),
        IdentityId::T4_3 => check_t4_3(grid),
        IdentityId::T4_4_corrected => check_t4_4_corrected(grid),
        IdentityId::T4_4_literal => check_t4_4_literal(grid),
        IdentityId::T5_1 => check_t5_1(grid),
        IdentityId::T5_2 => check_t5_2(grid),
        IdentityId::Orthogonality => umbral::check_orthogonality(grid),
        IdentityId::AppellInverse => umbral::check_appell_inverse(grid),
        IdentityId::AppellDerivative => umbral::check_appell_derivative(grid),
        IdentityId::PairingProduct => umbral::check_pairing_product(grid),
        IdentityId::RoundTrip => umbral::check_round_trip(grid),
        IdentityId::Integral => umbral::check_integral(grid),
        IdentityId::Multinomial => umbral::check_multinomial(grid),
    }
}

/// Runs several entries; the output order follows `ids`.
pub fn run_many(ids: &[IdentityId], grid_for: impl Fn(IdentityId) -> Grid + Sync, parallel: bool) -> Vec<IdentityReport> {
    if parallel {
        ids.par_iter().map(|&id| run(id, &grid_for(id))).collect()
    } else {
        ids.iter().map(|&id| run(id, &grid_for(id))).collect()
    }
}

/// A rational value as a one-term polynomial, for reporting numeric sides.
pub fn constant_json(q: &Rational) -> Value {
    BivariatePoly::constant(q.clone()).json()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(n_max: usize, alphas: &[i64]) -> Grid {
        Grid::new(n_max, alphas.iter().map(|&a| int(a)).collect())
    }

    fn assert_pass(r: &IdentityReport) {
        assert!(r.pass, "{} failed: {:?}", r.id, r.counterexample);
        assert!(r.counterexample.is_none());
    }

    #[test]
    fn t3_3_default_grid_counts_points() {
        let r = check_t3_3(&grid(8, &[0, 1, 2, 3]));
        assert_pass(&r);
        assert_eq!(r.checked, 36);
    }

    #[test]
    fn all_positive_checks_pass_on_small_grid() {
        let g = grid(4, &[0, 1, 2]);
        for id in IdentityId::all_true() {
            let mut g = g.clone();
            g.samples = 5;
            assert_pass(&run(id, &g));
        }
    }

    #[test]
    fn literal_expansion_fails_first_at_n_one() {
        let r = check_t4_4_literal(&grid(4, &[0, 1]));
        assert!(!r.pass);
        let c = r.counterexample.unwrap();
        assert_eq!(c.param("n"), Some("1"));
        assert_eq!(c.param("alpha"), Some("0"));
        // lhs x + y, rhs (1 + x) y
        assert_eq!(c.lhs, BivariatePoly::parse("x + y", &XY).unwrap().json());
        assert_eq!(c.rhs, BivariatePoly::parse("x*y + y", &XY).unwrap().json());
        assert!(check_t4_4_corrected(&grid(4, &[0, 1])).pass);
    }

    #[test]
    fn addition_theorem_sampling_agrees_with_symbolic() {
        let mut g = grid(3, &[0, 1]);
        g.addition_mode = AdditionMode::Sampling;
        assert_pass(&check_t4_1(&g));
    }

    #[test]
    fn parallel_and_sequential_reports_match() {
        let mut g = grid(5, &[0, 1, 2]);
        let seq = check_t4_4_literal(&g).without_timing();
        g.parallel = true;
        assert_eq!(check_t4_4_literal(&g).without_timing(), seq);
    }

    #[test]
    fn report_json_shape() {
        let r = check_t4_4_literal(&grid(1, &[0])).without_timing();
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            r#"{"id":"T4_4_literal","pass":false,"checked":2,"counterexample":{"params":{"n":"1","alpha":"0"},"lhs":{"x^1":"1","y^1":"1"},"rhs":{"x^1*y^1":"1","y^1":"1"}},"elapsed_ms":0}"#
        );
        let ok = serde_json::to_value(check_t5_1(&grid(1, &[0]))).unwrap();
        assert!(ok.get("counterexample").is_none());
    }

    #[test]
    fn identity_names_round_trip() {
        for id in IdentityId::ALL {
            assert_eq!(id.name().parse::<IdentityId>().unwrap(), id);
        }
        assert_eq!("t4_4_corrected".parse::<IdentityId>().unwrap(), IdentityId::T4_4_corrected);
        assert!("T9_9".parse::<IdentityId>().is_err());
    }

    #[test]
    fn grid_validation() {
        assert_eq!(grid(0, &[1]).validate(), Err(GridError::NMaxTooSmall));
        assert_eq!(grid(3, &[]).validate(), Err(GridError::NoAlphas));
        assert!(Grid::default_for(IdentityId::T4_1).validate().is_ok());
    }
}
