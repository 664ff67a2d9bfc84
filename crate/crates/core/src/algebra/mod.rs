//! Scalars, polynomials and truncated power series.

pub mod poly;
pub mod rational;
pub mod ring;
pub mod series;

pub use poly::{BivariatePoly, Monomial, Poly, X, XY, Y};
pub use rational::{binomial, factorial, frac, int, multinomial, parse_rational, Rational};
pub use ring::Coeff;
pub use series::{SeriesOrder, TruncatedSeries};

/// Which formal variable of a [`BivariatePoly`] an operation acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
}

impl Var {
    pub fn index(self) -> usize {
        match self {
            Var::X => X,
            Var::Y => Y,
        }
    }
}

pub fn poly_derivative(p: &BivariatePoly, var: Var) -> BivariatePoly {
    p.derivative(var.index())
}

pub fn poly_antiderivative(p: &BivariatePoly, var: Var) -> BivariatePoly {
    p.antiderivative(var.index())
}

/// Substitutes a rational value for one variable.
pub fn poly_eval(p: &BivariatePoly, var: Var, point: &Rational) -> BivariatePoly {
    p.eval(var.index(), point)
}
