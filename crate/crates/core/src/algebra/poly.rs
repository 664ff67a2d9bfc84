//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! `Poly<V>` is a polynomial in `V` formal variables. The bivariate case
//! `Poly<2>` (variables `x`, `y`) is the value type of every sequence family;
//! `Poly<4>` appears when an addition theorem needs two independent copies
//! of `(x, y)`.
//!
//! Terms are kept in a `BTreeMap` keyed by exponent vectors in graded
//! descending order, so iteration, pretty printing and JSON serialization are
//! all deterministic. Zero coefficients are never stored, which makes
//! structural equality the same thing as polynomial equality.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{Map, Value};

use super::rational::{format_rational, parse_rational, Rational};
use crate::error::ParseError;

/// Exponent vector. Orders by total degree first, then lexicographically,
/// both descending, so that `BTreeMap` iteration yields the leading term
/// first.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Monomial<const V: usize>(pub [u32; V]);

impl<const V: usize> Monomial<V> {
    pub const ONE: Self = Monomial([0; V]);

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.0[var]
    }

    fn mul(&self, other: &Self) -> Self {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a += b;
        }
        Monomial(e)
    }
}

impl<const V: usize> Ord for Monomial<V> {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .degree()
            .cmp(&self.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl<const V: usize> PartialOrd for Monomial<V> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly<const V: usize> {
    terms: BTreeMap<Monomial<V>, Rational>,
}

/// Polynomial in `x` (index 0) and `y` (index 1).
pub type BivariatePoly = Poly<2>;

pub const X: usize = 0;
pub const Y: usize = 1;
pub const XY: [&str; 2] = ["x", "y"];

impl<const V: usize> Poly<V> {
    pub fn constant(c: Rational) -> Self {
        Self::monomial([0; V], c)
    }

    pub fn var(index: usize) -> Self {
        let mut e = [0; V];
        e[index] = 1;
        Self::monomial(e, Rational::one())
    }

    pub fn monomial(exponents: [u32; V], c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial(exponents), c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = ([u32; V], Rational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(Monomial(e), c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial<V>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `Some(c)` when the polynomial is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    /// Terms in graded descending order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial<V>, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, exponents: [u32; V]) -> Rational {
        self.terms
            .get(&Monomial(exponents))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient([0; V])
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, c * q)).collect(),
        }
    }

    /// Degree in one variable; the zero polynomial has degree 0.
    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn derivative(&self, var: usize) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut d = m.0;
            d[var] -= 1;
            out.add_term(Monomial(d), c * Rational::from_integer(BigInt::from(e)));
        }
        out
    }

    /// Antiderivative with zero constant of integration in `var`.
    pub fn antiderivative(&self, var: usize) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut d = m.0;
            d[var] += 1;
            out.add_term(Monomial(d), c / Rational::from_integer(BigInt::from(d[var])));
        }
        out
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitutes `images[i]` for variable `i`, producing a polynomial in
    /// `W` variables.
    pub fn substitute<const W: usize>(&self, images: &[Poly<W>; V]) -> Poly<W> {
        let mut powers: Vec<Vec<Poly<W>>> = (0..V).map(|_| vec![Poly::one()]).collect();
        for (var, table) in powers.iter_mut().enumerate() {
            let top = self.degree_in(var);
            for _ in 0..top {
                let next = table.last().map(|p| p * &images[var]).unwrap_or_else(Poly::one);
                table.push(next);
            }
        }
        let mut out = Poly::<W>::zero();
        for (m, c) in &self.terms {
            let mut term = Poly::<W>::constant(c.clone());
            for (var, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    term = &term * &powers[var][e as usize];
                }
            }
            out = &out + &term;
        }
        out
    }

    /// Replaces a single variable by a rational value.
    pub fn eval(&self, var: usize, value: &Rational) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut e = m.0;
            let k = std::mem::replace(&mut e[var], 0);
            out.add_term(Monomial(e), c * pow_rational(value, k));
        }
        out
    }

    pub fn eval_all(&self, point: &[Rational; V]) -> Rational {
        self.terms
            .iter()
            .map(|(m, c)| {
                m.0.iter()
                    .zip(point.iter())
                    .fold(c.clone(), |acc, (&e, v)| acc * pow_rational(v, e))
            })
            .sum()
    }

    /// Coefficients of `var^0, var^1, ..., var^deg` as polynomials free of `var`.
    pub fn coefficients_in(&self, var: usize) -> Vec<Self> {
        let mut out = vec![Self::zero(); self.degree_in(var) as usize + 1];
        for (m, c) in &self.terms {
            let mut e = m.0;
            let k = std::mem::replace(&mut e[var], 0);
            out[k as usize].add_term(Monomial(e), c.clone());
        }
        out
    }

    fn default_names() -> Vec<String> {
        match V {
            1 => vec!["x".to_string()],
            2 => XY.iter().map(|s| s.to_string()).collect(),
            _ => (0..V).map(|i| format!("v{i}")).collect(),
        }
    }

    /// Human-readable form, leading term first: `x^2 + 2*x*y - 1/2`.
    pub fn to_pretty<S: AsRef<str>>(&self, names: &[S]) -> String {
        render_terms(self.terms.iter(), names)
    }

    /// Pretty form with the terms in ascending order: `1/2 - y`.
    pub fn to_pretty_ascending<S: AsRef<str>>(&self, names: &[S]) -> String {
        render_terms(self.terms.iter().rev(), names)
    }

    /// JSON object `{"x^a*y^b": "p/q", ...}` in graded descending key order.
    pub fn to_json<S: AsRef<str>>(&self, names: &[S]) -> Value {
        let mut map = Map::new();
        for (m, c) in &self.terms {
            map.insert(monomial_key(m, names), Value::String(format_rational(c)));
        }
        Value::Object(map)
    }

    pub fn from_json<S: AsRef<str>>(value: &Value, names: &[S]) -> Result<Self, ParseError> {
        let fail = |reason: &str| ParseError::Polynomial {
            input: value.to_string(),
            reason: reason.to_string(),
        };
        let obj = value.as_object().ok_or_else(|| fail("expected a JSON object"))?;
        let mut p = Self::zero();
        for (key, coeff) in obj {
            let coeff = coeff.as_str().ok_or_else(|| fail("coefficients must be strings"))?;
            let c = parse_rational(coeff)?;
            let m = parse_monomial_key(key, names).ok_or_else(|| fail("bad monomial key"))?;
            p.add_term(m, c);
        }
        Ok(p)
    }

    /// Parses the pretty form (and a little more: parentheses, integer
    /// powers of parenthesised groups, implicit multiplication `2x`).
    pub fn parse<S: AsRef<str>>(input: &str, names: &[S]) -> Result<Self, ParseError> {
        let names: Vec<&str> = names.iter().map(AsRef::as_ref).collect();
        Parser::new(input, &names)?.parse_all()
    }
}

impl Poly<2> {
    pub fn x() -> Self {
        Self::var(X)
    }

    pub fn y() -> Self {
        Self::var(Y)
    }

    pub fn pretty(&self) -> String {
        self.to_pretty(&XY)
    }

    pub fn json(&self) -> Value {
        self.to_json(&XY)
    }

    /// Shift `x -> x + by`.
    pub fn shift_x(&self, by: &Rational) -> Self {
        self.substitute(&[Self::x() + Self::constant(by.clone()), Self::y()])
    }
}

impl<const V: usize> fmt::Display for Poly<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pretty(&Self::default_names()))
    }
}

fn pow_rational(base: &Rational, e: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e {
        acc *= base;
    }
    acc
}

fn monomial_key<const V: usize, S: AsRef<str>>(m: &Monomial<V>, names: &[S]) -> String {
    let parts: Vec<String> = m
        .0
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, e)| format!("{}^{}", names[i].as_ref(), e))
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

fn parse_monomial_key<const V: usize, S: AsRef<str>>(key: &str, names: &[S]) -> Option<Monomial<V>> {
    let mut e = [0u32; V];
    if key.trim() == "1" {
        return Some(Monomial(e));
    }
    for part in key.split('*') {
        let (name, exp) = part.trim().split_once('^')?;
        let idx = names.iter().position(|n| n.as_ref() == name)?;
        let exp: u32 = exp.parse().ok()?;
        if exp == 0 || e[idx] != 0 {
            return None;
        }
        e[idx] = exp;
    }
    Some(Monomial(e))
}

fn pretty_monomial<const V: usize, S: AsRef<str>>(m: &Monomial<V>, names: &[S]) -> String {
    m.0.iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| match e {
            1 => names[i].as_ref().to_string(),
            _ => format!("{}^{}", names[i].as_ref(), e),
        })
        .collect::<Vec<_>>()
        .join("*")
}

fn render_terms<'a, const V: usize, S, I>(terms: I, names: &[S]) -> String
where
    S: AsRef<str>,
    I: Iterator<Item = (&'a Monomial<V>, &'a Rational)>,
{
    let mut out = String::new();
    for (i, (m, c)) in terms.enumerate() {
        let negative = c.is_negative();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mag = c.abs();
        let mono = pretty_monomial(m, names);
        if mono.is_empty() {
            out.push_str(&format_rational(&mag));
        } else if mag.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format_rational(&mag));
            out.push('*');
            out.push_str(&mono);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl<const V: usize> Add for &Poly<V> {
    type Output = Poly<V>;
    fn add(self, rhs: &Poly<V>) -> Poly<V> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<const V: usize> Sub for &Poly<V> {
    type Output = Poly<V>;
    fn sub(self, rhs: &Poly<V>) -> Poly<V> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl<const V: usize> Mul for &Poly<V> {
    type Output = Poly<V>;
    fn mul(self, rhs: &Poly<V>) -> Poly<V> {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl<const V: usize> Neg for &Poly<V> {
    type Output = Poly<V>;
    fn neg(self) -> Poly<V> {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl<const V: usize> $tr for Poly<V> {
            type Output = Poly<V>;
            fn $method(self, rhs: Poly<V>) -> Poly<V> {
                (&self).$method(&rhs)
            }
        }
        impl<const V: usize> $tr<&Poly<V>> for Poly<V> {
            type Output = Poly<V>;
            fn $method(self, rhs: &Poly<V>) -> Poly<V> {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<const V: usize> Neg for Poly<V> {
    type Output = Poly<V>;
    fn neg(self) -> Poly<V> {
        -&self
    }
}

impl<const V: usize> Zero for Poly<V> {
    fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<const V: usize> One for Poly<V> {
    fn one() -> Self {
        Self::constant(Rational::one())
    }
    fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }
}

impl<const V: usize> std::iter::Sum for Poly<V> {
    fn sum<I: Iterator<Item = Poly<V>>>(iter: I) -> Self {
        iter.fold(Poly::zero(), |acc, p| acc + p)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

struct Parser<'a> {
    input: &'a str,
    names: &'a [&'a str],
    tokens: Vec<Token>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(input: &'a str, names: &'a [&'a str]) -> Result<Self, ParseError> {
        let mut tokens = Vec::new();
        let chars: Vec<char> = input.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            match c {
                c if c.is_whitespace() => i += 1,
                '0'..='9' => {
                    let start = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    let digits: String = chars[start..i].iter().collect();
                    tokens.push(Token::Int(digits.parse().expect("ascii digits")));
                }
                c if c.is_alphabetic() || c == '_' => {
                    let start = i;
                    while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                        i += 1;
                    }
                    tokens.push(Token::Ident(chars[start..i].iter().collect()));
                }
                '+' | '-' | '*' | '/' | '^' | '(' | ')' => {
                    tokens.push(match c {
                        '+' => Token::Plus,
                        '-' => Token::Minus,
                        '*' => Token::Star,
                        '/' => Token::Slash,
                        '^' => Token::Caret,
                        '(' => Token::LParen,
                        _ => Token::RParen,
                    });
                    i += 1;
                }
                other => {
                    return Err(ParseError::Polynomial {
                        input: input.to_string(),
                        reason: format!("unexpected character {other:?}"),
                    })
                }
            }
        }
        Ok(Parser { input, names, tokens, pos: 0 })
    }

    fn error(&self, reason: impl Into<String>) -> ParseError {
        ParseError::Polynomial {
            input: self.input.to_string(),
            reason: reason.into(),
        }
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn parse_all<const V: usize>(mut self) -> Result<Poly<V>, ParseError> {
        if self.names.len() != V {
            return Err(self.error("variable name count does not match"));
        }
        if self.tokens.is_empty() {
            return Err(self.error("empty input"));
        }
        let p = self.expr()?;
        if self.pos != self.tokens.len() {
            return Err(self.error(format!("trailing input at token {}", self.pos)));
        }
        Ok(p)
    }

    fn expr<const V: usize>(&mut self) -> Result<Poly<V>, ParseError> {
        let mut acc = Poly::zero();
        let mut sign = match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                -1
            }
            Some(Token::Plus) => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign < 0 { acc - t } else { acc + t };
            match self.peek() {
                Some(Token::Plus) => sign = 1,
                Some(Token::Minus) => sign = -1,
                _ => break,
            }
            self.pos += 1;
        }
        Ok(acc)
    }

    fn term<const V: usize>(&mut self) -> Result<Poly<V>, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    acc = acc * self.factor()?;
                }
                Some(Token::Ident(_)) | Some(Token::LParen) => acc = acc * self.factor()?,
                _ => break,
            }
        }
        Ok(acc)
    }

    fn exponent(&mut self) -> Result<u32, ParseError> {
        if self.peek() != Some(&Token::Caret) {
            return Ok(1);
        }
        self.pos += 1;
        match self.next() {
            Some(Token::Int(n)) => u32::try_from(n).map_err(|_| self.error("exponent too large")),
            _ => Err(self.error("expected a non-negative integer exponent")),
        }
    }

    fn factor<const V: usize>(&mut self) -> Result<Poly<V>, ParseError> {
        match self.next() {
            Some(Token::Int(n)) => {
                let mut q = Rational::from_integer(n);
                if self.peek() == Some(&Token::Slash) {
                    self.pos += 1;
                    match self.next() {
                        Some(Token::Int(d)) if !d.is_zero() => q /= Rational::from_integer(d),
                        _ => return Err(self.error("expected a nonzero integer denominator")),
                    }
                }
                Ok(Poly::constant(q))
            }
            Some(Token::Ident(name)) => {
                let idx = self
                    .names
                    .iter()
                    .position(|n| *n == name)
                    .ok_or_else(|| self.error(format!("unknown variable {name:?}")))?;
                let e = self.exponent()?;
                Ok(Poly::var(idx).pow(e))
            }
            Some(Token::LParen) => {
                let inner = self.expr()?;
                if self.next() != Some(Token::RParen) {
                    return Err(self.error("unbalanced parenthesis"));
                }
                let e = self.exponent()?;
                Ok(inner.pow(e))
            }
            _ => Err(self.error("expected a number, variable or '('")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{frac, int};

    fn p(s: &str) -> BivariatePoly {
        BivariatePoly::parse(s, &XY).unwrap()
    }

    #[test]
    fn derivative_of_x2y() {
        assert_eq!(p("x^2*y").derivative(X), p("2*x*y"));
    }

    #[test]
    fn definite_integral_of_one() {
        // integral of 1 dv from x to x+z, with z carried as y here
        let anti = BivariatePoly::one().antiderivative(X);
        let upper = anti.substitute(&[p("x + y"), p("y")]);
        assert_eq!(&upper - &anti, p("y"));
    }

    #[test]
    fn derivative_then_antiderivative_restores_zero_constant_poly() {
        let f = p("x^3 - x");
        assert_eq!(f.derivative(X).antiderivative(X), f);
    }

    #[test]
    fn zero_coefficients_are_not_stored() {
        let f = &p("x + y") - &p("x");
        assert_eq!(f.num_terms(), 1);
        assert!((&f - &f).is_zero());
    }

    #[test]
    fn pretty_form_is_graded_descending() {
        let f = p("y + 1/2 - x + x^2 + 2*x*y + y^2");
        assert_eq!(f.pretty(), "x^2 + 2*x*y + y^2 - x + y + 1/2");
        assert_eq!(p("x - 1/2").pretty(), "x - 1/2");
        assert_eq!(p("1/2 - y").to_pretty_ascending(&XY), "1/2 - y");
        assert_eq!(BivariatePoly::zero().pretty(), "0");
        assert_eq!(p("-x").pretty(), "-x");
    }

    #[test]
    fn json_keys_keep_unit_exponents() {
        let f = p("x^2 + 2*x*y + y^2 - x + y");
        assert_eq!(
            serde_json::to_string(&f.json()).unwrap(),
            r#"{"x^2":"1","x^1*y^1":"2","y^2":"1","x^1":"-1","y^1":"1"}"#
        );
        assert_eq!(BivariatePoly::from_json(&f.json(), &XY).unwrap(), f);
        assert_eq!(
            serde_json::to_string(&BivariatePoly::constant(frac(-3, 4)).json()).unwrap(),
            r#"{"1":"-3/4"}"#
        );
    }

    #[test]
    fn parser_handles_groups_and_implicit_products() {
        assert_eq!(p("(x + 1)^2"), p("x^2 + 2*x + 1"));
        assert_eq!(p("2x y"), p("2*x*y"));
        assert_eq!(p("x^3 - 2/3"), &p("x^3") - &BivariatePoly::constant(frac(2, 3)));
        assert!(BivariatePoly::parse("x +", &XY).is_err());
        assert!(BivariatePoly::parse("z", &XY).is_err());
        assert!(BivariatePoly::parse("1/0", &XY).is_err());
        assert!(BivariatePoly::parse("1.5", &XY).is_err());
    }

    #[test]
    fn evaluation_and_substitution() {
        let f = p("x^2 - x");
        assert_eq!(f.eval(X, &int(3)).as_constant(), Some(int(6)));
        assert_eq!(f.shift_x(&int(1)), p("x^2 + x"));
        assert_eq!(p("x*y + y").eval_all(&[int(2), frac(1, 2)]), frac(3, 2));
        let parts = p("x^2*y + 3*x + y^2").coefficients_in(X);
        assert_eq!(parts, vec![p("y^2"), p("3"), p("y")]);
    }
}
