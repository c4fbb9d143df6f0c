//! Truncated formal power series with exact rational coefficients.
//!
//! Every series carries a fixed truncation order `N`: it stores the
//! coefficients of `x^0 .. x^(N-1)` and every operation is exact through
//! that order. Mixing orders is an error rather than an implicit truncation.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::arith::{factorial, rational_from_natural, render_rational, Rational};

/// Truncation order used for verification runs unless overridden.
pub const DEFAULT_ORDER: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("truncation orders differ ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },
    #[error("reciprocal needs a nonzero constant term")]
    ZeroConstantTerm,
    #[error("square root needs constant term 1")]
    ConstantTermNotOne,
    #[error("composition needs an inner series with zero constant term")]
    NonzeroInnerConstant,
    #[error("argument must have zero constant term")]
    NonzeroConstantTerm,
    #[error("coefficient index {index} outside truncation order {order}")]
    IndexOutOfRange { index: usize, order: usize },
}

type Result<T> = std::result::Result<T, SeriesError>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

impl PowerSeries {
    /// Pads with zeros or truncates to exactly `order` coefficients.
    pub fn from_coeffs(mut coeffs: Vec<Rational>, order: usize) -> PowerSeries {
        coeffs.resize(order, Rational::zero());
        PowerSeries { coeffs }
    }

    pub fn from_ints(coeffs: &[i64], order: usize) -> PowerSeries {
        PowerSeries::from_coeffs(coeffs.iter().map(|&c| int(c)).collect(), order)
    }

    pub fn zero(order: usize) -> PowerSeries {
        PowerSeries { coeffs: vec![Rational::zero(); order] }
    }

    pub fn constant(c: Rational, order: usize) -> PowerSeries {
        PowerSeries::from_coeffs(vec![c], order)
    }

    pub fn one(order: usize) -> PowerSeries {
        PowerSeries::constant(Rational::one(), order)
    }

    /// `c * x^k`.
    pub fn monomial(c: Rational, k: usize, order: usize) -> PowerSeries {
        let mut s = PowerSeries::zero(order);
        if k < order {
            s.coeffs[k] = c;
        }
        s
    }

    /// The series `x`.
    pub fn x(order: usize) -> PowerSeries {
        PowerSeries::monomial(Rational::one(), 1, order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Result<&Rational> {
        self.coeffs
            .get(i)
            .ok_or(SeriesError::IndexOutOfRange { index: i, order: self.order() })
    }

    fn constant_term(&self) -> Rational {
        self.coeffs.first().cloned().unwrap_or_else(Rational::zero)
    }

    fn check_order(&self, other: &PowerSeries) -> Result<()> {
        if self.order() != other.order() {
            return Err(SeriesError::OrderMismatch { left: self.order(), right: other.order() });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &PowerSeries) -> Result<PowerSeries> {
        self.check_order(other)?;
        Ok(PowerSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, other: &PowerSeries) -> Result<PowerSeries> {
        self.check_order(other)?;
        Ok(PowerSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn try_mul(&self, other: &PowerSeries) -> Result<PowerSeries> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = vec![Rational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Ok(PowerSeries { coeffs: out })
    }

    pub fn scale(&self, c: &Rational) -> PowerSeries {
        PowerSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn neg(&self) -> PowerSeries {
        self.scale(&int(-1))
    }

    /// Multiplies by `x^k`, dropping what falls past the truncation.
    pub fn shift(&self, k: usize) -> PowerSeries {
        let n = self.order();
        let mut coeffs = vec![Rational::zero(); k.min(n)];
        coeffs.extend(self.coeffs.iter().take(n.saturating_sub(k)).cloned());
        PowerSeries { coeffs }
    }

    /// Multiplicative inverse through the truncation order.
    pub fn reciprocal(&self) -> Result<PowerSeries> {
        let a0 = self.constant_term();
        if a0.is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let n = self.order();
        let inv0 = a0.recip();
        let mut b: Vec<Rational> = Vec::with_capacity(n);
        b.push(inv0.clone());
        for k in 1..n {
            let mut s = Rational::zero();
            for i in 1..=k {
                if !self.coeffs[i].is_zero() {
                    s += &self.coeffs[i] * &b[k - i];
                }
            }
            b.push(-s * &inv0);
        }
        Ok(PowerSeries { coeffs: b })
    }

    /// Square root of a series with constant term 1; the result also has
    /// constant term 1.
    pub fn sqrt(&self) -> Result<PowerSeries> {
        if !self.constant_term().is_one() {
            return Err(SeriesError::ConstantTermNotOne);
        }
        let n = self.order();
        // b^2 = a  =>  2 b_k = a_k - sum_{i=1}^{k-1} b_i b_{k-i}
        let two = int(2);
        let mut b: Vec<Rational> = Vec::with_capacity(n);
        b.push(Rational::one());
        for k in 1..n {
            let mut s = self.coeffs[k].clone();
            for i in 1..k {
                s -= &b[i] * &b[k - i];
            }
            b.push(s / &two);
        }
        Ok(PowerSeries { coeffs: b })
    }

    /// `outer(inner)`, evaluated by Horner's rule.
    pub fn compose(&self, inner: &PowerSeries) -> Result<PowerSeries> {
        self.check_order(inner)?;
        if !inner.constant_term().is_zero() {
            return Err(SeriesError::NonzeroInnerConstant);
        }
        let n = self.order();
        let mut acc = PowerSeries::zero(n);
        for c in self.coeffs.iter().rev() {
            acc = acc.try_mul(inner)?;
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// Formal derivative; the result has order `N - 1`.
    pub fn derivative(&self) -> PowerSeries {
        PowerSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        }
    }

    /// Antiderivative with zero constant term, truncated back to order `N`.
    pub fn integral(&self) -> PowerSeries {
        let n = self.order();
        let mut coeffs = Vec::with_capacity(n);
        if n > 0 {
            coeffs.push(Rational::zero());
        }
        coeffs.extend(
            self.coeffs
                .iter()
                .take(n.saturating_sub(1))
                .enumerate()
                .map(|(i, c)| c / int(i as i64 + 1)),
        );
        PowerSeries { coeffs }
    }

    /// `arctan(u)` for `u` with zero constant term, as the antiderivative of
    /// `u' / (1 + u^2)`.
    pub fn arctan(&self) -> Result<PowerSeries> {
        if !self.constant_term().is_zero() {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        let n = self.order();
        if n == 0 {
            return Ok(self.clone());
        }
        let one_plus_sq = PowerSeries::one(n).try_add(&self.try_mul(self)?)?;
        // u' has order n-1; pad it back so the product stays at order n
        let du = PowerSeries::from_coeffs(self.derivative().coeffs, n);
        Ok(du.try_mul(&one_plus_sq.reciprocal()?)?.integral())
    }

    /// `arctan(u)` summed as the Maclaurin series `Σ (-1)^k u^(2k+1) / (2k+1)`.
    pub fn arctan_maclaurin(&self) -> Result<PowerSeries> {
        if !self.constant_term().is_zero() {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        let n = self.order();
        let u2 = self.try_mul(self)?;
        let mut power = self.clone();
        let mut acc = PowerSeries::zero(n);
        let mut k: i64 = 0;
        // u^(2k+1) vanishes below x^(2k+1), so k < n/2 suffices
        while (2 * k as usize) < n {
            let c = Rational::new(BigInt::from(if k % 2 == 0 { 1 } else { -1 }), BigInt::from(2 * k + 1));
            acc = acc.try_add(&power.scale(&c))?;
            power = power.try_mul(&u2)?;
            k += 1;
        }
        Ok(acc)
    }

    /// `[x^n]` of the series.
    pub fn egf_coefficient(&self, n: usize) -> Result<Rational> {
        self.coeff(n).cloned()
    }

    /// `n! [x^n]`, the n-th term of the sequence this series is the
    /// exponential generating function of.
    pub fn egf_term(&self, n: usize) -> Result<Rational> {
        self.scaled_term(n, n)
    }

    /// `k! [x^n]`; `(n-1)! [x^n]` reads off sequences encoded as
    /// `Σ a_n x^n / (n-1)!`.
    pub fn scaled_term(&self, n: usize, k: usize) -> Result<Rational> {
        Ok(self.coeff(n)? * rational_from_natural(factorial(k)))
    }
}

impl fmt::Display for PowerSeries {
    /// Coefficient list, e.g. `[1, -2, -2]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(render_rational).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}
