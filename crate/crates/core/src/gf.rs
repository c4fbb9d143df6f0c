//! Closed-form generating functions, expanded to a fixed truncation order.

use crate::series::{PowerSeries, SeriesError};

type Result<T> = std::result::Result<T, SeriesError>;

/// Egf of the random walk labeling counts of the `2 × n` grid:
///
/// `((1-2x)^2 arctan(2x/√(1-4x)) + 2x√(1-4x)) / (2 (√(1-4x))^3)`
pub fn grid2_egf(order: usize) -> Result<PowerSeries> {
    let p = |c: &[i64]| PowerSeries::from_ints(c, order);
    let root = p(&[1, -4]).sqrt()?;
    let arg = p(&[0, 2]).try_mul(&root.reciprocal()?)?;
    let one_minus_2x_sq = p(&[1, -4, 4]);
    let num = one_minus_2x_sq
        .try_mul(&arg.arctan()?)?
        .try_add(&p(&[0, 2]).try_mul(&root)?)?;
    let den = p(&[2]).try_mul(&root)?.try_mul(&root)?.try_mul(&root)?;
    num.try_mul(&den.reciprocal()?)
}

/// Ordinary generating function of `a_n / (n-1)!` for the sequence with
/// `a_1 = 1`, `a_n = (2n-1) a_{n-1} + (n-1)!`:
///
/// `x ((1-x) arctan(x/√(1-2x)) + √(1-2x)) / ((1-x) (√(1-2x))^3)`
pub fn a087547_ogf(order: usize) -> Result<PowerSeries> {
    let p = |c: &[i64]| PowerSeries::from_ints(c, order);
    let root = p(&[1, -2]).sqrt()?;
    let arg = PowerSeries::x(order).try_mul(&root.reciprocal()?)?;
    let inner = p(&[1, -1]).try_mul(&arg.arctan()?)?.try_add(&root)?;
    let num = inner.shift(1);
    let den = p(&[1, -1]).try_mul(&root)?.try_mul(&root)?.try_mul(&root)?;
    num.try_mul(&den.reciprocal()?)
}

/// Egf of `n! Σ_k C(2n,2k)/C(n,k)`:
///
/// `(x arctan(x/√(1-2x)) + √(1-2x)) / (√(1-2x))^3`
pub fn a182525_egf(order: usize) -> Result<PowerSeries> {
    let p = |c: &[i64]| PowerSeries::from_ints(c, order);
    let root = p(&[1, -2]).sqrt()?;
    let arg = PowerSeries::x(order).try_mul(&root.reciprocal()?)?;
    let num = arg.arctan()?.shift(1).try_add(&root)?;
    let den = root.try_mul(&root)?.try_mul(&root)?;
    num.try_mul(&den.reciprocal()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rational;
    use num_bigint::BigInt;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from_integer(BigInt::from(x))).collect()
    }

    #[test]
    fn grid2_first_terms() {
        let a = grid2_egf(4).unwrap();
        let terms: Vec<_> = (0..4).map(|n| a.egf_term(n).unwrap()).collect();
        assert_eq!(terms, ints(&[0, 2, 16, 208]));
    }

    #[test]
    fn a087547_first_terms() {
        let a = a087547_ogf(5).unwrap();
        let terms: Vec<_> = (1..5).map(|n| a.scaled_term(n, n - 1).unwrap()).collect();
        assert_eq!(terms, ints(&[1, 4, 22, 160]));
        assert_eq!(a.coeff(0).unwrap(), &Rational::from_integer(BigInt::from(0)));
    }

    #[test]
    fn a182525_first_terms() {
        let a = a182525_egf(3).unwrap();
        let terms: Vec<_> = (0..3).map(|n| a.egf_term(n).unwrap()).collect();
        assert_eq!(terms, ints(&[1, 2, 10]));
    }
}
