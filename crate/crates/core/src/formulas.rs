//! Closed-form counts and the sums of inverse binomial coefficients tied to
//! them.
//!
//! Every form is its own routine so that identities between them are checked
//! rather than assumed. Sums with rational terms are evaluated exactly: the
//! terms are brought over one common denominator with integer recurrences,
//! and the total is reduced once. Forms whose value is a count go through an
//! integrality check.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::arith::{binomial, binomial_row, catalan, factorial, pow2, rational, rational_from_natural, to_natural, Natural, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("{formula}: n = {n} is below the minimum {min}")]
    InvalidN { formula: FormulaId, n: usize, min: usize },
    #[error("{formula}: value at n = {n} is not an integer ({value})")]
    NonIntegral { formula: FormulaId, n: usize, value: String },
    #[error("unknown formula {0:?}")]
    Unknown(String),
}

type Result<T> = std::result::Result<T, FormulaError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FormulaId {
    Complete,
    Path,
    Cycle,
    King2n,
    King2nStartFirstColumn,
    Grid2nSum,
    Grid2nA087923,
    A087547Sum,
    A087547Rec,
    BalaLhs,
    BalaRhs,
    BalaCentral,
    BalaFactorial,
    A182525Sum,
}

impl FormulaId {
    pub const ALL: [FormulaId; 14] = [
        FormulaId::Complete,
        FormulaId::Path,
        FormulaId::Cycle,
        FormulaId::King2n,
        FormulaId::King2nStartFirstColumn,
        FormulaId::Grid2nSum,
        FormulaId::Grid2nA087923,
        FormulaId::A087547Sum,
        FormulaId::A087547Rec,
        FormulaId::BalaLhs,
        FormulaId::BalaRhs,
        FormulaId::BalaCentral,
        FormulaId::BalaFactorial,
        FormulaId::A182525Sum,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FormulaId::Complete => "complete",
            FormulaId::Path => "path",
            FormulaId::Cycle => "cycle",
            FormulaId::King2n => "king2",
            FormulaId::King2nStartFirstColumn => "king2-first-column",
            FormulaId::Grid2nSum => "grid2",
            FormulaId::Grid2nA087923 => "a087923",
            FormulaId::A087547Sum => "a087547-sum",
            FormulaId::A087547Rec => "a087547-rec",
            FormulaId::BalaLhs => "bala-lhs",
            FormulaId::BalaRhs => "bala-rhs",
            FormulaId::BalaCentral => "bala-central",
            FormulaId::BalaFactorial => "bala-factorial",
            FormulaId::A182525Sum => "a182525",
        }
    }

    /// The expression the routine evaluates.
    pub fn expression(self) -> &'static str {
        match self {
            FormulaId::Complete => "n!",
            FormulaId::Path => "2^(n-1)",
            FormulaId::Cycle => "n 2^(n-2)",
            FormulaId::King2n => "2^(n-1) (n+1)! C_n",
            FormulaId::King2nStartFirstColumn => "(2n)!/n!",
            FormulaId::Grid2nSum => "2^(n-1) (n-1)! sum_{k=0}^{n-1} (n C(2n-2,2k) + C(2n-1,2k)) / C(n-1,k)",
            FormulaId::Grid2nA087923 => {
                "2^n (n-1)! sum_{k=0}^{n-1} C(2n-2,2k) (2(k+1)(n-k)-1) / (C(n-1,k) (2k+1))"
            }
            FormulaId::A087547Sum => "(n-1)! sum_{k=0}^{n-1} C(2n-1,2k) / C(n-1,k)",
            FormulaId::A087547Rec => "a_1 = 1, a_n = (2n-1) a_{n-1} + (n-1)!",
            FormulaId::BalaLhs => "sum_{k=0}^{n-1} 2^k C(n+k,k) / ((2k+1) C(2k,k))",
            FormulaId::BalaRhs => "C(2n,n)/2^n sum_{k=0}^{n-1} 2^k / ((2k+1) C(2k,k))",
            FormulaId::BalaCentral => "(2n)!/(n! 2^n) sum_{k=0}^{n-1} 2^k (k!)^2 / (2k+1)!",
            FormulaId::BalaFactorial => "sum_{k=1}^{n} 2^(k-1) (k-1)! (n+k-1)! / (2k-1)!",
            FormulaId::A182525Sum => "n! sum_{k=0}^{n} C(2n,2k) / C(n,k)",
        }
    }

    pub fn min_n(self) -> usize {
        match self {
            FormulaId::Cycle => 3,
            FormulaId::A182525Sum => 0,
            _ => 1,
        }
    }

    /// Whether the value is asserted to be an integer for every valid `n`.
    pub fn is_integral(self) -> bool {
        !matches!(self, FormulaId::BalaLhs | FormulaId::BalaRhs)
    }

    pub fn evaluate(self, n: usize) -> Result<Rational> {
        let nat = |r: Result<Natural>| r.map(rational_from_natural);
        match self {
            FormulaId::Complete => nat(l_complete(n)),
            FormulaId::Path => nat(l_path(n)),
            FormulaId::Cycle => nat(l_cycle(n)),
            FormulaId::King2n => nat(l_king2(n)),
            FormulaId::King2nStartFirstColumn => nat(king2_start_first_column(n)),
            FormulaId::Grid2nSum => nat(l_grid2_sum(n)),
            FormulaId::Grid2nA087923 => nat(l_grid2_a087923(n)),
            FormulaId::A087547Sum => nat(a087547_sum(n)),
            FormulaId::A087547Rec => nat(a087547_rec(n)),
            FormulaId::BalaLhs => bala_lhs(n),
            FormulaId::BalaRhs => bala_rhs(n),
            FormulaId::BalaCentral => bala_central_form(n),
            FormulaId::BalaFactorial => bala_factorial_form(n),
            FormulaId::A182525Sum => nat(a182525_sum(n)),
        }
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FormulaId {
    type Err = FormulaError;

    fn from_str(s: &str) -> Result<Self> {
        FormulaId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| FormulaError::Unknown(s.to_string()))
    }
}

fn check_n(formula: FormulaId, n: usize) -> Result<()> {
    let min = formula.min_n();
    if n < min {
        return Err(FormulaError::InvalidN { formula, n, min });
    }
    Ok(())
}

fn integral(formula: FormulaId, n: usize, value: Rational) -> Result<Natural> {
    to_natural(&value).ok_or_else(|| FormulaError::NonIntegral { formula, n, value: value.to_string() })
}

fn small(v: usize) -> BigUint {
    BigUint::from(v)
}

/// `x * mul / div` where the quotient is known to be exact.
fn scale_exact(x: Natural, mul: usize, div: usize) -> Natural {
    let (q, r) = (x * small(mul)).div_rem(&small(div));
    assert!(r.is_zero(), "inexact term recurrence: remainder mod {div}");
    q
}

/// `k! (m-k)!` for `k = 0..=m`, i.e. `m! / C(m,k)`.
fn inverse_binomial_weights(m: usize) -> Vec<Natural> {
    let mut w = Vec::with_capacity(m + 1);
    let mut cur = factorial(m);
    for k in 0..=m {
        w.push(cur.clone());
        if k < m {
            cur = scale_exact(cur, k + 1, m - k);
        }
    }
    w
}

/// `lcm(1, 3, 5, ..., top)` over the odd numbers up to `top`.
fn odd_lcm(top: usize) -> Natural {
    let mut l = Natural::one();
    for j in (3..=top).step_by(2) {
        let r = (&l % small(j)).to_usize().expect("remainder below j");
        let g = r.gcd(&j);
        l *= small(j / g);
    }
    l
}

pub fn l_complete(n: usize) -> Result<Natural> {
    check_n(FormulaId::Complete, n)?;
    Ok(factorial(n))
}

pub fn l_path(n: usize) -> Result<Natural> {
    check_n(FormulaId::Path, n)?;
    Ok(pow2(n - 1))
}

pub fn l_cycle(n: usize) -> Result<Natural> {
    check_n(FormulaId::Cycle, n)?;
    Ok(small(n) * pow2(n - 2))
}

/// Labelings of the `2 × n` king's graph: `2^(n-1) (n+1)! C_n`.
pub fn l_king2(n: usize) -> Result<Natural> {
    check_n(FormulaId::King2n, n)?;
    Ok(pow2(n - 1) * factorial(n + 1) * catalan(n))
}

/// Labelings of the `2 × n` king's graph that start in the first column:
/// `(2n)!/n!`.
pub fn king2_start_first_column(n: usize) -> Result<Natural> {
    check_n(FormulaId::King2nStartFirstColumn, n)?;
    Ok(factorial(2 * n) / factorial(n))
}

/// Labelings of the `2 × n` grid graph, evaluated from the inverse binomial
/// sum `2^(n-1) (n-1)! Σ (n C(2n-2,2k) + C(2n-1,2k)) / C(n-1,k)`.
pub fn l_grid2_sum(n: usize) -> Result<Natural> {
    let id = FormulaId::Grid2nSum;
    check_n(id, n)?;
    let m = n - 1;
    let even = binomial_row(2 * m);
    let odd = binomial_row(2 * m + 1);
    let w = inverse_binomial_weights(m);
    let mut num = Natural::zero();
    for k in 0..=m {
        num += (small(n) * &even[2 * k] + &odd[2 * k]) * &w[k];
    }
    let sum = rational(num, factorial(m));
    let value = sum * rational_from_natural(pow2(m) * factorial(m));
    integral(id, n, value)
}

/// `2^n (n-1)! Σ C(2n-2,2k) (2(k+1)(n-k)-1) / (C(n-1,k) (2k+1))`.
pub fn l_grid2_a087923(n: usize) -> Result<Natural> {
    let id = FormulaId::Grid2nA087923;
    check_n(id, n)?;
    let m = n - 1;
    let even = binomial_row(2 * m);
    let w = inverse_binomial_weights(m);
    let l = odd_lcm(2 * m + 1);
    let mut num = Natural::zero();
    for k in 0..=m {
        let factor = 2 * (k + 1) * (n - k) - 1;
        num += &even[2 * k] * small(factor) * &w[k] * (&l / small(2 * k + 1));
    }
    let sum = rational(num, factorial(m) * l);
    let value = sum * rational_from_natural(pow2(n) * factorial(m));
    integral(id, n, value)
}

/// `(n-1)! Σ_{k=0}^{n-1} C(2n-1,2k) / C(n-1,k)`.
pub fn a087547_sum(n: usize) -> Result<Natural> {
    let id = FormulaId::A087547Sum;
    check_n(id, n)?;
    let m = n - 1;
    let odd = binomial_row(2 * m + 1);
    let w = inverse_binomial_weights(m);
    let num = (0..=m).map(|k| &odd[2 * k] * &w[k]).sum();
    let value = rational(num, factorial(m)) * rational_from_natural(factorial(m));
    integral(id, n, value)
}

/// `a_1 = 1`, `a_n = (2n-1) a_{n-1} + (n-1)!`.
pub fn a087547_rec(n: usize) -> Result<Natural> {
    check_n(FormulaId::A087547Rec, n)?;
    Ok(a087547_rec_table(n).pop().expect("n >= 1"))
}

/// `[a_1, ..., a_{n_max}]` from the recursion.
pub fn a087547_rec_table(n_max: usize) -> Vec<Natural> {
    let mut out = Vec::with_capacity(n_max);
    let mut a = Natural::one();
    let mut fact = Natural::one(); // (n-1)!
    for n in 1..=n_max {
        if n > 1 {
            fact *= small(n - 1);
            a = a * small(2 * n - 1) + &fact;
        }
        out.push(a.clone());
    }
    out
}

/// `Σ_{k=0}^{n-1} 2^k C(n+k,k) / ((2k+1) C(2k,k))`.
pub fn bala_lhs(n: usize) -> Result<Rational> {
    check_n(FormulaId::BalaLhs, n)?;
    // over the common denominator (2n-1)!, the term ratio is (n+k+1)/(2k+3)
    let den = factorial(2 * n - 1);
    let mut term = den.clone();
    let mut num = Natural::zero();
    for k in 0..n {
        num += &term;
        if k + 1 < n {
            term = scale_exact(term, n + k + 1, 2 * k + 3);
        }
    }
    Ok(rational(num, den))
}

/// `C(2n,n)/2^n Σ_{k=0}^{n-1} 2^k / ((2k+1) C(2k,k))`.
pub fn bala_rhs(n: usize) -> Result<Rational> {
    check_n(FormulaId::BalaRhs, n)?;
    let den = factorial(2 * n - 1);
    let mut term = den.clone();
    let mut num = Natural::zero();
    for k in 0..n {
        num += &term;
        if k + 1 < n {
            term = scale_exact(term, k + 1, 2 * k + 3);
        }
    }
    Ok(rational(num, den) * rational(binomial(2 * n, n as i64), pow2(n)))
}

/// `(2n)!/(n! 2^n) Σ_{k=0}^{n-1} 2^k (k!)^2 / (2k+1)!`.
pub fn bala_central_form(n: usize) -> Result<Rational> {
    let id = FormulaId::BalaCentral;
    check_n(id, n)?;
    // terms scaled by (2n-1)!, summed from k = n-1 down; the top term is
    // 2^(n-1) ((n-1)!)^2 and each step down multiplies by (2k+1)/k
    let f = factorial(n - 1);
    let mut term = (&f * &f) << (n - 1);
    let mut num = Natural::zero();
    for k in (0..n).rev() {
        num += &term;
        if k > 0 {
            term = scale_exact(term, 2 * k + 1, k);
        }
    }
    let sum = rational(num, factorial(2 * n - 1));
    let value = sum * rational(factorial(2 * n), factorial(n) * pow2(n));
    integral(id, n, value.clone())?;
    Ok(value)
}

/// `Σ_{k=1}^{n} 2^(k-1) (k-1)! (n+k-1)! / (2k-1)!`.
pub fn bala_factorial_form(n: usize) -> Result<Rational> {
    let id = FormulaId::BalaFactorial;
    check_n(id, n)?;
    // the k-th term is an integer once (n+k-1)!/(2k-1)! is expanded; its
    // successor is term * (n+k)/(2k+1), starting from n! at k = 1
    let mut term = factorial(n);
    let mut num = Natural::zero();
    for k in 1..=n {
        num += &term;
        if k < n {
            term = scale_exact(term, n + k, 2 * k + 1);
        }
    }
    let value = rational(num, Natural::one());
    integral(id, n, value.clone())?;
    Ok(value)
}

/// `n! Σ_{k=0}^{n} C(2n,2k) / C(n,k)`.
pub fn a182525_sum(n: usize) -> Result<Natural> {
    let id = FormulaId::A182525Sum;
    let even = binomial_row(2 * n);
    let w = inverse_binomial_weights(n);
    let num = (0..=n).map(|k| &even[2 * k] * &w[k]).sum();
    let value = rational(num, factorial(n)) * rational_from_natural(factorial(n));
    integral(id, n, value)
}
