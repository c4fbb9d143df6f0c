//! Exact integers and rationals plus memoized factorial, binomial and
//! Catalan numbers.
//!
//! `Natural` and `Rational` are the `num` big-number types; `Rational` is
//! always kept in lowest terms with a positive denominator.

use std::sync::{OnceLock, RwLock};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

pub type Natural = BigUint;
pub type Rational = num_rational::BigRational;

/// Rows the shared cache reserves up front.
pub const DEFAULT_CACHE_ROWS: usize = 4096;

/// Memo tables for factorials and Catalan numbers. Lookups beyond the
/// filled prefix extend the tables under a write lock; concurrent readers
/// always observe identical values.
#[derive(Debug)]
pub struct CombCache {
    factorials: RwLock<Vec<Natural>>,
    catalans: RwLock<Vec<Natural>>,
}

impl Default for CombCache {
    fn default() -> Self {
        CombCache::with_capacity(DEFAULT_CACHE_ROWS)
    }
}

impl CombCache {
    pub fn with_capacity(rows: usize) -> CombCache {
        let mut f = Vec::with_capacity(rows + 1);
        f.push(Natural::one());
        let mut c = Vec::with_capacity(rows + 1);
        c.push(Natural::one());
        CombCache { factorials: RwLock::new(f), catalans: RwLock::new(c) }
    }

    /// Process-wide cache.
    pub fn global() -> &'static CombCache {
        static CACHE: OnceLock<CombCache> = OnceLock::new();
        CACHE.get_or_init(CombCache::default)
    }

    /// Number of factorial rows currently memoized.
    pub fn len(&self) -> usize {
        self.factorials.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn factorial(&self, k: usize) -> Natural {
        if let Some(v) = self.factorials.read().unwrap().get(k) {
            return v.clone();
        }
        let mut table = self.factorials.write().unwrap();
        while table.len() <= k {
            let i = table.len();
            let next = &table[i - 1] * Natural::from(i);
            table.push(next);
        }
        table[k].clone()
    }

    /// `C(n, k)`; zero when `k < 0` or `k > n`.
    pub fn binomial(&self, n: usize, k: i64) -> Natural {
        if k < 0 || k as u64 > n as u64 {
            return Natural::zero();
        }
        let k = k as usize;
        self.factorial(n) / (self.factorial(k) * self.factorial(n - k))
    }

    pub fn catalan(&self, k: usize) -> Natural {
        if let Some(v) = self.catalans.read().unwrap().get(k) {
            return v.clone();
        }
        let mut table = self.catalans.write().unwrap();
        // C_{i+1} = 2(2i+1)/(i+2) * C_i, exact at every step
        while table.len() <= k {
            let i = table.len() - 1;
            let next = &table[i] * Natural::from(2 * (2 * i + 1)) / Natural::from(i + 2);
            table.push(next);
        }
        table[k].clone()
    }
}

pub fn factorial(k: usize) -> Natural {
    CombCache::global().factorial(k)
}

pub fn binomial(n: usize, k: i64) -> Natural {
    CombCache::global().binomial(n, k)
}

pub fn catalan(k: usize) -> Natural {
    CombCache::global().catalan(k)
}

pub fn pow2(e: usize) -> Natural {
    Natural::one() << e
}

/// Row `n` of Pascal's triangle, built with the multiplicative recurrence.
pub fn binomial_row(n: usize) -> Vec<Natural> {
    let mut row = Vec::with_capacity(n + 1);
    let mut c = Natural::one();
    row.push(c.clone());
    for k in 0..n {
        c = c * Natural::from(n - k) / Natural::from(k + 1);
        row.push(c.clone());
    }
    row
}

pub fn rational(num: Natural, den: Natural) -> Rational {
    Rational::new(BigInt::from_biguint(Sign::Plus, num), BigInt::from(den))
}

pub fn rational_from_natural(n: Natural) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The value as a natural number when it is a nonnegative integer.
pub fn to_natural(r: &Rational) -> Option<Natural> {
    if r.is_integer() {
        r.numer().to_biguint()
    } else {
        None
    }
}

/// Decimal rendering: `num` for integers, `num/den` otherwise.
pub fn render_rational(r: &Rational) -> String {
    r.to_string()
}

/// `num / den`, exact. Dividing by zero panics.
pub fn exact_quotient(num: &Natural, den: &Natural) -> Option<Natural> {
    let (q, r) = num.div_rem(den);
    r.is_zero().then_some(q)
}

/// Nearest `f64` to an exact rational (infinite when out of range).
pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}
