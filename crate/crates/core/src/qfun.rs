//! q-integers, q-factorials, q-Pochhammer symbols and Gaussian binomials.
//!
//! Everything is returned in the variable `q`; use [`Poly::rename`] for a
//! `p`-analog.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::{Monomial, Poly, Series, Var};

/// `[n]_q = 1 + q + ... + q^(n-1)`, and `0` for `n = 0`.
pub fn q_int(n: u32) -> Poly {
    Poly::univariate(Var::Q, &vec![1; n as usize])
}

/// `[n]_q! = [n]_q [n-1]_q ... [1]_q`, with `[0]_q! = 1`.
pub fn q_factorial(n: u32) -> Poly {
    (1..=n).fold(Poly::one(), |acc, i| &acc * &q_int(i))
}

/// `(q)_n = (1-q)(1-q^2)...(1-q^n)`, with `(q)_0 = 1`.
pub fn q_pochhammer(n: u32) -> Poly {
    (1..=n).fold(Poly::one(), |acc, i| &acc * &one_minus(Var::Q, i))
}

/// `1 - v^i`
pub fn one_minus(v: Var, i: u32) -> Poly {
    Poly::one() - Poly::var_pow(v, i)
}

/// Gaussian binomial coefficients `[n choose k]_q` for all `k <= n <= max_n`,
/// filled by `[n,k] = [n-1,k-1] + q^k [n-1,k]`.
#[derive(Clone, Debug)]
pub struct GaussianTable {
    rows: Vec<Vec<Poly>>,
}

impl GaussianTable {
    pub fn new(max_n: u32) -> Self {
        let mut rows: Vec<Vec<Poly>> = vec![vec![Poly::one()]];
        for n in 1..=max_n as usize {
            let prev = &rows[n - 1];
            let mut row = Vec::with_capacity(n + 1);
            row.push(Poly::one());
            for k in 1..n {
                let shifted = prev[k].mul_monomial(&Monomial::var(Var::Q, k as u32));
                row.push(&prev[k - 1] + &shifted);
            }
            row.push(Poly::one());
            rows.push(row);
        }
        GaussianTable { rows }
    }

    pub fn max_n(&self) -> u32 {
        (self.rows.len() - 1) as u32
    }

    pub fn get(&self, n: u32, k: u32) -> Result<&Poly> {
        if k > n {
            return Err(Error::OutOfRange(format!("k = {k} > n = {n}")));
        }
        self.rows
            .get(n as usize)
            .map(|row| &row[k as usize])
            .ok_or_else(|| Error::OutOfRange(format!("n = {n} beyond table size {}", self.max_n())))
    }
}

/// `[n choose k]_q`. Fails with `OutOfRange` unless `0 <= k <= n`.
pub fn gaussian_binomial(n: i64, k: i64) -> Result<Poly> {
    if n < 0 || k < 0 || k > n {
        return Err(Error::OutOfRange(format!("gaussian_binomial({n}, {k})")));
    }
    let table = GaussianTable::new(n as u32);
    table.get(n as u32, k as u32).cloned()
}

/// `n choose 2`
pub fn binom2(n: u32) -> u32 {
    n * n.saturating_sub(1) / 2
}

/// Checks `Σ_{j=0}^{m} (-1)^j q^binom(j,2) [m choose j]_q = 0` for
/// `1 <= m <= max_m`. This is the coefficient of `z^m` in
/// `exp_q(-z) Exp_q(z) = 1` once `[m]_q!` is cleared.
pub fn qbinomial_theorem_check(max_m: u32) -> bool {
    let table = GaussianTable::new(max_m);
    (1..=max_m).all(|m| {
        let total: Poly = (0..=m)
            .map(|j| {
                let sign = if j % 2 == 0 { 1 } else { -1 };
                table
                    .get(m, j)
                    .expect("j <= m")
                    .mul_monomial(&Monomial::var(Var::Q, binom2(j)))
                    .scale(&BigInt::from(sign))
            })
            .sum();
        total.is_zero()
    })
}

/// `1/(v)_n = Π_{i=1}^{n} 1/(1 - v^i)` truncated at `cap` in `v`.
pub fn pochhammer_inverse(v: Var, n: u32, cap: u32) -> Series {
    (1..=n).fold(Series::one(v, cap), |acc, i| {
        let g = Series::geom_inverse(&Monomial::var(v, i), v, cap).expect("positive power");
        acc.mul(&g).expect("same variable")
    })
}

/// `v^k/(v)_k`, the generating function of partitions into exactly `k`
/// parts, truncated at `cap`.
pub fn k_partition_weight(v: Var, k: u32, cap: u32) -> Series {
    if k > cap {
        return Series::zero(v, cap);
    }
    Series::new(
        pochhammer_inverse(v, k, cap - k)
            .body()
            .mul_monomial(&Monomial::var(v, k)),
        v,
        cap,
    )
}
