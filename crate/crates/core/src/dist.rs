//! Closed-form distributions of inversions and descents.
//!
//! * `H_k(p,q)`, the joint distribution of `(maj, inv)` over `S_k`, by the
//!   hook-length sum and by Carlitz's recurrence.
//! * `A_k(q,t)`, the q-Eulerian polynomial of `(inv, des)` over `S_k`, as a
//!   partition-indexed sum.
//! * Generating functions over compositions: `IC` (inversions), `DC`
//!   (descents), `B_k` (comajor index and descents) and the five-variable
//!   joint distribution, all truncated in the size variable.
//!
//! Every closed form here has a brute-force counterpart in [`crate::perm`]
//! or [`crate::comp`]; the tests and the verification suites compare them.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::comp::MAX_COMPOSITION_SUM;
use crate::error::{Error, Result};
use crate::exec::{self, Exec};
use crate::partition::{f_lambda_q, g_lambda_q, partitions_of, partitions_up_to, Partition};
use crate::perm::{dist_over_sk_with, Stat};
use crate::poly::{Monomial, Poly, Series, Var};
use crate::qfun::{
    binom2, k_partition_weight, one_minus, pochhammer_inverse, q_factorial, GaussianTable,
};
use crate::verify::Counterexample;

use Var::{P, Q, T, U, V};

/// Largest `k` accepted by [`b_k_series`].
pub const MAX_B_K: usize = 8;
/// Largest `k` accepted by [`joint_closed`].
pub const MAX_JOINT_K: usize = 7;

fn check_cap(k: usize, cap: u32) -> Result<()> {
    if (cap as usize) < k {
        return Err(Error::CapTooSmall { cap, k });
    }
    Ok(())
}

/// `f^λ(p) f^λ(q)`, or `1` for the empty partition.
fn hook_product(lambda: &Partition) -> Poly {
    if lambda.is_empty() {
        return Poly::one();
    }
    let fq = f_lambda_q(lambda, Q).expect("nonempty");
    &fq.rename(Q, P) * &fq
}

/// `H_k(p,q) = Σ_{λ ⊢ k} f^λ(p) f^λ(q)`
pub fn h_k_hooksum(k: u32) -> Poly {
    h_k_hooksum_with(k, Exec::default())
}

pub fn h_k_hooksum_with(k: u32, exec: Exec) -> Poly {
    exec::sum_over(&partitions_of(k), exec, hook_product)
}

/// `H_k(p,q)` by Carlitz's recurrence
/// `H_k = Σ_{j<k} p^j (1-p^{j+1})...(1-p^{k-1}) [k choose j]_q H_j`.
pub fn h_k_carlitz(k: u32) -> Poly {
    let gauss = GaussianTable::new(k);
    let mut h: Vec<Poly> = vec![Poly::one()];
    for n in 1..=k {
        let mut total = Poly::zero();
        for j in 0..n {
            let quotient = (j + 1..n).fold(Poly::one(), |acc, i| &acc * &one_minus(P, i));
            let term = &quotient.mul_monomial(&Monomial::var(P, j))
                * &(gauss.get(n, j).expect("j < n") * &h[j as usize]);
            total += term;
        }
        h.push(total);
    }
    h.pop().expect("nonempty")
}

/// `t^{l(λ)-1} (1-t)^{k-l(λ)}` for a nonempty `λ ⊢ k`.
fn eulerian_t_factor(lambda: &Partition) -> Poly {
    let k = lambda.size();
    let l = lambda.len() as u32;
    one_minus(T, 1)
        .pow(k - l)
        .mul_monomial(&Monomial::var(T, l - 1))
}

/// `t^{l(λ)-1} (1-t)^{k-l(λ)} g^λ(q)` for a nonempty `λ ⊢ k`.
fn eulerian_term(lambda: &Partition) -> Poly {
    &eulerian_t_factor(lambda) * &g_lambda_q(lambda).expect("nonempty")
}

/// `A_k(q,t) = Σ_{λ ⊢ k} t^{l(λ)-1} (1-t)^{k-l(λ)} g^λ(q)`, with `A_0 = 1`.
pub fn a_k_partition_sum(k: u32) -> Poly {
    a_k_partition_sum_with(k, Exec::default())
}

pub fn a_k_partition_sum_with(k: u32, exec: Exec) -> Poly {
    if k == 0 {
        return Poly::one();
    }
    exec::sum_over(&partitions_of(k), exec, eulerian_term)
}

/// `IC_q(p,k) = p^k/(p)_k · H_k(p,q)`, truncated at `p^cap`. The coefficient
/// of `p^n q^r` is the number of `k`-compositions of `n` with `r` inversions.
pub fn ic_of_k(k: u32, cap: u32) -> Result<Series> {
    ic_of_k_with(k, cap, Exec::default())
}

pub fn ic_of_k_with(k: u32, cap: u32, exec: Exec) -> Result<Series> {
    check_cap(k as usize, cap)?;
    let weight = k_partition_weight(P, k, cap);
    let body = exec::sum_over(&partitions_of(k), exec, |lambda| ic_term(&weight, lambda));
    Ok(Series::new(body, P, cap))
}

/// `weight · f^λ(p) f^λ(q)` with the `p`-truncation applied before the
/// `q`-factor is multiplied in.
fn ic_term(weight: &Series, lambda: &Partition) -> Poly {
    if lambda.is_empty() {
        return weight.body().clone();
    }
    let fq = f_lambda_q(lambda, Q).expect("nonempty");
    let wp = weight.mul_poly(&fq.rename(Q, P));
    wp.body() * &fq
}

/// `IC_q(p,k)` by the recurrence
/// `IC(k) = p^k/(1-p^k) Σ_{j<k} [k choose j]_q IC(j)`, `IC(0) = 1`.
pub fn ic_rec(k: u32, cap: u32) -> Result<Series> {
    check_cap(k as usize, cap)?;
    let gauss = GaussianTable::new(k);
    let mut ic: Vec<Series> = vec![Series::one(P, cap)];
    for n in 1..=k {
        let mut sum = Series::zero(P, cap);
        for j in 0..n {
            sum = sum.add(&ic[j as usize].mul_poly(gauss.get(n, j).expect("j < n")))?;
        }
        let factor =
            Series::geom_inverse(&Monomial::var(P, n), P, cap)?.mul_poly(&Poly::var_pow(P, n));
        ic.push(factor.mul(&sum)?);
    }
    Ok(ic.pop().expect("nonempty"))
}

/// `IC_q(p) = Σ_μ p^{|μ|}/(p)_{|μ|} f^μ(p) f^μ(q)` over all partitions with
/// `|μ| <= cap`. Exact below the cap.
pub fn ic_total(cap: u32) -> Series {
    ic_total_with(cap, Exec::default())
}

pub fn ic_total_with(cap: u32, exec: Exec) -> Series {
    let weights: Vec<Series> = (0..=cap).map(|n| k_partition_weight(P, n, cap)).collect();
    let parts = partitions_up_to(cap);
    let body = exec::sum_over(&parts, exec, |mu| ic_term(&weights[mu.size() as usize], mu));
    Series::new(body, P, cap)
}

/// `DC_t(q,k) = q^k/(q)_k · A_k(q,t)`, truncated at `q^cap`. The coefficient
/// of `q^n t^r` is the number of `k`-compositions of `n` with `r` descents.
pub fn dc_of_k(k: u32, cap: u32) -> Result<Series> {
    check_cap(k as usize, cap)?;
    Ok(k_partition_weight(Q, k, cap).mul_poly(&a_k_partition_sum(k)))
}

/// `DC_t(q) = 1 + Σ_{μ ≠ ∅} q^{|μ|}/(q)_{|μ|} t^{l(μ)-1} (1-t)^{|μ|-l(μ)} g^μ(q)`.
pub fn dc_total(cap: u32) -> Series {
    dc_total_with(cap, Exec::default())
}

pub fn dc_total_with(cap: u32, exec: Exec) -> Series {
    let weights: Vec<Series> = (0..=cap).map(|n| k_partition_weight(Q, n, cap)).collect();
    let parts: Vec<Partition> = partitions_up_to(cap)
        .into_iter()
        .filter(|m| !m.is_empty())
        .collect();
    // Truncate against the q-weight before the t-factor widens the product.
    let body = exec::sum_over(&parts, exec, |mu| {
        let g = g_lambda_q(mu).expect("nonempty");
        weights[mu.size() as usize].mul_poly(&g).body() * &eulerian_t_factor(mu)
    });
    Series::new(body + Poly::one(), Q, cap)
}

/// `DC_t(q)` from the rational form
/// `(1-t) / (Σ_{j≥0} q^{binom(j+1,2)} (t-1)^j/(q)_j - t)`.
///
/// The denominator `D` has constant term `1 - t` in `q`, so `D·X = 1 - t` is
/// solved one power of `q` at a time, dividing exactly by `1 - t` in `Z[t]`.
pub fn dc_total_rational(cap: u32) -> Result<Series> {
    let t_minus_one = Poly::var(T) - Poly::one();
    let mut denom = Poly::zero();
    let mut j = 0;
    while binom2(j + 1) <= cap {
        let term = pochhammer_inverse(Q, j, cap)
            .mul_poly(&t_minus_one.pow(j))
            .body()
            .mul_monomial(&Monomial::var(Q, binom2(j + 1)));
        denom += term;
        j += 1;
    }
    denom -= &Poly::var(T);
    let denom = denom.truncate(Q, cap);

    let d: Vec<Poly> = (0..=cap).map(|i| denom.coeff_of_power(Q, i)).collect();
    let one_minus_t = one_minus(T, 1);
    if d[0] != one_minus_t && d[0] != -&one_minus_t {
        return Err(Error::DenominatorNotUnit);
    }
    let mut x: Vec<Poly> = Vec::with_capacity(cap as usize + 1);
    for n in 0..=cap as usize {
        let mut rhs = if n == 0 {
            one_minus_t.clone()
        } else {
            Poly::zero()
        };
        for i in 1..=n {
            rhs -= &(&d[i] * &x[n - i]);
        }
        let xn = rhs
            .div_exact(&d[0], T)
            .map_err(|_| Error::DenominatorNotUnit)?;
        x.push(xn);
    }
    let body: Poly = x
        .iter()
        .enumerate()
        .map(|(n, xn)| xn.mul_monomial(&Monomial::var(Q, n as u32)))
        .sum();
    Ok(Series::new(body, Q, cap))
}

/// `A_k(p,q,t) = Σ_{π ∈ S_k} p^{maj(π)} q^{imaj(π)} t^{ides(π)}`.
pub fn a_k_pqt(k: usize) -> Result<Poly> {
    dist_over_sk_with(
        k,
        &[(Stat::Maj, P), (Stat::Imaj, Q), (Stat::Ides, T)],
        Exec::default(),
    )
}

/// `B_k(p,q,t) = Σ_{σ ∈ C_k} p^{|σ|} q^{comaj(σ)} t^{des(σ)} = p^k/(p)_k · A_k(p,q,t)`.
pub fn b_k_series(k: usize, cap: u32) -> Result<Series> {
    if k > MAX_B_K {
        return Err(Error::TooLarge {
            what: "k",
            value: k,
            max: MAX_B_K,
        });
    }
    check_cap(k, cap)?;
    Ok(k_partition_weight(P, k as u32, cap).mul_poly(&a_k_pqt(k)?))
}

/// The joint distribution of `(|·|, inv, comaj, maj, des)` over `C_k` as
/// `p^k/(p)_k Σ_{π ∈ S_k} p^{maj} q^{inv} t^{imaj} u^{icomaj} v^{ides}`.
pub fn joint_closed(k: usize, cap: u32) -> Result<Series> {
    joint_closed_with(k, cap, Exec::default())
}

pub fn joint_closed_with(k: usize, cap: u32, exec: Exec) -> Result<Series> {
    if k > MAX_JOINT_K {
        return Err(Error::TooLarge {
            what: "k",
            value: k,
            max: MAX_JOINT_K,
        });
    }
    check_cap(k, cap)?;
    let perm_dist = dist_over_sk_with(
        k,
        &[
            (Stat::Maj, P),
            (Stat::Inv, Q),
            (Stat::Imaj, T),
            (Stat::Icomaj, U),
            (Stat::Ides, V),
        ],
        exec,
    )?;
    Ok(k_partition_weight(P, k as u32, cap).mul_poly(&perm_dist))
}

/// Which count a [`DistTable`] holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum TableKind {
    /// `ic_r(n,k)`
    #[serde(rename = "ic_nk")]
    IcNk,
    /// `ic_r(n)`
    #[serde(rename = "ic_n")]
    IcN,
    /// `dc_r(n,k)`
    #[serde(rename = "dc_nk")]
    DcNk,
    /// `dc_r(n)`
    #[serde(rename = "dc_n")]
    DcN,
}

impl TableKind {
    pub fn name(self) -> &'static str {
        match self {
            TableKind::IcNk => "ic_nk",
            TableKind::IcN => "ic_n",
            TableKind::DcNk => "dc_nk",
            TableKind::DcN => "dc_n",
        }
    }
}

/// Counts indexed by `(n, r)`: size and statistic value. Zero entries are
/// not stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistTable {
    pub kind: TableKind,
    pub k: Option<u32>,
    pub cap: u32,
    entries: BTreeMap<(u32, u32), BigUint>,
}

impl DistTable {
    /// Reads the coefficients of `size^n stat^r` from a truncated series.
    pub fn from_series(
        series: &Series,
        stat: Var,
        kind: TableKind,
        k: Option<u32>,
    ) -> Result<Self> {
        let size = series.cap_var();
        let mut entries = BTreeMap::new();
        for (m, c) in series.body().terms() {
            if m.pairs().any(|(v, _)| v != size && v != stat) {
                return Err(Error::Invalid {
                    what: "table series",
                    msg: format!("unexpected variable in term {m}"),
                });
            }
            if c.is_negative() {
                return Err(Error::Invalid {
                    what: "table series",
                    msg: format!("negative count {c} at {m}"),
                });
            }
            entries.insert((m.exp(size), m.exp(stat)), c.magnitude().clone());
        }
        Ok(DistTable {
            kind,
            k,
            cap: series.cap(),
            entries,
        })
    }

    /// `ic_r(n,k)` for `k` given, `ic_r(n)` otherwise, from the closed forms.
    pub fn inversions(cap: u32, k: Option<u32>) -> Result<Self> {
        check_table_cap(cap)?;
        match k {
            Some(k) => DistTable::from_series(
                &ic_of_k(k, cap.max(k))?.truncate(cap),
                Q,
                TableKind::IcNk,
                Some(k),
            ),
            None => DistTable::from_series(&ic_total(cap), Q, TableKind::IcN, None),
        }
    }

    /// `dc_r(n,k)` for `k` given, `dc_r(n)` otherwise, from the closed forms.
    pub fn descents(cap: u32, k: Option<u32>) -> Result<Self> {
        check_table_cap(cap)?;
        match k {
            Some(k) => DistTable::from_series(
                &dc_of_k(k, cap.max(k))?.truncate(cap),
                T,
                TableKind::DcNk,
                Some(k),
            ),
            None => DistTable::from_series(&dc_total(cap), T, TableKind::DcN, None),
        }
    }

    pub fn get(&self, n: u32, r: u32) -> BigUint {
        self.entries.get(&(n, r)).cloned().unwrap_or_default()
    }

    /// Nonzero entries in `(n, r)` order.
    pub fn entries(&self) -> impl Iterator<Item = (u32, u32, &BigUint)> {
        self.entries.iter().map(|(&(n, r), c)| (n, r, c))
    }

    /// Largest statistic value with a nonzero count, over all rows.
    pub fn max_r(&self) -> u32 {
        self.entries.keys().map(|&(_, r)| r).max().unwrap_or(0)
    }

    /// Row `n` from `r = 0` up to its last nonzero entry.
    pub fn row(&self, n: u32) -> Vec<BigUint> {
        let last = self
            .entries
            .range((n, 0)..=(n, u32::MAX))
            .map(|(&(_, r), _)| r)
            .max();
        match last {
            Some(last) => (0..=last).map(|r| self.get(n, r)).collect(),
            None => Vec::new(),
        }
    }

    pub fn row_sum(&self, n: u32) -> BigUint {
        self.entries
            .range((n, 0)..=(n, u32::MAX))
            .map(|(_, c)| c)
            .sum()
    }

    /// `Σ_r r · count(n, r)`
    pub fn weighted_row_sum(&self, n: u32) -> BigUint {
        self.entries
            .range((n, 0)..=(n, u32::MAX))
            .map(|(&(_, r), c)| c * r)
            .sum()
    }

    /// `n,r,count` lines. With `dense`, every `r` up to [`Self::max_r`] is
    /// written for every `n`, including zeros.
    pub fn to_csv(&self, dense: bool) -> String {
        let mut out = String::from("n,r,count\n");
        if dense {
            let max_r = self.max_r();
            for n in 0..=self.cap {
                for r in 0..=max_r {
                    writeln!(out, "{n},{r},{}", self.get(n, r)).unwrap();
                }
            }
        } else {
            for (n, r, c) in self.entries() {
                writeln!(out, "{n},{r},{c}").unwrap();
            }
        }
        out
    }

    /// `{"kind", "k", "cap", "entries": [[n, r, "count"], ...]}`, keys in
    /// that order.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Doc {
            kind: TableKind,
            k: Option<u32>,
            cap: u32,
            entries: Vec<(u32, u32, String)>,
        }
        let doc = Doc {
            kind: self.kind,
            k: self.k,
            cap: self.cap,
            entries: self
                .entries()
                .map(|(n, r, c)| (n, r, c.to_string()))
                .collect(),
        };
        serde_json::to_string(&doc).expect("plain data serializes")
    }

    /// One row per `n` with columns `r = 0..=max_r` (zeros included),
    /// right-aligned, single-space separated, under an `n/r` header.
    pub fn to_grid(&self, max_r: Option<u32>) -> String {
        let max_r = max_r.unwrap_or_else(|| self.max_r());
        let cells: Vec<Vec<String>> = (0..=self.cap)
            .map(|n| (0..=max_r).map(|r| self.get(n, r).to_string()).collect())
            .collect();
        render_grid(&cells, max_r)
    }
}

/// Shared by [`DistTable::to_grid`] and the golden-file tests.
pub fn render_grid(rows: &[Vec<String>], max_r: u32) -> String {
    let label = "n/r";
    let w0 = rows
        .len()
        .saturating_sub(1)
        .to_string()
        .len()
        .max(label.len());
    let widths: Vec<usize> = (0..=max_r as usize)
        .map(|r| {
            rows.iter()
                .map(|row| row[r].len())
                .chain(std::iter::once(r.to_string().len()))
                .max()
                .unwrap_or(1)
        })
        .collect();
    let mut out = String::new();
    write!(out, "{label:>w0$}").unwrap();
    for (r, w) in widths.iter().enumerate() {
        write!(out, " {r:>w$}").unwrap();
    }
    out.push('\n');
    for (n, row) in rows.iter().enumerate() {
        write!(out, "{n:>w0$}").unwrap();
        for (cell, w) in row.iter().zip(&widths) {
            write!(out, " {cell:>w$}").unwrap();
        }
        out.push('\n');
    }
    out
}

fn check_table_cap(cap: u32) -> Result<()> {
    if cap > MAX_COMPOSITION_SUM {
        return Err(Error::TooLarge {
            what: "max_n",
            value: cap as usize,
            max: MAX_COMPOSITION_SUM as usize,
        });
    }
    Ok(())
}

/// Total inversion counts `ic(n)` and `ic(n,k)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TotalInversions {
    pub by_n: BTreeMap<u32, BigUint>,
    pub by_nk: BTreeMap<(u32, u32), BigUint>,
}

/// `ic(n) = Σ_r r·ic_r(n)` for `n <= cap` and `ic(n,k) = Σ_r r·ic_r(n,k)`
/// for `1 <= k <= n <= cap`.
pub fn total_inversions(cap: u32) -> Result<TotalInversions> {
    check_table_cap(cap)?;
    let total = DistTable::inversions(cap, None)?;
    let mut out = TotalInversions::default();
    for n in 0..=cap {
        out.by_n.insert(n, total.weighted_row_sum(n));
    }
    for k in 1..=cap {
        let table = DistTable::inversions(cap, Some(k))?;
        for n in k..=cap {
            out.by_nk.insert((n, k), table.weighted_row_sum(n));
        }
    }
    Ok(out)
}

fn first_difference(expected: &Poly, actual: &Poly) -> Option<String> {
    let diff = expected - actual;
    let m = diff.terms().next().map(|(m, _)| *m)?;
    Some(format!(
        "coefficient of {m}: expected {}, got {}",
        expected.coeff(&m),
        actual.coeff(&m)
    ))
}

fn compare(
    input: String,
    expected: &Poly,
    actual: &Poly,
) -> std::result::Result<(), Counterexample> {
    match first_difference(expected, actual) {
        None => Ok(()),
        Some(detail) => Err(Counterexample {
            input,
            expected: expected.to_string(),
            actual: actual.to_string(),
            detail,
        }),
    }
}

/// Truncated product in several variables at once.
fn mul_capped(a: &Poly, b: &Poly, caps: &[(Var, u32)]) -> Poly {
    let (v0, c0) = caps[0];
    caps[1..]
        .iter()
        .fold(a.mul_truncated(b, v0, c0), |acc, &(v, c)| {
            acc.truncate(v, c)
        })
}

/// Compares `Π_{0≤n≤cap_p, 0≤m≤cap_q} 1/(1 - p^n q^m t)` with
/// `Σ_k H_k(p,q) t^k / ((p)_k (q)_k)` up to `t^max_k`, both truncated at
/// `p^cap_p` and `q^cap_q`. Factors with larger `n` or `m` are `1` modulo the
/// truncation, and the `(0,0)` factor `1/(1-t)` is absorbed by the `t` cap.
pub fn check_product_identity(
    max_k: u32,
    cap_p: u32,
    cap_q: u32,
) -> std::result::Result<(), Counterexample> {
    let caps = [(T, max_k), (P, cap_p), (Q, cap_q)];
    let mut lhs = Poly::one();
    for n in 0..=cap_p {
        for m in 0..=cap_q {
            let x = Monomial::from_pairs(&[(P, n), (Q, m), (T, 1)]);
            let geometric = Poly::from_terms((0..=max_k).map(|j| (x.pow(j), BigInt::from(1))));
            lhs = mul_capped(&lhs, &geometric, &caps);
        }
    }
    let mut rhs = Poly::zero();
    for k in 0..=max_k {
        let inv_p = pochhammer_inverse(P, k, cap_p);
        let inv_q = pochhammer_inverse(Q, k, cap_q);
        let term = mul_capped(&h_k_hooksum(k), inv_p.body(), &caps);
        let term = mul_capped(&term, inv_q.body(), &caps).mul_monomial(&Monomial::var(T, k));
        rhs += term;
    }
    compare(format!("K={max_k}, caps=({cap_p},{cap_q})"), &lhs, &rhs)
}

pub fn verify_product_identity(max_k: u32, cap_p: u32, cap_q: u32) -> bool {
    check_product_identity(max_k, cap_p, cap_q).is_ok()
}

/// Checks the q-Eulerian generating function
/// `Σ_k A_k(q,t) z^k/[k]_q! = (1-t) / (Exp_q(z(t-1)) - t)`, where
/// `Exp_q(y) = Σ_j q^binom(j,2) y^j/[j]_q!`.
///
/// Multiplying out the denominator and reading off `z^m`, then multiplying
/// by `[m]_q!`, gives for every `m >= 1` the polynomial identity
///
/// ```text
/// Σ_{j=0}^{m} [m choose j]_q q^binom(j,2) (t-1)^j A_{m-j}(q,t) - t A_m(q,t) = 0
/// ```
///
/// (and `A_0 - t = 1 - t` at `m = 0`). `A_j` comes from the partition sum.
pub fn check_geneuler(max_m: u32) -> std::result::Result<(), Counterexample> {
    let gauss = GaussianTable::new(max_m);
    let a: Vec<Poly> = (0..=max_m).map(a_k_partition_sum).collect();
    let t_minus_one = Poly::var(T) - Poly::one();
    let m0 = &a[0] - &Poly::var(T);
    compare("m=0".into(), &one_minus(T, 1), &m0)?;
    for m in 1..=max_m {
        let mut lhs = Poly::zero();
        for j in 0..=m {
            let coeff = gauss
                .get(m, j)
                .expect("j <= m")
                .mul_monomial(&Monomial::var(Q, binom2(j)));
            lhs += &(&coeff * &t_minus_one.pow(j)) * &a[(m - j) as usize];
        }
        lhs -= &a[m as usize].mul_monomial(&Monomial::var(T, 1));
        compare(format!("m={m}"), &Poly::zero(), &lhs)?;
    }
    Ok(())
}

pub fn verify_geneuler(max_m: u32) -> bool {
    check_geneuler(max_m).is_ok()
}

/// `q^k/(1-q)^k = [k]_q! q^k/(q)_k`, both sides truncated at `q^cap`.
pub fn check_genfuncid(k: u32, cap: u32) -> std::result::Result<(), Counterexample> {
    let geometric = Series::geom_inverse(&Monomial::var(Q, 1), Q, cap).expect("positive power");
    let lhs = (0..k)
        .fold(Series::one(Q, cap), |acc, _| {
            acc.mul(&geometric).expect("same variable")
        })
        .mul_poly(&Poly::var_pow(Q, k));
    let rhs = k_partition_weight(Q, k, cap).mul_poly(&q_factorial(k));
    compare(format!("k={k}, cap={cap}"), lhs.body(), rhs.body())
}

pub fn verify_genfuncid(k: u32, cap: u32) -> bool {
    check_genfuncid(k, cap).is_ok()
}

#[cfg(test)]
/// Sum of a polynomial's coefficients, as a nonnegative count.
pub(crate) fn total_count(p: &Poly) -> BigUint {
    let s = p.eval_all_at_one();
    assert!(!s.is_negative());
    s.magnitude().clone()
}

impl TotalInversions {
    pub fn ic(&self, n: u32) -> BigUint {
        self.by_n.get(&n).cloned().unwrap_or_else(BigUint::zero)
    }

    pub fn ic_k(&self, n: u32, k: u32) -> BigUint {
        self.by_nk
            .get(&(n, k))
            .cloned()
            .unwrap_or_else(BigUint::zero)
    }
}
