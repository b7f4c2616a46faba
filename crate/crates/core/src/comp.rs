//! Integer compositions, their statistics, and MacMahon's bijection
//! `σ ↦ (π, λ)` with `|λ| + maj(π) = |σ|`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exec::{self, Exec};
use crate::partition::Partition;
use crate::perm::{comaj_of, descent_set, inversions, Permutation, Stat};
use crate::poly::{Monomial, Poly, Series, Var};

/// Largest `n` for which compositions of `n` are enumerated.
pub const MAX_COMPOSITION_SUM: u32 = 24;

/// An ordered tuple of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<u32>);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompStats {
    pub sum: u32,
    pub inv: u32,
    pub des: u32,
    pub descent_set: Vec<u32>,
    pub maj: u32,
    pub comaj: u32,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Invalid {
                what: "composition",
                msg: "parts must be positive".into(),
            });
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of parts `k`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|σ|`
    pub fn sum(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn stats(&self) -> CompStats {
        let d = descent_set(&self.0);
        CompStats {
            sum: self.sum(),
            inv: inversions(&self.0),
            des: d.len() as u32,
            maj: d.iter().sum(),
            comaj: comaj_of(&d, self.len()),
            descent_set: d,
        }
    }

    /// Value of one statistic. Statistics of the inverse are not defined for
    /// compositions and panic.
    pub fn stat(&self, s: Stat) -> u32 {
        let st = self.stats();
        match s {
            Stat::Sum => st.sum,
            Stat::Inv => st.inv,
            Stat::Des => st.des,
            Stat::Maj => st.maj,
            Stat::Comaj => st.comaj,
            Stat::Imaj | Stat::Ides | Stat::Icomaj => {
                panic!("{s} is not a composition statistic")
            }
        }
    }

    /// `σ^R = (σ_k, ..., σ_1)`
    pub fn reverse(&self) -> Composition {
        Composition(self.0.iter().rev().copied().collect())
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Composition::default());
        }
        let parts = s
            .split(',')
            .map(|x| {
                x.trim().parse::<u32>().map_err(|_| Error::Invalid {
                    what: "composition",
                    msg: format!("{x:?} is not a positive integer"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

fn check_sum(n: u32) -> Result<()> {
    if n > MAX_COMPOSITION_SUM {
        return Err(Error::TooLarge {
            what: "n",
            value: n as usize,
            max: MAX_COMPOSITION_SUM as usize,
        });
    }
    Ok(())
}

/// Iterator over the `k`-compositions of `n` in colexicographic order.
#[derive(Clone, Debug)]
pub struct Compositions {
    // reversed composition, stepped in lexicographic order
    rev: Vec<u32>,
    done: bool,
}

impl Compositions {
    fn new(n: u32, k: usize) -> Self {
        if k == 0 || n < k as u32 {
            return Compositions {
                rev: Vec::new(),
                done: !(k == 0 && n == 0),
            };
        }
        let mut rev = vec![1; k];
        rev[k - 1] = n - (k as u32 - 1);
        Compositions { rev, done: false }
    }

    fn advance(&mut self) {
        let k = self.rev.len();
        let mut tail = 0;
        for i in (0..k).rev() {
            // tail holds rev[i+1..].sum() once i < k-1
            if i + 1 < k && tail > (k - 1 - i) as u32 {
                self.rev[i] += 1;
                let spare = tail - 1 - (k - 2 - i) as u32;
                for x in &mut self.rev[i + 1..k - 1] {
                    *x = 1;
                }
                self.rev[k - 1] = spare;
                return;
            }
            tail += self.rev[i];
        }
        self.done = true;
    }
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        if self.done {
            return None;
        }
        let out = Composition(self.rev.iter().rev().copied().collect());
        if self.rev.is_empty() {
            self.done = true;
        } else {
            self.advance();
        }
        Some(out)
    }
}

/// All `k`-compositions of `n`, colexicographic.
pub fn compositions_of(n: u32, k: usize) -> Result<Compositions> {
    check_sum(n)?;
    Ok(Compositions::new(n, k))
}

/// Every composition of `n`, grouped by increasing number of parts.
pub fn all_compositions(n: u32) -> Result<impl Iterator<Item = Composition>> {
    check_sum(n)?;
    let ks = if n == 0 { 0..=0 } else { 1..=n as usize };
    Ok(ks.flat_map(move |k| Compositions::new(n, k)))
}

/// The permutation sorting `σ` into weakly decreasing order, ties broken by
/// increasing index.
pub fn sorting_perm(sigma: &Composition) -> Result<Permutation> {
    if sigma.is_empty() {
        return Err(Error::EmptyComposition);
    }
    Ok(stable_decreasing_sort(sigma))
}

fn stable_decreasing_sort(sigma: &Composition) -> Permutation {
    let mut idx: Vec<u32> = (1..=sigma.len() as u32).collect();
    idx.sort_by(|&a, &b| sigma.0[b as usize - 1].cmp(&sigma.0[a as usize - 1]));
    Permutation::new(idx).expect("indices form a permutation")
}

/// The intermediate values of the bijection, for reporting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MacMahonImage {
    pub perm: Permutation,
    /// `σ` sorted into weakly decreasing order
    pub mu: Vec<u32>,
    pub partition: Partition,
}

/// Number of descents of `π` at positions `>= j`, for each `j` in `1..=k`.
fn descents_at_or_after(pi: &Permutation) -> Vec<u32> {
    let k = pi.len();
    let mut out = vec![0; k];
    let mut acc = 0;
    for j in (1..=k).rev() {
        if j < k && pi.oneline()[j - 1] > pi.oneline()[j] {
            acc += 1;
        }
        out[j - 1] = acc;
    }
    out
}

/// `σ ↦ (π, λ)`: sort `σ` into `μ`, then subtract from each `μ_j` the number
/// of descents of `π` at or to the right of position `j`.
pub fn macmahon_forward(sigma: &Composition) -> (Permutation, Partition) {
    let img = macmahon_image(sigma);
    (img.perm, img.partition)
}

pub fn macmahon_image(sigma: &Composition) -> MacMahonImage {
    let perm = stable_decreasing_sort(sigma);
    let mu: Vec<u32> = perm
        .oneline()
        .iter()
        .map(|&i| sigma.0[i as usize - 1])
        .collect();
    let shift = descents_at_or_after(&perm);
    let parts: Vec<u32> = mu.iter().zip(&shift).map(|(m, s)| m - s).collect();
    let partition = Partition::new(parts).expect("MacMahon image is a partition");
    MacMahonImage {
        perm,
        mu,
        partition,
    }
}

/// `(π, λ) ↦ σ`: add the descent counts back to get `μ`, then place `μ_j`
/// at position `π_j`.
pub fn macmahon_inverse(pi: &Permutation, lambda: &Partition) -> Result<Composition> {
    if pi.len() != lambda.len() {
        return Err(Error::LengthMismatch {
            perm: pi.len(),
            partition: lambda.len(),
        });
    }
    let shift = descents_at_or_after(pi);
    let mut sigma = vec![0; pi.len()];
    for (j, &target) in pi.oneline().iter().enumerate() {
        sigma[target as usize - 1] = lambda.parts()[j] + shift[j];
    }
    Composition::new(sigma)
}

/// `Σ_{σ ∈ C_k, |σ| <= cap} Π_i var_i^{stat_i(σ)}` by enumeration. The
/// variable attached to `Stat::Sum` becomes the truncation variable.
pub fn dist_over_ck(k: usize, cap: u32, stats: &[(Stat, Var)]) -> Result<Series> {
    dist_over_ck_with(k, cap, stats, Exec::default())
}

pub fn dist_over_ck_with(k: usize, cap: u32, stats: &[(Stat, Var)], exec: Exec) -> Result<Series> {
    check_sum(cap)?;
    let size_var = stats
        .iter()
        .find(|(s, _)| *s == Stat::Sum)
        .map(|&(_, v)| v)
        .ok_or(Error::Invalid {
            what: "statistics",
            msg: "the sum statistic must be included".into(),
        })?;
    if let Some((s, _)) = stats
        .iter()
        .find(|(s, _)| matches!(s, Stat::Imaj | Stat::Ides | Stat::Icomaj))
    {
        return Err(Error::Invalid {
            what: "statistics",
            msg: format!("{s} is not a composition statistic"),
        });
    }
    let body = exec::sum_range(cap as usize + 1, exec, |n| {
        let mut counts: HashMap<Monomial, u64> = HashMap::new();
        for sigma in Compositions::new(n as u32, k) {
            *counts
                .entry(composition_monomial(&sigma, stats))
                .or_default() += 1;
        }
        Poly::from_terms(counts.into_iter().map(|(m, c)| (m, BigInt::from(c))))
    });
    Ok(Series::new(body, size_var, cap))
}

fn composition_monomial(sigma: &Composition, stats: &[(Stat, Var)]) -> Monomial {
    let st = sigma.stats();
    let pairs: Vec<(Var, u32)> = stats
        .iter()
        .map(|&(s, v)| {
            let x = match s {
                Stat::Sum => st.sum,
                Stat::Inv => st.inv,
                Stat::Des => st.des,
                Stat::Maj => st.maj,
                Stat::Comaj => st.comaj,
                _ => unreachable!("rejected above"),
            };
            (v, x)
        })
        .collect();
    Monomial::from_pairs(&pairs)
}
