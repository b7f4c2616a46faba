//! Integer partitions, Young diagrams and hook-length formulas.
//!
//! The tableau-counting polynomials are evaluated on dense coefficient
//! vectors: dividing by `[h]_q` is a multiplication by `1 - q` followed by a
//! division by `1 - q^h`, both linear in the degree. A nonzero remainder is
//! reported as [`Error::InexactDivision`] and means the formula was misapplied.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Poly, Var};

/// Largest partition size accepted by [`syt_enumerate`].
pub const MAX_SYT_SIZE: u32 = 12;

/// A weakly decreasing tuple of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Invalid {
                what: "partition",
                msg: "parts must be positive".into(),
            });
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid {
                what: "partition",
                msg: "parts must be weakly decreasing".into(),
            });
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    /// Number of parts, `l(λ)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|λ|`
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `(i, m_i)` for every part value `i` present, ascending in `i`.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &x in self.0.iter().rev() {
            match out.last_mut() {
                Some((v, m)) if *v == x => *m += 1,
                _ => out.push((x, 1)),
            }
        }
        out
    }

    /// Column lengths of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=width)
                .map(|j| self.0.iter().filter(|&&x| x >= j).count() as u32)
                .collect(),
        )
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|x| {
                x.trim().parse::<u32>().map_err(|_| Error::Invalid {
                    what: "partition",
                    msg: format!("{x:?} is not a positive integer"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n` in reverse lexicographic order, starting at `(n)`.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(n, n, None, &mut cur, &mut out);
    out
}

/// Partitions of `n` with exactly `k` parts, reverse lexicographic.
pub fn partitions_of_length(n: u32, k: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(n, n, Some(k), &mut cur, &mut out);
    out
}

/// All partitions with `|λ| <= max_n`, ordered by size, then reverse lex.
pub fn partitions_up_to(max_n: u32) -> Vec<Partition> {
    (0..=max_n).flat_map(partitions_of).collect()
}

fn fill(
    rest: u32,
    max_part: u32,
    len: Option<usize>,
    cur: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if let Some(k) = len {
        let left = k.saturating_sub(cur.len()) as u32;
        if cur.len() > k || rest < left || rest > left * max_part {
            return;
        }
    }
    if rest == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for first in (1..=rest.min(max_part)).rev() {
        cur.push(first);
        fill(rest - first, first, len, cur, out);
        cur.pop();
    }
}

/// Hook length of every cell, row by row.
pub fn hook_lengths(lambda: &Partition) -> Result<Vec<Vec<u32>>> {
    if lambda.is_empty() {
        return Err(Error::EmptyPartition);
    }
    let conj = lambda.conjugate();
    Ok(lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &row)| {
            (0..row as usize)
                .map(|j| (row - j as u32 - 1) + (conj.0[j] - i as u32 - 1) + 1)
                .collect()
        })
        .collect())
}

/// `b(λ) = Σ_i (i-1) λ_i`
pub fn b_of(lambda: &Partition) -> u32 {
    lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &x)| i as u32 * x)
        .sum()
}

fn factorial(n: u32) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// Number of standard Young tableaux of shape `λ`, by the hook-length formula.
pub fn f_lambda(lambda: &Partition) -> Result<BigUint> {
    let hooks = hook_lengths(lambda)?;
    let denom = hooks
        .iter()
        .flatten()
        .fold(BigUint::one(), |acc, &h| acc * h);
    let num = factorial(lambda.size());
    if !(&num % &denom).is_zero() {
        return Err(Error::InexactDivision);
    }
    Ok(num / denom)
}

/// `f^λ(var) = var^b(λ) [n]! / Π_u [h(u)]`, with `n = |λ|`.
pub fn f_lambda_q(lambda: &Partition, var: Var) -> Result<Poly> {
    let hooks = hook_lengths(lambda)?;
    let mut c = dense::q_factorial(lambda.size());
    for &h in hooks.iter().flatten() {
        dense::div_q_int(&mut c, h)?;
    }
    let mut shifted = vec![BigInt::zero(); b_of(lambda) as usize];
    shifted.extend(c);
    Ok(Poly::univariate(var, &shifted))
}

/// `g^λ(q) = l(λ)! [n]_q! / Π_i m_i! ([i]_q!)^{m_i}`, with `n = |λ|`.
pub fn g_lambda_q(lambda: &Partition) -> Result<Poly> {
    if lambda.is_empty() {
        return Err(Error::EmptyPartition);
    }
    let mults = lambda.multiplicities();
    let int_denom = mults
        .iter()
        .fold(BigUint::one(), |acc, &(_, m)| acc * factorial(m));
    let int_num = factorial(lambda.len() as u32);
    if !(&int_num % &int_denom).is_zero() {
        return Err(Error::InexactDivision);
    }
    let scale = BigInt::from(int_num / int_denom);

    let mut c = dense::q_factorial(lambda.size());
    for &(i, m) in &mults {
        for _ in 0..m {
            for j in 2..=i {
                dense::div_q_int(&mut c, j)?;
            }
        }
    }
    Ok(Poly::univariate(Var::Q, &c).scale(&scale))
}

/// A standard Young tableau, stored row by row.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau(Vec<Vec<u32>>);

impl Tableau {
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().map(|r| r.len() as u32).sum()
    }

    fn row_of(&self) -> Vec<usize> {
        let mut pos = vec![0; self.size() as usize + 1];
        for (i, row) in self.0.iter().enumerate() {
            for &x in row {
                pos[x as usize] = i;
            }
        }
        pos
    }

    /// Entries `i` such that `i + 1` sits in a strictly lower row.
    pub fn descents(&self) -> Vec<u32> {
        let pos = self.row_of();
        (1..self.size())
            .filter(|&i| pos[i as usize + 1] > pos[i as usize])
            .collect()
    }

    pub fn maj(&self) -> u32 {
        self.descents().iter().sum()
    }

    /// Rows increase left to right, columns increase downward, and the
    /// entries are exactly `1..=n`.
    pub fn is_standard(&self) -> bool {
        let n = self.size() as usize;
        let mut seen = vec![false; n + 1];
        for (i, row) in self.0.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                if x == 0 || x as usize > n || std::mem::replace(&mut seen[x as usize], true) {
                    return false;
                }
                if j > 0 && row[j - 1] >= x {
                    return false;
                }
                if i > 0 && (self.0[i - 1].len() <= j || self.0[i - 1][j] >= x) {
                    return false;
                }
            }
        }
        true
    }
}

impl From<Vec<Vec<u32>>> for Tableau {
    fn from(rows: Vec<Vec<u32>>) -> Self {
        Tableau(rows)
    }
}

/// Every standard Young tableau of shape `λ`. Limited to
/// `|λ| <= MAX_SYT_SIZE`.
pub fn syt_enumerate(lambda: &Partition) -> Result<Vec<Tableau>> {
    let n = lambda.size();
    if n > MAX_SYT_SIZE {
        return Err(Error::TooLarge {
            what: "|λ|",
            value: n as usize,
            max: MAX_SYT_SIZE as usize,
        });
    }
    let shape = lambda.parts();
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); shape.len()];
    let mut out = Vec::new();
    place(1, n, shape, &mut rows, &mut out);
    Ok(out)
}

fn place(next: u32, n: u32, shape: &[u32], rows: &mut [Vec<u32>], out: &mut Vec<Tableau>) {
    if next > n {
        out.push(Tableau(rows.to_vec()));
        return;
    }
    for i in 0..shape.len() {
        let len = rows[i].len();
        let fits = (len as u32) < shape[i] && (i == 0 || rows[i - 1].len() > len);
        if fits {
            rows[i].push(next);
            place(next + 1, n, shape, rows, out);
            rows[i].pop();
        }
    }
}

/// Dense univariate coefficient vectors, lowest degree first.
pub(crate) mod dense {
    use num_bigint::BigInt;
    use num_traits::{One, Zero};

    use crate::error::{Error, Result};

    pub fn q_factorial(n: u32) -> Vec<BigInt> {
        let mut c = vec![BigInt::one()];
        for i in 2..=n as usize {
            let mut next = vec![BigInt::zero(); c.len() + i - 1];
            for (d, x) in c.iter().enumerate() {
                for slot in &mut next[d..d + i] {
                    *slot += x;
                }
            }
            c = next;
        }
        c
    }

    /// Divides in place by `[h]_q = (1 - q^h)/(1 - q)`.
    pub fn div_q_int(c: &mut Vec<BigInt>, h: u32) -> Result<()> {
        let h = h as usize;
        if h <= 1 {
            return Ok(());
        }
        // times (1 - q)
        let mut g = Vec::with_capacity(c.len() + 1);
        g.push(c[0].clone());
        for i in 1..c.len() {
            g.push(&c[i] - &c[i - 1]);
        }
        g.push(-c[c.len() - 1].clone());
        // divided by (1 - q^h)
        if g.len() < h {
            return Err(Error::InexactDivision);
        }
        let qlen = g.len() - h;
        let mut r: Vec<BigInt> = Vec::with_capacity(qlen);
        for i in 0..qlen {
            let carry = if i >= h {
                r[i - h].clone()
            } else {
                BigInt::zero()
            };
            r.push(&g[i] + carry);
        }
        for i in qlen..g.len() {
            let carry = if i >= h {
                r[i - h].clone()
            } else {
                BigInt::zero()
            };
            if !(&g[i] + carry).is_zero() {
                return Err(Error::InexactDivision);
            }
        }
        while r.len() > 1 && r.last().is_some_and(|x| x.is_zero()) {
            r.pop();
        }
        *c = r;
        Ok(())
    }
}
