//! Permutations of `{1..k}`, their statistics, and the Foata bijection.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exec::{self, Exec};
use crate::poly::{Monomial, Poly, Var};

/// Largest `k` for which `S_k` is enumerated.
pub const MAX_PERM_SIZE: usize = 10;

/// Statistics on permutations and compositions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Stat {
    /// `|α|`, the sum of the entries
    Sum,
    Inv,
    Des,
    Maj,
    Comaj,
    /// `maj` of the inverse
    Imaj,
    /// `des` of the inverse
    Ides,
    /// `comaj` of the inverse
    Icomaj,
}

impl Stat {
    pub fn name(self) -> &'static str {
        match self {
            Stat::Sum => "sum",
            Stat::Inv => "inv",
            Stat::Des => "des",
            Stat::Maj => "maj",
            Stat::Comaj => "comaj",
            Stat::Imaj => "imaj",
            Stat::Ides => "ides",
            Stat::Icomaj => "icomaj",
        }
    }
}

impl fmt::Display for Stat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Stat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Stat> {
        Ok(match s {
            "sum" => Stat::Sum,
            "inv" => Stat::Inv,
            "des" => Stat::Des,
            "maj" => Stat::Maj,
            "comaj" => Stat::Comaj,
            "imaj" => Stat::Imaj,
            "ides" => Stat::Ides,
            "icomaj" => Stat::Icomaj,
            other => {
                return Err(Error::Invalid {
                    what: "statistic",
                    msg: other.to_string(),
                })
            }
        })
    }
}

/// Descent positions (1-based) of any sequence.
pub fn descent_set<T: Ord>(xs: &[T]) -> Vec<u32> {
    xs.windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1])
        .map(|(i, _)| i as u32 + 1)
        .collect()
}

/// Number of pairs `i < j` with `xs[i] > xs[j]`.
pub fn inversions<T: Ord>(xs: &[T]) -> u32 {
    let mut n = 0;
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            if xs[i] > xs[j] {
                n += 1;
            }
        }
    }
    n
}

/// `Σ_{i ∈ D} (k - i)`
pub(crate) fn comaj_of(descents: &[u32], k: usize) -> u32 {
    descents.iter().map(|&i| k as u32 - i).sum()
}

/// A permutation of `{1..k}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u32>);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermStats {
    pub inv: u32,
    pub des: u32,
    pub descent_set: Vec<u32>,
    pub maj: u32,
    pub comaj: u32,
    pub imaj: u32,
    pub ides: u32,
    pub icomaj: u32,
}

impl Permutation {
    pub fn new(oneline: Vec<u32>) -> Result<Self> {
        let k = oneline.len();
        let mut seen = vec![false; k + 1];
        for &x in &oneline {
            if x == 0 || x as usize > k || std::mem::replace(&mut seen[x as usize], true) {
                return Err(Error::Invalid {
                    what: "permutation",
                    msg: format!("{oneline:?} is not a rearrangement of 1..={k}"),
                });
            }
        }
        Ok(Permutation(oneline))
    }

    pub fn identity(k: usize) -> Self {
        Permutation((1..=k as u32).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn oneline(&self) -> &[u32] {
        &self.0
    }

    /// `result[i] = j` such that `self[j] = i` (1-based).
    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (j, &x) in self.0.iter().enumerate() {
            inv[x as usize - 1] = j as u32 + 1;
        }
        Permutation(inv)
    }

    pub fn inv(&self) -> u32 {
        inversions(&self.0)
    }

    pub fn descent_set(&self) -> Vec<u32> {
        descent_set(&self.0)
    }

    pub fn des(&self) -> u32 {
        self.descent_set().len() as u32
    }

    pub fn maj(&self) -> u32 {
        self.descent_set().iter().sum()
    }

    pub fn comaj(&self) -> u32 {
        comaj_of(&self.descent_set(), self.len())
    }

    pub fn stats(&self) -> PermStats {
        let d = self.descent_set();
        let id = self.inverse().descent_set();
        let k = self.len();
        PermStats {
            inv: self.inv(),
            des: d.len() as u32,
            maj: d.iter().sum(),
            comaj: comaj_of(&d, k),
            descent_set: d,
            imaj: id.iter().sum(),
            ides: id.len() as u32,
            icomaj: comaj_of(&id, k),
        }
    }

    /// Value of a single statistic. `Sum` is the sum of the entries.
    pub fn stat(&self, s: Stat) -> u32 {
        match s {
            Stat::Sum => self.0.iter().sum(),
            Stat::Inv => self.inv(),
            Stat::Des => self.des(),
            Stat::Maj => self.maj(),
            Stat::Comaj => self.comaj(),
            Stat::Imaj => self.inverse().maj(),
            Stat::Ides => self.inverse().des(),
            Stat::Icomaj => self.inverse().comaj(),
        }
    }

    /// Lexicographic successor, or `None` at the last permutation.
    pub fn next_lex(&self) -> Option<Permutation> {
        let mut a = self.0.clone();
        let i = a.windows(2).rposition(|w| w[0] < w[1])?;
        let j = a.iter().rposition(|&x| x > a[i]).expect("a[i+1] > a[i]");
        a.swap(i, j);
        a[i + 1..].reverse();
        Some(Permutation(a))
    }

    /// The permutation of rank `rank` (0-based) in lexicographic order.
    pub fn unrank(k: usize, mut rank: u64) -> Permutation {
        let mut pool: Vec<u32> = (1..=k as u32).collect();
        let mut out = Vec::with_capacity(k);
        for i in (0..k).rev() {
            let f = factorial_u64(i);
            let idx = (rank / f) as usize;
            rank %= f;
            out.push(pool.remove(idx));
        }
        Permutation(out)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.len() <= 9 { "" } else { "," };
        let s: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&s.join(sep))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |x: &str| Error::Invalid {
            what: "permutation",
            msg: format!("{x:?} is not a positive integer"),
        };
        let values = if s.contains(',') {
            s.split(',')
                .map(|x| x.trim().parse::<u32>().map_err(|_| bad(x)))
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).ok_or_else(|| bad(&c.to_string())))
                .collect::<Result<Vec<_>>>()?
        };
        Permutation::new(values)
    }
}

pub(crate) fn factorial_u64(n: usize) -> u64 {
    (1..=n as u64).product()
}

fn check_size(k: usize) -> Result<()> {
    if k > MAX_PERM_SIZE {
        return Err(Error::TooLarge {
            what: "k",
            value: k,
            max: MAX_PERM_SIZE,
        });
    }
    Ok(())
}

/// Iterator over `S_k` in lexicographic order.
#[derive(Clone, Debug)]
pub struct Perms {
    next: Option<Permutation>,
    remaining: u64,
}

impl Iterator for Perms {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let cur = self.next.take()?;
        self.next = cur.next_lex();
        Some(cur)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        (self.remaining as usize, Some(self.remaining as usize))
    }
}

impl ExactSizeIterator for Perms {}

/// All `k!` permutations of `{1..k}` in lexicographic order.
pub fn all_perms(k: usize) -> Result<Perms> {
    check_size(k)?;
    Ok(perm_range(k, 0, factorial_u64(k)))
}

/// `count` consecutive permutations in lexicographic order, from rank `start`.
fn perm_range(k: usize, start: u64, count: u64) -> Perms {
    Perms {
        next: Some(Permutation::unrank(k, start)),
        remaining: count,
    }
}

/// Number of lexicographic chunks the brute-force sums are split into.
const CHUNKS: u64 = 256;

/// `Σ_{π ∈ S_k} Π_i var_i^{stat_i(π)}` by enumeration.
pub fn dist_over_sk(k: usize, stats: &[(Stat, Var)]) -> Result<Poly> {
    dist_over_sk_with(k, stats, Exec::default())
}

pub fn dist_over_sk_with(k: usize, stats: &[(Stat, Var)], exec: Exec) -> Result<Poly> {
    check_size(k)?;
    let total = factorial_u64(k);
    let chunks = total.min(CHUNKS);
    Ok(exec::sum_range(chunks as usize, exec, |c| {
        let c = c as u64;
        let start = total * c / chunks;
        let end = total * (c + 1) / chunks;
        let mut counts: HashMap<Monomial, u64> = HashMap::new();
        for pi in perm_range(k, start, end - start) {
            *counts.entry(stat_monomial(&pi, stats)).or_default() += 1;
        }
        Poly::from_terms(counts.into_iter().map(|(m, c)| (m, BigInt::from(c))))
    }))
}

fn stat_monomial(pi: &Permutation, stats: &[(Stat, Var)]) -> Monomial {
    let s = pi.stats();
    let pairs: Vec<(Var, u32)> = stats
        .iter()
        .map(|&(st, v)| {
            let x = match st {
                Stat::Sum => pi.stat(Stat::Sum),
                Stat::Inv => s.inv,
                Stat::Des => s.des,
                Stat::Maj => s.maj,
                Stat::Comaj => s.comaj,
                Stat::Imaj => s.imaj,
                Stat::Ides => s.ides,
                Stat::Icomaj => s.icomaj,
            };
            (v, x)
        })
        .collect();
    Monomial::from_pairs(&pairs)
}

/// Foata's second fundamental transformation: `maj(π) = inv(foata(π))`, and
/// the descent set of the inverse is preserved.
///
/// Built letter by letter: before appending `x`, the current word is cut into
/// blocks that each end in a letter on the same side of `x` as the word's
/// last letter, and every block is rotated right by one.
pub fn foata(pi: &Permutation) -> Permutation {
    let mut word: Vec<u32> = Vec::with_capacity(pi.len());
    for &x in pi.oneline() {
        if let Some(&last) = word.last() {
            let big = last > x;
            let mut start = 0;
            for i in 0..word.len() {
                if (word[i] > x) == big {
                    word[start..=i].rotate_right(1);
                    start = i + 1;
                }
            }
        }
        word.push(x);
    }
    Permutation(word)
}

/// Inverse of [`foata`]: peel off the last letter, undo the block rotation,
/// and repeat on the prefix.
pub fn foata_inverse(pi: &Permutation) -> Permutation {
    let mut word = pi.oneline().to_vec();
    let mut tail: Vec<u32> = Vec::with_capacity(word.len());
    while let Some(x) = word.pop() {
        if let Some(&first) = word.first() {
            // after rotation each block starts with its marked letter
            let big = first > x;
            let mut start = 0;
            for i in 1..=word.len() {
                if i == word.len() || (word[i] > x) == big {
                    word[start..i].rotate_left(1);
                    start = i;
                }
            }
        }
        tail.push(x);
    }
    tail.reverse();
    Permutation(tail)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Var::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(perm("123").inverse(), perm("123"));
        assert_eq!(perm("6172435").inverse(), perm("2465713"));
        assert_eq!(perm("312").inverse(), perm("231"));
    }

    #[test]
    fn stats_examples() {
        let s = perm("6172435").stats();
        assert_eq!(s.descent_set, vec![1, 3, 5]);
        assert_eq!(s.maj, 9);
        for k in 0..6 {
            let s = Permutation::identity(k).stats();
            assert_eq!((s.inv, s.des, s.maj, s.comaj), (0, 0, 0, 0));
        }
        let s = perm("321").stats();
        assert_eq!((s.inv, s.maj, s.comaj), (3, 3, 3));
    }

    #[test]
    fn enumeration_sizes() {
        let e: Vec<_> = all_perms(0).unwrap().collect();
        assert_eq!(e, vec![Permutation::identity(0)]);
        assert_eq!(all_perms(3).unwrap().count(), 6);
        assert_eq!(all_perms(6).unwrap().count(), 720);
        let all: Vec<_> = all_perms(4).unwrap().collect();
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(all, sorted);
        assert!(matches!(all_perms(11), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn unrank_matches_iteration() {
        for (r, p) in all_perms(5).unwrap().enumerate() {
            assert_eq!(Permutation::unrank(5, r as u64), p);
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(perm("6172435").to_string(), "6172435");
        let big = Permutation::new((1..=10).rev().collect()).unwrap();
        assert_eq!(big.to_string(), "10,9,8,7,6,5,4,3,2,1");
        assert_eq!(big.to_string().parse::<Permutation>().unwrap(), big);
        assert!("1223".parse::<Permutation>().is_err());
        assert!("14".parse::<Permutation>().is_err());
    }

    #[test]
    fn foata_examples() {
        assert_eq!(foata(&perm("12")), perm("12"));
        assert_eq!(foata(&perm("21")), perm("21"));
        assert_eq!(foata(&perm("132")), perm("312"));
        assert_eq!(foata_inverse(&perm("12")), perm("12"));
        assert_eq!(foata_inverse(&perm("312")), perm("132"));
        for pi in all_perms(5).unwrap() {
            assert_eq!(foata_inverse(&foata(&pi)), pi);
        }
    }

    #[test]
    fn foata_properties() {
        for k in 0..=7 {
            for pi in all_perms(k).unwrap() {
                let f = foata(&pi);
                assert_eq!(pi.maj(), f.inv(), "{pi}");
                assert_eq!(
                    pi.inverse().descent_set(),
                    f.inverse().descent_set(),
                    "{pi}"
                );
            }
        }
    }

    #[test]
    fn dist_examples() {
        let h2 = dist_over_sk(2, &[(Stat::Maj, P), (Stat::Inv, Q)]).unwrap();
        assert_eq!(h2.to_string(), "1 + p q");
        let a3 = dist_over_sk(3, &[(Stat::Inv, Q), (Stat::Des, T)]).unwrap();
        // 1 + (2q + 2q^2)t + q^3t^2
        let expected = Poly::from_terms([
            (Monomial::ONE, 1.into()),
            (Monomial::from_pairs(&[(Q, 1), (T, 1)]), 2.into()),
            (Monomial::from_pairs(&[(Q, 2), (T, 1)]), 2.into()),
            (Monomial::from_pairs(&[(Q, 3), (T, 2)]), 1.into()),
        ]);
        assert_eq!(a3, expected);
        assert!(matches!(
            dist_over_sk(11, &[(Stat::Inv, Q)]),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn parallel_and_sequential_agree() {
        let stats = [(Stat::Maj, P), (Stat::Inv, Q), (Stat::Ides, T)];
        for k in 0..=7 {
            assert_eq!(
                dist_over_sk_with(k, &stats, Exec::Sequential).unwrap(),
                dist_over_sk_with(k, &stats, Exec::Parallel).unwrap()
            );
        }
    }

    #[test]
    fn maj_plus_comaj() {
        for k in 0..=7 {
            for pi in all_perms(k).unwrap() {
                assert_eq!(pi.maj() + pi.comaj(), k as u32 * pi.des());
                assert_eq!(pi.inv(), pi.inverse().inv());
            }
        }
    }
}
