//! Verification suites: each closed form or bijection against its
//! enumeration oracle, reporting the first counterexample on failure.

use std::fmt;
use std::str::FromStr;

use crate::comp::{
    all_compositions, dist_over_ck, macmahon_forward, macmahon_inverse, sorting_perm, Composition,
};
use crate::dist::{
    check_geneuler, check_genfuncid, check_product_identity, dc_of_k, ic_of_k, joint_closed,
};
use crate::error::{Error, Result};
use crate::exec::{self, Exec};
use crate::partition::partitions_of_length;
use crate::perm::{all_perms, dist_over_sk, foata, foata_inverse, Stat};
use crate::poly::{Poly, Series, Var};
use crate::qfun::q_factorial;

use Var::{P, Q, T, U, V};

/// A failed check: what was tested and how the two sides differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub input: String,
    pub expected: String,
    pub actual: String,
    pub detail: String,
}

impl Counterexample {
    fn new(
        input: impl fmt::Display,
        expected: impl fmt::Display,
        actual: impl fmt::Display,
    ) -> Self {
        Counterexample {
            input: input.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            detail: String::new(),
        }
    }
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "input: {}\nexpected: {}\nactual: {}",
            self.input, self.expected, self.actual
        )?;
        if !self.detail.is_empty() {
            write!(f, "\n{}", self.detail)?;
        }
        Ok(())
    }
}

type CheckResult = std::result::Result<u64, Counterexample>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Prod,
    Geneuler,
    Genfuncid,
    Lemma,
    Macmahon,
    Jointstat,
    Foata,
    Equidist,
}

impl Suite {
    pub const EACH: [Suite; 8] = [
        Suite::Prod,
        Suite::Geneuler,
        Suite::Genfuncid,
        Suite::Lemma,
        Suite::Macmahon,
        Suite::Jointstat,
        Suite::Foata,
        Suite::Equidist,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Prod => "prod",
            Suite::Geneuler => "geneuler",
            Suite::Genfuncid => "genfuncid",
            Suite::Lemma => "lemma",
            Suite::Macmahon => "macmahon",
            Suite::Jointstat => "jointstat",
            Suite::Foata => "foata",
            Suite::Equidist => "equidist",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        std::iter::once(Suite::All)
            .chain(Suite::EACH)
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Invalid {
                what: "suite",
                msg: s.to_string(),
            })
    }
}

/// Optional size parameters; each suite fills in its own defaults.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Scale {
    pub k: Option<u32>,
    pub cap: Option<u32>,
    pub max_n: Option<u32>,
}

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub cases: u64,
    pub failure: Option<Counterexample>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    fn from(name: String, r: CheckResult) -> Self {
        match r {
            Ok(cases) => CheckOutcome {
                name,
                cases,
                failure: None,
            },
            Err(c) => CheckOutcome {
                name,
                cases: 0,
                failure: Some(c),
            },
        }
    }
}

fn bound(what: &'static str, value: u32, max: u32) -> Result<u32> {
    if value > max {
        return Err(Error::TooLarge {
            what,
            value: value as usize,
            max: max as usize,
        });
    }
    Ok(value)
}

/// Runs a suite (or all of them) at the given scale.
pub fn run_suite(suite: Suite, scale: &Scale) -> Result<Vec<CheckOutcome>> {
    if suite == Suite::All {
        let mut out = Vec::new();
        for s in Suite::EACH {
            out.extend(run_suite(s, scale)?);
        }
        return Ok(out);
    }
    let outcomes = match suite {
        Suite::Prod => {
            let k = bound("K", scale.k.unwrap_or(4), 6)?;
            let cap = bound("cap", scale.cap.unwrap_or(8), 12)?;
            vec![CheckOutcome::from(
                format!("prod: K={k}, caps=({cap},{cap})"),
                check_product_identity(k, cap, cap).map(|_| 1),
            )]
        }
        Suite::Geneuler => {
            let k = bound("K", scale.k.unwrap_or(6), 7)?;
            vec![CheckOutcome::from(
                format!("geneuler: m<={k}"),
                check_geneuler(k).map(|_| k as u64),
            )]
        }
        Suite::Genfuncid => {
            let k = bound("k", scale.k.unwrap_or(5), 10)?;
            let cap = bound("cap", scale.cap.unwrap_or(12), 24)?;
            let r = (1..=k).try_fold(0, |n, kk| check_genfuncid(kk, cap.max(kk)).map(|_| n + 1));
            vec![CheckOutcome::from(
                format!("genfuncid: k<={k}, cap={cap}"),
                r,
            )]
        }
        Suite::Lemma => {
            let n = bound("max_n", scale.max_n.unwrap_or(12), 16)?;
            vec![CheckOutcome::from(
                format!("lemma: |σ|<={n}"),
                check_sorting_lemma(n),
            )]
        }
        Suite::Macmahon => {
            let n = bound("max_n", scale.max_n.unwrap_or(12), 16)?;
            let k = bound("k", scale.k.unwrap_or(5), 7)?;
            let m = n.min(10);
            vec![
                CheckOutcome::from(
                    format!("macmahon forward: |σ|<={n}"),
                    check_macmahon_forward(n),
                ),
                CheckOutcome::from(
                    format!("macmahon inverse: k<={k}, |λ|<={m}"),
                    check_macmahon_inverse(k as usize, m),
                ),
            ]
        }
        Suite::Jointstat => {
            let k = bound("k", scale.k.unwrap_or(4), 6)?;
            let cap = bound("cap", scale.cap.unwrap_or(9), 14)?;
            vec![
                CheckOutcome::from(
                    format!("jointstat: k<={k}, cap={cap}"),
                    check_joint(k as usize, cap),
                ),
                CheckOutcome::from(
                    format!("IC oracle: k<={k}, cap={cap}"),
                    check_ic_oracle(k, cap),
                ),
                CheckOutcome::from(
                    format!("DC oracle: k<={k}, cap={cap}"),
                    check_dc_oracle(k, cap),
                ),
            ]
        }
        Suite::Foata => {
            let k = bound("k", scale.k.unwrap_or(7), 8)?;
            vec![CheckOutcome::from(
                format!("foata: k<={k}"),
                check_foata(k as usize),
            )]
        }
        Suite::Equidist => {
            let k = bound("k", scale.k.unwrap_or(7), 8)?;
            let cap = bound("cap", scale.cap.unwrap_or(12), 14)?;
            let ck = k.min(5);
            vec![
                CheckOutcome::from(
                    format!("permutation equidistribution: k<={k}"),
                    check_perm_equidist(k as usize),
                ),
                CheckOutcome::from(
                    format!("maj and inv give [k]_q!: k<={k}"),
                    check_mahonian(k as usize),
                ),
                CheckOutcome::from(
                    format!("composition equidistribution: k<={ck}, cap={cap}"),
                    check_comp_equidist(ck as usize, cap),
                ),
                CheckOutcome::from(
                    format!("reversal invariance: k<={ck}, cap={cap}"),
                    check_reversal(ck as usize, cap),
                ),
            ]
        }
        Suite::All => unreachable!(),
    };
    Ok(outcomes)
}

fn compositions_up_to(max_n: u32) -> Vec<Composition> {
    (1..=max_n)
        .flat_map(|n| all_compositions(n).expect("within bound"))
        .collect()
}

/// For `π = sorting_perm(σ)`: `inv(π) = inv(σ^R)`, `imaj(π) = comaj(σ^R)`,
/// `icomaj(π) = maj(σ^R)` and `ides(π) = des(σ^R)`.
pub fn check_sorting_lemma(max_n: u32) -> CheckResult {
    let all = compositions_up_to(max_n);
    exec::try_all(&all, Exec::default(), |sigma| {
        let pi = sorting_perm(sigma).expect("nonempty");
        let ps = pi.stats();
        let rs = sigma.reverse().stats();
        let got = (ps.inv, ps.imaj, ps.icomaj, ps.ides);
        let want = (rs.inv, rs.comaj, rs.maj, rs.des);
        if got != want {
            return Err(Counterexample::new(
                format!("σ={sigma}, π={pi}"),
                format!("(inv, comaj, maj, des)(σ^R) = {want:?}"),
                format!("(inv, imaj, icomaj, ides)(π) = {got:?}"),
            ));
        }
        Ok(())
    })?;
    Ok(all.len() as u64)
}

/// `|λ| + maj(π) = |σ|` and `inverse(forward(σ)) = σ`.
pub fn check_macmahon_forward(max_n: u32) -> CheckResult {
    let all = compositions_up_to(max_n);
    exec::try_all(&all, Exec::default(), |sigma| {
        let (pi, lambda) = macmahon_forward(sigma);
        if lambda.len() != sigma.len() || lambda.size() + pi.maj() != sigma.sum() {
            return Err(Counterexample::new(
                format!("σ={sigma}"),
                format!("k={} and |λ|+maj(π)={}", sigma.len(), sigma.sum()),
                format!("π={pi}, λ={lambda}"),
            ));
        }
        let back = macmahon_inverse(&pi, &lambda)
            .map_err(|e| Counterexample::new(format!("π={pi}, λ={lambda}"), sigma, e))?;
        if &back != sigma {
            return Err(Counterexample::new(format!("σ={sigma}"), sigma, back));
        }
        Ok(())
    })?;
    Ok(all.len() as u64)
}

/// `forward(inverse(π, λ)) = (π, λ)` for every `π ∈ S_k` and `k`-partition
/// `λ` with `|λ| <= max_size`.
pub fn check_macmahon_inverse(max_k: usize, max_size: u32) -> CheckResult {
    let mut cases = 0;
    for k in 1..=max_k {
        let lambdas: Vec<_> = (k as u32..=max_size)
            .flat_map(|n| partitions_of_length(n, k))
            .collect();
        for pi in all_perms(k).expect("k within bound") {
            for lambda in &lambdas {
                let sigma = macmahon_inverse(&pi, lambda).map_err(|e| {
                    Counterexample::new(format!("π={pi}, λ={lambda}"), "a composition", e)
                })?;
                let (p2, l2) = macmahon_forward(&sigma);
                if p2 != pi || &l2 != lambda {
                    return Err(Counterexample::new(
                        format!("π={pi}, λ={lambda}"),
                        format!("({pi}, {lambda})"),
                        format!("({p2}, {l2}) via σ={sigma}"),
                    ));
                }
                cases += 1;
            }
        }
    }
    Ok(cases)
}

fn compare_series(
    input: String,
    expected: &Series,
    actual: &Series,
) -> std::result::Result<(), Counterexample> {
    if expected == actual {
        return Ok(());
    }
    let diff = expected.body() - actual.body();
    let detail = diff
        .terms()
        .next()
        .map(|(m, _)| {
            format!(
                "coefficient of {m}: expected {}, got {}",
                expected.coeff(m),
                actual.coeff(m)
            )
        })
        .unwrap_or_else(|| "caps differ".into());
    Err(Counterexample {
        input,
        expected: expected.to_string(),
        actual: actual.to_string(),
        detail,
    })
}

const JOINT_STATS: [(Stat, Var); 5] = [
    (Stat::Sum, P),
    (Stat::Inv, Q),
    (Stat::Comaj, T),
    (Stat::Maj, U),
    (Stat::Des, V),
];

/// The five-variable closed form against enumeration of `C_k`.
pub fn check_joint(max_k: usize, cap: u32) -> CheckResult {
    for k in 1..=max_k {
        let closed = joint_closed(k, cap.max(k as u32)).expect("k within bound");
        let brute = dist_over_ck(k, cap.max(k as u32), &JOINT_STATS).expect("cap within bound");
        compare_series(format!("k={k}, cap={cap}"), &brute, &closed)?;
    }
    Ok(max_k as u64)
}

pub fn check_ic_oracle(max_k: u32, cap: u32) -> CheckResult {
    for k in 1..=max_k {
        let c = cap.max(k);
        let closed = ic_of_k(k, c).expect("cap >= k");
        let brute = dist_over_ck(k as usize, c, &[(Stat::Sum, P), (Stat::Inv, Q)])
            .expect("cap within bound");
        compare_series(format!("IC k={k}, cap={c}"), &brute, &closed)?;
    }
    Ok(max_k as u64)
}

pub fn check_dc_oracle(max_k: u32, cap: u32) -> CheckResult {
    for k in 1..=max_k {
        let c = cap.max(k);
        let closed = dc_of_k(k, c).expect("cap >= k");
        let brute = dist_over_ck(k as usize, c, &[(Stat::Sum, Q), (Stat::Des, T)])
            .expect("cap within bound");
        compare_series(format!("DC k={k}, cap={c}"), &brute, &closed)?;
    }
    Ok(max_k as u64)
}

/// `maj(π) = inv(φ(π))`, `D(π^-1) = D(φ(π)^-1)` and `φ^-1(φ(π)) = π`.
pub fn check_foata(max_k: usize) -> CheckResult {
    let mut cases = 0;
    for k in 0..=max_k {
        for pi in all_perms(k).expect("k within bound") {
            let f = foata(&pi);
            if pi.maj() != f.inv() {
                return Err(Counterexample::new(
                    format!("π={pi}"),
                    format!("inv(φ(π)) = {}", pi.maj()),
                    format!("φ(π)={f}, inv={}", f.inv()),
                ));
            }
            if pi.inverse().descent_set() != f.inverse().descent_set() {
                return Err(Counterexample::new(
                    format!("π={pi}"),
                    format!("D(π^-1) = {:?}", pi.inverse().descent_set()),
                    format!("φ(π)={f}, D(φ(π)^-1) = {:?}", f.inverse().descent_set()),
                ));
            }
            let back = foata_inverse(&f);
            if back != pi {
                return Err(Counterexample::new(format!("φ(π)={f}"), &pi, back));
            }
            cases += 1;
        }
    }
    Ok(cases)
}

/// `(imaj, maj)`, `(inv, imaj)` and `(maj, inv)` share one distribution over
/// `S_k`, symmetric in its two variables.
pub fn check_perm_equidist(max_k: usize) -> CheckResult {
    for k in 0..=max_k {
        let dist = |a, b| dist_over_sk(k, &[(a, P), (b, Q)]).expect("k within bound");
        let base = dist(Stat::Imaj, Stat::Maj);
        for (a, b) in [(Stat::Inv, Stat::Imaj), (Stat::Maj, Stat::Inv)] {
            let other = dist(a, b);
            if other != base {
                return Err(Counterexample::new(
                    format!("k={k}, ({a},{b})"),
                    &base,
                    other,
                ));
            }
        }
        let swapped = base.rename(P, U).rename(Q, P).rename(U, Q);
        if swapped != base {
            return Err(Counterexample::new(
                format!("k={k}, p<->q symmetry"),
                &base,
                swapped,
            ));
        }
    }
    Ok(max_k as u64 + 1)
}

/// `Σ q^maj = Σ q^inv = [k]_q!` over `S_k`.
pub fn check_mahonian(max_k: usize) -> CheckResult {
    for k in 0..=max_k {
        let fact = q_factorial(k as u32);
        for s in [Stat::Maj, Stat::Inv] {
            let d = dist_over_sk(k, &[(s, Q)]).expect("k within bound");
            if d != fact {
                return Err(Counterexample::new(format!("k={k}, {s}"), &fact, d));
            }
        }
    }
    Ok(max_k as u64 + 1)
}

/// `(|·|, inv)`, `(|·|, maj)` and `(|·|, comaj)` share one distribution
/// over `C_k`.
pub fn check_comp_equidist(max_k: usize, cap: u32) -> CheckResult {
    for k in 1..=max_k {
        let c = cap.max(k as u32);
        let dist = |s| dist_over_ck(k, c, &[(Stat::Sum, P), (s, Q)]).expect("cap within bound");
        let base = dist(Stat::Inv);
        for s in [Stat::Maj, Stat::Comaj] {
            compare_series(format!("k={k}, cap={c}, {s} vs inv"), &base, &dist(s))?;
        }
    }
    Ok(max_k as u64)
}

/// The joint distribution over `C_k` is unchanged when every `σ` is replaced
/// by `σ^R`.
pub fn check_reversal(max_k: usize, cap: u32) -> CheckResult {
    for k in 1..=max_k {
        let c = cap.max(k as u32);
        let direct = dist_over_ck(k, c, &JOINT_STATS).expect("cap within bound");
        let mut reversed = Poly::zero();
        for n in 0..=c {
            for sigma in crate::comp::compositions_of(n, k).expect("cap within bound") {
                let s = sigma.reverse().stats();
                reversed.add_term(
                    crate::poly::Monomial::from_pairs(&[
                        (P, s.sum),
                        (Q, s.inv),
                        (T, s.comaj),
                        (U, s.maj),
                        (V, s.des),
                    ]),
                    1.into(),
                );
            }
        }
        compare_series(
            format!("k={k}, cap={c}"),
            &direct,
            &Series::new(reversed, P, c),
        )?;
    }
    Ok(max_k as u64)
}
