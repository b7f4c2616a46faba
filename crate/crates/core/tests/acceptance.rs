//! End-to-end acceptance checks, one line per criterion.
//!
//! Runs without the libtest harness so the summary lines always reach the
//! terminal; exits non-zero if any criterion fails.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;

use compstat::comp::{macmahon_image, Composition};
use compstat::dist::{
    a_k_partition_sum, check_geneuler, check_genfuncid, check_product_identity, dc_total,
    dc_total_rational, h_k_carlitz, h_k_hooksum, ic_total, DistTable, TableKind,
};
use compstat::oeis::{cross_check, BFile, FixtureMeta};
use compstat::partition::{
    f_lambda, f_lambda_q, hook_lengths, partitions_of, syt_enumerate, Partition,
};
use compstat::qfun::qbinomial_theorem_check;
use compstat::verify::{
    check_dc_oracle, check_foata, check_ic_oracle, check_joint, check_macmahon_forward,
    check_mahonian, check_perm_equidist, check_sorting_lemma,
};
use compstat::{Monomial, Poly, Var};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

/// Cells of a golden grid, rows in file order (header dropped).
fn read_grid(name: &str) -> Vec<Vec<BigUint>> {
    let text = std::fs::read_to_string(fixtures().join("golden").join(name)).unwrap();
    text.lines()
        .skip(1)
        .map(|l| {
            l.split_whitespace()
                .skip(1)
                .map(|c| c.parse().unwrap())
                .collect()
        })
        .collect()
}

fn compare_grid(table: &DistTable, grid: &[Vec<BigUint>]) -> Result<usize, String> {
    let mut cells = 0;
    for (n, row) in grid.iter().enumerate() {
        for (r, want) in row.iter().enumerate() {
            let got = table.get(n as u32, r as u32);
            if &got != want {
                return Err(format!("n={n}, r={r}: computed {got}, table has {want}"));
            }
            cells += 1;
        }
    }
    Ok(cells)
}

fn within(limit: Duration, start: Instant) -> Result<Duration, String> {
    let took = start.elapsed();
    if took > limit {
        return Err(format!("took {took:.1?}, limit {limit:?}"));
    }
    Ok(took)
}

fn pq(terms: &[(i64, u32, u32)], a: Var, b: Var) -> Poly {
    Poly::from_terms(
        terms
            .iter()
            .map(|&(c, i, j)| (Monomial::from_pairs(&[(a, i), (b, j)]), c.into())),
    )
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let table = DistTable::from_series(&ic_total(16), Var::Q, TableKind::IcN, None)
        .map_err(|e| e.to_string())?;
    let cells = compare_grid(&table, &read_grid("ic_rn_grid.txt"))?;
    let took = within(Duration::from_secs(10), start)?;
    Ok(format!(
        "{cells} cells of ic_r(n), n <= 16, r <= 12 ({took:.1?})"
    ))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let grid = read_grid("dc_rn_grid.txt");
    let series = dc_total(16);
    let direct =
        DistTable::from_series(&series, Var::T, TableKind::DcN, None).map_err(|e| e.to_string())?;
    let cells = compare_grid(&direct, &grid)?;
    let rational = dc_total_rational(16).map_err(|e| e.to_string())?;
    if rational != series {
        return Err("rational form differs from the partition sum".into());
    }
    let took = within(Duration::from_secs(10), start)?;
    Ok(format!(
        "{cells} cells of dc_r(n), partition sum and rational form ({took:.1?})"
    ))
}

fn criterion_3() -> Outcome {
    use Var::{P, Q, T};
    #[rustfmt::skip]
    let h = [
        pq(&[(1, 0, 0)], P, Q),
        pq(&[(1, 0, 0)], P, Q),
        pq(&[(1, 0, 0), (1, 1, 1)], P, Q),
        pq(&[(1, 0, 0), (1, 1, 1), (1, 2, 1), (1, 1, 2), (1, 2, 2), (1, 3, 3)], P, Q),
        pq(
            &[
                (1, 0, 0),
                (1, 1, 1), (1, 2, 1), (1, 3, 1),
                (1, 1, 2), (2, 2, 2), (1, 3, 2), (1, 4, 2),
                (1, 1, 3), (1, 2, 3), (2, 3, 3), (1, 4, 3), (1, 5, 3),
                (1, 2, 4), (1, 3, 4), (2, 4, 4), (1, 5, 4),
                (1, 3, 5), (1, 4, 5), (1, 5, 5),
                (1, 6, 6),
            ],
            P,
            Q,
        ),
    ];
    #[rustfmt::skip]
    let a = [
        pq(&[(1, 0, 0)], Q, T),
        pq(&[(1, 0, 0)], Q, T),
        pq(&[(1, 0, 0), (1, 1, 1)], Q, T),
        pq(&[(1, 0, 0), (2, 1, 1), (2, 2, 1), (1, 3, 2)], Q, T),
        pq(
            &[
                (1, 0, 0),
                (3, 1, 1), (4, 2, 1), (3, 3, 1), (1, 4, 1),
                (1, 2, 2), (3, 3, 2), (4, 4, 2), (3, 5, 2),
                (1, 6, 3),
            ],
            Q,
            T,
        ),
    ];
    for k in 0..=4u32 {
        let want = &h[k as usize];
        if &h_k_hooksum(k) != want {
            return Err(format!("hook-sum H_{k} = {}", h_k_hooksum(k)));
        }
        if &h_k_carlitz(k) != want {
            return Err(format!("Carlitz H_{k} = {}", h_k_carlitz(k)));
        }
        if a_k_partition_sum(k) != a[k as usize] {
            return Err(format!("A_{k} = {}", a_k_partition_sum(k)));
        }
    }
    Ok("H_0..H_4 (hook sum, recurrence) and A_0..A_4".into())
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let ic = check_ic_oracle(6, 14).map_err(|c| c.to_string())?;
    let dc = check_dc_oracle(6, 14).map_err(|c| c.to_string())?;
    let joint = check_joint(4, 9).map_err(|c| c.to_string())?;
    let took = within(Duration::from_secs(120), start)?;
    Ok(format!(
        "IC/DC k <= 6 cap 14 ({} + {} cases), joint k <= 4 cap 9 ({joint} cases) ({took:.1?})",
        ic, dc
    ))
}

fn criterion_5() -> Outcome {
    let round_trips = check_macmahon_forward(12).map_err(|c| c.to_string())?;
    let lemma = check_sorting_lemma(12).map_err(|c| c.to_string())?;
    if round_trips != 4095 {
        return Err(format!("expected 4095 compositions, saw {round_trips}"));
    }
    let sigma: Composition = "4,2,1,2,1,5,3".parse().unwrap();
    let img = macmahon_image(&sigma);
    let got = (
        img.perm.to_string(),
        img.partition.to_string(),
        img.perm.maj(),
    );
    let want = ("6172435".to_string(), "2,2,1,1,1,1,1".to_string(), 9);
    if got != want {
        return Err(format!("example: got {got:?}, want {want:?}"));
    }
    Ok(format!(
        "{round_trips} round trips, {lemma} lemma cases, worked example"
    ))
}

fn criterion_6() -> Outcome {
    let eq = check_perm_equidist(7).map_err(|c| c.to_string())?;
    let foata = check_foata(7).map_err(|c| c.to_string())?;
    let mahonian = check_mahonian(7).map_err(|c| c.to_string())?;
    Ok(format!(
        "equidistribution {eq}, Foata {foata}, [k]_q! {mahonian} cases for k <= 7"
    ))
}

fn criterion_7() -> Outcome {
    check_product_identity(4, 8, 8).map_err(|c| format!("product: {c}"))?;
    check_geneuler(6).map_err(|c| format!("geneuler: {c}"))?;
    for k in 0..=5 {
        check_genfuncid(k, 12).map_err(|c| format!("genfuncid: {c}"))?;
    }
    if !qbinomial_theorem_check(8) {
        return Err("q-binomial theorem".into());
    }
    Ok("product, geneuler, genfuncid, q-binomial".into())
}

fn criterion_8() -> Outcome {
    let shape: Partition = "4,4,2,1".parse().unwrap();
    let hooks = hook_lengths(&shape).map_err(|e| e.to_string())?;
    if hooks != vec![vec![7, 5, 3, 2], vec![6, 4, 2, 1], vec![3, 1], vec![1]] {
        return Err(format!("hook grid {hooks:?}"));
    }
    let mut shapes = 0;
    // Hook lengths are only defined for nonempty shapes.
    for lambda in (1..=7).flat_map(partitions_of) {
        let tableaux = syt_enumerate(&lambda).map_err(|e| e.to_string())?;
        let f = f_lambda(&lambda).map_err(|e| e.to_string())?;
        if f != BigUint::from(tableaux.len()) {
            return Err(format!("f^{lambda} = {f}, {} tableaux", tableaux.len()));
        }
        let by_maj: Poly = tableaux
            .iter()
            .map(|t| Poly::var_pow(Var::Q, t.maj()))
            .sum();
        if f_lambda_q(&lambda, Var::Q).map_err(|e| e.to_string())? != by_maj {
            return Err(format!(
                "f^{lambda}(q) differs from the tableau major index sum"
            ));
        }
        shapes += 1;
    }
    let mut factorial = BigUint::from(1u32);
    for k in 1..=8u32 {
        factorial *= k;
        let sum: BigUint = partitions_of(k)
            .iter()
            .map(|l| {
                let f = f_lambda(l).unwrap();
                &f * &f
            })
            .sum();
        if sum != factorial {
            return Err(format!("Σ (f^λ)^2 over λ ⊢ {k} is {sum}"));
        }
    }
    Ok(format!(
        "hook grid, {shapes} shapes 1 <= |λ| <= 7, Σ (f^λ)^2 = k! for k <= 8"
    ))
}

fn criterion_9() -> Outcome {
    let dir = fixtures().join("oeis");
    let meta = FixtureMeta::read(&dir.join("sequences.json")).map_err(|e| e.to_string())?;
    let mut summary = Vec::new();
    for spec in &meta.sequences {
        let path = dir.join(format!("b{}.txt", &spec.id[1..]));
        let bfile = BFile::read(&spec.id, &path).map_err(|e| e.to_string())?;
        let report = cross_check(spec, &bfile, 16).map_err(|e| e.to_string())?;
        if !report.passed() {
            return Err(format!("{}: {:?}", spec.id, report.first_mismatch));
        }
        summary.push(format!("{} {}/{}", spec.id, report.agreed, report.compared));
    }
    if summary.len() != 5 {
        return Err(format!("expected 5 fixtures, found {}", summary.len()));
    }
    Ok(summary.join(", "))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("inversion table", criterion_1),
        ("descent table", criterion_2),
        ("listed polynomials", criterion_3),
        ("oracle equivalence", criterion_4),
        ("bijection suite", criterion_5),
        ("permutation identities", criterion_6),
        ("identity verifications", criterion_7),
        ("hook-length suite", criterion_8),
        ("OEIS cross-check", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
