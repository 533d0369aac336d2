//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any failed.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use stringy_core::combinatorics::{
    angle_types, partitions_of, star_partition, AngleType, Partition, Permutation,
};
use stringy_core::exactalg::LPoly;
use stringy_core::oracle::{crosscheck_quotients, orbifold_e};
use stringy_core::report::Report;
use stringy_core::sectors::{
    age, age_value, enumerate_sectors, enumerate_sectors_with, phi, EnumerationOptions,
    Representatives, Sector,
};
use stringy_core::stringy::{stringy_e, untwisted};
use stringy_core::symfun::{chi_a, quotient_e, HExpr};
use stringy_core::toric::{
    build_delta_fan, combinatorial_check, fiber_product_check, multiplicity_check,
    verify_bundle_structure, verify_delta_fan,
};

type Outcome = Result<(), String>;

/// `Σ c L^k` from `(c, k)` pairs.
fn lp(terms: &[(i64, usize)]) -> LPoly {
    terms.iter().map(|&(c, k)| LPoly::monomial(c, k)).sum()
}

fn part(p: &[usize]) -> Partition {
    Partition::new(p.to_vec()).unwrap()
}

fn theta(l: &[usize], a: &[i64]) -> AngleType {
    AngleType::from_numerators(&part(l), a).unwrap()
}

fn perm(v: &[usize]) -> Permutation {
    Permutation::new(v.to_vec()).unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String, errors: &mut Vec<String>) {
    if !ok {
        errors.push(msg());
    }
}

fn finish(errors: Vec<String>) -> Outcome {
    if errors.is_empty() {
        Ok(())
    } else {
        Err(errors.join("; "))
    }
}

fn report_outcome(r: &Report, errors: &mut Vec<String>) {
    for c in r.failures() {
        errors.push(format!("{}: {} {}", r.title, c.name, c.detail));
    }
}

fn totals() -> Outcome {
    let expected = [
        (2, lp(&[(1, 5), (2, 4), (1, 3)])),
        (3, lp(&[(1, 7), (3, 6), (5, 5), (2, 4)])),
        (4, lp(&[(1, 9), (4, 8), (11, 7), (14, 6), (4, 5)])),
        (5, lp(&[(1, 11), (5, 10), (17, 9), (35, 8), (30, 7), (6, 6)])),
    ];
    let mut errors = Vec::new();
    for (n, want) in expected {
        let got = stringy_e(n).map_err(|e| e.to_string())?.total;
        if got != want {
            let orb = orbifold_e(n).map_err(|e| e.to_string())?;
            errors.push(format!(
                "n = {n}: expected {want}, computed {got} (orbifold oracle: {orb})"
            ));
        }
    }
    finish(errors)
}

fn block_total(sectors: &[Sector], l: &[usize], a: &[i64]) -> LPoly {
    let t = theta(l, a);
    let lambda = part(l);
    sectors
        .iter()
        .filter(|s| s.lambda == lambda && s.theta == t)
        .map(Sector::polynomial)
        .sum()
}

fn n_four_sectors() -> Outcome {
    let s = enumerate_sectors(4).map_err(|e| e.to_string())?;
    let blocks: [(&[usize], &[i64], LPoly); 12] = [
        (&[2, 1, 1], &[0, 0, 0], lp(&[(1, 8), (3, 7), (1, 6)])),
        (&[2, 1, 1], &[1, 0, 0], lp(&[(3, 7), (2, 6)])),
        (&[2, 2], &[0, 0], lp(&[(1, 7), (1, 6)])),
        (&[2, 2], &[0, 1], lp(&[(2, 6)])),
        (&[2, 2], &[1, 1], lp(&[(1, 6), (1, 5)])),
        (&[3, 1], &[0, 0], lp(&[(1, 7), (1, 6)])),
        (&[3, 1], &[1, 0], lp(&[(2, 6)])),
        (&[3, 1], &[2, 0], lp(&[(2, 6)])),
        (&[4], &[0], lp(&[(1, 6)])),
        (&[4], &[1], lp(&[(1, 5)])),
        (&[4], &[2], lp(&[(1, 5)])),
        (&[4], &[3], lp(&[(1, 5)])),
    ];
    let mut errors = Vec::new();
    for (l, a, want) in &blocks {
        let got = block_total(&s, l, a);
        ensure(got == *want, || format!("{l:?} {a:?}: expected {want}, got {got}"), &mut errors);
    }
    let four: LPoly = (0..4).map(|a| block_total(&s, &[4], &[a])).sum();
    ensure(four == lp(&[(1, 6), (3, 5)]), || format!("λ = (4) total {four}"), &mut errors);
    let covered: usize = blocks
        .iter()
        .map(|(l, a, _)| {
            let t = theta(l, a);
            s.iter().filter(|x| x.lambda == part(l) && x.theta == t).count()
        })
        .sum();
    ensure(covered == s.len(), || format!("{} sectors outside the listed blocks", s.len() - covered), &mut errors);

    // (φ, a) rows for λ = (2,1,1), θ = (1/2,0,0), keyed by representative
    let rows: [(&[usize], usize, usize, LPoly); 3] = [
        (&[1, 2, 3], 1, 2, lp(&[(1, 7), (1, 6)])),
        (&[2, 1, 3], 2, 2, lp(&[(1, 7)])),
        (&[2, 3, 1], 1, 2, lp(&[(1, 7), (1, 6)])),
    ];
    let t = theta(&[2, 1, 1], &[1, 0, 0]);
    let half: Vec<&Sector> = s.iter().filter(|x| x.theta == t && x.lambda == part(&[2, 1, 1])).collect();
    ensure(half.len() == 3, || format!("{} rows for (2,1,1), (1/2,0,0)", half.len()), &mut errors);
    for (rep, ph, a, poly) in rows {
        match half.iter().find(|x| x.rep == perm(rep)) {
            Some(x) => ensure(
                x.phi == ph && x.age == a && x.polynomial() == poly,
                || format!("row {rep:?}: phi {} age {} sector {}", x.phi, x.age, x.polynomial()),
                &mut errors,
            ),
            None => errors.push(format!("no row with representative {rep:?}")),
        }
    }
    for (a, ph, ag) in [(0, 2, 3), (1, 0, 4), (2, 0, 4), (3, 0, 4)] {
        let t = theta(&[4], &[a]);
        match s.iter().find(|x| x.lambda == part(&[4]) && x.theta == t) {
            Some(x) => ensure(
                x.phi == ph && x.age == ag,
                || format!("λ = (4), θ = ({a}/4): phi {} age {}", x.phi, x.age),
                &mut errors,
            ),
            None => errors.push(format!("no sector for λ = (4), θ = ({a}/4)")),
        }
    }
    finish(errors)
}

fn character() -> Outcome {
    let q = |c: &[i64]| LPoly::from_coeffs(c.to_vec());
    let expected = [
        HExpr::term(vec![1], q(&[1])),
        HExpr::term(vec![2], q(&[1, 1])),
        &HExpr::term(vec![3], q(&[1, 1, 1])) + &HExpr::term(vec![2, 1], q(&[0, 1])),
        &(&HExpr::term(vec![4], q(&[1, 1, 1, 1])) + &HExpr::term(vec![2, 2], q(&[0, 1, 1])))
            + &HExpr::term(vec![3, 1], q(&[0, 1, 1])),
    ];
    let mut errors = Vec::new();
    for (i, want) in expected.iter().enumerate() {
        let n = i + 1;
        let got = chi_a(n);
        ensure(got == *want, || format!("n = {n}: expected {want}, got {got}"), &mut errors);
    }
    finish(errors)
}

fn binomial(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i as i64 + 1))
}

fn quotient_closed_forms() -> Outcome {
    let mut errors = Vec::new();
    for n in 1..=7 {
        let got = quotient_e(n, &part(&[n])).map_err(|e| e.to_string())?;
        let want = LPoly::from_coeffs(vec![1, 1]).pow(n as u32 - 1);
        ensure(got == want, || format!("r = {n}: {got}"), &mut errors);
        let binom: Vec<i64> = (0..n).map(|k| binomial(n - 1, k)).collect();
        ensure(
            got.to_i64_vec().as_deref() == Some(&binom[..]),
            || format!("r = {n}: coefficients {got} vs binomials {binom:?}"),
            &mut errors,
        );
    }
    let mixed = quotient_e(3, &part(&[2, 1])).map_err(|e| e.to_string())?;
    ensure(mixed == lp(&[(1, 0), (3, 1), (1, 2)]), || format!("(3, (2,1)): {mixed}"), &mut errors);
    finish(errors)
}

fn burnside() -> Outcome {
    let rows = crosscheck_quotients(5).map_err(|e| e.to_string())?;
    let mut errors = Vec::new();
    ensure(rows.len() == 18, || format!("{} partitions checked", rows.len()), &mut errors);
    for row in &rows {
        ensure(
            row.matches,
            || format!("r = {}, mu = {}: formula {} oracle {}", row.r, row.mu, row.formula, row.oracle),
            &mut errors,
        );
    }
    finish(errors)
}

fn fan_suite() -> Outcome {
    let mut errors = Vec::new();
    for n in 2..=4 {
        let fan = build_delta_fan(n).map_err(|e| e.to_string())?;
        let mut r = verify_delta_fan(n, &fan).map_err(|e| e.to_string())?;
        r.extend(verify_bundle_structure(n, Some(&fan)).map_err(|e| e.to_string())?);
        r.extend(multiplicity_check(n, Some(&fan)).map_err(|e| e.to_string())?);
        report_outcome(&r, &mut errors);
    }
    for n in 5..=6 {
        let r = combinatorial_check(n).map_err(|e| e.to_string())?;
        report_outcome(&r, &mut errors);
    }
    finish(errors)
}

fn fiber_products() -> Outcome {
    let mut errors = Vec::new();
    for n in 1..=4 {
        let r = fiber_product_check(n).map_err(|e| e.to_string())?;
        let want = if n <= 3 { 2 } else { 1 };
        ensure(r.checks.len() == want, || format!("n = {n}: {} checks ran", r.checks.len()), &mut errors);
        report_outcome(&r, &mut errors);
    }
    finish(errors)
}

fn block_totals(sectors: Vec<Sector>) -> BTreeMap<(Partition, AngleType), LPoly> {
    let mut out: BTreeMap<(Partition, AngleType), LPoly> = BTreeMap::new();
    for s in sectors {
        let e = out.entry((s.lambda.clone(), s.theta.clone())).or_default();
        *e = &*e + &s.polynomial();
    }
    out
}

fn properties() -> Outcome {
    let mut errors = Vec::new();
    for n in 1..=7 {
        for l in partitions_of(n) {
            let r = l.len();
            let perms = Permutation::all(r);
            for t in angle_types(&l) {
                for p in &perms {
                    let v = age_value(&l, &t, p).map_err(|e| e.to_string())?;
                    ensure(v.is_integer(), || format!("age {v} at {l} {t} {p}"), &mut errors);
                    ensure(*v.numer() >= (n - r) as i64, || format!("age {v} < n - r at {l} {t} {p}"), &mut errors);
                }
            }
        }
    }
    for n in 2..=5 {
        for l in partitions_of(n) {
            for t in angle_types(&l) {
                for p in Permutation::all(l.len()) {
                    let key = (phi(&t, &p).ok(), age(&l, &t, &p).ok());
                    let stab = star_partition(&t, &p).map_err(|e| e.to_string())?;
                    for q in stab.young_elements() {
                        let qp = q.compose(&p);
                        let other = (phi(&t, &qp).ok(), age(&l, &t, &qp).ok());
                        ensure(other == key, || format!("coset of {p} at {l} {t}: {key:?} vs {other:?}"), &mut errors);
                    }
                }
            }
        }
    }
    for n in 2..=5 {
        let lex = enumerate_sectors(n).map_err(|e| e.to_string())?;
        let total: LPoly = lex.iter().map(Sector::polynomial).sum();
        let blocks = block_totals(lex);
        for seed in 0..20 {
            let opts = EnumerationOptions {
                representatives: Representatives::Random { seed },
                parallel: seed % 2 == 1,
            };
            let other = enumerate_sectors_with(n, opts).map_err(|e| e.to_string())?;
            let other_total: LPoly = other.iter().map(Sector::polynomial).sum();
            ensure(other_total == total, || format!("n = {n}, seed {seed}: total {other_total}"), &mut errors);
            ensure(block_totals(other) == blocks, || format!("n = {n}, seed {seed}: block totals differ"), &mut errors);
        }
    }
    for r in 1..=6 {
        for mu in partitions_of(r) {
            let e = quotient_e(r, &mu).map_err(|e| e.to_string())?;
            ensure(
                e.is_palindromic() && e.degree() == Some(r - 1),
                || format!("quotient E for {mu}: {e}"),
                &mut errors,
            );
        }
    }
    for n in 2..=6 {
        let res = stringy_e(n).map_err(|e| e.to_string())?;
        let t = &res.total;
        ensure(
            t.is_nonnegative() && t.degree() == Some(2 * n + 1) && t.lowest_degree().is_some_and(|k| k > n),
            || format!("n = {n}: total {t}"),
            &mut errors,
        );
        let u = untwisted(n).map_err(|e| e.to_string())?;
        let sum = res.sectors.iter().map(Sector::polynomial).fold(u, |a, b| &a + &b);
        ensure(&sum == t, || format!("n = {n}: untwisted plus sectors {sum}"), &mut errors);
    }
    finish(errors)
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("stringy E totals, n = 2..5", totals),
        ("n = 4 sector subtotals and (phi, a) rows", n_four_sectors),
        ("character recursion, n = 1..4", character),
        ("quotient E closed forms", quotient_closed_forms),
        ("Burnside oracle, all Young subgroups with r <= 5", burnside),
        ("fan suite, n <= 4; combinatorial counts, n = 5, 6", fan_suite),
        ("fiber products: C2 for n <= 4, C3 for n <= 3", fiber_products),
        ("property suite", properties),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS  criterion {}: {name} ({secs:.2}s)", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL  criterion {}: {name} ({secs:.2}s): {msg}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
