//! One test per acceptance criterion; each prints a single PASS/FAIL line.

use std::time::{Duration, Instant};

use betaquad::algebra::rat::{rat, ratio};
use betaquad::esystem::e_system;
use betaquad::esystem::{decide_beta, oracle_agrees, QuarticCoeffs};
use betaquad::families::{family1, family2};
use betaquad::lemma_ec::{
    c_points_check, lemma1_identities, lemma2_identities, phi_map_check, the_curve, torsion_report,
    ECPoint,
};
use betaquad::quartic::factor_quartic;
use betaquad::surface::param::param_eval;
use betaquad::surface::search::{search_box, SearchOptions};
use betaquad::surface::{disc::p1_disc_check, f_eval};
use betaquad::verify::{
    c_branch_identities, compare_table, disc_summary, e_regression, family_irreducibility,
    family_windows, motivating_example, open_grid, region_shape,
};
use betaquad::Error;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn report(n: u32, holds: bool, details: &str, start: Instant, budget: Duration) {
    let elapsed = start.elapsed();
    let ok = holds && elapsed <= budget;
    println!(
        "{} criterion {n}: {details} ({:.2?}, budget {:?})",
        if ok { "PASS" } else { "FAIL" },
        elapsed,
        budget
    );
    assert!(ok, "criterion {n} failed: {details}");
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn single_thread() -> SearchOptions {
    SearchOptions {
        threads: 1,
        ..SearchOptions::default()
    }
}

#[test]
fn criterion_01_e_system_regression() {
    let start = Instant::now();
    let (holds, details) = e_regression();
    report(1, holds, &details, start, secs(5));
}

#[test]
fn criterion_02_motivating_example() {
    let start = Instant::now();
    let (holds, details) = motivating_example().unwrap();
    report(2, holds, &details, start, secs(1));
}

#[test]
fn criterion_03_table_reproduction() {
    let start = Instant::now();
    let t = compare_table(200, &single_thread()).unwrap();
    let sols = search_box((2, 2), (2, 5), &single_thread()).unwrap();
    let with_d = |a, b, c, d: i64| {
        sols.iter()
            .any(|s| (s.a, s.b, s.c) == (a, b, c) && s.d_candidates.iter().any(|k| k.d == rat(d)))
    };
    let a2_rows = with_d(2, 5, 4, 2) && with_d(2, 4, 2, 3) && with_d(2, 2, 2, -7);
    let holds = t.missing.is_empty() && t.a2_mismatch.is_empty() && t.extra.is_empty() && a2_rows;
    let details = format!(
        "{} points; missing {:?}; a=2 mismatch {:?}; extra {:?}",
        t.found, t.missing, t.a2_mismatch, t.extra
    );
    report(3, holds, &details, start, secs(60));
}

/// Slow: about a quarter of an hour per core in release builds.
#[test]
#[ignore]
fn criterion_04_extended_search() {
    let start = Instant::now();
    let sols = search_box(
        (-10_000, 10_000),
        (-10_000, 10_000),
        &SearchOptions::default(),
    )
    .unwrap();
    let outside: Vec<_> = sols
        .iter()
        .filter(|s| s.a != 2)
        .filter(|s| {
            let t = s.a / 2;
            s.a % 2 != 0 || s.b != t * t + 2 * t + 2 || s.c != 2 * t * t + 2 * t
        })
        .map(|s| (s.a, s.b, s.c))
        .collect();
    let details = format!(
        "{} points; outside the second family {outside:?}",
        sols.len()
    );
    report(4, outside.is_empty(), &details, start, secs(30 * 60));
}

#[test]
fn criterion_05_family_windows() {
    let start = Instant::now();
    let (w, wd) = family_windows().unwrap();
    let (i, id) = family_irreducibility().unwrap();
    let factored = |r: Result<_, Error>| match r {
        Ok(k) => factor_quartic(&QuarticCoeffs::f(&k)).unwrap().to_string(),
        Err(e) => e.to_string(),
    };
    let exceptions = [
        factored(Ok(QuarticCoeffs::from_ints(2, 2, 2, 1))),
        factored(Ok(QuarticCoeffs::from_ints(2, 4, 2, 3))),
        factored(Ok(QuarticCoeffs::from_ints(0, 2, 0, 1))),
        factored(family2(&rat(2)).map(|r| r.coeffs)),
    ];
    let printed = [
        "(x + 1)^2(x^2 + 1)",
        "(x^2 + 1)(x^2 + 2*x + 3)",
        "(x^2 + 1)^2",
        "(x^2 + 2*x + 3)^2",
    ];
    let poles = family1(&rat(0)).is_err() && family1(&rat(1)).is_err() && family2(&rat(0)).is_err();
    let holds = w && i && exceptions == printed && poles;
    let details = format!("{wd}; {id}; exceptional members {exceptions:?}");
    report(5, holds, &details, start, secs(30));
}

#[test]
fn criterion_06_parametrization() {
    let start = Instant::now();
    let e = param_eval(&rat(1), &rat(1)).unwrap();
    let near_miss = [e.b, e.c, e.d, e.p, e.q]
        == [
            ratio(97, 24),
            ratio(3, 4),
            ratio(17, 8),
            ratio(-6, 13),
            ratio(-51, 5),
        ];
    let e = param_eval(&rat(4), &rat(1)).unwrap();
    let got4 = [e.b, e.c, e.d, e.p, e.q];
    let at4 = got4
        == [
            ratio(46, 3),
            rat(20),
            rat(25),
            ratio(165, 26),
            ratio(525, 52),
        ];
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut sampled = 0;
    let mut on_variety = true;
    while sampled < 100 {
        let a = ratio(rng.gen_range(-30i64..=30), rng.gen_range(1i64..=4));
        let t = ratio(rng.gen_range(-30i64..=30), rng.gen_range(1i64..=4));
        let Ok(e) = param_eval(&a, &t) else { continue };
        on_variety &=
            f_eval(&a, &e.b, &e.c).is_zero() && e_system().vanishes_at(&e.coeffs(), &e.p, &e.q);
        sampled += 1;
    }
    let shown: Vec<String> = got4.iter().map(|r| r.to_string()).collect();
    let details = format!(
        "near miss {near_miss}; (4, 1) -> ({}) vs printed (46/3, 20, 25, 165/26, 525/52); 100 points on F and e: {on_variety}",
        shown.join(", ")
    );
    report(6, near_miss && at4 && on_variety, &details, start, secs(30));
}

#[test]
fn criterion_07_discriminant_analysis() {
    let start = Instant::now();
    let grid = open_grid(&rat(-4), &rat(10), &ratio(1, 3));
    let samples: Vec<_> = grid
        .iter()
        .filter(|a| !a.is_zero())
        .flat_map(|a| grid.iter().map(move |t| (a.clone(), t.clone())))
        .collect();
    let s = disc_summary(&samples);
    let identity = p1_disc_check();
    let shape = region_shape();
    let shown: Vec<String> = s
        .printed_mismatch
        .iter()
        .take(4)
        .map(|(a, t)| format!("({a}, {t})"))
        .collect();
    let details = format!(
        "Disc_t(P1) {identity}; region shape {shape}; {} sampled, sign(-a P1(a,t)) wrong at {} (e.g. {}), sign(-a P1(a,1/t)) wrong at {}",
        s.sampled,
        s.printed_mismatch.len(),
        shown.join(" "),
        s.reciprocal_mismatch.len()
    );
    report(
        7,
        identity && shape && s.printed_mismatch.is_empty(),
        &details,
        start,
        secs(30),
    );
}

#[test]
fn criterion_08_lemma_suites() {
    let start = Instant::now();
    let ids = [lemma1_identities().unwrap(), lemma2_identities().unwrap()].concat();
    let failing: Vec<_> = ids
        .iter()
        .filter(|i| !i.holds)
        .map(|i| i.name.clone())
        .collect();
    let c = c_points_check().unwrap();
    let r = torsion_report(&the_curve()).unwrap();
    let want = vec![
        ECPoint::Infinity,
        ECPoint::affine(-2, -8),
        ECPoint::affine(-2, 8),
        ECPoint::affine(2, 0),
    ];
    let holds = failing.is_empty()
        && phi_map_check()
        && c.holds
        && r.points == want
        && r.order == 4
        && r.divides_counts
        && r.point_counts.len() == 3;
    let details = format!(
        "{} identities, failing {failing:?}; torsion order {} with #E(F_p) {:?}",
        ids.len(),
        r.order,
        r.point_counts
    );
    report(8, holds, &details, start, secs(30));
}

#[test]
fn criterion_09_oracle_property() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let (mut checked, mut disagree) = (0, Vec::new());
    while checked < 500 {
        let k = QuarticCoeffs::from_ints(
            rng.gen_range(-10..=10),
            rng.gen_range(-10..=10),
            rng.gen_range(-10..=10),
            rng.gen_range(-10..=10),
        );
        let f = k.f();
        if f.gcd(&f.derivative()).degree() != Some(0) {
            continue;
        }
        let Ok(v) = decide_beta(&k) else { continue };
        if !oracle_agrees(&k, &v).unwrap() {
            disagree.push(k.to_string());
        }
        checked += 1;
    }
    let details = format!("{checked} quartics, disagreements {disagree:?}");
    report(9, disagree.is_empty(), &details, start, secs(120));
}

#[test]
fn criterion_10_c_branch() {
    let start = Instant::now();
    let (holds, details) = c_branch_identities();
    let flagged = details.contains("printed d inconsistent");
    report(10, holds && flagged, &details, start, secs(5));
}
