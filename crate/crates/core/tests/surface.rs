use betaquad::algebra::rat::{rat, ratio};
use betaquad::algebra::Rat;
use betaquad::esystem::e_system;
use betaquad::surface::param::param_eval;
use betaquad::surface::search::{search_box, search_points, SearchOptions};
use betaquad::surface::{f_eval, surface_poly, F_TEXT};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn opts(threads: usize, force_exact: bool) -> SearchOptions {
    SearchOptions {
        threads,
        force_exact,
        integral: false,
    }
}

#[test]
fn float_and_exact_paths_agree() {
    let (fast, _) = search_points((-12, 12), (-40, 40), &opts(2, false)).unwrap();
    let (exact, stats) = search_points((-12, 12), (-40, 40), &opts(2, true)).unwrap();
    assert_eq!(fast, exact);
    assert_eq!(stats.exact_fallbacks, stats.pairs);
    for (a, b, c) in &fast {
        assert!(f_eval(&rat(*a), &rat(*b), &rat(*c)).is_zero());
    }
}

#[test]
fn thread_count_does_not_change_output() {
    let one = search_box((-10, 10), (-30, 30), &opts(1, false)).unwrap();
    let four = search_box((-10, 10), (-30, 30), &opts(4, false)).unwrap();
    assert_eq!(one, four);
}

#[test]
fn every_solvable_point_has_integral_d_in_table_range() {
    let sols = search_box((-6, 6), (-20, 20), &opts(2, false)).unwrap();
    let keys: Vec<_> = sols.iter().map(|s| (s.a, s.b, s.c)).collect();
    for p in [
        (-6, 5, 12),
        (-4, 2, 4),
        (-2, 1, 0),
        (0, 2, 0),
        (2, 5, 4),
        (4, 10, 12),
        (6, 17, 24),
    ] {
        assert!(keys.contains(&p), "{p:?}");
    }
}

#[test]
fn random_parameter_points_lie_on_the_variety() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut n = 0;
    while n < 100 {
        let a = ratio(rng.gen_range(-40i64..=40), rng.gen_range(1i64..=5));
        let t = ratio(rng.gen_range(-40i64..=40), rng.gen_range(1i64..=5));
        let Ok(e) = param_eval(&a, &t) else { continue };
        assert!(f_eval(&a, &e.b, &e.c).is_zero(), "F at ({a}, {t})");
        assert!(
            e_system().vanishes_at(&e.coeffs(), &e.p, &e.q),
            "e at ({a}, {t})"
        );
        n += 1;
    }
}

#[test]
fn transcription_guard() {
    assert_eq!(surface_poly().len(), 34);
    assert_eq!(surface_poly().total_degree(), Some(4));
    let zero = Rat::zero();
    assert_eq!(f_eval(&zero, &zero, &zero), rat(-256));
    assert!(F_TEXT.starts_with("233*a^4 - 352*a^3*b"));
}
