//! The quartic surface `F(a, b, c) = 0`: evaluation, the `a = 2` splitting,
//! the integer-point search, the rational parametrization and the
//! discriminant-sign analysis.

pub mod disc;
pub mod param;
pub mod search;

use std::sync::OnceLock;

use crate::algebra::rat::is_integer;
use crate::algebra::{mp, rational_roots, MPoly, Rat, Var};

pub use disc::{disc_sign_check, p1, region_grid, region_svg, DiscReport, RegionCell};
pub use param::{param_at_infinity, param_eval, ParamEval};
pub use search::{search_box, SearchOptions, SurfaceSolution};

/// `F` as printed, term for term.
pub const F_TEXT: &str = "233*a^4 - 352*a^3*b + 108*a^3*c + 168*a^3 + 368*a^2*b^2 \
    - 264*a^2*b*c - 624*a^2*b + 46*a^2*c^2 - 184*a^2*c - 544*a^2 - 160*a*b^3 \
    + 128*a*b^2*c + 352*a*b^2 - 16*a*b*c^2 + 64*a*b*c + 128*a*b - 4*a*c^3 - 8*a*c^2 \
    + 768*a*c + 640*a + 48*b^4 - 64*b^3*c - 256*b^3 + 32*b^2*c^2 + 288*b^2*c + 384*b^2 \
    - 8*b*c^3 - 144*b*c^2 - 512*b*c + c^4 + 24*c^3 + 96*c^2 - 640*c - 256";

pub const A2_FIRST_FACTOR: &str = "12*b^2 - 4*b*c - 96*b + c^2 + 12*c + 196";
pub const A2_SECOND_FACTOR: &str = "4*b^2 - 4*b*c - 16*b + c^2 + 4*c + 20";

/// The printed table of integer points with `a != 2`, as `(a, b, c, d)`.
pub const PRINTED_TABLE: [(i64, i64, i64, i64); 25] = [
    (-30, 197, 420, 706),
    (-28, 170, 364, 617),
    (-26, 145, 312, 534),
    (-24, 122, 264, 457),
    (-22, 101, 220, 386),
    (-20, 82, 180, 321),
    (-18, 65, 144, 262),
    (-16, 50, 112, 209),
    (-14, 37, 84, 162),
    (-12, 26, 60, 121),
    (-10, 17, 40, 86),
    (-8, 10, 24, 57),
    (-6, 5, 12, 34),
    (-4, 2, 4, 17),
    (-2, 1, 0, 6),
    (0, 2, 0, 1),
    (2, 5, 4, 2),
    (4, 10, 12, 9),
    (6, 17, 24, 22),
    (8, 26, 40, 41),
    (10, 37, 60, 66),
    (12, 50, 84, 97),
    (14, 65, 112, 134),
    (16, 82, 144, 177),
    (18, 101, 180, 226),
];

/// Integer `(2, b, c)` with `b` in range on either factor of `F(2, b, c)`.
pub fn a2_points(b_range: (i64, i64)) -> Vec<(i64, i64, i64)> {
    let factors = [mp(A2_FIRST_FACTOR), mp(A2_SECOND_FACTOR)];
    let mut out = std::collections::BTreeSet::new();
    for b in b_range.0..=b_range.1 {
        let rb = Rat::from_integer(b.into());
        for g in &factors {
            let in_c = g
                .substitute_rat(Var::B, &rb)
                .to_upoly(Var::C)
                .expect("univariate in c");
            for c in rational_roots(&in_c).into_iter().filter(is_integer) {
                out.insert((2, b, c.to_integer().try_into().expect("small root")));
            }
        }
    }
    out.into_iter().collect()
}

pub fn surface_poly() -> &'static MPoly {
    static CELL: OnceLock<MPoly> = OnceLock::new();
    CELL.get_or_init(|| mp(F_TEXT))
}

pub fn f_eval(a: &Rat, b: &Rat, c: &Rat) -> Rat {
    surface_poly()
        .eval(&[
            (Var::A, a.clone()),
            (Var::B, b.clone()),
            (Var::C, c.clone()),
        ])
        .expect("F uses only a, b, c")
}

/// Whether `F(2, b, c)` equals `first * second` as a polynomial identity.
pub fn f_factor_a2_check_with(first: &MPoly, second: &MPoly) -> bool {
    surface_poly().substitute_rat(Var::A, &Rat::from_integer(2.into())) == first * second
}

pub fn f_factor_a2_check() -> bool {
    f_factor_a2_check_with(&mp(A2_FIRST_FACTOR), &mp(A2_SECOND_FACTOR))
}
