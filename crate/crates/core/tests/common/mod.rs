#![allow(dead_code)]

pub mod density;
pub mod tate_table;

use isoratio::curve::WeierstrassModel;
use isoratio::isogeny::{dual, rational_p_isogenies, Isogeny};

pub const X0_11: [i64; 5] = [0, -1, 1, -10, -20];
pub const X0_19: [i64; 5] = [0, 1, 1, -9, -15];
pub const C26B: [i64; 5] = [1, -1, 1, -3, 3];

pub fn curve(a: [i64; 5]) -> WeierstrassModel {
    WeierstrassModel::from_ints(a).unwrap()
}

pub fn isogenies(a: [i64; 5], p: u32) -> Vec<Isogeny> {
    rational_p_isogenies(&curve(a), p)
}

/// The isogeny out of `a` whose kernel contains a rational point.
pub fn rational_point_isogeny(a: [i64; 5], p: u32) -> Isogeny {
    isogenies(a, p).into_iter().find(|phi| !phi.rational_kernel_abscissas().is_empty()).unwrap()
}

/// Every rational `p`-isogeny out of the listed curves, each followed by
/// its dual.
pub fn suite() -> Vec<(String, Isogeny)> {
    let sources: [(&str, [i64; 5], u32); 6] = [
        ("11a1", X0_11, 5),
        ("19a1", X0_19, 3),
        ("26b1", C26B, 7),
        ("27a1", [0, 0, 1, 0, -7], 3),
        ("36a1", [0, 0, 0, 0, 1], 3),
        ("38b1", [1, 1, 1, 0, 1], 5),
    ];
    let mut out = Vec::new();
    for (label, a, p) in sources {
        for (i, phi) in isogenies(a, p).into_iter().enumerate() {
            let psi = dual(&phi).unwrap();
            out.push((format!("{label}/{p}#{i}"), phi));
            out.push((format!("{label}/{p}#{i}-dual"), psi));
        }
    }
    out
}
