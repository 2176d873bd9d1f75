//! Local data at one prime, worked out by hand with Tate's algorithm.

use isoratio::local::{Kodaira, Reduction};

use Kodaira::*;
use Reduction::{Additive as Add, Good, NonsplitMultiplicative as Ns, SplitMultiplicative as Sp};

pub struct Row {
    pub label: &'static str,
    pub a: [i64; 5],
    pub prime: u64,
    pub kodaira: Kodaira,
    pub tamagawa: u32,
    pub reduction: Reduction,
}

const fn row(
    label: &'static str,
    a: [i64; 5],
    prime: u64,
    kodaira: Kodaira,
    tamagawa: u32,
    reduction: Reduction,
) -> Row {
    Row { label, a, prime, kodaira, tamagawa, reduction }
}

pub const TABLE: &[Row] = &[
    row("11a1", [0, -1, 1, -10, -20], 11, I(5), 5, Sp),
    row("11a1", [0, -1, 1, -10, -20], 5, I0, 1, Good),
    row("11a2", [0, -1, 1, -7820, -263580], 11, I(1), 1, Sp),
    row("11a3", [0, -1, 1, 0, 0], 11, I(1), 1, Sp),
    row("19a1", [0, 1, 1, -9, -15], 19, I(3), 3, Sp),
    row("37a1", [0, 0, 1, -1, 0], 37, I(1), 1, Ns),
    row("26b1", [1, -1, 1, -3, 3], 2, I(7), 7, Sp),
    row("26b1", [1, -1, 1, -3, 3], 13, I(1), 1, Ns),
    row("26b2", [1, -1, 1, -213, -1257], 2, I(1), 1, Sp),
    row("26b2", [1, -1, 1, -213, -1257], 13, I(7), 1, Ns),
    row("36a1", [0, 0, 0, 0, 1], 2, IV, 3, Add),
    row("36a1", [0, 0, 0, 0, 1], 3, III, 2, Add),
    row("27a1", [0, 0, 1, 0, -7], 3, IVStar, 3, Add),
    row("27a3", [0, 0, 1, 0, 0], 3, II, 1, Add),
    row("24a1", [0, -1, 0, -4, 4], 2, IStar(1), 4, Add),
    row("24a1", [0, -1, 0, -4, 4], 3, I(2), 2, Ns),
    row("20a1", [0, 1, 0, 4, 4], 2, IVStar, 3, Add),
    row("20a1", [0, 1, 0, 4, 4], 5, I(2), 2, Ns),
    row("14a1", [1, 0, 1, 4, -6], 2, I(6), 2, Ns),
    row("14a1", [1, 0, 1, 4, -6], 7, I(3), 3, Sp),
    row("32a1", [0, 0, 0, 4, 0], 2, IStar(3), 4, Add),
    row("32a2", [0, 0, 0, -1, 0], 2, III, 2, Add),
    row("x3+5^5", [0, 0, 0, 0, 3125], 5, IIStar, 1, Add),
    row("x3+5^3x", [0, 0, 0, 125, 0], 5, IIIStar, 2, Add),
    row("x3+5^4", [0, 0, 0, 0, 625], 5, IVStar, 3, Add),
];
