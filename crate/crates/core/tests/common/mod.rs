#![allow(dead_code)]

pub mod gen;
pub mod laws;

use ore_desing::text::{parse_operator, parse_poly};
use ore_desing::{OreOperator, OreRing, Poly};

pub const DIFF_L: &str = "-(45 + 25*x - 35*x^2 - x^3 + 2*x^4) \
    + 2*(33 - 9*x - 3*x^2 - x^3)*D \
    + (1 + x)*(23 - 20*x - x^2 + 2*x^3)*D^2";

pub const DIFF_P: &str = "299/(23 - 20*x - x^2 + 2*x^3)*D \
    + (1035 - 104*x - 136*x^2)/(23 - 20*x - x^2 + 2*x^3)";

pub const DIFF_PL: &str = "(-2350 - 2055*x + 104*x^2 + 136*x^3) \
    + (2151 + 281*x + 136*x^2)*D \
    + (1932 + 931*x - 240*x^2 - 136*x^3)*D^2 \
    + 299*(1 + x)*D^3";

/// Order 3, degree 2.
pub const DIFF_ORDER3: &str = "(-10 - 165*x + 22*x^2) + (201 + 65*x - 34*x^2)*D \
    + (-100 + 109*x - 22*x^2)*D^2 - (1 + x)*(43 - 34*x)*D^3";

/// Order 5, degree 1.
pub const DIFF_ORDER5: &str = "(2 + x) + (-3 + x)*D - (8 + 2*x)*D^2 + (2 - 2*x)*D^3 \
    + (6 + x)*D^4 + (1 + x)*D^5";

pub const DIFF_P_FACTOR: &str = "23 - 20*x - x^2 + 2*x^3";

pub const SHIFT_L: &str = "(3 + x)*(9 + 7*x + x^2) \
    - (33 + 70*x + 47*x^2 + 12*x^3 + x^4)*D \
    + (2 + x)^2*(3 + 5*x + x^2)*D^2";

pub const SHIFT_ORDER3: &str = "(402 + 208*x + 25*x^2) \
    - (514 + 743*x + 258*x^2 + 25*x^3)*D \
    + (233 + 378*x + 183*x^2 + 25*x^3)*D^2 \
    - 9*(3 + x)*D^3";

pub const REC32_L: &str = "8*(1 + x)*(1 + 2*x)^3*(37 + 3*x)^7*(14 + 32*x + 26*x^2 + 7*x^3)^7 \
    - 9*(1 + 3*x)^9*(2 + 3*x)^2*(1 + x + 5*x^2 + 7*x^3)^7*D";

pub const REC32_CUBIC: &str = "1 + x + 5*x^2 + 7*x^3";

pub fn diff(src: &str) -> OreOperator {
    parse_operator(src, OreRing::Differential).unwrap()
}

pub fn shift(src: &str) -> OreOperator {
    parse_operator(src, OreRing::Shift).unwrap()
}

pub fn poly(src: &str) -> Poly {
    parse_poly(src).unwrap()
}

pub fn skip_slow() -> bool {
    std::env::var("ORE_DESING_SKIP_SLOW").is_ok_and(|v| v == "1")
}
