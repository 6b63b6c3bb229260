//! Fixtures shared by the integration tests.

#![allow(dead_code)]

mod weight_six;

pub use weight_six::WEIGHT_SIX_FORMS;

/// Non-alternating closed forms, with `S_{2,q}` written as `ζ(q,2) + ζ(q+2)`.
pub const PLAIN_CLOSED_FORMS: [(&str, &str); 5] = [
    (
        "S(4,4,4)",
        "690247/16584*z(12) - 16*z(3)*z(9) - 28*z(5)*z(7) + 8*z(10,2) + 8*z(12)",
    ),
    (
        "S(5,5,5)",
        "4505/3*z(15) - 15*z(8)*z(7) - 70*z(6)*z(9) - 220*z(4)*z(11) - 715*z(2)*z(13) + 1/3*z(5)^3",
    ),
    (
        "S(2,2,2,2)",
        "1285/32*z(8) - 60*z(3)*z(5) + 9*z(2)*z(3)^2 + 31/2*z(6,2) + 31/2*z(8)",
    ),
    (
        "S(3,3,3,3)",
        "478711/1382*z(12) + 9/2*z(3)*z(9) - 309*z(5)*z(7) + 27*z(2)*z(5)^2 - 63*z(2)*z(3)*z(7) \
         + 1/4*z(3)^4 - 9/4*z(10,2) - 9/4*z(12) + 63/2*z(2)*z(8,2) + 63/2*z(2)*z(10)",
    ),
    (
        "S(1,1,1,9)",
        "1060345/22112*z(12) - 35*z(3)*z(9) - 33*z(5)*z(7) + 3*z(2)*z(3)*z(7) + 3/2*z(2)*z(5)^2 \
         + 21/4*z(6)*z(3)^2 + 15/2*z(3)*z(4)*z(5) - 1/4*z(3)^4 + 15/4*z(10,2) + 15/4*z(12)",
    ),
];

/// Alternating sums with all entries barred.
pub const BARRED_CLOSED_FORMS: [(&str, &str); 3] = [
    ("S(-1,-1,-1)", "-1/2*z(3) + 3/2*z(2)*ln2 + 1/3*ln2^3"),
    (
        "S(-3,-3,-3)",
        "-7111/512*z(9) + 561/128*z(2)*z(7) + 189/128*z(3)*z(6) + 315/64*z(4)*z(5) + 9/64*z(3)^3",
    ),
    (
        "S(-2,-2,-2)",
        "905/96*z(6) - 31/4*z(5)*ln2 - 33/16*z(3)^2 + 4*z(-5,-1)",
    ),
];

/// Weight-5 alternating sums.
pub const WEIGHT_FIVE_FORMS: [(&str, &str); 5] = [
    (
        "S(1,1,-3)",
        "4*Li(5,1/2) - 19/32*z(5) + 4*Li(4,1/2)*ln2 - 11/8*z(3)*z(2) + 7/4*z(3)*ln2^2 \
         - 2/3*z(2)*ln2^3 + 2/15*ln2^5",
    ),
    (
        "S(-1,-1,3)",
        "4*Li(5,1/2) - 167/32*z(5) + 19/8*z(4)*ln2 + 3/4*z(3)*z(2) + 7/4*z(3)*ln2^2 \
         + 1/3*z(2)*ln2^3 - 1/30*ln2^5",
    ),
    (
        "S(-1,-1,-3)",
        "-19/32*z(5) - 4*Li(4,1/2)*ln2 + 19/8*z(4)*ln2 + 3/8*z(3)*z(2) + z(2)*ln2^3 - 1/6*ln2^5",
    ),
    (
        "S(1,-1,3)",
        "2*Li(5,1/2) - 193/64*z(5) + 4*z(4)*ln2 + 3/8*z(3)*z(2) - 7/8*z(3)*ln2^2 \
         + 1/6*z(2)*ln2^3 - 1/60*ln2^5",
    ),
    (
        "S(1,-1,-3)",
        "2*Li(5,1/2) - 37/16*z(5) + 4*z(4)*ln2 - 1/8*z(3)*z(2) - 7/8*z(3)*ln2^2 \
         + 1/6*z(2)*ln2^3 - 1/60*ln2^5",
    ),
];
