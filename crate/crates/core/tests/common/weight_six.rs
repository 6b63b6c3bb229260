/// Weight-6 alternating sums with barred outer exponent and their
/// evaluations in the basis `Li_6(1/2)`, `ζ(6)`, ..., `ln^6 2`, `ζ(5̄,1)`.
pub const WEIGHT_SIX_FORMS: [(&str, &str); 18] = [
    (
        "S(1,1,1,1,1,-1)",
        "-91/16*z(6) - 20*Li(5,1/2)*ln2 + 565/32*z(5)*ln2 + 5*Li(4,1/2)*z(2) - 10*Li(4,1/2)*ln2^2 - 10*z(4)*ln2^2 - 79/32*z(3)^2 + 45/8*z(3)*z(2)*ln2 - 15/4*z(3)*ln2^3 + 55/24*z(2)*ln2^4 - 5/12*ln2^6",
    ),
    (
        "S(1,1,1,2,-1)",
        "12*Li(6,1/2) - 2411/192*z(6) + 6*Li(5,1/2)*ln2 + 155/32*z(5)*ln2 - 1*Li(4,1/2)*z(2) + 3*Li(4,1/2)*ln2^2 - 11/16*z(4)*ln2^2 + 15/8*z(3)^2 - 3/4*z(3)*z(2)*ln2 + 7/8*z(3)*ln2^3 - 5/12*z(2)*ln2^4 + 11/120*ln2^6 - 5*z(-5,1)",
    ),
    (
        "S(1,1,3,-1)",
        "91/32*z(6) + 4*Li(5,1/2)*ln2 - 31/4*z(5)*ln2 - 1*Li(4,1/2)*z(2) + 2*Li(4,1/2)*ln2^2 + 59/16*z(4)*ln2^2 - 11/64*z(3)^2 + 3/8*z(3)*z(2)*ln2 - 1/4*z(3)*ln2^3 - 5/24*z(2)*ln2^4 + 1/20*ln2^6",
    ),
    (
        "S(1,2,2,-1)",
        "-35/16*z(6) - 8*Li(5,1/2)*ln2 + 341/32*z(5)*ln2 + 1*Li(4,1/2)*z(2) - 4*Li(4,1/2)*ln2^2 - 17/4*z(4)*ln2^2 + 27/32*z(3)^2 - 7/8*z(3)*z(2)*ln2 + 3/8*z(2)*ln2^4 - 1/10*ln2^6",
    ),
    (
        "S(1,4,-1)",
        "851/192*z(6) - 93/32*z(5)*ln2 - 1*Li(4,1/2)*z(2) + 17/16*z(4)*ln2^2 - 9/8*z(3)^2 - 1/24*z(2)*ln2^4 + 3*z(-5,1)",
    ),
    (
        "S(2,3,-1)",
        "-647/192*z(6) + 31/16*z(5)*ln2 + 2*Li(4,1/2)*z(2) - 5/4*z(4)*ln2^2 + 3/4*z(3)^2 + 3/8*z(3)*z(2)*ln2 + 1/12*z(2)*ln2^4 - 2*z(-5,1)",
    ),
    (
        "S(5,-1)",
        "111/64*z(6) - 15/16*z(5)*ln2 - 9/32*z(3)^2",
    ),
    (
        "S(1,1,1,1,-2)",
        "-24*Li(6,1/2) + 2159/96*z(6) - 24*Li(5,1/2)*ln2 + 6*Li(4,1/2)*z(2) - 12*Li(4,1/2)*ln2^2 - 15/4*z(4)*ln2^2 - 195/32*z(3)^2 + 21/4*z(3)*z(2)*ln2 - 7/2*z(3)*ln2^3 + 7/4*z(2)*ln2^4 - 1/3*ln2^6 + 10*z(-5,1)",
    ),
    (
        "S(1,1,2,-2)",
        "8*Li(6,1/2) - 1409/192*z(6) + 8*Li(5,1/2)*ln2 - 1*Li(4,1/2)*z(2) + 4*Li(4,1/2)*ln2^2 + 5/8*z(4)*ln2^2 + 77/64*z(3)^2 - 7/8*z(3)*z(2)*ln2 + 7/6*z(3)*ln2^3 - 13/24*z(2)*ln2^4 + 1/9*ln2^6 - 3*z(-5,1)",
    ),
    (
        "S(1,3,-2)",
        "-331/384*z(6) + 75/64*z(3)^2 - 7/2*z(-5,1)",
    ),
    (
        "S(2,2,-2)",
        "521/96*z(6) - 4*Li(4,1/2)*z(2) + 5/2*z(4)*ln2^2 + 23/16*z(3)^2 - 7/2*z(3)*z(2)*ln2 - 1/6*z(2)*ln2^4 + 4*z(-5,1)",
    ),
    (
        "S(4,-2)",
        "389/192*z(6) - 15/16*z(3)^2 + 4*z(-5,1)",
    ),
    (
        "S(1,1,1,-3)",
        "-12*Li(6,1/2) + 771/64*z(6) - 12*Li(5,1/2)*ln2 + 3*Li(4,1/2)*z(2) - 6*Li(4,1/2)*ln2^2 - 15/8*z(4)*ln2^2 - 207/64*z(3)^2 + 21/8*z(3)*z(2)*ln2 - 7/4*z(3)*ln2^3 + 7/8*z(2)*ln2^4 - 1/6*ln2^6 + 9/2*z(-5,1)",
    ),
    (
        "S(1,2,-3)",
        "29/192*z(6) + 1*Li(4,1/2)*z(2) - 5/8*z(4)*ln2^2 - 49/64*z(3)^2 + 7/8*z(3)*z(2)*ln2 + 1/24*z(2)*ln2^4 + 3/2*z(-5,1)",
    ),
    (
        "S(3,-3)",
        "-113/64*z(6) + 63/32*z(3)^2 - 6*z(-5,1)",
    ),
    (
        "S(1,1,-4)",
        "241/192*z(6) - 1/4*z(3)^2 - 1*z(-5,1)",
    ),
    (
        "S(2,-4)",
        "361/192*z(6) - 3/4*z(3)^2 + 4*z(-5,1)",
    ),
    (
        "S(1,-5)",
        "31/32*z(6) - 1*z(-5,1)",
    ),
];
