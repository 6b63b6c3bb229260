//! LaTeX rendering: bars for alternating arguments, `\zeta^k(s)` for powers
//! and `\ln(2)` in place of `-\zeta(\bar{1})`.

use num_traits::{One, Signed};

use super::{LinComb, MzvAtom, Rational};

fn arg(a: i32) -> String {
    if a < 0 {
        format!("\\bar{{{}}}", a.unsigned_abs())
    } else {
        a.to_string()
    }
}

impl MzvAtom {
    /// LaTeX for `self^power`.
    pub fn to_latex_power(&self, power: usize) -> String {
        let exp = if power == 1 {
            String::new()
        } else {
            format!("^{{{power}}}")
        };
        match self {
            MzvAtom::Zeta(args) if args.as_slice() == [-1] => format!("\\ln{exp}(2)"),
            MzvAtom::Zeta(args) => {
                let body: Vec<String> = args.iter().map(|&a| arg(a)).collect();
                format!("\\zeta{exp}({})", body.join(","))
            }
            MzvAtom::PolylogHalf(q) => {
                let base = format!("\\mathrm{{Li}}_{{{q}}}(\\tfrac{{1}}{{2}})");
                if power == 1 {
                    base
                } else {
                    format!("{base}{exp}")
                }
            }
        }
    }
}

fn coeff_latex(c: &Rational) -> String {
    let n = c.numer().abs();
    let d = c.denom();
    if d.is_one() {
        n.to_string()
    } else {
        format!("\\frac{{{n}}}{{{d}}}")
    }
}

impl LinComb {
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (term, c) in self.iter() {
            let mut c = c.clone();
            let mut factors = Vec::new();
            for (atom, k) in term.powers() {
                if atom.args() == Some(&[-1]) && k % 2 == 1 {
                    c = -c;
                }
                factors.push(atom.to_latex_power(k));
            }
            let negative = c.is_negative();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let abs = c.abs();
            if factors.is_empty() {
                out.push_str(&coeff_latex(&abs));
            } else {
                if !abs.is_one() {
                    out.push_str(&coeff_latex(&abs));
                }
                out.push_str(&factors.join(""));
            }
        }
        out
    }
}
