//! Reader for the plain text form of linear combinations.
//!
//! ```text
//! expr   := sign? term (sign term)*
//! term   := factor ("*" factor)*
//! factor := rational | atom ("^" int)?
//! atom   := "z(" int ("," int)* ")" | "Li(" int ",1/2)" | "ln2"
//! ```
//!
//! `ln2` is sugar for `-z(-1)`.

use num_bigint::BigInt;
use num_traits::One;

use super::{AlgebraError, LinComb, MzvAtom, Rational};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_str(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(s.as_bytes()) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn err(&self, msg: &str) -> AlgebraError {
        AlgebraError::ExprSyntax {
            position: self.pos,
            message: msg.to_string(),
        }
    }

    fn digits(&mut self) -> Result<&'a str, AlgebraError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("0"))
    }

    fn int(&mut self) -> Result<i64, AlgebraError> {
        let neg = self.eat(b'-');
        let d = self.digits()?;
        let v: i64 = d.parse().map_err(|_| self.err("integer out of range"))?;
        Ok(if neg { -v } else { v })
    }
}

pub fn parse_lincomb(text: &str) -> Result<LinComb, AlgebraError> {
    let mut cur = Cursor {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut out = LinComb::zero();
    let mut first = true;
    loop {
        let sign = if cur.eat(b'+') {
            Rational::one()
        } else if cur.eat(b'-') {
            -Rational::one()
        } else if first {
            Rational::one()
        } else {
            break;
        };
        first = false;
        let term = parse_term(&mut cur)?;
        out.add_scaled(&term, &sign);
    }
    if cur.peek().is_some() {
        return Err(cur.err("unexpected trailing input"));
    }
    Ok(out)
}

fn parse_term(cur: &mut Cursor) -> Result<LinComb, AlgebraError> {
    let mut acc = parse_factor(cur)?;
    while cur.eat(b'*') {
        acc = &acc * &parse_factor(cur)?;
    }
    Ok(acc)
}

fn parse_factor(cur: &mut Cursor) -> Result<LinComb, AlgebraError> {
    let base = match cur.peek() {
        Some(c) if c.is_ascii_digit() => {
            let num: BigInt = cur.digits()?.parse().map_err(|_| cur.err("bad integer"))?;
            let den: BigInt = if cur.eat(b'/') {
                cur.digits()?.parse().map_err(|_| cur.err("bad integer"))?
            } else {
                BigInt::one()
            };
            if den == BigInt::from(0) {
                return Err(cur.err("zero denominator"));
            }
            return Ok(LinComb::constant(Rational::new(num, den)));
        }
        _ if cur.eat_str("z(") => {
            let mut args = vec![cur.int()?];
            while cur.eat(b',') {
                args.push(cur.int()?);
            }
            if !cur.eat(b')') {
                return Err(cur.err("expected ')'"));
            }
            let args = args
                .into_iter()
                .map(|a| i32::try_from(a).map_err(|_| cur.err("argument out of range")))
                .collect::<Result<Vec<_>, _>>()?;
            LinComb::atom(MzvAtom::zeta(args)?)
        }
        _ if cur.eat_str("Li(") => {
            let q = cur.int()?;
            if !(cur.eat(b',') && cur.eat_str("1/2") && cur.eat(b')')) {
                return Err(cur.err("expected ',1/2)'"));
            }
            let q = u32::try_from(q).map_err(|_| cur.err("polylog order out of range"))?;
            LinComb::atom(MzvAtom::polylog_half(q)?)
        }
        _ if cur.eat_str("ln2") => -&LinComb::atom(MzvAtom::ln2_atom()),
        _ => return Err(cur.err("expected a number or an atom")),
    };
    if cur.eat(b'^') {
        let k = cur.int()?;
        let k = u32::try_from(k).map_err(|_| cur.err("negative exponent"))?;
        return Ok(base.pow(k));
    }
    Ok(base)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_rendered_form() {
        let text = "z(9,3) + 3*z(9,1,2) - 1/2*z(2)*z(3)^2 + 5";
        let x = parse_lincomb(text).unwrap();
        assert_eq!(x.len(), 4);
        assert_eq!(parse_lincomb(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn ln2_sugar() {
        let x = parse_lincomb("ln2^3").unwrap();
        assert_eq!(x.to_string(), "-z(-1)^3");
        let y = parse_lincomb("2*Li(4,1/2)*ln2").unwrap();
        assert_eq!(y.to_string(), "-2*z(-1)*Li(4,1/2)");
    }

    #[test]
    fn zero_and_errors() {
        assert!(parse_lincomb("0").unwrap().is_zero());
        assert!(parse_lincomb("z(1,2)").is_err());
        assert!(parse_lincomb("3*").is_err());
        assert!(parse_lincomb("z(2) z(3)").is_err());
        assert!(parse_lincomb("1/0").is_err());
    }
}
