use std::fmt;
use std::str::FromStr;

use super::AlgebraError;

/// One (alternating) multiple zeta value, or the polylogarithm constant
/// `Li_q(1/2)`.
///
/// Zeta arguments are signed: a negative entry `-s` stands for the barred
/// argument `s̄`, i.e. the summation variable in that slot carries `(-1)^n`.
/// `ζ(1̄) = -ln 2` is the atom `z(-1)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MzvAtom {
    Zeta(Vec<i32>),
    PolylogHalf(u32),
}

impl MzvAtom {
    /// Builds an admissible zeta atom. The leading argument may not be `+1`.
    pub fn zeta(args: impl Into<Vec<i32>>) -> Result<Self, AlgebraError> {
        let args = args.into();
        if args.is_empty() {
            return Err(AlgebraError::EmptyAtom);
        }
        if let Some(pos) = args.iter().position(|&a| a == 0) {
            return Err(AlgebraError::ZeroArgument { position: pos });
        }
        if args[0] == 1 {
            return Err(AlgebraError::Divergent(render_zeta(&args)));
        }
        Ok(MzvAtom::Zeta(args))
    }

    /// Panicking constructor for call sites whose arguments are admissible by
    /// construction. A failure here is a logic bug.
    pub fn zeta_unchecked(args: impl Into<Vec<i32>>) -> Self {
        match Self::zeta(args) {
            Ok(a) => a,
            Err(e) => panic!("internal error: inadmissible atom produced: {e}"),
        }
    }

    /// `Li_q(1/2)` for `q >= 2` (`Li_1(1/2)` is `ln 2`, already the atom `z(-1)`).
    pub fn polylog_half(q: u32) -> Result<Self, AlgebraError> {
        if q < 2 {
            return Err(AlgebraError::PolylogOrder(q));
        }
        Ok(MzvAtom::PolylogHalf(q))
    }

    /// `ζ(1̄) = -ln 2`.
    pub fn ln2_atom() -> Self {
        MzvAtom::Zeta(vec![-1])
    }

    pub fn weight(&self) -> u32 {
        match self {
            MzvAtom::Zeta(args) => args.iter().map(|a| a.unsigned_abs()).sum(),
            MzvAtom::PolylogHalf(q) => *q,
        }
    }

    /// Polylog constants count as depth 1: they are basis elements.
    pub fn depth(&self) -> usize {
        match self {
            MzvAtom::Zeta(args) => args.len(),
            MzvAtom::PolylogHalf(_) => 1,
        }
    }

    pub fn args(&self) -> Option<&[i32]> {
        match self {
            MzvAtom::Zeta(args) => Some(args),
            MzvAtom::PolylogHalf(_) => None,
        }
    }

    pub fn is_alternating(&self) -> bool {
        match self {
            MzvAtom::Zeta(args) => args.iter().any(|&a| a < 0),
            MzvAtom::PolylogHalf(_) => true,
        }
    }
}

fn render_zeta(args: &[i32]) -> String {
    let body: Vec<String> = args.iter().map(|a| a.to_string()).collect();
    format!("z({})", body.join(","))
}

impl fmt::Display for MzvAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MzvAtom::Zeta(args) => f.write_str(&render_zeta(args)),
            MzvAtom::PolylogHalf(q) => write!(f, "Li({q},1/2)"),
        }
    }
}

impl FromStr for MzvAtom {
    type Err = AlgebraError;

    /// Parses the canonical wire form: `z(a,b,...)` or `Li(q,1/2)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || AlgebraError::AtomSyntax(s.to_string());
        if let Some(body) = compact.strip_prefix("z(").and_then(|r| r.strip_suffix(')')) {
            let args = body
                .split(',')
                .map(|t| t.parse::<i32>().map_err(|_| bad()))
                .collect::<Result<Vec<_>, _>>()?;
            return MzvAtom::zeta(args);
        }
        if let Some(body) = compact
            .strip_prefix("Li(")
            .and_then(|r| r.strip_suffix(",1/2)"))
        {
            let q = body.parse::<u32>().map_err(|_| bad())?;
            return MzvAtom::polylog_half(q);
        }
        Err(bad())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn admissibility() {
        assert!(MzvAtom::zeta(vec![1, 2]).is_err());
        assert!(MzvAtom::zeta(vec![-1, 2]).is_ok());
        assert!(MzvAtom::zeta(vec![2, 0]).is_err());
        assert!(MzvAtom::zeta(Vec::<i32>::new()).is_err());
        assert!(MzvAtom::polylog_half(1).is_err());
    }

    #[test]
    fn weight_and_depth() {
        let a = MzvAtom::zeta(vec![-5, -1]).unwrap();
        assert_eq!(a.weight(), 6);
        assert_eq!(a.depth(), 2);
        assert_eq!(MzvAtom::polylog_half(4).unwrap().weight(), 4);
    }

    #[test]
    fn wire_form_round_trip() {
        for s in ["z(-5,-1)", "z(9,1,1,1)", "Li(4,1/2)", "z(-1)"] {
            let a: MzvAtom = s.parse().unwrap();
            assert_eq!(a.to_string(), s);
        }
        assert_eq!(
            "z( 2 , 1 )".parse::<MzvAtom>().unwrap().to_string(),
            "z(2,1)"
        );
        assert!("z(1)".parse::<MzvAtom>().is_err());
        assert!("zeta(2)".parse::<MzvAtom>().is_err());
        assert!("Li(4,1/3)".parse::<MzvAtom>().is_err());
    }
}
