//! Euler-sum indices: parsing, canonical form, metadata and rendering.
//!
//! An index is a signed multiset of harmonic exponents plus a signed outer
//! exponent. Entry `+i` is the factor `H_n^(i)`, entry `-i` the alternating
//! factor `H̄_n^(i) = Σ_{k≤n} (-1)^(k-1)/k^i`; outer `+q` is `1/n^q` and
//! outer `-q` is `(-1)^(n-1)/n^q`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum IndexError {
    #[error("parse error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("empty index")]
    Empty,
    #[error("zero entry at byte {position}")]
    ZeroEntry { position: usize },
    #[error("{0} diverges: an unbarred outer exponent must be at least 2")]
    Divergent(String),
}

/// Output flavour for [`EulerSumIndex::render`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndexStyle {
    Plain,
    Latex,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EulerSumIndex {
    inner: Vec<i32>,
    outer: i32,
}

impl EulerSumIndex {
    /// Validates and canonicalizes. Inner entries are reordered: unbarred
    /// ascending, then barred ascending by absolute value.
    pub fn new(mut inner: Vec<i32>, outer: i32) -> Result<Self, IndexError> {
        if inner.contains(&0) || outer == 0 {
            return Err(IndexError::ZeroEntry { position: 0 });
        }
        canonical_sort(&mut inner);
        let idx = EulerSumIndex { inner, outer };
        if outer == 1 {
            return Err(IndexError::Divergent(idx.render(IndexStyle::Plain)));
        }
        Ok(idx)
    }

    pub fn inner(&self) -> &[i32] {
        &self.inner
    }

    pub fn outer(&self) -> i32 {
        self.outer
    }

    pub fn weight(&self) -> u32 {
        self.inner.iter().map(|i| i.unsigned_abs()).sum::<u32>() + self.outer.unsigned_abs()
    }

    pub fn degree(&self) -> usize {
        self.inner.len()
    }

    /// Number of unbarred inner entries (the split point `l`).
    pub fn unbarred_count(&self) -> usize {
        self.inner.iter().filter(|&&i| i > 0).count()
    }

    pub fn is_alternating(&self) -> bool {
        self.outer < 0 || self.inner.iter().any(|&i| i < 0)
    }

    /// Sums with outer `1̄` converge only conditionally.
    pub fn is_conditionally_convergent(&self) -> bool {
        self.outer == -1
    }

    pub fn render(&self, style: IndexStyle) -> String {
        match style {
            IndexStyle::Plain => {
                let all: Vec<String> = self
                    .inner
                    .iter()
                    .chain(std::iter::once(&self.outer))
                    .map(|v| v.to_string())
                    .collect();
                format!("S({})", all.join(","))
            }
            IndexStyle::Json => serde_json::to_string(self).unwrap_or_default(),
            IndexStyle::Latex => self.render_latex(),
        }
    }

    fn render_latex(&self) -> String {
        fn entry(v: i32) -> String {
            let body = if v.unsigned_abs() >= 10 {
                format!("{{{}}}", v.unsigned_abs())
            } else {
                v.unsigned_abs().to_string()
            };
            if v < 0 {
                format!("\\bar{{{}}}", v.unsigned_abs())
            } else {
                body
            }
        }
        let mut inner = String::new();
        let mut i = 0;
        while i < self.inner.len() {
            let v = self.inner[i];
            let run = self.inner[i..].iter().take_while(|&&w| w == v).count();
            inner.push_str(&entry(v));
            if run > 1 {
                if run >= 10 {
                    inner.push_str(&format!("^{{{run}}}"));
                } else {
                    inner.push_str(&format!("^{run}"));
                }
            }
            i += run;
        }
        let outer = entry(self.outer);
        if self.inner.is_empty() {
            format!("S_{{{outer}}}")
        } else {
            format!("S_{{{inner},{outer}}}")
        }
    }
}

fn canonical_sort(inner: &mut [i32]) {
    inner.sort_by_key(|&v| (v < 0, v.unsigned_abs()));
}

impl fmt::Display for EulerSumIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(IndexStyle::Plain))
    }
}

impl FromStr for EulerSumIndex {
    type Err = IndexError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_index(s)
    }
}

/// Parses `S(e1,...,ek)` or a bare `e1,...,ek`; the last entry is the outer
/// exponent. Whitespace is insignificant.
pub fn parse_index(text: &str) -> Result<EulerSumIndex, IndexError> {
    let bytes = text.as_bytes();
    let mut pos = 0usize;
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    let syntax = |position: usize, message: &str| IndexError::Syntax {
        position,
        message: message.to_string(),
    };

    skip_ws(&mut pos);
    let wrapped = bytes.get(pos) == Some(&b'S');
    if wrapped {
        pos += 1;
        skip_ws(&mut pos);
        if bytes.get(pos) != Some(&b'(') {
            return Err(syntax(pos, "expected '(' after 'S'"));
        }
        pos += 1;
        skip_ws(&mut pos);
        if bytes.get(pos) == Some(&b')') {
            return Err(IndexError::Empty);
        }
    } else if pos >= bytes.len() {
        return Err(IndexError::Empty);
    }

    let mut entries: Vec<i32> = Vec::new();
    loop {
        skip_ws(&mut pos);
        let start = pos;
        if bytes.get(pos) == Some(&b'-') {
            pos += 1;
        }
        let digits_start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        if digits_start == pos {
            return Err(syntax(pos, "expected an integer"));
        }
        if bytes[digits_start] == b'0' {
            if pos - digits_start == 1 {
                return Err(IndexError::ZeroEntry { position: start });
            }
            return Err(syntax(digits_start, "leading zero"));
        }
        let v: i32 = text[start..pos]
            .parse()
            .map_err(|_| syntax(start, "integer out of range"))?;
        entries.push(v);
        skip_ws(&mut pos);
        match bytes.get(pos) {
            Some(b',') => pos += 1,
            Some(b')') if wrapped => {
                pos += 1;
                skip_ws(&mut pos);
                if pos != bytes.len() {
                    return Err(syntax(pos, "trailing input after ')'"));
                }
                break;
            }
            None if !wrapped => break,
            None => return Err(syntax(pos, "missing ')'")),
            Some(_) => return Err(syntax(pos, "expected ',' or end of list")),
        }
    }
    let outer = entries.pop().ok_or(IndexError::Empty)?;
    EulerSumIndex::new(entries, outer)
}

/// Which sign patterns [`indices_of_weight`] produces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignFilter {
    /// No bars anywhere.
    Plain,
    /// At least one bar.
    Alternating,
    Any,
}

/// Every convergent index of the given weight with `1 <= degree <= max_degree`,
/// in canonical form and sorted.
pub fn indices_of_weight(weight: u32, filter: SignFilter, max_degree: usize) -> Vec<EulerSumIndex> {
    fn inner_multisets(
        remaining: u32,
        min_slot: usize,
        slots: &[i32],
        left: usize,
        current: &mut Vec<i32>,
        out: &mut Vec<Vec<i32>>,
    ) {
        if remaining == 0 {
            if !current.is_empty() {
                out.push(current.clone());
            }
            return;
        }
        if left == 0 {
            return;
        }
        for slot in min_slot..slots.len() {
            let v = slots[slot];
            if v.unsigned_abs() > remaining {
                break;
            }
            current.push(v);
            inner_multisets(
                remaining - v.unsigned_abs(),
                slot,
                slots,
                left - 1,
                current,
                out,
            );
            current.pop();
        }
    }

    let w = weight as i32;
    let slots: Vec<i32> = (1..w).flat_map(|v| [v, -v]).collect();
    let mut out = Vec::new();
    for q_abs in 1..w {
        for outer in [q_abs, -q_abs] {
            if outer == 1 {
                continue;
            }
            let mut inners = Vec::new();
            inner_multisets(
                (w - q_abs) as u32,
                0,
                &slots,
                max_degree,
                &mut Vec::new(),
                &mut inners,
            );
            for inner in inners {
                let Ok(idx) = EulerSumIndex::new(inner, outer) else {
                    continue;
                };
                let keep = match filter {
                    SignFilter::Plain => !idx.is_alternating(),
                    SignFilter::Alternating => idx.is_alternating(),
                    SignFilter::Any => true,
                };
                if keep {
                    out.push(idx);
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_bracketed_and_bare_inputs() {
        let a = parse_index("S(1,1,-3)").unwrap();
        assert_eq!(a.inner(), &[1, 1]);
        assert_eq!(a.outer(), -3);
        let b = parse_index("2,1,5").unwrap();
        assert_eq!(b.inner(), &[1, 2]);
        assert_eq!(b.outer(), 5);
        assert!(matches!(
            parse_index("S(1,1)"),
            Err(IndexError::Divergent(_))
        ));
    }

    #[test]
    fn parse_errors() {
        assert_eq!(parse_index("S()"), Err(IndexError::Empty));
        assert_eq!(parse_index(""), Err(IndexError::Empty));
        assert!(matches!(
            parse_index("S(1,0,2)"),
            Err(IndexError::ZeroEntry { position: 4 })
        ));
        assert!(matches!(
            parse_index("S(1,,2)"),
            Err(IndexError::Syntax { position: 4, .. })
        ));
        assert!(matches!(
            parse_index("S(1,2"),
            Err(IndexError::Syntax { .. })
        ));
        assert!(matches!(
            parse_index("S(1,2) x"),
            Err(IndexError::Syntax { .. })
        ));
        assert!(matches!(
            parse_index("1,02"),
            Err(IndexError::Syntax { .. })
        ));
        assert!(matches!(
            parse_index("1;2"),
            Err(IndexError::Syntax { position: 1, .. })
        ));
    }

    #[test]
    fn barred_outer_one_is_accepted() {
        let i = parse_index("S(1,1,1,1,1,-1)").unwrap();
        assert!(i.is_conditionally_convergent());
        assert_eq!(i.weight(), 6);
    }

    #[test]
    fn mixed_signs_sort_unbarred_first() {
        let i = parse_index("S(-2,3,-1,1,4)").unwrap();
        assert_eq!(i.inner(), &[1, 3, -1, -2]);
        assert_eq!(i.unbarred_count(), 2);
    }

    #[test]
    fn weight_and_degree() {
        let i = EulerSumIndex::new(vec![1, 1, 2, 2, 2, 5], 2).unwrap();
        assert_eq!(i.weight(), 15);
        assert_eq!(i.degree(), 6);
        assert_eq!(parse_index("S(3,4)").unwrap().degree(), 1);
        assert_eq!(parse_index("S(1,1,-3)").unwrap().weight(), 5);
    }

    #[test]
    fn rendering() {
        let i = parse_index("S(1,1,-3)").unwrap();
        assert_eq!(i.render(IndexStyle::Plain), "S(1,1,-3)");
        let j = EulerSumIndex::new(vec![2, 2, 2], 2).unwrap();
        assert_eq!(j.render(IndexStyle::Latex), "S_{2^3,2}");
        let k = EulerSumIndex::new(vec![], 5).unwrap();
        assert_eq!(k.render(IndexStyle::Plain), "S(5)");
        assert_eq!(k.degree(), 0);
        assert_eq!(i.render(IndexStyle::Latex), "S_{1^2,\\bar{3}}");
        assert_eq!(
            EulerSumIndex::new(vec![1, -1], 3)
                .unwrap()
                .render(IndexStyle::Latex),
            "S_{1\\bar{1},3}"
        );
        assert_eq!(i.render(IndexStyle::Json), r#"{"inner":[1,1],"outer":-3}"#);
    }

    fn valid_index() -> impl Strategy<Value = EulerSumIndex> {
        (
            prop::collection::vec(prop_oneof![1i32..6, -5i32..0], 0..6),
            prop_oneof![2i32..8, -7i32..0],
        )
            .prop_map(|(inner, outer)| EulerSumIndex::new(inner, outer).unwrap())
    }

    proptest! {
        #[test]
        fn parse_render_round_trip(idx in valid_index()) {
            prop_assert_eq!(parse_index(&idx.render(IndexStyle::Plain)).unwrap(), idx);
        }

        #[test]
        fn canonicalization_ignores_order(idx in valid_index(), rot in 0usize..6) {
            let mut inner = idx.inner().to_vec();
            if !inner.is_empty() {
                let r = rot % inner.len();
                inner.rotate_left(r);
                inner.reverse();
            }
            let again = EulerSumIndex::new(inner, idx.outer()).unwrap();
            prop_assert_eq!(&again, &idx);
            let twice = EulerSumIndex::new(again.inner().to_vec(), again.outer()).unwrap();
            prop_assert_eq!(twice, idx);
        }
    }

    #[test]
    fn plain_counts_by_weight() {
        let counts: Vec<usize> = (3..=11)
            .map(|w| indices_of_weight(w, SignFilter::Plain, usize::MAX).len())
            .collect();
        assert_eq!(counts, vec![1, 3, 6, 11, 18, 29, 44, 66, 96]);
    }

    #[test]
    fn alternating_weight_two() {
        let got: Vec<String> = indices_of_weight(2, SignFilter::Alternating, 4)
            .iter()
            .map(|i| i.to_string())
            .collect();
        assert_eq!(got, vec!["S(-1,-1)", "S(1,-1)"]);
    }
}
