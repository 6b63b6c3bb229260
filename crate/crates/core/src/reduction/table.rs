//! Identity tables: user-supplied atom reductions in JSON lines.

use std::collections::BTreeMap;
use std::io::{BufRead, BufReader, Read};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{JsonTerm, LinComb, MzvAtom};
use crate::numerics::{Evaluator, NumericError};

use super::rules::{apply_alt_depth1, apply_k1l, rule_depth2_oddweight};
use super::{default_ruleset, reduce};

/// Weight bound of the generated starter table.
pub const STARTER_MAX_WEIGHT: u32 = 12;

#[derive(Debug, Error)]
pub enum TableError {
    #[error("cannot read table {source_label}: {message}")]
    Io {
        source_label: String,
        message: String,
    },
    #[error("{source_label}:{line}: malformed JSON: {message}")]
    Json {
        source_label: String,
        line: usize,
        message: String,
    },
    #[error("{source_label}:{line}: {message}")]
    Syntax {
        source_label: String,
        line: usize,
        message: String,
    },
    #[error("{0}")]
    Numeric(#[from] NumericError),
}

#[derive(Serialize, Deserialize)]
struct TableLine {
    lhs: String,
    rhs: Vec<JsonTerm>,
    weight: u32,
}

/// One rejected entry.
#[derive(Clone, Debug, PartialEq)]
pub struct TableRejection {
    pub line: usize,
    pub lhs: String,
    pub reason: String,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct TableReport {
    pub accepted: usize,
    pub rejected: Vec<TableRejection>,
}

/// Validated mapping from atoms to their reductions.
#[derive(Clone, Debug, PartialEq)]
pub struct IdentityTable {
    source: String,
    entries: BTreeMap<MzvAtom, LinComb>,
}

impl IdentityTable {
    pub fn new(source: impl Into<String>) -> Self {
        IdentityTable {
            source: source.into(),
            entries: BTreeMap::new(),
        }
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn get(&self, atom: &MzvAtom) -> Option<&LinComb> {
        self.entries.get(atom)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&MzvAtom, &LinComb)> {
        self.entries.iter()
    }

    pub fn max_weight(&self) -> u32 {
        self.entries.keys().map(MzvAtom::weight).max().unwrap_or(0)
    }

    /// Adds an entry after the structural checks: weight homogeneity and no
    /// occurrence of the key on its own right-hand side.
    pub fn insert(&mut self, lhs: MzvAtom, rhs: LinComb) -> Result<(), String> {
        check_entry(&lhs, &rhs, lhs.weight())?;
        if self.entries.contains_key(&lhs) {
            return Err("duplicate entry".into());
        }
        self.entries.insert(lhs, rhs);
        Ok(())
    }

    /// JSON-lines rendering, one entry per line in atom order.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for (lhs, rhs) in &self.entries {
            let line = TableLine {
                lhs: lhs.to_string(),
                rhs: rhs.to_json_terms(),
                weight: lhs.weight(),
            };
            out.push_str(&serde_json::to_string(&line).expect("serializable"));
            out.push('\n');
        }
        out
    }
}

fn check_entry(lhs: &MzvAtom, rhs: &LinComb, declared: u32) -> Result<(), String> {
    let w = lhs.weight();
    if declared != w {
        return Err(format!(
            "declared weight {declared} but the key has weight {w}"
        ));
    }
    for (term, _) in rhs.iter() {
        if term.weight() != w {
            return Err(format!(
                "right-hand term {term} has weight {}, expected {w}",
                term.weight()
            ));
        }
        if term.factors().contains(lhs) {
            return Err("key occurs on its own right-hand side".into());
        }
    }
    Ok(())
}

/// Reads a JSON-lines table. Unreadable input, malformed JSON and
/// unparsable atoms or coefficients fail the whole file; entries that break
/// weight homogeneity, repeat a key or (when `verify_tol` is set) disagree
/// numerically with the oracle are dropped and listed in the report.
pub fn load_identity_table(
    source: impl Read,
    label: &str,
    verify_tol: Option<f64>,
) -> Result<(IdentityTable, TableReport), TableError> {
    let evaluator = verify_tol.map(Evaluator::new).transpose()?;
    let mut table = IdentityTable::new(label);
    let mut report = TableReport::default();
    for (i, line) in BufReader::new(source).lines().enumerate() {
        let line_no = i + 1;
        let line = line.map_err(|e| TableError::Io {
            source_label: label.to_string(),
            message: e.to_string(),
        })?;
        if line.trim().is_empty() {
            continue;
        }
        let parsed: TableLine = serde_json::from_str(&line).map_err(|e| TableError::Json {
            source_label: label.to_string(),
            line: line_no,
            message: e.to_string(),
        })?;
        let syntax = |message: String| TableError::Syntax {
            source_label: label.to_string(),
            line: line_no,
            message,
        };
        let lhs: MzvAtom = parsed.lhs.parse().map_err(|e| syntax(format!("{e}")))?;
        let rhs = LinComb::from_json_terms(&parsed.rhs).map_err(|e| syntax(format!("{e}")))?;
        let mut reject = |reason: String| {
            report.rejected.push(TableRejection {
                line: line_no,
                lhs: parsed.lhs.clone(),
                reason,
            })
        };
        if let Err(reason) = check_entry(&lhs, &rhs, parsed.weight) {
            reject(reason);
            continue;
        }
        if let Some(ev) = &evaluator {
            let tol = ev.tol();
            let left = ev.atom(&lhs)?;
            let right = ev.lincomb(&rhs)?;
            let gap = left.discrepancy(&right);
            if !left.agrees_with(&right, tol) {
                reject(format!(
                    "numeric mismatch {gap:e} exceeds tolerance {tol:e}"
                ));
                continue;
            }
        }
        if let Err(reason) = table.insert(lhs, rhs) {
            reject(reason);
            continue;
        }
        report.accepted += 1;
    }
    Ok((table, report))
}

/// Reductions the crate derives itself, up to [`STARTER_MAX_WEIGHT`]:
/// alternating single zetas, `ζ(k+1,{1}_l)` and all depth-2 atoms of odd
/// weight, each fully reduced by the default rules.
pub fn starter_table() -> IdentityTable {
    let mut candidates: Vec<(MzvAtom, LinComb)> = Vec::new();
    for s in 2..=STARTER_MAX_WEIGHT as i32 {
        let atom = MzvAtom::zeta_unchecked(vec![-s]);
        candidates.extend(apply_alt_depth1(&atom).map(|v| (atom, v)));
    }
    for w in 3..=STARTER_MAX_WEIGHT {
        for l in 1..w - 1 {
            let mut args = vec![(w - l) as i32];
            args.extend(std::iter::repeat_n(1, l as usize));
            let atom = MzvAtom::zeta_unchecked(args);
            candidates.extend(apply_k1l(&atom).map(|v| (atom, v)));
        }
    }
    for w in (3..=STARTER_MAX_WEIGHT as i32).step_by(2) {
        for s in 1..w {
            for (a, b) in [(s, w - s), (-s, w - s), (s, s - w), (-s, s - w)] {
                if let Ok(atom) = MzvAtom::zeta(vec![a, b]) {
                    candidates.extend(rule_depth2_oddweight(&atom).map(|v| (atom, v)));
                }
            }
        }
    }
    let rules = default_ruleset();
    let mut table = IdentityTable::new("builtin:starter");
    for (atom, raw) in candidates {
        if table.get(&atom).is_some() {
            continue;
        }
        let value = reduce(&raw, &[], &rules).value;
        table
            .insert(atom, value)
            .expect("derived identities are weight-homogeneous");
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_lincomb;

    fn load(text: &str, tol: Option<f64>) -> Result<(IdentityTable, TableReport), TableError> {
        load_identity_table(text.as_bytes(), "test", tol)
    }

    #[test]
    fn accepts_true_entry() {
        let (t, r) = load(
            r#"{"lhs":"z(2,1)","rhs":[{"factors":["z(3)"],"coeff":"1"}],"weight":3}"#,
            Some(1e-10),
        )
        .unwrap();
        assert_eq!(r.accepted, 1);
        assert_eq!(
            t.get(&"z(2,1)".parse().unwrap()),
            Some(&parse_lincomb("z(3)").unwrap())
        );
    }

    #[test]
    fn rejects_false_entry_under_verification() {
        let text = r#"{"lhs":"z(2,1)","rhs":[{"factors":["z(3)"],"coeff":"2"}],"weight":3}"#;
        let (t, r) = load(text, Some(1e-10)).unwrap();
        assert!(t.is_empty());
        assert_eq!(r.rejected.len(), 1);
        assert!(r.rejected[0].reason.contains("numeric mismatch"));
        let (t, _) = load(text, None).unwrap();
        assert_eq!(t.len(), 1);
    }

    #[test]
    fn entry_level_rejections() {
        let text = concat!(
            r#"{"lhs":"z(2,1)","rhs":[{"factors":["z(3)"],"coeff":"1"}],"weight":4}"#,
            "\n",
            r#"{"lhs":"z(3,1)","rhs":[{"factors":["z(3)"],"coeff":"1"}],"weight":4}"#,
            "\n\n",
            r#"{"lhs":"z(5)","rhs":[{"factors":["z(5)"],"coeff":"1"}],"weight":5}"#,
            "\n",
            r#"{"lhs":"z(3,1)","rhs":[{"factors":["z(4)"],"coeff":"1/4"}],"weight":4}"#,
            "\n",
            r#"{"lhs":"z(3,1)","rhs":[{"factors":["z(4)"],"coeff":"1/4"}],"weight":4}"#,
        );
        let (t, r) = load(text, None).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(r.accepted, 1);
        let lines: Vec<usize> = r.rejected.iter().map(|x| x.line).collect();
        assert_eq!(lines, [1, 2, 4, 6]);
    }

    #[test]
    fn file_level_errors() {
        assert!(matches!(
            load("{not json", None),
            Err(TableError::Json { line: 1, .. })
        ));
        assert!(matches!(
            load(r#"{"lhs":"z(1,2)","rhs":[],"weight":3}"#, None),
            Err(TableError::Syntax { .. })
        ));
        assert!(matches!(
            load(
                r#"{"lhs":"z(2,1)","rhs":[{"factors":["z(3)"],"coeff":"x"}],"weight":3}"#,
                None
            ),
            Err(TableError::Syntax { .. })
        ));
    }

    #[test]
    fn empty_table() {
        let (t, r) = load("", None).unwrap();
        assert!(t.is_empty());
        assert_eq!(r, TableReport::default());
    }

    #[test]
    fn round_trip() {
        let t = starter_table();
        let (back, r) = load(&t.to_jsonl(), None).unwrap();
        assert!(r.rejected.is_empty());
        assert_eq!(back.len(), t.len());
        assert_eq!(
            back.iter().collect::<Vec<_>>(),
            t.iter().collect::<Vec<_>>()
        );
    }

    #[test]
    fn starter_contents() {
        let t = starter_table();
        assert_eq!(t.max_weight(), STARTER_MAX_WEIGHT);
        assert_eq!(
            t.get(&"z(2,1)".parse().unwrap()),
            Some(&parse_lincomb("z(3)").unwrap())
        );
        assert_eq!(
            t.get(&"z(-5)".parse().unwrap()),
            Some(&parse_lincomb("-15/16*z(5)").unwrap())
        );
        for (lhs, rhs) in t.iter() {
            assert!(
                super::super::unresolved_atoms(rhs).is_empty(),
                "{lhs} -> {rhs}"
            );
        }
    }
}
