//! Rewriting of linear combinations of MZVs toward a basis of single zeta
//! values, `ln 2`, `Li_q(1/2)` and whatever irreducible atoms remain.
//!
//! A reduction substitutes identity-table entries first, then applies the
//! closed-form rules in order until nothing changes. Each step rewrites one
//! atom (or one term for the whole-combination rules), so the trace lists
//! every identity used.

mod rules;
mod symmetric;
mod table;
mod wkl;

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{LinComb, MzvAtom, SymbolicTerm};
use crate::expansion::ExpansionError;
use crate::index::IndexError;

pub use rules::{
    rule_alt_depth1, rule_depth2_oddweight, rule_repeated, rule_repeated_bar, MAX_REPEAT,
};
pub use symmetric::{rule_reflection, rule_reflection3, rule_symmetric_triple};
pub use table::{
    load_identity_table, starter_table, IdentityTable, TableError, TableRejection, TableReport,
    STARTER_MAX_WEIGHT,
};
pub use wkl::{even_product_ratio, normalize_even_products, w_integral, zeta_k1l, MAX_KL};

/// Retained trace length per reduction.
pub const MAX_TRACE: usize = 10_000;
/// Hard cap on rewrite steps; guards against cyclic identity tables.
pub const MAX_STEPS: usize = 100_000;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ReductionError {
    #[error("W({k},{l}) needs k >= 1 and k + l <= {max}")]
    Range { k: u32, l: u32, max: u32 },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Index(#[from] IndexError),
    #[error(transparent)]
    Expansion(#[from] ExpansionError),
}

type AtomRewrite = fn(&MzvAtom) -> Option<LinComb>;
type CombinationRewrite = fn(&LinComb) -> Option<(String, LinComb)>;

#[derive(Clone, Copy)]
enum Action {
    Atom(AtomRewrite),
    Combination(CombinationRewrite),
}

/// A named rewrite: either an atom-level identity (matcher plus rewriter
/// in one function returning `None` when it does not apply) or a
/// combination-level identity that needs partner terms.
#[derive(Clone, Copy)]
pub struct IdentityRule {
    pub name: &'static str,
    action: Action,
}

impl std::fmt::Debug for IdentityRule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name)
    }
}

impl IdentityRule {
    /// `ζ(s̄) → (2^{1-s} - 1) ζ(s)`.
    pub fn alt_depth1() -> Self {
        IdentityRule {
            name: "alt-depth1",
            action: Action::Atom(rules::apply_alt_depth1),
        }
    }

    /// `ζ({r}_m)` and `ζ({r̄}_m)` recurrences.
    pub fn repeated() -> Self {
        IdentityRule {
            name: "repeated",
            action: Action::Atom(rules::apply_repeated),
        }
    }

    /// `ζ(k+1,{1}_l)` through `W(k,l)`.
    pub fn k1l() -> Self {
        IdentityRule {
            name: "k1l",
            action: Action::Atom(rules::apply_k1l),
        }
    }

    /// Depth-2 atoms of odd weight, any signs.
    pub fn depth2_oddweight() -> Self {
        IdentityRule {
            name: "depth2-odd",
            action: Action::Atom(rule_depth2_oddweight),
        }
    }

    /// `ζ(a,b) + ζ(b,a)` where both occur with the same cofactor.
    pub fn reflection() -> Self {
        IdentityRule {
            name: "reflection",
            action: Action::Combination(|x| {
                symmetric::apply_pair(x).map(|(a, y)| (a.to_string(), y))
            }),
        }
    }

    /// Sums over the orderings of `ζ(a,b,c)` where all occur with the same
    /// cofactor.
    pub fn reflection3() -> Self {
        IdentityRule {
            name: "reflection3",
            action: Action::Combination(|x| {
                symmetric::apply_triple(x).map(|(a, y)| (a.to_string(), y))
            }),
        }
    }

    /// `ζ(2a)ζ(2b) → r·ζ(2a+2b)`.
    pub fn even_products() -> Self {
        IdentityRule {
            name: "even-product",
            action: Action::Combination(apply_even_products),
        }
    }

    /// Whether the rule rewrites `atom` on its own. Combination rules never
    /// match single atoms.
    pub fn matches(&self, atom: &MzvAtom) -> bool {
        self.rewrite(atom).is_some()
    }

    /// The rewrite of `atom`, for atom-level rules.
    pub fn rewrite(&self, atom: &MzvAtom) -> Option<LinComb> {
        match self.action {
            Action::Atom(f) => f(atom),
            Action::Combination(_) => None,
        }
    }
}

fn apply_even_products(x: &LinComb) -> Option<(String, LinComb)> {
    for (term, c) in x.iter() {
        if let Some((merged, r)) = wkl::merge_even_pair(term) {
            let mut out = x.clone();
            out.add_term(term.clone(), -c.clone());
            out.add_term(merged, c * r);
            return Some((term.to_string(), out));
        }
    }
    None
}

/// Tables, then single alternating zetas, repeated arguments,
/// `ζ(k+1,{1}_l)`, depth-2 odd weight, the symmetric-sum identities and
/// finally even-zeta products.
pub fn default_ruleset() -> Vec<IdentityRule> {
    vec![
        IdentityRule::alt_depth1(),
        IdentityRule::repeated(),
        IdentityRule::k1l(),
        IdentityRule::depth2_oddweight(),
        IdentityRule::reflection(),
        IdentityRule::reflection3(),
        IdentityRule::even_products(),
    ]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub rule: String,
    pub target: String,
}

#[derive(Clone, Debug)]
pub struct Reduction {
    pub value: LinComb,
    /// The first [`MAX_TRACE`] steps.
    pub trace: Vec<TraceStep>,
    pub steps: usize,
    /// False when [`MAX_STEPS`] was hit before a fixpoint.
    pub converged: bool,
}

/// Replaces every occurrence of `atom` in `x` by `value`.
pub fn substitute(x: &LinComb, atom: &MzvAtom, value: &LinComb) -> LinComb {
    let mut out = LinComb::zero();
    for (term, c) in x.iter() {
        let k = term.factors().iter().filter(|f| *f == atom).count();
        if k == 0 {
            out.add_term(term.clone(), c.clone());
            continue;
        }
        let rest: Vec<MzvAtom> = term
            .factors()
            .iter()
            .filter(|f| *f != atom)
            .cloned()
            .collect();
        let rest = LinComb::from_term(SymbolicTerm::new(rest), c.clone());
        out = out + &rest * &value.pow(k as u32);
    }
    out
}

fn assert_weight(atom: &MzvAtom, value: &LinComb, rule: &str) {
    if let Some(w) = value.homogeneous_weight() {
        assert_eq!(
            w,
            atom.weight(),
            "rule {rule} broke weight homogeneity on {atom}"
        );
    } else {
        assert!(
            value.is_zero(),
            "rule {rule} produced a mixed-weight rewrite of {atom}"
        );
    }
}

/// Rewrites `input` to a fixpoint of `tables` followed by `ruleset`.
pub fn reduce(input: &LinComb, tables: &[IdentityTable], ruleset: &[IdentityRule]) -> Reduction {
    let input_weight = input.homogeneous_weight();
    let mut current = input.clone();
    let mut trace = Vec::new();
    let mut steps = 0usize;
    let mut memo: HashMap<(usize, MzvAtom), Option<LinComb>> = HashMap::new();
    let record = |trace: &mut Vec<TraceStep>, rule: String, target: String| {
        if trace.len() < MAX_TRACE {
            trace.push(TraceStep { rule, target });
        }
    };
    'outer: loop {
        if steps >= MAX_STEPS {
            return Reduction {
                value: current,
                trace,
                steps,
                converged: false,
            };
        }
        let atoms = current.atoms();
        for atom in &atoms {
            if let Some((table, value)) = tables.iter().find_map(|t| t.get(atom).map(|v| (t, v))) {
                current = substitute(&current, atom, value);
                record(
                    &mut trace,
                    format!("table:{}", table.source()),
                    atom.to_string(),
                );
                steps += 1;
                continue 'outer;
            }
        }
        for (ri, rule) in ruleset.iter().enumerate() {
            match rule.action {
                Action::Atom(f) => {
                    for atom in &atoms {
                        let value = memo
                            .entry((ri, atom.clone()))
                            .or_insert_with(|| f(atom))
                            .clone();
                        if let Some(value) = value {
                            assert_weight(atom, &value, rule.name);
                            current = substitute(&current, atom, &value);
                            record(&mut trace, rule.name.to_string(), atom.to_string());
                            steps += 1;
                            continue 'outer;
                        }
                    }
                }
                Action::Combination(f) => {
                    if let Some((target, next)) = f(&current) {
                        if let Some(w) = input_weight {
                            assert!(
                                next.is_zero() || next.homogeneous_weight() == Some(w),
                                "rule {} broke weight homogeneity",
                                rule.name
                            );
                        }
                        current = next;
                        record(&mut trace, rule.name.to_string(), target);
                        steps += 1;
                        continue 'outer;
                    }
                }
            }
        }
        return Reduction {
            value: current,
            trace,
            steps,
            converged: true,
        };
    }
}

/// Basis atoms: `ζ(s)` for `s >= 2`, `ζ(1̄) = -ln 2` and `Li_q(1/2)`.
pub fn is_basis_atom(atom: &MzvAtom) -> bool {
    match atom {
        MzvAtom::PolylogHalf(_) => true,
        MzvAtom::Zeta(args) => matches!(args.as_slice(), [s] if *s >= 2 || *s == -1),
    }
}

/// Atoms of `x` outside the basis.
pub fn unresolved_atoms(x: &LinComb) -> BTreeSet<MzvAtom> {
    x.atoms()
        .into_iter()
        .filter(|a| !is_basis_atom(a))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_lincomb;
    use crate::expansion::expand_theorem1;
    use crate::index::parse_index;

    fn p(s: &str) -> LinComb {
        parse_lincomb(s).unwrap()
    }

    fn red(x: &LinComb) -> LinComb {
        let r = reduce(x, &[], &default_ruleset());
        assert!(r.converged);
        r.value
    }

    fn expand(s: &str) -> LinComb {
        expand_theorem1(&parse_index(s).unwrap()).unwrap()
    }

    #[test]
    fn confirmations() {
        assert_eq!(red(&p("z(2,1)")), p("z(3)"));
        assert_eq!(red(&p("z(-2)")), p("-1/2*z(2)"));
        assert_eq!(red(&p("z(-1)")), p("z(-1)"));
    }

    #[test]
    fn substitution_handles_powers() {
        let x = p("z(3,1)^2*z(5) + z(2)");
        let y = substitute(&x, &"z(3,1)".parse().unwrap(), &p("1/4*z(4)"));
        assert_eq!(y, p("1/16*z(4)^2*z(5) + z(2)"));
    }

    #[test]
    fn cubic_repeated_sum() {
        // S_{r²,r} = ⅓ζ³(r) - ⅓ζ(3r) + S_{r,2r}
        for r in 2..6 {
            let lhs = red(&expand(&format!("S({r},{r},{r})")));
            let mut rhs = red(&expand(&format!("S({r},{})", 2 * r)));
            rhs = rhs + red(&p(&format!("1/3*z({r})^3 - 1/3*z({})", 3 * r)));
            assert_eq!(lhs, red(&rhs), "r={r}");
        }
    }

    #[test]
    fn alternating_cubic_repeated_sum() {
        // S_{r̄²,r̄} = S_{r̄,2r} + ⅓(ζ(3r̄) - ζ(r̄)³)
        for r in 1..5 {
            let lhs = red(&expand(&format!("S(-{r},-{r},-{r})")));
            let rhs = expand(&format!("S(-{r},{})", 2 * r))
                + p(&format!("1/3*z(-{}) - 1/3*z(-{r})^3", 3 * r));
            assert_eq!(lhs, red(&rhs), "r={r}");
        }
    }

    #[test]
    fn odd_linear_sum_reduces_fully() {
        let r = red(&expand("S(8,9)"));
        assert!(unresolved_atoms(&r).is_empty(), "{r}");
        assert_eq!(r.homogeneous_weight(), Some(17));
    }

    #[test]
    fn alternating_cube_of_ones() {
        // S_{1̄²,1̄} = -½ζ(3) + 3/2 ζ(2) ln2 + ⅓ ln³2, with ln2 = -z(-1)
        let r = red(&expand("S(-1,-1,-1)"));
        assert_eq!(r, p("-1/2*z(3) - 3/2*z(2)*z(-1) - 1/3*z(-1)^3"));
    }

    #[test]
    fn idempotent() {
        for s in ["S(2,2,4)", "S(1,-2,3)", "S(3,3,3,3)", "S(1,1,1,9)"] {
            let once = red(&expand(s));
            assert_eq!(red(&once), once, "{s}");
        }
    }

    #[test]
    fn order_independent_fixpoint() {
        let mut reversed = default_ruleset();
        reversed.reverse();
        for s in [
            "S(2,2,4)",
            "S(1,-2,3)",
            "S(3,3,3,3)",
            "S(-2,-2,2)",
            "S(2,2,2,2)",
            "S(1,2,-3)",
        ] {
            let x = expand(s);
            let a = reduce(&x, &[], &default_ruleset()).value;
            let b = reduce(&x, &[], &reversed).value;
            assert_eq!(a, b, "{s}");
        }
    }

    #[test]
    fn trace_names_rules() {
        let r = reduce(&p("z(2,1) + z(-3)"), &[], &default_ruleset());
        let rules: Vec<&str> = r.trace.iter().map(|t| t.rule.as_str()).collect();
        assert_eq!(rules, ["alt-depth1", "k1l"]);
        assert_eq!(r.steps, 2);
    }

    #[test]
    fn basis() {
        let x = p("z(3)*z(-1) + Li(4,1/2) + z(5,-1) + z(-3)");
        let names: Vec<String> = unresolved_atoms(&x).iter().map(|a| a.to_string()).collect();
        assert_eq!(names, ["z(-3)", "z(5,-1)"]);
    }
}
