use std::collections::HashMap;
use std::sync::Mutex;

use twofloat::TwoFloat;

use crate::algebra::{LinComb, MzvAtom, SymbolicTerm};

use super::atom::eval_atom;
use super::dd::{dd_abs, rational_to_dd};
use super::{check_tol, rounding_floor, NumericError, NumericResult, MIN_ATOM_TOL};

/// Evaluates atoms, terms and linear combinations at one tolerance, caching
/// atom values. Safe to share across threads.
pub struct Evaluator {
    tol: f64,
    cache: Mutex<HashMap<MzvAtom, NumericResult>>,
}

impl Evaluator {
    pub fn new(target_tol: f64) -> Result<Self, NumericError> {
        check_tol(target_tol, MIN_ATOM_TOL)?;
        Ok(Evaluator {
            tol: target_tol,
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn atom(&self, atom: &MzvAtom) -> Result<NumericResult, NumericError> {
        if let Some(r) = self.cache.lock().expect("cache poisoned").get(atom) {
            return Ok(*r);
        }
        let r = eval_atom(atom, self.tol)?;
        self.cache
            .lock()
            .expect("cache poisoned")
            .insert(atom.clone(), r);
        Ok(r)
    }

    /// Product of atom values; the bound `Σ_i e_i Π_{j≠i} (|v_j| + e_j)`
    /// covers all orders of the error expansion.
    pub fn term(&self, term: &SymbolicTerm) -> Result<NumericResult, NumericError> {
        let parts: Vec<NumericResult> = term
            .factors()
            .iter()
            .map(|a| self.atom(a))
            .collect::<Result<_, _>>()?;
        let mut value = TwoFloat::from(1.0);
        for p in &parts {
            value *= p.value;
        }
        let mut bound = 0.0;
        for (i, p) in parts.iter().enumerate() {
            let others: f64 = parts
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, o)| dd_abs(o.value) + o.tail_bound)
                .product();
            bound += p.tail_bound * others;
        }
        Ok(NumericResult {
            value,
            tail_bound: bound + rounding_floor(parts.len(), dd_abs(value)),
            terms_used: parts.iter().map(|p| p.terms_used).max().unwrap_or(0),
        })
    }

    pub fn lincomb(&self, x: &LinComb) -> Result<NumericResult, NumericError> {
        let mut value = TwoFloat::from(0.0);
        let mut bound = 0.0;
        let mut magnitude = 0.0;
        let mut terms_used = 0;
        for (term, c) in x.iter() {
            let t = self.term(term)?;
            let c = rational_to_dd(c);
            let contribution = c * t.value;
            value += contribution;
            bound += dd_abs(c) * t.tail_bound;
            magnitude += dd_abs(contribution);
            terms_used = terms_used.max(t.terms_used);
        }
        Ok(NumericResult {
            value,
            tail_bound: bound + rounding_floor(2 * x.len() + 1, magnitude),
            terms_used,
        })
    }
}

pub fn eval_term(term: &SymbolicTerm, target_tol: f64) -> Result<NumericResult, NumericError> {
    Evaluator::new(target_tol)?.term(term)
}

pub fn eval_lincomb(x: &LinComb, target_tol: f64) -> Result<NumericResult, NumericError> {
    Evaluator::new(target_tol)?.lincomb(x)
}
