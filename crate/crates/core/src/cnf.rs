//! 3-CNF formulas, DIMACS input, a brute-force satisfiability oracle and
//! SAT-Parity sequences.

use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

/// Largest variable count [`brute_force_sat`] will enumerate.
pub const MAX_BRUTE_FORCE_VARS: usize = 26;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CnfError {
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("clause at line {line} has {width} literals; at most 3 are allowed")]
    ClauseTooWide { line: usize, width: usize },
    #[error("literal {literal} out of range for {num_vars} variables")]
    LiteralOutOfRange { literal: i32, num_vars: usize },
    #[error("{0} variables exceed the brute-force cap of {MAX_BRUTE_FORCE_VARS}")]
    TooManyVariables(usize),
    #[error("sequence has odd length {0}")]
    OddLength(usize),
    #[error("sequence is empty")]
    EmptySequence,
    #[error("formula {unsat_index} is unsatisfiable but formula {sat_index} after it is satisfiable")]
    PromiseViolated { unsat_index: usize, sat_index: usize },
}

/// A 3-CNF formula. Every clause has exactly three literal slots; a
/// literal is `±v` for a variable `v` in `1..=num_vars`. Narrower clauses
/// are written with repeated literals.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<[i32; 3]>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<[i32; 3]>) -> Result<Self, CnfError> {
        for c in &clauses {
            for &l in c {
                let v = l.unsigned_abs() as usize;
                if l == 0 || v > num_vars {
                    return Err(CnfError::LiteralOutOfRange { literal: l, num_vars });
                }
            }
        }
        Ok(Self { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[[i32; 3]] {
        &self.clauses
    }

    /// Evaluates under `assignment`, where bit `v-1` holds variable `v`.
    pub fn eval(&self, assignment: u64) -> bool {
        self.clauses.iter().all(|c| {
            c.iter().any(|&l| {
                let bit = assignment >> (l.unsigned_abs() - 1) & 1 == 1;
                bit == (l > 0)
            })
        })
    }

    /// DIMACS text with repeated literals dropped from each clause.
    pub fn to_dimacs(&self) -> String {
        let mut s = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for c in &self.clauses {
            let mut seen: Vec<i32> = Vec::with_capacity(3);
            for &l in c {
                if !seen.contains(&l) {
                    seen.push(l);
                }
            }
            for l in seen {
                let _ = write!(s, "{l} ");
            }
            s.push_str("0\n");
        }
        s
    }
}

/// Parses DIMACS CNF. Clauses may span lines and must end in `0`; clauses
/// of width 1 or 2 are padded to width 3 by repeating their last literal.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula, CnfError> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current: Vec<i32> = Vec::new();
    let mut current_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let t = raw.trim();
        if t.is_empty() || t.starts_with('c') {
            continue;
        }
        if t.starts_with('%') {
            break;
        }
        if t.starts_with('p') {
            let parts: Vec<_> = t.split_whitespace().collect();
            if header.is_some() {
                return Err(CnfError::Parse { line, message: "second problem line".into() });
            }
            if parts.len() != 4 || parts[1] != "cnf" {
                return Err(CnfError::Parse { line, message: "expected `p cnf <vars> <clauses>`".into() });
            }
            let vars = parts[2].parse().map_err(|_| CnfError::Parse { line, message: "bad variable count".into() })?;
            let count = parts[3].parse().map_err(|_| CnfError::Parse { line, message: "bad clause count".into() })?;
            header = Some((vars, count));
            continue;
        }
        let Some((num_vars, _)) = header else {
            return Err(CnfError::Parse { line, message: "clause before problem line".into() });
        };
        for tok in t.split_whitespace() {
            let lit: i32 = tok
                .parse()
                .map_err(|_| CnfError::Parse { line, message: format!("bad literal {tok:?}") })?;
            if current.is_empty() {
                current_line = line;
            }
            if lit == 0 {
                clauses.push(pad_clause(&current, current_line)?);
                current.clear();
                continue;
            }
            if lit.unsigned_abs() as usize > num_vars {
                return Err(CnfError::LiteralOutOfRange { literal: lit, num_vars });
            }
            current.push(lit);
        }
    }
    let Some((num_vars, count)) = header else {
        return Err(CnfError::Parse { line: 0, message: "missing problem line".into() });
    };
    if !current.is_empty() {
        return Err(CnfError::Parse { line: current_line, message: "clause not terminated by 0".into() });
    }
    if clauses.len() != count {
        return Err(CnfError::Parse {
            line: 0,
            message: format!("problem line announces {count} clauses, found {}", clauses.len()),
        });
    }
    CnfFormula::new(num_vars, clauses)
}

fn pad_clause(lits: &[i32], line: usize) -> Result<[i32; 3], CnfError> {
    match *lits {
        [] => Err(CnfError::Parse { line, message: "empty clause".into() }),
        [a] => Ok([a, a, a]),
        [a, b] => Ok([a, b, b]),
        [a, b, c] => Ok([a, b, c]),
        _ => Err(CnfError::ClauseTooWide { line, width: lits.len() }),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SatOutcome {
    pub satisfiable: bool,
    /// `witness[v-1]` is the value of variable `v`.
    pub witness: Option<Vec<bool>>,
}

/// Tries all `2^num_vars` assignments in increasing binary order.
pub fn brute_force_sat(f: &CnfFormula) -> Result<SatOutcome, CnfError> {
    if f.num_vars > MAX_BRUTE_FORCE_VARS {
        return Err(CnfError::TooManyVariables(f.num_vars));
    }
    for a in 0..1u64 << f.num_vars {
        if f.eval(a) {
            let witness = (0..f.num_vars).map(|i| a >> i & 1 == 1).collect();
            return Ok(SatOutcome { satisfiable: true, witness: Some(witness) });
        }
    }
    Ok(SatOutcome { satisfiable: false, witness: None })
}

/// An even-length formula sequence whose satisfiable formulas form a
/// prefix; the prefix length is the split index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SatParityInstance {
    formulas: Vec<CnfFormula>,
    split_index: usize,
}

impl SatParityInstance {
    pub fn formulas(&self) -> &[CnfFormula] {
        &self.formulas
    }

    pub fn split_index(&self) -> usize {
        self.split_index
    }

    /// `n` for a sequence of length `2n`.
    pub fn half_len(&self) -> usize {
        self.formulas.len() / 2
    }

    pub fn is_yes_instance(&self) -> bool {
        self.split_index % 2 == 1
    }
}

/// Computes the split index by brute force and checks the promise.
pub fn make_parity_instance(formulas: Vec<CnfFormula>) -> Result<SatParityInstance, CnfError> {
    if formulas.is_empty() {
        return Err(CnfError::EmptySequence);
    }
    if formulas.len() % 2 == 1 {
        return Err(CnfError::OddLength(formulas.len()));
    }
    let flags = formulas
        .iter()
        .map(|f| brute_force_sat(f).map(|o| o.satisfiable))
        .collect::<Result<Vec<_>, _>>()?;
    let split_index = flags.iter().take_while(|&&s| s).count();
    if let Some(off) = flags[split_index..].iter().position(|&s| s) {
        return Err(CnfError::PromiseViolated {
            unsat_index: split_index,
            sat_index: split_index + off,
        });
    }
    Ok(SatParityInstance { formulas, split_index })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FormulaKind {
    TriviallySat,
    TriviallyUnsat,
}

/// Smallest formulas of each kind. The seed only picks which variable is
/// used: variable `1 + seed % 3`, so lower-numbered variables stay unused.
pub fn make_formula(kind: FormulaKind, seed: u64) -> CnfFormula {
    let v = 1 + (seed % 3) as i32;
    let clauses = match kind {
        FormulaKind::TriviallySat => vec![[v, v, v]],
        FormulaKind::TriviallyUnsat => vec![[v, v, v], [-v, -v, -v]],
    };
    CnfFormula::new(v as usize, clauses).expect("generated literals are in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sat(f: &CnfFormula) -> bool {
        brute_force_sat(f).unwrap().satisfiable
    }

    #[test]
    fn parses_single_clause() {
        let f = parse_dimacs("p cnf 3 1\n1 2 3 0\n").unwrap();
        assert_eq!(f.clauses(), &[[1, 2, 3]]);
        let out = brute_force_sat(&f).unwrap();
        assert!(out.satisfiable);
        assert_eq!(out.witness, Some(vec![true, false, false]));
    }

    #[test]
    fn pads_unit_clauses() {
        let f = parse_dimacs("c comment\np cnf 1 2\n1 0\n-1 0\n").unwrap();
        assert_eq!(f.clauses(), &[[1, 1, 1], [-1, -1, -1]]);
        assert!(!sat(&f));
    }

    #[test]
    fn clause_may_span_lines() {
        let f = parse_dimacs("p cnf 3 1\n1 -2\n3 0\n").unwrap();
        assert_eq!(f.clauses(), &[[1, -2, 3]]);
    }

    #[test]
    fn rejects_wide_and_malformed() {
        assert_eq!(
            parse_dimacs("p cnf 4 1\n1 2 3 4 0\n"),
            Err(CnfError::ClauseTooWide { line: 2, width: 4 })
        );
        assert!(matches!(parse_dimacs("1 2 0\n"), Err(CnfError::Parse { .. })));
        assert!(matches!(parse_dimacs("p cnf 2 1\n1 x 0\n"), Err(CnfError::Parse { line: 2, .. })));
        assert!(matches!(parse_dimacs("p cnf 2 1\n1 3 0\n"), Err(CnfError::LiteralOutOfRange { .. })));
        assert!(matches!(parse_dimacs("p cnf 2 2\n1 2 0\n"), Err(CnfError::Parse { .. })));
        assert!(matches!(parse_dimacs("p cnf 2 1\n1 2\n"), Err(CnfError::Parse { .. })));
    }

    #[test]
    fn dimacs_round_trip() {
        let f = CnfFormula::new(3, vec![[1, -2, -2], [3, 3, 3]]).unwrap();
        assert_eq!(f.to_dimacs(), "p cnf 3 2\n1 -2 0\n3 0\n");
        assert_eq!(parse_dimacs(&f.to_dimacs()).unwrap(), f);
    }

    #[test]
    fn variable_cap() {
        let f = CnfFormula::new(27, vec![[1, 1, 1]]).unwrap();
        assert_eq!(brute_force_sat(&f), Err(CnfError::TooManyVariables(27)));
    }

    #[test]
    fn split_index() {
        let s = make_formula(FormulaKind::TriviallySat, 0);
        let u = make_formula(FormulaKind::TriviallyUnsat, 0);
        assert_eq!(make_parity_instance(vec![s.clone(), u.clone()]).unwrap().split_index(), 1);
        assert_eq!(make_parity_instance(vec![u.clone(), u.clone()]).unwrap().split_index(), 0);
        assert_eq!(
            make_parity_instance(vec![u.clone(), s.clone()]),
            Err(CnfError::PromiseViolated { unsat_index: 0, sat_index: 1 })
        );
        assert_eq!(make_parity_instance(vec![s.clone()]), Err(CnfError::OddLength(1)));
        assert_eq!(make_parity_instance(vec![]), Err(CnfError::EmptySequence));
    }

    #[test]
    fn generated_formulas() {
        for seed in 0..12 {
            assert!(sat(&make_formula(FormulaKind::TriviallySat, seed)));
            assert!(!sat(&make_formula(FormulaKind::TriviallyUnsat, seed)));
        }
        assert_ne!(
            make_formula(FormulaKind::TriviallyUnsat, 0),
            make_formula(FormulaKind::TriviallyUnsat, 7)
        );
    }

    #[test]
    fn parity_prefix_lengths() {
        for k in 0..=4 {
            for m in 0..=4 {
                if (k + m) % 2 == 1 || k + m == 0 {
                    continue;
                }
                let mut fs = Vec::new();
                fs.extend((0..k).map(|i| make_formula(FormulaKind::TriviallySat, i as u64)));
                fs.extend((0..m).map(|i| make_formula(FormulaKind::TriviallyUnsat, i as u64)));
                assert_eq!(make_parity_instance(fs).unwrap().split_index(), k);
            }
        }
    }
}
