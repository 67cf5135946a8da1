//! 3CNF formulas, DIMACS parsing, and a brute-force satisfiability check.

use crate::error::{Error, Result};

/// Variable count cap for the brute-force satisfiability searches.
pub const SAT_BRUTE_CAP: usize = 24;

/// A formula in 3-conjunctive normal form. Literals are signed 1-based
/// variable indices; clauses shorter than three literals are normalized by
/// repeating their first literal, which preserves semantics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<[i32; 3]>,
}

impl CnfFormula {
    /// Builds and normalizes a formula. Clauses must have 1..=3 nonzero
    /// literals with variable index at most `num_vars`; `num_vars >= 1`.
    pub fn new<I, C>(num_vars: usize, clauses: I) -> Result<Self>
    where
        I: IntoIterator<Item = C>,
        C: AsRef<[i32]>,
    {
        if num_vars == 0 {
            return Err(Error::construction("a formula needs at least one variable"));
        }
        let mut normalized = Vec::new();
        for clause in clauses {
            let lits = clause.as_ref();
            normalized.push(normalize_clause(lits, num_vars, None)?);
        }
        Ok(CnfFormula {
            num_vars,
            clauses: normalized,
        })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[[i32; 3]] {
        &self.clauses
    }

    /// True iff every clause has a satisfied literal.
    pub fn eval(&self, z: &TruthAssignment) -> bool {
        assert_eq!(z.len(), self.num_vars, "assignment length mismatch");
        self.clauses.iter().all(|clause| {
            clause.iter().any(|&lit| {
                let value = z.get(lit.unsigned_abs() as usize - 1);
                if lit > 0 {
                    value
                } else {
                    !value
                }
            })
        })
    }

    /// Prints the formula in DIMACS CNF. Parsing the result yields an equal
    /// formula.
    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for clause in &self.clauses {
            out.push_str(&format!("{} {} {} 0\n", clause[0], clause[1], clause[2]));
        }
        out
    }
}

fn normalize_clause(lits: &[i32], num_vars: usize, line: Option<usize>) -> Result<[i32; 3]> {
    let err = |message: String| match line {
        Some(l) => Error::parse(l, message),
        None => Error::construction(message),
    };
    if lits.is_empty() {
        return Err(err("empty clause".into()));
    }
    if lits.len() > 3 {
        return Err(err(format!("clause has {} literals, at most 3 allowed", lits.len())));
    }
    for &lit in lits {
        if lit == 0 {
            return Err(err("zero literal inside a clause".into()));
        }
        if lit.unsigned_abs() as usize > num_vars {
            return Err(err(format!(
                "literal {lit} references a variable beyond the declared {num_vars}"
            )));
        }
    }
    Ok([
        lits[0],
        *lits.get(1).unwrap_or(&lits[0]),
        *lits.get(2).unwrap_or(&lits[0]),
    ])
}

/// One boolean value per variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruthAssignment {
    values: Vec<bool>,
}

impl TruthAssignment {
    pub fn new(values: Vec<bool>) -> Self {
        TruthAssignment { values }
    }

    /// The `u`-th assignment in lexicographic tuple order with false < true
    /// and x1 most significant, so `u = 0` is all-false.
    pub fn from_lex_index(num_vars: usize, u: u64) -> Self {
        let values = (0..num_vars)
            .map(|i| u >> (num_vars - 1 - i) & 1 == 1)
            .collect();
        TruthAssignment { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, var: usize) -> bool {
        self.values[var]
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }

    /// Number of variables set to true.
    pub fn weight(&self) -> usize {
        self.values.iter().filter(|&&v| v).count()
    }
}

impl std::fmt::Display for TruthAssignment {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for &v in &self.values {
            write!(f, "{}", if v { '1' } else { '0' })?;
        }
        Ok(())
    }
}

/// Parses DIMACS CNF text: optional `c` comment lines, one `p cnf n m`
/// header, and 0-terminated clauses (which may span lines). Clauses with
/// one or two literals are padded by repeating the first literal; clauses
/// with more than three literals are rejected.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<[i32; 3]> = Vec::new();
    let mut current: Vec<i32> = Vec::new();
    let mut last_line = 1;

    for (lineno, line) in text.lines().enumerate() {
        let lineno = lineno + 1;
        last_line = lineno;
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if let Some(rest) = line.strip_prefix('p') {
            if header.is_some() {
                return Err(Error::parse(lineno, "duplicate header"));
            }
            let fields: Vec<&str> = rest.split_whitespace().collect();
            if fields.len() != 3 || fields[0] != "cnf" {
                return Err(Error::parse(lineno, "malformed header, expected `p cnf n m`"));
            }
            let n: usize = fields[1]
                .parse()
                .map_err(|_| Error::parse(lineno, "malformed variable count in header"))?;
            let m: usize = fields[2]
                .parse()
                .map_err(|_| Error::parse(lineno, "malformed clause count in header"))?;
            if n == 0 {
                return Err(Error::parse(lineno, "header declares zero variables"));
            }
            header = Some((n, m));
            continue;
        }
        let (n, _) = header.ok_or_else(|| Error::parse(lineno, "clause before `p cnf` header"))?;
        for token in line.split_whitespace() {
            let lit: i32 = token
                .parse()
                .map_err(|_| Error::parse(lineno, format!("malformed literal {token:?}")))?;
            if lit == 0 {
                clauses.push(normalize_clause(&current, n, Some(lineno))?);
                current.clear();
            } else {
                current.push(lit);
            }
        }
    }

    let (n, m) = header.ok_or_else(|| Error::parse(last_line, "missing `p cnf` header"))?;
    if !current.is_empty() {
        return Err(Error::parse(last_line, "unterminated clause at end of input"));
    }
    if clauses.len() != m {
        return Err(Error::parse(
            last_line,
            format!("header declares {m} clauses but {} were found", clauses.len()),
        ));
    }
    Ok(CnfFormula {
        num_vars: n,
        clauses,
    })
}

/// True iff `z` satisfies `formula`.
pub fn eval_cnf(formula: &CnfFormula, z: &TruthAssignment) -> bool {
    formula.eval(z)
}

/// Lexicographically smallest satisfying assignment (tuple order, false <
/// true, x1 most significant), or `None`. Capped at [`SAT_BRUTE_CAP`]
/// variables.
pub fn brute_force_sat(formula: &CnfFormula) -> Result<Option<TruthAssignment>> {
    let n = formula.num_vars();
    if n > SAT_BRUTE_CAP {
        return Err(Error::CapExceeded {
            what: "brute-force satisfiability",
            size: n,
            cap: SAT_BRUTE_CAP,
        });
    }
    for u in 0..1u64 << n {
        let z = TruthAssignment::from_lex_index(n, u);
        if formula.eval(&z) {
            return Ok(Some(z));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn short_clauses_are_padded() {
        let f = parse_dimacs("p cnf 1 1\n1 0\n").unwrap();
        assert_eq!(f.num_vars(), 1);
        assert_eq!(f.clauses(), &[[1, 1, 1]]);
    }

    #[test]
    fn two_clause_formula_parses() {
        let f = parse_dimacs("p cnf 2 2\n1 2 0\n-1 -2 0\n").unwrap();
        assert_eq!(f.clauses().len(), 2);
        assert_eq!(f.clauses()[0], [1, 2, 1]);
    }

    #[test]
    fn out_of_range_literal_is_an_error_with_line() {
        let err = parse_dimacs("p cnf 1 1\n2 0\n").unwrap_err();
        assert_eq!(
            err,
            Error::parse(2, "literal 2 references a variable beyond the declared 1")
        );
    }

    #[test]
    fn long_clause_is_rejected() {
        assert!(parse_dimacs("p cnf 4 1\n1 2 3 4 0\n").is_err());
    }

    #[test]
    fn clause_count_mismatch_is_rejected() {
        assert!(parse_dimacs("p cnf 2 2\n1 0\n").is_err());
    }

    #[test]
    fn comments_and_multiline_clauses_are_fine() {
        let f = parse_dimacs("c header comment\np cnf 3 1\n1 2\n3 0\n").unwrap();
        assert_eq!(f.clauses(), &[[1, 2, 3]]);
    }

    #[test]
    fn eval_examples() {
        let unit = CnfFormula::new(1, [[1, 1, 1]]).unwrap();
        assert!(unit.eval(&TruthAssignment::new(vec![true])));
        let contradiction = CnfFormula::new(1, [[1, 1, 1], [-1, -1, -1]]).unwrap();
        for u in 0..2 {
            assert!(!contradiction.eval(&TruthAssignment::from_lex_index(1, u)));
        }
        let or = CnfFormula::new(2, [[1, 2, 2]]).unwrap();
        assert!(or.eval(&TruthAssignment::new(vec![false, true])));
    }

    #[test]
    fn brute_force_sat_examples() {
        let unit = CnfFormula::new(1, [[1, 1, 1]]).unwrap();
        assert_eq!(
            brute_force_sat(&unit).unwrap().unwrap().values(),
            &[true]
        );
        let contradiction = CnfFormula::new(1, [[1, 1, 1], [-1, -1, -1]]).unwrap();
        assert!(brute_force_sat(&contradiction).unwrap().is_none());
        let f = CnfFormula::new(2, [[-1, -1, -1], [2, 2, 2]]).unwrap();
        assert_eq!(
            brute_force_sat(&f).unwrap().unwrap().values(),
            &[false, true]
        );
    }

    #[test]
    fn brute_force_cap() {
        let f = CnfFormula::new(25, [[1, 1, 1]]).unwrap();
        assert!(matches!(
            brute_force_sat(&f),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn dimacs_round_trip_is_identity_on_normalized_formulas() {
        let f = CnfFormula::new(3, vec![vec![1, -2], vec![3], vec![-1, 2, -3]]).unwrap();
        let reparsed = parse_dimacs(&f.to_dimacs()).unwrap();
        assert_eq!(f, reparsed);
    }
}
