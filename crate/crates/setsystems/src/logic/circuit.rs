//! Boolean circuits over {AND, OR, NOT} with fan-in at most two, their
//! line-based text format, and a brute-force weighted satisfiability check.
//!
//! Format: one statement per line (`;` also separates statements), inputs
//! pre-named `x1..xn` with n inferred from the highest index referenced,
//! gate lines `name = OP operand [operand]`, and a final `out = wire` line.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::logic::cnf::{TruthAssignment, SAT_BRUTE_CAP};

/// A gate over earlier wires. Wires `0..num_inputs` are the inputs; gate
/// `i` is wire `num_inputs + i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gate {
    And(usize, usize),
    Or(usize, usize),
    Not(usize),
}

/// An acyclic boolean circuit. Its size is the input count plus the gate
/// count, which is what the padded constructions use.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoolCircuit {
    num_inputs: usize,
    gates: Vec<Gate>,
    output: usize,
}

impl BoolCircuit {
    pub fn new(num_inputs: usize, gates: Vec<Gate>, output: usize) -> Result<Self> {
        if num_inputs == 0 {
            return Err(Error::construction("a circuit needs at least one input"));
        }
        for (i, gate) in gates.iter().enumerate() {
            let wire = num_inputs + i;
            let ok = match *gate {
                Gate::And(a, b) | Gate::Or(a, b) => a < wire && b < wire,
                Gate::Not(a) => a < wire,
            };
            if !ok {
                return Err(Error::construction(format!(
                    "gate {i} references a wire at or after itself"
                )));
            }
        }
        if output >= num_inputs + gates.len() {
            return Err(Error::construction("output references a missing wire"));
        }
        Ok(BoolCircuit {
            num_inputs,
            gates,
            output,
        })
    }

    pub fn num_inputs(&self) -> usize {
        self.num_inputs
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn output(&self) -> usize {
        self.output
    }

    /// Circuit size: inputs plus gates.
    pub fn size(&self) -> usize {
        self.num_inputs + self.gates.len()
    }

    /// Evaluates the DAG bottom-up.
    pub fn eval(&self, z: &TruthAssignment) -> bool {
        assert_eq!(z.len(), self.num_inputs, "assignment length mismatch");
        let mut wires = Vec::with_capacity(self.size());
        wires.extend(z.values().iter().copied());
        for gate in &self.gates {
            let value = match *gate {
                Gate::And(a, b) => wires[a] && wires[b],
                Gate::Or(a, b) => wires[a] || wires[b],
                Gate::Not(a) => !wires[a],
            };
            wires.push(value);
        }
        wires[self.output]
    }

    /// Canonical text form with gates renamed `g1..gm`. Parsing the result
    /// reproduces the circuit.
    pub fn to_text(&self) -> String {
        let name = |wire: usize| {
            if wire < self.num_inputs {
                format!("x{}", wire + 1)
            } else {
                format!("g{}", wire - self.num_inputs + 1)
            }
        };
        let mut out = String::new();
        for (i, gate) in self.gates.iter().enumerate() {
            let line = match *gate {
                Gate::And(a, b) => format!("g{} = AND {} {}", i + 1, name(a), name(b)),
                Gate::Or(a, b) => format!("g{} = OR {} {}", i + 1, name(a), name(b)),
                Gate::Not(a) => format!("g{} = NOT {}", i + 1, name(a)),
            };
            out.push_str(&line);
            out.push('\n');
        }
        out.push_str(&format!("out = {}\n", name(self.output)));
        out
    }
}

fn input_index(token: &str) -> Option<usize> {
    let digits = token.strip_prefix('x')?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let i: usize = digits.parse().ok()?;
    if i == 0 {
        None
    } else {
        Some(i)
    }
}

/// Parses the line-based circuit format.
pub fn parse_circuit(text: &str) -> Result<BoolCircuit> {
    // Statements carry their 1-based source line for error reporting.
    let mut statements: Vec<(usize, Vec<&str>)> = Vec::new();
    let mut last_line = 1;
    for (lineno, line) in text.lines().enumerate() {
        let lineno = lineno + 1;
        last_line = lineno;
        for stmt in line.split(';') {
            let stmt = stmt.trim();
            if stmt.is_empty() || stmt.starts_with('#') {
                continue;
            }
            statements.push((lineno, stmt.split_whitespace().collect()));
        }
    }

    // Pass 1: the input count is the highest x-index referenced anywhere.
    let mut num_inputs = 0;
    for (_, tokens) in &statements {
        for token in tokens.iter().skip(2) {
            if let Some(i) = input_index(token) {
                num_inputs = num_inputs.max(i);
            }
        }
    }
    if num_inputs == 0 {
        return Err(Error::parse(last_line, "no inputs x1.. referenced"));
    }

    let mut gates: Vec<Gate> = Vec::new();
    let mut names: std::collections::HashMap<&str, usize> = std::collections::HashMap::new();
    let mut output: Option<usize> = None;

    for (lineno, tokens) in &statements {
        let lineno = *lineno;
        if output.is_some() {
            return Err(Error::parse(lineno, "statement after `out`"));
        }
        if tokens.len() < 3 || tokens[1] != "=" {
            return Err(Error::parse(lineno, "expected `name = ...`"));
        }
        let lhs = tokens[0];
        let resolve = |token: &str| -> Result<usize> {
            if let Some(i) = input_index(token) {
                return Ok(i - 1);
            }
            names
                .get(token)
                .copied()
                .ok_or_else(|| Error::parse(lineno, format!("reference to undefined wire {token:?}")))
        };
        if lhs == "out" {
            if tokens.len() != 3 {
                return Err(Error::parse(lineno, "`out` takes exactly one wire"));
            }
            output = Some(resolve(tokens[2])?);
            continue;
        }
        if input_index(lhs).is_some() {
            return Err(Error::parse(lineno, format!("{lhs:?} redefines an input")));
        }
        if names.contains_key(lhs) {
            return Err(Error::parse(lineno, format!("duplicate definition of {lhs:?}")));
        }
        let op = tokens[2];
        let operands = &tokens[3..];
        let gate = match (op, operands.len()) {
            ("AND", 2) => Gate::And(resolve(operands[0])?, resolve(operands[1])?),
            ("OR", 2) => Gate::Or(resolve(operands[0])?, resolve(operands[1])?),
            ("NOT", 1) => Gate::Not(resolve(operands[0])?),
            ("AND" | "OR", n) => {
                return Err(Error::parse(lineno, format!("{op} takes 2 operands, got {n}")))
            }
            ("NOT", n) => {
                return Err(Error::parse(lineno, format!("NOT takes 1 operand, got {n}")))
            }
            _ => return Err(Error::parse(lineno, format!("unknown operation {op:?}"))),
        };
        names.insert(lhs, num_inputs + gates.len());
        gates.push(gate);
    }

    let output = output.ok_or_else(|| Error::parse(last_line, "missing `out = ...` line"))?;
    BoolCircuit::new(num_inputs, gates, output)
}

/// Evaluates `circuit` on `z`.
pub fn eval_circuit(circuit: &BoolCircuit, z: &TruthAssignment) -> bool {
    circuit.eval(z)
}

/// A satisfying assignment with exactly `k` variables true, or `None`.
/// Among weight-k assignments the one whose true-index set is
/// lexicographically smallest is returned ({x1} before {x2}). Capped at
/// [`SAT_BRUTE_CAP`] inputs.
pub fn brute_force_weighted_sat(
    circuit: &BoolCircuit,
    k: usize,
) -> Result<Option<TruthAssignment>> {
    let n = circuit.num_inputs();
    if n > SAT_BRUTE_CAP {
        return Err(Error::CapExceeded {
            what: "brute-force weighted satisfiability",
            size: n,
            cap: SAT_BRUTE_CAP,
        });
    }
    if k > n {
        return Ok(None);
    }
    for combo in (0..n).combinations(k) {
        let mut values = vec![false; n];
        for &i in &combo {
            values[i] = true;
        }
        let z = TruthAssignment::new(values);
        if circuit.eval(&z) {
            return Ok(Some(z));
        }
    }
    Ok(None)
}
