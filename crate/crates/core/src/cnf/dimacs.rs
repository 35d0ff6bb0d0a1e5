//! DIMACS CNF reading and writing.
//!
//! Reading accepts the standard format: optional `c` comment lines, one
//! `p cnf <vars> <clauses>` header, then zero-terminated clauses which may
//! span lines. Duplicate literals inside a clause collapse; tautological
//! clauses are rejected unless sanitizing is requested. Variables declared
//! in the header but absent from every clause are dropped and reported.
//!
//! Writing is bit-exact: `p cnf <max-var> <clauses>` followed by one line
//! per clause in ascending id order, literals ascending by variable id,
//! each terminated by `0`. Lines are joined with a single LF and no comment
//! lines are emitted.

use std::fmt::Write as _;

use super::{Clause, ClauseId, CnfError, Formula, Literal, Polarity, Var};

/// Parser behavior toggles.
#[derive(Debug, Clone, Copy, Default)]
pub struct ParseOptions {
    /// Remove tautological clauses (reported in the outcome) instead of
    /// rejecting the input. Such clauses are always satisfied.
    pub sanitize: bool,
}

/// A parsed formula together with what the parser had to clean up.
#[derive(Debug, Clone)]
pub struct DimacsOutcome {
    pub formula: Formula,
    /// Declared variables that occur in no clause, ascending.
    pub dropped_vars: Vec<Var>,
    /// Ids of tautological clauses removed under [`ParseOptions::sanitize`].
    pub removed_tautologies: Vec<ClauseId>,
}

struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

fn tokens(text: &str) -> impl Iterator<Item = Token<'_>> {
    text.lines().enumerate().flat_map(|(ln, line)| {
        let content = if line.starts_with('c') { "" } else { line };
        content.split_whitespace().map(move |word| {
            // Column of the first byte of the word, 1-based.
            let offset = word.as_ptr() as usize - line.as_ptr() as usize;
            Token {
                text: word,
                line: ln + 1,
                column: offset + 1,
            }
        })
    })
}

fn parse_error(token: &Token<'_>, message: impl Into<String>) -> CnfError {
    CnfError::Parse {
        line: token.line,
        column: token.column,
        message: message.into(),
    }
}

/// Parses DIMACS CNF text. Clause ids are assigned 1.. in file order.
pub fn parse_dimacs(text: &str, options: ParseOptions) -> Result<DimacsOutcome, CnfError> {
    let mut stream = tokens(text);

    let first = stream.next().ok_or(CnfError::Parse {
        line: 1,
        column: 1,
        message: "missing 'p cnf' header".into(),
    })?;
    if first.text != "p" {
        return Err(parse_error(&first, format!("expected 'p', found '{}'", first.text)));
    }
    let kind = stream
        .next()
        .ok_or_else(|| parse_error(&first, "incomplete header"))?;
    if kind.text != "cnf" {
        return Err(parse_error(&kind, format!("expected 'cnf', found '{}'", kind.text)));
    }
    let mut header_num = |name: &str| -> Result<u32, CnfError> {
        let tok = stream
            .next()
            .ok_or_else(|| parse_error(&kind, format!("header is missing the {name} count")))?;
        tok.text
            .parse::<u32>()
            .map_err(|_| parse_error(&tok, format!("invalid {name} count '{}'", tok.text)))
    };
    let declared_vars = header_num("variable")?;
    let declared_clauses = header_num("clause")?;

    let mut clauses: Vec<(ClauseId, Clause)> = Vec::new();
    let mut removed_tautologies = Vec::new();
    let mut current: Vec<Literal> = Vec::new();
    let mut next_id = 1u32;
    for tok in stream {
        let value: i64 = tok
            .text
            .parse()
            .map_err(|_| parse_error(&tok, format!("expected a literal, found '{}'", tok.text)))?;
        if value == 0 {
            let id = ClauseId(next_id);
            next_id += 1;
            match Clause::new(id, current.drain(..)) {
                Ok(clause) => clauses.push((id, clause)),
                Err(CnfError::Tautology { clause, var }) if options.sanitize => {
                    removed_tautologies.push(clause);
                    let _ = var;
                }
                Err(e) => return Err(e),
            }
            continue;
        }
        let magnitude = value.unsigned_abs();
        if magnitude > u64::from(declared_vars) {
            return Err(parse_error(
                &tok,
                format!("literal {value} exceeds the declared variable count {declared_vars}"),
            ));
        }
        let var = Var(magnitude as u32);
        let polarity = if value > 0 { Polarity::Pos } else { Polarity::Neg };
        current.push(Literal::new(var, polarity));
    }
    if !current.is_empty() {
        return Err(CnfError::Parse {
            line: text.lines().count().max(1),
            column: 1,
            message: "last clause is not terminated by 0".into(),
        });
    }
    let total = next_id - 1;
    if total != declared_clauses {
        return Err(CnfError::Parse {
            line: text.lines().count().max(1),
            column: 1,
            message: format!("header declares {declared_clauses} clauses but {total} were found"),
        });
    }

    let formula = Formula::from_clauses(clauses);
    let dropped_vars = (1..=declared_vars)
        .map(Var)
        .filter(|v| !formula.contains_var(*v))
        .collect();
    Ok(DimacsOutcome {
        formula,
        dropped_vars,
        removed_tautologies,
    })
}

/// Serializes a formula to DIMACS. Round-trips with [`parse_dimacs`] up to
/// clause-id renumbering (ids are reassigned in file order on read).
pub fn serialize_dimacs(formula: &Formula) -> String {
    let max_var = formula.vars().map(|v| v.0).max().unwrap_or(0);
    let mut out = String::new();
    let _ = write!(out, "p cnf {} {}", max_var, formula.clause_count());
    for (_, clause) in formula.clauses() {
        out.push('\n');
        for lit in clause.literals() {
            let _ = write!(out, "{} ", lit.to_int());
        }
        out.push('0');
    }
    out
}
