//! DIMACS CNF.

use std::fmt::Write;

use super::parse_error;
use crate::cnf::{CnfFormula, Literal};
use crate::error::Result;

/// Parses DIMACS CNF: a `p cnf <vars> <clauses>` header, `c` comment lines,
/// and clauses as whitespace-separated literals terminated by `0`, possibly
/// spanning lines.  A line holding just `%` ends the input.
///
/// The clause count must match the header; a clause mentioning a variable
/// twice is rejected.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<Vec<Literal>> = Vec::new();
    let mut current: Vec<Literal> = Vec::new();
    let mut current_start = 0;
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line == "%" {
            break;
        }
        if line.starts_with('p') {
            if header.is_some() {
                return parse_error(line_no, "second problem line");
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            let parsed = match parts.as_slice() {
                ["p", "cnf", n, m] => n.parse::<usize>().ok().zip(m.parse::<usize>().ok()),
                _ => None,
            };
            match parsed {
                Some(h) if h.0 <= i32::MAX as usize => header = Some(h),
                _ => return parse_error(line_no, format!("malformed problem line {line:?}")),
            }
            continue;
        }
        let Some((n, _)) = header else {
            return parse_error(line_no, "clause before the problem line");
        };
        for token in line.split_whitespace() {
            let value: i64 = match token.parse() {
                Ok(v) => v,
                Err(_) => return parse_error(line_no, format!("malformed literal {token:?}")),
            };
            if value == 0 {
                clauses.push(std::mem::take(&mut current));
                continue;
            }
            if current.is_empty() {
                current_start = line_no;
            }
            if value.unsigned_abs() > n as u64 {
                return parse_error(
                    line_no,
                    format!(
                        "variable {} exceeds declared count {n}",
                        value.unsigned_abs()
                    ),
                );
            }
            let lit = Literal::new(value as i32);
            if current.iter().any(|l| l.var() == lit.var()) {
                return parse_error(
                    line_no,
                    format!("variable {} occurs twice in a clause", lit.var()),
                );
            }
            current.push(lit);
        }
    }
    let Some((n, m)) = header else {
        return parse_error(last_line.max(1), "missing problem line");
    };
    if !current.is_empty() {
        return parse_error(current_start, "clause is not terminated by 0");
    }
    if clauses.len() != m {
        return parse_error(
            last_line.max(1),
            format!("header declares {m} clauses, found {}", clauses.len()),
        );
    }
    CnfFormula::new(n, clauses).or_else(|e| parse_error(last_line.max(1), e.to_string()))
}

/// Canonical DIMACS text: the header, then one clause per line.
pub fn write_dimacs(phi: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", phi.num_vars(), phi.num_clauses());
    for clause in phi.clauses() {
        for lit in clause {
            write!(out, "{lit} ").unwrap();
        }
        out.push_str("0\n");
    }
    out
}
