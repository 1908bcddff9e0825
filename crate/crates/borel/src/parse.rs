//! Root-set literals such as `a2, a1+2a2` or `[1,1], [0,1]`.
//!
//! Grammar (whitespace is ignored everywhere):
//!
//! ```text
//! set    := "" | term ("," term)*
//! term   := sum | vector
//! sum    := coeff? simple ("+" coeff? simple)*
//! simple := ("a" | "α") index
//! vector := "[" int ("," int)* "]"
//! ```
//!
//! Every term must evaluate to a positive root of the target system.

use borel_core::{Root, RootSystem};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("cannot parse root {term:?}: {reason}")]
    Syntax { term: String, reason: &'static str },
    #[error("{term:?} evaluates to {root}, which is not a positive root of {system}")]
    NotARoot {
        term: String,
        root: String,
        system: String,
    },
}

/// Splits on commas that are not inside brackets.
fn split_terms(literal: &str) -> Vec<String> {
    let mut terms = Vec::new();
    let mut depth = 0i32;
    let mut current = String::new();
    for ch in literal.chars().filter(|c| !c.is_whitespace()) {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            ',' if depth == 0 => {
                terms.push(std::mem::take(&mut current));
                continue;
            }
            _ => {}
        }
        current.push(ch);
    }
    terms.push(current);
    terms
}

fn parse_vector(term: &str, rank: usize) -> Result<Vec<i32>, &'static str> {
    let inner = term
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or("unbalanced brackets")?;
    let coeffs = inner
        .split(',')
        .map(|c| {
            c.parse::<i32>()
                .map_err(|_| "vector entries must be integers")
        })
        .collect::<Result<Vec<_>, _>>()?;
    if coeffs.len() != rank {
        return Err("vector length differs from the rank");
    }
    Ok(coeffs)
}

fn parse_sum(term: &str, rank: usize) -> Result<Vec<i32>, &'static str> {
    let mut coeffs = vec![0i32; rank];
    for summand in term.split('+') {
        let split = summand
            .find(['a', 'α'])
            .ok_or("each summand needs a simple root like a1")?;
        let (coeff, simple) = summand.split_at(split);
        let coeff: i32 = match coeff {
            "" => 1,
            digits => digits.parse().map_err(|_| "bad coefficient")?,
        };
        let index = simple
            .trim_start_matches(['a', 'α'])
            .parse::<usize>()
            .map_err(|_| "simple roots are written a1, a2, ...")?;
        if index == 0 || index > rank {
            return Err("simple root index out of range");
        }
        coeffs[index - 1] = coeffs[index - 1]
            .checked_add(coeff)
            .ok_or("coefficient overflow")?;
    }
    Ok(coeffs)
}

/// Parses `literal` into positive roots of `rs`, deduplicated and in
/// canonical order. The empty literal is the empty set.
pub fn parse_root_set(literal: &str, rs: &RootSystem) -> Result<Vec<Root>, ParseError> {
    if literal.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut roots = Vec::new();
    for term in split_terms(literal) {
        let parsed = if term.starts_with('[') {
            parse_vector(&term, rs.rank())
        } else if term.is_empty() {
            Err("empty term")
        } else {
            parse_sum(&term, rs.rank())
        };
        let root = Root::new(parsed.map_err(|reason| ParseError::Syntax {
            term: term.clone(),
            reason,
        })?);
        if !rs.is_root(&root) {
            return Err(ParseError::NotARoot {
                term,
                root: root.to_string(),
                system: rs.name(),
            });
        }
        roots.push(root);
    }
    roots.sort();
    roots.dedup();
    Ok(roots)
}
