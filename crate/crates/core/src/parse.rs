//! Parsers for the textual element and monoid descriptions taken on the
//! command line. All failures surface as `Error::Parse` with the offending
//! fragment quoted.

use crate::block::{FiniteAbelianGroup, GroupElement};
use crate::error::Error;
use crate::{Rational, Result};
use num_bigint::BigInt;

fn bad(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn natural(s: &str) -> Result<u64> {
    let t = s.trim();
    t.parse::<u64>()
        .map_err(|_| bad(format!("expected a natural number, got '{t}'")))
}

/// Comma separated naturals: "6,9,20".
pub fn parse_naturals(s: &str) -> Result<Vec<u64>> {
    let t = s.trim();
    if t.is_empty() {
        return Err(bad("empty list of naturals"));
    }
    t.split(',').map(natural).collect()
}

/// One parenthesized vector: "(4,0,0)".
pub fn parse_vector(s: &str) -> Result<Vec<u64>> {
    let t = s.trim();
    let inner = t
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| bad(format!("expected '(a,b,...)', got '{t}'")))?;
    parse_naturals(inner)
}

/// Semicolon separated vectors: "(4,0,0);(7,0,0)".
pub fn parse_vectors(s: &str) -> Result<Vec<Vec<u64>>> {
    let t = s.trim();
    if t.is_empty() {
        return Err(bad("empty list of vectors"));
    }
    t.split(';').map(parse_vector).collect()
}

/// "4/3" or a plain integer "7".
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| bad(format!("expected an integer numerator, got '{num}'")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| bad(format!("expected an integer denominator, got '{den}'")))?;
    if d == BigInt::from(0) {
        return Err(bad(format!("zero denominator in '{t}'")));
    }
    Ok(Rational::new(n, d))
}

/// Comma separated rationals: "4/3,8/5,800/1201".
pub fn parse_rationals(s: &str) -> Result<Vec<Rational>> {
    let t = s.trim();
    if t.is_empty() {
        return Err(bad("empty list of rationals"));
    }
    t.split(',').map(parse_rational).collect()
}

/// Cyclic factors of a finite abelian group: "Z2xZ2xZ3" (the Z prefix is
/// optional, and 'x' or '*' both separate the factors).
pub fn parse_group(s: &str) -> Result<Vec<u64>> {
    let t = s.trim();
    if t.is_empty() {
        return Err(bad("empty group description"));
    }
    t.split(|c| c == 'x' || c == 'X' || c == '*')
        .map(|part| {
            let p = part.trim();
            let digits = p
                .strip_prefix('Z')
                .or_else(|| p.strip_prefix('z'))
                .unwrap_or(p);
            digits
                .trim()
                .parse::<u64>()
                .map_err(|_| bad(format!("expected a cyclic factor like 'Z6', got '{p}'")))
        })
        .collect()
}

/// Support subset of a group: "(1);(5)" or, for cyclic groups, "1;5".
pub fn parse_group_subset(s: &str) -> Result<Vec<Vec<u64>>> {
    let t = s.trim();
    if t.is_empty() {
        return Err(bad("empty group subset"));
    }
    t.split(';')
        .map(|part| {
            let p = part.trim();
            if p.starts_with('(') {
                parse_vector(p)
            } else {
                Ok(vec![natural(p)?])
            }
        })
        .collect()
}

/// A block monoid element over the given support, written as a product of
/// terms "(g)^k" (the exponent defaults to 1). The bare string "1" is the
/// empty block. Cyclic group elements may drop the parentheses: "1^5(4)^5"
/// and "(1)^5(4)^5" agree over Z5.
pub fn parse_block_element(
    s: &str,
    group: &FiniteAbelianGroup,
    support: &[GroupElement],
) -> Result<Vec<u64>> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut counts = vec![0u64; support.len()];
    if t == "1" {
        return Ok(counts);
    }
    if t.is_empty() {
        return Err(bad("empty block element"));
    }
    let chars: Vec<char> = t.chars().collect();
    let mut i = 0usize;
    while i < chars.len() {
        let residues = if chars[i] == '(' {
            let close = chars[i..]
                .iter()
                .position(|&c| c == ')')
                .ok_or_else(|| bad(format!("unbalanced '(' in '{t}'")))?;
            let inner: String = chars[i + 1..i + close].iter().collect();
            i += close + 1;
            parse_naturals(&inner)?
        } else {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if start == i {
                return Err(bad(format!(
                    "expected '(g)' or a digit at position {start} of '{t}'"
                )));
            }
            let digits: String = chars[start..i].iter().collect();
            vec![natural(&digits)?]
        };
        let mut count = 1u64;
        if i < chars.len() && chars[i] == '^' {
            i += 1;
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if start == i {
                return Err(bad(format!("missing exponent after '^' in '{t}'")));
            }
            let digits: String = chars[start..i].iter().collect();
            count = natural(&digits)?;
        }
        let g = group.element(&residues).map_err(|_| {
            bad(format!(
                "'{t}' names a group element of the wrong rank for {}",
                group.display_name()
            ))
        })?;
        let idx = support
            .iter()
            .position(|h| *h == g)
            .ok_or_else(|| bad(format!("{g} is not in the chosen support")))?;
        counts[idx] += count;
    }
    Ok(counts)
}

/// Exponent list for a series: "1,2,5" or a range "1..10", mixed freely.
pub fn parse_n_list(s: &str) -> Result<Vec<u64>> {
    let t = s.trim();
    if t.is_empty() {
        return Err(bad("empty exponent list"));
    }
    let mut out = Vec::new();
    for part in t.split(',') {
        let p = part.trim();
        match p.split_once("..") {
            Some((a, b)) => {
                let lo = natural(a)?;
                let hi = natural(b)?;
                if lo > hi {
                    return Err(bad(format!("descending range '{p}'")));
                }
                out.extend(lo..=hi);
            }
            None => out.push(natural(p)?),
        }
    }
    Ok(out)
}
