//! Brute-force oracles for the integration suites. Everything here is
//! deliberately naive so that agreement with the library is evidence and
//! not a tautology: factorizations come from plain recursive descent with
//! no congruence or gcd pruning, and the catenary oracle tries thresholds
//! in increasing order against a fresh connectivity check.

use lendens::Rational;

/// Every exponent vector e with sum(e[i] * gens[i]) == target, found by
/// trying all counts of each generator in turn.
pub fn vector_factorizations(gens: &[Vec<u64>], target: &[u64]) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut current = vec![0u64; gens.len()];
    descend(gens, target, 0, &mut current, &mut out);
    out.sort();
    out
}

fn descend(
    gens: &[Vec<u64>],
    rest: &[u64],
    i: usize,
    current: &mut Vec<u64>,
    out: &mut Vec<Vec<u64>>,
) {
    if i == gens.len() {
        if rest.iter().all(|&r| r == 0) {
            out.push(current.clone());
        }
        return;
    }
    let mut remaining = rest.to_vec();
    let mut count = 0u64;
    loop {
        current[i] = count;
        descend(gens, &remaining, i + 1, current, out);
        if remaining
            .iter()
            .zip(gens[i].iter())
            .any(|(r, g)| r < g)
        {
            break;
        }
        for (r, g) in remaining.iter_mut().zip(gens[i].iter()) {
            *r -= g;
        }
        count += 1;
    }
    current[i] = 0;
}

pub fn numerical_factorizations(gens: &[u64], value: u64) -> Vec<Vec<u64>> {
    let columns: Vec<Vec<u64>> = gens.iter().map(|&g| vec![g]).collect();
    vector_factorizations(&columns, &[value])
}

/// Sorted distinct factorization lengths.
pub fn lengths_of(facs: &[Vec<u64>]) -> Vec<u64> {
    let mut ls: Vec<u64> = facs.iter().map(|f| f.iter().sum()).collect();
    ls.sort_unstable();
    ls.dedup();
    ls
}

/// The usual distance between factorizations: remove the common part,
/// take the larger of the two leftover lengths.
pub fn oracle_distance(a: &[u64], b: &[u64]) -> u64 {
    let mut left = 0u64;
    let mut right = 0u64;
    for (x, y) in a.iter().zip(b.iter()) {
        let common = x.min(y);
        left += x - common;
        right += y - common;
    }
    left.max(right)
}

/// Smallest threshold at which the factorization graph, with edges between
/// pairs at distance <= threshold, becomes connected.
pub fn oracle_catenary(facs: &[Vec<u64>]) -> u64 {
    if facs.len() <= 1 {
        return 0;
    }
    let mut candidates = Vec::new();
    for (i, a) in facs.iter().enumerate() {
        for b in &facs[i + 1..] {
            candidates.push(oracle_distance(a, b));
        }
    }
    candidates.sort_unstable();
    candidates.dedup();
    for &cap in &candidates {
        if connected_under(facs, cap) {
            return cap;
        }
    }
    unreachable!("complete graph is connected");
}

fn connected_under(facs: &[Vec<u64>], cap: u64) -> bool {
    let n = facs.len();
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut reached = 1;
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if !seen[j] && oracle_distance(&facs[i], &facs[j]) <= cap {
                seen[j] = true;
                reached += 1;
                stack.push(j);
            }
        }
    }
    reached == n
}

/// Mediant of two fractions given by unreduced parts.
pub fn mediant(n1: u64, d1: u64, n2: u64, d2: u64) -> Rational {
    lendens::ratio((n1 + n2) as i64, (d1 + d2) as i64)
}
