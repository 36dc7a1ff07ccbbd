//! Exhaustive factorization enumeration.
//!
//! Kept separate from the length DPs on purpose: most invariants only need
//! lengths, and enumeration cost can be exponential where the DP is
//! polynomial. Everything here charges against a work budget and reports
//! an incomplete set instead of running away.

use super::lengths::LineProblem;
use super::{Budget, FactorizationSet};
use crate::error::Error;
use crate::monoid::{Element, FinitePresentation, MonoidPresentation};
use crate::Result;
use num_integer::Integer;
use std::collections::{HashSet, VecDeque};

/// All factorizations of `x`, lexicographically sorted.
///
/// Non-elements get an empty, complete set. When the budget runs out the
/// set is marked incomplete; graph-based invariants refuse such sets.
pub fn factorizations(
    m: &MonoidPresentation,
    x: &Element,
    budget: u64,
) -> Result<FactorizationSet> {
    let mut budget = Budget::new(budget);
    factorizations_budgeted(m, x, &mut budget)
}

/// Enumeration charging an externally owned budget, for callers that sweep
/// many elements under one limit.
pub(crate) fn factorizations_budgeted(
    m: &MonoidPresentation,
    x: &Element,
    budget: &mut Budget,
) -> Result<FactorizationSet> {
    m.validate_element(x)?;
    let (mut vecs, complete) = collect(m, x, budget)?;
    vecs.sort_unstable();
    Ok(FactorizationSet {
        element: x.clone(),
        factorizations: vecs,
        complete,
    })
}

fn collect(
    m: &MonoidPresentation,
    x: &Element,
    budget: &mut Budget,
) -> Result<(Vec<Vec<u64>>, bool)> {
    match (m, x) {
        (MonoidPresentation::Numerical(n), Element::Natural(v)) => {
            let lp = LineProblem::for_numerical(n.generators(), *v);
            Ok(line_solutions(&lp, budget))
        }
        (MonoidPresentation::Puiseux(p), Element::Rational(q)) => {
            match LineProblem::for_puiseux(p, q)? {
                None => Ok((Vec::new(), true)),
                Some(lp) => Ok(line_solutions(&lp, budget)),
            }
        }
        (MonoidPresentation::Affine(_), Element::Vector(v))
        | (MonoidPresentation::Block(_), Element::Vector(v)) => {
            if let MonoidPresentation::Block(b) = m {
                if !b.is_zero_sum(v) {
                    return Ok((Vec::new(), true));
                }
            }
            let (gens, _) = m.vector_generators().unwrap();
            Ok(vector_solutions(gens, v, budget))
        }
        (MonoidPresentation::Presented(p), Element::Vector(w)) => {
            word_closure_inner(p, w, budget)
        }
        (MonoidPresentation::DirectSum(parts), Element::Tuple(xs)) => {
            let mut component_sets = Vec::with_capacity(parts.len());
            let mut complete = true;
            for (p, part_x) in parts.iter().zip(xs) {
                let (vecs, c) = collect(p, part_x, budget)?;
                complete &= c;
                component_sets.push(vecs);
            }
            let mut out: Vec<Vec<u64>> = Vec::new();
            let total: usize = parts.iter().map(|p| p.atom_count()).sum();
            let mut assembled = product_join(&component_sets, total, budget, &mut out);
            assembled &= complete;
            Ok((out, assembled))
        }
        _ => Err(Error::TagMismatch),
    }
}

/// Cartesian product of per-component factorization lists, concatenating
/// exponent vectors. Returns false if the budget halted the join.
fn product_join(
    sets: &[Vec<Vec<u64>>],
    total_atoms: usize,
    budget: &mut Budget,
    out: &mut Vec<Vec<u64>>,
) -> bool {
    if sets.iter().any(|s| s.is_empty()) {
        return true;
    }
    let mut idx = vec![0usize; sets.len()];
    loop {
        if !budget.try_charge(1) {
            return false;
        }
        let mut joined = Vec::with_capacity(total_atoms);
        for (k, s) in sets.iter().enumerate() {
            joined.extend_from_slice(&s[idx[k]]);
        }
        out.push(joined);
        let mut k = sets.len();
        loop {
            if k == 0 {
                return true;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < sets[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// Depth-first solutions of the reduced line problem, lifted back to
/// original exponents. Atoms are visited by descending reduced degree and
/// suffix gcds prune branches whose remainder is unreachable.
fn line_solutions(lp: &LineProblem, budget: &mut Budget) -> (Vec<Vec<u64>>, bool) {
    let k = lp.reduced_degrees.len();
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(lp.reduced_degrees[i]));

    let mut suffix_gcd = vec![0u64; k + 1];
    for pos in (0..k).rev() {
        suffix_gcd[pos] = suffix_gcd[pos + 1].gcd(&lp.reduced_degrees[order[pos]]);
    }

    let mut out: Vec<Vec<u64>> = Vec::new();
    let mut cur = vec![0u64; k];
    let complete = line_rec(lp, &order, &suffix_gcd, 0, lp.target, &mut cur, &mut out, budget);
    (out, complete)
}

#[allow(clippy::too_many_arguments)]
fn line_rec(
    lp: &LineProblem,
    order: &[usize],
    suffix_gcd: &[u64],
    pos: usize,
    rem: u64,
    cur: &mut Vec<u64>,
    out: &mut Vec<Vec<u64>>,
    budget: &mut Budget,
) -> bool {
    if !budget.try_charge(1) {
        return false;
    }
    if pos == order.len() {
        if rem == 0 {
            out.push(lp.lift(cur));
        }
        return true;
    }
    let g = suffix_gcd[pos];
    debug_assert!(g > 0);
    if rem % g != 0 {
        return true;
    }
    let i = order[pos];
    let d = lp.reduced_degrees[i];
    if pos + 1 == order.len() {
        debug_assert!(rem % d == 0);
        cur[i] = rem / d;
        out.push(lp.lift(cur));
        cur[i] = 0;
        return true;
    }
    for e in 0..=rem / d {
        cur[i] = e;
        if !line_rec(lp, order, suffix_gcd, pos + 1, rem - e * d, cur, out, budget) {
            cur[i] = 0;
            return false;
        }
    }
    cur[i] = 0;
    true
}

/// Depth-first solutions of the vector equation over the generators.
fn vector_solutions(
    generators: &[Vec<u64>],
    target: &[u64],
    budget: &mut Budget,
) -> (Vec<Vec<u64>>, bool) {
    let mut out = Vec::new();
    let mut cur = vec![0u64; generators.len()];
    let mut rem = target.to_vec();
    let complete = vector_rec(generators, 0, &mut rem, &mut cur, &mut out, budget);
    (out, complete)
}

fn vector_rec(
    gens: &[Vec<u64>],
    idx: usize,
    rem: &mut Vec<u64>,
    cur: &mut Vec<u64>,
    out: &mut Vec<Vec<u64>>,
    budget: &mut Budget,
) -> bool {
    if !budget.try_charge(1) {
        return false;
    }
    if rem.iter().all(|&c| c == 0) {
        // Entries past idx are still zero, so this clone is the unique
        // completion of the current prefix.
        out.push(cur.clone());
        return true;
    }
    if idx == gens.len() {
        return true;
    }
    for (j, &c) in rem.iter().enumerate() {
        if c > 0 && gens[idx..].iter().all(|g| g[j] == 0) {
            return true;
        }
    }
    let g = &gens[idx];
    let mut limit = u64::MAX;
    for (j, &gc) in g.iter().enumerate() {
        if gc > 0 {
            limit = limit.min(rem[j] / gc);
        }
    }
    if limit == u64::MAX {
        limit = 0;
    }
    let mut complete = true;
    for e in 0..=limit {
        cur[idx] = e;
        for (j, &gc) in g.iter().enumerate() {
            rem[j] -= gc * e;
        }
        complete = vector_rec(gens, idx + 1, rem, cur, out, budget);
        for (j, &gc) in g.iter().enumerate() {
            rem[j] += gc * e;
        }
        if !complete {
            break;
        }
    }
    cur[idx] = 0;
    complete
}

/// Congruence class of a word under the relations, by breadth-first
/// rewriting. Every word in the class is a factorization of the same
/// element, and the positive grading bounds the class.
pub fn word_closure(
    pres: &FinitePresentation,
    word: &[u64],
    budget: u64,
) -> Result<(Vec<Vec<u64>>, bool)> {
    let mut b = Budget::new(budget);
    word_closure_inner(pres, word, &mut b)
}

pub(crate) fn word_closure_inner(
    pres: &FinitePresentation,
    word: &[u64],
    budget: &mut Budget,
) -> Result<(Vec<Vec<u64>>, bool)> {
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut queue: VecDeque<Vec<u64>> = VecDeque::new();
    seen.insert(word.to_vec());
    queue.push_back(word.to_vec());
    let mut complete = true;

    'bfs: while let Some(w) = queue.pop_front() {
        for (lhs, rhs) in pres.relations() {
            for (from, to) in [(lhs, rhs), (rhs, lhs)] {
                if w.iter().zip(from).all(|(&e, &f)| e >= f) {
                    if !budget.try_charge(1) {
                        complete = false;
                        break 'bfs;
                    }
                    let next: Vec<u64> = w
                        .iter()
                        .zip(from)
                        .zip(to)
                        .map(|((&e, &f), &t)| e - f + t)
                        .collect();
                    if seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
        }
    }

    let mut vecs: Vec<Vec<u64>> = seen.into_iter().collect();
    vecs.sort_unstable();
    Ok((vecs, complete))
}
