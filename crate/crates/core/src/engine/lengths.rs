//! Length-set computation by dynamic programming.
//!
//! One-dimensional problems (numerical semigroups and cleared Puiseux
//! monoids) run over a table indexed by value; the Puiseux path first
//! eliminates atoms with prime-power denominators through congruence
//! conditions, which collapses astronomically large cleared targets to
//! small residual ones. Vector problems (affine and block monoids) run
//! over the divisor box below the target.

use super::bitset::LengthBits;
use super::LengthSet;
use crate::error::Error;
use crate::monoid::{Element, MonoidPresentation, PuiseuxTruncation};
use crate::{Rational, Result};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

/// Hard ceiling on DP table size (bits) so a runaway request fails fast
/// instead of exhausting memory.
const MAX_TABLE_BITS: u128 = 1 << 33;

/// A one-dimensional factorization problem in reduced form.
///
/// Solutions of `sum(e_i * degrees[i]) = value` correspond bijectively to
/// solutions of `sum(g_i * reduced_degrees[i]) = target` via
/// `e_i = residues[i] + moduli[i] * g_i`; a factorization of reduced length
/// `sum(moduli[i] * g_i)` has true length `base_length + that`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineProblem {
    pub degrees: Vec<u64>,
    pub moduli: Vec<u64>,
    pub residues: Vec<u64>,
    pub reduced_degrees: Vec<u64>,
    pub target: u64,
    pub base_length: u64,
}

impl LineProblem {
    pub fn for_numerical(generators: &[u64], value: u64) -> LineProblem {
        let k = generators.len();
        LineProblem {
            degrees: generators.to_vec(),
            moduli: vec![1; k],
            residues: vec![0; k],
            reduced_degrees: generators.to_vec(),
            target: value,
            base_length: 0,
        }
    }

    /// Clears denominators and applies the congruence reduction. Returns
    /// `Ok(None)` when the congruences already rule out any solution.
    pub fn for_puiseux(p: &PuiseuxTruncation, x: &Rational) -> Result<Option<LineProblem>> {
        if x.is_negative() {
            return Ok(None);
        }
        let l = p.clear_denominator();
        let cleared = x * Rational::from_integer(l.into());
        if !cleared.is_integer() {
            return Ok(None);
        }
        let value = match cleared.to_integer().to_u64() {
            Some(v) => v,
            None => return Err(Error::InvalidSpec("element too large after clearing".into())),
        };

        let degrees = p.cleared_degrees().to_vec();
        let k = degrees.len();
        let denoms: Vec<u64> = p
            .atoms()
            .iter()
            .map(|a| a.denom().to_u64().expect("denominator fits after clearing"))
            .collect();

        let mut moduli = vec![1u64; k];
        let mut residues = vec![0u64; k];
        for i in 0..k {
            let q = denoms[i];
            if q == 1 {
                continue;
            }
            let Some(prime) = prime_power_base(q) else {
                continue;
            };
            if (0..k).any(|j| j != i && denoms[j] % prime == 0) {
                continue;
            }
            // All other cleared degrees vanish mod q, so e_i is pinned to
            // one residue class mod q.
            let d = degrees[i] % q;
            let inv = mod_inverse(d, q).expect("degree invertible modulo its denominator");
            residues[i] = mul_mod(value % q, inv, q);
            moduli[i] = q;
        }

        let offset: u128 = (0..k)
            .map(|i| residues[i] as u128 * degrees[i] as u128)
            .sum();
        if offset > value as u128 {
            return Ok(None);
        }
        let mut remaining = (value as u128 - offset) as u64;

        let steps: Vec<u128> = (0..k)
            .map(|i| moduli[i] as u128 * degrees[i] as u128)
            .collect();
        let g = steps.iter().fold(0u128, |acc, &s| acc.gcd(&s));
        debug_assert!(g > 0);
        if remaining as u128 % g != 0 {
            return Ok(None);
        }
        remaining = (remaining as u128 / g) as u64;

        let mut reduced_degrees = Vec::with_capacity(k);
        for &s in &steps {
            let r = s / g;
            let r = r
                .to_u64()
                .ok_or_else(|| Error::InvalidSpec("reduced degrees overflow".into()))?;
            reduced_degrees.push(r);
        }

        Ok(Some(LineProblem {
            degrees,
            moduli: moduli.clone(),
            residues: residues.clone(),
            reduced_degrees,
            target: remaining,
            base_length: residues.iter().sum(),
        }))
    }

    /// Translates a reduced solution back to original atom exponents.
    pub fn lift(&self, reduced: &[u64]) -> Vec<u64> {
        reduced
            .iter()
            .enumerate()
            .map(|(i, &g)| self.residues[i] + self.moduli[i] * g)
            .collect()
    }

    pub fn lengths(&self) -> Result<Option<LengthSet>> {
        let table = line_length_table(&self.reduced_degrees, &self.moduli, self.target)?;
        Ok(LengthSet::from_bits(
            self.base_length,
            &table[self.target as usize],
        ))
    }
}

/// `q = p^a` for a prime `p`? Returns the base prime.
fn prime_power_base(q: u64) -> Option<u64> {
    debug_assert!(q >= 2);
    let mut n = q;
    let mut p = 0u64;
    for cand in 2..=n {
        if cand * cand > n {
            p = n;
            break;
        }
        if n % cand == 0 {
            p = cand;
            break;
        }
    }
    while n % p == 0 {
        n /= p;
    }
    if n == 1 {
        Some(p)
    } else {
        None
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

/// Achievable length bits for every value `0..=target`.
///
/// `table[v]` holds bit `l` when some exponent vector over `degrees` sums
/// (weighted by `weights`) to `l` and has value `v`. This is an unbounded
/// knapsack: each atom is folded in with ascending value so repeats chain.
pub fn line_length_table(
    degrees: &[u64],
    weights: &[u64],
    target: u64,
) -> Result<Vec<LengthBits>> {
    let width = max_weighted_length(degrees, weights, target) + 2;
    let rows = target as u128 + 1;
    if rows * width as u128 > MAX_TABLE_BITS {
        return Err(Error::BudgetExceeded((rows * width as u128 / 64) as u64));
    }

    let mut table: Vec<LengthBits> = vec![LengthBits::new(); target as usize + 1];
    table[0].set(0);
    for (i, &d) in degrees.iter().enumerate() {
        if d == 0 || d > target {
            continue;
        }
        let w = weights[i] as usize;
        let d = d as usize;
        for v in d..=target as usize {
            if table[v - d].is_empty() {
                continue;
            }
            let (lower, upper) = table.split_at_mut(v);
            upper[0].or_shifted(&lower[v - d], w);
        }
    }
    Ok(table)
}

/// Largest possible weighted length of a solution with value `target`.
fn max_weighted_length(degrees: &[u64], weights: &[u64], target: u64) -> usize {
    let mut best = 0u128;
    for (i, &d) in degrees.iter().enumerate() {
        if d == 0 || d > target {
            continue;
        }
        let bound = target as u128 * weights[i] as u128 / d as u128;
        best = best.max(bound);
    }
    best.min(usize::MAX as u128 / 2) as usize
}

/// Length set of a numerical semigroup element, `None` when outside.
pub fn numerical_length_set(generators: &[u64], value: u64) -> Result<Option<LengthSet>> {
    let lp = LineProblem::for_numerical(generators, value);
    lp.lengths()
}

/// Length set of a Puiseux monoid element, `None` when outside.
pub fn puiseux_length_set(
    p: &PuiseuxTruncation,
    x: &Rational,
) -> Result<Option<LengthSet>> {
    match LineProblem::for_puiseux(p, x)? {
        Some(lp) => lp.lengths(),
        None => Ok(None),
    }
}

/// Flat-index layout of the divisor box `{v : 0 <= v <= target}`.
pub(crate) struct BoxLayout {
    pub shape: Vec<u64>,
    pub strides: Vec<usize>,
    pub cells: usize,
}

impl BoxLayout {
    pub fn new(target: &[u64]) -> Result<BoxLayout> {
        let mut cells: u128 = 1;
        for &t in target {
            cells *= t as u128 + 1;
            if cells > (1 << 27) {
                return Err(Error::BudgetExceeded(cells as u64));
            }
        }
        let shape: Vec<u64> = target.to_vec();
        let mut strides = vec![0usize; target.len()];
        let mut acc = 1usize;
        for j in (0..target.len()).rev() {
            strides[j] = acc;
            acc *= target[j] as usize + 1;
        }
        Ok(BoxLayout {
            shape,
            strides,
            cells: cells as usize,
        })
    }

    pub fn index(&self, v: &[u64]) -> usize {
        v.iter()
            .zip(&self.strides)
            .map(|(&c, &s)| c as usize * s)
            .sum()
    }

    /// Advances `v` through the box in odometer order; false when done.
    pub fn step(&self, v: &mut [u64]) -> bool {
        for j in (0..v.len()).rev() {
            if v[j] < self.shape[j] {
                v[j] += 1;
                return true;
            }
            v[j] = 0;
        }
        false
    }
}

/// Length set of an affine or block monoid element, `None` when outside.
///
/// Fills the divisor box below `target` in odometer order; every generator
/// pull looks strictly backwards, so a single pass suffices.
pub fn vector_length_set(
    generators: &[Vec<u64>],
    target: &[u64],
) -> Result<Option<LengthSet>> {
    let layout = BoxLayout::new(target)?;
    let width = target.iter().sum::<u64>() as u128 + 2;
    if layout.cells as u128 * width > MAX_TABLE_BITS {
        return Err(Error::BudgetExceeded(layout.cells as u64));
    }

    let usable: Vec<(&Vec<u64>, usize)> = generators
        .iter()
        .filter(|g| g.iter().zip(target).all(|(&gc, &tc)| gc <= tc))
        .map(|g| (g, layout.index(g)))
        .collect();

    let mut table: Vec<LengthBits> = vec![LengthBits::new(); layout.cells];
    table[0].set(0);
    let mut v = vec![0u64; target.len()];
    let mut idx = 0usize;
    loop {
        for (g, gidx) in &usable {
            if g.iter().zip(&v).all(|(&gc, &vc)| gc <= vc) {
                let prev = idx - gidx;
                if !table[prev].is_empty() {
                    let (lower, upper) = table.split_at_mut(idx);
                    upper[0].or_shifted(&lower[prev], 1);
                }
            }
        }
        if !layout.step(&mut v) {
            break;
        }
        idx = layout.index(&v);
    }
    Ok(LengthSet::from_bits(0, &table[layout.cells - 1]))
}

/// Membership for vector monoids, a boolean version of the box DP.
pub fn vector_representable(generators: &[Vec<u64>], target: &[u64]) -> bool {
    let Ok(layout) = BoxLayout::new(target) else {
        return vector_representable_dfs(generators, target);
    };
    let usable: Vec<(&Vec<u64>, usize)> = generators
        .iter()
        .filter(|g| g.iter().zip(target).all(|(&gc, &tc)| gc <= tc))
        .map(|g| (g, layout.index(g)))
        .collect();
    let mut reach = vec![false; layout.cells];
    reach[0] = true;
    let mut v = vec![0u64; target.len()];
    let mut idx = 0usize;
    loop {
        if !reach[idx] {
            for (g, gidx) in &usable {
                if g.iter().zip(&v).all(|(&gc, &vc)| gc <= vc) && reach[idx - gidx] {
                    reach[idx] = true;
                    break;
                }
            }
        }
        if !layout.step(&mut v) {
            break;
        }
        idx = layout.index(&v);
    }
    reach[layout.cells - 1]
}

/// Fallback membership search for targets whose divisor box is too large
/// to tabulate. Depth-first over atoms with coordinate pruning.
fn vector_representable_dfs(generators: &[Vec<u64>], target: &[u64]) -> bool {
    fn rec(gens: &[Vec<u64>], idx: usize, rem: &mut Vec<u64>) -> bool {
        if rem.iter().all(|&c| c == 0) {
            return true;
        }
        if idx == gens.len() {
            return false;
        }
        // A leftover coordinate no remaining generator touches is fatal.
        for (j, &c) in rem.iter().enumerate() {
            if c > 0 && gens[idx..].iter().all(|g| g[j] == 0) {
                return false;
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
        for e in 0..=limit {
            if e > 0 {
                for (j, &gc) in g.iter().enumerate() {
                    rem[j] -= gc;
                }
            }
            if rec(gens, idx + 1, rem) {
                for (j, &gc) in g.iter().enumerate() {
                    rem[j] += gc * e;
                }
                return true;
            }
        }
        for (j, &gc) in g.iter().enumerate() {
            rem[j] += gc * limit;
        }
        false
    }
    let mut rem = target.to_vec();
    rec(generators, 0, &mut rem)
}

/// Length set of an element of any presentation kind.
///
/// Errors with `NotInMonoid` when the element lies outside; the identity
/// has length set `{0}` in every kind.
pub fn length_set(m: &MonoidPresentation, x: &Element) -> Result<LengthSet> {
    m.validate_element(x)?;
    let missing = || Error::NotInMonoid(x.to_string());
    match (m, x) {
        (MonoidPresentation::Numerical(n), Element::Natural(v)) => {
            numerical_length_set(n.generators(), *v)?.ok_or_else(missing)
        }
        (MonoidPresentation::Puiseux(p), Element::Rational(q)) => {
            puiseux_length_set(p, q)?.ok_or_else(missing)
        }
        (MonoidPresentation::Affine(_), Element::Vector(v))
        | (MonoidPresentation::Block(_), Element::Vector(v)) => {
            if let MonoidPresentation::Block(b) = m {
                if !b.is_zero_sum(v) {
                    return Err(missing());
                }
            }
            let (gens, _) = m.vector_generators().unwrap();
            vector_length_set(gens, v)?.ok_or_else(missing)
        }
        (MonoidPresentation::Presented(_), Element::Vector(w)) => {
            let set = super::factorizations(m, x, super::DEFAULT_BUDGET)?;
            set.require_complete()?;
            set.lengths().ok_or_else(missing).map(|ls| {
                debug_assert!(ls.contains(w.iter().sum()));
                ls
            })
        }
        (MonoidPresentation::DirectSum(parts), Element::Tuple(xs)) => {
            let mut acc: Option<LengthSet> = None;
            for (p, part_x) in parts.iter().zip(xs) {
                let ls = length_set(p, part_x)?;
                acc = Some(match acc {
                    None => ls,
                    Some(prev) => prev.set_sum(&ls),
                });
            }
            acc.ok_or_else(missing)
        }
        _ => Err(Error::TagMismatch),
    }
}
