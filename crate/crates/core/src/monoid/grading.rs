//! Positive grading derivation for finite presentations.
//!
//! A presentation is usable only if some weight vector w with every entry
//! positive balances each relation: sum(lhs_j * w_j) = sum(rhs_j * w_j).
//! Relations between pure atom powers (x^m = y^n) are resolved by ratio
//! propagation over a union-find; anything more general falls back to an
//! exact rational phase-1 simplex on the balance equations.

use crate::error::Error;
use crate::{Rational, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub(crate) fn positive_grading(
    atom_count: usize,
    relations: &[(Vec<u64>, Vec<u64>)],
) -> Result<Vec<u64>> {
    if relations.is_empty() {
        return Ok(vec![1; atom_count]);
    }

    let all_power_relations = relations
        .iter()
        .all(|(l, r)| support_size(l) == 1 && support_size(r) == 1);

    let weights = if all_power_relations {
        ratio_propagation(atom_count, relations)?
    } else {
        balance_by_simplex(atom_count, relations)?
    };

    for (lhs, rhs) in relations {
        let l: Rational = weighted_degree(lhs, &weights);
        let r: Rational = weighted_degree(rhs, &weights);
        if l != r {
            return Err(Error::NoPositiveGrading);
        }
    }

    scale_to_integers(&weights)
}

fn support_size(word: &[u64]) -> usize {
    word.iter().filter(|&&e| e > 0).count()
}

fn weighted_degree(word: &[u64], weights: &[Rational]) -> Rational {
    word.iter()
        .zip(weights)
        .map(|(&e, w)| Rational::from_integer(e.into()) * w)
        .sum()
}

/// Union-find with rational ratios to the representative. Each relation
/// m*e_i = n*e_j pins w_i / w_j = n / m; a contradictory cycle leaves only
/// the zero grading, which is not positive.
fn ratio_propagation(
    atom_count: usize,
    relations: &[(Vec<u64>, Vec<u64>)],
) -> Result<Vec<Rational>> {
    let mut parent: Vec<usize> = (0..atom_count).collect();
    let mut ratio: Vec<Rational> = vec![Rational::one(); atom_count];

    fn find(parent: &mut Vec<usize>, ratio: &mut Vec<Rational>, x: usize) -> (usize, Rational) {
        if parent[x] == x {
            return (x, ratio[x].clone());
        }
        let (root, up) = find(parent, ratio, parent[x]);
        let total = &ratio[x] * &up;
        parent[x] = root;
        ratio[x] = total.clone();
        (root, total)
    }

    for (lhs, rhs) in relations {
        let i = lhs.iter().position(|&e| e > 0).unwrap();
        let j = rhs.iter().position(|&e| e > 0).unwrap();
        let m = lhs[i];
        let n = rhs[j];
        let rho = Rational::new(n.into(), m.into());
        let (ri, pi) = find(&mut parent, &mut ratio, i);
        let (rj, pj) = find(&mut parent, &mut ratio, j);
        if ri == rj {
            if pi != rho.clone() * pj {
                return Err(Error::NoPositiveGrading);
            }
        } else {
            ratio[ri] = rho * pj / pi;
            parent[ri] = rj;
        }
    }

    let mut weights = Vec::with_capacity(atom_count);
    for x in 0..atom_count {
        let (_, r) = find(&mut parent, &mut ratio, x);
        weights.push(r);
    }
    Ok(weights)
}

/// Phase-1 simplex, exact rationals, Bland's rule.
///
/// Solves A u = b, u >= 0 for u = w - 1, where A encodes the relation
/// balances; feasibility is equivalent to the existence of a grading with
/// every weight at least 1.
fn balance_by_simplex(
    atom_count: usize,
    relations: &[(Vec<u64>, Vec<u64>)],
) -> Result<Vec<Rational>> {
    let n = atom_count;
    let m = relations.len();

    // Row per relation: coefficients lhs - rhs, right side -(row sum).
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(m);
    let mut rhs: Vec<Rational> = Vec::with_capacity(m);
    for (l, r) in relations {
        let mut row: Vec<Rational> = Vec::with_capacity(n);
        let mut sum = Rational::zero();
        for j in 0..n {
            let c = Rational::from_integer(BigInt::from(l[j]))
                - Rational::from_integer(BigInt::from(r[j]));
            sum += c.clone();
            row.push(c);
        }
        let mut b = -sum;
        if b.is_negative() {
            for c in row.iter_mut() {
                *c = -c.clone();
            }
            b = -b;
        }
        rows.push(row);
        rhs.push(b);
    }

    // Tableau columns: n structural u-variables, m artificials, then b.
    let cols = n + m;
    let mut t: Vec<Vec<Rational>> = Vec::with_capacity(m);
    for i in 0..m {
        let mut row = vec![Rational::zero(); cols + 1];
        row[..n].clone_from_slice(&rows[i]);
        row[n + i] = Rational::one();
        row[cols] = rhs[i].clone();
        t.push(row);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    loop {
        // Phase-1 reduced cost of column j: sum of that column over rows
        // whose basic variable is artificial.
        let mut entering = None;
        for j in 0..n {
            if basis.contains(&j) {
                continue;
            }
            let mut d = Rational::zero();
            for i in 0..m {
                if basis[i] >= n {
                    d += t[i][j].clone();
                }
            }
            if d.is_positive() {
                entering = Some(j);
                break;
            }
        }
        let Some(enter) = entering else {
            break;
        };

        let mut leave: Option<usize> = None;
        let mut best: Option<Rational> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let r = &t[i][cols] / &t[i][enter];
                let better = match &best {
                    None => true,
                    Some(b) => {
                        r < *b || (r == *b && basis[i] < basis[leave.unwrap()])
                    }
                };
                if better {
                    best = Some(r);
                    leave = Some(i);
                }
            }
        }
        let Some(pivot_row) = leave else {
            // Unbounded improvement cannot happen in phase 1; treat
            // defensively as infeasible.
            return Err(Error::NoPositiveGrading);
        };

        let pivot = t[pivot_row][enter].clone();
        for c in t[pivot_row].iter_mut() {
            *c = &*c / &pivot;
        }
        for i in 0..m {
            if i == pivot_row || t[i][enter].is_zero() {
                continue;
            }
            let factor = t[i][enter].clone();
            for j in 0..=cols {
                let delta = &factor * &t[pivot_row][j];
                t[i][j] = &t[i][j] - &delta;
            }
        }
        basis[pivot_row] = enter;
    }

    let objective: Rational = (0..m)
        .filter(|&i| basis[i] >= n)
        .map(|i| t[i][cols].clone())
        .sum();
    if !objective.is_zero() {
        return Err(Error::NoPositiveGrading);
    }

    let mut u = vec![Rational::zero(); n];
    for i in 0..m {
        if basis[i] < n {
            u[basis[i]] = t[i][cols].clone();
        }
    }
    Ok(u.into_iter().map(|x| x + Rational::one()).collect())
}

/// Clears denominators and divides by the common gcd, yielding the smallest
/// integer grading proportional to the rational one.
fn scale_to_integers(weights: &[Rational]) -> Result<Vec<u64>> {
    let mut lcm = BigInt::one();
    for w in weights {
        if !w.is_positive() {
            return Err(Error::NoPositiveGrading);
        }
        lcm = lcm.lcm(w.denom());
    }
    let scaled: Vec<BigInt> = weights
        .iter()
        .map(|w| (w * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let g = scaled
        .iter()
        .fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let mut out = Vec::with_capacity(scaled.len());
    for s in &scaled {
        let v = (s / &g).to_u64().ok_or_else(|| {
            Error::InvalidSpec("grading weights overflow u64".into())
        })?;
        out.push(v);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_relations_weight_everything_one() {
        assert_eq!(positive_grading(3, &[]).unwrap(), vec![1, 1, 1]);
    }

    #[test]
    fn chain_of_powers_propagates_ratios() {
        // a1^3 = a2^4 = a3^6 = a4^8: weights lcm-scaled from 1/3,1/4,1/6,1/8.
        let rels = vec![
            (vec![3, 0, 0, 0], vec![0, 4, 0, 0]),
            (vec![0, 4, 0, 0], vec![0, 0, 6, 0]),
            (vec![0, 0, 6, 0], vec![0, 0, 0, 8]),
        ];
        assert_eq!(positive_grading(4, &rels).unwrap(), vec![8, 6, 4, 3]);
    }

    #[test]
    fn unconstrained_atoms_keep_weight_after_scaling() {
        let rels = vec![(vec![2, 0, 0], vec![0, 3, 0])];
        let w = positive_grading(3, &rels).unwrap();
        assert_eq!(2 * w[0], 3 * w[1]);
        assert!(w[2] > 0);
    }

    #[test]
    fn inconsistent_cycle_is_rejected() {
        let rels = vec![
            (vec![1, 0], vec![0, 1]),
            (vec![2, 0], vec![0, 1]),
        ];
        assert_eq!(
            positive_grading(2, &rels).unwrap_err(),
            Error::NoPositiveGrading
        );
    }

    #[test]
    fn simplex_finds_mixed_relation_grading() {
        // a1 + a2 = 2 a3 and a1 = a2 force w1 = w2 = w3.
        let rels = vec![
            (vec![1, 1, 0], vec![0, 0, 2]),
            (vec![1, 0, 0], vec![0, 1, 0]),
        ];
        let w = positive_grading(3, &rels).unwrap();
        assert_eq!(w[0] + w[1], 2 * w[2]);
        assert_eq!(w[0], w[1]);
    }

    #[test]
    fn simplex_rejects_unbalanced_mixed_relations() {
        // a1 + a2 = a1 forces w2 = 0.
        let rels = vec![(vec![1, 1], vec![1, 0])];
        assert_eq!(
            positive_grading(2, &rels).unwrap_err(),
            Error::NoPositiveGrading
        );
    }

    #[test]
    fn simplex_handles_redundant_rows() {
        let rels = vec![
            (vec![1, 1, 0], vec![0, 0, 2]),
            (vec![2, 2, 0], vec![0, 0, 4]),
        ];
        let w = positive_grading(3, &rels).unwrap();
        assert_eq!(w[0] + w[1], 2 * w[2]);
    }
}
