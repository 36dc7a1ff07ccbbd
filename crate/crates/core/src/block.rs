//! Block monoids over finite abelian groups.
//!
//! A block over a subset S of a group G is a multiset of elements of S
//! whose sum vanishes; blocks form a monoid under multiset union whose
//! atoms are the minimal zero-sum sequences. The construction here indexes
//! blocks as multiplicity vectors over a fixed support, which makes the
//! whole affine-semigroup machinery applicable verbatim.

use crate::engine;
use crate::error::Error;
use crate::monoid::MonoidPresentation;
use crate::Result;

/// Supported group order for atom enumeration; subset-sum masks are kept
/// in single machine words.
const MAX_GROUP_ORDER: u64 = 64;

/// A finite abelian group in invariant factor form d_1 | d_2 | ... | d_r.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAbelianGroup {
    invariant_factors: Vec<u64>,
}

/// A group element as a residue vector aligned with the invariant factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    residues: Vec<u64>,
}

impl GroupElement {
    pub fn residues(&self) -> &[u64] {
        &self.residues
    }
}

impl std::fmt::Display for GroupElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.residues.len() == 1 {
            write!(f, "{}", self.residues[0])
        } else {
            write!(f, "(")?;
            for (i, r) in self.residues.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{r}")?;
            }
            write!(f, ")")
        }
    }
}

impl FiniteAbelianGroup {
    pub fn invariant_factors(&self) -> &[u64] {
        &self.invariant_factors
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    pub fn order(&self) -> u64 {
        self.invariant_factors.iter().product::<u64>().max(1)
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement {
            residues: vec![0; self.invariant_factors.len()],
        }
    }

    pub fn element(&self, residues: &[u64]) -> Result<GroupElement> {
        if residues.len() != self.invariant_factors.len() {
            return Err(Error::DimensionMismatch {
                expected: self.invariant_factors.len(),
                got: residues.len(),
            });
        }
        Ok(GroupElement {
            residues: residues
                .iter()
                .zip(&self.invariant_factors)
                .map(|(&r, &d)| r % d)
                .collect(),
        })
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement {
            residues: a
                .residues
                .iter()
                .zip(&b.residues)
                .zip(&self.invariant_factors)
                .map(|((&x, &y), &d)| (x + y) % d)
                .collect(),
        }
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        GroupElement {
            residues: a
                .residues
                .iter()
                .zip(&self.invariant_factors)
                .map(|(&x, &d)| (d - x) % d)
                .collect(),
        }
    }

    /// Mixed-radix index of an element, 0 for the identity.
    pub fn index_of(&self, a: &GroupElement) -> usize {
        let mut idx = 0usize;
        for (r, d) in a.residues.iter().zip(&self.invariant_factors) {
            idx = idx * *d as usize + *r as usize;
        }
        idx
    }

    pub fn element_at(&self, mut idx: usize) -> GroupElement {
        let mut residues = vec![0u64; self.invariant_factors.len()];
        for j in (0..self.invariant_factors.len()).rev() {
            let d = self.invariant_factors[j] as usize;
            residues[j] = (idx % d) as u64;
            idx /= d;
        }
        GroupElement { residues }
    }

    /// All elements in index order.
    pub fn elements(&self) -> Vec<GroupElement> {
        (0..self.order() as usize).map(|i| self.element_at(i)).collect()
    }

    pub fn display_name(&self) -> String {
        if self.invariant_factors.is_empty() {
            return "Z1".into();
        }
        self.invariant_factors
            .iter()
            .map(|d| format!("Z{d}"))
            .collect::<Vec<_>>()
            .join(" x ")
    }
}

/// Builds a group from arbitrary cyclic factors, normalizing to invariant
/// factor form. Factors equal to 1 are dropped.
pub fn group_from_factors(factors: &[u64]) -> Result<FiniteAbelianGroup> {
    if factors.contains(&0) {
        return Err(Error::InvalidSpec("group factors must be positive".into()));
    }
    // Split into prime powers, then repeatedly take the largest power of
    // each prime to form the last invariant factor.
    let mut prime_powers: std::collections::BTreeMap<u64, Vec<u64>> =
        std::collections::BTreeMap::new();
    for &f in factors {
        let mut n = f;
        let mut p = 2;
        while p * p <= n {
            if n % p == 0 {
                let mut q = 1;
                while n % p == 0 {
                    n /= p;
                    q *= p;
                }
                prime_powers.entry(p).or_default().push(q);
            }
            p += 1;
        }
        if n > 1 {
            prime_powers.entry(n).or_default().push(n);
        }
    }
    for powers in prime_powers.values_mut() {
        powers.sort_unstable_by(|a, b| b.cmp(a));
    }
    let mut chain: Vec<u64> = Vec::new();
    let mut level = 0;
    loop {
        let mut factor: u128 = 1;
        for powers in prime_powers.values() {
            if let Some(&q) = powers.get(level) {
                factor *= q as u128;
            }
        }
        if factor == 1 {
            break;
        }
        let f = u64::try_from(factor)
            .map_err(|_| Error::InvalidSpec("group factor overflow".into()))?;
        chain.push(f);
        level += 1;
    }
    chain.reverse();
    Ok(FiniteAbelianGroup {
        invariant_factors: chain,
    })
}

/// Davenport constant: the longest zero-sum-free sequence plus one.
///
/// Depth-first search over multisets of nonzero elements, tracking the set
/// of achievable subset sums as a bitmask over group indices.
pub fn davenport(g: &FiniteAbelianGroup, budget: u64) -> Result<u64> {
    let order = g.order();
    if order > MAX_GROUP_ORDER {
        return Err(Error::InvalidSpec(format!(
            "group order {order} exceeds supported limit {MAX_GROUP_ORDER}"
        )));
    }
    if order == 1 {
        return Ok(1);
    }
    let n = order as usize;
    let add = addition_table(g);
    let mut best = 0u64;
    let mut used = 0u64;

    fn rec(
        add: &[Vec<usize>],
        n: usize,
        start: usize,
        subsums: u64,
        depth: u64,
        best: &mut u64,
        used: &mut u64,
        budget: u64,
    ) -> Result<()> {
        *used += 1;
        if *used > budget {
            return Err(Error::BudgetExceeded(budget));
        }
        *best = (*best).max(depth);
        for e in start..n {
            // Appending e keeps the sequence zero-sum-free iff no current
            // subset sums to -e (that subset plus e would vanish).
            let neg = add[e]
                .iter()
                .position(|&s| s == 0)
                .expect("addition table covers inverses");
            if (subsums >> neg) & 1 == 1 {
                continue;
            }
            let mut next = subsums | (1u64 << e);
            let mut bits = subsums;
            while bits != 0 {
                let s = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                next |= 1u64 << add[s][e];
            }
            rec(add, n, e, next, depth + 1, best, used, budget)?;
        }
        Ok(())
    }

    rec(&add, n, 1, 0, 0, &mut best, &mut used, budget)?;
    Ok(best + 1)
}

fn addition_table(g: &FiniteAbelianGroup) -> Vec<Vec<usize>> {
    let n = g.order() as usize;
    let els = g.elements();
    let mut table = vec![vec![0usize; n]; n];
    for i in 0..n {
        for j in 0..n {
            table[i][j] = g.index_of(&g.add(&els[i], &els[j]));
        }
    }
    table
}

/// Minimal zero-sum sequences over the support, as multiplicity vectors,
/// with total length between 1 and `max_len`. Sorted lexicographically.
pub fn zero_sum_atoms(
    g: &FiniteAbelianGroup,
    support: &[GroupElement],
    max_len: u64,
    budget: u64,
) -> Result<Vec<Vec<u64>>> {
    let order = g.order();
    if order > MAX_GROUP_ORDER {
        return Err(Error::InvalidSpec(format!(
            "group order {order} exceeds supported limit {MAX_GROUP_ORDER}"
        )));
    }
    let add = addition_table(g);
    let support_idx: Vec<usize> = support.iter().map(|s| g.index_of(s)).collect();
    let k = support.len();
    let mut out: Vec<Vec<u64>> = Vec::new();
    let mut used = 0u64;
    let mut cur = vec![0u64; k];

    fn rec(
        add: &[Vec<usize>],
        support_idx: &[usize],
        pos: usize,
        remaining: u64,
        sum: usize,
        total: u64,
        cur: &mut Vec<u64>,
        out: &mut Vec<Vec<u64>>,
        used: &mut u64,
        budget: u64,
    ) -> Result<()> {
        *used += 1;
        if *used > budget {
            return Err(Error::BudgetExceeded(budget));
        }
        if pos == support_idx.len() {
            if total >= 1 && sum == 0 && is_minimal_zero_sum(add, support_idx, cur, total) {
                out.push(cur.clone());
            }
            return Ok(());
        }
        let mut s = sum;
        for m in 0..=remaining {
            if m > 0 {
                s = add[s][support_idx[pos]];
            }
            cur[pos] = m;
            rec(
                add,
                support_idx,
                pos + 1,
                remaining - m,
                s,
                total + m,
                cur,
                out,
                used,
                budget,
            )?;
        }
        cur[pos] = 0;
        Ok(())
    }

    rec(
        &add,
        &support_idx,
        0,
        max_len,
        0,
        0,
        &mut cur,
        &mut out,
        &mut used,
        budget,
    )?;
    out.sort_unstable();
    Ok(out)
}

/// A nonempty zero-sum multiset is minimal when no proper nonempty
/// sub-multiset sums to zero. Subset sums are folded unit by unit,
/// stratified by how many units were taken.
fn is_minimal_zero_sum(
    add: &[Vec<usize>],
    support_idx: &[usize],
    counts: &[u64],
    total: u64,
) -> bool {
    if total == 1 {
        return true;
    }
    let total = total as usize;
    let mut by_count: Vec<u64> = vec![0; total + 1];
    by_count[0] = 1; // the empty sub-multiset, sum zero
    for (pos, &c) in counts.iter().enumerate() {
        for _ in 0..c {
            for taken in (0..total).rev() {
                let mut bits = by_count[taken];
                while bits != 0 {
                    let s = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    by_count[taken + 1] |= 1u64 << add[s][support_idx[pos]];
                }
            }
        }
    }
    for taken in 1..total {
        if by_count[taken] & 1 == 1 {
            return false;
        }
    }
    true
}

/// The block monoid data: group, ordered support, and its complete list of
/// atoms as multiplicity vectors over the support.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockMonoid {
    group: FiniteAbelianGroup,
    support: Vec<GroupElement>,
    atoms: Vec<Vec<u64>>,
}

impl BlockMonoid {
    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn support(&self) -> &[GroupElement] {
        &self.support
    }

    pub fn atoms(&self) -> &[Vec<u64>] {
        &self.atoms
    }

    pub fn atom_label(&self, i: usize) -> String {
        block_label(&self.support, &self.atoms[i])
    }

    /// Does this multiplicity vector sum to zero in the group?
    pub fn is_zero_sum(&self, counts: &[u64]) -> bool {
        let mut sum = self.group.zero();
        for (s, &c) in self.support.iter().zip(counts) {
            let d = self.group.invariant_factors();
            for (j, r) in sum.residues.iter_mut().enumerate() {
                *r = (*r + s.residues[j] % d[j] * (c % d[j])) % d[j];
            }
        }
        sum.residues.iter().all(|&r| r == 0)
    }
}

/// Renders a multiset over the support in exponent notation, e.g. 1^5(4)^5.
pub fn block_label(support: &[GroupElement], counts: &[u64]) -> String {
    let mut parts = Vec::new();
    for (s, &c) in support.iter().zip(counts) {
        if c == 0 {
            continue;
        }
        let base = if s.residues().len() == 1 {
            format!("({})", s.residues()[0])
        } else {
            s.to_string()
        };
        if c == 1 {
            parts.push(base);
        } else {
            parts.push(format!("{base}^{c}"));
        }
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("")
    }
}

/// Builds the block monoid over the listed support (the whole group when
/// `support` is `None`). Atoms are all minimal zero-sum sequences, whose
/// length never exceeds the Davenport constant.
pub fn block_presentation(
    g: &FiniteAbelianGroup,
    support: Option<Vec<GroupElement>>,
) -> Result<MonoidPresentation> {
    let mut sup = match support {
        Some(s) => {
            if s.is_empty() {
                return Err(Error::EmptyGenerators);
            }
            s
        }
        None => g.elements(),
    };
    sup.sort_by_key(|e| g.index_of(e));
    sup.dedup();

    let d = davenport(g, engine::DEFAULT_BUDGET)?;
    let atoms = zero_sum_atoms(g, &sup, d, engine::DEFAULT_BUDGET)?;
    if atoms.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    Ok(MonoidPresentation::Block(BlockMonoid {
        group: g.clone(),
        support: sup,
        atoms,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invariant_factor_normalization() {
        assert_eq!(group_from_factors(&[4]).unwrap().invariant_factors(), &[4]);
        assert_eq!(
            group_from_factors(&[2, 2, 3]).unwrap().invariant_factors(),
            &[2, 6]
        );
        assert_eq!(
            group_from_factors(&[6, 4]).unwrap().invariant_factors(),
            &[2, 12]
        );
        assert_eq!(group_from_factors(&[1]).unwrap().invariant_factors(), &[] as &[u64]);
        assert_eq!(group_from_factors(&[1]).unwrap().order(), 1);
    }

    #[test]
    fn group_arithmetic_roundtrip() {
        let g = group_from_factors(&[2, 6]).unwrap();
        assert_eq!(g.order(), 12);
        for i in 0..12 {
            let e = g.element_at(i);
            assert_eq!(g.index_of(&e), i);
            let n = g.neg(&e);
            assert_eq!(g.add(&e, &n), g.zero());
        }
    }

    #[test]
    fn davenport_of_cyclic_groups_is_the_order() {
        for n in 1..=9u64 {
            let g = group_from_factors(&[n]).unwrap();
            assert_eq!(davenport(&g, 10_000_000).unwrap(), n, "Z{n}");
        }
    }

    #[test]
    fn davenport_of_elementary_two_groups() {
        for k in 1..=4usize {
            let g = group_from_factors(&vec![2; k]).unwrap();
            assert_eq!(davenport(&g, 10_000_000).unwrap(), k as u64 + 1, "rank {k}");
        }
    }

    #[test]
    fn davenport_of_rank_two_groups() {
        // For Z_a x Z_b with a | b the constant is a + b - 1.
        let g = group_from_factors(&[2, 6]).unwrap();
        assert_eq!(davenport(&g, 10_000_000).unwrap(), 7);
        let g = group_from_factors(&[3, 3]).unwrap();
        assert_eq!(davenport(&g, 10_000_000).unwrap(), 5);
    }

    #[test]
    fn atoms_of_z3_full_support() {
        let g = group_from_factors(&[3]).unwrap();
        let m = block_presentation(&g, None).unwrap();
        match &m {
            MonoidPresentation::Block(b) => {
                // Support ordered 0,1,2; atoms: [0], [1,2], [1^3], [2^3].
                assert_eq!(
                    b.atoms(),
                    &[
                        vec![0, 0, 3],
                        vec![0, 1, 1],
                        vec![0, 3, 0],
                        vec![1, 0, 0],
                    ]
                );
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn atoms_over_restricted_support() {
        let g = group_from_factors(&[5]).unwrap();
        let sup = vec![g.element(&[1]).unwrap(), g.element(&[4]).unwrap()];
        let atoms = zero_sum_atoms(&g, &sup, 5, 10_000_000).unwrap();
        assert_eq!(atoms, vec![vec![0, 5], vec![1, 1], vec![5, 0]]);
    }

    #[test]
    fn minimality_check_rejects_composites() {
        let g = group_from_factors(&[4]).unwrap();
        let add = addition_table(&g);
        let idx: Vec<usize> = vec![1, 3];
        // 1^4 is minimal, 1^1 3^1 is minimal, but 1^4 3^4 is not.
        assert!(is_minimal_zero_sum(&add, &idx, &[4, 0], 4));
        assert!(is_minimal_zero_sum(&add, &idx, &[1, 1], 2));
        assert!(!is_minimal_zero_sum(&add, &idx, &[4, 4], 8));
        assert!(!is_minimal_zero_sum(&add, &idx, &[2, 2], 4));
    }

    #[test]
    fn zero_sum_membership() {
        let g = group_from_factors(&[5]).unwrap();
        let sup = vec![g.element(&[1]).unwrap(), g.element(&[4]).unwrap()];
        let m = block_presentation(&g, Some(sup)).unwrap();
        match &m {
            MonoidPresentation::Block(b) => {
                assert!(b.is_zero_sum(&[5, 5]));
                assert!(b.is_zero_sum(&[1, 1]));
                assert!(!b.is_zero_sum(&[1, 2]));
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn oversized_groups_are_rejected() {
        let g = group_from_factors(&[65]).unwrap();
        assert!(matches!(
            davenport(&g, 10_000_000).unwrap_err(),
            Error::InvalidSpec(_)
        ));
    }

    #[test]
    fn block_labels() {
        let g = group_from_factors(&[5]).unwrap();
        let sup = vec![g.element(&[1]).unwrap(), g.element(&[4]).unwrap()];
        assert_eq!(block_label(&sup, &[5, 5]), "(1)^5(4)^5");
        assert_eq!(block_label(&sup, &[1, 1]), "(1)(4)");
        assert_eq!(block_label(&sup, &[0, 0]), "1");
    }
}
