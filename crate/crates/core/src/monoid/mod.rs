//! Monoid presentations and element membership.
//!
//! Five presentation kinds share one interface: numerical semigroups,
//! affine semigroups, finitely presented graded monoids, finitely generated
//! Puiseux monoids (as truncations with explicitly listed atoms), and block
//! monoids over finite abelian groups. Finite direct sums of presentations
//! close the family under coproducts.
//!
//! Every kind exposes its atoms in a fixed canonical order; factorizations
//! are exponent vectors against that order.

mod grading;

use crate::block::BlockMonoid;
use crate::engine;
use crate::error::Error;
use crate::{Rational, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub(crate) use grading::positive_grading;

/// An element of a monoid, tagged by the presentation kind it belongs to.
///
/// Naturals address numerical semigroups, vectors address affine and block
/// monoids (multiplicity over the support) as well as presented monoids
/// (exponent word over the atoms), nonnegative rationals address Puiseux
/// truncations, and tuples address direct sums componentwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Element {
    Natural(u64),
    Vector(Vec<u64>),
    Rational(Rational),
    Tuple(Vec<Element>),
}

impl std::fmt::Display for Element {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Element::Natural(n) => write!(f, "{n}"),
            Element::Vector(v) => {
                write!(f, "(")?;
                for (i, c) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
            Element::Rational(q) => write!(f, "{q}"),
            Element::Tuple(parts) => {
                write!(f, "[")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, "; ")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, "]")
            }
        }
    }
}

/// A numerical semigroup given by its minimal generators, sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
}

impl NumericalSemigroup {
    pub fn generators(&self) -> &[u64] {
        &self.generators
    }
}

/// An affine semigroup inside N^d, generated by the listed vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSemigroup {
    dimension: usize,
    generators: Vec<Vec<u64>>,
}

impl AffineSemigroup {
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn generators(&self) -> &[Vec<u64>] {
        &self.generators
    }
}

/// A finitely presented commutative monoid with a positive grading.
///
/// Relations identify pairs of words over the atoms. The grading weights are
/// derived at construction time by balancing the relations; they make every
/// congruence class finite, which keeps word-closure enumeration terminating.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePresentation {
    atom_count: usize,
    relations: Vec<(Vec<u64>, Vec<u64>)>,
    weights: Vec<u64>,
    atom_labels: Vec<String>,
}

impl FinitePresentation {
    pub fn atom_count(&self) -> usize {
        self.atom_count
    }

    pub fn relations(&self) -> &[(Vec<u64>, Vec<u64>)] {
        &self.relations
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn atom_labels(&self) -> &[String] {
        &self.atom_labels
    }

    pub fn set_atom_labels(&mut self, labels: Vec<String>) {
        assert_eq!(labels.len(), self.atom_count);
        self.atom_labels = labels;
    }

    /// Graded degree of a word under the derived weights.
    pub fn degree(&self, word: &[u64]) -> u128 {
        word.iter()
            .zip(&self.weights)
            .map(|(&e, &w)| e as u128 * w as u128)
            .sum()
    }
}

/// A finitely generated Puiseux monoid, listed by its atoms.
///
/// The constructor clears denominators once; factorization questions reduce
/// to a single integer equation over the cleared degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PuiseuxTruncation {
    atoms: Vec<Rational>,
    clear_denominator: u64,
    cleared_degrees: Vec<u64>,
}

impl PuiseuxTruncation {
    pub fn atoms(&self) -> &[Rational] {
        &self.atoms
    }

    pub fn clear_denominator(&self) -> u64 {
        self.clear_denominator
    }

    pub fn cleared_degrees(&self) -> &[u64] {
        &self.cleared_degrees
    }
}

/// A monoid presentation of one of the supported kinds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonoidPresentation {
    Numerical(NumericalSemigroup),
    Affine(AffineSemigroup),
    Presented(FinitePresentation),
    Puiseux(PuiseuxTruncation),
    Block(BlockMonoid),
    DirectSum(Vec<MonoidPresentation>),
}

impl MonoidPresentation {
    pub fn kind_name(&self) -> &'static str {
        match self {
            MonoidPresentation::Numerical(_) => "numerical",
            MonoidPresentation::Affine(_) => "affine",
            MonoidPresentation::Presented(_) => "presented",
            MonoidPresentation::Puiseux(_) => "puiseux",
            MonoidPresentation::Block(_) => "block",
            MonoidPresentation::DirectSum(_) => "direct-sum",
        }
    }

    /// Number of atoms, which is also the factorization index space size.
    pub fn atom_count(&self) -> usize {
        match self {
            MonoidPresentation::Numerical(n) => n.generators.len(),
            MonoidPresentation::Affine(a) => a.generators.len(),
            MonoidPresentation::Presented(p) => p.atom_count,
            MonoidPresentation::Puiseux(p) => p.atoms.len(),
            MonoidPresentation::Block(b) => b.atoms().len(),
            MonoidPresentation::DirectSum(parts) => parts.iter().map(|p| p.atom_count()).sum(),
        }
    }

    /// Human-readable label of atom `i` in canonical order.
    pub fn atom_label(&self, i: usize) -> String {
        match self {
            MonoidPresentation::Numerical(n) => n.generators[i].to_string(),
            MonoidPresentation::Affine(a) => Element::Vector(a.generators[i].clone()).to_string(),
            MonoidPresentation::Presented(p) => p.atom_labels[i].clone(),
            MonoidPresentation::Puiseux(p) => p.atoms[i].to_string(),
            MonoidPresentation::Block(b) => b.atom_label(i),
            MonoidPresentation::DirectSum(parts) => {
                let mut offset = 0;
                for (k, part) in parts.iter().enumerate() {
                    let c = part.atom_count();
                    if i < offset + c {
                        return format!("{}:{}", k, part.atom_label(i - offset));
                    }
                    offset += c;
                }
                unreachable!("atom index out of range")
            }
        }
    }

    /// The identity element, in this presentation's tag.
    pub fn identity(&self) -> Element {
        match self {
            MonoidPresentation::Numerical(_) => Element::Natural(0),
            MonoidPresentation::Affine(a) => Element::Vector(vec![0; a.dimension]),
            MonoidPresentation::Presented(p) => Element::Vector(vec![0; p.atom_count]),
            MonoidPresentation::Puiseux(_) => Element::Rational(Rational::zero()),
            MonoidPresentation::Block(b) => Element::Vector(vec![0; b.support().len()]),
            MonoidPresentation::DirectSum(parts) => {
                Element::Tuple(parts.iter().map(|p| p.identity()).collect())
            }
        }
    }

    /// Checks that an element's tag and shape fit this presentation.
    pub fn validate_element(&self, x: &Element) -> Result<()> {
        match (self, x) {
            (MonoidPresentation::Numerical(_), Element::Natural(_)) => Ok(()),
            (MonoidPresentation::Affine(a), Element::Vector(v)) => {
                if v.len() == a.dimension {
                    Ok(())
                } else {
                    Err(Error::DimensionMismatch {
                        expected: a.dimension,
                        got: v.len(),
                    })
                }
            }
            (MonoidPresentation::Presented(p), Element::Vector(v)) => {
                if v.len() == p.atom_count {
                    Ok(())
                } else {
                    Err(Error::DimensionMismatch {
                        expected: p.atom_count,
                        got: v.len(),
                    })
                }
            }
            (MonoidPresentation::Puiseux(_), Element::Rational(q)) => {
                if q.is_negative() {
                    Err(Error::NotInMonoid(q.to_string()))
                } else {
                    Ok(())
                }
            }
            (MonoidPresentation::Block(b), Element::Vector(v)) => {
                if v.len() == b.support().len() {
                    Ok(())
                } else {
                    Err(Error::DimensionMismatch {
                        expected: b.support().len(),
                        got: v.len(),
                    })
                }
            }
            (MonoidPresentation::DirectSum(parts), Element::Tuple(xs)) => {
                if parts.len() != xs.len() {
                    return Err(Error::TagMismatch);
                }
                for (p, x) in parts.iter().zip(xs) {
                    p.validate_element(x)?;
                }
                Ok(())
            }
            _ => Err(Error::TagMismatch),
        }
    }

    /// Generators as integer vectors, for the kinds whose factorization
    /// problem is a vector equation (affine and block).
    pub(crate) fn vector_generators(&self) -> Option<(&[Vec<u64>], usize)> {
        match self {
            MonoidPresentation::Affine(a) => Some((&a.generators, a.dimension)),
            MonoidPresentation::Block(b) => Some((b.atoms(), b.support().len())),
            _ => None,
        }
    }
}

/// Builds a numerical semigroup from arbitrary positive generators.
///
/// Duplicates and redundant generators are removed, so the result is the
/// unique minimal system. Rejects an empty list and non-coprime generators.
pub fn make_numerical(generators: &[u64]) -> Result<MonoidPresentation> {
    if generators.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    if generators.contains(&0) {
        return Err(Error::InvalidSpec("generators must be positive".into()));
    }
    let mut gens: Vec<u64> = generators.to_vec();
    gens.sort_unstable();
    gens.dedup();

    let g = gens.iter().fold(0u64, |acc, &x| acc.gcd(&x));
    if g > 1 {
        return Err(Error::NonCoprime(g));
    }
    if *gens.iter().max().unwrap() > 100_000_000 {
        return Err(Error::InvalidSpec(
            "generators above 10^8 are not supported".into(),
        ));
    }

    // Drop any generator representable over the others; the minimal system
    // of a numerical semigroup is unique, so removal order does not matter.
    loop {
        let mut removed = None;
        for (i, &g) in gens.iter().enumerate() {
            let others: Vec<u64> = gens
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &h)| h)
                .collect();
            if !others.is_empty() && natural_representable(&others, g) {
                removed = Some(i);
                break;
            }
        }
        match removed {
            Some(i) => {
                gens.remove(i);
            }
            None => break,
        }
    }

    Ok(MonoidPresentation::Numerical(NumericalSemigroup {
        generators: gens,
    }))
}

/// Reachability of `target` as a nonnegative combination of `gens`.
pub(crate) fn natural_representable(gens: &[u64], target: u64) -> bool {
    let t = target as usize;
    let mut reach = vec![false; t + 1];
    reach[0] = true;
    for &g in gens {
        let g = g as usize;
        if g == 0 || g > t {
            continue;
        }
        for v in g..=t {
            if reach[v - g] {
                reach[v] = true;
            }
        }
    }
    reach[t]
}

/// Builds an affine semigroup from generating vectors of one dimension.
///
/// Exact duplicate vectors are collapsed (first occurrence kept); zero
/// vectors are rejected.
pub fn make_affine(generators: &[Vec<u64>]) -> Result<MonoidPresentation> {
    if generators.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let dimension = generators[0].len();
    if dimension == 0 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            got: 0,
        });
    }
    let mut gens: Vec<Vec<u64>> = Vec::new();
    for g in generators {
        if g.len() != dimension {
            return Err(Error::DimensionMismatch {
                expected: dimension,
                got: g.len(),
            });
        }
        if g.iter().all(|&c| c == 0) {
            return Err(Error::ZeroVector);
        }
        if !gens.contains(g) {
            gens.push(g.clone());
        }
    }
    Ok(MonoidPresentation::Affine(AffineSemigroup {
        dimension,
        generators: gens,
    }))
}

/// Builds a finitely presented monoid from atom count and relations.
///
/// Each relation equates two distinct nonzero words. A positive integer
/// grading balancing every relation is derived; presentations without one
/// are rejected, since ungraded relations would make congruence classes
/// infinite and factorization enumeration non-terminating.
pub fn make_presentation(
    atom_count: usize,
    relations: &[(Vec<u64>, Vec<u64>)],
) -> Result<MonoidPresentation> {
    if atom_count == 0 {
        return Err(Error::EmptyGenerators);
    }
    for (lhs, rhs) in relations {
        if lhs.len() != atom_count || rhs.len() != atom_count {
            return Err(Error::MalformedRelation(format!(
                "relation words must have {atom_count} entries"
            )));
        }
        if lhs.iter().all(|&e| e == 0) || rhs.iter().all(|&e| e == 0) {
            return Err(Error::MalformedRelation(
                "relation sides must be nonzero words".into(),
            ));
        }
        if lhs == rhs {
            return Err(Error::MalformedRelation(
                "relation sides must differ".into(),
            ));
        }
    }
    let weights = positive_grading(atom_count, relations)?;
    let atom_labels = (0..atom_count).map(|i| format!("a{}", i + 1)).collect();
    Ok(MonoidPresentation::Presented(FinitePresentation {
        atom_count,
        relations: relations.to_vec(),
        weights,
        atom_labels,
    }))
}

/// Builds a Puiseux monoid truncation from its listed atoms.
///
/// Atoms must be positive rationals; the list is checked for atomicity
/// (no listed rational may factor over the list with two or more parts).
pub fn make_puiseux(atoms: &[Rational]) -> Result<MonoidPresentation> {
    if atoms.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let mut list: Vec<Rational> = Vec::new();
    for a in atoms {
        if !a.is_positive() {
            return Err(Error::InvalidSpec("atoms must be positive rationals".into()));
        }
        if !list.contains(a) {
            list.push(a.clone());
        }
    }

    let mut lcm = BigInt::one();
    for a in &list {
        lcm = lcm.lcm(a.denom());
    }
    let clear_denominator = lcm
        .to_u64()
        .ok_or_else(|| Error::InvalidSpec("atom denominators too large to clear".into()))?;

    let mut cleared_degrees = Vec::with_capacity(list.len());
    for a in &list {
        let d = (a * Rational::from_integer(lcm.clone())).to_integer();
        cleared_degrees.push(d.to_u64().ok_or_else(|| {
            Error::InvalidSpec("cleared atom degrees too large".into())
        })?);
    }

    let monoid = PuiseuxTruncation {
        atoms: list,
        clear_denominator,
        cleared_degrees,
    };

    // A listed rational fails to be an atom exactly when it is a sum of two
    // or more listed values, i.e. when its length set reaches past 1.
    for a in monoid.atoms.clone() {
        let lengths = engine::puiseux_length_set(&monoid, &a)?;
        match lengths {
            Some(ls) if ls.max() > 1 => return Err(Error::NotAnAtom(a.to_string())),
            _ => {}
        }
    }

    Ok(MonoidPresentation::Puiseux(monoid))
}

/// Coproduct of finitely many presentations.
///
/// Atoms are the disjoint union of component atoms and elements are tuples;
/// a single summand is returned unchanged.
pub fn direct_sum(parts: Vec<MonoidPresentation>) -> Result<MonoidPresentation> {
    match parts.len() {
        0 => Err(Error::EmptyGenerators),
        1 => Ok(parts.into_iter().next().unwrap()),
        _ => Ok(MonoidPresentation::DirectSum(parts)),
    }
}

/// Membership test: does `x` lie in the monoid?
pub fn contains(m: &MonoidPresentation, x: &Element) -> Result<bool> {
    m.validate_element(x)?;
    match (m, x) {
        (MonoidPresentation::Numerical(n), Element::Natural(v)) => {
            Ok(natural_representable(&n.generators, *v))
        }
        (MonoidPresentation::Affine(_), Element::Vector(v))
        | (MonoidPresentation::Block(_), Element::Vector(v)) => {
            if let MonoidPresentation::Block(b) = m {
                // Zero-sum failure rules membership out before any search.
                if !b.is_zero_sum(v) {
                    return Ok(false);
                }
            }
            let (gens, _) = m.vector_generators().unwrap();
            Ok(engine::vector_representable(gens, v))
        }
        (MonoidPresentation::Presented(_), Element::Vector(_)) => Ok(true),
        (MonoidPresentation::Puiseux(p), Element::Rational(q)) => {
            Ok(engine::puiseux_length_set(p, q)?.is_some())
        }
        (MonoidPresentation::DirectSum(parts), Element::Tuple(xs)) => {
            for (p, part_x) in parts.iter().zip(xs) {
                if !contains(p, part_x)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        _ => Err(Error::TagMismatch),
    }
}

/// The n-fold sum of an element with itself (written multiplicatively, x^n).
pub fn element_power(x: &Element, n: u64) -> Element {
    match x {
        Element::Natural(v) => Element::Natural(v * n),
        Element::Vector(v) => Element::Vector(v.iter().map(|&c| c * n).collect()),
        Element::Rational(q) => Element::Rational(q * Rational::from_integer(n.into())),
        Element::Tuple(parts) => {
            Element::Tuple(parts.iter().map(|p| element_power(p, n)).collect())
        }
    }
}

/// Degree used by scan iteration order and direct-sum degree budgets.
pub(crate) fn scan_degree(m: &MonoidPresentation, x: &Element) -> u64 {
    match (m, x) {
        (MonoidPresentation::Numerical(_), Element::Natural(v)) => *v,
        (MonoidPresentation::Puiseux(p), Element::Rational(q)) => {
            let v = q * Rational::from_integer(p.clear_denominator.into());
            v.to_integer().to_u64().unwrap_or(u64::MAX)
        }
        (_, Element::Vector(v)) => v.iter().sum(),
        (MonoidPresentation::DirectSum(parts), Element::Tuple(xs)) => parts
            .iter()
            .zip(xs)
            .map(|(p, part_x)| scan_degree(p, part_x))
            .sum(),
        _ => 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio;

    #[test]
    fn numerical_keeps_minimal_generators() {
        let m = make_numerical(&[6, 9, 20]).unwrap();
        match &m {
            MonoidPresentation::Numerical(n) => assert_eq!(n.generators(), &[6, 9, 20]),
            _ => unreachable!(),
        }
    }

    #[test]
    fn numerical_drops_redundant_generators() {
        let m = make_numerical(&[4, 7, 8, 11]).unwrap();
        match &m {
            MonoidPresentation::Numerical(n) => assert_eq!(n.generators(), &[4, 7]),
            _ => unreachable!(),
        }
    }

    #[test]
    fn numerical_rejects_empty_and_non_coprime() {
        assert_eq!(make_numerical(&[]).unwrap_err(), Error::EmptyGenerators);
        assert_eq!(make_numerical(&[4, 6]).unwrap_err(), Error::NonCoprime(2));
    }

    #[test]
    fn numerical_membership() {
        let m = make_numerical(&[6, 9, 20]).unwrap();
        assert!(contains(&m, &Element::Natural(6)).unwrap());
        assert!(contains(&m, &Element::Natural(0)).unwrap());
        assert!(!contains(&m, &Element::Natural(43)).unwrap());
        // 43 against a brute-force sweep, independent of the DP above.
        let mut hit = false;
        for a in 0..=7 {
            for b in 0..=4 {
                for c in 0..=2 {
                    if 6 * a + 9 * b + 20 * c == 43 {
                        hit = true;
                    }
                }
            }
        }
        assert!(!hit);
    }

    #[test]
    fn numerical_membership_tag_mismatch() {
        let m = make_numerical(&[6, 9, 20]).unwrap();
        assert_eq!(
            contains(&m, &Element::Vector(vec![1, 2, 3])).unwrap_err(),
            Error::TagMismatch
        );
    }

    #[test]
    fn affine_collapses_duplicates_and_rejects_zero() {
        let m = make_affine(&[vec![1, 0], vec![1, 0], vec![0, 2]]).unwrap();
        match &m {
            MonoidPresentation::Affine(a) => {
                assert_eq!(a.generators(), &[vec![1, 0], vec![0, 2]]);
                assert_eq!(a.dimension(), 2);
            }
            _ => unreachable!(),
        }
        assert_eq!(
            make_affine(&[vec![0, 0]]).unwrap_err(),
            Error::ZeroVector
        );
        assert!(matches!(
            make_affine(&[vec![1, 0], vec![1, 0, 0]]).unwrap_err(),
            Error::DimensionMismatch { .. }
        ));
    }

    #[test]
    fn affine_membership() {
        let m = make_affine(&[vec![4, 0], vec![7, 0], vec![0, 3]]).unwrap();
        assert!(contains(&m, &Element::Vector(vec![11, 3])).unwrap());
        assert!(!contains(&m, &Element::Vector(vec![11, 2])).unwrap());
        assert!(!contains(&m, &Element::Vector(vec![5, 0])).unwrap());
    }

    #[test]
    fn presentation_derives_chain_grading() {
        // a1^3 = a2^4 = a3^6 balances with weights proportional to 1/3, 1/4, 1/6.
        let rels = vec![
            (vec![3, 0, 0], vec![0, 4, 0]),
            (vec![0, 4, 0], vec![0, 0, 6]),
        ];
        let m = make_presentation(3, &rels).unwrap();
        match &m {
            MonoidPresentation::Presented(p) => assert_eq!(p.weights(), &[4, 3, 2]),
            _ => unreachable!(),
        }
    }

    #[test]
    fn presentation_rejects_ungradable_and_malformed() {
        // Same atom on both sides with unequal exponents forces weight zero.
        let rels = vec![(vec![2, 0], vec![3, 0])];
        assert_eq!(
            make_presentation(2, &rels).unwrap_err(),
            Error::NoPositiveGrading
        );
        assert!(matches!(
            make_presentation(2, &[(vec![0, 0], vec![1, 0])]).unwrap_err(),
            Error::MalformedRelation(_)
        ));
        assert!(matches!(
            make_presentation(2, &[(vec![1, 0], vec![1, 0])]).unwrap_err(),
            Error::MalformedRelation(_)
        ));
    }

    #[test]
    fn presentation_general_relations_use_balance_solver() {
        // a1 + a2 = 2 a3 admits the all-ones grading.
        let rels = vec![(vec![1, 1, 0], vec![0, 0, 2])];
        let m = make_presentation(3, &rels).unwrap();
        match &m {
            MonoidPresentation::Presented(p) => {
                let w = p.weights();
                assert!(w.iter().all(|&x| x > 0));
                assert_eq!(w[0] + w[1], 2 * w[2]);
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn puiseux_accepts_atoms_and_rejects_non_atoms() {
        let m = make_puiseux(&[ratio(4, 3), ratio(8, 5)]).unwrap();
        match &m {
            MonoidPresentation::Puiseux(p) => {
                assert_eq!(p.clear_denominator(), 15);
                assert_eq!(p.cleared_degrees(), &[20, 24]);
            }
            _ => unreachable!(),
        }
        // 1 = (1/2) + (1/2), so 1 is not an atom beside 1/2.
        assert_eq!(
            make_puiseux(&[ratio(1, 2), ratio(1, 1)]).unwrap_err(),
            Error::NotAnAtom("1".into())
        );
    }

    #[test]
    fn puiseux_membership() {
        let m = make_puiseux(&[ratio(4, 3), ratio(8, 5)]).unwrap();
        assert!(contains(&m, &Element::Rational(ratio(8, 1))).unwrap());
        assert!(contains(&m, &Element::Rational(ratio(4, 3))).unwrap());
        assert!(!contains(&m, &Element::Rational(ratio(1, 7))).unwrap());
        assert!(!contains(&m, &Element::Rational(ratio(1, 3))).unwrap());
    }

    #[test]
    fn direct_sum_of_one_is_identity() {
        let m = make_numerical(&[4, 7]).unwrap();
        let s = direct_sum(vec![m.clone()]).unwrap();
        assert_eq!(s, m);
        assert!(direct_sum(vec![]).is_err());
    }

    #[test]
    fn direct_sum_membership_is_componentwise() {
        let a = make_numerical(&[4, 7]).unwrap();
        let b = make_numerical(&[6, 9, 20]).unwrap();
        let s = direct_sum(vec![a, b]).unwrap();
        let inside = Element::Tuple(vec![Element::Natural(11), Element::Natural(15)]);
        let outside = Element::Tuple(vec![Element::Natural(11), Element::Natural(43)]);
        assert!(contains(&s, &inside).unwrap());
        assert!(!contains(&s, &outside).unwrap());
    }

    #[test]
    fn element_power_scales_each_tag() {
        assert_eq!(element_power(&Element::Natural(60), 3), Element::Natural(180));
        assert_eq!(
            element_power(&Element::Vector(vec![2, 0, 1]), 2),
            Element::Vector(vec![4, 0, 2])
        );
        assert_eq!(
            element_power(&Element::Rational(ratio(8, 1)), 5),
            Element::Rational(ratio(40, 1))
        );
    }
}
