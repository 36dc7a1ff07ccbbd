//! Arithmetic invariants: length statistics, delta sets, length density
//! searches, Betti elements, catenary and tame degrees, and the asymptotic
//! behavior of length density along powers.

use crate::engine::{
    self, distance, factorizations_budgeted, graph_components, length_set, line_length_table,
    Budget, FactorizationSet, GraphPartition, LengthSet,
};
use crate::error::Error;
use crate::monoid::{element_power, Element, MonoidPresentation};
use crate::scan::scan_length_sets;
use crate::{Rational, Result};
use num_traits::One;

/// Summary statistics of one length set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthStats {
    pub size: u64,
    pub min: u64,
    pub max: u64,
    pub elasticity: Rational,
    pub delta: Vec<u64>,
    pub length_density: Option<Rational>,
}

/// Length density (|L| - 1) / (max L - min L); absent for singletons.
pub fn length_density(ls: &LengthSet) -> Option<Rational> {
    if ls.len() < 2 {
        return None;
    }
    Some(Rational::new(
        (ls.len() as u64 - 1).into(),
        (ls.max() - ls.min()).into(),
    ))
}

pub fn length_stats(ls: &LengthSet) -> LengthStats {
    let elasticity = if ls.min() == 0 {
        Rational::one()
    } else {
        Rational::new(ls.max().into(), ls.min().into())
    };
    LengthStats {
        size: ls.len() as u64,
        min: ls.min(),
        max: ls.max(),
        elasticity,
        delta: ls.delta(),
        length_density: length_density(ls),
    }
}

/// Union of the delta sets of all elements up to the bound.
pub fn delta_scan(m: &MonoidPresentation, bound: u64, budget: u64) -> Result<Vec<u64>> {
    let mut union: Vec<u64> = Vec::new();
    scan_length_sets(m, bound, budget, &mut |_, ls| {
        union.extend(ls.delta());
    })?;
    union.sort_unstable();
    union.dedup();
    Ok(union)
}

/// Result of a bounded minimum length density search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LdSearchReport {
    pub bound: u64,
    /// Least length density among scanned elements with at least two
    /// lengths.
    pub minimum_ld: Rational,
    /// First scanned element attaining the minimum.
    pub witness: Element,
    pub witness_lengths: LengthSet,
    /// Largest single gap over all scanned length sets.
    pub max_delta_seen: u64,
    /// 1 / max_delta_seen: no element in the scan can go lower.
    pub lower_bound_certificate: Rational,
    /// True when the minimum meets the certificate, i.e. the infimum over
    /// the scanned range is already attained there.
    pub accepted_within_scan: bool,
}

/// Scans for the minimum length density. Errors with `NoLdElements` when
/// no scanned element has two or more lengths.
pub fn ld_search(m: &MonoidPresentation, bound: u64, budget: u64) -> Result<LdSearchReport> {
    let mut best: Option<(Rational, Element, LengthSet)> = None;
    let mut max_delta = 0u64;
    scan_length_sets(m, bound, budget, &mut |el, ls| {
        if let Some(d) = ls.delta().last() {
            max_delta = max_delta.max(*d);
        }
        if let Some(ld) = length_density(ls) {
            let better = match &best {
                None => true,
                Some((b, _, _)) => ld < *b,
            };
            if better {
                best = Some((ld, el.clone(), ls.clone()));
            }
        }
    })?;
    let (minimum_ld, witness, witness_lengths) = best.ok_or(Error::NoLdElements)?;
    let lower_bound_certificate = Rational::new(1.into(), max_delta.into());
    let accepted_within_scan = minimum_ld == lower_bound_certificate;
    Ok(LdSearchReport {
        bound,
        minimum_ld,
        witness,
        witness_lengths,
        max_delta_seen: max_delta,
        lower_bound_certificate,
        accepted_within_scan,
    })
}

/// A Betti element: its factorization graph is disconnected.
#[derive(Debug, Clone)]
pub struct BettiElement {
    pub element: Element,
    pub set: FactorizationSet,
    pub partition: GraphPartition,
}

/// All Betti elements up to the bound, in scan order.
pub fn betti_scan(m: &MonoidPresentation, bound: u64, budget: u64) -> Result<Vec<BettiElement>> {
    let mut shared = Budget::new(budget);
    let mut elements: Vec<Element> = Vec::new();
    scan_length_sets(m, bound, budget, &mut |el, _| {
        elements.push(el.clone());
    })?;
    let mut out = Vec::new();
    for el in elements {
        let set = factorizations_budgeted(m, &el, &mut shared)?;
        if !set.complete {
            return Err(shared.exceeded());
        }
        if set.len() < 2 {
            continue;
        }
        let partition = graph_components(&set)?;
        if !partition.is_connected() {
            out.push(BettiElement {
                element: el,
                set,
                partition,
            });
        }
    }
    Ok(out)
}

/// Outcome of testing whether the scanned minimum length density is
/// attained at a Betti element.
#[derive(Debug, Clone)]
pub struct BettiLdReport {
    pub search: LdSearchReport,
    /// Betti elements up to the bound, each with its length density.
    pub betti: Vec<(BettiElement, Option<Rational>)>,
    /// True when some Betti element with at least two lengths attains the
    /// scanned minimum.
    pub attained_at_betti: bool,
    pub witness: Option<Element>,
}

pub fn betti_ld_test(m: &MonoidPresentation, bound: u64, budget: u64) -> Result<BettiLdReport> {
    let search = ld_search(m, bound, budget)?;
    let found = betti_scan(m, bound, budget)?;
    let mut betti = Vec::with_capacity(found.len());
    let mut witness = None;
    for b in found {
        let ld = b.set.lengths().as_ref().and_then(length_density);
        if witness.is_none() && ld.as_ref() == Some(&search.minimum_ld) {
            witness = Some(b.element.clone());
        }
        betti.push((b, ld));
    }
    Ok(BettiLdReport {
        search,
        betti,
        attained_at_betti: witness.is_some(),
        witness,
    })
}

/// Catenary degree of an element: least N such that any two of its
/// factorizations are linked by a chain with steps of distance at most N.
pub fn catenary_degree(m: &MonoidPresentation, x: &Element, budget: u64) -> Result<u64> {
    let set = engine::factorizations(m, x, budget)?;
    set.require_complete()?;
    if set.is_empty() {
        return Err(Error::NotInMonoid(x.to_string()));
    }
    engine::catenary_degree_of_set(&set)
}

/// Tame degree of `a` relative to the factorization `x`, with the
/// convention that a raw value of 1 is reported as 2 (the next admissible
/// degree) and flagged.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TameDegree {
    pub value: u64,
    pub adjusted: bool,
}

pub fn tame_degree(
    m: &MonoidPresentation,
    a: &Element,
    x: &[u64],
    budget: u64,
) -> Result<TameDegree> {
    if x.len() != m.atom_count() {
        return Err(Error::IndexSpaceMismatch(m.atom_count(), x.len()));
    }
    let set = engine::factorizations(m, a, budget)?;
    set.require_complete()?;
    if set.is_empty() {
        return Err(Error::NotInMonoid(a.to_string()));
    }
    let with_x: Vec<&Vec<u64>> = set
        .factorizations
        .iter()
        .filter(|z| z.iter().zip(x).all(|(&zc, &xc)| zc >= xc))
        .collect();
    if with_x.is_empty() {
        return Ok(TameDegree {
            value: 0,
            adjusted: false,
        });
    }
    let raw = set
        .factorizations
        .iter()
        .map(|z| {
            with_x
                .iter()
                .map(|zp| distance(z, zp))
                .min()
                .expect("nonempty candidate set")
        })
        .max()
        .expect("nonempty factorization set");
    Ok(tame_from_raw(raw))
}

/// Maps the raw max-min distance to the reported tame degree: distances of
/// exactly 1 cannot occur between distinct factorizations of one element,
/// so a raw 1 is rounded up to the least admissible value 2.
fn tame_from_raw(raw: u64) -> TameDegree {
    if raw == 1 {
        TameDegree {
            value: 2,
            adjusted: true,
        }
    } else {
        TameDegree {
            value: raw,
            adjusted: false,
        }
    }
}

/// Length densities of the powers x^n, their predicted limit, and a
/// convergence verdict.
#[derive(Debug, Clone)]
pub struct AsymptoticReport {
    pub base: Element,
    pub n_max: u64,
    pub tolerance: Rational,
    /// (n, ld(x^n)); the density is absent while L(x^n) is a singleton.
    pub terms: Vec<(u64, Option<Rational>)>,
    /// Union of observed delta sets feeding the prediction.
    pub delta_pool: Vec<u64>,
    /// True when the pool only draws on the powers themselves; numerical
    /// semigroups also pool every divisor of x^n_max.
    pub delta_pool_partial: bool,
    /// 1 / min(delta_pool).
    pub predicted_limit: Option<Rational>,
    /// True when the trailing quarter of the terms all sit within the
    /// tolerance of the predicted limit.
    pub converged: bool,
}

pub fn asymptotic_ld(
    m: &MonoidPresentation,
    x: &Element,
    n_max: u64,
    tolerance: &Rational,
) -> Result<AsymptoticReport> {
    if n_max < 1 {
        return Err(Error::InvalidIndex(n_max));
    }
    let mut terms = Vec::with_capacity(n_max as usize);
    let mut pool: Vec<u64> = Vec::new();
    for n in 1..=n_max {
        let ls = length_set(m, &element_power(x, n))?;
        pool.extend(ls.delta());
        terms.push((n, length_density(&ls)));
    }

    let mut delta_pool_partial = true;
    if let (MonoidPresentation::Numerical(ns), Element::Natural(v)) = (m, x) {
        // Every divisor of x^n_max contributes its gaps: y divides z when
        // both y and z - y lie in the semigroup.
        delta_pool_partial = false;
        let top = v * n_max;
        let gens = ns.generators();
        let table = line_length_table(gens, &vec![1; gens.len()], top)?;
        for y in 1..top {
            if !table[y as usize].is_empty() && !table[(top - y) as usize].is_empty() {
                if let Some(ls) = LengthSet::from_bits(0, &table[y as usize]) {
                    pool.extend(ls.delta());
                }
            }
        }
    }
    pool.sort_unstable();
    pool.dedup();

    let predicted_limit = pool
        .first()
        .map(|&d| Rational::new(1.into(), d.into()));
    let tail = n_max.div_ceil(4).max(1) as usize;
    let converged = match &predicted_limit {
        None => false,
        Some(limit) => terms.iter().rev().take(tail).all(|(_, ld)| match ld {
            None => false,
            Some(v) => {
                let diff = if v >= limit { v - limit } else { limit - v };
                diff <= *tolerance
            }
        }),
    };

    Ok(AsymptoticReport {
        base: x.clone(),
        n_max,
        tolerance: tolerance.clone(),
        terms,
        delta_pool: pool,
        delta_pool_partial,
        predicted_limit,
        converged,
    })
}

/// Exact two-sided bound for ld(x^n): with d the eventual minimal gap and
/// T a tameness bound, 1/d - 2T/(n d^2) <= ld(x^n) <= 1/d.
pub fn sandwich_check(
    m: &MonoidPresentation,
    x: &Element,
    n: u64,
    d: u64,
    t: u64,
) -> Result<bool> {
    if n < 1 || d < 1 {
        return Err(Error::InvalidIndex(n.min(d)));
    }
    let ls = length_set(m, &element_power(x, n))?;
    let Some(ld) = length_density(&ls) else {
        return Err(Error::NoLdElements);
    };
    let upper = Rational::new(1.into(), d.into());
    let lower = &upper - Rational::new((2 * t).into(), (n * d * d).into());
    Ok(lower <= ld && ld <= upper)
}

/// First exponent n <= n_cap with d in the delta set of x^n.
pub fn default_psi(
    m: &MonoidPresentation,
    x: &Element,
    d: u64,
    n_cap: u64,
) -> Result<Option<u64>> {
    if d < 1 {
        return Err(Error::InvalidIndex(d));
    }
    for n in 1..=n_cap {
        let ls = length_set(m, &element_power(x, n))?;
        if ls.delta().contains(&d) {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::DEFAULT_BUDGET;
    use crate::monoid::make_numerical;
    use crate::ratio;

    #[test]
    fn stats_of_known_length_sets() {
        let ls = LengthSet::from_sorted(vec![3, 7, 8, 9, 10]);
        let st = length_stats(&ls);
        assert_eq!(st.size, 5);
        assert_eq!(st.elasticity, ratio(10, 3));
        assert_eq!(st.delta, vec![1, 4]);
        assert_eq!(st.length_density, Some(ratio(4, 7)));

        let st = length_stats(&LengthSet::from_sorted(vec![4, 7]));
        assert_eq!(st.elasticity, ratio(7, 4));
        assert_eq!(st.delta, vec![3]);
        assert_eq!(st.length_density, Some(ratio(1, 3)));

        let st = length_stats(&LengthSet::from_sorted(vec![5]));
        assert_eq!(st.elasticity, ratio(1, 1));
        assert!(st.delta.is_empty());
        assert_eq!(st.length_density, None);

        let st = length_stats(&LengthSet::from_sorted(vec![0]));
        assert_eq!(st.elasticity, ratio(1, 1));
    }

    #[test]
    fn delta_scan_of_reference_semigroups() {
        let m = make_numerical(&[6, 9, 20]).unwrap();
        assert_eq!(delta_scan(&m, 400, DEFAULT_BUDGET).unwrap(), vec![1, 2, 3, 4]);
        let m = make_numerical(&[4, 7]).unwrap();
        assert_eq!(delta_scan(&m, 200, DEFAULT_BUDGET).unwrap(), vec![3]);
        let m = make_numerical(&[5, 6, 7, 8, 9]).unwrap();
        assert_eq!(delta_scan(&m, 200, DEFAULT_BUDGET).unwrap(), vec![1]);
    }

    #[test]
    fn ld_search_finds_the_reference_minima() {
        let m = make_numerical(&[6, 9, 20]).unwrap();
        let r = ld_search(&m, 400, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.minimum_ld, ratio(4, 7));
        assert_eq!(r.witness, Element::Natural(60));
        assert_eq!(r.max_delta_seen, 4);
        assert_eq!(r.lower_bound_certificate, ratio(1, 4));
        assert!(!r.accepted_within_scan);

        let m = make_numerical(&[4, 7]).unwrap();
        let r = ld_search(&m, 200, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.minimum_ld, ratio(1, 3));
        assert_eq!(r.witness, Element::Natural(28));
        assert!(r.accepted_within_scan);
    }

    #[test]
    fn ld_search_needs_multi_length_elements() {
        let m = make_numerical(&[1]).unwrap();
        assert_eq!(
            ld_search(&m, 10, DEFAULT_BUDGET).unwrap_err(),
            Error::NoLdElements
        );
    }

    #[test]
    fn betti_scan_of_reference_semigroups() {
        let m = make_numerical(&[6, 9, 20]).unwrap();
        let betti = betti_scan(&m, 100, DEFAULT_BUDGET).unwrap();
        let els: Vec<&Element> = betti.iter().map(|b| &b.element).collect();
        assert_eq!(els, vec![&Element::Natural(18), &Element::Natural(60)]);

        let m = make_numerical(&[4, 7]).unwrap();
        let betti = betti_scan(&m, 100, DEFAULT_BUDGET).unwrap();
        assert_eq!(betti.len(), 1);
        assert_eq!(betti[0].element, Element::Natural(28));
        assert_eq!(betti[0].partition.blocks.len(), 2);
    }

    #[test]
    fn betti_ld_attainment_differs_between_examples() {
        let m = make_numerical(&[4, 7]).unwrap();
        let r = betti_ld_test(&m, 100, DEFAULT_BUDGET).unwrap();
        assert!(r.attained_at_betti);
        assert_eq!(r.witness, Some(Element::Natural(28)));

        let m = make_numerical(&[5, 6, 7, 8, 9]).unwrap();
        let r = betti_ld_test(&m, 200, DEFAULT_BUDGET).unwrap();
        assert!(r.attained_at_betti);
    }

    #[test]
    fn catenary_degree_of_sixty() {
        let m = make_numerical(&[6, 9, 20]).unwrap();
        assert_eq!(
            catenary_degree(&m, &Element::Natural(60), DEFAULT_BUDGET).unwrap(),
            7
        );
        assert_eq!(
            catenary_degree(&m, &Element::Natural(6), DEFAULT_BUDGET).unwrap(),
            0
        );
        assert!(catenary_degree(&m, &Element::Natural(43), DEFAULT_BUDGET).is_err());
    }

    #[test]
    fn tame_degree_against_definition() {
        let m = make_numerical(&[6, 9, 20]).unwrap();
        // Factorizations of 60 containing the atom 20: only (0,0,3). The
        // farthest factorization is (10,0,0) at distance 10.
        let t = tame_degree(&m, &Element::Natural(60), &[0, 0, 1], DEFAULT_BUDGET).unwrap();
        assert_eq!(
            t,
            TameDegree {
                value: 10,
                adjusted: false
            }
        );
        // 18 has no factorization through 20.
        let t = tame_degree(&m, &Element::Natural(18), &[0, 0, 1], DEFAULT_BUDGET).unwrap();
        assert_eq!(t.value, 0);
        // An atom relative to itself.
        let t = tame_degree(&m, &Element::Natural(6), &[1, 0, 0], DEFAULT_BUDGET).unwrap();
        assert_eq!(t.value, 0);
    }

    #[test]
    fn tame_adjustment_rounds_one_up() {
        assert_eq!(
            tame_from_raw(1),
            TameDegree {
                value: 2,
                adjusted: true
            }
        );
        assert_eq!(
            tame_from_raw(0),
            TameDegree {
                value: 0,
                adjusted: false
            }
        );
        assert_eq!(
            tame_from_raw(7),
            TameDegree {
                value: 7,
                adjusted: false
            }
        );
    }

    #[test]
    fn asymptotic_terms_follow_the_known_formula() {
        let m = make_numerical(&[6, 9, 20]).unwrap();
        let r = asymptotic_ld(&m, &Element::Natural(60), 10, &ratio(1, 10)).unwrap();
        for (n, ld) in &r.terms {
            // ld(60 n) = (7n - 3) / (7n).
            assert_eq!(
                ld.clone().unwrap(),
                ratio((7 * n - 3) as i64, (7 * n) as i64),
                "n = {n}"
            );
        }
        assert_eq!(r.predicted_limit, Some(ratio(1, 1)));
        assert!(!r.delta_pool_partial);
        assert!(r.converged);
        let strict = asymptotic_ld(&m, &Element::Natural(60), 10, &ratio(1, 1000)).unwrap();
        assert!(!strict.converged);
    }

    #[test]
    fn sandwich_bounds_hold_for_four_seven() {
        let m = make_numerical(&[4, 7]).unwrap();
        // ld(28 n) = 1/3 exactly, so the band around 1/3 always contains it.
        for n in [1u64, 2, 5] {
            assert!(sandwich_check(&m, &Element::Natural(28), n, 3, 7).unwrap());
        }
        // A wrong gap puts the upper bound below the true value.
        assert!(!sandwich_check(&m, &Element::Natural(28), 5, 4, 7).unwrap());
    }

    #[test]
    fn default_psi_finds_first_gap() {
        let m = make_numerical(&[6, 9, 20]).unwrap();
        assert_eq!(
            default_psi(&m, &Element::Natural(60), 4, 10).unwrap(),
            Some(1)
        );
        assert_eq!(
            default_psi(&m, &Element::Natural(60), 5, 5).unwrap(),
            None
        );
    }
}
