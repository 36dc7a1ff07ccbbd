//! Bounded scans over the elements of a monoid.
//!
//! Each presentation kind has a natural degree: the value for numerical
//! semigroups, the cleared value for Puiseux monoids, the coordinate sum
//! for vector kinds, word length for presented monoids, and the degree sum
//! for direct sums. A scan visits every element of degree between 1 and
//! the bound, in ascending degree (lexicographic within a degree), and
//! hands the visitor the element with its length set.
//!
//! Numerical and vector scans share one dynamic program across all visited
//! elements, so a scan costs barely more than a single length-set query at
//! the same bound.

use crate::engine::{
    line_length_table, word_closure_inner, Budget, LengthBits, LengthSet, LineProblem,
};
use crate::error::Error;
use crate::monoid::{scan_degree, Element, FinitePresentation, MonoidPresentation};
use crate::{Rational, Result};
use std::collections::{HashMap, HashSet};

/// Largest scan bound for the vector kinds; cell keys are stored as u16
/// coordinates.
const MAX_VECTOR_BOUND: u64 = 60_000;

/// Visits `(element, length_set)` for every element of degree 1..=bound.
pub fn scan_length_sets(
    m: &MonoidPresentation,
    bound: u64,
    budget: u64,
    visit: &mut dyn FnMut(&Element, &LengthSet),
) -> Result<()> {
    let mut b = Budget::new(budget);
    scan_stream(m, bound, &mut b, &mut |el, ls| visit(&el, &ls))
}

fn scan_stream(
    m: &MonoidPresentation,
    bound: u64,
    budget: &mut Budget,
    f: &mut dyn FnMut(Element, LengthSet),
) -> Result<()> {
    match m {
        MonoidPresentation::Numerical(n) => {
            let table = line_length_table(n.generators(), &vec![1; n.generators().len()], bound)?;
            for v in 1..=bound {
                if !budget.try_charge(1) {
                    return Err(budget.exceeded());
                }
                if let Some(ls) = LengthSet::from_bits(0, &table[v as usize]) {
                    f(Element::Natural(v), ls);
                }
            }
            Ok(())
        }
        MonoidPresentation::Puiseux(p) => {
            let denom = Rational::from_integer(p.clear_denominator().into());
            for v in 1..=bound {
                if !budget.try_charge(1) {
                    return Err(budget.exceeded());
                }
                let x = Rational::from_integer(v.into()) / &denom;
                if let Some(lp) = LineProblem::for_puiseux(p, &x)? {
                    if let Some(ls) = lp.lengths()? {
                        f(Element::Rational(x), ls);
                    }
                }
            }
            Ok(())
        }
        MonoidPresentation::Affine(_) | MonoidPresentation::Block(_) => {
            graded_vector_scan(m, bound, budget, f)
        }
        MonoidPresentation::Presented(p) => presented_scan(p, bound, budget, f),
        MonoidPresentation::DirectSum(parts) => direct_sum_scan(m, parts, bound, budget, f),
    }
}

/// Enumerates vectors of coordinate sum `s` in lexicographic order.
fn compositions(
    cur: &mut Vec<u64>,
    pos: usize,
    rem: u64,
    f: &mut dyn FnMut(&[u64]) -> Result<()>,
) -> Result<()> {
    if pos + 1 == cur.len() {
        cur[pos] = rem;
        f(cur)?;
        cur[pos] = 0;
        return Ok(());
    }
    for c in 0..=rem {
        cur[pos] = c;
        compositions(cur, pos + 1, rem - c, f)?;
    }
    cur[pos] = 0;
    Ok(())
}

fn support_mask(v: &[u64]) -> u128 {
    let mut mask = 0u128;
    for (j, &c) in v.iter().enumerate() {
        if c > 0 && j < 128 {
            mask |= 1 << j;
        }
    }
    mask
}

/// Shared DP over all candidate cells of the affine or block monoid,
/// graded by coordinate sum. Block monoids prefilter candidates with the
/// zero-sum test, which rules out most cells before any table work.
fn graded_vector_scan(
    m: &MonoidPresentation,
    bound: u64,
    budget: &mut Budget,
    f: &mut dyn FnMut(Element, LengthSet),
) -> Result<()> {
    if bound > MAX_VECTOR_BOUND {
        return Err(Error::InvalidSpec(format!(
            "vector scan bound {bound} exceeds supported {MAX_VECTOR_BOUND}"
        )));
    }
    let (gens, dim) = m.vector_generators().unwrap();
    let block = match m {
        MonoidPresentation::Block(b) => Some(b),
        _ => None,
    };
    let gen_masks: Vec<u128> = gens.iter().map(|g| support_mask(g)).collect();

    let mut table: HashMap<Vec<u16>, LengthBits> = HashMap::new();
    table.insert(vec![0; dim], LengthBits::singleton(0));

    let mut cur = vec![0u64; dim];
    let mut pull = vec![0u16; dim];
    for s in 1..=bound {
        compositions(&mut cur, 0, s, &mut |cand| {
            if !budget.try_charge(1) {
                return Err(budget.exceeded());
            }
            if let Some(b) = block {
                if !b.is_zero_sum(cand) {
                    return Ok(());
                }
            }
            let cand_mask = support_mask(cand);
            let mut bits = LengthBits::new();
            for (g, &g_mask) in gens.iter().zip(&gen_masks) {
                if (g_mask & !cand_mask) != 0 {
                    continue;
                }
                if !g.iter().zip(cand).all(|(&gc, &vc)| gc <= vc) {
                    continue;
                }
                for j in 0..dim {
                    pull[j] = (cand[j] - g[j]) as u16;
                }
                if let Some(prev) = table.get(&pull[..]) {
                    bits.or_shifted(prev, 1);
                }
            }
            if !bits.is_empty() {
                let key: Vec<u16> = cand.iter().map(|&c| c as u16).collect();
                let ls = LengthSet::from_bits(0, &bits).unwrap();
                table.insert(key, bits);
                f(Element::Vector(cand.to_vec()), ls);
            }
            Ok(())
        })?;
    }
    Ok(())
}

/// Scans congruence classes of a presented monoid by enumerating words in
/// graded lexicographic order. The whole class is computed the first time
/// any of its words appears; the class's least word labels the element.
fn presented_scan(
    p: &FinitePresentation,
    bound: u64,
    budget: &mut Budget,
    f: &mut dyn FnMut(Element, LengthSet),
) -> Result<()> {
    let dim = p.atom_count();
    let mut visited: HashSet<Vec<u64>> = HashSet::new();
    let mut cur = vec![0u64; dim];
    for s in 1..=bound {
        compositions(&mut cur, 0, s, &mut |word| {
            if !budget.try_charge(1) {
                return Err(budget.exceeded());
            }
            if visited.contains(word) {
                return Ok(());
            }
            let (class, complete) = word_closure_inner(p, word, budget)?;
            if !complete {
                return Err(budget.exceeded());
            }
            let canonical = class[0].clone();
            let mut lengths: Vec<u64> = class.iter().map(|w| w.iter().sum()).collect();
            lengths.sort_unstable();
            lengths.dedup();
            for w in class {
                visited.insert(w);
            }
            f(
                Element::Vector(canonical),
                LengthSet::from_sorted(lengths),
            );
            Ok(())
        })?;
    }
    Ok(())
}

/// Scans a direct sum by materializing each component's items (identity
/// included) and walking the product with a shared degree bound. Tuples
/// that are the identity in every coordinate are skipped.
fn direct_sum_scan(
    m: &MonoidPresentation,
    parts: &[MonoidPresentation],
    bound: u64,
    budget: &mut Budget,
    f: &mut dyn FnMut(Element, LengthSet),
) -> Result<()> {
    let _ = m;
    let mut component_items: Vec<Vec<(Element, LengthSet, u64)>> = Vec::new();
    for part in parts {
        let mut items = vec![(
            part.identity(),
            LengthSet::from_sorted(vec![0]),
            0u64,
        )];
        scan_stream(part, bound, budget, &mut |el, ls| {
            let d = scan_degree(part, &el);
            items.push((el, ls, d));
        })?;
        component_items.push(items);
    }

    fn product(
        items: &[Vec<(Element, LengthSet, u64)>],
        idx: usize,
        rem: u64,
        all_identity: bool,
        elems: &mut Vec<Element>,
        lengths: Option<LengthSet>,
        budget: &mut Budget,
        f: &mut dyn FnMut(Element, LengthSet),
    ) -> Result<()> {
        if idx == items.len() {
            if all_identity {
                return Ok(());
            }
            if !budget.try_charge(1) {
                return Err(budget.exceeded());
            }
            f(Element::Tuple(elems.clone()), lengths.unwrap());
            return Ok(());
        }
        for (i, (el, ls, d)) in items[idx].iter().enumerate() {
            if *d > rem {
                continue;
            }
            let next_lengths = match &lengths {
                None => Some(ls.clone()),
                Some(prev) => Some(prev.set_sum(ls)),
            };
            elems.push(el.clone());
            product(
                items,
                idx + 1,
                rem - d,
                all_identity && i == 0,
                elems,
                next_lengths,
                budget,
                f,
            )?;
            elems.pop();
        }
        Ok(())
    }

    let mut elems = Vec::with_capacity(parts.len());
    product(
        &component_items,
        0,
        bound,
        true,
        &mut elems,
        None,
        budget,
        f,
    )
}
