//! Parametric families with known factorization behavior, used to probe
//! length densities near their limits.
//!
//! Three families are built here: the two-slope family M(a,b,c) whose
//! length densities approach c from above, power chains a_1^3 = a_2^4 =
//! ... = a_i^(2i), and the numerical family <2i, 3i, 6i+1> whose minimal
//! length density 1/2 is attained arbitrarily late. A fourth, fixed pair
//! of Puiseux monoids exhibits powers x^n whose length densities keep
//! dipping under every candidate limit.

use crate::engine::{self, LengthSet};
use crate::error::Error;
use crate::monoid::{self, Element, MonoidPresentation};
use crate::{ratio, Rational, Result};
use num_traits::{One, Signed};

/// Parameters of the two-slope family: integers 1 <= a < b and a rational
/// slope 0 < c <= 1, truncated at chain index `max_index`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MabcSpec {
    pub a: u64,
    pub b: u64,
    pub c: Rational,
    pub max_index: u64,
}

/// The truncated two-slope monoid together with its atom bookkeeping.
///
/// For each index i the atoms are q_(i,j) for j running over
/// {ia, ia+1, ..., ia+k(i)} and j = ib, where k(i) = ceil(i c (b-a));
/// consecutive atoms in that list are related by q^j = q'^(j'). The common
/// element x_i = q_(i,ia)^(ia) then has length set exactly the j-list.
#[derive(Debug, Clone)]
pub struct MabcFamily {
    pub spec: MabcSpec,
    pub monoid: MonoidPresentation,
    j_lists: Vec<Vec<u64>>,
    offsets: Vec<usize>,
}

impl MabcFamily {
    pub fn new(spec: MabcSpec) -> Result<MabcFamily> {
        if spec.a < 1 || spec.a >= spec.b {
            return Err(Error::InvalidSpec(
                "two-slope family needs integers 1 <= a < b".into(),
            ));
        }
        if !spec.c.is_positive() || spec.c > Rational::one() {
            return Err(Error::InvalidSpec(
                "two-slope family needs a slope 0 < c <= 1".into(),
            ));
        }
        if spec.max_index < 1 {
            return Err(Error::InvalidSpec(
                "two-slope family needs at least one chain".into(),
            ));
        }

        let mut j_lists = Vec::new();
        let mut offsets = Vec::new();
        let mut labels = Vec::new();
        let mut atom_count = 0usize;
        for i in 1..=spec.max_index {
            let k = k_of(&spec, i);
            let mut js: Vec<u64> = (spec.a * i..=spec.a * i + k).collect();
            if *js.last().unwrap() != spec.b * i {
                js.push(spec.b * i);
            }
            offsets.push(atom_count);
            atom_count += js.len();
            for &j in &js {
                labels.push(format!("q[{i},{j}]"));
            }
            j_lists.push(js);
        }

        let mut relations = Vec::new();
        for (chain, js) in j_lists.iter().enumerate() {
            for w in js.windows(2) {
                let base = offsets[chain] + js.iter().position(|&x| x == w[0]).unwrap();
                let mut lhs = vec![0u64; atom_count];
                let mut rhs = vec![0u64; atom_count];
                lhs[base] = w[0];
                rhs[base + 1] = w[1];
                relations.push((lhs, rhs));
            }
        }

        let mut monoid = monoid::make_presentation(atom_count, &relations)?;
        if let MonoidPresentation::Presented(p) = &mut monoid {
            p.set_atom_labels(labels);
        }
        Ok(MabcFamily {
            spec,
            monoid,
            j_lists,
            offsets,
        })
    }

    pub fn k(&self, i: u64) -> Result<u64> {
        self.check_index(i)?;
        Ok(k_of(&self.spec, i))
    }

    pub fn j_list(&self, i: u64) -> Result<&[u64]> {
        self.check_index(i)?;
        Ok(&self.j_lists[i as usize - 1])
    }

    fn check_index(&self, i: u64) -> Result<()> {
        if i < 1 || i > self.spec.max_index {
            return Err(Error::InvalidIndex(i));
        }
        Ok(())
    }

    /// The word q_(i,ia)^(t ia), a canonical representative of x_i^t.
    pub fn power_element(&self, i: u64, t: u64) -> Result<Element> {
        self.check_index(i)?;
        if t < 1 {
            return Err(Error::InvalidIndex(t));
        }
        let mut word = vec![0u64; self.monoid.atom_count()];
        word[self.offsets[i as usize - 1]] = t * self.spec.a * i;
        Ok(Element::Vector(word))
    }

    /// Closed-form length set of x_i^t: the t-fold sumset of the j-list.
    ///
    /// Rewrites move whole powers q^j at a time, so each factorization of
    /// x_i^t splits as t factorizations of x_i, whose lengths are exactly
    /// the listed j values.
    pub fn power_lengths_closed(&self, i: u64, t: u64) -> Result<LengthSet> {
        self.check_index(i)?;
        if t < 1 {
            return Err(Error::InvalidIndex(t));
        }
        let base = LengthSet::from_sorted(self.j_list(i)?.to_vec());
        let mut acc = base.clone();
        for _ in 1..t {
            acc = acc.set_sum(&base);
        }
        Ok(acc)
    }
}

fn k_of(spec: &MabcSpec, i: u64) -> u64 {
    use num_traits::ToPrimitive;
    let growth = Rational::from_integer((i * (spec.b - spec.a)).into()) * &spec.c;
    growth.ceil().to_integer().to_u64().expect("k(i) fits u64")
}

/// The power chain a_1^3 = a_2^4 = a_3^6 = ... = a_i^(2i).
#[derive(Debug, Clone)]
pub struct ChainFamily {
    pub monoid: MonoidPresentation,
    exponents: Vec<u64>,
}

impl ChainFamily {
    pub fn new(i: u64) -> Result<ChainFamily> {
        if i < 1 {
            return Err(Error::InvalidIndex(i));
        }
        let exponents: Vec<u64> = (1..=i).map(|j| if j == 1 { 3 } else { 2 * j }).collect();
        let n = exponents.len();
        let mut relations = Vec::new();
        for j in 0..n.saturating_sub(1) {
            let mut lhs = vec![0u64; n];
            let mut rhs = vec![0u64; n];
            lhs[j] = exponents[j];
            rhs[j + 1] = exponents[j + 1];
            relations.push((lhs, rhs));
        }
        let monoid = monoid::make_presentation(n, &relations)?;
        Ok(ChainFamily { monoid, exponents })
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    /// The word a_1^(3t), representing the common power x^t.
    pub fn power_element(&self, t: u64) -> Result<Element> {
        if t < 1 {
            return Err(Error::InvalidIndex(t));
        }
        let mut word = vec![0u64; self.exponents.len()];
        word[0] = 3 * t;
        Ok(Element::Vector(word))
    }

    /// Closed-form length set of x^t: the t-fold sumset of the exponents.
    pub fn power_lengths_closed(&self, t: u64) -> Result<LengthSet> {
        if t < 1 {
            return Err(Error::InvalidIndex(t));
        }
        let base = LengthSet::from_sorted(self.exponents.clone());
        let mut acc = base.clone();
        for _ in 1..t {
            acc = acc.set_sum(&base);
        }
        Ok(acc)
    }
}

/// The numerical semigroup <2i, 3i, 6i+1> for i >= 2. Its minimal length
/// density 1/2 is first attained at the element i(6i+1), so the witness
/// escapes every fixed bound as i grows.
pub fn infinite_delta_member(i: u64) -> Result<MonoidPresentation> {
    if i < 2 {
        return Err(Error::InvalidIndex(i));
    }
    monoid::make_numerical(&[2 * i, 3 * i, 6 * i + 1])
}

/// The expected first witness of the minimal length density in
/// `infinite_delta_member(i)`.
pub fn infinite_delta_witness(i: u64) -> u64 {
    i * (6 * i + 1)
}

/// Atoms of the fixed Puiseux monoids whose asymptotic length density
/// disagrees with every finite-power prediction. Level 0 has three atoms;
/// level 1 appends a fourth whose huge prime denominator delays the dip
/// past any small scan.
pub fn noasym_atoms(level: u64) -> Result<Vec<Rational>> {
    match level {
        0 => Ok(vec![ratio(4, 3), ratio(8, 5), ratio(800, 1201)]),
        1 => Ok(vec![
            ratio(4, 3),
            ratio(8, 5),
            ratio(800, 1201),
            ratio(23208, 72073),
        ]),
        _ => Err(Error::InvalidLevel(level)),
    }
}

pub fn noasym_monoid(level: u64) -> Result<MonoidPresentation> {
    monoid::make_puiseux(&noasym_atoms(level)?)
}

/// Length densities of the powers 8n in the level's monoid.
pub fn noasym_series(level: u64, ns: &[u64]) -> Result<Vec<(u64, Option<Rational>)>> {
    let m = noasym_monoid(level)?;
    let mut out = Vec::with_capacity(ns.len());
    for &n in ns {
        if n < 1 {
            return Err(Error::InvalidIndex(n));
        }
        let x = Element::Rational(ratio(8, 1) * Rational::from_integer(n.into()));
        let ls = engine::length_set(&m, &x)?;
        out.push((n, crate::invariants::length_density(&ls)));
    }
    Ok(out)
}
