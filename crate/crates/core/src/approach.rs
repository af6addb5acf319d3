//! Finite approach spaces.
//!
//! An approach distance assigns to each point `x` and subset `A` a value
//! `δ(x, A)` subject to (A1) `δ(x,{x}) = 0`, (A2) `δ(x,∅) = ∞`,
//! (A3) `δ(x, A∪B) = min{δ(x,A), δ(x,B)}` and
//! (A4) `δ(x,A) ≤ δ(x,B) + sup_{b∈B} δ(b,A)`.
//!
//! On a finite carrier (A3) forces `δ(x,A) = min_{a∈A} δ(x,{a})`, so a
//! validated [`FiniteApproach`] keeps only its point-to-singleton matrix.
//! Full tables ([`DeltaTable`]) exist so that inputs violating the collapse
//! are detected instead of silently repaired.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::extarith::{inf_owned, sup_owned, ExtVal};
use crate::space::FiniteSpace;
use crate::subset::{Subset, MAX_TABLE_POINTS};

/// A full `δ` table indexed by `(point, subset)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaTable {
    points: Vec<String>,
    values: Vec<ExtVal>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomViolation {
    A1 { x: usize },
    A2 { x: usize },
    A3 { x: usize, a: Subset, b: Subset },
    A4 { x: usize, a: Subset, b: Subset },
    A4Prime { x: usize, a: Subset, eps: ExtVal },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::A1 { x } => write!(f, "(A1) at point {x}"),
            AxiomViolation::A2 { x } => write!(f, "(A2) at point {x}"),
            AxiomViolation::A3 { x, a, b } => write!(f, "(A3) at {x}, {a:?}, {b:?}"),
            AxiomViolation::A4 { x, a, b } => write!(f, "(A4) at {x}, {a:?}, {b:?}"),
            AxiomViolation::A4Prime { x, a, eps } => write!(f, "(A4') at {x}, {a:?}, eps={eps}"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ApproachError {
    #[error("carrier is empty")]
    EmptyCarrier,
    #[error("duplicate point `{0}`")]
    DuplicatePoint(String),
    #[error("carrier of {0} points exceeds the subset table limit")]
    TooLarge(usize),
    #[error("table has {got} entries, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("axiom violations: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Axioms(Vec<AxiomViolation>),
    #[error("regular set is not closed: {0}")]
    NotClosed(String),
}

fn check_carrier(points: &[String]) -> Result<(), ApproachError> {
    if points.is_empty() {
        return Err(ApproachError::EmptyCarrier);
    }
    if points.len() > MAX_TABLE_POINTS {
        return Err(ApproachError::TooLarge(points.len()));
    }
    for (i, p) in points.iter().enumerate() {
        if points[..i].contains(p) {
            return Err(ApproachError::DuplicatePoint(p.clone()));
        }
    }
    Ok(())
}

impl DeltaTable {
    pub fn new(points: Vec<String>, values: Vec<ExtVal>) -> Result<Self, ApproachError> {
        check_carrier(&points)?;
        let expected = points.len() << points.len();
        if values.len() != expected {
            return Err(ApproachError::DimensionMismatch {
                expected,
                got: values.len(),
            });
        }
        Ok(DeltaTable { points, values })
    }

    pub fn from_fn(
        points: Vec<String>,
        f: impl Fn(usize, Subset) -> ExtVal,
    ) -> Result<Self, ApproachError> {
        check_carrier(&points)?;
        let n = points.len();
        let values = (0..n)
            .flat_map(|x| Subset::all(n).map(move |a| (x, a)))
            .map(|(x, a)| f(x, a))
            .collect();
        Ok(DeltaTable { points, values })
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn get(&self, x: usize, a: Subset) -> &ExtVal {
        &self.values[(x << self.len()) + a.index()]
    }

    pub fn set(&mut self, x: usize, a: Subset, v: ExtVal) {
        let n = self.len();
        self.values[(x << n) + a.index()] = v;
    }

    pub fn values(&self) -> &[ExtVal] {
        &self.values
    }

    /// Violations of (A1)–(A3).
    pub fn basic_violations(&self) -> Vec<AxiomViolation> {
        let n = self.len();
        let mut out = Vec::new();
        for x in 0..n {
            if !self.get(x, Subset::singleton(x)).is_zero() {
                out.push(AxiomViolation::A1 { x });
            }
            if !self.get(x, Subset::EMPTY).is_infinite() {
                out.push(AxiomViolation::A2 { x });
            }
            for a in Subset::all(n) {
                for b in Subset::all(n).filter(|b| b.0 >= a.0) {
                    let union = self.get(x, a.union(b));
                    if *union != self.get(x, a).min_with(self.get(x, b)) {
                        out.push(AxiomViolation::A3 { x, a, b });
                    }
                }
            }
        }
        out
    }

    /// Violations of (A4).
    pub fn a4_violations(&self) -> Vec<AxiomViolation> {
        let n = self.len();
        let subsets = 1usize << n;
        let mut out = Vec::new();
        // reach[b] = sup_{y∈B} δ(y, A) for the current A, built from B minus its lowest bit
        let mut reach = vec![ExtVal::zero(); subsets];
        for a in Subset::all(n) {
            for b in 1..subsets {
                let low = b.trailing_zeros() as usize;
                reach[b] = reach[b & (b - 1)].max_with(self.get(low, a));
            }
            for x in 0..n {
                let lhs = self.get(x, a);
                for b in Subset::all(n) {
                    if *lhs > self.get(x, b).add(&reach[b.index()]) {
                        out.push(AxiomViolation::A4 { x, a, b });
                    }
                }
            }
        }
        out
    }

    /// The finite probe set for (A4'): every table value plus `0` and `∞`.
    /// Between consecutive probes `A^ε` is constant while `ε` grows, so the
    /// lower endpoint of each interval is the binding case.
    pub fn epsilon_probes(&self) -> Vec<ExtVal> {
        let mut set: BTreeSet<ExtVal> = self.values.iter().cloned().collect();
        set.insert(ExtVal::zero());
        set.insert(ExtVal::inf());
        set.into_iter().collect()
    }

    /// Violations of (A4'): `δ(x,A) ≤ δ(x,A^ε) + ε` with
    /// `A^ε = {y | δ(y,A) ≤ ε}`.
    pub fn a4prime_violations(&self) -> Vec<AxiomViolation> {
        let n = self.len();
        let probes = self.epsilon_probes();
        let mut out = Vec::new();
        for a in Subset::all(n) {
            for eps in &probes {
                let a_eps = Subset::from_indices((0..n).filter(|&y| self.get(y, a) <= eps));
                for x in 0..n {
                    if *self.get(x, a) > self.get(x, a_eps).add(eps) {
                        out.push(AxiomViolation::A4Prime {
                            x,
                            a,
                            eps: eps.clone(),
                        });
                    }
                }
            }
        }
        out
    }

    pub fn check_a4(&self) -> bool {
        self.a4_violations().is_empty()
    }

    pub fn check_a4prime(&self) -> bool {
        self.a4prime_violations().is_empty()
    }

    /// Accepts iff (A1)–(A4) hold.
    pub fn accepts_with_a4(&self) -> bool {
        self.basic_violations().is_empty() && self.check_a4()
    }

    /// Accepts iff (A1)–(A3) and (A4') hold.
    pub fn accepts_with_a4prime(&self) -> bool {
        self.basic_violations().is_empty() && self.check_a4prime()
    }
}

/// A validated finite approach space, stored by its specialization matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteApproach {
    points: Vec<String>,
    single: Vec<ExtVal>,
}

/// Checks (A1)–(A4) on a full table.
pub fn validate_approach(table: &DeltaTable) -> Result<FiniteApproach, ApproachError> {
    let mut violations = table.basic_violations();
    violations.extend(table.a4_violations());
    if !violations.is_empty() {
        return Err(ApproachError::Axioms(violations));
    }
    let n = table.len();
    let single = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .map(|(x, y)| table.get(x, Subset::singleton(y)).clone())
        .collect();
    Ok(FiniteApproach {
        points: table.points.clone(),
        single,
    })
}

/// The Alexandroff distance `Γ(d)(x,A) = inf_{a∈A} d(x,a)` (`∞` on `∅`).
pub fn alexandroff(space: &FiniteSpace) -> FiniteApproach {
    assert!(
        space.len() <= MAX_TABLE_POINTS,
        "carrier too large for subset tables"
    );
    FiniteApproach {
        points: space.points().to_vec(),
        single: space.matrix().to_vec(),
    }
}

/// The specialization metric `Ω(δ)(x,y) = δ(x,{y})`.
pub fn specialization(space: &FiniteApproach) -> FiniteSpace {
    FiniteSpace::validate_flat(space.points.clone(), space.single.clone())
        .expect("specialization of a validated approach space is a metric")
}

impl FiniteApproach {
    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn delta_single(&self, x: usize, y: usize) -> &ExtVal {
        &self.single[x * self.len() + y]
    }

    /// `δ(x, A)` via the finite (A3) collapse.
    pub fn delta(&self, x: usize, a: Subset) -> ExtVal {
        inf_owned(a.iter().map(|y| self.delta_single(x, y).clone()))
    }

    /// `δ(−, A)` as a vector.
    pub fn delta_to(&self, a: Subset) -> Vec<ExtVal> {
        (0..self.len()).map(|x| self.delta(x, a)).collect()
    }

    pub fn table(&self) -> DeltaTable {
        DeltaTable::from_fn(self.points.clone(), |x, a| self.delta(x, a))
            .expect("carrier already checked")
    }
}

/// A witness `(x, A)` with `δ(x,A) < φ(x) ⊖ sup φ(A)`.
pub fn regular_violation(space: &FiniteApproach, phi: &[ExtVal]) -> Option<(usize, Subset)> {
    let n = space.len();
    for a in Subset::all(n) {
        let top = sup_owned(a.iter().map(|y| phi[y].clone()));
        for x in 0..n {
            if space.delta(x, a) < phi[x].monus(&top) {
                return Some((x, a));
            }
        }
    }
    None
}

/// Whether `φ` is a contraction into the half-line approach space.
pub fn is_regular(space: &FiniteApproach, phi: &[ExtVal]) -> bool {
    phi.len() == space.len() && regular_violation(space, phi).is_none()
}

/// Value set of a family of vectors together with `0` and `∞`.
fn value_set(vectors: &[Vec<ExtVal>]) -> BTreeSet<ExtVal> {
    let mut set: BTreeSet<ExtVal> = vectors.iter().flatten().cloned().collect();
    set.insert(ExtVal::zero());
    set.insert(ExtVal::inf());
    set
}

/// All one-step (R1)–(R3) images of a family whose entries stay in `values`.
fn one_step_images(
    family: &[Vec<ExtVal>],
    values: &BTreeSet<ExtVal>,
) -> Vec<(String, Vec<ExtVal>)> {
    let in_range = |v: &Vec<ExtVal>| v.iter().all(|e| values.contains(e));
    let mut out = Vec::new();
    for (i, p) in family.iter().enumerate() {
        for q in &family[i + 1..] {
            let join: Vec<ExtVal> = p.iter().zip(q).map(|(a, b)| a.max_with(b)).collect();
            let meet: Vec<ExtVal> = p.iter().zip(q).map(|(a, b)| a.min_with(b)).collect();
            out.push((format!("sup of {p:?} and {q:?}"), join));
            out.push((format!("min of {p:?} and {q:?}"), meet));
        }
        for alpha in values {
            let plus: Vec<ExtVal> = p.iter().map(|a| a.add(alpha)).collect();
            let minus: Vec<ExtVal> = p.iter().map(|a| a.monus(alpha)).collect();
            out.push((format!("{p:?} + {alpha}"), plus));
            out.push((format!("{p:?} - {alpha}"), minus));
        }
    }
    out.retain(|(_, v)| in_range(v));
    out
}

/// Closes a family of vectors under binary sup, binary min, and `± α`
/// for `α` in the value set, keeping only results whose entries stay in the
/// value set of the seed. The constants `0` (the empty supremum) and `∞`
/// are always included.
pub fn close_regular_set(n: usize, seed: &[Vec<ExtVal>]) -> Vec<Vec<ExtVal>> {
    let values = value_set(seed);
    let mut family: BTreeSet<Vec<ExtVal>> = seed.iter().cloned().collect();
    family.insert(vec![ExtVal::zero(); n]);
    family.insert(vec![ExtVal::inf(); n]);
    loop {
        let current: Vec<Vec<ExtVal>> = family.iter().cloned().collect();
        let before = family.len();
        for (_, v) in one_step_images(&current, &values) {
            family.insert(v);
        }
        if family.len() == before {
            return current;
        }
    }
}

/// Rebuilds `δ(x,A) = sup{φ(x) | φ ∈ S, φ = 0 on A}` from a family `S` of
/// regular functions. `S` must already be closed under the operations of
/// [`close_regular_set`]; arbitrary sups are not formed here.
pub fn reconstruct_delta(
    points: Vec<String>,
    regular_set: &[Vec<ExtVal>],
) -> Result<FiniteApproach, ApproachError> {
    check_carrier(&points)?;
    let n = points.len();
    if let Some(bad) = regular_set.iter().find(|v| v.len() != n) {
        return Err(ApproachError::DimensionMismatch {
            expected: n,
            got: bad.len(),
        });
    }
    let members: BTreeSet<&Vec<ExtVal>> = regular_set.iter().collect();
    let zero = vec![ExtVal::zero(); n];
    if !members.contains(&zero) {
        return Err(ApproachError::NotClosed(
            "missing the constant 0 (empty supremum)".into(),
        ));
    }
    let values = value_set(regular_set);
    for (reason, v) in one_step_images(regular_set, &values) {
        if !members.contains(&v) {
            return Err(ApproachError::NotClosed(reason));
        }
    }
    let table = DeltaTable::from_fn(points, |x, a| {
        sup_owned(
            regular_set
                .iter()
                .filter(|phi| a.iter().all(|y| phi[y].is_zero()))
                .map(|phi| phi[x].clone()),
        )
    })?;
    validate_approach(&table)
}

/// Result of checking a map between approach spaces by both criteria.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionCheck {
    /// `(x, A)` with `δ(x,A) < ρ(f(x), f(A))`.
    pub direct: Option<(usize, Subset)>,
    /// A subset `B` of the target with `ρ(−,B) ∘ f` not regular.
    pub via_regular: Option<Subset>,
}

impl ContractionCheck {
    pub fn holds(&self) -> bool {
        self.direct.is_none() && self.via_regular.is_none()
    }

    pub fn criteria_agree(&self) -> bool {
        self.direct.is_none() == self.via_regular.is_none()
    }
}

pub fn check_contraction(
    f: &[usize],
    source: &FiniteApproach,
    target: &FiniteApproach,
) -> ContractionCheck {
    assert_eq!(f.len(), source.len(), "map must be total on the source");
    let n = source.len();
    let image = |a: Subset| Subset::from_indices(a.iter().map(|x| f[x]));
    let direct = Subset::all(n).find_map(|a| {
        let fa = image(a);
        (0..n)
            .find(|&x| source.delta(x, a) < target.delta(f[x], fa))
            .map(|x| (x, a))
    });
    let via_regular = Subset::all(target.len()).find(|&b| {
        let composite: Vec<ExtVal> = (0..n).map(|x| target.delta(f[x], b)).collect();
        !is_regular(source, &composite)
    });
    ContractionCheck {
        direct,
        via_regular,
    }
}

pub fn is_contraction(f: &[usize], source: &FiniteApproach, target: &FiniteApproach) -> bool {
    check_contraction(f, source, target).holds()
}
