//! Finite preorders and topologies, and the functors relating them to
//! finite metric and approach spaces.
//!
//! ```text
//!        ω               ω
//!   Ord ───▶ Met    Top ───▶ App
//!   Γ│  ◀───  │Γ    Ω│  ◀───  │Ω
//!    ▼   ι    ▼     ▲    ι    ▲
//!   Top ───▶ App   Ord ───▶ Met
//! ```

use thiserror::Error;

use crate::approach::{alexandroff, is_contraction, specialization, validate_approach, DeltaTable, FiniteApproach};
use crate::extarith::ExtVal;
use crate::space::FiniteSpace;
use crate::subset::{Subset, MAX_TABLE_POINTS};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrderError {
    #[error("carrier is empty")]
    EmptyCarrier,
    #[error("duplicate point `{0}`")]
    DuplicatePoint(String),
    #[error("carrier of {0} points exceeds the subset table limit")]
    TooLarge(usize),
    #[error("table shape does not match {points} points")]
    DimensionMismatch { points: usize },
    #[error("not reflexive at `{0}`")]
    NotReflexive(String),
    #[error("not transitive: {x} ≤ {y} ≤ {z} but not {x} ≤ {z}")]
    NotTransitive { x: String, y: String, z: String },
    #[error("(C1) fails: `{0}` is not in its own closure")]
    C1(String),
    #[error("(C2) fails: the closure of the empty set is nonempty")]
    C2,
    #[error("(C3) fails at subset {0}")]
    C3(String),
    #[error("(C4) fails at subset {0}")]
    C4(String),
}

fn check_carrier(points: &[String]) -> Result<(), OrderError> {
    if points.is_empty() {
        return Err(OrderError::EmptyCarrier);
    }
    if points.len() > MAX_TABLE_POINTS {
        return Err(OrderError::TooLarge(points.len()));
    }
    for (i, p) in points.iter().enumerate() {
        if points[..i].contains(p) {
            return Err(OrderError::DuplicatePoint(p.clone()));
        }
    }
    Ok(())
}

/// A reflexive, transitive relation on a finite carrier. Antisymmetry is not
/// assumed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePreorder {
    points: Vec<String>,
    leq: Vec<bool>,
}

impl FinitePreorder {
    /// Validates a row-major relation matrix.
    pub fn validate(points: Vec<String>, leq: Vec<bool>) -> Result<Self, OrderError> {
        check_carrier(&points)?;
        let n = points.len();
        if leq.len() != n * n {
            return Err(OrderError::DimensionMismatch { points: n });
        }
        let p = FinitePreorder { points, leq };
        for x in 0..n {
            if !p.le(x, x) {
                return Err(OrderError::NotReflexive(p.points[x].clone()));
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if p.le(x, y) && p.le(y, z) && !p.le(x, z) {
                        return Err(OrderError::NotTransitive {
                            x: p.points[x].clone(),
                            y: p.points[y].clone(),
                            z: p.points[z].clone(),
                        });
                    }
                }
            }
        }
        Ok(p)
    }

    pub fn discrete(points: Vec<String>) -> Result<Self, OrderError> {
        let n = points.len();
        Self::validate(points, (0..n * n).map(|i| i / n == i % n).collect())
    }

    pub fn indiscrete(points: Vec<String>) -> Result<Self, OrderError> {
        let n = points.len();
        Self::validate(points, vec![true; n * n])
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

    pub fn le(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.len() + y]
    }

    pub fn relation(&self) -> &[bool] {
        &self.leq
    }

    /// Every directed subset has a supremum. On a finite carrier a directed
    /// set contains an upper bound of itself, which is a supremum.
    pub fn is_directed_complete(&self) -> bool {
        let n = self.len();
        Subset::all(n).filter(|d| !d.is_empty()).all(|d| {
            let directed = d
                .iter()
                .all(|a| d.iter().all(|b| d.iter().any(|c| self.le(a, c) && self.le(b, c))));
            !directed
                || (0..n).any(|s| {
                    d.iter().all(|a| self.le(a, s))
                        && (0..n).all(|u| !d.iter().all(|a| self.le(a, u)) || self.le(s, u))
                })
        })
    }
}

/// A finite topology stored by the closures of singletons.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteTopology {
    points: Vec<String>,
    closures: Vec<Subset>,
}

impl FiniteTopology {
    /// Validates singleton closures: (C1), and (C4) in the form
    /// `y ∈ cl{x} ⟹ cl{y} ⊆ cl{x}`. (C2) and (C3) hold by construction.
    pub fn from_singleton_closures(points: Vec<String>, closures: Vec<Subset>) -> Result<Self, OrderError> {
        check_carrier(&points)?;
        let n = points.len();
        let full = Subset::full(n);
        if closures.len() != n || closures.iter().any(|c| !c.is_subset_of(full)) {
            return Err(OrderError::DimensionMismatch { points: n });
        }
        let t = FiniteTopology { points, closures };
        for x in 0..n {
            if !t.closures[x].contains(x) {
                return Err(OrderError::C1(t.points[x].clone()));
            }
            if t.closure(t.closures[x]) != t.closures[x] {
                return Err(OrderError::C4(Subset::singleton(x).render(&t.points)));
            }
        }
        Ok(t)
    }

    /// Validates a full closure table indexed by subset mask against
    /// (C1)–(C4).
    pub fn from_table(points: Vec<String>, table: Vec<Subset>) -> Result<Self, OrderError> {
        check_carrier(&points)?;
        let n = points.len();
        let full = Subset::full(n);
        if table.len() != 1 << n || table.iter().any(|c| !c.is_subset_of(full)) {
            return Err(OrderError::DimensionMismatch { points: n });
        }
        if !table[0].is_empty() {
            return Err(OrderError::C2);
        }
        for a in Subset::all(n) {
            if !a.is_subset_of(table[a.index()]) {
                let x = a.iter().find(|&x| !table[a.index()].contains(x)).unwrap_or(0);
                return Err(OrderError::C1(points[x].clone()));
            }
        }
        for a in Subset::all(n) {
            for b in Subset::all(n) {
                if table[a.union(b).index()] != table[a.index()].union(table[b.index()]) {
                    return Err(OrderError::C3(format!(
                        "{} ∪ {}",
                        a.render(&points),
                        b.render(&points)
                    )));
                }
            }
        }
        for a in Subset::all(n) {
            let c = table[a.index()];
            if table[c.index()] != c {
                return Err(OrderError::C4(a.render(&points)));
            }
        }
        let closures = (0..n).map(|x| table[Subset::singleton(x).index()]).collect();
        Ok(FiniteTopology { points, closures })
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

    pub fn closure_of_point(&self, x: usize) -> Subset {
        self.closures[x]
    }

    pub fn closure(&self, a: Subset) -> Subset {
        a.iter().fold(Subset::EMPTY, |acc, x| acc.union(self.closures[x]))
    }

    pub fn closed_sets(&self) -> impl Iterator<Item = Subset> + '_ {
        Subset::all(self.len()).filter(move |&a| self.closure(a) == a)
    }

    pub fn is_irreducible(&self, a: Subset) -> bool {
        if a.is_empty() {
            return false;
        }
        let closed: Vec<Subset> = self.closed_sets().collect();
        closed.iter().all(|&b| {
            closed
                .iter()
                .all(|&c| !a.is_subset_of(b.union(c)) || a.is_subset_of(b) || a.is_subset_of(c))
        })
    }
}

/// `Γ(p)`: the closed sets are the lower sets.
pub fn alexandroff_top(p: &FinitePreorder) -> FiniteTopology {
    let n = p.len();
    let closures = (0..n)
        .map(|x| Subset::from_indices((0..n).filter(|&y| p.le(y, x))))
        .collect();
    FiniteTopology::from_singleton_closures(p.points.clone(), closures).expect("lower sets form a topology")
}

/// `Ω(t)`: `x ≤ y` iff `x ∈ cl{y}`.
pub fn specialization_order(t: &FiniteTopology) -> FinitePreorder {
    let n = t.len();
    let leq = (0..n * n).map(|i| t.closures[i % n].contains(i / n)).collect();
    FinitePreorder::validate(t.points.clone(), leq).expect("specialization order is a preorder")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopSoberWitness {
    pub closed: Subset,
    /// Points `x` with `cl{x}` equal to the closed set; empty or at least two.
    pub generic: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopSoberCheck {
    pub sober: bool,
    pub witness: Option<TopSoberWitness>,
}

pub fn is_sober_top(t: &FiniteTopology) -> TopSoberCheck {
    for a in t.closed_sets().filter(|&a| t.is_irreducible(a)).collect::<Vec<_>>() {
        let generic: Vec<usize> = (0..t.len()).filter(|&x| t.closures[x] == a).collect();
        if generic.len() != 1 {
            return TopSoberCheck {
                sober: false,
                witness: Some(TopSoberWitness { closed: a, generic }),
            };
        }
    }
    TopSoberCheck {
        sober: true,
        witness: None,
    }
}

fn omega_value(holds: bool) -> ExtVal {
    if holds {
        ExtVal::zero()
    } else {
        ExtVal::inf()
    }
}

/// `ω(p)(x,y) = 0` if `x ≤ y`, else `∞`.
pub fn omega_ord(p: &FinitePreorder) -> FiniteSpace {
    let n = p.len();
    let dist = (0..n * n).map(|i| omega_value(p.leq[i])).collect();
    FiniteSpace::validate_flat(p.points.clone(), dist).expect("ω of a preorder is a metric")
}

/// `ω(t)(x,A) = 0` if `x ∈ cl A`, else `∞`.
pub fn omega_top(t: &FiniteTopology) -> FiniteApproach {
    let table = DeltaTable::from_fn(t.points.clone(), |x, a| omega_value(t.closure(a).contains(x)))
        .expect("carrier already validated");
    validate_approach(&table).expect("ω of a topology is an approach space")
}

/// The underlying order: `x ≤ y` iff `d(x,y) = 0`.
pub fn iota_met(s: &FiniteSpace) -> FinitePreorder {
    let leq = s.matrix().iter().map(ExtVal::is_zero).collect();
    FinitePreorder::validate(s.points().to_vec(), leq).expect("zero-distance relation is a preorder")
}

/// The underlying topology: `cl A = {x : δ(x,A) = 0}`.
pub fn iota_app(a: &FiniteApproach) -> FiniteTopology {
    let n = a.len();
    let closures = (0..n)
        .map(|y| Subset::from_indices((0..n).filter(|&x| a.delta_single(x, y).is_zero())))
        .collect();
    FiniteTopology::from_singleton_closures(a.points().to_vec(), closures)
        .expect("zero-distance closure is a topology")
}

pub enum SquareInstance<'a> {
    Order(&'a FinitePreorder),
    Approach(&'a FiniteApproach),
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct SquareReport {
    pub checks: Vec<(&'static str, bool)>,
}

impl SquareReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }
}

/// Commutativity of both squares together with the unit and counit
/// identities of `ω ⊣ ι` on one instance.
pub fn square_checks(instance: SquareInstance<'_>) -> SquareReport {
    let mut checks = Vec::new();
    match instance {
        SquareInstance::Order(p) => {
            checks.push(("ω Γ = Γ ω", omega_top(&alexandroff_top(p)) == alexandroff(&omega_ord(p))));
            checks.push(("Ω Γ = id on preorders", specialization_order(&alexandroff_top(p)) == *p));
            checks.push(("ι ω = id on preorders", iota_met(&omega_ord(p)) == *p));
            let t = alexandroff_top(p);
            checks.push(("ι ω = id on topologies", iota_app(&omega_top(&t)) == t));
        }
        SquareInstance::Approach(a) => {
            checks.push(("ι Ω = Ω ι", iota_met(&specialization(a)) == specialization_order(&iota_app(a))));
            let s = specialization(a);
            checks.push(("Ω Γ = id on metric spaces", specialization(&alexandroff(&s)) == s));
            let identity: Vec<usize> = (0..a.len()).collect();
            checks.push((
                "ω ι → id is a contraction",
                is_contraction(&identity, &omega_top(&iota_app(a)), a),
            ));
            let counit_met = omega_ord(&iota_met(&s));
            checks.push((
                "ω ι → id is nonexpansive",
                (0..s.len()).all(|x| (0..s.len()).all(|y| s.d(x, y) <= counit_met.d(x, y))),
            ));
        }
    }
    SquareReport { checks }
}
