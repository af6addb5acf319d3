//! Finite quasi-metric spaces and maps between them.

use std::fmt;

use thiserror::Error;

use crate::extarith::ExtVal;

/// A finite set of named points with a distance matrix satisfying
/// `d(x,x) = 0` and the triangle inequality. Symmetry, separation and
/// finiteness are not assumed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteSpace {
    points: Vec<String>,
    dist: Vec<ExtVal>,
}

/// One violated metric axiom instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Reflexivity {
        x: String,
        value: ExtVal,
    },
    Triangle {
        x: String,
        y: String,
        z: String,
        xy: ExtVal,
        yz: ExtVal,
        xz: ExtVal,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Reflexivity { x, value } => write!(f, "d({x},{x}) = {value}, expected 0"),
            Violation::Triangle { x, y, z, xy, yz, xz } => write!(
                f,
                "d({x},{y}) + d({y},{z}) = {xy} + {yz} < d({x},{z}) = {xz}"
            ),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpaceError {
    #[error("carrier is empty")]
    EmptyCarrier,
    #[error("duplicate point `{0}`")]
    DuplicatePoint(String),
    #[error("matrix shape does not match {points} points")]
    DimensionMismatch { points: usize },
    #[error("{} metric axiom violation(s): {}", .0.len(), join_violations(.0))]
    Invalid(Vec<Violation>),
}

fn join_violations(vs: &[Violation]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ")
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MapError {
    #[error("assignment has length {got}, source has {expected} points")]
    Length { expected: usize, got: usize },
    #[error("image index {0} is outside the target carrier")]
    OutOfRange(usize),
}

/// Structural flags of a space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct SpaceFlags {
    pub symmetric: bool,
    pub separated: bool,
    pub finitary: bool,
}

impl FiniteSpace {
    /// Builds and validates a space from a square matrix given row by row.
    pub fn validate(points: Vec<String>, rows: Vec<Vec<ExtVal>>) -> Result<Self, SpaceError> {
        let n = points.len();
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(SpaceError::DimensionMismatch { points: n });
        }
        let dist = rows.into_iter().flatten().collect();
        Self::validate_flat(points, dist)
    }

    /// Like [`FiniteSpace::validate`] with the matrix in row-major order.
    pub fn validate_flat(points: Vec<String>, dist: Vec<ExtVal>) -> Result<Self, SpaceError> {
        let space = Self::from_flat_unchecked(points, dist)?;
        let violations = space.violations();
        if violations.is_empty() {
            Ok(space)
        } else {
            Err(SpaceError::Invalid(violations))
        }
    }

    /// Shape checks only; the metric axioms are not verified.
    pub fn from_flat_unchecked(points: Vec<String>, dist: Vec<ExtVal>) -> Result<Self, SpaceError> {
        let n = points.len();
        if n == 0 {
            return Err(SpaceError::EmptyCarrier);
        }
        if dist.len() != n * n {
            return Err(SpaceError::DimensionMismatch { points: n });
        }
        for (i, p) in points.iter().enumerate() {
            if points[..i].contains(p) {
                return Err(SpaceError::DuplicatePoint(p.clone()));
            }
        }
        Ok(FiniteSpace { points, dist })
    }

    /// Convenience constructor for tests and fixtures; panics if invalid.
    pub fn from_rows(points: &[&str], rows: &[&[&str]]) -> Self {
        let points = points.iter().map(|s| s.to_string()).collect();
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|s| s.parse().expect("bad value")).collect())
            .collect();
        Self::validate(points, rows).expect("invalid space")
    }

    /// Every violated axiom instance, in declaration order.
    pub fn violations(&self) -> Vec<Violation> {
        let n = self.len();
        let mut out = Vec::new();
        for x in 0..n {
            if !self.d(x, x).is_zero() {
                out.push(Violation::Reflexivity {
                    x: self.points[x].clone(),
                    value: self.d(x, x).clone(),
                });
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let via = self.d(x, y).add(self.d(y, z));
                    if via < *self.d(x, z) {
                        out.push(Violation::Triangle {
                            x: self.points[x].clone(),
                            y: self.points[y].clone(),
                            z: self.points[z].clone(),
                            xy: self.d(x, y).clone(),
                            yz: self.d(y, z).clone(),
                            xz: self.d(x, z).clone(),
                        });
                    }
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.violations().is_empty()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &str {
        &self.points[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.points.iter().position(|p| p == name)
    }

    /// Distance from point `x` to point `y`.
    pub fn d(&self, x: usize, y: usize) -> &ExtVal {
        &self.dist[x * self.len() + y]
    }

    pub fn matrix(&self) -> &[ExtVal] {
        &self.dist
    }

    /// Overwrites one entry without revalidating. Used by mutation tests.
    pub fn set_unchecked(&mut self, x: usize, y: usize, value: ExtVal) {
        let n = self.len();
        self.dist[x * n + y] = value;
    }

    fn pairs(&self) -> impl Iterator<Item = (usize, usize)> {
        let n = self.len();
        (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)))
    }

    pub fn classify(&self) -> SpaceFlags {
        let symmetric = self.pairs().all(|(x, y)| self.d(x, y) == self.d(y, x));
        let separated = self
            .pairs()
            .all(|(x, y)| x == y || !(self.d(x, y).is_zero() && self.d(y, x).is_zero()));
        let finitary = self.dist.iter().all(ExtVal::is_finite);
        SpaceFlags {
            symmetric,
            separated,
            finitary,
        }
    }

    /// `d^op(x,y) = d(y,x)`.
    pub fn opposite(&self) -> FiniteSpace {
        self.derive(|x, y| self.d(y, x).clone())
    }

    /// `d^sym(x,y) = max{d(x,y), d(y,x)}`.
    pub fn symmetrization(&self) -> FiniteSpace {
        self.derive(|x, y| self.d(x, y).max_with(self.d(y, x)))
    }

    fn derive(&self, f: impl Fn(usize, usize) -> ExtVal) -> FiniteSpace {
        let dist = self.pairs().map(|(x, y)| f(x, y)).collect();
        FiniteSpace {
            points: self.points.clone(),
            dist,
        }
    }

    /// Whether `x` and `y` are at mutual distance zero.
    pub fn zero_linked(&self, x: usize, y: usize) -> bool {
        self.d(x, y).is_zero() && self.d(y, x).is_zero()
    }

    /// Partition of the carrier into zero-cliques, each listed in
    /// declaration order, classes ordered by their first member.
    pub fn zero_cliques(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut class_of: Vec<Option<usize>> = vec![None; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            if class_of[x].is_some() {
                continue;
            }
            let members: Vec<usize> = (x..n).filter(|&y| self.zero_linked(x, y)).collect();
            for &a in &members {
                for &b in &members {
                    // the symmetric-zero relation is transitive by the triangle inequality
                    assert!(
                        self.zero_linked(a, b),
                        "zero relation is not transitive on {} and {}",
                        self.points[a],
                        self.points[b]
                    );
                }
                class_of[a] = Some(classes.len());
            }
            classes.push(members);
        }
        classes
    }

    /// Quotient by the zero-clique relation together with its projection.
    pub fn separated_quotient(&self) -> (FiniteSpace, SpaceMap) {
        let classes = self.zero_cliques();
        let k = classes.len();
        let mut assignment = vec![0; self.len()];
        for (c, members) in classes.iter().enumerate() {
            for &m in members {
                assignment[m] = c;
            }
        }
        let points = classes
            .iter()
            .map(|members| {
                members
                    .iter()
                    .map(|&m| self.points[m].as_str())
                    .collect::<Vec<_>>()
                    .join("~")
            })
            .collect();
        let mut dist = Vec::with_capacity(k * k);
        for ci in &classes {
            for cj in &classes {
                dist.push(self.d(ci[0], cj[0]).clone());
            }
        }
        let quotient = FiniteSpace { points, dist };
        let projection = SpaceMap {
            source: self.clone(),
            target: quotient.clone(),
            assignment,
        };
        (quotient, projection)
    }
}

/// A total map between finite spaces given by point indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceMap {
    source: FiniteSpace,
    target: FiniteSpace,
    assignment: Vec<usize>,
}

impl SpaceMap {
    pub fn new(
        source: FiniteSpace,
        target: FiniteSpace,
        assignment: Vec<usize>,
    ) -> Result<Self, MapError> {
        if assignment.len() != source.len() {
            return Err(MapError::Length {
                expected: source.len(),
                got: assignment.len(),
            });
        }
        if let Some(&bad) = assignment.iter().find(|&&i| i >= target.len()) {
            return Err(MapError::OutOfRange(bad));
        }
        Ok(SpaceMap {
            source,
            target,
            assignment,
        })
    }

    pub fn identity(space: &FiniteSpace) -> Self {
        SpaceMap {
            source: space.clone(),
            target: space.clone(),
            assignment: (0..space.len()).collect(),
        }
    }

    pub fn source(&self) -> &FiniteSpace {
        &self.source
    }

    pub fn target(&self) -> &FiniteSpace {
        &self.target
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn apply(&self, x: usize) -> usize {
        self.assignment[x]
    }

    /// First pair `(x,y)` with `d(x,y) < p(f(x),f(y))`, if any.
    pub fn nonexpansive_violation(&self) -> Option<(usize, usize)> {
        self.source.pairs().find(|&(x, y)| {
            self.source.d(x, y) < self.target.d(self.apply(x), self.apply(y))
        })
    }

    pub fn check_nonexpansive(&self) -> bool {
        self.nonexpansive_violation().is_none()
    }

    pub fn check_isometric(&self) -> bool {
        self.source
            .pairs()
            .all(|(x, y)| self.source.d(x, y) == self.target.d(self.apply(x), self.apply(y)))
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::FiniteSpace;

    pub fn sier() -> FiniteSpace {
        FiniteSpace::from_rows(&["a", "b"], &[&["0", "0"], &["inf", "0"]])
    }

    pub fn zc2() -> FiniteSpace {
        FiniteSpace::from_rows(&["a", "b"], &[&["0", "0"], &["0", "0"]])
    }

    pub fn sym2() -> FiniteSpace {
        FiniteSpace::from_rows(&["a", "b"], &[&["0", "1"], &["1", "0"]])
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    fn names(xs: &[&str]) -> Vec<String> {
        xs.iter().map(|s| s.to_string()).collect()
    }

    fn val(s: &str) -> ExtVal {
        s.parse().unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(sier().is_valid());
        assert!(zc2().is_valid());
        let rows = vec![
            vec![val("0"), val("1"), val("3")],
            vec![val("inf"), val("0"), val("1")],
            vec![val("inf"), val("inf"), val("0")],
        ];
        let err = FiniteSpace::validate(names(&["a", "b", "c"]), rows).unwrap_err();
        let SpaceError::Invalid(vs) = err else {
            panic!("expected violations")
        };
        assert_eq!(
            vs,
            vec![Violation::Triangle {
                x: "a".into(),
                y: "b".into(),
                z: "c".into(),
                xy: val("1"),
                yz: val("1"),
                xz: val("3"),
            }]
        );
    }

    #[test]
    fn validate_reports_every_violation() {
        let rows = vec![vec![val("1"), val("0")], vec![val("0"), val("2")]];
        let SpaceError::Invalid(vs) = FiniteSpace::validate(names(&["a", "b"]), rows).unwrap_err()
        else {
            panic!()
        };
        let reflexive = vs
            .iter()
            .filter(|v| matches!(v, Violation::Reflexivity { .. }))
            .count();
        assert_eq!(reflexive, 2);
        assert!(vs.len() > 2);
    }

    #[test]
    fn shape_errors() {
        assert_eq!(
            FiniteSpace::validate(names(&["a", "b"]), vec![vec![val("0")]]),
            Err(SpaceError::DimensionMismatch { points: 2 })
        );
        assert_eq!(
            FiniteSpace::validate(names(&["a", "a"]), vec![vec![val("0"); 2]; 2]),
            Err(SpaceError::DuplicatePoint("a".into()))
        );
        assert_eq!(
            FiniteSpace::validate(vec![], vec![]),
            Err(SpaceError::EmptyCarrier)
        );
    }

    #[test]
    fn classify_examples() {
        let f = |s: FiniteSpace| {
            let c = s.classify();
            (c.symmetric, c.separated, c.finitary)
        };
        assert_eq!(f(sier()), (false, true, false));
        assert_eq!(f(zc2()), (true, false, true));
        assert_eq!(f(sym2()), (true, true, true));
    }

    #[test]
    fn opposite_and_symmetrization() {
        let op = sier().opposite();
        assert_eq!(op.d(0, 1), &ExtVal::inf());
        assert_eq!(op.d(1, 0), &ExtVal::zero());
        let sym = sier().symmetrization();
        assert_eq!(sym.d(0, 1), &ExtVal::inf());
        assert_eq!(sym.d(1, 0), &ExtVal::inf());
        assert_eq!(sym2().symmetrization(), sym2());
        assert!(op.is_valid() && sym.is_valid());
    }

    #[test]
    fn quotients() {
        let (q, proj) = zc2().separated_quotient();
        assert_eq!(q.len(), 1);
        assert_eq!(q.point(0), "a~b");
        assert!(proj.check_nonexpansive());

        let (q, proj) = sier().separated_quotient();
        assert_eq!(q, sier());
        assert_eq!(proj.assignment(), &[0, 1]);

        let s = FiniteSpace::from_rows(
            &["a", "b", "c"],
            &[&["0", "0", "2"], &["0", "0", "2"], &["1", "1", "0"]],
        );
        let (q, proj) = s.separated_quotient();
        assert_eq!(q.len(), 2);
        assert!(q.classify().separated);
        assert_eq!(proj.assignment(), &[0, 0, 1]);
        assert_eq!(q.d(0, 1), &val("2"));
        assert_eq!(q.d(1, 0), &val("1"));
    }

    #[test]
    fn map_checks() {
        let id = SpaceMap::identity(&sym2());
        assert!(id.check_nonexpansive() && id.check_isometric());

        // both points of ZC2 to `a` in SIER: all distances are 0 on either side
        let constant = SpaceMap::new(zc2(), sier(), vec![0, 0]).unwrap();
        assert!(constant.check_nonexpansive());
        assert!(constant.check_isometric());

        let inclusion = SpaceMap::new(sier(), sym2(), vec![0, 1]).unwrap();
        assert!(!inclusion.check_nonexpansive());
        assert_eq!(inclusion.nonexpansive_violation(), Some((0, 1)));

        assert_eq!(
            SpaceMap::new(sier(), sym2(), vec![0, 2]),
            Err(MapError::OutOfRange(2))
        );
    }
}
