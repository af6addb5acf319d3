//! Weights and coweights of a finite space and the calculus around them:
//! the sup metric, the Yoneda embedding, tensor products, left adjoints,
//! flatness, and transport along non-expansive maps.
//!
//! A weight `φ` satisfies `φ(x) ≤ φ(y) + d(x,y)`; a coweight `ψ` satisfies
//! `ψ(y) ≤ ψ(x) + d(x,y)`. Both are plain value vectors indexed by the
//! declaration order of the carrier.

use thiserror::Error;

use crate::extarith::{inf_owned, lawvere, sup_owned, ExtVal};
use crate::space::{FiniteSpace, SpaceMap};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WeightError {
    #[error("vector has {got} entries, carrier has {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("law violated at {0:?}")]
    LawViolation(Vec<(usize, usize)>),
    #[error("map is not non-expansive")]
    NotNonexpansive,
}

macro_rules! value_vector {
    ($name:ident) => {
        #[derive(Clone, PartialEq, Eq, Hash, Debug, serde::Serialize)]
        #[serde(transparent)]
        pub struct $name(Vec<ExtVal>);

        impl $name {
            /// Wraps a vector without checking the module law.
            pub fn new_unchecked(values: Vec<ExtVal>) -> Self {
                $name(values)
            }

            pub fn values(&self) -> &[ExtVal] {
                &self.0
            }

            pub fn into_values(self) -> Vec<ExtVal> {
                self.0
            }

            pub fn get(&self, i: usize) -> &ExtVal {
                &self.0[i]
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            pub fn infimum(&self) -> ExtVal {
                crate::extarith::inf_of(&self.0)
            }

            /// Pointwise `≤`.
            pub fn le(&self, other: &Self) -> bool {
                self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
            }

            pub fn meet(&self, other: &Self) -> Self {
                $name(zip_with(&self.0, &other.0, ExtVal::min_with))
            }

            pub fn join(&self, other: &Self) -> Self {
                $name(zip_with(&self.0, &other.0, ExtVal::max_with))
            }

            pub fn plus(&self, alpha: &ExtVal) -> Self {
                $name(self.0.iter().map(|v| v.add(alpha)).collect())
            }

            pub fn minus(&self, alpha: &ExtVal) -> Self {
                $name(self.0.iter().map(|v| v.monus(alpha)).collect())
            }
        }
    };
}

value_vector!(Weight);
value_vector!(Coweight);

fn zip_with(a: &[ExtVal], b: &[ExtVal], f: impl Fn(&ExtVal, &ExtVal) -> ExtVal) -> Vec<ExtVal> {
    a.iter().zip(b).map(|(x, y)| f(x, y)).collect()
}

fn check_len(space: &FiniteSpace, values: &[ExtVal]) -> Result<(), WeightError> {
    if values.len() != space.len() {
        return Err(WeightError::LengthMismatch {
            expected: space.len(),
            got: values.len(),
        });
    }
    Ok(())
}

/// Pairs `(x,y)` with `φ(x) > φ(y) + d(x,y)`.
pub fn weight_violations(space: &FiniteSpace, values: &[ExtVal]) -> Vec<(usize, usize)> {
    let n = space.len();
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if values[x] > values[y].add(space.d(x, y)) {
                out.push((x, y));
            }
        }
    }
    out
}

/// Pairs `(x,y)` with `ψ(y) > ψ(x) + d(x,y)`.
pub fn coweight_violations(space: &FiniteSpace, values: &[ExtVal]) -> Vec<(usize, usize)> {
    let n = space.len();
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if values[y] > values[x].add(space.d(x, y)) {
                out.push((x, y));
            }
        }
    }
    out
}

pub fn check_weight(space: &FiniteSpace, values: Vec<ExtVal>) -> Result<Weight, WeightError> {
    check_len(space, &values)?;
    let bad = weight_violations(space, &values);
    if bad.is_empty() {
        Ok(Weight(values))
    } else {
        Err(WeightError::LawViolation(bad))
    }
}

pub fn check_coweight(space: &FiniteSpace, values: Vec<ExtVal>) -> Result<Coweight, WeightError> {
    check_len(space, &values)?;
    let bad = coweight_violations(space, &values);
    if bad.is_empty() {
        Ok(Coweight(values))
    } else {
        Err(WeightError::LawViolation(bad))
    }
}

/// `d(−, x)`.
pub fn representable(space: &FiniteSpace, x: usize) -> Weight {
    Weight((0..space.len()).map(|y| space.d(y, x).clone()).collect())
}

/// `d(x, −)`.
pub fn corepresentable(space: &FiniteSpace, x: usize) -> Coweight {
    Coweight((0..space.len()).map(|y| space.d(x, y).clone()).collect())
}

/// `sup_x d_L(a(x), b(x))` for raw vectors of equal length.
pub fn sup_distance(a: &[ExtVal], b: &[ExtVal]) -> ExtVal {
    sup_owned(a.iter().zip(b).map(|(p, q)| lawvere(p, q)))
}

/// The sup metric `d̄(φ, ψ)` on weights.
pub fn sup_metric(phi: &Weight, psi: &Weight) -> ExtVal {
    sup_distance(&phi.0, &psi.0)
}

/// `φ ⊗ ψ = inf_x (φ(x) + ψ(x))`.
pub fn tensor(phi: &Weight, psi: &Coweight) -> ExtVal {
    inf_owned(phi.0.iter().zip(&psi.0).map(|(a, b)| a.add(b)))
}

/// The only possible left adjoint of `φ`: `x ↦ d̄(φ, d(−,x))`.
pub fn left_adjoint_candidate(space: &FiniteSpace, phi: &Weight) -> Coweight {
    Coweight(
        (0..space.len())
            .map(|x| sup_metric(phi, &representable(space, x)))
            .collect(),
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AdjunctionFailure {
    /// `φ ⊗ ψ` is not zero.
    TensorNonzero(ExtVal),
    /// `φ(x) + ψ(y) < d(x,y)`.
    Inequality { x: usize, y: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CauchyCheck {
    pub candidate: Coweight,
    pub failure: Option<AdjunctionFailure>,
}

impl CauchyCheck {
    pub fn is_cauchy(&self) -> bool {
        self.failure.is_none()
    }
}

/// Whether `ψ` is left adjoint to `φ`; `None` means it is.
pub fn adjunction_failure(
    space: &FiniteSpace,
    phi: &Weight,
    psi: &Coweight,
) -> Option<AdjunctionFailure> {
    let t = tensor(phi, psi);
    if !t.is_zero() {
        return Some(AdjunctionFailure::TensorNonzero(t));
    }
    let n = space.len();
    for x in 0..n {
        for y in 0..n {
            if phi.0[x].add(&psi.0[y]) < *space.d(x, y) {
                return Some(AdjunctionFailure::Inequality { x, y });
            }
        }
    }
    None
}

/// Decides whether `φ` has a left adjoint. Adjoints are unique, so testing
/// the canonical candidate is complete.
pub fn is_cauchy(space: &FiniteSpace, phi: &Weight) -> CauchyCheck {
    let candidate = left_adjoint_candidate(space, phi);
    let failure = adjunction_failure(space, phi, &candidate);
    CauchyCheck { candidate, failure }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FlatFailure {
    NonzeroInfimum(ExtVal),
    NoJointApproximant { x1: usize, x2: usize },
}

/// Reason `φ` fails to be flat, or `None` when it is flat.
///
/// Uses the pairwise approximation criterion: for every pair `x1, x2` some
/// `y` has `d(xi,y) + φ(y) ≤ φ(xi)` for both `i`. On a finite carrier the
/// infima in the ε-formulation are attained, so the strict inequalities
/// collapse to these non-strict ones; entries with `φ(xi) = ∞` are
/// satisfied by any `y`.
pub fn flat_failure(space: &FiniteSpace, phi: &Weight) -> Option<FlatFailure> {
    let inf = phi.infimum();
    if !inf.is_zero() {
        return Some(FlatFailure::NonzeroInfimum(inf));
    }
    let n = space.len();
    let reach = |x: usize, y: usize| space.d(x, y).add(&phi.0[y]) <= phi.0[x];
    for x1 in 0..n {
        for x2 in x1..n {
            if !(0..n).any(|y| reach(x1, y) && reach(x2, y)) {
                return Some(FlatFailure::NoJointApproximant { x1, x2 });
            }
        }
    }
    None
}

pub fn is_flat(space: &FiniteSpace, phi: &Weight) -> bool {
    flat_failure(space, phi).is_none()
}

/// `f(φ)(y) = inf_x (φ(x) + p(y, f(x)))`.
pub fn pushforward(map: &SpaceMap, phi: &Weight) -> Result<Weight, WeightError> {
    if !map.check_nonexpansive() {
        return Err(WeightError::NotNonexpansive);
    }
    let target = map.target();
    let values = (0..target.len())
        .map(|y| {
            inf_owned(
                phi.0
                    .iter()
                    .enumerate()
                    .map(|(x, v)| v.add(target.d(y, map.apply(x)))),
            )
        })
        .collect();
    Ok(Weight(values))
}

/// `ψ ∘ f` for a weight on the target.
pub fn pullback_weight(map: &SpaceMap, psi: &Weight) -> Result<Weight, WeightError> {
    if !map.check_nonexpansive() {
        return Err(WeightError::NotNonexpansive);
    }
    Ok(Weight(pull(map, &psi.0)))
}

/// `ψ ∘ f` for a coweight on the target.
pub fn pullback_coweight(map: &SpaceMap, psi: &Coweight) -> Result<Coweight, WeightError> {
    if !map.check_nonexpansive() {
        return Err(WeightError::NotNonexpansive);
    }
    Ok(Coweight(pull(map, &psi.0)))
}

fn pull(map: &SpaceMap, values: &[ExtVal]) -> Vec<ExtVal> {
    map.assignment().iter().map(|&y| values[y].clone()).collect()
}

/// The largest weight below `g`: `x ↦ inf_y (g(y) + d(x,y))`.
pub fn weight_coreflection(space: &FiniteSpace, g: &[ExtVal]) -> Weight {
    let n = space.len();
    Weight(
        (0..n)
            .map(|x| inf_owned((0..n).map(|y| g[y].add(space.d(x, y)))))
            .collect(),
    )
}

/// The largest coweight below `g`: `y ↦ inf_x (g(x) + d(x,y))`.
pub fn coweight_coreflection(space: &FiniteSpace, g: &[ExtVal]) -> Coweight {
    let n = space.len();
    Coweight(
        (0..n)
            .map(|y| inf_owned((0..n).map(|x| g[x].add(space.d(x, y)))))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::fixtures::*;

    fn vals(xs: &[&str]) -> Vec<ExtVal> {
        xs.iter().map(|s| s.parse().unwrap()).collect()
    }

    fn w(xs: &[&str]) -> Weight {
        Weight::new_unchecked(vals(xs))
    }

    #[test]
    fn weight_checks() {
        assert_eq!(check_weight(&sym2(), vals(&["0", "1"])), Ok(representable(&sym2(), 0)));
        assert_eq!(
            check_weight(&sym2(), vals(&["0", "5"])),
            Err(WeightError::LawViolation(vec![(1, 0)]))
        );
        assert!(check_weight(&zc2(), vals(&["0", "0"])).is_ok());
        assert!(matches!(
            check_weight(&zc2(), vals(&["0"])),
            Err(WeightError::LengthMismatch { .. })
        ));
        assert!(check_coweight(&sym2(), vals(&["0", "1"])).is_ok());
        assert!(check_coweight(&sym2(), vals(&["5", "0"])).is_err());
    }

    #[test]
    fn representables() {
        assert_eq!(representable(&sym2(), 0), w(&["0", "1"]));
        assert_eq!(representable(&sier(), 1), w(&["0", "0"]));
        assert_eq!(representable(&zc2(), 0), w(&["0", "0"]));
    }

    #[test]
    fn sup_metric_examples() {
        let s = sym2();
        let phi = w(&["1/2", "1"]);
        assert_eq!(sup_metric(&representable(&s, 0), &phi), "1/2".parse().unwrap());
        assert_eq!(
            sup_metric(&representable(&s, 0), &representable(&s, 1)),
            ExtVal::from_int(1)
        );
        assert!(sup_metric(&phi, &phi).is_zero());
    }

    #[test]
    fn tensor_examples() {
        let s = sym2();
        assert!(tensor(&representable(&s, 1), &corepresentable(&s, 1)).is_zero());
        let psi = Coweight::new_unchecked(vals(&["1", "0"]));
        assert_eq!(tensor(&w(&["0", "1"]), &psi), ExtVal::from_int(1));
        assert_eq!(tensor(&w(&["inf", "inf"]), &psi), ExtVal::inf());
        assert_eq!(
            tensor(&w(&["inf", "2"]), &psi),
            ExtVal::from_int(2)
        );
    }

    #[test]
    fn left_adjoint_examples() {
        let s = sym2();
        for x in 0..2 {
            assert_eq!(
                left_adjoint_candidate(&s, &representable(&s, x)),
                corepresentable(&s, x)
            );
        }
        assert_eq!(
            left_adjoint_candidate(&zc2(), &w(&["0", "0"])).values(),
            &vals(&["0", "0"])[..]
        );
        assert_eq!(
            left_adjoint_candidate(&s, &w(&["0", "1"])).values(),
            &vals(&["0", "1"])[..]
        );
    }

    #[test]
    fn cauchy_examples() {
        let s = sym2();
        assert!(is_cauchy(&s, &representable(&s, 0)).is_cauchy());
        assert!(is_cauchy(&s, &representable(&s, 1)).is_cauchy());

        // d(a,b)=1, d(b,a)=∞, φ=(1/2,3/2): candidate is (∞, 1/2), tensor 2
        let s = FiniteSpace::from_rows(&["a", "b"], &[&["0", "1"], &["inf", "0"]]);
        let phi = check_weight(&s, vals(&["1/2", "3/2"])).unwrap();
        let check = is_cauchy(&s, &phi);
        assert_eq!(check.candidate.values(), &vals(&["inf", "1/2"])[..]);
        assert_eq!(
            check.failure,
            Some(AdjunctionFailure::TensorNonzero(ExtVal::from_int(2)))
        );
        // brute force: no coweight on the value grid is a left adjoint
        let grid = vals(&["0", "1/2", "1", "3/2", "2", "inf"]);
        for a in &grid {
            for b in &grid {
                let psi = Coweight::new_unchecked(vec![a.clone(), b.clone()]);
                if check_coweight(&s, psi.values().to_vec()).is_ok() {
                    assert!(adjunction_failure(&s, &phi, &psi).is_some());
                }
            }
        }
    }

    #[test]
    fn flat_examples() {
        assert!(is_flat(&zc2(), &w(&["0", "0"])));
        assert_eq!(
            flat_failure(&sym2(), &w(&["0", "0"])),
            Some(FlatFailure::NoJointApproximant { x1: 0, x2: 1 })
        );
        for s in [sier(), zc2(), sym2()] {
            for x in 0..s.len() {
                assert!(is_flat(&s, &representable(&s, x)));
            }
        }
        assert!(matches!(
            flat_failure(&sym2(), &w(&["1", "1"])),
            Some(FlatFailure::NonzeroInfimum(_))
        ));
    }

    #[test]
    fn pushforward_and_pullback() {
        let s = sym2();
        let id = SpaceMap::identity(&s);
        let phi = w(&["1/2", "1"]);
        assert_eq!(pushforward(&id, &phi).unwrap(), phi);
        assert_eq!(pullback_weight(&id, &phi).unwrap(), phi);

        let to_sier = SpaceMap::new(s.clone(), sier(), vec![1, 1]).unwrap();
        for x in 0..2 {
            assert_eq!(
                pushforward(&to_sier, &representable(&s, x)).unwrap(),
                representable(&sier(), 1)
            );
        }
        let bad = SpaceMap::new(sier(), s.clone(), vec![0, 1]).unwrap();
        assert_eq!(pushforward(&bad, &phi), Err(WeightError::NotNonexpansive));

        // isometric embedding of the one-point space at b
        let point = FiniteSpace::from_rows(&["p"], &[&["0"]]);
        let embed = SpaceMap::new(point.clone(), s.clone(), vec![1]).unwrap();
        assert!(embed.check_isometric());
        assert_eq!(
            pullback_weight(&embed, &representable(&s, 1)).unwrap(),
            representable(&point, 0)
        );
    }

    #[test]
    fn coreflection_examples() {
        let s = sym2();
        assert_eq!(weight_coreflection(&s, &vals(&["0", "5"])), w(&["0", "1"]));
        let phi = w(&["1/2", "1"]);
        assert_eq!(weight_coreflection(&s, phi.values()), phi);
        assert_eq!(
            weight_coreflection(&s, &vals(&["inf", "inf"])),
            w(&["inf", "inf"])
        );
    }
}
