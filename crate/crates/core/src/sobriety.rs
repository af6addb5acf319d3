//! Approach primes, sobriety, and the sobrification of a finite approach
//! space.
//!
//! Regular functions of a finite approach space are exactly the weights of
//! its specialization metric (the (A3) collapse makes the space metric), so
//! the largest regular function below an arbitrary vector is the weight
//! coreflection of that vector.

use thiserror::Error;

use crate::approach::{alexandroff, check_contraction, regular_violation, specialization, FiniteApproach};
use crate::extarith::{inf_owned, ExtVal};
use crate::space::FiniteSpace;
use crate::subset::Subset;
use crate::weights::{is_flat, sup_distance, weight_coreflection, Weight};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SobrietyError {
    #[error("vector has {got} entries, carrier has {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("function is not regular (fails at point {x}, subset {a:?})")]
    NotRegular { x: usize, a: Subset },
    #[error("infimum is {0}, not 0")]
    InfimumNotZero(ExtVal),
    #[error("target space is not sober")]
    TargetNotSober,
    #[error("map is not a contraction")]
    NotContraction,
    #[error("extension value of prime {0} is not represented by a target point")]
    UnrepresentedPrime(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrimeStatus {
    Prime,
    /// Regular `ξ, ψ` with `min{ξ,ψ} ≤ φ`, `ξ ≰ φ` and `ψ ≰ φ`, obtained from
    /// the split `U` of the carrier.
    Counterexample { xi: Weight, psi: Weight, split: Subset },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeWitness {
    pub phi: Weight,
    pub status: PrimeStatus,
}

impl PrimeWitness {
    pub fn is_prime(&self) -> bool {
        self.status == PrimeStatus::Prime
    }
}

/// The largest regular function below `φ` raised to `∞` on `raised`.
fn raised_coreflection(metric: &FiniteSpace, phi: &[ExtVal], raised: Subset) -> Weight {
    let g: Vec<ExtVal> = phi
        .iter()
        .enumerate()
        .map(|(x, v)| if raised.contains(x) { ExtVal::inf() } else { v.clone() })
        .collect();
    weight_coreflection(metric, &g)
}

/// Decides whether `φ` is an approach prime.
///
/// For every nonempty proper `U`, let `ξ_U` be the largest regular function
/// below `φ` raised to `∞` on `U`. The pair `(ξ_U, ξ_{U^c})` always has
/// `min ≤ φ`. Conversely, any counterexample pair `(ξ, ψ)` has disjoint
/// exceed-sets `E_ξ`, `E_ψ`; taking `U = E_ξ` gives `ξ ≤ ξ_U` and
/// `ψ ≤ ξ_{U^c}`, so neither lies below `φ`. Hence `φ` is prime iff every
/// split has `ξ_U ≤ φ` or `ξ_{U^c} ≤ φ`.
pub fn prime_oracle(space: &FiniteApproach, phi: &[ExtVal]) -> Result<PrimeWitness, SobrietyError> {
    let n = space.len();
    if phi.len() != n {
        return Err(SobrietyError::LengthMismatch {
            expected: n,
            got: phi.len(),
        });
    }
    if let Some((x, a)) = regular_violation(space, phi) {
        return Err(SobrietyError::NotRegular { x, a });
    }
    let inf = inf_owned(phi.iter().cloned());
    if !inf.is_zero() {
        return Err(SobrietyError::InfimumNotZero(inf));
    }
    let metric = specialization(space);
    let below = Weight::new_unchecked(phi.to_vec());
    let full = Subset::full(n);
    for u in Subset::all(n).filter(|u| !u.is_empty() && *u != full) {
        let xi = raised_coreflection(&metric, phi, u);
        if xi.le(&below) {
            continue;
        }
        let psi = raised_coreflection(&metric, phi, u.complement(n));
        if !psi.le(&below) {
            return Ok(PrimeWitness {
                phi: below,
                status: PrimeStatus::Counterexample { xi, psi, split: u },
            });
        }
    }
    Ok(PrimeWitness {
        phi: below,
        status: PrimeStatus::Prime,
    })
}

/// `η(x) = δ(−,{x})`.
pub fn eta(space: &FiniteApproach, x: usize) -> Weight {
    Weight::new_unchecked((0..space.len()).map(|y| space.delta_single(y, x).clone()).collect())
}

/// All approach primes, in order of first occurrence among `η(x)`.
///
/// Primes of a finite approach space are the flat weights of its
/// specialization metric, and those arise from eventually constant-on-a-
/// zero-clique nets, i.e. as some `η(x)`. Each candidate is re-verified with
/// the flatness classifier and the prime oracle.
pub fn enumerate_primes(space: &FiniteApproach) -> Vec<Weight> {
    let metric = specialization(space);
    let mut primes: Vec<Weight> = Vec::new();
    for x in 0..space.len() {
        let candidate = eta(space, x);
        if primes.contains(&candidate) || !is_flat(&metric, &candidate) {
            continue;
        }
        let oracle = prime_oracle(space, candidate.values())
            .expect("representable candidates are regular with zero infimum");
        assert!(
            oracle.is_prime(),
            "flat classifier and prime oracle disagree on {candidate:?}"
        );
        primes.push(candidate);
    }
    primes
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SoberWitness {
    pub prime: Weight,
    /// Points `x` with `η(x)` equal to the prime; empty or at least two.
    pub preimages: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SoberCheck {
    pub sober: bool,
    pub witness: Option<SoberWitness>,
}

pub fn is_sober(space: &FiniteApproach) -> SoberCheck {
    for prime in enumerate_primes(space) {
        let preimages: Vec<usize> = (0..space.len()).filter(|&x| eta(space, x) == prime).collect();
        if preimages.len() != 1 {
            return SoberCheck {
                sober: false,
                witness: Some(SoberWitness { prime, preimages }),
            };
        }
    }
    SoberCheck {
        sober: true,
        witness: None,
    }
}

/// `ξ̂(φ) = sup_x d_L(φ(x), ξ(x))`.
pub fn widehat(xi: &[ExtVal], phi: &Weight) -> ExtVal {
    sup_distance(phi.values(), xi)
}

/// The sobrification of a finite approach space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sobrification {
    pub primes: Vec<Weight>,
    /// Specialization metric of the sobrification, `dist(φ,ξ) = ξ̂(φ)`.
    pub space: FiniteSpace,
    /// `eta[x]` is the index of `δ(−,{x})` in `primes`.
    pub eta: Vec<usize>,
}

impl Sobrification {
    /// The approach structure, materialized from the specialization metric.
    pub fn approach(&self) -> FiniteApproach {
        alexandroff(&self.space)
    }

    /// `δ̂(φ, A)` computed from regular functions: the best regular function
    /// vanishing (under `^`) on all of `A` is the pointwise minimum of `A`,
    /// so `δ̂(φ,A) = sup_x d_L(φ(x), min_{ξ∈A} ξ(x))`.
    pub fn delta_hat(&self, phi: usize, a: Subset) -> ExtVal {
        let n = self.primes.first().map_or(0, |p| p.len());
        let meet: Vec<ExtVal> = (0..n)
            .map(|x| inf_owned(a.iter().map(|i| self.primes[i].get(x).clone())))
            .collect();
        widehat(&meet, &self.primes[phi])
    }

    /// Whether the structure given by [`Sobrification::delta_hat`] agrees with
    /// the Alexandroff structure of the specialization metric on every
    /// `(prime, subset)` pair.
    pub fn collapse_holds(&self) -> bool {
        let approach = self.approach();
        let k = self.primes.len();
        (0..k).all(|p| Subset::all(k).all(|a| self.delta_hat(p, a) == approach.delta(p, a)))
    }
}

fn prime_names(space: &FiniteApproach, eta: &[usize], k: usize) -> Vec<String> {
    (0..k)
        .map(|i| {
            let members: Vec<&str> = (0..space.len())
                .filter(|&x| eta[x] == i)
                .map(|x| space.points()[x].as_str())
                .collect();
            if members.is_empty() {
                format!("p{i}")
            } else {
                members.join("~")
            }
        })
        .collect()
}

pub fn sobrify(space: &FiniteApproach) -> Sobrification {
    let primes = enumerate_primes(space);
    let eta: Vec<usize> = (0..space.len())
        .map(|x| {
            let e = eta(space, x);
            primes
                .iter()
                .position(|p| *p == e)
                .expect("every η(x) is prime")
        })
        .collect();
    let k = primes.len();
    let dist = (0..k)
        .flat_map(|i| (0..k).map(move |j| (i, j)))
        .map(|(i, j)| widehat(primes[j].values(), &primes[i]))
        .collect();
    let metric = FiniteSpace::validate_flat(prime_names(space, &eta, k), dist)
        .expect("sup metric on primes satisfies the metric axioms");
    Sobrification {
        primes,
        space: metric,
        eta,
    }
}

/// `f†(φ)(y) = inf_x (φ(x) + ρ(y, {f(x)}))`, the largest regular function
/// `ψ` on the target with `ψ ∘ f ≤ φ`.
pub fn extension_value(f: &[usize], target: &FiniteApproach, phi: &Weight) -> Weight {
    Weight::new_unchecked(
        (0..target.len())
            .map(|y| {
                inf_owned(
                    phi.values()
                        .iter()
                        .zip(f)
                        .map(|(v, &fx)| v.add(target.delta_single(y, fx))),
                )
            })
            .collect(),
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalExtension {
    pub sobrification: Sobrification,
    /// Image in the target of each prime of the source.
    pub map: Vec<usize>,
}

/// Extends a contraction into a sober space along `η` of the source.
pub fn universal_extension(
    f: &[usize],
    source: &FiniteApproach,
    target: &FiniteApproach,
) -> Result<UniversalExtension, SobrietyError> {
    if !is_sober(target).sober {
        return Err(SobrietyError::TargetNotSober);
    }
    if f.len() != source.len() || f.iter().any(|&y| y >= target.len()) {
        return Err(SobrietyError::NotContraction);
    }
    if !check_contraction(f, source, target).holds() {
        return Err(SobrietyError::NotContraction);
    }
    let sobrification = sobrify(source);
    let map = sobrification
        .primes
        .iter()
        .enumerate()
        .map(|(i, phi)| {
            let value = extension_value(f, target, phi);
            (0..target.len())
                .find(|&y| eta(target, y) == value)
                .ok_or(SobrietyError::UnrepresentedPrime(i))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(UniversalExtension { sobrification, map })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::fixtures::*;

    fn vals(xs: &[&str]) -> Vec<ExtVal> {
        xs.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn oracle_examples() {
        for s in [sier(), zc2(), sym2()] {
            let a = alexandroff(&s);
            for x in 0..s.len() {
                assert!(prime_oracle(&a, eta(&a, x).values()).unwrap().is_prime());
            }
        }
        assert!(prime_oracle(&alexandroff(&zc2()), &vals(&["0", "0"]))
            .unwrap()
            .is_prime());

        let w = prime_oracle(&alexandroff(&sym2()), &vals(&["0", "0"])).unwrap();
        let PrimeStatus::Counterexample { xi, psi, .. } = w.status else {
            panic!("expected a counterexample")
        };
        let mut pair = [xi.into_values(), psi.into_values()];
        pair.sort();
        assert_eq!(pair, [vals(&["0", "1"]), vals(&["1", "0"])]);
    }

    #[test]
    fn oracle_errors() {
        let a = alexandroff(&sym2());
        assert!(matches!(
            prime_oracle(&a, &vals(&["0", "5"])),
            Err(SobrietyError::NotRegular { .. })
        ));
        assert_eq!(
            prime_oracle(&a, &vals(&["1", "1"])),
            Err(SobrietyError::InfimumNotZero(ExtVal::from_int(1)))
        );
        assert!(matches!(
            prime_oracle(&a, &vals(&["0"])),
            Err(SobrietyError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn prime_enumeration() {
        let a = alexandroff(&sym2());
        assert_eq!(
            enumerate_primes(&a),
            vec![Weight::new_unchecked(vals(&["0", "1"])), Weight::new_unchecked(vals(&["1", "0"]))]
        );
        assert_eq!(
            enumerate_primes(&alexandroff(&zc2())),
            vec![Weight::new_unchecked(vals(&["0", "0"]))]
        );
        let one = alexandroff(&FiniteSpace::from_rows(&["p"], &[&["0"]]));
        assert_eq!(enumerate_primes(&one).len(), 1);
    }

    #[test]
    fn sobriety_examples() {
        assert!(is_sober(&alexandroff(&sym2())).sober);
        assert!(is_sober(&alexandroff(&sier())).sober);
        let check = is_sober(&alexandroff(&zc2()));
        assert!(!check.sober);
        assert_eq!(check.witness.unwrap().preimages, vec![0, 1]);
    }

    #[test]
    fn sobrification_examples() {
        let s = sobrify(&alexandroff(&zc2()));
        assert_eq!(s.space.len(), 1);
        assert_eq!(s.eta, vec![0, 0]);
        assert_eq!(s.space.point(0), "a~b");
        assert!(is_sober(&s.approach()).sober);

        let s = sobrify(&alexandroff(&sym2()));
        assert_eq!(s.eta, vec![0, 1]);
        assert_eq!(s.space.matrix(), sym2().matrix());
        assert!(s.collapse_holds());

        let a = alexandroff(&sier());
        let s = sobrify(&a);
        for (i, phi) in s.primes.iter().enumerate() {
            for x in 0..a.len() {
                assert_eq!(s.space.d(s.eta[x], i), phi.get(x));
            }
        }
    }

    #[test]
    fn extension_examples() {
        let z = alexandroff(&zc2());
        let point = alexandroff(&FiniteSpace::from_rows(&["p"], &[&["0"]]));
        let ext = universal_extension(&[0, 0], &z, &point).unwrap();
        assert_eq!(ext.map, vec![0]);

        let s = alexandroff(&sier());
        let ext = universal_extension(&[0, 0], &z, &s).unwrap();
        assert_eq!(ext.map, vec![0]);
        for x in 0..2 {
            assert_eq!(ext.map[ext.sobrification.eta[x]], 0);
        }

        // η into its own sobrification extends to the identity
        let a = alexandroff(&sier());
        let sob = sobrify(&a);
        let ext = universal_extension(&sob.eta, &a, &sob.approach()).unwrap();
        assert_eq!(ext.map, (0..sob.primes.len()).collect::<Vec<_>>());

        assert_eq!(
            universal_extension(&[0, 1], &s, &z),
            Err(SobrietyError::TargetNotSober)
        );
        assert_eq!(
            universal_extension(&[0, 1], &z, &alexandroff(&sym2())),
            Err(SobrietyError::NotContraction)
        );
    }
}
