//! Nets, Yoneda limits, the Yoneda completion, and Smyth completeness on
//! finite carriers.
//!
//! Nets are sequence-shaped and eventually periodic: a finite preperiod
//! followed by a nonempty cycle repeated forever. On a finite carrier every
//! flat weight is the weight of such a net (take a constant net at a point of
//! the zero-clique representing it), so nothing is lost by the restriction.

use thiserror::Error;

use crate::extarith::{inf_owned, sup_of, sup_owned, ExtVal};
use crate::space::FiniteSpace;
use crate::weights::{is_cauchy, is_flat, representable, sup_metric, Weight};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CompletionError {
    #[error("net has an empty cycle")]
    EmptyCycle,
    #[error("net refers to point index {0}, outside the carrier")]
    OutOfRange(usize),
    #[error("net is not forward Cauchy")]
    NotForwardCauchy,
}

/// An eventually periodic net `x_0, x_1, ...` of point indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Net {
    preperiod: Vec<usize>,
    cycle: Vec<usize>,
}

impl Net {
    pub fn new(space: &FiniteSpace, preperiod: Vec<usize>, cycle: Vec<usize>) -> Result<Self, CompletionError> {
        if cycle.is_empty() {
            return Err(CompletionError::EmptyCycle);
        }
        if let Some(&bad) = preperiod.iter().chain(&cycle).find(|&&x| x >= space.len()) {
            return Err(CompletionError::OutOfRange(bad));
        }
        Ok(Net { preperiod, cycle })
    }

    pub fn constant(x: usize) -> Self {
        Net {
            preperiod: Vec::new(),
            cycle: vec![x],
        }
    }

    pub fn preperiod(&self) -> &[usize] {
        &self.preperiod
    }

    pub fn cycle(&self) -> &[usize] {
        &self.cycle
    }

    /// The point at index `i`.
    pub fn at(&self, i: usize) -> usize {
        let p = self.preperiod.len();
        if i < p {
            self.preperiod[i]
        } else {
            self.cycle[(i - p) % self.cycle.len()]
        }
    }

    /// Length of the prefix used by the direct evaluations.
    pub fn horizon(&self) -> usize {
        3 * (self.preperiod.len() + self.cycle.len())
    }
}

/// `inf_λ sup_{σ≥λ} a_σ` of an eventually periodic sequence: the maximum
/// over the cycle.
pub fn tail_limsup(cycle: &[ExtVal]) -> ExtVal {
    sup_of(cycle)
}

/// `sup_λ inf_{σ≥λ} a_σ` of an eventually periodic sequence: the minimum
/// over the cycle.
pub fn tail_liminf(cycle: &[ExtVal]) -> ExtVal {
    crate::extarith::inf_of(cycle)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct NetClass {
    pub forward_cauchy: bool,
    pub bicauchy: bool,
}

/// Direct evaluation of both Cauchy conditions over the prefix of length
/// [`Net::horizon`], with `λ` ranging over one preperiod plus one cycle so
/// that every tail window contains at least two full cycles.
pub fn classify_net_direct(space: &FiniteSpace, net: &Net) -> NetClass {
    let h = net.horizon();
    let start_max = net.preperiod.len() + net.cycle.len();
    let tail_sup = |lambda: usize, forward: bool| {
        let mut best = ExtVal::zero();
        for mu in lambda..h {
            let from = if forward { mu } else { lambda };
            for nu in from..h {
                best = best.max_with(space.d(net.at(mu), net.at(nu)));
            }
        }
        best
    };
    let forward = inf_owned((0..=start_max).map(|l| tail_sup(l, true)));
    let bi = inf_owned((0..=start_max).map(|l| tail_sup(l, false)));
    NetClass {
        forward_cauchy: forward.is_zero(),
        bicauchy: bi.is_zero(),
    }
}

/// Both conditions reduce to the cycle being a mutual-zero clique: every
/// ordered pair of cycle points recurs cofinally in both orders. The
/// reduction is checked against [`classify_net_direct`].
pub fn classify_net(space: &FiniteSpace, net: &Net) -> NetClass {
    let clique = net
        .cycle
        .iter()
        .all(|&a| net.cycle.iter().all(|&b| space.d(a, b).is_zero()));
    let class = NetClass {
        forward_cauchy: clique,
        bicauchy: clique,
    };
    assert_eq!(
        class,
        classify_net_direct(space, net),
        "periodic reduction disagrees with direct evaluation"
    );
    class
}

/// `φ(x) = inf_λ sup_{σ≥λ} d(x, x_σ)`.
pub fn net_weight(space: &FiniteSpace, net: &Net) -> Result<Weight, CompletionError> {
    if !classify_net(space, net).forward_cauchy {
        return Err(CompletionError::NotForwardCauchy);
    }
    Ok(Weight::new_unchecked(
        (0..space.len())
            .map(|x| {
                let row: Vec<ExtVal> = net.cycle.iter().map(|&c| space.d(x, c).clone()).collect();
                tail_limsup(&row)
            })
            .collect(),
    ))
}

/// All points `a` with `d(a,y) = inf_λ sup_{σ≥λ} d(x_σ, y)` for every `y`.
pub fn yoneda_limits(space: &FiniteSpace, net: &Net) -> Vec<usize> {
    let n = space.len();
    let target: Vec<ExtVal> = (0..n)
        .map(|y| {
            let col: Vec<ExtVal> = net.cycle.iter().map(|&c| space.d(c, y).clone()).collect();
            tail_limsup(&col)
        })
        .collect();
    (0..n)
        .filter(|&a| (0..n).all(|y| *space.d(a, y) == target[y]))
        .collect()
}

/// All points `a` with `d̄(φ, d(−,y)) = d(a,y)` for every `y`.
pub fn colimits(space: &FiniteSpace, phi: &Weight) -> Vec<usize> {
    let n = space.len();
    let target: Vec<ExtVal> = (0..n).map(|y| sup_metric(phi, &representable(space, y))).collect();
    (0..n)
        .filter(|&a| (0..n).all(|y| *space.d(a, y) == target[y]))
        .collect()
}

/// Every flat weight, one per zero-clique, each re-verified by the flatness
/// classifier.
pub fn flat_weights(space: &FiniteSpace) -> Vec<Weight> {
    space
        .zero_cliques()
        .iter()
        .map(|clique| {
            let phi = representable(space, clique[0]);
            assert!(is_flat(space, &phi), "representable weight failed flatness");
            phi
        })
        .collect()
}

pub fn yoneda_complete_check(space: &FiniteSpace) -> bool {
    flat_weights(space).iter().all(|phi| !colimits(space, phi).is_empty())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompletionResult {
    /// Carrier of flat weights under the sup metric.
    pub completed: FiniteSpace,
    pub weights: Vec<Weight>,
    /// `embedding[x]` is the index of `d(−,x)` among the flat weights.
    pub embedding: Vec<usize>,
    pub iso_flag: bool,
}

impl CompletionResult {
    pub fn is_bijective(&self) -> bool {
        self.embedding.len() == self.weights.len()
    }
}

pub fn yoneda_completion(space: &FiniteSpace) -> CompletionResult {
    let classes = space.zero_cliques();
    let weights = flat_weights(space);
    let mut embedding = vec![0; space.len()];
    for (c, members) in classes.iter().enumerate() {
        for &m in members {
            embedding[m] = c;
        }
    }
    let names = classes
        .iter()
        .map(|members| {
            members
                .iter()
                .map(|&m| space.point(m))
                .collect::<Vec<_>>()
                .join("~")
        })
        .collect();
    let k = weights.len();
    let dist = (0..k)
        .flat_map(|i| (0..k).map(move |j| (i, j)))
        .map(|(i, j)| sup_metric(&weights[i], &weights[j]))
        .collect();
    let completed = FiniteSpace::validate_flat(names, dist).expect("sup metric satisfies the metric axioms");
    assert!(completed.classify().separated, "completion is not separated");
    for x in 0..space.len() {
        for y in 0..space.len() {
            assert_eq!(
                completed.d(embedding[x], embedding[y]),
                space.d(x, y),
                "Yoneda embedding is not isometric"
            );
        }
    }
    let iso_flag = k == space.len();
    CompletionResult {
        completed,
        weights,
        embedding,
        iso_flag,
    }
}

/// Whether completing the completion yields a bijective embedding.
pub fn completion_idempotent(result: &CompletionResult) -> bool {
    yoneda_completion(&result.completed).iso_flag
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct SmythFlags {
    pub complete: bool,
    pub completable: bool,
}

/// Smyth completeness via flat weights: complete when each flat weight has
/// exactly one representing point, completable when each is Cauchy.
pub fn smyth_classify(space: &FiniteSpace) -> SmythFlags {
    let flats = flat_weights(space);
    let complete = flats.iter().all(|phi| {
        (0..space.len())
            .filter(|&x| representable(space, x) == *phi)
            .count()
            == 1
    });
    assert_eq!(
        complete,
        space.classify().separated,
        "unique representation disagrees with separation"
    );
    let completable = flats.iter().all(|phi| is_cauchy(space, phi).is_cauchy());
    SmythFlags { complete, completable }
}

/// All cycles of length at most `max_len` over an `n`-point carrier.
pub fn cycles(n: usize, max_len: usize) -> impl Iterator<Item = Vec<usize>> {
    (1..=max_len).flat_map(move |len| {
        let total = n.pow(len as u32);
        (0..total).map(move |mut code| {
            let mut cycle = Vec::with_capacity(len);
            for _ in 0..len {
                cycle.push(code % n);
                code /= n;
            }
            cycle
        })
    })
}

/// Smyth completeness via nets, over every cycle of length at most
/// `max_cycle`: complete when the space is separated and every forward
/// Cauchy net converges in the symmetrization, completable when every
/// forward Cauchy net is biCauchy.
pub fn smyth_classify_nets(space: &FiniteSpace, max_cycle: usize) -> SmythFlags {
    let n = space.len();
    let sym = space.symmetrization();
    let mut converges = true;
    let mut completable = true;
    for cycle in cycles(n, max_cycle) {
        let net = Net::new(space, Vec::new(), cycle).expect("indices are in range");
        let class = classify_net(space, &net);
        if !class.forward_cauchy {
            continue;
        }
        completable &= class.bicauchy;
        let limit_exists = (0..n).any(|a| {
            let tail: Vec<ExtVal> = net.cycle.iter().map(|&c| sym.d(c, a).clone()).collect();
            tail_limsup(&tail).is_zero()
        });
        converges &= limit_exists;
    }
    SmythFlags {
        complete: space.classify().separated && converges,
        completable,
    }
}

/// `inf_λ sup_{μ≥λ} φ_μ` for an eventually periodic net of weights.
pub fn weight_net_limit(cycle: &[Weight]) -> Weight {
    let n = cycle.first().map_or(0, Weight::len);
    Weight::new_unchecked(
        (0..n)
            .map(|x| sup_owned(cycle.iter().map(|w| w.get(x).clone())))
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

    #[test]
    fn net_classification() {
        let z = zc2();
        let s = sym2();
        let cyc = |sp: &FiniteSpace| Net::new(sp, vec![], vec![0, 1]).unwrap();
        assert_eq!(
            classify_net(&z, &cyc(&z)),
            NetClass {
                forward_cauchy: true,
                bicauchy: true
            }
        );
        assert_eq!(
            classify_net(&s, &cyc(&s)),
            NetClass {
                forward_cauchy: false,
                bicauchy: false
            }
        );
        let c = classify_net(&s, &Net::new(&s, vec![1, 0], vec![0]).unwrap());
        assert!(c.forward_cauchy && c.bicauchy);
        assert_eq!(Net::new(&s, vec![], vec![]), Err(CompletionError::EmptyCycle));
        assert_eq!(Net::new(&s, vec![2], vec![0]), Err(CompletionError::OutOfRange(2)));
    }

    #[test]
    fn net_weights_and_limits() {
        let z = zc2();
        let net = Net::new(&z, vec![], vec![0, 1]).unwrap();
        assert_eq!(net_weight(&z, &net).unwrap().values(), vals(&["0", "0"]));
        assert_eq!(yoneda_limits(&z, &net), vec![0, 1]);

        let s = sym2();
        let net = Net::new(&s, vec![], vec![0, 1]).unwrap();
        assert_eq!(net_weight(&s, &net), Err(CompletionError::NotForwardCauchy));
        assert!(yoneda_limits(&s, &net).is_empty());
        assert_eq!(
            net_weight(&s, &Net::constant(1)).unwrap(),
            representable(&s, 1)
        );
        assert_eq!(yoneda_limits(&s, &Net::constant(1)), vec![1]);
    }

    #[test]
    fn colimit_examples() {
        let s = sym2();
        assert!(yoneda_complete_check(&s));
        assert_eq!(colimits(&s, &representable(&s, 0)), vec![0]);
        let z = zc2();
        assert!(yoneda_complete_check(&z));
        assert_eq!(colimits(&z, &Weight::new_unchecked(vals(&["0", "0"]))), vec![0, 1]);
    }

    #[test]
    fn completion_examples() {
        let r = yoneda_completion(&zc2());
        assert_eq!(r.completed.len(), 1);
        assert_eq!(r.embedding, vec![0, 0]);
        assert!(!r.iso_flag);
        assert!(completion_idempotent(&r));

        let r = yoneda_completion(&sym2());
        assert_eq!(r.completed.len(), 2);
        assert!(r.iso_flag && r.is_bijective());
        assert_eq!(r.completed.matrix(), sym2().matrix());

        let r = yoneda_completion(&sier());
        assert!(r.iso_flag);
    }

    #[test]
    fn smyth_examples() {
        for (s, complete) in [(sym2(), true), (zc2(), false), (sier(), true)] {
            let flags = smyth_classify(&s);
            assert_eq!(flags, SmythFlags { complete, completable: true });
            assert_eq!(smyth_classify_nets(&s, s.len().min(4)), flags);
        }
    }

    #[test]
    fn periodic_tails() {
        let cycle = vals(&["1", "0", "2"]);
        assert_eq!(tail_limsup(&cycle), ExtVal::from_int(2));
        assert_eq!(tail_liminf(&cycle), ExtVal::zero());
        assert_eq!(cycles(2, 2).count(), 6);
    }
}
