//! Closed-form exemplars on the extended half-line `[0, ∞]`.
//!
//! Subsets of `[0, ∞]` enter only through their supremum, whether they
//! contain `∞`, and whether they are empty, since the point-to-set
//! distances below depend on nothing else. Sequences are finite
//! descriptions: an explicit prefix followed by a closed-form tail.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::extarith::{parse_signed_rational, ExtVal};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HalfLineError {
    #[error("subset attributes are inconsistent")]
    InconsistentSubset,
    #[error("subset is empty")]
    EmptySubset,
    #[error("unclassifiable description: {0}")]
    UnclassifiableDescription(String),
    #[error("sequence is not forward Cauchy")]
    NotForwardCauchy,
    #[error("malformed description: {0}")]
    Parse(String),
}

/// A point of `[0, ∞]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct HalfLinePoint(pub ExtVal);

impl From<ExtVal> for HalfLinePoint {
    fn from(v: ExtVal) -> Self {
        HalfLinePoint(v)
    }
}

/// The attributes of `A ⊆ [0, ∞]` that the exemplar distances see.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbstractSubset {
    sup: ExtVal,
    contains_infinity: bool,
    nonempty: bool,
}

impl AbstractSubset {
    pub fn new(sup: ExtVal, contains_infinity: bool, nonempty: bool) -> Result<Self, HalfLineError> {
        let consistent = if nonempty {
            !contains_infinity || sup.is_infinite()
        } else {
            sup.is_zero() && !contains_infinity
        };
        if !consistent {
            return Err(HalfLineError::InconsistentSubset);
        }
        Ok(AbstractSubset {
            sup,
            contains_infinity,
            nonempty,
        })
    }

    pub fn empty() -> Self {
        AbstractSubset {
            sup: ExtVal::zero(),
            contains_infinity: false,
            nonempty: false,
        }
    }

    /// Attributes of a finite nonempty set of points.
    pub fn of_points(points: &[ExtVal]) -> Self {
        match points.iter().max() {
            None => Self::empty(),
            Some(sup) => AbstractSubset {
                sup: sup.clone(),
                contains_infinity: sup.is_infinite(),
                nonempty: true,
            },
        }
    }

    pub fn sup(&self) -> &ExtVal {
        &self.sup
    }

    pub fn contains_infinity(&self) -> bool {
        self.contains_infinity
    }

    pub fn is_nonempty(&self) -> bool {
        self.nonempty
    }
}

/// The approach distance of `ℙ`: `x ⊖ sup A`, and `∞` on the empty set.
pub fn delta_p(x: &HalfLinePoint, a: &AbstractSubset) -> ExtVal {
    if !a.nonempty {
        return ExtVal::inf();
    }
    x.0.monus(&a.sup)
}

/// The Alexandroff distance of `d_R`: `inf_{a∈A} (x ⊖ a)`.
pub fn gamma_dr(x: &HalfLinePoint, a: &AbstractSubset) -> ExtVal {
    if !a.nonempty {
        ExtVal::inf()
    } else if x.0.is_finite() {
        x.0.monus(&a.sup)
    } else if a.contains_infinity {
        ExtVal::zero()
    } else {
        ExtVal::inf()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum HalfMetric {
    /// `d_L(a,b) = b ⊖ a`.
    DL,
    /// `d_R(a,b) = a ⊖ b`.
    DR,
}

impl HalfMetric {
    pub fn d(self, a: &ExtVal, b: &ExtVal) -> ExtVal {
        match self {
            HalfMetric::DL => b.monus(a),
            HalfMetric::DR => a.monus(b),
        }
    }

    pub fn opposite(self) -> HalfMetric {
        match self {
            HalfMetric::DL => HalfMetric::DR,
            HalfMetric::DR => HalfMetric::DL,
        }
    }
}

impl FromStr for HalfMetric {
    type Err = HalfLineError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dL" => Ok(HalfMetric::DL),
            "dR" => Ok(HalfMetric::DR),
            other => Err(HalfLineError::Parse(format!("unknown metric `{other}`"))),
        }
    }
}

/// Closed-form tail of a sequence, indexed by the global index `n ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tail {
    Const(ExtVal),
    /// `a + b·n`.
    Affine { a: BigRational, b: BigRational },
    /// `limit + c/n`.
    Harmonic { limit: BigRational, c: BigRational },
    /// Listed strictly increasing values, continued by the last increment.
    Diverge(Vec<BigRational>),
}

/// A sequence `x_1, x_2, ...` in `[0, ∞]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSeq {
    prefix: Vec<ExtVal>,
    tail: Tail,
}

fn rat(n: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn finite(r: BigRational) -> ExtVal {
    ExtVal::from_rational(r).expect("validated descriptions have nonnegative terms")
}

impl RationalSeq {
    pub fn new(prefix: Vec<ExtVal>, tail: Tail) -> Result<Self, HalfLineError> {
        let first = rat(prefix.len() + 1);
        let bad = |why: &str| Err(HalfLineError::UnclassifiableDescription(why.to_string()));
        match &tail {
            Tail::Const(_) => {}
            Tail::Affine { a, b } => {
                if b.is_negative() {
                    return bad("affine slope is negative");
                }
                if (a + b * &first).is_negative() {
                    return bad("affine tail starts below zero");
                }
            }
            Tail::Harmonic { limit, c } => {
                if limit.is_negative() {
                    return bad("harmonic limit is negative");
                }
                if (limit + c / &first).is_negative() {
                    return bad("harmonic tail starts below zero");
                }
            }
            Tail::Diverge(vs) => {
                if vs.len() < 2 {
                    return bad("divergent tail needs at least two listed values");
                }
                if vs[0].is_negative() {
                    return bad("divergent tail has a negative value");
                }
                if vs.windows(2).any(|w| w[0] >= w[1]) {
                    return bad("divergent tail is not strictly increasing");
                }
            }
        }
        Ok(RationalSeq { prefix, tail })
    }

    pub fn prefix(&self) -> &[ExtVal] {
        &self.prefix
    }

    pub fn tail(&self) -> &Tail {
        &self.tail
    }

    /// `x_n` for `n ≥ 1`.
    pub fn term(&self, n: usize) -> ExtVal {
        assert!(n >= 1, "sequences are indexed from 1");
        let p = self.prefix.len();
        if n <= p {
            return self.prefix[n - 1].clone();
        }
        match &self.tail {
            Tail::Const(v) => v.clone(),
            Tail::Affine { a, b } => finite(a + b * rat(n)),
            Tail::Harmonic { limit, c } => finite(limit + c / rat(n)),
            Tail::Diverge(vs) => {
                let k = vs.len();
                let i = n - p;
                if i <= k {
                    finite(vs[i - 1].clone())
                } else {
                    let step = &vs[k - 1] - &vs[k - 2];
                    finite(&vs[k - 1] + step * rat(i - k))
                }
            }
        }
    }

    /// Whether the tail is eventually constant, and its value.
    fn eventual_constant(&self) -> Option<ExtVal> {
        match &self.tail {
            Tail::Const(v) => Some(v.clone()),
            Tail::Affine { a, b } if b.is_zero() => Some(finite(a.clone())),
            Tail::Harmonic { limit, c } if c.is_zero() => Some(finite(limit.clone())),
            _ => None,
        }
    }

    /// Attributes of `{x_σ : σ ≥ λ}`.
    pub fn tail_set(&self, lambda: usize) -> TailSet {
        assert!(lambda >= 1, "sequences are indexed from 1");
        let p = self.prefix.len();
        let m = lambda.max(p + 1);
        let closed = match self.eventual_constant() {
            Some(v) => TailSet::point(v),
            None => match &self.tail {
                Tail::Harmonic { limit, c } => {
                    let edge = finite(limit + c / rat(m));
                    let lim = finite(limit.clone());
                    if c.is_positive() {
                        TailSet::finite(lim, edge)
                    } else {
                        TailSet::finite(edge, lim)
                    }
                }
                _ => TailSet::finite(self.term(m), ExtVal::inf()),
            },
        };
        self.prefix
            .iter()
            .skip(lambda - 1)
            .fold(closed, |acc, v| acc.union(&TailSet::point(v.clone())))
    }

    /// Limit of [`RationalSeq::tail_set`] as `λ → ∞`: bounds converge to the
    /// lower and upper limits, membership flags to their eventual values.
    pub fn limit_tail_set(&self) -> TailSet {
        match self.eventual_constant() {
            Some(v) => TailSet::point(v),
            None => match &self.tail {
                Tail::Harmonic { limit, .. } => TailSet::point(finite(limit.clone())),
                _ => TailSet::finite(ExtVal::inf(), ExtVal::inf()),
            },
        }
    }
}

impl fmt::Display for RationalSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.prefix.is_empty() {
            let items: Vec<String> = self.prefix.iter().map(|v| v.to_string()).collect();
            write!(f, "{}; ", items.join(","))?;
        }
        match &self.tail {
            Tail::Const(v) => write!(f, "const {v}"),
            Tail::Affine { a, b } => write!(f, "affine {a} {b}"),
            Tail::Harmonic { limit, c } => write!(f, "harmonic {limit} {c}"),
            Tail::Diverge(vs) => {
                let items: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
                write!(f, "diverge {}", items.join(","))
            }
        }
    }
}

/// Parses `[v,v,...;] tail` where `tail` is one of `const v`,
/// `affine a b`, `harmonic L c`, or `diverge v1,v2,...`.
impl FromStr for RationalSeq {
    type Err = HalfLineError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let perr = |e: crate::extarith::ParseExtValError| HalfLineError::Parse(e.to_string());
        let (prefix_text, tail_text) = match s.split_once(';') {
            Some((p, t)) => (Some(p), t),
            None => (None, s),
        };
        let prefix = match prefix_text {
            None => Vec::new(),
            Some(p) if p.trim().is_empty() => Vec::new(),
            Some(p) => p
                .split(',')
                .map(|v| v.trim().parse::<ExtVal>().map_err(perr))
                .collect::<Result<_, _>>()?,
        };
        let words: Vec<&str> = tail_text.split_whitespace().collect();
        let tail = match words.as_slice() {
            ["const", v] => Tail::Const(v.parse().map_err(perr)?),
            ["affine", a, b] => Tail::Affine {
                a: parse_signed_rational(a).map_err(perr)?,
                b: parse_signed_rational(b).map_err(perr)?,
            },
            ["harmonic", l, c] => Tail::Harmonic {
                limit: parse_signed_rational(l).map_err(perr)?,
                c: parse_signed_rational(c).map_err(perr)?,
            },
            ["diverge", vs] => Tail::Diverge(
                vs.split(',')
                    .map(|v| parse_signed_rational(v).map_err(perr))
                    .collect::<Result<_, _>>()?,
            ),
            _ => return Err(HalfLineError::Parse(format!("unrecognized tail `{}`", tail_text.trim()))),
        };
        RationalSeq::new(prefix, tail)
    }
}

/// Attributes of a set of points of `[0, ∞]` that determine the sup and inf
/// of distances from a fixed point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TailSet {
    pub inf: ExtVal,
    pub sup: ExtVal,
    pub has_finite: bool,
    pub has_infinity: bool,
}

impl TailSet {
    fn point(v: ExtVal) -> Self {
        let inf = v.is_infinite();
        TailSet {
            inf: v.clone(),
            sup: v,
            has_finite: !inf,
            has_infinity: inf,
        }
    }

    fn finite(inf: ExtVal, sup: ExtVal) -> Self {
        TailSet {
            inf,
            sup,
            has_finite: true,
            has_infinity: false,
        }
    }

    fn union(&self, other: &TailSet) -> TailSet {
        TailSet {
            inf: self.inf.min_with(&other.inf),
            sup: self.sup.max_with(&other.sup),
            has_finite: self.has_finite || other.has_finite,
            has_infinity: self.has_infinity || other.has_infinity,
        }
    }

    /// `sup_{s∈S} d(x, s)`.
    pub fn sup_from(&self, metric: HalfMetric, x: &ExtVal) -> ExtVal {
        match metric {
            HalfMetric::DL => self.sup.monus(x),
            HalfMetric::DR if x.is_finite() => x.monus(&self.inf),
            HalfMetric::DR if self.has_finite => ExtVal::inf(),
            HalfMetric::DR => ExtVal::zero(),
        }
    }

    /// `inf_{s∈S} d(x, s)`.
    pub fn inf_from(&self, metric: HalfMetric, x: &ExtVal) -> ExtVal {
        match metric {
            HalfMetric::DL => self.inf.monus(x),
            HalfMetric::DR if x.is_finite() => x.monus(&self.sup),
            HalfMetric::DR if self.has_infinity => ExtVal::zero(),
            HalfMetric::DR => ExtVal::inf(),
        }
    }

    /// `sup_{s∈S} d(s, y)`, using `d(s,y) = d^op(y,s)`.
    pub fn sup_to(&self, metric: HalfMetric, y: &ExtVal) -> ExtVal {
        self.sup_from(metric.opposite(), y)
    }
}

/// `inf_λ sup_{σ≥λ} d(x, x_σ)`. The tail sups decrease in `λ` and depend
/// continuously on the tail bounds, so the infimum is read off the limit
/// tail set.
pub fn inf_sup(seq: &RationalSeq, metric: HalfMetric, x: &ExtVal) -> ExtVal {
    seq.limit_tail_set().sup_from(metric, x)
}

/// `sup_λ inf_{σ≥λ} d(x, x_σ)`.
pub fn sup_inf(seq: &RationalSeq, metric: HalfMetric, x: &ExtVal) -> ExtVal {
    seq.limit_tail_set().inf_from(metric, x)
}

/// `inf_λ sup_{σ≥λ} d(x_σ, y)`, the right side of the Yoneda limit identity.
pub fn inf_sup_to(seq: &RationalSeq, metric: HalfMetric, y: &ExtVal) -> ExtVal {
    seq.limit_tail_set().sup_to(metric, y)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum SeqKind {
    EventuallyConstant,
    RealCauchy,
    AlmostIncreasingDivergent,
    Divergent,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct SeqClass {
    pub forward_cauchy: bool,
    pub bicauchy: bool,
    pub kind: SeqKind,
}

/// Cauchy classification of a described sequence.
///
/// Eventually constant tails and harmonic tails are Cauchy in both orders.
/// Strictly increasing unbounded tails have `d_R(x_μ,x_ν) = 0` for `ν ≥ μ`
/// but `d_L(x_μ,x_ν) → ∞`, so they are forward Cauchy only under `d_R`, and
/// never biCauchy.
pub fn classify_seq(seq: &RationalSeq, metric: HalfMetric) -> SeqClass {
    if seq.eventual_constant().is_some() {
        return SeqClass {
            forward_cauchy: true,
            bicauchy: true,
            kind: SeqKind::EventuallyConstant,
        };
    }
    match (&seq.tail, metric) {
        (Tail::Harmonic { .. }, _) => SeqClass {
            forward_cauchy: true,
            bicauchy: true,
            kind: SeqKind::RealCauchy,
        },
        (_, HalfMetric::DR) => SeqClass {
            forward_cauchy: true,
            bicauchy: false,
            kind: SeqKind::AlmostIncreasingDivergent,
        },
        (_, HalfMetric::DL) => SeqClass {
            forward_cauchy: false,
            bicauchy: false,
            kind: SeqKind::Divergent,
        },
    }
}

/// The Yoneda limit of a forward Cauchy sequence in `[0, ∞]`.
pub fn yoneda_limit_seq(seq: &RationalSeq, metric: HalfMetric) -> Result<ExtVal, HalfLineError> {
    let class = classify_seq(seq, metric);
    if !class.forward_cauchy {
        return Err(HalfLineError::NotForwardCauchy);
    }
    Ok(match class.kind {
        SeqKind::AlmostIncreasingDivergent => ExtVal::inf(),
        _ => seq.limit_tail_set().sup,
    })
}

/// A regular function of `Γ([0,∞), d_R)` used as a witness in the
/// sobriety computation for `ℙ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// The constant function `0`.
    Zero,
    /// `d_R(−, s)`.
    Shift(ExtVal),
}

impl Witness {
    /// `ψ̂(f(b))`, where `f(b) = d_R(−,b)` for finite `b` and `f(∞) = 0`.
    /// On representables `ψ̂` evaluates `ψ`; on the constant `0` weight it is
    /// `sup_{x∈[0,∞)} ψ(x)`.
    pub fn hat_at(&self, b: &ExtVal) -> ExtVal {
        match (self, b) {
            (Witness::Zero, _) => ExtVal::zero(),
            (Witness::Shift(_), ExtVal::Infinity) => ExtVal::inf(),
            (Witness::Shift(s), b) => b.monus(s),
        }
    }
}

/// The three-case evaluation of `δ̂(f(b), f(A))` for the sobrification of
/// `Γ([0,∞), d_R)`, together with the witness that attains it.
pub fn p_sobriety_witness(b: &HalfLinePoint, a: &AbstractSubset) -> Result<(Witness, ExtVal), HalfLineError> {
    if !a.nonempty {
        return Err(HalfLineError::EmptySubset);
    }
    let witness = if a.sup.is_infinite() {
        Witness::Zero
    } else {
        Witness::Shift(a.sup.clone())
    };
    let value = witness.hat_at(&b.0);
    Ok((witness, value))
}

pub fn p_sobriety_cases(b: &HalfLinePoint, a: &AbstractSubset) -> Result<ExtVal, HalfLineError> {
    let (_, value) = p_sobriety_witness(b, a)?;
    assert_eq!(value, delta_p(b, a), "sobrification distance differs from δ_ℙ");
    Ok(value)
}

/// The flat weight `φ_a(x) = x ⊖ a` of `([0,∞), d_R)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatWeightDR {
    a: ExtVal,
}

pub fn flat_weight_dr(a: ExtVal) -> FlatWeightDR {
    FlatWeightDR { a }
}

impl FlatWeightDR {
    /// The weight `inf_λ sup_{σ≥λ} d_R(−, x_σ)` of a forward Cauchy sequence.
    pub fn from_sequence(seq: &RationalSeq) -> Result<Self, HalfLineError> {
        Ok(FlatWeightDR {
            a: yoneda_limit_seq(seq, HalfMetric::DR)?,
        })
    }

    pub fn parameter(&self) -> &ExtVal {
        &self.a
    }

    /// `φ_a(x)` for finite `x`.
    pub fn eval(&self, x: &BigRational) -> ExtVal {
        finite(x.clone()).monus(&self.a)
    }

    /// Representable by a point of `[0,∞)` exactly when `a` is finite.
    pub fn representable(&self) -> bool {
        self.a.is_finite()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> ExtVal {
        s.parse().unwrap()
    }

    fn pt(s: &str) -> HalfLinePoint {
        HalfLinePoint(v(s))
    }

    fn set(sup: &str, inf_in: bool) -> AbstractSubset {
        AbstractSubset::new(v(sup), inf_in, true).unwrap()
    }

    fn seq(s: &str) -> RationalSeq {
        s.parse().unwrap()
    }

    #[test]
    fn exemplar_distances() {
        assert_eq!(delta_p(&pt("5"), &set("3", false)), v("2"));
        assert_eq!(delta_p(&pt("5"), &AbstractSubset::empty()), ExtVal::inf());
        assert_eq!(delta_p(&pt("inf"), &set("inf", false)), ExtVal::zero());
        assert_eq!(gamma_dr(&pt("inf"), &set("inf", false)), ExtVal::inf());
        assert_eq!(gamma_dr(&pt("inf"), &set("inf", true)), ExtVal::zero());
        assert_eq!(gamma_dr(&pt("2"), &set("5", false)), ExtVal::zero());
        assert_eq!(
            AbstractSubset::new(v("3"), true, true),
            Err(HalfLineError::InconsistentSubset)
        );
        assert_eq!(
            AbstractSubset::new(v("1"), false, false),
            Err(HalfLineError::InconsistentSubset)
        );
    }

    #[test]
    fn sequence_terms() {
        let s = seq("harmonic 1 -1");
        assert_eq!(s.term(1), v("0"));
        assert_eq!(s.term(4), v("3/4"));
        let s = seq("7,inf; affine 0 1");
        assert_eq!((s.term(1), s.term(2), s.term(3)), (v("7"), ExtVal::inf(), v("3")));
        let s = seq("diverge 1,3");
        assert_eq!(s.term(4), v("7"));
        assert_eq!(seq("2; const inf").to_string(), "2; const inf");
        for bad in ["affine 0 -1", "harmonic -1 1", "harmonic 1 -2", "diverge 2,1", "diverge 1"] {
            assert!(matches!(
                bad.parse::<RationalSeq>(),
                Err(HalfLineError::UnclassifiableDescription(_))
            ));
        }
        assert!(matches!("linear 1".parse::<RationalSeq>(), Err(HalfLineError::Parse(_))));
    }

    #[test]
    fn tail_sets() {
        let s = seq("harmonic 1 -1");
        let t = s.tail_set(2);
        assert_eq!((t.inf, t.sup), (v("1/2"), v("1")));
        let s = seq("9; affine 0 1");
        let t = s.tail_set(1);
        assert_eq!((t.inf, t.sup), (v("2"), ExtVal::inf()));
        assert!(!t.has_infinity);
    }

    #[test]
    fn classification() {
        let n = seq("affine 0 1");
        assert_eq!(
            classify_seq(&n, HalfMetric::DR),
            SeqClass {
                forward_cauchy: true,
                bicauchy: false,
                kind: SeqKind::AlmostIncreasingDivergent
            }
        );
        assert!(!classify_seq(&n, HalfMetric::DL).forward_cauchy);
        for m in [HalfMetric::DL, HalfMetric::DR] {
            let c = classify_seq(&seq("harmonic 1 -1"), m);
            assert!(c.forward_cauchy && c.bicauchy && c.kind == SeqKind::RealCauchy);
        }
        assert_eq!(yoneda_limit_seq(&n, HalfMetric::DR), Ok(ExtVal::inf()));
        assert_eq!(yoneda_limit_seq(&n, HalfMetric::DL), Err(HalfLineError::NotForwardCauchy));
        assert_eq!(yoneda_limit_seq(&seq("harmonic 1 -1"), HalfMetric::DL), Ok(v("1")));
        assert_eq!(yoneda_limit_seq(&seq("4,0; const 5/2"), HalfMetric::DR), Ok(v("5/2")));
    }

    #[test]
    fn sobriety_cases() {
        assert_eq!(p_sobriety_cases(&pt("4"), &set("inf", false)), Ok(ExtVal::zero()));
        assert_eq!(p_sobriety_cases(&pt("inf"), &set("3", false)), Ok(ExtVal::inf()));
        assert_eq!(p_sobriety_cases(&pt("5"), &set("3", false)), Ok(v("2")));
        assert_eq!(
            p_sobriety_cases(&pt("5"), &AbstractSubset::empty()),
            Err(HalfLineError::EmptySubset)
        );
    }

    #[test]
    fn flat_weights() {
        let r = |s: &str| parse_signed_rational(s).unwrap();
        let phi = flat_weight_dr(v("3"));
        assert_eq!((phi.eval(&r("5")), phi.eval(&r("1"))), (v("2"), v("0")));
        assert!(phi.representable());
        let top = flat_weight_dr(ExtVal::inf());
        assert!(!top.representable());
        assert_eq!(top.eval(&r("1000")), ExtVal::zero());
        assert_eq!(flat_weight_dr(ExtVal::zero()).eval(&r("7/2")), v("7/2"));
        assert_eq!(FlatWeightDR::from_sequence(&seq("affine 0 1")), Ok(top));
    }
}
