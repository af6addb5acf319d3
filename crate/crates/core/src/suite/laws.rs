//! The law registry. Each law pairs a generator with a check over a
//! [`Document`], so a failing case is replayed from its serialization.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::approach::{
    alexandroff, check_contraction, close_regular_set, is_contraction, is_regular, reconstruct_delta,
    specialization, FiniteApproach,
};
use crate::completion::{
    classify_net, colimits, completion_idempotent, cycles, flat_weights, net_weight, smyth_classify,
    smyth_classify_nets, tail_liminf, tail_limsup, weight_net_limit, yoneda_complete_check, yoneda_completion,
    yoneda_limits, Net,
};
use crate::extarith::{inf_owned, lawvere, sup_owned, ExtVal};
use crate::format::{Document, NamedMap, NamedNet, NamedVector, SpaceEntry};
use crate::halfline::{
    classify_seq, delta_p, gamma_dr, inf_sup, inf_sup_to, p_sobriety_cases, p_sobriety_witness, sup_inf,
    AbstractSubset, FlatWeightDR, HalfLinePoint, HalfMetric, RationalSeq, Tail,
};
use crate::ordtop::{alexandroff_top, is_sober_top, iota_app, iota_met, omega_top, square_checks, SquareInstance};
use crate::sobriety::{
    enumerate_primes, eta, extension_value, is_sober, prime_oracle, sobrify, universal_extension, widehat,
    PrimeStatus, SobrietyError,
};
use crate::space::{FiniteSpace, SpaceMap};
use crate::weights::{
    check_coweight, check_weight, coweight_coreflection, is_cauchy, is_flat, left_adjoint_candidate,
    representable, sup_metric, tensor, weight_coreflection, Coweight, Weight,
};

use super::generate::{point_names, Gen};
use super::default_pool;

type G<'a> = Gen<'a, ChaCha8Rng>;
type Check = Result<(), String>;

pub struct Law {
    pub id: &'static str,
    pub anchor: &'static str,
    /// Deterministic laws run a single case.
    pub fixed: bool,
    pub generate: fn(&mut G<'_>) -> Document,
    pub check: fn(&Document) -> Check,
}

macro_rules! ensure {
    ($cond:expr, $($arg:tt)*) => {
        if !$cond {
            return Err(format!($($arg)*));
        }
    };
}

macro_rules! law {
    ($id:expr, $anchor:expr, $gen:expr, $check:expr) => {
        Law { id: $id, anchor: $anchor, fixed: false, generate: $gen, check: $check }
    };
}

pub fn registry() -> Vec<Law> {
    vec![
        law!("generator-soundness", "invented: generator", gen_standard, check_generator),
        law!("arith-residuation", "Example (Lawvere metric), \"the truncated minus\"", gen_arith, check_residuation),
        law!("arith-monoid-lattice", "Example (Lawvere metric), \"convention that ∞−∞=0\"", gen_arith, check_monoid_lattice),
        law!("arith-lawvere-metric", "Example (Lawvere metric), d_L is a metric", gen_arith, check_lawvere_metric),
        law!("space-derived", "Defn. (metric space), opposite, symmetrization, separated quotient", gen_standard, check_space_derived),
        law!("space-maps", "\"isometric if d(x,y)=p(f(x),f(y))\"", gen_map_pair, check_space_maps),
        law!("weight-yoneda", "(W1), \"Such weights are said to be representable\"", gen_standard, check_weight_yoneda),
        law!("lemma-cauchy-weight-1-2", "Lemma (Cauchy weight) (1), (2)", gen_standard, check_cauchy_weight_12),
        law!("lemma-cauchy-weight-3-4", "Lemma (Cauchy weight) (3), (4)", gen_standard, check_cauchy_weight_34),
        law!("defn-flat-weight", "Defn. (flat weight), \"φ⊗max{ψ1,ψ2}=max\"", gen_standard, check_flat_definition),
        law!("cauchy-iff-flat", "Lemma (Cauchy weight) (3), \"In particular, φ is flat\"", gen_standard, check_cauchy_flat),
        law!("weight-closure", "(W2), (W3), \"both φ+α and φ⊖α\"", gen_standard, check_weight_closure),
        law!("weight-coreflection-max", "invented: largest weight below g", gen_below, check_coreflection_max),
        law!("approach-finite-collapse", "Defn. (approach space) (A3), finite collapse", gen_approach, check_finite_collapse),
        law!("eq-a4-a4prime", "remark after Defn. (approach space), \"(A4') is equivalent to (A4)\"", gen_perturbed, check_a4_a4prime),
        law!("approach-regular-weights", "\"a contraction φ:(X,δ)→ℙ\"", gen_vectors, check_regular_weights),
        law!("approach-regular-closure", "(R1)-(R3)", gen_standard, check_regular_closure),
        law!("approach-reconstruction", "Prop. (regular functions), \"δ(x,A)=sup{φ(x) ∣ φ∈𝒮\"", gen_small, check_reconstruction),
        law!("approach-contraction-criteria", "Prop. (contraction by regular frame)", gen_map_pair, check_contraction_criteria),
        law!("lemma-widehat-1", "Lemma (widehat properties) (1)", gen_widehat, check_widehat_1),
        law!("lemma-widehat-2", "Lemma (widehat properties) (2)", gen_widehat, check_widehat_2),
        law!("lemma-widehat-3", "Lemma (widehat properties) (3)", gen_widehat, check_widehat_3),
        law!("lemma-widehat-4", "Lemma (widehat properties) (4)", gen_widehat, check_widehat_4),
        law!("lemma-widehat-5", "Lemma (widehat properties) (5)", gen_widehat, check_widehat_5),
        law!("lemma-widehat-6", "Lemma (widehat properties) (6)", gen_widehat, check_widehat_6),
        law!("lemma-prime-flat", "Lemma (metric approach prime), \"exactly the flat weights of\"", gen_zero_inf, check_prime_flat),
        law!("sobrify-idempotent", "Theorem (sobrification) (1), \"is a sober approach space\"", gen_standard, check_sobrify),
        law!("sobrify-extension", "Theorem (sobrification) (2), \"there is a unique contraction\"", gen_extension, check_extension),
        law!("thm-completion-sobrification", "Theorem (sobrification), \"coincides with the Yoneda completion\"", gen_standard, check_completion_sobrification),
        law!("thm-main", "Theorem (main), \"The approach space (X,Γ(d)) is sober\"", gen_standard, check_main),
        law!("thm-completable", "Theorem, \"Yoneda completion on (X,d) is idempotent\"", gen_standard, check_completable),
        law!("weight-net-yoneda-limit", "Theorem (Yoneda complete), \"Yoneda limit given by inf sup\"", gen_weight_net, check_weight_net),
        law!("eq-forward-cauchy", "forward Cauchy nets converge, \"inf sup = sup inf\"", gen_nets, check_forward_cauchy),
        law!("order-directed-complete", "Prop., \"is directed complete\"", gen_standard, check_directed_complete),
        law!("lemma-bicauchy-cauchy", "Lemma (bicauchy=cauchy), \"is biCauchy if and only if\"", gen_nets, check_bicauchy_cauchy),
        law!("completion-separated-quotient", "\"is called the Yoneda completion\"", gen_standard, check_completion_quotient),
        law!("smyth-net-crosscheck", "Defn. (Smyth complete), \"converge in its symmetrization\"", gen_standard, check_smyth_nets),
        law!("flat-from-nets", "Prop. (flat weight) (3), \"There is a forward Cauchy net\"", gen_nets, check_flat_from_nets),
        law!("ordtop-squares", "\"the following diagrams are commutative\"", gen_order, check_squares),
        law!("prop-top-sober", "Prop. (top sober), \"ω(X) is a sober approach space\"", gen_order, check_top_sober),
        law!("top-sober-underlying", "Prop. (top sober), \"The underlying topology of a sober approach space is sober\"", gen_standard, check_underlying_sober),
        Law { id: "halfline-disagreement", anchor: "Example (real approach), δ_ℙ and Γ(d_R)", fixed: true, generate: gen_empty, check: check_halfline_disagreement },
        Law { id: "halfline-p-sober", anchor: "Prop. (P is sober), Cases 1-3", fixed: true, generate: gen_empty, check: check_p_sober },
        Law { id: "halfline-sequences", anchor: "Example (d_L), Example (d_R), forward Cauchy sequences", fixed: true, generate: gen_empty, check: check_halfline_sequences },
    ]
}

// ---------------------------------------------------------------- helpers

fn entry(doc: &Document, i: usize) -> Result<&SpaceEntry, String> {
    let e = doc.spaces.get(i).ok_or_else(|| format!("document has no space #{i}"))?;
    let violations = e.space.violations();
    ensure!(
        violations.is_empty(),
        "space {} is not a metric: {}",
        e.name,
        violations.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
    );
    Ok(e)
}

fn weights(e: &SpaceEntry) -> Result<Vec<Weight>, String> {
    e.weights
        .iter()
        .map(|v| check_weight(&e.space, v.values.clone()).map_err(|err| format!("weight {}: {err}", v.name)))
        .collect()
}

fn coweights(e: &SpaceEntry) -> Result<Vec<Coweight>, String> {
    e.coweights
        .iter()
        .map(|v| check_coweight(&e.space, v.values.clone()).map_err(|err| format!("coweight {}: {err}", v.name)))
        .collect()
}

/// The default value pool together with every value occurring in the
/// document's vectors.
fn probes(doc: &Document) -> Vec<ExtVal> {
    let mut out = default_pool();
    for e in &doc.spaces {
        for v in e.weights.iter().chain(&e.coweights).chain(&e.vectors) {
            out.extend(v.values.iter().cloned());
        }
    }
    out.sort();
    out.dedup();
    out
}

fn show(v: &[ExtVal]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn named(prefix: &str, i: usize, values: Vec<ExtVal>) -> NamedVector {
    NamedVector {
        name: format!("{prefix}{i}"),
        values,
    }
}

fn le(a: &[ExtVal], b: &[ExtVal]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn pointwise(a: &[ExtVal], b: &[ExtVal], f: impl Fn(&ExtVal, &ExtVal) -> ExtVal) -> Vec<ExtVal> {
    a.iter().zip(b).map(|(x, y)| f(x, y)).collect()
}

fn compose(psi: &[ExtVal], f: &[usize]) -> Vec<ExtVal> {
    f.iter().map(|&y| psi[y].clone()).collect()
}

// ------------------------------------------------------------- generators

fn populate(g: &mut G<'_>, space: FiniteSpace, weights: usize, coweights: usize) -> SpaceEntry {
    let mut e = SpaceEntry::new("s", space);
    for i in 0..weights {
        let w = g.weight(&e.space);
        e.weights.push(named("w", i, w));
    }
    for i in 0..coweights {
        let c = g.coweight(&e.space);
        e.coweights.push(named("k", i, c));
    }
    e
}

fn single(e: SpaceEntry) -> Document {
    Document {
        spaces: vec![e],
        ..Document::default()
    }
}

fn gen_empty(_: &mut G<'_>) -> Document {
    Document::default()
}

fn gen_standard(g: &mut G<'_>) -> Document {
    let space = g.space(usize::MAX);
    let k = g.config.samples;
    single(populate(g, space, k, k))
}

fn gen_small(g: &mut G<'_>) -> Document {
    let space = g.space(3);
    single(SpaceEntry::new("s", space))
}

fn gen_widehat(g: &mut G<'_>) -> Document {
    let space = g.space(5);
    let k = g.config.samples;
    single(populate(g, space, k, 0))
}

/// A value from the pool or a small random rational.
fn rich_value(g: &mut G<'_>) -> ExtVal {
    if g.rng.gen_bool(0.5) {
        return g.value();
    }
    let num: i64 = g.rng.gen_range(0..=24);
    let den: i64 = g.rng.gen_range(1..=7);
    ExtVal::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den))).expect("nonnegative")
}

fn gen_arith(g: &mut G<'_>) -> Document {
    let space = FiniteSpace::validate_flat(
        point_names(3),
        (0..9).map(|i| if i % 4 == 0 { ExtVal::zero() } else { ExtVal::inf() }).collect(),
    )
    .expect("discrete space");
    let mut e = SpaceEntry::new("s", space);
    let values = (0..3).map(|_| rich_value(g)).collect();
    e.vectors.push(named("v", 0, values));
    single(e)
}

fn gen_map_pair(g: &mut G<'_>) -> Document {
    let source = g.space(usize::MAX);
    let target = g.space(usize::MAX);
    let mut s = SpaceEntry::new("s", source);
    for i in 0..g.config.samples {
        let f = g.map(s.space.len(), target.len());
        s.maps.push(NamedMap::new(&format!("f{i}"), "t", f));
    }
    let k = g.config.samples;
    let mut t = populate(g, target, k, 0);
    t.name = "t".into();
    for i in 0..k {
        let w = g.weight(&s.space);
        s.weights.push(named("w", i, w));
    }
    Document {
        spaces: vec![s, t],
        ..Document::default()
    }
}

fn gen_below(g: &mut G<'_>) -> Document {
    let space = g.space(usize::MAX);
    let mut e = SpaceEntry::new("s", space);
    for i in 0..g.config.samples {
        let w = g.weight(&e.space);
        let r = g.vector(e.space.len());
        e.vectors.push(named("g", i, pointwise(&w, &r, ExtVal::max_with)));
        e.weights.push(named("w", i, w));
        let c = g.coweight(&e.space);
        let r = g.vector(e.space.len());
        e.vectors.push(named("h", i, pointwise(&c, &r, ExtVal::max_with)));
        e.coweights.push(named("k", i, c));
    }
    single(e)
}

fn gen_approach(g: &mut G<'_>) -> Document {
    let space = g.space(usize::MAX);
    let table = alexandroff(&space).table();
    let mut doc = single(SpaceEntry::new("s", space));
    doc.approaches.push(("A".into(), table));
    doc
}

fn gen_perturbed(g: &mut G<'_>) -> Document {
    let space = g.space(5);
    let mut doc = single(SpaceEntry::new("s", space.clone()));
    doc.approaches.push(("A".into(), alexandroff(&space).table()));
    for i in 0..g.config.samples {
        doc.approaches.push((format!("P{i}"), g.perturbed_table(&space)));
    }
    doc
}

fn gen_vectors(g: &mut G<'_>) -> Document {
    let space = g.space(usize::MAX);
    let mut e = SpaceEntry::new("s", space);
    for i in 0..2 * g.config.samples {
        let v = if g.rng.gen_bool(0.5) { g.weight(&e.space) } else { g.vector(e.space.len()) };
        e.vectors.push(named("v", i, v));
    }
    single(e)
}

fn gen_zero_inf(g: &mut G<'_>) -> Document {
    let space = g.space(usize::MAX);
    let mut e = SpaceEntry::new("s", space);
    for i in 0..g.config.samples {
        let v = g.zero_inf_weight(&e.space);
        e.vectors.push(named("v", i, v));
    }
    single(e)
}

fn gen_extension(g: &mut G<'_>) -> Document {
    let source = g.space(5);
    let raw = g.space(5);
    let (target, _) = raw.separated_quotient();
    let target = FiniteSpace::validate_flat(point_names(target.len()), target.matrix().to_vec())
        .expect("quotient of a metric is a metric");
    let mut s = SpaceEntry::new("s", source);
    for i in 0..g.config.samples {
        let f = g.map(s.space.len(), target.len());
        s.maps.push(NamedMap::new(&format!("f{i}"), "t", f));
    }
    let k = g.config.samples;
    let mut t = populate(g, target, k, 0);
    t.name = "t".into();
    Document {
        spaces: vec![s, t],
        ..Document::default()
    }
}

fn gen_weight_net(g: &mut G<'_>) -> Document {
    let space = g.space(usize::MAX);
    let k = g.config.samples.min(6);
    let mut e = populate(g, space, k, 0);
    // repeat one weight so that non-trivial forward Cauchy cycles occur
    if let Some(first) = e.weights.first().cloned() {
        e.weights.push(named("w", k, first.values));
    }
    single(e)
}

fn gen_nets(g: &mut G<'_>) -> Document {
    let space = g.space(usize::MAX);
    let k = g.config.samples;
    let mut e = populate(g, space, k, 0);
    for i in 0..k {
        let net = g.net(&e.space, 4);
        e.nets.push(NamedNet {
            name: format!("n{i}"),
            net,
        });
    }
    single(e)
}

fn gen_order(g: &mut G<'_>) -> Document {
    let p = g.preorder(5);
    let t = alexandroff_top(&p);
    let space = g.space(5);
    let mut doc = single(SpaceEntry::new("s", space));
    doc.orders.push(("P".into(), p));
    doc.topologies.push(("T".into(), t));
    doc
}

// ------------------------------------------------------------- arithmetic

fn arith_probes(doc: &Document) -> Result<Vec<ExtVal>, String> {
    entry(doc, 0)?;
    let mut out = default_pool();
    for v in &doc.spaces[0].vectors {
        out.extend(v.values.iter().cloned());
    }
    out.sort();
    out.dedup();
    Ok(out)
}

fn check_residuation(doc: &Document) -> Check {
    let p = arith_probes(doc)?;
    for a in &p {
        for b in &p {
            let t = lawvere(a, b);
            ensure!(t == b.monus(a), "lawvere({a},{b}) = {t} but {b} ⊖ {a} = {}", b.monus(a));
            ensure!(*b <= a.add(&t), "{b} > {a} + lawvere({a},{b})");
            for c in &p {
                ensure!((t <= *c) == (*b <= a.add(c)), "residuation fails at a={a} b={b} c={c}");
            }
        }
    }
    Ok(())
}

fn check_monoid_lattice(doc: &Document) -> Check {
    let p = arith_probes(doc)?;
    let zero = ExtVal::zero();
    for a in &p {
        ensure!(a.add(&zero) == *a, "0 is not an identity at {a}");
        ensure!(a.monus(a).is_zero(), "{a} ⊖ {a} is not 0");
        for b in &p {
            ensure!(a.add(b) == b.add(a), "+ not commutative at {a},{b}");
            ensure!(a.min_with(b) == b.min_with(a) && a.max_with(b) == b.max_with(a), "lattice not commutative at {a},{b}");
            ensure!(a.min_with(&a.max_with(b)) == *a, "absorption fails at {a},{b}");
            for c in &p {
                ensure!(a.add(&b.add(c)) == a.add(b).add(c), "+ not associative at {a},{b},{c}");
                ensure!(
                    a.min_with(&b.max_with(c)) == a.min_with(b).max_with(&a.min_with(c)),
                    "lattice not distributive at {a},{b},{c}"
                );
                ensure!(
                    a.add(&b.min_with(c)) == a.add(b).min_with(&a.add(c)),
                    "+ does not distribute over min at {a},{b},{c}"
                );
            }
        }
    }
    Ok(())
}

fn check_lawvere_metric(doc: &Document) -> Check {
    let p = arith_probes(doc)?;
    for a in &p {
        ensure!(lawvere(a, a).is_zero(), "d_L({a},{a}) is not 0");
        for b in &p {
            ensure!(HalfMetric::DR.d(a, b) == lawvere(b, a), "d_R({a},{b}) is not d_L({b},{a})");
            for c in &p {
                ensure!(
                    lawvere(a, b).add(&lawvere(b, c)) >= lawvere(a, c),
                    "triangle fails at {a},{b},{c}"
                );
            }
        }
    }
    Ok(())
}

// ------------------------------------------------------------ spaces, maps

fn check_generator(doc: &Document) -> Check {
    let e = entry(doc, 0)?;
    weights(e)?;
    coweights(e)?;
    Ok(())
}

fn check_space_derived(doc: &Document) -> Check {
    let s = &entry(doc, 0)?.space;
    ensure!(s.opposite().opposite() == *s, "opposite is not an involution");
    let sym = s.symmetrization();
    ensure!(sym.is_valid() && sym.classify().symmetric, "symmetrization is not a symmetric metric");
    ensure!(sym.symmetrization() == sym, "symmetrization is not idempotent");
    ensure!(s.opposite().is_valid(), "opposite is not a metric");
    let (quotient, projection) = s.separated_quotient();
    ensure!(quotient.is_valid() && quotient.classify().separated, "quotient is not a separated metric");
    ensure!(projection.check_isometric(), "projection is not isometric");
    for (c, members) in s.zero_cliques().iter().enumerate() {
        ensure!(projection.apply(members[0]) == c, "projection of section misses class {c}");
    }
    ensure!(s.classify().separated == (quotient.len() == s.len()), "separation disagrees with the quotient size");
    Ok(())
}

fn check_space_maps(doc: &Document) -> Check {
    let s = entry(doc, 0)?;
    let t = entry(doc, 1)?;
    ensure!(SpaceMap::identity(&s.space).check_isometric(), "identity is not isometric");
    let tw = weights(t)?;
    for m in &s.maps {
        let f = SpaceMap::new(s.space.clone(), t.space.clone(), m.assignment.clone()).map_err(|e| e.to_string())?;
        let direct = (0..s.space.len()).all(|x| {
            (0..s.space.len()).all(|y| s.space.d(x, y) >= t.space.d(f.apply(x), f.apply(y)))
        });
        ensure!(f.check_nonexpansive() == direct, "nonexpansive check disagrees with the definition for {}", m.name);
        ensure!(!f.check_isometric() || f.check_nonexpansive(), "{} is isometric but not nonexpansive", m.name);
        if f.check_nonexpansive() {
            for psi in &tw {
                let pulled = compose(psi.values(), &m.assignment);
                ensure!(
                    check_weight(&s.space, pulled).is_ok(),
                    "pullback of a weight along {} is not a weight",
                    m.name
                );
            }
        }
    }
    Ok(())
}

// ----------------------------------------------------------------- weights

fn check_weight_yoneda(doc: &Document) -> Check {
    let e = entry(doc, 0)?;
    let s = &e.space;
    let ws = weights(e)?;
    for x in 0..s.len() {
        let rx = representable(s, x);
        ensure!(check_weight(s, rx.values().to_vec()).is_ok(), "d(-,{x}) is not a weight");
        let cx: Vec<ExtVal> = (0..s.len()).map(|y| s.d(x, y).clone()).collect();
        ensure!(check_coweight(s, cx).is_ok(), "d({x},-) is not a coweight");
        for phi in &ws {
            ensure!(
                sup_metric(&rx, phi) == *phi.get(x),
                "Yoneda identity fails at {x} for [{}]",
                show(phi.values())
            );
        }
        for y in 0..s.len() {
            ensure!(
                sup_metric(&rx, &representable(s, y)) == *s.d(x, y),
                "Yoneda embedding is not isometric at {x},{y}"
            );
        }
    }
    Ok(())
}

/// Weights of the document plus every representable.
fn weight_family(e: &SpaceEntry) -> Result<Vec<Weight>, String> {
    let mut ws = weights(e)?;
    ws.extend((0..e.space.len()).map(|x| representable(&e.space, x)));
    Ok(ws)
}

fn coweight_family(e: &SpaceEntry) -> Result<Vec<Coweight>, String> {
    let mut cs = coweights(e)?;
    for x in 0..e.space.len() {
        let row = (0..e.space.len()).map(|y| e.space.d(x, y).clone()).collect();
        cs.push(Coweight::new_unchecked(row));
    }
    Ok(cs)
}

fn check_cauchy_weight_12(doc: &Document) -> Check {
    let e = entry(doc, 0)?;
    let s = &e.space;
    let ws = weight_family(e)?;
    let cs = coweight_family(e)?;
    for phi in ws.iter().filter(|phi| is_cauchy(s, phi).is_cauchy()) {
        let cand = left_adjoint_candidate(s, phi);
        for psi in &cs {
            let rhs = sup_owned((0..s.len()).map(|y| lawvere(cand.get(y), psi.get(y))));
            ensure!(
                tensor(phi, psi) == rhs,
                "(1) fails for φ=[{}] ψ=[{}]",
                show(phi.values()),
                show(psi.values())
            );
        }
        for xi in &ws {
            ensure!(
                tensor(xi, &cand) == sup_metric(phi, xi),
                "(2) fails for φ=[{}] ξ=[{}]",
                show(phi.values()),
                show(xi.values())
            );
        }
    }
    Ok(())
}

fn check_cauchy_weight_34(doc: &Document) -> Check {
    let e = entry(doc, 0)?;
    let s = &e.space;
    let ws = weight_family(e)?;
    let cs = coweight_family(e)?;
    for phi in ws.iter().filter(|phi| is_cauchy(s, phi).is_cauchy()) {
        for (i, a) in cs.iter().enumerate() {
            for b in &cs[i..] {
                ensure!(
                    tensor(phi, &a.join(b)) == tensor(phi, a).max_with(&tensor(phi, b)),
                    "(3) fails for φ=[{}] ψ1=[{}] ψ2=[{}]",
                    show(phi.values()),
                    show(a.values()),
                    show(b.values())
                );
            }
            for b in &ws[..] {
                let c = &ws[i % ws.len()];
                ensure!(
                    sup_metric(phi, b).min_with(&sup_metric(phi, c)) == sup_metric(phi, &b.meet(c)),
                    "(4) fails for φ=[{}] ξ1=[{}] ξ2=[{}]",
                    show(phi.values()),
                    show(b.values()),
                    show(c.values())
                );
            }
        }
        let all = cs.iter().skip(1).fold(cs[0].clone(), |acc, c| acc.join(c));
        let tensors = sup_owned(cs.iter().map(|c| tensor(phi, c)));
        ensure!(tensor(phi, &all) == tensors, "(3) fails for the whole coweight family");
        let meet = ws.iter().skip(1).fold(ws[0].clone(), |acc, w| acc.meet(w));
        let dists = inf_owned(ws.iter().map(|w| sup_metric(phi, w)));
        ensure!(sup_metric(phi, &meet) == dists, "(4) fails for the whole weight family");
    }
    Ok(())
}

/// Flatness through its definition: `inf φ = 0` and `φ ⊗ −` distributes
/// over binary max. The exhaustive family consists of corepresentables
/// `d(x,−)` shifted by `c` with `c` ranging over the differences
/// `max{φ(x₁),φ(x₂)} − φ(xᵢ)`; distributivity on these pairs is the finite
/// form of condition (b). Document coweights refute from the other side.
fn flat_by_definition(s: &FiniteSpace, phi: &Weight, cs: &[Coweight]) -> Result<bool, String> {
    if !phi.infimum().is_zero() {
        return Ok(false);
    }
    let n = s.len();
    let corep = |x: usize, c: &ExtVal| Coweight::new_unchecked((0..n).map(|y| s.d(x, y).add(c)).collect());
    let distributes = |a: &Coweight, b: &Coweight| tensor(phi, &a.join(b)) == tensor(phi, a).max_with(&tensor(phi, b));
    for x1 in 0..n {
        for x2 in 0..n {
            let (v1, v2) = (phi.get(x1), phi.get(x2));
            let mut shifts = vec![(ExtVal::zero(), ExtVal::zero())];
            if v1.is_finite() && v2.is_finite() {
                let m = v1.max_with(v2);
                shifts.push((m.monus(v1), m.monus(v2)));
            }
            for (c1, c2) in &shifts {
                if !distributes(&corep(x1, c1), &corep(x2, c2)) {
                    return Ok(false);
                }
            }
        }
    }
    for a in cs {
        for b in cs {
            if !distributes(a, b) {
                return Err(format!(
                    "φ=[{}] distributes over the exhaustive family but not over ψ1=[{}], ψ2=[{}]",
                    show(phi.values()),
                    show(a.values()),
                    show(b.values())
                ));
            }
        }
    }
    Ok(true)
}

fn shifted_family(e: &SpaceEntry) -> Result<Vec<Weight>, String> {
    let mut out = Vec::new();
    for phi in weight_family(e)? {
        let m = phi.infimum();
        out.push(if m.is_infinite() { phi.clone() } else { phi.minus(&m) });
        out.push(phi);
    }
    Ok(out)
}

fn check_flat_definition(doc: &Document) -> Check {
    let e = entry(doc, 0)?;
    let cs = coweights(e)?;
    for phi in shifted_family(e)? {
        let by_definition = flat_by_definition(&e.space, &phi, &cs)?;
        ensure!(
            is_flat(&e.space, &phi) == by_definition,
            "is_flat = {} but the definition gives {} for φ=[{}]",
            is_flat(&e.space, &phi),
            by_definition,
            show(phi.values())
        );
    }
    Ok(())
}

fn check_cauchy_flat(doc: &Document) -> Check {
    let e = entry(doc, 0)?;
    for phi in shifted_family(e)? {
        let cauchy = is_cauchy(&e.space, &phi).is_cauchy();
        let flat = is_flat(&e.space, &phi);
        ensure!(cauchy == flat, "is_cauchy = {cauchy}, is_flat = {flat} for φ=[{}]", show(phi.values()));
    }
    Ok(())
}

fn check_weight_closure(doc: &Document) -> Check {
    let e = entry(doc, 0)?;
    let s = &e.space;
    let ws = weights(e)?;
    let cs = coweights(e)?;
    let alphas = probes(doc);
    for a in &ws {
        for b in &ws {
            for (op, v) in [("min", a.meet(b)), ("max", a.join(b))] {
                ensure!(check_weight(s, v.into_values()).is_ok(), "{op} of [{}] and [{}] is not a weight", show(a.values()), show(b.values()));
            }
        }
        for alpha in &alphas {
            ensure!(check_weight(s, a.plus(alpha).into_values()).is_ok(), "[{}] + {alpha} is not a weight", show(a.values()));
            ensure!(check_weight(s, a.minus(alpha).into_values()).is_ok(), "[{}] ⊖ {alpha} is not a weight", show(a.values()));
        }
    }
    for a in &cs {
        for b in &cs {
            ensure!(check_coweight(s, a.meet(b).into_values()).is_ok(), "min of coweights is not a coweight");
            ensure!(check_coweight(s, a.join(b).into_values()).is_ok(), "max of coweights is not a coweight");
        }
        for alpha in &alphas {
            ensure!(check_coweight(s, a.plus(alpha).into_values()).is_ok(), "coweight + {alpha} is not a coweight");
            ensure!(check_coweight(s, a.minus(alpha).into_values()).is_ok(), "coweight ⊖ {alpha} is not a coweight");
        }
    }
    Ok(())
}

fn check_coreflection_max(doc: &Document) -> Check {
    let e = entry(doc, 0)?;
    let s = &e.space;
    let ws = weights(e)?;
    let cs = coweights(e)?;
    for v in &e.vectors {
        let is_weight_side = v.name.starts_with('g');
        let core = if is_weight_side {
            let c = weight_coreflection(s, &v.values);
            ensure!(check_weight(s, c.values().to_vec()).is_ok(), "coreflection of {} is not a weight", v.name);
            c.into_values()
        } else {
            let c = coweight_coreflection(s, &v.values);
            ensure!(check_coweight(s, c.values().to_vec()).is_ok(), "coreflection of {} is not a coweight", v.name);
            c.into_values()
        };
        ensure!(le(&core, &v.values), "coreflection of {} exceeds it", v.name);
        let below: Vec<&[ExtVal]> = if is_weight_side {
            ws.iter().map(Weight::values).collect()
        } else {
            cs.iter().map(Coweight::values).collect()
        };
        for w in below.into_iter().filter(|w| le(w, &v.values)) {
            ensure!(le(w, &core), "[{}] ≤ {} but not below its coreflection [{}]", show(w), v.name, show(&core));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------- approach

fn check_finite_collapse(doc: &Document) -> Check {
    let s = &entry(doc, 0)?.space;
    let (_, table) = doc.approaches.first().ok_or("document has no approach")?;
    let a = crate::approach::validate_approach(table).map_err(|e| e.to_string())?;
    for x in 0..a.len() {
        for set in crate::subset::Subset::all(a.len()).filter(|set| !set.is_empty()) {
            let collapsed = inf_owned(set.iter().map(|y| a.delta_single(x, y).clone()));
            ensure!(a.delta(x, set) == collapsed, "δ({x},{set:?}) differs from the minimum over singletons");
        }
    }
    ensure!(alexandroff(&specialization(&a)) == a, "Γ Ω is not the identity");
    ensure!(specialization(&alexandroff(s)) == *s, "Ω Γ is not the identity");
    Ok(())
}

fn check_a4_a4prime(doc: &Document) -> Check {
    entry(doc, 0)?;
    for (name, table) in &doc.approaches {
        ensure!(
            table.accepts_with_a4() == table.accepts_with_a4prime(),
            "table {name}: (A4) accepts = {}, (A4') accepts = {}",
            table.accepts_with_a4(),
            table.accepts_with_a4prime()
        );
    }
    let (_, valid) = &doc.approaches[0];
    ensure!(valid.accepts_with_a4(), "the Alexandroff table is rejected");
    Ok(())
}

fn check_regular_weights(doc: &Document) -> Check {
    let e = entry(doc, 0)?;
    let a = alexandroff(&e.space);
    for v in &e.vectors {
        let regular = is_regular(&a, &v.values);
        let weight = check_weight(&e.space, v.values.clone()).is_ok();
        ensure!(regular == weight, "{}: regular = {regular}, weight = {weight}", v.name);
    }
    Ok(())
}

fn check_regular_closure(doc: &Document) -> Check {
    let e = entry(doc, 0)?;
    let a = alexandroff(&e.space);
    let ws = weights(e)?;
    let alphas = probes(doc);
    for x in &ws {
        ensure!(is_regular(&a, x.values()), "weight [{}] is not regular", show(x.values()));
        for y in &ws {
            ensure!(is_regular(&a, x.join(y).values()), "(R1) fails");
            ensure!(is_regular(&a, x.meet(y).values()), "(R2) fails");
        }
        for alpha in &alphas {
            ensure!(is_regular(&a, x.plus(alpha).values()), "(R3) fails for + {alpha}");
            ensure!(is_regular(&a, x.minus(alpha).values()), "(R3) fails for ⊖ {alpha}");
        }
    }
    if let Some(first) = ws.first() {
        let sup = ws.iter().fold(first.clone(), |acc, w| acc.join(w));
        ensure!(is_regular(&a, sup.values()), "(R1) fails for the whole family");
    }
    Ok(())
}

fn check_reconstruction(doc: &Document) -> Check {
    let s = &entry(doc, 0)?.space;
    let a = alexandroff(s);
    let seed: Vec<Vec<ExtVal>> = crate::subset::Subset::all(s.len()).map(|set| a.delta_to(set)).collect();
    let family = close_regular_set(s.len(), &seed);
    for v in &family {
        ensure!(is_regular(&a, v), "closure produced a non-regular function [{}]", show(v));
    }
    let rebuilt = reconstruct_delta(s.points().to_vec(), &family).map_err(|e| e.to_string())?;
    ensure!(rebuilt == a, "reconstructed approach distance differs from Γ(d)");
    Ok(())
}

fn check_contraction_criteria(doc: &Document) -> Check {
    let s = entry(doc, 0)?;
    let t = entry(doc, 1)?;
    let (ga, gb) = (alexandroff(&s.space), alexandroff(&t.space));
    for m in &s.maps {
        let check = check_contraction(&m.assignment, &ga, &gb);
        ensure!(check.criteria_agree(), "{}: direct and regular-function criteria disagree: {check:?}", m.name);
        let f = SpaceMap::new(s.space.clone(), t.space.clone(), m.assignment.clone()).map_err(|e| e.to_string())?;
        ensure!(
            check.holds() == f.check_nonexpansive(),
            "{}: contraction = {}, nonexpansive = {}",
            m.name,
            check.holds(),
            f.check_nonexpansive()
        );
    }
    Ok(())
}

// ---------------------------------------------------------------- sobriety

struct WidehatCtx {
    primes: Vec<Weight>,
    xs: Vec<Weight>,
    alphas: Vec<ExtVal>,
    approach: FiniteApproach,
}

fn widehat_ctx(doc: &Document) -> Result<WidehatCtx, String> {
    let e = entry(doc, 0)?;
    let approach = alexandroff(&e.space);
    Ok(WidehatCtx {
        primes: enumerate_primes(&approach),
        xs: weight_family(e)?,
        alphas: probes(doc),
        approach,
    })
}

fn hat(xi: &Weight, primes: &[Weight]) -> Vec<ExtVal> {
    primes.iter().map(|p| widehat(xi.values(), p)).collect()
}

fn check_widehat_1(doc: &Document) -> Check {
    let c = widehat_ctx(doc)?;
    for xi in &c.xs {
        for x in 0..c.approach.len() {
            ensure!(
                widehat(xi.values(), &eta(&c.approach, x)) == *xi.get(x),
                "ξ̂(η({x})) ≠ ξ({x}) for ξ=[{}]",
                show(xi.values())
            );
        }
    }
    Ok(())
}

fn check_widehat_2(doc: &Document) -> Check {
    let c = widehat_ctx(doc)?;
    for xi in &c.xs {
        for psi in &c.xs {
            let below = xi.le(psi);
            let hat_below = le(&hat(xi, &c.primes), &hat(psi, &c.primes));
            ensure!(below == hat_below, "ξ ≤ ψ is {below} but ξ̂ ≤ ψ̂ is {hat_below} for ξ=[{}] ψ=[{}]", show(xi.values()), show(psi.values()));
        }
    }
    Ok(())
}

fn check_widehat_3(doc: &Document) -> Check {
    let c = widehat_ctx(doc)?;
    for xi in &c.xs {
        for phi in &c.primes {
            ensure!(
                widehat(xi.values(), phi).is_zero() == xi.le(phi),
                "ξ̂(φ)=0 disagrees with ξ ≤ φ for ξ=[{}] φ=[{}]",
                show(xi.values()),
                show(phi.values())
            );
        }
    }
    Ok(())
}

fn check_widehat_4(doc: &Document) -> Check {
    let c = widehat_ctx(doc)?;
    for xi in &c.xs {
        for psi in &c.xs {
            let lhs = hat(&xi.join(psi), &c.primes);
            let rhs = pointwise(&hat(xi, &c.primes), &hat(psi, &c.primes), ExtVal::max_with);
            ensure!(lhs == rhs, "sup does not commute for ξ=[{}] ψ=[{}]", show(xi.values()), show(psi.values()));
        }
    }
    let all = c.xs.iter().fold(Weight::new_unchecked(vec![ExtVal::zero(); c.approach.len()]), |acc, w| acc.join(w));
    let sups: Vec<ExtVal> = (0..c.primes.len())
        .map(|i| sup_owned(c.xs.iter().map(|w| widehat(w.values(), &c.primes[i]))))
        .collect();
    ensure!(hat(&all, &c.primes) == sups, "sup does not commute for the whole family");
    Ok(())
}

fn check_widehat_5(doc: &Document) -> Check {
    let c = widehat_ctx(doc)?;
    for xi in &c.xs {
        for psi in &c.xs {
            let lhs = hat(&xi.meet(psi), &c.primes);
            let rhs = pointwise(&hat(xi, &c.primes), &hat(psi, &c.primes), ExtVal::min_with);
            ensure!(lhs == rhs, "min does not commute for ξ=[{}] ψ=[{}]", show(xi.values()), show(psi.values()));
        }
    }
    Ok(())
}

fn check_widehat_6(doc: &Document) -> Check {
    let c = widehat_ctx(doc)?;
    for xi in &c.xs {
        let base = hat(xi, &c.primes);
        for alpha in &c.alphas {
            let plus: Vec<ExtVal> = base.iter().map(|v| v.add(alpha)).collect();
            ensure!(hat(&xi.plus(alpha), &c.primes) == plus, "(ξ+{alpha})̂ ≠ ξ̂+{alpha} for ξ=[{}]", show(xi.values()));
            let minus: Vec<ExtVal> = base.iter().map(|v| v.monus(alpha)).collect();
            ensure!(hat(&xi.minus(alpha), &c.primes) == minus, "(ξ⊖{alpha})̂ ≠ ξ̂⊖{alpha} for ξ=[{}]", show(xi.values()));
        }
    }
    Ok(())
}

fn check_prime_flat(doc: &Document) -> Check {
    let e = entry(doc, 0)?;
    let s = &e.space;
    let a = alexandroff(s);
    let spec = specialization(&a);
    let mut candidates: Vec<(String, Vec<ExtVal>)> = e.vectors.iter().map(|v| (v.name.clone(), v.values.clone())).collect();
    candidates.extend(enumerate_primes(&a).into_iter().map(|p| ("enumerated".to_string(), p.into_values())));
    for (name, v) in candidates {
        let witness = prime_oracle(&a, &v).map_err(|err| format!("{name}: {err}"))?;
        let flat = is_flat(&spec, &witness.phi);
        ensure!(witness.is_prime() == flat, "{name}: prime = {}, flat = {flat} for [{}]", witness.is_prime(), show(&v));
        if let PrimeStatus::Counterexample { xi, psi, .. } = &witness.status {
            ensure!(is_regular(&a, xi.values()) && is_regular(&a, psi.values()), "{name}: counterexample pair is not regular");
            ensure!(le(xi.meet(psi).values(), &v), "{name}: min of the counterexample pair exceeds φ");
            ensure!(!le(xi.values(), &v) && !le(psi.values(), &v), "{name}: counterexample pair lies below φ");
        }
    }
    let primes = enumerate_primes(&a);
    for phi in flat_weights(s) {
        ensure!(primes.contains(&phi), "flat weight [{}] is missing from the primes", show(phi.values()));
    }
    Ok(())
}

fn check_sobrify(doc: &Document) -> Check {
    let s = &entry(doc, 0)?.space;
    let a = alexandroff(s);
    let sob = sobrify(&a);
    let sa = sob.approach();
    ensure!(is_sober(&sa).sober, "the sobrification is not sober");
    ensure!(sob.collapse_holds(), "δ̂ differs from the Alexandroff distance of the specialization metric");
    for x in 0..s.len() {
        for y in 0..s.len() {
            ensure!(sob.space.d(sob.eta[x], sob.eta[y]) == s.d(x, y), "η is not isometric at {x},{y}");
        }
    }
    let again = sobrify(&sa);
    ensure!(
        again.primes.len() == sob.primes.len(),
        "sobrifying twice gives {} primes, once gives {}",
        again.primes.len(),
        sob.primes.len()
    );
    Ok(())
}

fn check_extension(doc: &Document) -> Check {
    let s = entry(doc, 0)?;
    let t = entry(doc, 1)?;
    let (ga, gb) = (alexandroff(&s.space), alexandroff(&t.space));
    ensure!(is_sober(&gb).sober, "target is not sober");
    let tw = weights(t)?;
    for m in &s.maps {
        let f = &m.assignment;
        let result = universal_extension(f, &ga, &gb);
        if !is_contraction(f, &ga, &gb) {
            ensure!(result == Err(SobrietyError::NotContraction), "{}: non-contraction was extended", m.name);
            continue;
        }
        let ext = result.map_err(|err| format!("{}: {err}", m.name))?;
        let sob = &ext.sobrification;
        for x in 0..s.space.len() {
            ensure!(ext.map[sob.eta[x]] == f[x], "{}: extension does not restrict to f at {x}", m.name);
        }
        ensure!(is_contraction(&ext.map, &sob.approach(), &gb), "{}: extension is not a contraction", m.name);
        for (i, phi) in sob.primes.iter().enumerate() {
            let dagger = extension_value(f, &gb, phi);
            ensure!(check_weight(&t.space, dagger.values().to_vec()).is_ok(), "{}: f†(φ) is not regular", m.name);
            ensure!(le(&compose(dagger.values(), f), phi.values()), "{}: f†(φ)∘f exceeds φ", m.name);
            ensure!(dagger == eta(&gb, ext.map[i]), "{}: f†(φ{i}) is not η of its image", m.name);
            for psi in &tw {
                if le(&compose(psi.values(), f), phi.values()) {
                    ensure!(
                        psi.le(&dagger),
                        "{}: ψ=[{}] has ψ∘f ≤ φ{i} but is not below f†(φ{i})=[{}]",
                        m.name,
                        show(psi.values()),
                        show(dagger.values())
                    );
                }
            }
        }
    }
    Ok(())
}

// -------------------------------------------------------------- completion

fn check_completion_sobrification(doc: &Document) -> Check {
    let s = &entry(doc, 0)?.space;
    let sob = sobrify(&alexandroff(s));
    let spec = specialization(&sob.approach());
    let comp = yoneda_completion(s);
    ensure!(
        sob.primes.len() == comp.weights.len(),
        "{} primes but {} flat weights",
        sob.primes.len(),
        comp.weights.len()
    );
    let bij: Vec<usize> = sob
        .primes
        .iter()
        .map(|p| comp.weights.iter().position(|w| w == p).ok_or_else(|| format!("prime [{}] is not flat", show(p.values()))))
        .collect::<Result<_, _>>()?;
    for i in 0..bij.len() {
        for j in 0..bij.len() {
            ensure!(
                spec.d(i, j) == comp.completed.d(bij[i], bij[j]),
                "distance between primes {i},{j} differs from the completion"
            );
        }
    }
    for x in 0..s.len() {
        ensure!(comp.embedding[x] == bij[sob.eta[x]], "η and the Yoneda embedding disagree at {x}");
    }
    Ok(())
}

fn check_main(doc: &Document) -> Check {
    let s = &entry(doc, 0)?.space;
    let sober = is_sober(&alexandroff(s)).sober;
    let complete = smyth_classify(s).complete;
    let iso = yoneda_completion(s).iso_flag;
    ensure!(
        sober == complete && complete == iso,
        "sober = {sober}, Smyth complete = {complete}, y_X bijective = {iso}"
    );
    Ok(())
}

fn check_completable(doc: &Document) -> Check {
    let s = &entry(doc, 0)?.space;
    let completable = smyth_classify(s).completable;
    let sob = sobrify(&alexandroff(s));
    let collapse = sob.collapse_holds() && sob.space.is_valid();
    let idempotent = completion_idempotent(&yoneda_completion(s));
    ensure!(
        completable && collapse && idempotent,
        "completable = {completable}, collapse = {collapse}, idempotent = {idempotent}"
    );
    Ok(())
}

fn check_weight_net(doc: &Document) -> Check {
    let e = entry(doc, 0)?;
    let ws = weights(e)?;
    let k = ws.len();
    if k == 0 {
        return Ok(());
    }
    let dist = (0..k * k).map(|i| sup_metric(&ws[i / k], &ws[i % k])).collect();
    let w = FiniteSpace::validate_flat((0..k).map(|i| format!("w{i}")).collect(), dist)
        .map_err(|err| format!("sup metric on weights: {err}"))?;
    for cycle in cycles(k, k.min(3)) {
        let net = Net::new(&w, Vec::new(), cycle.clone()).map_err(|err| err.to_string())?;
        if !classify_net(&w, &net).forward_cauchy {
            continue;
        }
        let members: Vec<Weight> = cycle.iter().map(|&i| ws[i].clone()).collect();
        let limit = weight_net_limit(&members);
        ensure!(check_weight(&e.space, limit.values().to_vec()).is_ok(), "limit of cycle {cycle:?} is not a weight");
        for xi in &ws {
            let tail: Vec<ExtVal> = members.iter().map(|m| sup_metric(m, xi)).collect();
            ensure!(
                sup_metric(&limit, xi) == tail_limsup(&tail),
                "limit of cycle {cycle:?} is not a Yoneda limit against [{}]",
                show(xi.values())
            );
        }
        if members.iter().all(|m| is_flat(&e.space, m)) {
            ensure!(is_flat(&e.space, &limit), "limit of flat cycle {cycle:?} is not flat");
        }
    }
    Ok(())
}

fn check_forward_cauchy(doc: &Document) -> Check {
    let e = entry(doc, 0)?;
    let s = &e.space;
    for nn in &e.nets {
        let net = &nn.net;
        let class = classify_net(s, net);
        if !class.forward_cauchy {
            continue;
        }
        let h = net.horizon();
        let starts = net.preperiod().len() + net.cycle().len();
        for x in 0..s.len() {
            let window = |l: usize| (l..h).map(|i| s.d(x, net.at(i)).clone()).collect::<Vec<_>>();
            let inf_sup = inf_owned((0..=starts).map(|l| sup_owned(window(l))));
            let sup_inf = sup_owned((0..=starts).map(|l| inf_owned(window(l))));
            ensure!(inf_sup == sup_inf, "{}: inf sup = {inf_sup}, sup inf = {sup_inf} at {x}", nn.name);
            let row: Vec<ExtVal> = net.cycle().iter().map(|&c| s.d(x, c).clone()).collect();
            ensure!(
                tail_limsup(&row) == inf_sup && tail_liminf(&row) == sup_inf,
                "{}: periodic evaluation differs from the direct one at {x}",
                nn.name
            );
        }
        let phi = net_weight(s, net).map_err(|err| err.to_string())?;
        for a in yoneda_limits(s, net) {
            for y in 0..s.len() {
                let target = tail_limsup(&net.cycle().iter().map(|&c| s.d(c, y).clone()).collect::<Vec<_>>());
                ensure!(*s.d(a, y) == target, "{}: {a} is reported as a Yoneda limit but fails at {y}", nn.name);
            }
            ensure!(representable(s, a) == phi, "{}: Yoneda limit {a} does not represent the net weight", nn.name);
        }
    }
    Ok(())
}

fn check_directed_complete(doc: &Document) -> Check {
    let s = &entry(doc, 0)?.space;
    ensure!(iota_met(s).is_directed_complete(), "underlying order is not directed complete");
    Ok(())
}

fn check_bicauchy_cauchy(doc: &Document) -> Check {
    let e = entry(doc, 0)?;
    let s = &e.space;
    let exhaustive = cycles(s.len(), s.len().min(4)).map(|c| Net::new(s, Vec::new(), c).expect("indices are in range"));
    let listed = e.nets.iter().map(|nn| nn.net.clone());
    for net in exhaustive.chain(listed) {
        let class = classify_net(s, &net);
        if !class.forward_cauchy {
            continue;
        }
        let phi = net_weight(s, &net).map_err(|err| err.to_string())?;
        let cauchy = is_cauchy(s, &phi).is_cauchy();
        ensure!(
            class.bicauchy == cauchy,
            "net with cycle {:?}: biCauchy = {}, Cauchy weight = {cauchy}",
            net.cycle(),
            class.bicauchy
        );
    }
    Ok(())
}

fn check_completion_quotient(doc: &Document) -> Check {
    let s = &entry(doc, 0)?.space;
    let comp = yoneda_completion(s);
    let (quotient, _) = s.separated_quotient();
    ensure!(comp.completed.matrix() == quotient.matrix(), "completion differs from the separated quotient");
    ensure!(comp.completed.classify().separated, "completion is not separated");
    ensure!(comp.is_bijective() == s.classify().separated, "y_X is bijective exactly for separated spaces");
    Ok(())
}

fn check_smyth_nets(doc: &Document) -> Check {
    let s = &entry(doc, 0)?.space;
    let by_weights = smyth_classify(s);
    let by_nets = smyth_classify_nets(s, s.len().min(4));
    ensure!(by_weights == by_nets, "flat weights give {by_weights:?}, nets give {by_nets:?}");
    Ok(())
}

fn check_flat_from_nets(doc: &Document) -> Check {
    let e = entry(doc, 0)?;
    let s = &e.space;
    let flats = flat_weights(s);
    for phi in &flats {
        let found = (0..s.len()).any(|x| net_weight(s, &Net::constant(x)).ok().as_ref() == Some(phi));
        ensure!(found, "flat weight [{}] is not the weight of a net", show(phi.values()));
        ensure!(!colimits(s, phi).is_empty(), "flat weight [{}] has no colimit", show(phi.values()));
    }
    for nn in &e.nets {
        if let Ok(phi) = net_weight(s, &nn.net) {
            ensure!(is_flat(s, &phi), "{}: net weight is not flat", nn.name);
            ensure!(flats.contains(&phi), "{}: net weight is missing from the flat weights", nn.name);
        }
    }
    for phi in weights(e)? {
        ensure!(!is_flat(s, &phi) || flats.contains(&phi), "flat weight [{}] is not enumerated", show(phi.values()));
    }
    ensure!(yoneda_complete_check(s), "space is not Yoneda complete");
    Ok(())
}

// ------------------------------------------------------------------ ordtop

fn check_squares(doc: &Document) -> Check {
    let s = &entry(doc, 0)?.space;
    let (_, p) = doc.orders.first().ok_or("document has no order")?;
    for report in [square_checks(SquareInstance::Order(p)), square_checks(SquareInstance::Approach(&alexandroff(s)))] {
        let failed: Vec<&str> = report.checks.iter().filter(|(_, ok)| !ok).map(|(label, _)| *label).collect();
        ensure!(failed.is_empty(), "failing squares: {}", failed.join(", "));
    }
    Ok(())
}

fn check_top_sober(doc: &Document) -> Check {
    entry(doc, 0)?;
    for (name, t) in &doc.topologies {
        let top = is_sober_top(t).sober;
        let app = is_sober(&omega_top(t)).sober;
        ensure!(top == app, "{name}: topologically sober = {top}, ω-image sober = {app}");
    }
    Ok(())
}

fn check_underlying_sober(doc: &Document) -> Check {
    let s = &entry(doc, 0)?.space;
    let a = alexandroff(s);
    if is_sober(&a).sober {
        ensure!(is_sober_top(&iota_app(&a)).sober, "sober approach space with non-sober underlying topology");
    }
    Ok(())
}

// ---------------------------------------------------------------- halfline

/// Twenty probe points of `[0, ∞]`, including both ends.
pub fn halfline_probes() -> Vec<ExtVal> {
    let r = |n, d| ExtVal::ratio(n, d);
    vec![
        ExtVal::zero(),
        r(1, 4),
        r(1, 3),
        r(1, 2),
        r(2, 3),
        ExtVal::from_int(1),
        r(3, 2),
        ExtVal::from_int(2),
        r(5, 2),
        ExtVal::from_int(3),
        ExtVal::from_int(4),
        ExtVal::from_int(5),
        ExtVal::from_int(6),
        r(13, 2),
        ExtVal::from_int(7),
        ExtVal::from_int(8),
        ExtVal::from_int(10),
        ExtVal::from_int(100),
        ExtVal::from_int(1000),
        ExtVal::inf(),
    ]
}

/// Every consistent abstract subset over the probe points, plus the empty set.
pub fn subset_grid() -> Vec<AbstractSubset> {
    let mut out = vec![AbstractSubset::empty()];
    for sup in halfline_probes() {
        for contains in [false, true] {
            if let Ok(a) = AbstractSubset::new(sup.clone(), contains, true) {
                out.push(a);
            }
        }
    }
    out
}

fn check_halfline_disagreement(_: &Document) -> Check {
    for x in halfline_probes() {
        let p = HalfLinePoint(x.clone());
        for a in subset_grid() {
            let differ = delta_p(&p, &a) != gamma_dr(&p, &a);
            let expected = x.is_infinite() && a.sup().is_infinite() && !a.contains_infinity() && a.is_nonempty();
            ensure!(differ == expected, "x={x}, A={a:?}: differ = {differ}, expected {expected}");
        }
    }
    Ok(())
}

fn check_p_sober(_: &Document) -> Check {
    for b in halfline_probes() {
        let p = HalfLinePoint(b.clone());
        for a in subset_grid().into_iter().filter(AbstractSubset::is_nonempty) {
            let value = p_sobriety_cases(&p, &a).map_err(|err| err.to_string())?;
            ensure!(value == delta_p(&p, &a), "b={b}, A={a:?}: {value} ≠ δ_ℙ");
            let (witness, attained) = p_sobriety_witness(&p, &a).map_err(|err| err.to_string())?;
            ensure!(attained == witness.hat_at(&b), "b={b}: witness does not attain the value");
        }
    }
    Ok(())
}

pub const SEQUENCE_DESCRIPTIONS: &[&str] = &[
    "const 0",
    "const 3",
    "const inf",
    "1,2; const 1/2",
    "0,inf; const 1",
    "affine 0 1",
    "affine 1 1/2",
    "2; affine 0 3",
    "harmonic 1 1",
    "harmonic 0 2",
    "harmonic 2 -1",
    "5,0; harmonic 2 1",
    "diverge 0,1,3",
    "diverge 1,2",
    "0; diverge 1,5",
];

/// Nondecreasing on the whole sequence: the tail is monotone by shape and
/// the prefix rises into it.
fn nondecreasing(seq: &RationalSeq) -> bool {
    let tail_monotone = match seq.tail() {
        Tail::Harmonic { c, .. } => *c <= BigRational::from_integer(0.into()),
        _ => true,
    };
    let n = seq.prefix().len() + 4;
    tail_monotone && (1..n).all(|i| seq.term(i) <= seq.term(i + 1))
}

fn check_halfline_sequences(_: &Document) -> Check {
    let probes = halfline_probes();
    for desc in SEQUENCE_DESCRIPTIONS {
        let seq: RationalSeq = desc.parse().map_err(|err| format!("{desc}: {err}"))?;
        for metric in [HalfMetric::DL, HalfMetric::DR] {
            let class = classify_seq(&seq, metric);
            if metric == HalfMetric::DR && nondecreasing(&seq) {
                ensure!(class.forward_cauchy, "{desc} is nondecreasing but not forward Cauchy under d_R");
            }
            // tails shrink, so any finite tail bounds the limit from the right side
            let far = seq.tail_set(seq.prefix().len() + 8);
            for x in &probes {
                let upper = inf_sup(&seq, metric, x);
                let lower = sup_inf(&seq, metric, x);
                ensure!(lower <= upper, "{desc}: sup inf exceeds inf sup at {x}");
                ensure!(upper <= far.sup_from(metric, x), "{desc}: inf sup exceeds a tail sup at {x}");
                ensure!(lower >= far.inf_from(metric, x), "{desc}: sup inf is below a tail inf at {x}");
                if class.forward_cauchy {
                    ensure!(upper == lower, "{desc} ({metric:?}): inf sup {upper} ≠ sup inf {lower} at {x}");
                }
            }
            if class.forward_cauchy {
                let limit = crate::halfline::yoneda_limit_seq(&seq, metric).map_err(|err| err.to_string())?;
                for y in &probes {
                    ensure!(
                        metric.d(&limit, y) == inf_sup_to(&seq, metric, y),
                        "{desc} ({metric:?}): {limit} is not a Yoneda limit at {y}"
                    );
                }
            }
        }
    }
    let n: RationalSeq = "affine 0 1".parse().map_err(|err| format!("{err}"))?;
    let class = classify_seq(&n, HalfMetric::DR);
    ensure!(class.forward_cauchy && !class.bicauchy, "{{n}} under d_R must be forward Cauchy and not biCauchy");
    let phi = FlatWeightDR::from_sequence(&n).map_err(|err| err.to_string())?;
    ensure!(phi.parameter().is_infinite() && !phi.representable(), "{{n}} must induce the non-representable flat weight");
    Ok(())
}
