//! Acceptance criteria, one line per criterion. Exits nonzero if any fails.

use std::time::{Duration, Instant};

use lawvere::approach::{alexandroff, is_regular, specialization};
use lawvere::completion::{classify_net, cycles, net_weight, smyth_classify, yoneda_completion, Net};
use lawvere::extarith::{inf_owned, lawvere as d_l, sup_owned, ExtVal};
use lawvere::halfline::{
    classify_seq, delta_p, gamma_dr, inf_sup, p_sobriety_cases, sup_inf, yoneda_limit_seq, HalfLinePoint, HalfMetric,
    RationalSeq, Tail,
};
use lawvere::ordtop::{alexandroff_top, is_sober_top, omega_top, square_checks, SquareInstance};
use lawvere::sobriety::{enumerate_primes, eta, is_sober, prime_oracle, sobrify, widehat};
use lawvere::space::FiniteSpace;
use lawvere::suite::laws::{halfline_probes, subset_grid, SEQUENCE_DESCRIPTIONS};
use lawvere::suite::{default_pool, generate_space, Gen, SuiteConfig};
use lawvere::weights::{
    check_weight, corepresentable, is_cauchy, is_flat, left_adjoint_candidate, representable, sup_metric, tensor,
    Coweight, Weight,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(violations: usize, detail: String) -> Outcome {
    Outcome {
        pass: violations == 0,
        detail,
    }
}

fn config(max_points: usize) -> SuiteConfig {
    SuiteConfig {
        seed: 42,
        max_points,
        ..SuiteConfig::default()
    }
}

fn spaces(seed: u64, count: usize, max_points: usize) -> Vec<FiniteSpace> {
    let cfg = config(max_points);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| generate_space(&mut rng, &cfg)).collect()
}

fn main_chain(spaces: &[FiniteSpace]) -> Outcome {
    let start = Instant::now();
    let mut violations = 0;
    let mut sober_count = 0;
    for s in spaces {
        let sober = is_sober(&alexandroff(s)).sober;
        let complete = smyth_classify(s).complete;
        let iso = yoneda_completion(s).iso_flag;
        sober_count += usize::from(sober);
        violations += usize::from(!(sober == complete && complete == iso));
    }
    let elapsed = start.elapsed();
    let slow = elapsed >= Duration::from_secs(60);
    outcome(
        violations + usize::from(slow),
        format!(
            "{} spaces, {sober_count} sober, {violations} violations, {:.2} s",
            spaces.len(),
            elapsed.as_secs_f64()
        ),
    )
}

fn sobrification_is_completion(spaces: &[FiniteSpace]) -> Outcome {
    let mut violations = 0;
    for s in spaces {
        let sob = sobrify(&alexandroff(s));
        let spec = specialization(&sob.approach());
        let comp = yoneda_completion(s);
        let bij: Option<Vec<usize>> = sob
            .primes
            .iter()
            .map(|p| comp.weights.iter().position(|w| w == p))
            .collect();
        let ok = match bij {
            Some(bij) if bij.len() == comp.weights.len() => {
                let mut sorted = bij.clone();
                sorted.sort_unstable();
                sorted.dedup();
                sorted.len() == bij.len()
                    && (0..bij.len())
                        .all(|i| (0..bij.len()).all(|j| spec.d(i, j) == comp.completed.d(bij[i], bij[j])))
                    && (0..s.len()).all(|x| comp.embedding[x] == bij[sob.eta[x]])
            }
            _ => false,
        };
        violations += usize::from(!ok);
    }
    outcome(violations, format!("{} spaces, {violations} violations", spaces.len()))
}

/// Every weight with values in the pool and zero infimum, on carriers of at
/// most three points.
fn enumerated_candidates(s: &FiniteSpace) -> Vec<Vec<ExtVal>> {
    let pool = default_pool();
    let n = s.len();
    let total = pool.len().pow(n as u32);
    (0..total)
        .map(|mut code| {
            (0..n)
                .map(|_| {
                    let v = pool[code % pool.len()].clone();
                    code /= pool.len();
                    v
                })
                .collect::<Vec<_>>()
        })
        .filter(|v| inf_owned(v.iter().cloned()).is_zero() && check_weight(s, v.clone()).is_ok())
        .collect()
}

fn prime_flat() -> Outcome {
    let mut disagreements = 0;
    let mut enumerated = 0;
    for s in spaces(1042, 60, 3) {
        let a = alexandroff(&s);
        let spec = specialization(&a);
        let mut candidates = enumerated_candidates(&s);
        candidates.extend(enumerate_primes(&a).into_iter().map(Weight::into_values));
        for v in candidates {
            let w = prime_oracle(&a, &v).expect("candidate is regular with zero infimum");
            disagreements += usize::from(w.is_prime() != is_flat(&spec, &w.phi));
            enumerated += 1;
        }
    }
    let cfg = config(6);
    let mut rng = ChaCha8Rng::seed_from_u64(2042);
    let mut randomized = 0;
    while randomized < 5000 {
        let s = generate_space(&mut rng, &cfg);
        let a = alexandroff(&s);
        let spec = specialization(&a);
        for _ in 0..50 {
            let v = Gen {
                rng: &mut rng,
                config: &cfg,
            }
            .zero_inf_weight(&s);
            assert!(is_regular(&a, &v));
            let w = prime_oracle(&a, &v).expect("randomized function is regular with zero infimum");
            disagreements += usize::from(w.is_prime() != is_flat(&spec, &w.phi));
            randomized += 1;
        }
    }
    outcome(
        disagreements,
        format!("{enumerated} enumerated and {randomized} randomized candidates, {disagreements} disagreements"),
    )
}

fn widehat_calculus() -> Outcome {
    let cfg = config(6);
    let mut rng = ChaCha8Rng::seed_from_u64(3042);
    let pool = default_pool();
    let mut failures = [0usize; 6];
    let mut tuples = 0;
    for _ in 0..100 {
        let s = generate_space(&mut rng, &cfg);
        let a = alexandroff(&s);
        let primes = enumerate_primes(&a);
        let hat = |xi: &Weight| primes.iter().map(|p| widehat(xi.values(), p)).collect::<Vec<_>>();
        for _ in 0..200 {
            let mut g = Gen {
                rng: &mut rng,
                config: &cfg,
            };
            let xi = Weight::new_unchecked(g.weight(&s));
            let psi = Weight::new_unchecked(g.weight(&s));
            let phi = primes.choose(g.rng).expect("every space has a prime").clone();
            let alpha = pool.choose(g.rng).expect("pool is nonempty").clone();
            let x = g.rng.gen_range(0..s.len());
            let at = |w: &Weight| widehat(w.values(), &phi);
            let checks = [
                widehat(xi.values(), &eta(&a, x)) == *xi.get(x),
                xi.le(&psi) == hat(&xi).iter().zip(hat(&psi)).all(|(l, r)| *l <= r),
                at(&xi).is_zero() == xi.le(&phi),
                at(&xi.join(&psi)) == at(&xi).max_with(&at(&psi)),
                at(&xi.meet(&psi)) == at(&xi).min_with(&at(&psi)),
                at(&xi.plus(&alpha)) == at(&xi).add(&alpha) && at(&xi.minus(&alpha)) == at(&xi).monus(&alpha),
            ];
            for (i, ok) in checks.iter().enumerate() {
                failures[i] += usize::from(!ok);
            }
            tuples += 1;
        }
    }
    let total: usize = failures.iter().sum();
    outcome(total, format!("{tuples} tuples over 100 spaces, failures per identity {failures:?}"))
}

fn cauchy_weight_laws() -> Outcome {
    let cfg = config(6);
    let mut rng = ChaCha8Rng::seed_from_u64(4042);
    let mut failures = [0usize; 6];
    let mut cauchy_count = 0;
    let mut weights_seen = 0;
    for _ in 0..100 {
        let s = generate_space(&mut rng, &cfg);
        let n = s.len();
        let mut g = Gen {
            rng: &mut rng,
            config: &cfg,
        };
        let mut ws: Vec<Weight> = (0..20).map(|_| Weight::new_unchecked(g.weight(&s))).collect();
        ws.extend((0..n).map(|x| representable(&s, x)));
        let shifted: Vec<Weight> = ws
            .iter()
            .filter(|w| w.infimum().is_finite())
            .map(|w| w.minus(&w.infimum()))
            .collect();
        ws.extend(shifted);
        let mut cs: Vec<Coweight> = (0..20).map(|_| Coweight::new_unchecked(g.coweight(&s))).collect();
        cs.extend((0..n).map(|x| corepresentable(&s, x)));
        for phi in &ws {
            weights_seen += 1;
            let cauchy = is_cauchy(&s, phi).is_cauchy();
            failures[5] += usize::from(cauchy != is_flat(&s, phi));
            if !cauchy {
                continue;
            }
            cauchy_count += 1;
            let cand = left_adjoint_candidate(&s, phi);
            let adjoint = tensor(phi, &cand).is_zero()
                && (0..n).all(|x| (0..n).all(|y| phi.get(x).add(cand.get(y)) >= *s.d(x, y)));
            failures[4] += usize::from(!adjoint);
            for psi in &cs {
                let rhs = sup_owned((0..n).map(|y| d_l(cand.get(y), psi.get(y))));
                failures[0] += usize::from(tensor(phi, psi) != rhs);
                for chi in &cs {
                    failures[2] += usize::from(tensor(phi, &psi.join(chi)) != tensor(phi, psi).max_with(&tensor(phi, chi)));
                }
            }
            for xi in &ws {
                failures[1] += usize::from(tensor(xi, &cand) != sup_metric(phi, xi));
                for zeta in &ws {
                    failures[3] += usize::from(
                        sup_metric(phi, &xi.meet(zeta)) != sup_metric(phi, xi).min_with(&sup_metric(phi, zeta)),
                    );
                }
            }
        }
    }
    let total: usize = failures.iter().sum();
    outcome(
        total,
        format!(
            "{weights_seen} weights, {cauchy_count} Cauchy; failures (1),(2),(3),(4),adjunction,cauchy-vs-flat = {failures:?}"
        ),
    )
}

fn bicauchy_bridge() -> Outcome {
    let mut disagreements = 0;
    let mut nets = 0;
    for s in spaces(5042, 100, 6) {
        for cycle in cycles(s.len(), s.len().min(4)) {
            for pre in [Vec::new(), vec![s.len() - 1]] {
                let net = Net::new(&s, pre, cycle.clone()).expect("indices are in range");
                let class = classify_net(&s, &net);
                if !class.forward_cauchy {
                    continue;
                }
                nets += 1;
                let phi = net_weight(&s, &net).expect("forward Cauchy");
                disagreements += usize::from(class.bicauchy != is_cauchy(&s, &phi).is_cauchy());
            }
        }
    }
    outcome(disagreements, format!("{nets} forward Cauchy nets, {disagreements} disagreements"))
}

fn axiom_equivalence() -> Outcome {
    let cfg = config(5);
    let mut rng = ChaCha8Rng::seed_from_u64(6042);
    let mut disagreements = 0;
    let mut rejected = 0;
    for _ in 0..200 {
        let s = generate_space(&mut rng, &cfg);
        let valid = alexandroff(&s).table();
        disagreements += usize::from(!(valid.accepts_with_a4() && valid.accepts_with_a4prime()));
        let perturbed = Gen {
            rng: &mut rng,
            config: &cfg,
        }
        .perturbed_table(&s);
        let (a4, a4p) = (perturbed.accepts_with_a4(), perturbed.accepts_with_a4prime());
        disagreements += usize::from(a4 != a4p);
        rejected += usize::from(!a4);
    }
    outcome(
        disagreements,
        format!("200 valid and 200 perturbed tables ({rejected} perturbations rejected), {disagreements} disagreements"),
    )
}

fn squares_and_top_sober() -> Outcome {
    let cfg = config(5);
    let mut rng = ChaCha8Rng::seed_from_u64(7042);
    let mut violations = 0;
    let mut sober = 0;
    for _ in 0..200 {
        let mut g = Gen {
            rng: &mut rng,
            config: &cfg,
        };
        let p = g.preorder(5);
        let s = g.space(5);
        violations += usize::from(!square_checks(SquareInstance::Order(&p)).all_pass());
        violations += usize::from(!square_checks(SquareInstance::Approach(&alexandroff(&s))).all_pass());
        let t = alexandroff_top(&p);
        let top = is_sober_top(&t).sober;
        sober += usize::from(top);
        violations += usize::from(top != is_sober(&omega_top(&t)).sober);
    }
    outcome(
        violations,
        format!("200 preorders and spaces, {sober} sober topologies, {violations} violations"),
    )
}

fn halfline_exemplars() -> Outcome {
    let mut violations = 0;
    let mut disagreements = 0;
    let mut cells = 0;
    for x in halfline_probes() {
        let p = HalfLinePoint(x.clone());
        for a in subset_grid() {
            cells += 1;
            let differ = delta_p(&p, &a) != gamma_dr(&p, &a);
            let predicted = x.is_infinite() && a.sup().is_infinite() && !a.contains_infinity() && a.is_nonempty();
            disagreements += usize::from(differ);
            violations += usize::from(differ != predicted);
            if a.is_nonempty() {
                violations += usize::from(p_sobriety_cases(&p, &a).ok() != Some(delta_p(&p, &a)));
            }
        }
    }
    let n: RationalSeq = "affine 0 1".parse().expect("valid description");
    let class = classify_seq(&n, HalfMetric::DR);
    let limit = yoneda_limit_seq(&n, HalfMetric::DR).ok();
    let seq_ok = class.forward_cauchy && !class.bicauchy && limit == Some(ExtVal::inf());
    violations += usize::from(!seq_ok);
    outcome(
        violations,
        format!(
            "{cells} grid cells, {disagreements} disagreements all on the predicted set; {{n}} under d_R: forward Cauchy {}, biCauchy {}, limit {}",
            class.forward_cauchy,
            class.bicauchy,
            limit.map_or("none".into(), |l| l.to_string())
        ),
    )
}

/// The common value of inf-sup and sup-inf read off the tail shape: a
/// convergent tail `x_n → L` gives `d(x, L)`; under `d_R` a tail tending to
/// infinity gives `x ⊖ x_n → 0` for finite `x` and `∞` at `x = ∞`.
fn expected_limit(seq: &RationalSeq, metric: HalfMetric, x: &ExtVal) -> ExtVal {
    match seq.tail() {
        Tail::Const(c) => metric.d(x, c),
        Tail::Harmonic { limit, .. } => metric.d(x, &ExtVal::from_rational(limit.clone()).expect("nonnegative limit")),
        Tail::Affine { .. } | Tail::Diverge(_) => {
            assert_eq!(metric, HalfMetric::DR, "divergent tails are forward Cauchy only under d_R");
            if x.is_infinite() {
                ExtVal::inf()
            } else {
                ExtVal::zero()
            }
        }
    }
}

fn forward_cauchy_sequences() -> Outcome {
    let probes = halfline_probes();
    let mut violations = 0;
    let mut classified = 0;
    for desc in SEQUENCE_DESCRIPTIONS {
        let seq: RationalSeq = desc.parse().expect("valid description");
        for metric in [HalfMetric::DL, HalfMetric::DR] {
            if !classify_seq(&seq, metric).forward_cauchy {
                continue;
            }
            classified += 1;
            for x in &probes {
                let upper = inf_sup(&seq, metric, x);
                let lower = sup_inf(&seq, metric, x);
                violations += usize::from(upper != lower || upper != expected_limit(&seq, metric, x));
            }
        }
    }
    outcome(
        violations,
        format!("{classified} forward Cauchy (sequence, metric) pairs at {} probe points, {violations} violations", probes.len()),
    )
}

fn main() {
    let main_spaces = spaces(42, 500, 6);
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("main theorem chain", Box::new(|| main_chain(&main_spaces))),
        ("sobrification equals Yoneda completion", Box::new(|| sobrification_is_completion(&main_spaces))),
        ("prime/flat equivalence", Box::new(prime_flat)),
        ("widehat calculus (1)-(6)", Box::new(widehat_calculus)),
        ("Cauchy-weight laws and is_cauchy <=> is_flat", Box::new(cauchy_weight_laws)),
        ("biCauchy bridge", Box::new(bicauchy_bridge)),
        ("(A4) <=> (A4') on valid and perturbed tables", Box::new(axiom_equivalence)),
        ("functor squares and topological sobriety", Box::new(squares_and_top_sober)),
        ("half-line exemplars", Box::new(halfline_exemplars)),
        ("forward Cauchy sequences converge", Box::new(forward_cauchy_sequences)),
    ];
    let mut failed = 0;
    for (name, run) in &criteria {
        let o = run();
        failed += usize::from(!o.pass);
        println!("{} {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    println!("{} criteria, {failed} failed", criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
