use lawvere::approach::{alexandroff, is_contraction, is_regular, specialization};
use lawvere::extarith::{inf_owned, ExtVal};
use lawvere::format::{Document, NamedVector, SpaceEntry};
use lawvere::sobriety::{extension_value, prime_oracle, widehat, PrimeStatus};
use lawvere::space::FiniteSpace;
use lawvere::suite::{default_pool, min_plus_closure};
use lawvere::weights::{check_weight, is_flat, weight_coreflection, Weight};
use proptest::prelude::*;

fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("p{i}")).collect()
}

fn space_from(n: usize, codes: &[usize]) -> FiniteSpace {
    let pool = default_pool();
    let mut dist: Vec<ExtVal> = (0..n * n)
        .map(|i| if i / n == i % n { ExtVal::zero() } else { pool[codes[i] % pool.len()].clone() })
        .collect();
    min_plus_closure(n, &mut dist);
    FiniteSpace::validate_flat(names(n), dist).unwrap()
}

fn space(max: usize) -> impl Strategy<Value = FiniteSpace> {
    (1..=max).prop_flat_map(|n| proptest::collection::vec(0usize..7, n * n).prop_map(move |c| space_from(n, &c)))
}

/// A space with `k` raw vectors drawn from the pool.
fn space_with_vectors(max: usize, k: usize) -> impl Strategy<Value = (FiniteSpace, Vec<Vec<ExtVal>>)> {
    space(max).prop_flat_map(move |s| {
        let n = s.len();
        let pool = default_pool();
        let vectors = proptest::collection::vec(
            proptest::collection::vec(0usize..7, n).prop_map(move |c| c.iter().map(|&i| pool[i].clone()).collect()),
            k,
        );
        (Just(s), vectors)
    })
}

/// Every weight of the space with values in the pool.
fn pool_weights(s: &FiniteSpace) -> Vec<Weight> {
    let pool = default_pool();
    let n = s.len();
    (0..pool.len().pow(n as u32))
        .filter_map(|mut code| {
            let v: Vec<ExtVal> = (0..n)
                .map(|_| {
                    let x = pool[code % pool.len()].clone();
                    code /= pool.len();
                    x
                })
                .collect();
            check_weight(s, v).ok()
        })
        .collect()
}

fn shift_to_zero(v: Weight) -> Vec<ExtVal> {
    let m = v.infimum();
    if m.is_infinite() {
        return vec![ExtVal::zero(); v.len()];
    }
    v.minus(&m).into_values()
}

/// Flatness condition (b) in its ε-form over a grid of rational margins.
/// Pool values are multiples of 1/2, so margins below 1/2 decide it.
fn flat_by_grid(s: &FiniteSpace, phi: &[ExtVal]) -> bool {
    if !inf_owned(phi.iter().cloned()).is_zero() {
        return false;
    }
    let margins = [ExtVal::ratio(1, 1000), ExtVal::ratio(1, 3), ExtVal::from_int(1)];
    let tiny = ExtVal::ratio(1, 100_000);
    let n = s.len();
    for x1 in 0..n {
        for x2 in 0..n {
            if phi[x1].is_infinite() || phi[x2].is_infinite() {
                continue;
            }
            for m in &margins {
                let (e1, e2) = (phi[x1].add(m), phi[x2].add(m));
                let witnessed = (0..n).any(|y| {
                    let eps = phi[y].add(&tiny);
                    phi[y] < eps && s.d(x1, y).add(&eps) < e1 && s.d(x2, y).add(&eps) < e2
                });
                if !witnessed {
                    return false;
                }
            }
        }
    }
    true
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(5000))]

    /// A counterexample pair found by exhaustive search over pool-valued
    /// regular functions refutes primality; the oracle's own pairs are
    /// genuine.
    #[test]
    fn prime_oracle_matches_direct_search((s, vs) in space_with_vectors(3, 1)) {
        let a = alexandroff(&s);
        let phi = shift_to_zero(weight_coreflection(&s, &vs[0]));
        let witness = prime_oracle(&a, &phi).unwrap();
        let regular = pool_weights(&s);
        let below = |v: &Weight| v.values().iter().zip(&phi).all(|(l, r)| l <= r);
        let direct = regular.iter().any(|xi| {
            !below(xi) && regular.iter().any(|psi| !below(psi) && below(&xi.meet(psi)))
        });
        if direct {
            prop_assert!(!witness.is_prime());
        }
        if let PrimeStatus::Counterexample { xi, psi, .. } = &witness.status {
            prop_assert!(is_regular(&a, xi.values()) && is_regular(&a, psi.values()));
            prop_assert!(!below(xi) && !below(psi) && below(&xi.meet(psi)));
        }
        prop_assert_eq!(witness.is_prime(), is_flat(&specialization(&a), &witness.phi));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn flatness_matches_grid_search((s, vs) in space_with_vectors(4, 4)) {
        for v in vs {
            let w = weight_coreflection(&s, &v);
            let candidates = [w.clone().into_values(), shift_to_zero(w)];
            for phi in candidates {
                let weight = check_weight(&s, phi.clone()).unwrap();
                prop_assert_eq!(is_flat(&s, &weight), flat_by_grid(&s, &phi), "φ = {:?}", phi);
            }
        }
    }

    /// `f†(φ)` is the largest pool-valued regular function `ψ` with
    /// `ψ ∘ f ≤ φ`, checked exhaustively on small targets.
    #[test]
    fn extension_value_is_the_largest_majorant(
        (s, vs) in space_with_vectors(4, 3),
        target in space(3),
        f_codes in proptest::collection::vec(0usize..3, 4),
    ) {
        let f: Vec<usize> = (0..s.len()).map(|x| f_codes[x] % target.len()).collect();
        let (ga, gb) = (alexandroff(&s), alexandroff(&target));
        prop_assume!(is_contraction(&f, &ga, &gb));
        let candidates = pool_weights(&target);
        for v in vs {
            let phi = weight_coreflection(&s, &v);
            let dagger = extension_value(&f, &gb, &phi);
            prop_assert!(check_weight(&target, dagger.values().to_vec()).is_ok());
            let composed = |psi: &Weight| f.iter().map(|&y| psi.get(y).clone()).collect::<Vec<_>>();
            let fits = |psi: &Weight| composed(psi).iter().zip(phi.values()).all(|(l, r)| l <= r);
            prop_assert!(fits(&dagger));
            for psi in candidates.iter().filter(|psi| fits(psi)) {
                prop_assert!(psi.le(&dagger), "ψ = {:?} exceeds f†(φ) = {:?}", psi, dagger);
            }
        }
    }

    #[test]
    fn widehat_separates_regular_functions((s, vs) in space_with_vectors(4, 2)) {
        let xi = weight_coreflection(&s, &vs[0]);
        let psi = weight_coreflection(&s, &vs[1]);
        let reps: Vec<Weight> = (0..s.len()).map(|x| lawvere::weights::representable(&s, x)).collect();
        for (x, r) in reps.iter().enumerate() {
            prop_assert_eq!(&widehat(xi.values(), r), xi.get(x));
        }
        let hat_le = reps.iter().all(|r| widehat(xi.values(), r) <= widehat(psi.values(), r));
        prop_assert_eq!(hat_le, xi.le(&psi));
    }

    #[test]
    fn documents_round_trip((s, vs) in space_with_vectors(5, 3)) {
        let mut entry = SpaceEntry::new("s", s.clone());
        for (i, v) in vs.into_iter().enumerate() {
            entry.weights.push(NamedVector { name: format!("w{i}"), values: weight_coreflection(&s, &v).into_values() });
            entry.vectors.push(NamedVector { name: format!("v{i}"), values: v });
        }
        let doc = Document { spaces: vec![entry], ..Document::default() };
        let text = doc.serialize();
        prop_assert_eq!(Document::parse(&text).unwrap(), doc);
    }

    #[test]
    fn generated_spaces_are_metrics(s in space(8)) {
        prop_assert!(s.is_valid());
    }
}
