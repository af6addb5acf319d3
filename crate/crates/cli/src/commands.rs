use std::fmt::Write as _;
use std::path::Path;

use lawvere::approach::validate_approach;
use lawvere::completion::{classify_net, net_weight, smyth_classify, yoneda_limits};
use lawvere::halfline::{classify_seq, delta_p, gamma_dr, yoneda_limit_seq, FlatWeightDR};
use lawvere::ordtop::{alexandroff_top, is_sober_top, square_checks, SquareInstance};
use lawvere::sobriety::Sobrification;
use lawvere::suite::{find_law, registry, replay, run_law, Gen, LawReport};
use lawvere::{
    alexandroff, sobriety, yoneda_completion, AbstractSubset, Document, ExtVal, FiniteApproach,
    FiniteTopology, HalfLinePoint, HalfMetric, RationalSeq, SuiteConfig,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::output::{emit, joined, matrix_json, matrix_text, values, Format, Outcome};

type CmdResult = Result<Outcome, String>;

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load(path: &Path) -> Result<Document, String> {
    Document::parse(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

/// Every Alexandroff approach of a space plus every approach table.
fn approaches(doc: &Document) -> Result<Vec<(String, FiniteApproach)>, String> {
    let mut out: Vec<(String, FiniteApproach)> = doc
        .spaces
        .iter()
        .map(|e| (e.name.clone(), alexandroff(&e.space)))
        .collect();
    for (name, _) in &doc.approaches {
        out.push((name.clone(), doc.approach(name).map_err(|e| e.to_string())?));
    }
    Ok(out)
}

pub fn check(path: &Path, f: Format) -> CmdResult {
    let doc = Document::parse_unchecked(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))?;
    let mut ok = true;
    let mut human = String::new();
    let mut items = Vec::new();
    for e in &doc.spaces {
        let violations: Vec<String> = e.space.violations().iter().map(ToString::to_string).collect();
        ok &= violations.is_empty();
        if violations.is_empty() {
            let flags = e.space.classify();
            writeln!(
                human,
                "space {}: valid (symmetric {}, separated {}, finitary {})",
                e.name, flags.symmetric, flags.separated, flags.finitary
            )
            .unwrap();
        } else {
            writeln!(human, "space {}: invalid", e.name).unwrap();
            for v in &violations {
                writeln!(human, "  {v}").unwrap();
            }
        }
        items.push(json!({"kind": "space", "name": e.name, "valid": violations.is_empty(), "violations": violations}));
    }
    for (name, table) in &doc.approaches {
        let result = validate_approach(table);
        let agree = table.accepts_with_a4() == table.accepts_with_a4prime();
        ok &= result.is_ok() && agree;
        let status = match &result {
            Ok(_) => "valid".to_string(),
            Err(e) => format!("invalid: {e}"),
        };
        writeln!(human, "approach {name}: {status}").unwrap();
        items.push(json!({"kind": "approach", "name": name, "valid": result.is_ok(), "a4_agrees": agree}));
    }
    for (name, _) in &doc.orders {
        writeln!(human, "order {name}: valid").unwrap();
        items.push(json!({"kind": "order", "name": name, "valid": true}));
    }
    for (name, _) in &doc.topologies {
        writeln!(human, "topology {name}: valid").unwrap();
        items.push(json!({"kind": "topology", "name": name, "valid": true}));
    }
    emit(f, &human, &json!({"valid": ok, "items": items}));
    Ok(Outcome::from_bool(ok))
}

pub fn classify(path: &Path, f: Format) -> CmdResult {
    let doc = load(path)?;
    let mut human = String::new();
    let mut items = Vec::new();
    for e in &doc.spaces {
        let flags = e.space.classify();
        let smyth = smyth_classify(&e.space);
        let sober = sobriety::is_sober(&alexandroff(&e.space)).sober;
        writeln!(
            human,
            "space {}: symmetric {}, separated {}, finitary {}, Smyth complete {}, Smyth completable {}, sober {}",
            e.name, flags.symmetric, flags.separated, flags.finitary, smyth.complete, smyth.completable, sober
        )
        .unwrap();
        items.push(json!({"name": e.name, "flags": flags, "smyth": smyth, "sober": sober}));
    }
    emit(f, &human, &json!(items));
    Ok(Outcome::Pass)
}

pub fn complete(path: &Path, f: Format) -> CmdResult {
    let doc = load(path)?;
    let mut human = String::new();
    let mut items = Vec::new();
    for e in &doc.spaces {
        let c = yoneda_completion(&e.space);
        let embedding: Vec<&str> = c.embedding.iter().map(|&i| c.completed.point(i)).collect();
        writeln!(
            human,
            "space {}: {} flat weights, embedding bijective {}",
            e.name,
            c.completed.len(),
            c.iso_flag
        )
        .unwrap();
        human.push_str(&matrix_text(&c.completed, "  "));
        for (x, target) in e.space.points().iter().zip(&embedding) {
            writeln!(human, "  y({x}) = {target}").unwrap();
        }
        items.push(json!({
            "name": e.name,
            "completed": matrix_json(&c.completed),
            "weights": c.weights.iter().map(|w| values(w.values())).collect::<Vec<_>>(),
            "embedding": embedding,
            "iso": c.iso_flag,
        }));
    }
    emit(f, &human, &json!(items));
    Ok(Outcome::Pass)
}

fn sobrification_report(name: &str, a: &FiniteApproach, s: &Sobrification, human: &mut String) -> Value {
    let carrier = if s.primes.len() == 1 { "one-point carrier".to_string() } else { format!("{} points", s.primes.len()) };
    writeln!(human, "{name}: sobrification has a {carrier}").unwrap();
    human.push_str(&matrix_text(&s.space, "  "));
    let eta: Vec<&str> = s.eta.iter().map(|&i| s.space.point(i)).collect();
    for (x, target) in a.points().iter().zip(&eta) {
        writeln!(human, "  η({x}) = {target}").unwrap();
    }
    json!({
        "name": name,
        "primes": s.primes.iter().map(|p| values(p.values())).collect::<Vec<_>>(),
        "space": matrix_json(&s.space),
        "eta": eta,
    })
}

pub fn sobrify(path: &Path, f: Format) -> CmdResult {
    let doc = load(path)?;
    let mut human = String::new();
    let items: Vec<Value> = approaches(&doc)?
        .iter()
        .map(|(name, a)| sobrification_report(name, a, &sobriety::sobrify(a), &mut human))
        .collect();
    emit(f, &human, &json!(items));
    Ok(Outcome::Pass)
}

pub fn is_sober(path: &Path, f: Format) -> CmdResult {
    let doc = load(path)?;
    let mut human = String::new();
    let mut items = Vec::new();
    let mut all = true;
    for (name, a) in approaches(&doc)? {
        let check = sobriety::is_sober(&a);
        all &= check.sober;
        match &check.witness {
            None => writeln!(human, "{name}: sober").unwrap(),
            Some(w) => {
                let pre: Vec<&str> = w.preimages.iter().map(|&x| a.points()[x].as_str()).collect();
                writeln!(
                    human,
                    "{name}: not sober; prime [{}] is η of {} points{}",
                    joined(w.prime.values()),
                    pre.len(),
                    if pre.is_empty() { String::new() } else { format!(" ({})", pre.join(", ")) }
                )
                .unwrap();
            }
        }
        items.push(json!({
            "name": name,
            "sober": check.sober,
            "witness": check.witness.as_ref().map(|w| json!({
                "prime": values(w.prime.values()),
                "preimages": w.preimages.iter().map(|&x| a.points()[x].clone()).collect::<Vec<_>>(),
            })),
        }));
    }
    emit(f, &human, &json!(items));
    Ok(Outcome::from_bool(all))
}

pub fn net(path: &Path, f: Format) -> CmdResult {
    let doc = load(path)?;
    let mut human = String::new();
    let mut items = Vec::new();
    for e in &doc.spaces {
        for nn in &e.nets {
            let class = classify_net(&e.space, &nn.net);
            let weight = net_weight(&e.space, &nn.net).ok();
            let limits: Vec<&str> = if class.forward_cauchy {
                yoneda_limits(&e.space, &nn.net).iter().map(|&a| e.space.point(a)).collect()
            } else {
                Vec::new()
            };
            write!(
                human,
                "{}.{}: forward Cauchy {}, biCauchy {}",
                e.name, nn.name, class.forward_cauchy, class.bicauchy
            )
            .unwrap();
            if let Some(w) = &weight {
                write!(human, ", weight [{}], Yoneda limits {{{}}}", joined(w.values()), limits.join(" ")).unwrap();
            }
            human.push('\n');
            items.push(json!({
                "space": e.name,
                "net": nn.name,
                "class": class,
                "weight": weight.as_ref().map(|w| values(w.values())),
                "limits": limits,
            }));
        }
    }
    emit(f, &human, &json!(items));
    Ok(Outcome::Pass)
}

pub fn top_sober(path: &Path, f: Format) -> CmdResult {
    let doc = load(path)?;
    let mut targets: Vec<(String, FiniteTopology)> = doc.topologies.clone();
    targets.extend(doc.orders.iter().map(|(name, p)| (name.clone(), alexandroff_top(p))));
    let mut human = String::new();
    let mut items = Vec::new();
    let mut all = true;
    for (name, t) in &targets {
        let check = is_sober_top(t);
        all &= check.sober;
        match &check.witness {
            None => writeln!(human, "{name}: sober").unwrap(),
            Some(w) => {
                let generic: Vec<&str> = w.generic.iter().map(|&x| t.points()[x].as_str()).collect();
                writeln!(
                    human,
                    "{name}: not sober; irreducible closed set {} has {} generic points",
                    w.closed.render(t.points()),
                    generic.len()
                )
                .unwrap();
            }
        }
        items.push(json!({"name": name, "sober": check.sober}));
    }
    emit(f, &human, &json!(items));
    Ok(Outcome::from_bool(all))
}

pub fn squares(seed: u64, cases: usize, f: Format) -> CmdResult {
    if cases == 0 {
        return Err("cases must be at least 1".into());
    }
    let config = SuiteConfig { seed, ..SuiteConfig::default() };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tally: Vec<(&'static str, usize)> = Vec::new();
    for _ in 0..cases {
        let mut g = Gen { rng: &mut rng, config: &config };
        let p = g.preorder(5);
        let s = g.space(5);
        let reports = [square_checks(SquareInstance::Order(&p)), square_checks(SquareInstance::Approach(&alexandroff(&s)))];
        for (label, ok) in reports.iter().flat_map(|r| r.checks.iter()) {
            match tally.iter_mut().find(|(l, _)| l == label) {
                Some(entry) => entry.1 += usize::from(!ok),
                None => tally.push((label, usize::from(!ok))),
            }
        }
    }
    let mut human = String::new();
    for (label, failures) in &tally {
        writeln!(human, "{} {label} ({failures} failures in {cases} cases)", if *failures == 0 { "PASS" } else { "FAIL" }).unwrap();
    }
    let all = tally.iter().all(|(_, n)| *n == 0);
    let items: Vec<Value> = tally.iter().map(|(l, n)| json!({"square": l, "failures": n, "cases": cases})).collect();
    emit(f, &human, &json!(items));
    Ok(Outcome::from_bool(all))
}

fn ext(s: &str) -> Result<ExtVal, String> {
    s.parse().map_err(|e| format!("{s}: {e}"))
}

pub fn halfline_eval(is_delta_p: bool, x: &str, sup: &str, contains_inf: bool, empty: bool, f: Format) -> CmdResult {
    let point = HalfLinePoint(ext(x)?);
    let subset = if empty {
        AbstractSubset::empty()
    } else {
        AbstractSubset::new(ext(sup)?, contains_inf, true).map_err(|e| e.to_string())?
    };
    let (name, value) = if is_delta_p {
        ("deltaP", delta_p(&point, &subset))
    } else {
        ("gammaDR", gamma_dr(&point, &subset))
    };
    emit(f, &format!("{name}({x}, A) = {value}\n"), &json!({"distance": name, "value": value.to_string()}));
    Ok(Outcome::Pass)
}

pub fn halfline_seq(metric: &str, desc: &str, f: Format) -> CmdResult {
    let metric: HalfMetric = metric.parse().map_err(|e| format!("{e}"))?;
    let seq: RationalSeq = desc.parse().map_err(|e| format!("{e}"))?;
    let class = classify_seq(&seq, metric);
    let limit = yoneda_limit_seq(&seq, metric).ok();
    let mut human = format!(
        "{seq}: {:?}, forward Cauchy {}, biCauchy {}",
        class.kind, class.forward_cauchy, class.bicauchy
    );
    if let Some(l) = &limit {
        write!(human, ", Yoneda limit {l}").unwrap();
    }
    let mut flat = None;
    if metric == HalfMetric::DR && class.forward_cauchy {
        let w = FlatWeightDR::from_sequence(&seq).map_err(|e| e.to_string())?;
        write!(human, ", flat weight x ⊖ {} (representable {})", w.parameter(), w.representable()).unwrap();
        flat = Some(json!({"parameter": w.parameter().to_string(), "representable": w.representable()}));
    }
    human.push('\n');
    emit(
        f,
        &human,
        &json!({"sequence": seq.to_string(), "class": class, "limit": limit.map(|l| l.to_string()), "flat_weight": flat}),
    );
    Ok(Outcome::Pass)
}

fn report_json(r: &LawReport) -> Value {
    json!({"law": r.law, "paper_ref": r.paper_ref, "pass": r.pass, "counterexample": r.counterexample})
}

pub fn props_run(config: SuiteConfig, law: Option<&str>, f: Format) -> CmdResult {
    config.validate().map_err(|e| e.to_string())?;
    let reports = match law {
        Some(id) => vec![run_law(&find_law(id).ok_or_else(|| format!("unknown law {id}"))?, &config)],
        None => lawvere::run_suite(&config).map_err(|e| e.to_string())?,
    };
    let all = reports.iter().all(|r| r.pass);
    match f {
        Format::Json => {
            for r in &reports {
                println!("{}", report_json(r));
            }
        }
        Format::Human => {
            for r in &reports {
                println!("{} {} [{}] ({} cases)", if r.pass { "PASS" } else { "FAIL" }, r.law, r.paper_ref, r.cases);
                if let Some(c) = &r.counterexample {
                    for line in c.lines() {
                        println!("    {line}");
                    }
                }
            }
            let failed = reports.iter().filter(|r| !r.pass).count();
            println!("{} laws, {failed} failed", reports.len());
        }
    }
    Ok(Outcome::from_bool(all))
}

pub fn props_replay(law: &str, path: &Path, f: Format) -> CmdResult {
    let text = read(path)?;
    let result = replay(law, &text).map_err(|e| e.to_string())?;
    let (human, message) = match &result {
        Ok(()) => (format!("{law}: passes on this input\n"), None),
        Err(m) => (format!("{law}: fails\n  {m}\n"), Some(m.clone())),
    };
    emit(f, &human, &json!({"law": law, "pass": result.is_ok(), "message": message}));
    Ok(Outcome::from_bool(result.is_ok()))
}

pub fn props_list(f: Format) -> CmdResult {
    let laws = registry();
    let human: String = laws.iter().map(|l| format!("{} [{}]\n", l.id, l.anchor)).collect();
    let items: Vec<Value> = laws.iter().map(|l| json!({"law": l.id, "paper_ref": l.anchor})).collect();
    emit(f, &human, &json!(items));
    Ok(Outcome::Pass)
}
