//! Line-oriented text format for spaces, weights, nets, approach spaces,
//! preorders and topologies.
//!
//! ```text
//! # comments run to end of line
//! space zc2
//! points a b
//! dist a b 0
//! dist b a 0
//! weight top a=0 b=0
//! coweight up a=0 b=0
//! vector any a=3 b=1/2
//! net loop pre a cycle a b
//! map collapse sier a=a b=a
//!
//! approach sier
//! points a b
//! delta a {b} 0
//! delta b {a} inf
//!
//! order chain
//! points a b
//! leq a b
//!
//! topology sierpinski
//! points a b
//! cl b {a b}
//! ```
//!
//! `weight`, `coweight`, `vector`, `net` and `map` lines belong to the most
//! recent `space`; a `map` names its target space and sends each point to a
//! point of the target. A `vector` is an arbitrary function into `[0, ∞]`.
//! The diagonal of a space defaults to `0`. Every
//! off-diagonal `dist` pair and every off-diagonal singleton `delta` must be
//! given exactly once. Other `delta` entries default to the minimum over
//! singletons, `leq` is reflexive by default, and an omitted `cl` line means
//! `cl{p} = {p}`.

use std::fmt::Write as _;

use thiserror::Error;

use crate::approach::{validate_approach, ApproachError, DeltaTable, FiniteApproach};
use crate::completion::{CompletionError, Net};
use crate::extarith::{inf_owned, ExtVal};
use crate::ordtop::{FinitePreorder, FiniteTopology, OrderError};
use crate::space::{FiniteSpace, SpaceError};
use crate::subset::{Subset, MAX_TABLE_POINTS};
use crate::weights::{check_coweight, check_weight, WeightError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("space `{name}`: {source}")]
    Space { name: String, source: SpaceError },
    #[error("weight `{name}`: {source}")]
    Weight { name: String, source: WeightError },
    #[error("net `{name}`: {source}")]
    Net { name: String, source: CompletionError },
    #[error("approach `{name}`: {source}")]
    Approach { name: String, source: ApproachError },
    #[error("map `{name}`: {message}")]
    Map { name: String, message: String },
    #[error("`{name}`: {source}")]
    Order { name: String, source: OrderError },
    #[error("no {kind} named `{name}`")]
    Missing { kind: &'static str, name: String },
}

/// Whether parsed spaces must satisfy the metric axioms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Strict,
    Unchecked,
}

/// A named value vector: a weight, a coweight, or an unconstrained vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedVector {
    pub name: String,
    pub values: Vec<ExtVal>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedMap {
    pub name: String,
    pub target: String,
    pub assignment: Vec<usize>,
    target_names: Vec<String>,
}

impl NamedMap {
    pub fn new(name: &str, target: &str, assignment: Vec<usize>) -> Self {
        NamedMap {
            name: name.to_string(),
            target: target.to_string(),
            assignment,
            target_names: Vec::new(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedNet {
    pub name: String,
    pub net: Net,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceEntry {
    pub name: String,
    pub space: FiniteSpace,
    pub weights: Vec<NamedVector>,
    pub coweights: Vec<NamedVector>,
    pub vectors: Vec<NamedVector>,
    pub nets: Vec<NamedNet>,
    pub maps: Vec<NamedMap>,
}

impl SpaceEntry {
    pub fn new(name: &str, space: FiniteSpace) -> Self {
        SpaceEntry {
            name: name.to_string(),
            space,
            weights: Vec::new(),
            coweights: Vec::new(),
            vectors: Vec::new(),
            nets: Vec::new(),
            maps: Vec::new(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Document {
    pub spaces: Vec<SpaceEntry>,
    /// Full tables; validated on access so that invalid tables can be
    /// carried and reported.
    pub approaches: Vec<(String, DeltaTable)>,
    pub orders: Vec<(String, FinitePreorder)>,
    pub topologies: Vec<(String, FiniteTopology)>,
}

impl Document {
    pub fn parse(text: &str) -> Result<Document, FormatError> {
        parse(text, Mode::Strict)
    }

    pub fn parse_unchecked(text: &str) -> Result<Document, FormatError> {
        parse(text, Mode::Unchecked)
    }

    pub fn single_space(name: &str, space: FiniteSpace) -> Document {
        Document {
            spaces: vec![SpaceEntry::new(name, space)],
            ..Document::default()
        }
    }

    pub fn space(&self, name: &str) -> Result<&SpaceEntry, FormatError> {
        self.spaces.iter().find(|s| s.name == name).ok_or_else(|| FormatError::Missing {
            kind: "space",
            name: name.to_string(),
        })
    }

    pub fn approach(&self, name: &str) -> Result<FiniteApproach, FormatError> {
        let (_, table) = self
            .approaches
            .iter()
            .find(|(n, _)| n == name)
            .ok_or_else(|| FormatError::Missing {
                kind: "approach",
                name: name.to_string(),
            })?;
        validate_approach(table).map_err(|source| FormatError::Approach {
            name: name.to_string(),
            source,
        })
    }

    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for entry in &self.spaces {
            write_space(&mut out, &entry.name, &entry.space);
            let pts = entry.space.points();
            for (keyword, list) in [
                ("weight", &entry.weights),
                ("coweight", &entry.coweights),
                ("vector", &entry.vectors),
            ] {
                for w in list {
                    let _ = write!(out, "{keyword} {}", w.name);
                    for (p, v) in pts.iter().zip(&w.values) {
                        let _ = write!(out, " {p}={v}");
                    }
                    out.push('\n');
                }
            }
            for n in &entry.nets {
                let names = |xs: &[usize]| xs.iter().map(|&x| pts[x].as_str()).collect::<Vec<_>>().join(" ");
                let _ = writeln!(
                    out,
                    "net {} pre {} cycle {}",
                    n.name,
                    names(n.net.preperiod()),
                    names(n.net.cycle())
                );
            }
            for m in &entry.maps {
                let _ = write!(out, "map {} {}", m.name, m.target);
                let target = self.spaces.iter().find(|t| t.name == m.target);
                for (p, &y) in pts.iter().zip(&m.assignment) {
                    match target {
                        Some(t) => {
                            let _ = write!(out, " {p}={}", t.space.point(y));
                        }
                        None => {
                            let _ = write!(out, " {p}=#{y}");
                        }
                    }
                }
                out.push('\n');
            }
            out.push('\n');
        }
        for (name, table) in &self.approaches {
            write_approach(&mut out, name, table);
            out.push('\n');
        }
        for (name, p) in &self.orders {
            let _ = writeln!(out, "order {name}\npoints {}", p.points().join(" "));
            for x in 0..p.len() {
                for y in (0..p.len()).filter(|&y| y != x && p.le(x, y)) {
                    let _ = writeln!(out, "leq {} {}", p.points()[x], p.points()[y]);
                }
            }
            out.push('\n');
        }
        for (name, t) in &self.topologies {
            let _ = writeln!(out, "topology {name}\npoints {}", t.points().join(" "));
            for x in 0..t.len() {
                let c = t.closure_of_point(x);
                if c != Subset::singleton(x) {
                    let _ = writeln!(out, "cl {} {}", t.points()[x], c.render(t.points()));
                }
            }
            out.push('\n');
        }
        while out.ends_with("\n\n") {
            out.pop();
        }
        out
    }
}

/// Appends a `space` stanza.
pub fn write_space(out: &mut String, name: &str, space: &FiniteSpace) {
    let pts = space.points();
    let _ = writeln!(out, "space {name}\npoints {}", pts.join(" "));
    for x in 0..space.len() {
        for y in (0..space.len()).filter(|&y| y != x || !space.d(x, y).is_zero()) {
            let _ = writeln!(out, "dist {} {} {}", pts[x], pts[y], space.d(x, y));
        }
    }
}

/// Appends an `approach` stanza listing singletons and every entry that
/// differs from the default.
pub fn write_approach(out: &mut String, name: &str, table: &DeltaTable) {
    let pts = table.points();
    let n = table.len();
    let _ = writeln!(out, "approach {name}\npoints {}", pts.join(" "));
    for x in 0..n {
        for a in Subset::all(n) {
            let v = table.get(x, a);
            let default = default_delta(table, x, a);
            let singleton_off = a.len() == 1 && !a.contains(x);
            if singleton_off || *v != default {
                let _ = writeln!(out, "delta {} {} {}", pts[x], a.render(pts), v);
            }
        }
    }
}

fn default_delta(table: &DeltaTable, x: usize, a: Subset) -> ExtVal {
    if a.is_empty() {
        ExtVal::inf()
    } else if a.len() == 1 {
        if a.contains(x) {
            ExtVal::zero()
        } else {
            table.get(x, a).clone()
        }
    } else {
        inf_owned(a.iter().map(|y| table.get(x, Subset::singleton(y)).clone()))
    }
}

struct Line<'a> {
    number: usize,
    words: Vec<&'a str>,
    text: &'a str,
}

impl Line<'_> {
    fn error(&self, message: impl Into<String>) -> FormatError {
        FormatError::Syntax {
            line: self.number,
            message: message.into(),
        }
    }
}

enum Stanza {
    Space,
    Approach,
    Order,
    Topology,
}

struct Block<'a> {
    kind: Stanza,
    name: String,
    header: usize,
    points: Option<Vec<String>>,
    body: Vec<Line<'a>>,
}

fn parse(text: &str, mode: Mode) -> Result<Document, FormatError> {
    let mut blocks: Vec<Block> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let line = Line {
            number: i + 1,
            words: content.split_whitespace().collect(),
            text: content,
        };
        let kind = match line.words[0] {
            "space" => Some(Stanza::Space),
            "approach" => Some(Stanza::Approach),
            "order" => Some(Stanza::Order),
            "topology" => Some(Stanza::Topology),
            _ => None,
        };
        if let Some(kind) = kind {
            if line.words.len() != 2 {
                return Err(line.error(format!("expected `{} <name>`", line.words[0])));
            }
            blocks.push(Block {
                kind,
                name: line.words[1].to_string(),
                header: line.number,
                points: None,
                body: Vec::new(),
            });
            continue;
        }
        let block = blocks
            .last_mut()
            .ok_or_else(|| line.error("content before any stanza header"))?;
        if line.words[0] == "points" {
            if block.points.is_some() {
                return Err(line.error("duplicate `points` line"));
            }
            block.points = Some(line.words[1..].iter().map(|s| s.to_string()).collect());
        } else {
            if block.points.is_none() {
                return Err(line.error("`points` must precede other lines"));
            }
            block.body.push(line);
        }
    }

    let mut doc = Document::default();
    for block in blocks {
        let points = block.points.clone().ok_or(FormatError::Syntax {
            line: block.header,
            message: format!("stanza `{}` has no `points` line", block.name),
        })?;
        match block.kind {
            Stanza::Space => doc.spaces.push(parse_space(&block, points, mode)?),
            Stanza::Approach => {
                let table = parse_approach(&block, points)?;
                doc.approaches.push((block.name, table));
            }
            Stanza::Order => {
                let order = parse_order(&block, points)?;
                doc.orders.push((block.name, order));
            }
            Stanza::Topology => {
                let top = parse_topology(&block, points)?;
                doc.topologies.push((block.name, top));
            }
        }
    }
    resolve_maps(&mut doc)?;
    Ok(doc)
}

fn resolve_maps(doc: &mut Document) -> Result<(), FormatError> {
    let targets: Vec<(String, Vec<String>)> = doc
        .spaces
        .iter()
        .map(|s| (s.name.clone(), s.space.points().to_vec()))
        .collect();
    for entry in &mut doc.spaces {
        for m in &mut entry.maps {
            let (_, points) = targets.iter().find(|(n, _)| *n == m.target).ok_or_else(|| FormatError::Map {
                name: m.name.clone(),
                message: format!("unknown target space `{}`", m.target),
            })?;
            m.assignment = m
                .target_names
                .iter()
                .map(|y| {
                    points.iter().position(|p| p == y).ok_or_else(|| FormatError::Map {
                        name: m.name.clone(),
                        message: format!("unknown target point `{y}`"),
                    })
                })
                .collect::<Result<_, _>>()?;
            m.target_names.clear();
        }
    }
    Ok(())
}

fn index(points: &[String], line: &Line, name: &str) -> Result<usize, FormatError> {
    points
        .iter()
        .position(|p| p == name)
        .ok_or_else(|| line.error(format!("unknown point `{name}`")))
}

fn value(line: &Line, s: &str) -> Result<ExtVal, FormatError> {
    s.parse().map_err(|e| line.error(format!("{e}")))
}

/// Parses `{p q r}` out of a line, returning the subset and the text after it.
fn subset<'a>(points: &[String], line: &Line<'a>) -> Result<(Subset, &'a str), FormatError> {
    let open = line.text.find('{').ok_or_else(|| line.error("expected `{`"))?;
    let close = line.text.find('}').ok_or_else(|| line.error("expected `}`"))?;
    if close < open {
        return Err(line.error("unbalanced braces"));
    }
    let mut s = Subset::EMPTY;
    for name in line.text[open + 1..close].split_whitespace() {
        s.insert(index(points, line, name)?);
    }
    Ok((s, line.text[close + 1..].trim()))
}

fn parse_space(block: &Block, points: Vec<String>, mode: Mode) -> Result<SpaceEntry, FormatError> {
    let n = points.len();
    let mut dist: Vec<Option<ExtVal>> = vec![None; n * n];
    for line in block.body.iter().filter(|l| l.words[0] == "dist") {
        if line.words.len() != 4 {
            return Err(line.error("expected `dist <p> <q> <value>`"));
        }
        let x = index(&points, line, line.words[1])?;
        let y = index(&points, line, line.words[2])?;
        if dist[x * n + y].is_some() {
            return Err(line.error(format!("duplicate pair {} {}", line.words[1], line.words[2])));
        }
        dist[x * n + y] = Some(value(line, line.words[3])?);
    }
    let mut flat = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            match dist[x * n + y].take() {
                Some(v) => flat.push(v),
                None if x == y => flat.push(ExtVal::zero()),
                None => {
                    return Err(FormatError::Syntax {
                        line: block.header,
                        message: format!("missing pair {} {}", points[x], points[y]),
                    })
                }
            }
        }
    }
    let space_err = |source| FormatError::Space {
        name: block.name.clone(),
        source,
    };
    let space = match mode {
        Mode::Strict => FiniteSpace::validate_flat(points.clone(), flat),
        Mode::Unchecked => FiniteSpace::from_flat_unchecked(points.clone(), flat),
    }
    .map_err(space_err)?;
    let mut entry = SpaceEntry::new(&block.name, space);

    for line in &block.body {
        match line.words[0] {
            "dist" => {}
            kind @ ("weight" | "coweight" | "vector") => {
                if line.words.len() < 2 {
                    return Err(line.error(format!("expected `{kind} <name> <p>=<value> ...`")));
                }
                let values: Vec<ExtVal> = assignments(&points, line)?
                    .into_iter()
                    .map(|v| value(line, v))
                    .collect::<Result<_, _>>()?;
                let name = line.words[1].to_string();
                let weight_err = |source| FormatError::Weight {
                    name: name.clone(),
                    source,
                };
                let vector = NamedVector {
                    name: name.clone(),
                    values: values.clone(),
                };
                match kind {
                    "weight" => {
                        if mode == Mode::Strict {
                            check_weight(&entry.space, values).map_err(weight_err)?;
                        }
                        entry.weights.push(vector);
                    }
                    "coweight" => {
                        if mode == Mode::Strict {
                            check_coweight(&entry.space, values).map_err(weight_err)?;
                        }
                        entry.coweights.push(vector);
                    }
                    _ => entry.vectors.push(vector),
                }
            }
            "map" => {
                if line.words.len() < 3 {
                    return Err(line.error("expected `map <name> <target> <p>=<q> ...`"));
                }
                let target_names = assignments(&points, &Line {
                    number: line.number,
                    words: line.words[1..].to_vec(),
                    text: line.text,
                })?
                .into_iter()
                .map(str::to_string)
                .collect();
                entry.maps.push(NamedMap {
                    name: line.words[1].to_string(),
                    target: line.words[2].to_string(),
                    assignment: Vec::new(),
                    target_names,
                });
            }
            "net" => {
                let words = &line.words;
                let pre_at = words.iter().position(|w| *w == "pre");
                let cycle_at = words
                    .iter()
                    .position(|w| *w == "cycle")
                    .ok_or_else(|| line.error("expected `cycle`"))?;
                if words.len() < 3 || pre_at.is_some_and(|p| p != 2 || p > cycle_at) || (pre_at.is_none() && cycle_at != 2)
                {
                    return Err(line.error("expected `net <name> pre <points> cycle <points>`"));
                }
                let names = |ws: &[&str]| ws.iter().map(|w| index(&points, line, w)).collect::<Result<Vec<_>, _>>();
                let pre = match pre_at {
                    Some(p) => names(&words[p + 1..cycle_at])?,
                    None => Vec::new(),
                };
                let cycle = names(&words[cycle_at + 1..])?;
                let name = words[1].to_string();
                let net = Net::new(&entry.space, pre, cycle).map_err(|source| FormatError::Net {
                    name: name.clone(),
                    source,
                })?;
                entry.nets.push(NamedNet { name, net });
            }
            other => return Err(line.error(format!("unexpected `{other}` in space stanza"))),
        }
    }
    Ok(entry)
}

/// Reads `p=v` items after the first two words, one per point.
fn assignments<'a>(points: &[String], line: &Line<'a>) -> Result<Vec<&'a str>, FormatError> {
    let mut values: Vec<Option<&'a str>> = vec![None; points.len()];
    for item in &line.words[2..] {
        let (p, v) = item
            .split_once('=')
            .ok_or_else(|| line.error(format!("expected `<point>=<value>`, got `{item}`")))?;
        let x = index(points, line, p)?;
        if values[x].replace(v).is_some() {
            return Err(line.error(format!("duplicate entry for `{p}`")));
        }
    }
    values
        .into_iter()
        .enumerate()
        .map(|(x, v)| v.ok_or_else(|| line.error(format!("missing entry for `{}`", points[x]))))
        .collect()
}

fn parse_approach(block: &Block, points: Vec<String>) -> Result<DeltaTable, FormatError> {
    let n = points.len();
    if n > MAX_TABLE_POINTS {
        return Err(FormatError::Approach {
            name: block.name.clone(),
            source: ApproachError::TooLarge(n),
        });
    }
    let mut explicit: Vec<Option<ExtVal>> = vec![None; n << n];
    for line in &block.body {
        if line.words[0] != "delta" || line.words.len() < 3 {
            return Err(line.error("expected `delta <p> {<points>} <value>`"));
        }
        let x = index(&points, line, line.words[1])?;
        let (a, rest) = subset(&points, line)?;
        let slot = &mut explicit[(x << n) + a.index()];
        if slot.is_some() {
            return Err(line.error("duplicate delta entry"));
        }
        *slot = Some(value(line, rest)?);
    }
    let get = |x: usize, a: Subset| explicit[(x << n) + a.index()].clone();
    for x in 0..n {
        for y in (0..n).filter(|&y| y != x) {
            if get(x, Subset::singleton(y)).is_none() {
                return Err(FormatError::Syntax {
                    line: block.header,
                    message: format!("missing delta {} {{{}}}", points[x], points[y]),
                });
            }
        }
    }
    let single = |x: usize, y: usize| get(x, Subset::singleton(y)).unwrap_or_else(ExtVal::zero);
    DeltaTable::from_fn(points.clone(), |x, a| {
        get(x, a).unwrap_or_else(|| {
            if a.is_empty() {
                ExtVal::inf()
            } else {
                inf_owned(a.iter().map(|y| single(x, y)))
            }
        })
    })
    .map_err(|source| FormatError::Approach {
        name: block.name.clone(),
        source,
    })
}

fn parse_order(block: &Block, points: Vec<String>) -> Result<FinitePreorder, FormatError> {
    let n = points.len();
    let mut leq: Vec<bool> = (0..n * n).map(|i| i / n == i % n).collect();
    for line in &block.body {
        if line.words[0] != "leq" || line.words.len() != 3 {
            return Err(line.error("expected `leq <p> <q>`"));
        }
        let x = index(&points, line, line.words[1])?;
        let y = index(&points, line, line.words[2])?;
        leq[x * n + y] = true;
    }
    FinitePreorder::validate(points, leq).map_err(|source| FormatError::Order {
        name: block.name.clone(),
        source,
    })
}

fn parse_topology(block: &Block, points: Vec<String>) -> Result<FiniteTopology, FormatError> {
    let n = points.len();
    let mut closures: Vec<Option<Subset>> = vec![None; n];
    for line in &block.body {
        if line.words[0] != "cl" || line.words.len() < 3 {
            return Err(line.error("expected `cl <p> {<points>}`"));
        }
        let x = index(&points, line, line.words[1])?;
        let (c, rest) = subset(&points, line)?;
        if !rest.is_empty() {
            return Err(line.error(format!("trailing text `{rest}`")));
        }
        if closures[x].replace(c).is_some() {
            return Err(line.error("duplicate closure entry"));
        }
    }
    let closures = closures
        .into_iter()
        .enumerate()
        .map(|(x, c)| c.unwrap_or(Subset::singleton(x)))
        .collect();
    FiniteTopology::from_singleton_closures(points, closures).map_err(|source| FormatError::Order {
        name: block.name.clone(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::approach::alexandroff;
    use crate::space::fixtures::*;

    const SAMPLE: &str = "
# two points at distance zero both ways
space zc2
points a b
dist a b 0
dist b a 0
weight top a=0 b=0
coweight up a=0 b=0
vector any a=3 b=1/2
net loop pre a cycle a b
map collapse single a=p b=p

space single
points p

approach sier
points a b
delta a {b} 0
delta b {a} inf

order chain
points a b
leq a b

topology sierpinski
points a b
cl b {a b}
";

    #[test]
    fn parse_sample() {
        let doc = Document::parse(SAMPLE).unwrap();
        let z = doc.space("zc2").unwrap();
        assert_eq!(z.space, zc2());
        assert_eq!(z.weights[0].values, vec![ExtVal::zero(), ExtVal::zero()]);
        assert_eq!(z.nets[0].net.preperiod(), &[0]);
        assert_eq!(z.nets[0].net.cycle(), &[0, 1]);
        assert_eq!(z.coweights[0].name, "up");
        assert_eq!(z.vectors[0].values[1], "1/2".parse().unwrap());
        assert_eq!(z.maps[0].assignment, vec![0, 0]);
        assert_eq!(doc.approach("sier").unwrap(), alexandroff(&sier()));
        assert!(doc.orders[0].1.le(0, 1) && !doc.orders[0].1.le(1, 0));
        assert_eq!(doc.topologies[0].1.closure_of_point(1), Subset::full(2));
    }

    #[test]
    fn round_trip() {
        let doc = Document::parse(SAMPLE).unwrap();
        let again = Document::parse(&doc.serialize()).unwrap();
        assert_eq!(doc, again);
    }

    #[test]
    fn rejects_bad_input() {
        let missing = "space s\npoints a b\ndist a b 1\n";
        assert!(matches!(Document::parse(missing), Err(FormatError::Syntax { .. })));
        let dup = "space s\npoints a b\ndist a b 1\ndist a b 2\ndist b a 1\n";
        assert!(matches!(Document::parse(dup), Err(FormatError::Syntax { line: 4, .. })));
        let neg = "space s\npoints a b\ndist a b -1\ndist b a 1\n";
        assert!(matches!(Document::parse(neg), Err(FormatError::Syntax { line: 3, .. })));
        let triangle = "space s\npoints a b c\ndist a b 1\ndist b c 1\ndist a c 3\ndist b a inf\ndist c a inf\ndist c b inf\n";
        assert!(matches!(Document::parse(triangle), Err(FormatError::Space { .. })));
        assert!(Document::parse_unchecked(triangle).is_ok());
        let mut bent = sym2();
        bent.set_unchecked(0, 0, ExtVal::from_int(1));
        let text = Document::single_space("bent", bent.clone()).serialize();
        assert_eq!(Document::parse_unchecked(&text).unwrap().spaces[0].space, bent);
        assert!(matches!(Document::parse(&text), Err(FormatError::Space { .. })));
        let unknown = "space s\npoints a\nmap f t a=a\n";
        assert!(matches!(Document::parse(unknown), Err(FormatError::Map { .. })));
        let bad_weight = "space s\npoints a b\ndist a b 1\ndist b a 1\nweight w a=0 b=5\n";
        assert!(matches!(Document::parse(bad_weight), Err(FormatError::Weight { .. })));
        assert!(matches!(
            Document::parse("points a\n"),
            Err(FormatError::Syntax { line: 1, .. })
        ));
    }

    #[test]
    fn non_collapsing_approach_is_carried_then_rejected() {
        let text = "approach bad\npoints a b c\ndelta a {b} 1\ndelta a {c} 1\ndelta b {a} 1\ndelta b {c} 1\ndelta c {a} 1\ndelta c {b} 1\ndelta a {b c} 2\n";
        let doc = Document::parse(text).unwrap();
        assert!(matches!(doc.approach("bad"), Err(FormatError::Approach { .. })));
        let again = Document::parse(&doc.serialize()).unwrap();
        assert_eq!(doc, again);
    }
}
