//! Structural recognition of graphs whose maximal open packings are equicardinal.
//!
//! For girth at least 15 membership coincides with the six-part weak partition
//! family recognized by [`recognize_f`]. Below that girth the necessary
//! conditions in [`diagnose`] can still certify non-membership, and
//! [`decide_u`] falls back to exhaustive enumeration for the rest.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{Distance, Graph, Vertex, VertexSet};
use crate::packing::{self, Limits};

/// The weak partition `L, S1, S2, D11, D12, D2` of the vertex set.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FPartition {
    #[serde(rename = "L")]
    pub leaves: VertexSet,
    #[serde(rename = "S1")]
    pub s1: VertexSet,
    #[serde(rename = "S2")]
    pub s2: VertexSet,
    #[serde(rename = "D11")]
    pub d11: VertexSet,
    #[serde(rename = "D12")]
    pub d12: VertexSet,
    #[serde(rename = "D2")]
    pub d2: VertexSet,
}

impl FPartition {
    pub fn parts(&self) -> [&VertexSet; 6] {
        [&self.leaves, &self.s1, &self.s2, &self.d11, &self.d12, &self.d2]
    }

    /// Relabels every part through `map` (new index -> old index).
    pub fn mapped(&self, map: &[Vertex]) -> FPartition {
        let f = |s: &VertexSet| s.iter().map(|v| map[v]).collect();
        FPartition {
            leaves: f(&self.leaves),
            s1: f(&self.s1),
            s2: f(&self.s2),
            d11: f(&self.d11),
            d12: f(&self.d12),
            d2: f(&self.d2),
        }
    }

    fn absorb(&mut self, other: FPartition) {
        self.leaves = self.leaves.union(&other.leaves);
        self.s1 = self.s1.union(&other.s1);
        self.s2 = self.s2.union(&other.s2);
        self.d11 = self.d11.union(&other.d11);
        self.d12 = self.d12.union(&other.d12);
        self.d2 = self.d2.union(&other.d2);
    }

    /// Checks every defining property of the partition against `g` directly.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let n = g.order();
        let mut owner = vec![usize::MAX; n];
        for (i, part) in self.parts().into_iter().enumerate() {
            for v in part {
                if v >= n || owner[v] != usize::MAX {
                    return false;
                }
                owner[v] = i;
            }
        }
        if owner.contains(&usize::MAX) {
            return false;
        }
        let count_in = |v: Vertex, part: &VertexSet| g.adj(v).iter().filter(|&&w| part.contains(w)).count();
        let supports = g.supports();
        let dist = g.distances_from(supports.iter());
        self.leaves == g.leaves()
            && self.s1.union(&self.s2) == supports
            && self.s1.iter().all(|v| count_in(v, &self.s1) == 0 && count_in(v, &self.s2) == 0)
            && self.d11.iter().all(|v| count_in(v, &self.d11) == 0 && count_in(v, &self.d12) == 0)
            && self.s2.iter().all(|v| count_in(v, &self.s2) == 1)
            && (0..n).all(|v| self.d2.contains(v) == (dist[v] == Distance::Finite(2)))
            && self.d11.iter().all(|v| count_in(v, &self.s1) == 1)
            && self.d12.iter().all(|v| count_in(v, &self.s2) == 1)
            && self.d2.iter().all(|v| count_in(v, &self.d11) == 1)
    }
}

/// The size every maximal open packing has when the partition is valid: `2|S1| + |S2|`.
pub fn expected_spectrum_value(p: &FPartition) -> usize {
    2 * p.s1.len() + p.s2.len()
}

/// Supports split by their component in the subgraph induced on all supports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportStructure {
    /// Supports isolated among supports.
    pub s1: VertexSet,
    /// Supports in a component of order two.
    pub s2: VertexSet,
    /// First component of order three or more, if any.
    pub violation: Option<VertexSet>,
}

pub fn classify_support_structure(g: &Graph) -> SupportStructure {
    let supports = g.supports();
    let (induced, _) = g.induced_subgraph(&supports).expect("supports are vertices of g");
    let members = supports.as_slice();
    let mut out = SupportStructure { s1: VertexSet::new(), s2: VertexSet::new(), violation: None };
    for comp in induced.components() {
        let original: VertexSet = comp.iter().map(|v| members[v]).collect();
        match comp.len() {
            1 => out.s1 = out.s1.union(&original),
            2 => out.s2 = out.s2.union(&original),
            _ => {
                if out.violation.is_none() {
                    out.violation = Some(original);
                }
            }
        }
    }
    out
}

/// Which defining condition of the partition family failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Condition {
    /// Some vertex is farther than 2 from every support, or a leaf is a support.
    C0,
    /// The supports do not split into isolated vertices and matched pairs.
    C1,
    /// `S1` or `D11` not independent, or `S2` not inducing a perfect matching.
    C2,
    /// `D2` is not the distance-2 layer.
    C3,
    /// An `S1`–`S2` or `D11`–`D12` edge, or a vertex next to both `S1` and `S2`.
    C4,
    /// A unique-neighbor requirement fails.
    C5,
    /// A vertex of `S1` has two non-leaf neighbors. Not among the five listed
    /// conditions, but required for the common size `2|S1| + |S2|`; see [`recognize_f_literal`].
    C6,
}

impl Condition {
    pub fn index(self) -> u8 {
        self as u8
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F-C{}", self.index())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FViolation {
    pub condition: Condition,
    pub witness: Vec<Vertex>,
}

/// Builds the unique candidate partition and checks conditions c0..c6 in
/// order, returning the partition or the first violated condition.
///
/// c6 asks every `S1` vertex to have at most one non-leaf neighbor. Without it
/// the family admits trees whose maximal open packings differ in size, such as
/// the 15-vertex tree in `tests/partition_family.rs`.
pub fn recognize_f(g: &Graph) -> std::result::Result<FPartition, FViolation> {
    let partition = recognize_f_literal(g)?;
    for s in &partition.s1 {
        let inner: Vec<Vertex> = g.adj(s).iter().copied().filter(|&w| g.degree(w) > 1).collect();
        if inner.len() > 1 {
            return Err(FViolation { condition: Condition::C6, witness: [s, inner[0], inner[1]].into() });
        }
    }
    Ok(partition)
}

/// Conditions c0..c5 only: the five defining conditions taken as written.
pub fn recognize_f_literal(g: &Graph) -> std::result::Result<FPartition, FViolation> {
    let fail = |condition, witness: Vec<Vertex>| Err(FViolation { condition, witness });
    let n = g.order();
    let leaves = g.leaves();
    let supports = g.supports();

    // c0
    if let Some(v) = leaves.iter().find(|&v| supports.contains(v)) {
        return fail(Condition::C0, vec![v]);
    }
    let dist = g.distances_from(supports.iter());
    if let Some(v) = (0..n).find(|&v| dist[v] > Distance::Finite(2)) {
        return fail(Condition::C0, vec![v]);
    }

    // c1: L, S1, S2, D1 and D2 as forced by the graph
    let structure = classify_support_structure(g);
    if let Some(component) = structure.violation {
        return fail(Condition::C1, component.into_iter().collect());
    }
    let (s1, s2) = (structure.s1, structure.s2);
    let d1: Vec<Vertex> = (0..n).filter(|&v| dist[v] == Distance::Finite(1) && !leaves.contains(v)).collect();
    let touches = |v: Vertex, part: &VertexSet| g.adj(v).iter().any(|&w| part.contains(w));
    let d11: VertexSet = d1.iter().copied().filter(|&v| touches(v, &s1)).collect();
    let d12: VertexSet = d1.iter().copied().filter(|&v| touches(v, &s2)).collect();
    let d2: VertexSet = (0..n).filter(|&v| dist[v] == Distance::Finite(2)).collect();
    if let Some(&v) = d1.iter().find(|&&v| !d11.contains(v) && !d12.contains(v)) {
        return fail(Condition::C1, vec![v]);
    }

    // c2
    for part in [&s1, &d11] {
        for u in part {
            if let Some(&w) = g.adj(u).iter().find(|&&w| w > u && part.contains(w)) {
                return fail(Condition::C2, vec![u, w]);
            }
        }
    }

    // c3
    if let Some(v) = d2.iter().find(|&v| dist[v] != Distance::Finite(2)) {
        return fail(Condition::C3, vec![v]);
    }

    // c4
    for u in &s1 {
        if let Some(&w) = g.adj(u).iter().find(|&&w| s2.contains(w)) {
            return fail(Condition::C4, vec![u, w]);
        }
    }
    for u in &d11 {
        if d12.contains(u) {
            let a = g.adj(u).iter().copied().find(|&w| s1.contains(w)).expect("u touches S1");
            let b = g.adj(u).iter().copied().find(|&w| s2.contains(w)).expect("u touches S2");
            return fail(Condition::C4, vec![u, a, b]);
        }
        if let Some(&w) = g.adj(u).iter().find(|&&w| d12.contains(w)) {
            return fail(Condition::C4, vec![u, w]);
        }
    }

    // c5
    let exactly_one = |members: &VertexSet, target: &VertexSet| {
        members.iter().find_map(|v| {
            let hits: Vec<Vertex> = g.adj(v).iter().copied().filter(|&w| target.contains(w)).collect();
            (hits.len() != 1).then(|| std::iter::once(v).chain(hits).collect::<Vec<_>>())
        })
    };
    for (members, target) in [(&d11, &s1), (&d12, &s2), (&d2, &d11)] {
        if let Some(witness) = exactly_one(members, target) {
            return fail(Condition::C5, witness);
        }
    }

    Ok(FPartition { leaves, s1, s2, d11, d12, d2 })
}

/// Identifier of the argument behind a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    /// Triangle-free, a vertex adjacent to two supports.
    R1,
    /// Girth at least 15 and minimum degree at least 2.
    R2,
    /// Minimum degree 1, girth at least 11, a vertex at distance 3 or more from the supports.
    R3,
    /// Girth at least 7, a path `s1 u1 v u2 s2` between supports with private non-leaf neighbors.
    R4,
    /// Connected, minimum degree 1, girth at least 15, a single star support with two non-leaf neighbors.
    R5,
    /// Same hypotheses as R5, a distance-2 vertex without exactly one single star support at distance 2.
    R6,
    /// The partition family at girth at least 15.
    F(Condition),
    /// Exhaustive enumeration.
    Brute,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rule::F(c) => write!(f, "{c}"),
            Rule::Brute => write!(f, "BRUTE"),
            other => write!(f, "{other:?}"),
        }
    }
}

impl Serialize for Rule {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rule {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        let rule = match text.as_str() {
            "R1" => Rule::R1,
            "R2" => Rule::R2,
            "R3" => Rule::R3,
            "R4" => Rule::R4,
            "R5" => Rule::R5,
            "R6" => Rule::R6,
            "BRUTE" => Rule::Brute,
            "F-C0" => Rule::F(Condition::C0),
            "F-C1" => Rule::F(Condition::C1),
            "F-C2" => Rule::F(Condition::C2),
            "F-C3" => Rule::F(Condition::C3),
            "F-C4" => Rule::F(Condition::C4),
            "F-C5" => Rule::F(Condition::C5),
            "F-C6" => Rule::F(Condition::C6),
            _ => return Err(serde::de::Error::custom(format!("unknown rule {text:?}"))),
        };
        Ok(rule)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reason {
    pub rule: Rule,
    pub witness: Vec<Vertex>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    InU,
    NotInU,
    Undecided,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::InU => "IN_U",
            Verdict::NotInU => "NOT_IN_U",
            Verdict::Undecided => "UNDECIDED",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnosis {
    pub verdict: Verdict,
    pub reasons: Vec<Reason>,
    /// Present when every component was accepted through the partition family.
    pub partition: Option<FPartition>,
    /// Sizes of maximal open packings, when every component's spectrum is known.
    pub spectrum: Option<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Auto,
    Structural,
    Brute,
}

/// Necessary-condition rules evaluated on a connected graph of order at least 3.
fn lemma_reasons(h: &Graph) -> Vec<Reason> {
    let n = h.order();
    let girth = h.girth();
    let delta = h.min_degree();
    let supports = h.supports();
    let leaf = |v: Vertex| h.degree(v) == 1;
    let mut reasons = Vec::new();

    if girth.at_least(4) {
        if let Some(x) = (0..n).find(|&x| h.adj(x).iter().filter(|&&w| supports.contains(w)).count() >= 2) {
            let mut witness = vec![x];
            witness.extend(h.adj(x).iter().copied().filter(|&w| supports.contains(w)).take(2));
            reasons.push(Reason { rule: Rule::R1, witness });
        }
    }

    if girth.at_least(15) && delta >= 2 {
        reasons.push(Reason { rule: Rule::R2, witness: Vec::new() });
    }

    if delta == 1 && girth.at_least(11) {
        let dist = h.distances_from(supports.iter());
        if let Some(w) = (0..n).find(|&w| matches!(dist[w], Distance::Finite(d) if d >= 3)) {
            let near = h.distances_from([w]);
            let s = supports.iter().min_by_key(|&s| (near[s], s)).expect("supports nonempty");
            reasons.push(Reason { rule: Rule::R3, witness: vec![w, s] });
        }
    }

    if girth.at_least(7) {
        // the unique neighbor of degree at least 2, for supports that have exactly one
        let private: Vec<Option<Vertex>> = (0..n)
            .map(|s| {
                if !supports.contains(s) {
                    return None;
                }
                let mut big = h.adj(s).iter().copied().filter(|&w| !leaf(w));
                match (big.next(), big.next()) {
                    (Some(u), None) => Some(u),
                    _ => None,
                }
            })
            .collect();
        'search: for s1 in 0..n {
            let Some(u1) = private[s1] else { continue };
            for &v in h.adj(u1) {
                if v == s1 {
                    continue;
                }
                for &u2 in h.adj(v) {
                    if u2 == u1 || u2 == s1 {
                        continue;
                    }
                    for &s2 in h.adj(u2) {
                        if s2 != v && s2 != u1 && s2 != s1 && private[s2] == Some(u2) {
                            reasons.push(Reason { rule: Rule::R4, witness: vec![s1, u1, v, u2, s2] });
                            break 'search;
                        }
                    }
                }
            }
        }
    }

    if delta == 1 && girth.at_least(15) {
        let single: VertexSet = supports.iter().filter(|&s| !h.adj(s).iter().any(|&w| supports.contains(w))).collect();
        if let Some(s) = single.iter().find(|&s| h.adj(s).iter().filter(|&&w| !leaf(w)).count() >= 2) {
            let mut witness = vec![s];
            witness.extend(h.adj(s).iter().copied().filter(|&w| !leaf(w)).take(2));
            reasons.push(Reason { rule: Rule::R5, witness });
        }

        let dist = h.distances_from(supports.iter());
        for v in (0..n).filter(|&v| dist[v] == Distance::Finite(2)) {
            let around = h.distances_from([v]);
            let near: Vec<Vertex> = single.iter().filter(|&s| around[s] == Distance::Finite(2)).collect();
            if near.len() != 1 {
                let mut witness = vec![v];
                witness.extend(near);
                reasons.push(Reason { rule: Rule::R6, witness });
                break;
            }
        }
    }

    reasons
}

struct ComponentOutcome {
    verdict: Verdict,
    reasons: Vec<Reason>,
    partition: Option<FPartition>,
    spectrum: Option<Vec<usize>>,
}

impl ComponentOutcome {
    fn in_u(size: usize, partition: Option<FPartition>) -> Self {
        Self { verdict: Verdict::InU, reasons: Vec::new(), partition, spectrum: Some(vec![size]) }
    }
}

fn structural(h: &Graph) -> ComponentOutcome {
    match h.order() {
        0 => return ComponentOutcome::in_u(0, None),
        1 => return ComponentOutcome::in_u(1, None),
        2 => return ComponentOutcome::in_u(2, None),
        _ => {}
    }
    let reasons = lemma_reasons(h);
    if !reasons.is_empty() {
        return ComponentOutcome { verdict: Verdict::NotInU, reasons, partition: None, spectrum: None };
    }
    if !h.girth().at_least(15) {
        return ComponentOutcome { verdict: Verdict::Undecided, reasons, partition: None, spectrum: None };
    }
    match recognize_f(h) {
        Ok(partition) => ComponentOutcome::in_u(expected_spectrum_value(&partition), Some(partition)),
        Err(violation) => ComponentOutcome {
            verdict: Verdict::NotInU,
            reasons: vec![Reason { rule: Rule::F(violation.condition), witness: violation.witness }],
            partition: None,
            spectrum: None,
        },
    }
}

fn brute(h: &Graph, limits: Limits) -> Result<ComponentOutcome> {
    let report = packing::packing_report_with(h, limits)?;
    if report.uniform() {
        return Ok(ComponentOutcome {
            verdict: Verdict::InU,
            reasons: Vec::new(),
            partition: None,
            spectrum: report.spectrum,
        });
    }
    let smallest = packing::enumerate_maximal_open_packings_capped(h, limits.cap)?
        .find(|p| p.len() == report.rho_open_lower)
        .expect("a minimum maximal open packing exists");
    Ok(ComponentOutcome {
        verdict: Verdict::NotInU,
        reasons: vec![Reason { rule: Rule::Brute, witness: smallest.into_iter().collect() }],
        partition: None,
        spectrum: report.spectrum,
    })
}

fn sumset(a: &[usize], b: &[usize]) -> Vec<usize> {
    let sums: std::collections::BTreeSet<usize> = a.iter().flat_map(|&x| b.iter().map(move |&y| x + y)).collect();
    sums.into_iter().collect()
}

fn combine(g: &Graph, mut per_component: impl FnMut(&Graph) -> Result<ComponentOutcome>) -> Result<Diagnosis> {
    let mut verdict = Verdict::InU;
    let mut reasons = Vec::new();
    let mut partition = Some(FPartition::default());
    let mut spectrum = Some(vec![0]);
    for comp in g.components() {
        let (h, _) = g.induced_subgraph(&comp)?;
        let back = comp.as_slice();
        let outcome = per_component(&h)?;
        verdict = match (verdict, outcome.verdict) {
            (Verdict::NotInU, _) | (_, Verdict::NotInU) => Verdict::NotInU,
            (Verdict::Undecided, _) | (_, Verdict::Undecided) => Verdict::Undecided,
            _ => Verdict::InU,
        };
        reasons.extend(
            outcome
                .reasons
                .into_iter()
                .map(|r| Reason { rule: r.rule, witness: r.witness.into_iter().map(|v| back[v]).collect() }),
        );
        partition = match (partition, outcome.partition) {
            (Some(mut acc), Some(p)) => {
                acc.absorb(p.mapped(back));
                Some(acc)
            }
            _ => None,
        };
        spectrum = match (spectrum, outcome.spectrum) {
            (Some(acc), Some(s)) => Some(sumset(&acc, &s)),
            _ => None,
        };
    }
    if verdict != Verdict::InU {
        partition = None;
    }
    Ok(Diagnosis { verdict, reasons, partition, spectrum })
}

/// Structural verdict, component by component, without enumeration.
pub fn diagnose(g: &Graph) -> Diagnosis {
    combine(g, |h| Ok(structural(h))).expect("structural analysis is infallible")
}

pub fn decide_u(g: &Graph, mode: Mode) -> Result<Diagnosis> {
    decide_u_with(g, mode, Limits::default())
}

/// Decides membership per component and combines by additivity over components.
pub fn decide_u_with(g: &Graph, mode: Mode, limits: Limits) -> Result<Diagnosis> {
    match mode {
        Mode::Structural => Ok(diagnose(g)),
        Mode::Brute => combine(g, |h| brute(h, limits)),
        Mode::Auto => combine(g, |h| {
            let outcome = structural(h);
            if outcome.verdict == Verdict::Undecided {
                brute(h, limits)
            } else {
                Ok(outcome)
            }
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).unwrap()
    }

    /// Center 0, legs 0-(2i+1)-(2i+2).
    fn spider(legs: usize) -> Graph {
        Graph::from_edges(2 * legs + 1, (0..legs).flat_map(|i| [(0, 2 * i + 1), (2 * i + 1, 2 * i + 2)])).unwrap()
    }

    #[test]
    fn support_structure() {
        let s = classify_support_structure(&path(4));
        assert_eq!((s.s1, s.s2, s.violation), (VertexSet::new(), VertexSet::from([1, 2]), None));
        let s = classify_support_structure(&star(3));
        assert_eq!((s.s1, s.s2), (VertexSet::from([0]), VertexSet::new()));
        let s = classify_support_structure(&spider(3));
        assert_eq!((s.s1, s.s2), (VertexSet::from([1, 3, 5]), VertexSet::new()));
        // three consecutive supports
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (1, 4), (3, 5)]).unwrap();
        let g = g.with_new_vertices(1).with_edges([(2, 6)]).unwrap();
        assert_eq!(classify_support_structure(&g).violation, Some(VertexSet::from([1, 2, 3])));
    }

    #[test]
    fn recognize_examples() {
        let p = recognize_f(&path(4)).unwrap();
        assert_eq!(p.leaves, VertexSet::from([0, 3]));
        assert_eq!(p.s2, VertexSet::from([1, 2]));
        assert!(p.s1.is_empty() && p.d11.is_empty() && p.d12.is_empty() && p.d2.is_empty());
        assert!(p.is_valid_for(&path(4)));
        assert_eq!(expected_spectrum_value(&p), 2);

        let p = recognize_f(&star(3)).unwrap();
        assert_eq!(expected_spectrum_value(&p), 2);

        assert_eq!(recognize_f(&cycle(20)).unwrap_err().condition, Condition::C0);
        assert_eq!(recognize_f(&path(2)).unwrap_err().condition, Condition::C0);
        assert_eq!(expected_spectrum_value(&recognize_f(&Graph::empty(0)).unwrap()), 0);
    }

    #[test]
    fn t2_is_rejected() {
        // centers 0 and 1, legs center-m-l
        let g = Graph::new(10, &[(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (1, 6), (6, 7), (1, 8), (8, 9)]).unwrap();
        let violation = recognize_f(&g).unwrap_err();
        // both centers land in D11 and are adjacent
        assert_eq!(violation, FViolation { condition: Condition::C2, witness: vec![0, 1] });
    }

    #[test]
    fn diagnose_examples() {
        let d = diagnose(&spider(3));
        assert_eq!(d.verdict, Verdict::NotInU);
        let rules: Vec<Rule> = d.reasons.iter().map(|r| r.rule).collect();
        // every support has a single non-leaf neighbor, so only R1 applies
        assert_eq!(rules, vec![Rule::R1]);
        assert_eq!(d.reasons[0].witness, vec![0, 1, 3]);

        let d = diagnose(&cycle(20));
        assert_eq!(d.verdict, Verdict::NotInU);
        assert_eq!(d.reasons[0].rule, Rule::R2);

        let d = diagnose(&path(4));
        assert_eq!(d.verdict, Verdict::InU);
        assert_eq!(d.partition.unwrap().s2, VertexSet::from([1, 2]));
        assert_eq!(d.spectrum, Some(vec![2]));

        assert_eq!(diagnose(&cycle(10)).verdict, Verdict::Undecided);
    }

    #[test]
    fn decide_modes() {
        let d = decide_u(&cycle(10), Mode::Auto).unwrap();
        assert_eq!(d.verdict, Verdict::InU);
        let d = decide_u(&path(4).disjoint_union(&path(8)), Mode::Auto).unwrap();
        assert_eq!((d.verdict, d.spectrum), (Verdict::InU, Some(vec![6])));
        let d = decide_u(&path(5), Mode::Brute).unwrap();
        assert_eq!(d.verdict, Verdict::NotInU);
        assert_eq!(d.reasons[0].rule, Rule::Brute);
        assert_eq!(d.reasons[0].witness.len(), 2);

        // K1 and K2 components are decided directly
        let g = Graph::empty(1).disjoint_union(&path(2)).disjoint_union(&path(3));
        let d = decide_u(&g, Mode::Structural).unwrap();
        assert_eq!((d.verdict, d.spectrum), (Verdict::InU, Some(vec![5])));
        assert!(d.partition.is_none());
    }

    #[test]
    fn lemma_rules_fire() {
        // R3: the middle of P9 is at distance 3 from both supports
        let d = diagnose(&path(9));
        let r3 = d.reasons.iter().find(|r| r.rule == Rule::R3).unwrap();
        assert_eq!(r3.witness, vec![4, 1]);
        assert_eq!(diagnose(&path(8)).verdict, Verdict::InU);
        // R4: P7 has supports 1 and 5 joined through 2-3-4
        let d = diagnose(&path(7));
        let r4 = d.reasons.iter().find(|r| r.rule == Rule::R4).unwrap();
        assert_eq!(r4.witness, vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn rule_names_round_trip() {
        for rule in [Rule::R1, Rule::R6, Rule::F(Condition::C3), Rule::Brute] {
            let text = serde_json::to_string(&rule).unwrap();
            assert_eq!(serde_json::from_str::<Rule>(&text).unwrap(), rule);
        }
        assert_eq!(serde_json::to_string(&Verdict::NotInU).unwrap(), "\"NOT_IN_U\"");
    }
}
