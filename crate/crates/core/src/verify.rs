//! Acceptance suites. Each suite checks one numbered criterion and returns a
//! [`SuiteReport`]; suite 11 audits the instances produced by suites 1 to 10.

use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::classifier::{decide_u, diagnose, expected_spectrum_value, recognize_f, Mode, Rule, Verdict};
use crate::error::Result;
use crate::generators::{
    add_leaf, embed_in_u, enumerate_labeled_trees, gen_complete, gen_cycle, gen_f_tree, gen_gk, gen_path, gen_spider,
    gen_t, random_double_star_spec, random_graph, random_tree, rng_from_seed, SeededRng,
};
use crate::graph::{Distance, Graph};
use crate::ong::{
    build_ong, enumerate_maximal_independent_sets, in_u_via_ong, ong_structure_check, shape_signature, Shape,
};
use crate::oracle;
use crate::packing::{
    bound_chain_holds, enumerate_maximal_open_packings, packing_extremes, packing_report, total_domination_number,
    uniform_packing_size,
};

pub const DEFAULT_SEED: u64 = 20_240_601;

const MAX_LISTED_FAILURES: usize = 20;

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub criterion: u8,
    pub name: &'static str,
    pub checked: u64,
    pub failures: u64,
    /// The first few failure descriptions.
    pub messages: Vec<String>,
    #[serde(serialize_with = "as_secs")]
    pub elapsed: Duration,
}

fn as_secs<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.checked > 0
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "criterion {:>2} {:<16} {} checked={} failures={} elapsed={:.3}s",
            self.criterion,
            self.name,
            if self.passed() { "PASS" } else { "FAIL" },
            self.checked,
            self.failures,
            self.elapsed.as_secs_f64()
        )?;
        for m in &self.messages {
            write!(f, "\n    {m}")?;
        }
        Ok(())
    }
}

struct Tally {
    checked: u64,
    failures: u64,
    messages: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Self { checked: 0, failures: 0, messages: Vec::new() }
    }

    fn check(&mut self, ok: bool, message: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.fail(message());
        }
    }

    fn fail(&mut self, message: String) {
        self.failures += 1;
        if self.messages.len() < MAX_LISTED_FAILURES {
            self.messages.push(message);
        }
    }

    fn merge(&mut self, other: Tally) {
        self.checked += other.checked;
        self.failures += other.failures;
        let room = MAX_LISTED_FAILURES.saturating_sub(self.messages.len());
        self.messages.extend(other.messages.into_iter().take(room));
    }

    fn finish(self, criterion: u8, name: &'static str, elapsed: Duration) -> SuiteReport {
        SuiteReport {
            criterion,
            name,
            checked: self.checked,
            failures: self.failures,
            messages: self.messages,
            elapsed,
        }
    }
}

/// Bound chain and tree identity over every instance handed to [`Audit::observe`].
pub struct Audit {
    tally: Tally,
    spent: Duration,
}

impl Default for Audit {
    fn default() -> Self {
        Self::new()
    }
}

impl Audit {
    pub fn new() -> Self {
        Self { tally: Tally::new(), spent: Duration::ZERO }
    }

    /// Checks one instance; graphs that are disconnected or have an isolated vertex are skipped.
    pub fn observe(&mut self, g: &Graph) {
        let start = Instant::now();
        let t = audit_one(g);
        self.tally.merge(t);
        self.spent += start.elapsed();
    }

    /// Like [`Audit::observe`] over a batch, checked in parallel.
    pub fn observe_all(&mut self, graphs: &[Graph]) {
        let start = Instant::now();
        for t in graphs.par_iter().map(audit_one).collect::<Vec<_>>() {
            self.tally.merge(t);
        }
        self.spent += start.elapsed();
    }

    pub fn report(self) -> SuiteReport {
        self.tally.finish(11, "bound-chain", self.spent)
    }
}

fn audit_one(g: &Graph) -> Tally {
    let mut t = Tally::new();
    if g.order() == 0 || g.min_degree() == 0 || !g.is_connected() {
        return t;
    }
    let report = match packing_extremes(g) {
        Ok(r) => r,
        Err(e) => {
            t.fail(format!("{}: {e}", describe(g)));
            return t;
        }
    };
    t.check(bound_chain_holds(g, &report) == Ok(true), || {
        format!("{}: bound chain fails with rho_l={} rho={}", describe(g), report.rho_open_lower, report.rho_open)
    });
    if g.is_tree() && g.order() >= 2 {
        let gamma_t = total_domination_number(g);
        t.check(gamma_t == Ok(report.rho_open), || {
            format!("{}: total domination {gamma_t:?} but rho={}", describe(g), report.rho_open)
        });
    }
    t
}

fn describe(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("n={} [{}]", g.order(), edges.join(" "))
}

fn timed(
    criterion: u8,
    name: &'static str,
    audit: &mut Audit,
    body: impl FnOnce(&mut Tally, &mut Audit),
) -> SuiteReport {
    let start = Instant::now();
    let before = audit.spent;
    let mut t = Tally::new();
    body(&mut t, audit);
    let audit_time = audit.spent - before;
    t.finish(criterion, name, start.elapsed().saturating_sub(audit_time))
}

fn brute_in_u(g: &Graph) -> Result<bool> {
    Ok(decide_u(g, Mode::Brute)?.verdict == Verdict::InU)
}

pub fn paths(audit: &mut Audit) -> SuiteReport {
    timed(1, "paths", audit, |t, audit| {
        for n in 1..=16 {
            let g = gen_path(n).expect("n >= 1");
            let got = brute_in_u(&g);
            let want = [1, 2, 3, 4, 8].contains(&n);
            t.check(got == Ok(want), || format!("P{n}: expected {want}, got {got:?}"));
            audit.observe(&g);
        }
    })
}

pub fn cycles(audit: &mut Audit) -> SuiteReport {
    timed(2, "cycles", audit, |t, audit| {
        for n in 3..=20 {
            let g = gen_cycle(n).expect("n >= 3");
            let got = brute_in_u(&g);
            let want = [3, 4, 5, 6, 7, 8, 10, 14].contains(&n);
            t.check(got == Ok(want), || format!("C{n}: expected {want}, got {got:?}"));
            audit.observe(&g);
        }
    })
}

pub fn t_gap(audit: &mut Audit) -> SuiteReport {
    timed(3, "t-gap", audit, |t, audit| {
        for n in 1..=5 {
            let g = gen_t(n).expect("n >= 1");
            match packing_report(&g) {
                Ok(r) => t.check(r.rho_open_lower == 2 && r.rho_open == 2 * n + 2, || {
                    format!("T{n}: rho_l={} rho={}, expected 2 and {}", r.rho_open_lower, r.rho_open, 2 * n + 2)
                }),
                Err(e) => t.fail(format!("T{n}: {e}")),
            }
            audit.observe(&g);
        }
    })
}

/// Every labeled graph on `n` vertices.
fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    (0u64..1 << pairs.len()).map(move |bits| {
        let edges: Vec<_> = pairs.iter().enumerate().filter(|(k, _)| bits >> k & 1 == 1).map(|(_, &e)| e).collect();
        Graph::new(n, &edges).expect("pairs are in range")
    })
}

fn ong_equivalence_one(g: &Graph) -> Tally {
    let mut t = Tally::new();
    let ong = build_ong(g);
    let packings = oracle::maximal_open_packings(g);
    let independent = oracle::maximal_independent_sets(&ong);
    let fast_packings: Result<BTreeSet<_>> = enumerate_maximal_open_packings(g).map(|it| it.collect());
    let fast_independent: Result<BTreeSet<_>> = enumerate_maximal_independent_sets(&ong).map(|it| it.collect());
    t.check(packings == independent, || format!("{}: oracle packings differ from oracle MIS of ONG", describe(g)));
    t.check(fast_packings.as_ref() == Ok(&packings), || {
        format!("{}: enumerated packings differ from oracle", describe(g))
    });
    t.check(fast_independent.as_ref() == Ok(&independent), || {
        format!("{}: enumerated MIS differ from oracle", describe(g))
    });
    t
}

pub fn ong_equivalence(audit: &mut Audit, seed: u64) -> SuiteReport {
    timed(4, "ong-equivalence", audit, |t, audit| {
        let mut rng = rng_from_seed(seed ^ 4);
        let random: Vec<Graph> = (0..500)
            .map(|_| {
                let n = rng.gen_range(1..=10);
                let p = rng.gen_range(0.1..0.9);
                random_graph(n, p, &mut rng)
            })
            .collect();
        let graphs: Vec<Graph> = all_labeled_graphs(4).chain(all_labeled_graphs(5)).chain(random).collect();
        let tallies: Vec<Tally> = graphs.par_iter().map(ong_equivalence_one).collect();
        for tally in tallies {
            t.merge(tally);
        }
        audit.observe_all(&graphs);
    })
}

pub fn ong_forms(audit: &mut Audit) -> SuiteReport {
    timed(5, "ong-forms", audit, |t, audit| {
        let mut expect = |name: String, g: Graph, mut want: Vec<(Shape, usize)>| {
            want.sort_unstable();
            let got = shape_signature(&ong_structure_check(&g));
            t.check(got == want, || format!("ONG({name}) = {got:?}, expected {want:?}"));
            audit.observe(&g);
        };
        let cycle = |n| gen_cycle(n).expect("n >= 3");
        let path = |n| gen_path(n).expect("n >= 1");
        for n in 3..=15 {
            expect(format!("C{}", 2 * n), cycle(2 * n), vec![(Shape::Cycle, n), (Shape::Cycle, n)]);
            expect(format!("C{}", 2 * n - 1), cycle(2 * n - 1), vec![(Shape::Cycle, 2 * n - 1)]);
            expect(format!("P{}", 2 * n), path(2 * n), vec![(Shape::Path, n), (Shape::Path, n)]);
            expect(format!("P{}", 2 * n + 1), path(2 * n + 1), vec![(Shape::Path, n), (Shape::Path, n + 1)]);
        }
        expect("C3".into(), cycle(3), vec![(Shape::Cycle, 3)]);
        expect("C4".into(), cycle(4), vec![(Shape::Path, 2), (Shape::Path, 2)]);
        expect("P1".into(), path(1), vec![(Shape::Path, 1)]);
    })
}

pub fn embedding(audit: &mut Audit, seed: u64) -> SuiteReport {
    timed(6, "embedding", audit, |t, audit| {
        let mut rng = rng_from_seed(seed ^ 6);
        let mut hosts = vec![gen_complete(3), gen_cycle(5).expect("n >= 3"), gen_path(4).expect("n >= 1")];
        while hosts.len() < 25 {
            let n = rng.gen_range(1..=5);
            let p = rng.gen_range(0.2..0.9);
            hosts.push(random_graph(n, p, &mut rng));
        }
        for h in &hosts {
            let (g, map) = match embed_in_u(h) {
                Ok(x) => x,
                Err(e) => {
                    t.fail(format!("{}: {e}", describe(h)));
                    continue;
                }
            };
            let n = h.order();
            let induced = (0..n).all(|i| (0..n).all(|j| i == j || h.has_edge(i, j) == g.has_edge(map[i], map[j])));
            t.check(induced, || format!("{}: not induced under the embedding", describe(h)));
            let spectrum = packing_report(&g).map(|r| r.spectrum);
            t.check(spectrum == Ok(Some(vec![2 * n])), || {
                format!("{}: spectrum {spectrum:?}, expected [{}]", describe(h), 2 * n)
            });
            audit.observe(&g);
        }
    })
}

fn tree_check(g: &Graph) -> Tally {
    let mut t = Tally::new();
    let accepted = recognize_f(g);
    match uniform_packing_size(g) {
        Ok(size) => match (&accepted, size) {
            (Ok(partition), Some(size)) => {
                let expected = expected_spectrum_value(partition);
                t.check(size == expected, || {
                    format!("{}: accepted, spectrum {{{size}}} but predicted {expected}", describe(g))
                })
            }
            (Err(v), Some(size)) => {
                t.fail(format!("{}: rejected by {} but uniform of size {size}", describe(g), v.condition))
            }
            (Ok(_), None) => t.fail(format!("{}: accepted but not uniform", describe(g))),
            (Err(_), None) => t.check(true, String::new),
        },
        Err(e) => t.fail(format!("{}: {e}", describe(g))),
    }
    t
}

fn run_trees(t: &mut Tally, audit: &mut Audit, trees: &[Graph]) {
    for check in trees.par_iter().map(tree_check).collect::<Vec<_>>() {
        t.merge(check);
    }
    audit.observe_all(trees);
}

pub fn trees(audit: &mut Audit, seed: u64) -> SuiteReport {
    timed(7, "trees", audit, |t, audit| {
        const BATCH: usize = 1 << 14;
        for n in 3..=9 {
            let mut batch = Vec::with_capacity(BATCH);
            for tree in enumerate_labeled_trees(n).expect("n <= 9") {
                batch.push(tree);
                if batch.len() == BATCH {
                    run_trees(t, audit, &batch);
                    batch.clear();
                }
            }
            run_trees(t, audit, &batch);
        }
        let mut rng = rng_from_seed(seed ^ 7);
        let random: Vec<Graph> =
            (0..2000).map(|_| random_tree(rng.gen_range(10..=16), &mut rng).expect("n >= 1")).collect();
        run_trees(t, audit, &random);
    })
}

fn leaf_extended(g: &Graph, rng: &mut SeededRng) -> Graph {
    let mut g = g.clone();
    for _ in 0..rng.gen_range(1..=3) {
        let supports = g.supports();
        let s = supports.as_slice()[rng.gen_range(0..supports.len())];
        g = add_leaf(&g, s).expect("s is a support");
    }
    g
}

pub fn f_sufficiency(audit: &mut Audit, seed: u64) -> SuiteReport {
    timed(8, "f-sufficiency", audit, |t, audit| {
        let mut rng = rng_from_seed(seed ^ 8);
        let mut instances = Vec::with_capacity(250);
        for i in 0..250 {
            let spec = random_double_star_spec(&mut rng, 4);
            let (g, partition) = match gen_f_tree(&spec) {
                Ok(x) => x,
                Err(e) => {
                    t.fail(format!("instance {i}: {e}"));
                    continue;
                }
            };
            let expected = expected_spectrum_value(&partition);
            let g = if i < 200 {
                t.check(recognize_f(&g).as_ref() == Ok(&partition), || {
                    format!("{}: construction partition not recognized", describe(&g))
                });
                g
            } else {
                leaf_extended(&g, &mut rng)
            };
            instances.push((g, expected));
        }
        let sizes: Vec<_> = instances.par_iter().map(|(g, _)| uniform_packing_size(g)).collect();
        for ((g, expected), size) in instances.iter().zip(sizes) {
            t.check(size == Ok(Some(*expected)), || {
                format!("{}: uniform size {size:?}, predicted {expected}", describe(g))
            });
            audit.observe(g);
        }
    })
}

pub fn gk(audit: &mut Audit) -> SuiteReport {
    timed(9, "gk", audit, |t, audit| {
        for k in 2..=5 {
            let g = gen_gk(k).expect("k >= 1");
            t.check(g.girth() == Distance::Finite(14), || format!("G{k}: girth {}", g.girth()));
            let via_ong = in_u_via_ong(&g);
            t.check(via_ong == Ok(true), || format!("G{k}: ONG test gave {via_ong:?}"));
            let spectrum = packing_report(&g).map(|r| r.spectrum);
            t.check(spectrum == Ok(Some(vec![2 * (k + 1)])), || format!("G{k}: spectrum {spectrum:?}"));
            audit.observe(&g);
        }
    })
}

/// Graphs built to make each necessary-condition rule fire at least once.
pub fn lemma_constructions() -> Vec<Graph> {
    let mut out = Vec::new();
    // two supports next to one vertex
    out.extend([gen_spider(3, 2), gen_spider(4, 2), gen_path(5).expect("n >= 1")]);
    out.extend((15..=20).map(|n| gen_cycle(n).expect("n >= 3")));
    // a center far from every support
    out.extend([gen_spider(3, 4), gen_spider(3, 5), gen_spider(4, 4)]);
    // s1-u1-v-u2-s2 with pendant leaves at both ends
    out.extend([gen_path(7).expect("n >= 1"), gen_spider(3, 3)]);
    // a single star support with two non-leaf neighbors
    let p7 = gen_path(7).expect("n >= 1");
    out.push(p7.with_new_vertices(1).with_edges([(3, 7)]).expect("in range"));
    let p9 = gen_path(9).expect("n >= 1");
    out.push(p9.with_new_vertices(1).with_edges([(4, 9)]).expect("in range"));
    out
}

pub fn lemmas(audit: &mut Audit, seed: u64) -> SuiteReport {
    timed(10, "lemmas", audit, |t, audit| {
        let mut rng = rng_from_seed(seed ^ 10);
        let mut corpus = lemma_constructions();
        while corpus.len() < 300 {
            let n = rng.gen_range(3..=14);
            let g = match rng.gen_range(0..3) {
                0 => random_tree(n, &mut rng).expect("n >= 1"),
                1 => random_graph(n, rng.gen_range(0.1..0.5), &mut rng),
                _ => {
                    // a random tree plus a few chords
                    let tree = random_tree(n, &mut rng).expect("n >= 1");
                    let extra: Vec<_> = (0..rng.gen_range(1..=2))
                        .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
                        .filter(|(u, v)| u != v)
                        .collect();
                    tree.with_edges(extra).expect("in range")
                }
            };
            corpus.push(g);
        }
        let results: Vec<_> = corpus.par_iter().map(|g| (diagnose(g), uniform_packing_size(g))).collect();
        let mut fired = BTreeSet::new();
        for (g, (d, brute)) in corpus.iter().zip(results) {
            fired.extend(d.reasons.iter().map(|r| r.rule));
            match brute {
                Ok(size) => {
                    let sound = match d.verdict {
                        Verdict::NotInU => size.is_none(),
                        Verdict::InU => size.is_some(),
                        Verdict::Undecided => true,
                    };
                    t.check(sound, || {
                        let rules: Vec<String> = d.reasons.iter().map(|r| r.rule.to_string()).collect();
                        format!(
                            "{}: verdict {} ({}) but brute force says uniform={}",
                            describe(g),
                            d.verdict,
                            rules.join(","),
                            size.is_some()
                        )
                    });
                }
                Err(e) => t.fail(format!("{}: {e}", describe(g))),
            }
            audit.observe(g);
        }
        for rule in [Rule::R1, Rule::R2, Rule::R3, Rule::R4, Rule::R5, Rule::R6] {
            t.check(fired.contains(&rule), || format!("no corpus graph triggered {rule}"));
        }
    })
}

/// Runs criteria 1 to 10, then reports the audit of their instances as criterion 11.
pub fn run_all(seed: u64) -> Vec<SuiteReport> {
    let mut audit = Audit::new();
    let mut reports = vec![
        paths(&mut audit),
        cycles(&mut audit),
        t_gap(&mut audit),
        ong_equivalence(&mut audit, seed),
        ong_forms(&mut audit),
        embedding(&mut audit, seed),
        trees(&mut audit, seed),
        f_sufficiency(&mut audit, seed),
        gk(&mut audit),
        lemmas(&mut audit, seed),
    ];
    reports.push(audit.report());
    reports
}

pub const SUITE_NAMES: [&str; 11] = [
    "paths",
    "cycles",
    "t-gap",
    "ong-equivalence",
    "ong-forms",
    "embedding",
    "trees",
    "f-sufficiency",
    "gk",
    "lemmas",
    "bound-chain",
];

/// Runs one suite by number (`"7"`) or name (`"trees"`); `"all"` runs every suite.
/// Returns `None` for an unknown suite.
pub fn run_named(suite: &str, seed: u64) -> Option<Vec<SuiteReport>> {
    if suite == "all" {
        return Some(run_all(seed));
    }
    let index = match suite.parse::<usize>() {
        Ok(k) if (1..=11).contains(&k) => k,
        _ => SUITE_NAMES.iter().position(|&s| s == suite)? + 1,
    };
    let mut audit = Audit::new();
    let report = match index {
        1 => paths(&mut audit),
        2 => cycles(&mut audit),
        3 => t_gap(&mut audit),
        4 => ong_equivalence(&mut audit, seed),
        5 => ong_forms(&mut audit),
        6 => embedding(&mut audit, seed),
        7 => trees(&mut audit, seed),
        8 => f_sufficiency(&mut audit, seed),
        9 => gk(&mut audit),
        10 => lemmas(&mut audit, seed),
        _ => return Some(vec![run_all(seed).pop().expect("eleven reports")]),
    };
    Some(vec![report])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labeled_graph_counts() {
        assert_eq!(all_labeled_graphs(4).count(), 64);
        assert_eq!(all_labeled_graphs(3).filter(|g| g.size() == 1).count(), 3);
    }

    #[test]
    fn fast_suites_pass() {
        let mut audit = Audit::new();
        for report in [paths(&mut audit), cycles(&mut audit), t_gap(&mut audit), ong_forms(&mut audit), gk(&mut audit)]
        {
            assert!(report.passed(), "{report}");
        }
        let chain = audit.report();
        assert!(chain.passed() && chain.checked > 50, "{chain}");
    }

    #[test]
    fn tally_counts_every_failure() {
        let mut t = Tally::new();
        for i in 0..30 {
            t.check(i % 2 == 0, || format!("odd {i}"));
        }
        let mut outer = Tally::new();
        outer.merge(t);
        assert_eq!((outer.checked, outer.failures, outer.messages.len()), (30, 15, 15));
    }

    #[test]
    fn unknown_suite() {
        assert!(run_named("nope", 1).is_none());
        assert!(run_named("12", 1).is_none());
    }
}
