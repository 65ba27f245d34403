//! The invariant suite behind `bidikl verify`.
//!
//! Every check recomputes its facts through a second route (pairwise
//! queries against whole decompositions, brute enumeration against the
//! memoized search, one factor against another) and records the first
//! counterexample it meets.

use bidikl_core::{
    b_flexible_components, b_kl_by_reduction, b_kl_decomposition, b_same_class, circular_components,
    component_restriction, diwalk_exists, enumerate_b_factors, enumerate_ditrails, find_ditrail, kl_decomposition,
    reach_profile, restrict_b, same_class, BidirectedGraph, DegreeSpec, EdgeSet, Error, KlMethod, Partition,
    ReachProfile, Sign, VertexId, Walk,
};
use serde_json::{json, Value};

use crate::document::LoadedGraph;

/// Brute-force ditrail enumeration is only attempted up to this size.
pub const ENUMERATION_EDGE_LIMIT: usize = 14;

/// How many distinct b-factors the reduction cross-check tries.
pub const REDUCTION_FACTORS: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Passed,
    Failed(String),
    Skipped(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub outcome: Outcome,
}

impl Check {
    pub fn passed(&self) -> bool {
        !matches!(self.outcome, Outcome::Failed(_))
    }

    pub fn to_json(&self) -> Value {
        let (status, detail) = match &self.outcome {
            Outcome::Passed => ("pass", None),
            Outcome::Failed(d) => ("fail", Some(d)),
            Outcome::Skipped(d) => ("skip", Some(d)),
        };
        let mut v = json!({ "name": self.name, "status": status });
        if let Some(d) = detail {
            v["detail"] = json!(d);
        }
        v
    }
}

type CheckResult = Result<(), String>;
type FactorCheck = fn(&LoadedGraph) -> CheckResult;

fn ensure(ok: bool, detail: impl FnOnce() -> String) -> CheckResult {
    if ok {
        Ok(())
    } else {
        Err(detail())
    }
}

fn core(e: Error) -> String {
    format!("engine error: {e}")
}

struct Context<'a> {
    g: &'a BidirectedGraph,
    profiles: Vec<Vec<ReachProfile>>,
}

impl Context<'_> {
    fn name(&self, v: VertexId) -> &str {
        self.g.vertex_name(v)
    }

    fn profile(&self, u: VertexId, v: VertexId) -> &ReachProfile {
        &self.profiles[u.index()][v.index()]
    }

    fn pairs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.g.vertices().flat_map(|u| self.g.vertices().map(move |v| (u, v)))
    }

    fn quad(&self, u: VertexId, v: VertexId, a: Sign, b: Sign) -> String {
        format!("({}, {}, {a}, {b})", self.name(u), self.name(v))
    }
}

fn reversal(cx: &Context) -> CheckResult {
    for (u, v) in cx.pairs() {
        for (a, b, exists) in cx.profile(u, v).entries() {
            ensure(exists == cx.profile(v, u).get(b, a), || {
                format!("{} disagrees with its reversal", cx.quad(u, v, a, b))
            })?;
        }
    }
    Ok(())
}

fn enumeration(cx: &Context) -> Result<Option<String>, String> {
    if cx.g.edge_count() > ENUMERATION_EDGE_LIMIT {
        return Ok(Some(format!("more than {ENUMERATION_EDGE_LIMIT} edges")));
    }
    for (u, v) in cx.pairs() {
        for (a, b, exists) in cx.profile(u, v).entries() {
            let found = !enumerate_ditrails(cx.g, u, v, a, b, 1).map_err(core)?.is_empty();
            ensure(found == exists, || {
                format!(
                    "{}: search says {exists}, enumeration says {found}",
                    cx.quad(u, v, a, b)
                )
            })?;
        }
    }
    Ok(None)
}

fn diwalk_bound(cx: &Context) -> CheckResult {
    for (u, v) in cx.pairs() {
        for (a, b, exists) in cx.profile(u, v).entries() {
            if exists {
                ensure(diwalk_exists(cx.g, u, v, a, b).map_err(core)?, || {
                    format!("{} has a ditrail but no alternating walk", cx.quad(u, v, a, b))
                })?;
            }
        }
    }
    Ok(())
}

/// Every circular edge closes into a cyclic ditrail through itself, and no
/// edge between two components is circular.
fn circular_witnesses(g: &BidirectedGraph) -> CheckResult {
    let structure = circular_components(g);
    for (id, e) in g.edges() {
        let name = g.edge_name(id);
        if !structure.is_circular(id) {
            continue;
        }
        ensure(structure.components.same(e.u, e.v), || {
            format!("circular edge `{name}` joins two components")
        })?;
        let only = EdgeSet::from_edges(g.edge_count(), [id]);
        let mut closed = None;
        for &flip in if e.is_loop() { &[false, true][..] } else { &[false][..] } {
            let (out, back, far) = e.traverse(e.u, flip).expect("edge touches its end");
            let mut first = Walk::trivial(e.u);
            first.push(bidikl_core::Step {
                edge: id,
                to: far,
                flip,
            });
            if let Some(rest) = find_ditrail(g, far, e.u, -back, -out, Some(&only)).map_err(core)? {
                closed = Some(first.concat(&rest).expect("walks meet at the far end"));
                break;
            }
        }
        let Some(walk) = closed else {
            return Err(format!("no cyclic ditrail found through circular edge `{name}`"));
        };
        let class = bidikl_core::classify_walk(g, &walk).map_err(core)?;
        ensure(
            walk.is_closed() && class.is_ditrail && class.types.iter().any(|t| t.start != t.end),
            || format!("witness through `{name}` is not a cyclic ditrail"),
        )?;
    }
    Ok(())
}

fn classes_text(g: &BidirectedGraph, p: &Partition) -> String {
    let parts: Vec<String> = p
        .classes()
        .iter()
        .map(|c| c.iter().map(|&v| g.vertex_name(v)).collect::<Vec<_>>().join(","))
        .collect();
    format!("{{{}}}", parts.join("} {"))
}

/// Pairwise `same_class` is an equivalence and agrees with the
/// decomposition.
fn kl_transitivity(cx: &Context) -> CheckResult {
    for sign in Sign::BOTH {
        let kl = kl_decomposition(cx.g, sign);
        for (u, v) in cx.pairs() {
            let related = same_class(cx.g, u, v, sign).map_err(core)?;
            ensure(related == kl.partition.same(u, v), || {
                format!(
                    "~{sign}: pairwise says {related} for ({}, {}), decomposition {}",
                    cx.name(u),
                    cx.name(v),
                    classes_text(cx.g, &kl.partition)
                )
            })?;
        }
    }
    Ok(())
}

/// Inside a circular component every vertex reaches every other vertex
/// leaving with either sign.
fn component_reach(cx: &Context) -> CheckResult {
    let structure = circular_components(cx.g);
    for class in structure.components.classes() {
        for &s in class {
            for &t in class {
                for a in Sign::BOTH {
                    let p = cx.profile(s, t);
                    ensure(p.get(a, Sign::Plus) || p.get(a, Sign::Minus), || {
                        format!("no ditrail from {} to {} leaving with {a}", cx.name(s), cx.name(t))
                    })?;
                }
            }
        }
    }
    Ok(())
}

fn kl_refinement(g: &BidirectedGraph) -> CheckResult {
    let structure = circular_components(g);
    for sign in Sign::BOTH {
        let kl = kl_decomposition(g, sign);
        ensure(kl.partition.refines(&structure.components), || {
            format!("~{sign} classes cross circular components")
        })?;
        for (i, members) in structure.components.classes().iter().enumerate() {
            let restricted = component_restriction(g, i, sign).map_err(core)?;
            let sub = g.induced_subgraph(members).map_err(core)?;
            let standalone = kl_decomposition(&sub.graph, sign);
            for class in &restricted {
                let local = |v: VertexId| standalone.class_of(sub.local_vertex(v).expect("member"));
                ensure(class.iter().all(|&v| local(v) == local(class[0])), || {
                    format!(
                        "~{sign} class of {} is split inside its standalone component",
                        g.vertex_name(class[0])
                    )
                })?;
            }
        }
    }
    Ok(())
}

fn digraph_triviality(cx: &Context) -> CheckResult {
    for (u, v) in cx.pairs() {
        for a in Sign::BOTH {
            ensure(!cx.profile(u, v).get(a, a), || {
                format!("{} exists in a digraph", cx.quad(u, v, a, a))
            })?;
        }
    }
    let structure = circular_components(cx.g);
    for sign in Sign::BOTH {
        let kl = kl_decomposition(cx.g, sign);
        ensure(kl.partition == structure.components, || {
            format!("~{sign} splits a strong component")
        })?;
    }
    Ok(())
}

fn b_transitivity(g: &BidirectedGraph, b: &DegreeSpec) -> CheckResult {
    for sign in Sign::BOTH {
        let kl = b_kl_decomposition(g, b, sign, KlMethod::Direct).map_err(core)?;
        for u in g.vertices() {
            for v in g.vertices() {
                let related = b_same_class(g, b, u, v, sign).map_err(core)?;
                ensure(related == kl.partition.same(u, v), || {
                    format!(
                        "~{sign}b: pairwise says {related} for ({}, {})",
                        g.vertex_name(u),
                        g.vertex_name(v)
                    )
                })?;
            }
        }
    }
    Ok(())
}

fn reduction(g: &BidirectedGraph, b: &DegreeSpec, given: Option<&EdgeSet>) -> CheckResult {
    let mut factors = enumerate_b_factors(g, b, REDUCTION_FACTORS).map_err(core)?;
    if let Some(m) = given {
        if !factors.contains(m) {
            factors.push(m.clone());
        }
    }
    for sign in Sign::BOTH {
        let direct = b_kl_decomposition(g, b, sign, KlMethod::Direct).map_err(core)?;
        for (i, m) in factors.iter().enumerate() {
            let reduced = b_kl_by_reduction(g, b, sign, m).map_err(core)?;
            ensure(reduced.partition == direct.partition, || {
                format!(
                    "~{sign}b: direct {} but factor #{i} gives {}",
                    classes_text(g, &direct.partition),
                    classes_text(g, &reduced.partition)
                )
            })?;
        }
    }
    Ok(())
}

fn b_refinement(g: &BidirectedGraph, b: &DegreeSpec) -> CheckResult {
    let flexible = b_flexible_components(g, b).map_err(core)?;
    for sign in Sign::BOTH {
        let whole = b_kl_decomposition(g, b, sign, KlMethod::Direct).map_err(core)?;
        ensure(whole.partition.refines(&flexible), || {
            format!("~{sign}b classes cross flexible components")
        })?;
        for members in flexible.classes() {
            let sub = g.induced_subgraph(members).map_err(core)?;
            let bh = restrict_b(g, b, members).map_err(core)?;
            let local = b_kl_decomposition(&sub.graph, &bh, sign, KlMethod::Direct).map_err(core)?;
            for class in whole.classes().iter().filter(|c| members.contains(&c[0])) {
                let at = |v: VertexId| local.class_of(sub.local_vertex(v).expect("member"));
                ensure(class.iter().all(|&v| at(v) == at(class[0])), || {
                    format!(
                        "~{sign}b class of {} is split inside its flexible component",
                        g.vertex_name(class[0])
                    )
                })?;
            }
        }
    }
    Ok(())
}

fn outcome(r: CheckResult) -> Outcome {
    match r {
        Ok(()) => Outcome::Passed,
        Err(d) => Outcome::Failed(d),
    }
}

/// Runs every applicable check on `loaded`, in a fixed order.
pub fn run_checks(loaded: &LoadedGraph) -> Vec<Check> {
    let g = &loaded.graph;
    let profiles = g
        .vertices()
        .map(|u| {
            g.vertices()
                .map(|v| reach_profile(g, u, v).expect("vertices of g"))
                .collect()
        })
        .collect();
    let cx = Context { g, profiles };
    let mut checks = Vec::new();
    let mut push = |name, outcome| checks.push(Check { name, outcome });

    push("reach.reversal", outcome(reversal(&cx)));
    push(
        "reach.enumeration",
        match enumeration(&cx) {
            Ok(None) => Outcome::Passed,
            Ok(Some(why)) => Outcome::Skipped(why),
            Err(d) => Outcome::Failed(d),
        },
    );
    push("reach.diwalk_bound", outcome(diwalk_bound(&cx)));
    push("circular.witnesses", outcome(circular_witnesses(g)));
    push("circular.component_reach", outcome(component_reach(&cx)));
    push("kl.transitivity", outcome(kl_transitivity(&cx)));
    push("kl.refinement", outcome(kl_refinement(g)));
    push(
        "digraph.triviality",
        if g.is_digraphic() {
            outcome(digraph_triviality(&cx))
        } else {
            Outcome::Skipped("graph is not digraphic".into())
        },
    );

    let b_checks: [(&'static str, FactorCheck); 3] = [
        ("b.transitivity", |l| b_transitivity(&l.plain, &l.b)),
        ("b.reduction", |l| reduction(&l.plain, &l.b, l.matching.as_ref())),
        ("b.refinement", |l| b_refinement(&l.plain, &l.b)),
    ];
    let factorizable = match enumerate_b_factors(&loaded.plain, &loaded.b, 1) {
        Ok(found) => !found.is_empty(),
        Err(_) => false,
    };
    for (name, check) in b_checks {
        push(
            name,
            if factorizable {
                outcome(check(loaded))
            } else {
                Outcome::Skipped("graph has no b-factor".into())
            },
        );
    }
    checks
}
