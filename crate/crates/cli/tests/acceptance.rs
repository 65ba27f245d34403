//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use bidikl_core::{
    b_flexible_components, b_kl_by_reduction, b_kl_decomposition, circular_components, component_restriction,
    ditrail_exists, enumerate_ditrails, kl_decomposition, restrict_b, same_class, BidirectedGraph, DegreeSpec,
    KlMethod, Sign, VertexId,
};
use bidikl_testkit::{
    b_relation_brute, bidirected_corpus, classical_kl_brute, digraph_corpus, dipath_table, factor_corpus,
    factors_brute, fixtures, index_classes, strong_components, table_get, to_edge_set,
};

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn bidirected() -> Vec<BidirectedGraph> {
    bidirected_corpus(0xB1D1, 200, 8, 12)
}

fn digraphs() -> Vec<BidirectedGraph> {
    digraph_corpus(0xD16A, 100, 10, 20)
}

fn factors() -> Vec<(BidirectedGraph, DegreeSpec)> {
    factor_corpus(0xFAC7, 100, 7, 10, 3)
}

fn reach_matches_enumeration() -> Verdict {
    let mut queries = 0usize;
    let mut positive = 0usize;
    for (i, g) in bidirected().iter().enumerate() {
        for u in g.vertices() {
            for v in g.vertices() {
                for a in Sign::BOTH {
                    for b in Sign::BOTH {
                        let fast = ditrail_exists(g, u, v, a, b, None).unwrap();
                        let slow = !enumerate_ditrails(g, u, v, a, b, 1).unwrap().is_empty();
                        if fast != slow {
                            return Err(format!("graph #{i}, ({u:?}, {v:?}, {a}, {b}): {fast} vs {slow}"));
                        }
                        queries += 1;
                        positive += fast as usize;
                    }
                }
            }
        }
    }
    Ok(format!("{queries} queries agree, {positive} positive"))
}

fn kl_is_an_equivalence() -> Verdict {
    let mut triples = 0usize;
    for (i, g) in bidirected().iter().enumerate() {
        let n = g.vertex_count();
        for sign in Sign::BOTH {
            let rel: Vec<Vec<bool>> = g
                .vertices()
                .map(|u| g.vertices().map(|v| same_class(g, u, v, sign).unwrap()).collect())
                .collect();
            for x in 0..n {
                if !rel[x][x] {
                    return Err(format!("graph #{i}: ~{sign} not reflexive at {x}"));
                }
                for y in 0..n {
                    if rel[x][y] != rel[y][x] {
                        return Err(format!("graph #{i}: ~{sign} not symmetric on ({x}, {y})"));
                    }
                    for z in 0..n {
                        if rel[x][y] && rel[y][z] && !rel[x][z] {
                            return Err(format!("graph #{i}: ~{sign} not transitive on ({x}, {y}, {z})"));
                        }
                        triples += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{triples} triples checked"))
}

fn every_start_sign_reaches(g: &BidirectedGraph, s: VertexId, t: VertexId) -> bool {
    Sign::BOTH.into_iter().all(|a| {
        Sign::BOTH
            .into_iter()
            .any(|b| ditrail_exists(g, s, t, a, b, None).unwrap())
    })
}

/// Checked on every corpus graph that is circularly connected, and on every
/// circular component taken as a graph of its own.
fn circularly_connected_reach() -> Verdict {
    let mut whole = 0usize;
    let mut standalone = 0usize;
    for (i, g) in bidirected().iter().enumerate() {
        let structure = circular_components(g);
        let mut graphs = Vec::new();
        if structure.components.len() == 1 {
            whole += 1;
            graphs.push(g.clone());
        }
        for members in structure.components.classes().iter().filter(|c| c.len() > 1) {
            let sub = g.induced_subgraph(members).unwrap().graph;
            assert_eq!(circular_components(&sub).components.len(), 1);
            standalone += 1;
            graphs.push(sub);
        }
        for h in &graphs {
            for s in h.vertices() {
                for t in h.vertices() {
                    if !every_start_sign_reaches(h, s, t) {
                        return Err(format!(
                            "graph #{i}: no ditrail from {s:?} to {t:?} for some start sign"
                        ));
                    }
                }
            }
        }
    }
    if standalone == 0 {
        return Err("corpus has no nontrivial circular component".into());
    }
    Ok(format!("{whole} connected graphs, {standalone} nontrivial components"))
}

fn digraph_coincidence() -> Verdict {
    let mut small = 0usize;
    let mut nontrivial = 0usize;
    for (i, g) in digraphs().iter().enumerate() {
        let structure = circular_components(g);
        if index_classes(structure.components.classes()) != strong_components(g) {
            return Err(format!("graph #{i}: circular components differ from strong components"));
        }
        nontrivial += structure.components.classes().iter().filter(|c| c.len() > 1).count();
        for u in g.vertices() {
            for v in g.vertices() {
                for a in Sign::BOTH {
                    if ditrail_exists(g, u, v, a, a, None).unwrap() {
                        return Err(format!("graph #{i}: ({a},{a})-ditrail from {u:?} to {v:?}"));
                    }
                }
            }
        }
        if g.edge_count() <= 12 {
            small += 1;
            let paths = dipath_table(g);
            for u in g.vertices() {
                for v in g.vertices() {
                    for a in Sign::BOTH {
                        for b in Sign::BOTH {
                            if ditrail_exists(g, u, v, a, b, None).unwrap() != table_get(&paths, u, v, a, b) {
                                return Err(format!("graph #{i}: ditrail and dipath reach differ at {u:?}, {v:?}"));
                            }
                        }
                    }
                }
            }
        }
        for c in 0..structure.components.len() {
            for sign in Sign::BOTH {
                if component_restriction(g, c, sign).unwrap().len() != 1 {
                    return Err(format!("graph #{i}: component {c} splits under ~{sign}"));
                }
            }
        }
    }
    Ok(format!(
        "100 digraphs, {nontrivial} nontrivial strong components, dipath oracle on {small}"
    ))
}

fn reduction_agrees() -> Verdict {
    let mut multi = 0usize;
    let mut factors_used = 0usize;
    for (i, (g, b)) in factors().iter().enumerate() {
        let all = factors_brute(g, b.values());
        for sign in Sign::BOTH {
            let direct = b_kl_decomposition(g, b, sign, KlMethod::Direct).unwrap();
            let reduced = b_kl_decomposition(g, b, sign, KlMethod::Reduction).unwrap();
            if direct.partition != reduced.partition {
                return Err(format!("graph #{i}: direct and reduction differ under ~{sign}b"));
            }
            if index_classes(direct.classes()) != b_relation_brute(g, b.values(), sign) {
                return Err(format!("graph #{i}: ~{sign}b differs from its definition"));
            }
            for m in &all {
                let via_m = b_kl_by_reduction(g, b, sign, &to_edge_set(g, m)).unwrap();
                if via_m.partition != direct.partition {
                    return Err(format!(
                        "graph #{i}: reduction through factor {m:?} differs under ~{sign}b"
                    ));
                }
            }
        }
        factors_used += all.len();
        multi += (all.len() >= 3) as usize;
    }
    if multi == 0 {
        return Err("no instance has three distinct factors".into());
    }
    Ok(format!(
        "100 instances, {factors_used} factors, {multi} with at least 3"
    ))
}

fn square_specialisation() -> Verdict {
    let g = fixtures::square();
    let b = DegreeSpec::uniform(4, 1);
    let got = index_classes(
        b_kl_decomposition(&g, &b, Sign::Minus, KlMethod::Direct)
            .unwrap()
            .classes(),
    );
    let expected = vec![vec![0, 2], vec![1, 3]];
    let brute = b_relation_brute(&g, b.values(), Sign::Minus);
    let classical = classical_kl_brute(&g);
    if got == expected && brute == expected && classical == expected {
        Ok("{1,3} {2,4} from the engine and both oracles".into())
    } else {
        Err(format!(
            "engine {got:?}, factor oracle {brute:?}, classical oracle {classical:?}"
        ))
    }
}

fn restriction_refines(g: &BidirectedGraph, sign: Sign) -> bool {
    let structure = circular_components(g);
    structure.components.classes().iter().enumerate().all(|(i, members)| {
        let sub = g.induced_subgraph(members).unwrap();
        let standalone = kl_decomposition(&sub.graph, sign);
        component_restriction(g, i, sign).unwrap().iter().all(|class| {
            let local = |v: VertexId| standalone.class_of(sub.local_vertex(v).unwrap());
            class.iter().all(|&v| local(v) == local(class[0]))
        })
    })
}

fn flexible_restriction_refines(g: &BidirectedGraph, b: &DegreeSpec, sign: Sign) -> bool {
    let flexible = b_flexible_components(g, b).unwrap();
    let whole = b_kl_decomposition(g, b, sign, KlMethod::Direct).unwrap();
    flexible.classes().iter().all(|members| {
        let sub = g.induced_subgraph(members).unwrap();
        let bh = restrict_b(g, b, members).unwrap();
        let local = b_kl_decomposition(&sub.graph, &bh, sign, KlMethod::Direct).unwrap();
        whole.classes().iter().filter(|c| members.contains(&c[0])).all(|class| {
            let at = |v: VertexId| local.class_of(sub.local_vertex(v).unwrap());
            class.iter().all(|&v| at(v) == at(class[0]))
        })
    })
}

fn refinement() -> Verdict {
    let mut strict = 0usize;
    let mut graphs = 0usize;
    for (name, corpus) in [("bidirected", bidirected()), ("digraph", digraphs())] {
        graphs += corpus.len();
        for (i, g) in corpus.iter().enumerate() {
            for sign in Sign::BOTH {
                if !restriction_refines(g, sign) {
                    return Err(format!("{name} graph #{i}: restriction does not refine under ~{sign}"));
                }
                let structure = circular_components(g);
                for (c, members) in structure.components.classes().iter().enumerate() {
                    let sub = g.induced_subgraph(members).unwrap();
                    strict += (component_restriction(g, c, sign).unwrap().len()
                        > kl_decomposition(&sub.graph, sign).partition.len()) as usize;
                }
            }
        }
    }
    for (i, (g, b)) in factors().iter().enumerate() {
        for sign in Sign::BOTH {
            if !flexible_restriction_refines(g, b, sign) {
                return Err(format!("factor instance #{i}: ~{sign}b does not refine"));
            }
        }
    }
    Ok(format!(
        "{graphs} graphs and 100 factor instances, {strict} strict refinements"
    ))
}

fn fixture_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn run_binary(args: &[&str], file: &Path) -> (Option<i32>, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_bidikl"))
        .args(args)
        .arg(file)
        .output()
        .expect("binary runs");
    (out.status.code(), out.stdout)
}

fn cli_determinism() -> Verdict {
    let started = Instant::now();
    let mut files: Vec<PathBuf> = std::fs::read_dir(fixture_dir())
        .map_err(|e| e.to_string())?
        .map(|entry| entry.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    if files.is_empty() {
        return Err("no fixtures found".into());
    }
    let commands: [&[&str]; 5] = [
        &["verify"],
        &["kl", "--sign", "-"],
        &["kl", "--sign", "+"],
        &["export-dot"],
        &["export-dot", "--sign", "-"],
    ];
    for file in &files {
        for args in commands {
            let first = run_binary(args, file);
            let second = run_binary(args, file);
            if first.0 != Some(0) {
                return Err(format!("{args:?} on {} exited with {:?}", file.display(), first.0));
            }
            if first != second {
                return Err(format!("{args:?} on {} is not deterministic", file.display()));
            }
        }
    }
    let elapsed = started.elapsed();
    if elapsed > Duration::from_secs(600) {
        return Err(format!("fixture suite took {elapsed:?}"));
    }
    Ok(format!(
        "{} fixtures x {} commands in {:.1}s",
        files.len(),
        commands.len(),
        elapsed.as_secs_f64()
    ))
}

fn main() {
    let criteria: [Criterion; 8] = [
        (
            "ditrail reachability matches exhaustive enumeration",
            reach_matches_enumeration,
        ),
        ("kl relation is an equivalence", kl_is_an_equivalence),
        (
            "circularly connected graphs reach from either start sign",
            circularly_connected_reach,
        ),
        ("digraph components are strong components", digraph_coincidence),
        ("b-factor reduction agrees with the direct relation", reduction_agrees),
        ("square with b = 1 has classes {1,3} {2,4}", square_specialisation),
        ("restricted classes refine standalone components", refinement),
        ("cli output is deterministic on all fixtures", cli_determinism),
    ];
    let mut failed = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let verdict = check();
        let secs = started.elapsed().as_secs_f64();
        match verdict {
            Ok(detail) => println!("PASS {} {name}: {detail} ({secs:.2}s)", n + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {name}: {detail} ({secs:.2}s)", n + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
