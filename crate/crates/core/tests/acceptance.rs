//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails. All tolerances are exact.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use orbigraph::io::{parse_document, write_document, TraceRecord};
use orbigraph::oracle::{
    curated_round_trips, enumerate_admissible_form_params, enumerate_small_graphs, enumerate_spherical_signatures,
    random_bad_orbifold_with, run_round_trip, EnumerationBounds, GenerateError, GenerateOptions, PieceCatalog,
};
use orbigraph::surgery::apply_cut_and_cap;
use orbigraph::{classify, decompose, validate_graph, BadnessWitness, ConeSignature, Form, SingularGraph, Underlying};

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn manifest() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Every sorted signature of length 0 to 4 with weights in 2..=max.
fn all_signatures(max: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    let mut layer: Vec<Vec<u32>> = vec![Vec::new()];
    for _ in 0..4 {
        layer = layer
            .iter()
            .flat_map(|s| {
                let lo = s.last().copied().unwrap_or(2);
                (lo..=max).map(move |w| [s.clone(), vec![w]].concat())
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

fn in_the_spherical_list(s: &[u32]) -> bool {
    match s {
        [] => true,
        [a, b] => a == b,
        [2, 2, _] => true,
        [2, 3, c] => (3..=5).contains(c),
        _ => false,
    }
}

fn spherical_list() -> Outcome {
    const MAX: u32 = 50;
    let oracle = enumerate_spherical_signatures(MAX);
    let mut marked = BTreeSet::new();
    let sigs = all_signatures(MAX);
    for s in &sigs {
        let sig = ConeSignature::new(s.iter().copied()).unwrap();
        let spherical = sig.is_spherical();
        ensure(spherical == in_the_spherical_list(s), || format!("{sig} classified {:?}", sig.classify()))?;
        if spherical {
            marked.insert(sig);
        }
    }
    ensure(marked == oracle, || format!("oracle lists {} signatures, classifier {}", oracle.len(), marked.len()))?;
    Ok(format!("{} signatures checked, {} spherical, oracle agrees", sigs.len(), marked.len()))
}

fn football_form2_forced() -> Outcome {
    let graphs = enumerate_small_graphs(EnumerationBounds { max_weight: 10, max_vertices: 4, max_edges: 7 });
    let mut cases = 0;
    for g in graphs.iter().filter(|g| g.loop_count() > 0) {
        for (e, ee) in g.edges().filter(|(_, e)| e.is_loop()) {
            for (f, fe) in g.edges().filter(|(f, fe)| *f != e && !fe.is_circle() && fe.weight < ee.weight) {
                let w = BadnessWitness::football(e, f, None);
                let x = classify(g, &w).map_err(|err| format!("{w}: {err}"))?;
                let v = ee.endpoints().unwrap()[0];
                let third: Vec<u32> = g.vertex_signature(v).values();
                let a_star = third.iter().copied().find(|&x| x != ee.weight.get()).unwrap_or(ee.weight.get());
                ensure(x.form == Form::FbForm2, || format!("{w} classified {}", x.form))?;
                ensure((fe.weight.get(), ee.weight.get(), a_star) == (2, 3, 2), || format!("{w}: weights"))?;
                ensure(x.signatures().iter().map(|s| s.values()).eq([vec![2, 2, 2]]), || format!("{w}: boundary"))?;
                cases += 1;
            }
        }
    }
    ensure(cases > 0, || "no football on a loop was found".into())?;
    Ok(format!("{cases} loop footballs, all FB_Form2 with (a,b,a*) = (2,3,2) and S2(2,2,2)"))
}

fn teardrop_form6_forced() -> Outcome {
    let tuples = enumerate_admissible_form_params(Form::TdForm6, 12);
    ensure(!tuples.is_empty(), || "no admissible tuples".into())?;
    let project = |i: usize| tuples.iter().map(|p| p[i]).collect::<BTreeSet<u32>>();
    let [a, ap, abp, am, abm, s] = [0, 1, 2, 3, 4, 5].map(project);
    ensure(s == BTreeSet::from([2]), || format!("a* takes {s:?}"))?;
    ensure(am == BTreeSet::from([3]) && abm == BTreeSet::from([2]), || format!("(a-, a-bar) takes {am:?} {abm:?}"))?;
    ensure(ap == BTreeSet::from([3, 4, 5]), || format!("a+ takes {ap:?}"))?;
    ensure(abp == BTreeSet::from([2, 3]), || format!("a+bar takes {abp:?}"))?;
    ensure(a.iter().all(|&x| x <= 5), || format!("a takes {a:?}"))?;

    // The classifier agrees on real graphs.
    let graphs = enumerate_small_graphs(EnumerationBounds { max_weight: 6, max_vertices: 4, max_edges: 6 });
    let mut seen = 0;
    for g in &graphs {
        for e in g.edge_ids() {
            let x = classify(g, &BadnessWitness::teardrop(e)).map_err(|err| err.to_string())?;
            if x.form == Form::TdForm6 {
                let v = x.signatures()[0].values();
                ensure(v.iter().filter(|&&w| w == 2).count() >= 2, || format!("boundary {v:?}"))?;
                seen += 1;
            }
        }
    }
    ensure(seen > 0, || "no Form 6 teardrop among enumerated graphs".into())?;
    Ok(format!("{} tuples up to 12; {seen} Form 6 teardrops on enumerated graphs", tuples.len()))
}

fn teardrop_form2_document() -> Outcome {
    let text = fs::read_to_string(manifest().join("corpus/teardrop_form2.orb")).map_err(|e| e.to_string())?;
    let doc = parse_document(&text).map_err(|e| e.to_string())?;
    let x = classify(&doc.graph, &doc.witnesses[0]).map_err(|e| e.to_string())?;
    ensure(x.form == Form::TdForm2, || format!("classified {}", x.form))?;
    ensure(x.underlying == Underlying::SphereTimesInterval, || format!("underlying {}", x.underlying))?;
    let sigs: Vec<String> = x.signatures().iter().map(|s| s.to_string()).collect();
    ensure(sigs == ["S2(2,2)", "S2(2,2,3)"], || format!("boundaries {sigs:?}"))?;
    let t = decompose(&doc.graph, &doc.witnesses).map_err(|e| e.to_string())?;
    ensure(t.steps.len() == 1 && validate_graph(&t.final_graph).is_empty(), || "decomposition".into())?;
    Ok(x.summary())
}

struct FuzzStats {
    runs: usize,
    steps: usize,
    skipped: usize,
    sphericity: Vec<String>,
    ordering: Vec<String>,
}

fn fuzz_seed(i: u64) -> SingularGraph {
    let mut g = SingularGraph::new();
    match i % 3 {
        0 => {}
        1 => {
            g.add_circle(2);
        }
        _ => {
            let a = g.add_vertex();
            let b = g.add_vertex();
            g.add_arc(3, a, b);
            g.add_arc(2, a, b);
            g.add_arc(2, a, b);
        }
    }
    g
}

fn fuzz() -> FuzzStats {
    let catalog = PieceCatalog::new(GenerateOptions { max_weight: 6, allow_smooth: true });
    let mut stats = FuzzStats { runs: 0, steps: 0, skipped: 0, sphericity: Vec::new(), ordering: Vec::new() };
    let mut i = 0u64;
    while stats.runs < 10_000 {
        let steps = 1 + (i % 5) as usize;
        let seed = fuzz_seed(i / 5);
        i += 1;
        let (g, ws) = match random_bad_orbifold_with(&catalog, &seed, steps, i) {
            Ok(r) => r,
            Err(GenerateError::NoAdmissibleAttachment { .. }) => {
                stats.skipped += 1;
                continue;
            }
            Err(e) => {
                stats.sphericity.push(format!("rng {i}: {e}"));
                stats.runs += 1;
                continue;
            }
        };
        stats.runs += 1;
        let t = match decompose(&g, &ws) {
            Ok(t) => t,
            Err(e) => {
                stats.ordering.push(format!("rng {i}: {e}"));
                continue;
            }
        };
        stats.steps += t.steps.len();
        if t.steps.len() != ws.len() {
            stats.ordering.push(format!("rng {i}: {} steps for {} witnesses", t.steps.len(), ws.len()));
        }
        let mut prev_remaining = ws.len();
        let mut in_footballs = false;
        for s in &t.steps {
            if s.remaining + 1 != prev_remaining {
                stats.ordering.push(format!("rng {i}: remaining count did not drop at step {}", s.index));
            }
            prev_remaining = s.remaining;
            if s.x.form.is_teardrop() && in_footballs {
                stats.ordering.push(format!("rng {i}: teardrop after football at step {}", s.index));
            }
            in_footballs |= !s.x.form.is_teardrop();
            let bad_boundary = s.x.signatures().into_iter().chain(s.caps.iter().map(|c| c.signature.clone()));
            for sig in bad_boundary.filter(|sig| !sig.is_spherical()) {
                stats.sphericity.push(format!("rng {i} step {}: {sig}", s.index));
            }
            if s.x.boundary.len() != s.x.underlying.boundary_count() {
                stats.sphericity.push(format!("rng {i} step {}: {}", s.index, s.x.summary()));
            }
            if !validate_graph(&s.input).is_empty() || !validate_graph(&s.output).is_empty() {
                stats.sphericity.push(format!("rng {i} step {}: invalid graph", s.index));
            }
        }
    }
    stats
}

fn fuzz_sphericity(stats: &FuzzStats) -> Outcome {
    ensure(stats.sphericity.is_empty(), || format!("{} violations, first: {}", stats.sphericity.len(), stats.sphericity[0]))?;
    Ok(format!(
        "{} decompositions, {} steps, 0 violations ({} draws skipped for lack of an admissible attachment)",
        stats.runs, stats.steps, stats.skipped
    ))
}

fn round_trips() -> Outcome {
    let cases = curated_round_trips();
    let mut passed = 0;
    let mut failed = Vec::new();
    for case in &cases {
        match run_round_trip(case) {
            Ok(r) if r.x.form == case.form && r.isomorphic => passed += 1,
            Ok(r) => failed.push(format!("{} (classified {}, isomorphic {})", case.form, r.x.form, r.isomorphic)),
            Err(e) => failed.push(format!("{}: {e}", case.form)),
        }
    }
    ensure(passed == Form::ALL.len() && failed.is_empty(), || format!("{passed}/12; {}", failed.join(", ")))?;
    // The cut of an attached witness uses the same classification as any
    // other cut; check it also validates.
    for case in &cases {
        let r = run_round_trip(case).unwrap();
        ensure(apply_cut_and_cap(&r.attached, &r.x).is_ok(), || format!("{}", case.form))?;
    }
    Ok(format!("{passed}/12 forms restore an isomorphic seed"))
}

fn termination(stats: &FuzzStats) -> Outcome {
    ensure(stats.ordering.is_empty(), || format!("{} violations, first: {}", stats.ordering.len(), stats.ordering[0]))?;
    Ok(format!("{} traces: exactly |witnesses| steps, teardrops first, remaining count strictly decreasing", stats.runs))
}

fn determinism() -> Outcome {
    let corpus = manifest().join("corpus");
    let mut names: Vec<PathBuf> = fs::read_dir(&corpus)
        .map_err(|e| e.to_string())?
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "orb"))
        .collect();
    names.sort();
    let mut compared = 0;
    for path in &names {
        let stem = path.file_stem().unwrap().to_string_lossy();
        let golden = corpus.join("golden").join(format!("{stem}.trace.orb"));
        if !golden.exists() {
            continue;
        }
        let run = |p: &Path| -> Result<String, String> {
            let mut doc = parse_document(&fs::read_to_string(p).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
            doc.trace = Some(TraceRecord::from(&decompose(&doc.graph, &doc.witnesses).map_err(|e| e.to_string())?));
            Ok(write_document(&doc))
        };
        let (first, second) = (run(path)?, run(path)?);
        let expected = fs::read_to_string(&golden).map_err(|e| e.to_string())?;
        ensure(first == second, || format!("{stem}: two runs differ"))?;
        ensure(first == expected, || format!("{stem}: differs from golden"))?;
        compared += 1;
    }
    ensure(compared >= 8, || format!("only {compared} golden traces"))?;
    Ok(format!("{compared} corpus traces byte-identical across runs and to golden files"))
}

fn rust_sources(dir: &Path, out: &mut Vec<PathBuf>) {
    for entry in fs::read_dir(dir).into_iter().flatten().flatten() {
        let p = entry.path();
        if p.is_dir() {
            rust_sources(&p, out);
        } else if p.extension().is_some_and(|x| x == "rs") {
            out.push(p);
        }
    }
}

fn honesty() -> Outcome {
    let mut files = Vec::new();
    for dir in ["src", "tests", "examples"] {
        rust_sources(&manifest().join(dir), &mut files);
    }
    let this = manifest().join("tests/acceptance.rs");
    let topics = ["isotop", "maximal", "embedded", "embedding"];
    let mut assertions = 0;
    for f in files.iter().filter(|f| **f != this) {
        let text = fs::read_to_string(f).map_err(|e| e.to_string())?;
        for line in text.lines().filter(|l| l.contains("assert")) {
            assertions += 1;
            let lower = line.to_lowercase();
            ensure(!topics.iter().any(|t| lower.contains(t)), || format!("{}: {line}", f.display()))?;
        }
    }
    let readme = fs::read_to_string(manifest().join("../../README.md")).unwrap_or_default().to_lowercase();
    for topic in ["existence", "isotopy", "maximal"] {
        ensure(readme.contains(topic), || format!("README does not mention {topic}"))?;
    }
    ensure(readme.contains("input"), || "README does not call them inputs".into())?;
    let lib = fs::read_to_string(manifest().join("src/lib.rs")).map_err(|e| e.to_string())?;
    ensure(lib.contains("are inputs"), || "crate docs do not call them inputs".into())?;
    Ok(format!("{assertions} assertion lines scanned; existence, isotopy and maximality documented as inputs"))
}

fn main() {
    let started = Instant::now();
    let stats = fuzz();
    let criteria: Vec<Criterion> = vec![
        ("spherical list, weights <= 50", Box::new(spherical_list)),
        ("football Form 2 forced weights", Box::new(football_form2_forced)),
        ("teardrop Form 6 forced weights", Box::new(teardrop_form6_forced)),
        ("teardrop Form 2 document", Box::new(teardrop_form2_document)),
        ("cap sphericity over fuzz", Box::new(|| fuzz_sphericity(&stats))),
        ("round trip per form", Box::new(round_trips)),
        ("termination and phase order", Box::new(|| termination(&stats))),
        ("deterministic traces", Box::new(determinism)),
        ("inputs stay inputs", Box::new(honesty)),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS  {}  {name}: {detail}", i + 1),
            Err(detail) => {
                failures += 1;
                println!("FAIL  {}  {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {}/{} passed in {:.1}s", criteria.len() - failures, criteria.len(), started.elapsed().as_secs_f64());
    if failures > 0 {
        std::process::exit(1);
    }
}
