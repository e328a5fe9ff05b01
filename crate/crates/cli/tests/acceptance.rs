//! Acceptance suite: one `[PASS]`/`[FAIL]` line per criterion, nonzero exit
//! if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::Parser;
use isoperim::analysis::{
    check_symmetry, diff_sequence, hypercube_inequality_check, THEOREM_KINDS,
};
use isoperim::graph::{
    all_graphs, complete, cycle, encode_graph6, hypercube, mix_seed, parse_graph6, GeneratorSpec,
};
use isoperim::solver::{all_profiles, MetricKind, SixProfiles};
use isoperim::{Graph, SolverConfig, Strategy};
use isoperim_cli::{cmd_profile, cmd_sweep, Cli, Command, RunConfig};

const SEED: u64 = 0x15_0be7;
const CATALOG_ORDER: usize = 7;
const RANDOM_REGULAR: usize = 100;
const RANDOM_NONREGULAR: usize = 200;
const RANDOM_OTHER: usize = 40;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Group {
    Regular,
    Nonregular,
    Other,
}

struct Entry {
    label: String,
    group: Group,
    graph: Graph,
    own: SixProfiles,
    complement: SixProfiles,
}

fn strategy(n: usize) -> Strategy {
    if n <= 8 {
        Strategy::Oracle
    } else {
        Strategy::Reduced
    }
}

fn entry(label: String, group: Group, graph: Graph) -> Entry {
    let cfg = SolverConfig::default();
    let s = strategy(graph.n());
    Entry {
        own: all_profiles(&graph, s, &cfg).unwrap(),
        complement: all_profiles(&graph.complement(), s, &cfg).unwrap(),
        label,
        group,
        graph,
    }
}

fn corpus() -> Vec<Entry> {
    let mut out = Vec::new();
    for n in 3..=10 {
        out.push(entry(format!("C{n}"), Group::Regular, cycle(n).unwrap()));
    }
    for n in 2..=8 {
        out.push(entry(format!("K{n}"), Group::Regular, complete(n).unwrap()));
    }
    for d in 1..=3 {
        out.push(entry(
            format!("Q{d}"),
            Group::Regular,
            hypercube(d).unwrap(),
        ));
    }

    let regular_specs: Vec<GeneratorSpec> = (4..=12usize)
        .flat_map(|n| (2..n - 1).map(move |d| (n, d)))
        .filter(|(n, d)| n * d % 2 == 0)
        .map(|(n, d)| GeneratorSpec::ConnectedRegular { n, d })
        .collect();
    for k in 0..RANDOM_REGULAR {
        let spec = regular_specs[k % regular_specs.len()];
        let g = spec.generate(mix_seed(SEED, k as u64)).unwrap();
        out.push(entry(format!("{spec} #{k}"), Group::Regular, g));
    }

    for n in 1..=CATALOG_ORDER {
        for (k, g) in all_graphs(n).unwrap().into_iter().enumerate() {
            let group = match (g.is_connected(), g.is_regular()) {
                (true, false) => Group::Nonregular,
                _ => Group::Other,
            };
            out.push(entry(format!("catalog n={n} #{k}"), group, g));
        }
    }

    let densities = [0.2, 0.35, 0.5, 0.7];
    for k in 0..RANDOM_NONREGULAR {
        let spec = GeneratorSpec::Nonregular {
            n: 5 + k % 8,
            p: densities[(k / 8) % densities.len()],
        };
        let g = spec.generate(mix_seed(SEED ^ 1, k as u64)).unwrap();
        out.push(entry(format!("{spec} #{k}"), Group::Nonregular, g));
    }

    // possibly disconnected, possibly regular
    for k in 0..RANDOM_OTHER {
        let spec = GeneratorSpec::Random {
            n: 2 + k % 11,
            p: densities[k % densities.len()] / 2.0,
        };
        let g = spec.generate(mix_seed(SEED ^ 2, k as u64)).unwrap();
        out.push(entry(format!("{spec} #{k}"), Group::Other, g));
    }
    out
}

type Outcome = Result<String, String>;
type Check<'a> = Box<dyn Fn() -> Outcome + 'a>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn values(six: &SixProfiles, kind: MetricKind) -> &[i64] {
    &six.get(kind).values
}

fn regular_symmetric(corpus: &[Entry]) -> Outcome {
    let mut count = 0;
    for e in corpus.iter().filter(|e| e.group == Group::Regular) {
        ensure(e.graph.is_regular() && e.graph.is_connected(), || {
            format!("{} is not a connected regular graph", e.label)
        })?;
        for kind in THEOREM_KINDS {
            let v = check_symmetry(&diff_sequence(e.own.get(kind)));
            ensure(v.symmetric && v.violations.is_empty(), || {
                format!(
                    "{}: {} violations {:?}",
                    e.label,
                    kind.diff_symbol(),
                    v.violations
                )
            })?;
        }
        count += 1;
    }
    Ok(format!(
        "{count} connected regular graphs, δ σ τ υ all symmetric"
    ))
}

fn nonregular_asymmetric(corpus: &[Entry]) -> Outcome {
    let (mut catalog, mut random) = (0, 0);
    for e in corpus.iter().filter(|e| e.group == Group::Nonregular) {
        ensure(!e.graph.is_regular() && e.graph.is_connected(), || {
            format!("{} is not a connected non-regular graph", e.label)
        })?;
        for kind in THEOREM_KINDS {
            let v = check_symmetry(&diff_sequence(e.own.get(kind)));
            ensure(!v.symmetric, || {
                format!("{}: {} is symmetric", e.label, kind.diff_symbol())
            })?;
        }
        if e.label.starts_with("catalog") {
            catalog += 1;
        } else {
            random += 1;
        }
    }
    // 996 connected graphs on at most 7 vertices, 16 of them regular
    ensure(catalog == 980, || {
        format!("catalog yielded {catalog} connected non-regular graphs")
    })?;
    Ok(format!(
        "{catalog} catalog graphs (n ≤ {CATALOG_ORDER}) and {random} random graphs, none symmetric"
    ))
}

fn cut_sequences_vanish(corpus: &[Entry]) -> Outcome {
    for e in corpus {
        for kind in [MetricKind::MAX_CUT, MetricKind::MIN_CUT] {
            let s = diff_sequence(e.own.get(kind));
            for i in 1..=e.graph.n() {
                ensure(s.pair_sum(i) == 0, || {
                    format!(
                        "{}: {} pair sum {} at i={i}",
                        e.label,
                        kind.diff_symbol(),
                        s.pair_sum(i)
                    )
                })?;
            }
        }
    }
    Ok(format!("{} graphs, θ and φ pair sums all 0", corpus.len()))
}

fn identities(corpus: &[Entry]) -> Outcome {
    use MetricKind as K;
    let mut checks = 0usize;
    for e in corpus {
        let g = &e.graph;
        let (n, m, d) = (g.n(), g.m() as i64, g.min_degree() as i64);
        let delta = values(&e.own, K::DENSEST);
        let sigma = values(&e.own, K::SPARSEST);
        let t = values(&e.own, K::MAX_COVER);
        let upsilon = values(&e.own, K::MIN_COVER);
        let theta = values(&e.own, K::MAX_CUT);
        let phi = values(&e.own, K::MIN_CUT);
        let sigma_bar = values(&e.complement, K::SPARSEST);
        let tau_d = diff_sequence(e.own.get(K::MAX_COVER));
        let sigma_d = diff_sequence(e.own.get(K::SPARSEST));
        let fail = |what: &str, i: usize| format!("{}: {what} fails at i={i}", e.label);
        for i in 0..=n {
            let ii = i as i64;
            ensure(t[i] + sigma[n - i] == m, || fail("T(i)+Σ(n−i)=m", i))?;
            ensure(upsilon[i] + delta[n - i] == m, || fail("Υ(i)+Δ(n−i)=m", i))?;
            ensure(delta[i] == ii * (ii - 1) / 2 - sigma_bar[i], || {
                fail("Δ(i)=C(i,2)−Σ̄(i)", i)
            })?;
            ensure(theta[i] == theta[n - i], || fail("Θ(i)=Θ(n−i)", i))?;
            if g.is_regular() {
                ensure(2 * delta[i] + phi[i] == ii * d, || {
                    fail("2Δ(i)+Φ(i)=i·d", i)
                })?;
                ensure(delta[n - i] == m - ii * d + delta[i], || {
                    fail("Δ(n−i)=m−i·d+Δ(i)", i)
                })?;
                checks += 2;
            }
            checks += 4;
            if i >= 1 {
                ensure(tau_d.pair_sum(i) == sigma_d.pair_sum(i), || {
                    fail("τ pairs = σ pairs", i)
                })?;
                checks += 1;
            }
        }
        if g.is_regular() {
            ensure(2 * m == n as i64 * d, || fail("m = n·d/2", n))?;
            checks += 1;
        }
    }
    Ok(format!(
        "{checks} identity instances on {} graphs",
        corpus.len()
    ))
}

fn boundary_values(corpus: &[Entry]) -> Outcome {
    let mut count = 0;
    for e in corpus.iter().filter(|e| e.graph.n() >= 2) {
        let (n, m, d) = (e.graph.n(), e.graph.m() as i64, e.graph.min_degree() as i64);
        let delta = values(&e.own, MetricKind::DENSEST);
        let dd = diff_sequence(e.own.get(MetricKind::DENSEST));
        ensure(delta[n] == m, || {
            format!("{}: Δ(n) = {} ≠ m", e.label, delta[n])
        })?;
        ensure(delta[n - 1] == m - d, || {
            format!("{}: Δ(n−1) ≠ m − d", e.label)
        })?;
        ensure(dd.at(1) == 0, || format!("{}: δ(1) ≠ 0", e.label))?;
        ensure(dd.at(n) == d, || format!("{}: δ(n) ≠ d", e.label))?;
        count += 1;
    }
    Ok(format!("{count} graphs with n ≥ 2"))
}

fn oracle_equivalence(corpus: &[Entry]) -> Outcome {
    let cfg = SolverConfig::default();
    let mut count = 0;
    for e in corpus.iter().filter(|e| e.graph.n() <= 8) {
        ensure(e.own.strategy == Strategy::Oracle, || {
            format!("{}: not an oracle run", e.label)
        })?;
        for s in [Strategy::BranchBound, Strategy::Reduced] {
            let other =
                all_profiles(&e.graph, s, &cfg).map_err(|err| format!("{}: {err}", e.label))?;
            for kind in MetricKind::ALL {
                ensure(values(&other, kind) == values(&e.own, kind), || {
                    format!(
                        "{}: {s} {} {:?} vs oracle {:?}",
                        e.label,
                        kind.symbol(),
                        values(&other, kind),
                        values(&e.own, kind)
                    )
                })?;
            }
        }
        count += 1;
    }
    ensure(count >= 250, || format!("only {count} graphs with n ≤ 8"))?;
    Ok(format!("{count} graphs with n ≤ 8, branch-and-bound and reduction match the oracle on all six profiles"))
}

/// Minimum cut of an `i`-set in `Q_d`: `i·d − 2·Σ_{j<i} popcount(j)`.
fn harper(d: usize, i: usize) -> i64 {
    let inside: u32 = (0..i as u32).map(u32::count_ones).sum();
    (i * d) as i64 - 2 * inside as i64
}

fn hypercube_bound() -> Outcome {
    let cfg = SolverConfig::default();
    let mut tight = 0;
    let mut q4 = Duration::ZERO;
    for d in 1..=4 {
        let start = Instant::now();
        let report = hypercube_inequality_check(d, &cfg).map_err(|e| e.to_string())?;
        if d == 4 {
            q4 = start.elapsed();
        }
        ensure(report.rows.len() == 1 << d, || {
            format!("Q{d}: wrong row count")
        })?;
        for r in &report.rows {
            ensure(r.phi == harper(d, r.i), || {
                format!(
                    "Q{d}: Φ({}) = {} but the nested-subcube cut is {}",
                    r.i,
                    r.phi,
                    harper(d, r.i)
                )
            })?;
            ensure(r.holds, || {
                format!("Q{d}: Φ({}) = {} < {}", r.i, r.phi, r.bound)
            })?;
            tight += r.tight as usize;
        }
        if d == 3 {
            let r = &report.rows[3];
            ensure(r.tight && r.phi == 4, || {
                "Q3: no tightness at i=4".to_string()
            })?;
        }
    }
    ensure(q4 < Duration::from_secs(600), || format!("Q4 took {q4:?}"))?;
    Ok(format!(
        "d = 1..4, {tight} tight rows, Q4 profile in {:.2?}",
        q4
    ))
}

fn sweep_text(jobs: &str) -> Result<(i32, String), String> {
    let cli = Cli::try_parse_from([
        "isoperim",
        "sweep",
        "--gen",
        "nonregular:9:0.4,connected-regular:10:3,random:7:0.3,hypercube:3",
        "--count",
        "40",
        "--seed",
        "2024",
        "--format",
        "json",
        "--jobs",
        jobs,
    ])
    .map_err(|e| e.to_string())?;
    let Command::Sweep(args) = cli.command else {
        unreachable!()
    };
    let out = cmd_sweep(&args).map_err(|e| e.to_string())?;
    Ok((out.exit, out.text))
}

fn determinism() -> Outcome {
    let (code, first) = sweep_text("1")?;
    ensure(code == 0, || format!("sweep exited {code}"))?;
    let (_, again) = sweep_text("1")?;
    let (_, wide) = sweep_text("4")?;
    ensure(first == again, || "two runs differ".to_string())?;
    ensure(first == wide, || {
        "1 worker and 4 workers differ".to_string()
    })?;
    Ok(format!(
        "{} bytes identical across runs and worker counts",
        first.len()
    ))
}

const K2_CSV: &str = "i,Delta,Sigma,T,Upsilon,Theta,Phi,delta,sigma,tau,upsilon,theta,phi
0,0,0,0,0,0,0,,,,,,
1,0,0,1,1,1,1,0,0,1,1,1,1
2,1,1,1,1,0,0,1,1,0,0,-1,-1
";

const C4_CSV: &str = "i,Delta,Sigma,T,Upsilon,Theta,Phi,delta,sigma,tau,upsilon,theta,phi
0,0,0,0,0,0,0,,,,,,
1,0,0,2,2,2,2,0,0,2,2,2,2
2,1,0,4,3,4,2,1,0,2,1,2,0
3,2,2,4,4,2,2,1,2,0,1,-2,0
4,4,4,4,4,0,0,2,2,0,0,-2,-2
";

fn profile_csv(args: &[&str]) -> Result<String, String> {
    let mut full = vec!["isoperim", "profile", "--format", "csv"];
    full.extend_from_slice(args);
    let cli = Cli::try_parse_from(full).map_err(|e| e.to_string())?;
    let Command::Profile(args) = cli.command else {
        unreachable!()
    };
    let config = RunConfig::from_args(&args).map_err(|e| e.to_string())?;
    Ok(cmd_profile(&config).map_err(|e| e.to_string())?.text)
}

fn format_fidelity() -> Outcome {
    let densities = [0.1, 0.3, 0.5, 0.7, 0.9];
    for k in 0..1000usize {
        let spec = GeneratorSpec::Random {
            n: 1 + k % 16,
            p: densities[(k / 16) % densities.len()],
        };
        let g = spec.generate(mix_seed(SEED ^ 3, k as u64)).unwrap();
        let text = encode_graph6(&g);
        let back = parse_graph6(&text).map_err(|e| format!("{spec} #{k}: {e}"))?;
        ensure(back == g, || format!("{spec} #{k}: decode(encode(G)) ≠ G"))?;
        ensure(encode_graph6(&back) == text, || {
            format!("{spec} #{k}: {text} not stable")
        })?;
    }
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for (args, file, expected) in [
        (&["--g6", "A_"][..], "k2.csv", K2_CSV),
        (&["--gen", "cycle:4"][..], "c4.csv", C4_CSV),
    ] {
        let on_disk =
            std::fs::read_to_string(golden.join(file)).map_err(|e| format!("{file}: {e}"))?;
        ensure(on_disk == expected, || {
            format!("{file} differs from the hand-derived table")
        })?;
        ensure(profile_csv(args)? == on_disk, || {
            format!("csv output differs from {file}")
        })?;
    }
    Ok("1000 random graphs round-trip; K2 and C4 csv match goldens".to_string())
}

fn main() -> ExitCode {
    let start = Instant::now();
    let corpus = corpus();
    println!(
        "corpus: {} graphs built in {:.2?}",
        corpus.len(),
        start.elapsed()
    );

    let criteria: Vec<(&str, Check)> = vec![
        (
            "1 regular graphs have symmetric δ σ τ υ",
            Box::new(|| regular_symmetric(&corpus)),
        ),
        (
            "2 connected non-regular graphs have no symmetric δ σ τ υ",
            Box::new(|| nonregular_asymmetric(&corpus)),
        ),
        (
            "3 θ and φ pair sums are zero",
            Box::new(|| cut_sequences_vanish(&corpus)),
        ),
        (
            "4 identity suite is exact",
            Box::new(|| identities(&corpus)),
        ),
        (
            "5 boundary values of Δ and δ",
            Box::new(|| boundary_values(&corpus)),
        ),
        (
            "6 solvers agree with the exhaustive oracle",
            Box::new(|| oracle_equivalence(&corpus)),
        ),
        (
            "7 hypercube edge-isoperimetric bound",
            Box::new(hypercube_bound),
        ),
        ("8 sweep output is deterministic", Box::new(determinism)),
        (
            "9 graph6 round trip and csv goldens",
            Box::new(format_fidelity),
        ),
    ];

    let mut failed = 0;
    for (name, check) in &criteria {
        let t = Instant::now();
        let outcome =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".to_string()));
        match outcome {
            Ok(detail) => println!("[PASS] {name}: {detail} ({:.2?})", t.elapsed()),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {name}: {detail}");
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
