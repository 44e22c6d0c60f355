//! Acceptance suite. Runs every criterion, prints one line each and exits
//! non-zero if any of them failed.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use partword::analysis::{
    compare, degree_histogram, fit, lambda_edge_statistic, parity_imbalance, parts_histogram,
    partition_count, zero_count_histogram, Family,
};
use partword::graphs::{build, Hamiltonicity, NonHamiltonian, SearchOptions};
use partword::graycode::{gray2, gray3, verify};
use partword::oracle::{naive_ddim_partitions, naive_edges, naive_partitions, NAIVE_EDGES_MAX_VERTICES};
use partword::words::{enumerate, from_partition, symbol_totals, DDimPartition, Dim};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn d(v: u32) -> Dim {
    Dim::new(v).unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(started: Instant, limit: Duration) -> Result<(), String> {
    let elapsed = started.elapsed();
    ensure(elapsed < limit, || format!("took {elapsed:?}, limit {limit:?}"))
}

/// The largest n with p_d(n) <= 5000, per dimension.
fn gray3_sizes() -> Vec<(u32, u32)> {
    let mut sizes = Vec::new();
    for dim in 1..=3 {
        for n in 2.. {
            if enumerate(d(dim), n).unwrap().len() > 5000 {
                break;
            }
            sizes.push((dim, n));
        }
    }
    sizes
}

fn tables() -> Outcome {
    let started = Instant::now();
    let expected: [(u32, &[usize]); 3] = [
        (1, &[1, 2, 3, 5, 7, 11]),
        (2, &[1, 3, 6, 13, 24]),
        (3, &[1, 4, 10, 26, 59, 140]),
    ];
    for (dim, counts) in expected {
        for (i, &count) in counts.iter().enumerate() {
            let n = i as u32 + 1;
            let got = enumerate(d(dim), n).map_err(|e| e.to_string())?.len();
            ensure(got == count, || format!("p_{dim}({n}) = {got}, expected {count}"))?;
        }
    }
    within(started, Duration::from_secs(1))?;
    Ok(format!("all table entries equal ({:?})", started.elapsed()))
}

fn p37_degree_one() -> Outcome {
    let started = Instant::now();
    let graph = build(d(1), 37, true).map_err(|e| e.to_string())?;
    ensure(graph.vertex_count() == 21637, || format!("{} vertices", graph.vertex_count()))?;
    let ones: Vec<u32> = (0..graph.vertex_count() as u32).filter(|&v| graph.graph().degree(v) == 1).collect();
    ensure(degree_histogram(&graph).get(1) == 1, || format!("{} vertices of degree 1", ones.len()))?;
    let label = graph.label(ones[0]);
    ensure(label == "0".repeat(36), || format!("degree-1 vertex is {label}"))?;
    within(started, Duration::from_secs(60))?;
    Ok(format!("21637 vertices, sole degree-1 vertex is 0^36 ({:?})", started.elapsed()))
}

fn diameters() -> Outcome {
    let started = Instant::now();
    for n in 2..=16 {
        let diameter = build(d(1), n, true).map_err(|e| e.to_string())?.graph().diameter();
        ensure(diameter == Some(n - 1), || format!("n = {n}: diameter {diameter:?}"))?;
    }
    within(started, Duration::from_secs(60))?;
    Ok(format!("diameter n-1 for n in 2..=16 ({:?})", started.elapsed()))
}

fn two_connected() -> Outcome {
    for n in 4..=14 {
        let graph = build(d(1), n, false).map_err(|e| e.to_string())?;
        let cut = graph.graph().articulation_points();
        ensure(cut.is_empty(), || format!("n = {n}: cut vertex {}", graph.label(cut[0])))?;
    }
    let mut wrong = Vec::new();
    for m in 0..=10usize {
        let word = format!("101{}", "0".repeat(m));
        let graph = build(d(1), word.len() as u32 + 1, false).map_err(|e| e.to_string())?;
        let digits: Vec<u8> = word.bytes().map(|b| b - b'0').collect();
        let v = graph.vertex_of(&digits).ok_or_else(|| format!("{word} is not a vertex"))?;
        let degree = graph.graph().degree(v);
        if degree != 2 {
            wrong.push(format!("m={m}: {degree}"));
        }
    }
    ensure(wrong.is_empty(), || {
        format!("no articulation points for n in 4..=14, but deg(1010^m) != 2 at {}", wrong.join(", "))
    })?;
    Ok("no articulation points for n in 4..=14; deg(1010^m) = 2 for m <= 10".into())
}

fn non_hamiltonian() -> Outcome {
    for n in 8..=10 {
        let graph = build(d(1), n, false).map_err(|e| e.to_string())?;
        let answer = graph.is_hamiltonian(&SearchOptions::default());
        ensure(
            matches!(answer, Hamiltonicity::No(NonHamiltonian::BipartiteImbalance { .. })),
            || format!("n = {n}: {answer:?}"),
        )?;
    }
    for n in 8..=16 {
        let imbalance = parity_imbalance(n).map_err(|e| e.to_string())?;
        ensure(imbalance > 1, || format!("parity_imbalance({n}) = {imbalance}"))?;
    }
    Ok("bipartite-imbalance witness for n = 8, 9, 10; imbalance > 1 for n in 8..=16".into())
}

fn two_gray() -> Outcome {
    let mut slowest = Duration::ZERO;
    for n in 4..=10 {
        let started = Instant::now();
        let code = gray2(n, &SearchOptions::default()).map_err(|e| format!("n = {n}: {e}"))?;
        let graph = build(d(1), n, false).map_err(|e| e.to_string())?;
        ensure(verify(&code, &graph).map_err(|e| e.to_string())?, || format!("n = {n}: does not verify"))?;
        within(started, Duration::from_secs(10)).map_err(|e| format!("n = {n}: {e}"))?;
        slowest = slowest.max(started.elapsed());
    }
    Ok(format!("verified for n in 4..=10 (slowest {slowest:?})"))
}

fn construct_gray3(dim: u32, n: u32) -> Result<(usize, Duration), String> {
    let mut best = Duration::MAX;
    let mut count = 0;
    for _ in 0..3 {
        let started = Instant::now();
        let code = gray3(d(dim), n).map_err(|e| e.to_string())?;
        best = best.min(started.elapsed());
        count = code.sequence().len();
    }
    Ok((count, best))
}

fn three_gray() -> Outcome {
    let sizes = gray3_sizes();
    for &(dim, n) in &sizes {
        let code = gray3(d(dim), n).map_err(|e| e.to_string())?;
        let graph = build(d(dim), n, true).map_err(|e| e.to_string())?;
        ensure(verify(&code, &graph).map_err(|e| e.to_string())?, || format!("d = {dim}, n = {n}: does not verify"))?;
    }
    // per-vertex cost on the largest instance against one of about a tenth the size
    let mut ratios = Vec::new();
    for dim in 1..=3 {
        let ns: Vec<u32> = sizes.iter().filter(|s| s.0 == dim).map(|s| s.1).collect();
        let large = *ns.last().unwrap();
        let (big_count, big_time) = construct_gray3(dim, large)?;
        let small = ns
            .iter()
            .copied()
            .find(|&n| enumerate(d(dim), n).unwrap().len() * 10 >= big_count)
            .unwrap();
        let (small_count, small_time) = construct_gray3(dim, small)?;
        let per_big = big_time.as_secs_f64() / big_count as f64;
        let per_small = small_time.as_secs_f64() / small_count as f64;
        let ratio = per_big / per_small;
        ensure(ratio < 4.0, || {
            format!("d = {dim}: per-vertex time grew {ratio:.2}x from {small_count} to {big_count} vertices")
        })?;
        ratios.push(format!("d{dim} {ratio:.2}x"));
    }
    Ok(format!("{} instances verified; per-vertex time ratio {}", sizes.len(), ratios.join(", ")))
}

fn higher_dimensions() -> Outcome {
    let five = build(d(2), 5, true).map_err(|e| e.to_string())?;
    ensure(five.graph().is_biconnected(), || "Π(2,5) is not biconnected".into())?;
    let six = build(d(2), 6, true).map_err(|e| e.to_string())?;
    ensure(!six.graph().is_biconnected(), || "Π(2,6) is biconnected".into())?;
    let v = six.vertex_of(&[2, 1, 0, 2, 1]).ok_or("21021 missing")?;
    ensure(six.graph().degree(v) == 1, || format!("deg(21021) = {}", six.graph().degree(v)))?;
    for dim in 2..=3 {
        for n in 2..=8 {
            let graph = build(d(dim), n, true).map_err(|e| e.to_string())?;
            ensure(graph.graph().is_connected(), || format!("Π({dim},{n}) disconnected"))?;
            let diameter = graph.graph().diameter().unwrap_or(0);
            ensure(n < 2 || diameter <= (2 * n).saturating_sub(3), || {
                format!("Π({dim},{n}) diameter {diameter} > {}", 2 * n - 3)
            })?;
        }
    }
    Ok("Π(2,5) biconnected, 21021 pendant in Π(2,6), diameter <= 2n-3 for d in 2..=3, n <= 8".into())
}

fn edge_identity() -> Outcome {
    ensure(lambda_edge_statistic(4) == Ok(5), || "lambda(4) != 5".into())?;
    ensure(lambda_edge_statistic(5) == Ok(8), || "lambda(5) != 8".into())?;
    for n in 2..=37 {
        let graph = build(d(1), n, true).map_err(|e| e.to_string())?;
        let edges = graph.edge_count() as u64;
        if n <= 25 {
            let lambda = lambda_edge_statistic(n).map_err(|e| e.to_string())?;
            ensure(lambda == edges, || format!("n = {n}: lambda {lambda}, edges {edges}"))?;
        }
        let p = partition_count(n).map_err(|e| e.to_string())? as f64;
        ensure(edges as f64 <= p * p.log2(), || format!("n = {n}: {edges} edges > p log2 p"))?;
    }
    Ok("lambda = edge count for n in 2..=25; edges <= p log2 p for n <= 37".into())
}

fn symbol_identity() -> Outcome {
    for (dim, n) in gray3_sizes() {
        let totals = symbol_totals(d(dim), n).map_err(|e| e.to_string())?;
        let sum: u64 = totals.values().sum();
        let count = enumerate(d(dim), n).map_err(|e| e.to_string())?.len() as u64;
        ensure(sum == (n as u64 - 1) * count, || format!("d = {dim}, n = {n}: {sum} symbols"))?;
    }
    for n in 1..=40 {
        let parts = parts_histogram(n).map_err(|e| e.to_string())?;
        let zeros = zero_count_histogram(&enumerate(d(1), n).map_err(|e| e.to_string())?);
        ensure(zeros.shifted(1) == parts, || format!("n = {n}: zero and part histograms differ"))?;
    }
    Ok("symbol totals sum to (n-1) p_d(n); zero histogram shifted by 1 equals parts for n <= 40".into())
}

fn coloring_clustering() -> Outcome {
    let mut graphs = 0;
    let cases = (2..=16).map(|n| (1, n)).chain((2..=3).flat_map(|dim| (2..=8).map(move |n| (dim, n))));
    for (dim, n) in cases {
        for include_zero in [true, false] {
            let graph = build(d(dim), n, include_zero).map_err(|e| e.to_string())?;
            ensure(graph.is_proper_coloring(&graph.proper_coloring()), || {
                format!("Π({dim},{n}) colouring is not proper")
            })?;
            graphs += 1;
        }
        let clustering = build(d(dim), n, true).map_err(|e| e.to_string())?.graph().global_clustering();
        if dim == 1 {
            ensure(clustering == 0.0, || format!("Π(1,{n}) clustering {clustering}"))?;
        } else {
            ensure(clustering > 0.0, || format!("Π({dim},{n}) clustering {clustering}"))?;
        }
    }
    Ok(format!("proper on {graphs} graphs; clustering 0 for d = 1, positive for d = 2, 3"))
}

fn fitting() -> Outcome {
    let e = std::f64::consts::E;
    let exact = fit(&[1.0, e, e * e], Family::Lognormal).map_err(|e| e.to_string())?;
    let sigma = (2.0f64 / 3.0).sqrt();
    ensure((exact.mu - 1.0).abs() <= 1e-12 && (exact.sigma - sigma).abs() <= 1e-12, || {
        format!("mu = {}, sigma = {}", exact.mu, exact.sigma)
    })?;

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut worst = 0.0f64;
    for _ in 0..200 {
        let len = rng.gen_range(2..100);
        let samples: Vec<f64> = (0..len).map(|_| rng.gen_range(0.001..1000.0)).collect();
        let scale: f64 = rng.gen_range(0.001..1000.0);
        let base = fit(&samples, Family::Lognormal).map_err(|e| e.to_string())?;
        let scaled: Vec<f64> = samples.iter().map(|x| x * scale).collect();
        let moved = fit(&scaled, Family::Lognormal).map_err(|e| e.to_string())?;
        let drift = (moved.mu - base.mu - scale.ln())
            .abs()
            .max((moved.sigma - base.sigma).abs())
            .max((moved.ks - base.ks).abs())
            .max(((moved.log_likelihood + len as f64 * scale.ln()) - base.log_likelihood).abs() / len as f64);
        worst = worst.max(drift);
    }
    ensure(worst < 1e-9, || format!("scale equivariance drift {worst:e}"))?;

    let graph = build(d(1), 37, true).map_err(|e| e.to_string())?;
    let degrees = degree_histogram(&graph).samples();
    let parts = parts_histogram(37).map_err(|e| e.to_string())?.samples();
    let degree_report = compare(&degrees).map_err(|e| e.to_string())?;
    let parts_report = compare(&parts).map_err(|e| e.to_string())?;
    ensure(degree_report == compare(&degrees).unwrap() && parts_report == compare(&parts).unwrap(), || {
        "n = 37 reports differ between runs".into()
    })?;
    let show = |r: &[partword::analysis::DistributionFit]| {
        r.iter()
            .map(|f| format!("{:?} ll={:.2} ks={:.4}", f.family, f.log_likelihood, f.ks))
            .collect::<Vec<_>>()
            .join(" > ")
    };
    println!("    n=37 degrees: {}", show(&degree_report));
    println!("    n=37 parts:   {}", show(&parts_report));
    Ok(format!("exact fit on {{1, e, e^2}}; scale drift {worst:.1e}; n=37 reports deterministic"))
}

fn oracles() -> Outcome {
    let mut checked = 0;
    let mut cases: Vec<(u32, u32)> = (1..=7).flat_map(|n| [(1, n), (2, n), (3, n)]).collect();
    cases.extend((8..=16).map(|n| (1, n)));
    cases.extend([(2, 8), (2, 9), (2, 10), (3, 8)]);
    for (dim, n) in cases {
        let graph = build(d(dim), n, true).map_err(|e| e.to_string())?;
        if graph.vertex_count() > NAIVE_EDGES_MAX_VERTICES {
            continue;
        }
        let fast: BTreeSet<(Vec<u8>, Vec<u8>)> = graph
            .graph()
            .edges()
            .map(|(u, v)| (graph.word(u).to_vec(), graph.word(v).to_vec()))
            .collect();
        ensure(fast == naive_edges(d(dim), n).map_err(|e| e.to_string())?, || {
            format!("Π({dim},{n}) edges differ from all-pairs")
        })?;
        checked += 1;
    }

    let image = |partitions: Vec<DDimPartition>| -> Vec<Vec<u8>> {
        let mut words: Vec<Vec<u8>> = partitions.iter().map(|p| from_partition(p).symbols().to_vec()).collect();
        words.sort();
        words
    };
    for n in 1..=20 {
        let ordinary = naive_partitions(n).iter().map(|p| DDimPartition::ordinary(p).unwrap()).collect();
        let words: Vec<Vec<u8>> = enumerate(d(1), n).unwrap().iter().map(<[u8]>::to_vec).collect();
        ensure(words == image(ordinary), || format!("d = 1, n = {n}: word set differs"))?;
    }
    for (dim, max_n) in [(2, 8), (3, 7)] {
        for n in 1..=max_n {
            let naive = naive_ddim_partitions(d(dim), n).map_err(|e| e.to_string())?;
            let words: Vec<Vec<u8>> = enumerate(d(dim), n).unwrap().iter().map(<[u8]>::to_vec).collect();
            ensure(words == image(naive), || format!("d = {dim}, n = {n}: word set differs"))?;
        }
    }
    Ok(format!("edges agree on {checked} graphs; word sets agree (d1 n<=20, d2 n<=8, d3 n<=7)"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        ("enumeration tables", tables),
        ("p(37) and the degree-1 vertex", p37_degree_one),
        ("diameter of Π(1,n)", diameters),
        ("2-connectivity without zero", two_connected),
        ("non-Hamiltonicity", non_hamiltonian),
        ("2-Gray codes", two_gray),
        ("3-Gray codes", three_gray),
        ("higher-dimensional graphs", higher_dimensions),
        ("edge-count identity", edge_identity),
        ("symbol identities", symbol_identity),
        ("colouring and clustering", coloring_clustering),
        ("fitting pipeline", fitting),
        ("oracle equivalence", oracles),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
