//! Property suites behind `partword check`.

use clap::ValueEnum;
use partword::analysis::{
    fit, lambda_edge_statistic, parts_histogram, partition_count, zero_count_histogram, Family,
};
use partword::graphs::{build, SearchOptions};
use partword::graycode::{gray2, gray3, verify};
use partword::words::{enumerate, Dim};
use serde::Serialize;

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Tables,
    Graphs,
    Gray,
    Analysis,
    All,
}

#[derive(Debug, Serialize)]
pub struct Summary {
    pub suite: Suite,
    pub max_n: u32,
    pub checks: usize,
    pub passed: bool,
    pub failures: Vec<String>,
}

/// Gray-code instances are capped at this many vertices.
const GRAY_MAX_VERTICES: usize = 5000;

#[derive(Default)]
struct Run {
    checks: usize,
    failures: Vec<String>,
}

impl Run {
    fn check(&mut self, name: String, outcome: partword::Result<bool>) {
        self.checks += 1;
        match outcome {
            Ok(true) => {}
            Ok(false) => self.failures.push(name),
            Err(e) => self.failures.push(format!("{name}: {e}")),
        }
    }
}

fn dim(d: u32) -> Dim {
    Dim::new(d).expect("dimension in range")
}

fn tables(run: &mut Run) {
    let expected: [(u32, &[usize]); 3] = [
        (1, &[1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]),
        (2, &[1, 3, 6, 13, 24, 48, 86, 160, 282, 500]),
        (3, &[1, 4, 10, 26, 59, 140, 307, 684, 1464, 3122]),
    ];
    for (d, counts) in expected {
        for (i, &count) in counts.iter().enumerate() {
            let n = i as u32 + 1;
            run.check(format!("p_{d}({n}) = {count}"), enumerate(dim(d), n).map(|w| w.len() == count));
        }
    }
}

fn graphs(run: &mut Run, max_n: u32) {
    for n in 2..=max_n {
        let outcome = build(dim(1), n, true).map(|g| {
            let g = g.graph();
            g.is_connected() && g.bipartition().is_some() && g.diameter() == Some(n - 1) && g.global_clustering() == 0.0
        });
        run.check(format!("Π(1,{n}) connected, bipartite, diameter n-1, triangle-free"), outcome);
        if n <= 25 {
            let outcome = build(dim(1), n, true)
                .and_then(|g| Ok(lambda_edge_statistic(n)? == g.edge_count() as u64));
            run.check(format!("Π(1,{n}) edge count equals the lambda statistic"), outcome);
        }
        if n >= 4 {
            let outcome = build(dim(1), n, false).map(|g| g.graph().articulation_points().is_empty());
            run.check(format!("Π(1,{n}) without zero has no articulation points"), outcome);
        }
    }
    for d in 2..=3 {
        for n in 2..=max_n.min(8) {
            let outcome = build(dim(d), n, true).map(|g| {
                g.graph().is_connected()
                    && g.graph().diameter().is_some_and(|diameter| diameter <= 2 * n - 3)
                    && g.graph().global_clustering() > 0.0
                    && g.is_proper_coloring(&g.proper_coloring())
            });
            run.check(format!("Π({d},{n}) connected, diameter <= 2n-3, clustered, properly coloured"), outcome);
        }
    }
}

fn gray(run: &mut Run, max_n: u32) {
    for n in 4..=max_n.min(10) {
        let outcome = gray2(n, &SearchOptions::default())
            .and_then(|code| verify(&code, &build(dim(1), n, false)?));
        run.check(format!("2-Gray code for n = {n}"), outcome);
    }
    for d in 1..=3 {
        for n in 2..=max_n {
            if enumerate(dim(d), n).map_or(true, |w| w.len() > GRAY_MAX_VERTICES) {
                break;
            }
            let outcome = gray3(dim(d), n).and_then(|code| verify(&code, &build(dim(d), n, true)?));
            run.check(format!("3-Gray code for d = {d}, n = {n}"), outcome);
        }
    }
}

fn analysis(run: &mut Run, max_n: u32) {
    for n in 1..=max_n {
        let outcome = parts_histogram(n).and_then(|parts| {
            let zeros = zero_count_histogram(&enumerate(dim(1), n)?);
            Ok(parts.total() == partition_count(n)? && zeros.shifted(1) == parts)
        });
        run.check(format!("parts histogram for n = {n}"), outcome);
    }
    let e = std::f64::consts::E;
    let outcome = fit(&[1.0, e, e * e], Family::Lognormal)
        .map(|f| (f.mu - 1.0).abs() <= 1e-12 && (f.sigma - (2.0f64 / 3.0).sqrt()).abs() <= 1e-12);
    run.check("lognormal fit of {1, e, e^2}".into(), outcome);
}

pub fn run(suite: Suite, max_n: u32) -> Summary {
    let mut run = Run::default();
    if matches!(suite, Suite::Tables | Suite::All) {
        tables(&mut run);
    }
    if matches!(suite, Suite::Graphs | Suite::All) {
        graphs(&mut run, max_n);
    }
    if matches!(suite, Suite::Gray | Suite::All) {
        gray(&mut run, max_n);
    }
    if matches!(suite, Suite::Analysis | Suite::All) {
        analysis(&mut run, max_n);
    }
    Summary { suite, max_n, checks: run.checks, passed: run.failures.is_empty(), failures: run.failures }
}
