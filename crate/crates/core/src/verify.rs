//! The reproducibility suite: twelve experiments, each a list of exact
//! checks plus a wall-clock limit.

use std::fmt;
use std::time::{Duration, Instant};

use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::algebra::{self, NormalForm};
use crate::catalog::{self, CatalogEntry, Requirements};
use crate::error::{Error, Result};
use crate::growth::{self, SigmaTable};
use crate::oracle;
use crate::sync;
use crate::transducer::Transducer;
use crate::word::PeriodicWord;

/// SHA-256 of a machine's canonical text, lowercase hex.
pub fn digest(t: &Transducer) -> String {
    format!("{:x}", Sha256::digest(t.to_tdx().as_bytes()))
}

#[derive(Clone, Debug, Serialize)]
pub struct InputRecord {
    pub name: String,
    /// Present for machine inputs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sha256: Option<String>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub value: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub value: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExperimentReport {
    pub id: usize,
    pub name: String,
    pub seed: u64,
    pub inputs: Vec<InputRecord>,
    pub checks: Vec<Check>,
    pub duration_ms: f64,
    pub time_limit_ms: u64,
    pub within_time: bool,
    pub passed: bool,
}

impl fmt::Display for ExperimentReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {:>2} {:<26} {:>9.3} s (limit {} s)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.duration_ms / 1000.0,
            self.time_limit_ms / 1000
        )?;
        for c in self.checks.iter().filter(|c| !c.passed) {
            write!(f, "\n        failed {}: {}", c.name, c.value)?;
        }
        if !self.within_time {
            write!(f, "\n        over the time limit")?;
        }
        Ok(())
    }
}

/// Collects inputs and checks while an experiment runs.
#[derive(Default)]
pub struct Context {
    seed: u64,
    inputs: Vec<InputRecord>,
    checks: Vec<Check>,
}

impl Context {
    fn machine(&mut self, name: &str, t: &Transducer) {
        self.inputs.push(InputRecord {
            name: name.to_string(),
            sha256: Some(digest(t)),
            value: Value::Null,
        });
    }

    fn param(&mut self, name: &str, value: Value) {
        self.inputs.push(InputRecord {
            name: name.to_string(),
            sha256: None,
            value,
        });
    }

    fn check(&mut self, name: impl Into<String>, passed: bool, value: Value) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            value,
        });
    }

    fn fail(&mut self, name: &str, err: &Error) {
        self.check(name, false, json!({ "error": err.to_string() }));
    }
}

/// Counts cases for one aggregated check, keeping the first failure.
struct Tally {
    name: &'static str,
    cases: usize,
    failures: usize,
    first_failure: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally {
            name,
            cases: 0,
            failures: 0,
            first_failure: None,
        }
    }

    fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(detail());
            }
        }
    }

    fn finish(self, ctx: &mut Context) {
        let mut value = json!({ "cases": self.cases, "failures": self.failures });
        if let Some(d) = self.first_failure {
            value["first_failure"] = json!(d);
        }
        ctx.check(self.name, self.failures == 0 && self.cases > 0, value);
    }
}

pub struct Experiment {
    pub id: usize,
    pub name: &'static str,
    pub time_limit: Duration,
    run: fn(&mut Context) -> Result<()>,
}

impl Experiment {
    pub fn run(&self, seed: u64) -> ExperimentReport {
        let mut ctx = Context {
            seed,
            ..Context::default()
        };
        let start = Instant::now();
        if let Err(e) = (self.run)(&mut ctx) {
            ctx.fail("experiment", &e);
        }
        let elapsed = start.elapsed();
        let within_time = elapsed <= self.time_limit;
        let passed = within_time && !ctx.checks.is_empty() && ctx.checks.iter().all(|c| c.passed);
        ExperimentReport {
            id: self.id,
            name: self.name.to_string(),
            seed,
            inputs: ctx.inputs,
            checks: ctx.checks,
            duration_ms: elapsed.as_secs_f64() * 1000.0,
            time_limit_ms: self.time_limit.as_millis() as u64,
            within_time,
            passed,
        }
    }
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

pub const EXPERIMENTS: [Experiment; 12] = [
    Experiment { id: 1, name: "shift-growth", time_limit: secs(30), run: shift_growth },
    Experiment { id: 2, name: "h3-exponential-bound", time_limit: secs(120), run: h3_bound },
    Experiment { id: 3, name: "sync-levels-add", time_limit: secs(10), run: sync_levels_add },
    Experiment { id: 4, name: "collapsing-vs-brute-force", time_limit: secs(120), run: collapsing },
    Experiment { id: 5, name: "minimization-oracle", time_limit: secs(60), run: minimization },
    Experiment { id: 6, name: "dummy-closed-form", time_limit: secs(60), run: dummy_closed_form },
    Experiment { id: 7, name: "sigma-identities", time_limit: secs(1), run: sigma_identities },
    Experiment { id: 8, name: "prefix-realizability", time_limit: secs(60), run: prefix_realizability },
    Experiment { id: 9, name: "core-dist", time_limit: secs(60), run: core_dist },
    Experiment { id: 10, name: "level-drop", time_limit: secs(10), run: level_drop },
    Experiment { id: 11, name: "homomorphism-laws", time_limit: secs(60), run: homomorphism_laws },
    Experiment { id: 12, name: "fixed-letter", time_limit: secs(60), run: fixed_letter },
];

/// Experiments selected by `all`, an id, or a name.
pub fn select(suite: &str) -> Result<Vec<&'static Experiment>> {
    if suite == "all" {
        return Ok(EXPERIMENTS.iter().collect());
    }
    EXPERIMENTS
        .iter()
        .find(|e| e.name == suite || suite.parse::<usize>().ok() == Some(e.id))
        .map(|e| vec![e])
        .ok_or_else(|| Error::UnknownName(suite.to_string()))
}

pub fn run_suite(suite: &str, seed: u64) -> Result<Vec<ExperimentReport>> {
    Ok(select(suite)?.into_iter().map(|e| e.run(seed)).collect())
}

/// Builtin entries plus the family for `i ≤ 3`.
fn catalog_machines() -> Vec<CatalogEntry> {
    let mut entries = catalog::all();
    entries.extend((1..=3).map(|i| catalog::bisync_family(i).expect("family verifies")));
    entries
}

/// Ordered pairs of synchronizing catalog machines over the same alphabet.
fn sync_pairs(entries: &[CatalogEntry]) -> Vec<(&CatalogEntry, &CatalogEntry)> {
    let sync: Vec<&CatalogEntry> = entries.iter().filter(|e| e.expected.sync_level.is_some()).collect();
    let mut pairs = Vec::new();
    for a in &sync {
        for b in &sync {
            if a.machine.alphabet_size() == b.machine.alphabet_size() {
                pairs.push((*a, *b));
            }
        }
    }
    pairs
}

fn record_catalog(ctx: &mut Context, entries: &[CatalogEntry]) {
    for e in entries {
        ctx.machine(&e.name, &e.machine);
    }
}

fn shift_growth(ctx: &mut Context) -> Result<()> {
    let shift = catalog::builtin("shift2")?.machine;
    ctx.machine("shift2", &shift);
    ctx.param("max_power", json!(8));
    let series = growth::growth_series(&shift, 8)?;
    let sizes: Vec<usize> = series.records.iter().map(|r| r.min_core_size).collect();
    let expected: Vec<usize> = (1..=8).map(|m| 1 << m).collect();
    ctx.check("min_core_size = 2^m", sizes == expected, json!({ "sizes": sizes }));
    Ok(())
}

fn h3_bound(ctx: &mut Context) -> Result<()> {
    let g = catalog::builtin("g_h3")?.machine;
    ctx.machine("g_h3", &g);
    ctx.param("max_power", json!(10));
    let series = growth::growth_series(&g, 10)?;
    let sizes: Vec<usize> = series.records.iter().map(|r| r.min_core_size).collect();
    let exp_ok = series.records.iter().all(|r| r.min_core_size >= 1 << (r.m / 2));
    let lin_ok = series.records.iter().all(|r| r.min_core_size >= r.m);
    ctx.check("min_core_size >= 2^floor(m/2)", exp_ok, json!({ "sizes": sizes }));
    ctx.check("min_core_size >= m", lin_ok, json!({ "sizes": sizes }));
    let report = growth::verify_lower_bound(&g, g.state("b")?, 10)?;
    let reachable: Vec<usize> = report.rows.iter().map(|r| r.reachable).collect();
    ctx.check(
        "states reachable from b^m >= 2^floor(m/2)",
        report.all_hold(),
        json!({ "reachable": reachable, "gap_vs_m_plus_1": report.rows.iter().map(|r| r.gap).collect::<Vec<_>>() }),
    );
    Ok(())
}

fn sync_levels_add(ctx: &mut Context) -> Result<()> {
    let entries = catalog_machines();
    record_catalog(ctx, &entries);
    let mut tally = Tally::new("sync_level(A*B) <= level(A) + level(B)");
    for (a, b) in sync_pairs(&entries) {
        let (la, lb) = (a.expected.sync_level.unwrap(), b.expected.sync_level.unwrap());
        let level = sync::sync_level(&algebra::product(&a.machine, &b.machine)?);
        tally.record(level.is_some_and(|l| l <= la + lb), || {
            format!("{} * {}: {level:?} > {la} + {lb}", a.name, b.name)
        });
    }
    tally.finish(ctx);
    Ok(())
}

fn collapsing(ctx: &mut Context) -> Result<()> {
    const MACHINES: u64 = 600;
    ctx.param("random_machines", json!({ "count": MACHINES, "states": "1..=4", "alphabet": 2, "seeds": [ctx.seed, ctx.seed + MACHINES - 1] }));
    let entries = catalog_machines();
    record_catalog(ctx, &entries);
    let mut random = Tally::new("random machines agree");
    let mut synchronizing = 0usize;
    for s in 0..MACHINES {
        let states = 1 + (s % 4) as usize;
        let t = catalog::random_transducer(2, states, ctx.seed + s, Requirements::default())?;
        let fast = sync::sync_level(&t);
        let slow = oracle::sync_level(&t, t.num_states());
        synchronizing += usize::from(fast.is_some());
        random.record(fast == slow, || format!("seed {}: collapsing {fast:?}, brute force {slow:?}", ctx.seed + s));
    }
    random.finish(ctx);
    ctx.check("synchronizing among random", true, json!(synchronizing));
    let mut cat = Tally::new("catalog machines agree");
    for e in &entries {
        let fast = sync::sync_level(&e.machine);
        let slow = oracle::sync_level(&e.machine, e.machine.num_states());
        cat.record(fast == slow, || format!("{}: collapsing {fast:?}, brute force {slow:?}", e.name));
    }
    cat.finish(ctx);
    Ok(())
}

fn minimization(ctx: &mut Context) -> Result<()> {
    const MACHINES: u64 = 200;
    ctx.param("random_machines", json!({ "count": MACHINES, "states": "1..=5", "alphabet": "2..=3", "seeds": [ctx.seed, ctx.seed + MACHINES - 1] }));
    let machines: Vec<Transducer> = (0..MACHINES)
        .map(|s| {
            let states = 1 + (s % 5) as usize;
            let n = 2 + ((s / 5) % 2) as usize;
            catalog::random_transducer(n, states, ctx.seed + s, Requirements::default())
        })
        .collect::<Result<_>>()?;
    let mut within = Tally::new("omega classes match behaviour (same machine)");
    let mut across = Tally::new("omega_equivalent matches behaviour (machine pairs)");
    for (idx, t) in machines.iter().enumerate() {
        let classes = algebra::omega_classes(t);
        let q = t.num_states();
        for p1 in 0..q {
            for p2 in 0..q {
                let fast = classes[p1] == classes[p2];
                let slow = oracle::same_behavior(t, p1, t, p2, q * q);
                within.record(fast == slow, || format!("machine {idx}, states {p1} {p2}"));
            }
        }
        // Pair with the next machine over the same alphabet.
        if let Some(u) = machines[idx + 1..].iter().find(|u| u.alphabet_size() == t.alphabet_size()) {
            for p1 in 0..q {
                for p2 in 0..u.num_states() {
                    let fast = algebra::omega_equivalent(t, p1, u, p2)?;
                    let slow = oracle::same_behavior(t, p1, u, p2, q * u.num_states());
                    across.record(fast == slow, || format!("machine {idx} state {p1} vs next state {p2}"));
                }
            }
        }
    }
    within.finish(ctx);
    across.finish(ctx);
    Ok(())
}

fn dummy_closed_form(ctx: &mut Context) -> Result<()> {
    ctx.machine("dummy", &growth::dummy_transducer());
    ctx.param("max_length", json!(10));
    ctx.param("max_k", json!(12));
    let mut tally = Tally::new("closed form = simulation");
    let mut table = SigmaTable::new();
    for len in 0..=10usize {
        for code in 0..1usize << len {
            let x: Vec<u8> = (0..len).map(|b| ((code >> (len - 1 - b)) & 1) as u8).collect();
            for k in 1..=12 {
                let sim = growth::dummy_active_state(&x, k);
                let closed = growth::dummy_closed_form_with(&mut table, &x, k);
                tally.record(sim == closed, || format!("x={x:?}, k={k}"));
            }
        }
    }
    tally.finish(ctx);
    Ok(())
}

fn sigma_identities(ctx: &mut Context) -> Result<()> {
    ctx.param("range", json!({ "i": "1..=10", "j": "0..=10" }));
    let mut table = SigmaTable::new();
    let mut recurrence = Tally::new("sigma(i,j) = sum_{k<=j} sigma(i-1,k)");
    let mut binomial = Tally::new("sigma(i,j) = C(j+i, i+1)");
    let mut nested = Tally::new("sigma matches nested sums");
    for i in 1..=10u32 {
        for j in 0..=10i64 {
            let v = table.get(i, j);
            let sum = (1..=j).map(|k| table.get(i - 1, k)).sum();
            recurrence.record(v == sum, || format!("({i},{j})"));
            binomial.record(v == oracle::sigma_binomial(i, j), || format!("({i},{j})"));
            nested.record(v == oracle::sigma_nested(i, j).into(), || format!("({i},{j})"));
        }
    }
    recurrence.finish(ctx);
    binomial.finish(ctx);
    nested.finish(ctx);
    Ok(())
}

fn prefix_realizability(ctx: &mut Context) -> Result<()> {
    ctx.param("max_prefix", json!(5));
    let mut tally = Tally::new("solver output realizes y");
    for j in 1..=5usize {
        for code in 0..1usize << j {
            let y: Vec<u8> = (0..j).map(|b| ((code >> (j - 1 - b)) & 1) as u8).collect();
            let x = growth::solve_exponent_prefix(&y)?;
            // Check with extra trailing components as well.
            let state = growth::dummy_active_state(&x, j + 2);
            let ok = x.len() == 2 * j - 1
                && y.iter()
                    .zip(&state)
                    .all(|(&b, s)| *s == growth::DummyState::sigma(0, b));
            tally.record(ok, || format!("y={y:?}, x={x:?}"));
        }
    }
    tally.finish(ctx);
    Ok(())
}

fn core_dist(ctx: &mut Context) -> Result<()> {
    let entries = catalog_machines();
    record_catalog(ctx, &entries);
    let mut pairs = Tally::new("CoreDist(A*B) <= level(B)");
    for (a, b) in sync_pairs(&entries) {
        let lb = b.expected.sync_level.unwrap();
        let d = sync::core_dist(&algebra::product(&a.machine, &b.machine)?)?;
        pairs.record(d <= lb, || format!("{} * {}: {d} > {lb}", a.name, b.name));
    }
    pairs.finish(ctx);

    let g = catalog::builtin("g_h3")?.machine;
    ctx.param("g_h3_max_power", json!(8));
    let series = growth::growth_series(&g, 8)?;
    let dists: Vec<usize> = series.records.iter().map(|r| r.core_dist).collect();
    let ok = series.records.iter().all(|r| r.core_dist <= r.m.div_ceil(2));
    ctx.check("g_h3 incremental CoreDist <= ceil(m/2)", ok, json!({ "core_dist": dists }));

    let mut raw_dists = Vec::new();
    for m in 1..=8 {
        raw_dists.push(sync::core_dist(&algebra::power(&g, m)?)?);
    }
    let ok = raw_dists.iter().enumerate().all(|(i, &d)| d <= (i + 1).div_ceil(2));
    ctx.check("g_h3 raw power CoreDist <= ceil(m/2)", ok, json!({ "core_dist": raw_dists }));
    Ok(())
}

fn level_drop(ctx: &mut Context) -> Result<()> {
    let shift = catalog::builtin("shift2")?.machine;
    ctx.machine("shift2", &shift);
    let a = NormalForm::of(&algebra::power(&shift, 3)?)?;
    ctx.machine("min_core(shift2^3)", a.machine());
    let big = a.size() > shift.alphabet_size() * (shift.alphabet_size() + 1);
    ctx.check("|A| > n(n+1)", big, json!(a.size()));
    let level = NormalForm::of(&algebra::product(a.machine(), &shift)?)?.level();
    ctx.check("sync_level(min_core(A*B)) >= 2", level >= 2, json!(level));
    Ok(())
}

fn all_cycles(n: usize, max_period: usize) -> impl Iterator<Item = PeriodicWord> {
    (1..=max_period).flat_map(move |p| {
        oracle::all_words(n, p).map(|w| PeriodicWord::new(w.0).expect("nonempty"))
    })
}

fn homomorphism_laws(ctx: &mut Context) -> Result<()> {
    let entries = catalog_machines();
    record_catalog(ctx, &entries);
    ctx.param("max_period", json!(6));
    let mut hom = Tally::new("level map of A*B = A-map then B-map");
    let mut comp = Tally::new("act(A*B, w) = act(B, act(A, w))");
    for (a, b) in sync_pairs(&entries) {
        let ab = algebra::product(&a.machine, &b.machine)?;
        let k = a.expected.sync_level.unwrap() + b.expected.sync_level.unwrap();
        let lhs = algebra::level_transformation(&ab, k)?;
        let rhs = algebra::level_transformation(&a.machine, k)?
            .then(&algebra::level_transformation(&b.machine, k)?);
        hom.record(lhs == rhs, || format!("{} * {}", a.name, b.name));
        for w in all_cycles(ab.alphabet_size(), 6) {
            let direct = algebra::act_periodic(&ab, &w)?;
            let stepwise = algebra::act_periodic(&b.machine, &algebra::act_periodic(&a.machine, &w)?)?;
            comp.record(direct.letters() == stepwise.letters(), || {
                format!("{} * {} on {w}", a.name, b.name)
            });
        }
    }
    hom.finish(ctx);
    comp.finish(ctx);

    let mut shift = Tally::new("act(A, rotate(w)) = rotate(act(A, w))");
    let mut reference = Tally::new("act agrees with a long sliding read");
    for e in entries.iter().filter(|e| e.expected.sync_level.is_some()) {
        let k = e.expected.sync_level.unwrap();
        for w in all_cycles(e.machine.alphabet_size(), 6) {
            let image = algebra::act_periodic(&e.machine, &w)?;
            let slow = oracle::act_periodic(&e.machine, w.letters(), k);
            reference.record(image.letters() == slow.as_slice(), || format!("{} on {w}", e.name));
            for r in 1..w.period() {
                let rotated = algebra::act_periodic(&e.machine, &w.rotate(r))?;
                shift.record(rotated.letters() == image.rotate(r).letters(), || {
                    format!("{} on {w}, rotation {r}", e.name)
                });
            }
        }
    }
    shift.finish(ctx);
    reference.finish(ctx);
    Ok(())
}

fn fixed_letter(ctx: &mut Context) -> Result<()> {
    let entries = catalog_machines();
    record_catalog(ctx, &entries);
    ctx.param("max_k", json!(4));
    let mut found = Tally::new("fixed_letter_state succeeds");
    let mut in_core = Tally::new("q0^k in the core of the ki-th power");
    let mut summary = Vec::new();
    for e in entries.iter().filter(|e| e.expected.sync_level.is_some()) {
        let fixed = match algebra::fixed_letter_state(&e.machine) {
            Ok(f) => f,
            Err(err) => {
                found.record(false, || format!("{}: {err}", e.name));
                continue;
            }
        };
        // The loop word is fixed by the i-th iterate of the level map.
        let level = algebra::level_transformation(&e.machine, fixed.word.len())?;
        let mut image = fixed.word.clone();
        for _ in 0..fixed.power {
            image = level.apply(&image);
        }
        found.record(image == fixed.word, || format!("{}: {} not fixed", e.name, fixed.word));
        summary.push(json!({
            "machine": e.name,
            "i": fixed.power,
            "word": fixed.word.to_string(),
            "state": fixed.state_label(),
        }));
        for k in 1..=4 {
            let ok = fixed.power_state_in_core(k)?;
            in_core.record(ok, || format!("{} k={k}", e.name));
        }
    }
    found.finish(ctx);
    in_core.finish(ctx);
    ctx.check("loops", true, Value::Array(summary));
    Ok(())
}
