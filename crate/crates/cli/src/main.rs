use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use serde_json::json;

use primegraph::altgraph;
use primegraph::engine::{self, ComparisonVerdict, Policy, PrimeGraph, Proposition, Verdict};
use primegraph::numtheory::Sieve;
use primegraph::GroupId;

const PASS: u8 = 0;
const FAIL: u8 = 1;
const UNDECIDED: u8 = 2;
const USAGE: u8 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Table {
    MainTable,
    PiTable,
    Corollary,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Scan {
    GoldbachVariant,
    C13,
    Gc2,
}

/// Prime graphs of finite simple groups and their maximal subgroups.
#[derive(Parser, Debug)]
#[command(name = "primegraph", version)]
struct Cli {
    /// Group to compute, e.g. "Sp(8,2)", "POmega+(8,3)", "A(10)", "M11", "Sk-x-Sn-k(7,10)".
    #[arg(long)]
    group: Option<String>,
    /// Compare --group against this subgroup.
    #[arg(long, requires = "group")]
    subgroup: Option<String>,
    /// Replay an instantiated table or the corollary.
    #[arg(long, value_enum)]
    verify: Option<Table>,
    /// Run a conjecture scan over --range.
    #[arg(long, value_enum, requires = "range")]
    scan: Option<Scan>,
    /// Replay the negative witness of a proposition (3.2 .. 3.6) at --params.
    #[arg(long, requires = "params")]
    replay: Option<String>,
    /// `m,q` for --replay.
    #[arg(long)]
    params: Option<String>,
    /// Inclusive range `lo..hi` for --scan.
    #[arg(long)]
    range: Option<String>,
    /// Largest group order the oracle enumerates.
    #[arg(long, default_value_t = primegraph::oracle::DEFAULT_ENUMERATION_BOUND)]
    bound: u64,
    /// Random elements drawn when a group is too large to enumerate.
    #[arg(long, default_value_t = primegraph::oracle::DEFAULT_SAMPLING_BUDGET)]
    budget: u64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

impl Cli {
    fn policy(&self) -> Policy {
        Policy { enumeration_bound: self.bound, sampling_budget: self.budget, seed: self.seed, escalate: true }
    }

    fn config(&self) -> serde_json::Value {
        json!({ "bound": self.bound, "budget": self.budget, "seed": self.seed })
    }

    fn header(&self) -> String {
        format!("seed={} bound={} budget={}", self.seed, self.bound, self.budget)
    }
}

struct Failure {
    code: u8,
    msg: String,
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure { code: USAGE, msg: msg.into() }
}

fn lib_err(e: primegraph::Error) -> Failure {
    let code = match e {
        primegraph::Error::Parse { .. } | primegraph::Error::InvalidArgument(_) | primegraph::Error::Range(_) => USAGE,
        primegraph::Error::Undecided(_) => UNDECIDED,
        _ => FAIL,
    };
    Failure { code, msg: e.to_string() }
}

fn parse_group(s: &str) -> Result<GroupId, Failure> {
    s.parse::<GroupId>().map_err(|e| usage(format!("--group `{s}`: {e}")))
}

fn parse_range(s: &str) -> Result<(u64, u64), Failure> {
    let (a, b) = s.split_once("..").ok_or_else(|| usage(format!("--range `{s}`: expected lo..hi")))?;
    let lo = a.trim().parse().map_err(|_| usage(format!("--range: bad lower bound `{a}`")))?;
    let hi = b.trim().parse().map_err(|_| usage(format!("--range: bad upper bound `{b}`")))?;
    if lo > hi {
        return Err(usage(format!("--range: {lo} > {hi}")));
    }
    Ok((lo, hi))
}

/// Maps `f` over `items` on `workers` threads, keeping input order.
fn par_map<T: Sync, U: Send>(items: &[T], workers: usize, f: impl Fn(&T) -> U + Sync) -> Vec<U> {
    let workers = workers.clamp(1, items.len().max(1));
    if workers == 1 {
        return items.iter().map(&f).collect();
    }
    let chunk = items.len().div_ceil(workers);
    std::thread::scope(|scope| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|part| scope.spawn(|| part.iter().map(&f).collect::<Vec<U>>()))
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    })
}

fn render_graph(cli: &Cli, g: &PrimeGraph) -> String {
    match cli.format {
        Format::Json => {
            let v = json!({ "config": cli.config(), "graph": g });
            serde_json::to_string_pretty(&v).expect("graph serializes") + "\n"
        }
        Format::Dot => format!("// {}\n{}", cli.header(), g.to_dot()),
        Format::Text => format!("# {}\n{}", cli.header(), g.to_text()),
    }
}

fn verdict_text(v: &ComparisonVerdict) -> String {
    let line = match &v.verdict {
        Verdict::Equal => "EQUAL".to_string(),
        Verdict::NotEqual { witness: Some(w), .. } => format!(
            "NOT_EQUAL witness {}-{} ({} in {})",
            w.pair.0,
            w.pair.1,
            if w.present_in_first { "present" } else { "absent" },
            v.g
        ),
        Verdict::NotEqual { vertex_difference, .. } => format!("NOT_EQUAL vertices {vertex_difference:?}"),
        Verdict::Undecided { unknown } => format!("UNDECIDED {unknown:?}"),
    };
    format!("{} vs {}: {} (pi equal: {})", v.g, v.h, line, v.pi_equal)
}

fn render_verdict(cli: &Cli, v: &ComparisonVerdict) -> String {
    match cli.format {
        Format::Json => serde_json::to_string_pretty(&json!({ "config": cli.config(), "comparison": v })).expect("verdict serializes") + "\n",
        _ => format!("# {}\n{}\n", cli.header(), verdict_text(v)),
    }
}

fn verdict_code(v: &ComparisonVerdict) -> u8 {
    match v.verdict {
        Verdict::Equal => PASS,
        Verdict::NotEqual { .. } => FAIL,
        Verdict::Undecided { .. } => UNDECIDED,
    }
}

fn cmd_graph(cli: &Cli, out: &mut impl Write) -> Result<u8, Failure> {
    let g = parse_group(cli.group.as_deref().unwrap_or_default())?;
    let policy = cli.policy();
    if let Some(sub) = &cli.subgroup {
        let h = parse_group(sub)?;
        let v = engine::compare(&g, &h, true, &policy).map_err(lib_err)?;
        write!(out, "{}", render_verdict(cli, &v)).ok();
        return Ok(verdict_code(&v));
    }
    let graph = engine::compute_graph(&g, &policy).map_err(lib_err)?;
    write!(out, "{}", render_graph(cli, &graph)).ok();
    Ok(if graph.is_decided() { PASS } else { UNDECIDED })
}

fn json_line(out: &mut impl Write, v: serde_json::Value) {
    writeln!(out, "{v}").ok();
}

fn cmd_verify(cli: &Cli, table: Table, out: &mut impl Write) -> Result<u8, Failure> {
    let policy = cli.policy();
    let text = cli.format != Format::Json;
    if text {
        writeln!(out, "# {}", cli.header()).ok();
    }
    let mut first_failure: Option<String> = None;
    let mut undecided = false;
    match table {
        Table::MainTable => {
            let rows = engine::main_table_rows();
            let reports = par_map(&rows, cli.workers, |row| engine::verify_main_row(row, &policy));
            for rep in reports {
                let rep = rep.map_err(lib_err)?;
                let name = format!("{} vs {}", rep.row.g, rep.row.h);
                let verdict = match rep.verdict.verdict {
                    Verdict::Equal => "EQUAL",
                    Verdict::NotEqual { .. } => "NOT_EQUAL",
                    Verdict::Undecided { .. } => "UNDECIDED",
                };
                if text {
                    let comps = rep.components.map_or("undecided".to_string(), |c| c.to_string());
                    let note = if rep.components_match() { "" } else { "  [s(G) differs from table]" };
                    writeln!(out, "{name}: {verdict}  s(G) = {comps} (table {}){note}", rep.row.expected_components).ok();
                } else {
                    json_line(out, json!({ "row": name, "report": rep, "pass": rep.pass(), "components_match": rep.components_match() }));
                }
                undecided |= matches!(rep.verdict.verdict, Verdict::Undecided { .. }) || rep.unknown_edges > 0;
                if !rep.pass() && first_failure.is_none() {
                    first_failure = Some(name);
                }
            }
        }
        Table::PiTable => {
            for rep in engine::verify_pi_table().map_err(lib_err)? {
                let name = format!("({}) {} vs {}", rep.row.row, rep.row.g, rep.row.h);
                if text {
                    writeln!(out, "{name}: {} {:?}", if rep.pass() { "PI_EQUAL" } else { "PI_DIFFERENT" }, rep.pi_g).ok();
                } else {
                    json_line(out, json!({ "row": name, "report": rep, "pass": rep.pass() }));
                }
                if !rep.pass() && first_failure.is_none() {
                    first_failure = Some(name);
                }
            }
        }
        Table::Corollary => {
            let rep = engine::verify_corollary(&policy).map_err(lib_err)?;
            for v in &rep.second_maximal {
                if text {
                    writeln!(out, "{}", verdict_text(v)).ok();
                } else {
                    json_line(out, json!({ "second_maximal": v }));
                }
                undecided |= matches!(v.verdict, Verdict::Undecided { .. });
                if !v.is_equal() && first_failure.is_none() {
                    first_failure = Some(format!("{} vs {}", v.g, v.h));
                }
            }
            for c in &rep.chain {
                let name = format!("{} vs {} (m = {}, q = {})", c.g, c.t, c.m, c.q);
                if text {
                    let w = c.witness.as_ref().map_or("none".to_string(), |w| format!("{}-{}", w.pair.0, w.pair.1));
                    writeln!(out, "{name}: {:?} path, witness {w}", c.path).ok();
                } else {
                    json_line(out, json!({ "chain": c }));
                }
                if !c.separated() && first_failure.is_none() {
                    first_failure = Some(name);
                }
            }
        }
    }
    if let Some(name) = first_failure {
        eprintln!("first failing row: {name}");
        return Ok(if undecided { UNDECIDED } else { FAIL });
    }
    Ok(PASS)
}

fn cmd_scan(cli: &Cli, mode: Scan, out: &mut impl Write) -> Result<u8, Failure> {
    let (lo, hi) = parse_range(cli.range.as_deref().unwrap_or_default())?;
    let mut ok = true;
    match mode {
        Scan::GoldbachVariant => {
            let width = (hi - lo) / cli.workers.max(1) as u64 + 1;
            let parts: Vec<(u64, u64)> = (0..cli.workers.max(1) as u64)
                .map(|i| (lo + i * width, (lo + (i + 1) * width - 1).min(hi)))
                .filter(|(a, b)| a <= b)
                .collect();
            let reports = par_map(&parts, cli.workers, |&(a, b)| altgraph::goldbach_variant_scan(a, b));
            let mut checked = 0;
            let mut counterexamples = Vec::new();
            for r in reports {
                let r = r.map_err(lib_err)?;
                checked += r.checked;
                counterexamples.extend(r.counterexamples);
            }
            for &n in &counterexamples {
                json_line(out, json!({ "mode": "goldbach-variant", "n": n, "counterexample": true }));
            }
            json_line(
                out,
                json!({ "mode": "goldbach-variant", "lo": lo, "hi": hi, "checked": checked, "counterexamples": counterexamples.len() }),
            );
            ok = counterexamples.is_empty();
        }
        Scan::C13 => {
            let ns: Vec<u64> = (lo.max(5)..=hi).collect();
            let chunk = ns.len().div_ceil(cli.workers.max(1)).max(1);
            let parts: Vec<(u64, u64)> = ns.chunks(chunk).map(|c| (c[0], c[c.len() - 1])).collect();
            let results = par_map(&parts, cli.workers, |&(a, b)| altgraph::intransitive_scan(a, b));
            for r in results {
                for line in r.map_err(lib_err)? {
                    ok &= line.agrees;
                    json_line(out, json!({ "mode": "c13", "line": line }));
                }
            }
        }
        Scan::Gc2 => {
            let sieve = Sieve::new(hi + 1);
            // k = n - 1 is admissible only for composite n
            let ns: Vec<u64> = (lo.max(15)..=hi).filter(|&n| n % 2 == 1 && !sieve.is_prime(n)).collect();
            let lines = par_map(&ns, cli.workers, |&n| {
                let cmp = altgraph::compare_nested(n, &sieve);
                let predicted = altgraph::gc2_predicate(n).unwrap_or(false);
                (n, cmp.equal(), predicted, cmp.missing_edges)
            });
            for (n, equal, predicted, missing) in lines {
                ok &= equal == predicted;
                json_line(
                    out,
                    json!({ "mode": "gc2", "n": n, "equal": equal, "predicted": predicted, "agrees": equal == predicted, "missing_edges": missing }),
                );
            }
        }
    }
    Ok(if ok { PASS } else { FAIL })
}

fn cmd_replay(cli: &Cli, prop: &str, out: &mut impl Write) -> Result<u8, Failure> {
    let prop: Proposition = prop.parse().map_err(lib_err)?;
    let params = cli.params.as_deref().unwrap_or_default();
    let (m, q) = params.split_once(',').ok_or_else(|| usage(format!("--params `{params}`: expected m,q")))?;
    let m: u32 = m.trim().parse().map_err(|_| usage(format!("--params: bad m `{m}`")))?;
    let q: u64 = q.trim().parse().map_err(|_| usage(format!("--params: bad q `{q}`")))?;
    let rep = engine::replay_witness(prop, m, q).map_err(lib_err)?;
    let reproduced = rep.reproduced().map_err(lib_err)?;
    match cli.format {
        Format::Json => {
            let v = json!({ "config": cli.config(), "replay": rep, "reproduced": reproduced });
            writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("replay serializes")).ok();
        }
        _ => {
            writeln!(
                out,
                "{} vs {}: ({}, {}) via {}: {}",
                rep.g,
                rep.h,
                rep.witness.pair.0,
                rep.witness.pair.1,
                rep.recipe,
                if reproduced { "NOT_EQUAL" } else { "not reproduced" }
            )
            .ok();
        }
    }
    Ok(if reproduced { PASS } else { FAIL })
}

fn run(cli: &Cli, out: &mut impl Write) -> Result<u8, Failure> {
    let modes = [cli.group.is_some(), cli.verify.is_some(), cli.scan.is_some(), cli.replay.is_some()];
    if modes.iter().filter(|&&m| m).count() != 1 {
        return Err(usage("give exactly one of --group, --verify, --scan, --replay"));
    }
    if cli.bound == 0 || cli.workers == 0 {
        return Err(usage("--bound and --workers must be positive"));
    }
    if let Some(t) = cli.verify {
        return cmd_verify(cli, t, out);
    }
    if let Some(s) = cli.scan {
        return cmd_scan(cli, s, out);
    }
    if let Some(p) = &cli.replay {
        return cmd_replay(cli, p, out);
    }
    cmd_graph(cli, out)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if matches!(e.kind(), clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion) {
                PASS
            } else {
                USAGE
            };
            e.print().ok();
            return ExitCode::from(code);
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(&cli, &mut out) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
