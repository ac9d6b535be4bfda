//! Batch front door for the vennforge library: analyze families, run the
//! witness finders, generate constructions, verify decompositions, and
//! emit tables or JSON reports.
//!
//! Exit codes: 0 success, 1 validation failure, 2 witness absent or size
//! guard unmet, 3 falsification (a guaranteed object was missing, which
//! signals an implementation bug, never a property of the input).

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use vennforge::constructive::{
    self, full_venn_find, gupta_find, seven_inner_find, six_inner_find, six_middle_find, Outcome,
};
use vennforge::error::ConstructiveError;
use vennforge::extremal;
use vennforge::family::Family;
use vennforge::io;
use vennforge::pairlike;
use vennforge::thresholds::Thresholds;
use vennforge::vc;
use vennforge::venn::{self, RegionMask, VennWitness, ALL8, INNER7, MIDDLE6};

const EXIT_OK: u8 = 0;
const EXIT_INVALID: u8 = 1;
const EXIT_ABSENT: u8 = 2;
const EXIT_FALSIFIED: u8 = 3;

#[derive(Parser)]
#[command(name = "vennforge", version, about = "Set-family Venn-region toolkit")]
struct Cli {
    /// Emit a machine-readable JSON report instead of tables.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized runs; echoed into reports for reproducibility.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// VC dimension, dual VC dimension, Sauer bound and crossing pair of a family.
    Analyze { file: PathBuf },
    /// Search for a member tuple filling prescribed regions.
    Find {
        file: PathBuf,
        /// Tuple arity.
        #[arg(long, default_value_t = 3)]
        k: usize,
        /// Required number of non-empty masked regions.
        #[arg(long)]
        regions: usize,
        /// Which regions count: all 2^k, all but the outermost, or neither
        /// outermost nor innermost.
        #[arg(long, value_enum, default_value_t = MaskArg::All)]
        mask: MaskArg,
        /// Run searches even when the constructive size guards fail.
        #[arg(long)]
        force_oracle: bool,
    },
    /// Write a generated family in the setfam v1 format.
    Generate {
        #[command(subcommand)]
        what: GenerateCmd,
    },
    /// Structural decomposition into a junk part and a certified pair-like part.
    Decompose {
        file: PathBuf,
        /// Junk-part slope.
        #[arg(long)]
        alpha: Option<f64>,
        /// Junk-part offset.
        #[arg(long)]
        beta: Option<f64>,
        /// Required partner count per pair-like component side.
        #[arg(long)]
        t: Option<usize>,
    },
    /// Check that the bounded-size lower-bound family has no k-Venn diagram.
    VerifyConstruction {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Maximum size of a crossing-pair-free family.
    F1 {
        #[arg(long)]
        n: usize,
        /// Run the exhaustive oracle (n <= 6) instead of reporting the formula value.
        #[arg(long)]
        exact: bool,
    },
}

#[derive(Subcommand)]
enum GenerateCmd {
    /// All subsets of [n] of size at most --max-size.
    Bounded {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_size: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// All two-element subsets of [n].
    Pairs {
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// The full power set of [n].
    Powerset {
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MaskArg {
    All,
    Inner,
    Middle,
}

impl MaskArg {
    fn mask(self) -> RegionMask {
        match self {
            MaskArg::All => ALL8,
            MaskArg::Inner => INNER7,
            MaskArg::Middle => MIDDLE6,
        }
    }

    fn name(self) -> &'static str {
        match self {
            MaskArg::All => "all",
            MaskArg::Inner => "inner",
            MaskArg::Middle => "middle",
        }
    }
}

/// Worker count cap from the environment; defaults to a single worker.
fn worker_threads() -> usize {
    std::env::var("VENNFORGE_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&t| t >= 1)
        .unwrap_or(1)
}

struct Report {
    command: &'static str,
    inputs: Value,
    outcome: Value,
    witness: Option<Value>,
    certificate: Option<Value>,
    exit: u8,
    human: Vec<String>,
}

impl Report {
    fn new(command: &'static str, inputs: Value) -> Self {
        Report {
            command,
            inputs,
            outcome: Value::Null,
            witness: None,
            certificate: None,
            exit: EXIT_OK,
            human: Vec::new(),
        }
    }

    fn line(&mut self, s: impl Into<String>) {
        self.human.push(s.into());
    }

    fn emit(self, json_mode: bool, seed: Option<u64>, started: Instant) -> ExitCode {
        if json_mode {
            let mut inputs = self.inputs;
            if let (Some(seed), Some(map)) = (seed, inputs.as_object_mut()) {
                map.insert("seed".into(), json!(seed));
            }
            let mut doc = json!({
                "command": self.command,
                "inputs": inputs,
                "outcome": self.outcome,
                "timing_ms": started.elapsed().as_secs_f64() * 1000.0,
            });
            let map = doc.as_object_mut().expect("object literal");
            if let Some(w) = self.witness {
                map.insert("witness".into(), w);
            }
            if let Some(c) = self.certificate {
                map.insert("certificate".into(), c);
            }
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        } else {
            for line in &self.human {
                println!("{line}");
            }
        }
        ExitCode::from(self.exit)
    }
}

fn witness_json(w: &VennWitness) -> Value {
    json!({
        "members": w.member_indices.iter().map(|&i| i + 1).collect::<Vec<_>>(),
        "region_sizes": w.regions.sizes,
        "representatives": w.regions.representatives.iter()
            .map(|r| r.map(|e| e + 1))
            .collect::<Vec<_>>(),
    })
}

fn witness_lines(report: &mut Report, family: &Family, w: &VennWitness) {
    let members: Vec<String> = w
        .member_indices
        .iter()
        .map(|&i| format!("#{} = {}", i + 1, io::serialize_set(&family.member(i))))
        .collect();
    report.line(format!("witness members: {}", members.join("; ")));
    report.line(format!(
        "region sizes (pattern order): {:?}",
        w.regions.sizes
    ));
}

fn validation(report: &mut Report, message: String) {
    report.outcome = json!({ "status": "invalid", "detail": message });
    report.exit = EXIT_INVALID;
    let msg = report.human.is_empty().then(|| format!("error: {message}"));
    if let Some(m) = msg {
        report.line(m);
    }
}

fn falsification(report: &mut Report, message: String) {
    report.outcome = json!({ "status": "falsified", "detail": message });
    report.exit = EXIT_FALSIFIED;
    report.line(format!("FALSIFICATION: {message}"));
    report.line("this contradicts a guaranteed existence result and signals a bug");
}

fn read_family(report: &mut Report, path: &PathBuf) -> Option<Family> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            validation(report, format!("cannot read {}: {e}", path.display()));
            return None;
        }
    };
    match io::parse(&text) {
        Ok(f) => Some(f),
        Err(e) => {
            validation(report, format!("{}: {e}", path.display()));
            None
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let report = match &cli.command {
        Command::Analyze { file } => cmd_analyze(file),
        Command::Find {
            file,
            k,
            regions,
            mask,
            force_oracle,
        } => cmd_find(file, *k, *regions, *mask, *force_oracle),
        Command::Generate { what } => cmd_generate(what),
        Command::Decompose {
            file,
            alpha,
            beta,
            t,
        } => cmd_decompose(file, *alpha, *beta, *t),
        Command::VerifyConstruction { n, k } => cmd_verify_construction(*n, *k),
        Command::F1 { n, exact } => cmd_f1(*n, *exact),
    };
    report.emit(cli.json, cli.seed, started)
}

fn cmd_analyze(file: &PathBuf) -> Report {
    let mut report = Report::new(
        "analyze",
        json!({ "file": file.display().to_string() }),
    );
    let Some(family) = read_family(&mut report, file) else {
        return report;
    };
    let vc_report = vc::vc_dim(&family);
    let dual = vc::dual_vc_dim(&family);
    let crossing = venn::find_crossing_pair(&family);
    report.line(format!(
        "family: n = {}, {} members",
        family.ground_size(),
        family.len()
    ));
    report.line(format!("vc dimension: {}", vc_report.vc));
    if let Some(s) = &vc_report.witness_shattered {
        report.line(format!("shattered set: {}", io::serialize_set(s)));
    }
    report.line(format!("sauer bound: {}", vc_report.sauer_bound));
    report.line(format!("dual vc dimension: {dual}"));
    match &crossing {
        Some(w) => {
            report.line(format!(
                "crossing pair: members #{} and #{}",
                w.member_indices[0] + 1,
                w.member_indices[1] + 1
            ));
        }
        None => report.line("crossing pair: none".to_string()),
    }
    report.outcome = json!({
        "status": "ok",
        "n": family.ground_size(),
        "members": family.len(),
        "vc": vc_report.vc,
        "shattered_set": vc_report.witness_shattered.as_ref().map(io::serialize_set),
        "sauer_bound": vc_report.sauer_bound.to_string(),
        "dual_vc": dual,
        "crossing_pair": crossing.as_ref().map(|w| {
            w.member_indices.iter().map(|&i| i + 1).collect::<Vec<_>>()
        }),
    });
    if let Some(w) = &crossing {
        report.witness = Some(witness_json(w));
    }
    report
}

fn cmd_find(file: &PathBuf, k: usize, regions: usize, mask: MaskArg, force: bool) -> Report {
    let mut report = Report::new(
        "find",
        json!({
            "file": file.display().to_string(),
            "k": k,
            "regions": regions,
            "mask": mask.name(),
            "force_oracle": force,
        }),
    );
    let Some(family) = read_family(&mut report, file) else {
        return report;
    };
    if k < 1 || k > venn::MAX_ARITY {
        validation(&mut report, format!("k must be 1..={}", venn::MAX_ARITY));
        return report;
    }
    if k != 3 {
        if mask != MaskArg::All || regions != 1 << k {
            validation(
                &mut report,
                format!("for k = {k} only a full diagram search (--mask all --regions {}) is supported", 1usize << k),
            );
            return report;
        }
        match venn::find_k_venn(&family, k) {
            Some(w) => found(&mut report, &family, &w),
            None => absent(&mut report, format!("no {k}-Venn diagram in the family")),
        }
        return report;
    }
    let region_mask = mask.mask();
    if regions < 1 || regions as u32 > region_mask.count_ones() {
        validation(
            &mut report,
            format!("--regions must be 1..={} for this mask", region_mask.count_ones()),
        );
        return report;
    }
    let th = Thresholds::default();
    // Constructive finders where a guarantee exists; plain oracle otherwise.
    let constructive: Option<Result<Outcome, ConstructiveError>> = match (mask, regions) {
        (MaskArg::All, 8) => Some(full_venn_find(&family, &th, force)),
        (MaskArg::Inner, 7) => Some(seven_inner_find(&family, &th, force)),
        (MaskArg::Inner, 6) => Some(six_inner_find(&family, &th, force)),
        (MaskArg::Middle, 6) => Some(six_middle_find(&family, &th, force)),
        (MaskArg::Middle, 4) => Some(gupta_find(&family, &th, force)),
        _ => None,
    };
    match constructive {
        Some(Ok(Outcome::Witness(w))) => found(&mut report, &family, &w),
        Some(Ok(Outcome::Shortfall {
            reason,
            required,
            actual,
        })) => {
            report.outcome = json!({
                "status": "shortfall",
                "reason": reason,
                "required": required,
                "actual": actual,
            });
            report.exit = EXIT_ABSENT;
            report.line(format!(
                "absent: size guard unmet ({actual} < {required} members); {reason}"
            ));
            if !force {
                report.line("rerun with --force-oracle to search exhaustively".to_string());
            }
        }
        Some(Ok(Outcome::Object(()))) => unreachable!("finders carry no payload"),
        Some(Err(ConstructiveError::Falsification(m))) => falsification(&mut report, m),
        Some(Err(e)) => validation(&mut report, e.to_string()),
        None => {
            let w = venn::find_triple_threaded(&family, region_mask, regions, worker_threads());
            match w {
                Some(w) => found(&mut report, &family, &w),
                None => absent(
                    &mut report,
                    format!("no triple fills {regions} {} regions", mask.name()),
                ),
            }
        }
    }
    report
}

fn found(report: &mut Report, family: &Family, w: &VennWitness) {
    if !w.revalidate(family).unwrap_or(false) {
        falsification(report, "witness failed revalidation".to_string());
        return;
    }
    report.outcome = json!({ "status": "witness" });
    report.witness = Some(witness_json(w));
    witness_lines(report, family, w);
}

fn absent(report: &mut Report, detail: String) {
    report.outcome = json!({ "status": "absent", "detail": detail });
    report.exit = EXIT_ABSENT;
    report.line(format!("absent: {detail}"));
}

fn cmd_generate(what: &GenerateCmd) -> Report {
    let (name, n, inputs, result, output) = match what {
        GenerateCmd::Bounded { n, max_size, output } => (
            "bounded",
            *n,
            json!({ "kind": "bounded", "n": n, "max_size": max_size }),
            extremal::gen_bounded(*n, *max_size, false),
            output,
        ),
        GenerateCmd::Pairs { n, output } => (
            "pairs",
            *n,
            json!({ "kind": "pairs", "n": n }),
            extremal::gen_pairs(*n),
            output,
        ),
        GenerateCmd::Powerset { n, output } => (
            "powerset",
            *n,
            json!({ "kind": "powerset", "n": n }),
            if *n > 20 {
                Err(vennforge::error::FamilyError::GroundTooLarge(*n))
            } else {
                extremal::gen_powerset(*n)
            },
            output,
        ),
    };
    let mut report = Report::new("generate", inputs);
    let family = match result {
        Ok(f) => f,
        Err(e) => {
            validation(&mut report, e.to_string());
            return report;
        }
    };
    let text = io::serialize(&family);
    match output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                validation(&mut report, format!("cannot write {}: {e}", path.display()));
                return report;
            }
            report.line(format!(
                "wrote {} ({name}, n = {n}, {} members)",
                path.display(),
                family.len()
            ));
        }
        None => {
            for line in text.lines() {
                report.line(line.to_string());
            }
        }
    }
    report.outcome = json!({
        "status": "ok",
        "n": n,
        "members": family.len(),
        "output": output.as_ref().map(|p| p.display().to_string()),
    });
    report
}

fn cmd_decompose(
    file: &PathBuf,
    alpha: Option<f64>,
    beta: Option<f64>,
    t: Option<usize>,
) -> Report {
    let defaults = Thresholds::default();
    let th = Thresholds {
        alpha: alpha.unwrap_or(defaults.alpha),
        beta: beta.unwrap_or(defaults.beta),
        t: t.unwrap_or(defaults.t),
        ..defaults
    };
    let mut report = Report::new(
        "decompose",
        json!({
            "file": file.display().to_string(),
            "alpha": th.alpha,
            "beta": th.beta,
            "t": th.t,
        }),
    );
    let Some(family) = read_family(&mut report, file) else {
        return report;
    };
    match constructive::structural_decompose(&family, &th) {
        Ok(Outcome::Witness(w)) => {
            if !w.revalidate(&family).unwrap_or(false) {
                falsification(&mut report, "witness failed revalidation".to_string());
                return report;
            }
            report.outcome = json!({ "status": "witness" });
            report.witness = Some(witness_json(&w));
            report.line("found a triple with five of the seven inner regions".to_string());
            witness_lines(&mut report, &family, &w);
        }
        Ok(Outcome::Object(d)) => {
            let structured = family.subfamily(&d.structured);
            let cert = match pairlike::verify(&structured, &d.basis, th.t) {
                Ok(c) => c,
                Err(v) => {
                    falsification(
                        &mut report,
                        format!("decomposition failed pair-like verification: {v}"),
                    );
                    return report;
                }
            };
            let budget = th.junk_budget(family.ground_size());
            report.outcome = json!({
                "status": "decomposition",
                "junk": d.junk.len(),
                "structured": d.structured.len(),
                "basis_parts": d.basis.len(),
                "junk_budget": budget,
                "junk_within_budget": (d.junk.len() as f64) <= budget,
            });
            report.certificate = Some(json!({
                "junk_members": d.junk.iter().map(|&i| i + 1).collect::<Vec<_>>(),
                "structured_members": d.structured.iter().map(|&i| i + 1).collect::<Vec<_>>(),
                "basis": d.basis.iter().map(io::serialize_set).collect::<Vec<_>>(),
                "components": d.components.iter()
                    .map(|&(u, v)| vec![u + 1, v + 1])
                    .collect::<Vec<_>>(),
                "partner_t": cert.t,
                "partners": cert.members.iter().map(|mc| json!({
                    "member": d.structured[mc.member] + 1,
                    "components": [mc.components.0 + 1, mc.components.1 + 1],
                    "first_side": mc.partners_of_first.iter().map(|&w| w + 1).collect::<Vec<_>>(),
                    "second_side": mc.partners_of_second.iter().map(|&w| w + 1).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
            }));
            report.line(format!(
                "decomposition: {} junk + {} pair-like members over {} basis parts",
                d.junk.len(),
                d.structured.len(),
                d.basis.len()
            ));
            report.line(format!(
                "junk budget alpha*n - beta = {budget:.1}; junk {} budget",
                if (d.junk.len() as f64) <= budget {
                    "within"
                } else {
                    "exceeds"
                }
            ));
            report.line(format!(
                "pair-like part verified with {} partners per side",
                cert.t
            ));
        }
        Ok(Outcome::Shortfall { .. }) => unreachable!("decomposition has no size guard"),
        Err(ConstructiveError::Falsification(m)) => falsification(&mut report, m),
        Err(e) => validation(&mut report, e.to_string()),
    }
    report
}

fn cmd_verify_construction(n: usize, k: usize) -> Report {
    let mut report = Report::new("verify-construction", json!({ "n": n, "k": k }));
    if !(2..=venn::MAX_ARITY).contains(&k) {
        validation(&mut report, format!("k must be 2..={}", venn::MAX_ARITY));
        return report;
    }
    let max_size = (1usize << (k - 1)) - 1;
    if max_size > n {
        validation(
            &mut report,
            format!("construction needs n >= {max_size} at k = {k}"),
        );
        return report;
    }
    let family = match extremal::gen_bounded(n, max_size, false) {
        Ok(f) => f,
        Err(e) => {
            validation(&mut report, e.to_string());
            return report;
        }
    };
    report.line(format!(
        "family of all subsets of [{n}] with size <= {max_size}: {} members",
        family.len()
    ));
    match venn::find_k_venn(&family, k) {
        None => {
            report.outcome = json!({
                "status": "verified",
                "members": family.len(),
                "max_size": max_size,
            });
            report.line(format!("verified: no {k}-Venn diagram"));
        }
        Some(w) => {
            // Size-bounded sets cannot split into 2^(k-1) non-empty regions.
            falsification(
                &mut report,
                format!(
                    "size-bounded family contains a {k}-Venn at members {:?}",
                    w.member_indices.iter().map(|&i| i + 1).collect::<Vec<_>>()
                ),
            );
        }
    }
    report
}

fn cmd_f1(n: usize, exact: bool) -> Report {
    let mut report = Report::new("f1", json!({ "n": n, "exact": exact }));
    if !exact {
        if n < 2 {
            validation(&mut report, "the formula value needs n >= 2".to_string());
            return report;
        }
        let value = 4 * n - 2;
        report.outcome = json!({ "status": "ok", "value": value, "exact": false });
        report.line(format!("f1({n}) formula value: {value} (not verified here)"));
        return report;
    }
    match extremal::exact_f1(n) {
        Ok((value, maximizer)) => {
            report.outcome = json!({ "status": "ok", "value": value, "exact": true });
            report.certificate = Some(json!({
                "maximizer": maximizer.iter().map(io::serialize_set).collect::<Vec<_>>(),
            }));
            report.line(format!("exact f1({n}) = {value}"));
            report.line(format!(
                "maximizer: {}",
                maximizer
                    .iter()
                    .map(io::serialize_set)
                    .collect::<Vec<_>>()
                    .join("; ")
            ));
        }
        Err(e) => validation(&mut report, format!("{e} (exhaustive oracle is desk scale)")),
    }
    report
}
