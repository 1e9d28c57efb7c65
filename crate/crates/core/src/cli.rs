//! The `aml` command line.

use std::collections::{BTreeMap, BTreeSet};
use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::model::{
    enumerate_structures, validate_structure, ModelDoc, Structure, SuiteConfig, Valuation, ValuationDoc,
};
use crate::proof::{audit_soundness, check_proof, parse_hypotheses, parse_proof_with};
use crate::semantics::{consequence, eval_result, falsifying_valuation, is_tautology, ConsequenceKind, Counterexample};
use crate::syntax::{
    is_negative_in, is_positive_in, n_left, occurrence_kind, parse, render, render_sugar, strip_comment, tokens,
    OccurrenceKind, Pattern, Signature, Token,
};
use crate::Mode;

#[derive(Parser, Debug)]
#[command(name = "aml", version, about = "Applicative matching logic workbench")]
struct Cli {
    /// Signature file (one constant per line). Without it any identifier is
    /// accepted as a constant.
    #[arg(long, global = true, value_name = "FILE")]
    sig: Option<PathBuf>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse patterns and print them in another syntax.
    Parse {
        file: PathBuf,
        #[arg(long, default_value = "sugar")]
        mode: Mode,
        /// Output syntax.
        #[arg(long, default_value = "core")]
        emit: Mode,
    },
    /// Print free variables, the occurrence table and polarities.
    Analyze {
        file: PathBuf,
        #[arg(long, default_value = "sugar")]
        mode: Mode,
    },
    /// Evaluate patterns in one structure under one valuation.
    Eval {
        file: PathBuf,
        #[arg(long, default_value = "sugar")]
        mode: Mode,
        #[arg(long, value_name = "FILE")]
        model: PathBuf,
        #[arg(long, value_name = "FILE")]
        valuation: Option<PathBuf>,
    },
    /// Decide whether every structure of a suite is a model of each pattern.
    Check {
        file: PathBuf,
        #[arg(long, default_value = "sugar")]
        mode: Mode,
        #[command(flatten)]
        suite: SuiteArgs,
    },
    /// Decide whether each pattern is a tautology.
    Taut {
        file: PathBuf,
        #[arg(long, default_value = "sugar")]
        mode: Mode,
    },
    /// Decide a consequence relation relative to a suite.
    Consequence {
        /// Conclusions, one pattern per line.
        delta: PathBuf,
        /// Hypotheses, one pattern per line.
        #[arg(long, value_name = "FILE")]
        gamma: Option<PathBuf>,
        /// global, local or strong.
        #[arg(long, default_value = "global")]
        kind: ConsequenceKind,
        #[arg(long, default_value = "sugar")]
        mode: Mode,
        #[command(flatten)]
        suite: SuiteArgs,
    },
    /// Proof scripts.
    Proof {
        #[command(subcommand)]
        action: ProofCommand,
    },
    /// Write a generated suite as model files.
    GenModels {
        #[arg(long, value_name = "DIR")]
        out: PathBuf,
        #[command(flatten)]
        suite: SuiteArgs,
    },
}

#[derive(Subcommand, Debug)]
enum ProofCommand {
    /// Check a proof script, optionally auditing it against a suite.
    Check {
        file: PathBuf,
        /// Extra hypothesis files (`hyp <name> := <pattern>` lines).
        #[arg(long, value_name = "FILE")]
        hyps: Vec<PathBuf>,
        /// Check every accepted line semantically against the suite.
        #[arg(long)]
        audit: bool,
        #[command(flatten)]
        suite: SuiteArgs,
    },
}

#[derive(Args, Debug, Clone)]
struct SuiteArgs {
    /// Model file; may be repeated.
    #[arg(long, value_name = "FILE")]
    model: Vec<PathBuf>,
    /// Directory of model files (`*.json`, in name order).
    #[arg(long, value_name = "DIR")]
    models: Option<PathBuf>,
    /// Largest universe of a generated suite.
    #[arg(long, default_value_t = 2)]
    max_size: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random structures drawn above the exhaustive sizes.
    #[arg(long, default_value_t = 0)]
    samples: usize,
    /// Generate only definedness structures.
    #[arg(long)]
    defined: bool,
    /// Where counterexample model and valuation files are written.
    #[arg(long, value_name = "DIR")]
    cex_dir: Option<PathBuf>,
}

/// A usage or input error; exits with status 2.
#[derive(Debug)]
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Failure {
        Failure(e.to_string())
    }
}

type Outcome = Result<bool, Failure>;

/// Runs the command line and returns the exit status: 0 on success, 1 when
/// a pattern is not valid or a proof is rejected, 2 on usage or input
/// errors.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mut text = String::new();
    let result = dispatch(&cli, &mut text);
    let _ = out.write_all(text.as_bytes());
    match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn dispatch(cli: &Cli, out: &mut String) -> Outcome {
    let sig = match &cli.sig {
        Some(path) => Signature::parse_file(&read(path)?).map_err(|e| Failure(format!("{}: {e}", path.display())))?,
        None => Signature::open(),
    };
    let ctx = Ctx { sig, json: cli.json };
    match &cli.command {
        Command::Parse { file, mode, emit } => ctx.parse(file, *mode, *emit, out),
        Command::Analyze { file, mode } => ctx.analyze(file, *mode, out),
        Command::Eval { file, mode, model, valuation } => ctx.eval(file, *mode, model, valuation.as_deref(), out),
        Command::Check { file, mode, suite } => ctx.check(file, *mode, suite, out),
        Command::Taut { file, mode } => ctx.taut(file, *mode, out),
        Command::Consequence { delta, gamma, kind, mode, suite } => {
            ctx.consequence(delta, gamma.as_deref(), *kind, *mode, suite, out)
        }
        Command::Proof { action: ProofCommand::Check { file, hyps, audit, suite } } => {
            ctx.proof(file, hyps, *audit, suite, out)
        }
        Command::GenModels { out: dir, suite } => ctx.gen_models(dir, suite, out),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn emit_json(out: &mut String, v: &Value) {
    out.push_str(&serde_json::to_string_pretty(v).expect("json values serialize"));
    out.push('\n');
}

struct Ctx {
    sig: Signature,
    json: bool,
}

/// A pattern together with the file line it came from.
struct Numbered {
    line: usize,
    pattern: Pattern,
}

impl Ctx {
    fn patterns(&self, path: &Path, mode: Mode) -> Result<Vec<Numbered>, Failure> {
        let text = read(path)?;
        let mut out = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = strip_comment(raw).trim();
            if line.is_empty() {
                continue;
            }
            let pattern =
                parse(line, &self.sig, mode).map_err(|e| Failure(format!("{}:{}: {e}", path.display(), i + 1)))?;
            out.push(Numbered { line: i + 1, pattern });
        }
        Ok(out)
    }

    /// The declared constants together with those used by `patterns`.
    fn suite_signature<'a>(&self, patterns: impl IntoIterator<Item = &'a Pattern>) -> Signature {
        let mut names: BTreeSet<String> = BTreeSet::new();
        for p in patterns {
            names.extend(p.constants().iter().map(|c| c.to_string()));
        }
        let mut sig = Signature::new(self.sig.constants()).expect("declared constants are valid");
        for n in names {
            if !sig.contains(&n) {
                let _ = sig.declare(&n);
            }
        }
        sig
    }

    fn suite(&self, args: &SuiteArgs, sig: &Signature) -> Result<Vec<(String, Structure)>, Failure> {
        let mut files: Vec<PathBuf> = args.model.clone();
        if let Some(dir) = &args.models {
            let mut found: Vec<PathBuf> = fs::read_dir(dir)
                .map_err(|e| Failure(format!("{}: {e}", dir.display())))?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|p| p.extension().is_some_and(|x| x == "json"))
                .collect();
            found.sort();
            files.extend(found);
        }
        if !files.is_empty() {
            return files
                .iter()
                .map(|path| {
                    let doc =
                        ModelDoc::from_json(&read(path)?).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
                    let s = validate_structure(&doc, sig).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
                    Ok((path.display().to_string(), s))
                })
                .collect();
        }
        if args.max_size == 0 {
            return Err(Failure("--max-size must be at least 1".into()));
        }
        let config = SuiteConfig::new(args.max_size).samples(args.samples).seed(args.seed).definedness(args.defined);
        Ok(enumerate_structures(sig, &config).enumerate().map(|(i, s)| (format!("generated #{i}"), s)).collect())
    }

    fn parse(&self, file: &Path, mode: Mode, emit: Mode, out: &mut String) -> Outcome {
        let ps = self.patterns(file, mode)?;
        if self.json {
            let items: Vec<Value> =
                ps.iter().map(|n| json!({"line": n.line, "text": render(&n.pattern, emit)})).collect();
            emit_json(out, &Value::Array(items));
        } else {
            for n in &ps {
                let _ = writeln!(out, "{}", render(&n.pattern, emit));
            }
        }
        Ok(true)
    }

    fn analyze(&self, file: &Path, mode: Mode, out: &mut String) -> Outcome {
        let mut items = Vec::new();
        for n in self.patterns(file, mode)? {
            let p = &n.pattern;
            let fv = p.free_vars();
            let toks = tokens(p);
            let positions: Vec<Value> = toks
                .as_slice()
                .iter()
                .enumerate()
                .map(|(k, t)| {
                    let kind = occurrence_kind(p, k).expect("position in range");
                    let mut v = json!({"position": k, "token": t.to_string(), "kind": kind_name(kind)});
                    if let (Token::SVar(x), OccurrenceKind::FreeSet) = (t, kind) {
                        v["n_left"] = json!(n_left(p, *x, k));
                    }
                    v
                })
                .collect();
            let polarity: Vec<Value> = fv
                .set
                .iter()
                .map(|x| json!({"var": format!("X{x}"), "positive": is_positive_in(p, *x), "negative": is_negative_in(p, *x)}))
                .collect();
            items.push(json!({
                "line": n.line,
                "pattern": render_sugar(p),
                "core": toks.to_string(),
                "free_element": fv.element.iter().map(|x| format!("x{x}")).collect::<Vec<_>>(),
                "free_set": fv.set.iter().map(|x| format!("X{x}")).collect::<Vec<_>>(),
                "positions": positions,
                "polarity": polarity,
            }));
        }
        if self.json {
            emit_json(out, &Value::Array(items));
            return Ok(true);
        }
        for item in &items {
            let list = |v: &Value| {
                let names: Vec<&str> = v.as_array().into_iter().flatten().filter_map(Value::as_str).collect();
                if names.is_empty() {
                    "-".to_string()
                } else {
                    names.join(", ")
                }
            };
            let _ = writeln!(out, "line {}: {}", item["line"], item["pattern"].as_str().unwrap_or_default());
            let _ = writeln!(out, "  core: {}", item["core"].as_str().unwrap_or_default());
            let _ = writeln!(out, "  free element variables: {}", list(&item["free_element"]));
            let _ = writeln!(out, "  free set variables: {}", list(&item["free_set"]));
            let _ = writeln!(out, "  positions:");
            for pos in item["positions"].as_array().into_iter().flatten() {
                let extra = pos.get("n_left").map(|n| format!(" n_left={n}")).unwrap_or_default();
                let _ = writeln!(
                    out,
                    "    {:>3} {:<10} {}{extra}",
                    pos["position"],
                    pos["token"].as_str().unwrap_or_default(),
                    pos["kind"].as_str().unwrap_or_default()
                );
            }
            for pol in item["polarity"].as_array().into_iter().flatten() {
                let _ = writeln!(
                    out,
                    "  {}: positive={} negative={}",
                    pol["var"].as_str().unwrap_or_default(),
                    pol["positive"],
                    pol["negative"]
                );
            }
        }
        Ok(true)
    }

    fn eval(&self, file: &Path, mode: Mode, model: &Path, valuation: Option<&Path>, out: &mut String) -> Outcome {
        let ps = self.patterns(file, mode)?;
        let sig = self.suite_signature(ps.iter().map(|n| &n.pattern));
        let doc = ModelDoc::from_json(&read(model)?).map_err(|e| Failure(format!("{}: {e}", model.display())))?;
        let s = validate_structure(&doc, &sig).map_err(|e| Failure(format!("{}: {e}", model.display())))?;
        let e = match valuation {
            Some(path) => ValuationDoc::from_json(&read(path)?)
                .and_then(|d| d.resolve(&s))
                .map_err(|e| Failure(format!("{}: {e}", path.display())))?,
            None => Valuation::new(),
        };
        let mut all = true;
        let mut items = Vec::new();
        for n in &ps {
            let r = eval_result(&s, &e, &n.pattern)
                .map_err(|err| Failure(format!("{}:{}: {err}", file.display(), n.line)))?;
            all &= r.satisfied;
            let fv = n.pattern.free_vars();
            let mut defaulted: Vec<String> = fv
                .element
                .iter()
                .filter(|x| !e.element.contains_key(x))
                .map(|x| format!("x{x}={}", s.element_name(0)))
                .collect();
            defaulted.extend(fv.set.iter().filter(|x| !e.set.contains_key(x)).map(|x| format!("X{x}={{}}")));
            items.push(json!({
                "line": n.line,
                "value": s.names(r.value),
                "satisfied": r.satisfied,
                "defaulted": defaulted,
            }));
            if !self.json {
                let _ = writeln!(out, "line {}: {}", n.line, render_sugar(&n.pattern));
                let _ = writeln!(out, "  value: {}", s.format_set(r.value));
                let _ = writeln!(out, "  satisfied: {}", r.satisfied);
                if !defaulted.is_empty() {
                    let _ = writeln!(out, "  defaulted: {}", defaulted.join(", "));
                }
            }
        }
        if self.json {
            emit_json(out, &Value::Array(items));
        }
        Ok(all)
    }

    fn write_cex(&self, args: &SuiteArgs, tag: &str, s: &Structure, v: &Valuation) -> Result<Value, Failure> {
        let mut info = json!({"valuation": v.describe(s)});
        match &args.cex_dir {
            Some(dir) => {
                fs::create_dir_all(dir).map_err(|e| Failure(format!("{}: {e}", dir.display())))?;
                let model = dir.join(format!("{tag}-model.json"));
                let val = dir.join(format!("{tag}-valuation.json"));
                fs::write(&model, s.to_json() + "\n").map_err(|e| Failure(format!("{}: {e}", model.display())))?;
                fs::write(&val, v.to_json(s) + "\n").map_err(|e| Failure(format!("{}: {e}", val.display())))?;
                info["model_file"] = json!(model.display().to_string());
                info["valuation_file"] = json!(val.display().to_string());
            }
            None => {
                info["model"] = serde_json::to_value(s.to_doc()).expect("model documents serialize");
                info["valuation_doc"] = serde_json::to_value(v.to_doc(s)).expect("valuation documents serialize");
            }
        }
        Ok(info)
    }

    fn describe_cex(out: &mut String, info: &Value) {
        let _ = writeln!(out, "  valuation: {}", info["valuation"].as_str().unwrap_or_default());
        if let Some(m) = info.get("model_file") {
            let _ = writeln!(out, "  model file: {}", m.as_str().unwrap_or_default());
            let _ = writeln!(out, "  valuation file: {}", info["valuation_file"].as_str().unwrap_or_default());
        } else {
            let _ = writeln!(out, "  model: {}", info["model"]);
            let _ = writeln!(out, "  valuation file contents: {}", info["valuation_doc"]);
        }
    }

    fn check(&self, file: &Path, mode: Mode, args: &SuiteArgs, out: &mut String) -> Outcome {
        let ps = self.patterns(file, mode)?;
        let sig = self.suite_signature(ps.iter().map(|n| &n.pattern));
        let suite = self.suite(args, &sig)?;
        let mut all = true;
        let mut items = Vec::new();
        for n in &ps {
            let mut failure = None;
            for (label, s) in &suite {
                let found = falsifying_valuation(s, &n.pattern)
                    .map_err(|e| Failure(format!("{}:{}: {label}: {e}", file.display(), n.line)))?;
                if let Some(v) = found {
                    failure = Some((label.clone(), self.write_cex(args, &format!("line{}", n.line), s, &v)?));
                    break;
                }
            }
            all &= failure.is_none();
            if !self.json {
                match &failure {
                    None => {
                        let _ = writeln!(out, "line {}: valid on all {} structures", n.line, suite.len());
                    }
                    Some((label, info)) => {
                        let _ = writeln!(out, "line {}: NOT VALID on {label}", n.line);
                        Self::describe_cex(out, info);
                    }
                }
            }
            items.push(json!({
                "line": n.line,
                "valid": failure.is_none(),
                "structures": suite.len(),
                "counterexample": failure.map(|(label, info)| json!({"structure": label, "details": info})),
            }));
        }
        if self.json {
            emit_json(out, &Value::Array(items));
        }
        Ok(all)
    }

    fn taut(&self, file: &Path, mode: Mode, out: &mut String) -> Outcome {
        let mut all = true;
        let mut items = Vec::new();
        for n in self.patterns(file, mode)? {
            let t = is_tautology(&n.pattern).map_err(|e| Failure(format!("{}:{}: {e}", file.display(), n.line)))?;
            all &= t;
            if !self.json {
                let verdict = if t { "tautology" } else { "NOT a tautology" };
                let _ = writeln!(out, "line {}: {verdict}", n.line);
            }
            items.push(json!({"line": n.line, "tautology": t}));
        }
        if self.json {
            emit_json(out, &Value::Array(items));
        }
        Ok(all)
    }

    fn consequence(
        &self,
        delta_file: &Path,
        gamma_file: Option<&Path>,
        kind: ConsequenceKind,
        mode: Mode,
        args: &SuiteArgs,
        out: &mut String,
    ) -> Outcome {
        let delta: Vec<Pattern> = self.patterns(delta_file, mode)?.into_iter().map(|n| n.pattern).collect();
        let gamma: Vec<Pattern> = match gamma_file {
            Some(g) => self.patterns(g, mode)?.into_iter().map(|n| n.pattern).collect(),
            None => Vec::new(),
        };
        let sig = self.suite_signature(gamma.iter().chain(&delta));
        let suite = self.suite(args, &sig)?;
        let structures: Vec<Structure> = suite.iter().map(|(_, s)| s.clone()).collect();
        let verdict = consequence(kind, &gamma, &delta, &structures)?;
        let cex = match &verdict.counterexample {
            Some(Counterexample { index, structure, valuation, conclusion }) => Some(json!({
                "structure": suite[*index].0,
                "conclusion": render_sugar(conclusion),
                "details": self.write_cex(args, "consequence", structure, valuation)?,
            })),
            None => None,
        };
        if self.json {
            emit_json(
                out,
                &json!({"kind": kind.to_string(), "holds": verdict.holds, "structures": structures.len(), "counterexample": cex}),
            );
        } else {
            let _ = writeln!(
                out,
                "{kind} consequence {} (relative to a suite of {} structures)",
                if verdict.holds { "holds" } else { "FAILS" },
                structures.len()
            );
            if let Some(c) = &cex {
                let _ = writeln!(
                    out,
                    "  on {}: {}",
                    c["structure"].as_str().unwrap_or_default(),
                    c["conclusion"].as_str().unwrap_or_default()
                );
                Self::describe_cex(out, &c["details"]);
            }
        }
        Ok(verdict.holds)
    }

    fn proof(&self, file: &Path, hyps: &[PathBuf], audit: bool, args: &SuiteArgs, out: &mut String) -> Outcome {
        let text = read(file)?;
        let mut extra = BTreeMap::new();
        for h in hyps {
            let set = parse_hypotheses(&read(h)?, &self.sig).map_err(|e| Failure(format!("{}: {e}", h.display())))?;
            for (name, p) in set {
                if extra.get(&name).is_some_and(|q| *q != p) {
                    return Err(Failure(format!(
                        "{}: hypothesis `{name}` conflicts with another --hyps file",
                        h.display()
                    )));
                }
                extra.insert(name, p);
            }
        }
        let script =
            parse_proof_with(&text, &self.sig, &extra).map_err(|e| Failure(format!("{}: {e}", file.display())))?;
        let report = check_proof(&script);
        let mut ok = report.overall;
        let mut audit_json = Value::Null;
        let mut audit_text = String::new();
        if audit && report.overall {
            let pats: Vec<&Pattern> =
                script.lines.iter().map(|l| &l.pattern).chain(script.hypotheses.values()).collect();
            let sig = self.suite_signature(pats);
            let suite = self.suite(args, &sig)?;
            let structures: Vec<Structure> = suite.iter().map(|(_, s)| s.clone()).collect();
            let a = audit_soundness(&script, &report, &structures)?;
            ok &= a.is_clean();
            let mut violations = Vec::new();
            for v in &a.violations {
                let info = self.write_cex(
                    args,
                    &format!("line{}", v.line),
                    &v.counterexample.structure,
                    &v.counterexample.valuation,
                )?;
                let _ = writeln!(
                    audit_text,
                    "SOUNDNESS BUG: line {} fails {} consequence on {}",
                    v.line, a.kind, suite[v.counterexample.index].0
                );
                Self::describe_cex(&mut audit_text, &info);
                violations.push(json!({"line": v.line, "structure": suite[v.counterexample.index].0, "details": info}));
            }
            let _ = writeln!(
                audit_text,
                "AUDIT: {} violations ({} lines, {} structures, {} consequence)",
                a.violations.len(),
                a.lines_checked,
                a.structures,
                a.kind
            );
            audit_json = json!({"kind": a.kind.to_string(), "lines": a.lines_checked, "structures": a.structures, "violations": violations});
        } else if audit {
            let _ = writeln!(audit_text, "AUDIT: skipped because the script was rejected");
        }
        if self.json {
            let lines: Vec<Value> = report
                .lines
                .iter()
                .map(|v| match &v.result {
                    Ok(()) => json!({"line": v.line, "status": "accepted", "justification": v.justification}),
                    Err(r) => json!({"line": v.line, "status": "rejected", "justification": v.justification, "reason": r.code.as_str(), "detail": r.detail}),
                })
                .collect();
            emit_json(
                out,
                &json!({"lines": lines, "overall": report.overall, "level": report.level.to_string(), "audit": audit_json}),
            );
        } else {
            out.push_str(&report.to_string());
            out.push_str(&audit_text);
        }
        Ok(ok)
    }

    fn gen_models(&self, dir: &Path, args: &SuiteArgs, out: &mut String) -> Outcome {
        let sig = Signature::new(self.sig.constants()).expect("declared constants are valid");
        let suite = self.suite(args, &sig)?;
        fs::create_dir_all(dir).map_err(|e| Failure(format!("{}: {e}", dir.display())))?;
        let width = suite.len().to_string().len().max(4);
        for (i, (_, s)) in suite.iter().enumerate() {
            let path = dir.join(format!("model-{i:0width$}.json"));
            fs::write(&path, s.to_json() + "\n").map_err(|e| Failure(format!("{}: {e}", path.display())))?;
        }
        if self.json {
            emit_json(out, &json!({"written": suite.len(), "dir": dir.display().to_string()}));
        } else {
            let _ = writeln!(out, "wrote {} models to {}", suite.len(), dir.display());
        }
        Ok(true)
    }
}

fn kind_name(k: OccurrenceKind) -> &'static str {
    match k {
        OccurrenceKind::FreeElement => "free-element",
        OccurrenceKind::BoundElement => "bound-element",
        OccurrenceKind::FreeSet => "free-set",
        OccurrenceKind::BoundSet => "bound-set",
        OccurrenceKind::NotAVariable => "-",
    }
}
