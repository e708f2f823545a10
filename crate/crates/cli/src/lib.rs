//! The `artin` command line: a session config, one subcommand per
//! operation, deterministic JSON on standard output.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use artin_core::applications::{ConjectureVerdict, ConjugacyVerdict, Uniqueness};
use artin_core::braid::EqualityOptions;
use artin_core::garside::DEFAULT_LCM_BOUND;
use artin_core::oracle::{NaiveMonoid, MAX_ENUMERATION};
use artin_core::rewrite::RewriteBound;
use artin_core::{Certificate, CoxeterSystem, Error, Gen, GenSet, OracleKind, PositiveBraid, Verdict, WElement, Word};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Map, Value};

/// Environment variable naming the config file when `--config` is absent.
pub const CONFIG_ENV: &str = "ARTIN_CONFIG";

#[derive(Parser, Debug)]
#[command(name = "artin", version, about = "Retractions, normal forms and conjugacy in Artin groups")]
pub struct Cli {
    /// Session config (JSON). Falls back to $ARTIN_CONFIG.
    #[arg(long, global = true, env = CONFIG_ENV)]
    pub config: Option<PathBuf>,
    /// Built-in system instead of a config: A<n>, B<n>, I2(<m>), At<n> (affine A).
    #[arg(long, global = true)]
    pub system: Option<String>,
    /// Longest word allowed in rewrite searches.
    #[arg(long, global = true)]
    pub bound_rewrite: Option<usize>,
    /// Largest λ explored when completing a right-lcm.
    #[arg(long, global = true)]
    pub bound_lcm: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Adds certificates and intermediate data to the output.
    #[arg(long, global = true)]
    pub verbose: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
}

#[derive(Args, Debug)]
pub struct SubsetWord {
    #[arg(short = 'I', value_name = "SUBSET")]
    pub i: String,
    pub word: String,
}

#[derive(Args, Debug)]
pub struct TwoSubsets {
    #[arg(short = 'I', value_name = "SUBSET")]
    pub i: String,
    #[arg(short = 'J', value_name = "SUBSET")]
    pub j: String,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// π_I(b)
    Retract(SubsetWord),
    /// t_I(b) = π_I(b)⁻¹ b
    Tail(SubsetWord),
    /// πʳ_I(b)
    RetractRight(SubsetWord),
    /// tʳ_I(b) = b πʳ_I(b)⁻¹
    TailRight(SubsetWord),
    /// Greedy normal form of a positive word, or the Δ-form over -I.
    NormalForm {
        #[arg(short = 'I', value_name = "SUBSET")]
        i: Option<String>,
        word: String,
    },
    /// Left gcd of two positive words.
    Gcd { a: String, b: String },
    /// Right lcm of two positive words.
    Lcm { a: String, b: String },
    /// Is `a` equal to `b` (default: the empty word)?
    WordProblem {
        #[arg(short = 'I', value_name = "SUBSET")]
        i: Option<String>,
        a: String,
        b: Option<String>,
    },
    /// The representative of B_I b B_J with trivial retractions.
    DoubleCoset {
        #[command(flatten)]
        sets: TwoSubsets,
        word: String,
    },
    /// Reduces ᵇB_J ∩ B_I to a centraliser.
    IntersectReduce {
        #[command(flatten)]
        sets: TwoSubsets,
        word: String,
    },
    /// Bijections J → I induced by I-ribbons-J.
    Ribbons(TwoSubsets),
    /// Conjugacy of a over I and b over J.
    Conjugacy {
        #[command(flatten)]
        sets: TwoSubsets,
        a: String,
        b: String,
    },
    /// A minimal standard parabolic containing a conjugate of b.
    MinParabolic { word: String },
    /// (N⃗(b), pr(b))
    Nmap { word: String },
    /// Tests one instance of the centraliser conjecture.
    CheckConjecture { b: String, p: String },
    /// Brute-force mirrors of the main commands.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Subcommand, Debug)]
pub enum OracleCommand {
    /// All elements of W_I.
    Enumerate {
        #[arg(short = 'I', value_name = "SUBSET")]
        i: Option<String>,
    },
    /// π_I by recomputing every prefix coset from scratch.
    Retract(SubsetWord),
    NormalForm { word: String },
    Gcd { a: String, b: String },
    Lcm { a: String, b: String },
    /// Left divisors of a positive word.
    Divisors { word: String },
    /// Bounded search in the rewrite graph.
    WordProblem { a: String, b: Option<String> },
    /// Ribbon bijections by enumerating W up to a length.
    Ribbons {
        #[command(flatten)]
        sets: TwoSubsets,
        #[arg(long, default_value_t = 12)]
        max_len: usize,
    },
}

/// Bounds read from the config, each overridable by a flag.
#[derive(Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields, default)]
pub struct Bounds {
    pub rewrite_len: usize,
    pub rewrite_nodes: usize,
    pub lcm: usize,
    pub separation_rank: usize,
    /// Word bound for the naive monoid oracle.
    pub naive_len: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        let r = RewriteBound::default();
        Bounds { rewrite_len: r.max_len, rewrite_nodes: r.max_nodes, lcm: DEFAULT_LCM_BOUND, separation_rank: 10, naive_len: 10 }
    }
}

#[derive(Deserialize, Debug, Default)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    generators: Option<Vec<String>>,
    matrix: Option<Vec<Vec<u32>>>,
    /// Path of a Coxeter matrix file, relative to the config.
    coxeter: Option<PathBuf>,
    lambda: Option<Vec<Vec<String>>>,
    #[serde(default)]
    bounds: Bounds,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
struct MatrixFile {
    generators: Option<Vec<String>>,
    matrix: Vec<Vec<u32>>,
}

pub struct Session {
    pub sys: CoxeterSystem,
    /// Declared Λ; `None` admits every subset with a local oracle.
    pub lambda: Option<Vec<GenSet>>,
    pub bounds: Bounds,
}

/// A failure reported as `{"error":{...}}` with exit code 1.
#[derive(Debug)]
pub struct CliError {
    pub kind: String,
    pub message: String,
}

impl CliError {
    fn new(kind: &str, message: impl Into<String>) -> CliError {
        CliError { kind: kind.to_string(), message: message.into() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        let dbg = format!("{e:?}");
        let kind = dbg.split(['(', ' ', '{']).next().unwrap_or("Error").to_string();
        CliError { kind, message: e.to_string() }
    }
}

type CliResult<T> = Result<T, CliError>;

/// What `run` printed and the exit code to use.
pub struct Outcome {
    pub exit_code: i32,
    pub payload: Value,
    pub text: String,
}

impl Outcome {
    fn new(exit_code: i32, payload: Value) -> Outcome {
        let text = serde_json::to_string(&payload).expect("JSON values serialise");
        Outcome { exit_code, payload, text }
    }
}

fn parse_system(spec: &str) -> CliResult<CoxeterSystem> {
    let bad = || CliError::new("Config", format!("unknown system `{spec}`"));
    let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
    let sys = if let Some(m) = spec.strip_prefix("I2(").and_then(|r| r.strip_suffix(')')) {
        CoxeterSystem::dihedral(num(m)? as u32)
    } else if let Some(n) = spec.strip_prefix("At") {
        match num(n)? {
            n if n >= 2 => CoxeterSystem::affine_a(n),
            _ => return Err(bad()),
        }
    } else if let Some(n) = spec.strip_prefix('A') {
        CoxeterSystem::type_a(num(n)?)
    } else if let Some(n) = spec.strip_prefix('B') {
        CoxeterSystem::type_b(num(n)?)
    } else {
        return Err(bad());
    };
    if sys.rank() == 0 {
        return Err(bad());
    }
    Ok(sys)
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> CliResult<T> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::new("Io", format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::new("Config", format!("{}: {e}", path.display())))
}

fn build(generators: Option<Vec<String>>, matrix: Vec<Vec<u32>>) -> CliResult<CoxeterSystem> {
    Ok(match generators {
        Some(names) => CoxeterSystem::new(names, matrix)?,
        None => CoxeterSystem::with_default_names(matrix)?,
    })
}

impl Session {
    pub fn load(cli: &Cli) -> CliResult<Session> {
        let mut file = ConfigFile::default();
        let sys = match (&cli.system, &cli.config) {
            (Some(spec), _) => parse_system(spec)?,
            (None, Some(path)) => {
                file = read_json(path)?;
                match (file.matrix.take(), &file.coxeter) {
                    (Some(m), None) => build(file.generators.take(), m)?,
                    (None, Some(rel)) => {
                        let full = path.parent().unwrap_or(Path::new(".")).join(rel);
                        let mf: MatrixFile = read_json(&full)?;
                        build(mf.generators, mf.matrix)?
                    }
                    _ => return Err(CliError::new("Config", "config needs exactly one of `matrix` and `coxeter`")),
                }
            }
            (None, None) => {
                return Err(CliError::new("Config", format!("no system: pass --config, --system or set {CONFIG_ENV}")))
            }
        };
        let mut bounds = file.bounds;
        if let Some(b) = cli.bound_rewrite {
            bounds.rewrite_len = b;
        }
        if let Some(b) = cli.bound_lcm {
            bounds.lcm = b;
        }
        if bounds.rewrite_len == 0 || bounds.rewrite_nodes == 0 || bounds.lcm == 0 {
            return Err(CliError::new("Config", "bounds must be positive"));
        }
        let lambda = match file.lambda {
            None => None,
            Some(list) => {
                let mut out = Vec::new();
                for names in list {
                    let mut set = GenSet::EMPTY;
                    for n in &names {
                        set = set.with(sys.gen(n)?);
                    }
                    if !sys.has_local_oracle(set) {
                        return Err(CliError::new(
                            "Config",
                            format!("Λ member {{{}}} is neither spherical nor free in each component", sys.format_subset(set)),
                        ));
                    }
                    out.push(set);
                }
                Some(out)
            }
        };
        Ok(Session { sys, lambda, bounds })
    }

    fn opts(&self) -> EqualityOptions {
        EqualityOptions {
            rewrite: RewriteBound { max_len: self.bounds.rewrite_len, max_nodes: self.bounds.rewrite_nodes },
            max_separation_rank: self.bounds.separation_rank,
        }
    }

    fn require_lambda(&self, i: GenSet) -> CliResult<()> {
        let ok = match &self.lambda {
            Some(list) => list.contains(&i),
            None => self.sys.has_local_oracle(i),
        };
        if ok {
            Ok(())
        } else {
            Err(CliError::new("OracleUnavailable", format!("{{{}}} is not in Λ", self.sys.format_subset(i))))
        }
    }
}

/// Hands out words; `-` takes the next nonempty line of standard input.
struct Words<'a> {
    lines: std::str::Lines<'a>,
}

impl Words<'_> {
    fn text(&mut self, arg: &str) -> CliResult<String> {
        if arg != "-" {
            return Ok(arg.to_string());
        }
        loop {
            match self.lines.next() {
                Some(l) if l.trim().is_empty() => continue,
                Some(l) => return Ok(l.trim().to_string()),
                None => return Err(CliError::new("Parse", "standard input has no more words")),
            }
        }
    }
}

struct Ctx<'a> {
    s: &'a Session,
    words: Words<'a>,
    verbose: bool,
}

impl Ctx<'_> {
    fn sys(&self) -> &CoxeterSystem {
        &self.s.sys
    }

    fn word(&mut self, arg: &str) -> CliResult<Word> {
        let t = self.words.text(arg)?;
        Ok(self.s.sys.parse_word(&t)?)
    }

    fn positive(&mut self, arg: &str) -> CliResult<Word> {
        let w = self.word(arg)?;
        if !w.is_positive() {
            return Err(Error::NotPositive.into());
        }
        Ok(w)
    }

    fn subset(&self, text: &str) -> CliResult<GenSet> {
        Ok(self.s.sys.parse_subset(text)?)
    }

    fn fw(&self, w: &Word) -> Value {
        Value::String(self.sys().format_word(w))
    }

    fn fe(&self, w: &WElement) -> Value {
        Value::String(self.sys().format_element(w))
    }

    fn fs(&self, i: GenSet) -> Value {
        Value::Array(i.iter().map(|g| Value::String(self.sys().name(g).to_string())).collect())
    }

    fn gens(&self, w: &[Gen]) -> Value {
        self.fw(&Word::positive(w))
    }

    fn pairs(&self, p: &[(Gen, Gen)]) -> Value {
        let m: Map<String, Value> =
            p.iter().map(|&(a, b)| (self.sys().name(a).to_string(), Value::String(self.sys().name(b).to_string()))).collect();
        Value::Object(m)
    }

    fn factors(&self, b: &PositiveBraid) -> Value {
        Value::Array(b.factors().iter().map(|f| self.fe(f)).collect())
    }

    fn certificate(&self, c: &Certificate) -> Value {
        match c {
            Certificate::Local { subset, kinds } => json!({
                "kind": "local",
                "subset": self.fs(*subset),
                "oracles": kinds.iter().map(|k| match k {
                    OracleKind::Spherical => "spherical",
                    OracleKind::Free => "free",
                }).collect::<Vec<_>>(),
            }),
            Certificate::Projection => json!({"kind": "projection"}),
            Certificate::ExponentSum => json!({"kind": "exponent_sum"}),
            Certificate::Nmap => json!({"kind": "nmap"}),
            Certificate::Retraction { subset } => json!({"kind": "retraction", "subset": self.fs(*subset)}),
            Certificate::Rewrite { steps } => json!({"kind": "rewrite", "steps": steps}),
            Certificate::None => Value::Null,
        }
    }
}

fn verdict(v: Verdict) -> Value {
    Value::String(
        match v {
            Verdict::Equal => "equal",
            Verdict::Distinct => "distinct",
            Verdict::Unknown => "unknown",
        }
        .to_string(),
    )
}

fn checks(list: &[(String, Verdict)]) -> (Value, bool) {
    let m: BTreeMap<String, Value> = list.iter().map(|(k, v)| (k.clone(), verdict(*v))).collect();
    (serde_json::to_value(m).expect("map serialises"), list.iter().any(|(_, v)| *v == Verdict::Unknown))
}

fn decided(payload: Value, unknown: bool) -> (i32, Value) {
    (if unknown { 2 } else { 0 }, payload)
}

fn execute(cx: &mut Ctx, cmd: &Command) -> CliResult<(i32, Value)> {
    let sys = &cx.s.sys;
    Ok(match cmd {
        Command::Retract(a) | Command::Tail(a) | Command::RetractRight(a) | Command::TailRight(a) => {
            let i = cx.subset(&a.i)?;
            let b = cx.word(&a.word)?;
            let r = match cmd {
                Command::Retract(_) => sys.retract_braid(i, &b),
                Command::Tail(_) => sys.tail(i, &b),
                Command::RetractRight(_) => sys.retract_right(i, &b),
                _ => sys.tail_right(i, &b),
            };
            decided(json!({"result": cx.fw(&r)}), false)
        }
        Command::NormalForm { i, word } => {
            let b = cx.word(word)?;
            match i {
                None if b.is_positive() => {
                    let p = sys.positive_from_word(&b)?;
                    decided(json!({"factors": cx.factors(&p)}), false)
                }
                _ => {
                    let i = match i {
                        Some(t) => cx.subset(t)?,
                        None => sys.all(),
                    };
                    if !b.alphabet().is_subset(i) {
                        return Err(Error::Alphabet(format!("word uses letters outside {{{}}}", sys.format_subset(i))).into());
                    }
                    let m = sys.mixed_form(i, &b)?;
                    let f: Vec<Value> = m.factors.iter().map(|x| cx.fe(x)).collect();
                    decided(json!({"inf": m.inf, "factors": f}), false)
                }
            }
        }
        Command::Gcd { a, b } => {
            let (x, y) = (cx.positive(a)?, cx.positive(b)?);
            let g = sys.left_gcd(&sys.positive_from_word(&x)?, &sys.positive_from_word(&y)?);
            decided(json!({"factors": cx.factors(&g)}), false)
        }
        Command::Lcm { a, b } => {
            let (x, y) = (cx.positive(a)?, cx.positive(b)?);
            match sys.right_lcm(&sys.positive_from_word(&x)?, &sys.positive_from_word(&y)?, cx.s.bounds.lcm) {
                Ok(l) => decided(json!({"factors": cx.factors(&l)}), false),
                Err(Error::NoCommonMultiple) => decided(json!({"factors": Value::Null, "reason": "no common right multiple"}), false),
                Err(e) => return Err(e.into()),
            }
        }
        Command::WordProblem { i, a, b } => {
            let x = cx.word(a)?;
            let y = match b {
                Some(b) => cx.word(b)?,
                None => Word::empty(),
            };
            let opts = cx.s.opts();
            let (v, cert) = match i {
                Some(t) => {
                    let i = cx.subset(t)?;
                    if !x.alphabet().union(y.alphabet()).is_subset(i) {
                        return Err(Error::Alphabet(format!("words use letters outside {{{}}}", sys.format_subset(i))).into());
                    }
                    let v = sys.equal_in(i, &x, &y, opts);
                    (v, Value::Null)
                }
                None => {
                    let e = sys.braid_equal(&x, &y, opts);
                    (e.verdict, cx.certificate(&e.certificate))
                }
            };
            let mut out = json!({"verdict": verdict(v)});
            if cx.verbose {
                out["certificate"] = cert;
            }
            decided(out, v == Verdict::Unknown)
        }
        Command::DoubleCoset { sets, word } => {
            let (i, j) = (cx.subset(&sets.i)?, cx.subset(&sets.j)?);
            let b = cx.word(word)?;
            let d = sys.double_coset(i, j, &b, cx.s.opts())?;
            let (uniq, other) = match &d.uniqueness {
                Uniqueness::Unique => ("unique", Value::Null),
                Uniqueness::NotUnique { other } => ("not_unique", cx.fw(other)),
                Uniqueness::Unknown => ("unknown", Value::Null),
            };
            let mut out = json!({
                "b0": cx.fw(&d.b0),
                "w": cx.fe(&d.w),
                "I1": cx.fs(d.i1),
                "J1": cx.fs(d.j1),
                "pairs": cx.pairs(&d.pairs),
                "uniqueness": uniq,
            });
            if !other.is_null() {
                out["other"] = other;
            }
            let list = vec![
                ("pi_I(b0) = 1".to_string(), d.retract_left_trivial),
                ("pi^r_J(b0) = 1".to_string(), d.retract_right_trivial),
                ("decomposition".to_string(), d.decomposition),
            ];
            let (c, unknown) = checks(&list);
            if cx.verbose {
                out["checks"] = c;
                out["b0_other_order"] = cx.fw(&d.b0_other_order);
                out["orders_agree"] = verdict(d.orders_agree);
            }
            decided(out, unknown || d.uniqueness == Uniqueness::Unknown)
        }
        Command::IntersectReduce { sets, word } => {
            let (i, j) = (cx.subset(&sets.i)?, cx.subset(&sets.j)?);
            let b = cx.word(word)?;
            let r = sys.reduce_intersection(i, j, &b, cx.s.opts())?;
            let (c, unknown) = checks(&r.checks);
            let out = json!({
                "conjugator": cx.fw(&r.conjugator),
                "b0": cx.fw(&r.b0),
                "I1": cx.fs(r.i1),
                "J1": cx.fs(r.j1),
                "ribbon": cx.fe(&r.ribbon),
                "pure": cx.fw(&r.pure),
                "I1_finite": r.i1_finite,
                "checks": c,
            });
            decided(out, unknown)
        }
        Command::Ribbons(sets) => {
            let (i, j) = (cx.subset(&sets.i)?, cx.subset(&sets.j)?);
            let (isos, graph) = sys.ribbon_solver(i, j);
            let list: Vec<Value> = isos.iter().map(|r| json!({"map": cx.pairs(&r.map), "witness": cx.fe(&r.witness)})).collect();
            let mut out = json!({"isomorphisms": list});
            if cx.verbose {
                let v: Vec<Value> = graph.vertices.iter().map(|(k, m)| json!({"subset": cx.fs(*k), "map": cx.pairs(m)})).collect();
                let e: Vec<Value> = graph.edges.iter().map(|(a, b, nu)| json!([a, b, cx.fe(nu)])).collect();
                out["graph"] = json!({"vertices": v, "edges": e});
            }
            decided(out, false)
        }
        Command::Conjugacy { sets, a, b } => {
            let (i, j) = (cx.subset(&sets.i)?, cx.subset(&sets.j)?);
            cx.s.require_lambda(i)?;
            cx.s.require_lambda(j)?;
            let (x, y) = (cx.word(a)?, cx.word(b)?);
            let r = sys.conjugacy_reducible(i, j, &x, &y, cx.s.opts())?;
            let (mut out, unknown) = match &r.verdict {
                ConjugacyVerdict::Conjugate { conjugator, verified } => (
                    json!({"verdict": "conjugate", "conjugator": cx.fw(conjugator), "verified": verdict(*verified)}),
                    *verified == Verdict::Unknown,
                ),
                ConjugacyVerdict::NotConjugate { reason } => (json!({"verdict": "not_conjugate", "reason": reason}), false),
            };
            if cx.verbose {
                let forms = |m: &artin_core::applications::MinimalConjugates| {
                    let f: Vec<Value> = m.forms.iter().map(|(w, g)| json!({"form": cx.fw(w), "conjugator": cx.fw(g)})).collect();
                    json!({"length": m.length, "forms": f})
                };
                out["minimal_i"] = forms(&r.minimal_i);
                out["minimal_j"] = forms(&r.minimal_j);
            }
            decided(out, unknown)
        }
        Command::MinParabolic { word } => {
            let b = cx.word(word)?;
            let m = sys.minimal_parabolic(&b)?;
            decided(json!({"support": cx.fs(m.support), "conjugator": cx.fw(&m.conjugator), "form": cx.fw(&m.form)}), false)
        }
        Command::Nmap { word } => {
            let b = cx.word(word)?;
            let (bag, w) = sys.nmap(&b);
            let m: BTreeMap<String, i64> = sys.bag_reflections(&bag).into_iter().map(|(t, k)| (sys.format_element(&t), k)).collect();
            decided(json!({"nmap": m, "pr": cx.fe(&w)}), false)
        }
        Command::CheckConjecture { b, p } => {
            let (x, y) = (cx.word(b)?, cx.word(p)?);
            let r = sys.conjecture_instance_check(&x, &y, cx.s.opts())?;
            let (c, _) = checks(&r.checks);
            let (v, reason) = match &r.verdict {
                ConjectureVerdict::Supporting => ("supporting", Value::Null),
                ConjectureVerdict::Refuting => ("refuting", Value::Null),
                ConjectureVerdict::Unknown => ("unknown", Value::Null),
                ConjectureVerdict::HypothesesNotMet(why) => ("hypotheses_not_met", Value::String(why.clone())),
            };
            let mut out = json!({"verdict": v, "support": cx.fs(r.support), "checks": c});
            if !reason.is_null() {
                out["reason"] = reason;
            }
            decided(out, r.verdict == ConjectureVerdict::Unknown)
        }
        Command::Oracle(o) => oracle(cx, o)?,
    })
}

fn oracle(cx: &mut Ctx, cmd: &OracleCommand) -> CliResult<(i32, Value)> {
    let sys = &cx.s.sys;
    let naive_len = cx.s.bounds.naive_len;
    let naive_words = |w: &[Vec<Gen>]| -> Vec<Value> { w.iter().map(|x| Value::String(sys.format_word(&Word::positive(x)))).collect() };
    Ok(match cmd {
        OracleCommand::Enumerate { i } => {
            let i = match i {
                Some(t) => cx.subset(t)?,
                None => sys.all(),
            };
            let g = sys.enumerate_w(i)?;
            let mut words: Vec<Vec<Gen>> = g.elements.iter().map(|e| sys.element(&e.word).word().to_vec()).collect();
            words.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
            decided(json!({"order": g.len(), "elements": naive_words(&words)}), false)
        }
        OracleCommand::Retract(a) => {
            let i = cx.subset(&a.i)?;
            let b = cx.word(&a.word)?;
            let whole = sys.enumerate_w(sys.all())?;
            let part = sys.enumerate_w(i)?;
            decided(json!({"result": cx.fw(&sys.naive_retract(&whole, &part, &b))}), false)
        }
        OracleCommand::NormalForm { word } => {
            let b = cx.positive(word)?;
            let nf = NaiveMonoid::new(sys, naive_len).normal_form(&b.gens())?;
            decided(json!({"factors": naive_words(&nf)}), false)
        }
        OracleCommand::Gcd { a, b } => {
            let (x, y) = (cx.positive(a)?, cx.positive(b)?);
            let mut m = NaiveMonoid::new(sys, naive_len);
            let g = m.gcd(&x.gens(), &y.gens())?;
            decided(json!({"result": cx.gens(&g)}), false)
        }
        OracleCommand::Lcm { a, b } => {
            let (x, y) = (cx.positive(a)?, cx.positive(b)?);
            let mut m = NaiveMonoid::new(sys, naive_len);
            match m.lcm(&x.gens(), &y.gens(), naive_len)? {
                Some(l) => decided(json!({"result": cx.gens(&l)}), false),
                None => decided(json!({"result": Value::Null}), true),
            }
        }
        OracleCommand::Divisors { word } => {
            let b = cx.positive(word)?;
            let d: Vec<Vec<Gen>> = NaiveMonoid::new(sys, naive_len).divisors(&b.gens())?.into_iter().collect();
            decided(json!({"divisors": naive_words(&d)}), false)
        }
        OracleCommand::WordProblem { a, b } => {
            let x = cx.word(a)?;
            let y = match b {
                Some(b) => cx.word(b)?,
                None => Word::empty(),
            };
            let v = sys.rewrite_equal(&x, &y, cx.s.bounds.rewrite_len, cx.s.bounds.rewrite_nodes);
            decided(json!({"verdict": verdict(v)}), v == Verdict::Unknown)
        }
        OracleCommand::Ribbons { sets, max_len } => {
            let (i, j) = (cx.subset(&sets.i)?, cx.subset(&sets.j)?);
            let maps = sys.ribbon_brute_force(i, j, *max_len)?;
            let list: Vec<Value> = maps.iter().map(|m| json!({"map": cx.pairs(m)})).collect();
            decided(json!({"isomorphisms": list, "max_len": max_len, "cap": MAX_ENUMERATION}), false)
        }
    })
}

fn error_payload(e: &CliError) -> Value {
    json!({"error": {"kind": e.kind, "message": e.message}})
}

/// Runs one invocation; `stdin` feeds the `-` arguments.
pub fn run<I, T>(args: I, stdin: &str) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome { exit_code: 0, payload: Value::Null, text: e.to_string() };
            }
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("").trim_start_matches("error: ").to_string();
            return Outcome::new(1, error_payload(&CliError::new("Usage", first)));
        }
    };
    let result = Session::load(&cli).and_then(|s| {
        let mut cx = Ctx { s: &s, words: Words { lines: stdin.lines() }, verbose: cli.verbose };
        execute(&mut cx, &cli.command)
    });
    match result {
        Ok((code, payload)) => Outcome::new(code, payload),
        Err(e) => Outcome::new(1, error_payload(&e)),
    }
}
