//! Batch front end. Exit codes: 0 pass, 1 fail, 2 usage or input error.
//!
//! Output depends only on the inputs and flags, so repeated runs are
//! byte-identical.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use predual_core::axioms::DEFAULT_BUNDLE;
use predual_core::exemplars::{
    search, window_verdicts, LazyStructure, OmegaPlusTwo, OmegaVariant, RationalIntervals, SearchSpec,
    SearchStatus, Window, WindowVerdict, PROPERTIES,
};
use predual_core::io::{
    self, assignment_value, load_morphism, load_space, load_structure, parse_document, render_json,
    spectrum_value, to_value, Document,
};
use predual_core::morphism::{check_morphism, compose, spectrum_map, vee_closure, MorphismError};
use predual_core::{
    check_axioms, dot, enumerate_spectrum, parse_bundle, roundtrip, spectrum_space, FiniteSpace,
    MorphismDoc, SpaceDoc, SpectrumResult, Structure, StructureDoc, Violation,
};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "predual", version, about = "Spectra, duality and morphisms of finite ≺-semilattices")]
pub struct Cli {
    /// Print a JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Also write a Graphviz diagram to this path.
    #[arg(long, global = true, value_name = "PATH")]
    dot: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the axioms of a structure; passes iff the bundle holds.
    Check {
        file: PathBuf,
        /// Comma-separated axiom names; `predomain` expands to its four parts.
        #[arg(long, default_value = DEFAULT_BUNDLE)]
        bundle: String,
    },
    /// Enumerate the spectrum of a structure.
    Spectrum { file: PathBuf },
    /// Convert a structure to its spectrum space, or a space to its structure.
    Dualize { file: PathBuf },
    /// Run the space → structure → spectrum round trip.
    Roundtrip { file: PathBuf },
    /// Relational morphisms.
    #[command(subcommand)]
    Morphism(MorphismCommand),
    /// Search for a counterexample; fails iff a witness is found.
    Search {
        property: String,
        #[arg(long, default_value_t = 4)]
        max_size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        budget: u64,
    },
    /// Windowed check of an infinite exemplar; fails iff a verdict is FAIL.
    Exemplar {
        name: ExemplarName,
        #[arg(long, default_value_t = 3)]
        window: usize,
        /// Grid denominator for `intervals`.
        #[arg(long, default_value_t = 1)]
        denominator: i64,
    },
}

#[derive(Subcommand, Debug)]
enum MorphismCommand {
    /// Check the morphism conditions.
    Check { file: PathBuf },
    /// Compose two morphisms, first then second.
    Compose { first: PathBuf, second: PathBuf },
    /// The partial map of spectra induced by a morphism.
    SpectrumMap { file: PathBuf },
    /// The ∨-closure of a morphism.
    Vee { file: PathBuf },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ExemplarName {
    OmegaA,
    OmegaB,
    Intervals,
}

/// An error that ends the run with [`EXIT_USAGE`].
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

type Outcome = Result<i32, UsageError>;

struct Ctx<'a> {
    json: bool,
    dot: Option<PathBuf>,
    out: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn text(&mut self, s: &str) {
        self.out.write_all(s.as_bytes()).expect("stdout is writable");
    }

    fn value(&mut self, v: &Value) {
        self.text(&render_json(v));
    }

    fn write_dot(&self, contents: impl FnOnce() -> String) -> Result<(), UsageError> {
        if let Some(path) = &self.dot {
            std::fs::write(path, contents())
                .map_err(|e| UsageError(format!("cannot write {}: {e}", path.display())))?;
        }
        Ok(())
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
            } else {
                let _ = out.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    let mut ctx = Ctx {
        json: cli.json,
        dot: cli.dot,
        out,
    };
    let result = match cli.command {
        Command::Check { file, bundle } => cmd_check(&mut ctx, &file, &bundle),
        Command::Spectrum { file } => cmd_spectrum(&mut ctx, &file),
        Command::Dualize { file } => cmd_dualize(&mut ctx, &file),
        Command::Roundtrip { file } => cmd_roundtrip(&mut ctx, &file),
        Command::Morphism(m) => cmd_morphism(&mut ctx, m, err),
        Command::Search {
            property,
            max_size,
            seed,
            budget,
        } => cmd_search(
            &mut ctx,
            SearchSpec {
                property,
                max_size,
                seed,
                budget,
            },
        ),
        Command::Exemplar {
            name,
            window,
            denominator,
        } => cmd_exemplar(&mut ctx, name, window, denominator),
    };
    match result {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn verdict(pass: bool) -> i32 {
    if pass {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn pass_fail(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "FAIL"
    }
}

fn violation_value(v: &Violation, s: &Structure) -> Value {
    json!({
        "clause": format!("{:?}", v.clause).to_lowercase(),
        "kind": format!("{:?}", v.kind).to_lowercase(),
        "witness": v.render(s),
    })
}

fn cmd_check(ctx: &mut Ctx, file: &Path, bundle: &str) -> Outcome {
    let bundle = parse_bundle(bundle).map_err(UsageError)?;
    let s = load_structure(file)?;
    let report = check_axioms(&s);
    let passes = report.all_pass(&bundle);
    let names: Vec<&str> = bundle.iter().map(|a| a.name()).collect();
    if ctx.json {
        let axioms: Vec<Value> = report
            .results()
            .iter()
            .map(|(a, v)| {
                let mut entry = Map::new();
                entry.insert("name".into(), a.name().into());
                entry.insert("status".into(), if v.is_none() { "pass" } else { "fail" }.into());
                if let Some(v) = v {
                    entry.insert("violation".into(), violation_value(v, &s));
                }
                Value::Object(entry)
            })
            .collect();
        ctx.value(&json!({
            "elements": s.labels(),
            "axioms": axioms,
            "predomain": report.is_predomain(),
            "bundle": names,
            "passes": passes,
        }));
    } else {
        ctx.text(&report.render(&s));
        ctx.text(&format!("bundle {} {}\n", names.join(","), pass_fail(passes)));
    }
    ctx.write_dot(|| dot::hasse(&s))?;
    Ok(verdict(passes))
}

fn point_labels(s: &Structure, sp: &SpectrumResult) -> Vec<String> {
    sp.points.iter().map(|f| s.render(f)).collect()
}

fn spectrum_text(s: &Structure, sp: &SpectrumResult) -> String {
    let mut out = format!("{} points\n", sp.len());
    for (i, f) in sp.points.iter().enumerate() {
        out.push_str(&format!("  #{i} {}\n", s.render(f)));
    }
    for p in s.elements() {
        let members: Vec<String> = predual_core::bits::bits(sp.basic_open(p)).map(|i| format!("#{i}")).collect();
        out.push_str(&format!("  Ŝ_{} = {{{}}}\n", s.label(p), members.join(",")));
    }
    out
}

fn cmd_spectrum(ctx: &mut Ctx, file: &Path) -> Outcome {
    let s = load_structure(file)?;
    let sp = enumerate_spectrum(&s);
    if ctx.json {
        ctx.value(&spectrum_value(&s, &sp));
    } else {
        ctx.text(&spectrum_text(&s, &sp));
    }
    ctx.write_dot(|| dot::specialization(&point_labels(&s, &sp), &sp.topology.specialization()))?;
    Ok(EXIT_PASS)
}

fn cmd_dualize(ctx: &mut Ctx, file: &Path) -> Outcome {
    match parse_document(&io::read_text(file)?)? {
        Document::Structure(s) => match spectrum_space(&s) {
            Ok(space) => {
                ctx.value(&to_value(&SpaceDoc::from_space(&space)));
                ctx.write_dot(|| dot::specialization(space.labels(), &space.topology().specialization()))?;
                Ok(EXIT_PASS)
            }
            Err(e) => {
                ctx.text(&format!("spectrum space: FAIL  {e}\n"));
                Ok(EXIT_FAIL)
            }
        },
        Document::Space(space) => {
            let s = space.structure();
            ctx.value(&to_value(&StructureDoc::from_structure(s)));
            ctx.write_dot(|| dot::hasse(s))?;
            Ok(EXIT_PASS)
        }
    }
}

/// Two points with the same neighbourhoods, if any.
fn indistinguishable(space: &FiniteSpace) -> Option<(usize, usize)> {
    let t = space.topology();
    let m = space.n_points();
    (0..m)
        .flat_map(|x| (x + 1..m).map(move |y| (x, y)))
        .find(|&(x, y)| t.neighbourhood(x) == t.neighbourhood(y))
}

fn cmd_roundtrip(ctx: &mut Ctx, file: &Path) -> Outcome {
    let space = load_space(file)?;
    let rt = roundtrip(&space);
    let recovery = match &rt.point_recovery {
        Ok(r) => r.holds(),
        Err(_) => false,
    };
    let failure = rt.first_failure();
    let witness = indistinguishable(&space)
        .map(|(x, y)| format!("points {} and {} have the same open neighbourhoods", space.labels()[x], space.labels()[y]));
    let checks = [
        ("basis_axioms", rt.basis_axioms.holds()),
        ("point_recovery", recovery),
        ("representation", rt.representation.holds()),
        ("specialization", rt.specialization),
    ];
    if ctx.json {
        let mut v = Map::new();
        for (name, ok) in checks {
            v.insert(name.into(), ok.into());
        }
        v.insert("passes".into(), failure.is_none().into());
        v.insert("first_failure".into(), failure.clone().map_or(Value::Null, Value::from));
        if failure.is_some() {
            v.insert("witness".into(), witness.clone().map_or(Value::Null, Value::from));
        }
        ctx.value(&Value::Object(v));
    } else {
        for (name, ok) in checks {
            ctx.text(&format!("{name:<16} {}\n", pass_fail(ok)));
        }
        match &failure {
            None => ctx.text("roundtrip        pass\n"),
            Some(f) => {
                ctx.text(&format!("roundtrip        FAIL  {f}\n"));
                if let Some(w) = &witness {
                    ctx.text(&format!("witness          {w}\n"));
                }
            }
        }
    }
    ctx.write_dot(|| dot::specialization(space.labels(), &space.topology().specialization()))?;
    Ok(verdict(failure.is_none()))
}

fn cmd_morphism(ctx: &mut Ctx, cmd: MorphismCommand, err: &mut dyn Write) -> Outcome {
    match cmd {
        MorphismCommand::Check { file } => {
            let l = load_morphism(&file)?;
            let report = check_morphism(&l.morphism, &l.source, &l.target);
            if ctx.json {
                let results: Vec<Value> = report
                    .results
                    .iter()
                    .map(|(a, v)| {
                        json!({
                            "name": a.name(),
                            "status": if v.is_none() { "pass" } else { "fail" },
                            "witness": v.as_ref().map(|v| v.render(&l.source, &l.target)),
                        })
                    })
                    .collect();
                ctx.value(&json!({
                    "conditions": results,
                    "is_morphism": report.is_morphism(),
                    "is_join_morphism": report.is_vee_morphism(),
                }));
            } else {
                ctx.text(&report.render(&l.source, &l.target));
                ctx.text(&format!("morphism: {}\n", pass_fail(report.is_morphism())));
            }
            Ok(verdict(report.is_morphism()))
        }
        MorphismCommand::Compose { first, second } => {
            let a = load_morphism(&first)?;
            let b = load_morphism(&second)?;
            if a.target != b.source {
                return Err(UsageError(
                    "target of the first morphism differs from the source of the second".into(),
                ));
            }
            let c = compose(&a.morphism, &b.morphism)?;
            ctx.value(&to_value(&MorphismDoc::from_morphism(&c, &a.source, &b.target)));
            let report = check_morphism(&c, &a.source, &b.target);
            if !report.is_morphism() {
                let _ = err.write_all(report.render(&a.source, &b.target).as_bytes());
            }
            Ok(verdict(report.is_morphism()))
        }
        MorphismCommand::SpectrumMap { file } => {
            let l = load_morphism(&file)?;
            let ss = enumerate_spectrum(&l.source);
            let st = enumerate_spectrum(&l.target);
            match spectrum_map(&l.morphism, &l.source, &l.target, &ss, &st) {
                Ok(map) => {
                    let sl = point_labels(&l.source, &ss);
                    let tl = point_labels(&l.target, &st);
                    ctx.value(&json!({
                        "source_points": sl,
                        "target_points": tl,
                        "map": assignment_value(&sl, &tl, &map.assignment),
                    }));
                    Ok(EXIT_PASS)
                }
                Err(e @ (MorphismError::NotAMorphism { .. } | MorphismError::ImageNotPoint { .. })) => {
                    ctx.text(&format!("spectrum map: FAIL  {e}\n"));
                    Ok(EXIT_FAIL)
                }
                Err(e) => Err(e.into()),
            }
        }
        MorphismCommand::Vee { file } => {
            let l = load_morphism(&file)?;
            let v = vee_closure(&l.morphism, &l.source);
            ctx.value(&to_value(&MorphismDoc::from_morphism(&v, &l.source, &l.target)));
            Ok(EXIT_PASS)
        }
    }
}

fn cmd_search(ctx: &mut Ctx, spec: SearchSpec) -> Outcome {
    let outcome = search(&spec).map_err(|e| {
        let known: Vec<&str> = PROPERTIES.iter().map(|(id, _)| *id).collect();
        UsageError(format!("{e}; known properties: {}", known.join(", ")))
    })?;
    if ctx.json {
        ctx.value(&json!({
            "property": spec.property,
            "max_size": spec.max_size,
            "seed": spec.seed,
            "budget": spec.budget,
            "status": outcome.status.name(),
            "examined": outcome.examined,
            "detail": outcome.detail,
            "witness": outcome.witness.as_ref().map(|w| to_value(&StructureDoc::from_structure(w))),
            "transcript": outcome.transcript,
        }));
    } else {
        ctx.text(&outcome.transcript_text());
    }
    if let Some(w) = &outcome.witness {
        ctx.write_dot(|| dot::hasse(w))?;
    }
    Ok(verdict(outcome.status != SearchStatus::Witness))
}

fn exemplar_report<L: LazyStructure>(ctx: &mut Ctx, lazy: &L, k: usize) -> Outcome {
    let Window { structure: s, .. } = lazy.window(k)?;
    let verdicts = window_verdicts(&s);
    let sp = enumerate_spectrum(&s);
    let spec = sp.topology.specialization();
    let chain = (0..sp.len()).all(|i| (0..sp.len()).all(|j| spec.get(i, j) || spec.get(j, i)));
    let any_fail = verdicts.iter().any(|(_, v)| matches!(v, WindowVerdict::Fail(_)));
    let witness = |v: &WindowVerdict| match v {
        WindowVerdict::Pass => None,
        WindowVerdict::Fail(x) | WindowVerdict::Unknown(x) => Some(x.render(&s)),
    };
    if ctx.json {
        let vs: Vec<Value> = verdicts
            .iter()
            .map(|(a, v)| json!({"name": a.name(), "verdict": v.name().to_lowercase(), "witness": witness(v)}))
            .collect();
        ctx.value(&json!({
            "exemplar": lazy.name(),
            "window": k,
            "structure": to_value(&StructureDoc::from_structure(&s)),
            "verdicts": vs,
            "spectrum": spectrum_value(&s, &sp),
            "spectrum_is_chain": chain,
        }));
    } else {
        ctx.text(&format!("exemplar {} window {k}: {} elements\n", lazy.name(), s.len()));
        ctx.text(&format!("elements {}\n", s.labels().join(" ")));
        for (a, v) in &verdicts {
            match witness(v) {
                None => ctx.text(&format!("{:<20} {}\n", a.name(), v.name())),
                Some(w) => ctx.text(&format!("{:<20} {:<8} {w}\n", a.name(), v.name())),
            }
        }
        ctx.text(&format!(
            "spectrum: {} points, specialization {}\n",
            sp.len(),
            if chain { "is a chain" } else { "is not a chain" }
        ));
    }
    ctx.write_dot(|| dot::hasse(&s))?;
    Ok(verdict(!any_fail))
}

fn cmd_exemplar(ctx: &mut Ctx, name: ExemplarName, k: usize, denominator: i64) -> Outcome {
    match name {
        ExemplarName::OmegaA => exemplar_report(ctx, &OmegaPlusTwo::new(OmegaVariant::A), k),
        ExemplarName::OmegaB => exemplar_report(ctx, &OmegaPlusTwo::new(OmegaVariant::B), k),
        ExemplarName::Intervals => {
            let r = RationalIntervals::new(denominator, k as i64)?;
            exemplar_report(ctx, &r, k)
        }
    }
}
