use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use num_traits::Signed;
use serde_json::{json, Value};

use orbring::characters::{character_table_capped, install_character_table};
use orbring::chern_loc::{check_chern_homomorphism, chern_json, Localization};
use orbring::cyclotomic::rational_string;
use orbring::group::EAGER_ORDER_CAP;
use orbring::input::{GroupSpec, RepSpec};
use orbring::logtrace::{age, fw_check, log_trace, twisted_pullback, v_identity_check};
use orbring::rings::{CheckOutcome, GradedAlgebra, Orbifold, RingCheck};
use orbring::{ClassFunction, Cyclotomic, Error, FiniteGroup};

const DEFAULT_TABLE_CAP: usize = orbring::characters::DEFAULT_TABLE_CAP;
const DEFAULT_CLOSURE_CAP: usize = orbring::group::DEFAULT_CLOSURE_CAP;
/// Exhaustive tuple checks run up to this group order; larger groups are
/// sampled.
const EXHAUSTIVE_ORDER: usize = 24;

#[derive(Parser, Debug)]
#[command(
    name = "orbring",
    version,
    about = "Exact inertial products for [V/G] with G finite"
)]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,

    /// Group: `catalog:NAME`, a catalog name, or inline JSON.
    #[arg(long, global = true)]
    group: Option<String>,

    /// Representation: `catalog:NAME`, `zero`, or inline JSON.
    #[arg(long, global = true)]
    rep: Option<String>,

    /// JSON job file; command-line flags take precedence.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Write the JSON result here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Largest order for eager tuple-class tables.
    #[arg(long, global = true)]
    eager_cap: Option<usize>,

    /// Largest order for automatic character tables.
    #[arg(long, global = true)]
    table_cap: Option<usize>,

    /// Largest permutation-group closure.
    #[arg(long, global = true)]
    closure_cap: Option<usize>,
}

#[derive(Subcommand, Debug, Clone)]
enum Command {
    /// Order, classes and centralizers.
    GroupInfo,
    /// Character table.
    Chartable,
    /// Logarithmic trace of one element.
    Logtrace {
        #[arg(long)]
        element: String,
    },
    /// Ages of one element or of every class.
    Age {
        #[arg(long)]
        element: Option<String>,
    },
    /// Twisted pullback of a tuple.
    Obstruction {
        /// Comma-separated elements.
        #[arg(long)]
        tuple: String,
    },
    /// Rational Chow ring of the inertia.
    ChowRing {
        #[arg(long)]
        verify: bool,
    },
    /// K-theory ring of the inertia.
    KRing {
        #[arg(long)]
        verify: bool,
    },
    /// The K ring with V = 0.
    Lusztig {
        #[arg(long)]
        verify: bool,
    },
    /// Pairing matrix (point quotients only).
    Eta {
        #[arg(long, default_value = "chow")]
        mode: String,
    },
    /// Orbifold Chern character of the K-ring basis.
    Chern,
    /// The product on class functions of G.
    StarT,
    /// Run verification checks.
    Verify(VerifyFlags),
}

#[derive(Args, Debug, Clone, Default)]
struct VerifyFlags {
    #[arg(long)]
    associativity: bool,
    #[arg(long)]
    frobenius: bool,
    #[arg(long)]
    fw: bool,
    #[arg(long)]
    nonnegativity: bool,
    #[arg(long)]
    grading: bool,
    #[arg(long)]
    v_identities: bool,
    #[arg(long)]
    rr: bool,
    #[arg(long)]
    multiproduct: bool,
    #[arg(long)]
    all: bool,
}

impl VerifyFlags {
    fn from_names(names: &[String]) -> Result<Self, Failure> {
        let mut f = VerifyFlags::default();
        for n in names {
            match n.as_str() {
                "associativity" => f.associativity = true,
                "frobenius" => f.frobenius = true,
                "fw" => f.fw = true,
                "nonnegativity" => f.nonnegativity = true,
                "grading" => f.grading = true,
                "v-identities" | "v_identities" => f.v_identities = true,
                "rr" => f.rr = true,
                "multiproduct" => f.multiproduct = true,
                "all" => f.all = true,
                other => return Err(Failure::user("parse", format!("unknown check `{other}`"))),
            }
        }
        Ok(f)
    }

    fn any(&self) -> bool {
        self.associativity
            || self.frobenius
            || self.fw
            || self.nonnegativity
            || self.grading
            || self.v_identities
            || self.rr
            || self.multiproduct
    }
}

/// A failed run: exit code plus a structured error object.
struct Failure {
    code: u8,
    kind: &'static str,
    message: String,
}

impl Failure {
    fn user(kind: &'static str, message: String) -> Self {
        Failure {
            code: 1,
            kind,
            message,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let (code, kind) = match &e {
            Error::TheoremViolation(_) => (3, "theorem_violation"),
            Error::Parse(_) => (1, "parse"),
            Error::Invalid(_) => (1, "invalid_input"),
            Error::SizeCap { .. } => (1, "size_cap"),
            Error::UnknownCatalog(_) => (1, "unknown_catalog"),
            Error::CharacterTable(_) => (1, "character_table"),
            Error::DivisionByZero => (1, "division_by_zero"),
        };
        Failure {
            code,
            kind,
            message: e.to_string(),
        }
    }
}

struct Job {
    group: GroupSpec,
    rep: RepSpec,
    command: Command,
    output: Option<PathBuf>,
    eager_cap: usize,
    table_cap: usize,
    closure_cap: usize,
    /// Rows supplied in the config, installed before anything else runs.
    character_table: Option<Vec<Vec<Cyclotomic>>>,
}

fn cyclotomic_from_value(v: &Value) -> Result<Cyclotomic, Failure> {
    match v {
        Value::String(s) => Ok(s.parse()?),
        Value::Number(n) => Ok(n.to_string().parse()?),
        other => {
            serde_json::from_value(other.clone()).map_err(|e| Failure::user("parse", e.to_string()))
        }
    }
}

fn table_from_value(v: &Value) -> Result<Vec<Vec<Cyclotomic>>, Failure> {
    let bad = || Failure::user("parse", "character_table must be an array of rows".into());
    v.as_array()
        .ok_or_else(bad)?
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(bad)?
                .iter()
                .map(cyclotomic_from_value)
                .collect()
        })
        .collect()
}

fn spec_from_value<T>(v: &Value, parse: fn(&str) -> orbring::Result<T>) -> Result<T, Failure> {
    match v {
        Value::String(s) => Ok(parse(s)?),
        other => Ok(parse(&other.to_string())?),
    }
}

fn config_str(config: &Value, key: &str) -> Option<String> {
    config.get(key).and_then(Value::as_str).map(str::to_string)
}

fn config_command(config: &Value) -> Result<Command, Failure> {
    let name = config_str(config, "command")
        .ok_or_else(|| Failure::user("invalid_input", "no command given".into()))?;
    let need = |key: &str| {
        config_str(config, key).ok_or_else(|| {
            Failure::user("invalid_input", format!("command `{name}` needs `{key}`"))
        })
    };
    let verify = config
        .get("verify")
        .and_then(Value::as_bool)
        .unwrap_or(false);
    Ok(match name.as_str() {
        "group-info" => Command::GroupInfo,
        "chartable" => Command::Chartable,
        "logtrace" => Command::Logtrace {
            element: need("element")?,
        },
        "age" => Command::Age {
            element: config_str(config, "element"),
        },
        "obstruction" => Command::Obstruction {
            tuple: need("tuple")?,
        },
        "chow-ring" => Command::ChowRing { verify },
        "k-ring" => Command::KRing { verify },
        "lusztig" => Command::Lusztig { verify },
        "eta" => Command::Eta {
            mode: config_str(config, "mode").unwrap_or_else(|| "chow".into()),
        },
        "chern" => Command::Chern,
        "star-t" => Command::StarT,
        "verify" => {
            let names: Vec<String> = config
                .get("checks")
                .and_then(Value::as_array)
                .map(|a| {
                    a.iter()
                        .filter_map(|x| x.as_str().map(str::to_string))
                        .collect()
                })
                .unwrap_or_else(|| vec!["all".into()]);
            Command::Verify(VerifyFlags::from_names(&names)?)
        }
        other => return Err(Failure::user("parse", format!("unknown command `{other}`"))),
    })
}

fn resolve(cli: Cli) -> Result<Job, Failure> {
    let config: Value = match &cli.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::user("io", format!("{}: {e}", path.display())))?;
            serde_json::from_str(&text).map_err(|e| Failure::user("parse", e.to_string()))?
        }
        None => Value::Null,
    };
    let group = match (&cli.group, config.get("group")) {
        (Some(s), _) => GroupSpec::parse(s)?,
        (None, Some(v)) => spec_from_value(v, GroupSpec::parse)?,
        (None, None) => return Err(Failure::user("invalid_input", "no --group given".into())),
    };
    let rep = match (&cli.rep, config.get("rep")) {
        (Some(s), _) => RepSpec::parse(s)?,
        (None, Some(v)) => spec_from_value(v, RepSpec::parse)?,
        (None, None) => RepSpec::Zero,
    };
    let command = match cli.command {
        Some(c) => c,
        None => config_command(&config)?,
    };
    let cap = |flag: Option<usize>, key: &str, default: usize| {
        flag.or_else(|| {
            config
                .get("caps")
                .and_then(|c| c.get(key))
                .and_then(Value::as_u64)
                .map(|x| x as usize)
        })
        .unwrap_or(default)
    };
    Ok(Job {
        group,
        rep,
        command,
        output: cli
            .output
            .or_else(|| config_str(&config, "output").map(PathBuf::from)),
        eager_cap: cap(cli.eager_cap, "eager", EAGER_ORDER_CAP),
        table_cap: cap(cli.table_cap, "table", DEFAULT_TABLE_CAP),
        closure_cap: cap(cli.closure_cap, "closure", DEFAULT_CLOSURE_CAP),
        character_table: config
            .get("character_table")
            .map(table_from_value)
            .transpose()?,
    })
}

fn values_json(f: &ClassFunction) -> Value {
    json!(f.values().iter().map(|c| c.to_string()).collect::<Vec<_>>())
}

fn parse_tuple(g: &FiniteGroup, s: &str) -> Result<Vec<usize>, Failure> {
    s.split(',')
        .map(|x| g.parse_element(x).map_err(Failure::from))
        .collect()
}

fn group_info(g: &Arc<FiniteGroup>) -> Value {
    let conj = g.conjugacy();
    let classes: Vec<Value> = (0..conj.len())
        .map(|c| {
            let r = conj.representatives[c];
            json!({
                "index": c,
                "representative": r,
                "label": g.label(r),
                "size": conj.class_size(c),
                "element_order": g.element_order(r),
                "centralizer_order": conj.centralizers[c].len(),
                "inverse_class": conj.inverse_class[c],
            })
        })
        .collect();
    json!({
        "order": g.order(),
        "exponent": g.exponent(),
        "family": g.family().map(|f| f.name()),
        "generators": g.generators().iter().map(|(n, e)| json!({"name": n, "element": e})).collect::<Vec<_>>(),
        "classes": classes,
    })
}

fn ring_output(
    o: &Orbifold,
    mut ring: GradedAlgebra,
    verify: bool,
) -> Result<(Value, bool), Failure> {
    let mut passed = true;
    if verify {
        for out in o.verify(&mut ring, &RingCheck::ALL)? {
            passed &= out.passed;
        }
    }
    let mut j = ring.to_json();
    j["sectors"] = json!(o.sectors.to_json());
    Ok((j, passed))
}

/// Tuples of length at most 3 with product 1; exhaustive for small groups,
/// a deterministic stride sample otherwise.
fn closed_tuples(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let n = g.order();
    let step = if n <= EXHAUSTIVE_ORDER {
        1
    } else {
        n / EXHAUSTIVE_ORDER + 1
    };
    let mut out = vec![vec![0]];
    for a in (0..n).step_by(step) {
        out.push(vec![a, g.inv(a)]);
        for b in (0..n).step_by(step) {
            out.push(vec![a, b, g.inv(g.mul(a, b))]);
        }
    }
    out
}

fn verify(o: &Orbifold, flags: &VerifyFlags) -> Result<Vec<CheckOutcome>, Failure> {
    let all = flags.all || !flags.any();
    let g = &o.group;
    let v = &o.rep;
    let mut outcomes = Vec::new();

    let mut ring_checks = Vec::new();
    if all || flags.associativity {
        ring_checks.extend([
            RingCheck::Identity,
            RingCheck::Commutativity,
            RingCheck::Associativity,
        ]);
    }
    if all || flags.grading {
        ring_checks.push(RingCheck::Grading);
    }
    if all || flags.frobenius {
        ring_checks.push(RingCheck::Frobenius);
    }
    if all || flags.multiproduct {
        ring_checks.push(RingCheck::MultiProduct);
    }
    let needs_k = !ring_checks.is_empty() || all || flags.rr;
    let mut chow = o.chow_ring();
    let mut k = if needs_k { Some(o.k_ring()?) } else { None };
    if !ring_checks.is_empty() {
        for out in o.verify(&mut chow, &ring_checks)? {
            outcomes.push(renamed(out, "chow"));
        }
        if let Some(k) = k.as_mut() {
            for out in o.verify(k, &ring_checks)? {
                outcomes.push(renamed(out, "k"));
            }
        }
    }
    if all || flags.rr {
        outcomes.push(check_chern_homomorphism(
            k.as_ref().expect("built above"),
            &chow,
        ));
    }
    if all || flags.fw {
        let mut out = CheckOutcome::new("fw");
        for t in closed_tuples(g) {
            let r = fw_check(v, &t)?;
            out.record(r.holds && r.integral, || format!("{t:?}"));
        }
        outcomes.push(out);
    }
    if all || flags.nonnegativity {
        // building the orbifold already asserted non-negativity of each class
        let mut out = CheckOutcome::new("nonnegativity");
        for (idx, d) in o.doubles.sectors.iter().enumerate() {
            let tw = o.twisted_class(idx);
            out.record(tw.multiplicities.iter().all(|m| !m.is_negative()), || {
                format!("{:?}", d.rep())
            });
            let (a, b) = d.rep();
            if let Some(x) =
                (0..g.order()).find(|&x| (g.conjugate(x, a), g.conjugate(x, b)) != (a, b))
            {
                let other = twisted_pullback(v, &[g.conjugate(x, a), g.conjugate(x, b)])?;
                let moved = tw.class.transport(&tw.centralizer, &other.centralizer, x)?;
                out.record(moved == other.class, || {
                    format!("representative of {:?}", d.rep())
                });
            }
        }
        outcomes.push(out);
        outcomes.push(o.check_symmetries()?);
    }
    if all || flags.v_identities {
        let mut out = CheckOutcome::new("v-identities");
        for t in closed_tuples(g).into_iter().filter(|t| t.len() == 3) {
            let r = v_identity_check(v, [t[0], t[1], t[2]])?;
            out.record(r.holds, || format!("{:?}", r.tuple));
        }
        outcomes.push(out);
    }
    Ok(outcomes)
}

fn renamed(mut out: CheckOutcome, ring: &str) -> CheckOutcome {
    out.name = format!("{ring}-{}", out.name);
    out
}

/// Runs the job, returning the JSON result and whether every check passed.
fn execute(job: &Job) -> Result<(Value, bool), Failure> {
    let g = job.group.build_capped(job.closure_cap)?;
    if let Some(rows) = &job.character_table {
        install_character_table(&g, rows.clone())?;
    }
    character_table_capped(&g, job.table_cap)?;
    let v = job.rep.build(&g)?;
    let orbifold = || Orbifold::with_eager_cap(&g, &v, job.eager_cap);
    let header = |mut body: Value| {
        if let Value::Object(m) = &mut body {
            m.insert("group_order".into(), json!(g.order()));
            m.insert("rep_values".into(), values_json(&v));
        }
        body
    };
    let (body, passed) = match &job.command {
        Command::GroupInfo => (group_info(&g), true),
        Command::Chartable => {
            let t = character_table_capped(&g, job.table_cap)?;
            let conj = g.conjugacy();
            (
                json!({
                    "classes": conj.representatives.iter().map(|&r| g.label(r)).collect::<Vec<_>>(),
                    "class_sizes": (0..conj.len()).map(|c| conj.class_size(c)).collect::<Vec<_>>(),
                    "degrees": t.degrees().iter().map(|d| json!(d.to_string().parse::<u64>().ok())).collect::<Vec<_>>(),
                    "characters": t.irreducibles.iter().map(values_json).collect::<Vec<_>>(),
                }),
                true,
            )
        }
        Command::Logtrace { element } => {
            let x = g.parse_element(element)?;
            let z = g.centralizer_subgroup(&[x]);
            let l = log_trace(&v, x, &z)?;
            (
                json!({
                    "element": x,
                    "label": g.label(x),
                    "order": g.element_order(x),
                    "age": rational_string(&l.age),
                    "centralizer_order": z.order(),
                    "centralizer_classes": z.class_representatives().iter().map(|&r| g.label(r)).collect::<Vec<_>>(),
                    "values": values_json(&l.class.function),
                    "integral": l.class.integral,
                }),
                true,
            )
        }
        Command::Age { element } => match element {
            Some(e) => {
                let x = g.parse_element(e)?;
                (
                    json!({"element": x, "label": g.label(x), "age": rational_string(&age(&v, x))}),
                    true,
                )
            }
            None => {
                let conj = g.conjugacy();
                let ages: Vec<Value> = conj
                    .representatives
                    .iter()
                    .map(|&r| json!({"label": g.label(r), "age": rational_string(&age(&v, r))}))
                    .collect();
                (json!({"ages": ages}), true)
            }
        },
        Command::Obstruction { tuple } => {
            let t = parse_tuple(&g, tuple)?;
            let tw = twisted_pullback(&v, &t)?;
            (
                json!({
                    "tuple": t,
                    "labels": t.iter().map(|&x| g.label(x)).collect::<Vec<_>>(),
                    "centralizer_order": tw.centralizer.order(),
                    "centralizer_classes": tw.centralizer.class_representatives().iter().map(|&r| g.label(r)).collect::<Vec<_>>(),
                    "rank": tw.rank.to_string().parse::<i64>().unwrap_or(0),
                    "multiplicities": tw.multiplicities.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                    "values": values_json(&tw.class),
                }),
                true,
            )
        }
        Command::ChowRing { verify } => {
            let o = orbifold()?;
            let ring = o.chow_ring();
            ring_output(&o, ring, *verify)?
        }
        Command::KRing { verify } => {
            let o = orbifold()?;
            let ring = o.k_ring()?;
            ring_output(&o, ring, *verify)?
        }
        Command::Lusztig { verify } => {
            let zero = ClassFunction::zero(&g);
            let o = Orbifold::with_eager_cap(&g, &zero, job.eager_cap)?;
            let ring = o.k_ring()?;
            ring_output(&o, ring, *verify)?
        }
        Command::Eta { mode } => {
            let o = orbifold()?;
            let ring = match mode.as_str() {
                "chow" => o.chow_ring(),
                "k" => o.k_ring()?,
                other => {
                    return Err(Failure::user(
                        "parse",
                        format!("unknown pairing mode `{other}`"),
                    ))
                }
            };
            let eta = o.eta_pairing(&ring)?;
            (
                json!({
                    "mode": mode,
                    "basis": ring.basis.iter().map(|b| b.name.clone()).collect::<Vec<_>>(),
                    "matrix": eta.to_json(),
                    "symmetric": eta.is_symmetric(),
                }),
                true,
            )
        }
        Command::Chern => {
            let o = orbifold()?;
            let k = o.k_ring()?;
            (
                json!({"sectors": o.sectors.to_json(), "chern": chern_json(&k)}),
                true,
            )
        }
        Command::StarT => {
            let o = orbifold()?;
            let loc = Localization::new(&o)?;
            (loc.star_t_json()?, true)
        }
        Command::Verify(flags) => {
            let o = orbifold()?;
            let outcomes = verify(&o, flags)?;
            let passed = outcomes.iter().all(|x| x.passed);
            (
                json!({
                    "checks": outcomes.iter().map(CheckOutcome::to_json).collect::<Vec<_>>(),
                    "passed": passed,
                }),
                passed,
            )
        }
    };
    Ok((header(body), passed))
}

fn emit_error(f: &Failure) -> ExitCode {
    let obj = json!({"error": {"kind": f.kind, "message": f.message, "exit_code": f.code}});
    eprintln!("{}", serde_json::to_string_pretty(&obj).expect("json"));
    ExitCode::from(f.code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            return emit_error(&Failure::user("usage", e.to_string().trim().to_string()));
        }
    };
    let job = match resolve(cli) {
        Ok(j) => j,
        Err(f) => return emit_error(&f),
    };
    match execute(&job) {
        Ok((value, passed)) => {
            let text = serde_json::to_string_pretty(&value).expect("json") + "\n";
            match &job.output {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, text) {
                        return emit_error(&Failure::user(
                            "io",
                            format!("{}: {e}", path.display()),
                        ));
                    }
                }
                None => print!("{text}"),
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(f) => emit_error(&f),
    }
}
