//! Command-line front end. `run` takes the full argument list and returns
//! the exit code with everything meant for stdout and stderr, so the binary
//! and the tests share one code path.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use unipotent::packet::{arthur_packet, bv_packet};
use unipotent::spectral::{psi_sp, same_sp_class, wavefront};
use unipotent::symbol::abar_mp_rank;
use unipotent::{json as js, ArthurParameter, Case, CollapseKind, Error, Family, Label, Orbit, Partition, Scalar, Symbol};

#[derive(Parser, Debug)]
#[command(name = "unipotent", version, about = "Nilpotent orbits, symbols and unipotent packets of complex classical groups")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Print nothing; only the exit code matters.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Operations on a single partition.
    #[command(subcommand)]
    Partition(PartitionOp),
    /// Duality, speciality, induction and enumeration of orbits.
    #[command(subcommand)]
    Orbit(OrbitOp),
    /// Symbol of a good-parity orbit.
    Symbol(OrbitArgs),
    /// Unipotent packet of an orbit of the dual algebra.
    Packet(OrbitArgs),
    /// Computations on an Arthur parameter read from a JSON file.
    #[command(subcommand)]
    Psi(PsiOp),
}

#[derive(Subcommand, Debug)]
enum PartitionOp {
    Transpose {
        #[arg(long)]
        partition: Partition,
    },
    Collapse {
        /// B, C or D.
        #[arg(long)]
        family: CollapseKind,
        #[arg(long)]
        partition: Partition,
    },
}

#[derive(Args, Debug)]
struct OrbitArgs {
    /// Cn, Bn, Dn or Mpn.
    #[arg(long)]
    case: Case,
    /// Comma-separated, weakly decreasing.
    #[arg(long, allow_hyphen_values = true)]
    partition: Partition,
    /// I or II, for very even orbits.
    #[arg(long)]
    label: Option<Label>,
    /// Sp, SoOdd or SoEven; by default read off the case and the total.
    #[arg(long)]
    family: Option<Family>,
}

#[derive(Subcommand, Debug)]
enum OrbitOp {
    Dual(OrbitArgs),
    Special(OrbitArgs),
    Antispecial(OrbitArgs),
    Induce {
        #[command(flatten)]
        orbit: OrbitArgs,
        /// GL factor sizes, comma-separated.
        #[arg(long, value_delimiter = ',')]
        sizes: Vec<usize>,
    },
    Enumerate {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        ambient: usize,
        #[arg(long)]
        special_only: bool,
    },
}

#[derive(Args, Debug)]
struct FileArg {
    #[arg(long)]
    file: PathBuf,
}

#[derive(Subcommand, Debug)]
enum PsiOp {
    Validate(FileArg),
    Infchar(FileArg),
    Packet(FileArg),
    Wavefront(FileArg),
    Sp(FileArg),
    Intersect {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        file2: PathBuf,
    },
}

/// A failure with its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = if matches!(e, Error::Parse(_)) { 1 } else { 2 };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: String) -> Failure {
    Failure { code: 1, message }
}

/// Text and JSON renderings of one result; `code` is nonzero for a
/// negative validation outcome that still produces a report.
struct Report {
    text: String,
    json: Value,
    code: i32,
}

impl Report {
    fn new(text: String, json: Value) -> Report {
        Report { text, json, code: 0 }
    }
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if !e.use_stderr() {
                return (0, text, String::new());
            }
            // well-formed values that fail a mathematical check, like an increasing partition
            let code = match std::error::Error::source(&e).and_then(|s| s.downcast_ref::<Error>()) {
                Some(inner) => Failure::from(inner.clone()).code,
                None => 1,
            };
            return (code, String::new(), text);
        }
    };
    match dispatch(&cli.command) {
        Ok(r) => {
            let out = if cli.quiet {
                String::new()
            } else if cli.json {
                serde_json::to_string(&r.json).expect("json values serialize") + "\n"
            } else {
                r.text
            };
            (r.code, out, String::new())
        }
        Err(f) => (f.code, String::new(), format!("error: {}\n", f.message)),
    }
}

fn dispatch(cmd: &Command) -> Result<Report, Failure> {
    match cmd {
        Command::Partition(op) => partition(op),
        Command::Orbit(op) => orbit(op),
        Command::Symbol(a) => symbol(a),
        Command::Packet(a) => packet(a),
        Command::Psi(op) => psi(op),
    }
}

fn partition(op: &PartitionOp) -> Result<Report, Failure> {
    let p = match op {
        PartitionOp::Transpose { partition } => partition.transpose(),
        PartitionOp::Collapse { family, partition } => partition.collapse(*family)?,
    };
    Ok(Report::new(format!("{p}\n"), js::partition(&p)))
}

fn default_family(case: Case, p: &Partition) -> Family {
    match case {
        Case::Cn | Case::Bn if p.total() % 2 == 1 => Family::SoOdd,
        Case::Cn | Case::Bn | Case::Mpn => Family::Sp,
        Case::Dn => Family::SoEven,
    }
}

fn build_orbit(a: &OrbitArgs) -> Result<Orbit, Failure> {
    let family = a.family.unwrap_or_else(|| default_family(a.case, &a.partition));
    Ok(Orbit::new(family, a.partition.clone(), a.label)?)
}

/// Orbit of the dual algebra of the case.
fn dual_side_orbit(a: &OrbitArgs) -> Result<Orbit, Failure> {
    let family = a.family.unwrap_or(a.case.dual_family());
    Ok(Orbit::new(family, a.partition.clone(), a.label)?)
}

fn orbit_line(o: &Orbit) -> String {
    format!("{} {o}\n", o.family())
}

fn orbit(op: &OrbitOp) -> Result<Report, Failure> {
    match op {
        OrbitOp::Dual(a) => {
            let d = build_orbit(a)?.dual(a.case)?;
            Ok(Report::new(format!("{d}\n"), js::orbit(&d)))
        }
        OrbitOp::Special(a) | OrbitOp::Antispecial(a) => {
            let anti = matches!(op, OrbitOp::Antispecial(_));
            let o = build_orbit(a)?;
            let case = if anti { Case::Mpn } else { a.case };
            let yes = if anti { o.is_antispecial()? } else { o.is_special(case)? };
            let closure = o.special_closure(case)?;
            let word = if anti { "antispecial" } else { "special" };
            let text = if yes {
                format!("{o} is {word}\n")
            } else {
                format!("{o} is not {word}; closure {closure}\n")
            };
            Ok(Report::new(text, json!({ "orbit": js::orbit(&o), word: yes, "closure": js::orbit(&closure) })))
        }
        OrbitOp::Induce { orbit, sizes } => {
            let o = build_orbit(orbit)?.induce(sizes)?;
            Ok(Report::new(format!("{o}\n"), js::orbit(&o)))
        }
        OrbitOp::Enumerate { family, ambient, special_only } => {
            let case = match family {
                Family::Sp => Case::Cn,
                Family::SoOdd => Case::Bn,
                Family::SoEven => Case::Dn,
            };
            let mut list = Vec::new();
            for o in Orbit::enumerate(*family, *ambient) {
                if !special_only || o.is_special(case)? {
                    list.push(o);
                }
            }
            let text: String = list.iter().map(|o| format!("{o}\n")).collect();
            Ok(Report::new(text, Value::Array(list.iter().map(js::orbit).collect())))
        }
    }
}

fn symbol(a: &OrbitArgs) -> Result<Report, Failure> {
    let o = dual_side_orbit(a)?;
    let s = Symbol::of(&o, a.case)?;
    let ps = s.pair_structure();
    let mut text = String::new();
    writeln!(text, "symbol  {s}").unwrap();
    let pairs: Vec<String> = ps
        .pairs
        .iter()
        .map(|p| format!("({},{}){}", p.values.0, p.values.1, if p.equal { "=" } else { "" }))
        .collect();
    writeln!(text, "pairs   {}", pairs.join(" ")).unwrap();
    writeln!(text, "m       {}", s.lusztig_rank()).unwrap();
    if a.case == Case::Mpn {
        writeln!(text, "abar_mp {}", abar_mp_rank(o.partition())?).unwrap();
    }
    Ok(Report::new(text, js::symbol(&s)))
}

fn signs(eps: &[i8]) -> String {
    let v: Vec<String> = eps.iter().map(|e| e.to_string()).collect();
    format!("({})", v.join(","))
}

fn tuple(v: &[Scalar]) -> String {
    let v: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", v.join(","))
}

fn packet(a: &OrbitArgs) -> Result<Report, Failure> {
    let o = dual_side_orbit(a)?;
    let members = bv_packet(&o, a.case)?;
    let mut text = format!("{} {}: {} member{}\n", a.case, o, members.len(), if members.len() == 1 { "" } else { "s" });
    for m in &members {
        writeln!(text, "eps {}  lambda {}  mu {}", signs(&m.eps), tuple(&m.param.lambda), tuple(&m.param.mu)).unwrap();
    }
    Ok(Report::new(text, js::packet(&o, a.case, &members)))
}

/// Reads a parameter file; an optional `"almost_unitary": true` relaxes validation.
fn read_parameter(path: &Path) -> Result<(ArthurParameter, bool), Failure> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let mut v: Value = serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let almost = match v.as_object_mut().and_then(|m| m.remove("almost_unitary")) {
        None => false,
        Some(Value::Bool(b)) => b,
        Some(other) => return Err(usage(format!("almost_unitary must be a boolean, got {other}"))),
    };
    let psi = ArthurParameter::from_json(&v).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    Ok((psi, almost))
}

fn valid_parameter(path: &Path) -> Result<ArthurParameter, Failure> {
    let (psi, almost) = read_parameter(path)?;
    if let Some(v) = psi.validate(almost).first() {
        return Err(Failure { code: 2, message: format!("invalid parameter: {v}") });
    }
    Ok(psi)
}

fn psi(op: &PsiOp) -> Result<Report, Failure> {
    match op {
        PsiOp::Validate(f) => {
            let (psi, almost) = read_parameter(&f.file)?;
            let violations = psi.validate(almost);
            let mut text = format!("{psi}\n");
            if violations.is_empty() {
                text.push_str("valid\n");
            }
            for v in &violations {
                writeln!(text, "invalid: {v}").unwrap();
            }
            let messages: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
            let json = json!({ "parameter": js::parameter(&psi), "valid": violations.is_empty(), "violations": messages });
            Ok(Report { text, json, code: if violations.is_empty() { 0 } else { 2 } })
        }
        PsiOp::Infchar(f) => {
            let psi = valid_parameter(&f.file)?;
            let (l, m) = psi.infinitesimal_character()?;
            let regular = psi.has_regular_infinitesimal_character()?;
            let text = format!("lambda {}\nmu     {}\nregular {regular}\n", tuple(&l), tuple(&m));
            Ok(Report::new(text, json!({ "lambda": js::scalars(&l), "mu": js::scalars(&m), "regular": regular })))
        }
        PsiOp::Packet(f) => {
            let psi = valid_parameter(&f.file)?;
            let pk = arthur_packet(&psi)?;
            let gens: Vec<String> = pk.generators.iter().map(|g| g.to_string()).collect();
            let mut text = format!("{psi}\ngenerators ({})\n", gens.join(","));
            for m in &pk.members {
                let values: Vec<i8> =
                    (0..pk.generators.len()).map(|i| if m.character >> i & 1 == 1 { -1 } else { 1 }).collect();
                match &m.param {
                    Some(p) => writeln!(text, "eta {}  lambda {}  mu {}", signs(&values), tuple(&p.lambda), tuple(&p.mu)),
                    None => writeln!(text, "eta {}  zero", signs(&values)),
                }
                .unwrap();
            }
            Ok(Report::new(text, js::arthur_packet(&psi, &pk)))
        }
        PsiOp::Wavefront(f) => {
            let psi = valid_parameter(&f.file)?;
            let o = wavefront(&psi)?;
            Ok(Report::new(orbit_line(&o), js::orbit(&o)))
        }
        PsiOp::Sp(f) => {
            let psi = valid_parameter(&f.file)?;
            let a = psi_sp(&psi)?;
            let ex: Vec<String> = a.exchangeable.iter().map(|x| x.to_string()).collect();
            let text = format!(
                "psi         {psi}\nu0          {}\nexchange    ({})\nu_sp        {}\npsi_sp      {}\n",
                a.u0,
                ex.join(","),
                a.u_sp,
                a.psi_sp
            );
            Ok(Report::new(text, js::analysis(&psi, &a)))
        }
        PsiOp::Intersect { file, file2 } => {
            let (p1, p2) = (valid_parameter(file)?, valid_parameter(file2)?);
            let same = same_sp_class(&p1, &p2)?;
            let (a1, a2) = (psi_sp(&p1)?, psi_sp(&p2)?);
            let text = format!(
                "psi_sp 1  {}\npsi_sp 2  {}\nsame class: {}\n",
                a1.psi_sp,
                a2.psi_sp,
                if same { "yes (packets may meet)" } else { "no (packets are disjoint)" }
            );
            let json = json!({
                "same_sp_class": same,
                "psi_sp": [js::parameter(&a1.psi_sp), js::parameter(&a2.psi_sp)],
            });
            Ok(Report::new(text, json))
        }
    }
}
