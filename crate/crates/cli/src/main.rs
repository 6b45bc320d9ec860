use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use homlie::factor_set::{extend, factor_set_from_complement};
use homlie::format::{parse_subspace, subspace_strings, AlgebraFile, FactorSetFile, MatrixFile, WitnessFile};
use homlie::isoclinism::{
    iso_search, isoclinic_decide, stem_decompose, verify_isoclinism, Fingerprint, IsoclinismWitness, SearchOptions,
    SearchOutcome, Verdict, DEFAULT_BUDGET,
};
use homlie::{Error, Field, HomLieSuperalgebra};

mod render;

/// Exact computations with Hom-Lie superalgebras stored as JSON files.
#[derive(Parser)]
#[command(name = "homlie", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Report format on stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Read every input over this field instead of the declared one, e.g. `Fp:3`.
    #[arg(long, global = true)]
    field: Option<String>,

    /// Write the constructed object (algebra, factor set or witness) to this file.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Parity, skew-symmetry, Hom-Jacobi, multiplicativity and regularity.
    Check { file: PathBuf },
    /// Center, derived subalgebra, stem flag and isomorphism fingerprint.
    Invariants { file: PathBuf },
    /// Quotient by a graded Hom-ideal.
    Quotient {
        file: PathBuf,
        /// Basis names (`z,c`) or bracketed vectors (`[1,0,0];[0,1,0]`) spanning the ideal.
        #[arg(long)]
        ideal: String,
    },
    /// Direct sum of two algebras.
    Sum { first: PathBuf, second: PathBuf },
    /// Factor set of the center read off a twist-invariant complement.
    Factorset {
        file: PathBuf,
        /// Complement of the center; the deterministic one when omitted.
        #[arg(long)]
        complement: Option<String>,
    },
    /// Central extension defined by a factor-set file.
    Extend { file: PathBuf },
    /// Splits an algebra into a stem part and an abelian part.
    StemDecompose { file: PathBuf },
    /// Verifies a witness or decides isoclinism.
    Isoclinic {
        first: PathBuf,
        second: PathBuf,
        /// Witness file, or `identity`.
        #[arg(long, conflicts_with = "decide", required_unless_present = "decide")]
        witness: Option<String>,
        #[arg(long)]
        decide: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Searches for an isomorphism.
    IsoSearch {
        first: PathBuf,
        second: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
}

const OK: u8 = 0;
const FALSE: u8 = 1;
const INPUT: u8 = 2;
const INCONCLUSIVE: u8 = 3;

struct Failed {
    code: u8,
    message: String,
}

fn input_error(message: impl Into<String>) -> Failed {
    Failed { code: INPUT, message: message.into() }
}

impl From<Error> for Failed {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Format(_) | Error::InvalidAlgebra(_) | Error::FieldMismatch(..) | Error::DimensionMismatch(_) => {
                INPUT
            }
            _ => FALSE,
        };
        let message = match &e {
            Error::Validation { report, .. } => format!("{e} ({})", report.summary()),
            _ => e.to_string(),
        };
        Failed { code, message }
    }
}

struct Outcome {
    code: u8,
    report: Value,
    artifact: Option<String>,
}

type Named = (String, HomLieSuperalgebra);

struct Inputs {
    field: Option<Field>,
}

impl Inputs {
    fn read(&self, path: &Path) -> Result<String, Failed> {
        fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))
    }

    fn algebra_unchecked(&self, path: &Path) -> Result<Named, Failed> {
        let file = AlgebraFile::from_json(&self.read(path)?)?;
        let g = file.to_algebra(self.field)?;
        Ok((file.name, g))
    }

    /// Loads an algebra that must satisfy the Hom-Lie superalgebra axioms.
    fn algebra(&self, path: &Path) -> Result<Named, Failed> {
        let (name, g) = self.algebra_unchecked(path)?;
        let summary = g.check_all();
        if !summary.is_hom_lie() {
            return Err(input_error(format!(
                "{}: not a Hom-Lie superalgebra ({})",
                path.display(),
                summary.combined().summary()
            )));
        }
        Ok((name, g))
    }

    fn pair(&self, a: &Path, b: &Path) -> Result<(Named, Named), Failed> {
        let first = self.algebra(a)?;
        let second = self.algebra(b)?;
        if first.1.field() != second.1.field() {
            return Err(Error::FieldMismatch(first.1.field(), second.1.field()).into());
        }
        Ok((first, second))
    }
}

fn subspace_json(s: &homlie::GradedSubspace) -> Value {
    json!({ "dims": [s.dims().0, s.dims().1], "basis": subspace_strings(s) })
}

fn verdict(ok: bool, yes: &'static str, no: &'static str) -> (u8, &'static str) {
    if ok {
        (OK, yes)
    } else {
        (FALSE, no)
    }
}

fn run(cli: &Cli) -> Result<Outcome, Failed> {
    let field = cli.field.as_deref().map(str::parse::<Field>).transpose().map_err(Failed::from)?;
    let inputs = Inputs { field };
    match &cli.command {
        Command::Check { file } => {
            let (name, g) = inputs.algebra_unchecked(file)?;
            let summary = g.check_all();
            let (code, v) = verdict(summary.is_regular_hom_lie(), "pass", "fail");
            Ok(Outcome {
                code,
                report: json!({
                    "command": "check",
                    "algebra": name,
                    "verdict": v,
                    "hom_lie": summary.is_hom_lie(),
                    "checks": summary,
                }),
                artifact: None,
            })
        }
        Command::Invariants { file } => {
            let (name, g) = inputs.algebra(file)?;
            Ok(Outcome {
                code: OK,
                report: json!({
                    "command": "invariants",
                    "algebra": name,
                    "dims": [g.dims().0, g.dims().1],
                    "center": subspace_json(&g.center()),
                    "derived": subspace_json(&g.derived()),
                    "abelian": g.is_abelian(),
                    "stem": g.is_stem(),
                    "fingerprint": Fingerprint::of(&g),
                }),
                artifact: None,
            })
        }
        Command::Quotient { file, ideal } => {
            let (name, g) = inputs.algebra(file)?;
            let k = parse_subspace(&g, ideal)?;
            let q = g.quotient(&k)?;
            let out = AlgebraFile::from_algebra(&format!("{name}_quotient"), &q.algebra);
            let checks = q.algebra.check_all();
            let (code, v) = verdict(checks.is_hom_lie(), "ok", "invalid-result");
            Ok(Outcome {
                code,
                report: json!({
                    "command": "quotient",
                    "algebra": name,
                    "verdict": v,
                    "ideal": subspace_json(&k),
                    "representatives": subspace_json(&q.complement),
                    "quotient": out,
                    "checks": checks,
                }),
                artifact: Some(out.to_json()),
            })
        }
        Command::Sum { first, second } => {
            let ((n1, g1), (n2, g2)) = inputs.pair(first, second)?;
            let sum = g1.direct_sum(&g2)?;
            let out = AlgebraFile::from_algebra(&format!("{n1}_plus_{n2}"), &sum);
            let checks = sum.check_all();
            let (code, v) = verdict(checks.is_hom_lie(), "ok", "invalid-result");
            Ok(Outcome {
                code,
                report: json!({ "command": "sum", "verdict": v, "sum": out, "checks": checks }),
                artifact: Some(out.to_json()),
            })
        }
        Command::Factorset { file, complement } => {
            let (name, g) = inputs.algebra(file)?;
            let w = complement.as_deref().map(|s| parse_subspace(&g, s)).transpose()?;
            let fc = factor_set_from_complement(&g, w.as_ref())?;
            let out = FactorSetFile::from_factor_set(&name, &fc.factor_set);
            let validity = fc.factor_set.validate().merged(fc.factor_set.multiplicativity_report());
            let (code, v) = verdict(validity.passed(), "ok", "invalid-result");
            Ok(Outcome {
                code,
                report: json!({
                    "command": "factorset",
                    "algebra": name,
                    "verdict": v,
                    "center": subspace_json(&fc.splitting.center),
                    "complement": subspace_json(&fc.splitting.complement),
                    "factor_set": out,
                    "extension": AlgebraFile::from_algebra(&format!("{name}_extension"), &fc.extension.algebra),
                    "pi": MatrixFile::from_matrix(fc.pi.matrix()),
                    "checks": validity,
                }),
                artifact: Some(out.to_json()),
            })
        }
        Command::Extend { file } => {
            let fs_file = FactorSetFile::from_json(&inputs.read(file)?)?;
            let fs = fs_file.to_factor_set(inputs.field)?;
            let ext = extend(&fs)?;
            let out = AlgebraFile::from_algebra(&format!("{}_extension", fs_file.name), &ext.algebra);
            let checks = ext.algebra.check_all();
            let (code, v) = verdict(checks.is_regular_hom_lie(), "ok", "invalid-result");
            Ok(Outcome {
                code,
                report: json!({
                    "command": "extend",
                    "factor_set": fs_file.name,
                    "verdict": v,
                    "extension": out,
                    "center_positions": ext.center_positions(),
                    "quotient_positions": ext.quotient_positions(),
                    "checks": checks,
                }),
                artifact: Some(out.to_json()),
            })
        }
        Command::StemDecompose { file } => {
            let (name, g) = inputs.algebra(file)?;
            let d = stem_decompose(&g)?;
            let stem = AlgebraFile::from_algebra(&format!("{name}_stem"), &d.stem_part);
            let abelian = AlgebraFile::from_algebra(&format!("{name}_abelian"), &d.abelian_part);
            Ok(Outcome {
                code: OK,
                report: json!({
                    "command": "stem-decompose",
                    "algebra": name,
                    "verdict": "ok",
                    "stem": stem,
                    "abelian": abelian,
                    "stem_subspace": subspace_json(&d.stem_subspace),
                    "abelian_subspace": subspace_json(&d.abelian_subspace),
                    "iso": MatrixFile::from_matrix(d.iso.matrix()),
                }),
                artifact: Some(stem.to_json()),
            })
        }
        Command::Isoclinic { first, second, witness, decide, budget } => {
            let ((n1, g1), (n2, g2)) = inputs.pair(first, second)?;
            if *decide {
                decide_isoclinism(&n1, &g1, &n2, &g2, *budget)
            } else {
                let spec = witness.as_deref().expect("clap requires --witness or --decide");
                let wf = if spec == "identity" {
                    WitnessFile::from_witness(&IsoclinismWitness::identity(&g1)?)
                } else {
                    WitnessFile::from_json(&inputs.read(Path::new(spec))?)?
                };
                let w = wf.to_witness(&g1, &g2)?;
                let report = verify_isoclinism(&g1, &g2, &w);
                let (code, v) = verdict(report.passed(), "isoclinic", "not-isoclinic");
                Ok(Outcome {
                    code,
                    report: json!({
                        "command": "isoclinic",
                        "algebras": [n1, n2],
                        "verdict": v,
                        "witness": wf,
                        "failures": report,
                    }),
                    artifact: None,
                })
            }
        }
        Command::IsoSearch { first, second, budget } => {
            let ((n1, g1), (n2, g2)) = inputs.pair(first, second)?;
            let outcome = iso_search(&g1, &g2, &SearchOptions::with_budget(*budget))?;
            let mut report = json!({ "command": "iso-search", "algebras": [n1, n2] });
            let code = search_json(&outcome, &mut report);
            Ok(Outcome { code, report, artifact: None })
        }
    }
}

/// Adds the verdict of an isomorphism search to `report` and returns the exit code.
fn search_json(outcome: &SearchOutcome, report: &mut Value) -> u8 {
    let (code, fields) = match outcome {
        SearchOutcome::Isomorphic(f) => {
            (OK, json!({ "verdict": "isomorphic", "map": MatrixFile::from_matrix(f.matrix()) }))
        }
        SearchOutcome::NotIsomorphic(why) => (FALSE, json!({ "verdict": "not-isomorphic", "reason": why })),
        SearchOutcome::Inconclusive { examined, reason } => {
            (INCONCLUSIVE, json!({ "verdict": "inconclusive", "examined": examined, "reason": reason }))
        }
    };
    if let (Value::Object(r), Value::Object(f)) = (report, fields) {
        r.extend(f);
    }
    code
}

fn decide_isoclinism(
    n1: &str,
    g1: &HomLieSuperalgebra,
    n2: &str,
    g2: &HomLieSuperalgebra,
    budget: u64,
) -> Result<Outcome, Failed> {
    let options = SearchOptions::with_budget(budget);
    let d = isoclinic_decide(g1, g2, &options)?;
    let witness = d.witness.as_ref().map(WitnessFile::from_witness);
    let code = match d.verdict {
        Verdict::Isoclinic => OK,
        Verdict::NotIsoclinic => FALSE,
        Verdict::Inconclusive => INCONCLUSIVE,
    };
    let mut report = json!({
        "command": "isoclinic",
        "algebras": [n1, n2],
        "verdict": d.verdict,
        "reason": d.reason,
        "witness": witness,
        "stems": [
            AlgebraFile::from_algebra(&format!("{n1}_stem"), &d.stems.0.stem_part),
            AlgebraFile::from_algebra(&format!("{n2}_stem"), &d.stems.1.stem_part),
        ],
    });
    let isomorphic = if g1.dims() != g2.dims() {
        json!({ "verdict": "not-isomorphic", "reason": "graded dimensions differ" })
    } else {
        let mut r = json!({});
        search_json(&iso_search(g1, g2, &options)?, &mut r);
        r
    };
    report["isomorphic"] = isomorphic;
    Ok(Outcome { code, report, artifact: witness.map(|w| w.to_json()) })
}

fn emit(format: Format, report: &Value) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(report).expect("serializable")),
        Format::Text => print!("{}", render::text(report)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            if let (Some(path), Some(artifact)) = (&cli.output, &outcome.artifact) {
                if let Err(e) = fs::write(path, artifact) {
                    eprintln!("homlie: {}: {e}", path.display());
                    return ExitCode::from(INPUT);
                }
            }
            emit(cli.format, &outcome.report);
            ExitCode::from(outcome.code)
        }
        Err(f) => {
            let kind = if f.code == INPUT { "input-error" } else { "failed" };
            emit(cli.format, &json!({ "verdict": kind, "error": f.message }));
            eprintln!("homlie: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
