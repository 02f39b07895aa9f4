//! Command-line front end: exact checks for CYBE solutions on anticommutative
//! algebras and derivation of the induced Rota-Baxter operators.

use clap::{Args, Parser, Subcommand};
use cybe_rb::algebra::{
    check_anticommutative, check_jacobi, check_malcev, is_simple, load_algebra,
    trace_form, AlgebraSpec, BilinearForm,
};
use cybe_rb::catalog::{catalog_entries, catalog_entry, golden_names, run_golden};
use cybe_rb::double::{build_double, decompose};
use cybe_rb::exactlinalg::{format_scalar, frac, parse_scalar, Matrix, Scalar};
use cybe_rb::rotabaxter::{
    collect_defects, companion, from_r, infer_weight, operator_from_json, operator_to_json,
    LinearOperator, WeightVerdict,
};
use cybe_rb::yangbaxter::{
    cybe_residual, invariance_defect, symmetric_part, tensor_from_json, Tensor2,
};
use cybe_rb::{Error, Result};
use serde::Serialize;
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

#[derive(Parser)]
#[command(
    name = "cybe-rb",
    about = "Exact verification of classical Yang-Baxter solutions and the Rota-Baxter operators they induce",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structure-constant algebra checks
    Algebra {
        #[command(subcommand)]
        command: AlgebraCmd,
    },
    /// Classical Yang-Baxter equation checks
    Cybe {
        #[command(subcommand)]
        command: CybeCmd,
    },
    /// Invariance of the symmetric part of a tensor
    Invariance {
        #[command(subcommand)]
        command: InvarianceCmd,
    },
    /// Rota-Baxter operators: derivation, verification, companions
    Rb {
        #[command(subcommand)]
        command: RbCmd,
    },
    /// Drinfeld double construction and decomposition
    Double {
        #[command(subcommand)]
        command: DoubleCmd,
    },
    /// Built-in algebras and golden pipelines
    Catalog {
        #[command(subcommand)]
        command: CatalogCmd,
    },
}

#[derive(Subcommand)]
enum AlgebraCmd {
    /// Check identities of an algebra given by structure constants
    Check {
        /// Algebra file or `catalog:NAME`
        algebra: String,
        /// Check anticommutativity
        #[arg(long)]
        anticommutative: bool,
        /// Check the Jacobi identity
        #[arg(long)]
        jacobi: bool,
        /// Check the Malcev identity
        #[arg(long)]
        malcev: bool,
        /// Check simplicity
        #[arg(long)]
        simple: bool,
    },
}

#[derive(Subcommand)]
enum CybeCmd {
    /// Check that a tensor solves the classical Yang-Baxter equation
    Check {
        algebra: String,
        /// Tensor file or a catalog family name
        tensor: String,
        /// Parameter binding `name=p/q`; repeatable
        #[arg(long = "param")]
        params: Vec<String>,
    },
}

#[derive(Subcommand)]
enum InvarianceCmd {
    /// Check that the symmetric part of a tensor is invariant
    Check {
        algebra: String,
        tensor: String,
        #[arg(long = "param")]
        params: Vec<String>,
    },
}

#[derive(Args)]
struct RbDeriveArgs {
    algebra: String,
    tensor: String,
    /// `killing`, `trace12`, or a gram-matrix file
    #[arg(long)]
    form: String,
    #[arg(long = "param")]
    params: Vec<String>,
    /// Write the derived operator JSON here
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum RbCmd {
    /// Derive the operator sum form(a_i, .) b_i from a tensor and a form
    Derive(RbDeriveArgs),
    /// Verify the Rota-Baxter identity for an operator
    Verify {
        algebra: String,
        /// Operator file
        operator: String,
        /// Verify at this fixed weight
        #[arg(long, conflicts_with = "infer", allow_hyphen_values = true)]
        weight: Option<String>,
        /// Infer the weight instead
        #[arg(long)]
        infer: bool,
    },
    /// Compute the companion operator -lambda id - R
    Companion {
        algebra: String,
        operator: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum DoubleCmd {
    /// Build the double algebra of (A, r) and decompose it
    Build {
        algebra: String,
        tensor: String,
        #[arg(long = "param")]
        params: Vec<String>,
        /// Write the 2n-dimensional algebra JSON here
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Write the decomposition report JSON here
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// List the built-in algebras and their tensor families
    List,
    /// Run the golden pipeline for one entry, or for all entries
    Golden { name: Option<String> },
}

// ---------------------------------------------------------------------------
// Report plumbing
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct CheckJson {
    name: String,
    pass: bool,
    detail: String,
}

#[derive(Serialize)]
struct Report {
    command: String,
    inputs: BTreeMap<String, String>,
    checks: Vec<CheckJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    weight: Option<String>,
}

impl Report {
    fn new(command: &str) -> Self {
        Report {
            command: command.into(),
            inputs: BTreeMap::new(),
            checks: Vec::new(),
            weight: None,
        }
    }

    fn input(&mut self, key: &str, value: impl Into<String>) {
        self.inputs.insert(key.into(), value.into());
    }

    fn check(&mut self, name: &str, pass: bool, detail: impl Into<String>) {
        self.checks.push(CheckJson {
            name: name.into(),
            pass,
            detail: detail.into(),
        });
    }

    fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// Prints the report and turns it into the process exit code.
    fn finish(self) -> Result<ExitCode> {
        println!("{}", serde_json::to_string_pretty(&self)?);
        Ok(if self.all_pass() {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(1)
        })
    }
}

// ---------------------------------------------------------------------------
// Input resolution
// ---------------------------------------------------------------------------

fn resolve_algebra(spec: &str) -> Result<Arc<AlgebraSpec>> {
    if let Some(name) = spec.strip_prefix("catalog:") {
        let entry = catalog_entry(name).ok_or_else(|| {
            Error::Input(format!(
                "unknown catalog algebra {name:?}; known: {:?}",
                catalog_entries().iter().map(|e| e.name.clone()).collect::<Vec<_>>()
            ))
        })?;
        Ok(entry.algebra)
    } else {
        load_algebra(Path::new(spec))
    }
}

fn parse_params(params: &[String]) -> Result<BTreeMap<String, Scalar>> {
    let mut out = BTreeMap::new();
    for p in params {
        let (name, value) = p
            .split_once('=')
            .ok_or_else(|| Error::Input(format!("--param must be name=value, got {p:?}")))?;
        out.insert(name.to_string(), parse_scalar(value)?);
    }
    Ok(out)
}

/// A tensor argument is either a catalog family name (when the algebra came
/// from the catalog) or a tensor JSON file.
fn resolve_tensor(
    algebra_spec: &str,
    alg: &Arc<AlgebraSpec>,
    tensor: &str,
    params: &[String],
) -> Result<Tensor2> {
    let bindings = parse_params(params)?;
    if let Some(name) = algebra_spec.strip_prefix("catalog:") {
        if let Some(entry) = catalog_entry(name) {
            if let Some(family) = entry.family(tensor) {
                return family.template.instantiate(&bindings);
            }
        }
    }
    let text = std::fs::read_to_string(tensor)?;
    tensor_from_json(alg, &text)?.instantiate(&bindings)
}

fn resolve_form(alg: &Arc<AlgebraSpec>, form: &str) -> Result<BilinearForm> {
    match form {
        "killing" => Ok(trace_form(alg)),
        "trace12" => Ok(trace_form(alg).scale(&frac(1, 12))),
        path => {
            let text = std::fs::read_to_string(path)?;
            // gram-matrix files reuse the operator wire format
            let op = operator_from_json(alg, &text)?;
            BilinearForm::new(alg, op.matrix)
        }
    }
}

fn load_operator(alg: &Arc<AlgebraSpec>, path: &str) -> Result<LinearOperator> {
    let text = std::fs::read_to_string(path)?;
    operator_from_json(alg, &text)
}

fn write_or_print(path: &Option<PathBuf>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => println!("{text}"),
    }
    Ok(())
}

fn matrix_strings(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(format_scalar).collect())
        .collect()
}

// ---------------------------------------------------------------------------
// Subcommand drivers
// ---------------------------------------------------------------------------

fn run_algebra_check(
    algebra: &str,
    anticommutative: bool,
    jacobi: bool,
    malcev: bool,
    simple: bool,
) -> Result<ExitCode> {
    let alg = resolve_algebra(algebra)?;
    let mut report = Report::new("algebra check");
    report.input("algebra", algebra);
    // with no flags, run the two checks every anticommutative algebra in
    // scope must satisfy
    let default = !(anticommutative || jacobi || malcev || simple);
    if anticommutative || default {
        let out = check_anticommutative(&alg);
        report.check("anticommutative", out.pass, out.violations.join("; "));
    }
    if jacobi {
        let out = check_jacobi(&alg);
        report.check("jacobi", out.pass, out.violations.join("; "));
    }
    if malcev || default {
        let out = check_malcev(&alg);
        report.check("malcev", out.pass, out.violations.join("; "));
    }
    if simple {
        report.check("simple", is_simple(&alg), "ideal-closure probe");
    }
    report.finish()
}

fn run_cybe_check(algebra: &str, tensor: &str, params: &[String]) -> Result<ExitCode> {
    let alg = resolve_algebra(algebra)?;
    let r = resolve_tensor(algebra, &alg, tensor, params)?;
    let mut report = Report::new("cybe check");
    report.input("algebra", algebra);
    report.input("tensor", tensor);
    let residual = cybe_residual(&r);
    let detail = if residual.is_zero() {
        "residual zero".to_string()
    } else {
        format!("max |coefficient| = {}", format_scalar(&residual.max_abs()))
    };
    report.check("cybe", residual.is_zero(), detail);
    report.finish()
}

fn run_invariance_check(algebra: &str, tensor: &str, params: &[String]) -> Result<ExitCode> {
    let alg = resolve_algebra(algebra)?;
    let r = resolve_tensor(algebra, &alg, tensor, params)?;
    let mut report = Report::new("invariance check");
    report.input("algebra", algebra);
    report.input("tensor", tensor);
    let defects = invariance_defect(&symmetric_part(&r));
    let bad: Vec<String> = defects
        .iter()
        .enumerate()
        .filter(|(_, d)| !d.is_zero())
        .map(|(i, _)| alg.basis[i].clone())
        .collect();
    report.check(
        "invariance",
        bad.is_empty(),
        if bad.is_empty() {
            "symmetric part is invariant".to_string()
        } else {
            format!("defect at basis elements: {}", bad.join(", "))
        },
    );
    report.finish()
}

fn run_rb_derive(args: &RbDeriveArgs) -> Result<ExitCode> {
    let alg = resolve_algebra(&args.algebra)?;
    let r = resolve_tensor(&args.algebra, &alg, &args.tensor, &args.params)?;
    let form = resolve_form(&alg, &args.form)?;
    let op = from_r(&r, &form)?;
    let rb = infer_weight(&op);
    let mut report = Report::new("rb derive");
    report.input("algebra", args.algebra.clone());
    report.input("tensor", args.tensor.clone());
    report.input("form", args.form.clone());
    report.check(
        "rota-baxter",
        rb.verdict != WeightVerdict::Failed,
        format!("operator written; weight {}", rb.verdict.to_json_string()),
    );
    report.weight = Some(rb.verdict.to_json_string());
    write_or_print(&args.output, &operator_to_json(&op))?;
    report.finish()
}

fn run_rb_verify(
    algebra: &str,
    operator: &str,
    weight: &Option<String>,
    infer: bool,
) -> Result<ExitCode> {
    let alg = resolve_algebra(algebra)?;
    let op = load_operator(&alg, operator)?;
    let mut report = Report::new("rb verify");
    report.input("algebra", algebra);
    report.input("operator", operator);
    match weight {
        Some(w) => {
            let lambda = parse_scalar(w)?;
            let defects = collect_defects(&op, &lambda);
            report.check(
                "rota-baxter",
                defects.is_empty(),
                if defects.is_empty() {
                    format!("identity holds at weight {w}")
                } else {
                    format!("{} defective basis pairs", defects.len())
                },
            );
            report.weight = Some(w.clone());
        }
        None => {
            // --infer is also the default when no weight is given
            let _ = infer;
            let rb = infer_weight(&op);
            report.check(
                "rota-baxter",
                rb.verdict != WeightVerdict::Failed,
                format!("inferred weight {}", rb.verdict.to_json_string()),
            );
            report.weight = Some(rb.verdict.to_json_string());
        }
    }
    report.finish()
}

fn run_rb_companion(
    algebra: &str,
    operator: &str,
    weight: &str,
    output: &Option<PathBuf>,
) -> Result<ExitCode> {
    let alg = resolve_algebra(algebra)?;
    let op = load_operator(&alg, operator)?;
    let lambda = parse_scalar(weight)?;
    let comp = companion(&op, &lambda);
    let mut report = Report::new("rb companion");
    report.input("algebra", algebra);
    report.input("operator", operator);
    report.input("weight", weight);
    let comp_defects = collect_defects(&comp, &lambda);
    report.check(
        "companion",
        comp_defects.is_empty(),
        "companion satisfies the identity at the same weight",
    );
    report.weight = Some(weight.to_string());
    write_or_print(output, &operator_to_json(&comp))?;
    report.finish()
}

#[derive(Serialize)]
struct DecompositionReport {
    command: String,
    inputs: BTreeMap<String, String>,
    checks: Vec<CheckJson>,
    ideal1: Vec<Vec<String>>,
    ideal2: Vec<Vec<String>>,
    phi1: Vec<Vec<String>>,
    phi2: Vec<Vec<String>>,
    psi: Vec<Vec<String>>,
}

fn run_double_build(
    algebra: &str,
    tensor: &str,
    params: &[String],
    output: &Option<PathBuf>,
    report_path: &Option<PathBuf>,
) -> Result<ExitCode> {
    let alg = resolve_algebra(algebra)?;
    let r = resolve_tensor(algebra, &alg, tensor, params)?;
    let d = build_double(&alg, &r)?;
    write_or_print(output, &cybe_rb::algebra::algebra_to_json(&d.spec)?)?;
    let dec = decompose(&d)?;
    let mut checks = Vec::new();
    let n = alg.dim;
    checks.push(CheckJson {
        name: "ideal-dimensions".into(),
        pass: dec.ideal1.len() == n && dec.ideal2.len() == n,
        detail: format!("{} and {}", dec.ideal1.len(), dec.ideal2.len()),
    });
    checks.push(CheckJson {
        name: "eq5-verbatim".into(),
        pass: true,
        detail: format!("holds verbatim: {}", dec.eq5_verbatim),
    });
    checks.push(CheckJson {
        name: "eq6-verbatim".into(),
        pass: true,
        detail: format!("holds verbatim: {}", dec.eq6_verbatim),
    });
    let mut inputs = BTreeMap::new();
    inputs.insert("algebra".to_string(), algebra.to_string());
    inputs.insert("tensor".to_string(), tensor.to_string());
    let rep = DecompositionReport {
        command: "double build".into(),
        inputs,
        checks,
        ideal1: dec
            .ideal1
            .iter()
            .map(|v| v.iter().map(format_scalar).collect())
            .collect(),
        ideal2: dec
            .ideal2
            .iter()
            .map(|v| v.iter().map(format_scalar).collect())
            .collect(),
        phi1: matrix_strings(&dec.phi1),
        phi2: matrix_strings(&dec.phi2),
        psi: matrix_strings(&dec.psi),
    };
    let text = serde_json::to_string_pretty(&rep)?;
    match report_path {
        Some(p) => std::fs::write(p, &text)?,
        None => println!("{text}"),
    }
    let pass = rep.checks.iter().all(|c| c.pass);
    Ok(if pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

#[derive(Serialize)]
struct CatalogListEntry {
    name: String,
    dim: usize,
    basis: Vec<String>,
    families: Vec<String>,
    forms: Vec<String>,
    golden: Vec<String>,
}

fn run_catalog_list() -> Result<ExitCode> {
    let entries: Vec<CatalogListEntry> = catalog_entries()
        .iter()
        .map(|e| CatalogListEntry {
            name: e.name.clone(),
            dim: e.algebra.dim,
            basis: e.algebra.basis.clone(),
            families: e.rfamilies.iter().map(|f| f.name.clone()).collect(),
            forms: e.forms.iter().map(|(n, _)| n.clone()).collect(),
            golden: golden_names()
                .into_iter()
                .filter(|g| g.starts_with(&e.name))
                .collect(),
        })
        .collect();
    println!("{}", serde_json::to_string_pretty(&entries)?);
    Ok(ExitCode::SUCCESS)
}

fn run_catalog_golden(name: &Option<String>) -> Result<ExitCode> {
    let names = match name {
        Some(n) => vec![n.clone()],
        None => golden_names(),
    };
    let mut all_pass = true;
    for n in names {
        let rep = run_golden(&n)?;
        all_pass &= rep.pass;
        let mut report = Report::new("catalog golden");
        report.input("entry", n);
        for c in rep.checks {
            report.checks.push(CheckJson {
                name: c.name,
                pass: c.pass,
                detail: c.detail,
            });
        }
        report.weight = rep.weight;
        println!("{}", serde_json::to_string_pretty(&report)?);
    }
    Ok(if all_pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn dispatch(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Algebra {
            command:
                AlgebraCmd::Check {
                    algebra,
                    anticommutative,
                    jacobi,
                    malcev,
                    simple,
                },
        } => run_algebra_check(&algebra, anticommutative, jacobi, malcev, simple),
        Command::Cybe {
            command: CybeCmd::Check {
                algebra,
                tensor,
                params,
            },
        } => run_cybe_check(&algebra, &tensor, &params),
        Command::Invariance {
            command:
                InvarianceCmd::Check {
                    algebra,
                    tensor,
                    params,
                },
        } => run_invariance_check(&algebra, &tensor, &params),
        Command::Rb { command } => match command {
            RbCmd::Derive(args) => run_rb_derive(&args),
            RbCmd::Verify {
                algebra,
                operator,
                weight,
                infer,
            } => run_rb_verify(&algebra, &operator, &weight, infer),
            RbCmd::Companion {
                algebra,
                operator,
                weight,
                output,
            } => run_rb_companion(&algebra, &operator, &weight, &output),
        },
        Command::Double {
            command:
                DoubleCmd::Build {
                    algebra,
                    tensor,
                    params,
                    output,
                    report,
                },
        } => run_double_build(&algebra, &tensor, &params, &output, &report),
        Command::Catalog { command } => match command {
            CatalogCmd::List => run_catalog_list(),
            CatalogCmd::Golden { name } => run_catalog_golden(&name),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                // a mathematical check refused the input
                Error::CheckFailed(_) => ExitCode::from(1),
                // malformed input, unknown names, I/O trouble
                _ => ExitCode::from(2),
            }
        }
    }
}
