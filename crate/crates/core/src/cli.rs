//! Command-line front end. [`run`] does all the work so it can be tested
//! without spawning a process.

use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand};

use crate::algebra::{validate_algebra, Algebra};
use crate::error::{Error, Result};
use crate::graded::{assoc_graded_algebra, rees_algebra};
use crate::groebner::{buchberger, GroebnerRecord, DEFAULT_STEP_CAP};
use crate::minimal::{minimal_standard_basis, minimize_presentation};
use crate::module::{FreeModule, ModuleElement, ModuleMonomial};
use crate::resolution::{minimal_filtered_resolution, verify_resolution};
use crate::text::{
    format_algebra, format_matrix_row, format_module_element, format_polynomial, format_resolution,
    parse_algebra, parse_algebra_spec, parse_module, parse_polynomial, parse_resolution,
    ModuleFile,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "pbwres",
    version,
    about = "Gröbner bases and minimal filtered resolutions over solvable polynomial algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the report to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Maximum number of S-pair treatments per Gröbner computation.
    #[arg(long, global = true, default_value_t = DEFAULT_STEP_CAP)]
    step_cap: usize,
    /// Replaces the algebra's `order` line, e.g. `--order "lex priority y x"`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    order: Option<String>,
    /// Replaces the module's `modorder` line, e.g. `--modorder "pot graded"`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    modorder: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the relation table of an algebra file.
    Validate { algebra: PathBuf },
    /// Multiply two polynomials.
    Mul {
        algebra: PathBuf,
        f: String,
        g: String,
    },
    /// Weighted degree of a polynomial.
    Degree { algebra: PathBuf, f: String },
    /// Gröbner basis of the submodule generated by a module file's generators.
    Gb {
        algebra: PathBuf,
        module: PathBuf,
        /// Also print the raw basis, the U and V matrices and the syzygy seeds.
        #[arg(long)]
        track: bool,
    },
    /// Standard basis with filtered degrees.
    Stdbasis {
        algebra: PathBuf,
        module: PathBuf,
        #[arg(long)]
        minimal: bool,
    },
    /// Presentation of the quotient module.
    Present {
        algebra: PathBuf,
        module: PathBuf,
        #[arg(long)]
        minimal: bool,
    },
    /// Associated graded algebra.
    Graded { algebra: PathBuf },
    /// Rees algebra.
    Rees { algebra: PathBuf },
    /// Minimal filtered free resolution of the quotient module.
    Resolve {
        algebra: PathBuf,
        module: PathBuf,
        /// Defaults to the number of generators.
        #[arg(long)]
        max_length: Option<usize>,
    },
    /// Check a resolution file.
    Verify {
        algebra: PathBuf,
        resolution: PathBuf,
    },
}

/// Exit code and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::StepCapExceeded(_)
        | Error::MaxLengthExceeded(_)
        | Error::RewriteCap { .. }
        | Error::MissingTracking => EXIT_CHECK_FAILED,
        _ => EXIT_INPUT,
    }
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

/// Drops every `keyword` line of `text` and appends `keyword value`.
fn override_directive(text: &str, keyword: &str, value: Option<&str>) -> String {
    let Some(value) = value else {
        return text.to_string();
    };
    let mut out: String = text
        .lines()
        .filter(|l| l.split_whitespace().next() != Some(keyword))
        .flat_map(|l| [l, "\n"])
        .collect();
    out.push_str(&format!("{keyword} {value}\n"));
    out
}

fn algebra_text(cli: &Cli, path: &PathBuf) -> Result<String> {
    Ok(override_directive(
        &read(path)?,
        "order",
        cli.order.as_deref(),
    ))
}

fn load_algebra(cli: &Cli, path: &PathBuf) -> Result<Arc<Algebra>> {
    parse_algebra(&algebra_text(cli, path)?)
        .map(Arc::new)
        .map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn load_module(cli: &Cli, algebra: &Arc<Algebra>, path: &PathBuf) -> Result<ModuleFile> {
    let text = override_directive(&read(path)?, "modorder", cli.modorder.as_deref());
    parse_module(algebra, &text).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn nonempty_generators(file: &ModuleFile) -> Result<Vec<ModuleElement>> {
    let gens: Vec<ModuleElement> = file
        .elements()
        .into_iter()
        .filter(|g| !g.is_zero())
        .collect();
    if gens.is_empty() {
        return Err(Error::Input(format!(
            "module {} has no nonzero generators",
            file.name
        )));
    }
    Ok(gens)
}

fn list(
    out: &mut String,
    title: &str,
    module: &FreeModule,
    elems: &[ModuleElement],
    degrees: bool,
) -> Result<()> {
    if elems.is_empty() {
        out.push_str(&format!("{title}: (empty)\n"));
        return Ok(());
    }
    out.push_str(&format!("{title}:\n"));
    for (k, g) in elems.iter().enumerate() {
        let body = format_module_element(module, g);
        if degrees {
            out.push_str(&format!(
                "  g{} [d={}] = {body}\n",
                k + 1,
                module.filtered_degree(g)?
            ));
        } else {
            out.push_str(&format!("  g{} = {body}\n", k + 1));
        }
    }
    Ok(())
}

fn format_monomial_key(module: &FreeModule, m: &ModuleMonomial) -> String {
    format_module_element(
        module,
        &ModuleElement::monomial(m.clone(), crate::Rational::one()),
    )
}

fn tracking(out: &mut String, rec: &GroebnerRecord) -> Result<()> {
    let spec = rec.module.algebra().spec();
    list(out, "raw basis", &rec.module, &rec.basis, false)?;
    let (m, t) = (rec.inputs.len(), rec.basis.len());
    out.push_str(&format!("matrix U: {m} x {t}\n"));
    for (k, row) in rec.u.iter().enumerate() {
        out.push_str(&format!(
            "  row {}: {}\n",
            k + 1,
            format_matrix_row(spec, row)
        ));
    }
    out.push_str(&format!("matrix V: {t} x {m}\n"));
    for (k, row) in rec.v.iter().enumerate() {
        out.push_str(&format!(
            "  row {}: {}\n",
            k + 1,
            format_matrix_row(spec, row)
        ));
    }
    out.push_str(&format!("seeds: {}\n", rec.seeds.len()));
    for (k, s) in rec.seeds.iter().enumerate() {
        out.push_str(&format!(
            "  seed {}: pair {} {} lcm {}\n    quotients: {}\n",
            k + 1,
            s.i + 1,
            s.j + 1,
            format_monomial_key(&rec.module, &s.gamma),
            format_matrix_row(spec, &s.quotients)
        ));
    }
    Ok(())
}

fn dispatch(cli: &Cli) -> Result<(i32, String)> {
    let mut out = String::new();
    let cap = cli.step_cap;
    let code = match &cli.command {
        Command::Validate { algebra } => {
            let spec = parse_algebra_spec(&algebra_text(cli, algebra)?)?;
            let report = validate_algebra(&spec);
            if report.accepted() {
                out.push_str(&format!("algebra {}: accepted\n", spec.name));
                EXIT_OK
            } else {
                out.push_str(&format!("algebra {}: rejected\n", spec.name));
                for v in report.messages() {
                    out.push_str(&format!("  violation: {v}\n"));
                }
                EXIT_CHECK_FAILED
            }
        }
        Command::Mul { algebra, f, g } => {
            let a = load_algebra(cli, algebra)?;
            let f = parse_polynomial(a.spec(), f)?;
            let g = parse_polynomial(a.spec(), g)?;
            out.push_str(&format_polynomial(a.spec(), &a.try_mul(&f, &g)?));
            out.push('\n');
            EXIT_OK
        }
        Command::Degree { algebra, f } => {
            let a = load_algebra(cli, algebra)?;
            let f = parse_polynomial(a.spec(), f)?;
            out.push_str(&format!("{}\n", a.weighted_degree(&f)?));
            EXIT_OK
        }
        Command::Gb {
            algebra,
            module,
            track,
        } => {
            let a = load_algebra(cli, algebra)?;
            let file = load_module(cli, &a, module)?;
            let gens = nonempty_generators(&file)?;
            let rec = buchberger(&file.module, &gens, cap)?;
            list(&mut out, "basis", &file.module, &rec.reduced_basis(), false)?;
            if *track {
                tracking(&mut out, &rec)?;
            }
            EXIT_OK
        }
        Command::Stdbasis {
            algebra,
            module,
            minimal,
        } => {
            let a = load_algebra(cli, algebra)?;
            let file = load_module(cli, &a, module)?;
            let gens = nonempty_generators(&file)?;
            if !file.module.is_graded() {
                return Err(Error::NotGraded);
            }
            let basis = if *minimal {
                minimal_standard_basis(&file.module, &gens, cap)?
            } else {
                buchberger(&file.module, &gens, cap)?.reduced_basis()
            };
            let title = if *minimal {
                "minimal standard basis"
            } else {
                "standard basis"
            };
            list(&mut out, title, &file.module, &basis, true)?;
            EXIT_OK
        }
        Command::Present {
            algebra,
            module,
            minimal,
        } => {
            let a = load_algebra(cli, algebra)?;
            let file = load_module(cli, &a, module)?;
            let gens = nonempty_generators(&file)?;
            if !file.module.is_graded() {
                return Err(Error::NotGraded);
            }
            let basis = buchberger(&file.module, &gens, cap)?.reduced_basis();
            let l0 = &file.module;
            let shifts: Vec<String> = l0.shifts().iter().map(|b| b.to_string()).collect();
            out.push_str(&format!(
                "ambient: rank {} shifts {}\n",
                l0.rank(),
                shifts.join(" ")
            ));
            if *minimal {
                let p = minimize_presentation(l0, &basis)?;
                let kept: Vec<String> = p.retained.iter().map(|c| format!("e{}", c + 1)).collect();
                if kept.is_empty() {
                    out.push_str("retained: (none)\n");
                } else {
                    out.push_str(&format!("retained: {}\n", kept.join(" ")));
                }
                list(&mut out, "relations", l0, &p.reduced, true)?;
            } else {
                list(&mut out, "relations", l0, &basis, true)?;
            }
            EXIT_OK
        }
        Command::Graded { algebra } => {
            let a = load_algebra(cli, algebra)?;
            out.push_str(&format_algebra(&assoc_graded_algebra(a.spec())));
            EXIT_OK
        }
        Command::Rees { algebra } => {
            let a = load_algebra(cli, algebra)?;
            out.push_str(&format_algebra(&rees_algebra(a.spec())));
            EXIT_OK
        }
        Command::Resolve {
            algebra,
            module,
            max_length,
        } => {
            let a = load_algebra(cli, algebra)?;
            let file = load_module(cli, &a, module)?;
            let gens = nonempty_generators(&file)?;
            let max = max_length.unwrap_or(a.n());
            let res = minimal_filtered_resolution(&file.module, &gens, max, cap, &file.name)?;
            out.push_str(&format_resolution(&res));
            let report = verify_resolution(&res)?;
            if report.passed() {
                out.push_str("# verified: all checks pass\n");
                EXIT_OK
            } else {
                for f in &report.failures {
                    out.push_str(&format!("# failed {f}\n"));
                }
                EXIT_CHECK_FAILED
            }
        }
        Command::Verify {
            algebra,
            resolution,
        } => {
            let a = load_algebra(cli, algebra)?;
            let res = parse_resolution(&a, &read(resolution)?)?;
            let r = verify_resolution(&res)?;
            let mark = |b: bool| if b { "pass" } else { "FAIL" };
            out.push_str(&format!("composition: {}\n", mark(r.composition)));
            out.push_str(&format!("exactness: {}\n", mark(r.exactness)));
            out.push_str(&format!("minimality: {}\n", mark(r.minimality)));
            out.push_str(&format!("shifts: {}\n", mark(r.shifts)));
            out.push_str(&format!("length: {}\n", mark(r.length)));
            for f in &r.failures {
                out.push_str(&format!("  {f}\n"));
            }
            out.push_str(&format!("result: {}\n", mark(r.passed())));
            if r.passed() {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            }
        }
    };
    Ok((code, out))
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let (code, text) = match dispatch(&cli) {
        Ok(r) => r,
        Err(e) => {
            return Outcome {
                code: exit_code(&e),
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    };
    match &cli.out {
        Some(path) => match std::fs::write(path, &text) {
            Ok(()) => Outcome {
                code,
                stdout: String::new(),
                stderr: String::new(),
            },
            Err(e) => Outcome {
                code: EXIT_INPUT,
                stdout: String::new(),
                stderr: format!("error: {}: {e}\n", path.display()),
            },
        },
        None => Outcome {
            code,
            stdout: text,
            stderr: String::new(),
        },
    }
}
