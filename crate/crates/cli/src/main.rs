//! `logspencer`: batch front end for logarithmic derivations, Spencer
//! complexes and the symbol obstruction.
//!
//! Exit codes: 0 success (including undetermined freeness), 2 input error,
//! 3 internal invariant violation.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use logspencer::envelope::LieRinehart;
use logspencer::frame_file::{FrameFile, LoadedFrame, OperatorsFile};
use logspencer::logderiv::{Divisor, SaitoMode};
use logspencer::poly::{PolyRing, PolyVec};
use logspencer::report::{self, AnalysisOptions, CertificateSummary};
use logspencer::spencer::{self, Connection};
use logspencer::suites;
use logspencer::Error;

#[derive(Parser)]
#[command(name = "logspencer", version, about = "Logarithmic D-modules and Spencer complexes, in exact arithmetic")]
struct Cli {
    #[command(flatten)]
    output: Output,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(multiple = false)]
struct Output {
    /// Emit JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Emit plain text (the default).
    #[arg(long, global = true)]
    text: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Freeness, α's, brackets and optional Koszul and H⁻¹ checks for a divisor.
    Analyze {
        /// Comma-separated variable names, e.g. x,y,z.
        vars: String,
        /// Equation of the divisor.
        h: String,
        /// Frame file whose anchor rows are tried as a Saito basis.
        #[arg(long)]
        frame: Option<PathBuf>,
        /// Also test whether the frame symbols form a regular sequence.
        #[arg(long)]
        koszul: bool,
        /// Accept det = c·h with c(0) ≠ 0 instead of c constant.
        #[arg(long)]
        local: bool,
        /// Operators file for the H⁻¹ certificate.
        #[arg(long)]
        operators: Option<PathBuf>,
        /// Generator subsets tried when no frame file is given.
        #[arg(long, default_value_t = 50)]
        search_bound: usize,
        /// Include wall-clock timings (makes the report non-deterministic).
        #[arg(long)]
        timings: bool,
    },
    /// Kernel membership and symbol obstruction for Σ Qᵢ ⊗ δᵢ.
    SyzygyCheck {
        frame: PathBuf,
        operators: PathBuf,
        /// Also search the bounded image of d⁻² for Q, with operator order ≤ ord(Q)+1
        /// and coefficient degree ≤ this bound.
        #[arg(long)]
        cross_check: Option<u32>,
    },
    /// Generators δᵢ + m αᵢ of the left ideal presenting O(mD).
    Presentation {
        frame: PathBuf,
        #[arg(long, allow_hyphen_values = true, default_value_t = 1)]
        m: i64,
    },
    /// Matrices of the Spencer complex, optionally twisted by O(mD).
    Spencer {
        frame: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        twist: Option<i64>,
        /// Write the complex as JSON to this file.
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Seeded property suites for the enveloping algebra and the appendix identities.
    AppendixCheck {
        frame: PathBuf,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotInSpan | Error::DenominatorEscape { .. } => 3,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

fn invariant_violation(message: impl Into<String>) -> Failure {
    Failure { code: 3, message: message.into() }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| input_error(format!("cannot read {}: {e}", path.display())))
}

fn load_frame(path: &Path, mode: SaitoMode) -> Result<LoadedFrame, Failure> {
    Ok(FrameFile::from_json(&read(path)?)?.load(mode)?)
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

fn combination(coeffs: &[String]) -> String {
    let parts: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| c.as_str() != "0")
        .map(|(k, c)| if c == "1" { format!("δ{}", k + 1) } else { format!("({c})*δ{}", k + 1) })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

fn certificate_text(c: &CertificateSummary) -> String {
    let mut out = format!("kernel: {}\n", c.kernel);
    for col in &c.columns {
        out += &format!("column {}: generators [{}]", col.column, col.generators.join(", "));
        if !col.orders_ok {
            out += "; order check fails\n";
            continue;
        }
        out += &format!(
            "; regular sequence {}; brackets closed {}",
            col.regular_sequence, col.brackets_closed
        );
        match &col.colon {
            Some(colon) => out += &format!("; colon ({})", colon.join(", ")),
            None if col.regular_sequence && col.brackets_closed => out += &format!("; component {} is zero", col.column),
            None => {}
        }
        out += &format!("; certified {}\n", col.certified);
    }
    out + &c.verdict
}

fn analyze(cli: &Cli) -> Result<String, Failure> {
    let Command::Analyze { vars, h, frame, koszul, local, operators, search_bound, timings } = &cli.command else {
        unreachable!()
    };
    let ring = PolyRing::new(vars.split(',').map(str::trim).filter(|s| !s.is_empty()));
    if ring.nvars() == 0 {
        return Err(input_error("no variables"));
    }
    let mode = if *local { SaitoMode::Local } else { SaitoMode::Global };
    let divisor = Divisor::new(ring.parse(h)?)?;
    let rows: Option<Vec<PolyVec>> = match frame {
        Some(path) => {
            let file = FrameFile::from_json(&read(path)?)?;
            if file.variables != ring.names() {
                return Err(input_error("frame file variables differ from the command line"));
            }
            Some(file.anchor.iter().map(|r| r.iter().map(|s| ring.parse(s)).collect()).collect::<Result<_, _>>()?)
        }
        None => None,
    };
    let ops = match operators {
        Some(path) => Some(OperatorsFile::from_json(&read(path)?)?.operators(&ring)?),
        None => None,
    };
    let opts = AnalysisOptions { mode, koszul: *koszul, search_bound: *search_bound, timings: *timings };
    let r = report::analyze(&ring, divisor, rows, ops.as_deref(), &opts)?;
    if cli.output.json {
        return Ok(json(&r));
    }
    let mut out = format!("divisor: {}\nlogarithmic derivation generators: {}\n", r.divisor, r.generators.len());
    out += &format!("freeness: {}", r.freeness.status);
    match (&r.freeness.reason, &r.freeness.cofactor) {
        (Some(reason), _) => out += &format!(" ({reason})\n"),
        (None, Some(c)) => out += &format!(" (det = c·h with c = {c})\n"),
        _ => out += "\n",
    }
    for (i, row) in r.freeness.frame.iter().enumerate() {
        let fields: Vec<String> = row
            .iter()
            .zip(ring.names())
            .filter(|(c, _)| c.as_str() != "0")
            .map(|(c, v)| format!("({c})*d{v}"))
            .collect();
        out += &format!("δ{} = {}\n", i + 1, fields.join(" + "));
    }
    for (i, a) in r.alphas.iter().enumerate() {
        out += &format!("α{} = {a}\n", i + 1);
    }
    for b in &r.brackets {
        out += &format!("[δ{}, δ{}] = {}\n", b.i, b.j, combination(&b.coefficients));
    }
    if let Some(k) = r.koszul {
        out += &format!("koszul: {k}\n");
    }
    if let Some(c) = &r.spencer {
        out += &certificate_text(c);
        out += "\n";
    }
    if let Some(t) = &r.timings {
        for (k, v) in t {
            out += &format!("time {k}: {v} ms\n");
        }
    }
    Ok(out.trim_end().to_string())
}

#[derive(Serialize)]
struct SyzygyOutput {
    #[serde(flatten)]
    certificate: CertificateSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    bounded_image_contains_q: Option<bool>,
}

fn syzygy_check(cli: &Cli) -> Result<String, Failure> {
    let Command::SyzygyCheck { frame, operators, cross_check } = &cli.command else { unreachable!() };
    let loaded = load_frame(frame, SaitoMode::Global)?;
    let q = OperatorsFile::from_json(&read(operators)?)?.operators(&loaded.ring)?;
    let log_frame = loaded.log_frame()?;
    let cert = spencer::h1_certificate(log_frame, &q)?;
    let summary = CertificateSummary::new(&loaded.ring, &cert);
    let searched = match cross_check {
        Some(deg) => {
            let order = q.iter().filter_map(|op| op.order()).max().unwrap_or(0) + 1;
            let found = spencer::bounded_image_search(log_frame, &q, order, *deg)?;
            if found && cert.certified() {
                return Err(invariant_violation("certified Q was found in the bounded image of d⁻²"));
            }
            Some(found)
        }
        None => None,
    };
    if cli.output.json {
        return Ok(json(&SyzygyOutput { certificate: summary, bounded_image_contains_q: searched }));
    }
    let mut out = certificate_text(&summary);
    if let Some(found) = searched {
        out = format!("bounded image search: {}\n{out}", if found { "Q found" } else { "Q not found" });
    }
    Ok(out)
}

fn presentation(cli: &Cli) -> Result<String, Failure> {
    let Command::Presentation { frame, m } = &cli.command else { unreachable!() };
    let loaded = load_frame(frame, SaitoMode::Global)?;
    let log_frame = loaded.log_frame()?;
    let gens = spencer::presentation_omd(log_frame, &loaded.algebra, *m);
    if !spencer::presentation_annihilates(log_frame, &loaded.algebra, *m)? {
        return Err(invariant_violation("a presentation generator does not annihilate h^(-m)"));
    }
    let strings = report::presentation_strings(&loaded.ring, &gens);
    if cli.output.json {
        return Ok(json(&serde_json::json!({ "m": m.to_string(), "generators": strings })));
    }
    Ok(strings.join("\n"))
}

fn spencer_cmd(cli: &Cli) -> Result<String, Failure> {
    let Command::Spencer { frame, twist, export } = &cli.command else { unreachable!() };
    let loaded = load_frame(frame, SaitoMode::Global)?;
    let lr: &LieRinehart = &loaded.algebra;
    let cx = match twist {
        Some(m) => spencer::spencer_complex_twisted(lr, &Connection::omd(&loaded.log_frame()?.alphas(), *m))?,
        None => spencer::spencer_complex(lr),
    };
    let ex = report::export_complex(&loaded.ring, lr, &cx, *twist);
    if !ex.compositions_vanish {
        return Err(invariant_violation("consecutive Spencer differentials do not compose to zero"));
    }
    if let Some(path) = export {
        fs::write(path, json(&ex)).map_err(|e| input_error(format!("cannot write {}: {e}", path.display())))?;
    }
    if cli.output.json {
        return Ok(json(&ex));
    }
    let mut out = String::new();
    for k in 1..=cx.frame_size {
        out += &format!("d^{}:\n", -(k as i64));
        for (name, row) in ex.maps[k - 1].rows.iter().zip(cx.differential(k)) {
            let entries: Vec<String> = row.iter().map(|u| report::format_u(&loaded.ring, u)).collect();
            out += &format!("  {name} ↦ [{}]\n", entries.join(", "));
        }
    }
    out += "compositions vanish: true";
    Ok(out)
}

fn appendix_check(cli: &Cli) -> Result<String, Failure> {
    let Command::AppendixCheck { frame, samples, seed } = &cli.command else { unreachable!() };
    let loaded = load_frame(frame, SaitoMode::Global)?;
    let mut r = suites::run_envelope_suite(&loaded.algebra, *samples, *seed);
    r.extend(suites::run_appendix_suite(&loaded.algebra, *samples, *seed));
    let text = if cli.output.json {
        let rows: Vec<_> = r
            .outcomes
            .iter()
            .map(|o| {
                serde_json::json!({
                    "property": o.name,
                    "samples": o.samples.to_string(),
                    "failures": o.failures.to_string(),
                    "passed": o.passed(),
                })
            })
            .collect();
        json(&serde_json::json!({ "seed": seed.to_string(), "passed": r.passed(), "properties": rows }))
    } else {
        format!("{r}{}", if r.passed() { "all identities pass" } else { "identities FAILED" })
    };
    if !r.passed() {
        return Err(invariant_violation(text));
    }
    Ok(text)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze { .. } => analyze(&cli),
        Command::SyzygyCheck { .. } => syzygy_check(&cli),
        Command::Presentation { .. } => presentation(&cli),
        Command::Spencer { .. } => spencer_cmd(&cli),
        Command::AppendixCheck { .. } => appendix_check(&cli),
    };
    match result {
        Ok(out) => {
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let _ = writeln!(std::io::stdout(), "{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
