//! Command-line front end.
//!
//! Each subcommand prints a JSON [`report::Report`] on stdout. Exit codes:
//! 0 when every check passed, 1 when any check failed, 2 for usage or input
//! errors (message on stderr).

pub mod input;
pub mod report;
pub mod verify;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::blockform::{
    antisym_block_form, factor_invariants_antisym_with, factor_invariants_sym_with, sym_block_form, BlockReport, Blocks,
};
use crate::config::Config;
use crate::decomposition::{classic_split, classify, decompose, decompose_by_projection, SymmetryClass};
use crate::group::cayley_table;
use crate::invariants::{
    char_poly, determinant, perm_poly_with, permanent_with, principal_minor_sums_with, principal_permanent_sums_with,
    rank, trace,
};
use crate::matrix::Matrix;
use crate::orbit::{orbit_size_with, stabilizer_brute_force, stabilizer_elements_with};
use crate::scalar::{self, Scalar};
use crate::signs::{apply_phi, conjugate_by_signature, parse_sign_vector, SignVector};
use input::Format;
use report::{digest, matrix_json, poly_json, scalar_json, Report};

#[derive(Debug, Parser)]
#[command(name = "signconj", version, about = "Exact sign-conjugation toolkit for rational matrices")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Matrix file (CSV, or JSON {"n": .., "entries": [[..]]}).
    #[arg(long)]
    pub matrix: PathBuf,
    /// Input format; inferred from the extension when omitted.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[command(flatten)]
    pub caps: Caps,
}

#[derive(Debug, Args)]
pub struct Caps {
    /// Largest n for permanents.
    #[arg(long, default_value_t = Config::default().permanent_cap)]
    pub perm_cap: usize,
    /// Largest n for permanental polynomials.
    #[arg(long, default_value_t = Config::default().perm_poly_cap)]
    pub permpoly_cap: usize,
    /// Largest n for brute-force orbit enumeration.
    #[arg(long, default_value_t = Config::default().orbit_cap)]
    pub orbit_cap: usize,
    /// Worker threads.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub threads: u32,
}

impl Caps {
    fn config(&self) -> Config {
        Config {
            permanent_cap: self.perm_cap,
            perm_poly_cap: self.permpoly_cap,
            orbit_cap: self.orbit_cap,
            threads: self.threads as usize,
            ..Config::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BlockKind {
    Auto,
    Sym,
    Antisym,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Apply the sign map to a matrix.
    Apply {
        #[command(flatten)]
        common: Common,
        /// Sign vector, e.g. "1,1,-1".
        #[arg(long, allow_hyphen_values = true)]
        signs: String,
    },
    /// Trace, determinant, permanent, rank and both polynomials.
    Invariants {
        #[command(flatten)]
        common: Common,
    },
    /// Split into the parts fixed and negated by a sign map, or the
    /// transpose split with --classic.
    Decompose {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true, required_unless_present = "classic", conflicts_with = "classic")]
        signs: Option<String>,
        #[arg(long)]
        classic: bool,
    },
    /// Block form of a matrix fixed or negated by a sign map.
    Blockform {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        signs: String,
        /// Which form to expect; `auto` picks from the classification.
        #[arg(long, value_enum, default_value_t = BlockKind::Auto)]
        kind: BlockKind,
    },
    /// Components, orbit and stabilizer sizes.
    Orbit {
        #[command(flatten)]
        common: Common,
    },
    /// Cayley table of the group of sign maps.
    Cayley {
        #[arg(long)]
        n: usize,
    },
    /// Check every applicable identity on a matrix.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Check this many random sign vectors instead of all of them.
        #[arg(long)]
        samples: Option<usize>,
        /// Seed for --samples.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Process entry point; returns the exit code.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

/// Parses `argv` (including the program name), runs the command, and writes
/// the report to `out`.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(report) => {
            let (ok, text) = report.finish();
            if out.write_all(text.as_bytes()).is_err() {
                return 2;
            }
            if ok {
                0
            } else {
                1
            }
        }
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn load(common: &Common, report: &mut Report) -> Result<Matrix, String> {
    let m = input::read_matrix(&common.matrix, common.format)?;
    report.input_digest = Some(digest(&m));
    report.option("matrix", common.matrix.display());
    let cfg = common.caps.config();
    report.option("perm_cap", cfg.permanent_cap);
    report.option("permpoly_cap", cfg.perm_poly_cap);
    report.option("orbit_cap", cfg.orbit_cap);
    report.option("threads", cfg.threads);
    Ok(m)
}

fn square(m: &Matrix) -> Result<usize, String> {
    m.square_dim().map_err(|e| e.to_string())
}

fn signs_for(text: &str, n: usize, report: &mut Report) -> Result<SignVector, String> {
    let c = parse_sign_vector(text).map_err(|e| format!("--signs: {e}"))?;
    if c.len() != n {
        return Err(format!("--signs has length {}, matrix is {n}x{n}", c.len()));
    }
    report.option("signs", &c);
    Ok(c)
}

fn execute(cmd: &Command) -> Result<Report, String> {
    let lib = |e: crate::Error| e.to_string();
    match cmd {
        Command::Apply { common, signs } => {
            let mut r = Report::new("apply");
            let a = load(common, &mut r)?;
            let c = signs_for(signs, square(&a)?, &mut r)?;
            let phi = apply_phi(&a, &c).map_err(lib)?;
            r.result("phi", matrix_json(&phi));
            let conj = conjugate_by_signature(&a, &c).map_err(lib)?;
            r.check("conjugation.matrix_form", Some(c.to_string()), &phi, &conj, matrix_json);
            Ok(r)
        }
        Command::Invariants { common } => {
            let mut r = Report::new("invariants");
            let a = load(common, &mut r)?;
            invariants(&a, &common.caps.config(), &mut r).map_err(lib)?;
            Ok(r)
        }
        Command::Decompose { common, signs, classic } => {
            let mut r = Report::new("decompose");
            let a = load(common, &mut r)?;
            let n = square(&a)?;
            match signs {
                Some(s) if !classic => {
                    let c = signs_for(s, n, &mut r)?;
                    decompose_signs(&a, &c, &common.caps.config(), &mut r).map_err(lib)?;
                }
                _ => {
                    r.option("classic", true);
                    decompose_classic(&a, &common.caps.config(), &mut r).map_err(lib)?;
                }
            }
            Ok(r)
        }
        Command::Blockform { common, signs, kind } => {
            let mut r = Report::new("blockform");
            let a = load(common, &mut r)?;
            let c = signs_for(signs, square(&a)?, &mut r)?;
            r.option("kind", format!("{kind:?}").to_lowercase());
            blockform(&a, &c, *kind, &common.caps.config(), &mut r).map_err(lib)?;
            Ok(r)
        }
        Command::Orbit { common } => {
            let mut r = Report::new("orbit");
            let a = load(common, &mut r)?;
            square(&a)?;
            orbit(&a, &common.caps.config(), &mut r).map_err(lib)?;
            Ok(r)
        }
        Command::Cayley { n } => {
            let mut r = Report::new("cayley");
            r.option("n", n);
            let table = cayley_table(*n).map_err(lib)?;
            let names: Vec<String> = table.order.iter().map(ToString::to_string).collect();
            let cells: Vec<Vec<String>> =
                table.cells.iter().map(|row| row.iter().map(ToString::to_string).collect()).collect();
            let bits: Vec<String> = table.order.iter().map(|g| g.bit_string()).collect();
            r.result("order", json!(names));
            r.result("bits", json!(bits));
            r.result("table", json!(cells));
            r.result("text", json!(render_table(&names, &cells)));
            let sym = (0..table.len()).all(|i| (0..table.len()).all(|j| table.cells[i][j] == table.cells[j][i]));
            r.check_raw("cayley.symmetric", None, sym, json!(sym), json!(true));
            let id = table.order.last().cloned().expect("table has the identity");
            let diag_ok = (0..table.len()).all(|i| table.cells[i][i] == id);
            r.check_raw("cayley.diagonal_identity", None, diag_ok, json!(diag_ok), json!(true));
            Ok(r)
        }
        Command::Verify { common, samples, seed } => {
            let mut r = Report::new("verify");
            let a = load(common, &mut r)?;
            let n = square(&a)?;
            if n == 0 {
                return Err("matrix is empty".into());
            }
            if let Some(s) = samples {
                r.option("samples", s);
                r.option("seed", seed);
            }
            let signs = verify::choose_signs(n, *samples, *seed);
            verify::run(&a, &signs, &common.caps.config(), &mut r).map_err(lib)?;
            Ok(r)
        }
    }
}

fn render_table(names: &[String], cells: &[Vec<String>]) -> Vec<String> {
    let width = names.iter().chain(cells.iter().flatten()).map(String::len).max().unwrap_or(1);
    let line = |first: &str, rest: &[String]| {
        let mut s = format!("{first:>width$} |");
        for c in rest {
            s.push_str(&format!(" {c:>width$}"));
        }
        s
    };
    let mut out = vec![line("∘", names)];
    for (name, row) in names.iter().zip(cells) {
        out.push(line(name, row));
    }
    out
}

fn omitted(reason: String) -> Value {
    json!({ "omitted": reason })
}

fn invariants(a: &Matrix, cfg: &Config, r: &mut Report) -> crate::Result<()> {
    let n = a.square_dim()?;
    r.result("n", json!(n));
    r.result("trace", scalar_json(&trace(a)?));
    r.result("determinant", scalar_json(&determinant(a)?));
    r.result("rank", json!(rank(a)));
    let p = char_poly(a)?;
    r.result("char_poly", poly_json(&p));
    match permanent_with(a, cfg) {
        Ok(v) => r.result("permanent", scalar_json(&v)),
        Err(e @ crate::Error::SizeCapExceeded { .. }) => r.result("permanent", omitted(e.to_string())),
        Err(e) => return Err(e),
    }
    match perm_poly_with(a, cfg) {
        Ok(q) => r.result("perm_poly", poly_json(&q)),
        Err(e @ crate::Error::SizeCapExceeded { .. }) => r.result("perm_poly", omitted(e.to_string())),
        Err(e) => return Err(e),
    }
    if n <= cfg.subset_cap {
        let minors = principal_minor_sums_with(a, cfg)?;
        let expect: Vec<Scalar> = (0..=n).map(|j| &minors[n - j] * scalar::sign_power(j)).collect();
        let got: Vec<Scalar> = (0..=n).map(|j| p.coeff(j)).collect();
        r.result("principal_minor_sums", Value::Array(minors.iter().map(scalar_json).collect()));
        r.check("char_poly.principal_minor_law", None, &got, &expect, |v| {
            Value::Array(v.iter().map(scalar_json).collect())
        });
        if n <= cfg.perm_poly_cap {
            let perms = principal_permanent_sums_with(a, cfg)?;
            r.result("principal_permanent_sums", Value::Array(perms.iter().map(scalar_json).collect()));
        }
    }
    Ok(())
}

fn decompose_signs(a: &Matrix, c: &SignVector, cfg: &Config, r: &mut Report) -> crate::Result<()> {
    let tag = || Some(c.to_string());
    let parts = decompose(a, c)?;
    let proj = decompose_by_projection(a, c)?;
    r.result("sym_part", matrix_json(&parts.sym_part));
    r.result("antisym_part", matrix_json(&parts.antisym_part));
    r.result("class", json!(format!("{:?}", classify(a, c)?)));
    r.check("decomposition.reconstruct", tag(), &parts.sym_part.add(&parts.antisym_part)?, a, matrix_json);
    r.check("decomposition.sym_fixed", tag(), &apply_phi(&parts.sym_part, c)?, &parts.sym_part, matrix_json);
    r.check(
        "decomposition.antisym_negated",
        tag(),
        &apply_phi(&parts.antisym_part, c)?,
        &parts.antisym_part.neg(),
        matrix_json,
    );
    r.check("decomposition.projection_sym", tag(), &proj.sym_part, &parts.sym_part, matrix_json);
    r.check("decomposition.projection_antisym", tag(), &proj.antisym_part, &parts.antisym_part, matrix_json);
    additivity_checks(a, &parts.sym_part, &parts.antisym_part, "additivity", tag(), cfg, r)
}

fn decompose_classic(a: &Matrix, cfg: &Config, r: &mut Report) -> crate::Result<()> {
    let split = classic_split(a)?;
    r.result("sym_part", matrix_json(&split.sym_part));
    r.result("antisym_part", matrix_json(&split.antisym_part));
    r.check("transpose_split.reconstruct", None, &split.sym_part.add(&split.antisym_part)?, a, matrix_json);
    r.check("transpose_split.symmetric", None, &split.sym_part.transpose(), &split.sym_part, matrix_json);
    r.check(
        "transpose_split.antisymmetric",
        None,
        &split.antisym_part.transpose(),
        &split.antisym_part.neg(),
        matrix_json,
    );
    additivity_checks(a, &split.sym_part, &split.antisym_part, "additivity.transpose", None, cfg, r)
}

fn additivity_checks(
    a: &Matrix,
    s: &Matrix,
    k: &Matrix,
    prefix: &str,
    tag: Option<String>,
    cfg: &Config,
    r: &mut Report,
) -> crate::Result<()> {
    let n = a.rows();
    if n < 2 || n > cfg.subset_cap {
        return Ok(());
    }
    let minors = |m: &Matrix| principal_minor_sums_with(m, cfg).map(|v| v[2].clone());
    let perms = |m: &Matrix| principal_permanent_sums_with(m, cfg).map(|v| v[2].clone());
    let (lhs, ms, mk) = (minors(a)?, minors(s)?, minors(k)?);
    r.result(&format!("{prefix}.minor2"), json!([scalar::render(&lhs), scalar::render(&ms), scalar::render(&mk)]));
    r.check(&format!("{prefix}.minor2"), tag.clone(), &lhs, &(&ms + &mk), scalar_json);
    let (lhs, ps, pk) = (perms(a)?, perms(s)?, perms(k)?);
    r.result(&format!("{prefix}.permanent2"), json!([scalar::render(&lhs), scalar::render(&ps), scalar::render(&pk)]));
    r.check(&format!("{prefix}.permanent2"), tag, &lhs, &(&ps + &pk), scalar_json);
    Ok(())
}

fn block_report_json(b: &BlockReport, r: &mut Report) {
    let idx = |s: &crate::invariants::IndexSet| json!(s.indices());
    r.result("partition", json!({ "plus": idx(&b.partition.plus_indices), "minus": idx(&b.partition.minus_indices) }));
    r.result("permutation", json!(b.permutation.to_one_based()));
    r.result("conjugated", matrix_json(&b.conjugated));
    let blocks = match &b.blocks {
        Blocks::Diagonal { d, e } => json!({ "D": matrix_json(d), "E": matrix_json(e) }),
        Blocks::AntiDiagonal { f, g, h } => {
            json!({ "F": matrix_json(f), "G": matrix_json(g), "H": matrix_json(h) })
        }
    };
    r.result("blocks", blocks);
}

fn blockform(a: &Matrix, c: &SignVector, kind: BlockKind, cfg: &Config, r: &mut Report) -> crate::Result<()> {
    let tag = || Some(c.to_string());
    let class = classify(a, c)?;
    r.result("class", json!(format!("{class:?}")));
    let want = match kind {
        BlockKind::Sym => SymmetryClass::SymUnderPhi,
        BlockKind::Antisym => SymmetryClass::AntiSymUnderPhi,
        BlockKind::Auto if class == SymmetryClass::Neither => {
            r.check_raw(
                "blockform.precondition",
                tag(),
                false,
                json!(format!("{class:?}")),
                json!("SymUnderPhi or AntiSymUnderPhi"),
            );
            return Ok(());
        }
        BlockKind::Auto => class,
    };
    let qualifies = class == want || (want == SymmetryClass::AntiSymUnderPhi && a.is_zero());
    let name = if want == SymmetryClass::SymUnderPhi { "blockform.sym" } else { "blockform.antisym" };
    r.check_raw(
        &format!("{name}.precondition"),
        tag(),
        qualifies,
        json!(format!("{class:?}")),
        json!(format!("{want:?}")),
    );
    if !qualifies {
        return Ok(());
    }
    if want == SymmetryClass::SymUnderPhi {
        let b = sym_block_form(a, c)?;
        block_report_json(&b, r);
        r.check("blockform.sym.conjugation", tag(), &b.conjugated, &b.assembled, matrix_json);
        if a.rows() <= cfg.permanent_cap {
            let f = factor_invariants_sym_with(a, c, cfg)?;
            r.check("blockform.sym.char_poly", tag(), &f.char_poly.lhs, &f.char_poly.rhs, poly_json);
            r.check("blockform.sym.determinant", tag(), &f.determinant.lhs, &f.determinant.rhs, scalar_json);
            r.check("blockform.sym.permanent", tag(), &f.permanent.lhs, &f.permanent.rhs, scalar_json);
        }
    } else {
        let b = antisym_block_form(a, c)?;
        block_report_json(&b, r);
        r.check("blockform.antisym.conjugation", tag(), &b.conjugated, &b.assembled, matrix_json);
        if a.rows() <= cfg.permanent_cap {
            let f = factor_invariants_antisym_with(a, c, cfg)?;
            r.result("balanced", json!(f.balanced()));
            r.check("blockform.antisym.determinant", tag(), &f.determinant.lhs, &f.determinant.rhs, scalar_json);
            r.check("blockform.antisym.permanent", tag(), &f.permanent.lhs, &f.permanent.rhs, scalar_json);
            if let Some(v) = &f.plus_sign_determinant {
                r.result(
                    "plus_sign_determinant",
                    json!({ "value": scalar::render(v), "matches": f.plus_sign_matches() }),
                );
            }
        }
    }
    Ok(())
}

fn orbit(a: &Matrix, cfg: &Config, r: &mut Report) -> crate::Result<()> {
    let o = orbit_size_with(a, cfg)?;
    let n = a.rows();
    r.result("components", json!(o.labeling.labels));
    r.result("t", json!(o.t));
    r.result("orbit_size", json!(o.orbit_size.to_string()));
    r.result("stabilizer_size", json!(o.stabilizer_size.to_string()));
    let expect = num_bigint::BigUint::from(1u8) << (n - 1);
    r.check("orbit.orbit_times_stabilizer", None, &(&o.orbit_size * &o.stabilizer_size), &expect, |v| {
        json!(v.to_string())
    });
    match &o.enumerated {
        Some(e) => {
            r.result("orbit", Value::Array(e.iter().map(matrix_json).collect()));
            r.check("orbit.enumerated_count", None, &num_bigint::BigUint::from(e.len()), &o.orbit_size, |v| {
                json!(v.to_string())
            });
            let constructive = stabilizer_elements_with(a, cfg)?;
            let brute = stabilizer_brute_force(a, cfg)?;
            let render = |v: &Vec<SignVector>| json!(v.iter().map(ToString::to_string).collect::<Vec<_>>());
            r.result("stabilizer", render(&constructive));
            r.check("orbit.stabilizer_constructive", None, &constructive, &brute, render);
        }
        None => r.result("orbit", omitted(format!("n = {n} exceeds --orbit-cap {}", cfg.orbit_cap))),
    }
    Ok(())
}
