//! The `bracelab` command line.
//!
//! Exit status is 0 on success, 1 when a structure fails validation and 2
//! on usage or input errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::algebra::{catalog, CatalogEntry};
use crate::aut::{automorphism_group, SearchBudget};
use crate::brace::{Additive, SkewBrace};
use crate::demos::Demo;
use crate::enumerate::{census, DEFAULT_CAP};
use crate::error::{Error, Result};
use crate::factorization::ExactFactorization;
use crate::group::FiniteGroup;
use crate::hgs::{count_hgs, reciprocity_check};
use crate::io;
use crate::perm::Perm;
use crate::recognize::recognize;
use crate::templates;

#[derive(Parser, Debug)]
#[command(name = "bracelab", version, about = "Finite skew braces and Hopf-Galois structure counts")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Node budget for automorphism and isomorphism searches (overrides BRACELAB_BUDGET).
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Kv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the brace relation, optionally with the roles exchanged.
    Validate {
        #[arg(long)]
        brace: PathBuf,
        /// Use the second table as the additive group.
        #[arg(long)]
        swap: bool,
    },
    /// Build a brace or algebra file.
    #[command(subcommand)]
    Construct(Construct),
    /// Automorphism group order of a group file.
    Aut {
        #[arg(long)]
        group: PathBuf,
    },
    /// Hopf-Galois count e = |Aut(B,o)| / |Aut_sb|.
    Count {
        #[arg(long)]
        brace: PathBuf,
        #[arg(long)]
        swap: bool,
    },
    /// Check e(G,[N])|Aut N| = e(N,[G])|Aut G| for a bi-skew brace.
    Reciprocity {
        #[arg(long)]
        brace: PathBuf,
    },
    /// All braces with the given additive group, up to isomorphism.
    Enumerate {
        #[arg(long)]
        group: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        /// Write one brace file per class into this directory.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a worked example: s4, heisenberg, ratio, exponent, sixdim.
    Demo { name: String },
}

#[derive(Subcommand, Debug)]
pub enum Construct {
    /// The brace (A, o, +) of an algebra file.
    Radical {
        #[arg(long)]
        algebra: PathBuf,
        #[command(flatten)]
        out: OutFile,
    },
    /// g o h = h * g.
    Opposite {
        #[arg(long)]
        group: PathBuf,
        #[command(flatten)]
        out: OutFile,
    },
    /// g o h = g * h.
    Trivial {
        #[arg(long)]
        group: PathBuf,
        #[command(flatten)]
        out: OutFile,
    },
    /// x o y = x_L y x_R^-1 for G = G_L G_R.
    Factorization {
        /// Group file; subgroups given by --left/--right element lists.
        #[arg(long, conflicts_with = "symmetric", required_unless_present = "symmetric")]
        group: Option<PathBuf>,
        /// Use S_k; subgroups given by generators in cycle notation.
        #[arg(long)]
        symmetric: Option<usize>,
        /// Comma-separated elements (group file) or generators such as "(123),(12)".
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[command(flatten)]
        out: OutFile,
    },
    /// A named algebra: degraaf_A340, sixdim_wedge, truncated_poly(m), cyclic(r), zero(n).
    Catalog {
        name: String,
        #[arg(long, short)]
        p: u32,
        /// Emit the brace instead of the algebra.
        #[arg(long)]
        brace: bool,
        #[command(flatten)]
        out: OutFile,
    },
}

#[derive(Args, Debug)]
pub struct OutFile {
    /// Write here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

enum Outcome {
    Ok,
    Invalid,
}

/// Runs the command line; returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(Outcome::Ok) => 0,
        Ok(Outcome::Invalid) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn emit(out: &mut dyn Write, target: &OutFile, text: &str) -> Result<()> {
    match &target.out {
        Some(p) => write_file(p, text),
        None => write!(out, "{text}").map_err(|e| Error::Io(e.to_string())),
    }
}

fn say(out: &mut dyn Write, text: &str) -> Result<()> {
    write!(out, "{text}").map_err(|e| Error::Io(e.to_string()))
}

fn kv_or_text(format: Format, pairs: &[(&str, String)]) -> String {
    let width = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    pairs
        .iter()
        .map(|(k, v)| match format {
            Format::Kv => format!("{k}={v}\n"),
            Format::Text => format!("{k:<width$}  {v}\n"),
        })
        .collect()
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<Outcome> {
    let budget = cli.budget.map(SearchBudget::new).unwrap_or_else(SearchBudget::from_env);
    let format = cli.format;
    match &cli.command {
        Command::Validate { brace, swap } => {
            let b = io::parse_brace(&read(brace)?)?;
            let additive = if *swap { Additive::Circ } else { Additive::Star };
            let direct = b.validate_direct(additive);
            let via_hol = b.validate_via_holomorph(additive);
            let mut pairs = vec![
                ("order", b.order().to_string()),
                ("additive", if *swap { "second" } else { "first" }.to_string()),
                ("valid", direct.is_ok().to_string()),
                ("holomorph_check", via_hol.is_ok().to_string()),
                ("biskew", b.is_biskew().to_string()),
            ];
            if let Err(w) = direct {
                pairs.push(("witness", format!("{} {} {}", w.a, w.b, w.c)));
                pairs.push(("lhs", w.lhs.to_string()));
                pairs.push(("rhs", w.rhs.to_string()));
            }
            say(out, &kv_or_text(format, &pairs))?;
            Ok(if direct.is_ok() { Outcome::Ok } else { Outcome::Invalid })
        }
        Command::Construct(c) => construct(c, out),
        Command::Aut { group } => {
            let g = io::parse_group(&read(group)?)?;
            let aut = automorphism_group(&g, budget)?;
            let pairs = [
                ("order", g.order().to_string()),
                ("type", recognize(&g).to_string()),
                ("aut_order", aut.order().to_string()),
            ];
            say(out, &kv_or_text(format, &pairs))?;
            Ok(Outcome::Ok)
        }
        Command::Count { brace, swap } => {
            let mut b = io::parse_brace(&read(brace)?)?;
            if *swap {
                b = b.swapped();
            }
            if !b.is_valid() {
                return invalid(out, format, &b);
            }
            let label = brace.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            let r = count_hgs(&b, &label, budget)?;
            say(out, &if format == Format::Kv { r.to_kv() } else { r.to_string() })?;
            Ok(Outcome::Ok)
        }
        Command::Reciprocity { brace } => {
            let b = io::parse_brace(&read(brace)?)?;
            if !b.is_biskew() {
                let pairs = [("biskew", "false".to_string())];
                say(out, &kv_or_text(format, &pairs))?;
                return Ok(Outcome::Invalid);
            }
            let label = brace.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            let r = reciprocity_check(&b, &label, budget)?;
            say(out, &if format == Format::Kv { r.to_kv() } else { r.to_string() })?;
            Ok(if r.holds() { Outcome::Ok } else { Outcome::Invalid })
        }
        Command::Enumerate { group, cap, out: dir } => {
            let g = io::parse_group(&read(group)?)?;
            let c = census(&g, *cap, budget)?;
            if let Some(dir) = dir {
                std::fs::create_dir_all(dir).map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?;
                for (i, e) in c.entries.iter().enumerate() {
                    write_file(&dir.join(format!("brace_{i:03}.brace")), &io::write_brace(&e.brace))?;
                }
                write_file(&dir.join("summary.txt"), &c.to_string())?;
            }
            match format {
                Format::Text => say(out, &c.to_string())?,
                Format::Kv => {
                    let mut s = format!(
                        "additive_type={}\nregular_subgroups={}\nclasses={}\n",
                        c.additive_type,
                        c.raw_count,
                        c.entries.len()
                    );
                    for (i, e) in c.entries.iter().enumerate() {
                        s.push_str(&format!(
                            "class_{i}={} aut_sb={} e={} biskew={}\n",
                            e.circle_type, e.aut_sb, e.e, e.biskew
                        ));
                    }
                    say(out, &s)?;
                }
            }
            Ok(Outcome::Ok)
        }
        Command::Demo { name } => {
            let demo: Demo = name.parse()?;
            let r = demo.run(budget)?;
            say(out, &if format == Format::Kv { r.to_kv() } else { r.to_string() })?;
            Ok(Outcome::Ok)
        }
    }
}

fn invalid(out: &mut dyn Write, format: Format, b: &SkewBrace) -> Result<Outcome> {
    let mut pairs = vec![("valid", "false".to_string())];
    if let Err(w) = b.status() {
        pairs.push(("witness", format!("{} {} {}", w.a, w.b, w.c)));
    }
    say(out, &kv_or_text(format, &pairs))?;
    Ok(Outcome::Invalid)
}

fn index_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(str::trim)
        .filter(|w| !w.is_empty())
        .map(|w| w.parse().map_err(|_| Error::UnsupportedParameter(format!("not an element index: {w:?}"))))
        .collect()
}

/// Splits `"(123),(12)"` at top-level commas and parses each piece.
fn generator_list(s: &str, degree: usize) -> Result<Vec<Perm>> {
    let mut gens = Vec::new();
    let mut depth = 0i32;
    let mut piece = String::new();
    for ch in s.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if ch == ',' && depth == 0 {
            gens.push(Perm::parse_cycles(piece.trim(), degree)?);
            piece.clear();
        } else {
            piece.push(ch);
        }
    }
    if !piece.trim().is_empty() {
        gens.push(Perm::parse_cycles(piece.trim(), degree)?);
    }
    Ok(gens)
}

fn construct(c: &Construct, out: &mut dyn Write) -> Result<Outcome> {
    match c {
        Construct::Radical { algebra, out: target } => {
            let a = io::parse_algebra(&read(algebra)?)?;
            emit(out, target, &io::write_brace(&a.to_brace()?))?;
        }
        Construct::Opposite { group, out: target } => {
            let g = io::parse_group(&read(group)?)?;
            emit(out, target, &io::write_brace(&SkewBrace::opposite(&g)))?;
        }
        Construct::Trivial { group, out: target } => {
            let g = io::parse_group(&read(group)?)?;
            emit(out, target, &io::write_brace(&SkewBrace::trivial(&g)))?;
        }
        Construct::Factorization { group, symmetric, left, right, out: target } => {
            let (g, l, r): (FiniteGroup, Vec<usize>, Vec<usize>) = match (group, symmetric) {
                (Some(path), _) => {
                    let g = io::parse_group(&read(path)?)?;
                    let (l, r) = (index_list(left)?, index_list(right)?);
                    if let Some(&x) = l.iter().chain(&r).find(|&&x| x >= g.order()) {
                        return Err(Error::UnsupportedParameter(format!("element {x} out of range")));
                    }
                    (g, l, r)
                }
                (None, Some(k)) => {
                    let (g, perms) = templates::symmetric(*k);
                    let lookup = |s: &str| -> Result<Vec<usize>> {
                        let gens = generator_list(s, *k)?;
                        let idx: Vec<usize> =
                            gens.iter().map(|p| perms.iter().position(|q| q == p).expect("all permutations")).collect();
                        Ok(g.subgroup_generated(&idx))
                    };
                    let (l, r) = (lookup(left)?, lookup(right)?);
                    (g, l, r)
                }
                (None, None) => unreachable!("clap requires one of the two"),
            };
            let f = ExactFactorization::new(g, &l, &r)?;
            emit(out, target, &io::write_brace(&f.circle_brace()))?;
        }
        Construct::Catalog { name, p, brace, out: target } => {
            let entry: CatalogEntry = name.parse()?;
            let a = catalog(entry, *p)?;
            let text = if *brace { io::write_brace(&a.to_brace()?) } else { io::write_algebra(&a) };
            emit(out, target, &text)?;
        }
    }
    Ok(Outcome::Ok)
}
