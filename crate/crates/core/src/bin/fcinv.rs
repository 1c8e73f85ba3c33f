use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use fcinv::cells::cells_report;
use fcinv::enumerate::{enumerate_fc, Filter, FcLayers};
use fcinv::genfunc::{card_fc_involutions, maj_genfunc, maj_genfunc_by_descents, maj_genfunc_by_descents_as_printed};
use fcinv::series::{affine_periodic_part, length_genfunc_finite, solve_series, SeriesId};
use fcinv::verify::{cross_validate, default_window};
use fcinv::walk::{family_poly, EndConstraint, HeightConstraint, WalkFamilySpec, WeightMode};
use fcinv::{build_graph, heap_from_word, Error, Family, GroupType, TPoly, Word};

#[derive(Parser)]
#[command(name = "fcinv", version, about = "Fully commutative involutions in classical Coxeter groups")]
struct Cli {
    /// Worker threads for enumeration (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args, Clone, Copy)]
struct TypeArgs {
    /// A, B, D, affA, affC, affB or affD.
    #[arg(long = "type", value_parser = parse_family)]
    family: Family,
    #[arg(long)]
    rank: usize,
}

impl TypeArgs {
    fn group(self) -> Result<GroupType, Error> {
        GroupType::new(self.family, self.rank)
    }
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Subcommand)]
enum Command {
    /// Coxeter graph of a type.
    Graph {
        #[command(subcommand)]
        cmd: GraphCmd,
    },
    /// Counts of FC elements by length.
    Enumerate {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        max_length: usize,
        #[arg(long, conflicts_with = "alternating")]
        involutions: bool,
        /// Involutions in the alternating class.
        #[arg(long)]
        alternating: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Print canonical words, one per line, as they are generated.
        #[arg(long)]
        stream: bool,
    },
    /// Closed-form generating functions.
    Genfunc {
        #[command(subcommand)]
        cmd: GenfuncCmd,
    },
    /// Coefficients of a solved functional equation.
    Series {
        /// M, Q, Qo or Mstar
        #[arg(long, value_parser = parse_series)]
        id: SeriesId,
        #[arg(long)]
        xmax: usize,
        #[arg(long)]
        tmax: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Lattice walk families.
    Walks {
        #[command(subcommand)]
        cmd: WalksCmd,
    },
    /// Cross-validate enumeration against the closed forms.
    Verify {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        max_length: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Right cells of the affine Temperley–Lieb algebra of type affA.
    Cells {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        max_length: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Subcommand)]
enum GraphCmd {
    Show {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Subcommand)]
enum GenfuncCmd {
    /// Length generating function; for affine types the periodic part up to
    /// `--max-length`.
    Length {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        max_length: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Major-index generating function.
    Maj {
        #[command(flatten)]
        ty: TypeArgs,
        /// Alternating involutions of type B with this many descents.
        #[arg(long)]
        descents: Option<usize>,
        /// Use the shorter summation range for `--descents`.
        #[arg(long, requires = "descents")]
        as_printed: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Number of FC involutions.
    Card {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Subcommand)]
enum WalksCmd {
    /// Weight polynomial of a walk family (default: start 0, any end).
    Family {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        no_horiz: bool,
        #[arg(long)]
        touch: bool,
        /// 0, 1, …, any, even, odd or le1.
        #[arg(long, default_value = "0", value_parser = parse_height)]
        start: HeightConstraint,
        /// As for --start, or `start` for an end equal to the start.
        #[arg(long, default_value = "any", value_parser = parse_end)]
        end: EndConstraint,
        #[arg(long, value_enum, default_value = "all")]
        weight: WeightArg,
        #[arg(long)]
        tmax: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum WeightArg {
    All,
    ExcludeStart,
}

fn parse_series(s: &str) -> Result<SeriesId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_height(s: &str) -> Result<HeightConstraint, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_end(s: &str) -> Result<EndConstraint, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    Mismatch,
    Input(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Out<'a> = BufWriter<io::StdoutLock<'a>>;

fn json(out: &mut Out, value: &impl Serialize) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)
}

fn write_poly(out: &mut Out, p: &TPoly, var: &str, format: Format) -> io::Result<()> {
    match format {
        Format::Text => writeln!(out, "{}", p.display(var)),
        Format::Json => json(out, &p.to_json(var)),
        Format::Csv => {
            let len = p.cap().map_or(p.coeffs().len(), |c| c + 1);
            for i in 0..len {
                writeln!(out, "{i},{}", p.coeff(i))?;
            }
            Ok(())
        }
    }
}

fn run(cli: Cli, out: &mut Out) -> Result<(), Failure> {
    match cli.command {
        Command::Graph { cmd: GraphCmd::Show { ty, format } } => {
            let g = build_graph(ty.group()?)?;
            match format {
                Format::Json => json(out, &g)?,
                Format::Text | Format::Csv => {
                    writeln!(out, "{}", g.group())?;
                    writeln!(out, "generators: {}", g.names().join(" "))?;
                    for (a, b) in g.edges() {
                        let m = g.m(a, b).map_or("inf".to_string(), |m| m.to_string());
                        writeln!(out, "edge {} {} m={m}", g.name(a), g.name(b))?;
                    }
                    for f in g.forks() {
                        writeln!(out, "fork {} -> {} {}", g.name(f.hub), g.name(f.leaves[0]), g.name(f.leaves[1]))?;
                    }
                }
            }
        }
        Command::Enumerate { ty, max_length, involutions, alternating, format, stream } => {
            let g = build_graph(ty.group()?)?;
            let filter = match (involutions, alternating) {
                (_, true) => Filter::AlternatingInvolutions,
                (true, _) => Filter::Involutions,
                _ => Filter::All,
            };
            if stream {
                for layer in FcLayers::new(&g).take(max_length + 1) {
                    for w in layer?.into_iter().map(Word) {
                        if filter.accepts(&heap_from_word(&w, &g)?, &g) {
                            writeln!(out, "{}", g.format_word(&w))?;
                        }
                    }
                }
            } else {
                let e = enumerate_fc(&g, max_length, filter, false)?;
                match format {
                    Format::Json => json(out, &e)?,
                    Format::Csv => {
                        for (i, c) in e.counts.iter().enumerate() {
                            writeln!(out, "{i},{c}")?;
                        }
                    }
                    Format::Text => {
                        for (i, c) in e.counts.iter().enumerate() {
                            writeln!(out, "{i} {c}")?;
                        }
                        writeln!(out, "total {}", e.total())?;
                    }
                }
            }
        }
        Command::Genfunc { cmd } => match cmd {
            GenfuncCmd::Length { ty, max_length, format } => {
                let t = ty.group()?;
                let p = if t.family.is_affine() {
                    let lmax = max_length.or(default_window(t.family)).expect("affine window");
                    affine_periodic_part(t, lmax)?.0
                } else {
                    length_genfunc_finite(t)?
                };
                write_poly(out, &p, "t", format)?;
            }
            GenfuncCmd::Maj { ty, descents, as_printed, format } => {
                let t = ty.group()?;
                let p = match descents {
                    None => maj_genfunc(t)?,
                    Some(_) if t.family != Family::B => return Err(Error::UnsupportedFamily(t.family).into()),
                    Some(k) if as_printed => maj_genfunc_by_descents_as_printed(t.rank, k),
                    Some(k) => maj_genfunc_by_descents(t.rank, k),
                };
                write_poly(out, &p, "q", format)?;
            }
            GenfuncCmd::Card { ty, format } => {
                let c = card_fc_involutions(ty.group()?)?;
                match format {
                    Format::Json => json(out, &serde_json::json!({ "card": c.to_string() }))?,
                    _ => writeln!(out, "{c}")?,
                }
            }
        },
        Command::Series { id, xmax, tmax, format } => {
            let s = solve_series(id, xmax, tmax);
            match format {
                Format::Text => {
                    for (k, c) in s.coeffs().iter().enumerate() {
                        writeln!(out, "x^{k}: {}", c.display("t"))?;
                    }
                }
                Format::Json => {
                    let coeffs: Vec<_> = s.coeffs().iter().map(|c| c.to_json("t")).collect();
                    json(out, &serde_json::json!({ "xmax": xmax, "tmax": tmax, "coeffs": coeffs }))?;
                }
                Format::Csv => {
                    for (k, c) in s.coeffs().iter().enumerate() {
                        for (j, v) in c.coeffs().iter().enumerate() {
                            writeln!(out, "{k},{j},{v}")?;
                        }
                    }
                }
            }
        }
        Command::Walks { cmd: WalksCmd::Family { n, no_horiz, touch, start, end, weight, tmax, format } } => {
            let mut spec = WalkFamilySpec::g_star(n).with_start(start).with_end(end).with_weight(match weight {
                WeightArg::All => WeightMode::AllPoints,
                WeightArg::ExcludeStart => WeightMode::ExcludeStart,
            });
            if no_horiz {
                spec = spec.no_horiz();
            }
            if touch {
                spec = spec.touching();
            }
            write_poly(out, &family_poly(&spec, tmax)?, "t", format)?;
        }
        Command::Verify { ty, max_length, format } => {
            let r = cross_validate(ty.group()?, max_length)?;
            match format {
                Format::Json => json(out, &r)?,
                _ => writeln!(out, "{r}")?,
            }
            if !r.passed {
                return Err(Failure::Mismatch);
            }
        }
        Command::Cells { rank, max_length, format } => {
            let g = build_graph(GroupType::new(Family::AffA, rank)?)?;
            let r = cells_report(&g, max_length)?;
            match format {
                Format::Json => json(out, &r)?,
                _ => {
                    writeln!(out, "affA rank {rank}, L = {max_length}: {} elements, {} cells", r.elements, r.cells.len())?;
                    for c in &r.cells {
                        let inv = match (&c.involution_of_irreducible, c.involution_member()) {
                            (None, _) => "none".to_string(),
                            (Some(v), Some(_)) => v.clone(),
                            (Some(v), None) => format!("{v} (beyond L)"),
                        };
                        writeln!(out, "{} | size {} | involution {inv}", c.irreducible, c.size)?;
                    }
                    writeln!(out, "audit: {}", if r.passed { "pass" } else { "FAIL" })?;
                    if !r.passed {
                        writeln!(out, "{:?}", r.audit)?;
                    }
                }
            }
            if !r.passed {
                return Err(Failure::Mismatch);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(k) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(k).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(()), Ok(())) => ExitCode::SUCCESS,
        (Err(Failure::Mismatch), _) => ExitCode::from(1),
        (Err(Failure::Input(e)), _) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        (Err(Failure::Io(e)), _) | (Ok(()), Err(e)) => {
            if e.kind() == io::ErrorKind::BrokenPipe {
                return ExitCode::SUCCESS;
            }
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
