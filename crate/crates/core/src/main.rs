use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use gnomonic::diagram::{self, DiagramKind, DiagramSpec};
use gnomonic::enumerate::write_table;
use gnomonic::oracle::{brute_force_primitive, euclid_parametrization};
use gnomonic::{
    construct, decompose_general, gnomon_pair, invert, overlap_terms, scale, scaled_gnomon_pair,
    stream, Error, GnomonPair, GnomonProgression, PrimitiveTriple, Side, TableFormat,
};

/// Ordered primitive Pythagorean triples and their gnomons.
#[derive(Parser)]
#[command(name = "gnomonic", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stream table rows for a range of generating sides.
    Enumerate {
        #[arg(long = "from-s", value_parser = parse_side, default_value = "2")]
        from_s: Side,
        #[arg(long = "to-s", value_parser = parse_side)]
        to_s: Side,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// Print the ordered table for S = 2..B in appendix layout.
    Table {
        #[arg(long = "to-s", value_parser = parse_side)]
        to_s: Side,
    },
    /// Map a triple back to its generating side and partition.
    Invert {
        #[arg(num_args = 3, value_names = ["X", "Y", "Z"], required = true)]
        values: Vec<u64>,
        /// Accept non-primitive triples and report the common factor k.
        #[arg(long)]
        general: bool,
    },
    /// Show the connected gnomons of a primitive triple.
    Gnomon {
        #[arg(num_args = 3, value_names = ["X", "Y", "Z"], required = true)]
        values: Vec<u64>,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
    },
    /// Multiply a primitive triple by K and show the scaled gnomons.
    Scale {
        #[arg(num_args = 3, value_names = ["X", "Y", "Z"], required = true)]
        values: Vec<u64>,
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
    },
    /// Compare the ordered table against two independent generators.
    Verify {
        #[arg(long = "z-max", value_parser = clap::value_parser!(u64).range(5..=u32::MAX as u64))]
        z_max: u64,
    },
    /// Write an SVG drawing.
    Diagram {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, value_parser = parse_triple)]
        triple: (u64, u64, u64),
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
        unit: u64,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Tsv,
    Jsonl,
    Appendix,
}

impl From<Format> for TableFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Tsv => TableFormat::Tsv,
            Format::Jsonl => TableFormat::Jsonl,
            Format::Appendix => TableFormat::Appendix,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum Kind {
    SquareGnomonOdd,
    SquareGnomonEven,
    Connected,
    Lattice,
    LatticeRegrouped,
}

impl From<Kind> for DiagramKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::SquareGnomonOdd => DiagramKind::SquareGnomonOdd,
            Kind::SquareGnomonEven => DiagramKind::SquareGnomonEven,
            Kind::Connected => DiagramKind::Connected,
            Kind::Lattice => DiagramKind::Lattice,
            Kind::LatticeRegrouped => DiagramKind::LatticeRegrouped,
        }
    }
}

fn parse_side(s: &str) -> Result<Side, String> {
    let v: u64 = s.parse().map_err(|e| format!("{e}"))?;
    Side::new(v).map_err(|e| e.to_string())
}

fn parse_triple(s: &str) -> Result<(u64, u64, u64), String> {
    let parts = s
        .split(',')
        .map(|p| p.trim().parse::<u64>().map_err(|e| format!("`{p}`: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    match parts[..] {
        [x, y, z] => Ok((x, y, z)),
        _ => Err("expected three comma-separated integers X,Y,Z".into()),
    }
}

enum Failure {
    Domain(Error),
    Io(io::Error),
    Mismatch,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli.command, &mut out).and_then(|()| out.flush().map_err(Failure::from));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: io: {e}");
            ExitCode::FAILURE
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {}: {e}", e.code());
            ExitCode::FAILURE
        }
        Err(Failure::Mismatch) => {
            eprintln!("error: verify-mismatch: generators disagree");
            ExitCode::FAILURE
        }
    }
}

fn triple_arg(values: &[u64]) -> Result<PrimitiveTriple, Error> {
    let p = invert(values[0], values[1], values[2])?;
    construct(&p)
}

fn write_progression(out: &mut impl Write, label: &str, p: &GnomonProgression) -> io::Result<()> {
    writeln!(
        out,
        "{label} first={} count={} last={}",
        p.first_term(),
        p.term_count(),
        p.last_term()
    )
}

fn write_pair(out: &mut impl Write, pair: &GnomonPair) -> Result<(), Failure> {
    writeln!(
        out,
        "T1={} T2={} L={}",
        pair.odd_gnomon.thickness(),
        pair.even_gnomon.thickness(),
        pair.side_length()
    )?;
    writeln!(
        out,
        "areas odd_gnomon={} even_gnomon={}",
        pair.odd_gnomon.area(),
        pair.even_gnomon.area()
    )?;
    write_progression(out, "odd_progression", &pair.odd_gnomon.progression()?)?;
    write_progression(out, "even_progression", &pair.even_gnomon.progression()?)?;
    write_progression(out, "shared", &overlap_terms(pair)?.shared)?;
    Ok(())
}

fn run(command: Command, out: &mut impl Write) -> Result<(), Failure> {
    match command {
        Command::Enumerate {
            from_s,
            to_s,
            format,
        } => {
            write_table(out, stream(from_s, to_s)?, format.into())?;
        }
        Command::Table { to_s } => {
            write_table(out, stream(Side::new(2)?, to_s)?, TableFormat::Appendix)?;
        }
        Command::Invert { values, general } => {
            if general {
                let (k, p) = decompose_general(values[0], values[1], values[2])?;
                writeln!(out, "k={k} {p}")?;
            } else {
                let p = invert(values[0], values[1], values[2])?;
                writeln!(out, "{p}")?;
            }
        }
        Command::Gnomon { values, k } => {
            let triple = triple_arg(&values)?;
            let pair = if k == 1 {
                gnomon_pair(&triple)?
            } else {
                scaled_gnomon_pair(&scale(&triple, k)?)?
            };
            write_pair(out, &pair)?;
        }
        Command::Scale { values, k } => {
            let general = scale(&triple_arg(&values)?, k)?;
            let (x, y, z) = general.as_tuple();
            writeln!(out, "x={x} y={y} z={z} k={k}")?;
            write_pair(out, &scaled_gnomon_pair(&general)?)?;
        }
        Command::Verify { z_max } => {
            // z >= S + 3 on every row, so larger sides cannot contribute.
            let top = (z_max - 3) & !1;
            let table: std::collections::BTreeSet<_> = stream(Side::new(2)?, Side::new(top)?)?
                .map(|row| row.triple)
                .filter(|t| t.z() <= z_max)
                .collect();
            let euclid = euclid_parametrization(z_max)?;
            let brute = brute_force_primitive(z_max)?;
            writeln!(out, "table={}", table.len())?;
            writeln!(out, "euclid={}", euclid.len())?;
            writeln!(out, "brute_force={}", brute.len())?;
            if table == euclid && table == brute {
                writeln!(out, "PASS")?;
            } else {
                writeln!(out, "FAIL")?;
                out.flush()?;
                return Err(Failure::Mismatch);
            }
        }
        Command::Diagram {
            kind,
            triple,
            k,
            unit,
            out: path,
        } => {
            let spec = DiagramSpec {
                kind: kind.into(),
                triple: PrimitiveTriple::from_unordered(triple.0, triple.1, triple.2)?,
                scale_k: k,
                unit_px: unit,
            };
            let svg = diagram::render(&spec)?;
            std::fs::write(&path, svg)?;
            writeln!(out, "wrote {}", path.display())?;
        }
    }
    Ok(())
}
