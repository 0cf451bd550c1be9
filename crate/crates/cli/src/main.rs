use std::io::{self, Write};
use std::process::ExitCode;
use std::str::FromStr;

use atk_core::tables::{table_rows, verify_rows, worked_rows, TableRow};
use atk_core::{
    add_marks, cycle_from_fan, deformation_types, elem_transform, elliptic_pair, fan_from_cycle,
    find_path, fundamental_group, invariants_of, is_negative_definite, realized_subgroup,
    standard_models, Cycle, Error, MarkedPair, ModelName, Move, ReplayMode, SearchBounds,
    StandardModel,
};
use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

/// Toric models, elementary transformations and deformation types of
/// anticanonical pairs with short boundary cycles.
///
/// Cycles are comma-separated integers a_i = -D_i^2, e.g. `0,1,1,2,1,1`.
#[derive(Parser)]
#[command(name = "atk", version)]
struct Cli {
    /// Indent JSON output.
    #[arg(long, global = true)]
    pretty: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rays of the toric fan with the given cycle.
    Fan {
        #[arg(value_parser = parse_cycle, allow_hyphen_values = true)]
        cycle: Cycle,
    },
    /// Toricity, definiteness and numerical invariants.
    Check {
        #[arg(value_parser = parse_cycle, allow_hyphen_values = true)]
        cycle: Cycle,
    },
    /// D^2 and the charge 12 - D^2 - n.
    Charge {
        #[arg(value_parser = parse_cycle, allow_hyphen_values = true)]
        cycle: Cycle,
    },
    /// Apply one elementary transformation (1-based component labels).
    Transform {
        #[arg(value_parser = parse_cycle, allow_hyphen_values = true)]
        cycle: Cycle,
        /// Component on which a general point is blown up.
        #[arg(long)]
        up: usize,
        /// Component met by the contracted fiber.
        #[arg(long)]
        down: usize,
    },
    /// Shortest sequence of moves to a cycle or a named model, up to relabeling.
    Path {
        #[arg(value_parser = parse_cycle, allow_hyphen_values = true)]
        cycle: Cycle,
        /// A cycle or a model name (T6, T7, Ti, Tii, T9).
        #[arg(value_parser = parse_target, allow_hyphen_values = true)]
        target: Target,
        #[arg(long, env = "ATK_MAX_MOVES", default_value_t = SearchBounds::default().max_moves)]
        max_moves: usize,
        #[arg(long, default_value_t = SearchBounds::default().entry_min, allow_hyphen_values = true)]
        entry_min: i64,
    },
    /// The five standard toric models.
    Models,
    /// Fundamental group of the complement of the boundary in a marked model.
    Pi1 {
        #[arg(long, value_parser = parse_model)]
        model: ModelName,
        /// Interior blowups per component; defaults to none.
        #[arg(long, value_parser = parse_marks)]
        marks: Option<Marks>,
        /// Add one blowup on every (-1)-component first.
        #[arg(long)]
        elliptic: bool,
    },
    /// Replay the embedded tables; one JSON line per row, summary on stderr.
    VerifyTables {
        #[arg(long, default_value = "auto")]
        mode: ReplayMode,
        /// Only the table for this cycle length.
        #[arg(long, value_parser = clap::value_parser!(u8).range(7..=9))]
        table: Option<u8>,
        /// Exit 0 even when some rows fail.
        #[arg(long)]
        allow_failures: bool,
    },
    /// Number of deformation types of a negative definite cycle.
    Classify {
        #[arg(value_parser = parse_cycle, allow_hyphen_values = true)]
        cycle: Cycle,
    },
}

#[derive(Clone)]
enum Target {
    Model(ModelName),
    Cycle(Cycle),
}

#[derive(Clone)]
struct Marks(Vec<u32>);

fn parse_cycle(s: &str) -> Result<Cycle, String> {
    Cycle::from_str(s)
}

fn parse_model(s: &str) -> Result<ModelName, String> {
    ModelName::from_str(s).map_err(|e| e.to_string())
}

fn parse_target(s: &str) -> Result<Target, String> {
    match ModelName::from_str(s) {
        Ok(m) => Ok(Target::Model(m)),
        Err(_) => Cycle::from_str(s).map(Target::Cycle),
    }
}

fn parse_marks(s: &str) -> Result<Marks, String> {
    s.trim_matches(['(', ')', '[', ']'])
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|e| format!("bad mark {t:?}: {e}"))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(Marks)
}

enum Failure {
    Domain(Error),
    /// Already reported; exit with status 1.
    Reported,
    Io(io::Error),
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

struct Output {
    pretty: bool,
    out: io::StdoutLock<'static>,
}

impl Output {
    fn emit<T: Serialize>(&mut self, value: &T) -> io::Result<()> {
        let text = if self.pretty {
            serde_json::to_string_pretty(value)
        } else {
            serde_json::to_string(value)
        }
        .map_err(io::Error::other)?;
        writeln!(self.out, "{text}")
    }
}

fn run(cli: Cli, out: &mut Output) -> Result<(), Failure> {
    match cli.command {
        Command::Fan { cycle } => {
            let fan = fan_from_cycle(&cycle)?;
            debug_assert_eq!(cycle_from_fan(&fan), cycle);
            out.emit(&json!({ "cycle": cycle, "rays": fan }))?;
        }
        Command::Check { cycle } => {
            let toric = fan_from_cycle(&cycle).is_ok();
            out.emit(&json!({
                "cycle": cycle,
                "length": cycle.len(),
                "toric": toric,
                "negative_definite": is_negative_definite(&cycle),
                "invariants": invariants_of(&cycle),
            }))?;
        }
        Command::Charge { cycle } => {
            let inv = invariants_of(&cycle);
            out.emit(&json!({ "cycle": cycle, "d_squared": inv.d_squared, "charge": inv.charge }))?;
        }
        Command::Transform { cycle, up, down } => {
            let m = Move::from_labels(up, down).map_err(|_| Error::InvalidMove {
                up,
                down,
                len: cycle.len(),
            })?;
            let end = elem_transform(&cycle, m)?;
            out.emit(&json!({ "start": cycle, "move": m, "end": end }))?;
        }
        Command::Path {
            cycle,
            target,
            max_moves,
            entry_min,
        } => {
            let target = match target {
                Target::Model(m) => StandardModel::get(m).cycle,
                Target::Cycle(c) => c,
            };
            let path = find_path(
                &cycle,
                &target,
                SearchBounds {
                    max_moves,
                    entry_min,
                },
            )?;
            out.emit(&path)?;
        }
        Command::Models => {
            let models: Vec<_> = standard_models()
                .into_iter()
                .map(|m| {
                    json!({
                        "name": m.name,
                        "cycle": m.cycle,
                        "rays": m.fan,
                        "elliptic_components": m.minus_one_components().iter().map(|k| k + 1).collect::<Vec<_>>(),
                        "realized_symmetry_order": realized_subgroup(m.name).order(),
                    })
                })
                .collect();
            out.emit(&models)?;
        }
        Command::Pi1 {
            model,
            marks,
            elliptic,
        } => {
            let sm = StandardModel::get(model);
            let base = if elliptic {
                elliptic_pair(&sm)
            } else {
                MarkedPair::unmarked(sm.fan.clone())
            };
            let extra = marks
                .map(|m| m.0)
                .unwrap_or_else(|| vec![0; sm.cycle.len()]);
            let pair = add_marks(&base, &extra)?;
            let pi1 = fundamental_group(&pair);
            out.emit(&json!({
                "model": model,
                "marks": pair.marks(),
                "pi1": pi1,
                "group": pi1.to_string(),
            }))?;
        }
        Command::VerifyTables {
            mode,
            table,
            allow_failures,
        } => {
            let rows: Vec<TableRow> = match table {
                Some(n) => table_rows(n),
                None => worked_rows()
                    .into_iter()
                    .chain([7, 8, 9].into_iter().flat_map(table_rows))
                    .collect(),
            };
            let summary = verify_rows(&rows, mode)?;
            for report in &summary.reports {
                out.emit(report)?;
            }
            let mut err = io::stderr().lock();
            for r in &summary.reports {
                let label = r
                    .row
                    .label
                    .as_deref()
                    .map(|l| format!("({l})"))
                    .unwrap_or_default();
                writeln!(
                    err,
                    "{:<12} {:>3} {:<5} {:<28} {:<30} {}",
                    r.row.source.to_string(),
                    r.row.row,
                    label,
                    r.row.start.to_string(),
                    r.status.as_str(),
                    r.applied_moves
                        .iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(" "),
                )?;
            }
            let c = &summary.counts;
            writeln!(
                err,
                "{} rows: {} literal, {} swapped, {} per-move flips, {} by search, {} failed",
                summary.reports.len(),
                c.literal_pass,
                c.pass_with_swapped_orientation,
                c.pass_with_per_move_flips,
                c.resolved_by_search,
                c.fail,
            )?;
            if c.fail > 0 && !allow_failures {
                return Err(Failure::Reported);
            }
        }
        Command::Classify { cycle } => {
            out.emit(&deformation_types(&cycle)?)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Output {
        pretty: cli.pretty,
        out: io::stdout().lock(),
    };
    match run(cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Reported) => ExitCode::from(1),
        Err(Failure::Domain(e)) => {
            let obj = json!({ "error": { "kind": e.kind(), "message": e.to_string() } });
            eprintln!("{obj}");
            ExitCode::from(1)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!(
                "{}",
                json!({ "error": { "kind": "Io", "message": e.to_string() } })
            );
            ExitCode::from(1)
        }
    }
}
