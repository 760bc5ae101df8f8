//! The `relsolve` command-line frontend.
//!
//! Relation files ending in `.pairs` are read in pairs form, everything
//! else in matrix form. Exit status is 0 on success, 1 for usage, I/O or
//! parse errors, and 2 for a negative verdict (unsolvable, not invertible,
//! verification failed, precondition not met).

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::relcore::{io, Relation};
use crate::solver::{self, FunctionalOutcome, Shortcut, SolutionSpace, Solvability};
use crate::{oracle, semiring, Error};

#[derive(Debug, Parser)]
#[command(
    name = "relsolve",
    version,
    about = "Binary relations as incidence matrices: compose, solve R∘X=S, count, enumerate"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Mat,
    Pairs,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print R∘S.
    Compose { r: PathBuf, s: PathBuf },
    /// Print R∪S.
    Union { r: PathBuf, s: PathBuf },
    /// Print the Cartesian product of two or more relations.
    Product {
        #[arg(required = true, num_args = 2..)]
        factors: Vec<PathBuf>,
    },
    /// Decide R∘X=S and print the solution space.
    Solve {
        r: PathBuf,
        s: PathBuf,
        /// Also print the sets A_i, B_k and C_k.
        #[arg(long)]
        explain: bool,
    },
    /// Decide X∘R=S and print the solution space.
    SolveRight {
        r: PathBuf,
        s: PathBuf,
        #[arg(long)]
        explain: bool,
    },
    /// Print the number of solutions of R∘X=S.
    Count { r: PathBuf, s: PathBuf },
    /// Print the solutions of R∘X=S in canonical order.
    Enumerate {
        r: PathBuf,
        s: PathBuf,
        /// Stop after this many solutions; 0 means no limit.
        #[arg(long, default_value_t = 1024)]
        limit: u64,
        #[arg(long, value_enum, default_value_t = Format::Mat)]
        format: Format,
    },
    /// Print the greatest solution of R∘X=S.
    Greatest {
        r: PathBuf,
        s: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Mat)]
        format: Format,
    },
    /// Check R∘X=S.
    Verify { r: PathBuf, x: PathBuf, s: PathBuf },
    /// Print the inverse of a permutation relation.
    Invert { r: PathBuf },
    /// Solve R∘X=S for R the graph of a map.
    SolveFunctional { r: PathBuf, s: PathBuf },
    /// Print Δ∪(S∖R) for reflexive R ⊆ transitive S.
    Shortcut { r: PathBuf, s: PathBuf },
    /// List local witnesses of unsolvability.
    Diagnose { r: PathBuf, s: PathBuf },
    /// Brute-force solutions (test tooling).
    #[command(hide = true)]
    Oracle {
        r: PathBuf,
        s: PathBuf,
        /// Solve X∘R=S instead.
        #[arg(long)]
        right: bool,
        #[arg(long, default_value_t = oracle::DEFAULT_CAP)]
        cap: usize,
        #[arg(long, value_enum, default_value_t = Format::Mat)]
        format: Format,
    },
}

/// Failure of a command: exit code 1 with a message.
struct Failure(String);

type Outcome = std::result::Result<u8, Failure>;

fn read(path: &Path) -> std::result::Result<Relation, Failure> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    let parsed = if path.extension().is_some_and(|e| e == "pairs") {
        io::parse_pairs(&text)
    } else {
        io::parse_matrix(&text)
    };
    parsed.map_err(|e| match e {
        Error::Parse { line, message } => Failure(format!("{}:{line}: {message}", path.display())),
        other => Failure(format!("{}: {other}", path.display())),
    })
}

fn lib(e: Error) -> Failure {
    Failure(e.to_string())
}

fn render(rel: &Relation, format: Format) -> String {
    match format {
        Format::Mat => io::write_matrix(rel),
        Format::Pairs => io::write_pairs(rel),
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// status.
pub fn run<O: Write, E: Write>(args: &[String], out: &mut O, err: &mut E) -> u8 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    1
                }
            };
        }
    };
    let mut buf = String::new();
    let code = match execute(cli.command, &mut buf) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    };
    if out
        .write_all(buf.as_bytes())
        .and_then(|_| out.flush())
        .is_err()
    {
        return 1;
    }
    code
}

fn write_space(buf: &mut String, space: &SolutionSpace) {
    buf.push_str(&space.to_string());
    let count = space.count();
    buf.push_str(&format!("solutions: {count}\n"));
    if count == 1u32.into() {
        buf.push_str("unique solution:\n");
        buf.push_str(&io::write_matrix(&space.greatest()));
    }
}

fn write_explain(buf: &mut String, r: &Relation, s: &Relation) -> std::result::Result<(), Failure> {
    let sets = solver::decomposition_sets(r, s).map_err(lib)?;
    let ix = r.index_set();
    for (name, family) in [("A", &sets.a), ("B", &sets.b), ("C", &sets.c)] {
        for (p, set) in family.iter().enumerate() {
            buf.push_str(&format!("{name}_{}={set}\n", ix.label(p)));
        }
    }
    Ok(())
}

fn write_solvability(buf: &mut String, verdict: &Solvability, r: &Relation) -> u8 {
    match verdict {
        Solvability::Solvable(space) => {
            buf.push_str("SOLVABLE\n");
            write_space(buf, space);
            0
        }
        Solvability::Unsolvable(w) => {
            buf.push_str(&format!("UNSOLVABLE\n{}\n", w.display(r.index_set())));
            2
        }
    }
}

fn solve_pair(r: &Relation, s: &Relation) -> std::result::Result<Solvability, Failure> {
    solver::solution_space(r, s).map_err(lib)
}

fn execute(command: Command, buf: &mut String) -> Outcome {
    match command {
        Command::Compose { r, s } => {
            let rel = semiring::compose(&read(&r)?, &read(&s)?).map_err(lib)?;
            buf.push_str(&io::write_matrix(&rel));
            Ok(0)
        }
        Command::Union { r, s } => {
            let rel = semiring::union(&read(&r)?, &read(&s)?).map_err(lib)?;
            buf.push_str(&io::write_matrix(&rel));
            Ok(0)
        }
        Command::Product { factors } => {
            let rels = factors
                .iter()
                .map(|p| read(p))
                .collect::<Result<Vec<_>, _>>()?;
            let (_, rel) = semiring::cartesian_product(&rels).map_err(lib)?;
            buf.push_str(&io::write_matrix(&rel));
            Ok(0)
        }
        Command::Solve { r, s, explain } => {
            let (r, s) = (read(&r)?, read(&s)?);
            let verdict = solve_pair(&r, &s)?;
            if explain {
                let mut body = String::new();
                let code = write_solvability(&mut body, &verdict, &r);
                let (head, rest) = body.split_once('\n').expect("verdict line");
                buf.push_str(head);
                buf.push('\n');
                write_explain(buf, &r, &s)?;
                buf.push_str(rest);
                return Ok(code);
            }
            Ok(write_solvability(buf, &verdict, &r))
        }
        Command::SolveRight { r, s, explain } => {
            let (r, s) = (read(&r)?, read(&s)?);
            let verdict = solver::solve_right(&r, &s).map_err(lib)?;
            let mut body = String::new();
            let code = write_solvability(&mut body, &verdict, &r);
            let (head, rest) = body.split_once('\n').expect("verdict line");
            buf.push_str(head);
            buf.push('\n');
            if explain {
                // Sets of the transposed equation R'∘Y = S'.
                write_explain(buf, &r.converse(), &s.converse())?;
            }
            buf.push_str(rest);
            Ok(code)
        }
        Command::Count { r, s } => match solve_pair(&read(&r)?, &read(&s)?)? {
            Solvability::Solvable(space) => {
                buf.push_str(&format!("{}\n", space.count()));
                Ok(0)
            }
            Solvability::Unsolvable(_) => {
                buf.push_str("0\n");
                Ok(2)
            }
        },
        Command::Enumerate {
            r,
            s,
            limit,
            format,
        } => {
            let r = read(&r)?;
            match solve_pair(&r, &read(&s)?)? {
                Solvability::Solvable(space) => {
                    let limit = if limit == 0 { u64::MAX } else { limit };
                    for (n, x) in space
                        .solutions()
                        .take(limit.min(usize::MAX as u64) as usize)
                        .enumerate()
                    {
                        if n > 0 {
                            buf.push('\n');
                        }
                        buf.push_str(&render(&x, format));
                    }
                    Ok(0)
                }
                unsolvable => Ok(write_solvability(buf, &unsolvable, &r)),
            }
        }
        Command::Greatest { r, s, format } => {
            let r = read(&r)?;
            match solve_pair(&r, &read(&s)?)? {
                Solvability::Solvable(space) => {
                    buf.push_str(&render(&space.greatest(), format));
                    Ok(0)
                }
                unsolvable => Ok(write_solvability(buf, &unsolvable, &r)),
            }
        }
        Command::Verify { r, x, s } => {
            if solver::verify(&read(&r)?, &read(&x)?, &read(&s)?).map_err(lib)? {
                buf.push_str("OK\n");
                Ok(0)
            } else {
                buf.push_str("FAIL\n");
                Ok(2)
            }
        }
        Command::Invert { r } => match solver::invert(&read(&r)?) {
            Ok(inv) => {
                buf.push_str(&io::write_matrix(&inv));
                Ok(0)
            }
            Err(Error::NotInvertible) => {
                buf.push_str("NOT INVERTIBLE\n");
                Ok(2)
            }
            Err(e) => Err(lib(e)),
        },
        Command::SolveFunctional { r, s } => {
            let r = read(&r)?;
            match solver::solve_functional(&r, &read(&s)?).map_err(lib)? {
                FunctionalOutcome::Solved(space) => {
                    Ok(write_solvability(buf, &Solvability::Solvable(space), &r))
                }
                FunctionalOutcome::Unsolvable(w) => {
                    Ok(write_solvability(buf, &Solvability::Unsolvable(w), &r))
                }
                FunctionalOutcome::NotFunctional { row } => {
                    buf.push_str(&format!(
                        "NOT FUNCTIONAL row={}\n",
                        r.index_set().label(row)
                    ));
                    Ok(2)
                }
            }
        }
        Command::Shortcut { r, s } => {
            match solver::shortcut_refl_trans(&read(&r)?, &read(&s)?).map_err(lib)? {
                Shortcut::Solved(x) => {
                    buf.push_str(&io::write_matrix(&x));
                    Ok(0)
                }
                Shortcut::NotApplicable(why) => {
                    buf.push_str(&format!("NOT APPLICABLE: {why}\n"));
                    Ok(2)
                }
            }
        }
        Command::Diagnose { r, s } => {
            let r = read(&r)?;
            let found = solver::diagnose_unsolvable(&r, &read(&s)?).map_err(lib)?;
            for w in &found {
                buf.push_str(&format!("{}\n", w.display(r.index_set())));
            }
            Ok(if found.is_empty() { 0 } else { 2 })
        }
        Command::Oracle {
            r,
            s,
            right,
            cap,
            format,
        } => {
            let (r, s) = (read(&r)?, read(&s)?);
            let sols = if right {
                oracle::brute_force_right_solutions(&r, &s, cap)
            } else {
                oracle::brute_force_solutions_capped(&r, &s, cap)
            }
            .map_err(lib)?;
            for (n, x) in sols.iter().enumerate() {
                if n > 0 {
                    buf.push('\n');
                }
                buf.push_str(&render(x, format));
            }
            Ok(if sols.is_empty() { 2 } else { 0 })
        }
    }
}
