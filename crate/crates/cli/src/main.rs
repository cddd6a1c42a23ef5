use circuit_ir::json::{from_json, to_json};
use circuit_ir::{Arch, Circuit};
use clap::{Parser, Subcommand, ValueEnum};
use group_core::{GroupId, C64};
use rayon::prelude::*;
use rep_theory::{dft_matrix, RepTable64};
use resource_estimator::{census, comparison_csv, comparison_rows, comparison_text, simcost, Impl};
use simulator_verifier::{tolerance_from_env, verify_circuit, VerificationReport, DEFAULT_TOLERANCE};
use std::fmt::Write as _;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "naqft", version, about = "Fast quantum Fourier transforms over finite subgroups of SU(2) and SU(3)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum)]
    group: Option<GroupArg>,
    #[arg(long, global = true, value_enum, default_value = "mixed")]
    arch: ArchArg,
    #[arg(long, global = true, default_value_t = 1e-10)]
    epsilon: f64,
    /// Verification tolerance (default 1e-9, or NAQFT_TOLERANCE)
    #[arg(long, global = true)]
    tolerance: Option<f64>,
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
}

#[derive(Subcommand)]
enum Command {
    /// Write the FFT circuit as JSON
    Synthesize,
    /// Verify a synthesized or stored circuit
    Verify {
        #[arg(long = "in")]
        input: Option<std::path::PathBuf>,
    },
    /// Write the reference DFT matrix
    Oracle,
    /// Gate census of the qubit circuit against the published costs
    Resources,
    /// Evaluate a simulation cost row
    Simcost {
        #[arg(long = "impl", value_enum)]
        implementation: ImplArg,
        #[arg(long)]
        d: u32,
    },
    /// Verify every group of both chains
    ChainReport,
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupArg {
    Z2,
    Z4,
    Q8,
    Bt,
    Bo,
    Z3z3,
    D27,
    D54,
    S36x3,
}

impl From<GroupArg> for GroupId {
    fn from(g: GroupArg) -> GroupId {
        match g {
            GroupArg::Z2 => GroupId::Z2,
            GroupArg::Z4 => GroupId::Z4,
            GroupArg::Q8 => GroupId::Q8,
            GroupArg::Bt => GroupId::BT,
            GroupArg::Bo => GroupId::BO,
            GroupArg::Z3z3 => GroupId::Z3xZ3,
            GroupArg::D27 => GroupId::D27,
            GroupArg::D54 => GroupId::D54,
            GroupArg::S36x3 => GroupId::S36x3,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ArchArg {
    Mixed,
    Qubit,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum ImplArg {
    Ft,
    Fft,
}

/// Failure kinds: verification (exit 1) or usage/input (exit 2).
enum Failure {
    Verification(String),
    Usage(String),
}

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

impl Cli {
    fn group(&self) -> Result<GroupId, Failure> {
        self.group.map(GroupId::from).ok_or_else(|| Failure::Usage("--group is required".into()))
    }

    fn arch(&self) -> Arch {
        match self.arch {
            ArchArg::Mixed => Arch::Mixed,
            ArchArg::Qubit => Arch::Qubit,
        }
    }

    fn tolerance(&self) -> f64 {
        self.tolerance.unwrap_or_else(|| tolerance_from_env(DEFAULT_TOLERANCE))
    }

    fn emit(&self, s: &str) -> Result<(), Failure> {
        match &self.out {
            Some(p) => std::fs::write(p, s).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
            None => {
                print!("{s}");
                Ok(())
            }
        }
    }
}

/// "re+imj" with 15 decimals; values below print precision are written as 0.
fn complex_cell(z: C64) -> String {
    let clean = |x: f64| if x.abs() < 5e-16 { 0.0 } else { x };
    format!("{:.15}{:+.15}j", clean(z.re), clean(z.im))
}

fn verify(c: &Circuit, tol: f64) -> Result<VerificationReport, Failure> {
    let table = RepTable64::new(c.group()).map_err(usage)?;
    verify_circuit(c, &table, tol).map_err(usage)
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Synthesize => {
            let c = fft_synthesis::synthesize(cli.group()?, cli.arch()).map_err(usage)?;
            cli.emit(&to_json(&c))
        }
        Command::Verify { input } => {
            let c = match input {
                Some(p) => {
                    let s = std::fs::read_to_string(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
                    from_json(&s).map_err(usage)?
                }
                None => fft_synthesis::synthesize(cli.group()?, cli.arch()).map_err(usage)?,
            };
            let r = verify(&c, cli.tolerance())?;
            cli.emit(&(r.to_json() + "\n"))?;
            if r.pass {
                Ok(())
            } else {
                Err(Failure::Verification(r.failures.join("; ")))
            }
        }
        Command::Oracle => {
            let table = RepTable64::new(cli.group()?).map_err(usage)?;
            let mut s = String::new();
            match cli.format.unwrap_or(Format::Csv) {
                Format::Csv => {
                    let f = dft_matrix(&table);
                    for i in 0..f.rows() {
                        let row: Vec<String> = (0..f.cols()).map(|j| complex_cell(f[(i, j)])).collect();
                        s += &row.join(",");
                        s.push('\n');
                    }
                }
                Format::Text => {
                    let elems: Vec<String> = table.group.elements().iter().map(|g| g.to_string()).collect();
                    s += &format!("irrep,{}\n", elems.join(","));
                    for (r, irrep) in table.irreps.iter().enumerate() {
                        let row: Vec<String> = table.chars[r].iter().map(|&z| complex_cell(z)).collect();
                        s += &format!("{},{}\n", irrep.label, row.join(","));
                    }
                }
                Format::Json => {
                    let f = dft_matrix(&table);
                    let rows: Vec<Vec<[f64; 2]>> =
                        (0..f.rows()).map(|i| (0..f.cols()).map(|j| [f[(i, j)].re, f[(i, j)].im]).collect()).collect();
                    s = serde_json::to_string(&rows).map_err(usage)? + "\n";
                }
            }
            cli.emit(&s)
        }
        Command::Resources => {
            let g = cli.group()?;
            let c = fft_synthesis::synthesize(g, Arch::Qubit).map_err(usage)?;
            let r = census(&c);
            let rows = comparison_rows(g, &r, cli.epsilon).map_err(usage)?;
            let s = match cli.format.unwrap_or(Format::Text) {
                Format::Csv => comparison_csv(&rows),
                Format::Text => {
                    let mut s = comparison_text(&rows);
                    let _ = writeln!(s, "toffoli {}", r.counts.toffoli);
                    s
                }
                Format::Json => r.to_json() + "\n",
            };
            cli.emit(&s)
        }
        Command::Simcost { implementation, d } => {
            let i = match implementation {
                ImplArg::Ft => Impl::Ft,
                ImplArg::Fft => Impl::Fft,
            };
            let v = simcost(cli.group()?, i, *d, cli.epsilon).map_err(usage)?;
            let s = match cli.format.unwrap_or(Format::Text) {
                Format::Json => serde_json::json!({ "cost": v }).to_string() + "\n",
                _ => format!("{v:.1}\n"),
            };
            cli.emit(&s)
        }
        Command::ChainReport => {
            let tol = cli.tolerance();
            let arch = cli.arch();
            let results: Vec<(GroupId, Result<VerificationReport, Failure>)> = GroupId::ALL
                .par_iter()
                .map(|&g| (g, fft_synthesis::synthesize(g, arch).map_err(usage).and_then(|c| verify(&c, tol))))
                .collect();
            let mut s = format!("{:<6} {:<6} {:<5} {:>10} {:>10}\n", "group", "arch", "pass", "off-block", "character");
            let mut all = true;
            for (g, r) in &results {
                match r {
                    Ok(r) => {
                        all &= r.pass;
                        let _ = writeln!(
                            s,
                            "{:<6} {:<6} {:<5} {:>10.1e} {:>10.1e}",
                            g.name(),
                            r.arch,
                            r.pass,
                            r.off_block_residual,
                            r.character_residual
                        );
                    }
                    Err(Failure::Usage(e) | Failure::Verification(e)) => {
                        all = false;
                        let _ = writeln!(s, "{:<6} error: {e}", g.name());
                    }
                }
            }
            cli.emit(&s)?;
            if all {
                Ok(())
            } else {
                Err(Failure::Verification("chain report has failures".into()))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(e)) => {
            eprintln!("naqft: verification failed: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(e)) => {
            eprintln!("naqft: {e}");
            ExitCode::from(2)
        }
    }
}
