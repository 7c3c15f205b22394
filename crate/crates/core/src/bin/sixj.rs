use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use sixj::{canonical_form, eval, parity_of, regge_star, HalfInt, Mode, RotenbergLine, SixJSymbol, TableConfig};

/// Exact 6-j and super 6-j tables with Regge classification.
#[derive(Parser, Debug)]
#[command(name = "sixj", version, args_conflicts_with_subcommands = true)]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,

    /// Largest spin in the table, e.g. "10" or "21/2".
    #[arg(long, default_value = "10")]
    max_spin: HalfInt,

    /// standard or super.
    #[arg(long, default_value = "super")]
    mode: Mode,

    /// Also write one classification file per (parity, class).
    #[arg(long)]
    classify: bool,

    /// Output directory.
    #[arg(long, default_value = ".")]
    out: PathBuf,

    /// Worker threads.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    workers: u32,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the exact value of one symbol.
    Eval {
        /// "{J1 J2 J3; j1 j2 j3}" or six doubled spins.
        symbol: String,
        #[arg(long, default_value = "standard")]
        mode: Mode,
    },
    /// Print the Regge classification of one symbol.
    Orbit {
        symbol: String,
        #[arg(long, default_value = "standard")]
        mode: Mode,
    },
}

fn symbol_arg(text: &str) -> sixj::Result<SixJSymbol> {
    text.parse()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Some(Command::Eval { symbol, mode }) => symbol_arg(&symbol).and_then(|s| {
            let v = eval(&s, mode)?;
            match mode {
                Mode::Super => println!("{s} {} = {v}", parity_of(&s)?.marker()),
                Mode::Standard => println!("{s} = {v}"),
            }
            println!("{}", RotenbergLine::encode(&v));
            Ok(())
        }),
        Some(Command::Orbit { symbol, mode }) => symbol_arg(&symbol).and_then(|s| {
            let report = regge_star(&s, mode)?;
            println!("{} {} {}", canonical_form(&s), report.class, report.closure_size);
            for r in &report.representatives {
                println!("  {r}");
            }
            Ok(())
        }),
        None => {
            let config = TableConfig {
                max_spin: cli.max_spin,
                mode: cli.mode,
                classify: cli.classify,
                output_dir: cli.out,
                workers: cli.workers as usize,
            };
            sixj::run(&config).map(|summary| {
                eprintln!("{} symbols", summary.symbols);
                for f in &summary.files {
                    eprintln!("wrote {}", f.display());
                }
            })
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("sixj: {e}");
            ExitCode::FAILURE
        }
    }
}
