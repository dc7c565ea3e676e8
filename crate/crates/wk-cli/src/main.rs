//! `wk` — check, trace, enumerate, classify, convert and compare two-head
//! automata and linear grammars, and run the bundled corpus suite.
//!
//! Exit codes: 0 success/accept/equivalent, 1 reject/differ/suite failure,
//! 2 usage error, 3 parse or alphabet error, 4 contract violation
//! (lambda-moves, grammars that are not lambda-free).

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};

use wk_automata::format::{
    self, grammar_to_text, machine_to_text, parse_any, parse_grammar, parse_machine, FileKind,
};
use wk_automata::{
    enumerate_language, equivalent_up_to, oracle_by_name, run_suite, GrammarError, LanguageRef,
    LinearGrammar, WkAutomaton,
};

const EXIT_DIFFER: u8 = 1;
const EXIT_PARSE: u8 = 3;
const EXIT_CONTRACT: u8 = 4;

#[derive(Parser)]
#[command(name = "wk", version, about = "Two-head automata toolbox")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Test whether a machine accepts a word (`_` is the empty word).
    Check {
        machine: PathBuf,
        word: String,
        /// Print the accepting run, one configuration per line.
        #[arg(long)]
        trace: bool,
    },
    /// List all accepted words up to a length bound.
    Enumerate {
        machine: PathBuf,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
    },
    /// Print the machine's variant flags (subset of `N F S 1`).
    Classify { machine: PathBuf },
    /// Convert between machine and grammar files (result on stdout).
    #[command(group(ArgGroup::new("direction").required(true).args(["to_grammar", "to_automaton"])))]
    Convert {
        /// Machine file to convert into a linear grammar.
        #[arg(long, value_name = "MACHINE")]
        to_grammar: Option<PathBuf>,
        /// Grammar file to convert into a 1-limited machine.
        #[arg(long, value_name = "GRAMMAR")]
        to_automaton: Option<PathBuf>,
    },
    /// Compare two languages on all words up to a length bound. Sides are
    /// machine files, grammar files, or `oracle:<name>`.
    Compare {
        left: String,
        right: String,
        #[arg(long, default_value_t = 10)]
        max_len: usize,
    },
    /// Run the bundled corpus checks and print the report.
    Suite {
        #[arg(long, default_value_t = 10)]
        max_len: usize,
    },
}

/// Error carrying the exit code mandated for its class of failure.
struct CmdError {
    code: u8,
    message: String,
}

impl CmdError {
    fn parse(message: impl Into<String>) -> Self {
        CmdError {
            code: EXIT_PARSE,
            message: message.into(),
        }
    }

    fn contract(message: impl Into<String>) -> Self {
        CmdError {
            code: EXIT_CONTRACT,
            message: message.into(),
        }
    }
}

fn read_file(path: &Path) -> Result<String, CmdError> {
    fs::read_to_string(path).map_err(|e| CmdError::parse(format!("{}: {e}", path.display())))
}

fn load_machine(path: &Path) -> Result<WkAutomaton, CmdError> {
    let text = read_file(path)?;
    parse_machine(&text).map_err(|e| CmdError::parse(format!("{}: {e}", path.display())))
}

fn load_grammar(path: &Path) -> Result<LinearGrammar, CmdError> {
    let text = read_file(path)?;
    parse_grammar(&text).map_err(|e| CmdError::parse(format!("{}: {e}", path.display())))
}

fn cmd_check(machine: &Path, word: &str, trace: bool) -> Result<u8, CmdError> {
    let m = load_machine(machine)?;
    let word = format::word_from_text(word);
    let run = m.trace(word).map_err(|e| CmdError::parse(e.to_string()))?;
    match run {
        Some(run) => {
            if trace {
                let c = run.start();
                println!("{} [{},{})", m.state_name(c.state), c.lo, c.hi);
                for step in run.steps() {
                    let t = &m.transitions()[step.transition];
                    println!(
                        "{} [{},{}) via ({},{})",
                        m.state_name(step.config.state),
                        step.config.lo,
                        step.config.hi,
                        format::word_to_text(&t.u),
                        format::word_to_text(&t.v),
                    );
                }
            }
            println!("ACCEPT");
            Ok(0)
        }
        None => {
            println!("REJECT");
            Ok(EXIT_DIFFER)
        }
    }
}

fn cmd_enumerate(machine: &Path, max_len: usize) -> Result<u8, CmdError> {
    let m = load_machine(machine)?;
    for word in enumerate_language(&m, max_len) {
        println!("{}", format::word_to_text(&word));
    }
    Ok(0)
}

fn cmd_classify(machine: &Path) -> Result<u8, CmdError> {
    let m = load_machine(machine)?;
    println!("{}", m.classify());
    Ok(0)
}

fn cmd_convert(to_grammar: Option<&Path>, to_automaton: Option<&Path>) -> Result<u8, CmdError> {
    match (to_grammar, to_automaton) {
        (Some(path), None) => {
            let m = load_machine(path)?;
            let g = m
                .to_linear_grammar()
                .map_err(|e| CmdError::contract(e.to_string()))?;
            print!("{}", grammar_to_text(&g));
            Ok(0)
        }
        (None, Some(path)) => {
            let g = load_grammar(path)?;
            let normal = g.normalize().map_err(|e| match e {
                GrammarError::LambdaProduction(_) => CmdError::contract(e.to_string()),
                other => CmdError::parse(other.to_string()),
            })?;
            let m = normal
                .to_automaton()
                .map_err(|e| CmdError::contract(e.to_string()))?;
            print!("{}", machine_to_text(&m));
            Ok(0)
        }
        _ => unreachable!("clap enforces exactly one direction"),
    }
}

/// A compare operand: `oracle:<name>` or a machine/grammar file.
enum Side {
    Machine(WkAutomaton),
    Grammar(LinearGrammar),
    Oracle(wk_automata::LanguageOracle),
}

impl Side {
    fn load(operand: &str) -> Result<Side, CmdError> {
        if let Some(name) = operand.strip_prefix("oracle:") {
            return oracle_by_name(name)
                .map(Side::Oracle)
                .ok_or_else(|| CmdError::parse(format!("unknown oracle `{name}`")));
        }
        let path = Path::new(operand);
        let text = read_file(path)?;
        match parse_any(&text) {
            Ok(FileKind::Machine(m)) => Ok(Side::Machine(m)),
            Ok(FileKind::Grammar(g)) => Ok(Side::Grammar(g)),
            Err(e) => Err(CmdError::parse(format!("{operand}: {e}"))),
        }
    }

    fn as_ref(&self) -> LanguageRef<'_> {
        match self {
            Side::Machine(m) => LanguageRef::Machine(m),
            Side::Grammar(g) => LanguageRef::Grammar(g),
            Side::Oracle(o) => LanguageRef::Oracle(o),
        }
    }
}

fn cmd_compare(left: &str, right: &str, max_len: usize) -> Result<u8, CmdError> {
    let left = Side::load(left)?;
    let right = Side::load(right)?;
    match equivalent_up_to(&left.as_ref(), &right.as_ref(), max_len) {
        None => {
            println!("EQUIV<={max_len}");
            Ok(0)
        }
        Some(word) => {
            println!("DIFFER {}", format::word_to_text(&word));
            Ok(EXIT_DIFFER)
        }
    }
}

fn cmd_suite(max_len: usize) -> Result<u8, CmdError> {
    let report = run_suite(max_len);
    print!("{}", report.to_table());
    println!();
    print!("{}", report.to_lines());
    println!("{}", report.summary());
    println!("result: {}", if report.passed() { "pass" } else { "fail" });
    Ok(if report.passed() { 0 } else { EXIT_DIFFER })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Check {
            machine,
            word,
            trace,
        } => cmd_check(machine, word, *trace),
        Command::Enumerate { machine, max_len } => cmd_enumerate(machine, *max_len),
        Command::Classify { machine } => cmd_classify(machine),
        Command::Convert {
            to_grammar,
            to_automaton,
        } => cmd_convert(to_grammar.as_deref(), to_automaton.as_deref()),
        Command::Compare {
            left,
            right,
            max_len,
        } => cmd_compare(left, right, *max_len),
        Command::Suite { max_len } => cmd_suite(*max_len),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
