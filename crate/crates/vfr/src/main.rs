use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use vfr::dsl::{self, Document};
use vfr::ethics::classify_operators;
use vfr::model::{AgentProfile, State};
use vfr::planner::{
    find_plans, succ, validate_plan, PlanError, SearchConfig, SearchMode, ValidateError,
};
use vfr::report::{
    ClassifyReport, CompareReport, CoopReport, FilterReport, PlanReport, ValidateReport,
};

const EXIT_PARSE: u8 = 2;
const EXIT_UNKNOWN: u8 = 3;
const EXIT_BAD_GOAL: u8 = 4;
const EXIT_BAD_PLAN: u8 = 5;

#[derive(Parser)]
#[command(name = "vfr", version, about = "Value-filtered STRIPS planning")]
struct Cli {
    /// Output format for reports
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Standard,
    Vfr,
}

impl Mode {
    fn as_str(self) -> &'static str {
        match self {
            Mode::Standard => "standard",
            Mode::Vfr => "vfr",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Partition the propositions into an agent's clean base and its complement
    Filter {
        file: PathBuf,
        /// Agent whose profile drives the filter
        #[arg(long)]
        agent: String,
    },
    /// Enumerate every plan for the instance
    Plan {
        file: PathBuf,
        /// Agent whose profile restricts the search (required for vfr mode)
        #[arg(long)]
        agent: Option<String>,
        #[arg(long, value_enum, default_value_t = Mode::Standard)]
        mode: Mode,
        /// Longest plan considered
        #[arg(long, default_value_t = SearchConfig::DEFAULT_MAX_DEPTH)]
        max_depth: usize,
        /// Drop operators whose cleaning class is violating
        #[arg(long)]
        require_cleaning: bool,
        /// Additionally require every complement proposition to be false at the goal
        #[arg(long)]
        strict_goal: bool,
    },
    /// Replay a comma-separated step sequence against the instance
    Validate {
        file: PathBuf,
        #[arg(long)]
        agent: Option<String>,
        /// Operator names in order, e.g. O1,O3
        #[arg(long, value_delimiter = ',', required = true)]
        steps: Vec<String>,
        #[arg(long, value_enum, default_value_t = Mode::Standard)]
        mode: Mode,
        #[arg(long)]
        require_cleaning: bool,
        #[arg(long)]
        strict_goal: bool,
    },
    /// Report admissibility and cleaning class for every operator
    Classify {
        file: PathBuf,
        #[arg(long)]
        agent: String,
    },
    /// Compare two agents' clean bases
    Compare {
        file: PathBuf,
        /// Exactly two agent names, e.g. A,B
        #[arg(long, value_delimiter = ',', required = true)]
        agents: Vec<String>,
    },
    /// Replay steps and check every reached state against both agents' clean bases
    Coop {
        file: PathBuf,
        /// Exactly two agent names, e.g. A,B
        #[arg(long, value_delimiter = ',', required = true)]
        agents: Vec<String>,
        /// Operator names in order; may be empty to check only the initial state
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        steps: Vec<String>,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(failure) => {
            match failure.message {
                Output::Stderr(message) => eprintln!("error: {message}"),
                Output::Report(report) => print!("{report}"),
            }
            ExitCode::from(failure.code)
        }
    }
}

enum Output {
    Stderr(String),
    Report(String),
}

struct Failure {
    code: u8,
    message: Output,
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: Output::Stderr(message.into()),
    }
}

fn load(path: &Path) -> Result<Document, Failure> {
    let source = std::fs::read_to_string(path)
        .map_err(|err| fail(EXIT_PARSE, format!("cannot read {}: {err}", path.display())))?;
    let (document, diagnostics) = dsl::parse_with_diagnostics(&source);
    for diagnostic in &diagnostics {
        eprintln!("{}:{diagnostic}", path.display());
    }
    document.ok_or(Failure {
        code: EXIT_PARSE,
        message: Output::Stderr(format!("cannot load {}", path.display())),
    })
}

fn profile<'d>(document: &'d Document, agent: &str) -> Result<&'d AgentProfile, Failure> {
    document
        .profile(agent)
        .ok_or_else(|| fail(EXIT_UNKNOWN, format!("unknown agent: {agent}")))
}

fn two_agents(agents: &[String]) -> Result<(&str, &str), Failure> {
    match agents {
        [a, b] => Ok((a, b)),
        _ => Err(fail(EXIT_PARSE, "--agents takes exactly two names")),
    }
}

fn search_config(
    mode: Mode,
    max_depth: usize,
    require_cleaning: bool,
    strict_goal: bool,
    agent: Option<&str>,
) -> Result<SearchConfig, Failure> {
    if mode == Mode::Vfr && agent.is_none() {
        return Err(fail(EXIT_PARSE, "--mode vfr requires --agent"));
    }
    if strict_goal && agent.is_none() {
        return Err(fail(EXIT_PARSE, "--strict-goal requires --agent"));
    }
    Ok(SearchConfig {
        mode: match mode {
            Mode::Standard => SearchMode::Standard,
            Mode::Vfr => SearchMode::Vfr,
        },
        require_cleaning,
        strict_goal,
        max_depth,
    })
}

fn run(cli: Cli) -> Result<String, Failure> {
    let format = cli.format;
    match cli.command {
        Command::Filter { file, agent } => {
            let document = load(&file)?;
            let profile = profile(&document, &agent)?;
            let report = FilterReport::build(profile, document.problem().world());
            Ok(render(format, report.to_text(), || report.to_json()))
        }
        Command::Plan {
            file,
            agent,
            mode,
            max_depth,
            require_cleaning,
            strict_goal,
        } => {
            let document = load(&file)?;
            let config = search_config(
                mode,
                max_depth,
                require_cleaning,
                strict_goal,
                agent.as_deref(),
            )?;
            let profile = agent
                .as_deref()
                .map(|name| profile(&document, name))
                .transpose()?;
            let plans = find_plans(document.problem(), profile, &config).map_err(plan_failure)?;
            let report = PlanReport::build(mode.as_str(), agent.as_deref(), &plans);
            Ok(render(format, report.to_text(), || report.to_json()))
        }
        Command::Validate {
            file,
            agent,
            steps,
            mode,
            require_cleaning,
            strict_goal,
        } => {
            let document = load(&file)?;
            let config = search_config(
                mode,
                SearchConfig::DEFAULT_MAX_DEPTH,
                require_cleaning,
                strict_goal,
                agent.as_deref(),
            )?;
            let profile = agent
                .as_deref()
                .map(|name| profile(&document, name))
                .transpose()?;
            let outcome = validate_plan(document.problem(), &steps, profile, &config);
            match &outcome {
                Err(ValidateError::UnknownOperator { name, .. }) => {
                    Err(fail(EXIT_UNKNOWN, format!("unknown operator: {name}")))
                }
                Err(ValidateError::MissingProfile) => {
                    Err(fail(EXIT_PARSE, "--mode vfr requires --agent"))
                }
                _ => {
                    let report = ValidateReport::build(&steps, &outcome);
                    let rendered = render(format, report.to_text(), || report.to_json());
                    if outcome.is_ok() {
                        Ok(rendered)
                    } else {
                        Err(Failure {
                            code: EXIT_BAD_PLAN,
                            message: Output::Report(rendered),
                        })
                    }
                }
            }
        }
        Command::Classify { file, agent } => {
            let document = load(&file)?;
            let profile = profile(&document, &agent)?;
            let rows = classify_operators(document.problem(), profile);
            let report = ClassifyReport::build(&agent, &rows);
            Ok(render(format, report.to_text(), || report.to_json()))
        }
        Command::Compare { file, agents } => {
            let document = load(&file)?;
            let (first, second) = two_agents(&agents)?;
            let a = profile(&document, first)?;
            let b = profile(&document, second)?;
            let report = CompareReport::build(a, b, document.problem().world());
            Ok(render(format, report.to_text(), || report.to_json()))
        }
        Command::Coop {
            file,
            agents,
            steps,
        } => {
            let document = load(&file)?;
            let (first, second) = two_agents(&agents)?;
            let a = profile(&document, first)?;
            let b = profile(&document, second)?;
            let trace = replay(&document, &steps)?;
            let report = CoopReport::build(a, b, document.problem().world(), &steps, &trace);
            Ok(render(format, report.to_text(), || report.to_json()))
        }
    }
}

fn render(format: Format, text: String, json: impl FnOnce() -> String) -> String {
    match format {
        Format::Text => text,
        Format::Json => json(),
    }
}

fn plan_failure(err: PlanError) -> Failure {
    match &err {
        PlanError::InvalidGoal(_) => fail(EXIT_BAD_GOAL, err.to_string()),
        PlanError::MissingProfile => fail(EXIT_PARSE, "--mode vfr requires --agent"),
        _ => fail(1, err.to_string()),
    }
}

/// Replays steps with plain applicability only; coop has no goal requirement.
fn replay(document: &Document, steps: &[String]) -> Result<Vec<State>, Failure> {
    let problem = document.problem();
    let mut state = problem.initial().clone();
    let mut trace = vec![state.clone()];
    for (index, name) in steps.iter().enumerate() {
        let operator = problem
            .operator(name)
            .ok_or_else(|| fail(EXIT_UNKNOWN, format!("unknown operator: {name}")))?;
        state = succ(&state, operator, problem.world()).map_err(|err| {
            fail(
                EXIT_BAD_PLAN,
                format!("replay failed at step {}: {err}", index + 1),
            )
        })?;
        trace.push(state.clone());
    }
    Ok(trace)
}
