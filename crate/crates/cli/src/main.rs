//! `parhopf`: batch access to diagram Hopf algebra computations.

mod input;

use std::fmt;
use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use parhopf::checks::{run_suite, Predicate, Suite, SuiteConfig};
use parhopf::diagram::enumerate_diagrams;
use parhopf::{classical, morphisms, parqsym, parsym, Basis, Composition, Diagram, Element, Error, QParam, Space};
use serde_json::{json, Value};

use input::{composition_element, diagram_element, read_input, Input};

/// Largest order allowed without `--allow-large`.
const LARGE_ORDER: usize = 4;

#[derive(Parser, Debug)]
#[command(name = "parhopf", version, about = "Exact computations in ParSym, ParQSym, QSym, NSym and Sh")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List every diagram of an order as JSON lines, then a count line.
    Enum {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        predicate: Option<String>,
        #[arg(long)]
        allow_large: bool,
    },
    /// Apply a structure map to an element.
    Op {
        #[arg(value_enum)]
        op: OpName,
        #[arg(long)]
        space: String,
        #[arg(long)]
        basis: String,
        #[arg(long, allow_hyphen_values = true)]
        q: Option<String>,
        #[arg(long = "in", num_args = 1..=2, required = true)]
        inputs: Vec<String>,
    },
    /// Rewrite an element in another basis.
    Convert {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long, allow_hyphen_values = true)]
        q: Option<String>,
        /// Needed only when the bases do not determine it.
        #[arg(long)]
        space: Option<String>,
        #[arg(long = "in")]
        input: String,
    },
    /// Evaluate the pairing of a ParQSym element with a ParSym element.
    Pair {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long, default_value = "M")]
        left_basis: String,
        #[arg(long, default_value = "H")]
        right_basis: String,
        #[arg(long, allow_hyphen_values = true)]
        q: Option<String>,
    },
    /// Apply one of the maps between the algebras.
    Map {
        #[arg(long, value_enum)]
        name: MapName,
        #[arg(long = "in")]
        input: String,
    },
    /// Run a verification suite and print its report.
    Check {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 3)]
        max_order: usize,
        /// Comma-separated list, e.g. `1,2,-3,1/2`.
        #[arg(long, allow_hyphen_values = true)]
        q: Option<String>,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        #[arg(long)]
        allow_large: bool,
    },
    /// Draw a diagram as two rows of block labels.
    Render {
        #[arg(long = "in")]
        input: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OpName {
    Mul,
    Comul,
    Antipode,
    Counit,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MapName {
    PsiPq,
    Phi,
    PhiPs,
}

#[derive(Debug)]
pub struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    pub fn malformed(message: impl Into<String>) -> Self {
        CliError { code: 2, message: message.into() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::SingularQ | Error::SingularWeight(_) | Error::NonTerminating(_) => 3,
            _ => 2,
        };
        CliError { code, message: e.to_string() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

struct Output {
    text: String,
    code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

fn parse_q(q: Option<&str>) -> Result<Option<QParam>, CliError> {
    q.map(|s| s.parse::<QParam>().map_err(CliError::from)).transpose()
}

fn check_order(order: usize, allow_large: bool) -> Result<(), CliError> {
    if order > LARGE_ORDER && !allow_large {
        return Err(CliError::malformed(format!("order {order} exceeds {LARGE_ORDER}; pass --allow-large")));
    }
    Ok(())
}

fn compact(v: &Value) -> String {
    serde_json::to_string(v).expect("json serializes")
}

fn run(cli: Cli) -> Result<Output, CliError> {
    match cli.command {
        Command::Enum { order, predicate, allow_large } => {
            check_order(order, allow_large)?;
            let predicate = predicate.map(|p| p.parse::<Predicate>()).transpose()?;
            let mut lines = String::new();
            let mut count = 0usize;
            for d in enumerate_diagrams(order) {
                if predicate.is_none_or(|p| p.holds(&d)) {
                    lines.push_str(&compact(&d.to_json_value()));
                    lines.push('\n');
                    count += 1;
                }
            }
            lines.push_str(&compact(&json!({ "count": count })));
            Ok(Output::ok(lines))
        }
        Command::Op { op, space, basis, q, inputs } => {
            let space: Space = space.parse()?;
            let basis: Basis = basis.parse()?;
            let q = parse_q(q.as_deref())?;
            let arity = if matches!(op, OpName::Mul) { 2 } else { 1 };
            if inputs.len() != arity {
                return Err(CliError::malformed(format!("{op:?} takes {arity} input(s), got {}", inputs.len())));
            }
            let parsed = inputs.iter().map(|s| read_input(s)).collect::<Result<Vec<Input>, _>>()?;
            if space.uses_diagrams() {
                run_diagram_op(op, space, basis, q, parsed)
            } else {
                run_composition_op(op, space, parsed)
            }
        }
        Command::Convert { from, to, q, space, input } => {
            let from: Basis = from.parse()?;
            let to: Basis = to.parse()?;
            let q = parse_q(q.as_deref())?;
            let space = match space {
                Some(s) => s.parse()?,
                None => infer_space(from, to)?,
            };
            if !space.uses_diagrams() {
                return Err(CliError::malformed(format!("{space} has a single basis")));
            }
            let from_q = if from == Basis::ETA { None } else { q.clone() };
            let x = diagram_element(read_input(&input)?, space, from, from_q)?;
            let to_q = if to == Basis::ETA { None } else { q };
            let y = input::convert_diagram(&x, to, to_q)?;
            Ok(Output::ok(compact(&y.to_json_value())))
        }
        Command::Pair { left, right, left_basis, right_basis, q } => {
            let q = parse_q(q.as_deref())?;
            let lb: Basis = left_basis.parse()?;
            let rb: Basis = right_basis.parse()?;
            let lq = if lb.needs_q() { q.clone() } else { None };
            let rq = if rb.needs_q() { q } else { None };
            let x = diagram_element(read_input(&left)?, Space::ParQSym, lb, lq)?;
            let y = diagram_element(read_input(&right)?, Space::ParSym, rb, rq)?;
            Ok(Output::ok(morphisms::pair(&x, &y)?.to_string()))
        }
        Command::Map { name, input } => {
            let parsed = read_input(&input)?;
            let out = match name {
                MapName::PsiPq => {
                    morphisms::psi_pq(&diagram_element(parsed, Space::ParQSym, Basis::M, None)?)?.to_json_value()
                }
                MapName::PhiPs => {
                    morphisms::phi_ps(&diagram_element(parsed, Space::ParQSym, Basis::M, None)?)?.to_json_value()
                }
                MapName::Phi => morphisms::phi(&composition_element(parsed, Space::NSym)?)?.to_json_value(),
            };
            Ok(Output::ok(compact(&out)))
        }
        Command::Check { suite, max_order, q, samples, seed, allow_large } => {
            check_order(max_order, allow_large)?;
            let suite: Suite = suite.parse()?;
            let q_values = match q {
                Some(list) => list
                    .split(',')
                    .map(|s| s.trim().parse::<QParam>())
                    .collect::<parhopf::Result<Vec<_>>>()?,
                None => QParam::standard_set(),
            };
            let cfg = SuiteConfig { max_order, q_values, samples, seed };
            let report = run_suite(suite, &cfg)?;
            let code = if report.passed() { 0 } else { 1 };
            Ok(Output { text: report.to_json_pretty(), code })
        }
        Command::Render { input } => match read_input(&input)? {
            Input::Diagram(d) => Ok(Output::ok(d.render().trim_end().to_string())),
            Input::Empty => Ok(Output::ok(Diagram::empty().render().trim_end().to_string())),
            Input::Element(parhopf::AnyElement::Diagram(e)) => {
                let mut text = String::new();
                for (k, c) in e.sorted_terms() {
                    text.push_str(&format!("{c} * {}_{k}\n{}\n", e.basis, k.render()));
                }
                Ok(Output::ok(text.trim_end().to_string()))
            }
            _ => Err(CliError::malformed("render takes a diagram")),
        },
    }
}

fn infer_space(from: Basis, to: Basis) -> Result<Space, CliError> {
    let side = |b: Basis| match b {
        Basis::H | Basis::R | Basis::KQ => Some(Space::ParSym),
        Basis::M | Basis::L | Basis::ETA | Basis::ETAQ => Some(Space::ParQSym),
        Basis::Natural => None,
    };
    match (side(from), side(to)) {
        (Some(a), Some(b)) if a == b => Ok(a),
        _ => Err(CliError::malformed(format!("cannot convert between {from} and {to}"))),
    }
}

fn run_diagram_op(op: OpName, space: Space, basis: Basis, q: Option<QParam>, inputs: Vec<Input>) -> Result<Output, CliError> {
    let mut xs = inputs
        .into_iter()
        .map(|i| diagram_element(i, space, basis, q.clone()))
        .collect::<Result<Vec<Element<Diagram>>, _>>()?
        .into_iter();
    let x = xs.next().expect("arity checked");
    let parqsym_space = space == Space::ParQSym;
    let value = match op {
        OpName::Mul => {
            let y = xs.next().expect("arity checked");
            if parqsym_space { parqsym::product(&x, &y)? } else { parsym::product(&x, &y)? }.to_json_value()
        }
        OpName::Comul => if parqsym_space { parqsym::coproduct(&x)? } else { parsym::coproduct(&x)? }.to_json_value(),
        OpName::Antipode => if parqsym_space { parqsym::antipode(&x)? } else { parsym::antipode(&x)? }.to_json_value(),
        OpName::Counit => {
            let c = if parqsym_space { parqsym::counit(&x)? } else { parsym::counit(&x)? };
            return Ok(Output::ok(c.to_string()));
        }
    };
    Ok(Output::ok(compact(&value)))
}

fn run_composition_op(op: OpName, space: Space, inputs: Vec<Input>) -> Result<Output, CliError> {
    let mut xs = inputs
        .into_iter()
        .map(|i| composition_element(i, space))
        .collect::<Result<Vec<Element<Composition>>, _>>()?
        .into_iter();
    let x = xs.next().expect("arity checked");
    let value = match op {
        OpName::Mul => classical::product(&x, &xs.next().expect("arity checked"))?.to_json_value(),
        OpName::Comul => classical::coproduct(&x)?.to_json_value(),
        OpName::Antipode => classical::antipode(&x)?.to_json_value(),
        OpName::Counit => return Ok(Output::ok(classical::counit(&x)?.to_string())),
    };
    Ok(Output::ok(compact(&value)))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = writeln!(stdout, "{}", out.text);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code)
        }
    }
}
