use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use vknot::alexander::g_polynomial;
use vknot::bracket::{f_polynomial, jones, kauffman_bracket};
use vknot::families::{corpus_entries, make_dn, make_kn, named_example, Named};
use vknot::filamentation::{find_filamentation, Witness};
use vknot::flat::{flat_relations, is_flat_detected, parity};
use vknot::moves::{enumerate_moves, reduce_search, MoveKind, MoveRecord, SearchStatus};
use vknot::{ArrowDiagram, Diagram, Error, OrientedChordDiagram};

#[derive(Parser)]
#[command(name = "vknot", version, about = "Invariants and moves for virtual and flat virtual knot diagrams")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a code and echo it with its canonical form
    Parse(Input),
    /// Print the canonical form
    Canon(Input),
    /// Kauffman bracket <K>
    Bracket(Input),
    /// Normalized bracket f = (-A^3)^-w <K>
    Fpoly(Input),
    /// Jones polynomial, f at A = t^(-1/4)
    Jones(Input),
    /// Generalized Alexander polynomial G(s, t)
    Galex(Input),
    /// Search for a filamentation of a knot universe
    Filament(Input),
    /// Parity of the number of chords joining different components
    Parity(Input),
    /// Flat biquandle relations of a link universe
    Flatbq(Input),
    /// Genus of the diagram's carrier surface
    Genus(Input),
    /// List the applicable Reidemeister moves
    Moves(Input),
    /// Breadth-first search for a reducing sequence of moves
    Reduce {
        #[command(flatten)]
        input: Input,
        /// Chord bound for intermediate diagrams (default: input chords + 2)
        #[arg(long)]
        max_chords: Option<usize>,
        /// Total number of diagrams expanded
        #[arg(long, default_value_t = 10_000)]
        max_steps: usize,
    },
    /// Print a member of a family
    Family {
        /// Family, alternative to --family
        which: Option<Family>,
        #[arg(long = "family")]
        family: Option<Family>,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Print a named corpus diagram, or list the corpus
    Corpus {
        #[arg(long)]
        name: Option<String>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    #[value(name = "Dn")]
    Dn,
    #[value(name = "An")]
    An,
    #[value(name = "Kn")]
    Kn,
}

#[derive(Args)]
struct Input {
    /// Diagram code; roles (o/u) make it an arrow diagram
    #[arg(long, group = "source")]
    code: Option<String>,
    /// Read the code from a file
    #[arg(long, group = "source")]
    file: Option<std::path::PathBuf>,
    #[arg(long, group = "source")]
    family: Option<Family>,
    #[arg(long, requires = "family")]
    n: Option<usize>,
    /// Corpus entry
    #[arg(long, group = "source")]
    name: Option<String>,
    #[arg(long)]
    json: bool,
    /// Include wall-clock time in the output
    #[arg(long)]
    timing: bool,
}

enum Failure {
    Domain(String),
    Parse(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_parse_error() {
            Failure::Parse(e.to_string())
        } else {
            Failure::Domain(e.to_string())
        }
    }
}

type Out = Result<(), Failure>;

fn family_member(f: Family, n: usize) -> Named {
    match f {
        Family::Dn => Named::Ocd(make_dn(n)),
        Family::An | Family::Kn => Named::Arrow(make_kn(n)),
    }
}

fn parse_code(text: &str) -> Result<Named, Error> {
    match ArrowDiagram::parse(text) {
        Ok(d) => Ok(Named::Arrow(d)),
        Err(arrow_err) => match OrientedChordDiagram::parse(text) {
            Ok(d) => Ok(Named::Ocd(d)),
            Err(_) if has_roles(text) => Err(arrow_err),
            Err(ocd_err) => Err(ocd_err),
        },
    }
}

fn has_roles(text: &str) -> bool {
    let chars: Vec<char> = text.chars().collect();
    chars.windows(2).any(|w| matches!(w[0], '+' | '-' | '\u{2212}') && matches!(w[1], 'o' | 'u'))
}

impl Input {
    fn load(&self) -> Result<Named, Failure> {
        if let Some(code) = &self.code {
            return Ok(parse_code(code)?);
        }
        if let Some(path) = &self.file {
            let text = std::fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
            return Ok(parse_code(text.trim())?);
        }
        if let Some(f) = self.family {
            let n = self.n.ok_or_else(|| Failure::Parse("--family needs --n".into()))?;
            return Ok(family_member(f, n));
        }
        if let Some(name) = &self.name {
            return Ok(named_example(name)?);
        }
        Err(Failure::Parse("no input: give --code, --file, --family or --name".into()))
    }

    fn arrow(&self) -> Result<ArrowDiagram, Failure> {
        match self.load()? {
            Named::Arrow(d) => Ok(d),
            Named::Ocd(_) => Err(Error::WrongKind { expected: "arrow" }.into()),
        }
    }

    /// Runs `f` and prints its result as text or as a JSON report.
    fn report<T: Serialize>(&self, invariant: &str, input: &str, f: impl FnOnce() -> Result<(T, String), Failure>) -> Out {
        let start = Instant::now();
        let (payload, text) = f()?;
        let ms = start.elapsed().as_secs_f64() * 1000.0;
        if self.json {
            let mut v = json!({ "input": input, "invariant": invariant, "result": payload });
            if self.timing {
                v["timing_ms"] = json!(ms);
            }
            println!("{v}");
        } else {
            println!("{text}");
            if self.timing {
                eprintln!("time: {ms:.3} ms");
            }
        }
        Ok(())
    }
}

fn run(cli: Cli) -> Out {
    match cli.command {
        Command::Parse(input) => {
            let d = input.load()?;
            let code = d.code();
            let canon = code.canonical_form();
            input.report("parse", &canon, || {
                let kind = if d.as_arrow().is_some() { "arrow" } else { "ocd" };
                let v = json!({
                    "kind": kind,
                    "code": code.serialize(),
                    "canonical": canon,
                    "chords": code.num_chords(),
                    "components": code.num_components(),
                });
                Ok((v, format!("{}\ncanonical: {canon}", code.serialize())))
            })
        }
        Command::Canon(input) => {
            let d = input.load()?;
            let canon = d.code().canonical_form();
            input.report("canon", &canon, || Ok((canon.clone(), canon.clone())))
        }
        Command::Bracket(input) => {
            let d = input.arrow()?;
            input.report("bracket", &d.canonical_form(), || {
                let p = kauffman_bracket(&d);
                Ok((p.clone(), p.to_string()))
            })
        }
        Command::Fpoly(input) => {
            let d = input.arrow()?;
            input.report("fpoly", &d.canonical_form(), || {
                let p = f_polynomial(&d);
                Ok((p.clone(), p.to_string()))
            })
        }
        Command::Jones(input) => {
            let d = input.arrow()?;
            input.report("jones", &d.canonical_form(), || {
                let p = jones(&d);
                Ok((p.clone(), p.to_string()))
            })
        }
        Command::Galex(input) => {
            let d = input.arrow()?;
            input.report("galex", &d.canonical_form(), || {
                let p = g_polynomial(&d)?;
                Ok((p.clone(), p.to_string()))
            })
        }
        Command::Filament(input) => {
            let d = input.load()?.ocd();
            input.report("filament", &d.canonical_form(), || match find_filamentation(&d)? {
                None => Ok((Value::Null, "none".to_string())),
                Some(p) => {
                    let w = Witness::new(&d, &p)?;
                    let mut text = p.display(d.code()).to_string();
                    for r in &w.pairs {
                        text.push_str(&format!("\n({},{}): {}", r.pair.0, r.pair.1, r.number));
                    }
                    Ok((serde_json::to_value(&w).unwrap(), text))
                }
            })
        }
        Command::Parity(input) => {
            let d = input.load()?.ocd();
            input.report("parity", &d.canonical_form(), || {
                let p = parity(&d)?;
                Ok((p, p.to_string()))
            })
        }
        Command::Flatbq(input) => {
            let d = input.load()?.ocd();
            input.report("flatbq", &d.canonical_form(), || {
                let detected = is_flat_detected(&d)?;
                let rel = flat_relations(&d);
                let mut text: Vec<String> = rel.iter().map(|r| format!("({}) {} = 0", r.coefficient(), r.generator)).collect();
                text.push(format!("detected: {detected}"));
                Ok((json!({ "relations": rel, "detected": detected }), text.join("\n")))
            })
        }
        Command::Genus(input) => {
            let d = input.load()?;
            input.report("genus", &d.code().canonical_form(), || {
                let g = match &d {
                    Named::Arrow(a) => a.genus(),
                    Named::Ocd(o) => o.genus(),
                };
                Ok((g, g.to_string()))
            })
        }
        Command::Moves(input) => match input.load()? {
            Named::Arrow(d) => list_moves(&input, &d),
            Named::Ocd(d) => list_moves(&input, &d),
        },
        Command::Reduce { input, max_chords, max_steps } => match input.load()? {
            Named::Arrow(d) => reduce(&input, &d, max_chords, max_steps),
            Named::Ocd(d) => reduce(&input, &d, max_chords, max_steps),
        },
        Command::Family { which, family, n, json } => {
            let f = which.or(family).ok_or_else(|| Failure::Parse("family: give Dn, An or Kn".into()))?;
            let d = family_member(f, n);
            if json {
                println!("{}", json!({ "code": d.to_string(), "canonical": d.code().canonical_form() }));
            } else {
                println!("{d}");
            }
            Ok(())
        }
        Command::Corpus { name, json } => {
            let entries: Vec<_> = match &name {
                Some(n) => {
                    let d = named_example(n)?;
                    vec![(n.as_str(), d.to_string())]
                }
                None => corpus_entries().map(|(n, _, _)| (n, named_example(n).unwrap().to_string())).collect(),
            };
            for (n, code) in entries {
                if json {
                    println!("{}", json!({ "name": n, "code": code }));
                } else if name.is_some() {
                    println!("{code}");
                } else {
                    println!("{n}\t{code}");
                }
            }
            Ok(())
        }
    }
}

fn list_moves<D: Diagram>(input: &Input, d: &D) -> Out {
    input.report("moves", &d.canonical_form(), || {
        let records: Vec<MoveRecord> = enumerate_moves(d, MoveKind::reidemeister(D::KIND))
            .iter()
            .map(|m| m.to_record(d.code()))
            .collect();
        let text = records.iter().map(record_line).collect::<Vec<_>>().join("\n");
        Ok((records, text))
    })
}

fn record_line(r: &MoveRecord) -> String {
    format!("{} {} {}", r.kind.name(), r.site, r.params)
}

fn reduce<D: Diagram>(input: &Input, d: &D, max_chords: Option<usize>, max_steps: usize) -> Out {
    let max_chords = max_chords.unwrap_or(d.num_chords() + 2);
    input.report("reduce", &d.canonical_form(), || {
        let out = reduce_search(d, max_chords, max_steps);
        let status = match out.status {
            SearchStatus::Reduced => "reduced",
            SearchStatus::Irreducible => "irreducible",
            SearchStatus::Exhausted => "exhausted",
        };
        let mut text = vec![
            format!("status: {status}"),
            format!("result: \"{}\"", out.diagram),
            format!("steps: {}", out.steps),
        ];
        text.extend(out.path.iter().map(record_line));
        let v = json!({
            "status": out.status,
            "result": out.diagram.to_string(),
            "path": out.path,
            "steps": out.steps,
            "budget_exhausted": out.budget_exhausted,
        });
        Ok((v, text.join("\n")))
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
