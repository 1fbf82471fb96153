//! Command-line front end for the subnormal group engine.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use subnormal::catalog::{self, Tag};
use subnormal::criteria::{
    check_star, check_starstar, ngaxp_witness, ngxp_witness, subnormal_defect, theorem_c_search,
    wielandt_series, StarReport,
};
use subnormal::group::file::GroupFile;
use subnormal::harness::{run_suite, SUITES};
use subnormal::structure::{is_nilpotent, is_solvable, p_core};
use subnormal::{config, ClassTable, Error, PermGroup, Permutation, SubgroupHandle};

#[derive(Parser)]
#[command(name = "subnormal", version, about = "Permutation groups and subnormality criteria")]
struct Cli {
    /// Write the full JSON result to PATH (`-` for standard output).
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Largest group order whose elements may be enumerated.
    #[arg(long, global = true, value_name = "N")]
    max_order: Option<u64>,
    /// Worker threads (defaults to the available parallelism).
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,
    /// Seed for the sampled elements printed by `info`.
    #[arg(long, global = true, value_name = "N", default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Order, base and basic properties of a group.
    Info { group: String },
    /// Conjugacy classes.
    Classes { group: String },
    /// Wielandt series of a subgroup and whether it is subnormal.
    Subnormal {
        group: String,
        #[arg(long = "sub", required = true, value_name = "CYCLES")]
        sub: Vec<String>,
    },
    /// The p-core O_p(G).
    Opcore {
        group: String,
        #[arg(short)]
        p: u64,
    },
    /// Condition (*): each class has g with A subnormal in <A, g>.
    Star {
        group: String,
        #[arg(long = "sub", required = true, value_name = "CYCLES")]
        sub: Vec<String>,
    },
    /// Condition (**): each class has g with A subnormal in <A, A^g>.
    Starstar {
        group: String,
        #[arg(long = "sub", required = true, value_name = "CYCLES")]
        sub: Vec<String>,
    },
    /// A non-trivial p-subgroup normalised by X, if one exists.
    Ngxp {
        group: String,
        #[arg(long = "x", required = true, value_name = "CYCLES")]
        x: Vec<String>,
        #[arg(short)]
        p: u64,
    },
    /// A p-subgroup generated by conjugates of A and normalised by X, if one exists.
    Ngaxp {
        group: String,
        #[arg(long = "a", required = true, value_name = "CYCLES")]
        a: Vec<String>,
        #[arg(long = "x", required = true, value_name = "CYCLES")]
        x: Vec<String>,
        #[arg(short)]
        p: u64,
    },
    /// A cyclic p'-subgroup X of the socle with no such p-subgroup, for each A of order p.
    Theoremc {
        group: String,
        #[arg(short)]
        p: u64,
        #[arg(long = "a", value_name = "CYCLES")]
        a: Vec<String>,
    },
    /// Run a verification suite, or `all`.
    Verify { suite: String },
    /// List the catalog.
    List,
}

/// Result of a command: exit status, text for the terminal, JSON for `--json`.
struct Output {
    holds: bool,
    text: String,
    json: Value,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output { holds: true, text, json }
    }
}

struct Loaded {
    name: String,
    group: PermGroup,
    socle: Option<PermGroup>,
    tags: Vec<Tag>,
}

fn load(reference: &str) -> Result<Loaded, Error> {
    if let Some(name) = reference.strip_prefix("catalog:") {
        let entry = catalog::lookup(name)?;
        return Ok(Loaded {
            name: entry.name.clone(),
            socle: entry.socle.as_ref().map(|s| s.group().clone()),
            tags: entry.tags.iter().copied().collect(),
            group: entry.group,
        });
    }
    let file = GroupFile::read(std::path::Path::new(reference))?;
    Ok(Loaded {
        name: reference.to_string(),
        group: file.group()?,
        socle: file.socle()?,
        tags: Vec::new(),
    })
}

fn parse_gens(texts: &[String], degree: usize) -> Result<Vec<Permutation>, Error> {
    texts.iter().map(|t| Permutation::parse_cycles(t, degree)).collect()
}

fn subgroup(g: &PermGroup, texts: &[String]) -> Result<SubgroupHandle, Error> {
    SubgroupHandle::new(g, parse_gens(texts, g.degree())?)
}

fn gens(h: &PermGroup) -> Vec<String> {
    h.generators().iter().map(Permutation::to_cycles).collect()
}

fn show_gens(h: &PermGroup) -> String {
    if h.is_trivial() {
        "()".to_string()
    } else {
        gens(h).join(", ")
    }
}

fn star_output(label: &str, report: StarReport) -> Output {
    let mut text = format!(
        "{label} {} ({} classes)\n",
        if report.holds { "holds" } else { "fails" },
        report.per_class.len()
    );
    for c in &report.per_class {
        match &c.witness {
            Some(w) => text.push_str(&format!("  class {}: g = {} (scanned {})\n", c.class, w.to_cycles(), c.scanned)),
            None => text.push_str(&format!("  class {}: no witness (scanned {})\n", c.class, c.scanned)),
        }
    }
    Output {
        holds: report.holds,
        json: serde_json::to_value(&report).expect("plain data"),
        text,
    }
}

fn run(cli: &Cli) -> Result<Output, Error> {
    Ok(match &cli.command {
        Command::Info { group } => {
            let l = load(group)?;
            let g = &l.group;
            let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
            let sample = g.random_element(&mut rng).to_cycles();
            let solvable = is_solvable(g)?;
            let nilpotent = is_nilpotent(g)?;
            let text = format!(
                "{}: degree {}, order {}\n  generators: {}\n  base: {:?}\n  basic orbit lengths: {:?}\n  solvable: {solvable}, nilpotent: {nilpotent}\n  socle order: {}\n  random element (seed {}): {sample}\n",
                l.name,
                g.degree(),
                g.order(),
                show_gens(g),
                g.base().iter().map(|b| b + 1).collect::<Vec<_>>(),
                g.basic_orbit_lengths(),
                l.socle.as_ref().map_or("-".to_string(), |s| s.order().to_string()),
                cli.seed,
            );
            Output::ok(
                text,
                json!({
                    "name": l.name,
                    "degree": g.degree(),
                    "order": g.order().to_string(),
                    "generators": gens(g),
                    "base": g.base().iter().map(|b| b + 1).collect::<Vec<_>>(),
                    "basic_orbit_lengths": g.basic_orbit_lengths(),
                    "solvable": solvable,
                    "nilpotent": nilpotent,
                    "socle_order": l.socle.as_ref().map(|s| s.order().to_string()),
                    "tags": l.tags,
                    "seed": cli.seed,
                    "random_element": sample,
                }),
            )
        }
        Command::Classes { group } => {
            let l = load(group)?;
            let table = ClassTable::new(&l.group)?;
            let summaries = table.summaries();
            let mut text = format!("{}: {} classes\n", l.name, summaries.len());
            for (i, c) in summaries.iter().enumerate() {
                text.push_str(&format!(
                    "  {i:>3}  order {:>3}  size {:>7}  {}\n",
                    c.element_order, c.size, c.representative
                ));
            }
            Output::ok(text, serde_json::to_value(&summaries).expect("plain data"))
        }
        Command::Subnormal { group, sub } => {
            let l = load(group)?;
            let a = subgroup(&l.group, sub)?;
            let series = wielandt_series(&l.group, &a)?;
            let defect = subnormal_defect(&series, a.group());
            let mut text = format!(
                "A = <{}> of order {} is {}subnormal in {}\n  series orders: {:?}\n",
                show_gens(a.group()),
                a.order(),
                if defect.is_some() { "" } else { "not " },
                l.name,
                series.orders()
            );
            if let Some(d) = defect {
                text.push_str(&format!("  defect: {d}\n"));
            }
            let terms: Vec<Value> = series
                .terms
                .iter()
                .map(|t| json!({ "order": t.order().to_string(), "generators": gens(t.group()) }))
                .collect();
            Output {
                holds: defect.is_some(),
                text,
                json: json!({ "subnormal": defect.is_some(), "defect": defect, "series": terms }),
            }
        }
        Command::Opcore { group, p } => {
            let l = load(group)?;
            let core = p_core(&l.group, *p)?;
            Output::ok(
                format!("O_{p}({}) has order {}\n  generators: {}\n", l.name, core.order(), show_gens(core.group())),
                json!({ "p": p, "order": core.order().to_string(), "generators": gens(core.group()) }),
            )
        }
        Command::Star { group, sub } => {
            let l = load(group)?;
            let a = subgroup(&l.group, sub)?;
            star_output("(*)", check_star(&l.group, &a)?)
        }
        Command::Starstar { group, sub } => {
            let l = load(group)?;
            let a = subgroup(&l.group, sub)?;
            star_output("(**)", check_starstar(&l.group, &a)?)
        }
        Command::Ngxp { group, x, p } => {
            let l = load(group)?;
            let xs = subgroup(&l.group, x)?;
            witness_output(ngxp_witness(&l.group, &xs, *p)?, *p)
        }
        Command::Ngaxp { group, a, x, p } => {
            let l = load(group)?;
            let a = subgroup(&l.group, a)?;
            let xs = subgroup(&l.group, x)?;
            witness_output(ngaxp_witness(&l.group, &a, &xs, *p)?, *p)
        }
        Command::Theoremc { group, p, a } => {
            let l = load(group)?;
            let g = &l.group;
            let socle = l
                .socle
                .clone()
                .ok_or_else(|| Error::DomainError(format!("{} has no socle; add socle-gen lines", l.name)))?;
            let s = SubgroupHandle::from_group(g, socle)?;
            let subgroups = if a.is_empty() {
                ClassTable::new(g)?
                    .cyclic_subgroup_representatives(|k| k == *p)
                    .into_iter()
                    .map(|(_, x)| SubgroupHandle::new(g, vec![x]))
                    .collect::<Result<Vec<_>, _>>()?
            } else {
                vec![subgroup(g, a)?]
            };
            let mut holds = true;
            let mut text = String::new();
            let mut rows = Vec::new();
            for a in &subgroups {
                let outcome = theorem_c_search(g, &s, a, *p)?;
                holds &= outcome.x.is_some();
                match &outcome.x {
                    Some(x) => text.push_str(&format!(
                        "A = <{}>: X = <{}> of order {} ({} of {} candidate classes)\n",
                        show_gens(a.group()),
                        show_gens(x.group()),
                        x.order(),
                        outcome.tried,
                        outcome.candidates
                    )),
                    None => text.push_str(&format!(
                        "A = <{}>: no X among {} candidate classes\n",
                        show_gens(a.group()),
                        outcome.candidates
                    )),
                }
                rows.push(json!({
                    "a": gens(a.group()),
                    "x": outcome.x.as_ref().map(|x| gens(x.group())),
                    "tried": outcome.tried,
                    "candidates": outcome.candidates,
                }));
            }
            Output { holds, text, json: Value::Array(rows) }
        }
        Command::Verify { suite } => {
            let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite.as_str()] };
            let mut holds = true;
            let mut text = String::new();
            let mut reports = Vec::new();
            for name in names {
                let report = run_suite(name)?;
                holds &= report.passed();
                text.push_str(&format!(
                    "{name}: {} ({} checks, {} skipped, {} ms)\n",
                    if report.passed() { "pass" } else { "FAIL" },
                    report.checks.len(),
                    report.count(subnormal::harness::Status::Skipped),
                    report.total_runtime_ms()
                ));
                for c in report.checks.iter().filter(|c| c.status == subnormal::harness::Status::Fail) {
                    text.push_str(&format!("  {}: {}\n", c.id, c.detail));
                }
                reports.push(serde_json::to_value(&report).expect("plain data"));
            }
            let json = if suite == "all" { Value::Array(reports) } else { reports.remove(0) };
            Output { holds, text, json }
        }
        Command::List => {
            let entries = catalog::standard()?;
            let mut text = String::new();
            let mut rows = Vec::new();
            for e in entries {
                let tags: Vec<String> = e
                    .tags
                    .iter()
                    .map(|t| serde_json::to_value(t).expect("plain data").as_str().unwrap_or_default().to_string())
                    .collect();
                text.push_str(&format!(
                    "{:<14} degree {:>2}  order {:>7}  {}\n",
                    e.name,
                    e.group.degree(),
                    e.group.order(),
                    tags.join(",")
                ));
                rows.push(json!({
                    "name": e.name,
                    "degree": e.group.degree(),
                    "order": e.group.order().to_string(),
                    "tags": tags,
                }));
            }
            Output::ok(text, Value::Array(rows))
        }
    })
}

fn witness_output(found: Option<subnormal::criteria::NgaWitness>, p: u64) -> Output {
    match found {
        Some(w) => Output {
            holds: true,
            text: format!(
                "witness: {p}-subgroup of order {} generated by {}\n",
                w.e.order(),
                show_gens(w.e.group())
            ),
            json: json!({ "witness": w.to_json() }),
        },
        None => Output {
            holds: false,
            text: format!("no non-trivial {p}-subgroup of the required kind\n"),
            json: json!({ "witness": null }),
        },
    }
}

fn exit_for(e: &Error) -> u8 {
    if e.is_resource_cap() {
        3
    } else {
        2
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.max_order {
        config::set_max_enumerable_order(n);
    }
    if let Some(n) = cli.threads {
        #[cfg(feature = "parallel")]
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
        #[cfg(not(feature = "parallel"))]
        let _ = n;
    }
    let out = match run(&cli) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_for(&e));
        }
    };
    print!("{}", out.text);
    if let Some(path) = &cli.json {
        let body = serde_json::to_string_pretty(&out.json).expect("plain data") + "\n";
        let written = if path.as_os_str() == "-" {
            print!("{body}");
            Ok(())
        } else {
            std::fs::write(path, body)
        };
        if let Err(e) = written {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    ExitCode::from(if out.holds { 0 } else { 1 })
}
