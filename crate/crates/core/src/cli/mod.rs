//! Command-line front end: config parsing, dispatch and output.
//!
//! Exit codes: `0` success, `1` usage or input error, `2` computation too large.

pub mod config;
pub mod output;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

pub use config::{parse_config, GwaConfig};

use crate::error::{Error, Result};
use crate::exactnum::GaussianRational;
use crate::gwa::{verify_relations, GwaSpec};
use crate::primitive::{self, DirectionOption, PrimitiveIdeal};
use crate::verma::{self, ModuleVariant, WindowVector};
use crate::weight::{self, break_positions, zariski_closure, WeightPoint};

/// Configs shipped with the crate, reachable by file name when no such file exists.
const BUNDLED: &[(&str, &str)] = &[
    ("weyl1.cfg", include_str!("../../configs/weyl1.cfg")),
    (
        "two_breaks.cfg",
        include_str!("../../configs/two_breaks.cfg"),
    ),
    ("rank2.cfg", include_str!("../../configs/rank2.cfg")),
    ("sl2_chi3.cfg", include_str!("../../configs/sl2_chi3.cfg")),
    ("sl2_chi0.cfg", include_str!("../../configs/sl2_chi0.cfg")),
];

const ALIASES: &[(&str, &str)] = &[("weyl.cfg", "weyl1.cfg"), ("ex42.cfg", "two_breaks.cfg")];

/// Text of a bundled config, by file name or alias.
pub fn bundled_config(name: &str) -> Option<&'static str> {
    let name = ALIASES
        .iter()
        .find(|(alias, _)| *alias == name)
        .map_or(name, |(_, target)| target);
    BUNDLED
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| *text)
}

pub fn bundled_config_names() -> impl Iterator<Item = &'static str> {
    BUNDLED.iter().map(|(n, _)| *n)
}

#[derive(Parser, Debug)]
#[command(
    name = "gwa",
    version,
    about = "Weight modules and primitive ideals of translation-type generalized Weyl algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Summarize the algebra and check its defining relations.
    Info(Common),
    /// Break offsets of the orbit through a point.
    Breaks(PointCmd),
    /// Support of M(m) or L(m).
    Support(ModuleCmd),
    /// Submodule lattice of M(m).
    Submodules(PointCmd),
    /// Zariski closure of the support of M(m) or L(m).
    Closure(ModuleCmd),
    /// Annihilator of L(m).
    Annihilator(PointCmd),
    /// All primitive ideals.
    PrimitiveIdeals(Common),
    /// Highest weight point with the same annihilator.
    Duflo(PointCmd),
    /// Finite window of M(m) or L(m) with the generator actions.
    Window(WindowCmd),
    /// Executable checks of the classification hypotheses.
    Check(CheckCmd),
}

#[derive(Args, Debug)]
struct Common {
    /// Config file (bundled names such as weyl1.cfg also work).
    config: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct PointArg {
    /// Comma-separated coordinates, e.g. `3+1i` or `0,3/2`.
    #[arg(long, allow_hyphen_values = true)]
    point: String,
}

#[derive(Args, Debug)]
struct PointCmd {
    #[command(flatten)]
    common: Common,
    #[command(flatten)]
    point: PointArg,
}

#[derive(Args, Debug)]
struct ModuleCmd {
    #[command(flatten)]
    common: Common,
    #[command(flatten)]
    point: PointArg,
    #[arg(long, value_enum, default_value_t = Module::L)]
    module: Module,
}

#[derive(Args, Debug)]
struct WindowCmd {
    #[command(flatten)]
    common: Common,
    #[command(flatten)]
    point: PointArg,
    #[arg(long, value_enum, default_value_t = Module::L)]
    module: Module,
    /// Offset ranges per direction relative to the point, e.g. `-3:3,-2:4`.
    #[arg(long = "box", allow_hyphen_values = true)]
    bounds: Option<String>,
}

#[derive(Args, Debug)]
struct CheckCmd {
    #[command(flatten)]
    common: Common,
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Module {
    #[value(name = "M")]
    M,
    #[value(name = "L")]
    L,
}

impl Module {
    fn variant(self) -> ModuleVariant {
        match self {
            Module::M => ModuleVariant::Verma,
            Module::L => ModuleVariant::Simple,
        }
    }

    fn label(self) -> &'static str {
        match self {
            Module::M => "M",
            Module::L => "L",
        }
    }
}

/// Runs one command line; diagnostics go to `err`, documents to `out`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
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
    let format = cli.command.common().format;
    match execute(&cli.command) {
        Ok(doc) => {
            let text = match format {
                Format::Json => output::render_json(&doc),
                Format::Text => output::render_text(&doc),
            };
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::TooLarge(_) => 2,
                _ => 1,
            }
        }
    }
}

impl Command {
    fn common(&self) -> &Common {
        match self {
            Command::Info(c) | Command::PrimitiveIdeals(c) => c,
            Command::Breaks(c)
            | Command::Submodules(c)
            | Command::Annihilator(c)
            | Command::Duflo(c) => &c.common,
            Command::Support(c) | Command::Closure(c) => &c.common,
            Command::Window(c) => &c.common,
            Command::Check(c) => &c.common,
        }
    }

    fn name(&self) -> &'static str {
        match self {
            Command::Info(_) => "info",
            Command::Breaks(..) => "breaks",
            Command::Support(..) => "support",
            Command::Submodules(..) => "submodules",
            Command::Closure(..) => "closure",
            Command::Annihilator(..) => "annihilator",
            Command::PrimitiveIdeals(_) => "primitive-ideals",
            Command::Duflo(..) => "duflo",
            Command::Window(..) => "window",
            Command::Check(..) => "check",
        }
    }
}

pub fn load_config(path: &Path) -> Result<GwaConfig> {
    let text = match std::fs::read_to_string(path) {
        Ok(text) => text,
        Err(io) => {
            let bundled = path
                .file_name()
                .and_then(|n| n.to_str())
                .filter(|_| io.kind() == std::io::ErrorKind::NotFound)
                .and_then(bundled_config);
            match bundled {
                Some(text) => text.to_string(),
                None => {
                    return Err(Error::InvalidInput(format!(
                        "cannot read {}: {io}",
                        path.display()
                    )))
                }
            }
        }
    };
    parse_config(&text)
}

/// Parses `--point`: one literal per direction, separated by commas.
pub fn parse_point(text: &str, rank: usize) -> Result<WeightPoint> {
    let coords = text
        .split(',')
        .map(|s| s.trim().parse::<GaussianRational>())
        .collect::<Result<Vec<_>>>()?;
    if coords.len() != rank {
        return Err(Error::InvalidInput(format!(
            "point has {} coordinates, expected {rank}",
            coords.len()
        )));
    }
    Ok(WeightPoint::new(coords))
}

/// Parses `--box`: `lo:hi` per direction, separated by commas.
pub fn parse_box(text: &str, rank: usize) -> Result<Vec<(i64, i64)>> {
    let bounds = text
        .split(',')
        .map(|range| {
            let bad =
                || Error::InvalidInput(format!("box range {range:?} is not of the form lo:hi"));
            let (lo, hi) = range.trim().split_once(':').ok_or_else(bad)?;
            let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
            let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
            if lo > hi {
                return Err(Error::InvalidInput(format!("box range {lo}:{hi} is empty")));
            }
            Ok((lo, hi))
        })
        .collect::<Result<Vec<_>>>()?;
    if bounds.len() != rank {
        return Err(Error::InvalidInput(format!(
            "box has {} ranges, expected {rank}",
            bounds.len()
        )));
    }
    Ok(bounds)
}

fn execute(command: &Command) -> Result<Value> {
    let config = load_config(&command.common().config)?;
    let spec = &config.spec;
    let point = |p: &PointArg| parse_point(&p.point, spec.rank());
    let mut doc = match command {
        Command::Info(_) => info(&config),
        Command::Breaks(c) => breaks(spec, &point(&c.point)?),
        Command::Support(c) => support(spec, &point(&c.point)?, c.module)?,
        Command::Submodules(c) => submodules(spec, &point(&c.point)?)?,
        Command::Closure(c) => closure(spec, &point(&c.point)?, c.module)?,
        Command::Annihilator(c) => {
            let a = point(&c.point)?;
            json!({
                "point": output::point(&a),
                "annihilator": ideal(&primitive::annihilator_of_simple(spec, &a)),
            })
        }
        Command::PrimitiveIdeals(_) => primitive_ideals(spec),
        Command::Duflo(c) => duflo(spec, &point(&c.point)?),
        Command::Window(c) => {
            let a = point(&c.point)?;
            let bounds = match &c.bounds {
                Some(text) => parse_box(text, spec.rank())?,
                None => verma::default_box(spec, &a, c.module.variant()),
            };
            window(spec, &a, c.module, &bounds)?
        }
        Command::Check(c) => check(spec, c),
    };
    let obj = doc.as_object_mut().expect("documents are objects");
    obj.insert("command".into(), json!(command.name()));
    let mut cfg = json!({ "rank": spec.rank() });
    if let Some(name) = &config.name {
        cfg["name"] = json!(name);
    }
    obj.insert("config".into(), cfg);
    Ok(doc)
}

fn info(config: &GwaConfig) -> Value {
    let spec = &config.spec;
    let relations = verify_relations(spec);
    let mut doc = json!({
        "steps": output::gauss_list(spec.steps()),
        "polynomials": spec.defining_polynomials().iter().map(|t| json!({
            "variable": format!("T{}", t.variable() + 1),
            "roots": output::gauss_list(t.roots()),
            "factored": t.to_string(),
            "degree": t.degree(),
        })).collect::<Vec<_>>(),
        "length_bound": spec.length_bound(),
        "relations": relations.checks.iter().map(|c| json!({
            "relation": c.relation,
            "pass": c.pass,
        })).collect::<Vec<_>>(),
        "relations_pass": relations.all_pass(),
    });
    if let Some(d) = &config.description {
        doc["description"] = json!(d);
    }
    doc
}

fn breaks(spec: &GwaSpec, a: &WeightPoint) -> Value {
    let data = break_positions(spec, a);
    let directions: Vec<Value> = (0..spec.rank())
        .map(|i| {
            let offsets = data.offsets(i);
            let weights: Vec<GaussianRational> = offsets
                .iter()
                .map(|&k| a.coord(i) + &spec.step(i).scale(&k.into()))
                .collect();
            json!({
                "direction": i + 1,
                "offsets": offsets,
                "weights": output::gauss_list(&weights),
                "k_up": output::upper_end(data.k_up(i)),
                "k_low": output::lower_end(data.k_low(i)),
            })
        })
        .collect();
    json!({
        "point": output::point(a),
        "directions": directions,
        "highest_weight_module": verma::is_highest_weight_module(spec, a),
        "highest_weight_generator": verma::has_highest_weight_generator(spec, a),
    })
}

/// Largest support listed weight by weight.
const MAX_LISTED_WEIGHTS: u64 = 100_000;

fn support(spec: &GwaSpec, a: &WeightPoint, module: Module) -> Result<Value> {
    let s = match module {
        Module::M => weight::support_of_verma(spec, a),
        Module::L => weight::support_of_simple(spec, a),
    };
    let directions: Vec<Value> = (0..spec.rank())
        .map(|i| {
            let mut d = json!({
                "direction": i + 1,
                "interval": output::interval(&s.interval(i)),
            });
            if let Some(values) = s.coordinate_values(i) {
                d["values"] = output::gauss_list(&values);
            }
            d
        })
        .collect();
    let mut doc = json!({
        "point": output::point(a),
        "module": module.label(),
        "directions": directions,
        "finite": s.is_finite(),
        "size": s.size().map_or_else(|| json!("+inf"), |n| json!(n)),
    });
    if let Some(size) = s.size() {
        if size > MAX_LISTED_WEIGHTS {
            return Err(Error::TooLarge(format!(
                "support has {size} weights, more than {MAX_LISTED_WEIGHTS}"
            )));
        }
        let offsets = s.offsets().unwrap_or_default();
        let weights: Vec<Value> = offsets
            .iter()
            .map(|alpha| output::point(&s.weight_at(alpha)))
            .collect();
        doc["offsets"] = json!(offsets);
        doc["weights"] = Value::Array(weights);
    }
    Ok(doc)
}

fn submodules(spec: &GwaSpec, a: &WeightPoint) -> Result<Value> {
    let decomposition = verma::cells(spec, a);
    let lattice = verma::lattice_of(&decomposition)?;
    let cells: Vec<Value> = (0..decomposition.len())
        .map(|c| {
            json!({
                "index": c,
                "intervals": decomposition.intervals(c).iter().map(output::interval).collect::<Vec<_>>(),
            })
        })
        .collect();
    let edges: Vec<Value> = decomposition
        .edges()
        .iter()
        .map(|&(f, t)| json!([f, t]))
        .collect();
    let covers: Vec<Value> = lattice
        .covers()
        .iter()
        .map(|&(i, j)| json!([i, j]))
        .collect();
    Ok(json!({
        "point": output::point(a),
        "cells": cells,
        "center_cell": decomposition.center(),
        "edges": edges,
        "submodule_count": lattice.len(),
        "submodules": lattice.submodules(),
        "covers": covers,
        "composition_length": lattice.composition_length(),
        "simple_subquotient_count": verma::simple_subquotients(spec, a).len(),
        "length_bound": spec.length_bound(),
    }))
}

fn closure(spec: &GwaSpec, a: &WeightPoint, module: Module) -> Result<Value> {
    let s = match module {
        Module::M => weight::support_of_verma(spec, a),
        Module::L => weight::support_of_simple(spec, a),
    };
    let c = zariski_closure(&s)?;
    Ok(json!({
        "point": output::point(a),
        "module": module.label(),
        "closure": output::closure(&c),
        "vanishing_ideal": PrimitiveIdeal::from_closure(c)
            .generators()
            .iter()
            .map(|f| f.to_string())
            .collect::<Vec<_>>(),
    }))
}

fn ideal(p: &PrimitiveIdeal) -> Value {
    json!({
        "zero": p.is_zero(),
        "generators": p.generators().iter().map(|f| f.to_string()).collect::<Vec<_>>(),
        "closure": output::closure(p.closure()),
        "display": p.to_string(),
    })
}

fn primitive_ideals(spec: &GwaSpec) -> Value {
    let ideals = primitive::enumerate_primitive_ideals(spec);
    let directions: Vec<Value> = (0..spec.rank())
        .map(|i| {
            let options: Vec<Value> = primitive::direction_options(spec, i)
                .iter()
                .map(|o| match o {
                    DirectionOption::Unbounded => json!({ "kind": "unbounded" }),
                    DirectionOption::AdjacentZeroPair { low, up, width } => json!({
                        "kind": "adjacent_zero_pair",
                        "low": output::gauss(low),
                        "up": output::gauss(up),
                        "width": width,
                    }),
                })
                .collect();
            json!({ "direction": i + 1, "options": options })
        })
        .collect();
    json!({
        "count": ideals.len(),
        "ideals": ideals.iter().map(ideal).collect::<Vec<_>>(),
        "directions": directions,
    })
}

fn duflo(spec: &GwaSpec, a: &WeightPoint) -> Value {
    let refined = primitive::duflo_refine(spec, a);
    let before = primitive::annihilator_of_simple(spec, a);
    let after = primitive::annihilator_of_simple(spec, &refined);
    json!({
        "point": output::point(a),
        "refined_point": output::point(&refined),
        "highest_weight_generator": verma::has_highest_weight_generator(spec, &refined),
        "same_annihilator": before == after,
        "annihilator": ideal(&after),
    })
}

fn window(spec: &GwaSpec, a: &WeightPoint, module: Module, bounds: &[(i64, i64)]) -> Result<Value> {
    let w = verma::realize_window(spec, a, bounds, module.variant())?;
    let failures = w.relation_failures();
    let kernel = w.x_kernel();
    let mut doc = json!({
        "point": output::point(a),
        "module": module.label(),
        "bounds": bounds.iter().map(|&(lo, hi)| json!({"lo": lo, "hi": hi})).collect::<Vec<_>>(),
        "dimension": w.basis().len(),
        "interior_points": w.interior().len(),
        "relations_pass": failures.is_empty(),
        "relation_failures": failures,
        "x_kernel": kernel,
    });
    if module == Module::L && verma::is_highest_weight_module(spec, a) {
        if let Some(top) = verma::top_offset(spec, a).filter(|t| w.contains(t)) {
            let mut sum = WindowVector::new();
            for alpha in w.basis() {
                sum.insert(alpha.clone(), GaussianRational::one());
            }
            let found = verma::find_top_vector(spec, a, &w, &sum)?;
            doc["top"] = json!({
                "offset": top,
                "weight": output::point(&w.weight(&top)),
                "found_from_basis_sum": output::point(&found),
            });
        }
    }
    Ok(doc)
}

fn check(spec: &GwaSpec, args: &CheckCmd) -> Value {
    let report = primitive::check_conditions(spec, args.samples, args.seed);
    let relations = verify_relations(spec);
    json!({
        "samples": report.samples,
        "seed": report.seed,
        "length_bound": report.length_bound,
        "max_length_observed": report.max_length_observed,
        "closure_count": report.closure_count,
        "a6_pairs_checked": report.a6_pairs_checked,
        "checks": report.checks.iter().map(|c| json!({
            "name": c.name,
            "pass": c.pass,
            "detail": c.detail,
            "witnesses": c.witnesses,
        })).collect::<Vec<_>>(),
        "relations_pass": relations.all_pass(),
        "all_pass": report.all_pass() && relations.all_pass(),
    })
}
