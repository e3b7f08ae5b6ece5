//! Subcommands and the exit-code taxonomy.
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success, or a theorem check that did not fail |
//! | 1 | a theorem check was violated |
//! | 2 | unreadable input, parse error or bad arguments |
//! | 3 | the requested value is +∞ |
//! | 4 | refused: instance exceeds the oracle or flow budget |

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rek_core::connectivity::{self, CutValue, EngineError, Method, MAX_ORACLE_ORDER};
use rek_core::generators::GeneratorSpec;
use rek_core::invariants::DegreeProfile;
use rek_core::products::{self, ProductGraph, ProductKind};
use rek_core::theorem::{self, Budget, CheckOptions, Factor, TheoremError, TheoremId, Verdict};
use rek_core::{CutResult, Graph};
use serde::Serialize;

use crate::io::{self, Format};
use crate::sweep::{self, SweepConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u8)]
pub enum Exit {
    Ok = 0,
    Violated = 1,
    Input = 2,
    Infinite = 3,
    Budget = 4,
}

impl Exit {
    pub fn code(self) -> u8 {
        self as u8
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "rek-lab",
    version,
    about = "Restricted edge-connectivity of graphs and strong products"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for random generators and sweeps.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Largest order handled by exhaustive search.
    #[arg(long, global = true, value_name = "ORDER")]
    pub budget_oracle: Option<usize>,
    /// Largest order handled by max-flow.
    #[arg(long, global = true, value_name = "ORDER")]
    pub budget_flow: Option<usize>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum MethodArg {
    Flow,
    Oracle,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FactorArg {
    Cycle,
    Complete,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ProductOp {
    Strong,
    Cartesian,
    Direct,
    K2odot,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// λ_k of a graph with a witnessing cut.
    Compute {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, value_enum, default_value = "flow")]
        method: MethodArg,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Degree profile (δ, Δ, ξ, ξ₃) as JSON.
    Invariants {
        file: PathBuf,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Product of two graphs, or K₂ ⊙ H of one.
    Product {
        #[arg(long, value_enum)]
        op: ProductOp,
        #[arg(required = true, num_args = 1..=2)]
        files: Vec<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum)]
        out_format: Option<Format>,
        /// Where to write the (x, y) table; defaults to `<output>.index.json`.
        #[arg(long)]
        index_map: Option<PathBuf>,
    },
    /// Generate a graph, e.g. `--family harary --params k=3,n=8`.
    Gen {
        #[arg(long)]
        family: String,
        /// Comma-separated `key=value`; circulant offsets as `offsets=1:2`.
        #[arg(long, default_value = "")]
        params: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Check one theorem on `G` (with second factor of order `n`).
    Verify {
        #[arg(long, value_parser = parse_theorem)]
        theorem: TheoremId,
        file: PathBuf,
        #[arg(long)]
        n: Option<usize>,
        /// Second factor for l2.4 and l2.5.
        #[arg(long, value_enum)]
        factor: Option<FactorArg>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Seeded batch of theorem checks.
    Sweep {
        /// JSON SweepConfig; built-in defaults otherwise.
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        instances: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn parse_theorem(s: &str) -> Result<TheoremId, String> {
    s.parse().map_err(|e: TheoremError| e.to_string())
}

enum Failure {
    Input(String),
    Budget(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<Exit, Failure>;

/// Runs a parsed command line, writing results to `out` and diagnostics to
/// `err`.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Exit {
    let mut ctx = Ctx { cli, out };
    let result = match &cli.command {
        Command::Compute {
            file,
            k,
            method,
            format,
        } => ctx.compute(file, *k, *method, *format),
        Command::Invariants { file, format } => ctx.invariants(file, *format),
        Command::Product {
            op,
            files,
            format,
            output,
            out_format,
            index_map,
        } => ctx.product(
            *op,
            files,
            *format,
            output.as_deref(),
            *out_format,
            index_map.as_deref(),
        ),
        Command::Gen {
            family,
            params,
            output,
            format,
        } => ctx.generate(family, params, output.as_deref(), *format, err),
        Command::Verify {
            theorem,
            file,
            n,
            factor,
            format,
        } => ctx.verify(*theorem, file, *n, *factor, *format),
        Command::Sweep {
            config,
            instances,
            output,
        } => ctx.sweep(config.as_deref(), *instances, output.as_deref()),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            Exit::Input
        }
        Err(Failure::Budget(msg)) => {
            let _ = writeln!(err, "refused: {msg}");
            Exit::Budget
        }
    }
}

struct Ctx<'a> {
    cli: &'a Cli,
    out: &'a mut dyn Write,
}

#[derive(Serialize)]
struct ComputeReport {
    k: usize,
    method: Method,
    order: usize,
    size: usize,
    value: CutValue,
    witness: Option<CutResult>,
}

#[derive(Serialize)]
struct IndexMap {
    kind: ProductKind,
    m: usize,
    n: usize,
    /// `vertices[v] = [x, y]` with `v = x·n + y`.
    vertices: Vec<[usize; 2]>,
}

impl IndexMap {
    fn of(p: &ProductGraph) -> Self {
        Self {
            kind: p.kind,
            m: p.left_order,
            n: p.right_order,
            vertices: (0..p.order())
                .map(|v| {
                    let (x, y) = p.project(v).expect("product vertex");
                    [x, y]
                })
                .collect(),
        }
    }
}

fn output_format(path: Option<&Path>, explicit: Option<Format>) -> Format {
    explicit
        .or_else(|| path.and_then(|p| Format::detect(p, None).ok()))
        .unwrap_or(Format::EdgeList)
}

fn render_side(cut: &CutResult) -> (String, String) {
    let side: Vec<String> = cut.side_x.iter().map(|v| v.to_string()).collect();
    let edges: Vec<String> = cut.edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
    (side.join(" "), edges.join(" "))
}

impl Ctx<'_> {
    fn budget(&self) -> Budget {
        let d = Budget::default();
        Budget {
            oracle: self.cli.budget_oracle.unwrap_or(d.oracle),
            flow: self.cli.budget_flow.unwrap_or(d.flow),
        }
    }

    fn emit_json<T: Serialize>(&mut self, value: &T) -> Result<(), Failure> {
        let text = serde_json::to_string_pretty(value)?;
        writeln!(self.out, "{text}")?;
        Ok(())
    }

    fn compute(
        &mut self,
        file: &Path,
        k: usize,
        method: MethodArg,
        format: Option<Format>,
    ) -> Outcome {
        let g = io::read_graph(file, format)?;
        let budget = self.budget();
        let method = match method {
            MethodArg::Flow => Method::Flow,
            MethodArg::Oracle => Method::Oracle,
        };
        let oracle_limit = budget.oracle.min(MAX_ORACLE_ORDER);
        match method {
            Method::Oracle if g.order() > oracle_limit => {
                return Err(Failure::Budget(format!(
                    "order {} exceeds the oracle budget of {oracle_limit}",
                    g.order()
                )))
            }
            Method::Flow if g.order() > budget.flow => {
                return Err(Failure::Budget(format!(
                    "order {} exceeds the flow budget of {}",
                    g.order(),
                    budget.flow
                )))
            }
            _ => {}
        }
        let (value, witness) =
            match connectivity::restricted_edge_connectivity(&g, k, method, oracle_limit) {
                Ok(cut) => (cut.value, cut.witness),
                // too few vertices for two parts of order k
                Err(EngineError::TooFewVertices { .. }) => (CutValue::Infinite, None),
                Err(e @ EngineError::OracleLimit { .. }) => {
                    return Err(Failure::Budget(e.to_string()))
                }
                Err(e) => return Err(e.into()),
            };
        if self.cli.json {
            self.emit_json(&ComputeReport {
                k,
                method,
                order: g.order(),
                size: g.size(),
                value,
                witness: witness.clone(),
            })?;
        } else {
            writeln!(self.out, "lambda{k} = {value}")?;
            writeln!(self.out, "method: {method}")?;
            if let Some(cut) = &witness {
                let (side, edges) = render_side(cut);
                writeln!(self.out, "side: {side}")?;
                writeln!(self.out, "cut edges: {edges}")?;
            }
        }
        Ok(if value.is_infinite() {
            Exit::Infinite
        } else {
            Exit::Ok
        })
    }

    fn invariants(&mut self, file: &Path, format: Option<Format>) -> Outcome {
        let g = io::read_graph(file, format)?;
        let profile = DegreeProfile::of(&g)?;
        self.emit_json(&profile)?;
        Ok(Exit::Ok)
    }

    fn product(
        &mut self,
        op: ProductOp,
        files: &[PathBuf],
        format: Option<Format>,
        output: Option<&Path>,
        out_format: Option<Format>,
        index_map: Option<&Path>,
    ) -> Outcome {
        let graphs = files
            .iter()
            .map(|f| io::read_graph(f, format))
            .collect::<Result<Vec<_>, _>>()?;
        let p = match (op, graphs.as_slice()) {
            (ProductOp::K2odot, [h]) => products::k2_odot(h),
            (ProductOp::K2odot, _) => return Err(Failure::Input("k2odot takes one graph".into())),
            (_, [g, h]) => match op {
                ProductOp::Strong => products::strong_product(g, h)?,
                ProductOp::Cartesian => products::cartesian_product(g, h)?,
                ProductOp::Direct => products::direct_product(g, h)?,
                ProductOp::K2odot => unreachable!(),
            },
            _ => return Err(Failure::Input("this product takes two graphs".into())),
        };
        let map = IndexMap::of(&p);
        let map_path = index_map
            .map(Path::to_path_buf)
            .or_else(|| output.map(|o| PathBuf::from(format!("{}.index.json", o.display()))));
        if let Some(path) = &map_path {
            io::write_file(path, &(serde_json::to_string_pretty(&map)? + "\n"))?;
        }
        let text = io::render(&p.graph, output_format(output, out_format));
        if let Some(path) = output {
            io::write_file(path, &text)?;
        }
        if self.cli.json {
            #[derive(Serialize)]
            struct ProductReport<'a> {
                graph: &'a Graph,
                index_map: IndexMap,
            }
            self.emit_json(&ProductReport {
                graph: &p.graph,
                index_map: map,
            })?;
        } else if output.is_none() {
            write!(self.out, "{text}")?;
        }
        Ok(Exit::Ok)
    }

    fn generate(
        &mut self,
        family: &str,
        params: &str,
        output: Option<&Path>,
        format: Option<Format>,
        err: &mut dyn Write,
    ) -> Outcome {
        let spec = spec_from_params(family, params, self.cli.seed.unwrap_or(0))?;
        let g = spec.build()?;
        if !g.is_connected() {
            writeln!(err, "note: {spec} is disconnected")?;
        }
        let format = output_format(output, format);
        let mut text = io::render(&g, format);
        if format == Format::EdgeList {
            text.insert_str(0, &format!("# {spec}\n"));
        }
        if let Some(path) = output {
            io::write_file(path, &text)?;
        }
        if self.cli.json {
            #[derive(Serialize)]
            struct GenReport<'a> {
                generator: &'a GeneratorSpec,
                graph: &'a Graph,
            }
            self.emit_json(&GenReport {
                generator: &spec,
                graph: &g,
            })?;
        } else if output.is_none() {
            write!(self.out, "{text}")?;
        }
        Ok(Exit::Ok)
    }

    fn verify(
        &mut self,
        id: TheoremId,
        file: &Path,
        n: Option<usize>,
        factor: Option<FactorArg>,
        format: Option<Format>,
    ) -> Outcome {
        let g = io::read_graph(file, format)?;
        let options = CheckOptions {
            budget: self.budget(),
            factor: factor.map(|f| match f {
                FactorArg::Cycle => Factor::Cycle,
                FactorArg::Complete => Factor::Complete,
            }),
        };
        let report = match theorem::check_theorem(id, &g, n, &options) {
            Ok(r) => r,
            Err(TheoremError::Engine(e @ EngineError::OracleLimit { .. })) => {
                return Err(Failure::Budget(e.to_string()))
            }
            Err(e) => return Err(e.into()),
        };
        if self.cli.json {
            self.emit_json(&report)?;
        } else {
            let out = &mut self.out;
            writeln!(out, "theorem: {}", report.theorem)?;
            if let (Some(f), Some(n)) = (report.factor, report.n) {
                writeln!(out, "target: G x {f:?}({n}), order {}", report.target_order)?;
            }
            for h in &report.hypotheses {
                writeln!(
                    out,
                    "hypothesis {}: {}",
                    h.name,
                    if h.holds { "holds" } else { "fails" }
                )?;
            }
            let rel = match report.predicted.relation {
                theorem::Relation::Equal => "=",
                theorem::Relation::AtMost => "<=",
            };
            writeln!(
                out,
                "predicted: {} {rel} {} ({})",
                report.predicted.quantity, report.predicted.value, report.predicted.formula
            )?;
            match (report.computed, report.method) {
                (Some(c), Some(m)) => writeln!(out, "computed: {c} ({m})")?,
                _ => writeln!(out, "computed: not attempted")?,
            }
            if let Some(x) = report.xi3 {
                writeln!(out, "xi3: {x}")?;
            }
            if report.exploratory {
                writeln!(
                    out,
                    "exploratory: relation holds = {:?}",
                    report.relation_holds
                )?;
            }
            writeln!(out, "verdict: {}", report.verdict)?;
        }
        Ok(match report.verdict {
            Verdict::Violated => Exit::Violated,
            Verdict::OracleTooLarge => Exit::Budget,
            Verdict::Confirmed | Verdict::HypothesesUnmet => Exit::Ok,
        })
    }

    fn sweep(
        &mut self,
        config: Option<&Path>,
        instances: Option<usize>,
        output: Option<&Path>,
    ) -> Outcome {
        let mut cfg = match config {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
                serde_json::from_str::<SweepConfig>(&text)?
            }
            None => SweepConfig::default(),
        };
        if let Some(s) = self.cli.seed {
            cfg.seed = s;
        }
        if let Some(b) = self.cli.budget_oracle {
            cfg.budget.oracle = b;
        }
        if let Some(b) = self.cli.budget_flow {
            cfg.budget.flow = b;
        }
        if let Some(i) = instances {
            cfg.instances = i;
        }
        if let Some(o) = output {
            cfg.output = Some(o.display().to_string());
        }
        let summary = sweep::run_sweep(&cfg)?;
        let json = serde_json::to_string_pretty(&summary)? + "\n";
        if let Some(path) = &cfg.output {
            io::write_file(Path::new(path), &json)?;
        }
        if self.cli.json {
            write!(self.out, "{json}")?;
        } else {
            writeln!(
                self.out,
                "{:<6} {:>9} {:>8} {:>16} {:>16}",
                "id", "confirmed", "violated", "hypotheses-unmet", "oracle-too-large"
            )?;
            for c in &summary.counts {
                let id = c.theorem.as_str();
                writeln!(
                    self.out,
                    "{id:<6} {:>9} {:>8} {:>16} {:>16}",
                    c.confirmed, c.violated, c.hypotheses_unmet, c.oracle_too_large
                )?;
            }
            for v in &summary.violations {
                writeln!(
                    self.out,
                    "violated: {} on {} n={} (instance {})",
                    v.theorem, v.generator, v.n, v.index
                )?;
            }
        }
        Ok(if summary.has_violations() {
            Exit::Violated
        } else {
            Exit::Ok
        })
    }
}

/// Builds a generator spec from `key=value` pairs.
pub fn spec_from_params(family: &str, params: &str, seed: u64) -> Result<GeneratorSpec, String> {
    let mut pairs = std::collections::BTreeMap::new();
    for item in params.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| format!("parameter {item:?} is not key=value"))?;
        pairs.insert(k.trim(), v.trim());
    }
    let has_index = pairs.contains_key("edge_index");
    let mut take = |key: &str| -> Result<usize, String> {
        let v = pairs
            .remove(key)
            .ok_or_else(|| format!("{family} needs parameter {key}"))?;
        v.parse()
            .map_err(|_| format!("parameter {key}={v:?} is not a count"))
    };
    let spec = match family {
        "cycle" => GeneratorSpec::Cycle { n: take("n")? },
        "complete" => GeneratorSpec::Complete { n: take("n")? },
        "path" => GeneratorSpec::Path { n: take("n")? },
        "star" => GeneratorSpec::Star { n: take("n")? },
        "harary" => GeneratorSpec::Harary {
            k: take("k")?,
            n: take("n")?,
        },
        "random-regular" => GeneratorSpec::RandomRegular {
            n: take("n")?,
            d: take("d")?,
            seed,
        },
        "subdivided-complete" => GeneratorSpec::SubdividedComplete {
            n: take("n")?,
            edge_index: if has_index { take("edge_index")? } else { 0 },
        },
        "circulant" => {
            let n = take("n")?;
            let raw = pairs
                .remove("offsets")
                .ok_or_else(|| "circulant needs parameter offsets".to_string())?;
            let offsets = raw
                .split(':')
                .map(|s| s.parse().map_err(|_| format!("bad offset {s:?}")))
                .collect::<Result<Vec<usize>, _>>()?;
            GeneratorSpec::Circulant { n, offsets }
        }
        other => {
            return Err(format!(
                "unknown family {other:?}; expected one of {}",
                GeneratorSpec::FAMILIES.join(", ")
            ))
        }
    };
    if let Some(extra) = pairs.keys().next() {
        return Err(format!("unused parameter {extra:?} for {family}"));
    }
    Ok(spec)
}
