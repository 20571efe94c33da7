//! Command-line front end: group inspection, normal forms, divisibility
//! lattices, rigidity and automorphism checks, assignment tooling, and
//! finite holomorph enumeration.
//!
//! Every command prints a deterministic key: value report (or the same keys
//! as a JSON object with --json) and exits 0 on success, 1 when a
//! verification ran and failed, 2 on usage or input errors.

mod report;

pub use report::Report;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use artin::brace::{
    boundary_note, catalog, delta_center_check, enumerate_brace_specs, enumerate_braces,
    holomorph_roundtrip, torus_relation_check, verify_brace_identity, BraceSpec, FiniteGroup,
};
use artin::coxeter::{diagram_symmetries, Classification, CoxeterMatrix, GroupTable, IrreducibleType};
use artin::garside::Garside;
use artin::order::{atom_symmetry, check_rigidity, export_dot, poset_automorphisms, PosetBall};
use artin::{Error, ExecMode, Result};

#[derive(Parser, Debug)]
#[command(name = "artin", version, about = "Garside normal forms, divisibility lattices and \
second group operations for spherical Artin-Tits groups")]
pub struct Cli {
    #[command(subcommand)]
    pub cmd: Command,

    #[command(flatten)]
    pub select: Selection,

    /// Emit the report as a JSON object instead of key: value lines
    #[arg(long, global = true)]
    pub json: bool,

    /// Execution mode for the data-parallel loops
    #[arg(long, global = true, value_parser = ["sequential", "parallel"])]
    pub mode: Option<String>,

    /// Element cap for group enumeration
    #[arg(long, global = true, default_value_t = 1_000_000)]
    pub bound: usize,
}

#[derive(Args, Debug)]
pub struct Selection {
    /// Group type as a family letter and a subscript, e.g. --type D 4
    #[arg(long = "type", global = true, num_args = 2, value_names = ["FAMILY", "N"])]
    pub group_type: Option<Vec<String>>,

    /// Coxeter matrix file (`type X k`, or `rank n` plus n label rows)
    #[arg(long, global = true, value_name = "FILE", conflicts_with = "group_type")]
    pub matrix: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classification, group order, labels and diagram symmetries
    Info,
    /// Left-weighted normal form of a word such as s1.s2^-1.D
    NormalForm { word: String },
    /// Divisibility-ball statistics, an optional Graphviz export, and the
    /// meet and join of an optional pair of words
    Lattice {
        /// Ball radius in atom steps
        #[arg(long, default_value_t = 4)]
        height: u32,
        /// Write the ball's covering relation as a Graphviz file
        #[arg(long, value_name = "FILE")]
        dot: Option<PathBuf>,
        /// Zero or two words; with two, their meet, join and mutual
        /// divisibility are reported
        words: Vec<String>,
    },
    /// Unique-successor and escape checks for the divisibility order, both
    /// for left and for right divisors
    Rigidity,
    /// Self-maps of a ball in the positive monoid preserving covers
    Automorphisms {
        /// Ball radius in atom steps
        #[arg(long, default_value_t = 4)]
        height: u32,
    },
    /// Diagram-symmetry assignments and the operations they induce
    Brace {
        #[command(subcommand)]
        cmd: BraceCmd,
    },
    /// Enumerate all second operations on a finite carrier group given by
    /// a multiplication table file (0-based indices)
    Holomorph { table: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum BraceCmd {
    /// Check one rendered assignment, e.g.
    /// "type D 4 / alpha 1:(1 2) 2:(1 2) 3:(1 2) 4:(2 3)"
    Validate { spec: String },
    /// The classified non-trivial assignments for the selected type
    Catalog,
    /// Brute-force search over all assignments; must reproduce the catalog
    Enumerate,
    /// Sample-check the induced operation for every catalog row
    Verify {
        /// Check this rendered assignment instead of the catalog rows
        #[arg(long)]
        spec: Option<String>,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Power chains of the two atoms in a rank-2 type under the induced
    /// operation
    Torus,
    /// Least power of the half twist that is central with trivial symmetry
    Center {
        #[arg(long, default_value_t = 4)]
        kmax: u32,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

/// Resolved group selection: a display label plus the matrix.
pub struct RunConfig {
    pub label: String,
    pub matrix: CoxeterMatrix,
    pub mode: ExecMode,
    pub bound: usize,
}

impl RunConfig {
    pub fn resolve(cli: &Cli) -> Result<RunConfig> {
        let mode = match cli.mode.as_deref() {
            None => ExecMode::default(),
            Some("sequential") => ExecMode::Sequential,
            Some("parallel") => parallel_mode()?,
            Some(other) => {
                return Err(Error::Usage(format!("unknown mode {other:?}")))
            }
        };
        let (label, matrix) = match (&cli.select.group_type, &cli.select.matrix) {
            (Some(t), None) => {
                let family = single_char(&t[0])?;
                let n: usize = t[1]
                    .parse()
                    .map_err(|_| Error::Usage(format!("bad type subscript {:?}", t[1])))?;
                let ty = IrreducibleType::new(family, n)?;
                (ty.to_string(), ty.matrix())
            }
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Usage(format!("cannot read {}: {e}", path.display())))?;
                let matrix = CoxeterMatrix::parse(&text)?;
                (label_of(&matrix)?, matrix)
            }
            (None, None) => {
                return Err(Error::Usage(
                    "select a group with --type FAMILY N or --matrix FILE".into(),
                ))
            }
            (Some(_), Some(_)) => unreachable!("clap rejects conflicting selectors"),
        };
        Ok(RunConfig {
            label,
            matrix,
            mode,
            bound: cli.bound,
        })
    }

    /// The irreducible type of the selection; required by the assignment
    /// commands.
    pub fn group_type(&self) -> Result<IrreducibleType> {
        self.matrix.irreducible_type()
    }

    fn header(&self, report: &mut Report) {
        report.push("type", &self.label);
        report.push("mode", self.mode);
        report.push("bound", self.bound);
    }
}

fn label_of(matrix: &CoxeterMatrix) -> Result<String> {
    match matrix.classify() {
        Classification::Spherical(types) => Ok(types
            .iter()
            .map(|t| t.to_string())
            .collect::<Vec<_>>()
            .join(" x ")),
        Classification::NotSpherical => Err(Error::NotIrreducibleSpherical(
            "the matrix does not define a finite reflection group".into(),
        )),
    }
}

#[cfg(feature = "parallel")]
fn parallel_mode() -> Result<ExecMode> {
    Ok(ExecMode::Parallel)
}

#[cfg(not(feature = "parallel"))]
fn parallel_mode() -> Result<ExecMode> {
    Err(Error::Usage(
        "this build was compiled without parallel support".into(),
    ))
}

fn single_char(s: &str) -> Result<char> {
    let mut chars = s.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => Ok(c),
        _ => Err(Error::Usage(format!("family must be a single letter, got {s:?}"))),
    }
}

/// Execute a parsed invocation. Returns the exit code and the rendered
/// report; I/O errors and malformed input surface as Err.
pub fn run(cli: &Cli) -> Result<(i32, String)> {
    let (code, report) = match &cli.cmd {
        Command::Info => cmd_info(cli)?,
        Command::NormalForm { word } => cmd_normal_form(cli, word)?,
        Command::Lattice { height, dot, words } => {
            cmd_lattice(cli, *height, dot.as_deref(), words)?
        }
        Command::Rigidity => cmd_rigidity(cli)?,
        Command::Automorphisms { height } => cmd_automorphisms(cli, *height)?,
        Command::Brace { cmd } => cmd_brace(cli, cmd)?,
        Command::Holomorph { table } => cmd_holomorph(table)?,
    };
    Ok((code, report.render(cli.json)))
}

fn engine_table(cfg: &RunConfig) -> Result<GroupTable> {
    GroupTable::enumerate_with_mode(&cfg.matrix, cfg.bound, cfg.mode)
}

fn write_file(path: &std::path::Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents)
        .map_err(|e| Error::Usage(format!("cannot write {}: {e}", path.display())))
}

fn cmd_info(cli: &Cli) -> Result<(i32, Report)> {
    let cfg = RunConfig::resolve(cli)?;
    let mut r = Report::new("info");
    cfg.header(&mut r);
    let table = engine_table(&cfg)?;
    let g = Garside::new(&table);
    r.push("classification", &cfg.label);
    r.push("rank", cfg.matrix.rank());
    r.push("order", table.order());
    r.push("half_twist_height", g.delta_height());
    let mut labels = Vec::new();
    for i in 0..cfg.matrix.rank() {
        for j in i + 1..cfg.matrix.rank() {
            labels.push(format!("m{}{}={}", i + 1, j + 1, cfg.matrix.label(i, j)));
        }
    }
    r.push("labels", labels.join(" "));
    let syms = diagram_symmetries(&cfg.matrix);
    r.push("diagram_symmetries", syms.len());
    let rendered: Vec<String> = syms.iter().map(|s| s.to_string()).collect();
    r.push("symmetries", rendered.join(" | "));
    r.push("oddly_laced", cfg.matrix.is_oddly_laced());
    Ok((0, r))
}

fn cmd_normal_form(cli: &Cli, word: &str) -> Result<(i32, Report)> {
    let cfg = RunConfig::resolve(cli)?;
    let mut r = Report::new("normal-form");
    cfg.header(&mut r);
    let table = engine_table(&cfg)?;
    let g = Garside::new(&table);
    let el = g.parse_word(word)?;
    r.push("input", word);
    r.push("element", g.render_g(&el));
    r.push("half_twist_power", el.delta_power());
    r.push("canonical_length", el.positive_part().num_factors());
    r.push("positive", el.is_positive());
    Ok((0, r))
}

fn cmd_lattice(
    cli: &Cli,
    height: u32,
    dot: Option<&std::path::Path>,
    words: &[String],
) -> Result<(i32, Report)> {
    let cfg = RunConfig::resolve(cli)?;
    let mut r = Report::new("lattice");
    cfg.header(&mut r);
    let table = engine_table(&cfg)?;
    let g = Garside::new(&table);
    let ball = PosetBall::build(&g, height, cfg.mode)?;
    r.push("height", height);
    r.push("ball_size", ball.len());
    let counts: Vec<String> = ball.level_counts().iter().map(|c| c.to_string()).collect();
    r.push("level_counts", counts.join(" "));
    match words {
        [] => {}
        [left, right] => {
            let a = g.parse_word(left)?;
            let b = g.parse_word(right)?;
            r.push("left", g.render_g(&a));
            r.push("right", g.render_g(&b));
            r.push("meet", g.render_g(&g.meet_g(&a, &b)));
            r.push("join", g.render_g(&g.join_g(&a, &b)));
            r.push("left_divides_right", g.leq_g(&a, &b));
            r.push("right_divides_left", g.leq_g(&b, &a));
        }
        _ => {
            return Err(Error::Usage(
                "lattice takes zero words or exactly two".into(),
            ))
        }
    }
    if let Some(path) = dot {
        write_file(path, &export_dot(&g, &ball))?;
        r.push("dot_file", path.display());
    }
    Ok((0, r))
}

fn cmd_rigidity(cli: &Cli) -> Result<(i32, Report)> {
    let cfg = RunConfig::resolve(cli)?;
    let mut r = Report::new("rigidity");
    cfg.header(&mut r);
    let table = engine_table(&cfg)?;
    let g = Garside::new(&table);
    let primal = check_rigidity(&g, false);
    let dual = check_rigidity(&g, true);
    r.push("primal", if primal.pass() { "PASS" } else { "FAIL" });
    r.push("dual", if dual.pass() { "PASS" } else { "FAIL" });
    let ok = primal.pass() && dual.pass();
    r.push("result", if ok { "PASS" } else { "FAIL" });
    Ok((i32::from(!ok), r))
}

fn cmd_automorphisms(cli: &Cli, height: u32) -> Result<(i32, Report)> {
    let cfg = RunConfig::resolve(cli)?;
    let mut r = Report::new("automorphisms");
    cfg.header(&mut r);
    let table = engine_table(&cfg)?;
    let g = Garside::new(&table);
    let ball = PosetBall::build(&g, height, cfg.mode)?;
    r.push("height", height);
    r.push("ball_size", ball.len());
    let autos = poset_automorphisms(&ball, true);
    r.push("automorphisms", autos.len());
    let mut actions: Vec<String> = autos
        .iter()
        .map(|map| match atom_symmetry(&cfg.matrix, map) {
            Some(s) => s.to_string(),
            None => "not-a-symmetry".into(),
        })
        .collect();
    actions.sort();
    r.push("atom_actions", actions.join(" | "));
    Ok((0, r))
}

fn cmd_brace(cli: &Cli, cmd: &BraceCmd) -> Result<(i32, Report)> {
    match cmd {
        BraceCmd::Validate { spec } => {
            let mut r = Report::new("brace validate");
            let spec = BraceSpec::parse(spec)?;
            r.push("type", spec.group_type());
            r.push("spec", spec.render());
            let v = spec.validate();
            r.push(
                "braid_violations",
                v.braid_violations
                    .iter()
                    .map(|(i, j)| format!("{},{}", i + 1, j + 1))
                    .collect::<Vec<_>>()
                    .join(" "),
            );
            r.push("invariance_violations", v.invariance_violations.len());
            r.push("constancy_violations", v.constancy_violations.len());
            let ok = v.is_valid();
            r.push("valid", ok);
            Ok((i32::from(!ok), r))
        }
        BraceCmd::Catalog => {
            let cfg = RunConfig::resolve(cli)?;
            let ty = cfg.group_type()?;
            let mut r = Report::new("brace catalog");
            r.push("type", ty);
            let rows = catalog(ty);
            r.push("rows", rows.len());
            for (i, row) in rows.iter().enumerate() {
                r.push(&format!("row.{}", i + 1), row.render());
            }
            if let Some(note) = boundary_note(ty) {
                r.push("note", note);
            }
            Ok((0, r))
        }
        BraceCmd::Enumerate => {
            let cfg = RunConfig::resolve(cli)?;
            let ty = cfg.group_type()?;
            let mut r = Report::new("brace enumerate");
            r.push("type", ty);
            let mut found = enumerate_brace_specs(ty);
            r.push("found", found.len());
            for (i, row) in found.iter().enumerate() {
                r.push(&format!("row.{}", i + 1), row.render());
            }
            let mut expected = catalog(ty);
            found.sort_by(|a, b| a.assignment().cmp(b.assignment()));
            expected.sort_by(|a, b| a.assignment().cmp(b.assignment()));
            let ok = found == expected;
            r.push("matches_catalog", ok);
            Ok((i32::from(!ok), r))
        }
        BraceCmd::Verify {
            spec,
            samples,
            seed,
        } => {
            let cfg = RunConfig::resolve(cli)?;
            let mut r = Report::new("brace verify");
            cfg.header(&mut r);
            r.push("samples", samples);
            r.push("seed", seed);
            let rows = match spec {
                Some(text) => {
                    let s = BraceSpec::parse(text)?;
                    if s.matrix() != &cfg.matrix {
                        return Err(Error::Usage(
                            "assignment type differs from the selected group".into(),
                        ));
                    }
                    vec![s]
                }
                None => {
                    let ty = cfg.group_type()?;
                    catalog(ty)
                }
            };
            r.push("rows", rows.len());
            let table = engine_table(&cfg)?;
            let g = Garside::new(&table);
            let mut all_ok = true;
            for (i, row) in rows.iter().enumerate() {
                let v = verify_brace_identity(row, &g, *samples, *seed, cfg.mode)?;
                let ok = v.pass();
                all_ok &= ok;
                r.push(
                    &format!("row.{}", i + 1),
                    format!(
                        "{} ({}; kernel {}, moved {})",
                        if ok { "PASS" } else { "FAIL" },
                        row.render(),
                        v.kernel_samples,
                        v.moved_samples
                    ),
                );
                if let Some(first) = v.violations.first() {
                    r.push(
                        &format!("row.{}.violation", i + 1),
                        format!("{} at sample {}: {}", first.check, first.sample, first.detail),
                    );
                }
            }
            r.push("result", if all_ok { "PASS" } else { "FAIL" });
            Ok((i32::from(!all_ok), r))
        }
        BraceCmd::Torus => {
            let cfg = RunConfig::resolve(cli)?;
            let mut r = Report::new("brace torus");
            cfg.header(&mut r);
            let table = engine_table(&cfg)?;
            let g = Garside::new(&table);
            let t = torus_relation_check(&g)?;
            r.push("m", t.m);
            for (k, p) in t.chain.iter().enumerate() {
                r.push(&format!("power.{}", k + 1), p);
            }
            r.push(
                format!("sigma1^o{} == sigma2^o{}", t.m, t.m).as_str(),
                t.agree_at_m,
            );
            r.push("half_twist_at_m", t.delta_at_m);
            r.push(
                "early_collision",
                t.early_collision
                    .map(|k| k.to_string())
                    .unwrap_or_else(|| "none".into()),
            );
            let ok = t.pass();
            r.push("result", if ok { "PASS" } else { "FAIL" });
            Ok((i32::from(!ok), r))
        }
        BraceCmd::Center {
            kmax,
            samples,
            seed,
        } => {
            let cfg = RunConfig::resolve(cli)?;
            let ty = cfg.group_type()?;
            let mut r = Report::new("brace center");
            cfg.header(&mut r);
            r.push("samples", samples);
            r.push("seed", seed);
            r.push("k_max", kmax);
            let rows = catalog(ty);
            let spec = rows.first().ok_or_else(|| {
                Error::Usage(format!("{ty} admits no non-trivial assignment"))
            })?;
            let table = engine_table(&cfg)?;
            let g = Garside::new(&table);
            let c = delta_center_check(spec, &g, *kmax, *samples, *seed)?;
            for (k, commutes, trivial) in &c.checked_powers {
                r.push(
                    &format!("power.{k}"),
                    format!("commutes={commutes} symmetry_trivial={trivial}"),
                );
            }
            r.push(
                "central_power",
                c.least_central_power
                    .map(|k| k.to_string())
                    .unwrap_or_else(|| "none".into()),
            );
            r.push("circ_violations", c.circ_violations);
            let ok = c.pass();
            r.push("result", if ok { "PASS" } else { "FAIL" });
            Ok((i32::from(!ok), r))
        }
    }
}

// The carrier comes from the table file alone; no group selection is read.
fn cmd_holomorph(table: &std::path::Path) -> Result<(i32, Report)> {
    let mut r = Report::new("holomorph");
    let text = std::fs::read_to_string(table)
        .map_err(|e| Error::Usage(format!("cannot read {}: {e}", table.display())))?;
    let g = FiniteGroup::parse(&text)?;
    r.push("order", g.order());
    r.push("abelian", g.is_abelian());
    r.push("automorphisms", g.automorphisms().len());
    let braces = enumerate_braces(&g)?;
    r.push("braces", braces.len());
    for (i, b) in braces.iter().enumerate() {
        let series = b.retraction_series();
        r.push(
            &format!("brace.{}", i + 1),
            format!(
                "trivial={} circ_abelian={} socle={} degree={}",
                b.is_trivial(),
                b.circ().is_abelian(),
                b.socle().len(),
                series
                    .degree
                    .map(|d| d.to_string())
                    .unwrap_or_else(|| "none".into()),
            ),
        );
    }
    let rt = holomorph_roundtrip(&g)?;
    r.push("functions_recovered", rt.functions_recovered);
    r.push("tables_recovered", rt.tables_recovered);
    r.push("trivial_count", rt.trivial_count);
    let ok = rt.pass();
    r.push("result", if ok { "PASS" } else { "FAIL" });
    Ok((i32::from(!ok), r))
}
