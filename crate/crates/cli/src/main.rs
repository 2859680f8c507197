use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use colorgroup::modelset::{ab_vertices, Window};
use colorgroup::render::{render_ab_coloring, render_lattice_coloring, Bounds, Palette};
use colorgroup::ring::parse_coeffs;
use colorgroup::symmetry::{classify, enumerate_sublattices, find_symmetry, similar_transform, ReportRecord};
use colorgroup::{
    color_permutation, stabilizer, Ambient, Error, GenMatrix, Isometry, PlanarPoint, PointSymmetry, RingElement,
};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "colorgroup", version, about = "Color groups of sublattice colorings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stabilizer and plane-group label, by closed form and by direct check.
    Classify {
        #[command(flatten)]
        coloring: Coloring,
        /// Multiply the submodule by this ring element first, e.g. g:1,1.
        #[arg(long)]
        scale: Option<RingElement>,
        /// Include the color permutation of every stabilizer element.
        #[arg(long)]
        perms: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Coset representatives in color order.
    Cosets {
        #[command(flatten)]
        coloring: Coloring,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Color permutation induced by a symmetry.
    Perm {
        #[command(flatten)]
        coloring: Coloring,
        /// Point-group element by name (1, R_i, -T_r, a^3b, ...). Repeat to
        /// compose; the last one acts first.
        #[arg(long = "element")]
        elements: Vec<String>,
        /// Translation applied after the point part, as coefficients.
        #[arg(long, allow_hyphen_values = true)]
        translate: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sublattice counts per label for every index up to a bound.
    Census {
        #[arg(long)]
        ambient: Ambient,
        #[arg(long, default_value_t = 10)]
        max_index: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare the closed-form criteria with the direct check on every
    /// sublattice up to a bound. Exits 1 on any disagreement.
    Verify {
        #[arg(long)]
        ambient: Ambient,
        #[arg(long, default_value_t = 30)]
        max_index: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// SVG of the coloring: lattice points in a box, or an Ammann-Beenker
    /// patch for the octagonal module.
    Render {
        #[command(flatten)]
        coloring: Coloring,
        /// x0,y0,x1,y1 for lattices.
        #[arg(long = "box", default_value = "-5,-5,5,5", allow_hyphen_values = true)]
        bounds: String,
        /// Patch radius for the octagonal module.
        #[arg(long, default_value_t = 8.0)]
        radius: f64,
        /// Window shift dx,dy for the octagonal module.
        #[arg(long, allow_hyphen_values = true)]
        shift: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Ammann-Beenker vertices as coefficient 4-tuples.
    Patch {
        #[arg(long, default_value_t = 8.0)]
        radius: f64,
        #[arg(long, allow_hyphen_values = true)]
        shift: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Coloring {
    /// square | hex | rect:h | rect:p/q | oct
    #[arg(long)]
    ambient: Ambient,
    /// Generators as coefficient lists separated by semicolons, e.g. "3,0;0,1".
    #[arg(long, allow_hyphen_values = true)]
    gens: String,
}

impl Coloring {
    fn module(&self) -> Result<GenMatrix, Error> {
        let cols = self.gens.split(';').map(parse_coeffs).collect::<Result<Vec<_>, _>>()?;
        let n = self.ambient.rank();
        if cols.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: cols.len(),
            });
        }
        if let Some(c) = cols.iter().find(|c| c.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: c.len(),
            });
        }
        GenMatrix::from_columns(self.ambient.tag(), &cols)
    }
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn emit_json<T: Serialize>(value: &T, out: Option<&PathBuf>) -> Result<(), Failure> {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    emit(&s, out)
}

fn parse_pair(s: &str) -> Result<PlanarPoint, Failure> {
    let v: Vec<f64> = s
        .split(',')
        .map(|t| t.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|e| Failure::Usage(format!("bad number in {s:?}: {e}")))?;
    match v[..] {
        [x, y] => Ok(PlanarPoint::new(x, y)),
        _ => Err(Failure::Usage(format!("expected dx,dy, got {s:?}"))),
    }
}

fn window(shift: Option<&str>) -> Result<Window, Failure> {
    Ok(match shift {
        Some(s) => Window::canonical_shifted(parse_pair(s)?),
        None => Window::canonical(),
    })
}

#[derive(Serialize)]
struct Classification {
    ambient: String,
    index: u64,
    label: String,
    oracle: ReportRecord,
    closed_form: Option<ReportRecord>,
    agreement: Option<bool>,
}

fn cmd_classify(c: &Coloring, scale: Option<&RingElement>, perms: bool, out: Option<&PathBuf>) -> Result<(), Failure> {
    let mut m = c.module()?;
    if let Some(s) = scale {
        m = similar_transform(&m, s)?;
    }
    let mut oracle = stabilizer(c.ambient, &m)?;
    let closed = classify(c.ambient, &m)?;
    let agreement = closed
        .as_ref()
        .map(|r| r.stabilizer == oracle.stabilizer && r.label == oracle.label);
    if perms {
        oracle = oracle.with_permutations(&m)?;
    }
    let result = Classification {
        ambient: c.ambient.to_string(),
        index: m.index(),
        label: oracle.label.clone(),
        oracle: oracle.record(),
        closed_form: closed.map(|r| r.record()),
        agreement,
    };
    emit_json(&result, out)?;
    if agreement == Some(false) {
        return Err(Failure::Check("closed form and direct check disagree".into()));
    }
    Ok(())
}

#[derive(Serialize)]
struct Coset {
    ordinal: usize,
    coeffs: Vec<i64>,
}

fn cmd_cosets(c: &Coloring, out: Option<&PathBuf>) -> Result<(), Failure> {
    let reps: Vec<Coset> = c
        .module()?
        .coset_reps()
        .into_iter()
        .map(|r| Coset {
            ordinal: r.ordinal,
            coeffs: r.coeffs,
        })
        .collect();
    emit_json(&reps, out)
}

#[derive(Serialize)]
struct PermOutput {
    elements: Vec<String>,
    point_part: String,
    translation: Vec<i64>,
    mapping: Vec<usize>,
}

fn cmd_perm(c: &Coloring, elements: &[String], translate: Option<&str>, out: Option<&PathBuf>) -> Result<(), Failure> {
    let m = c.module()?;
    let mut point = PointSymmetry::identity(c.ambient);
    for name in elements {
        point = point.compose(&find_symmetry(c.ambient, name)?)?;
    }
    let translation = match translate {
        Some(t) => parse_coeffs(t)?,
        None => vec![0; c.ambient.rank()],
    };
    let shift = Isometry::translation(c.ambient, translation.clone())?;
    let iso = shift.compose(&Isometry::from(point.clone()))?;
    let p = color_permutation(&iso, &m)?;
    emit_json(
        &PermOutput {
            elements: elements.to_vec(),
            point_part: point.name(),
            translation,
            mapping: p.mapping,
        },
        out,
    )
}

#[derive(Serialize)]
struct CensusRow {
    index: u64,
    total: usize,
    labels: BTreeMap<String, usize>,
}

fn cmd_census(ambient: Ambient, max_index: u64, out: Option<&PathBuf>) -> Result<(), Failure> {
    if max_index == 0 {
        return Err(Failure::Usage("--max-index must be at least 1".into()));
    }
    let mut rows = Vec::new();
    for m in 1..=max_index {
        let subs = enumerate_sublattices(ambient, m)?;
        let mut labels = BTreeMap::new();
        for s in &subs {
            *labels.entry(stabilizer(ambient, s)?.label).or_insert(0) += 1;
        }
        rows.push(CensusRow {
            index: m,
            total: subs.len(),
            labels,
        });
    }
    emit_json(&rows, out)
}

#[derive(Serialize)]
struct VerifyReport {
    ambient: String,
    max_index: u64,
    cases: usize,
    disagreements: Vec<Disagreement>,
}

#[derive(Serialize)]
struct Disagreement {
    hnf: Vec<Vec<i64>>,
    closed_form: String,
    oracle: String,
}

fn cmd_verify(ambient: Ambient, max_index: u64, out: Option<&PathBuf>) -> Result<(), Failure> {
    if !matches!(ambient, Ambient::Square | Ambient::Hexagonal) {
        return Err(Failure::Usage(format!("verify needs square or hex, got {ambient}")));
    }
    let mut report = VerifyReport {
        ambient: ambient.to_string(),
        max_index,
        cases: 0,
        disagreements: Vec::new(),
    };
    for m in 1..=max_index {
        for s in enumerate_sublattices(ambient, m)? {
            report.cases += 1;
            let oracle = stabilizer(ambient, &s)?;
            let closed = classify(ambient, &s)?.expect("rank-2 lattice ambient");
            if closed.stabilizer != oracle.stabilizer || closed.label != oracle.label {
                report.disagreements.push(Disagreement {
                    hnf: s.hnf().mat.rows(),
                    closed_form: closed.label,
                    oracle: oracle.label,
                });
            }
        }
    }
    emit_json(&report, out)?;
    match report.disagreements.len() {
        0 => Ok(()),
        n => Err(Failure::Check(format!("{n} disagreements"))),
    }
}

fn cmd_render(
    c: &Coloring,
    bounds: &str,
    radius: f64,
    shift: Option<&str>,
    out: Option<&PathBuf>,
) -> Result<(), Failure> {
    let m = c.module()?;
    let pal = Palette::default();
    let svg = if c.ambient == Ambient::Octagonal {
        render_ab_coloring(&m, &ab_vertices(&window(shift)?, radius)?, &pal)?
    } else {
        let v = bounds
            .split(',')
            .map(|t| t.trim().parse::<f64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| Failure::Usage(format!("bad --box {bounds:?}: {e}")))?;
        let [x0, y0, x1, y1] = v[..] else {
            return Err(Failure::Usage(format!("--box needs x0,y0,x1,y1, got {bounds:?}")));
        };
        render_lattice_coloring(c.ambient, &m, Bounds::new(x0, y0, x1, y1), &pal)?
    };
    emit(&svg, out)
}

fn cmd_patch(radius: f64, shift: Option<&str>, out: Option<&PathBuf>) -> Result<(), Failure> {
    let patch = ab_vertices(&window(shift)?, radius)?;
    emit_json(&patch.coefficients(), out)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Classify {
            coloring,
            scale,
            perms,
            out,
        } => cmd_classify(&coloring, scale.as_ref(), perms, out.as_ref()),
        Command::Cosets { coloring, out } => cmd_cosets(&coloring, out.as_ref()),
        Command::Perm {
            coloring,
            elements,
            translate,
            out,
        } => cmd_perm(&coloring, &elements, translate.as_deref(), out.as_ref()),
        Command::Census {
            ambient,
            max_index,
            out,
        } => cmd_census(ambient, max_index, out.as_ref()),
        Command::Verify {
            ambient,
            max_index,
            out,
        } => cmd_verify(ambient, max_index, out.as_ref()),
        Command::Render {
            coloring,
            bounds,
            radius,
            shift,
            out,
        } => cmd_render(&coloring, &bounds, radius, shift.as_deref(), out.as_ref()),
        Command::Patch { radius, shift, out } => cmd_patch(radius, shift.as_deref(), out.as_ref()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
