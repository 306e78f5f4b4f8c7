//! Argument parsing and command dispatch.

use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use projgeo_core::fibration;
use projgeo_core::grassmann::{self, GraphChart, Subspace};
use projgeo_core::hopf_manifold;
use projgeo_core::projective::{self, AffineChart};
use projgeo_core::suite::{self, SuiteName};
use projgeo_core::{Field, ProjPoint, Tolerance, C64};
use serde_json::json;

use crate::error::{code, CliError};
use crate::wire::{self, ChartDoc, Document, ExtendedDoc, HopfDoc, MapDoc, ParamsDoc, PointDoc, SubspaceDoc};

#[derive(Debug, Parser)]
#[command(
    name = "projgeo",
    version,
    about = "Projective spaces, Grassmannians, Hopf quotients and Hopf fibrations"
)]
pub struct Cli {
    /// Absolute tolerance for equality, rank and conditioning decisions.
    #[arg(long, global = true, env = "PROJGEO_EPS")]
    pub eps: Option<f64>,
    /// Largest accepted condition number of an invertible matrix.
    #[arg(long = "cond-max", global = true)]
    pub cond_max: Option<f64>,
    /// Field of input documents that do not declare one.
    #[arg(long, global = true, value_parser = parse_field)]
    pub field: Option<Field>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Apply a matrix to a point, subspace, Hopf point or extended complex number.
    Apply {
        /// Map document `{field, n, M}`.
        map: PathBuf,
        /// Input document; `-` reads standard input.
        input: PathBuf,
        /// Print the image of a CP¹ point as an extended complex number.
        #[arg(long)]
        cp1: bool,
        #[command(flatten)]
        lambda: LambdaArg,
    },
    /// Sample the sphere fiber over a projective point as CSV.
    Fiber {
        point: PathBuf,
        /// Number of samples on a complex fiber.
        #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        /// Append stereographic coordinates X, Y, Z (CP¹ only).
        #[arg(long)]
        stereo: bool,
    },
    /// Affine charts of projective space.
    #[command(subcommand)]
    Chart(ChartCommand),
    /// Graph charts and dualities of Grassmannians.
    #[command(subcommand)]
    Grassmann(GrassmannCommand),
    /// Quotients by powers of a scalar.
    #[command(subcommand)]
    Hopf(HopfCommand),
    /// Linking number of the Hopf circles over two points of CP¹.
    Link {
        p: PathBuf,
        q: PathBuf,
        /// Segments per circle.
        #[arg(long, default_value_t = 2048)]
        samples: usize,
    },
    /// Run the seeded property suites.
    Check {
        /// projective, grassmann, hopf-manifold, fibration or all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Args)]
pub struct LambdaArg {
    /// Scale factor: `2`, `-3`, `2i`, `1+2i` or `re,im`.
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub lambda: Option<C64>,
}

#[derive(Debug, Subcommand)]
pub enum ChartCommand {
    /// Chart coordinates `{field, n, j, w}` to a projective point.
    Embed {
        input: PathBuf,
        /// Chart index overriding the document's `j`.
        #[arg(long)]
        index: Option<usize>,
    },
    /// A projective point to the coordinates of chart `--index`, or of a
    /// covering chart when omitted.
    Extract {
        point: PathBuf,
        #[arg(long)]
        index: Option<usize>,
    },
    /// Change chart coordinates to chart `--to`.
    Transition {
        input: PathBuf,
        #[arg(long)]
        to: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum GrassmannCommand {
    /// The graph `{v + A v}` of a parameter matrix `A`.
    Graph {
        params: PathBuf,
        #[arg(long)]
        base: PathBuf,
        /// Chart complement; the orthogonal complement of the base by default.
        #[arg(long)]
        complement: Option<PathBuf>,
    },
    /// Parameter matrix of a subspace in the graph chart around `--base`.
    Coords {
        subspace: PathBuf,
        #[arg(long)]
        base: PathBuf,
        #[arg(long)]
        complement: Option<PathBuf>,
    },
    /// Hermitian orthogonal complement.
    Complement { subspace: PathBuf },
    /// Annihilator under the bilinear pairing `Σ xᵢ yᵢ`.
    Annihilator { subspace: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum HopfCommand {
    /// Canonical representative of the class of a vector `{rep}`.
    Project {
        input: PathBuf,
        #[command(flatten)]
        lambda: LambdaArg,
    },
    /// Whether two vectors differ by an integer power of λ.
    Equal {
        a: PathBuf,
        b: PathBuf,
        #[command(flatten)]
        lambda: LambdaArg,
    },
    /// The projective point under a class.
    ToProjective {
        input: PathBuf,
        #[command(flatten)]
        lambda: LambdaArg,
    },
}

/// What a command prints and the exit code it ends with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub code: u8,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self { stdout, code: 0 }
    }
}

fn parse_field(s: &str) -> Result<Field, String> {
    s.parse::<Field>().map_err(|e| e.to_string())
}

/// Parses `2`, `-2.5`, `2i`, `-i`, `1+2i`, `1e-3-4i` and `re,im`.
pub fn parse_complex(s: &str) -> Result<C64, String> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let num = |t: &str| t.parse::<f64>().map_err(|_| format!("invalid number `{t}` in `{s}`"));
    let z = if let Some((re, im)) = s.split_once(',') {
        C64::new(num(re)?, num(im)?)
    } else if let Some(body) = s.strip_suffix('i') {
        let bytes = body.as_bytes();
        let split = (1..bytes.len())
            .rev()
            .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
        let (re, im) = match split {
            Some(k) => (num(&body[..k])?, &body[k..]),
            None => (0.0, body),
        };
        let im = match im {
            "" | "+" => 1.0,
            "-" => -1.0,
            t => num(t)?,
        };
        C64::new(re, im)
    } else {
        C64::new(num(&s)?, 0.0)
    };
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(format!("non-finite scalar `{s}`"))
    }
}

fn read_text(path: &Path) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::bad_input(format!("{}: {e}", path.display())))
    }
}

fn read_doc(path: &Path) -> Result<Document, CliError> {
    Document::parse(&read_text(path)?)
}

fn unexpected(doc: &Document, wanted: &str) -> CliError {
    CliError::bad_input(format!("expected a {wanted} document, found a {}", doc.kind()))
}

fn read_point(path: &Path, field: Option<Field>, tol: &Tolerance) -> Result<ProjPoint, CliError> {
    match read_doc(path)? {
        Document::Point(d) => d.to_point(field, tol),
        other => Err(unexpected(&other, "point")),
    }
}

fn read_subspace(path: &Path, field: Option<Field>, tol: &Tolerance) -> Result<Subspace, CliError> {
    match read_doc(path)? {
        Document::Subspace(d) => d.to_subspace(field, tol),
        other => Err(unexpected(&other, "subspace")),
    }
}

fn read_hopf(path: &Path) -> Result<HopfDoc, CliError> {
    match read_doc(path)? {
        Document::Hopf(d) => Ok(d),
        other => Err(unexpected(&other, "hopf point")),
    }
}

fn read_chart_doc(path: &Path) -> Result<ChartDoc, CliError> {
    match read_doc(path)? {
        Document::Chart(d) => Ok(d),
        other => Err(unexpected(&other, "chart point")),
    }
}

fn graph_chart(
    base: &Path,
    complement: Option<&Path>,
    field: Option<Field>,
    tol: &Tolerance,
) -> Result<GraphChart, CliError> {
    let base = read_subspace(base, field, tol)?;
    match complement {
        Some(path) => Ok(GraphChart::new(base, read_subspace(path, field, tol)?, tol)?),
        None => Ok(GraphChart::around(base)),
    }
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let defaults = Tolerance::default();
    let tol = Tolerance::new(
        cli.eps.unwrap_or(defaults.eps_abs()),
        cli.cond_max.unwrap_or(defaults.cond_max()),
    )?;
    let field = cli.field;
    match &cli.command {
        Command::Apply {
            map,
            input,
            cp1,
            lambda,
        } => apply(map, input, *cp1, lambda.lambda, field, &tol),
        Command::Fiber { point, samples, stereo } => {
            fiber(&read_point(point, field, &tol)?, *samples as usize, *stereo)
        }
        Command::Chart(c) => chart(c, field, &tol),
        Command::Grassmann(c) => grassmann_cmd(c, field, &tol),
        Command::Hopf(c) => hopf(c, field, &tol),
        Command::Link { p, q, samples } => {
            let p = read_point(p, field, &tol)?;
            let q = read_point(q, field, &tol)?;
            let report = fibration::linking_integral(&p, &q, *samples, &tol)?;
            Ok(Output::ok(wire::to_json(&json!({
                "linking_number": report.number,
                "integral": report.integral,
                "samples": samples,
                "pole": report.pole,
            }))))
        }
        Command::Check { suite, trials, seed } => {
            let name: SuiteName = suite
                .parse()
                .map_err(|_| CliError::bad_input(format!("unknown suite `{suite}`")))?;
            let report = suite::run(name, *trials as usize, *seed, &tol);
            Ok(Output {
                stdout: report.to_string(),
                code: if report.all_passed() { 0 } else { code::CHECK_FAILED },
            })
        }
    }
}

fn apply(
    map: &Path,
    input: &Path,
    cp1: bool,
    lambda: Option<C64>,
    field: Option<Field>,
    tol: &Tolerance,
) -> Result<Output, CliError> {
    let map_doc: MapDoc = match read_doc(map)? {
        Document::Map(d) => d,
        other => return Err(unexpected(&other, "map")),
    };
    let out = match read_doc(input)? {
        Document::Point(d) => {
            let image = map_doc.to_map(field, tol)?.apply(&d.to_point(field, tol)?)?;
            if cp1 {
                wire::to_json(&ExtendedDoc::from_extended(fibration::cp1_affine(&image, tol)?))
            } else {
                wire::to_json(&PointDoc::from_point(&image))
            }
        }
        Document::Extended(d) => {
            let t = map_doc.to_map(field, tol)?;
            let image = t.apply(&fibration::cp1_from_affine(d.to_extended()?)?)?;
            wire::to_json(&ExtendedDoc::from_extended(fibration::cp1_affine(&image, tol)?))
        }
        Document::Subspace(d) => {
            let g = map_doc.to_matrix(field)?;
            wire::to_json(&SubspaceDoc::from_subspace(&grassmann::apply_gl(
                &g,
                &d.to_subspace(field, tol)?,
                tol,
            )?))
        }
        Document::Hopf(d) => {
            let g = map_doc.to_matrix(field)?;
            let (v, group) = d.to_vector(field, lambda, tol)?;
            let h = hopf_manifold::quotient_project(&v, &group, tol)?;
            wire::to_json(&HopfDoc::from_hopf(&hopf_manifold::induced_linear(&g, &h, tol)?, None))
        }
        other => return Err(unexpected(&other, "point, subspace, hopf point or extended complex")),
    };
    Ok(Output::ok(out))
}

fn fiber(p: &ProjPoint, samples: usize, stereo: bool) -> Result<Output, CliError> {
    if stereo && !(p.field() == Field::Complex && p.dim() == 1) {
        return Err(CliError::mismatch(format!(
            "--stereo needs a point of CP1, got a point of {}P{}",
            if p.field() == Field::Real { "R" } else { "C" },
            p.dim()
        )));
    }
    let points = match p.field() {
        Field::Real => fibration::real_fiber(p)?.to_vec(),
        Field::Complex => fibration::complex_fiber_sample(p, samples)?,
    };
    let width = points[0].real_coords().len();
    let mut writer = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["t".to_string()];
    header.extend((1..=width).map(|i| format!("x{i}")));
    if stereo {
        header.extend(["X", "Y", "Z"].map(String::from));
    }
    writer.write_record(&header)?;
    for (t, x) in points.iter().enumerate() {
        let coords = x.real_coords();
        let mut row = vec![t.to_string()];
        row.extend(coords.iter().map(|&c| wire::format_f64(c)));
        if stereo {
            let image = fibration::stereographic_from_south([coords[0], coords[1], coords[2], coords[3]]);
            match image {
                Some(y) => row.extend(y.iter().map(|&c| wire::format_f64(c))),
                None => row.extend(["inf", "inf", "inf"].map(String::from)),
            }
        }
        writer.write_record(&row)?;
    }
    let bytes = writer.into_inner().map_err(|e| CliError::bad_input(e.to_string()))?;
    Ok(Output::ok(String::from_utf8(bytes).expect("CSV of ASCII fields")))
}

fn chart(c: &ChartCommand, field: Option<Field>, tol: &Tolerance) -> Result<Output, CliError> {
    let doc = match c {
        ChartCommand::Embed { input, index } => {
            let d = read_chart_doc(input)?;
            let (f, w) = d.to_vector(field)?;
            let chart = AffineChart::new(f, w.len(), index.unwrap_or(d.j))?;
            return Ok(Output::ok(wire::to_json(&PointDoc::from_point(&chart.embed(&w)?))));
        }
        ChartCommand::Extract { point, index } => {
            let p = read_point(point, field, tol)?;
            let chart = match index {
                Some(j) => AffineChart::new(p.field(), p.dim(), *j)?,
                None => AffineChart::cover(&p),
            };
            ChartDoc::new(p.field(), p.dim(), chart.index(), chart.extract(&p, tol)?.as_ref())
        }
        ChartCommand::Transition { input, to } => {
            let d = read_chart_doc(input)?;
            let (f, w) = d.to_vector(field)?;
            let from = AffineChart::new(f, w.len(), d.j)?;
            let target = AffineChart::new(f, w.len(), *to)?;
            ChartDoc::new(
                f,
                w.len(),
                *to,
                projective::chart_transition(&from, &target, &w, tol)?.as_ref(),
            )
        }
    };
    Ok(Output::ok(wire::to_json(&doc)))
}

fn grassmann_cmd(c: &GrassmannCommand, field: Option<Field>, tol: &Tolerance) -> Result<Output, CliError> {
    let out = match c {
        GrassmannCommand::Graph {
            params,
            base,
            complement,
        } => {
            let chart = graph_chart(base, complement.as_deref(), field, tol)?;
            let a = match read_doc(params)? {
                Document::Params(d) => d.to_matrix(field)?,
                other => return Err(unexpected(&other, "parameter matrix")),
            };
            wire::to_json(&SubspaceDoc::from_subspace(&chart.graph(&a)?))
        }
        GrassmannCommand::Coords {
            subspace,
            base,
            complement,
        } => {
            let chart = graph_chart(base, complement.as_deref(), field, tol)?;
            let x = read_subspace(subspace, field, tol)?;
            let (rows, cols) = chart.parameter_shape();
            wire::to_json(&ParamsDoc::new(
                chart.field(),
                rows,
                cols,
                chart.coords(&x, tol)?.as_ref(),
            ))
        }
        GrassmannCommand::Complement { subspace } => wire::to_json(&SubspaceDoc::from_subspace(
            &grassmann::orthogonal_complement(&read_subspace(subspace, field, tol)?),
        )),
        GrassmannCommand::Annihilator { subspace } => wire::to_json(&SubspaceDoc::from_subspace(
            &grassmann::annihilator(&read_subspace(subspace, field, tol)?),
        )),
    };
    Ok(Output::ok(out))
}

fn hopf(c: &HopfCommand, field: Option<Field>, tol: &Tolerance) -> Result<Output, CliError> {
    let out = match c {
        HopfCommand::Project { input, lambda } => {
            let (v, group) = read_hopf(input)?.to_vector(field, lambda.lambda, tol)?;
            let (h, m) = hopf_manifold::quotient_project_with_exponent(&v, &group, tol)?;
            wire::to_json(&HopfDoc::from_hopf(&h, Some(m)))
        }
        HopfCommand::Equal { a, b, lambda } => {
            let (va, ga) = read_hopf(a)?.to_vector(field, lambda.lambda, tol)?;
            let (vb, gb) = read_hopf(b)?.to_vector(field, lambda.lambda, tol)?;
            if ga != gb {
                return Err(CliError::mismatch("the two classes use different scale groups"));
            }
            wire::to_json(&json!({ "equal": hopf_manifold::hopf_points_equal(&va, &vb, &ga, tol)? }))
        }
        HopfCommand::ToProjective { input, lambda } => {
            let (v, group) = read_hopf(input)?.to_vector(field, lambda.lambda, tol)?;
            let h = hopf_manifold::quotient_project(&v, &group, tol)?;
            wire::to_json(&PointDoc::from_point(&hopf_manifold::to_projective(&h)?))
        }
    };
    Ok(Output::ok(out))
}
