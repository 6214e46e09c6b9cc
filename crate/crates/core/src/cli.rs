//! Command-line front end: `bands`, `classify`, `tables`, `sweep-ni` and `dw-test`.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64 as C64;
use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{
    classify_solution, locate_exceptional_point, verify_quartet_structure, Classification, ClassifyOptions,
    QuartetReport, EP_TOL_K,
};
use crate::corep::{corep_catalog, CMat, CharacterTable};
use crate::error::{Error, Result};
use crate::kpoint::{parse_bloch, BlochVector, HighSymmetryPoint, KPath};
use crate::lattice::LatticeConfig;
use crate::output::{bands_csv, fmt_f64, segment_dat, OutputDir};
use crate::pwe::{frequencies, solve, solve_path, SolveOptions};
use crate::symmetry::{CorepType, LittleGroup};

#[derive(Debug, Parser)]
#[command(name = "ptbands", version, about = "Bands and symmetry labels of a PT-symmetric photonic crystal")]
pub struct Cli {
    /// JSON lattice configuration; defaults apply to missing keys.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Output directory.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,
    #[arg(long, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Band structure along a path of high-symmetry points.
    Bands(BandsArgs),
    /// Clusters, PT pairs and corepresentation labels at one k-point.
    Classify(ClassifyArgs),
    /// Character tables, Dimmock-Wheeler sums and corepresentation matrices.
    Tables(TablesArgs),
    /// Im(omega) and the exceptional point of a band pair versus n_i.
    SweepNi(SweepArgs),
    /// Dimmock-Wheeler test at the high-symmetry points.
    DwTest(DwArgs),
}

#[derive(Debug, Args)]
pub struct BandsArgs {
    /// Vertices, e.g. "gamma-x-m-gamma".
    #[arg(long, default_value = "gamma-x-m-gamma")]
    pub path: String,
    #[arg(long, default_value_t = 64)]
    pub samples: usize,
    #[arg(long, default_value_t = 12)]
    pub bands: usize,
    /// Also sample the last part of every segment touching this vertex densely.
    #[arg(long)]
    pub refine: Option<HighSymmetryPoint>,
    #[arg(long, default_value_t = 200)]
    pub refine_points: usize,
    #[arg(long, default_value_t = 0.02)]
    pub refine_fraction: f64,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    /// gamma, x, m or "kx,ky" in units of pi/Lambda.
    #[arg(long, default_value = "gamma")]
    pub k: String,
    /// Frequency window "lo:hi" in units of Lambda/lambda_0.
    #[arg(long)]
    pub window: Option<String>,
    #[arg(long, default_value_t = 40)]
    pub bands: usize,
}

#[derive(Debug, Args)]
pub struct TablesArgs {
    /// Group name: c4v, d2h or d4h.
    pub group: Option<String>,
    /// High-symmetry point: gamma, x or m.
    #[arg(long)]
    pub k: Option<HighSymmetryPoint>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, default_value = "x")]
    pub k: HighSymmetryPoint,
    /// Band pair "a,b" (0-based, sorted by Re omega).
    #[arg(long, default_value = "0,1")]
    pub bands: String,
    /// Comma-separated n_i values.
    #[arg(long, value_delimiter = ',', default_value = "0,0.0125,0.025,0.05,0.1")]
    pub ni: Vec<f64>,
    /// Start of the segment searched for the exceptional point ("kx,ky");
    /// defaults to 0.9 k for X and M.
    #[arg(long)]
    pub from: Option<String>,
}

#[derive(Debug, Args)]
pub struct DwArgs {
    /// Restrict to one point.
    #[arg(long)]
    pub k: Option<HighSymmetryPoint>,
}

fn parse_window(s: &str) -> Result<(f64, f64)> {
    let bad = || Error::Config(format!("window must be 'lo:hi', got '{s}'"));
    let (a, b) = s.split_once(':').ok_or_else(bad)?;
    let (lo, hi) = (a.trim().parse::<f64>().map_err(|_| bad())?, b.trim().parse::<f64>().map_err(|_| bad())?);
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn parse_pair(s: &str) -> Result<(usize, usize)> {
    let bad = || Error::Config(format!("band pair must be 'a,b', got '{s}'"));
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    let pair = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
    if pair.0 == pair.1 {
        return Err(bad());
    }
    Ok(pair)
}

fn point_for_group(name: &str) -> Result<HighSymmetryPoint> {
    match name.to_ascii_lowercase().as_str() {
        "c4v" => Ok(HighSymmetryPoint::Gamma),
        "d2h" => Ok(HighSymmetryPoint::X),
        "d4h" => Ok(HighSymmetryPoint::M),
        other => other.parse().map_err(|_| Error::Config(format!("unknown group '{name}'"))),
    }
}

fn fmt_char(c: C64) -> String {
    let r = |x: f64| if x.abs() < 5e-13 { 0.0 } else { x };
    match (r(c.re), r(c.im)) {
        (re, 0.0) => format!("{re}"),
        (0.0, im) => format!("{im}i"),
        (re, im) => format!("{re}{im:+}i"),
    }
}

/// Matrices in the row convention g h_i = sum_j D_ij h_j used by published tables.
fn row_convention(m: &CMat) -> CMat {
    m.transpose()
}

#[derive(Debug, Serialize)]
struct IrrepReport {
    name: String,
    dim: usize,
    physical: bool,
    characters: Vec<String>,
    dimmock_wheeler: Option<String>,
    corep_type: Option<String>,
}

#[derive(Debug, Serialize)]
struct CorepReport {
    name: String,
    corep_type: String,
    /// Matrices in the row convention, keyed by element label.
    matrices: Vec<(String, String)>,
}

#[derive(Debug, Serialize)]
struct TableReport {
    point: String,
    group: String,
    unitary_elements: Vec<String>,
    irreps: Vec<IrrepReport>,
    squared_antiunitary: Vec<String>,
    coreps: Vec<CorepReport>,
}

fn table_report(point: HighSymmetryPoint, with_coreps: bool) -> Result<TableReport> {
    let group = LittleGroup::at(point);
    let table = CharacterTable::for_group(&group)?;
    let labels = group.labels();
    let nu = group.unitary_count();
    let irreps = table
        .irreps
        .iter()
        .map(|ir| {
            let chars = ir.characters();
            let (dw, ty) = if with_coreps {
                let s = group.dimmock_wheeler_sum(&chars);
                (Some(fmt_char(s)), group.dimmock_wheeler(&chars).ok().map(|t| t.to_string()))
            } else {
                (None, None)
            };
            IrrepReport {
                name: ir.name.to_string(),
                dim: ir.dim,
                physical: ir.physical,
                characters: chars.into_iter().map(fmt_char).collect(),
                dimmock_wheeler: dw,
                corep_type: ty,
            }
        })
        .collect();
    let (squared, coreps) = if with_coreps {
        let sq = group.squared_antiunitary().into_iter().map(|i| group.label(i)).collect();
        let coreps = corep_catalog(&group, true)?
            .into_iter()
            .map(|c| CorepReport {
                name: c.name.clone(),
                corep_type: c.kind.to_string(),
                matrices: labels
                    .iter()
                    .cloned()
                    .zip(c.matrices.iter().map(|m| row_convention(m).to_string()))
                    .collect(),
            })
            .collect();
        (sq, coreps)
    } else {
        (Vec::new(), Vec::new())
    };
    Ok(TableReport {
        point: point.name().to_string(),
        group: table.group_name.to_string(),
        unitary_elements: labels[..nu].to_vec(),
        irreps,
        squared_antiunitary: squared,
        coreps,
    })
}

fn render_table(r: &TableReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{} at {} ({} unitary elements)", r.group, r.point, r.unitary_elements.len());
    let _ = writeln!(s, "{:<6} {}", "", r.unitary_elements.join("\t"));
    for ir in &r.irreps {
        let _ = write!(s, "{:<6} {}", ir.name, ir.characters.join("\t"));
        if let (Some(dw), Some(ty)) = (&ir.dimmock_wheeler, &ir.corep_type) {
            let _ = write!(s, "\tDW {dw} -> ({ty}){}", if ir.physical { "" } else { " [not admissible]" });
        }
        s.push('\n');
    }
    if !r.squared_antiunitary.is_empty() {
        let _ = writeln!(s, "\nsquared antiunitary elements: ({})", r.squared_antiunitary.join(", "));
    }
    for c in &r.coreps {
        let _ = writeln!(s, "\n{} type ({}), rows g h_i = sum_j D_ij h_j", c.name, c.corep_type);
        for (label, m) in &c.matrices {
            let _ = writeln!(s, "  {label:<9} {m}");
        }
    }
    s
}

fn render_classification(c: &Classification, quartets: &[(Vec<usize>, QuartetReport)]) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "k = ({}, {}) pi/Lambda{}",
        c.k[0],
        c.k[1],
        c.point.as_deref().map(|p| format!(" [{p}]")).unwrap_or_default()
    );
    let _ = writeln!(
        s,
        "{:>4} {:>20} {:>12} {:>7} {:>5}  {:<12} mismatch",
        "band", "re_omega", "im_omega", "cluster", "pair", "label"
    );
    for m in &c.modes {
        let _ = writeln!(
            s,
            "{:>4} {:>20.15} {:>12.4e} {:>7} {:>5}  {:<12} {}",
            m.band,
            m.omega_re,
            m.omega_im,
            m.cluster_id,
            m.pair_id.map_or("-".into(), |p| p.to_string()),
            m.label.as_deref().unwrap_or("-"),
            m.confidence.map_or("-".into(), |x| format!("{x:.1e}"))
        );
    }
    let _ = writeln!(s, "PT pairs: {}; real cluster sizes: {:?}", c.pair_count(), c.real_cluster_sizes());
    for (modes, q) in quartets {
        let _ = writeln!(
            s,
            "quartet {:?}: {} (loss sign {}, max defect {:.1e})",
            modes,
            if q.passed { "block structure verified" } else { "block structure violated" },
            q.loss_sign,
            q.max_defect
        );
        for f in &q.failures {
            let _ = writeln!(s, "  {f}");
        }
    }
    s
}

#[derive(Debug, Serialize)]
struct BandsJsonSample<'a> {
    segment: usize,
    k_index: usize,
    k: [f64; 2],
    omega: Vec<[f64; 2]>,
    classification: &'a Classification,
}

#[derive(Debug, Serialize)]
struct BandsJson<'a> {
    path: Vec<&'static str>,
    samples: Vec<BandsJsonSample<'a>>,
    connections: &'a [Vec<usize>],
}

struct Context {
    config: LatticeConfig,
    out: Option<PathBuf>,
    quiet: bool,
    arguments: Vec<String>,
}

impl Context {
    fn say(&self, text: &str) {
        if !self.quiet {
            print!("{text}");
        }
    }
}

fn classify_all(solutions: &[crate::pwe::KSolution]) -> Result<Vec<Classification>> {
    solutions.par_iter().map(|s| classify_solution(s, &ClassifyOptions::default())).collect()
}

fn cmd_bands(ctx: &Context, a: &BandsArgs) -> Result<()> {
    let path = KPath::parse(&a.path, a.samples)?;
    if a.bands == 0 {
        return Err(Error::Config("bands must be positive".into()));
    }
    let root = ctx.out.clone().unwrap_or_else(|| PathBuf::from("bands-out"));
    let mut out = OutputDir::create(&root)?;
    let bs = solve_path(&ctx.config, &path.samples(), a.bands)?;
    let classes = classify_all(&bs.solutions)?;
    out.write("bands.csv", bands_csv(&bs, &classes).as_bytes())?;
    for s in 0..path.segment_count() {
        let name = format!("segment{}_{}-{}.dat", s, path.vertices[s].name(), path.vertices[s + 1].name());
        out.write(&name, segment_dat(&bs, s, a.bands).as_bytes())?;
    }
    let json = BandsJson {
        path: path.vertices.iter().map(|v| v.name()).collect(),
        samples: bs
            .samples
            .iter()
            .zip(&bs.solutions)
            .zip(&classes)
            .map(|((s, sol), c)| BandsJsonSample {
                segment: s.segment,
                k_index: s.index,
                k: s.k.0,
                omega: sol.modes.iter().map(|m| [m.omega.re, m.omega.im]).collect(),
                classification: c,
            })
            .collect(),
        connections: &bs.connections,
    };
    out.write_json("bands.json", &json)?;
    if let Some(v) = a.refine {
        let samples = path.refinement(v, a.refine_points, a.refine_fraction);
        if samples.is_empty() {
            return Err(Error::Config(format!("vertex {} is not on the path", v.name())));
        }
        let fine = solve_path(&ctx.config, &samples, a.bands)?;
        let fine_classes = classify_all(&fine.solutions)?;
        out.write(&format!("refine_{}.csv", v.name()), bands_csv(&fine, &fine_classes).as_bytes())?;
    }
    let files = out.files().len();
    out.finish("bands", &ctx.arguments, &ctx.config)?;
    ctx.say(&format!("wrote {} files and manifest.json to {}\n", files, root.display()));
    Ok(())
}

fn cmd_classify(ctx: &Context, a: &ClassifyArgs) -> Result<()> {
    let k = parse_bloch(&a.k)?;
    let mut opts = ClassifyOptions::default();
    if let Some(w) = &a.window {
        opts.window = Some(parse_window(w)?);
    }
    let sol = solve(&ctx.config, k, &SolveOptions::bands(a.bands))?;
    let class = classify_solution(&sol, &opts)?;
    let mut quartets = Vec::new();
    if let Some(p) = k.high_symmetry_point() {
        let group = LittleGroup::at(p);
        for b in class.quartets() {
            let modes: Vec<_> = b.modes.iter().map(|&i| &sol.modes[i]).collect();
            quartets.push((b.modes.clone(), verify_quartet_structure(&modes, &group)?));
        }
    }
    ctx.say(&render_classification(&class, &quartets));
    if let Some(root) = &ctx.out {
        #[derive(Serialize)]
        struct Report<'a> {
            classification: &'a Classification,
            quartets: Vec<&'a QuartetReport>,
        }
        let mut out = OutputDir::create(root)?;
        out.write_json(
            "classify.json",
            &Report { classification: &class, quartets: quartets.iter().map(|q| &q.1).collect() },
        )?;
        out.finish("classify", &ctx.arguments, &ctx.config)?;
    }
    Ok(())
}

fn cmd_tables(ctx: &Context, a: &TablesArgs) -> Result<()> {
    let (point, with_coreps) = match (&a.group, a.k) {
        (Some(_), Some(_)) => return Err(Error::Config("give either a group name or --k, not both".into())),
        (Some(g), None) => (point_for_group(g)?, false),
        (None, Some(k)) => (k, true),
        (None, None) => return Err(Error::Config("give a group name (c4v, d2h, d4h) or --k".into())),
    };
    let report = table_report(point, with_coreps)?;
    ctx.say(&render_table(&report));
    if let Some(root) = &ctx.out {
        let mut out = OutputDir::create(root)?;
        out.write_json(&format!("tables_{}.json", point.name()), &report)?;
        out.finish("tables", &ctx.arguments, &ctx.config)?;
    }
    Ok(())
}

fn cmd_sweep_ni(ctx: &Context, a: &SweepArgs) -> Result<()> {
    if a.ni.is_empty() {
        return Err(Error::Config("the n_i list is empty".into()));
    }
    if let Some(bad) = a.ni.iter().find(|v| !(v.is_finite() && **v >= 0.0)) {
        return Err(Error::Config(format!("n_i must be finite and non-negative, got {bad}")));
    }
    let bands = parse_pair(&a.bands)?;
    let k = a.k.bloch();
    let start = match (&a.from, a.k) {
        (Some(s), _) => Some(parse_bloch(s)?),
        (None, HighSymmetryPoint::Gamma) => None,
        (None, _) => Some(BlochVector::new(0.9 * k.x(), 0.9 * k.y())),
    };
    let rows =
        a.ni.par_iter()
            .map(|&ni| -> Result<String> {
                let cfg = ctx.config.with_ni(ni);
                cfg.validate()?;
                let w = frequencies(&cfg, k, Some(bands.0.max(bands.1) + 1))?;
                let ep = match start {
                    Some(s) => match locate_exceptional_point(&cfg, bands, s, k, EP_TOL_K) {
                        Ok(ep) => Some(ep),
                        Err(Error::NoSignChange(_)) => None,
                        Err(e) => return Err(e),
                    },
                    None => None,
                };
                let (kx, ky, dist) = ep.map_or((String::new(), String::new(), String::new()), |e| {
                    (fmt_f64(e.k_star.x()), fmt_f64(e.k_star.y()), fmt_f64(e.distance_to_end))
                });
                let (wa, wb) = (w[bands.0], w[bands.1]);
                Ok(format!(
                    "{},{},{},{},{},{},{},{},{}\n",
                    fmt_f64(ni),
                    fmt_f64(wa.re),
                    fmt_f64(wa.im),
                    fmt_f64(wb.re),
                    fmt_f64(wb.im),
                    fmt_f64(wa.im.abs().max(wb.im.abs())),
                    kx,
                    ky,
                    dist
                ))
            })
            .collect::<Result<Vec<_>>>()?;
    let mut csv =
        String::from("n_i,re_omega_a,im_omega_a,re_omega_b,im_omega_b,max_abs_im,k_star_x,k_star_y,k_star_distance\n");
    rows.iter().for_each(|r| csv.push_str(r));
    ctx.say(&csv);
    if let Some(root) = &ctx.out {
        let mut out = OutputDir::create(root)?;
        out.write(&format!("sweep_ni_{}.csv", a.k.name()), csv.as_bytes())?;
        out.finish("sweep-ni", &ctx.arguments, &ctx.config)?;
    }
    Ok(())
}

fn cmd_dw_test(ctx: &Context, a: &DwArgs) -> Result<()> {
    let points = a.k.map_or(HighSymmetryPoint::ALL.to_vec(), |p| vec![p]);
    let mut reports = Vec::new();
    let mut text = String::new();
    for p in points {
        let group = LittleGroup::at(p);
        let table = CharacterTable::for_group(&group)?;
        let _ = writeln!(text, "{} ({}), order {}", p.name(), table.group_name, group.order());
        let _ = writeln!(
            text,
            "  squared antiunitary: ({})",
            group.squared_antiunitary().into_iter().map(|i| group.label(i)).collect::<Vec<_>>().join(", ")
        );
        for ir in &table.irreps {
            let chars = ir.characters();
            let sum = group.dimmock_wheeler_sum(&chars);
            let ty = group.dimmock_wheeler(&chars)?;
            let _ = writeln!(
                text,
                "  {:<5} sum {:>4} -> ({}){}",
                ir.name,
                fmt_char(sum),
                ty,
                if ir.physical { "" } else { "  not admissible" }
            );
            reports.push((p.name(), ir.name, sum.re, ty, ir.physical));
        }
    }
    ctx.say(&text);
    if let Some(root) = &ctx.out {
        #[derive(Serialize)]
        struct Row {
            point: &'static str,
            irrep: &'static str,
            sum: f64,
            corep_type: CorepType,
            admissible: bool,
        }
        let rows: Vec<Row> = reports
            .into_iter()
            .map(|(point, irrep, sum, corep_type, admissible)| Row { point, irrep, sum, corep_type, admissible })
            .collect();
        let mut out = OutputDir::create(root)?;
        out.write_json("dw_test.json", &rows)?;
        out.finish("dw-test", &ctx.arguments, &ctx.config)?;
    }
    Ok(())
}

/// Runs a parsed command line.
pub fn run(cli: Cli, arguments: Vec<String>) -> Result<()> {
    let config = match &cli.config {
        Some(p) => LatticeConfig::from_json_file(p)?,
        None => LatticeConfig::default(),
    };
    config.validate()?;
    if cli.threads > 0 {
        // A second call in the same process keeps the existing pool.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global();
    }
    let ctx = Context { config, out: cli.out, quiet: cli.quiet, arguments };
    match &cli.command {
        Command::Bands(a) => cmd_bands(&ctx, a),
        Command::Classify(a) => cmd_classify(&ctx, a),
        Command::Tables(a) => cmd_tables(&ctx, a),
        Command::SweepNi(a) => cmd_sweep_ni(&ctx, a),
        Command::DwTest(a) => cmd_dw_test(&ctx, a),
    }
}

/// Parses `args` (including the program name), runs, and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let arguments = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    match run(cli, arguments) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn argument_parsing() {
        assert_eq!(parse_window("0.45:0.55").unwrap(), (0.45, 0.55));
        assert!(parse_window("0.5").is_err());
        assert_eq!(parse_pair("0,1").unwrap(), (0, 1));
        assert!(parse_pair("1,1").is_err());
        assert_eq!(point_for_group("D4h").unwrap(), HighSymmetryPoint::M);
        assert!(point_for_group("c6v").is_err());
    }

    #[test]
    fn usage_errors_exit_with_two() {
        assert_eq!(main_with_args(["ptbands", "frobnicate"]), 2);
        assert_eq!(main_with_args(["ptbands", "--quiet", "tables", "c6v"]), 2);
        assert_eq!(main_with_args(["ptbands", "--quiet", "sweep-ni", "--ni", ""]), 2);
        assert_eq!(main_with_args(["ptbands", "--quiet", "tables", "c4v"]), 0);
    }
}
