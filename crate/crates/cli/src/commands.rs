use std::f64::consts::PI;
use std::path::{Path, PathBuf};

use punctured_plane::angular::{AngularSector, Channel, Theta};
use punctured_plane::extensions::{
    apply_time_reversal, classify_channel, global_deficiency, time_reversal_admissible,
    ExtensionParams, PhysicalConfig,
};
use punctured_plane::oracle::{self, integrate_interval, QuadratureConfig, Scope, VerifyOptions};
use punctured_plane::spectrum::{
    angular_momentum_of_state, bound_states, bound_wavefunction, count_bound_states,
    effective_potential, energy_m0, energy_m_minus1, energy_theta0, radial_density,
    spectrum_half_t, BoundState,
};
use punctured_plane::Error;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::error::CliError;
use crate::output::{
    atomic_write, json_bytes, resolve_path, table_document, Cell, Column, Format, Table,
};
use crate::parse::parse_angle;
use crate::{
    ClassifyArgs, DensityArgs, ExportArgs, ExtArgs, OutArgs, PhysArgs, ScanArgs, SpectrumArgs,
    VerifyArgs,
};

pub enum Status {
    Ok,
    VerificationFailed,
}

/// Everything that determines a spectrum; what `export` writes and `--input` reads back.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub physical: PhysicalConfig,
    pub theta: Theta,
    pub params: ExtensionParams,
}

fn physical(p: &PhysArgs) -> Result<PhysicalConfig, CliError> {
    Ok(PhysicalConfig::new(p.hbar, p.mass, p.kappa)?)
}

fn theta_arg(theta: Option<&str>) -> Result<Theta, CliError> {
    let text = theta.ok_or_else(|| CliError::Usage("--theta is required".into()))?;
    Ok(Theta::parse(text)?)
}

fn angle_arg(name: &str, text: Option<&str>) -> Result<Option<f64>, CliError> {
    text.map(parse_angle)
        .transpose()
        .map_err(|e| CliError::Usage(format!("--{name}: {e}")))
}

/// Builds the extension parameters from `--eta`, `--rho` and `--time-reversal`.
fn extension(ext: &ExtArgs, theta: Theta) -> Result<ExtensionParams, CliError> {
    let sector = AngularSector::untwisted(theta);
    let eta = angle_arg("eta", ext.eta.as_deref())?;
    let rho = angle_arg("rho", ext.rho.as_deref())?;
    if ext.time_reversal && !time_reversal_admissible(&sector) {
        return Err(Error::InadmissibleSector(theta.value()).into());
    }
    let params = if theta.is_zero() {
        if rho.is_some() {
            return Err(Error::VariantMismatch("--rho given for theta = 0".into()).into());
        }
        ExtensionParams::Theta0 {
            eta: eta.ok_or_else(|| CliError::Usage("--eta is required".into()))?,
        }
    } else if ext.time_reversal {
        match (rho, eta) {
            (Some(rho), Some(eta)) => {
                apply_time_reversal(&sector, ExtensionParams::ThetaGeneral { rho, eta })?
            }
            (None, Some(eta)) | (Some(eta), None) => ExtensionParams::TimeReversalHalf { eta },
            (None, None) => return Err(CliError::Usage("--eta is required".into())),
        }
    } else {
        match (rho, eta) {
            (Some(rho), Some(eta)) => ExtensionParams::ThetaGeneral { rho, eta },
            _ => {
                return Err(CliError::Usage(
                    "both --rho and --eta are required for theta in (0,1)".into(),
                ))
            }
        }
    };
    params.validate_for(&sector)?;
    Ok(params)
}

fn run_config(ext: &ExtArgs, phys: &PhysArgs) -> Result<RunConfig, CliError> {
    let theta = theta_arg(ext.theta.as_deref())?;
    Ok(RunConfig {
        physical: physical(phys)?,
        theta,
        params: extension(ext, theta)?,
    })
}

fn read_input(path: &Path) -> Result<RunConfig, CliError> {
    let text = std::fs::read_to_string(path)?;
    let doc: Value = serde_json::from_str(&text)?;
    let config = doc
        .get("config")
        .cloned()
        .ok_or_else(|| CliError::Usage(format!("{} has no config", path.display())))?;
    let config: RunConfig = serde_json::from_value(config)
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    config.physical.validate()?;
    config
        .params
        .validate_for(&AngularSector::untwisted(config.theta))?;
    Ok(config)
}

fn write_doc(
    out: &OutArgs,
    command: &str,
    config: &impl Serialize,
    table: &Table,
    extra: Map<String, Value>,
    default: Format,
) -> Result<PathBuf, CliError> {
    let format = out.format.unwrap_or(default);
    let path = resolve_path(out.out.as_deref(), command, config, format)?;
    let bytes = match format {
        Format::Csv => table.to_csv()?,
        Format::Json => json_bytes(&table_document(command, config, table, extra)?)?,
    };
    atomic_write(&path, &bytes)?;
    Ok(path)
}

fn wants_file(out: &OutArgs) -> bool {
    out.out.is_some() || out.format.is_some()
}

// ---------------------------------------------------------------- classify

pub fn classify(args: &ClassifyArgs) -> Result<Status, CliError> {
    let theta = Theta::parse(&args.theta)?;
    let sector = AngularSector::untwisted(theta);
    let cfg = physical(&args.phys)?;
    let ms: Vec<i64> = match args.m {
        Some(m) => vec![m],
        None => (-3..=3).collect(),
    };
    let global = global_deficiency(&sector);
    let mut rows = Vec::new();
    println!(
        "theta = {theta}: global deficiency indices ({}, {})",
        global.n_plus, global.n_minus
    );
    println!(
        "{:>4} {:>8} {:>8} {:>14} {:>11}",
        "m", "nu", "indices", "(theta+m)^2-1/4", "potential"
    );
    for m in ms {
        let ch = Channel::new(sector, m);
        let idx = classify_channel(&ch);
        let pot = effective_potential(&ch, 1.0, &cfg)?;
        let sign = format!("{:?}", pot.sign).to_lowercase();
        println!(
            "{m:>4} {:>8.5} {:>8} {:>14.6} {:>11}",
            ch.nu(),
            format!("({},{})", idx.n_plus, idx.n_minus),
            pot.coefficient,
            sign
        );
        rows.push(vec![
            Cell::Int(m),
            Cell::Num(ch.nu()),
            Cell::Int(idx.n_plus.into()),
            Cell::Int(idx.n_minus.into()),
            Cell::Num(pot.coefficient),
            Cell::Text(sign),
        ]);
    }
    if wants_file(&args.out) {
        let table = Table {
            columns: vec![
                Column {
                    name: "m",
                    description: "channel index",
                },
                Column {
                    name: "nu",
                    description: "Bessel order |theta + m|",
                },
                Column {
                    name: "n_plus",
                    description: "deficiency index n+ of the channel",
                },
                Column {
                    name: "n_minus",
                    description: "deficiency index n- of the channel",
                },
                Column {
                    name: "potential_coefficient",
                    description: "(theta + m)^2 - 1/4",
                },
                Column {
                    name: "potential_sign",
                    description: "sign of the effective potential",
                },
            ],
            rows,
        };
        let config = json!({ "theta": theta, "m": args.m, "physical": cfg });
        let extra = Map::from_iter([("global".to_string(), json!(global))]);
        let path = write_doc(&args.out, "classify", &config, &table, extra, Format::Csv)?;
        println!("wrote {}", path.display());
    }
    Ok(Status::Ok)
}

// ---------------------------------------------------------------- spectrum

fn state_table(states: &[BoundState], cfg: &PhysicalConfig) -> Result<Table, CliError> {
    let mut rows = Vec::new();
    for s in states {
        let l = angular_momentum_of_state(s, cfg)?;
        rows.push(vec![
            Cell::Text(family_name(s)),
            Cell::Num(s.energy),
            Cell::Num(s.energy_over_kappa),
            Cell::Num(s.decay),
            Cell::Int(s.channel.m),
            s.partner.map_or(Cell::Missing, |p| Cell::Int(p.m)),
            Cell::Int(s.degeneracy.into()),
            Cell::Num(l[0]),
            l.get(1).map_or(Cell::Missing, |&x| Cell::Num(x)),
            Cell::Num(bound_wavefunction(s).norm_constant),
            Cell::Num(s.match_constant.re),
            Cell::Num(s.match_constant.im),
        ]);
    }
    Ok(Table {
        columns: vec![
            Column {
                name: "family",
                description: "closed form used for the level",
            },
            Column {
                name: "E",
                description: "energy E = -hbar^2 c^2 / 2M",
            },
            Column {
                name: "E_over_kappa",
                description: "E / kappa",
            },
            Column {
                name: "decay",
                description: "c = sqrt(2M|E|)/hbar",
            },
            Column {
                name: "m",
                description: "channel index",
            },
            Column {
                name: "partner_m",
                description: "second channel of a degenerate level",
            },
            Column {
                name: "degeneracy",
                description: "multiplicity of the level",
            },
            Column {
                name: "angular_momentum",
                description: "hbar (theta + m)",
            },
            Column {
                name: "partner_angular_momentum",
                description: "hbar (theta + partner_m)",
            },
            Column {
                name: "norm_constant",
                description: "N with N^2 = 2 c^2 sin(nu pi)/(pi nu), 2 c^2 at nu = 0",
            },
            Column {
                name: "match_re",
                description: "Re of the constant matching K_nu(cr) to the domain",
            },
            Column {
                name: "match_im",
                description: "Im of the matching constant",
            },
        ],
        rows,
    })
}

fn family_name(s: &BoundState) -> String {
    serde_json::to_value(s.family)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}

fn no_finite_level(config: &RunConfig) -> bool {
    matches!(config.params, ExtensionParams::Theta0 { eta } if (eta + PI).abs() <= punctured_plane::spectrum::SINGULAR_ETA_TOLERANCE)
}

pub fn spectrum(args: &SpectrumArgs) -> Result<Status, CliError> {
    let config = match &args.input {
        Some(p) => read_input(p)?,
        None => run_config(&args.ext, &args.phys)?,
    };
    let sector = AngularSector::untwisted(config.theta);
    let states = bound_states(&sector, &config.params, &config.physical)?;
    let count = count_bound_states(&sector, &config.params)?;
    println!(
        "theta = {}, {}",
        config.theta,
        describe_params(&config.params)
    );
    if no_finite_level(&config) {
        println!("no finite-energy bound state: eta = -pi removes the level to -infinity");
    }
    for s in &states {
        let l = angular_momentum_of_state(s, &config.physical)?;
        let channels = match s.partner {
            Some(p) => format!("m = {}, {}", s.channel.m, p.m),
            None => format!("m = {}", s.channel.m),
        };
        println!(
            "  E = {:.12e}  E/kappa = {:.12e}  {channels}  degeneracy {}  L = {:?}  N = {:.12e}",
            s.energy,
            s.energy_over_kappa,
            s.degeneracy,
            l,
            bound_wavefunction(s).norm_constant
        );
    }
    println!("bound states (with degeneracy): {count}");
    if wants_file(&args.out) {
        let table = state_table(&states, &config.physical)?;
        let extra = Map::from_iter([("count".to_string(), json!(count))]);
        let path = write_doc(&args.out, "spectrum", &config, &table, extra, Format::Csv)?;
        println!("wrote {}", path.display());
    }
    Ok(Status::Ok)
}

fn describe_params(p: &ExtensionParams) -> String {
    match *p {
        ExtensionParams::Theta0 { eta } => format!("eta = {eta}"),
        ExtensionParams::ThetaGeneral { rho, eta } => format!("rho = {rho}, eta = {eta}"),
        ExtensionParams::TimeReversalHalf { eta } => {
            format!("time-reversal invariant, rho = eta = {eta}")
        }
    }
}

// ---------------------------------------------------------------- scan

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ScanFamily {
    Theta0,
    M0,
    MMinus1,
    TimeReversalHalf,
}

#[derive(Debug, Serialize)]
struct ScanConfig {
    physical: PhysicalConfig,
    theta: Theta,
    family: ScanFamily,
    grid: Vec<f64>,
}

fn scan_family(theta: Theta, m: Option<i64>, time_reversal: bool) -> Result<ScanFamily, CliError> {
    let sector = AngularSector::untwisted(theta);
    if time_reversal && !time_reversal_admissible(&sector) {
        return Err(Error::InadmissibleSector(theta.value()).into());
    }
    if theta.is_zero() {
        return match m {
            None | Some(0) => Ok(ScanFamily::Theta0),
            Some(m) => Err(Error::NotDeficient { theta: 0.0, m }.into()),
        };
    }
    if time_reversal {
        return Ok(ScanFamily::TimeReversalHalf);
    }
    match m {
        Some(0) => Ok(ScanFamily::M0),
        Some(-1) => Ok(ScanFamily::MMinus1),
        Some(m) => Err(Error::NotDeficient {
            theta: theta.value(),
            m,
        }
        .into()),
        None => Err(CliError::Usage(
            "--m 0 or --m -1 selects the channel to scan for theta in (0,1)".into(),
        )),
    }
}

fn scan_grid(min: Option<f64>, max: Option<f64>, points: usize) -> Result<Vec<f64>, CliError> {
    if points == 0 {
        return Err(CliError::Usage("--points must be positive".into()));
    }
    match (min, max) {
        (None, None) => Ok((0..points)
            .map(|i| -PI + (i as f64 + 0.5) * 2.0 * PI / points as f64)
            .collect()),
        (lo, hi) => {
            let lo = lo.unwrap_or(-PI);
            let hi = hi.unwrap_or(PI);
            if !(lo >= -PI && hi < PI && (lo < hi || (lo == hi && points == 1))) {
                return Err(CliError::Usage(format!(
                    "scan range [{lo}, {hi}] must lie in [-pi, pi)"
                )));
            }
            if points == 1 {
                return Ok(vec![lo]);
            }
            let step = (hi - lo) / (points - 1) as f64;
            Ok((0..points)
                .map(|i| {
                    if i + 1 == points {
                        hi
                    } else {
                        lo + step * i as f64
                    }
                })
                .collect())
        }
    }
}

/// `(E/κ, exists)`; a level past the f64 range reads `-inf` at the lower window edge and `-0` at the upper.
fn scan_point(
    family: ScanFamily,
    theta: Theta,
    p: f64,
    cfg: &PhysicalConfig,
) -> Result<(Cell, bool), CliError> {
    let found = match family {
        ScanFamily::Theta0 => match energy_theta0(p, cfg) {
            Ok(s) => Ok(Some(s)),
            Err(Error::NoFiniteBoundState) => Ok(None),
            Err(e) => Err(e),
        },
        ScanFamily::M0 => energy_m0(theta, p, cfg),
        ScanFamily::MMinus1 => energy_m_minus1(theta, p, cfg),
        ScanFamily::TimeReversalHalf => spectrum_half_t(p, cfg),
    };
    match found {
        Ok(Some(s)) => Ok((Cell::Num(s.energy_over_kappa), true)),
        Ok(None) => Ok((Cell::Missing, false)),
        Err(Error::EnergyOverflow(_)) => Ok((
            Cell::Num(if p < 0.0 { f64::NEG_INFINITY } else { -0.0 }),
            true,
        )),
        Err(e) => Err(e.into()),
    }
}

pub fn scan(args: &ScanArgs) -> Result<Status, CliError> {
    let theta = theta_arg(args.theta.as_deref())?;
    let cfg = physical(&args.phys)?;
    let family = scan_family(theta, args.m, args.time_reversal)?;
    let grid = scan_grid(
        angle_arg("param-min", args.param_min.as_deref())?,
        angle_arg("param-max", args.param_max.as_deref())?,
        args.points,
    )?;
    let mut rows = Vec::with_capacity(grid.len());
    let mut found = 0usize;
    for &p in &grid {
        let (e, exists) = scan_point(family, theta, p, &cfg)?;
        found += usize::from(exists);
        rows.push(vec![Cell::Num(p), e, Cell::Bool(exists)]);
    }
    let table = Table {
        columns: vec![
            Column {
                name: "param",
                description: "extension phase (eta or rho) in radians",
            },
            Column {
                name: "E_over_kappa",
                description: "E / kappa of the level, empty when absent",
            },
            Column {
                name: "exists",
                description: "whether a bound state exists at this phase",
            },
        ],
        rows,
    };
    let config = ScanConfig {
        physical: cfg,
        theta,
        family,
        grid,
    };
    let path = write_doc(&args.out, "scan", &config, &table, Map::new(), Format::Csv)?;
    println!(
        "scanned {} points, {found} with a bound state; wrote {}",
        config.grid.len(),
        path.display()
    );
    Ok(Status::Ok)
}

// ---------------------------------------------------------------- density

#[derive(Debug, Serialize)]
struct DensityConfig {
    #[serde(flatten)]
    run: RunConfig,
    m: Option<i64>,
    r_min: f64,
    r_max: f64,
    points: usize,
}

pub fn density(args: &DensityArgs) -> Result<Status, CliError> {
    let run = run_config(&args.ext, &args.phys)?;
    if !(args.r_min > 0.0 && args.r_max > args.r_min && args.r_max.is_finite() && args.points >= 2)
    {
        return Err(CliError::Usage(
            "need 0 < r-min < r-max and at least 2 points".into(),
        ));
    }
    let states = bound_states(
        &AngularSector::untwisted(run.theta),
        &run.params,
        &run.physical,
    )?;
    let state = match args.m {
        Some(m) => states
            .iter()
            .find(|s| s.channel.m == m || s.partner.is_some_and(|p| p.m == m)),
        None => states.first(),
    }
    .ok_or_else(|| {
        CliError::Usage(format!(
            "no bound state for theta = {}, {}",
            run.theta,
            describe_params(&run.params)
        ))
    })?;
    let profile = bound_wavefunction(state);
    let step = (args.r_max - args.r_min) / (args.points - 1) as f64;
    let mut rows = Vec::with_capacity(args.points);
    for i in 0..args.points {
        let r = if i + 1 == args.points {
            args.r_max
        } else {
            args.r_min + step * i as f64
        };
        let psi = profile.evaluate(r)?;
        rows.push(vec![
            Cell::Num(r),
            Cell::Num(psi.re),
            Cell::Num(psi.im),
            Cell::Num(psi.norm_sqr()),
            Cell::Num(r * psi.norm_sqr()),
        ]);
    }
    let integral = integrate_interval(
        |r| radial_density(&profile, r).map(|w| w.into()),
        args.r_min,
        args.r_max,
        &QuadratureConfig::default(),
    )?;
    println!(
        "state E/kappa = {:.12e} (m = {}); integral of W2 over [{}, {}] = {:.12e} (error {:.1e})",
        state.energy_over_kappa,
        state.channel.m,
        args.r_min,
        args.r_max,
        integral.value.re,
        integral.error
    );
    let table = Table {
        columns: vec![
            Column {
                name: "r",
                description: "radius",
            },
            Column {
                name: "psi_re",
                description: "Re of the normalised radial factor",
            },
            Column {
                name: "psi_im",
                description: "Im of the normalised radial factor",
            },
            Column {
                name: "abs2",
                description: "|psi|^2",
            },
            Column {
                name: "W2",
                description: "r |psi|^2",
            },
        ],
        rows,
    };
    let config = DensityConfig {
        run,
        m: args.m,
        r_min: args.r_min,
        r_max: args.r_max,
        points: args.points,
    };
    let extra = Map::from_iter([
        ("state".to_string(), serde_json::to_value(state)?),
        (
            "W2_integral".to_string(),
            json!({ "value": integral.value.re, "error": integral.error }),
        ),
    ]);
    let path = write_doc(&args.out, "density", &config, &table, extra, Format::Csv)?;
    println!("wrote {}", path.display());
    Ok(Status::Ok)
}

// ---------------------------------------------------------------- verify

pub fn verify(args: &VerifyArgs) -> Result<Status, CliError> {
    let scope = Scope::parse(&args.scope)?;
    let options = VerifyOptions {
        config: physical(&args.phys)?,
        energy_fault: args.inject_energy_fault.unwrap_or(0.0),
    };
    let reports = oracle::suites::run(scope, &options);
    let mut all_passed = true;
    for report in &reports {
        println!("{}:", report.suite);
        for c in &report.checks {
            all_passed &= c.passed;
            println!(
                "  [{}] {} (measured {:.3e}, tolerance {:.1e}) {}",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.measured,
                c.tolerance,
                c.detail
            );
        }
    }
    println!(
        "{}",
        if all_passed {
            "all checks passed"
        } else {
            "verification FAILED"
        }
    );
    if wants_file(&args.out) {
        if args.out.format == Some(Format::Csv) {
            return Err(CliError::Usage("verify writes JSON reports only".into()));
        }
        let config = json!({ "scope": scope, "options": options });
        let mut doc = crate::output::envelope("verify", &config)?;
        doc.insert("passed".into(), json!(all_passed));
        doc.insert("suites".into(), serde_json::to_value(&reports)?);
        let path = resolve_path(args.out.out.as_deref(), "verify", &config, Format::Json)?;
        atomic_write(&path, &json_bytes(&Value::Object(doc))?)?;
        println!("wrote {}", path.display());
    }
    Ok(if all_passed {
        Status::Ok
    } else {
        Status::VerificationFailed
    })
}

// ---------------------------------------------------------------- export

/// The full run record; deterministic, so re-exporting its config reproduces it byte for byte.
pub fn export_record(config: &RunConfig) -> Result<Value, CliError> {
    let sector = AngularSector::untwisted(config.theta);
    let states = bound_states(&sector, &config.params, &config.physical)?;
    let count = count_bound_states(&sector, &config.params)?;
    let table = state_table(&states, &config.physical)?;
    let global = global_deficiency(&sector);
    let extra = Map::from_iter([
        ("deficiency".to_string(), json!(global)),
        ("count".to_string(), json!(count)),
        ("states".to_string(), serde_json::to_value(&states)?),
    ]);
    table_document("export", config, &table, extra)
}

pub fn export(args: &ExportArgs) -> Result<Status, CliError> {
    let config = match &args.input {
        Some(p) => read_input(p)?,
        None => run_config(&args.ext, &args.phys)?,
    };
    let doc = export_record(&config)?;
    let path = resolve_path(args.out.as_deref(), "export", &config, Format::Json)?;
    atomic_write(&path, &json_bytes(&doc)?)?;
    println!("wrote {}", path.display());
    Ok(Status::Ok)
}
