//! Command-line entry point wiring wall data, mirror assembly,
//! specialization and the elliptic checks into one binary.

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use cli::output::{
    rational_string, render_json, series_report, series_to_csv, tagged_report, write_artifact,
    Provenance,
};
use cli::{CliError, RunConfig};
use elliptic::{
    pencil_j_invariant, symmetric_locus_bridge, theta, Complex, SymmetricLocusSeries,
};
use gw_counts::{
    bryan_leung_series, certify_i_function, extract_curve_count, goldilocks_zone, i_function,
    mirror_map, relative_bisection_count, stirling_radius, to_wall_counts,
};
use mirror_engine::{
    assemble_equations, project_to_boundary_lattice, specialize_symmetric,
    theta_product_coefficients, OutputName, WallTable,
};
use qseries::{QSeries, Q};
use serde_json::json;

#[derive(Parser)]
#[command(name = "i4mirror", version, about = "Mirror family pipeline for a rational elliptic surface with a cycle of four boundary curves")]
struct Cli {
    /// Flat key = value configuration file; flags override file values.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output directory for artifacts.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Emit JSON artifacts.
    #[arg(long, global = true)]
    json: bool,
    /// Emit CSV artifacts.
    #[arg(long, global = true)]
    csv: bool,
    /// Emit SVG artifacts.
    #[arg(long, global = true)]
    svg: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate the piecewise-linear potential at integral points.
    Phi {
        /// Largest |k| to tabulate.
        #[arg(long, default_value_t = 8)]
        max_ray: i64,
    },
    /// Produce the wall table from the section series and the bisection count.
    Walls {
        /// Order of the section-count series.
        #[arg(long)]
        order: Option<i64>,
        /// Largest fibre-step multiplicity to emit.
        #[arg(long, default_value_t = 2)]
        fibre_steps: u32,
    },
    /// Assemble the mirror equations from the wall table.
    MirrorEqs {
        /// Truncation grade of the assembled series.
        #[arg(long)]
        truncation: Option<i64>,
    },
    /// Build the hypergeometric table and its growth certificate.
    IFunction {
        /// Total class grade of the table.
        #[arg(long)]
        grade: Option<u32>,
    },
    /// Extract one curve count through the change of variables.
    JCoeffs {
        /// Curve class as four comma-separated nonnegative integers.
        #[arg(long)]
        class: String,
    },
    /// Enumerate low-degree section classes.
    Sections {
        /// Section degree.
        #[arg(long, default_value_t = 0)]
        degree: i64,
    },
    /// Print the section-count series coefficients.
    BryanLeung {
        /// Highest order to print.
        #[arg(long)]
        order: Option<i64>,
    },
    /// Elliptic fibre checks.
    Elliptic {
        #[command(subcommand)]
        check: EllipticCommand,
    },
    /// Run the full acceptance suite.
    Verify {
        /// Use desk-scale orders.
        #[arg(long)]
        quick: bool,
    },
}

#[derive(Subcommand)]
enum EllipticCommand {
    /// Compare the two j-invariant computation paths.
    JCheck,
    /// Evaluate the theta values at a point of the upper half plane.
    Theta {
        /// Point as `a+bi`.
        #[arg(long)]
        rho: String,
        /// Tail tolerance.
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
    /// Compare the specialized mirror series with the theta values.
    Bridge {
        /// Truncation grade of the specialized series.
        #[arg(long)]
        order: Option<i64>,
        /// Point as `a+bi`.
        #[arg(long, default_value = "0+3i")]
        rho: String,
    },
}

fn parse_class(text: &str) -> Result<[u32; 4], CliError> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 4 {
        return Err(CliError::Usage(format!(
            "class must have four components, got {text}"
        )));
    }
    let mut class = [0u32; 4];
    for (slot, part) in class.iter_mut().zip(&parts) {
        *slot = part
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("invalid class component: {part}")))?;
    }
    Ok(class)
}

fn parse_point(text: &str) -> Result<Complex, CliError> {
    let bad = || CliError::Usage(format!("invalid point {text}, expected a+bi"));
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let Some(body) = s.strip_suffix('i') else {
        let re: f64 = s.parse().map_err(|_| bad())?;
        return Ok(Complex::from_f64(re, 0.0));
    };
    let split = body
        .char_indices()
        .skip(1)
        .find(|(_, c)| *c == '+' || *c == '-')
        .map(|(i, _)| i);
    let (re, im) = match split {
        Some(i) => {
            let re: f64 = body[..i].parse().map_err(|_| bad())?;
            let imtext = &body[i..];
            let im: f64 = match imtext {
                "+" => 1.0,
                "-" => -1.0,
                _ => imtext.parse().map_err(|_| bad())?,
            };
            (re, im)
        }
        None => {
            let im: f64 = match body {
                "" | "+" => 1.0,
                "-" => -1.0,
                _ => body.parse().map_err(|_| bad())?,
            };
            (0.0, im)
        }
    };
    Ok(Complex::from_f64(re, im))
}

fn derived_bisection_count() -> Result<Q, CliError> {
    let table = i_function(3);
    let map = mirror_map(&table).map_err(|e| CliError::Internal(e.to_string()))?;
    let threefold = extract_curve_count(&map.j, &[0, 2, 0, 1])
        .map_err(|e| CliError::Internal(e.to_string()))?;
    Ok(relative_bisection_count(&threefold))
}

fn wall_table(config: &RunConfig, order: Option<i64>, fibre_steps: u32) -> Result<WallTable, CliError> {
    let order = order.unwrap_or(config.section_order);
    let series = bryan_leung_series(order).map_err(|e| CliError::Usage(e.to_string()))?;
    let bisection = derived_bisection_count()?;
    to_wall_counts(&series, fibre_steps, &bisection).map_err(|e| CliError::Usage(e.to_string()))
}

fn symmetric_locus(truncation: i64) -> Result<SymmetricLocusSeries, CliError> {
    let internal = |e: mirror_engine::EngineError| CliError::Internal(e.to_string());
    let walls = WallTable::empty();
    let product = theta_product_coefficients(0, 2, &walls, truncation, 0).map_err(internal)?;
    let odd = specialize_symmetric(
        &project_to_boundary_lattice(&product.coefficient(OutputName::TwoD(2), truncation))
            .map_err(internal)?,
    )
    .map_err(internal)?;
    let eqs = assemble_equations(&walls, truncation).map_err(internal)?;
    let one = QSeries::one(mirror_engine::v_lattice(), truncation);
    let diagonal = one
        .add(
            &specialize_symmetric(
                &project_to_boundary_lattice(&eqs.r(1, OutputName::TwoD(1))).map_err(internal)?,
            )
            .map_err(internal)?,
        )
        .map_err(|e| CliError::Internal(e.to_string()))?;
    let cross = specialize_symmetric(
        &project_to_boundary_lattice(&eqs.r(1, OutputName::TwoD(3))).map_err(internal)?,
    )
    .map_err(internal)?;
    Ok(SymmetricLocusSeries {
        odd,
        diagonal,
        cross,
    })
}

fn output_label(name: OutputName) -> String {
    match name {
        OutputName::TwoD(i) => format!("2D{i}"),
        OutputName::OneD(i) => format!("D{i}"),
        OutputName::Constant => "constant".into(),
    }
}

fn all_outputs() -> Vec<OutputName> {
    let mut names = Vec::new();
    for i in 1..=4 {
        names.push(OutputName::TwoD(i));
    }
    for i in 1..=4 {
        names.push(OutputName::OneD(i));
    }
    names.push(OutputName::Constant);
    names
}

fn run_phi(config: &RunConfig, max_ray: i64) -> Result<(), CliError> {
    if max_ray < 1 {
        return Err(CliError::Usage("max ray must be positive".into()));
    }
    let mut entries = Vec::new();
    for k in -max_ray..=max_ray {
        let value = affine_base::phi(&affine_base::UCoverPoint::integral(k));
        let coeffs = value
            .integer_coeffs()
            .ok_or_else(|| CliError::Internal(format!("non-integer potential at {k}")))?;
        println!(
            "phi({k}) = {}D1 + {}D2 + {}D3 + {}D4",
            coeffs[0], coeffs[1], coeffs[2], coeffs[3]
        );
        entries.push(json!({ "k": k, "coefficients": coeffs }));
    }
    if let Some(out) = &config.out {
        if config.emit_json {
            let report = tagged_report(
                "piecewise-linear potential",
                Provenance::Derived,
                json!({ "entries": entries }),
            );
            write_artifact(out, "phi.json", &render_json(&report))?;
        }
        if config.emit_svg {
            write_artifact(out, "phi.svg", &affine_base::svg_figure(max_ray))?;
        }
    }
    Ok(())
}

fn wall_json(table: &WallTable) -> serde_json::Value {
    let t1: Vec<_> = (0..4)
        .flat_map(|r| table.tangency1_at(r))
        .map(|w| {
            json!({
                "ray_residue": w.ray_residue,
                "section": w.section,
                "fibre_steps": w.fibre_steps,
                "count": rational_string(&w.count),
            })
        })
        .collect();
    let t2: Vec<_> = [0i64, 2, 4, 6]
        .iter()
        .flat_map(|&u| table.tangency2_at(u))
        .map(|w| {
            json!({
                "ray_residue": w.ray_residue,
                "section": w.section,
                "fibre_steps": w.fibre_steps,
                "count": rational_string(&w.count),
            })
        })
        .collect();
    json!({ "tangency1": t1, "tangency2": t2 })
}

fn run_walls(config: &RunConfig, order: Option<i64>, fibre_steps: u32) -> Result<(), CliError> {
    let table = wall_table(config, order, fibre_steps)?;
    let body = wall_json(&table);
    println!(
        "tangency-1 walls: {}",
        body["tangency1"].as_array().map_or(0, |a| a.len())
    );
    println!(
        "tangency-2 walls: {} (count {} each)",
        body["tangency2"].as_array().map_or(0, |a| a.len()),
        table
            .tangency2_at(0)
            .next()
            .map_or_else(|| "-".into(), |w| rational_string(&w.count)),
    );
    if let Some(out) = &config.out {
        if config.emit_json {
            let report = tagged_report("wall table", Provenance::Derived, body);
            write_artifact(out, "walls.json", &render_json(&report))?;
        }
    }
    Ok(())
}

fn run_mirror_eqs(config: &RunConfig, truncation: Option<i64>) -> Result<(), CliError> {
    let truncation = truncation.unwrap_or(config.mirror_truncation);
    let table = wall_table(config, None, 2)?;
    let eqs = assemble_equations(&table, truncation)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let names = all_outputs();
    println!(
        "assembled {} structure-constant outputs at truncation {truncation}",
        names.len()
    );
    if let Some(out) = &config.out {
        for name in names {
            let label = output_label(name);
            let f = eqs.f(name);
            let g = eqs.g(name);
            if config.emit_json {
                let report = tagged_report(
                    &format!("mirror equation coefficient {label}"),
                    Provenance::Derived,
                    json!({
                        "f": qseries::series_to_json(&f),
                        "g": qseries::series_to_json(&g),
                    }),
                );
                write_artifact(out, &format!("mirror-eq-{label}.json"), &render_json(&report))?;
            }
            if config.emit_csv {
                write_artifact(out, &format!("mirror-eq-{label}-f.csv"), &series_to_csv(&f))?;
                write_artifact(out, &format!("mirror-eq-{label}-g.csv"), &series_to_csv(&g))?;
            }
        }
    }
    Ok(())
}

fn run_i_function(config: &RunConfig, grade: Option<u32>) -> Result<(), CliError> {
    let grade = grade.unwrap_or(config.i_grade);
    let table = i_function(grade);
    let report = certify_i_function(&table);
    println!(
        "grade {grade}: {} coefficients checked against |a_v| <= r^diag(v), r = {}",
        report.checked,
        rational_string(&stirling_radius())
    );
    println!(
        "certificate: {} (empirical minimal r ~ {:.3e})",
        if report.pass { "pass" } else { "FAIL" },
        report.empirical_minimal_r
    );
    if let Some(out) = &config.out {
        if config.emit_json {
            let body = json!({
                "grade": grade,
                "checked": report.checked,
                "pass": report.pass,
                "radius": rational_string(&stirling_radius()),
                "empirical_minimal_r": report.empirical_minimal_r,
            });
            let value = tagged_report("coefficient growth certificate", Provenance::Derived, body);
            write_artifact(out, "i-function.json", &render_json(&value))?;
        }
    }
    if !report.pass {
        return Err(CliError::Verification(
            "coefficient growth certificate failed".into(),
        ));
    }
    Ok(())
}

fn run_j_coeffs(config: &RunConfig, class_text: &str) -> Result<(), CliError> {
    let class = parse_class(class_text)?;
    let grade: u32 = class.iter().sum();
    if grade > 6 {
        return Err(CliError::Usage(format!(
            "class grade {grade} exceeds the supported table grade 6"
        )));
    }
    let table = i_function(grade.max(1));
    let map = mirror_map(&table).map_err(|e| CliError::Internal(e.to_string()))?;
    let count =
        extract_curve_count(&map.j, &class).map_err(|e| CliError::Usage(e.to_string()))?;
    println!("{}", rational_string(&count));
    if let Some(out) = &config.out {
        if config.emit_json {
            let body = json!({ "class": class, "count": rational_string(&count) });
            let value = tagged_report("curve count", Provenance::Derived, body);
            write_artifact(out, "j-coeffs.json", &render_json(&value))?;
        }
    }
    Ok(())
}

fn run_sections(config: &RunConfig, degree: i64) -> Result<(), CliError> {
    if degree < 0 {
        return Err(CliError::Usage("degree must be nonnegative".into()));
    }
    let classes = goldilocks_zone(degree);
    println!("{} section classes at degree {degree}", classes.len());
    if let Some(out) = &config.out {
        if config.emit_json {
            let entries: Vec<_> = classes
                .iter()
                .map(|c| json!({ "d": c.d, "a": c.a }))
                .collect();
            let body = json!({ "degree": degree, "classes": entries });
            let value = tagged_report("section classes", Provenance::Derived, body);
            write_artifact(out, "sections.json", &render_json(&value))?;
        }
    }
    Ok(())
}

fn run_bryan_leung(config: &RunConfig, order: Option<i64>) -> Result<(), CliError> {
    let order = order.unwrap_or(config.section_order);
    let series = bryan_leung_series(order).map_err(|e| CliError::Usage(e.to_string()))?;
    for m in 0..=order {
        println!("{}", rational_string(&series.coeff(&[m])));
    }
    if let Some(out) = &config.out {
        if config.emit_json {
            let value = series_report("section-count series", Provenance::Derived, &series);
            write_artifact(out, "bryan-leung.json", &render_json(&value))?;
        }
        if config.emit_csv {
            write_artifact(out, "bryan-leung.csv", &series_to_csv(&series))?;
        }
    }
    Ok(())
}

fn run_j_check(config: &RunConfig) -> Result<(), CliError> {
    let j = pencil_j_invariant().map_err(|e| CliError::Verification(e.to_string()))?;
    println!("both j-invariant paths agree as reduced rational functions");
    println!(
        "numerator degree {}, denominator degree {}",
        j.num().degree().unwrap_or(0),
        j.den().degree().unwrap_or(0)
    );
    if let Some(out) = &config.out {
        if config.emit_json {
            let poly_json = |p: &elliptic::Poly| -> Vec<String> {
                p.coeffs().iter().map(rational_string).collect()
            };
            let body = json!({
                "agree": true,
                "numerator": poly_json(j.num()),
                "denominator": poly_json(j.den()),
            });
            let value = tagged_report("pencil j-invariant", Provenance::Derived, body);
            write_artifact(out, "j-check.json", &render_json(&value))?;
        }
    }
    Ok(())
}

fn run_theta(config: &RunConfig, rho_text: &str, tol: f64) -> Result<(), CliError> {
    let rho = parse_point(rho_text)?;
    let mut values = Vec::new();
    for kind in 2u8..=4 {
        let v = theta(kind, &rho, tol).map_err(|e| CliError::Usage(e.to_string()))?;
        println!("|theta{kind}| = {}", v.value.modulus());
        values.push(json!({
            "kind": kind,
            "modulus": v.value.modulus().to_string(),
            "tail_bound": v.tail_bound.to_string(),
        }));
    }
    if let Some(out) = &config.out {
        if config.emit_json {
            let body = json!({ "rho": rho_text, "tolerance": tol, "values": values });
            let value = tagged_report("theta values", Provenance::Derived, body);
            write_artifact(out, "theta.json", &render_json(&value))?;
        }
    }
    Ok(())
}

fn run_bridge(config: &RunConfig, order: Option<i64>, rho_text: &str) -> Result<(), CliError> {
    let order = order.unwrap_or(config.bridge_order);
    let rho = parse_point(rho_text)?;
    let series = symmetric_locus(order)?;
    let report = symmetric_locus_bridge(&series, &rho, config.theta_tol)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let mut all_pass = true;
    let mut checks = Vec::new();
    for check in &report.checks {
        let pass = check.residual_below(1e-8);
        all_pass &= pass;
        println!(
            "{}: residual {} [{}]",
            check.name,
            check.residual,
            if pass { "pass" } else { "FAIL" }
        );
        checks.push(json!({
            "identity": check.name,
            "residual": check.residual.to_string(),
            "ratio_to_theta": format!("{} + {}i", check.ratio.re, check.ratio.im),
            "convention": Provenance::MeasuredConvention.label(),
            "pass": pass,
        }));
    }
    if let Some(out) = &config.out {
        if config.emit_json {
            let body = json!({ "rho": rho_text, "order": order, "checks": checks });
            let value = tagged_report("symmetric-locus bridge", Provenance::MeasuredConvention, body);
            write_artifact(out, "bridge.json", &render_json(&value))?;
        }
    }
    if !all_pass {
        return Err(CliError::Verification("bridge residual above 1e-8".into()));
    }
    Ok(())
}

fn run_verify(config: &RunConfig, quick: bool) -> Result<(), CliError> {
    let results = cli::run_all(quick);
    let mut entries = Vec::new();
    let mut failures = 0;
    for r in &results {
        println!("[{}] {}: {}", if r.pass { "PASS" } else { "FAIL" }, r.name, r.detail);
        if !r.pass {
            failures += 1;
        }
        entries.push(json!({ "criterion": r.name, "pass": r.pass, "detail": r.detail }));
    }
    if let Some(out) = &config.out {
        if config.emit_json {
            let body = json!({ "quick": quick, "results": entries });
            let value = tagged_report("acceptance suite", Provenance::Derived, body);
            write_artifact(out, "verify.json", &render_json(&value))?;
        }
    }
    if failures > 0 {
        return Err(CliError::Verification(format!(
            "{failures} acceptance criteria failed"
        )));
    }
    Ok(())
}

fn run(cli_args: Cli) -> Result<(), CliError> {
    let mut config = match &cli_args.config {
        Some(path) => RunConfig::from_file(path)?,
        None => RunConfig::default(),
    };
    if cli_args.out.is_some() {
        config.out = cli_args.out.clone();
    }
    if cli_args.json {
        config.emit_json = true;
    }
    if cli_args.csv {
        config.emit_csv = true;
    }
    if cli_args.svg {
        config.emit_svg = true;
    }
    match cli_args.command {
        Command::Phi { max_ray } => run_phi(&config, max_ray),
        Command::Walls { order, fibre_steps } => run_walls(&config, order, fibre_steps),
        Command::MirrorEqs { truncation } => run_mirror_eqs(&config, truncation),
        Command::IFunction { grade } => run_i_function(&config, grade),
        Command::JCoeffs { class } => run_j_coeffs(&config, &class),
        Command::Sections { degree } => run_sections(&config, degree),
        Command::BryanLeung { order } => run_bryan_leung(&config, order),
        Command::Elliptic { check } => match check {
            EllipticCommand::JCheck => run_j_check(&config),
            EllipticCommand::Theta { rho, tol } => run_theta(&config, &rho, tol),
            EllipticCommand::Bridge { order, rho } => run_bridge(&config, order, &rho),
        },
        Command::Verify { quick } => run_verify(&config, quick),
    }
}

fn main() {
    let cli_args = Cli::parse();
    if let Err(e) = run(cli_args) {
        eprintln!("{e}");
        std::process::exit(e.exit_code());
    }
}
