//! `zagreb`: edge-degree Zagreb indices, acene generation, closed-form audits
//! and TIM property prediction from the command line.
//!
//! Exit status is 0 on success, 1 on a domain error (invalid graph, ring
//! count out of range, bad dataset) and 2 on a usage error.

mod plot;
mod render;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use zagreb_core::acene::{acene_ehm_formula, acene_pair_class_histogram, LocationClasses};
use zagreb_core::qspr::{
    builtin_acene_dataset, builtin_dataset_flags, fit_property, predict, r_squared,
    reproduce_table, tim_coefficients,
};
use zagreb_core::{
    acene_graph, cartesian_product, index_report, join, verify_theorem, AceneSpec, Graph,
    IndexReport, Property, PropertyDataset, TableId, TheoremCase,
};

use crate::plot::ScatterPlot;

#[derive(Parser)]
#[command(name = "zagreb", version, about = "Edge hyper-Zagreb index toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum OpKind {
    Join,
    Product,
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoremArg {
    Join,
    Product,
    Acene,
}

#[derive(Subcommand)]
enum Command {
    /// Compute all eight indices of a graph in edge-list format.
    Index {
        /// Edge-list file, or `-` for stdin.
        #[arg(long, short)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Reject disconnected graphs.
        #[arg(long)]
        require_connected: bool,
    },
    /// Generate the linear acene with `n` rings and report on it.
    Acene {
        #[arg(short = 'n', long = "rings")]
        rings: usize,
        /// Emit the edge list.
        #[arg(long, group = "mode")]
        edges: bool,
        /// Full report: sizes, indices, pair classes, closed form (default).
        #[arg(long, group = "mode")]
        report: bool,
        /// Only the pair-class histogram.
        #[arg(long, group = "mode")]
        histogram: bool,
        /// Only the closed-form EHM value (n >= 2).
        #[arg(long, group = "mode")]
        formula: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Write to a file instead of stdout.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Build the join or Cartesian product of two graphs.
    Op {
        #[arg(value_enum)]
        kind: OpKind,
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Compare a closed-form EHM expression with the brute-force value.
    Verify {
        #[arg(long, value_enum)]
        theorem: TheoremArg,
        #[arg(long, required_unless_present = "rings")]
        left: Option<PathBuf>,
        #[arg(long, required_unless_present = "rings")]
        right: Option<PathBuf>,
        /// Ring count, for `--theorem acene`.
        #[arg(short = 'n', long = "rings", conflicts_with_all = ["left", "right"])]
        rings: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Least-squares fit of acene properties against EHM.
    Fit {
        /// One of hof, ge, eg, eea; all four when omitted.
        #[arg(long, value_parser = parse_property)]
        property: Option<Property>,
        /// Dataset CSV; the built-in reference data when omitted.
        #[arg(long)]
        data: Option<PathBuf>,
        /// Write a scatter plot with the fitted line (requires --property).
        #[arg(long, requires = "property")]
        plot: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Predict a property from EHM with the fixed TIM coefficients.
    Predict {
        #[arg(long, value_parser = parse_property)]
        property: Option<Property>,
        #[arg(long, required_unless_present = "rings", conflicts_with = "rings")]
        ehm: Option<u64>,
        /// Ring count; EHM is taken from the acene closed form.
        #[arg(short = 'n', long = "rings")]
        rings: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Regenerate table 1 (EHM), 3 (TIM recomputation) or 4 (TIM forecast).
    Tables {
        #[arg(long, value_parser = parse_table)]
        which: TableId,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the built-in reference dataset as CSV.
    Dataset,
}

fn parse_property(s: &str) -> Result<Property, String> {
    s.parse().map_err(|e: zagreb_core::QsprError| e.to_string())
}

fn parse_table(s: &str) -> Result<TableId, String> {
    s.parse::<u8>()
        .ok()
        .and_then(TableId::from_number)
        .ok_or_else(|| format!("{s:?} is not one of 1, 3, 4"))
}

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = read_input(path)?;
    Graph::parse_edge_list(&text).with_context(|| format!("invalid graph in {}", path.display()))
}

fn emit(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
        }
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn json_string(value: &serde_json::Value) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Index {
            input,
            format,
            require_connected,
        } => {
            let g = read_graph(&input)?;
            if require_connected {
                g.require_connected()
                    .with_context(|| format!("{} fails --require-connected", input.display()))?;
            }
            let report = index_report(&g)?;
            let out = match format {
                Format::Text => render::index_text(&report),
                Format::Csv => render::index_csv(&report),
                Format::Json => render::index_json(&report)?,
            };
            emit(None, &out)
        }
        Command::Acene {
            rings,
            edges,
            report: _,
            histogram,
            formula,
            format,
            output,
        } => {
            let spec = AceneSpec::new(rings)?;
            let out = if formula {
                let value = acene_ehm_formula(rings)?;
                match format {
                    Format::Json => json_string(&json!({ "rings": rings, "ehm_formula": value }))?,
                    _ => format!("{value}\n"),
                }
            } else if edges {
                acene_graph(spec).to_edge_list()
            } else if histogram {
                let h = acene_pair_class_histogram(&acene_graph(spec));
                match format {
                    Format::Json => json_string(&histogram_json(&h))?,
                    Format::Csv => {
                        let mut s = String::from("d_alpha,d_beta,count\n");
                        for ((a, b), c) in &h.counts {
                            s.push_str(&format!("{a},{b},{c}\n"));
                        }
                        s
                    }
                    Format::Text => format!("{h}\n"),
                }
            } else {
                acene_report(spec, format)?
            };
            emit(output.as_deref(), &out)
        }
        Command::Op {
            kind,
            left,
            right,
            output,
        } => {
            let (g, h) = (read_graph(&left)?, read_graph(&right)?);
            let result = match kind {
                OpKind::Join => join(&g, &h),
                OpKind::Product => cartesian_product(&g, &h),
            };
            emit(output.as_deref(), &result.to_edge_list())
        }
        Command::Verify {
            theorem,
            left,
            right,
            rings,
            format,
        } => {
            let report = match theorem {
                TheoremArg::Acene => {
                    let Some(n) = rings else {
                        bail!("--theorem acene needs -n <rings>");
                    };
                    verify_theorem(TheoremCase::Acene(n))?
                }
                TheoremArg::Join | TheoremArg::Product => {
                    let (Some(left), Some(right)) = (left, right) else {
                        bail!("--theorem join/product needs --left and --right");
                    };
                    let (g, h) = (read_graph(&left)?, read_graph(&right)?);
                    match theorem {
                        TheoremArg::Join => verify_theorem(TheoremCase::Join(&g, &h))?,
                        _ => verify_theorem(TheoremCase::Product(&g, &h))?,
                    }
                }
            };
            let out = match format {
                Format::Json => render::discrepancy_json(&report)?,
                _ => render::discrepancy_text(&report),
            };
            emit(None, &out)
        }
        Command::Fit {
            property,
            data,
            plot,
            format,
        } => {
            let dataset = match &data {
                Some(path) => PropertyDataset::parse_csv(&read_input(path)?)
                    .with_context(|| format!("invalid dataset in {}", path.display()))?,
                None => builtin_acene_dataset(),
            };
            let properties = property.map_or(Property::ALL.to_vec(), |p| vec![p]);
            let out = fit_report(&dataset, &properties, format, data.is_none())?;
            if let (Some(path), Some(p)) = (plot, property) {
                let model = fit_property(&dataset, p)?;
                let points = dataset.points(p);
                let caption = format!(
                    "{p} = {} EHM + {}   R² = {}",
                    model.slope,
                    model.intercept,
                    model.r_squared.unwrap_or(f64::NAN)
                );
                let svg = ScatterPlot {
                    title: p.label(),
                    x_label: "EHM",
                    y_label: p.label(),
                    points: &points,
                    slope: model.slope,
                    intercept: model.intercept,
                    caption: &caption,
                }
                .to_svg();
                fs::write(&path, svg)
                    .with_context(|| format!("cannot write {}", path.display()))?;
            }
            emit(None, &out)
        }
        Command::Predict {
            property,
            ehm,
            rings,
            format,
        } => {
            let ehm = match (ehm, rings) {
                (Some(x), _) => x,
                (None, Some(n)) => acene_ehm_formula(n)?,
                (None, None) => unreachable!("clap requires --ehm or -n"),
            };
            let properties = property.map_or(Property::ALL.to_vec(), |p| vec![p]);
            let out = match format {
                Format::Json => {
                    let values: serde_json::Map<_, _> = properties
                        .iter()
                        .map(|&p| {
                            (
                                p.key().to_string(),
                                json!(predict(&tim_coefficients(p), ehm)),
                            )
                        })
                        .collect();
                    json_string(&json!({ "ehm": ehm, "predictions": values }))?
                }
                Format::Csv => {
                    let mut s = String::from("property,ehm,value\n");
                    for &p in &properties {
                        s.push_str(&format!(
                            "{p},{ehm},{}\n",
                            predict(&tim_coefficients(p), ehm)
                        ));
                    }
                    s
                }
                Format::Text => {
                    let rows: Vec<Vec<String>> = properties
                        .iter()
                        .map(|&p| {
                            vec![
                                p.to_string(),
                                predict(&tim_coefficients(p), ehm).to_string(),
                            ]
                        })
                        .collect();
                    format!("ehm {ehm}\n") + &render::aligned(&["property", "value"], &rows)
                }
            };
            emit(None, &out)
        }
        Command::Tables { which, format } => {
            let table = reproduce_table(which);
            let out = match format {
                Format::Text => render::table_text(&table),
                Format::Csv => render::table_csv(&table)?,
                Format::Json => render::table_json(&table)?,
            };
            emit(None, &out)
        }
        Command::Dataset => emit(None, &builtin_acene_dataset().to_csv()),
    }
}

fn histogram_json(h: &zagreb_core::ClassHistogram) -> serde_json::Value {
    h.counts
        .iter()
        .map(|((a, b), c)| json!({ "degrees": [a, b], "count": c }))
        .collect()
}

fn acene_report(spec: AceneSpec, format: Format) -> Result<String> {
    let g = acene_graph(spec);
    let indices = index_report(&g)?;
    let histogram = acene_pair_class_histogram(&g);
    let closed = acene_ehm_formula(spec.rings()).ok();
    let classes = LocationClasses::for_rings(spec.rings()).ok();
    let degree3 = g.degrees().iter().filter(|&&d| d == 3).count();

    if format == Format::Json {
        return json_string(&json!({
            "conventions": render::conventions_json(),
            "rings": spec.rings(),
            "formula": spec.formula(),
            "vertices": g.vertex_count(),
            "edges": g.edge_count(),
            "degree3_vertices": degree3,
            "indices": indices,
            "histogram": histogram_json(&histogram),
            "location_classes": classes,
            "ehm_closed_form": closed,
        }));
    }

    let mut rows = vec![
        vec!["rings".to_string(), spec.rings().to_string()],
        vec!["formula".to_string(), spec.formula()],
        vec!["vertices".to_string(), g.vertex_count().to_string()],
        vec!["edges".to_string(), g.edge_count().to_string()],
        vec!["degree-3 vertices".to_string(), degree3.to_string()],
    ];
    for (name, value) in IndexReport::FIELD_NAMES.iter().zip(indices.values()) {
        rows.push(vec![
            name.to_uppercase().replace("CO_", "co-"),
            value.to_string(),
        ]);
    }
    rows.push(vec![
        "EHM closed form".to_string(),
        closed.map_or("n/a (needs n >= 2)".to_string(), |v| v.to_string()),
    ]);
    rows.push(vec!["histogram".to_string(), histogram.to_string()]);
    if let Some(c) = classes {
        rows.push(vec![
            "location classes".to_string(),
            format!(
                "outer(2,2)={} outer(2,3)={} outer(3,4)={} inner(3,3)={} inner(3,4)={} fusion(3,3)={}",
                c.outer_2_2, c.outer_2_3, c.outer_3_4, c.inner_3_3, c.inner_3_4, c.fusion_3_3
            ),
        ]);
    }
    Ok(render::conventions_comment() + &render::aligned(&["quantity", "value"], &rows))
}

fn fit_report(
    dataset: &PropertyDataset,
    properties: &[Property],
    format: Format,
    builtin: bool,
) -> Result<String> {
    let mut entries = Vec::new();
    for &p in properties {
        let fitted = fit_property(dataset, p)?;
        let published = tim_coefficients(p);
        let published_r2 = r_squared(&published, &dataset.points(p)).ok();
        let slope_gap = (fitted.slope - published.slope) / published.slope;
        entries.push((p, fitted, published, published_r2, slope_gap));
    }
    let flags = if builtin {
        builtin_dataset_flags()
    } else {
        Vec::new()
    };

    Ok(match format {
        Format::Json => json_string(&json!({
            "records": dataset.records().len(),
            "flags": flags,
            "fits": entries.iter().map(|(p, fitted, published, r2, gap)| json!({
                "property": p,
                "fitted": fitted,
                "published": published,
                "published_r_squared": r2,
                "relative_slope_gap": gap,
            })).collect::<Vec<_>>(),
        }))?,
        Format::Csv => {
            let mut s = String::from(
                "property,slope,intercept,r_squared,published_slope,published_intercept,published_r_squared,relative_slope_gap\n",
            );
            for (p, fitted, published, r2, gap) in &entries {
                s.push_str(&format!(
                    "{p},{},{},{},{},{},{},{gap}\n",
                    fitted.slope,
                    fitted.intercept,
                    fitted.r_squared.unwrap_or(f64::NAN),
                    published.slope,
                    published.intercept,
                    r2.map_or(String::new(), |v| v.to_string()),
                ));
            }
            s
        }
        Format::Text => {
            let rows: Vec<Vec<String>> = entries
                .iter()
                .map(|(p, fitted, published, r2, gap)| {
                    vec![
                        p.to_string(),
                        fitted.slope.to_string(),
                        fitted.intercept.to_string(),
                        fitted.r_squared.unwrap_or(f64::NAN).to_string(),
                        published.slope.to_string(),
                        published.intercept.to_string(),
                        r2.map_or("undefined".to_string(), |v| v.to_string()),
                        format!("{:+.2}%", gap * 100.0),
                    ]
                })
                .collect();
            let mut s = format!("{} records\n", dataset.records().len());
            s.push_str(&render::aligned(
                &[
                    "property",
                    "slope",
                    "intercept",
                    "r2",
                    "tim_slope",
                    "tim_intercept",
                    "tim_r2",
                    "slope_gap",
                ],
                &rows,
            ));
            for f in flags {
                s.push_str(&format!("flag: row {} {}: {}\n", f.row, f.column, f.note));
            }
            s
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}
