//! Command-line surface: structure-constant computation, object
//! enumeration, and the verification suites.

use clap::{Args, Parser, Subcommand, ValueEnum};
use eqlr::error::Error;
use eqlr::partition::Partition;
use eqlr::poly::MPoly;
use eqlr::puzzle::{enumerate_puzzles, enumerate_trapezoid_puzzles};
use eqlr::suites::{run_suite, SuiteParams};
use eqlr::tableaux::{enumerate_lr_tableaux, ReverseDiagram};
use eqlr::weights::{
    coefficient_table_by_tableaux, is_positive, weight_c_l, weight_cap_c_l, PositivityCriterion,
};
use serde_json::json;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "eqlr",
    about = "Equivariant Littlewood-Richardson structure constants, three ways",
    version
)]
struct Cli {
    /// Worker threads (default: EQLR_THREADS or all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Tableaux,
    Puzzles,
    Trapezoid,
    Oracle,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Flavor {
    /// The y-variable structure constants c
    Y,
    /// The equivariant constants C under y_i -> -Y_{n+1-i}
    #[value(name = "Y", alias = "cap-y")]
    CapY,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Ascii,
}

#[derive(Args)]
struct ShapeArgs {
    /// Number of parts d (all partitions are padded to this length)
    #[arg(short, long)]
    d: usize,
    /// Box width parameter n (required for puzzles and the Y flavor)
    #[arg(short, long)]
    n: Option<usize>,
    /// λ as comma-separated parts (empty string for the zero partition)
    #[arg(long, default_value = "")]
    lambda: String,
    /// μ as comma-separated parts
    #[arg(long, default_value = "")]
    mu: String,
    /// ν as comma-separated parts; omit to list every ν
    #[arg(long)]
    nu: Option<String>,
    /// Inner shape κ for the skew extension μ/κ (tableaux and oracle only)
    #[arg(long)]
    kappa: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute c_{λ,μ}^ν (or the full ν table)
    Coeff {
        #[command(flatten)]
        shapes: ShapeArgs,
        #[arg(long, value_enum, default_value = "tableaux")]
        method: Method,
        #[arg(long, value_enum, default_value = "y")]
        flavor: Flavor,
        /// Sum only over LR+ (the result is the same polynomial)
        #[arg(long)]
        positive_only: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// List tableaux or puzzles with their weights
    Enumerate {
        #[command(flatten)]
        shapes: ShapeArgs,
        #[arg(long, value_enum, default_value = "tableaux")]
        method: Method,
        #[arg(long)]
        positive_only: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run a verification suite
    Verify {
        /// One of: bialternant, lra, induction, badguys, involutions,
        /// bijection, positivity, symmetry, all
        suite: String,
        #[arg(short, long, default_value_t = 3)]
        d: usize,
        #[arg(short, long, default_value_t = 5)]
        n: usize,
        /// Shape bound for the sweeps, as comma-separated parts
        #[arg(long, default_value = "3,3,3")]
        max_shape: String,
        /// Randomized case count for the induction suite
        #[arg(long, default_value_t = 200)]
        cases: usize,
        #[arg(long, default_value_t = 20060801)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Also print passing cases
        #[arg(long)]
        verbose: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = cli
        .threads
        .or_else(|| {
            std::env::var("EQLR_THREADS")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(0);
    if threads > 0 {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e);
            match e {
                Error::Internal(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

struct Shapes {
    d: usize,
    n: Option<usize>,
    lambda: Partition,
    mu: Partition,
    nu: Option<Partition>,
    kappa: Option<Partition>,
}

fn parse_shapes(s: &ShapeArgs) -> Result<Shapes, Error> {
    if s.d == 0 {
        return Err(Error::Parse("d must be at least 1".into()));
    }
    let lambda = Partition::parse(&s.lambda, s.d)?;
    let mu = Partition::parse(&s.mu, s.d)?;
    let nu = s.nu.as_deref().map(|v| Partition::parse(v, s.d)).transpose()?;
    let kappa = s
        .kappa
        .as_deref()
        .map(|v| Partition::parse(v, s.d))
        .transpose()?;
    Ok(Shapes {
        d: s.d,
        n: s.n,
        lambda,
        mu,
        nu,
        kappa,
    })
}

fn diagram_of(shapes: &Shapes) -> Result<ReverseDiagram, Error> {
    match &shapes.kappa {
        None => Ok(ReverseDiagram::new(shapes.mu.clone())),
        Some(k) => ReverseDiagram::skew(shapes.mu.clone(), k.clone()),
    }
}

/// One ν's text block: the factored per-object form when the method has
/// one, then the canonical expanded polynomial.
fn render_poly_text(
    factored: Option<&[Vec<eqlr::weights::WeightFactor>]>,
    poly: &MPoly,
    cap_n: Option<usize>,
) -> String {
    let mut out = String::new();
    if let Some(lists) = factored {
        let rendered: Vec<String> = lists
            .iter()
            .map(|fs| {
                if fs.is_empty() {
                    "1".to_string()
                } else {
                    fs.iter()
                        .map(|w| match cap_n {
                            None => w.render_y(),
                            Some(n) => w.render_cap_y(n),
                        })
                        .collect::<String>()
                }
            })
            .collect();
        if !rendered.is_empty() {
            out.push_str(&format!("factored: {}\n", rendered.join(" + ")));
        }
    }
    out.push_str(&format!("expanded: {}\n", poly.render()));
    out
}

fn run(cmd: Command) -> Result<ExitCode, Error> {
    match cmd {
        Command::Coeff {
            shapes,
            method,
            flavor,
            positive_only,
            format,
        } => cmd_coeff(parse_shapes(&shapes)?, method, flavor, positive_only, format),
        Command::Enumerate {
            shapes,
            method,
            positive_only,
            format,
        } => cmd_enumerate(parse_shapes(&shapes)?, method, positive_only, format),
        Command::Verify {
            suite,
            d,
            n,
            max_shape,
            cases,
            seed,
            format,
            verbose,
        } => {
            let len = max_shape.split(',').count().max(d);
            let params = SuiteParams {
                d,
                n,
                max_shape: Partition::parse(&max_shape, len)?,
                cases,
                seed,
            };
            let reports = run_suite(&suite, &params)?;
            let all_pass = reports.iter().all(|r| r.passed());
            match format {
                Format::Json => {
                    let doc = json!({
                        "suites": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
                        "passed": all_pass,
                    });
                    println!("{}", doc);
                }
                _ => {
                    for r in &reports {
                        print!("{}", r.render_text(verbose));
                    }
                }
            }
            Ok(if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn methods_to_run(m: Method, shapes: &Shapes) -> Result<Vec<Method>, Error> {
    let puzzly_ok = shapes.n.is_some() && shapes.kappa.is_none();
    match m {
        Method::All => {
            let mut v = vec![Method::Tableaux, Method::Oracle];
            if puzzly_ok {
                v.push(Method::Puzzles);
                v.push(Method::Trapezoid);
            }
            Ok(v)
        }
        Method::Puzzles | Method::Trapezoid if !puzzly_ok => Err(Error::Parse(
            "puzzle methods need -n and do not accept --kappa".into(),
        )),
        m => Ok(vec![m]),
    }
}

fn cmd_coeff(
    shapes: Shapes,
    method: Method,
    flavor: Flavor,
    positive_only: bool,
    format: Format,
) -> Result<ExitCode, Error> {
    let d = shapes.d;
    let cap_n = match flavor {
        Flavor::Y => None,
        Flavor::CapY => Some(shapes.n.ok_or_else(|| {
            Error::Parse("the Y flavor needs -n to fix the specialization".into())
        })?),
    };
    let methods = methods_to_run(method, &shapes)?;
    let diagram = diagram_of(&shapes)?;

    let mut results: Vec<(&'static str, eqlr::weights::CoefficientTable)> = Vec::new();
    for m in &methods {
        let table = match m {
            Method::Tableaux => {
                coefficient_table_by_tableaux(&shapes.lambda, &diagram, d, positive_only)?
            }
            Method::Oracle => eqlr::schur::expand_product_oracle(&shapes.lambda, &diagram, d)?,
            Method::Puzzles | Method::Trapezoid => {
                let n = shapes.n.unwrap();
                let trapezoid = matches!(m, Method::Trapezoid);
                let mut table = eqlr::weights::CoefficientTable::default();
                // puzzles fix ν per enumeration, so sweep either the single
                // requested ν or the tableau-reachable ones
                let nus: Vec<Partition> = match &shapes.nu {
                    Some(nu) => vec![nu.clone()],
                    None => coefficient_table_by_tableaux(&shapes.lambda, &diagram, d, false)?
                        .entries
                        .keys()
                        .cloned()
                        .collect(),
                };
                for nu in &nus {
                    let puzzles = if trapezoid {
                        enumerate_trapezoid_puzzles(&shapes.lambda, &shapes.mu, nu, n, d)?
                    } else {
                        enumerate_puzzles(&shapes.lambda, &shapes.mu, nu, n, d)?
                    };
                    let mut sum = MPoly::zero();
                    for p in &puzzles {
                        let (fs, w) = p.weight();
                        sum += &w;
                        table.factored.entry(nu.clone()).or_default().push(fs);
                    }
                    if !sum.is_zero() {
                        table.entries.insert(nu.clone(), sum);
                    }
                }
                table
            }
            Method::All => unreachable!(),
        };
        let name = match m {
            Method::Tableaux => "tableaux",
            Method::Oracle => "oracle",
            Method::Puzzles => "puzzles",
            Method::Trapezoid => "trapezoid",
            Method::All => unreachable!(),
        };
        results.push((name, table));
    }

    // cross-check when several methods ran; puzzle methods only cover the
    // requested ν (or the reachable set), so compare on shared keys when a
    // single ν was requested and whole tables otherwise
    for pair in results.windows(2) {
        let (na, ta) = (&pair[0].0, &pair[0].1);
        let (nb, tb) = (&pair[1].0, &pair[1].1);
        let agree = match &shapes.nu {
            Some(nu) => ta.get(nu) == tb.get(nu),
            None => ta.entries == tb.entries,
        };
        if !agree {
            return Err(Error::Internal(format!(
                "methods {} and {} disagree",
                na, nb
            )));
        }
    }

    let (method_name, table) = &results[0];
    let restrict_nu = shapes.nu.as_ref();

    let poly_of = |poly: &MPoly| -> Result<MPoly, Error> {
        match cap_n {
            None => Ok(poly.clone()),
            Some(n) => poly.specialize_y_to_cap_y(n),
        }
    };

    match format {
        Format::Json => {
            let rows: Vec<serde_json::Value> = table
                .entries
                .iter()
                .filter(|(nu, _)| restrict_nu.map_or(true, |want| want == *nu))
                .map(|(nu, poly)| {
                    let factored: Vec<Vec<[i64; 2]>> = table
                        .factored
                        .get(nu)
                        .map(|lists| {
                            lists
                                .iter()
                                .map(|fs| fs.iter().map(|w| [w.e, w.f]).collect())
                                .collect()
                        })
                        .unwrap_or_default();
                    json!({
                        "nu": nu.parts().to_vec(),
                        "poly": {
                            "factored": factored,
                            "expanded": serde_json::to_value(poly_of(poly).unwrap()).unwrap(),
                        },
                    })
                })
                .collect();
            let doc = json!({
                "d": d,
                "n": shapes.n,
                "lambda": shapes.lambda.parts().to_vec(),
                "mu": shapes.mu.parts().to_vec(),
                "kappa": shapes.kappa.as_ref().map(|k| k.parts().to_vec()),
                "method": method_name,
                "flavor": match flavor { Flavor::Y => "y", Flavor::CapY => "Y" },
                "coefficients": rows,
            });
            println!("{}", doc);
        }
        _ => {
            let mut any = false;
            for (nu, poly) in &table.entries {
                if restrict_nu.map_or(false, |want| want != nu) {
                    continue;
                }
                any = true;
                println!(
                    "c[{:?},{:?}{}]^{:?}  (d={}, method={})",
                    shapes.lambda,
                    shapes.mu,
                    shapes
                        .kappa
                        .as_ref()
                        .map(|k| format!("/{:?}", k))
                        .unwrap_or_default(),
                    nu,
                    d,
                    method_name
                );
                let factored = table.factored.get(nu).map(|v| v.as_slice());
                print!("{}", render_poly_text(factored, &poly_of(poly)?, cap_n));
            }
            if !any {
                if let Some(nu) = restrict_nu {
                    println!("c[{:?},{:?}]^{:?} = 0", shapes.lambda, shapes.mu, nu);
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_enumerate(
    shapes: Shapes,
    method: Method,
    positive_only: bool,
    format: Format,
) -> Result<ExitCode, Error> {
    let d = shapes.d;
    match method {
        Method::Tableaux => {
            let diagram = diagram_of(&shapes)?;
            let all = enumerate_lr_tableaux(&shapes.lambda, &diagram, shapes.nu.as_ref(), d);
            let items: Vec<_> = all
                .into_iter()
                .filter(|l| {
                    !positive_only || is_positive(l, PositivityCriterion::C1).unwrap_or(false)
                })
                .collect();
            match format {
                Format::Json => {
                    let rows: Vec<serde_json::Value> = items
                        .iter()
                        .map(|l| {
                            let (factors, poly) = weight_c_l(l);
                            json!({
                                "tableau": l.to_json(),
                                "weight": {
                                    "factored": factors.iter().map(|w| [w.e, w.f]).collect::<Vec<_>>(),
                                    "expanded": serde_json::to_value(&poly).unwrap(),
                                },
                            })
                        })
                        .collect();
                    println!("{}", json!({"count": items.len(), "items": rows}));
                }
                _ => {
                    println!("count: {}", items.len());
                    for (i, l) in items.iter().enumerate() {
                        let (factors, poly) = weight_c_l(l);
                        let fstr: String = factors.iter().map(|w| w.render_y()).collect();
                        println!(
                            "-- #{} weight {} = {}",
                            i + 1,
                            if fstr.is_empty() { "1".into() } else { fstr },
                            poly.render()
                        );
                        if matches!(format, Format::Ascii) {
                            print!("{}", l.render_ascii());
                            if let Some(n) = shapes.n {
                                let (_, cap) = weight_cap_c_l(l, n)?;
                                println!("   Y-flavor: {}", cap.render());
                            }
                        }
                    }
                }
            }
        }
        Method::Puzzles | Method::Trapezoid => {
            let n = shapes
                .n
                .ok_or_else(|| Error::Parse("puzzle enumeration needs -n".into()))?;
            let nu = shapes
                .nu
                .clone()
                .ok_or_else(|| Error::Parse("puzzle enumeration needs --nu".into()))?;
            let trapezoid = matches!(method, Method::Trapezoid);
            let items = if trapezoid {
                enumerate_trapezoid_puzzles(&shapes.lambda, &shapes.mu, &nu, n, d)?
            } else {
                enumerate_puzzles(&shapes.lambda, &shapes.mu, &nu, n, d)?
            };
            let items: Vec<_> = items
                .into_iter()
                .filter(|p| !positive_only || !p.weight().1.is_zero())
                .collect();
            match format {
                Format::Json => {
                    let rows: Vec<serde_json::Value> = items
                        .iter()
                        .map(|p| {
                            let (factors, poly) = p.weight();
                            json!({
                                "puzzle": p.to_json(),
                                "weight": {
                                    "factored": factors.iter().map(|w| [w.e, w.f]).collect::<Vec<_>>(),
                                    "expanded": serde_json::to_value(&poly).unwrap(),
                                },
                            })
                        })
                        .collect();
                    println!("{}", json!({"count": items.len(), "items": rows}));
                }
                _ => {
                    println!("count: {}", items.len());
                    for (i, p) in items.iter().enumerate() {
                        let (factors, poly) = p.weight();
                        let fstr: String = factors.iter().map(|w| w.render_y()).collect();
                        println!(
                            "-- #{} weight {} = {}",
                            i + 1,
                            if fstr.is_empty() { "1".into() } else { fstr },
                            poly.render()
                        );
                        if matches!(format, Format::Ascii) {
                            print!("{}", p);
                        }
                    }
                }
            }
        }
        _ => {
            return Err(Error::Parse(
                "enumerate expects --method tableaux, puzzles, or trapezoid".into(),
            ))
        }
    }
    Ok(ExitCode::SUCCESS)
}
