use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use exactla::vector::{ratio, Rat};
use pvs_cli::instfile::{InstanceFile, OracleSpec};
use pvs_cli::run::{analyze, AnalyzeOptions};
use pvs_cli::{classify_error, ExitKind};
use std::path::PathBuf;

#[derive(Parser)]
#[command(name = "pvs", version, about = "Exact analyzer for reductive prehomogeneous vector spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze an instance file: CF decomposition, Spcl enumeration,
    /// exceptional pairs, convergence certificates and any IFD blocks.
    Analyze(AnalyzeArgs),
    /// Build a DK-type instance from a root datum and grading labels and
    /// emit it as an instance file.
    Dk(DkArgs),
    /// Run only the IFD standardizations of an instance file.
    Ifd(AnalyzeArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Instance file (JSON).
    file: PathBuf,
    /// Override the instance seed.
    #[arg(long)]
    seed: Option<u64>,
    /// Override oracle trials per height.
    #[arg(long)]
    trials: Option<u32>,
    /// Override sampling heights (comma separated).
    #[arg(long)]
    heights: Option<String>,
    /// Extra mu as rational coefficients over the fundamental characters
    /// (comma separated, e.g. 1/2,1). Repeatable.
    #[arg(long = "mu")]
    mu: Vec<String>,
    /// Override the weight-count cap.
    #[arg(long = "max-weights")]
    max_weights: Option<usize>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Output format.
    #[arg(long, default_value = "json")]
    format: String,
    /// Worker threads for the per-subspace certifications.
    #[arg(long)]
    jobs: Option<usize>,
    /// Include wall-clock timings in the report (breaks byte-stability).
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct DkArgs {
    /// Root datum type, e.g. F4, E6, GL(4).
    datum: String,
    /// Weighted Dynkin labels, comma separated, one per simple root.
    labels: String,
    #[arg(long)]
    name: Option<String>,
    /// Attach a chain oracle, e.g. gl_chain:1,2,1 or sym_chain:2.
    #[arg(long)]
    oracle: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Output format of the summary line (the emitted file is JSON).
    #[arg(long, default_value = "json")]
    format: String,
}

fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        Ok(ratio(n.trim().parse()?, d.trim().parse()?))
    } else {
        Ok(ratio(s.parse()?, 1))
    }
}

fn run_analyze(args: &AnalyzeArgs, ifd_only: bool) -> Result<String> {
    let mut file = InstanceFile::load(&args.file)?;
    if let Some(s) = args.seed {
        file.seed = Some(s);
    }
    {
        let caps = file.caps.get_or_insert_with(|| pvs_cli::instfile::CapsSpec {
            max_weights: None,
            trials: None,
            heights: None,
        });
        if let Some(t) = args.trials {
            caps.trials = Some(t);
        }
        if let Some(h) = &args.heights {
            caps.heights = Some(
                h.split(',')
                    .map(|x| x.trim().parse::<u64>().context("parsing --heights"))
                    .collect::<Result<Vec<_>>>()?,
            );
        }
        if let Some(m) = args.max_weights {
            caps.max_weights = Some(m);
        }
    }
    let inst = file.to_instance()?;
    let mut opts = AnalyzeOptions {
        jobs: args.jobs,
        timings: args.timings,
        ..Default::default()
    };
    for mu in &args.mu {
        let coeffs = mu
            .split(',')
            .map(parse_rat)
            .collect::<Result<Vec<_>>>()
            .context("parsing --mu")?;
        if coeffs.len() != inst.fund_chars.len() {
            bail!(
                "--mu needs {} coefficients (one per fundamental character)",
                inst.fund_chars.len()
            );
        }
        opts.extra_mu.push(coeffs);
    }
    let report = if ifd_only {
        let mut report = analyze(&InstanceFile { ifds: Vec::new(), ..file.clone() }, &inst, &AnalyzeOptions::default())?;
        report.spcl.clear();
        report.hasse.clear();
        report.exceptional.clear();
        report.convergence.clear();
        report.cf = None;
        report.ifd = file
            .ifds
            .iter()
            .map(|b| pvs_cli::run::run_ifd(&inst, b))
            .collect::<Result<Vec<_>>>()?;
        report
    } else {
        analyze(&file, &inst, &opts)?
    };
    Ok(match args.format.as_str() {
        "text" => report.to_text(),
        "json" => report.to_json(),
        other => bail!("unknown format {other:?}"),
    })
}

fn run_dk(args: &DkArgs) -> Result<String> {
    let labels: Vec<i64> = args
        .labels
        .split(',')
        .map(|x| x.trim().parse::<i64>().context("parsing labels"))
        .collect::<Result<Vec<_>>>()?;
    let datum = rootsys::build_root_datum(&args.datum).map_err(|e| anyhow::anyhow!("{e}"))?;
    if labels.len() != datum.rank() {
        bail!("{} labels for rank {}", labels.len(), datum.rank());
    }
    let h = dktype::GradingElement::new(labels.clone());
    if !h.is_dominant() {
        bail!("grading labels must be nonnegative");
    }
    let oracle = match &args.oracle {
        None => None,
        Some(s) => Some(parse_oracle(s)?),
    };
    let name = args
        .name
        .clone()
        .unwrap_or_else(|| format!("dk-{}-{}", args.datum.to_lowercase(), args.labels.replace(',', "")));
    // weights as simple-root coefficient tuples
    let psi: Vec<Vec<i64>> = datum
        .positive_roots
        .iter()
        .filter(|r| h.pair_coeffs(&r.coeffs) == 2)
        .map(|r| r.coeffs.clone())
        .collect();
    let g_simple: Vec<usize> = (0..datum.rank())
        .filter(|&i| h.labels[i] == 0)
        .map(|i| i + 1)
        .collect();
    if psi.is_empty() {
        eprintln!("warning: V is empty for these grading labels");
    }
    let file = InstanceFile {
        name,
        root_datum: args.datum.clone(),
        basis: "simple_roots".into(),
        g_simple,
        psi_v: Some(psi.clone()),
        multiplicities: None,
        dk: None,
        xstar_g: None,
        fund_chars: None,
        oracle,
        seed: Some(args.seed),
        caps: None,
        ifds: Vec::new(),
    };
    // validate by materializing
    let inst = file.to_instance()?;
    let json = serde_json::to_string_pretty(&file)?;
    if let Some(out) = &args.out {
        std::fs::write(out, &json)?;
        Ok(format!(
            "wrote {} ({} weights, G = simple roots {:?})\n",
            out.display(),
            inst.weight_count(),
            file.g_simple
        ))
    } else {
        Ok(json)
    }
}

fn parse_oracle(s: &str) -> Result<OracleSpec> {
    let (kind, sizes) = s
        .split_once(':')
        .ok_or_else(|| anyhow::anyhow!("oracle spec looks like kind:sizes"))?;
    let sizes: Vec<usize> = sizes
        .split(',')
        .map(|x| x.trim().parse::<usize>().context("oracle sizes"))
        .collect::<Result<Vec<_>>>()?;
    Ok(match kind {
        "gl_chain" => OracleSpec::GlChain { sizes },
        "sym_chain" => OracleSpec::SymChain { sizes },
        "skew_chain" => OracleSpec::SkewChain { sizes },
        "sp_chain" => OracleSpec::SpChain { sizes },
        "so_chain" => OracleSpec::SoChain { sizes },
        other => bail!("unknown oracle kind {other:?} (cubic discs and custom FRIPs are file-only)"),
    })
}

fn main() {
    let cli = Cli::parse();
    let result: Result<String> = match &cli.command {
        Command::Analyze(args) => run_analyze(args, false).and_then(|text| emit(args, text)),
        Command::Ifd(args) => run_analyze(args, true).and_then(|text| emit(args, text)),
        Command::Dk(args) => run_dk(args),
    };
    match result {
        Ok(text) => {
            print!("{text}");
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(classify_error(&e).code());
        }
    }
    std::process::exit(ExitKind::Ok.code());
}

fn emit(args: &AnalyzeArgs, text: String) -> Result<String> {
    if let Some(out) = &args.out {
        std::fs::write(out, &text)?;
        Ok(format!("wrote {}\n", out.display()))
    } else {
        Ok(text)
    }
}
