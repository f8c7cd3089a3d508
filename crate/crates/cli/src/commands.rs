use std::fmt::Write as _;
use std::time::Instant;

use rectlevel_core::generate::default_span;
use rectlevel_core::{
    analyze, greedy_lines, write_instance, Analysis, AnalysisOptions, ArrangementProfile, Axis, Engine,
    Family, GenSpec,
};

use crate::args::{
    AnalyzeArgs, BenchArgs, EngineChoice, GenParams, GenerateArgs, Kind, RenderArgs, VerifyArgs,
};
use crate::error::{CliError, EXIT_CHECK_FAILED, EXIT_OK};
use crate::io::{read_family, write_atomic};
use crate::report;
use crate::svg;

fn need<T>(value: Option<T>, kind: &str, flag: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::bad_input(format!("--kind {kind} requires --{flag}")))
}

pub fn gen_spec(p: &GenParams) -> Result<GenSpec, CliError> {
    Ok(match p.kind {
        Kind::Grid => GenSpec::Grid { m: need(p.m, "grid", "m")? },
        Kind::Staircase => GenSpec::Staircase { m: need(p.m.or(p.n), "staircase", "m")? },
        Kind::Tightness => {
            GenSpec::Tightness { n: need(p.n, "tightness", "n")?, p: need(p.p, "tightness", "p")? }
        }
        Kind::Random => {
            let n = need(p.n, "random", "n")?;
            GenSpec::Random { n, seed: p.seed, span: p.span.unwrap_or_else(|| default_span(n)) }
        }
        Kind::Clustered => GenSpec::Clustered {
            n: need(p.n, "clustered", "n")?,
            clusters: need(p.clusters, "clustered", "clusters")?,
            seed: p.seed,
        },
    })
}

pub fn generate(args: &GenerateArgs) -> Result<u8, CliError> {
    let spec = gen_spec(&args.params)?;
    let f = spec.generate()?;
    write_atomic(&args.out, write_instance(&f).as_bytes())?;
    println!("{} n={} file={}", spec.kind(), f.len(), args.out.display());
    Ok(EXIT_OK)
}

fn engine_name(e: EngineChoice) -> &'static str {
    match e {
        EngineChoice::Oracle => "oracle",
        EngineChoice::Sweep => "sweep",
        EngineChoice::Both => "both",
    }
}

/// First position where two profiles disagree, described for humans.
pub fn first_difference(oracle: &ArrangementProfile, sweep: &ArrangementProfile) -> Option<String> {
    let (a, b) = (&oracle.vertices, &sweep.vertices);
    match a.iter().zip(b).position(|(u, v)| u != v) {
        Some(i) => Some(format!("vertex {i}: oracle {:?}, sweep {:?}", a[i], b[i])),
        None if a.len() != b.len() => {
            let i = a.len().min(b.len());
            Some(format!("vertex {i}: oracle {:?}, sweep {:?}", a.get(i), b.get(i)))
        }
        None if oracle != sweep => Some("vertex lists agree but summaries differ".to_string()),
        None => None,
    }
}

fn emit(doc: &serde_json::Value, json: Option<&std::path::Path>) -> Result<(), CliError> {
    let text = report::to_text(doc);
    match json {
        Some(path) => write_atomic(path, text.as_bytes()),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

pub fn analyze_cmd(args: &AnalyzeArgs) -> Result<u8, CliError> {
    let f = read_family(&args.input)?;
    let engine = match args.engine {
        EngineChoice::Oracle => Engine::Oracle,
        EngineChoice::Sweep => Engine::Sweep,
        EngineChoice::Both => {
            let oracle = analyze(&f, Engine::Oracle)?;
            let sweep = analyze(&f, Engine::Sweep)?;
            if let Some(diff) = first_difference(&oracle, &sweep) {
                return Err(CliError::failed(format!("engine mismatch on {}: {diff}", args.input.display())));
            }
            Engine::Sweep
        }
    };
    let analysis = Analysis::new(&f, AnalysisOptions { engine, exact_limit: args.exact_limit })?;
    let reports = args.k.iter().map(|&k| analysis.verify(k)).collect::<Result<Vec<_>, _>>()?;
    let source = args.input.display().to_string();
    let doc = report::document(&source, engine_name(args.engine), &analysis, &reports, false);
    emit(&doc, args.json.as_deref())?;
    if let Some(path) = &args.json {
        let prof = &analysis.identity().profile;
        let levels: Vec<String> =
            reports.iter().map(|r| format!("leq_{}={}", r.k, prof.level_complexity(r.k))).collect();
        println!(
            "n={} vertices={} union={} {} report={}",
            f.len(),
            prof.vertex_count(),
            prof.union_complexity,
            levels.join(" "),
            path.display()
        );
    }
    Ok(EXIT_OK)
}

pub fn verify_cmd(args: &VerifyArgs) -> Result<u8, CliError> {
    let f = read_family(&args.input)?;
    let analysis =
        Analysis::new(&f, AnalysisOptions { engine: Engine::Sweep, exact_limit: args.exact_limit })?;
    let reports = args.k.iter().map(|&k| analysis.verify(k)).collect::<Result<Vec<_>, _>>()?;
    let doc = report::document(&args.input.display().to_string(), "sweep", &analysis, &reports, true);
    emit(&doc, args.json.as_deref())?;

    let failures: Vec<String> = reports
        .iter()
        .flat_map(|r| r.failures().map(move |c| format!("k={}: {}: {}", r.k, c.name, c.detail)))
        .collect();
    if failures.is_empty() {
        if args.json.is_some() {
            let checks: usize = reports.iter().map(|r| r.checks.len()).sum();
            println!("pass: {checks} checks over k={:?}", args.k);
        }
        return Ok(EXIT_OK);
    }
    eprintln!("{} failed checks", failures.len());
    for line in &failures {
        eprintln!("  {line}");
    }
    eprintln!("counterexample instance:");
    eprint!("{}", write_instance(&f));
    Ok(EXIT_CHECK_FAILED)
}

/// One CSV row per (size, engine).
pub fn bench_csv(args: &BenchArgs) -> Result<String, CliError> {
    if args.sizes.is_empty() || args.sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(CliError::bad_input("--sizes must be a non-empty strictly ascending list"));
    }
    let engines: &[Engine] = match args.engine {
        EngineChoice::Oracle => &[Engine::Oracle],
        EngineChoice::Sweep => &[Engine::Sweep],
        EngineChoice::Both => &[Engine::Sweep, Engine::Oracle],
    };
    let mut csv = String::from("n,vertices,engine,micros\n");
    for &n in &args.sizes {
        let params = GenParams {
            kind: args.kind,
            m: Some(match args.kind {
                Kind::Grid => (n / 2).max(1),
                _ => n,
            }),
            n: Some(n),
            p: Some(args.p),
            clusters: Some((n / 8).max(1)),
            seed: args.seed,
            span: None,
        };
        let f = gen_spec(&params)?.generate()?;
        for &engine in engines {
            if engine == Engine::Oracle && f.len() > args.oracle_cap {
                continue;
            }
            let start = Instant::now();
            let prof = analyze(&f, engine)?;
            let micros = start.elapsed().as_micros();
            let name = if engine == Engine::Oracle { "oracle" } else { "sweep" };
            let _ = writeln!(csv, "{},{},{name},{micros}", f.len(), prof.vertex_count());
        }
    }
    Ok(csv)
}

pub fn bench(args: &BenchArgs) -> Result<u8, CliError> {
    let csv = bench_csv(args)?;
    match &args.csv {
        Some(path) => write_atomic(path, csv.as_bytes())?,
        None => print!("{csv}"),
    }
    Ok(EXIT_OK)
}

pub fn render_svg(f: &Family, show_lines: bool, k: u32) -> Result<String, CliError> {
    let prof = analyze(f, Engine::Sweep)?;
    let lines = if show_lines { Some((greedy_lines(f, Axis::Y)?, greedy_lines(f, Axis::X)?)) } else { None };
    Ok(svg::render(f, &prof, lines.as_ref().map(|(h, v)| (h, v)), k))
}

pub fn render(args: &RenderArgs) -> Result<u8, CliError> {
    let f = read_family(&args.input)?;
    let text = render_svg(&f, args.show_lines, args.k)?;
    write_atomic(&args.out, text.as_bytes())?;
    Ok(EXIT_OK)
}
