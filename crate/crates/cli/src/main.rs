//! `hyperarr`: characteristic polynomials, freeness and root-avoidance
//! checks for central arrangements given as catalog names or text files.
//!
//! Exit status: 0 when every verdict holds, 1 when some check is violated
//! or forbidden, 2 on usage or input errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use hyperarr::catalog;
use hyperarr::checkers::{self, AvoidanceMode, CheckReport};
use hyperarr::derivations::{freeness_with, FreenessOptions};
use hyperarr::exact::Integer;
use hyperarr::lattice::char_data_from_lattice;
use hyperarr::lattice::{check_admissible, count_points_unchecked, eval_chi, mobius_values};
use hyperarr::roots::{display_poly, root_profile};
use hyperarr::scan::{scan, ScanOptions, Target};
use hyperarr::selftest::{apply_overrides, run_suite, ExpectedOverride, SuiteOptions};
use hyperarr::{flats, Arrangement};

#[derive(Parser)]
#[command(
    name = "hyperarr",
    version,
    about = "Exact invariants of central hyperplane arrangements"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Global {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Largest degree the derivation solver may be asked for.
    #[arg(long, global = true, value_name = "D")]
    max_degree: Option<u32>,
    /// Primes for the finite-field point-count oracle.
    #[arg(long, global = true, value_delimiter = ',', value_name = "P1,P2,...")]
    primes: Vec<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Characteristic polynomial, Betti numbers and root profile.
    Chi {
        /// `catalog:<name>` or a path to an arrangement file.
        input: String,
    },
    /// Deletion-restriction data and checks for one hyperplane.
    Triple {
        input: String,
        /// Hyperplane index, counting from 0.
        index: usize,
    },
    /// All checkers over every hyperplane and every flat of corank one.
    Scan {
        input: String,
        /// Skip the checks that need freeness verdicts.
        #[arg(long)]
        no_freeness: bool,
    },
    /// Restriction or localization root tuples ruled out for given chi0 roots.
    Forbidden {
        /// Roots of chi0(A), with multiplicity.
        #[arg(required = true, num_args = 1..)]
        roots: Vec<i64>,
        /// Test one tuple instead of listing them all.
        #[arg(long, num_args = 1.., value_name = "E")]
        test: Option<Vec<i64>>,
    },
    /// Freeness verdict with exponents and a basis, or the refutation.
    Freeness { input: String },
    /// Built-in arrangements.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Runs the invariant suite over the catalog.
    Selftest {
        /// JSON list of expected-data overrides applied before running.
        #[arg(long, value_name = "FILE")]
        fixture: Option<PathBuf>,
        /// Restrict to these entries.
        #[arg(long = "entry", value_name = "NAME")]
        entries: Vec<String>,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    /// Print an entry in the arrangement text format.
    Emit {
        name: String,
    },
}

fn main() -> ExitCode {
    // exit quietly when the reader goes away, e.g. `hyperarr ... | head`
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// Ok(true) when every verdict holds.
fn run(cli: &Cli) -> Result<bool> {
    let g = &cli.global;
    match &cli.command {
        Command::Chi { input } => cmd_chi(g, &load(input)?),
        Command::Triple { input, index } => cmd_triple(g, &load(input)?, *index),
        Command::Scan { input, no_freeness } => cmd_scan(g, &load(input)?, !no_freeness),
        Command::Forbidden { roots, test } => cmd_forbidden(g, roots, test.as_deref()),
        Command::Freeness { input } => cmd_freeness(g, &load(input)?),
        Command::Catalog { action } => cmd_catalog(g, action),
        Command::Selftest { fixture, entries } => cmd_selftest(g, fixture.as_ref(), entries),
    }
}

fn load(input: &str) -> Result<Arrangement> {
    if let Some(name) = input.strip_prefix("catalog:") {
        return Ok(catalog::get(name)?.arrangement);
    }
    let text = fs::read_to_string(input).with_context(|| format!("reading {input}"))?;
    let a = Arrangement::parse(&text).with_context(|| format!("parsing {input}"))?;
    Ok(match a.name() {
        Some(_) => a,
        None => a.with_name(input),
    })
}

fn freeness_options(g: &Global) -> FreenessOptions {
    FreenessOptions {
        max_degree: g.max_degree,
        ..FreenessOptions::default()
    }
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn label(a: &Arrangement) -> String {
    format!(
        "{} ({} hyperplanes in dimension {}, rank {})",
        a.name().unwrap_or("arrangement"),
        a.len(),
        a.dim(),
        a.rank()
    )
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(", ")
}

fn cmd_chi(g: &Global, a: &Arrangement) -> Result<bool> {
    let lattice = flats(a);
    let data = char_data_from_lattice(&lattice);
    let profile = root_profile(&data.chi)?;
    let chi0_profile = data.chi0.as_ref().map(root_profile).transpose()?;
    let rank2_mobius = if a.rank() >= 2 {
        Some(mobius_values(&lattice, 2))
    } else {
        None
    };

    let mut oracle = Vec::new();
    let primes = if g.primes.is_empty() {
        hyperarr::lattice::admissible_primes(a, &lattice, 1)
    } else {
        g.primes.clone()
    };
    for &q in &primes {
        check_admissible(a, &lattice, q)?;
        let count = count_points_unchecked(a, q)?;
        let value = eval_chi(&data.chi, q);
        oracle.push((q, value, count));
    }
    let ok = oracle.iter().all(|(_, v, c)| v == c);

    if g.json {
        print_json(&json!({
            "name": a.name(),
            "dim": a.dim(),
            "hyperplanes": a.len(),
            "rank": a.rank(),
            "rankProfile": lattice.rank_profile(),
            "chiFactored": display_poly(&data.chi),
            "chi0Factored": data.chi0.as_ref().map(display_poly),
            "charData": data,
            "rootProfile": profile,
            "chi0RootProfile": chi0_profile,
            "rank2Mobius": rank2_mobius,
            "oracle": oracle.iter().map(|(q, v, c)| json!({
                "prime": q, "chiValue": v.to_string(), "points": c.to_string(), "agree": v == c,
            })).collect::<Vec<_>>(),
        }))?;
        return Ok(ok);
    }
    println!("arrangement   {}", label(a));
    println!("flats by rank {:?}", lattice.rank_profile());
    println!("chi           {}", display_poly(&data.chi));
    if let Some(chi0) = &data.chi0 {
        println!("chi0          {}", display_poly(chi0));
    }
    println!("b             ({})", join(&data.b));
    println!("poincare      {}", data.poincare);
    let roots = profile.integer_roots.multiset();
    println!(
        "integer roots {} ({})",
        if roots.is_empty() {
            "none".into()
        } else {
            join(&roots)
        },
        if profile.splits_over_z {
            "splits over Z"
        } else {
            "does not split over Z"
        }
    );
    if let Some(p) = &chi0_profile {
        println!(
            "chi0 roots    {} integer, {} distinct real, {}",
            p.integer_roots.total_multiplicity(),
            p.distinct_real_root_count,
            if p.real_rooted {
                "real-rooted"
            } else {
                "not real-rooted"
            }
        );
    }
    if let Some(mut mu) = rank2_mobius {
        mu.sort_unstable();
        mu.dedup();
        println!("rank-2 mu     {{{}}}", join(&mu));
    }
    for (q, v, c) in &oracle {
        println!(
            "oracle q={q:<5} chi(q) = {v}, points = {c}: {}",
            if v == c { "agree" } else { "DISAGREE" }
        );
    }
    Ok(ok)
}

fn cmd_triple(g: &Global, a: &Arrangement, i: usize) -> Result<bool> {
    a.check_index(i)?;
    let dr = hyperarr::lattice::deletion_restriction_check(a, i)?;
    let restricted = a.restrict(i)?;
    let mut reports: Vec<CheckReport> = vec![
        checkers::deletion_restriction(a, i)?,
        checkers::b2_restriction(a, i)?,
    ];
    if let (Some(d), Some(e)) = (
        checkers::split_chi0_roots(a)?,
        checkers::split_chi0_roots(&restricted)?,
    ) {
        reports.push(checkers::avoidance(
            &d,
            &e,
            a.len(),
            restricted.len(),
            AvoidanceMode::Restriction,
        ));
    }
    let ok = !reports.iter().any(CheckReport::violated);
    if g.json {
        print_json(&json!({
            "index": i,
            "hyperplane": a.form(i).to_string(),
            "chi": dr.chi,
            "chiDeleted": dr.chi_deleted,
            "chiRestricted": dr.chi_restricted,
            "chiFactored": display_poly(&dr.chi),
            "chiDeletedFactored": display_poly(&dr.chi_deleted),
            "chiRestrictedFactored": display_poly(&dr.chi_restricted),
            "restrictionSize": restricted.len(),
            "reports": reports,
        }))?;
        return Ok(ok);
    }
    println!("arrangement   {}", label(a));
    println!("hyperplane    {i}: {} = 0", a.form(i));
    println!("chi(A)        {}", display_poly(&dr.chi));
    println!("chi(A')       {}", display_poly(&dr.chi_deleted));
    println!("chi(A^H)      {}", display_poly(&dr.chi_restricted));
    println!("|A^H|         {}", restricted.len());
    for r in &reports {
        println!("{r}");
    }
    Ok(ok)
}

fn target_string(t: &Target) -> String {
    match t {
        Target::Arrangement => "A".into(),
        Target::Hyperplane { index } => format!("H{index}"),
        Target::Flat { indices } => format!("X{{{}}}", join(indices)),
    }
}

fn cmd_scan(g: &Global, a: &Arrangement, freeness: bool) -> Result<bool> {
    let report = scan(
        a,
        &ScanOptions {
            freeness,
            freeness_options: freeness_options(g),
        },
    )?;
    if g.json {
        print_json(&report)?;
        return Ok(report.all_hold());
    }
    println!("arrangement   {}", label(a));
    if let Some(f) = &report.freeness {
        println!("freeness      {f}");
    }
    let show = |v: &Option<Integer>| v.as_ref().map_or("-".to_string(), Integer::to_string);
    println!(
        "{:<24} {:<26} {:<13} {:>8} {:>8}  detail",
        "target", "check", "verdict", "lhs", "rhs"
    );
    for it in &report.items {
        let r = &it.report;
        let mut detail = r.detail.clone();
        if r.equality == Some(true) && detail.is_empty() {
            detail = "equality".into();
        }
        println!(
            "{:<24} {:<26} {:<13} {:>8} {:>8}  {}",
            target_string(&it.target),
            r.check_name,
            r.verdict_word(),
            show(&r.lhs),
            show(&r.rhs),
            detail
        );
    }
    println!(
        "{} checks, {} violations",
        report.items.len(),
        report.violations
    );
    Ok(report.all_hold())
}

fn tuple(v: &[i64]) -> String {
    format!("({})", join(v))
}

fn cmd_forbidden(g: &Global, roots: &[i64], test: Option<&[i64]>) -> Result<bool> {
    if roots.iter().any(|&r| r < 1) {
        bail!("chi0 roots must be positive integers");
    }
    let mut d = roots.to_vec();
    d.sort_unstable();
    if let Some(e) = test {
        let mut e = e.to_vec();
        e.sort_unstable();
        let n_a = (d.iter().sum::<i64>() + 1) as usize;
        let n_sub = (e.iter().sum::<i64>() + 1) as usize;
        let to_int = |v: &[i64]| v.iter().map(|&x| Integer::from(x)).collect::<Vec<_>>();
        let r = checkers::avoidance(
            &to_int(&d),
            &to_int(&e),
            n_a,
            n_sub,
            AvoidanceMode::Restriction,
        );
        if g.json {
            print_json(&r)?;
        } else {
            println!("{r}");
        }
        return Ok(!r.violated());
    }
    let list = checkers::forbidden_patterns(&d);
    if g.json {
        print_json(&json!({ "roots": d, "forbidden": list }))?;
        return Ok(true);
    }
    if list.is_empty() {
        println!("none");
    }
    for e in &list {
        println!("{}", tuple(e));
    }
    Ok(true)
}

fn cmd_freeness(g: &Global, a: &Arrangement) -> Result<bool> {
    let v = freeness_with(a, &freeness_options(g))?;
    if g.json {
        print_json(&json!({ "name": a.name(), "summary": v.summary(), "verdict": v }))?;
        return Ok(true);
    }
    println!("arrangement   {}", label(a));
    println!("verdict       {}", v.summary());
    if let Some(basis) = &v.basis {
        for (k, theta) in basis.iter().enumerate() {
            println!(
                "theta_{}  (degree {})  {}",
                k + 1,
                theta.degree(),
                theta.to_string_with_partials()
            );
        }
    }
    Ok(true)
}

fn cmd_catalog(g: &Global, action: &CatalogAction) -> Result<bool> {
    match action {
        CatalogAction::List => {
            let list = catalog::list();
            if g.json {
                let rows: Vec<_> = list
                    .iter()
                    .map(|(n, d)| json!({ "name": n, "description": d }))
                    .collect();
                print_json(&rows)?;
            } else {
                for (n, d) in list {
                    println!("{n:<20} {d}");
                }
            }
        }
        CatalogAction::Emit { name } => {
            let e = catalog::get(name)?;
            if g.json {
                print_json(&json!({
                    "name": e.name,
                    "description": e.description,
                    "arrangement": e.arrangement,
                    "expected": e.expected,
                }))?;
            } else {
                print!("{}", e.arrangement.emit());
            }
        }
    }
    Ok(true)
}

fn cmd_selftest(g: &Global, fixture: Option<&PathBuf>, only: &[String]) -> Result<bool> {
    let mut entries = if only.is_empty() {
        catalog::all()
    } else {
        only.iter()
            .map(|n| catalog::get(n))
            .collect::<hyperarr::Result<Vec<_>>>()?
    };
    if let Some(path) = fixture {
        let text =
            fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let overrides: Vec<ExpectedOverride> =
            serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
        apply_overrides(&mut entries, &overrides)?;
    }
    let opts = SuiteOptions {
        primes: g.primes.clone(),
        freeness: freeness_options(g),
        ..SuiteOptions::default()
    };
    let report = run_suite(&entries, &opts)?;
    if g.json {
        print_json(&report)?;
        return Ok(report.all_passed());
    }
    for c in &report.checks {
        println!(
            "{:<4} {:<20} {:<24} {}",
            if c.passed { "ok" } else { "FAIL" },
            c.entry,
            c.check,
            c.detail
        );
    }
    println!("{} passed, {} failed", report.passed, report.failed);
    Ok(report.all_passed())
}
