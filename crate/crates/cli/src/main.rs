use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use betaquad::algebra::{parse_rat, Rat};
use betaquad::esystem::{
    decide_beta, min_poly_beta, recover_d, square_of_quadratic, LinearSolution, QuarticCoeffs,
};
use betaquad::families::{self, FamilyId, FamilyRecord};
use betaquad::lemma_ec::{the_curve, torsion_report};
use betaquad::surface::disc::{region_csv, region_grid, region_svg};
use betaquad::surface::param::param_eval;
use betaquad::surface::search::{search_box, to_csv, SearchOptions};
use betaquad::verify::{run_suite, Suite};
use betaquad::Error;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "betaquad",
    version,
    about = "Decide when 4a^4/(a^4-1) - a/(a-1) is quadratic over Q(a)"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

fn rat_arg(s: &str) -> Result<Rat, String> {
    parse_rat(s).map_err(|e| e.to_string())
}

#[derive(Args)]
struct Quartic {
    #[arg(long, value_parser = rat_arg, allow_hyphen_values = true)]
    a: Rat,
    #[arg(long, value_parser = rat_arg, allow_hyphen_values = true)]
    b: Rat,
    #[arg(long, value_parser = rat_arg, allow_hyphen_values = true)]
    c: Rat,
    #[arg(long, value_parser = rat_arg, allow_hyphen_values = true)]
    d: Rat,
}

impl Quartic {
    fn coeffs(&self) -> QuarticCoeffs {
        QuarticCoeffs::new(
            self.a.clone(),
            self.b.clone(),
            self.c.clone(),
            self.d.clone(),
        )
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide whether beta is quadratic for x^4 + a x^3 + b x^2 + c x + d.
    Check {
        #[command(flatten)]
        q: Quartic,
        /// Exit 1 when the quartic is reducible.
        #[arg(long)]
        require_irreducible: bool,
        #[arg(long)]
        json: bool,
    },
    /// Minimal polynomial data of beta over Q.
    Minpoly {
        #[command(flatten)]
        q: Quartic,
    },
    /// One member of a family.
    Family {
        #[arg(long)]
        id: String,
        /// Family parameter; `a` for cbranch.
        #[arg(long, value_parser = rat_arg, allow_hyphen_values = true)]
        t: Rat,
        /// The cbranch parameter `u`.
        #[arg(long, value_parser = rat_arg, allow_hyphen_values = true)]
        u: Option<Rat>,
    },
    /// A family over an inclusive grid of parameters, as CSV.
    FamilyScan {
        #[arg(long)]
        id: String,
        #[arg(long, value_parser = rat_arg, allow_hyphen_values = true)]
        t_from: Rat,
        #[arg(long, value_parser = rat_arg, allow_hyphen_values = true)]
        t_to: Rat,
        #[arg(long, value_parser = rat_arg)]
        t_step: Rat,
        #[arg(long, value_parser = rat_arg, allow_hyphen_values = true)]
        u: Option<Rat>,
        /// Output path; `-` for standard output.
        #[arg(long)]
        csv: PathBuf,
    },
    /// Integer points of F(a, b, c) = 0 over a box.
    Search {
        #[arg(long, allow_hyphen_values = true)]
        amin: i64,
        #[arg(long, allow_hyphen_values = true)]
        amax: i64,
        #[arg(long, allow_hyphen_values = true)]
        bmin: i64,
        #[arg(long, allow_hyphen_values = true)]
        bmax: i64,
        #[arg(long)]
        threads: Option<usize>,
        /// Keep only integral d.
        #[arg(long)]
        integral: bool,
        #[arg(long)]
        csv: PathBuf,
    },
    /// Values of d that make the system for (a, b, c) solvable.
    SolveD {
        #[arg(long, value_parser = rat_arg, allow_hyphen_values = true)]
        a: Rat,
        #[arg(long, value_parser = rat_arg, allow_hyphen_values = true)]
        b: Rat,
        #[arg(long, value_parser = rat_arg, allow_hyphen_values = true)]
        c: Rat,
    },
    /// The rational parametrization at (a, t).
    Param {
        #[arg(long, value_parser = rat_arg, allow_hyphen_values = true)]
        a: Rat,
        #[arg(long, value_parser = rat_arg, allow_hyphen_values = true)]
        t: Rat,
    },
    /// Sign of -a P1(a, t) on a lattice.
    Region {
        #[arg(long, value_parser = rat_arg)]
        step: Rat,
        #[arg(long, value_parser = rat_arg, allow_hyphen_values = true, default_value = "0")]
        amin: Rat,
        #[arg(long, value_parser = rat_arg, allow_hyphen_values = true, default_value = "10")]
        amax: Rat,
        #[arg(long, value_parser = rat_arg, allow_hyphen_values = true, default_value = "-10")]
        tmin: Rat,
        #[arg(long, value_parser = rat_arg, allow_hyphen_values = true, default_value = "10")]
        tmax: Rat,
        #[arg(long)]
        csv: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Run a verification suite; JSON report, exit 1 if any check fails.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Rational torsion of U^2 = X^3 + 6X^2 - 20X + 8.
    Torsion,
}

enum Failure {
    Usage(String),
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn write_out(path: &Path, text: &str) -> Outcome {
    if path.as_os_str() == "-" {
        print!("{text}");
        return Ok(());
    }
    fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn print_json(v: &impl serde::Serialize) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn opt(r: &Option<Rat>) -> String {
    r.as_ref().map_or("-".into(), Rat::to_string)
}

fn check(q: &Quartic, require_irreducible: bool, as_json: bool) -> Outcome {
    let k = q.coeffs();
    let v = decide_beta(&k)?;
    if as_json {
        let mut obj = serde_json::to_value(&v).expect("serializable");
        if let Value::Object(m) = &mut obj {
            m.insert("coeffs".into(), json!(k));
        }
        print_json(&obj);
    } else {
        println!("f: {}", k.f().to_text("x"));
        println!("kind: {}", v.kind);
        println!("p: {}", opt(&v.p));
        println!("q: {}", opt(&v.q));
        println!("disc: {}", opt(&v.disc));
        println!("real: {}", v.real.map_or("-".into(), |b| b.to_string()));
        println!("irreducible: {}", v.f_irreducible);
        if !v.notes.is_empty() {
            println!("notes: {}", v.notes);
        }
    }
    if require_irreducible && !v.f_irreducible {
        return Err(Failure::Check);
    }
    Ok(())
}

fn minpoly(q: &Quartic) -> Outcome {
    let r = min_poly_beta(&q.coeffs())?;
    println!("{}", r.to_text("Y"));
    if let Some((p, q)) = square_of_quadratic(&r) {
        println!("square of Y^2 + ({p})*Y + ({q})");
    }
    Ok(())
}

fn member(id: FamilyId, t: &Rat, u: Option<&Rat>) -> Result<FamilyRecord, Failure> {
    Ok(match id {
        FamilyId::F1 => families::family1(t)?,
        FamilyId::F2 => families::family2(t)?,
        FamilyId::Circle => families::circle_family(t)?,
        FamilyId::Cbranch => {
            let u = u.ok_or_else(|| Failure::Usage("cbranch needs --u".into()))?;
            families::c_branch(t, u)?
        }
    })
}

fn family_scan(
    id: FamilyId,
    from: &Rat,
    to: &Rat,
    step: &Rat,
    u: Option<&Rat>,
    out: &Path,
) -> Outcome {
    if *step <= Rat::from_integer(0.into()) {
        return Err(Failure::Usage("--t-step must be positive".into()));
    }
    let mut text = format!("{}\n", families::CSV_HEADER);
    let mut t = from.clone();
    while t <= *to {
        match member(id, &t, u) {
            Ok(r) => {
                text.push_str(&r.csv_row());
                text.push('\n');
            }
            Err(Failure::Usage(msg)) => eprintln!("skipped t = {t}: {msg}"),
            Err(Failure::Check) => unreachable!(),
        }
        t += step;
    }
    write_out(out, &text)
}

fn solve_d(a: &Rat, b: &Rat, c: &Rat) {
    let cands = recover_d(a, b, c);
    if cands.is_empty() {
        println!("no d");
    }
    for k in cands {
        match k.solution {
            LinearSolution::Unique { p, q } => println!("d = {}: p = {p}, q = {q}", k.d),
            LinearSolution::RankOne => println!("d = {}: rational beta", k.d),
            LinearSolution::RankZero => println!("d = {}: every (p, q)", k.d),
            LinearSolution::Inconsistent => println!("d = {}: inconsistent", k.d),
        }
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.cmd {
        Cmd::Check {
            q,
            require_irreducible,
            json,
        } => check(&q, require_irreducible, json),
        Cmd::Minpoly { q } => minpoly(&q),
        Cmd::Family { id, t, u } => {
            let r = member(FamilyId::from_name(&id)?, &t, u.as_ref())?;
            print_json(&r);
            Ok(())
        }
        Cmd::FamilyScan {
            id,
            t_from,
            t_to,
            t_step,
            u,
            csv,
        } => family_scan(
            FamilyId::from_name(&id)?,
            &t_from,
            &t_to,
            &t_step,
            u.as_ref(),
            &csv,
        ),
        Cmd::Search {
            amin,
            amax,
            bmin,
            bmax,
            threads,
            integral,
            csv,
        } => {
            let mut opts = SearchOptions {
                integral,
                ..SearchOptions::default()
            };
            if let Some(n) = threads {
                opts.threads = n;
            }
            let sols = search_box((amin, amax), (bmin, bmax), &opts)?;
            write_out(&csv, &to_csv(&sols))?;
            eprintln!("{} points", sols.len());
            Ok(())
        }
        Cmd::SolveD { a, b, c } => {
            solve_d(&a, &b, &c);
            Ok(())
        }
        Cmd::Param { a, t } => {
            print_json(&param_eval(&a, &t)?);
            Ok(())
        }
        Cmd::Region {
            step,
            amin,
            amax,
            tmin,
            tmax,
            csv,
            svg,
        } => {
            let cells = region_grid((&amin, &amax), (&tmin, &tmax), &step)?;
            write_out(&csv, &region_csv(&cells))?;
            if let Some(path) = svg {
                write_out(&path, &region_svg(&cells))?;
            }
            Ok(())
        }
        Cmd::Verify { suite } => {
            let items = run_suite(Suite::from_name(&suite)?);
            print_json(&items);
            if items.iter().all(|i| i.holds) {
                Ok(())
            } else {
                Err(Failure::Check)
            }
        }
        Cmd::Torsion => {
            print_json(&torsion_report(&the_curve())?);
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
