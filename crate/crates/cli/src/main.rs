//! `kwsg`: command-line front end for Weierstrass semigroup computations on
//! Kummer extensions. Exit codes: 0 ok, 1 invalid profile, 2 bad arguments or
//! unreadable input, 3 oracle budget exceeded, 4 oracle disagreement.

mod cli;
mod output;

use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::Parser;
use kwsg_core::{
    CurvePreset, Error, KummerSemigroup, MaximalKind, Oracle, RamificationProfile, Verdict, Window,
    DEFAULT_BUDGET,
};
use serde_json::json;

use cli::{BoxScan, Cli, Command, Format, PresetCommand, ProfileArg};

const BUDGET_ENV: &str = "KWSG_BUDGET";

#[derive(Debug)]
enum Failure {
    InvalidProfile(String),
    BadArgs(String),
    Budget(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::InvalidProfile(_) => 1,
            Failure::BadArgs(_) => 2,
            Failure::Budget(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::InvalidProfile(m) | Failure::BadArgs(m) | Failure::Budget(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidProfile(_) | Error::InconsistentProfile(_) | Error::Overflow(_) => {
                Failure::InvalidProfile(e.to_string())
            }
            Error::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            _ => Failure::BadArgs(e.to_string()),
        }
    }
}

type CmdResult = Result<(String, u8), Failure>;

fn read_profile(arg: &ProfileArg) -> Result<RamificationProfile, Failure> {
    let path = &arg.profile;
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::BadArgs(format!("reading stdin: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Failure::BadArgs(format!("reading {}: {e}", path.display())))?
    };
    RamificationProfile::from_json(&text)
        .map_err(|e| Failure::BadArgs(format!("parsing profile {}: {e}", path.display())))
}

/// Loads and validates a profile, echoing warnings to stderr.
fn load(arg: &ProfileArg) -> Result<KummerSemigroup, Failure> {
    let profile = read_profile(arg)?;
    let report = profile.validate();
    for w in report.warnings() {
        eprintln!("{w}");
    }
    if !report.is_ok() {
        return Err(Failure::InvalidProfile(report.to_string()));
    }
    Ok(KummerSemigroup::new(profile)?)
}

fn budget() -> Result<u128, Failure> {
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|e| Failure::BadArgs(format!("{BUDGET_ENV}={v:?}: {e}"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn check_window(sg: &KummerSemigroup, w: &Window) -> Result<(), Failure> {
    if w.dim() != sg.n() {
        return Err(Failure::BadArgs(format!(
            "window has {} coordinates, profile has n = {}",
            w.dim(),
            sg.n()
        )));
    }
    Ok(())
}

fn ok(text: String) -> CmdResult {
    Ok((text, 0))
}

fn cmd_validate(input: &ProfileArg) -> CmdResult {
    let profile = read_profile(input)?;
    let report = profile.validate();
    let code = if report.is_ok() { 0 } else { 1 };
    Ok((format!("{report}\n"), code))
}

fn cmd_info(input: &ProfileArg) -> CmdResult {
    let sg = load(input)?;
    let p = sg.profile();
    let mut out = format!(
        "m = {}\nr = {}\nn = {}\ngenus = {}\n",
        p.m,
        p.places(),
        p.n,
        p.genus()?
    );
    let betas: Vec<String> = sg.table().betas().iter().map(|b| b.to_string()).collect();
    out.push_str(&format!("beta = [{}]\n", betas.join(",")));
    for kind in [MaximalKind::Absolute, MaximalKind::Relative] {
        out.push_str(&format!("|{kind}| = {}\n", sg.cardinality(kind)?));
    }
    ok(out)
}

fn cmd_classify(alpha: &[i64], format: Format, input: &ProfileArg) -> CmdResult {
    let sg = load(input)?;
    sg.check_arity(alpha)?;
    let c = sg.classify(alpha);
    let point = kwsg_core::LatticePoint(alpha.to_vec());
    ok(match format {
        Format::Text => format!("{c}\n"),
        Format::Csv => {
            let mut line = output::classified_csv(sg.n(), &[(point, c.clone())], true);
            line = line.replacen('\n', ",verdict\n", 1);
            let body_end = line.len() - 1;
            line.insert_str(body_end, &format!(",{}", c.verdict));
            line
        }
        Format::Json => output::envelope(
            sg.profile(),
            json!({ "command": "classify", "alpha": alpha }),
            output::classified_json(&[(point, c)]),
        ),
    })
}

fn cmd_maximal(
    kind: MaximalKind,
    window: Option<&Window>,
    format: Format,
    input: &ProfileArg,
) -> CmdResult {
    let sg = load(input)?;
    let elems = match window {
        Some(w) => {
            check_window(&sg, w)?;
            sg.enumerate_maximal_in_window(kind, w)?
        }
        None => sg.enumerate_minimal_generating(kind)?,
    };
    ok(match format {
        Format::Csv | Format::Text => output::maximal_csv(sg.n(), kind, &elems),
        Format::Json => output::envelope(
            sg.profile(),
            json!({
                "command": "maximal",
                "kind": kind,
                "window": window.map(|w| w.to_string()),
                "generating": window.is_none(),
            }),
            output::maximal_json(kind, &elems),
        ),
    })
}

fn cmd_count(kind: MaximalKind, format: Format, input: &ProfileArg) -> CmdResult {
    let sg = load(input)?;
    let count = sg.cardinality(kind)?;
    ok(match format {
        Format::Text => format!("{count}\n"),
        Format::Csv => format!("kind,cardinality\n{kind},{count}\n"),
        Format::Json => output::envelope(
            sg.profile(),
            json!({ "command": "count", "kind": kind }),
            json!([{ "kind": kind, "cardinality": count }]),
        ),
    })
}

fn cmd_blocks(kind: MaximalKind, format: Format, input: &ProfileArg) -> CmdResult {
    let sg = load(input)?;
    let n = sg.n() as i64;
    let rows: Vec<(i64, usize, u128)> = sg
        .block_counts(kind)
        .into_iter()
        .map(|(k, c)| {
            let weight = kwsg_core::maximal::binomial(k + n - 1, n - 1)
                .and_then(|b| b.checked_mul(c as u128))
                .ok_or(Error::Overflow("block weight"))?;
            Ok((k, c, weight))
        })
        .collect::<Result<_, Error>>()?;
    ok(match format {
        Format::Csv | Format::Text => {
            let mut out = String::from("k,block_count,weighted\n");
            for (k, c, w) in &rows {
                out.push_str(&format!("{k},{c},{w}\n"));
            }
            out
        }
        Format::Json => output::envelope(
            sg.profile(),
            json!({ "command": "blocks", "kind": kind }),
            rows.iter()
                .map(|(k, c, w)| json!({ "k": k, "block_count": c, "weighted": w }))
                .collect(),
        ),
    })
}

#[derive(Clone, Copy)]
enum ScanKind {
    Gaps,
    PureGaps,
    Semigroup,
}

fn cmd_scan(which: ScanKind, scan: &BoxScan) -> CmdResult {
    let sg = load(&scan.input)?;
    check_window(&sg, &scan.bounds)?;
    let keep = |v: Verdict| match which {
        ScanKind::Gaps => matches!(v, Verdict::Gap | Verdict::PureGap),
        ScanKind::PureGaps => v == Verdict::PureGap,
        ScanKind::Semigroup => v == Verdict::Member,
    };
    let rows: Vec<_> = sg
        .classify_box(&scan.bounds)?
        .into_iter()
        .filter(|(_, c)| keep(c.verdict))
        .collect();
    let name = match which {
        ScanKind::Gaps => "gaps",
        ScanKind::PureGaps => "puregaps",
        ScanKind::Semigroup => "semigroup",
    };
    ok(match scan.format {
        Format::Csv => output::classified_csv(sg.n(), &rows, !matches!(which, ScanKind::Semigroup)),
        Format::Text => output::classified_text(&rows),
        Format::Json => output::envelope(
            sg.profile(),
            json!({ "command": name, "box": scan.bounds.to_string() }),
            output::classified_json(&rows),
        ),
    })
}

fn cmd_preset(cmd: &PresetCommand) -> CmdResult {
    let preset = match *cmd {
        PresetCommand::Separable { m, t, places } => CurvePreset::separable(m, t, places),
        PresetCommand::Xabns {
            p,
            a,
            b,
            nexp,
            s,
            places,
        } => CurvePreset::xabns(p, a, b, nexp, s, places),
        PresetCommand::Yns { q, nexp, s, places } => CurvePreset::yns(q, nexp, s, places),
        PresetCommand::BeelenMontanucci { q, nexp, places } => {
            CurvePreset::beelen_montanucci(q, nexp, places)
        }
    }?;
    for w in preset.profile.validate().warnings() {
        eprintln!("{w}");
    }
    ok(format!("{}\n", preset.profile.to_json()))
}

fn cmd_oracle(kind: MaximalKind, window: &Window, format: Format, input: &ProfileArg) -> CmdResult {
    let sg = load(input)?;
    check_window(&sg, window)?;
    let report = Oracle::new(&sg)
        .with_budget(budget()?)
        .crosscheck_window(kind, window)?;
    let code = if report.agree { 0 } else { 4 };
    let text = match format {
        Format::Text | Format::Csv => format!("{report}\n"),
        Format::Json => output::envelope(
            sg.profile(),
            json!({ "command": "oracle", "kind": kind, "window": window.to_string() }),
            json!([report]),
        ),
    };
    Ok((text, code))
}

fn run(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Validate(input) => cmd_validate(input),
        Command::Info(input) => cmd_info(input),
        Command::Classify {
            alpha,
            format,
            input,
        } => cmd_classify(alpha, *format, input),
        Command::Maximal {
            kind,
            window,
            format,
            input,
            ..
        } => cmd_maximal((*kind).into(), window.as_ref(), *format, input),
        Command::Count {
            kind,
            format,
            input,
        } => cmd_count((*kind).into(), *format, input),
        Command::Blocks {
            kind,
            format,
            input,
        } => cmd_blocks((*kind).into(), *format, input),
        Command::Gaps(scan) => cmd_scan(ScanKind::Gaps, scan),
        Command::Puregaps(scan) => cmd_scan(ScanKind::PureGaps, scan),
        Command::Semigroup(scan) => cmd_scan(ScanKind::Semigroup, scan),
        Command::Preset(cmd) => cmd_preset(cmd),
        Command::Oracle {
            kind,
            window,
            format,
            input,
        } => cmd_oracle((*kind).into(), window, *format, input),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok((text, code)) => {
            let mut stdout = io::stdout().lock();
            if let Err(e) = stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
            {
                if e.kind() != io::ErrorKind::BrokenPipe {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            }
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
