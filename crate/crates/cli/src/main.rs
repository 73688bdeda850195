//! Command-line front end for the `rogers-eqn-core` library.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on usage or
//! domain errors.

mod report;

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rogers_eqn_core::chords::{crossing_set, enumerate_chords, Chord};
use rogers_eqn_core::coords::{dihedral_coords, sample_cell};
use rogers_eqn_core::reduction::{certificate, verify_certificate, verify_eqn, NumericOptions};
use rogers_eqn_core::relations::{degenerate, wedge_sum};
use serde::Serialize;

use report::{
    chord, chords, rational, CertificateJson, ChordEntry, CoordsJson, DegenerateJson, PieceJson,
    ResidualJson, Term, VerifyJson, WedgeJson,
};

#[derive(Parser)]
#[command(
    name = "rogers-eqn",
    version,
    about = "Verify the Eq_n Rogers dilogarithm identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the chords of the n-gon and their crossing sets.
    Chords {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Check Eq_n numerically on sampled points of the standard cell.
    Verify {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        numeric: Numeric,
        #[command(flatten)]
        out: Output,
    },
    /// Check that the exterior-square sum over crossing pairs vanishes.
    Wedge {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Build the reduction certificate of Eq_n and verify it.
    Certify {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        numeric: Numeric,
        #[command(flatten)]
        out: Output,
    },
    /// Specialize one coordinate to zero.
    Degenerate {
        #[arg(long)]
        n: usize,
        /// Chord as "i,j".
        #[arg(long)]
        chord: String,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args)]
struct Numeric {
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    #[arg(long, default_value_t = 1e-3)]
    margin: f64,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

enum Status {
    Pass,
    Fail(String),
}

impl Numeric {
    fn options(&self) -> anyhow::Result<NumericOptions> {
        if self.samples == 0 {
            bail!("--samples must be positive");
        }
        if !(self.tol.is_finite() && self.tol > 0.0) {
            bail!("--tol must be a positive number, got {}", self.tol);
        }
        if !(self.margin > 0.0 && self.margin < 0.5) {
            bail!("--margin must lie in (0, 0.5), got {}", self.margin);
        }
        Ok(NumericOptions {
            samples: self.samples,
            seed: self.seed,
            tol: self.tol,
            margin: self.margin,
        })
    }
}

impl Output {
    fn emit<T: Serialize>(&self, json: &T, text: impl FnOnce() -> String) -> anyhow::Result<()> {
        let body = match self.format {
            Format::Json => serde_json::to_string_pretty(json)? + "\n",
            Format::Text => text(),
        };
        match &self.out {
            Some(path) => {
                fs::write(path, body).with_context(|| format!("writing {}", path.display()))
            }
            None => {
                print!("{body}");
                Ok(())
            }
        }
    }
}

fn parse_chord(n: usize, s: &str) -> anyhow::Result<Chord> {
    let parts: Vec<&str> = s
        .trim()
        .trim_matches(|c| c == '{' || c == '}')
        .split(',')
        .collect();
    let [a, b] = parts.as_slice() else {
        bail!("expected a chord \"i,j\", got {s:?}");
    };
    let a = a
        .trim()
        .parse()
        .with_context(|| format!("bad chord {s:?}"))?;
    let b = b
        .trim()
        .parse()
        .with_context(|| format!("bad chord {s:?}"))?;
    Ok(Chord::new(n, a, b)?)
}

fn cmd_chords(n: usize, out: &Output) -> anyhow::Result<Status> {
    let all = enumerate_chords(n)?;
    let entries: Vec<ChordEntry> = all
        .iter()
        .map(|c| ChordEntry {
            chord: chord(c),
            crossing: chords(&crossing_set(c)),
        })
        .collect();
    out.emit(&entries, || {
        let mut s = format!("{} chords of the {n}-gon\n", all.len());
        for c in &all {
            let crossing: Vec<String> = crossing_set(c).iter().map(|d| d.to_string()).collect();
            let _ = writeln!(s, "{c:<8} crosses {}", crossing.join(" "));
        }
        s
    })?;
    Ok(Status::Pass)
}

fn cmd_verify(n: usize, numeric: &Numeric, out: &Output) -> anyhow::Result<Status> {
    let opts = numeric.options()?;
    let r = verify_eqn(n, &opts)?;
    let worst = dihedral_coords(&sample_cell(
        n,
        opts.seed + r.worst_sample as u64,
        opts.margin,
    )?)?;
    let passed = r.passed(opts.tol);
    let json = VerifyJson {
        n,
        samples: opts.samples,
        seed: opts.seed,
        tol: opts.tol,
        margin: opts.margin,
        constant_l1: rational(r.constant),
        max_residual: r.max_residual,
        worst_sample: r.worst_sample,
        max_chord_residual: r.max_chord_residual,
        worst_chord_sample: r.worst_chord_sample,
        passed,
        worst_config: CoordsJson::from(&worst),
    };
    out.emit(&json, || {
        format!(
            "Eq_{n}: sum of L(u) = {} L(1)\n\
             samples {} from seed {}, margin {:e}\n\
             max |residual|        {:.3e} (sample offset {})\n\
             max crossing residual {:.3e} (sample offset {})\n\
             {} at tolerance {:e}\n",
            r.constant,
            opts.samples,
            opts.seed,
            opts.margin,
            r.max_residual,
            r.worst_sample,
            r.max_chord_residual,
            r.worst_chord_sample,
            if passed { "PASS" } else { "FAIL" },
            opts.tol,
        )
    })?;
    Ok(if passed {
        Status::Pass
    } else {
        Status::Fail(format!(
            "Eq_{n} residual {:e} (crossing {:e}) exceeds {:e} at sample offset {}",
            r.max_residual, r.max_chord_residual, opts.tol, r.worst_sample
        ))
    })
}

fn cmd_wedge(n: usize, out: &Output) -> anyhow::Result<Status> {
    let sum = wedge_sum(n)?;
    let terms: Vec<Term<_>> = sum
        .iter()
        .map(|(p, k)| Term {
            symbol: [chord(p.first()), chord(p.second())],
            coefficient: k,
        })
        .collect();
    let zero = sum.is_zero();
    let json = WedgeJson { n, zero, terms };
    out.emit(&json, || {
        let mut s = format!(
            "sum over crossing pairs of c ^ c' for n = {n}: {}\n",
            if zero { "0" } else { "nonzero" }
        );
        for (p, k) in sum.iter() {
            let _ = writeln!(s, "  {k:+} {} ^ {}", p.first(), p.second());
        }
        s
    })?;
    Ok(if zero {
        Status::Pass
    } else {
        Status::Fail(format!("{} nonzero terms", sum.len()))
    })
}

fn cmd_certify(n: usize, numeric: &Numeric, out: &Output) -> anyhow::Result<Status> {
    let opts = numeric.options()?;
    let cert = certificate(n)?;
    let r = verify_certificate(&cert, &opts)?;
    let json = CertificateJson::new(&cert, r.structural.expansion_ok);
    out.emit(&json, || {
        let mut s = format!(
            "certificate for Eq_{n} ({} case), {} instances\n",
            cert.case().as_str(),
            cert.instances().len()
        );
        for inst in cert.instances() {
            let e = &inst.instance;
            let _ = writeln!(
                s,
                "  {:+} {:<10} J={:?} on a {}-gon, {} L(1)",
                inst.sign,
                e.kind().as_str(),
                e.forgotten(),
                e.target_size(),
                e.constant()
            );
        }
        let _ = writeln!(
            s,
            "expansion {}, constants {} (total {} L(1)), recursion {}",
            ok(r.structural.expansion_ok),
            ok(r.structural.constant_ok),
            r.structural.constant_total,
            ok(r.structural.recursion_ok)
        );
        let _ = writeln!(
            s,
            "max instance residual {:.3e}, max combination residual {:.3e} over {} samples",
            r.max_instance_residual, r.max_combination_residual, opts.samples
        );
        let _ = writeln!(s, "{}", if r.passed() { "PASS" } else { "FAIL" });
        s
    })?;
    Ok(if r.passed() {
        Status::Pass
    } else if !r.structural.passed() {
        Status::Fail(format!(
            "structural check failed with {} discrepancies",
            r.structural.discrepancies.len()
        ))
    } else {
        Status::Fail(format!(
            "instance residual {:e}, combination residual {:e} exceed {:e}",
            r.max_instance_residual, r.max_combination_residual, opts.tol
        ))
    })
}

fn ok(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "FAILED"
    }
}

fn cmd_degenerate(n: usize, c: &str, out: &Output) -> anyhow::Result<Status> {
    let c = parse_chord(n, c)?;
    let d = degenerate(&c);
    let (n1, n2) = d.sizes();
    let reflection = n == 5 && d.residual_relations.iter().all(|r| r.is_reflection());
    let json = DegenerateJson {
        n,
        chord: chord(&c),
        forced_one: chords(&d.forced_one),
        sizes: [n1, n2],
        pieces: d
            .split
            .iter()
            .map(|p| PieceJson {
                vertices: p.vertices().to_vec(),
                size: p.size(),
                chords: chords(&p.chords(n)),
            })
            .collect(),
        residual_relations: d
            .residual_relations
            .iter()
            .map(|r| ResidualJson {
                chord: chord(&r.chord),
                partners: chords(&r.partners),
            })
            .collect(),
        reflection,
    };
    out.emit(&json, || {
        let u = |c: &Chord| format!("u_{{{},{}}}", c.i(), c.j());
        let mut s = format!("setting {} = 0 in the {n}-gon\n", u(&c));
        let forced: Vec<String> = d.forced_one.iter().map(u).collect();
        let _ = writeln!(s, "forced: {} = 1", forced.join(" = "));
        let _ = writeln!(s, "split sizes: ({n1}, {n2}), n1 + n2 = {}", n1 + n2);
        for r in &d.residual_relations {
            if r.partners.is_empty() || (r.is_reflection() && r.partners[0] < r.chord) {
                continue;
            }
            let partners: Vec<String> = r.partners.iter().map(u).collect();
            let _ = writeln!(s, "  {} + {} = 1", u(&r.chord), partners.join("*"));
        }
        if reflection {
            let _ = writeln!(s, "the surviving relation is the reflection relation");
        }
        s
    })?;
    Ok(Status::Pass)
}

fn run(cli: Cli) -> anyhow::Result<Status> {
    match &cli.command {
        Command::Chords { n, out } => cmd_chords(*n, out),
        Command::Verify { n, numeric, out } => cmd_verify(*n, numeric, out),
        Command::Wedge { n, out } => cmd_wedge(*n, out),
        Command::Certify { n, numeric, out } => cmd_certify(*n, numeric, out),
        Command::Degenerate { n, chord, out } => cmd_degenerate(*n, chord, out),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(Status::Pass) => ExitCode::SUCCESS,
        Ok(Status::Fail(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
