use std::fmt::Write;
use std::io::Read;
use std::path::Path;

use anyhow::{bail, Context, Result};
use zbin_core::center::{self, BRUTEFORCE_MAX_ORDER};
use zbin_core::text::{parse_table, render_mask, render_table};
use zbin_core::verify::{self, Mode, TheoremId, Verifier};
use zbin_core::{box_product, Groupoid, LinearCoeffs};

use crate::{CenterCommand, Command, LinearCommand};

/// Trials used by `classify` when the order is too large for brute force.
const SCREEN_TRIALS: usize = 1000;

pub struct Output {
    pub text: String,
    pub code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn load_table(path: &Path) -> Result<Groupoid> {
    let text = read_input(path)?;
    parse_table(&text).with_context(|| format!("parsing {}", path.display()))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn run(command: &Command) -> Result<Output> {
    match command {
        Command::Classify { file } => classify(&load_table(file)?).map(Output::ok),
        Command::Box { first, second } => {
            let product = box_product(&load_table(first)?, &load_table(second)?)?;
            Ok(Output::ok(render_table(&product)))
        }
        Command::Center(cmd) => center_cmd(cmd).map(Output::ok),
        Command::Verify {
            id,
            order,
            sample,
            seed,
        } => verify_cmd(id, *order, *sample, *seed),
        Command::Linear(LinearCommand::Compose { coeffs, modulus }) => {
            let [a, b, c, d, e, f] = coeffs[..] else {
                bail!("expected six coefficients");
            };
            let inner = LinearCoeffs::new(*modulus, a, b, c)?;
            let outer = LinearCoeffs::new(*modulus, d, e, f)?;
            Ok(Output::ok(format!("{}\n", inner.compose(&outer)?)))
        }
    }
}

pub fn classify(g: &Groupoid) -> Result<String> {
    let mut out = String::new();
    let n = g.order();
    writeln!(out, "order: {n}")?;
    writeln!(out, "idempotent: {}", yes_no(g.is_idempotent()))?;
    writeln!(out, "commutative: {}", yes_no(g.is_commutative()))?;
    match g.associativity_witness() {
        None => writeln!(out, "associative: yes")?,
        Some([x, y, z]) => writeln!(out, "associative: no (witness {x} {y} {z})")?,
    }
    writeln!(out, "left-zero: {}", yes_no(g.is_left_zero()))?;
    writeln!(out, "right-zero: {}", yes_no(g.is_right_zero()))?;
    writeln!(out, "orientation: {}", yes_no(g.has_orientation_property()))?;
    writeln!(out, "travel: {}", yes_no(g.is_travel_groupoid()))?;
    let locally_zero = center::is_locally_zero(g);
    writeln!(out, "locally-zero: {}", yes_no(locally_zero))?;
    if locally_zero {
        writeln!(out, "mask: {}", center::to_mask(g)?)?;
    }
    if n <= BRUTEFORCE_MAX_ORDER {
        writeln!(
            out,
            "central: {} (brute force)",
            yes_no(center::is_in_center_bruteforce(g)?)
        )?;
    } else if center::is_in_center_sampled(g, SCREEN_TRIALS, 0)? {
        writeln!(out, "central: no witness found (sampled screen)")?;
    } else {
        writeln!(out, "central: no (sampled screen)")?;
    }
    Ok(out)
}

fn render_tables(tables: impl Iterator<Item = Groupoid>) -> String {
    tables
        .map(|g| render_table(&g))
        .collect::<Vec<_>>()
        .join("\n")
}

fn render_masks(tables: impl Iterator<Item = Groupoid>) -> Result<String> {
    let mut out = String::new();
    for g in tables {
        writeln!(out, "{}", render_mask(&center::to_mask(&g)?))?;
    }
    Ok(out)
}

fn center_cmd(cmd: &CenterCommand) -> Result<String> {
    match *cmd {
        CenterCommand::Enumerate { n, masks } => {
            let all = center::enumerate_locally_zero(n)?;
            if masks {
                render_masks(all)
            } else {
                Ok(render_tables(all))
            }
        }
        CenterCommand::Count { n, iso } => {
            let total = center::enumerate_locally_zero(n)?.count();
            if iso {
                let classes = center::count_iso_classes(n)?;
                Ok(format!("{total} total, {classes} classes\n"))
            } else {
                Ok(format!("{total}\n"))
            }
        }
        CenterCommand::Bruteforce { n, masks } => {
            let members = center::center_bruteforce(n)?;
            if masks {
                render_masks(members.into_iter())
            } else {
                Ok(render_tables(members.into_iter()))
            }
        }
    }
}

fn verify_cmd(id: &str, order: usize, sample: Option<usize>, seed: u64) -> Result<Output> {
    let verifier = Verifier::default();
    let reports = if id.eq_ignore_ascii_case("all") {
        let budget = sample.unwrap_or(verify::DEFAULT_BUDGET);
        verifier.run_all_with_budget(order, seed, budget)?
    } else {
        let id: TheoremId = id.parse()?;
        let (mode, budget) = match sample {
            Some(k) => (Mode::Sampled, k),
            None => (Mode::Exhaustive, 1),
        };
        vec![verifier.run_check(id, order, mode, budget, seed)?]
    };
    let mut text = String::new();
    for r in &reports {
        writeln!(text, "{r}")?;
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    if reports.len() > 1 {
        writeln!(
            text,
            "{} of {} checks passed",
            reports.len() - failed,
            reports.len()
        )?;
    }
    Ok(Output {
        text,
        code: if failed == 0 { 0 } else { 1 },
    })
}
