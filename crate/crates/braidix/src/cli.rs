//! Command-line front end. The binary is a thin shim over this module;
//! every subcommand delegates to the library and prints deterministic text.
//!
//! Exit codes: 0 success, 1 computation refusal (budget/overflow), 2 usage
//! error.

use crate::cabling::{cable_word, two_cable, CablePattern};
use crate::census::{
    dn_pipeline, exhaust_length9, markov_reduction_search, reduction_search, run_census,
    CensusOptions, DnOptions, Exhaust9Options, LayerOutcome,
};
use crate::criteria::{report_for_invariants, ReportOptions};
use crate::error::Error;
use crate::genus::{
    band_parse_search, bennequin_lower, canonical_genus_slack, morton_conjecture_check,
    positive_genus,
};
use crate::invariants::{alexander_from_homfly, degree_stats, jones_from_homfly, HomflyEngine};
use crate::verify::{run_suite, Outcome, SuiteConfig};
use crate::word::BraidWord;
use clap::{Args, Parser, Subcommand};
use std::io::Write;

#[derive(Parser)]
#[command(
    name = "braidix",
    version,
    about = "Braid words, closure invariants and braid index bounds"
)]
struct Cli {
    /// Worker threads for parallel commands (default: all processors).
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct WordArg {
    /// Braid word: whitespace-separated signed generator indices, with an
    /// optional leading `n=<k>;` pinning the strand count.
    word: String,
    /// Strand count override.
    #[arg(long)]
    strands: Option<usize>,
}

impl WordArg {
    fn parse_word(&self) -> Result<BraidWord, Error> {
        BraidWord::parse(&self.word, self.strands)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Skein, Jones and Alexander polynomials with degree statistics.
    Invariants(WordArg),
    /// Braid index lower bounds with per-criterion provenance.
    Criteria {
        #[command(flatten)]
        word: WordArg,
        /// Externally supplied 3-braid exclusion verdict.
        #[arg(long)]
        murakami_excludes_3: Option<bool>,
        /// Emit machine-readable key=value lines instead of aligned text.
        #[arg(long)]
        records: bool,
    },
    /// Satellite braid with a closed-braid pattern.
    Cable {
        #[command(flatten)]
        word: WordArg,
        /// Pattern braid word (in its own strand count).
        #[arg(long)]
        pattern: String,
    },
    /// Connected or disconnected 2-cable with an explicit writhe.
    TwoCable {
        #[command(flatten)]
        word: WordArg,
        #[arg(long)]
        writhe: i64,
    },
    /// Enumerate canonical positive words and their closure records.
    Census {
        #[arg(long)]
        strands: usize,
        #[arg(long)]
        crossings: usize,
        /// Write records here instead of stdout.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Search for a positive representation on fewer strands.
    Reduce {
        #[command(flatten)]
        word: WordArg,
        /// State budget.
        #[arg(long, default_value_t = 200_000)]
        budget: usize,
        /// Allow Markov detours through inserted cancelling pairs.
        #[arg(long)]
        detours: bool,
    },
    /// Least crossing number of an irreducible positive braid.
    Dn {
        #[arg(long)]
        strands: usize,
        #[arg(long)]
        max_crossings: usize,
    },
    /// The three-stage length-9 exhaustion.
    Exhaust9 {
        /// Disable the per-letter occurrence minima (sanity mode).
        #[arg(long)]
        no_count_filter: bool,
    },
    /// Genus bounds, band presentation and degree comparisons.
    Genus(WordArg),
    /// Run the published-results regression suite.
    VerifyPaper {
        /// Include the long-running items (hours).
        #[arg(long)]
        long: bool,
    },
}

/// Parse arguments and run; returns the process exit code.
pub fn dispatch<W: Write>(args: &[String], out: &mut W) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(out, "{e}");
            return 2;
        }
    };
    if let Some(workers) = cli.workers {
        // a later duplicate initialization is harmless; ignore the error
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global();
    }
    match run(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(out, "error: {e}");
            match e {
                Error::Budget { .. } | Error::Overflow => 1,
                _ => 2,
            }
        }
    }
}

fn run<W: Write>(command: Command, out: &mut W) -> Result<i32, Error> {
    let mut engine = HomflyEngine::new();
    match command {
        Command::Invariants(arg) => {
            let word = arg.parse_word()?;
            let p = engine.homfly(&word)?;
            writeln!(
                out,
                "word: {word} ({} strands, {} letters, writhe {})",
                word.strands(),
                word.len(),
                word.exponent_sum()
            )
            .ok();
            writeln!(out, "P(v, z):").ok();
            write!(out, "{}", p.to_lines()).ok();
            let stats = degree_stats(&p)?;
            writeln!(
                out,
                "deg: min_v {} max_v {} span_v {} max_z {}",
                stats.min_deg_v, stats.max_deg_v, stats.span_v, stats.max_deg_z
            )
            .ok();
            let v = jones_from_homfly(&p)?;
            match v.halve_exponents() {
                Ok(in_t) => writeln!(out, "V(t) = {}", in_t.render("t")).ok(),
                Err(_) => writeln!(out, "V(s = t^1/2) = {}", v.render("s")).ok(),
            };
            if word.closure_components() == 1 {
                let d = alexander_from_homfly(&p)?;
                writeln!(out, "Delta(t) = {}", d.halve_exponents()?.render("t")).ok();
            } else {
                writeln!(
                    out,
                    "Delta: closure has {} components",
                    word.closure_components()
                )
                .ok();
            }
            Ok(0)
        }
        Command::Criteria {
            word,
            murakami_excludes_3,
            records,
        } => {
            let word = word.parse_word()?;
            let p = engine.homfly(&word)?;
            let v = jones_from_homfly(&p)?;
            let delta = if word.closure_components() == 1 {
                Some(alexander_from_homfly(&p)?)
            } else {
                None
            };
            let opts = ReportOptions {
                external_three_braid_excluded: murakami_excludes_3,
                ..ReportOptions::default()
            };
            let report = report_for_invariants(&p, &v, delta.as_ref(), &opts)?;
            if records {
                write!(out, "{}", report.render_records()).ok();
            } else {
                write!(out, "{}", report.render()).ok();
            }
            Ok(0)
        }
        Command::Cable { word, pattern } => {
            let word = word.parse_word()?;
            let pattern = CablePattern::new(BraidWord::parse(&pattern, None)?);
            let cable = cable_word(&word, &pattern)?;
            writeln!(out, "{cable}").ok();
            Ok(0)
        }
        Command::TwoCable { word, writhe } => {
            let word = word.parse_word()?;
            let cable = two_cable(&word, writhe)?;
            writeln!(out, "{cable}").ok();
            Ok(0)
        }
        Command::Census {
            strands,
            crossings,
            out: path,
        } => {
            let records = run_census(strands, crossings, &CensusOptions::default())?;
            let mut text = String::new();
            for r in &records {
                text.push_str(&r.to_string());
                text.push('\n');
            }
            match path {
                Some(p) => {
                    std::fs::write(&p, text)
                        .map_err(|e| Error::Unsupported(format!("write {}: {e}", p.display())))?;
                    // checkpoint: per-prefix record counts, one line per
                    // leading generator
                    let mut by_prefix = vec![0usize; strands];
                    for r in &records {
                        if let Some(first) = r.word.letters().first() {
                            by_prefix[first.index()] += 1;
                        }
                    }
                    let mut progress = String::new();
                    for (prefix, count) in by_prefix.iter().enumerate().skip(1) {
                        progress.push_str(&format!("prefix={prefix} records={count} done=1\n"));
                    }
                    let progress_path = p.with_extension("progress");
                    std::fs::write(&progress_path, progress).map_err(|e| {
                        Error::Unsupported(format!("write {}: {e}", progress_path.display()))
                    })?;
                }
                None => {
                    write!(out, "{text}").ok();
                }
            }
            Ok(0)
        }
        Command::Reduce {
            word,
            budget,
            detours,
        } => {
            let word = word.parse_word()?;
            let result = if detours {
                markov_reduction_search(&word, budget, 2)?
            } else {
                reduction_search(&word, budget)?
            };
            writeln!(
                out,
                "best: {} ({} strands, {} letters) after {} moves{}",
                result.best_word,
                result.best_word.strands(),
                result.best_word.len(),
                result.moves_applied,
                if result.budget_exhausted {
                    "; budget exhausted"
                } else {
                    ""
                }
            )
            .ok();
            Ok(0)
        }
        Command::Dn {
            strands,
            max_crossings,
        } => {
            let report = dn_pipeline(strands, max_crossings, &DnOptions::default())?;
            for (c, layer) in &report.layers {
                let line = match layer {
                    LayerOutcome::FullyReducible { knot_words } => {
                        format!("layer {c}: fully reducible ({knot_words} knot words)")
                    }
                    LayerOutcome::Witness { word, by_unity_root, by_sharp_mwf } => format!(
                        "layer {c}: witness {word} (unity-root: {by_unity_root}, sharp MWF: {by_sharp_mwf})"
                    ),
                    LayerOutcome::Unresolved { knot_words, stuck } => {
                        format!("layer {c}: {stuck} of {knot_words} knot words unresolved")
                    }
                };
                writeln!(out, "{line}").ok();
            }
            match report.value {
                Some(v) => writeln!(out, "d_{strands} = {v}").ok(),
                None => writeln!(out, "d_{strands}: not certified").ok(),
            };
            for note in &report.notes {
                writeln!(out, "note: {note}").ok();
            }
            Ok(0)
        }
        Command::Exhaust9 { no_count_filter } => {
            let report = exhaust_length9(&Exhaust9Options {
                count_filter: !no_count_filter,
                ..Exhaust9Options::default()
            });
            writeln!(
                out,
                "generated {} words; {} canonical; {} past counts; {} past compositeness; {} survivors",
                report.generated,
                report.canonical,
                report.after_counts,
                report.after_composite,
                report.survivors.len()
            )
            .ok();
            for s in &report.survivors {
                writeln!(out, "survivor: {s}").ok();
            }
            Ok(0)
        }
        Command::Genus(arg) => {
            let word = arg.parse_word()?;
            writeln!(
                out,
                "bennequin lower bound on 1-chi: {}",
                bennequin_lower(&word)
            )
            .ok();
            if word.is_positive() && word.closure_components() == 1 {
                writeln!(out, "positive genus: {}", positive_genus(&word)?).ok();
            }
            match band_parse_search(&word, 5_000) {
                Some(b) => writeln!(
                    out,
                    "band presentation: {} bands on {} strands (1-chi <= {})",
                    b.band_count(),
                    b.strands,
                    b.one_minus_chi()
                )
                .ok(),
                None => writeln!(out, "band presentation: none found").ok(),
            };
            let p = engine.homfly(&word)?;
            writeln!(out, "min deg_v P = {}", p.min_deg_v().unwrap_or(0)).ok();
            writeln!(
                out,
                "canonical genus slack: {}",
                canonical_genus_slack(&word, &p)?
            )
            .ok();
            if word.closure_components() == 1 {
                writeln!(
                    out,
                    "genus/degree verdict: {:?}",
                    morton_conjecture_check(&word, &p)?
                )
                .ok();
            }
            Ok(0)
        }
        Command::VerifyPaper { long } => {
            let cfg = SuiteConfig {
                long,
                ..SuiteConfig::default()
            };
            let results = run_suite(&cfg);
            let mut failed = false;
            for (name, outcome) in &results {
                let line = match outcome {
                    Outcome::Pass(d) => format!("PASS  {name}: {d}"),
                    Outcome::Skipped(d) => format!("SKIP  {name}: {d}"),
                    Outcome::Fail(d) => {
                        failed = true;
                        format!("FAIL  {name}: {d}")
                    }
                };
                writeln!(out, "{line}").ok();
            }
            if failed {
                writeln!(out, "suite failures above").ok();
                return Ok(1);
            }
            Ok(0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_cli(args: &[&str]) -> (i32, String) {
        let mut out = Vec::new();
        let argv: Vec<String> = std::iter::once("braidix".to_string())
            .chain(args.iter().map(|s| s.to_string()))
            .collect();
        let code = dispatch(&argv, &mut out);
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn invariants_of_trefoil() {
        let (code, text) = run_cli(&["invariants", "1 1 1"]);
        assert_eq!(code, 0, "{text}");
        assert!(text.contains("z^0 : 2:2 4:-1"));
        assert!(text.contains("V(t)"));
        assert!(text.contains("Delta(t)"));
    }

    #[test]
    fn criteria_of_trefoil() {
        let (code, text) = run_cli(&["criteria", "1 1 1"]);
        assert_eq!(code, 0, "{text}");
        assert!(text.contains("braid index >= 2"), "{text}");
    }

    #[test]
    fn unknown_verb_is_usage_error() {
        let (code, _) = run_cli(&["frobnicate"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn reduce_finds_destabilization() {
        let (code, text) = run_cli(&["reduce", "1 1 1 2", "--budget", "1000"]);
        assert_eq!(code, 0);
        assert!(text.contains("(2 strands, 3 letters)"), "{text}");
    }

    #[test]
    fn cable_command_matches_library() {
        let (code, text) = run_cli(&["cable", "1 1 1", "--pattern", "1 1 1 1 1 1 1"]);
        assert_eq!(code, 0);
        assert_eq!(text.trim().split_whitespace().count(), 25);
    }
}
