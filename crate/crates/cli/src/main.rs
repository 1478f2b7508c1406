use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use spinmp_core::export::{
    crystal_dot, crystal_json, crystal_table, crystal_text, crystal_tsv, reduced_dot, reduced_json,
    reduced_text, reduced_tsv, walkthrough_text,
};
use spinmp_core::partition::render;
use spinmp_core::signature::reduced_signature;
use spinmp_core::{
    build_signature, reduce, reduce_with_order, verify, verify_slice, walkthrough, CartanContext,
    CrystalGraph, ReducedCrystal, Signature, SpinMultipartition, SpinRules, Variant, WeightContent,
    ZeroCornerSets,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
    Tsv,
}

/// Explore spin multipartition crystals for twisted affine type A(2n, 2).
#[derive(Parser, Debug)]
#[command(name = "spinmp", version)]
struct Cli {
    /// Rank parameter; h = 2n+1 is derived.
    #[arg(long, global = true, default_value_t = 1)]
    n: usize,
    /// Highest weight coefficients a0,...,an.
    #[arg(long, global = true, default_value = "0,1")]
    weight: String,
    #[arg(long, global = true, default_value_t = 8)]
    max_degree: usize,
    /// Restrictedness reading: paper, standard or indivisible.
    #[arg(long, global = true, default_value = "paper")]
    variant: String,
    /// Predicate for 0-corner addable/removable sets: restricted or strict.
    #[arg(long, global = true, default_value = "restricted")]
    zero_corner: String,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Treat evidence findings as failures.
    #[arg(long, global = true)]
    strict: bool,
    /// Print ± as "pm".
    #[arg(long, global = true)]
    ascii: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The reduced crystal of weights.
    Reduced {
        /// Restrict to vertices with c_k = v, given as k=v.
        #[arg(long)]
        slice: Option<String>,
    },
    /// The multipartition crystal.
    Crystal {
        /// Print columns of residue diagrams.
        #[arg(long)]
        table: bool,
        /// Only these contents (c0,...,cn); repeatable.
        #[arg(long = "content")]
        contents: Vec<String>,
    },
    /// Check the multipartition crystal against the reduced crystal.
    Verify {
        /// Extra orbit-count checks on slices k=v; repeatable.
        #[arg(long = "slice")]
        slices: Vec<String>,
    },
    /// Raw and reduced i-signature of a multipartition.
    Signature {
        #[arg(long)]
        residue: usize,
        /// JSON list of {"corner", "rows"} components, bottom first.
        #[arg(long)]
        mp: String,
    },
    /// Residue diagrams of a multipartition.
    Render {
        #[arg(long)]
        mp: String,
    },
    /// Apply f operators from the empty multipartition, printing each step.
    Walkthrough {
        #[arg(long, default_value = "1,0,0,0,0")]
        path: String,
    },
}

struct Config {
    ctx: CartanContext,
    rules: SpinRules,
}

fn parse_list(text: &str, flag: &str) -> Result<Vec<i64>> {
    text.split(',')
        .map(|s| s.trim().parse::<i64>())
        .collect::<std::result::Result<_, _>>()
        .with_context(|| format!("{flag}: expected comma-separated integers, got `{text}`"))
}

fn parse_slice(text: &str) -> Result<(usize, i64)> {
    let (k, v) = text
        .split_once('=')
        .ok_or_else(|| anyhow!("--slice: expected k=v, got `{text}`"))?;
    let k = k
        .trim()
        .parse()
        .with_context(|| format!("--slice: bad coordinate in `{text}`"))?;
    let v = v
        .trim()
        .parse()
        .with_context(|| format!("--slice: bad value in `{text}`"))?;
    Ok((k, v))
}

fn parse_mp(cfg: &Config, text: &str) -> Result<SpinMultipartition> {
    let raw: SpinMultipartition = serde_json::from_str(text).map_err(|e| anyhow!("--mp: {e}"))?;
    SpinMultipartition::new(&cfg.ctx, cfg.rules, raw.components().to_vec()).context("--mp")
}

impl Cli {
    fn config(&self) -> Result<Config> {
        let weight = parse_list(&self.weight, "--weight")?;
        let ctx = CartanContext::new(self.n, &weight).map_err(|e| anyhow!("--n/--weight: {e}"))?;
        let variant: Variant = self
            .variant
            .parse()
            .map_err(|e| anyhow!("--variant: {e}"))?;
        let zero: ZeroCornerSets = self
            .zero_corner
            .parse()
            .map_err(|e| anyhow!("--zero-corner: {e}"))?;
        let rules = SpinRules::new(ctx.h(), variant).with_zero_corner(zero);
        Ok(Config { ctx, rules })
    }

    fn require_format(&self, allowed: &[Format]) -> Result<()> {
        if !allowed.contains(&self.format) {
            bail!(
                "--format {:?} is not available for this command",
                self.format
            );
        }
        Ok(())
    }
}

fn signature_lines(sig: &Signature, ascii: bool) -> String {
    let mut out = String::new();
    for s in &sig.symbols {
        let mark = spinmp_core::signature::render_marks(&[s.mark], ascii);
        let binding = match s.partner {
            Some(p) => format!("removable {} over addable {}", s.node, p),
            None => {
                let run: Vec<String> = s.run.iter().map(ToString::to_string).collect();
                format!("{} (run {})", s.node, run.join(" "))
            }
        };
        out.push_str(&format!(
            "  {mark:<2} component {} {binding}\n",
            s.component
        ));
    }
    out
}

fn run(cli: &Cli) -> Result<(String, ExitCode)> {
    let cfg = cli.config()?;
    let ctx = &cfg.ctx;
    let ok = ExitCode::SUCCESS;
    match &cli.command {
        Command::Reduced { slice } => {
            let rc = ReducedCrystal::generate(ctx, cli.max_degree);
            let keep: Option<BTreeSet<WeightContent>> = match slice {
                Some(s) => {
                    let (k, v) = parse_slice(s)?;
                    Some(
                        rc.slice(k, v)
                            .map_err(|e| anyhow!("--slice: {e}"))?
                            .into_iter()
                            .collect(),
                    )
                }
                None => None,
            };
            let keep = keep.as_ref();
            let text = match cli.format {
                Format::Text => reduced_text(&rc, keep),
                Format::Json => reduced_json(&rc, keep),
                Format::Dot => reduced_dot(&rc, keep),
                Format::Tsv => reduced_tsv(&rc, keep),
            };
            Ok((text, ok))
        }
        Command::Crystal { table, contents } => {
            let g = CrystalGraph::generate(ctx, cfg.rules, cli.max_degree);
            let filter: Option<BTreeSet<WeightContent>> = if contents.is_empty() {
                None
            } else {
                let mut set = BTreeSet::new();
                for c in contents {
                    let w = WeightContent(parse_list(c, "--content")?);
                    ctx.check_content(&w)
                        .map_err(|e| anyhow!("--content: {e}"))?;
                    set.insert(w);
                }
                Some(set)
            };
            if *table {
                cli.require_format(&[Format::Text])?;
                let cols: Vec<WeightContent> = match &filter {
                    Some(f) => f.iter().cloned().collect(),
                    None => g.index().keys().cloned().collect(),
                };
                return Ok((crystal_table(&g, &cols), ok));
            }
            let f = filter.as_ref();
            let text = match cli.format {
                Format::Text => crystal_text(&g, f),
                Format::Json => {
                    if f.is_some() {
                        bail!("--content cannot be combined with --format json");
                    }
                    crystal_json(&g, None)
                }
                Format::Dot => crystal_dot(&g, f),
                Format::Tsv => crystal_tsv(&g, f),
            };
            Ok((text, ok))
        }
        Command::Verify { slices } => {
            cli.require_format(&[Format::Text, Format::Json])?;
            let g = CrystalGraph::generate(ctx, cfg.rules, cli.max_degree);
            let rc = ReducedCrystal::generate(ctx, cli.max_degree);
            let report = verify(&g, &rc);
            let mut slice_results = Vec::new();
            for s in slices {
                let (k, v) = parse_slice(s)?;
                if k > ctx.n() {
                    bail!("--slice: coordinate {k} out of range 0..={}", ctx.n());
                }
                slice_results.push((k, v, verify_slice(&g, &rc, k, v)));
            }
            let slices_ok = slice_results.iter().all(|(_, _, r)| r.passed());
            let text = match cli.format {
                Format::Json => {
                    let slices_json: Vec<_> = slice_results
                        .iter()
                        .map(|(k, v, r)| serde_json::json!({"coordinate": k, "value": v, "result": r}))
                        .collect();
                    let mut s = serde_json::to_string_pretty(&serde_json::json!({
                        "report": report,
                        "slices": slices_json,
                    }))?;
                    s.push('\n');
                    s
                }
                _ => {
                    let mut s = report.render_text();
                    for (k, v, r) in &slice_results {
                        s.push_str(&format!(
                            "slice c{k}={v}: orbit_counts {} checked={} skipped={} violations={}\n",
                            r.status, r.checked, r.skipped, r.violations
                        ));
                        for cx in &r.counterexamples {
                            s.push_str(&format!("  at {}: {}\n", cx.content, cx.detail));
                        }
                    }
                    s
                }
            };
            for c in report.evidence_failures() {
                eprintln!(
                    "warning: evidence check {} found {} violation(s)",
                    c.check, c.violations
                );
            }
            let pass = report.hard_ok() && slices_ok && (!cli.strict || report.all_ok());
            Ok((text, if pass { ok } else { ExitCode::FAILURE }))
        }
        Command::Signature { residue, mp } => {
            if *residue > ctx.n() {
                bail!("--residue: {residue} out of range 0..={}", ctx.n());
            }
            let mp = parse_mp(&cfg, mp)?;
            let raw = build_signature(cfg.rules, &mp, *residue);
            let reduced = reduce(&raw);
            let shuffled = cli.seed.map(|s| reduce_with_order(&raw, s));
            let text = match cli.format {
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&serde_json::json!({
                        "raw": raw,
                        "reduced": reduced,
                    }))?;
                    s.push('\n');
                    s
                }
                Format::Text => {
                    let mut s = format!("raw: \"{}\"\n", raw.render(cli.ascii));
                    s.push_str(&signature_lines(&raw, cli.ascii));
                    s.push_str(&format!("reduced: \"{}\"\n", reduced.render(cli.ascii)));
                    s.push_str(&signature_lines(&reduced, cli.ascii));
                    if let (Some(seed), Some(other)) = (cli.seed, &shuffled) {
                        let verdict = if *other == reduced {
                            "agrees"
                        } else {
                            "DISAGREES"
                        };
                        s.push_str(&format!("random order (seed {seed}) {verdict}\n"));
                    }
                    s
                }
                _ => bail!("--format {:?} is not available for signature", cli.format),
            };
            Ok((text, ok))
        }
        Command::Render { mp } => {
            cli.require_format(&[Format::Text])?;
            let mp = parse_mp(&cfg, mp)?;
            let c = mp.content(ctx);
            let mut s = format!(
                "content {} hub {} defect {}\n",
                c,
                ctx.hub(&c),
                ctx.defect(&c)
            );
            for (k, cp) in mp.components().iter().enumerate().rev() {
                s.push_str(&format!("component {k} ({}-corner)\n", cp.corner));
                let body = render(cp, ctx.h());
                if body.is_empty() {
                    s.push_str("∅\n");
                } else {
                    s.push_str(&body);
                    s.push('\n');
                }
            }
            for i in 0..ctx.rank() {
                s.push_str(&format!(
                    "{i}-signature \"{}\"\n",
                    reduced_signature(cfg.rules, &mp, i).render(cli.ascii)
                ));
            }
            Ok((s, ok))
        }
        Command::Walkthrough { path } => {
            let path: Vec<usize> = parse_list(path, "--path")?
                .into_iter()
                .map(|i| usize::try_from(i).ok().filter(|&i| i <= ctx.n()))
                .collect::<Option<_>>()
                .ok_or_else(|| anyhow!("--path: residues must lie in 0..={}", ctx.n()))?;
            let steps = walkthrough(ctx, cfg.rules, &path);
            let text = match cli.format {
                Format::Text => walkthrough_text(&steps, ctx.h(), cli.ascii),
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&steps)?;
                    s.push('\n');
                    s
                }
                _ => bail!("--format {:?} is not available for walkthrough", cli.format),
            };
            Ok((text, ok))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, code)) => {
            if let Some(path) = &cli.out {
                if let Err(e) = fs::write(path, text) {
                    eprintln!("error: --out {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            } else {
                print!("{text}");
            }
            code
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
