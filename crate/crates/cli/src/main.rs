//! `catnerve`: checks and reports on finite categories and their covers.
//!
//! Exit status is 0 when the requested check passes, 1 when it fails and 2
//! for usage, input or parse errors.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};

use catnerve::cech::{self, Variant};
use catnerve::cover::{classify_subcategory, is_cover, membership_counts};
use catnerve::euler::{euler_characteristic, inclusion_exclusion_sum, inclusion_exclusion_terms};
use catnerve::fincat::validate_category;
use catnerve::format::{emit_category, parse_category, parse_category_data, parse_cover};
use catnerve::grothendieck::{
    adjunction_check_pi, adjunction_check_r, adjunction_diagnostic, gr_reduced, pi_left_adjoint,
    rho_tilde,
};
use catnerve::homotopy::{compare_homology, homology};
use catnerve::{Cover, FinCategory, Rational};

#[derive(Parser)]
#[command(name = "catnerve", version, about = "Covers, Cech nerves and Euler characteristics of finite categories")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the category axioms and report every violation.
    Validate { cat: PathBuf },
    /// Weighting, coweighting and Euler characteristic.
    Euler { cat: PathBuf },
    /// Cover condition and ideal/filter classification of the parts.
    CoverCheck {
        cat: PathBuf,
        cover: PathBuf,
        #[arg(long, conflicts_with = "require_filter")]
        require_ideal: bool,
        #[arg(long)]
        require_filter: bool,
    },
    /// Pieces of one level of a Cech nerve.
    Cech {
        cat: PathBuf,
        cover: PathBuf,
        #[arg(long)]
        level: usize,
        #[arg(long, default_value = "ordinary")]
        variant: Variant,
    },
    /// Grothendieck construction of the reduced Cech nerve.
    Gr {
        cat: PathBuf,
        cover: PathBuf,
        /// Write the construction as a category file.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Alternating sum of Euler characteristics over the reduced nerve.
    InclExcl { cat: PathBuf, cover: PathBuf },
    /// Rational Betti numbers of the nerve.
    Homology {
        cat: PathBuf,
        #[arg(long)]
        max_dim: Option<usize>,
    },
    /// Betti numbers of the category against those of its Grothendieck construction.
    NerveCompare {
        cat: PathBuf,
        cover: PathBuf,
        #[arg(long)]
        max_dim: Option<usize>,
    },
    /// Hom-set checks for the adjunctions of the Grothendieck construction.
    Adjunction { cat: PathBuf, cover: PathBuf },
}

/// Report text and whether the check passed.
struct Outcome {
    text: String,
    ok: bool,
}

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_category(path: &Path) -> Result<Arc<FinCategory>, String> {
    parse_category(&read(path)?)
        .map(Arc::new)
        .map_err(|e| format!("{}: {e}", path.display()))
}

fn load(cat: &Path, cover: &Path) -> Result<(Arc<FinCategory>, Cover), String> {
    let c = load_category(cat)?;
    let u = parse_cover(&read(cover)?, &c).map_err(|e| format!("{}: {e}", cover.display()))?;
    Ok((c, u))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn labels(cover: &Cover, tuple: &[usize]) -> String {
    tuple
        .iter()
        .map(|&p| cover.labels()[p].as_str())
        .collect::<Vec<_>>()
        .join(",")
}

fn run(command: Command) -> Result<Outcome, String> {
    let mut out = String::new();
    let ok = match command {
        Command::Validate { cat } => {
            let data = parse_category_data(&read(&cat)?).map_err(|e| format!("{}: {e}", cat.display()))?;
            let report = validate_category(&data);
            if report.ok() {
                writeln!(
                    out,
                    "ok: {} ({} objects, {} morphisms)",
                    data.name,
                    data.objects.len(),
                    data.morphisms.len()
                )
                .unwrap();
            } else {
                for v in &report.violations {
                    writeln!(out, "{}: {}", v.rule, v.message).unwrap();
                }
            }
            report.ok()
        }
        Command::Euler { cat } => {
            let c = load_category(&cat)?;
            let r = euler_characteristic(&c);
            if let Some(w) = &r.weighting {
                writeln!(out, "weighting = {}", join(w)).unwrap();
            }
            if let Some(v) = &r.coweighting {
                writeln!(out, "coweighting = {}", join(v)).unwrap();
            }
            match &r.chi {
                Some(chi) => writeln!(out, "chi = {chi}").unwrap(),
                None => writeln!(out, "chi undefined: {}", r.reason.as_deref().unwrap_or("")).unwrap(),
            }
            r.chi.is_some()
        }
        Command::CoverCheck {
            cat,
            cover,
            require_ideal,
            require_filter,
        } => {
            let (c, u) = load(&cat, &cover)?;
            for (label, part) in u.labels().iter().zip(u.parts()) {
                let class = classify_subcategory(part);
                writeln!(
                    out,
                    "part {label}: objects {} ideal {} filter {}",
                    part.object_ids().join(" "),
                    yes_no(class.is_ideal),
                    yes_no(class.is_filter)
                )
                .unwrap();
            }
            let counts = membership_counts(&u);
            for (x, n) in counts.iter().enumerate() {
                writeln!(out, "member {} {n}", c.object_id(x)).unwrap();
            }
            let covers = is_cover(&u);
            writeln!(out, "cover: {}", yes_no(covers)).unwrap();
            let mut ok = covers;
            if require_ideal {
                writeln!(out, "ideal cover: {}", yes_no(u.is_ideal_cover())).unwrap();
                ok &= u.is_ideal_cover();
            }
            if require_filter {
                writeln!(out, "filter cover: {}", yes_no(u.is_filter_cover())).unwrap();
                ok &= u.is_filter_cover();
            }
            ok
        }
        Command::Cech {
            cat,
            cover,
            level,
            variant,
        } => {
            let (_, u) = load(&cat, &cover)?;
            let pieces = cech::level(&u, level, variant).map_err(|e| e.to_string())?;
            for p in &pieces {
                writeln!(
                    out,
                    "({})\tobjects {}\tmorphisms {}",
                    p.tuple.render(&u),
                    p.category.object_ids().join(" "),
                    p.category.morphism_ids().join(" ")
                )
                .unwrap();
            }
            writeln!(out, "pieces = {}", pieces.len()).unwrap();
            true
        }
        Command::Gr { cat, cover, emit } => {
            let (_, u) = load(&cat, &cover)?;
            match gr_reduced(&u) {
                Ok(gr) => {
                    let g = gr.category();
                    writeln!(out, "objects = {}", g.object_count()).unwrap();
                    writeln!(out, "morphisms = {}", g.morphism_count()).unwrap();
                    writeln!(out, "acyclic = {}", yes_no(g.is_acyclic())).unwrap();
                    for x in g.objects() {
                        writeln!(out, "object {x}").unwrap();
                    }
                    if let Some(path) = emit {
                        std::fs::write(&path, emit_category(g))
                            .map_err(|e| format!("{}: {e}", path.display()))?;
                        writeln!(out, "written {}", path.display()).unwrap();
                    }
                    true
                }
                Err(e) => {
                    writeln!(out, "{e}").unwrap();
                    false
                }
            }
        }
        Command::InclExcl { cat, cover } => {
            let (c, u) = load(&cat, &cover)?;
            let render = |q: &Option<Rational>| q.as_ref().map_or("undefined".to_string(), ToString::to_string);
            for (t, chi) in inclusion_exclusion_terms(&u) {
                writeln!(out, "chi(D_{}) = {}", labels(&u, &t), render(&chi)).unwrap();
            }
            let sum = inclusion_exclusion_sum(&u);
            let chi = euler_characteristic(&c).chi;
            writeln!(out, "sum = {}", render(&sum)).unwrap();
            writeln!(out, "chi({}) = {}", c.name(), render(&chi)).unwrap();
            let ok = sum.is_some() && sum == chi;
            writeln!(out, "{}", if ok { "MATCH" } else { "MISMATCH" }).unwrap();
            ok
        }
        Command::Homology { cat, max_dim } => {
            let c = load_category(&cat)?;
            let h = homology(&c, max_dim).map_err(|e| e.to_string())?;
            out.push_str(&h.to_tsv());
            if h.truncated {
                writeln!(out, "truncated").unwrap();
            } else {
                writeln!(out, "euler_top = {}", h.euler_top).unwrap();
            }
            true
        }
        Command::NerveCompare { cat, cover, max_dim } => {
            let (_, u) = load(&cat, &cover)?;
            let cmp = compare_homology(&u, max_dim);
            if let Some((p, g)) = cmp.betti_pair() {
                if p == g {
                    writeln!(out, "betti equal: {}", join(&p)).unwrap();
                } else {
                    writeln!(out, "betti differ: parent {} gr {}", join(&p), join(&g)).unwrap();
                }
            }
            for v in &cmp.report.violations {
                writeln!(out, "{}: {}", v.rule, v.message).unwrap();
            }
            cmp.report.ok()
        }
        Command::Adjunction { cat, cover } => {
            let (_, u) = load(&cat, &cover)?;
            let gr = gr_reduced(&u).map_err(|e| e.to_string())?;
            let mut ok = true;
            match adjunction_check_pi(&gr) {
                Ok(report) => {
                    writeln!(out, "pi hom-sets: {}", report).unwrap();
                    ok &= report.ok();
                    let pi = pi_left_adjoint(&gr).map_err(|e| e.to_string())?;
                    let id = pi.then(&rho_tilde(&gr)).map_err(|e| e.to_string())?.is_identity();
                    writeln!(out, "rho~ pi = id: {}", yes_no(id)).unwrap();
                    ok &= id;
                }
                Err(e) => {
                    writeln!(out, "pi: {e}").unwrap();
                    for v in adjunction_diagnostic(&gr).violations {
                        writeln!(out, "diagnostic: {}", v.message).unwrap();
                    }
                    ok = false;
                }
            }
            let r = adjunction_check_r(&gr, 3);
            writeln!(out, "R hom-sets: {r}").unwrap();
            ok && r.ok()
        }
    };
    Ok(Outcome { text: out, ok })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(outcome) => {
            print!("{}", outcome.text);
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
