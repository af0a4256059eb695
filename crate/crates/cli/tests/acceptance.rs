//! Acceptance run: one line per criterion, exit status 1 if any fails.
//!
//! Runtime limits are wall-clock budgets for the whole criterion, measured
//! on the test profile.

use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::sync::Arc;
use std::time::{Duration, Instant};

use catnerve::cech::check_simplicial_identities;
use catnerve::cover::{classify_subcategory, full_subcategory, intersect, is_cover};
use catnerve::euler::{
    euler_characteristic, has_unique_weighting, inclusion_exclusion_sum, mobius_oracle,
    solve_weighting, Side,
};
use catnerve::fixtures;
use catnerve::format::{parse_category, parse_cover};
use catnerve::grothendieck::{
    adjunction_check_pi, adjunction_check_r, gr_reduced, pi_left_adjoint, reorder_iso, rho_tilde,
};
use catnerve::homotopy::{compare_homology, euler_consistency, homology};
use catnerve::{Cover, FinCategory, Rational, Subcategory};

const LIMIT_COUNTEREXAMPLE: Duration = Duration::from_secs(1);
const LIMIT_CIRCLE: Duration = Duration::from_secs(1);
const LIMIT_RANDOM_POSETS: Duration = Duration::from_secs(30);
const LIMIT_NERVE: Duration = Duration::from_secs(60);
const RANDOM_POSETS: u64 = 100;
const MOBIUS_POSETS: u64 = 200;
const MAX_POSET: usize = 8;
const MAX_PARTS: usize = 4;
const ACYCLIC_INSTANCES: u64 = 12;
const R_TUPLE_LENGTH: usize = 3;
const SIMPLICIAL_LEVEL: usize = 3;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn q(n: i64) -> Option<Rational> {
    Some(Rational::from(n))
}

fn cli_fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .display()
        .to_string()
}

/// Named covers shared by the structural criteria.
fn fixture_covers() -> Vec<(String, Cover)> {
    let c = Arc::new(fixtures::counterexample());
    let mut out = vec![
        ("counterexample".to_string(), fixtures::counterexample_cover()),
        ("V".to_string(), fixtures::v_cover()),
        (
            "C by itself".to_string(),
            Cover::new(c.clone(), vec![("A".into(), Subcategory::whole(&c))], None).unwrap(),
        ),
    ];
    let v = Arc::new(parse_category(&std::fs::read_to_string(cli_fixture("v.fincat")).unwrap()).unwrap());
    let from_file = parse_cover(&std::fs::read_to_string(cli_fixture("v.cover")).unwrap(), &v).unwrap();
    out.push(("V from file".to_string(), from_file));
    for seed in 0..3 {
        let p = Arc::new(fixtures::random_poset(seed, 6));
        out.push((format!("poset {seed} ideal"), fixtures::random_ideal_cover(&p, seed, 3)));
        let a = Arc::new(fixtures::random_acyclic(seed, 4));
        out.push((format!("dag {seed} filter"), fixtures::random_filter_cover(&a, seed, 3)));
    }
    out
}

fn counterexample_regression() -> Check {
    let c = Arc::new(fixtures::counterexample());
    let d1 = full_subcategory(&c, &["x", "y"]).map_err(|e| e.to_string())?;
    let d2 = full_subcategory(&c, &["y", "z"]).map_err(|e| e.to_string())?;
    let meet = intersect(&[&d1, &d2]).map_err(|e| e.to_string())?;
    let chi = |s: &Subcategory| euler_characteristic(&s.to_category()).chi;
    let values = [euler_characteristic(&c).chi, chi(&d1), chi(&d2), chi(&meet)];
    ensure(values == [q(1), q(0), q(1), q(1)], || format!("χ values {values:?}"))?;
    let sum = inclusion_exclusion_sum(&fixtures::counterexample_cover());
    ensure(sum == q(0), || format!("sum {sum:?}"))?;
    let status = Command::new(env!("CARGO_BIN_EXE_catnerve"))
        .args(["incl-excl", &cli_fixture("cex.fincat"), &cli_fixture("cex.cover")])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(status.status.code() == Some(1), || format!("incl-excl exit {:?}", status.status.code()))?;
    Ok("χ(C)=1 χ(D1)=0 χ(D2)=1 χ(D1∩D2)=1, sum 0, incl-excl exit 1".into())
}

fn circle_detection() -> Check {
    let gr = gr_reduced(&fixtures::counterexample_cover()).map_err(|e| e.to_string())?;
    let h_gr = homology(gr.category(), None).map_err(|e| e.to_string())?;
    let h_c = homology(&fixtures::counterexample(), None).map_err(|e| e.to_string())?;
    ensure(h_gr.basis == [5, 6, 1], || format!("gr basis {:?}", h_gr.basis))?;
    ensure(h_gr.betti == [1, 1, 0], || format!("gr betti {:?}", h_gr.betti))?;
    ensure(h_c.betti == [1, 0, 0], || format!("C betti {:?}", h_c.betti))?;
    Ok(format!("gr betti {:?}, C betti {:?}", h_gr.betti, h_c.betti))
}

fn random_inclusion_exclusion() -> Check {
    for seed in 0..RANDOM_POSETS {
        let p = Arc::new(fixtures::random_poset(seed, MAX_POSET));
        let cover = fixtures::random_ideal_cover(&p, seed, MAX_PARTS);
        let chi = euler_characteristic(&p).chi;
        let sum = inclusion_exclusion_sum(&cover);
        let gr = gr_reduced(&cover).map_err(|e| format!("seed {seed}: {e}"))?;
        let chi_gr = euler_characteristic(gr.category()).chi;
        ensure(chi.is_some() && sum == chi && chi_gr == chi, || {
            format!("seed {seed}: χ {chi:?} sum {sum:?} χ(gr) {chi_gr:?}")
        })?;
    }
    Ok(format!("{RANDOM_POSETS} posets"))
}

fn nerve_theorem_shadow() -> Check {
    let mut compared = 0;
    let mut non_posets = 0;
    for seed in 0..ACYCLIC_INSTANCES {
        let cat = if seed % 2 == 0 {
            fixtures::random_acyclic(seed, 5)
        } else {
            fixtures::random_poset(seed, MAX_POSET)
        };
        if mobius_oracle(&cat).is_err() {
            non_posets += 1;
        }
        let cat = Arc::new(cat);
        for cover in [
            fixtures::random_ideal_cover(&cat, seed, MAX_PARTS),
            fixtures::random_filter_cover(&cat, seed, MAX_PARTS),
        ] {
            let cmp = compare_homology(&cover, None);
            ensure(cmp.report.ok(), || format!("{}: {}", cat.name(), cmp.report))?;
            compared += 1;
        }
    }
    ensure(non_posets > 0, || "no category with parallel morphisms".into())?;
    Ok(format!("{ACYCLIC_INSTANCES} categories ({non_posets} non-posets), {compared} covers"))
}

fn simplex_coweighting() -> Check {
    for k in 2..=5 {
        let d = fixtures::simplex_category(k);
        let v = solve_weighting(&d, Side::Coweight).ok_or(format!("Δ_{k}: no coweighting"))?;
        let expected: Vec<Rational> = (0..k).map(Rational::sign).collect();
        ensure(v == expected, || format!("Δ_{k}: {v:?}"))?;
        ensure(has_unique_weighting(&d), || format!("Δ_{k}: ζ singular"))?;
    }
    Ok("k = 2..5, ζ full rank".into())
}

fn simplicial_identities() -> Check {
    let covers = fixture_covers();
    for (name, cover) in &covers {
        let report = check_simplicial_identities(cover, SIMPLICIAL_LEVEL);
        ensure(report.ok(), || format!("{name}: {report}"))?;
    }
    Ok(format!("{} covers up to level {SIMPLICIAL_LEVEL}", covers.len()))
}

fn adjunctions() -> Check {
    let mut ideal = 0;
    for (name, cover) in fixture_covers() {
        if !is_cover(&cover) {
            continue;
        }
        let gr = gr_reduced(&cover).map_err(|e| format!("{name}: {e}"))?;
        if cover.is_ideal_cover() {
            ideal += 1;
            let report = adjunction_check_pi(&gr).map_err(|e| format!("{name}: {e}"))?;
            ensure(report.ok(), || format!("{name}: {report}"))?;
            let pi = pi_left_adjoint(&gr).map_err(|e| format!("{name}: {e}"))?;
            let round = pi.then(&rho_tilde(&gr)).map_err(|e| e.to_string())?;
            ensure(round.is_identity(), || format!("{name}: ρ̃∘π is not the identity"))?;
        }
        let report = adjunction_check_r(&gr, R_TUPLE_LENGTH);
        ensure(report.ok(), || format!("{name}: {report}"))?;
    }
    ensure(ideal > 0, || "no ideal cover among fixtures".into())?;
    Ok(format!("π on {ideal} ideal covers, R up to length {R_TUPLE_LENGTH}"))
}

fn orders(labels: &[String]) -> Vec<Vec<String>> {
    if labels.len() <= 1 {
        return vec![labels.to_vec()];
    }
    (0..labels.len())
        .flat_map(|i| {
            let mut rest = labels.to_vec();
            let head = rest.remove(i);
            orders(&rest).into_iter().map(move |mut t| {
                t.insert(0, head.clone());
                t
            })
        })
        .collect()
}

fn order_independence() -> Check {
    let mut checked = 0;
    for (name, cover) in fixture_covers() {
        if cover.len() > 3 || !is_cover(&cover) {
            continue;
        }
        let gr = gr_reduced(&cover).map_err(|e| format!("{name}: {e}"))?;
        let chi = euler_characteristic(gr.category()).chi;
        for order in orders(cover.labels()) {
            let iso = reorder_iso(&gr, &order).map_err(|e| format!("{name}: {e}"))?;
            let report = iso.verify();
            ensure(report.ok(), || format!("{name} {order:?}: {report}"))?;
            let other = euler_characteristic(iso.target.category()).chi;
            ensure(other == chi, || format!("{name} {order:?}: χ {other:?} vs {chi:?}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} orders"))
}

fn acyclic_fixture_categories() -> Vec<FinCategory> {
    let mut cats: Vec<FinCategory> = (2..=5).map(fixtures::simplex_category).collect();
    cats.push(fixtures::discrete(3));
    for (_, cover) in fixture_covers() {
        cats.push((**cover.parent()).clone());
        if let Ok(gr) = gr_reduced(&cover) {
            cats.push((**gr.category()).clone());
        }
    }
    cats.retain(FinCategory::is_acyclic);
    cats
}

fn oracle_agreement() -> Check {
    for seed in 0..MOBIUS_POSETS {
        let p = fixtures::random_poset(1000 + seed, MAX_POSET);
        let mu = mobius_oracle(&p).map_err(|e| e.to_string())?;
        let chi = euler_characteristic(&p).chi;
        ensure(chi.as_ref() == Some(&mu), || format!("seed {seed}: μ {mu} χ {chi:?}"))?;
    }
    let cats = acyclic_fixture_categories();
    for cat in &cats {
        let report = euler_consistency(cat);
        ensure(report.ok(), || format!("{}: {report}", cat.name()))?;
    }
    Ok(format!("{MOBIUS_POSETS} posets, {} acyclic categories", cats.len()))
}

fn duality() -> Check {
    let mut cats = acyclic_fixture_categories();
    cats.push(fixtures::counterexample());
    for cat in &cats {
        let (a, b) = (euler_characteristic(cat).chi, euler_characteristic(&cat.opposite()).chi);
        ensure(a == b, || format!("{}: χ {a:?} vs χ(op) {b:?}", cat.name()))?;
    }
    let covers = fixture_covers();
    for (name, cover) in &covers {
        let op = cover.opposite();
        for (part, part_op) in cover.parts().iter().zip(op.parts()) {
            let (here, there) = (classify_subcategory(part), classify_subcategory(part_op));
            ensure(here.is_ideal == there.is_filter && here.is_filter == there.is_ideal, || {
                format!("{name}: flags do not swap")
            })?;
        }
    }
    Ok(format!("{} categories, {} covers", cats.len(), covers.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check, Option<Duration>); 10] = [
        ("counterexample regression", counterexample_regression, Some(LIMIT_COUNTEREXAMPLE)),
        ("circle detection", circle_detection, Some(LIMIT_CIRCLE)),
        ("randomized inclusion-exclusion", random_inclusion_exclusion, Some(LIMIT_RANDOM_POSETS)),
        ("nerve theorem Betti numbers", nerve_theorem_shadow, Some(LIMIT_NERVE)),
        ("Δ coweighting", simplex_coweighting, None),
        ("simplicial identities", simplicial_identities, None),
        ("adjunctions", adjunctions, None),
        ("order independence", order_independence, None),
        ("oracle agreement", oracle_agreement, None),
        ("duality", duality, None),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut outcome = run();
        let elapsed = start.elapsed();
        if let (Ok(detail), Some(limit)) = (&outcome, limit) {
            if elapsed > *limit {
                outcome = Err(format!("{detail}; took {elapsed:.2?}, limit {limit:?}"));
            }
        }
        let budget = limit.map_or(String::new(), |l| format!(", limit {l:?}"));
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({elapsed:.2?}{budget})", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} ({elapsed:.2?}{budget})", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
