//! Named verification suites behind `interlace verify`.

use interlace_core::convergents::{convergence_suite, example_m5_check, m2_suite};
use interlace_core::minors::{example_m5_minors_check, minor_order_check, mminus1_conjecture_check};
use interlace_core::polyfam::{
    classic_identity_suite, corollary1_suite, gf_check, minpoly_suite, special_values_suite,
    theorem1_suite, GfFamily,
};
use interlace_core::sequences::{
    appendix_check, detproduct_check, diag_orthogonality, fleck_correspondence,
    m6_decomposition_check, ratio_lemma_check, sum_of_squares, theorem2_check, trig_eval,
    unlaced_suite, weisman_check, SeqEngine, SeqFamily, SeqId,
};
use interlace_core::spectral::{
    cd_check, critical_line_check, ladder_check, mellin_oracle_check, ode_check, ortho_inner,
    q_analytic_checks, quad_identity_check, radical_form_check, three_term_check, TanhSinhGrid, PQ,
};
use interlace_core::rat::{rat, rat_int};
use interlace_core::Report;

pub const SUITE_NAMES: &[&str] = &[
    "theorem1",
    "corollary1",
    "minpoly",
    "classic",
    "sequences",
    "convergence",
    "spectral",
    "minors",
    "all",
];

pub fn run_suite(name: &str, max: Option<u64>, prec: u32) -> Result<Vec<Report>, String> {
    match name {
        "theorem1" => {
            let max = max.unwrap_or(8);
            let mut reps = Vec::new();
            for m in 1..=max {
                reps.push(theorem1_suite(m, prec));
            }
            reps.push(special_values_suite(max));
            reps.push(gf_check(GfFamily::P, max.min(16) as usize));
            reps.push(gf_check(GfFamily::Q, max.min(16) as usize));
            Ok(reps)
        }
        "corollary1" => Ok(vec![corollary1_suite(max.unwrap_or(8).max(2))]),
        "minpoly" => {
            let max = max.unwrap_or(10);
            let mut reps = Vec::new();
            for m in 1..=max {
                reps.push(minpoly_suite(m));
            }
            Ok(reps)
        }
        "classic" => Ok(vec![classic_identity_suite(max.unwrap_or(30).max(2), prec)]),
        "sequences" => {
            let max = max.unwrap_or(5).max(1) as u32;
            let mut reps = Vec::new();
            reps.push(appendix_check());
            for m in 1..=max {
                let eng = SeqEngine::new(m);
                reps.push(theorem2_check(&eng, -5, 15));
                let mut fleck_rep = Report::new("fleck-correspondence");
                for j in 1..=m {
                    for r in 0..=12 {
                        fleck_rep.merge(fleck_correspondence(&eng, j, r));
                    }
                }
                reps.push(fleck_rep);
                reps.push(detproduct_check(m, 4));
                let mut squares = Report::new("sum-of-squares");
                for r in -4..=6 {
                    squares.merge(sum_of_squares(&eng, r).1);
                }
                reps.push(squares);
                let mut trig = Report::new("trig-eval");
                for j in 1..=m {
                    for r in [-2i64, 1, 3] {
                        let id = SeqId::new(SeqFamily::F, m, j).expect("valid id");
                        match trig_eval(&eng, &id, r, prec) {
                            Ok((_, rep)) => trig.merge(rep),
                            Err(e) => trig.fail(&format!("trig:m={m},j={j},r={r}"), e.to_string()),
                        }
                        let id = SeqId::new(SeqFamily::G, m, j).expect("valid id");
                        match trig_eval(&eng, &id, r, prec) {
                            Ok((_, rep)) => trig.merge(rep),
                            Err(e) => trig.fail(&format!("trig-G:m={m},j={j},r={r}"), e.to_string()),
                        }
                    }
                }
                reps.push(trig);
                reps.push(ratio_lemma_check(m, prec));
                let n = 2 * m as u64 + 1;
                let mut diag = Report::new("diag-orthogonality");
                for u in 1..=m as i64 {
                    for v in 1..=m as i64 {
                        diag.merge(diag_orthogonality(n, u, v, prec).1);
                    }
                }
                reps.push(diag);
                if m >= 2 {
                    reps.push(unlaced_suite(m, 3 * m as i64 + 6, prec));
                }
            }
            reps.push(weisman_check(7, 3, 1));
            reps.push(weisman_check(9, 3, 2));
            reps.push(weisman_check(12, 5, 1));
            if max >= 6 {
                reps.push(m6_decomposition_check());
            }
            reps.push(interlace_core::sequences::extra_divisibility_observations(max));
            Ok(reps)
        }
        "convergence" => {
            let max = max.unwrap_or(4).max(1) as u32;
            let mut reps = Vec::new();
            reps.push(m2_suite(14, prec.max(128)));
            for m in 1..=max {
                reps.push(convergence_suite(m, 12, prec));
            }
            if max >= 5 {
                reps.push(example_m5_check(prec.max(128)));
            }
            Ok(reps)
        }
        "spectral" => {
            let max = max.unwrap_or(8);
            let mut reps = Vec::new();
            reps.push(three_term_check(PQ::P, max.max(2)));
            reps.push(three_term_check(PQ::Q, max.max(2)));
            reps.push(ode_check(PQ::P, max));
            reps.push(ode_check(PQ::Q, max));
            reps.push(cd_check(max.min(16)));
            reps.push(ladder_check(max));
            reps.push(quad_identity_check(max));
            let mut ortho = Report::new("ortho-inner");
            for l in 0..=4u64 {
                for k in 0..=4u64 {
                    ortho.merge(ortho_inner(PQ::P, l, k).1);
                    if l >= 1 && k >= 1 {
                        ortho.merge(ortho_inner(PQ::Q, l, k).1);
                    }
                }
            }
            reps.push(ortho);
            reps.push(critical_line_check(PQ::P, max));
            reps.push(critical_line_check(PQ::Q, max));
            for m in [2, 4, max.min(8)] {
                reps.push(radical_form_check(m, &[rat_int(3), rat(7, 2), rat(-5, 2), rat_int(2)], prec));
            }
            reps.push(q_analytic_checks(
                2,
                &[(rat_int(-1), rat(1, 8)), (rat_int(-2), rat(1, 16))],
                24,
                prec.max(128),
            ));
            let grid = TanhSinhGrid::new(192, 7);
            let mut oracle = Report::new("mellin-oracle");
            for family in [PQ::P, PQ::Q] {
                for m in 0..=max.min(4) {
                    oracle.merge(mellin_oracle_check(&grid, family, m));
                }
            }
            reps.push(oracle);
            Ok(reps)
        }
        "minors" => {
            let max = max.unwrap_or(5).max(1).min(6) as u32;
            let mut reps = Vec::new();
            for m in 1..=max {
                for i in 1..=m {
                    reps.push(minor_order_check(m, i, prec));
                }
            }
            if max >= 5 {
                reps.push(example_m5_minors_check());
            }
            for m in 3..=max.min(7).max(3) {
                if m >= 3 {
                    reps.push(mminus1_conjecture_check(m, prec));
                }
            }
            Ok(reps)
        }
        "all" => {
            let mut reps = Vec::new();
            for suite in SUITE_NAMES.iter().filter(|s| **s != "all") {
                reps.extend(run_suite(suite, max, prec)?);
            }
            Ok(reps)
        }
        other => Err(format!(
            "unknown suite `{other}` (expected one of {})",
            SUITE_NAMES.join(", ")
        )),
    }
}
