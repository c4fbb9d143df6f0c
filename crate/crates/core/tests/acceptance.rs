//! End-to-end acceptance run. Every criterion runs even if an earlier one
//! fails; each prints one PASS/FAIL line and the process exits non-zero if
//! any failed.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigUint;
use rwl_core::arith::to_natural;
use rwl_core::formulas::{self, FormulaId};
use rwl_core::graph::{build_family, FamilySpec};
use rwl_core::identities::{self, ClaimId, VerificationResult};
use rwl_core::walk::{count_labelings_dp, count_labelings_started_at, enumerate_labelings_walk, LabelingOrder};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn from_result(r: VerificationResult) -> Outcome {
    if r.passed() {
        Ok(format!("n {}..={}", r.n_min, r.n_max))
    } else {
        Err(format!("counterexample {:?}", r.counterexample))
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn oracle_equivalence() -> Outcome {
    let r = identities::verify_oracle_equivalence(8, 200, 0x5eed).map_err(|e| e.to_string())?;
    let graphs = r.values.len();
    from_result(r).map(|s| format!("{s}, {graphs} graphs"))
}

fn formulas_vs_dp() -> Outcome {
    let dp = |spec: FamilySpec| count_labelings_dp(&build_family(&spec).unwrap()).unwrap();
    for n in 1..=12 {
        ensure(dp(FamilySpec::Complete(n)) == formulas::l_complete(n).unwrap(), || format!("complete n={n}"))?;
        ensure(dp(FamilySpec::Path(n)) == formulas::l_path(n).unwrap(), || format!("path n={n}"))?;
        if n >= 3 {
            ensure(dp(FamilySpec::Cycle(n)) == formulas::l_cycle(n).unwrap(), || format!("cycle n={n}"))?;
        }
    }
    for n in 1..=6 {
        let g = build_family(&FamilySpec::King { m: 2, n }).unwrap();
        ensure(count_labelings_dp(&g).unwrap() == formulas::l_king2(n).unwrap(), || format!("king2 n={n}"))?;
        // row-major numbering puts the first column at vertices 0 and n
        let first: BigUint = count_labelings_started_at(&g, 0).unwrap() + count_labelings_started_at(&g, n).unwrap();
        ensure(first == formulas::king2_start_first_column(n).unwrap(), || format!("king2 first column n={n}"))?;
    }
    for n in 1..=10 {
        ensure(dp(FamilySpec::Grid { m: 2, n }) == formulas::l_grid2_sum(n).unwrap(), || format!("grid2 n={n}"))?;
    }
    Ok("complete/path/cycle n<=12, king2 n<=6, grid2 n<=10".into())
}

fn spot(claim: ClaimId, expected: &[&str]) -> Result<(), String> {
    let r = identities::verify_exact_identity(claim, expected.len()).map_err(|e| e.to_string())?;
    let got: Vec<&str> = r.values.iter().map(|v| v.value.as_str()).collect();
    ensure(got == expected, || format!("{claim} spot values {got:?}"))
}

fn grid_sum_forms() -> Outcome {
    spot(ClaimId::GridForms, &["2", "16", "208"])?;
    from_result(identities::verify_exact_identity(ClaimId::GridForms, 500).map_err(|e| e.to_string())?)
}

fn recursion_forms() -> Outcome {
    spot(ClaimId::SumVsRecursion, &["1", "4", "22", "160"])?;
    from_result(identities::verify_exact_identity(ClaimId::SumVsRecursion, 500).map_err(|e| e.to_string())?)
}

fn inverse_central_forms() -> Outcome {
    let a = identities::verify_exact_identity(ClaimId::InverseCentralSums, 1000).map_err(|e| e.to_string())?;
    let b = identities::verify_exact_identity(ClaimId::PublishedForms, 1000).map_err(|e| e.to_string())?;
    from_result(a)?;
    from_result(b).map(|s| format!("{s}, both pairs"))
}

fn generating_functions() -> Outcome {
    for r in [
        identities::verify_egf_gg2(25),
        identities::verify_ogf_a087547(25),
        identities::verify_egf_a182525(25),
    ] {
        let r = r.map_err(|e| e.to_string())?;
        let claim = r.claim.clone();
        from_result(r).map_err(|e| format!("{claim}: {e}"))?;
    }
    Ok("25 terms of all three series".into())
}

fn integral_identities() -> Outcome {
    let r = identities::verify_integral_identities(20, 1e-8).map_err(|e| e.to_string())?;
    let max = r.max_residual().unwrap_or(0.0);
    from_result(r).map(|s| format!("{s}, max residual {max:e}"))
}

fn growth_rate() -> Outcome {
    let r = identities::check_asymptotic_gg2(&[25, 50, 100, 200, 400]).map_err(|e| e.to_string())?;
    let gaps: Vec<String> = r.residuals.iter().map(|x| format!("{}:{:e}", x.n, x.value)).collect();
    from_result(r).map(|_| format!("|r_n - 1| = {}", gaps.join(", ")))
}

fn path_labelings() -> Outcome {
    let g = build_family(&FamilySpec::Path(7)).unwrap();
    let all = enumerate_labelings_walk(&g).map_err(|e| e.to_string())?;
    let good = LabelingOrder::from_labels(&[7, 6, 5, 3, 2, 1, 4]).unwrap();
    let bad = LabelingOrder::from_labels(&[4, 6, 5, 3, 2, 1, 7]).unwrap();
    ensure(all.contains(&good), || format!("{good} rejected"))?;
    ensure(!all.contains(&bad), || format!("{bad} accepted"))?;
    Ok(format!("{good} obtainable, {bad} not"))
}

fn integrality() -> Outcome {
    let mut checked = 0;
    for id in FormulaId::ALL.into_iter().filter(|id| id.is_integral()) {
        let top = match id {
            FormulaId::Complete | FormulaId::Path | FormulaId::Cycle => 12,
            FormulaId::BalaCentral | FormulaId::BalaFactorial => 1000,
            _ => 500,
        };
        for n in id.min_n().max(1)..=top {
            let v = id.evaluate(n).map_err(|e| e.to_string())?;
            ensure(to_natural(&v).is_some(), || format!("{id} at n={n} gave {v}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} evaluations"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("oracle equivalence", oracle_equivalence),
        ("formula vs dp", formulas_vs_dp),
        ("grid sum forms agree", grid_sum_forms),
        ("sum form vs recursion", recursion_forms),
        ("inverse central binomial forms", inverse_central_forms),
        ("generating functions", generating_functions),
        ("integral identities", integral_identities),
        ("growth rate", growth_rate),
        ("path labelings", path_labelings),
        ("integrality guard", integrality),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = started.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS {name} ({detail}) [{secs:.2}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name} ({detail}) [{secs:.2}s]", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
