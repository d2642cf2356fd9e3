//! Acceptance criteria 1–10, one line per criterion. Exits nonzero if any
//! criterion fails or exceeds its time budget.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use gln_boundary::checks::{self, CheckReport};
use gln_boundary::random::Sampler;
use gln_boundary::reps::{build_rep, Signature};

const SEED: u64 = 0x5eed_2024;

type Criterion = (u32, u64, Box<dyn FnOnce(&mut Sampler) -> CheckReport>);

/// Semistandard tableaux of shape `shape` with entries in `1..=n`, by direct
/// enumeration.
fn ssyt_count(shape: &[usize], n: usize) -> usize {
    let cells: Vec<(usize, usize)> =
        shape.iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c))).collect();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len]).collect();
    fn fill(idx: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<usize>>, n: usize) -> usize {
        let Some(&(r, c)) = cells.get(idx) else { return 1 };
        let lo_row = if c > 0 { grid[r][c - 1] } else { 1 };
        let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        let mut total = 0;
        for v in lo_row.max(lo_col)..=n {
            grid[r][c] = v;
            total += fill(idx + 1, cells, grid, n);
        }
        grid[r][c] = 0;
        total
    }
    fill(0, &cells, &mut grid, n)
}

fn dimension_oracle(max_n: usize, max_part: usize) -> CheckReport {
    let start = Instant::now();
    let mut report = CheckReport {
        name: "representation dimensions",
        cases: 0,
        nontrivial: 0,
        failures: Vec::new(),
        elapsed: Duration::ZERO,
    };
    for n in 1..=max_n {
        for sig in Signature::all(n, max_part) {
            report.cases += 1;
            let expected = ssyt_count(sig.parts(), n);
            report.nontrivial += (expected > 1) as usize;
            match build_rep(&sig) {
                Ok(rep) if rep.dim() == expected => {}
                Ok(rep) => report.failures.push(format!("ν = {sig}: dim {} but {expected} tableaux", rep.dim())),
                Err(e) => report.failures.push(format!("ν = {sig}: {e}")),
            }
        }
    }
    report.elapsed = start.elapsed();
    report
}

fn main() -> ExitCode {
    assert_eq!(ssyt_count(&[2, 1], 3), 8);
    assert_eq!(ssyt_count(&[1, 1], 4), 6);
    let mut s = Sampler::new(SEED);
    let criteria: Vec<Criterion> = vec![
        (1, 10, Box::new(|s| checks::category_laws(s, 500))),
        (2, 30, Box::new(|s| checks::exterior_homomorphism(s, 200))),
        (3, 30, Box::new(|s| checks::hinge_alternative(s, 200))),
        (4, 60, Box::new(|s| checks::weak_products(s, 100))),
        (5, 60, Box::new(|s| checks::exponent_cross_check(s, 200))),
        (6, 60, Box::new(|s| checks::two_path_limits(s, 100))),
        (7, 120, Box::new(|s| checks::representation_limits(s, 60, 3, 3))),
        (8, 60, Box::new(|_| dimension_oracle(4, 4))),
        (9, 60, Box::new(|s| checks::urchin_square(s, 50, 2, 3))),
        (10, 1, Box::new(|_| checks::orbit_arithmetic(10, 6))),
    ];
    let mut failed = 0;
    for (id, budget, check) in criteria {
        let report = check(&mut s);
        let in_time = report.elapsed <= Duration::from_secs(budget);
        let ok = report.passed() && in_time;
        failed += (!ok) as usize;
        let budget_note = if in_time { String::new() } else { format!(" (over the {budget} s budget)") };
        println!("criterion {id:>2}: {} — {report}{budget_note}", if ok { "pass" } else { "FAIL" });
    }
    if failed == 0 {
        println!("acceptance: all 10 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria fail");
        ExitCode::FAILURE
    }
}
