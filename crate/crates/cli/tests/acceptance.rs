//! Runs the thirteen acceptance criteria at full size and prints one line
//! per criterion. Exits nonzero if any claim fails or a time limit is hit.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use absorder::verify::{criterion, SuiteOptions, CRITERIA};

const TITLES: [&str; 13] = [
    "NC^B(n) census against closed forms, n <= 4",
    "L_n census against closed forms, n <= 5",
    "L(k, r) census against closed forms, k + r <= 5",
    "annular piece E of L(k, 1), k <= 4, m <= 6",
    "lattice criterion for every [e, w] in B_n, n <= 4",
    "lattice criterion in D_4, D_5 and the D_5/D_6 witnesses",
    "lambda is EL on B_3 and random B_4 intervals; canonical chains",
    "lambda1 and lambda2 are EL on L_n, n <= 4",
    "(e, [1][2][3][4]) in D_4 is disconnected and not CM",
    "Euler characteristics: series, Mobius and homology agree",
    "Cohen-Macaulay order complexes of Abs(S_n) - e and J_n - e",
    "cross-validation of covers, order, rank functions, zeta",
    "cycle-lift ideals, fiber ideals and cover lifting",
];

fn limit(id: u8) -> Option<Duration> {
    match id {
        1 => Some(Duration::from_secs(30)),
        2 | 3 => Some(Duration::from_secs(60)),
        5 | 10 => Some(Duration::from_secs(300)),
        _ => None,
    }
}

fn main() -> ExitCode {
    let options = SuiteOptions::default();
    let mut failed = 0;
    for id in CRITERIA {
        let start = Instant::now();
        let result = criterion(id, options);
        let elapsed = start.elapsed();
        let title = TITLES[id as usize - 1];
        let (ok, detail) = match &result {
            Err(err) => (false, format!("error: {err}")),
            Ok(claims) => {
                let bad: Vec<_> = claims.iter().filter(|c| !c.pass).collect();
                let over = limit(id).filter(|&l| elapsed > l);
                let mut detail = format!("{} claims", claims.len());
                if let Some(l) = over {
                    detail += &format!(", over the {}s limit", l.as_secs());
                }
                for c in &bad {
                    detail += &format!("\n      {}: expected {}, computed {}", c.id, c.expected, c.computed);
                }
                (bad.is_empty() && !claims.is_empty() && over.is_none(), detail)
            }
        };
        if !ok {
            failed += 1;
        }
        println!(
            "criterion {id:>2} {} ({:.2}s) {title}: {detail}",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64()
        );
    }
    println!("acceptance: {} of {} criteria passed", CRITERIA.count() - failed, CRITERIA.count());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
