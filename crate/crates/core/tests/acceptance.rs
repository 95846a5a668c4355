//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.
//!
//! Expected values (Catalan numbers, binomial closed forms, gap monomials) are
//! recomputed here from first principles rather than taken from the library.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use fcpoincare::closedform::{b_closed, poincare_chain_formula, poincare_shortcut_formula, sigma_pi, GapSpec};
use fcpoincare::fcenum::{inversion_polynomial, oracle_poincare, oracle_poincare_split};
use fcpoincare::recur::{
    check_catalan_recurrence, flipped_step, last_generator_triangle, poincare_by_main_recurrence,
    poincare_by_partition, poincare_sequence_by_partition, CoeffTable, MainRecurrence,
};
use fcpoincare::trimatrix::{
    check_generic_relation, check_shortcut, solve_by_chain_formula, solve_by_recurrence, GeneralInstance, UnitriMatrix,
};
use fcpoincare::Polynomial;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

struct Criterion {
    id: u8,
    name: &'static str,
    budget: Option<Duration>,
    run: fn() -> Outcome,
}

const CRITERIA: [Criterion; 9] = [
    Criterion {
        id: 1,
        name: "six methods agree for n <= 10",
        budget: Some(Duration::from_secs(120)),
        run: methods_agree,
    },
    Criterion {
        id: 2,
        name: "a_n(1) = C_(n+1) for n <= 20",
        budget: None,
        run: catalan_counts,
    },
    Criterion {
        id: 3,
        name: "catalan triangle against enumeration, n <= 12",
        budget: None,
        run: catalan_triangle,
    },
    Criterion {
        id: 4,
        name: "closed form equals recurrence table, j <= 14",
        budget: Some(Duration::from_secs(30)),
        run: closed_form_table,
    },
    Criterion {
        id: 5,
        name: "B_j^k at 0 and 1 for j <= 20; Catalan recurrence n <= 20",
        budget: None,
        run: specializations,
    },
    Criterion {
        id: 6,
        name: "substitution equals chain sums",
        budget: None,
        run: chain_solution,
    },
    Criterion {
        id: 7,
        name: "shortcut and generic relation for n <= 12; c_3^1",
        budget: None,
        run: shortcut_identities,
    },
    Criterion {
        id: 8,
        name: "saturated gap products are monomials, u <= 3, b <= 12",
        budget: None,
        run: saturated_gaps,
    },
    Criterion {
        id: 9,
        name: "flipped sign is caught by criterion 4",
        budget: None,
        run: negative_control,
    },
];

fn main() {
    let mut failures = 0;
    for c in &CRITERIA {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        let elapsed = start.elapsed();
        let outcome = match (outcome, c.budget) {
            (Ok(_), Some(budget)) if elapsed > budget => Err(format!("took {elapsed:.1?}, budget {budget:?}")),
            (o, _) => o,
        };
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failures += 1;
                ("FAIL", d)
            }
        };
        println!("{tag} criterion {}: {} -- {detail} [{elapsed:.2?}]", c.id, c.name);
    }
    println!("acceptance: {} passed, {failures} failed", CRITERIA.len() - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

// Independent integer oracles.

fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::from(0);
    }
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

/// `C_0..=C_max` from `C_(m+1) = sum_i C_i C_(m-i)`.
fn catalans(max: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::from(1)];
    for m in 0..max {
        let next = (0..=m).map(|i| &c[i] * &c[m - i]).sum();
        c.push(next);
    }
    c
}

fn methods_agree() -> Outcome {
    let table = CoeffTable::build(13);
    for n in 0..=10 {
        let oracle = oracle_poincare(n);
        let mut others = vec![
            ("partition", poincare_by_partition(n)),
            (
                "main-recurrence",
                poincare_by_main_recurrence(n, &table).map_err(|e| e.to_string())?,
            ),
            ("chain", poincare_chain_formula(n, &table).map_err(|e| e.to_string())?),
            (
                "shortcut",
                poincare_shortcut_formula(n, &table).map_err(|e| e.to_string())?,
            ),
        ];
        if n <= 9 {
            others.push(("permutation", inversion_polynomial(n + 1).map_err(|e| e.to_string())?));
        }
        for (name, p) in others {
            ensure(p.coeffs() == oracle.coeffs(), || {
                format!("n={n}: {name} gives {p}, oracle {oracle}")
            })?;
        }
    }
    Ok("oracle, partition, main recurrence, chain, shortcut; permutations for n <= 9".into())
}

fn catalan_counts() -> Outcome {
    let c = catalans(21);
    let table = CoeffTable::build(23);
    let partition = poincare_sequence_by_partition(20);
    let main = MainRecurrence::new(&table).sequence(20).map_err(|e| e.to_string())?;
    for n in 0..=20 {
        let want = &c[n + 1];
        ensure(partition[n].eval_i64(1) == *want, || format!("partition at n={n}"))?;
        ensure(main[n].eval_i64(1) == *want, || format!("main recurrence at n={n}"))?;
        if n <= 14 {
            ensure(oracle_poincare(n).eval_i64(1) == *want, || format!("oracle at n={n}"))?;
            let chain = poincare_chain_formula(n, &table).map_err(|e| e.to_string())?;
            ensure(chain.eval_i64(1) == *want, || format!("chain formula at n={n}"))?;
            let shortcut = poincare_shortcut_formula(n, &table).map_err(|e| e.to_string())?;
            ensure(shortcut.eval_i64(1) == *want, || format!("shortcut at n={n}"))?;
        }
    }
    Ok(format!("C_21 = {}", c[21]))
}

fn catalan_triangle() -> Outcome {
    let triangle = last_generator_triangle(12);
    for n in 1..=12usize {
        let (total, by_last) = oracle_poincare_split(n);
        ensure(total == poincare_by_partition(n), || format!("a_{n} split total"))?;
        for j in 1..=n {
            let formula = binom(2 * n as i64 - j as i64 + 1, n as i64) * j / (n + 1);
            let value = by_last[j - 1].eval_i64(1);
            ensure(value == formula, || {
                format!("(n,j)=({n},{j}): oracle {value}, formula {formula}")
            })?;
            ensure(triangle[n - 1][j - 1] == by_last[j - 1], || {
                format!("(n,j)=({n},{j}): recurrence polynomial differs from oracle")
            })?;
        }
    }
    Ok("78 cells".into())
}

/// First `(j, k)` where the closed form and `table` differ.
fn first_closed_form_mismatch(table: &CoeffTable, max: usize) -> Result<Option<(usize, usize)>, String> {
    for j in 1..=max {
        for k in 1..=j {
            if b_closed(j, k).map_err(|e| e.to_string())? != *table.b(j, k) {
                return Ok(Some((j, k)));
            }
        }
    }
    Ok(None)
}

fn closed_form_table() -> Outcome {
    match first_closed_form_mismatch(&CoeffTable::build(14), 14)? {
        None => Ok("105 entries".into()),
        Some((j, k)) => Err(format!("mismatch at (j,k)=({j},{k})")),
    }
}

fn specializations() -> Outcome {
    let table = CoeffTable::build(20);
    for j in 1..=20usize {
        for k in 1..=j {
            let big = table.upper(j, k);
            ensure(big.eval_i64(0) == BigInt::from(1), || format!("B_{j}^{k}(0)"))?;
            let sign = if k % 2 == 1 { 1 } else { -1 };
            let want = binom(j as i64 - k as i64, k as i64 - 1) * sign;
            ensure(big.eval_i64(1) == want, || {
                format!("B_{j}^{k}(1) = {}, want {want}", big.eval_i64(1))
            })?;
        }
    }
    let c = catalans(20);
    for n in 1..=20usize {
        let rhs = (2..=n).fold(BigInt::from(n), |acc, k| {
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc - binom((n - k) as i64, k as i64 - 1) * sign * &c[n - k + 1]
        });
        ensure(rhs == c[n], || format!("Catalan recurrence at n={n}"))?;
        ensure(check_catalan_recurrence(n), || {
            format!("library Catalan check at n={n}")
        })?;
    }
    Ok("210 entries, 20 ranks".into())
}

fn chain_solution() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    let mut sizes = [0usize; 8];
    for i in 0..200 {
        let len = rng.gen_range(1..=7);
        sizes[len] += 1;
        let inst = GeneralInstance::random_integer(&mut rng, len, 20);
        ensure(solve_by_recurrence(&inst) == solve_by_chain_formula(&inst), || {
            format!("random instance {i} (N={len})")
        })?;
    }
    let table = CoeffTable::build(12);
    let inst = GeneralInstance::poincare(&table, 12).map_err(|e| e.to_string())?;
    let u = solve_by_recurrence(&inst);
    ensure(u == solve_by_chain_formula(&inst), || {
        "Poincaré instance, N = 12".into()
    })?;
    let a = poincare_sequence_by_partition(11);
    for n in 1..=12 {
        ensure(u[n - 1] == a[n - 1].shift(n + 1), || {
            format!("u_{n} != q^(n+1) a_(n-1)")
        })?;
    }
    Ok(format!(
        "200 random instances (sizes {:?}), Poincaré instance N = 12",
        &sizes[1..]
    ))
}

fn shortcut_identities() -> Outcome {
    let table = CoeffTable::build(14);
    let p = UnitriMatrix::from_coeff_table(&table, 14).map_err(|e| e.to_string())?;
    let a = poincare_sequence_by_partition(12);
    for n in 1..=12 {
        ensure(check_shortcut(n, &p, &a).map_err(|e| e.to_string())?, || {
            format!("shortcut at n={n}")
        })?;
        ensure(check_generic_relation(n, &p).map_err(|e| e.to_string())?, || {
            format!("generic relation at n={n}")
        })?;
    }
    let c31 = p.inverse().entry(3, 1);
    let want = -(Polynomial::q_pow(2) * (Polynomial::from_i64s(&[1]) - Polynomial::q_pow(2)));
    ensure(c31 == want, || format!("c_3^1 = {c31}"))?;
    Ok(format!("c_3^1 = {c31}"))
}

fn saturated_gaps() -> Outcome {
    let mut count = 0;
    for b in 1..=12usize {
        for a in 1..=b {
            let room = b - a + 1;
            for lengths in gap_lengths(room, 3) {
                let spec = GapSpec::new(a, b, lengths.clone()).map_err(|e| e.to_string())?;
                // gaps fill [a, b] back to back; gap t starts after the earlier ones
                let mut start = a;
                let mut exponent = 0;
                for l in &lengths {
                    exponent += start;
                    start += l;
                }
                let sign = if lengths.len() % 2 == 0 { 1 } else { -1 };
                let want = Polynomial::monomial(sign, exponent);
                let got = sigma_pi(&spec);
                ensure(got == want, || format!("a={a} b={b} lengths={lengths:?}: {got}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} specs"))
}

/// Sequences of 1 to `max_parts` integers, each at least 2, summing to `total`.
fn gap_lengths(total: usize, max_parts: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut stack = vec![(Vec::new(), total)];
    while let Some((acc, left)) = stack.pop() {
        if left == 0 && !acc.is_empty() {
            out.push(acc);
            continue;
        }
        if acc.len() == max_parts {
            continue;
        }
        for l in 2..=left {
            let mut next = acc.clone();
            next.push(l);
            stack.push((next, left - l));
        }
    }
    out
}

fn negative_control() -> Outcome {
    let bad = CoeffTable::build_with_step(14, flipped_step);
    match first_closed_form_mismatch(&bad, 14)? {
        Some((3, 2)) => Ok("criterion 4 fails at (j,k)=(3,2)".into()),
        Some((j, k)) => Err(format!("first failure at ({j},{k}), expected (3,2)")),
        None => Err("flipped table passed criterion 4".into()),
    }
}
