use binomial_semigroups::exactmath::{
    binom_residue_lemma, binomial, binomial_valuation_kummer, factorize, gcd_list, is_prime, p_adic_valuation,
    sun_congruence_holds,
};
use binomial_semigroups::family::verify_closed_vs_oracle;
use binomial_semigroups::{Nat, Result};
use num_integer::Integer;
use serde_json::{json, Value};

use crate::output::{num, Outcome};

pub const MAX_VERIFY_N: u64 = 40;

struct Row {
    check: String,
    failures: Vec<String>,
}

impl Row {
    fn new(check: impl Into<String>, failures: Vec<String>) -> Self {
        Row { check: check.into(), failures }
    }
}

fn closed_forms(max_n: u64) -> Result<Vec<Row>> {
    let mut rows = Vec::new();
    for n in (4..=max_n).filter(|&n| !is_prime(n)) {
        let cmp = verify_closed_vs_oracle(n, MAX_VERIFY_N)?;
        let diffs =
            cmp.mismatches().map(|f| format!("{}: closed {} vs engine {}", f.field, f.closed, f.oracle)).collect();
        rows.push(Row::new(format!("S(B_{n}) closed forms vs engine"), diffs));
    }
    Ok(rows)
}

fn pascal() -> Result<Row> {
    let mut bad = Vec::new();
    for n in 1..=60u64 {
        for k in 1..n {
            if binomial(n, k)? != binomial(n - 1, k - 1)? + binomial(n - 1, k)?
                || binomial(n, k)? != binomial(n, n - k)?
            {
                bad.push(format!("C({n},{k})"));
            }
        }
    }
    Ok(Row::new("Pascal rule and symmetry, n ≤ 60", bad))
}

fn legendre(p: u64, n: u64, k: u64) -> u32 {
    let mut total = 0;
    let mut q = p;
    while q <= n {
        total += (n / q - k / q - (n - k) / q) as u32;
        q *= p;
    }
    total
}

fn valuations() -> Result<Row> {
    let mut bad = Vec::new();
    for p in (2..=13).filter(|&p| is_prime(p)) {
        for n in 0..=60u64 {
            for k in 0..=n {
                let kummer = binomial_valuation_kummer(p, n, k)?;
                let direct = p_adic_valuation(p, &binomial(n, k)?)?;
                if kummer != direct || direct != legendre(p, n, k) {
                    bad.push(format!("v_{p}(C({n},{k}))"));
                }
            }
        }
    }
    Ok(Row::new("Kummer, direct and Legendre valuations agree, p ≤ 13, n ≤ 60", bad))
}

fn row_gcd() -> Result<Row> {
    let mut bad = Vec::new();
    for n in 2..=200u64 {
        let row: Vec<Nat> = (1..n).map(|k| binomial(n, k)).collect::<Result<_>>()?;
        let f = factorize(n)?;
        let expected = if f.is_prime_power() { f.pairs()[0].0 } else { 1 };
        if gcd_list(&row)? != Nat::from(expected) {
            bad.push(format!("n = {n}"));
        }
    }
    Ok(Row::new("gcd(B_n) is p for n = p^m and 1 otherwise, n ≤ 200", bad))
}

fn sun() -> Result<Row> {
    let mut bad = Vec::new();
    for p in [2, 3, 5, 7] {
        for a in 1..=2 {
            for m in 0..=12 {
                for n2 in 0..=m {
                    if !sun_congruence_holds(p, a, m, n2)? {
                        bad.push(format!("(p,a,m,n) = ({p},{a},{m},{n2})"));
                    }
                }
            }
        }
    }
    Ok(Row::new("Sun congruence, p ≤ 7, 1 ≤ a ≤ 2, m ≤ 12", bad))
}

/// The part of the residue lemma that holds: `C(n, p^k)` vanishes modulo every
/// other prime-power part of `n`. The full statement modulo `n` is reported
/// separately as a note.
fn residues() -> Result<(Row, String)> {
    let mut bad = Vec::new();
    let mut counterexamples = Vec::new();
    for n in 2..=300u64 {
        let f = factorize(n)?;
        for &(p, kmax) in f.pairs() {
            for k in 1..=kmax {
                let c = binomial(n, p.pow(k))?;
                for &(q, e) in f.pairs().iter().filter(|(q, _)| *q != p) {
                    if !c.is_multiple_of(&Nat::from(q.pow(e))) {
                        bad.push(format!("C({n},{p}^{k}) mod {q}^{e}"));
                    }
                }
                let (l, r) = binom_residue_lemma(n, p, k)?;
                if l != r {
                    counterexamples.push(format!("C({n},{p}^{k}) ≡ {l}, not {r}"));
                }
            }
        }
    }
    let note = if counterexamples.is_empty() {
        "C(n, p^k) ≡ n/p^k (mod n) for all n ≤ 300".to_string()
    } else {
        format!(
            "C(n, p^k) ≡ n/p^k (mod n) fails {} times for n ≤ 300, e.g. {}",
            counterexamples.len(),
            counterexamples[0]
        )
    };
    Ok((Row::new("C(n, p^k) ≡ 0 modulo the other prime-power parts of n, n ≤ 300", bad), note))
}

pub fn verify(max_n: u64) -> Result<Outcome> {
    let mut rows = closed_forms(max_n)?;
    rows.push(pascal()?);
    rows.push(valuations()?);
    rows.push(row_gcd()?);
    rows.push(sun()?);
    let (row, note) = residues()?;
    rows.push(row);

    let all_pass = rows.iter().all(|r| r.failures.is_empty());
    let json_rows: Vec<Value> = rows
        .iter()
        .map(|r| json!({ "check": r.check, "pass": r.failures.is_empty(), "failures": r.failures }))
        .collect();
    let mut text: Vec<String> = rows
        .iter()
        .map(|r| {
            let mark = if r.failures.is_empty() { "pass" } else { "FAIL" };
            let mut s = format!("{mark}  {}", r.check);
            if !r.failures.is_empty() {
                s.push_str(&format!(" ({})", r.failures.join("; ")));
            }
            s
        })
        .collect();
    text.push(format!("note  {note}"));
    text.push(if all_pass { "all checks passed".into() } else { "some checks failed".into() });
    let result = json!({ "all_pass": all_pass, "checks": json_rows, "notes": [note] });
    Ok(Outcome { input: json!({ "max_n": num(max_n) }), result, text, status: u8::from(!all_pass) })
}
