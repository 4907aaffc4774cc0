use binomial_semigroups::cores::{algorithm1, enumerate_admissible, NumericalSet, MAX_ENUMERATION_FROBENIUS};
use binomial_semigroups::family::{bn_report, bn_spec, decompose, DecompositionMethod};
use binomial_semigroups::{Error, Nat, NumericalSemigroup, Result};
use serde_json::{json, Value};

use crate::output::{elided, line, list, num, nums, Outcome};

pub fn report(n: u64) -> Result<Outcome> {
    let spec = bn_spec(n)?;
    let r = bn_report(n)?;
    let result = json!({
        "n": num(n),
        "factorization": spec.factorization.to_string(),
        "scale": num(&spec.scale),
        "minimal_generators": nums(&r.minimal_generators),
        "embedding_dimension": num(r.embedding_dimension),
        "apery_base": num(r.apery_base),
        "apery_set": nums(&r.apery_set),
        "frobenius": num(&r.frobenius),
        "genus": num(&r.genus),
        "pseudo_frobenius": nums(&r.pseudo_frobenius),
        "type": num(r.type_of),
        "symmetric": r.symmetric,
        "telescopic": r.telescopic,
    });
    let text = vec![
        line("n", format!("{n} = {}", spec.factorization)),
        line("scale", &spec.scale),
        line("generators", list(&r.minimal_generators)),
        line("embedding dim", r.embedding_dimension),
        line(&format!("Ap(S, {})", r.apery_base), elided(&r.apery_set)),
        line("Frobenius", &r.frobenius),
        line("genus", &r.genus),
        line("pseudo-Frobenius", list(&r.pseudo_frobenius)),
        line("type", r.type_of),
        line("symmetric", r.symmetric),
        line("telescopic", r.telescopic),
    ];
    Ok(Outcome::ok(json!({ "n": num(n) }), result, text))
}

pub fn semigroup(generators: &[Nat], apery_base: Option<Nat>) -> Result<Outcome> {
    let s = NumericalSemigroup::new(generators)?;
    let base = apery_base.unwrap_or_else(|| s.multiplicity().clone());
    let apery = s.apery_set(&base)?.sorted();
    let gaps = match s.gaps() {
        Ok(g) => Some(g),
        Err(Error::BoundExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    let pf = s.pseudo_frobenius();
    let result = json!({
        "minimal_generators": nums(s.generators()),
        "embedding_dimension": num(s.embedding_dimension()),
        "apery_base": num(&base),
        "apery_set": nums(&apery),
        "frobenius": num(s.frobenius()),
        "genus": num(s.genus()),
        "gaps": gaps.as_ref().map_or(Value::Null, nums),
        "pseudo_frobenius": nums(&pf),
        "type": num(s.type_of()),
        "symmetric": s.is_symmetric(),
        "telescopic": s.is_telescopic(),
    });
    let text = vec![
        line("generators", list(s.generators())),
        line("embedding dim", s.embedding_dimension()),
        line(&format!("Ap(S, {base})"), elided(&apery)),
        line("Frobenius", s.frobenius()),
        line("genus", s.genus()),
        line("gaps", gaps.as_ref().map_or_else(|| "too many to list".into(), |g| elided(g))),
        line("pseudo-Frobenius", list(&pf)),
        line("type", s.type_of()),
        line("symmetric", s.is_symmetric()),
        line("telescopic", s.is_telescopic()),
    ];
    let input = json!({ "generators": nums(generators), "apery_base": num(&base) });
    Ok(Outcome::ok(input, result, text))
}

fn method_name(m: DecompositionMethod) -> &'static str {
    match m {
        DecompositionMethod::Generator => "generator",
        DecompositionMethod::BinomialIdentity => "binomial_identity",
        DecompositionMethod::AperyResidue => "apery_residue",
    }
}

pub fn decompose_cmd(n: u64, m: u64) -> Result<Outcome> {
    let r = decompose(n, m)?;
    if !r.is_valid() {
        return Err(Error::Internal(format!(
            "representation of C({n}, {m}) sums to {}, not {}",
            r.weighted_sum(),
            r.value
        )));
    }
    let terms: Vec<Value> = r
        .basis
        .iter()
        .zip(&r.coefficients)
        .map(|(b, c)| json!({ "generator": num(b), "coefficient": num(c) }))
        .collect();
    let result = json!({
        "value": num(&r.value),
        "scaled": r.scaled,
        "method": method_name(r.method),
        "terms": terms,
    });
    let sum: Vec<String> = r
        .basis
        .iter()
        .zip(&r.coefficients)
        .filter(|(_, c)| **c != Nat::from(0u32))
        .map(|(b, c)| format!("{c}·{b}"))
        .collect();
    let what = if r.scaled { format!("C({n}, {m})/p") } else { format!("C({n}, {m})") };
    let text = vec![
        line("value", format!("{what} = {}", r.value)),
        line("basis", list(&r.basis)),
        line("coefficients", list(&r.coefficients)),
        line("sum", if sum.is_empty() { "0".into() } else { sum.join(" + ") }),
        line("method", method_name(r.method)),
    ];
    Ok(Outcome::ok(json!({ "n": num(n), "m": num(m) }), result, text))
}

pub enum CoreSource {
    Gaps(Vec<u64>),
    Semigroup(Vec<u64>),
}

pub fn core(source: &CoreSource) -> Result<Outcome> {
    let (set, input) = match source {
        CoreSource::Gaps(g) => (NumericalSet::from_gaps(g)?, json!({ "gaps": nums(g) })),
        CoreSource::Semigroup(gens) => {
            let s = NumericalSemigroup::from_u64s(gens)?;
            (NumericalSet::from_semigroup(&s)?, json!({ "semigroup": nums(gens) }))
        }
    };
    let lambda = set.partition();
    let hooks: Vec<usize> = lambda.hook_set().into_iter().collect();
    let a = set.a_set();
    let pairs =
        if set.frobenius() <= MAX_ENUMERATION_FROBENIUS as i64 { Some(enumerate_admissible(&set)?) } else { None };
    let result = json!({
        "frobenius": num(set.frobenius()),
        "gaps": nums(set.gaps()),
        "partition": nums(lambda.parts()),
        "hook_set": nums(&hooks),
        "a_set": { "small_elements": nums(a.small_elements()), "frobenius": num(a.frobenius()) },
        "admissible_pairs": pairs.as_ref().map_or(Value::Null, |ps| {
            Value::Array(ps.iter().map(|&(s, p)| json!({ "s": num(s), "p": num(p) })).collect())
        }),
    });
    let shown = pairs.map_or_else(
        || "not enumerated".into(),
        |ps| list(&ps.iter().map(|(s, p)| format!("({s}, {p})")).collect::<Vec<_>>()),
    );
    let text = vec![
        line("Frobenius", set.frobenius()),
        line("gaps", elided(&set.gaps())),
        line("partition", &lambda),
        line("hook set", elided(&hooks)),
        line("A(S)", &a),
        line("admissible pairs", shown),
    ];
    Ok(Outcome::ok(input, result, text))
}

pub fn admissible(n: u64, seed: u64, p: u64, force_base: bool) -> Result<Outcome> {
    let r = algorithm1(n, seed, p, force_base)?;
    let result = json!({
        "base": num(r.base),
        "frobenius": num(&r.frobenius),
        "triple": nums(&r.triple),
        "count": num(&r.count),
        "admissible": r.admissible,
        "extension": r.extension,
    });
    let [a, b, c] = &r.triple;
    let text = vec![
        line("base", r.base),
        line("Frobenius", &r.frobenius),
        line("triple", format!("({a}, {b}, {c})")),
        line("count", &r.count),
        line("admissible", r.admissible),
        line("prime-power base", r.extension),
    ];
    let input = json!({ "n": num(n), "seed": num(seed), "p": num(p), "force_base": force_base });
    Ok(Outcome::ok(input, result, text))
}
