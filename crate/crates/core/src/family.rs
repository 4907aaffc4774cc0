//! Closed forms for `S(B_n)`, the numerical semigroup generated by
//! `C(n, 1), …, C(n, n − 1)` (each divided by `p` when `n = p^m`).
//!
//! Writing `n = p_1^{k_1} ⋯ p_t^{k_t}`:
//!
//! * for `t ≥ 2` the minimal generators are `C(n, 1)` and `C(n, p_i^j)` for
//!   `1 ≤ j ≤ k_i`, and `Ap(S, n)` is the box of sums `Σ c_{i,j}·C(n, p_i^j)`
//!   with `0 ≤ c_{i,j} < p_i`;
//! * for `n = p^m` the generators are `C(n, p^i)/p` for `0 ≤ i < m`, and
//!   `Ap(S, p^{m−1})` is the box `Σ c_i·C(n, p^i)/p`, `1 ≤ i < m`, `0 ≤ c_i < p`.
//!
//! Everything else (Frobenius number, genus, pseudo-Frobenius set) follows
//! from the box. [`verify_closed_vs_oracle`] recomputes all of it with the
//! generic engine in [`crate::semigroup`].

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{binomial, factorize, gallier_bound, gcd_list, is_prime, Factorization, Nat};
use crate::semigroup::{NumericalSemigroup, MAX_APERY_BASE};

/// Default upper limit on `n` for [`verify_closed_vs_oracle`].
pub const ORACLE_DEFAULT_BOUND: u64 = 30;

/// Largest `n` for which [`bn_spec`] recomputes the gcd of the whole row.
const SCALE_CHECK_LIMIT: u64 = 200;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialSemigroupSpec {
    pub n: u64,
    pub factorization: Factorization,
    pub is_prime_power: bool,
    /// gcd of `B_n`: `p` when `n = p^m`, else 1.
    pub scale: Nat,
}

/// One non-multiplicity generator `C(n, index)/scale` and the size of its Apéry box side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxGenerator {
    pub index: u64,
    pub value: Nat,
    /// The coefficient of this generator ranges over `0..radix` in the Apéry box.
    pub radix: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialSemigroupReport {
    pub n: u64,
    pub minimal_generators: Vec<Nat>,
    pub embedding_dimension: usize,
    pub apery_base: u64,
    /// Ascending.
    pub apery_set: Vec<Nat>,
    pub frobenius: Nat,
    pub genus: Nat,
    pub pseudo_frobenius: Vec<Nat>,
    pub type_of: usize,
    pub symmetric: bool,
    pub telescopic: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecompositionMethod {
    /// `C(n, m)` (or its mirror `C(n, n − m)`) is itself a generator.
    Generator,
    /// The identity `C(n,r) = lead·n + Σ p_i^j·C(n, p_i^j)` with `lead ≥ 0`.
    BinomialIdentity,
    /// Apéry entry of the residue class plus a multiple of the multiplicity.
    AperyResidue,
}

/// `value = Σ coefficients[i]·basis[i]`, where `value` is `C(n, m)`, divided by `p` when `scaled`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    pub n: u64,
    pub m: u64,
    pub basis: Vec<Nat>,
    pub coefficients: Vec<Nat>,
    pub value: Nat,
    pub scaled: bool,
    pub method: DecompositionMethod,
}

impl Representation {
    pub fn weighted_sum(&self) -> Nat {
        self.basis.iter().zip(&self.coefficients).map(|(b, c)| b * c).sum()
    }

    pub fn is_valid(&self) -> bool {
        self.basis.len() == self.coefficients.len() && self.weighted_sum() == self.value
    }
}

/// Result of re-evaluating one of the binomial identities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    /// Coefficient of `C(n, 1)`; may be negative.
    pub lead: BigInt,
    /// The right-hand side re-evaluates to the binomial exactly.
    pub holds: bool,
}

pub fn bn_spec(n: u64) -> Result<BinomialSemigroupSpec> {
    if n < 2 {
        return Err(Error::domain(format!("S(B_n) needs n ≥ 2, got {n}")));
    }
    let factorization = factorize(n)?;
    let is_prime_power = factorization.is_prime_power();
    let scale = Nat::from(if is_prime_power { factorization.pairs()[0].0 } else { 1 });
    if n <= SCALE_CHECK_LIMIT {
        let row: Vec<Nat> = (1..n).map(|k| binomial(n, k)).collect::<Result<_>>()?;
        let gcd = gcd_list(&row)?;
        if gcd != scale {
            return Err(Error::internal(format!("gcd(B_{n}) = {gcd}, expected {scale}")));
        }
    }
    Ok(BinomialSemigroupSpec { n, factorization, is_prime_power, scale })
}

impl BinomialSemigroupSpec {
    /// `n` for non-prime-powers, `p^{m−1}` for `n = p^m`.
    pub fn apery_base(&self) -> u64 {
        if self.is_prime_power {
            self.n / self.factorization.pairs()[0].0
        } else {
            self.n
        }
    }

    /// The generators other than the multiplicity, with their box radices.
    pub fn box_generators(&self) -> Result<Vec<BoxGenerator>> {
        let mut out = Vec::new();
        if self.is_prime_power {
            let (p, m) = self.factorization.pairs()[0];
            for i in 1..m {
                let index = p.pow(i);
                out.push(BoxGenerator { index, value: binomial(self.n, index)? / &self.scale, radix: p });
            }
        } else {
            for &(p, k) in self.factorization.pairs() {
                for j in 1..=k {
                    let index = p.pow(j);
                    out.push(BoxGenerator { index, value: binomial(self.n, index)?, radix: p });
                }
            }
        }
        Ok(out)
    }

    fn reject_prime(&self) -> Result<()> {
        if self.factorization.is_prime() {
            Err(Error::DegenerateSemigroup { n: self.n })
        } else {
            Ok(())
        }
    }
}

pub fn bn_minimal_system(n: u64) -> Result<Vec<Nat>> {
    let spec = bn_spec(n)?;
    let mut gens = vec![Nat::from(spec.apery_base())];
    gens.extend(spec.box_generators()?.into_iter().map(|g| g.value));
    gens.sort();
    Ok(gens)
}

/// `1 + Σ k_i`, or `m` for `n = p^m`.
pub fn bn_embedding_dimension(n: u64) -> Result<usize> {
    let spec = bn_spec(n)?;
    let f = &spec.factorization;
    Ok(if spec.is_prime_power { f.total_exponent() as usize } else { 1 + f.total_exponent() as usize })
}

/// The Apéry box of `S(B_n)`, indexed by residue modulo the base, with the
/// box coefficients that produced each entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedApery {
    pub base: u64,
    pub generators: Vec<BoxGenerator>,
    entries: Vec<Nat>,
    coefficients: Vec<Vec<u64>>,
}

impl ClosedApery {
    pub fn entry(&self, residue: usize) -> &Nat {
        &self.entries[residue]
    }

    /// Box coefficients of the entry at `residue`, aligned with `generators`.
    pub fn coefficients(&self, residue: usize) -> &[u64] {
        &self.coefficients[residue]
    }

    pub fn by_residue(&self) -> &[Nat] {
        &self.entries
    }

    pub fn sorted(&self) -> Vec<Nat> {
        let mut v = self.entries.clone();
        v.sort();
        v
    }

    pub fn max(&self) -> &Nat {
        self.entries.iter().max().expect("the box always contains 0")
    }

    pub fn contains(&self, m: &Nat) -> bool {
        let r = (m % self.base).to_usize().expect("residue fits");
        m >= &self.entries[r]
    }

    pub fn contains_int(&self, m: &BigInt) -> bool {
        m.to_biguint().is_some_and(|m| self.contains(&m))
    }
}

/// Enumerates the Apéry box and checks that it hits every residue exactly once.
pub fn closed_apery(n: u64) -> Result<ClosedApery> {
    let spec = bn_spec(n)?;
    spec.reject_prime()?;
    let base = spec.apery_base();
    if base > MAX_APERY_BASE {
        return Err(Error::bound("Apéry base", base, MAX_APERY_BASE));
    }
    let generators = spec.box_generators()?;
    let size = base as usize;
    let mut entries: Vec<Option<Nat>> = vec![None; size];
    let mut coefficients = vec![Vec::new(); size];
    let mut digits = vec![0u64; generators.len()];
    let mut value = Nat::zero();
    loop {
        let r = (&value % base).to_usize().expect("residue fits");
        if entries[r].is_some() {
            return Err(Error::internal(format!("Apéry box for n = {n} repeats residue {r}")));
        }
        entries[r] = Some(value.clone());
        coefficients[r] = digits.clone();
        // mixed-radix increment
        let mut i = 0;
        loop {
            if i == generators.len() {
                let entries = entries.into_iter().map(|e| e.expect("all residues hit")).collect();
                return Ok(ClosedApery { base, generators, entries, coefficients });
            }
            digits[i] += 1;
            value += &generators[i].value;
            if digits[i] < generators[i].radix {
                break;
            }
            value -= &generators[i].value * generators[i].radix;
            digits[i] = 0;
            i += 1;
        }
    }
}

/// `(base, Ap(S(B_n), base))` with the set ascending.
pub fn bn_apery_closed(n: u64) -> Result<(u64, Vec<Nat>)> {
    let ap = closed_apery(n)?;
    Ok((ap.base, ap.sorted()))
}

/// `Σ (radix − 1)·value` over the box generators.
fn box_corner(spec: &BinomialSemigroupSpec) -> Result<Nat> {
    Ok(spec.box_generators()?.iter().map(|g| &g.value * (g.radix - 1)).sum())
}

/// `Σ_{i,j} (p_i − 1)·C(n, p_i^j) − n`, or `((p − 1)/p)·Σ_{i<m} C(p^m, p^i) − p^{m−1}`.
pub fn bn_frobenius(n: u64) -> Result<Nat> {
    let spec = bn_spec(n)?;
    spec.reject_prime()?;
    let corner = box_corner(&spec)?;
    let base = Nat::from(spec.apery_base());
    if corner < base {
        return Err(Error::internal(format!("negative Frobenius number for n = {n}")));
    }
    Ok(corner - base)
}

/// `Σ ((p_i − 1)/2)·C(n, p_i^j) − (n − 1)/2`, or the scaled prime-power analogue.
pub fn bn_genus(n: u64) -> Result<Nat> {
    let spec = bn_spec(n)?;
    spec.reject_prime()?;
    let corner = box_corner(&spec)?;
    let numerator = corner + 1u32 - spec.apery_base();
    let (g, rem) = numerator.div_rem(&Nat::from(2u32));
    if !rem.is_zero() {
        return Err(Error::internal(format!("genus of S(B_{n}) is not integral")));
    }
    Ok(g)
}

pub fn bn_pseudo_frobenius(n: u64) -> Result<Vec<Nat>> {
    Ok(vec![bn_frobenius(n)?])
}

pub fn bn_report(n: u64) -> Result<BinomialSemigroupReport> {
    let (apery_base, apery_set) = bn_apery_closed(n)?;
    let pseudo_frobenius = bn_pseudo_frobenius(n)?;
    Ok(BinomialSemigroupReport {
        n,
        minimal_generators: bn_minimal_system(n)?,
        embedding_dimension: bn_embedding_dimension(n)?,
        apery_base,
        apery_set,
        frobenius: bn_frobenius(n)?,
        genus: bn_genus(n)?,
        type_of: pseudo_frobenius.len(),
        pseudo_frobenius,
        symmetric: true,
        telescopic: true,
    })
}

/// Writes `C(n, m)` (divided by `p` when `n = p^m'`) as a nonnegative
/// combination of [`bn_minimal_system`].
///
/// Tried in order: the target is a generator; the closed identity has a
/// nonnegative lead coefficient (`gcd(m, n) = 1`); otherwise the Apéry entry
/// of the target's residue class plus a multiple of the multiplicity.
pub fn decompose(n: u64, m: u64) -> Result<Representation> {
    let spec = bn_spec(n)?;
    if m == 0 || m >= n {
        return Err(Error::domain(format!("decompose({n}, {m}): need 1 ≤ m ≤ n − 1")));
    }
    spec.reject_prime()?;
    let ap = closed_apery(n)?;
    let base = Nat::from(ap.base);
    let value = binomial(n, m)? / &spec.scale;

    let mut basis = vec![base.clone()];
    basis.extend(ap.generators.iter().map(|g| g.value.clone()));
    let mut coefficients = vec![Nat::zero(); basis.len()];
    let finish = |coefficients: Vec<Nat>, method| {
        let rep = Representation {
            n,
            m,
            basis: basis.clone(),
            coefficients,
            value: value.clone(),
            scaled: spec.is_prime_power,
            method,
        };
        if rep.is_valid() {
            Ok(rep)
        } else {
            Err(Error::internal(format!("decompose({n}, {m}) produced an invalid representation")))
        }
    };

    let mirror = m.min(n - m);
    if mirror == 1 {
        // C(n, 1)/scale is the multiplicity
        coefficients[0] = Nat::one();
        return finish(coefficients, DecompositionMethod::Generator);
    }
    if let Some(i) = ap.generators.iter().position(|g| g.index == mirror) {
        coefficients[i + 1] = Nat::one();
        return finish(coefficients, DecompositionMethod::Generator);
    }

    if !spec.is_prime_power && m.gcd(&n) == 1 {
        let shift: Nat = ap.generators.iter().map(|g| &g.value * g.index).sum();
        if value >= shift {
            let (lead, rem) = (&value - &shift).div_rem(&base);
            if !rem.is_zero() {
                return Err(Error::internal(format!("C({n}, {m}) − Σ p^j·C(n, p^j) is not divisible by {n}")));
            }
            coefficients[0] = lead;
            for (c, g) in coefficients[1..].iter_mut().zip(&ap.generators) {
                *c = Nat::from(g.index);
            }
            return finish(coefficients, DecompositionMethod::BinomialIdentity);
        }
    }

    let r = (&value % ap.base).to_usize().expect("residue fits");
    let floor = ap.entry(r);
    if &value < floor {
        let cap = gallier_bound(&basis_sorted(&basis)).unwrap_or_default();
        return Err(Error::internal(format!(
            "C({n}, {m}) lies below its Apéry entry {floor} (Gallier bound {cap}); \
             it should be a semigroup element"
        )));
    }
    coefficients[0] = (&value - floor) / &base;
    for (c, &d) in coefficients[1..].iter_mut().zip(ap.coefficients(r)) {
        *c = Nat::from(d);
    }
    finish(coefficients, DecompositionMethod::AperyResidue)
}

fn basis_sorted(basis: &[Nat]) -> Vec<Nat> {
    let mut v = basis.to_vec();
    v.sort();
    v
}

fn to_int(n: Nat) -> BigInt {
    BigInt::from_biguint(Sign::Plus, n)
}

/// `C(pq, r) = lead·C(pq, 1) + p·C(pq, p) + q·C(pq, q)` with
/// `lead = (C(pq, r) − p·C(pq, p) − q·C(pq, q)) / pq`.
pub fn identity_pq_check(p: u64, q: u64, r: u64) -> Result<IdentityCheck> {
    if p == q || !is_prime(p) || !is_prime(q) {
        return Err(Error::domain(format!("need distinct primes, got {p} and {q}")));
    }
    let n = p * q;
    if r > n || r.is_multiple_of(p) || r.is_multiple_of(q) {
        return Err(Error::domain(format!("r = {r} must lie in [0, {n}] and avoid multiples of {p} and {q}")));
    }
    let target = to_int(binomial(n, r)?);
    let shift = to_int(binomial(n, p)? * p + binomial(n, q)? * q);
    let (lead, rem) = (&target - &shift).div_rem(&BigInt::from(n));
    if !rem.is_zero() {
        return Err(Error::internal(format!("pq identity lead is not integral for p={p} q={q} r={r}")));
    }
    let holds = &lead * BigInt::from(binomial(n, 1)?) + shift == target;
    Ok(IdentityCheck { lead, holds })
}

/// `C(p^m, r) = lead·C(p^m, 1) + Σ_{i=2}^{m} p^{i−2}·C(p^m, p^{i−1})` with
/// `lead = (C(p^m, r) − Σ_{i=2}^{m} p^{i−2}·C(p^m, p^{i−1})) / p^m`.
///
/// The lead is only integral when `p | m − 1`; elsewhere this returns
/// [`Error::Internal`].
pub fn identity_pm_check(p: u64, m: u32, r: u64) -> Result<IdentityCheck> {
    if p == 2 || !is_prime(p) {
        return Err(Error::domain(format!("{p} is not an odd prime")));
    }
    if m < 2 {
        return Err(Error::domain("need m ≥ 2"));
    }
    let n = p.checked_pow(m).ok_or_else(|| Error::domain("p^m overflows a machine word"))?;
    if r > n || r.is_multiple_of(p) {
        return Err(Error::domain(format!("r = {r} must lie in [0, {n}] and not be a multiple of {p}")));
    }
    let target = to_int(binomial(n, r)?);
    let mut shift = BigInt::zero();
    for i in 2..=m {
        shift += BigInt::from(p.pow(i - 2)) * to_int(binomial(n, p.pow(i - 1))?);
    }
    let (lead, rem) = (&target - &shift).div_rem(&BigInt::from(n));
    if !rem.is_zero() {
        return Err(Error::internal(format!(
            "p^m identity lead ({target} − {shift})/{n} is not integral for p={p} m={m} r={r}"
        )));
    }
    let holds = &lead * BigInt::from(n) + shift == target;
    Ok(IdentityCheck { lead, holds })
}

/// One compared field of [`OracleComparison`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldCheck {
    pub field: &'static str,
    pub closed: String,
    pub oracle: String,
}

impl FieldCheck {
    pub fn matches(&self) -> bool {
        self.closed == self.oracle
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleComparison {
    pub n: u64,
    pub fields: Vec<FieldCheck>,
}

impl OracleComparison {
    pub fn all_match(&self) -> bool {
        self.fields.iter().all(FieldCheck::matches)
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &FieldCheck> {
        self.fields.iter().filter(|f| !f.matches())
    }
}

fn render<T: ToString>(values: &[T]) -> String {
    let parts: Vec<String> = values.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(","))
}

/// The full (scaled) row `C(n, k)/gcd`, `1 ≤ k ≤ n − 1`.
pub fn scaled_row(n: u64) -> Result<Vec<Nat>> {
    let spec = bn_spec(n)?;
    (1..n).map(|k| Ok(binomial(n, k)? / &spec.scale)).collect()
}

/// Recomputes every report field from the full row with the generic engine and
/// compares it with [`bn_report`]. Mismatches are reported, not raised.
pub fn verify_closed_vs_oracle(n: u64, bound: u64) -> Result<OracleComparison> {
    if n > bound {
        return Err(Error::bound("n", n, bound));
    }
    let closed = bn_report(n)?;
    let oracle = NumericalSemigroup::new(&scaled_row(n)?)?;
    let oracle_apery = oracle.apery_set(&Nat::from(closed.apery_base))?;
    let oracle_pf: Vec<String> = oracle.pseudo_frobenius().iter().map(ToString::to_string).collect();
    let fields = vec![
        FieldCheck {
            field: "minimal_generators",
            closed: render(&closed.minimal_generators),
            oracle: render(oracle.generators()),
        },
        FieldCheck {
            field: "embedding_dimension",
            closed: closed.embedding_dimension.to_string(),
            oracle: oracle.embedding_dimension().to_string(),
        },
        FieldCheck { field: "apery_set", closed: render(&closed.apery_set), oracle: render(&oracle_apery.sorted()) },
        FieldCheck { field: "frobenius", closed: closed.frobenius.to_string(), oracle: oracle.frobenius().to_string() },
        FieldCheck { field: "genus", closed: closed.genus.to_string(), oracle: oracle.genus().to_string() },
        FieldCheck { field: "pseudo_frobenius", closed: render(&closed.pseudo_frobenius), oracle: render(&oracle_pf) },
        FieldCheck { field: "type", closed: closed.type_of.to_string(), oracle: oracle.type_of().to_string() },
        FieldCheck {
            field: "symmetric",
            closed: closed.symmetric.to_string(),
            oracle: oracle.is_symmetric().to_string(),
        },
        FieldCheck {
            field: "telescopic",
            closed: closed.telescopic.to_string(),
            oracle: oracle.is_telescopic().to_string(),
        },
    ];
    Ok(OracleComparison { n, fields })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nats(xs: &[u64]) -> Vec<Nat> {
        xs.iter().map(|&x| Nat::from(x)).collect()
    }

    fn composite(n: u64) -> bool {
        n >= 4 && !is_prime(n)
    }

    #[test]
    fn spec_examples() {
        let s = bn_spec(50).unwrap();
        assert_eq!(s.scale, Nat::one());
        assert_eq!(s.factorization.pairs(), &[(2, 1), (5, 2)]);
        let s = bn_spec(8).unwrap();
        assert!(s.is_prime_power);
        assert_eq!(s.scale, Nat::from(2u32));
        assert_eq!(bn_spec(9).unwrap().scale, Nat::from(3u32));
        assert!(bn_spec(1).is_err());
        for n in 2..=200 {
            bn_spec(n).unwrap();
        }
    }

    #[test]
    fn minimal_system_examples() {
        assert_eq!(bn_minimal_system(12).unwrap(), nats(&[12, 66, 220, 495]));
        assert_eq!(bn_minimal_system(9).unwrap(), nats(&[3, 28]));
        assert_eq!(bn_minimal_system(6).unwrap(), nats(&[6, 15, 20]));
        assert_eq!(bn_minimal_system(7).unwrap(), nats(&[1]));
    }

    #[test]
    fn embedding_dimension_examples() {
        assert_eq!(bn_embedding_dimension(12).unwrap(), 4);
        assert_eq!(bn_embedding_dimension(70).unwrap(), 4);
        assert_eq!(bn_embedding_dimension(9).unwrap(), 2);
        for n in 2..=100 {
            assert_eq!(bn_embedding_dimension(n).unwrap(), bn_minimal_system(n).unwrap().len(), "n={n}");
        }
    }

    #[test]
    fn apery_examples() {
        assert_eq!(bn_apery_closed(6).unwrap(), (6, nats(&[0, 15, 20, 35, 40, 55])));
        assert_eq!(bn_apery_closed(9).unwrap(), (3, nats(&[0, 28, 56])));
        assert_eq!(bn_apery_closed(4).unwrap(), (2, nats(&[0, 3])));
        assert_eq!(bn_apery_closed(7), Err(Error::DegenerateSemigroup { n: 7 }));
        let engine = NumericalSemigroup::from_u64s(&[6, 15, 20]).unwrap();
        assert_eq!(engine.apery().sorted(), bn_apery_closed(6).unwrap().1);
    }

    #[test]
    fn closed_apery_coefficients_rebuild_entries() {
        for n in [6u64, 12, 50, 70, 8, 27] {
            let ap = closed_apery(n).unwrap();
            for r in 0..ap.base as usize {
                let sum: Nat = ap.coefficients(r).iter().zip(&ap.generators).map(|(&c, g)| &g.value * c).sum();
                assert_eq!(&sum, ap.entry(r));
                assert!(ap.coefficients(r).iter().zip(&ap.generators).all(|(&c, g)| c < g.radix));
            }
        }
    }

    #[test]
    fn frobenius_examples() {
        assert_eq!(bn_frobenius(50).unwrap(), Nat::from(505642434227223u64));
        assert_eq!(bn_frobenius(70).unwrap(), Nat::from(7241062721u64));
        assert_eq!(bn_frobenius(4).unwrap(), Nat::from(1u32));
        assert_eq!(bn_frobenius(13), Err(Error::DegenerateSemigroup { n: 13 }));
        // C(50,2) + 4·C(50,5) + 4·C(50,25) − 50
        let by_hand =
            binomial(50, 2).unwrap() + binomial(50, 5).unwrap() * 4u32 + binomial(50, 25).unwrap() * 4u32 - 50u32;
        assert_eq!(bn_frobenius(50).unwrap(), by_hand);
    }

    #[test]
    fn genus_examples() {
        assert_eq!(bn_genus(6).unwrap(), Nat::from(25u32));
        assert_eq!(bn_genus(50).unwrap(), Nat::from(252821217113612u64));
        assert_eq!(bn_genus(4).unwrap(), Nat::one());
        let gaps = NumericalSemigroup::from_u64s(&[6, 15, 20]).unwrap().gaps().unwrap();
        assert_eq!(Nat::from(gaps.len()), bn_genus(6).unwrap());
    }

    #[test]
    fn pseudo_frobenius_examples() {
        assert_eq!(bn_pseudo_frobenius(6).unwrap(), nats(&[49]));
        assert_eq!(bn_pseudo_frobenius(9).unwrap(), nats(&[53]));
        assert_eq!(bn_pseudo_frobenius(70).unwrap(), nats(&[7241062721]));
        // Sylvester on ⟨3, 28⟩
        assert_eq!(bn_frobenius(9).unwrap(), Nat::from(3u32 * 28 - 3 - 28));
    }

    #[test]
    fn report_examples() {
        let r = bn_report(6).unwrap();
        assert_eq!((r.frobenius.clone(), r.genus.clone()), (Nat::from(49u32), Nat::from(25u32)));
        assert_eq!((r.embedding_dimension, r.type_of), (3, 1));
        assert!(r.symmetric && r.telescopic);
        assert_eq!(bn_report(50).unwrap().frobenius, Nat::from(505642434227223u64));
        let r = bn_report(9).unwrap();
        assert_eq!(r.minimal_generators, nats(&[3, 28]));
        assert_eq!(r.frobenius, Nat::from(53u32));
    }

    #[test]
    fn report_invariants_up_to_100() {
        for n in (4..=100).filter(|&n| composite(n)) {
            let r = bn_report(n).unwrap();
            let ap = closed_apery(n).unwrap();
            assert_eq!(r.apery_set.len() as u64, r.apery_base);
            assert!(r.apery_set[0].is_zero());
            assert_eq!(r.apery_set.last().unwrap() - r.apery_base, r.frobenius, "n={n}");
            assert_eq!(ap.max() - ap.base, r.frobenius);
            assert_eq!(&r.genus * 2u32, &r.frobenius + 1u32, "n={n}");
            assert_eq!(r.pseudo_frobenius, vec![r.frobenius.clone()]);
        }
    }

    #[test]
    fn minimal_system_matches_engine() {
        for n in (4..=30).filter(|&n| composite(n)) {
            let engine = NumericalSemigroup::new(&scaled_row(n).unwrap()).unwrap();
            assert_eq!(engine.generators(), bn_minimal_system(n).unwrap().as_slice(), "n={n}");
        }
    }

    #[test]
    fn oracle_sweep_examples() {
        for n in [6, 9, 30] {
            let cmp = verify_closed_vs_oracle(n, ORACLE_DEFAULT_BOUND).unwrap();
            assert!(cmp.all_match(), "n={n}: {:?}", cmp.mismatches().collect::<Vec<_>>());
        }
        assert!(matches!(verify_closed_vs_oracle(31, ORACLE_DEFAULT_BOUND), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn decompose_examples() {
        // exhaustive oracle: 3·10 + 2·45 = 120 is one valid representation
        let alt = Representation {
            n: 10,
            m: 3,
            basis: nats(&[10, 45, 252]),
            coefficients: nats(&[3, 2, 0]),
            value: Nat::from(120u32),
            scaled: false,
            method: DecompositionMethod::AperyResidue,
        };
        assert!(alt.is_valid());
        let rep = decompose(10, 3).unwrap();
        assert_eq!(rep.basis, nats(&[10, 45, 252]));
        assert_eq!(rep.value, Nat::from(120u32));
        assert!(rep.is_valid());
        assert_eq!(rep.coefficients, nats(&[12, 0, 0]));

        let rep = decompose(6, 3).unwrap();
        assert_eq!(rep.method, DecompositionMethod::Generator);
        assert_eq!(rep.coefficients, nats(&[0, 0, 1]));

        let rep = decompose(50, 7).unwrap();
        assert!(rep.is_valid());
        assert_eq!(rep.value, binomial(50, 7).unwrap());

        assert!(matches!(decompose(10, 0), Err(Error::Domain(_))));
        assert!(matches!(decompose(10, 10), Err(Error::Domain(_))));
        assert_eq!(decompose(11, 3), Err(Error::DegenerateSemigroup { n: 11 }));
    }

    #[test]
    fn decompose_uses_identity_when_lead_is_nonnegative() {
        // C(35, 9) ≥ 5·C(35, 5) + 7·C(35, 7)
        let rep = decompose(35, 9).unwrap();
        assert_eq!(rep.method, DecompositionMethod::BinomialIdentity);
        assert_eq!(rep.coefficients[1..], nats(&[5, 7]));
        let check = identity_pq_check(5, 7, 9).unwrap();
        assert_eq!(rep.coefficients[0], check.lead.to_biguint().unwrap());

        // (C(30, 7) − 2·C(30, 2) − 3·C(30, 3) − 5·C(30, 5)) / 30 = 43674
        let rep = decompose(30, 7).unwrap();
        assert_eq!(rep.method, DecompositionMethod::BinomialIdentity);
        assert_eq!(rep.coefficients, nats(&[43674, 2, 3, 5]));

        // lead would be negative for every admissible r when n = 15
        assert_eq!(decompose(15, 7).unwrap().method, DecompositionMethod::AperyResidue);
        assert!(identity_pq_check(3, 5, 7).unwrap().lead < BigInt::zero());
    }

    #[test]
    fn decompose_sound_up_to_40() {
        for n in (4..=40).filter(|&n| composite(n)) {
            let spec = bn_spec(n).unwrap();
            for m in 1..n {
                let rep = decompose(n, m).unwrap();
                assert!(rep.is_valid(), "n={n} m={m}");
                assert_eq!(rep.value, binomial(n, m).unwrap() / &spec.scale);
                assert_eq!(rep.basis.len(), bn_embedding_dimension(n).unwrap());
            }
        }
    }

    #[test]
    fn pq_identity_examples() {
        let c = identity_pq_check(3, 5, 2).unwrap();
        assert_eq!(c, IdentityCheck { lead: BigInt::from(-1085), holds: true });
        assert!(identity_pq_check(2, 5, 1).unwrap().holds);
        assert!(identity_pq_check(3, 5, 7).unwrap().holds);
        assert!(identity_pq_check(3, 5, 5).is_err());
        assert!(identity_pq_check(3, 3, 1).is_err());
        assert!(identity_pq_check(4, 5, 1).is_err());
    }

    #[test]
    fn pq_identity_all_pairs_to_13() {
        let primes = [2u64, 3, 5, 7, 11, 13];
        for (i, &p) in primes.iter().enumerate() {
            for &q in &primes[i + 1..] {
                for r in (0..=p * q).filter(|r| r % p != 0 && r % q != 0) {
                    assert!(identity_pq_check(p, q, r).unwrap().holds, "p={p} q={q} r={r}");
                }
            }
        }
    }

    #[test]
    fn pm_identity_lead_is_never_integral_for_small_odd_p() {
        // (C(9,2) − C(9,3))/9 = −48/9
        assert!(matches!(identity_pm_check(3, 2, 2), Err(Error::Internal(_))));
        assert!(matches!(identity_pm_check(3, 2, 4), Err(Error::Internal(_))));
        assert!(matches!(identity_pm_check(5, 2, 1), Err(Error::Internal(_))));
        for p in [3u64, 5, 7] {
            for m in 2..=3u32 {
                for r in (0..=p.pow(m)).filter(|r| r % p != 0) {
                    assert!(matches!(identity_pm_check(p, m, r), Err(Error::Internal(_))), "p={p} m={m} r={r}");
                }
            }
        }
    }

    #[test]
    fn pm_identity_integral_exactly_when_p_divides_m_minus_one() {
        // the shift is ≡ (m − 1)·p^{m−1} (mod p^m) and C(p^m, r) ≡ 0 for p ∤ r
        for m in 2..=4u32 {
            let ok = identity_pm_check(3, m, 1);
            assert_eq!(ok.is_ok(), (m - 1) % 3 == 0, "m={m}");
        }
        let c = identity_pm_check(3, 4, 2).unwrap();
        assert!(c.holds);
        assert!(matches!(identity_pm_check(2, 3, 1), Err(Error::Domain(_))));
        assert!(matches!(identity_pm_check(3, 2, 3), Err(Error::Domain(_))));
    }
}
