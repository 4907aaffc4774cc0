//! Numerical sets, their partitions and hook sets, and `(s, s+1, s+p)`-cores.
//!
//! A numerical set `S` (contains 0, finite complement, not necessarily closed
//! under addition) determines a partition `λ_S` with one part per gap `g`,
//! equal to the number of elements of `S` below `g`. Its hook lengths are
//! exactly the positive integers outside
//! `A(S) = {n ≥ 0 : n + s ∈ S for all s ∈ S}`, so `λ_S` is an
//! `(s, s+1, s+p)`-core iff `s, s+1, s+p ∈ A(S)`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::exactmath::Nat;
use crate::family::{bn_frobenius, bn_spec, closed_apery, ClosedApery};
use crate::semigroup::NumericalSemigroup;

/// Largest Frobenius number a [`NumericalSet`] will tabulate.
pub const MAX_SET_FROBENIUS: u64 = 1_000_000;

/// Largest Frobenius number for [`enumerate_admissible`].
pub const MAX_ENUMERATION_FROBENIUS: u64 = 10_000;

/// A subset of ℕ containing 0 with finite complement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSet {
    /// Membership over `[0, F]`; empty for ℕ.
    members: Vec<bool>,
}

impl NumericalSet {
    /// ℕ itself.
    pub fn naturals() -> Self {
        Self { members: Vec::new() }
    }

    /// `ℕ \ gaps`.
    pub fn from_gaps(gaps: &[u64]) -> Result<Self> {
        if gaps.contains(&0) {
            return Err(Error::domain("0 always belongs to a numerical set"));
        }
        let Some(&f) = gaps.iter().max() else {
            return Ok(Self::naturals());
        };
        if f > MAX_SET_FROBENIUS {
            return Err(Error::bound("Frobenius number", f, MAX_SET_FROBENIUS));
        }
        let mut members = vec![true; f as usize + 1];
        for &g in gaps {
            members[g as usize] = false;
        }
        Ok(Self { members })
    }

    /// The set whose elements up to `max(listed)` are exactly `listed`, with
    /// everything beyond `max(listed)` included.
    pub fn from_listed_elements(listed: &[u64]) -> Result<Self> {
        let top = listed.iter().copied().max().unwrap_or(0);
        let present: BTreeSet<u64> = listed.iter().copied().collect();
        let gaps: Vec<u64> = (1..top).filter(|v| !present.contains(v)).collect();
        Self::from_gaps(&gaps)
    }

    pub fn from_semigroup(s: &NumericalSemigroup) -> Result<Self> {
        let f = s.frobenius();
        if f > BigInt::from(MAX_SET_FROBENIUS) {
            return Err(Error::bound("Frobenius number", f, MAX_SET_FROBENIUS));
        }
        let gaps = s.gaps()?;
        Self::from_gaps(&gaps)
    }

    /// Largest gap, or −1 for ℕ.
    pub fn frobenius(&self) -> i64 {
        self.members.len() as i64 - 1
    }

    pub fn contains(&self, m: u64) -> bool {
        self.members.get(m as usize).copied().unwrap_or(true)
    }

    pub fn gaps(&self) -> Vec<u64> {
        (0..self.members.len() as u64).filter(|&v| !self.contains(v)).collect()
    }

    /// Elements strictly below the Frobenius number.
    pub fn small_elements(&self) -> Vec<u64> {
        (0..self.members.len() as u64).filter(|&v| self.contains(v)).collect()
    }

    /// `A(S)`. Only `s ≤ F(S)` need checking, since `n + s > F(S)` lies in `S` otherwise.
    pub fn a_set(&self) -> NumericalSet {
        let small = self.small_elements();
        let members: Vec<bool> =
            (0..self.members.len() as u64).map(|n| small.iter().all(|&s| self.contains(n + s))).collect();
        let mut a = NumericalSet { members };
        a.trim();
        a
    }

    pub fn is_closed_under_addition(&self) -> bool {
        let small = self.small_elements();
        small.iter().all(|&a| small.iter().all(|&b| self.contains(a + b)))
    }

    /// `λ_S`: for each gap in decreasing order, the number of elements below it.
    pub fn partition(&self) -> Partition {
        let mut below = 0usize;
        let mut parts = Vec::new();
        for v in 0..self.members.len() {
            if self.members[v] {
                below += 1;
            } else {
                parts.push(below);
            }
        }
        parts.reverse();
        Partition { parts }
    }

    // Keeps the invariant that the last tabulated value is a gap.
    fn trim(&mut self) {
        while self.members.last() == Some(&true) {
            self.members.pop();
        }
    }
}

impl fmt::Display for NumericalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut shown: Vec<String> = self.small_elements().iter().map(u64::to_string).collect();
        let next = self.members.len();
        shown.extend((next..next + 3).map(|v| v.to_string()));
        write!(f, "{{{}, …}}", shown.join(", "))
    }
}

/// Convenience wrapper for [`NumericalSet::a_set`].
pub fn a_set(s: &NumericalSet) -> NumericalSet {
    s.a_set()
}

/// Convenience wrapper for [`NumericalSet::partition`].
pub fn partition_of(s: &NumericalSet) -> Partition {
    s.partition()
}

/// Weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::domain("partition parts must be positive"));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::domain("partition parts must be weakly decreasing"));
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (0..width).map(|j| self.parts.iter().take_while(|&&p| p > j).count()).collect();
        Partition { parts }
    }

    /// Hook length of every cell, row by row.
    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &row)| (0..row).map(|j| (row - j) + (conj.parts[j] - i) - 1).collect())
            .collect()
    }

    pub fn hook_set(&self) -> BTreeSet<usize> {
        self.hook_lengths().into_iter().flatten().collect()
    }

    /// No hook length is divisible by `s`.
    pub fn is_s_core(&self, s: usize) -> bool {
        s > 0 && self.hook_set().iter().all(|h| h % s != 0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn hook_set(lambda: &Partition) -> BTreeSet<usize> {
    lambda.hook_set()
}

pub fn is_s_core(lambda: &Partition, s: usize) -> bool {
    lambda.is_s_core(s)
}

/// `λ_S` is an `(s, s+1, s+p)`-core, i.e. `s, s+1, s+p ∈ A(S)`.
pub fn is_triple_core(s_set: &NumericalSet, s: u64, p: u64) -> bool {
    let a = s_set.a_set();
    [s, s + 1, s + p].iter().all(|&v| a.contains(v))
}

/// `(s, p)` with `s ≥ 1`, `p ≥ 2`, `λ_S` an `(s, s+1, s+p)`-core and `s + p < F(S)`.
pub fn is_admissible(s_set: &NumericalSet, s: u64, p: u64) -> bool {
    s >= 1 && p >= 2 && ((s + p) as i64) < s_set.frobenius() && is_triple_core(s_set, s, p)
}

/// Every admissible pair, sorted by `s` then `p`.
pub fn enumerate_admissible(s_set: &NumericalSet) -> Result<Vec<(u64, u64)>> {
    let f = s_set.frobenius();
    if f > MAX_ENUMERATION_FROBENIUS as i64 {
        return Err(Error::bound("Frobenius number", f, MAX_ENUMERATION_FROBENIUS));
    }
    let a = s_set.a_set();
    let mut out = Vec::new();
    for s in 1..f.max(0) as u64 {
        if !(a.contains(s) && a.contains(s + 1)) {
            continue;
        }
        out.extend((2..).take_while(|&p| ((s + p) as i64) < f).filter(|&p| a.contains(s + p)).map(|p| (s, p)));
    }
    Ok(out)
}

/// Output of [`algorithm1`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissiblePairResult {
    pub n: u64,
    pub seed: u64,
    pub p: u64,
    /// Modulus of the Apéry table that was scanned.
    pub base: u64,
    pub frobenius: Nat,
    pub triple: [BigInt; 3],
    /// `diff` or `diff + 1` where `diff = F − triple[2]`.
    pub count: BigInt,
    /// All three members lie in `S(B_n)`, `triple[0] ≥ 1`, and `triple[2] < F`.
    pub admissible: bool,
    /// Computed with the prime-power base `p^{m−1}` instead of `n`.
    pub extension: bool,
}

fn residue_of(v: u64, base: u64) -> usize {
    (v % base) as usize
}

fn target_residues(seed: u64, p: u64, base: u64) -> Result<[usize; 3]> {
    let r = [residue_of(seed, base), residue_of(seed + 1, base), residue_of(seed + p, base)];
    if r[0] == r[1] || r[0] == r[2] || r[1] == r[2] {
        return Err(Error::domain(format!("residues of s, s+1, s+p collide modulo {base} (s = {seed}, p = {p})")));
    }
    Ok(r)
}

/// The three Apéry maxima of the target residues, completed to a triple
/// `(t, t+1, t+p)` and shifted below `F` by a multiple of the base if needed.
fn complete_triple(ap: &ClosedApery, f: &BigInt, residues: [usize; 3], p: u64) -> [BigInt; 3] {
    let base = BigInt::from(ap.base);
    let found: Vec<BigInt> = residues.iter().map(|&r| BigInt::from(ap.entry(r).clone())).collect();
    let (max_index, max_value) = found.iter().enumerate().max_by(|a, b| a.1.cmp(b.1)).expect("three candidates");
    let start = match max_index {
        0 => max_value.clone(),
        1 => max_value + &base - 1,
        _ => max_value + &base - p,
    };
    let mut triple = [start.clone(), &start + 1, &start + p];
    let diff = f - &triple[2];
    if !diff.is_positive() {
        let overshoot = -diff;
        let shift = (overshoot.div_floor(&base) + 1) * &base;
        for t in &mut triple {
            *t -= &shift;
        }
    }
    triple
}

fn triple_is_admissible(ap: &ClosedApery, f: &BigInt, triple: &[BigInt; 3]) -> bool {
    triple[0] >= BigInt::from(1) && &triple[2] < f && triple.iter().all(|t| ap.contains_int(t))
}

/// Scans `Ap(S(B_n), n)` for the residues of `s, s+1, s+p`, completes the
/// largest hit to a triple, pulls it below `F` and counts.
///
/// Prime powers need `force_base`, which switches to the base `p^{m−1}`.
pub fn algorithm1(n: u64, s_seed: u64, p: u64, force_base: bool) -> Result<AdmissiblePairResult> {
    if p < 2 {
        return Err(Error::domain("p must be at least 2"));
    }
    let spec = bn_spec(n)?;
    if spec.is_prime_power && !force_base {
        return Err(Error::Unsupported(format!(
            "n = {n} is a prime power; scanning Ap(S, {}) needs the forced prime-power base (--force-base)",
            spec.apery_base()
        )));
    }
    let ap = closed_apery(n)?;
    let residues = target_residues(s_seed, p, ap.base)?;
    let frobenius = bn_frobenius(n)?;
    let f = BigInt::from(frobenius.clone());
    let triple = complete_triple(&ap, &f, residues, p);
    let diff = &f - &triple[2];
    let count = if diff.is_multiple_of(&BigInt::from(ap.base)) { diff } else { diff + 1 };
    Ok(AdmissiblePairResult {
        n,
        seed: s_seed,
        p,
        base: ap.base,
        admissible: triple_is_admissible(&ap, &f, &triple),
        frobenius,
        triple,
        count,
        extension: spec.is_prime_power,
    })
}

/// An `s` with `(s, p)` admissible for `S(B_n)`, built by the residue-class
/// construction for each seed residue in turn and checked against membership.
pub fn exists_admissible_bn(n: u64, p: u64) -> Result<Nat> {
    if p < 2 {
        return Err(Error::domain("p must be at least 2"));
    }
    let ap = closed_apery(n)?;
    target_residues(0, p, ap.base)?;
    let f = BigInt::from(bn_frobenius(n)?);
    for seed in 0..ap.base {
        let residues = target_residues(seed, p, ap.base)?;
        let triple = complete_triple(&ap, &f, residues, p);
        if triple_is_admissible(&ap, &f, &triple) {
            return triple[0].to_biguint().ok_or_else(|| Error::internal("verified witness is negative"));
        }
    }
    Err(Error::internal(format!(
        "no seed residue modulo {} yields a verified admissible pair for n = {n}, p = {p}",
        ap.base
    )))
}

/// Whether `(s, p)` is admissible for `S(B_n)`, using the closed Apéry table for membership.
pub fn is_admissible_bn(n: u64, s: &Nat, p: u64) -> Result<bool> {
    let ap = closed_apery(n)?;
    let f = BigInt::from(bn_frobenius(n)?);
    let s = BigInt::from(s.clone());
    let triple = [s.clone(), &s + 1, &s + p];
    Ok(p >= 2 && triple_is_admissible(&ap, &f, &triple))
}

impl AdmissiblePairResult {
    pub fn triple_u64(&self) -> Option<[u64; 3]> {
        Some([self.triple[0].to_u64()?, self.triple[1].to_u64()?, self.triple[2].to_u64()?])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::is_prime;
    use num_traits::Zero;

    fn set(gaps: &[u64]) -> NumericalSet {
        NumericalSet::from_gaps(gaps).unwrap()
    }

    fn semigroup_set(gens: &[u64]) -> NumericalSet {
        NumericalSet::from_semigroup(&NumericalSemigroup::from_u64s(gens).unwrap()).unwrap()
    }

    fn hooks(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    fn well_tempered() -> NumericalSet {
        NumericalSet::from_listed_elements(&[0, 12, 19, 24, 28, 31, 34, 36, 38, 40, 42, 43, 45, 46, 47, 48]).unwrap()
    }

    /// Hook lengths straight from arm + leg + 1 on the diagram cells.
    fn hooks_by_cells(parts: &[usize]) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for (i, &row) in parts.iter().enumerate() {
            for j in 0..row {
                let arm = row - j - 1;
                let leg = parts[i + 1..].iter().filter(|&&r| r > j).count();
                out.insert(arm + leg + 1);
            }
        }
        out
    }

    #[test]
    fn numerical_set_examples() {
        let s = set(&[2, 5, 6, 8]);
        assert_eq!(s.frobenius(), 8);
        assert_eq!(s.small_elements(), vec![0, 1, 3, 4, 7]);
        assert!(s.contains(9) && s.contains(10));
        assert_eq!(set(&[]), NumericalSet::naturals());
        assert_eq!(NumericalSet::naturals().frobenius(), -1);
        assert_eq!(set(&[1, 2, 3, 4, 6, 8, 11, 13]), semigroup_set(&[5, 7, 9]));
        assert!(NumericalSet::from_gaps(&[0, 3]).is_err());
        assert!(NumericalSet::from_gaps(&[MAX_SET_FROBENIUS + 1]).is_err());
        assert_eq!(set(&[2, 5, 6, 8]).to_string(), "{0, 1, 3, 4, 7, 9, 10, 11, …}");
    }

    #[test]
    fn a_set_examples() {
        let a = set(&[2, 5, 6, 8]).a_set();
        assert_eq!(a.frobenius(), 8);
        assert_eq!(a.small_elements(), vec![0]);
        assert_eq!(NumericalSet::naturals().a_set(), NumericalSet::naturals());
        let s = semigroup_set(&[5, 7, 9]);
        assert_eq!(s.a_set(), s);
    }

    #[test]
    fn partition_examples() {
        assert_eq!(set(&[2, 5, 6, 8]).partition().parts(), &[5, 4, 4, 2]);
        assert_eq!(semigroup_set(&[5, 7, 9]).partition().parts(), &[6, 5, 3, 2, 1, 1, 1, 1]);
        assert!(NumericalSet::naturals().partition().is_empty());
        assert!(Partition::new(vec![2, 3]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(Partition::new(vec![3, 1]).unwrap().conjugate().parts(), &[2, 1, 1]);
    }

    #[test]
    fn hook_set_examples() {
        let p = Partition::new(vec![5, 4, 4, 2]).unwrap();
        assert_eq!(p.hook_set(), (1..=8).collect());
        let p = Partition::new(vec![6, 5, 3, 2, 1, 1, 1, 1]).unwrap();
        assert_eq!(p.hook_set(), hooks(&[1, 2, 3, 4, 6, 8, 11, 13]));
        assert_eq!(Partition::new(vec![1]).unwrap().hook_set(), hooks(&[1]));
        assert!(Partition::default().hook_set().is_empty());
    }

    #[test]
    fn s_core_examples() {
        let p = Partition::new(vec![5, 4, 4, 2]).unwrap();
        assert!(p.is_s_core(9));
        assert!(p.is_s_core(100));
        assert!(!p.is_s_core(4));
        assert!((1..=8).all(|s| !p.is_s_core(s)));
        assert!(Partition::default().is_s_core(3));
    }

    #[test]
    fn triple_core_examples() {
        let s = semigroup_set(&[5, 7, 9]);
        assert!(is_triple_core(&s, 9, 3));
        for p in 2..6 {
            assert!(is_triple_core(&s, 14, p));
        }
        let wt = well_tempered();
        assert!(is_triple_core(&wt, 42, 3));
        assert!(!is_admissible(&wt, 42, 3));
        assert!(!is_triple_core(&wt, 42, 2));
    }

    #[test]
    fn admissible_examples() {
        let s = semigroup_set(&[5, 7, 9]);
        assert!(is_admissible(&s, 9, 3));
        assert!(!is_admissible(&s, 9, 4));
        for m in 1..=12u64 {
            let gens: Vec<u64> = (m..2 * m).collect();
            let sm = semigroup_set(&gens);
            assert!(enumerate_admissible(&sm).unwrap().is_empty(), "S_{m}");
        }
        assert!(enumerate_admissible(&well_tempered()).unwrap().is_empty());
        assert!(enumerate_admissible(&set(&[2, 5, 6, 8])).unwrap().is_empty());
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(enumerate_admissible(&semigroup_set(&[5, 7, 9])).unwrap(), vec![(9, 3)]);
        assert!(enumerate_admissible(&semigroup_set(&[2, 5])).unwrap().is_empty());
        for odd in (3..=21).step_by(2) {
            assert!(enumerate_admissible(&semigroup_set(&[2, odd])).unwrap().is_empty(), "⟨2,{odd}⟩");
        }
        assert!(enumerate_admissible(&set(&[1, 3])).unwrap().is_empty());
        let big = NumericalSet::from_gaps(&[MAX_ENUMERATION_FROBENIUS + 1]).unwrap();
        assert!(matches!(enumerate_admissible(&big), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn well_tempered_partition_and_hooks() {
        let wt = well_tempered();
        assert_eq!(wt.frobenius(), 44);
        assert!(wt.is_closed_under_addition());
        assert_eq!(
            wt.partition().parts(),
            &[12, 10, 9, 8, 7, 6, 6, 5, 5, 4, 4, 4, 3, 3, 3, 3, 2, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1]
        );
        let mut expected: BTreeSet<usize> = (1..=11).chain(13..=18).chain(20..=23).collect();
        expected.extend([25, 26, 27, 29, 30, 32, 33, 35, 37, 39, 41, 44]);
        assert_eq!(wt.partition().hook_set(), expected);
    }

    #[test]
    fn hook_theorem_exhaustive() {
        for f in 0..=12u64 {
            let patterns: u64 = if f <= 1 { 1 } else { 1 << (f - 1) };
            for bits in 0..patterns {
                let gaps: Vec<u64> =
                    if f == 0 { vec![] } else { (1..f).filter(|v| bits >> (v - 1) & 1 == 1).chain([f]).collect() };
                let s = set(&gaps);
                let lambda = s.partition();
                let a = s.a_set();
                assert!(a.contains(0));
                let complement: BTreeSet<usize> = a.gaps().into_iter().map(|g| g as usize).collect();
                assert_eq!(lambda.hook_set(), complement, "gaps {gaps:?}");
                assert_eq!(hooks_by_cells(lambda.parts()), complement);
                assert_eq!(lambda.parts().len(), gaps.len());
                let largest = (0..f).filter(|&v| s.contains(v)).count();
                assert_eq!(lambda.parts().first().copied().unwrap_or(0), if f == 0 { 0 } else { largest });
            }
        }
    }

    #[test]
    fn semigroups_are_their_own_a_set() {
        for gens in [&[3u64, 5][..], &[4, 6, 9], &[5, 7, 9], &[6, 15, 20], &[7, 8, 9, 10]] {
            let s = semigroup_set(gens);
            assert_eq!(s.a_set(), s, "{gens:?}");
        }
    }

    #[test]
    fn algorithm1_golden_runs() {
        let r = algorithm1(50, 65, 6, false).unwrap();
        assert_eq!(r.triple_u64().unwrap(), [379231827789565, 379231827789566, 379231827789571]);
        assert_eq!(r.count, BigInt::from(126410606437653u64));
        assert!(r.admissible);
        let r = algorithm1(70, 12, 11, false).unwrap();
        assert_eq!(r.triple_u64().unwrap(), [4831407922, 4831407923, 4831407933]);
        assert_eq!(r.count, BigInt::from(2409654789u64));
        assert!(r.admissible);
    }

    #[test]
    fn algorithm1_small_case_against_enumeration() {
        let s = semigroup_set(&[6, 15, 20]);
        let pairs = enumerate_admissible(&s).unwrap();
        let mut hits = 0;
        for seed in 0..6u64 {
            let r = algorithm1(6, seed, 2, false).unwrap();
            let [a, b, c] = r.triple_u64().unwrap();
            assert!(c < 49);
            assert_eq!(r.admissible, s.contains(a) && s.contains(b) && s.contains(c), "seed {seed}");
            assert_eq!(r.admissible, pairs.contains(&(a, 2)), "seed {seed}");
            hits += r.admissible as usize;
        }
        assert!(hits > 0);
    }

    #[test]
    fn algorithm1_errors() {
        assert!(matches!(algorithm1(6, 0, 6, false), Err(Error::Domain(_))));
        assert!(matches!(algorithm1(6, 0, 7, false), Err(Error::Domain(_))));
        assert!(matches!(algorithm1(8, 0, 2, false), Err(Error::Unsupported(_))));
        let r = algorithm1(8, 0, 2, true).unwrap();
        assert!(r.extension);
        assert_eq!(r.base, 4);
        assert_eq!(algorithm1(7, 0, 2, true), Err(Error::DegenerateSemigroup { n: 7 }));
    }

    #[test]
    fn algorithm1_triple_stays_below_frobenius() {
        for n in (4..=12u64).filter(|&n| !is_prime(n)) {
            let spec = bn_spec(n).unwrap();
            let ap = closed_apery(n).unwrap();
            for p in 2..=5 {
                for seed in 0..ap.base {
                    let Ok(r) = algorithm1(n, seed, p, true) else { continue };
                    assert!(r.count > BigInt::zero());
                    assert!(r.triple[2] < BigInt::from(r.frobenius.clone()), "n={n} seed={seed} p={p}");
                    let members = r.triple.iter().all(|t| ap.contains_int(t));
                    assert_eq!(r.admissible, members && r.triple[0] >= BigInt::from(1));
                    assert_eq!(r.extension, spec.is_prime_power);
                }
            }
        }
    }

    #[test]
    fn algorithm1_shift_can_leave_the_semigroup() {
        // residues 0, 1, 2 mod 6 hit 0, 55, 20; completing 55 gives (60, 61, 62),
        // and pulling below F = 49 lands on (42, 43, 44) with 43 ∉ ⟨6, 15, 20⟩
        let r = algorithm1(6, 0, 2, false).unwrap();
        assert_eq!(r.triple_u64().unwrap(), [42, 43, 44]);
        assert!(!r.admissible);
    }

    #[test]
    fn exists_examples() {
        for (n, p) in [(50u64, 6u64), (70, 11), (6, 2)] {
            let s = exists_admissible_bn(n, p).unwrap();
            assert!(is_admissible_bn(n, &s, p).unwrap(), "n={n} p={p}");
        }
        assert!(is_admissible_bn(50, &Nat::from(379231827789565u64), 6).unwrap());
        assert!(is_admissible_bn(70, &Nat::from(4831407922u64), 11).unwrap());
        let s = exists_admissible_bn(6, 2).unwrap();
        let brute = enumerate_admissible(&semigroup_set(&[6, 15, 20])).unwrap();
        assert!(brute.contains(&(s.to_u64().unwrap(), 2)));
        assert!(matches!(exists_admissible_bn(6, 7), Err(Error::Domain(_))));
    }

    #[test]
    fn no_admissible_pair_for_nine_with_p_two() {
        // S(B_9) = ⟨3, 28⟩, F = 53: s ≡ 0 forces s + 1 ≥ 28 and then s + 2 ≥ 56
        let s = semigroup_set(&[3, 28]);
        assert!(!enumerate_admissible(&s).unwrap().iter().any(|&(_, p)| p % 3 == 2));
        assert!(matches!(exists_admissible_bn(9, 2), Err(Error::Internal(_))));
    }
}
