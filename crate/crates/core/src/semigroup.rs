//! Generic numerical-semigroup engine.
//!
//! A semigroup is stored as its minimal generators plus the Apéry table at the
//! multiplicity. Membership, Frobenius number, genus and pseudo-Frobenius
//! numbers are all read off that table, so generator values may be far larger
//! than a machine word as long as the multiplicity stays small.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{gcd_list, Nat};

/// Largest Apéry base (number of residue classes) the engine will tabulate.
pub const MAX_APERY_BASE: u64 = 4_000_000;

/// Largest Frobenius number for which [`NumericalSemigroup::gaps`] lists gaps.
pub const MAX_GAP_FROBENIUS: u64 = 10_000_000;

/// Least element of `S` in each residue class modulo `base`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AperyTable {
    base: u64,
    entries: Vec<Nat>,
}

impl AperyTable {
    pub fn base(&self) -> u64 {
        self.base
    }

    /// Entries indexed by residue.
    pub fn entries(&self) -> &[Nat] {
        &self.entries
    }

    pub fn entry(&self, residue: usize) -> &Nat {
        &self.entries[residue]
    }

    /// Entries in increasing order.
    pub fn sorted(&self) -> Vec<Nat> {
        let mut v = self.entries.clone();
        v.sort();
        v
    }

    pub fn max(&self) -> &Nat {
        self.entries.iter().max().expect("an Apéry table is never empty")
    }

    /// `m ∈ S` iff `m` is at least the Apéry entry of its residue class.
    pub fn contains(&self, m: &Nat) -> bool {
        m >= &self.entries[residue(m, self.base)]
    }

    /// Signed-integer form of [`contains`](Self::contains); negatives are never members.
    pub fn contains_int(&self, m: &BigInt) -> bool {
        m.to_biguint().is_some_and(|m| self.contains(&m))
    }
}

fn residue(m: &Nat, base: u64) -> usize {
    (m % base).to_usize().expect("residue is below the Apéry base, which fits in usize")
}

fn checked_base(x: &Nat) -> Result<u64> {
    match x.to_u64() {
        Some(b) if b <= MAX_APERY_BASE => Ok(b),
        _ => Err(Error::bound("Apéry base", x, MAX_APERY_BASE)),
    }
}

/// Single-source shortest paths from residue 0 in the graph whose edges are
/// `r → (r + g) mod base` with weight `g`, one per generator.
fn dijkstra_residues(generators: &[Nat], base: u64) -> Vec<Option<Nat>> {
    let size = base as usize;
    let steps: Vec<(usize, &Nat)> = generators.iter().map(|g| (residue(g, base), g)).collect();
    let mut dist: Vec<Option<Nat>> = vec![None; size];
    let mut heap = BinaryHeap::new();
    dist[0] = Some(Nat::zero());
    heap.push(Reverse((Nat::zero(), 0usize)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if dist[r].as_ref().is_some_and(|best| *best < d) {
            continue;
        }
        for &(step, g) in &steps {
            let next = (r + step) % size;
            let cand = &d + g;
            if dist[next].as_ref().is_none_or(|cur| cand < *cur) {
                dist[next] = Some(cand.clone());
                heap.push(Reverse((cand, next)));
            }
        }
    }
    dist
}

/// Adds generator `g` to a residue table modulo `table.len()` by walking each
/// cycle of `r ↦ r + g` once, starting from its smallest finite entry.
fn round_robin_insert(table: &mut [Option<Nat>], g: &Nat) {
    let size = table.len();
    let step = residue(g, size as u64);
    if step == 0 {
        return;
    }
    let cycles = step.gcd(&size);
    let cycle_len = size / cycles;
    for start in 0..cycles {
        let members = (0..cycle_len).map(|i| (start + i * step) % size);
        let Some(min_at) = members.filter(|&r| table[r].is_some()).min_by(|&a, &b| table[a].cmp(&table[b])) else {
            continue;
        };
        let mut r = min_at;
        for _ in 1..cycle_len {
            let next = (r + step) % size;
            if let Some(cand) = table[r].as_ref().map(|d| d + g) {
                if table[next].as_ref().is_none_or(|cur| cand < *cur) {
                    table[next] = Some(cand);
                }
            }
            r = next;
        }
    }
}

fn sorted_positive(raw: &[Nat]) -> Result<Vec<Nat>> {
    if raw.is_empty() {
        return Err(Error::domain("a semigroup needs at least one generator"));
    }
    if raw.iter().any(Zero::is_zero) {
        return Err(Error::domain("generators must be positive"));
    }
    let mut v = raw.to_vec();
    v.sort();
    v.dedup();
    Ok(v)
}

/// The unique minimal generating subset of `raw`.
///
/// Elements are scanned in increasing order and kept only if they are not a
/// nonnegative combination of the elements already kept.
pub fn minimal_generators(raw: &[Nat]) -> Result<Vec<Nat>> {
    let sorted = sorted_positive(raw)?;
    let gcd = gcd_list(&sorted)?;
    if !gcd.is_one() {
        return Err(Error::NotANumericalSemigroup { gcd });
    }
    let base = checked_base(&sorted[0])?;
    let mut table: Vec<Option<Nat>> = vec![None; base as usize];
    table[0] = Some(Nat::zero());
    let mut kept = vec![sorted[0].clone()];
    for g in &sorted[1..] {
        let representable = table[residue(g, base)].as_ref().is_some_and(|w| w <= g);
        if !representable {
            round_robin_insert(&mut table, g);
            kept.push(g.clone());
        }
    }
    Ok(kept)
}

/// A numerical semigroup with its minimal generators and the Apéry table at its multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<Nat>,
    apery: AperyTable,
}

impl NumericalSemigroup {
    pub fn new(raw_generators: &[Nat]) -> Result<Self> {
        let generators = minimal_generators(raw_generators)?;
        let base = checked_base(&generators[0])?;
        let apery = Self::tabulate(&generators, base);
        Ok(Self { generators, apery })
    }

    pub fn from_u64s(raw: &[u64]) -> Result<Self> {
        Self::new(&raw.iter().map(|&g| Nat::from(g)).collect::<Vec<_>>())
    }

    fn tabulate(generators: &[Nat], base: u64) -> AperyTable {
        let entries = dijkstra_residues(generators, base)
            .into_iter()
            .map(|d| d.expect("coprime generators reach every residue"))
            .collect();
        AperyTable { base, entries }
    }

    /// The minimal system of generators, ascending.
    pub fn generators(&self) -> &[Nat] {
        &self.generators
    }

    pub fn multiplicity(&self) -> &Nat {
        &self.generators[0]
    }

    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    /// The cached Apéry table at the multiplicity.
    pub fn apery(&self) -> &AperyTable {
        &self.apery
    }

    /// Apéry table with respect to an arbitrary nonzero element `x`.
    pub fn apery_set(&self, x: &Nat) -> Result<AperyTable> {
        if x.is_zero() {
            return Err(Error::domain("Apéry base must be nonzero"));
        }
        if !self.contains(x) {
            return Err(Error::domain(format!("Apéry base {x} is not an element of S")));
        }
        let base = checked_base(x)?;
        Ok(Self::tabulate(&self.generators, base))
    }

    pub fn contains(&self, m: &Nat) -> bool {
        self.apery.contains(m)
    }

    /// Largest gap, or −1 for ℕ.
    pub fn frobenius(&self) -> BigInt {
        BigInt::from(self.apery.max().clone()) - BigInt::from(self.apery.base)
    }

    /// Number of gaps, `(Σ Ap)/x − (x − 1)/2`.
    pub fn genus(&self) -> Nat {
        let x = Nat::from(self.apery.base);
        let sum: Nat = self.apery.entries.iter().sum();
        let numerator = sum * 2u32 - &x * (&x - 1u32);
        let (g, rem) = numerator.div_rem(&(x * 2u32));
        debug_assert!(rem.is_zero(), "genus formula is always integral");
        g
    }

    /// All gaps in increasing order. Refuses when the Frobenius number exceeds [`MAX_GAP_FROBENIUS`].
    pub fn gaps(&self) -> Result<Vec<u64>> {
        let f = self.frobenius();
        if f > BigInt::from(MAX_GAP_FROBENIUS) {
            return Err(Error::bound("Frobenius number", f, MAX_GAP_FROBENIUS));
        }
        let base = self.apery.base;
        let mut gaps = Vec::new();
        for (r, w) in self.apery.entries.iter().enumerate() {
            let w = w.to_u64().expect("bounded by the Frobenius check");
            gaps.extend((r as u64..w).step_by(base as usize));
        }
        gaps.sort_unstable();
        Ok(gaps)
    }

    /// Pseudo-Frobenius numbers `w − x` for the `≤_S`-maximal Apéry entries `w`.
    ///
    /// An entry `w` is maximal iff `w + g` leaves the Apéry set for every
    /// minimal generator `g`.
    pub fn pseudo_frobenius(&self) -> Vec<BigInt> {
        let x = BigInt::from(self.apery.base);
        let mut pf: Vec<BigInt> = self
            .apery
            .entries
            .iter()
            .filter(|w| {
                self.generators.iter().all(|g| {
                    let up = *w + g;
                    self.apery.entry(residue(&up, self.apery.base)) != &up
                })
            })
            .map(|w| BigInt::from(w.clone()) - &x)
            .collect();
        pf.sort();
        pf
    }

    pub fn type_of(&self) -> usize {
        self.pseudo_frobenius().len()
    }

    /// `2·g(S) = F(S) + 1`. ℕ counts as symmetric.
    pub fn is_symmetric(&self) -> bool {
        BigInt::from(self.genus()) * 2 == self.frobenius() + 1
    }

    /// Telescopic in ascending generator order: with `d_1 = n_1` and
    /// `d_i = gcd(d_{i−1}, n_i)`, each `n_i / d_i` lies in
    /// `⟨n_1/d_{i−1}, …, n_{i−1}/d_{i−1}⟩`.
    pub fn is_telescopic(&self) -> bool {
        let gens = &self.generators;
        let mut d = gens[0].clone();
        for i in 1..gens.len() {
            let next_d = d.gcd(&gens[i]);
            let scaled: Vec<Nat> = gens[..i].iter().map(|g| g / &d).collect();
            let target = &gens[i] / &next_d;
            match membership(&scaled, &target) {
                Some(true) => {}
                _ => return false,
            }
            d = next_d;
        }
        true
    }
}

/// Membership of `target` in the monoid generated by `gens` (which need not be coprime).
/// `None` when the smallest generator is too large to tabulate.
fn membership(gens: &[Nat], target: &Nat) -> Option<bool> {
    let mut sorted = gens.to_vec();
    sorted.sort();
    let base = checked_base(&sorted[0]).ok()?;
    let table = dijkstra_residues(&sorted, base);
    Some(table[residue(target, base)].as_ref().is_some_and(|w| w <= target))
}
