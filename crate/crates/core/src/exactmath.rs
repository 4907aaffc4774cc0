//! Exact combinatorial arithmetic on arbitrary-precision naturals.
//!
//! Indices (the `n`, `k`, `p` of a binomial coefficient) are machine words;
//! the values they produce are [`Nat`]s and never overflow.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision nonnegative integer.
pub type Nat = BigUint;

/// Prime factorization with strictly increasing primes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pairs: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.pairs
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.pairs.iter().map(|&(p, _)| p)
    }

    pub fn is_prime_power(&self) -> bool {
        self.pairs.len() == 1
    }

    pub fn is_prime(&self) -> bool {
        self.pairs == [(self.pairs[0].0, 1)]
    }

    /// Sum of the exponents.
    pub fn total_exponent(&self) -> u32 {
        self.pairs.iter().map(|&(_, k)| k).sum()
    }

    pub fn value(&self) -> u64 {
        self.pairs.iter().map(|&(p, k)| p.pow(k)).product()
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &(p, k)) in self.pairs.iter().enumerate() {
            if i > 0 {
                f.write_str("·")?;
            }
            if k == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{k}")?;
            }
        }
        Ok(())
    }
}

/// `n choose k`, computed by the multiplicative formula with exact division at every step.
pub fn binomial(n: u64, k: u64) -> Result<Nat> {
    if k > n {
        return Err(Error::domain(format!("binomial({n}, {k}): k exceeds n")));
    }
    let k = k.min(n - k);
    let mut acc = Nat::one();
    for i in 1..=k {
        // acc = C(n-k+i-1, i-1) here, so acc·(n-k+i) is divisible by i.
        acc *= n - k + i;
        acc /= i;
    }
    Ok(acc)
}

/// Complete factorization of `n` by trial division.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n < 2 {
        return Err(Error::domain(format!("cannot factorize {n}: need n ≥ 2")));
    }
    let mut rest = n;
    let mut pairs = Vec::new();
    let mut d = 2u64;
    while d * d <= rest {
        if rest.is_multiple_of(d) {
            let mut k = 0;
            while rest.is_multiple_of(d) {
                rest /= d;
                k += 1;
            }
            pairs.push((d, k));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        pairs.push((rest, 1));
    }
    Ok(Factorization { pairs })
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n).map(|f| f.is_prime()).unwrap_or(false)
}

/// Largest `v` with `p^v | x`.
pub fn p_adic_valuation(p: u64, x: &Nat) -> Result<u32> {
    if p < 2 {
        return Err(Error::domain(format!("valuation base {p} is not prime")));
    }
    if x.is_zero() {
        return Err(Error::domain("p-adic valuation of 0 is undefined"));
    }
    let p = Nat::from(p);
    let mut x = x.clone();
    let mut v = 0;
    loop {
        let (q, r) = x.div_rem(&p);
        if !r.is_zero() {
            return Ok(v);
        }
        x = q;
        v += 1;
    }
}

/// `v_p(C(n, k))` as the number of carries when adding `k` and `n - k` in base `p` (Kummer).
pub fn binomial_valuation_kummer(p: u64, n: u64, k: u64) -> Result<u32> {
    if k > n {
        return Err(Error::domain(format!("binomial({n}, {k}): k exceeds n")));
    }
    if p < 2 {
        return Err(Error::domain(format!("valuation base {p} is not prime")));
    }
    let (mut a, mut b) = (k, n - k);
    let mut carry = 0;
    let mut carries = 0;
    while a > 0 || b > 0 || carry > 0 {
        let digit = a % p + b % p + carry;
        carry = u64::from(digit >= p);
        carries += carry as u32;
        a /= p;
        b /= p;
    }
    Ok(carries)
}

/// Checks the congruence
/// `C(p^a·m, p^a·n2) / C(m, n2) ≡ 1 + [p = 2]·p·n2·(m − n2)  (mod p^(2 + v_p(n2)))`.
///
/// The quotient is read as a p-local rational; a denominator divisible by `p`
/// is an internal error. With `n2 = 0` the modulus is taken to be `p²`.
pub fn sun_congruence_holds(p: u64, a: u32, m: u64, n2: u64) -> Result<bool> {
    if !is_prime(p) {
        return Err(Error::domain(format!("{p} is not prime")));
    }
    if n2 > m {
        return Err(Error::domain(format!("need m ≥ n2, got m = {m}, n2 = {n2}")));
    }
    let (upper, lower) = p
        .checked_pow(a)
        .and_then(|pa| Some((pa.checked_mul(m)?, pa * n2)))
        .ok_or_else(|| Error::domain("p^a·m overflows a machine word"))?;
    let top = binomial(upper, lower)?;
    let bottom = binomial(m, n2)?;
    // The quotient need not be an integer (C(15, 6) / C(5, 2) = 1001 / 2); it is
    // compared as an element of the p-local integers.
    let g = top.gcd(&bottom);
    let (num, den) = (top / &g, bottom / &g);
    if (&den % p).is_zero() {
        return Err(Error::internal(format!("C({upper}, {lower}) / C({m}, {n2}) is not p-integral for p = {p}")));
    }
    let exponent = if n2 == 0 { 2 } else { 2 + p_adic_valuation(p, &Nat::from(n2))? };
    let modulus = Nat::from(p).pow(exponent);
    let mut rhs = Nat::one();
    if p == 2 {
        rhs += Nat::from(p) * n2 * (m - n2);
    }
    Ok(num % &modulus == (rhs * den) % &modulus)
}

/// Returns `(C(n, p^k) mod n, (n / p^k) mod n)`; the two agree whenever `p^k | n`.
pub fn binom_residue_lemma(n: u64, p: u64, k: u32) -> Result<(Nat, Nat)> {
    if k == 0 {
        return Err(Error::domain("exponent k must be at least 1"));
    }
    let pk = p
        .checked_pow(k)
        .filter(|&pk| pk != 0 && n.is_multiple_of(pk))
        .ok_or_else(|| Error::domain(format!("{p}^{k} does not divide {n}")))?;
    let modulus = Nat::from(n);
    let lhs = binomial(n, pk)? % &modulus;
    let rhs = Nat::from(n / pk) % &modulus;
    Ok((lhs, rhs))
}

pub fn gcd_list(values: &[Nat]) -> Result<Nat> {
    if values.is_empty() {
        return Err(Error::domain("gcd of an empty list"));
    }
    let g = values.iter().fold(Nat::zero(), |acc, v| acc.gcd(v));
    if g.is_zero() {
        return Err(Error::domain("gcd of an all-zero list"));
    }
    Ok(g)
}

/// Every integer at or above `(a_1 − 1)(a_k − 1)` is a nonnegative combination
/// of sorted coprime `a_1 ≤ … ≤ a_k`.
pub fn gallier_bound(sorted_generators: &[Nat]) -> Option<Nat> {
    let first = sorted_generators.first()?;
    let last = sorted_generators.last()?;
    if first.is_zero() {
        return None;
    }
    Some((first - 1u32) * (last - 1u32))
}
