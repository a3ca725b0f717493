//! Rational, modular and `l`-adic kernels.
//!
//! Everything downstream reduces to the primitives in this module: Bernoulli
//! numbers and polynomials (for partial zeta values), valuations, modular
//! inverses and powers, Teichmüller lifts, Hensel lifting and a small
//! checked residue type for `Z/l^k` arithmetic.

use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{cache, Error, Result};

/// Exact rational numbers, the coefficient domain of everything over `Q`.
pub type Rat = BigRational;

/// Convenience constructor for a rational from machine integers.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Convenience constructor for an integer rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Binomial coefficient `C(n, k)` as a big integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `base^exp mod modulus` for big integers, `modulus > 0`.
pub fn pow_mod(base: &BigUint, exp: &BigUint, modulus: &BigUint) -> BigUint {
    base.modpow(exp, modulus)
}

/// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
pub fn mod_inverse(a: &BigUint, m: &BigUint) -> Result<BigUint> {
    let a = BigInt::from(a.clone());
    let m_int = BigInt::from(m.clone());
    let e = a.extended_gcd(&m_int);
    if !e.gcd.is_one() {
        return Err(Error::invalid(format!("{a} is not a unit mod {m}")));
    }
    Ok(e.x.mod_floor(&m_int).to_biguint().expect("mod_floor is nonnegative"))
}

/// Inverse of `a` modulo `m` for machine integers.
pub fn inv_mod_u64(a: u64, m: u64) -> Result<u64> {
    let r = mod_inverse(&BigUint::from(a), &BigUint::from(m))?;
    Ok(r.to_u64().expect("inverse is below the modulus"))
}

/// Radical (squarefree kernel) of a positive integer.
pub fn radical(mut x: u64) -> u64 {
    let mut r = 1u64;
    let mut p = 2u64;
    while p * p <= x {
        if x % p == 0 {
            r *= p;
            while x % p == 0 {
                x /= p;
            }
        }
        p += 1;
    }
    if x > 1 {
        r *= x;
    }
    r
}

/// Prime divisors of a positive integer, sorted.
pub fn prime_support(mut x: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= x {
        if x % p == 0 {
            out.push(p);
            while x % p == 0 {
                x /= p;
            }
        }
        p += 1;
    }
    if x > 1 {
        out.push(x);
    }
    out
}

/// Deterministic primality test by trial division (adequate for the
/// desk-scale searches in this crate).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// `l`-adic valuation of a nonzero rational; `None` encodes `+infinity`
/// (i.e. the input was zero).
pub fn padic_val(x: &Rat, l: u64) -> Option<i64> {
    if x.is_zero() {
        return None;
    }
    let l = BigInt::from(l);
    let mut v: i64 = 0;
    let mut num = x.numer().abs();
    while (&num % &l).is_zero() {
        num /= &l;
        v += 1;
    }
    let mut den = x.denom().abs();
    while (&den % &l).is_zero() {
        den /= &l;
        v -= 1;
    }
    Some(v)
}

const BERNOULLI_CACHE_HEADER: &str = "stickelberger bernoulli v1";

fn bernoulli_table() -> &'static Mutex<Vec<Rat>> {
    static TABLE: OnceLock<Mutex<Vec<Rat>>> = OnceLock::new();
    TABLE.get_or_init(|| Mutex::new(load_bernoulli_file().unwrap_or_else(|| vec![Rat::one()])))
}

fn load_bernoulli_file() -> Option<Vec<Rat>> {
    let path = cache::cache_dir()?.join("bernoulli.txt");
    let records = cache::read_versioned(&path, BERNOULLI_CACHE_HEADER)?;
    let mut table = Vec::with_capacity(records.len());
    for (i, rec) in records.iter().enumerate() {
        let mut parts = rec.split_whitespace();
        let n: usize = parts.next()?.parse().ok()?;
        let num: BigInt = parts.next()?.parse().ok()?;
        let den: BigInt = parts.next()?.parse().ok()?;
        // records must be consecutive from n = 0 and exactly three fields
        if n != i || parts.next().is_some() || den.is_zero() {
            return None;
        }
        table.push(Rat::new(num, den));
    }
    if table.is_empty() || !table[0].is_one() {
        return None;
    }
    Some(table)
}

fn store_bernoulli_file(table: &[Rat]) {
    let Some(dir) = cache::cache_dir() else { return };
    let records: Vec<String> = table
        .iter()
        .enumerate()
        .map(|(n, b)| format!("{n} {} {}", b.numer(), b.denom()))
        .collect();
    // a failed cache write never fails the computation
    let _ = cache::write_versioned(&dir.join("bernoulli.txt"), BERNOULLI_CACHE_HEADER, &records);
}

/// The `n`-th Bernoulli number, with `B_1 = -1/2`.
///
/// Values are memoized in-process and persisted to a text cache file under
/// [`cache::cache_dir`], one `n numerator denominator` record per line.
pub fn bernoulli(n: u64) -> Rat {
    let n = n as usize;
    let mut table = bernoulli_table().lock().expect("bernoulli table poisoned");
    if n < table.len() {
        return table[n].clone();
    }
    while table.len() <= n {
        let m = table.len() as u64; // computing B_m from B_0..B_{m-1}
        let mut acc = Rat::zero();
        for (k, b) in table.iter().enumerate() {
            acc += Rat::from_integer(binomial(m + 1, k as u64)) * b;
        }
        table.push(-acc / Rat::from_integer(BigInt::from(m + 1)));
    }
    store_bernoulli_file(&table);
    table[n].clone()
}

/// The Bernoulli polynomial `B_n(x) = sum_k C(n,k) B_k x^{n-k}`.
pub fn bernoulli_poly(n: u64, x: &Rat) -> Rat {
    // Horner evaluation; C(n,k) B_k is the coefficient of x^(n-k)
    let mut acc = Rat::zero();
    for k in 0..=n {
        acc = acc * x + Rat::from_integer(binomial(n, k)) * bernoulli(k);
    }
    acc
}

/// Teichmüller lift of `a` to `Z/l^k`: the unique `(l-1)`-st root of unity
/// congruent to `a` mod `l`, computed as `a^(l^(k-1)) mod l^k`.
pub fn teichmuller(a: u64, l: u64, k: u32) -> Result<BigUint> {
    if l < 3 || k == 0 {
        return Err(Error::invalid("teichmuller requires an odd prime l and k >= 1"));
    }
    if a % l == 0 {
        return Err(Error::invalid(format!("{a} is not a unit mod {l}")));
    }
    let lk = BigUint::from(l).pow(k);
    let exp = BigUint::from(l).pow(k - 1);
    Ok(pow_mod(&(BigUint::from(a) % &lk), &exp, &lk))
}

/// Evaluate an integer polynomial (coefficients in increasing degree) mod m.
fn poly_eval_mod(coeffs: &[BigInt], x: &BigUint, m: &BigUint) -> BigUint {
    let m_int = BigInt::from(m.clone());
    let x_int = BigInt::from(x.clone());
    let mut acc = BigInt::zero();
    for c in coeffs.iter().rev() {
        acc = (acc * &x_int + c).mod_floor(&m_int);
    }
    acc.to_biguint().expect("mod_floor is nonnegative")
}

fn poly_derivative(coeffs: &[BigInt]) -> Vec<BigInt> {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect()
}

/// Hensel-lift a simple root of an integer polynomial from `Z/p` to `Z/p^k`.
///
/// `coeffs` lists the coefficients in increasing degree. Fails with
/// [`Error::NonSimpleRoot`] when the derivative vanishes at the root mod `p`,
/// and with an invalid-argument error when `root` is not a root mod `p`.
pub fn hensel_lift_root(coeffs: &[BigInt], root: u64, p: u64, k: u32) -> Result<BigUint> {
    if k == 0 {
        return Err(Error::invalid("hensel_lift_root requires k >= 1"));
    }
    let p_big = BigUint::from(p);
    let mut x = BigUint::from(root % p);
    if !poly_eval_mod(coeffs, &x, &p_big).is_zero() {
        return Err(Error::invalid(format!("{root} is not a root mod {p}")));
    }
    let deriv = poly_derivative(coeffs);
    if poly_eval_mod(&deriv, &x, &p_big).is_zero() {
        return Err(Error::NonSimpleRoot);
    }
    let mut prec: u32 = 1;
    while prec < k {
        prec = (2 * prec).min(k);
        let m = p_big.pow(prec);
        let f = poly_eval_mod(coeffs, &x, &m);
        let df = poly_eval_mod(&deriv, &x, &m);
        let df_inv = mod_inverse(&df, &m)?;
        // x <- x - f(x)/f'(x) mod p^prec
        x = (&x + &m - (f * df_inv) % &m) % &m;
    }
    Ok(x)
}

/// A residue in `Z/l^k` that remembers `(l, k)` and refuses mixed-precision
/// arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PadicResidue {
    value: BigUint,
    l: u64,
    k: u32,
}

impl PadicResidue {
    pub fn new(value: BigUint, l: u64, k: u32) -> Result<Self> {
        if l < 2 || k == 0 {
            return Err(Error::invalid("PadicResidue requires a prime l and k >= 1"));
        }
        let m = BigUint::from(l).pow(k);
        Ok(PadicResidue { value: value % m, l, k })
    }

    pub fn from_i64(value: i64, l: u64, k: u32) -> Result<Self> {
        let m = BigInt::from(l).pow(k);
        let v = BigInt::from(value).mod_floor(&m);
        Self::new(v.to_biguint().expect("mod_floor is nonnegative"), l, k)
    }

    /// Reduce an `l`-integral rational mod `l^k`.
    pub fn from_rat(x: &Rat, l: u64, k: u32) -> Result<Self> {
        match padic_val(x, l) {
            Some(v) if v < 0 => {
                return Err(Error::NonIntegral { l, witness: x.to_string() })
            }
            _ => {}
        }
        let m = BigInt::from(l).pow(k);
        let den = x.denom().mod_floor(&m).to_biguint().expect("nonnegative");
        let num = x.numer().mod_floor(&m).to_biguint().expect("nonnegative");
        let inv = mod_inverse(&den, &m.to_biguint().expect("positive modulus"))?;
        Self::new(num * inv, l, k)
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn prime(&self) -> u64 {
        self.l
    }

    pub fn precision(&self) -> u32 {
        self.k
    }

    pub fn modulus(&self) -> BigUint {
        BigUint::from(self.l).pow(self.k)
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.l != other.l || self.k != other.k {
            return Err(Error::DomainMismatch(format!(
                "Z/{}^{} vs Z/{}^{}",
                self.l, self.k, other.l, other.k
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Self::new(&self.value + &other.value, self.l, self.k)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Self::new(&self.value + self.modulus() - &other.value, self.l, self.k)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Self::new(&self.value * &other.value, self.l, self.k)
    }

    pub fn inv(&self) -> Result<Self> {
        let v = mod_inverse(&self.value, &self.modulus())?;
        Self::new(v, self.l, self.k)
    }

    pub fn pow(&self, exp: &BigUint) -> Self {
        PadicResidue {
            value: pow_mod(&self.value, exp, &self.modulus()),
            l: self.l,
            k: self.k,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bernoulli_small_values() {
        assert_eq!(bernoulli(0), rat_int(1));
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(3), rat_int(0));
        assert_eq!(bernoulli(12), rat(-691, 2730));
    }

    #[test]
    fn bernoulli_poly_values() {
        // B_2(x) = x^2 - x + 1/6
        assert_eq!(bernoulli_poly(2, &rat(1, 5)), rat(1, 150));
        assert_eq!(bernoulli_poly(0, &rat(7, 3)), rat_int(1));
        assert_eq!(bernoulli_poly(1, &rat(1, 2)), rat_int(0));
    }

    #[test]
    fn padic_valuations() {
        assert_eq!(padic_val(&rat(-1, 12), 3), Some(-1));
        assert_eq!(padic_val(&rat(50, 3), 5), Some(2));
        assert_eq!(padic_val(&rat_int(0), 7), None);
    }

    #[test]
    fn teichmuller_lift() {
        assert_eq!(teichmuller(2, 5, 2).unwrap(), BigUint::from(7u32));
        // omega(a)^(l-1) = 1 and omega(a) = a mod l
        let w = teichmuller(3, 7, 4).unwrap();
        let m = BigUint::from(7u32).pow(4);
        assert_eq!(pow_mod(&w, &BigUint::from(6u32), &m), BigUint::one());
        assert_eq!(&w % 7u32, BigUint::from(3u32));
    }

    #[test]
    fn hensel_lift() {
        // x^2 + 1 has the simple root 2 mod 5; its lift mod 25 is 7
        let coeffs = [BigInt::from(1), BigInt::from(0), BigInt::from(1)];
        assert_eq!(hensel_lift_root(&coeffs, 2, 5, 2).unwrap(), BigUint::from(7u32));
        let r = hensel_lift_root(&coeffs, 2, 5, 8).unwrap();
        let m = BigUint::from(5u32).pow(8);
        assert!(poly_eval_mod(&coeffs, &r, &m).is_zero());
        // x^2 has a non-simple root at 0
        let sq = [BigInt::from(0), BigInt::from(0), BigInt::from(1)];
        assert!(matches!(hensel_lift_root(&sq, 0, 5, 2), Err(Error::NonSimpleRoot)));
    }

    #[test]
    fn residue_arithmetic_is_checked() {
        let a = PadicResidue::from_i64(-1, 5, 2).unwrap();
        assert_eq!(a.value(), &BigUint::from(24u32));
        let b = PadicResidue::from_rat(&rat(1, 2), 5, 2).unwrap();
        assert_eq!(b.value(), &BigUint::from(13u32));
        assert!(a.mul(&b).is_ok());
        let c = PadicResidue::from_i64(1, 5, 3).unwrap();
        assert!(matches!(a.add(&c), Err(Error::DomainMismatch(_))));
        assert!(matches!(
            PadicResidue::from_rat(&rat(1, 5), 5, 2),
            Err(Error::NonIntegral { .. })
        ));
    }
}
