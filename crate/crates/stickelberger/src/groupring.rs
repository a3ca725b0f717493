//! Abelian Galois groups over `Q` and exact group-ring algebra.
//!
//! A group here is a quotient `(Z/m)^* / H`; its elements are Frobenius
//! classes `sigma_a` named by the least positive representative of the coset
//! `aH`. Group-ring elements carry either exact rational coefficients or
//! residues mod `l^k`; the two domains never mix silently.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{self, padic_val, PadicResidue, Rat};
use crate::{Error, Result};

fn gcd64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// Units of `Z/m` as least positive residues.
pub fn units_mod(m: u64) -> Vec<u64> {
    (1..m.max(2)).filter(|&a| gcd64(a, m) == 1).collect()
}

/// The Galois group of a subfield of `Q(mu_m)`, presented as
/// `(Z/m)^* / H` where the subfield is the fixed field of `H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGaloisGroup {
    modulus: u64,
    subgroup: Vec<u64>, // sorted, closed under product and inverse
    reps: Vec<u64>,     // sorted canonical coset representatives
}

impl AbelianGaloisGroup {
    /// The full group `(Z/m)^*`, i.e. the field `Q(mu_m)`.
    pub fn full(m: u64) -> Result<Self> {
        Self::fixed_field_of(m, &[])
    }

    /// The quotient of `(Z/m)^*` by the subgroup generated by `gens`;
    /// the field is the fixed field of that subgroup.
    pub fn fixed_field_of(m: u64, gens: &[u64]) -> Result<Self> {
        if m < 3 {
            return Err(Error::invalid("group modulus must be at least 3"));
        }
        let mut h = vec![1u64];
        for &g in gens {
            let g = g % m;
            if gcd64(g, m) != 1 {
                return Err(Error::invalid(format!("generator {g} is not a unit mod {m}")));
            }
            // close under multiplication by g
            let mut frontier = h.clone();
            loop {
                let next: Vec<u64> = frontier.iter().map(|&x| x * g % m).collect();
                let mut grew = false;
                for x in next.iter() {
                    if !h.contains(x) {
                        h.push(*x);
                        grew = true;
                    }
                }
                if !grew {
                    break;
                }
                frontier = next;
            }
        }
        h.sort_unstable();
        let mut reps: Vec<u64> = Vec::new();
        for a in units_mod(m) {
            let rep = h.iter().map(|&x| x * a % m).min().expect("H nonempty");
            if rep == a {
                reps.push(a);
            }
        }
        Ok(AbelianGaloisGroup { modulus: m, subgroup: h, reps })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn subgroup(&self) -> &[u64] {
        &self.subgroup
    }

    /// Canonical representatives of all group elements, sorted.
    pub fn elements(&self) -> &[u64] {
        &self.reps
    }

    pub fn order(&self) -> u64 {
        self.reps.len() as u64
    }

    /// Canonical representative of the class of `a`.
    pub fn rep_of(&self, a: u64) -> Result<u64> {
        let a = a % self.modulus;
        if gcd64(a, self.modulus) != 1 {
            return Err(Error::invalid(format!(
                "{a} is not a unit mod {}",
                self.modulus
            )));
        }
        Ok(self
            .subgroup
            .iter()
            .map(|&h| h * a % self.modulus)
            .min()
            .expect("subgroup nonempty"))
    }

    pub fn identity(&self) -> u64 {
        1
    }

    pub fn mul(&self, a: u64, b: u64) -> Result<u64> {
        self.rep_of((a % self.modulus) * (b % self.modulus) % self.modulus)
    }

    pub fn inv(&self, a: u64) -> Result<u64> {
        self.rep_of(arith::inv_mod_u64(a % self.modulus, self.modulus)?)
    }

    /// Representative of complex conjugation, the class of `-1`.
    pub fn conjugation(&self) -> u64 {
        self.rep_of(self.modulus - 1).expect("-1 is always a unit")
    }

    /// Whether the field is CM, i.e. conjugation acts nontrivially.
    pub fn is_cm(&self) -> bool {
        self.conjugation() != self.identity()
    }

    /// Whether `a`'s class is the identity (i.e. `sigma_a` fixes the field).
    pub fn is_trivial(&self, a: u64) -> Result<bool> {
        Ok(self.rep_of(a)? == self.identity())
    }

    /// The decomposition subgroup at a rational prime `p`, as a sorted list
    /// of representatives: classes of units congruent to a power of `p`
    /// modulo the prime-to-`p` part of the modulus (inertia included).
    pub fn decomposition_subgroup(&self, p: u64) -> Result<Vec<u64>> {
        if p < 2 {
            return Err(Error::invalid("prime expected"));
        }
        let mut m_tame = self.modulus;
        while m_tame % p == 0 {
            m_tame /= p;
        }
        // powers of p modulo the tame part (m_tame = 1 means everything)
        let mut powers = vec![1 % m_tame.max(1)];
        if m_tame > 1 {
            let mut x = p % m_tame;
            while !powers.contains(&x) {
                powers.push(x);
                x = x * p % m_tame;
            }
        }
        let mut d: Vec<u64> = Vec::new();
        for a in units_mod(self.modulus) {
            if m_tame <= 1 || powers.contains(&(a % m_tame)) {
                let r = self.rep_of(a)?;
                if !d.contains(&r) {
                    d.push(r);
                }
            }
        }
        d.sort_unstable();
        Ok(d)
    }

    /// Check that `self` (group of E) restricts onto `target` (group of
    /// F ⊆ E): the target modulus divides ours and every element of our
    /// kernel subgroup acts trivially on F.
    pub fn check_tower(&self, target: &AbelianGaloisGroup) -> Result<()> {
        if self.modulus % target.modulus != 0 {
            return Err(Error::IncompatibleTower(format!(
                "modulus {} does not divide {}",
                target.modulus, self.modulus
            )));
        }
        for &h in &self.subgroup {
            if target.rep_of(h)? != target.identity() {
                return Err(Error::IncompatibleTower(format!(
                    "kernel class {h} acts nontrivially on the target field"
                )));
            }
        }
        Ok(())
    }

    /// Conductor of the field: the smallest `d | m` such that every unit
    /// congruent to 1 mod `d` acts trivially.
    pub fn conductor(&self) -> u64 {
        let m = self.modulus;
        let mut divisors: Vec<u64> = (1..=m).filter(|d| m % d == 0).collect();
        divisors.sort_unstable();
        'next: for d in divisors {
            for u in units_mod(m) {
                if u % d == 1 % d && self.rep_of(u).expect("unit") != self.identity() {
                    continue 'next;
                }
            }
            return d;
        }
        m
    }

    /// Frobenius class of an integer `r` coprime to the conductor; `r` need
    /// not be coprime to the presentation modulus.
    pub fn class_of_ideal(&self, r: u64) -> Result<u64> {
        let c = self.conductor();
        if c == 1 {
            return Ok(self.identity());
        }
        let r = r % c;
        if gcd64(r, c) != 1 {
            return Err(Error::invalid(format!("{r} is ramified: not coprime to the conductor {c}")));
        }
        // any lift of r mod c that is a unit mod m names the same class
        let mut a = r;
        while gcd64(a, self.modulus) != 1 {
            a += c;
        }
        self.rep_of(a)
    }

    /// `omega^(n)(sigma_a) mod l^e`: the common value `A^n mod l^e` over all
    /// lifts `A` of the class of `a`, with well-definedness checked.
    pub fn cyclotomic_char_power(&self, a: u64, n: u64, l: u64, e: u32) -> Result<BigUint> {
        if e == 0 {
            return Ok(BigUint::zero());
        }
        let le = BigUint::from(l).pow(e);
        let le_u = l.checked_pow(e).ok_or_else(|| Error::invalid("l^e overflow"))?;
        let big_m = self.modulus.lcm(&le_u);
        let a_rep = self.rep_of(a)?;
        let mut value: Option<BigUint> = None;
        for lift in units_mod(big_m) {
            if self.rep_of(lift)? != a_rep {
                continue;
            }
            let v = arith::pow_mod(&BigUint::from(lift), &BigUint::from(n), &le);
            match &value {
                None => value = Some(v),
                Some(w) if *w == v => {}
                Some(_) => {
                    return Err(Error::CharacterNotDefined(format!(
                        "omega^({n}) is not constant on the class of {a_rep} mod {l}^{e}"
                    )))
                }
            }
        }
        value.ok_or_else(|| Error::invalid("empty lift set"))
    }

    /// `w_n(F)_l`: the largest power `l^e` such that `A^n ≡ 1 mod l^e` for
    /// every unit `A` acting trivially on the field.
    pub fn w_n(&self, n: u64, l: u64) -> Result<u64> {
        if n == 0 {
            return Err(Error::invalid("w_n needs n >= 1"));
        }
        let mut e: u32 = 0;
        loop {
            let next = e + 1;
            let le_u = match l.checked_pow(next) {
                Some(v) => v,
                None => return Err(Error::invalid("l^e overflow")),
            };
            let le = BigUint::from(le_u);
            let big_m = self.modulus.lcm(&le_u);
            let ok = units_mod(big_m).into_iter().try_fold(true, |acc, lift| {
                if !acc {
                    return Ok::<bool, Error>(false);
                }
                if self.rep_of(lift)? != self.identity() {
                    return Ok(true);
                }
                Ok(arith::pow_mod(&BigUint::from(lift), &BigUint::from(n), &le).is_one())
            })?;
            if ok {
                e = next;
            } else {
                return Ok(l.pow(e));
            }
        }
    }
}

/// Coefficient storage of a group-ring element: exact rationals or
/// residues mod `l^k`.
#[derive(Debug, Clone, PartialEq)]
enum CoeffMap {
    Rat(BTreeMap<u64, Rat>),
    Mod { l: u64, k: u32, map: BTreeMap<u64, BigUint> },
}

/// An element of `Q[G]` or `(Z/l^k)[G]`.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupRingElement {
    group: AbelianGaloisGroup,
    coeffs: CoeffMap,
}

impl GroupRingElement {
    pub fn zero(group: &AbelianGaloisGroup) -> Self {
        GroupRingElement { group: group.clone(), coeffs: CoeffMap::Rat(BTreeMap::new()) }
    }

    pub fn zero_mod(group: &AbelianGaloisGroup, l: u64, k: u32) -> Result<Self> {
        if l < 2 || k == 0 {
            return Err(Error::invalid("modular domain needs a prime l and k >= 1"));
        }
        Ok(GroupRingElement {
            group: group.clone(),
            coeffs: CoeffMap::Mod { l, k, map: BTreeMap::new() },
        })
    }

    pub fn one(group: &AbelianGaloisGroup) -> Self {
        Self::sigma(group, 1).expect("identity is a unit")
    }

    /// The basis element `sigma_a` with rational coefficient 1.
    pub fn sigma(group: &AbelianGaloisGroup, a: u64) -> Result<Self> {
        let mut map = BTreeMap::new();
        map.insert(group.rep_of(a)?, Rat::one());
        Ok(GroupRingElement { group: group.clone(), coeffs: CoeffMap::Rat(map) })
    }

    pub fn from_rat_coeffs(
        group: &AbelianGaloisGroup,
        entries: impl IntoIterator<Item = (u64, Rat)>,
    ) -> Result<Self> {
        let mut x = Self::zero(group);
        for (a, c) in entries {
            x.add_rat_term(a, c)?;
        }
        Ok(x)
    }

    pub fn group(&self) -> &AbelianGaloisGroup {
        &self.group
    }

    pub fn is_rational(&self) -> bool {
        matches!(self.coeffs, CoeffMap::Rat(_))
    }

    /// The modular domain `(l, k)` if this element lives in `(Z/l^k)[G]`.
    pub fn mod_domain(&self) -> Option<(u64, u32)> {
        match &self.coeffs {
            CoeffMap::Rat(_) => None,
            CoeffMap::Mod { l, k, .. } => Some((*l, *k)),
        }
    }

    pub fn rat_coeff(&self, a: u64) -> Rat {
        let rep = match self.group.rep_of(a) {
            Ok(r) => r,
            Err(_) => return Rat::zero(),
        };
        match &self.coeffs {
            CoeffMap::Rat(map) => map.get(&rep).cloned().unwrap_or_else(Rat::zero),
            CoeffMap::Mod { .. } => Rat::zero(),
        }
    }

    pub fn mod_coeff(&self, a: u64) -> BigUint {
        let rep = match self.group.rep_of(a) {
            Ok(r) => r,
            Err(_) => return BigUint::zero(),
        };
        match &self.coeffs {
            CoeffMap::Rat(_) => BigUint::zero(),
            CoeffMap::Mod { map, .. } => map.get(&rep).cloned().unwrap_or_else(BigUint::zero),
        }
    }

    /// Group elements with nonzero coefficient, sorted.
    pub fn support(&self) -> Vec<u64> {
        match &self.coeffs {
            CoeffMap::Rat(map) => map.keys().copied().collect(),
            CoeffMap::Mod { map, .. } => map.keys().copied().collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.support().is_empty()
    }

    pub fn add_rat_term(&mut self, a: u64, c: Rat) -> Result<()> {
        let rep = self.group.rep_of(a)?;
        match &mut self.coeffs {
            CoeffMap::Rat(map) => {
                let entry = map.entry(rep).or_insert_with(Rat::zero);
                *entry += c;
                if entry.is_zero() {
                    map.remove(&rep);
                }
                Ok(())
            }
            CoeffMap::Mod { .. } => Err(Error::DomainMismatch(
                "rational term added to a modular element".into(),
            )),
        }
    }

    pub fn add_mod_term(&mut self, a: u64, c: BigUint) -> Result<()> {
        let rep = self.group.rep_of(a)?;
        match &mut self.coeffs {
            CoeffMap::Mod { l, k, map } => {
                let modulus = BigUint::from(*l).pow(*k);
                let entry = map.entry(rep).or_insert_with(BigUint::zero);
                *entry = (&*entry + c) % &modulus;
                if entry.is_zero() {
                    map.remove(&rep);
                }
                Ok(())
            }
            CoeffMap::Rat(_) => Err(Error::DomainMismatch(
                "modular term added to a rational element".into(),
            )),
        }
    }

    fn check_same_domain(&self, other: &Self) -> Result<()> {
        if self.group != other.group {
            return Err(Error::DomainMismatch("different groups".into()));
        }
        match (&self.coeffs, &other.coeffs) {
            (CoeffMap::Rat(_), CoeffMap::Rat(_)) => Ok(()),
            (CoeffMap::Mod { l: l1, k: k1, .. }, CoeffMap::Mod { l: l2, k: k2, .. })
                if l1 == l2 && k1 == k2 =>
            {
                Ok(())
            }
            _ => Err(Error::DomainMismatch("rational vs modular coefficients".into())),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_domain(other)?;
        let mut out = self.clone();
        match &other.coeffs {
            CoeffMap::Rat(map) => {
                for (a, c) in map {
                    out.add_rat_term(*a, c.clone())?;
                }
            }
            CoeffMap::Mod { map, .. } => {
                for (a, c) in map {
                    out.add_mod_term(*a, c.clone())?;
                }
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        match &mut out.coeffs {
            CoeffMap::Rat(map) => {
                for c in map.values_mut() {
                    *c = -c.clone();
                }
            }
            CoeffMap::Mod { l, k, map } => {
                let modulus = BigUint::from(*l).pow(*k);
                for c in map.values_mut() {
                    *c = (&modulus - &*c) % &modulus;
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale_rat(&self, s: &Rat) -> Result<Self> {
        match &self.coeffs {
            CoeffMap::Rat(map) => {
                let mut out = BTreeMap::new();
                if !s.is_zero() {
                    for (a, c) in map {
                        out.insert(*a, c * s);
                    }
                }
                Ok(GroupRingElement { group: self.group.clone(), coeffs: CoeffMap::Rat(out) })
            }
            CoeffMap::Mod { .. } => Err(Error::DomainMismatch(
                "rational scaling of a modular element".into(),
            )),
        }
    }

    /// Convolution product; both factors must share group and domain.
    pub fn grmul(&self, other: &Self) -> Result<Self> {
        self.check_same_domain(other)?;
        match (&self.coeffs, &other.coeffs) {
            (CoeffMap::Rat(xm), CoeffMap::Rat(ym)) => {
                let mut out = Self::zero(&self.group);
                for (a, ca) in xm {
                    for (b, cb) in ym {
                        out.add_rat_term(self.group.mul(*a, *b)?, ca * cb)?;
                    }
                }
                Ok(out)
            }
            (CoeffMap::Mod { l, k, map: xm }, CoeffMap::Mod { map: ym, .. }) => {
                let mut out = Self::zero_mod(&self.group, *l, *k)?;
                for (a, ca) in xm {
                    for (b, cb) in ym {
                        out.add_mod_term(self.group.mul(*a, *b)?, ca * cb)?;
                    }
                }
                Ok(out)
            }
            _ => unreachable!("domains checked above"),
        }
    }

    /// Galois restriction along `G(E/Q) -> G(F/Q)`, extended linearly.
    pub fn restrict(&self, target: &AbelianGaloisGroup) -> Result<Self> {
        self.group.check_tower(target)?;
        match &self.coeffs {
            CoeffMap::Rat(map) => {
                let mut out = Self::zero(target);
                for (a, c) in map {
                    out.add_rat_term(*a % target.modulus(), c.clone())?;
                }
                Ok(out)
            }
            CoeffMap::Mod { l, k, map } => {
                let mut out = Self::zero_mod(target, *l, *k)?;
                for (a, c) in map {
                    out.add_mod_term(*a % target.modulus(), c.clone())?;
                }
                Ok(out)
            }
        }
    }

    /// Reduce a rational element into `(Z/l^k)[G]`; fails on a coefficient
    /// with negative `l`-adic valuation.
    pub fn reduce_mod(&self, l: u64, k: u32) -> Result<Self> {
        match &self.coeffs {
            CoeffMap::Rat(map) => {
                let mut out = Self::zero_mod(&self.group, l, k)?;
                for (a, c) in map {
                    let r = PadicResidue::from_rat(c, l, k)?;
                    out.add_mod_term(*a, r.value().clone())?;
                }
                Ok(out)
            }
            CoeffMap::Mod { .. } => Err(Error::DomainMismatch(
                "reduce_mod expects rational coefficients".into(),
            )),
        }
    }

    /// The twist `t_n`: `sigma -> omega^(n)(sigma)^{-1} sigma`, an algebra
    /// automorphism of `(Z/w)[G]` for `w = w_n(F)_l`. The coefficient
    /// modulus is checked against `w_n`.
    pub fn twist_tn(&self, n: i64, l: u64) -> Result<Self> {
        let (dl, dk) = self.mod_domain().ok_or_else(|| {
            Error::DomainMismatch("twist_tn needs coefficients mod w_n(F)_l".into())
        })?;
        if dl != l {
            return Err(Error::DomainMismatch(format!(
                "coefficients live mod {dl}^{dk}, twist asked for l = {l}"
            )));
        }
        let n_abs = n.unsigned_abs();
        let w = self.group.w_n(n_abs.max(1), l)?;
        if n != 0 && w != l.pow(dk) {
            return Err(Error::invalid(format!(
                "coefficient modulus {}^{} differs from w_n(F)_l = {}",
                l, dk, w
            )));
        }
        let modulus = BigUint::from(l).pow(dk);
        let mut out = Self::zero_mod(&self.group, l, dk)?;
        let map = match &self.coeffs {
            CoeffMap::Mod { map, .. } => map,
            CoeffMap::Rat(_) => unreachable!(),
        };
        for (a, c) in map {
            let v = self.group.cyclotomic_char_power(*a, n_abs, l, dk)?;
            // for n >= 0 multiply by omega^(n)(sigma)^{-1}; for n < 0 the
            // inverse of omega^(-|n|) is omega^(|n|) itself
            let factor = if n >= 0 { arith::mod_inverse(&v, &modulus)? } else { v };
            out.add_mod_term(*a, c * factor % &modulus)?;
        }
        Ok(out)
    }

    /// `sum_a coeff(sigma_a) * omega(a)^i mod l^k` where `omega` is the
    /// Teichmüller character; requires the group modulus to be a power of
    /// `l` and `omega^i` to factor through the group.
    pub fn omega_char_value(&self, i: i64, l: u64, k: u32) -> Result<PadicResidue> {
        let m = self.group.modulus();
        let mut t = m;
        while t % l == 0 {
            t /= l;
        }
        if t != 1 {
            return Err(Error::CharacterNotDefined(format!(
                "group modulus {m} is not a power of {l}"
            )));
        }
        let exp = omega_exponent(i, l);
        let modulus = BigUint::from(l).pow(k);
        for &h in self.group.subgroup() {
            let wv = arith::pow_mod(&arith::teichmuller(h, l, k)?, &BigUint::from(exp), &modulus);
            if !wv.is_one() {
                return Err(Error::CharacterNotDefined(format!(
                    "omega^{i} is nontrivial on the kernel class {h}"
                )));
            }
        }
        let mut acc = PadicResidue::new(BigUint::zero(), l, k)?;
        let terms: Vec<(u64, PadicResidue)> = match &self.coeffs {
            CoeffMap::Rat(map) => map
                .iter()
                .map(|(a, c)| Ok((*a, PadicResidue::from_rat(c, l, k)?)))
                .collect::<Result<_>>()?,
            CoeffMap::Mod { l: dl, k: dk, map } => {
                if *dl != l || *dk != k {
                    return Err(Error::DomainMismatch(format!(
                        "coefficients mod {dl}^{dk}, evaluation mod {l}^{k}"
                    )));
                }
                map.iter()
                    .map(|(a, c)| Ok((*a, PadicResidue::new(c.clone(), l, k)?)))
                    .collect::<Result<_>>()?
            }
        };
        for (a, c) in terms {
            let w = arith::teichmuller(a, l, k)?;
            let wi = PadicResidue::new(w, l, k)?.pow(&BigUint::from(exp));
            acc = acc.add(&c.mul(&wi)?)?;
        }
        Ok(acc)
    }

    /// JSON form per the crate's interchange schema.
    pub fn to_json(&self) -> serde_json::Value {
        let (domain, coeffs): (String, BTreeMap<String, String>) = match &self.coeffs {
            CoeffMap::Rat(map) => (
                "rat".into(),
                map.iter().map(|(a, c)| (a.to_string(), c.to_string())).collect(),
            ),
            CoeffMap::Mod { l, k, map } => (
                format!("mod {l}^{k}"),
                map.iter().map(|(a, c)| (a.to_string(), c.to_string())).collect(),
            ),
        };
        serde_json::json!({
            "modulus": self.group.modulus(),
            "subgroup": self.group.subgroup(),
            "domain": domain,
            "coeffs": coeffs,
        })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let parsed: GroupRingJson = serde_json::from_value(value.clone())
            .map_err(|e| Error::invalid(format!("group-ring JSON: {e}")))?;
        let gens: Vec<u64> = parsed.subgroup.clone();
        let group = AbelianGaloisGroup::fixed_field_of(parsed.modulus, &gens)?;
        if parsed.domain == "rat" {
            let mut out = Self::zero(&group);
            for (a, c) in &parsed.coeffs {
                let a: u64 = a.parse().map_err(|_| Error::invalid("bad coset key"))?;
                let c: Rat = c.parse().map_err(|_| Error::invalid("bad rational"))?;
                out.add_rat_term(a, c)?;
            }
            Ok(out)
        } else if let Some(rest) = parsed.domain.strip_prefix("mod ") {
            let (ls, ks) = rest
                .split_once('^')
                .ok_or_else(|| Error::invalid("domain must be 'rat' or 'mod l^k'"))?;
            let l: u64 = ls.trim().parse().map_err(|_| Error::invalid("bad l"))?;
            let k: u32 = ks.trim().parse().map_err(|_| Error::invalid("bad k"))?;
            let mut out = Self::zero_mod(&group, l, k)?;
            for (a, c) in &parsed.coeffs {
                let a: u64 = a.parse().map_err(|_| Error::invalid("bad coset key"))?;
                let c: BigUint = c.parse().map_err(|_| Error::invalid("bad residue"))?;
                out.add_mod_term(a, c)?;
            }
            Ok(out)
        } else {
            Err(Error::invalid("domain must be 'rat' or 'mod l^k'"))
        }
    }

    /// Lowest common denominator of the rational coefficients.
    pub fn denominator_lcm(&self) -> Result<BigInt> {
        match &self.coeffs {
            CoeffMap::Rat(map) => {
                let mut d = BigInt::one();
                for c in map.values() {
                    d = d.lcm(c.denom());
                }
                Ok(d)
            }
            CoeffMap::Mod { .. } => Err(Error::DomainMismatch("modular element".into())),
        }
    }

    /// First coset whose coefficient is not `l`-integral, if any.
    pub fn non_integral_witness(&self, l: u64) -> Option<u64> {
        match &self.coeffs {
            CoeffMap::Rat(map) => map
                .iter()
                .find(|(_, c)| matches!(padic_val(c, l), Some(v) if v < 0))
                .map(|(a, _)| *a),
            CoeffMap::Mod { .. } => None,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct GroupRingJson {
    modulus: u64,
    subgroup: Vec<u64>,
    domain: String,
    coeffs: BTreeMap<String, String>,
}

fn omega_exponent(i: i64, l: u64) -> u64 {
    // omega has exact order l - 1
    let d = (l - 1) as i64;
    (((i % d) + d) % d) as u64
}

/// Convolution product as a free function (same contract as the method).
pub fn grmul(x: &GroupRingElement, y: &GroupRingElement) -> Result<GroupRingElement> {
    x.grmul(y)
}

/// The idempotent `e_{omega^i} = |G|^{-1} sum_g omega^i(g) g^{-1}` in
/// `(Z/l^k)[G]`; requires `l` coprime to `|G|` and `omega^i` to factor
/// through the group.
pub fn idempotent(
    i: i64,
    l: u64,
    k: u32,
    group: &AbelianGaloisGroup,
) -> Result<GroupRingElement> {
    if group.order() % l == 0 {
        return Err(Error::invalid(format!("l = {l} divides |G| = {}", group.order())));
    }
    let mut t = group.modulus();
    while t % l == 0 {
        t /= l;
    }
    if t != 1 {
        return Err(Error::CharacterNotDefined(format!(
            "omega-power idempotents need an l-power modulus, got {}",
            group.modulus()
        )));
    }
    let modulus = BigUint::from(l).pow(k);
    let inv_order = arith::mod_inverse(&BigUint::from(group.order()), &modulus)?;
    let exp = omega_exponent(i, l);
    // well-definedness on the quotient
    for &h in group.subgroup() {
        let wv = arith::pow_mod(&arith::teichmuller(h, l, k)?, &BigUint::from(exp), &modulus);
        if !wv.is_one() {
            return Err(Error::CharacterNotDefined(format!(
                "omega^{i} is nontrivial on the kernel class {h}"
            )));
        }
    }
    let mut out = GroupRingElement::zero_mod(group, l, k)?;
    for &g in group.elements() {
        let wv = arith::pow_mod(&arith::teichmuller(g, l, k)?, &BigUint::from(exp), &modulus);
        out.add_mod_term(group.inv(g)?, &inv_order * wv % &modulus)?;
    }
    Ok(out)
}

/// An exact character of the group with values in `mu_d`, stored as the
/// exponent of a fixed primitive `d`-th root of unity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    group: AbelianGaloisGroup,
    order: u64,
    exps: BTreeMap<u64, u64>,
}

impl Character {
    pub fn trivial(group: &AbelianGaloisGroup) -> Self {
        let exps = group.elements().iter().map(|&g| (g, 0)).collect();
        Character { group: group.clone(), order: 1, exps }
    }

    /// Build a character from exponent data `sigma_a -> t` (meaning
    /// `chi(sigma_a) = zeta_d^t`), with the homomorphism law checked.
    pub fn from_exponents(
        group: &AbelianGaloisGroup,
        order: u64,
        exps: impl IntoIterator<Item = (u64, u64)>,
    ) -> Result<Self> {
        if order == 0 {
            return Err(Error::invalid("character order must be positive"));
        }
        let mut table = BTreeMap::new();
        for (a, t) in exps {
            table.insert(group.rep_of(a)?, t % order);
        }
        for &g in group.elements() {
            if !table.contains_key(&g) {
                return Err(Error::CharacterNotDefined(format!("no value at sigma_{g}")));
            }
        }
        for &a in group.elements() {
            for &b in group.elements() {
                let ab = group.mul(a, b)?;
                if (table[&a] + table[&b]) % order != table[&ab] {
                    return Err(Error::CharacterNotDefined(format!(
                        "values at {a}, {b}, {ab} violate multiplicativity"
                    )));
                }
            }
        }
        Ok(Character { group: group.clone(), order, exps: table })
    }

    /// The character `omega^i` on a group of l-power modulus, via discrete
    /// logarithms against the least primitive root.
    pub fn omega_power(group: &AbelianGaloisGroup, i: i64, l: u64) -> Result<Self> {
        let m = group.modulus();
        let mut t = m;
        while t % l == 0 {
            t /= l;
        }
        if t != 1 {
            return Err(Error::CharacterNotDefined(format!(
                "group modulus {m} is not a power of {l}"
            )));
        }
        let d = l - 1;
        let exp = omega_exponent(i, l);
        // omega(a) depends only on a mod l; use a dlog table mod l
        let g = least_primitive_root(l)?;
        let mut dlog = BTreeMap::new();
        let mut x = 1u64;
        for e in 0..l - 1 {
            dlog.insert(x, e);
            x = x * g % l;
        }
        let mut exps = BTreeMap::new();
        for &a in group.elements() {
            exps.insert(a, dlog[&(a % l)] * exp % d);
        }
        Self::from_exponents(group, d, exps)
    }

    pub fn group(&self) -> &AbelianGaloisGroup {
        &self.group
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Exponent `t` with `chi(sigma_a) = zeta_d^t`.
    pub fn exponent_at(&self, a: u64) -> Result<u64> {
        Ok(self.exps[&self.group.rep_of(a)?])
    }

    pub fn is_trivial(&self) -> bool {
        self.exps.values().all(|&t| t == 0)
    }

    /// Even means trivial on complex conjugation.
    pub fn is_even(&self) -> bool {
        self.exps[&self.group.conjugation()] == 0
    }

    pub fn is_trivial_on(&self, reps: &[u64]) -> Result<bool> {
        for &a in reps {
            if self.exponent_at(a)? != 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Least primitive root modulo an odd prime.
pub fn least_primitive_root(l: u64) -> Result<u64> {
    if l < 3 || !arith::is_prime(l) {
        return Err(Error::invalid("odd prime expected"));
    }
    let factors = arith::prime_support(l - 1);
    let lb = BigUint::from(l);
    'outer: for g in 2..l {
        for &q in &factors {
            if arith::pow_mod(&BigUint::from(g), &BigUint::from((l - 1) / q), &lb).is_one() {
                continue 'outer;
            }
        }
        return Ok(g);
    }
    Err(Error::invalid(format!("{l} has no primitive root")))
}

// ---------------------------------------------------------------------------
// Integer linear algebra: Smith normal form and the annihilator decomposition
// ---------------------------------------------------------------------------

type Mat = Vec<Vec<BigInt>>;

fn identity_mat(n: usize) -> Mat {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

/// Diagonalize `A` over `Z`: returns `(U, D, V)` with `U * A * V = D`
/// diagonal (no divisibility chain; sufficient for solving linear systems).
pub fn smith_diagonalize(a: &Mat) -> (Mat, Mat, Mat) {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut d = a.clone();
    let mut u = identity_mat(rows);
    let mut v = identity_mat(cols);
    let mut t = 0usize;
    while t < rows.min(cols) {
        // find the nonzero entry of least absolute value in the submatrix
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !d[i][j].is_zero() {
                    let better = match pivot {
                        None => true,
                        Some((pi, pj)) => d[i][j].abs() < d[pi][pj].abs(),
                    };
                    if better {
                        pivot = Some((i, j));
                    }
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        d.swap(t, pi);
        u.swap(t, pi);
        for row in d.iter_mut() {
            row.swap(t, pj);
        }
        for row in v.iter_mut() {
            row.swap(t, pj);
        }
        // clear column t and row t by division with remainder; repeat until clean
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if d[i][t].is_zero() {
                    continue;
                }
                let q = div_round(&d[i][t], &d[t][t]);
                if !q.is_zero() {
                    for j in 0..cols {
                        let sub = &q * &d[t][j];
                        d[i][j] -= sub;
                    }
                    for j in 0..rows {
                        let sub = &q * &u[t][j];
                        u[i][j] -= sub;
                    }
                }
                if !d[i][t].is_zero() {
                    // remainder smaller than pivot: swap it up and restart
                    d.swap(t, i);
                    u.swap(t, i);
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if d[t][j].is_zero() {
                    continue;
                }
                let q = div_round(&d[t][j], &d[t][t]);
                if !q.is_zero() {
                    for i in 0..rows {
                        let sub = &q * &d[i][t];
                        d[i][j] -= sub;
                    }
                    for i in 0..cols {
                        let sub = &q * &v[i][t];
                        v[i][j] -= sub;
                    }
                }
                if !d[t][j].is_zero() {
                    for row in d.iter_mut() {
                        row.swap(t, j);
                    }
                    for row in v.iter_mut() {
                        row.swap(t, j);
                    }
                    dirty = true;
                }
            }
            if !dirty {
                break;
            }
        }
        t += 1;
    }
    (u, d, v)
}

fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    // nearest-integer division keeps remainders small
    let two = BigInt::from(2);
    let (q, r) = a.div_mod_floor(b);
    if &(r * &two) > &b.abs() {
        q + BigInt::one()
    } else {
        q
    }
}

fn mat_vec(a: &Mat, x: &[BigInt]) -> Vec<BigInt> {
    a.iter()
        .map(|row| row.iter().zip(x).map(|(r, xi)| r * xi).sum())
        .collect()
}

/// Solve `A x = t` over `Z`. Returns a particular solution and a basis of
/// the kernel lattice, or `None` when infeasible.
pub fn solve_integer_system(a: &Mat, t: &[BigInt]) -> Option<(Vec<BigInt>, Vec<Vec<BigInt>>)> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let (u, d, v) = smith_diagonalize(a);
    let ut = mat_vec(&u, t);
    let mut y = vec![BigInt::zero(); cols];
    let mut free = Vec::new();
    for i in 0..rows.max(cols) {
        let dii = if i < rows && i < cols { d[i][i].clone() } else { BigInt::zero() };
        if dii.is_zero() {
            if i < rows && !ut[i].is_zero() {
                return None;
            }
            if i < cols {
                free.push(i);
            }
        } else {
            let (q, r) = ut[i].div_mod_floor(&dii);
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        }
    }
    let x = mat_vec_cols(&v, &y);
    let kernel = free
        .into_iter()
        .map(|j| (0..cols).map(|i| v[i][j].clone()).collect())
        .collect();
    Some((x, kernel))
}

fn mat_vec_cols(v: &Mat, y: &[BigInt]) -> Vec<BigInt> {
    // x = V y
    (0..v.len())
        .map(|i| v[i].iter().zip(y).map(|(vij, yj)| vij * yj).sum())
        .collect()
}

fn one_norm(x: &[BigInt]) -> BigInt {
    x.iter().map(|c| c.abs()).sum()
}

/// Express `1 - Nb * sigma_b^{-1}` as a `Z[G]`-combination of the factors
/// `1 - Np_i * sigma_{p_i}^{-1}`.
///
/// Every datum must annihilate the roots of unity of the field (order
/// `w_field`); the system is solved by Smith normal form and, among integer
/// solutions, a deterministic descent over the kernel lattice picks one of
/// minimal coefficient 1-norm. The output re-substitutes exactly.
pub fn annihilator_decomposition(
    group: &AbelianGaloisGroup,
    b_norm: u64,
    sigma_b: u64,
    candidates: &[(u64, u64)],
    w_field: u64,
) -> Result<Vec<GroupRingElement>> {
    check_annihilates_mu(group, b_norm, sigma_b, w_field)?;
    for &(np, sp) in candidates {
        check_annihilates_mu(group, np, sp, w_field)?;
    }
    let n = group.order() as usize;
    let elems = group.elements().to_vec();
    let index: BTreeMap<u64, usize> = elems.iter().enumerate().map(|(i, &g)| (g, i)).collect();
    // column block c, coordinate g: the factor element times sigma_g
    let factor = |np: u64, sp: u64| -> Result<GroupRingElement> {
        let one = GroupRingElement::one(group);
        let t = GroupRingElement::sigma(group, group.inv(sp)?)?
            .scale_rat(&Rat::from_integer(BigInt::from(np)))?;
        one.sub(&t)
    };
    let mut a: Mat = vec![vec![BigInt::zero(); n * candidates.len()]; n];
    for (c, &(np, sp)) in candidates.iter().enumerate() {
        let f = factor(np, sp)?;
        for (gi, &g) in elems.iter().enumerate() {
            let shifted = f.grmul(&GroupRingElement::sigma(group, g)?)?;
            for &s in &shifted.support() {
                let coeff = shifted.rat_coeff(s);
                debug_assert!(coeff.is_integer());
                a[index[&s]][c * n + gi] = coeff.to_integer();
            }
        }
    }
    let target_el = factor(b_norm, sigma_b)?;
    let mut t = vec![BigInt::zero(); n];
    for &s in &target_el.support() {
        t[index[&s]] = target_el.rat_coeff(s).to_integer();
    }
    let (mut x, kernel) = solve_integer_system(&a, &t).ok_or(Error::Infeasible)?;
    // deterministic local 1-norm descent over the kernel lattice
    loop {
        let mut improved = false;
        for kv in &kernel {
            for sign in [1i64, -1] {
                loop {
                    let cand: Vec<BigInt> = x
                        .iter()
                        .zip(kv)
                        .map(|(xi, ki)| xi + BigInt::from(sign) * ki)
                        .collect();
                    if one_norm(&cand) < one_norm(&x) {
                        x = cand;
                        improved = true;
                    } else {
                        break;
                    }
                }
            }
        }
        if !improved {
            break;
        }
    }
    // package per-candidate group-ring elements and re-substitute
    let mut out = Vec::with_capacity(candidates.len());
    let mut resub = GroupRingElement::zero(group);
    for (c, &(np, sp)) in candidates.iter().enumerate() {
        let mut xi = GroupRingElement::zero(group);
        for (gi, &g) in elems.iter().enumerate() {
            let coeff = x[c * n + gi].clone();
            if !coeff.is_zero() {
                xi.add_rat_term(g, Rat::from_integer(coeff))?;
            }
        }
        resub = resub.add(&xi.grmul(&factor(np, sp)?)?)?;
        out.push(xi);
    }
    if resub != target_el {
        return Err(Error::CrossCheckFailed(
            "annihilator decomposition did not re-substitute".into(),
        ));
    }
    Ok(out)
}

fn check_annihilates_mu(
    group: &AbelianGaloisGroup,
    norm: u64,
    sigma: u64,
    w_field: u64,
) -> Result<()> {
    // sigma acts on mu (order w_field) by the unique lift of its class
    // coprime to w_field; require 1 - norm * lift^{-1} = 0 on mu
    let m = group.modulus();
    if w_field % m != 0 {
        return Err(Error::invalid(format!(
            "w_field = {w_field} is not a multiple of the modulus {m}"
        )));
    }
    let rep = group.rep_of(sigma)?;
    let mut lifts: Vec<u64> = (0..w_field / m)
        .map(|t| (rep + t * m) % w_field)
        .filter(|&a| gcd64(a, w_field) == 1)
        .collect();
    lifts.sort_unstable();
    lifts.dedup();
    if lifts.len() != 1 {
        return Err(Error::invalid(format!(
            "action of sigma_{rep} on mu of order {w_field} is not determined"
        )));
    }
    let a_inv = arith::inv_mod_u64(lifts[0], w_field)?;
    let prod = (norm as u128 * a_inv as u128 % w_field as u128) as u64;
    if prod % w_field != 1 % w_field {
        return Err(Error::invalid(format!(
            "1 - {norm} * sigma_{rep}^(-1) does not annihilate mu of order {w_field}"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat_int;

    #[test]
    fn group_basics() {
        let g = AbelianGaloisGroup::full(5).unwrap();
        assert_eq!(g.elements(), &[1, 2, 3, 4]);
        assert_eq!(g.conjugation(), 4);
        assert!(g.is_cm());
        // sigma_2 * sigma_3 = sigma_1
        assert_eq!(g.mul(2, 3).unwrap(), 1);
        // Q(sqrt 5): quotient by {1, 4}
        let q = AbelianGaloisGroup::fixed_field_of(5, &[4]).unwrap();
        assert_eq!(q.elements(), &[1, 2]);
        assert!(!q.is_cm());
    }

    #[test]
    fn grmul_examples() {
        let g = AbelianGaloisGroup::full(5).unwrap();
        let s2 = GroupRingElement::sigma(&g, 2).unwrap();
        let s3 = GroupRingElement::sigma(&g, 3).unwrap();
        assert_eq!(s2.grmul(&s3).unwrap(), GroupRingElement::one(&g));
        // (1 - sigma_4) * sigma_3 = sigma_3 - sigma_2
        let x = GroupRingElement::one(&g)
            .sub(&GroupRingElement::sigma(&g, 4).unwrap())
            .unwrap();
        let y = x.grmul(&s3).unwrap();
        assert_eq!(y.rat_coeff(3), rat_int(1));
        assert_eq!(y.rat_coeff(2), rat_int(-1));
        assert_eq!(y.support().len(), 2);
        // identity law
        assert_eq!(x.grmul(&GroupRingElement::one(&g)).unwrap(), x);
    }

    #[test]
    fn restrict_tower() {
        let e = AbelianGaloisGroup::full(35).unwrap();
        let f = AbelianGaloisGroup::full(5).unwrap();
        let s8 = GroupRingElement::sigma(&e, 8).unwrap();
        let r = s8.restrict(&f).unwrap();
        assert_eq!(r, GroupRingElement::sigma(&f, 3).unwrap());
        let bad = AbelianGaloisGroup::full(11).unwrap();
        assert!(matches!(s8.restrict(&bad), Err(Error::IncompatibleTower(_))));
    }

    #[test]
    fn w_n_values() {
        let g5 = AbelianGaloisGroup::full(5).unwrap();
        assert_eq!(g5.w_n(1, 5).unwrap(), 5);
        assert_eq!(g5.w_n(1, 2).unwrap(), 2);
        let g25 = AbelianGaloisGroup::full(25).unwrap();
        assert_eq!(g25.w_n(1, 5).unwrap(), 25);
    }

    #[test]
    fn twist_example() {
        let g = AbelianGaloisGroup::full(5).unwrap();
        let s2 = GroupRingElement::sigma(&g, 2).unwrap().reduce_mod(5, 1).unwrap();
        let t = s2.twist_tn(1, 5).unwrap();
        // omega^(1)(sigma_2) = 2 mod 5, inverse 3
        assert_eq!(t.mod_coeff(2), BigUint::from(3u32));
        // t_n then t_{-n} restores the element
        assert_eq!(t.twist_tn(-1, 5).unwrap(), s2);
    }

    #[test]
    fn omega_char_value_example() {
        let g = AbelianGaloisGroup::full(5).unwrap();
        let s2 = GroupRingElement::sigma(&g, 2).unwrap();
        let v = s2.omega_char_value(1, 5, 2).unwrap();
        assert_eq!(v.value(), &BigUint::from(7u32));
        let id = GroupRingElement::one(&g);
        assert!(id.omega_char_value(3, 5, 2).unwrap().value().is_one());
    }

    #[test]
    fn idempotents_are_orthogonal_and_complete() {
        let g = AbelianGaloisGroup::full(5).unwrap();
        let l = 5u64;
        let k = 2u32;
        let mut total = GroupRingElement::zero_mod(&g, l, k).unwrap();
        for i in 0..4i64 {
            let e = idempotent(i, l, k, &g).unwrap();
            assert_eq!(e.grmul(&e).unwrap(), e, "e^2 = e at i = {i}");
            total = total.add(&e).unwrap();
            for j in 0..i {
                let ej = idempotent(j, l, k, &g).unwrap();
                assert!(e.grmul(&ej).unwrap().is_zero(), "orthogonality {i},{j}");
            }
        }
        assert_eq!(total, GroupRingElement::one(&g).reduce_mod(l, k).unwrap());
    }

    #[test]
    fn character_parity() {
        let g = AbelianGaloisGroup::full(5).unwrap();
        let triv = Character::trivial(&g);
        assert!(triv.is_trivial() && triv.is_even());
        let chi = Character::omega_power(&g, 1, 5).unwrap();
        assert!(!chi.is_even());
        let chi2 = Character::omega_power(&g, 2, 5).unwrap();
        assert!(chi2.is_even() && !chi2.is_trivial());
    }

    #[test]
    fn decomposition_subgroups() {
        let g = AbelianGaloisGroup::full(5).unwrap();
        // 2 generates (Z/5)^*: full decomposition at 2
        assert_eq!(g.decomposition_subgroup(2).unwrap(), vec![1, 2, 3, 4]);
        // 11 = 1 mod 5 splits completely
        assert_eq!(g.decomposition_subgroup(11).unwrap(), vec![1]);
        // ramified prime 5: full inertia
        assert_eq!(g.decomposition_subgroup(5).unwrap(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn annihilator_decomposition_trivial_and_solved() {
        let g = AbelianGaloisGroup::full(5).unwrap();
        // target datum among the candidates: must re-substitute
        let xs = annihilator_decomposition(&g, 11, 1, &[(11, 1)], 10).unwrap();
        assert_eq!(xs.len(), 1);
        // two candidate data that both annihilate mu_10: norms must match
        // the mu action
        let xs2 = annihilator_decomposition(&g, 11, 11, &[(31, 31), (11, 11)], 10).unwrap();
        assert_eq!(xs2.len(), 2);
    }

    #[test]
    fn json_roundtrip() {
        let g = AbelianGaloisGroup::full(5).unwrap();
        let x = GroupRingElement::from_rat_coeffs(
            &g,
            [(3, rat_int(1)), (2, crate::arith::rat(-1, 2))],
        )
        .unwrap();
        let j = x.to_json();
        assert_eq!(j["domain"], "rat");
        assert_eq!(GroupRingElement::from_json(&j).unwrap(), x);
        let y = GroupRingElement::sigma(&g, 2).unwrap().reduce_mod(5, 2).unwrap();
        let jy = y.to_json();
        assert_eq!(jy["domain"], "mod 5^2");
        assert_eq!(GroupRingElement::from_json(&jy).unwrap(), y);
    }
}
