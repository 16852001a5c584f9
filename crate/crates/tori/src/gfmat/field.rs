//! GF(p^k) for q = p^k <= 2^16, with log/exp tables for fast arithmetic.
//!
//! Elements are canonical integers below q: the polynomial
//! `c_0 + c_1 x + ... + c_{k-1} x^{k-1}` over GF(p) is encoded in base p as
//! `c_0 + c_1 p + ...`. The modulus is the lexicographically smallest monic
//! irreducible of degree k, found deterministically at construction, so a
//! given q always yields the same encoding and the same primitive element.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::weylclass::prime_power;
use crate::{Error, Result};

/// A field element, valid only together with its `FieldSpec`.
pub type FieldElt = u32;

const MAX_Q: u64 = 1 << 16;

/// An explicit finite field GF(p^k).
pub struct FieldSpec {
    pub p: u64,
    pub k: u32,
    pub q: u64,
    /// Coefficients of the monic modulus, degree k, constant term first
    /// (the leading 1 included).
    pub modulus: Vec<u64>,
    /// exp[i] = g^i for the fixed primitive element g, i in 0..q-1.
    exp: Vec<FieldElt>,
    /// log[e] for nonzero e: the i with g^i = e.
    log: Vec<u32>,
    primitive: FieldElt,
}

impl std::fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GF({})", self.q)
    }
}

/// Builds (or fetches from the process-wide cache) the field with q elements.
pub fn field(q: u64) -> Result<Arc<FieldSpec>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<FieldSpec>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(f) = cache.lock().unwrap().get(&q) {
        return Ok(f.clone());
    }
    let spec = Arc::new(FieldSpec::build(q)?);
    cache.lock().unwrap().insert(q, spec.clone());
    Ok(spec)
}

impl FieldSpec {
    fn build(q: u64) -> Result<FieldSpec> {
        let (p, k) =
            prime_power(q).ok_or_else(|| Error::parameter(format!("q = {q} is not a prime power")))?;
        if q > MAX_Q {
            return Err(Error::budget(format!("field size {q} exceeds 2^16")));
        }
        let modulus = lowest_irreducible(p, k);
        let mut spec = FieldSpec {
            p,
            k,
            q,
            modulus,
            exp: Vec::new(),
            log: vec![0; q as usize],
            primitive: 0,
        };
        // Find the smallest generator of the multiplicative group and build
        // the log/exp tables from it.
        let order = q - 1;
        let factors = distinct_prime_factors(order);
        let mut gen = 0;
        for cand in 2..q {
            if spec.raw_order_check(cand as FieldElt, order, &factors) {
                gen = cand as FieldElt;
                break;
            }
        }
        if gen == 0 {
            // q = 2: the unit element generates the trivial group.
            gen = 1;
        }
        spec.primitive = gen;
        spec.exp = Vec::with_capacity(order as usize);
        let mut acc: FieldElt = 1;
        for i in 0..order {
            spec.exp.push(acc);
            spec.log[acc as usize] = i as u32;
            acc = spec.raw_mul(acc, gen);
        }
        debug_assert_eq!(acc, 1, "primitive element order mismatch");
        Ok(spec)
    }

    /// Polynomial multiplication mod (p, modulus), no tables.
    fn raw_mul(&self, a: FieldElt, b: FieldElt) -> FieldElt {
        let p = self.p;
        let k = self.k as usize;
        let to_digits = |mut v: u64| {
            let mut d = vec![0u64; k];
            for slot in d.iter_mut() {
                *slot = v % p;
                v /= p;
            }
            d
        };
        let da = to_digits(a as u64);
        let db = to_digits(b as u64);
        let mut prod = vec![0u64; 2 * k];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        // Reduce by the monic modulus.
        for i in (k..2 * k).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for j in 0..k {
                let m = self.modulus[j];
                if m != 0 {
                    let idx = i - k + j;
                    prod[idx] = (prod[idx] + p - (c * m) % p) % p;
                }
            }
        }
        let mut out = 0u64;
        for i in (0..k).rev() {
            out = out * p + prod[i];
        }
        out as FieldElt
    }

    fn raw_pow(&self, mut base: FieldElt, mut e: u64) -> FieldElt {
        let mut acc: FieldElt = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.raw_mul(acc, base);
            }
            base = self.raw_mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn raw_order_check(&self, x: FieldElt, order: u64, factors: &[u64]) -> bool {
        if x == 0 || self.raw_pow(x, order) != 1 {
            return false;
        }
        factors.iter().all(|&f| self.raw_pow(x, order / f) != 1)
    }

    pub fn zero(&self) -> FieldElt {
        0
    }

    pub fn one(&self) -> FieldElt {
        1
    }

    /// The cached primitive element (multiplicative order q-1).
    pub fn primitive_element(&self) -> FieldElt {
        self.primitive
    }

    pub fn add(&self, a: FieldElt, b: FieldElt) -> FieldElt {
        if self.p == 2 {
            return a ^ b;
        }
        let p = self.p;
        let (mut a, mut b) = (a as u64, b as u64);
        let mut out = 0u64;
        let mut mult = 1u64;
        for _ in 0..self.k {
            out += ((a % p + b % p) % p) * mult;
            a /= p;
            b /= p;
            mult *= p;
        }
        out as FieldElt
    }

    pub fn neg(&self, a: FieldElt) -> FieldElt {
        if self.p == 2 {
            return a;
        }
        let p = self.p;
        let mut a = a as u64;
        let mut out = 0u64;
        let mut mult = 1u64;
        for _ in 0..self.k {
            out += ((p - a % p) % p) * mult;
            a /= p;
            mult *= p;
        }
        out as FieldElt
    }

    pub fn sub(&self, a: FieldElt, b: FieldElt) -> FieldElt {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElt, b: FieldElt) -> FieldElt {
        if a == 0 || b == 0 {
            return 0;
        }
        let order = self.q - 1;
        let i = (self.log[a as usize] as u64 + self.log[b as usize] as u64) % order;
        self.exp[i as usize]
    }

    pub fn inv(&self, a: FieldElt) -> Result<FieldElt> {
        if a == 0 {
            return Err(Error::parameter("division by zero field element"));
        }
        let order = self.q - 1;
        let i = (order - self.log[a as usize] as u64) % order;
        Ok(self.exp[i as usize])
    }

    pub fn pow(&self, a: FieldElt, e: i64) -> FieldElt {
        if a == 0 {
            assert!(e > 0, "0 to a non-positive power");
            return 0;
        }
        let order = (self.q - 1) as i64;
        let i = (self.log[a as usize] as i64 * (e % order)).rem_euclid(order);
        self.exp[i as usize]
    }

    /// Embeds a prime-field scalar c in 0..p.
    pub fn from_prime_scalar(&self, c: u64) -> FieldElt {
        (c % self.p) as FieldElt
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Lexicographically smallest monic irreducible of degree k over GF(p),
/// by the coefficient vector (c_0, ..., c_{k-1}) read as a base-p integer.
fn lowest_irreducible(p: u64, k: u32) -> Vec<u64> {
    if k == 1 {
        // x - 0 would be reducible-free but we want x + c irreducible: any
        // monic linear poly works; take x (modulus digits [0]).
        // Arithmetic mod a linear modulus is plain mod-p arithmetic.
        return vec![0, 1];
    }
    let kk = k as usize;
    let count = p.pow(k);
    for tail in 0..count {
        let mut coeffs = vec![0u64; kk + 1];
        let mut v = tail;
        for c in coeffs.iter_mut().take(kk) {
            *c = v % p;
            v /= p;
        }
        coeffs[kk] = 1;
        if is_irreducible(&coeffs, p) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials of every degree exist")
}

/// Irreducibility over GF(p) via the standard criterion:
/// x^(p^k) == x mod f, and gcd(x^(p^(k/r)) - x, f) = 1 for prime r | k.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let k = (f.len() - 1) as u32;
    let xq = |e: u32| -> Vec<u64> {
        // x^(p^e) mod f by repeated p-th powering.
        let mut cur = vec![0u64, 1]; // x
        for _ in 0..e {
            cur = poly_pow_mod(&cur, p, f, p);
        }
        cur
    };
    // x^(p^k) == x?
    let mut lhs = xq(k);
    poly_sub_x(&mut lhs, p);
    if !poly_is_zero(&lhs) {
        return false;
    }
    for r in distinct_prime_factors(k as u64) {
        let mut h = xq(k / r as u32);
        poly_sub_x(&mut h, p);
        let g = poly_gcd(&h, f, p);
        if poly_degree(&g) != 0 {
            return false;
        }
    }
    true
}

fn poly_degree(f: &[u64]) -> usize {
    f.iter().rposition(|&c| c != 0).unwrap_or(0)
}

fn poly_is_zero(f: &[u64]) -> bool {
    f.iter().all(|&c| c == 0)
}

fn poly_sub_x(f: &mut Vec<u64>, p: u64) {
    if f.len() < 2 {
        f.resize(2, 0);
    }
    f[1] = (f[1] + p - 1) % p;
}

fn poly_mul_mod(a: &[u64], b: &[u64], modulus: &[u64], p: u64) -> Vec<u64> {
    let mut prod = vec![0u64; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    poly_rem(&mut prod, modulus, p);
    prod
}

fn poly_rem(f: &mut Vec<u64>, modulus: &[u64], p: u64) {
    let dm = poly_degree(modulus);
    loop {
        let df = poly_degree(f);
        if df < dm || poly_is_zero(f) {
            break;
        }
        let lead = f[df];
        // modulus is monic.
        for (j, &m) in modulus.iter().enumerate().take(dm + 1) {
            let idx = df - dm + j;
            f[idx] = (f[idx] + p - (lead * m) % p) % p;
        }
    }
    f.truncate(dm.max(1));
    if f.is_empty() {
        f.push(0);
    }
}

fn poly_pow_mod(base: &[u64], e: u64, modulus: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = base.to_vec();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mul_mod(&acc, &b, modulus, p);
        }
        b = poly_mul_mod(&b, &b, modulus, p);
        e >>= 1;
    }
    acc
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    while !poly_is_zero(&b) {
        // a mod b with b made monic first.
        let db = poly_degree(&b);
        let lead_inv = mod_inv(b[db], p);
        let monic: Vec<u64> = b.iter().map(|&c| c * lead_inv % p).collect();
        poly_rem(&mut a, &monic, p);
        std::mem::swap(&mut a, &mut b);
    }
    a
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // Fermat.
    let mut acc = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

/// An element of exact multiplicative order d, namely g^((q-1)/d) for the
/// fixed primitive g. Errors unless d divides q-1.
pub fn element_of_order(f: &FieldSpec, d: u64) -> Result<FieldElt> {
    if d == 0 || (f.q - 1) % d != 0 {
        return Err(Error::parameter(format!(
            "no element of order {d} in GF({})",
            f.q
        )));
    }
    let e = (f.q - 1) / d;
    let x = f.pow(f.primitive_element(), e as i64);
    debug_assert_eq!(multiplicative_order(f, x), d);
    Ok(x)
}

/// Order of a nonzero element by direct powering of the log.
pub fn multiplicative_order(f: &FieldSpec, x: FieldElt) -> u64 {
    assert!(x != 0);
    if x == 1 {
        return 1;
    }
    let order = f.q - 1;
    let l = f.log[x as usize] as u64;
    order / gcd(order, l)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf2_addition() {
        let f = field(2).unwrap();
        assert_eq!(f.add(1, 1), 0);
        assert_eq!(f.mul(1, 1), 1);
    }

    #[test]
    fn gf4_primitive_satisfies_its_modulus() {
        let f = field(4).unwrap();
        // Modulus x^2 + x + 1: the primitive element w (encoded 2) satisfies
        // w^2 = w + 1 (encoded 3).
        assert_eq!(f.modulus, vec![1, 1, 1]);
        let w = f.primitive_element();
        assert_eq!(w, 2);
        assert_eq!(f.mul(w, w), f.add(w, 1));
    }

    #[test]
    fn gf9_primitive_has_order_8() {
        let f = field(9).unwrap();
        let g = f.primitive_element();
        assert_eq!(multiplicative_order(&f, g), 8);
        let mut seen = std::collections::HashSet::new();
        let mut x = 1;
        for _ in 0..8 {
            seen.insert(x);
            x = f.mul(x, g);
        }
        assert_eq!(seen.len(), 8);
        assert_eq!(x, 1);
    }

    #[test]
    fn elements_of_requested_order() {
        let f = field(7).unwrap();
        let x = element_of_order(&f, 3).unwrap();
        assert_eq!(multiplicative_order(&f, x), 3);
        assert_eq!(element_of_order(&f, 1).unwrap(), 1);
        let f4 = field(4).unwrap();
        assert_eq!(element_of_order(&f4, 3).unwrap(), f4.primitive_element());
        assert!(element_of_order(&f, 5).is_err());
    }

    #[test]
    fn large_binary_and_ternary_fields_build() {
        for q in [1 << 16, 3u64.pow(10), 5u64.pow(6), 25, 27, 8, 16] {
            let f = field(q).unwrap();
            assert_eq!(f.q, q);
            let g = f.primitive_element();
            assert_eq!(multiplicative_order(&f, g), q - 1);
        }
        assert!(field(1 << 17).is_err());
        assert!(field(12).is_err());
    }

    #[test]
    fn field_axioms_spot_checks() {
        for q in [4, 5, 8, 9, 27] {
            let f = field(q).unwrap();
            for a in 0..q as FieldElt {
                for b in 0..q as FieldElt {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.add(a, f.neg(a)), 0);
                    if b != 0 {
                        let binv = f.inv(b).unwrap();
                        assert_eq!(f.mul(f.mul(a, b), binv), a);
                    }
                    for c in 0..q as FieldElt {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    }
                }
            }
        }
    }
}
