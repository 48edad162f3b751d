//! Arithmetic in finite fields `F_{p^h}`.
//!
//! Elements are stored as integers `Σ c_i p^i`, where `c_0, …, c_{h-1}` are the
//! coefficients of the polynomial representative modulo the field's modulus.
//! With this encoding the prime subfield `F_p` is exactly `0..p` and
//! element ordering is the lexicographic order on reversed coefficient lists.
//!
//! The modulus is the Conway polynomial for `q <= 2^16` and the least primitive
//! polynomial (in the same ordering) beyond that, so `x` always generates the
//! multiplicative group when `h > 1` and coordinates are reproducible.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 20;
const LOG_TABLE_LIMIT: u32 = 1 << 16;
const FULL_TABLE_LIMIT: u32 = 256;

/// An element of some [`Field`], encoded as `Σ c_i p^i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Elem(pub u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn value(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone)]
enum Tables {
    /// Complete addition and multiplication tables, `q <= 256`.
    Full {
        add: Vec<u32>,
        mul: Vec<u32>,
        exp: Vec<u32>,
        log: Vec<u32>,
    },
    /// Exponent/logarithm tables with respect to the primitive element.
    Log { exp: Vec<u32>, log: Vec<u32> },
    /// Polynomial arithmetic only.
    None,
}

/// The finite field `F_{p^h}` with its arithmetic tables.
///
/// Immutable after construction.
#[derive(Clone)]
pub struct Field {
    p: u32,
    h: u32,
    q: u32,
    modulus: Vec<u32>,
    primitive: Elem,
    tables: Tables,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.p)
            .field("h", &self.h)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.h == other.h && self.modulus == other.modulus
    }
}

impl Eq for Field {}

impl Field {
    /// Builds `F_{p^h}`. Fails for non-prime `p`, `h = 0`, or `p^h > 2^20`.
    pub fn new(p: u32, h: u32) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if h == 0 {
            return Err(Error::ZeroDegree);
        }
        let q = (p as u64)
            .checked_pow(h)
            .filter(|&q| q <= MAX_ORDER)
            .ok_or(Error::FieldTooLarge { p, h })? as u32;

        let (modulus, primitive) = if h == 1 {
            (vec![0, 1], Elem(least_primitive_root(p)))
        } else if q <= LOG_TABLE_LIMIT {
            (conway_polynomial(p, h), Elem(p))
        } else {
            (least_primitive_polynomial(p, h), Elem(p))
        };

        let mut field = Field {
            p,
            h,
            q,
            modulus,
            primitive,
            tables: Tables::None,
        };
        field.tables = field.build_tables();
        Ok(field)
    }

    /// Builds `F_q` from its order.
    pub fn with_order(q: u32) -> Result<Field> {
        let (p, h) = prime_power(q).ok_or(Error::InvalidParameter(alloc::format!(
            "{q} is not a prime power"
        )))?;
        Field::new(p, h)
    }

    fn build_tables(&self) -> Tables {
        if self.q > LOG_TABLE_LIMIT {
            return Tables::None;
        }
        let q = self.q as usize;
        let mut exp = vec![0u32; 2 * q];
        let mut log = vec![0u32; q];
        let mut x = 1u32;
        for (i, e) in exp.iter_mut().take(q - 1).enumerate() {
            *e = x;
            log[x as usize] = i as u32;
            x = self.mul_slow(x, self.primitive.0);
        }
        for i in q - 1..2 * q {
            exp[i] = exp[i - (q - 1)];
        }
        if self.q > FULL_TABLE_LIMIT {
            return Tables::Log { exp, log };
        }
        let mut add = vec![0u32; q * q];
        let mut mul = vec![0u32; q * q];
        for a in 0..q {
            for b in 0..q {
                add[a * q + b] = self.add_digits(a as u32, b as u32);
                mul[a * q + b] = if a == 0 || b == 0 {
                    0
                } else {
                    exp[log[a] as usize + log[b] as usize]
                };
            }
        }
        Tables::Full { add, mul, exp, log }
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.h
    }

    #[inline]
    pub fn order(&self) -> u32 {
        self.q
    }

    /// Coefficients (little-endian, monic, length `h + 1`) of the modulus.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn primitive_element(&self) -> Elem {
        self.primitive
    }

    pub fn is_prime_field(&self) -> bool {
        self.h == 1
    }

    #[inline]
    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    #[inline]
    pub fn one(&self) -> Elem {
        Elem::ONE
    }

    /// All elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.q).map(Elem)
    }

    /// Validates that `a` is an element of this field.
    pub fn check(&self, a: Elem) -> Result<Elem> {
        if a.0 < self.q {
            Ok(a)
        } else {
            Err(Error::ForeignElement {
                value: a.0,
                q: self.q,
            })
        }
    }

    /// Element with the given integer encoding.
    pub fn elem(&self, value: u32) -> Result<Elem> {
        self.check(Elem(value))
    }

    /// Element from little-endian coefficients (reduced mod p, at most `h` of them).
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Elem> {
        if coeffs.len() > self.h as usize {
            return Err(Error::DimensionMismatch {
                expected: self.h as usize,
                found: coeffs.len(),
            });
        }
        Ok(Elem(
            coeffs
                .iter()
                .rev()
                .fold(0u32, |acc, &c| acc * self.p + c % self.p),
        ))
    }

    /// Little-endian coefficient list of length `h`.
    pub fn coeffs(&self, a: Elem) -> Vec<u32> {
        let mut v = a.0;
        (0..self.h)
            .map(|_| {
                let c = v % self.p;
                v /= self.p;
                c
            })
            .collect()
    }

    fn add_digits(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0u32;
        let mut place = 1u32;
        while a > 0 || b > 0 {
            let d = (a % self.p + b % self.p) % self.p;
            out += d * place;
            place *= self.p;
            a /= self.p;
            b /= self.p;
        }
        out
    }

    fn neg_digits(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        let mut a = a;
        let mut out = 0u32;
        let mut place = 1u32;
        while a > 0 {
            let d = (self.p - a % self.p) % self.p;
            out += d * place;
            place *= self.p;
            a /= self.p;
        }
        out
    }

    /// Multiplication by polynomial arithmetic modulo the modulus.
    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        if self.h == 1 {
            return ((a as u64 * b as u64) % self.p as u64) as u32;
        }
        let ring = PolyRing::new(self.p, &self.modulus);
        let prod = ring.mul(&self.coeffs(Elem(a)), &self.coeffs(Elem(b)));
        prod.iter().rev().fold(0u32, |acc, &c| acc * self.p + c)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        match &self.tables {
            Tables::Full { add, .. } => Elem(add[(a.0 * self.q + b.0) as usize]),
            _ => Elem(self.add_digits(a.0, b.0)),
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.neg_digits(a.0))
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.tables {
            Tables::Full { mul, .. } => Elem(mul[(a.0 * self.q + b.0) as usize]),
            Tables::Log { exp, log } => {
                if a.0 == 0 || b.0 == 0 {
                    Elem::ZERO
                } else {
                    Elem(exp[(log[a.0 as usize] + log[b.0 as usize]) as usize])
                }
            }
            Tables::None => Elem(self.mul_slow(a.0, b.0)),
        }
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(match &self.tables {
            Tables::Full { exp, log, .. } | Tables::Log { exp, log } => {
                let l = log[a.0 as usize];
                Elem(exp[((self.q - 1 - l) % (self.q - 1)) as usize])
            }
            Tables::None => self.pow(a, (self.q - 2) as u64),
        })
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Elem, k: u64) -> Elem {
        if k == 0 {
            return Elem::ONE;
        }
        if a.is_zero() {
            return Elem::ZERO;
        }
        match &self.tables {
            Tables::Full { exp, log, .. } | Tables::Log { exp, log } => {
                let e =
                    (log[a.0 as usize] as u64 * (k % (self.q as u64 - 1))) % (self.q as u64 - 1);
                Elem(exp[e as usize])
            }
            Tables::None => {
                let mut base = a;
                let mut acc = Elem::ONE;
                let mut k = k;
                while k > 0 {
                    if k & 1 == 1 {
                        acc = self.mul(acc, base);
                    }
                    base = self.mul(base, base);
                    k >>= 1;
                }
                acc
            }
        }
    }

    /// `a^(p^e)`; the `e`-th power of the Frobenius automorphism.
    pub fn frobenius(&self, a: Elem, e: u32) -> Elem {
        let mut x = a;
        for _ in 0..(e % self.h) {
            x = self.pow(x, self.p as u64);
        }
        x
    }

    /// Discrete logarithm to the base of the primitive element.
    pub fn log(&self, a: Elem) -> Option<u32> {
        if a.is_zero() {
            return None;
        }
        match &self.tables {
            Tables::Full { log, .. } | Tables::Log { log, .. } => Some(log[a.0 as usize]),
            Tables::None => {
                let mut x = Elem::ONE;
                for i in 0..self.q - 1 {
                    if x == a {
                        return Some(i);
                    }
                    x = self.mul(x, self.primitive);
                }
                None
            }
        }
    }

    /// True when `q` is a perfect square, i.e. `h` is even.
    pub fn has_square_order(&self) -> bool {
        self.h.is_multiple_of(2)
    }

    /// Conjugation `a ↦ a^{√q}` of `F_q` over `F_{√q}`; requires square order.
    pub fn conjugate(&self, a: Elem) -> Result<Elem> {
        if !self.has_square_order() {
            return Err(Error::NotSquareOrder(self.q));
        }
        Ok(self.frobenius(a, self.h / 2))
    }

    /// Elements of the prime subfield `F_p` are `0..p` in this encoding.
    pub fn is_in_prime_subfield(&self, a: Elem) -> bool {
        a.0 < self.p
    }
}

/// Arithmetic in `F_p[x] / (f)` on little-endian coefficient vectors.
pub(crate) struct PolyRing<'a> {
    p: u32,
    f: &'a [u32],
}

impl<'a> PolyRing<'a> {
    pub(crate) fn new(p: u32, f: &'a [u32]) -> Self {
        PolyRing { p, f }
    }

    fn deg(&self) -> usize {
        self.f.len() - 1
    }

    fn reduce(&self, mut a: Vec<u64>) -> Vec<u32> {
        let p = self.p as u64;
        let d = self.deg();
        for i in (d..a.len()).rev() {
            let c = a[i] % p;
            if c != 0 {
                for j in 0..d {
                    let sub = c * self.f[j] as u64 % p;
                    a[i - d + j] = (a[i - d + j] + p - sub) % p;
                }
            }
            a[i] = 0;
        }
        a.truncate(d);
        a.resize(d, 0);
        a.into_iter().map(|c| (c % p) as u32).collect()
    }

    pub(crate) fn mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let p = self.p as u64;
        let mut out = vec![0u64; a.len() + b.len()];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x as u64 * y as u64) % p;
            }
        }
        self.reduce(out)
    }

    fn one(&self) -> Vec<u32> {
        let mut v = vec![0u32; self.deg()];
        v[0] = 1;
        v
    }

    fn x(&self) -> Vec<u32> {
        let mut v = vec![0u32; self.deg()];
        if self.deg() == 1 {
            // x mod (x - c) = c
            v[0] = (self.p - self.f[0]) % self.p;
        } else {
            v[1] = 1;
        }
        v
    }

    fn pow(&self, base: &[u32], mut k: u64) -> Vec<u32> {
        let mut acc = self.one();
        let mut b = base.to_vec();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            b = self.mul(&b, &b);
            k >>= 1;
        }
        acc
    }

    fn add(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        a.iter().zip(b).map(|(x, y)| (x + y) % self.p).collect()
    }

    /// Evaluates the polynomial `g` (coefficients in `F_p`) at `y`.
    fn eval(&self, g: &[u32], y: &[u32]) -> Vec<u32> {
        let mut acc = vec![0u32; self.deg()];
        for &c in g.iter().rev() {
            acc = self.mul(&acc, y);
            let mut cst = vec![0u32; self.deg()];
            cst[0] = c % self.p;
            acc = self.add(&acc, &cst);
        }
        acc
    }

    /// True iff `x` has multiplicative order exactly `p^deg - 1`.
    fn x_is_primitive(&self) -> bool {
        if self.f[0] == 0 {
            return false;
        }
        let order = (self.p as u64).pow(self.deg() as u32) - 1;
        let x = self.x();
        if self.pow(&x, order) != self.one() {
            return false;
        }
        prime_factors(order)
            .into_iter()
            .all(|l| self.pow(&x, order / l) != self.one())
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Decomposes `q = p^h`, or `None` if `q` is not a prime power.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut h = 0;
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
        h += 1;
    }
    (r == 1).then_some((p, h))
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
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

fn least_primitive_root(p: u32) -> u32 {
    if p == 2 {
        return 1;
    }
    let order = (p - 1) as u64;
    let factors = prime_factors(order);
    (2..p)
        .find(|&g| {
            factors
                .iter()
                .all(|&l| mod_pow(g as u64, order / l, p as u64) != 1)
        })
        .expect("every prime has a primitive root")
}

fn mod_pow(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

/// Monic polynomials of degree `h` in Conway order: the sequence
/// `(α_{h-1}, …, α_0)` increases lexicographically where the coefficient of
/// `x^i` is `(-1)^{h-i} α_i`.
fn conway_ordered_candidates(p: u32, h: u32) -> impl Iterator<Item = Vec<u32>> {
    let total = (p as u64).pow(h);
    (0..total).map(move |idx| {
        let mut f = vec![0u32; h as usize + 1];
        f[h as usize] = 1;
        let mut rest = idx;
        // idx's most significant base-p digit is α_{h-1}
        for (i, c) in f.iter_mut().take(h as usize).enumerate() {
            let alpha = (rest % p as u64) as u32;
            rest /= p as u64;
            let sign_negative = (h as usize - i) % 2 == 1;
            *c = if sign_negative {
                (p - alpha) % p
            } else {
                alpha
            };
        }
        f
    })
}

/// The Conway polynomial `C_{p,h}` (little-endian, monic).
pub fn conway_polynomial(p: u32, h: u32) -> Vec<u32> {
    let maximal_divisors: Vec<u32> = prime_factors(h as u64)
        .into_iter()
        .map(|l| h / l as u32)
        .collect();
    let subfield_polys: Vec<(u32, Vec<u32>)> = maximal_divisors
        .iter()
        .map(|&d| (d, conway_polynomial(p, d)))
        .collect();
    let q = (p as u64).pow(h);
    conway_ordered_candidates(p, h)
        .find(|f| {
            let ring = PolyRing::new(p, f);
            if !ring.x_is_primitive() {
                return false;
            }
            subfield_polys.iter().all(|(d, g)| {
                let qd = (p as u64).pow(*d);
                let y = ring.pow(&ring.x(), (q - 1) / (qd - 1));
                ring.eval(g, &y).iter().all(|&c| c == 0)
            })
        })
        .expect("a Conway polynomial exists for every (p, h)")
}

/// Least primitive polynomial of degree `h` in Conway order.
pub fn least_primitive_polynomial(p: u32, h: u32) -> Vec<u32> {
    conway_ordered_candidates(p, h)
        .find(|f| PolyRing::new(p, f).x_is_primitive())
        .expect("primitive polynomials exist in every degree")
}

/// Trial division of the monic polynomial `f` by every monic polynomial of
/// degree `1..=deg(f)/2` over `F_p`.
pub fn is_irreducible(p: u32, f: &[u32]) -> bool {
    let deg = f.len() - 1;
    if deg == 0 {
        return false;
    }
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let mut g = vec![0u32; d + 1];
            g[d] = 1;
            let mut rest = idx;
            for c in g.iter_mut().take(d) {
                *c = (rest % p as u64) as u32;
                rest /= p as u64;
            }
            if poly_rem(p, f, &g).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Remainder of `a` modulo the monic polynomial `g`.
fn poly_rem(p: u32, a: &[u32], g: &[u32]) -> Vec<u32> {
    let dg = g.len() - 1;
    let mut r: Vec<u32> = a.to_vec();
    while r.len() > dg {
        let lead = *r.last().unwrap() % p;
        let shift = r.len() - 1 - dg;
        if lead != 0 {
            for (j, &gc) in g.iter().enumerate() {
                let sub = lead * gc % p;
                r[shift + j] = (r[shift + j] + p - sub) % p;
            }
        }
        r.pop();
    }
    r
}
