//! Exact arithmetic in GF(p) and GF(p^2).
//!
//! GF(p^2) is realised as GF(p)[w]/(w^2 - nu). The non-residue `nu` is picked
//! deterministically: `nu = -1` when p = 3 mod 4 (modulus x^2 + 1), otherwise
//! the smallest quadratic non-residue mod p.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::error::{Error, Result};

/// Largest admissible characteristic (exclusive). Products of two residues fit in a u64.
pub const MAX_PRIME: u64 = 1 << 31;

/// Raw residue arithmetic mod p, used directly by the sweep kernels.
pub mod modp {
    #[inline(always)]
    pub fn add(a: u64, b: u64, p: u64) -> u64 {
        let s = a + b;
        if s >= p {
            s - p
        } else {
            s
        }
    }

    #[inline(always)]
    pub fn sub(a: u64, b: u64, p: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + p - b
        }
    }

    #[inline(always)]
    pub fn mul(a: u64, b: u64, p: u64) -> u64 {
        a * b % p
    }

    pub fn pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
        let mut acc = 1 % p;
        base %= p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mul(acc, base, p);
            }
            base = mul(base, base, p);
            exp >>= 1;
        }
        acc
    }

    /// Inverse via the extended Euclidean algorithm; `None` for zero.
    pub fn inv(a: u64, p: u64) -> Option<u64> {
        let a = a % p;
        if a == 0 {
            return None;
        }
        let (mut r0, mut r1) = (p as i64, a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Some(t0.rem_euclid(p as i64) as u64)
    }

    /// Table of inverses of 0..p (index 0 holds 0).
    pub fn inverse_table(p: u64) -> Vec<u64> {
        let n = p as usize;
        let mut inv = vec![0u64; n];
        if n > 1 {
            inv[1] = 1;
        }
        for i in 2..n {
            // inv[i] = -(p / i) * inv[p mod i]
            let q = p / i as u64;
            let r = (p % i as u64) as usize;
            inv[i] = (p - q) * inv[r] % p;
        }
        inv
    }

    pub fn reduce_i64(a: i64, p: u64) -> u64 {
        a.rem_euclid(p as i64) as u64
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// The finite field GF(p) or GF(p^2). Cheap to copy; never mutated.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct FieldCtx {
    p: u64,
    ext: u8,
    nonresidue: u64,
}

impl FieldCtx {
    pub fn new(p: u64, ext_degree: u32) -> Result<Self> {
        if p >= MAX_PRIME {
            return Err(Error::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NonPrime(p));
        }
        if p == 2 {
            return Err(Error::EvenCharacteristic(p));
        }
        if ext_degree != 1 && ext_degree != 2 {
            return Err(Error::UnsupportedDegree(ext_degree));
        }
        let nonresidue = if p % 4 == 3 {
            p - 1
        } else {
            (2..p)
                .find(|&a| modp::pow(a, (p - 1) / 2, p) == p - 1)
                .expect("odd prime has a non-residue")
        };
        Ok(FieldCtx {
            p,
            ext: ext_degree as u8,
            nonresidue,
        })
    }

    pub fn prime(p: u64) -> Result<Self> {
        Self::new(p, 1)
    }

    pub fn quadratic(p: u64) -> Result<Self> {
        Self::new(p, 2)
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn ext_degree(&self) -> u32 {
        self.ext as u32
    }

    /// Number of elements q = p^ext.
    pub fn size(&self) -> u64 {
        self.p.pow(self.ext as u32)
    }

    /// The base field GF(p) of this context.
    pub fn base(&self) -> FieldCtx {
        FieldCtx { ext: 1, ..*self }
    }

    /// The quadratic extension sharing this context's prime.
    pub fn extension(&self) -> FieldCtx {
        FieldCtx { ext: 2, ..*self }
    }

    /// The chosen non-residue nu as an element of this field.
    pub fn nonresidue(&self) -> FieldElement {
        self.from_u64(self.nonresidue)
    }

    /// Coefficients (c0, c1, 1) of the monic modulus x^2 + c1 x + c0, present iff ext = 2.
    pub fn modulus_poly(&self) -> Option<[u64; 3]> {
        (self.ext == 2).then(|| [(self.p - self.nonresidue) % self.p, 0, 1])
    }

    #[inline]
    pub fn zero(&self) -> FieldElement {
        FieldElement {
            ctx: *self,
            c0: 0,
            c1: 0,
        }
    }

    #[inline]
    pub fn one(&self) -> FieldElement {
        self.from_u64(1)
    }

    #[inline]
    pub fn from_u64(&self, a: u64) -> FieldElement {
        FieldElement {
            ctx: *self,
            c0: a % self.p,
            c1: 0,
        }
    }

    #[inline]
    pub fn from_i64(&self, a: i64) -> FieldElement {
        self.from_u64(modp::reduce_i64(a, self.p))
    }

    /// The element a + b*w; `b` must be zero over GF(p).
    pub fn element(&self, a: u64, b: u64) -> Result<FieldElement> {
        let b = b % self.p;
        if self.ext == 1 && b != 0 {
            return Err(Error::InvalidArgument(format!(
                "GF({}) element cannot have a w-component",
                self.p
            )));
        }
        Ok(FieldElement {
            ctx: *self,
            c0: a % self.p,
            c1: b,
        })
    }

    /// The adjoined root w (w^2 = nu). Only in GF(p^2).
    pub fn gen(&self) -> Option<FieldElement> {
        (self.ext == 2).then(|| FieldElement {
            ctx: *self,
            c0: 0,
            c1: 1,
        })
    }

    /// Element with index `i = c0 + p*c1`; inverse of [`FieldElement::index`].
    pub fn from_index(&self, i: u64) -> FieldElement {
        debug_assert!(i < self.size());
        FieldElement {
            ctx: *self,
            c0: i % self.p,
            c1: i / self.p,
        }
    }

    /// All field elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.size()).map(move |i| self.from_index(i))
    }

    /// Embed an element of GF(p) (or of this very field) into this field.
    pub fn lift(&self, a: FieldElement) -> Result<FieldElement> {
        if a.ctx == *self {
            return Ok(a);
        }
        if a.ctx.p != self.p || a.ctx.ext != 1 {
            return Err(Error::ContextMismatch(a.ctx.describe(), self.describe()));
        }
        Ok(self.from_u64(a.c0))
    }

    /// Parse the textual syntax: decimal integers (optionally negative) for GF(p),
    /// "a+b*w" (or "b*w", "w", "a+w") for GF(p^2).
    pub fn parse(&self, s: &str) -> Result<FieldElement> {
        let err = || Error::ParseElement(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(err());
        }
        // split into signed terms
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, ch) in t.char_indices() {
            if (ch == '+' || ch == '-') && i > 0 {
                terms.push(&t[start..i]);
                start = i;
            }
        }
        terms.push(&t[start..]);

        let mut acc = self.zero();
        for term in terms {
            let (neg, body) = match term.as_bytes()[0] {
                b'+' => (false, &term[1..]),
                b'-' => (true, &term[1..]),
                _ => (false, term),
            };
            let value = if let Some(coef) = body.strip_suffix("*w") {
                let g = self.gen().ok_or_else(err)?;
                let c: u64 = coef.parse().map_err(|_| err())?;
                g * self.from_u64(c % self.p)
            } else if body == "w" {
                self.gen().ok_or_else(err)?
            } else {
                let c: u64 = body.parse().map_err(|_| err())?;
                self.from_u64(c % self.p)
            };
            acc = if neg { acc - value } else { acc + value };
        }
        Ok(acc)
    }

    pub fn describe(&self) -> String {
        match self.ext {
            1 => format!("GF({})", self.p),
            _ => format!("GF({}^2)", self.p),
        }
    }
}

impl fmt::Display for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

/// An element of a [`FieldCtx`], stored as reduced coordinates `c0 + c1*w`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct FieldElement {
    ctx: FieldCtx,
    c0: u64,
    c1: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked binary arithmetic: context mismatch and division by zero are errors.
pub fn arith(a: FieldElement, b: FieldElement, op: ArithOp) -> Result<FieldElement> {
    if a.ctx != b.ctx {
        return Err(Error::ContextMismatch(a.ctx.describe(), b.ctx.describe()));
    }
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a * b.inv()?,
    })
}

impl FieldElement {
    #[inline]
    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    /// Coordinates (c0, c1); c1 is always zero over GF(p).
    #[inline]
    pub fn coords(&self) -> (u64, u64) {
        (self.c0, self.c1)
    }

    /// Index `c0 + p*c1` in [0, q).
    #[inline]
    pub fn index(&self) -> u64 {
        self.c0 + self.ctx.p * self.c1
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.c0 == 0 && self.c1 == 0
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.c0 == 1 && self.c1 == 0
    }

    /// True when the element lies in the prime subfield.
    #[inline]
    pub fn in_prime_field(&self) -> bool {
        self.c1 == 0
    }

    pub fn pow(&self, mut exp: u64) -> FieldElement {
        let mut base = *self;
        let mut acc = self.ctx.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc *= base;
            }
            base *= base;
            exp >>= 1;
        }
        acc
    }

    pub fn inv(&self) -> Result<FieldElement> {
        let p = self.ctx.p;
        if self.c1 == 0 {
            let c0 = modp::inv(self.c0, p).ok_or(Error::DivisionByZero)?;
            return Ok(FieldElement { c0, ..*self });
        }
        // (a + b w)^-1 = (a - b w) / (a^2 - nu b^2)
        let norm = modp::sub(
            modp::mul(self.c0, self.c0, p),
            modp::mul(self.ctx.nonresidue, modp::mul(self.c1, self.c1, p), p),
            p,
        );
        let ninv = modp::inv(norm, p).ok_or(Error::DivisionByZero)?;
        Ok(FieldElement {
            ctx: self.ctx,
            c0: modp::mul(self.c0, ninv, p),
            c1: modp::mul(p - self.c1, ninv, p),
        })
    }

    /// a^p. Identity on GF(p); conjugation a + b w -> a - b w on GF(p^2).
    pub fn frobenius(&self) -> FieldElement {
        FieldElement {
            ctx: self.ctx,
            c0: self.c0,
            c1: (self.ctx.p - self.c1) % self.ctx.p,
        }
    }

    /// a^(p^k).
    pub fn frobenius_pow(&self, k: u32) -> FieldElement {
        if self.ctx.ext == 1 || k % 2 == 0 {
            *self
        } else {
            self.frobenius()
        }
    }

    /// Quadratic character in the element's own field: -1, 0 or +1.
    pub fn legendre(&self) -> i8 {
        if self.is_zero() {
            return 0;
        }
        let e = self.pow((self.ctx.size() - 1) / 2);
        if e.is_one() {
            1
        } else {
            debug_assert_eq!(e, -self.ctx.one());
            -1
        }
    }

    /// Some square root, if one exists in the element's field.
    pub fn sqrt(&self) -> Option<FieldElement> {
        if self.is_zero() {
            return Some(*self);
        }
        if self.legendre() != 1 {
            return None;
        }
        // fields here are at most p^2 < 2^62 elements; for the sizes the toolkit
        // touches a Tonelli-Shanks step loop is plenty
        let q = self.ctx.size();
        let mut s = 0;
        let mut t = q - 1;
        while t % 2 == 0 {
            t /= 2;
            s += 1;
        }
        let z = self
            .ctx
            .elements()
            .find(|e| e.legendre() == -1)
            .expect("non-residue exists");
        let mut m = s;
        let mut c = z.pow(t);
        let mut x = self.pow((t + 1) / 2);
        let mut b = self.pow(t);
        while !b.is_one() {
            let mut i = 0;
            let mut b2 = b;
            while !b2.is_one() {
                b2 *= b2;
                i += 1;
            }
            let mut f = c;
            for _ in 0..(m - i - 1) {
                f *= f;
            }
            x *= f;
            c = f * f;
            b *= c;
            m = i;
        }
        Some(x)
    }

    /// Multiplicative order, for nonzero elements.
    pub fn order(&self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let n = self.ctx.size() - 1;
        let mut ord = n;
        let mut m = n;
        let mut d = 2;
        while d * d <= m {
            if m % d == 0 {
                while m % d == 0 {
                    m /= d;
                }
                while ord % d == 0 && self.pow(ord / d).is_one() {
                    ord /= d;
                }
            }
            d += 1;
        }
        if m > 1 && self.pow(ord / m).is_one() {
            ord /= m;
        }
        Some(ord)
    }

    #[inline(always)]
    fn check(&self, other: &FieldElement) {
        assert!(
            self.ctx == other.ctx,
            "field context mismatch: {} vs {}",
            self.ctx,
            other.ctx
        );
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by context, then by [`FieldElement::index`].
impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ctx
            .cmp(&other.ctx)
            .then(self.c1.cmp(&other.c1))
            .then(self.c0.cmp(&other.c0))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c1 == 0 {
            write!(f, "{}", self.c0)
        } else {
            write!(f, "{}+{}*w", self.c0, self.c1)
        }
    }
}

impl Add for FieldElement {
    type Output = FieldElement;
    #[inline]
    fn add(self, rhs: FieldElement) -> FieldElement {
        self.check(&rhs);
        let p = self.ctx.p;
        FieldElement {
            ctx: self.ctx,
            c0: modp::add(self.c0, rhs.c0, p),
            c1: modp::add(self.c1, rhs.c1, p),
        }
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;
    #[inline]
    fn sub(self, rhs: FieldElement) -> FieldElement {
        self.check(&rhs);
        let p = self.ctx.p;
        FieldElement {
            ctx: self.ctx,
            c0: modp::sub(self.c0, rhs.c0, p),
            c1: modp::sub(self.c1, rhs.c1, p),
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    #[inline]
    fn neg(self) -> FieldElement {
        let p = self.ctx.p;
        FieldElement {
            ctx: self.ctx,
            c0: (p - self.c0) % p,
            c1: (p - self.c1) % p,
        }
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;
    #[inline]
    fn mul(self, rhs: FieldElement) -> FieldElement {
        self.check(&rhs);
        let p = self.ctx.p;
        if self.c1 == 0 && rhs.c1 == 0 {
            return FieldElement {
                ctx: self.ctx,
                c0: modp::mul(self.c0, rhs.c0, p),
                c1: 0,
            };
        }
        // (a + b w)(c + d w) = (ac + nu bd) + (ad + bc) w
        let ac = modp::mul(self.c0, rhs.c0, p);
        let bd = modp::mul(self.c1, rhs.c1, p);
        let ad = modp::mul(self.c0, rhs.c1, p);
        let bc = modp::mul(self.c1, rhs.c0, p);
        FieldElement {
            ctx: self.ctx,
            c0: modp::add(ac, modp::mul(self.ctx.nonresidue, bd, p), p),
            c1: modp::add(ad, bc, p),
        }
    }
}

/// Panics on division by zero; use [`arith`] for the checked form.
impl Div for FieldElement {
    type Output = FieldElement;
    fn div(self, rhs: FieldElement) -> FieldElement {
        self * rhs.inv().expect("division by zero")
    }
}

impl AddAssign for FieldElement {
    fn add_assign(&mut self, rhs: FieldElement) {
        *self = *self + rhs;
    }
}

impl SubAssign for FieldElement {
    fn sub_assign(&mut self, rhs: FieldElement) {
        *self = *self - rhs;
    }
}

impl MulAssign for FieldElement {
    fn mul_assign(&mut self, rhs: FieldElement) {
        *self = *self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn field_new_examples() {
        let f9 = FieldCtx::new(3, 2).unwrap();
        assert_eq!(f9.modulus_poly(), Some([1, 0, 1])); // x^2 + 1
        assert_eq!(f9.size(), 9);
        let f7 = FieldCtx::new(7, 1).unwrap();
        assert_eq!(f7.modulus_poly(), None);
        assert_eq!(FieldCtx::new(4, 1), Err(Error::NonPrime(4)));
        assert_eq!(FieldCtx::new(2, 1), Err(Error::EvenCharacteristic(2)));
        assert_eq!(FieldCtx::new(5, 3), Err(Error::UnsupportedDegree(3)));
        // p = 1 mod 4: smallest non-residue
        assert_eq!(FieldCtx::new(13, 2).unwrap().modulus_poly(), Some([11, 0, 1]));
        assert_eq!(FieldCtx::new(17, 2).unwrap().nonresidue().coords().0, 3);
    }

    #[test]
    fn arith_examples() {
        let f7 = FieldCtx::prime(7).unwrap();
        let inv2 = arith(f7.one(), f7.from_u64(2), ArithOp::Div).unwrap();
        assert_eq!(inv2, f7.from_u64(4));
        let f9 = FieldCtx::quadratic(3).unwrap();
        let i = f9.gen().unwrap();
        assert_eq!(i * i, f9.from_u64(2));
        assert_eq!(
            arith(f7.from_u64(3), f7.zero(), ArithOp::Div),
            Err(Error::DivisionByZero)
        );
        let f5 = FieldCtx::prime(5).unwrap();
        assert!(matches!(
            arith(f7.one(), f5.one(), ArithOp::Add),
            Err(Error::ContextMismatch(_, _))
        ));
    }

    #[test]
    fn frobenius_examples() {
        let f7 = FieldCtx::prime(7).unwrap();
        for a in f7.elements() {
            assert_eq!(a.frobenius(), a);
            assert_eq!(a.pow(7), a);
        }
        let f9 = FieldCtx::quadratic(3).unwrap();
        let i = f9.gen().unwrap();
        assert_eq!(i.frobenius(), -i);
        for a in f9.elements() {
            assert_eq!(a.frobenius(), a.pow(3));
            assert_eq!(a.frobenius().frobenius(), a);
        }
    }

    #[test]
    fn legendre_examples() {
        let f11 = FieldCtx::prime(11).unwrap();
        assert_eq!(f11.from_u64(3).legendre(), 1);
        assert_eq!(f11.zero().legendre(), 0);
        for p in [3, 5, 7, 11, 13, 17, 29] {
            let f = FieldCtx::prime(p).unwrap();
            assert_eq!(f.nonresidue().legendre(), -1);
            // every GF(p) element is a square in GF(p^2)
            let f2 = f.extension();
            assert_eq!(f2.lift(f.nonresidue()).unwrap().legendre(), 1);
        }
    }

    #[test]
    fn parse_and_display() {
        let f49 = FieldCtx::quadratic(7).unwrap();
        for a in f49.elements() {
            assert_eq!(f49.parse(&a.to_string()).unwrap(), a);
        }
        assert_eq!(f49.parse("w").unwrap(), f49.gen().unwrap());
        assert_eq!(f49.parse("-1").unwrap(), f49.from_u64(6));
        assert_eq!(f49.parse(" 2 + 3*w ").unwrap(), f49.element(2, 3).unwrap());
        let f7 = FieldCtx::prime(7).unwrap();
        assert!(f7.parse("1+w").is_err());
        assert!(f7.parse("x").is_err());
        assert_eq!(f7.parse("10").unwrap(), f7.from_u64(3));
    }

    #[test]
    fn sqrt_and_order() {
        for ctx in [FieldCtx::quadratic(7).unwrap(), FieldCtx::prime(13).unwrap()] {
            for a in ctx.elements() {
                if let Some(r) = a.sqrt() {
                    assert_eq!(r * r, a);
                } else {
                    assert_eq!(a.legendre(), -1);
                }
                if let Some(o) = a.order() {
                    assert!(a.pow(o).is_one());
                    assert_eq!((ctx.size() - 1) % o, 0);
                    for d in 1..o {
                        assert!(!a.pow(d).is_one());
                    }
                }
            }
        }
    }

    #[test]
    fn inverse_table_matches() {
        for p in [3u64, 5, 7, 11, 101] {
            let t = modp::inverse_table(p);
            for a in 1..p {
                assert_eq!(t[a as usize] * a % p, 1);
                assert_eq!(modp::inv(a, p), Some(t[a as usize]));
            }
        }
    }

    fn arb_elem() -> impl Strategy<Value = (u64, u64, u64, u64, u64, u64, u64)> {
        (
            prop::sample::select(vec![3u64, 5, 7, 11, 13, 101, 1009]),
            0u64..1 << 20,
            0u64..1 << 20,
            0u64..1 << 20,
            0u64..1 << 20,
            0u64..1 << 20,
            0u64..1 << 20,
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn field_axioms((p, a0, a1, b0, b1, c0, c1) in arb_elem()) {
            let f = FieldCtx::quadratic(p).unwrap();
            let a = f.element(a0, a1).unwrap();
            let b = f.element(b0, b1).unwrap();
            let c = f.element(c0, c1).unwrap();
            prop_assert_eq!((a + b) + c, a + (b + c));
            prop_assert_eq!((a * b) * c, a * (b * c));
            prop_assert_eq!(a * (b + c), a * b + a * c);
            prop_assert_eq!(a * b, b * a);
            prop_assert_eq!(a - a, f.zero());
            if !a.is_zero() {
                prop_assert_eq!(a * a.inv().unwrap(), f.one());
                prop_assert_eq!((b / a) * a, b);
            }
        }

        #[test]
        fn frobenius_is_automorphism((p, a0, a1, b0, b1, _c0, _c1) in arb_elem()) {
            let f = FieldCtx::quadratic(p).unwrap();
            let a = f.element(a0, a1).unwrap();
            let b = f.element(b0, b1).unwrap();
            prop_assert_eq!((a * b).frobenius(), a.frobenius() * b.frobenius());
            prop_assert_eq!((a + b).frobenius(), a.frobenius() + b.frobenius());
            prop_assert_eq!(a.frobenius(), a.pow(p));
        }

        #[test]
        fn legendre_multiplicative((p, a0, a1, b0, b1, _c0, _c1) in arb_elem(), ext in 1u32..=2) {
            let f = FieldCtx::new(p, ext).unwrap();
            let a = if ext == 1 { f.from_u64(a0) } else { f.element(a0, a1).unwrap() };
            let b = if ext == 1 { f.from_u64(b0) } else { f.element(b0, b1).unwrap() };
            prop_assume!(!a.is_zero() && !b.is_zero());
            prop_assert_eq!(a.legendre() * b.legendre(), (a * b).legendre());
        }
    }
}
