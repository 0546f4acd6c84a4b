//! Dense univariate polynomials over a [`FieldCtx`].

use std::fmt;

use crate::error::{Error, Result};
use crate::ff::{FieldCtx, FieldElement};

/// Maximum number of coefficients a polynomial may carry.
pub const DEGREE_CAP: usize = 1 << 24;

/// Dense polynomial, `coeffs[k]` is the coefficient of x^k. Always canonical:
/// the last stored coefficient is nonzero, the zero polynomial stores nothing.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DensePoly {
    ctx: FieldCtx,
    coeffs: Vec<FieldElement>,
}

impl DensePoly {
    pub fn zero(ctx: FieldCtx) -> Self {
        DensePoly {
            ctx,
            coeffs: Vec::new(),
        }
    }

    pub fn one(ctx: FieldCtx) -> Self {
        Self::constant(ctx.one())
    }

    pub fn constant(c: FieldElement) -> Self {
        Self::new(c.ctx(), vec![c])
    }

    /// x - a
    pub fn linear_root(a: FieldElement) -> Self {
        Self::new(a.ctx(), vec![-a, a.ctx().one()])
    }

    pub fn x(ctx: FieldCtx) -> Self {
        Self::new(ctx, vec![ctx.zero(), ctx.one()])
    }

    /// x^n
    pub fn monomial(ctx: FieldCtx, n: usize) -> Self {
        let mut c = vec![ctx.zero(); n + 1];
        c[n] = ctx.one();
        Self::new(ctx, c)
    }

    /// Panics if a coefficient lives in another context.
    pub fn new(ctx: FieldCtx, mut coeffs: Vec<FieldElement>) -> Self {
        assert!(
            coeffs.iter().all(|c| c.ctx() == ctx),
            "coefficient outside {ctx}"
        );
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        DensePoly { ctx, coeffs }
    }

    pub fn from_i64(ctx: FieldCtx, coeffs: &[i64]) -> Self {
        Self::new(ctx, coeffs.iter().map(|&c| ctx.from_i64(c)).collect())
    }

    /// Product of (x - r) over the given roots.
    pub fn from_roots(ctx: FieldCtx, roots: &[FieldElement]) -> Self {
        roots
            .iter()
            .fold(Self::one(ctx), |acc, &r| acc.mul(&Self::linear_root(r)))
    }

    /// Parse "c0,c1,...,cd" with each entry in the field element syntax.
    pub fn parse(ctx: FieldCtx, s: &str) -> Result<Self> {
        let coeffs = s
            .split(',')
            .map(|t| ctx.parse(t))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(ctx, coeffs))
    }

    /// Comma-separated coefficient list, inverse of [`DensePoly::parse`].
    pub fn to_coeff_string(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    #[inline]
    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    #[inline]
    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Coefficient of x^k (zero beyond the degree).
    #[inline]
    pub fn coeff(&self, k: usize) -> FieldElement {
        self.coeffs.get(k).copied().unwrap_or(self.ctx.zero())
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    #[inline]
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with deg 0 = 0 for zero as well; used where zero is excluded upstream.
    #[inline]
    pub fn deg(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> FieldElement {
        self.coeffs.last().copied().unwrap_or(self.ctx.zero())
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    fn check(&self, other: &DensePoly) -> Result<()> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch(
                self.ctx.describe(),
                other.ctx.describe(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &DensePoly) -> DensePoly {
        self.check(other).expect("polynomial context");
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        DensePoly::new(self.ctx, c)
    }

    pub fn sub(&self, other: &DensePoly) -> DensePoly {
        self.check(other).expect("polynomial context");
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n).map(|k| self.coeff(k) - other.coeff(k)).collect();
        DensePoly::new(self.ctx, c)
    }

    pub fn scale(&self, s: FieldElement) -> DensePoly {
        DensePoly::new(self.ctx, self.coeffs.iter().map(|&c| c * s).collect())
    }

    /// Schoolbook product. Panics on context mismatch or on exceeding the degree cap;
    /// [`DensePoly::try_mul`] reports both as errors.
    pub fn mul(&self, other: &DensePoly) -> DensePoly {
        self.try_mul(other).expect("polynomial product")
    }

    pub fn try_mul(&self, other: &DensePoly) -> Result<DensePoly> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(DensePoly::zero(self.ctx));
        }
        let n = self.coeffs.len() + other.coeffs.len() - 1;
        if n > DEGREE_CAP {
            return Err(Error::DegreeCap(n - 1));
        }
        if self.ctx.ext_degree() == 1 {
            return Ok(self.mul_prime(other, n));
        }
        let mut out = vec![self.ctx.zero(); n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(DensePoly::new(self.ctx, out))
    }

    // GF(p) product on raw residues with delayed reduction.
    fn mul_prime(&self, other: &DensePoly, n: usize) -> DensePoly {
        let p = self.ctx.p();
        let a: Vec<u64> = self.coeffs.iter().map(|c| c.coords().0).collect();
        let b: Vec<u64> = other.coeffs.iter().map(|c| c.coords().0).collect();
        let mut acc = vec![0u128; n];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                acc[i + j] += (x * y) as u128;
            }
        }
        let c = acc
            .into_iter()
            .map(|v| self.ctx.from_u64((v % p as u128) as u64))
            .collect();
        DensePoly::new(self.ctx, c)
    }

    /// f^m by binary exponentiation.
    pub fn pow(&self, m: u64) -> Result<DensePoly> {
        if m == 0 {
            return Ok(DensePoly::one(self.ctx));
        }
        if let Some(d) = self.degree() {
            let top = (d as u128) * (m as u128);
            if top >= DEGREE_CAP as u128 {
                return Err(Error::DegreeCap(top.min(usize::MAX as u128) as usize));
            }
        } else {
            return Ok(DensePoly::zero(self.ctx));
        }
        let mut result = DensePoly::one(self.ctx);
        let mut base = self.clone();
        let mut e = m;
        while e > 0 {
            if e & 1 == 1 {
                result = result.try_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.try_mul(&base)?;
            }
        }
        Ok(result)
    }

    pub fn derivative(&self) -> DensePoly {
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &a)| a * self.ctx.from_u64(k as u64))
            .collect();
        DensePoly::new(self.ctx, c)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &DensePoly) -> (DensePoly, DensePoly) {
        self.check(divisor).expect("polynomial context");
        let dd = divisor.degree().expect("division by zero polynomial");
        let Some(nd) = self.degree() else {
            return (DensePoly::zero(self.ctx), DensePoly::zero(self.ctx));
        };
        if nd < dd {
            return (DensePoly::zero(self.ctx), self.clone());
        }
        let lead_inv = divisor.leading().inv().expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.ctx.zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = rem[k + dd] * lead_inv;
            quot[k] = c;
            if c.is_zero() {
                continue;
            }
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= c * d;
            }
        }
        rem.truncate(dd);
        (DensePoly::new(self.ctx, quot), DensePoly::new(self.ctx, rem))
    }

    pub fn monic(&self) -> DensePoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(self.leading().inv().expect("nonzero"))
    }

    pub fn eval(&self, a: FieldElement) -> FieldElement {
        self.try_eval(a).expect("evaluation point outside the coefficient field")
    }

    /// Horner evaluation at a point of this field or of its quadratic extension.
    pub fn try_eval(&self, a: FieldElement) -> Result<FieldElement> {
        let actx = a.ctx();
        if actx.p() != self.ctx.p() || actx.ext_degree() < self.ctx.ext_degree() {
            return Err(Error::ContextMismatch(self.ctx.describe(), actx.describe()));
        }
        let mut acc = actx.zero();
        for &c in self.coeffs.iter().rev() {
            acc = acc * a + actx.lift(c)?;
        }
        Ok(acc)
    }

    /// The polynomial with coefficients lifted into a larger field context.
    pub fn lift(&self, ctx: FieldCtx) -> Result<DensePoly> {
        let c = self
            .coeffs
            .iter()
            .map(|&a| ctx.lift(a))
            .collect::<Result<Vec<_>>>()?;
        Ok(DensePoly::new(ctx, c))
    }

    /// f(x + s), by Horner composition.
    pub fn shift(&self, s: FieldElement) -> DensePoly {
        let lin = DensePoly::new(self.ctx, vec![s, self.ctx.one()]);
        let mut acc = DensePoly::zero(self.ctx);
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&DensePoly::constant(c));
        }
        acc
    }

    /// x^deg * f(1/x) for the given formal degree `d >= deg f`.
    pub fn reverse(&self, d: usize) -> DensePoly {
        let mut c = vec![self.ctx.zero(); d + 1];
        for (k, &a) in self.coeffs.iter().enumerate() {
            c[d - k] = a;
        }
        DensePoly::new(self.ctx, c)
    }

    /// Entrywise Frobenius a -> a^p on the coefficients.
    pub fn frobenius(&self) -> DensePoly {
        DensePoly::new(self.ctx, self.coeffs.iter().map(|c| c.frobenius()).collect())
    }
}

/// Monic gcd by Euclid.
pub fn gcd(a: &DensePoly, b: &DensePoly) -> Result<DensePoly> {
    a.check(b)?;
    if a.is_zero() && b.is_zero() {
        return Err(Error::ZeroGcd);
    }
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_zero() {
        let (_, r) = x.div_rem(&y);
        x = y;
        y = r;
    }
    Ok(x.monic())
}

/// True iff gcd(f, f') is a nonzero constant. A vanishing derivative
/// (f a p-th power in characteristic p) counts as not squarefree.
pub fn is_squarefree(f: &DensePoly) -> Result<bool> {
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let d = f.derivative();
    if d.is_zero() {
        return Ok(false);
    }
    Ok(gcd(f, &d)?.is_constant())
}

impl fmt::Display for DensePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let cs = if c.in_prime_field() {
                c.to_string()
            } else {
                format!("({c})")
            };
            match k {
                0 => write!(f, "{cs}")?,
                _ => {
                    if !c.is_one() {
                        write!(f, "{cs}*")?;
                    }
                    if k == 1 {
                        f.write_str("x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(p: u64) -> FieldCtx {
        FieldCtx::prime(p).unwrap()
    }

    #[test]
    fn mul_examples() {
        let f3 = gf(3);
        let x1 = DensePoly::from_i64(f3, &[1, 1]);
        assert_eq!(x1.mul(&x1), DensePoly::from_i64(f3, &[1, 2, 1]));
        assert!(x1.mul(&DensePoly::zero(f3)).is_zero());
        let f7 = gf(7);
        let a = DensePoly::from_i64(f7, &[-1, 0, 1]);
        let b = DensePoly::from_i64(f7, &[1, 0, 1]);
        assert_eq!(a.mul(&b), DensePoly::from_i64(f7, &[-1, 0, 0, 0, 1]));
        assert!(a.try_mul(&DensePoly::one(gf(5))).is_err());
    }

    #[test]
    fn pow_examples() {
        let f3 = gf(3);
        let f = DensePoly::from_i64(f3, &[0, 1, 0, 1, 1]);
        assert_eq!(f.pow(0).unwrap(), DensePoly::one(f3));
        assert_eq!(f.pow(1).unwrap(), f);
        let x1 = DensePoly::from_i64(f3, &[1, 1]);
        assert_eq!(x1.pow(3).unwrap(), DensePoly::from_i64(f3, &[1, 0, 0, 1]));
        assert!(matches!(
            DensePoly::x(f3).pow(1 << 25),
            Err(Error::DegreeCap(_))
        ));
    }

    #[test]
    fn gcd_examples() {
        let f5 = gf(5);
        let a = DensePoly::from_i64(f5, &[-1, 0, 1]);
        let b = DensePoly::from_i64(f5, &[-1, 1]);
        assert_eq!(gcd(&a, &b).unwrap(), b);
        assert_eq!(gcd(&a, &DensePoly::one(f5)).unwrap(), DensePoly::one(f5));
        let f = DensePoly::from_i64(f5, &[2, 0, 3]);
        assert_eq!(gcd(&f, &DensePoly::zero(f5)).unwrap(), f.monic());
        assert_eq!(
            gcd(&DensePoly::zero(f5), &DensePoly::zero(f5)),
            Err(Error::ZeroGcd)
        );
    }

    #[test]
    fn squarefree_examples() {
        let f7 = gf(7);
        assert!(is_squarefree(&DensePoly::from_i64(f7, &[-1, 0, 1])).unwrap());
        assert!(!is_squarefree(&DensePoly::from_i64(f7, &[1, -2, 1])).unwrap());
        let f3 = gf(3);
        assert!(!is_squarefree(&DensePoly::from_i64(f3, &[1, 0, 0, 1, 0, 0, 1])).unwrap());
        assert_eq!(
            is_squarefree(&DensePoly::from_i64(f7, &[4])),
            Err(Error::ConstantPolynomial)
        );
    }

    #[test]
    fn eval_examples() {
        let f9 = FieldCtx::quadratic(3).unwrap();
        let i = f9.gen().unwrap();
        let g = DensePoly::from_i64(gf(3), &[1, 0, 1]);
        assert!(g.try_eval(i).unwrap().is_zero());
        let f5 = gf(5);
        let h = DensePoly::from_i64(f5, &[3, 1, 4]);
        assert_eq!(h.eval(f5.zero()), f5.from_u64(3));
        let cubic = DensePoly::from_i64(f5, &[0, -1, 0, 1]);
        assert_eq!(cubic.eval(f5.from_u64(2)), f5.from_u64(1));
        // GF(p^2) polynomial at a GF(p) point is an error
        let q = DensePoly::from_roots(f9, &[i]);
        assert!(q.try_eval(gf(3).one()).is_err());
    }

    #[test]
    fn div_rem_shift_reverse() {
        let f11 = gf(11);
        let a = DensePoly::from_i64(f11, &[3, 1, 4, 1, 5, 9]);
        let b = DensePoly::from_i64(f11, &[2, 6, 5]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.deg() < 2);
        let s = f11.from_u64(7);
        let sh = a.shift(s);
        for x in f11.elements() {
            assert_eq!(sh.eval(x), a.eval(x + s));
        }
        assert_eq!(a.reverse(5).reverse(5), a);
        assert_eq!(DensePoly::parse(f11, &a.to_coeff_string()).unwrap(), a);
    }

    #[test]
    fn display() {
        let f9 = FieldCtx::quadratic(3).unwrap();
        let f = DensePoly::parse(f9, "0,w,0,2*w,1").unwrap();
        assert_eq!(f.to_string(), "x^4 + (0+2*w)*x^3 + (0+1*w)*x");
    }

    fn arb_poly(ctx: FieldCtx, max_len: usize) -> impl Strategy<Value = DensePoly> {
        prop::collection::vec(0..ctx.size(), 0..max_len)
            .prop_map(move |v| DensePoly::new(ctx, v.into_iter().map(|i| ctx.from_index(i)).collect()))
    }

    proptest! {
        #[test]
        fn pow_is_additive_in_exponent(f in arb_poly(FieldCtx::quadratic(7).unwrap(), 5), m1 in 0u64..6, m2 in 0u64..6) {
            let lhs = f.pow(m1 + m2).unwrap();
            let rhs = f.pow(m1).unwrap().mul(&f.pow(m2).unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn product_degree_adds(a in arb_poly(gf(13), 8), b in arb_poly(gf(13), 8)) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            prop_assert_eq!(a.mul(&b).deg(), a.deg() + b.deg());
        }
    }

    /// Squarefree iff deg f distinct roots in a splitting field. Every polynomial of
    /// degree <= 2 over GF(p) splits in GF(p^2); for higher degrees the test only uses
    /// products of linear factors over GF(p^2), which split by construction.
    #[test]
    fn squarefree_matches_root_count() {
        for p in [3u64, 5, 7, 11, 13] {
            let ext = FieldCtx::quadratic(p).unwrap();
            let mut seed = p;
            for _ in 0..60 {
                let deg = 1 + (seed % 6) as usize;
                let roots: Vec<_> = (0..deg)
                    .map(|_| {
                        seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                        ext.from_index((seed >> 33) % ext.size())
                    })
                    .collect();
                let f = DensePoly::from_roots(ext, &roots);
                let distinct = ext.elements().filter(|&x| f.eval(x).is_zero()).count();
                assert_eq!(is_squarefree(&f).unwrap(), distinct == deg, "{f} over {ext}");
            }
        }
    }
}
