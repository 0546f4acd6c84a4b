//! Independent p-rank oracle from point counts.
//!
//! Counts points of y^2 = f(x) over the extensions GF(q^k), k = 1..g, rebuilds
//! the L-polynomial with Newton's identities and returns deg(L mod p), the
//! number of unit-root Frobenius eigenvalues. This shares no code with the
//! Cartier-Manin path beyond base-field arithmetic and polynomial parsing.

use crate::cartier::HyperellipticModel;
use crate::error::{Error, Result};
use crate::ff::{modp, FieldCtx};
use crate::poly::DensePoly;

/// Largest field the oracle will enumerate (31^3).
pub const MAX_COUNT_FIELD: u64 = 29_791;
pub const MAX_GENUS: usize = 3;

/// GF(p^n) as GF(p)[t]/(modulus), elements as coefficient arrays.
struct TowerField {
    p: u64,
    n: usize,
    /// low coefficients of the monic modulus t^n + sum r_i t^i
    modulus: Vec<u64>,
}

type Elt = [u64; 6];

impl TowerField {
    fn new(p: u64, n: usize) -> Self {
        assert!((1..=6).contains(&n));
        let modulus = find_irreducible(p, n);
        TowerField { p, n, modulus }
    }

    fn size(&self) -> u64 {
        self.p.pow(self.n as u32)
    }

    fn from_index(&self, mut i: u64) -> Elt {
        let mut e = [0; 6];
        for c in e.iter_mut().take(self.n) {
            *c = i % self.p;
            i /= self.p;
        }
        e
    }

    fn index(&self, e: &Elt) -> u64 {
        e[..self.n].iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    fn scalar(&self, a: u64) -> Elt {
        let mut e = [0; 6];
        e[0] = a % self.p;
        e
    }

    fn add(&self, a: &Elt, b: &Elt) -> Elt {
        let mut e = [0; 6];
        for i in 0..self.n {
            e[i] = modp::add(a[i], b[i], self.p);
        }
        e
    }

    fn mul(&self, a: &Elt, b: &Elt) -> Elt {
        let p = self.p;
        let n = self.n;
        let mut prod = [0u64; 11];
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            for j in 0..n {
                prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
            }
        }
        // t^n = -sum r_i t^i
        for k in (n..2 * n - 1).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for i in 0..n {
                prod[k - n + i] = modp::sub(prod[k - n + i], c * self.modulus[i] % p, p);
            }
        }
        let mut e = [0; 6];
        e[..n].copy_from_slice(&prod[..n]);
        e
    }

    fn is_zero(e: &Elt) -> bool {
        e.iter().all(|&c| c == 0)
    }
}

/// Smallest (in base-p order) monic irreducible of degree n, by Rabin's test.
fn find_irreducible(p: u64, n: usize) -> Vec<u64> {
    let ctx = FieldCtx::prime(p).expect("prime");
    if n == 1 {
        return vec![0];
    }
    let x = DensePoly::x(ctx);
    let prime_divisors: Vec<usize> = (2..=n).filter(|&r| n % r == 0 && (2..r).all(|s| r % s != 0)).collect();
    for i in 0..p.pow(n as u32) {
        let mut low = Vec::with_capacity(n);
        let mut t = i;
        for _ in 0..n {
            low.push(t % p);
            t /= p;
        }
        if low[0] == 0 {
            continue;
        }
        let mut coeffs: Vec<_> = low.iter().map(|&c| ctx.from_u64(c)).collect();
        coeffs.push(ctx.one());
        let f = DensePoly::new(ctx, coeffs);
        // x^(p^k) mod f
        let frob = |k: usize| {
            let mut r = x.clone();
            for _ in 0..k {
                r = powmod(&r, p, &f);
            }
            r
        };
        if frob(n).sub(&x).div_rem(&f).1.is_zero()
            && prime_divisors.iter().all(|&r| {
                let g = crate::poly::gcd(&frob(n / r).sub(&x), &f).expect("nonzero");
                g.is_constant()
            })
        {
            return low;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

fn powmod(base: &DensePoly, mut e: u64, modulus: &DensePoly) -> DensePoly {
    let mut acc = DensePoly::one(base.ctx());
    let mut b = base.div_rem(modulus).1;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&b).div_rem(modulus).1;
        }
        b = b.mul(&b).div_rem(modulus).1;
        e >>= 1;
    }
    acc
}

/// Point counts N_k = #C(GF(q^k)) for k = 1..=g of the smooth model of y^2 = f.
pub fn point_counts(model: &HyperellipticModel) -> Result<Vec<u64>> {
    let ctx = model.ctx();
    let g = model.genus();
    let q = ctx.size();
    if g > MAX_GENUS || q.checked_pow(g as u32).is_none_or(|s| s > MAX_COUNT_FIELD) {
        return Err(Error::GuardExceeded(format!(
            "genus {g} over {ctx} needs a field of size q^g > {MAX_COUNT_FIELD}"
        )));
    }
    let p = ctx.p();
    let e = ctx.ext_degree() as usize;
    let f = model.f();
    let mut counts = Vec::with_capacity(g);
    for k in 1..=g {
        let field = TowerField::new(p, e * k);
        let size = field.size();
        // embedding of the base field: w -> a square root of nu
        let w_image = if e == 2 {
            let nu = field.scalar(ctx.nonresidue().coords().0);
            let root = (0..size)
                .map(|i| field.from_index(i))
                .find(|r| field.mul(r, r) == nu)
                .expect("nu is a square in an even-degree extension");
            Some(root)
        } else {
            None
        };
        let embed = |c: crate::ff::FieldElement| {
            let (c0, c1) = c.coords();
            let mut v = field.scalar(c0);
            if let Some(w) = &w_image {
                v = field.add(&v, &field.mul(&field.scalar(c1), w));
            }
            v
        };
        let coeffs: Vec<Elt> = f.coeffs().iter().map(|&c| embed(c)).collect();
        let mut is_square = vec![false; size as usize];
        for i in 0..size {
            let y = field.from_index(i);
            is_square[field.index(&field.mul(&y, &y)) as usize] = true;
        }
        let mut n_aff = 0u64;
        for i in 0..size {
            let x = field.from_index(i);
            let mut v = [0; 6];
            for c in coeffs.iter().rev() {
                v = field.add(&field.mul(&v, &x), c);
            }
            n_aff += if TowerField::is_zero(&v) {
                1
            } else if is_square[field.index(&v) as usize] {
                2
            } else {
                0
            };
        }
        let n_inf = if f.deg() % 2 == 1 {
            1
        } else if is_square[field.index(coeffs.last().expect("nonzero f")) as usize] {
            2
        } else {
            0
        };
        counts.push(n_aff + n_inf);
    }
    Ok(counts)
}

/// Coefficients a_0..=a_2g of L(T) = prod (1 - alpha_i T).
pub fn l_polynomial(model: &HyperellipticModel) -> Result<Vec<i128>> {
    let counts = point_counts(model)?;
    let g = model.genus();
    let q = model.ctx().size() as i128;
    // S_k = q^k + 1 - N_k = sum alpha_i^k
    let s: Vec<i128> = counts
        .iter()
        .enumerate()
        .map(|(k, &n)| q.pow(k as u32 + 1) + 1 - n as i128)
        .collect();
    let mut a = vec![0i128; 2 * g + 1];
    a[0] = 1;
    for k in 1..=g {
        let acc: i128 = (1..=k).map(|i| s[i - 1] * a[k - i]).sum();
        debug_assert_eq!(acc % k as i128, 0);
        a[k] = -acc / k as i128;
    }
    // functional equation a_{2g-i} = q^(g-i) a_i
    for i in 0..g {
        a[2 * g - i] = q.pow((g - i) as u32) * a[i];
    }
    Ok(a)
}

/// Degree of L(T) mod p, which equals the p-rank.
pub fn prank_oracle(model: &HyperellipticModel) -> Result<usize> {
    let a = l_polynomial(model)?;
    let p = model.p() as i128;
    Ok(a.iter().rposition(|&c| c.rem_euclid(p) != 0).unwrap_or(0))
}
