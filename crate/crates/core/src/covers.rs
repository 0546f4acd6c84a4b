//! Fiber products of two double covers of the line and their three quotients.
//!
//! For y^2 = f1 and z^2 = f2 the normalized fiber product D carries a Klein
//! four-group whose quotients are y^2 = f1, z^2 = f2 and w^2 = f3 with f3 the
//! squarefree part of f1*f2. Jac(D) is isogenous to the product of the three
//! quotient Jacobians, so genus and p-rank are sums over the quotients.

use serde::Serialize;

use crate::cartier::{genus_of_degree, p_rank, HyperellipticModel};
use crate::curves::{supersingular_lambdas, LegendreCurve};
use crate::error::{Error, Result};
use crate::ff::{FieldCtx, FieldElement};
use crate::poly::{gcd, is_squarefree, DensePoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientTriple {
    pub f_e: DensePoly,
    pub f2: DensePoly,
    /// Monic squarefree part of f_e * f2.
    pub f3: DensePoly,
    pub genera: (usize, usize, usize),
    pub genus_total: usize,
    pub prank_total: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberPRank {
    pub genera: [usize; 3],
    pub genus_total: usize,
    pub p_rank_components: [usize; 3],
    pub p_rank_total: usize,
}

/// p-rank of w^2 = f for a squarefree f of any positive degree; genus 0 gives 0.
fn component_prank(f: &DensePoly) -> Result<usize> {
    if genus_of_degree(f.deg()) == 0 {
        return Ok(0);
    }
    p_rank(&HyperellipticModel::new(f.clone())?)
}

fn check_input(f: &DensePoly) -> Result<()> {
    if f.deg() < 3 {
        return Err(Error::DegreeTooSmall(f.deg()));
    }
    if !is_squarefree(f)? {
        return Err(Error::SingularModel);
    }
    Ok(())
}

pub fn kani_rosen_triple(f1: &DensePoly, f2: &DensePoly) -> Result<QuotientTriple> {
    if f1.ctx() != f2.ctx() {
        return Err(Error::ContextMismatch(f1.ctx().describe(), f2.ctx().describe()));
    }
    check_input(f1)?;
    check_input(f2)?;
    let g = gcd(f1, f2)?;
    let (q, r) = f1.mul(f2).div_rem(&g.mul(&g));
    debug_assert!(r.is_zero());
    if q.is_constant() {
        return Err(Error::SquareProduct);
    }
    let f3 = q.monic();
    let genera = (
        genus_of_degree(f1.deg()),
        genus_of_degree(f2.deg()),
        genus_of_degree(f3.deg()),
    );
    Ok(QuotientTriple {
        f_e: f1.clone(),
        f2: f2.clone(),
        f3,
        genera,
        genus_total: genera.0 + genera.1 + genera.2,
        prank_total: None,
    })
}

impl QuotientTriple {
    pub fn pranks(&self) -> Result<FiberPRank> {
        let c = [
            component_prank(&self.f_e)?,
            component_prank(&self.f2)?,
            component_prank(&self.f3)?,
        ];
        Ok(FiberPRank {
            genera: [self.genera.0, self.genera.1, self.genera.2],
            genus_total: self.genus_total,
            p_rank_components: c,
            p_rank_total: c.iter().sum(),
        })
    }

    /// Fills `prank_total`.
    pub fn with_prank(mut self) -> Result<Self> {
        self.prank_total = Some(self.pranks()?.p_rank_total);
        Ok(self)
    }

    /// p-rank of the complement of the first quotient: f_2 + f_3.
    pub fn prank_new(&self) -> Result<usize> {
        Ok(component_prank(&self.f2)? + component_prank(&self.f3)?)
    }
}

pub fn prank_fiber_product(f1: &DensePoly, f2: &DensePoly) -> Result<FiberPRank> {
    kani_rosen_triple(f1, f2)?.pranks()
}

/// z^2 = x^n - t^n.
pub fn family_xn_tn(n: usize, t: FieldElement) -> Result<HyperellipticModel> {
    let ctx = t.ctx();
    if n < 3 {
        return Err(Error::DegreeTooSmall(n));
    }
    if n as u64 % ctx.p() == 0 {
        return Err(Error::Hypothesis(format!("p = {} divides n = {n}", ctx.p())));
    }
    if t.is_zero() {
        return Err(Error::Hypothesis("t = 0".into()));
    }
    let mut c = vec![ctx.zero(); n + 1];
    c[0] = -t.pow(n as u64);
    c[n] = ctx.one();
    HyperellipticModel::new(DensePoly::new(ctx, c))
}

/// {1 <= i <= g : 1 <= p*i mod n <= g} with g = ceil(n/2) - 1; its size is the
/// rank of the Cartier-Manin matrix of z^2 = x^n - t^n.
pub fn xn_rank_set(n: usize, p: u64) -> Vec<usize> {
    let g = genus_of_degree(n);
    (1..=g)
        .filter(|&i| {
            let r = (p as u128 * i as u128 % n as u128) as usize;
            (1..=g).contains(&r)
        })
        .collect()
}

fn legendre_poly(lambda: FieldElement) -> Result<DensePoly> {
    Ok(LegendreCurve::new(lambda)?.poly())
}

/// Fiber product of the Legendre curve with z^2 = x^n - t^n.
pub fn xn_tn_cover(n: usize, lambda: FieldElement, t: FieldElement) -> Result<QuotientTriple> {
    let d2 = family_xn_tn(n, t)?;
    kani_rosen_triple(&legendre_poly(lambda)?, d2.f())
}

/// Point of the projective line: `None` is infinity.
type Proj = Option<FieldElement>;

/// The Moebius map sending (z1, z2, z3) to (0, 1, lambda).
struct Moebius {
    z: [FieldElement; 3],
    lambda: FieldElement,
}

impl Moebius {
    fn new(z: [FieldElement; 3], lambda: FieldElement) -> Result<Self> {
        if z[0] == z[1] || z[1] == z[2] || z[0] == z[2] {
            return Err(Error::Hypothesis("source points not distinct".into()));
        }
        Ok(Moebius { z, lambda })
    }

    fn apply(&self, x: FieldElement) -> Proj {
        let [z1, z2, z3] = self.z;
        // cross-ratio: z1 -> 0, z2 -> 1, z3 -> infinity
        let s = if x == z3 {
            None
        } else {
            Some((x - z1) * (z2 - z3) * ((x - z3) * (z2 - z1)).inv().ok()?)
        };
        // inverse of w -> w(1 - lambda)/(w - lambda): 0 -> 0, 1 -> 1, infinity -> lambda
        let l = self.lambda;
        match s {
            None => Some(l),
            Some(s) => {
                let den = s + l - s.ctx().one();
                den.inv().ok().map(|d| l * s * d)
            }
        }
    }
}

/// Branch points x_i = L(zeta^(i+2) t), i = 1..n, with L sending
/// (t, zeta t, zeta^2 t) to (0, 1, lambda) and zeta of exact order n + 3.
pub fn prop44_case2_points(n: usize, lambda: FieldElement, t: FieldElement) -> Result<Vec<FieldElement>> {
    let p = lambda.ctx().p();
    if n % 2 == 0 {
        return Err(Error::Hypothesis(format!("n = {n} is even")));
    }
    let order = n as u64 + 3;
    if order % p == 0 || (p + 1) % order != 0 {
        return Err(Error::Hypothesis(format!("p = {p} is not -1 mod {order}")));
    }
    let ctx = FieldCtx::quadratic(p)?;
    let lambda = ctx.lift(lambda)?;
    let t = ctx.lift(t)?;
    if lambda.is_zero() || lambda.is_one() {
        return Err(Error::Hypothesis("lambda in {0, 1}".into()));
    }
    if t.is_zero() {
        return Err(Error::Hypothesis("t = 0".into()));
    }
    let zeta = ctx
        .elements()
        .find(|z| z.order() == Some(order))
        .ok_or_else(|| Error::Hypothesis(format!("no element of order {order} in {ctx}")))?;
    let l = Moebius::new([t, zeta * t, zeta * zeta * t], lambda)?;
    let mut xs = Vec::with_capacity(n);
    for i in 1..=n {
        let x = l
            .apply(zeta.pow(i as u64 + 2) * t)
            .ok_or_else(|| Error::Hypothesis(format!("x_{i} is the point at infinity")))?;
        if x.is_zero() || x.is_one() || x == lambda || xs.contains(&x) {
            return Err(Error::Hypothesis(format!("x_{i} = {x} collides")));
        }
        xs.push(x);
    }
    Ok(xs)
}

/// Fiber product of the Legendre curve with z^2 = prod (x - x_i).
pub fn prop44_case2_triple(n: usize, lambda: FieldElement, t: FieldElement) -> Result<QuotientTriple> {
    let xs = prop44_case2_points(n, lambda, t)?;
    let ctx = xs[0].ctx();
    let lambda = ctx.lift(lambda)?;
    kani_rosen_triple(&legendre_poly(lambda)?, &DensePoly::from_roots(ctx, &xs))
}

#[derive(Clone, Debug)]
pub struct Prop45Models {
    /// z^2 = x(x^(n-1) - 1)
    pub d1: HyperellipticModel,
    /// (x - lambda)(x^(n-2) + ... + 1); genus 0 when n = 3.
    pub d2: DensePoly,
    /// Quotients of the fiber product of the Legendre curve with D1.
    pub triple: QuotientTriple,
}

pub fn prop45_models(n: usize, lambda: FieldElement) -> Result<Prop45Models> {
    let ctx = lambda.ctx();
    let p = ctx.p();
    if n < 3 {
        return Err(Error::Hypothesis(format!("n = {n} < 3 leaves D1 rational")));
    }
    if (2 * (n as u64 - 1)) % p == 0 {
        return Err(Error::Hypothesis(format!("p = {p} divides 2(n-1)")));
    }
    if lambda.is_zero() || lambda.is_one() {
        return Err(Error::Hypothesis("lambda in {0, 1}".into()));
    }
    if lambda.pow(n as u64 - 1).is_one() {
        return Err(Error::Hypothesis(format!(
            "lambda = {lambda} is an (n-1)-th root of unity"
        )));
    }
    let mut c = vec![ctx.zero(); n + 1];
    c[1] = -ctx.one();
    c[n] = ctx.one();
    let d1 = HyperellipticModel::new(DensePoly::new(ctx, c))?;
    let geometric = DensePoly::new(ctx, vec![ctx.one(); n - 1]);
    let d2 = DensePoly::linear_root(lambda).mul(&geometric);
    let triple = kani_rosen_triple(&legendre_poly(lambda)?, d1.f())?;
    debug_assert_eq!(triple.f3, d2);
    Ok(Prop45Models { d1, d2, triple })
}

/// The genus-3 double cover of y^2 = x^4 + x^3 + x over GF(9) with 3-rank 0.
pub fn char3_genus3_witness() -> Result<QuotientTriple> {
    let ctx = FieldCtx::quadratic(3)?;
    let i = ctx.gen().expect("GF(9) has a generator");
    let c = |a: i64, b: i64| ctx.from_i64(a) + ctx.from_i64(b) * i;
    let e = DensePoly::new(ctx, vec![c(0, 0), c(1, 0), c(0, 0), c(1, 0), c(1, 0)]);
    let d2 = DensePoly::new(ctx, vec![c(0, 0), c(0, 1), c(0, 0), c(0, 2), c(1, 0)]);
    let d3 = DensePoly::new(ctx, vec![c(1, 0), c(2, 2), c(0, 0), c(2, 1), c(1, 0)]);
    let triple = kani_rosen_triple(&e, &d2)?;
    if triple.f3 != d3 {
        return Err(Error::Verification(format!(
            "third quotient {} differs from {d3}",
            triple.f3
        )));
    }
    triple.with_prank()
}

/// Fiber product of two distinct supersingular Legendre curves: genus 2, p-rank 0.
pub fn genus2_supersingular_pair(p: u64) -> Result<QuotientTriple> {
    if p <= 3 {
        return Err(Error::Hypothesis(format!("p = {p} is not > 3")));
    }
    let ls = supersingular_lambdas(p)?;
    if ls.len() < 2 {
        return Err(Error::Hypothesis(format!(
            "only {} supersingular lambda at p = {p}",
            ls.len()
        )));
    }
    let triple = kani_rosen_triple(&legendre_poly(ls[0])?, &legendre_poly(ls[1])?)?.with_prank()?;
    if triple.genus_total != 2 || triple.prank_total != Some(0) {
        return Err(Error::Verification(format!(
            "genus {} p-rank {:?}",
            triple.genus_total, triple.prank_total
        )));
    }
    Ok(triple)
}
