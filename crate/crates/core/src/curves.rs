//! Elliptic curves: Legendre models, Hasse invariants, supersingular lambdas.

use rayon::prelude::*;

use crate::cartier::{cartier_matrix, power_coeffs, HyperellipticModel, Strategy};
use crate::error::{Error, Result};
use crate::ff::{FieldCtx, FieldElement};
use crate::poly::{is_squarefree, DensePoly};

/// y^2 = x(x-1)(x-lambda) with lambda not in {0, 1}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LegendreCurve {
    lambda: FieldElement,
}

impl LegendreCurve {
    pub fn new(lambda: FieldElement) -> Result<Self> {
        if lambda.is_zero() || lambda.is_one() {
            return Err(Error::InvalidArgument(format!(
                "Legendre parameter {lambda} must avoid 0 and 1"
            )));
        }
        Ok(LegendreCurve { lambda })
    }

    pub fn lambda(&self) -> FieldElement {
        self.lambda
    }

    pub fn ctx(&self) -> FieldCtx {
        self.lambda.ctx()
    }

    /// x(x-1)(x-lambda)
    pub fn poly(&self) -> DensePoly {
        let ctx = self.ctx();
        DensePoly::from_roots(ctx, &[ctx.zero(), ctx.one(), self.lambda])
    }

    pub fn model(&self) -> HyperellipticModel {
        HyperellipticModel::new(self.poly()).expect("distinct roots")
    }
}

/// Coefficient of x^(p-1) in (x(x-1)(x-lambda))^m, m = (p-1)/2.
///
/// Computed as the coefficient of x^m in ((x-1)(x-lambda))^m, whose constant
/// term lambda^m is nonzero, so the forward recurrence applies.
pub fn hasse_invariant(e: &LegendreCurve) -> FieldElement {
    let ctx = e.ctx();
    let m = (ctx.p() - 1) / 2;
    let g = DensePoly::from_roots(ctx, &[ctx.one(), e.lambda]);
    power_coeffs(&g, m, &[m as usize], Strategy::Recurrence).expect("index m < p")[&(m as usize)]
}

/// The 1x1 Cartier-Manin entry of any genus-1 model (cubic or quartic).
pub fn hasse_invariant_model(c: &HyperellipticModel) -> Result<FieldElement> {
    if c.genus() != 1 {
        return Err(Error::InvalidArgument(format!("genus {} is not 1", c.genus())));
    }
    Ok(cartier_matrix(c)?.matrix[(0, 0)])
}

/// Coefficients of the Deuring polynomial sum_i C(m,i)^2 lambda^i over GF(p).
/// The Legendre Hasse invariant equals (-1)^m times its value at lambda.
pub fn deuring_coeffs(p: u64) -> Vec<u64> {
    let m = (p - 1) / 2;
    let mut out = Vec::with_capacity(m as usize + 1);
    let mut binom = 1u64; // C(m, i) mod p; i <= m < p keeps every i invertible
    for i in 0..=m {
        if i > 0 {
            binom = crate::ff::modp::mul(binom, (m - i + 1) % p, p);
            binom = crate::ff::modp::mul(binom, crate::ff::modp::inv(i, p).expect("i < p"), p);
        }
        out.push(crate::ff::modp::mul(binom, binom, p));
    }
    out
}

/// All lambda in GF(p^2) \ {0, 1} with vanishing Hasse invariant, in index order.
pub fn supersingular_lambdas(p: u64) -> Result<Vec<FieldElement>> {
    let ctx = FieldCtx::quadratic(p)?;
    let coeffs: Vec<FieldElement> = deuring_coeffs(p).into_iter().map(|c| ctx.from_u64(c)).collect();
    let found: Vec<FieldElement> = (0..ctx.size())
        .into_par_iter()
        .filter_map(|i| {
            let l = ctx.from_index(i);
            if l.is_zero() || l.is_one() {
                return None;
            }
            let h = coeffs.iter().rev().fold(ctx.zero(), |acc, &c| acc * l + c);
            h.is_zero().then_some(l)
        })
        .collect();
    Ok(found)
}

/// In characteristic 3 the Hasse invariant of y^2 = quartic is its x^2 coefficient.
pub fn quartic_hasse_char3(f: &DensePoly) -> Result<FieldElement> {
    let ctx = f.ctx();
    if ctx.p() != 3 {
        return Err(Error::InvalidArgument(format!(
            "characteristic {} is not 3",
            ctx.p()
        )));
    }
    if f.degree() != Some(4) {
        return Err(Error::InvalidArgument(format!("degree {} is not 4", f.deg())));
    }
    if !is_squarefree(f)? {
        return Err(Error::SingularModel);
    }
    Ok(f.coeff(2))
}
