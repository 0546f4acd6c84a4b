//! Cartier-Manin matrices of hyperelliptic models y^2 = f(x) and p-ranks.
//!
//! For genus g and m = (p-1)/2 the matrix is `M[i][j] = c_{p*j - i}` (1-based),
//! where `c_k` is the coefficient of x^k in f^m. The p-rank is the rank of the
//! semilinear iterate `M^(s^(g-1)) * ... * M^(s) * M`, with `s` raising entries
//! to the p-th power.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ff::{FieldCtx, FieldElement};
use crate::matrix::Matrix;
use crate::poly::{is_squarefree, DensePoly};

/// How coefficients of f^m are extracted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    /// Full expansion by binary exponentiation.
    Naive,
    /// Two-ended linear recurrence from f * h' = m * f' * h.
    Recurrence,
    /// Recurrence when its preconditions hold, otherwise naive.
    Auto,
}

impl std::fmt::Display for Strategy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Strategy::Naive => "naive",
            Strategy::Recurrence => "recurrence",
            Strategy::Auto => "auto",
        })
    }
}

/// Coefficients c_0..=c_upto of f^m via k*f0*c_k = sum_j ((m+1)j - k) f_j c_{k-j}.
/// Requires f(0) != 0 and upto < p.
fn forward_block(f: &DensePoly, m: u64, upto: usize) -> Vec<FieldElement> {
    let ctx = f.ctx();
    let p = ctx.p();
    debug_assert!((upto as u64) < p);
    let f0 = f.coeff(0);
    let f0_inv = f0.inv().expect("f(0) != 0");
    let d = f.deg();
    let m1 = (m + 1) % p;
    let mut c = Vec::with_capacity(upto + 1);
    c.push(f0.pow(m));
    for k in 1..=upto {
        let mut s = ctx.zero();
        for j in 1..=d.min(k) {
            let fj = f.coeff(j);
            if fj.is_zero() {
                continue;
            }
            let w = (m1 * j as u64 % p + p - k as u64 % p) % p;
            s += ctx.from_u64(w) * fj * c[k - j];
        }
        let k_inv = ctx.from_u64(k as u64).inv().expect("k < p");
        c.push(s * k_inv * f0_inv);
    }
    c
}

fn resolve(f: &DensePoly, m: u64, indices: &[usize], strategy: Strategy) -> Result<Strategy> {
    let top = f.deg() as u64 * m;
    for &k in indices {
        if k as u64 > top {
            return Err(Error::IndexOutOfRange {
                index: k,
                top: top as usize,
            });
        }
    }
    let p = f.ctx().p();
    let reachable = || indices.iter().all(|&k| (k as u64) < p || top - (k as u64) < p);
    match strategy {
        Strategy::Naive => Ok(Strategy::Naive),
        Strategy::Recurrence => {
            if f.coeff(0).is_zero() {
                Err(Error::RecurrenceUnavailable("f(0) = 0".into()))
            } else if !reachable() {
                Err(Error::RecurrenceUnavailable(
                    "index crosses a multiple of p from both ends".into(),
                ))
            } else {
                Ok(Strategy::Recurrence)
            }
        }
        Strategy::Auto => Ok(if !f.coeff(0).is_zero() && reachable() {
            Strategy::Recurrence
        } else {
            Strategy::Naive
        }),
    }
}

/// Exact coefficients of f^m at the requested indices.
pub fn power_coeffs(
    f: &DensePoly,
    m: u64,
    indices: &[usize],
    strategy: Strategy,
) -> Result<BTreeMap<usize, FieldElement>> {
    power_coeffs_traced(f, m, indices, strategy).map(|(c, _)| c)
}

/// As [`power_coeffs`], also reporting the path actually taken.
pub fn power_coeffs_traced(
    f: &DensePoly,
    m: u64,
    indices: &[usize],
    strategy: Strategy,
) -> Result<(BTreeMap<usize, FieldElement>, Strategy)> {
    let used = resolve(f, m, indices, strategy)?;
    let ctx = f.ctx();
    let mut out = BTreeMap::new();
    if indices.is_empty() {
        return Ok((out, used));
    }
    match used {
        Strategy::Naive => {
            let h = f.pow(m)?;
            for &k in indices {
                out.insert(k, h.coeff(k));
            }
        }
        _ => {
            let p = ctx.p() as usize;
            let d = f.deg();
            let top = d * m as usize;
            let (low, high): (Vec<usize>, Vec<usize>) = indices.iter().partition(|&&k| k < p);
            if let Some(&hi) = low.iter().max() {
                let block = forward_block(f, m, hi);
                for k in low {
                    out.insert(k, block[k]);
                }
            }
            if let Some(deepest) = high.iter().map(|&k| top - k).max() {
                // x^(m d) h(1/x) = (x^d f(1/x))^m
                let rev = f.reverse(d);
                let block = forward_block(&rev, m, deepest);
                for k in high {
                    out.insert(k, block[top - k]);
                }
            }
        }
    }
    Ok((out, used))
}

/// A smooth affine model y^2 = f(x) with squarefree f of degree >= 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperellipticModel {
    f: DensePoly,
    genus: usize,
}

/// ceil(deg/2) - 1, clamped at zero for degree <= 2.
pub fn genus_of_degree(deg: usize) -> usize {
    deg.div_ceil(2).saturating_sub(1)
}

impl HyperellipticModel {
    pub fn new(f: DensePoly) -> Result<Self> {
        let d = f.deg();
        if f.is_zero() || d < 3 {
            return Err(Error::DegreeTooSmall(d));
        }
        if !is_squarefree(&f)? {
            return Err(Error::SingularModel);
        }
        Ok(HyperellipticModel {
            genus: genus_of_degree(d),
            f,
        })
    }

    pub fn f(&self) -> &DensePoly {
        &self.f
    }

    pub fn ctx(&self) -> FieldCtx {
        self.f.ctx()
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn p(&self) -> u64 {
        self.f.ctx().p()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartierData {
    pub matrix: Matrix,
    pub p: u64,
    pub iterate: Matrix,
    pub p_rank: usize,
    pub strategy: Strategy,
}

/// Indices p*j - i for i, j in 1..=g, as (i, j, k) with k possibly outside [0, top].
fn cartier_indices(p: u64, g: usize) -> Vec<(usize, usize, i64)> {
    let mut v = Vec::with_capacity(g * g);
    for i in 1..=g {
        for j in 1..=g {
            v.push((i, j, p as i64 * j as i64 - i as i64));
        }
    }
    v
}

/// The Cartier-Manin matrix from f alone (entries outside [0, m deg f] are zero).
pub fn cartier_manin_matrix(
    f: &DensePoly,
    genus: usize,
    strategy: Strategy,
) -> Result<(Matrix, Strategy)> {
    let ctx = f.ctx();
    let p = ctx.p();
    let m = (p - 1) / 2;
    let top = (f.deg() as u64 * m) as i64;
    let idx = cartier_indices(p, genus);
    let wanted: Vec<usize> = idx
        .iter()
        .filter(|(_, _, k)| *k >= 0 && *k <= top)
        .map(|&(_, _, k)| k as usize)
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    let (coeffs, used) = power_coeffs_traced(f, m, &wanted, strategy)?;
    let mut mat = Matrix::zeros(ctx, genus, genus);
    for (i, j, k) in idx {
        if k >= 0 && k <= top {
            mat[(i - 1, j - 1)] = coeffs[&(k as usize)];
        }
    }
    Ok((mat, used))
}

/// M^(s^(g-1)) * ... * M^(s) * M.
pub fn semilinear_iterate(m: &Matrix, g: usize) -> Matrix {
    let mut acc = m.clone();
    for k in 1..g as u32 {
        acc = m.frobenius_twist(k).mul(&acc);
    }
    acc
}

pub fn cartier_matrix(c: &HyperellipticModel) -> Result<CartierData> {
    cartier_matrix_with(c, Strategy::Auto)
}

pub fn cartier_matrix_with(c: &HyperellipticModel, strategy: Strategy) -> Result<CartierData> {
    let (matrix, used) = cartier_manin_matrix(&c.f, c.genus, strategy)?;
    let iterate = semilinear_iterate(&matrix, c.genus);
    let p_rank = iterate.rank();
    Ok(CartierData {
        matrix,
        p: c.p(),
        iterate,
        p_rank,
        strategy: used,
    })
}

/// p-rank of the model. When f(0) = 0 blocks the recurrence path, the model is
/// first translated by the smallest s in GF(p) with f(s) != 0; this keeps the
/// rank of the iterate but not the matrix entries.
pub fn p_rank(c: &HyperellipticModel) -> Result<usize> {
    let f = &c.f;
    if f.coeff(0).is_zero() {
        let ctx = f.ctx();
        if let Some(s) = (1..ctx.p()).map(|s| ctx.from_u64(s)).find(|&s| !f.eval(s).is_zero()) {
            let shifted = HyperellipticModel {
                f: f.shift(s),
                genus: c.genus,
            };
            return Ok(cartier_matrix(&shifted)?.p_rank);
        }
    }
    Ok(cartier_matrix(c)?.p_rank)
}

/// Superspecial: the Cartier-Manin matrix vanishes identically.
pub fn is_superspecial(c: &HyperellipticModel) -> Result<bool> {
    Ok(cartier_matrix(c)?.matrix.is_zero())
}
