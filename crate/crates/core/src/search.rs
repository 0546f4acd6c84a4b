//! The genus-5 (u, v) sweep and the exhaustive superspecial genus-2 scan.
//!
//! For a pair (u, v) the sweep forms
//!
//!   A(x) = (x+u)^2 + (ux+1)^2
//!   B(x) = (x+v)^4 + (x+v)^2 (vx+1)^2 + (vx+1)^4      (homogenized family)
//!   B(x) = (x+v)^4 + (x+v)^2 + 1                      (printed family)
//!   f    = A * B
//!
//! reads a = c_{p-1}, b = c_{2p-1}, c = c_{p-2}, d = c_{2p-2} off f^((p-1)/2)
//! and accepts the pair iff
//!
//!   ad - bc = 0,   a b^(p-1) + d^p = 0,   a^p + c^(p-1) d = 0.
//!
//! In the homogenized family y^2 = A(x)(1-u^2)(x^2-1) and
//! z^2 = B(x)(1-v^2)(x^2-1) are the pullbacks of y^2 = x^4 - 1 and
//! z^2 = x^6 - 1 under x -> (x+u)/(ux+1) and x -> (x+v)/(vx+1); they share the
//! branch factor x^2 - 1, so w^2 = f is the third quotient of their fiber
//! product, a genus-5 double cover of the first curve. The printed family is
//! not a pullback of z^2 = x^6 - 1 and only the w^2 = f part of that story holds.

use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cartier::{cartier_manin_matrix, power_coeffs, HyperellipticModel, Strategy};
use crate::covers::prank_fiber_product;
use crate::error::{Error, Result};
use crate::ff::{modp, FieldCtx, FieldElement};
use crate::poly::{gcd, is_squarefree, DensePoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepMode {
    First,
    All,
}

impl std::fmt::Display for SweepMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SweepMode::First => "first",
            SweepMode::All => "all",
        })
    }
}

impl std::str::FromStr for SweepMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "first" => Ok(SweepMode::First),
            "all" => Ok(SweepMode::All),
            _ => Err(Error::InvalidArgument(format!("unknown mode {s:?}"))),
        }
    }
}

/// Which quartic factor B(x) the sweep uses.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    #[default]
    Homogenized,
    Printed,
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Family::Homogenized => "homogenized",
            Family::Printed => "printed",
        })
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "homogenized" => Ok(Family::Homogenized),
            "printed" => Ok(Family::Printed),
            _ => Err(Error::InvalidArgument(format!("unknown family {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub p: u64,
    pub mode: SweepMode,
    pub family: Family,
    pub threads: usize,
    /// Rows of u per parallel batch.
    pub chunk: usize,
    /// Search (u, v) over GF(p^2) instead of GF(p).
    pub ext: bool,
}

pub const DEFAULT_CHUNK: usize = 16;

impl SweepConfig {
    pub fn new(p: u64, mode: SweepMode) -> Result<Self> {
        let cfg = SweepConfig {
            p,
            mode,
            family: Family::default(),
            threads: 1,
            chunk: DEFAULT_CHUNK,
            ext: false,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        check_residue(self.p)?;
        if self.threads == 0 || self.chunk == 0 {
            return Err(Error::InvalidArgument("threads and chunk must be positive".into()));
        }
        Ok(())
    }
}

fn check_residue(p: u64) -> Result<()> {
    FieldCtx::prime(p)?;
    if p % 12 != 11 {
        return Err(Error::Hypothesis(format!("p = {p} is not 11 mod 12")));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Exclusion {
    /// u or v in {1, -1}
    Uv,
    /// A and B share a root
    Gcd,
    /// f not squarefree
    Singular,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairOutcome {
    Solution,
    Excluded(Exclusion),
    NotSolution,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub tested: u64,
    pub excluded_uv: u64,
    pub excluded_gcd: u64,
    pub excluded_singular: u64,
}

impl Counts {
    fn record(&mut self, o: PairOutcome) {
        match o {
            PairOutcome::Solution | PairOutcome::NotSolution => self.tested += 1,
            PairOutcome::Excluded(Exclusion::Uv) => self.excluded_uv += 1,
            PairOutcome::Excluded(Exclusion::Gcd) => self.excluded_gcd += 1,
            PairOutcome::Excluded(Exclusion::Singular) => self.excluded_singular += 1,
        }
    }

    fn merge(&mut self, o: &Counts) {
        self.tested += o.tested;
        self.excluded_uv += o.excluded_uv;
        self.excluded_gcd += o.excluded_gcd;
        self.excluded_singular += o.excluded_singular;
    }

    pub fn total(&self) -> u64 {
        self.tested + self.excluded_uv + self.excluded_gcd + self.excluded_singular
    }
}

/// (A, B) for the pair.
pub fn ss5_factors(u: FieldElement, v: FieldElement, family: Family) -> (DensePoly, DensePoly) {
    let ctx = u.ctx();
    let one = ctx.one();
    let xu = DensePoly::new(ctx, vec![u, one]);
    let ux1 = DensePoly::new(ctx, vec![one, u]);
    let a = xu.mul(&xu).add(&ux1.mul(&ux1));
    let xv = DensePoly::new(ctx, vec![v, one]);
    let xv2 = xv.mul(&xv);
    let w2 = match family {
        Family::Homogenized => {
            let vx1 = DensePoly::new(ctx, vec![one, v]);
            vx1.mul(&vx1)
        }
        Family::Printed => DensePoly::one(ctx),
    };
    let b = xv2.mul(&xv2).add(&xv2.mul(&w2)).add(&w2.mul(&w2));
    (a, b)
}

/// The models of the two covers: A(x)(1-u^2)(x^2-1) and B(x)(1-v^2)(x^2-1).
pub fn ss5_cover_polys(u: FieldElement, v: FieldElement, family: Family) -> (DensePoly, DensePoly) {
    let ctx = u.ctx();
    let (a, b) = ss5_factors(u, v, family);
    let x2m1 = DensePoly::from_i64(ctx, &[-1, 0, 1]);
    let one = ctx.one();
    (
        a.mul(&x2m1).scale(one - u * u),
        b.mul(&x2m1).scale(one - v * v),
    )
}

/// The three equations on (a, b, c, d).
pub fn ss5_equations(a: FieldElement, b: FieldElement, c: FieldElement, d: FieldElement) -> [bool; 3] {
    let p = a.ctx().p();
    [
        (a * d - b * c).is_zero(),
        (a * b.pow(p - 1) + d.pow(p)).is_zero(),
        (a.pow(p) + c.pow(p - 1) * d).is_zero(),
    ]
}

/// (a, b, c, d) = (c_{p-1}, c_{2p-1}, c_{p-2}, c_{2p-2}) of f^((p-1)/2).
pub fn ss5_abcd(f: &DensePoly, strategy: Strategy) -> Result<[FieldElement; 4]> {
    let p = f.ctx().p() as usize;
    let m = (p as u64 - 1) / 2;
    let top = f.deg() * m as usize;
    let idx: Vec<usize> = [p - 1, 2 * p - 1, p - 2, 2 * p - 2]
        .into_iter()
        .filter(|&k| k <= top)
        .collect();
    let c = power_coeffs(f, m, &idx, strategy)?;
    let get = |k: usize| c.get(&k).copied().unwrap_or(f.ctx().zero());
    Ok([get(p - 1), get(2 * p - 1), get(p - 2), get(2 * p - 2)])
}

fn classify_exclusion(u: FieldElement, v: FieldElement, family: Family) -> Result<Option<Exclusion>> {
    let one = u.ctx().one();
    if u == one || u == -one || v == one || v == -one {
        return Ok(Some(Exclusion::Uv));
    }
    let (a, b) = ss5_factors(u, v, family);
    if !gcd(&a, &b)?.is_constant() {
        return Ok(Some(Exclusion::Gcd));
    }
    if !is_squarefree(&a.mul(&b))? {
        return Ok(Some(Exclusion::Singular));
    }
    Ok(None)
}

/// Generic check with a chosen coefficient path; `scaled` multiplies f by
/// (1-u^2)(1-v^2) first.
pub fn ss5_check_pair_with(
    u: FieldElement,
    v: FieldElement,
    family: Family,
    strategy: Strategy,
    scaled: bool,
) -> Result<PairOutcome> {
    if u.ctx() != v.ctx() {
        return Err(Error::ContextMismatch(u.ctx().describe(), v.ctx().describe()));
    }
    check_residue(u.ctx().p())?;
    if let Some(e) = classify_exclusion(u, v, family)? {
        return Ok(PairOutcome::Excluded(e));
    }
    let (a, b) = ss5_factors(u, v, family);
    let mut f = a.mul(&b);
    if scaled {
        let one = u.ctx().one();
        f = f.scale((one - u * u) * (one - v * v));
    }
    let strategy = match strategy {
        // entry-level values: the recurrence is only used when f(0) != 0
        Strategy::Recurrence if f.coeff(0).is_zero() => Strategy::Naive,
        s => s,
    };
    let [ca, cb, cc, cd] = ss5_abcd(&f, strategy)?;
    Ok(if ss5_equations(ca, cb, cc, cd).iter().all(|&t| t) {
        PairOutcome::Solution
    } else {
        PairOutcome::NotSolution
    })
}

pub fn ss5_check_pair(p: u64, u: FieldElement, v: FieldElement) -> Result<PairOutcome> {
    if u.ctx().p() != p {
        return Err(Error::ContextMismatch(format!("GF({p})"), u.ctx().describe()));
    }
    ss5_check_pair_with(u, v, Family::default(), Strategy::Auto, false)
}

/// u64 fast path over GF(p): per-v data precomputed, two recurrence blocks per pair.
struct Kernel {
    p: u64,
    family: Family,
    m: u64,
    inv: Vec<u64>,
    b: Vec<[u64; 5]>,
    b_squarefree: Vec<bool>,
}

/// Largest p for the u64 kernel: keeps inverse tables small and sums of
/// six products below 2^64.
pub const FAST_KERNEL_MAX_P: u64 = 1 << 20;

impl Kernel {
    fn new(p: u64, family: Family) -> Result<Self> {
        let ctx = FieldCtx::prime(p)?;
        let mut b = Vec::with_capacity(p as usize);
        let mut b_squarefree = Vec::with_capacity(p as usize);
        for v in 0..p {
            let (_, bp) = ss5_factors(ctx.one(), ctx.from_u64(v), family);
            let mut c = [0u64; 5];
            for (k, slot) in c.iter_mut().enumerate() {
                *slot = bp.coeff(k).coords().0;
            }
            b.push(c);
            b_squarefree.push(is_squarefree(&bp)?);
        }
        Ok(Kernel {
            p,
            family,
            m: (p - 1) / 2,
            inv: modp::inverse_table(p),
            b,
            b_squarefree,
        })
    }

    /// c_0..=c_{p-1} of f^m into `out`; requires f[0] != 0.
    fn forward(&self, f: &[u64; 7], out: &mut Vec<u64>) {
        let p = self.p;
        let jf: [u64; 7] = std::array::from_fn(|j| j as u64 * f[j] % p);
        let m1 = (self.m + 1) % p;
        let f0_inv = self.inv[f[0] as usize];
        out.clear();
        out.push(modp::pow(f[0], self.m, p));
        for k in 1..p as usize {
            let (mut s1, mut s2) = (0u64, 0u64);
            for j in 1..=k.min(6) {
                let c = out[k - j];
                s1 += jf[j] * c;
                s2 += f[j] * c;
            }
            let s = (m1 * (s1 % p) + (p - k as u64) * (s2 % p)) % p;
            out.push(s * self.inv[k] % p * f0_inv % p);
        }
    }

    fn check(&self, u: u64, v: u64, a: &[u64; 3], a_squarefree: bool, buf: &mut Vec<u64>) -> PairOutcome {
        let p = self.p;
        if u == 1 || u == p - 1 || v == 1 || v == p - 1 {
            return PairOutcome::Excluded(Exclusion::Uv);
        }
        let b = &self.b[v as usize];
        if shares_root(a, b, p) {
            return PairOutcome::Excluded(Exclusion::Gcd);
        }
        if !(a_squarefree && self.b_squarefree[v as usize]) {
            return PairOutcome::Excluded(Exclusion::Singular);
        }
        let mut f = [0u64; 7];
        for i in 0..3 {
            for j in 0..5 {
                f[i + j] = (f[i + j] + a[i] * b[j]) % p;
            }
        }
        if f[0] == 0 || f[6] == 0 {
            // entry values need the exact path
            let ctx = FieldCtx::prime(p).expect("prime");
            return ss5_check_pair_with(ctx.from_u64(u), ctx.from_u64(v), self.family, Strategy::Naive, false)
                .expect("valid pair");
        }
        let pu = p as usize;
        self.forward(&f, buf);
        let (a_, c_) = (buf[pu - 1], buf[pu - 2]);
        let mut rev = f;
        rev.reverse();
        self.forward(&rev, buf);
        // top = 3p - 3: c_{2p-2} = rev_{p-1}, c_{2p-1} = rev_{p-2}
        let (d_, b_) = (buf[pu - 1], buf[pu - 2]);
        let eq1 = (a_ * d_ + p * p - b_ * c_) % p == 0;
        let eq2 = (a_ * modp::pow(b_, p - 1, p) + d_) % p == 0;
        let eq3 = (a_ + modp::pow(c_, p - 1, p) * d_) % p == 0;
        if eq1 && eq2 && eq3 {
            PairOutcome::Solution
        } else {
            PairOutcome::NotSolution
        }
    }
}

/// Whether a quadratic and a quartic over GF(p) share a root (in any extension).
fn shares_root(a: &[u64; 3], b: &[u64; 5], p: u64) -> bool {
    debug_assert!(a[2] != 0);
    let lead_inv = modp::inv(a[2], p).expect("nonzero");
    let (a0, a1) = (a[0] * lead_inv % p, a[1] * lead_inv % p);
    // reduce b modulo x^2 + a1 x + a0
    let mut r = *b;
    for k in (2..5).rev() {
        let c = r[k];
        if c == 0 {
            continue;
        }
        r[k] = 0;
        r[k - 1] = modp::sub(r[k - 1], c * a1 % p, p);
        r[k - 2] = modp::sub(r[k - 2], c * a0 % p, p);
    }
    let (r0, r1) = (r[0], r[1]);
    if r1 == 0 {
        return r0 == 0;
    }
    let x = modp::sub(0, r0 * modp::inv(r1, p).expect("nonzero") % p, p);
    (x * x % p + a1 * x % p + a0) % p == 0
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub p: u64,
    pub mode: SweepMode,
    pub family: Family,
    pub ext: bool,
    pub solutions: Vec<(FieldElement, FieldElement)>,
    pub counts: Counts,
    pub elapsed_ms: u64,
}

/// Serialised form; field elements in the textual syntax.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchRecord {
    pub p: u64,
    pub mode: SweepMode,
    #[serde(default)]
    pub family: Family,
    #[serde(default)]
    pub ext: bool,
    pub solutions: Vec<[String; 2]>,
    pub counts: Counts,
    pub elapsed_ms: u64,
}

impl From<&SearchResult> for SearchRecord {
    fn from(r: &SearchResult) -> Self {
        SearchRecord {
            p: r.p,
            mode: r.mode,
            family: r.family,
            ext: r.ext,
            solutions: r
                .solutions
                .iter()
                .map(|(u, v)| [u.to_string(), v.to_string()])
                .collect(),
            counts: r.counts,
            elapsed_ms: r.elapsed_ms,
        }
    }
}

#[derive(Default)]
struct RowResult {
    counts: Counts,
    solutions: Vec<u64>,
}

fn scan_row(
    ctx: FieldCtx,
    family: Family,
    kernel: Option<&Kernel>,
    u_idx: u64,
    stop_at_first: bool,
    buf: &mut Vec<u64>,
) -> Result<RowResult> {
    let mut row = RowResult::default();
    let u = ctx.from_index(u_idx);
    let a_data = match kernel {
        Some(_) => {
            let (a, _) = ss5_factors(u, ctx.one(), family);
            let c = [a.coeff(0), a.coeff(1), a.coeff(2)].map(|e| e.coords().0);
            Some((c, is_squarefree(&a)?))
        }
        None => None,
    };
    for v_idx in 0..ctx.size() {
        let outcome = match (kernel, &a_data) {
            (Some(k), Some((a, sq))) => k.check(u_idx, v_idx, a, *sq, buf),
            _ => ss5_check_pair_with(u, ctx.from_index(v_idx), family, Strategy::Auto, false)?,
        };
        row.counts.record(outcome);
        if outcome == PairOutcome::Solution {
            row.solutions.push(v_idx);
            if stop_at_first {
                break;
            }
        }
    }
    Ok(row)
}

/// Re-check a solution on the naive path and confirm the p-rank story:
/// w^2 = f has p-rank 0 and, in the homogenized family, both covers and the
/// genus-5 fiber product have p-rank 0 as well.
pub fn verify_solution(u: FieldElement, v: FieldElement, family: Family) -> Result<()> {
    if ss5_check_pair_with(u, v, family, Strategy::Naive, false)? != PairOutcome::Solution {
        return Err(Error::Verification(format!("({u}, {v}) fails on the naive path")));
    }
    let (a, b) = ss5_factors(u, v, family);
    let w = HyperellipticModel::new(a.mul(&b))?;
    if crate::cartier::p_rank(&w)? != 0 {
        return Err(Error::Verification(format!("({u}, {v}): w^2 = f has positive p-rank")));
    }
    if family == Family::Printed {
        return Ok(());
    }
    let (e_u, d_v) = ss5_cover_polys(u, v, family);
    let pr = prank_fiber_product(&e_u, &d_v)?;
    if pr.genus_total != 5 || pr.p_rank_total != 0 {
        return Err(Error::Verification(format!(
            "({u}, {v}): genera {:?}, p-ranks {:?}",
            pr.genera, pr.p_rank_components
        )));
    }
    Ok(())
}

pub fn ss5_sweep(cfg: &SweepConfig) -> Result<SearchResult> {
    cfg.validate()?;
    let start = Instant::now();
    let ctx = if cfg.ext {
        FieldCtx::quadratic(cfg.p)?
    } else {
        FieldCtx::prime(cfg.p)?
    };
    let kernel = if !cfg.ext && cfg.p <= FAST_KERNEL_MAX_P {
        Some(Kernel::new(cfg.p, cfg.family)?)
    } else {
        None
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.threads)
        .build()
        .map_err(|e| Error::InvalidArgument(e.to_string()))?;
    let q = ctx.size();
    let stop = cfg.mode == SweepMode::First;
    let batch = match cfg.mode {
        SweepMode::First => (cfg.chunk * cfg.threads) as u64,
        SweepMode::All => q,
    };
    let mut counts = Counts::default();
    let mut solutions = Vec::new();
    let mut lo = 0u64;
    'outer: while lo < q {
        let hi = (lo + batch).min(q);
        let rows: Vec<Result<RowResult>> = pool.install(|| {
            (lo as usize..hi as usize)
                .into_par_iter()
                .with_min_len(cfg.chunk)
                .map_init(Vec::new, |buf, u| scan_row(ctx, cfg.family, kernel.as_ref(), u as u64, stop, buf))
                .collect()
        });
        for (u, row) in (lo..hi).zip(rows) {
            let row = row?;
            counts.merge(&row.counts);
            for &v in &row.solutions {
                solutions.push((ctx.from_index(u), ctx.from_index(v)));
            }
            if stop && !row.solutions.is_empty() {
                break 'outer;
            }
        }
        lo = hi;
    }
    for &(u, v) in &solutions {
        verify_solution(u, v, cfg.family)?;
    }
    Ok(SearchResult {
        p: cfg.p,
        mode: cfg.mode,
        family: cfg.family,
        ext: cfg.ext,
        solutions,
        counts,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// One JSON record per prime under `<root>/ss5/p=<P>.json`.
#[derive(Clone, Debug)]
pub struct ResultsCache {
    dir: PathBuf,
}

impl ResultsCache {
    pub fn new(root: impl AsRef<Path>) -> Result<Self> {
        let dir = root.as_ref().join("ss5");
        std::fs::create_dir_all(&dir)?;
        Ok(ResultsCache { dir })
    }

    pub fn path(&self, p: u64) -> PathBuf {
        self.dir.join(format!("p={p}.json"))
    }

    pub fn load(&self, p: u64) -> Result<Option<SearchRecord>> {
        match std::fs::read_to_string(self.path(p)) {
            Ok(s) => Ok(Some(serde_json::from_str(&s)?)),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
            Err(e) => Err(e.into()),
        }
    }

    /// Write to a temporary sibling, then rename over the target.
    pub fn store(&self, rec: &SearchRecord) -> Result<()> {
        let target = self.path(rec.p);
        let tmp = self.dir.join(format!(".p={}.json.{}.tmp", rec.p, std::process::id()));
        std::fs::write(&tmp, serde_json::to_string_pretty(rec)? + "\n")?;
        std::fs::rename(&tmp, &target)?;
        Ok(())
    }
}

/// Primes p = 11 mod 12 in [from, to].
pub fn ss5_primes(from: u64, to: u64) -> Vec<u64> {
    (from..=to)
        .filter(|&p| p % 12 == 11 && crate::ff::is_prime(p))
        .collect()
}

#[derive(Clone, Debug)]
pub struct RangeEntry {
    pub record: SearchRecord,
    pub cached: bool,
}

/// Sweep every admissible prime in [from, to], reusing cached records of the
/// same mode unless `force`.
pub fn ss5_range(
    from: u64,
    to: u64,
    template: &SweepConfig,
    cache: Option<&ResultsCache>,
    force: bool,
) -> Result<Vec<RangeEntry>> {
    let mut out = Vec::new();
    for p in ss5_primes(from, to) {
        if let (Some(c), false) = (cache, force) {
            if let Some(rec) = c.load(p)? {
                if rec.mode == template.mode && rec.ext == template.ext && rec.family == template.family {
                    out.push(RangeEntry { record: rec, cached: true });
                    continue;
                }
            }
        }
        let cfg = SweepConfig { p, ..*template };
        let rec = SearchRecord::from(&ss5_sweep(&cfg)?);
        if let Some(c) = cache {
            c.store(&rec)?;
        }
        out.push(RangeEntry { record: rec, cached: false });
    }
    Ok(out)
}

/// CSV summary row: `p,found,num_solutions,first_u,first_v,tested,elapsed_ms`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RangeRow {
    pub p: u64,
    pub found: bool,
    pub num_solutions: usize,
    pub first_u: String,
    pub first_v: String,
    pub tested: u64,
    pub elapsed_ms: u64,
}

impl From<&SearchRecord> for RangeRow {
    fn from(r: &SearchRecord) -> Self {
        let first = r.solutions.first();
        RangeRow {
            p: r.p,
            found: first.is_some(),
            num_solutions: r.solutions.len(),
            first_u: first.map(|s| s[0].clone()).unwrap_or_default(),
            first_v: first.map(|s| s[1].clone()).unwrap_or_default(),
            tested: r.counts.tested,
            elapsed_ms: r.elapsed_ms,
        }
    }
}

/// Upper bound on candidates for the exhaustive genus-2 scan.
pub const ENUMERATION_MAX_P: u64 = 5;

/// Coefficient k of f^m for m in {1, 2}, by direct convolution.
fn small_power_coeff(f: &[FieldElement], m: u64, k: usize) -> FieldElement {
    let ctx = f[0].ctx();
    let get = |i: usize| f.get(i).copied().unwrap_or(ctx.zero());
    match m {
        1 => get(k),
        2 => (0..=k).fold(ctx.zero(), |acc, i| acc + get(i) * get(k - i)),
        _ => unreachable!("p <= 5"),
    }
}

/// All monic squarefree f of degree 5 and 6 over GF(p^ext) with vanishing
/// Cartier-Manin matrix, degree 5 first, each degree in coefficient-index order.
pub fn superspecial_g2_enumeration(p: u64, ext: u32) -> Result<Vec<HyperellipticModel>> {
    let ctx = FieldCtx::new(p, ext)?;
    if p > ENUMERATION_MAX_P {
        return Err(Error::GuardExceeded(format!(
            "exhaustive genus-2 scan needs p <= {ENUMERATION_MAX_P}, got {p}"
        )));
    }
    let q = ctx.size();
    let m = (p - 1) / 2;
    let pu = p as usize;
    // M_{i,j} = c_{pj-i}, i, j in {1, 2}
    let entries = [pu - 1, 2 * pu - 1, pu - 2, 2 * pu - 2];
    let mut out = Vec::new();
    for deg in [5usize, 6] {
        let count = q.pow(deg as u32);
        let found: Vec<HyperellipticModel> = (0..count)
            .into_par_iter()
            .filter_map(|mut idx| {
                let mut c = Vec::with_capacity(deg + 1);
                for _ in 0..deg {
                    c.push(ctx.from_index(idx % q));
                    idx /= q;
                }
                c.push(ctx.one());
                if !entries.iter().all(|&k| small_power_coeff(&c, m, k).is_zero()) {
                    return None;
                }
                let f = DensePoly::new(ctx, c);
                if !is_squarefree(&f).ok()? {
                    return None;
                }
                let model = HyperellipticModel::new(f).ok()?;
                debug_assert!(cartier_manin_matrix(model.f(), 2, Strategy::Naive)
                    .map(|(mm, _)| mm.is_zero())
                    .unwrap_or(false));
                Some(model)
            })
            .collect();
        out.extend(found);
    }
    Ok(out)
}
