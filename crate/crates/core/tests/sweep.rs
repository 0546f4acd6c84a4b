//! Genus-5 sweep and genus-2 enumeration: determinism, agreement of the fast
//! kernel with the generic paths, soundness of reported solutions, the cache.

use prank_core::cartier::{is_superspecial, p_rank, HyperellipticModel, Strategy};
use prank_core::covers::prank_fiber_product;
use prank_core::ff::FieldCtx;
use prank_core::oracle::prank_oracle;
use prank_core::poly::{is_squarefree, DensePoly};
use prank_core::search::{
    ss5_abcd, ss5_check_pair, ss5_check_pair_with, ss5_cover_polys, ss5_equations, ss5_factors,
    ss5_range, ss5_sweep, superspecial_g2_enumeration, verify_solution, Exclusion, Family,
    PairOutcome, RangeRow, ResultsCache, SearchRecord, SweepConfig, SweepMode,
};

const FAMILIES: [Family; 2] = [Family::Homogenized, Family::Printed];

fn config(p: u64, mode: SweepMode, family: Family, threads: usize) -> SweepConfig {
    let mut cfg = SweepConfig::new(p, mode).unwrap();
    cfg.family = family;
    cfg.threads = threads;
    cfg
}

#[test]
fn results_do_not_depend_on_thread_count() {
    for family in FAMILIES {
        for p in [23u64, 47] {
            for mode in [SweepMode::First, SweepMode::All] {
                let one = ss5_sweep(&config(p, mode, family, 1)).unwrap();
                let mut cfg = config(p, mode, family, 3);
                cfg.chunk = 2;
                let three = ss5_sweep(&cfg).unwrap();
                assert_eq!(one.solutions, three.solutions, "{family} p = {p} {mode}");
                assert_eq!(one.counts, three.counts, "{family} p = {p} {mode}");
            }
        }
    }
}

#[test]
fn solutions_are_sorted_and_counts_cover_the_grid() {
    for family in FAMILIES {
        let r = ss5_sweep(&config(47, SweepMode::All, family, 2)).unwrap();
        let idx: Vec<(u64, u64)> = r.solutions.iter().map(|(u, v)| (u.index(), v.index())).collect();
        assert!(idx.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(r.counts.total(), 47 * 47);
        // u or v in {1, -1}
        assert_eq!(r.counts.excluded_uv, 4 * 47 - 4);
    }
}

#[test]
fn kernel_recurrence_and_naive_agree_on_every_pair() {
    for family in FAMILIES {
        for p in [11u64, 23, 47] {
            let ctx = FieldCtx::prime(p).unwrap();
            let sweep = ss5_sweep(&config(p, SweepMode::All, family, 1)).unwrap();
            let mut naive_solutions = Vec::new();
            for u in ctx.elements() {
                for v in ctx.elements() {
                    let naive = ss5_check_pair_with(u, v, family, Strategy::Naive, false).unwrap();
                    let rec = ss5_check_pair_with(u, v, family, Strategy::Recurrence, false).unwrap();
                    assert_eq!(naive, rec, "{family} p = {p} ({u}, {v})");
                    if naive == PairOutcome::Solution {
                        naive_solutions.push((u, v));
                    }
                }
            }
            assert_eq!(sweep.solutions, naive_solutions, "{family} p = {p}");
        }
    }
}

#[test]
fn equation_truth_values_ignore_the_constant_factor() {
    for family in FAMILIES {
        for p in [11u64, 23, 47] {
            let ctx = FieldCtx::prime(p).unwrap();
            for (u, v) in (2..p - 1).flat_map(|u| (2..p - 1).map(move |v| (u, v))).step_by(3) {
                let (u, v) = (ctx.from_u64(u), ctx.from_u64(v));
                let (a, b) = ss5_factors(u, v, family);
                let f = a.mul(&b);
                let one = ctx.one();
                let g = f.scale((one - u * u) * (one - v * v));
                let [a0, b0, c0, d0] = ss5_abcd(&f, Strategy::Naive).unwrap();
                let [a1, b1, c1, d1] = ss5_abcd(&g, Strategy::Naive).unwrap();
                assert_eq!(ss5_equations(a0, b0, c0, d0), ss5_equations(a1, b1, c1, d1));
                assert_eq!(
                    ss5_check_pair_with(u, v, family, Strategy::Auto, true).unwrap(),
                    ss5_check_pair_with(u, v, family, Strategy::Auto, false).unwrap()
                );
            }
        }
    }
}

#[test]
fn every_solution_is_superspecial_with_p_rank_zero() {
    for family in FAMILIES {
        for p in [11u64, 23, 47, 59] {
            let r = ss5_sweep(&config(p, SweepMode::All, family, 1)).unwrap();
            assert!(!r.solutions.is_empty(), "{family} p = {p}");
            for &(u, v) in &r.solutions {
                let (a, b) = ss5_factors(u, v, family);
                let w = HyperellipticModel::new(a.mul(&b)).unwrap();
                assert!(is_superspecial(&w).unwrap(), "{family} p = {p} ({u}, {v})");
                verify_solution(u, v, family).unwrap();
                if p <= 23 {
                    // GF(p^2) point counts of the genus-2 model
                    assert_eq!(prank_oracle(&w).unwrap(), 0);
                }
                if family == Family::Homogenized {
                    let (e, d) = ss5_cover_polys(u, v, family);
                    let pr = prank_fiber_product(&e, &d).unwrap();
                    assert_eq!((pr.genera, pr.genus_total, pr.p_rank_total), ([1, 2, 2], 5, 0));
                }
            }
        }
    }
}

#[test]
fn homogenized_covers_are_pullbacks_of_the_fermat_models() {
    // y^2 = A(x)(1-u^2)(x^2-1) and z^2 = B(x)(1-v^2)(x^2-1) have the p-ranks of
    // y^2 = x^4 - 1 and z^2 = x^6 - 1 for every admissible pair
    let p = 23;
    let ctx = FieldCtx::prime(p).unwrap();
    let e0 = p_rank(&HyperellipticModel::new(DensePoly::from_i64(ctx, &[-1, 0, 0, 0, 1])).unwrap()).unwrap();
    let d0 = p_rank(&HyperellipticModel::new(DensePoly::from_i64(ctx, &[-1, 0, 0, 0, 0, 0, 1])).unwrap()).unwrap();
    assert_eq!((e0, d0), (0, 0));
    for u in (2..p - 1).map(|u| ctx.from_u64(u)) {
        for v in (2..p - 1).map(|v| ctx.from_u64(v)) {
            if let PairOutcome::Excluded(_) = ss5_check_pair(p, u, v).unwrap() {
                continue;
            }
            let (e, d) = ss5_cover_polys(u, v, Family::Homogenized);
            if !is_squarefree(&e).unwrap() || !is_squarefree(&d).unwrap() {
                continue;
            }
            assert_eq!(p_rank(&HyperellipticModel::new(e).unwrap()).unwrap(), e0);
            assert_eq!(p_rank(&HyperellipticModel::new(d).unwrap()).unwrap(), d0);
        }
    }
}

#[test]
fn pair_check_contract() {
    let ctx = FieldCtx::prime(11).unwrap();
    assert_eq!(
        ss5_check_pair(11, ctx.one(), ctx.from_u64(3)).unwrap(),
        PairOutcome::Excluded(Exclusion::Uv)
    );
    assert_eq!(
        ss5_check_pair(11, ctx.from_u64(3), -ctx.one()).unwrap(),
        PairOutcome::Excluded(Exclusion::Uv)
    );
    let f13 = FieldCtx::prime(13).unwrap();
    assert!(ss5_check_pair(13, f13.from_u64(2), f13.from_u64(3)).is_err());
    assert!(SweepConfig::new(13, SweepMode::First).is_err());
    assert!(SweepConfig::new(35, SweepMode::First).is_err());
    let mut cfg = SweepConfig::new(11, SweepMode::First).unwrap();
    cfg.threads = 0;
    assert!(ss5_sweep(&cfg).is_err());
}

#[test]
fn empty_at_107() {
    let r = ss5_sweep(&config(107, SweepMode::All, Family::Homogenized, 1)).unwrap();
    assert!(r.solutions.is_empty());
    assert_eq!(r.counts.total(), 107 * 107);
}

#[test]
fn cache_round_trip_and_range_reuse() {
    let dir = tempfile::tempdir().unwrap();
    let cache = ResultsCache::new(dir.path()).unwrap();
    assert!(cache.path(11).ends_with("ss5/p=11.json"));
    assert_eq!(cache.load(11).unwrap(), None);
    let template = config(11, SweepMode::All, Family::Homogenized, 1);
    let first = ss5_range(1, 50, &template, Some(&cache), false).unwrap();
    assert_eq!(first.iter().map(|e| e.record.p).collect::<Vec<_>>(), [11, 23, 47]);
    assert!(first.iter().all(|e| !e.cached));
    let again = ss5_range(1, 50, &template, Some(&cache), false).unwrap();
    assert!(again.iter().all(|e| e.cached));
    for (a, b) in first.iter().zip(&again) {
        assert_eq!(a.record, b.record);
    }
    let forced = ss5_range(20, 30, &template, Some(&cache), true).unwrap();
    assert!(!forced[0].cached);
    // a different family is not served from the cache
    let printed = SweepConfig { family: Family::Printed, ..template };
    let other = ss5_range(11, 11, &printed, Some(&cache), false).unwrap();
    assert!(!other[0].cached);
    assert_eq!(cache.load(11).unwrap().unwrap().family, Family::Printed);

    let rec: SearchRecord = cache.load(23).unwrap().unwrap();
    let json = serde_json::to_string(&rec).unwrap();
    assert_eq!(serde_json::from_str::<SearchRecord>(&json).unwrap(), rec);
    let row = RangeRow::from(&rec);
    assert_eq!((row.p, row.found, row.num_solutions), (23, true, rec.solutions.len()));
    // no temporary files left behind
    let names: Vec<String> = std::fs::read_dir(dir.path().join("ss5"))
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    assert!(names.iter().all(|n| n.starts_with("p=") && n.ends_with(".json")), "{names:?}");
}

#[test]
fn genus2_enumeration_over_gf5() {
    let ctx = FieldCtx::prime(5).unwrap();
    let found = superspecial_g2_enumeration(5, 1).unwrap();
    assert!(!found.is_empty());
    let keys: std::collections::BTreeSet<String> = found.iter().map(|m| m.f().to_coeff_string()).collect();
    assert_eq!(keys.len(), found.len());
    // brute force over all monic quintics and sextics with the generic matrix
    let mut brute = std::collections::BTreeSet::new();
    for deg in [5u32, 6] {
        for idx in 0..5u64.pow(deg) {
            let mut c: Vec<_> = (0..deg).map(|i| ctx.from_u64(idx / 5u64.pow(i) % 5)).collect();
            c.push(ctx.one());
            let f = DensePoly::new(ctx, c);
            if !is_squarefree(&f).unwrap() {
                continue;
            }
            let m = HyperellipticModel::new(f.clone()).unwrap();
            if is_superspecial(&m).unwrap() {
                brute.insert(f.to_coeff_string());
            }
        }
    }
    assert_eq!(keys, brute);
    for m in &found {
        assert_eq!(p_rank(m).unwrap(), 0);
        assert_eq!(prank_oracle(m).unwrap(), 0);
        let f = m.f();
        // y -> c y rescales f by c^2
        for c in 1..5 {
            let c = ctx.from_u64(c);
            assert!(is_superspecial(&HyperellipticModel::new(f.scale(c * c)).unwrap()).unwrap());
        }
        // x -> x + s and x -> a x (renormalised to monic) stay in the list
        for s in ctx.elements() {
            assert!(keys.contains(&f.shift(s).to_coeff_string()));
        }
        for a in (1..5).map(|a| ctx.from_u64(a)) {
            let coeffs: Vec<_> = f.coeffs().iter().enumerate().map(|(i, &c)| c * a.pow(i as u64)).collect();
            let g = DensePoly::new(ctx, coeffs).monic();
            assert!(keys.contains(&g.to_coeff_string()));
        }
    }
}

#[test]
fn genus2_enumeration_guard() {
    assert!(superspecial_g2_enumeration(7, 1).is_err());
    assert!(superspecial_g2_enumeration(3, 2).unwrap().is_empty());
}
