//! Property tests: field and polynomial laws, coefficient paths, the
//! point-count oracle and the fiber-product bookkeeping.

use proptest::prelude::*;

use prank_core::cartier::{
    cartier_matrix_with, p_rank, power_coeffs, HyperellipticModel, Strategy as Path,
};
use prank_core::covers::kani_rosen_triple;
use prank_core::ff::{FieldCtx, FieldElement};
use prank_core::oracle::prank_oracle;
use prank_core::poly::{gcd, is_squarefree, DensePoly};

const PRIMES_50: [u64; 14] = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47];
const PRIMES_13: [u64; 5] = [3, 5, 7, 11, 13];

fn field(primes: &'static [u64], allow_ext: bool) -> impl Strategy<Value = FieldCtx> {
    (prop::sample::select(primes), prop::bool::weighted(if allow_ext { 0.3 } else { 0.0 }))
        .prop_map(|(p, ext)| if ext { FieldCtx::quadratic(p).unwrap() } else { FieldCtx::prime(p).unwrap() })
}

fn element(ctx: FieldCtx) -> impl Strategy<Value = FieldElement> {
    (0..ctx.size()).prop_map(move |i| ctx.from_index(i))
}

fn nonzero(ctx: FieldCtx) -> impl Strategy<Value = FieldElement> {
    (1..ctx.size()).prop_map(move |i| ctx.from_index(i))
}

/// Polynomial of exact degree `deg`.
fn poly_of_degree(ctx: FieldCtx, deg: usize) -> impl Strategy<Value = DensePoly> {
    (prop::collection::vec(element(ctx), deg), nonzero(ctx)).prop_map(move |(mut c, lead)| {
        c.push(lead);
        DensePoly::new(ctx, c)
    })
}

fn poly(ctx: FieldCtx, degs: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = DensePoly> {
    degs.prop_flat_map(move |d| poly_of_degree(ctx, d))
}

/// Squarefree models of genus 1 or 2 over small fields.
fn small_model() -> impl Strategy<Value = HyperellipticModel> {
    field(&PRIMES_13, true)
        .prop_flat_map(|ctx| poly(ctx, 3..=6))
        .prop_filter("squarefree", |f| is_squarefree(f).unwrap())
        .prop_map(|f| HyperellipticModel::new(f).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn field_laws((a, b, c) in field(&PRIMES_50, true).prop_flat_map(|k| (element(k), element(k), element(k)))) {
        prop_assert_eq!((a + b) * c, a * c + b * c);
        prop_assert_eq!((a * b) * c, a * (b * c));
        prop_assert_eq!(a - a, a.ctx().zero());
        let p = a.ctx().p();
        prop_assert_eq!(a.pow(p), a.frobenius());
        prop_assert_eq!((a * b).frobenius(), a.frobenius() * b.frobenius());
        prop_assert_eq!((a + b).frobenius(), a.frobenius() + b.frobenius());
        prop_assert_eq!(a.frobenius_pow(a.ctx().ext_degree()), a);
        if !a.is_zero() {
            prop_assert!((a * a.inv().unwrap()).is_one());
            prop_assert_eq!(a.pow(a.ctx().size() - 1), a.ctx().one());
        }
        if let Some(r) = (a * a).sqrt() {
            prop_assert_eq!(r * r, a * a);
        } else {
            prop_assert!(false, "squares have square roots");
        }
        prop_assert_eq!(a.ctx().parse(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn division_with_remainder((a, b) in field(&PRIMES_50, true).prop_flat_map(|k| (poly(k, 0..=12), poly(k, 0..=6)))) {
        let (q, r) = a.div_rem(&b);
        prop_assert_eq!(q.mul(&b).add(&r), a.clone());
        prop_assert!(r.is_zero() || r.deg() < b.deg());
        let g = gcd(&a, &b).unwrap();
        prop_assert!(a.div_rem(&g).1.is_zero());
        prop_assert!(b.div_rem(&g).1.is_zero());
        prop_assert!(g.leading().is_one());
        prop_assert_eq!(DensePoly::parse(a.ctx(), &a.to_coeff_string()).unwrap(), a);
    }

    #[test]
    fn product_rule_and_shift((a, b, s) in field(&PRIMES_50, true).prop_flat_map(|k| (poly(k, 0..=8), poly(k, 0..=8), element(k)))) {
        prop_assert_eq!(a.mul(&b).derivative(), a.derivative().mul(&b).add(&a.mul(&b.derivative())));
        // shift(s) is f(x + s)
        let x = s.ctx().from_u64(3);
        prop_assert_eq!(a.shift(s).eval(x), a.eval(x + s));
    }

    #[test]
    fn recurrence_matches_naive(f in field(&PRIMES_50, true).prop_flat_map(|k| poly(k, 3..=8))
        .prop_filter("f(0) != 0", |f| !f.coeff(0).is_zero()))
    {
        let p = f.ctx().p();
        let m = (p - 1) / 2;
        let top = f.deg() as u64 * m;
        let idx: Vec<usize> = (0..=top).filter(|&k| k < p || top - k < p).map(|k| k as usize).collect();
        let naive = power_coeffs(&f, m, &idx, Path::Naive).unwrap();
        let rec = power_coeffs(&f, m, &idx, Path::Recurrence).unwrap();
        prop_assert_eq!(naive, rec);
        // and the naive path agrees with an explicit product
        let full = (0..m).fold(DensePoly::one(f.ctx()), |acc, _| acc.mul(&f));
        for k in idx {
            prop_assert_eq!(full.coeff(k), power_coeffs(&f, m, &[k], Path::Naive).unwrap()[&k]);
        }
    }

    #[test]
    fn strategies_agree_on_cartier_matrices(f in field(&PRIMES_50, true).prop_flat_map(|k| poly(k, 3..=8))
        .prop_filter("usable model", |f| !f.coeff(0).is_zero() && is_squarefree(f).unwrap()))
    {
        let c = HyperellipticModel::new(f).unwrap();
        let a = cartier_matrix_with(&c, Path::Naive).unwrap();
        // small p against large genus can leave an entry out of reach from both ends
        let b = match cartier_matrix_with(&c, Path::Recurrence) {
            Ok(b) => b,
            Err(prank_core::Error::RecurrenceUnavailable(_)) => {
                let auto = cartier_matrix_with(&c, Path::Auto).unwrap();
                prop_assert_eq!(auto.strategy, Path::Naive);
                auto
            }
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        };
        prop_assert_eq!(a.matrix, b.matrix);
        prop_assert_eq!(a.p_rank, b.p_rank);
        prop_assert!(a.p_rank <= c.genus());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn prank_matches_point_counts(c in small_model()) {
        prop_assert_eq!(p_rank(&c).unwrap(), prank_oracle(&c).unwrap());
    }

    #[test]
    fn prank_is_invariant(
        (c, s, k) in small_model().prop_flat_map(|c| {
            let ctx = c.ctx();
            (Just(c), element(ctx), nonzero(ctx))
        })
    ) {
        let base = p_rank(&c).unwrap();
        let shifted = HyperellipticModel::new(c.f().shift(s)).unwrap();
        let scaled = HyperellipticModel::new(c.f().scale(k)).unwrap();
        prop_assert_eq!(p_rank(&shifted).unwrap(), base);
        prop_assert_eq!(p_rank(&scaled).unwrap(), base);
        // x -> 1/x on an even-degree model with f(0) != 0 keeps the curve
        let f = c.f();
        if f.deg() % 2 == 0 && !f.coeff(0).is_zero() {
            let rev = HyperellipticModel::new(f.reverse(f.deg())).unwrap();
            prop_assert_eq!(p_rank(&rev).unwrap(), base);
        }
    }

    #[test]
    fn quotient_degrees_add_up(
        (f1, f2) in field(&PRIMES_50, true)
            .prop_flat_map(|k| (poly(k, 3..=7), poly(k, 3..=7), prop::collection::vec(element(k), 0..=2)))
            .prop_map(|(a, b, shared)| {
                // force a few common roots
                let s = DensePoly::from_roots(a.ctx(), &shared);
                (a.mul(&s), b.mul(&s))
            })
            .prop_filter("squarefree", |(a, b)| is_squarefree(a).unwrap() && is_squarefree(b).unwrap())
    ) {
        match kani_rosen_triple(&f1, &f2) {
            Ok(t) => {
                let g = gcd(&f1, &f2).unwrap();
                prop_assert_eq!(t.f3.deg() + 2 * g.deg(), f1.deg() + f2.deg());
                let lhs = t.f3.mul(&g).mul(&g);
                let rhs = f1.mul(&f2);
                prop_assert_eq!(lhs.scale(rhs.leading()), rhs);
                prop_assert_eq!(t.genus_total, t.genera.0 + t.genera.1 + t.genera.2);
            }
            Err(e) => prop_assert_eq!(e, prank_core::Error::SquareProduct),
        }
    }
}
