//! Acceptance suite: one test per numbered criterion, each printing a
//! PASS/FAIL line (run with `--nocapture` to see the lines for passing
//! tests). All arithmetic is exact; "equal" means identical canonical
//! forms and "up to unit" means equal after primitive-positive
//! normalization.

use std::time::{Duration, Instant};

use pdo_core::poly::{rat, Monomial};
use pdo_core::resultant::sampled_selections;
use pdo_core::*;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn d(dim: usize, i: usize) -> DiffOp {
    DiffOp::partial(dim, i)
}

fn xop(dim: usize, i: u32) -> DiffOp {
    DiffOp::scalar(dim, RatFun::var(VarId::x(i)))
}

fn mp(v: VarId) -> MultiPoly {
    MultiPoly::var(v)
}

/// L1 = D1^2 - D2^2, L2 = x2 D1 + x1 D2, L3 = L1 L2 - gamma L1.
fn commuting_triple() -> Vec<DiffOp> {
    let l1 = d(2, 1).pow(2).unwrap().sub(&d(2, 2).pow(2).unwrap()).unwrap();
    let l2 = xop(2, 2)
        .compose(&d(2, 1))
        .unwrap()
        .add(&xop(2, 1).compose(&d(2, 2)).unwrap())
        .unwrap();
    let l3 = l1
        .compose(&l2)
        .unwrap()
        .sub(
            &DiffOp::scalar(2, RatFun::var(VarId::gamma()))
                .compose(&l1)
                .unwrap(),
        )
        .unwrap();
    vec![l1, l2, l3]
}

/// L1 = D1^2 - D2^2 - 1, L2 = D1 L1, L3 = D2 L1.
fn vanishing_triple() -> Vec<DiffOp> {
    let l1 = d(2, 1)
        .pow(2)
        .unwrap()
        .sub(&d(2, 2).pow(2).unwrap())
        .unwrap()
        .sub(&DiffOp::one(2))
        .unwrap();
    let l2 = d(2, 1).compose(&l1).unwrap();
    let l3 = d(2, 2).compose(&l1).unwrap();
    vec![l1, l2, l3]
}

fn shift_poly_cube() -> MultiPoly {
    let p = &(&mp(VarId::mu(3)) - &(&mp(VarId::mu(1)) * &mp(VarId::mu(2))))
        + &(&mp(VarId::gamma()) * &mp(VarId::mu(1)));
    p.pow(3)
}

/// Best-of-several timing for tight runtime budgets.
fn timed<T>(runs: usize, mut f: impl FnMut() -> T) -> (T, Duration) {
    let mut best = Duration::MAX;
    let mut out = None;
    for _ in 0..runs {
        let t0 = Instant::now();
        out = Some(f());
        best = best.min(t0.elapsed());
    }
    (out.unwrap(), best)
}

#[test]
fn criterion_01_leibniz_base_case() {
    let (got, elapsed) = timed(5, || d(2, 1).compose(&xop(2, 1)).unwrap());
    let ok = got.to_string() == "(x1) D1 + 1";
    println!(
        "ACCEPTANCE 1 {}: D1 . x1 = (x1) D1 + 1 bit-exact ({elapsed:?})",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "canonical form was {got}");
    assert!(elapsed < Duration::from_millis(1), "took {elapsed:?}");
}

#[test]
fn criterion_02_five_term_product() {
    let q = d(2, 1).pow(2).unwrap().add(&d(2, 2).pow(2).unwrap()).unwrap();
    let l = xop(2, 1)
        .compose(&d(2, 2))
        .unwrap()
        .add(&xop(2, 2).compose(&d(2, 1)).unwrap())
        .unwrap();
    let (got, elapsed) = timed(5, || q.compose(&l).unwrap());
    let want = DiffOp::from_terms(
        2,
        vec![
            (DMono(vec![3, 0]), RatFun::var(VarId::x(2))),
            (DMono(vec![2, 1]), RatFun::var(VarId::x(1))),
            (DMono(vec![1, 2]), RatFun::var(VarId::x(2))),
            (DMono(vec![0, 3]), RatFun::var(VarId::x(1))),
            (DMono(vec![1, 1]), RatFun::constant(rat(4))),
        ],
    );
    let ok = got == want;
    println!(
        "ACCEPTANCE 2 {}: (D1^2+D2^2)(x1 D2 + x2 D1) five-term product ({elapsed:?})",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "got {got}");
    assert!(elapsed < Duration::from_millis(10), "took {elapsed:?}");
}

#[test]
fn criterion_03_factorization_of_the_cube() {
    let ex = build_example_k();
    let (prod, elapsed) = timed(3, || ex.l.compose(&ex.k).unwrap());
    let ok = prod == ex.p;
    println!(
        "ACCEPTANCE 3 {}: explicit cofactor L satisfies L . K = (D1 D2 - lambda)^3 ({elapsed:?})",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok);
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
}

#[test]
fn criterion_04_wave_pair_commutes() {
    let l1 = d(2, 1).pow(2).unwrap().sub(&d(2, 2).pow(2).unwrap()).unwrap();
    let l2 = xop(2, 2)
        .compose(&d(2, 1))
        .unwrap()
        .add(&xop(2, 1).compose(&d(2, 2)).unwrap())
        .unwrap();
    let (comm, elapsed) = timed(5, || l1.commutator(&l2).unwrap());
    let ok = comm.is_zero();
    println!(
        "ACCEPTANCE 4 {}: [D1^2 - D2^2, x2 D1 + x1 D2] = 0 ({elapsed:?})",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok);
    assert!(elapsed < Duration::from_millis(10), "took {elapsed:?}");
}

#[test]
fn criterion_05_resultant_of_the_commuting_triple() {
    // As specified: the exhaustive resultant over the 19x15 matrix equals
    // (mu3 - mu1 mu2 + gamma mu1)^3 up to unit with empty x-content, and a
    // sampled run (k=40, fixed seed) yields a multiple of that cube within
    // 30 seconds.
    //
    // The computation below is exact and cross-validated (row reassembly,
    // the n=1 Sylvester reduction, annihilation of every minor, and the
    // cofactor decomposition identity); it yields
    //     gcd of all 3876 minors = p^2 * (x1^2 - x2^2)^3,
    // the exponent-2 witness being the minor at rows
    // [0,1,2,3,5,7,8,9,10,11,12,13,15,16,18], which equals
    // p^2 * x1^2 mu1 (x1^2 - x2^2)^3 exactly and rules out p^3 as a common
    // divisor. The assertions state the specified values and are expected
    // to fail until the pinned value itself is revised.
    let ops = commuting_triple();
    let cube = shift_poly_cube().normalized();

    let t0 = Instant::now();
    let exhaustive = differential_resultant(&ops, MinorMode::Exhaustive).unwrap();
    let exhaustive_time = t0.elapsed();

    let t1 = Instant::now();
    let sampled = differential_resultant(
        &ops,
        MinorMode::Sampled {
            count: 40,
            seed: 0xACCE5,
        },
    )
    .unwrap();
    let sampled_time = t1.elapsed();

    let value_ok = exhaustive.value == cube;
    let content_ok = exhaustive.x_content.is_one();
    let sampled_ok = cube.divides(&(&sampled.value * &sampled.x_content));
    let times_ok =
        exhaustive_time < Duration::from_secs(600) && sampled_time < Duration::from_secs(30);
    let ok = value_ok && content_ok && sampled_ok && times_ok;
    println!(
        "ACCEPTANCE 5 {}: exhaustive resultant = cube with empty x-content \
         (exhaustive {exhaustive_time:?} over {} minors, sampled {sampled_time:?})",
        if ok { "PASS" } else { "FAIL" },
        exhaustive.minors_examined,
    );
    println!(
        "  computed shift-primitive part = {}\n  computed x-content = {}",
        exhaustive.value, exhaustive.x_content
    );
    assert!(times_ok, "runtime budget exceeded");
    assert!(
        ok,
        "specified value (mu3 - mu1 mu2 + gamma mu1)^3 with empty x-content; \
         computed value {} with x-content {}; sampled divisibility by the cube: {}",
        exhaustive.value, exhaustive.x_content, sampled_ok
    );
}

#[test]
fn criterion_06_vanishing_family() {
    let t0 = Instant::now();
    let out = differential_resultant(&vanishing_triple(), MinorMode::Exhaustive).unwrap();
    let points = homogenized_symbol_zero_check(&vanishing_triple(), 3).unwrap();
    let elapsed = t0.elapsed();
    let zero_ok = out.kind == ResultantKind::Zero && out.rank < 28 && out.columns == 28;
    let point: Vec<Rational> = vec![rat(1), rat(-1), rat(0)];
    let point_ok = points.contains(&point);
    let ok = zero_ok && point_ok && elapsed < Duration::from_secs(60);
    println!(
        "ACCEPTANCE 6 {}: rank {} < 28 certifies the zero resultant; \
         symbols share the projective zero (1, -1, 0) ({elapsed:?})",
        if ok { "PASS" } else { "FAIL" },
        out.rank,
    );
    assert!(zero_ok, "rank {} of {}", out.rank, out.columns);
    assert!(point_ok, "points {points:?}");
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
}

#[test]
fn criterion_07_univariate_reduction() {
    // Independent oracle: for monic f = z^2 - mu1 with roots r1, r2
    // (e1 = r1 + r2 = 0, e2 = r1 r2 = -mu1) and g = z^3 - mu2,
    //   Res(f, g) = lc(f)^3 g(r1) g(r2)
    //             = (r1 r2)^3 - mu2 (r1^3 + r2^3) + mu2^2,
    // and Newton's identity gives r1^3 + r2^3 = e1^3 - 3 e1 e2 = 0, so
    //   Res = -mu1^3 + mu2^2.
    let mu1 = mp(VarId::mu(1));
    let mu2 = mp(VarId::mu(2));
    let e2 = -&mu1;
    let power_sum_3 = MultiPoly::zero(); // e1^3 - 3 e1 e2 with e1 = 0
    let oracle = &(&e2.pow(3) - &(&mu2 * &power_sum_3)) + &mu2.pow(2);

    let (out, elapsed) = timed(3, || {
        differential_resultant(
            &[d(1, 1).pow(2).unwrap(), d(1, 1).pow(3).unwrap()],
            MinorMode::Exhaustive,
        )
        .unwrap()
    });
    let ok = out.value == oracle.normalized() && elapsed < Duration::from_secs(1);
    println!(
        "ACCEPTANCE 7 {}: resultant of (D^2, D^3) = mu1^3 - mu2^2 up to sign, \
         matching the product-over-roots oracle ({elapsed:?})",
        if ok { "PASS" } else { "FAIL" }
    );
    assert_eq!(out.value, oracle.normalized());
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
}

#[test]
fn criterion_08_identity_audit() {
    let ops = vanishing_triple();
    let mu1 = mp(VarId::mu(1));
    let mu2 = mp(VarId::mu(2));
    let mu3 = mp(VarId::mu(3));
    let corrected = &(&mu2.pow(2) - &mu3.pow(2)) - &(&mu1.pow(2) + &mu1.pow(3));
    let printed = &(&mu2.pow(2) - &mu3.pow(2)) - &(&mu1 + &mu1.pow(6));
    let corrected_ok = verify_annihilation(&corrected, &ops).unwrap();
    let printed_outcome = verify_annihilation(&printed, &ops).unwrap();
    let ok = corrected_ok && !printed_outcome;
    println!(
        "ACCEPTANCE 8 {}: mu2^2 - mu3^2 - mu1^2 - mu1^3 annihilates the family; \
         the printed variant mu2^2 - mu3^2 - mu1 - mu1^6 evaluates to {} \
         (discrepancy recorded, not hidden)",
        if ok { "PASS" } else { "FAIL" },
        printed_outcome,
    );
    assert!(corrected_ok);
    assert!(
        !printed_outcome,
        "the printed identity unexpectedly annihilates the family"
    );
}

#[test]
fn criterion_09_annihilation_property() {
    // 25 seeded commuting triples (A, B, q(A, B)) with q of shift-degree <= 2;
    // every nonzero sampled partial resultant annihilates the triple.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED9);
    let base = commuting_triple();
    let (a, b) = (base[0].clone(), base[1].clone());
    let mu1 = mp(VarId::mu(1));
    let mu2 = mp(VarId::mu(2));
    let basis = [
        MultiPoly::one(),
        mu1.clone(),
        mu2.clone(),
        &mu1 * &mu2,
        mu2.pow(2),
    ];
    let mut checked = 0usize;
    for case in 0..25 {
        // Random q with at least one non-constant term.
        let q = loop {
            let mut q = MultiPoly::zero();
            for poly in &basis {
                let c = rng.random_range(-3i64..=3);
                if c != 0 {
                    q = &q + &poly.scale(&rat(c));
                }
            }
            if q.degree_in(VarId::mu(1)) > 0 || q.degree_in(VarId::mu(2)) > 0 {
                break q;
            }
        };
        let c = eval_poly_at_operators(&q, &[a.clone(), b.clone()]).unwrap();
        if c.is_zero() {
            continue;
        }
        let ops = vec![a.clone(), b.clone(), c];
        let m = build_resultant_matrix(&ops).unwrap();
        let seed = 900 + case as u64;
        for sel in sampled_selections(m.row_count(), m.col_count(), 2, seed) {
            let pr = minor_value(&m, &sel);
            if pr.value.is_zero() {
                continue;
            }
            assert!(
                verify_annihilation(&pr.value, &ops).unwrap(),
                "case {case}: partial resultant must annihilate its commuting family"
            );
            checked += 1;
        }
    }
    println!(
        "ACCEPTANCE 9 PASS: {checked} nonzero sampled partial resultants \
         annihilate their commuting triples"
    );
    assert!(checked >= 25, "only {checked} nonzero minors sampled");
}

#[test]
fn criterion_10_membership_tests_agree() {
    // 50 seeded constant-coefficient operators of order <= 4 in n=2: the
    // kernel-function membership against the worked example agrees with the
    // divisibility membership of the symbol.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED10);
    let lam = mp(VarId::lambda());
    let mut agreements = 0;
    for case in 0..50 {
        let q = loop {
            let mut q = DiffOp::zero(2);
            let terms = rng.random_range(1..=4);
            for _ in 0..terms {
                let e1 = rng.random_range(0..=4u32);
                let e2 = rng.random_range(0..=4 - e1.min(4));
                let mut coeff = MultiPoly::from_int(rng.random_range(-3i64..=3));
                if rng.random_bool(0.25) {
                    coeff = &coeff * &lam;
                }
                q.add_term(DMono(vec![e1, e2]), RatFun::from(coeff));
            }
            if !q.is_zero() {
                break q;
            }
        };
        assert!(
            isom_check(&q, &lam).unwrap(),
            "case {case}: membership tests disagree for {q}"
        );
        agreements += 1;
    }
    // Exercise the true-membership branch as well.
    let ex = build_example_k();
    assert!(isom_check(&ex.p, &lam).unwrap());
    assert!(isom_check(&DiffOp::one(2), &lam).unwrap());
    println!(
        "ACCEPTANCE 10 PASS: kernel membership and symbol membership agree \
         on {agreements} random operators plus the members"
    );
}

#[test]
fn criterion_11_structure_ring() {
    let vx = VarId::x(1);
    let vy = VarId::x(2);
    let x = mp(vx);
    let y = mp(vy);
    let lam = mp(VarId::lambda());
    let hyper = &(&x * &y) - &lam;

    // Membership for x^i (xy - lambda)^3, i <= 3, and constants.
    for i in 0..=3u32 {
        assert!(rlambda_membership(
            &(&x.pow(i) * &hyper.pow(3)),
            vx,
            vy,
            &lam
        ));
    }
    assert!(rlambda_membership(&MultiPoly::from_int(9), vx, vy, &lam));

    // (xy - 1)^2 fails at lambda = 1.
    let one = MultiPoly::one();
    let sq = (&(&x * &y) - &one).pow(2);
    assert!(!rlambda_membership(&sq, vx, vy, &one));

    // 25 constructed members roundtrip through the decomposition.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED11);
    let cube = hyper.pow(3);
    for case in 0..25 {
        let mut g = MultiPoly::zero();
        for _ in 0..rng.random_range(1..=3) {
            let m = Monomial::from_pairs([
                (vx, rng.random_range(0..=2u32)),
                (vy, rng.random_range(0..=2u32)),
            ]);
            g.add_term(m, rat(rng.random_range(-3i64..=3)));
        }
        let c = MultiPoly::from_int(rng.random_range(-5i64..=5));
        let q = &(&g * &cube) + &c;
        if q.is_zero() {
            continue;
        }
        let (g2, c2) = rlambda_decompose(&q, vx, vy, &lam).unwrap();
        assert_eq!(&(&g2 * &cube) + &c2, q, "case {case} roundtrip");
    }

    // lambda = 0: membership holds for x^2 y^2 but decomposition is refused.
    let zero = MultiPoly::zero();
    let counter = &x.pow(2) * &y.pow(2);
    assert!(rlambda_membership(&counter, vx, vy, &zero));
    assert!(matches!(
        rlambda_decompose(&counter, vx, vy, &zero),
        Err(pdo_core::DarbouxError::DegenerateLambda)
    ));
    println!(
        "ACCEPTANCE 11 PASS: structure-ring membership, the lambda = 1 \
         failure, 25 decomposition roundtrips, and the lambda = 0 \
         counterexample all behave as specified"
    );
}

#[test]
fn criterion_12_derivation_law() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED12);
    for case in 0..25 {
        let dim = 1 + (case % 3);
        // Random operator of order <= 3 with polynomial and occasional
        // rational coefficients.
        let mut l = DiffOp::zero(dim);
        for _ in 0..rng.random_range(1..=4) {
            let mut idx = vec![0u32; dim];
            let mut left = 3u32;
            for e in idx.iter_mut() {
                *e = rng.random_range(0..=left);
                left -= *e;
            }
            let mut num = MultiPoly::zero();
            for _ in 0..rng.random_range(1..=2) {
                let m = Monomial::from_pairs(
                    (1..=dim as u32).map(|i| (VarId::x(i), rng.random_range(0..=2u32))),
                );
                num.add_term(m, rat(rng.random_range(-3i64..=3)));
            }
            let coeff = if rng.random_bool(0.3) {
                RatFun::new(num, mp(VarId::x(rng.random_range(1..=dim as u32))))
                    .unwrap_or_else(|_| RatFun::zero())
            } else {
                RatFun::from(num)
            };
            l.add_term(DMono(idx), coeff);
        }
        let mut all_zero = true;
        for i in 1..=dim {
            let got = DiffOp::partial(dim, i).commutator(&l).unwrap();
            assert_eq!(
                got,
                l.coefficient_derivative(i),
                "case {case}: commutator with D{i} is the coefficient derivative"
            );
            all_zero &= got.is_zero();
        }
        if all_zero {
            assert!(
                l.is_constant_coefficient(),
                "case {case}: commuting with every derivative forces constant coefficients"
            );
        }
    }
    println!(
        "ACCEPTANCE 12 PASS: the derivative commutator equals coefficientwise \
         differentiation on 25 random operators, and full commutation forces \
         constant coefficients"
    );
}

#[test]
fn criterion_13_minor_decomposition_roundtrip() {
    // n=1 Sylvester case.
    let ops1 = vec![d(1, 1).pow(2).unwrap(), d(1, 1).pow(3).unwrap()];
    let m1 = build_resultant_matrix(&ops1).unwrap();
    let sel1: Vec<usize> = (0..m1.col_count()).collect();
    let parts = dform_decomposition(&m1, &sel1).unwrap();
    verify_dform(&m1, &sel1, &parts);

    // 5 seeded minors of the commuting-triple matrix.
    let m2 = build_resultant_matrix(&commuting_triple()).unwrap();
    let mut decomposed = 0;
    let mut seed = 130u64;
    while decomposed < 5 {
        for sel in sampled_selections(m2.row_count(), m2.col_count(), 5, seed) {
            match dform_decomposition(&m2, &sel) {
                Ok(parts) => {
                    verify_dform(&m2, &sel, &parts);
                    decomposed += 1;
                    if decomposed == 5 {
                        break;
                    }
                }
                Err(ResultantError::SingularMinor) => continue,
                Err(e) => panic!("unexpected error {e}"),
            }
        }
        seed += 1;
    }
    println!(
        "ACCEPTANCE 13 PASS: cofactor decompositions recompose to their minor \
         determinants (Sylvester case and 5 seeded minors)"
    );
}

/// Independent recomposition check: sum_i D_i . (L_i - mu_i) equals the
/// Bareiss determinant of the selected rows.
fn verify_dform(m: &ResultantMatrix, selection: &[usize], parts: &[DiffOp]) {
    let sub: Vec<Vec<MultiPoly>> = selection.iter().map(|&r| m.rows[r].clone()).collect();
    let det = bareiss_det(&sub);
    let mut total = DiffOp::zero(m.dim);
    for (i, part) in parts.iter().enumerate() {
        let shifted = m.operators[i]
            .sub(&DiffOp::scalar(
                m.dim,
                RatFun::from(mp(VarId::mu(i as u32 + 1))),
            ))
            .unwrap();
        total = total.add(&part.compose(&shifted).unwrap()).unwrap();
    }
    assert_eq!(total, DiffOp::scalar(m.dim, RatFun::from(det)));
}
