//! Multivariate polynomial gcd: recursive content/primitive-part reduction
//! with a subresultant polynomial remainder sequence in the chosen main
//! variable. Results are always primitive with positive leading coefficient
//! under the graded-lex order; gcd(0, 0) = 0.

use super::multipoly::MultiPoly;
use super::var::VarId;

/// Pseudo-remainder of `f` by `g` in the variable `v`:
/// lc_v(g)^(m-n+1) * f = q*g + prem, with deg_v(prem) < deg_v(g).
fn prem(f: &MultiPoly, g: &MultiPoly, v: VarId) -> MultiPoly {
    let n = g.degree_in(v);
    let lc_g = g.lead_coeff_in(v);
    let mut r = f.clone();
    let m = r.degree_in(v);
    if m < n {
        // lc^(m-n+1) would be a negative power; by convention scale by lc^1.
        return &lc_g * &r;
    }
    let mut e = m - n + 1;
    while !r.is_zero() && r.degree_in(v) >= n {
        let d = r.degree_in(v);
        let lr = r.lead_coeff_in(v);
        let shift = MultiPoly::var_pow(v, d - n);
        r = &(&lc_g * &r) - &(&(&lr * &shift) * g);
        e -= 1;
    }
    for _ in 0..e {
        r = &lc_g * &r;
    }
    r
}

/// factor * base^(pos - neg), with exact division when the exponent is negative.
fn mul_by_signed_power(factor: MultiPoly, base: &MultiPoly, pos: u32, neg: u32) -> MultiPoly {
    if pos >= neg {
        let mut out = factor;
        for _ in 0..(pos - neg) {
            out = &out * base;
        }
        out
    } else {
        let mut div = MultiPoly::one();
        for _ in 0..(neg - pos) {
            div = &div * base;
        }
        factor
            .exact_div(&div)
            .expect("subresultant coefficient division must be exact")
    }
}

/// Content of `p` with respect to `v` (the gcd of its `v`-coefficients)
/// together with the primitive part. For `p = 0` returns `(0, 0)`.
fn split_content(p: &MultiPoly, v: VarId) -> (MultiPoly, MultiPoly) {
    if p.is_zero() {
        return (MultiPoly::zero(), MultiPoly::zero());
    }
    let coeffs = p.coeffs_by(v);
    let mut cont = MultiPoly::zero();
    for c in coeffs.values() {
        cont = poly_gcd(&cont, c);
        if cont.is_one() {
            break;
        }
    }
    let pp = p
        .exact_div(&cont)
        .expect("content must divide the polynomial");
    (cont, pp)
}

/// Primitive part of `p` with respect to `v`.
fn primitive_part(p: &MultiPoly, v: VarId) -> MultiPoly {
    split_content(p, v).1
}

/// Subresultant PRS gcd of two polynomials that are primitive with respect
/// to `v` and have positive degree in `v`. Returns a gcd primitive in `v`.
fn subresultant_gcd(a: &MultiPoly, b: &MultiPoly, v: VarId) -> MultiPoly {
    let (mut f_prev, mut f_cur) = if a.degree_in(v) >= b.degree_in(v) {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    let mut n_prev = f_prev.degree_in(v);
    let mut n_cur = f_cur.degree_in(v);
    let mut lc_prev = MultiPoly::one();
    let mut psi = MultiPoly::one();
    loop {
        if n_cur == 0 {
            // Coprime in v: the remainder sequence would terminate at a
            // nonzero v-free element.
            return MultiPoly::one();
        }
        let remainder = prem(&f_prev, &f_cur, v);
        if remainder.is_zero() {
            return primitive_part(&f_cur, v);
        }
        let neg_psi = -&psi;
        let divisor = mul_by_signed_power(-&lc_prev, &neg_psi, n_prev - n_cur, 0);
        let f_next = remainder
            .exact_div(&divisor)
            .expect("subresultant remainder division must be exact");
        let n_next = f_next.degree_in(v);
        let lc_cur = f_cur.lead_coeff_in(v);
        let mut psi_next = MultiPoly::one();
        for _ in 0..(n_prev - n_cur) {
            psi_next = &psi_next * &lc_cur;
        }
        psi_next = mul_by_signed_power(psi_next, &psi, n_cur + 1, n_prev);
        f_prev = f_cur;
        f_cur = f_next;
        n_prev = n_cur;
        n_cur = n_next;
        lc_prev = lc_cur;
        psi = psi_next;
    }
}

/// Greatest common divisor, primitive with positive leading coefficient.
pub fn poly_gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return b.normalized();
    }
    if b.is_zero() {
        return a.normalized();
    }
    let mut vars = a.vars();
    for v in b.vars() {
        if !vars.contains(&v) {
            vars.push(v);
        }
    }
    if vars.is_empty() {
        return MultiPoly::one();
    }
    // Main variable: smallest min-degree first (degree 0 collapses fastest),
    // then smallest max-degree.
    let v = *vars
        .iter()
        .min_by_key(|&&v| {
            let da = a.degree_in(v);
            let db = b.degree_in(v);
            (da.min(db), da.max(db))
        })
        .unwrap();
    let (cont_a, pp_a) = split_content(a, v);
    let (cont_b, pp_b) = split_content(b, v);
    let cont_gcd = poly_gcd(&cont_a, &cont_b);
    let pp_gcd = if a.degree_in(v) == 0 || b.degree_in(v) == 0 {
        MultiPoly::one()
    } else {
        subresultant_gcd(&pp_a, &pp_b, v)
    };
    (&cont_gcd * &pp_gcd).normalized()
}

/// Fold [`poly_gcd`] over a collection, stopping early at a unit.
pub fn poly_gcd_many<'a>(polys: impl IntoIterator<Item = &'a MultiPoly>) -> MultiPoly {
    let mut acc = MultiPoly::zero();
    for p in polys {
        acc = poly_gcd(&acc, p);
        if acc.is_one() {
            break;
        }
    }
    acc
}

/// Least common multiple, normalized; lcm with zero is zero.
pub fn poly_lcm(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() || b.is_zero() {
        return MultiPoly::zero();
    }
    let g = poly_gcd(a, b);
    let q = a.exact_div(&g).expect("gcd divides");
    (&q * b).normalized()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::multipoly::rat;
    use proptest::prelude::*;

    fn x(i: u32) -> MultiPoly {
        MultiPoly::var(VarId::x(i))
    }

    fn mu(i: u32) -> MultiPoly {
        MultiPoly::var(VarId::mu(i))
    }

    #[test]
    fn common_linear_factor() {
        let a = &(&x(1) * &x(1)) - &MultiPoly::one();
        let b = &x(1) - &MultiPoly::one();
        assert_eq!(poly_gcd(&a, &b), b);
    }

    #[test]
    fn gcd_with_zero_normalizes() {
        let p = (&x(1) + &MultiPoly::one()).scale(&rat(-6));
        assert_eq!(poly_gcd(&p, &MultiPoly::zero()), &x(1) + &MultiPoly::one());
        assert_eq!(
            poly_gcd(&MultiPoly::zero(), &MultiPoly::zero()),
            MultiPoly::zero()
        );
    }

    #[test]
    fn gcd_shift_polynomial_example() {
        // gcd(mu3 - mu1 mu2, (mu3 - mu1 mu2)^2 x1) is mu3 - mu1 mu2 up to
        // sign; verified by exact division both ways.
        let p = &mu(3) - &(&mu(1) * &mu(2));
        let q = &(&p * &p) * &x(1);
        let g = poly_gcd(&p, &q);
        assert!(g.exact_div(&p.normalized()).is_some());
        assert!(p.normalized().exact_div(&g).is_some());
        assert!(p.exact_div(&g).is_some());
        assert!(q.exact_div(&g).is_some());
    }

    #[test]
    fn lcm_times_gcd_is_product_up_to_unit() {
        let a = &(&x(1) * &x(2)) + &x(1);
        let b = &(&x(1) * &x(1)) - &x(1);
        let g = poly_gcd(&a, &b);
        let l = poly_lcm(&a, &b);
        let prod = (&a * &b).normalized();
        assert_eq!((&g * &l).normalized(), prod);
    }

    fn small_poly(seed: &[i64]) -> MultiPoly {
        // Deterministic small polynomial in x1, x2 built from a coefficient list.
        let vars = [VarId::x(1), VarId::x(2)];
        let mut p = MultiPoly::zero();
        for (k, &c) in seed.iter().enumerate() {
            let m = crate::poly::Monomial::from_pairs(vec![
                (vars[0], (k % 3) as u32),
                (vars[1], (k / 3 % 2) as u32),
            ]);
            p.add_term(m, rat(c));
        }
        p
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn gcd_divides_both(a in prop::collection::vec(-4i64..5, 1..6),
                            b in prop::collection::vec(-4i64..5, 1..6)) {
            let pa = small_poly(&a);
            let pb = small_poly(&b);
            let g = poly_gcd(&pa, &pb);
            if !pa.is_zero() || !pb.is_zero() {
                prop_assert!(pa.exact_div(&g).is_some());
                prop_assert!(pb.exact_div(&g).is_some());
            }
        }

        #[test]
        fn gcd_is_multiplicative(a in prop::collection::vec(-3i64..4, 1..5),
                                 b in prop::collection::vec(-3i64..4, 1..5),
                                 c in prop::collection::vec(-3i64..4, 1..5)) {
            let pa = small_poly(&a);
            let pb = small_poly(&b);
            let pc = small_poly(&c);
            prop_assume!(!pa.is_zero());
            prop_assume!(!pb.is_zero() || !pc.is_zero());
            let lhs = poly_gcd(&(&pa * &pb), &(&pa * &pc));
            let rhs = (&pa * &poly_gcd(&pb, &pc)).normalized();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn binomial_reduction_iff_divisible(m in prop::collection::vec(-3i64..4, 1..5)) {
            use crate::poly::multipoly::reduce_mod_binomial;
            let z1 = VarId::z(1);
            let z2 = VarId::z(2);
            let lam = MultiPoly::var(VarId::lambda());
            let gen = &(&MultiPoly::var(z1) * &MultiPoly::var(z2)) - &lam;
            // A z-polynomial multiplier built from the seed.
            let mut mult = MultiPoly::zero();
            for (k, &c) in m.iter().enumerate() {
                let mono = crate::poly::Monomial::from_pairs(vec![
                    (z1, (k % 2) as u32),
                    (z2, (k / 2 % 2) as u32),
                ]);
                mult.add_term(mono, rat(c));
            }
            let multiple = &mult * &gen;
            let r = reduce_mod_binomial(&multiple, z1, z2, &lam).unwrap();
            prop_assert!(r.is_zero());
            // And conversely: reduction zero implies divisibility.
            let probe = &multiple + &MultiPoly::var(z1);
            let r2 = reduce_mod_binomial(&probe, z1, z2, &lam).unwrap();
            prop_assert_eq!(r2.is_zero(), gen.divides(&probe));
        }
    }
}
