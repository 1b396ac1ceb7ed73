use proptest::prelude::*;
use superjac::algebra::{
    discriminant, extended_gcd, geometric_poly, prime_powers_up_to, rat, cyclotomic_poly, reflection_identity_check,
    Field, PolyQ, PrimePower, RatFunc, Rational,
};
use superjac::cm_obstruction::invariant_automorphisms;
use superjac::curve_model::{chart_identity_check, delta_chart_order, hurwitz_genus};
use superjac::decomposition::{bigend_dichotomy, decomposition_ledger, new_part_dim, Verdict};
use superjac::differentials::{
    eigen_multiplicity, genus_formula, genus_lattice, interior_points, spectrum_from_lattice, full_spectrum,
    NewtonTriangle,
};
use superjac::elliptic::{depress_cubic_rational, j_invariant, WeierstrassData};
use superjac::galois::{classify_cubic_rational, geometric_square_test, rational_roots, resolvent_cubic, GaloisLabel};
use superjac::heart::{heart_centralizer_dim, Perm, PermGroup};

fn poly(max_deg: usize) -> impl Strategy<Value = PolyQ> {
    prop::collection::vec((-20i64..=20, 1i64..=4), 0..=max_deg + 1)
        .prop_map(|c| PolyQ::new(c.into_iter().map(|(n, d)| rat(n, d)).collect()))
}

fn nonzero_poly(max_deg: usize) -> impl Strategy<Value = PolyQ> {
    poly(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    small_rational().prop_filter("nonzero", |r| !Field::is_zero(r))
}

fn coprime_pair() -> impl Strategy<Value = (u64, PrimePower)> {
    let qs = prime_powers_up_to(64);
    (3u64..=30, prop::sample::select(qs)).prop_filter("coprime", |(n, q)| q.is_coprime_to(*n))
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (nonzero_poly(3), nonzero_poly(3)).prop_map(|(a, b)| RatFunc::new(a, b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn division_with_remainder(f in poly(6), g in nonzero_poly(4)) {
        let (q, r) = f.div_rem(&g).unwrap();
        prop_assert_eq!(&(&q * &g) + &r, f);
        prop_assert!(r.is_zero() || r.degree() < g.degree());
    }

    #[test]
    fn squarefree_reassembles(a in nonzero_poly(2), b in nonzero_poly(2), c in nonzero_poly(1)) {
        let f = &(&a * &b.pow(2)) * &c.pow(3);
        let parts = f.squarefree_factor().unwrap();
        let rebuilt = parts.iter().fold(PolyQ::one(), |acc, (g, m)| &acc * &g.pow(*m as u64));
        prop_assert_eq!(rebuilt.monic(), f.monic());
    }

    #[test]
    fn bezout(a in -100_000i64..100_000, b in -100_000i64..100_000) {
        prop_assume!(a != 0 || b != 0);
        let (g, u, v) = extended_gcd(a, b).unwrap();
        prop_assert_eq!(a * u + b * v, g);
        prop_assert!(g > 0 && a % g == 0 && b % g == 0);
    }

    #[test]
    fn discriminant_is_shift_invariant(f in nonzero_poly(4), c in small_rational()) {
        prop_assume!(f.degree().unwrap_or(0) >= 2);
        prop_assert_eq!(discriminant(&f.shift(&c)).unwrap(), discriminant(&f).unwrap());
    }

    #[test]
    fn genus_agreement((n, q) in coprime_pair()) {
        let t = NewtonTriangle::new(n, q).unwrap();
        let g = genus_formula(n, q).unwrap();
        prop_assert_eq!(genus_lattice(&t), g);
        prop_assert_eq!(hurwitz_genus(n, q).unwrap(), g);
        prop_assert_eq!(full_spectrum(n, q).unwrap().total(), g);
        prop_assert_eq!(spectrum_from_lattice(&t), full_spectrum(n, q).unwrap());
    }

    #[test]
    fn involution_partitions_the_rectangle((n, q) in coprime_pair()) {
        let t = NewtonTriangle::new(n, q).unwrap();
        let qq = q.q();
        let inside: std::collections::BTreeSet<(u64, u64)> = interior_points(&t).iter().map(|e| (e.j, e.i)).collect();
        for j in 1..n {
            for i in 1..qq {
                prop_assert!(qq * j + n * i != n * qq);
                let flipped = (n - j, qq - i);
                prop_assert!(inside.contains(&(j, i)) != inside.contains(&flipped));
            }
        }
        prop_assert_eq!(2 * inside.len() as u64, (n - 1) * (qq - 1));
    }

    #[test]
    fn multiplicity_zero_and_top_band((n, q) in coprime_pair()) {
        let qq = q.q();
        for i in 1..qq {
            let m = eigen_multiplicity(n, q, i).unwrap();
            prop_assert_eq!(m == 0, n * i < qq);
            if i >= qq - qq / q.p() {
                prop_assert!(m >= 1);
            }
        }
    }

    #[test]
    fn ledger_bookkeeping((n, q) in coprime_pair()) {
        let levels = decomposition_ledger(n, q).unwrap();
        let sum: u64 = levels.iter().map(|l| l.new_part_dim).sum();
        prop_assert_eq!(sum, genus_formula(n, q).unwrap());
        for l in &levels {
            prop_assert_eq!(2 * l.new_part_dim, (n - 1) * l.field_degree);
        }
        let p = PrimePower::from_parts(q.p(), 1).unwrap();
        prop_assert_eq!(new_part_dim(n, p).unwrap(), genus_formula(n, p).unwrap());
        prop_assert_eq!(delta_chart_order(n, q).unwrap(), q.q());
    }

    #[test]
    fn cubic_label_is_shift_invariant(c in prop::collection::vec(-9i64..=9, 3), s in small_rational()) {
        let f = PolyQ::from_ints(&[c[0], c[1], c[2], 1]);
        prop_assume!(f.is_squarefree());
        prop_assert_eq!(classify_cubic_rational(&f.shift(&s)).unwrap(), classify_cubic_rational(&f).unwrap());
    }

    #[test]
    fn cubic_with_rational_root_is_reducible(r in small_rational(), b in small_rational(), c in small_rational()) {
        let f = &PolyQ::new(vec![-r, Rational::one()]) * &PolyQ::new(vec![c, b, Rational::one()]);
        prop_assume!(f.is_squarefree());
        prop_assert_eq!(classify_cubic_rational(&f).unwrap(), GaloisLabel::Reducible);
    }

    #[test]
    fn resolvent_of_quadratic_pair_has_root(a in prop::collection::vec(-9i64..=9, 2), b in prop::collection::vec(-9i64..=9, 2)) {
        // The Galois group of a product of two quadratics sits inside V4, hence in D4.
        let f = &PolyQ::from_ints(&[a[0], a[1], 1]) * &PolyQ::from_ints(&[b[0], b[1], 1]);
        prop_assume!(f.is_squarefree());
        prop_assert!(!rational_roots(&resolvent_cubic(&f).unwrap()).is_empty());
    }

    #[test]
    fn square_test_ignores_squares(u in ratfunc(), v in ratfunc()) {
        let uv2 = u.clone() * v.clone() * v;
        prop_assert_eq!(geometric_square_test(&uv2).unwrap().is_square, geometric_square_test(&u).unwrap().is_square);
    }

    #[test]
    fn squares_multiply(u in ratfunc(), w in ratfunc()) {
        let (a, b) = (geometric_square_test(&u).unwrap(), geometric_square_test(&w).unwrap());
        if a.is_square && b.is_square {
            prop_assert!(geometric_square_test(&(u * w)).unwrap().is_square);
        }
    }

    #[test]
    fn j_is_a_weierstrass_invariant(p in small_rational(), q in small_rational(), u in nonzero_rational()) {
        let Ok(w) = WeierstrassData::from_rationals(p.clone(), q.clone()) else { return Ok(()) };
        let scaled = WeierstrassData::from_rationals(p * Field::pow(&u, 4), q * Field::pow(&u, 6)).unwrap();
        prop_assert_eq!(j_invariant(&w).unwrap(), j_invariant(&scaled).unwrap());
    }

    #[test]
    fn j_is_shift_invariant(c in prop::collection::vec(-9i64..=9, 3), s in small_rational()) {
        let f = PolyQ::from_ints(&[c[0], c[1], c[2], 1]);
        prop_assume!(f.is_squarefree());
        let j = |g: &PolyQ| j_invariant(&depress_cubic_rational(g).unwrap()).unwrap();
        prop_assert_eq!(j(&f.shift(&s)), j(&f));
    }

    #[test]
    fn chart_identity_holds(c in prop::collection::vec(-6i64..=6, 4..=7), q in prop::sample::select(prime_powers_up_to(9))) {
        let mut c = c;
        let n = c.len() - 1;
        if c[n] == 0 { c[n] = 1; }
        prop_assume!(q.is_coprime_to(n as u64));
        let f = PolyQ::from_ints(&c);
        prop_assert!(chart_identity_check(&f, q).unwrap());
    }

    #[test]
    fn bigend_square_bound(d in 1u64..=40, k in 1u64..=20) {
        let v = bigend_dichotomy(d, d, k).unwrap();
        prop_assert_eq!(v == Verdict::OutOfBound, k > 4);
    }

    #[test]
    fn centralizer_conjugation_invariant(n in 3usize..=5, images in Just((0..6usize).collect::<Vec<_>>()).prop_shuffle()) {
        let by = Perm::from_images(images.into_iter().filter(|&x| x < n).collect()).unwrap();
        let p = [2u64, 3, 5, 7].into_iter().find(|p| !(n as u64).is_multiple_of(*p)).unwrap();
        for g in [PermGroup::cyclic(n), PermGroup::symmetric(n), PermGroup::trivial(n)] {
            prop_assert_eq!(heart_centralizer_dim(&g.conjugate_by(&by), p).unwrap(), heart_centralizer_dim(&g, p).unwrap());
        }
    }
}

#[test]
fn geometric_poly_factors_over_levels() {
    for q in prime_powers_up_to(4096) {
        let product = (1..=q.r()).fold(PolyQ::one(), |acc, i| &acc * &cyclotomic_poly(q.p(), i).unwrap());
        assert_eq!(product, geometric_poly(q.q()).unwrap(), "q = {q}");
        if q.q() <= 512 {
            assert!(reflection_identity_check(q.q()).unwrap(), "q = {q}");
        }
    }
}

#[test]
fn bezout_on_many_pairs() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
    for _ in 0..10_000 {
        let (a, b): (i64, i64) = (rng.gen_range(-1_000_000..1_000_000), rng.gen_range(-1_000_000..1_000_000));
        if a == 0 && b == 0 {
            continue;
        }
        let (g, u, v) = extended_gcd(a, b).unwrap();
        assert_eq!(a * u + b * v, g);
    }
}

#[test]
fn doubly_transitive_hearts_are_absolutely_irreducible() {
    for (g, n) in [
        (PermGroup::symmetric(3), 3u64),
        (PermGroup::symmetric(4), 4),
        (PermGroup::alternating(4), 4),
        (PermGroup::symmetric(5), 5),
        (PermGroup::alternating(5), 5),
    ] {
        for p in [2u64, 3, 5, 7, 11].into_iter().filter(|p| n % p != 0) {
            assert_eq!(heart_centralizer_dim(&g, p).unwrap(), 1, "degree {n}, p = {p}");
        }
    }
    for n in 3..=5usize {
        assert_eq!(heart_centralizer_dim(&PermGroup::trivial(n), 7).unwrap(), (n - 1) * (n - 1));
    }
}

#[test]
fn invariant_sets_are_closed_under_powers() {
    for q in prime_powers_up_to(200) {
        for n in 3..=12u64 {
            let Ok(r) = invariant_automorphisms(n, q) else { continue };
            for sets in [&r.invariant_ms, &r.zero_set_ms] {
                for &m in sets.iter() {
                    let mut k = m * m % q.q();
                    while k != 1 {
                        assert!(sets.contains(&k), "({n}, {q}): {m} invariant but {k} not");
                        k = k * m % q.q();
                    }
                }
            }
        }
    }
}

#[test]
fn q_two_has_half_integral_w() {
    let r = superjac::cm_obstruction::square_case_feasible(5, PrimePower::new(2).unwrap()).unwrap();
    assert_eq!(r.dim_w, rat(1, 2));
    assert!(!r.feasible);
}

#[test]
fn reflection_truth_table() {
    // Phi_q(t) = (t^q - 1) / (t^(q/p) - 1), evaluated at points away from the
    // roots of unity; a polynomial identity of bounded degree holding at more
    // points than its degree holds identically.
    for (q, p) in [(2u32, 2u32), (3, 3), (4, 2), (8, 2), (9, 3)] {
        let pw = |x: &Rational, e: u32| -> Rational { Field::pow(x, e as u64) };
        let phi = |x: &Rational| (pw(x, q) - Rational::one()) / (pw(x, q / p) - Rational::one());
        let holds = (4..=(2 * q as i64 + 6)).all(|k| {
            let t = Rational::new(k.into(), 3.into());
            pw(&t, q) * phi(&(Rational::one() / &t)) - phi(&t) == pw(&t, q) - Rational::one()
        });
        assert!(holds, "q = {q}");
        assert_eq!(reflection_identity_check(q as u64).unwrap(), holds, "q = {q}");
    }
}
