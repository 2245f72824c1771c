use proptest::prelude::*;
use rostfix::groebner::reduce;
use rostfix::quotient::invariant_monomials;
use rostfix::rost::{flip_convention, local_multiplicity};
use rostfix::{AbelianGroup, Execution, Field, GradedIdeal, Monomial, MonomialOrder, Poly, Ring, Scalar, WeightVector};

const PRIMES: [u64; 5] = [2, 3, 5, 7, 11];

fn field_strategy() -> impl Strategy<Value = Field> {
    prop_oneof![
        prop::sample::select(PRIMES.to_vec()).prop_map(|p| Field::prime(p).unwrap()),
        (prop::sample::select(vec![2u64, 3, 5]), 2usize..=3).prop_map(|(p, m)| Field::extension(p, m).unwrap()),
    ]
}

fn elements(f: &Field) -> impl Strategy<Value = (Scalar, Scalar, Scalar)> {
    let q = f.order().unwrap();
    let f1 = f.clone();
    (0..q, 0..q, 0..q).prop_map(move |(a, b, c)| {
        (
            f1.element_from_index(a),
            f1.element_from_index(b),
            f1.element_from_index(c),
        )
    })
}

fn poly_strategy(ring: Ring, p: u64) -> impl Strategy<Value = Poly> {
    let n = ring.nvars();
    prop::collection::vec((prop::collection::vec(0u32..=2, n), 1..p), 1..4).prop_map(move |terms| {
        ring.from_terms(
            terms
                .into_iter()
                .map(|(e, c)| (Monomial::new(e), Scalar::Residue(c)))
                .collect(),
        )
    })
}

/// A prime p, a ring in three variables over F_p and a few polynomials in it.
fn ideal_strategy() -> impl Strategy<Value = (Ring, Vec<Poly>, Poly)> {
    prop::sample::select(vec![2u64, 3, 5, 7, 101]).prop_flat_map(|p| {
        let ring = Ring::grevlex(Field::prime(p).unwrap(), 3);
        (
            Just(ring.clone()),
            prop::collection::vec(poly_strategy(ring.clone(), p), 1..4),
            poly_strategy(ring, p),
        )
    })
}

fn group_strategy() -> impl Strategy<Value = AbelianGroup> {
    prop::collection::vec(prop::sample::select(vec![2u64, 3, 4, 5, 6, 9]), 1..=3)
        .prop_map(|f| AbelianGroup::new(f).unwrap())
}

fn weights_strategy(n: usize) -> impl Strategy<Value = WeightVector> {
    group_strategy().prop_flat_map(move |g| {
        let rank = g.rank();
        prop::collection::vec(prop::collection::vec(0i64..9, rank), n)
            .prop_map(move |w| WeightVector::from_ints(&g, &w).unwrap())
    })
}

fn exponent_vectors(n: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=max).map(move |e| {
                    let mut v = v.clone();
                    v.push(e);
                    v
                })
            })
            .collect();
    }
    out
}

fn is_product_of(m: &[u32], gens: &[Monomial]) -> bool {
    if m.iter().all(|&e| e == 0) {
        return true;
    }
    gens.iter().any(|g| {
        g.exps().iter().zip(m).all(|(a, b)| a <= b) && {
            let rest: Vec<u32> = m.iter().zip(g.exps()).map(|(a, b)| a - b).collect();
            is_product_of(&rest, gens)
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn field_axioms((f, (a, b, c)) in field_strategy().prop_flat_map(|f| (Just(f.clone()), elements(&f)))) {
        prop_assert_eq!(f.add(&a, &b), f.add(&b, &a));
        prop_assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
        prop_assert_eq!(f.add(&f.add(&a, &b), &c), f.add(&a, &f.add(&b, &c)));
        prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
        prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
        prop_assert!(f.is_zero(&f.add(&a, &f.neg(&a))));
        if !f.is_zero(&a) {
            prop_assert!(f.is_one(&f.mul(&a, &f.inv(&a).unwrap())));
        } else {
            prop_assert!(f.inv(&a).is_err());
        }
        prop_assert_eq!(f.element_from_index(f.index_of(&a)), a.clone());
        let mut x = a.clone();
        for _ in 0..f.degree().unwrap() {
            x = f.frobenius(&x).unwrap();
        }
        prop_assert_eq!(x, a.clone());
        let q = f.order().unwrap() as u64;
        prop_assert_eq!(f.pow(&a, q), a);
    }

    #[test]
    fn quotients_are_normalised_and_complete(g in group_strategy(), p in prop::sample::select(PRIMES.to_vec())) {
        let qs = g.mu_p_quotients(p);
        let r = g.factors().iter().filter(|n| *n % p == 0).count() as u32;
        prop_assert_eq!(qs.len() as u64, (p.pow(r) - 1) / (p - 1));
        for q in &qs {
            prop_assert_eq!(q.images().iter().find(|&&c| c != 0), Some(&1));
            let again = rostfix::CyclicQuotient::new(&g, p, q.images().iter().map(|&c| c as i64).collect());
            prop_assert!(again.is_ok());
        }
        for w in qs.windows(2) {
            prop_assert!(w[0].images() < w[1].images());
        }
    }

    #[test]
    fn pushed_weights_commute_with_monomial_weights(
        w in weights_strategy(3),
        p in prop::sample::select(vec![2u64, 3]),
        e in prop::collection::vec(0u32..6, 3),
    ) {
        let m = Monomial::new(e);
        for q in w.group().mu_p_quotients(p) {
            prop_assert_eq!(w.push(&q).monomial_weight(&m), q.apply(&w.monomial_weight(&m)));
        }
    }

    #[test]
    fn invariant_monomials_generate_the_invariant_monoid(w in weights_strategy(3)) {
        let gens = invariant_monomials(&w);
        for g in &gens {
            prop_assert!(w.monomial_weight(g).is_zero());
            prop_assert!(!g.is_one());
        }
        for e in exponent_vectors(3, 4) {
            let m = Monomial::new(e.clone());
            if w.monomial_weight(&m).is_zero() {
                prop_assert!(is_product_of(&e, &gens), "{} is not generated", m);
            }
        }
    }

    #[test]
    fn flip_convention_is_an_involution(p in prop::sample::select(PRIMES.to_vec()), raw in prop::collection::vec(0usize..5, 11)) {
        let mut d: Vec<usize> = raw[..p as usize].to_vec();
        d[0] = 0;
        let flipped = flip_convention(&d);
        prop_assert_eq!(flip_convention(&flipped), d.clone());
        prop_assert_eq!(flipped[0], 0);
        // u' = (-1)^{Σ d_i} u
        let u = local_multiplicity(&d, p).unwrap();
        let u_flipped = local_multiplicity(&flipped, p).unwrap();
        let sign = if d.iter().sum::<usize>() % 2 == 0 { 1 } else { p - 1 };
        prop_assert_eq!(u_flipped, u * sign % p);
    }

    #[test]
    fn local_multiplicity_is_multiplicative(
        p in prop::sample::select(PRIMES.to_vec()),
        a in prop::collection::vec(0usize..5, 11),
        b in prop::collection::vec(0usize..5, 11),
    ) {
        let n = p as usize;
        let (mut d, mut e) = (a[..n].to_vec(), b[..n].to_vec());
        d[0] = 0;
        e[0] = 0;
        let sum: Vec<usize> = d.iter().zip(&e).map(|(x, y)| x + y).collect();
        let u = local_multiplicity(&d, p).unwrap();
        let v = local_multiplicity(&e, p).unwrap();
        prop_assert!((1..p).contains(&u));
        prop_assert_eq!(local_multiplicity(&sum, p).unwrap(), u * v % p);
        prop_assert_eq!(local_multiplicity(&vec![0; n], p).unwrap(), 1);
    }

    #[test]
    fn execution_modes_agree(xs in prop::collection::vec(any::<u32>(), 0..64)) {
        let f = |x: &u32| x.wrapping_mul(2654435761).rotate_left(7);
        prop_assert_eq!(Execution::Sequential.map(&xs, f), Execution::Parallel.map(&xs, f));
        prop_assert_eq!(
            Execution::Sequential.map_range(xs.len(), |i| i * i),
            Execution::Parallel.map_range(xs.len(), |i| i * i)
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn groebner_bases_reduce_their_ideal((ring, gens, f) in ideal_strategy()) {
        let ideal = GradedIdeal::ungraded(&ring, gens.clone()).unwrap();
        for order in [MonomialOrder::GrevLex, MonomialOrder::Lex] {
            let basis = ideal.basis(order).unwrap();
            for g in &gens {
                prop_assert!(reduce(&g.to_order(order), &basis).is_zero(), "{} not reduced to 0", g);
            }
            let nf = ideal.normal_form(&f, order).unwrap();
            prop_assert_eq!(ideal.normal_form(&nf, order).unwrap(), nf.clone());
            prop_assert!(ideal.contains(&f.to_order(order).checked_sub(&nf).unwrap()).unwrap());
            let lms = ideal.leading_monomials(order).unwrap();
            for (m, _) in nf.terms() {
                prop_assert!(!lms.iter().any(|l| l.divides(m)));
            }
        }
        let lex = GradedIdeal::ungraded(&ring.with_order(MonomialOrder::Lex), gens.iter().map(|g| g.to_order(MonomialOrder::Lex)).collect()).unwrap();
        prop_assert!(lex.same_ideal(&ideal).unwrap());
    }

    #[test]
    fn normal_forms_are_linear((ring, gens, f) in ideal_strategy(), c in 1u64..100) {
        let ideal = GradedIdeal::ungraded(&ring, gens.clone()).unwrap();
        let g = gens[0].checked_mul(&f).unwrap().checked_add(&f).unwrap();
        let order = MonomialOrder::GrevLex;
        let s = Scalar::Residue(c % ring.field().characteristic());
        let lhs = ideal.normal_form(&f.scale(&s).checked_add(&g).unwrap(), order).unwrap();
        let rhs = ideal
            .normal_form(&f, order)
            .unwrap()
            .scale(&s)
            .checked_add(&ideal.normal_form(&g, order).unwrap())
            .unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert!(ideal.contains(&gens[0].checked_mul(&f).unwrap()).unwrap());
    }

    #[test]
    fn parsing_round_trips((ring, _, f) in ideal_strategy()) {
        prop_assert_eq!(ring.parse(&f.to_string()).unwrap(), f);
    }
}
