use std::collections::HashSet;
use std::sync::OnceLock;

use proptest::prelude::*;

use chain_codes::code::{CodeHandle, Family, VectorSpace, DEFAULT_CAP_LOG2};
use chain_codes::eisenstein::{annihilator_subgroup, eisenstein_dual_code, ring_ambient, EisensteinContext};
use chain_codes::galois::{trace_dual_linear, GaloisContext};
use chain_codes::idempotent::Scalars;
use chain_codes::linalg::{Ambient, GeneratorStack};
use chain_codes::ring::{make_ring, ChainRing, Elem, RingParams, TeichDigits};

fn rings() -> &'static [ChainRing] {
    static RINGS: OnceLock<Vec<ChainRing>> = OnceLock::new();
    RINGS.get_or_init(|| {
        [
            RingParams::new(2, 2, 1, 2, 1, vec![1, 0]),
            RingParams::new(2, 2, 2, 2, 1, vec![1, 0]).with_f(vec![1, 1, 1]),
            RingParams::new(2, 2, 1, 2, 2, vec![1, 1]),
            RingParams::new(3, 2, 2, 2, 1, vec![2, 1]),
            RingParams::new(2, 3, 2, 1, 1, vec![3]),
            RingParams::new(2, 1, 3, 3, 3, vec![1, 0, 0]),
            RingParams::new(5, 2, 1, 3, 2, vec![4, 0, 1]),
            RingParams::new(2, 3, 1, 3, 1, vec![1, 2, 3]),
        ]
        .into_iter()
        .map(|p| make_ring(p).unwrap())
        .collect()
    })
}

fn rank_one() -> Vec<&'static ChainRing> {
    rings().iter().filter(|r| r.rank() == 1).collect()
}

fn elem(ring: &ChainRing, seed: u64) -> Elem {
    ring.from_index(seed % ring.size().unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn ring_axioms(ri in 0..8usize, a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let ring = &rings()[ri];
        let (a, b, c) = (elem(ring, a), elem(ring, b), elem(ring, c));
        prop_assert_eq!(ring.add(&a, &b), ring.add(&b, &a));
        prop_assert_eq!(ring.mul(&a, &b), ring.mul(&b, &a));
        prop_assert_eq!(ring.mul(&ring.mul(&a, &b), &c), ring.mul(&a, &ring.mul(&b, &c)));
        prop_assert_eq!(ring.add(&ring.add(&a, &b), &c), ring.add(&a, &ring.add(&b, &c)));
        prop_assert_eq!(ring.mul(&a, &ring.add(&b, &c)), ring.add(&ring.mul(&a, &b), &ring.mul(&a, &c)));
        prop_assert_eq!(ring.mul(&a, &ring.one()), a.clone());
        prop_assert_eq!(ring.add(&a, &ring.neg(&a)), ring.zero());
        prop_assert_eq!(ring.sub(&ring.add(&a, &b), &b), a);
    }

    #[test]
    fn valuation_is_additive(ri in 0..8usize, a in any::<u64>(), b in any::<u64>()) {
        let ring = &rings()[ri];
        let (a, b) = (elem(ring, a), elem(ring, b));
        let m = ring.m();
        let expected = (ring.x_valuation(&a) + ring.x_valuation(&b)).min(m);
        prop_assert_eq!(ring.x_valuation(&ring.mul(&a, &b)), expected);
        prop_assert_eq!(ring.x_valuation(&a) == m, a.is_zero());
    }

    #[test]
    fn unit_xor_zero_divisor(ri in 0..8usize, a in any::<u64>()) {
        let ring = &rings()[ri];
        let a = elem(ring, a);
        let kills_socle = ring.mul(&a, &ring.x_pow(ring.m() - 1)).is_zero();
        prop_assert!(ring.is_unit(&a) != kills_socle);
        if ring.is_unit(&a) {
            prop_assert_eq!(ring.mul(&a, &ring.invert(&a).unwrap()), ring.one());
        } else {
            prop_assert!(ring.invert(&a).is_err());
        }
    }

    #[test]
    fn teichmuller_digits_round_trip(ri in 0..8usize, a in any::<u64>()) {
        let ring = &rings()[ri];
        let a = elem(ring, a);
        let digits = ring.x_adic_digits(&a);
        prop_assert_eq!(digits.digits.len(), ring.m() as usize);
        let q = ring.p().pow(ring.rank());
        for d in &digits.digits {
            prop_assert_eq!(&ring.pow(d, q), d);
        }
        prop_assert_eq!(ring.from_digits(&digits), a.clone());
        // Frobenius raises every digit to the p-th power and fixes x
        let frob = TeichDigits { digits: digits.digits.iter().map(|d| ring.pow(d, ring.p())).collect() };
        prop_assert_eq!(ring.frobenius(&a), ring.from_digits(&frob));
    }

    #[test]
    fn frobenius_and_trace(ri in 0..8usize, a in any::<u64>(), b in any::<u64>(), s in any::<u64>()) {
        let ring = &rings()[ri];
        let (a, b) = (elem(ring, a), elem(ring, b));
        prop_assert_eq!(ring.frobenius(&ring.mul(&a, &b)), ring.mul(&ring.frobenius(&a), &ring.frobenius(&b)));
        prop_assert_eq!(ring.frobenius_pow(&a, ring.rank()), a.clone());
        let tr = ring.trace(&a);
        prop_assert!(ring.is_in_base(&tr));
        let mut grid = ring.grid(&elem(ring, s));
        grid.iter_mut().skip(1).flatten().for_each(|c| *c = 0);
        let s = ring.from_grid(&grid).unwrap();
        prop_assert!(ring.is_in_base(&s));
        prop_assert_eq!(ring.trace(&ring.mul(&s, &a)), ring.mul(&s, &tr));
    }

    #[test]
    fn x_to_the_k_generates_p(ri in 0..8usize) {
        let ring = &rings()[ri];
        let p = ring.from_int(ring.p() as i64);
        prop_assert_eq!(ring.x_valuation(&p), ring.k().min(ring.m()));
    }
}

fn small_ambients() -> impl Strategy<Value = Ambient> {
    (prop_oneof![Just(2u64), Just(3)], 1..=3u32, 1..=4usize).prop_flat_map(|(p, n, len)| {
        prop::collection::vec(1..=n, len).prop_map(move |orders| Ambient::new(p, n, orders))
    })
}

fn stacks() -> impl Strategy<Value = GeneratorStack> {
    small_ambients().prop_flat_map(|amb| {
        let q = amb.modulus();
        let len = amb.len();
        prop::collection::vec(prop::collection::vec(0..q, len), 0..4)
            .prop_map(move |rows| GeneratorStack::new(amb.clone(), rows).unwrap())
    })
}

fn brute_span(stack: &GeneratorStack) -> HashSet<Vec<u64>> {
    let amb = &stack.ambient;
    let mut seen: HashSet<Vec<u64>> = HashSet::from([vec![0; amb.len()]]);
    let mut frontier: Vec<Vec<u64>> = seen.iter().cloned().collect();
    while let Some(v) = frontier.pop() {
        for g in &stack.rows {
            let w: Vec<u64> = amb.reduce(&v.iter().zip(g).map(|(a, b)| a + b).collect::<Vec<_>>());
            if seen.insert(w.clone()) {
                frontier.push(w);
            }
        }
    }
    seen
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn normal_form_counts_the_span(stack in stacks()) {
        let span = brute_span(&stack);
        let nf = stack.normal_form();
        prop_assert_eq!(span.len() as u64, stack.ambient.p.pow(nf.log_order()));
        for v in &span {
            prop_assert!(nf.contains(v).unwrap());
        }
    }

    #[test]
    fn normal_form_ignores_row_operations(stack in stacks(), c in 0..27u64, seed in any::<u64>()) {
        let mut mixed = stack.clone();
        let k = mixed.rows.len();
        if k >= 2 {
            let (i, j) = ((seed as usize) % k, (seed as usize / 7 + 1) % k);
            if i != j {
                let src = mixed.rows[j].clone();
                for (x, y) in mixed.rows[i].iter_mut().zip(src) {
                    *x += c * y;
                }
            }
            mixed.rows.rotate_left((seed as usize) % k);
        }
        mixed.rows.push(vec![0; stack.ambient.len()]);
        mixed.rows = mixed.rows.iter().map(|r| stack.ambient.reduce(r)).collect();
        prop_assert_eq!(stack.normal_form(), mixed.normal_form());
    }

    #[test]
    fn double_annihilator_in_rank_one_rings(ri in 0..4usize, seeds in prop::collection::vec(any::<u64>(), 0..3)) {
        let rings = rank_one();
        let ring = rings[ri % rings.len()];
        let h: Vec<Elem> = seeds.iter().map(|&s| elem(ring, s)).collect();
        let rows = h.iter().map(|e| e.coeffs().to_vec()).collect();
        let h_stack = GeneratorStack::new(ring_ambient(ring), rows).unwrap();
        let ann = annihilator_subgroup(ring, &h).unwrap();
        let ann_elems: Vec<Elem> = ann.rows.iter().map(|r| ring.from_flat_reducing(r.clone())).collect();
        let back = annihilator_subgroup(ring, &ann_elems).unwrap();
        prop_assert_eq!(back.normal_form(), h_stack.normal_form());
        prop_assert_eq!(ann.subgroup_order_log_p() + h_stack.subgroup_order_log_p(), ring.log_size());
    }
}

fn galois_cases() -> Vec<(ChainRing, u64)> {
    vec![
        (rings()[1].clone(), 3),
        (rings()[3].clone(), 2),
        (rings()[4].clone(), 3),
        (rings()[5].clone(), 7),
        (rings()[0].clone(), 5),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn galois_dual_is_an_involution(ci in 0..5usize, seeds in prop::collection::vec(any::<u32>(), 12)) {
        let (ring, n) = &galois_cases()[ci];
        let ctx = GaloisContext::new(ring, *n).unwrap();
        let mut spec = ctx.uniform_spec(0);
        for (e, s) in spec.e.iter_mut().flatten().zip(seeds.iter().cycle()) {
            *e = s % (ctx.m() + 1);
        }
        let dual = ctx.dual(&spec).unwrap();
        prop_assert_eq!(ctx.dual(&dual).unwrap(), spec.clone());
        let code = ctx.build(&spec).unwrap();
        let built_dual = ctx.build(&dual).unwrap();
        prop_assert!(built_dual.same_code(&trace_dual_linear(&code).unwrap()));
        prop_assert!(code.is_shift_closed() && built_dual.is_shift_closed());
        prop_assert!(code.is_closed_under(Scalars::Base));
        prop_assert_eq!(code.log_p_card, ctx.log_cardinality(&spec).unwrap());
        let recovered = ctx.decompose_to_spec(&code).unwrap();
        prop_assert!(ctx.build(&recovered).unwrap().same_code(&code));
    }

    #[test]
    fn eisenstein_counting_and_double_dual(ri in 0..4usize, n in prop_oneof![Just(1u64), Just(3), Just(5)], bits in any::<u64>()) {
        let rings = rank_one();
        let ring = rings[ri % rings.len()];
        if ring.p() == 5 && n == 5 {
            return Ok(());
        }
        let ctx = EisensteinContext::new(ring, n).unwrap();
        let mut spec = ctx.empty_spec();
        for (i, b) in spec.a.iter_mut().flatten().enumerate() {
            *b = ((bits >> (i % 64)) & 1) as u8;
        }
        let code = ctx.build(&spec).unwrap();
        let dual = eisenstein_dual_code(&code).unwrap();
        prop_assert_eq!(code.log_p_card + dual.log_p_card, n as u32 * ring.m());
        prop_assert!(eisenstein_dual_code(&dual).unwrap().same_code(&code));
        prop_assert!(dual.is_shift_closed());
    }
}

#[test]
fn weight_enumerator_counts_every_word() {
    for ring in rank_one() {
        let space = VectorSpace::new(ring, 2);
        let v = vec![ring.one(), ring.x()];
        let code = CodeHandle::from_vectors(space, Family::Eisenstein, Scalars::Integers, &[v]).unwrap();
        let total: u64 = code.weight_enumerator(DEFAULT_CAP_LOG2).unwrap().values().sum();
        assert_eq!(total, ring.p().pow(code.log_p_card));
    }
}
