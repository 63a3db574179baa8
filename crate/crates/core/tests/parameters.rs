use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use subcodes::bounds::{all_bounds, hamming_check_params, singleton_check};
use subcodes::constructions::{bacon_shor, euclidean, lattice, LatticeDistances};
use subcodes::transforms::{puncture_impure, singleton_chain};
use subcodes::{CodeMatrix, EnumConfig, Error, Field, SubsystemCode};

fn gf(q: u32) -> Field {
    Field::with_order(q).unwrap()
}

fn random_gauge(rng: &mut ChaCha8Rng, f: &Field, n: usize) -> CodeMatrix {
    let rows: Vec<Vec<u32>> = (0..rng.gen_range(1..=2 * n))
        .map(|_| (0..2 * n).map(|_| rng.gen_range(0..f.q())).collect())
        .collect();
    CodeMatrix::from_values(f, 2 * n, &rows).unwrap()
}

#[test]
fn dimension_count_fills_the_space() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for q in [2, 3, 4, 5] {
        let f = gf(q);
        for _ in 0..40 {
            let n = rng.gen_range(1..=5);
            let c = random_gauge(&mut rng, &f, n);
            if c.rank() == 0 {
                continue;
            }
            let code = SubsystemCode::from_gauge_code(c).unwrap();
            let qb = BigUint::from(q);
            let lhs = code.dim_a() * code.dim_b() * qb.pow(code.stabilizer().rank() as u32);
            assert_eq!(lhs, qb.pow(code.n() as u32), "{}", code.label());
            assert!(code.check_invariants());
        }
    }
}

#[test]
fn serial_and_parallel_enumeration_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..20 {
        let f = gf(if rng.gen_bool(0.5) { 2 } else { 3 });
        let n = rng.gen_range(2..=6);
        let code = SubsystemCode::from_gauge_code(random_gauge(&mut rng, &f, n)).unwrap();
        let serial = code.min_logical(&EnumConfig::default());
        let parallel = code.min_logical(&EnumConfig::default().with_jobs(4));
        assert_eq!(serial, parallel);
    }
}

#[test]
fn lattice_distance_is_the_smaller_factor_distance() {
    let f = gf(2);
    let cfg = EnumConfig::default();
    for (a, b) in [(2, 3), (3, 3), (3, 4), (2, 5)] {
        let (c1, c2) = (CodeMatrix::repetition(&f, a), CodeMatrix::repetition(&f, b));
        let code = lattice(&c1, &c2).unwrap().analyze(&cfg).unwrap();
        let ds = LatticeDistances::compute(&c1, &c2, &cfg).unwrap();
        assert_eq!(code.distance(), Some(ds.distance()));
        assert_eq!(code.distance(), Some(a.min(b)));
        assert_eq!((code.n(), code.k(), code.r()), (a * b, 1, (a - 1) * (b - 1)));
    }
}

#[test]
fn bacon_shor_matches_lattice_of_repetition_codes() {
    let f = gf(3);
    let bs = bacon_shor(2, 3, &f).unwrap();
    let lat = lattice(&CodeMatrix::repetition(&f, 2), &CodeMatrix::repetition(&f, 3)).unwrap();
    assert!(bs.stabilizer().same_space(lat.stabilizer()));
    assert_eq!((bs.k(), bs.r()), (lat.k(), lat.r()));
}

#[test]
fn steane_code_from_euclidean_pair() {
    let f = gf(2);
    let h = CodeMatrix::from_values(
        &f,
        7,
        &[vec![1, 0, 0, 1, 1, 0, 1], vec![0, 1, 0, 1, 0, 1, 1], vec![0, 0, 1, 0, 1, 1, 1]],
    )
    .unwrap();
    let code = euclidean(&h, &h).unwrap().analyze(&EnumConfig::default()).unwrap();
    assert_eq!(code.label(), "[[7,1,0,3]]_2");
    assert_eq!(code.is_pure(), Some(true));
}

#[test]
fn bounds_on_published_examples() {
    let h = hamming_check_params(9, 1, 4, 3, 2).unwrap();
    assert_eq!((h.lhs.to_string(), h.rhs.to_string(), h.satisfied), ("28".into(), "16".into(), false));
    let h = hamming_check_params(16, 1, 9, 4, 2).unwrap();
    assert_eq!((h.lhs.to_string(), h.rhs.to_string(), h.satisfied), ("49".into(), "64".into(), true));
    assert!(singleton_check(12, 1, 6, 3, 2).satisfied);
    assert!(!singleton_check(9, 1, 5, 3, 2).satisfied);
    assert_eq!(all_bounds(9, 1, 4, 3, 2).len(), 3);
}

#[test]
fn impure_puncture_and_chain() {
    let cfg = EnumConfig::default();
    let p = puncture_impure(bacon_shor(3, 3, &gf(2)).unwrap(), &cfg).unwrap();
    assert_eq!((p.output.n(), p.output.k(), p.output.r()), (8, 1, 5));
    assert!(p.output.distance().unwrap() >= 2);
    let chain = singleton_chain(bacon_shor(3, 3, &gf(3)).unwrap(), &cfg).unwrap();
    assert!(chain.bookkeeping_holds());
    for link in &chain.links {
        let c = &link.code;
        assert!(singleton_check(c.n(), c.k(), c.r(), c.distance().unwrap(), 3).satisfied);
    }
}

#[test]
fn enumeration_cap_is_enforced() {
    let cfg = EnumConfig { cap: 1 << 10, ..EnumConfig::default() };
    let code = bacon_shor(3, 3, &gf(2)).unwrap();
    assert!(matches!(code.analyze(&cfg), Err(Error::EnumerationTooLarge { .. })));
}
