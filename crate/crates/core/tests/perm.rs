use genocchi_core::family::{generate, generate_with, Budget, FamilyId, GenMode};
use genocchi_core::perm::*;
use proptest::prelude::*;

fn w(s: &str) -> Permutation {
    s.parse().unwrap()
}

#[test]
fn parsing() {
    assert_eq!(w("2 4 1 3").word(), &[2, 4, 1, 3]);
    assert_eq!(w("2,4,1,3"), w("2413"));
    assert_eq!(w("(1,3,4,2)"), w("3 1 4 2"));
    assert_eq!(w("(1,2)(3)(4)"), w("2 1 3 4"));
    assert_eq!(Permutation::from_cycles("(1,3,4,2)(5)").unwrap(), w("3 1 4 2 5"));
    assert!("56347812910".parse::<Permutation>().is_err());
    assert!("1 1 2".parse::<Permutation>().is_err());
    assert!("1 3".parse::<Permutation>().is_err());
    let long = w("2 6 8 1 4 7 14 9 10 12 3 5 11 15 16 13");
    assert_eq!(long.to_string(), "2 6 8 1 4 7 14 9 10 12 3 5 11 15 16 13");
    assert_eq!(w("3 1 4 2").cycle_string(), "(1,3,4,2)");
}

#[test]
fn basic_statistics() {
    let s = w("3 1 4 2");
    assert_eq!((des(&s), drop(&s), cyc(&s)), (2, 2, 1));
    let id = Permutation::identity(6);
    let st = StatVector::of(&id);
    assert_eq!((st.des, st.drop, st.cyc, st.lma, st.rmi), (0, 0, 6, 6, 6));
    let s = w("2 1");
    assert_eq!((des(&s), drop(&s), cyc(&s)), (1, 1, 1));
}

#[test]
fn parity_maxima_minima() {
    assert_eq!(parity_maxmin(&w("1 2")), (1, 1, 1, 1));
    assert_eq!(parity_maxmin(&w("2 1")), (1, 0, 0, 1));
    assert_eq!(parity_maxmin(&Permutation::identity(4)), (2, 2, 2, 2));
}

#[test]
fn embracing() {
    let e = embrace(&w("2 4 1 3"));
    assert_eq!((e.les, e.ress), (1, 1));
    assert_eq!(e.l_vec[3], 1);
    assert_eq!(e.r_vec[2], 1);
    // 3 > 2 > 1 with the ascent (1, 3) right of 2.
    assert_eq!(e.res, 1);
    let inc = embrace(&Permutation::identity(5));
    assert_eq!((inc.les, inc.ress, inc.res), (0, 0, 0));
}

#[test]
fn dominoes() {
    assert_eq!(dom(&w("2 1")).unwrap(), 1);
    assert_eq!(dom(&w("2 1 4 3")).unwrap(), 2);
    assert_eq!(dom(&Permutation::identity(4)).unwrap(), 0);
    assert!(dom(&w("1 2 3")).is_err());
}

#[test]
fn shapes() {
    let sh = shape(&w("2 3 1"));
    assert_eq!(sh.by_value[2], Some(Shape::DoubleAscent));
    assert_eq!(sh.by_value[3], Some(Shape::Peak));
    assert_eq!(sh.by_value[1], Some(Shape::DoubleDescent));
    assert_eq!(sh.dd, 1);
    let inc = shape(&Permutation::identity(5));
    assert_eq!((inc.dd, inc.peaks), (0, 1));
    assert_eq!(shape(&w("1 2 4 5 3")).dd, 1);
}

#[test]
fn foata_examples() {
    assert_eq!(foata(&w("3 1 4 2")), w("4 2 1 3"));
    assert_eq!(foata(&Permutation::identity(5)), Permutation::identity(5));
    assert_eq!(foata(&w("2 1 3 4")), w("2 1 3 4"));
}

#[test]
fn foata_carries_drops_to_descents() {
    for m in 0..=7 {
        let mut word: Vec<u8> = (1..=m as u8).collect();
        loop {
            let s = Permutation::new(word.clone()).unwrap();
            let f = foata(&s);
            assert_eq!((drop(&s), cyc(&s)), (des(&f), lma(&f)), "{s}");
            if !next_perm(&mut word) {
                break;
            }
        }
    }
}

fn next_perm(w: &mut [u8]) -> bool {
    let n = w.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && w[i - 1] >= w[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while w[j] <= w[i - 1] {
        j -= 1;
    }
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

#[test]
fn signature_worked_example() {
    let s = w("2 6 8 1 4 7 14 9 10 12 3 5 11 15 16 13");
    let (sig, f) = signature_of(&s).unwrap();
    let expect: Vec<usize> = vec![1, 3, 8, 9, 12, 13, 14, 16];
    assert_eq!(sig.set.iter().copied().collect::<Vec<_>>(), expect);
    let pairs: Vec<(u32, u32)> = (1..=8).map(|j| (f.at(2 * j - 1), f.at(2 * j))).collect();
    assert_eq!(
        pairs,
        vec![(1, 2), (2, 3), (3, 3), (3, 2), (2, 3), (3, 2), (2, 2), (2, 1)]
    );
    let (sig, f) = signature_of(&Permutation::identity(6)).unwrap();
    assert!(sig.set.is_empty());
    assert!(f.values.iter().all(|&v| v == 1));
    assert!(signature_of(&w("3 1 2 4")).is_err());
}

#[test]
fn signature_identity_exhaustive() {
    for n in 1..=4 {
        for s in generate(FamilyId::X, n).unwrap() {
            let (sig, f) = signature_of(&s).unwrap();
            assert!(WeakSignature::new(n, sig.set.clone()).is_ok());
            let e = embrace(&s);
            for v in 1..=2 * n {
                assert_eq!(f.at(v), e.l_vec[v] + e.r_vec[v] + 1, "{s} at {v}");
            }
        }
    }
}

#[test]
fn invariant_sums() {
    for s in generate_with(FamilyId::Y, 3, GenMode::Pruned, &Budget::default()).unwrap() {
        let st = StatVector::of(&s);
        let e = embrace(&s);
        assert_eq!(st.les, e.l_vec.iter().sum::<u32>());
        assert_eq!(st.ress, e.r_vec.iter().sum::<u32>());
        assert_eq!(st.lema + st.loma, st.lma);
        assert_eq!(st.remi + st.romi, st.rmi);
    }
}

proptest! {
    #[test]
    fn stat_vector_laws(v in Just((1u8..=9).collect::<Vec<_>>()).prop_shuffle()) {
        let s = Permutation::new(v).unwrap();
        let st = StatVector::of(&s);
        prop_assert_eq!(st.lema + st.loma, st.lma);
        prop_assert_eq!(st.remi + st.romi, st.rmi);
        prop_assert!(st.des <= 8);
        prop_assert!(st.cyc >= 1);
        let e = embrace(&s);
        prop_assert_eq!(e.l_vec.iter().sum::<u32>(), st.les);
        prop_assert_eq!(e.r_vec.iter().sum::<u32>(), st.ress);
        prop_assert_eq!(e.res_vec.iter().sum::<u32>(), st.res);
        let f = foata(&s);
        prop_assert_eq!((st.drop, st.cyc), (des(&f), lma(&f)));
        prop_assert_eq!(s.inverse().inverse(), s.clone());
        prop_assert_eq!(s.to_string().parse::<Permutation>().unwrap(), s);
    }
}
