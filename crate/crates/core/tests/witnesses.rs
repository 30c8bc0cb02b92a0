use syncomplex::automata::minimize;
use syncomplex::bounds::{closed_form_bound, Family};
use syncomplex::classify::classify;
use syncomplex::witnesses::{
    full_letters, left_ideal_witness, min_states, right_ideal_witness, small_witness,
    small_witnesses, two_sided_binary, two_sided_witness, unary_threshold, WitnessSpec,
};
use syncomplex::{sigma_of_language, Error};

#[test]
fn full_witnesses_are_minimal_and_classified() {
    for family in Family::ALL {
        for n in min_states(family)..=6 {
            let d = WitnessSpec::full(family, n).build().unwrap();
            assert_eq!(minimize(&d).n(), n, "{family} n={n}");
            let r = classify(&d).unwrap();
            match family {
                Family::Right => assert!(r.is_right_ideal && !r.is_left_ideal),
                Family::Left => assert!(r.is_left_ideal && !r.is_right_ideal),
                Family::TwoSided => assert!(r.is_two_sided_ideal),
            }
            let sigma = sigma_of_language(&d).unwrap() as u64;
            assert_eq!(sigma, closed_form_bound::<u64>(family, n).unwrap(), "{family} n={n}");
            assert!(num_bigint::BigUint::from(sigma) <= r.bound);
        }
    }
}

#[test]
fn right_witness_examples() {
    let d = right_ideal_witness(4, "abcd").unwrap();
    assert_eq!(d.alphabet(), ["a", "b", "c", "d"]);
    assert_eq!(d.initial(), 0);
    assert_eq!(d.finals(), vec![3]);
    assert!(d.is_sink(3));
    assert_eq!(sigma_of_language(&d).unwrap(), 64);
}

#[test]
fn left_witness_examples() {
    let d = left_ideal_witness(4, "abcde", None).unwrap();
    let shown: Vec<String> = d.delta().iter().map(|t| t.to_string()).collect();
    assert_eq!(shown, ["[0,2,3,1]", "[0,2,1,3]", "[0,1,2,1]", "[0,1,2,0]", "[1,1,1,1]"]);
    assert_eq!(d.finals(), vec![3]);
    assert_eq!(sigma_of_language(&d).unwrap(), 67);
}

#[test]
fn left_witness_complexity_does_not_depend_on_finals() {
    let n = 4;
    for mask in 1u32..8 {
        let finals: Vec<usize> = (1..n).filter(|q| mask >> (q - 1) & 1 == 1).collect();
        let d = left_ideal_witness(n, "abcde", Some(&finals)).unwrap();
        assert_eq!(minimize(&d).n(), n, "F={finals:?}");
        assert!(classify(&d).unwrap().is_left_ideal, "F={finals:?}");
        assert_eq!(sigma_of_language(&d).unwrap(), 67, "F={finals:?}");
    }
}

#[test]
fn two_sided_witness_examples() {
    let d = two_sided_witness(5, "abcdef").unwrap();
    assert_eq!(d.finals(), vec![4]);
    assert_eq!(d.delta()[4].to_string(), "[1,1,1,1,4]");
    assert_eq!(d.delta()[5].to_string(), "[0,4,2,3,4]");
    assert_eq!(sigma_of_language(&d).unwrap(), 150);
}

#[test]
fn restrictions_keep_family_order() {
    let d = right_ideal_witness(5, "da").unwrap();
    assert_eq!(d.alphabet(), ["a", "d"]);
    assert_eq!(d, right_ideal_witness(5, "ad").unwrap());
    assert_eq!(sigma_of_language(&right_ideal_witness(3, "ad").unwrap()).unwrap(), 7);
}

#[test]
fn unary_and_binary_constructions() {
    for n in 1..=7 {
        let d = unary_threshold(n).unwrap();
        assert_eq!(minimize(&d).n(), n);
        let want = if n == 1 { 1 } else { n - 1 };
        assert_eq!(sigma_of_language(&d).unwrap(), want);
        let r = classify(&d).unwrap();
        assert!(r.is_right_ideal && r.is_left_ideal && r.is_two_sided_ideal);
    }
    for n in 2..=7 {
        let d = two_sided_binary(n).unwrap();
        assert_eq!(minimize(&d).n(), n);
        assert!(classify(&d).unwrap().is_two_sided_ideal);
    }
}

#[test]
fn small_witnesses_hit_their_cells() {
    let cells: &[(Family, usize, usize, usize)] = &[
        (Family::Right, 2, 2, 2),
        (Family::Right, 4, 2, 31),
        (Family::Right, 5, 2, 167),
        (Family::Right, 5, 3, 545),
        (Family::Left, 2, 2, 2),
        (Family::Left, 2, 3, 3),
        (Family::Left, 3, 2, 7),
        (Family::Left, 4, 2, 17),
        (Family::Left, 5, 2, 34),
        (Family::TwoSided, 2, 2, 2),
        (Family::TwoSided, 3, 3, 6),
        (Family::TwoSided, 4, 2, 11),
    ];
    for &(family, n, k, want) in cells {
        for d in small_witnesses(family, n, k).unwrap() {
            assert_eq!(d.alphabet().len(), k);
            assert_eq!(minimize(&d).n(), n, "{family} n={n} k={k}");
            let r = classify(&d).unwrap();
            let in_family = match family {
                Family::Right => r.is_right_ideal,
                Family::Left => r.is_left_ideal,
                Family::TwoSided => r.is_two_sided_ideal,
            };
            assert!(in_family, "{family} n={n} k={k}");
            assert_eq!(sigma_of_language(&d).unwrap(), want, "{family} n={n} k={k}");
        }
    }
}

#[test]
fn invalid_requests_are_rejected() {
    let invalid = |r: syncomplex::Result<_>| matches!(r, Err(Error::InvalidWitness(_)));
    assert!(invalid(right_ideal_witness(2, "abcd")));
    assert!(invalid(two_sided_witness(3, "abcdef")));
    assert!(invalid(right_ideal_witness(4, "")));
    assert!(invalid(right_ideal_witness(4, "ae")));
    assert!(invalid(right_ideal_witness(4, "aa")));
    assert!(invalid(left_ideal_witness(4, "abcde", Some(&[]))));
    assert!(invalid(left_ideal_witness(4, "abcde", Some(&[0, 3]))));
    assert!(invalid(left_ideal_witness(4, "abcde", Some(&[4]))));
    assert!(invalid(unary_threshold(0)));
    assert!(invalid(small_witness(Family::Right, 6, 2)));
    let spec = WitnessSpec {
        finals_override: Some(vec![1]),
        ..WitnessSpec::full(Family::Right, 4)
    };
    assert!(invalid(spec.build()));
    assert_eq!(full_letters(Family::TwoSided), "abcdef");
}
