use num_bigint::BigInt;
use proptest::prelude::*;
use qrk::exact::QLaurent;
use qrk::qkit::{q_int, qn, quantum_pow};
use qrk::qnt::*;
use qrk::Error;

fn lp(min: i64, c: &[i64]) -> QLaurent {
    QLaurent::from_ints(min, c)
}

fn residue(m: u64, min: i64, c: &[i64]) -> ModElem {
    reduce_mod(&lp(min, c), m).unwrap()
}

proptest! {
    #[test]
    fn reduction_is_a_ring_homomorphism(
        m in 2u64..=20,
        a in prop::collection::vec(-5i64..=5, 0..12), amin in -6i64..6,
        b in prop::collection::vec(-5i64..=5, 0..12), bmin in -6i64..6,
    ) {
        let f = lp(amin, &a);
        let g = lp(bmin, &b);
        let rf = reduce_mod(&f, m).unwrap();
        let rg = reduce_mod(&g, m).unwrap();
        prop_assert_eq!(reduce_mod(&(&f * &g), m).unwrap(), rf.mul(&rg));
        prop_assert_eq!(reduce_mod(&(&f + &g), m).unwrap(), rf.add(&rg));
        prop_assert_eq!(reduce_mod(&rf.to_laurent(), m).unwrap(), rf.clone());
        prop_assert!((rf.residue().len() as u64) < m);
    }

    #[test]
    fn residue_difference_is_a_multiple_of_the_modulus(
        m in 2u64..=12, a in prop::collection::vec(-5i64..=5, 0..20),
    ) {
        let f = lp(0, &a);
        let r = reduce_mod(&f, m).unwrap().to_laurent();
        // f - r vanishes at every primitive root of unity of order dividing m,
        // so it is divisible by [m] after folding q^m -> 1 through (q^m - 1)
        let diff = &f - &r;
        let qm1 = &QLaurent::q_pow(m as i64) - &QLaurent::one();
        let folded = diff.div_rem(&qm1).unwrap().1;
        prop_assert!(folded.div_exact(&qn(m as i64)).is_ok());
    }
}

#[test]
fn reduction_examples() {
    assert_eq!(residue(3, 3, &[1]), ModElem::one(3));
    assert_eq!(residue(3, -1, &[1]), residue(3, 0, &[-1, -1]));
    assert!(residue(3, 0, &[1, 1, 1]).is_zero());
    assert_eq!(
        reduce_mod(&QLaurent::constant(qrk::exact::rational::rat(1, 2)), 3),
        Err(Error::NonIntegerCoefficient("1/2".into()))
    );
}

#[test]
fn fermat_examples() {
    let r = reduce_mod(&quantum_pow(2, 2), 3).unwrap();
    assert_eq!(r, ModElem::one(3));
    assert!(q_fermat_check(2, 3).unwrap().is_pass());
    assert!(q_fermat_check(6, 3).unwrap().is_pass());
    assert!(reduce_mod(&quantum_pow(6, 3), 3).unwrap().is_zero());
    assert_eq!(q_fermat_check(2, 4), Err(Error::NotPrime(4)));
}

#[test]
fn fermat_sweep_all_branches() {
    for p in [2u64, 3, 5, 7, 11, 13] {
        for a in 1..=30 {
            let v = q_fermat_check(a, p).unwrap();
            assert!(v.is_pass(), "a = {a}, p = {p}: {v:?}");
        }
    }
}

#[test]
fn fermat_agrees_with_direct_expansion() {
    for p in [3u64, 5] {
        for a in 1..=7u64 {
            let direct = reduce_mod(&quantum_pow(a, p as u32 - 1), p).unwrap();
            assert_eq!(direct, quantum_pow_mod(a, p - 1, p));
        }
    }
}

#[test]
fn euler_examples() {
    let f = reduce_mod(&(&qn(3) * &q_int(3, 3).unwrap()), 4).unwrap();
    assert_eq!(f, ModElem::one(4));
    assert!(q_euler_check(5, 6).unwrap().is_pass());
    assert_eq!(q_euler_check(2, 4), Err(Error::NotCoprime { a: 2, m: 4 }));
    for p in [3u64, 5, 7] {
        for a in 1..p {
            assert_eq!(q_euler_check(a, p).unwrap().is_pass(), q_fermat_check(a, p).unwrap().is_pass());
        }
    }
}

#[test]
fn euler_sweep_composite_moduli() {
    for m in (4..=20u64).filter(|&m| !qrk::exact::intpoly::is_prime_u64(m)) {
        for a in (1..=20u64).filter(|a| num_integer::gcd(*a, m) == 1) {
            assert!(q_euler_check(a, m).unwrap().is_pass(), "a = {a}, m = {m}");
        }
    }
}

#[test]
fn linear_congruence_solutions() {
    let x = modp_solve(3, 0, &ModElem::one(4), 4).unwrap();
    assert_eq!(x, reduce_mod(&q_int(3, 3).unwrap(), 4).unwrap());
    assert!(modp_solve(3, 0, &ModElem::zero(4), 4).unwrap().is_zero());
    let x = modp_solve(2, 0, &ModElem::one(5), 5).unwrap();
    let expected = [2, 3, 4].iter().fold(ModElem::one(5), |acc, &r| acc.mul(&ModElem::q_int(5, 2, r)));
    assert_eq!(x, expected);
    assert_eq!(ModElem::q_int(5, 2, 1).mul(&x), ModElem::one(5));
}

#[test]
fn inverses_and_wilson() {
    for p in [5u64, 7, 11, 13] {
        let t = inverse_table(p).unwrap();
        let fixed: Vec<u64> = t.iter().filter(|(a, b)| a == b).map(|(a, _)| *a).collect();
        assert_eq!(fixed, vec![1, p - 1]);
        assert!(t.iter().all(|(a, b)| a * b % p == 1 && *b > 0 && *b < p));
    }
    assert_eq!(inverse_table(5).unwrap()[&2], 3);
    assert_eq!(inverse_table(7).unwrap()[&3], 5);
    assert_eq!(reduce_mod(&QLaurent::q_pow(-1), 3).unwrap().neg(), residue(3, 0, &[1, 1]));
    for p in [3u64, 5, 7, 11, 13] {
        assert!(q_wilson_check(p).unwrap().is_pass(), "p = {p}");
    }
    assert!(q_wilson_check(2).is_err());
}

#[test]
fn special_congruences() {
    assert_eq!(residue(3, 0, &[1, -1]).mul(&residue(3, 0, &[1, 0, -1])), ModElem::from_int(3, 3));
    for p in [3u64, 5, 7, 11, 13] {
        let v = special_congruences_check(p).unwrap();
        assert!(v.is_pass(), "p = {p}: {v:?}");
    }
    assert_eq!(sqrt_minus_one(5), vec![2, 3]);
    assert_eq!(sqrt_minus_one(13), vec![5, 8]);
    // the sign matters: +q^(1-a) is not congruent
    let prod = ModElem::q_int(5, 2, -3).mul(&ModElem::q_int(5, 2, 1));
    assert_eq!(prod, ModElem::monomial(5, -1, 4));
    assert_ne!(prod, ModElem::monomial(5, 1, -1));
}

#[test]
fn root_products() {
    for p in [3u64, 5, 7] {
        assert!(root_product_check(p).unwrap().is_pass());
    }
}

#[test]
fn chi_polynomials() {
    assert_eq!(chi_poly(3).unwrap().to_string(), "-2 + y");
    assert_eq!(chi_poly(5).unwrap().to_string(), "-4 + 3*y + y^3 - 2*y^5 + y^6");
    let c7 = chi_poly(7).unwrap();
    assert_eq!(c7.degree(), 15);
    assert_eq!(&c7.poly * &psi_poly(7), phi_poly(7));
    assert_eq!(
        chi_poly(2),
        Err(Error::NonzeroRemainder { remainder: QLaurent::from_int(-4).with_var('y') })
    );
    for p in [3u64, 5, 7, 11] {
        assert_eq!(chi_poly(p).unwrap().degree(), ((p - 1) * (p - 2) / 2) as i64);
    }
    assert_eq!(chi_poly(5).unwrap().coefficients(), [-4, 3, 0, 1, 0, -2, 1].map(BigInt::from).to_vec());
}
