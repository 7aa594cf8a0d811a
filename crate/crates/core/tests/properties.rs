use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

use orbring::chern_loc::{mult_twist, support_decomposition, support_project};
use orbring::cyclotomic::rat;
use orbring::group::catalog;
use orbring::{character_table, ClassFunction, Cyclotomic, FiniteGroup};

const CONDUCTORS: [u64; 6] = [1, 3, 4, 5, 8, 12];
const GROUPS: [&str; 6] = [
    "cyclic(4)",
    "symmetric(3)",
    "quaternion8",
    "dihedral(4)",
    "alternating(4)",
    "klein4",
];

fn cyclotomic() -> impl Strategy<Value = Cyclotomic> {
    (
        prop::sample::select(CONDUCTORS.to_vec()),
        prop::collection::vec((-4i64..5, 1i64..4), 12),
    )
        .prop_map(|(n, cs)| {
            let mut x = Cyclotomic::zero();
            for (k, &(num, den)) in cs.iter().enumerate().take(n as usize) {
                x += &Cyclotomic::root_of_unity(n, k as i64).scale(&rat(num, den));
            }
            x
        })
}

fn group() -> impl Strategy<Value = Arc<FiniteGroup>> {
    prop::sample::select(GROUPS.to_vec()).prop_map(|n| catalog(n).unwrap())
}

/// A group with a genuine character given by small irreducible multiplicities.
fn group_and_character() -> impl Strategy<Value = (Arc<FiniteGroup>, ClassFunction)> {
    (group(), prop::collection::vec(0u32..3, 8)).prop_map(|(g, m)| {
        let t = character_table(&g).unwrap();
        let mult: Vec<BigInt> = (0..t.len()).map(|i| BigInt::from(m[i])).collect();
        let chi = t.combine(&mult);
        (g, chi)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(x in cyclotomic(), y in cyclotomic(), z in cyclotomic()) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert!((&x - &x).is_zero());
        if !x.is_zero() {
            prop_assert!((&x * &x.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn text_round_trip(x in cyclotomic()) {
        let back: Cyclotomic = x.to_string().parse().unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn lift_preserves_value(x in cyclotomic(), m in 1u64..4) {
        let n = x.conductor() * m;
        let lifted = x.lift(n);
        prop_assert_eq!(&lifted, &x);
        prop_assert_eq!(lifted.minimal().conductor(), x.minimal().conductor());
    }

    #[test]
    fn galois_composes(x in cyclotomic(), j in 1i64..120, k in 1i64..120) {
        let n = 120i64;
        let coprime = |a: i64| num_integer::gcd(a, n) == 1;
        prop_assume!(coprime(j) && coprime(k));
        let step = x.galois(j).unwrap().galois(k).unwrap();
        prop_assert_eq!(step, x.galois(j * k).unwrap());
    }

    #[test]
    fn adams_composes((_g, chi) in group_and_character(), j in -3i64..4, k in -3i64..4) {
        prop_assert_eq!(chi.adams(j).adams(k), chi.adams(j * k));
    }

    #[test]
    fn lambda_is_multiplicative((g, a) in group_and_character(), m in prop::collection::vec(0u32..2, 8)) {
        let t = character_table(&g).unwrap();
        let mult: Vec<BigInt> = (0..t.len()).map(|i| BigInt::from(m[i])).collect();
        let b = t.combine(&mult);
        let lhs = a.add(&b).lambda_minus_one_dual().unwrap();
        let rhs = a.lambda_minus_one_dual().unwrap().mul(&b.lambda_minus_one_dual().unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn projection_formula((g, psi) in group_and_character(), x in 0usize..24) {
        let x = x % g.order();
        let z = g.centralizer_subgroup(&[x]);
        let zt = character_table(&z.group).unwrap();
        let chi = zt.irreducibles[x % zt.len()].clone();
        let lhs = chi.mul(&psi.restrict(&z)).induce(&z);
        let rhs = chi.induce(&z).mul(&psi);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn support_projections((_g, chi) in group_and_character()) {
        let parts = support_decomposition(&chi);
        let mut total = ClassFunction::zero(chi.group());
        for (c, p) in parts.iter().enumerate() {
            prop_assert_eq!(&support_project(p, c), p);
            total = total.add(p);
        }
        prop_assert_eq!(total, chi);
    }

    #[test]
    fn twists_invert((g, chi) in group_and_character()) {
        for h in (0..g.order()).filter(|&h| (0..g.order()).all(|x| g.commute(h, x))) {
            let back = mult_twist(&mult_twist(&chi, h).unwrap(), g.inv(h)).unwrap();
            prop_assert_eq!(back, chi.clone());
        }
    }
}

#[test]
fn root_sums_vanish() {
    for n in 2..16u64 {
        let mut s = Cyclotomic::zero();
        for k in 0..n {
            s += &Cyclotomic::root_of_unity(n, k as i64);
        }
        assert!(s.is_zero(), "n = {n}");
    }
    assert!(Cyclotomic::root_of_unity(1, 0).is_one());
}

#[test]
fn column_orthogonality() {
    for name in GROUPS
        .iter()
        .chain(&["symmetric(4)", "binary_dihedral(3)", "dihedral(6)"])
    {
        let g = catalog(name).unwrap();
        let t = character_table(&g).unwrap();
        let conj = g.conjugacy();
        for c in 0..conj.len() {
            for d in 0..conj.len() {
                let mut s = Cyclotomic::zero();
                for chi in &t.irreducibles {
                    s += &(chi.value(c) * &chi.value(d).conj());
                }
                let want = if c == d {
                    Cyclotomic::from((g.order() / conj.class_size(c)) as i64)
                } else {
                    Cyclotomic::zero()
                };
                assert_eq!(s, want, "{name} classes {c} {d}");
            }
        }
    }
}
