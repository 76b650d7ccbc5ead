mod common;

use blf_core::{pairing, twist_power_form, BoundaryData, Curve, MappingClass, Sign};
use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;

fn primitive() -> impl Strategy<Value = (i64, i64)> {
    (-40i64..=40, -40i64..=40).prop_filter("primitive", |(p, q)| p.gcd(q) == 1)
}

fn curve((p, q): (i64, i64)) -> Curve {
    Curve::new(p, q).unwrap()
}

/// Words in A^{±1}, B^{±1}.
fn sl2() -> impl Strategy<Value = MappingClass> {
    prop::collection::vec(0usize..4, 0..8).prop_map(|word| {
        let a = MappingClass::new(1, 1, 0, 1).unwrap();
        let b = MappingClass::new(1, 0, -1, 1).unwrap();
        let gens = [a.clone(), a.inverse(), b.clone(), b.inverse()];
        word.iter().fold(MappingClass::identity(), |h, &g| gens[g].compose(&h))
    })
}

fn from_oracle(m: &common::M) -> MappingClass {
    let [[a, b], [c, d]] = m.clone();
    MappingClass::new(a, b, c, d).unwrap()
}

fn zz((p, q): (i64, i64)) -> (BigInt, BigInt) {
    (BigInt::from(p), BigInt::from(q))
}

proptest! {
    #[test]
    fn twist_matches_oracle(c in primitive()) {
        let t = MappingClass::twist(&curve(c));
        let (p, q) = zz(c);
        prop_assert_eq!(common::matrix(&t), common::twist(&p, &q));
    }

    #[test]
    fn twist_fixes_its_curve(c in primitive()) {
        let c = curve(c);
        let t = MappingClass::twist(&c);
        let [m11, m12, m21, m22] = t.entries();
        prop_assert_eq!(m11 * m22 - m12 * m21, BigInt::from(1));
        prop_assert_eq!(t.apply(&c), c);
    }

    #[test]
    fn twist_ignores_orientation(c in primitive()) {
        let (p, q) = zz(c);
        let t = common::twist(&p, &q);
        let u = common::twist(&-p, &-q);
        prop_assert_eq!(t, u);
        prop_assert_eq!(MappingClass::twist(&curve(c)), MappingClass::twist(&curve((-c.0, -c.1))));
    }

    #[test]
    fn naturality(c in primitive(), h in sl2()) {
        let c = curve(c);
        let lhs = MappingClass::twist(&h.apply(&c));
        let rhs = h.compose(&MappingClass::twist(&c)).compose(&h.inverse());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn apply_matches_oracle(c in primitive(), h in sl2()) {
        let (p0, q0) = zz(c);
        let (p, q) = common::apply(&common::matrix(&h), (&p0, &q0));
        let image = h.apply(&curve(c));
        let zero = BigInt::from(0);
        let canonical = if q > zero || (q == zero && p > zero) { (p, q) } else { (-p, -q) };
        prop_assert_eq!(common::pair(&image), canonical);
    }

    #[test]
    fn pairing_magnitude_is_invariant(c in primitive(), d in primitive(), h in sl2()) {
        let (c, d) = (curve(c), curve(d));
        let before = pairing(&c, &d);
        let after = pairing(&h.apply(&c), &h.apply(&d));
        prop_assert_eq!(before.magnitude(), after.magnitude());
    }

    #[test]
    fn twist_power_form_round_trip(a in primitive(), k in -50i64..=50, plus in any::<bool>()) {
        let (p, q) = zz(a);
        let t = common::twist(&p, &q);
        let mut m = common::id();
        let step = if k >= 0 { t.clone() } else { common::inv(&t) };
        for _ in 0..k.abs() {
            m = common::mul(&step, &m);
        }
        let (sign, m) = if plus { (Sign::Plus, m) } else { (Sign::Minus, common::neg(&m)) };
        let found = twist_power_form(&from_oracle(&m), &curve(a)).unwrap();
        prop_assert_eq!(found, BoundaryData::new(sign, k));
    }

    #[test]
    fn non_twist_powers_are_rejected(a in primitive(), k in 1i64..20) {
        // conjugating by a twist about a crossing curve moves the fixed line
        let a = curve(a);
        let crossing = extend(&a);
        let m = MappingClass::twist(&crossing).pow(k).compose(&MappingClass::twist(&a));
        prop_assert!(twist_power_form(&m, &a).is_err());
    }
}

fn extend(a: &Curve) -> Curve {
    let v = blf_core::extend_to_basis(a).unwrap();
    v.apply(&Curve::b())
}
