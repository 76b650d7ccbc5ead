//! Curves on the torus and the torus mapping class group.
//!
//! Everything is expressed in the fixed dual pair `a = (1,0)`, `b = (0,1)`
//! with `<a,b> = +1`. A curve class `(p,q)` stands for `p·a + q·b`, and a
//! mapping class is a determinant one integer matrix acting on column
//! vectors. Curves are unoriented, so `(p,q)` and `(-p,-q)` are identified
//! and stored with the sign fixed by `q > 0`, or `q = 0` and `p > 0`.

use std::fmt;
use std::ops::{Mul, Neg};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Isotopy class of a simple closed curve on the torus.
///
/// The null-homotopic class is stored as `(0,0)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Curve {
    q: BigInt,
    p: BigInt,
}

impl Curve {
    /// Builds the class `p·a + q·b`, rejecting non-primitive nonzero pairs.
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        let (p, q) = (p.into(), q.into());
        if !(p.is_zero() && q.is_zero()) && !p.gcd(&q).is_one() {
            return Err(Error::NonPrimitive { p, q });
        }
        Ok(Self::canonical(p, q))
    }

    fn canonical(p: BigInt, q: BigInt) -> Self {
        if q.is_negative() || (q.is_zero() && p.is_negative()) {
            Curve { p: -p, q: -q }
        } else {
            Curve { p, q }
        }
    }

    pub fn trivial() -> Self {
        Curve {
            p: BigInt::zero(),
            q: BigInt::zero(),
        }
    }

    /// The first curve `a = (1,0)` of the dual pair.
    pub fn a() -> Self {
        Curve {
            p: BigInt::one(),
            q: BigInt::zero(),
        }
    }

    /// The second curve `b = (0,1)` of the dual pair.
    pub fn b() -> Self {
        Curve {
            p: BigInt::zero(),
            q: BigInt::one(),
        }
    }

    /// The curve `b + k·a`, i.e. `A^k(b)`.
    pub fn b_plus(k: impl Into<BigInt>) -> Self {
        Curve {
            p: k.into(),
            q: BigInt::one(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn is_essential(&self) -> bool {
        !self.is_trivial()
    }

    /// Coefficient of `a` in the canonical representative.
    pub fn p(&self) -> &BigInt {
        &self.p
    }

    /// Coefficient of `b` in the canonical representative.
    pub fn q(&self) -> &BigInt {
        &self.q
    }

    /// `Some(k)` when the curve is `b + k·a`.
    pub fn b_coefficient(&self) -> Option<&BigInt> {
        self.q.is_one().then_some(&self.p)
    }
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        if self.q.is_zero() {
            return f.write_str("a");
        }
        if !self.q.is_one() {
            return write!(f, "({},{})", self.p, self.q);
        }
        f.write_str("b")?;
        let k = &self.p;
        if k.is_zero() {
            Ok(())
        } else if k.is_one() {
            f.write_str("+a")
        } else if *k == -BigInt::one() {
            f.write_str("-a")
        } else if k.is_positive() {
            write!(f, "+{k}a")
        } else {
            write!(f, "{k}a")
        }
    }
}

/// Algebraic intersection `<c,d> = p·q' - q·p'` of the canonical representatives.
pub fn pairing(c: &Curve, d: &Curve) -> BigInt {
    &c.p * &d.q - &c.q * &d.p
}

/// Element of the torus mapping class group, as a matrix in `SL(2,Z)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MappingClass {
    m: [[BigInt; 2]; 2],
}

impl MappingClass {
    pub fn new(
        m11: impl Into<BigInt>,
        m12: impl Into<BigInt>,
        m21: impl Into<BigInt>,
        m22: impl Into<BigInt>,
    ) -> Result<Self> {
        let m = [[m11.into(), m12.into()], [m21.into(), m22.into()]];
        if !(&m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]).is_one() {
            let [[m11, m12], [m21, m22]] = m;
            return Err(Error::NotUnimodular(format!("[[{m11}, {m12}], [{m21}, {m22}]]")));
        }
        Ok(MappingClass { m })
    }

    fn raw(m11: BigInt, m12: BigInt, m21: BigInt, m22: BigInt) -> Self {
        MappingClass {
            m: [[m11, m12], [m21, m22]],
        }
    }

    pub fn identity() -> Self {
        Self::raw(BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one())
    }

    /// `A^k`, the k-th power of the twist about `a`.
    pub fn a_power(k: impl Into<BigInt>) -> Self {
        Self::raw(BigInt::one(), k.into(), BigInt::zero(), BigInt::one())
    }

    /// Right-handed Dehn twist about `c`, acting by `v ↦ v + <c,v>·c`.
    ///
    /// Depends on `c` only through `pq`, `p²` and `q²`, so the orientation
    /// of `c` is irrelevant. The null-homotopic curve gives the identity.
    pub fn twist(c: &Curve) -> Self {
        let pq = &c.p * &c.q;
        Self::raw(
            BigInt::one() - &pq,
            &c.p * &c.p,
            -(&c.q * &c.q),
            BigInt::one() + &pq,
        )
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.m[0][0], &self.m[0][1], &self.m[1][0], &self.m[1][1]]
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// Matrix product `self · other` (apply `other` first).
    pub fn compose(&self, other: &MappingClass) -> MappingClass {
        let (x, y) = (&self.m, &other.m);
        Self::raw(
            &x[0][0] * &y[0][0] + &x[0][1] * &y[1][0],
            &x[0][0] * &y[0][1] + &x[0][1] * &y[1][1],
            &x[1][0] * &y[0][0] + &x[1][1] * &y[1][0],
            &x[1][0] * &y[0][1] + &x[1][1] * &y[1][1],
        )
    }

    pub fn inverse(&self) -> MappingClass {
        let m = &self.m;
        Self::raw(m[1][1].clone(), -&m[0][1], -&m[1][0], m[0][0].clone())
    }

    /// `self^k` for any integer `k`.
    pub fn pow(&self, k: i64) -> MappingClass {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut result = Self::identity();
        let mut square = base;
        let mut e = k.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                result = result.compose(&square);
            }
            square = square.compose(&square);
            e >>= 1;
        }
        result
    }

    /// Image of an unoriented curve, re-canonicalized.
    pub fn apply(&self, c: &Curve) -> Curve {
        let m = &self.m;
        Curve::canonical(
            &m[0][0] * &c.p + &m[0][1] * &c.q,
            &m[1][0] * &c.p + &m[1][1] * &c.q,
        )
    }
}

impl Mul for &MappingClass {
    type Output = MappingClass;

    fn mul(self, rhs: &MappingClass) -> MappingClass {
        self.compose(rhs)
    }
}

impl Neg for MappingClass {
    type Output = MappingClass;

    fn neg(self) -> MappingClass {
        let [[m11, m12], [m21, m22]] = self.m;
        Self::raw(-m11, -m12, -m21, -m22)
    }
}

impl fmt::Display for MappingClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.m;
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            m[0][0], m[0][1], m[1][0], m[1][1]
        )
    }
}

/// Sign of a twist power; `Plus` means the divisor is co-orientable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// The pair `(ε, k)` with monodromy `ε·T_a^k`.
///
/// `k` is the normal Euler number of the divisor.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoundaryData {
    pub sign: Sign,
    pub k: BigInt,
}

impl BoundaryData {
    pub fn new(sign: Sign, k: impl Into<BigInt>) -> Self {
        BoundaryData { sign, k: k.into() }
    }

    pub fn coorientable(&self) -> bool {
        self.sign == Sign::Plus
    }
}

impl fmt::Display for BoundaryData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.sign, self.k)
    }
}

/// A determinant one matrix whose first column is the canonical representative of `a`.
pub fn extend_to_basis(a: &Curve) -> Result<MappingClass> {
    if a.is_trivial() {
        return Err(Error::TrivialBoundary);
    }
    // s·p + t·q = 1, so [[p, -t], [q, s]] has determinant one.
    let e = a.p.extended_gcd(&a.q);
    debug_assert!(e.gcd.is_one());
    Ok(MappingClass::raw(a.p.clone(), -e.y, a.q.clone(), e.x))
}

/// Recognizes `m = ε·T_a^k` and returns `(ε, k)`.
pub fn twist_power_form(m: &MappingClass, a: &Curve) -> Result<BoundaryData> {
    let basis = extend_to_basis(a)?;
    let n = basis.inverse().compose(m).compose(&basis);
    let [[n11, n12], [n21, n22]] = &n.m;
    let not_power = || Error::NotTwistPower {
        monodromy: m.to_string(),
    };
    if !n21.is_zero() || n11 != n22 {
        return Err(not_power());
    }
    if n11.is_one() {
        Ok(BoundaryData::new(Sign::Plus, n12.clone()))
    } else if *n11 == -BigInt::one() {
        Ok(BoundaryData::new(Sign::Minus, -n12))
    } else {
        Err(not_power())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mc(m11: i64, m12: i64, m21: i64, m22: i64) -> MappingClass {
        MappingClass::new(m11, m12, m21, m22).unwrap()
    }

    fn curve(p: i64, q: i64) -> Curve {
        Curve::new(p, q).unwrap()
    }

    #[test]
    fn make_curve_examples() {
        assert!(curve(0, 0).is_trivial());
        assert_eq!(curve(-2, -1), curve(2, 1));
        assert_eq!(curve(-2, -1).p(), &BigInt::from(2));
        assert_eq!(curve(-1, 0), Curve::a());
        assert!(matches!(Curve::new(-3, 0), Err(Error::NonPrimitive { .. })));
        assert!(matches!(Curve::new(2, 4), Err(Error::NonPrimitive { .. })));
        assert!(matches!(Curve::new(0, 5), Err(Error::NonPrimitive { .. })));
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(pairing(&Curve::a(), &Curve::b()), BigInt::from(1));
        assert_eq!(pairing(&curve(2, 1), &curve(0, 1)), BigInt::from(2));
        let c = curve(5, 3);
        assert!(pairing(&c, &c).is_zero());
        assert!(pairing(&Curve::trivial(), &c).is_zero());
    }

    #[test]
    fn twist_examples() {
        assert_eq!(MappingClass::twist(&Curve::a()), mc(1, 1, 0, 1));
        assert_eq!(MappingClass::twist(&Curve::b()), mc(1, 0, -1, 1));
        assert!(MappingClass::twist(&Curve::trivial()).is_identity());
    }

    #[test]
    fn apply_examples() {
        let a = MappingClass::twist(&Curve::a());
        assert_eq!(a.apply(&Curve::b()), curve(1, 1));
        let t = MappingClass::twist(&Curve::b_plus(2)).inverse();
        assert_eq!(t.apply(&Curve::b()), curve(4, 1));
        assert!(mc(2, 1, 1, 1).apply(&Curve::trivial()).is_trivial());
    }

    #[test]
    fn braid_and_order_relations() {
        let a = MappingClass::twist(&Curve::a());
        let b = MappingClass::twist(&Curve::b());
        assert!((&a * &a.inverse()).is_identity());
        assert_eq!(&(&a * &b) * &a, &(&b * &a) * &b);
        let ab = &a * &b;
        assert_eq!(ab.pow(3), -MappingClass::identity());
        assert!(ab.pow(6).is_identity());
        assert_eq!(a.pow(-4), MappingClass::a_power(-4));
    }

    #[test]
    fn twist_power_form_examples() {
        let a = Curve::a();
        assert_eq!(
            twist_power_form(&MappingClass::identity(), &a).unwrap(),
            BoundaryData::new(Sign::Plus, 0)
        );
        let m = -MappingClass::a_power(-4);
        assert_eq!(
            twist_power_form(&m, &a).unwrap(),
            BoundaryData::new(Sign::Minus, -4)
        );
        let b = MappingClass::twist(&Curve::b());
        assert!(matches!(
            twist_power_form(&b, &a),
            Err(Error::NotTwistPower { .. })
        ));
        assert_eq!(
            twist_power_form(&b, &Curve::trivial()),
            Err(Error::TrivialBoundary)
        );
    }

    #[test]
    fn extend_to_basis_examples() {
        assert!(extend_to_basis(&Curve::a()).unwrap().is_identity());
        assert_eq!(extend_to_basis(&Curve::b()).unwrap(), mc(0, -1, 1, 0));
        let v = extend_to_basis(&curve(2, 1)).unwrap();
        assert_eq!(v.apply(&Curve::a()), curve(2, 1));
        assert_eq!(v.entries()[0], &BigInt::from(2));
        assert_eq!(v.entries()[2], &BigInt::from(1));
    }

    #[test]
    fn rejects_non_unimodular() {
        assert!(matches!(
            MappingClass::new(2, 0, 0, 1),
            Err(Error::NotUnimodular(..))
        ));
    }

    #[test]
    fn display_uses_basis_notation() {
        assert_eq!(Curve::trivial().to_string(), "0");
        assert_eq!(Curve::a().to_string(), "a");
        assert_eq!(Curve::b().to_string(), "b");
        assert_eq!(Curve::b_plus(1).to_string(), "b+a");
        assert_eq!(Curve::b_plus(-1).to_string(), "b-a");
        assert_eq!(Curve::b_plus(-4).to_string(), "b-4a");
        assert_eq!(curve(-7, 2).to_string(), "(-7,2)");
    }
}
