//! Cycle systems `(a; b_1, …, b_ℓ)` and the Hurwitz moves between them.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::mcg::{twist_power_form, BoundaryData, Curve, MappingClass};

/// Boundary vanishing cycle plus the ordered Lefschetz vanishing cycles.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleSystem {
    boundary: Curve,
    cycles: Vec<Curve>,
}

impl CycleSystem {
    pub fn new(boundary: Curve, cycles: Vec<Curve>) -> Result<Self> {
        if boundary.is_trivial() {
            return Err(Error::TrivialBoundary);
        }
        Ok(CycleSystem { boundary, cycles })
    }

    /// A system whose boundary curve is `a`.
    pub fn with_cycles(cycles: Vec<Curve>) -> Self {
        CycleSystem {
            boundary: Curve::a(),
            cycles,
        }
    }

    /// `(a; b+k_1 a, …, b+k_r a)`.
    pub fn from_ks<K: Into<BigInt>>(ks: impl IntoIterator<Item = K>) -> Self {
        Self::with_cycles(ks.into_iter().map(Curve::b_plus).collect())
    }

    pub fn boundary(&self) -> &Curve {
        &self.boundary
    }

    pub fn cycles(&self) -> &[Curve] {
        &self.cycles
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// `T_{b_ℓ} · … · T_{b_1}`; the first cycle acts first.
    pub fn monodromy(&self) -> MappingClass {
        self.cycles
            .iter()
            .fold(MappingClass::identity(), |acc, c| {
                MappingClass::twist(c).compose(&acc)
            })
    }

    /// `(ε, k)` with `monodromy = ε·T_boundary^k`; fails exactly when the
    /// tuple is not an abstract cycle system.
    pub fn boundary_data(&self) -> Result<BoundaryData> {
        twist_power_form(&self.monodromy(), &self.boundary)
    }

    /// Euler characteristic of the total space, the number of Lefschetz cycles.
    pub fn euler_characteristic(&self) -> usize {
        self.cycles.len()
    }

    /// Image under a mapping class applied to every curve.
    pub fn transformed(&self, h: &MappingClass) -> CycleSystem {
        CycleSystem {
            boundary: h.apply(&self.boundary),
            cycles: self.cycles.iter().map(|c| h.apply(c)).collect(),
        }
    }

    fn check_swap(&self, i: usize) -> Result<usize> {
        if i == 0 || i >= self.cycles.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.cycles.len(),
            });
        }
        Ok(i - 1)
    }

    pub fn apply_move(&self, m: &Move) -> Result<CycleSystem> {
        let mut next = self.clone();
        match m {
            Move::SwapLeft(i) => {
                let j = self.check_swap(*i)?;
                let (x, y) = (&self.cycles[j], &self.cycles[j + 1]);
                next.cycles[j] = y.clone();
                next.cycles[j + 1] = MappingClass::twist(y).apply(x);
            }
            Move::SwapRight(i) => {
                let j = self.check_swap(*i)?;
                let (x, y) = (&self.cycles[j], &self.cycles[j + 1]);
                next.cycles[j] = MappingClass::twist(x).inverse().apply(y);
                next.cycles[j + 1] = x.clone();
            }
            Move::RotateForward => {
                if self.cycles.is_empty() {
                    return Err(Error::IndexOutOfRange { index: 1, len: 0 });
                }
                next.boundary = MappingClass::twist(&self.cycles[0]).apply(&self.boundary);
                next.cycles.rotate_left(1);
            }
            Move::RotateBack => {
                let Some(last) = self.cycles.last() else {
                    return Err(Error::IndexOutOfRange { index: 1, len: 0 });
                };
                next.boundary = MappingClass::twist(last).inverse().apply(&self.boundary);
                next.cycles.rotate_right(1);
            }
            Move::Global(h) => next = self.transformed(h),
        }
        Ok(next)
    }

    pub fn replay<'a>(&self, moves: impl IntoIterator<Item = &'a Move>) -> Result<CycleSystem> {
        moves
            .into_iter()
            .try_fold(self.clone(), |s, m| s.apply_move(m))
    }
}

impl fmt::Display for CycleSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};", self.boundary)?;
        for (n, c) in self.cycles.iter().enumerate() {
            let sep = if n == 0 { " " } else { ", " };
            write!(f, "{sep}{c}")?;
        }
        f.write_str(")")
    }
}

/// One Hurwitz move. Swap indices are 1-based: `SwapLeft(i)` acts on
/// cycles `i` and `i+1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Move {
    /// `(…, c_i, c_{i+1}, …) → (…, c_{i+1}, T_{c_{i+1}}(c_i), …)`
    SwapLeft(usize),
    /// `(…, c_i, c_{i+1}, …) → (…, T_{c_i}^{-1}(c_{i+1}), c_i, …)`
    SwapRight(usize),
    /// `(a; c_1, …, c_ℓ) → (T_{c_1}(a); c_2, …, c_ℓ, c_1)`
    RotateForward,
    /// `(a; c_1, …, c_ℓ) → (T_{c_ℓ}^{-1}(a); c_ℓ, c_1, …, c_{ℓ-1})`
    RotateBack,
    /// Change of identification of the reference fibre.
    Global(MappingClass),
}

impl Move {
    pub fn inverse(&self) -> Move {
        match self {
            Move::SwapLeft(i) => Move::SwapRight(*i),
            Move::SwapRight(i) => Move::SwapLeft(*i),
            Move::RotateForward => Move::RotateBack,
            Move::RotateBack => Move::RotateForward,
            Move::Global(h) => Move::Global(h.inverse()),
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::SwapLeft(i) => write!(f, "swapl {i}"),
            Move::SwapRight(i) => write!(f, "swapr {i}"),
            Move::RotateForward => f.write_str("rotf"),
            Move::RotateBack => f.write_str("rotb"),
            Move::Global(h) => {
                let [m11, m12, m21, m22] = h.entries();
                write!(f, "global {m11} {m12} {m21} {m22}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse move {0:?}")]
pub struct ParseMoveError(pub String);

impl FromStr for Move {
    type Err = ParseMoveError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let err = || ParseMoveError(s.to_string());
        let words: Vec<&str> = s.split_whitespace().collect();
        match words.as_slice() {
            ["swapl", i] => i.parse().map(Move::SwapLeft).map_err(|_| err()),
            ["swapr", i] => i.parse().map(Move::SwapRight).map_err(|_| err()),
            ["rotf"] => Ok(Move::RotateForward),
            ["rotb"] => Ok(Move::RotateBack),
            ["global", m11, m12, m21, m22] => {
                let mut entries = [m11, m12, m21, m22].into_iter().map(|w| w.parse::<BigInt>());
                let mut next = || entries.next().unwrap().map_err(|_| err());
                let (m11, m12, m21, m22) = (next()?, next()?, next()?, next()?);
                MappingClass::new(m11, m12, m21, m22)
                    .map(Move::Global)
                    .map_err(|_| err())
            }
            _ => Err(err()),
        }
    }
}
