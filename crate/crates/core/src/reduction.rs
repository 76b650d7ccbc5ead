//! Reductions that split off a connected summand, and the trace they leave.
//!
//! Every step is audited: the boundary data predicted by the bookkeeping is
//! compared with a fresh matrix computation on the new system, and any
//! mismatch aborts with `InternalAuditFailure`.
//!
//! | step | removes | summand | `(ε, k)` becomes |
//! |---|---|---|---|
//! | Hurwitz moves | nothing | none | `(ε, k)` |
//! | blow-down of `0` | one cycle | `CP2bar` | `(ε, k)` |
//! | blow-down of `a` | one cycle | `CP2bar` | `(ε, k-1)` |
//! | contract a difference-3 pair | one cycle | `CP2` | `(-ε, k+5)` |
//! | delete a difference-2 pair | two cycles | `S2xS2` | `(-ε, k+4)` |

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::mcg::{BoundaryData, Curve, MappingClass};
use crate::system::{CycleSystem, Move};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Summand {
    CP2,
    CP2bar,
    S2xS2,
}

impl Summand {
    pub fn name(self) -> &'static str {
        match self {
            Summand::CP2 => "CP2",
            Summand::CP2bar => "CP2bar",
            Summand::S2xS2 => "S2xS2",
        }
    }
}

impl fmt::Display for Summand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// What a trace step did to the system. Indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Action {
    /// A word of Hurwitz moves; the total space is unchanged.
    Hurwitz(Vec<Move>),
    /// Remove a null-homotopic or boundary-parallel cycle `i`; earlier
    /// cycles are twisted by `T_boundary`.
    BlowDown { index: usize },
    /// Replace `(b+(m+3)a, b+ma)` at `i` by `b+(m-1)a`; earlier cycles get `A^{-5}`.
    ContractPair { index: usize },
    /// Remove `(b+(m+2)a, b+ma)` at `i` when cycle `i+2` is `b+ma`;
    /// earlier cycles get `A^{-4}`.
    DeletePair { index: usize },
}

fn precondition(msg: impl Into<String>) -> Error {
    Error::PreconditionViolated(msg.into())
}

/// `k` of cycle `i` (1-based) when the boundary is `a` and the cycle is `b+ka`.
pub(crate) fn k_at(s: &CycleSystem, i: usize) -> Result<BigInt> {
    if s.boundary() != &Curve::a() {
        return Err(precondition("boundary curve must be a"));
    }
    let c = i
        .checked_sub(1)
        .and_then(|j| s.cycles().get(j))
        .ok_or(Error::IndexOutOfRange {
            index: i,
            len: s.len(),
        })?;
    c.b_coefficient()
        .cloned()
        .ok_or_else(|| precondition(format!("cycle {i} = {c} is not of the form b+ka")))
}

fn difference(s: &CycleSystem, i: usize) -> Result<BigInt> {
    Ok(k_at(s, i)? - k_at(s, i + 1)?)
}

fn require_difference(s: &CycleSystem, i: usize, d: i64) -> Result<BigInt> {
    let actual = difference(s, i)?;
    if actual != BigInt::from(d) {
        return Err(precondition(format!(
            "k_{i} - k_{} = {actual}, expected {d}",
            i + 1
        )));
    }
    Ok(actual)
}

fn twist_prefix(cycles: &mut [Curve], h: &MappingClass) {
    for c in cycles {
        *c = h.apply(c);
    }
}

impl Action {
    pub fn summand(&self) -> Option<Summand> {
        match self {
            Action::Hurwitz(_) => None,
            Action::BlowDown { .. } => Some(Summand::CP2bar),
            Action::ContractPair { .. } => Some(Summand::CP2),
            Action::DeletePair { .. } => Some(Summand::S2xS2),
        }
    }

    pub fn apply(&self, s: &CycleSystem) -> Result<CycleSystem> {
        let mut cycles = s.cycles().to_vec();
        match *self {
            Action::Hurwitz(ref moves) => return s.replay(moves),
            Action::BlowDown { index } => {
                let j = index
                    .checked_sub(1)
                    .filter(|&j| j < cycles.len())
                    .ok_or(Error::IndexOutOfRange {
                        index,
                        len: s.len(),
                    })?;
                let removed = cycles.remove(j);
                if removed != *s.boundary() {
                    if !removed.is_trivial() {
                        return Err(Error::NotBlowdownable { index });
                    }
                } else {
                    twist_prefix(&mut cycles[..j], &MappingClass::twist(s.boundary()));
                }
            }
            Action::ContractPair { index } => {
                require_difference(s, index, 3)?;
                let m = k_at(s, index + 1)?;
                let j = index - 1;
                cycles.splice(j..j + 2, [Curve::b_plus(m - 1)]);
                twist_prefix(&mut cycles[..j], &MappingClass::a_power(-5));
            }
            Action::DeletePair { index } => {
                require_difference(s, index, 2)?;
                if index + 2 > s.len() {
                    return Err(Error::NoThirdCycle { index });
                }
                if k_at(s, index + 2)? != k_at(s, index + 1)? {
                    return Err(precondition(format!(
                        "cycle {} must equal cycle {}",
                        index + 2,
                        index + 1
                    )));
                }
                let j = index - 1;
                cycles.drain(j..j + 2);
                twist_prefix(&mut cycles[..j], &MappingClass::a_power(-4));
            }
        }
        CycleSystem::new(s.boundary().clone(), cycles)
    }

    /// Boundary data the step should produce from `data` on `s`.
    pub fn predict(&self, s: &CycleSystem, data: &BoundaryData) -> BoundaryData {
        match self {
            Action::Hurwitz(_) => data.clone(),
            Action::BlowDown { index } => {
                let trivial = s.cycles().get(index.wrapping_sub(1)).is_some_and(Curve::is_trivial);
                if trivial {
                    data.clone()
                } else {
                    BoundaryData::new(data.sign, &data.k - 1)
                }
            }
            Action::ContractPair { .. } => BoundaryData::new(-data.sign, &data.k + 5),
            Action::DeletePair { .. } => BoundaryData::new(-data.sign, &data.k + 4),
        }
    }
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Action::Hurwitz(moves) => {
                f.write_str("moves [")?;
                for (n, m) in moves.iter().enumerate() {
                    if n > 0 {
                        f.write_str("; ")?;
                    }
                    write!(f, "{m}")?;
                }
                f.write_str("]")
            }
            Action::BlowDown { index } => write!(f, "blow down cycle {index}"),
            Action::ContractPair { index } => write!(f, "contract pair at {index}"),
            Action::DeletePair { index } => write!(f, "delete pair at {index}"),
        }
    }
}

/// One audited step of a reduction or classification run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub label: &'static str,
    pub action: Action,
    /// System after the step.
    pub system: CycleSystem,
    /// Boundary data after the step, predicted and matrix-checked; `None`
    /// when the run started from a tuple that is not a cycle system.
    pub data: Option<BoundaryData>,
}

impl TraceStep {
    pub fn summand(&self) -> Option<Summand> {
        self.action.summand()
    }
}

/// Outcome of a reduction: the new system and the audited steps leading there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub system: CycleSystem,
    pub data: Option<BoundaryData>,
    pub summands: Vec<Summand>,
    pub steps: Vec<TraceStep>,
}

/// Running state shared by the reductions and the classifier.
#[derive(Debug, Clone)]
pub(crate) struct Ledger {
    pub system: CycleSystem,
    pub data: Option<BoundaryData>,
    pub summands: Vec<Summand>,
    pub steps: Vec<TraceStep>,
}

impl Ledger {
    /// Requires a valid system.
    pub fn start(s: &CycleSystem) -> Result<Self> {
        let data = s
            .boundary_data()
            .map_err(|e| Error::InvalidSystem(e.to_string()))?;
        Ok(Self::with_data(s, Some(data)))
    }

    /// Accepts any tuple; invalid ones must stay invalid.
    pub fn lenient(s: &CycleSystem) -> Self {
        Self::with_data(s, s.boundary_data().ok())
    }

    fn with_data(s: &CycleSystem, data: Option<BoundaryData>) -> Self {
        Ledger {
            system: s.clone(),
            data,
            summands: Vec::new(),
            steps: Vec::new(),
        }
    }

    pub fn apply(&mut self, label: &'static str, action: Action) -> Result<()> {
        let predicted = self.data.as_ref().map(|d| action.predict(&self.system, d));
        let next = action.apply(&self.system)?;
        match (&predicted, next.boundary_data()) {
            (Some(p), Ok(actual)) if actual == *p => {}
            (None, Err(_)) => {}
            (Some(p), Ok(actual)) => return Err(Error::audit(label, p, actual)),
            (Some(p), Err(e)) => return Err(Error::audit(label, p, e)),
            (None, Ok(actual)) => {
                return Err(Error::InternalAuditFailure {
                    step: label.into(),
                    predicted: "not a cycle system".into(),
                    actual: actual.to_string(),
                })
            }
        }
        self.summands.extend(action.summand());
        self.system = next.clone();
        self.data = predicted.clone();
        self.steps.push(TraceStep {
            label,
            action,
            system: next,
            data: predicted,
        });
        Ok(())
    }

    pub fn moves(&mut self, label: &'static str, moves: Vec<Move>) -> Result<()> {
        if moves.is_empty() {
            return Ok(());
        }
        self.apply(label, Action::Hurwitz(moves))
    }

    pub fn into_reduction(self) -> Reduction {
        Reduction {
            system: self.system,
            data: self.data,
            summands: self.summands,
            steps: self.steps,
        }
    }
}

pub(crate) fn run_d1(l: &mut Ledger, i: usize) -> Result<()> {
    require_difference(&l.system, i, 1)?;
    // T_{c_i}^{-1}(c_{i+1}) = -a
    l.moves("reduce_d1", vec![Move::SwapRight(i)])?;
    l.apply("reduce_d1", Action::BlowDown { index: i })
}

pub(crate) fn run_d3(l: &mut Ledger, i: usize) -> Result<()> {
    require_difference(&l.system, i, 3)?;
    l.apply("reduce_d3", Action::ContractPair { index: i })
}

/// Moves circulating the difference-2 pair at `i` once around the system,
/// forwards (`forward = true`) or backwards.
fn circulation(i: usize, len: usize, forward: bool) -> Vec<Move> {
    let mut moves = Vec::new();
    // pair at (j, j+1) passes the cycle at j+2, which picks up A^4
    let slide_right = |j: usize, moves: &mut Vec<Move>| {
        moves.extend([Move::SwapRight(j + 1), Move::SwapRight(j)]);
    };
    // pair at (j, j+1) passes the cycle at j-1, which picks up A^4
    let slide_left = |j: usize, moves: &mut Vec<Move>| {
        moves.extend([Move::SwapLeft(j - 1), Move::SwapLeft(j)]);
    };
    if forward {
        (i..=len - 2).for_each(|j| slide_right(j, &mut moves));
        moves.extend([Move::RotateBack, Move::RotateBack]);
        (1..i).for_each(|j| slide_right(j, &mut moves));
    } else {
        (2..=i).rev().for_each(|j| slide_left(j, &mut moves));
        moves.extend([Move::RotateForward, Move::RotateForward]);
        (i + 1..len).rev().for_each(|j| slide_left(j, &mut moves));
    }
    moves
}

pub(crate) fn run_pair_shift(l: &mut Ledger, i: usize, shift: i64) -> Result<()> {
    require_difference(&l.system, i, 2)?;
    let len = l.system.len();
    let lap = circulation(i, len, shift > 0);
    let moves = (0..shift.unsigned_abs()).flat_map(|_| lap.iter().cloned()).collect();
    l.moves("pair_shift", moves)
}

fn shift_to(n: &BigInt, targets: [i64; 2]) -> Result<(i64, i64)> {
    let target = targets
        .into_iter()
        .find(|t| (n - t).is_multiple_of(&BigInt::from(4)))
        .expect("targets cover the residue class");
    let shift = ((BigInt::from(target) - n) / BigInt::from(4))
        .to_i64()
        .ok_or_else(|| precondition("pair shift too large"))?;
    Ok((target, shift))
}

pub(crate) fn run_d2(l: &mut Ledger, i: usize) -> Result<()> {
    require_difference(&l.system, i, 2)?;
    if i + 2 > l.system.len() {
        return Err(Error::NoThirdCycle { index: i });
    }
    let n = k_at(&l.system, i + 2)? - k_at(&l.system, i + 1)?;
    if n.is_odd() {
        let (target, shift) = shift_to(&n, [-3, -1])?;
        run_pair_shift(l, i, shift)?;
        return if target == -1 {
            run_d1(l, i + 1)
        } else {
            run_d3(l, i + 1)
        };
    }
    let (target, shift) = shift_to(&n, [-2, 0])?;
    run_pair_shift(l, i, shift)?;
    if target == -2 {
        // (b+2a, b, b-2a) ~ (b+4a, b+2a, b) ~ (b+2a, b, b), up to a uniform shift
        l.moves(
            "reduce_d2",
            vec![Move::Global(MappingClass::a_power(2)), Move::SwapLeft(i)],
        )?;
    }
    l.apply("reduce_d2", Action::DeletePair { index: i })
}

/// Blows down cycle `i`, which must be null-homotopic or equal to the boundary.
pub fn blow_down(s: &CycleSystem, i: usize) -> Result<Reduction> {
    let mut l = Ledger::lenient(s);
    l.apply("blow_down", Action::BlowDown { index: i })?;
    Ok(l.into_reduction())
}

/// `k_i - k_{i+1} = 1`: one swap produces a cycle parallel to `a`, which is
/// blown down. Splits off `CP2bar`.
pub fn reduce_d1(s: &CycleSystem, i: usize) -> Result<Reduction> {
    let mut l = Ledger::lenient(s);
    run_d1(&mut l, i)?;
    Ok(l.into_reduction())
}

/// `k_i - k_{i+1} = 3`: the pair becomes a single cycle. Splits off `CP2`
/// and reverses co-orientability.
pub fn reduce_d3(s: &CycleSystem, i: usize) -> Result<Reduction> {
    let mut l = Ledger::lenient(s);
    run_d3(&mut l, i)?;
    Ok(l.into_reduction())
}

/// Circulates the difference-2 pair at `i` around the system `shift`
/// times. The pair's product is `-A^{-4}`, so it fixes the boundary and
/// every other cycle picks up `A^{4·shift}`.
pub fn pair_shift(s: &CycleSystem, i: usize, shift: i64) -> Result<Reduction> {
    let mut l = Ledger::lenient(s);
    run_pair_shift(&mut l, i, shift)?;
    Ok(l.into_reduction())
}

/// `k_i - k_{i+1} = 2` with a third cycle after the pair. Even `n' = k_{i+2} - k_{i+1}`
/// splits off `S2xS2`; odd `n'` is handed to the difference 1 or 3 reduction
/// at `i+1`.
pub fn reduce_d2(s: &CycleSystem, i: usize) -> Result<Reduction> {
    let mut l = Ledger::lenient(s);
    run_d2(&mut l, i)?;
    Ok(l.into_reduction())
}
