//! Classification driver, connected-sum normal forms and the constructors
//! that invert them.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::mcg::{BoundaryData, Curve, Sign};
use crate::normal_form::normalize;
use crate::reduction::{k_at, run_d1, run_d2, run_d3, Action, Ledger, Summand, TraceStep};
use crate::system::{CycleSystem, Move};

/// The three families of total spaces.
///
/// * `S1xS3`: `S^1×S^3 # n CP2bar`
/// * `SumS2xS2`: `#m S^2×S^2`, which is `S^4` for `m = 0`
/// * `SumCP2`: `#m CP2 # n CP2bar` with `m + n ≥ 1`
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    S1xS3,
    SumS2xS2,
    SumCP2,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::S1xS3 => "S1xS3",
            Family::SumS2xS2 => "SumS2xS2",
            Family::SumCP2 => "SumCP2",
        }
    }

    /// Euler characteristic of the family member `(m, n)`.
    pub fn euler_characteristic(self, m: usize, n: usize) -> usize {
        match self {
            Family::S1xS3 => n,
            Family::SumS2xS2 => 2 + 2 * m,
            Family::SumCP2 => 2 + m + n,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "s1xs3" => Ok(Family::S1xS3),
            "s2xs2" | "sums2xs2" => Ok(Family::SumS2xS2),
            "cp2" | "sumcp2" => Ok(Family::SumCP2),
            _ => Err(Error::UnsupportedTarget(s.to_string())),
        }
    }
}

/// What is left once every Lefschetz cycle has been reduced away.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Base {
    /// `(a;)`
    S1xS3,
    /// `(a; b+(k+2)a, b+ka)`
    S4,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub family: Family,
    pub m: usize,
    pub n: usize,
    pub coorientable: bool,
    /// `k` of the input system.
    pub normal_euler: BigInt,
    /// Number of Lefschetz cycles of the input.
    pub euler_characteristic: usize,
    pub ledger: Vec<Summand>,
    pub trace: Vec<TraceStep>,
}

/// Merges the summand ledger over a base into one of the three families,
/// using `S^2×S^2 # CP2 ≅ 2 CP2 # CP2bar`.
pub fn sum_normal_form(base: Base, ledger: &[Summand]) -> Result<(Family, usize, usize)> {
    let count = |t: Summand| ledger.iter().filter(|&&x| x == t).count();
    let (p, q, s) = (
        count(Summand::CP2),
        count(Summand::CP2bar),
        count(Summand::S2xS2),
    );
    match base {
        Base::S1xS3 => {
            if let Some(bad) = ledger.iter().find(|&&x| x != Summand::CP2bar) {
                return Err(Error::UnexpectedSummand(bad.to_string()));
            }
            Ok((Family::S1xS3, 0, q))
        }
        Base::S4 if p + q > 0 => Ok((Family::SumCP2, p + s, q + s)),
        Base::S4 => Ok((Family::SumS2xS2, s, 0)),
    }
}

fn b_ks(s: &CycleSystem) -> Result<Vec<BigInt>> {
    (1..=s.len()).map(|i| k_at(s, i)).collect()
}

fn check_base(l: &Ledger, expected: BoundaryData) -> Result<()> {
    match &l.data {
        Some(d) if *d == expected => Ok(()),
        Some(d) => Err(Error::audit("base", &expected, d)),
        None => Err(Error::audit("base", &expected, "not a cycle system")),
    }
}

/// Runs reductions on a system in normal form until a base remains.
fn reduce_to_base(l: &mut Ledger) -> Result<Base> {
    while l
        .system
        .cycles()
        .first()
        .is_some_and(|c| c.is_trivial() || *c == Curve::a())
    {
        l.apply("blow_down", Action::BlowDown { index: 1 })?;
    }
    loop {
        let ks = b_ks(&l.system)?;
        let r = ks.len();
        match r {
            0 => {
                check_base(l, BoundaryData::new(Sign::Plus, 0))?;
                return Ok(Base::S1xS3);
            }
            1 => {
                return Err(Error::InvalidSystem(format!(
                    "single Lefschetz cycle {}",
                    l.system
                )))
            }
            2 => {
                if &ks[0] - &ks[1] != BigInt::from(2) {
                    return Err(Error::MissingReduciblePair { ks });
                }
                check_base(l, BoundaryData::new(Sign::Minus, -4))?;
                return Ok(Base::S4);
            }
            _ => {}
        }
        let diffs: Vec<BigInt> = ks.windows(2).map(|w| &w[0] - &w[1]).collect();
        let at = |d: i64| diffs.iter().position(|x| *x == BigInt::from(d)).map(|j| j + 1);
        let odd = diffs
            .iter()
            .position(|x| *x == BigInt::from(1) || *x == BigInt::from(3))
            .map(|j| j + 1);
        if let Some(i) = odd {
            if diffs[i - 1] == BigInt::from(1) {
                run_d1(l, i)?;
            } else {
                run_d3(l, i)?;
            }
            continue;
        }
        match at(2) {
            Some(i) if i + 2 <= r => run_d2(l, i)?,
            Some(i) => {
                // tail pair: slide it left past its neighbour first
                l.moves(
                    "classify",
                    vec![Move::SwapLeft(i - 1), Move::SwapLeft(i)],
                )?;
                run_d2(l, i - 1)?;
            }
            None => return Err(Error::MissingReduciblePair { ks }),
        }
    }
}

/// Identifies the total space of the fibration given by `s`.
pub fn classify(s: &CycleSystem, budget: usize) -> Result<Classification> {
    let mut l = Ledger::start(s)?;
    let initial = l.data.clone().expect("start validates the input");
    let normalized = normalize(s, budget)?;
    l.moves("normalize", normalized.moves)?;
    let base = reduce_to_base(&mut l)?;
    let (family, m, n) = sum_normal_form(base, &l.summands)?;

    let coorientable = initial.coorientable();
    let euler_characteristic = s.euler_characteristic();
    let parity_ok = match family {
        Family::S1xS3 => coorientable,
        Family::SumS2xS2 | Family::SumCP2 => coorientable == (m % 2 == 1),
    };
    if !parity_ok {
        return Err(Error::InternalAuditFailure {
            step: "parity".into(),
            predicted: format!("coorientable iff m odd for {family}"),
            actual: format!("m = {m}, coorientable = {coorientable}"),
        });
    }
    let chi = family.euler_characteristic(m, n);
    if chi != euler_characteristic {
        return Err(Error::InternalAuditFailure {
            step: "euler characteristic".into(),
            predicted: chi.to_string(),
            actual: euler_characteristic.to_string(),
        });
    }
    if family == Family::SumCP2 && m + n == 0 {
        return Err(Error::InternalAuditFailure {
            step: "family".into(),
            predicted: "m + n > 0".into(),
            actual: "m = n = 0".into(),
        });
    }

    Ok(Classification {
        family,
        m,
        n,
        coorientable,
        normal_euler: initial.k,
        euler_characteristic,
        ledger: l.summands,
        trace: l.steps,
    })
}

/// Replays a classification trace from `s`, checking every recorded
/// system and boundary data. Returns the final system.
pub fn replay_trace(s: &CycleSystem, trace: &[TraceStep]) -> Result<CycleSystem> {
    let mut l = Ledger::start(s)?;
    for step in trace {
        l.apply(step.label, step.action.clone())?;
        if l.system != step.system || l.data != step.data {
            return Err(Error::InternalAuditFailure {
                step: step.label.into(),
                predicted: format!("{} {:?}", step.system, step.data),
                actual: format!("{} {:?}", l.system, l.data),
            });
        }
    }
    Ok(l.system)
}

/// A system whose total space is the given family member.
pub fn construct(family: Family, m: usize, n: usize) -> Result<CycleSystem> {
    let unsupported = || Error::UnsupportedTarget(format!("{family} with m = {m}, n = {n}"));
    let pair = || vec![Curve::b_plus(2), Curve::b()];
    let first_k = |cycles: &[Curve]| -> BigInt {
        cycles[0].b_coefficient().cloned().unwrap_or_else(BigInt::zero)
    };
    let cycles = match family {
        Family::S1xS3 => {
            if m != 0 {
                return Err(unsupported());
            }
            vec![Curve::a(); n]
        }
        Family::SumS2xS2 => {
            if n != 0 {
                return Err(unsupported());
            }
            let mut cycles = pair();
            for _ in 0..m {
                let k = first_k(&cycles);
                cycles.splice(0..0, [Curve::b_plus(k.clone()), Curve::b_plus(k - 2)]);
            }
            cycles
        }
        Family::SumCP2 => {
            if m + n == 0 {
                return Err(unsupported());
            }
            let mut cycles = pair();
            for _ in 0..m {
                let k = first_k(&cycles);
                cycles.splice(0..1, [Curve::b_plus(&k + 4), Curve::b_plus(k + 1)]);
            }
            cycles.splice(0..0, std::iter::repeat_n(Curve::a(), n));
            cycles
        }
    };
    Ok(CycleSystem::with_cycles(cycles))
}
