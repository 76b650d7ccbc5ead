//! Normalization of cycle systems to the form
//! `(a; 0,…,0, a,…,a, b+k_1 a, …, b+k_r a)`.
//!
//! There is no known closed-form procedure, so the normalizer works in the
//! frame where the boundary is `a` and drives down `Σ q_i`, the total
//! intersection of the cycles with `a`, until every cycle has `q ≤ 1`.
//! A greedy descent runs first; when it stalls a best-first search over the
//! same moves takes over, bounded by a node budget. The moves used are
//! interior swaps and the two rotations followed by the global twist that
//! brings the boundary back to `a`.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};
use std::rc::Rc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, PartialNormalization, Result};
use crate::mcg::{extend_to_basis, Curve, MappingClass};
use crate::system::{CycleSystem, Move};

/// Search nodes allowed by default.
pub const DEFAULT_BUDGET: usize = 1_000_000;

/// Denotes `(a; 0×trivials, a×blowups, b+k_1 a, …, b+k_r a)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalForm {
    pub trivials: usize,
    pub blowups: usize,
    pub ks: Vec<BigInt>,
}

impl NormalForm {
    pub fn to_system(&self) -> CycleSystem {
        let mut cycles = vec![Curve::trivial(); self.trivials];
        cycles.extend(std::iter::repeat_n(Curve::a(), self.blowups));
        cycles.extend(self.ks.iter().cloned().map(Curve::b_plus));
        CycleSystem::with_cycles(cycles)
    }

    /// Reads off the form if `s` is literally in it.
    pub fn recognize(s: &CycleSystem) -> Option<NormalForm> {
        if s.boundary() != &Curve::a() {
            return None;
        }
        let cycles = s.cycles();
        let trivials = cycles.iter().take_while(|c| c.is_trivial()).count();
        let blowups = cycles[trivials..]
            .iter()
            .take_while(|c| **c == Curve::a())
            .count();
        let ks = cycles[trivials + blowups..]
            .iter()
            .map(|c| c.b_coefficient().cloned())
            .collect::<Option<Vec<_>>>()?;
        Some(NormalForm {
            trivials,
            blowups,
            ks,
        })
    }

    /// Checks that the `b`-part admits a reduction.
    ///
    /// `r = 0` is fine, `r = 1` never occurs for a valid system, `r = 2`
    /// must be a pair with difference 2, and longer forms need some adjacent
    /// difference in `{1, 2, 3}`.
    pub fn verify(&self) -> Result<()> {
        let missing = || Error::MissingReduciblePair {
            ks: self.ks.clone(),
        };
        let diffs: Vec<BigInt> = self.ks.windows(2).map(|w| &w[0] - &w[1]).collect();
        let ok = match self.ks.len() {
            0 => true,
            1 => false,
            2 => diffs[0] == BigInt::from(2),
            _ => diffs.iter().any(|d| (1..=3).any(|x| *d == BigInt::from(x))),
        };
        ok.then_some(()).ok_or_else(missing)
    }
}

/// Result of [`normalize`]: the form, the system it denotes, and a move
/// word that replays from the input to that system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Normalized {
    pub form: NormalForm,
    pub system: CycleSystem,
    pub moves: Vec<Move>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Step {
    SwapLeft(usize),
    SwapRight(usize),
    /// rotate forward, then untwist so the boundary is `a` again
    CycleForward,
    /// rotate back, then untwist so the boundary is `a` again
    CycleBack,
}

fn steps(len: usize) -> impl Iterator<Item = Step> {
    let swaps = (1..len).flat_map(|i| [Step::SwapLeft(i), Step::SwapRight(i)]);
    let cycles = (len > 0)
        .then_some([Step::CycleForward, Step::CycleBack])
        .into_iter()
        .flatten();
    swaps.chain(cycles)
}

fn apply_step(cycles: &[Curve], step: Step) -> Vec<Curve> {
    let mut next = cycles.to_vec();
    match step {
        Step::SwapLeft(i) => {
            let (x, y) = (&cycles[i - 1], &cycles[i]);
            next[i - 1] = y.clone();
            next[i] = MappingClass::twist(y).apply(x);
        }
        Step::SwapRight(i) => {
            let (x, y) = (&cycles[i - 1], &cycles[i]);
            next[i - 1] = MappingClass::twist(x).inverse().apply(y);
            next[i] = x.clone();
        }
        Step::CycleForward => {
            let untwist = MappingClass::twist(&cycles[0]).inverse();
            next.rotate_left(1);
            let n = next.len();
            for c in &mut next[..n - 1] {
                *c = untwist.apply(c);
            }
        }
        Step::CycleBack => {
            let twist = MappingClass::twist(&cycles[cycles.len() - 1]);
            next.rotate_right(1);
            for c in &mut next[1..] {
                *c = twist.apply(c);
            }
        }
    }
    next
}

fn step_moves(cycles: &[Curve], step: Step) -> Vec<Move> {
    let untwist = |h: MappingClass| -> Vec<Move> {
        if h.is_identity() {
            vec![]
        } else {
            vec![Move::Global(h)]
        }
    };
    match step {
        Step::SwapLeft(i) => vec![Move::SwapLeft(i)],
        Step::SwapRight(i) => vec![Move::SwapRight(i)],
        Step::CycleForward => {
            let mut m = vec![Move::RotateForward];
            m.extend(untwist(MappingClass::twist(&cycles[0]).inverse()));
            m
        }
        Step::CycleBack => {
            let mut m = vec![Move::RotateBack];
            m.extend(untwist(MappingClass::twist(&cycles[cycles.len() - 1])));
            m
        }
    }
}

/// `(Σ q, max q)`; zero total exactly when every cycle is `0` or `a`.
fn complexity(cycles: &[Curve]) -> (BigInt, BigInt) {
    let total = cycles.iter().map(|c| c.q()).sum();
    let max = cycles.iter().map(|c| c.q()).max().cloned().unwrap_or_default();
    (total, max)
}

fn is_reduced(cycles: &[Curve]) -> bool {
    cycles.iter().all(|c| c.q() <= &BigInt::one())
}

struct Node {
    cycles: Rc<[Curve]>,
    parent: Option<(usize, Step)>,
}

fn path_to(nodes: &[Node], mut id: usize) -> Vec<Move> {
    let mut chunks = Vec::new();
    while let Some((parent, step)) = nodes[id].parent {
        chunks.push(step_moves(&nodes[parent].cycles, step));
        id = parent;
    }
    chunks.into_iter().rev().flatten().collect()
}

/// Moves from the start and the cycles they lead to.
type Progress = (Vec<Move>, Vec<Curve>);

/// Reduces every cycle to `q ≤ 1` in the frame where the boundary is `a`.
/// On budget exhaustion the error carries the best progress found.
fn reduce_intersections(
    start: Vec<Curve>,
    budget: usize,
    used: &mut usize,
) -> std::result::Result<Progress, Progress> {
    let mut moves = Vec::new();
    let mut cycles = start;

    // greedy descent
    while !is_reduced(&cycles) {
        let current = complexity(&cycles);
        let mut best: Option<((BigInt, BigInt), Step, Vec<Curve>)> = None;
        for step in steps(cycles.len()) {
            *used += 1;
            if *used > budget {
                return Err((moves, cycles));
            }
            let next = apply_step(&cycles, step);
            let c = complexity(&next);
            if c < current && best.as_ref().is_none_or(|(b, _, _)| c < *b) {
                best = Some((c, step, next));
            }
        }
        let Some((_, step, next)) = best else { break };
        moves.extend(step_moves(&cycles, step));
        cycles = next;
    }
    if is_reduced(&cycles) {
        return Ok((moves, cycles));
    }

    // best-first search from where the descent stalled
    let root: Rc<[Curve]> = cycles.into();
    let mut nodes = vec![Node {
        cycles: root.clone(),
        parent: None,
    }];
    let mut seen: HashSet<Rc<[Curve]>> = HashSet::from([root.clone()]);
    let mut heap = BinaryHeap::from([Reverse((complexity(&root), 0usize))]);
    let mut best = (complexity(&root), 0usize);

    while let Some(Reverse((_, id))) = heap.pop() {
        let here = nodes[id].cycles.clone();
        for step in steps(here.len()) {
            *used += 1;
            if *used > budget {
                moves.extend(path_to(&nodes, best.1));
                return Err((moves, nodes[best.1].cycles.to_vec()));
            }
            let next: Rc<[Curve]> = apply_step(&here, step).into();
            if !seen.insert(next.clone()) {
                continue;
            }
            let child = nodes.len();
            nodes.push(Node {
                cycles: next.clone(),
                parent: Some((id, step)),
            });
            if is_reduced(&next) {
                moves.extend(path_to(&nodes, child));
                return Ok((moves, next.to_vec()));
            }
            let c = complexity(&next);
            if c < best.0 {
                best = (c.clone(), child);
            }
            heap.push(Reverse((c, child)));
        }
    }
    // orbit exhausted without reaching the form
    moves.extend(path_to(&nodes, best.1));
    Err((moves, nodes[best.1].cycles.to_vec()))
}

fn rank(c: &Curve) -> u8 {
    if c.is_trivial() {
        0
    } else if c.q().is_zero() {
        1
    } else {
        2
    }
}

/// Brings a valid system to normal form by Hurwitz moves.
///
/// Null-homotopic cycles are moved to the very front, then the cycles
/// parallel to `a`; passing `a` shifts a `b+ka` neighbour to `b+(k+1)a`.
/// The reported `ks` are shifted so that `min(ks) = 0`.
pub fn normalize(s: &CycleSystem, budget: usize) -> Result<Normalized> {
    let data = s
        .boundary_data()
        .map_err(|e| Error::InvalidSystem(e.to_string()))?;

    let mut moves = Vec::new();
    let to_a = extend_to_basis(s.boundary())?.inverse();
    let framed = s.transformed(&to_a);
    if !to_a.is_identity() {
        moves.push(Move::Global(to_a));
    }

    let mut used = 0;
    let (found, cycles) = match reduce_intersections(framed.cycles().to_vec(), budget, &mut used) {
        Ok(done) => done,
        Err((partial, cycles)) => {
            moves.extend(partial);
            return Err(Error::BudgetExceeded {
                budget,
                partial: Box::new(PartialNormalization {
                    moves,
                    system: CycleSystem::with_cycles(cycles),
                }),
            });
        }
    };
    moves.extend(found);
    let mut system = CycleSystem::with_cycles(cycles);

    loop {
        let out_of_order = system
            .cycles()
            .windows(2)
            .position(|w| rank(&w[0]) > rank(&w[1]));
        let Some(j) = out_of_order else { break };
        let m = Move::SwapLeft(j + 1);
        system = system.apply_move(&m)?;
        moves.push(m);
    }

    let min_k = system.cycles().iter().filter_map(Curve::b_coefficient).min().cloned();
    if let Some(k) = min_k.filter(|k| !k.is_zero()) {
        let m = Move::Global(MappingClass::a_power(-k));
        system = system.apply_move(&m)?;
        moves.push(m);
    }

    let form = NormalForm::recognize(&system).ok_or_else(|| Error::InternalAuditFailure {
        step: "normalize".into(),
        predicted: "a normal form".into(),
        actual: system.to_string(),
    })?;
    let replayed = s.replay(&moves)?;
    if replayed != system {
        return Err(Error::InternalAuditFailure {
            step: "normalize replay".into(),
            predicted: system.to_string(),
            actual: replayed.to_string(),
        });
    }
    let after = system.boundary_data()?;
    if after != data {
        return Err(Error::audit("normalize", &data, after));
    }
    Ok(Normalized {
        form,
        system,
        moves,
    })
}
