//! Bounded breadth-first search for Hurwitz equivalences.
//!
//! The raw orbit is infinite under global moves, so states are compared in
//! a canonical frame: the boundary is sent to `a`, and the residual
//! stabilizer `±A^m` is fixed by moving the first cycle that crosses `a`
//! into `p ∈ [0, q)`.

use std::collections::{HashMap, VecDeque};

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::mcg::{extend_to_basis, MappingClass};
use crate::system::{CycleSystem, Move};

/// Mapping class `h` and the system `h·s` in canonical frame.
pub fn canonical_frame(s: &CycleSystem) -> (MappingClass, CycleSystem) {
    let to_a = extend_to_basis(s.boundary())
        .expect("cycle systems have essential boundary")
        .inverse();
    let framed = s.transformed(&to_a);
    let shift = framed
        .cycles()
        .iter()
        .find(|c| c.q().is_positive())
        .map(|c| -c.p().div_floor(c.q()));
    match shift {
        Some(m) if !m.is_zero() => {
            let h = MappingClass::a_power(m).compose(&to_a);
            let framed = s.transformed(&h);
            (h, framed)
        }
        _ => (to_a, framed),
    }
}

fn global(h: MappingClass) -> Option<Move> {
    (!h.is_identity()).then_some(Move::Global(h))
}

fn candidate_moves(len: usize) -> Vec<Move> {
    let mut moves = Vec::with_capacity(2 * len + 2);
    moves.extend((1..len).map(Move::SwapLeft));
    moves.extend((1..len).map(Move::SwapRight));
    if len > 0 {
        moves.push(Move::RotateForward);
        moves.push(Move::RotateBack);
    }
    moves
}

/// Searches for a move word taking `s1` to `s2` using at most `depth`
/// swaps and rotations (interleaved global moves are free).
///
/// The returned word replays exactly from `s1` to `s2`; among the shortest
/// words it is the first in breadth-first order. `NotFound` is inconclusive.
pub fn equiv_search(s1: &CycleSystem, s2: &CycleSystem, depth: usize) -> Result<Vec<Move>> {
    if s1 == s2 {
        return Ok(Vec::new());
    }
    if s1.len() != s2.len() || s1.boundary_data().ok() != s2.boundary_data().ok() {
        return Err(Error::NotFound { depth });
    }

    let (h1, start) = canonical_frame(s1);
    let (h2, target) = canonical_frame(s2);
    let finish = |edges: Vec<Move>| -> Vec<Move> {
        let mut path: Vec<Move> = global(h1.clone()).into_iter().collect();
        path.extend(edges);
        path.extend(global(h2.inverse()));
        debug_assert_eq!(s1.replay(&path).as_ref(), Ok(s2));
        path
    };
    if start == target {
        return Ok(finish(Vec::new()));
    }

    // node = (state, parent, moves from parent)
    let mut nodes: Vec<(CycleSystem, usize, Vec<Move>)> = vec![(start.clone(), 0, Vec::new())];
    let mut seen: HashMap<CycleSystem, usize> = HashMap::from([(start, 0)]);
    let mut queue = VecDeque::from([(0usize, 0usize)]);
    let candidates = candidate_moves(s1.len());

    while let Some((id, d)) = queue.pop_front() {
        if d >= depth {
            continue;
        }
        for m in &candidates {
            let next = nodes[id].0.apply_move(m)?;
            let (h, canon) = canonical_frame(&next);
            if seen.contains_key(&canon) {
                continue;
            }
            let mut edge = vec![m.clone()];
            edge.extend(global(h));
            let child = nodes.len();
            seen.insert(canon.clone(), child);
            let found = canon == target;
            nodes.push((canon, id, edge));
            if found {
                let mut edges = Vec::new();
                let mut cur = child;
                while cur != 0 {
                    let (_, parent, edge) = &nodes[cur];
                    edges.push(edge.clone());
                    cur = *parent;
                }
                edges.reverse();
                return Ok(finish(edges.into_iter().flatten().collect()));
            }
            queue.push_back((child, d + 1));
        }
    }
    Err(Error::NotFound { depth })
}
