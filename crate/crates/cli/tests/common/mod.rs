#![allow(dead_code)]

use blf_core::{Curve, CycleSystem, MappingClass, Move};
use num_bigint::BigInt;
use rand::Rng;

pub type Z = BigInt;
pub type M = [[Z; 2]; 2];

pub fn z(x: i64) -> Z {
    Z::from(x)
}

pub fn id() -> M {
    [[z(1), z(0)], [z(0), z(1)]]
}

pub fn mul(x: &M, y: &M) -> M {
    let e = |i: usize, j: usize| &x[i][0] * &y[0][j] + &x[i][1] * &y[1][j];
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

pub fn inv(x: &M) -> M {
    [
        [x[1][1].clone(), -&x[0][1]],
        [-&x[1][0], x[0][0].clone()],
    ]
}

pub fn neg(x: &M) -> M {
    [[-&x[0][0], -&x[0][1]], [-&x[1][0], -&x[1][1]]]
}

/// v ↦ v + ⟨c, v⟩ c written out as a matrix
pub fn twist(p: &Z, q: &Z) -> M {
    // columns are the images of (1,0) and (0,1)
    let col = |x: Z, y: Z| {
        let w = p * &y - q * &x;
        [x + &w * p, y + &w * q]
    };
    let [e11, e21] = col(z(1), z(0));
    let [e12, e22] = col(z(0), z(1));
    [[e11, e12], [e21, e22]]
}

pub fn apply(h: &M, (p, q): (&Z, &Z)) -> (Z, Z) {
    (&h[0][0] * p + &h[0][1] * q, &h[1][0] * p + &h[1][1] * q)
}

pub fn pair(c: &Curve) -> (Z, Z) {
    (c.p().clone(), c.q().clone())
}

pub fn matrix(h: &MappingClass) -> M {
    let [a, b, c, d] = h.entries().map(Clone::clone);
    [[a, b], [c, d]]
}

pub fn monodromy(cycles: &[(Z, Z)]) -> M {
    cycles
        .iter()
        .fold(id(), |acc, (p, q)| mul(&twist(p, q), &acc))
}

/// (ε, k) with M = ε·T_c^k. T_c^k = I + k·N with N = T_c − I, so
/// εM − I must be an integer multiple of N.
pub fn boundary_data(boundary: (&Z, &Z), cycles: &[(Z, Z)]) -> Option<(i32, Z)> {
    let m = monodromy(cycles);
    let t = twist(boundary.0, boundary.1);
    let n = [
        [&t[0][0] - 1, t[0][1].clone()],
        [t[1][0].clone(), &t[1][1] - 1],
    ];
    let (ni, nj) = (0..4)
        .map(|x| (x / 2, x % 2))
        .find(|&(i, j)| n[i][j] != z(0))?;
    for eps in [1i32, -1] {
        let em = if eps == 1 { m.clone() } else { neg(&m) };
        let d = [
            [&em[0][0] - 1, em[0][1].clone()],
            [em[1][0].clone(), &em[1][1] - 1],
        ];
        if &d[ni][nj] % &n[ni][nj] != z(0) {
            continue;
        }
        let k = &d[ni][nj] / &n[ni][nj];
        if (0..2).all(|i| (0..2).all(|j| d[i][j] == &k * &n[i][j])) {
            return Some((eps, k));
        }
    }
    None
}

pub fn system_data(s: &CycleSystem) -> Option<(i32, Z)> {
    let cycles: Vec<_> = s.cycles().iter().map(pair).collect();
    let (p, q) = pair(s.boundary());
    boundary_data((&p, &q), &cycles)
}

pub fn random_sl2(rng: &mut impl Rng) -> MappingClass {
    let gens = [
        MappingClass::new(1, 1, 0, 1).unwrap(),
        MappingClass::new(1, 0, -1, 1).unwrap(),
    ];
    let mut h = MappingClass::identity();
    for _ in 0..rng.gen_range(0..4) {
        let g = &gens[rng.gen_range(0..2)];
        let g = if rng.gen_bool(0.5) { g.clone() } else { g.inverse() };
        h = g.compose(&h);
    }
    h
}

pub fn random_move(rng: &mut impl Rng, len: usize) -> Move {
    let kinds = match len {
        0 => return Move::Global(random_sl2(rng)),
        1 => 3,
        _ => 5,
    };
    match rng.gen_range(0..kinds) {
        0 => Move::RotateForward,
        1 => Move::RotateBack,
        2 => Move::Global(random_sl2(rng)),
        3 => Move::SwapLeft(rng.gen_range(1..len)),
        _ => Move::SwapRight(rng.gen_range(1..len)),
    }
}

pub fn random_word(rng: &mut impl Rng, len: usize, max: usize) -> Vec<Move> {
    let n = rng.gen_range(0..=max);
    (0..n).map(|_| random_move(rng, len)).collect()
}

fn random_piece(rng: &mut impl Rng) -> CycleSystem {
    use blf_core::{construct, Family};
    match rng.gen_range(0..3) {
        0 => construct(Family::S1xS3, 0, rng.gen_range(0..3)).unwrap(),
        1 => construct(Family::SumS2xS2, rng.gen_range(0..2), 0).unwrap(),
        _ => {
            let m = rng.gen_range(0..2);
            let n = rng.gen_range(1 - m..3);
            construct(Family::SumCP2, m, n).unwrap()
        }
    }
}

/// Constructed family member with at most `max_len` cycles, concatenated
/// with another one half of the time, then scrambled by a short word.
pub fn random_valid_system(rng: &mut impl Rng, max_len: usize, max_entry: u64) -> CycleSystem {
    loop {
        let mut cycles = random_piece(rng).cycles().to_vec();
        if rng.gen_bool(0.5) {
            cycles.extend(random_piece(rng).cycles().iter().cloned());
        }
        if cycles.len() > max_len {
            continue;
        }
        let s = CycleSystem::with_cycles(cycles);
        let word = random_word(rng, s.len(), 6);
        let s = s.replay(&word).unwrap();
        let small = std::iter::once(s.boundary()).chain(s.cycles()).all(|c| {
            let (p, q) = pair(c);
            let bound = num_bigint::BigUint::from(max_entry);
            p.magnitude() <= &bound && q.magnitude() <= &bound
        });
        if small {
            return s;
        }
    }
}

/// Every family member with `m + n ≤ max`.
pub fn family_instances(max: usize) -> Vec<(blf_core::Family, usize, usize)> {
    use blf_core::Family;
    let mut out = Vec::new();
    out.extend((0..=max).map(|n| (Family::S1xS3, 0, n)));
    out.extend((0..=max).map(|m| (Family::SumS2xS2, m, 0)));
    for m in 0..=max {
        for n in 0..=max - m {
            if m + n > 0 {
                out.push((Family::SumCP2, m, n));
            }
        }
    }
    out
}

/// Documents in every accepted notation, including comments, raw pairs,
/// key-value layout and invalid-but-parseable systems.
pub fn corpus() -> Vec<String> {
    use rand::SeedableRng;
    let mut docs: Vec<String> = [
        "(a;)",
        "(a; b+2a, b)",
        "(a; 0, a)",
        "(a; 0, 0, a, a, b+2a, b)",
        "(a;b+6a,b+3a,b)",
        "( a ; b + 2 a , b )",
        "(a; b-a)",
        "(a; -b+a)",
        "(a; b-12a, b+12a)",
        "(b; a)",
        "((1,0); (2,1), (0,1))",
        "((3,1); (5,2), (7,3), a, b)",
        "((-1,0); (-2,-1))",
        "(a; 2a+b, -3a+b, 5b+2a)",
        "(b+a; b-a, 3b+2a)",
        "(a; b+123456789012345678901234567890a)",
        "(a; +b+2a, +b)",
        "(a; 0a+b)",
        "(a; a+b-a)",
        "# comment line\n(a; b+2a, b) # trailing",
        "boundary: a\ncycles: b+2a, b",
        "boundary: a\ncycles:",
        "boundary: (2,1)\ncycles: 0, (2, 1), a",
        "  boundary :  b \n  cycles : a , a , a  ",
        "boundary: a # the boundary\n# no cycles yet\ncycles: b",
        "(a;\n  b+10a,\n  b+7a,\n  b+3a,\n  b\n)",
        "(a; (0,1), (1,1), (1,2), (2,3), (3,5), (5,8))",
        "(a; b, b, b, b)",
        "(a; 3b-a)",
        "(a; -3b+a)",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    for (family, m, n) in family_instances(5) {
        docs.push(blf_core::construct(family, m, n).unwrap().to_string());
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    for _ in 0..30 {
        let s = random_valid_system(&mut rng, 6, 1000);
        docs.push(s.to_string());
    }
    docs
}
