//! Chains of lattice moves between Young-type supports.
//!
//! A step is justified when the support before it satisfies the hypotheses
//! of a mutation that realizes it. Since the mutated family again has the
//! lattice algebra of its support as endomorphism algebra, a chain of
//! justified steps from `S` to `T` gives `per L(S) ≃ per L(T)`. Chains here
//! are combinatorial; [`LatticeChain::certificates_consistent`] adds the
//! numerical sanity check on Cartan matrices.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::cartan_lattice;
use crate::error::Error;
use crate::invariants::chain_consistent;
use crate::lattice::{is_m_plus, rho_pow, sigma_pow, young_pqr, GridPoint, LatticeSet, Side};

/// `σ^power_{side k}` or `ρ^power_{side k}` with `power = ±1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Move {
    Sigma { k: i64, side: Side, power: i64 },
    Rho { k: i64, side: Side, power: i64 },
}

impl Move {
    pub fn apply(&self, s: &LatticeSet) -> LatticeSet {
        match *self {
            Move::Sigma { k, side, power } => sigma_pow(s, k, side, power),
            Move::Rho { k, side, power } => rho_pow(s, k, side, power),
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (name, k, side, power) = match *self {
            Move::Sigma { k, side, power } => ("sigma", k, side, power),
            Move::Rho { k, side, power } => ("rho", k, side, power),
        };
        let op = if side == Side::Le { "<=" } else { ">=" };
        if power == 1 {
            write!(f, "{name}_{op}{k}")
        } else {
            write!(f, "{name}^{power}_{op}{k}")
        }
    }
}

/// Which mutation justifies a step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StepKind {
    /// One move, by the one-row mutation or its inverse (after transposing
    /// or negating the support as needed).
    Single,
    /// A run of `k` column moves realized at once by the transposed block
    /// mutation with row length `h`, on the support moved by `-offset`
    /// (and negated first when `negated`).
    Block { k: i64, h: i64, offset: GridPoint, negated: bool },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainStep {
    pub kind: StepKind,
    pub moves: Vec<Move>,
    /// The hypotheses of the justifying mutation hold.
    pub verdict: bool,
    pub before: LatticeSet,
    pub after: LatticeSet,
}

impl ChainStep {
    pub fn label(&self) -> String {
        let moves: Vec<String> = self.moves.iter().map(|m| format!("{m}")).collect();
        match &self.kind {
            StepKind::Single => moves.join(" "),
            StepKind::Block { k, h, .. } => format!("block(k={k}, h={h}) {}", moves.join(" ")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeChain {
    pub start: LatticeSet,
    pub end: LatticeSet,
    pub target: LatticeSet,
    pub steps: Vec<ChainStep>,
}

impl LatticeChain {
    pub fn all_verdicts_hold(&self) -> bool {
        self.steps.iter().all(|s| s.verdict)
    }

    /// The end agrees with the target up to translation.
    pub fn end_matches_target(&self) -> bool {
        self.end.equivalent(&self.target)
    }

    /// Every support along the chain has the same Coxeter polynomial.
    pub fn certificates_consistent(&self) -> bool {
        let mut cartans = Vec::with_capacity(self.steps.len() + 2);
        cartans.push(cartan_lattice(&self.start));
        cartans.extend(self.steps.iter().map(|s| cartan_lattice(&s.after)));
        cartans.push(cartan_lattice(&self.target));
        chain_consistent(&cartans)
    }

    pub fn holds(&self) -> bool {
        self.all_verdicts_hold() && self.end_matches_target()
    }
}

/// Hypothesis of the one-row mutation for a single move, reduced to
/// `σ_{≤k}` acting on a support whose first row is 0.
fn single_verdict(s: &LatticeSet, mv: Move) -> bool {
    let (mut t, k, side, power) = match mv {
        Move::Sigma { k, side, power } => (s.clone(), k, side, power),
        Move::Rho { k, side, power } => (s.transpose(), k, side, power),
    };
    let (mut kk, mut e) = (k, power);
    if side == Side::Ge {
        t = t.negate();
        kk = -kk;
        e = -e;
    }
    if e == -1 {
        // the inverse move is justified by the forward mutation on its image
        t = sigma_pow(&t, kk, Side::Le, -1);
    }
    let Some(m) = t.min_row() else { return true };
    kk -= m;
    t = t.translate(GridPoint::new(-m, 0));
    kk < 0 || is_m_plus(&t, kk)
}

/// Hypothesis of the transposed block mutation with parameters `(k, h)` on
/// `s - offset`.
fn block_verdict(s: &LatticeSet, offset: GridPoint, k: i64, h: i64) -> bool {
    if k <= 0 || h <= 0 || k % (h + 1) != 0 {
        return false;
    }
    let t = s.translate(GridPoint::new(-offset.i, -offset.j)).transpose();
    let row0 = t.row(0);
    row0.len() as i64 == h && (1..k).all(|i| t.row(i) == row0) && is_m_plus(&t, k - 1)
}

struct Builder {
    cur: LatticeSet,
    steps: Vec<ChainStep>,
}

impl Builder {
    fn single(&mut self, mv: Move) {
        let verdict = single_verdict(&self.cur, mv);
        let after = mv.apply(&self.cur);
        let before = core::mem::replace(&mut self.cur, after.clone());
        self.steps.push(ChainStep { kind: StepKind::Single, moves: alloc::vec![mv], verdict, before, after });
    }

    /// Runs `moves` as one block step when its hypothesis holds and one
    /// step at a time otherwise.
    fn block(&mut self, moves: Vec<Move>, k: i64, h: i64, offset: GridPoint, negated: bool) {
        if moves.is_empty() {
            return;
        }
        let seen = if negated { self.cur.negate() } else { self.cur.clone() };
        if block_verdict(&seen, offset, k, h) {
            let before = self.cur.clone();
            let after = moves.iter().fold(before.clone(), |s, m| m.apply(&s));
            self.cur = after.clone();
            self.steps.push(ChainStep { kind: StepKind::Block { k, h, offset, negated }, moves, verdict: true, before, after });
        } else {
            for mv in moves {
                self.single(mv);
            }
        }
    }
}

/// The chain `Y(s,t,u) ⇝ ᵗY(s,t-1,u-s)`. Needs `s ≥ 2`, `s ≤ u ≤ t`, and
/// either `s | u` and `(s+1) | (t-u)`, or `s = 2` and `3 | (t-u)`.
pub fn main1_transform(s: i64, t: i64, u: i64) -> Result<LatticeChain, Error> {
    let divisible = u % s == 0 && (t - u) % (s + 1) == 0;
    let small = s == 2 && (t - u) % 3 == 0;
    if s < 2 || u < s || u > t || t < 2 || !(divisible || small) {
        return Err(Error::Precondition(format!(
            "need s >= 2, s <= u <= t, and s | u with (s+1) | (t-u), or s = 2 with 3 | (t-u); got ({s},{t},{u})"
        )));
    }
    let start = young_pqr(s, t, u)?;
    let target = young_pqr(s, t - 1, u - s)?.transpose();
    let mut b = Builder { cur: start.clone(), steps: Vec::new() };

    for m in (1..s).rev() {
        b.single(Move::Sigma { k: m, side: Side::Le, power: 1 });
    }
    // the columns t-u+2..=t-s+1 are lifted one row; seen on the negated
    // support this is ρ_{≤0} ⋯ ρ_{≤u-s-1}
    let lift: Vec<Move> = (t - u + 2..=t - s + 1).map(|c| Move::Rho { k: c, side: Side::Ge, power: -1 }).collect();
    b.block(lift, u - s, s - 1, GridPoint::new(-1, s - t - 1), true);
    let drop: Vec<Move> = (1..=t - u).rev().map(|c| Move::Rho { k: c, side: Side::Le, power: 1 }).collect();
    b.block(drop, t - u, s, GridPoint::new(1, 1), false);

    let (lo, hi) = (b.cur.min_row().unwrap_or(0), b.cur.max_row().unwrap_or(0));
    for m in s + 1..=hi {
        b.single(Move::Sigma { k: m, side: Side::Ge, power: 1 });
    }
    for _ in 0..2 {
        b.single(Move::Sigma { k: s - 1, side: Side::Le, power: -1 });
    }
    for m in (lo..=s - 2).rev() {
        b.single(Move::Sigma { k: m, side: Side::Le, power: -1 });
    }
    Ok(LatticeChain { start, end: b.cur, target, steps: b.steps })
}

/// The chain `Y(p+1,q,q-1) ⇝ ᵗY(q+1,p,p-1)`: `q` times `σ_{≤p}`, then `p`
/// times `ρ^{-1}_{≤0}`.
pub fn main3_transform(p: i64, q: i64) -> Result<LatticeChain, Error> {
    if p < 2 || q < 2 {
        return Err(Error::Precondition(format!("need p, q >= 2, got ({p},{q})")));
    }
    let start = young_pqr(p + 1, q, q - 1)?;
    let target = young_pqr(q + 1, p, p - 1)?.transpose();
    let mut b = Builder { cur: start.clone(), steps: Vec::new() };
    for _ in 0..q {
        b.single(Move::Sigma { k: p, side: Side::Le, power: 1 });
    }
    for _ in 0..p {
        b.single(Move::Rho { k: 0, side: Side::Le, power: -1 });
    }
    Ok(LatticeChain { start, end: b.cur, target, steps: b.steps })
}
