//! Finite subsets of Z^2, Young diagrams, the shears sigma/rho and the
//! M-subset predicates.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;

/// A point `(i, j)`: row `i`, column `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridPoint {
    pub i: i64,
    pub j: i64,
}

impl GridPoint {
    pub const fn new(i: i64, j: i64) -> Self {
        GridPoint { i, j }
    }
}

impl From<(i64, i64)> for GridPoint {
    fn from((i, j): (i64, i64)) -> Self {
        GridPoint { i, j }
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// Acts on indices `<= k`.
    Le,
    /// Acts on indices `>= k`.
    Ge,
}

/// Finite subset of Z^2, iterated in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LatticeSet {
    points: BTreeSet<GridPoint>,
}

impl FromIterator<GridPoint> for LatticeSet {
    fn from_iter<T: IntoIterator<Item = GridPoint>>(iter: T) -> Self {
        LatticeSet { points: iter.into_iter().collect() }
    }
}

impl FromIterator<(i64, i64)> for LatticeSet {
    fn from_iter<T: IntoIterator<Item = (i64, i64)>>(iter: T) -> Self {
        iter.into_iter().map(GridPoint::from).collect()
    }
}

impl LatticeSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: GridPoint) -> bool {
        self.points.contains(&p)
    }

    pub fn insert(&mut self, p: GridPoint) -> bool {
        self.points.insert(p)
    }

    pub fn iter(&self) -> impl Iterator<Item = GridPoint> + '_ {
        self.points.iter().copied()
    }

    /// Points in canonical order.
    pub fn to_vec(&self) -> Vec<GridPoint> {
        self.iter().collect()
    }

    /// Position of `p` in canonical order.
    pub fn index_of(&self, p: GridPoint) -> Option<usize> {
        self.points.contains(&p).then(|| self.points.range(..p).count())
    }

    /// `S_k`: columns of the points in row `k`.
    pub fn row(&self, k: i64) -> BTreeSet<i64> {
        self.points.range(GridPoint::new(k, i64::MIN)..=GridPoint::new(k, i64::MAX)).map(|p| p.j).collect()
    }

    /// `S^k`: rows of the points in column `k`.
    pub fn col(&self, k: i64) -> BTreeSet<i64> {
        self.iter().filter(|p| p.j == k).map(|p| p.i).collect()
    }

    /// `S_{i,j} = S ∩ [i-1,i] x [j-1,j]`.
    pub fn square(&self, p: GridPoint) -> LatticeSet {
        [(p.i - 1, p.j - 1), (p.i - 1, p.j), (p.i, p.j - 1), (p.i, p.j)]
            .into_iter()
            .map(GridPoint::from)
            .filter(|q| self.contains(*q))
            .collect()
    }

    pub fn row_indices(&self) -> BTreeSet<i64> {
        self.iter().map(|p| p.i).collect()
    }

    pub fn col_indices(&self) -> BTreeSet<i64> {
        self.iter().map(|p| p.j).collect()
    }

    pub fn min_row(&self) -> Option<i64> {
        self.points.first().map(|p| p.i)
    }

    pub fn max_row(&self) -> Option<i64> {
        self.points.last().map(|p| p.i)
    }

    pub fn min_col(&self) -> Option<i64> {
        self.iter().map(|p| p.j).min()
    }

    pub fn max_col(&self) -> Option<i64> {
        self.iter().map(|p| p.j).max()
    }

    pub fn filter(&self, mut keep: impl FnMut(GridPoint) -> bool) -> LatticeSet {
        self.iter().filter(|p| keep(*p)).collect()
    }

    pub fn map(&self, f: impl Fn(GridPoint) -> GridPoint) -> LatticeSet {
        self.iter().map(f).collect()
    }

    pub fn transpose(&self) -> LatticeSet {
        self.map(|p| GridPoint::new(p.j, p.i))
    }

    pub fn translate(&self, v: GridPoint) -> LatticeSet {
        self.map(|p| GridPoint::new(p.i + v.i, p.j + v.j))
    }

    pub fn negate(&self) -> LatticeSet {
        self.map(|p| GridPoint::new(-p.i, -p.j))
    }

    /// Translate so the minimal row and minimal column are both 1.
    pub fn normalize(&self) -> Result<LatticeSet, Error> {
        let (Some(a), Some(b)) = (self.min_row(), self.min_col()) else {
            return Err(Error::Precondition("normalize of an empty set".into()));
        };
        Ok(self.translate(GridPoint::new(1 - a, 1 - b)))
    }

    /// Equal up to translation.
    pub fn equivalent(&self, other: &LatticeSet) -> bool {
        match (self.normalize(), other.normalize()) {
            (Ok(a), Ok(b)) => a == b,
            (Err(_), Err(_)) => true,
            _ => false,
        }
    }

    /// True when `self` is a Young diagram: rows are intervals starting at the
    /// same column, rows are consecutive and weakly shrink going down.
    pub fn is_young(&self) -> bool {
        let Ok(n) = self.normalize() else {
            return false;
        };
        let rows: Vec<i64> = n.row_indices().into_iter().collect();
        let mut prev = i64::MAX;
        for (idx, &r) in rows.iter().enumerate() {
            if r != idx as i64 + 1 {
                return false;
            }
            let row = n.row(r);
            let len = row.len() as i64;
            if row.first() != Some(&1) || row.last() != Some(&len) || len > prev {
                return false;
            }
            prev = len;
        }
        true
    }

    /// Row lengths from the top row down (meaningful for Young diagrams).
    pub fn row_lengths(&self) -> Vec<usize> {
        self.row_indices().into_iter().map(|r| self.row(r).len()).collect()
    }

    /// Minimal complete set of lines for a compact picture, `#` for members.
    pub fn picture(&self) -> alloc::string::String {
        let mut s = alloc::string::String::new();
        let (Some(a), Some(b), Some(c), Some(d)) =
            (self.min_row(), self.max_row(), self.min_col(), self.max_col())
        else {
            return s;
        };
        for i in a..=b {
            for j in c..=d {
                s.push(if self.contains(GridPoint::new(i, j)) { '#' } else { '.' });
            }
            s.push('\n');
        }
        s
    }
}

/// A pair of compositions `p = (p_1..p_r)`, `q = (q_1..q_r)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionPair {
    p: Vec<i64>,
    q: Vec<i64>,
}

impl CompositionPair {
    pub fn new(p: Vec<i64>, q: Vec<i64>) -> Result<Self, Error> {
        if p.is_empty() || p.len() != q.len() {
            return Err(Error::Precondition("compositions must have equal positive length".into()));
        }
        if p.iter().chain(q.iter()).any(|&x| x < 1) {
            return Err(Error::Precondition("composition entries must be positive".into()));
        }
        Ok(CompositionPair { p, q })
    }

    pub fn p(&self) -> &[i64] {
        &self.p
    }

    pub fn q(&self) -> &[i64] {
        &self.q
    }

    pub fn r(&self) -> usize {
        self.p.len()
    }

    /// Partial sum `p̄_s = p_1 + ... + p_s`.
    pub fn p_bar(&self, s: usize) -> i64 {
        self.p[..s].iter().sum()
    }

    pub fn q_bar(&self, s: usize) -> i64 {
        self.q[..s].iter().sum()
    }

    pub fn n_p(&self) -> i64 {
        self.p_bar(self.r())
    }

    pub fn n_q(&self) -> i64 {
        self.q_bar(self.r())
    }
}

/// `Y(p;q) = ∪_{k<r} [1+p̄_k, p̄_{k+1}] x [1, q̄_{r-k}]`.
pub fn young_pq(pair: &CompositionPair) -> LatticeSet {
    let r = pair.r();
    let mut s = LatticeSet::new();
    for k in 0..r {
        for i in 1 + pair.p_bar(k)..=pair.p_bar(k + 1) {
            for j in 1..=pair.q_bar(r - k) {
                s.insert(GridPoint::new(i, j));
            }
        }
    }
    s
}

/// `Y(p,q,r)`: `p-1` rows of width `q` over one row of width `q-r`.
/// `r = 0` gives the full rectangle, `r = q` drops the last row.
pub fn young_pqr(p: i64, q: i64, r: i64) -> Result<LatticeSet, Error> {
    if p < 1 || q < 1 || r < 0 || r > q {
        return Err(Error::Precondition(alloc::format!("Y({p},{q},{r}) needs p,q >= 1 and 0 <= r <= q")));
    }
    let mut s = LatticeSet::new();
    for i in 1..=p {
        let width = if i == p { q - r } else { q };
        for j in 1..=width {
            s.insert(GridPoint::new(i, j));
        }
    }
    Ok(s)
}

/// `σ_{≤k}` (or `σ_{≥k}`) raised to the power `e`: points in the affected
/// rows move `e` columns to the left.
pub fn sigma_pow(s: &LatticeSet, k: i64, side: Side, e: i64) -> LatticeSet {
    s.map(|p| {
        let hit = match side {
            Side::Le => p.i <= k,
            Side::Ge => p.i >= k,
        };
        if hit {
            GridPoint::new(p.i, p.j - e)
        } else {
            p
        }
    })
}

/// `ρ_{≤k}` (or `ρ_{≥k}`) to the power `e`: points in the affected columns
/// move `e` rows up.
pub fn rho_pow(s: &LatticeSet, k: i64, side: Side, e: i64) -> LatticeSet {
    s.map(|p| {
        let hit = match side {
            Side::Le => p.j <= k,
            Side::Ge => p.j >= k,
        };
        if hit {
            GridPoint::new(p.i - e, p.j)
        } else {
            p
        }
    })
}

pub fn sigma(s: &LatticeSet, k: i64, side: Side) -> LatticeSet {
    sigma_pow(s, k, side, 1)
}

pub fn rho(s: &LatticeSet, k: i64, side: Side) -> LatticeSet {
    rho_pow(s, k, side, 1)
}

/// Outcome of an M-subset test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MVerdict {
    pub holds: bool,
    /// An empty row inside `[0, k+1]` was met; the convention that empty rows
    /// are intervals (equal only to other empty rows) decided the answer.
    pub empty_row_convention_used: bool,
}

fn is_interval(r: &BTreeSet<i64>) -> bool {
    match (r.first(), r.last()) {
        (Some(a), Some(b)) => (b - a + 1) as usize == r.len(),
        _ => true,
    }
}

fn shifted(r: &BTreeSet<i64>, by: i64) -> BTreeSet<i64> {
    r.iter().map(|x| x + by).collect()
}

fn m_check(s: &LatticeSet, k: i64, last_shift: i64) -> MVerdict {
    if k < 0 {
        return MVerdict { holds: false, empty_row_convention_used: false };
    }
    let mut empty = false;
    let mut ok = true;
    let rows: Vec<BTreeSet<i64>> = (0..=k + 1).map(|i| s.row(i)).collect();
    for r in &rows {
        empty |= r.is_empty();
        ok &= is_interval(r);
    }
    for i in 1..=k as usize {
        let (a, b) = (&rows[i - 1], &rows[i]);
        ok &= b == a || (!a.is_empty() && *b == shifted(a, 1));
    }
    let last = &rows[k as usize + 1];
    let bound = shifted(&rows[k as usize], last_shift);
    ok &= last.is_subset(&bound);
    MVerdict { holds: ok, empty_row_convention_used: empty }
}

pub fn m_plus(s: &LatticeSet, k: i64) -> MVerdict {
    m_check(s, k, 0)
}

pub fn m_minus(s: &LatticeSet, k: i64) -> MVerdict {
    m_check(s, k, 1)
}

pub fn is_m_plus(s: &LatticeSet, k: i64) -> bool {
    m_plus(s, k).holds
}

pub fn is_m_minus(s: &LatticeSet, k: i64) -> bool {
    m_minus(s, k).holds
}

/// `ᵗS` is an `M⁺_k`-subset.
pub fn is_m_plus_t(s: &LatticeSet, k: i64) -> bool {
    is_m_plus(&s.transpose(), k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[(i64, i64)]) -> LatticeSet {
        v.iter().copied().collect()
    }

    #[test]
    fn young_examples() {
        let y = young_pq(&CompositionPair::new(alloc::vec![3], alloc::vec![4]).unwrap());
        assert_eq!(y.len(), 12);
        let y = young_pq(&CompositionPair::new(alloc::vec![1, 2, 1], alloc::vec![1, 2, 2]).unwrap());
        assert_eq!(y.row_lengths(), alloc::vec![5, 3, 3, 1]);
        assert!(y.is_young());
        assert_eq!(young_pqr(2, 8, 5).unwrap().row_lengths(), alloc::vec![8, 3]);
        assert_eq!(young_pqr(3, 4, 0).unwrap().len(), 12);
        assert!(young_pqr(2, 3, 4).is_err());
    }

    #[test]
    fn shear_examples() {
        let s = set(&[(0, 1), (0, 2), (1, 1), (1, 2)]);
        assert_eq!(sigma(&s, 0, Side::Le), set(&[(0, 0), (0, 1), (1, 1), (1, 2)]));
        assert_eq!(rho(&set(&[(1, 1), (1, 2)]), 1, Side::Le), set(&[(0, 1), (1, 2)]));
        assert_eq!(sigma(&s, 5, Side::Ge), s);
        assert_eq!(rho(&s, -3, Side::Ge), s.translate(GridPoint::new(-1, 0)));
    }

    #[test]
    fn m_subsets() {
        let mut s = LatticeSet::new();
        for j in 1..=8 {
            s.insert(GridPoint::new(0, j));
        }
        for j in 1..=3 {
            s.insert(GridPoint::new(1, j));
        }
        assert!(is_m_plus(&s, 0));
        assert!(is_m_minus(&sigma(&s, 0, Side::Le), 0));
        let bad: LatticeSet = s.filter(|p| p.i == 0).iter().chain((2..=9).map(|j| GridPoint::new(1, j))).collect();
        assert!(!is_m_plus(&bad, 0));
    }

    #[test]
    fn normalize_example() {
        assert_eq!(set(&[(3, 5), (4, 5)]).normalize().unwrap(), set(&[(1, 1), (2, 1)]));
        assert!(LatticeSet::new().normalize().is_err());
        assert_eq!(set(&[(1, 1), (2, 2)]).index_of(GridPoint::new(2, 2)), Some(1));
    }
}
