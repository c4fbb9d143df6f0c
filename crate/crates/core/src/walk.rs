//! Ground-truth counters for random walk labelings.
//!
//! A walker starts on any vertex and labels it 1. It then repeatedly steps to
//! a neighbor of its current vertex; whenever it lands on an unlabeled vertex
//! that vertex receives the next label. Two independent counters live here:
//!
//! * [`enumerate_labelings_walk`] explores the walk's own state space and
//!   returns every labeling it can produce.
//! * [`count_labelings_dp`] counts vertex orderings whose every prefix induces
//!   a connected subgraph, by dynamic programming over vertex subsets.
//!
//! Their agreement is checked in the test suites rather than assumed.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::ops::AddAssign;

use num_traits::Zero;
use rayon::prelude::*;
use thiserror::Error;

use crate::arith::Natural;
use crate::graph::{Graph, MAX_DP_ORDER};

/// Largest order accepted by the state-space enumerator.
pub const MAX_WALK_ORDER: usize = 10;

/// Above this order the DP switches to popcount layers by default.
pub const FULL_TABLE_MAX_ORDER: usize = 22;

// f(S) <= |S|! and 34! < 2^128
const U128_SAFE_ORDER: usize = 34;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WalkError {
    #[error("graph of order {n} exceeds the limit of {limit} for this method")]
    TooLarge { n: usize, limit: usize },
    #[error("vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("not a labeling: {0}")]
    InvalidLabeling(String),
}

/// Order in which vertices were labeled: `seq[i]` received label `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabelingOrder(Vec<usize>);

impl LabelingOrder {
    pub fn new(seq: Vec<usize>) -> Result<LabelingOrder, WalkError> {
        let n = seq.len();
        let mut seen = vec![false; n];
        for &v in &seq {
            if v >= n || seen[v] {
                return Err(WalkError::InvalidLabeling(format!("{seq:?} is not a permutation of 0..{n}")));
            }
            seen[v] = true;
        }
        Ok(LabelingOrder(seq))
    }

    /// From a label assignment: `labels[v]` is the label (1-based) of vertex `v`.
    pub fn from_labels(labels: &[usize]) -> Result<LabelingOrder, WalkError> {
        let n = labels.len();
        let mut seq = vec![usize::MAX; n];
        for (v, &l) in labels.iter().enumerate() {
            if l == 0 || l > n || seq[l - 1] != usize::MAX {
                return Err(WalkError::InvalidLabeling(format!("{labels:?} is not a bijection onto 1..={n}")));
            }
            seq[l - 1] = v;
        }
        Ok(LabelingOrder(seq))
    }

    pub fn seq(&self) -> &[usize] {
        &self.0
    }

    /// Inverse view: label (1-based) of each vertex.
    pub fn labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            labels[v] = i + 1;
        }
        labels
    }

    /// Whether every prefix of the order induces a connected subgraph of `g`.
    pub fn has_connected_prefixes(&self, g: &Graph) -> bool {
        if self.0.len() != g.order() {
            return false;
        }
        let mut placed = vec![false; g.order()];
        for (i, &v) in self.0.iter().enumerate() {
            if i > 0 && !g.neighbors(v).iter().any(|&u| placed[u]) {
                return false;
            }
            placed[v] = true;
        }
        true
    }
}

impl fmt::Display for LabelingOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A point in the walk: vertices labeled so far, in order, and the walker's
/// position.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WalkState {
    pub labeled: Vec<usize>,
    pub current: usize,
}

impl WalkState {
    /// Every state one step away: the walker moves to a neighbor of
    /// `current`, labeling it if it was unlabeled.
    pub fn successors(&self, g: &Graph) -> Vec<WalkState> {
        g.neighbors(self.current)
            .iter()
            .map(|&w| {
                let mut labeled = self.labeled.clone();
                if !labeled.contains(&w) {
                    labeled.push(w);
                }
                WalkState { labeled, current: w }
            })
            .collect()
    }

    /// Vertices the walker can stand on without labeling anything new.
    fn labeled_closure(&self, g: &Graph) -> Vec<usize> {
        let mut reach = vec![self.current];
        let mut seen: HashSet<usize> = reach.iter().copied().collect();
        let mut i = 0;
        while i < reach.len() {
            for &w in g.neighbors(reach[i]) {
                if self.labeled.contains(&w) && seen.insert(w) {
                    reach.push(w);
                }
            }
            i += 1;
        }
        reach
    }
}

/// Every labeling the walk process can produce on `g`.
///
/// States are `(labeled sequence, position)`. Moves that only wander over
/// labeled vertices are collapsed into one closure step: from a state the
/// walker may stand on any labeled vertex reachable through labeled vertices,
/// and its next label goes to an unlabeled neighbor of such a vertex. Visited
/// states are memoized so the search terminates.
pub fn enumerate_labelings_walk(g: &Graph) -> Result<BTreeSet<LabelingOrder>, WalkError> {
    let n = g.order();
    if n > MAX_WALK_ORDER {
        return Err(WalkError::TooLarge { n, limit: MAX_WALK_ORDER });
    }
    let mut found = BTreeSet::new();
    let mut visited: HashSet<WalkState> = HashSet::new();
    let mut stack: Vec<WalkState> = (0..n).map(|v| WalkState { labeled: vec![v], current: v }).collect();
    while let Some(state) = stack.pop() {
        if !visited.insert(state.clone()) {
            continue;
        }
        if state.labeled.len() == n {
            found.insert(LabelingOrder(state.labeled));
            continue;
        }
        for stand in state.labeled_closure(g) {
            for &w in g.neighbors(stand) {
                if !state.labeled.contains(&w) {
                    let mut labeled = state.labeled.clone();
                    labeled.push(w);
                    stack.push(WalkState { labeled, current: w });
                }
            }
        }
    }
    Ok(found)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DpOptions {
    /// Keep only two popcount layers of connected subsets resident instead
    /// of a table over all `2^n` subsets.
    pub low_memory: bool,
}

/// Number of random walk labelings of `g`. Disconnected graphs have none.
pub fn count_labelings_dp(g: &Graph) -> Result<Natural, WalkError> {
    count_labelings_dp_with(g, DpOptions::default())
}

pub fn count_labelings_dp_with(g: &Graph, opts: DpOptions) -> Result<Natural, WalkError> {
    let n = g.order();
    if n > MAX_DP_ORDER {
        return Err(WalkError::TooLarge { n, limit: MAX_DP_ORDER });
    }
    count_from(g, full_mask(n), opts)
}

/// Number of random walk labelings of `g` that give label 1 to `v`.
pub fn count_labelings_started_at(g: &Graph, v: usize) -> Result<Natural, WalkError> {
    count_labelings_started_at_with(g, v, DpOptions::default())
}

pub fn count_labelings_started_at_with(g: &Graph, v: usize, opts: DpOptions) -> Result<Natural, WalkError> {
    let n = g.order();
    if n > MAX_DP_ORDER {
        return Err(WalkError::TooLarge { n, limit: MAX_DP_ORDER });
    }
    if v >= n {
        return Err(WalkError::VertexOutOfRange { vertex: v, n });
    }
    count_from(g, 1u64 << v, opts)
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn count_from(g: &Graph, starts: u64, opts: DpOptions) -> Result<Natural, WalkError> {
    let n = g.order();
    if !g.is_connected() {
        return Ok(Natural::zero());
    }
    let nbr = g.neighbor_masks().ok_or(WalkError::TooLarge { n, limit: MAX_DP_ORDER })?;
    if n == 1 {
        return Ok(Natural::from(starts & 1));
    }
    let count = if !opts.low_memory && n <= FULL_TABLE_MAX_ORDER {
        Natural::from(full_table(&nbr, starts))
    } else if n <= U128_SAFE_ORDER {
        Natural::from(layered::<u128>(&nbr, starts))
    } else {
        layered::<Natural>(&nbr, starts)
    };
    Ok(count)
}

/// f(S) = number of connected orderings of S that begin in `starts`.
/// Subsets are visited in increasing numeric order, which lists every
/// `S \ {v}` before `S`.
fn full_table(nbr: &[u64], starts: u64) -> u128 {
    let n = nbr.len();
    let size = 1usize << n;
    let mut f = vec![0u128; size];
    for v in 0..n {
        if starts >> v & 1 == 1 {
            f[1 << v] = 1;
        }
    }
    for mask in 1..size {
        if mask.count_ones() < 2 {
            continue;
        }
        let mut acc = 0u128;
        let mut bits = mask;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let rest = mask ^ (1 << v);
            if f[rest] != 0 && nbr[v] & rest as u64 != 0 {
                acc += f[rest];
            }
        }
        f[mask] = acc;
    }
    f[size - 1]
}

/// Same recurrence, kept as sorted layers of connected subsets of one size.
/// Each layer is computed in parallel from the previous one.
fn layered<T>(nbr: &[u64], starts: u64) -> T
where
    T: Clone + Zero + From<u8> + Send + Sync + for<'a> AddAssign<&'a T>,
{
    let n = nbr.len();
    let mut layer: Vec<(u64, T)> = (0..n)
        .filter(|&v| starts >> v & 1 == 1)
        .map(|v| (1u64 << v, T::from(1u8)))
        .collect();
    for _ in 1..n {
        let mut candidates: Vec<u64> = layer
            .par_iter()
            .flat_map_iter(|&(s, _)| {
                let mut frontier = bits(s).fold(0u64, |acc, v| acc | nbr[v]) & !s;
                std::iter::from_fn(move || {
                    (frontier != 0).then(|| {
                        let w = frontier.trailing_zeros();
                        frontier &= frontier - 1;
                        s | 1u64 << w
                    })
                })
            })
            .collect();
        candidates.par_sort_unstable();
        candidates.dedup();
        layer = candidates
            .into_par_iter()
            .map(|t| {
                let mut acc = T::zero();
                for v in bits(t) {
                    let rest = t ^ (1u64 << v);
                    if nbr[v] & rest != 0 {
                        if let Ok(i) = layer.binary_search_by_key(&rest, |e| e.0) {
                            acc += &layer[i].1;
                        }
                    }
                }
                (t, acc)
            })
            .filter(|(_, c)| !c.is_zero())
            .collect();
    }
    layer.into_iter().map(|(_, c)| c).fold(T::zero(), |mut a, c| {
        a += &c;
        a
    })
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            v
        })
    })
}
