//! Hessenberg functions and the type-A negative root poset.
//!
//! A negative root `t_i - t_j` (with `i > j`) is encoded as the ordered pair
//! `(i, j)`. Every set of roots is a [`RootSet`], which iterates in `(i, j)`
//! order so that all downstream output is deterministic.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A validated Hessenberg function `h : [n] -> [n]`.
///
/// Invariants: `h(i) >= i` and `h(i + 1) >= h(i)`. Values are stored 1-based,
/// so `values()[0]` is `h(1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct HessenbergFunction {
    values: Vec<usize>,
}

impl HessenbergFunction {
    /// Validates a value sequence `(h(1), …, h(n))`.
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        for (k, &v) in values.iter().enumerate() {
            let index = k + 1;
            if v < 1 || v > n {
                return Err(Error::OutOfRange { index, value: v, n });
            }
        }
        for (k, &v) in values.iter().enumerate() {
            if v < k + 1 {
                return Err(Error::BelowDiagonal {
                    index: k + 1,
                    value: v,
                });
            }
        }
        for (k, pair) in values.windows(2).enumerate() {
            if pair[1] < pair[0] {
                return Err(Error::NotNondecreasing {
                    index: k + 1,
                    value: pair[0],
                    next: k + 2,
                    next_value: pair[1],
                });
            }
        }
        Ok(Self { values })
    }

    /// The full function `(n, …, n)`; its ideal is empty and `Γ_h` is complete.
    pub fn full(n: usize) -> Self {
        assert!(n >= 1, "rank must be positive");
        Self { values: vec![n; n] }
    }

    /// The identity function `(1, 2, …, n)`; `Γ_h` has no edges.
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "rank must be positive");
        Self {
            values: (1..=n).collect(),
        }
    }

    /// Rank `n`.
    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// `h(i)` for `1 <= i <= n`.
    pub fn h(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    /// The value sequence `(h(1), …, h(n))`.
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Whether the negative root `t_i - t_j` (`i > j`) lies in `Φ_h^-`.
    pub fn contains_negative(&self, i: usize, j: usize) -> bool {
        i > j && i <= self.h(j)
    }

    /// Whether the root `t_i - t_j` lies in `Φ_h = Φ_h^- ∪ Φ^+`.
    pub fn contains_root(&self, i: usize, j: usize) -> bool {
        i != j && i <= self.h(j)
    }

    /// `|Φ_h^-|`, which is also the complex dimension of the regular Hessenberg
    /// varieties attached to `h` and the top cohomological degree (in units of 2).
    pub fn dim(&self) -> usize {
        (1..=self.n()).map(|j| self.h(j) - j).sum()
    }
}

impl TryFrom<Vec<usize>> for HessenbergFunction {
    type Error = Error;
    fn try_from(values: Vec<usize>) -> Result<Self> {
        Self::new(values)
    }
}

impl From<HessenbergFunction> for Vec<usize> {
    fn from(h: HessenbergFunction) -> Self {
        h.values
    }
}

impl fmt::Display for HessenbergFunction {
    /// Formats as `(3,4,5,6,6,6)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, v) in self.values.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// A root `t_i - t_j` with `i != j`; negative iff `i > j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[usize; 2]", into = "[usize; 2]")]
pub struct Root {
    pub i: usize,
    pub j: usize,
}

impl Root {
    pub const fn new(i: usize, j: usize) -> Self {
        Self { i, j }
    }

    pub fn is_negative(self) -> bool {
        self.i > self.j
    }

    pub fn is_positive(self) -> bool {
        self.i < self.j
    }

    /// The sum of two roots when it is again a root.
    pub fn checked_add(self, other: Root) -> Option<Root> {
        if self.j == other.i && self.i != other.j {
            Some(Root::new(self.i, other.j))
        } else if other.j == self.i && other.i != self.j {
            Some(Root::new(other.i, self.j))
        } else {
            None
        }
    }
}

impl From<[usize; 2]> for Root {
    fn from(p: [usize; 2]) -> Self {
        Root::new(p[0], p[1])
    }
}

impl From<Root> for [usize; 2] {
    fn from(r: Root) -> Self {
        [r.i, r.j]
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t{}-t{}", self.i, self.j)
    }
}

/// A deduplicated set of roots of `gl(n)`, iterated in `(i, j)` order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootSet {
    n: usize,
    members: BTreeSet<Root>,
}

impl RootSet {
    /// The empty set in rank `n`.
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            members: BTreeSet::new(),
        }
    }

    /// Builds a set from roots, rejecting any index outside `[n]` or with `i == j`.
    pub fn from_roots(n: usize, roots: impl IntoIterator<Item = Root>) -> Result<Self> {
        let mut set = Self::empty(n);
        for r in roots {
            if r.i == r.j || r.i == 0 || r.j == 0 || r.i > n || r.j > n {
                return Err(Error::InvalidRoot { i: r.i, j: r.j, n });
            }
            set.members.insert(r);
        }
        Ok(set)
    }

    /// Builds a set from `(i, j)` pairs.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        Self::from_roots(n, pairs.iter().map(|&(i, j)| Root::new(i, j)))
    }

    /// All negative roots `Φ^-` of `gl(n)`.
    pub fn negative_roots(n: usize) -> Self {
        let members = (1..=n)
            .flat_map(|i| (1..i).map(move |j| Root::new(i, j)))
            .collect();
        Self { n, members }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, r: Root) -> bool {
        self.members.contains(&r)
    }

    pub fn iter(&self) -> impl Iterator<Item = Root> + '_ {
        self.members.iter().copied()
    }

    pub fn insert(&mut self, r: Root) {
        self.members.insert(r);
    }

    /// Pairs `(i, j)` in iteration order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.iter().map(|r| (r.i, r.j)).collect()
    }

    pub fn intersection(&self, other: &RootSet) -> RootSet {
        Self {
            n: self.n,
            members: self.members.intersection(&other.members).copied().collect(),
        }
    }

    pub fn difference(&self, other: &RootSet) -> RootSet {
        Self {
            n: self.n,
            members: self.members.difference(&other.members).copied().collect(),
        }
    }

    /// Keeps only roots satisfying `keep`.
    pub fn filter(&self, mut keep: impl FnMut(Root) -> bool) -> RootSet {
        Self {
            n: self.n,
            members: self.members.iter().copied().filter(|&r| keep(r)).collect(),
        }
    }
}

impl fmt::Display for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, r) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "}}")
    }
}

/// Returns `(Φ_h^-, Φ_h)` where `Φ_h = Φ_h^- ∪ Φ^+`.
pub fn roots_of(h: &HessenbergFunction) -> (RootSet, RootSet) {
    let n = h.n();
    let mut minus = RootSet::empty(n);
    let mut all = RootSet::empty(n);
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                continue;
            }
            if h.contains_root(i, j) {
                all.insert(Root::new(i, j));
                if i > j {
                    minus.insert(Root::new(i, j));
                }
            }
        }
    }
    (minus, all)
}

/// The ideal `I_h = Φ^- \ Φ_h^-`, i.e. all `t_i - t_j` with `i > h(j)`.
pub fn ideal_of(h: &HessenbergFunction) -> RootSet {
    let n = h.n();
    let ideal = RootSet::negative_roots(n).filter(|r| r.i > h.h(r.j));
    debug_assert!(is_ideal(&ideal), "I_h must be closed upward");
    ideal
}

/// Whether `set` consists of negative roots and is closed under adding
/// negative roots that keep the sum negative.
pub fn is_ideal(set: &RootSet) -> bool {
    ideal_violation(set).is_none()
}

fn ideal_violation(set: &RootSet) -> Option<String> {
    let n = set.n();
    if let Some(r) = set.iter().find(|r| !r.is_negative()) {
        return Some(format!("{r} is not a negative root"));
    }
    for alpha in set.iter() {
        for beta in RootSet::negative_roots(n).iter() {
            if let Some(sum) = alpha.checked_add(beta) {
                if sum.is_negative() && !set.contains(sum) {
                    return Some(format!("{alpha} + {beta} = {sum} is missing"));
                }
            }
        }
    }
    None
}

/// Inverts [`ideal_of`]: `h(j) = min{i : (i, j) ∈ I} - 1`, or `n` when column
/// `j` of the ideal is empty.
pub fn hessenberg_of_ideal(ideal: &RootSet) -> Result<HessenbergFunction> {
    if let Some(why) = ideal_violation(ideal) {
        return Err(Error::NotAnIdeal(why));
    }
    let n = ideal.n();
    let values = (1..=n)
        .map(|j| {
            ideal
                .iter()
                .filter(|r| r.j == j)
                .map(|r| r.i - 1)
                .min()
                .unwrap_or(n)
        })
        .collect();
    let h = HessenbergFunction::new(values)?;
    if ideal_of(&h) != *ideal {
        return Err(Error::NotAnIdeal(format!("{ideal} is not of the form I_h")));
    }
    Ok(h)
}

/// `index(h)`: the largest `i` with `h(i) < n`, or 0 if there is none.
pub fn index(h: &HessenbergFunction) -> usize {
    (1..=h.n()).filter(|&i| h.h(i) < h.n()).max().unwrap_or(0)
}

/// Abelian test by definition: no two members of `I_h` sum to a negative root.
pub fn is_abelian_pairwise(h: &HessenbergFunction) -> bool {
    let ideal = ideal_of(h);
    let abelian = ideal.iter().all(|a| {
        ideal
            .iter()
            .all(|b| a.checked_add(b).is_none_or(|s| !s.is_negative()))
    });
    abelian
}

/// Abelian test by the index criterion `h(1) >= index(h)`.
pub fn is_abelian_index(h: &HessenbergFunction) -> bool {
    h.h(1) >= index(h)
}

/// Whether `I_h` is abelian. Both characterizations are evaluated and must agree.
pub fn is_abelian(h: &HessenbergFunction) -> bool {
    let by_index = is_abelian_index(h);
    debug_assert_eq!(
        by_index,
        is_abelian_pairwise(h),
        "abelian characterizations disagree for {h}"
    );
    by_index
}

/// Whether no negative simple root lies in `I_h`, i.e. `h(i) >= i + 1` for `i < n`.
pub fn is_strictly_negative(h: &HessenbergFunction) -> bool {
    let ideal = ideal_of(h);
    let by_roots = (1..h.n()).all(|i| !ideal.contains(Root::new(i + 1, i)));
    debug_assert_eq!(by_roots, (1..h.n()).all(|i| h.h(i) > i));
    by_roots
}

/// The lower central series of an ideal together with its height.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealHeightReport {
    /// Number of nonempty terms of the series.
    pub height: usize,
    /// Nonempty terms `I_1 = I, I_2, …`.
    pub series: Vec<RootSet>,
    /// A chain subset of maximal size, listed as roots `t_{q2}-t_{q1}, t_{q3}-t_{q2}, …`.
    pub witness_chain: Option<Vec<Root>>,
}

/// Computes `I_1 = I`, `I_k = {α + γ ∈ Φ^- : α ∈ I, γ ∈ I_{k-1}}` until empty.
///
/// The height is cross-checked against [`height_via_chains`].
pub fn lower_central_series(ideal: &RootSet) -> Result<IdealHeightReport> {
    if let Some(why) = ideal_violation(ideal) {
        return Err(Error::NotAnIdeal(why));
    }
    let mut series = Vec::new();
    let mut current = ideal.clone();
    while !current.is_empty() {
        let mut next = RootSet::empty(ideal.n());
        for a in ideal.iter() {
            for g in current.iter() {
                if let Some(s) = a.checked_add(g) {
                    if s.is_negative() {
                        next.insert(s);
                    }
                }
            }
        }
        series.push(current);
        current = next;
    }
    let (chain_height, chain) = longest_chain(ideal);
    debug_assert_eq!(
        series.len(),
        chain_height,
        "series and chain heights disagree"
    );
    Ok(IdealHeightReport {
        height: series.len(),
        series,
        witness_chain: (chain_height > 0).then_some(chain),
    })
}

/// Height as the maximum size of a chain subset
/// `{t_{q2}-t_{q1}, t_{q3}-t_{q2}, …}` with `q1 < q2 < …` contained in `I`.
pub fn height_via_chains(ideal: &RootSet) -> usize {
    longest_chain(ideal).0
}

/// Longest path in the DAG on `[n]` whose edges are `q -> q'` for `(q', q) ∈ I`.
fn longest_chain(ideal: &RootSet) -> (usize, Vec<Root>) {
    let n = ideal.n();
    // best[q] = longest chain starting at q, next[q] = successor on that chain.
    let mut best = vec![0usize; n + 2];
    let mut next = vec![0usize; n + 2];
    for q in (1..=n).rev() {
        for r in ideal.iter().filter(|r| r.j == q) {
            if best[r.i] + 1 > best[q] {
                best[q] = best[r.i] + 1;
                next[q] = r.i;
            }
        }
    }
    let Some(start) = (1..=n).max_by_key(|&q| (best[q], std::cmp::Reverse(q))) else {
        return (0, Vec::new());
    };
    let mut chain = Vec::new();
    let mut q = start;
    while best[q] > 0 {
        chain.push(Root::new(next[q], q));
        q = next[q];
    }
    (best[start], chain)
}

/// All Hessenberg functions on `[n]` in lexicographic order of their values.
pub fn enumerate_hessenberg_functions(n: usize) -> impl Iterator<Item = HessenbergFunction> {
    assert!(n >= 1, "rank must be positive");
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(n: usize, cur: &mut Vec<usize>, out: &mut Vec<HessenbergFunction>) {
        let i = cur.len() + 1;
        if i > n {
            out.push(HessenbergFunction {
                values: cur.clone(),
            });
            return;
        }
        let lo = cur.last().copied().unwrap_or(1).max(i);
        for v in lo..=n {
            cur.push(v);
            rec(n, cur, out);
            cur.pop();
        }
    }
    rec(n, &mut cur, &mut out);
    out.into_iter()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(v: &[usize]) -> HessenbergFunction {
        HessenbergFunction::new(v.to_vec()).unwrap()
    }

    #[test]
    fn validation_errors() {
        assert!(matches!(
            HessenbergFunction::new(vec![2, 1]),
            Err(Error::BelowDiagonal { index: 2, value: 1 })
        ));
        assert!(matches!(
            HessenbergFunction::new(vec![3, 2, 3]),
            Err(Error::NotNondecreasing { .. })
        ));
        assert!(matches!(
            HessenbergFunction::new(vec![1, 1]),
            Err(Error::BelowDiagonal { index: 2, value: 1 })
        ));
        assert!(matches!(
            HessenbergFunction::new(vec![3, 3]),
            Err(Error::OutOfRange { .. })
        ));
        assert_eq!(HessenbergFunction::new(vec![]), Err(Error::Empty));
        assert!(HessenbergFunction::new(vec![1, 2, 3, 4]).is_ok());
    }

    #[test]
    fn root_addition() {
        assert_eq!(
            Root::new(3, 2).checked_add(Root::new(2, 1)),
            Some(Root::new(3, 1))
        );
        assert_eq!(
            Root::new(2, 1).checked_add(Root::new(3, 2)),
            Some(Root::new(3, 1))
        );
        assert_eq!(Root::new(3, 1).checked_add(Root::new(4, 2)), None);
        assert_eq!(Root::new(2, 1).checked_add(Root::new(1, 2)), None);
    }

    #[test]
    fn ideal_examples() {
        let ideal = ideal_of(&h(&[2, 3, 4, 4]));
        assert_eq!(ideal.pairs(), vec![(3, 1), (4, 1), (4, 2)]);
        assert!(ideal_of(&HessenbergFunction::full(5)).is_empty());
    }

    #[test]
    fn chain_witness() {
        let report = lower_central_series(&ideal_of(&h(&[2, 4, 4, 5, 5]))).unwrap();
        assert_eq!(report.height, 2);
        assert_eq!(
            report.witness_chain.unwrap(),
            vec![Root::new(3, 1), Root::new(5, 3)]
        );
    }

    #[test]
    fn lexicographic_enumeration() {
        let all: Vec<_> = enumerate_hessenberg_functions(3)
            .map(|h| h.values().to_vec())
            .collect();
        assert_eq!(
            all,
            vec![
                vec![1, 2, 3],
                vec![1, 3, 3],
                vec![2, 2, 3],
                vec![2, 3, 3],
                vec![3, 3, 3]
            ]
        );
    }
}
