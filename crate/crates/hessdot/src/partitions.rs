//! Partitions, the `≼` total order, Kostka numbers, the matrix `N = KᵀK`, exact
//! solves against `N`, Young's rule, and `P_h`-tableaux.
//!
//! Every vector indexed by partitions of `n` uses the position of the partition
//! in [`PartitionOrder`], which lists partitions in decreasing `≼` order: fewer
//! parts first, ties broken by decreasing lexicographic order, so `(n)` comes first.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::roots::HessenbergFunction;

/// Exact integer type used for coefficient vectors.
pub type Int = i128;

/// A partition: positive, weakly decreasing parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Self { parts })
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The integer being partitioned.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The conjugate partition `λ^∨` (column lengths).
    pub fn dual(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
            .collect();
        Self { parts }
    }

    /// Dominance `self ⊴ other`.
    pub fn dominated_by(&self, other: &Partition) -> bool {
        let mut a = 0;
        let mut b = 0;
        for k in 0..self.len().max(other.len()) {
            a += self.parts.get(k).copied().unwrap_or(0);
            b += other.parts.get(k).copied().unwrap_or(0);
            if a > b {
                return false;
            }
        }
        true
    }

    /// `dim M^λ = n! / ∏ λ_i!`.
    pub fn tabloid_dimension(&self) -> Int {
        let mut value: Int = 1;
        let mut used = 0;
        for &p in &self.parts {
            for k in 1..=p {
                used += 1;
                value = value * used as Int / k as Int;
            }
        }
        value
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    /// Formats as `3,1` (the key format used in JSON output).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// All partitions of `n` sorted in decreasing `≼` order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionOrder {
    n: usize,
    list: Vec<Partition>,
    index: HashMap<Partition, usize>,
}

impl PartitionOrder {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }

    pub fn list(&self) -> &[Partition] {
        &self.list
    }

    pub fn get(&self, k: usize) -> &Partition {
        &self.list[k]
    }

    /// Position of `p` in the order, if it partitions `n`.
    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Number of leading partitions having at most `k` parts (they form a prefix).
    pub fn prefix_with_at_most(&self, k: usize) -> usize {
        self.list.iter().take_while(|p| p.len() <= k).count()
    }
}

/// Lists the partitions of `n` (first `(n)`, last `(1^n)`).
pub fn partitions_of(n: usize) -> PartitionOrder {
    let mut list = Vec::new();
    let mut cur = Vec::new();
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    rec(n, n, &mut cur, &mut list);
    // Generated in reverse lexicographic order; a stable sort by part count
    // keeps that order inside each block.
    list.sort_by_key(|p| p.len());
    let index = list
        .iter()
        .cloned()
        .enumerate()
        .map(|(k, p)| (p, k))
        .collect();
    PartitionOrder { n, list, index }
}

/// `K_{νλ}`: the number of semistandard tableaux of shape `ν` and content `λ`.
///
/// Tableaux are counted by placing the entries `1, 2, …` one value at a time as
/// horizontal strips, which is exactly the row-weak/column-strict fill.
pub fn kostka(nu: &Partition, lambda: &Partition) -> Result<u64> {
    if nu.size() != lambda.size() {
        return Err(Error::SizeMismatch {
            left: nu.size(),
            right: lambda.size(),
        });
    }
    let mut memo = HashMap::new();
    Ok(kostka_rec(&nu.parts, &lambda.parts, &mut memo))
}

/// Counts SSYT of shape `shape` with content `content` by peeling the largest
/// value off as a horizontal strip.
fn kostka_rec(
    shape: &[usize],
    content: &[usize],
    memo: &mut HashMap<(Vec<usize>, usize), u64>,
) -> u64 {
    let Some((&last, rest)) = content.split_last() else {
        return u64::from(shape.iter().all(|&p| p == 0));
    };
    let key = (shape.to_vec(), content.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    // Remove a horizontal strip of size `last` from `shape`: new row r has length
    // between max(shape[r+1], shape[r] - remaining) and shape[r].
    let mut total = 0;
    let mut inner = shape.to_vec();
    fn strips(
        shape: &[usize],
        row: usize,
        left: usize,
        inner: &mut Vec<usize>,
        rest: &[usize],
        memo: &mut HashMap<(Vec<usize>, usize), u64>,
        total: &mut u64,
    ) {
        if row == shape.len() {
            if left == 0 {
                *total += kostka_rec(inner, rest, memo);
            }
            return;
        }
        let below = shape.get(row + 1).copied().unwrap_or(0);
        let max_take = (shape[row] - below).min(left);
        for take in 0..=max_take {
            inner[row] = shape[row] - take;
            strips(shape, row + 1, left - take, inner, rest, memo, total);
        }
        inner[row] = shape[row];
    }
    strips(shape, 0, last, &mut inner, rest, memo, &mut total);
    memo.insert(key, total);
    total
}

/// A square integer matrix with partition labels on rows and columns.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntegerMatrix {
    pub labels: Vec<Partition>,
    pub entries: Vec<Vec<Int>>,
}

impl IntegerMatrix {
    pub fn get(&self, r: usize, c: usize) -> Int {
        self.entries[r][c]
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Int]) -> Vec<Int> {
        self.entries
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Transposed matrix-vector product.
    pub fn apply_transpose(&self, v: &[Int]) -> Vec<Int> {
        (0..self.dim())
            .map(|c| (0..self.dim()).map(|r| self.entries[r][c] * v[r]).sum())
            .collect()
    }

    /// Leading `k × k` block.
    pub fn truncate(&self, k: usize) -> IntegerMatrix {
        IntegerMatrix {
            labels: self.labels[..k].to_vec(),
            entries: self.entries[..k]
                .iter()
                .map(|row| row[..k].to_vec())
                .collect(),
        }
    }
}

/// The Kostka matrix `K` (rows `ν`, columns `λ`) and `N = KᵀK` for one `n`.
#[derive(Debug, Clone)]
pub struct Tabloids {
    pub order: PartitionOrder,
    pub kostka: IntegerMatrix,
    pub n_matrix: IntegerMatrix,
}

impl Tabloids {
    pub fn new(n: usize) -> Self {
        let order = partitions_of(n);
        let labels = order.list().to_vec();
        let entries: Vec<Vec<Int>> = labels
            .iter()
            .map(|nu| {
                labels
                    .iter()
                    .map(|lambda| kostka(nu, lambda).expect("same size") as Int)
                    .collect()
            })
            .collect();
        let kostka = IntegerMatrix {
            labels: labels.clone(),
            entries,
        };
        let dim = labels.len();
        let n_entries = (0..dim)
            .map(|a| {
                (0..dim)
                    .map(|b| (0..dim).map(|r| kostka.get(r, a) * kostka.get(r, b)).sum())
                    .collect()
            })
            .collect();
        let n_matrix = IntegerMatrix {
            labels,
            entries: n_entries,
        };
        Self {
            order,
            kostka,
            n_matrix,
        }
    }

    pub fn n(&self) -> usize {
        self.order.n()
    }

    /// Solves `N c = b` exactly via `Kᵀ y = b` (forward) then `K c = y` (backward).
    pub fn solve_n(&self, b: &[Int]) -> Result<Vec<Int>> {
        solve_with(&self.kostka, b)
    }

    /// Solves `π_k(N) c = π_k(b)` on the partitions with at most `k` parts.
    pub fn solve_truncated(&self, k: usize, b: &[Int]) -> Result<Vec<Int>> {
        let len = self.order.prefix_with_at_most(k);
        solve_with(&self.kostka.truncate(len), &b[..len])
    }

    /// Young's rule: `d = K c`.
    pub fn c_to_d(&self, c: &[Int]) -> Vec<Int> {
        self.kostka.apply(c)
    }

    /// Inverse of Young's rule by back substitution.
    pub fn d_to_c(&self, d: &[Int]) -> Result<Vec<Int>> {
        back_substitute(&self.kostka, d)
    }
}

/// Cached [`Tabloids`] per `n`.
pub fn tabloids(n: usize) -> Arc<Tabloids> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Tabloids>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().expect("cache lock").get(&n) {
        return t.clone();
    }
    let built = Arc::new(Tabloids::new(n));
    cache
        .lock()
        .expect("cache lock")
        .entry(n)
        .or_insert(built)
        .clone()
}

/// The Kostka matrix for `n`.
pub fn kostka_matrix(n: usize) -> IntegerMatrix {
    tabloids(n).kostka.clone()
}

/// `N = KᵀK` for `n`; `N_{λν} = dim (M^λ)^{S_ν}`.
pub fn n_matrix(n: usize) -> IntegerMatrix {
    tabloids(n).n_matrix.clone()
}

/// Solves `N c = b` for the partitions of `n`.
pub fn solve_n(n: usize, b: &[Int]) -> Result<Vec<Int>> {
    tabloids(n).solve_n(b)
}

/// `d = K c`.
pub fn young_rule_convert(n: usize, c: &[Int]) -> Vec<Int> {
    tabloids(n).c_to_d(c)
}

/// `c = K⁻¹ d`.
pub fn young_rule_invert(n: usize, d: &[Int]) -> Result<Vec<Int>> {
    tabloids(n).d_to_c(d)
}

fn solve_with(k: &IntegerMatrix, b: &[Int]) -> Result<Vec<Int>> {
    if b.len() != k.dim() {
        return Err(Error::SizeMismatch {
            left: b.len(),
            right: k.dim(),
        });
    }
    let y = forward_substitute_transpose(k, b)?;
    back_substitute(k, &y)
}

fn exact_div(num: Int, den: Int) -> Result<Int> {
    if den == 0 || num % den != 0 {
        return Err(Error::NonIntegralSolution(format!("{num} / {den}")));
    }
    Ok(num / den)
}

/// Solves `Kᵀ y = b` with `K` upper triangular.
fn forward_substitute_transpose(k: &IntegerMatrix, b: &[Int]) -> Result<Vec<Int>> {
    let dim = k.dim();
    let mut y = vec![0; dim];
    for r in 0..dim {
        let mut acc = b[r];
        for (s, &ys) in y.iter().enumerate().take(r) {
            acc = acc
                .checked_sub(
                    k.get(s, r)
                        .checked_mul(ys)
                        .ok_or(Error::Overflow("solve"))?,
                )
                .ok_or(Error::Overflow("solve"))?;
        }
        y[r] = exact_div(acc, k.get(r, r))?;
    }
    Ok(y)
}

/// Solves `K c = y` with `K` upper triangular.
fn back_substitute(k: &IntegerMatrix, y: &[Int]) -> Result<Vec<Int>> {
    let dim = k.dim();
    let mut c = vec![0; dim];
    for r in (0..dim).rev() {
        let mut acc = y[r];
        for (s, &cs) in c.iter().enumerate().skip(r + 1) {
            acc = acc
                .checked_sub(
                    k.get(r, s)
                        .checked_mul(cs)
                        .ok_or(Error::Overflow("solve"))?,
                )
                .ok_or(Error::Overflow("solve"))?;
        }
        c[r] = exact_div(acc, k.get(r, r))?;
    }
    Ok(c)
}

/// Number of `P_h`-tableaux of the given shape: fillings with each of `1..=n`
/// once such that `i` immediately right of `j` forces `i > h(j)` and `i`
/// immediately below `j` forces `j <= h(i)`.
pub fn count_ph_tableaux(h: &HessenbergFunction, shape: &Partition) -> Result<u64> {
    let n = h.n();
    if shape.size() != n {
        return Err(Error::SizeMismatch {
            left: shape.size(),
            right: n,
        });
    }
    let cells: Vec<(usize, usize)> = shape
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<usize>> = shape.parts().iter().map(|&len| vec![0; len]).collect();
    fn rec(
        h: &HessenbergFunction,
        cells: &[(usize, usize)],
        k: usize,
        used: u64,
        grid: &mut Vec<Vec<usize>>,
    ) -> u64 {
        let Some(&(r, c)) = cells.get(k) else {
            return 1;
        };
        let mut total = 0;
        for v in 1..=h.n() {
            if used >> v & 1 == 1 {
                continue;
            }
            if c > 0 && v <= h.h(grid[r][c - 1]) {
                continue;
            }
            if r > 0 && grid[r - 1][c] > h.h(v) {
                continue;
            }
            grid[r][c] = v;
            total += rec(h, cells, k + 1, used | 1 << v, grid);
        }
        grid[r][c] = 0;
        total
    }
    Ok(rec(h, &cells, 0, 0, &mut grid))
}
