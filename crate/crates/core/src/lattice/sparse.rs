use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_bigint::BigInt;

use super::{invariant_factors, IntegerMatrix};

/// Column-major sparse integer matrix with machine-word entries.
///
/// Boundary matrices only hold ±1, so `i64` storage is enough; the
/// elimination below detects overflow and falls back to dense
/// arbitrary-precision arithmetic when it happens.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    nrows: usize,
    ncols: usize,
    cols: Vec<Vec<(u32, i64)>>,
}

impl SparseMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMatrix { nrows, ncols, cols: vec![Vec::new(); ncols] }
    }

    /// Entries per column may come in any order; zeros are dropped and
    /// repeated rows summed.
    pub fn from_columns(nrows: usize, cols: Vec<Vec<(u32, i64)>>) -> Self {
        let cols = cols
            .into_iter()
            .map(|mut c| {
                c.sort_unstable_by_key(|e| e.0);
                let mut out: Vec<(u32, i64)> = Vec::with_capacity(c.len());
                for (r, x) in c {
                    assert!((r as usize) < nrows, "row {r} out of range");
                    match out.last_mut() {
                        Some(last) if last.0 == r => last.1 += x,
                        _ => out.push((r, x)),
                    }
                }
                out.retain(|e| e.1 != 0);
                out
            })
            .collect::<Vec<_>>();
        SparseMatrix { nrows, ncols: cols.len(), cols }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn column(&self, j: usize) -> &[(u32, i64)] {
        &self.cols[j]
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.cols[j]
            .binary_search_by_key(&(i as u32), |e| e.0)
            .map_or(0, |k| self.cols[j][k].1)
    }

    pub fn to_dense(&self) -> IntegerMatrix {
        let mut m = IntegerMatrix::zeros(self.nrows, self.ncols);
        for (j, c) in self.cols.iter().enumerate() {
            for &(i, x) in c {
                m[(i as usize, j)] = BigInt::from(x);
            }
        }
        m
    }

    /// Sparse product `self · rhs`. Panics if an entry leaves `i64`.
    pub fn compose(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols, rhs.nrows, "dimension mismatch in product");
        let mut acc: std::collections::BTreeMap<u32, i128> = std::collections::BTreeMap::new();
        let cols = rhs
            .cols
            .iter()
            .map(|c| {
                acc.clear();
                for &(k, y) in c {
                    for &(i, x) in &self.cols[k as usize] {
                        *acc.entry(i).or_insert(0) += x as i128 * y as i128;
                    }
                }
                acc.iter()
                    .filter(|e| *e.1 != 0)
                    .map(|(&i, &v)| (i, i64::try_from(v).expect("product entry overflows i64")))
                    .collect()
            })
            .collect();
        SparseMatrix { nrows: self.nrows, ncols: rhs.ncols, cols }
    }

    /// Nonzero Smith invariant factors, in divisibility order.
    ///
    /// Unit pivots are eliminated sparsely first (shortest column first);
    /// whatever survives is handed to the dense reduction.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.invariant_factors_with_pivots().0
    }

    /// Invariant factors together with the rows used as unit pivots by the
    /// sparse phase (empty if it fell back to the dense reduction).
    ///
    /// Each pivot row `r` is the unit entry of an integer combination of
    /// columns, which is how a chain complex learns that column `r` of the
    /// next boundary map is redundant.
    pub fn invariant_factors_with_pivots(&self) -> (Vec<BigInt>, Vec<u32>) {
        match Eliminator::new(self).run() {
            Some((pivots, rest)) => {
                let mut f = vec![BigInt::from(1); pivots.len()];
                f.extend(invariant_factors(&rest));
                (f, pivots)
            }
            None => (invariant_factors(&self.to_dense()), Vec::new()),
        }
    }

    /// Drops the listed columns.
    pub fn without_columns(&self, drop: &[u32]) -> SparseMatrix {
        let mut gone = vec![false; self.ncols];
        for &c in drop {
            gone[c as usize] = true;
        }
        let cols: Vec<_> = self.cols.iter().zip(&gone).filter(|(_, g)| !**g).map(|(c, _)| c.clone()).collect();
        SparseMatrix { nrows: self.nrows, ncols: cols.len(), cols }
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

struct Eliminator {
    lines: Vec<Vec<(u32, i64)>>,
    alive: Vec<bool>,
    /// Lines that may contain a given position; entries can be stale.
    at: Vec<Vec<u32>>,
    heap: BinaryHeap<Reverse<(u32, u32)>>,
}

impl Eliminator {
    fn new(m: &SparseMatrix) -> Self {
        let mut at = vec![Vec::new(); m.nrows];
        let mut heap = BinaryHeap::with_capacity(m.ncols);
        for (j, c) in m.cols.iter().enumerate() {
            for &(i, _) in c {
                at[i as usize].push(j as u32);
            }
            heap.push(Reverse((c.len() as u32, j as u32)));
        }
        Eliminator { lines: m.cols.clone(), alive: vec![true; m.ncols], at, heap }
    }

    /// Returns the unit pivot positions and the dense remainder, or `None`
    /// if an entry overflowed.
    fn run(mut self) -> Option<(Vec<u32>, IntegerMatrix)> {
        let mut units = Vec::new();
        let mut scratch = Vec::new();
        while let Some(Reverse((len, l))) = self.heap.pop() {
            let l = l as usize;
            if !self.alive[l] || self.lines[l].len() != len as usize {
                continue;
            }
            if len == 0 {
                self.alive[l] = false;
                continue;
            }
            let pivot = self.lines[l]
                .iter()
                .filter(|e| e.1 == 1 || e.1 == -1)
                .min_by_key(|e| self.at[e.0 as usize].len())
                .copied();
            // Lines without a unit wait until an update re-queues them.
            let Some((pos, pv)) = pivot else { continue };
            let pivot_line = std::mem::take(&mut self.lines[l]);
            self.alive[l] = false;
            let others = std::mem::take(&mut self.at[pos as usize]);
            for &o in &others {
                let o = o as usize;
                if !self.alive[o] {
                    continue;
                }
                let Ok(k) = self.lines[o].binary_search_by_key(&pos, |e| e.0) else { continue };
                let factor = self.lines[o][k].1 * pv;
                scratch.clear();
                if !axpy(&self.lines[o], &pivot_line, factor, &mut scratch, &mut self.at, o as u32) {
                    return None;
                }
                std::mem::swap(&mut self.lines[o], &mut scratch);
                self.heap.push(Reverse((self.lines[o].len() as u32, o as u32)));
            }
            units.push(pos);
        }
        // Remaining live lines have no unit entries.
        let live: Vec<&Vec<(u32, i64)>> = self
            .lines
            .iter()
            .zip(&self.alive)
            .filter(|(c, a)| **a && !c.is_empty())
            .map(|(c, _)| c)
            .collect();
        let mut rows: Vec<u32> = live.iter().flat_map(|c| c.iter().map(|e| e.0)).collect();
        rows.sort_unstable();
        rows.dedup();
        let mut rest = IntegerMatrix::zeros(rows.len(), live.len());
        for (j, c) in live.iter().enumerate() {
            for &(i, x) in c.iter() {
                let r = rows.binary_search(&i).expect("row collected above");
                rest[(r, j)] = BigInt::from(x);
            }
        }
        Some((units, rest))
    }
}

/// `out = target − factor · pivot`, with the pivot position cancelling.
/// Records `line` under positions it newly occupies. False on overflow.
fn axpy(
    target: &[(u32, i64)],
    pivot: &[(u32, i64)],
    factor: i64,
    out: &mut Vec<(u32, i64)>,
    at: &mut [Vec<u32>],
    line: u32,
) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < target.len() || j < pivot.len() {
        let ti = target.get(i).map_or(u32::MAX, |e| e.0);
        let pj = pivot.get(j).map_or(u32::MAX, |e| e.0);
        if ti < pj {
            out.push(target[i]);
            i += 1;
        } else {
            let Some(scaled) = pivot[j].1.checked_mul(factor) else { return false };
            if ti == pj {
                let Some(v) = target[i].1.checked_sub(scaled) else { return false };
                if v != 0 {
                    out.push((ti, v));
                }
                i += 1;
            } else {
                let Some(v) = 0i64.checked_sub(scaled) else { return false };
                out.push((pj, v));
                at[pj as usize].push(line);
            }
            j += 1;
        }
    }
    true
}
