use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::IntegerMatrix;

/// `U·A·V = D` with `U`, `V` unimodular and `D` diagonal, `d₁ | d₂ | …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfDecomposition {
    pub u: IntegerMatrix,
    pub d: IntegerMatrix,
    pub v: IntegerMatrix,
}

impl SnfDecomposition {
    /// Nonzero diagonal entries of `D`.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.d.diagonal().into_iter().filter(|x| !x.is_zero()).collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

pub fn smith_normal_form(a: &IntegerMatrix) -> SnfDecomposition {
    let mut r = Reducer {
        d: a.clone(),
        u: Some(IntegerMatrix::identity(a.rows())),
        v: Some(IntegerMatrix::identity(a.cols())),
    };
    r.run();
    SnfDecomposition { u: r.u.unwrap(), d: r.d, v: r.v.unwrap() }
}

/// Nonzero invariant factors of `a` without tracking the transforms.
pub fn invariant_factors(a: &IntegerMatrix) -> Vec<BigInt> {
    let mut r = Reducer { d: a.clone(), u: None, v: None };
    r.run();
    r.d.diagonal().into_iter().filter(|x| !x.is_zero()).collect()
}

struct Reducer {
    d: IntegerMatrix,
    u: Option<IntegerMatrix>,
    v: Option<IntegerMatrix>,
}

impl Reducer {
    fn run(&mut self) {
        let (m, n) = (self.d.rows(), self.d.cols());
        for t in 0..m.min(n) {
            // Smallest nonzero |entry| in the trailing block, first in row-major order.
            let Some((i, j)) = self.min_entry(t..m, t..n) else { break };
            self.swap_rows(t, i);
            self.swap_cols(t, j);
            loop {
                let mut residue = false;
                for i in t + 1..m {
                    if !self.d[(i, t)].is_zero() {
                        let q = &self.d[(i, t)] / &self.d[(t, t)];
                        self.add_row(i, t, &-q);
                        residue |= !self.d[(i, t)].is_zero();
                    }
                }
                for j in t + 1..n {
                    if !self.d[(t, j)].is_zero() {
                        let q = &self.d[(t, j)] / &self.d[(t, t)];
                        self.add_col(j, t, &-q);
                        residue |= !self.d[(t, j)].is_zero();
                    }
                }
                if residue {
                    // A remainder is now smaller than the pivot; move it in.
                    let col_min = self.min_entry(t..m, t..t + 1);
                    let row_min = self.min_entry(t..t + 1, t..n);
                    let pick = match (col_min, row_min) {
                        (Some(a), Some(b)) => {
                            if self.d[a].abs() <= self.d[b].abs() {
                                a
                            } else {
                                b
                            }
                        }
                        (Some(a), None) | (None, Some(a)) => a,
                        (None, None) => unreachable!("pivot is nonzero"),
                    };
                    self.swap_rows(t, pick.0);
                    self.swap_cols(t, pick.1);
                    continue;
                }
                // Enforce divisibility: fold a non-multiple back into row t.
                let bad = (t + 1..m)
                    .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !(&self.d[(i, j)] % &self.d[(t, t)]).is_zero());
                match bad {
                    Some((i, _)) => self.add_row(t, i, &BigInt::from(1)),
                    None => break,
                }
            }
            if self.d[(t, t)].is_negative() {
                self.negate_row(t);
            }
        }
    }

    fn min_entry(
        &self,
        rows: std::ops::Range<usize>,
        cols: std::ops::Range<usize>,
    ) -> Option<(usize, usize)> {
        let mut best: Option<((usize, usize), BigInt)> = None;
        for i in rows {
            for j in cols.clone() {
                let x = &self.d[(i, j)];
                if x.is_zero() {
                    continue;
                }
                let a = x.abs();
                if best.as_ref().map_or(true, |(_, b)| a < *b) {
                    best = Some(((i, j), a));
                }
            }
        }
        best.map(|(p, _)| p)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        swap_rows(&mut self.d, a, b);
        if let Some(u) = self.u.as_mut() {
            swap_rows(u, a, b);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        swap_cols(&mut self.d, a, b);
        if let Some(v) = self.v.as_mut() {
            swap_cols(v, a, b);
        }
    }

    /// row[dst] += c · row[src]
    fn add_row(&mut self, dst: usize, src: usize, c: &BigInt) {
        add_row(&mut self.d, dst, src, c);
        if let Some(u) = self.u.as_mut() {
            add_row(u, dst, src, c);
        }
    }

    /// col[dst] += c · col[src]
    fn add_col(&mut self, dst: usize, src: usize, c: &BigInt) {
        add_col(&mut self.d, dst, src, c);
        if let Some(v) = self.v.as_mut() {
            add_col(v, dst, src, c);
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.d.cols() {
            let x = std::mem::take(&mut self.d[(r, j)]);
            self.d[(r, j)] = -x;
        }
        if let Some(u) = self.u.as_mut() {
            for j in 0..u.cols() {
                let x = std::mem::take(&mut u[(r, j)]);
                u[(r, j)] = -x;
            }
        }
    }
}

fn swap_rows(m: &mut IntegerMatrix, a: usize, b: usize) {
    for j in 0..m.cols() {
        let x = std::mem::take(&mut m[(a, j)]);
        let y = std::mem::replace(&mut m[(b, j)], x);
        m[(a, j)] = y;
    }
}

fn swap_cols(m: &mut IntegerMatrix, a: usize, b: usize) {
    for i in 0..m.rows() {
        let x = std::mem::take(&mut m[(i, a)]);
        let y = std::mem::replace(&mut m[(i, b)], x);
        m[(i, a)] = y;
    }
}

fn add_row(m: &mut IntegerMatrix, dst: usize, src: usize, c: &BigInt) {
    if c.is_zero() {
        return;
    }
    for j in 0..m.cols() {
        if !m[(src, j)].is_zero() {
            let delta = &m[(src, j)] * c;
            m[(dst, j)] += delta;
        }
    }
}

fn add_col(m: &mut IntegerMatrix, dst: usize, src: usize, c: &BigInt) {
    if c.is_zero() {
        return;
    }
    for i in 0..m.rows() {
        if !m[(i, src)].is_zero() {
            let delta = &m[(i, src)] * c;
            m[(i, dst)] += delta;
        }
    }
}
