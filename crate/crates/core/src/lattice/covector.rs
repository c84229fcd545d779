use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{dot, smith_normal_form, to_big, IntegerMatrix};
use crate::error::{Error, Result};

/// Primitive integer covector `p`, together with a lattice basis of the
/// hyperplane `Π = Ker p`.
///
/// The basis is stored as columns `1..n` of a unimodular completion `W`
/// whose first column `w₀` has `p·w₀ = ±1`; coordinates in `Π` are read off
/// `W⁻¹·v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Covector {
    p: Vec<BigInt>,
    completion: IntegerMatrix,
    completion_inv: IntegerMatrix,
}

impl Covector {
    pub fn new(p: Vec<i64>) -> Result<Self> {
        let g = p.iter().fold(0i64, |g, &x| g.gcd(&x));
        if g != 1 {
            return Err(Error::NotPrimitive(p));
        }
        let p = to_big(&p);
        let completion = Self::complete(&p);
        let completion_inv = completion.unimodular_inverse().expect("completion is unimodular");
        Ok(Covector { p, completion, completion_inv })
    }

    /// `(0, …, 0, 1)`: the subtorus of the first `n − 1` circle factors.
    pub fn last_coordinate(n: usize) -> Self {
        let mut p = vec![0; n];
        p[n - 1] = 1;
        Self::new(p).expect("unit covector is primitive")
    }

    /// With a unit entry `pₖ` the basis is `eᵢ − pᵢpₖeₖ` (`i ≠ k`), so that
    /// `Π`-coordinates are just the other entries; otherwise the columns of
    /// the Smith transform `V` of the row `p` are used.
    fn complete(p: &[BigInt]) -> IntegerMatrix {
        let n = p.len();
        let mut w = IntegerMatrix::zeros(n, n);
        if let Some(k) = (0..n).rev().find(|&k| p[k].abs().is_one()) {
            w[(k, 0)] = BigInt::one();
            for (c, i) in (0..n).filter(|&i| i != k).enumerate() {
                w[(i, c + 1)] = BigInt::one();
                w[(k, c + 1)] = -(&p[i] * &p[k]);
            }
            w
        } else {
            smith_normal_form(&IntegerMatrix::from_rows(&[p.to_vec()], n)).v
        }
    }

    pub fn len(&self) -> usize {
        self.p.len()
    }

    pub fn is_empty(&self) -> bool {
        self.p.is_empty()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.p
    }

    pub fn to_i64(&self) -> Vec<i64> {
        self.p.iter().map(|x| i64::try_from(x).expect("covector entries come from i64")).collect()
    }

    pub fn pair(&self, v: &[BigInt]) -> BigInt {
        dot(&self.p, v)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.pair(v).is_zero()
    }

    /// Lattice basis of `Π`, `n − 1` vectors.
    pub fn hyperplane_basis(&self) -> Vec<Vec<BigInt>> {
        (1..self.len()).map(|j| self.completion.column(j)).collect()
    }

    /// Coordinates of `v ∈ Π` in [`Self::hyperplane_basis`].
    pub fn hyperplane_coordinates(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.len() {
            return Err(Error::LengthMismatch { expected: self.len(), got: v.len() });
        }
        if !self.contains(v) {
            return Err(Error::NotInHyperplane(v.iter().map(ToString::to_string).collect()));
        }
        let mut c = self.completion_inv.mul_vec(v);
        c.remove(0);
        Ok(c)
    }
}
