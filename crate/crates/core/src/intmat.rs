//! Dense arbitrary-precision integer matrices and Smith normal form.
//!
//! Everything downstream (finitely generated abelian groups, induction
//! certificates, the Artin solver) reduces to exact linear algebra over the
//! integers, so entries are `BigInt` throughout and no operation can
//! silently overflow.

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl fmt::Debug for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMat {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                write!(f, "{} ", self.get(r, c))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut m = IntMat::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, f(r, c));
            }
        }
        m
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        IntMat::from_fn(r, c, |i, j| BigInt::from(rows[i][j]))
    }

    pub fn column(entries: Vec<BigInt>) -> Self {
        let rows = entries.len();
        IntMat {
            rows,
            cols: 1,
            data: entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn col_vec(&self, c: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> IntMat {
        IntMat::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let mut out = IntMat::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let add = a * other.get(k, c);
                    let cur = out.get(r, c) + add;
                    out.set(r, c, cur);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c) * &v[c]).sum())
            .collect()
    }

    pub fn add(&self, other: &IntMat) -> IntMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        IntMat::from_fn(self.rows, self.cols, |r, c| self.get(r, c) + other.get(r, c))
    }

    pub fn sub(&self, other: &IntMat) -> IntMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        IntMat::from_fn(self.rows, self.cols, |r, c| self.get(r, c) - other.get(r, c))
    }

    pub fn scale(&self, s: &BigInt) -> IntMat {
        IntMat::from_fn(self.rows, self.cols, |r, c| self.get(r, c) * s)
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.rows, other.rows);
        IntMat::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        })
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.cols);
        IntMat::from_fn(self.rows + other.rows, self.cols, |r, c| {
            if r < self.rows {
                self.get(r, c).clone()
            } else {
                other.get(r - self.rows, c).clone()
            }
        })
    }

    pub fn kronecker(&self, other: &IntMat) -> IntMat {
        IntMat::from_fn(
            self.rows * other.rows,
            self.cols * other.cols,
            |r, c| {
                let (r1, r2) = (r / other.rows, r % other.rows);
                let (c1, c2) = (c / other.cols, c % other.cols);
                self.get(r1, c1) * other.get(r2, c2)
            },
        )
    }

    /// Fraction-free determinant (Bareiss).
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                let swap = (k + 1..n).find(|&r| !m.get(r, k).is_zero());
                match swap {
                    Some(r) => {
                        for c in 0..n {
                            let a = m.get(k, c).clone();
                            let b = m.get(r, c).clone();
                            m.set(k, c, b);
                            m.set(r, c, a);
                        }
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let val = (m.get(i, j) * m.get(k, k) - m.get(i, k) * m.get(k, j)) / &prev;
                    m.set(i, j, val);
                }
            }
            prev = m.get(k, k).clone();
        }
        sign * m.get(n - 1, n - 1).clone()
    }

    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols && self.det().abs().is_one()
    }

    pub fn snf(&self) -> Snf {
        Snf::compute(self)
    }
}

/// Smith normal form `U * A * V = D` with `U`, `V` unimodular and the
/// diagonal of `D` a divisibility chain `d_1 | d_2 | ...` of non-negative
/// integers. Inverses of the transforms are accumulated alongside.
///
/// Pivot policy: smallest-magnitude nonzero entry, ties broken row-major,
/// which makes the whole decomposition deterministic.
#[derive(Clone, Debug)]
pub struct Snf {
    pub u: IntMat,
    pub u_inv: IntMat,
    pub d: IntMat,
    pub v: IntMat,
    pub v_inv: IntMat,
}

impl Snf {
    fn compute(a: &IntMat) -> Snf {
        let (rows, cols) = (a.rows, a.cols);
        let mut d = a.clone();
        let mut u = IntMat::identity(rows);
        let mut u_inv = IntMat::identity(rows);
        let mut v = IntMat::identity(cols);
        let mut v_inv = IntMat::identity(cols);

        let swap_rows = |d: &mut IntMat, u: &mut IntMat, u_inv: &mut IntMat, i: usize, k: usize| {
            if i == k {
                return;
            }
            for c in 0..d.cols {
                d.data.swap(i * d.cols + c, k * d.cols + c);
            }
            for c in 0..u.cols {
                u.data.swap(i * u.cols + c, k * u.cols + c);
            }
            for r in 0..u_inv.rows {
                u_inv.data.swap(r * u_inv.cols + i, r * u_inv.cols + k);
            }
        };
        let swap_cols = |d: &mut IntMat, v: &mut IntMat, v_inv: &mut IntMat, i: usize, k: usize| {
            if i == k {
                return;
            }
            for r in 0..d.rows {
                d.data.swap(r * d.cols + i, r * d.cols + k);
            }
            for r in 0..v.rows {
                v.data.swap(r * v.cols + i, r * v.cols + k);
            }
            for c in 0..v_inv.cols {
                v_inv.data.swap(i * v_inv.cols + c, k * v_inv.cols + c);
            }
        };
        // row_i -= q * row_k  (E = I - q e_{ik}; E^{-1} = I + q e_{ik})
        let row_sub =
            |d: &mut IntMat, u: &mut IntMat, u_inv: &mut IntMat, i: usize, k: usize, q: &BigInt| {
                if q.is_zero() {
                    return;
                }
                for c in 0..d.cols {
                    let val = d.get(i, c) - q * d.get(k, c);
                    d.set(i, c, val);
                }
                for c in 0..u.cols {
                    let val = u.get(i, c) - q * u.get(k, c);
                    u.set(i, c, val);
                }
                for r in 0..u_inv.rows {
                    let val = u_inv.get(r, k) + q * u_inv.get(r, i);
                    u_inv.set(r, k, val);
                }
            };
        // col_i -= q * col_k
        let col_sub =
            |d: &mut IntMat, v: &mut IntMat, v_inv: &mut IntMat, i: usize, k: usize, q: &BigInt| {
                if q.is_zero() {
                    return;
                }
                for r in 0..d.rows {
                    let val = d.get(r, i) - q * d.get(r, k);
                    d.set(r, i, val);
                }
                for r in 0..v.rows {
                    let val = v.get(r, i) - q * v.get(r, k);
                    v.set(r, i, val);
                }
                for c in 0..v_inv.cols {
                    let val = v_inv.get(k, c) + q * v_inv.get(i, c);
                    v_inv.set(k, c, val);
                }
            };
        let negate_row = |d: &mut IntMat, u: &mut IntMat, u_inv: &mut IntMat, i: usize| {
            for c in 0..d.cols {
                let val = -d.get(i, c).clone();
                d.set(i, c, val);
            }
            for c in 0..u.cols {
                let val = -u.get(i, c).clone();
                u.set(i, c, val);
            }
            for r in 0..u_inv.rows {
                let val = -u_inv.get(r, i).clone();
                u_inv.set(r, i, val);
            }
        };

        let limit = rows.min(cols);
        for t in 0..limit {
            'pivot: loop {
                // smallest-magnitude nonzero entry of the trailing block,
                // ties row-major
                let mut best: Option<(usize, usize)> = None;
                for r in t..rows {
                    for c in t..cols {
                        if d.get(r, c).is_zero() {
                            continue;
                        }
                        best = match best {
                            None => Some((r, c)),
                            Some((br, bc)) => {
                                if d.get(r, c).abs() < d.get(br, bc).abs() {
                                    Some((r, c))
                                } else {
                                    Some((br, bc))
                                }
                            }
                        };
                    }
                }
                let Some((pr, pc)) = best else {
                    break 'pivot;
                };
                swap_rows(&mut d, &mut u, &mut u_inv, t, pr);
                swap_cols(&mut d, &mut v, &mut v_inv, t, pc);
                if d.get(t, t).is_negative() {
                    negate_row(&mut d, &mut u, &mut u_inv, t);
                }
                let mut dirty = false;
                for r in t + 1..rows {
                    let q = d.get(r, t).div_floor(d.get(t, t));
                    row_sub(&mut d, &mut u, &mut u_inv, r, t, &q);
                    if !d.get(r, t).is_zero() {
                        dirty = true;
                    }
                }
                for c in t + 1..cols {
                    let q = d.get(t, c).div_floor(d.get(t, t));
                    col_sub(&mut d, &mut v, &mut v_inv, c, t, &q);
                    if !d.get(t, c).is_zero() {
                        dirty = true;
                    }
                }
                if dirty {
                    continue 'pivot;
                }
                // enforce the divisibility chain: pull a non-divisible entry
                // into row t and keep reducing
                let pivot = d.get(t, t).clone();
                for r in t + 1..rows {
                    for c in t + 1..cols {
                        if !d.get(r, c).mod_floor(&pivot).is_zero() {
                            let one = -BigInt::one();
                            row_sub(&mut d, &mut u, &mut u_inv, t, r, &one);
                            continue 'pivot;
                        }
                    }
                }
                break 'pivot;
            }
        }
        Snf {
            u,
            u_inv,
            d,
            v,
            v_inv,
        }
    }

    /// Diagonal entries (length `min(rows, cols)`).
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows.min(self.d.cols))
            .map(|i| self.d.get(i, i).clone())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }

    /// Some integral solution of `A x = b`, or `None` if there is none.
    pub fn solve(&self, b: &[BigInt]) -> Option<Vec<BigInt>> {
        let s = self.solve_scaled(b, &BigInt::one())?;
        Some(s)
    }

    fn solve_scaled(&self, b: &[BigInt], scale: &BigInt) -> Option<Vec<BigInt>> {
        assert_eq!(b.len(), self.d.rows, "rhs length");
        let c = self.u.mul_vec(b);
        let mut y = vec![BigInt::zero(); self.d.cols];
        let limit = self.d.rows.min(self.d.cols);
        for i in 0..self.d.rows {
            let ci = &c[i] * scale;
            if i < limit && !self.d.get(i, i).is_zero() {
                let (q, r) = ci.div_rem(self.d.get(i, i));
                if !r.is_zero() {
                    return None;
                }
                y[i] = q;
            } else if !ci.is_zero() {
                return None;
            }
        }
        Some(self.v.mul_vec(&y))
    }

    /// The minimal positive integer `s` such that `A x = s b` has an
    /// integral solution, together with a witness `x`; `None` if `b` is not
    /// even in the rational column span.
    pub fn minimal_denominator(&self, b: &[BigInt]) -> Option<(BigInt, Vec<BigInt>)> {
        assert_eq!(b.len(), self.d.rows, "rhs length");
        let c = self.u.mul_vec(b);
        let limit = self.d.rows.min(self.d.cols);
        let mut s = BigInt::one();
        for i in 0..self.d.rows {
            if i < limit && !self.d.get(i, i).is_zero() {
                let di = self.d.get(i, i);
                let g = di.gcd(&c[i]);
                s = s.lcm(&(di / g));
            } else if !c[i].is_zero() {
                return None;
            }
        }
        let x = self
            .solve_scaled(b, &s)
            .expect("scaled system solvable by construction");
        Some((s, x))
    }

    /// Columns form a basis of the kernel lattice `{x : A x = 0}`.
    pub fn kernel_basis(&self) -> IntMat {
        let limit = self.d.rows.min(self.d.cols);
        let free: Vec<usize> = (0..self.d.cols)
            .filter(|&j| j >= limit || self.d.get(j, j).is_zero())
            .collect();
        IntMat::from_fn(self.d.cols, free.len(), |r, c| {
            self.v.get(r, free[c]).clone()
        })
    }
}

/// Convenience: solve `A x = b` from scratch.
pub fn solve_integer_linear(a: &IntMat, b: &[BigInt]) -> Option<Vec<BigInt>> {
    a.snf().solve(b)
}
