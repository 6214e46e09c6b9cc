use std::fmt;
use std::ops::Mul;

use num_complex::Complex64 as C64;
use serde::{Serialize, Serializer};

/// Small dense complex matrix used for representation matrices.
#[derive(Debug, Clone, PartialEq)]
pub struct CMat {
    n: usize,
    data: Vec<C64>,
}

impl CMat {
    pub fn zeros(n: usize) -> Self {
        CMat { n, data: vec![C64::new(0.0, 0.0); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = C64::new(1.0, 0.0);
        }
        m
    }

    pub fn scalar(v: C64) -> Self {
        CMat { n: 1, data: vec![v] }
    }

    pub fn from_real(rows: &[&[f64]]) -> Self {
        let n = rows.len();
        let data = rows.iter().flat_map(|r| r.iter().map(|&v| C64::new(v, 0.0))).collect();
        CMat { n, data }
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> C64) -> Self {
        let data = (0..n * n).map(|k| f(k / n, k % n)).collect();
        CMat { n, data }
    }

    pub fn diag(values: &[C64]) -> Self {
        let n = values.len();
        Self::from_fn(n, |i, j| if i == j { values[i] } else { C64::new(0.0, 0.0) })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn conj(&self) -> Self {
        CMat { n: self.n, data: self.data.iter().map(|v| v.conj()).collect() }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)])
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)].conj())
    }

    pub fn scale(&self, s: C64) -> Self {
        CMat { n: self.n, data: self.data.iter().map(|v| v * s).collect() }
    }

    pub fn neg(&self) -> Self {
        self.scale(C64::new(-1.0, 0.0))
    }

    pub fn trace(&self) -> C64 {
        (0..self.n).map(|i| self[(i, i)]).sum()
    }

    pub fn max_abs_diff(&self, o: &CMat) -> f64 {
        assert_eq!(self.n, o.n);
        self.data.iter().zip(&o.data).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, o: &CMat, tol: f64) -> bool {
        self.n == o.n && self.max_abs_diff(o) <= tol
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        (self * &self.adjoint()).approx_eq(&CMat::identity(self.n), tol)
    }

    /// [[a, 0], [0, b]].
    pub fn block_diag(a: &CMat, b: &CMat) -> Self {
        let (p, q) = (a.n, b.n);
        Self::from_fn(p + q, |i, j| match (i < p, j < p) {
            (true, true) => a[(i, j)],
            (false, false) => b[(i - p, j - p)],
            _ => C64::new(0.0, 0.0),
        })
    }

    /// [[0, a], [b, 0]] for square blocks of equal size.
    pub fn block_antidiag(a: &CMat, b: &CMat) -> Self {
        assert_eq!(a.n, b.n);
        let p = a.n;
        Self::from_fn(2 * p, |i, j| match (i < p, j < p) {
            (true, false) => a[(i, j - p)],
            (false, true) => b[(i - p, j)],
            _ => C64::new(0.0, 0.0),
        })
    }

    /// Block (bi, bj) of size `s`.
    pub fn block(&self, bi: usize, bj: usize, s: usize) -> CMat {
        Self::from_fn(s, |i, j| self[(bi * s + i, bj * s + j)])
    }

    /// Entries rounded to the nearest Gaussian integer when within `tol`.
    pub fn rounded(&self, tol: f64) -> Option<Vec<(i64, i64)>> {
        self.data
            .iter()
            .map(|v| {
                let (r, i) = (v.re.round(), v.im.round());
                ((v.re - r).abs() <= tol && (v.im - i).abs() <= tol).then_some((r as i64, i as i64))
            })
            .collect()
    }

    /// Inverse by Gauss-Jordan elimination with partial pivoting.
    pub fn inverse(&self) -> Option<CMat> {
        let n = self.n;
        let mut a = self.clone();
        let mut inv = CMat::identity(n);
        for col in 0..n {
            let piv = (col..n).max_by(|&i, &j| a[(i, col)].norm().total_cmp(&a[(j, col)].norm()))?;
            if a[(piv, col)].norm() < 1e-300 {
                return None;
            }
            for j in 0..n {
                a.data.swap(col * n + j, piv * n + j);
                inv.data.swap(col * n + j, piv * n + j);
            }
            let d = a[(col, col)].inv();
            for j in 0..n {
                a[(col, j)] *= d;
                inv[(col, j)] *= d;
            }
            for i in 0..n {
                if i != col {
                    let f = a[(i, col)];
                    if f != C64::new(0.0, 0.0) {
                        for j in 0..n {
                            let (x, y) = (a[(col, j)], inv[(col, j)]);
                            a[(i, j)] -= f * x;
                            inv[(i, j)] -= f * y;
                        }
                    }
                }
            }
        }
        Some(inv)
    }

    pub fn rows(&self) -> Vec<Vec<C64>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self[(i, j)]).collect()).collect()
    }
}

impl std::ops::Index<(usize, usize)> for CMat {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.n + j]
    }
}

impl Mul for &CMat {
    type Output = CMat;
    fn mul(self, o: &CMat) -> CMat {
        assert_eq!(self.n, o.n);
        let n = self.n;
        CMat::from_fn(n, |i, j| (0..n).map(|k| self[(i, k)] * o[(k, j)]).sum())
    }
}

fn fmt_entry(v: C64) -> String {
    let clean = |x: f64| if x.abs() < 5e-13 { 0.0 } else { x };
    let (re, im) = (clean(v.re), clean(v.im));
    match (re == 0.0, im == 0.0) {
        (_, true) => format!("{re}"),
        (true, false) => format!("{im}i"),
        _ => format!("{re}{:+}i", im),
    }
}

impl fmt::Display for CMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n == 1 {
            return f.write_str(&fmt_entry(self.data[0]));
        }
        let rows: Vec<String> =
            (0..self.n).map(|i| (0..self.n).map(|j| fmt_entry(self[(i, j)])).collect::<Vec<_>>().join(" ")).collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

impl Serialize for CMat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<[f64; 2]>> =
            self.rows().into_iter().map(|r| r.into_iter().map(|v| [v.re, v.im]).collect()).collect();
        rows.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products_and_blocks() {
        let a = CMat::from_real(&[&[0.0, -1.0], &[1.0, 0.0]]);
        let sq = &a * &a;
        assert!(sq.approx_eq(&CMat::identity(2).neg(), 0.0));
        assert!(a.is_unitary(1e-15));
        let b = CMat::block_antidiag(&CMat::scalar(C64::new(1.0, 0.0)), &CMat::scalar(C64::new(-1.0, 0.0)));
        assert_eq!(b.to_string(), "[0 1; -1 0]");
        assert_eq!(CMat::block_diag(&a, &a).block(1, 1, 2), a);
        let m = CMat::from_fn(3, |i, j| C64::new((i * 3 + j) as f64 % 5.0 + if i == j { 4.0 } else { 0.0 }, j as f64));
        let p = &m * &m.inverse().unwrap();
        assert!(p.approx_eq(&CMat::identity(3), 1e-12));
    }
}
