//! Dense max-plus vectors and matrices.
//!
//! Vectors are columns unless stated otherwise; a conjugated vector is used
//! as a row. Shapes are checked on every binary operation.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::MaxPlus;

#[derive(Clone, PartialEq, Eq)]
pub struct TropVector(Vec<MaxPlus>);

impl TropVector {
    pub fn new(entries: Vec<MaxPlus>) -> Self {
        TropVector(entries)
    }

    /// Builds a regular vector from finite reals.
    ///
    /// # Panics
    /// If any value is not finite.
    pub fn from_finite(values: &[f64]) -> Self {
        TropVector(values.iter().map(|&v| MaxPlus::finite(v)).collect())
    }

    pub fn bottom(len: usize) -> Self {
        TropVector(vec![MaxPlus::BOTTOM; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[MaxPlus] {
        &self.0
    }

    pub fn get(&self, i: usize) -> MaxPlus {
        self.0[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = MaxPlus> + '_ {
        self.0.iter().copied()
    }

    /// No entry is bottom.
    pub fn is_regular(&self) -> bool {
        self.0.iter().all(|x| x.is_finite())
    }

    /// Every entry is bottom.
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_bottom())
    }

    /// Raw values with `−∞` for bottom entries.
    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(|x| x.value()).collect()
    }

    /// Multiplicative conjugate transpose `x⁻`, read as a row vector.
    pub fn conj(&self) -> Result<TropVector> {
        if self.is_zero() {
            return Err(Error::Domain(
                "conjugate transpose of the zero vector".into(),
            ));
        }
        Ok(self.conj_unchecked())
    }

    pub(crate) fn conj_unchecked(&self) -> TropVector {
        TropVector(self.0.iter().map(|x| x.conj()).collect())
    }

    /// Row-times-column product `self ⊗ other = max_i (self_i + other_i)`.
    pub fn dot(&self, other: &TropVector) -> Result<MaxPlus> {
        self.check_len(other, "dot")?;
        Ok(self.dot_unchecked(other))
    }

    pub(crate) fn dot_unchecked(&self, other: &TropVector) -> MaxPlus {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.otimes(*b))
            .sum()
    }

    /// Componentwise `⊕`.
    pub fn oplus(&self, other: &TropVector) -> Result<TropVector> {
        self.check_len(other, "oplus")?;
        Ok(TropVector(
            self.0.iter().zip(&other.0).map(|(a, b)| a.oplus(*b)).collect(),
        ))
    }

    /// Scalar multiple `c ⊗ x`.
    pub fn scale(&self, c: MaxPlus) -> TropVector {
        TropVector(self.0.iter().map(|x| x.otimes(c)).collect())
    }

    /// Componentwise order `self ≤ other`.
    pub fn le(&self, other: &TropVector) -> Result<bool> {
        self.check_len(other, "compare")?;
        Ok(self.0.iter().zip(&other.0).all(|(a, b)| a <= b))
    }

    fn check_len(&self, other: &TropVector, op: &str) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::Dimension(format!(
                "{op}: lengths {} and {}",
                self.len(),
                other.len()
            )));
        }
        Ok(())
    }
}

impl fmt::Debug for TropVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.0).finish()
    }
}

impl FromIterator<MaxPlus> for TropVector {
    fn from_iter<I: IntoIterator<Item = MaxPlus>>(iter: I) -> Self {
        TropVector(iter.into_iter().collect())
    }
}

/// Row-major dense matrix over the (max, +) semifield.
#[derive(Clone, PartialEq, Eq)]
pub struct TropMatrix {
    rows: usize,
    cols: usize,
    data: Vec<MaxPlus>,
}

impl TropMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<MaxPlus>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(TropMatrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<MaxPlus>>) -> Result<Self> {
        let n = rows.len();
        let k = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != k) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Self::new(n, k, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor from raw values, `None` meaning bottom.
    pub fn from_options(rows: &[Vec<Option<f64>>]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| MaxPlus::from_option(v)).collect())
            .collect::<Result<Vec<Vec<_>>>>()?;
        Self::from_rows(rows)
    }

    pub fn bottom(rows: usize, cols: usize) -> Self {
        TropMatrix {
            rows,
            cols,
            data: vec![MaxPlus::BOTTOM; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::bottom(n, n);
        for i in 0..n {
            m.set(i, i, MaxPlus::ONE);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> MaxPlus {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: MaxPlus) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[MaxPlus] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_options(&self) -> Vec<Vec<Option<f64>>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.to_option()).collect())
            .collect()
    }

    /// Some column has only bottom entries.
    pub fn has_zero_column(&self) -> bool {
        (0..self.cols).any(|j| (0..self.rows).all(|i| self.get(i, j).is_bottom()))
    }

    /// Componentwise `⊕`.
    pub fn oplus(&self, other: &TropMatrix) -> Result<TropMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "add: {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(TropMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.oplus(*b))
                .collect(),
        })
    }

    /// Matrix product `self ⊗ other`.
    pub fn otimes(&self, other: &TropMatrix) -> Result<TropMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "mul: {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = TropMatrix::bottom(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_bottom() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = a.otimes(other.get(l, j));
                    let cell = &mut out.data[i * other.cols + j];
                    *cell = cell.oplus(v);
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product `self ⊗ x`.
    pub fn mul_vec(&self, x: &TropVector) -> Result<TropVector> {
        if self.cols != x.len() {
            return Err(Error::Dimension(format!(
                "mul_vec: {}x{} by vector of length {}",
                self.rows,
                self.cols,
                x.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x.entries())
                    .map(|(a, b)| a.otimes(*b))
                    .sum()
            })
            .collect())
    }

    /// Row-vector product `row ⊗ self`.
    pub fn row_times(&self, row: &TropVector) -> Result<TropVector> {
        if self.rows != row.len() {
            return Err(Error::Dimension(format!(
                "row_times: row of length {} by {}x{}",
                row.len(),
                self.rows,
                self.cols
            )));
        }
        let mut out = vec![MaxPlus::BOTTOM; self.cols];
        for (i, a) in row.iter().enumerate() {
            if a.is_bottom() {
                continue;
            }
            for (o, b) in out.iter_mut().zip(self.row(i)) {
                *o = o.oplus(a.otimes(*b));
            }
        }
        Ok(TropVector::new(out))
    }

    /// `tr A = a_11 ⊕ ⋯ ⊕ a_nn`.
    pub fn trace(&self) -> Result<MaxPlus> {
        self.require_square("trace")?;
        Ok((0..self.rows).map(|i| self.get(i, i)).sum())
    }

    /// `A^k`, with `A^0 = I`.
    pub fn power(&self, k: usize) -> Result<TropMatrix> {
        self.require_square("power")?;
        let mut out = TropMatrix::identity(self.rows);
        for _ in 0..k {
            out = out.otimes(self)?;
        }
        Ok(out)
    }

    /// `Tr(A) = tr A ⊕ tr A² ⊕ ⋯ ⊕ tr Aⁿ`.
    pub fn spectral_trace(&self) -> Result<MaxPlus> {
        Ok(self.trace_and_closure()?.0)
    }

    /// Returns `Tr(A)` and, when `Tr(A) ≤ 0`, the Kleene star
    /// `A* = I ⊕ A ⊕ ⋯ ⊕ A^{n−1}`.
    ///
    /// The star comes from an all-pairs relaxation in `O(n³)`. A positive
    /// diagonal entry during relaxation witnesses a positive cycle; the
    /// exact trace value is then taken from explicit powers.
    pub fn trace_and_closure(&self) -> Result<(MaxPlus, Option<TropMatrix>)> {
        self.require_square("closure")?;
        let n = self.rows;
        let mut d = self.data.clone();
        let mut positive = false;
        'outer: for k in 0..n {
            for i in 0..n {
                let dik = d[i * n + k];
                if dik.is_bottom() {
                    continue;
                }
                for j in 0..n {
                    let dkj = d[k * n + j];
                    if dkj.is_bottom() {
                        continue;
                    }
                    let via = dik.otimes(dkj);
                    if via > d[i * n + j] {
                        d[i * n + j] = via;
                    }
                }
                if d[i * n + i] > MaxPlus::ONE {
                    positive = true;
                    break 'outer;
                }
            }
        }
        if positive {
            return Ok((self.trace_by_powers()?, None));
        }
        let tr: MaxPlus = (0..n).map(|i| d[i * n + i]).sum();
        for i in 0..n {
            d[i * n + i] = d[i * n + i].oplus(MaxPlus::ONE);
        }
        Ok((tr, Some(TropMatrix { rows: n, cols: n, data: d })))
    }

    /// `A*` when `Tr(A) ≤ 0`, otherwise `None`.
    pub fn closure(&self) -> Result<Option<TropMatrix>> {
        Ok(self.trace_and_closure()?.1)
    }

    fn trace_by_powers(&self) -> Result<MaxPlus> {
        let mut acc = MaxPlus::BOTTOM;
        let mut pow = self.clone();
        for _ in 0..self.rows {
            acc = acc.oplus(pow.trace()?);
            pow = pow.otimes(self)?;
        }
        Ok(acc)
    }

    fn require_square(&self, op: &str) -> Result<()> {
        if !self.is_square() {
            return Err(Error::Dimension(format!(
                "{op} needs a square matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        Ok(())
    }
}

impl fmt::Debug for TropMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[MaxPlus]> = (0..self.rows).map(|i| self.row(i)).collect();
        f.debug_list().entries(rows).finish()
    }
}
