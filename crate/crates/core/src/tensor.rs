//! Dense rank-4 tensors in row-major (batch, depth, height, width) layout.
//!
//! All activations, error tensors and images in this crate are `Tensor`s.
//! The layout keeps a window walk along `x` at unit stride. Logical reads
//! outside the spatial extent go through [`Tensor::padded_get`], which returns
//! exactly `0.0` without touching storage.

use crate::error::{Error, Result};

/// Tensor extents: batch `n`, depth `c`, height `h`, width `w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Shape {
    pub n: usize,
    pub c: usize,
    pub h: usize,
    pub w: usize,
}

impl Shape {
    pub fn new(n: usize, c: usize, h: usize, w: usize) -> Shape {
        Shape { n, c, h, w }
    }

    /// Total element count. Panics on overflow; shapes that large are a
    /// programming error well before allocation would fail.
    pub fn len(&self) -> usize {
        self.n
            .checked_mul(self.c)
            .and_then(|p| p.checked_mul(self.h))
            .and_then(|p| p.checked_mul(self.w))
            .expect("shape element count overflows usize")
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Elements in one batch item.
    pub fn item_len(&self) -> usize {
        self.c * self.h * self.w
    }
}

impl std::fmt::Display for Shape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{},{})", self.n, self.c, self.h, self.w)
    }
}

/// Dense rank-4 array of `f32` in contiguous row-major (N, C, H, W) order.
#[derive(Clone, Debug, PartialEq)]
pub struct Tensor {
    shape: Shape,
    data: Vec<f32>,
}

impl Tensor {
    /// All-zero tensor of the given shape.
    pub fn zeros(shape: Shape) -> Tensor {
        Tensor {
            shape,
            data: vec![0.0; shape.len()],
        }
    }

    /// Wraps an existing buffer; its length must match the shape.
    pub fn from_vec(shape: Shape, data: Vec<f32>) -> Result<Tensor> {
        if data.len() != shape.len() {
            return Err(Error::config(format!(
                "tensor data length {} does not match shape {} ({} elements)",
                data.len(),
                shape,
                shape.len()
            )));
        }
        Ok(Tensor { shape, data })
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn data(&self) -> &[f32] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [f32] {
        &mut self.data
    }

    #[inline]
    fn offset(&self, n: usize, c: usize, y: usize, x: usize) -> usize {
        debug_assert!(n < self.shape.n && c < self.shape.c);
        debug_assert!(y < self.shape.h && x < self.shape.w);
        ((n * self.shape.c + c) * self.shape.h + y) * self.shape.w + x
    }

    #[inline]
    pub fn get(&self, n: usize, c: usize, y: usize, x: usize) -> f32 {
        self.data[self.offset(n, c, y, x)]
    }

    #[inline]
    pub fn set(&mut self, n: usize, c: usize, y: usize, x: usize, v: f32) {
        let i = self.offset(n, c, y, x);
        self.data[i] = v;
    }

    /// Zero-padded read: in-bounds coordinates return the stored value,
    /// spatial coordinates outside `[0,H)x[0,W)` return exactly `0.0`.
    /// `n` and `c` out of range are programming errors.
    #[inline]
    pub fn padded_get(&self, n: usize, c: usize, y: isize, x: isize) -> f32 {
        assert!(n < self.shape.n && c < self.shape.c);
        if y < 0 || x < 0 || y >= self.shape.h as isize || x >= self.shape.w as isize {
            return 0.0;
        }
        self.data[((n * self.shape.c + c) * self.shape.h + y as usize) * self.shape.w + x as usize]
    }

    /// The contiguous block of one batch item.
    #[inline]
    pub fn item(&self, n: usize) -> &[f32] {
        let len = self.shape.item_len();
        &self.data[n * len..(n + 1) * len]
    }

    /// One spatial row: the `(n, c, y, 0..W)` slice.
    #[inline]
    pub fn row(&self, n: usize, c: usize, y: usize) -> &[f32] {
        let start = self.offset(n, c, y, 0);
        &self.data[start..start + self.shape.w]
    }

    /// Reinterprets the buffer under a new shape with the same element count.
    pub fn reshape(self, shape: Shape) -> Result<Tensor> {
        Tensor::from_vec(shape, self.data)
    }

    pub fn into_vec(self) -> Vec<f32> {
        self.data
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeros_sizes() {
        assert_eq!(Tensor::zeros(Shape::new(1, 1, 2, 2)).len(), 4);
        assert_eq!(Tensor::zeros(Shape::new(0, 3, 5, 5)).len(), 0);
        assert_eq!(Tensor::zeros(Shape::new(2, 6, 14, 14)).len(), 2352);
    }

    #[test]
    fn from_vec_rejects_wrong_length() {
        assert!(Tensor::from_vec(Shape::new(1, 1, 2, 2), vec![0.0; 3]).is_err());
    }

    #[test]
    fn set_get_round_trip() {
        let shape = Shape::new(2, 3, 4, 5);
        let mut t = Tensor::zeros(shape);
        let mut v = 0.5f32;
        for n in 0..shape.n {
            for c in 0..shape.c {
                for y in 0..shape.h {
                    for x in 0..shape.w {
                        t.set(n, c, y, x, v);
                        assert_eq!(t.get(n, c, y, x), v);
                        v = v * 1.25 - 0.3;
                    }
                }
            }
        }
    }

    #[test]
    fn padded_get_matches_get_in_bounds() {
        let shape = Shape::new(1, 1, 3, 3);
        let mut t = Tensor::zeros(shape);
        for y in 0..3 {
            for x in 0..3 {
                t.set(0, 0, y, x, (y * 3 + x) as f32);
            }
        }
        assert_eq!(t.padded_get(0, 0, 1, 1), t.get(0, 0, 1, 1));
        assert_eq!(t.padded_get(0, 0, -1, 0), 0.0);
        assert_eq!(t.padded_get(0, 0, 3, 3), 0.0);
        assert_eq!(t.padded_get(0, 0, 0, -2), 0.0);
    }

    #[test]
    #[should_panic]
    fn padded_get_asserts_depth_range() {
        let t = Tensor::zeros(Shape::new(1, 1, 2, 2));
        t.padded_get(0, 1, 0, 0);
    }
}
