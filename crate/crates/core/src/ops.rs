//! Operation counting and the closed-form op-count predictions.
//!
//! Layers tally multiplications, additions and comparisons at the site where
//! each operation is performed. The `predicted_*` functions give the analytic
//! totals for one forward pass; measured and predicted totals must agree
//! exactly, which the test suite verifies over randomized shapes.

use crate::pattern::PatternSet;
use crate::tensor::Shape;

/// Tallies of arithmetic work done by layer forward passes.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OpCounter {
    pub mults: u64,
    pub adds: u64,
    pub comparisons: u64,
}

impl OpCounter {
    pub fn reset(&mut self) {
        *self = OpCounter::default();
    }

    pub fn merge(&mut self, other: OpCounter) {
        self.mults += other.mults;
        self.adds += other.adds;
        self.comparisons += other.comparisons;
    }

    pub fn total(&self) -> u64 {
        self.mults + self.adds + self.comparisons
    }
}

impl std::fmt::Display for OpCounter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "mults={} adds={} comparisons={}",
            self.mults, self.adds, self.comparisons
        )
    }
}

/// Expected ops for one fern forward pass over `input`:
/// `N*H*W*z*sum_k|BD_k|` comparisons and `N*H*W*z*b*L` multiplications and
/// additions. Bias is folded into the accumulator initialisation and
/// performs no extra additions.
pub fn predicted_fern_ops(input: Shape, out_depth: usize, patterns: &PatternSet) -> OpCounter {
    let positions = (input.n * input.h * input.w) as u64;
    let z = input.c as u64;
    let muladds = positions * z * patterns.branches() as u64 * out_depth as u64;
    OpCounter {
        mults: muladds,
        adds: muladds,
        comparisons: positions * z * patterns.comparisons_per_window() as u64,
    }
}

/// Expected ops for one direct-convolution forward pass over `input`:
/// `N*H*W*z*L*c_y*c_x` multiplications and additions. Padded taps multiply
/// an explicit zero, so border positions do full-window work.
pub fn predicted_conv_ops(input: Shape, out_depth: usize, ky: usize, kx: usize) -> OpCounter {
    let positions = (input.n * input.h * input.w) as u64;
    let muladds = positions * input.c as u64 * out_depth as u64 * (ky * kx) as u64;
    OpCounter {
        mults: muladds,
        adds: muladds,
        comparisons: 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fern_ops_lenet_first_layer() {
        // 28x28x1 input, TI2, 6 output layers.
        let set = PatternSet::builtin("TI2").unwrap();
        let ops = predicted_fern_ops(Shape::new(1, 1, 28, 28), 6, &set);
        assert_eq!(ops.comparisons, 6272);
        assert_eq!(ops.mults, 4704);
        assert_eq!(ops.adds, 4704);
    }

    #[test]
    fn conv_ops_lenet_first_layer() {
        let ops = predicted_conv_ops(Shape::new(1, 1, 28, 28), 6, 5, 5);
        assert_eq!(ops.mults, 117_600);
        assert_eq!(ops.adds, 117_600);
    }

    #[test]
    fn empty_input_counts_zero() {
        let set = PatternSet::builtin("TI1").unwrap();
        let ops = predicted_fern_ops(Shape::new(0, 3, 5, 5), 4, &set);
        assert_eq!(ops, OpCounter::default());
        let ops = predicted_conv_ops(Shape::new(0, 3, 5, 5), 4, 3, 3);
        assert_eq!(ops, OpCounter::default());
    }
}
