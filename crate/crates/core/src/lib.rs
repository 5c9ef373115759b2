//! A small CPU neural-network engine built around decision-tree (random fern)
//! layers that stand in for convolution layers.
//!
//! A fern layer evaluates a fixed set of binary comparisons between the central
//! value of a sliding window and its neighbours. The comparison bits form an
//! integer index into a learned weight table (one table per output layer, input
//! depth and branch), and the selected weight is multiplied by the central
//! input value. Indices are computed once per position and reused across all
//! output layers, which is where the op-count saving over convolutions comes
//! from.
//!
//! The crate also ships a reference direct convolution ([`conv`]), the usual
//! network plumbing (ReLU, max-pooling, fully connected layers, softmax
//! cross-entropy, Adam — [`nn`], [`adam`]), an MNIST IDX loader with balanced
//! batching ([`data`]), a deterministic training loop ([`train`]),
//! finite-difference gradient checking ([`gradcheck`]) and a single-thread
//! timing harness ([`timing`]).
//!
//! Batch-level data parallelism is provided by rayon behind the `parallel`
//! feature (enabled by default). Results are bit-identical with and without
//! the feature, and independent of worker count: work is split into fixed-size
//! batch chunks and partial results are reduced in chunk order.

pub mod adam;
pub mod checkpoint;
pub mod conv;
pub mod data;
pub mod error;
pub mod fern;
pub mod gradcheck;
pub mod model;
pub mod nn;
pub mod ops;
pub mod parallel;
pub mod pattern;
pub mod tensor;
pub mod timing;
pub mod train;

pub use error::{Error, Result};
pub use tensor::{Shape, Tensor};
