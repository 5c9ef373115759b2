//! Fixed-chunk batch parallelism.
//!
//! Work over a batch is split into chunks of [`BATCH_CHUNK`] items. With the
//! `parallel` feature the chunks run on rayon; without it they run in a plain
//! loop. Either way the chunk boundaries are identical and per-chunk partial
//! results are combined in chunk order, so floating-point results are
//! bit-identical regardless of the feature or the worker count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Batch items per work chunk.
pub const BATCH_CHUNK: usize = 8;

fn ranges(n_items: usize) -> Vec<std::ops::Range<usize>> {
    (0..n_items.div_ceil(BATCH_CHUNK))
        .map(|ci| ci * BATCH_CHUNK..((ci + 1) * BATCH_CHUNK).min(n_items))
        .collect()
}

/// Maps each batch chunk to a value; the returned Vec is in chunk order.
/// Callers that reduce over it must do so in that order.
pub fn map_chunks<R, F>(n_items: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(std::ops::Range<usize>) -> R + Sync,
{
    let ranges = ranges(n_items);
    #[cfg(feature = "parallel")]
    {
        ranges.into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        ranges.into_iter().map(f).collect()
    }
}

/// Splits `data` into per-chunk blocks of `item_len * BATCH_CHUNK` elements
/// and applies `f(chunk_item_range, block)` to each. Blocks are disjoint, so
/// writes need no synchronisation.
pub fn for_each_chunk_block<T, F>(data: &mut [T], n_items: usize, item_len: usize, f: F)
where
    T: Send,
    F: Fn(std::ops::Range<usize>, &mut [T]) + Sync,
{
    assert_eq!(data.len(), n_items * item_len);
    if data.is_empty() {
        return;
    }
    let block = item_len * BATCH_CHUNK;
    let apply = |(ci, block_data): (usize, &mut [T])| {
        let start = ci * BATCH_CHUNK;
        let end = (start + BATCH_CHUNK).min(n_items);
        f(start..end, block_data);
    };
    #[cfg(feature = "parallel")]
    {
        data.par_chunks_mut(block).enumerate().for_each(apply);
    }
    #[cfg(not(feature = "parallel"))]
    {
        data.chunks_mut(block).enumerate().for_each(apply);
    }
}

/// Sums same-length gradient buffers in chunk order.
pub fn reduce_in_order(parts: Vec<Vec<f32>>) -> Vec<f32> {
    let mut parts = parts.into_iter();
    let mut acc = parts.next().unwrap_or_default();
    for part in parts {
        debug_assert_eq!(acc.len(), part.len());
        for (a, p) in acc.iter_mut().zip(&part) {
            *a += p;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chunk_ranges_cover_everything_once() {
        for n in [0, 1, 7, 8, 9, 25, 400] {
            let rs = ranges(n);
            let mut seen = vec![false; n];
            for r in rs {
                for i in r {
                    assert!(!seen[i]);
                    seen[i] = true;
                }
            }
            assert!(seen.into_iter().all(|s| s));
        }
    }

    #[test]
    fn blocks_line_up_with_items() {
        let n_items = 11;
        let item_len = 3;
        let mut data = vec![0u32; n_items * item_len];
        for_each_chunk_block(&mut data, n_items, item_len, |items, block| {
            assert_eq!(block.len(), items.len() * item_len);
            for (j, v) in block.iter_mut().enumerate() {
                *v = (items.start * item_len + j) as u32;
            }
        });
        let expect: Vec<u32> = (0..data.len() as u32).collect();
        assert_eq!(data, expect);
    }
}
