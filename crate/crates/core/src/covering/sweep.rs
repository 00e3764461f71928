use std::sync::atomic::{AtomicU32, Ordering};

use rayon::prelude::*;

const CHUNK: u64 = 1 << 14;

/// Maximises `eval` over `0..size` and returns `(max, least index attaining it)`.
///
/// `eval(i, floor)` must return the exact value when it is at least `floor`
/// and may return `None` as soon as it knows the value is below `floor`.
pub(crate) fn max_min_sweep<F>(size: u64, eval: F) -> (u32, u64)
where
    F: Fn(u64, u32) -> Option<u32> + Sync,
{
    let global = AtomicU32::new(0);
    let chunks = size.div_ceil(CHUNK);
    (0..chunks)
        .into_par_iter()
        .map(|ci| {
            let end = ((ci + 1) * CHUNK).min(size);
            let mut best: Option<(u32, u64)> = None;
            for i in ci * CHUNK..end {
                let shared = global.load(Ordering::Relaxed);
                let floor = match best {
                    Some((r, _)) => shared.max(r + 1),
                    None => shared,
                };
                if let Some(d) = eval(i, floor) {
                    if best.is_none_or(|(r, _)| d > r) {
                        best = Some((d, i));
                        global.fetch_max(d, Ordering::Relaxed);
                    }
                }
            }
            best
        })
        .reduce(
            || None,
            |a, b| match (a, b) {
                (None, x) | (x, None) => x,
                (Some(x), Some(y)) => Some(if y.0 > x.0 || (y.0 == x.0 && y.1 < x.1) { y } else { x }),
            },
        )
        .expect("sweep over a nonempty range")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_least_maximiser() {
        let values: Vec<u32> = (0..100_000u64).map(|i| ((i * 7919) % 1013) as u32).collect();
        let (m, at) = max_min_sweep(values.len() as u64, |i, floor| {
            let v = values[i as usize];
            (v >= floor).then_some(v)
        });
        let expect = *values.iter().max().unwrap();
        assert_eq!(m, expect);
        assert_eq!(at, values.iter().position(|&v| v == expect).unwrap() as u64);
    }
}
