//! Shared fixtures for the benchmarks.

use qzn_core::ZMatrix;

pub fn medical() -> (ZMatrix, ZMatrix) {
    let szm = ZMatrix::build(&[
        vec![(0.35, 0.77), (0.43, 0.38), (0.12, 0.84), (0.61, 0.83)],
        vec![(0.26, 0.33), (0.49, 0.81), (0.43, 0.72), (0.36, 0.28)],
        vec![(0.68, 0.82), (0.73, 0.89), (0.12, 0.86), (0.08, 0.61)],
    ])
    .expect("valid fixture");
    let rzm = ZMatrix::build(&[
        vec![(0.41, 0.83), (0.43, 0.87), (0.37, 0.81), (0.12, 0.82)],
        vec![(0.84, 0.95), (0.86, 0.92), (0.21, 0.87), (0.15, 0.85)],
        vec![(0.25, 0.91), (0.32, 0.96), (0.69, 0.89), (0.38, 0.92)],
        vec![(0.18, 0.81), (0.24, 0.87), (0.14, 0.84), (0.79, 0.85)],
    ])
    .expect("valid fixture");
    (szm, rzm)
}

/// Deterministic `rows × k` matrix with entries spread over the unit square.
pub fn synthetic(rows: usize, k: usize, salt: u64) -> ZMatrix {
    let mut state = salt.wrapping_mul(0x9e37_79b9_7f4a_7c15) | 1;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        (state >> 11) as f64 / (1u64 << 53) as f64
    };
    let raw: Vec<Vec<(f64, f64)>> = (0..rows)
        .map(|_| (0..k).map(|_| (next(), next())).collect())
        .collect();
    ZMatrix::build(&raw).expect("entries lie in [0, 1)")
}
