//! Linear algebra over the field with two elements, vectors packed in `u64`.

/// Rank of the span of `rows`.
pub fn rank(rows: &[u64]) -> usize {
    reduce(rows).len()
}

fn reduce(rows: &[u64]) -> Vec<u64> {
    let mut basis: Vec<u64> = Vec::new();
    for &r in rows {
        let mut v = r;
        for &b in &basis {
            v = v.min(v ^ b);
        }
        if v != 0 {
            basis.push(v);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis
}

/// Coefficients `c` with `sum_{j : c_j = 1} vectors[j] = target`, if any.
/// The vectors are assumed independent.
pub fn solve(vectors: &[u64], target: u64) -> Option<u64> {
    // pivot rows carry (vector, combination)
    let mut pivots: Vec<(u64, u64)> = Vec::new();
    for (j, &v) in vectors.iter().enumerate() {
        let mut row = (v, 1u64 << j);
        for &(p, c) in &pivots {
            if row.0 ^ p < row.0 {
                row = (row.0 ^ p, row.1 ^ c);
            }
        }
        if row.0 != 0 {
            pivots.push(row);
            pivots.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        }
    }
    let (mut v, mut c) = (target, 0u64);
    for &(p, pc) in &pivots {
        if v ^ p < v {
            v ^= p;
            c ^= pc;
        }
    }
    (v == 0).then_some(c)
}
