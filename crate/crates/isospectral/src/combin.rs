//! Exact integer combinatorics: Stirling numbers, ordered Bell numbers,
//! zigzag (tangent) numbers, and Eulerian numbers.
//!
//! Everything here is computed in integer arithmetic; no floating point is
//! involved anywhere, so the identities checked against these values are
//! exact.

/// `n!` as a `u128`. Panics above 33 (overflow).
pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Stirling number of the second kind `S(d, q)`: the number of ways to
/// partition `d` labeled elements into `q` unlabeled nonempty blocks.
pub fn stirling2(d: usize, q: usize) -> u128 {
    if q > d {
        return 0;
    }
    if d == 0 {
        return u128::from(q == 0);
    }
    // S(d, q) = q S(d-1, q) + S(d-1, q-1)
    let mut row = vec![0u128; d + 1];
    row[0] = 1;
    for n in 1..=d {
        for k in (1..=n).rev() {
            row[k] = k as u128 * row[k] + row[k - 1];
        }
        row[0] = 0;
    }
    row[q]
}

/// Ordered Bell number: the number of ordered partitions of `[d]`.
pub fn ordered_bell(d: usize) -> u128 {
    if d == 0 {
        return 1;
    }
    (1..=d).map(|q| factorial(q) * stirling2(d, q)).sum()
}

/// Zigzag numbers `Z_0..=Z_n` counting alternating permutations, by the
/// Seidel boustrophedon recurrence. Odd entries are the tangent numbers,
/// even entries the secant numbers.
pub fn zigzag_numbers(n: usize) -> Vec<i128> {
    let mut out = Vec::with_capacity(n + 1);
    let mut prev: Vec<i128> = vec![1];
    out.push(1);
    for m in 1..=n {
        let mut row = vec![0i128; m + 1];
        for k in 1..=m {
            row[k] = row[k - 1] + prev[m - k];
        }
        out.push(row[m]);
        prev = row;
    }
    out
}

/// Tangent number `T_d = d! [x^d] tan x` (zero for even `d`).
pub fn tangent_number(d: usize) -> i128 {
    if d.is_multiple_of(2) {
        0
    } else {
        zigzag_numbers(d)[d]
    }
}

/// `d! [x^d] tanh x`, from the tangent numbers by `tanh x = -i tan(ix)`:
/// the sign alternates over the odd coefficients.
pub fn tanh_series_times_factorial(d: usize) -> i128 {
    if d.is_multiple_of(2) {
        return 0;
    }
    let sign = if ((d - 1) / 2).is_multiple_of(2) {
        1
    } else {
        -1
    };
    sign * tangent_number(d)
}

/// Eulerian numbers `A(d, 0..=d-1)` counting permutations by descents.
pub fn eulerian_numbers(d: usize) -> Vec<i128> {
    if d == 0 {
        return vec![1];
    }
    let mut row = vec![1i128];
    for n in 2..=d {
        let mut next = vec![0i128; n];
        for (m, v) in next.iter_mut().enumerate() {
            let keep = if m < row.len() {
                (m as i128 + 1) * row[m]
            } else {
                0
            };
            let lift = if m >= 1 && m - 1 < row.len() {
                (n as i128 - m as i128) * row[m - 1]
            } else {
                0
            };
            *v = keep + lift;
        }
        row = next;
    }
    row
}

/// The Eulerian polynomial `A_d(u)` evaluated at `u = -1`.
pub fn eulerian_alternating_sum(d: usize) -> i128 {
    eulerian_numbers(d)
        .iter()
        .enumerate()
        .map(|(m, &a)| if m % 2 == 0 { a } else { -a })
        .sum()
}
