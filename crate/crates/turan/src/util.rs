//! Small combinatorial helpers shared across modules.

use crate::error::{Error, Result};

/// C(n, k) with overflow checking.
pub fn binomial(n: usize, k: usize) -> Result<i64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc
            .checked_mul((n - i) as i128)
            .ok_or_else(|| Error::Overflow(format!("binomial({n},{k})")))?;
        acc /= (i + 1) as i128;
    }
    i64::try_from(acc).map_err(|_| Error::Overflow(format!("binomial({n},{k})")))
}

/// All k-element subsets of `pool`, preserving pool order within each subset.
pub fn combinations<T: Copy>(pool: &[T], k: usize) -> Vec<Vec<T>> {
    let mut out = Vec::new();
    if k > pool.len() {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| pool[i]).collect());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + pool.len() - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

pub fn gcd(a: usize, b: usize) -> usize {
    num_integer::gcd(a, b)
}

pub fn lcm(a: usize, b: usize) -> usize {
    num_integer::lcm(a, b)
}
