//! Positional multi-indices for tensor-power bases.
//!
//! A basis tensor `e_{a_0} (x) ... (x) e_{a_k}` of `A^{(x) k+1}` has index
//! `sum_i a_i d^(k-i)`, so bases are ordered lexicographically with the first
//! factor most significant.

use crate::error::{Error, Result};

/// `d^k`, or an error naming `context` when it overflows or exceeds `cap`.
pub fn checked_power(d: usize, k: usize, cap: usize, context: &'static str) -> Result<usize> {
    let mut acc: usize = 1;
    for _ in 0..k {
        acc = match acc.checked_mul(d) {
            Some(v) if v <= cap => v,
            _ => {
                return Err(Error::DegreeCap {
                    context,
                    degree: k,
                    cap: max_power_below(d, cap),
                })
            }
        };
    }
    Ok(acc)
}

fn max_power_below(d: usize, cap: usize) -> usize {
    if d <= 1 {
        return usize::MAX;
    }
    let mut k = 0;
    let mut acc = 1usize;
    while let Some(v) = acc.checked_mul(d) {
        if v > cap {
            break;
        }
        acc = v;
        k += 1;
    }
    k
}

pub fn power(d: usize, k: usize) -> usize {
    d.pow(k as u32)
}

pub fn encode(d: usize, tuple: &[usize]) -> usize {
    tuple.iter().fold(0, |acc, &a| acc * d + a)
}

pub fn decode(d: usize, len: usize, mut index: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = index % d;
        index /= d;
    }
    out
}

/// Writes the decoding of `index` into `out`.
pub fn decode_into(d: usize, mut index: usize, out: &mut [usize]) {
    for slot in out.iter_mut().rev() {
        *slot = index % d;
        index /= d;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_and_order() {
        let d = 3;
        let mut prev = None;
        for ix in 0..power(d, 4) {
            let t = decode(d, 4, ix);
            assert_eq!(encode(d, &t), ix);
            if let Some(p) = prev {
                assert!(p < t);
            }
            prev = Some(t);
        }
        assert_eq!(decode(2, 0, 0), Vec::<usize>::new());
        assert_eq!(encode(2, &[]), 0);
    }

    #[test]
    fn power_cap() {
        assert_eq!(checked_power(4, 5, 1 << 20, "test").unwrap(), 1024);
        assert!(matches!(
            checked_power(10, 7, 1_000_000, "test"),
            Err(Error::DegreeCap { cap: 6, .. })
        ));
    }
}
