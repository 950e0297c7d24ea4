//! Exact integer combinatorics.

use crate::error::{PbError, Result};

/// `n! / (k! (n-k)!)` in exact integer arithmetic.
///
/// Uses the multiplicative recurrence `C(n, i+1) = C(n, i) (n-i) / (i+1)`,
/// which stays integral at every step. Overflow of `u64` is reported, not
/// wrapped; every `n <= 60` is representable.
pub fn binomial(n: u64, k: u64) -> Result<u64> {
    if k > n {
        return Err(PbError::invalid(format!("binomial({n}, {k}) requires k <= n")));
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
        if acc > u128::from(u64::MAX) {
            return Err(PbError::Overflow("binomial"));
        }
    }
    Ok(acc as u64)
}
