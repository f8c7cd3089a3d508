//! Shared fixtures for the benchmarks.

use rectlevel_core::generate::{default_span, gen_random};
use rectlevel_core::Family;

pub const SEED: u64 = 0x5eed;

/// Random family with `O(n)` expected vertices.
pub fn sparse_random(n: usize) -> Family {
    gen_random(n, SEED, default_span(n)).expect("valid parameters")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_is_valid() {
        let f = sparse_random(100);
        assert_eq!(f.len(), 100);
        assert!(f.validate().is_ok());
    }
}
