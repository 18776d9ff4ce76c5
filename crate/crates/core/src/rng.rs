//! Deterministic random streams for Monte Carlo drops.
//!
//! Every (seed, drop, slot) triple maps to its own ChaCha stream, so a drop
//! can be evaluated on any worker, in any order, and still draw exactly the
//! same numbers. Slot 0 is the deployment stream; slot `i + 1` belongs to
//! pair `i`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type SimRng = ChaCha8Rng;

const SLOT_BITS: u32 = 20;

/// Largest number of pairs that still gets an independent stream per drop.
pub const MAX_PAIRS: usize = (1 << SLOT_BITS) - 2;

/// Largest drop index representable in the stream id.
pub const MAX_DROPS: u64 = 1 << (64 - SLOT_BITS);

fn stream(seed: u64, drop_index: u64, slot: u64) -> SimRng {
    debug_assert!(drop_index < MAX_DROPS);
    debug_assert!(slot < 1 << SLOT_BITS);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream((drop_index << SLOT_BITS) | slot);
    rng
}

/// Stream owned by pair `pair_index` during drop `drop_index`.
pub fn seeded_rng(seed: u64, drop_index: u64, pair_index: usize) -> SimRng {
    stream(seed, drop_index, pair_index as u64 + 1)
}

/// Stream used to place terminals during drop `drop_index`.
pub fn deployment_rng(seed: u64, drop_index: u64) -> SimRng {
    stream(seed, drop_index, 0)
}
