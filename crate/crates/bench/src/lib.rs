//! Seeded inputs shared by the benchmarks.

use interlace_core::dh::apply_sequence;
use interlace_core::planarsp::SPSequence;
use interlace_core::random::{random_bdh_sequence, random_sp_sequence};
use interlace_core::Graph;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 7;

/// Random bipartite distance-hereditary graph on `n` vertices.
pub fn bdh_graph(n: usize) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ n as u64);
    apply_sequence(&random_bdh_sequence(&mut rng, n)).expect("generated sequences are valid")
}

/// Random series-parallel construction with `ops` operations after the digon.
pub fn sp_sequence(ops: usize) -> SPSequence {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ ops as u64);
    random_sp_sequence(&mut rng, ops)
}
