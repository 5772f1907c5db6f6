use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// What a random stream is used for inside one trial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Purpose {
    Gains,
    PrimaryReceivers,
    /// Per-user interference field, 0-based user slot.
    Interference(u32),
    CommonField,
}

impl Purpose {
    fn tag(self) -> u64 {
        match self {
            Purpose::Gains => 1,
            Purpose::PrimaryReceivers => 2,
            Purpose::CommonField => 3,
            Purpose::Interference(u) => 0x100 + u as u64,
        }
    }
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Random streams of a single trial, keyed by `(seed, trial, purpose)`.
///
/// The ChaCha key is derived from the seed and purpose; the trial index
/// selects the stream, so any trial can be regenerated in isolation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrialStreams {
    seed: u64,
    trial: u64,
}

impl TrialStreams {
    pub fn new(seed: u64, trial: u64) -> Self {
        TrialStreams { seed, trial }
    }

    pub fn trial(&self) -> u64 {
        self.trial
    }

    pub fn rng(&self, purpose: Purpose) -> ChaCha8Rng {
        let mut state = self.seed ^ purpose.tag().wrapping_mul(0xd6e8_feb8_6659_fd93);
        let mut key = [0u8; 32];
        for chunk in key.chunks_exact_mut(8) {
            chunk.copy_from_slice(&splitmix64(&mut state).to_le_bytes());
        }
        let mut rng = ChaCha8Rng::from_seed(key);
        rng.set_stream(self.trial);
        rng
    }
}
