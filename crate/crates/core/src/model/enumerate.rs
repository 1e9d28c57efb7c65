use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{ElemSet, Structure};
use crate::syntax::{Signature, DEFINEDNESS};

/// Largest universe that is enumerated exhaustively.
pub const EXHAUSTIVE_MAX: usize = 2;

/// Parameters of a generated model suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    pub max_size: usize,
    /// Number of random structures drawn from the sizes above
    /// [`EXHAUSTIVE_MAX`], cycling through those sizes.
    pub samples: usize,
    pub seed: u64,
    /// Emit only structures satisfying the definedness law; `def` is
    /// added to the constants if missing.
    pub definedness: bool,
}

impl SuiteConfig {
    pub fn new(max_size: usize) -> SuiteConfig {
        SuiteConfig { max_size, samples: 0, seed: 0, definedness: false }
    }

    pub fn samples(mut self, samples: usize) -> SuiteConfig {
        self.samples = samples;
        self
    }

    pub fn seed(mut self, seed: u64) -> SuiteConfig {
        self.seed = seed;
        self
    }

    pub fn definedness(mut self, on: bool) -> SuiteConfig {
        self.definedness = on;
        self
    }
}

/// Every structure of size at most `min(max_size, 2)` over the constants of
/// `sig`, followed by seeded random structures of larger sizes.
pub fn enumerate_structures(sig: &Signature, config: &SuiteConfig) -> impl Iterator<Item = Structure> {
    let mut constants: Vec<String> = sig.constants().to_vec();
    if config.definedness && !constants.iter().any(|c| c == DEFINEDNESS) {
        constants.push(DEFINEDNESS.to_string());
    }
    let definedness = config.definedness;
    let exhaustive_sizes = 1..=config.max_size.min(EXHAUSTIVE_MAX);
    let consts = constants.clone();
    let exhaustive = exhaustive_sizes
        .flat_map(move |n| {
            let consts = consts.clone();
            let bits = n * (n * n + consts.len());
            (0..1u64 << bits).map(move |code| decode(n, &consts, code))
        })
        .filter(move |s| !definedness || s.definedness_violation().is_none());
    let sampled_sizes: Vec<usize> = (EXHAUSTIVE_MAX + 1..=config.max_size).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let samples = config.samples;
    let sampled = (0..if sampled_sizes.is_empty() { 0 } else { samples }).map(move |i| {
        let n = sampled_sizes[i % sampled_sizes.len()];
        sample(n, &constants, definedness, &mut rng)
    });
    exhaustive.chain(sampled)
}

/// Number of structures the exhaustive part yields before filtering.
pub fn exhaustive_count(sig: &Signature, max_size: usize) -> u64 {
    let k = sig.constants().len();
    (1..=max_size.min(EXHAUSTIVE_MAX)).map(|n| 1u64 << (n * (n * n + k))).sum()
}

fn decode(n: usize, constants: &[String], mut code: u64) -> Structure {
    let mask = (1u64 << n) - 1;
    let mut take = || {
        let s = ElemSet(code & mask);
        code >>= n;
        s
    };
    let app: Vec<ElemSet> = (0..n * n).map(|_| take()).collect();
    let consts: BTreeMap<String, ElemSet> = constants.iter().map(|c| (c.clone(), take())).collect();
    Structure::numbered(n, app, consts)
}

fn sample(n: usize, constants: &[String], definedness: bool, rng: &mut ChaCha8Rng) -> Structure {
    let mask = (1u64 << n) - 1;
    let mut app: Vec<ElemSet> = (0..n * n).map(|_| ElemSet(rng.gen::<u64>() & mask)).collect();
    let mut consts: BTreeMap<String, ElemSet> =
        constants.iter().map(|c| (c.clone(), ElemSet(rng.gen::<u64>() & mask))).collect();
    if definedness {
        let mut def = consts[DEFINEDNESS];
        if def.is_empty() {
            def = ElemSet::singleton(rng.gen_range(0..n));
            consts.insert(DEFINEDNESS.to_string(), def);
        }
        let members: Vec<usize> = def.iter().collect();
        for a in 0..n {
            for b in 0..n {
                let covered = members.iter().any(|&d| app[d * n + a].contains(b));
                if !covered {
                    let d = members[rng.gen_range(0..members.len())];
                    app[d * n + a] = app[d * n + a].with(b);
                }
            }
        }
    }
    Structure::numbered(n, app, consts)
}
