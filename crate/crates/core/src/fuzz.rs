//! Seeded random trials comparing the projection decoders with the oracle.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::constructions::{BWord, LEN};
use crate::decoders::{representation_decoder, syndrome_decoder, Decoder};
use crate::oracle::OracleDecoder;
use crate::{CodeVariant, Error};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FuzzConfig {
    pub trials: u64,
    pub seed: u64,
    /// Each trial flips a uniformly chosen number `0..=max_weight` of
    /// distinct bits.
    pub max_weight: u32,
    pub variant: CodeVariant,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FuzzSummary {
    pub trials: u64,
    /// Both decoders and the oracle returned the same verdict.
    pub agreements: u64,
    /// Verdicts differed between any two of the three.
    pub mismatches: u64,
    /// The transmitted codeword was recovered.
    pub corrected: u64,
    /// Of `corrected`, trials with no error at all.
    pub zero_flip: u64,
    /// Decoders declared failure.
    pub failures: u64,
    /// Decoders returned a codeword other than the transmitted one.
    pub miscorrected: u64,
}

impl FuzzSummary {
    pub fn corrected_fraction(&self) -> f64 {
        if self.trials == 0 {
            0.0
        } else {
            self.corrected as f64 / self.trials as f64
        }
    }
}

impl fmt::Display for FuzzSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "trials:       {}", self.trials)?;
        writeln!(f, "agreements:   {}", self.agreements)?;
        writeln!(f, "mismatches:   {}", self.mismatches)?;
        writeln!(
            f,
            "corrected:    {} ({:.4})",
            self.corrected,
            self.corrected_fraction()
        )?;
        writeln!(f, "zero-flip:    {}", self.zero_flip)?;
        writeln!(f, "failures:     {}", self.failures)?;
        write!(f, "miscorrected: {}", self.miscorrected)
    }
}

/// Random error of the given weight, positions distinct.
pub fn random_error(rng: &mut impl Rng, weight: u32) -> BWord {
    let mut e = BWord::ZERO;
    while e.weight() < weight {
        let k = rng.gen_range(1..=LEN);
        if !e.bit(k) {
            e = e.flip(k);
        }
    }
    e
}

pub fn run(config: &FuzzConfig) -> Result<FuzzSummary, Error> {
    let g = config.variant.generator();
    let repr = representation_decoder(config.variant);
    let synd = syndrome_decoder(config.variant);
    let oracle = OracleDecoder::new(config.variant);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut s = FuzzSummary::default();
    for _ in 0..config.trials {
        let c = g.encode(rng.gen_range(0..1 << 20))?;
        let weight = rng.gen_range(0..=config.max_weight.min(LEN as u32));
        let v = c ^ random_error(&mut rng, weight);
        let a = repr.decode_outcome(v)?.codeword();
        let b = synd.decode_outcome(v)?.codeword();
        let o = oracle.decode_outcome(v)?.codeword();
        s.trials += 1;
        if a == b && b == o {
            s.agreements += 1;
        } else {
            s.mismatches += 1;
        }
        match a {
            Some(x) if x == c => {
                s.corrected += 1;
                if weight == 0 {
                    s.zero_flip += 1;
                }
            }
            Some(_) => s.miscorrected += 1,
            None => s.failures += 1,
        }
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible_and_complete() {
        let cfg = FuzzConfig {
            trials: 300,
            seed: 11,
            max_weight: 3,
            variant: CodeVariant::DoublyEven,
        };
        let a = run(&cfg).unwrap();
        assert_eq!(a, run(&cfg).unwrap());
        assert_eq!(a.corrected, 300);
        assert_eq!(a.mismatches, 0);
    }

    #[test]
    fn heavy_errors_still_agree() {
        let s = run(&FuzzConfig {
            trials: 300,
            seed: 5,
            max_weight: 5,
            variant: CodeVariant::SinglyEven,
        })
        .unwrap();
        assert_eq!(s.mismatches, 0);
        assert_eq!(s.agreements, 300);
    }

    #[test]
    fn random_error_weight() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for w in 0..=6 {
            assert_eq!(random_error(&mut rng, w).weight(), w);
        }
    }
}
