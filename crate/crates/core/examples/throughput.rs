//! Rough per-decoder throughput on random corrupted codewords.

use std::time::Instant;

use proj40::decoders::DecoderRegistry;
use proj40::fuzz::random_error;
use proj40::CodeVariant;
use rand::{Rng, SeedableRng};

fn main() {
    let variant = CodeVariant::DoublyEven;
    let g = variant.generator();
    let registry = DecoderRegistry::with_defaults(variant);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0);
    let words: Vec<_> = (0..100_000)
        .map(|_| {
            let c = g.encode(rng.gen_range(0..1 << 20)).unwrap();
            let w = rng.gen_range(0..=3);
            c ^ random_error(&mut rng, w)
        })
        .collect();
    for d in registry.iter() {
        // warm shared tables
        d.decode(words[0]).unwrap();
        let t = Instant::now();
        for &v in &words {
            d.decode(v).unwrap();
        }
        let per = t.elapsed().as_secs_f64() / words.len() as f64;
        println!("{:<7} {:>8.2} us/word", d.name(), per * 1e6);
    }
}
