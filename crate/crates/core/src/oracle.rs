//! Exhaustive nearest-codeword search over all 2²⁰ codewords.
//!
//! This is the reference the projection decoders are checked against. A
//! plain linear scan ([`linear_decode`]) is always available. For radius ≤ 3
//! [`oracle_decode`] narrows the scan with a pigeonhole index: split a word
//! into four 10-bit chunks; any codeword within distance 3 agrees exactly
//! with the received word on at least one chunk, so only the codewords
//! sharing some chunk value need to be compared.

use std::sync::OnceLock;

use sha2::{Digest, Sha256};

use crate::constructions::{BWord, BinaryMatrix, DIM, LEN};
use crate::decoders::{DecodeOutcome, DecodeReport, Decoder};
use crate::projection::{self, parity_profile, Array4x10};
use crate::{CodeVariant, Error};

const CHUNKS: usize = 4;
const CHUNK_BITS: usize = LEN / CHUNKS;
const BUCKETS: usize = 1 << CHUNK_BITS;
/// Largest radius the chunk index answers exactly.
pub const INDEXED_RADIUS: u32 = CHUNKS as u32 - 1;

fn chunk(w: u64, k: usize) -> usize {
    (w >> (k * CHUNK_BITS)) as usize & (BUCKETS - 1)
}

/// All codewords in Gray-code enumeration order, plus a chunk index.
pub struct OracleTable {
    codewords: Vec<u64>,
    // per chunk: CSR offsets into `members`
    offsets: Vec<[u32; BUCKETS + 1]>,
    members: Vec<Vec<u32>>,
}

/// Nearest codewords found by a scan.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Nearest {
    pub codeword: BWord,
    pub distance: u32,
    /// Number of codewords at `distance`.
    pub multiplicity: usize,
}

impl OracleTable {
    /// Enumerates the span of `g`, which must have 20 independent rows.
    /// Codeword `i` in Gray order is the XOR of the rows selected by the
    /// bits of `i ^ (i >> 1)`, with the last row toggling fastest.
    pub fn build(g: &BinaryMatrix) -> Result<OracleTable, Error> {
        let rank = g.rank();
        if g.rows().len() != DIM || rank != DIM {
            return Err(Error::RankDeficient {
                rank,
                expected: DIM,
            });
        }
        let rows: Vec<u64> = g.rows().iter().map(|r| r.to_u64()).collect();
        let mut codewords = Vec::with_capacity(1 << DIM);
        let mut w = 0u64;
        codewords.push(w);
        for i in 1u32..1 << DIM {
            w ^= rows[DIM - 1 - i.trailing_zeros() as usize];
            codewords.push(w);
        }

        let mut offsets = Vec::with_capacity(CHUNKS);
        let mut members = Vec::with_capacity(CHUNKS);
        for k in 0..CHUNKS {
            let mut off = [0u32; BUCKETS + 1];
            for &c in &codewords {
                off[chunk(c, k) + 1] += 1;
            }
            for b in 0..BUCKETS {
                off[b + 1] += off[b];
            }
            let mut fill = off;
            let mut ids = vec![0u32; codewords.len()];
            for (i, &c) in codewords.iter().enumerate() {
                let b = chunk(c, k);
                ids[fill[b] as usize] = i as u32;
                fill[b] += 1;
            }
            offsets.push(off);
            members.push(ids);
        }
        Ok(OracleTable {
            codewords,
            offsets,
            members,
        })
    }

    /// Shared table for one of the two codes.
    pub fn for_variant(variant: CodeVariant) -> &'static OracleTable {
        static DE: OnceLock<OracleTable> = OnceLock::new();
        static SE: OnceLock<OracleTable> = OnceLock::new();
        let cell = match variant {
            CodeVariant::DoublyEven => &DE,
            CodeVariant::SinglyEven => &SE,
        };
        cell.get_or_init(|| {
            OracleTable::build(&variant.generator()).expect("bundled generator has full rank")
        })
    }

    pub fn len(&self) -> usize {
        self.codewords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codewords.is_empty()
    }

    pub fn codewords(&self) -> impl Iterator<Item = BWord> + '_ {
        self.codewords.iter().map(|&c| BWord::from_u64(c))
    }

    pub fn contains(&self, w: BWord) -> bool {
        self.nearest_indexed(w, 0).is_some()
    }

    /// Minimum nonzero weight, which equals the minimum pairwise distance.
    pub fn min_distance(&self) -> u32 {
        self.codewords
            .iter()
            .filter(|&&c| c != 0)
            .map(|c| c.count_ones())
            .min()
            .unwrap_or(0)
    }

    fn nearest_indexed(&self, v: BWord, radius: u32) -> Option<Nearest> {
        let v = v.to_u64();
        let mut best: Option<Nearest> = None;
        for k in 0..CHUNKS {
            let b = chunk(v, k);
            let (lo, hi) = (self.offsets[k][b] as usize, self.offsets[k][b + 1] as usize);
            for &i in &self.members[k][lo..hi] {
                let c = self.codewords[i as usize];
                let d = (c ^ v).count_ones();
                if d > radius {
                    continue;
                }
                // a codeword matching several chunks is seen several times
                if (0..k).any(|j| chunk(c, j) == chunk(v, j)) {
                    continue;
                }
                match &mut best {
                    Some(n) if d == n.distance => n.multiplicity += 1,
                    Some(n) if d > n.distance => {}
                    _ => {
                        best = Some(Nearest {
                            codeword: BWord::from_u64(c),
                            distance: d,
                            multiplicity: 1,
                        })
                    }
                }
            }
        }
        best
    }

    /// Full scan for the nearest codewords.
    pub fn nearest(&self, v: BWord) -> Nearest {
        let v = v.to_u64();
        let mut best = Nearest {
            codeword: BWord::ZERO,
            distance: u32::MAX,
            multiplicity: 0,
        };
        for &c in &self.codewords {
            let d = (c ^ v).count_ones();
            if d < best.distance {
                best = Nearest {
                    codeword: BWord::from_u64(c),
                    distance: d,
                    multiplicity: 1,
                };
            } else if d == best.distance {
                best.multiplicity += 1;
            }
        }
        best
    }

    /// Little-endian 64-bit words in enumeration order.
    pub fn dump(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(8 * self.codewords.len());
        for &c in &self.codewords {
            out.extend_from_slice(&c.to_le_bytes());
        }
        out
    }

    /// SHA-256 of [`OracleTable::dump`], lowercase hex.
    pub fn content_hash(&self) -> String {
        let mut h = Sha256::new();
        for &c in &self.codewords {
            h.update(c.to_le_bytes());
        }
        h.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }
}

pub fn build_oracle(g: &BinaryMatrix) -> Result<OracleTable, Error> {
    OracleTable::build(g)
}

/// The nearest codeword if it lies within `radius`, and is the only one
/// at that distance.
pub fn oracle_decode(v: BWord, t: &OracleTable, radius: u32) -> Option<BWord> {
    let n = if radius <= INDEXED_RADIUS {
        t.nearest_indexed(v, radius)?
    } else {
        t.nearest(v)
    };
    (n.distance <= radius && n.multiplicity == 1).then_some(n.codeword)
}

/// Same contract as [`oracle_decode`], always by full scan.
pub fn linear_decode(v: BWord, t: &OracleTable, radius: u32) -> Option<BWord> {
    let n = t.nearest(v);
    (n.distance <= radius && n.multiplicity == 1).then_some(n.codeword)
}

/// Radius-3 nearest-codeword decoder, registered as `oracle`.
pub struct OracleDecoder {
    variant: CodeVariant,
    table: OnceLock<&'static OracleTable>,
}

impl OracleDecoder {
    pub fn new(variant: CodeVariant) -> OracleDecoder {
        OracleDecoder {
            variant,
            table: OnceLock::new(),
        }
    }

    pub fn table(&self) -> &'static OracleTable {
        self.table
            .get_or_init(|| OracleTable::for_variant(self.variant))
    }
}

impl Decoder for OracleDecoder {
    fn name(&self) -> &'static str {
        "oracle"
    }

    fn description(&self) -> &'static str {
        "exhaustive nearest-codeword search over all 2^20 codewords (radius 3)"
    }

    fn variant(&self) -> CodeVariant {
        self.variant
    }

    fn decode(&self, received: BWord) -> Result<DecodeReport, Error> {
        let array = Array4x10::new(received);
        let profile = parity_profile(array);
        let case = crate::decoders::classify_case(array);
        let outcome = match oracle_decode(received, self.table(), INDEXED_RADIUS) {
            Some(codeword) => DecodeOutcome::Corrected {
                codeword,
                corrected_projection: projection::proj(Array4x10::new(codeword)),
                flipped: received ^ codeword,
            },
            None => DecodeOutcome::Failure,
        };
        Ok(DecodeReport {
            received,
            profile,
            case,
            projection: projection::proj(array),
            syndrome: None,
            outcome,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn de() -> &'static OracleTable {
        OracleTable::for_variant(CodeVariant::DoublyEven)
    }

    #[test]
    fn table_shape() {
        let t = de();
        assert_eq!(t.len(), 1 << 20);
        assert!(t.contains(BWord::ZERO));
        assert_eq!(t.min_distance(), 8);
        let g = CodeVariant::DoublyEven.generator();
        // the second codeword in Gray order is the last row
        assert_eq!(t.codewords().nth(1), Some(g.rows()[19]));
        for r in g.rows() {
            assert!(t.contains(*r));
        }
        assert_eq!(t.dump().len(), 8 << 20);
    }

    #[test]
    fn rank_deficient_matrix_is_rejected() {
        let mut rows = CodeVariant::DoublyEven.generator().rows().to_vec();
        rows[5] = rows[4];
        assert!(matches!(
            build_oracle(&BinaryMatrix::new(rows)),
            Err(Error::RankDeficient { rank: 19, .. })
        ));
    }

    #[test]
    fn indexed_and_linear_agree() {
        let t = de();
        let g = CodeVariant::DoublyEven.generator();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 0..200 {
            let v = if n % 2 == 0 {
                let mut w = g.encode(rng.gen_range(0..1 << 20)).unwrap();
                for _ in 0..rng.gen_range(0..=4) {
                    w = w.flip(rng.gen_range(1..=40));
                }
                w
            } else {
                BWord::from_u64(rng.gen::<u64>() & ((1 << 40) - 1))
            };
            for r in 0..=3 {
                assert_eq!(oracle_decode(v, t, r), linear_decode(v, t, r), "{v} r={r}");
            }
        }
    }

    #[test]
    fn single_column_burst_is_out_of_range() {
        let t = de();
        let c = CodeVariant::DoublyEven.generator().encode(0xABCDE).unwrap();
        let v = c ^ BWord::ZERO.with_nibble(3, 0b1111);
        assert_eq!(oracle_decode(v, t, 3), None);
        assert_eq!(oracle_decode(c, t, 0), Some(c));
    }
}
