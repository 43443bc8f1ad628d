//! The additive (10, 2^10) codes E10 and B10 over GF(4), their codeword
//! tables, the monomial symmetry group of E10 and the eight orbit types
//! that partition its nonzero codewords.

use std::fmt;
use std::sync::OnceLock;

use crate::gf4::{Gf4, QWord, N, QWORD_MASK};
use crate::Error;

/// Number of GF(2)-basis rows of a self-dual additive (10, 2^10) code.
pub const BASIS_ROWS: usize = 10;
/// Number of codewords of E10 and B10.
pub const CODE_SIZE: usize = 1 << BASIS_ROWS;

const E10_ROWS: [&str; BASIS_ROWS] = [
    "1111000000",
    "0011110000",
    "0000111100",
    "0000001111",
    "10101010wW",
    "wwww000000",
    "00wwww0000",
    "0000wwww00",
    "000000wwww",
    "w0w0w0w0W1",
];

const B10_ROWS: [&str; BASIS_ROWS] = [
    "1111000000",
    "01wW100000",
    "0000011110",
    "0000001wW1",
    "01Ww001Ww0",
    "wwww000000",
    "0wW1w00000",
    "00000wwww0",
    "000000wW1w",
    "0w1W00w1W0",
];

/// A GF(2)-basis of an additive code over GF(4). For the two codes here the
/// first five rows are a GF(4)-basis of the underlying linear code and rows
/// six to ten are their ω-multiples.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuaternaryMatrix {
    rows: [QWord; BASIS_ROWS],
}

impl QuaternaryMatrix {
    pub fn new(rows: [QWord; BASIS_ROWS]) -> QuaternaryMatrix {
        QuaternaryMatrix { rows }
    }

    fn from_text(rows: &[&str; BASIS_ROWS]) -> QuaternaryMatrix {
        QuaternaryMatrix {
            rows: rows.map(|r| r.parse().expect("built-in matrix row")),
        }
    }

    pub fn rows(&self) -> &[QWord; BASIS_ROWS] {
        &self.rows
    }

    /// The rows spanning the code over GF(4).
    pub fn linear_rows(&self) -> &[QWord] {
        &self.rows[..5]
    }

    /// Rank of the rows as vectors over GF(2).
    pub fn gf2_rank(&self) -> usize {
        gf2_rank(self.rows.iter().map(|r| r.packed() as u64))
    }

    /// True when every pair of rows (including a row with itself) has trace
    /// inner product zero.
    pub fn is_trace_self_orthogonal(&self) -> bool {
        self.rows
            .iter()
            .all(|a| self.rows.iter().all(|&b| a.trace_inner(b) == 0))
    }

    /// True when rows 6..10 are ω times rows 1..5.
    pub fn has_omega_structure(&self) -> bool {
        (0..5).all(|i| self.rows[i + 5] == self.rows[i].scale(Gf4::OMEGA))
    }
}

/// The generator matrix of E10 as a GF(2)-basis.
pub fn build_e10() -> QuaternaryMatrix {
    QuaternaryMatrix::from_text(&E10_ROWS)
}

/// The generator matrix of B10 as a GF(2)-basis.
pub fn build_b10() -> QuaternaryMatrix {
    QuaternaryMatrix::from_text(&B10_ROWS)
}

/// Shared codeword table of E10.
pub fn e10_table() -> &'static CodeTable {
    static TABLE: OnceLock<CodeTable> = OnceLock::new();
    TABLE.get_or_init(|| CodeTable::enumerate(&build_e10()).expect("E10 basis is independent"))
}

pub(crate) fn gf2_rank(vectors: impl IntoIterator<Item = u64>) -> usize {
    let mut basis: Vec<u64> = Vec::new();
    for mut v in vectors {
        for &b in &basis {
            v = v.min(v ^ b);
        }
        if v != 0 {
            basis.push(v);
            // keep sorted descending so the min-reduction acts as elimination
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis.len()
}

/// Every codeword of an additive code, with its weight distribution and an
/// O(1) membership bitmap over all 4^10 words.
#[derive(Clone)]
pub struct CodeTable {
    codewords: Vec<QWord>,
    weight_distribution: [usize; N + 1],
    member: Vec<u64>,
}

impl CodeTable {
    /// Enumerates the GF(2) span of the rows in Gray-code order.
    pub fn enumerate(g: &QuaternaryMatrix) -> Result<CodeTable, Error> {
        let rank = g.gf2_rank();
        if rank != BASIS_ROWS {
            return Err(Error::RankDeficient {
                rank,
                expected: BASIS_ROWS,
            });
        }
        let mut codewords = Vec::with_capacity(CODE_SIZE);
        let mut member = vec![0u64; (QWORD_MASK as usize + 1) / 64];
        let mut weight_distribution = [0usize; N + 1];
        let mut w = QWord::ZERO;
        for step in 0..CODE_SIZE {
            if step > 0 {
                w += g.rows[step.trailing_zeros() as usize];
            }
            codewords.push(w);
            weight_distribution[w.weight() as usize] += 1;
            let p = w.packed() as usize;
            member[p / 64] |= 1 << (p % 64);
        }
        Ok(CodeTable {
            codewords,
            weight_distribution,
            member,
        })
    }

    pub fn codewords(&self) -> &[QWord] {
        &self.codewords
    }

    pub fn len(&self) -> usize {
        self.codewords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codewords.is_empty()
    }

    /// Number of codewords of each weight 0..=10.
    pub fn weight_distribution(&self) -> &[usize; N + 1] {
        &self.weight_distribution
    }

    #[inline]
    pub fn contains(&self, w: QWord) -> bool {
        let p = w.packed() as usize;
        self.member[p / 64] >> (p % 64) & 1 == 1
    }

    /// Smallest nonzero weight.
    pub fn min_weight(&self) -> Option<usize> {
        (1..=N).find(|&k| self.weight_distribution[k] > 0)
    }

    /// One word per line over `0 1 w W`, in enumeration order.
    pub fn export_text(&self) -> String {
        let mut out = String::with_capacity(self.codewords.len() * (N + 1));
        for w in &self.codewords {
            out.push_str(&w.to_string());
            out.push('\n');
        }
        out
    }

    /// Parses the format produced by [`CodeTable::export_text`]. Blank lines
    /// and lines starting with `#` are skipped.
    pub fn parse_words(text: &str) -> Result<Vec<QWord>, Error> {
        text.lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(str::parse)
            .collect()
    }
}

impl fmt::Debug for CodeTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CodeTable")
            .field("len", &self.codewords.len())
            .field("weight_distribution", &self.weight_distribution)
            .finish()
    }
}

/// Number of blocks `(1,2), (3,4), ..., (9,10)`.
pub const BLOCKS: usize = 5;

/// An element of the monomial group of E10: permute the five blocks, swap
/// the two coordinates inside an even number of blocks, then multiply by a
/// nonzero scalar.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct MonomialSymmetry {
    /// Output block `i` receives input block `block_perm[i]`.
    block_perm: [u8; BLOCKS],
    /// Swap flags, indexed by input block.
    swaps: [bool; BLOCKS],
    scalar: Gf4,
}

impl MonomialSymmetry {
    pub fn new(
        block_perm: [u8; BLOCKS],
        swaps: [bool; BLOCKS],
        scalar: Gf4,
    ) -> Result<MonomialSymmetry, Error> {
        let mut seen = [false; BLOCKS];
        for &b in &block_perm {
            if b as usize >= BLOCKS || std::mem::replace(&mut seen[b as usize], true) {
                return Err(Error::InvalidSymmetry(format!(
                    "{block_perm:?} is not a permutation of the five blocks"
                )));
            }
        }
        let swap_count = swaps.iter().filter(|&&s| s).count();
        if swap_count % 2 != 0 {
            return Err(Error::OddSwapCount(swap_count));
        }
        if scalar.is_zero() {
            return Err(Error::InvalidSymmetry("scalar must be nonzero".into()));
        }
        Ok(MonomialSymmetry {
            block_perm,
            swaps,
            scalar,
        })
    }

    pub fn identity() -> MonomialSymmetry {
        MonomialSymmetry {
            block_perm: [0, 1, 2, 3, 4],
            swaps: [false; BLOCKS],
            scalar: Gf4::ONE,
        }
    }

    /// The three printed permutation generators `(12)(34)`, `(13)(24)` and
    /// `(13579)(2468 10)`, followed by scalar multiplication by ω.
    pub fn generators() -> [MonomialSymmetry; 4] {
        let id = MonomialSymmetry::identity();
        [
            MonomialSymmetry {
                swaps: [true, true, false, false, false],
                ..id
            },
            MonomialSymmetry {
                block_perm: [1, 0, 2, 3, 4],
                ..id
            },
            MonomialSymmetry {
                block_perm: [4, 0, 1, 2, 3],
                ..id
            },
            MonomialSymmetry {
                scalar: Gf4::OMEGA,
                ..id
            },
        ]
    }

    /// All 5! · 2^4 · 3 = 5760 group elements.
    pub fn all() -> impl Iterator<Item = MonomialSymmetry> {
        let perms = permutations5();
        perms.into_iter().flat_map(|block_perm| {
            (0u8..32)
                .filter(|m| m.count_ones() % 2 == 0)
                .flat_map(move |mask| {
                    let swaps = std::array::from_fn(|i| mask >> i & 1 == 1);
                    Gf4::NONZERO
                        .into_iter()
                        .map(move |scalar| MonomialSymmetry {
                            block_perm,
                            swaps,
                            scalar,
                        })
                })
        })
    }

    pub fn apply(&self, w: QWord) -> QWord {
        let mut out = QWord::ZERO;
        for (dst, &src) in self.block_perm.iter().enumerate() {
            let src = src as usize;
            let (mut a, mut b) = (w.get(2 * src), w.get(2 * src + 1));
            if self.swaps[src] {
                std::mem::swap(&mut a, &mut b);
            }
            out.set(2 * dst, a * self.scalar);
            out.set(2 * dst + 1, b * self.scalar);
        }
        out
    }
}

fn permutations5() -> Vec<[u8; BLOCKS]> {
    fn go(prefix: &mut Vec<u8>, out: &mut Vec<[u8; BLOCKS]>) {
        if prefix.len() == BLOCKS {
            out.push(prefix.as_slice().try_into().unwrap());
            return;
        }
        for b in 0..BLOCKS as u8 {
            if !prefix.contains(&b) {
                prefix.push(b);
                go(prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::with_capacity(120);
    go(&mut Vec::with_capacity(BLOCKS), &mut out);
    out
}

/// One of the eight orbit types of nonzero E10 codewords.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct OrbitType {
    /// 1..=8.
    pub id: u8,
    pub representative: QWord,
    pub expected_count: usize,
    pub weight: u32,
}

impl OrbitType {
    pub fn roman(&self) -> &'static str {
        ["i", "ii", "iii", "iv", "v", "vi", "vii", "viii"][self.id as usize - 1]
    }
}

const TYPE_TABLE: [(&str, usize, u32); 8] = [
    ("1111000000", 30, 4),
    ("10101010wW", 240, 6),
    ("wwWW110000", 60, 6),
    ("1111111100", 15, 8),
    ("1111wwww00", 90, 8),
    ("WwWw1010wW", 480, 8),
    ("WwWwwWwWwW", 48, 10),
    ("111111WWww", 60, 10),
];

/// The eight orbit types with their representatives, sizes and weights.
pub fn orbit_types() -> [OrbitType; 8] {
    std::array::from_fn(|i| {
        let (rep, expected_count, weight) = TYPE_TABLE[i];
        OrbitType {
            id: i as u8 + 1,
            representative: rep.parse().expect("built-in representative"),
            expected_count,
            weight,
        }
    })
}

/// Orbit lookup over all 4^10 words: the type id of every nonzero E10
/// codeword, zero elsewhere.
pub struct OrbitClassifier {
    types: [OrbitType; 8],
    lookup: Vec<u8>,
}

impl OrbitClassifier {
    /// Expands every representative under the full symmetry group.
    pub fn build() -> Result<OrbitClassifier, Error> {
        let e10 = e10_table();
        let types = orbit_types();
        let symmetries: Vec<MonomialSymmetry> = MonomialSymmetry::all().collect();
        let mut lookup = vec![0u8; QWORD_MASK as usize + 1];
        for t in &types {
            if !e10.contains(t.representative) {
                return Err(Error::NotACodeword(t.representative.to_string()));
            }
            for s in &symmetries {
                let image = s.apply(t.representative);
                let slot = &mut lookup[image.packed() as usize];
                if *slot != 0 && *slot != t.id {
                    return Err(Error::Invariant(format!(
                        "orbits of types {} and {} overlap at {image}",
                        *slot, t.id
                    )));
                }
                *slot = t.id;
            }
        }
        Ok(OrbitClassifier { types, lookup })
    }

    /// Shared classifier, built on first use.
    pub fn global() -> &'static OrbitClassifier {
        static CLASSIFIER: OnceLock<OrbitClassifier> = OnceLock::new();
        CLASSIFIER.get_or_init(|| OrbitClassifier::build().expect("orbit expansion"))
    }

    pub fn types(&self) -> &[OrbitType; 8] {
        &self.types
    }

    /// True when `w` is the zero word or lies in one of the eight orbits.
    #[inline]
    pub fn matches_some_type(&self, w: QWord) -> bool {
        w == QWord::ZERO || self.lookup[w.packed() as usize] != 0
    }

    pub fn classify(&self, w: QWord) -> Result<OrbitType, Error> {
        if w == QWord::ZERO {
            return Err(Error::ZeroWord);
        }
        match self.lookup[w.packed() as usize] {
            0 if e10_table().contains(w) => Err(Error::Invariant(format!(
                "codeword {w} lies in no orbit of the eight representatives"
            ))),
            0 => Err(Error::NotACodeword(w.to_string())),
            id => Ok(self.types[id as usize - 1]),
        }
    }

    /// Classifies all nonzero E10 codewords; counts indexed by type id - 1.
    pub fn census(&self) -> Result<[usize; 8], Error> {
        let mut counts = [0usize; 8];
        for &w in e10_table().codewords() {
            if w != QWord::ZERO {
                counts[self.classify(w)?.id as usize - 1] += 1;
            }
        }
        Ok(counts)
    }
}

/// Orbit type of a nonzero E10 codeword.
pub fn classify_type(w: QWord) -> Result<OrbitType, Error> {
    OrbitClassifier::global().classify(w)
}

/// Per-type counts over the 1023 nonzero codewords of E10.
pub fn orbit_census() -> Result<[usize; 8], Error> {
    OrbitClassifier::global().census()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn q(s: &str) -> QWord {
        s.parse().unwrap()
    }

    #[test]
    fn printed_rows() {
        let e = build_e10();
        assert_eq!(e.rows()[0], q("1111000000"));
        assert_eq!(e.rows()[4], q("10101010wW"));
        assert_eq!(e.rows()[9], q("w0w0w0w0W1"));
        let b = build_b10();
        assert_eq!(b.rows()[1], q("01wW100000"));
        assert_eq!(b.rows()[4], q("01Ww001Ww0"));
    }

    #[test]
    fn bases_are_self_orthogonal_with_omega_multiples() {
        for g in [build_e10(), build_b10()] {
            assert!(g.is_trace_self_orthogonal());
            assert!(g.has_omega_structure());
            assert_eq!(g.gf2_rank(), 10);
            for &a in g.linear_rows() {
                for &b in g.linear_rows() {
                    assert_eq!(a.hermitian_inner(b), Gf4::ZERO);
                }
            }
        }
    }

    #[test]
    fn enumerate_rejects_dependent_rows() {
        let mut rows = *build_e10().rows();
        rows[9] = rows[0] + rows[1];
        let err = CodeTable::enumerate(&QuaternaryMatrix::new(rows)).unwrap_err();
        assert_eq!(
            err,
            Error::RankDeficient {
                rank: 9,
                expected: 10
            }
        );
    }

    #[test]
    fn weight_enumerators() {
        let expected = [1, 0, 0, 0, 30, 0, 300, 0, 585, 0, 108];
        for g in [build_e10(), build_b10()] {
            let t = CodeTable::enumerate(&g).unwrap();
            assert_eq!(t.len(), CODE_SIZE);
            assert_eq!(t.weight_distribution(), &expected);
            assert_eq!(t.min_weight(), Some(4));
            assert!(t.contains(QWord::ZERO));
        }
    }

    #[test]
    fn table_is_closed_under_addition() {
        let t = e10_table();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10_000 {
            let a = t.codewords()[rng.gen_range(0..CODE_SIZE)];
            let b = t.codewords()[rng.gen_range(0..CODE_SIZE)];
            assert!(t.contains(a + b));
        }
    }

    #[test]
    fn text_export_round_trips() {
        let t = e10_table();
        let words = CodeTable::parse_words(&t.export_text()).unwrap();
        assert_eq!(words, t.codewords());
    }

    #[test]
    fn symmetry_actions() {
        let w = q("1111000000");
        assert_eq!(MonomialSymmetry::identity().apply(w), w);
        let scale = MonomialSymmetry::new([0, 1, 2, 3, 4], [false; 5], Gf4::OMEGA).unwrap();
        assert_eq!(scale.apply(w), q("wwww000000"));
        let swap12 = MonomialSymmetry::new([1, 0, 2, 3, 4], [false; 5], Gf4::ONE).unwrap();
        assert_eq!(swap12.apply(q("1100000000")), q("0011000000"));
        let cycle = MonomialSymmetry::generators()[2];
        assert_eq!(cycle.apply(q("1w00000000")), q("001w000000"));
    }

    #[test]
    fn symmetry_validation() {
        assert_eq!(
            MonomialSymmetry::new(
                [0, 1, 2, 3, 4],
                [true, false, false, false, false],
                Gf4::ONE
            ),
            Err(Error::OddSwapCount(1))
        );
        assert!(MonomialSymmetry::new([0, 0, 2, 3, 4], [false; 5], Gf4::ONE).is_err());
        assert!(MonomialSymmetry::new([0, 1, 2, 3, 4], [false; 5], Gf4::ZERO).is_err());
        assert_eq!(MonomialSymmetry::all().count(), 5760);
    }

    #[test]
    fn group_preserves_e10() {
        let t = e10_table();
        let all: Vec<_> = MonomialSymmetry::all().collect();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let sample = MonomialSymmetry::generators()
            .into_iter()
            .chain((0..100).map(|_| all[rng.gen_range(0..all.len())]));
        for s in sample {
            for &w in t.codewords() {
                assert!(t.contains(s.apply(w)), "{s:?} maps {w} outside E10");
            }
        }
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify_type(q("0Ww1w1W0w1")).unwrap().id, 6);
        assert_eq!(classify_type(q("1111000000")).unwrap().id, 1);
        assert_eq!(classify_type(q("WwWwwWwWwW")).unwrap().id, 7);
        assert_eq!(classify_type(QWord::ZERO), Err(Error::ZeroWord));
        assert!(matches!(
            classify_type(q("1000000000")),
            Err(Error::NotACodeword(_))
        ));
    }

    #[test]
    fn census_matches_type_sizes_and_weights() {
        let counts = orbit_census().unwrap();
        assert_eq!(counts, [30, 240, 60, 15, 90, 480, 48, 60]);
        assert_eq!(counts.iter().sum::<usize>(), 1023);
        for &w in e10_table()
            .codewords()
            .iter()
            .filter(|w| **w != QWord::ZERO)
        {
            let t = classify_type(w).unwrap();
            assert_eq!(w.weight(), t.weight);
        }
    }
}
