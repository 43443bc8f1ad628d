//! Binary words of length 40, binary generator matrices, and Constructions
//! A, B and C lifting a self-dual additive (10, 2^10) code over GF(4) to a
//! binary self-dual code of length 40. [`certify`] enumerates a code in full
//! and reports its parameters.

use std::fmt;
use std::str::FromStr;

use crate::gf4::{QWord, N};
use crate::quaternary::{gf2_rank, QuaternaryMatrix};
use crate::Error;

/// Binary code length.
pub const LEN: usize = 40;
/// Dimension of the self-dual codes.
pub const DIM: usize = 20;

const WORD_MASK: u64 = (1 << LEN) - 1;

/// A binary vector of length 40.
///
/// Coordinate 1 is the most significant of the 40 used bits, so the word
/// prints left to right in coordinate order and column `i` of the 4×10
/// array view is hex digit `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BWord(u64);

impl BWord {
    pub const ZERO: BWord = BWord(0);

    #[inline]
    pub const fn from_u64(bits: u64) -> BWord {
        BWord(bits & WORD_MASK)
    }

    #[inline]
    pub const fn to_u64(self) -> u64 {
        self.0
    }

    #[inline]
    fn mask(coordinate: usize) -> u64 {
        debug_assert!((1..=LEN).contains(&coordinate));
        1 << (LEN - coordinate)
    }

    /// Bit at 1-based coordinate.
    #[inline]
    pub fn bit(self, coordinate: usize) -> bool {
        self.0 & Self::mask(coordinate) != 0
    }

    /// Copy with the 1-based coordinate flipped.
    #[inline]
    #[must_use]
    pub fn flip(self, coordinate: usize) -> BWord {
        BWord(self.0 ^ Self::mask(coordinate))
    }

    #[inline]
    pub fn weight(self) -> u32 {
        self.0.count_ones()
    }

    #[inline]
    pub fn distance(self, other: BWord) -> u32 {
        (self.0 ^ other.0).count_ones()
    }

    /// 1-based coordinates of the set bits, ascending.
    pub fn support(self) -> Vec<usize> {
        (1..=LEN).filter(|&k| self.bit(k)).collect()
    }

    /// Column `i` (0-based) of the array view as a nibble, top row in the
    /// most significant bit.
    #[inline]
    pub fn nibble(self, column: usize) -> u8 {
        debug_assert!(column < N);
        ((self.0 >> (4 * (N - 1 - column))) & 0xF) as u8
    }

    #[inline]
    #[must_use]
    pub fn with_nibble(self, column: usize, nibble: u8) -> BWord {
        let shift = 4 * (N - 1 - column);
        BWord((self.0 & !(0xF << shift)) | (((nibble & 0xF) as u64) << shift))
    }

    /// Ten hex digits, one per column.
    pub fn to_hex(self) -> String {
        format!("{:010x}", self.0)
    }

    /// GF(2) inner product.
    #[inline]
    pub fn dot(self, other: BWord) -> u8 {
        ((self.0 & other.0).count_ones() & 1) as u8
    }
}

impl std::ops::BitXor for BWord {
    type Output = BWord;
    #[inline]
    fn bitxor(self, rhs: BWord) -> BWord {
        BWord(self.0 ^ rhs.0)
    }
}

impl std::ops::BitXorAssign for BWord {
    #[inline]
    fn bitxor_assign(&mut self, rhs: BWord) {
        self.0 ^= rhs.0;
    }
}

impl fmt::Display for BWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:040b}", self.0)
    }
}

impl fmt::Debug for BWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BWord({})", self.to_hex())
    }
}

impl FromStr for BWord {
    type Err = Error;

    /// Accepts 40 binary digits (whitespace and `_` ignored) or 10 hex
    /// digits with an optional `0x` prefix.
    fn from_str(s: &str) -> Result<BWord, Error> {
        let cleaned: String = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '_')
            .collect();
        if cleaned.len() == LEN && cleaned.chars().all(|c| c == '0' || c == '1') {
            return Ok(BWord(u64::from_str_radix(&cleaned, 2).unwrap()));
        }
        let hex = cleaned
            .strip_prefix("0x")
            .or_else(|| cleaned.strip_prefix("0X"))
            .unwrap_or(&cleaned);
        if hex.len() == LEN / 4 && hex.chars().all(|c| c.is_ascii_hexdigit()) {
            return Ok(BWord(u64::from_str_radix(hex, 16).unwrap()));
        }
        Err(Error::Parse(format!(
            "expected 40 binary digits or 10 hex digits, got {s:?}"
        )))
    }
}

/// A list of binary generator rows of length 40.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BinaryMatrix {
    rows: Vec<BWord>,
}

impl BinaryMatrix {
    pub fn new(rows: Vec<BWord>) -> BinaryMatrix {
        BinaryMatrix { rows }
    }

    pub fn rows(&self) -> &[BWord] {
        &self.rows
    }

    pub fn rank(&self) -> usize {
        gf2_rank(self.rows.iter().map(|r| r.0))
    }

    /// Multiplies a message by the matrix. Bit `k - 1` of the message,
    /// counted from the most significant of `rows().len()` bits, selects
    /// row `k`.
    pub fn encode(&self, message: u64) -> Result<BWord, Error> {
        let k = self.rows.len();
        if k < 64 && message >> k != 0 {
            return Err(Error::Parse(format!(
                "message {message:#x} has more than {k} bits"
            )));
        }
        Ok(self
            .rows
            .iter()
            .enumerate()
            .filter(|(i, _)| message >> (k - 1 - i) & 1 == 1)
            .fold(BWord::ZERO, |acc, (_, &r)| acc ^ r))
    }

    /// True when every pair of rows is orthogonal, i.e. `G Gᵀ = 0`.
    pub fn is_self_orthogonal(&self) -> bool {
        self.rows
            .iter()
            .all(|&a| self.rows.iter().all(|&b| a.dot(b) == 0))
    }

    /// Reduced row echelon form of the row space, pivots chosen left to
    /// right; zero rows dropped.
    pub fn rref(&self) -> BinaryMatrix {
        let mut rows: Vec<u64> = self.rows.iter().map(|r| r.0).collect();
        let mut rank = 0;
        for bit in (0..LEN).rev() {
            let pivot = 1u64 << bit;
            let Some(p) = (rank..rows.len()).find(|&i| rows[i] & pivot != 0) else {
                continue;
            };
            rows.swap(rank, p);
            let pivot_row = rows[rank];
            for (i, r) in rows.iter_mut().enumerate() {
                if i != rank && *r & pivot != 0 {
                    *r ^= pivot_row;
                }
            }
            rank += 1;
        }
        rows.truncate(rank);
        BinaryMatrix::new(rows.into_iter().map(BWord).collect())
    }

    /// Keeps, in order, each row that is independent of those before it.
    pub fn independent_rows(&self) -> BinaryMatrix {
        let mut kept = Vec::new();
        let mut echelon: Vec<u64> = Vec::new();
        for &r in &self.rows {
            let mut v = r.0;
            for &b in &echelon {
                v = v.min(v ^ b);
            }
            if v != 0 {
                kept.push(r);
                echelon.push(v);
                echelon.sort_unstable_by(|a, b| b.cmp(a));
            }
        }
        BinaryMatrix::new(kept)
    }

    /// Membership in the row space.
    pub fn spans(&self, word: BWord) -> bool {
        let basis = self.rref();
        let mut v = word.0;
        for r in basis.rows {
            let lead = 63 - r.0.leading_zeros();
            if v >> lead & 1 == 1 {
                v ^= r.0;
            }
        }
        v == 0
    }

    /// Same row space, checked by mutual membership of all rows.
    pub fn same_span(&self, other: &BinaryMatrix) -> bool {
        other.rows.iter().all(|&r| self.spans(r)) && self.rows.iter().all(|&r| other.spans(r))
    }

    /// Calls `f` with every codeword of the row space exactly once, in
    /// Gray-code order over the independent rows.
    pub fn for_each_codeword(&self, mut f: impl FnMut(BWord)) {
        let basis = self.independent_rows();
        let mut w = BWord::ZERO;
        f(w);
        for step in 1u64..(1u64 << basis.rows.len()) {
            w ^= basis.rows[step.trailing_zeros() as usize];
            f(w);
        }
    }

    /// Text form: one row of 40 characters in `{0,1}` per line.
    pub fn to_text(&self) -> String {
        self.rows.iter().map(|r| format!("{r}\n")).collect()
    }

    /// Parses [`BinaryMatrix::to_text`] output. Blank lines and `#` comments
    /// are skipped; spaces inside a row are allowed.
    pub fn parse(text: &str) -> Result<BinaryMatrix, Error> {
        let mut rows = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bits: String = line.chars().filter(|c| !c.is_whitespace()).collect();
            if bits.len() != LEN || !bits.chars().all(|c| c == '0' || c == '1') {
                return Err(Error::Parse(format!(
                    "line {}: expected 40 characters in {{0,1}}",
                    lineno + 1
                )));
            }
            rows.push(bits.parse()?);
        }
        Ok(BinaryMatrix::new(rows))
    }
}

/// Image of a quaternary word under `0 → 0000, 1 → 0011, ω → 0101,
/// ω̄ → 0110`.
pub fn binmap(w: QWord) -> BWord {
    const IMAGE: [u8; 4] = [0b0000, 0b0011, 0b0101, 0b0110];
    (0..N).fold(BWord::ZERO, |acc, i| {
        acc.with_nibble(i, IMAGE[w.get(i).bits() as usize])
    })
}

/// The ten generators `1111` in one column of the code d4^10.
pub fn d4_generators() -> [BWord; N] {
    std::array::from_fn(|i| BWord::ZERO.with_nibble(i, 0xF))
}

/// Nine generators of the doubly-even subcode (d4^10)_0: columns `i` and
/// `i + 1` all ones.
pub fn d4n0_generators() -> [BWord; N - 1] {
    let d4 = d4_generators();
    std::array::from_fn(|i| d4[i] ^ d4[i + 1])
}

/// `1000 1000 ... 1000 0111`.
pub fn e_b() -> BWord {
    (0..N - 1)
        .fold(BWord::ZERO, |acc, i| acc.with_nibble(i, 0b1000))
        .with_nibble(N - 1, 0b0111)
}

/// `1000 1000 ... 1000`.
pub fn e_c() -> BWord {
    (0..N).fold(BWord::ZERO, |acc, i| acc.with_nibble(i, 0b1000))
}

fn lifted(
    c: &QuaternaryMatrix,
    extra: impl IntoIterator<Item = BWord>,
) -> Result<BinaryMatrix, Error> {
    let rows: Vec<BWord> = c.rows().iter().map(|&r| binmap(r)).chain(extra).collect();
    let basis = BinaryMatrix::new(rows).independent_rows();
    match basis.rows.len() {
        DIM => Ok(basis),
        rank => Err(Error::RankDeficient {
            rank,
            expected: DIM,
        }),
    }
}

/// Construction A: `Ĉ + d4^10`.
pub fn rho_a(c: &QuaternaryMatrix) -> Result<BinaryMatrix, Error> {
    lifted(c, d4_generators())
}

/// Construction B: `Ĉ + (d4^10)_0 + e_B`.
pub fn rho_b(c: &QuaternaryMatrix) -> Result<BinaryMatrix, Error> {
    lifted(c, d4n0_generators().into_iter().chain([e_b()]))
}

/// Construction C: `Ĉ + (d4^10)_0 + e_C`.
pub fn rho_c(c: &QuaternaryMatrix) -> Result<BinaryMatrix, Error> {
    lifted(c, d4n0_generators().into_iter().chain([e_c()]))
}

/// The printed generator matrix of the doubly-even code built from E10.
pub fn printed_de_matrix() -> BinaryMatrix {
    BinaryMatrix::parse(include_str!("../fixtures/c40_1_de.txt")).expect("bundled matrix")
}

/// The printed doubly-even matrix with its last row replaced by `e_C`.
pub fn printed_se_matrix() -> BinaryMatrix {
    let mut rows = printed_de_matrix().rows;
    *rows.last_mut().unwrap() = e_c();
    BinaryMatrix::new(rows)
}

/// The printed generator matrix of the doubly-even code built from B10.
pub fn printed_de2_matrix() -> BinaryMatrix {
    BinaryMatrix::parse(include_str!("../fixtures/c40_2_de.txt")).expect("bundled matrix")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Evenness {
    /// Every weight divisible by 4.
    DoublyEven,
    /// Every weight even, some weight ≡ 2 (mod 4).
    SinglyEven,
    /// Some weight is odd.
    Odd,
}

impl fmt::Display for Evenness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Evenness::DoublyEven => "doubly-even",
            Evenness::SinglyEven => "singly-even",
            Evenness::Odd => "odd",
        })
    }
}

/// Parameters of a binary code established by full enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificationReport {
    pub rows: usize,
    pub rank: usize,
    /// `G Gᵀ = 0`.
    pub self_orthogonal: bool,
    /// Self-orthogonal with dimension 20.
    pub self_dual: bool,
    pub min_distance: Option<u32>,
    pub evenness: Evenness,
    /// `weight_distribution[w]` = number of codewords of weight `w`.
    pub weight_distribution: [u64; LEN + 1],
}

impl CertificationReport {
    pub fn size(&self) -> u64 {
        self.weight_distribution.iter().sum()
    }

    /// True when `A_w = A_{40-w}` for every `w`.
    pub fn is_symmetric(&self) -> bool {
        (0..=LEN).all(|w| self.weight_distribution[w] == self.weight_distribution[LEN - w])
    }
}

impl fmt::Display for CertificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yes_no = |b: bool| if b { "yes" } else { "no" };
        writeln!(f, "rows: {}", self.rows)?;
        writeln!(f, "rank: {}", self.rank)?;
        writeln!(f, "codewords: {}", self.size())?;
        writeln!(
            f,
            "self-orthogonal (G G^T = 0): {}",
            yes_no(self.self_orthogonal)
        )?;
        writeln!(f, "self-dual: {}", yes_no(self.self_dual))?;
        match self.min_distance {
            Some(d) => writeln!(f, "minimum distance: {d}")?,
            None => writeln!(f, "minimum distance: none (zero code)")?,
        }
        writeln!(f, "type: {}", self.evenness)?;
        writeln!(f, "weight distribution:")?;
        for (w, &a) in self.weight_distribution.iter().enumerate() {
            if a > 0 {
                writeln!(f, "  A{w} = {a}")?;
            }
        }
        Ok(())
    }
}

/// Enumerates every codeword of the row space and reports self-duality,
/// minimum distance, evenness and the weight distribution.
pub fn certify(g: &BinaryMatrix) -> CertificationReport {
    let mut weight_distribution = [0u64; LEN + 1];
    g.for_each_codeword(|w| weight_distribution[w.weight() as usize] += 1);
    let rank = g.rank();
    let self_orthogonal = g.is_self_orthogonal();
    let min_distance = (1..=LEN)
        .find(|&w| weight_distribution[w] > 0)
        .map(|w| w as u32);
    let has = |pred: fn(usize) -> bool| {
        weight_distribution
            .iter()
            .enumerate()
            .any(|(w, &a)| a > 0 && pred(w))
    };
    let evenness = if has(|w| w % 2 == 1) {
        Evenness::Odd
    } else if has(|w| w % 4 == 2) {
        Evenness::SinglyEven
    } else {
        Evenness::DoublyEven
    };
    CertificationReport {
        rows: g.rows().len(),
        rank,
        self_orthogonal,
        self_dual: self_orthogonal && rank == DIM,
        min_distance,
        evenness,
        weight_distribution,
    }
}
