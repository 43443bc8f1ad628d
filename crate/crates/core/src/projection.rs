//! The 4×10 array view of a 40-bit word and its projection onto GF(4)^10.
//!
//! Rows are labelled `0, 1, ω, ω̄` top to bottom; a column `(v1, v2, v3, v4)`
//! projects to `0·v1 + 1·v2 + ω·v3 + ω̄·v4`. A binary set has *projection O*
//! onto a quaternary code when every projection is a codeword, all columns
//! share one parity and the top row has that same parity; *projection E*
//! replaces the last condition by "the top row is even".

use std::fmt;
use std::str::FromStr;

use crate::constructions::BWord;
use crate::gf4::{Gf4, QWord, N};
use crate::quaternary::CodeTable;
use crate::Error;

/// Projection of each 4-bit column, indexed by nibble (top row = MSB).
const PROJ: [u8; 16] = {
    let mut t = [0u8; 16];
    let mut n = 0;
    while n < 16 {
        // v2 → 1 (01), v3 → ω (10), v4 → ω̄ (11)
        let mut s = 0;
        if n & 0b0100 != 0 {
            s ^= 1;
        }
        if n & 0b0010 != 0 {
            s ^= 2;
        }
        if n & 0b0001 != 0 {
            s ^= 3;
        }
        t[n] = s;
        n += 1;
    }
    t
};

/// The four columns projecting to each GF(4) element: two even, then two
/// odd.
pub const COLUMN_CANDIDATES: [[u8; 4]; 4] = [
    [0b0000, 0b1111, 0b1000, 0b0111],
    [0b1100, 0b0011, 0b0100, 0b1011],
    [0b1010, 0b0101, 0b0010, 0b1101],
    [0b1001, 0b0110, 0b0001, 0b1110],
];

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    #[inline]
    pub fn of(ones: u32) -> Parity {
        if ones.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn flipped(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// Which top-row rule the binary code obeys.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ProjectionKind {
    /// Top row parity equals the column parity.
    O,
    /// Top row parity is always even.
    E,
}

impl ProjectionKind {
    pub fn top_row_parity(self, column_parity: Parity) -> Parity {
        match self {
            ProjectionKind::O => column_parity,
            ProjectionKind::E => Parity::Even,
        }
    }
}

/// A 40-bit word viewed as a 4×10 array; column `i` holds coordinates
/// `4i+1 ..= 4i+4` (1-based), top to bottom.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Array4x10(BWord);

/// Row labels, top to bottom.
pub const ROW_LABELS: [Gf4; 4] = [Gf4::ZERO, Gf4::ONE, Gf4::OMEGA, Gf4::OMEGA_BAR];

impl Array4x10 {
    pub fn new(word: BWord) -> Array4x10 {
        Array4x10(word)
    }

    pub fn word(self) -> BWord {
        self.0
    }

    #[inline]
    pub fn column(self, i: usize) -> u8 {
        self.0.nibble(i)
    }

    /// Entry in row `r` (0 = top) and column `c`, both 0-based.
    pub fn get(self, r: usize, c: usize) -> bool {
        self.column(c) >> (3 - r) & 1 == 1
    }

    pub fn column_parity(self, i: usize) -> Parity {
        Parity::of(self.column(i).count_ones())
    }

    pub fn top_row_parity(self) -> Parity {
        Parity::of((0..N).filter(|&c| self.get(0, c)).count() as u32)
    }

    /// Four lines of ten `0`/`1` characters, rows in label order.
    pub fn to_rows_text(self) -> String {
        let mut out = String::with_capacity(4 * (N + 1));
        for r in 0..4 {
            for c in 0..N {
                out.push(if self.get(r, c) { '1' } else { '0' });
            }
            out.push('\n');
        }
        out
    }
}

impl From<BWord> for Array4x10 {
    fn from(w: BWord) -> Self {
        Array4x10(w)
    }
}

impl FromStr for Array4x10 {
    type Err = Error;

    /// Parses four rows of ten bits. Spaces inside a row are ignored, blank
    /// lines are skipped.
    fn from_str(s: &str) -> Result<Array4x10, Error> {
        let rows: Vec<String> = s
            .lines()
            .map(|l| l.chars().filter(|c| !c.is_whitespace()).collect::<String>())
            .filter(|l| !l.is_empty())
            .collect();
        if rows.len() != 4 {
            return Err(Error::Parse(format!(
                "array needs 4 rows, got {}",
                rows.len()
            )));
        }
        let mut word = BWord::ZERO;
        for (r, row) in rows.iter().enumerate() {
            if row.len() != N || !row.chars().all(|c| c == '0' || c == '1') {
                return Err(Error::Parse(format!(
                    "array row {} must be {N} characters in {{0,1}}",
                    r + 1
                )));
            }
            for (c, ch) in row.chars().enumerate() {
                if ch == '1' {
                    word = word.flip(4 * c + r + 1);
                }
            }
        }
        Ok(Array4x10(word))
    }
}

/// Projection of one column nibble.
#[inline]
pub fn project_column(nibble: u8) -> Gf4 {
    Gf4::from_bits(PROJ[(nibble & 0xF) as usize])
}

/// The linear map GF(2)^40 → GF(4)^10.
pub fn proj(v: Array4x10) -> QWord {
    let mut packed = 0u32;
    for i in 0..N {
        packed |= (PROJ[v.column(i) as usize] as u32) << (2 * i);
    }
    QWord::from_packed(packed)
}

/// Column and top-row parities with the majority/minority split.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParityProfile {
    pub column_parities: [Parity; N],
    pub top_row_parity: Parity,
    /// Parity held by more than half of the columns; `None` on a 5/5 split.
    pub majority_parity: Option<Parity>,
    /// 0-based columns not holding the majority parity (all odd columns on
    /// a 5/5 split).
    pub minority_columns: Vec<usize>,
}

impl ParityProfile {
    /// Minority columns as a bitmask, bit `i` for column `i`.
    pub fn minority_mask(&self) -> u32 {
        self.minority_columns.iter().fold(0, |m, &c| m | 1 << c)
    }

    /// At most three minority columns.
    pub fn is_decodable(&self) -> bool {
        self.majority_parity.is_some() && self.minority_columns.len() <= 3
    }
}

pub fn parity_profile(v: Array4x10) -> ParityProfile {
    let column_parities: [Parity; N] = std::array::from_fn(|i| v.column_parity(i));
    let odd = column_parities
        .iter()
        .filter(|&&p| p == Parity::Odd)
        .count();
    let majority_parity = match odd.cmp(&(N - odd)) {
        std::cmp::Ordering::Greater => Some(Parity::Odd),
        std::cmp::Ordering::Less => Some(Parity::Even),
        std::cmp::Ordering::Equal => None,
    };
    let minority = majority_parity.map_or(Parity::Odd, Parity::flipped);
    let minority_columns = (0..N).filter(|&i| column_parities[i] == minority).collect();
    ParityProfile {
        column_parities,
        top_row_parity: v.top_row_parity(),
        majority_parity,
        minority_columns,
    }
}

/// Conditions (i), (ii) and the top-row condition of `kind` for one word.
pub fn has_projection(v: BWord, code: &CodeTable, kind: ProjectionKind) -> bool {
    let a = Array4x10(v);
    if !code.contains(proj(a)) {
        return false;
    }
    let p = a.column_parity(0);
    (1..N).all(|i| a.column_parity(i) == p) && a.top_row_parity() == kind.top_row_parity(p)
}

pub fn has_projection_o(v: BWord, code: &CodeTable) -> bool {
    has_projection(v, code, ProjectionKind::O)
}

pub fn has_projection_e(v: BWord, code: &CodeTable) -> bool {
    has_projection(v, code, ProjectionKind::E)
}

/// Cheapest word `u` with `proj(u) = target`, every column of parity
/// `column_parity` and the top row parity required by `kind`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LiftCandidate {
    pub word: BWord,
    /// Hamming distance from the input word.
    pub cost: u32,
    /// More than one word attains `cost`.
    pub tied: bool,
}

/// Minimum-distance lift, without a radius limit.
///
/// Every column has exactly two candidates of the requested parity, and
/// they are complements of each other, so they differ in the top row. A
/// two-state dynamic program over the running top-row parity picks the
/// cheapest combination and counts optimal ones.
pub fn lift_min(
    v: Array4x10,
    target: QWord,
    column_parity: Parity,
    kind: ProjectionKind,
) -> LiftCandidate {
    const INF: u32 = u32::MAX / 2;
    // state[p] = (cost, ways capped at 2, chosen nibbles)
    let mut state: [(u32, u8, [u8; N]); 2] = [(0, 1, [0; N]), (INF, 0, [0; N])];
    let offset = match column_parity {
        Parity::Even => 0,
        Parity::Odd => 2,
    };
    for i in 0..N {
        let pair = &COLUMN_CANDIDATES[target.get(i).bits() as usize][offset..offset + 2];
        let col = v.column(i);
        let mut next: [(u32, u8, [u8; N]); 2] = [(INF, 0, [0; N]), (INF, 0, [0; N])];
        for (p, &(cost, ways, picks)) in state.iter().enumerate() {
            if cost >= INF {
                continue;
            }
            for &cand in pair {
                let top = (cand >> 3) as usize;
                let np = p ^ top;
                let nc = cost + (col ^ cand).count_ones();
                let slot = &mut next[np];
                if nc < slot.0 {
                    let mut picks = picks;
                    picks[i] = cand;
                    *slot = (nc, ways, picks);
                } else if nc == slot.0 {
                    slot.1 = (slot.1 + ways).min(2);
                }
            }
        }
        state = next;
    }
    let want = match kind.top_row_parity(column_parity) {
        Parity::Even => 0,
        Parity::Odd => 1,
    };
    let (cost, ways, picks) = state[want];
    let word = picks
        .iter()
        .enumerate()
        .fold(BWord::ZERO, |w, (i, &n)| w.with_nibble(i, n));
    LiftCandidate {
        word,
        cost,
        tied: ways > 1,
    }
}

/// Lift of a corrected projection back to a codeword within distance 3.
pub fn lift(
    v: Array4x10,
    target: QWord,
    column_parity: Parity,
    kind: ProjectionKind,
) -> Result<BWord, Error> {
    let best = lift_min(v, target, column_parity, kind);
    if best.cost > 3 {
        return Err(Error::NoLiftWithinRadius {
            target: target.to_string(),
            best: best.cost,
        });
    }
    if best.tied {
        return Err(Error::Invariant(format!(
            "two lifts of {target} at distance {} from {}",
            best.cost,
            v.word()
        )));
    }
    Ok(best.word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quaternary::e10_table;

    const SECTION3_ARRAY: &str = "1110110010\n1011010111\n1000001011\n0001100010\n";

    #[test]
    fn candidate_table_matches_projection() {
        for s in 0..4u8 {
            let mut expected: Vec<u8> = (0..16).filter(|&n| PROJ[n as usize] == s).collect();
            let mut got = COLUMN_CANDIDATES[s as usize].to_vec();
            expected.sort();
            got.sort();
            assert_eq!(got, expected);
            let c = COLUMN_CANDIDATES[s as usize];
            assert_eq!(c[0].count_ones() % 2, 0);
            assert_eq!(c[1].count_ones() % 2, 0);
            assert_eq!(c[2].count_ones() % 2, 1);
            assert_eq!(c[3].count_ones() % 2, 1);
            assert_eq!(c[0] ^ c[1], 0xF);
            assert_eq!(c[2] ^ c[3], 0xF);
        }
    }

    #[test]
    fn worked_projection_example() {
        let a: Array4x10 = SECTION3_ARRAY.parse().unwrap();
        assert_eq!(
            a.word(),
            "1110 1000 1100 0101 1001 1100 0010 0100 1111 0110"
                .parse()
                .unwrap()
        );
        assert_eq!(proj(a), "W01wW1w10W".parse().unwrap());
        let p = parity_profile(a);
        let odd: Vec<usize> = (0..N)
            .filter(|&i| p.column_parities[i] == Parity::Odd)
            .collect();
        assert_eq!(odd, vec![0, 1, 6, 7]);
        assert_eq!(p.top_row_parity, Parity::Even);
        assert_eq!(a.to_rows_text(), SECTION3_ARRAY);
    }

    #[test]
    fn zero_array() {
        let a = Array4x10::default();
        assert_eq!(proj(a), QWord::ZERO);
        let p = parity_profile(a);
        assert!(p.column_parities.iter().all(|&q| q == Parity::Even));
        assert_eq!(p.top_row_parity, Parity::Even);
        assert!(p.minority_columns.is_empty());
        assert_eq!(project_column(0b0110), Gf4::OMEGA_BAR);
    }

    #[test]
    fn parse_errors() {
        assert!("0101\n".parse::<Array4x10>().is_err());
        assert!("0000000000\n0000000000\n0000000000\n000000000x\n"
            .parse::<Array4x10>()
            .is_err());
    }

    #[test]
    fn tie_split_has_no_majority() {
        let w = (0..5).fold(BWord::ZERO, |w, i| w.with_nibble(i, 0b1000));
        let p = parity_profile(Array4x10::new(w));
        assert_eq!(p.majority_parity, None);
        assert!(!p.is_decodable());
    }

    #[test]
    fn binmap_images_have_projection_o_and_e() {
        for &c in e10_table().codewords() {
            let b = crate::constructions::binmap(c);
            assert!(has_projection_o(b, e10_table()));
            assert!(has_projection_e(b, e10_table()));
        }
        let eb = crate::constructions::e_b();
        assert!(has_projection_o(eb, e10_table()));
        assert!(!has_projection_e(eb, e10_table()));
        let ec = crate::constructions::e_c();
        assert!(has_projection_e(ec, e10_table()));
        assert!(!has_projection_o(ec, e10_table()));
    }

    #[test]
    fn lift_of_codeword_is_identity() {
        let c = crate::constructions::printed_de_matrix()
            .encode(0xABCDE)
            .unwrap();
        let a = Array4x10::new(c);
        let p = a.column_parity(0);
        assert_eq!(lift(a, proj(a), p, ProjectionKind::O).unwrap(), c);
    }

    #[test]
    fn lift_refuses_far_targets() {
        // 1111 in one column: projection and column parity unchanged,
        // top row flipped, so the nearest valid word is 4 away
        let c = crate::constructions::printed_de_matrix()
            .encode(0x12345)
            .unwrap();
        let v = Array4x10::new(c.with_nibble(3, c.nibble(3) ^ 0xF));
        let p = v.column_parity(0);
        let err = lift(v, proj(v), p, ProjectionKind::O).unwrap_err();
        assert!(matches!(err, Error::NoLiftWithinRadius { best: 4, .. }));
    }
}
