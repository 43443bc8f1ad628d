//! Arithmetic in GF(4) = {0, 1, ω, ω̄} and length-10 quaternary words.
//!
//! Elements are stored in two bits: `0 = 00`, `1 = 01`, `ω = 10`, `ω̄ = 11`.
//! With this encoding addition is XOR, the trace is the high bit and
//! conjugation (the Frobenius map `a ↦ a²`) flips the low bit of ω and ω̄.
//! A [`QWord`] packs ten symbols into the low 20 bits of a `u32`, so adding
//! two words is a single XOR.

use std::fmt;
use std::ops::{Add, AddAssign, Mul};
use std::str::FromStr;

use crate::Error;

/// Length of every quaternary word in this crate.
pub const N: usize = 10;

/// Mask of the 20 bits used by a packed [`QWord`].
pub const QWORD_MASK: u32 = (1 << (2 * N)) - 1;

const LOW_BITS: u32 = 0x5_5555;

/// An element of GF(4).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Gf4(u8);

static MUL_TABLE: [[u8; 4]; 4] = [
    [0, 0, 0, 0],
    [0, 1, 2, 3],
    // ω·ω = ω̄, ω·ω̄ = 1
    [0, 2, 3, 1],
    // ω̄·ω = 1, ω̄·ω̄ = ω
    [0, 3, 1, 2],
];

impl Gf4 {
    pub const ZERO: Gf4 = Gf4(0);
    pub const ONE: Gf4 = Gf4(1);
    pub const OMEGA: Gf4 = Gf4(2);
    pub const OMEGA_BAR: Gf4 = Gf4(3);

    /// All four elements in encoding order.
    pub const ALL: [Gf4; 4] = [Gf4::ZERO, Gf4::ONE, Gf4::OMEGA, Gf4::OMEGA_BAR];
    /// The multiplicative group.
    pub const NONZERO: [Gf4; 3] = [Gf4::ONE, Gf4::OMEGA, Gf4::OMEGA_BAR];

    /// Builds an element from its 2-bit code. Only the low two bits are used.
    #[inline]
    pub const fn from_bits(bits: u8) -> Gf4 {
        Gf4(bits & 3)
    }

    #[inline]
    pub const fn bits(self) -> u8 {
        self.0
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// `ā = a²`: swaps ω and ω̄, fixes 0 and 1.
    #[inline]
    pub fn conj(self) -> Gf4 {
        Gf4(self.0 ^ (self.0 >> 1))
    }

    /// `Tr(a) = a + a²`, which is 1 exactly for ω and ω̄.
    #[inline]
    pub fn trace(self) -> u8 {
        self.0 >> 1
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(self) -> Option<Gf4> {
        match self.0 {
            0 => None,
            // a⁻¹ = a² = ā in GF(4)*
            _ => Some(self.conj()),
        }
    }

    pub fn to_char(self) -> char {
        ['0', '1', 'w', 'W'][self.0 as usize]
    }

    pub fn from_char(c: char) -> Option<Gf4> {
        match c {
            '0' => Some(Gf4::ZERO),
            '1' => Some(Gf4::ONE),
            'w' => Some(Gf4::OMEGA),
            'W' => Some(Gf4::OMEGA_BAR),
            _ => None,
        }
    }
}

// addition in characteristic 2 is XOR
#[allow(clippy::suspicious_arithmetic_impl)]
impl Add for Gf4 {
    type Output = Gf4;
    #[inline]
    fn add(self, rhs: Gf4) -> Gf4 {
        Gf4(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_op_assign_impl)]
impl AddAssign for Gf4 {
    fn add_assign(&mut self, rhs: Gf4) {
        self.0 ^= rhs.0;
    }
}

impl Mul for Gf4 {
    type Output = Gf4;
    fn mul(self, rhs: Gf4) -> Gf4 {
        Gf4(MUL_TABLE[self.0 as usize][rhs.0 as usize])
    }
}

impl fmt::Debug for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(["0", "1", "ω", "ω̄"][self.0 as usize])
    }
}

impl fmt::Display for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// Hermitian inner product `Σ xᵢ ȳᵢ` over arbitrary equal-length slices.
pub fn hermitian_inner(x: &[Gf4], y: &[Gf4]) -> Result<Gf4, Error> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    Ok(x.iter()
        .zip(y)
        .fold(Gf4::ZERO, |acc, (&a, &b)| acc + a * b.conj()))
}

/// Trace inner product `Σ Tr(xᵢ ȳᵢ)` over arbitrary equal-length slices.
pub fn trace_inner(x: &[Gf4], y: &[Gf4]) -> Result<u8, Error> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    Ok(x.iter()
        .zip(y)
        .fold(0, |acc, (&a, &b)| acc ^ (a * b.conj()).trace()))
}

/// A length-10 word over GF(4), symbol `i` stored in bits `2i..2i+2`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct QWord(u32);

impl QWord {
    pub const ZERO: QWord = QWord(0);

    /// Wraps a packed value. Bits above the 20th are discarded.
    #[inline]
    pub const fn from_packed(bits: u32) -> QWord {
        QWord(bits & QWORD_MASK)
    }

    #[inline]
    pub const fn packed(self) -> u32 {
        self.0
    }

    pub fn from_symbols(symbols: [Gf4; N]) -> QWord {
        symbols
            .iter()
            .enumerate()
            .fold(QWord::ZERO, |w, (i, &s)| w.with(i, s))
    }

    pub fn symbols(self) -> [Gf4; N] {
        std::array::from_fn(|i| self.get(i))
    }

    /// Symbol at 0-based position `i`.
    #[inline]
    pub fn get(self, i: usize) -> Gf4 {
        debug_assert!(i < N);
        Gf4::from_bits((self.0 >> (2 * i)) as u8)
    }

    #[inline]
    pub fn set(&mut self, i: usize, s: Gf4) {
        debug_assert!(i < N);
        self.0 = (self.0 & !(3 << (2 * i))) | ((s.bits() as u32) << (2 * i));
    }

    #[inline]
    pub fn with(mut self, i: usize, s: Gf4) -> QWord {
        self.set(i, s);
        self
    }

    /// Mask of the nonzero symbol positions, one bit per position.
    #[inline]
    pub fn support_mask(self) -> u32 {
        let nz = (self.0 | (self.0 >> 1)) & LOW_BITS;
        // compress every other bit
        let mut out = 0;
        for i in 0..N {
            out |= ((nz >> (2 * i)) & 1) << i;
        }
        out
    }

    /// Number of nonzero symbols.
    #[inline]
    pub fn weight(self) -> u32 {
        ((self.0 | (self.0 >> 1)) & LOW_BITS).count_ones()
    }

    /// Number of positions where the words differ.
    #[inline]
    pub fn distance(self, other: QWord) -> u32 {
        (self ^ other).weight()
    }

    /// Number of positions outside `mask` (one bit per position) where the
    /// words differ.
    #[inline]
    pub fn distance_outside(self, other: QWord, mask: u32) -> u32 {
        let d = self.0 ^ other.0;
        let nz = (d | (d >> 1)) & LOW_BITS & !spread_mask(mask);
        nz.count_ones()
    }

    /// Multiplies every symbol by `k`.
    pub fn scale(self, k: Gf4) -> QWord {
        match k.bits() {
            0 => QWord::ZERO,
            1 => self,
            _ => QWord::from_symbols(self.symbols().map(|s| s * k)),
        }
    }

    /// Component-wise conjugate.
    pub fn conj(self) -> QWord {
        // conj flips the low bit where the high bit is set
        QWord(self.0 ^ ((self.0 >> 1) & LOW_BITS))
    }

    pub fn hermitian_inner(self, other: QWord) -> Gf4 {
        (0..N).fold(Gf4::ZERO, |acc, i| acc + self.get(i) * other.get(i).conj())
    }

    pub fn trace_inner(self, other: QWord) -> u8 {
        (0..N).fold(0, |acc, i| {
            acc ^ (self.get(i) * other.get(i).conj()).trace()
        })
    }
}

/// Expands a per-position mask to the two-bits-per-symbol layout.
#[inline]
pub(crate) fn spread_mask(mask: u32) -> u32 {
    let mut out = 0;
    for i in 0..N {
        if mask >> i & 1 == 1 {
            out |= 3 << (2 * i);
        }
    }
    out
}

impl std::ops::BitXor for QWord {
    type Output = QWord;
    #[inline]
    fn bitxor(self, rhs: QWord) -> QWord {
        QWord(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Add for QWord {
    type Output = QWord;
    #[inline]
    fn add(self, rhs: QWord) -> QWord {
        QWord(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_op_assign_impl)]
impl AddAssign for QWord {
    #[inline]
    fn add_assign(&mut self, rhs: QWord) {
        self.0 ^= rhs.0;
    }
}

impl fmt::Display for QWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.symbols() {
            write!(f, "{}", s.to_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for QWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QWord({self})")
    }
}

impl FromStr for QWord {
    type Err = Error;

    /// Parses ten symbols over `0 1 w W`. Whitespace is ignored.
    fn from_str(s: &str) -> Result<QWord, Error> {
        let mut symbols = Vec::with_capacity(N);
        for c in s.chars().filter(|c| !c.is_whitespace()) {
            let sym = Gf4::from_char(c).ok_or_else(|| {
                Error::Parse(format!(
                    "invalid GF(4) symbol {c:?} in {s:?}; expected one of 0 1 w W"
                ))
            })?;
            symbols.push(sym);
        }
        let symbols: [Gf4; N] = symbols.try_into().map_err(|v: Vec<Gf4>| {
            Error::Parse(format!(
                "quaternary word needs {N} symbols, got {}",
                v.len()
            ))
        })?;
        Ok(QWord::from_symbols(symbols))
    }
}
