use std::sync::OnceLock;

use super::{check_budget, ProjectionSearch};
use crate::gf4::{Gf4, QWord, N};
use crate::quaternary::build_e10;
use crate::Error;

pub const CHECKS: usize = 5;

pub type Syndrome = [Gf4; CHECKS];

/// Parity-check matrix of E10. Since E10 is Hermitian self-dual, its five
/// GF(4)-linear generator rows also serve as checks: `c ∈ E10` exactly
/// when `H·conj(c)ᵀ = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityCheckMatrix {
    rows: [QWord; CHECKS],
    // column i packed as a 5-symbol word, symbol j = H[j][i]
    columns: [QWord; N],
}

impl ParityCheckMatrix {
    pub fn new(rows: [QWord; CHECKS]) -> ParityCheckMatrix {
        let columns = std::array::from_fn(|i| {
            (0..CHECKS).fold(QWord::ZERO, |c, j| c.with(j, rows[j].get(i)))
        });
        ParityCheckMatrix { rows, columns }
    }

    pub fn e10() -> &'static ParityCheckMatrix {
        static H: OnceLock<ParityCheckMatrix> = OnceLock::new();
        H.get_or_init(|| {
            let g = build_e10();
            let rows = std::array::from_fn(|j| g.linear_rows()[j]);
            ParityCheckMatrix::new(rows)
        })
    }

    pub fn rows(&self) -> &[QWord; CHECKS] {
        &self.rows
    }

    pub fn column(&self, i: usize) -> Syndrome {
        unpack(self.columns[i])
    }

    /// `H·conj(y)ᵀ`.
    pub fn syndrome(&self, y: QWord) -> Syndrome {
        std::array::from_fn(|j| self.rows[j].hermitian_inner(y))
    }

    /// Error word `e` with `H·conj(e)ᵀ = s`, supported on the erasure
    /// columns plus at most `max_errors` (0 or 1) further columns. Fails
    /// with an invariant error if the solution is not unique.
    pub fn solve(
        &self,
        s: Syndrome,
        erasures: u32,
        max_errors: u32,
    ) -> Result<Option<QWord>, Error> {
        check_budget(erasures, max_errors)?;
        let target = pack(s);
        let cols: Vec<usize> = (0..N).filter(|&i| erasures >> i & 1 == 1).collect();
        let mut found: Option<QWord> = None;
        let mut record = |e: QWord| -> Result<(), Error> {
            match found {
                Some(prev) if prev != e => Err(Error::Invariant(format!(
                    "syndrome {} has two solutions {prev} and {e}",
                    pack(s)
                ))),
                _ => {
                    found = Some(e);
                    Ok(())
                }
            }
        };
        for fill in 0..1usize << (2 * cols.len()) {
            // k_i = conj(e_i) on the erasures
            let mut acc = QWord::ZERO;
            let mut e = QWord::ZERO;
            for (n, &c) in cols.iter().enumerate() {
                let k = Gf4::from_bits((fill >> (2 * n)) as u8 & 3);
                acc += self.columns[c].scale(k);
                e.set(c, k.conj());
            }
            if acc == target {
                record(e)?;
            }
            if max_errors == 0 {
                continue;
            }
            let rest = acc + target;
            for j in (0..N).filter(|&j| erasures >> j & 1 == 0) {
                for k in Gf4::NONZERO {
                    if self.columns[j].scale(k) == rest {
                        record(e.with(j, k.conj()))?;
                    }
                }
            }
        }
        Ok(found)
    }
}

fn pack(s: Syndrome) -> QWord {
    s.iter()
        .enumerate()
        .fold(QWord::ZERO, |w, (j, &x)| w.with(j, x))
}

fn unpack(w: QWord) -> Syndrome {
    std::array::from_fn(|j| w.get(j))
}

/// Syndrome of `y` with respect to E10.
pub fn syndrome(y: QWord) -> Syndrome {
    ParityCheckMatrix::e10().syndrome(y)
}

/// Error word for syndrome `s` with respect to E10.
pub fn solve_syndrome(s: Syndrome, erasures: u32, max_errors: u32) -> Result<Option<QWord>, Error> {
    ParityCheckMatrix::e10().solve(s, erasures, max_errors)
}

/// Corrects the projection by solving the syndrome equation over the
/// erasure columns and at most one unknown error position.
pub struct SyndromeSolve {
    h: &'static ParityCheckMatrix,
}

impl SyndromeSolve {
    pub fn new() -> SyndromeSolve {
        SyndromeSolve {
            h: ParityCheckMatrix::e10(),
        }
    }
}

impl Default for SyndromeSolve {
    fn default() -> Self {
        SyndromeSolve::new()
    }
}

impl ProjectionSearch for SyndromeSolve {
    fn find(&self, y: QWord, erasures: u32, max_errors: u32) -> Result<Option<QWord>, Error> {
        let e = self.h.solve(self.h.syndrome(y), erasures, max_errors)?;
        Ok(e.map(|e| y + e))
    }

    fn syndrome(&self, y: QWord) -> Option<Syndrome> {
        Some(self.h.syndrome(y))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quaternary::e10_table;

    fn q(s: &str) -> QWord {
        s.parse().unwrap()
    }

    fn g(s: &str) -> Syndrome {
        let w: Vec<Gf4> = s.chars().map(|c| Gf4::from_char(c).unwrap()).collect();
        w.try_into().unwrap()
    }

    #[test]
    fn codewords_have_zero_syndrome() {
        for &c in e10_table().codewords() {
            assert_eq!(syndrome(c), [Gf4::ZERO; CHECKS]);
        }
        let sampled = (0..1u32 << 20)
            .step_by(97)
            .map(QWord::from_packed)
            .filter(|&w| syndrome(w) == [Gf4::ZERO; CHECKS]);
        for w in sampled {
            assert!(e10_table().contains(w), "{w}");
        }
    }

    #[test]
    fn worked_syndromes() {
        assert_eq!(syndrome(q("10101001ww")), g("0001w"));
        assert_eq!(syndrome(q("10W1ww10wW")), g("wW101"));
        assert_eq!(syndrome(q("wwWWww1100")), g("0000W"));
        assert_eq!(syndrome(q("WwWw10wWwW")), g("0000w"));
    }

    #[test]
    fn worked_solutions() {
        let e = solve_syndrome(g("0001w"), 0, 1).unwrap().unwrap();
        assert_eq!(e, q("0000000010"));
        let e = solve_syndrome(g("wW101"), 0b1_0000, 1).unwrap().unwrap();
        assert_eq!(e, q("000W100000"));
        let e = solve_syndrome(g("0000W"), 0b11_0000, 0).unwrap().unwrap();
        assert_eq!(e, q("0000ww0000"));
        let e = solve_syndrome(g("0000w"), 0b11_0010, 0).unwrap().unwrap();
        assert_eq!(e, q("0000WW0000"));
    }

    #[test]
    fn unsolvable_syndrome() {
        // a weight-2 error outside any erasure cannot be explained by one
        let y = q("1100000000");
        assert_eq!(SyndromeSolve::new().find(y, 0, 1).unwrap(), None);
    }
}
