use super::{check_budget, ProjectionSearch};
use crate::gf4::{Gf4, QWord, N};
use crate::quaternary::{e10_table, OrbitClassifier};
use crate::Error;

/// Corrects the projection by trying every fill of the erasures and at
/// most one extra symbol change, accepting the words that belong to one of
/// the eight orbit types of E10 (or are zero).
pub struct OrbitMatch {
    classifier: &'static OrbitClassifier,
}

impl OrbitMatch {
    pub fn new() -> OrbitMatch {
        OrbitMatch {
            classifier: OrbitClassifier::global(),
        }
    }
}

impl Default for OrbitMatch {
    fn default() -> Self {
        OrbitMatch::new()
    }
}

/// Calls `f` on every modification of `y`: arbitrary symbols in the
/// `erasures` columns and, when `max_errors` is 1, optionally one other
/// column changed to a different symbol.
fn for_each_modification(y: QWord, erasures: u32, max_errors: u32, mut f: impl FnMut(QWord)) {
    let cols: Vec<usize> = (0..N).filter(|&i| erasures >> i & 1 == 1).collect();
    let fills = 1usize << (2 * cols.len());
    for fill in 0..fills {
        let mut base = y;
        for (k, &c) in cols.iter().enumerate() {
            base.set(c, Gf4::from_bits((fill >> (2 * k)) as u8 & 3));
        }
        f(base);
        if max_errors == 0 {
            continue;
        }
        for j in (0..N).filter(|&j| erasures >> j & 1 == 0) {
            for s in Gf4::NONZERO {
                f(base.with(j, base.get(j) + s));
            }
        }
    }
}

fn unique(found: Vec<QWord>, y: QWord) -> Result<Option<QWord>, Error> {
    match found.as_slice() {
        [] => Ok(None),
        [w] => Ok(Some(*w)),
        _ => Err(Error::Invariant(format!(
            "{} E10 words within the decoding budget of {y}",
            found.len()
        ))),
    }
}

impl ProjectionSearch for OrbitMatch {
    fn find(&self, y: QWord, erasures: u32, max_errors: u32) -> Result<Option<QWord>, Error> {
        check_budget(erasures, max_errors)?;
        let mut found = Vec::new();
        for_each_modification(y, erasures, max_errors, |w| {
            if self.classifier.matches_some_type(w) && !found.contains(&w) {
                found.push(w);
            }
        });
        unique(found, y)
    }
}

/// Corrects the projection by scanning all 1024 E10 codewords.
#[derive(Default)]
pub struct TableScan;

impl TableScan {
    pub fn new() -> TableScan {
        TableScan
    }
}

impl ProjectionSearch for TableScan {
    fn find(&self, y: QWord, erasures: u32, max_errors: u32) -> Result<Option<QWord>, Error> {
        find_closest_in_e10(y, erasures, max_errors)
    }
}

/// The unique E10 codeword agreeing with `y` outside the `erasures` mask in
/// all but at most `max_errors` positions. Requires `2·max_errors + ε < 4`.
pub fn find_closest_in_e10(
    y: QWord,
    erasures: u32,
    max_errors: u32,
) -> Result<Option<QWord>, Error> {
    check_budget(erasures, max_errors)?;
    let found: Vec<QWord> = e10_table()
        .codewords()
        .iter()
        .copied()
        .filter(|c| c.distance_outside(y, erasures) <= max_errors)
        .collect();
    unique(found, y)
}
