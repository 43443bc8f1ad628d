//! Bounded-distance decoders for the E10-based [40,20,8] codes.
//!
//! Every projection decoder follows the same steps: read the column
//! parities to pick a case (I–IV) and the erasure columns, correct the
//! projection inside E10 within that case's error budget, and lift the
//! corrected projection back to the unique nearby binary codeword. The
//! decoders differ only in how the projection is corrected, which is the
//! [`ProjectionSearch`] strategy they are built with. All decoders, plus the
//! exhaustive oracle, are registered by name in a [`DecoderRegistry`].

mod representation;
mod syndrome;

pub use representation::{find_closest_in_e10, OrbitMatch, TableScan};
pub use syndrome::{solve_syndrome, syndrome, ParityCheckMatrix, Syndrome, SyndromeSolve};

use std::fmt;
use std::sync::OnceLock;

use crate::constructions::BWord;
use crate::gf4::{QWord, N};
use crate::oracle::OracleDecoder;
use crate::projection::{
    self, lift_min, parity_profile, Array4x10, Parity, ParityProfile, ProjectionKind,
};
use crate::{CodeVariant, Error};

/// What the decoders print when they give up.
pub const FAILURE_MESSAGE: &str = "more than three errors occurred";

/// Column-parity split of a received word.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Case {
    /// `[10; 0]`: all columns agree.
    I,
    /// `[9; 1]`.
    II,
    /// `[8; 2]`.
    III,
    /// `[7; 3]`.
    IV,
}

impl Case {
    pub fn from_minority(count: usize) -> Option<Case> {
        match count {
            0 => Some(Case::I),
            1 => Some(Case::II),
            2 => Some(Case::III),
            3 => Some(Case::IV),
            _ => None,
        }
    }

    pub fn minority(self) -> usize {
        match self {
            Case::I => 0,
            Case::II => 1,
            Case::III => 2,
            Case::IV => 3,
        }
    }

    /// Errors at unknown positions the E10 search may correct on top of the
    /// erasures while keeping `2υ + ε < 4`.
    pub fn error_budget(self) -> u32 {
        match self {
            Case::I | Case::II => 1,
            Case::III | Case::IV => 0,
        }
    }

    pub fn roman(self) -> &'static str {
        match self {
            Case::I => "I",
            Case::II => "II",
            Case::III => "III",
            Case::IV => "IV",
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.minority();
        write!(f, "{} [{}; {}\u{0304}]", self.roman(), N - m, m)
    }
}

/// One row of the error-pattern table: the per-column error counts in the
/// majority columns (`unbarred`) and in the minority columns (`barred`),
/// and the resulting errors/erasures seen by E10.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ErrorPattern {
    pub case: Case,
    pub subcase: &'static str,
    pub unbarred: &'static [u8],
    pub barred: &'static [u8],
    /// υ: errors at unknown positions in the E10 word.
    pub errors: u32,
    /// ε: erasures in the E10 word.
    pub erasures: u32,
    /// `2υ + ε < 4`.
    pub unique_in_e10: bool,
}

impl ErrorPattern {
    /// Number of bit errors in the binary word.
    pub fn weight(&self) -> u32 {
        self.unbarred
            .iter()
            .chain(self.barred)
            .map(|&w| w as u32)
            .sum()
    }

    pub fn label(&self) -> String {
        fn list(ws: &[u8], bar: bool) -> String {
            if ws.is_empty() {
                return if bar { "0\u{0304}".into() } else { "0".into() };
            }
            ws.iter()
                .map(|w| {
                    if bar {
                        format!("{w}\u{0304}")
                    } else {
                        w.to_string()
                    }
                })
                .collect::<Vec<_>>()
                .join(",")
        }
        format!(
            "({};{})",
            list(self.unbarred, false),
            list(self.barred, true)
        )
    }
}

macro_rules! pattern {
    ($case:ident, $sub:literal, [$($u:literal),*], [$($b:literal),*], $e:literal, $x:literal, $ok:literal) => {
        ErrorPattern {
            case: Case::$case,
            subcase: $sub,
            unbarred: &[$($u),*],
            barred: &[$($b),*],
            errors: $e,
            erasures: $x,
            unique_in_e10: $ok,
        }
    };
}

/// Every error pattern listed for the four parity cases.
pub static ERROR_PATTERNS: [ErrorPattern; 21] = [
    pattern!(I, "i", [], [], 0, 0, true),
    pattern!(I, "ii", [2], [], 1, 0, true),
    pattern!(I, "iii", [4], [], 1, 0, true),
    pattern!(I, "iv", [2, 2], [], 2, 0, false),
    pattern!(I, "v", [2, 2, 2], [], 3, 0, false),
    pattern!(II, "i", [], [1], 0, 1, true),
    pattern!(II, "ii", [], [3], 0, 1, true),
    pattern!(II, "iii", [2], [1], 1, 1, true),
    pattern!(II, "iv", [2, 2], [1], 2, 1, false),
    pattern!(II, "v", [2, 2, 2], [1], 3, 1, false),
    pattern!(III, "i", [], [1, 1], 0, 2, true),
    pattern!(III, "ii", [], [1, 3], 0, 2, true),
    pattern!(III, "iii", [2], [1, 1], 1, 2, false),
    pattern!(III, "iv", [2], [1, 3], 1, 2, false),
    pattern!(III, "v", [2, 2], [1, 1], 2, 2, false),
    pattern!(IV, "i", [], [1, 1, 1], 0, 3, true),
    pattern!(IV, "ii", [], [1, 1, 3], 0, 3, true),
    pattern!(IV, "iii", [2], [1, 1, 1], 1, 3, false),
    pattern!(IV, "iv", [2], [1, 3, 3], 1, 3, false),
    pattern!(IV, "v", [2], [1, 1, 3], 1, 3, false),
    pattern!(IV, "vi", [2, 2], [1, 1, 1], 2, 3, false),
];

/// Looks up the pattern of a known error word relative to a parity case.
pub fn error_pattern_of(case: Case, error: BWord) -> Option<&'static ErrorPattern> {
    let mut unbarred = Vec::new();
    let mut barred = Vec::new();
    for i in 0..N {
        let w = error.nibble(i).count_ones() as u8;
        match w {
            0 => {}
            w if w % 2 == 0 => unbarred.push(w),
            w => barred.push(w),
        }
    }
    unbarred.sort_unstable();
    barred.sort_unstable();
    if barred.len() != case.minority() {
        return None;
    }
    ERROR_PATTERNS
        .iter()
        .find(|p| p.case == case && p.unbarred == unbarred && p.barred == barred)
}

/// The parity case of a received word.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CaseLabel {
    pub case: Case,
    pub majority_parity: Parity,
    /// 0-based minority columns; their E10 symbols are erasures.
    pub erasure_columns: Vec<usize>,
    /// Matched after a successful decode.
    pub pattern: Option<&'static ErrorPattern>,
}

impl CaseLabel {
    /// `(υ, ε)` searched in E10.
    pub fn budget(&self) -> (u32, usize) {
        (self.case.error_budget(), self.erasure_columns.len())
    }

    pub fn erasure_mask(&self) -> u32 {
        self.erasure_columns.iter().fold(0, |m, &c| m | 1 << c)
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.case)?;
        if let Some(p) = self.pattern {
            write!(f, "-({}) {}", p.subcase, p.label())?;
        }
        Ok(())
    }
}

/// Case of a received word, or `None` when four or more columns disagree
/// with the majority.
pub fn classify_case(v: Array4x10) -> Option<CaseLabel> {
    case_from_profile(&parity_profile(v))
}

fn case_from_profile(profile: &ParityProfile) -> Option<CaseLabel> {
    let majority_parity = profile.majority_parity?;
    let case = Case::from_minority(profile.minority_columns.len())?;
    Some(CaseLabel {
        case,
        majority_parity,
        erasure_columns: profile.minority_columns.clone(),
        pattern: None,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DecodeOutcome {
    Corrected {
        codeword: BWord,
        corrected_projection: QWord,
        /// Bits that differ between the received word and `codeword`.
        flipped: BWord,
    },
    /// No codeword within distance 3.
    Failure,
}

impl DecodeOutcome {
    pub fn codeword(&self) -> Option<BWord> {
        match *self {
            DecodeOutcome::Corrected { codeword, .. } => Some(codeword),
            DecodeOutcome::Failure => None,
        }
    }

    pub fn corrected_projection(&self) -> Option<QWord> {
        match *self {
            DecodeOutcome::Corrected {
                corrected_projection,
                ..
            } => Some(corrected_projection),
            DecodeOutcome::Failure => None,
        }
    }

    /// 1-based coordinates that were flipped.
    pub fn flipped_positions(&self) -> Vec<usize> {
        match *self {
            DecodeOutcome::Corrected { flipped, .. } => flipped.support(),
            DecodeOutcome::Failure => Vec::new(),
        }
    }

    pub fn is_failure(&self) -> bool {
        matches!(self, DecodeOutcome::Failure)
    }
}

/// Everything a decoder computed for one received word.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DecodeReport {
    pub received: BWord,
    pub profile: ParityProfile,
    pub case: Option<CaseLabel>,
    pub projection: QWord,
    /// Set by the syndrome decoder.
    pub syndrome: Option<Syndrome>,
    pub outcome: DecodeOutcome,
}

impl DecodeReport {
    fn new(received: BWord) -> DecodeReport {
        let array = Array4x10::new(received);
        let profile = parity_profile(array);
        DecodeReport {
            received,
            case: case_from_profile(&profile),
            profile,
            projection: projection::proj(array),
            syndrome: None,
            outcome: DecodeOutcome::Failure,
        }
    }

    fn corrected(mut self, codeword: BWord) -> DecodeReport {
        let flipped = self.received ^ codeword;
        if let Some(case) = &mut self.case {
            case.pattern = error_pattern_of(case.case, flipped);
        }
        self.outcome = DecodeOutcome::Corrected {
            codeword,
            corrected_projection: projection::proj(Array4x10::new(codeword)),
            flipped,
        };
        self
    }
}

/// A decoder selectable by name.
pub trait Decoder: Send + Sync {
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    fn variant(&self) -> CodeVariant;

    /// Decodes one received word. Errors only on internal invariant
    /// violations; "more than three errors" is a normal outcome.
    fn decode(&self, received: BWord) -> Result<DecodeReport, Error>;

    /// Decodes and keeps only the outcome.
    fn decode_outcome(&self, received: BWord) -> Result<DecodeOutcome, Error> {
        self.decode(received).map(|r| r.outcome)
    }
}

/// How a projection decoder finds the corrected E10 word.
pub trait ProjectionSearch: Send + Sync {
    /// The unique E10 codeword that agrees with `y` outside the erasure
    /// columns (bitmask) except in at most `max_errors` positions.
    fn find(&self, y: QWord, erasures: u32, max_errors: u32) -> Result<Option<QWord>, Error>;

    /// Syndrome of `y`, for strategies that compute one.
    fn syndrome(&self, _y: QWord) -> Option<Syndrome> {
        None
    }
}

pub(crate) fn check_budget(erasures: u32, max_errors: u32) -> Result<(), Error> {
    let e = erasures.count_ones() as usize;
    if 2 * max_errors as usize + e >= 4 {
        return Err(Error::BudgetExceeded {
            erasures: e,
            errors: max_errors,
        });
    }
    Ok(())
}

/// Parity-case projection decoder around a [`ProjectionSearch`].
pub struct ProjectionDecoder<S> {
    name: &'static str,
    description: &'static str,
    variant: CodeVariant,
    search: S,
}

impl<S: ProjectionSearch> ProjectionDecoder<S> {
    pub fn new(
        name: &'static str,
        description: &'static str,
        variant: CodeVariant,
        search: S,
    ) -> Self {
        ProjectionDecoder {
            name,
            description,
            variant,
            search,
        }
    }
}

impl<S: ProjectionSearch> Decoder for ProjectionDecoder<S> {
    fn name(&self) -> &'static str {
        self.name
    }

    fn description(&self) -> &'static str {
        self.description
    }

    fn variant(&self) -> CodeVariant {
        self.variant
    }

    fn decode(&self, received: BWord) -> Result<DecodeReport, Error> {
        let mut report = DecodeReport::new(received);
        report.syndrome = self.search.syndrome(report.projection);
        let Some(case) = &report.case else {
            return Ok(report);
        };
        let Some(target) = self.search.find(
            report.projection,
            case.erasure_mask(),
            case.case.error_budget(),
        )?
        else {
            return Ok(report);
        };
        let lifted = lift_min(
            Array4x10::new(received),
            target,
            case.majority_parity,
            self.variant.projection_kind(),
        );
        if lifted.cost > 3 {
            return Ok(report);
        }
        if lifted.tied {
            return Err(Error::Invariant(format!(
                "ambiguous lift of {target} for received word {received}"
            )));
        }
        Ok(report.corrected(lifted.word))
    }
}

pub type RepresentationDecoder = ProjectionDecoder<OrbitMatch>;
pub type SyndromeDecoder = ProjectionDecoder<SyndromeSolve>;
pub type ScanDecoder = ProjectionDecoder<TableScan>;

pub fn representation_decoder(variant: CodeVariant) -> RepresentationDecoder {
    ProjectionDecoder::new(
        "repr",
        "representation decoding: match orbit types of E10 under its monomial group",
        variant,
        OrbitMatch::new(),
    )
}

pub fn syndrome_decoder(variant: CodeVariant) -> SyndromeDecoder {
    ProjectionDecoder::new(
        "synd",
        "syndrome decoding: solve H·conj(e) = H·conj(y) over the erasure columns",
        variant,
        SyndromeSolve::new(),
    )
}

pub fn scan_decoder(variant: CodeVariant) -> ScanDecoder {
    ProjectionDecoder::new(
        "scan",
        "projection decoding with a constrained scan of all 1024 E10 codewords",
        variant,
        TableScan::new(),
    )
}

/// Decoders keyed by name, in registration order.
pub struct DecoderRegistry {
    decoders: Vec<Box<dyn Decoder>>,
}

impl DecoderRegistry {
    pub fn empty() -> DecoderRegistry {
        DecoderRegistry {
            decoders: Vec::new(),
        }
    }

    /// `repr`, `synd`, `scan` and `oracle` for one code.
    pub fn with_defaults(variant: CodeVariant) -> DecoderRegistry {
        let mut r = DecoderRegistry::empty();
        r.register(Box::new(representation_decoder(variant)));
        r.register(Box::new(syndrome_decoder(variant)));
        r.register(Box::new(scan_decoder(variant)));
        r.register(Box::new(OracleDecoder::new(variant)));
        r
    }

    /// Adds a decoder, replacing any decoder already registered under the
    /// same name.
    pub fn register(&mut self, decoder: Box<dyn Decoder>) {
        match self
            .decoders
            .iter()
            .position(|d| d.name() == decoder.name())
        {
            Some(i) => self.decoders[i] = decoder,
            None => self.decoders.push(decoder),
        }
    }

    pub fn get(&self, name: &str) -> Result<&dyn Decoder, Error> {
        self.decoders
            .iter()
            .find(|d| d.name() == name)
            .map(|d| d.as_ref())
            .ok_or_else(|| Error::UnknownDecoder(name.to_string()))
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.decoders.iter().map(|d| d.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn Decoder> {
        self.decoders.iter().map(|d| d.as_ref())
    }
}

fn shared<T: Send + Sync>(cell: &'static OnceLock<T>, init: impl FnOnce() -> T) -> &'static T {
    cell.get_or_init(init)
}

/// Representation decoding of the doubly-even code.
pub fn represent_decode(v: Array4x10) -> Result<DecodeReport, Error> {
    static D: OnceLock<RepresentationDecoder> = OnceLock::new();
    shared(&D, || representation_decoder(CodeVariant::DoublyEven)).decode(v.word())
}

/// Syndrome decoding of the doubly-even code.
pub fn syndrome_decode(v: Array4x10) -> Result<DecodeReport, Error> {
    static D: OnceLock<SyndromeDecoder> = OnceLock::new();
    shared(&D, || syndrome_decoder(CodeVariant::DoublyEven)).decode(v.word())
}

/// Representation decoding of the singly-even code (top row always even).
pub fn decode_se(v: Array4x10) -> Result<DecodeReport, Error> {
    static D: OnceLock<RepresentationDecoder> = OnceLock::new();
    shared(&D, || representation_decoder(CodeVariant::SinglyEven)).decode(v.word())
}

impl ProjectionKind {
    /// The binary code with this projection onto E10.
    pub fn variant(self) -> CodeVariant {
        match self {
            ProjectionKind::O => CodeVariant::DoublyEven,
            ProjectionKind::E => CodeVariant::SinglyEven,
        }
    }
}
