//! Human-readable decoding transcripts in the 4×10 array layout.
//!
//! Rows are labelled `0 1 w W` (ω written `w`, ω̄ written `W`), columns 1
//! to 10, and the projection is printed underneath. In the corrected array
//! every flipped bit is followed by `*`.

use std::fmt::Write;

use crate::constructions::BWord;
use crate::decoders::{DecodeOutcome, DecodeReport, FAILURE_MESSAGE};
use crate::gf4::{QWord, N};
use crate::projection::{Array4x10, Parity, ROW_LABELS};
use crate::CodeVariant;

/// A decode result together with how it was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transcript {
    pub algorithm: String,
    pub variant: CodeVariant,
    pub report: DecodeReport,
}

impl Transcript {
    pub fn new(algorithm: &str, variant: CodeVariant, report: DecodeReport) -> Transcript {
        Transcript {
            algorithm: algorithm.to_string(),
            variant,
            report,
        }
    }

    pub fn outcome(&self) -> DecodeOutcome {
        self.report.outcome
    }

    /// One line: the codeword and flipped positions, or the failure message.
    pub fn render_plain(&self) -> String {
        match self.report.outcome {
            DecodeOutcome::Corrected { codeword, .. } => {
                format!(
                    "corrected {} {} flipped {}",
                    codeword.to_hex(),
                    codeword,
                    positions(&self.report.outcome.flipped_positions())
                )
            }
            DecodeOutcome::Failure => FAILURE_MESSAGE.to_string(),
        }
    }

    pub fn render_verbose(&self) -> String {
        let r = &self.report;
        let mut out = String::new();
        let _ = writeln!(out, "algorithm: {}", self.algorithm);
        let _ = writeln!(out, "code: {}", self.variant.short_name());
        let _ = writeln!(out, "received: {}", r.received.to_hex());
        out.push_str(&render_array(r.received, BWord::ZERO, "y", r.projection));
        let parities: String = r
            .profile
            .column_parities
            .iter()
            .map(|p| format!(" {} ", parity_char(*p)))
            .collect();
        let _ = writeln!(out, "parity{}", parities.trim_end());
        let _ = writeln!(out, "top row: {}", r.profile.top_row_parity);
        match &r.case {
            Some(c) => {
                let _ = writeln!(out, "case: {}", c.case);
                let cols: Vec<usize> = c.erasure_columns.iter().map(|i| i + 1).collect();
                let _ = writeln!(out, "erasures: {}", positions(&cols));
            }
            None => {
                let _ = writeln!(
                    out,
                    "case: none ({} odd columns)",
                    odd_count(&r.profile.column_parities)
                );
            }
        }
        if let Some(s) = r.syndrome {
            let s: Vec<String> = s.iter().map(|x| x.to_char().to_string()).collect();
            let _ = writeln!(out, "syndrome: ({})", s.join(","));
        }
        match r.outcome {
            DecodeOutcome::Corrected {
                codeword,
                corrected_projection,
                flipped,
            } => {
                let _ = writeln!(out, "corrected:");
                out.push_str(&render_array(codeword, flipped, "y'", corrected_projection));
                let _ = writeln!(out, "flipped: {}", positions(&flipped.support()));
                if let Some(p) = r.case.as_ref().and_then(|c| c.pattern) {
                    let _ = writeln!(
                        out,
                        "subcase: {}-({}) {}",
                        p.case.roman(),
                        p.subcase,
                        p.label()
                    );
                }
                let _ = writeln!(out, "codeword: {}", codeword.to_hex());
            }
            DecodeOutcome::Failure => {
                let _ = writeln!(out, "{FAILURE_MESSAGE}");
            }
        }
        out
    }
}

fn parity_char(p: Parity) -> char {
    match p {
        Parity::Even => 'e',
        Parity::Odd => 'o',
    }
}

fn odd_count(ps: &[Parity; N]) -> usize {
    ps.iter().filter(|&&p| p == Parity::Odd).count()
}

fn positions(ps: &[usize]) -> String {
    if ps.is_empty() {
        return "none".into();
    }
    ps.iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// The array of `word` with the bits set in `marked` starred, followed by
/// a projection row.
pub fn render_array(word: BWord, marked: BWord, proj_label: &str, projection: QWord) -> String {
    let a = Array4x10::new(word);
    let m = Array4x10::new(marked);
    let mut out = String::from("      ");
    for c in 1..=N {
        let _ = write!(out, "{c:>2} ");
    }
    out = out.trim_end().to_string();
    out.push('\n');
    for (r, label) in ROW_LABELS.iter().enumerate() {
        let mut line = format!("{:>4}  ", label.to_char());
        for c in 0..N {
            let bit = if a.get(r, c) { '1' } else { '0' };
            let star = if m.get(r, c) { '*' } else { ' ' };
            let _ = write!(line, " {bit}{star}");
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    let mut line = format!("{proj_label:>4}  ");
    for c in 0..N {
        let _ = write!(line, " {} ", projection.get(c).to_char());
    }
    out.push_str(line.trim_end());
    out.push('\n');
    out
}
