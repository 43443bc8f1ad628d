//! Projection decoding of the extremal self-dual [40,20,8] binary codes
//! obtained from the Hermitian self-dual [10,5,4] code E10 over GF(4).
//!
//! A received 40-bit word is viewed as a 4×10 bit array. Its column
//! parities locate erasures, the column projection onto GF(4)^10 is
//! corrected inside E10, and the corrected projection is lifted back to a
//! binary codeword. Two projection decoders are provided (orbit-type
//! matching and syndrome solving) next to an exhaustive nearest-codeword
//! oracle used to certify them.
//!
//! ```
//! use proj40::{constructions, decoders::DecoderRegistry, CodeVariant};
//!
//! let g = constructions::printed_de_matrix();
//! let c = g.encode(0b1011_0000_0000_0000_0001).unwrap();
//! let received = c.flip(3).flip(17).flip(40);
//!
//! let registry = DecoderRegistry::with_defaults(CodeVariant::DoublyEven);
//! let report = registry.get("synd").unwrap().decode(received).unwrap();
//! assert_eq!(report.outcome.codeword(), Some(c));
//! ```

pub mod constructions;
pub mod decoders;
pub mod fuzz;
pub mod gf4;
pub mod oracle;
pub mod projection;
pub mod quaternary;
pub mod transcript;

mod error;

pub use constructions::{BWord, BinaryMatrix};
pub use decoders::{CaseLabel, DecodeOutcome, DecodeReport, Decoder, DecoderRegistry};
pub use error::Error;
pub use gf4::{Gf4, QWord};
pub use projection::{Array4x10, Parity, ProjectionKind};
pub use quaternary::{CodeTable, QuaternaryMatrix};

use std::fmt;
use std::str::FromStr;

/// Which of the two E10-based binary codes is in use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CodeVariant {
    /// Doubly-even code from Construction B; projection O onto E10.
    DoublyEven,
    /// Singly-even code from Construction C; projection E onto E10.
    SinglyEven,
}

impl CodeVariant {
    pub fn projection_kind(self) -> ProjectionKind {
        match self {
            CodeVariant::DoublyEven => ProjectionKind::O,
            CodeVariant::SinglyEven => ProjectionKind::E,
        }
    }

    /// Generator matrix used for encoding: the printed doubly-even matrix,
    /// or the same matrix with its last row replaced by `e_C`.
    pub fn generator(self) -> BinaryMatrix {
        match self {
            CodeVariant::DoublyEven => constructions::printed_de_matrix(),
            CodeVariant::SinglyEven => constructions::printed_se_matrix(),
        }
    }

    pub fn short_name(self) -> &'static str {
        match self {
            CodeVariant::DoublyEven => "DE",
            CodeVariant::SinglyEven => "SE",
        }
    }
}

impl fmt::Display for CodeVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for CodeVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "de" | "doubly-even" => Ok(CodeVariant::DoublyEven),
            "se" | "singly-even" => Ok(CodeVariant::SinglyEven),
            _ => Err(Error::Parse(format!(
                "unknown code variant {s:?}; expected de or se"
            ))),
        }
    }
}
