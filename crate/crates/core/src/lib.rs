//! Positive braid links and the combinatorics of their canonical Seifert
//! surfaces.
//!
//! The crate is organised bottom-up:
//!
//! * [`braid`]: positive braid words, word moves and closure invariants
//!   (components, first Betti number, genus).
//! * [`surface`]: brick diagrams, linking patterns and SVG rendering.
//! * [`form`]: the symmetrized Seifert form, exact signature/nullity and the
//!   Kauffman–Taylor maximality test.
//! * [`minor`]: the obstruction graphs Γ_T̃, Γ_Ẽ, Γ_X̃ (plus D5), induced
//!   subgraph search, the induced-path recipe, and genus-defect lower bounds.
//! * [`harness`]: report types, the β_k verifier and the enumeration driver
//!   used by the command-line tool.

pub mod braid;
pub mod error;
pub mod form;
pub mod harness;
pub mod minor;
pub mod surface;

pub use braid::{BraidWord, ClosureSummary, GenusSummary};
pub use error::{Error, Result};
pub use form::{InertiaResult, KtCertificate, SymmetrizedSeifertForm};
pub use minor::{DefectReport, MinorCertificate, MinorKind, Strategy, TargetMinor};
pub use surface::{Brick, BrickDiagram, LinkingPattern, Primality};
