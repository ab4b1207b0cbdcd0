//! Completion of finite monomial sets to minimal involutive bases.
//!
//! The crate implements eight involutive divisions — Thomas, Janet,
//! Pommaret, Divisions I and II, and the divisions induced by the lex,
//! deglex and degrevlex orderings — together with the completion algorithm
//! that enlarges a monomial set by involutively irreducible
//! nonmultiplicative prolongations until every prolongation is covered.
//! On top of a completed basis it computes Hilbert functions, Hilbert
//! polynomials and the index of regularity, and it ships the benchmark
//! fixtures used by the command-line harness.
//!
//! The optimized paths (per-variable prolongation slots, filtered divisor
//! searches, incremental separation updates) all have definitional
//! counterparts in the public API, and the test suites hold them equal.

pub mod completion;
pub mod division;
pub mod fixtures;
pub mod hilbert;
pub mod monomial;
pub mod random;

pub use completion::{
    complete, default_completion_order, find_involutive_divisor, is_involutive,
    is_involutively_autoreduced, longest_common_prefix_class, update_separations, CapExceeded,
    CapKind, Completion, CompletionResult, CompletionStats, Limits, ProlongationQueue,
    SeparationUpdate, StepOutcome,
};
pub use division::{
    axiom_check, cone_member, cumulated_multiples, separation, separation_table, AxiomReport,
    AxiomWitness, DivisionKind, Separation, SeparationTable, SubsetMode,
};
pub use hilbert::{brute_force_hf, HilbertData, HilbertPolynomial};
pub use monomial::{parse_monomial_set, Monomial, MonomialSet, OrderingKind, ParseError};
