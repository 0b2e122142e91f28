//! Construction kit, simulator and transistor-count analyzer for small
//! combinational circuits in mixed radices (binary, quaternary, plus the
//! ternary carries of quaternary multiplication).
//!
//! The crate is organized around six pieces:
//!
//! - [`logic`]: radix-typed values, threshold functions, 4↔2 code maps
//!   and the digit-level arithmetic oracles everything is checked against.
//! - [`catalog`]: the primitive cell library with published transistor
//!   counts and supply-rail metadata.
//! - [`netlist`]: the circuit graph: validation, topological order,
//!   fan-out analysis and the buffer-insertion pass.
//! - [`generate`]: ripple-carry adders, Wallace-tree multipliers and the
//!   decoder/encoder-wrapped hybrid circuits, in both radices.
//! - [`sim`]: levelized evaluation, exhaustive verification against
//!   integer oracles, and circuit-vs-circuit equivalence checking.
//! - [`report`]: cost metrics, baseline comparisons, the published
//!   comparison tables, and [`json`], the canonical netlist file format.

pub mod catalog;
pub mod config;
pub mod generate;
pub mod json;
pub mod logic;
pub mod netlist;
pub mod report;
pub mod sim;

pub use catalog::{Catalog, MixedRadixKind, PrimitiveSpec, TruthTable};
pub use config::{AdderChoice, Config, ConfigError};
pub use generate::{build_circuit, GenError, GeneratorKind};
pub use logic::{CodeKind, CodeMap, DigitVector, LogicError, LogicLevel, Radix, ThresholdKind};
pub use netlist::{Netlist, NetlistBuilder, NetlistError, ValidationReport};
pub use report::{compare, metrics, CostReport, Format, ReportError, TableKind};
pub use sim::{
    equiv_check, evaluate, verify_exhaustive, verify_sampled, Oracle, SimError, VerifyReport,
};
