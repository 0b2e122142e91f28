//! Value domains and arithmetic ground truth.
//!
//! Everything a circuit is verified against lives here: radix-typed logic
//! levels, digit vectors, the quaternary threshold functions (NQI/IQI/PQI),
//! the 4↔2 code maps, and the digit-level add/multiply oracles. All
//! functions are pure; none of them know anything about netlists.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Number of distinct levels a signal can take. Binary and quaternary are
/// the working radices; ternary exists only because a 1-digit quaternary
/// multiplication carries at most 2.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Radix {
    Binary,
    Ternary,
    Quaternary,
}

impl Radix {
    pub fn levels(self) -> u8 {
        match self {
            Radix::Binary => 2,
            Radix::Ternary => 3,
            Radix::Quaternary => 4,
        }
    }

    pub fn max_value(self) -> u8 {
        self.levels() - 1
    }

    pub fn from_levels(n: u8) -> Result<Self, LogicError> {
        match n {
            2 => Ok(Radix::Binary),
            3 => Ok(Radix::Ternary),
            4 => Ok(Radix::Quaternary),
            other => Err(LogicError::UnsupportedRadix(other)),
        }
    }

    /// Bits of information carried by one signal of this radix.
    pub fn information_bits(self) -> f64 {
        (self.levels() as f64).log2()
    }
}

impl fmt::Display for Radix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.levels())
    }
}

impl Serialize for Radix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u8(self.levels())
    }
}

impl<'de> Deserialize<'de> for Radix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let n = u8::deserialize(d)?;
        Radix::from_levels(n).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LogicError {
    #[error("radix {0} is not supported (expected 2, 3 or 4)")]
    UnsupportedRadix(u8),
    #[error("value {value} out of range for radix {radix}")]
    ValueOutOfRange { value: u8, radix: Radix },
    #[error("radix mismatch: expected {expected}, found {found}")]
    RadixMismatch { expected: Radix, found: Radix },
    #[error("function table is not total: {missing} of {domain} rows missing")]
    NonTotalTable { missing: usize, domain: usize },
    #[error("duplicate row for inputs {0:?}")]
    DuplicateRow(Vec<u8>),
    #[error("table inputs {found} do not match declared domain of {expected} entries")]
    TableSizeMismatch { expected: usize, found: usize },
    #[error("bit vector length {0} is odd; binary-to-quaternary conversion needs bit pairs")]
    OddBitLength(usize),
    #[error("value {0} does not fit in {1} digits of radix {2}")]
    ValueTooWide(u64, usize, Radix),
}

/// One signal value: a digit within an explicit radix.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct LogicLevel {
    radix: Radix,
    value: u8,
}

impl LogicLevel {
    pub fn new(radix: Radix, value: u8) -> Result<Self, LogicError> {
        if value >= radix.levels() {
            return Err(LogicError::ValueOutOfRange { value, radix });
        }
        Ok(LogicLevel { radix, value })
    }

    pub fn binary(value: u8) -> Result<Self, LogicError> {
        Self::new(Radix::Binary, value)
    }

    pub fn ternary(value: u8) -> Result<Self, LogicError> {
        Self::new(Radix::Ternary, value)
    }

    pub fn quaternary(value: u8) -> Result<Self, LogicError> {
        Self::new(Radix::Quaternary, value)
    }

    pub fn value(self) -> u8 {
        self.value
    }

    pub fn radix(self) -> Radix {
        self.radix
    }

    fn expect_radix(self, expected: Radix) -> Result<u8, LogicError> {
        if self.radix != expected {
            return Err(LogicError::RadixMismatch {
                expected,
                found: self.radix,
            });
        }
        Ok(self.value)
    }
}

impl fmt::Display for LogicLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Little-endian multi-digit operand with a uniform radix.
/// `digits[0]` is least significant; numeric value is Σ `digits[i]`·radix^i.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DigitVector {
    radix: Radix,
    digits: Vec<u8>,
}

impl DigitVector {
    pub fn new(radix: Radix, digits: Vec<u8>) -> Result<Self, LogicError> {
        for &d in &digits {
            if d >= radix.levels() {
                return Err(LogicError::ValueOutOfRange { value: d, radix });
            }
        }
        Ok(DigitVector { radix, digits })
    }

    /// Encode `value` into `len` digits; errors if it does not fit.
    pub fn from_value(radix: Radix, value: u64, len: usize) -> Result<Self, LogicError> {
        let base = radix.levels() as u64;
        let mut digits = Vec::with_capacity(len);
        let mut rest = value;
        for _ in 0..len {
            digits.push((rest % base) as u8);
            rest /= base;
        }
        if rest != 0 {
            return Err(LogicError::ValueTooWide(value, len, radix));
        }
        Ok(DigitVector { radix, digits })
    }

    pub fn value(&self) -> u64 {
        let base = self.radix.levels() as u64;
        self.digits
            .iter()
            .rev()
            .fold(0u64, |acc, &d| acc * base + d as u64)
    }

    pub fn radix(&self) -> Radix {
        self.radix
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn digit(&self, i: usize) -> LogicLevel {
        LogicLevel {
            radix: self.radix,
            value: self.digits[i],
        }
    }

    /// Ripple addition through `add_oracle`, digit by digit. Returns the sum
    /// (same width as the wider operand) and the carry out. This is the
    /// reference adder that generated circuits are checked against.
    pub fn ripple_add(
        &self,
        other: &DigitVector,
        carry_in: u8,
    ) -> Result<(DigitVector, u8), LogicError> {
        if self.radix != other.radix {
            return Err(LogicError::RadixMismatch {
                expected: self.radix,
                found: other.radix,
            });
        }
        let width = self.len().max(other.len());
        let mut digits = Vec::with_capacity(width);
        let mut carry = LogicLevel::binary(carry_in)?;
        for i in 0..width {
            let a = LogicLevel::new(self.radix, self.digits.get(i).copied().unwrap_or(0))?;
            let b = LogicLevel::new(self.radix, other.digits.get(i).copied().unwrap_or(0))?;
            let (sum, c) = add_oracle(self.radix, a, b, carry)?;
            digits.push(sum.value());
            carry = c;
        }
        Ok((
            DigitVector {
                radix: self.radix,
                digits,
            },
            carry.value(),
        ))
    }
}

/// Quaternary threshold detectors. Each maps a quaternary level to 0 or 3,
/// switching after level 0, 1 and 2 respectively.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ThresholdKind {
    Nqi,
    Iqi,
    Pqi,
}

impl ThresholdKind {
    pub const ALL: [ThresholdKind; 3] =
        [ThresholdKind::Nqi, ThresholdKind::Iqi, ThresholdKind::Pqi];

    pub fn name(self) -> &'static str {
        match self {
            ThresholdKind::Nqi => "nqi",
            ThresholdKind::Iqi => "iqi",
            ThresholdKind::Pqi => "pqi",
        }
    }

    /// Highest input level for which the detector still outputs 3.
    fn cutoff(self) -> u8 {
        match self {
            ThresholdKind::Nqi => 0,
            ThresholdKind::Iqi => 1,
            ThresholdKind::Pqi => 2,
        }
    }
}

/// NQI(q)=3 iff q=0; IQI(q)=3 iff q≤1; PQI(q)=3 iff q≤2; 0 otherwise.
pub fn threshold(kind: ThresholdKind, q: LogicLevel) -> Result<LogicLevel, LogicError> {
    let v = q.expect_radix(Radix::Quaternary)?;
    let out = if v <= kind.cutoff() { 3 } else { 0 };
    LogicLevel::quaternary(out)
}

pub(crate) fn threshold_value(kind: ThresholdKind, q: u8) -> u8 {
    if q <= kind.cutoff() {
        3
    } else {
        0
    }
}

/// Which 4↔2 bit code a decoder/encoder pair uses.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CodeKind {
    /// The published decoder table: consecutive levels differ in one bit.
    Gray,
    /// Weighted code q = x + 2·y; this is the one under which a binary
    /// adder fed the decoded bits actually adds.
    Positional,
}

impl CodeKind {
    pub fn name(self) -> &'static str {
        match self {
            CodeKind::Gray => "gray",
            CodeKind::Positional => "positional",
        }
    }
}

impl std::str::FromStr for CodeKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "gray" => Ok(CodeKind::Gray),
            "positional" => Ok(CodeKind::Positional),
            other => Err(format!(
                "unknown code map '{other}' (expected gray or positional)"
            )),
        }
    }
}

// Decoder rows (q -> (x, y)) as published: 0→(1,0) 1→(1,1) 2→(0,1) 3→(0,0).
const GRAY_FORWARD: [(u8, u8); 4] = [(1, 0), (1, 1), (0, 1), (0, 0)];

/// Digit-to-bit-pair code map; forward and inverse compose to identity.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CodeMap {
    pub kind: CodeKind,
}

impl CodeMap {
    pub fn gray() -> Self {
        CodeMap {
            kind: CodeKind::Gray,
        }
    }

    pub fn positional() -> Self {
        CodeMap {
            kind: CodeKind::Positional,
        }
    }

    pub fn new(kind: CodeKind) -> Self {
        CodeMap { kind }
    }

    pub(crate) fn forward_bits(&self, q: u8) -> (u8, u8) {
        debug_assert!(q < 4);
        match self.kind {
            CodeKind::Gray => GRAY_FORWARD[q as usize],
            CodeKind::Positional => (q & 1, q >> 1),
        }
    }

    pub(crate) fn inverse_bits(&self, x: u8, y: u8) -> u8 {
        debug_assert!(x < 2 && y < 2);
        match self.kind {
            CodeKind::Gray => GRAY_FORWARD
                .iter()
                .position(|&(gx, gy)| (gx, gy) == (x, y))
                .unwrap() as u8,
            CodeKind::Positional => x + 2 * y,
        }
    }

    /// Quaternary digit → (x, y) bit pair.
    pub fn forward(&self, q: LogicLevel) -> Result<(LogicLevel, LogicLevel), LogicError> {
        let v = q.expect_radix(Radix::Quaternary)?;
        let (x, y) = self.forward_bits(v);
        Ok((LogicLevel::binary(x)?, LogicLevel::binary(y)?))
    }

    /// (x, y) bit pair → the unique quaternary digit with that code.
    pub fn inverse(&self, x: LogicLevel, y: LogicLevel) -> Result<LogicLevel, LogicError> {
        let xv = x.expect_radix(Radix::Binary)?;
        let yv = y.expect_radix(Radix::Binary)?;
        LogicLevel::quaternary(self.inverse_bits(xv, yv))
    }
}

/// Gray 4-to-2 decode, exactly the published table.
pub fn gray_decode(q: LogicLevel) -> Result<(LogicLevel, LogicLevel), LogicError> {
    CodeMap::gray().forward(q)
}

/// Inverse of [`gray_decode`].
pub fn gray_encode(x: LogicLevel, y: LogicLevel) -> Result<LogicLevel, LogicError> {
    CodeMap::gray().inverse(x, y)
}

/// Digit-wise full-adder oracle: sum = (a+b+ci) mod radix, carry = div.
/// The carry is always binary because a, b < radix and ci ≤ 1.
pub fn add_oracle(
    radix: Radix,
    a: LogicLevel,
    b: LogicLevel,
    carry_in: LogicLevel,
) -> Result<(LogicLevel, LogicLevel), LogicError> {
    let av = a.expect_radix(radix)?;
    let bv = b.expect_radix(radix)?;
    let cv = carry_in.expect_radix(Radix::Binary)?;
    let total = av + bv + cv;
    let base = radix.levels();
    Ok((
        LogicLevel::new(radix, total % base)?,
        LogicLevel::binary(total / base)?,
    ))
}

/// 1-digit quaternary multiplication: a·b = 4·carry + product.
/// 3·3 = 21 in base 4, so the carry is at most 2: it is ternary.
pub fn mul_digit_oracle(
    a: LogicLevel,
    b: LogicLevel,
) -> Result<(LogicLevel, LogicLevel), LogicError> {
    let av = a.expect_radix(Radix::Quaternary)?;
    let bv = b.expect_radix(Radix::Quaternary)?;
    let total = av * bv;
    Ok((
        LogicLevel::quaternary(total % 4)?,
        LogicLevel::ternary(total / 4)?,
    ))
}

/// (q+1) mod 4, the subfunction multiplexer-style adders are built from.
pub fn successor(q: LogicLevel) -> Result<LogicLevel, LogicError> {
    let v = q.expect_radix(Radix::Quaternary)?;
    LogicLevel::quaternary((v + 1) % 4)
}

/// A total function from a mixed-radix input domain to one output digit.
/// Row index: input 0 varies fastest.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FunctionTable {
    input_radices: Vec<Radix>,
    output_radix: Radix,
    values: Vec<u8>,
}

impl FunctionTable {
    pub fn domain_size(input_radices: &[Radix]) -> usize {
        input_radices.iter().map(|r| r.levels() as usize).product()
    }

    pub fn from_fn(
        input_radices: &[Radix],
        output_radix: Radix,
        f: impl Fn(&[u8]) -> u8,
    ) -> Result<Self, LogicError> {
        let size = Self::domain_size(input_radices);
        let mut values = Vec::with_capacity(size);
        let mut inputs = vec![0u8; input_radices.len()];
        for idx in 0..size {
            decode_index(idx, input_radices, &mut inputs);
            let v = f(&inputs);
            if v >= output_radix.levels() {
                return Err(LogicError::ValueOutOfRange {
                    value: v,
                    radix: output_radix,
                });
            }
            values.push(v);
        }
        Ok(FunctionTable {
            input_radices: input_radices.to_vec(),
            output_radix,
            values,
        })
    }

    /// Build from explicit rows; errors if a row is missing or duplicated.
    pub fn from_rows(
        input_radices: &[Radix],
        output_radix: Radix,
        rows: &[(Vec<u8>, u8)],
    ) -> Result<Self, LogicError> {
        let size = Self::domain_size(input_radices);
        let mut values: Vec<Option<u8>> = vec![None; size];
        for (inputs, out) in rows {
            if inputs.len() != input_radices.len() {
                return Err(LogicError::TableSizeMismatch {
                    expected: input_radices.len(),
                    found: inputs.len(),
                });
            }
            for (v, r) in inputs.iter().zip(input_radices) {
                if *v >= r.levels() {
                    return Err(LogicError::ValueOutOfRange {
                        value: *v,
                        radix: *r,
                    });
                }
            }
            if *out >= output_radix.levels() {
                return Err(LogicError::ValueOutOfRange {
                    value: *out,
                    radix: output_radix,
                });
            }
            let idx = encode_index(inputs, input_radices);
            if values[idx].is_some() {
                return Err(LogicError::DuplicateRow(inputs.clone()));
            }
            values[idx] = Some(*out);
        }
        let missing = values.iter().filter(|v| v.is_none()).count();
        if missing > 0 {
            return Err(LogicError::NonTotalTable {
                missing,
                domain: size,
            });
        }
        Ok(FunctionTable {
            input_radices: input_radices.to_vec(),
            output_radix,
            values: values.into_iter().map(|v| v.unwrap()).collect(),
        })
    }

    pub fn input_radices(&self) -> &[Radix] {
        &self.input_radices
    }

    pub fn output_radix(&self) -> Radix {
        self.output_radix
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, inputs: &[u8]) -> u8 {
        self.values[encode_index(inputs, &self.input_radices)]
    }

    pub fn value_at(&self, idx: usize) -> u8 {
        self.values[idx]
    }

    pub fn rows(&self) -> impl Iterator<Item = (Vec<u8>, u8)> + '_ {
        let mut inputs = vec![0u8; self.input_radices.len()];
        (0..self.values.len()).map(move |idx| {
            decode_index(idx, &self.input_radices, &mut inputs);
            (inputs.clone(), self.values[idx])
        })
    }
}

pub(crate) fn encode_index(inputs: &[u8], radices: &[Radix]) -> usize {
    debug_assert_eq!(inputs.len(), radices.len());
    let mut idx = 0usize;
    let mut stride = 1usize;
    for (v, r) in inputs.iter().zip(radices) {
        idx += *v as usize * stride;
        stride *= r.levels() as usize;
    }
    idx
}

pub(crate) fn decode_index(mut idx: usize, radices: &[Radix], out: &mut [u8]) {
    for (slot, r) in out.iter_mut().zip(radices) {
        let base = r.levels() as usize;
        *slot = (idx % base) as u8;
        idx /= base;
    }
}

/// Indicator functions of output levels 3, 2 and 1 of a quaternary-output
/// table: f = 3·f3 + 2·f2 + 1·f1 with pairwise-disjoint supports.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Decomposition {
    input_radices: Vec<Radix>,
    pub f3: Vec<bool>,
    pub f2: Vec<bool>,
    pub f1: Vec<bool>,
}

impl Decomposition {
    pub fn input_radices(&self) -> &[Radix] {
        &self.input_radices
    }

    /// Rebuild the original table; inverse of [`decompose_quaternary`].
    pub fn recompose(&self) -> FunctionTable {
        let values: Vec<u8> = (0..self.f3.len())
            .map(|i| 3 * self.f3[i] as u8 + 2 * self.f2[i] as u8 + self.f1[i] as u8)
            .collect();
        FunctionTable {
            input_radices: self.input_radices.clone(),
            output_radix: Radix::Quaternary,
            values,
        }
    }

    pub fn supports_disjoint(&self) -> bool {
        (0..self.f3.len()).all(|i| (self.f3[i] as u8 + self.f2[i] as u8 + self.f1[i] as u8) <= 1)
    }

    /// Support of the indicator for output level `k` (3, 2 or 1), as input tuples.
    pub fn support(&self, k: u8) -> Vec<Vec<u8>> {
        let flags = match k {
            3 => &self.f3,
            2 => &self.f2,
            1 => &self.f1,
            _ => panic!("support is defined for levels 1, 2, 3"),
        };
        let mut inputs = vec![0u8; self.input_radices.len()];
        flags
            .iter()
            .enumerate()
            .filter(|(_, &on)| on)
            .map(|(idx, _)| {
                decode_index(idx, &self.input_radices, &mut inputs);
                inputs.clone()
            })
            .collect()
    }
}

/// Split a quaternary-output table into the indicator functions of its
/// output levels 3/2/1.
pub fn decompose_quaternary(table: &FunctionTable) -> Result<Decomposition, LogicError> {
    if table.output_radix != Radix::Quaternary {
        return Err(LogicError::RadixMismatch {
            expected: Radix::Quaternary,
            found: table.output_radix,
        });
    }
    let f = |level: u8| -> Vec<bool> { table.values.iter().map(|&v| v == level).collect() };
    Ok(Decomposition {
        input_radices: table.input_radices.clone(),
        f3: f(3),
        f2: f(2),
        f1: f(1),
    })
}

/// Rows-based variant of [`decompose_quaternary`]; rejects non-total tables.
pub fn decompose_quaternary_rows(
    input_radices: &[Radix],
    rows: &[(Vec<u8>, u8)],
) -> Result<Decomposition, LogicError> {
    let table = FunctionTable::from_rows(input_radices, Radix::Quaternary, rows)?;
    decompose_quaternary(&table)
}

/// Expand a quaternary vector to bits, two per digit (x then y), little-endian.
/// Under the positional map this preserves the numeric value.
pub fn quaternary_to_binary(v: &DigitVector, map: &CodeMap) -> Result<DigitVector, LogicError> {
    if v.radix() != Radix::Quaternary {
        return Err(LogicError::RadixMismatch {
            expected: Radix::Quaternary,
            found: v.radix(),
        });
    }
    let mut bits = Vec::with_capacity(v.len() * 2);
    for &d in v.digits() {
        let (x, y) = map.forward_bits(d);
        bits.push(x);
        bits.push(y);
    }
    DigitVector::new(Radix::Binary, bits)
}

/// Inverse of [`quaternary_to_binary`]; errors on odd-length bit vectors.
pub fn binary_to_quaternary(bits: &DigitVector, map: &CodeMap) -> Result<DigitVector, LogicError> {
    if bits.radix() != Radix::Binary {
        return Err(LogicError::RadixMismatch {
            expected: Radix::Binary,
            found: bits.radix(),
        });
    }
    if !bits.len().is_multiple_of(2) {
        return Err(LogicError::OddBitLength(bits.len()));
    }
    let mut digits = Vec::with_capacity(bits.len() / 2);
    for pair in bits.digits().chunks(2) {
        digits.push(map.inverse_bits(pair[0], pair[1]));
    }
    DigitVector::new(Radix::Quaternary, digits)
}

/// The 1-digit quaternary adder truth table exactly as published, including
/// its two rows that disagree with mod-4 arithmetic. Kept verbatim as a
/// fixture; `add_oracle` is the authority for behavior.
///
/// Rows are (a, b, carry_in, sum, carry_out). The known errata:
/// - (3,3,0) is printed with sum 3; arithmetic gives 2.
/// - the row printed (2,3,0)→(2,1) sits where (2,3,1) belongs, and its
///   outputs match carry_in = 1 arithmetic.
pub mod published {
    /// Left (ci=0) block then right (ci=1) block, row-major as printed.
    pub const QFA_TABLE: [(u8, u8, u8, u8, u8); 32] = [
        (0, 0, 0, 0, 0),
        (0, 1, 0, 1, 0),
        (0, 2, 0, 2, 0),
        (0, 3, 0, 3, 0),
        (1, 0, 0, 1, 0),
        (1, 1, 0, 2, 0),
        (1, 2, 0, 3, 0),
        (1, 3, 0, 0, 1),
        (2, 0, 0, 2, 0),
        (2, 1, 0, 3, 0),
        (2, 2, 0, 0, 1),
        (2, 3, 0, 1, 1),
        (3, 0, 0, 3, 0),
        (3, 1, 0, 0, 1),
        (3, 2, 0, 1, 1),
        (3, 3, 0, 3, 1), // erratum: arithmetic gives sum 2
        (0, 0, 1, 1, 0),
        (0, 1, 1, 2, 0),
        (0, 2, 1, 3, 0),
        (0, 3, 1, 0, 1),
        (1, 0, 1, 2, 0),
        (1, 1, 1, 3, 0),
        (1, 2, 1, 0, 1),
        (1, 3, 1, 1, 1),
        (2, 0, 1, 3, 0),
        (2, 1, 1, 0, 1),
        (2, 2, 1, 1, 1),
        (2, 3, 0, 2, 1), // erratum: printed ci=0 in the ci=1 half; outputs match ci=1
        (3, 0, 1, 0, 1),
        (3, 1, 1, 1, 1),
        (3, 2, 1, 2, 1),
        (3, 3, 1, 3, 1),
    ];

    /// Indices into [`QFA_TABLE`] of the two rows inconsistent with arithmetic.
    pub const QFA_ERRATA: [usize; 2] = [15, 27];
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: u8) -> LogicLevel {
        LogicLevel::quaternary(v).unwrap()
    }

    fn b(v: u8) -> LogicLevel {
        LogicLevel::binary(v).unwrap()
    }

    #[test]
    fn logic_level_rejects_out_of_range() {
        assert!(LogicLevel::binary(2).is_err());
        assert!(LogicLevel::ternary(3).is_err());
        assert!(LogicLevel::quaternary(4).is_err());
        assert_eq!(LogicLevel::quaternary(3).unwrap().value(), 3);
    }

    #[test]
    fn threshold_matches_published_rows() {
        // Q: 0..3 → NQI {3,0,0,0}, IQI {3,3,0,0}, PQI {3,3,3,0}
        let expect = [
            (ThresholdKind::Nqi, [3, 0, 0, 0]),
            (ThresholdKind::Iqi, [3, 3, 0, 0]),
            (ThresholdKind::Pqi, [3, 3, 3, 0]),
        ];
        for (kind, outs) in expect {
            for v in 0..4 {
                assert_eq!(
                    threshold(kind, q(v)).unwrap().value(),
                    outs[v as usize],
                    "{kind:?}({v})"
                );
            }
        }
        assert_eq!(threshold(ThresholdKind::Nqi, q(0)).unwrap().value(), 3);
        assert_eq!(threshold(ThresholdKind::Iqi, q(1)).unwrap().value(), 3);
        assert_eq!(threshold(ThresholdKind::Iqi, q(2)).unwrap().value(), 0);
        assert_eq!(threshold(ThresholdKind::Pqi, q(3)).unwrap().value(), 0);
    }

    #[test]
    fn threshold_rejects_non_quaternary() {
        let err = threshold(ThresholdKind::Nqi, b(1)).unwrap_err();
        assert!(matches!(err, LogicError::RadixMismatch { .. }));
    }

    #[test]
    fn thresholds_are_nested_step_functions() {
        // Exactly one detector changes between q and q+1.
        for v in 0..3u8 {
            let changes = ThresholdKind::ALL
                .iter()
                .filter(|&&k| threshold_value(k, v) != threshold_value(k, v + 1))
                .count();
            assert_eq!(changes, 1, "between {v} and {}", v + 1);
        }
    }

    #[test]
    fn gray_decode_matches_published_table() {
        let rows = [(0, (1, 0)), (1, (1, 1)), (2, (0, 1)), (3, (0, 0))];
        for (qv, (x, y)) in rows {
            let (gx, gy) = gray_decode(q(qv)).unwrap();
            assert_eq!((gx.value(), gy.value()), (x, y), "row {qv}");
        }
    }

    #[test]
    fn gray_encode_is_inverse() {
        assert_eq!(gray_encode(b(1), b(1)).unwrap().value(), 1);
        assert_eq!(gray_encode(b(0), b(1)).unwrap().value(), 2);
        assert_eq!(gray_encode(b(0), b(0)).unwrap().value(), 3);
        for v in 0..4 {
            let (x, y) = gray_decode(q(v)).unwrap();
            assert_eq!(gray_encode(x, y).unwrap().value(), v);
        }
        for x in 0..2 {
            for y in 0..2 {
                let qv = gray_encode(b(x), b(y)).unwrap();
                let (gx, gy) = gray_decode(qv).unwrap();
                assert_eq!((gx.value(), gy.value()), (x, y));
            }
        }
    }

    #[test]
    fn gray_adjacent_codes_differ_in_one_bit() {
        let map = CodeMap::gray();
        for v in 0..3u8 {
            let (x0, y0) = map.forward_bits(v);
            let (x1, y1) = map.forward_bits(v + 1);
            let dist = (x0 != x1) as u8 + (y0 != y1) as u8;
            assert_eq!(dist, 1, "levels {v} and {}", v + 1);
        }
    }

    #[test]
    fn add_oracle_published_rows() {
        let t = |a, b_, ci| {
            let (s, c) = add_oracle(Radix::Quaternary, q(a), q(b_), b(ci)).unwrap();
            (s.value(), c.value())
        };
        assert_eq!(t(1, 3, 0), (0, 1));
        assert_eq!(t(3, 3, 1), (3, 1));
        assert_eq!(t(0, 0, 0), (0, 0));
        // The erratum row: arithmetic, not the printed sum 3.
        assert_eq!(t(3, 3, 0), (2, 1));
    }

    #[test]
    fn add_oracle_conservation_exhaustive() {
        for radix in [Radix::Binary, Radix::Ternary, Radix::Quaternary] {
            let base = radix.levels();
            for a in 0..base {
                for b_ in 0..base {
                    for ci in 0..2 {
                        let (s, c) = add_oracle(
                            radix,
                            LogicLevel::new(radix, a).unwrap(),
                            LogicLevel::new(radix, b_).unwrap(),
                            LogicLevel::binary(ci).unwrap(),
                        )
                        .unwrap();
                        assert_eq!(
                            base as u16 * c.value() as u16 + s.value() as u16,
                            (a + b_ + ci) as u16
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn add_oracle_rejects_radix_mismatch() {
        let err = add_oracle(Radix::Quaternary, q(1), b(1), b(0)).unwrap_err();
        assert!(matches!(err, LogicError::RadixMismatch { .. }));
    }

    #[test]
    fn mul_digit_oracle_brute_force() {
        // 3·3 = 21 in base 4.
        let (p, c) = mul_digit_oracle(q(3), q(3)).unwrap();
        assert_eq!((p.value(), c.value()), (1, 2));
        let (p, c) = mul_digit_oracle(q(2), q(3)).unwrap();
        assert_eq!((p.value(), c.value()), (2, 1));
        for k in 0..4 {
            let (p, c) = mul_digit_oracle(q(0), q(k)).unwrap();
            assert_eq!((p.value(), c.value()), (0, 0));
        }
        for a in 0..4u8 {
            for b_ in 0..4u8 {
                let (p, c) = mul_digit_oracle(q(a), q(b_)).unwrap();
                assert_eq!(4 * c.value() + p.value(), a * b_);
                assert!(c.value() <= 2);
            }
        }
    }

    #[test]
    fn successor_cycles() {
        assert_eq!(successor(q(1)).unwrap().value(), 2);
        assert_eq!(successor(q(3)).unwrap().value(), 0);
        for v in 0..4 {
            let mut x = q(v);
            for _ in 0..4 {
                x = successor(x).unwrap();
            }
            assert_eq!(x.value(), v);
        }
    }

    #[test]
    fn decompose_nqi_and_successor() {
        let nqi = FunctionTable::from_fn(&[Radix::Quaternary], Radix::Quaternary, |i| {
            threshold_value(ThresholdKind::Nqi, i[0])
        })
        .unwrap();
        let d = decompose_quaternary(&nqi).unwrap();
        assert_eq!(d.support(3), vec![vec![0]]);
        assert!(d.support(2).is_empty());
        assert!(d.support(1).is_empty());
        assert!(d.supports_disjoint());
        assert_eq!(d.recompose(), nqi);

        let succ =
            FunctionTable::from_fn(&[Radix::Quaternary], Radix::Quaternary, |i| (i[0] + 1) % 4)
                .unwrap();
        let d = decompose_quaternary(&succ).unwrap();
        assert_eq!(d.support(3), vec![vec![2]]);
        assert_eq!(d.support(2), vec![vec![1]]);
        assert_eq!(d.support(1), vec![vec![0]]);
        assert_eq!(d.recompose(), succ);
    }

    #[test]
    fn decompose_constant_zero_is_empty() {
        let zero = FunctionTable::from_fn(
            &[Radix::Quaternary, Radix::Quaternary],
            Radix::Quaternary,
            |_| 0,
        )
        .unwrap();
        let d = decompose_quaternary(&zero).unwrap();
        assert!(d.support(3).is_empty() && d.support(2).is_empty() && d.support(1).is_empty());
        assert_eq!(d.recompose(), zero);
    }

    #[test]
    fn decompose_recomposition_over_full_adder_domain() {
        // Three inputs, 4·4·2 = 32 rows: the recomposition identity holds.
        let radices = [Radix::Quaternary, Radix::Quaternary, Radix::Binary];
        let table =
            FunctionTable::from_fn(&radices, Radix::Quaternary, |i| (i[0] + i[1] + i[2]) % 4)
                .unwrap();
        let d = decompose_quaternary(&table).unwrap();
        assert!(d.supports_disjoint());
        assert_eq!(d.recompose(), table);
    }

    #[test]
    fn non_total_table_is_rejected() {
        let rows = vec![(vec![0u8], 1u8), (vec![2u8], 3u8)];
        let err = decompose_quaternary_rows(&[Radix::Quaternary], &rows).unwrap_err();
        assert!(matches!(
            err,
            LogicError::NonTotalTable {
                missing: 2,
                domain: 4
            }
        ));

        let dup = vec![(vec![0u8], 1u8), (vec![0u8], 2u8)];
        let err =
            FunctionTable::from_rows(&[Radix::Quaternary], Radix::Quaternary, &dup).unwrap_err();
        assert!(matches!(err, LogicError::DuplicateRow(_)));
    }

    #[test]
    fn radix_convert_examples() {
        let map = CodeMap::positional();
        let v = DigitVector::new(Radix::Quaternary, vec![1, 3]).unwrap();
        assert_eq!(v.value(), 13);
        let bits = quaternary_to_binary(&v, &map).unwrap();
        assert_eq!(bits.digits(), &[1, 0, 1, 1]);
        assert_eq!(bits.value(), 13);

        let gray = CodeMap::gray();
        let v0 = DigitVector::new(Radix::Quaternary, vec![0]).unwrap();
        assert_eq!(quaternary_to_binary(&v0, &gray).unwrap().digits(), &[1, 0]);

        let empty = DigitVector::new(Radix::Quaternary, vec![]).unwrap();
        assert!(quaternary_to_binary(&empty, &map).unwrap().is_empty());
    }

    #[test]
    fn binary_to_quaternary_rejects_odd_length() {
        let bits = DigitVector::new(Radix::Binary, vec![1, 0, 1]).unwrap();
        let err = binary_to_quaternary(&bits, &CodeMap::positional()).unwrap_err();
        assert!(matches!(err, LogicError::OddBitLength(3)));
    }

    #[test]
    fn digit_vector_value_roundtrip() {
        for value in [0u64, 1, 13, 255, 65024, 65535] {
            let v = DigitVector::from_value(Radix::Quaternary, value, 8).unwrap();
            assert_eq!(v.value(), value);
        }
        assert!(DigitVector::from_value(Radix::Quaternary, 65536, 8).is_err());
        assert!(DigitVector::new(Radix::Ternary, vec![0, 3]).is_err());
    }

    #[test]
    fn ripple_add_matches_integers() {
        for a in 0..64u64 {
            for b_ in 0..64u64 {
                let va = DigitVector::from_value(Radix::Quaternary, a, 3).unwrap();
                let vb = DigitVector::from_value(Radix::Quaternary, b_, 3).unwrap();
                let (sum, carry) = va.ripple_add(&vb, 0).unwrap();
                assert_eq!(sum.value() + (carry as u64) * 64, a + b_);
            }
        }
    }

    #[test]
    fn published_qfa_table_errata() {
        use published::{QFA_ERRATA, QFA_TABLE};
        let mut mismatches = Vec::new();
        for (i, &(a, b_, ci, s, c)) in QFA_TABLE.iter().enumerate() {
            let (os, oc) = add_oracle(Radix::Quaternary, q(a), q(b_), b(ci)).unwrap();
            if (os.value(), oc.value()) != (s, c) {
                mismatches.push(i);
            }
        }
        assert_eq!(mismatches, QFA_ERRATA.to_vec());
        // The misplaced row matches arithmetic for ci = 1.
        let (a, b_, _, s, c) = QFA_TABLE[QFA_ERRATA[1]];
        let (os, oc) = add_oracle(Radix::Quaternary, q(a), q(b_), b(1)).unwrap();
        assert_eq!((os.value(), oc.value()), (s, c));
    }
}
