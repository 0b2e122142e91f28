//! The primitive cell library.
//!
//! Every gate the cost model knows about: ports, a total truth table,
//! the reported transistor count (where the sources give one), supply-rail
//! count and a source tag. The catalog is immutable after construction;
//! lookups are by (name, variant).

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::config::Config;
use crate::logic::{
    decode_index, encode_index, mul_digit_oracle, threshold_value, CodeMap, LogicLevel, Radix,
    ThresholdKind,
};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PortDirection {
    Input,
    Output,
}

/// A primitive port: name, direction and the radix its net must have.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PrimPort {
    pub name: &'static str,
    pub direction: PortDirection,
    pub radix: Radix,
}

fn inp(name: &'static str, radix: Radix) -> PrimPort {
    PrimPort {
        name,
        direction: PortDirection::Input,
        radix,
    }
}

fn outp(name: &'static str, radix: Radix) -> PrimPort {
    PrimPort {
        name,
        direction: PortDirection::Output,
        radix,
    }
}

/// Total truth function over the input port cross-product.
/// Row index: first input port varies fastest.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruthTable {
    input_radices: Vec<Radix>,
    output_radices: Vec<Radix>,
    values: Vec<u8>, // row-major, n_outputs per row
}

impl TruthTable {
    pub fn from_fn(
        input_radices: Vec<Radix>,
        output_radices: Vec<Radix>,
        f: impl Fn(&[u8], &mut [u8]),
    ) -> TruthTable {
        let rows: usize = input_radices.iter().map(|r| r.levels() as usize).product();
        let n_out = output_radices.len();
        let mut values = vec![0u8; rows * n_out];
        let mut inputs = vec![0u8; input_radices.len()];
        for idx in 0..rows {
            decode_index(idx, &input_radices, &mut inputs);
            let out = &mut values[idx * n_out..(idx + 1) * n_out];
            f(&inputs, out);
            for (v, r) in out.iter().zip(&output_radices) {
                assert!(*v < r.levels(), "behavior emitted {v} for radix {r}");
            }
        }
        TruthTable {
            input_radices,
            output_radices,
            values,
        }
    }

    pub fn input_radices(&self) -> &[Radix] {
        &self.input_radices
    }

    pub fn output_radices(&self) -> &[Radix] {
        &self.output_radices
    }

    pub fn row_count(&self) -> usize {
        if self.input_radices.is_empty() {
            1
        } else {
            self.input_radices
                .iter()
                .map(|r| r.levels() as usize)
                .product()
        }
    }

    pub fn eval_into(&self, inputs: &[u8], out: &mut [u8]) {
        let idx = encode_index(inputs, &self.input_radices);
        let n = self.output_radices.len();
        out.copy_from_slice(&self.values[idx * n..(idx + 1) * n]);
    }

    pub fn eval(&self, inputs: &[u8]) -> Vec<u8> {
        let mut out = vec![0u8; self.output_radices.len()];
        self.eval_into(inputs, &mut out);
        out
    }

    pub(crate) fn row_slice(&self, idx: usize) -> &[u8] {
        let n = self.output_radices.len();
        &self.values[idx * n..(idx + 1) * n]
    }
}

/// Where a cost number comes from: published data or artifact composition.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Reported,
    Derived,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Reported => write!(f, "reported"),
            Source::Derived => write!(f, "derived"),
        }
    }
}

pub const THREE_RAIL_DESC: &str = "Vdd, 2Vdd/3, Vdd/3";

/// One catalog cell.
#[derive(Clone, Debug)]
pub struct PrimitiveSpec {
    pub name: String,
    pub variant: String,
    pub ports: Vec<PrimPort>,
    pub behavior: TruthTable,
    /// Transistors, when the sources state a number (possibly via config).
    pub reported_tc: Option<u32>,
    /// Published interval for cells reported as a range.
    pub tc_interval: Option<(u32, u32)>,
    pub supply_rails: u8,
    /// Voltages as descriptive metadata, e.g. "Vdd, 2Vdd/3, Vdd/3".
    pub rails_desc: Option<&'static str>,
    pub source: Source,
    pub notes: Vec<String>,
}

impl PrimitiveSpec {
    pub fn input_ports(&self) -> impl Iterator<Item = &PrimPort> {
        self.ports
            .iter()
            .filter(|p| p.direction == PortDirection::Input)
    }

    pub fn output_ports(&self) -> impl Iterator<Item = &PrimPort> {
        self.ports
            .iter()
            .filter(|p| p.direction == PortDirection::Output)
    }

    pub fn port(&self, name: &str) -> Option<&PrimPort> {
        self.ports.iter().find(|p| p.name == name)
    }

    pub fn display_name(&self) -> String {
        format!("{}/{}", self.name, self.variant)
    }
}

/// Circuit-level reported cost (a composite, not an instantiable cell).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositeCost {
    pub name: String,
    pub reported_tc: u32,
    pub description: String,
}

/// Mixed-radix (half-)adders used in the quaternary Wallace reduction,
/// named by the maximum values of their inputs (3 = quaternary digit,
/// 2 = ternary carry, 1 = binary carry).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MixedRadixKind {
    Q332,
    Q322,
    Qha32,
    Qha31,
}

impl MixedRadixKind {
    pub const ALL: [MixedRadixKind; 4] = [
        MixedRadixKind::Q332,
        MixedRadixKind::Q322,
        MixedRadixKind::Qha32,
        MixedRadixKind::Qha31,
    ];

    pub fn cell_name(self) -> &'static str {
        match self {
            MixedRadixKind::Q332 => "q332",
            MixedRadixKind::Q322 => "q322",
            MixedRadixKind::Qha32 => "qha32",
            MixedRadixKind::Qha31 => "qha31",
        }
    }

    pub fn input_radices(self) -> &'static [Radix] {
        match self {
            MixedRadixKind::Q332 => &[Radix::Quaternary, Radix::Quaternary, Radix::Ternary],
            MixedRadixKind::Q322 => &[Radix::Quaternary, Radix::Ternary, Radix::Ternary],
            MixedRadixKind::Qha32 => &[Radix::Quaternary, Radix::Ternary],
            MixedRadixKind::Qha31 => &[Radix::Quaternary, Radix::Binary],
        }
    }

    pub fn max_sum(self) -> u8 {
        self.input_radices().iter().map(|r| r.max_value()).sum()
    }

    /// Carry radix is ⌊max_sum/4⌋ + 1 levels.
    pub fn carry_radix(self) -> Radix {
        Radix::from_levels(self.max_sum() / 4 + 1).expect("carry radix in range")
    }
}

/// Build one mixed-radix adder cell: the output digit is the sum mod 4,
/// the carry the sum div 4. Costs are unspecified by the sources.
pub fn mixed_radix_adder_spec(kind: MixedRadixKind) -> PrimitiveSpec {
    let inputs = kind.input_radices();
    let carry = kind.carry_radix();
    let mut ports: Vec<PrimPort> = Vec::new();
    let names: [&'static str; 3] = ["a", "b", "c"];
    for (i, r) in inputs.iter().enumerate() {
        ports.push(inp(names[i], *r));
    }
    ports.push(outp("s", Radix::Quaternary));
    ports.push(outp("co", carry));
    let behavior =
        TruthTable::from_fn(inputs.to_vec(), vec![Radix::Quaternary, carry], |i, out| {
            let sum: u8 = i.iter().sum();
            out[0] = sum % 4;
            out[1] = sum / 4;
        });
    PrimitiveSpec {
        name: kind.cell_name().to_string(),
        variant: "baseline".to_string(),
        ports,
        behavior,
        reported_tc: None,
        tc_interval: None,
        supply_rails: 3,
        rails_desc: Some(THREE_RAIL_DESC),
        source: Source::Reported,
        notes: vec![],
    }
}

/// The cell library: immutable after construction, concurrent reads safe.
#[derive(Clone, Debug, Default)]
pub struct Catalog {
    primitives: BTreeMap<(String, String), PrimitiveSpec>,
    defaults: BTreeMap<String, String>,
    composites: BTreeMap<String, CompositeCost>,
}

impl Catalog {
    pub fn insert(&mut self, spec: PrimitiveSpec) {
        self.defaults
            .entry(spec.name.clone())
            .or_insert_with(|| spec.variant.clone());
        self.primitives
            .insert((spec.name.clone(), spec.variant.clone()), spec);
    }

    pub fn insert_composite(&mut self, c: CompositeCost) {
        self.composites.insert(c.name.clone(), c);
    }

    /// Look a cell up by name, optionally pinning the variant. Without a
    /// variant the first-registered variant of that name is returned.
    pub fn get(&self, name: &str, variant: Option<&str>) -> Option<&PrimitiveSpec> {
        let variant = match variant {
            Some(v) => v.to_string(),
            None => self.defaults.get(name)?.clone(),
        };
        self.primitives.get(&(name.to_string(), variant))
    }

    pub fn iter(&self) -> impl Iterator<Item = &PrimitiveSpec> {
        self.primitives.values()
    }

    pub fn len(&self) -> usize {
        self.primitives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primitives.is_empty()
    }

    pub fn composite(&self, name: &str) -> Option<&CompositeCost> {
        self.composites.get(name)
    }

    pub fn composites(&self) -> impl Iterator<Item = &CompositeCost> {
        self.composites.values()
    }

    /// The builtin library with default knobs.
    pub fn builtin_default() -> Catalog {
        Self::builtin(&Config::default())
    }

    /// The builtin library. Config selects the effective qmul cost within
    /// its published interval and supplies overrides for uncosted cells.
    pub fn builtin(cfg: &Config) -> Catalog {
        let mut cat = Catalog::default();
        build_binary_cells(&mut cat, cfg);
        build_quaternary_gates(&mut cat);
        build_codec_cells(&mut cat, cfg);
        build_adders(&mut cat);
        build_multiplier_cells(&mut cat, cfg);
        build_decomposition_cells(&mut cat);
        build_plumbing_cells(&mut cat);
        build_composites(&mut cat);
        cat
    }
}

const B: Radix = Radix::Binary;
const T: Radix = Radix::Ternary;
const Q: Radix = Radix::Quaternary;

fn cell(
    name: &str,
    variant: &str,
    ports: Vec<PrimPort>,
    behavior: TruthTable,
    tc: Option<u32>,
    rails: u8,
    source: Source,
) -> PrimitiveSpec {
    PrimitiveSpec {
        name: name.to_string(),
        variant: variant.to_string(),
        ports,
        behavior,
        reported_tc: tc,
        tc_interval: None,
        supply_rails: rails,
        rails_desc: if rails >= 3 {
            Some(THREE_RAIL_DESC)
        } else {
            None
        },
        source,
        notes: vec![],
    }
}

fn gate1(f: impl Fn(u8) -> u8, radix: Radix) -> (Vec<PrimPort>, TruthTable) {
    let ports = vec![inp("a", radix), outp("y", radix)];
    let table = TruthTable::from_fn(vec![radix], vec![radix], |i, o| o[0] = f(i[0]));
    (ports, table)
}

fn gate2(f: impl Fn(u8, u8) -> u8, radix: Radix) -> (Vec<PrimPort>, TruthTable) {
    let ports = vec![inp("a", radix), inp("b", radix), outp("y", radix)];
    let table = TruthTable::from_fn(vec![radix, radix], vec![radix], |i, o| o[0] = f(i[0], i[1]));
    (ports, table)
}

fn adder_cell(radix: Radix) -> (Vec<PrimPort>, TruthTable) {
    let ports = vec![
        inp("a", radix),
        inp("b", radix),
        inp("ci", B),
        outp("s", radix),
        outp("co", B),
    ];
    let base = radix.levels();
    let table = TruthTable::from_fn(vec![radix, radix, B], vec![radix, B], move |i, o| {
        let sum = i[0] + i[1] + i[2];
        o[0] = sum % base;
        o[1] = sum / base;
    });
    (ports, table)
}

fn build_binary_cells(cat: &mut Catalog, cfg: &Config) {
    let (p, t) = gate1(|a| 1 - a, B);
    cat.insert(cell(
        "inverter_binary",
        "baseline",
        p,
        t,
        Some(2),
        1,
        Source::Derived,
    ));

    let (p, t) = gate2(|a, b| 1 - (a & b), B);
    cat.insert(cell(
        "nand2_binary",
        "baseline",
        p,
        t,
        Some(4),
        1,
        Source::Reported,
    ));

    let (p, t) = gate2(|a, b| a & b, B);
    cat.insert(cell(
        "and2_binary",
        "baseline",
        p,
        t,
        Some(6),
        1,
        Source::Reported,
    ));

    let (p, t) = gate2(|a, b| a ^ b, B);
    cat.insert(cell(
        "xor2_binary",
        "baseline",
        p,
        t,
        Some(10),
        1,
        Source::Reported,
    ));

    let (p, t) = adder_cell(B);
    cat.insert(cell(
        "full_adder_binary",
        "baseline",
        p,
        t,
        Some(28),
        1,
        Source::Reported,
    ));

    // Not costed by the sources; composed as XOR (10 T) + AND (6 T).
    let ports = vec![inp("a", B), inp("b", B), outp("s", B), outp("co", B)];
    let table = TruthTable::from_fn(vec![B, B], vec![B, B], |i, o| {
        o[0] = i[0] ^ i[1];
        o[1] = i[0] & i[1];
    });
    cat.insert(cell(
        "half_adder_binary",
        "baseline",
        ports,
        table,
        Some(cfg.half_adder_tc),
        1,
        Source::Derived,
    ));
}

fn build_quaternary_gates(cat: &mut Catalog) {
    let (p, t) = gate1(|a| 3 - a, Q);
    cat.insert(cell(
        "inverter_quaternary",
        "baseline",
        p,
        t,
        Some(10),
        3,
        Source::Reported,
    ));

    let (p, t) = gate2(|a, b| 3 - a.min(b), Q);
    cat.insert(cell(
        "nand2_quaternary",
        "sharifi",
        p,
        t,
        Some(20),
        3,
        Source::Reported,
    ));
    let (p, t) = gate2(|a, b| 3 - a.min(b), Q);
    cat.insert(cell(
        "nand2_quaternary",
        "ebrahimi",
        p,
        t,
        Some(16),
        3,
        Source::Reported,
    ));
}

fn detector_cell(kind: ThresholdKind, tc: Option<u32>) -> PrimitiveSpec {
    let (p, t) = gate1(move |a| threshold_value(kind, a), Q);
    cell(kind.name(), "baseline", p, t, tc, 1, Source::Reported)
}

fn build_codec_cells(cat: &mut Catalog, cfg: &Config) {
    cat.insert(detector_cell(ThresholdKind::Nqi, cfg.nqi_tc));
    cat.insert(detector_cell(ThresholdKind::Iqi, cfg.iqi_tc));
    cat.insert(detector_cell(ThresholdKind::Pqi, cfg.pqi_tc));

    for (variant, map) in [
        ("gray", CodeMap::gray()),
        ("positional", CodeMap::positional()),
    ] {
        let ports = vec![inp("q", Q), outp("x", B), outp("y", B)];
        let table = TruthTable::from_fn(vec![Q], vec![B, B], move |i, o| {
            let (x, y) = map.forward_bits(i[0]);
            o[0] = x;
            o[1] = y;
        });
        let mut spec = cell(
            "decoder_q_to_b",
            variant,
            ports,
            table,
            Some(14),
            1,
            Source::Reported,
        );
        if variant == "positional" {
            spec.source = Source::Derived;
            spec.notes
                .push("cost carried over from the published gray-code design".to_string());
        }
        cat.insert(spec);

        let ports = vec![inp("x", B), inp("y", B), outp("q", Q)];
        let table = TruthTable::from_fn(vec![B, B], vec![Q], move |i, o| {
            o[0] = map.inverse_bits(i[0], i[1]);
        });
        let mut spec = cell(
            "encoder_b_to_q",
            variant,
            ports,
            table,
            Some(12),
            3,
            Source::Reported,
        );
        if variant == "positional" {
            spec.source = Source::Derived;
            spec.notes
                .push("cost carried over from the published gray-code design".to_string());
        }
        cat.insert(spec);
    }
}

fn build_adders(cat: &mut Catalog) {
    // All quaternary full-adder variants share the arithmetic truth table;
    // they differ in implementation style, cost and supply rails.
    let variants: [(&str, &str, u32, u8, &[&str]); 8] = [
        ("qfa_v1", "3ps", 112, 3, &[]),
        ("qfa_v1", "1ps", 112, 1, &[]),
        ("qfa_v2", "ebrahimi", 111, 3, &[]),
        ("qfa_v3", "moaiyeri", 154, 3, &[]),
        ("qfa_v3", "roosta_3ps", 82, 3, &[]),
        ("qfa_v3", "roosta_1ps", 130, 1, &[]),
        (
            "qfa_v3",
            "roosta_3ps_buffered",
            100,
            3,
            &[
                "fan-out-buffered variant of roosta_3ps (82 T), paired by magnitude",
                "source text labels the 100 T figure '1 power supply'",
            ],
        ),
        (
            "qfa_v3",
            "roosta_1ps_buffered",
            148,
            1,
            &[
                "fan-out-buffered variant of roosta_1ps (130 T), paired by magnitude",
                "source text labels the 148 T figure '3 power supplies'",
            ],
        ),
    ];
    for (name, variant, tc, rails, notes) in variants {
        let (p, t) = adder_cell(Q);
        let mut spec = cell(name, variant, p, t, Some(tc), rails, Source::Reported);
        spec.notes = notes.iter().map(|s| s.to_string()).collect();
        cat.insert(spec);
    }
}

fn build_multiplier_cells(cat: &mut Catalog, cfg: &Config) {
    let ports = vec![inp("a", Q), inp("b", Q), outp("p", Q), outp("c", T)];
    let table = TruthTable::from_fn(vec![Q, Q], vec![Q, T], |i, o| {
        let (p, c) = mul_digit_oracle(
            LogicLevel::quaternary(i[0]).unwrap(),
            LogicLevel::quaternary(i[1]).unwrap(),
        )
        .unwrap();
        o[0] = p.value();
        o[1] = c.value();
    });
    let mut spec = cell(
        "qmul_digit",
        "baseline",
        ports,
        table,
        Some(cfg.qmul_tc_choice),
        3,
        Source::Reported,
    );
    spec.tc_interval = Some((crate::config::QMUL_TC_MIN, crate::config::QMUL_TC_MAX));
    spec.notes
        .push("reported as an interval; effective value selected by config".to_string());
    cat.insert(spec);

    let overrides = [
        (MixedRadixKind::Q332, cfg.q332_tc),
        (MixedRadixKind::Q322, cfg.q322_tc),
        (MixedRadixKind::Qha32, cfg.qha32_tc),
        (MixedRadixKind::Qha31, cfg.qha31_tc),
    ];
    for (kind, tc) in overrides {
        let mut spec = mixed_radix_adder_spec(kind);
        spec.reported_tc = tc;
        cat.insert(spec);
    }
}

fn build_decomposition_cells(cat: &mut Catalog) {
    // Indicator cells for the sum-level decomposition of the quaternary
    // adder (f = 3·f3 + 2·f2 + 1·f1) and the weighted composer. Uncosted.
    for (name, level) in [
        ("qfa_sum_mask3", 3u8),
        ("qfa_sum_mask2", 2),
        ("qfa_sum_mask1", 1),
    ] {
        let ports = vec![inp("a", Q), inp("b", Q), inp("ci", B), outp("y", B)];
        let table = TruthTable::from_fn(vec![Q, Q, B], vec![B], move |i, o| {
            o[0] = ((i[0] + i[1] + i[2]) % 4 == level) as u8;
        });
        cat.insert(cell(
            name,
            "baseline",
            ports,
            table,
            None,
            1,
            Source::Derived,
        ));
    }
    let ports = vec![inp("a", Q), inp("b", Q), inp("ci", B), outp("y", B)];
    let table = TruthTable::from_fn(vec![Q, Q, B], vec![B], |i, o| {
        o[0] = (i[0] + i[1] + i[2] >= 4) as u8;
    });
    cat.insert(cell(
        "qfa_carry_mask",
        "baseline",
        ports,
        table,
        None,
        1,
        Source::Derived,
    ));

    let ports = vec![inp("f3", B), inp("f2", B), inp("f1", B), outp("y", Q)];
    let table = TruthTable::from_fn(vec![B, B, B], vec![Q], |i, o| {
        o[0] = (3 * i[0] + 2 * i[1] + i[2]).min(3);
    });
    cat.insert(cell(
        "level_composer",
        "baseline",
        ports,
        table,
        None,
        3,
        Source::Derived,
    ));
}

fn build_plumbing_cells(cat: &mut Catalog) {
    // Identity buffers, realized as two cascaded inverters of the net's
    // radix; costs follow from the inverter cells and are config-free.
    let (p, t) = gate1(|a| a, B);
    cat.insert(cell(
        "buffer_binary",
        "baseline",
        p,
        t,
        Some(4),
        1,
        Source::Derived,
    ));
    let (p, t) = gate1(|a| a, Q);
    cat.insert(cell(
        "buffer_quaternary",
        "baseline",
        p,
        t,
        Some(20),
        3,
        Source::Derived,
    ));

    // Tie-low cells and radix-widening pads: wires, zero transistors.
    for (name, radix) in [("const0_binary", B), ("const0_quaternary", Q)] {
        let ports = vec![outp("y", radix)];
        let table = TruthTable::from_fn(vec![], vec![radix], |_, o| o[0] = 0);
        cat.insert(cell(
            name,
            "baseline",
            ports,
            table,
            Some(0),
            1,
            Source::Derived,
        ));
    }
    let pads = [
        ("pad_binary_to_ternary", B, T),
        ("pad_binary_to_quaternary", B, Q),
        ("pad_ternary_to_quaternary", T, Q),
    ];
    for (name, from, to) in pads {
        let ports = vec![inp("a", from), outp("y", to)];
        let table = TruthTable::from_fn(vec![from], vec![to], |i, o| o[0] = i[0]);
        cat.insert(cell(
            name,
            "baseline",
            ports,
            table,
            Some(0),
            1,
            Source::Derived,
        ));
    }
}

fn build_composites(cat: &mut Catalog) {
    let entries = [
        ("v1_adder", 112, "1-digit adder built from a 2-bit binary adder between a 4-to-2 decoder pair and a 2-to-4 encoder"),
        ("wallace_binary_8", 1892, "8x8 binary Wallace-tree multiplier"),
        ("v1_multiplier_4", 2032, "4x4 quaternary multiplier wrapping an 8x8 binary core with decoders and encoders"),
        ("wallace_quaternary_4", 2888, "4x4 quaternary Wallace-tree multiplier, direct implementation"),
    ];
    for (name, tc, desc) in entries {
        cat.insert_composite(CompositeCost {
            name: name.to_string(),
            reported_tc: tc,
            description: desc.to_string(),
        });
    }
}

/// Cell names generators rely on.
pub mod names {
    pub const INVERTER_BINARY: &str = "inverter_binary";
    pub const NAND2_BINARY: &str = "nand2_binary";
    pub const AND2_BINARY: &str = "and2_binary";
    pub const XOR2_BINARY: &str = "xor2_binary";
    pub const FULL_ADDER_BINARY: &str = "full_adder_binary";
    pub const HALF_ADDER_BINARY: &str = "half_adder_binary";
    pub const INVERTER_QUATERNARY: &str = "inverter_quaternary";
    pub const NAND2_QUATERNARY: &str = "nand2_quaternary";
    pub const DECODER_Q_TO_B: &str = "decoder_q_to_b";
    pub const ENCODER_B_TO_Q: &str = "encoder_b_to_q";
    pub const QMUL_DIGIT: &str = "qmul_digit";
    pub const BUFFER_BINARY: &str = "buffer_binary";
    pub const BUFFER_QUATERNARY: &str = "buffer_quaternary";
    pub const CONST0_BINARY: &str = "const0_binary";
    pub const CONST0_QUATERNARY: &str = "const0_quaternary";
    pub const PAD_BINARY_TO_TERNARY: &str = "pad_binary_to_ternary";
    pub const PAD_BINARY_TO_QUATERNARY: &str = "pad_binary_to_quaternary";
    pub const PAD_TERNARY_TO_QUATERNARY: &str = "pad_ternary_to_quaternary";
}
