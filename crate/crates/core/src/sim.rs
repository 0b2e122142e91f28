//! Levelized functional simulation and verification.
//!
//! A netlist is compiled once (net interning + topological step list),
//! then evaluated per input vector. Exhaustive verification enumerates the
//! full input cross-product in a canonical order: input ports sorted by
//! name, the lexicographically first varying fastest. Witness vectors are
//! reproducible across runs.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::catalog::{Catalog, TruthTable};
use crate::logic::{CodeKind, CodeMap, LogicLevel, Radix};
use crate::netlist::{
    ensure_valid, Connectivity, Netlist, NetlistError, OperandGroup, OperandLayout,
};

/// Input port name → value. Must cover every circuit input.
pub type Assignment = BTreeMap<String, LogicLevel>;

/// Default bound on exhaustive input spaces (2^20 vectors).
pub const DEFAULT_CAP: u64 = 1 << 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SimError {
    #[error(transparent)]
    Netlist(#[from] NetlistError),
    #[error("input port '{0}' has no assigned value")]
    IncompleteAssignment(String),
    #[error("assignment names unknown input port '{0}'")]
    UnknownInputPort(String),
    #[error("value for '{port}' has radix {found}, the port expects {expected}")]
    AssignmentRadixMismatch {
        port: String,
        expected: Radix,
        found: Radix,
    },
    #[error("input space of {space} vectors exceeds the cap of {cap}; use sampled verification")]
    InputSpaceTooLarge { space: u64, cap: u64 },
    #[error("netlist '{0}' carries no operand layout; cannot interpret its ports as operands")]
    MissingOperandLayout(String),
    #[error("operand layout of '{netlist}' is unusable: {reason}")]
    BadOperandLayout { netlist: String, reason: String },
    #[error("circuits are not comparable: {0}")]
    IncompatibleSignatures(String),
    #[error("oracle value {value} does not fit the declared output groups of '{netlist}'")]
    OracleOverflow { netlist: String, value: u64 },
}

struct Step {
    table: TruthTable,
    input_nets: Vec<usize>,
    strides: Vec<usize>,
    output_nets: Vec<usize>,
}

/// A netlist lowered to indexed nets and a topologically ordered step list.
pub struct CompiledCircuit {
    name: String,
    net_count: usize,
    /// (port name, radix, net index), sorted by port name.
    inputs: Vec<(String, Radix, usize)>,
    /// (port name, radix, net index), declaration order.
    outputs: Vec<(String, Radix, usize)>,
    steps: Vec<Step>,
    operands: Option<OperandLayout>,
}

impl CompiledCircuit {
    pub fn compile(netlist: &Netlist, catalog: &Catalog) -> Result<Self, SimError> {
        ensure_valid(netlist, catalog)?;
        let conn = Connectivity::build(netlist, catalog);
        let order = crate::netlist::topo_indices(netlist, &conn)
            .expect("validated netlist cannot be cyclic");

        let net_index: BTreeMap<&str, usize> = netlist
            .nets
            .keys()
            .enumerate()
            .map(|(i, n)| (n.as_str(), i))
            .collect();

        let mut inputs: Vec<(String, Radix, usize)> = netlist
            .input_ports()
            .map(|p| (p.name.clone(), p.radix, net_index[p.net.as_str()]))
            .collect();
        inputs.sort_by(|a, b| a.0.cmp(&b.0));
        let outputs: Vec<(String, Radix, usize)> = netlist
            .output_ports()
            .map(|p| (p.name.clone(), p.radix, net_index[p.net.as_str()]))
            .collect();

        let mut steps = Vec::with_capacity(order.len());
        for idx in order {
            let inst = &netlist.instances[idx];
            let spec = catalog
                .get(&inst.primitive.name, inst.primitive.variant.as_deref())
                .expect("validated instance resolves");
            let mut input_nets = Vec::new();
            let mut strides = Vec::new();
            let mut stride = 1usize;
            for port in spec.input_ports() {
                input_nets.push(net_index[inst.bindings[port.name].as_str()]);
                strides.push(stride);
                stride *= port.radix.levels() as usize;
            }
            let output_nets = spec
                .output_ports()
                .map(|port| net_index[inst.bindings[port.name].as_str()])
                .collect();
            steps.push(Step {
                table: spec.behavior.clone(),
                input_nets,
                strides,
                output_nets,
            });
        }

        Ok(CompiledCircuit {
            name: netlist.name.clone(),
            net_count: netlist.nets.len(),
            inputs,
            outputs,
            steps,
            operands: netlist.operands.clone(),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Input ports in canonical (name-sorted) order.
    pub fn input_ports(&self) -> &[(String, Radix, usize)] {
        &self.inputs
    }

    pub fn output_ports(&self) -> &[(String, Radix, usize)] {
        &self.outputs
    }

    pub fn input_space(&self) -> u64 {
        self.inputs
            .iter()
            .fold(1u64, |acc, (_, r, _)| acc.saturating_mul(r.levels() as u64))
    }

    /// Evaluate one vector; `inputs` follows [`Self::input_ports`] order,
    /// the result follows [`Self::output_ports`] order. Buffers are caller
    /// provided so enumeration loops do not allocate.
    pub fn eval_into(&self, inputs: &[u8], nets: &mut [u8], out: &mut [u8]) {
        debug_assert_eq!(inputs.len(), self.inputs.len());
        debug_assert_eq!(nets.len(), self.net_count);
        for ((_, _, net), &v) in self.inputs.iter().zip(inputs) {
            nets[*net] = v;
        }
        for step in &self.steps {
            let mut idx = 0usize;
            for (net, stride) in step.input_nets.iter().zip(&step.strides) {
                idx += nets[*net] as usize * stride;
            }
            let row = step.table.row_slice(idx);
            for (net, &v) in step.output_nets.iter().zip(row) {
                nets[*net] = v;
            }
        }
        for ((_, _, net), slot) in self.outputs.iter().zip(out) {
            *slot = nets[*net];
        }
    }

    pub fn eval(&self, inputs: &[u8]) -> Vec<u8> {
        let mut nets = vec![0u8; self.net_count];
        let mut out = vec![0u8; self.outputs.len()];
        self.eval_into(inputs, &mut nets, &mut out);
        out
    }
}

/// Evaluate a complete named assignment; the checked one-shot entry point.
pub fn evaluate(
    netlist: &Netlist,
    catalog: &Catalog,
    assignment: &Assignment,
) -> Result<BTreeMap<String, LogicLevel>, SimError> {
    let circuit = CompiledCircuit::compile(netlist, catalog)?;
    for name in assignment.keys() {
        if !circuit.inputs.iter().any(|(n, _, _)| n == name) {
            return Err(SimError::UnknownInputPort(name.clone()));
        }
    }
    let mut values = Vec::with_capacity(circuit.inputs.len());
    for (name, radix, _) in &circuit.inputs {
        let level = assignment
            .get(name)
            .ok_or_else(|| SimError::IncompleteAssignment(name.clone()))?;
        if level.radix() != *radix {
            return Err(SimError::AssignmentRadixMismatch {
                port: name.clone(),
                expected: *radix,
                found: level.radix(),
            });
        }
        values.push(level.value());
    }
    let out = circuit.eval(&values);
    circuit
        .outputs
        .iter()
        .zip(out)
        .map(|((name, radix, _), v)| Ok((name.clone(), LogicLevel::new(*radix, v).unwrap())))
        .collect()
}

/// One failing vector: the input assignment and both sides' values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub inputs: BTreeMap<String, u8>,
    pub expected: BTreeMap<String, u64>,
    pub actual: BTreeMap<String, u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub circuit: String,
    pub total_vectors: u64,
    pub mismatches: Vec<Mismatch>,
    pub exhaustive: bool,
    pub seed: Option<u64>,
}

impl VerifyReport {
    pub fn is_ok(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn summary(&self) -> String {
        format!(
            "{} vectors, {} mismatches",
            self.total_vectors,
            self.mismatches.len()
        )
    }
}

/// Reference function over integer operand groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Oracle {
    /// Sum of all input groups, split across output groups low-to-high.
    Add,
    /// Product of all input groups, split across output groups low-to-high.
    Mul,
}

impl Oracle {
    pub fn name(self) -> &'static str {
        match self {
            Oracle::Add => "add",
            Oracle::Mul => "mul",
        }
    }

    fn combine(self, inputs: &[u64]) -> u64 {
        match self {
            Oracle::Add => inputs.iter().sum(),
            Oracle::Mul => inputs.iter().product(),
        }
    }
}

impl std::str::FromStr for Oracle {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "add" => Ok(Oracle::Add),
            "mul" => Ok(Oracle::Mul),
            other => Err(format!("unknown oracle '{other}' (expected add or mul)")),
        }
    }
}

/// Operand groups resolved to indices into the compiled input/output orders.
struct ResolvedLayout {
    inputs: Vec<(String, Radix, Vec<usize>)>,
    outputs: Vec<(String, Radix, Vec<usize>)>,
}

fn resolve_layout(circuit: &CompiledCircuit) -> Result<ResolvedLayout, SimError> {
    let layout = circuit
        .operands
        .as_ref()
        .ok_or_else(|| SimError::MissingOperandLayout(circuit.name.clone()))?;
    let bad = |reason: String| SimError::BadOperandLayout {
        netlist: circuit.name.clone(),
        reason,
    };
    let resolve = |groups: &[OperandGroup],
                   ports: &[(String, Radix, usize)],
                   role: &str|
     -> Result<Vec<(String, Radix, Vec<usize>)>, SimError> {
        let mut used = vec![false; ports.len()];
        let mut out = Vec::new();
        for g in groups {
            let mut indices = Vec::new();
            for pname in &g.ports {
                let Some(i) = ports.iter().position(|(n, _, _)| n == pname) else {
                    return Err(bad(format!(
                        "group '{}' names missing {role} port '{pname}'",
                        g.name
                    )));
                };
                if ports[i].1 != g.radix {
                    return Err(bad(format!(
                        "group '{}' declares radix {} but port '{pname}' has radix {}",
                        g.name, g.radix, ports[i].1
                    )));
                }
                if std::mem::replace(&mut used[i], true) {
                    return Err(bad(format!("{role} port '{pname}' listed twice",)));
                }
                indices.push(i);
            }
            out.push((g.name.clone(), g.radix, indices));
        }
        if let Some(i) = used.iter().position(|u| !u) {
            return Err(bad(format!(
                "{role} port '{}' not covered by any group",
                ports[i].0
            )));
        }
        Ok(out)
    };
    Ok(ResolvedLayout {
        inputs: resolve(&layout.inputs, &circuit.inputs, "input")?,
        outputs: resolve(&layout.outputs, &circuit.outputs, "output")?,
    })
}

fn group_value(values: &[u8], radix: Radix, indices: &[usize]) -> u64 {
    let base = radix.levels() as u64;
    indices
        .iter()
        .rev()
        .fold(0u64, |acc, &i| acc * base + values[i] as u64)
}

fn expected_outputs(
    circuit: &CompiledCircuit,
    resolved: &ResolvedLayout,
    oracle: Oracle,
    input_values: &[u64],
) -> Result<Vec<u64>, SimError> {
    let total = oracle.combine(input_values);
    let mut rest = total;
    let mut out = Vec::with_capacity(resolved.outputs.len());
    for (name, radix, indices) in &resolved.outputs {
        let _ = name;
        let cap = (radix.levels() as u64).pow(indices.len() as u32);
        out.push(rest % cap);
        rest /= cap;
    }
    if rest != 0 {
        return Err(SimError::OracleOverflow {
            netlist: circuit.name.clone(),
            value: total,
        });
    }
    Ok(out)
}

struct Enumerator<'a> {
    ports: &'a [(String, Radix, usize)],
    values: Vec<u8>,
    done: bool,
}

impl<'a> Enumerator<'a> {
    fn new(ports: &'a [(String, Radix, usize)]) -> Self {
        Enumerator {
            ports,
            values: vec![0u8; ports.len()],
            done: false,
        }
    }

    /// Advance to the next vector; first port varies fastest.
    fn advance(&mut self) -> bool {
        for (slot, (_, radix, _)) in self.values.iter_mut().zip(self.ports) {
            *slot += 1;
            if *slot < radix.levels() {
                return true;
            }
            *slot = 0;
        }
        self.done = true;
        false
    }
}

fn named_inputs(ports: &[(String, Radix, usize)], values: &[u8]) -> BTreeMap<String, u8> {
    ports
        .iter()
        .zip(values)
        .map(|((name, _, _), &v)| (name.clone(), v))
        .collect()
}

fn check_vector(
    circuit: &CompiledCircuit,
    resolved: &ResolvedLayout,
    oracle: Oracle,
    values: &[u8],
    nets: &mut [u8],
    out: &mut [u8],
    mismatches: &mut Vec<Mismatch>,
) -> Result<(), SimError> {
    let input_values: Vec<u64> = resolved
        .inputs
        .iter()
        .map(|(_, radix, idx)| group_value(values, *radix, idx))
        .collect();
    let expected = expected_outputs(circuit, resolved, oracle, &input_values)?;
    circuit.eval_into(values, nets, out);
    let actual: Vec<u64> = resolved
        .outputs
        .iter()
        .map(|(_, radix, idx)| group_value(out, *radix, idx))
        .collect();
    if expected != actual {
        mismatches.push(Mismatch {
            inputs: named_inputs(&circuit.inputs, values),
            expected: resolved
                .outputs
                .iter()
                .zip(&expected)
                .map(|((n, _, _), &v)| (n.clone(), v))
                .collect(),
            actual: resolved
                .outputs
                .iter()
                .zip(&actual)
                .map(|((n, _, _), &v)| (n.clone(), v))
                .collect(),
        });
    }
    Ok(())
}

/// Enumerate the complete input cross-product and compare every vector
/// against the oracle. Refuses input spaces above `cap`.
pub fn verify_exhaustive(
    netlist: &Netlist,
    catalog: &Catalog,
    oracle: Oracle,
    cap: Option<u64>,
) -> Result<VerifyReport, SimError> {
    let circuit = CompiledCircuit::compile(netlist, catalog)?;
    let resolved = resolve_layout(&circuit)?;
    let cap = cap.unwrap_or(DEFAULT_CAP);
    let space = circuit.input_space();
    if space > cap {
        return Err(SimError::InputSpaceTooLarge { space, cap });
    }
    let mut nets = vec![0u8; circuit.net_count];
    let mut out = vec![0u8; circuit.outputs.len()];
    let mut mismatches = Vec::new();
    let mut en = Enumerator::new(&circuit.inputs);
    loop {
        check_vector(
            &circuit,
            &resolved,
            oracle,
            &en.values,
            &mut nets,
            &mut out,
            &mut mismatches,
        )?;
        if !en.advance() {
            break;
        }
    }
    Ok(VerifyReport {
        circuit: circuit.name.clone(),
        total_vectors: space,
        mismatches,
        exhaustive: true,
        seed: None,
    })
}

pub(crate) struct SplitMix64(u64);

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }
}

/// Seeded sampling plus the mandatory corner set: all-zero, all-max, and
/// each single input at max.
pub fn verify_sampled(
    netlist: &Netlist,
    catalog: &Catalog,
    oracle: Oracle,
    samples: u64,
    seed: u64,
) -> Result<VerifyReport, SimError> {
    let circuit = CompiledCircuit::compile(netlist, catalog)?;
    let resolved = resolve_layout(&circuit)?;
    let n = circuit.inputs.len();
    let mut vectors: Vec<Vec<u8>> = Vec::new();
    vectors.push(vec![0u8; n]);
    vectors.push(
        circuit
            .inputs
            .iter()
            .map(|(_, r, _)| r.max_value())
            .collect(),
    );
    for i in 0..n {
        let mut v = vec![0u8; n];
        v[i] = circuit.inputs[i].1.max_value();
        vectors.push(v);
    }
    let mut rng = SplitMix64::new(seed);
    for _ in 0..samples {
        let v = circuit
            .inputs
            .iter()
            .map(|(_, r, _)| (rng.next_u64() % r.levels() as u64) as u8)
            .collect();
        vectors.push(v);
    }
    let mut nets = vec![0u8; circuit.net_count];
    let mut out = vec![0u8; circuit.outputs.len()];
    let mut mismatches = Vec::new();
    for v in &vectors {
        check_vector(
            &circuit,
            &resolved,
            oracle,
            v,
            &mut nets,
            &mut out,
            &mut mismatches,
        )?;
    }
    Ok(VerifyReport {
        circuit: circuit.name.clone(),
        total_vectors: vectors.len() as u64,
        mismatches,
        exhaustive: false,
        seed: Some(seed),
    })
}

enum GroupRelation {
    /// Same radix and width: values carry over port-for-port.
    Direct,
    /// Subject group is quaternary, baseline is its 2-bits-per-digit image.
    DigitToBits(CodeMap),
    /// Subject group is binary, baseline is quaternary.
    BitsToDigit(CodeMap),
}

struct GroupPair {
    subject_ports: Vec<usize>,
    subject_radix: Radix,
    baseline_ports: Vec<usize>,
    baseline_radix: Radix,
    relation: GroupRelation,
}

fn relate_groups(
    subject: &CompiledCircuit,
    baseline: &CompiledCircuit,
    map: CodeMap,
) -> Result<(Vec<GroupPair>, Vec<GroupPair>), SimError> {
    let s = resolve_layout(subject)?;
    let b = resolve_layout(baseline)?;
    let pair = |sg: &[(String, Radix, Vec<usize>)],
                bg: &[(String, Radix, Vec<usize>)],
                role: &str|
     -> Result<Vec<GroupPair>, SimError> {
        if sg.len() != bg.len() {
            return Err(SimError::IncompatibleSignatures(format!(
                "{role} group counts differ ({} vs {})",
                sg.len(),
                bg.len()
            )));
        }
        let mut out = Vec::new();
        for (sname, sradix, sports) in sg {
            let Some((_, bradix, bports)) = bg.iter().find(|(n, _, _)| n == sname) else {
                return Err(SimError::IncompatibleSignatures(format!(
                    "baseline has no {role} group '{sname}'"
                )));
            };
            let relation = if sradix == bradix && sports.len() == bports.len() {
                GroupRelation::Direct
            } else if *sradix == Radix::Quaternary
                && *bradix == Radix::Binary
                && bports.len() == 2 * sports.len()
            {
                GroupRelation::DigitToBits(map)
            } else if *sradix == Radix::Binary
                && *bradix == Radix::Quaternary
                && sports.len() == 2 * bports.len()
            {
                GroupRelation::BitsToDigit(map)
            } else {
                return Err(SimError::IncompatibleSignatures(format!(
                    "{role} group '{sname}': radix {sradix} x{} vs radix {bradix} x{}",
                    sports.len(),
                    bports.len()
                )));
            };
            out.push(GroupPair {
                subject_ports: sports.clone(),
                subject_radix: *sradix,
                baseline_ports: bports.clone(),
                baseline_radix: *bradix,
                relation,
            });
        }
        Ok(out)
    };
    Ok((
        pair(&s.inputs, &b.inputs, "input")?,
        pair(&s.outputs, &b.outputs, "output")?,
    ))
}

/// Exhaustive circuit-vs-circuit comparison. With equal port signatures
/// the comparison is port-wise; otherwise operand groups are matched by
/// name and quaternary digits are relatable to bit pairs through a code
/// map (positional when none is given).
pub fn equiv_check(
    subject: &Netlist,
    baseline: &Netlist,
    catalog: &Catalog,
    code: Option<CodeKind>,
    cap: Option<u64>,
) -> Result<VerifyReport, SimError> {
    let a = CompiledCircuit::compile(subject, catalog)?;
    let b = CompiledCircuit::compile(baseline, catalog)?;
    let cap = cap.unwrap_or(DEFAULT_CAP);
    let space = a.input_space();
    if space > cap {
        return Err(SimError::InputSpaceTooLarge { space, cap });
    }

    let same_signature = {
        type Signature = (Vec<(String, Radix)>, Vec<(String, Radix)>);
        let sig = |c: &CompiledCircuit| -> Signature {
            let mut outs: Vec<(String, Radix)> =
                c.outputs.iter().map(|(n, r, _)| (n.clone(), *r)).collect();
            outs.sort();
            (
                c.inputs.iter().map(|(n, r, _)| (n.clone(), *r)).collect(),
                outs,
            )
        };
        sig(&a) == sig(&b)
    };

    let name = format!("{} vs {}", a.name, b.name);
    let mut mismatches = Vec::new();

    if same_signature {
        // Drive both with identical assignments, compare outputs by name.
        let b_input_order: Vec<usize> = a
            .inputs
            .iter()
            .map(|(n, _, _)| b.inputs.iter().position(|(bn, _, _)| bn == n).unwrap())
            .collect();
        let b_output_order: Vec<usize> = a
            .outputs
            .iter()
            .map(|(n, _, _)| b.outputs.iter().position(|(bn, _, _)| bn == n).unwrap())
            .collect();
        let mut a_nets = vec![0u8; a.net_count];
        let mut b_nets = vec![0u8; b.net_count];
        let mut a_out = vec![0u8; a.outputs.len()];
        let mut b_out = vec![0u8; b.outputs.len()];
        let mut b_vals = vec![0u8; b.inputs.len()];
        let mut en = Enumerator::new(&a.inputs);
        loop {
            for (ai, &bi) in b_input_order.iter().enumerate() {
                b_vals[bi] = en.values[ai];
            }
            a.eval_into(&en.values, &mut a_nets, &mut a_out);
            b.eval_into(&b_vals, &mut b_nets, &mut b_out);
            let differs = a_out
                .iter()
                .enumerate()
                .any(|(i, &v)| v != b_out[b_output_order[i]]);
            if differs {
                mismatches.push(Mismatch {
                    inputs: named_inputs(&a.inputs, &en.values),
                    expected: a
                        .outputs
                        .iter()
                        .enumerate()
                        .map(|(i, (n, _, _))| (n.clone(), b_out[b_output_order[i]] as u64))
                        .collect(),
                    actual: a
                        .outputs
                        .iter()
                        .zip(&a_out)
                        .map(|((n, _, _), &v)| (n.clone(), v as u64))
                        .collect(),
                });
            }
            if !en.advance() {
                break;
            }
        }
    } else {
        let map = CodeMap::new(code.unwrap_or(CodeKind::Positional));
        let (in_pairs, out_pairs) = relate_groups(&a, &b, map)?;
        let out_names: Vec<String> = resolve_layout(&a)?
            .outputs
            .iter()
            .map(|(n, _, _)| n.clone())
            .collect();
        let mut a_nets = vec![0u8; a.net_count];
        let mut b_nets = vec![0u8; b.net_count];
        let mut a_out = vec![0u8; a.outputs.len()];
        let mut b_out = vec![0u8; b.outputs.len()];
        let mut b_vals = vec![0u8; b.inputs.len()];
        let mut en = Enumerator::new(&a.inputs);
        loop {
            // translate subject inputs into the baseline's ports
            for p in &in_pairs {
                match &p.relation {
                    GroupRelation::Direct => {
                        for (si, bi) in p.subject_ports.iter().zip(&p.baseline_ports) {
                            b_vals[*bi] = en.values[*si];
                        }
                    }
                    GroupRelation::DigitToBits(m) => {
                        for (d, si) in p.subject_ports.iter().enumerate() {
                            let (x, y) = m.forward_bits(en.values[*si]);
                            b_vals[p.baseline_ports[2 * d]] = x;
                            b_vals[p.baseline_ports[2 * d + 1]] = y;
                        }
                    }
                    GroupRelation::BitsToDigit(m) => {
                        for (d, bi) in p.baseline_ports.iter().enumerate() {
                            let x = en.values[p.subject_ports[2 * d]];
                            let y = en.values[p.subject_ports[2 * d + 1]];
                            b_vals[*bi] = m.inverse_bits(x, y);
                        }
                    }
                }
            }
            a.eval_into(&en.values, &mut a_nets, &mut a_out);
            b.eval_into(&b_vals, &mut b_nets, &mut b_out);
            // compare group values, translating the baseline side
            let mut expected = BTreeMap::new();
            let mut actual = BTreeMap::new();
            let mut differs = false;
            for (p, gname) in out_pairs.iter().zip(&out_names) {
                let a_val = group_value(&a_out, p.subject_radix, &p.subject_ports);
                let b_val = match &p.relation {
                    GroupRelation::Direct => {
                        group_value(&b_out, p.baseline_radix, &p.baseline_ports)
                    }
                    GroupRelation::DigitToBits(m) => {
                        // baseline bits → digits → value
                        let mut v = 0u64;
                        for d in (0..p.subject_ports.len()).rev() {
                            let x = b_out[p.baseline_ports[2 * d]];
                            let y = b_out[p.baseline_ports[2 * d + 1]];
                            v = v * 4 + m.inverse_bits(x, y) as u64;
                        }
                        v
                    }
                    GroupRelation::BitsToDigit(m) => {
                        // baseline digits → bits → value
                        let mut v = 0u64;
                        for d in (0..p.baseline_ports.len()).rev() {
                            let (x, y) = m.forward_bits(b_out[p.baseline_ports[d]]);
                            v = v * 4 + (x + 2 * y) as u64;
                        }
                        v
                    }
                };
                if a_val != b_val {
                    differs = true;
                }
                expected.insert(gname.clone(), b_val);
                actual.insert(gname.clone(), a_val);
            }
            if differs {
                mismatches.push(Mismatch {
                    inputs: named_inputs(&a.inputs, &en.values),
                    expected,
                    actual,
                });
            }
            if !en.advance() {
                break;
            }
        }
    }

    Ok(VerifyReport {
        circuit: name,
        total_vectors: space,
        mismatches,
        exhaustive: true,
        seed: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::Catalog;
    use crate::netlist::{NetlistBuilder, OperandGroup, OperandLayout};

    fn cat() -> Catalog {
        Catalog::builtin_default()
    }

    fn fa_wrapper() -> Netlist {
        let mut b = NetlistBuilder::new("fa_wrapper");
        let a = b.input("a", Radix::Binary);
        let bb = b.input("b", Radix::Binary);
        let ci = b.input("ci", Radix::Binary);
        let s = b.output("s", Radix::Binary);
        let co = b.output("co", Radix::Binary);
        b.instance(
            "fa0",
            "full_adder_binary",
            None,
            &[("a", &a), ("b", &bb), ("ci", &ci), ("s", &s), ("co", &co)],
        );
        b.set_operands(OperandLayout {
            inputs: vec![
                OperandGroup {
                    name: "a".into(),
                    ports: vec!["a".into()],
                    radix: Radix::Binary,
                },
                OperandGroup {
                    name: "b".into(),
                    ports: vec!["b".into()],
                    radix: Radix::Binary,
                },
                OperandGroup {
                    name: "ci".into(),
                    ports: vec!["ci".into()],
                    radix: Radix::Binary,
                },
            ],
            outputs: vec![
                OperandGroup {
                    name: "s".into(),
                    ports: vec!["s".into()],
                    radix: Radix::Binary,
                },
                OperandGroup {
                    name: "co".into(),
                    ports: vec!["co".into()],
                    radix: Radix::Binary,
                },
            ],
        });
        b.finish()
    }

    fn qfa_wrapper() -> Netlist {
        let mut b = NetlistBuilder::new("qfa_wrapper");
        let a = b.input("a", Radix::Quaternary);
        let bb = b.input("b", Radix::Quaternary);
        let ci = b.input("ci", Radix::Binary);
        let s = b.output("s", Radix::Quaternary);
        let co = b.output("co", Radix::Binary);
        b.instance(
            "u0",
            "qfa_v2",
            None,
            &[("a", &a), ("b", &bb), ("ci", &ci), ("s", &s), ("co", &co)],
        );
        b.set_operands(OperandLayout {
            inputs: vec![
                OperandGroup {
                    name: "a".into(),
                    ports: vec!["a".into()],
                    radix: Radix::Quaternary,
                },
                OperandGroup {
                    name: "b".into(),
                    ports: vec!["b".into()],
                    radix: Radix::Quaternary,
                },
                OperandGroup {
                    name: "ci".into(),
                    ports: vec!["ci".into()],
                    radix: Radix::Binary,
                },
            ],
            outputs: vec![
                OperandGroup {
                    name: "s".into(),
                    ports: vec!["s".into()],
                    radix: Radix::Quaternary,
                },
                OperandGroup {
                    name: "co".into(),
                    ports: vec!["co".into()],
                    radix: Radix::Binary,
                },
            ],
        });
        b.finish()
    }

    fn assign(pairs: &[(&str, Radix, u8)]) -> Assignment {
        pairs
            .iter()
            .map(|(n, r, v)| (n.to_string(), LogicLevel::new(*r, *v).unwrap()))
            .collect()
    }

    #[test]
    fn evaluate_full_adder() {
        let out = evaluate(
            &fa_wrapper(),
            &cat(),
            &assign(&[
                ("a", Radix::Binary, 1),
                ("b", Radix::Binary, 1),
                ("ci", Radix::Binary, 1),
            ]),
        )
        .unwrap();
        assert_eq!(out["s"].value(), 1);
        assert_eq!(out["co"].value(), 1);
    }

    #[test]
    fn evaluate_qfa_published_row() {
        // 1 + 2 + 1 = 4 → s 0, co 1
        let out = evaluate(
            &qfa_wrapper(),
            &cat(),
            &assign(&[
                ("a", Radix::Quaternary, 1),
                ("b", Radix::Quaternary, 2),
                ("ci", Radix::Binary, 1),
            ]),
        )
        .unwrap();
        assert_eq!(out["s"].value(), 0);
        assert_eq!(out["co"].value(), 1);
    }

    #[test]
    fn evaluate_decoder_row() {
        let mut b = NetlistBuilder::new("dec");
        let q = b.input("q", Radix::Quaternary);
        let x = b.output("x", Radix::Binary);
        let y = b.output("y", Radix::Binary);
        b.instance(
            "d",
            "decoder_q_to_b",
            Some("gray"),
            &[("q", &q), ("x", &x), ("y", &y)],
        );
        let nl = b.finish();
        let out = evaluate(&nl, &cat(), &assign(&[("q", Radix::Quaternary, 2)])).unwrap();
        assert_eq!((out["x"].value(), out["y"].value()), (0, 1));
    }

    #[test]
    fn evaluate_rejects_bad_assignments() {
        let nl = fa_wrapper();
        let c = cat();
        let err = evaluate(&nl, &c, &assign(&[("a", Radix::Binary, 1)])).unwrap_err();
        assert!(matches!(err, SimError::IncompleteAssignment(_)));
        let err = evaluate(
            &nl,
            &c,
            &assign(&[
                ("a", Radix::Quaternary, 1),
                ("b", Radix::Binary, 0),
                ("ci", Radix::Binary, 0),
            ]),
        )
        .unwrap_err();
        assert!(matches!(err, SimError::AssignmentRadixMismatch { .. }));
        let err = evaluate(
            &nl,
            &c,
            &assign(&[
                ("a", Radix::Binary, 1),
                ("b", Radix::Binary, 0),
                ("ci", Radix::Binary, 0),
                ("zz", Radix::Binary, 0),
            ]),
        )
        .unwrap_err();
        assert!(matches!(err, SimError::UnknownInputPort(_)));
    }

    #[test]
    fn evaluate_is_pure() {
        let nl = qfa_wrapper();
        let c = cat();
        let a = assign(&[
            ("a", Radix::Quaternary, 3),
            ("b", Radix::Quaternary, 2),
            ("ci", Radix::Binary, 0),
        ]);
        assert_eq!(
            evaluate(&nl, &c, &a).unwrap(),
            evaluate(&nl, &c, &a).unwrap()
        );
    }

    #[test]
    fn verify_qfa_is_clean() {
        let report = verify_exhaustive(&qfa_wrapper(), &cat(), Oracle::Add, None).unwrap();
        assert_eq!(report.total_vectors, 32);
        assert!(report.is_ok());
        assert!(report.exhaustive);
        assert_eq!(report.summary(), "32 vectors, 0 mismatches");
    }

    #[test]
    fn fault_injection_is_caught() {
        // structural corruption (sum and carry bindings swapped) trips
        // validation before any vector runs
        let mut nl = qfa_wrapper();
        let inst = &mut nl.instances[0];
        let s = inst.bindings["s"].clone();
        let co = inst.bindings["co"].clone();
        inst.bindings.insert("s".into(), co);
        inst.bindings.insert("co".into(), s);
        assert!(matches!(
            verify_exhaustive(&nl, &cat(), Oracle::Add, None),
            Err(SimError::Netlist(_))
        ));

        // behavioral corruption: an inverter spliced into the sum
        let mut b = NetlistBuilder::new("qfa_bad");
        let a = b.input("a", Radix::Quaternary);
        let bb = b.input("b", Radix::Quaternary);
        let ci = b.input("ci", Radix::Binary);
        let s_raw = b.net("s_raw", Radix::Quaternary);
        let s = b.output("s", Radix::Quaternary);
        let co = b.output("co", Radix::Binary);
        b.instance(
            "u0",
            "qfa_v2",
            None,
            &[
                ("a", &a),
                ("b", &bb),
                ("ci", &ci),
                ("s", &s_raw),
                ("co", &co),
            ],
        );
        b.instance(
            "bug",
            "inverter_quaternary",
            None,
            &[("a", &s_raw), ("y", &s)],
        );
        b.set_operands(qfa_wrapper().operands.unwrap());
        let bad = b.finish();
        let report = verify_exhaustive(&bad, &cat(), Oracle::Add, None).unwrap();
        assert!(!report.is_ok());
        // witness carries the failing assignment
        let w = &report.mismatches[0];
        assert_eq!(w.inputs.len(), 3);
        assert_ne!(w.expected, w.actual);
        // first witness in canonical order: all-zero vector (0+0+0 → s=0,
        // inverted to 3)
        assert_eq!(
            w.inputs.values().copied().collect::<Vec<_>>(),
            vec![0, 0, 0]
        );
    }

    #[test]
    fn cap_refusal_mentions_sampling() {
        let mut b = NetlistBuilder::new("wide");
        let mut groups = Vec::new();
        for i in 0..21 {
            let name = format!("i{i:02}");
            b.input(&name, Radix::Binary);
            groups.push(OperandGroup {
                name: name.clone(),
                ports: vec![name],
                radix: Radix::Binary,
            });
        }
        let first = "i00".to_string();
        let y = b.output("y", Radix::Binary);
        b.instance("g", "buffer_binary", None, &[("a", &first), ("y", &y)]);
        // other inputs dangle: warnings only
        b.set_operands(OperandLayout {
            inputs: groups,
            outputs: vec![OperandGroup {
                name: "y".into(),
                ports: vec!["y".into()],
                radix: Radix::Binary,
            }],
        });
        let nl = b.finish();
        let err = verify_exhaustive(&nl, &cat(), Oracle::Add, None).unwrap_err();
        match err {
            SimError::InputSpaceTooLarge { space, cap } => {
                assert_eq!(space, 1 << 21);
                assert_eq!(cap, 1 << 20);
            }
            other => panic!("unexpected error {other}"),
        }
        assert!(err.to_string().contains("sampled"));
    }

    #[test]
    fn sampled_mode_covers_corners_and_is_deterministic() {
        let nl = qfa_wrapper();
        let c = cat();
        let r1 = verify_sampled(&nl, &c, Oracle::Add, 100, 7).unwrap();
        let r2 = verify_sampled(&nl, &c, Oracle::Add, 100, 7).unwrap();
        assert_eq!(r1, r2);
        assert!(r1.is_ok());
        assert!(!r1.exhaustive);
        assert_eq!(r1.seed, Some(7));
        // corners: all-zero, all-max, one per input
        assert_eq!(r1.total_vectors, 2 + 3 + 100);
    }

    #[test]
    fn equiv_reflexive_and_symmetric() {
        let c = cat();
        let nl = qfa_wrapper();
        let r = equiv_check(&nl, &nl, &c, None, None).unwrap();
        assert_eq!(r.total_vectors, 32);
        assert!(r.is_ok());

        // corrupt one copy: mismatch counts agree in both directions
        let mut bad = nl.clone();
        bad.name = "qfa_bad".into();
        bad.instances[0].primitive.variant = Some("moaiyeri".into());
        // still the same behavior; instead re-route ci through an inverter
        let mut b = NetlistBuilder::new("qfa_ci_inverted");
        let a = b.input("a", Radix::Quaternary);
        let bb = b.input("b", Radix::Quaternary);
        let ci = b.input("ci", Radix::Binary);
        let ci_n = b.net("ci_n", Radix::Binary);
        let s = b.output("s", Radix::Quaternary);
        let co = b.output("co", Radix::Binary);
        b.instance("n0", "inverter_binary", None, &[("a", &ci), ("y", &ci_n)]);
        b.instance(
            "u0",
            "qfa_v2",
            None,
            &[("a", &a), ("b", &bb), ("ci", &ci_n), ("s", &s), ("co", &co)],
        );
        b.set_operands(nl.operands.clone().unwrap());
        let twisted = b.finish();
        let ab = equiv_check(&nl, &twisted, &c, None, None).unwrap();
        let ba = equiv_check(&twisted, &nl, &c, None, None).unwrap();
        assert_eq!(ab.mismatches.len(), ba.mismatches.len());
        assert_eq!(ab.mismatches.len(), 32); // ci inversion breaks every vector
    }
}
