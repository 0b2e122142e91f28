//! The combinational circuit graph.
//!
//! A netlist is a set of radix-typed nets, circuit ports attached to nets,
//! and primitive instances whose ports bind nets. Nets are single-driver
//! and the instance graph must be acyclic. Netlists are plain data and
//! immutable after construction; analyses resolve primitives against a
//! [`Catalog`].

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::{names, Catalog, PortDirection, PrimitiveSpec};
use crate::logic::Radix;

pub type NetId = String;

/// A circuit port attached to a net.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Port {
    pub name: String,
    pub direction: PortDirection,
    pub radix: Radix,
    pub net: NetId,
}

/// Reference to a catalog cell; `variant: None` means the catalog default.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PrimitiveRef {
    pub name: String,
    pub variant: Option<String>,
}

impl PrimitiveRef {
    pub fn new(name: &str, variant: Option<&str>) -> Self {
        PrimitiveRef {
            name: name.to_string(),
            variant: variant.map(str::to_string),
        }
    }
}

impl fmt::Display for PrimitiveRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.variant {
            Some(v) => write!(f, "{}/{}", self.name, v),
            None => write!(f, "{}", self.name),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Instance {
    pub id: String,
    pub primitive: PrimitiveRef,
    /// Primitive port name → net.
    pub bindings: BTreeMap<String, NetId>,
}

/// Ports grouped into little-endian digit vectors, so a circuit loaded
/// from a file can still be driven and checked as integer operands.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct OperandGroup {
    pub name: String,
    /// Port names, least significant first.
    pub ports: Vec<String>,
    pub radix: Radix,
}

#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct OperandLayout {
    pub inputs: Vec<OperandGroup>,
    pub outputs: Vec<OperandGroup>,
}

impl OperandLayout {
    pub fn input(&self, name: &str) -> Option<&OperandGroup> {
        self.inputs.iter().find(|g| g.name == name)
    }

    pub fn output(&self, name: &str) -> Option<&OperandGroup> {
        self.outputs.iter().find(|g| g.name == name)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Netlist {
    pub name: String,
    pub ports: Vec<Port>,
    pub instances: Vec<Instance>,
    pub nets: BTreeMap<NetId, Radix>,
    pub operands: Option<OperandLayout>,
    /// Circuit-level reported transistor count, where the sources state one.
    pub reported_tc: Option<u32>,
}

impl Netlist {
    pub fn input_ports(&self) -> impl Iterator<Item = &Port> {
        self.ports
            .iter()
            .filter(|p| p.direction == PortDirection::Input)
    }

    pub fn output_ports(&self) -> impl Iterator<Item = &Port> {
        self.ports
            .iter()
            .filter(|p| p.direction == PortDirection::Output)
    }

    pub fn port(&self, name: &str) -> Option<&Port> {
        self.ports.iter().find(|p| p.name == name)
    }

    pub fn instance(&self, id: &str) -> Option<&Instance> {
        self.instances.iter().find(|i| i.id == id)
    }
}

/// Where a net connects: the driving or sinking end of an edge.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Endpoint {
    /// Circuit input port (a driver).
    Input { port: String },
    /// Circuit output port (a sink).
    Output { port: String },
    /// An instance pin.
    Pin { instance: String, port: String },
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Endpoint::Input { port } => write!(f, "input {port}"),
            Endpoint::Output { port } => write!(f, "output {port}"),
            Endpoint::Pin { instance, port } => write!(f, "{instance}.{port}"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Violation {
    #[error("instance '{instance}': unknown primitive {primitive}")]
    UnknownPrimitive { instance: String, primitive: String },
    #[error("instance '{instance}' binds unknown port '{port}'")]
    UnknownPort { instance: String, port: String },
    #[error("instance '{instance}' leaves port '{port}' unbound")]
    UnboundPort { instance: String, port: String },
    #[error("{context} references unknown net '{net}'")]
    UnknownNet { context: String, net: NetId },
    #[error("net '{net}' has radix {net_radix} but {context} expects radix {expected}")]
    RadixMismatch {
        context: String,
        net: NetId,
        net_radix: Radix,
        expected: Radix,
    },
    #[error("net '{net}' has {} drivers: {}", drivers.len(), drivers.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(", "))]
    MultipleDrivers { net: NetId, drivers: Vec<Endpoint> },
    #[error("net '{net}' has sinks but no driver")]
    UndrivenNet { net: NetId },
    #[error("circuit output '{port}' is not driven")]
    UndrivenOutput { port: String },
    #[error("combinational cycle through: {}", .0.join(", "))]
    Cycle(Vec<String>),
    #[error("net '{net}' drives nothing")]
    DanglingNet { net: NetId },
    #[error("duplicate instance id '{0}'")]
    DuplicateInstance(String),
    #[error("duplicate port name '{0}'")]
    DuplicatePort(String),
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub errors: Vec<Violation>,
    pub warnings: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.errors.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() && self.warnings.is_empty() {
            return write!(f, "ok");
        }
        for e in &self.errors {
            writeln!(f, "error: {e}")?;
        }
        for w in &self.warnings {
            writeln!(f, "warning: {w}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NetlistError {
    #[error("netlist '{name}' failed validation:\n{report}")]
    Invalid {
        name: String,
        report: ValidationReport,
    },
    #[error("max_fanout must be at least 2, got {0}")]
    InvalidMaxFanout(u32),
    #[error("catalog has no buffer primitive for radix {0} nets")]
    MissingBufferPrimitive(Radix),
}

/// Driver and sink endpoints per net, resolved against the catalog.
#[derive(Debug, Clone, Default)]
pub struct Connectivity {
    pub drivers: BTreeMap<NetId, Vec<Endpoint>>,
    pub sinks: BTreeMap<NetId, Vec<Endpoint>>,
}

impl Connectivity {
    /// Collect endpoints without judging them; unknown primitives and nets
    /// are simply skipped (validation reports those separately).
    pub fn build(netlist: &Netlist, catalog: &Catalog) -> Connectivity {
        let mut conn = Connectivity::default();
        for net in netlist.nets.keys() {
            conn.drivers.insert(net.clone(), Vec::new());
            conn.sinks.insert(net.clone(), Vec::new());
        }
        let push = |map: &mut BTreeMap<NetId, Vec<Endpoint>>, net: &NetId, ep: Endpoint| {
            if let Some(v) = map.get_mut(net) {
                v.push(ep);
            }
        };
        for port in &netlist.ports {
            match port.direction {
                PortDirection::Input => push(
                    &mut conn.drivers,
                    &port.net,
                    Endpoint::Input {
                        port: port.name.clone(),
                    },
                ),
                PortDirection::Output => push(
                    &mut conn.sinks,
                    &port.net,
                    Endpoint::Output {
                        port: port.name.clone(),
                    },
                ),
            }
        }
        for inst in &netlist.instances {
            let Some(spec) = catalog.get(&inst.primitive.name, inst.primitive.variant.as_deref())
            else {
                continue;
            };
            for (port, net) in &inst.bindings {
                let Some(prim_port) = spec.port(port) else {
                    continue;
                };
                let ep = Endpoint::Pin {
                    instance: inst.id.clone(),
                    port: port.clone(),
                };
                match prim_port.direction {
                    PortDirection::Input => push(&mut conn.sinks, net, ep),
                    PortDirection::Output => push(&mut conn.drivers, net, ep),
                }
            }
        }
        conn
    }
}

fn resolve<'a>(catalog: &'a Catalog, inst: &Instance) -> Option<&'a PrimitiveSpec> {
    catalog.get(&inst.primitive.name, inst.primitive.variant.as_deref())
}

/// Check every structural invariant, reporting all violations found.
pub fn validate(netlist: &Netlist, catalog: &Catalog) -> ValidationReport {
    let mut report = ValidationReport::default();

    let mut seen_ids = BTreeMap::new();
    for inst in &netlist.instances {
        if seen_ids.insert(inst.id.clone(), ()).is_some() {
            report
                .errors
                .push(Violation::DuplicateInstance(inst.id.clone()));
        }
    }
    let mut seen_ports = BTreeMap::new();
    for port in &netlist.ports {
        if seen_ports.insert(port.name.clone(), ()).is_some() {
            report
                .errors
                .push(Violation::DuplicatePort(port.name.clone()));
        }
    }

    for port in &netlist.ports {
        match netlist.nets.get(&port.net) {
            None => report.errors.push(Violation::UnknownNet {
                context: format!("port '{}'", port.name),
                net: port.net.clone(),
            }),
            Some(&r) if r != port.radix => report.errors.push(Violation::RadixMismatch {
                context: format!("port '{}'", port.name),
                net: port.net.clone(),
                net_radix: r,
                expected: port.radix,
            }),
            _ => {}
        }
    }

    for inst in &netlist.instances {
        let Some(spec) = resolve(catalog, inst) else {
            report.errors.push(Violation::UnknownPrimitive {
                instance: inst.id.clone(),
                primitive: inst.primitive.to_string(),
            });
            continue;
        };
        for (port, net) in &inst.bindings {
            let Some(prim_port) = spec.port(port) else {
                report.errors.push(Violation::UnknownPort {
                    instance: inst.id.clone(),
                    port: port.clone(),
                });
                continue;
            };
            match netlist.nets.get(net) {
                None => report.errors.push(Violation::UnknownNet {
                    context: format!("instance '{}' port '{}'", inst.id, port),
                    net: net.clone(),
                }),
                Some(&r) if r != prim_port.radix => report.errors.push(Violation::RadixMismatch {
                    context: format!("instance '{}' port '{}'", inst.id, port),
                    net: net.clone(),
                    net_radix: r,
                    expected: prim_port.radix,
                }),
                _ => {}
            }
        }
        for prim_port in &spec.ports {
            if !inst.bindings.contains_key(prim_port.name) {
                report.errors.push(Violation::UnboundPort {
                    instance: inst.id.clone(),
                    port: prim_port.name.to_string(),
                });
            }
        }
    }

    let conn = Connectivity::build(netlist, catalog);
    for (net, drivers) in &conn.drivers {
        let sinks = &conn.sinks[net];
        match drivers.len() {
            0 => {
                let output_sinks: Vec<_> = sinks
                    .iter()
                    .filter_map(|s| match s {
                        Endpoint::Output { port } => Some(port.clone()),
                        _ => None,
                    })
                    .collect();
                for port in &output_sinks {
                    report
                        .errors
                        .push(Violation::UndrivenOutput { port: port.clone() });
                }
                if sinks.len() > output_sinks.len() {
                    report
                        .errors
                        .push(Violation::UndrivenNet { net: net.clone() });
                }
                if sinks.is_empty() {
                    report
                        .warnings
                        .push(Violation::DanglingNet { net: net.clone() });
                }
            }
            1 => {
                if sinks.is_empty() {
                    report
                        .warnings
                        .push(Violation::DanglingNet { net: net.clone() });
                }
            }
            _ => report.errors.push(Violation::MultipleDrivers {
                net: net.clone(),
                drivers: drivers.clone(),
            }),
        }
    }

    if let Err(cycle) = topo_indices(netlist, &conn) {
        report.errors.push(Violation::Cycle(cycle));
    }

    report
}

/// Bail out with the full report unless the netlist is structurally valid.
pub fn ensure_valid(netlist: &Netlist, catalog: &Catalog) -> Result<(), NetlistError> {
    let report = validate(netlist, catalog);
    if report.is_ok() {
        Ok(())
    } else {
        Err(NetlistError::Invalid {
            name: netlist.name.clone(),
            report,
        })
    }
}

/// Kahn's algorithm; ready set ordered by instance id so ties break
/// lexicographically. Returns instance indices, or the cycle members.
pub(crate) fn topo_indices(
    netlist: &Netlist,
    conn: &Connectivity,
) -> Result<Vec<usize>, Vec<String>> {
    let index_of: BTreeMap<&str, usize> = netlist
        .instances
        .iter()
        .enumerate()
        .map(|(i, inst)| (inst.id.as_str(), i))
        .collect();
    // net → driving instance
    let mut net_driver: BTreeMap<&str, usize> = BTreeMap::new();
    for (net, drivers) in &conn.drivers {
        for d in drivers {
            if let Endpoint::Pin { instance, .. } = d {
                if let Some(&i) = index_of.get(instance.as_str()) {
                    net_driver.insert(net.as_str(), i);
                }
            }
        }
    }
    let n = netlist.instances.len();
    let mut preds = vec![0usize; n];
    let mut succs: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (net, sinks) in &conn.sinks {
        let Some(&from) = net_driver.get(net.as_str()) else {
            continue;
        };
        for s in sinks {
            if let Endpoint::Pin { instance, .. } = s {
                if let Some(&to) = index_of.get(instance.as_str()) {
                    succs[from].push(to);
                    preds[to] += 1;
                }
            }
        }
    }
    let mut ready: std::collections::BTreeSet<(&str, usize)> = netlist
        .instances
        .iter()
        .enumerate()
        .filter(|(i, _)| preds[*i] == 0)
        .map(|(i, inst)| (inst.id.as_str(), i))
        .collect();
    let mut order = Vec::with_capacity(n);
    while let Some(&(id, i)) = ready.iter().next() {
        ready.remove(&(id, i));
        order.push(i);
        for &to in &succs[i] {
            preds[to] -= 1;
            if preds[to] == 0 {
                ready.insert((netlist.instances[to].id.as_str(), to));
            }
        }
    }
    if order.len() == n {
        Ok(order)
    } else {
        let mut cycle: Vec<String> = netlist
            .instances
            .iter()
            .enumerate()
            .filter(|(i, _)| preds[*i] > 0)
            .map(|(_, inst)| inst.id.clone())
            .collect();
        cycle.sort();
        Err(cycle)
    }
}

/// Evaluation order: every instance after all instances driving its inputs.
pub fn topo_order<'a>(
    netlist: &'a Netlist,
    catalog: &Catalog,
) -> Result<Vec<&'a Instance>, NetlistError> {
    ensure_valid(netlist, catalog)?;
    let conn = Connectivity::build(netlist, catalog);
    let order = topo_indices(netlist, &conn).expect("validated netlist cannot be cyclic");
    Ok(order.into_iter().map(|i| &netlist.instances[i]).collect())
}

/// Sink endpoint count per net: the interconnect load proxy.
pub fn fanout_map(
    netlist: &Netlist,
    catalog: &Catalog,
) -> Result<BTreeMap<NetId, usize>, NetlistError> {
    ensure_valid(netlist, catalog)?;
    let conn = Connectivity::build(netlist, catalog);
    Ok(conn
        .sinks
        .into_iter()
        .map(|(net, sinks)| (net, sinks.len()))
        .collect())
}

fn buffer_for_radix(catalog: &Catalog, radix: Radix) -> Result<&'static str, NetlistError> {
    let name = match radix {
        Radix::Binary => names::BUFFER_BINARY,
        Radix::Quaternary => names::BUFFER_QUATERNARY,
        Radix::Ternary => return Err(NetlistError::MissingBufferPrimitive(radix)),
    };
    if catalog.get(name, None).is_none() {
        return Err(NetlistError::MissingBufferPrimitive(radix));
    }
    Ok(name)
}

fn unique_id(mut candidate: String, taken: &dyn Fn(&str) -> bool) -> String {
    while taken(&candidate) {
        candidate.push('_');
    }
    candidate
}

/// Split every net with more than `max_fanout` sinks through identity
/// buffers, one tree level per pass, until all sink counts fit. The
/// original netlist is left untouched; behavior is unchanged.
pub fn insert_buffers(
    netlist: &Netlist,
    catalog: &Catalog,
    max_fanout: u32,
) -> Result<Netlist, NetlistError> {
    if max_fanout < 2 {
        return Err(NetlistError::InvalidMaxFanout(max_fanout));
    }
    ensure_valid(netlist, catalog)?;
    let limit = max_fanout as usize;
    let mut out = netlist.clone();

    for pass in 0.. {
        let conn = Connectivity::build(&out, catalog);
        let over: Vec<(NetId, Vec<Endpoint>)> = conn
            .sinks
            .iter()
            .filter(|(_, sinks)| sinks.len() > limit)
            .map(|(net, sinks)| {
                let mut s = sinks.clone();
                s.sort();
                (net.clone(), s)
            })
            .collect();
        if over.is_empty() {
            break;
        }
        for (net, sinks) in over {
            let radix = out.nets[&net];
            let buffer = buffer_for_radix(catalog, radix)?;
            for (g, group) in sinks.chunks(limit).enumerate() {
                let inst_id = unique_id(format!("{net}__buf{pass}_{g}"), &|id| {
                    out.instances.iter().any(|i| i.id == id)
                });
                let new_net = unique_id(format!("{net}__bufnet{pass}_{g}"), &|id| {
                    out.nets.contains_key(id)
                });
                out.nets.insert(new_net.clone(), radix);
                let mut bindings = BTreeMap::new();
                bindings.insert("a".to_string(), net.clone());
                bindings.insert("y".to_string(), new_net.clone());
                out.instances.push(Instance {
                    id: inst_id,
                    primitive: PrimitiveRef::new(buffer, None),
                    bindings,
                });
                for sink in group {
                    match sink {
                        Endpoint::Output { port } => {
                            let p = out
                                .ports
                                .iter_mut()
                                .find(|p| p.name == *port)
                                .expect("sink port exists");
                            p.net = new_net.clone();
                        }
                        Endpoint::Pin { instance, port } => {
                            let inst = out
                                .instances
                                .iter_mut()
                                .find(|i| i.id == *instance)
                                .expect("sink instance exists");
                            inst.bindings.insert(port.clone(), new_net.clone());
                        }
                        Endpoint::Input { .. } => unreachable!("inputs are not sinks"),
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Incremental netlist construction. Input and output ports implicitly
/// declare a net of the same name; `output_on` attaches an output port to
/// an existing net instead.
#[derive(Debug, Default)]
pub struct NetlistBuilder {
    name: String,
    ports: Vec<Port>,
    instances: Vec<Instance>,
    nets: BTreeMap<NetId, Radix>,
    operands: Option<OperandLayout>,
    reported_tc: Option<u32>,
}

impl NetlistBuilder {
    pub fn new(name: &str) -> Self {
        NetlistBuilder {
            name: name.to_string(),
            ..Default::default()
        }
    }

    pub fn input(&mut self, name: &str, radix: Radix) -> NetId {
        let net = self.net(name, radix);
        self.ports.push(Port {
            name: name.to_string(),
            direction: PortDirection::Input,
            radix,
            net: net.clone(),
        });
        net
    }

    pub fn output(&mut self, name: &str, radix: Radix) -> NetId {
        let net = self.net(name, radix);
        self.ports.push(Port {
            name: name.to_string(),
            direction: PortDirection::Output,
            radix,
            net: net.clone(),
        });
        net
    }

    pub fn output_on(&mut self, name: &str, radix: Radix, net: &NetId) {
        self.ports.push(Port {
            name: name.to_string(),
            direction: PortDirection::Output,
            radix,
            net: net.clone(),
        });
    }

    pub fn net(&mut self, id: &str, radix: Radix) -> NetId {
        self.nets.insert(id.to_string(), radix);
        id.to_string()
    }

    pub fn net_radix(&self, id: &str) -> Option<Radix> {
        self.nets.get(id).copied()
    }

    pub fn instance(
        &mut self,
        id: &str,
        primitive: &str,
        variant: Option<&str>,
        bindings: &[(&str, &NetId)],
    ) {
        self.instances.push(Instance {
            id: id.to_string(),
            primitive: PrimitiveRef::new(primitive, variant),
            bindings: bindings
                .iter()
                .map(|(p, n)| (p.to_string(), (*n).clone()))
                .collect(),
        });
    }

    pub fn set_operands(&mut self, layout: OperandLayout) {
        self.operands = Some(layout);
    }

    pub fn set_reported_tc(&mut self, tc: Option<u32>) {
        self.reported_tc = tc;
    }

    pub fn finish(self) -> Netlist {
        Netlist {
            name: self.name,
            ports: self.ports,
            instances: self.instances,
            nets: self.nets,
            operands: self.operands,
            reported_tc: self.reported_tc,
        }
    }
}
