//! Canonical JSON netlist files.
//!
//! One document per circuit: `{name, ports[], instances[], nets[]}` with
//! the radix explicit on every port and net, plus the optional operand
//! layout and reported cost. Field order is fixed by the struct layout
//! and maps are sorted, so serialization is byte-stable.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::PortDirection;
use crate::logic::Radix;
use crate::netlist::{Instance, Netlist, OperandLayout, Port, PrimitiveRef};

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed netlist file: {0}")]
    Parse(#[from] serde_json::Error),
}

#[derive(Serialize, Deserialize)]
struct FilePort {
    name: String,
    direction: PortDirection,
    radix: Radix,
    net: String,
}

#[derive(Serialize, Deserialize)]
struct FileInstance {
    id: String,
    primitive: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    variant: Option<String>,
    bindings: BTreeMap<String, String>,
}

#[derive(Serialize, Deserialize)]
struct FileNet {
    id: String,
    radix: Radix,
}

#[derive(Serialize, Deserialize)]
struct FileNetlist {
    name: String,
    ports: Vec<FilePort>,
    instances: Vec<FileInstance>,
    nets: Vec<FileNet>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    operands: Option<OperandLayout>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    reported_tc: Option<u32>,
}

impl From<&Netlist> for FileNetlist {
    fn from(nl: &Netlist) -> Self {
        FileNetlist {
            name: nl.name.clone(),
            ports: nl
                .ports
                .iter()
                .map(|p| FilePort {
                    name: p.name.clone(),
                    direction: p.direction,
                    radix: p.radix,
                    net: p.net.clone(),
                })
                .collect(),
            instances: nl
                .instances
                .iter()
                .map(|i| FileInstance {
                    id: i.id.clone(),
                    primitive: i.primitive.name.clone(),
                    variant: i.primitive.variant.clone(),
                    bindings: i.bindings.clone(),
                })
                .collect(),
            nets: nl
                .nets
                .iter()
                .map(|(id, radix)| FileNet {
                    id: id.clone(),
                    radix: *radix,
                })
                .collect(),
            operands: nl.operands.clone(),
            reported_tc: nl.reported_tc,
        }
    }
}

impl From<FileNetlist> for Netlist {
    fn from(f: FileNetlist) -> Self {
        Netlist {
            name: f.name,
            ports: f
                .ports
                .into_iter()
                .map(|p| Port {
                    name: p.name,
                    direction: p.direction,
                    radix: p.radix,
                    net: p.net,
                })
                .collect(),
            instances: f
                .instances
                .into_iter()
                .map(|i| Instance {
                    id: i.id,
                    primitive: PrimitiveRef {
                        name: i.primitive,
                        variant: i.variant,
                    },
                    bindings: i.bindings,
                })
                .collect(),
            nets: f.nets.into_iter().map(|n| (n.id, n.radix)).collect(),
            operands: f.operands,
            reported_tc: f.reported_tc,
        }
    }
}

pub fn to_json(netlist: &Netlist) -> String {
    let file = FileNetlist::from(netlist);
    let mut s = serde_json::to_string_pretty(&file).expect("netlists always serialize");
    s.push('\n');
    s
}

pub fn from_json(text: &str) -> Result<Netlist, JsonError> {
    let file: FileNetlist = serde_json::from_str(text)?;
    Ok(file.into())
}

pub fn save(netlist: &Netlist, path: &Path) -> Result<(), JsonError> {
    std::fs::write(path, to_json(netlist))?;
    Ok(())
}

pub fn load(path: &Path) -> Result<Netlist, JsonError> {
    let text = std::fs::read_to_string(path)?;
    from_json(&text)
}
