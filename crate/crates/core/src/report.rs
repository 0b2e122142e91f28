//! Cost metrics, baseline comparisons and the published comparison tables.
//!
//! Transistor counts are the interconnect proxy: a circuit's derived count
//! is the sum of its components' reported counts, uncosted components are
//! itemized rather than silently zeroed, and circuit-level reported counts
//! ride along for comparison. Ratios display with two decimals, trailing
//! zeros trimmed; exact quotients go into footnotes.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::catalog::Catalog;
use crate::logic::Radix;
use crate::netlist::{ensure_valid, Connectivity, Netlist, NetlistError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReportError {
    #[error(transparent)]
    Netlist(#[from] NetlistError),
    #[error("baseline '{0}' has a transistor count of 0; ratios are undefined")]
    ZeroBaseline(String),
    #[error("'{0}' has no transistor count (neither reported nor derivable)")]
    NoCount(String),
}

/// Cost and interconnect summary of one circuit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CostReport {
    pub circuit: String,
    /// Σ reported counts over all instances whose cell is costed.
    pub derived_tc: u64,
    /// Instance counts of uncosted cells, excluded from `derived_tc`.
    pub unspecified: Vec<(String, usize)>,
    /// Circuit-level reported count, where the sources state one.
    pub reported_tc: Option<u32>,
    pub net_count: usize,
    /// Σ sink endpoints over all nets: the interconnect load proxy.
    pub endpoint_count: usize,
    /// Max supply-rail count over the instantiated cells.
    pub supply_rails: u8,
    /// Net count per radix (keyed by level count).
    pub radix_profile: BTreeMap<u8, usize>,
    pub notes: Vec<String>,
}

/// Compute a [`CostReport`] from a validated netlist.
pub fn metrics(netlist: &Netlist, catalog: &Catalog) -> Result<CostReport, ReportError> {
    ensure_valid(netlist, catalog)?;
    let conn = Connectivity::build(netlist, catalog);

    let mut derived: u64 = 0;
    let mut unspecified: BTreeMap<String, usize> = BTreeMap::new();
    let mut rails: u8 = 0;
    for inst in &netlist.instances {
        let spec = catalog
            .get(&inst.primitive.name, inst.primitive.variant.as_deref())
            .expect("validated instance resolves");
        match spec.reported_tc {
            Some(tc) => derived += tc as u64,
            None => *unspecified.entry(spec.display_name()).or_default() += 1,
        }
        rails = rails.max(spec.supply_rails);
    }

    let endpoint_count = conn.sinks.values().map(Vec::len).sum();
    let mut radix_profile: BTreeMap<u8, usize> = BTreeMap::new();
    for radix in netlist.nets.values() {
        *radix_profile.entry(radix.levels()).or_default() += 1;
    }

    let mut notes = Vec::new();
    if !unspecified.is_empty() {
        let list: Vec<String> = unspecified
            .iter()
            .map(|(name, count)| format!("{name} ×{count}"))
            .collect();
        notes.push(format!(
            "derived count excludes {} uncosted cell instance(s): {}",
            unspecified.values().sum::<usize>(),
            list.join(", ")
        ));
    }
    if let Some(rep) = netlist.reported_tc {
        let rep = rep as u64;
        if rep != derived || !unspecified.is_empty() {
            let delta = rep as i64 - derived as i64;
            notes.push(format!(
                "discrepancy: derived transistor count {derived} vs reported {rep} (difference {delta:+}); \
the reported figure is kept alongside the component sum"
            ));
        }
    }

    Ok(CostReport {
        circuit: netlist.name.clone(),
        derived_tc: derived,
        unspecified: unspecified.into_iter().collect(),
        reported_tc: netlist.reported_tc,
        net_count: netlist.nets.len(),
        endpoint_count,
        supply_rails: rails,
        radix_profile,
        notes,
    })
}

/// Which number a comparison used for a side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TcSource {
    Reported,
    Derived,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonRow {
    pub subject: String,
    pub baseline: String,
    pub subject_tc: u64,
    pub baseline_tc: u64,
    pub subject_source: TcSource,
    pub baseline_source: TcSource,
    pub tc_ratio: f64,
    /// log₂(subject radix) / log₂(baseline radix).
    pub information_ratio: f64,
    /// The claim under test: the circuit overhead exceeds the extra
    /// information a wider-radix wire carries.
    pub exceeds_information_ratio: bool,
}

pub fn information_ratio(subject: Radix, baseline: Radix) -> f64 {
    subject.information_bits() / baseline.information_bits()
}

fn pick_tc(report: &CostReport) -> Result<(u64, TcSource), ReportError> {
    match report.reported_tc {
        Some(tc) => Ok((tc as u64, TcSource::Reported)),
        None if report.derived_tc > 0 || report.unspecified.is_empty() => {
            Ok((report.derived_tc, TcSource::Derived))
        }
        None => Err(ReportError::NoCount(report.circuit.clone())),
    }
}

/// Compare two cost reports; reported counts are preferred, derived counts
/// are the labeled fallback.
pub fn compare(
    subject: &CostReport,
    baseline: &CostReport,
    subject_radix: Radix,
    baseline_radix: Radix,
) -> Result<ComparisonRow, ReportError> {
    let (s_tc, s_src) = pick_tc(subject)?;
    let (b_tc, b_src) = pick_tc(baseline)?;
    if b_tc == 0 {
        return Err(ReportError::ZeroBaseline(baseline.circuit.clone()));
    }
    let info = information_ratio(subject_radix, baseline_radix);
    let ratio = s_tc as f64 / b_tc as f64;
    Ok(ComparisonRow {
        subject: subject.circuit.clone(),
        baseline: baseline.circuit.clone(),
        subject_tc: s_tc,
        baseline_tc: b_tc,
        subject_source: s_src,
        baseline_source: b_src,
        tc_ratio: ratio,
        information_ratio: info,
        exceeds_information_ratio: ratio > info,
    })
}

fn cell_row(
    catalog: &Catalog,
    subject: (&str, Option<&str>),
    baseline: (&str, Option<&str>),
) -> Option<ComparisonRow> {
    let s = catalog.get(subject.0, subject.1)?;
    let b = catalog.get(baseline.0, baseline.1)?;
    let s_tc = s.reported_tc? as u64;
    let b_tc = b.reported_tc? as u64;
    if b_tc == 0 {
        return None;
    }
    let s_radix = s.output_ports().next()?.radix;
    let b_radix = b.output_ports().next()?.radix;
    let info = information_ratio(s_radix, b_radix);
    let ratio = s_tc as f64 / b_tc as f64;
    Some(ComparisonRow {
        subject: s.display_name(),
        baseline: b.display_name(),
        subject_tc: s_tc,
        baseline_tc: b_tc,
        subject_source: TcSource::Reported,
        baseline_source: TcSource::Reported,
        tc_ratio: ratio,
        information_ratio: info,
        exceeds_information_ratio: ratio > info,
    })
}

/// A catalog cell key: name plus optional variant.
pub type CellKey = (&'static str, Option<&'static str>);

/// Quaternary cells paired with the binary cell processing the same
/// function, one digit against one bit.
pub fn counterpart_pairs() -> Vec<(CellKey, CellKey)> {
    vec![
        (("inverter_quaternary", None), ("inverter_binary", None)),
        (
            ("nand2_quaternary", Some("sharifi")),
            ("nand2_binary", None),
        ),
        (
            ("nand2_quaternary", Some("ebrahimi")),
            ("nand2_binary", None),
        ),
        (("qfa_v1", Some("3ps")), ("full_adder_binary", None)),
        (("qfa_v1", Some("1ps")), ("full_adder_binary", None)),
        (("qfa_v2", Some("ebrahimi")), ("full_adder_binary", None)),
        (("qfa_v3", Some("moaiyeri")), ("full_adder_binary", None)),
        (("qfa_v3", Some("roosta_3ps")), ("full_adder_binary", None)),
        (("qfa_v3", Some("roosta_1ps")), ("full_adder_binary", None)),
        (
            ("qfa_v3", Some("roosta_3ps_buffered")),
            ("full_adder_binary", None),
        ),
        (
            ("qfa_v3", Some("roosta_1ps_buffered")),
            ("full_adder_binary", None),
        ),
        (("qmul_digit", None), ("and2_binary", None)),
        (("buffer_quaternary", None), ("buffer_binary", None)),
    ]
}

/// Ratio rows for every costed counterpart pair in the catalog: the
/// mechanized form of the claim that the quaternary/binary transistor
/// ratio always exceeds the 2× information ratio.
pub fn thesis_rows(catalog: &Catalog) -> Vec<ComparisonRow> {
    counterpart_pairs()
        .into_iter()
        .filter_map(|(s, b)| cell_row(catalog, s, b))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TableKind {
    Nand,
    Adders,
    Multipliers,
}

impl std::str::FromStr for TableKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "nand" => Ok(TableKind::Nand),
            "adders" => Ok(TableKind::Adders),
            "multipliers" => Ok(TableKind::Multipliers),
            other => Err(format!(
                "unknown table '{other}' (expected nand, adders or multipliers)"
            )),
        }
    }
}

impl TableKind {
    pub fn name(self) -> &'static str {
        match self {
            TableKind::Nand => "nand",
            TableKind::Adders => "adders",
            TableKind::Multipliers => "multipliers",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableRow {
    pub label: String,
    pub tc: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tc_ratio: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReferenceTable {
    pub kind: TableKind,
    pub baseline: String,
    pub rows: Vec<TableRow>,
    pub footnotes: Vec<String>,
}

/// Reproduce one of the published comparison tables from catalog data.
pub fn comparison_table(catalog: &Catalog, kind: TableKind) -> ReferenceTable {
    match kind {
        TableKind::Nand => {
            let entries = [
                ("nand2_quaternary", Some("sharifi")),
                ("nand2_quaternary", Some("ebrahimi")),
                ("nand2_binary", None),
            ];
            build_cell_table(catalog, TableKind::Nand, &entries, ("nand2_binary", None))
        }
        TableKind::Adders => {
            let entries = [
                ("qfa_v1", Some("3ps")),
                ("qfa_v1", Some("1ps")),
                ("qfa_v2", Some("ebrahimi")),
                ("qfa_v3", Some("moaiyeri")),
                ("qfa_v3", Some("roosta_3ps")),
                ("qfa_v3", Some("roosta_1ps")),
            ];
            build_cell_table(
                catalog,
                TableKind::Adders,
                &entries,
                ("full_adder_binary", None),
            )
        }
        TableKind::Multipliers => {
            let entries = [
                "wallace_binary_8",
                "v1_multiplier_4",
                "wallace_quaternary_4",
            ];
            let baseline_tc = catalog
                .composite("wallace_binary_8")
                .map(|c| c.reported_tc)
                .unwrap_or(0);
            let mut rows = Vec::new();
            let mut footnotes = Vec::new();
            for name in entries {
                let Some(c) = catalog.composite(name) else {
                    continue;
                };
                let ratio = (baseline_tc > 0).then(|| c.reported_tc as f64 / baseline_tc as f64);
                if let Some(r) = ratio {
                    push_quotient_footnote(&mut footnotes, name, c.reported_tc, baseline_tc, r);
                }
                rows.push(TableRow {
                    label: name.to_string(),
                    tc: c.reported_tc,
                    tc_ratio: ratio,
                });
            }
            ReferenceTable {
                kind: TableKind::Multipliers,
                baseline: "wallace_binary_8".to_string(),
                rows,
                footnotes,
            }
        }
    }
}

fn push_quotient_footnote(notes: &mut Vec<String>, label: &str, num: u32, den: u32, ratio: f64) {
    let rounded = (ratio * 100.0).round() / 100.0;
    if (rounded - ratio).abs() > 1e-12 {
        notes.push(format!(
            "{label}: exact ratio {num}/{den} = {ratio:.4}, displayed {}",
            format_ratio(ratio)
        ));
    }
}

fn build_cell_table(
    catalog: &Catalog,
    kind: TableKind,
    entries: &[(&str, Option<&str>)],
    baseline: (&str, Option<&str>),
) -> ReferenceTable {
    let baseline_spec = catalog.get(baseline.0, baseline.1);
    let baseline_tc = baseline_spec.and_then(|s| s.reported_tc).unwrap_or(0);
    let baseline_label = baseline_spec
        .map(|s| s.display_name())
        .unwrap_or_else(|| baseline.0.to_string());
    let mut rows = Vec::new();
    let mut footnotes = Vec::new();
    for (name, variant) in entries {
        let Some(spec) = catalog.get(name, *variant) else {
            continue;
        };
        let Some(tc) = spec.reported_tc else { continue };
        let ratio = (baseline_tc > 0).then(|| tc as f64 / baseline_tc as f64);
        if let Some(r) = ratio {
            push_quotient_footnote(&mut footnotes, &spec.display_name(), tc, baseline_tc, r);
        }
        rows.push(TableRow {
            label: spec.display_name(),
            tc,
            tc_ratio: ratio,
        });
    }
    ReferenceTable {
        kind,
        baseline: baseline_label,
        rows,
        footnotes,
    }
}

/// Two decimals, trailing zeros trimmed.
pub fn format_ratio(x: f64) -> String {
    let mut s = format!("{x:.2}");
    while s.ends_with('0') {
        s.pop();
    }
    if s.ends_with('.') {
        s.pop();
    }
    s
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Md,
    Csv,
    Json,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "md" => Ok(Format::Md),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!(
                "unknown format '{other}' (expected md, csv or json)"
            )),
        }
    }
}

pub fn render_table(table: &ReferenceTable, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(table).expect("tables serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut out = String::from("label,tc,tc_ratio\n");
            for row in &table.rows {
                let ratio = row.tc_ratio.map(format_ratio).unwrap_or_default();
                out.push_str(&format!("{},{},{}\n", row.label, row.tc, ratio));
            }
            out
        }
        Format::Md => {
            let mut out = String::new();
            out.push_str(&format!(
                "| {} | transistor count | 4V/2V TC ratio |\n|---|---|---|\n",
                table.kind.name()
            ));
            for row in &table.rows {
                let ratio = row.tc_ratio.map(format_ratio).unwrap_or_default();
                out.push_str(&format!("| {} | {} | {} |\n", row.label, row.tc, ratio));
            }
            if !table.footnotes.is_empty() {
                out.push('\n');
                for f in &table.footnotes {
                    out.push_str(&format!("- {f}\n"));
                }
            }
            out
        }
    }
}

pub const COST_CSV_HEADER: &str =
    "name,derived_tc,reported_tc,net_count,endpoint_count,supply_rails,tc_ratio,information_ratio";

pub fn render_cost_report(
    report: &CostReport,
    comparison: Option<&ComparisonRow>,
    format: Format,
) -> String {
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                #[serde(flatten)]
                report: &'a CostReport,
                #[serde(skip_serializing_if = "Option::is_none")]
                comparison: Option<&'a ComparisonRow>,
            }
            let mut s = serde_json::to_string_pretty(&Out { report, comparison })
                .expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            let reported = report
                .reported_tc
                .map(|v| v.to_string())
                .unwrap_or_default();
            let (ratio, info) = match comparison {
                Some(c) => (format_ratio(c.tc_ratio), format_ratio(c.information_ratio)),
                None => (String::new(), String::new()),
            };
            format!(
                "{COST_CSV_HEADER}\n{},{},{},{},{},{},{},{}\n",
                report.circuit,
                report.derived_tc,
                reported,
                report.net_count,
                report.endpoint_count,
                report.supply_rails,
                ratio,
                info
            )
        }
        Format::Md => {
            let mut out = format!("# {}\n\n", report.circuit);
            out.push_str(&format!("- derived_tc: {}\n", report.derived_tc));
            match report.reported_tc {
                Some(tc) => out.push_str(&format!("- reported_tc: {tc}\n")),
                None => out.push_str("- reported_tc: (none)\n"),
            }
            out.push_str(&format!("- net_count: {}\n", report.net_count));
            out.push_str(&format!("- endpoint_count: {}\n", report.endpoint_count));
            out.push_str(&format!("- supply_rails: {}\n", report.supply_rails));
            let profile: Vec<String> = report
                .radix_profile
                .iter()
                .map(|(r, n)| format!("{r}-valued ×{n}"))
                .collect();
            out.push_str(&format!("- radix_profile: {}\n", profile.join(", ")));
            if !report.unspecified.is_empty() {
                let list: Vec<String> = report
                    .unspecified
                    .iter()
                    .map(|(n, c)| format!("{n} ×{c}"))
                    .collect();
                out.push_str(&format!("- uncosted cells: {}\n", list.join(", ")));
            }
            if let Some(c) = comparison {
                out.push_str(&format!(
                    "- tc_ratio vs {}: {} (information ratio {})\n",
                    c.baseline,
                    format_ratio(c.tc_ratio),
                    format_ratio(c.information_ratio)
                ));
            }
            for note in &report.notes {
                out.push_str(&format!("\nnote: {note}\n"));
            }
            out
        }
    }
}

/// One row per catalog cell.
pub fn render_catalog(catalog: &Catalog, format: Format) -> String {
    #[derive(Serialize)]
    struct Entry {
        name: String,
        variant: String,
        inputs: usize,
        outputs: usize,
        reported_tc: Option<u32>,
        tc_interval: Option<(u32, u32)>,
        supply_rails: u8,
        source: crate::catalog::Source,
    }
    let entries: Vec<Entry> = catalog
        .iter()
        .map(|p| Entry {
            name: p.name.clone(),
            variant: p.variant.clone(),
            inputs: p.input_ports().count(),
            outputs: p.output_ports().count(),
            reported_tc: p.reported_tc,
            tc_interval: p.tc_interval,
            supply_rails: p.supply_rails,
            source: p.source,
        })
        .collect();
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&entries).expect("catalog serializes");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut out =
                String::from("name,variant,inputs,outputs,reported_tc,supply_rails,source\n");
            for e in entries {
                let tc = e.reported_tc.map(|v| v.to_string()).unwrap_or_default();
                out.push_str(&format!(
                    "{},{},{},{},{},{},{}\n",
                    e.name, e.variant, e.inputs, e.outputs, tc, e.supply_rails, e.source
                ));
            }
            out
        }
        Format::Md => {
            let mut out =
                String::from("| cell | variant | tc | rails | source |\n|---|---|---|---|---|\n");
            for e in entries {
                let tc = match (e.reported_tc, e.tc_interval) {
                    (Some(v), Some((lo, hi))) => format!("{v} (range {lo}..{hi})"),
                    (Some(v), None) => v.to_string(),
                    (None, _) => "unspecified".to_string(),
                };
                out.push_str(&format!(
                    "| {} | {} | {} | {} | {} |\n",
                    e.name, e.variant, tc, e.supply_rails, e.source
                ));
            }
            out
        }
    }
}
