//! Circuit generators: ripple-carry adders, the decoder/encoder-wrapped
//! hybrid adder and multiplier, and Wallace-tree multipliers in both
//! radices.
//!
//! All generators are pure given (config, catalog) and emit flat netlists
//! over catalog primitives. Multi-digit ports are named `a00`, `a01`, …
//! least significant first, and every netlist carries an operand layout so
//! verification can treat port groups as integers.
//!
//! Wallace column scheduling is deterministic: columns are processed LSB
//! to MSB each stage, operands taken three at a time into the largest
//! applicable adder (full adder while three remain, else half adder), and
//! in the quaternary tree ternary carries are steered onto the "2"-rated
//! ports of the mixed-radix cells. A carry out of the top product column
//! can never fire (the product fits its 2n digits); on the binary side
//! that column is folded with XOR gates, on the quaternary side such a
//! block's carry net is left unloaded.

use thiserror::Error;

use crate::catalog::{names, Catalog, MixedRadixKind};
use crate::config::{AdderChoice, Config};
use crate::logic::Radix;
use crate::netlist::{NetId, Netlist, NetlistBuilder, NetlistError, OperandGroup, OperandLayout};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("{generator} supports widths {min}..={max}, got {n}")]
    UnsupportedWidth {
        generator: &'static str,
        n: usize,
        min: usize,
        max: usize,
    },
    #[error("catalog has no adder cell '{0}'")]
    UnknownAdder(String),
    #[error(transparent)]
    Netlist(#[from] NetlistError),
}

fn check_width(generator: &'static str, n: usize, min: usize, max: usize) -> Result<(), GenError> {
    if n < min || n > max {
        return Err(GenError::UnsupportedWidth {
            generator,
            n,
            min,
            max,
        });
    }
    Ok(())
}

fn group(name: &str, ports: Vec<String>, radix: Radix) -> OperandGroup {
    OperandGroup {
        name: name.to_string(),
        ports,
        radix,
    }
}

fn indexed(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i:02}")).collect()
}

fn adder_layout(n: usize, radix: Radix) -> OperandLayout {
    let digits = |p: &str| {
        if n == 1 {
            vec![p.to_string()]
        } else {
            indexed(p, n)
        }
    };
    OperandLayout {
        inputs: vec![
            group("a", digits("a"), radix),
            group("b", digits("b"), radix),
            group("ci", vec!["ci".into()], Radix::Binary),
        ],
        outputs: vec![
            group("s", digits("s"), radix),
            group("co", vec!["co".into()], Radix::Binary),
        ],
    }
}

fn multiplier_layout(n: usize, radix: Radix) -> OperandLayout {
    OperandLayout {
        inputs: vec![
            group("a", indexed("a", n), radix),
            group("b", indexed("b", n), radix),
        ],
        outputs: vec![group("p", indexed("p", 2 * n), radix)],
    }
}

/// Chain of binary full adders; 2n+1 inputs, n+1 outputs.
pub fn gen_binary_rca(n: usize) -> Result<Netlist, GenError> {
    check_width("binary_rca", n, 1, 32)?;
    let mut b = NetlistBuilder::new(&format!("binary_rca{n}"));
    let a_nets: Vec<NetId> = (0..n)
        .map(|i| b.input(&format!("a{i:02}"), Radix::Binary))
        .collect();
    let b_nets: Vec<NetId> = (0..n)
        .map(|i| b.input(&format!("b{i:02}"), Radix::Binary))
        .collect();
    let mut carry = b.input("ci", Radix::Binary);
    for i in 0..n {
        let s = b.output(&format!("s{i:02}"), Radix::Binary);
        let co = if i == n - 1 {
            b.output("co", Radix::Binary)
        } else {
            b.net(&format!("c{:02}", i + 1), Radix::Binary)
        };
        b.instance(
            &format!("fa{i:02}"),
            names::FULL_ADDER_BINARY,
            None,
            &[
                ("a", &a_nets[i]),
                ("b", &b_nets[i]),
                ("ci", &carry),
                ("s", &s),
                ("co", &co),
            ],
        );
        carry = co;
    }
    let mut layout = adder_layout(n, Radix::Binary);
    if n == 1 {
        layout = adder_layout_indexed_single();
    }
    b.set_operands(layout);
    Ok(b.finish())
}

// binary_rca(1) keeps its indexed port names (a00 …), unlike v1_adder
fn adder_layout_indexed_single() -> OperandLayout {
    OperandLayout {
        inputs: vec![
            group("a", vec!["a00".into()], Radix::Binary),
            group("b", vec!["b00".into()], Radix::Binary),
            group("ci", vec!["ci".into()], Radix::Binary),
        ],
        outputs: vec![
            group("s", vec!["s00".into()], Radix::Binary),
            group("co", vec!["co".into()], Radix::Binary),
        ],
    }
}

fn resolve_adder(
    catalog: &Catalog,
    choice: &AdderChoice,
) -> Result<(String, Option<String>), GenError> {
    let spec = catalog
        .get(&choice.name, choice.variant.as_deref())
        .ok_or_else(|| match &choice.variant {
            Some(v) => GenError::UnknownAdder(format!("{}/{v}", choice.name)),
            None => GenError::UnknownAdder(choice.name.clone()),
        })?;
    Ok((spec.name.clone(), Some(spec.variant.clone())))
}

/// Chain of 1-digit quaternary adders of the chosen variant.
pub fn gen_quaternary_rca(
    catalog: &Catalog,
    adder: &AdderChoice,
    n: usize,
) -> Result<Netlist, GenError> {
    check_width("quaternary_rca", n, 1, 16)?;
    let (qfa, variant) = resolve_adder(catalog, adder)?;
    let mut b = NetlistBuilder::new(&format!(
        "quaternary_rca{n}_{}",
        variant.as_deref().unwrap_or("default")
    ));
    let a_nets: Vec<NetId> = (0..n)
        .map(|i| b.input(&format!("a{i:02}"), Radix::Quaternary))
        .collect();
    let b_nets: Vec<NetId> = (0..n)
        .map(|i| b.input(&format!("b{i:02}"), Radix::Quaternary))
        .collect();
    let mut carry = b.input("ci", Radix::Binary);
    for i in 0..n {
        let s = b.output(&format!("s{i:02}"), Radix::Quaternary);
        let co = if i == n - 1 {
            b.output("co", Radix::Binary)
        } else {
            b.net(&format!("c{:02}", i + 1), Radix::Binary)
        };
        b.instance(
            &format!("qfa{i:02}"),
            &qfa,
            variant.as_deref(),
            &[
                ("a", &a_nets[i]),
                ("b", &b_nets[i]),
                ("ci", &carry),
                ("s", &s),
                ("co", &co),
            ],
        );
        carry = co;
    }
    let mut layout = adder_layout(n, Radix::Quaternary);
    if n == 1 {
        // quaternary_rca(1) also keeps indexed names
        layout.inputs[0].ports = vec!["a00".into()];
        layout.inputs[1].ports = vec!["b00".into()];
        layout.outputs[0].ports = vec!["s00".into()];
    }
    b.set_operands(layout);
    Ok(b.finish())
}

/// 1-digit adder as a 2-bit binary adder between a decoder pair and an
/// encoder. Arithmetically correct under the positional code.
pub fn gen_v1_adder(catalog: &Catalog, cfg: &Config) -> Netlist {
    let code = cfg.code_map.name();
    let mut b = NetlistBuilder::new("v1_adder");
    let a = b.input("a", Radix::Quaternary);
    let bq = b.input("b", Radix::Quaternary);
    let ci = b.input("ci", Radix::Binary);
    let s = b.output("s", Radix::Quaternary);
    let co = b.output("co", Radix::Binary);

    let ax = b.net("ax", Radix::Binary);
    let ay = b.net("ay", Radix::Binary);
    let bx = b.net("bx", Radix::Binary);
    let by = b.net("by", Radix::Binary);
    b.instance(
        "dec_a",
        names::DECODER_Q_TO_B,
        Some(code),
        &[("q", &a), ("x", &ax), ("y", &ay)],
    );
    b.instance(
        "dec_b",
        names::DECODER_Q_TO_B,
        Some(code),
        &[("q", &bq), ("x", &bx), ("y", &by)],
    );

    let sx = b.net("sx", Radix::Binary);
    let sy = b.net("sy", Radix::Binary);
    let c1 = b.net("c1", Radix::Binary);
    b.instance(
        "fa0",
        names::FULL_ADDER_BINARY,
        None,
        &[("a", &ax), ("b", &bx), ("ci", &ci), ("s", &sx), ("co", &c1)],
    );
    b.instance(
        "fa1",
        names::FULL_ADDER_BINARY,
        None,
        &[("a", &ay), ("b", &by), ("ci", &c1), ("s", &sy), ("co", &co)],
    );
    b.instance(
        "enc",
        names::ENCODER_B_TO_Q,
        Some(code),
        &[("x", &sx), ("y", &sy), ("q", &s)],
    );

    b.set_operands(adder_layout(1, Radix::Quaternary));
    b.set_reported_tc(catalog.composite("v1_adder").map(|c| c.reported_tc));
    b.finish()
}

/// One operand inside a Wallace column.
#[derive(Clone, Debug)]
struct Item {
    net: NetId,
    radix: Radix,
    seq: usize,
}

/// Emits Wallace machinery into a builder with deterministic unique ids.
struct Emitter<'a> {
    b: &'a mut NetlistBuilder,
    prefix: String,
    /// Column weight base: columns are powers of this radix. Decides the
    /// cell family: binary half/full adders conserve value only in a
    /// power-of-2 lattice, the quaternary cells only in a power-of-4 one.
    lattice: Radix,
    seq: usize,
}

impl<'a> Emitter<'a> {
    fn new(b: &'a mut NetlistBuilder, prefix: &str, lattice: Radix) -> Self {
        Emitter {
            b,
            prefix: prefix.to_string(),
            lattice,
            seq: 0,
        }
    }

    fn next_seq(&mut self) -> usize {
        self.seq += 1;
        self.seq
    }

    fn item(&mut self, net: NetId, radix: Radix) -> Item {
        Item {
            net,
            radix,
            seq: self.next_seq(),
        }
    }

    fn const0(&mut self, label: &str, radix: Radix) -> Item {
        let uid = self.next_seq();
        let cell = match radix {
            Radix::Binary => names::CONST0_BINARY,
            Radix::Quaternary => names::CONST0_QUATERNARY,
            Radix::Ternary => unreachable!("no ternary constants needed"),
        };
        let net = self
            .b
            .net(&format!("{}{label}_u{uid}_zero", self.prefix), radix);
        self.b.instance(
            &format!("{}{label}_u{uid}_const0", self.prefix),
            cell,
            None,
            &[("y", &net)],
        );
        self.item(net, radix)
    }

    /// Widen an item to `target` through a zero-cost pad.
    fn pad_to(&mut self, label: &str, item: Item, target: Radix) -> Item {
        if item.radix == target {
            return item;
        }
        let cell = match (item.radix, target) {
            (Radix::Binary, Radix::Ternary) => names::PAD_BINARY_TO_TERNARY,
            (Radix::Binary, Radix::Quaternary) => names::PAD_BINARY_TO_QUATERNARY,
            (Radix::Ternary, Radix::Quaternary) => names::PAD_TERNARY_TO_QUATERNARY,
            (from, to) => unreachable!("no pad from {from} to {to}"),
        };
        let uid = self.next_seq();
        let net = self
            .b
            .net(&format!("{}{label}_u{uid}_pad", self.prefix), target);
        self.b.instance(
            &format!("{}{label}_u{uid}_padc", self.prefix),
            cell,
            None,
            &[("a", &item.net), ("y", &net)],
        );
        self.item(net, target)
    }

    /// Three-operand block. Returns (sum, carry); the sum stays in the
    /// column, the carry belongs one column up. `sum_net` must already
    /// have the radix [`Self::sum_radix`] predicts.
    fn triple(
        &mut self,
        label: &str,
        qfa: (&str, Option<&str>),
        mut items: [Item; 3],
        sum_net: Option<&NetId>,
    ) -> (Item, Item) {
        items.sort_by_key(|i| (std::cmp::Reverse(i.radix.levels()), i.seq));
        let [x, y, z] = items;
        let uid = self.next_seq();
        let mk_net = |e: &mut Self, suffix: &str, radix: Radix| {
            e.b.net(&format!("{}{label}_u{uid}_{suffix}", e.prefix), radix)
        };

        if self.lattice == Radix::Binary {
            // power-of-2 columns: the binary full adder's carry lands
            // exactly one column up
            debug_assert!(
                z.radix == Radix::Binary && x.radix == Radix::Binary,
                "binary lattice carries binary operands only"
            );
            let s = match sum_net {
                Some(n) => n.clone(),
                None => mk_net(self, "s", Radix::Binary),
            };
            let co = mk_net(self, "co", Radix::Binary);
            self.b.instance(
                &format!("{}{label}_u{uid}_fab", self.prefix),
                names::FULL_ADDER_BINARY,
                None,
                &[
                    ("a", &x.net),
                    ("b", &y.net),
                    ("ci", &z.net),
                    ("s", &s),
                    ("co", &co),
                ],
            );
            return (self.item(s, Radix::Binary), self.item(co, Radix::Binary));
        }

        // power-of-4 columns: only cells whose carry is the sum div 4 keep
        // the weights consistent, so a binary FA/HA is never an option here
        assert!(
            z.radix != Radix::Quaternary,
            "no three-input cell takes three quaternary operands"
        );
        let qq = x.radix == Radix::Quaternary && y.radix == Radix::Quaternary;
        // (cell, variant, port for the third operand, its radix on that
        // port, middle-port radix, carry radix)
        let (cell, variant, c_port, c_radix, b_radix, carry_radix) =
            if qq && z.radix == Radix::Ternary {
                (
                    MixedRadixKind::Q332.cell_name(),
                    None,
                    "c",
                    Radix::Ternary,
                    Radix::Quaternary,
                    Radix::Ternary,
                )
            } else if qq && z.radix == Radix::Binary {
                (
                    qfa.0,
                    qfa.1,
                    "ci",
                    Radix::Binary,
                    Radix::Quaternary,
                    Radix::Binary,
                )
            } else {
                (
                    MixedRadixKind::Q322.cell_name(),
                    None,
                    "c",
                    Radix::Ternary,
                    Radix::Ternary,
                    Radix::Binary,
                )
            };
        let a_ = self.pad_to(label, x, Radix::Quaternary);
        let b_ = self.pad_to(label, y, b_radix);
        let c_ = self.pad_to(label, z, c_radix);
        let s = match sum_net {
            Some(n) => n.clone(),
            None => mk_net(self, "s", Radix::Quaternary),
        };
        let co = mk_net(self, "co", carry_radix);
        self.b.instance(
            &format!("{}{label}_u{uid}_{cell}", self.prefix),
            cell,
            variant,
            &[
                ("a", &a_.net),
                ("b", &b_.net),
                (c_port, &c_.net),
                ("s", &s),
                ("co", &co),
            ],
        );
        (self.item(s, Radix::Quaternary), self.item(co, carry_radix))
    }

    /// Two-operand block; same contract as [`Self::triple`].
    fn pair(
        &mut self,
        label: &str,
        qfa: (&str, Option<&str>),
        mut items: [Item; 2],
        sum_net: Option<&NetId>,
    ) -> (Item, Item) {
        items.sort_by_key(|i| (std::cmp::Reverse(i.radix.levels()), i.seq));
        let [x, y] = items;
        if self.lattice == Radix::Binary {
            debug_assert!(
                x.radix == Radix::Binary && y.radix == Radix::Binary,
                "binary lattice carries binary operands only"
            );
            let uid = self.next_seq();
            let s = match sum_net {
                Some(n) => n.clone(),
                None => self
                    .b
                    .net(&format!("{}{label}_u{uid}_s", self.prefix), Radix::Binary),
            };
            let co = self
                .b
                .net(&format!("{}{label}_u{uid}_co", self.prefix), Radix::Binary);
            self.b.instance(
                &format!("{}{label}_u{uid}_hab", self.prefix),
                names::HALF_ADDER_BINARY,
                None,
                &[("a", &x.net), ("b", &y.net), ("s", &s), ("co", &co)],
            );
            return (self.item(s, Radix::Binary), self.item(co, Radix::Binary));
        }
        if x.radix == Radix::Quaternary && y.radix == Radix::Quaternary {
            // no two-quaternary half adder exists: ground a full adder's
            // carry-in instead
            let zero = self.const0(label, Radix::Binary);
            return self.triple(label, qfa, [x, y, zero], sum_net);
        }
        let (cell, b_radix) = if y.radix == Radix::Ternary {
            (MixedRadixKind::Qha32.cell_name(), Radix::Ternary)
        } else {
            (MixedRadixKind::Qha31.cell_name(), Radix::Binary)
        };
        let a_ = self.pad_to(label, x, Radix::Quaternary);
        let b_ = self.pad_to(label, y, b_radix);
        let uid = self.next_seq();
        let s = match sum_net {
            Some(n) => n.clone(),
            None => self.b.net(
                &format!("{}{label}_u{uid}_s", self.prefix),
                Radix::Quaternary,
            ),
        };
        let co = self
            .b
            .net(&format!("{}{label}_u{uid}_co", self.prefix), Radix::Binary);
        self.b.instance(
            &format!("{}{label}_u{uid}_{cell}", self.prefix),
            cell,
            None,
            &[("a", &a_.net), ("b", &b_.net), ("s", &s), ("co", &co)],
        );
        (
            self.item(s, Radix::Quaternary),
            self.item(co, Radix::Binary),
        )
    }

    /// XOR-join two or three binary items: the modulo-2 column sum with
    /// the carry dropped. Only legal where the carry provably cannot fire
    /// (the top column of a product).
    fn xor_join(&mut self, label: &str, items: &[Item], sum_net: Option<&NetId>) -> Item {
        debug_assert!(items.len() == 2 || items.len() == 3);
        debug_assert!(items.iter().all(|i| i.radix == Radix::Binary));
        let uid = self.next_seq();
        let first_out = if items.len() == 2 {
            match sum_net {
                Some(n) => n.clone(),
                None => self
                    .b
                    .net(&format!("{}{label}_u{uid}_x0", self.prefix), Radix::Binary),
            }
        } else {
            self.b
                .net(&format!("{}{label}_u{uid}_x0", self.prefix), Radix::Binary)
        };
        self.b.instance(
            &format!("{}{label}_u{uid}_xor0", self.prefix),
            names::XOR2_BINARY,
            None,
            &[
                ("a", &items[0].net),
                ("b", &items[1].net),
                ("y", &first_out),
            ],
        );
        if items.len() == 2 {
            return self.item(first_out, Radix::Binary);
        }
        let second_out = match sum_net {
            Some(n) => n.clone(),
            None => self
                .b
                .net(&format!("{}{label}_u{uid}_x1", self.prefix), Radix::Binary),
        };
        self.b.instance(
            &format!("{}{label}_u{uid}_xor1", self.prefix),
            names::XOR2_BINARY,
            None,
            &[("a", &first_out), ("b", &items[2].net), ("y", &second_out)],
        );
        self.item(second_out, Radix::Binary)
    }
}

/// Reduce columns until every height is ≤ 2, taking in each column the two
/// largest operands plus the smallest (so the mixed-radix block profiles
/// stay satisfiable). Carries emitted above the top product column are
/// provably zero. `fold_msb` lets all-binary trees fold that column with
/// XOR gates instead of adders; the column's value sum is at most 1
/// there, which does not hold once wider radices are in play.
fn reduce_columns(
    em: &mut Emitter,
    cols: &mut Vec<Vec<Item>>,
    qfa: (&str, Option<&str>),
    msb: usize,
    fold_msb: bool,
) {
    let mut stage = 0usize;
    while cols.iter().any(|c| c.len() > 2) {
        let width = cols.len();
        let mut next: Vec<Vec<Item>> = vec![Vec::new(); width];
        for k in 0..width {
            let mut items: Vec<Item> = std::mem::take(&mut cols[k]);
            let label = format!("s{stage}c{k}");
            if items.len() <= 2 {
                next[k].append(&mut items);
                continue;
            }
            if fold_msb && k == msb && items.iter().all(|i| i.radix == Radix::Binary) {
                while items.len() > 2 {
                    let take: Vec<Item> = items.drain(..3).collect();
                    let joined = em.xor_join(&label, &take, None);
                    items.push(joined);
                }
                next[k].append(&mut items);
                continue;
            }
            while items.len() >= 3 {
                items.sort_by_key(|i| (std::cmp::Reverse(i.radix.levels()), i.seq));
                // an all-quaternary triple fits no block (the largest
                // three-input cell takes two quaternary operands at most);
                // ground a full adder's carry-in and keep the third
                if items.last().unwrap().radix == Radix::Quaternary {
                    let y = items.remove(1);
                    let x = items.remove(0);
                    let (s, co) = em.pair(&label, qfa, [x, y], None);
                    next[k].push(s);
                    if k + 1 < width {
                        next[k + 1].push(co);
                    }
                    continue;
                }
                let z = items.pop().unwrap();
                let y = items.remove(1);
                let x = items.remove(0);
                let (s, co) = em.triple(&label, qfa, [x, y, z], None);
                next[k].push(s);
                if k + 1 < width {
                    next[k + 1].push(co);
                }
            }
            if items.len() == 2 {
                let y = items.pop().unwrap();
                let x = items.pop().unwrap();
                let (s, co) = em.pair(&label, qfa, [x, y], None);
                next[k].push(s);
                if k + 1 < width {
                    next[k + 1].push(co);
                }
            }
            next[k].append(&mut items);
        }
        *cols = next;
        stage += 1;
    }
}

/// Sum the final ≤2-high columns with a ripple chain. Returns one net per
/// output column, each of `out_radix`. New nets are created under
/// `out_names[k]`; a single already-suitable item is passed through as-is.
fn final_chain(
    em: &mut Emitter,
    cols: Vec<Vec<Item>>,
    qfa: (&str, Option<&str>),
    width: usize,
    out_radix: Radix,
    out_name: impl Fn(usize) -> String,
) -> Vec<NetId> {
    let mut outs = Vec::with_capacity(width);
    let mut carry: Option<Item> = None;
    for (k, col) in cols.iter().enumerate().take(width) {
        let label = format!("fc{k}");
        let mut items: Vec<Item> = col.clone();
        if let Some(c) = carry.take() {
            items.push(c);
        }
        let last = k == width - 1;
        let net = match items.len() {
            0 => {
                let net = em.b.net(&out_name(k), out_radix);
                let cell = match out_radix {
                    Radix::Binary => names::CONST0_BINARY,
                    Radix::Quaternary => names::CONST0_QUATERNARY,
                    Radix::Ternary => unreachable!(),
                };
                em.b.instance(
                    &format!("{}{label}_const0", em.prefix),
                    cell,
                    None,
                    &[("y", &net)],
                );
                net
            }
            1 => {
                let item = items.pop().unwrap();
                if item.radix == out_radix {
                    item.net
                } else {
                    let padded = em.pad_to(&label, item, out_radix);
                    padded.net
                }
            }
            2 | 3 => {
                if last && out_radix == Radix::Binary {
                    let net = em.b.net(&out_name(k), out_radix);
                    em.xor_join(&label, &items, Some(&net));
                    net
                } else {
                    // every block of this lattice sums onto the output radix
                    let sum_net = em.b.net(&out_name(k), out_radix);
                    let (s, co) = if items.len() == 3 {
                        let z = items.pop().unwrap();
                        let y = items.pop().unwrap();
                        let x = items.pop().unwrap();
                        em.triple(&label, qfa, [x, y, z], Some(&sum_net))
                    } else {
                        let y = items.pop().unwrap();
                        let x = items.pop().unwrap();
                        em.pair(&label, qfa, [x, y], Some(&sum_net))
                    };
                    debug_assert_eq!(s.radix, out_radix);
                    if !last {
                        carry = Some(co);
                    }
                    sum_net
                }
            }
            _ => unreachable!("columns hold at most two items plus a carry"),
        };
        outs.push(net);
    }
    outs
}

/// Emit a complete binary Wallace core; returns the 2n product bit nets.
fn emit_wallace_binary(
    b: &mut NetlistBuilder,
    prefix: &str,
    a_nets: &[NetId],
    b_nets: &[NetId],
) -> Vec<NetId> {
    let n = a_nets.len();
    assert_eq!(n, b_nets.len());
    let width = 2 * n;
    let mut em = Emitter::new(b, prefix, Radix::Binary);
    let mut cols: Vec<Vec<Item>> = vec![Vec::new(); width];
    for i in 0..n {
        for j in 0..n {
            let net = em.b.net(&format!("{prefix}pp_{i}_{j}"), Radix::Binary);
            em.b.instance(
                &format!("{prefix}and_{i}_{j}"),
                names::AND2_BINARY,
                None,
                &[("a", &a_nets[i]), ("b", &b_nets[j]), ("y", &net)],
            );
            let item = em.item(net, Radix::Binary);
            cols[i + j].push(item);
        }
    }
    let qfa = (names::FULL_ADDER_BINARY, None);
    reduce_columns(&mut em, &mut cols, qfa, width - 1, true);
    let pfx = prefix.to_string();
    final_chain(&mut em, cols, qfa, width, Radix::Binary, |k| {
        format!("{pfx}prod{k:02}")
    })
}

/// n×n binary Wallace multiplier: n² AND partial products, FA/HA column
/// reduction, final ripple chain; 2n output bits.
pub fn gen_wallace_binary(catalog: &Catalog, n: usize) -> Result<Netlist, GenError> {
    check_width("wallace_binary", n, 2, 8)?;
    let mut b = NetlistBuilder::new(&format!("wallace_binary{n}"));
    let a_nets: Vec<NetId> = (0..n)
        .map(|i| b.input(&format!("a{i:02}"), Radix::Binary))
        .collect();
    let b_nets: Vec<NetId> = (0..n)
        .map(|i| b.input(&format!("b{i:02}"), Radix::Binary))
        .collect();
    let prods = emit_wallace_binary(&mut b, "", &a_nets, &b_nets);
    for (k, net) in prods.iter().enumerate() {
        b.output_on(&format!("p{k:02}"), Radix::Binary, net);
    }
    b.set_operands(multiplier_layout(n, Radix::Binary));
    if n == 8 {
        b.set_reported_tc(catalog.composite("wallace_binary_8").map(|c| c.reported_tc));
    }
    Ok(b.finish())
}

/// n×n quaternary Wallace multiplier: n² 1-digit multipliers emitting a
/// quaternary product and a ternary carry, mixed-radix column reduction,
/// final quaternary ripple chain; 2n output digits.
pub fn gen_wallace_quaternary(
    catalog: &Catalog,
    cfg: &Config,
    n: usize,
) -> Result<Netlist, GenError> {
    check_width("wallace_quaternary", n, 2, 4)?;
    let (qfa_name, qfa_variant) = resolve_adder(catalog, &cfg.adder_variant)?;
    let mut b = NetlistBuilder::new(&format!("wallace_quaternary{n}"));
    let a_nets: Vec<NetId> = (0..n)
        .map(|i| b.input(&format!("a{i:02}"), Radix::Quaternary))
        .collect();
    let b_nets: Vec<NetId> = (0..n)
        .map(|i| b.input(&format!("b{i:02}"), Radix::Quaternary))
        .collect();

    let width = 2 * n;
    let prods = {
        let mut em = Emitter::new(&mut b, "", Radix::Quaternary);
        let mut cols: Vec<Vec<Item>> = vec![Vec::new(); width];
        for i in 0..n {
            for j in 0..n {
                let p = em.b.net(&format!("pp_{i}_{j}"), Radix::Quaternary);
                let c = em.b.net(&format!("pc_{i}_{j}"), Radix::Ternary);
                em.b.instance(
                    &format!("mul_{i}_{j}"),
                    names::QMUL_DIGIT,
                    None,
                    &[("a", &a_nets[i]), ("b", &b_nets[j]), ("p", &p), ("c", &c)],
                );
                let pi = em.item(p, Radix::Quaternary);
                cols[i + j].push(pi);
                let ci = em.item(c, Radix::Ternary);
                cols[i + j + 1].push(ci);
            }
        }
        let qfa = (qfa_name.as_str(), qfa_variant.as_deref());
        reduce_columns(&mut em, &mut cols, qfa, width - 1, false);
        final_chain(&mut em, cols, qfa, width, Radix::Quaternary, |k| {
            format!("prod{k:02}")
        })
    };
    for (k, net) in prods.iter().enumerate() {
        b.output_on(&format!("p{k:02}"), Radix::Quaternary, net);
    }

    b.set_operands(multiplier_layout(n, Radix::Quaternary));
    if n == 4 {
        b.set_reported_tc(
            catalog
                .composite("wallace_quaternary_4")
                .map(|c| c.reported_tc),
        );
    }
    Ok(b.finish())
}

/// n-digit quaternary multiplier wrapping a 2n×2n binary Wallace core with
/// per-digit decoders and per-digit encoders on the product.
pub fn gen_v1_multiplier(catalog: &Catalog, cfg: &Config, n: usize) -> Result<Netlist, GenError> {
    check_width("v1_multiplier", n, 1, 4)?;
    let code = cfg.code_map.name();
    let mut b = NetlistBuilder::new(&format!("v1_multiplier{n}"));
    let mut a_bits: Vec<NetId> = Vec::with_capacity(2 * n);
    let mut b_bits: Vec<NetId> = Vec::with_capacity(2 * n);
    for (op, bits) in [("a", &mut a_bits), ("b", &mut b_bits)] {
        for i in 0..n {
            let q = b.input(&format!("{op}{i:02}"), Radix::Quaternary);
            let x = b.net(&format!("{op}x{i:02}"), Radix::Binary);
            let y = b.net(&format!("{op}y{i:02}"), Radix::Binary);
            b.instance(
                &format!("dec_{op}{i:02}"),
                names::DECODER_Q_TO_B,
                Some(code),
                &[("q", &q), ("x", &x), ("y", &y)],
            );
            bits.push(x);
            bits.push(y);
        }
    }
    let prod_bits = emit_wallace_binary(&mut b, "core_", &a_bits, &b_bits);
    for j in 0..2 * n {
        let p = b.output(&format!("p{j:02}"), Radix::Quaternary);
        b.instance(
            &format!("enc_p{j:02}"),
            names::ENCODER_B_TO_Q,
            Some(code),
            &[
                ("x", &prod_bits[2 * j]),
                ("y", &prod_bits[2 * j + 1]),
                ("q", &p),
            ],
        );
    }
    b.set_operands(multiplier_layout(n, Radix::Quaternary));
    if n == 4 {
        b.set_reported_tc(catalog.composite("v1_multiplier_4").map(|c| c.reported_tc));
    }
    Ok(b.finish())
}

/// Structural 1-digit quaternary adder from the sum-level decomposition
/// (indicator cells plus a weighted composer). Functionally verified, no
/// cost claim: the cells are uncosted.
pub fn gen_qfa_decomposed() -> Netlist {
    let mut b = NetlistBuilder::new("qfa_decomposed");
    let a = b.input("a", Radix::Quaternary);
    let bq = b.input("b", Radix::Quaternary);
    let ci = b.input("ci", Radix::Binary);
    let s = b.output("s", Radix::Quaternary);
    let co = b.output("co", Radix::Binary);
    let f3 = b.net("f3", Radix::Binary);
    let f2 = b.net("f2", Radix::Binary);
    let f1 = b.net("f1", Radix::Binary);
    for (cell, net) in [
        ("qfa_sum_mask3", &f3),
        ("qfa_sum_mask2", &f2),
        ("qfa_sum_mask1", &f1),
    ] {
        b.instance(
            &format!("m_{cell}"),
            cell,
            None,
            &[("a", &a), ("b", &bq), ("ci", &ci), ("y", net)],
        );
    }
    b.instance(
        "compose",
        "level_composer",
        None,
        &[("f3", &f3), ("f2", &f2), ("f1", &f1), ("y", &s)],
    );
    b.instance(
        "carry",
        "qfa_carry_mask",
        None,
        &[("a", &a), ("b", &bq), ("ci", &ci), ("y", &co)],
    );
    b.set_operands(adder_layout(1, Radix::Quaternary));
    b.finish()
}

/// Everything `mvlc build` can emit.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GeneratorKind {
    BinaryRca,
    QuaternaryRca,
    V1Adder,
    WallaceBinary,
    WallaceQuaternary,
    V1Multiplier,
    QfaDecomposed,
}

impl GeneratorKind {
    pub const ALL: [GeneratorKind; 7] = [
        GeneratorKind::BinaryRca,
        GeneratorKind::QuaternaryRca,
        GeneratorKind::V1Adder,
        GeneratorKind::WallaceBinary,
        GeneratorKind::WallaceQuaternary,
        GeneratorKind::V1Multiplier,
        GeneratorKind::QfaDecomposed,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GeneratorKind::BinaryRca => "binary_rca",
            GeneratorKind::QuaternaryRca => "quaternary_rca",
            GeneratorKind::V1Adder => "v1_adder",
            GeneratorKind::WallaceBinary => "wallace_binary",
            GeneratorKind::WallaceQuaternary => "wallace_quaternary",
            GeneratorKind::V1Multiplier => "v1_multiplier",
            GeneratorKind::QfaDecomposed => "qfa_decomposed",
        }
    }

    pub fn default_width(self) -> usize {
        match self {
            GeneratorKind::BinaryRca | GeneratorKind::WallaceBinary => 8,
            GeneratorKind::QuaternaryRca | GeneratorKind::WallaceQuaternary => 4,
            GeneratorKind::V1Multiplier => 4,
            GeneratorKind::V1Adder | GeneratorKind::QfaDecomposed => 1,
        }
    }
}

impl std::str::FromStr for GeneratorKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GeneratorKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| {
                let known: Vec<&str> = GeneratorKind::ALL.iter().map(|k| k.name()).collect();
                format!("unknown generator '{s}' (known: {})", known.join(", "))
            })
    }
}

/// Generate a circuit, honoring the config's variant/code knobs and the
/// optional fan-out limit (which runs the buffer pass).
pub fn build_circuit(
    kind: GeneratorKind,
    n: usize,
    catalog: &Catalog,
    cfg: &Config,
) -> Result<Netlist, GenError> {
    let nl = match kind {
        GeneratorKind::BinaryRca => gen_binary_rca(n)?,
        GeneratorKind::QuaternaryRca => gen_quaternary_rca(catalog, &cfg.adder_variant, n)?,
        GeneratorKind::V1Adder => gen_v1_adder(catalog, cfg),
        GeneratorKind::WallaceBinary => gen_wallace_binary(catalog, n)?,
        GeneratorKind::WallaceQuaternary => gen_wallace_quaternary(catalog, cfg, n)?,
        GeneratorKind::V1Multiplier => gen_v1_multiplier(catalog, cfg, n)?,
        GeneratorKind::QfaDecomposed => gen_qfa_decomposed(),
    };
    match cfg.max_fanout {
        Some(limit) => Ok(crate::netlist::insert_buffers(&nl, catalog, limit)?),
        None => Ok(nl),
    }
}
