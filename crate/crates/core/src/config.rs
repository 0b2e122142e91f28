//! Build configuration: code-map choice, cost knobs and overrides.
//!
//! Parsed from a plain `key = value` file; every knob has a default so an
//! empty (or absent) config is valid.

use thiserror::Error;

use crate::logic::CodeKind;

/// Bounds of the published 1-digit quaternary multiplier cost interval.
pub const QMUL_TC_MIN: u32 = 54;
pub const QMUL_TC_MAX: u32 = 76;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConfigError {
    #[error("line {line}: expected 'key = value', got '{text}'")]
    Malformed { line: usize, text: String },
    #[error("line {line}: unknown key '{key}'")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: invalid value for '{key}': {reason}")]
    InvalidValue {
        line: usize,
        key: String,
        reason: String,
    },
    #[error("qmul_tc_choice {0} outside the published interval [{QMUL_TC_MIN}, {QMUL_TC_MAX}]")]
    QmulChoiceOutOfRange(u32),
}

/// A quaternary full-adder pick: catalog name plus variant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdderChoice {
    pub name: String,
    pub variant: Option<String>,
}

impl AdderChoice {
    /// Accepts `name` or `name/variant`, e.g. `qfa_v3/roosta_3ps`.
    pub fn parse(s: &str) -> Self {
        match s.split_once('/') {
            Some((name, variant)) => AdderChoice {
                name: name.to_string(),
                variant: Some(variant.to_string()),
            },
            None => AdderChoice {
                name: s.to_string(),
                variant: None,
            },
        }
    }
}

impl Default for AdderChoice {
    fn default() -> Self {
        AdderChoice {
            name: "qfa_v2".into(),
            variant: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Config {
    /// Code used by decoder/encoder-wrapped (hybrid) circuits.
    pub code_map: CodeKind,
    /// Effective cost of the 1-digit quaternary multiplier, within [54, 76].
    pub qmul_tc_choice: u32,
    /// When set, generators run the buffer-insertion pass at this limit.
    pub max_fanout: Option<u32>,
    /// Quaternary full adder used by ripple-carry and Wallace generators.
    pub adder_variant: AdderChoice,
    /// Binary half adder cost (XOR 10 T + AND 6 T unless overridden).
    pub half_adder_tc: u32,
    /// Optional cost overrides for cells the sources leave uncosted.
    pub nqi_tc: Option<u32>,
    pub iqi_tc: Option<u32>,
    pub pqi_tc: Option<u32>,
    pub q332_tc: Option<u32>,
    pub q322_tc: Option<u32>,
    pub qha32_tc: Option<u32>,
    pub qha31_tc: Option<u32>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            code_map: CodeKind::Positional,
            qmul_tc_choice: QMUL_TC_MIN,
            max_fanout: None,
            adder_variant: AdderChoice::default(),
            half_adder_tc: 16,
            nqi_tc: None,
            iqi_tc: None,
            pqi_tc: None,
            q332_tc: None,
            q322_tc: None,
            qha32_tc: None,
            qha31_tc: None,
        }
    }
}

impl Config {
    /// Parse `key = value` lines; `#` starts a comment, blank lines ignored.
    pub fn parse(text: &str) -> Result<Config, ConfigError> {
        let mut cfg = Config::default();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let stripped = raw.split('#').next().unwrap_or("").trim();
            if stripped.is_empty() {
                continue;
            }
            let (key, value) = stripped
                .split_once('=')
                .ok_or_else(|| ConfigError::Malformed {
                    line,
                    text: stripped.to_string(),
                })?;
            let key = key.trim();
            let value = value.trim();
            let bad = |reason: &str| ConfigError::InvalidValue {
                line,
                key: key.to_string(),
                reason: reason.to_string(),
            };
            let parse_u32 = |v: &str| v.parse::<u32>().map_err(|e| bad(&e.to_string()));
            match key {
                "code_map" => {
                    cfg.code_map = value.parse().map_err(|e: String| bad(&e))?;
                }
                "qmul_tc_choice" => cfg.qmul_tc_choice = parse_u32(value)?,
                "max_fanout" => cfg.max_fanout = Some(parse_u32(value)?),
                "adder_variant" => cfg.adder_variant = AdderChoice::parse(value),
                "half_adder_tc" => cfg.half_adder_tc = parse_u32(value)?,
                "nqi_tc" => cfg.nqi_tc = Some(parse_u32(value)?),
                "iqi_tc" => cfg.iqi_tc = Some(parse_u32(value)?),
                "pqi_tc" => cfg.pqi_tc = Some(parse_u32(value)?),
                "q332_tc" => cfg.q332_tc = Some(parse_u32(value)?),
                "q322_tc" => cfg.q322_tc = Some(parse_u32(value)?),
                "qha32_tc" => cfg.qha32_tc = Some(parse_u32(value)?),
                "qha31_tc" => cfg.qha31_tc = Some(parse_u32(value)?),
                _ => {
                    return Err(ConfigError::UnknownKey {
                        line,
                        key: key.to_string(),
                    })
                }
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.qmul_tc_choice < QMUL_TC_MIN || self.qmul_tc_choice > QMUL_TC_MAX {
            return Err(ConfigError::QmulChoiceOutOfRange(self.qmul_tc_choice));
        }
        Ok(())
    }
}
