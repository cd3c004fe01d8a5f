//! Printed reference values, embedded at compile time.

use std::sync::OnceLock;

use serde::Deserialize;

use dirac_yukawa::{EnergyPair, Root};

const SOURCE: &str = include_str!("../data/golden.toml");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RootSign {
    Plus,
    Minus,
}

impl RootSign {
    pub fn pick(self, pair: &EnergyPair) -> Root {
        match self {
            RootSign::Plus => pair.plus,
            RootSign::Minus => pair.minus,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            RootSign::Plus => "plus",
            RootSign::Minus => "minus",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Block {
    Left,
    Right,
}

impl Block {
    pub fn as_str(self) -> &'static str {
        match self {
            Block::Left => "left",
            Block::Right => "right",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Table2Ref {
    pub cs: f64,
    pub kappa: i32,
    pub root: RootSign,
    pub value: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Table3Ref {
    pub state: String,
    pub n: u32,
    pub l: u32,
    pub g: f64,
    pub closed_form: f64,
    pub numerical: f64,
}

/// One state of Table 4 or 5; `minus`/`plus` are absent for "-" cells.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiracRef {
    pub block: Block,
    /// `l` in Table 4, `l̃` in Table 5.
    #[serde(alias = "l", alias = "l_tilde")]
    pub orbital: u32,
    pub n: u32,
    pub kappa: i32,
    pub minus: Option<f64>,
    pub plus: Option<f64>,
    /// Label as printed, when it differs from `(n, kappa)`.
    pub printed: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Golden {
    pub version: u32,
    pub table2: Vec<Table2Ref>,
    pub table3: Vec<Table3Ref>,
    pub table4: Vec<DiracRef>,
    pub table5: Vec<DiracRef>,
}

impl Golden {
    pub fn embedded() -> &'static Golden {
        static CELL: OnceLock<Golden> = OnceLock::new();
        CELL.get_or_init(|| toml::from_str(SOURCE).expect("embedded reference data parses"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_data_shape() {
        let g = Golden::embedded();
        assert_eq!(g.version, 1);
        assert_eq!(g.table2.len(), 28 * 5 + 26 * 3);
        assert_eq!(g.table3.len(), 29);
        assert_eq!(g.table4.len(), 29 + 24);
        assert_eq!(g.table5.len(), 27 + 26);
        let dashes = g.table4.iter().filter(|r| r.plus.is_none()).count();
        assert_eq!(dashes, 5);
        assert!(g
            .table4
            .iter()
            .chain(&g.table5)
            .all(|r| r.minus.is_some() == r.plus.is_some()));
    }
}
