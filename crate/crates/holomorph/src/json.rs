//! Cayley-table JSON: `{"order", "identity", "mul", "names"}`.

use holomorph_core::{AxiomViolation, GroupTable, Limits};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub order: usize,
    pub identity: usize,
    pub mul: Vec<Vec<usize>>,
    pub names: Vec<String>,
}

#[derive(Debug, thiserror::Error)]
pub enum JsonError {
    #[error("malformed JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("\"order\" is {declared} but \"mul\" has {rows} rows")]
    OrderMismatch { declared: usize, rows: usize },
    #[error("order {order} exceeds the cap of {limit}")]
    TooLarge { order: usize, limit: usize },
    #[error(transparent)]
    Axiom(#[from] AxiomViolation),
}

impl From<&GroupTable> for TableJson {
    fn from(g: &GroupTable) -> Self {
        TableJson {
            order: g.order(),
            identity: g.identity(),
            mul: g.rows(),
            names: g.names().to_vec(),
        }
    }
}

impl TableJson {
    /// Validates every group axiom; a bad table yields a concrete witness.
    pub fn into_table(self) -> Result<GroupTable, JsonError> {
        if self.order != self.mul.len() {
            return Err(JsonError::OrderMismatch {
                declared: self.order,
                rows: self.mul.len(),
            });
        }
        let limit = Limits::default().max_order;
        if self.order > limit {
            return Err(JsonError::TooLarge {
                order: self.order,
                limit,
            });
        }
        Ok(GroupTable::from_rows(
            &self.mul,
            self.identity,
            Some(self.names),
        )?)
    }
}

pub fn to_string(g: &GroupTable) -> String {
    serde_json::to_string(&TableJson::from(g)).expect("tables always serialize")
}

pub fn from_str(s: &str) -> Result<GroupTable, JsonError> {
    serde_json::from_str::<TableJson>(s)?.into_table()
}
