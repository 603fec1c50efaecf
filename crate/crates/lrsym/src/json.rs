//! Tableau JSON: `{"outer":[...],"inner":[...],"rows":[[...],...]}`.
//! `recording` is accepted as an alternative to `rows` on input; `inner`
//! may be omitted when empty; an explicit `bound` overrides the default
//! (the maximum letter).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{Partition, SkewShape};
use crate::tableau::{RecordingMatrix, Tableau};

#[derive(Serialize, Deserialize)]
struct TableauJson {
    outer: Vec<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    inner: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rows: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    recording: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    bound: Option<usize>,
}

pub fn tableau_from_json(s: &str) -> Result<Tableau> {
    let j: TableauJson =
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("tableau JSON: {}", e)))?;
    let shape = SkewShape::new(Partition::new(j.outer)?, Partition::new(j.inner)?)?;
    let t = match (j.rows, j.recording) {
        (Some(rows), _) => Tableau::with_default_bound(shape, rows)?,
        (None, Some(recording)) => RecordingMatrix::new(recording, shape)?.to_tableau()?,
        (None, None) => {
            return Err(Error::Parse("tableau JSON needs rows or recording".into()))
        }
    };
    match j.bound {
        Some(b) => t.with_bound(b),
        None => Ok(t),
    }
}

pub fn tableau_to_json(t: &Tableau) -> String {
    let max_letter = t.rows_vec().iter().flatten().copied().max().unwrap_or(0);
    let j = TableauJson {
        outer: t.shape().outer().parts().to_vec(),
        inner: t.shape().inner().parts().to_vec(),
        rows: Some(t.rows_vec()),
        recording: None,
        bound: (t.bound() != max_letter).then_some(t.bound()),
    };
    serde_json::to_string(&j).expect("plain data serializes")
}
