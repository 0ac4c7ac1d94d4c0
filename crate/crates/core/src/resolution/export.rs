//! JSON and plain-text matrix export of a resolution.

use std::fmt::Write as _;

use serde_json::{json, Value};

use super::ResolutionComplex;

impl ResolutionComplex {
    /// `{"ring": [...], "ranks": [...], "levels": [...], "differentials": [...]}`.
    pub fn to_json(&self) -> Value {
        let levels: Vec<Value> = (0..self.len())
            .map(|t| {
                let basis: Vec<Value> = self.symbols[t]
                    .iter()
                    .zip(&self.degrees[t])
                    .map(|(s, d)| json!({"sets": s.sets(), "degree": d.display(&self.ring)}))
                    .collect();
                json!({"t": t, "basis": basis})
            })
            .collect();
        let diffs: Vec<Value> = (1..self.len())
            .map(|t| {
                let entries: Vec<Value> = self.diffs[t]
                    .iter()
                    .map(|e| json!([e.row, e.col, e.sign, self.ring.name(e.var)]))
                    .collect();
                json!({"t": t, "entries": entries})
            })
            .collect();
        json!({
            "ring": self.ring.names(),
            "ranks": self.ranks(),
            "levels": levels,
            "differentials": diffs,
        })
    }

    /// The differentials as Macaulay2-style `matrix {{...}}` blocks over
    /// variables `x_0, x_1, ...`, with a comment mapping them to their names.
    pub fn to_matrix_text(&self) -> String {
        let mut s = String::new();
        let names: Vec<String> = (0..self.ring.nvars()).map(|v| format!("x_{v}")).collect();
        for (v, n) in names.iter().enumerate() {
            let _ = writeln!(s, "-- {n} = {}", self.ring.name(v));
        }
        let _ = writeln!(s, "R = QQ[{}]", names.join(","));
        for t in 1..self.len() {
            let dense = self.dense(t);
            let rows: Vec<String> = dense
                .iter()
                .map(|row| {
                    let cells: Vec<String> = row
                        .iter()
                        .map(|c| match c {
                            None => "0".into(),
                            Some((1, v)) => names[*v].clone(),
                            Some((_, v)) => format!("-{}", names[*v]),
                        })
                        .collect();
                    format!("{{{}}}", cells.join(", "))
                })
                .collect();
            let _ = writeln!(s, "d{t} = matrix {{{}}}", rows.join(", "));
        }
        s
    }
}
