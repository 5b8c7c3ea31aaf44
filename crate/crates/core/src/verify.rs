//! Independent certification of universal graphs.
//!
//! Containment is decided with the plain backtracking checker, never the
//! label-class solver, and every positive answer carries an embedding that
//! is re-checked pair by pair before it is accepted.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};
use crate::iso::{induced_subgraph_iso, is_valid_embedding, naive_embedding, Embedding};
use crate::search::GraphFamily;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MemberVerdict {
    pub index: usize,
    pub graph6: String,
    /// `witness[v]` is the host vertex for member vertex `v`.
    pub witness: Option<Embedding>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub graph6: String,
    pub order: usize,
    pub family: String,
    pub valid: bool,
    pub contained: usize,
    pub total: usize,
    pub members: Vec<MemberVerdict>,
}

impl Certificate {
    pub fn failures(&self) -> impl Iterator<Item = &MemberVerdict> {
        self.members.iter().filter(|m| m.witness.is_none())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    /// One line per member: index, graph6, and witness vertices or `MISSING`.
    pub fn to_text(&self) -> String {
        let width = self
            .members
            .iter()
            .map(|m| m.graph6.len())
            .max()
            .unwrap_or(0);
        let iw = self.total.to_string().len();
        let mut out = format!(
            "graph {} (order {})\nfamily {}\n{} / {} members contained: {}\n",
            self.graph6,
            self.order,
            self.family,
            self.contained,
            self.total,
            if self.valid { "VALID" } else { "INVALID" }
        );
        for m in &self.members {
            let w = match &m.witness {
                Some(map) => map
                    .iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(" "),
                None => "MISSING".into(),
            };
            out.push_str(&format!("{:>iw$}  {:<width$}  {w}\n", m.index, m.graph6));
        }
        out
    }
}

/// Checks every member of `family` against `g` and records a witness for
/// each one found.
pub fn verify_universal(g: &Graph, family: &GraphFamily) -> Certificate {
    let members: Vec<MemberVerdict> = family
        .members
        .par_iter()
        .enumerate()
        .map(|(index, h)| {
            let witness = naive_embedding(h, g).filter(|map| is_valid_embedding(h, g, map));
            MemberVerdict {
                index,
                graph6: h.to_graph6(),
                witness,
            }
        })
        .collect();
    let contained = members.iter().filter(|m| m.witness.is_some()).count();
    Certificate {
        graph6: g.to_graph6(),
        order: g.order(),
        family: family.label.clone(),
        valid: contained == members.len(),
        contained,
        total: members.len(),
        members,
    }
}

/// True iff both solvers agree on every member.
pub fn cross_check(g: &Graph, family: &GraphFamily) -> bool {
    family
        .members
        .par_iter()
        .all(|h| induced_subgraph_iso(h, g) == naive_embedding(h, g).is_some())
}

/// Parses `n` lines of `n` whitespace-separated 0/1 entries. Blank lines
/// are ignored. Rows and columns in errors are 0-based.
pub fn parse_matrix_text(text: &str) -> Result<Graph> {
    let rows: Vec<Vec<&str>> = text
        .lines()
        .map(|l| l.split_whitespace().collect::<Vec<_>>())
        .filter(|r| !r.is_empty())
        .collect();
    let n = rows.len();
    let err = |row, col, reason: String| Error::Matrix { row, col, reason };
    if n > MAX_ORDER {
        return Err(err(
            MAX_ORDER,
            0,
            format!("{n} rows exceed the maximum order {MAX_ORDER}"),
        ));
    }
    let mut bits = vec![0u64; n];
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(err(
                i,
                row.len().min(n),
                format!("row has {} entries, expected {n}", row.len()),
            ));
        }
        for (j, tok) in row.iter().enumerate() {
            match *tok {
                "0" => {}
                "1" => bits[i] |= 1u64 << j,
                other => return Err(err(i, j, format!("entry `{other}` is not 0 or 1"))),
            }
        }
    }
    for i in 0..n {
        if bits[i] >> i & 1 == 1 {
            return Err(err(i, i, "nonzero diagonal entry".into()));
        }
        for j in i + 1..n {
            if (bits[i] >> j & 1) != (bits[j] >> i & 1) {
                return Err(err(i, j, format!("entry differs from ({j}, {i})")));
            }
        }
    }
    Graph::from_rows(&bits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_parsing() {
        assert_eq!(parse_matrix_text("0").unwrap(), Graph::empty(1));
        assert_eq!(parse_matrix_text("0 1\n1 0\n").unwrap(), Graph::complete(2));
        assert_eq!(parse_matrix_text("").unwrap(), Graph::empty(0));
        let cases = [
            ("1", (0, 0)),
            ("0 1\n0 0", (0, 1)),
            ("0 1\n1", (1, 1)),
            ("0 2\n2 0", (0, 1)),
        ];
        for (text, (r, c)) in cases {
            match parse_matrix_text(text) {
                Err(Error::Matrix { row, col, .. }) => assert_eq!((row, col), (r, c), "{text:?}"),
                other => panic!("{text:?}: unexpected {other:?}"),
            }
        }
    }

    #[test]
    fn small_certificates() {
        let f3 = GraphFamily::all_graphs(3).unwrap();
        let fig1a = Graph::from_edges(5, &[(0, 3), (0, 4), (1, 4), (3, 4)]).unwrap();
        let c = verify_universal(&fig1a, &f3);
        assert!(c.valid);
        assert_eq!((c.contained, c.total), (4, 4));
        for (m, h) in c.members.iter().zip(&f3.members) {
            assert!(is_valid_embedding(h, &fig1a, m.witness.as_ref().unwrap()));
        }
        assert!(cross_check(&fig1a, &f3));

        let c = verify_universal(&Graph::complete(5), &f3);
        assert!(!c.valid);
        assert_eq!(c.failures().count(), 3);
        assert!(c.to_text().contains("MISSING"));
        let back: Certificate = serde_json::from_str(&c.to_json()).unwrap();
        assert_eq!(back, c);
    }
}
