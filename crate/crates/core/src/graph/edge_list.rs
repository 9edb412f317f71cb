//! Plain edge lists: a first line holding `n`, then one `u v` pair per line,
//! 0-indexed. Blank lines and lines starting with `#` are skipped.

use super::{Graph, GraphBuilder, GraphError};

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line, header) = lines.next().ok_or(GraphError::EdgeList {
        line: 1,
        message: "missing vertex count".into(),
    })?;
    let n: usize = header.parse().map_err(|_| GraphError::EdgeList {
        line,
        message: format!("expected vertex count, found {header:?}"),
    })?;
    let mut b = GraphBuilder::new(n)?;
    for (line, l) in lines {
        let bad = || GraphError::EdgeList {
            line,
            message: format!("expected \"u v\", found {l:?}"),
        };
        let mut it = l.split_whitespace();
        let u: usize = it.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
        let v: usize = it.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
        if it.next().is_some() {
            return Err(bad());
        }
        b.add_edge(u, v).map_err(|e| GraphError::EdgeList {
            line,
            message: e.to_string(),
        })?;
    }
    Ok(b.build())
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
