//! PACE text formats. Files are 1-indexed; everything in memory is 0-indexed.
//!
//! `.gr`: optional `c` comment lines, a header `p tw <n> <m>`, then one
//! `u v` line per edge. `.td`: a header `s td <bags> <max bag size> <n>`,
//! one `b <id> <v...>` line per bag, then one `i j` line per tree edge.
//! Writers emit sorted, comment-free output, so reading what was written
//! and writing again reproduces the same bytes.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::tdecomp::TreeDecomposition;
use crate::vertex_set::VertexSet;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Non-empty, non-comment lines with their 1-based numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.first() {
            None => None,
            Some(&"c") => None,
            Some(_) => Some((i + 1, fields)),
        }
    })
}

fn number(line: usize, field: &str, what: &str) -> Result<usize> {
    field
        .parse()
        .map_err(|_| parse_err(line, format!("expected {what}, found {field:?}")))
}

/// A 1-indexed vertex id in `1..=n`, returned 0-indexed.
fn vertex(line: usize, field: &str, n: usize) -> Result<usize> {
    let v = number(line, field, "a vertex id")?;
    if v == 0 || v > n {
        return Err(parse_err(line, format!("vertex {v} outside 1..={n}")));
    }
    Ok(v - 1)
}

pub fn read_gr(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing `p tw <n> <m>` header"))?;
    if header.len() != 4 || header[0] != "p" || header[1] != "tw" {
        return Err(parse_err(hline, "expected header `p tw <n> <m>`"));
    }
    let n = number(hline, header[2], "a vertex count")?;
    let m = number(hline, header[3], "an edge count")?;
    let mut adj = vec![VertexSet::new(n); n];
    let mut count = 0;
    let mut last = hline;
    for (line, fields) in lines {
        last = line;
        if fields.len() != 2 {
            return Err(parse_err(
                line,
                format!("expected an edge `u v`, found {} fields", fields.len()),
            ));
        }
        let u = vertex(line, fields[0], n)?;
        let v = vertex(line, fields[1], n)?;
        if u == v {
            return Err(parse_err(line, format!("self-loop at vertex {}", u + 1)));
        }
        if !adj[u].insert(v) {
            return Err(parse_err(line, format!("duplicate edge {} {}", u + 1, v + 1)));
        }
        adj[v].insert(u);
        count += 1;
    }
    if count != m {
        return Err(parse_err(last, format!("header announces {m} edges, found {count}")));
    }
    Graph::from_adjacency(adj)
}

pub fn write_gr(g: &Graph) -> String {
    let mut out = format!("p tw {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}

/// Reads a `.td` file; `n`, when given, must match the header.
pub fn read_td(text: &str, n: Option<usize>) -> Result<TreeDecomposition> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing `s td` header"))?;
    if header.len() != 5 || header[0] != "s" || header[1] != "td" {
        return Err(parse_err(hline, "expected header `s td <bags> <max bag size> <n>`"));
    }
    let k = number(hline, header[2], "a bag count")?;
    let max_bag = number(hline, header[3], "a bag size")?;
    let universe = number(hline, header[4], "a vertex count")?;
    if let Some(expected) = n {
        if expected != universe {
            return Err(parse_err(
                hline,
                format!("decomposition is over {universe} vertices, graph has {expected}"),
            ));
        }
    }
    if k == 0 {
        return Err(parse_err(hline, "a decomposition needs at least one bag"));
    }
    let mut bags: Vec<Option<VertexSet>> = vec![None; k];
    let mut edges = Vec::new();
    let mut last = hline;
    for (line, fields) in lines {
        last = line;
        if fields[0] == "b" {
            if fields.len() < 2 {
                return Err(parse_err(line, "bag line without an id"));
            }
            let id = number(line, fields[1], "a bag id")?;
            if id == 0 || id > k {
                return Err(parse_err(line, format!("bag id {id} outside 1..={k}")));
            }
            if !edges.is_empty() {
                return Err(parse_err(line, "bag lines must precede tree edges"));
            }
            if bags[id - 1].is_some() {
                return Err(parse_err(line, format!("bag {id} listed twice")));
            }
            let mut bag = VertexSet::new(universe);
            for f in &fields[2..] {
                let v = vertex(line, f, universe)?;
                if !bag.insert(v) {
                    return Err(parse_err(line, format!("vertex {} repeated in bag {id}", v + 1)));
                }
            }
            if bag.len() > max_bag {
                return Err(parse_err(
                    line,
                    format!("bag {id} has {} vertices, header allows {max_bag}", bag.len()),
                ));
            }
            bags[id - 1] = Some(bag);
        } else {
            if fields.len() != 2 {
                return Err(parse_err(
                    line,
                    format!("expected a tree edge `i j`, found {} fields", fields.len()),
                ));
            }
            let i = number(line, fields[0], "a bag id")?;
            let j = number(line, fields[1], "a bag id")?;
            if i == 0 || i > k || j == 0 || j > k {
                return Err(parse_err(
                    line,
                    format!("tree edge {i} {j} names a bag outside 1..={k}"),
                ));
            }
            edges.push((i - 1, j - 1));
        }
    }
    let bags: Vec<VertexSet> = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| parse_err(last, format!("bag {} is never listed", i + 1))))
        .collect::<Result<_>>()?;
    if bags.iter().map(VertexSet::len).max() != Some(max_bag) {
        return Err(parse_err(hline, "header bag size differs from the largest bag"));
    }
    TreeDecomposition::from_sets(universe, bags, edges).map_err(|e| parse_err(last, e.to_string()))
}

pub fn write_td(td: &TreeDecomposition) -> String {
    let max_bag = td.bags().iter().map(VertexSet::len).max().unwrap_or(0);
    let mut out = format!("s td {} {} {}\n", td.node_count(), max_bag, td.universe());
    for (i, bag) in td.bags().iter().enumerate() {
        out.push_str(&format!("b {}", i + 1));
        for v in bag.iter() {
            out.push_str(&format!(" {}", v + 1));
        }
        out.push('\n');
    }
    let mut edges: Vec<(usize, usize)> = td.tree_edges().iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    edges.sort_unstable();
    for (a, b) in edges {
        out.push_str(&format!("{} {}\n", a + 1, b + 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_graph_with_comments() {
        let g = read_gr("c a path\np tw 3 2\n1 2\n\nc mid\n2 3\n").unwrap();
        assert_eq!(g, Graph::path(3));
        assert_eq!(write_gr(&g), "p tw 3 2\n1 2\n2 3\n");
    }

    #[test]
    fn graph_errors_carry_line_numbers() {
        let line = |text: &str| match read_gr(text) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected a parse error, got {other:?}"),
        };
        assert_eq!(line(""), 1);
        assert_eq!(line("c x\np td 2 1\n"), 2);
        assert_eq!(line("p tw 2 1\n1 3\n"), 2);
        assert_eq!(line("p tw 2 1\n1 1\n"), 2);
        assert_eq!(line("p tw 3 2\n1 2\n2 1\n"), 3);
        assert_eq!(line("p tw 3 2\n1 2\n"), 2);
        assert_eq!(line("p tw 3 1\n1 x\n"), 2);
        assert_eq!(line("p tw 3 1\n1 2 3\n"), 2);
    }

    #[test]
    fn reads_decomposition() {
        let td = read_td("c\ns td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n", Some(3)).unwrap();
        assert_eq!(td.node_count(), 2);
        assert_eq!(td.bag(1).to_vec(), vec![1, 2]);
        assert_eq!(td.validate(&Graph::path(3)), Ok(()));
        let empty = read_td("s td 2 1 1\nb 1\nb 2 1\n1 2\n", None).unwrap();
        assert!(empty.bag(0).is_empty());
    }

    #[test]
    fn decomposition_errors_carry_line_numbers() {
        let line = |text: &str| match read_td(text, Some(3)) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected a parse error, got {other:?}"),
        };
        assert_eq!(line("s td 1 1 4\nb 1 1\n"), 1);
        assert_eq!(line("s td 2 2 3\nb 1 1 2\nb 3 2 3\n"), 3);
        assert_eq!(line("s td 2 2 3\nb 1 1 2\nb 1 2 3\n"), 3);
        assert_eq!(line("s td 2 2 3\nb 1 1 2\nb 2 2 9\n"), 3);
        assert_eq!(line("s td 1 1 3\nb 1 1 2\n"), 2);
        assert_eq!(line("s td 2 2 3\nb 1 1 2\n1 2\n"), 3);
        assert_eq!(line("s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 5\n"), 4);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn round_trips_bit_exactly(n in 0usize..30, p in 0.0f64..1.0, seed in any::<u64>()) {
                let g = crate::random::gnp(n, p, seed);
                let text = write_gr(&g);
                let back = read_gr(&text).unwrap();
                prop_assert_eq!(&back, &g);
                prop_assert_eq!(write_gr(&back), text);
                let td = crate::lift::heuristic_td(&g, crate::Budget::default()).unwrap();
                let text = write_td(&td);
                let back = read_td(&text, Some(n)).unwrap();
                prop_assert_eq!(back.validate(&g), Ok(()));
                prop_assert_eq!(back.bags(), td.bags());
                prop_assert_eq!(write_td(&back), text);
            }
        }
    }
}
