use std::path::Path;

use anyhow::{bail, Context, Result};
use sparselab_core::io::{read_instance, Format};
use sparselab_core::{Graph, Instance};

/// A small named graph: `petersen`, `k<n>`, `c<n>`, `p<n>`, `star<n>`
/// (`n` leaves) or `k<a>x<b>` (complete bipartite).
pub fn named_graph(name: &str) -> Option<Graph> {
    let name = name.trim().to_ascii_lowercase();
    if name == "petersen" {
        return Some(Graph::petersen());
    }
    let split = name.find(|c: char| c.is_ascii_digit())?;
    let (head, tail) = name.split_at(split);
    if head == "k" {
        if let Some((a, b)) = tail.split_once('x') {
            return Some(Graph::complete_bipartite(a.parse().ok()?, b.parse().ok()?));
        }
    }
    let n: usize = tail.parse().ok()?;
    match head {
        "k" => Some(Graph::complete(n)),
        "c" if n >= 3 => Some(Graph::cycle(n)),
        "p" => Some(Graph::path(n)),
        "star" => Some(Graph::star(n)),
        _ => None,
    }
}

/// Reads `source` as a file when it exists, otherwise as a named graph.
pub fn load_instance(source: &str, format: Option<Format>) -> Result<Instance> {
    let path = Path::new(source);
    if path.exists() {
        let format = format.unwrap_or_else(|| Format::from_path(path));
        return read_instance(path, format).with_context(|| format!("reading {source}"));
    }
    match named_graph(source) {
        Some(g) => Ok(g.into()),
        None => bail!("{source}: no such file and not a named graph"),
    }
}

pub fn load_graph(source: &str, format: Option<Format>) -> Result<Graph> {
    match load_instance(source, format)? {
        Instance::Graph(g) => Ok(g),
        other => bail!("{source}: expected a graph, got a {}", other.kind_name()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names() {
        assert_eq!(named_graph("star5").unwrap().n(), 6);
        assert_eq!(named_graph("K3").unwrap().m(), 3);
        assert_eq!(named_graph("k2x3").unwrap().m(), 6);
        assert_eq!(named_graph("c5").unwrap().m(), 5);
        assert_eq!(named_graph("petersen").unwrap().m(), 15);
        assert!(named_graph("c2").is_none());
        assert!(named_graph("wheel5").is_none());
    }
}
