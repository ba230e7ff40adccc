use std::collections::HashMap;

use super::{GraphError, SimpleGraph};

/// Result of reading an edge list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeList {
    pub graph: SimpleGraph,
    /// Edges that appeared more than once (collapsed), as label pairs.
    pub duplicate_edges: Vec<(String, String)>,
}

/// Reads `u v` lines. A single-token line declares a vertex, `#` starts a
/// comment. Vertices are numbered in order of first appearance.
pub fn from_edge_list(text: &str) -> Result<EdgeList, GraphError> {
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();

    let mut intern = |name: &str, labels: &mut Vec<String>| -> usize {
        *index.entry(name.to_string()).or_insert_with(|| {
            labels.push(name.to_string());
            labels.len() - 1
        })
    };

    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            [] => {}
            [v] => {
                intern(v, &mut labels);
            }
            [u, v] => {
                if u == v {
                    return Err(GraphError::SelfLoop(u.to_string()));
                }
                let a = intern(u, &mut labels);
                let b = intern(v, &mut labels);
                pairs.push((a, b));
            }
            _ => {
                return Err(GraphError::Syntax {
                    line: lineno + 1,
                    msg: format!("expected `u v` or a single vertex, found {} tokens", tokens.len()),
                })
            }
        }
    }
    if labels.is_empty() {
        return Err(GraphError::EmptyInput);
    }

    let mut graph = SimpleGraph::empty(labels.len()).with_labels(labels)?;
    let mut duplicate_edges = Vec::new();
    for (a, b) in pairs {
        if !graph.add_edge(a, b)? {
            duplicate_edges.push((graph.label(a).to_string(), graph.label(b).to_string()));
        }
    }
    Ok(EdgeList { graph, duplicate_edges })
}
