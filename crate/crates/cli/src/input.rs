use std::fs;
use std::path::Path;

use degpoly_core::dp::PolySequence;
use degpoly_core::graph::{from_edge_list, Family, GraphError, SimpleGraph};
use degpoly_core::realize::parse_sequence;

use crate::CliError;

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn graph_error(src: &str, e: GraphError) -> CliError {
    match e {
        GraphError::Syntax { .. } => CliError::Parse(format!("{src}: {e}")),
        other => CliError::Input(format!("{src}: {other}")),
    }
}

/// A graph argument: an edge-list file, a family literal (`K4`, `P3`,
/// `C5`, `K3,2`, `E4` for the empty graph), or an inline edge list with
/// `;` between lines.
pub fn load_graph(arg: &str) -> Result<SimpleGraph, CliError> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = read_file(path)?;
        return from_edge_list(&text).map(|e| e.graph).map_err(|e| graph_error(arg, e));
    }
    if let Some(n) = arg.strip_prefix(['E', 'e']).and_then(|t| t.parse::<usize>().ok()) {
        return Ok(SimpleGraph::empty(n));
    }
    if let Ok(fam) = arg.parse::<Family>() {
        return fam.graph().map_err(|e| graph_error(arg, e));
    }
    if arg.contains(char::is_whitespace) {
        let text = arg.replace(';', "\n");
        return from_edge_list(&text).map(|e| e.graph).map_err(|e| graph_error("inline graph", e));
    }
    Err(CliError::Input(format!("`{arg}` is not a file, family literal or inline edge list")))
}

/// A sequence argument: a file in either sequence layout, or an inline
/// comma-separated list. Returns the sorted sequence and whether the input
/// order had to change.
pub fn load_sequence(arg: &str) -> Result<(PolySequence, bool), CliError> {
    let path = Path::new(arg);
    let (src, text) = if path.is_file() { (arg, read_file(path)?) } else { ("inline sequence", arg.to_string()) };
    let polys = parse_sequence(&text).map_err(|e| CliError::Parse(format!("{src}: {e}")))?;
    PolySequence::from_presented(polys).map_err(|e| CliError::Input(format!("{src}: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_arguments() {
        assert_eq!(load_graph("K4").unwrap().size(), 6);
        assert_eq!(load_graph("K3,2").unwrap().size(), 6);
        assert_eq!(load_graph("E3").unwrap().order(), 3);
        let g = load_graph("a b; b c").unwrap();
        assert_eq!((g.order(), g.size()), (3, 2));
        assert!(matches!(load_graph("C2"), Err(CliError::Input(_))));
        assert!(matches!(load_graph("nothing"), Err(CliError::Input(_))));
    }

    #[test]
    fn sequence_arguments() {
        let (q, reordered) = load_sequence("x, 2x").unwrap();
        assert_eq!(q.to_string(), "2x, x");
        assert!(reordered);
        assert!(matches!(load_sequence("x, y"), Err(CliError::Parse(_))));
        assert!(matches!(load_sequence("0"), Err(CliError::Input(_))));
    }
}
