use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::graph::{self, ProductVertex, SimpleGraph};
use crate::DegreePoly;

use super::{degree_polynomial, formula, graph_degree_polynomial, DpError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OpKind {
    Join,
    Cartesian,
    Tensor,
    Lexicographic,
    Complement,
}

impl OpKind {
    pub const ALL: [OpKind; 5] =
        [OpKind::Join, OpKind::Cartesian, OpKind::Tensor, OpKind::Lexicographic, OpKind::Complement];

    pub fn is_binary(self) -> bool {
        self != OpKind::Complement
    }

    pub fn name(self) -> &'static str {
        match self {
            OpKind::Join => "join",
            OpKind::Cartesian => "cartesian",
            OpKind::Tensor => "tensor",
            OpKind::Lexicographic => "lexicographic",
            OpKind::Complement => "complement",
        }
    }
}

impl fmt::Display for OpKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OpKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        OpKind::ALL
            .into_iter()
            .find(|k| k.name() == s.to_ascii_lowercase())
            .ok_or_else(|| format!("unknown operation `{s}`"))
    }
}

fn second(op: OpKind, h: Option<&SimpleGraph>) -> Result<&SimpleGraph, DpError> {
    h.ok_or(DpError::MissingOperand(op))
}

/// Builds the result graph of `op`. `h` is ignored for the complement.
pub fn apply_operation(op: OpKind, g: &SimpleGraph, h: Option<&SimpleGraph>) -> Result<SimpleGraph, DpError> {
    Ok(match op {
        OpKind::Join => graph::join(g, second(op, h)?),
        OpKind::Cartesian => graph::cartesian(g, second(op, h)?),
        OpKind::Tensor => graph::tensor(g, second(op, h)?),
        OpKind::Lexicographic => graph::lexicographic(g, second(op, h)?),
        OpKind::Complement => graph::complement(g),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexCheck {
    pub index: usize,
    pub label: String,
    /// Computed on the built graph.
    pub direct: DegreePoly,
    /// Computed from factor data through the closed form.
    pub formula: DegreePoly,
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OperationCheck {
    pub op: OpKind,
    pub vertices: Vec<VertexCheck>,
    pub mismatches: usize,
    pub pass: bool,
}

impl OperationCheck {
    pub fn checked(&self) -> usize {
        self.vertices.len()
    }

    pub fn matched(&self) -> usize {
        self.vertices.len() - self.mismatches
    }
}

/// Computes every vertex's degree polynomial of the result of `op` twice:
/// directly on the built graph and through the closed form from factor
/// polynomials, degrees and orders. Exact equality decides.
pub fn verify_operation(op: OpKind, g: &SimpleGraph, h: Option<&SimpleGraph>) -> Result<OperationCheck, DpError> {
    let result = apply_operation(op, g, h)?;
    let dp_of = |gr: &SimpleGraph| -> Vec<DegreePoly> {
        (0..gr.order()).map(|v| degree_polynomial(gr, v).expect("index in range")).collect()
    };
    let dp_g = dp_of(g);
    let n1 = g.order() as u64;

    let predicted: Vec<DegreePoly> = match op {
        OpKind::Complement => {
            let whole = graph_degree_polynomial(g);
            (0..g.order())
                .map(|u| formula::formula_complement(&whole, &dp_g[u], g.degree(u) as u64, n1))
                .collect::<Result<_, _>>()?
        }
        OpKind::Join => {
            let h = second(op, h)?;
            let dp_h = dp_of(h);
            let n2 = h.order() as u64;
            let (whole_g, whole_h) = (graph_degree_polynomial(g), graph_degree_polynomial(h));
            let left = dp_g.iter().map(|d| formula::formula_join(d, &whole_h, n1, n2));
            let right = dp_h.iter().map(|d| formula::formula_join(d, &whole_g, n2, n1));
            left.chain(right).collect::<Result<_, _>>()?
        }
        OpKind::Cartesian | OpKind::Tensor | OpKind::Lexicographic => {
            let h = second(op, h)?;
            let dp_h = dp_of(h);
            let n2 = h.order();
            let whole_h = graph_degree_polynomial(h);
            (0..result.order())
                .map(|idx| {
                    let ProductVertex { first: u, second: v } = ProductVertex::from_index(idx, n2);
                    let (du, dv) = (g.degree(u) as u64, h.degree(v) as u64);
                    match op {
                        OpKind::Cartesian => formula::formula_cartesian(&dp_g[u], &dp_h[v], du, dv),
                        OpKind::Tensor => Ok(formula::formula_tensor(&dp_g[u], &dp_h[v])),
                        _ => formula::formula_lexicographic(&dp_g[u], &dp_h[v], &whole_h, du, n2 as u64),
                    }
                })
                .collect::<Result<_, _>>()?
        }
    };

    let vertices: Vec<VertexCheck> = predicted
        .into_iter()
        .enumerate()
        .map(|(index, formula)| {
            let direct = degree_polynomial(&result, index).expect("index in range");
            VertexCheck {
                index,
                label: result.label(index).to_string(),
                matches: direct == formula,
                direct,
                formula,
            }
        })
        .collect();
    let mismatches = vertices.iter().filter(|v| !v.matches).count();
    Ok(OperationCheck { op, pass: mismatches == 0, mismatches, vertices })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{from_edge_list, Family};

    #[test]
    fn examples() {
        let p3 = Family::Path(3).graph().unwrap();
        let c4 = Family::Cycle(4).graph().unwrap();
        let r = verify_operation(OpKind::Join, &p3, Some(&c4)).unwrap();
        assert!(r.pass);
        assert_eq!(r.checked(), 7);

        let g = from_edge_list("a b\na c\nb c\nc d").unwrap().graph;
        let r = verify_operation(OpKind::Complement, &g, None).unwrap();
        assert!(r.pass);
        assert_eq!(r.checked(), 4);

        let k2 = Family::Complete(2).graph().unwrap();
        let r = verify_operation(OpKind::Tensor, &k2, Some(&k2)).unwrap();
        assert!(r.pass);
        assert_eq!(r.checked(), 4);
    }

    #[test]
    fn missing_operand() {
        let k2 = Family::Complete(2).graph().unwrap();
        assert_eq!(
            verify_operation(OpKind::Join, &k2, None).unwrap_err(),
            DpError::MissingOperand(OpKind::Join)
        );
    }

    #[test]
    fn op_names() {
        for op in OpKind::ALL {
            assert_eq!(op.name().parse::<OpKind>().unwrap(), op);
        }
        assert!("strong".parse::<OpKind>().is_err());
    }
}
