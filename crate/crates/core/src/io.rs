//! JSON and text formats: graph input, ideal and basis serialization,
//! Betti tables, depth CSV and a neutral computer-algebra export.
//!
//! Graph input comes in three shapes:
//!
//! ```json
//! {"n": 2, "edges": [["x1", "y1"], ["x1", "x2"], [2, 4]]}
//! {"base_n": 2, "base_edges": [[1, 2]], "whisker": true}
//! {"vertices": 5, "edges": [[1, 2], [2, 3]]}
//! ```
//!
//! Labeled vertices are named `x1..xn, y1..yn` or numbered 1-based in that
//! order. Instead of `edges` a graph may give `adjacency`, one neighbor list
//! per vertex, which must be symmetric.

use crate::betti::BettiTable;
use crate::depth::DepthTable;
use crate::error::{Error, Result};
use crate::graph::{whisker, Graph};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, Ring};
use crate::rees::{ExtRing, GroebnerBasis};
use serde_json::{json, Map, Value};
use std::path::Path;

pub const GRAPH_SCHEMA: &str = "covertool.graph/1";
pub const IDEAL_SCHEMA: &str = "covertool.ideal/1";
pub const BASIS_SCHEMA: &str = "covertool.basis/1";
pub const BETTI_SCHEMA: &str = "covertool.betti/1";
pub const DEPTH_SCHEMA: &str = "covertool.depth/1";

fn parse_err(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse { location: location.into(), message: message.into() }
}

/// Reads a file, or standard input for `None` or `-`.
pub fn read_input(path: Option<&Path>) -> Result<String> {
    match path {
        Some(p) if p != Path::new("-") => {
            std::fs::read_to_string(p).map_err(|e| parse_err(p.display().to_string(), e.to_string()))
        }
        _ => {
            let mut s = String::new();
            std::io::Read::read_to_string(&mut std::io::stdin(), &mut s)
                .map_err(|e| parse_err("stdin", e.to_string()))?;
            Ok(s)
        }
    }
}

pub fn write_output(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| parse_err(path.display().to_string(), e.to_string()))
}

fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text)
        .map_err(|e| parse_err(format!("line {}, column {}", e.line(), e.column()), e.to_string()))
}

/// A parsed input document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Graph(Graph),
    Ideal(MonomialIdeal),
}

/// Graph or ideal, told apart by the presence of `generators`.
pub fn parse_input(text: &str) -> Result<Input> {
    let v = parse_json(text)?;
    if v.get("generators").is_some() {
        ideal_from_json(&v).map(Input::Ideal)
    } else {
        graph_from_json(&v).map(Input::Graph)
    }
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    graph_from_json(&parse_json(text)?)
}

fn field_usize(obj: &Map<String, Value>, key: &str) -> Result<Option<usize>> {
    match obj.get(key) {
        None => Ok(None),
        Some(v) => v
            .as_u64()
            .map(|x| Some(x as usize))
            .ok_or_else(|| parse_err(key, "expected a nonnegative integer")),
    }
}

/// Resolves a vertex reference to a 0-based id.
fn vertex(v: &Value, names: Option<&Ring>, count: usize, loc: &str) -> Result<usize> {
    if let Some(i) = v.as_u64() {
        let i = i as usize;
        if i == 0 || i > count {
            return Err(parse_err(loc, format!("vertex {i} outside 1..{count}")));
        }
        return Ok(i - 1);
    }
    if let (Some(s), Some(ring)) = (v.as_str(), names) {
        return ring.var_index(s).ok_or_else(|| parse_err(loc, format!("unknown vertex name {s:?}")));
    }
    Err(parse_err(loc, "expected a 1-based index or a vertex name"))
}

fn edge_list(
    obj: &Map<String, Value>,
    key: &str,
    names: Option<&Ring>,
    count: usize,
) -> Result<Vec<(usize, usize)>> {
    if let Some(adj) = obj.get("adjacency") {
        return adjacency(adj, names, count);
    }
    let Some(list) = obj.get(key) else { return Ok(Vec::new()) };
    let list = list.as_array().ok_or_else(|| parse_err(key, "expected an array of edges"))?;
    let mut out = Vec::with_capacity(list.len());
    for (i, e) in list.iter().enumerate() {
        let loc = format!("{key}[{i}]");
        let pair = e.as_array().filter(|p| p.len() == 2).ok_or_else(|| parse_err(&loc, "expected a two-element array"))?;
        let a = vertex(&pair[0], names, count, &format!("{loc}[0]"))?;
        let b = vertex(&pair[1], names, count, &format!("{loc}[1]"))?;
        if a == b {
            return Err(parse_err(loc, format!("loop at vertex {}", a + 1)));
        }
        out.push((a, b));
    }
    Ok(out)
}

fn adjacency(adj: &Value, names: Option<&Ring>, count: usize) -> Result<Vec<(usize, usize)>> {
    let rows = adj.as_array().ok_or_else(|| parse_err("adjacency", "expected an array of neighbor lists"))?;
    if rows.len() != count {
        return Err(parse_err("adjacency", format!("expected {count} neighbor lists, found {}", rows.len())));
    }
    let mut sets = vec![Vec::new(); count];
    for (a, row) in rows.iter().enumerate() {
        let loc = format!("adjacency[{a}]");
        let row = row.as_array().ok_or_else(|| parse_err(&loc, "expected an array"))?;
        for (j, v) in row.iter().enumerate() {
            let b = vertex(v, names, count, &format!("{loc}[{j}]"))?;
            if a == b {
                return Err(parse_err(&loc, format!("loop at vertex {}", a + 1)));
            }
            sets[a].push(b);
        }
    }
    let mut edges = Vec::new();
    for (a, nbrs) in sets.iter().enumerate() {
        for &b in nbrs {
            if !sets[b].contains(&a) {
                return Err(parse_err(
                    format!("adjacency[{a}]"),
                    format!("asymmetric: {} lists {} but not conversely", a + 1, b + 1),
                ));
            }
            if a < b {
                edges.push((a, b));
            }
        }
    }
    Ok(edges)
}

pub fn graph_from_json(v: &Value) -> Result<Graph> {
    let obj = v.as_object().ok_or_else(|| parse_err("$", "expected a JSON object"))?;
    let wrap = |e: Error| match e {
        Error::Parse { .. } => e,
        other => parse_err("$", other.to_string()),
    };
    if let Some(n) = field_usize(obj, "n")? {
        let ring = Ring::paired(n);
        let edges = edge_list(obj, "edges", Some(&ring), 2 * n)?;
        return Graph::labeled(n, &edges).map_err(wrap);
    }
    if let Some(n) = field_usize(obj, "base_n")? {
        let names = Ring::with_names((1..=n).map(|i| format!("x{i}")).collect());
        let edges = edge_list(obj, "base_edges", Some(&names), n)?;
        let base = Graph::new(n, &edges).map_err(wrap)?;
        return match obj.get("whisker") {
            Some(Value::Bool(true)) => Ok(whisker(&base)),
            Some(Value::Bool(false)) | None => Ok(base),
            Some(_) => Err(parse_err("whisker", "expected a boolean")),
        };
    }
    if let Some(n) = field_usize(obj, "vertices")? {
        let edges = edge_list(obj, "edges", None, n)?;
        return Graph::new(n, &edges).map_err(wrap);
    }
    Err(parse_err("$", "expected one of the fields n, base_n or vertices"))
}

pub fn graph_to_json(g: &Graph) -> Value {
    let edges: Vec<Value> =
        g.edges().iter().map(|&(a, b)| json!([g.vertex_name(a), g.vertex_name(b)])).collect();
    match g.pairs() {
        Some(n) => json!({"schema": GRAPH_SCHEMA, "n": n, "edges": edges}),
        None => {
            let edges: Vec<Value> = g.edges().iter().map(|&(a, b)| json!([a + 1, b + 1])).collect();
            json!({"schema": GRAPH_SCHEMA, "vertices": g.n_vertices(), "edges": edges})
        }
    }
}

pub fn ideal_to_json(i: &MonomialIdeal) -> Value {
    json!({
        "schema": IDEAL_SCHEMA,
        "variables": i.ring().names(),
        "generators": i.gens(),
        "text": i.gens().iter().map(|g| i.ring().format(g)).collect::<Vec<_>>(),
    })
}

/// Reads `variables` (names) and `generators` (exponent vectors or monomial strings).
pub fn ideal_from_json(v: &Value) -> Result<MonomialIdeal> {
    let names: Vec<String> = v
        .get("variables")
        .and_then(Value::as_array)
        .ok_or_else(|| parse_err("variables", "expected an array of names"))?
        .iter()
        .enumerate()
        .map(|(i, s)| s.as_str().map(str::to_string).ok_or_else(|| parse_err(format!("variables[{i}]"), "expected a string")))
        .collect::<Result<_>>()?;
    let ring = Ring::with_names(names);
    let gens_v = v
        .get("generators")
        .and_then(Value::as_array)
        .ok_or_else(|| parse_err("generators", "expected an array"))?;
    let mut gens = Vec::with_capacity(gens_v.len());
    for (i, g) in gens_v.iter().enumerate() {
        let loc = format!("generators[{i}]");
        let m = match g {
            Value::String(s) => ring.parse_monomial(s).map_err(|e| parse_err(&loc, e.to_string()))?,
            Value::Array(_) => {
                let exps: Vec<u16> = serde_json::from_value(g.clone()).map_err(|e| parse_err(&loc, e.to_string()))?;
                if exps.len() != ring.nvars() {
                    return Err(parse_err(&loc, format!("expected {} exponents", ring.nvars())));
                }
                Monomial(exps)
            }
            _ => return Err(parse_err(&loc, "expected an exponent array or a monomial string")),
        };
        gens.push(m);
    }
    MonomialIdeal::new(ring, gens)
}

pub fn basis_to_json(ring: &ExtRing, gb: &GroebnerBasis) -> Value {
    let elements: Vec<Value> = gb
        .elements
        .iter()
        .map(|b| json!({"lead": b.lead, "trail": b.trail, "text": b.format(ring)}))
        .collect();
    json!({
        "schema": BASIS_SCHEMA,
        "variables": ring.names(),
        "generators": ring.tags.iter().map(|t| ring.base.format(t)).collect::<Vec<_>>(),
        "reduced": gb.reduced,
        "elements": elements,
    })
}

pub fn betti_to_json(table: &BettiTable, ring: &Ring) -> Value {
    json!({"schema": BETTI_SCHEMA, "variables": ring.names(), "betti": table.to_json(ring)})
}

pub fn depth_to_csv(table: &DepthTable) -> String {
    format!("# schema: {DEPTH_SCHEMA}\n{}", table.to_csv())
}

fn cas_block(vars: &[String], name: &str, items: &[String]) -> String {
    let mut s = format!("ring R = QQ[{}];\n", vars.join(", "));
    if items.is_empty() {
        s.push_str(&format!("{name} = ideal(0);\n"));
        return s;
    }
    s.push_str(&format!("{name} = ideal(\n"));
    for (i, it) in items.iter().enumerate() {
        let sep = if i + 1 < items.len() { "," } else { "" };
        s.push_str(&format!("  {it}{sep}\n"));
    }
    s.push_str(");\n");
    s
}

/// Ring and ideal declarations, one generator per line.
pub fn export_cas_ideal(i: &MonomialIdeal) -> String {
    let items: Vec<String> = i.gens().iter().map(|g| i.ring().format(g)).collect();
    cas_block(i.ring().names(), "I", &items)
}

/// Ring and ideal declarations for a binomial basis, one element per line.
pub fn export_cas_basis(ring: &ExtRing, gb: &GroebnerBasis) -> String {
    let items: Vec<String> = gb.elements.iter().map(|b| b.format(ring)).collect();
    cas_block(&ring.names(), "G", &items)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caps::Caps;
    use crate::fixtures::{fix1, fix2};
    use crate::ideal::cover_ideal;

    #[test]
    fn whisker_shape_gives_fix1() {
        let g = parse_graph(r#"{"base_n":2,"base_edges":[[1,2]],"whisker":true}"#).unwrap();
        assert_eq!(g, fix1());
    }

    #[test]
    fn labeled_names_and_indices() {
        let g = parse_graph(r#"{"n":2,"edges":[["x1","x2"],["x1","y1"],[2,4]]}"#).unwrap();
        assert_eq!(g, fix1());
        let text = graph_to_json(&fix2()).to_string();
        assert_eq!(parse_graph(&text).unwrap(), fix2());
    }

    #[test]
    fn diagnostics() {
        let loop_err = parse_graph(r#"{"n":2,"edges":[[1,1]]}"#).unwrap_err();
        assert!(matches!(&loop_err, Error::Parse { location, message } if location == "edges[0]" && message.contains("loop")));
        let range = parse_graph(r#"{"n":1,"edges":[[1,3]]}"#).unwrap_err();
        assert!(matches!(&range, Error::Parse { location, .. } if location == "edges[0][1]"));
        let syntax = parse_graph("{\n\"n\": 2,\n\"edges\": [[1,2]\n}").unwrap_err();
        assert!(matches!(&syntax, Error::Parse { location, .. } if location.starts_with("line 4")));
        let asym = parse_graph(r#"{"vertices":2,"adjacency":[[2],[]]}"#).unwrap_err();
        assert!(matches!(&asym, Error::Parse { message, .. } if message.contains("asymmetric")));
    }

    #[test]
    fn ideal_round_trip() {
        let i = cover_ideal(&fix1(), &Caps::default()).unwrap().ideal;
        let back = ideal_from_json(&ideal_to_json(&i)).unwrap();
        assert_eq!(back.gens(), i.gens());
        let from_text = parse_input(r#"{"variables":["a","b"],"generators":["a^2","a*b"]}"#).unwrap();
        assert!(matches!(from_text, Input::Ideal(ref j) if j.len() == 2));
    }

    #[test]
    fn cas_export() {
        let i = cover_ideal(&fix1(), &Caps::default()).unwrap().ideal;
        let text = export_cas_ideal(&i);
        assert_eq!(text.lines().filter(|l| l.starts_with("  ")).count(), 3);
        assert!(text.starts_with("ring R = QQ[x1, x2, y1, y2];\n"));
        let zero = MonomialIdeal::zero(Ring::paired(1));
        assert_eq!(export_cas_ideal(&zero), "ring R = QQ[x1, y1];\nI = ideal(0);\n");
    }
}
